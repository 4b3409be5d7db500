//! `GL`-conjugacy of finite matrix groups via trace-preserving isomorphisms.
//!
//! Two finite subgroups of `GL(n, ℂ)` are conjugate exactly when some isomorphism
//! between them preserves traces.

use super::closure::{ClosedGroup, GroupElement};
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::hash::Hash;

type Signature<'a, E, K> = dyn Fn(&E) -> (usize, K) + 'a;

fn element_order<E: GroupElement>(x: &E, id: &E) -> usize {
    let mut k = 1;
    let mut y = x.clone();
    while &y != id {
        y = y.op(x);
        k += 1;
    }
    k
}

/// A generating set of `g` chosen greedily among elements of largest order.
pub fn small_generating_set<E: GroupElement>(g: &ClosedGroup<E>, budget: usize) -> Result<Vec<E>> {
    let id = g.identity().clone();
    let mut elems: Vec<(usize, usize, &E)> =
        g.elements().enumerate().map(|(i, x)| (element_order(x, &id), i, x)).collect();
    elems.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut gens: Vec<E> = Vec::new();
    let mut sub = super::closure::closure(&gens, id.clone(), budget)?;
    for (_, _, x) in elems {
        if sub.order() == g.order() {
            break;
        }
        if sub.contains(x) {
            continue;
        }
        gens.push(x.clone());
        sub = super::closure::closure(&gens, id.clone(), budget)?;
    }
    Ok(gens)
}

/// Extends `gens[i] ↦ imgs[i]` to a homomorphism of `⟨gens⟩`, returning the map if consistent.
fn extend<E: GroupElement>(gens: &[E], imgs: &[E], id_g: &E, id_h: &E) -> Option<HashMap<E, E>> {
    let mut map: HashMap<E, E> = HashMap::from([(id_g.clone(), id_h.clone())]);
    let mut queue = vec![id_g.clone()];
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k].clone();
        let fx = map[&x].clone();
        for (a, b) in gens.iter().zip(imgs) {
            let y = x.op(a);
            let fy = fx.op(b);
            match map.get(&y) {
                Some(v) if v != &fy => return None,
                Some(_) => {}
                None => {
                    map.insert(y.clone(), fy);
                    queue.push(y);
                }
            }
        }
        k += 1;
    }
    Some(map)
}

/// Searches for an isomorphism `g → h` preserving `key` (the trace), which certifies
/// `GL`-conjugacy. `budget` bounds the number of partial assignments tried.
pub fn character_isomorphic<E, K, F>(g: &ClosedGroup<E>, h: &ClosedGroup<E>, key: F, budget: usize) -> Result<bool>
where
    E: GroupElement,
    K: Eq + Hash + Clone,
    F: Fn(&E) -> K,
{
    if g.order() != h.order() {
        return Ok(false);
    }
    let id_g = g.identity().clone();
    let id_h = h.identity().clone();
    let gens = small_generating_set(g, g.order().max(1))?;
    if gens.is_empty() {
        return Ok(true);
    }
    let hkeys: HashMap<&E, (usize, K)> = h.elements().map(|y| (y, (element_order(y, &id_h), key(y)))).collect();
    let gsig = |x: &E| (element_order(x, &id_g), key(x));
    let hsig = |y: &E| hkeys[y].clone();
    let class_reps: Vec<E> = h.conjugacy_classes().into_iter().map(|c| c[0].clone()).collect();
    let all: Vec<E> = h.elements().cloned().collect();
    let mut tries = 0usize;
    let mut imgs: Vec<E> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn recurse<E: GroupElement, K: Eq + Clone>(
        depth: usize,
        gens: &[E],
        imgs: &mut Vec<E>,
        pools: (&[E], &[E]),
        sig: (&Signature<'_, E, K>, &Signature<'_, E, K>),
        ids: (&E, &E),
        order: usize,
        tries: &mut usize,
        budget: usize,
    ) -> Result<bool> {
        if depth == gens.len() {
            let map = match extend(gens, imgs, ids.0, ids.1) {
                Some(m) => m,
                None => return Ok(false),
            };
            if map.len() != order {
                return Ok(false);
            }
            let mut seen = std::collections::HashSet::with_capacity(order);
            return Ok(map.iter().all(|(x, y)| seen.insert(y.clone()) && (sig.0)(x) == (sig.1)(y)));
        }
        let pool = if depth == 0 { pools.0 } else { pools.1 };
        let want = (sig.0)(&gens[depth]);
        for y in pool {
            if (sig.1)(y) != want {
                continue;
            }
            let words_ok = (0..depth).all(|i| {
                let gx = gens[i].op(&gens[depth]);
                let hy = imgs[i].op(y);
                (sig.0)(&gx) == (sig.1)(&hy)
            });
            if !words_ok {
                continue;
            }
            *tries += 1;
            if *tries > budget {
                return Err(Error::BudgetExceeded { budget, what: "isomorphism search".into() });
            }
            imgs.push(y.clone());
            let partial = extend(&gens[..=depth], imgs, ids.0, ids.1)
                .is_some_and(|m| m.iter().all(|(a, b)| (sig.0)(a) == (sig.1)(b)));
            if partial && recurse(depth + 1, gens, imgs, pools, sig, ids, order, tries, budget)? {
                return Ok(true);
            }
            imgs.pop();
        }
        Ok(false)
    }
    recurse(0, &gens, &mut imgs, (&class_reps, &all), (&gsig, &hsig), (&id_g, &id_h), g.order(), &mut tries, budget)
}
