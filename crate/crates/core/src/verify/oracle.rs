//! Exhaustive enumeration of irreducible subgroups of `D_M ⋊ Sym(p)` with solvable
//! transitive permutation part, up to `GL(p, ℂ)`-conjugacy.

use super::character::character_norm;
use super::closure::{Budget, ClosedGroup};
use super::conjugacy::{gl_conjugacy, Fingerprint};
use crate::arith::{divisors, factorial};
use crate::classify::{enumerate, Options};
use crate::error::{Error, Result};
use crate::monomial::{DiagExponents, MonomialElement, Permutation};
use crate::record::GroupLabel;
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap, HashSet};

/// One class found by the oracle.
#[derive(Clone, Debug)]
pub struct OracleClass {
    pub group: ClosedGroup<MonomialElement>,
    pub fingerprint: Fingerprint,
}

/// Diagonal exponent vectors of `D_M` in degree `p`, encoded base `M`.
struct Torus {
    p: usize,
    m: u64,
}

impl Torus {
    fn size(&self) -> u32 {
        self.m.pow(self.p as u32) as u32
    }

    fn decode(&self, mut code: u32) -> DiagExponents {
        let mut e = Vec::with_capacity(self.p);
        for _ in 0..self.p {
            e.push((code as u64 % self.m) as i64);
            code /= self.m as u32;
        }
        DiagExponents::new(self.m, e)
    }

    fn encode(&self, d: &DiagExponents) -> u32 {
        d.exps().iter().rev().fold(0u32, |acc, &e| acc * self.m as u32 + e as u32)
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        self.encode(&self.decode(a).add(&self.decode(b)))
    }

    /// The subgroup generated by `base` and `extra`, as a sorted code list.
    fn extend(&self, base: &[u32], extra: &[u32]) -> Vec<u32> {
        let mut set: HashSet<u32> = base.iter().copied().collect();
        let mut elems: Vec<u32> = base.to_vec();
        for &g in extra {
            if set.contains(&g) {
                continue;
            }
            let current = elems.clone();
            let mut mult = g;
            while !set.contains(&mult) {
                for &h in &current {
                    let x = self.add(h, mult);
                    if set.insert(x) {
                        elems.push(x);
                    }
                }
                mult = self.add(mult, g);
            }
        }
        elems.sort_unstable();
        elems
    }

    /// Minimal representatives of the cosets of `sub`.
    fn coset_reps(&self, sub: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.size() as usize];
        let mut reps = Vec::new();
        for c in 0..self.size() {
            if seen[c as usize] {
                continue;
            }
            reps.push(c);
            for &h in sub {
                seen[self.add(c, h) as usize] = true;
            }
        }
        reps
    }
}

/// A diagonal subgroup with a generating set.
#[derive(Clone, Debug)]
struct Sub {
    elems: Vec<u32>,
    gens: Vec<u32>,
}

/// All `⟨s⟩`-invariant subgroups of `D_M`.
fn invariant_subgroups(torus: &Torus) -> Vec<Sub> {
    let s = Permutation::s(torus.p);
    let orbit = |c: u32| -> Vec<u32> {
        let mut d = torus.decode(c);
        (0..torus.p)
            .map(|_| {
                let code = torus.encode(&d);
                d = d.act_perm(&s);
                code
            })
            .collect()
    };
    let zero = vec![0u32];
    let mut seen: HashSet<Vec<u32>> = HashSet::from([zero.clone()]);
    let mut out = vec![Sub { elems: zero, gens: Vec::new() }];
    let mut k = 0;
    while k < out.len() {
        let cur = out[k].clone();
        let inside: HashSet<u32> = cur.elems.iter().copied().collect();
        for c in 0..torus.size() {
            if inside.contains(&c) {
                continue;
            }
            let orb = orbit(c);
            let elems = torus.extend(&cur.elems, &orb);
            if seen.insert(elems.clone()) {
                let mut gens = cur.gens.clone();
                gens.extend(orb);
                out.push(Sub { elems, gens });
            }
        }
        k += 1;
    }
    out
}

fn diag_in(torus: &Torus, set: &HashSet<u32>, x: &MonomialElement) -> bool {
    x.perm.is_identity() && set.contains(&torus.encode(&x.diag))
}

/// Power of `base` whose permutation equals `target`, if any.
fn perm_power(base: &Permutation, target: &Permutation) -> Option<u64> {
    let mut cur = Permutation::identity(base.degree());
    for k in 0..base.order() {
        if &cur == target {
            return Some(k);
        }
        cur = cur.compose(base);
    }
    None
}

/// Candidate groups `⟨A, s·x, t^a·y⟩` with `G ∩ D = A`.
fn candidates(torus: &Torus, sub: &Sub, gamma_image: &[u32]) -> Vec<Vec<MonomialElement>> {
    let p = torus.p;
    let m = torus.m;
    let set: HashSet<u32> = sub.elems.iter().copied().collect();
    let a_gens: Vec<MonomialElement> = sub.gens.iter().map(|&c| MonomialElement::from_diag(torus.decode(c))).collect();
    let lift = |perm: Permutation, c: u32| MonomialElement { diag: torus.decode(c), perm };
    let normalizes = |g: &MonomialElement| a_gens.iter().all(|d| diag_in(torus, &set, &d.conjugate(g)));
    let x_reps = torus.coset_reps(&torus.extend(&sub.elems, gamma_image));
    let all_reps = torus.coset_reps(&sub.elems);
    let t = Permutation::t(p);
    let mut out = Vec::new();
    for &xc in &x_reps {
        let sx = lift(Permutation::s(p), xc);
        if !diag_in(torus, &set, &sx.pow(p as u64)) {
            continue;
        }
        let mut gens = vec![sx.clone()];
        gens.extend(a_gens.iter().cloned());
        out.push(gens);
        for a in divisors(p as u64 - 1) {
            if a == p as u64 - 1 {
                continue;
            }
            let ta = t.pow(a);
            if !normalizes(&MonomialElement::from_perm(ta.clone()).lift(m).unwrap()) {
                continue;
            }
            let k = ta.order();
            for &yc in &all_reps {
                let ty = lift(ta.clone(), yc);
                if !diag_in(torus, &set, &ty.pow(k)) {
                    continue;
                }
                let c = sx.conjugate(&ty);
                let e = match perm_power(&sx.perm, &c.perm) {
                    Some(e) => e,
                    None => continue,
                };
                if !diag_in(torus, &set, &c.mul(&sx.pow(e).inv())) {
                    continue;
                }
                let mut gens = vec![sx.clone(), ty];
                gens.extend(a_gens.iter().cloned());
                out.push(gens);
            }
        }
    }
    out
}

/// All irreducible subgroups of `D_M ⋊ N_{Sym(p)}(⟨s⟩)` whose permutation part contains `s`,
/// one per `GL(p, ℂ)`-conjugacy class, sorted by order.
pub fn oracle_enumerate(p: u64, m: u64, budget: Budget) -> Result<Vec<OracleClass>> {
    let size = m.checked_pow(p as u32).and_then(|x| x.checked_mul(factorial(p)));
    if size.is_none_or(|s| s > budget.monomial as u64) || p > 7 {
        return Err(Error::BudgetExceeded { budget: budget.monomial, what: format!("oracle for p={p}, M={m}") });
    }
    let torus = Torus { p: p as usize, m };
    let gamma_image: Vec<u32> = {
        let gens: Vec<u32> = (0..p as usize)
            .map(|i| {
                let mut e = vec![0i64; p as usize];
                e[i] = 1;
                torus.encode(&DiagExponents::new(m, e).gamma())
            })
            .collect();
        torus.extend(&[0], &gens)
    };
    let subs = invariant_subgroups(&torus);
    let groups: Vec<OracleClass> = subs
        .par_iter()
        .filter(|sub| sub.elems.iter().any(|&c| !torus.decode(c).is_scalar()))
        .map(|sub| -> Result<Vec<OracleClass>> {
            let mut found = Vec::new();
            let mut keys: HashSet<Vec<MonomialElement>> = HashSet::new();
            for gens in candidates(&torus, sub, &gamma_image) {
                let g = ClosedGroup::monomial(&gens, budget.monomial)?;
                let mut key: Vec<MonomialElement> = g.elements().cloned().collect();
                key.sort();
                if !keys.insert(key) || character_norm(&g)? != 1 {
                    continue;
                }
                let fingerprint = Fingerprint::of(&g);
                found.push(OracleClass { group: g, fingerprint });
            }
            Ok(found)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    dedup_classes(groups, budget)
}

fn dedup_classes(groups: Vec<OracleClass>, budget: Budget) -> Result<Vec<OracleClass>> {
    let mut buckets: BTreeMap<usize, HashMap<Fingerprint, Vec<OracleClass>>> = BTreeMap::new();
    for g in groups {
        buckets.entry(g.group.order()).or_default().entry(g.fingerprint.clone()).or_default().push(g);
    }
    let lists: Vec<Vec<OracleClass>> = buckets.into_values().flat_map(|b| b.into_values()).collect();
    let reduced = lists
        .into_par_iter()
        .map(|list| -> Result<Vec<OracleClass>> {
            let mut reps: Vec<OracleClass> = Vec::new();
            for g in list {
                let mut dup = false;
                for r in &reps {
                    if gl_conjugacy(&g.group, &g.fingerprint, &r.group, &r.fingerprint, budget.monomial)?.is_some() {
                        dup = true;
                        break;
                    }
                }
                if !dup {
                    reps.push(g);
                }
            }
            Ok(reps)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out: Vec<OracleClass> = reduced.into_iter().flatten().collect();
    out.sort_by_key(|c| c.group.order());
    Ok(out)
}

/// Comparison of the oracle with the lists at one order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleOrderReport {
    pub order: u64,
    /// Classes found by the oracle.
    pub oracle_classes: usize,
    /// Listed classes whose generators live on a modulus dividing `M`.
    pub listed_within_modulus: usize,
    /// Listed classes conjugate to some oracle class.
    pub matched: usize,
    pub discrepancies: Vec<String>,
}

/// Matches every oracle class to exactly one listed class and checks that every listed
/// class realizable over `μ_M` is found.
pub fn oracle_compare(p: u64, m: u64, budget: Budget) -> Result<Vec<OracleOrderReport>> {
    let classes = oracle_enumerate(p, m, budget)?;
    let opts = Options { compulsory_only: true, primitive: false };
    let top = m.pow(p as u32) * (p * (p - 1));
    let mut by_order: BTreeMap<u64, Vec<&OracleClass>> = BTreeMap::new();
    for c in &classes {
        by_order.entry(c.group.order() as u64).or_default().push(c);
    }
    for order in divisors(top) {
        by_order.entry(order).or_default();
    }
    by_order
        .into_par_iter()
        .map(|(order, found)| -> Result<OracleOrderReport> {
            let labels: Vec<GroupLabel> =
                enumerate(p, order, opts)?.into_iter().filter(|l| matches!(l, GroupLabel::Solvable(_))).collect();
            let mut listed = Vec::new();
            for l in &labels {
                let gens = l.monomial_generators()?;
                let g = ClosedGroup::monomial(&gens, budget.monomial)?;
                let fp = Fingerprint::of(&g);
                listed.push((l, m.is_multiple_of(gens[0].modulus()), g, fp));
            }
            let mut discrepancies = Vec::new();
            let mut hit = vec![0usize; listed.len()];
            for c in &found {
                let mut matches = Vec::new();
                for (i, (_, _, g, fp)) in listed.iter().enumerate() {
                    if gl_conjugacy(&c.group, &c.fingerprint, g, fp, budget.monomial)?.is_some() {
                        matches.push(i);
                    }
                }
                if matches.len() != 1 {
                    let names: Vec<String> = matches.iter().map(|&i| listed[i].0.to_string()).collect();
                    discrepancies.push(format!(
                        "oracle class generated by {:?} matches {} listed classes {names:?}",
                        c.group.generators.iter().map(|x| x.to_record()).collect::<Vec<_>>(),
                        matches.len()
                    ));
                }
                for i in matches {
                    hit[i] += 1;
                }
            }
            for (i, (l, within, _, _)) in listed.iter().enumerate() {
                if *within && hit[i] == 0 {
                    discrepancies.push(format!("listed class {l} not found by the oracle"));
                }
                if hit[i] > 1 {
                    discrepancies.push(format!("listed class {l} matches {} oracle classes", hit[i]));
                }
            }
            Ok(OracleOrderReport {
                order,
                oracle_classes: found.len(),
                listed_within_modulus: listed.iter().filter(|x| x.1).count(),
                matched: hit.iter().filter(|&&h| h > 0).count(),
                discrepancies,
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(|mut v| {
            v.retain(|r| r.oracle_classes > 0 || r.listed_within_modulus > 0);
            v
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_two_modulus_two() {
        let classes = oracle_enumerate(2, 2, Budget::default()).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].group.order(), 8);
    }

    #[test]
    fn invariant_subgroups_of_small_torus() {
        let torus = Torus { p: 2, m: 2 };
        assert_eq!(invariant_subgroups(&torus).len(), 3);
    }
}
