//! Monomial conjugacy: invariant fingerprints and exhaustive conjugator search.

use super::character::monomial_trace;
use super::closure::ClosedGroup;
use crate::arith::lcm;
use crate::cyclotomic::{reduce_int, DenseMatrix, Scalar};
use crate::error::{Error, Result};
use crate::monomial::{DiagExponents, MonomialElement, Permutation};
use itertools::Itertools;
use std::collections::{BTreeMap, HashMap, HashSet};

/// `GL`-conjugacy invariants that are cheap to compare.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub order: usize,
    pub center_order: usize,
    pub exponent: u64,
    pub order_profile: Vec<(u64, usize)>,
    pub det_profile: Vec<((u64, u64), usize)>,
}

fn histogram<K: Ord>(it: impl Iterator<Item = K>) -> Vec<(K, usize)> {
    let mut map = BTreeMap::new();
    for k in it {
        *map.entry(k).or_insert(0) += 1;
    }
    map.into_iter().collect()
}

impl Fingerprint {
    pub fn of(g: &ClosedGroup<MonomialElement>) -> Self {
        let orders: Vec<u64> = g.elements().map(|x| x.order()).collect();
        Self {
            order: g.order(),
            center_order: g.center().len(),
            exponent: orders.iter().fold(1, |acc, &o| lcm(acc, o)),
            order_profile: histogram(orders.into_iter()),
            det_profile: histogram(g.elements().map(|x| x.det_turn())),
        }
    }
}

/// The trace of `x` in power-basis coordinates of ℚ(ζ_L), `M | L`.
pub fn trace_key(x: &MonomialElement, l: u64) -> Vec<i64> {
    let f = (l / x.modulus()) as usize;
    let mut v = vec![0i64; l as usize];
    for (k, c) in monomial_trace(x).into_iter().enumerate() {
        v[k * f] = c;
    }
    reduce_int(&v, l)
}

/// Multiset of traces in power-basis coordinates of ℚ(ζ_L), `M | L`.
pub fn trace_profile(g: &ClosedGroup<MonomialElement>, l: u64) -> Result<Vec<(Vec<i64>, usize)>> {
    let m = g.modulus();
    if !l.is_multiple_of(m) {
        return Err(Error::ModulusMismatch { from: m, to: l });
    }
    Ok(histogram(g.elements().map(|x| trace_key(x, l))))
}

/// Multiset of traces of a dense group on modulus `L`: a `GL`-conjugacy invariant.
pub fn dense_trace_profile<T: Scalar>(g: &ClosedGroup<DenseMatrix<T>>, l: u64) -> Result<HashMap<Vec<T>, usize>> {
    let mut map = HashMap::new();
    for x in g.elements() {
        *map.entry(x.trace().change_modulus(l)?.coeffs().to_vec()).or_insert(0) += 1;
    }
    Ok(map)
}

/// Order profile of any closed group.
pub fn order_profile<E: super::closure::GroupElement>(g: &ClosedGroup<E>) -> Vec<(usize, usize)> {
    histogram(g.elements().map(|x| {
        let mut k = 1;
        let mut y = x.clone();
        while &y != g.identity() {
            y = y.op(x);
            k += 1;
        }
        k
    }))
}

/// True if traces or element orders separate two dense groups, which are then not
/// `GL`-conjugate.
pub fn dense_invariants_differ<T: Scalar>(
    g: &ClosedGroup<DenseMatrix<T>>,
    h: &ClosedGroup<DenseMatrix<T>>,
) -> Result<bool> {
    if g.order() != h.order() || order_profile(g) != order_profile(h) {
        return Ok(true);
    }
    let m = |x: &ClosedGroup<DenseMatrix<T>>| x.generators[0].modulus();
    let l = lcm(m(g), m(h));
    Ok(dense_trace_profile(g, l)? != dense_trace_profile(h, l)?)
}

/// True unless some invariant separates `g` and `h`.
pub fn fingerprints_match(
    g: &ClosedGroup<MonomialElement>,
    fg: &Fingerprint,
    h: &ClosedGroup<MonomialElement>,
    fh: &Fingerprint,
) -> Result<bool> {
    if fg != fh || g.degree() != h.degree() {
        return Ok(false);
    }
    let l = lcm(g.modulus(), h.modulus());
    Ok(trace_profile(g, l)? == trace_profile(h, l)?)
}

fn lifted(g: &ClosedGroup<MonomialElement>, l: u64) -> Result<HashSet<MonomialElement>> {
    g.elements().map(|x| x.lift(l)).collect()
}

/// Searches for a monomial `x` with `x⁻¹ G x = H`.
///
/// The permutation part of `x` ranges over `Sym(p)`; its diagonal part is solved from a
/// full-cycle element of `G`, so the search is exhaustive over monomial conjugators up to
/// scalars. `budget` bounds the number of candidate conjugators tried.
pub fn conjugacy_search(
    g: &ClosedGroup<MonomialElement>,
    h: &ClosedGroup<MonomialElement>,
    budget: usize,
) -> Result<Option<MonomialElement>> {
    if g.order() != h.order() || g.degree() != h.degree() {
        return Ok(None);
    }
    let p = g.degree();
    let l = lcm(g.modulus(), h.modulus());
    let hset = lifted(h, l)?;
    let gens: Vec<MonomialElement> = g.generators.iter().map(|x| x.lift(l)).collect::<Result<_>>()?;
    let g0 = g
        .full_cycle_element()
        .ok_or_else(|| Error::Inconsistent("permutation part is not transitive".into()))?
        .lift(l)?;
    let mut buckets: HashMap<&Permutation, Vec<&MonomialElement>> = HashMap::new();
    for x in &hset {
        buckets.entry(&x.perm).or_default().push(x);
    }
    let hperms: HashSet<&Permutation> = buckets.keys().copied().collect();
    let sigma = &g0.perm;
    let mut tried = 0usize;
    for images in (0..p).permutations(p) {
        let pi = Permutation::from_images(&images.iter().map(|i| i + 1).collect::<Vec<_>>())?;
        let pm = MonomialElement::from_perm(pi.clone()).lift(l)?;
        if !gens.iter().all(|x| hperms.contains(&x.conjugate(&pm).perm)) {
            continue;
        }
        let pinv = pm.inv();
        let target = g0.conjugate(&pm).perm;
        for hx in buckets.get(&target).map(|v| v.as_slice()).unwrap_or(&[]) {
            tried += 1;
            if tried > budget {
                return Err(Error::BudgetExceeded { budget, what: "conjugacy search".into() });
            }
            let hp = hx.conjugate(&pinv);
            let (a, b) = (g0.diag.exps(), hp.diag.exps());
            let mut d = vec![0i64; p];
            let mut i = 0;
            loop {
                let j = sigma.apply(i);
                let next = d[i] + b[i] as i64 - a[i] as i64;
                if j == 0 {
                    if next.rem_euclid(l as i64) != 0 {
                        d.clear();
                    }
                    break;
                }
                d[j] = next;
                i = j;
            }
            if d.is_empty() {
                continue;
            }
            let x = MonomialElement { diag: DiagExponents::new(l, d), perm: pi.clone() };
            if gens.iter().all(|y| hset.contains(&y.conjugate(&x))) {
                return Ok(Some(x));
            }
        }
    }
    Ok(None)
}

/// Fingerprint comparison followed by the exhaustive search.
pub fn are_conjugate(
    g: &ClosedGroup<MonomialElement>,
    fg: &Fingerprint,
    h: &ClosedGroup<MonomialElement>,
    fh: &Fingerprint,
    budget: usize,
) -> Result<Option<MonomialElement>> {
    if !fingerprints_match(g, fg, h, fh)? {
        return Ok(None);
    }
    conjugacy_search(g, h, budget)
}

/// How two groups were found conjugate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Conjugacy {
    /// An explicit monomial conjugator `x` with `x⁻¹ G x = H`.
    Monomial(MonomialElement),
    /// A trace-preserving isomorphism exists, so the groups are `GL`-conjugate.
    Character,
}

/// `GL(p, ℂ)`-conjugacy: fingerprints, then the monomial search, then a trace-preserving
/// isomorphism search.
pub fn gl_conjugacy(
    g: &ClosedGroup<MonomialElement>,
    fg: &Fingerprint,
    h: &ClosedGroup<MonomialElement>,
    fh: &Fingerprint,
    budget: usize,
) -> Result<Option<Conjugacy>> {
    if !fingerprints_match(g, fg, h, fh)? {
        return Ok(None);
    }
    if let Some(x) = conjugacy_search(g, h, budget)? {
        return Ok(Some(Conjugacy::Monomial(x)));
    }
    let l = lcm(g.modulus(), h.modulus());
    let iso = super::isomorphism::character_isomorphic(g, h, |x| trace_key(x, l), budget)?;
    Ok(iso.then_some(Conjugacy::Character))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(gens: Vec<MonomialElement>) -> ClosedGroup<MonomialElement> {
        ClosedGroup::monomial(&gens, 100_000).unwrap()
    }

    #[test]
    fn dihedral_systems_are_gl_conjugate() {
        let s = MonomialElement::from_perm(Permutation::s(2));
        let cyc = group(vec![s.clone(), MonomialElement::from_diag(DiagExponents::new(4, vec![1, 3]))]);
        let klein = group(vec![s, MonomialElement::from_diag(DiagExponents::new(2, vec![1, 0]))]);
        let (fc, fk) = (Fingerprint::of(&cyc), Fingerprint::of(&klein));
        assert!(conjugacy_search(&cyc, &klein, 1000).unwrap().is_none());
        assert_eq!(gl_conjugacy(&cyc, &fc, &klein, &fk, 1000).unwrap(), Some(Conjugacy::Character));
    }

    #[test]
    fn self_conjugate() {
        let s = MonomialElement::from_perm(Permutation::s(3));
        let b = MonomialElement::from_diag(DiagExponents::b(3, 3, 3).unwrap());
        let g = group(vec![s, b]);
        let x = conjugacy_search(&g, &g, 1000).unwrap().unwrap();
        assert!(g.generators.iter().all(|y| g.contains(&y.conjugate(&x))));
    }

    #[test]
    fn diagonal_conjugate_found() {
        let s = MonomialElement::from_perm(Permutation::s(3));
        let b = MonomialElement::from_diag(DiagExponents::b(3, 3, 3).unwrap());
        let d = MonomialElement::from_diag(DiagExponents::new(9, vec![0, 1, 5]));
        let g = group(vec![s.clone(), b.clone()]);
        let h = group(vec![s.conjugate(&d), b.conjugate(&d)]);
        assert!(conjugacy_search(&g, &h, 10_000).unwrap().is_some());
    }
}
