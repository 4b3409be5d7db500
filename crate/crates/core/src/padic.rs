//! Canonical factorization of `1 + x + ⋯ + x^{p−1}` modulo `q` and Hensel lifting to `qⁿ`.

use crate::arith::{inv_mod, is_prime, least_primitive_root, mult_order};
use crate::error::{Error, Result};
use num_bigint::BigUint;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

/// Integer polynomial with coefficients in `{0, …, modulus−1}`, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlatPoly {
    pub modulus: u64,
    pub coeffs: Vec<u64>,
}

impl FlatPoly {
    pub fn new(modulus: u64, coeffs: Vec<i128>) -> Self {
        let m = modulus as i128;
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c.rem_euclid(m) as u64).collect();
        while coeffs.len() > 1 && coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        Self { modulus, coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs == [0]
    }

    /// Reduction to a smaller modulus dividing this one.
    pub fn reduce(&self, modulus: u64) -> Self {
        Self::new(modulus, self.coeffs.iter().map(|&c| c as i128).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.modulus, mul_i(&self.as_i128(), &other.as_i128(), self.modulus as i128))
    }

    pub fn as_i128(&self) -> Vec<i128> {
        self.coeffs.iter().map(|&c| c as i128).collect()
    }

    pub fn as_i64(&self) -> Vec<i64> {
        self.coeffs.iter().map(|&c| c as i64).collect()
    }
}

impl fmt::Display for FlatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && k > 0 { String::new() } else { c.to_string() };
            terms.push(match k {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{k}"),
            });
        }
        if terms.is_empty() {
            terms.push("0".into());
        }
        write!(f, "{}", terms.join(" + "))
    }
}

fn mul_i(a: &[i128], b: &[i128], m: i128) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % m;
        }
    }
    out
}

/// Polynomials over 𝔽_q, constant term first, trimmed.
mod fq {
    pub type Poly = Vec<u64>;

    pub fn trim(mut a: Poly) -> Poly {
        while a.len() > 1 && a.last() == Some(&0) {
            a.pop();
        }
        if a.is_empty() {
            a.push(0);
        }
        a
    }

    pub fn is_zero(a: &Poly) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn deg(a: &Poly) -> usize {
        a.len() - 1
    }

    pub fn add(a: &Poly, b: &Poly, q: u64) -> Poly {
        let n = a.len().max(b.len());
        trim((0..n).map(|i| (a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)) % q).collect())
    }

    pub fn sub(a: &Poly, b: &Poly, q: u64) -> Poly {
        let n = a.len().max(b.len());
        trim((0..n).map(|i| (a.get(i).unwrap_or(&0) + q - b.get(i).unwrap_or(&0)) % q).collect())
    }

    pub fn mul(a: &Poly, b: &Poly, q: u64) -> Poly {
        let mut out = vec![0u128; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u128 * y as u128) % q as u128;
            }
        }
        trim(out.into_iter().map(|c| c as u64).collect())
    }

    fn inv(a: u64, q: u64) -> u64 {
        crate::arith::inv_mod(a, q).expect("unit")
    }

    pub fn divrem(a: &Poly, b: &Poly, q: u64) -> (Poly, Poly) {
        let db = deg(b);
        if deg(a) < db || is_zero(a) {
            return (vec![0], a.clone());
        }
        let li = inv(*b.last().unwrap(), q);
        let mut rem = a.clone();
        let mut quo = vec![0u64; a.len() - db];
        for k in (db..a.len()).rev() {
            let c = (rem[k] as u128 * li as u128 % q as u128) as u64;
            quo[k - db] = c;
            if c != 0 {
                for (i, &bi) in b.iter().enumerate() {
                    let sub = (c as u128 * bi as u128 % q as u128) as u64;
                    rem[k - db + i] = (rem[k - db + i] + q - sub) % q;
                }
            }
        }
        rem.truncate(db.max(1));
        (trim(quo), trim(rem))
    }

    pub fn rem(a: &Poly, b: &Poly, q: u64) -> Poly {
        divrem(a, b, q).1
    }

    pub fn monic(a: &Poly, q: u64) -> Poly {
        let li = inv(*a.last().unwrap(), q);
        a.iter().map(|&c| (c as u128 * li as u128 % q as u128) as u64).collect()
    }

    pub fn gcd(a: &Poly, b: &Poly, q: u64) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !is_zero(&y) {
            let r = rem(&x, &y, q);
            x = std::mem::replace(&mut y, r);
        }
        monic(&x, q)
    }

    /// `(s, t)` with `s·a + t·b = 1`, assuming coprime inputs.
    pub fn bezout(a: &Poly, b: &Poly, q: u64) -> (Poly, Poly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (vec![1u64], vec![0u64]);
        let (mut t0, mut t1) = (vec![0u64], vec![1u64]);
        while !is_zero(&r1) {
            let (qt, r) = divrem(&r0, &r1, q);
            let s2 = sub(&s0, &mul(&qt, &s1, q), q);
            let t2 = sub(&t0, &mul(&qt, &t1, q), q);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let li = inv(r0[0], q);
        let scale = |v: Poly| trim(v.into_iter().map(|c| (c as u128 * li as u128 % q as u128) as u64).collect());
        (scale(s0), scale(t0))
    }

    pub fn powmod(base: &Poly, e: &num_bigint::BigUint, modp: &Poly, q: u64) -> Poly {
        let mut acc = vec![1u64];
        let b = rem(base, modp, q);
        for i in (0..e.bits()).rev() {
            acc = rem(&mul(&acc, &acc, q), modp, q);
            if e.bit(i) {
                acc = rem(&mul(&acc, &b, q), modp, q);
            }
        }
        acc
    }

    /// `g(x^u)`.
    pub fn compose_power(g: &Poly, u: usize) -> Poly {
        let mut out = vec![0u64; (g.len() - 1) * u + 1];
        for (k, &c) in g.iter().enumerate() {
            out[k * u] = c;
        }
        out
    }
}

/// The `k`-th polynomial of degree `< n` over 𝔽_q in base-`q` digit order.
fn enumerated_poly(mut k: u64, n: usize, q: u64) -> fq::Poly {
    let mut v = Vec::with_capacity(n);
    for _ in 0..n {
        v.push(k % q);
        k /= q;
    }
    fq::trim(v)
}

/// Splits a product of distinct irreducibles of common degree `d` into its factors.
fn equal_degree_split(g: fq::Poly, d: usize, q: u64, out: &mut Vec<fq::Poly>) {
    if fq::deg(&g) == d {
        out.push(g);
        return;
    }
    let n = fq::deg(&g);
    let qd = BigUint::from(q).pow(d as u32);
    for k in q.. {
        let a = enumerated_poly(k, n, q);
        let h = if q == 2 {
            let mut acc = a.clone();
            let mut pw = a.clone();
            for _ in 1..d {
                pw = fq::rem(&fq::mul(&pw, &pw, q), &g, q);
                acc = fq::add(&acc, &pw, q);
            }
            acc
        } else {
            let e = (&qd - 1u32) / 2u32;
            fq::sub(&fq::powmod(&a, &e, &g, q), &vec![1], q)
        };
        if fq::is_zero(&h) {
            continue;
        }
        let r = fq::gcd(&g, &h, q);
        let dr = fq::deg(&r);
        if dr > 0 && dr < n {
            let other = fq::monic(&fq::divrem(&g, &r, q).0, q);
            equal_degree_split(r, d, q, out);
            equal_degree_split(other, d, q, out);
            return;
        }
    }
}

/// `(d, v)` with `d = ord_p(q)` and `v = (p−1)/d`.
pub fn order_data(p: u64, q: u64) -> (u64, u64) {
    if p == 2 {
        return (1, 1);
    }
    let d = mult_order(q % p, p);
    (d, (p - 1) / d)
}

fn check_primes(p: u64, q: u64) -> Result<()> {
    for x in [p, q] {
        if !is_prime(x) {
            return Err(Error::NotPrime(x));
        }
    }
    if p == q {
        return Err(Error::SamePrime(p));
    }
    Ok(())
}

/// Monic irreducible factors `g₁, …, g_v` of `f̄` over 𝔽_q in canonical order.
pub fn factor_f_mod_q(p: u64, q: u64) -> Result<Vec<FlatPoly>> {
    check_primes(p, q)?;
    let (d, v) = order_data(p, q);
    let fbar: fq::Poly = vec![1 % q; p as usize];
    let mut factors = Vec::new();
    equal_degree_split(fbar.clone(), d as usize, q, &mut factors);
    debug_assert_eq!(factors.len() as u64, v);
    let g1 = factors.iter().min_by(|a, b| a.iter().rev().cmp(b.iter().rev())).cloned().expect("at least one factor");
    let u = least_primitive_root(p) as usize;
    let mut chain = vec![g1];
    while (chain.len() as u64) < v {
        let last = chain.last().unwrap();
        let next = fq::gcd(&fq::compose_power(last, u), &fbar, q);
        if fq::deg(&next) != d as usize || chain.contains(&next) {
            return Err(Error::Inconsistent(format!("factor chain broke for p={p}, q={q}")));
        }
        chain.push(next);
    }
    Ok(chain.into_iter().map(|g| FlatPoly::new(q, g.into_iter().map(|c| c as i128).collect())).collect())
}

/// One lifting step from precision `qⁿ` to `q^{n+1}`.
///
/// Requires `f ≡ g·h (mod qⁿ)` and `a·g + b·h ≡ 1 (mod q)` with `g`, `h` monic.
pub fn hensel_step(
    f: &FlatPoly,
    g: &FlatPoly,
    h: &FlatPoly,
    a: &FlatPoly,
    b: &FlatPoly,
    q: u64,
    n: u32,
) -> Result<(FlatPoly, FlatPoly)> {
    let qn = q
        .checked_pow(n)
        .filter(|&x| x < (1 << 62) / q)
        .ok_or_else(|| Error::Hensel(format!("precision {q}^{n} too large")))?;
    if !g.is_monic() || !h.is_monic() {
        return Err(Error::Hensel("factors must be monic".into()));
    }
    let gh = mul_i(&g.as_i128(), &h.as_i128(), i128::MAX);
    let fz = f.as_i128();
    let len = gh.len().max(fz.len());
    let diff: Vec<i128> = (0..len).map(|i| fz.get(i).copied().unwrap_or(0) - gh.get(i).copied().unwrap_or(0)).collect();
    if diff.iter().any(|&x| x % qn as i128 != 0) {
        return Err(Error::Hensel(format!("f is not g·h modulo {qn}")));
    }
    let gq = fq::trim(g.reduce(q).coeffs);
    let hq = fq::trim(h.reduce(q).coeffs);
    let aq = fq::trim(a.reduce(q).coeffs);
    let bq = fq::trim(b.reduce(q).coeffs);
    let one = fq::add(&fq::mul(&aq, &gq, q), &fq::mul(&bq, &hq, q), q);
    if one != [1] {
        return Err(Error::Hensel("a·g + b·h is not 1 modulo q".into()));
    }
    let c: fq::Poly = fq::trim(diff.iter().map(|&x| (x / qn as i128).rem_euclid(q as i128) as u64).collect());
    let (w, v) = fq::divrem(&fq::mul(&bq, &c, q), &gq, q);
    let u = fq::add(&fq::mul(&aq, &c, q), &fq::mul(&w, &hq, q), q);
    let next = qn * q;
    let bump = |base: &FlatPoly, delta: &fq::Poly| {
        let mut coeffs = base.as_i128();
        coeffs.resize(coeffs.len().max(delta.len()), 0);
        for (i, &dc) in delta.iter().enumerate() {
            coeffs[i] += qn as i128 * dc as i128;
        }
        FlatPoly::new(next, coeffs)
    };
    Ok((bump(g, &v), bump(h, &u)))
}

/// Canonical `qⁿ`-adic factorization data of `1 + x + ⋯ + x^{p−1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorSystem {
    pub p: u64,
    pub q: u64,
    pub d: u64,
    pub v: u64,
    pub n: u32,
    /// `f_{1,n}, …, f_{v,n}`.
    pub factors: Vec<FlatPoly>,
    /// `f_{r′,n} = Π_{j≠r} f_{j,n}`.
    pub cofactors: Vec<FlatPoly>,
}

type SystemCache = RwLock<HashMap<(u64, u64, u32), Arc<FactorSystem>>>;

fn system_cache() -> &'static SystemCache {
    static CACHE: OnceLock<SystemCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Builds (and memoizes) the factor system to precision `qⁿ`.
pub fn build_factor_system(p: u64, q: u64, n: u32) -> Result<Arc<FactorSystem>> {
    if let Some(fs) = system_cache().read().unwrap().get(&(p, q, n)) {
        return Ok(fs.clone());
    }
    let fs = Arc::new(compute_factor_system(p, q, n)?);
    Ok(system_cache().write().unwrap().entry((p, q, n)).or_insert(fs).clone())
}

fn compute_factor_system(p: u64, q: u64, n: u32) -> Result<FactorSystem> {
    if n == 0 {
        return Err(Error::Hensel("precision must be positive".into()));
    }
    let gs = factor_f_mod_q(p, q)?;
    let (d, v) = order_data(p, q);
    let qn = q.checked_pow(n).ok_or_else(|| Error::Hensel("precision overflow".into()))?;
    let f_at = |m: u64| FlatPoly::new(m, vec![1; p as usize]);
    let product_except = |polys: &[FlatPoly], r: usize, m: u64| {
        polys
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != r)
            .fold(FlatPoly::new(m, vec![1]), |acc, (_, x)| acc.mul(&x.reduce(m)))
    };
    let mut factors = Vec::with_capacity(gs.len());
    for r in 0..gs.len() {
        let mut g = gs[r].clone();
        let mut h = product_except(&gs, r, q);
        let (a, b) = fq::bezout(&g.coeffs, &h.coeffs, q);
        let a = FlatPoly::new(q, a.into_iter().map(|c| c as i128).collect());
        let b = FlatPoly::new(q, b.into_iter().map(|c| c as i128).collect());
        for k in 1..n {
            let fk = f_at(q.pow(k + 1));
            (g, h) = hensel_step(&fk, &g, &h, &a, &b, q, k)?;
        }
        factors.push(g);
    }
    let cofactors = (0..factors.len()).map(|r| product_except(&factors, r, qn)).collect();
    Ok(FactorSystem { p, q, d, v, n, factors, cofactors })
}

/// Inverse of `a` mod `m` re-exported for callers building Bezout data by hand.
pub fn unit_inverse(a: u64, m: u64) -> Option<u64> {
    inv_mod(a, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(m: u64, c: &[i128]) -> FlatPoly {
        FlatPoly::new(m, c.to_vec())
    }

    #[test]
    fn seven_two() {
        let gs = factor_f_mod_q(7, 2).unwrap();
        assert_eq!(gs, vec![poly(2, &[1, 1, 0, 1]), poly(2, &[1, 0, 1, 1])]);
        let fs = build_factor_system(7, 2, 2).unwrap();
        assert_eq!(fs.factors, vec![poly(4, &[3, 1, 2, 1]), poly(4, &[3, 2, 3, 1])]);
        assert_eq!(fs.cofactors[0], fs.factors[1]);
    }

    #[test]
    fn irreducible_cases() {
        assert_eq!(factor_f_mod_q(3, 2).unwrap(), vec![poly(2, &[1, 1, 1])]);
        assert_eq!(factor_f_mod_q(5, 2).unwrap(), vec![poly(2, &[1, 1, 1, 1, 1])]);
        let fs = build_factor_system(5, 2, 3).unwrap();
        assert_eq!(fs.cofactors, vec![poly(8, &[1])]);
        assert!(factor_f_mod_q(7, 7).is_err());
    }

    #[test]
    fn exact_step_is_identity() {
        let g = poly(2, &[1, 1, 0, 1]);
        let h = poly(2, &[1, 0, 1, 1]);
        let f = g.mul(&h);
        let (a, b) = fq::bezout(&g.coeffs, &h.coeffs, 2);
        let a = FlatPoly::new(2, a.into_iter().map(|c| c as i128).collect());
        let b = FlatPoly::new(2, b.into_iter().map(|c| c as i128).collect());
        let fz = FlatPoly::new(4, mul_i(&g.as_i128(), &h.as_i128(), i128::MAX));
        let (g2, h2) = hensel_step(&fz, &g, &h, &a, &b, 2, 1).unwrap();
        assert_eq!((g2.reduce(2), h2.reduce(2)), (g, h));
        assert_eq!(g2.mul(&h2), fz);
        assert_eq!(f.modulus, 2);
    }

    #[test]
    fn eleven_three() {
        for n in 1..=3 {
            let fs = build_factor_system(11, 3, n).unwrap();
            let m = 3u64.pow(n);
            assert_eq!(fs.factors.len(), 2);
            assert!(fs.factors.iter().all(|f| f.degree() == 5 && f.is_monic()));
            let prod = fs.factors[0].mul(&fs.factors[1]);
            assert_eq!(prod, FlatPoly::new(m, vec![1; 11]));
        }
    }
}
