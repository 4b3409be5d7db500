//! Monomial matrices over roots of unity as (exponent vector, permutation) pairs.

use crate::arith::{gcd, lcm, least_primitive_root};
use crate::cyclotomic::{CyclotomicNumber, DenseMatrix, Scalar};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A permutation of `{1..p}`, stored 0-based; `images[i]` is the image of point `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(p: usize) -> Self {
        Self { images: (0..p as u16).collect() }
    }

    /// From 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let p = images.len();
        let mut seen = vec![false; p];
        for &x in images {
            if x == 0 || x > p || seen[x - 1] {
                return Err(Error::InvalidLabel(format!("not a permutation: {images:?}")));
            }
            seen[x - 1] = true;
        }
        Ok(Self { images: images.iter().map(|&x| (x - 1) as u16).collect() })
    }

    /// From disjoint 1-based cycles.
    pub fn from_cycles(p: usize, cycles: &[&[usize]]) -> Self {
        let mut images: Vec<u16> = (0..p as u16).collect();
        for cyc in cycles {
            for (k, &x) in cyc.iter().enumerate() {
                images[x - 1] = (cyc[(k + 1) % cyc.len()] - 1) as u16;
            }
        }
        Self { images }
    }

    /// The p-cycle `s = (1,2,…,p)`.
    pub fn s(p: usize) -> Self {
        Self { images: (0..p).map(|i| ((i + 1) % p) as u16).collect() }
    }

    /// `t: i ↦ iu mod p` for the least primitive root `u`; fixes the point `p`.
    pub fn t(p: usize) -> Self {
        let u = least_primitive_root(p as u64) as usize;
        Self { images: (0..p).map(|i| (((i + 1) * u + p - 1) % p) as u16).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u16; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u16;
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn pow(&self, e: u64) -> Self {
        (0..e).fold(Self::identity(self.degree()), |acc, _| acc.compose(self))
    }

    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut ord = 1u64;
        for i in 0..self.images.len() {
            if !seen[i] {
                let mut len = 0u64;
                let mut x = i;
                while !seen[x] {
                    seen[x] = true;
                    x = self.images[x] as usize;
                    len += 1;
                }
                ord = lcm(ord, len);
            }
        }
        ord
    }

    pub fn is_odd(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        let mut transpositions = 0;
        for i in 0..self.images.len() {
            let mut x = i;
            let mut len = 0;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        transpositions % 2 == 1
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().enumerate().filter(|(i, &x)| *i == x as usize).map(|(i, _)| i)
    }
}

/// `diag(ζ_M^{e_1}, …, ζ_M^{e_p})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagExponents {
    modulus: u64,
    exps: Vec<u64>,
}

impl DiagExponents {
    pub fn new(modulus: u64, exps: Vec<i64>) -> Self {
        let m = modulus as i64;
        Self { modulus, exps: exps.into_iter().map(|e| e.rem_euclid(m) as u64).collect() }
    }

    pub fn identity(p: usize, modulus: u64) -> Self {
        Self { modulus, exps: vec![0; p] }
    }

    /// `b_m = diag(ζ_m, ζ_m^{−1}, 1, …, 1)` on modulus `M`, `m | M`.
    pub fn b(p: usize, m: u64, modulus: u64) -> Result<Self> {
        if !modulus.is_multiple_of(m) {
            return Err(Error::ModulusMismatch { from: m, to: modulus });
        }
        let mut e = vec![0i64; p];
        e[0] = (modulus / m) as i64;
        e[1] = -((modulus / m) as i64);
        Ok(Self::new(modulus, e))
    }

    /// The scalar `z_m = ζ_m·I` on modulus `M`, `m | M`.
    pub fn z(p: usize, m: u64, modulus: u64) -> Result<Self> {
        if !modulus.is_multiple_of(m) {
            return Err(Error::ModulusMismatch { from: m, to: modulus });
        }
        Ok(Self { modulus, exps: vec![modulus / m; p] })
    }

    /// `diag(ε^{e_1}, …)` where `ε` has order `m`.
    pub fn from_root_powers(m: u64, powers: &[i64]) -> Self {
        Self::new(m, powers.to_vec())
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    pub fn degree(&self) -> usize {
        self.exps.len()
    }

    pub fn lift(&self, target: u64) -> Result<Self> {
        if !target.is_multiple_of(self.modulus) {
            return Err(Error::ModulusMismatch { from: self.modulus, to: target });
        }
        let f = target / self.modulus;
        Ok(Self { modulus: target, exps: self.exps.iter().map(|e| e * f).collect() })
    }

    fn unify(&self, other: &Self) -> (Self, Self) {
        let m = lcm(self.modulus, other.modulus);
        (self.lift(m).unwrap(), other.lift(m).unwrap())
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.modulus != other.modulus {
            let (a, b) = self.unify(other);
            return a.add(&b);
        }
        let m = self.modulus;
        Self { modulus: m, exps: self.exps.iter().zip(&other.exps).map(|(a, b)| (a + b) % m).collect() }
    }

    pub fn neg(&self) -> Self {
        let m = self.modulus;
        Self { modulus: m, exps: self.exps.iter().map(|&e| (m - e) % m).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: i64) -> Self {
        let m = self.modulus as i128;
        Self {
            modulus: self.modulus,
            exps: self.exps.iter().map(|&e| ((e as i128 * k as i128).rem_euclid(m)) as u64).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_scalar(&self) -> bool {
        self.exps.windows(2).all(|w| w[0] == w[1])
    }

    /// Order as a group element.
    pub fn order(&self) -> u64 {
        self.exps.iter().fold(1, |acc, &e| lcm(acc, self.modulus / gcd(self.modulus, e)))
    }

    /// `d^σ = P(σ)^{−1} D P(σ)`: the entry at point `i` moves to point `iσ`.
    pub fn act_perm(&self, sigma: &Permutation) -> Self {
        let mut exps = vec![0u64; self.exps.len()];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[sigma.apply(i)] = e;
        }
        Self { modulus: self.modulus, exps }
    }

    /// `(d∘σ)_i = d_{iσ}`.
    pub fn compose_perm(&self, sigma: &Permutation) -> Self {
        Self { modulus: self.modulus, exps: (0..self.exps.len()).map(|i| self.exps[sigma.apply(i)]).collect() }
    }

    /// `γ(d) = d^{1−s}`.
    pub fn gamma(&self) -> Self {
        self.sub(&self.act_perm(&Permutation::s(self.degree())))
    }

    /// `χ(d) = d^{1+s+⋯+s^{p−1}}`, the scalar with exponent `Σ e_i`.
    pub fn chi(&self) -> Self {
        let sum = self.exps.iter().fold(0u64, |acc, &e| (acc + e) % self.modulus);
        Self { modulus: self.modulus, exps: vec![sum; self.exps.len()] }
    }

    /// `d^{f(σ)} = Σ_i c_i·d^{σ^i}` for integer coefficients `c_i` (constant term first).
    pub fn apply_group_ring(&self, f: &[i64], sigma: &Permutation) -> Self {
        let mut acc = Self::identity(self.degree(), self.modulus);
        let mut term = self.clone();
        for &c in f {
            acc = acc.add(&term.scale(c));
            term = term.act_perm(sigma);
        }
        acc
    }
}

/// The monomial matrix `D(diag)·P(perm)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialElement {
    pub diag: DiagExponents,
    pub perm: Permutation,
}

/// Standalone serialization `{degree, modulus, perm, diag}` with 1-based images.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialRecord {
    pub degree: usize,
    pub modulus: u64,
    pub perm: Vec<usize>,
    pub diag: Vec<u64>,
}

impl MonomialElement {
    pub fn new(diag: DiagExponents, perm: Permutation) -> Result<Self> {
        if diag.degree() != perm.degree() {
            return Err(Error::DegreeMismatch(diag.degree(), perm.degree()));
        }
        Ok(Self { diag, perm })
    }

    pub fn identity(p: usize, modulus: u64) -> Self {
        Self { diag: DiagExponents::identity(p, modulus), perm: Permutation::identity(p) }
    }

    pub fn from_perm(perm: Permutation) -> Self {
        Self { diag: DiagExponents::identity(perm.degree(), 1), perm }
    }

    pub fn from_diag(diag: DiagExponents) -> Self {
        let p = diag.degree();
        Self { diag, perm: Permutation::identity(p) }
    }

    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    pub fn modulus(&self) -> u64 {
        self.diag.modulus()
    }

    pub fn lift(&self, target: u64) -> Result<Self> {
        Ok(Self { diag: self.diag.lift(target)?, perm: self.perm.clone() })
    }

    /// `(a,σ)(b,τ) = (a + b∘σ, στ)`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self { diag: self.diag.add(&other.diag.compose_perm(&self.perm)), perm: self.perm.compose(&other.perm) }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.mul(other))
    }

    pub fn inv(&self) -> Self {
        let inv = self.perm.inverse();
        Self { diag: self.diag.neg().compose_perm(&inv), perm: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.diag.is_identity()
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.degree(), self.modulus());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Least `n ≥ 1` with `xⁿ = 1`.
    pub fn order(&self) -> u64 {
        let k = self.perm.order();
        k * self.pow(k).diag.order()
    }

    /// `d^x = x^{−1} d x`.
    pub fn conjugate(&self, x: &Self) -> Self {
        x.inv().mul(self).mul(x)
    }

    /// `e` with `det = sgn(σ)·ζ_M^e`.
    pub fn det_exponent(&self) -> u64 {
        self.diag.exps().iter().fold(0, |acc, &e| (acc + e) % self.modulus())
    }

    /// Determinant as a fraction `k/n` of a full turn, reduced.
    pub fn det_turn(&self) -> (u64, u64) {
        let m = lcm(self.modulus(), 2);
        let mut e = self.det_exponent() * (m / self.modulus());
        if self.perm.is_odd() {
            e = (e + m / 2) % m;
        }
        let g = gcd(e, m);
        (e / g, m / g)
    }

    pub fn to_dense<T: Scalar>(&self) -> DenseMatrix<T> {
        let p = self.degree();
        let m = self.modulus();
        let rows = (0..p)
            .map(|i| {
                (0..p)
                    .map(|j| {
                        if self.perm.apply(i) == j {
                            CyclotomicNumber::root(m, self.diag.exps()[i] as i64)
                        } else {
                            CyclotomicNumber::zero(m)
                        }
                    })
                    .collect()
            })
            .collect();
        DenseMatrix::from_rows(rows).expect("square")
    }

    pub fn to_record(&self) -> MonomialRecord {
        MonomialRecord {
            degree: self.degree(),
            modulus: self.modulus(),
            perm: self.perm.images(),
            diag: self.diag.exps().to_vec(),
        }
    }

    pub fn from_record(rec: &MonomialRecord) -> Result<Self> {
        let perm = Permutation::from_images(&rec.perm)?;
        if rec.diag.len() != rec.degree || perm.degree() != rec.degree || rec.modulus == 0 {
            return Err(Error::InvalidLabel("monomial record shape".into()));
        }
        let diag = DiagExponents::new(rec.modulus, rec.diag.iter().map(|&e| e as i64).collect());
        Self::new(diag, perm)
    }
}

/// Least common modulus carrying every entry.
pub fn minimal_modulus(xs: &[MonomialElement]) -> u64 {
    xs.iter().fold(1, |acc, x| lcm(acc, x.diag.order()))
}

/// Rewrites all elements on the least modulus carrying every entry.
pub fn normalize_modulus(xs: &[MonomialElement]) -> Vec<MonomialElement> {
    let m = minimal_modulus(xs);
    xs.iter()
        .map(|x| {
            let old = x.modulus();
            let l = lcm(old, m);
            let lifted = x.lift(l).unwrap();
            let f = l / m;
            MonomialElement {
                diag: DiagExponents { modulus: m, exps: lifted.diag.exps.iter().map(|e| e / f).collect() },
                perm: x.perm.clone(),
            }
        })
        .collect()
}

/// Lifts all elements to one common modulus.
pub fn common_modulus(xs: &[MonomialElement]) -> Vec<MonomialElement> {
    let m = xs.iter().fold(1, |acc, x| lcm(acc, x.modulus()));
    xs.iter().map(|x| x.lift(m).unwrap()).collect()
}
