use super::poly::cyclotomic_poly;
use super::scalar::Scalar;
use crate::arith::lcm;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// An element of ℚ(ζ_M) in the reduced power basis `1, ζ_M, …, ζ_M^{φ(M)−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicNumber<T: Scalar> {
    modulus: u64,
    coeffs: Vec<T>,
}

/// Serialized form: `{modulus, coeffs: ["num/den", …]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicRecord {
    pub modulus: u64,
    pub coeffs: Vec<String>,
}

fn phi_degree(m: u64) -> usize {
    cyclotomic_poly(m).len() - 1
}

/// Reduces `Σ v[k] ζ_M^k` (any length) to power-basis coordinates.
fn reduce<T: Scalar>(v: Vec<T>, m: u64) -> Vec<T> {
    let phi = cyclotomic_poly(m);
    let deg = phi.len() - 1;
    let mut folded = vec![T::zero(); (m as usize).max(deg)];
    for (k, c) in v.into_iter().enumerate() {
        if !c.is_zero() {
            let slot = &mut folded[k % m as usize];
            *slot = slot.clone() + c;
        }
    }
    for k in (deg..folded.len()).rev() {
        let c = std::mem::replace(&mut folded[k], T::zero());
        if !c.is_zero() {
            for (i, &b) in phi[..deg].iter().enumerate() {
                if b != 0 {
                    let slot = &mut folded[k - deg + i];
                    *slot = slot.clone() - c.clone() * T::from_i64(b);
                }
            }
        }
    }
    folded.truncate(deg);
    folded
}

impl<T: Scalar> CyclotomicNumber<T> {
    pub fn zero(modulus: u64) -> Self {
        Self { modulus, coeffs: vec![T::zero(); phi_degree(modulus)] }
    }

    pub fn one(modulus: u64) -> Self {
        Self::from_rational(T::one(), modulus)
    }

    pub fn from_rational(r: T, modulus: u64) -> Self {
        let mut z = Self::zero(modulus);
        z.coeffs[0] = r;
        z
    }

    pub fn from_int(v: i64, modulus: u64) -> Self {
        Self::from_rational(T::from_i64(v), modulus)
    }

    /// `ζ_M^k`.
    pub fn root(modulus: u64, k: i64) -> Self {
        let mut v = vec![T::zero(); modulus as usize];
        v[k.rem_euclid(modulus as i64) as usize] = T::one();
        Self { modulus, coeffs: reduce(v, modulus) }
    }

    /// `Σ c_k ζ_M^k` for an arbitrary-length coefficient list.
    pub fn from_root_sum(modulus: u64, v: Vec<T>) -> Self {
        Self { modulus, coeffs: reduce(v, modulus) }
    }

    /// Builds directly from reduced coordinates.
    pub fn from_coeffs(modulus: u64, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() != phi_degree(modulus) {
            return Err(Error::Inconsistent(format!(
                "expected {} coordinates for modulus {modulus}",
                phi_degree(modulus)
            )));
        }
        Ok(Self { modulus, coeffs })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value if the number lies in ℚ.
    pub fn as_rational(&self) -> Option<T> {
        self.coeffs[1..].iter().all(|c| c.is_zero()).then(|| self.coeffs[0].clone())
    }

    /// Embeds along `ζ_M ↦ ζ_{M'}^{M'/M}`.
    pub fn change_modulus(&self, target: u64) -> Result<Self> {
        if !target.is_multiple_of(self.modulus) {
            return Err(Error::ModulusMismatch { from: self.modulus, to: target });
        }
        if target == self.modulus {
            return Ok(self.clone());
        }
        let step = (target / self.modulus) as usize;
        let mut v = vec![T::zero(); target as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * step] = c.clone();
        }
        Ok(Self { modulus: target, coeffs: reduce(v, target) })
    }

    /// Lifts both operands to the lcm of their moduli.
    pub fn unify(&self, other: &Self) -> (Self, Self) {
        let m = lcm(self.modulus, other.modulus);
        (self.change_modulus(m).unwrap(), other.change_modulus(m).unwrap())
    }

    fn lifted<R>(&self, other: &Self, f: impl FnOnce(&Self, &Self) -> R) -> R {
        if self.modulus == other.modulus {
            f(self, other)
        } else {
            let (a, b) = self.unify(other);
            f(&a, &b)
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.lifted(other, |a, b| Self {
            modulus: a.modulus,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.clone() + y.clone()).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.lifted(other, |a, b| Self {
            modulus: a.modulus,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.clone() - y.clone()).collect(),
        })
    }

    pub fn neg(&self) -> Self {
        Self { modulus: self.modulus, coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn scale(&self, r: &T) -> Self {
        Self { modulus: self.modulus, coeffs: self.coeffs.iter().map(|c| c.clone() * r.clone()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.lifted(other, |a, b| {
            let n = a.coeffs.len();
            let mut v = vec![T::zero(); 2 * n - 1];
            for (i, x) in a.coeffs.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b.coeffs.iter().enumerate() {
                    if !y.is_zero() {
                        v[i + j] = v[i + j].clone() + x.clone() * y.clone();
                    }
                }
            }
            Self { modulus: a.modulus, coeffs: reduce(v, a.modulus) }
        })
    }

    /// Complex conjugation `ζ_M ↦ ζ_M^{−1}`.
    pub fn conj(&self) -> Self {
        let m = self.modulus as usize;
        let mut v = vec![T::zero(); m];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[(m - i) % m] = c.clone();
        }
        Self { modulus: self.modulus, coeffs: reduce(v, self.modulus) }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_M.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let phi: Vec<T> = cyclotomic_poly(self.modulus).iter().map(|&c| T::from_i64(c)).collect();
        let (g, s) = ext_euclid(trim(self.coeffs.clone()), phi);
        // g is a nonzero constant since Φ_M is irreducible.
        let g0 = g[0].clone();
        let mut coeffs: Vec<T> = s.into_iter().map(|c| c / g0.clone()).collect();
        coeffs.resize(self.coeffs.len(), T::zero());
        Ok(Self { modulus: self.modulus, coeffs: reduce(coeffs, self.modulus) })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn to_record(&self) -> CyclotomicRecord {
        CyclotomicRecord { modulus: self.modulus, coeffs: self.coeffs.iter().map(|c| c.to_ratio_string()).collect() }
    }

    pub fn from_record(rec: &CyclotomicRecord) -> Result<Self> {
        let coeffs = rec
            .coeffs
            .iter()
            .map(|s| T::parse_ratio(s).ok_or_else(|| Error::MalformedToken(s.clone())))
            .collect::<Result<Vec<_>>>()?;
        Self::from_coeffs(rec.modulus, coeffs)
    }
}

fn trim<T: Scalar>(mut v: Vec<T>) -> Vec<T> {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_divrem<T: Scalar>(a: &[T], b: &[T]) -> (Vec<T>, Vec<T>) {
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut rem = a.to_vec();
    if a.len() < b.len() {
        return (vec![T::zero()], rem);
    }
    let mut quo = vec![T::zero(); a.len() - db];
    for k in (db..a.len()).rev() {
        let c = rem[k].clone() / lead.clone();
        if !c.is_zero() {
            for (i, bi) in b.iter().enumerate() {
                rem[k - db + i] = rem[k - db + i].clone() - c.clone() * bi.clone();
            }
        }
        quo[k - db] = c;
    }
    (trim(quo), trim(rem[..db.max(1)].to_vec()))
}

fn poly_mul<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    trim(out)
}

fn poly_sub<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    let n = a.len().max(b.len());
    let get = |v: &[T], i: usize| v.get(i).cloned().unwrap_or_else(T::zero);
    trim((0..n).map(|i| get(a, i) - get(b, i)).collect())
}

fn is_zero_poly<T: Scalar>(v: &[T]) -> bool {
    v.iter().all(|c| c.is_zero())
}

/// Returns `(g, s)` with `s·a ≡ g (mod m)` and `g = gcd(a, m)`.
fn ext_euclid<T: Scalar>(a: Vec<T>, m: Vec<T>) -> (Vec<T>, Vec<T>) {
    let (mut r0, mut r1) = (a, m);
    let (mut s0, mut s1) = (vec![T::one()], vec![T::zero()]);
    while !is_zero_poly(&r1) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

#[cfg(test)]
mod tests {
    use crate::Cyclotomic;
    use num_rational::BigRational;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn i_squared() {
        let i = Cyclotomic::root(4, 1);
        assert_eq!(i.mul(&i), Cyclotomic::from_int(-1, 4));
    }

    #[test]
    fn sqrt_five() {
        let z = |k| Cyclotomic::root(5, k);
        let s5 = z(1).add(&z(4)).sub(&z(2)).sub(&z(3));
        assert_eq!(s5.mul(&s5).as_rational(), Some(q(5)));
    }

    #[test]
    fn conj_root_of_unity() {
        let z = Cyclotomic::root(8, 1);
        assert_eq!(z.conj().mul(&z), Cyclotomic::one(8));
    }

    #[test]
    fn embeddings() {
        let minus_one = Cyclotomic::from_int(-1, 2);
        assert_eq!(minus_one.change_modulus(4).unwrap(), Cyclotomic::from_int(-1, 4));
        assert_eq!(Cyclotomic::root(3, 1).change_modulus(12).unwrap(), Cyclotomic::root(12, 4));
        assert!(Cyclotomic::root(3, 1).change_modulus(8).is_err());
        let (a, b) = (Cyclotomic::root(3, 1), Cyclotomic::root(4, 1));
        let lifted = a.change_modulus(12).unwrap().mul(&b.change_modulus(12).unwrap());
        assert_eq!(a.mul(&b), lifted);
        assert_eq!(lifted, Cyclotomic::root(12, 7));
    }

    #[test]
    fn inverse_and_zero_division() {
        let x = Cyclotomic::root(7, 1).add(&Cyclotomic::from_int(2, 7));
        assert_eq!(x.mul(&x.inv().unwrap()), Cyclotomic::one(7));
        assert!(Cyclotomic::zero(7).inv().is_err());
    }

    #[test]
    fn record_roundtrip() {
        let x = Cyclotomic::root(5, 2).scale(&BigRational::new(3.into(), 7.into()));
        let rec = x.to_record();
        assert_eq!(rec.coeffs[2], "3/7");
        assert_eq!(Cyclotomic::from_record(&rec).unwrap(), x);
    }
}
