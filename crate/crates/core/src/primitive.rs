//! Primitive groups of degree 2 and 3 over exact cyclotomic matrices.

use crate::cyclotomic::{CyclotomicNumber, DenseMatrix, Scalar};
use crate::error::{Error, Result};
use crate::modules::x_pj_generator;
use crate::monomial::{DiagExponents, MonomialElement, Permutation};
use std::fmt;

/// Family tags of the primitive lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrimFamily {
    A4a,
    A4b,
    S4a,
    S4b,
    A5,
    C4_1,
    C4_2,
    C4_3,
    Q8_1,
    Q8_2,
    SL23_1,
    SL23_2,
    SL23_3,
    Alt5,
    Alt6,
    PSL27,
}

impl PrimFamily {
    pub const ALL: [PrimFamily; 16] = [
        Self::A4a,
        Self::A4b,
        Self::S4a,
        Self::S4b,
        Self::A5,
        Self::C4_1,
        Self::C4_2,
        Self::C4_3,
        Self::Q8_1,
        Self::Q8_2,
        Self::SL23_1,
        Self::SL23_2,
        Self::SL23_3,
        Self::Alt5,
        Self::Alt6,
        Self::PSL27,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Self::A4a => "A4_a",
            Self::A4b => "A4_b",
            Self::S4a => "S4_a",
            Self::S4b => "S4_b",
            Self::A5 => "A5",
            Self::C4_1 => "C4_1",
            Self::C4_2 => "C4_2",
            Self::C4_3 => "C4_3",
            Self::Q8_1 => "Q8_1",
            Self::Q8_2 => "Q8_2",
            Self::SL23_1 => "SL23_1",
            Self::SL23_2 => "SL23_2",
            Self::SL23_3 => "SL23_3",
            Self::Alt5 => "Alt5",
            Self::Alt6 => "Alt6",
            Self::PSL27 => "PSL27",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.tag() == tag)
    }

    pub fn degree(&self) -> usize {
        match self {
            Self::A4a | Self::A4b | Self::S4a | Self::S4b | Self::A5 => 2,
            _ => 3,
        }
    }

    /// `|G/Z(G)|`.
    pub fn central_quotient_order(&self) -> u64 {
        match self {
            Self::A4a | Self::A4b => 12,
            Self::S4a | Self::S4b => 24,
            Self::A5 | Self::Alt5 => 60,
            Self::C4_1 | Self::C4_2 | Self::C4_3 => 36,
            Self::Q8_1 | Self::Q8_2 => 72,
            Self::SL23_1 | Self::SL23_2 | Self::SL23_3 => 216,
            Self::Alt6 => 360,
            Self::PSL27 => 168,
        }
    }

    pub fn is_solvable(&self) -> bool {
        !matches!(self, Self::A5 | Self::Alt5 | Self::Alt6 | Self::PSL27)
    }

    /// Whether a family member with center of order `n` exists.
    pub fn admits(&self, n: u64) -> bool {
        match self {
            Self::A4a | Self::A4b | Self::S4a | Self::S4b | Self::A5 => n.is_multiple_of(2),
            Self::Alt5 | Self::PSL27 => n >= 1,
            _ => n.is_multiple_of(3),
        }
    }
}

/// One class of the primitive lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimLabel {
    pub family: PrimFamily,
    /// Center order.
    pub n: u64,
}

impl PrimLabel {
    pub fn new(family: PrimFamily, n: u64) -> Result<Self> {
        if n == 0 || !family.admits(n) {
            return Err(Error::InvalidLabel(format!("{};n={n}", family.tag())));
        }
        Ok(Self { family, n })
    }

    pub fn degree(&self) -> usize {
        self.family.degree()
    }

    pub fn order(&self) -> u64 {
        self.family.central_quotient_order() * self.n
    }

    pub fn generators<T: Scalar>(&self) -> Result<Vec<DenseMatrix<T>>> {
        assemble_prim(self)
    }
}

impl fmt::Display for PrimLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};deg={};n={}", self.family.tag(), self.degree(), self.n)
    }
}

/// Primitive labels of the given degree and group order.
pub fn enumerate_prim(degree: usize, m: u64) -> Vec<PrimLabel> {
    PrimFamily::ALL
        .into_iter()
        .filter(|f| f.degree() == degree && m.is_multiple_of(f.central_quotient_order()))
        .filter_map(|f| PrimLabel::new(f, m / f.central_quotient_order()).ok())
        .collect()
}

type Num<T> = CyclotomicNumber<T>;

fn int<T: Scalar>(v: i64) -> Num<T> {
    Num::from_int(v, 1)
}

fn root<T: Scalar>(m: u64, k: i64) -> Num<T> {
    Num::root(m, k)
}

fn root_sum<T: Scalar>(m: u64, terms: &[(i64, i64)]) -> Num<T> {
    terms.iter().fold(Num::zero(m), |acc, &(c, k)| acc.add(&root::<T>(m, k).scale(&T::from_i64(c))))
}

fn half<T: Scalar>(x: Num<T>) -> Num<T> {
    x.scale(&(T::one() / T::from_i64(2)))
}

/// `√5 = ζ₅ + ζ₅⁴ − ζ₅² − ζ₅³`.
pub fn sqrt5<T: Scalar>() -> Num<T> {
    root_sum(5, &[(1, 1), (1, 4), (-1, 2), (-1, 3)])
}

/// `√−7 = ω³ + ω⁵ + ω⁶ − ω − ω² − ω⁴`, the root making `det c' = 1`.
pub fn sqrt_minus7<T: Scalar>() -> Num<T> {
    root_sum(7, &[(-1, 1), (-1, 2), (-1, 4), (1, 3), (1, 5), (1, 6)])
}

fn matrix<T: Scalar>(rows: Vec<Vec<Num<T>>>) -> Result<DenseMatrix<T>> {
    DenseMatrix::from_rows(rows)
}

fn scalar<T: Scalar>(degree: usize, n: u64, k: i64) -> DenseMatrix<T> {
    DenseMatrix::scalar(degree, root(n, k))
}

fn diag_dense<T: Scalar>(d: DiagExponents) -> DenseMatrix<T> {
    MonomialElement::from_diag(d).to_dense()
}

fn mul<T: Scalar>(x: &DenseMatrix<T>, y: &DenseMatrix<T>) -> DenseMatrix<T> {
    x.mul(y).expect("equal degrees")
}

/// The degree-2 generator `a`.
pub fn mat_a<T: Scalar>() -> Result<DenseMatrix<T>> {
    let i = root::<T>(4, 1);
    let one = int::<T>(1);
    matrix(vec![vec![half(i.sub(&one)), half(i.sub(&one))], vec![half(i.add(&one)), half(i.neg().sub(&one))]])
}

/// The degree-2 generator `b = diag(ζ₈, ζ₈⁷)`.
pub fn mat_b<T: Scalar>() -> DenseMatrix<T> {
    diag_dense(DiagExponents::new(8, vec![1, 7]))
}

/// The degree-2 generator `c`.
pub fn mat_c<T: Scalar>() -> Result<DenseMatrix<T>> {
    let i = root::<T>(4, 1);
    let r5 = sqrt5::<T>();
    let l1 = half(int::<T>(1).sub(&r5));
    let l2 = half(int::<T>(1).add(&r5));
    matrix(vec![vec![half(i.clone()), half(l1.sub(&l2.mul(&i)))], vec![half(l1.neg().sub(&l2.mul(&i))), half(i.neg())]])
}

/// `u` and `u'` of degree 3.
pub fn mat_u<T: Scalar>(prime: bool) -> Result<DenseMatrix<T>> {
    let e = |k: i64| root::<T>(3, k);
    let f = e(1).sub(&e(2)).inv()?;
    let rows: [[i64; 3]; 3] = if prime { [[0, 1, 1], [2, 1, 2], [2, 2, 1]] } else { [[0, 0, 0], [0, 1, 2], [0, 2, 1]] };
    matrix(rows.iter().map(|r| r.iter().map(|&k| e(k).mul(&f)).collect()).collect())
}

/// `a'` of degree 3.
pub fn mat_a_prime<T: Scalar>() -> Result<DenseMatrix<T>> {
    let r5 = sqrt5::<T>();
    let m1 = half(int::<T>(-1).add(&r5));
    let m2 = half(int::<T>(-1).sub(&r5));
    let h = |x: &Num<T>| half(x.clone());
    let n1 = int::<T>(-1);
    matrix(vec![vec![h(&n1), h(&m2), h(&m1)], vec![h(&m2), h(&m1), h(&n1)], vec![h(&m1), h(&n1), h(&m2)]])
}

/// `b'` of degree 3.
pub fn mat_b_prime<T: Scalar>() -> Result<DenseMatrix<T>> {
    let z = Num::<T>::zero(3);
    let e = |k: i64| root::<T>(3, k).neg();
    matrix(vec![vec![int::<T>(-1), z.clone(), z.clone()], vec![z.clone(), z.clone(), e(2)], vec![z.clone(), e(1), z]])
}

/// `c'`: back-circulant with first row `(ω⁴−ω³, ω²−ω⁵, ω−ω⁶)/√−7`.
pub fn mat_c_prime<T: Scalar>() -> Result<DenseMatrix<T>> {
    let inv = sqrt_minus7::<T>().inv()?;
    let w = |a: i64, b: i64| root::<T>(7, a).sub(&root::<T>(7, b)).mul(&inv);
    let row = [w(4, 3), w(2, 5), w(1, 6)];
    matrix((0..3).map(|i| (0..3).map(|j| row[(i + j) % 3].clone()).collect()).collect())
}

/// Generators of the primitive group named by `label`.
pub fn assemble_prim<T: Scalar>(label: &PrimLabel) -> Result<Vec<DenseMatrix<T>>> {
    let n = label.n;
    let d = label.degree();
    let zn = scalar::<T>(d, n, 1);
    let x4 = || diag_dense::<T>(DiagExponents::b(2, 4, 4).expect("4 | 4"));
    let s = || MonomialElement::from_perm(Permutation::s(3)).to_dense::<T>();
    let u = || mat_u::<T>(false);
    let x27 = || -> Result<DenseMatrix<T>> { Ok(diag_dense(x_pj_generator(3, 3, 9)?)) };
    let sign = || diag_dense::<T>(DiagExponents::new(2, vec![0, 1, 1]));
    let twist_u = |m: u64, k: i64| -> Result<DenseMatrix<T>> { Ok(mul(&scalar(3, m, k), &u()?)) };
    let gens = match label.family {
        PrimFamily::A4a => vec![mat_a()?, x4(), zn],
        PrimFamily::A4b => vec![mul(&mat_a()?, &scalar(2, 3 * n, 1)), x4()],
        PrimFamily::S4a => vec![mat_a()?, mat_b(), zn],
        PrimFamily::S4b => vec![mat_a()?, mul(&mat_b(), &scalar(2, 2 * n, 1)), zn],
        PrimFamily::A5 => vec![mat_a()?, mat_c()?, x4(), zn],
        PrimFamily::C4_1 => vec![s(), u()?, zn],
        PrimFamily::C4_2 | PrimFamily::C4_3 => {
            let second = label.family == PrimFamily::C4_3;
            let v = match (n % 2 == 1, n.is_multiple_of(4), second) {
                (true, _, false) => twist_u(2, 1)?,
                (true, _, true) => twist_u(4, 1)?,
                (false, true, false) => twist_u(4 * n, 1)?,
                (false, true, true) => twist_u(4 * n, 2)?,
                (false, false, false) => twist_u(4, 1)?,
                (false, false, true) => twist_u(8, 1)?,
            };
            vec![s(), v, zn]
        }
        PrimFamily::Q8_1 => vec![s(), u()?, mat_u(true)?, zn],
        PrimFamily::Q8_2 => {
            if n % 2 == 1 {
                vec![s(), u()?, mul(&scalar(3, 2, 1), &mat_u(true)?), zn]
            } else {
                vec![s(), twist_u(2 * n, 1)?, mat_u(true)?, zn]
            }
        }
        PrimFamily::SL23_1 => vec![u()?, x27()?, zn],
        PrimFamily::SL23_2 => vec![u()?, mul(&scalar(3, 3 * n, 1), &x27()?), zn],
        PrimFamily::SL23_3 => vec![u()?, mul(&scalar(3, 3 * n, 2), &x27()?), zn],
        PrimFamily::Alt5 => vec![s(), sign(), mat_a_prime()?, zn],
        PrimFamily::Alt6 => vec![s(), sign(), mat_a_prime()?, mat_b_prime()?, zn],
        PrimFamily::PSL27 => vec![diag_dense(DiagExponents::new(7, vec![1, 2, 4])), mat_c_prime()?, zn],
    };
    let m = gens.iter().fold(1, |acc, g| num_integer::lcm(acc, g.modulus()));
    gens.iter().map(|g| g.change_modulus(m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_by_order() {
        let d2: Vec<_> = enumerate_prim(2, 24).into_iter().map(|l| l.family).collect();
        assert_eq!(d2, vec![PrimFamily::A4a, PrimFamily::A4b]);
        assert_eq!(enumerate_prim(3, 108).len(), 3);
        assert_eq!(enumerate_prim(3, 1080).iter().filter(|l| l.family == PrimFamily::Alt6).count(), 1);
        assert!(enumerate_prim(2, 8).is_empty());
    }

    #[test]
    fn label_string() {
        assert_eq!(PrimLabel::new(PrimFamily::C4_2, 3).unwrap().to_string(), "C4_2;deg=3;n=3");
        assert!(PrimLabel::new(PrimFamily::A4a, 3).is_err());
    }
}
