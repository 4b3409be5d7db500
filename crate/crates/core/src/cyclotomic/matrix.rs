use super::number::{CyclotomicNumber, CyclotomicRecord};
use super::scalar::Scalar;
use crate::arith::lcm;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A square matrix over ℚ(ζ_M) whose entries share one modulus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DenseMatrix<T: Scalar> {
    degree: usize,
    modulus: u64,
    entries: Vec<CyclotomicNumber<T>>,
}

/// Serialized form: `{degree, modulus, rows: [[coeff-records]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DenseRecord {
    pub degree: usize,
    pub modulus: u64,
    pub rows: Vec<Vec<CyclotomicRecord>>,
}

impl<T: Scalar> DenseMatrix<T> {
    /// Builds from row-major entries, lifting all to their common modulus.
    pub fn from_rows(rows: Vec<Vec<CyclotomicNumber<T>>>) -> Result<Self> {
        let degree = rows.len();
        if rows.iter().any(|r| r.len() != degree) {
            return Err(Error::DegreeMismatch(degree, rows.iter().map(Vec::len).max().unwrap_or(0)));
        }
        let modulus = rows.iter().flatten().fold(1, |m, x| lcm(m, x.modulus()));
        let entries = rows.into_iter().flatten().map(|x| x.change_modulus(modulus)).collect::<Result<Vec<_>>>()?;
        Ok(Self { degree, modulus, entries })
    }

    pub fn identity(degree: usize, modulus: u64) -> Self {
        Self::scalar(degree, CyclotomicNumber::one(modulus))
    }

    pub fn scalar(degree: usize, x: CyclotomicNumber<T>) -> Self {
        let modulus = x.modulus();
        let entries = (0..degree * degree)
            .map(|k| if k % (degree + 1) == 0 { x.clone() } else { CyclotomicNumber::zero(modulus) })
            .collect();
        Self { degree, modulus, entries }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn entry(&self, i: usize, j: usize) -> &CyclotomicNumber<T> {
        &self.entries[i * self.degree + j]
    }

    pub fn change_modulus(&self, target: u64) -> Result<Self> {
        Ok(Self {
            degree: self.degree,
            modulus: target,
            entries: self.entries.iter().map(|x| x.change_modulus(target)).collect::<Result<_>>()?,
        })
    }

    fn unified(&self, other: &Self) -> Result<(Self, Self)> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        let m = lcm(self.modulus, other.modulus);
        Ok((self.change_modulus(m)?, other.change_modulus(m)?))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.modulus != other.modulus || self.degree != other.degree {
            let (a, b) = self.unified(other)?;
            return a.mul(&b);
        }
        let n = self.degree;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = CyclotomicNumber::zero(self.modulus);
                for k in 0..n {
                    let a = self.entry(i, k);
                    let b = other.entry(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(&a.mul(b));
                    }
                }
                entries.push(acc);
            }
        }
        Ok(Self { degree: n, modulus: self.modulus, entries })
    }

    pub fn scale(&self, x: &CyclotomicNumber<T>) -> Self {
        let m = lcm(self.modulus, x.modulus());
        let x = x.change_modulus(m).unwrap();
        Self {
            degree: self.degree,
            modulus: m,
            entries: self.entries.iter().map(|e| e.change_modulus(m).unwrap().mul(&x)).collect(),
        }
    }

    pub fn trace(&self) -> CyclotomicNumber<T> {
        (0..self.degree).fold(CyclotomicNumber::zero(self.modulus), |acc, i| acc.add(self.entry(i, i)))
    }

    /// Inverse by exact Gauss–Jordan elimination.
    pub fn inv(&self) -> Result<Self> {
        let n = self.degree;
        let m = self.modulus;
        let mut a: Vec<Vec<CyclotomicNumber<T>>> =
            (0..n).map(|i| (0..n).map(|j| self.entry(i, j).clone()).collect()).collect();
        let mut b: Vec<Vec<CyclotomicNumber<T>>> = (0..n)
            .map(|i| {
                (0..n).map(|j| if i == j { CyclotomicNumber::one(m) } else { CyclotomicNumber::zero(m) }).collect()
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(Error::Singular)?;
            a.swap(col, pivot);
            b.swap(col, pivot);
            let inv = a[col][col].inv()?;
            for j in 0..n {
                a[col][j] = a[col][j].mul(&inv);
                b[col][j] = b[col][j].mul(&inv);
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let f = a[r][col].clone();
                    for j in 0..n {
                        a[r][j] = a[r][j].sub(&f.mul(&a[col][j]));
                        b[r][j] = b[r][j].sub(&f.mul(&b[col][j]));
                    }
                }
            }
        }
        Self::from_rows(b)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.degree, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).unwrap();
            }
            base = base.mul(&base).unwrap();
            e >>= 1;
        }
        acc
    }

    /// The scalar `x` if the matrix equals `x·I`.
    pub fn as_scalar(&self) -> Option<CyclotomicNumber<T>> {
        let d = self.entry(0, 0);
        let ok = (0..self.degree).all(|i| {
            (0..self.degree).all(|j| {
                let e = self.entry(i, j);
                if i == j {
                    e == d
                } else {
                    e.is_zero()
                }
            })
        });
        ok.then(|| d.clone())
    }

    pub fn is_identity(&self) -> bool {
        self.as_scalar().is_some_and(|x| x == CyclotomicNumber::one(self.modulus))
    }

    pub fn to_record(&self) -> DenseRecord {
        DenseRecord {
            degree: self.degree,
            modulus: self.modulus,
            rows: (0..self.degree).map(|i| (0..self.degree).map(|j| self.entry(i, j).to_record()).collect()).collect(),
        }
    }

    pub fn from_record(rec: &DenseRecord) -> Result<Self> {
        let rows = rec
            .rows
            .iter()
            .map(|r| r.iter().map(CyclotomicNumber::from_record).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let m = Self::from_rows(rows)?;
        if m.modulus != rec.modulus {
            return m.change_modulus(rec.modulus);
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use crate::{Cyclotomic, Matrix};

    #[test]
    fn identity_and_trace() {
        let id = Matrix::identity(3, 1);
        assert_eq!(id.trace(), Cyclotomic::from_int(3, 1));
        let x = Matrix::from_rows(vec![
            vec![Cyclotomic::root(4, 1), Cyclotomic::from_int(2, 1)],
            vec![Cyclotomic::zero(1), Cyclotomic::root(3, 1)],
        ])
        .unwrap();
        assert_eq!(Matrix::identity(2, 12).mul(&x).unwrap(), x);
        assert!(x.mul(&x.inv().unwrap()).unwrap().is_identity());
    }

    #[test]
    fn singular() {
        let z = Matrix::from_rows(vec![
            vec![Cyclotomic::one(1), Cyclotomic::one(1)],
            vec![Cyclotomic::one(1), Cyclotomic::one(1)],
        ])
        .unwrap();
        assert!(z.inv().is_err());
    }
}
