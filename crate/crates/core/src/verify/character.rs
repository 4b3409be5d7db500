//! Character norms and irreducibility.

use super::closure::ClosedGroup;
use crate::cyclotomic::{reduce_int, CyclotomicNumber, DenseMatrix, Scalar};
use crate::error::{Error, Result};
use crate::monomial::MonomialElement;

fn certify(total: Vec<i64>, modulus: u64, order: usize) -> Result<u64> {
    let reduced = reduce_int(&total, modulus);
    let c = reduced[0];
    if reduced[1..].iter().any(|&x| x != 0) || c < 0 || c % order as i64 != 0 {
        return Err(Error::Inconsistent(format!("character norm {reduced:?}/{order} is not an integer")));
    }
    Ok((c / order as i64) as u64)
}

/// `(1/|G|)·Σ_g |tr g|²`, computed exactly in ℚ(ζ_M).
pub fn character_norm(g: &ClosedGroup<MonomialElement>) -> Result<u64> {
    let m = g.modulus();
    let mut total = vec![0i64; m as usize];
    let mut fixed = Vec::with_capacity(g.degree());
    for x in g.elements() {
        fixed.clear();
        fixed.extend(x.perm.fixed_points().map(|i| x.diag.exps()[i]));
        for &a in &fixed {
            for &b in &fixed {
                total[((a + m - b) % m) as usize] += 1;
            }
        }
    }
    certify(total, m, g.order())
}

/// The trace of a monomial element as an integer combination of `ζ_M` powers.
pub fn monomial_trace(x: &MonomialElement) -> Vec<i64> {
    let mut v = vec![0i64; x.modulus() as usize];
    for i in x.perm.fixed_points() {
        v[x.diag.exps()[i] as usize] += 1;
    }
    v
}

/// Dense variant of [`character_norm`].
pub fn dense_character_norm<T: Scalar>(g: &ClosedGroup<DenseMatrix<T>>) -> Result<u64> {
    let first = g.generators.first().ok_or_else(|| Error::Inconsistent("empty group".into()))?;
    let mut acc = CyclotomicNumber::<T>::zero(first.modulus());
    for x in g.elements() {
        let t = x.trace();
        acc = acc.add(&t.mul(&t.conj()));
    }
    let sum = acc
        .as_rational()
        .and_then(|r| r.to_integer())
        .ok_or_else(|| Error::Inconsistent("character norm is not an integer".into()))?;
    if sum < 0 || sum % g.order() as i64 != 0 {
        return Err(Error::Inconsistent(format!("character norm {sum}/{} is not an integer", g.order())));
    }
    Ok((sum / g.order() as i64) as u64)
}

/// Irreducibility from the diagonal subgroup, falling back on the character norm.
///
/// A non-scalar diagonal subgroup forces irreducibility; a scalar one with solvable
/// permutation part (order dividing `p(p−1)`) forces reducibility.
pub fn is_irreducible_fast(g: &ClosedGroup<MonomialElement>) -> Result<bool> {
    if g.diagonal_subgroup().iter().any(|d| !d.is_scalar()) {
        return Ok(true);
    }
    let p = g.degree();
    let phi = g.permutation_part().len();
    if (p * (p - 1)).is_multiple_of(phi) {
        return Ok(false);
    }
    Ok(character_norm(g)? == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{DiagExponents, Permutation};

    #[test]
    fn scalar_and_permutation_groups() {
        let z = MonomialElement::from_diag(DiagExponents::z(2, 4, 4).unwrap());
        assert_eq!(character_norm(&ClosedGroup::monomial(&[z], 100).unwrap()).unwrap(), 4);
        let s = MonomialElement::from_perm(Permutation::s(5));
        let u = MonomialElement::from_perm(Permutation::from_cycles(5, &[&[1, 2, 3]]));
        let a5 = ClosedGroup::monomial(&[s, u], 1000).unwrap();
        assert_eq!(a5.order(), 60);
        assert_eq!(character_norm(&a5).unwrap(), 2);
        assert!(!is_irreducible_fast(&a5).unwrap());
    }
}
