//! Full classification by degree and order.

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::nonsolvable::enumerate_ns;
use crate::primitive::enumerate_prim;
use crate::record::{GroupLabel, GroupRecord};
use crate::solvable::enumerate_solvable;
use rayon::prelude::*;

/// Which lists to draw from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Restrict non-solvable permutation parts to Sym(p) and Alt(p).
    pub compulsory_only: bool,
    /// Include the primitive groups of degree 2 and 3.
    pub primitive: bool,
}

impl Default for Options {
    fn default() -> Self {
        Self { compulsory_only: false, primitive: true }
    }
}

/// Labels of all listed classes of degree `p` and order `m`: solvable, non-solvable, then primitive.
pub fn enumerate(p: u64, m: u64, opts: Options) -> Result<Vec<GroupLabel>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let ns = enumerate_ns(p, m, opts.compulsory_only)?;
    let mut out: Vec<GroupLabel> = enumerate_solvable(p, m).into_iter().map(GroupLabel::Solvable).collect();
    out.extend(ns.into_iter().map(GroupLabel::NonSolvable));
    if opts.primitive && p <= 3 {
        out.extend(enumerate_prim(p as usize, m).into_iter().map(GroupLabel::Primitive));
    }
    Ok(out)
}

/// Number of classes of each order `1..=max_order`.
pub fn count_per_order(p: u64, max_order: u64, opts: Options) -> Result<Vec<u64>> {
    enumerate(p, 1, opts)?;
    (1..=max_order).into_par_iter().map(|m| enumerate(p, m, opts).map(|v| v.len() as u64)).collect()
}

/// Number of classes of order at most `max_order`.
pub fn count(p: u64, max_order: u64, opts: Options) -> Result<u64> {
    Ok(count_per_order(p, max_order, opts)?.iter().sum())
}

/// Records of all irreducible subgroups of `GL(p, ℂ)` of order `m`, monomial then primitive.
pub fn classify_all(p: u64, m: u64) -> Result<Vec<GroupRecord>> {
    enumerate(p, m, Options::default())?.par_iter().map(GroupRecord::from_label).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_without_primitives() {
        let opts = Options { primitive: false, ..Options::default() };
        assert_eq!(count(3, 1, opts).unwrap(), 0);
        assert_eq!(count(3, 2000, opts).unwrap(), 2229);
    }

    #[test]
    fn degree_two_order_eight() {
        let recs = classify_all(2, 8).unwrap();
        assert!(!recs.is_empty() && recs.iter().all(|r| r.kind == "monomial"));
    }

    #[test]
    fn degree_three_order_sixty() {
        let recs = classify_all(3, 60).unwrap();
        let prim: Vec<_> = recs.iter().filter(|r| r.kind == "primitive").collect();
        assert_eq!(prim.len(), 1);
        assert_eq!(prim[0].family, "Alt5");
    }

    #[test]
    fn unsupported_degree() {
        assert!(matches!(enumerate(13, 13, Options::default()), Err(Error::Unsupported(13, _))));
        assert!(enumerate(4, 4, Options::default()).is_err());
    }
}
