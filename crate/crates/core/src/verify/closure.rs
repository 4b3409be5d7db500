//! Exhaustive closure of finitely generated matrix groups.

use crate::cyclotomic::{DenseMatrix, Scalar};
use crate::error::{Error, Result};
use crate::monomial::{common_modulus, DiagExponents, MonomialElement, Permutation};
use indexmap::IndexSet;
use std::collections::BTreeSet;
use std::hash::Hash;

/// Default element budget for monomial closures.
pub const MONOMIAL_BUDGET: usize = 1_000_000;
/// Default element budget for dense closures.
pub const DENSE_BUDGET: usize = 10_000;

/// Element budgets for closures.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub monomial: usize,
    pub dense: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self { monomial: MONOMIAL_BUDGET, dense: DENSE_BUDGET }
    }
}

impl Budget {
    /// Defaults, with both limits replaced by `MONOCLASS_BUDGET` when set.
    pub fn from_env() -> Self {
        match std::env::var("MONOCLASS_BUDGET").ok().and_then(|v| v.trim().parse().ok()) {
            Some(n) => Self { monomial: n, dense: n },
            None => Self::default(),
        }
    }
}

/// A group element with an associative product.
pub trait GroupElement: Clone + Eq + Hash + Send + Sync {
    fn op(&self, other: &Self) -> Self;
}

impl GroupElement for MonomialElement {
    fn op(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

impl<T: Scalar> GroupElement for DenseMatrix<T> {
    fn op(&self, other: &Self) -> Self {
        self.mul(other).expect("closure elements share degree and modulus")
    }
}

/// A finite group given by its full element list.
#[derive(Clone, Debug)]
pub struct ClosedGroup<E: GroupElement> {
    pub generators: Vec<E>,
    elements: IndexSet<E>,
}

fn add_coset<E: GroupElement>(set: &mut IndexSet<E>, prev: usize, x: &E, budget: usize) -> Result<()> {
    for i in 0..prev {
        let e = set[i].op(x);
        set.insert(e);
    }
    if set.len() > budget {
        return Err(Error::BudgetExceeded { budget, what: "group closure".into() });
    }
    Ok(())
}

/// Dimino closure: each new generator extends the current subgroup by whole cosets.
pub fn closure<E: GroupElement>(gens: &[E], identity: E, budget: usize) -> Result<ClosedGroup<E>> {
    let mut set = IndexSet::new();
    set.insert(identity);
    let mut used: Vec<E> = Vec::new();
    for g in gens {
        if set.contains(g) {
            continue;
        }
        used.push(g.clone());
        let prev = set.len();
        add_coset(&mut set, prev, g, budget)?;
        let mut rep = prev;
        while rep < set.len() {
            let r = set[rep].clone();
            for s in &used {
                let e = r.op(s);
                if !set.contains(&e) {
                    add_coset(&mut set, prev, &e, budget)?;
                }
            }
            rep += prev;
        }
    }
    Ok(ClosedGroup { generators: gens.to_vec(), elements: set })
}

impl<E: GroupElement> ClosedGroup<E> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = &E> {
        self.elements.iter()
    }

    pub fn contains(&self, x: &E) -> bool {
        self.elements.contains(x)
    }

    pub fn identity(&self) -> &E {
        &self.elements[0]
    }

    /// `x⁻¹`, found by powering.
    pub fn inverse(&self, x: &E) -> E {
        let mut prev = x.clone();
        let mut cur = x.op(x);
        while &cur != self.identity() {
            prev = cur.clone();
            cur = cur.op(x);
        }
        if x == self.identity() {
            return x.clone();
        }
        prev
    }

    /// Conjugacy classes, in order of first appearance.
    pub fn conjugacy_classes(&self) -> Vec<Vec<E>> {
        let pairs: Vec<(E, E)> = self.generators.iter().map(|g| (self.inverse(g), g.clone())).collect();
        let mut seen = vec![false; self.order()];
        let mut classes = Vec::new();
        for start in 0..self.order() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut class = vec![self.elements[start].clone()];
            let mut k = 0;
            while k < class.len() {
                for (gi, g) in &pairs {
                    let y = gi.op(&class[k]).op(g);
                    let idx = self.elements.get_index_of(&y).expect("closed under conjugation");
                    if !seen[idx] {
                        seen[idx] = true;
                        class.push(y);
                    }
                }
                k += 1;
            }
            classes.push(class);
        }
        classes
    }

    /// True if some non-central conjugacy class consists of pairwise commuting elements,
    /// that is, if a non-central abelian normal subgroup exists.
    pub fn has_noncentral_abelian_normal_subgroup(&self) -> bool {
        self.conjugacy_classes()
            .iter()
            .any(|c| c.len() > 1 && c.iter().enumerate().all(|(i, x)| c[i + 1..].iter().all(|y| x.op(y) == y.op(x))))
    }

    /// Elements commuting with every generator.
    pub fn center(&self) -> Vec<E> {
        self.elements.iter().filter(|x| self.generators.iter().all(|g| x.op(g) == g.op(x))).cloned().collect()
    }
}

impl ClosedGroup<MonomialElement> {
    /// Closure of monomial generators lifted to a common modulus.
    pub fn monomial(gens: &[MonomialElement], budget: usize) -> Result<Self> {
        let first = gens.first().ok_or_else(|| Error::Inconsistent("empty generating set".into()))?;
        let gens = common_modulus(gens);
        let id = MonomialElement::identity(first.degree(), gens[0].modulus());
        closure(&gens, id, budget)
    }

    pub fn degree(&self) -> usize {
        self.generators[0].degree()
    }

    pub fn modulus(&self) -> u64 {
        self.generators[0].modulus()
    }

    /// `G ∩ D`.
    pub fn diagonal_subgroup(&self) -> Vec<DiagExponents> {
        self.elements.iter().filter(|x| x.perm.is_identity()).map(|x| x.diag.clone()).collect()
    }

    /// `φ(G)`.
    pub fn permutation_part(&self) -> BTreeSet<Permutation> {
        self.elements.iter().map(|x| x.perm.clone()).collect()
    }

    /// Some element whose permutation is a full cycle.
    pub fn full_cycle_element(&self) -> Option<&MonomialElement> {
        let p = self.degree() as u64;
        self.elements.iter().find(|x| x.perm.order() == p && x.perm.fixed_points().next().is_none())
    }
}

impl<T: Scalar> ClosedGroup<DenseMatrix<T>> {
    /// Closure of dense generators lifted to a common modulus.
    pub fn dense(gens: &[DenseMatrix<T>], budget: usize) -> Result<Self> {
        let first = gens.first().ok_or_else(|| Error::Inconsistent("empty generating set".into()))?;
        let m = gens.iter().fold(1, |acc, g| num_integer::lcm(acc, g.modulus()));
        let gens = gens.iter().map(|g| g.change_modulus(m)).collect::<Result<Vec<_>>>()?;
        closure(&gens, DenseMatrix::identity(first.degree(), m), budget)
    }
}
