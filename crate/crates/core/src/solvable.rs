//! The solvable lists: cyclic permutation part (L families) and non-cyclic solvable parts (M families).

use crate::arith::{divisors, gcd};
use crate::error::{Error, Result};
use crate::modules::{enumerate_modules, module_generators, narray, u_power_set, ModuleLabel};
use crate::monomial::{normalize_modulus, DiagExponents, MonomialElement, Permutation};
use std::fmt;

/// Family tags of the solvable lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SolvableFamily {
    L1,
    L2,
    L3,
    L4,
    M1,
    M2,
    M3,
}

impl SolvableFamily {
    pub const ALL: [SolvableFamily; 7] = [Self::L1, Self::L2, Self::L3, Self::L4, Self::M1, Self::M2, Self::M3];

    pub fn tag(&self) -> &'static str {
        match self {
            Self::L1 => "L1",
            Self::L2 => "L2",
            Self::L3 => "L3",
            Self::L4 => "L4",
            Self::M1 => "M1",
            Self::M2 => "M2",
            Self::M3 => "M3",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.tag() == tag)
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self, Self::L1 | Self::L2 | Self::L3 | Self::L4)
    }
}

/// One class of the solvable lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolvableLabel {
    pub p: u64,
    pub family: SolvableFamily,
    /// Twist `i ∈ {0,1}` of `s·z_{p^{k+1}}^i` (L families).
    pub i: u32,
    /// Proper divisor `a` of `p−1` (M families).
    pub a: u64,
    /// Twist `c` of `t^a·z_{mâ}^c` (M families).
    pub c: u64,
    pub module: ModuleLabel,
}

impl SolvableLabel {
    /// `â = (p−1)/a`.
    pub fn a_hat(&self) -> u64 {
        (self.p - 1) / self.a
    }

    /// `|G| = |φ(G)|·|A|`.
    pub fn order(&self) -> Option<u64> {
        let perm = if self.family.is_cyclic() { self.p } else { self.p * self.a_hat() };
        self.module.order()?.checked_mul(perm)
    }

    /// Re-checks the defining membership clauses of the family.
    pub fn is_member(&self) -> bool {
        let p = self.p;
        let y = self.module.y;
        let (j, k, l) = (y.j, y.k, y.l);
        let nsw = self.module.w_nonscalar();
        let n = narray(&self.module);
        let u_ok = || u_power_set(p, j).contains(&l);
        let jstep = || ((p - 1) / gcd(j as u64, p - 1).max(1)) as usize;
        match self.family {
            SolvableFamily::L1 => j == 1 && l == 0 && k >= 1 && !nsw && self.i <= 1,
            SolvableFamily::L2 => {
                self.i == 1
                    && l == 0
                    && ((j == 0 && k == 0) || k >= 1)
                    && (j >= 2 || nsw)
                    && (!(j == 0 && k == 0) || n.is_shift_minimal(1))
            }
            SolvableFamily::L3 => self.i == 0 && l == 0 && k >= 1 && (j >= 2 || nsw) && n.is_shift_minimal(1),
            SolvableFamily::L4 => {
                self.i == 0 && l >= 1 && j >= 1 && k >= 1 && (j >= 2 || nsw) && u_ok() && n.is_shift_minimal(jstep())
            }
            fam => {
                if p == 2 || self.a == 0 || self.a >= p - 1 || !(p - 1).is_multiple_of(self.a) {
                    return false;
                }
                let ah = self.a_hat();
                let base = n.is_shift_fixed(self.a as usize) && (l == 0 || (self.a * j as u64).is_multiple_of(p - 1));
                base && match fam {
                    SolvableFamily::M1 => l == 0 && j == 1 && n.is_zero() && self.c <= ah / 2,
                    SolvableFamily::M2 => l == 0 && (j >= 2 || !n.is_zero()) && n.is_shift_minimal(1) && self.c < ah,
                    _ => {
                        l > 0
                            && j >= 2
                            && (j as u64).is_multiple_of(ah)
                            && u_ok()
                            && n.is_shift_minimal(jstep())
                            && self.c < ah
                    }
                }
            }
        }
    }

    pub fn generators(&self) -> Result<Vec<MonomialElement>> {
        assemble_solvable(self)
    }
}

impl fmt::Display for SolvableLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.is_cyclic() {
            write!(f, "{};i={};{}", self.family.tag(), self.i, self.module)
        } else {
            write!(f, "{};a={};c={};{}", self.family.tag(), self.a, self.c, self.module)
        }
    }
}

/// Labels of the L lists with group order `m`.
pub fn enumerate_lstar(p: u64, m: u64) -> Vec<SolvableLabel> {
    let mut out = Vec::new();
    if !m.is_multiple_of(p) {
        return out;
    }
    for module in enumerate_modules(p, m / p) {
        let mk = |family, i| SolvableLabel { p, family, i, a: 0, c: 0, module: module.clone() };
        for cand in [
            mk(SolvableFamily::L1, 0),
            mk(SolvableFamily::L1, 1),
            mk(SolvableFamily::L2, 1),
            mk(SolvableFamily::L3, 0),
            mk(SolvableFamily::L4, 0),
        ] {
            if cand.is_member() {
                out.push(cand);
            }
        }
    }
    out
}

/// Labels of the M lists with group order `m` (`p` odd).
pub fn enumerate_mstar(p: u64, m: u64) -> Vec<SolvableLabel> {
    let mut out = Vec::new();
    if p == 2 {
        return out;
    }
    for a in divisors(p - 1) {
        if a == p - 1 {
            continue;
        }
        let ah = (p - 1) / a;
        if !m.is_multiple_of(p * ah) {
            continue;
        }
        for module in enumerate_modules(p, m / (p * ah)) {
            for family in [SolvableFamily::M1, SolvableFamily::M2, SolvableFamily::M3] {
                for c in 0..ah {
                    let cand = SolvableLabel { p, family, i: 0, a, c, module: module.clone() };
                    if cand.is_member() {
                        out.push(cand);
                    }
                }
            }
        }
    }
    out
}

/// All solvable labels of order `m`.
pub fn enumerate_solvable(p: u64, m: u64) -> Vec<SolvableLabel> {
    let mut out = enumerate_lstar(p, m);
    out.extend(enumerate_mstar(p, m));
    out
}

/// Module generators as diagonal monomial elements.
pub fn module_elements(module: &ModuleLabel) -> Result<Vec<MonomialElement>> {
    Ok(module_generators(module)?.into_iter().map(MonomialElement::from_diag).collect())
}

/// Generators `{s·z_{p^{k+1}}^i} ∪ A` or `{s, t^a·z_{mâ}^c} ∪ A`, on the least common modulus.
pub fn assemble_solvable(label: &SolvableLabel) -> Result<Vec<MonomialElement>> {
    if !label.is_member() {
        return Err(Error::InvalidLabel(label.to_string()));
    }
    let p = label.p as usize;
    let s = MonomialElement::from_perm(Permutation::s(p));
    let mut gens = Vec::new();
    if label.family.is_cyclic() {
        let pk = label.p.pow(label.module.y.k + 1);
        let z = MonomialElement::from_diag(DiagExponents::z(p, pk, pk)?.scale(label.i as i64));
        gens.push(s.mul(&z));
    } else {
        let ah = label.a_hat();
        let mm = label.module.p_prime_scalar_order() * ah;
        let ta = MonomialElement::from_perm(Permutation::t(p).pow(label.a));
        let z = MonomialElement::from_diag(DiagExponents::z(p, mm, mm)?.scale(label.c as i64));
        gens.push(s);
        gens.push(ta.mul(&z));
    }
    gens.extend(module_elements(&label.module)?);
    Ok(normalize_modulus(&gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(p: u64, max: u64) -> usize {
        (1..=max).map(|m| enumerate_solvable(p, m).len()).sum()
    }

    #[test]
    fn order_27() {
        let l = enumerate_lstar(3, 27);
        assert_eq!(l.iter().filter(|x| x.family == SolvableFamily::L1).count(), 2);
        assert!(enumerate_lstar(3, 6).is_empty());
    }

    #[test]
    fn m_examples() {
        let m54 = enumerate_mstar(3, 54);
        let m1: Vec<_> = m54.iter().filter(|x| x.family == SolvableFamily::M1).collect();
        assert_eq!(m1.len(), 2);
        assert!(enumerate_mstar(3, 18).iter().all(|x| x.family != SolvableFamily::M1));
    }

    #[test]
    fn small_table_value() {
        assert_eq!(count(3, 2000), 2229);
    }

    #[test]
    fn label_strings() {
        let x = &enumerate_lstar(3, 27)[0];
        assert!(x.to_string().starts_with("L"));
    }
}
