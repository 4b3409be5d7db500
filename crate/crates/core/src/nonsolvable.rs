//! Non-solvable permutation parts: Sym(p), Alt(p), and the exceptional degrees 5, 7, 11, 23.

use crate::arith::{factorial, is_prime};
use crate::error::{Error, Result};
use crate::modules::{enumerate_modules, in_a_p, in_a_q, in_a_s, in_a_v, narray, ModuleLabel};
use crate::monomial::{normalize_modulus, DiagExponents, MonomialElement, Permutation};
use crate::solvable::module_elements;
use std::fmt;

/// Family tags of the non-solvable lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NsFamily {
    R0,
    R1,
    U0,
    U1,
    V0,
    V1,
    V2,
    P11,
    Q11_0,
    Q11_1,
    Q23,
}

impl NsFamily {
    pub const ALL: [NsFamily; 11] = [
        Self::R0,
        Self::R1,
        Self::U0,
        Self::U1,
        Self::V0,
        Self::V1,
        Self::V2,
        Self::P11,
        Self::Q11_0,
        Self::Q11_1,
        Self::Q23,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Self::R0 => "R0",
            Self::R1 => "R1",
            Self::U0 => "U0",
            Self::U1 => "U1",
            Self::V0 => "V0",
            Self::V1 => "V1",
            Self::V2 => "V2",
            Self::P11 => "P11",
            Self::Q11_0 => "Q11_0",
            Self::Q11_1 => "Q11_1",
            Self::Q23 => "Q23",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.tag() == tag)
    }

    /// Families present for every prime degree `p ≥ 5`.
    pub fn is_compulsory(&self) -> bool {
        matches!(self, Self::R0 | Self::R1 | Self::U0)
    }

    /// `|φ(G)|` in degree `p`.
    pub fn perm_order(&self, p: u64) -> u64 {
        match self {
            Self::R0 | Self::R1 => factorial(p),
            Self::U0 | Self::U1 => factorial(p) / 2,
            Self::V0 | Self::V1 | Self::V2 => 168,
            Self::P11 => 660,
            Self::Q11_0 | Self::Q11_1 => 7920,
            Self::Q23 => 10_200_960,
        }
    }
}

/// One class of the non-solvable lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NsLabel {
    pub p: u64,
    pub family: NsFamily,
    /// Twist index, determined by the module.
    pub n: u32,
    pub module: ModuleLabel,
}

/// `(q, d)` with `p = (q^d − 1)/(q − 1)` for a prime power `q` and prime `d`, if any.
pub fn projective_parameters(p: u64) -> Option<(u64, u32)> {
    for q in 2..p {
        let fac = crate::arith::factorize(q);
        if fac.len() != 1 {
            continue;
        }
        let mut d = 2u32;
        while let Some(x) = q.checked_pow(d) {
            let v = (x - 1) / (q - 1);
            if v > p {
                break;
            }
            if v == p && is_prime(d as u64) {
                return Some((q, d));
            }
            d += 1;
        }
    }
    None
}

/// True if degree `p` has a projective permutation family this library does not implement.
pub fn has_unsupported_family(p: u64) -> bool {
    !matches!(p, 2 | 3 | 5 | 7) && projective_parameters(p).is_some()
}

fn rstar(module: &ModuleLabel) -> bool {
    let w = module.p - 1;
    let (j, l) = (module.y.j as u64, module.y.l);
    (j != 0 && j % w == 0) || ((j + 1) % w == 0 && l == 0) || (j == 0 && l == 0 && !narray(module).is_zero())
}

impl NsLabel {
    pub fn order(&self) -> Option<u64> {
        self.module.order()?.checked_mul(self.family.perm_order(self.p))
    }

    /// Re-checks the defining membership clauses of the family.
    pub fn is_member(&self) -> bool {
        let p = self.p;
        let m = &self.module;
        if p < 5 || m.p != p {
            return false;
        }
        let t2 = m.tuple(2);
        match self.family {
            NsFamily::R0 => in_a_s(m) && rstar(m) && self.n == 0,
            NsFamily::R1 => in_a_s(m) && rstar(m) && self.n == m.scalar_exponent(2),
            NsFamily::U0 => in_a_s(m) && rstar(m) && self.n == 0,
            NsFamily::U1 => p == 5 && in_a_s(m) && self.n == m.tuple(3)[0],
            NsFamily::V0 => p == 7 && in_a_v(m) && !m.is_scalar() && self.n == 0,
            NsFamily::V1 => p == 7 && in_a_v(m) && !in_a_s(m) && self.n == t2[0] && self.n >= 1,
            NsFamily::V2 => p == 7 && in_a_s(m) && self.n == t2[0],
            NsFamily::P11 => p == 11 && in_a_p(m) && !m.is_scalar() && self.n == 0,
            NsFamily::Q11_0 => p == 11 && in_a_s(m) && !m.is_scalar() && self.n == 0,
            NsFamily::Q11_1 => p == 11 && in_a_s(m) && self.n == t2[0],
            NsFamily::Q23 => p == 23 && in_a_q(m) && !m.is_scalar() && self.n == 0,
        }
    }

    pub fn generators(&self) -> Result<Vec<MonomialElement>> {
        assemble_ns(self)
    }
}

impl fmt::Display for NsLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.family.tag(), self.module)
    }
}

/// Builds the label of `family` over `module`, deriving the twist index.
pub fn ns_label(family: NsFamily, module: ModuleLabel) -> Result<NsLabel> {
    let p = module.p;
    let n = match family {
        NsFamily::R1 => module.scalar_exponent(2),
        NsFamily::U1 if p == 5 => module.tuple(3)[0],
        NsFamily::V1 | NsFamily::V2 | NsFamily::Q11_1 if p == 7 || p == 11 => module.tuple(2)[0],
        _ => 0,
    };
    let label = NsLabel { p, family, n, module };
    if !label.is_member() {
        return Err(Error::InvalidLabel(label.to_string()));
    }
    Ok(label)
}

/// Labels of the non-solvable lists with group order `m`.
///
/// With `compulsory_only`, only the Sym(p)/Alt(p) families are produced; otherwise degrees
/// carrying an unimplemented projective family are rejected.
pub fn enumerate_ns(p: u64, m: u64, compulsory_only: bool) -> Result<Vec<NsLabel>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !compulsory_only && has_unsupported_family(p) {
        let (q, d) = projective_parameters(p).unwrap();
        return Err(Error::Unsupported(p, format!("projective family PSL({d},{q}) is not implemented")));
    }
    let mut out = Vec::new();
    if p < 5 {
        return Ok(out);
    }
    for family in NsFamily::ALL {
        if compulsory_only && !family.is_compulsory() {
            continue;
        }
        let po = family.perm_order(p);
        if po == u64::MAX || !m.is_multiple_of(po) {
            continue;
        }
        for module in enumerate_modules(p, m / po) {
            if let Ok(l) = ns_label(family, module) {
                out.push(l);
            }
        }
    }
    Ok(out)
}

/// The permutation `r`, `w`, `v`, `w₁`, `w₂` or the degree-23 generator for a family.
pub fn perm_constants(p: u64, family: NsFamily) -> Result<Permutation> {
    let pu = p as usize;
    let mismatch = || Error::InvalidLabel(format!("family {} does not exist in degree {p}", family.tag()));
    Ok(match family {
        NsFamily::R0 | NsFamily::R1 if p >= 5 => Permutation::from_cycles(pu, &[&[1, 2]]),
        NsFamily::U0 | NsFamily::U1 if p >= 5 => Permutation::from_cycles(pu, &[&[1, 2, 3]]),
        NsFamily::V0 | NsFamily::V1 | NsFamily::V2 if p == 7 => Permutation::from_cycles(7, &[&[1, 2], &[3, 5]]),
        NsFamily::P11 if p == 11 => Permutation::from_cycles(11, &[&[1, 7], &[2, 3], &[4, 8], &[5, 9]]),
        NsFamily::Q11_0 | NsFamily::Q11_1 if p == 11 => {
            Permutation::from_cycles(11, &[&[1, 3], &[2, 8], &[4, 7], &[5, 6]])
        }
        NsFamily::Q23 if p == 23 => Permutation::from_cycles(
            23,
            &[&[1, 3], &[4, 19], &[5, 17], &[6, 9], &[7, 8], &[10, 16], &[12, 15], &[13, 18]],
        ),
        _ => return Err(mismatch()),
    })
}

/// Twisting diagonals `c_n`, `g_n`, `h_n`, `d_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwistKind {
    C,
    G,
    H,
    D,
}

/// The twist diagonal of `kind` with index `n`.
pub fn twist_diagonal(kind: TwistKind, n: u32) -> DiagExponents {
    let (m, powers): (u64, &[i64]) = match kind {
        TwistKind::C => (3u64.pow(n), &[0, 1, -1, -1, 1]),
        TwistKind::G => (2u64.pow(n), &[0, 0, 0, 1, 0, -1, 0]),
        TwistKind::H => (2u64.pow(n), &[1, 1, 0, -1, 0, 0, -1]),
        TwistKind::D => (2u64.pow(n), &[1, -1, -1, 0, -1, 1, 0, 1, 0, 0, 0]),
    };
    DiagExponents::from_root_powers(m, powers)
}

/// Generators of the non-solvable group named by `label`.
pub fn assemble_ns(label: &NsLabel) -> Result<Vec<MonomialElement>> {
    if !label.is_member() {
        return Err(Error::InvalidLabel(label.to_string()));
    }
    let p = label.p as usize;
    let n = label.n;
    let perm = MonomialElement::from_perm(perm_constants(label.p, label.family)?);
    let twisted = |d: DiagExponents| perm.mul(&MonomialElement::from_diag(d));
    let second = match label.family {
        NsFamily::R1 => {
            let m = 2u64.pow(n + 1);
            twisted(DiagExponents::z(p, m, m)?)
        }
        NsFamily::U1 => twisted(twist_diagonal(TwistKind::C, n + 1)),
        NsFamily::V1 => twisted(twist_diagonal(TwistKind::G, n)),
        NsFamily::V2 => twisted(twist_diagonal(TwistKind::H, n + 1)),
        NsFamily::Q11_1 => twisted(twist_diagonal(TwistKind::D, n + 1)),
        _ => perm,
    };
    let mut gens = vec![MonomialElement::from_perm(Permutation::s(p)), second];
    gens.extend(module_elements(&label.module)?);
    Ok(normalize_modulus(&gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_degrees() {
        assert_eq!(projective_parameters(7), Some((2, 3)));
        assert_eq!(projective_parameters(13), Some((3, 3)));
        assert_eq!(projective_parameters(17), Some((16, 2)));
        assert_eq!(projective_parameters(11), None);
        assert_eq!(projective_parameters(23), None);
        assert!(has_unsupported_family(13) && !has_unsupported_family(11) && !has_unsupported_family(7));
    }

    #[test]
    fn order_60_in_degree_5() {
        let l = enumerate_ns(5, 60, false).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l[0].family, NsFamily::U1);
        assert_eq!(l[0].n, 0);
    }

    #[test]
    fn order_168_in_degree_7() {
        let l = enumerate_ns(7, 168, false).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!((l[0].family, l[0].n), (NsFamily::V2, 0));
    }

    #[test]
    fn unsupported() {
        assert!(matches!(enumerate_ns(13, 13, false), Err(Error::Unsupported(13, _))));
        assert!(enumerate_ns(13, 13, true).unwrap().is_empty());
    }

    #[test]
    fn perms() {
        assert_eq!(perm_constants(7, NsFamily::V0).unwrap().images(), vec![2, 1, 5, 4, 3, 6, 7]);
        assert!(perm_constants(5, NsFamily::V0).is_err());
    }
}
