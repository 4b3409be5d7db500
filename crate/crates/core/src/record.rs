//! Class labels and their serialized group records.

use crate::cyclotomic::DenseRecord;
use crate::error::{Error, Result};
use crate::modules::{parse_module_tokens, ModuleLabel};
use crate::monomial::MonomialElement;
use crate::nonsolvable::{ns_label, NsFamily, NsLabel};
use crate::primitive::{PrimFamily, PrimLabel};
use crate::solvable::{SolvableFamily, SolvableLabel};
use crate::verify::{Budget, ClosedGroup};
use crate::{Matrix, Rational};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// The label of one conjugacy class in any of the lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupLabel {
    Solvable(SolvableLabel),
    NonSolvable(NsLabel),
    Primitive(PrimLabel),
}

/// Whether a group is monomial or primitive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Monomial,
    Primitive,
}

impl Kind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Kind::Monomial => "monomial",
            Kind::Primitive => "primitive",
        }
    }
}

impl GroupLabel {
    pub fn degree(&self) -> u64 {
        match self {
            Self::Solvable(l) => l.p,
            Self::NonSolvable(l) => l.p,
            Self::Primitive(l) => l.degree() as u64,
        }
    }

    pub fn order(&self) -> Option<u64> {
        match self {
            Self::Solvable(l) => l.order(),
            Self::NonSolvable(l) => l.order(),
            Self::Primitive(l) => Some(l.order()),
        }
    }

    pub fn kind(&self) -> Kind {
        match self {
            Self::Primitive(_) => Kind::Primitive,
            _ => Kind::Monomial,
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            Self::Solvable(l) => l.family.tag(),
            Self::NonSolvable(l) => l.family.tag(),
            Self::Primitive(l) => l.family.tag(),
        }
    }

    /// The module `G ∩ D` of a monomial label.
    pub fn module(&self) -> Option<&ModuleLabel> {
        match self {
            Self::Solvable(l) => Some(&l.module),
            Self::NonSolvable(l) => Some(&l.module),
            Self::Primitive(_) => None,
        }
    }

    /// Monomial generators on their least common modulus.
    pub fn monomial_generators(&self) -> Result<Vec<MonomialElement>> {
        match self {
            Self::Solvable(l) => l.generators(),
            Self::NonSolvable(l) => l.generators(),
            Self::Primitive(l) => Err(Error::InvalidLabel(format!("{l} is not monomial"))),
        }
    }

    /// Closure order of the assembled generators.
    pub fn closure_order(&self, budget: Budget) -> Result<usize> {
        match self {
            Self::Primitive(l) => Ok(ClosedGroup::dense(&l.generators::<Rational>()?, budget.dense)?.order()),
            _ => Ok(ClosedGroup::monomial(&self.monomial_generators()?, budget.monomial)?.order()),
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Solvable(l) => l.fmt(f),
            Self::NonSolvable(l) => l.fmt(f),
            Self::Primitive(l) => l.fmt(f),
        }
    }
}

fn value<'a>(tok: &'a str, key: &str) -> Result<&'a str> {
    match tok.split_once('=') {
        Some((k, v)) if k.trim() == key => Ok(v.trim()),
        _ => Err(Error::MalformedToken(tok.to_string())),
    }
}

fn number<T: FromStr>(tok: &str, key: &str) -> Result<T> {
    value(tok, key)?.parse().map_err(|_| Error::MalformedToken(tok.to_string()))
}

fn checked(label: SolvableLabel) -> Result<GroupLabel> {
    if label.is_member() {
        Ok(GroupLabel::Solvable(label))
    } else {
        Err(Error::InvalidLabel(label.to_string()))
    }
}

/// `⟨s, A⟩` for a bare module label: the member of an L family with untwisted `s`.
fn bare_module(module: ModuleLabel) -> Result<GroupLabel> {
    let p = module.p;
    for family in [SolvableFamily::L1, SolvableFamily::L3, SolvableFamily::L4] {
        let l = SolvableLabel { p, family, i: 0, a: 0, c: 0, module: module.clone() };
        if l.is_member() {
            return Ok(GroupLabel::Solvable(l));
        }
    }
    Err(Error::InvalidLabel(format!("{module}: ⟨s, A⟩ is not a listed class")))
}

impl FromStr for GroupLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.split(';').map(str::trim).filter(|t| !t.is_empty()).collect();
        let head = *tokens.first().ok_or_else(|| Error::InvalidLabel("empty label".into()))?;
        if head.contains('=') {
            return bare_module(parse_module_tokens(tokens.iter().copied())?);
        }
        let rest = &tokens[1..];
        if let Some(family) = SolvableFamily::from_tag(head) {
            if family.is_cyclic() {
                let i = number(rest.first().ok_or_else(|| Error::MalformedToken(s.into()))?, "i")?;
                let module = parse_module_tokens(rest[1..].iter().copied())?;
                return checked(SolvableLabel { p: module.p, family, i, a: 0, c: 0, module });
            }
            if rest.len() < 2 {
                return Err(Error::MalformedToken(s.into()));
            }
            let a = number(rest[0], "a")?;
            let c = number(rest[1], "c")?;
            let module = parse_module_tokens(rest[2..].iter().copied())?;
            return checked(SolvableLabel { p: module.p, family, i: 0, a, c, module });
        }
        if let Some(family) = NsFamily::from_tag(head) {
            return Ok(GroupLabel::NonSolvable(ns_label(family, parse_module_tokens(rest.iter().copied())?)?));
        }
        if let Some(family) = PrimFamily::from_tag(head) {
            if rest.len() != 2 {
                return Err(Error::MalformedToken(s.into()));
            }
            let deg: usize = number(rest[0], "deg")?;
            if deg != family.degree() {
                return Err(Error::MalformedToken(rest[0].into()));
            }
            return Ok(GroupLabel::Primitive(PrimLabel::new(family, number(rest[1], "n")?)?));
        }
        Err(Error::UnknownFamily(head.to_string()))
    }
}

/// One serialized generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GeneratorRecord {
    Monomial { perm: Vec<usize>, diag: Vec<u64> },
    Dense { dense: DenseRecord },
}

/// The exported form of one class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRecord {
    pub degree: u64,
    pub order: u64,
    pub kind: String,
    pub family: String,
    pub label: String,
    pub modulus: u64,
    pub generators: Vec<GeneratorRecord>,
}

impl GroupRecord {
    pub fn from_label(label: &GroupLabel) -> Result<Self> {
        let order =
            label.order().ok_or_else(|| Error::Unsupported(label.degree(), "group order exceeds 64 bits".into()))?;
        let (modulus, generators) = match label {
            GroupLabel::Primitive(l) => {
                let gens: Vec<Matrix> = l.generators()?;
                let m = gens.first().map_or(1, |g| g.modulus());
                (m, gens.iter().map(|g| GeneratorRecord::Dense { dense: g.to_record() }).collect())
            }
            _ => {
                let gens = label.monomial_generators()?;
                let m = gens.first().map_or(1, |g| g.modulus());
                let recs = gens
                    .iter()
                    .map(|g| GeneratorRecord::Monomial { perm: g.perm.images(), diag: g.diag.exps().to_vec() })
                    .collect();
                (m, recs)
            }
        };
        Ok(Self {
            degree: label.degree(),
            order,
            kind: label.kind().as_str().to_string(),
            family: label.family().to_string(),
            label: label.to_string(),
            modulus,
            generators,
        })
    }

    pub fn parse_label(&self) -> Result<GroupLabel> {
        self.label.parse()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    /// Parses a record and checks it against the one regenerated from its label.
    pub fn from_json(s: &str) -> Result<Self> {
        let rec: Self = serde_json::from_str(s).map_err(|e| Error::MalformedToken(e.to_string()))?;
        let fresh = Self::from_label(&rec.parse_label()?)?;
        if fresh != rec {
            return Err(Error::Inconsistent(format!("record for {} does not match its label", rec.label)));
        }
        Ok(rec)
    }

    /// Monomial generators decoded from the record.
    pub fn monomial_generators(&self) -> Result<Vec<MonomialElement>> {
        self.generators
            .iter()
            .map(|g| match g {
                GeneratorRecord::Monomial { perm, diag } => {
                    MonomialElement::from_record(&crate::monomial::MonomialRecord {
                        degree: self.degree as usize,
                        modulus: self.modulus,
                        perm: perm.clone(),
                        diag: diag.clone(),
                    })
                }
                GeneratorRecord::Dense { .. } => Err(Error::InvalidLabel(format!("{} is not monomial", self.label))),
            })
            .collect()
    }

    /// Dense generators decoded from the record.
    pub fn dense_generators(&self) -> Result<Vec<Matrix>> {
        if self.kind == Kind::Monomial.as_str() {
            return Ok(self.monomial_generators()?.iter().map(|g| g.to_dense()).collect());
        }
        self.generators
            .iter()
            .map(|g| match g {
                GeneratorRecord::Dense { dense } => Matrix::from_record(dense),
                GeneratorRecord::Monomial { .. } => Err(Error::Inconsistent("mixed generator kinds".into())),
            })
            .collect()
    }
}
