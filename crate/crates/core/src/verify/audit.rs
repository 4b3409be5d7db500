//! Per-order audits of the classification lists.

use super::character::{character_norm, dense_character_norm, is_irreducible_fast};
use super::closure::{Budget, ClosedGroup};
use super::conjugacy::{dense_invariants_differ, gl_conjugacy, Fingerprint};
use super::oracle::oracle_compare;
use crate::arith::factorize;
use crate::classify::{enumerate, Options};
use crate::error::Result;
use crate::monomial::MonomialElement;
use crate::nonsolvable::enumerate_ns;
use crate::record::GroupLabel;
use crate::solvable::enumerate_solvable;
use crate::{Matrix, Rational};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

/// Scope of an audit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AuditConfig {
    pub budget: Budget,
    pub options: Options,
    /// Largest number of classes closed per order; `None` closes every class.
    pub sample: Option<usize>,
    /// Same-order pairs are tested for conjugacy up to this order.
    pub conjugacy_max_order: u64,
    /// Primitive classes are closed as dense matrix groups up to this order.
    pub primitive_max_order: u64,
    /// Modulus for the exhaustive oracle cross-check, if any.
    pub oracle_modulus: Option<u64>,
}

impl Default for AuditConfig {
    fn default() -> Self {
        Self {
            budget: Budget::from_env(),
            options: Options::default(),
            sample: None,
            conjugacy_max_order: 200,
            primitive_max_order: 500,
            oracle_modulus: None,
        }
    }
}

/// One failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub label: String,
    pub check: String,
    pub detail: String,
}

/// Audit result for one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderReport {
    pub order: u64,
    pub family_counts: BTreeMap<String, u64>,
    pub checks_passed: u64,
    pub failures: Vec<Failure>,
}

/// Audit result for one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub degree: u64,
    pub max_order: u64,
    pub total: u64,
    pub orders: Vec<OrderReport>,
    /// Failures not attached to a single order, such as oracle mismatches.
    pub failures: Vec<Failure>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.orders.iter().all(|o| o.failures.is_empty())
    }

    pub fn checks_passed(&self) -> u64 {
        self.orders.iter().map(|o| o.checks_passed).sum()
    }

    pub fn failure_count(&self) -> usize {
        self.failures.len() + self.orders.iter().map(|o| o.failures.len()).sum::<usize>()
    }
}

struct Tally {
    passed: u64,
    failures: Vec<Failure>,
}

impl Tally {
    fn check(&mut self, label: &GroupLabel, check: &str, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(Failure { label: label.to_string(), check: check.into(), detail: detail() });
        }
    }

    fn error(&mut self, label: &GroupLabel, check: &str, e: crate::Error) {
        self.failures.push(Failure { label: label.to_string(), check: check.into(), detail: e.to_string() });
    }
}

/// Evenly spaced indices `0..n`, at most `k` of them.
fn sample_indices(n: usize, k: Option<usize>) -> Vec<usize> {
    match k {
        Some(k) if k < n => (0..k).map(|i| i * n / k).collect(),
        _ => (0..n).collect(),
    }
}

fn check_monomial(
    label: &GroupLabel,
    order: u64,
    budget: Budget,
    tally: &mut Tally,
) -> Option<(ClosedGroup<MonomialElement>, Fingerprint)> {
    let g = match label.monomial_generators().and_then(|gens| ClosedGroup::monomial(&gens, budget.monomial)) {
        Ok(g) => g,
        Err(e) => {
            tally.error(label, "closure", e);
            return None;
        }
    };
    tally.check(label, "closure order", g.order() as u64 == order, || format!("closure has order {}", g.order()));
    let diag = g.diagonal_subgroup().len();
    let perm = g.permutation_part().len();
    tally.check(label, "extension", g.order() == diag * perm, || format!("|G∩D| = {diag}, |φ(G)| = {perm}"));
    if let Some(a) = label.module().and_then(|m| m.order()) {
        tally.check(label, "diagonal order", diag as u64 == a, || {
            format!("diagonal subgroup has order {diag}, module {a}")
        });
    }
    match character_norm(&g) {
        Ok(n) => tally.check(label, "character norm", n == 1, || format!("norm {n}")),
        Err(e) => tally.error(label, "character norm", e),
    }
    if matches!(label, GroupLabel::Solvable(_)) {
        match is_irreducible_fast(&g) {
            Ok(b) => tally.check(label, "fast irreducibility", b, || "reported reducible".into()),
            Err(e) => tally.error(label, "fast irreducibility", e),
        }
    }
    let fp = Fingerprint::of(&g);
    Some((g, fp))
}

fn check_primitive(label: &GroupLabel, order: u64, budget: Budget, tally: &mut Tally) -> Option<ClosedGroup<Matrix>> {
    let GroupLabel::Primitive(l) = label else { return None };
    let g = match l.generators::<Rational>().and_then(|gens| ClosedGroup::dense(&gens, budget.dense)) {
        Ok(g) => g,
        Err(e) => {
            tally.error(label, "closure", e);
            return None;
        }
    };
    tally.check(label, "closure order", g.order() as u64 == order, || format!("closure has order {}", g.order()));
    match dense_character_norm(&g) {
        Ok(n) => tally.check(label, "character norm", n == 1, || format!("norm {n}")),
        Err(e) => tally.error(label, "character norm", e),
    }
    if l.family.is_solvable() {
        tally.check(label, "primitivity", !g.has_noncentral_abelian_normal_subgroup(), || {
            "non-central abelian normal subgroup found".into()
        });
    }
    Some(g)
}

/// Audits the classes of degree `p` and order `m`.
pub fn audit_order(p: u64, m: u64, config: &AuditConfig) -> Result<OrderReport> {
    let labels = enumerate(p, m, config.options)?;
    let mut family_counts = BTreeMap::new();
    for l in &labels {
        *family_counts.entry(l.family().to_string()).or_insert(0) += 1;
    }
    let mut tally = Tally { passed: 0, failures: Vec::new() };
    let mut monomial = Vec::new();
    let mut primitive = Vec::new();
    for i in sample_indices(labels.len(), config.sample) {
        let l = &labels[i];
        if matches!(l, GroupLabel::Primitive(_)) {
            if m > config.primitive_max_order {
                continue;
            }
            if let Some(g) = check_primitive(l, m, config.budget, &mut tally) {
                primitive.push((l, g));
            }
        } else if let Some((g, fp)) = check_monomial(l, m, config.budget, &mut tally) {
            monomial.push((l, g, fp));
        }
    }
    if m <= config.conjugacy_max_order {
        for (i, (a, ga, fa)) in monomial.iter().enumerate() {
            for (b, gb, fb) in &monomial[i + 1..] {
                match gl_conjugacy(ga, fa, gb, fb, config.budget.monomial) {
                    Ok(c) => tally.check(a, "non-conjugacy", c.is_none(), || format!("conjugate to {b}")),
                    Err(e) => tally.error(a, "non-conjugacy", e),
                }
            }
        }
        for (i, (a, ga)) in primitive.iter().enumerate() {
            for (b, gb) in &primitive[i + 1..] {
                match dense_invariants_differ(ga, gb) {
                    Ok(d) => tally.check(a, "non-conjugacy", d, || format!("invariants agree with {b}")),
                    Err(e) => tally.error(a, "non-conjugacy", e),
                }
            }
        }
    }
    tally.failures.sort_by(|x, y| (&x.label, &x.check, &x.detail).cmp(&(&y.label, &y.check, &y.detail)));
    Ok(OrderReport { order: m, family_counts, checks_passed: tally.passed, failures: tally.failures })
}

/// Audits every order `1..=m_max` in degree `p`.
pub fn audit(p: u64, m_max: u64, config: &AuditConfig) -> Result<AuditReport> {
    enumerate(p, 1, config.options)?;
    let mut orders: Vec<OrderReport> =
        (1..=m_max).into_par_iter().map(|m| audit_order(p, m, config)).collect::<Result<_>>()?;
    orders.sort_by_key(|o| o.order);
    let total = orders.iter().map(|o| o.family_counts.values().sum::<u64>()).sum();
    let mut failures = Vec::new();
    if let Some(modulus) = config.oracle_modulus {
        match oracle_compare(p, modulus, config.budget) {
            Ok(reports) => {
                for r in reports {
                    failures.extend(r.discrepancies.into_iter().map(|d| Failure {
                        label: format!("order {}", r.order),
                        check: format!("oracle modulus {modulus}"),
                        detail: d,
                    }));
                }
            }
            Err(e) => failures.push(Failure {
                label: format!("degree {p}"),
                check: format!("oracle modulus {modulus}"),
                detail: e.to_string(),
            }),
        }
    }
    Ok(AuditReport { degree: p, max_order: m_max, total, orders, failures })
}

/// Closes `k` classes spread evenly over all classes of order at most `m_max`, without
/// conjugacy tests.
pub fn audit_sample(p: u64, m_max: u64, k: usize, config: &AuditConfig) -> Result<AuditReport> {
    let mut labels = Vec::new();
    for m in 1..=m_max {
        labels.extend(enumerate(p, m, config.options)?.into_iter().map(|l| (m, l)));
    }
    let total = labels.len() as u64;
    let picked: Vec<(u64, GroupLabel)> =
        sample_indices(labels.len(), Some(k)).into_iter().map(|i| labels[i].clone()).collect();
    let mut orders: Vec<OrderReport> = picked
        .par_iter()
        .map(|(m, l)| {
            let mut tally = Tally { passed: 0, failures: Vec::new() };
            if matches!(l, GroupLabel::Primitive(_)) {
                check_primitive(l, *m, config.budget, &mut tally);
            } else {
                check_monomial(l, *m, config.budget, &mut tally);
            }
            let family_counts = [(l.family().to_string(), 1)].into_iter().collect();
            OrderReport { order: *m, family_counts, checks_passed: tally.passed, failures: tally.failures }
        })
        .collect();
    orders.sort_by_key(|o| o.order);
    Ok(AuditReport { degree: p, max_order: m_max, total, orders, failures: Vec::new() })
}

/// Class counts of order `m` per prime degree `p | m`, with their sum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AggregatedCount {
    pub order: u64,
    pub per_degree: BTreeMap<u64, u64>,
    pub aggregated: u64,
}

impl AggregatedCount {
    /// Which readings give `expected`: `"aggregated"` or `"degree p"`.
    pub fn interpretations_matching(&self, expected: u64) -> Vec<String> {
        let mut out = Vec::new();
        if self.aggregated == expected {
            out.push("aggregated".to_string());
        }
        out.extend(self.per_degree.iter().filter(|&(_, &c)| c == expected).map(|(p, _)| format!("degree {p}")));
        out
    }
}

fn aggregate(m: u64, count: impl Fn(u64) -> Result<u64>) -> Result<AggregatedCount> {
    let mut per_degree = BTreeMap::new();
    for (p, _) in factorize(m) {
        per_degree.insert(p, count(p)?);
    }
    Ok(AggregatedCount { order: m, aggregated: per_degree.values().sum(), per_degree })
}

/// Solvable monomial classes of order `m`, per degree `p | m` and summed.
pub fn solvable_count_by_degree(m: u64) -> Result<AggregatedCount> {
    aggregate(m, |p| Ok(enumerate_solvable(p, m).len() as u64))
}

/// Non-solvable monomial classes of order `m`, per supported degree `p | m` and summed.
pub fn nonsolvable_count_by_degree(m: u64) -> Result<AggregatedCount> {
    aggregate(m, |p| if p < 5 { Ok(0) } else { Ok(enumerate_ns(p, m, false)?.len() as u64) })
}

/// Orders `≤ m_max` with the most solvable classes in degree `p`.
pub fn orders_by_class_count(p: u64, m_max: u64) -> Vec<(u64, u64)> {
    let mut v: Vec<(u64, u64)> =
        (1..=m_max).filter(|m| m % p == 0).map(|m| (m, enumerate_solvable(p, m).len() as u64)).collect();
    v.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_audits_pass() {
        let cfg = AuditConfig::default();
        let r = audit(3, 60, &cfg).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.checks_passed() > 0);
        let r = audit(2, 24, &cfg).unwrap();
        assert!(r.passed());
        assert_eq!(r.orders[23].family_counts.get("A4_a"), Some(&1));
    }

    #[test]
    fn sampling_is_even() {
        assert_eq!(sample_indices(10, Some(3)), vec![0, 3, 6]);
        assert_eq!(sample_indices(2, Some(3)), vec![0, 1]);
    }
}
