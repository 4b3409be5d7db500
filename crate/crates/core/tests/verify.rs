use monoclass::modules::ModuleLabel;
use monoclass::monomial::{DiagExponents, MonomialElement, Permutation};
use monoclass::record::GroupLabel;
use monoclass::solvable::module_elements;
use monoclass::verify::audit::{nonsolvable_count_by_degree, solvable_count_by_degree};
use monoclass::verify::{
    audit, character_norm, conjugacy_search, is_irreducible_fast, oracle_compare, oracle_enumerate, AuditConfig,
    Budget, ClosedGroup,
};
use monoclass::Error;

fn closure(gens: &[MonomialElement]) -> ClosedGroup<MonomialElement> {
    ClosedGroup::monomial(gens, 1_000_000).unwrap()
}

fn labelled(label: &str) -> ClosedGroup<MonomialElement> {
    closure(&label.parse::<GroupLabel>().unwrap().monomial_generators().unwrap())
}

fn s(p: usize) -> MonomialElement {
    MonomialElement::from_perm(Permutation::s(p))
}

fn with_module(p: usize, module: &str) -> ClosedGroup<MonomialElement> {
    let m: ModuleLabel = module.parse().unwrap();
    let mut gens = vec![s(p)];
    gens.extend(module_elements(&m).unwrap());
    closure(&gens)
}

#[test]
fn closure_examples() {
    assert_eq!(closure(&[s(5)]).order(), 5);
    assert_eq!(labelled("U1;p=5;Y=0,0,0").order(), 60);
    assert_eq!(labelled("V2;p=7;Y=0,0,0").order(), 168);
}

#[test]
fn budgets_are_explicit() {
    let r = MonomialElement::from_perm(Permutation::from_cycles(5, &[&[1, 2]]));
    let err = ClosedGroup::monomial(&[s(5), r], 100).unwrap_err();
    assert!(matches!(err, Error::BudgetExceeded { budget: 100, .. }));
}

#[test]
fn diagonal_and_permutation_parts() {
    let u = labelled("U1;p=5;Y=0,0,0;W[3]=1,0");
    assert_eq!(u.diagonal_subgroup().len(), 81);
    assert_eq!(u.permutation_part().len(), 60);
    let z = closure(&[MonomialElement::from_diag(DiagExponents::z(3, 6, 6).unwrap())]);
    assert_eq!(z.diagonal_subgroup().len(), z.order());
    assert_eq!(z.permutation_part().len(), 1);
    let l1 = labelled("L1;i=0;p=3;Y=1,1,0");
    assert_eq!(l1.diagonal_subgroup().len(), 9);
    assert_eq!(l1.permutation_part().len(), 3);
}

#[test]
fn character_norms() {
    let z4 = closure(&[MonomialElement::from_diag(DiagExponents::z(2, 4, 4).unwrap())]);
    assert_eq!(character_norm(&z4).unwrap(), 4);
    assert_eq!(character_norm(&labelled("U1;p=5;Y=0,0,0")).unwrap(), 1);
    let u = MonomialElement::from_perm(Permutation::from_cycles(5, &[&[1, 2, 3]]));
    let a5 = closure(&[s(5), u]);
    assert_eq!(a5.order(), 60);
    assert_eq!(character_norm(&a5).unwrap(), 2);
}

#[test]
fn fast_irreducibility() {
    for label in ["L3;i=0;p=3;Y=0,1,0;W[2]=1,0", "L3;i=0;p=5;Y=0,1,0;W[2]=1,0"] {
        assert!(is_irreducible_fast(&labelled(label)).unwrap());
    }
    let t = MonomialElement::from_perm(Permutation::t(3));
    let z = MonomialElement::from_diag(DiagExponents::z(3, 4, 4).unwrap());
    let g = closure(&[s(3), t, z]);
    assert!(!is_irreducible_fast(&g).unwrap());
    assert!(character_norm(&g).unwrap() > 1);
    assert!(is_irreducible_fast(&labelled("U1;p=5;Y=0,0,0")).unwrap());
}

#[test]
fn conjugacy_examples() {
    let g = labelled("L1;i=1;p=3;Y=1,1,0");
    let x = conjugacy_search(&g, &g, 100_000).unwrap().unwrap();
    assert!(g
        .generators
        .iter()
        .all(|y| g.contains(&y.lift(g.modulus()).unwrap().conjugate(&x.lift(g.modulus()).unwrap()))));
    let h = labelled("L1;i=0;p=3;Y=1,1,0");
    assert_eq!(conjugacy_search(&g, &h, 100_000).unwrap(), None);
    let a = with_module(5, "p=5;Y=1,1,1");
    let b = with_module(5, "p=5;Y=1,1,2");
    let x = conjugacy_search(&a, &b, 100_000).unwrap().expect("t conjugates the two modules");
    let sp = Permutation::s(5);
    assert!((0..5).all(|k| x.perm != sp.pow(k)));
    let l = num_integer::lcm(x.modulus(), b.modulus());
    for y in &a.generators {
        let c = y.lift(l).unwrap().conjugate(&x.lift(l).unwrap());
        assert!(b.elements().any(|z| z.lift(l).unwrap() == c));
    }
}

#[test]
fn oracle_examples() {
    let budget = Budget::default();
    let two = oracle_enumerate(2, 2, budget).unwrap();
    assert_eq!(two.len(), 1);
    assert_eq!(two[0].group.order(), 8);
    for (p, m) in [(2, 4), (2, 8), (3, 3), (3, 6)] {
        for r in oracle_compare(p, m, budget).unwrap() {
            assert!(r.discrepancies.is_empty(), "p={p} M={m}: {:?}", r.discrepancies);
            assert_eq!(r.oracle_classes, r.matched, "p={p} M={m} order {}", r.order);
        }
    }
    assert!(matches!(oracle_enumerate(7, 7, budget), Err(Error::BudgetExceeded { .. })));
}

#[test]
fn audits_pass() {
    let cfg = AuditConfig::default();
    let r = audit(5, 100, &cfg).unwrap();
    assert!(r.passed(), "{:?}", r.orders.iter().flat_map(|o| &o.failures).collect::<Vec<_>>());
    let cfg = AuditConfig { sample: Some(2), conjugacy_max_order: 0, ..AuditConfig::default() };
    let mut opts = cfg.options;
    opts.primitive = false;
    let r = audit(3, 2000, &AuditConfig { options: opts, ..cfg }).unwrap();
    assert_eq!(r.total, 2229);
    assert!(r.passed());
    let r = audit(5, 2000, &AuditConfig { options: opts, ..cfg }).unwrap();
    assert_eq!(r.total, 373);
}

#[test]
fn aggregated_counts() {
    let solvable = solvable_count_by_degree(64 * 81 * 25 * 7).unwrap();
    assert_eq!(solvable.interpretations_matching(684), vec!["aggregated"]);
    let ns = nonsolvable_count_by_degree(16 * 3 * 5u64.pow(6)).unwrap();
    assert_eq!(ns.per_degree.get(&5), Some(&25));
}
