use monoclass::classify::{classify_all, enumerate, Options};
use monoclass::monomial::{MonomialElement, Permutation};
use monoclass::nonsolvable::{enumerate_ns, perm_constants, NsFamily};
use monoclass::primitive::{enumerate_prim, PrimFamily};
use monoclass::record::{GroupLabel, GroupRecord};
use monoclass::solvable::{enumerate_lstar, enumerate_mstar, SolvableFamily};
use monoclass::verify::{character_norm, dense_character_norm, ClosedGroup};
use monoclass::{Error, Matrix, Rational};

fn parse(s: &str) -> GroupLabel {
    s.parse().unwrap()
}

fn monomial_closure(label: &str) -> ClosedGroup<MonomialElement> {
    ClosedGroup::monomial(&parse(label).monomial_generators().unwrap(), 1_000_000).unwrap()
}

fn dense_closure(label: &str) -> ClosedGroup<Matrix> {
    let GroupLabel::Primitive(l) = parse(label) else { panic!("{label} is not primitive") };
    ClosedGroup::dense(&l.generators::<Rational>().unwrap(), 10_000).unwrap()
}

fn commutator(x: &MonomialElement, y: &MonomialElement) -> MonomialElement {
    x.inv().mul(&y.inv()).mul(x).mul(y)
}

#[test]
fn order_27_in_degree_3() {
    let l1: Vec<String> =
        enumerate_lstar(3, 27).into_iter().filter(|l| l.family == SolvableFamily::L1).map(|l| l.to_string()).collect();
    assert_eq!(l1, vec!["L1;i=0;p=3;Y=1,1,0", "L1;i=1;p=3;Y=1,1,0"]);
    assert!(enumerate_lstar(3, 6).is_empty());
}

#[test]
fn twisted_l1_is_class_two() {
    let g = monomial_closure("L1;i=1;p=3;Y=1,1,0");
    assert_eq!(g.order(), 27);
    let center = g.center();
    let els: Vec<&MonomialElement> = g.elements().collect();
    assert!(els.iter().any(|x| els.iter().any(|y| x.mul(y) != y.mul(x))));
    for x in &els {
        for y in &els {
            assert!(center.contains(&commutator(x, y)));
        }
    }
}

#[test]
fn m_families() {
    let m1: Vec<_> = enumerate_mstar(3, 54).into_iter().filter(|l| l.family == SolvableFamily::M1).collect();
    assert_eq!(m1.len(), 2);
    assert_eq!(m1.iter().map(|l| l.c).collect::<Vec<_>>(), vec![0, 1]);
    for m in [9u64, 15, 21, 27, 45] {
        assert!(enumerate_mstar(3, m).is_empty());
    }
}

#[test]
fn assembled_solvable_orders() {
    assert_eq!(monomial_closure("L3;i=0;p=3;Y=0,1,0;W[2]=1,0").order(), 36);
    let m1 = monomial_closure("M1;a=1;c=0;p=3;Y=1,1,0");
    assert_eq!(m1.order(), 54);
    assert_eq!(m1.permutation_part().len(), 6);
}

#[test]
fn permutation_constants() {
    assert_eq!(perm_constants(7, NsFamily::V1).unwrap(), Permutation::from_cycles(7, &[&[1, 2], &[3, 5]]));
    assert_eq!(
        perm_constants(11, NsFamily::P11).unwrap(),
        Permutation::from_cycles(11, &[&[1, 7], &[2, 3], &[4, 8], &[5, 9]])
    );
    for p in [5, 7, 11, 13] {
        assert_eq!(perm_constants(p, NsFamily::R0).unwrap(), Permutation::from_cycles(p as usize, &[&[1, 2]]));
    }
}

#[test]
fn nonsolvable_examples() {
    let l = enumerate_ns(5, 60, false).unwrap();
    assert_eq!(l.iter().map(|x| x.to_string()).collect::<Vec<_>>(), vec!["U1;p=5;Y=0,0,0"]);
    let l = enumerate_ns(7, 168, false).unwrap();
    assert_eq!(l.iter().map(|x| x.to_string()).collect::<Vec<_>>(), vec!["V2;p=7;Y=0,0,0"]);
    for label in enumerate_ns(5, 240, false).unwrap() {
        let g = ClosedGroup::monomial(&label.generators().unwrap(), 1_000_000).unwrap();
        assert_eq!(g.order(), 240, "{label}");
        assert_eq!(character_norm(&g).unwrap(), 1);
    }
}

#[test]
fn nonsolvable_closures() {
    let u = monomial_closure("U1;p=5;Y=0,0,0");
    assert_eq!(u.order(), 60);
    assert_eq!(character_norm(&u).unwrap(), 1);
    let r = monomial_closure("R0;p=5;Y=4,1,0");
    assert_eq!(r.order(), 120 * 3125);
    assert_eq!(r.diagonal_subgroup().len(), 3125);
}

#[test]
fn twist_diagonal_subgroups() {
    for n in 1..=2u32 {
        let g = monomial_closure(&format!("U1;p=5;Y=0,0,0;W[3]={n},0"));
        assert_eq!(g.diagonal_subgroup().len() as u64, 3u64.pow(4 * n));
        assert_eq!(g.order() as u64, 60 * 3u64.pow(4 * n));
        assert!(g.diagonal_subgroup().iter().all(|d| d.exps().iter().sum::<u64>() % d.modulus() == 0));
    }
}

#[test]
fn unsupported_degrees_fail() {
    assert!(matches!(enumerate(13, 13 * 12, Options::default()), Err(Error::Unsupported(13, _))));
    assert!(matches!(enumerate(9, 9, Options::default()), Err(Error::NotPrime(9))));
}

#[test]
fn primitive_enumeration() {
    let tags = |d, m| enumerate_prim(d, m).iter().map(|l| (l.family, l.n)).collect::<Vec<_>>();
    assert_eq!(tags(2, 24), vec![(PrimFamily::A4a, 2), (PrimFamily::A4b, 2)]);
    assert_eq!(tags(3, 108), vec![(PrimFamily::C4_1, 3), (PrimFamily::C4_2, 3), (PrimFamily::C4_3, 3)]);
    assert!(tags(3, 1080).contains(&(PrimFamily::Alt6, 3)));
}

#[test]
fn primitive_closures() {
    for (label, order) in [("A5;deg=2;n=2", 120), ("Alt5;deg=3;n=1", 60), ("C4_1;deg=3;n=3", 108)] {
        let g = dense_closure(label);
        assert_eq!(g.order(), order, "{label}");
        assert_eq!(dense_character_norm(&g).unwrap(), 1);
    }
}

#[test]
fn full_classification_records() {
    let recs = classify_all(2, 8).unwrap();
    assert!(!recs.is_empty() && recs.iter().all(|r| r.kind == "monomial"));
    let recs = classify_all(3, 108).unwrap();
    let prim: Vec<&str> = recs.iter().filter(|r| r.kind == "primitive").map(|r| r.family.as_str()).collect();
    assert_eq!(prim, vec!["C4_1", "C4_2", "C4_3"]);
    let recs = classify_all(3, 60).unwrap();
    let prim: Vec<&GroupRecord> = recs.iter().filter(|r| r.kind == "primitive").collect();
    assert_eq!(prim.len(), 1);
    assert_eq!(prim[0].label, "Alt5;deg=3;n=1");
    let mono: Vec<&str> = recs.iter().filter(|r| r.kind == "monomial").map(|r| r.label.as_str()).collect();
    assert_eq!(mono, vec!["L2;i=1;p=3;Y=0,0,0;W[2]=1,0;W[5]=0,1"]);
}

#[test]
fn records_round_trip() {
    for p in [2u64, 3, 5, 7] {
        for m in [p * 4, p * p * 2, 60, 168] {
            for rec in classify_all(p, m).unwrap() {
                assert_eq!(GroupRecord::from_json(&rec.to_json()).unwrap(), rec);
                assert_eq!(rec.parse_label().unwrap().to_string(), rec.label);
                let order = match rec.kind.as_str() {
                    "monomial" => {
                        ClosedGroup::monomial(&rec.monomial_generators().unwrap(), 1_000_000).unwrap().order()
                    }
                    _ => ClosedGroup::dense(&rec.dense_generators().unwrap(), 10_000).unwrap().order(),
                };
                assert_eq!(order as u64, rec.order, "{}", rec.label);
            }
        }
    }
}

#[test]
fn bare_module_label() {
    let rec = GroupRecord::from_label(&parse("p=3;Y=1,1,0")).unwrap();
    assert_eq!((rec.order, rec.family.as_str()), (27, "L1"));
    assert_eq!(monomial_closure("p=3;Y=1,1,0").order(), 27);
    assert!(matches!("Z1;p=3;Y=1,1,0".parse::<GroupLabel>(), Err(Error::UnknownFamily(f)) if f == "Z1"));
}
