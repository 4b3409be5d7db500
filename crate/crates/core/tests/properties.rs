use monoclass::classify::{count_per_order, enumerate, Options};
use monoclass::modules::{enumerate_modules, t_act};
use monoclass::monomial::{normalize_modulus, DiagExponents, MonomialElement, Permutation};
use monoclass::record::{GroupLabel, GroupRecord};
use monoclass::verify::{character_norm, is_irreducible_fast, ClosedGroup};
use monoclass::{Cyclotomic, Matrix, Rational};
use proptest::prelude::*;

fn cyclotomic(m: u64, coeffs: Vec<i64>) -> Cyclotomic {
    coeffs.into_iter().enumerate().fold(Cyclotomic::zero(m), |acc, (k, c)| {
        acc.add(&Cyclotomic::root(m, k as i64).mul(&Cyclotomic::from_int(c, m)))
    })
}

fn field_element() -> impl Strategy<Value = (u64, Vec<i64>)> {
    prop::sample::select(vec![3u64, 4, 5, 8, 12])
        .prop_flat_map(|m| (Just(m), prop::collection::vec(-4i64..=4, m as usize)))
}

fn permutation(p: usize) -> impl Strategy<Value = Permutation> {
    Just((0..p).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v.into_iter().map(|i| i + 1).collect::<Vec<_>>()).unwrap())
}

fn monomial(p: usize, m: u64) -> impl Strategy<Value = MonomialElement> {
    (prop::collection::vec(0..m as i64, p), permutation(p))
        .prop_map(move |(e, perm)| MonomialElement::new(DiagExponents::new(m, e), perm).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((m, a) in field_element(), b in prop::collection::vec(-4i64..=4, 12), c in prop::collection::vec(-4i64..=4, 12)) {
        let x = cyclotomic(m, a);
        let y = cyclotomic(12, b);
        let z = cyclotomic(12, c);
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert_eq!(x.mul(&y).conj(), x.conj().mul(&y.conj()));
        if !x.is_zero() {
            let one = Cyclotomic::one(m);
            prop_assert_eq!(x.mul(&x.inv().unwrap()), one);
        }
    }

    #[test]
    fn norm_is_rational((m, a) in field_element()) {
        let x = cyclotomic(m, a);
        prop_assert!(x.mul(&x.conj()).change_modulus(m).unwrap().coeffs().len() as u64 <= m);
        let n = x.mul(&x.conj());
        prop_assert_eq!(n.conj(), n);
    }

    #[test]
    fn monomial_group_laws(x in monomial(5, 12), y in monomial(5, 12), z in monomial(5, 12)) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert!(x.mul(&x.inv()).is_identity());
        prop_assert!(x.pow(x.order()).is_identity());
        let dense: Matrix = x.to_dense::<Rational>().mul(&y.to_dense()).unwrap();
        prop_assert_eq!(x.mul(&y).to_dense::<Rational>(), dense);
    }

    #[test]
    fn perm_action_matches_conjugation(e in prop::collection::vec(0i64..9, 5), sigma in permutation(5)) {
        let d = DiagExponents::new(9, e);
        let x = MonomialElement::from_perm(sigma.clone());
        let conj = MonomialElement::from_diag(d.clone()).conjugate(&x);
        prop_assert_eq!(conj.diag, d.act_perm(&sigma));
        prop_assert!(d.gamma().chi().is_identity());
    }

    #[test]
    fn normalization_preserves_matrices(x in monomial(3, 4)) {
        let lifted = x.lift(24).unwrap();
        let back = normalize_modulus(std::slice::from_ref(&lifted));
        prop_assert!(4 % back[0].modulus() == 0);
        prop_assert_eq!(back[0].lift(24).unwrap(), lifted);
    }

    #[test]
    fn extension_order(gens in prop::collection::vec(monomial(3, 6), 1..3)) {
        let g = ClosedGroup::monomial(&gens, 100_000).unwrap();
        prop_assert_eq!(g.order(), g.diagonal_subgroup().len() * g.permutation_part().len());
        let n = character_norm(&g).unwrap();
        prop_assert!(n >= 1);
    }

    #[test]
    fn fast_test_agrees_with_norm(e in prop::collection::vec(0i64..6, 3), with_t in any::<bool>(), p in prop::sample::select(vec![3usize, 5])) {
        let mut exps = e;
        exps.resize(p, 0);
        let mut gens = vec![
            MonomialElement::from_perm(Permutation::s(p)),
            MonomialElement::from_diag(DiagExponents::new(6, exps)),
        ];
        if with_t {
            gens.push(MonomialElement::from_perm(Permutation::t(p)));
        }
        let g = ClosedGroup::monomial(&gens, 200_000).unwrap();
        prop_assert_eq!(is_irreducible_fast(&g).unwrap(), character_norm(&g).unwrap() == 1);
    }

    #[test]
    fn t_action_has_order_dividing_p_minus_one(p in prop::sample::select(vec![3u64, 5, 7]), o in 1u64..400) {
        for label in enumerate_modules(p, o) {
            let mut x = label.clone();
            for _ in 1..p {
                x = t_act(&x);
                prop_assert_eq!(x.order(), label.order());
            }
            prop_assert_eq!(x, label);
        }
    }

    #[test]
    fn labels_round_trip(p in prop::sample::select(vec![2u64, 3, 5, 7]), m in 1u64..600) {
        for label in enumerate(p, m, Options::default()).unwrap() {
            let again: GroupLabel = label.to_string().parse().unwrap();
            prop_assert_eq!(&again, &label);
            prop_assert_eq!(again.order(), Some(m));
            let rec = GroupRecord::from_label(&label).unwrap();
            prop_assert_eq!(GroupRecord::from_json(&rec.to_json()).unwrap(), rec);
        }
    }

    #[test]
    fn counts_match_enumeration(p in prop::sample::select(vec![2u64, 3, 5, 7]), max in 1u64..300) {
        let opts = Options::default();
        let counts = count_per_order(p, max, opts).unwrap();
        for (i, c) in counts.iter().enumerate() {
            prop_assert_eq!(*c as usize, enumerate(p, i as u64 + 1, opts).unwrap().len());
        }
    }

    #[test]
    fn listed_groups_have_declared_order(p in prop::sample::select(vec![3u64, 5, 7]), m in 1u64..500) {
        let opts = Options { primitive: false, ..Options::default() };
        for label in enumerate(p, m, opts).unwrap() {
            let g = ClosedGroup::monomial(&label.monomial_generators().unwrap(), 1_000_000).unwrap();
            prop_assert_eq!(g.order() as u64, m);
            prop_assert!(g.diagonal_subgroup().iter().any(|d| !d.is_scalar()) || matches!(label, GroupLabel::NonSolvable(_)));
            prop_assert_eq!(character_norm(&g).unwrap(), 1);
        }
    }
}
