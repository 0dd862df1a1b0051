//! Property tests over randomly generated algebras and the operads built
//! from them.

mod common;

use atriv_core::functors::{self, f_a_triv, g_a_triv, g_sigma_triv};
use atriv_core::Field;
use proptest::prelude::*;

fn fields() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::prime(5).unwrap())]
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 12,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn random_gperm_gives_sigma_trivial_operads(seed in any::<u64>(), field in fields()) {
        let mut rng = common::rng(seed);
        let a = common::random_gperm(field, &mut rng, 4, 3);
        prop_assert!(a.check_gperm().is_empty());
        let p = g_sigma_triv(&a).unwrap();
        prop_assert!(p.check_axioms().is_empty());
        prop_assert!(p.classify_symmetry().sigma_trivial);
        prop_assert!(functors::roundtrip_gperm(&a).unwrap().is_empty());
        prop_assert!(functors::roundtrip_sigma_trivial(&p).unwrap().is_empty());
        let shifted: Vec<usize> = p.hilbert()[1..].to_vec();
        prop_assert_eq!(shifted, a.hilbert());
    }

    #[test]
    fn random_pgperm_gives_a_trivial_operads(seed in any::<u64>(), field in fields()) {
        let mut rng = common::rng(seed);
        let a = common::random_pgperm(field, &mut rng, 4, 3);
        let v = a.check_pgperm().unwrap();
        prop_assert!(v.is_empty(), "{}", v[0]);
        let p = g_a_triv(&a).unwrap();
        let v = p.check_axioms();
        prop_assert!(v.is_empty(), "{}", v[0]);
        prop_assert!(p.classify_symmetry().a_trivial);
        prop_assert!(functors::roundtrip_pgperm(&a).unwrap().is_empty());
        prop_assert!(functors::roundtrip_a_trivial(&p).unwrap().is_empty());
        prop_assert!(a.veronese_2().unwrap().check_gperm().is_empty());
    }

    #[test]
    fn rebased_a_trivial_operads_round_trip_in_the_split_basis(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let a = common::random_pgperm(Field::Rational, &mut rng, 4, 3);
        let p = common::random_operad_rebase(&g_a_triv(&a).unwrap(), &mut rng);
        prop_assert!(p.check_axioms().is_empty());
        let back = f_a_triv(&p).unwrap();
        prop_assert!(back.check_pgperm().unwrap().is_empty());
        prop_assert!(functors::roundtrip_a_trivial(&p).unwrap().is_empty());
    }

    #[test]
    fn pgc_instances_are_pgperm(seed in any::<u64>(), field in fields()) {
        let mut rng = common::rng(seed);
        let a = common::random_pgc(field, &mut rng, 5, 3);
        prop_assert!(a.check_pgc().unwrap().is_empty());
        prop_assert!(a.check_pgperm().unwrap().is_empty());
    }

    #[test]
    fn graded_commutative_with_odd_typing_is_pgc(seed in any::<u64>(), field in fields()) {
        let mut rng = common::rng(seed);
        let a = common::random_graded_commutative(field, &mut rng, 5, 3);
        prop_assert!(a.check_graded_commutative().is_empty());
        let typed = a.with_typing(a.uniform_typing(true)).unwrap();
        prop_assert!(typed.check_pgc().unwrap().is_empty());
    }

    #[test]
    fn torsion_is_sigma_stable_and_right_inside_bullet_right(seed in any::<u64>(), w in 2usize..=3) {
        let mut rng = common::rng(seed);
        let a = common::random_pgperm(Field::Rational, &mut rng, 4, 2);
        let p = common::random_operad_rebase(&g_a_triv(&a).unwrap(), &mut rng);
        let right = p.right_torsion(w).unwrap();
        let bullet = p.bullet_right_torsion(w).unwrap();
        for n in 1..=p.max_arity() {
            if right.is_decided(n) && bullet.is_decided(n) {
                prop_assert!(bullet.subset.component(n).contains_subspace(right.subset.component(n)));
            }
            for side in [&right, &p.left_torsion(w).unwrap()] {
                let c = side.subset.component(n);
                prop_assert_eq!(&p.sigma_closure(n, c.basis_vectors()), c);
            }
        }
    }
}
