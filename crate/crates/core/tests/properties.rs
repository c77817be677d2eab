use grothmon::intermediate::{class_of, from_torsionfree, h_decomposition, DObj};
use grothmon::lattice::{hnf, IntVec};
use grothmon::monoid::CanonicalMonoid;
use grothmon::oracle::{decompose, hom_dim, Rep};
use grothmon::quiver::{enumerate_torsionfree_classes, Interval, LinearAQuiver, ModuleObj};
use num_bigint::BigInt;
use proptest::prelude::*;

fn vecs(rank: usize, rows: usize) -> impl Strategy<Value = Vec<IntVec>> {
    prop::collection::vec(
        prop::collection::vec((-6i64..=6).prop_map(BigInt::from), rank),
        0..=rows,
    )
}

fn module(n: usize, summands: usize) -> impl Strategy<Value = ModuleObj> {
    prop::collection::vec((1..=n, 1..=n), 0..=summands).prop_map(|ps| {
        ModuleObj::new(
            ps.into_iter()
                .map(|(a, b)| Interval {
                    lo: a.min(b),
                    hi: a.max(b),
                })
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 256,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn hnf_ignores_generator_order(gens in vecs(3, 4)) {
        let mut rev = gens.clone();
        rev.reverse();
        prop_assert_eq!(hnf(&gens, 3).unwrap(), hnf(&rev, 3).unwrap());
    }

    #[test]
    fn hnf_contains_its_generators(gens in vecs(3, 4)) {
        let l = hnf(&gens, 3).unwrap();
        for g in &gens {
            prop_assert!(l.contains(g).unwrap());
        }
    }

    #[test]
    fn reduce_picks_coset_representative(gens in vecs(2, 3), v in prop::collection::vec(-20i64..=20, 2)) {
        let l = hnf(&gens, 2).unwrap();
        let v: IntVec = v.into_iter().map(BigInt::from).collect();
        let r = l.reduce(&v).unwrap();
        let diff: IntVec = v.iter().zip(&r).map(|(a, b)| a - b).collect();
        prop_assert!(l.contains(&diff).unwrap());
        prop_assert_eq!(l.reduce(&r).unwrap(), r);
    }

    #[test]
    fn group_completion_is_rank_of_quotient(gens in vecs(3, 2)) {
        let m = CanonicalMonoid::make(3, &[0, 1, 2], &gens).unwrap();
        let rank = hnf(&gens, 3).unwrap().dim();
        prop_assert_eq!(m.group_completion().free_rank, 3 - rank);
        prop_assert!(m.is_group());
    }

    #[test]
    fn decompose_inverts_from_module(x in module(4, 3)) {
        let rep = Rep::from_module(4, &x).unwrap();
        prop_assert_eq!(decompose(&rep).unwrap(), x);
    }

    #[test]
    fn hom_dim_is_bilinear(x in module(3, 2), y in module(3, 2), z in module(3, 2)) {
        let (rx, ry, rz) = (
            Rep::from_module(3, &x).unwrap(),
            Rep::from_module(3, &y).unwrap(),
            Rep::from_module(3, &z).unwrap(),
        );
        prop_assert_eq!(
            hom_dim(&rx.direct_sum(&ry).unwrap(), &rz).unwrap(),
            hom_dim(&rx, &rz).unwrap() + hom_dim(&ry, &rz).unwrap()
        );
    }

    #[test]
    fn class_of_is_additive(k in 0usize..14, x in module(3, 3), y in module(3, 3), z in module(3, 3)) {
        let f = &enumerate_torsionfree_classes(&LinearAQuiver::new(3).unwrap())[k];
        let c = from_torsionfree(3, f).unwrap();
        let neg = ModuleObj::new(x.summands().iter().copied().filter(|i| f.contains(*i)).collect());
        let a = DObj::new(neg, y);
        let b = DObj::module(z);
        let sum = class_of(&c, &a).unwrap().add(&class_of(&c, &b).unwrap()).unwrap();
        prop_assert!(class_of(&c, &a.direct_sum(&b)).unwrap().equals(&sum).unwrap());
        let h = h_decomposition(&a);
        prop_assert_eq!(h.middle, a);
    }
}
