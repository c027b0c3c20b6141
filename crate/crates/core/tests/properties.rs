use num_integer::Integer;
use proptest::prelude::*;
use scaled_arndt::{
    backward, count_recurrence_uncached, forward, normalize, residue_system, satisfies,
    Composition, ScaledConstraint,
};

fn coprime_pair() -> impl Strategy<Value = (u64, u64)> {
    (1u64..12, 1u64..12).prop_filter("coprime", |(s, t)| s.gcd(t) == 1)
}

fn parts(max_len: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1u64..40, 0..max_len)
}

proptest! {
    #[test]
    fn display_parse_round_trip(p in parts(12)) {
        let c = Composition::new(p).unwrap();
        prop_assert_eq!(c.to_string().parse::<Composition>().unwrap(), c);
    }

    #[test]
    fn predicate_is_scale_invariant((s, t) in coprime_pair(), m in 1u64..6, p in parts(10)) {
        let reduced = normalize(s, t, 0).unwrap();
        let scaled = normalize(m * s, m * t, 0).unwrap();
        prop_assert_eq!(reduced, scaled);
        // and directly through the pairwise inequality
        let direct = p.chunks_exact(2).all(|w| m * s * w[0] > m * t * w[1]);
        prop_assert_eq!(satisfies(&p, &reduced), direct);
    }

    #[test]
    fn forward_then_backward_is_identity((s, t) in coprime_pair(), p in parts(10)) {
        let k = ScaledConstraint::scaled(s, t).unwrap();
        let c = Composition::new(p).unwrap();
        match forward(&c, &k) {
            Ok(image) => {
                prop_assert!(satisfies(c.parts(), &k));
                prop_assert_eq!(image.sum(), c.sum());
                let rs = residue_system(&k).unwrap();
                prop_assert!(image.parts().iter().all(|&x| rs.contains(x)));
                prop_assert_eq!(backward(&image, &k).unwrap(), c);
            }
            Err(_) => prop_assert!(!satisfies(c.parts(), &k)),
        }
    }

    #[test]
    fn backward_then_forward_is_identity((s, t) in coprime_pair(), p in parts(14)) {
        let k = ScaledConstraint::scaled(s, t).unwrap();
        let rs = residue_system(&k).unwrap();
        let c = Composition::new(p).unwrap();
        match backward(&c, &k) {
            Ok(pre) => {
                prop_assert!(satisfies(pre.parts(), &k));
                prop_assert_eq!(pre.sum(), c.sum());
                prop_assert_eq!(forward(&pre, &k).unwrap(), c);
            }
            Err(_) => prop_assert!(c.parts().iter().any(|&x| !rs.contains(x))),
        }
    }

    #[test]
    fn counts_within_bounds((s, t) in coprime_pair(), n in 1u64..60) {
        let a = count_recurrence_uncached(&normalize(s, t, 0).unwrap(), n).unwrap();
        prop_assert!(!a.is_zero());
        prop_assert!(a <= scaled_arndt::BigCount::pow2(n - 1));
    }
}
