//! Property suites: the dual-fan "max twice" oracle and the N-map round
//! trip on random inputs.

use num_bigint::BigInt;
use proptest::prelude::*;
use spuntrop_core::surfaces::NormalQCoordinate;
use spuntrop_core::tropical::{normal_to_xi, spherical_dual, xi_to_normal, SupportSet};
use spuntrop_hull::{rat, Rat};

fn support_instance() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (2usize..=4).prop_flat_map(|dim| {
        (
            Just(dim),
            prop::collection::vec(prop::collection::vec(-3i64..=3, dim), 2..=6),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dual_fan_matches_the_max_twice_test(
        (dim, pts) in support_instance(),
        dir in prop::collection::vec(-4i64..=4, 4)
    ) {
        let mut uniq = pts.clone();
        uniq.sort();
        uniq.dedup();
        prop_assume!(uniq.len() >= 2);
        let support = SupportSet::new(dim, uniq.clone());
        let fan = spherical_dual(&support).unwrap();

        let xi: Vec<Rat> = dir[..dim].iter().map(|&x| Rat::from_integer(x.into())).collect();
        let in_fan = fan.cones.iter().any(|c| c.contains(&xi));

        let dots: Vec<BigInt> = uniq
            .iter()
            .map(|p| p.iter().zip(&dir[..dim]).map(|(&a, &x)| BigInt::from(a) * BigInt::from(x)).sum())
            .collect();
        let max = dots.iter().max().unwrap();
        let max_twice = dots.iter().filter(|d| *d == max).count() >= 2;

        prop_assert_eq!(in_fan, max_twice);
    }

    #[test]
    fn n_map_round_trips_on_admissible_coordinates(
        choices in prop::collection::vec((0u8..3, 0i64..=20, 1i64..=7), 1..=4)
    ) {
        let n = choices.len();
        let mut entries = vec![Rat::from_integer(0.into()); 3 * n];
        for (t, (level, num, den)) in choices.iter().enumerate() {
            entries[3 * t + *level as usize] = rat(*num, *den);
        }
        let x = NormalQCoordinate::new(entries).unwrap();
        let xi = normal_to_xi(&x);
        let back = xi_to_normal(&xi).unwrap();
        prop_assert_eq!(back, x);
    }
}
