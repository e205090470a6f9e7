//! Property tests for the core invariants.


use proptest::prelude::*;

use chaintope::{oracle_vertices, vertices, HalfspaceSystem, LengthVector, Rational};

fn entries_strategy(m: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(1i64..=12, m)
}

fn scale_strategy() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=9).prop_map(|(p, q)| {
        Rational::new(p.into(), q.into())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn short_code_is_scale_invariant(entries in entries_strategy(6), c in scale_strategy()) {
        let mut sides = entries[..5].to_vec();
        sides.sort_unstable();
        let mut sorted = sides;
        sorted.push(entries[5]);
        let alpha = LengthVector::from_ints(&sorted).unwrap();
        prop_assume!(alpha.is_generic());
        let scaled = LengthVector::new(
            alpha.entries().iter().map(|e| e * &c).collect()
        ).unwrap();
        prop_assert_eq!(alpha.short_code().unwrap(), scaled.short_code().unwrap());
    }

    #[test]
    fn short_code_ignores_side_order(entries in entries_strategy(6), seed in any::<u64>()) {
        let alpha = LengthVector::from_ints(&entries).unwrap();
        prop_assume!(alpha.is_generic());
        // shuffle the first m-1 entries with a cheap LCG
        let mut sides = entries[..5].to_vec();
        let mut state = seed | 1;
        for i in (1..sides.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            sides.swap(i, (state >> 33) as usize % (i + 1));
        }
        let mut shuffled = sides;
        shuffled.push(entries[5]);
        let beta = LengthVector::from_ints(&shuffled).unwrap();
        let code_a = alpha.normalized().0.short_code().unwrap();
        let code_b = beta.normalized().0.short_code().unwrap();
        prop_assert_eq!(code_a, code_b);
    }

    #[test]
    fn genetic_lift_preserves_the_code(entries in entries_strategy(7)) {
        let mut sides = entries[..6].to_vec();
        sides.sort_unstable();
        let mut sorted = sides;
        sorted.push(entries[6]);
        let alpha = LengthVector::from_ints(&sorted).unwrap();
        prop_assume!(alpha.is_generic());
        let m = alpha.m();
        let code = alpha.short_code().unwrap();
        let lifted = alpha.genetic_lift(None).unwrap();
        prop_assert!(lifted.is_generic());
        // the maximal short subsets of the lift containing m+1 are the code
        // members with m replaced by m+1
        let expect = chaintope::ShortCode::from_sets(
            m + 1,
            code.sets().iter().map(|s| s.without(m).with(m + 1)).collect(),
        ).unwrap();
        prop_assert_eq!(lifted.short_code().unwrap(), expect);
    }

    #[test]
    fn vertex_oracle_agrees(entries in entries_strategy(5)) {
        let mut sides = entries[..4].to_vec();
        sides.sort_unstable();
        let mut sorted = sides;
        sorted.push(entries[4]);
        let alpha = LengthVector::from_ints(&sorted).unwrap();
        prop_assume!(alpha.is_generic() && alpha.has_nonempty_polytope());
        let mut ours: Vec<Vec<Rational>> = vertices(&alpha)
            .unwrap()
            .into_iter()
            .map(|v| v.coordinates)
            .collect();
        ours.sort();
        prop_assert_eq!(ours, oracle_vertices(&alpha).unwrap());
    }

    #[test]
    fn ine_export_round_trips(entries in entries_strategy(5)) {
        let mut sides = entries[..4].to_vec();
        sides.sort_unstable();
        let mut sorted = sides;
        sorted.push(entries[4]);
        let alpha = LengthVector::from_ints(&sorted).unwrap();
        prop_assume!(alpha.is_generic() && alpha.has_nonempty_polytope());
        let facets = chaintope::moment_hrep(&alpha).unwrap().facet_subsystem();
        let text = facets.to_ine();
        let parsed = HalfspaceSystem::parse_ine(&text).unwrap();
        prop_assert_eq!(&parsed, &facets);
        prop_assert_eq!(parsed.to_ine(), text);
    }
}
