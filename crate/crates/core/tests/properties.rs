use num_rational::Rational64;
use proptest::prelude::*;
use rcn_core::allowseq::{
    center_entry_permutation, critical_profile, from_point_set, reverse, rotate, validate,
    HalfPeriod,
};
use rcn_core::bounds::{scenario_crossing, Scenario};
use rcn_core::decomp::{check_sequence_decomposition, phase_stats, search_decomposition};
use rcn_core::digraph::{build_d0, in_class};
use rcn_core::geom::{generate, orientation, GeneratorKind, Point, PointSet, MAX_COORD};
use rcn_core::kedges::{
    choose, crossing_brute, crossing_from_cumulative, crossing_from_edges, edge_vector,
    lower_bound_leq_k,
};
use rcn_core::pointio::{parse_point_text, write_point_text};

fn coord() -> impl Strategy<Value = i64> {
    -MAX_COORD / 2..=MAX_COORD / 2
}

fn point() -> impl Strategy<Value = Point> {
    (coord(), coord()).prop_map(|(x, y)| Point::new(x, y))
}

fn kind() -> impl Strategy<Value = GeneratorKind> {
    prop_oneof![Just(GeneratorKind::Convex), Just(GeneratorKind::RandomDisk)]
}

fn set() -> impl Strategy<Value = PointSet> {
    (kind(), 4usize..=10, any::<u64>())
        .prop_map(|(k, n, s)| generate(k, n, s, Rational64::from_integer(8)).unwrap())
}

fn tuned() -> impl Strategy<Value = PointSet> {
    (prop_oneof![Just(6usize), Just(9)], 0u64..64).prop_map(|(n, s)| {
        generate(GeneratorKind::ThreeRay, n, s, Rational64::from_integer(8)).unwrap()
    })
}

proptest! {
    #[test]
    fn orientation_is_antisymmetric(p in point(), q in point(), r in point()) {
        prop_assert_eq!(orientation(p, q, r), -orientation(p, r, q));
        prop_assert_eq!(orientation(p, q, r), orientation(q, r, p));
    }

    #[test]
    fn orientation_is_translation_invariant(p in point(), q in point(), r in point(), t in point()) {
        let sh = |a: Point| Point::new(a.x + t.x, a.y + t.y);
        prop_assert_eq!(orientation(p, q, r), orientation(sh(p), sh(q), sh(r)));
    }

    #[test]
    fn crossing_identities_agree(s in set()) {
        let ev = edge_vector(&s).unwrap();
        let brute = crossing_brute(&s).unwrap() as i64;
        prop_assert_eq!(crossing_from_edges(&ev), brute);
        prop_assert_eq!(crossing_from_cumulative(&ev), brute);
        prop_assert_eq!(ev.counts().iter().sum::<u64>() as i64, choose(s.len() as i64, 2));
    }

    #[test]
    fn edge_vector_is_translation_invariant(s in set(), dx in -1000i64..1000, dy in -1000i64..1000) {
        let moved = PointSet::new(s.points().iter().map(|p| Point::new(p.x + dx, p.y + dy)).collect()).unwrap();
        prop_assert_eq!(edge_vector(&s).unwrap(), edge_vector(&moved).unwrap());
    }

    #[test]
    fn critical_counts_match_edges(s in set()) {
        let cum = edge_vector(&s).unwrap().cumulative_all();
        let prof = critical_profile(&from_point_set(&s).unwrap());
        for k in 1..=s.len() / 2 {
            prop_assert_eq!(prof.n_le(k), cum[k - 1]);
        }
    }

    #[test]
    fn bound_holds_below_halving_level(s in set()) {
        let n = s.len();
        let cum = edge_vector(&s).unwrap().cumulative_all();
        for (k, &have) in cum.iter().enumerate().take((n - 3) / 2 + 1) {
            prop_assert!(have >= lower_bound_leq_k(n, k).unwrap());
        }
    }

    #[test]
    fn rotations_and_reversal_stay_valid(s in set(), t in any::<prop::sample::Index>()) {
        let h = from_point_set(&s).unwrap();
        let g = rotate(&h, t.index(2 * h.len())).unwrap();
        prop_assert!(validate(&g).is_ok());
        prop_assert!(validate(&reverse(&g)).is_ok());
        prop_assert_eq!(critical_profile(&g).counts, critical_profile(&h).counts);
    }

    #[test]
    fn half_period_text_round_trip(s in set()) {
        let h = from_point_set(&s).unwrap();
        let back: HalfPeriod = h.to_string().parse().unwrap();
        prop_assert_eq!(back, h);
    }

    #[test]
    fn point_text_round_trip(s in set()) {
        prop_assert_eq!(parse_point_text(&write_point_text(&s)).unwrap(), vec![s]);
    }

    #[test]
    fn center_entry_lands_inside(s in set(), label in any::<prop::sample::Index>(), k in 1usize..3) {
        let h = from_point_set(&s).unwrap();
        let n = h.n();
        let label = label.index(n);
        if let Ok((steps, perm)) = center_entry_permutation(&h, label, k) {
            let pos = perm.iter().position(|&l| l == label).unwrap() + 1;
            prop_assert!(pos > k && pos <= n - k);
            prop_assert_eq!(h.permutation_at(steps), perm);
        }
    }

    #[test]
    fn found_decompositions_recheck(s in tuned()) {
        let h = from_point_set(&s).unwrap();
        let d = search_decomposition(&h).unwrap().expect("tight three-ray sets decompose");
        prop_assert!(check_sequence_decomposition(&h, d.rotation).unwrap().is_ok());
        for r in 0..d.rotation {
            prop_assert!(check_sequence_decomposition(&h, r).unwrap().is_err());
        }
        let st = phase_stats(&h, &d).unwrap();
        let mono_total: u64 = st.mono.iter().sum();
        prop_assert_eq!(mono_total, 3 * choose(s.len() as i64 / 3, 2) as u64);
    }

    #[test]
    fn d0_is_in_class(v in 1usize..=14, m in 0usize..=6) {
        let g = build_d0(v, m).unwrap();
        prop_assert!(in_class(&g, m));
        prop_assert!(g.edge_count() <= v * (v - 1) / 2);
    }

    #[test]
    fn scenario_grows_with_low_levels(k in 1usize..=13) {
        let base = Scenario::tight(30, 13, &[72, 72]).unwrap();
        let mut c = base.cumulative.clone();
        c[k - 1] += 1;
        if let Ok(s) = Scenario::new(30, c) {
            prop_assert!(scenario_crossing(&s).unwrap() > scenario_crossing(&base).unwrap());
        }
    }
}
