use proptest::prelude::*;

use naples_core::characterize::{is_parking_function_sorted, min_naples_k};
use naples_core::strategize::{count_min_step_strategies, min_step_split, min_step_strategy, min_total_steps};
use naples_core::transform::{restrict_translate, transform, Transform};
use naples_core::{is_k_naples, is_strategy, park, DeficiencyProfile, Preference, RuleVector};

fn full(max_n: usize) -> impl Strategy<Value = Preference> {
    (1..=max_n).prop_flat_map(|n| prop::collection::vec(1..=n, n)).prop_map(|v| Preference::full(v).unwrap())
}

fn without_ones(max_n: usize) -> impl Strategy<Value = Preference> {
    (2..=max_n).prop_flat_map(|n| prop::collection::vec(2..=n, n)).prop_map(|v| Preference::full(v).unwrap())
}

fn with_rules(max_n: usize) -> impl Strategy<Value = (Preference, Vec<usize>, Vec<usize>)> {
    full(max_n).prop_flat_map(|a| {
        let n = a.len();
        (Just(a), prop::collection::vec(0..=n, n), prop::collection::vec(0..=2usize, n))
    })
}

fn partial(max_n: usize) -> impl Strategy<Value = Preference> {
    (1..=max_n)
        .prop_flat_map(|s| (Just(s), 0..=s))
        .prop_flat_map(|(s, m)| (Just(s), prop::collection::vec(1..=s, m)))
        .prop_map(|(s, v)| Preference::new(v, s).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 512, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn deficiency_by_prefix_and_suffix_agree(a in full(12)) {
        let d = DeficiencyProfile::of(&a);
        let m = a.multiplicities();
        let n = a.len() as i64;
        for j in 1..=a.len() {
            let below: usize = m[1..j].iter().sum();
            prop_assert_eq!(d.u(j), j as i64 - 1 - below as i64);
            let above = a.prefs().iter().filter(|&&x| x >= j).count() as i64;
            if j >= 2 {
                prop_assert_eq!(d.u(j), above - (n - j as i64 + 1));
            }
        }
        prop_assert_eq!(m.iter().sum::<usize>(), a.len());
    }

    #[test]
    fn deficiency_differences(a in full(12)) {
        let d = DeficiencyProfile::of(&a);
        let m = a.multiplicities();
        for j1 in 1..=a.len() {
            for j2 in j1 + 1..=a.len() {
                let between: usize = m[j1..j2].iter().sum();
                prop_assert_eq!(d.u(j2) - d.u(j1), (j2 - j1) as i64 - between as i64);
            }
        }
    }

    #[test]
    fn reflection_complements_deficiency(a in without_ones(10)) {
        let n = a.len();
        let b = transform(&a, &Transform::ReflectTheta).unwrap();
        let (da, db) = (DeficiencyProfile::of(&a), DeficiencyProfile::of(&b));
        for j in 2..=n {
            prop_assert_eq!(db.in_u(j), !da.in_u(n + 3 - j));
        }
        prop_assert_eq!(transform(&b, &Transform::ReflectTheta).unwrap(), a);
    }

    #[test]
    fn restriction_at_a_zero_shifts_deficiency(a in full(10)) {
        let n = a.len();
        let d = DeficiencyProfile::of(&a);
        for j in (1..=n).filter(|&j| d.u(j) == 0) {
            let positions: Vec<usize> = (1..=n).filter(|&i| a.get(i) >= j).collect();
            let t = restrict_translate(&a, &positions, j - 1).unwrap();
            prop_assert!(t.is_full());
            let dt = DeficiencyProfile::of(&t);
            for i in 1..=t.len() {
                prop_assert_eq!(dt.u(i), d.u(i + j - 1));
            }
        }
    }

    #[test]
    fn larger_rules_keep_strategies((a, r, extra) in with_rules(9)) {
        let r2: Vec<usize> = r.iter().zip(&extra).map(|(x, e)| x + e).collect();
        let (r, r2) = (RuleVector::new(r), RuleVector::new(r2));
        if is_strategy(&a, &r).unwrap() {
            prop_assert!(is_strategy(&a, &r2).unwrap());
        }
    }

    #[test]
    fn padding_with_ones(a in partial(9)) {
        let s = a.spots();
        let mut padded = a.prefs().to_vec();
        padded.resize(s, 1);
        let padded = Preference::full(padded).unwrap();
        prop_assert_eq!(DeficiencyProfile::of(&a).u_set(), DeficiencyProfile::of(&padded).u_set());
        for k in 0..=s {
            prop_assert_eq!(is_k_naples(&a, k), is_k_naples(&padded, k));
        }
    }

    #[test]
    fn necessity_and_descending_sufficiency(a in full(10)) {
        let k = min_naples_k(&a).unwrap();
        if k > 0 {
            prop_assert!(!is_k_naples(&a, k - 1));
        }
        let desc = transform(&a, &Transform::SortDesc).unwrap();
        prop_assert!(is_k_naples(&desc, k));
    }

    #[test]
    fn standard_rule_matches_sorted_test(a in full(10)) {
        let o = park(&a, &RuleVector::zeros(a.len())).unwrap();
        prop_assert_eq!(o.all_parked(), is_parking_function_sorted(&a).unwrap());
        prop_assert_eq!(o.all_parked(), DeficiencyProfile::of(&a).is_empty());
        if o.all_parked() {
            let mut spots: Vec<usize> = o.assignment.iter().map(|p| p.unwrap()).collect();
            spots.sort_unstable();
            prop_assert_eq!(spots, (1..=a.len()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn optima_ignore_rearrangement((a, v) in full(10).prop_flat_map(|a| {
        let v = a.prefs().to_vec();
        (Just(a), Just(v).prop_shuffle())
    })) {
        let b = Preference::full(v).unwrap();
        prop_assert_eq!(min_total_steps(&a).unwrap(), min_total_steps(&b).unwrap());
        prop_assert_eq!(count_min_step_strategies(&a).unwrap(), count_min_step_strategies(&b).unwrap());
    }

    #[test]
    fn min_step_plan_forward_steps(a in full(10)) {
        let d = DeficiencyProfile::of(&a);
        let plan = min_step_strategy(&a).unwrap();
        let o = park(&a, &plan.rho).unwrap();
        prop_assert!(o.all_parked());
        let outside: i64 = (1..=a.len()).filter(|&j| !d.in_u(j)).map(|j| d.u(j).abs()).sum();
        prop_assert_eq!(o.total_forward() as i64, outside);
        prop_assert_eq!(min_step_split(&a).unwrap(), (o.total_backward(), o.total_forward()));
    }
}
