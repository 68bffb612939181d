use num_bigint::BigInt;
use proptest::prelude::*;

use gammatch_core::brute_force::{enumerate_nm, nm_polynomial};
use gammatch_core::egf::{egf_formal_x_power, egf_integer_power, egf_product, egf_reciprocal, EgfSeries};
use gammatch_core::perm::reduce;
use gammatch_core::poly::JsonPoly;
use gammatch_core::{PatternSet, Permutation, XYPoly, YPoly};

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max).prop_flat_map(|n| Just((1..=n as u32).collect::<Vec<_>>()).prop_shuffle()).prop_map(|v| Permutation::new(v).unwrap())
}

fn pattern(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Permutation> {
    len.prop_flat_map(|n| Just((2..=n as u32).collect::<Vec<_>>()).prop_shuffle()).prop_map(|rest| {
        let mut v = vec![1];
        v.extend(rest);
        Permutation::new(v).unwrap()
    })
}

fn ypoly(max_deg: usize) -> impl Strategy<Value = YPoly> {
    prop::collection::vec(-50i64..50, 0..=max_deg + 1).prop_map(|c| YPoly::from_i64s(&c))
}

/// A series with constant term 1, as the reciprocal needs.
fn unit_series(order: usize) -> impl Strategy<Value = EgfSeries<YPoly>> {
    prop::collection::vec(ypoly(3), order).prop_map(|rest| {
        let mut c = vec![YPoly::one()];
        c.extend(rest);
        EgfSeries::new(c).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduce_is_idempotent(seq in prop::collection::hash_set(-1000i64..1000, 0..12)) {
        let seq: Vec<i64> = seq.into_iter().collect();
        let once = reduce(&seq).unwrap();
        let twice = reduce(&once.values().iter().map(|&v| v as i64).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn descent_symmetries(p in permutation(12)) {
        let n = p.len() as u32;
        let reversed = Permutation::new(p.values().iter().rev().copied().collect()).unwrap();
        let complemented = Permutation::new(p.values().iter().map(|&v| n + 1 - v).collect()).unwrap();
        prop_assert_eq!(p.descents() + reversed.descents(), p.len() - 1);
        prop_assert_eq!(p.descents() + complemented.descents(), p.len() - 1);
        prop_assert_eq!(p.reverse_complement().descents(), p.descents());
        prop_assert_eq!(p.reverse_complement().reverse_complement(), p);
    }

    #[test]
    fn permutation_text_round_trip(p in permutation(14)) {
        let spaced: String = p.values().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        prop_assert_eq!(spaced.parse::<Permutation>().unwrap(), p.clone());
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn reciprocal_is_inverse(a in unit_series(6)) {
        let r = egf_reciprocal(&a, 6).unwrap();
        prop_assert_eq!(egf_product(&a, &r, 6).unwrap(), EgfSeries::identity(6));
    }

    #[test]
    fn formal_power_specializes(a in unit_series(4), m in 0u32..5) {
        let ax = egf_formal_x_power(&a, 4).unwrap();
        let am = egf_integer_power(&a, m, 4).unwrap();
        for n in 0..=4 {
            prop_assert_eq!(ax.coeff(n).eval_x(&BigInt::from(m)), am.coeff(n).clone());
            prop_assert_eq!(ax.coeff(n).eval_x(&BigInt::from(1)), a.coeff(n).clone());
            prop_assert!(ax.coeff(n).x_degree().unwrap_or(0) <= n);
        }
    }

    #[test]
    fn avoiders_never_contain_a_match(pats in prop::collection::vec(pattern(3..=5), 1..3), n in 0usize..8) {
        let g = PatternSet::normalize(pats).unwrap();
        let mut count = 0u64;
        for p in enumerate_nm(n, &g).unwrap() {
            prop_assert!(g.match_positions(p.values()).is_empty());
            count += 1;
        }
        let total = nm_polynomial(n, &g).unwrap().eval_x(&BigInt::from(1)).eval(&BigInt::from(1));
        prop_assert_eq!(total, BigInt::from(count));
    }

    #[test]
    fn more_patterns_fewer_avoiders(a in pattern(3..=5), b in pattern(3..=5), n in 0usize..8) {
        let small = PatternSet::normalize(vec![a.clone()]).unwrap();
        let big = PatternSet::normalize(vec![a, b]).unwrap();
        prop_assert!(enumerate_nm(n, &big).unwrap().count() <= enumerate_nm(n, &small).unwrap().count());
    }

    #[test]
    fn normalize_ignores_order_and_duplicates(pats in prop::collection::vec(pattern(2..=6), 1..5)) {
        let mut shuffled = pats.clone();
        shuffled.reverse();
        shuffled.extend(pats.iter().cloned());
        let a = PatternSet::normalize(pats).unwrap();
        prop_assert_eq!(&PatternSet::normalize(shuffled).unwrap(), &a);
        prop_assert_eq!(&PatternSet::parse(&a.to_string().trim_matches(|c| c == '{' || c == '}').replace(' ', "")).unwrap(), &a);
    }

    #[test]
    fn json_round_trip(terms in prop::collection::vec((0usize..6, 0usize..6, -1000i64..1000), 0..10)) {
        let mut p = XYPoly::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, BigInt::from(c));
        }
        let text = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(&serde_json::from_str::<XYPoly>(&text).unwrap(), &p);
        let j: JsonPoly = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&XYPoly::try_from(&j).unwrap(), &p);
        prop_assert_eq!(&p.to_string().parse::<XYPoly>().unwrap(), &p);
    }

    #[test]
    fn negate_y_is_an_involution(p in ypoly(8)) {
        prop_assert_eq!(p.negate_y().negate_y(), p.clone());
        prop_assert_eq!(p.to_string().parse::<YPoly>().unwrap(), p);
    }
}
