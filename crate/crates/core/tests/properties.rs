use admcalc_core::hodge::{i_series, j_series};
use admcalc_core::hurwitz::{hurwitz_count, BranchProfile, CycleType};
use admcalc_core::series::{cos_scaled, q, sin_scaled, Rational, TruncatedSeries};
use admcalc_core::combinatorics::factorial;
use num_traits::Zero;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(rational(), order + 1).prop_map(TruncatedSeries::from_coeffs)
}

fn series_pair() -> impl Strategy<Value = (TruncatedSeries, TruncatedSeries)> {
    (1usize..10).prop_flat_map(|n| (series(n), series(n)))
}

/// A divisor with valuation `v` and nonzero coefficient there.
fn divisor() -> impl Strategy<Value = (TruncatedSeries, usize)> {
    (2usize..10).prop_flat_map(|n| {
        (0..n).prop_flat_map(move |v| {
            (series(n), (1i64..=9, 1i64..=5), Just(v)).prop_map(move |(s, (a, b), v)| {
                let mut c = s.into_coeffs();
                for x in c.iter_mut().take(v) {
                    *x = Rational::zero();
                }
                c[v] = q(a, b);
                (TruncatedSeries::from_coeffs(c), v)
            })
        })
    })
}

proptest! {
    #[test]
    fn leibniz_rule((f, g) in series_pair()) {
        let lhs = f.mul(&g).unwrap().derive();
        let rhs = f.derive().mul(&g.truncate(g.order() - 1)).unwrap()
            .add(&f.truncate(f.order() - 1).mul(&g.derive()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pythagorean_identity(idx in 0usize..4, n in 0usize..40) {
        let a = [q(1, 2), q(1, 1), q(3, 2), q(3, 1)][idx].clone();
        let s = sin_scaled(&a, n);
        let c = cos_scaled(&a, n);
        prop_assert_eq!(s.mul(&s).unwrap().add(&c.mul(&c).unwrap()).unwrap(), TruncatedSeries::one(n));
    }

    #[test]
    fn division_undoes_multiplication((g, v) in divisor(), seed in prop::collection::vec(rational(), 10)) {
        let n = g.order();
        let f = TruncatedSeries::new(seed, n);
        let h = f.mul(&g).unwrap().div(&g).unwrap();
        prop_assert_eq!(h.order(), n - v);
        prop_assert_eq!(h, f.truncate(n - v));
    }

    #[test]
    fn integrate_then_derive(f in (0usize..12).prop_flat_map(series), c in rational()) {
        prop_assert_eq!(f.integrate(c).derive(), f);
    }

    #[test]
    fn degree_four_profile_order_irrelevant(
        raw in prop::collection::vec(0usize..5, 1..=4),
        rotate in 0usize..4,
    ) {
        let parts: [&[usize]; 5] = [&[4], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]];
        let types: Vec<CycleType> = raw.iter().map(|&i| CycleType::new(parts[i].to_vec()).unwrap()).collect();
        let mut rotated = types.clone();
        let len = rotated.len();
        rotated.rotate_left(rotate % len);
        rotated.reverse();
        for connected in [true, false] {
            let a = hurwitz_count(&BranchProfile::new(4, types.clone()).unwrap(), connected).unwrap();
            let b = hurwitz_count(&BranchProfile::new(4, rotated.clone()).unwrap(), connected).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}

fn partitions(d: usize) -> Vec<CycleType> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out.into_iter().map(|p| CycleType::new(p).unwrap()).collect()
}

fn all_lists(types: &[CycleType], len: usize) -> Vec<Vec<CycleType>> {
    let mut lists = vec![Vec::new()];
    for _ in 0..len {
        lists = lists
            .into_iter()
            .flat_map(|l| {
                types.iter().map(move |t| {
                    let mut l = l.clone();
                    l.push(t.clone());
                    l
                })
            })
            .collect();
    }
    lists
}

#[test]
fn hurwitz_exhaustive_small_cases() {
    for d in 1..=3usize {
        let types = partitions(d);
        let d_fact = Rational::from_integer(factorial(d));
        for n in 0..=5 {
            for list in all_lists(&types, n) {
                let mut sorted = list.clone();
                sorted.sort();
                let conn = hurwitz_count(&BranchProfile::new(d, list.clone()).unwrap(), true).unwrap();
                let disc = hurwitz_count(&BranchProfile::new(d, list.clone()).unwrap(), false).unwrap();
                let conn_sorted = hurwitz_count(&BranchProfile::new(d, sorted.clone()).unwrap(), true).unwrap();
                let disc_sorted = hurwitz_count(&BranchProfile::new(d, sorted).unwrap(), false).unwrap();
                assert_eq!(conn, conn_sorted, "{list:?}");
                assert_eq!(disc, disc_sorted, "{list:?}");
                assert!(disc >= conn, "{list:?}");
                assert!(conn >= Rational::zero());
                assert!((&conn * &d_fact).is_integer());
                assert!((&disc * &d_fact).is_integer());
            }
        }
    }
}

#[test]
fn generating_function_parity() {
    let n = 41;
    let odd_only = [i_series(2, n).unwrap()];
    let even_only = [i_series(3, n).unwrap(), j_series(2, n).unwrap(), j_series(3, n).unwrap()];
    for s in &odd_only {
        for (k, c) in s.coeffs().iter().enumerate() {
            if k % 2 == 0 {
                assert!(c.is_zero());
            } else {
                assert!(!c.is_zero());
            }
        }
    }
    for s in &even_only {
        let v = s.valuation().unwrap();
        for (k, c) in s.coeffs().iter().enumerate() {
            if k % 2 == 1 || k < v {
                assert!(c.is_zero());
            } else {
                assert!(!c.is_zero());
            }
        }
    }
}
