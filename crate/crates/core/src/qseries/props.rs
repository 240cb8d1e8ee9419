use super::{borwein_coeffs, euler_factor, IntegerSeries};
use proptest::prelude::*;
use rug::Integer;

const ORDER: usize = 100;

/// Series with (-1)^n a(n) > 0, except that a(2) may vanish.
fn alternating() -> impl Strategy<Value = IntegerSeries> {
    (prop::collection::vec(1i64..1_000_000, ORDER + 1), 0i64..50).prop_map(|(mags, a2)| {
        let coeffs = mags
            .iter()
            .enumerate()
            .map(|(n, &m)| {
                let m = if n == 2 { a2 } else { m };
                Integer::from(if n % 2 == 0 { m } else { -m })
            })
            .collect();
        IntegerSeries::new(coeffs)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_of_alternating_series_strictly_alternates(fs in prop::collection::vec(alternating(), 2..5)) {
        let mut prod = fs[0].clone();
        for f in &fs[1..] {
            prod = prod.mul(f);
        }
        for (n, c) in prod.coeffs().iter().enumerate() {
            let want = if n % 2 == 0 { std::cmp::Ordering::Greater } else { std::cmp::Ordering::Less };
            prop_assert_eq!(c.cmp0(), want, "index {}", n);
        }
    }

    #[test]
    fn dissection_reassembles(coeffs in prop::collection::vec(-1000i64..1000, 1..200), t in 1usize..12) {
        let s = IntegerSeries::from_i64s(&coeffs);
        let t = t.min(s.order() + 1);
        let parts: Vec<_> = (0..t).map(|r| s.dissect(t, r)).collect();
        for (r, p) in parts.iter().enumerate() {
            prop_assert_eq!(p.order(), (s.order() - r) / t);
        }
        prop_assert_eq!(IntegerSeries::interleave(&parts), s);
    }

    #[test]
    fn borwein_times_denominator(t in 1usize..25, m in 1usize..8) {
        let n = 200;
        let lhs = borwein_coeffs(t, m, n).mul(&euler_factor(t, t, m as i64, n).unwrap());
        prop_assert_eq!(lhs, euler_factor(1, 1, m as i64, n).unwrap());
    }
}
