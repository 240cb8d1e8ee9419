use rug::{Integer, Rational};

use super::gcd;
use crate::{Error, Result};

/// The Dedekind sum
///
/// ```text
/// s(h, k) = sum_{r=1}^{k-1} (r/k) * ({hr/k} - 1/2)
/// ```
///
/// with `{x} = x - floor(x)`; `s(h, 1) = 0`. Requires `k >= 1` and
/// `gcd(h, k) = 1`.
///
/// Every summand has denominator dividing `2k^2`, so the sum is accumulated as
/// one integer over `2k^2` and reduced once at the end.
pub fn dedekind_sum(h: i64, k: i64) -> Result<Rational> {
    if k <= 0 {
        return Err(Error::NonPositiveModulus(k));
    }
    if gcd(h, k) != 1 {
        return Err(Error::NotCoprime { h, k });
    }
    let mut acc = Integer::new();
    for r in 1..k {
        let frac = (i128::from(h) * i128::from(r)).rem_euclid(i128::from(k)) as i64;
        // r * (2 * frac - k) / (2 k^2)
        acc += Integer::from(r) * Integer::from(2 * frac - k);
    }
    let den = Integer::from(2) * Integer::from(k) * Integer::from(k);
    Ok(Rational::from((acc, den)))
}
