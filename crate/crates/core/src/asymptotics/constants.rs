use rug::{Integer, Rational};

use crate::arith::{gcd, BigFloat, Interval};
use crate::{Error, Result};

/// Working precision used unless a caller asks for more.
pub const DEFAULT_PREC: u32 = 256;
/// Escalation stops here.
pub const MAX_PREC: u32 = 4096;

/// Constants of the asymptotic expansion of `c_t^(m)(n)`.
#[derive(Clone, Debug)]
pub struct AsymptoticConstants {
    pub t: u64,
    pub m: u64,
    /// `m (t - 1) / 24`
    pub mu: Rational,
    /// `max t / gcd(t, l)` over `1 <= l <= t` with `gcd(t, l)^2 > t`
    pub a: Rational,
    /// `M^2`, exact
    pub m_squared: Rational,
    /// `M`, rounded up
    pub m_upper: BigFloat,
    /// `4 pi sqrt(mu) / t`, the exponential rate of the main term in `sqrt(n - mu)`
    pub growth_main: Interval,
    /// `sqrt(6) pi M / 3`, the exponential rate of the error bound
    pub growth_error: Interval,
}

/// Rejects `(t, m)` outside `t >= 2, m >= 1, m (t - 1) <= 24`.
pub fn check_admissible(t: u64, m: u64) -> Result<()> {
    if t < 2 || m < 1 {
        return Err(Error::InvalidArgument(format!("need t >= 2 and m >= 1, got ({t}, {m})")));
    }
    let product = m * (t - 1);
    if product > 24 {
        return Err(Error::OutOfRange { t, m, product });
    }
    Ok(())
}

pub fn mu(t: u64, m: u64) -> Rational {
    Rational::from((Integer::from(m * (t - 1)), Integer::from(24)))
}

/// `t / gcd(t, l)` and `gcd(t, l)` for every `l` whose gcd with `t` exceeds
/// `sqrt(t)`.
fn dominant_classes(t: u64) -> impl Iterator<Item = (u64, u64)> {
    (1..=t).filter_map(move |l| {
        let g = gcd(t as i64, l as i64) as u64;
        (g * g > t).then_some((l, g))
    })
}

pub fn constants(t: u64, m: u64, prec: u32) -> Result<AsymptoticConstants> {
    check_admissible(t, m)?;
    let mu = mu(t, m);
    let a = dominant_classes(t).map(|(_, g)| Rational::from((t, g))).max().expect("l = t always qualifies");
    let mut m_squared = Rational::from((m * (t - 1), 4 * t * t));
    for (l, g) in dominant_classes(t).filter(|&(l, _)| l < t) {
        let cand = Rational::from((m * (g * g - t), t * l * l));
        if cand > m_squared {
            m_squared = cand;
        }
    }
    let pi = Interval::pi(prec);
    let m_iv = Interval::from_rational(prec, &m_squared).sqrt();
    let growth_main = (&pi * &Interval::from_rational(prec, &mu).sqrt()).mul_i64(4).div_i64(t as i64);
    let growth_error = (&(&Interval::from_i64(prec, 6).sqrt() * &pi) * &m_iv).div_i64(3);
    Ok(AsymptoticConstants { t, m, m_upper: BigFloat::upper_of(&m_iv), mu, a, m_squared, growth_main, growth_error })
}
