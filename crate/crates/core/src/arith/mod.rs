//! Exact scalar arithmetic: Dedekind sums, the cyclotomic ring used for the
//! exponential sums, and directed-rounding interval arithmetic.

mod alpha;
mod cyclotomic;
mod dedekind;
mod interval;

pub use alpha::{alpha, alpha_abs_lower_bound, alpha_enclosure, alpha_sign, alpha_sign_at};
pub use cyclotomic::{cyclotomic_polynomial, CyclotomicElement};
pub use dedekind::dedekind_sum;
pub use interval::{BigFloat, Interval, Rounding};

/// Exact reduced fraction. `rug::Rational` keeps numerator and denominator
/// coprime with a positive denominator after every operation.
pub type Rational = rug::Rational;

use serde::{Deserialize, Serialize};

/// Three-valued sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of_integer(x: &rug::Integer) -> Sign {
        match x.cmp0() {
            std::cmp::Ordering::Less => Sign::Negative,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Positive,
        }
    }

    pub fn of_i64(x: i64) -> Sign {
        match x.signum() {
            -1 => Sign::Negative,
            0 => Sign::Zero,
            _ => Sign::Positive,
        }
    }

    /// `(-1)^j` as a sign.
    pub fn alternating(j: i64) -> Sign {
        if j.rem_euclid(2) == 0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Sign::Negative => "NEGATIVE",
            Sign::Zero => "ZERO",
            Sign::Positive => "POSITIVE",
        };
        f.write_str(s)
    }
}

/// Greatest common divisor on machine integers.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a as i64
}
