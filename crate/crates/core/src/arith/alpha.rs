use rug::Integer;

use super::{dedekind_sum, gcd, BigFloat, CyclotomicElement, Interval, Sign};
use crate::{Error, Result};

const START_PREC: u32 = 128;
const MAX_PREC: u32 = 1 << 16;

/// The exponential sum
///
/// ```text
/// alpha_t^(m)(n) = sum_{0 <= h < t, gcd(h,t)=1} exp(-m pi i s(h,t) - 2 pi i n h / t)
/// ```
///
/// as an exact element of `Z[zeta_{12t}]`. Since `6t s(h,t)` is an integer,
/// each summand is `zeta_{12t}^{-m 6t s(h,t) - 12 n h}`.
pub fn alpha(t: u64, m: u64, n: u64) -> CyclotomicElement {
    assert!(t >= 1, "alpha needs t >= 1");
    let order = 12 * t;
    let ti = t as i64;
    let exps = (0..ti).filter(|&h| gcd(h, ti) == 1).map(|h| {
        let s = dedekind_sum(h, ti).expect("coprime by construction");
        let scaled = s * Integer::from(6 * t);
        assert!(scaled.is_integer(), "6t s(h,t) must be integral");
        let k6 = scaled.numer().to_i64().expect("small");
        let e = -(m as i128) * k6 as i128 - 12 * (n % t) as i128 * h as i128;
        e.rem_euclid(order as i128) as i64
    });
    CyclotomicElement::from_root_sum(order as u32, exps)
}

/// Sign of the element at a fixed precision, if the enclosure decides it.
pub fn alpha_sign_at(value: &CyclotomicElement, prec: u32) -> Option<Sign> {
    if value.is_zero() {
        return Some(Sign::Zero);
    }
    match value.real_enclosure(prec).sign() {
        Some(Sign::Zero) | None => None,
        s => s,
    }
}

/// Sign of `alpha_t^(m)(r)`. Zero is decided on the exact representation; a
/// nonzero value is evaluated with outward rounding starting at 128 bits and
/// doubling until the enclosure excludes zero.
pub fn alpha_sign(t: u64, m: u64, r: u64) -> Sign {
    let a = alpha(t, m, r);
    let mut prec = START_PREC;
    loop {
        if let Some(s) = alpha_sign_at(&a, prec) {
            return s;
        }
        prec *= 2;
        assert!(prec <= MAX_PREC, "sign of a nonzero cyclotomic element not resolved at {MAX_PREC} bits");
    }
}

/// Enclosure of the real number `alpha_t^(m)(n)`; exactly `[0, 0]` when the
/// element vanishes.
pub fn alpha_enclosure(t: u64, m: u64, n: u64, prec: u32) -> Interval {
    let a = alpha(t, m, n);
    if a.is_zero() {
        Interval::zero(prec)
    } else {
        a.real_enclosure(prec)
    }
}

/// Certified lower bound on `min |alpha_t^(m)(r)|` over the residues where
/// alpha does not vanish.
pub fn alpha_abs_lower_bound(t: u64, m: u64) -> Result<BigFloat> {
    let mut best: Option<BigFloat> = None;
    for r in 0..t {
        let a = alpha(t, m, r);
        if a.is_zero() {
            continue;
        }
        let mut prec = START_PREC;
        let enclosure = loop {
            let iv = a.real_enclosure(prec).abs();
            if iv.lo().cmp0() == Some(std::cmp::Ordering::Greater) {
                break iv;
            }
            prec *= 2;
            if prec > MAX_PREC {
                return Err(Error::PrecisionExhausted { bits: prec, what: format!("bounding |alpha_{t}^({m})({r})|") });
            }
        };
        let lb = BigFloat::lower_of(&enclosure);
        best = Some(match best {
            Some(b) if b.value() <= lb.value() => b,
            _ => lb,
        });
    }
    best.ok_or(Error::NoNonzeroResidues { t, m })
}
