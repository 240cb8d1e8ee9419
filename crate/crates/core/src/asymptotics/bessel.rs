use std::cmp::Ordering;

use rug::Float;

use crate::arith::Interval;
use crate::{Error, Result};

/// Enclosure of the modified Bessel function `I_s(x)` for integer `s` and an
/// interval `x >= 0`, at the precision of `x`.
///
/// Sums the ascending series in interval arithmetic. Once the term ratio
/// `(x/2)^2 / ((k+1)(k+1+|s|))` drops below 1/2 it keeps decreasing, so the
/// tail after the last term is at most twice the first omitted term.
/// For integer order `I_{-s} = I_s`.
pub fn bessel_i(s: i64, x: &Interval) -> Result<Interval> {
    if x.lo().cmp0() == Some(Ordering::Less) {
        return Err(Error::InvalidArgument(format!("Bessel argument must be >= 0, got lower end {}", x.lo())));
    }
    let s = s.unsigned_abs();
    let prec = x.prec();
    // every term is increasing in x >= 0
    let lo = series_at(s, x.lo(), prec);
    let hi = if x.lo() == x.hi() { lo.clone() } else { series_at(s, x.hi(), prec) };
    Ok(Interval::new(lo.lo().clone(), hi.hi().clone()))
}

fn series_at(s: u64, x: &Float, prec: u32) -> Interval {
    let h = Interval::new(x.clone(), x.clone()).div_i64(2);
    let h2 = &h * &h;
    let mut term = h.powu(s as u32);
    for j in 2..=s {
        term = term.div_i64(j as i64);
    }
    let half = Interval::from_i64(prec, 1).div_i64(2);
    let mut sum = Interval::zero(prec);
    let mut k: u64 = 0;
    loop {
        sum = &sum + &term;
        let ratio = h2.div_i64(((k + 1) * (k + 1 + s)) as i64);
        let next = &term * &ratio;
        if ratio.hi() <= half.lo() {
            // relative size of the next term, compared in a cheap way
            let negligible = next.hi().is_zero() || {
                let scaled = Float::with_val(prec, sum.lo() >> (prec as i32 + 8));
                *next.hi() <= scaled
            };
            if negligible {
                let tail_hi = Float::with_val(prec, next.hi() * 2u32);
                let tail = Interval::new(Float::with_val(prec, 0), tail_hi);
                return &sum + &tail;
            }
        }
        term = next;
        k += 1;
    }
}
