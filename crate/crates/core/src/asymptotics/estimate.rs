use std::cmp::Ordering;

use rug::{Float, Integer, Rational};
use serde::Serialize;

use super::bessel::bessel_i;
use super::constants::{constants, AsymptoticConstants, DEFAULT_PREC, MAX_PREC};
use crate::arith::{alpha_enclosure, BigFloat, Interval, Sign};
use crate::{Error, Result};

/// The pieces of the main term and of the error bound that do not depend
/// on `n`, at one precision.
struct Pieces {
    consts: AsymptoticConstants,
    prec: u32,
    mu: Interval,
    /// `2 pi sqrt(mu) / t`
    main_scale: Interval,
    /// `pi^{7/4} / 2^{3/4} A^{m/2} mu^{1/4}`
    err_scale: Interval,
    /// the two summands of the error bound that are constant in `n`
    err_const: Interval,
    /// `sqrt(pi / t) mu^{1/4} / 10`, the main-term lower bound without `|alpha|`
    lower_scale: Interval,
}

impl Pieces {
    fn new(t: u64, m: u64, prec: u32) -> Result<Self> {
        let consts = constants(t, m, prec)?;
        let p = prec;
        let pi = Interval::pi(p);
        let one = Interval::from_i64(p, 1);
        let mu = Interval::from_rational(p, &consts.mu);
        let mu_quarter = mu.sqrt().sqrt();
        let ti = t as i64;
        let main_scale = (&pi.mul_i64(2) * &mu.sqrt()).div_i64(ti);

        let a_pow_m: Rational = (0..m).fold(Rational::from(1), |acc, _| acc * &consts.a);
        let a_half_m = Interval::from_rational(p, &a_pow_m).sqrt();
        let err_scale = &(&(&pi.pow_ratio(7, 4) / &Interval::from_i64(p, 2).pow_ratio(3, 4)) * &a_half_m) * &mu_quarter;

        let second = (&Interval::from_i64(p, 2) + &(&pi.mul_i64(8) * &mu)).exp().mul_i64(2 * ti);
        let geometric = |x: Interval| {
            let e = (-x).exp();
            let d = &one - &e;
            &e / &(&d * &d)
        };
        let inner = &(&pi * &mu) + &(&geometric(pi.clone()) + &geometric(pi.div_i64(ti))).mul_i64(m as i64);
        let t_pow = &Interval::from_integer(p, &Integer::from(Integer::u_pow_u(t as u32, m as u32))).sqrt() * &Interval::from_i64(p, ti);
        let third = &(&Interval::from_i64(p, 2).exp().mul_i64(2) * &t_pow) * &inner.exp();
        let err_const = &second + &third;

        let lower_scale = (&pi.div_i64(ti).sqrt() * &mu_quarter).div_i64(10);
        Ok(Pieces { consts, prec, mu, main_scale, err_scale, err_const, lower_scale })
    }

    /// `sqrt(n - mu)`; requires `n > mu`.
    fn x(&self, n: u64) -> Result<Interval> {
        if Rational::from(n) <= self.consts.mu {
            return Err(Error::IndexTooSmall { n, min: format!("{} (exclusive)", self.consts.mu) });
        }
        Ok((&Interval::from_integer(self.prec, &Integer::from(n)) - &self.mu).sqrt())
    }

    fn error_bound(&self, x: &Interval) -> Interval {
        &(&self.err_scale * &(&self.consts.growth_error * x).exp()) + &self.err_const
    }

    fn main_term(&self, x: &Interval, alpha: &Interval) -> Result<Interval> {
        if alpha.sign() == Some(Sign::Zero) {
            return Ok(Interval::zero(self.prec));
        }
        let bessel = bessel_i(-1, &(&self.consts.growth_main * x))?;
        Ok(&(&(&self.main_scale / x) * alpha) * &bessel)
    }

    fn delta(&self, x: &Interval, c_min: &Interval) -> Interval {
        let main_lower = &(&(&self.lower_scale * c_min) / &x.pow_ratio(3, 2)) * &(&self.consts.growth_main * x).exp();
        &main_lower - &self.error_bound(x)
    }
}

fn require_error_range(n: u64) -> Result<()> {
    if n < 3 {
        return Err(Error::IndexTooSmall { n, min: "3".into() });
    }
    Ok(())
}

/// Enclosure of the main term
/// `2 pi sqrt(mu) / t (n - mu)^{-1/2} alpha I_{-1}(4 pi sqrt(mu (n - mu)) / t)`.
pub fn main_term(t: u64, m: u64, n: u64, alpha: &Interval, prec: u32) -> Result<Interval> {
    let pieces = Pieces::new(t, m, prec)?;
    let x = pieces.x(n)?;
    pieces.main_term(&x, alpha)
}

/// Upper-rounded value of the explicit error bound at `n >= 3`.
pub fn error_bound(t: u64, m: u64, n: u64, prec: u32) -> Result<BigFloat> {
    require_error_range(n)?;
    let pieces = Pieces::new(t, m, prec)?;
    Ok(BigFloat::upper_of(&pieces.error_bound(&pieces.x(n)?)))
}

/// Smallest integer `n` with `n >= mu + (3t / (4 pi))^2 / mu`, where the
/// Bessel argument is at least 3 and the lower Bessel bound applies.
pub fn delta_min_index(t: u64, m: u64) -> Result<u64> {
    let pieces = Pieces::new(t, m, DEFAULT_PREC)?;
    let r = Interval::from_i64(DEFAULT_PREC, 3 * t as i64) / Interval::pi(DEFAULT_PREC).mul_i64(4);
    let bound = &pieces.mu + &(&(&r * &r) / &pieces.mu);
    Ok(ceil_u64(bound.hi()).max(3))
}

fn ceil_u64(x: &Float) -> u64 {
    x.to_integer_round(rug::float::Round::Up).expect("finite").0.to_u64().expect("fits")
}

/// Lower-rounded threshold
/// `(c_min / 10) sqrt(pi / t) mu^{1/4} (n - mu)^{-3/4} exp(4 pi sqrt(mu (n - mu)) / t) - E(n)`.
/// Positive values certify that the main term dominates the error bound at
/// `n` whenever `|alpha| >= c_min`.
pub fn delta_threshold(t: u64, m: u64, n: u64, c_min: &BigFloat, prec: u32) -> Result<BigFloat> {
    let min = delta_min_index(t, m)?;
    if n < min {
        return Err(Error::IndexTooSmall { n, min: min.to_string() });
    }
    let pieces = Pieces::new(t, m, prec)?;
    let c = Interval::new(c_min.value().clone(), c_min.value().clone());
    Ok(BigFloat::lower_of(&pieces.delta(&pieces.x(n)?, &c)))
}

/// Main term, error bound and, where the bound is beaten, the sign.
#[derive(Clone, Debug)]
pub struct AsymptoticEstimate {
    pub n: u64,
    pub main: Interval,
    pub error_bound: BigFloat,
    pub sign_certified: Option<Sign>,
}

pub fn estimate(t: u64, m: u64, n: u64, prec: u32) -> Result<AsymptoticEstimate> {
    require_error_range(n)?;
    let pieces = Pieces::new(t, m, prec)?;
    let x = pieces.x(n)?;
    let main = pieces.main_term(&x, &alpha_enclosure(t, m, n, prec))?;
    let err = BigFloat::upper_of(&pieces.error_bound(&x));
    let sign_certified = match main.sign() {
        Some(s @ (Sign::Positive | Sign::Negative)) if main.abs().lo() > err.value() => Some(s),
        _ => None,
    };
    Ok(AsymptoticEstimate { n, main, error_bound: err, sign_certified })
}

/// Evaluator for the sign of the threshold function at many `n`, with
/// automatic precision escalation.
pub struct DeltaEvaluator {
    t: u64,
    m: u64,
    c_min: BigFloat,
    levels: Vec<Pieces>,
    min_index: u64,
}

impl DeltaEvaluator {
    pub fn new(t: u64, m: u64, c_min: BigFloat) -> Result<Self> {
        Ok(DeltaEvaluator { t, m, c_min, levels: vec![Pieces::new(t, m, DEFAULT_PREC)?], min_index: delta_min_index(t, m)? })
    }

    pub fn min_index(&self) -> u64 {
        self.min_index
    }

    /// Certified `Delta(n) > 0`.
    pub fn is_positive(&mut self, n: u64) -> Result<bool> {
        if n < self.min_index {
            return Err(Error::IndexTooSmall { n, min: self.min_index.to_string() });
        }
        let mut level = 0;
        loop {
            if level == self.levels.len() {
                let prec = self.levels[level - 1].prec * 2;
                if prec > MAX_PREC {
                    return Err(Error::PrecisionExhausted { bits: MAX_PREC, what: format!("deciding the sign of Delta_{}^({})({n})", self.t, self.m) });
                }
                self.levels.push(Pieces::new(self.t, self.m, prec)?);
            }
            let p = &self.levels[level];
            let c = Interval::new(self.c_min.value().clone(), self.c_min.value().clone());
            let d = p.delta(&p.x(n)?, &c);
            if d.lo().cmp0() == Some(Ordering::Greater) {
                return Ok(true);
            }
            if d.hi().cmp0() != Some(Ordering::Greater) {
                return Ok(false);
            }
            level += 1;
        }
    }

    /// Upper bound on `x* = 1.5 / (growth_main - growth_error)`: beyond
    /// `n = mu + x*^2` the log-derivative (in `x = sqrt(n - mu)`) of the
    /// main-term lower bound, `-3/(2x) + growth_main`, exceeds that of the
    /// error bound, which is at most `growth_error`. So the ratio of the two
    /// is increasing there and `Delta` changes sign at most once.
    pub fn monotone_from(&self) -> Result<u64> {
        let p = &self.levels[0];
        let gap = &p.consts.growth_main - &p.consts.growth_error;
        if gap.lo().cmp0() != Some(Ordering::Greater) {
            return Err(Error::CutoffFailed { t: self.t, reason: format!("no growth gap for m = {}", self.m) });
        }
        let xs = Interval::from_i64(p.prec, 3) / gap.mul_i64(2);
        let n = &p.mu + &(&xs * &xs);
        Ok(ceil_u64(n.hi()))
    }
}

/// Per-`m` result of the cutoff search.
#[derive(Clone, Debug, Serialize)]
pub struct CutoffDetail {
    pub m: u64,
    /// certified lower bound on `min |alpha|`, as a decimal string
    pub c_min: String,
    /// largest `n` with `Delta(n) <= 0`; zero if there is none
    pub last_nonpositive: u64,
    /// the threshold function is certified positive for all `n >= first_certified`
    pub first_certified: u64,
    /// beyond this index the ratio bound is monotone
    pub monotone_from: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Cutoff {
    pub t: u64,
    pub b: u64,
    /// length of the window past `b` on which positivity was re-checked for every `m`
    pub window: u64,
    pub per_m: Vec<CutoffDetail>,
}

const SCAN_LIMIT: u64 = 1 << 40;

/// Cutoff `B(t)` such that `Delta_t^(m)(n) > 0` for every `n > B(t)` and every
/// `m` listed. `c_min_per_m` gives the lower bound on `|alpha|` used for each
/// `m`.
///
/// For each `m` the search starts at the point `L` past which the ratio of the
/// main-term lower bound to the error bound is provably increasing, finds the
/// first certified-positive `n1 >= L` (doubling, then bisection, valid by
/// monotonicity), and walks down from `n1` while `Delta` stays positive. All
/// `n` in `(B, n1)` are thus checked explicitly and all `n >= n1` follow from
/// monotonicity. Finally positivity is re-checked on `(B, B + window]`.
pub fn find_b(t: u64, c_min_per_m: &[(u64, BigFloat)], window: u64) -> Result<Cutoff> {
    let mut per_m = Vec::new();
    let mut evals = Vec::new();
    for (m, c) in c_min_per_m {
        if c.value().cmp0() != Some(Ordering::Greater) {
            return Err(Error::CutoffFailed { t, reason: format!("c_min for m = {m} is not positive") });
        }
        let mut ev = DeltaEvaluator::new(t, *m, c.clone())?;
        let start = ev.monotone_from()?.max(ev.min_index());
        let first_certified = first_positive_from(&mut ev, start, t)?;
        let mut n = first_certified;
        while n > ev.min_index() && ev.is_positive(n - 1)? {
            n -= 1;
        }
        // n is the first of an all-positive run ending in the monotone region;
        // n - 1 is non-positive or outside the validity range
        let last_nonpositive = n - 1;
        per_m.push(CutoffDetail {
            m: *m,
            c_min: c.to_decimal(12),
            last_nonpositive,
            first_certified: n,
            monotone_from: start,
        });
        evals.push(ev);
    }
    let b = per_m.iter().map(|d| d.last_nonpositive).max().unwrap_or(0);
    for ev in &mut evals {
        for n in (b + 1)..=(b + window) {
            if n >= ev.min_index() && !ev.is_positive(n)? {
                return Err(Error::CutoffFailed { t, reason: format!("Delta not positive at n = {n} for m = {}", ev.m) });
            }
        }
    }
    Ok(Cutoff { t, b, window, per_m })
}

fn first_positive_from(ev: &mut DeltaEvaluator, start: u64, t: u64) -> Result<u64> {
    if ev.is_positive(start)? {
        return Ok(start);
    }
    let mut lo = start; // known non-positive
    let mut step = 1u64;
    let hi = loop {
        let cand = start + step;
        if cand > SCAN_LIMIT {
            return Err(Error::CutoffFailed { t, reason: format!("no positive Delta below {SCAN_LIMIT} for m = {}", ev.m) });
        }
        if ev.is_positive(cand)? {
            break cand;
        }
        lo = cand;
        step *= 2;
    };
    let (mut lo, mut hi) = (lo, hi);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if ev.is_positive(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::borwein_coeffs;

    fn bf(x: f64) -> BigFloat {
        BigFloat::from_f64(64, x, crate::arith::Rounding::Down)
    }

    #[test]
    fn main_term_contains_coefficient_within_error() {
        let c = borwein_coeffs(2, 24, 100);
        let alpha = Interval::from_i64(256, 1);
        let main = main_term(2, 24, 100, &alpha, 256).unwrap();
        let err = error_bound(2, 24, 100, 256).unwrap();
        let exact = Interval::from_integer(256, c.coeff(100));
        let diff = (&exact - &main).abs();
        assert!(diff.hi() <= err.value());
    }

    #[test]
    fn zero_alpha_gives_exact_zero() {
        let z = main_term(5, 5, 40, &Interval::zero(128), 128).unwrap();
        assert_eq!(z.sign(), Some(Sign::Zero));
    }

    #[test]
    fn error_bound_domain() {
        assert!(error_bound(2, 1, 10, 128).unwrap().value().cmp0() == Some(Ordering::Greater));
        assert!(error_bound(2, 1, 2, 128).is_err());
        assert!(error_bound(3, 13, 10, 128).is_err());
        assert!(main_term(2, 24, 1, &Interval::from_i64(64, 1), 64).is_err());
    }

    #[test]
    fn threshold_prefactor_for_c_min_one_tenth() {
        // with c_min = 0.1 the leading coefficient is sqrt(pi/t)/100
        let t = 5;
        let p = Pieces::new(t, 4, 256).unwrap();
        let c = Interval::from_rational(256, &Rational::from((1, 10)));
        let lhs = &p.lower_scale * &c;
        let mu_q = Interval::from_rational(256, &p.consts.mu).sqrt().sqrt();
        let rhs = (&Interval::pi(256).div_i64(t as i64).sqrt() * &mu_q).div_i64(100);
        assert!((&lhs - &rhs).abs().hi() < &Float::with_val(256, 1e-70));
    }

    #[test]
    fn paper_cutoffs_are_positive() {
        let d = delta_threshold(2, 24, 251, &bf(0.1), 256).unwrap();
        assert!(d.value().cmp0() == Some(Ordering::Greater));
        for m in 1..=6 {
            let mut ev = DeltaEvaluator::new(5, m, bf(0.1)).unwrap();
            for n in (461..=960).step_by(37) {
                assert!(ev.is_positive(n).unwrap(), "m={m} n={n}");
            }
        }
        assert!(delta_threshold(5, 1, 1, &bf(0.1), 256).is_err());
    }

    #[test]
    fn find_b_for_two() {
        let per_m: Vec<_> = (1..=24).map(|m| (m, bf(1.0))).collect();
        let cut = find_b(2, &per_m, 100).unwrap();
        assert!(cut.b <= 250);
        assert!(cut.b >= 100);
    }
}
