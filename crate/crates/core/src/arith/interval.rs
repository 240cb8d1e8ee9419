//! Arbitrary-precision floats with an explicit rounding direction, and closed
//! intervals whose endpoints are rounded outward on every operation.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::float::{Constant, Round};
use rug::ops::AssignRound;
use rug::{Float, Integer, Rational};

use super::Sign;

/// Direction in which a [`BigFloat`] was rounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rounding {
    Down,
    Up,
    Nearest,
}

impl Rounding {
    fn mpfr(self) -> Round {
        match self {
            Rounding::Down => Round::Down,
            Rounding::Up => Round::Up,
            Rounding::Nearest => Round::Nearest,
        }
    }
}

/// A float value together with the direction it was rounded in. A value
/// tagged [`Rounding::Down`] is a certified lower bound of the quantity it
/// stands for, [`Rounding::Up`] a certified upper bound.
#[derive(Debug, Clone, PartialEq)]
pub struct BigFloat {
    value: Float,
    rounding: Rounding,
}

impl BigFloat {
    pub fn from_rational(prec: u32, q: &Rational, rounding: Rounding) -> Self {
        let (value, _) = Float::with_val_round(prec, q, rounding.mpfr());
        BigFloat { value, rounding }
    }

    pub fn from_f64(prec: u32, x: f64, rounding: Rounding) -> Self {
        BigFloat { value: Float::with_val(prec, x), rounding }
    }

    pub fn lower_of(iv: &Interval) -> Self {
        BigFloat { value: iv.lo.clone(), rounding: Rounding::Down }
    }

    pub fn upper_of(iv: &Interval) -> Self {
        BigFloat { value: iv.hi.clone(), rounding: Rounding::Up }
    }

    pub fn value(&self) -> &Float {
        &self.value
    }

    pub fn rounding(&self) -> Rounding {
        self.rounding
    }

    pub fn prec(&self) -> u32 {
        self.value.prec()
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    /// Decimal rendering with `digits` significant digits, rounded in the
    /// value's own direction so the printed number keeps its bound semantics.
    pub fn to_decimal(&self, digits: usize) -> String {
        self.value.to_string_radix_round(10, Some(digits), self.rounding.mpfr())
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(20))
    }
}

/// Closed interval `[lo, hi]` with MPFR endpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct Interval {
    lo: Float,
    hi: Float,
}

fn down<T>(prec: u32, v: T) -> Float
where
    Float: AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, v, Round::Down).0
}

fn up<T>(prec: u32, v: T) -> Float
where
    Float: AssignRound<T, Round = Round, Ordering = Ordering>,
{
    Float::with_val_round(prec, v, Round::Up).0
}

fn fmin(a: Float, b: Float) -> Float {
    if b < a {
        b
    } else {
        a
    }
}

fn fmax(a: Float, b: Float) -> Float {
    if b > a {
        b
    } else {
        a
    }
}

impl Interval {
    pub fn new(lo: Float, hi: Float) -> Self {
        assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn zero(prec: u32) -> Self {
        Interval { lo: Float::with_val(prec, 0), hi: Float::with_val(prec, 0) }
    }

    pub fn from_i64(prec: u32, v: i64) -> Self {
        Interval { lo: down(prec, v), hi: up(prec, v) }
    }

    pub fn from_integer(prec: u32, v: &Integer) -> Self {
        Interval { lo: down(prec, v), hi: up(prec, v) }
    }

    pub fn from_rational(prec: u32, q: &Rational) -> Self {
        Interval { lo: down(prec, q), hi: up(prec, q) }
    }

    pub fn from_f64(prec: u32, x: f64) -> Self {
        let v = Float::with_val(prec.max(53), x);
        Interval { lo: v.clone(), hi: v }
    }

    pub fn pi(prec: u32) -> Self {
        Interval { lo: down(prec, Constant::Pi), hi: up(prec, Constant::Pi) }
    }

    pub fn lo(&self) -> &Float {
        &self.lo
    }

    pub fn hi(&self) -> &Float {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.lo.prec().max(self.hi.prec())
    }

    pub fn mid_f64(&self) -> f64 {
        (self.lo.to_f64() + self.hi.to_f64()) / 2.0
    }

    /// Upper bound on `hi - lo`.
    pub fn width(&self) -> Float {
        up(self.prec(), &self.hi - &self.lo)
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.cmp0() != Some(Ordering::Greater) && self.hi.cmp0() != Some(Ordering::Less)
    }

    pub fn contains_f64(&self, x: f64) -> bool {
        self.lo <= x && self.hi >= x
    }

    pub fn contains_integer(&self, x: &Integer) -> bool {
        self.lo <= *x && self.hi >= *x
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        self.lo >= other.lo && self.hi <= other.hi
    }

    /// Sign, if the interval determines it: `Zero` only for the degenerate
    /// interval `[0, 0]`.
    pub fn sign(&self) -> Option<Sign> {
        if self.lo.cmp0() == Some(Ordering::Greater) {
            Some(Sign::Positive)
        } else if self.hi.cmp0() == Some(Ordering::Less) {
            Some(Sign::Negative)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Sign::Zero)
        } else {
            None
        }
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: fmin(self.lo.clone(), other.lo.clone()),
            hi: fmax(self.hi.clone(), other.hi.clone()),
        }
    }

    pub fn abs(&self) -> Interval {
        if self.lo.cmp0() != Some(Ordering::Less) {
            self.clone()
        } else if self.hi.cmp0() != Some(Ordering::Greater) {
            -self
        } else {
            let hi = fmax(Float::with_val(self.prec(), -&self.lo), self.hi.clone());
            Interval { lo: Float::with_val(self.prec(), 0), hi }
        }
    }

    pub fn sqrt(&self) -> Interval {
        let p = self.prec();
        let lo = if self.lo.cmp0() == Some(Ordering::Greater) {
            down(p, self.lo.sqrt_ref())
        } else {
            Float::with_val(p, 0)
        };
        assert!(self.hi.cmp0() != Some(Ordering::Less), "sqrt of a negative interval");
        Interval { lo, hi: up(p, self.hi.sqrt_ref()) }
    }

    pub fn exp(&self) -> Interval {
        let p = self.prec();
        Interval { lo: down(p, self.lo.exp_ref()), hi: up(p, self.hi.exp_ref()) }
    }

    /// Natural logarithm; the interval must be strictly positive.
    pub fn ln(&self) -> Interval {
        assert!(self.lo.cmp0() == Some(Ordering::Greater), "ln of a non-positive interval");
        let p = self.prec();
        Interval { lo: down(p, self.lo.ln_ref()), hi: up(p, self.hi.ln_ref()) }
    }

    /// Cosine, enclosed by `cos(mid) +- radius` (cos is 1-Lipschitz).
    pub fn cos(&self) -> Interval {
        let p = self.prec();
        let mid = Float::with_val(p + 16, &self.lo + &self.hi) / 2u32;
        let rad = fmax(up(p, &mid - &self.lo), up(p, &self.hi - &mid));
        let c_lo = down(p, mid.cos_ref());
        let c_hi = up(p, mid.cos_ref());
        let lo = fmax(down(p, &c_lo - &rad), Float::with_val(p, -1));
        let hi = fmin(up(p, &c_hi + &rad), Float::with_val(p, 1));
        Interval { lo, hi }
    }

    /// `self^k` for a non-negative integer exponent.
    pub fn powu(&self, k: u32) -> Interval {
        let mut acc = Interval::from_i64(self.prec(), 1);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^(num/den)` for a strictly positive interval.
    pub fn pow_ratio(&self, num: i64, den: i64) -> Interval {
        let q = Interval::from_rational(self.prec(), &Rational::from((num, den)));
        let l = self.ln();
        (&l * &q).exp()
    }

    pub fn mul_i64(&self, k: i64) -> Interval {
        self * &Interval::from_i64(self.prec(), k)
    }

    pub fn div_i64(&self, k: i64) -> Interval {
        self / &Interval::from_i64(self.prec(), k)
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval { lo: Float::with_val(self.prec(), -&self.hi), hi: Float::with_val(self.prec(), -&self.lo) }
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        -&self
    }
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, o: &Interval) -> Interval {
        let p = self.prec().max(o.prec());
        Interval { lo: down(p, &self.lo + &o.lo), hi: up(p, &self.hi + &o.hi) }
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, o: &Interval) -> Interval {
        let p = self.prec().max(o.prec());
        Interval { lo: down(p, &self.lo - &o.hi), hi: up(p, &self.hi - &o.lo) }
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, o: &Interval) -> Interval {
        let p = self.prec().max(o.prec());
        let pairs = [(&self.lo, &o.lo), (&self.lo, &o.hi), (&self.hi, &o.lo), (&self.hi, &o.hi)];
        let mut lo: Option<Float> = None;
        let mut hi: Option<Float> = None;
        for (a, b) in pairs {
            let l = down(p, a * b);
            let h = up(p, a * b);
            lo = Some(match lo {
                Some(x) => fmin(x, l),
                None => l,
            });
            hi = Some(match hi {
                Some(x) => fmax(x, h),
                None => h,
            });
        }
        Interval { lo: lo.unwrap(), hi: hi.unwrap() }
    }
}

impl Div for &Interval {
    type Output = Interval;
    /// Panics if the divisor contains zero.
    fn div(self, o: &Interval) -> Interval {
        assert!(!o.contains_zero(), "division by an interval containing zero");
        let p = self.prec().max(o.prec());
        let pairs = [(&self.lo, &o.lo), (&self.lo, &o.hi), (&self.hi, &o.lo), (&self.hi, &o.hi)];
        let mut lo: Option<Float> = None;
        let mut hi: Option<Float> = None;
        for (a, b) in pairs {
            let l = down(p, a / b);
            let h = up(p, a / b);
            lo = Some(match lo {
                Some(x) => fmin(x, l),
                None => l,
            });
            hi = Some(match hi {
                Some(x) => fmax(x, h),
                None => h,
            });
        }
        Interval { lo: lo.unwrap(), hi: hi.unwrap() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Interval {
            type Output = Interval;
            fn $m(self, o: Interval) -> Interval {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            self.lo.to_string_radix_round(10, Some(12), Round::Down),
            self.hi.to_string_radix_round(10, Some(12), Round::Up)
        )
    }
}
