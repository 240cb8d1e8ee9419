use rug::Integer;
use serde::{Deserialize, Serialize};

use super::series::IntegerSeries;
use crate::par::ExecMode;
use crate::{Error, Result};

/// Nonzero terms of `(q;q)_inf = sum_j (-1)^j q^{j(3j+1)/2}` up to `q^order`,
/// sorted by exponent.
pub fn pentagonal_terms(order: usize) -> Vec<(usize, i64)> {
    let mut terms = vec![(0, 1)];
    for j in 1i64.. {
        let lo = (j * (3 * j - 1) / 2) as usize;
        if lo > order {
            break;
        }
        let sign = if j % 2 == 0 { 1 } else { -1 };
        terms.push((lo, sign));
        let hi = (j * (3 * j + 1) / 2) as usize;
        if hi <= order {
            terms.push((hi, sign));
        }
    }
    terms
}

/// Nonzero terms of `(q;q)_inf^3 = sum_{j>=0} (-1)^j (2j+1) q^{j(j+1)/2}`.
pub fn jacobi_terms(order: usize) -> Vec<(usize, i64)> {
    (0i64..)
        .map(|j| ((j * (j + 1) / 2) as usize, if j % 2 == 0 { 2 * j + 1 } else { -(2 * j + 1) }))
        .take_while(|&(e, _)| e <= order)
        .collect()
}

fn dilate_terms(terms: &[(usize, i64)], k: usize, order: usize) -> Vec<(usize, i64)> {
    terms.iter().map(|&(e, c)| (e * k, c)).filter(|&(e, _)| e <= order).collect()
}

/// `(q^a; q^b)_inf^e` truncated at `order`.
///
/// Full eta factors (`a` a positive multiple of `b`) go through the sparse
/// pentagonal expansion; everything else is built one `(1 - q^j)` at a time.
pub fn euler_factor(a: usize, b: usize, e: i64, order: usize) -> Result<IntegerSeries> {
    let mut s = IntegerSeries::one(order);
    apply_euler_factor(&mut s, a, b, e, ExecMode::default())?;
    Ok(s)
}

/// Multiply `s` in place by `(q^a; q^b)_inf^e`.
pub fn apply_euler_factor(s: &mut IntegerSeries, a: usize, b: usize, e: i64, mode: ExecMode) -> Result<()> {
    if b == 0 {
        return Err(Error::InvalidArgument("factor step b must be >= 1".into()));
    }
    if e == 0 {
        return Ok(());
    }
    let order = s.order();
    if a == 0 {
        // (1; q^b) contains the factor 1 - 1 = 0.
        if e < 0 {
            return Err(Error::NotInvertible("0".into()));
        }
        *s = IntegerSeries::zero(order);
        return Ok(());
    }
    if a % b == 0 {
        let eta = dilate_terms(&pentagonal_terms(order / b), b, order);
        // (q^a; q^b) = (q^b; q^b) / prod_{j < a} (1 - q^j), j running over multiples of b
        let missing: Vec<usize> = (1..a / b).map(|k| k * b).filter(|&j| j <= order).collect();
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                *s = s.mul_sparse(&eta, mode);
                missing.iter().for_each(|&j| divide_binomial(s, j));
            } else {
                s.div_sparse(&eta)?;
                missing.iter().for_each(|&j| multiply_binomial(s, j));
            }
        }
        return Ok(());
    }
    for _ in 0..e.unsigned_abs() {
        let mut j = a;
        while j <= order {
            if e > 0 {
                multiply_binomial(s, j);
            } else {
                divide_binomial(s, j);
            }
            j += b;
        }
    }
    Ok(())
}

/// `s <- s (1 - q^j)`.
fn multiply_binomial(s: &mut IntegerSeries, j: usize) {
    let mut c = std::mem::replace(s, IntegerSeries::one(0)).into_coeffs();
    for i in (j..c.len()).rev() {
        let (lo, hi) = c.split_at_mut(i);
        hi[0] -= &lo[i - j];
    }
    *s = IntegerSeries::new(c);
}

/// `s <- s / (1 - q^j)`.
fn divide_binomial(s: &mut IntegerSeries, j: usize) {
    let mut c = std::mem::replace(s, IntegerSeries::one(0)).into_coeffs();
    for i in j..c.len() {
        let (lo, hi) = c.split_at_mut(i);
        hi[0] += &lo[i - j];
    }
    *s = IntegerSeries::new(c);
}

/// One factor `(q^a; q^b)_inf^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub a: usize,
    pub b: usize,
    pub e: i64,
}

impl Factor {
    pub fn new(a: usize, b: usize, e: i64) -> Self {
        Factor { a, b, e }
    }

    /// The eta-type factor `(q^b; q^b)_inf^e`.
    pub fn eta(b: usize, e: i64) -> Self {
        Factor { a: b, b, e }
    }
}

/// `c q^s prod_i (q^{a_i}; q^{b_i})_inf^{e_i}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesSpec {
    pub coefficient: i64,
    pub shift: usize,
    pub factors: Vec<Factor>,
}

impl SeriesSpec {
    pub fn new(factors: Vec<Factor>) -> Self {
        SeriesSpec { coefficient: 1, shift: 0, factors }
    }

    /// Eta quotient `prod (q^b; q^b)^e` from `(b, e)` pairs.
    pub fn eta_quotient(pairs: &[(usize, i64)]) -> Self {
        Self::new(pairs.iter().map(|&(b, e)| Factor::eta(b, e)).collect())
    }

    pub fn with_coefficient(mut self, c: i64) -> Self {
        self.coefficient = c;
        self
    }

    pub fn with_shift(mut self, s: usize) -> Self {
        self.shift = s;
        self
    }

    fn validate(&self) -> Result<()> {
        for f in &self.factors {
            if f.b == 0 {
                return Err(Error::InvalidArgument(format!("factor (q^{}; q^0) has zero step", f.a)));
            }
        }
        Ok(())
    }

    /// Structured expansion to `order`: multiplications first, so every
    /// division acts on the final numerator.
    pub fn expand(&self, order: usize) -> Result<IntegerSeries> {
        self.expand_with(order, ExecMode::default())
    }

    pub fn expand_with(&self, order: usize, mode: ExecMode) -> Result<IntegerSeries> {
        self.validate()?;
        if self.shift > order {
            return Ok(IntegerSeries::zero(order));
        }
        let inner = order - self.shift;
        let mut s = IntegerSeries::one(inner);
        let (pos, neg): (Vec<&Factor>, Vec<&Factor>) = self.factors.iter().partition(|f| f.e > 0);
        for f in pos.into_iter().chain(neg) {
            apply_euler_factor(&mut s, f.a, f.b, f.e, mode)?;
        }
        Ok(s.scale(&Integer::from(self.coefficient)).shift(self.shift))
    }

    /// Independent oracle: every factor is multiplied in as a dense
    /// polynomial `(1 - q^j)` or dense geometric series `1/(1 - q^j)` by
    /// schoolbook convolution.
    pub fn expand_naive(&self, order: usize) -> Result<IntegerSeries> {
        self.validate()?;
        if self.shift > order {
            return Ok(IntegerSeries::zero(order));
        }
        let inner = order - self.shift;
        let mut s = IntegerSeries::one(inner);
        for f in &self.factors {
            let mut j = f.a;
            loop {
                if j > inner {
                    break;
                }
                let mut dense = IntegerSeries::zero(inner);
                if j == 0 {
                    if f.e < 0 {
                        return Err(Error::NotInvertible("0".into()));
                    }
                    // multiplying by (1 - 1) annihilates everything
                } else if f.e > 0 {
                    let mut c = dense.into_coeffs();
                    c[0] = Integer::from(1);
                    c[j] = Integer::from(-1);
                    dense = IntegerSeries::new(c);
                } else {
                    let mut c = dense.into_coeffs();
                    for k in (0..=inner).step_by(j) {
                        c[k] = Integer::from(1);
                    }
                    dense = IntegerSeries::new(c);
                }
                for _ in 0..f.e.unsigned_abs() {
                    s = s.mul_naive(&dense);
                }
                if j == 0 {
                    break;
                }
                j += f.b;
            }
        }
        Ok(s.scale(&Integer::from(self.coefficient)).shift(self.shift))
    }
}

/// Coefficients of `(q;q)^m / (q^t;q^t)^m` through `q^order`: `m` sparse
/// pentagonal multiplications followed by `m` sparse divisions.
pub fn borwein_coeffs(t: usize, m: usize, order: usize) -> IntegerSeries {
    borwein_coeffs_with(t, m, order, ExecMode::default())
}

pub fn borwein_coeffs_with(t: usize, m: usize, order: usize, mode: ExecMode) -> IntegerSeries {
    assert!(t >= 1, "t must be positive");
    let eta = pentagonal_terms(order);
    let eta_t = dilate_terms(&pentagonal_terms(order / t), t, order);
    let mut s = IntegerSeries::one(order);
    for _ in 0..m {
        s = s.mul_sparse(&eta, mode);
    }
    for _ in 0..m {
        s.div_sparse(&eta_t).expect("eta factor has constant term 1");
    }
    s
}
