use std::fmt;

use rug::Integer;

use crate::par::{fill_indexed, ExecMode};
use crate::{Error, Result};

/// A power series truncated at order `N`: `coeffs[n]` is the exact
/// coefficient of `q^n` for `0 <= n <= N`, and nothing is known beyond.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegerSeries {
    coeffs: Vec<Integer>,
}

/// Sparse series `sum c_k q^{e_k}` with small coefficients, exponents
/// strictly increasing.
pub type SparseTerms = [(usize, i64)];

impl IntegerSeries {
    /// Series with the given coefficients; the order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Integer>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        IntegerSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![Integer::new(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(Integer::from(1), 0, order)
    }

    /// `c q^s` to order `order`.
    pub fn monomial(c: Integer, s: usize, order: usize) -> Self {
        let mut out = Self::zero(order);
        if s <= order {
            out.coeffs[s] = c;
        }
        out
    }

    /// Sparse terms expanded densely to order `order`.
    pub fn from_sparse(terms: &SparseTerms, order: usize) -> Self {
        let mut out = Self::zero(order);
        for &(e, c) in terms {
            if e <= order {
                out.coeffs[e] += c;
            }
        }
        out
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Integer> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Integer {
        &self.coeffs[n]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.cmp0().is_eq())
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| c.cmp0().is_ne())
    }

    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.truncate(order + 1);
        self
    }

    /// First index where the two series differ, compared up to the smaller
    /// order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.order().min(other.order());
        (0..=n).find(|&i| self.coeffs[i] != other.coeffs[i])
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new((0..=n).map(|i| Integer::from(&self.coeffs[i] + &other.coeffs[i])).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::new((0..=n).map(|i| Integer::from(&self.coeffs[i] - &other.coeffs[i])).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| Integer::from(-c)).collect())
    }

    pub fn scale(&self, k: &Integer) -> Self {
        Self::new(self.coeffs.iter().map(|c| Integer::from(c * k)).collect())
    }

    /// Schoolbook product, sequential. Kept deliberately simple: it is the
    /// oracle the structured constructions are tested against.
    pub fn mul_naive(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![Integer::new(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.cmp0().is_eq() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Dense product, parallel over output coefficients.
    pub fn mul(&self, other: &Self) -> Self {
        self.mul_with(other, ExecMode::default())
    }

    pub fn mul_with(&self, other: &Self, mode: ExecMode) -> Self {
        let n = self.order().min(other.order());
        let (a, b) = (&self.coeffs, &other.coeffs);
        let mut out = vec![Integer::new(); n + 1];
        fill_indexed(mode, &mut out, |k| {
            let mut acc = Integer::new();
            for i in 0..=k {
                acc += &a[i] * &b[k - i];
            }
            acc
        });
        Self::new(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Product with a sparse series, parallel over output coefficients.
    pub fn mul_sparse(&self, terms: &SparseTerms, mode: ExecMode) -> Self {
        let a = &self.coeffs;
        let mut out = vec![Integer::new(); a.len()];
        fill_indexed(mode, &mut out, |i| {
            let mut acc = Integer::new();
            for &(e, c) in terms {
                if e > i {
                    break;
                }
                match c {
                    1 => acc += &a[i - e],
                    -1 => acc -= &a[i - e],
                    _ => acc += &a[i - e] * c,
                }
            }
            acc
        });
        Self::new(out)
    }

    /// Quotient by a sparse series whose constant term is `±1`, in place.
    /// Inherently sequential: each coefficient depends on earlier results.
    pub fn div_sparse(&mut self, terms: &SparseTerms) -> Result<()> {
        let c0 = match terms.first() {
            Some(&(0, c)) if c == 1 || c == -1 => c,
            Some(&(0, c)) => return Err(Error::NotInvertible(c.to_string())),
            _ => return Err(Error::NotInvertible("0".into())),
        };
        let a = &mut self.coeffs;
        for i in 0..a.len() {
            let (done, rest) = a.split_at_mut(i);
            let cur = &mut rest[0];
            for &(e, c) in &terms[1..] {
                if e > i {
                    break;
                }
                match c {
                    1 => *cur -= &done[i - e],
                    -1 => *cur += &done[i - e],
                    _ => *cur -= &done[i - e] * c,
                }
            }
            if c0 == -1 {
                *cur = Integer::from(-&*cur);
            }
        }
        Ok(())
    }

    /// Multiplicative inverse; the constant term must be `±1`.
    pub fn inverse(&self) -> Result<Self> {
        Self::one(self.order()).exact_div(self)
    }

    /// Exact quotient `self / other`. Leading zeros of `other` are cancelled
    /// against those of `self`, which costs that many orders of precision.
    /// Fails when some coefficient of the quotient is not integral.
    pub fn exact_div(&self, other: &Self) -> Result<Self> {
        let v = other.valuation().ok_or_else(|| Error::NotInvertible("0".into()))?;
        if let Some(i) = (0..v.min(self.order() + 1)).find(|&i| self.coeffs[i].cmp0().is_ne()) {
            return Err(Error::InexactDivision(i));
        }
        let n = self.order().min(other.order());
        if n < v {
            return Err(Error::InvalidArgument(format!("order {n} too small to divide by q^{v}")));
        }
        let n = n - v;
        let num = &self.coeffs[v..=v + n];
        let den = &other.coeffs[v..=v + n];
        let d0 = &den[0];
        let mut out: Vec<Integer> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = num[i].clone();
            for k in 1..=i {
                if den[k].cmp0().is_ne() {
                    acc -= &den[k] * &out[i - k];
                }
            }
            if !acc.is_divisible(d0) {
                return Err(Error::InexactDivision(i));
            }
            acc.div_exact_mut(d0);
            out.push(acc);
        }
        Ok(Self::new(out))
    }

    /// `f(q^k)`; exact through order `k (N + 1) - 1`.
    pub fn dilate(&self, k: usize) -> Self {
        assert!(k >= 1, "dilation factor must be positive");
        let mut out = Self::zero(k * (self.order() + 1) - 1);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[k * i] = c.clone();
        }
        out
    }

    /// `q^s f(q)`; exact through order `N + s`.
    pub fn shift(&self, s: usize) -> Self {
        let mut coeffs = vec![Integer::new(); s];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    /// `sum_n a(t n + r) q^n`, of order `floor((N - r) / t)`.
    pub fn dissect(&self, t: usize, r: usize) -> Self {
        assert!(t >= 1 && r < t, "need 0 <= r < t");
        assert!(r <= self.order(), "residue {r} beyond order {}", self.order());
        Self::new(self.coeffs[r..].iter().step_by(t).cloned().collect())
    }

    /// Interleave `parts[r] = dissect(s, t, r)` back into `s`; the inverse of
    /// [`dissect`](Self::dissect) over all residues.
    pub fn interleave(parts: &[IntegerSeries]) -> Self {
        let t = parts.len();
        assert!(t >= 1);
        let order = (0..t).map(|r| t * (parts[r].order() + 1) + r).min().unwrap() - 1;
        Self::new((0..=order).map(|n| parts[n % t].coeffs[n / t].clone()).collect())
    }

    /// One `n<TAB>coefficient` line per coefficient.
    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        for (n, c) in self.coeffs.iter().enumerate() {
            s.push_str(&format!("{n}\t{c}\n"));
        }
        s
    }

    /// Parses the `n<TAB>coefficient` format. Indices must run 0, 1, 2, ...
    pub fn from_tsv(text: &str) -> Result<Self> {
        let mut coeffs = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim_end_matches('\r');
            if line.is_empty() {
                continue;
            }
            let (n, c) = line
                .split_once('\t')
                .ok_or_else(|| Error::Parse(format!("line {}: expected n<TAB>coefficient", lineno + 1)))?;
            let n: usize = n.trim().parse().map_err(|_| Error::Parse(format!("line {}: bad index {n:?}", lineno + 1)))?;
            if n != coeffs.len() {
                return Err(Error::Parse(format!("line {}: expected index {}, found {n}", lineno + 1, coeffs.len())));
            }
            let c = Integer::from_str_radix(c.trim(), 10)
                .map_err(|_| Error::Parse(format!("line {}: bad coefficient {c:?}", lineno + 1)))?;
            coeffs.push(c);
        }
        if coeffs.is_empty() {
            return Err(Error::Parse("empty series".into()));
        }
        Ok(Self::new(coeffs))
    }

    /// JSON array of decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(|c| serde_json::Value::String(c.to_string())).collect())
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let arr = value.as_array().ok_or_else(|| Error::Parse("expected a JSON array".into()))?;
        let coeffs = arr
            .iter()
            .map(|v| match v {
                serde_json::Value::String(s) => Integer::from_str_radix(s, 10).map_err(|_| Error::Parse(format!("bad coefficient {s:?}"))),
                serde_json::Value::Number(n) => Integer::from_str_radix(&n.to_string(), 10).map_err(|_| Error::Parse(format!("bad coefficient {n}"))),
                other => Err(Error::Parse(format!("bad coefficient {other}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if coeffs.is_empty() {
            return Err(Error::Parse("empty series".into()));
        }
        Ok(Self::new(coeffs))
    }
}

impl fmt::Display for IntegerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.cmp0().is_eq() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}q")?,
                _ => write!(f, "{c}q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[i64]) -> IntegerSeries {
        IntegerSeries::from_i64s(v)
    }

    #[test]
    fn order_is_minimum_of_operands() {
        let a = s(&[1, 2, 3, 4]);
        let b = s(&[1, 1]);
        assert_eq!(a.add(&b), s(&[2, 3]));
        assert_eq!(a.mul(&b).order(), 1);
        assert_eq!(a.mul_naive(&b), s(&[1, 3]));
    }

    #[test]
    fn products_agree() {
        let a = s(&[1, -2, 0, 5, 7, -1]);
        let b = s(&[3, 0, 1, -1, 2, 9]);
        assert_eq!(a.mul(&b), a.mul_naive(&b));
        assert_eq!(a.mul_with(&b, ExecMode::Sequential), a.mul_naive(&b));
        assert_eq!(a.pow(3), a.mul_naive(&a).mul_naive(&a));
        assert_eq!(a.pow(0), IntegerSeries::one(5));
    }

    #[test]
    fn sparse_multiply_and_divide_roundtrip() {
        let a = s(&[1, 4, -3, 8, 0, 2, 11, -6]);
        let terms = [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1)];
        let p = a.mul_sparse(&terms, ExecMode::Parallel);
        assert_eq!(p, a.mul_naive(&IntegerSeries::from_sparse(&terms, 7)));
        assert_eq!(p, a.mul_sparse(&terms, ExecMode::Sequential));
        let mut back = p.clone();
        back.div_sparse(&terms).unwrap();
        assert_eq!(back, a);
        let mut neg = a.clone();
        neg.div_sparse(&[(0, -1), (3, 2)]).unwrap();
        assert_eq!(neg.mul_naive(&IntegerSeries::from_sparse(&[(0, -1), (3, 2)], 7)), a);
        assert!(a.clone().div_sparse(&[(0, 2)]).is_err());
    }

    #[test]
    fn inverse_and_exact_division() {
        let geo = s(&[1, -1, 0, 0, 0]).inverse().unwrap();
        assert_eq!(geo, s(&[1, 1, 1, 1, 1]));
        assert!(s(&[2, 1]).inverse().is_err());
        // (2 + 2q)(1 + 3q) / (2 + 2q)
        let num = s(&[2, 8, 6, 0]);
        assert_eq!(num.exact_div(&s(&[2, 2, 0, 0])).unwrap(), s(&[1, 3, 0, 0]));
        assert_eq!(s(&[1, 0, 0]).exact_div(&s(&[2, 0, 0])), Err(Error::InexactDivision(0)));
        // leading zeros cancel: (q + q^2) / q
        assert_eq!(s(&[0, 1, 1, 0]).exact_div(&s(&[0, 1, 0, 0])).unwrap(), s(&[1, 1, 0]));
    }

    #[test]
    fn dilate_shift_dissect() {
        let a = s(&[1, 2, 3]);
        assert_eq!(a.dilate(3), s(&[1, 0, 0, 2, 0, 0, 3, 0, 0]));
        assert_eq!(a.shift(2), s(&[0, 0, 1, 2, 3]));
        assert_eq!(s(&[1, 2, 3, 4]).dissect(1, 0), s(&[1, 2, 3, 4]));
        let b = s(&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9]);
        assert_eq!(b.dissect(3, 1), s(&[1, 4, 7]));
        assert_eq!(b.dissect(3, 0).order(), 3);
        let parts: Vec<_> = (0..4).map(|r| b.dissect(4, r)).collect();
        assert_eq!(IntegerSeries::interleave(&parts), b);
    }

    #[test]
    fn text_formats_roundtrip() {
        let big: Integer = Integer::from(Integer::u_pow_u(10, 30)) * -7;
        let a = IntegerSeries::new(vec![Integer::from(1), big.clone(), Integer::new()]);
        let tsv = a.to_tsv();
        assert!(tsv.starts_with("0\t1\n1\t-7000000000000000000000000000000\n"));
        assert_eq!(IntegerSeries::from_tsv(&tsv).unwrap(), a);
        let js = a.to_json();
        assert_eq!(js[1], serde_json::json!("-7000000000000000000000000000000"));
        assert_eq!(IntegerSeries::from_json(&js).unwrap(), a);
        assert!(IntegerSeries::from_tsv("0\t1\n2\t3\n").is_err());
        assert!(IntegerSeries::from_tsv("").is_err());
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, -1, 0, 2]).to_string(), "1 + -1q + 2q^3 + O(q^4)");
    }
}
