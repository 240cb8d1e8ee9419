//! The ring `Z[zeta_N]` represented as integer polynomials reduced modulo the
//! N-th cyclotomic polynomial.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::{Interval, Rational};

/// Coefficients (lowest degree first) of the N-th cyclotomic polynomial,
/// obtained by exact division of `x^N - 1` by `Phi_d` for every proper
/// divisor `d` of `N`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = div_exact_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    cache.lock().unwrap().insert(n, num.clone());
    num
}

fn div_exact_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    debug_assert_eq!(den[dn], 1);
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] = rem[i + j].checked_sub(c.checked_mul(dj).expect("overflow")).expect("overflow");
            }
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "division not exact");
    q
}

/// Element of `Z[zeta_N]`, `zeta_N = exp(2 pi i / N)`, stored as the unique
/// representative of degree below `deg Phi_N`. Equality of elements is
/// equality of coefficient vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicElement {
    order: u32,
    coeffs: Vec<i64>,
}

impl CyclotomicElement {
    pub fn zero(order: u32) -> Self {
        let deg = cyclotomic_polynomial(order).len() - 1;
        CyclotomicElement { order, coeffs: vec![0; deg] }
    }

    /// `sum_k zeta_N^{e_k}` for the given (possibly negative) exponents.
    pub fn from_root_sum<I: IntoIterator<Item = i64>>(order: u32, exponents: I) -> Self {
        let n = order as i64;
        let mut dense = vec![0i64; order as usize];
        for e in exponents {
            dense[e.rem_euclid(n) as usize] += 1;
        }
        Self::reduce(order, dense)
    }

    /// Reduce an arbitrary polynomial in `zeta_N` (coefficient `k` multiplies
    /// `zeta_N^k`) modulo `Phi_N`.
    pub fn reduce(order: u32, mut poly: Vec<i64>) -> Self {
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1;
        for i in (deg..poly.len()).rev() {
            let c = poly[i];
            if c == 0 {
                continue;
            }
            for (j, &pj) in phi.iter().enumerate() {
                poly[i - deg + j] -= c * pj;
            }
        }
        poly.truncate(deg);
        poly.resize(deg, 0);
        CyclotomicElement { order, coeffs: poly }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Image under `zeta -> zeta^{-1}`.
    pub fn conj(&self) -> Self {
        let n = self.order as usize;
        let mut dense = vec![0i64; n];
        for (k, &c) in self.coeffs.iter().enumerate() {
            dense[(n - k) % n] += c;
        }
        Self::reduce(self.order, dense)
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        CyclotomicElement { order: self.order, coeffs }
    }

    /// Enclosure of the real part `sum_k c_k cos(2 pi k / N)`.
    pub fn real_enclosure(&self, prec: u32) -> Interval {
        let two_pi = Interval::pi(prec).mul_i64(2);
        let mut acc = Interval::zero(prec);
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let angle = &two_pi * &Interval::from_rational(prec, &Rational::from((k as i64, self.order as i64)));
            acc = &acc + &angle.cos().mul_i64(c);
        }
        acc
    }

    /// Enclosure of the imaginary part `sum_k c_k sin(2 pi k / N)`.
    pub fn imag_enclosure(&self, prec: u32) -> Interval {
        // sin(x) = cos(x - pi/2)
        let pi = Interval::pi(prec);
        let two_pi = pi.mul_i64(2);
        let half_pi = pi.div_i64(2);
        let mut acc = Interval::zero(prec);
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let angle = &two_pi * &Interval::from_rational(prec, &Rational::from((k as i64, self.order as i64)));
            acc = &acc + &(&angle - &half_pi).cos().mul_i64(c);
        }
        acc
    }
}
