//! Theta-type series built from their defining sums, so that the product
//! formulas for them are checkable identities rather than definitions.

use rug::Integer;

use super::product::{Factor, SeriesSpec};
use super::series::IntegerSeries;

/// `phi(q) = sum_{n in Z} q^{n^2}`.
pub fn theta_phi(order: usize) -> IntegerSeries {
    let mut c = vec![Integer::new(); order + 1];
    c[0] += 1;
    for n in 1usize.. {
        if n * n > order {
            break;
        }
        c[n * n] += 2;
    }
    IntegerSeries::new(c)
}

/// `psi(q) = sum_{n >= 0} q^{n(n+1)/2}`.
pub fn theta_psi(order: usize) -> IntegerSeries {
    let mut c = vec![Integer::new(); order + 1];
    for n in 0usize.. {
        let e = n * (n + 1) / 2;
        if e > order {
            break;
        }
        c[e] += 1;
    }
    IntegerSeries::new(c)
}

/// Visit every lattice point with `x^2 + xy + y^2 + s(x + y) <= order`,
/// `s in {0, 1}`, passing the exponent and `(x - y) mod 3`.
fn lattice(order: usize, s: i64, mut visit: impl FnMut(usize, usize)) {
    // x^2 + xy + y^2 >= 3x^2/4, and the linear term shifts the centre by 1/3
    let r = ((4.0 * (order as f64 + 1.0) / 3.0).sqrt()).ceil() as i64 + 2;
    for x in -r..=r {
        for y in -r..=r {
            let e = x * x + x * y + y * y + s * (x + y);
            if e >= 0 && e as usize <= order {
                visit(e as usize, (x - y).rem_euclid(3) as usize);
            }
        }
    }
}

/// `a(q) = sum_{m,n} q^{m^2 + mn + n^2}`.
pub fn cubic_a(order: usize) -> IntegerSeries {
    let mut c = vec![Integer::new(); order + 1];
    lattice(order, 0, |e, _| c[e] += 1);
    IntegerSeries::new(c)
}

/// `b(q) = sum_{m,n} w^{m-n} q^{m^2 + mn + n^2}` with `w = exp(2 pi i / 3)`.
/// The swap `m <-> n` pairs the `w` and `w^2` classes, so each coefficient is
/// `#{m-n = 0} - #{m-n = 1} (mod 3)`.
pub fn cubic_b(order: usize) -> IntegerSeries {
    let mut counts = vec![[0i64; 3]; order + 1];
    lattice(order, 0, |e, cls| counts[e][cls] += 1);
    IntegerSeries::new(
        counts
            .iter()
            .map(|k| {
                assert_eq!(k[1], k[2], "conjugate classes must balance");
                Integer::from(k[0] - k[1])
            })
            .collect(),
    )
}

/// `c(q) / (3 q^{1/3})`. Shifting both lattice variables by 1/3 turns the
/// exponent into `m^2 + mn + n^2 + m + n + 1/3`.
pub fn cubic_c_shifted(order: usize) -> IntegerSeries {
    let mut counts = vec![0i64; order + 1];
    lattice(order, 1, |e, _| counts[e] += 1);
    IntegerSeries::new(
        counts
            .iter()
            .map(|&k| {
                assert_eq!(k % 3, 0, "lattice counts come in orbits of three");
                Integer::from(k / 3)
            })
            .collect(),
    )
}

/// `R(q) = (q, q^4; q^5) / (q^2, q^3; q^5)`.
pub fn rr_quotient_spec() -> SeriesSpec {
    SeriesSpec::new(vec![Factor::new(1, 5, 1), Factor::new(4, 5, 1), Factor::new(2, 5, -1), Factor::new(3, 5, -1)])
}

pub fn rr_quotient(order: usize) -> IntegerSeries {
    rr_quotient_spec().expand(order).expect("constant term 1")
}

/// `Q_{k,i}(1; q) = (q^i, q^{2k+1-i}, q^{2k+1}; q^{2k+1}) / (q; q)`.
pub fn q_kij_spec(k: usize, i: usize) -> SeriesSpec {
    assert!(k >= 1 && (1..=2 * k).contains(&i), "need 1 <= i <= 2k");
    let p = 2 * k + 1;
    SeriesSpec::new(vec![Factor::new(i, p, 1), Factor::new(p - i, p, 1), Factor::eta(p, 1), Factor::eta(1, -1)])
}

pub fn q_kij_series(k: usize, i: usize, order: usize) -> IntegerSeries {
    q_kij_spec(k, i).expand(order).expect("constant term 1")
}
