use rug::Integer;
use serde::Serialize;

use super::product::{borwein_coeffs, jacobi_terms, pentagonal_terms, SeriesSpec};
use super::series::IntegerSeries;
use super::theta::{cubic_a, cubic_b, cubic_c_shifted, q_kij_series, rr_quotient, theta_phi, theta_psi};
use crate::Result;

/// Series that are defined by a sum rather than a product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Atom {
    /// `sum_j (-1)^j q^{j(3j+1)/2}`
    PentagonalSum,
    /// `sum_{j>=0} (-1)^j (2j+1) q^{j(j+1)/2}`
    JacobiSum,
    ThetaPhi,
    ThetaPsi,
    CubicA,
    CubicB,
    CubicCShifted,
    RrQuotient,
    /// `(q;q)^m / (q^t;q^t)^m`
    Borwein { t: usize, m: usize },
    QKi { k: usize, i: usize },
}

/// Expression tree over integer power series. Evaluation at order `N`
/// requests from each child exactly the order it needs so that the result is
/// exact through `q^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesExpr {
    Atom(Atom),
    Product(SeriesSpec),
    Const(i64),
    Sum(Vec<SeriesExpr>),
    Mul(Vec<SeriesExpr>),
    Neg(Box<SeriesExpr>),
    Scale(i64, Box<SeriesExpr>),
    Pow(Box<SeriesExpr>, u32),
    Inverse(Box<SeriesExpr>),
    /// `f(q^k)`
    Dilate(Box<SeriesExpr>, usize),
    /// `q^s f(q)`
    Shift(Box<SeriesExpr>, usize),
    /// `sum_n a(tn + r) q^n`
    Dissect(Box<SeriesExpr>, usize, usize),
}

impl SeriesExpr {
    pub fn atom(a: Atom) -> Self {
        SeriesExpr::Atom(a)
    }

    pub fn eta(pairs: &[(usize, i64)]) -> Self {
        SeriesExpr::Product(SeriesSpec::eta_quotient(pairs))
    }

    pub fn sub(self, other: SeriesExpr) -> Self {
        SeriesExpr::Sum(vec![self, SeriesExpr::Neg(Box::new(other))])
    }

    pub fn add(self, other: SeriesExpr) -> Self {
        SeriesExpr::Sum(vec![self, other])
    }

    pub fn mul(self, other: SeriesExpr) -> Self {
        SeriesExpr::Mul(vec![self, other])
    }

    pub fn scale(self, c: i64) -> Self {
        SeriesExpr::Scale(c, Box::new(self))
    }

    pub fn pow(self, k: u32) -> Self {
        SeriesExpr::Pow(Box::new(self), k)
    }

    pub fn inverse(self) -> Self {
        SeriesExpr::Inverse(Box::new(self))
    }

    pub fn dilate(self, k: usize) -> Self {
        SeriesExpr::Dilate(Box::new(self), k)
    }

    pub fn shift(self, s: usize) -> Self {
        SeriesExpr::Shift(Box::new(self), s)
    }

    pub fn dissect(self, t: usize, r: usize) -> Self {
        SeriesExpr::Dissect(Box::new(self), t, r)
    }

    /// Expansion exact through `q^order`.
    pub fn eval(&self, order: usize) -> Result<IntegerSeries> {
        Ok(match self {
            SeriesExpr::Atom(a) => eval_atom(*a, order),
            SeriesExpr::Product(spec) => spec.expand(order)?,
            SeriesExpr::Const(c) => IntegerSeries::monomial(Integer::from(*c), 0, order),
            SeriesExpr::Sum(terms) => {
                let mut acc = IntegerSeries::zero(order);
                for t in terms {
                    acc = acc.add(&t.eval(order)?);
                }
                acc
            }
            SeriesExpr::Mul(terms) => {
                let mut acc = IntegerSeries::one(order);
                for t in terms {
                    acc = acc.mul(&t.eval(order)?);
                }
                acc
            }
            SeriesExpr::Neg(e) => e.eval(order)?.neg(),
            SeriesExpr::Scale(c, e) => e.eval(order)?.scale(&Integer::from(*c)),
            SeriesExpr::Pow(e, k) => e.eval(order)?.pow(*k),
            SeriesExpr::Inverse(e) => e.eval(order)?.inverse()?,
            SeriesExpr::Dilate(e, k) => e.eval(order / k)?.dilate(*k).truncate(order),
            SeriesExpr::Shift(e, s) => {
                if *s > order {
                    IntegerSeries::zero(order)
                } else {
                    e.eval(order - s)?.shift(*s)
                }
            }
            SeriesExpr::Dissect(e, t, r) => e.eval(t * order + r)?.dissect(*t, *r),
        })
    }

    /// Every product spec appearing in the tree, each with the order at which
    /// it is expanded when the whole expression is evaluated at `order`.
    pub fn product_specs(&self, order: usize, out: &mut Vec<(SeriesSpec, usize)>) {
        match self {
            SeriesExpr::Product(spec) => out.push((spec.clone(), order)),
            SeriesExpr::Atom(_) | SeriesExpr::Const(_) => {}
            SeriesExpr::Sum(v) | SeriesExpr::Mul(v) => v.iter().for_each(|e| e.product_specs(order, out)),
            SeriesExpr::Neg(e) | SeriesExpr::Scale(_, e) | SeriesExpr::Pow(e, _) | SeriesExpr::Inverse(e) => e.product_specs(order, out),
            SeriesExpr::Dilate(e, k) => e.product_specs(order / k, out),
            SeriesExpr::Shift(e, s) => e.product_specs(order.saturating_sub(*s), out),
            SeriesExpr::Dissect(e, t, r) => e.product_specs(t * order + r, out),
        }
    }
}

fn eval_atom(a: Atom, order: usize) -> IntegerSeries {
    match a {
        Atom::PentagonalSum => IntegerSeries::from_sparse(&pentagonal_terms(order), order),
        Atom::JacobiSum => IntegerSeries::from_sparse(&jacobi_terms(order), order),
        Atom::ThetaPhi => theta_phi(order),
        Atom::ThetaPsi => theta_psi(order),
        Atom::CubicA => cubic_a(order),
        Atom::CubicB => cubic_b(order),
        Atom::CubicCShifted => cubic_c_shifted(order),
        Atom::RrQuotient => rr_quotient(order),
        Atom::Borwein { t, m } => borwein_coeffs(t, m, order),
        Atom::QKi { k, i } => q_kij_series(k, i, order),
    }
}

/// Outcome of a coefficientwise comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub holds: bool,
    pub order: usize,
    pub first_discrepancy: Option<usize>,
}

/// Compare both sides coefficientwise through `q^order`.
pub fn verify_identity(lhs: &SeriesExpr, rhs: &SeriesExpr, order: usize) -> Result<IdentityCheck> {
    let (l, r) = (lhs.eval(order)?, rhs.eval(order)?);
    debug_assert!(l.order() >= order && r.order() >= order);
    let first = l.first_difference(&r);
    Ok(IdentityCheck { holds: first.is_none(), order, first_discrepancy: first })
}
