//! Registry of the q-series identities behind the vanishing and sign
//! results, each checked coefficientwise.

use serde::Serialize;

use crate::par::{map_slice, ExecMode};
use crate::qseries::{verify_identity, Atom, Factor, SeriesExpr, SeriesSpec};
use crate::{Error, Result};

/// Default verification order for single-variable identities.
pub const DEFAULT_ORDER: usize = 500;
/// Default order for identities involving the cubic theta double sums.
pub const CUBIC_ORDER: usize = 150;

pub struct IdentityRecord {
    pub id: &'static str,
    /// human-readable statement
    pub statement: &'static str,
    pub lhs: SeriesExpr,
    pub rhs: SeriesExpr,
    pub default_order: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityResult {
    pub id: &'static str,
    pub statement: &'static str,
    pub order: usize,
    pub holds: bool,
    pub first_discrepancy: Option<usize>,
    /// evaluation error, if either side could not be expanded
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RegistryReport {
    pub results: Vec<IdentityResult>,
    pub all_passed: bool,
}

impl RegistryReport {
    /// The first failure as an error.
    pub fn into_result(self) -> Result<RegistryReport> {
        match self.results.iter().find(|r| !r.holds) {
            Some(r) => Err(Error::IdentityFailed { id: r.id.to_string(), index: r.first_discrepancy.unwrap_or(0) }),
            None => Ok(self),
        }
    }
}

fn eta(pairs: &[(usize, i64)]) -> SeriesExpr {
    SeriesExpr::eta(pairs)
}

/// `c q^s`
fn mono(c: i64, s: usize) -> SeriesExpr {
    SeriesExpr::Product(SeriesSpec::new(vec![]).with_coefficient(c).with_shift(s))
}

/// `c q^s prod (q^a; q^b)^e`
fn prod(c: i64, s: usize, factors: &[(usize, usize, i64)]) -> SeriesExpr {
    SeriesExpr::Product(SeriesSpec::new(factors.iter().map(|&(a, b, e)| Factor::new(a, b, e)).collect()).with_coefficient(c).with_shift(s))
}

fn atom(a: Atom) -> SeriesExpr {
    SeriesExpr::atom(a)
}

fn borwein(t: usize, m: usize) -> SeriesExpr {
    atom(Atom::Borwein { t, m })
}

fn sum(terms: Vec<SeriesExpr>) -> SeriesExpr {
    SeriesExpr::Sum(terms)
}

fn mul(terms: Vec<SeriesExpr>) -> SeriesExpr {
    SeriesExpr::Mul(terms)
}

/// `(q;q) / (q^p;q^p)` split by residues of `n mod p` into products
/// `Q_{k,i}(1; q^p)`, `k = (3p-1)/2`.
fn andrews_dissection_rhs(p: usize) -> SeriesExpr {
    let k = (3 * p - 1) / 2;
    let q = |i: usize| atom(Atom::QKi { k, i }).dilate(p);
    let mut terms = vec![q(k)];
    for r in 1..=(p - 1) / 2 {
        let sign = if r % 2 == 0 { 1 } else { -1 };
        let inner = sum(vec![q((3 * p + 1) / 2 - 3 * r), q((3 * p - 1) / 2 - 3 * r).shift(r)]);
        terms.push(inner.shift(r * (3 * r - 1) / 2).scale(sign));
    }
    sum(terms)
}

fn record(id: &'static str, statement: &'static str, lhs: SeriesExpr, rhs: SeriesExpr, default_order: usize) -> IdentityRecord {
    IdentityRecord { id, statement, lhs, rhs, default_order }
}

/// Every registered identity.
pub fn registry() -> Vec<IdentityRecord> {
    let b_eta = || eta(&[(1, 3), (3, -1)]);
    let c_eta = || eta(&[(3, 3), (1, -1)]);
    let nine_over_three = || eta(&[(9, 3), (3, -1)]);
    let a = || atom(Atom::CubicA);
    let rr5 = || atom(Atom::RrQuotient).dilate(5);
    let c2_even = || borwein(2, 1).dissect(2, 0);
    let c2_odd = || borwein(2, 1).dissect(2, 1);
    let phi_over_eta = || mul(vec![atom(Atom::ThetaPhi), eta(&[(1, -1)])]);
    let c44_aux = || eta(&[(4, 2), (1, -1), (2, -1)]);

    vec![
        record("pentagonal-number-theorem", "(q;q) = sum_j (-1)^j q^{j(3j+1)/2}", eta(&[(1, 1)]), atom(Atom::PentagonalSum), 1000),
        record("jacobi-cube", "(q;q)^3 = sum_{j>=0} (-1)^j (2j+1) q^{j(j+1)/2}", eta(&[(1, 3)]), atom(Atom::JacobiSum), DEFAULT_ORDER),
        record("phi-product", "phi(q) = (q^2;q^2)^5 / ((q;q)^2 (q^4;q^4)^2)", atom(Atom::ThetaPhi), eta(&[(2, 5), (1, -2), (4, -2)]), DEFAULT_ORDER),
        record("psi-product", "psi(q) = (q^2;q^2)^2 / (q;q)", atom(Atom::ThetaPsi), eta(&[(2, 2), (1, -1)]), DEFAULT_ORDER),
        record(
            "cubic-a-eta-form",
            "a(q) = (q;q)^3/(q^3;q^3) + 9q (q^9;q^9)^3/(q^3;q^3)",
            a(),
            sum(vec![b_eta(), prod(9, 1, &[(9, 9, 3), (3, 3, -1)])]),
            CUBIC_ORDER,
        ),
        record("cubic-b-eta-form", "b(q) = (q;q)^3 / (q^3;q^3)", atom(Atom::CubicB), b_eta(), CUBIC_ORDER),
        record("cubic-c-eta-form", "c(q) / (3 q^{1/3}) = (q^3;q^3)^3 / (q;q)", atom(Atom::CubicCShifted), c_eta(), CUBIC_ORDER),
        record(
            "cubic-cube-identity",
            "a(q)^3 = b(q)^3 + c(q)^3, with c(q)^3 = 27 q (c(q)/(3q^{1/3}))^3",
            a().pow(3),
            sum(vec![atom(Atom::CubicB).pow(3), atom(Atom::CubicCShifted).pow(3).shift(1).scale(27)]),
            CUBIC_ORDER,
        ),
        record(
            "cubic-a-triplication-difference",
            "a(q) = 3 a(q^3) - 2 (q;q)^3/(q^3;q^3)",
            a(),
            sum(vec![a().dilate(3).scale(3), b_eta().scale(-2)]),
            CUBIC_ORDER,
        ),
        record(
            "cubic-a-triplication-sum",
            "a(q) = a(q^3) + 6q (q^9;q^9)^3/(q^3;q^3)",
            a(),
            sum(vec![a().dilate(3), nine_over_three().shift(1).scale(6)]),
            CUBIC_ORDER,
        ),
        record(
            "cubic-b-3-dissection",
            "(q;q)^3/(q^3;q^3) = a(q^3) - 3q (q^9;q^9)^3/(q^3;q^3)",
            b_eta(),
            sum(vec![a().dilate(3), nine_over_three().shift(1).scale(-3)]),
            CUBIC_ORDER,
        ),
        record(
            "eta4-2-dissection",
            "(q;q)^4 = (q^4;q^4)^10/((q^2;q^2)^2 (q^8;q^8)^4) - 4q (q^2;q^2)^2 (q^8;q^8)^4/(q^4;q^4)^2",
            eta(&[(1, 4)]),
            sum(vec![eta(&[(4, 10), (2, -2), (8, -4)]), prod(-4, 1, &[(2, 2, 2), (8, 8, 4), (4, 4, -2)])]),
            DEFAULT_ORDER,
        ),
        record(
            "eta8-2-dissection",
            "(q;q)^8 = (q^4;q^4)^20/((q^2;q^2)^4 (q^8;q^8)^8) + 16q^2 (q^2;q^2)^4 (q^8;q^8)^8/(q^4;q^4)^4 - 8q (q^4;q^4)^8",
            eta(&[(1, 8)]),
            sum(vec![
                eta(&[(4, 20), (2, -4), (8, -8)]),
                prod(16, 2, &[(2, 2, 4), (8, 8, 8), (4, 4, -4)]),
                prod(-8, 1, &[(4, 4, 8)]),
            ]),
            DEFAULT_ORDER,
        ),
        record(
            "inverse-eta2-2-dissection",
            "1/(q;q)^2 = (q^8;q^8)^5/((q^2;q^2)^5 (q^16;q^16)^2) + 2q (q^4;q^4)^2 (q^16;q^16)^2/((q^2;q^2)^5 (q^8;q^8))",
            eta(&[(1, -2)]),
            sum(vec![eta(&[(8, 5), (2, -5), (16, -2)]), prod(2, 1, &[(4, 4, 2), (16, 16, 2), (2, 2, -5), (8, 8, -1)])]),
            DEFAULT_ORDER,
        ),
        record(
            "rogers-ramanujan-5-dissection",
            "1/R(q^5) - q - q^2 R(q^5) = (q;q)/(q^25;q^25)",
            sum(vec![rr5().inverse(), mono(-1, 1), rr5().shift(2).scale(-1)]),
            eta(&[(1, 1), (25, -1)]),
            DEFAULT_ORDER,
        ),
        record(
            "rogers-ramanujan-fifth-power",
            "1/R(q^5)^5 - 11q^5 - q^10 R(q^5)^5 = (q^5;q^5)^6/(q^25;q^25)^6",
            sum(vec![rr5().pow(5).inverse(), mono(-11, 5), rr5().pow(5).shift(10).scale(-1)]),
            eta(&[(5, 6), (25, -6)]),
            DEFAULT_ORDER,
        ),
        record(
            "eta5-5-dissection",
            "sum_n [q^{5n}](q;q)^5 q^n = (q;q)^6/(q^5;q^5)",
            eta(&[(1, 5)]).dissect(5, 0),
            eta(&[(1, 6), (5, -1)]),
            DEFAULT_ORDER,
        ),
        record("andrews-dissection-p3", "(q;q)/(q^3;q^3) as a sum of Q_{4,i}(1;q^3)", eta(&[(1, 1), (3, -1)]), andrews_dissection_rhs(3), DEFAULT_ORDER),
        record("andrews-dissection-p5", "(q;q)/(q^5;q^5) as a sum of Q_{7,i}(1;q^5)", eta(&[(1, 1), (5, -1)]), andrews_dissection_rhs(5), DEFAULT_ORDER),
        record("andrews-dissection-p7", "(q;q)/(q^7;q^7) as a sum of Q_{10,i}(1;q^7)", eta(&[(1, 1), (7, -1)]), andrews_dissection_rhs(7), DEFAULT_ORDER),
        record("c48-odd-part", "sum_n c_4^(8)(2n+1) q^n = -8", borwein(4, 8).dissect(2, 1), SeriesExpr::Const(-8), DEFAULT_ORDER),
        record(
            "c93-eta-form",
            "(q;q)^3/(q^9;q^9)^3 = -3q + a(q^3) (q^3;q^3)/(q^9;q^9)^3",
            eta(&[(1, 3), (9, -3)]),
            sum(vec![mono(-3, 1), mul(vec![a().dilate(3), eta(&[(3, 1), (9, -3)])])]),
            CUBIC_ORDER,
        ),
        record("c39-trisection", "sum_n c_3^(9)(3n) q^n = (q;q)^3/(q^3;q^3)^3", borwein(3, 9).dissect(3, 0), borwein(3, 3), DEFAULT_ORDER),
        record(
            "c33-trisection-0",
            "sum_n c_3^(3)(3n) q^n = a(q)/(q;q)^2",
            borwein(3, 3).dissect(3, 0),
            mul(vec![a(), eta(&[(1, -2)])]),
            CUBIC_ORDER,
        ),
        record(
            "c33-trisection-1",
            "sum_n c_3^(3)(3n+1) q^n = -3 (q^3;q^3)^3/(q;q)^3 = -3/((q;q^3)^3 (q^2;q^3)^3)",
            borwein(3, 3).dissect(3, 1),
            prod(-3, 0, &[(3, 3, 3), (1, 1, -3)]),
            DEFAULT_ORDER,
        ),
        record(
            "c33-trisection-1-product",
            "(q^3;q^3)^3/(q;q)^3 = 1/((q;q^3)^3 (q^2;q^3)^3)",
            eta(&[(3, 3), (1, -3)]),
            prod(1, 0, &[(1, 3, -3), (2, 3, -3)]),
            DEFAULT_ORDER,
        ),
        record("c33-trisection-2", "c_3^(3)(3n+2) = 0", borwein(3, 3).dissect(3, 2), SeriesExpr::Const(0), DEFAULT_ORDER),
        record(
            "c44-even-part",
            "sum_n c_4^(4)(2n) q^n = (q^2;q^2)^6/((q;q)^2 (q^4;q^4)^4)",
            borwein(4, 4).dissect(2, 0),
            eta(&[(2, 6), (1, -2), (4, -4)]),
            DEFAULT_ORDER,
        ),
        record(
            "c44-4n",
            "sum_n c_4^(4)(4n) q^n = (q;q)(q^4;q^4)^5/((q^2;q^2)^4 (q^8;q^8)^2)",
            borwein(4, 4).dissect(4, 0),
            eta(&[(1, 1), (4, 5), (2, -4), (8, -2)]),
            DEFAULT_ORDER,
        ),
        record(
            "c44-4n-theta-form",
            "(q;q)(q^4;q^4)^5/((q^2;q^2)^4 (q^8;q^8)^2) = (q;q)/(q^2;q^2) * 1/(q^2;q^2) * phi(q^2)",
            eta(&[(1, 1), (4, 5), (2, -4), (8, -2)]),
            mul(vec![eta(&[(1, 1), (2, -2)]), atom(Atom::ThetaPhi).dilate(2)]),
            DEFAULT_ORDER,
        ),
        record(
            "c44-4n+2",
            "sum_n c_4^(4)(4n+2) q^n = 2 (q;q)(q^8;q^8)^2/((q^2;q^2)^2 (q^4;q^4))",
            borwein(4, 4).dissect(4, 2),
            prod(2, 0, &[(1, 1, 1), (8, 8, 2), (2, 2, -2), (4, 4, -1)]),
            DEFAULT_ORDER,
        ),
        record("c44-8n", "sum_n c_4^(4)(8n) q^n = phi(q)/(q;q) * sum_n c_2^(1)(2n) q^n", borwein(4, 4).dissect(8, 0), mul(vec![phi_over_eta(), c2_even()]), DEFAULT_ORDER),
        record("c44-8n+4", "sum_n c_4^(4)(8n+4) q^n = phi(q)/(q;q) * sum_n c_2^(1)(2n+1) q^n", borwein(4, 4).dissect(8, 4), mul(vec![phi_over_eta(), c2_odd()]), DEFAULT_ORDER),
        record(
            "c44-8n+2",
            "sum_n c_4^(4)(8n+2) q^n = 2 (q^4;q^4)^2/((q;q)(q^2;q^2)) * sum_n c_2^(1)(2n) q^n",
            borwein(4, 4).dissect(8, 2),
            mul(vec![c44_aux(), c2_even()]).scale(2),
            DEFAULT_ORDER,
        ),
        record(
            "c44-8n+6",
            "sum_n c_4^(4)(8n+6) q^n = 2 (q^4;q^4)^2/((q;q)(q^2;q^2)) * sum_n c_2^(1)(2n+1) q^n",
            borwein(4, 4).dissect(8, 6),
            mul(vec![c44_aux(), c2_odd()]).scale(2),
            DEFAULT_ORDER,
        ),
        record("c55-quintisection", "sum_n c_5^(5)(5n) q^n = (q;q)/(q^5;q^5)", borwein(5, 5).dissect(5, 0), borwein(5, 1), DEFAULT_ORDER),
        record(
            "c51-5-dissection",
            "(q;q)/(q^5;q^5) = (q^25;q^25)/(q^5;q^5) * (1/R(q^5) - q - q^2 R(q^5))",
            borwein(5, 1),
            mul(vec![eta(&[(25, 1), (5, -1)]), sum(vec![rr5().inverse(), mono(-1, 1), rr5().shift(2).scale(-1)])]),
            DEFAULT_ORDER,
        ),
        record(
            "c51-5n",
            "sum_n c_5^(1)(5n) q^n = (q^5;q^5)/((q;q) R(q)) = 1/((q;q^5)^2 (q^4;q^5)^2)",
            borwein(5, 1).dissect(5, 0),
            prod(1, 0, &[(1, 5, -2), (4, 5, -2)]),
            DEFAULT_ORDER,
        ),
        record(
            "c51-5n-rr-form",
            "(q^5;q^5)/((q;q) R(q)) = 1/((q;q^5)^2 (q^4;q^5)^2)",
            mul(vec![eta(&[(5, 1), (1, -1)]), atom(Atom::RrQuotient).inverse()]),
            prod(1, 0, &[(1, 5, -2), (4, 5, -2)]),
            DEFAULT_ORDER,
        ),
        record(
            "c51-5n+1",
            "sum_n c_5^(1)(5n+1) q^n = -(q^5;q^5)/(q;q) = -1/(q,q^2,q^3,q^4;q^5)",
            borwein(5, 1).dissect(5, 1),
            prod(-1, 0, &[(1, 5, -1), (2, 5, -1), (3, 5, -1), (4, 5, -1)]),
            DEFAULT_ORDER,
        ),
        record(
            "c51-5n+2",
            "sum_n c_5^(1)(5n+2) q^n = -R(q)(q^5;q^5)/(q;q) = -1/((q^2;q^5)^2 (q^3;q^5)^2)",
            borwein(5, 1).dissect(5, 2),
            prod(-1, 0, &[(2, 5, -2), (3, 5, -2)]),
            DEFAULT_ORDER,
        ),
        record("c51-5n+3", "c_5^(1)(5n+3) = 0", borwein(5, 1).dissect(5, 3), SeriesExpr::Const(0), DEFAULT_ORDER),
        record("c51-5n+4", "c_5^(1)(5n+4) = 0", borwein(5, 1).dissect(5, 4), SeriesExpr::Const(0), DEFAULT_ORDER),
    ]
}

/// Verify every identity to `max(default_order, min_order)`, in parallel.
pub fn run_registry(min_order: usize, mode: ExecMode) -> RegistryReport {
    run_with(mode, |r| r.default_order.max(min_order))
}

/// Verify every identity at `order`, except the cubic double-sum identities,
/// which run at the proportionally scaled `order * CUBIC_ORDER / DEFAULT_ORDER`.
pub fn run_registry_at(order: usize, mode: ExecMode) -> RegistryReport {
    run_with(mode, |r| if r.default_order == CUBIC_ORDER { (order * CUBIC_ORDER / DEFAULT_ORDER).max(1) } else { order })
}

fn run_with(mode: ExecMode, order_of: impl Fn(&IdentityRecord) -> usize + Sync + Send) -> RegistryReport {
    let records = registry();
    let results = map_slice(mode, &records, |r| {
        let order = order_of(r);
        match verify_identity(&r.lhs, &r.rhs, order) {
            Ok(c) => IdentityResult { id: r.id, statement: r.statement, order, holds: c.holds, first_discrepancy: c.first_discrepancy, error: None },
            Err(e) => IdentityResult { id: r.id, statement: r.statement, order, holds: false, first_discrepancy: None, error: Some(e.to_string()) },
        }
    });
    let all_passed = results.iter().all(|r| r.holds);
    RegistryReport { results, all_passed }
}

/// Every product spec the registry expands, paired with its expansion order
/// when the registry runs at default orders.
pub fn registry_specs() -> Vec<(&'static str, SeriesSpec, usize)> {
    let mut out = Vec::new();
    for r in registry() {
        let mut specs = Vec::new();
        r.lhs.product_specs(r.default_order, &mut specs);
        r.rhs.product_specs(r.default_order, &mut specs);
        out.extend(specs.into_iter().map(|(s, n)| (r.id, s, n)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = registry().iter().map(|r| r.id).collect();
        let n = ids.len();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn registry_passes_at_small_order() {
        for r in registry() {
            let c = verify_identity(&r.lhs, &r.rhs, 60).unwrap();
            assert!(c.holds, "{} fails at {:?}", r.id, c.first_discrepancy);
        }
    }

    #[test]
    fn broken_identity_is_reported() {
        let report = RegistryReport {
            results: vec![IdentityResult { id: "x", statement: "", order: 10, holds: false, first_discrepancy: Some(3), error: None }],
            all_passed: false,
        };
        assert_eq!(report.into_result().unwrap_err(), Error::IdentityFailed { id: "x".into(), index: 3 });
    }
}
