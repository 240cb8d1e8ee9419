//! Exact truncated power series over the integers: eta-type products, powers
//! of the Borwein product, theta functions and identity checking.

mod expr;
mod product;
mod series;
mod theta;

#[cfg(test)]
mod props;

pub use expr::{verify_identity, Atom, IdentityCheck, SeriesExpr};
pub use product::{
    apply_euler_factor, borwein_coeffs, borwein_coeffs_with, euler_factor, jacobi_terms, pentagonal_terms, Factor, SeriesSpec,
};
pub use series::{IntegerSeries, SparseTerms};
pub use theta::{cubic_a, cubic_b, cubic_c_shifted, q_kij_series, q_kij_spec, rr_quotient, rr_quotient_spec, theta_phi, theta_psi};
