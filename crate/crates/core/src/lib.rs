//! Exact coefficients of powers of the infinite Borwein product
//! `G_t(q)^m = (q;q)_inf^m / (q^t;q^t)_inf^m` and rigorous classification of
//! their signs.
//!
//! The crate is split into five layers:
//!
//! - [`arith`]: reduced rationals, Dedekind sums, an exact cyclotomic ring and
//!   directed-rounding interval arithmetic.
//! - [`qseries`]: truncated power series over big integers, eta-type products,
//!   theta functions, dissections and identity checking.
//! - [`asymptotics`]: certified Bessel enclosures, the main term, the explicit
//!   error majorant and the dominance cutoff.
//! - [`classify`]: P/N/Z residue sets, exceptional sets, vanishing checks,
//!   sign periods and the closed-form sign predictions.
//! - [`identities`]: the registry of q-series identities, verified as a batch.

pub mod arith;
pub mod asymptotics;
pub mod classify;
mod error;
pub mod identities;
pub mod par;
pub mod qseries;

pub use error::{Error, Result};
