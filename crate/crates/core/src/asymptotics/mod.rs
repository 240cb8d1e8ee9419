//! Certified evaluation of the asymptotic main term, its explicit error
//! bound, the dominance threshold and the cutoff beyond which signs of
//! coefficients follow the signs of alpha.

mod bessel;
mod constants;
mod estimate;

pub use bessel::bessel_i;
pub use constants::{check_admissible, constants, mu, AsymptoticConstants, DEFAULT_PREC, MAX_PREC};
pub use estimate::{
    delta_min_index, delta_threshold, error_bound, estimate, find_b, main_term, AsymptoticEstimate, Cutoff, CutoffDetail, DeltaEvaluator,
};
