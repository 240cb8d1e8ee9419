//! Rigorous sign classification of `c_t^(m)(n)` by residue class.

mod closed_form;
mod sets;
mod special;
mod table;

#[cfg(test)]
mod errata;

pub use closed_form::{predict_sign_closed_form, ClosedForm};
pub use sets::{pentagonal_zero_residues, pnz_sets, triangular_zero_residues, Pnz};
pub use special::{SpecialCase, ZERO_RESIDUE_EXCEPTIONS};
pub use table::{
    classify, cutoff, cutoff_all_m, exceptional_set, exceptions_up_to, format_set, is_prime, render_markdown, ups_verdict, zero_residue_check,
    SignTable, UpsVerdict, ZeroCheckReport, ZeroViolation, CUTOFF_WINDOW,
};
