use serde::Serialize;

use crate::arith::{alpha_sign, Sign};

/// Residues modulo `t` split by the sign of `alpha_t^(m)(r)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pnz {
    #[serde(rename = "P")]
    pub p: Vec<u64>,
    #[serde(rename = "N")]
    pub n: Vec<u64>,
    #[serde(rename = "Z")]
    pub z: Vec<u64>,
}

impl Pnz {
    pub fn sign_of_residue(&self, r: u64) -> Sign {
        if self.p.contains(&r) {
            Sign::Positive
        } else if self.n.contains(&r) {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }
}

pub fn pnz_sets(t: u64, m: u64) -> Pnz {
    assert!(t >= 1, "t must be positive");
    let mut out = Pnz { p: vec![], n: vec![], z: vec![] };
    for r in 0..t {
        match alpha_sign(t, m, r) {
            Sign::Positive => out.p.push(r),
            Sign::Negative => out.n.push(r),
            Sign::Zero => out.z.push(r),
        }
    }
    out
}

fn missed_residues(t: u64, f: impl Fn(u64) -> u64) -> Vec<u64> {
    let mut hit = vec![false; t as usize];
    for j in 0..2 * t {
        hit[(f(j) % t) as usize] = true;
    }
    (0..t).filter(|&r| !hit[r as usize]).collect()
}

/// Residues `r` with `r != j(3j+1)/2 (mod t)` for all `0 <= j < 2t`.
pub fn pentagonal_zero_residues(t: u64) -> Vec<u64> {
    missed_residues(t, |j| j * (3 * j + 1) / 2)
}

/// Residues `s` with `s != j(j+1)/2 (mod t)` for all `0 <= j < 2t`.
pub fn triangular_zero_residues(t: u64) -> Vec<u64> {
    missed_residues(t, |j| j * (j + 1) / 2)
}
