use serde::Serialize;

use crate::arith::Sign;

/// The three `(t, m)` whose zero residues carry a finer sign pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SpecialCase {
    /// `(3, 9)`: period 9
    SC1,
    /// `(4, 4)`: period 8
    SC2,
    /// `(5, 5)`: period 25
    SC3,
}

impl SpecialCase {
    pub fn of(t: u64, m: u64) -> Option<SpecialCase> {
        match (t, m) {
            (3, 9) => Some(SpecialCase::SC1),
            (4, 4) => Some(SpecialCase::SC2),
            (5, 5) => Some(SpecialCase::SC3),
            _ => None,
        }
    }

    pub fn period(self) -> u64 {
        match self {
            SpecialCase::SC1 => 9,
            SpecialCase::SC2 => 8,
            SpecialCase::SC3 => 25,
        }
    }

    /// Sign of `c(n)` on the zero residues of `alpha`, by `n mod period`.
    pub fn refined_sign(self, n: u64) -> Option<Sign> {
        use Sign::*;
        let r = n % self.period();
        match (self, r) {
            (SpecialCase::SC1, 0) => Some(Positive),
            (SpecialCase::SC1, 3) => Some(Negative),
            (SpecialCase::SC1, 6) => Some(Zero),
            (SpecialCase::SC2, 0 | 2) => Some(Positive),
            (SpecialCase::SC2, 4 | 6) => Some(Negative),
            (SpecialCase::SC3, 0) => Some(Positive),
            (SpecialCase::SC3, 5 | 10) => Some(Negative),
            (SpecialCase::SC3, 15 | 20) => Some(Zero),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SpecialCase::SC1 => "SC1",
            SpecialCase::SC2 => "SC2",
            SpecialCase::SC3 => "SC3",
        }
    }

    /// One-line statement of the refined pattern.
    pub fn footnote(self) -> &'static str {
        match self {
            SpecialCase::SC1 => "SC1: c_3^(9)(9n) > 0, c_3^(9)(9n+3) < 0 and c_3^(9)(9n+6) = 0.",
            SpecialCase::SC2 => "SC2: c_4^(4)(8n+r) > 0 (r ∈ {0,2}) and c_4^(4)(8n+r) < 0 (r ∈ {4,6}).",
            SpecialCase::SC3 => "SC3: c_5^(5)(25n) > 0, c_5^(5)(25n+r) < 0 (r ∈ {5,10}) and c_5^(5)(25n+r) = 0 (r ∈ {15,20}).",
        }
    }
}

/// Known nonzero coefficients on zero residues: `(t, m, n, value)`.
pub const ZERO_RESIDUE_EXCEPTIONS: [(u64, u64, u64, i64); 2] = [(4, 8, 1, -8), (9, 3, 1, -3)];
