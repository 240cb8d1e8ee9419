use serde::Serialize;

use super::sets::{pnz_sets, Pnz};
use super::special::{SpecialCase, ZERO_RESIDUE_EXCEPTIONS};
use crate::arith::{alpha_abs_lower_bound, Sign};
use crate::asymptotics::{check_admissible, find_b, Cutoff};
use crate::qseries::{borwein_coeffs, IntegerSeries};
use crate::{Error, Result};

/// Width of the window past `B` re-checked by [`find_b`] inside the
/// classification pipeline.
pub const CUTOFF_WINDOW: u64 = 500;

/// Complete sign classification of `c_t^(m)(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignTable {
    pub t: u64,
    pub m: u64,
    #[serde(flatten)]
    pub sets: Pnz,
    /// exceptional indices; `None` when not computed
    #[serde(rename = "E")]
    pub e: Option<Vec<u64>>,
    /// true for composite `t`, where no published list exists to compare against
    pub e_derived: bool,
    #[serde(rename = "B")]
    pub b: Option<u64>,
    pub ups_period: Option<u64>,
    pub special_case: Option<SpecialCase>,
}

impl SignTable {
    /// Residue sets only.
    pub fn basic(t: u64, m: u64) -> Self {
        SignTable {
            t,
            m,
            sets: pnz_sets(t, m),
            e: None,
            e_derived: !is_prime(t),
            b: None,
            ups_period: None,
            special_case: SpecialCase::of(t, m),
        }
    }

    /// The partition invariant: P, N, Z are disjoint and cover `0..t`.
    pub fn is_partition(&self) -> bool {
        let mut all: Vec<u64> = self.sets.p.iter().chain(&self.sets.n).chain(&self.sets.z).copied().collect();
        all.sort();
        all == (0..self.t).collect::<Vec<_>>()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }
}

pub fn is_prime(t: u64) -> bool {
    t >= 2 && (2..).take_while(|d| d * d <= t).all(|d| t % d != 0)
}

/// `{a,b,c}` or `∅`.
pub fn format_set(s: &[u64]) -> String {
    if s.is_empty() {
        "∅".to_string()
    } else {
        format!("{{{}}}", s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// Markdown table for one `t` in the appendix layout: one row per `m`, an E
/// column when `with_e`, SC annotations on Z and the pattern footnotes.
pub fn render_markdown(t: u64, rows: &[SignTable], with_e: bool) -> String {
    let mut out = format!("## Data for c_{t}^(m)(n)\n\n");
    out.push_str(if with_e { "| m | P | N | Z | E |\n|---|---|---|---|---|\n" } else { "| m | P | N | Z |\n|---|---|---|---|\n" });
    let mut feet = Vec::new();
    for row in rows {
        let mut z = format_set(&row.sets.z);
        if let Some(sc) = row.special_case {
            z.push_str(&format!(" ({})", sc.label()));
            feet.push(sc.footnote());
        }
        out.push_str(&format!("| {} | {} | {} | {} |", row.m, format_set(&row.sets.p), format_set(&row.sets.n), z));
        if with_e {
            let e = row.e.as_deref().map(format_set).unwrap_or_else(|| "?".into());
            out.push_str(&format!(" {e} |"));
        }
        out.push('\n');
    }
    if !feet.is_empty() {
        out.push('\n');
        for f in feet {
            out.push_str(f);
            out.push('\n');
        }
    }
    out
}

/// Certified cutoff for a single `(t, m)`, using the exact minimum of `|alpha|`.
pub fn cutoff(t: u64, m: u64) -> Result<Cutoff> {
    check_admissible(t, m)?;
    let c = alpha_abs_lower_bound(t, m)?;
    find_b(t, &[(m, c)], CUTOFF_WINDOW)
}

/// Certified cutoff `B(t)` valid for every admissible `m` at once.
pub fn cutoff_all_m(t: u64) -> Result<Cutoff> {
    check_admissible(t, 1)?;
    let mut per_m = Vec::new();
    for m in 1..=24 / (t - 1) {
        match alpha_abs_lower_bound(t, m) {
            Ok(c) => per_m.push((m, c)),
            Err(Error::NoNonzeroResidues { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    find_b(t, &per_m, CUTOFF_WINDOW)
}

/// Indices `n <= b` on nonzero residues where `sgn c(n) != sgn alpha(n)`.
pub fn exceptions_up_to(sets: &Pnz, t: u64, coeffs: &IntegerSeries, b: u64) -> Vec<u64> {
    (0..=b)
        .filter(|&n| {
            let s = sets.sign_of_residue(n % t);
            s != Sign::Zero && Sign::of_integer(coeffs.coeff(n as usize)) != s
        })
        .collect()
}

/// Sign table including the exceptional set, which is complete: beyond the
/// certified cutoff every sign agrees with alpha.
pub fn exceptional_set(t: u64, m: u64) -> Result<SignTable> {
    let mut table = SignTable::basic(t, m);
    let cut = cutoff(t, m)?;
    let coeffs = borwein_coeffs(t as usize, m as usize, cut.b as usize);
    table.e = Some(exceptions_up_to(&table.sets, t, &coeffs, cut.b));
    table.b = Some(cut.b);
    Ok(table)
}

/// Full classification: residue sets, exceptional set, cutoff, sign period.
pub fn classify(t: u64, m: u64) -> Result<SignTable> {
    let mut table = SignTable::basic(t, m);
    let cut = cutoff(t, m)?;
    let period = table.special_case.map_or(t, |s| s.period());
    let top = cut.b + 10 * t + period;
    let coeffs = borwein_coeffs(t as usize, m as usize, top as usize);
    table.e = Some(exceptions_up_to(&table.sets, t, &coeffs, cut.b));
    table.b = Some(cut.b);
    let ups = ups_from_coeffs(t, m, &coeffs, cut.b);
    table.ups_period = ups.minimal.then_some(ups.period);
    Ok(table)
}

/// A violated expectation in [`zero_residue_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroViolation {
    pub n: u64,
    pub value: String,
    pub expected: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroCheckReport {
    pub t: u64,
    pub m: u64,
    pub n_check: u64,
    pub special_case: Option<SpecialCase>,
    #[serde(rename = "Z")]
    pub z: Vec<u64>,
    /// number of coefficients examined
    pub checked: u64,
    /// documented exceptions that were found, as `(n, value)`
    pub flagged: Vec<(u64, String)>,
    pub violations: Vec<ZeroViolation>,
    pub passed: bool,
}

/// Checks that `c(n) = 0` on every zero residue of alpha up to `n_check`,
/// apart from the documented exceptions; for the special cases, checks the
/// refined sign pattern instead.
pub fn zero_residue_check(t: u64, m: u64, n_check: u64) -> Result<ZeroCheckReport> {
    check_admissible(t, m)?;
    let sets = pnz_sets(t, m);
    let special = SpecialCase::of(t, m);
    let coeffs = borwein_coeffs(t as usize, m as usize, n_check as usize);
    let mut report =
        ZeroCheckReport { t, m, n_check, special_case: special, z: sets.z.clone(), checked: 0, flagged: vec![], violations: vec![], passed: false };
    let known: Vec<_> = ZERO_RESIDUE_EXCEPTIONS.iter().filter(|e| e.0 == t && e.1 == m).collect();
    for n in (0..=n_check).filter(|n| sets.z.contains(&(n % t))) {
        report.checked += 1;
        let c = coeffs.coeff(n as usize);
        let actual = Sign::of_integer(c);
        if let Some(sc) = special {
            let want = sc.refined_sign(n).expect("pattern covers every zero residue");
            if actual != want {
                report.violations.push(ZeroViolation { n, value: c.to_string(), expected: format!("sign {want}") });
            }
            continue;
        }
        if let Some(&&(_, _, _, v)) = known.iter().find(|e| e.2 == n) {
            if *c == v {
                report.flagged.push((n, c.to_string()));
            } else {
                report.violations.push(ZeroViolation { n, value: c.to_string(), expected: v.to_string() });
            }
        } else if actual != Sign::Zero {
            report.violations.push(ZeroViolation { n, value: c.to_string(), expected: "0".into() });
        }
    }
    let all_flagged = known.iter().filter(|e| e.2 <= n_check).count() == report.flagged.len();
    report.passed = report.violations.is_empty() && all_flagged;
    Ok(report)
}

/// Least period of sign, with the empirical minimality check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UpsVerdict {
    pub t: u64,
    pub m: u64,
    pub period: u64,
    #[serde(rename = "B")]
    pub b: u64,
    /// `sgn c(n) = sgn c(n + period)` throughout the window
    pub periodic: bool,
    /// every proper divisor of the period fails somewhere in the window
    pub minimal: bool,
    /// the window `(B, B + 10t]`
    pub window: (u64, u64),
}

pub fn ups_verdict(t: u64, m: u64) -> Result<UpsVerdict> {
    let cut = cutoff(t, m)?;
    let period = SpecialCase::of(t, m).map_or(t, |s| s.period());
    let coeffs = borwein_coeffs(t as usize, m as usize, (cut.b + 10 * t + period) as usize);
    Ok(ups_from_coeffs(t, m, &coeffs, cut.b))
}

fn ups_from_coeffs(t: u64, m: u64, coeffs: &IntegerSeries, b: u64) -> UpsVerdict {
    let period = SpecialCase::of(t, m).map_or(t, |s| s.period());
    let window = (b + 1, b + 10 * t);
    let sign = |n: u64| Sign::of_integer(coeffs.coeff(n as usize));
    let holds = |d: u64| (window.0..=window.1).all(|n| sign(n) == sign(n + d));
    let periodic = holds(period);
    let minimal = (1..period).filter(|d| period % d == 0).all(|d| !holds(d));
    UpsVerdict { t, m, period, b, periodic, minimal, window }
}
