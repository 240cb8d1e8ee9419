//! End-to-end acceptance run. Each criterion prints one PASS/FAIL line on
//! stdout followed by indented detail; the process exits non-zero if any
//! criterion fails.
//!
//! Run with `cargo test -p borwein-core --test acceptance`.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use borwein_core::arith::{alpha_abs_lower_bound, alpha_enclosure, Interval, Sign};
use borwein_core::asymptotics::{bessel_i, estimate, mu, DeltaEvaluator, DEFAULT_PREC};
use borwein_core::classify::{
    cutoff_all_m, exceptional_set, predict_sign_closed_form, render_markdown, zero_residue_check, ClosedForm, SignTable,
    CUTOFF_WINDOW, ZERO_RESIDUE_EXCEPTIONS,
};
use borwein_core::identities::{registry_specs, run_registry, CUBIC_ORDER, DEFAULT_ORDER};
use borwein_core::par::{map_slice, ExecMode};
use borwein_core::qseries::borwein_coeffs;

/// Runtime budget for regenerating every residue table.
const TABLES_BUDGET: Duration = Duration::from_secs(60);
/// Index range for the error-bound soundness sweep.
const SOUNDNESS_RANGE: (u64, u64) = (3, 400);
/// Published cutoffs for the nine primes.
const PUBLISHED_B: [(u64, u64); 9] =
    [(2, 250), (3, 300), (5, 460), (7, 540), (11, 1910), (13, 3430), (17, 7000), (19, 10450), (23, 21650)];
const ZERO_CHECK_N: u64 = 2000;
const CLOSED_FORM_T2: (u64, u64) = (30, 2000);
const CLOSED_FORM_PRIME: (u64, u64) = (31, 3000);
const BESSEL_GRID: usize = 1000;
const BESSEL_SAMPLES: usize = 20;
/// Relative agreement required between series and quadrature (10 significant digits).
const BESSEL_REL_TOL: f64 = 5e-11;
const CONVERGENCE_N: u64 = 2000;
/// Indices below this are ignored when sizing the residual: the
/// expansion only makes sense once `n - mu` is of moderate size.
const CONVERGENCE_START: u64 = 10;
const CLASS_LIMIT_REL_TOL: f64 = 0.02;
const ORACLE_ORDER: usize = 200;

struct Outcome {
    pass: bool,
    summary: String,
    detail: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, summary: impl Into<String>, detail: Vec<String>) -> Self {
        Outcome { pass, summary: summary.into(), detail }
    }
}

fn admissible() -> Vec<(u64, u64)> {
    (2..=24u64).flat_map(|t| (1..=24 / (t - 1)).map(move |m| (t, m))).collect()
}

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn parse_set(s: &str) -> Vec<u64> {
    s.split(',').filter(|x| !x.is_empty()).map(|x| x.parse().expect("fixture index")).collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut detail = Vec::new();
    for t in 2..=24u64 {
        let rows: Vec<SignTable> = (1..=24 / (t - 1)).map(|m| SignTable::basic(t, m)).collect();
        let got = render_markdown(t, &rows, false);
        let path = fixtures().join(format!("tables/t{t:02}.md"));
        let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        if got != want {
            for (g, w) in got.lines().zip(want.lines()).filter(|(g, w)| g != w) {
                detail.push(format!("t={t}: fixture `{w}`, computed `{g}`"));
            }
            if got.lines().count() != want.lines().count() {
                detail.push(format!("t={t}: line counts differ"));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = detail.is_empty() && elapsed < TABLES_BUDGET;
    if elapsed >= TABLES_BUDGET {
        detail.push(format!("took {elapsed:?}"));
    }
    Outcome::new(pass, format!("residue tables for 2 <= t <= 24 against fixtures ({elapsed:.2?})"), detail)
}

fn criterion_2() -> Outcome {
    let text = std::fs::read_to_string(fixtures().join("exceptional_sets.tsv")).expect("fixture");
    let rows: Vec<(u64, u64, Vec<u64>)> = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            (f[0].parse().unwrap(), f[1].parse().unwrap(), parse_set(f.get(2).copied().unwrap_or("")))
        })
        .collect();
    let results = map_slice(ExecMode::Parallel, &rows, |(t, m, want)| {
        let got = exceptional_set(*t, *m).map(|s| s.e.unwrap_or_default());
        (*t, *m, want.clone(), got)
    });
    let mut detail = Vec::new();
    for (t, m, want, got) in results {
        match got {
            Ok(g) if g == want => {}
            Ok(g) => detail.push(format!("E_{t}^({m}): printed {want:?}, computed {g:?}")),
            Err(e) => detail.push(format!("E_{t}^({m}): {e}")),
        }
    }
    Outcome::new(detail.is_empty(), format!("exceptional sets for the nine primes ({} rows)", rows.len()), detail)
}

fn criterion_3() -> Outcome {
    let pairs = admissible();
    let (lo, hi) = SOUNDNESS_RANGE;
    let per_pair = map_slice(ExecMode::Parallel, &pairs, |&(t, m)| {
        let coeffs = borwein_coeffs(t as usize, m as usize, hi as usize);
        let mut bad = Vec::new();
        for n in lo..=hi {
            let est = match estimate(t, m, n, DEFAULT_PREC) {
                Ok(e) => e,
                Err(e) => {
                    bad.push(format!("({t},{m}) n={n}: {e}"));
                    continue;
                }
            };
            let diff = (&Interval::from_integer(DEFAULT_PREC, coeffs.coeff(n as usize)) - &est.main).abs();
            if diff.hi() > est.error_bound.value() {
                bad.push(format!("({t},{m}) n={n}: |c - main| <= {} > bound {}", diff.hi().to_f64(), est.error_bound));
            }
        }
        bad
    });
    let detail: Vec<String> = per_pair.into_iter().flatten().collect();
    let checks = pairs.len() as u64 * (hi - lo + 1);
    Outcome::new(detail.is_empty(), format!("|c - main| <= error bound, {checks} checks, {} violations", detail.len()), detail)
}

fn criterion_4() -> Outcome {
    let per_t = map_slice(ExecMode::Parallel, &PUBLISHED_B, |&(t, published)| {
        let mut detail = Vec::new();
        let cut = match cutoff_all_m(t) {
            Ok(c) => c,
            Err(e) => return vec![format!("t={t}: {e}")],
        };
        if cut.b > published {
            detail.push(format!("t={t}: B = {} exceeds published {published}", cut.b));
        }
        // independent re-check of the window for every admissible m
        for m in 1..=24 / (t - 1) {
            let c = match alpha_abs_lower_bound(t, m) {
                Ok(c) => c,
                Err(_) => continue,
            };
            let mut ev = DeltaEvaluator::new(t, m, c).expect("admissible");
            let from = (cut.b + 1).max(ev.min_index());
            for n in from..=cut.b + CUTOFF_WINDOW {
                if !ev.is_positive(n).unwrap_or(false) {
                    detail.push(format!("t={t} m={m}: Delta({n}) not certified positive"));
                    break;
                }
            }
        }
        detail.insert(0, format!("t={t}: B = {} (published {published})", cut.b));
        detail
    });
    let detail: Vec<String> = per_t.into_iter().flatten().collect();
    let pass = detail.iter().all(|d| d.contains("(published"));
    Outcome::new(pass, format!("certified cutoffs within published values, window {CUTOFF_WINDOW}"), detail)
}

fn criterion_5() -> Outcome {
    let pairs = admissible();
    let reports = map_slice(ExecMode::Parallel, &pairs, |&(t, m)| zero_residue_check(t, m, ZERO_CHECK_N));
    let mut detail = Vec::new();
    let mut flagged = BTreeSet::new();
    for r in reports {
        let r = match r {
            Ok(r) => r,
            Err(e) => {
                detail.push(e.to_string());
                continue;
            }
        };
        for (n, v) in &r.flagged {
            flagged.insert((r.t, r.m, *n, v.clone()));
        }
        if !r.passed {
            let first: Vec<String> = r.violations.iter().take(3).map(|v| format!("n={} c={} expected {}", v.n, v.value, v.expected)).collect();
            detail.push(format!("({},{}): {} violations, e.g. {}", r.t, r.m, r.violations.len(), first.join("; ")));
        }
    }
    let expected: BTreeSet<_> = ZERO_RESIDUE_EXCEPTIONS.iter().map(|&(t, m, n, v)| (t, m, n, v.to_string())).collect();
    if flagged != expected {
        detail.push(format!("flagged {flagged:?}, expected {expected:?}"));
    }
    for (t, m, n, v) in &flagged {
        detail.push(format!("flagged c_{t}^({m})({n}) = {v}"));
    }
    let pass = detail.iter().all(|d| d.starts_with("flagged c_"));
    Outcome::new(pass, format!("vanishing on zero residues up to n = {ZERO_CHECK_N}, {} pairs", pairs.len()), detail)
}

fn criterion_6() -> Outcome {
    let report = run_registry(0, ExecMode::Parallel);
    let mut detail = Vec::new();
    for r in &report.results {
        if !r.holds {
            detail.push(format!("{} fails at order {}: discrepancy {:?} {:?}", r.id, r.order, r.first_discrepancy, r.error));
        }
        if r.order < DEFAULT_ORDER && r.order < CUBIC_ORDER {
            detail.push(format!("{} checked only to order {}", r.id, r.order));
        }
    }
    Outcome::new(detail.is_empty(), format!("{} registered identities hold coefficientwise", report.results.len()), detail)
}

fn criterion_7() -> Outcome {
    let mut jobs: Vec<(u64, u64, u64)> = (1..=CLOSED_FORM_T2.0).map(|m| (2, m, CLOSED_FORM_T2.1)).collect();
    for p in (3..=CLOSED_FORM_PRIME.0).filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)) {
        jobs.push((p, 1, CLOSED_FORM_PRIME.1));
        jobs.push((p, 3, CLOSED_FORM_PRIME.1));
    }
    let per_job = map_slice(ExecMode::Parallel, &jobs, |&(t, m, top)| {
        let coeffs = borwein_coeffs(t as usize, m as usize, top as usize);
        let mut checked = 0u64;
        let mut bad = Vec::new();
        for n in 0..=top {
            if let ClosedForm::Sign(s) = predict_sign_closed_form(t, m, n) {
                checked += 1;
                let actual = Sign::of_integer(coeffs.coeff(n as usize));
                if actual != s && bad.len() < 3 {
                    bad.push(format!("({t},{m}) n={n}: predicted {s}, actual {actual}"));
                }
            }
        }
        (checked, bad)
    });
    let checked: u64 = per_job.iter().map(|j| j.0).sum();
    let detail: Vec<String> = per_job.into_iter().flat_map(|j| j.1).collect();
    Outcome::new(detail.is_empty(), format!("closed-form sign predictions, {checked} coefficients compared"), detail)
}

/// `(1/pi) int_0^pi e^{x cos th} cos(th) dth` by the trapezoid rule; the
/// integrand is smooth and periodic so the rule converges geometrically.
fn i1_quadrature(x: f64) -> f64 {
    let steps = 6000;
    let h = std::f64::consts::PI / steps as f64;
    let f = |th: f64| (x * th.cos()).exp() * th.cos();
    let mut acc = 0.5 * (f(0.0) + f(std::f64::consts::PI));
    for i in 1..steps {
        acc += f(i as f64 * h);
    }
    acc * h / std::f64::consts::PI
}

fn criterion_8() -> Outcome {
    let prec = DEFAULT_PREC;
    let pi = Interval::pi(prec);
    let scale_upper = (&pi / &Interval::from_i64(prec, 8)).sqrt();
    let mut detail = Vec::new();
    for k in 1..=BESSEL_GRID {
        // upper bound on (0, 100]
        let x = Interval::from_i64(prec, k as i64).div_i64(BESSEL_GRID as i64 / 100);
        let i = bessel_i(-1, &x).expect("x > 0");
        let bound = &(&scale_upper * &x.exp()) / &x.sqrt();
        if i.hi() >= bound.lo() {
            detail.push(format!("upper bound not certified at x = {}", x.mid_f64()));
        }
        // lower bound on [3, 100]
        let x = &Interval::from_i64(prec, 3) + &Interval::from_i64(prec, 97 * (k as i64 - 1)).div_i64(BESSEL_GRID as i64 - 1);
        let i = bessel_i(-1, &x).expect("x > 0");
        let bound = (&x.exp() / &x.sqrt()).div_i64(10);
        if i.lo() <= bound.hi() {
            detail.push(format!("lower bound not certified at x = {}", x.mid_f64()));
        }
    }
    let mut worst = 0f64;
    for k in 1..=BESSEL_SAMPLES {
        let xf = 100.0 * (k as f64 / BESSEL_SAMPLES as f64).powi(2);
        let series = bessel_i(1, &Interval::from_f64(prec, xf)).expect("x > 0").mid_f64();
        let quad = i1_quadrature(xf);
        let rel = ((series - quad) / quad).abs();
        worst = worst.max(rel);
        if rel > BESSEL_REL_TOL {
            detail.push(format!("I_1({xf}): series {series:e}, quadrature {quad:e}"));
        }
    }
    Outcome::new(
        detail.is_empty(),
        format!("Bessel inequalities on {BESSEL_GRID}-point grids; series vs quadrature worst rel. diff {worst:.1e}"),
        detail,
    )
}

/// `c(n) / S(n) - alpha(n)` scaled by `sqrt(n - mu)`, where `S(n)` is the
/// leading-order size `mu^{1/4} / sqrt(2t) e^{4 pi sqrt(mu (n - mu)) / t} / (n - mu)^{3/4}`.
fn scaled_residuals(t: u64, m: u64, top: u64) -> Vec<(u64, f64)> {
    let prec = DEFAULT_PREC;
    let coeffs = borwein_coeffs(t as usize, m as usize, top as usize);
    let mu = Interval::from_rational(prec, &mu(t, m));
    let pre = &mu.pow_ratio(1, 4) / &Interval::from_i64(prec, 2 * t as i64).sqrt();
    let four_pi_over_t = Interval::pi(prec).mul_i64(4).div_i64(t as i64);
    (CONVERGENCE_START..=top)
        .map(|n| {
            let d = &Interval::from_i64(prec, n as i64) - &mu;
            let size = &(&pre * &(&four_pi_over_t * &(&mu * &d).sqrt()).exp()) / &d.pow_ratio(3, 4);
            let ratio = &Interval::from_integer(prec, coeffs.coeff(n as usize)) / &size;
            let r = &(&ratio - &alpha_enclosure(t, m, n, prec)) * &d.sqrt();
            (n, r.mid_f64())
        })
        .collect()
}

fn criterion_9() -> Outcome {
    let mut detail = Vec::new();
    let mut pass = true;
    let half = CONVERGENCE_N / 2;
    for (t, m) in [(2u64, 24u64), (3, 12), (5, 6)] {
        let res = scaled_residuals(t, m, CONVERGENCE_N);
        let sup = |keep: &dyn Fn(u64) -> bool| res.iter().filter(|(n, _)| keep(*n)).map(|(_, r)| r.abs()).fold(0f64, f64::max);
        let early = sup(&|n| n <= half);
        let late = sup(&|n| n > half);
        let ok = late.is_finite() && late <= early;
        pass &= ok;
        detail.push(format!("({t},{m}): sup |R| on [{CONVERGENCE_START},{half}] = {early:.4}, on ({half},{CONVERGENCE_N}] = {late:.4}"));
    }
    // class-wise limits for (5,6): c(n+1) sqrt(10) n^{3/4} e^{-4 pi sqrt(n) / 5}
    let s5 = 5f64.sqrt();
    let limits = [-1.0, (3.0 + s5) / 2.0, -1.0 + s5, -1.0 - s5, (3.0 - s5) / 2.0];
    let prec = DEFAULT_PREC;
    let coeffs = borwein_coeffs(5, 6, CONVERGENCE_N as usize + 1);
    for n in CONVERGENCE_N - 4..=CONVERGENCE_N {
        let nn = Interval::from_i64(prec, n as i64);
        let growth = (&Interval::pi(prec).mul_i64(4).div_i64(5) * &nn.sqrt()).exp();
        let scale = &(&Interval::from_i64(prec, 10).sqrt() * &nn.pow_ratio(3, 4)) / &growth;
        let v = (&Interval::from_integer(prec, coeffs.coeff(n as usize + 1)) * &scale).mid_f64();
        let want = limits[(n % 5) as usize];
        let rel = ((v - want) / want).abs();
        let ok = rel <= CLASS_LIMIT_REL_TOL;
        pass &= ok;
        detail.push(format!("(5,6) n={n} (n mod 5 = {}): {v:.5} vs limit {want:.5}, rel {rel:.2e}{}", n % 5, if ok { "" } else { " FAIL" }));
    }
    Outcome::new(pass, "asymptotic residuals bounded and class-wise limits within 2%", detail)
}

fn criterion_10() -> Outcome {
    let specs = registry_specs();
    let results = map_slice(ExecMode::Parallel, &specs, |(id, spec, _)| match (spec.expand(ORACLE_ORDER), spec.expand_naive(ORACLE_ORDER)) {
        (Ok(a), Ok(b)) if a == b => None,
        (Ok(_), Ok(_)) => Some(format!("{id}: {spec:?} differs from the naive product")),
        (a, b) => Some(format!("{id}: expansion error {:?} / {:?}", a.err(), b.err())),
    });
    let detail: Vec<String> = results.into_iter().flatten().collect();
    Outcome::new(detail.is_empty(), format!("structured vs naive expansion at order {ORACLE_ORDER}, {} specs", specs.len()), detail)
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1", criterion_1),
        ("2", criterion_2),
        ("3", criterion_3),
        ("4", criterion_4),
        ("5", criterion_5),
        ("6", criterion_6),
        ("7", criterion_7),
        ("8", criterion_8),
        ("9", criterion_9),
        ("10", criterion_10),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failures = 0;
    for (id, run) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| f == id) {
            continue;
        }
        let start = Instant::now();
        let out = run();
        println!("{} criterion {id}: {} [{:.1?}]", if out.pass { "PASS" } else { "FAIL" }, out.summary, start.elapsed());
        for d in &out.detail {
            println!("    {d}");
        }
        failures += usize::from(!out.pass);
    }
    println!("acceptance: {failures} criteria failed");
    if failures > 0 {
        std::process::exit(1);
    }
}
