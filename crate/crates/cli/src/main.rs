//! `borwein`: command-line front end for exact coefficients and sign
//! classification of powers of the infinite Borwein product.

mod output;

use std::io::{Read, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use borwein_core::arith::{alpha, alpha_enclosure, alpha_sign, BigFloat};
use borwein_core::asymptotics::MAX_PREC;
use borwein_core::classify::{classify, cutoff, cutoff_all_m, exceptional_set, is_prime, render_markdown, zero_residue_check, SignTable};
use borwein_core::identities::run_registry_at;
use borwein_core::par::{map_slice, ExecMode};
use borwein_core::qseries::{borwein_coeffs_with, IntegerSeries};

use output::Format;

#[derive(Parser)]
#[command(name = "borwein", version, about = "Coefficients and sign patterns of (q;q)^m / (q^t;q^t)^m")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Output format; each command has its own default
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Working precision in bits for interval evaluations
    #[arg(long, global = true, env = "BORWEIN_PRECISION", default_value_t = 256)]
    precision: u32,
    /// Run single-threaded
    #[arg(long, global = true)]
    sequential: bool,
}

impl Global {
    fn mode(&self) -> ExecMode {
        if self.sequential {
            ExecMode::Sequential
        } else {
            ExecMode::Parallel
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients c_t^(m)(n) for 0 <= n <= N
    Coeffs {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        m: usize,
        /// Highest index
        #[arg(long)]
        n: usize,
    },
    /// Read a series from stdin (tsv or JSON) and extract sum_n a(tn + r) q^n
    Dissect { t: usize, r: usize },
    /// Full sign classification of one (t, m)
    Classify {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        m: u64,
    },
    /// Residue tables for a range of t
    Tables {
        /// Inclusive range, e.g. 2..24
        #[arg(long, default_value = "2..24", value_parser = parse_range)]
        t_range: (u64, u64),
        /// Add the exceptional set column for prime t (slow for large t)
        #[arg(long)]
        with_e: bool,
    },
    /// Certified cutoff B(t) past which every sign agrees with alpha
    Bound {
        #[arg(long)]
        t: u64,
        /// Restrict to a single m instead of all admissible m
        #[arg(long)]
        m: Option<u64>,
    },
    /// Exact value and sign of alpha_t^(m)(r)
    Alpha {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        r: u64,
    },
    /// Check every registered q-series identity coefficientwise
    VerifyIdentities {
        /// Truncation order (cubic double-sum identities run at 3/10 of it)
        #[arg(long, env = "BORWEIN_IDENTITY_ORDER", default_value_t = 500)]
        order: usize,
    },
    /// Check vanishing of c_t^(m)(n) on the zero residues of alpha
    ZeroCheck {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        m: u64,
        #[arg(long, default_value_t = 2000)]
        n: u64,
    },
}

fn parse_range(s: &str) -> std::result::Result<(u64, u64), String> {
    let (a, b) = s.split_once("..").ok_or("expected a range like 2..24")?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let lo: u64 = a.trim().parse().map_err(|e| format!("{a}: {e}"))?;
    let hi: u64 = b.trim().parse().map_err(|e| format!("{b}: {e}"))?;
    if lo < 2 || hi < lo || hi > 25 {
        return Err(format!("range {lo}..{hi} must satisfy 2 <= lo <= hi <= 25"));
    }
    Ok((lo, hi))
}

/// What a command produced: text for stdout and whether its checks passed.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn data(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    if !(2..=MAX_PREC).contains(&g.precision) {
        bail!("precision must be between 2 and {MAX_PREC} bits");
    }
    match &cli.command {
        Command::Coeffs { t, m, n } => {
            if *t == 0 {
                bail!("t must be positive");
            }
            let s = borwein_coeffs_with(*t, *m, *n, g.mode());
            Ok(Outcome::data(output::series(&s, g.format.unwrap_or(Format::Tsv))))
        }
        Command::Dissect { t, r } => {
            if *t == 0 || r >= t {
                bail!("need t > 0 and 0 <= r < t");
            }
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text).context("reading stdin")?;
            let s = read_series(&text)?;
            if s.order() < *r {
                bail!("input series of order {} is too short to dissect at r = {r}", s.order());
            }
            Ok(Outcome::data(output::series(&s.dissect(*t, *r), g.format.unwrap_or(Format::Tsv))))
        }
        Command::Classify { t, m } => {
            let table = classify(*t, *m)?;
            Ok(Outcome::data(output::sign_tables(&[table], g.format.unwrap_or(Format::Json))))
        }
        Command::Tables { t_range, with_e } => tables(*t_range, *with_e, g),
        Command::Bound { t, m } => {
            let cut = match m {
                Some(m) => cutoff(*t, *m)?,
                None => cutoff_all_m(*t)?,
            };
            eprintln!("bound: B({t}) = {} certified, window {} re-checked", cut.b, cut.window);
            Ok(Outcome::data(output::cutoff(&cut, g.format.unwrap_or(Format::Json))))
        }
        Command::Alpha { t, m, r } => {
            borwein_core::asymptotics::check_admissible(*t, *m)?;
            let value = alpha(*t, *m, *r);
            let enclosure = alpha_enclosure(*t, *m, *r, g.precision);
            let sign = alpha_sign(*t, *m, *r);
            let digits = (g.precision as f64 * 0.30103) as usize;
            let report = output::AlphaReport {
                t: *t,
                m: *m,
                r: *r % *t,
                root_order: value.order(),
                coefficients: value.coeffs().to_vec(),
                sign: sign.to_string(),
                lower: BigFloat::lower_of(&enclosure).to_decimal(digits),
                upper: BigFloat::upper_of(&enclosure).to_decimal(digits),
            };
            Ok(Outcome::data(output::alpha(&report, g.format.unwrap_or(Format::Json))))
        }
        Command::VerifyIdentities { order } => {
            eprintln!("verify-identities: checking the registry at order {order}");
            let report = run_registry_at(*order, g.mode());
            let failed = report.results.iter().filter(|r| !r.holds).count();
            eprintln!("verify-identities: {} identities, {failed} failed", report.results.len());
            let ok = report.all_passed;
            Ok(Outcome { text: output::identities(&report, g.format.unwrap_or(Format::Markdown)), ok })
        }
        Command::ZeroCheck { t, m, n } => {
            let report = zero_residue_check(*t, *m, *n)?;
            let ok = report.passed;
            Ok(Outcome { text: output::zero_check(&report, g.format.unwrap_or(Format::Json)), ok })
        }
    }
}

fn read_series(text: &str) -> Result<IntegerSeries> {
    if text.trim_start().starts_with('[') {
        let value: serde_json::Value = serde_json::from_str(text).context("parsing JSON series")?;
        Ok(IntegerSeries::from_json(&value)?)
    } else {
        Ok(IntegerSeries::from_tsv(text)?)
    }
}

fn tables((lo, hi): (u64, u64), with_e: bool, g: &Global) -> Result<Outcome> {
    let ts: Vec<u64> = (lo..=hi).collect();
    let per_t = map_slice(g.mode(), &ts, |&t| -> Result<Vec<SignTable>> {
        let rows = (1..=24 / (t - 1))
            .map(|m| if with_e && is_prime(t) { exceptional_set(t, m) } else { Ok(SignTable::basic(t, m)) })
            .collect::<borwein_core::Result<Vec<_>>>()?;
        eprintln!("tables: t = {t} done");
        Ok(rows)
    });
    let per_t = per_t.into_iter().collect::<Result<Vec<_>>>()?;
    let format = g.format.unwrap_or(Format::Markdown);
    let text = match format {
        Format::Markdown => ts
            .iter()
            .zip(&per_t)
            .map(|(&t, rows)| render_markdown(t, rows, with_e && is_prime(t)))
            .collect::<Vec<_>>()
            .join("\n"),
        _ => output::sign_tables(&per_t.concat(), format),
    };
    Ok(Outcome::data(text))
}
