//! Command-line front end. The binary is a thin wrapper around [`run`], so
//! everything here can be driven from tests with in-memory writers.
//!
//! Exit codes: 0 success, 1 an identity failed, 2 usage or input error,
//! 3 numeric failure (pole, truncation, non-finite value).

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use crate::digamma::{cot_param, coth_param, psi_param};
use crate::error::{Error, Result};
use crate::eulersums::{euler_sum, mzv_constant, SumSpec};
use crate::identities::{cases_matching, verify, RealLabel, SuiteSummary, VerificationReport};
use crate::numkernel::context::DEFAULT_GUARD;
use crate::numkernel::{eta, euler_gamma, polylog, zeta, PrecisionContext, Real};
use crate::seqcore::{functional, FunctionalKind, WeightSequence};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// Options shared by every subcommand.
#[derive(Clone, Debug, clap::Args)]
pub struct CliConfig {
    /// Significant decimal digits (20..=200).
    #[arg(long, global = true, env = "EULERFORGE_DIGITS", default_value_t = 40,
          value_parser = clap::value_parser!(u32).range(20..=200))]
    pub digits: u32,

    /// Pass threshold for verify; defaults to 10^-(digits-10).
    #[arg(long, global = true)]
    pub tolerance: Option<String>,

    /// Upper bound on series terms before a truncation error.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub max_terms: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Only cases whose id starts with this prefix.
    #[arg(long, global = true)]
    pub filter: Option<String>,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig { digits: 40, tolerance: None, max_terms: 1_000_000, format: Format::Text, filter: None }
    }
}

impl CliConfig {
    pub fn context(&self) -> Result<PrecisionContext> {
        if !(20..=200).contains(&self.digits) {
            return Err(Error::InvalidArgument(format!("digits must lie in [20, 200] (got {})", self.digits)));
        }
        PrecisionContext::with_options(self.digits, DEFAULT_GUARD, self.max_terms)
    }
}

#[derive(Debug, Parser)]
#[command(name = "eulerforge", version, about = "High-precision Euler sums, parametric digamma functions and identity checks")]
struct Cli {
    #[command(flatten)]
    config: CliConfig,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one expression, e.g. "S[1;2]", "zeta 3", "func M ones 3 2".
    Eval {
        /// The expression; several words are joined with spaces.
        #[arg(required = true, num_args = 1..)]
        expr: Vec<String>,
    },
    /// Run the identity suite.
    Verify,
    /// List registered identities.
    List,
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_numeric() {
        EXIT_NUMERIC
    } else {
        EXIT_USAGE
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let cfg = &cli.config;
    let code = match cli.command {
        Command::Eval { expr } => cmd_eval(&expr.join(" "), cfg, out, err),
        Command::Verify => cmd_verify(cfg, out, err),
        Command::List => cmd_list(cfg, out),
    };
    let _ = out.flush();
    code
}

fn word<'a>(w: &[&'a str], i: usize, expr: &str) -> Result<&'a str> {
    w.get(i).copied().ok_or_else(|| Error::Parse(format!("`{expr}`: missing argument {i}")))
}

fn int<T: std::str::FromStr>(s: &str) -> Result<T> {
    s.parse().map_err(|_| Error::Parse(format!("expected an integer, got `{s}`")))
}

fn real(s: &str, ctx: &PrecisionContext) -> Result<Real> {
    RealLabel::new(s)?.eval(ctx)
}

/// Evaluates one expression at the context's precision.
pub fn evaluate(expr: &str, ctx: &PrecisionContext) -> Result<Real> {
    let expr = expr.trim();
    if expr.starts_with("S[") {
        return euler_sum(&expr.parse::<SumSpec>()?, ctx);
    }
    let w: Vec<&str> = expr.split_whitespace().collect();
    let arity = |n: usize| {
        if w.len() == n {
            Ok(())
        } else {
            Err(Error::Parse(format!("`{expr}`: expected {} argument(s)", n - 1)))
        }
    };
    match w.first().copied() {
        Some("zeta") => {
            arity(2)?;
            zeta(int(w[1])?, ctx)
        }
        Some("eta") => {
            arity(2)?;
            eta(int(w[1])?, ctx)
        }
        Some("li") => {
            arity(3)?;
            polylog(int(w[1])?, &real(w[2], ctx)?, ctx)
        }
        Some(f @ ("psi" | "cot" | "coth")) => {
            arity(3)?;
            let a: WeightSequence = w[1].parse()?;
            let s = real(w[2], ctx)?;
            match f {
                "psi" => psi_param(&s, &a, ctx),
                "cot" => cot_param(&s, &a, ctx),
                _ => coth_param(&s, &a, ctx),
            }
        }
        Some("func") => {
            arity(5)?;
            let kind: FunctionalKind = w[1].parse()?;
            let a: WeightSequence = w[2].parse()?;
            functional(kind, &a, int(w[3])?, int(w[4])?, ctx)
        }
        Some("const") => {
            arity(2)?;
            match word(&w, 1, expr)? {
                "gamma" => euler_gamma(ctx),
                name => mzv_constant(name, ctx),
            }
        }
        _ => Err(Error::Parse(format!(
            "`{expr}`: expected zeta k | eta k | li s x | S[..] | psi A s | cot A s | coth A s | func KIND A n j | const NAME"
        ))),
    }
}

pub fn cmd_eval(expr: &str, cfg: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let v = cfg.context().and_then(|ctx| evaluate(expr, &ctx));
    match v {
        Ok(v) => {
            let s = v.to_decimal(cfg.digits as usize);
            let _ = match cfg.format {
                Format::Text => writeln!(out, "{s}"),
                Format::Json => writeln!(out, "{}", json!({ "expr": expr, "digits": cfg.digits, "value": s })),
                Format::Csv => writeln!(out, "expr,digits,value\n\"{}\",{},{s}", expr.replace('"', "\"\""), cfg.digits),
            };
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn summary_json(s: &SuiteSummary) -> Json {
    json!({ "summary": { "cases": s.total(), "pass": s.pass, "fail": s.fail, "skipped": s.skipped } })
}

/// Runs the suite, writing each report as soon as it is judged.
pub fn cmd_verify(cfg: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let ctx = match cfg.context() {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let tol = match &cfg.tolerance {
        None => None,
        Some(t) => match ctx.parse(t) {
            Ok(v) if !v.is_sign_negative() && !v.is_zero() => Some(v),
            _ => {
                let _ = writeln!(err, "error: tolerance must be a positive number, got `{t}`");
                return EXIT_USAGE;
            }
        },
    };
    if cfg.format == Format::Csv {
        let _ = writeln!(out, "{}", VerificationReport::CSV_HEADER);
    }
    let mut reports = Vec::new();
    for case in cases_matching(cfg.filter.as_deref()) {
        for p in case.grid() {
            let mut r = match verify(case.id, &p, &ctx) {
                Ok(r) => r,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return exit_code(&e);
                }
            };
            if let Some(t) = &tol {
                r.rejudge(t);
            }
            let _ = match cfg.format {
                Format::Text => writeln!(out, "{r}"),
                Format::Json => writeln!(out, "{}", r.to_json()),
                Format::Csv => writeln!(out, "{}", r.to_csv()),
            };
            let _ = out.flush();
            reports.push(r);
        }
    }
    let s = SuiteSummary::of(&reports);
    let _ = match cfg.format {
        Format::Text => writeln!(out, "{s}"),
        Format::Json => writeln!(out, "{}", summary_json(&s)),
        Format::Csv => writeln!(err, "{s}"),
    };
    if s.all_pass() {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

pub fn cmd_list(cfg: &CliConfig, out: &mut dyn Write) -> i32 {
    let cases = cases_matching(cfg.filter.as_deref());
    let _ = match cfg.format {
        Format::Text => cases.iter().try_for_each(|c| {
            writeln!(out, "{:<14} {:<48} {}", c.id, c.citation.locator, c.domain_summary())
        }),
        Format::Json => {
            let arr: Vec<Json> = cases
                .iter()
                .map(|c| {
                    json!({
                        "id": c.id,
                        "locator": c.citation.locator,
                        "quote": c.citation.quote,
                        "domain": c.domain_summary(),
                        "assignments": c.grid().len(),
                    })
                })
                .collect();
            writeln!(out, "{}", Json::Array(arr))
        }
        Format::Csv => {
            let q = |s: &str| format!("\"{}\"", s.replace('"', "\"\""));
            writeln!(out, "id,locator,domain").and_then(|_| {
                cases.iter().try_for_each(|c| {
                    writeln!(out, "{},{},{}", c.id, q(c.citation.locator), q(&c.domain_summary()))
                })
            })
        }
    };
    EXIT_OK
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("eulerforge").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn eval_exit_codes() {
        let (c, out, _) = go(&["eval", "S[1;2]"]);
        assert_eq!(c, 0);
        assert!(out.starts_with("2.404113806319188570799476323"), "{out}");
        let (c, _, err) = go(&["eval", "zeta 1"]);
        assert_eq!(c, 2);
        assert!(err.contains("zeta_conv"));
        assert_eq!(go(&["eval", "zeta"]).0, 2);
        assert_eq!(go(&["eval", "cot ones 3"]).0, 3);
        assert_eq!(go(&["eval", "frobnicate 2"]).0, 2);
    }

    #[test]
    fn config_guards() {
        assert_eq!(go(&["verify", "--digits", "10"]).0, 2);
        assert_eq!(go(&["list", "--digits", "201"]).0, 2);
        assert_eq!(go(&["list", "--bogus"]).0, 2);
        assert_eq!(go(&[]).0, 2);
        assert_eq!(go(&["--help"]).0, 0);
    }

    #[test]
    fn empty_filter() {
        let (c, out, _) = go(&["verify", "--filter", "nosuch"]);
        assert_eq!(c, 0);
        assert!(out.starts_with("0 cases"), "{out}");
    }

    #[test]
    fn list_filters() {
        let (_, out, _) = go(&["list", "--filter", "thm3"]);
        assert!(out.lines().count() >= 3);
        assert!(out.lines().all(|l| l.starts_with("thm3.")));
        let (_, out, _) = go(&["list"]);
        assert!(out.lines().any(|l| l.starts_with("eq5.9 ")));
    }
}
