//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or input
//! error, 3 the input is mathematically outside the command's domain
//! (an infinite-dimensional quotient or a non-homogeneous ideal where a
//! graded one is needed).

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value as Json};

use crate::apolarity::DualPairing;
use crate::error::Error;
use crate::ideals::Ideal;
use crate::parser::{expand_variables, parse_polynomial, serialize};
use crate::poly::{MonomialOrder, Rational, RingContext};
use crate::verify::{default_alphas, tangent_dimension, verify_all, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MATH: i32 = 3;

/// Current version of the JSON output layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "macaulay", version, about = "Exact commutative algebra over Q")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Report wall time.
    #[arg(long, global = true)]
    pub verbose: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Grevlex,
    Lex,
    Glex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Grevlex => MonomialOrder::Grevlex,
            OrderArg::Lex => MonomialOrder::Lex,
            OrderArg::Glex => MonomialOrder::GradedLex,
        }
    }
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Ordered variable names, e.g. `a1..a5` or `x,y,z`.
    #[arg(long)]
    pub vars: String,
    /// Read the input from a file instead of the command line.
    #[arg(long, conflicts_with = "input")]
    pub file: Option<PathBuf>,
    pub input: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apolar ideal of a form; dual variables `x_i -> a_i`, others `v -> dv`.
    Apolar(InputArgs),
    /// Dimension of the quotient ring.
    Qdim(InputArgs),
    /// Hilbert function of a homogeneous ideal.
    Hilbert(InputArgs),
    /// dim S/I^2 - dim S/I.
    Tangent(InputArgs),
    /// Ideal operations; the result is a reduced Gröbner basis.
    Ideal {
        #[arg(value_enum)]
        op: IdealOp,
        #[arg(long)]
        vars: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
        /// Read the first operand from a file.
        #[arg(long)]
        file: Option<PathBuf>,
        operands: Vec<String>,
    },
    /// Run every verification scenario.
    VerifyPaper {
        /// Family parameter; repeat for several. Defaults to 1, -3 and 1/2.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdealOp {
    /// I + J
    Sum,
    /// I * J
    Product,
    /// I^n
    Power,
    /// I ∩ J
    Intersect,
    /// I : f
    Colon,
    /// I : f^∞
    Saturate,
    /// I == J
    Equal,
    /// homogenize I with a new variable
    Homogenize,
}

impl IdealOp {
    fn second_operand(self) -> &'static str {
        match self {
            IdealOp::Sum | IdealOp::Product | IdealOp::Intersect | IdealOp::Equal => "an ideal",
            IdealOp::Power => "an exponent",
            IdealOp::Colon | IdealOp::Saturate => "a polynomial",
            IdealOp::Homogenize => "a variable name",
        }
    }
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InfiniteDimensional | Error::NotHomogeneous | Error::ZeroHilbertFunction => {
                EXIT_MATH
            }
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<crate::error::ParseError> for Failure {
    fn from(e: crate::error::ParseError) -> Self {
        Failure::from(Error::from(e))
    }
}

/// Rendered result of a command.
enum Output {
    Generators(Vec<String>),
    Integer(usize),
    Vector(Vec<usize>),
    Boolean(bool),
    Reports(Vec<VerificationReport>),
}

fn ring(vars: &str) -> Result<Arc<RingContext>, Failure> {
    let names = expand_variables(vars).map_err(Failure::usage)?;
    Ok(RingContext::new(names)?)
}

fn read_input(file: &Option<PathBuf>, inline: Option<&str>) -> Result<String, Failure> {
    match (file, inline) {
        (Some(path), None) => std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display()))),
        (None, Some(s)) => Ok(s.to_string()),
        (Some(_), Some(_)) => Err(Failure::usage(
            "give the input either inline or with --file, not both",
        )),
        (None, None) => Err(Failure::usage(
            "missing input: give it inline or with --file",
        )),
    }
}

fn generators(ideal: &Ideal, order: &MonomialOrder) -> Vec<String> {
    ideal
        .groebner_for(order)
        .elements()
        .iter()
        .map(serialize)
        .collect()
}

fn execute(cmd: &Command) -> Result<Output, Failure> {
    match cmd {
        Command::Apolar(a) => {
            let ctx = ring(&a.vars)?;
            let src = read_input(&a.file, a.input.as_deref())?;
            let form = parse_polynomial(&src, &ctx)?;
            let pairing = DualPairing::new(&ctx)?;
            let ideal = pairing.apolar_ideal(&form)?;
            Ok(Output::Generators(
                ideal.generators().iter().map(serialize).collect(),
            ))
        }
        Command::Qdim(a) | Command::Hilbert(a) | Command::Tangent(a) => {
            let ctx = ring(&a.vars)?;
            let ideal = Ideal::parse(&ctx, &read_input(&a.file, a.input.as_deref())?)?;
            Ok(match cmd {
                Command::Qdim(_) => Output::Integer(ideal.quotient_dimension()?),
                Command::Hilbert(_) => Output::Vector(ideal.hilbert_function()?.values().to_vec()),
                _ => Output::Integer(tangent_dimension(&ideal)?),
            })
        }
        Command::Ideal {
            op,
            vars,
            order,
            file,
            operands,
        } => {
            let ctx = ring(vars)?;
            let order = MonomialOrder::from(*order);
            let mut operands: Vec<String> = operands.clone();
            if file.is_some() {
                operands.insert(0, read_input(file, None)?);
            }
            if operands.len() != 2 {
                return Err(Failure::usage(format!(
                    "`{}` takes an ideal and {}; got {} operand(s)",
                    op.to_possible_value().unwrap().get_name(),
                    op.second_operand(),
                    operands.len()
                )));
            }
            let first = Ideal::parse(&ctx, &operands[0])?;
            let second = &operands[1];
            let ideal_arg = || Ideal::parse(&ctx, second);
            let poly_arg = || parse_polynomial(second, &ctx);
            let result = match op {
                IdealOp::Sum => first.sum(&ideal_arg()?)?,
                IdealOp::Product => first.product(&ideal_arg()?)?,
                IdealOp::Intersect => first.intersect(&ideal_arg()?)?,
                IdealOp::Equal => return Ok(Output::Boolean(first.equals(&ideal_arg()?)?)),
                IdealOp::Power => {
                    let n: u32 = second.trim().parse().map_err(|_| {
                        Failure::usage(format!("exponent `{second}` is not a nonnegative integer"))
                    })?;
                    first.power(n)?
                }
                IdealOp::Colon => first.colon(&poly_arg()?)?,
                IdealOp::Saturate => first.saturate(&poly_arg()?)?,
                IdealOp::Homogenize => first.homogenize(second.trim())?,
            };
            Ok(Output::Generators(generators(&result, &order)))
        }
        Command::VerifyPaper { alpha } => {
            let alphas = if alpha.is_empty() {
                default_alphas()
            } else {
                alpha
                    .iter()
                    .map(|s| {
                        s.trim().parse::<Rational>().map_err(|_| {
                            Failure::usage(format!("alpha `{s}` is not a rational number"))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?
            };
            Ok(Output::Reports(verify_all(&alphas)?))
        }
    }
}

fn render_text(output: &Output, verbose: bool) -> String {
    match output {
        Output::Generators(gens) => gens.iter().map(|g| format!("{g}\n")).collect(),
        Output::Integer(n) => format!("{n}\n"),
        Output::Vector(v) => {
            let parts: Vec<_> = v.iter().map(ToString::to_string).collect();
            format!("{}\n", parts.join(","))
        }
        Output::Boolean(b) => format!("{b}\n"),
        Output::Reports(reports) => {
            let mut s = String::new();
            for r in reports {
                let status = if r.passed { "PASS" } else { "FAIL" };
                let param = r
                    .parameter
                    .as_ref()
                    .map(|p| format!(" [{p}]"))
                    .unwrap_or_default();
                s.push_str(&format!("{} {status}{param}", r.scenario));
                if verbose {
                    s.push_str(&format!(" ({:.3}s)", r.wall_time.as_secs_f64()));
                }
                s.push('\n');
                for c in &r.checks {
                    let mark = if c.passed { "ok" } else { "FAILED" };
                    s.push_str(&format!(
                        "  {mark:6} {:3} {}: {} (expected {}; {})\n",
                        c.id, c.description, c.computed, c.expected, c.citation
                    ));
                }
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            if failed == 0 {
                s.push_str(&format!("all {} scenarios passed\n", reports.len()));
            } else {
                s.push_str(&format!("{failed} of {} scenarios failed\n", reports.len()));
            }
            s
        }
    }
}

fn render_json(output: &Output, verbose: bool) -> String {
    let value = match output {
        Output::Generators(gens) => json!({ "schema": SCHEMA_VERSION, "value": gens }),
        Output::Integer(n) => json!({ "schema": SCHEMA_VERSION, "value": n }),
        Output::Vector(v) => json!({ "schema": SCHEMA_VERSION, "value": v }),
        Output::Boolean(b) => json!({ "schema": SCHEMA_VERSION, "value": b }),
        Output::Reports(reports) => {
            let rendered: Vec<Json> = reports
                .iter()
                .map(|r| {
                    let mut v = serde_json::to_value(r).expect("reports serialize");
                    if verbose {
                        v["wall_time_seconds"] = json!(r.wall_time.as_secs_f64());
                    }
                    v
                })
                .collect();
            json!({
                "schema": SCHEMA_VERSION,
                "passed": reports.iter().all(|r| r.passed),
                "reports": rendered,
            })
        }
    };
    let mut s = serde_json::to_string_pretty(&value).expect("json values serialize");
    s.push('\n');
    s
}

/// Run with explicit arguments (including the program name) and streams.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    let start = Instant::now();
    let result = execute(&config.command);
    let code = match result {
        Ok(output) => {
            let text = match config.format {
                Format::Text => render_text(&output, config.verbose),
                Format::Json => render_json(&output, config.verbose),
            };
            let _ = out.write_all(text.as_bytes());
            match output {
                Output::Reports(r) if r.iter().any(|r| !r.passed) => EXIT_VERIFICATION_FAILED,
                _ => EXIT_OK,
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    };
    if config.verbose {
        let _ = writeln!(err, "wall time: {:.3}s", start.elapsed().as_secs_f64());
    }
    code
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    const GENS: &str =
        "a1*a2, a1*a3, a1*a4, a2^2 - a1^2, a2*a3, a2*a4 - a3^2, a2*a5 - a4^2, a3*a5, a4*a5, a5^2";

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("macaulay").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn qdim_and_hilbert() {
        assert_eq!(
            call(&["qdim", "--vars", "a1..a5", GENS]),
            (0, "12\n".into(), String::new())
        );
        assert_eq!(call(&["hilbert", "--vars", "a1..a5", GENS]).1, "1,5,5,1\n");
        let (code, out, _) = call(&["qdim", "--vars", "a1..a5", "--format", "json", GENS]);
        assert_eq!(code, 0);
        let v: Json = serde_json::from_str(&out).unwrap();
        assert_eq!(v, json!({"schema": 1, "value": 12}));
    }

    #[test]
    fn apolar_small() {
        assert_eq!(call(&["apolar", "--vars", "x1", "x1^3"]).1, "a1^4\n");
        let (code, out, _) = call(&[
            "apolar",
            "--vars",
            "x1..x5",
            "x2^2*x5 + x2*x4^2 + x1^2*x5 + x3^2*x4",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 10);
    }

    #[test]
    fn ideal_ops() {
        assert_eq!(
            call(&["ideal", "intersect", "--vars", "x,y", "(x)", "(y)"]).1,
            "x*y\n"
        );
        assert_eq!(
            call(&["ideal", "equal", "--vars", "x,y", "x, y", "x + y, x - y"]).1,
            "true\n"
        );
        assert_eq!(call(&["ideal", "power", "--vars", "x,y", "x, y", "0"]).0, 2);
        assert_eq!(call(&["ideal", "sum", "--vars", "x,y", "x"]).0, 2);
        assert_eq!(
            call(&["ideal", "colon", "--vars", "x,y", "x*y, y^2", "y"]).1,
            "y\nx\n"
        );
        assert_eq!(
            call(&["ideal", "homogenize", "--vars", "x", "x^2 - 1", "z"]).1,
            "x^2 - z^2\n"
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["qdim", "--vars", "x,y", "x"]).0, 3);
        assert_eq!(call(&["hilbert", "--vars", "x", "x^2 - 1"]).0, 3);
        let (code, _, err) = call(&["qdim", "--vars", "x", "x +"]);
        assert_eq!(code, 2);
        assert!(err.contains("line 1"));
        assert_eq!(call(&["apolar", "--vars", "x", "0"]).0, 2);
        assert_eq!(call(&["qdim", "--vars", "x"]).0, 2);
        assert_eq!(call(&["qdim", "--bogus"]).0, 2);
        assert_eq!(call(&["verify-paper", "--alpha", "0"]).0, 2);
        assert_eq!(call(&["verify-paper", "--alpha", "x"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }
}
