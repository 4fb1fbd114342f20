//! The `zetacalc` command line.
//!
//! Exit codes: 0 on success or a verified identity, 1 when an identity fails,
//! 2 on usage, parse or argument errors.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::expr::{parse_class, MAX_EXPONENT};
use crate::lambda::{adams, lambda_power, sym_power, LambdaStructure};
use crate::poly::LefschetzPoly;
use crate::series::{IntSeries, PolySeries};
use crate::transforms::{exp_transform, mobius_transform};
use crate::zeta::{
    mu_dg, verify_mult_cat, verify_mult_kap, verify_pn_power, verify_point_partition,
    verify_theorem_with, zeta_categorical, zeta_motivic, VerificationReport,
};

pub const DEFAULT_ORDER: usize = 16;
pub const MAX_ORDER: usize = 4096;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const GRAMMAR_HELP: &str = "\
Class expressions use L, pt, A^n, P^n, integers, +, -, * and ^.
'^' binds tighter than unary '-', which binds tighter than '*':
-L^2 means -(L^2). Example: \"(P^1)^2 - A^2\".";

#[derive(Debug, Parser)]
#[command(
    name = "zetacalc",
    version,
    about = "Exact motivic and categorical zeta-functions on Z[L]",
    after_help = GRAMMAR_HELP
)]
pub struct Cli {
    /// Truncation order N: series are printed modulo t^(N+1)
    #[arg(long, global = true)]
    pub order: Option<usize>,
    /// Emit one JSON object instead of text
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ZetaKind {
    /// Kapranov's motivic zeta-function over Z[L]
    Mot,
    /// Categorical zeta-function of the dg image
    Cat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    /// f(t) -> prod_k f(t^k)
    Exp,
    /// g(t) -> prod_k g(t^k)^mu(k)
    Mobius,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a zeta-function of a class
    Zeta {
        kind: ZetaKind,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Symmetric power Sym^n of a class
    Sym {
        n: usize,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Exterior power lambda^n of a class
    Lambda {
        n: usize,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Adams operation psi^k of a class
    Adams {
        k: u32,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// The dg motivic measure (evaluation at L = 1)
    Measure {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Exponential transform or its Moebius inverse
    Transform {
        direction: Direction,
        /// Comma-separated integer coefficients c0,c1,...; c0 must be 1
        #[arg(long, allow_hyphen_values = true, required_unless_present = "from_zeta", conflicts_with = "from_zeta")]
        coeffs: Option<String>,
        /// Use Z_mot of this class specialised at L = 1
        #[arg(long, allow_hyphen_values = true)]
        from_zeta: Option<String>,
    },
    /// Check an identity coefficient by coefficient
    Verify {
        #[command(subcommand)]
        identity: VerifyCommand,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Structure {
    /// sigma_t(1) = prod_k 1/(1 - t^k)
    Categorical,
    /// sigma_t(1) = 1/(1 - t); the identity fails for classes of nonzero measure
    Geometric,
}

impl From<Structure> for LambdaStructure {
    fn from(s: Structure) -> Self {
        match s {
            Structure::Categorical => LambdaStructure::Categorical,
            Structure::Geometric => LambdaStructure::Geometric,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Z_cat(X) = prod_k mu_dg(Z_mot(X, t^k))
    Theorem {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// λ-structure used for the left-hand side
        #[arg(long, value_enum, default_value_t = Structure::Categorical)]
        structure: Structure,
    },
    /// Z(c + d) = Z(c) Z(d), motivic unless --categorical
    Mult {
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
        #[arg(long)]
        categorical: bool,
    },
    /// Z_cat(X x P^n) = Z_cat(X)^(n+1)
    Ppower {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        n: u32,
    },
    /// Z_cat(pt) is the partition generating function
    Point,
}

/// Everything a run produced, so callers can test without a subprocess.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

enum Output {
    Poly(LefschetzPoly),
    Int(BigInt),
    PolySeries(PolySeries),
    IntSeries(IntSeries),
    Report(VerificationReport),
}

pub fn poly_json(p: &LefschetzPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(m, a)| json!({ "m": m, "a": a.to_string() }))
            .collect(),
    )
}

pub fn poly_series_json(s: &PolySeries) -> Value {
    json!({
        "coeffs": s.coeffs().iter().map(poly_json).collect::<Vec<_>>(),
        "order": s.precision(),
    })
}

pub fn int_series_json(s: &IntSeries) -> Value {
    json!({
        "coeffs": s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "order": s.precision(),
    })
}

pub fn report_json(r: &VerificationReport) -> Value {
    let mut obj = Map::new();
    obj.insert("identity".into(), json!(r.identity.name()));
    obj.insert("verified".into(), json!(r.verified()));
    obj.insert("precision".into(), json!(r.precision));
    if let Some(m) = &r.mismatch {
        obj.insert(
            "mismatch".into(),
            json!({ "index": m.index, "lhs": m.lhs, "rhs": m.rhs }),
        );
    }
    Value::Object(obj)
}

impl Output {
    fn text(&self) -> String {
        match self {
            Output::Poly(p) => p.to_string(),
            Output::Int(a) => a.to_string(),
            Output::PolySeries(s) => s.to_string(),
            Output::IntSeries(s) => s.to_string(),
            Output::Report(r) => r.to_string(),
        }
    }

    fn json(&self, command: &str, order: usize) -> Value {
        let (key, value) = match self {
            Output::Poly(p) => ("result", poly_json(p)),
            Output::Int(a) => ("result", json!(a.to_string())),
            Output::PolySeries(s) => ("result", poly_series_json(s)),
            Output::IntSeries(s) => ("result", int_series_json(s)),
            Output::Report(r) => ("report", report_json(r)),
        };
        json!({ "command": command, "order": order, key: value })
    }

    fn exit_code(&self) -> i32 {
        match self {
            Output::Report(r) if !r.verified() => EXIT_FAILED,
            _ => EXIT_OK,
        }
    }
}

fn class(expr: &str) -> Result<LefschetzPoly, String> {
    parse_class(expr).map_err(|e| format!("cannot parse {expr:?}: {e}"))
}

fn parse_coeffs(list: &str) -> Result<IntSeries, String> {
    let coeffs = list
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| format!("invalid coefficient {:?} in --coeffs", s.trim()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let precision = coeffs.len() - 1;
    Ok(IntSeries::new(coeffs, precision))
}

fn check_index(what: &str, n: usize, max: usize) -> Result<(), String> {
    if n > max {
        Err(format!("{what} {n} exceeds the maximum {max}"))
    } else {
        Ok(())
    }
}

fn execute(command: &Command, order: usize) -> Result<(String, Output), String> {
    let out = match command {
        Command::Zeta { kind, expr } => {
            let c = class(expr)?;
            match kind {
                ZetaKind::Mot => ("zeta mot", Output::PolySeries(zeta_motivic(&c, order))),
                ZetaKind::Cat => ("zeta cat", Output::IntSeries(zeta_categorical(&c, order))),
            }
        }
        Command::Sym { n, expr } => {
            check_index("index", *n, MAX_ORDER)?;
            ("sym", Output::Poly(sym_power(&class(expr)?, *n)))
        }
        Command::Lambda { n, expr } => {
            check_index("index", *n, MAX_ORDER)?;
            ("lambda", Output::Poly(lambda_power(&class(expr)?, *n)))
        }
        Command::Adams { k, expr } => {
            check_index("index", *k as usize, MAX_EXPONENT as usize)?;
            let c = class(expr)?;
            ("adams", Output::Poly(adams(&c, *k).map_err(|e| e.to_string())?))
        }
        Command::Measure { expr } => ("measure", Output::Int(mu_dg(&class(expr)?))),
        Command::Transform {
            direction,
            coeffs,
            from_zeta,
        } => {
            let (source, n) = match (coeffs, from_zeta) {
                (Some(list), _) => {
                    let s = parse_coeffs(list)?;
                    let n = s.precision();
                    (s, n)
                }
                (None, Some(expr)) => (zeta_motivic(&class(expr)?, order).specialize(), order),
                (None, None) => return Err("one of --coeffs or --from-zeta is required".into()),
            };
            let n = n.min(order);
            let result = match direction {
                Direction::Exp => ("transform exp", exp_transform(&source, n)),
                Direction::Mobius => ("transform mobius", mobius_transform(&source, n)),
            };
            (result.0, Output::IntSeries(result.1.map_err(|e| e.to_string())?))
        }
        Command::Verify { identity } => match identity {
            VerifyCommand::Theorem { expr, structure } => (
                "verify theorem",
                Output::Report(verify_theorem_with((*structure).into(), &class(expr)?, order)),
            ),
            VerifyCommand::Mult { c, d, categorical } => {
                let (c, d) = (class(c)?, class(d)?);
                let report = if *categorical {
                    verify_mult_cat(&c, &d, order)
                } else {
                    verify_mult_kap(&c, &d, order)
                };
                ("verify mult", Output::Report(report))
            }
            VerifyCommand::Ppower { expr, n } => {
                check_index("dimension", *n as usize, MAX_EXPONENT as usize)?;
                (
                    "verify ppower",
                    Output::Report(verify_pn_power(&class(expr)?, *n, order)),
                )
            }
            VerifyCommand::Point => ("verify point", Output::Report(verify_point_partition(order))),
        },
    };
    Ok((out.0.to_string(), out.1))
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };

    // Coefficient lists carry their own length, so only an explicit --order
    // truncates them.
    let explicit_order = cli.order;
    let order = explicit_order.unwrap_or(DEFAULT_ORDER);
    if order > MAX_ORDER {
        return Outcome::usage(format!("--order {order} exceeds the maximum {MAX_ORDER}"));
    }
    let effective = match (&cli.command, explicit_order) {
        (Command::Transform { coeffs: Some(_), .. }, None) => MAX_ORDER,
        _ => order,
    };

    match execute(&cli.command, effective) {
        Ok((command, output)) => {
            let code = output.exit_code();
            let stdout = if cli.json {
                let reported = match &output {
                    Output::IntSeries(s) => s.precision(),
                    Output::PolySeries(s) => s.precision(),
                    _ => order,
                };
                format!("{}\n", output.json(&command, reported))
            } else {
                format!("{}\n", output.text())
            };
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(message) => Outcome::usage(message),
    }
}
