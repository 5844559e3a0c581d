//! The `argshift` command line.

use std::fs;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::classical::{symmetrize, SymElement};
use crate::error::{Error, Result};
use crate::matrix::{power_entry, tau, ElementMatrix};
use crate::quasideriv::{
    central_decomposition, directional_power, matrix_quasi_derive, partial, Variant,
};
use crate::verify::{
    centralizer_suite, char_poly_seeds, classical_suite, eq9_suite, invariant_module_suite,
    lemma1_suite, t_hat, tau_seeds, verify_theorem1, Pairing, Report, Seed, DEFAULT_TERM_BUDGET,
};
use crate::{Element, Rational, Shift};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "argshift",
    version,
    about = "Exact computations in U(gl_d) and argument-shift checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one operation and print the result in canonical form.
    Compute(ComputeArgs),
    /// Run a verification suite; exit 0 iff every check passes.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Dimension d of gl_d.
    #[arg(long)]
    pub d: usize,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub op: ComputeOp,
}

/// Element arguments use the text grammar, e.g. `3/2*e[1,2]*e[2,1] - e[1,1]`;
/// `@path` reads the element from a file.
#[derive(Debug, Subcommand)]
pub enum ComputeOp {
    /// PBW normal form of an element.
    NormalOrder {
        element: String,
    },
    Multiply {
        a: String,
        b: String,
    },
    Commutator {
        a: String,
        b: String,
    },
    /// Quasi-derivative ∂^i_j.
    Qderiv {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        bar: bool,
        element: String,
    },
    /// Directional quasi-derivative tr(ξ·D), optionally iterated.
    Dderiv {
        #[arg(long)]
        xi: String,
        #[arg(long)]
        bar: bool,
        #[arg(long, default_value_t = 1)]
        power: usize,
        element: String,
    },
    /// Matrix of all quasi-derivatives, entry (a,b) = ∂^b_a.
    Dmatrix {
        #[arg(long)]
        bar: bool,
        element: String,
    },
    /// Coefficients a_k with D(f) = Σ a_k (e^k)^T for central f.
    Decompose {
        element: String,
    },
    /// Symmetrization of a commutative polynomial.
    Symmetrize {
        element: String,
    },
    Tau {
        #[arg(long)]
        k: usize,
    },
    PowerEntry {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
    },
    THat {
        #[arg(long)]
        xi: String,
        #[arg(long)]
        i: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Theorem1,
    Centralizer,
    Eq9,
    Lemma1,
    InvariantModule,
    Classical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PairingArg {
    HatHat,
    HatBar,
    BarBar,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeedSet {
    Tau,
    Char,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[arg(long)]
    pub d: usize,
    /// `diag:a,b,...` or `full:[[..],..]`; defaults to diag:d,...,2,1.
    #[arg(long)]
    pub xi: Option<String>,
    /// Largest p + q (theorem1, classical) or p (centralizer, invariant-module).
    #[arg(long, default_value_t = 2)]
    pub pmax: usize,
    /// Largest power n for lemma1; defaults to d + 1.
    #[arg(long)]
    pub nmax: Option<usize>,
    #[arg(long, value_enum, default_value_t = PairingArg::All)]
    pub pairing: PairingArg,
    #[arg(long, value_enum, default_value_t = SeedSet::Tau)]
    pub seeds: SeedSet,
    /// Term ceiling for theorem1.
    #[arg(long, env = "ARGSHIFT_TERM_BUDGET", default_value_t = DEFAULT_TERM_BUDGET)]
    pub budget: u128,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// What a command produced: text for stdout and an exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

/// Exit status for an error.
pub fn error_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

pub fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Compute(args) => compute(args),
        Command::Verify(args) => verify(args),
    }
}

fn read_arg(src: &str) -> Result<String> {
    match src.strip_prefix('@') {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}"))),
        None => Ok(src.to_string()),
    }
}

fn element(src: &str, d: usize) -> Result<Element> {
    Element::parse(&read_arg(src)?, d)
}

fn shift(src: &str, d: usize) -> Result<Shift> {
    let xi = Shift::parse(&read_arg(src)?)?;
    if xi.dim() != d {
        return Err(Error::DimensionMismatch {
            left: d,
            right: xi.dim(),
        });
    }
    Ok(xi)
}

fn variant(bar: bool) -> Variant {
    if bar {
        Variant::Bar
    } else {
        Variant::Hat
    }
}

fn render_element(x: &Element, format: Format) -> String {
    match format {
        Format::Text => format!("{x}\n"),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string(&x.to_json()).expect("serializable")
        ),
    }
}

fn render_matrix(m: &ElementMatrix<Rational>, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = String::new();
            for ((a, b), x) in m.entries() {
                out.push_str(&format!("[{a},{b}] {x}\n"));
            }
            out
        }
        Format::Json => format!(
            "{}\n",
            serde_json::to_string(&m.to_json()).expect("serializable")
        ),
    }
}

fn compute(args: ComputeArgs) -> Result<Outcome> {
    let d = args.d;
    if d == 0 {
        return Err(Error::InvalidDimension(d));
    }
    let f = args.format;
    let stdout = match &args.op {
        ComputeOp::NormalOrder { element: e } => render_element(&element(e, d)?, f),
        ComputeOp::Multiply { a, b } => {
            render_element(&element(a, d)?.checked_mul(&element(b, d)?)?, f)
        }
        ComputeOp::Commutator { a, b } => {
            render_element(&element(a, d)?.commutator(&element(b, d)?)?, f)
        }
        ComputeOp::Qderiv {
            i,
            j,
            bar,
            element: e,
        } => render_element(&partial(variant(*bar), *i, *j, &element(e, d)?)?, f),
        ComputeOp::Dderiv {
            xi,
            bar,
            power,
            element: e,
        } => render_element(
            &directional_power(&shift(xi, d)?, &element(e, d)?, *power, variant(*bar))?,
            f,
        ),
        ComputeOp::Dmatrix { bar, element: e } => {
            render_matrix(&matrix_quasi_derive(&element(e, d)?, variant(*bar)), f)
        }
        ComputeOp::Decompose { element: e } => {
            let dec = central_decomposition(&element(e, d)?)?;
            match f {
                Format::Text => dec.iter().map(|(k, a)| format!("a{k} = {a}\n")).collect(),
                Format::Json => {
                    let v: Vec<_> = dec
                        .iter()
                        .map(|(k, a)| json!({ "k": k, "a": a.to_json() }))
                        .collect();
                    format!("{}\n", serde_json::Value::Array(v))
                }
            }
        }
        ComputeOp::Symmetrize { element: e } => {
            let s = SymElement::parse(&read_arg(e)?, d)?;
            render_element(&symmetrize(&s)?, f)
        }
        ComputeOp::Tau { k } => render_element(&tau(*k, d)?, f),
        ComputeOp::PowerEntry { n, i, j } => render_element(&power_entry(*n, *i, *j, d)?, f),
        ComputeOp::THat { xi, i } => render_element(&t_hat(&shift(xi, d)?, *i)?, f),
    };
    Ok(Outcome {
        stdout,
        code: EXIT_PASS,
    })
}

/// `diag:d,...,2,1`.
pub fn default_shift(d: usize) -> Result<Shift> {
    Shift::diag(
        (1..=d)
            .rev()
            .map(|k| Rational::from_integer(k.into()))
            .collect(),
    )
}

fn seeds(set: SeedSet, d: usize) -> Result<Vec<Seed<Rational>>> {
    Ok(match set {
        SeedSet::Tau => tau_seeds(d)?,
        SeedSet::Char => char_poly_seeds(d)?,
        SeedSet::All => {
            let mut s = tau_seeds(d)?;
            s.extend(char_poly_seeds(d)?);
            s
        }
    })
}

fn verify(args: VerifyArgs) -> Result<Outcome> {
    let d = args.d;
    if d == 0 {
        return Err(Error::InvalidDimension(d));
    }
    let xi = match &args.xi {
        Some(s) => shift(s, d)?,
        None => default_shift(d)?,
    };
    let report = match args.suite {
        Suite::Theorem1 => {
            let seeds = seeds(args.seeds, d)?;
            let pairings: Vec<Pairing> = match args.pairing {
                PairingArg::HatHat => vec![Pairing::HatHat],
                PairingArg::HatBar => vec![Pairing::HatBar],
                PairingArg::BarBar => vec![Pairing::BarBar],
                PairingArg::All => Pairing::ALL.to_vec(),
            };
            let mut merged: Option<Report> = None;
            for p in pairings {
                let r = verify_theorem1(&xi, &seeds, args.pmax, p, args.budget)?;
                merged = Some(match merged {
                    None => r,
                    Some(m) => m.merge(r),
                });
            }
            let mut report = merged.expect("at least one pairing");
            if args.pairing == PairingArg::All {
                report.config["pairing"] = json!("all");
            }
            report
        }
        Suite::Centralizer => centralizer_suite(&xi, &seeds(args.seeds, d)?, args.pmax)?,
        Suite::Eq9 => eq9_suite(&xi)?,
        Suite::Lemma1 => lemma1_suite(&xi, args.nmax.unwrap_or(d + 1))?,
        Suite::InvariantModule => invariant_module_suite(&xi, &seeds(args.seeds, d)?, args.pmax)?,
        Suite::Classical => classical_suite(&xi, args.pmax, args.pmax.min(2))?,
    };
    let code = if report.passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    };
    let stdout = match args.format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&report).expect("serializable")
        ),
        Format::Text => {
            let mut out = String::new();
            for c in &report.checks {
                let status = match c.status {
                    crate::verify::Status::Pass => "PASS",
                    crate::verify::Status::Fail => "FAIL",
                };
                out.push_str(&format!("{status} {}\n", c.id));
                if let Some(w) = &c.witness {
                    if let Ok(x) = Element::from_json(w) {
                        out.push_str(&format!("  witness: {x}\n"));
                    }
                }
            }
            let failed = report.failures().count();
            out.push_str(&format!(
                "{} checks, {failed} failed\n",
                report.checks.len()
            ));
            out
        }
    };
    Ok(Outcome { stdout, code })
}
