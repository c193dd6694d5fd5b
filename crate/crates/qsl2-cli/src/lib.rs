//! The `qsl2` command-line front end: argument surface, configuration and
//! JSON/text rendering over the `uqsl2` library.

pub mod commands;
pub mod errors;
pub mod expr;
pub mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

pub use errors::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Text,
}

#[derive(Clone, Debug, Args)]
pub struct Config {
    /// Truncation order of jets at q = 1.
    #[arg(long, global = true, env = "QSL2_JET_ORDER", default_value_t = 8,
          value_parser = clap::value_parser!(u32).range(2..=64))]
    pub jet_order: u32,
    /// K-type window |n| <= W for module checks.
    #[arg(long, global = true, env = "QSL2_WINDOW", default_value_t = 40,
          value_parser = clap::value_parser!(i64).range(8..=400))]
    pub window: i64,
    /// Search bound for exponents lambda = +-q^n at concrete q.
    #[arg(long, global = true, env = "QSL2_NMAX", default_value_t = 64,
          value_parser = clap::value_parser!(u32).range(1..=4096))]
    pub n_max: u32,
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    pub output: Output,
}

#[derive(Debug, Parser)]
#[command(name = "qsl2", version, about = "Exact computations in U_q(sl2(R))")]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal form in the first (theta, X/Y, Z) or second (theta, z, a, b) PBW basis.
    Nf {
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
        basis: u8,
        expr: String,
    },
    /// Commutator AB - BA.
    Comm { a: String, b: String },
    /// Image under the star involution.
    Star { expr: String },
    /// Whether an element is central, and its expression as a polynomial in Omega.
    Central { expr: String },
    /// Harish-Chandra image as a Laurent polynomial in t.
    Hc { expr: String },
    /// Action of an element on a vector of the induced module.
    Act {
        #[arg(long, allow_hyphen_values = true)]
        eps: i8,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        q: Option<String>,
        /// Vector as "n:coeff,n:coeff,...".
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        expr: String,
    },
    /// Submodule lattice and composition series.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        eps: i8,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        q: Option<String>,
    },
    /// Intertwiners Ind(eps, from) -> Ind(eps, to) on the window.
    Intertwine {
        #[arg(long, allow_hyphen_values = true)]
        eps: i8,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        #[arg(long)]
        q: Option<String>,
    },
    /// Inner-product weights 2/(q^n + q^-n) for |n| <= N.
    Weights {
        #[arg(long)]
        n: u32,
    },
    /// Adjointness residuals of theta, X, Y, Z for the invariant inner product.
    Adjoint {
        #[arg(long, allow_hyphen_values = true)]
        eps: i8,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        q: String,
    },
    /// Simple subquotients with unitarizability at a concrete q.
    Simple {
        #[arg(long, allow_hyphen_values = true)]
        eps: i8,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        q: String,
    },
    /// The integral form and the classical limit.
    #[command(subcommand)]
    Limit(LimitCommand),
    /// Eigenvalues of theta on the irrep of dimension D.
    Spectrum {
        #[arg(long)]
        dim: usize,
    },
    /// Run the invariant suite.
    Selftest,
}

#[derive(Debug, Subcommand)]
pub enum LimitCommand {
    /// One action coefficient as a jet at q = 1.
    Coeff {
        #[arg(long)]
        kind: String,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        lam: String,
        /// Evaluate at q = Q0 as well (integer lambda only).
        #[arg(long)]
        at: Option<String>,
        /// Use Lambda = -q^lambda.
        #[arg(long)]
        negative: bool,
    },
    /// Classification of the classical module I(eps, lambda).
    ClassicalClassify {
        #[arg(long, allow_hyphen_values = true)]
        eps: i8,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
    /// Compare submodule lattices at q = Q0 and at q = 1.
    Compare {
        #[arg(long, allow_hyphen_values = true)]
        eps: i8,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long)]
        q: String,
    },
}

/// Result of one invocation: exit code and the text for stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let output = cli.config.output;
    match commands::dispatch(&cli.command, &cli.config) {
        Ok(v) => Outcome {
            code: 0,
            stdout: render::render(&v, output),
            stderr: String::new(),
        },
        Err(e) => {
            let mut obj = serde_json::Map::new();
            obj.insert("error".into(), Value::from(e.kind()));
            obj.insert("message".into(), Value::from(e.to_string()));
            if let Some(p) = e.position() {
                obj.insert("position".into(), Value::from(p));
            }
            Outcome {
                code: e.exit_code(),
                stdout: render::render(&Value::Object(obj), output),
                stderr: format!("qsl2: {e}\n"),
            }
        }
    }
}
