//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when the report holds a certified
//! counter-finding, 2 on usage, parse or analysis errors.

mod commands;
pub mod report;
pub mod spec_doc;

use crate::error::{Error, Result};
use crate::hyperbolicity::random::DEFAULT_SEED;
use crate::scalar::DEFAULT_PRECISION;
use clap::{Args, Parser, Subcommand};
use report::{emit_report, Format, Report};
use sha2::{Digest, Sha256};
use std::path::PathBuf;

pub use spec_doc::{emit_spec, parse_spec};

#[derive(Parser, Debug)]
#[command(name = "lpsign", version, about = "Certified coefficient signs and growth of Laguerre-Polya functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// JSON function specification.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Number of leading coefficients a_0..a_(N-1).
    #[arg(long)]
    order: Option<usize>,
    /// Last analysed index.
    #[arg(long)]
    horizon: Option<usize>,
    /// Index window LO..HI.
    #[arg(long)]
    window: Option<String>,
    /// Bits for ball arithmetic.
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    precision: u32,
    /// json, csv or text.
    #[arg(long, default_value = "json")]
    format: String,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficients with error bounds and certified signs.
    Coeffs(Common),
    /// Certified sign string.
    Signs(Common),
    /// Alternating-pair analysis up to the horizon.
    Tail(Common),
    /// Order and type estimates.
    Growth {
        #[command(flatten)]
        common: Common,
        /// Order used for the type statistic.
        #[arg(long, default_value = "2")]
        rho: String,
    },
    /// Subclass of the declared function.
    Classify(Common),
    VerifyThm1(Common),
    VerifyThm2 {
        #[command(flatten)]
        common: Common,
        /// Coefficients b_0,b_1,... of P.
        #[arg(long)]
        poly: Option<String>,
        /// Roots of P (P is monic).
        #[arg(long)]
        roots: Option<String>,
        /// Gaussian parameter; the battery uses -1 and -1/3 when absent.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    VerifyThm3 {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "0")]
        rho: String,
        #[arg(long, default_value_t = 12)]
        count1: usize,
        /// Symmetric pairs in the second product.
        #[arg(long, default_value_t = 10)]
        count2: usize,
        /// `e` or the exact surrogate `3`.
        #[arg(long, default_value = "e")]
        base: String,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        a: String,
    },
    VerifyCor1(Common),
    /// Purely imaginary zeros of even and odd parts.
    Lemma2 {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        poly: Option<String>,
        #[arg(long)]
        roots: Option<String>,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 10)]
        max_degree: usize,
    },
    MultiplierTest {
        #[command(flatten)]
        common: Common,
        /// `1`, `n`, `n+1`, `(-1)^n`, `(-1)^n n!` or a list g0,g1,...
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        gamma: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// Hermite-Biehler interlacing of u and v, or a planted-zero battery.
    HbCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

impl Command {
    fn common(&self) -> &Common {
        match self {
            Command::Coeffs(c)
            | Command::Signs(c)
            | Command::Tail(c)
            | Command::Classify(c)
            | Command::VerifyThm1(c)
            | Command::VerifyCor1(c) => c,
            Command::Growth { common, .. }
            | Command::VerifyThm2 { common, .. }
            | Command::VerifyThm3 { common, .. }
            | Command::Lemma2 { common, .. }
            | Command::MultiplierTest { common, .. }
            | Command::HbCheck { common, .. } => common,
        }
    }
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

fn failure(e: &Error) -> Outcome {
    Outcome {
        code: 2,
        stdout: Vec::new(),
        stderr: format!("error: {e}\n"),
    }
}

/// Runs the tool on `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text.into_bytes(),
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: Vec::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli, &argv) {
        Ok(o) => o,
        Err(e) => failure(&e),
    }
}

fn execute(cli: &Cli, argv: &[String]) -> Result<Outcome> {
    let common = cli.command.common();
    let format = Format::parse(&common.format)?;
    let spec_text = match &common.spec {
        Some(p) => Some(std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?),
        None => None,
    };
    let mut h = Sha256::new();
    if let Some(t) = &spec_text {
        h.update(t.as_bytes());
    }
    h.update(argv[1..].join("\u{1f}").as_bytes());
    let digest = hex::encode(h.finalize());
    let mut report = Report::new(argv[1..].to_vec(), digest);
    commands::dispatch(&cli.command, spec_text.as_deref(), &mut report)?;
    let bytes = emit_report(&report, format)?;
    let code = if report.counter_finding { 1 } else { 0 };
    match &common.out {
        Some(p) => {
            std::fs::write(p, &bytes).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            Ok(Outcome {
                code,
                stdout: Vec::new(),
                stderr: String::new(),
            })
        }
        None => Ok(Outcome {
            code,
            stdout: bytes,
            stderr: String::new(),
        }),
    }
}
