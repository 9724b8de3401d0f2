//! The `skewgb` command line: argument parsing, dispatch and exit codes.

mod commands;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_PARSE: i32 = 65;

#[derive(Parser, Debug)]
#[command(name = "skewgb", version, about = "Gröbner bases for free algebras and skew 2-nomial quotients")]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Truncation degree for every bounded search.
    #[arg(long = "max-deg", global = true, default_value_t = 6)]
    pub max_deg: u32,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Presentation file.
    #[arg(value_name = "FILE")]
    pub path: Option<PathBuf>,
    #[arg(long = "file", value_name = "FILE", conflicts_with = "path")]
    pub file: Option<PathBuf>,
}

impl Input {
    pub fn path(&self) -> Option<&PathBuf> {
        self.path.as_ref().or(self.file.as_ref())
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normal form (remainder of division) of a polynomial.
    Nf {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "two")]
        side: String,
        /// Also list the quotient terms.
        #[arg(long)]
        trace: bool,
    },
    /// Verify the relations form a Gröbner basis up to the truncation degree.
    CheckGb {
        #[command(flatten)]
        input: Input,
    },
    /// Truncated completion to a reduced Gröbner basis.
    Complete {
        #[command(flatten)]
        input: Input,
        /// Accepted for compatibility; the output is always reduced.
        #[arg(long)]
        minimal: bool,
    },
    /// Compare the Gröbner property of G and of its leading homogeneous parts.
    Prop26 {
        #[command(flatten)]
        input: Input,
    },
    /// Left / right / two-sided shape of a monomial-binomial basis.
    Classify {
        #[command(flatten)]
        input: Input,
        /// Use the leading homogeneous parts of the relations.
        #[arg(long)]
        lh: bool,
    },
    /// Classes of words that agree up to a scalar modulo the ideal.
    Equiv {
        #[command(flatten)]
        input: Input,
    },
    /// Rewrite a Gröbner basis into monomials and skew 2-nomials.
    SkewgbExtract {
        #[command(flatten)]
        input: Input,
    },
    /// Search for two basis words a multiplication sends to one word.
    Obstruct {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "two")]
        side: String,
    },
    /// Decide whether an ordering of the given sidedness can exist inside the ball.
    SatOrder {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "two")]
        side: String,
    },
    /// Check the monomial-ordering axioms for an ordering on normal words.
    Axioms {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "two")]
        side: String,
        /// lex, deglex, degrevlex or ambient; defaults to the induced ordering.
        #[arg(long)]
        scheme: Option<String>,
        #[arg(long)]
        lh: bool,
    },
    /// Whether the leading homogeneous parts are monomials or skew 2-nomials.
    Almost {
        #[command(flatten)]
        input: Input,
    },
    /// Quotient algebra operations.
    Quotient {
        #[command(subcommand)]
        action: QuotientAction,
    },
    /// Product of two normal words in the quotient.
    Qmul {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Truncated one-sided Gröbner basis of an ideal of the quotient.
    OnesidedGb {
        #[command(flatten)]
        input: Input,
        /// One polynomial per line.
        #[arg(long = "gens-file")]
        gens_file: PathBuf,
        #[arg(long, default_value = "left")]
        side: String,
    },
    /// Look for zero divisors among normal words.
    Domain {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        lh: bool,
    },
    /// Verify the lifted Gröbner basis of a larger ideal on random samples.
    LiftCheck {
        #[command(flatten)]
        input: Input,
        #[arg(long = "j-file")]
        j_file: PathBuf,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Split a polynomial into an ideal part and a normal part.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        poly: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum QuotientAction {
    /// Verify hypotheses and describe the quotient.
    Build {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        scheme: Option<String>,
        #[arg(long)]
        lh: bool,
    },
}

/// Exit code and rendered report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A failure carried up to the exit-code mapping.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Parse(String),
    Library(skewgb::Error),
}

impl From<skewgb::Error> for Failure {
    fn from(e: skewgb::Error) -> Self {
        match e {
            skewgb::Error::Parse(p) => Failure::Parse(p.to_string()),
            other => Failure::Library(other),
        }
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let render = |v: &Value| {
        if cli.json {
            format!("{}\n", serde_json::to_string_pretty(v).unwrap())
        } else {
            report::to_text(v)
        }
    };
    match commands::dispatch(&cli) {
        Ok((code, v)) => Outcome { code, stdout: render(&v), stderr: String::new() },
        Err(f) => {
            let (code, kind, msg) = match f {
                Failure::Usage(m) => (EXIT_USAGE, "usage", m),
                Failure::Parse(m) => (EXIT_PARSE, "parse", m),
                Failure::Library(e) => (EXIT_REFUTED, "error", e.to_string()),
            };
            let v = json!({ "error": kind, "message": msg });
            Outcome { code, stdout: render(&v), stderr: format!("skewgb: {msg}\n") }
        }
    }
}
