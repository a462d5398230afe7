//! `conifold`: tables and verification runs for one-point amplitudes,
//! Ooguri–Vafa invariants and mirror curves of the resolved conifold.

mod commands;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use table::Format;

const EXIT_OTHER: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "conifold", version, about = "Exact open-string amplitudes of the resolved conifold")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Render rationals as decimals, prefixed with `~` (lossy).
    #[arg(long, global = true)]
    numeric: bool,

    /// Character-table cache directory.
    #[arg(long, global = true, env = "CONIFOLD_CACHE_DIR", default_value = ".conifold-cache")]
    cache_dir: PathBuf,
}

#[derive(Args, Debug, Clone, Copy)]
struct Framing {
    #[arg(long, short = 'a', default_value_t = 0, allow_negative_numbers = true)]
    framing: i64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    PartitionSum,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Sign {
    /// `(-1)^(k/n)`, as in the Möbius solution.
    Literal,
    /// `(-1)^((ma+k)/n)`, integral at every framing.
    Framed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Sequence {
    Catalan,
    Dmm,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// One-point amplitudes F̂_n as polynomials in Q over the bracket field.
    Onepoint {
        #[command(flatten)]
        framing: Framing,
        #[arg(long, default_value_t = 3, value_parser = positive)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        /// Emit the lambda expansion through genus g instead.
        #[arg(long, value_parser = positive)]
        g_max: Option<u32>,
    },
    /// Genus-zero one-point coefficients.
    Genus0 {
        #[command(flatten)]
        framing: Framing,
        #[arg(long, default_value_t = 5, value_parser = positive)]
        n_max: u32,
    },
    /// Disc invariants d.
    DiscD {
        #[command(flatten)]
        framing: Framing,
        #[arg(long, default_value_t = 10, value_parser = positive)]
        m_max: u32,
        #[arg(long, default_value_t = 6, value_parser = positive)]
        k_max: u32,
        #[arg(long, value_enum, default_value_t = Sign::Literal)]
        sign: Sign,
    },
    /// Half-integral invariants e.
    DiscE {
        #[command(flatten)]
        framing: Framing,
        #[arg(long, default_value_t = 16, value_parser = positive)]
        m_max: u32,
        #[arg(long, default_value_t = 6, value_parser = positive)]
        k_max: u32,
    },
    /// Ooguri–Vafa polynomials N_{m,k}(u).
    OvN {
        #[command(flatten)]
        framing: Framing,
        #[arg(long, default_value_t = 3, value_parser = positive)]
        m_max: u32,
        /// Multiply by (-1)^(am), the normalization of the printed tables.
        #[arg(long)]
        printed_sign: bool,
    },
    /// Integer sequences from the disc invariants.
    Sequences {
        #[arg(long, value_enum)]
        which: Sequence,
        #[arg(long, default_value_t = 10, value_parser = positive)]
        count: u32,
    },
    /// Mirror-curve residuals and identities.
    MirrorCheck {
        #[command(flatten)]
        framing: Framing,
        #[arg(long, default_value_t = 10, value_parser = positive)]
        order: u32,
    },
    /// Correlator lemma: reduction against the closed form.
    Correlator {
        #[arg(long, default_value_t = 5, value_parser = positive)]
        n_max: u32,
        /// Largest argument multiplier.
        #[arg(long, default_value_t = 3, value_parser = positive)]
        c_max: u32,
    },
    /// Closed form, partition sum and Fock oracle side by side.
    OracleCompare {
        #[command(flatten)]
        framing: Framing,
        #[arg(long, default_value_t = 4, value_parser = positive)]
        n_max: u32,
    },
    /// log Z of the closed string, in powers of Q.
    ClosedString {
        #[arg(long, default_value_t = 4, value_parser = positive)]
        q_degree: u32,
    },
}

fn positive(s: &str) -> Result<u32, String> {
    match s.parse::<u32>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

pub enum Failure {
    Usage(String),
    Other(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    conifold_core::set_cache_dir(Some(cli.cache_dir.clone()));
    let opts = commands::Options { numeric: cli.numeric };
    let (name, result) = commands::run(&cli.command, opts);
    match result {
        Ok(out) => {
            print!("{}", out.table.render(cli.format, name, out.parameters));
            if out.failures.is_empty() {
                return ExitCode::SUCCESS;
            }
            let report = serde_json::json!({
                "command": name,
                "status": "verification_failed",
                "failures": out.failures,
            });
            eprintln!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            ExitCode::from(EXIT_VERIFY)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_OTHER)
        }
    }
}
