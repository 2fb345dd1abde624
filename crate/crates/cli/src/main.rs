use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Exit status for a run where some check failed.
const EXIT_FAIL: u8 = 1;
/// Exit status for bad arguments or a request that cannot be computed.
const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "halfturn-ice", version, about = "Exact enumeration and square-ice partition functions for half-turn symmetric ASMs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for random evaluation points.
    #[arg(long, default_value_t = 42, global = true)]
    seed: u64,

    /// Bound on the number of states a computation may touch
    /// (default: $HALFTURN_ICE_MAX_STATES, else 10^7).
    #[arg(long, global = true, value_parser = positive_u128)]
    max_states: Option<u128>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    All,
    Ht,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Dwbc,
    HtEven,
    HtOdd,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Asm,
    HtEven,
    HtOdd,
    HtOddPlus,
    HtOddMinus,
    Robbins,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Size {
    /// Matrix order.
    #[arg(short = 'n', long)]
    order: Option<usize>,

    /// Half-size m (order 2m or 2m+1 for the half-turn models).
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count or list ASMs, or print the refined census.
    Enumerate {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = ClassArg::All)]
        class: ClassArg,
        /// Refined table by first-column position and −1 count, split by central entry.
        #[arg(long)]
        census: bool,
        /// Emit every matrix.
        #[arg(long, conflicts_with = "census")]
        list: bool,
    },
    /// Inversion generating functions over permutation matrices.
    Genfunc {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = ClassArg::All)]
        class: ClassArg,
        /// Also enumerate and compare with the product form.
        #[arg(long)]
        brute: bool,
    },
    /// Partition function, symbolic or at an assignment.
    Partition {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = ModelArg::Dwbc)]
        model: ModelArg,
        /// Keep the result symbolic (assignments are then substituted partially).
        #[arg(long)]
        symbolic: bool,
        /// Use the polynomial (modified) normalisation.
        #[arg(long)]
        modified: bool,
        /// `var=value`, value rational or a zeta expression such as `2*zeta-1`.
        #[arg(long = "assign", value_name = "VAR=VALUE")]
        assign: Vec<String>,
    },
    /// Determinant forms at a = zeta, compared with the state sums.
    Det {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = ModelArg::Dwbc)]
        model: ModelArg,
        /// Coordinates `u1=…, u2=…`; without them random points are drawn.
        #[arg(long = "assign", value_name = "VAR=VALUE")]
        assign: Vec<String>,
        /// Number of random points.
        #[arg(long, default_value_t = 1)]
        points: usize,
    },
    /// Closed-form enumerations.
    Formulas {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value_t = FamilyArg::Asm)]
        family: FamilyArg,
        /// Refined enumeration by first-column position instead of the total.
        #[arg(long)]
        refined: bool,
    },
    /// Run verification suites; one JSON report line per suite.
    Verify {
        #[arg(long, required_unless_present_any = ["all", "list"], conflicts_with = "all")]
        suite: Option<String>,
        #[arg(long)]
        all: bool,
        /// List suite ids and exit.
        #[arg(long, conflicts_with_all = ["suite", "all"])]
        list: bool,
        /// Override the largest order / domain-wall size.
        #[arg(short = 'n', long)]
        order: Option<usize>,
        /// Override the largest half-size.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        points: Option<usize>,
        /// Include elapsed time (output is then no longer reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Merge JSON-lines reports (files, or stdin when none are given).
    Report {
        inputs: Vec<PathBuf>,
    },
}

fn positive_u128(s: &str) -> Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn read_inputs(inputs: &[PathBuf]) -> io::Result<Vec<String>> {
    let mut lines = Vec::new();
    if inputs.is_empty() {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        lines.extend(s.lines().map(str::to_string));
    }
    for p in inputs {
        lines.extend(fs::read_to_string(p)?.lines().map(str::to_string));
    }
    Ok(lines)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let common = cli.common.clone();
    let result = match cli.command {
        Command::Enumerate { size, class, census, list } => commands::enumerate(&common, &size, class, census, list),
        Command::Genfunc { size, class, brute } => commands::genfunc(&common, &size, class, brute),
        Command::Partition { size, model, symbolic, modified, assign } => {
            commands::partition(&common, &size, model, symbolic, modified, &assign)
        }
        Command::Det { size, model, assign, points } => commands::det(&common, &size, model, &assign, points),
        Command::Formulas { size, family, refined } => commands::formulas(&common, &size, family, refined),
        Command::Verify { suite, all, list, order, m, points, timings } => {
            commands::verify(&common, suite.as_deref(), all, list, order, m, points, timings)
        }
        Command::Report { inputs } => match read_inputs(&inputs) {
            Ok(lines) => commands::report(&common, &lines),
            Err(e) => Err(commands::CliError::Usage(e.to_string())),
        },
    };
    let out = match result {
        Ok(out) => out,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let written = match &common.out {
        Some(path) => fs::write(path, &out.text),
        None => io::stdout().lock().write_all(out.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    if out.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}
