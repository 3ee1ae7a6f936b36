//! `subreg`: classification reports, tables, blowup plans, singularity reports
//! and verification suites for subregular unstable bundles.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::process::ExitCode;
use subreg::report::{self, Format, Report};
use subreg::rootdata::Series;
use subreg::verify::Suite;
use subreg::Error;

#[derive(Parser)]
#[command(
    name = "subreg",
    version,
    about = "Exact combinatorics of subregular unstable bundles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text, global = true)]
    format: FormatArg,

    /// Write ASCII only (ϖ as "w", α as "a").
    #[arg(long, global = true)]
    ascii: bool,
}

#[derive(Subcommand)]
enum Command {
    /// List the subregular classes of a simple group.
    Classify(TypeArgs),
    /// Regenerate a table from first principles.
    Tables {
        /// Which table to print.
        #[arg(long, value_enum)]
        which: Which,
        /// Largest rank in the classical families.
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Run verification suites; exits 1 if any check fails.
    Verify {
        /// Suite to run.
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Largest rank swept by the family-wide suites.
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
    /// Blowup plans: divisor decomposition and θ, θ′ sections per class.
    Plan(TypeArgs),
    /// Singular fibre and its singularities per class.
    Singularity(TypeArgs),
}

#[derive(Args)]
struct TypeArgs {
    /// Series letter A to G.
    #[arg(long, value_parser = parse_series)]
    series: Series,
    /// Rank of the group.
    #[arg(long)]
    rank: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Weights,
    Degrees,
    #[value(name = "levi_roots")]
    LeviRoots,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Cosets,
    Degrees,
    Weights,
    Folding,
    Sigma,
    Bounds,
    All,
}

fn parse_series(s: &str) -> Result<Series, String> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => {
            Series::from_letter(c.to_ascii_uppercase()).ok_or_else(|| format!("unknown series {s}"))
        }
        _ => Err(format!("series must be a single letter, got {s}")),
    }
}

fn suites(arg: SuiteArg) -> Vec<Suite> {
    match arg {
        SuiteArg::Cosets => vec![Suite::Cosets],
        SuiteArg::Degrees => vec![Suite::Degrees],
        SuiteArg::Weights => vec![Suite::Weights],
        SuiteArg::Folding => vec![Suite::Folding],
        SuiteArg::Sigma => vec![Suite::Sigma],
        SuiteArg::Bounds => vec![Suite::Bounds],
        SuiteArg::All => Suite::ALL.to_vec(),
    }
}

fn build(cli: &Cli) -> subreg::Result<Report> {
    let ascii = cli.ascii;
    match &cli.command {
        Command::Classify(t) => report::classification(t.series, t.rank),
        Command::Tables { which, max_rank } => match which {
            Which::Weights => report::weights_table(*max_rank, ascii),
            Which::Degrees => report::degrees_table(*max_rank),
            Which::LeviRoots => report::roots_table(*max_rank, ascii),
        },
        Command::Verify { suite, max_rank } => report::verification(&suites(*suite), *max_rank),
        Command::Plan(t) => report::blowup_plan(t.series, t.rank, ascii),
        Command::Singularity(t) => report::singularity(t.series, t.rank, ascii),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let rep = match build(&cli) {
        Ok(rep) => rep,
        Err(e) => {
            eprintln!("error: {e}");
            return match e {
                Error::InvalidType { .. }
                | Error::IndexOutOfRange { .. }
                | Error::SearchBudget { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            };
        }
    };
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
        FormatArg::Tsv => Format::Tsv,
    };
    let out = rep.render(format, cli.ascii);
    if std::io::stdout().lock().write_all(out.as_bytes()).is_err() {
        return ExitCode::from(1);
    }
    match report::verification_passed(&rep) {
        Ok(false) => {
            if let Some(note) = rep
                .notes
                .first()
                .filter(|n| n.starts_with("first counterexample"))
            {
                eprintln!("{note}");
            }
            ExitCode::from(1)
        }
        _ => ExitCode::SUCCESS,
    }
}
