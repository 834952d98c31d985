use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod error;
mod input;

use error::CliError;

/// Chromatic quasisymmetric functions of labeled graphs.
#[derive(Parser, Debug)]
#[command(name = "cqf", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for the engine.
    #[arg(long, global = true, env = "CQF_WORKERS")]
    workers: Option<usize>,

    /// Lift the size bounds (12 vertices for cqf, 9 for classify).
    #[arg(long, global = true)]
    allow_large: bool,
}

#[derive(Args, Debug)]
struct Source {
    /// Inline input. Use `;` for line breaks.
    input: Vec<String>,

    /// Read the input from a file instead.
    #[arg(long, short)]
    file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// M-basis expansion with symmetry and palindromicity verdicts.
    ///
    /// Input is `path: 3 4 1 2`, `star: n=5 center=3`, or `n=4` followed by
    /// one `i j` line per edge.
    Cqf {
        #[command(flatten)]
        source: Source,
        /// Weight by descents instead of ascents.
        #[arg(long)]
        descents: bool,
    },
    /// Every ad-pattern of length n-1 with its verdicts (`n=4` or `4`).
    Classify { n: String },
    /// Ribbon diagram of `pattern=adad`, `composition=2,2,1` or a path.
    Ribbon {
        #[command(flatten)]
        source: Source,
        /// Look for a sub-ribbon anywhere.
        #[arg(long, value_name = "COMPOSITION")]
        contains: Vec<String>,
        /// Look for a sub-ribbon starting at the first cell.
        #[arg(long, value_name = "COMPOSITION")]
        begins: Vec<String>,
        /// Look for a sub-ribbon ending at the last cell.
        #[arg(long, value_name = "COMPOSITION")]
        ends: Vec<String>,
    },
    /// Star verdicts for each n (`5`, `n=5` or `3..8`; default 3..8).
    VerifyStar { n: Vec<String> },
    /// Bipartite verdicts for the given graphs, or for random trees.
    VerifyBipartite {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, value_delimiter = ',', default_value = "4,6,8,10")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        seed: u64,
    },
    /// Example tableaux for the zeta and psi maps.
    #[command(subcommand)]
    Witness(Witness),
}

#[derive(Subcommand, Debug)]
enum Witness {
    /// Stacked rows: zeta between A and B', and a member of B' outside B.
    Zeta {
        /// Ribbon, as for the `ribbon` command.
        ribbon: String,
        /// Lower of the two rows joined by the shared colour (1-based).
        #[arg(long, requires = "b")]
        i: Option<usize>,
        #[arg(long, requires = "i")]
        b: Option<usize>,
        /// Apply zeta (or its inverse) to a tableau, rows bottom-up: `1,2,5 | 1,6,7 | 1,3,4,8`.
        #[arg(long, requires = "i")]
        apply: Option<String>,
    },
    /// Regular ribbons: psi from B to A, and a member of A outside its image.
    Psi {
        ribbon: String,
        /// First cell (1-based, ribbon order) of the (2,1) sub-ribbon to use.
        #[arg(long)]
        subribbon: Option<usize>,
        /// Apply psi to a tableau of B, rows bottom-up.
        #[arg(long)]
        apply: Option<String>,
    },
}

fn run(cli: Cli) -> Result<commands::Report, CliError> {
    if let Some(n) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let opts = commands::Options {
        json: cli.json,
        allow_large: cli.allow_large,
    };
    match cli.command {
        Command::Cqf { source, descents } => {
            let text = input::read_source(&source.input, source.file.as_deref())?;
            commands::cqf(&text, descents, opts)
        }
        Command::Classify { n } => commands::classify(input::parse_n(&n)?, opts),
        Command::Ribbon {
            source,
            contains,
            begins,
            ends,
        } => {
            let text = input::read_source(&source.input, source.file.as_deref())?;
            commands::ribbon(&text, &contains, &begins, &ends, opts)
        }
        Command::VerifyStar { n } => {
            let ns = if n.is_empty() {
                (3..=8).collect()
            } else {
                input::parse_n_list(&n)?
            };
            commands::verify_star(&ns, opts)
        }
        Command::VerifyBipartite {
            source,
            count,
            sizes,
            seed,
        } => {
            let graphs = if source.input.is_empty() && source.file.is_none() {
                commands::Sample::Random { count, sizes, seed }
            } else {
                commands::Sample::Given(input::read_source(&source.input, source.file.as_deref())?)
            };
            commands::verify_bipartite(graphs, opts)
        }
        Command::Witness(Witness::Zeta { ribbon, i, b, apply }) => {
            commands::witness_zeta(&ribbon, i.zip(b), apply.as_deref(), opts)
        }
        Command::Witness(Witness::Psi {
            ribbon,
            subribbon,
            apply,
        }) => commands::witness_psi(&ribbon, subribbon, apply.as_deref(), opts),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(report) => {
            print!("{}", report.output);
            match report.failure {
                None => ExitCode::SUCCESS,
                Some(reason) => {
                    eprintln!("verification failed: {reason}");
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
