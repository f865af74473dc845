use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rmarith::cache::ClassNumberCache;
use rmarith::commands::{self, CfInput, ClassGroupInput, Context, ShaInput};
use rmarith::report::{render, Format, Report};
use rmarith::{exit, CliError, CliResult};
use rmarith_core::cmrm::DEFAULT_SEARCH_LIMIT;

/// Class groups, conductors, continued fractions, Sha and quantum heights.
#[derive(Debug, Parser)]
#[command(name = "rmarith", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Print JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Print CSV.
    #[arg(long, global = true)]
    csv: bool,
    /// Class-number cache file (default: $RMARITH_CACHE, then the user cache directory).
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,
    /// Do not read or write the class-number cache.
    #[arg(long, global = true, conflicts_with = "cache")]
    no_cache: bool,
    /// Worker threads for searches and counts (default: available parallelism).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Class group of a quadratic order.
    Classgroup {
        /// Discriminant.
        #[arg(short = 'D', allow_hyphen_values = true, conflicts_with_all = ["dk", "f"], required_unless_present = "dk")]
        discriminant: Option<String>,
        /// Fundamental discriminant (with -f).
        #[arg(long, allow_hyphen_values = true, requires = "f")]
        dk: Option<String>,
        /// Conductor (with --dk).
        #[arg(short = 'f', requires = "dk")]
        f: Option<String>,
    },
    /// Least real conductor matching the class number of Z + f O_{Q(√-d)}.
    RmConductor {
        #[arg(short = 'd')]
        d: String,
        #[arg(short = 'f', default_value_t = 1)]
        f: u64,
        #[arg(long, default_value_t = DEFAULT_SEARCH_LIMIT)]
        limit: u64,
    },
    /// Continued fraction expansion.
    Cf {
        /// √N.
        #[arg(long, value_name = "N", group = "x")]
        sqrt: Option<String>,
        /// (P + √D)/Q.
        #[arg(long, value_name = "P,Q,D", allow_hyphen_values = true, group = "x")]
        quadratic: Option<String>,
        /// p/q.
        #[arg(long, value_name = "p/q", allow_hyphen_values = true, group = "x")]
        rational: Option<String>,
        #[arg(long, default_value_t = 8)]
        convergents: usize,
        /// Number of Bratteli blocks to list (quadratic irrationals only).
        #[arg(long, default_value_t = 0)]
        blocks: usize,
    },
    /// Sha from a 2x2 matrix or its characteristic polynomial.
    Sha {
        /// Row-major entries a,b,c,d.
        #[arg(long, value_name = "a,b,c,d", allow_hyphen_values = true, group = "src")]
        matrix: Option<String>,
        /// Coefficients, highest degree first.
        #[arg(long, value_name = "1,b,c", allow_hyphen_values = true, group = "src")]
        charpoly: Option<String>,
        /// Also count GL(2,Z) similarity classes by brute force with this entry bound.
        #[arg(long, value_name = "B")]
        similarity_bound: Option<u64>,
    },
    /// Quantum height of (1 : ?(θ_1) : … : ?(θ_n)).
    Height {
        /// p/q, an integer, quad:P,Q,D or sqrt:N. Repeatable.
        #[arg(long, required = true, allow_hyphen_values = true)]
        theta: Vec<String>,
    },
    /// Table of N(T) for T = tmin, 2 tmin, … up to tmax.
    Count {
        #[arg(short = 'n', default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        tmin: u64,
        #[arg(long)]
        tmax: u64,
        /// Count by quantum height instead of the usual height.
        #[arg(long)]
        quantum: bool,
    },
}

fn emit<R: Report>(r: R, format: Format) -> CliResult<()> {
    print!("{}", render(&r, format));
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    let g = &cli.global;
    let format = if g.json {
        Format::Json
    } else if g.csv {
        Format::Csv
    } else {
        Format::Table
    };
    let threads = g
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    if threads == 0 {
        return Err(CliError::flag("--threads", "must be at least 1"));
    }
    let cache = match ClassNumberCache::default_path(g.cache.as_deref()) {
        Some(path) if !g.no_cache => ClassNumberCache::open(path),
        _ => ClassNumberCache::in_memory(),
    };
    let mut ctx = Context::new(cache, threads);

    let out = match &cli.command {
        Command::Classgroup { discriminant, dk, f } => {
            let input = match (discriminant, dk, f) {
                (Some(d), _, _) => ClassGroupInput::Discriminant(commands::parse_int("-D", d)?),
                (None, Some(dk), Some(f)) => ClassGroupInput::Order {
                    dk: commands::parse_int("--dk", dk)?,
                    f: commands::parse_int("-f", f)?,
                },
                _ => return Err(CliError::flag("-D", "give -D or both --dk and -f")),
            };
            emit(commands::classgroup(&mut ctx, &input)?, format)
        }
        Command::RmConductor { d, f, limit } => {
            let d = commands::parse_int("-d", d)?;
            emit(commands::rm_conductor(&mut ctx, &d, *f, *limit)?, format)
        }
        Command::Cf {
            sqrt,
            quadratic,
            rational,
            convergents,
            blocks,
        } => {
            let input = match (sqrt, quadratic, rational) {
                (Some(n), _, _) => CfInput::Sqrt(commands::parse_int("--sqrt", n)?),
                (_, Some(q), _) => CfInput::Quadratic(commands::parse_quadratic("--quadratic", q)?),
                (_, _, Some(r)) => CfInput::Rational(commands::parse_rational("--rational", r)?),
                _ => return Err(CliError::flag("--sqrt", "give one of --sqrt, --quadratic, --rational")),
            };
            emit(commands::cf(&input, *convergents, *blocks)?, format)
        }
        Command::Sha {
            matrix,
            charpoly,
            similarity_bound,
        } => {
            let input = match (matrix, charpoly) {
                (Some(m), _) => ShaInput::Matrix(commands::parse_int_list("--matrix", m)?),
                (_, Some(p)) => ShaInput::CharPoly(commands::parse_int_list("--charpoly", p)?),
                _ => return Err(CliError::flag("--matrix", "give --matrix or --charpoly")),
            };
            emit(commands::sha(&input, *similarity_bound)?, format)
        }
        Command::Height { theta } => {
            let theta = theta
                .iter()
                .map(|t| commands::parse_theta("--theta", t))
                .collect::<CliResult<Vec<_>>>()?;
            emit(commands::height(&theta)?, format)
        }
        Command::Count { n, tmin, tmax, quantum } => {
            emit(commands::count(*n, *tmin, *tmax, *quantum, ctx.threads)?, format)
        }
    };
    if let Err(e) = ctx.cache.flush() {
        eprintln!("warning: could not write cache: {e}");
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::from(exit::OK as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
