//! `confplan`: plan, verify and classify motions of labeled points.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod io;

use io::Failure;

#[derive(Parser, Debug)]
#[command(
    name = "confplan",
    version,
    about = "Motion planning on configuration spaces F(R^n, k)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sorting permutation, partition, level heights and level count.
    Classify { config: PathBuf },
    /// Plan a collision-free path from X to Y.
    Plan(PlanArgs),
    /// Plan through a chain of waypoints.
    PlanMulti(PlanMultiArgs),
    /// Exact collision check of a path; exit 2 if any pair collides.
    Verify(VerifyArgs),
    /// Sphere-product embedding or retraction.
    Retract(RetractArgs),
    /// Cover index and contraction path.
    Cover(CoverArgs),
    /// Topological complexity and related invariants.
    Tc(TcArgs),
    /// Run the built-in fixtures.
    Demo(DemoArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Sequential,
    Simultaneous,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Strategy {
    Distance,
    Rank,
}

#[derive(Args, Debug)]
struct PlanOpts {
    /// How the stack moves between the two planner lines.
    #[arg(long, value_enum, default_value = "sequential")]
    mode: Mode,
    /// Level heights on the first line (default depends on the dimension).
    #[arg(long, value_enum)]
    strategy: Option<Strategy>,
    /// Write the path here and print a summary on stdout instead.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Write an SVG trace of the path.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Coordinate pair drawn in the SVG trace, e.g. `0,2`.
    #[arg(long, value_parser = parse_projection)]
    projection: Option<(usize, usize)>,
}

#[derive(Args, Debug)]
struct PlanArgs {
    x: PathBuf,
    y: PathBuf,
    #[command(flatten)]
    opts: PlanOpts,
}

#[derive(Args, Debug)]
struct PlanMultiArgs {
    /// Two or more waypoint configurations, in order.
    #[arg(required = true, num_args = 2..)]
    waypoints: Vec<PathBuf>,
    #[command(flatten)]
    opts: PlanOpts,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    path: PathBuf,
    /// Zero tolerance (overrides CONFPLAN_EPS).
    #[arg(long)]
    eps: Option<f64>,
    /// Print the witnesses as CSV instead of the JSON report.
    #[arg(long)]
    csv: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RetractMode {
    Plain,
    Punctured,
}

#[derive(Args, Debug)]
struct RetractArgs {
    #[arg(long, value_enum)]
    mode: RetractMode,
    #[arg(long)]
    dim: usize,
    /// A unit tuple `{"vectors": ..}` or a configuration `{"dim": .., "points": ..}`.
    input: PathBuf,
}

#[derive(Args, Debug)]
struct CoverArgs {
    config: PathBuf,
    /// Write the contraction path to this file.
    #[arg(long)]
    emit_path: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct TcArgs {
    #[arg(long)]
    dim: usize,
    #[arg(long)]
    k: usize,
    /// Number of removed points.
    #[arg(long, default_value_t = 0)]
    r: usize,
    /// Orbit configuration space of a fixed-point-free group action.
    #[arg(long)]
    group_free: bool,
    /// Higher topological complexity of this order.
    #[arg(long, conflicts_with = "cat")]
    order: Option<usize>,
    /// LS-category instead.
    #[arg(long)]
    cat: bool,
}

#[derive(Args, Debug)]
struct DemoArgs {
    /// Seed for the random pair.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Write SVG traces of the demo plans into this directory.
    #[arg(long)]
    svg_dir: Option<PathBuf>,
}

fn parse_projection(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected two indices `a,b`, got `{s}`"))?;
    let index = |v: &str| {
        v.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad index `{v}`: {e}"))
    };
    Ok((index(a)?, index(b)?))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify { config } => commands::classify(&config),
        Command::Plan(a) => commands::plan(&a.x, &a.y, &a.opts),
        Command::PlanMulti(a) => commands::plan_multi(&a.waypoints, &a.opts),
        Command::Verify(a) => commands::verify(&a.path, a.eps, a.csv),
        Command::Retract(a) => commands::retract(a.mode, a.dim, &a.input),
        Command::Cover(a) => commands::cover(&a.config, a.emit_path.as_deref()),
        Command::Tc(a) => commands::tc(&a),
        Command::Demo(a) => commands::demo(a.seed, a.svg_dir.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if let Some(msg) = f.message() {
                eprintln!("confplan: {msg}");
            }
            ExitCode::from(f.code())
        }
    }
}
