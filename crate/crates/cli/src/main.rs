use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crtc_cli::{
    cmd_deform, cmd_dessin, cmd_enumerate, cmd_render, parse_spec, CliError, CurveSpec,
    EnumerateMode, RenderStyle, RunOptions,
};

#[derive(Parser)]
#[command(
    name = "crtc",
    version,
    about = "Dessins d'enfants of completely reducible trigonal curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Samples per unit parameter when tracing strands.
    #[arg(long, default_value_t = 100)]
    resolution: usize,
    /// Output path; JSON goes to stdout without it.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write an SVG next to the output, with an `.svg` suffix.
    #[arg(long)]
    svg: bool,
    /// Leave out white vertices of degree 2 in drawings.
    #[arg(long)]
    suppress_bivalent: bool,
    /// Distance from [0, 1] at which a critical value flags the discriminant locus.
    #[arg(long, default_value_t = crtc_cli::commands::DEFAULT_LOCUS_TOLERANCE)]
    tolerance: f64,
    /// Perturbs the starting points of the root finder.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the dessin of a curve.
    Dessin {
        /// Input file; stdin when absent or `-`.
        input: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Tabulate combinatorial counts.
    Enumerate {
        #[arg(value_enum)]
        mode: Mode,
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Sweep a family and sample its discriminant locus.
    Deform {
        input: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Draw the dessin of a curve as SVG.
    Render {
        input: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Bound,
    Pretypes,
    SimpleCount,
}

fn read_spec(input: &Option<PathBuf>) -> Result<CurveSpec, CliError> {
    let text = match input {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)?,
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    parse_spec(&text)
}

fn options(c: &Common) -> RunOptions {
    RunOptions {
        resolution: c.resolution,
        seed: c.seed,
        tolerance: c.tolerance,
        style: RenderStyle {
            suppress_bivalent: c.suppress_bivalent,
            ..RenderStyle::default()
        },
    }
}

fn emit(c: &Common, text: &str) -> Result<(), CliError> {
    match &c.out {
        Some(p) => std::fs::write(p, text)?,
        None => println!("{text}"),
    }
    Ok(())
}

fn emit_svg(c: &Common, svg: Option<String>) -> Result<(), CliError> {
    let Some(svg) = svg else { return Ok(()) };
    let out = c
        .out
        .as_deref()
        .ok_or_else(|| CliError::Usage("--svg needs --out".into()))?;
    std::fs::write(svg_path(out), svg)?;
    Ok(())
}

fn svg_path(out: &Path) -> PathBuf {
    out.with_extension("svg")
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Dessin { input, common } => {
            if common.svg && common.out.is_none() {
                return Err(CliError::Usage("--svg needs --out".into()));
            }
            let spec = read_spec(&input)?;
            let (report, svg) = cmd_dessin(&spec, &options(&common), common.svg)?;
            emit(&common, &serde_json::to_string_pretty(&report)?)?;
            emit_svg(&common, svg)
        }
        Command::Enumerate { mode, n, common } => {
            let mode = match mode {
                Mode::Bound => EnumerateMode::Bound,
                Mode::Pretypes => EnumerateMode::Pretypes,
                Mode::SimpleCount => EnumerateMode::SimpleCount,
            };
            let table = cmd_enumerate(n, mode)?;
            emit(&common, &serde_json::to_string_pretty(&table)?)
        }
        Command::Deform { input, common } => {
            if common.svg && common.out.is_none() {
                return Err(CliError::Usage("--svg needs --out".into()));
            }
            let spec = read_spec(&input)?;
            let (report, svg) = cmd_deform(&spec, &options(&common))?;
            emit(&common, &serde_json::to_string_pretty(&report)?)?;
            emit_svg(&common, common.svg.then_some(svg))
        }
        Command::Render { input, common } => {
            let spec = read_spec(&input)?;
            let svg = cmd_render(&spec, &options(&common))?;
            emit(&common, &svg)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let body = serde_json::json!({"error": {"code": e.code(), "message": e.to_string()}});
            eprintln!("{body}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
