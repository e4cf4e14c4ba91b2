use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cheeger_core::diagram::{read_csv, svg_scatter, write_csv, SvgOptions};
use cheeger_core::optimizer::trace_upper_boundary_detailed;
use cheeger_core::{
    band, cheeger, classify, diagram_point, maximize_h, sample_batch, BandClass, ConvexPolygon, DiagramPoint,
    Error, FamilyDescriptor, OptimizerOptions, SamplerConfig,
};

#[derive(Parser)]
#[command(
    name = "cheeger-lab",
    version,
    about = "Cheeger constants of convex polygons and the (perimeter, Cheeger constant, area) Blaschke-Santalo diagram"
)]
struct Cli {
    /// Worker threads for batch work; defaults to all cores.
    #[arg(long, global = true, env = "CHEEGER_LAB_THREADS", value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cheeger constant and Cheeger set of a convex polygon, found by sweeping inner parallel sets.
    Cheeger(CheegerArgs),
    /// Diagram coordinates of shape-family members: stadiums, cup bodies, regular,
    /// stretched, circumscribed and side-merged polygons, Minkowski paths.
    Family(FamilyArgs),
    /// Diagram points of random convex N-gons drawn with Valtr's algorithm.
    Sample(SampleArgs),
    /// Render the admissible band of the Blaschke-Santalo diagram with a scatter of points.
    Diagram(DiagramArgs),
    /// Check diagram points against the band inequalities for simply connected, convex or N-gon sets.
    Verify(VerifyArgs),
    /// Maximize the Cheeger constant of N-gons at fixed area and perimeter, tracing the
    /// upper boundary of the polygonal diagram.
    Optimize(OptimizeArgs),
}

#[derive(Args)]
struct CheegerArgs {
    /// Polygon JSON: {"vertices": [[x, y], ...]}.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct FamilyArgs {
    /// Descriptors such as `stadium:t=0.5`, `regular:N=6` or `stretch:N=6,delta=3`.
    #[arg(required = true)]
    descriptors: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
    sides: u32,
    #[arg(long)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// CSV destination; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct DiagramArgs {
    /// Point CSV files to plot.
    #[arg(long = "in")]
    inputs: Vec<PathBuf>,
    /// Family descriptors to evaluate and plot.
    #[arg(long, num_args = 1..)]
    families: Vec<String>,
    /// `simply-connected`, `convex` or `ngon:N`.
    #[arg(long, default_value = "convex")]
    band: String,
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Plot (2√π/x, 2√π/y) instead of (x, y).
    #[arg(long)]
    unit_square_axes: bool,
    /// CSV of all plotted points; stdout when neither this nor --svg is given.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Point CSV with columns source,x,y,cheeger_regular.
    #[arg(long = "in")]
    input: PathBuf,
    /// `simply-connected`, `convex` or `ngon:N`.
    #[arg(long)]
    band: String,
    /// Absolute tolerance; use about 1e-4 for discretized smooth shapes.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Args)]
struct OptimizeArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
    sides: u32,
    /// Target perimeter at unit area.
    #[arg(long, conflicts_with = "grid", required_unless_present = "grid")]
    perimeter: Option<f64>,
    /// Perimeter grid `a:b:step`, endpoints included.
    #[arg(long)]
    grid: Option<String>,
    #[arg(long, default_value_t = 8)]
    starts: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// A failure with its exit status.
enum Failure {
    Usage(String),
    Io(String),
    Input(String),
    Violation(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Self::Violation(_) => 1,
            Self::Usage(_) => 2,
            Self::Io(_) => 3,
            Self::Input(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Self::Usage(m) | Self::Io(m) | Self::Input(m) | Self::Violation(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match &e {
            Error::Io(_) => Self::Io(e.to_string()),
            Error::Csv(c) if c.is_io_error() => Self::Io(e.to_string()),
            _ => Self::Input(e.to_string()),
        }
    }
}

type Outcome<T = ()> = Result<T, Failure>;

fn io_err(path: &Path, e: io::Error) -> Failure {
    Failure::Io(format!("{}: {e}", path.display()))
}

fn read_file(path: &Path) -> Outcome<Vec<u8>> {
    fs::read(path).map_err(|e| io_err(path, e))
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Outcome {
    match out {
        Some(path) => fs::write(path, bytes).map_err(|e| io_err(path, e)),
        None => io::stdout().write_all(bytes).map_err(|e| Failure::Io(e.to_string())),
    }
}

fn to_json(v: &impl serde::Serialize) -> Vec<u8> {
    let mut s = serde_json::to_vec_pretty(v).expect("serializable");
    s.push(b'\n');
    s
}

fn to_csv(points: &[DiagramPoint]) -> Outcome<Vec<u8>> {
    let mut buf = Vec::new();
    write_csv(points, &mut buf)?;
    Ok(buf)
}

fn parse_band(s: &str) -> Outcome<BandClass> {
    let class: BandClass = s.parse().map_err(|e: Error| Failure::Usage(format!("--band: {e}")))?;
    if let BandClass::NGon(n) = class {
        if n < 3 {
            return Err(Failure::Usage(format!("--band: a polygon needs at least 3 sides, got {n}")));
        }
    }
    Ok(class)
}

fn parse_families(descs: &[String]) -> Outcome<Vec<FamilyDescriptor>> {
    descs.iter().map(|d| d.parse().map_err(|e: Error| Failure::Usage(e.to_string()))).collect()
}

/// Expands `a:b:step` into `a, a+step, ...` up to and including `b`.
fn parse_grid(s: &str) -> Outcome<Vec<f64>> {
    let bad = |why: &str| Failure::Usage(format!("--grid `{s}`: {why}"));
    let parts: Vec<f64> = s
        .split(':')
        .map(|v| v.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| bad("expected a:b:step"))?;
    let [a, b, step] = parts[..] else {
        return Err(bad("expected a:b:step"));
    };
    if !(a.is_finite() && b.is_finite() && step.is_finite()) || step <= 0.0 || b < a {
        return Err(bad("need finite a <= b and step > 0"));
    }
    let n = ((b - a) / step + 1e-9).floor() as usize + 1;
    if n > 100_000 {
        return Err(bad("more than 100000 grid points"));
    }
    Ok((0..n).map(|k| a + k as f64 * step).collect())
}

fn run_cheeger(args: &CheegerArgs) -> Outcome {
    let bytes = read_file(&args.input)?;
    let poly: ConvexPolygon = serde_json::from_slice(&bytes)
        .map_err(|e| Failure::Input(format!("{}: {e}", args.input.display())))?;
    emit(args.out.as_deref(), &to_json(&cheeger(&poly).to_json()))
}

fn run_family(args: &FamilyArgs) -> Outcome {
    let descs = parse_families(&args.descriptors)?;
    let samples = descs.iter().map(|d| d.evaluate()).collect::<Result<Vec<_>, _>>()?;
    let bytes = match args.format {
        Format::Csv => to_csv(&samples.iter().map(|s| s.point.clone()).collect::<Vec<_>>())?,
        Format::Json => {
            let rows: Vec<Value> = samples
                .iter()
                .map(|s| {
                    let mut row = serde_json::to_value(&s.point).expect("serializable");
                    if let Some(p) = &s.polygon {
                        row["vertices"] = json!(p.vertices().iter().map(|v| [v.x, v.y]).collect::<Vec<_>>());
                    }
                    row
                })
                .collect();
            to_json(&rows)
        }
    };
    emit(args.out.as_deref(), &bytes)
}

fn run_sample(args: &SampleArgs) -> Outcome {
    let cfg = SamplerConfig { n_sides: args.sides as usize, seed: args.seed, count: args.count };
    let source = format!("random:N={}", args.sides);
    let points: Vec<DiagramPoint> = {
        use rayon::prelude::*;
        sample_batch(&cfg)
            .par_iter()
            .map(|p| DiagramPoint { source: source.clone(), ..diagram_point(p) })
            .collect()
    };
    emit(args.out.as_deref(), &to_csv(&points)?)
}

fn load_points(path: &Path) -> Outcome<Vec<DiagramPoint>> {
    let bytes = read_file(path)?;
    read_csv(bytes.as_slice()).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run_diagram(args: &DiagramArgs) -> Outcome {
    let spec = band(parse_band(&args.band)?);
    let descs = parse_families(&args.families)?;
    let mut points = Vec::new();
    for path in &args.inputs {
        points.extend(load_points(path)?);
    }
    for d in &descs {
        points.push(d.evaluate()?.point);
    }
    if let Some(svg) = &args.svg {
        let opts = SvgOptions { unit_square_axes: args.unit_square_axes };
        emit(Some(svg), svg_scatter(&points, &spec, opts).as_bytes())?;
    }
    if args.out.is_some() || args.svg.is_none() {
        emit(args.out.as_deref(), &to_csv(&points)?)?;
    }
    Ok(())
}

fn run_verify(args: &VerifyArgs) -> Outcome {
    let class = parse_band(&args.band)?;
    if !(args.tol.is_finite() && args.tol >= 0.0) {
        return Err(Failure::Usage(format!("--tol must be a nonnegative number, got {}", args.tol)));
    }
    let spec = band(class);
    let points = load_points(&args.input)?;
    let mut violations = Vec::new();
    for (i, pt) in points.iter().enumerate() {
        if let cheeger_core::Classification::Outside(d) = classify(pt, &spec, args.tol) {
            // Row numbers count the header as row 1.
            violations.push(format!(
                "row {} ({}, x = {}, y = {}) is outside the {} band by {d}",
                i + 2,
                pt.source,
                pt.x,
                pt.y,
                class
            ));
        }
    }
    if violations.is_empty() {
        println!("{} points inside the {class} band", points.len());
        Ok(())
    } else {
        Err(Failure::Violation(format!(
            "{} of {} points violate the band\n{}",
            violations.len(),
            points.len(),
            violations.join("\n")
        )))
    }
}

fn run_optimize(args: &OptimizeArgs) -> Outcome {
    let grid = match (&args.grid, args.perimeter) {
        (Some(g), _) => Some(parse_grid(g)?),
        (None, Some(p)) if p.is_finite() && p > 0.0 => None,
        (None, p) => return Err(Failure::Usage(format!("--perimeter must be positive, got {p:?}"))),
    };
    if args.starts == 0 {
        return Err(Failure::Usage("--starts must be at least 1".into()));
    }
    let n = args.sides as usize;
    let opts = OptimizerOptions { starts: args.starts, seed: args.seed, ..OptimizerOptions::default() };
    let results = match &grid {
        Some(g) => trace_upper_boundary_detailed(n, g, &opts)?,
        None => vec![maximize_h(n, args.perimeter.expect("checked above"), &opts)?],
    };
    let bytes = match args.format {
        Format::Csv => to_csv(&results.iter().map(|r| r.diagram_point()).collect::<Vec<_>>())?,
        Format::Json if grid.is_none() => to_json(&results[0]),
        Format::Json => to_json(&results),
    };
    emit(args.out.as_deref(), &bytes)
}

fn run(cli: &Cli) -> Outcome {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global()
            .map_err(|e| Failure::Usage(format!("--threads: {e}")))?;
    }
    match &cli.command {
        Command::Cheeger(a) => run_cheeger(a),
        Command::Family(a) => run_family(a),
        Command::Sample(a) => run_sample(a),
        Command::Diagram(a) => run_diagram(a),
        Command::Verify(a) => run_verify(a),
        Command::Optimize(a) => run_optimize(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("cheeger-lab: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
