use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use weno_core::harness::{
    convergence_study, default_sizes, figure_data, format_float, optical_depth_simpson, reports_to_json, FigureCurve,
    GridKind, GridSpec, Norm, FIGURE_DENSITY,
};
use weno_core::{Method, SampleSet, TestFunction};

#[derive(Debug, Parser)]
#[command(name = "weno", version, about = "ENO/WENO interpolation benchmarks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write dense interpolation curve data for one method and function.
    Eval(EvalArgs),
    /// Run order-of-accuracy studies and write convergence reports.
    Convergence(ConvergenceArgs),
    /// Write curve data for several methods and grid sizes into a directory.
    Figures(FiguresArgs),
    /// Integrate an absorption profile to optical depth with Simpson's rule.
    Tau(TauArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GridArg {
    Uniform,
    Random,
}

impl From<GridArg> for GridKind {
    fn from(g: GridArg) -> Self {
        match g {
            GridArg::Uniform => GridKind::Uniform,
            GridArg::Random => GridKind::Random,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// Interpolation method: eno3, weno3, weno4, weno4alt, cubic, spline, hermite.
    #[arg(long, value_parser = parse_method)]
    pub method: Method,
    /// Test function: exponential, heaviside, gaussian_well, disc_sine.
    #[arg(long, value_parser = parse_function)]
    pub function: TestFunction,
    /// Grid type.
    #[arg(long, value_enum, default_value = "uniform")]
    pub grid: GridArg,
    /// Number of grid points.
    #[arg(long)]
    pub points: usize,
    /// Seed for random grids.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Evaluation points per interval.
    #[arg(long, default_value_t = FIGURE_DENSITY)]
    pub density: usize,
    /// Output CSV path; stdout when omitted.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConvergenceArgs {
    /// Comma-separated method ids, or `all` for the six benchmark methods.
    #[arg(long, default_value = "all", value_parser = parse_methods)]
    pub methods: MethodList,
    /// Comma-separated function ids, or `all`.
    #[arg(long, default_value = "all", value_parser = parse_functions)]
    pub functions: FunctionList,
    /// Grid type.
    #[arg(long, value_enum, default_value = "uniform")]
    pub grid: GridArg,
    /// Strictly increasing grid sizes, at least three. Defaults to 17..257 for
    /// smooth functions and 16..256 for discontinuous ones.
    #[arg(long, value_delimiter = ',')]
    pub sizes: Option<Vec<usize>>,
    /// Seed for random grids.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Error norm: L1, L2 or Linf.
    #[arg(long, default_value = "L1", value_parser = parse_norm)]
    pub norm: Norm,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Output path; stdout when omitted.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FiguresArgs {
    /// Comma-separated function ids, or `all`.
    #[arg(long, default_value = "all", value_parser = parse_functions)]
    pub functions: FunctionList,
    /// Comma-separated method ids, or `all` for the six benchmark methods.
    #[arg(long, default_value = "all", value_parser = parse_methods)]
    pub methods: MethodList,
    /// Grid type.
    #[arg(long, value_enum, default_value = "uniform")]
    pub grid: GridArg,
    /// Grid sizes.
    #[arg(long, value_delimiter = ',', default_values_t = [16usize, 36, 76])]
    pub sizes: Vec<usize>,
    /// Seed for random grids.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Directory receiving one `<function>_<method>_<grid>_<n>.csv` per curve.
    #[arg(long)]
    pub out_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct TauArgs {
    /// Input CSV with header `s,chi` and strictly increasing `s`.
    #[arg(long, short)]
    pub input: PathBuf,
    /// Method used to recover cell-midpoint values.
    #[arg(long, default_value = "weno4", value_parser = parse_method)]
    pub method: Method,
    /// Optical depth at the first node.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub tau0: f64,
    /// Output CSV path; stdout when omitted.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone)]
pub struct MethodList(pub Vec<Method>);

#[derive(Debug, Clone)]
pub struct FunctionList(pub Vec<TestFunction>);

fn parse_method(s: &str) -> Result<Method, String> {
    Method::from_str(s).map_err(|e| e.to_string())
}

fn parse_function(s: &str) -> Result<TestFunction, String> {
    TestFunction::from_str(s).map_err(|e| e.to_string())
}

fn parse_norm(s: &str) -> Result<Norm, String> {
    Norm::from_str(s).map_err(|e| e.to_string())
}

fn parse_methods(s: &str) -> Result<MethodList, String> {
    if s == "all" {
        return Ok(MethodList(Method::TABLE.to_vec()));
    }
    s.split(',').map(parse_method).collect::<Result<Vec<_>, _>>().map(MethodList)
}

fn parse_functions(s: &str) -> Result<FunctionList, String> {
    if s == "all" {
        return Ok(FunctionList(TestFunction::ALL.to_vec()));
    }
    s.split(',').map(parse_function).collect::<Result<Vec<_>, _>>().map(FunctionList)
}

fn usage_error(msg: impl std::fmt::Display) -> ! {
    Cli::command().error(ErrorKind::ValueValidation, msg).exit()
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => io::stdout().lock().write_all(text.as_bytes()).context("cannot write to stdout"),
    }
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Eval(args) => run_eval(args),
        Command::Convergence(args) => run_convergence(args),
        Command::Figures(args) => run_figures(args),
        Command::Tau(args) => run_tau(args),
    }
}

fn run_eval(args: EvalArgs) -> Result<()> {
    if args.points < args.method.min_points() {
        usage_error(format!("{} needs at least {} points", args.method, args.method.min_points()));
    }
    if args.density == 0 {
        usage_error("density must be positive");
    }
    let grid = GridSpec::new(args.grid.into(), args.points, args.seed);
    let curve = FigureCurve::build(args.method, args.function, grid, args.density)?;
    write_output(args.output.as_deref(), &curve.to_csv())
}

fn run_convergence(args: ConvergenceArgs) -> Result<()> {
    if let Some(sizes) = &args.sizes {
        if sizes.len() < 3 {
            usage_error("at least three grid sizes are required");
        }
        if sizes.windows(2).any(|w| w[0] >= w[1]) {
            usage_error("grid sizes must be strictly increasing");
        }
        let min_points = args.methods.0.iter().map(|m| m.min_points()).max().unwrap_or(2).max(4);
        if sizes[0] < min_points {
            usage_error(format!("grid sizes must be at least {min_points}"));
        }
    }
    let mut reports = Vec::new();
    for &method in &args.methods.0 {
        for &function in &args.functions.0 {
            let sizes = args.sizes.as_deref().unwrap_or(default_sizes(function));
            reports.push(convergence_study(method, function, args.grid.into(), sizes, args.seed, args.norm)?);
        }
    }
    let text = match args.format {
        Format::Json => {
            let mut s = reports_to_json(&reports);
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("method,function,grid_type,seed,norm,fitted_order\n");
            for r in &reports {
                s.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.method,
                    r.function,
                    r.grid_kind,
                    r.seed,
                    r.norm,
                    format_float(r.fitted_order)
                ));
            }
            s
        }
    };
    write_output(args.output.as_deref(), &text)
}

fn run_figures(args: FiguresArgs) -> Result<()> {
    if args.sizes.is_empty() {
        usage_error("at least one grid size is required");
    }
    let min_points = args.methods.0.iter().map(|m| m.min_points()).max().unwrap_or(2);
    if args.sizes.iter().any(|&n| n < min_points) {
        usage_error(format!("grid sizes must be at least {min_points}"));
    }
    fs::create_dir_all(&args.out_dir).with_context(|| format!("cannot create {}", args.out_dir.display()))?;
    for &function in &args.functions.0 {
        for curve in figure_data(function, &args.methods.0, args.grid.into(), &args.sizes, args.seed)? {
            let path = args.out_dir.join(format!("{}.csv", curve.file_stem()));
            write_output(Some(&path), &curve.to_csv())?;
        }
    }
    Ok(())
}

/// Reads an `s,chi` CSV, reporting malformed rows by line number.
pub fn read_absorption(path: &Path) -> Result<SampleSet> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .with_context(|| format!("cannot read {}", path.display()))?;
    let headers = reader.headers().context("line 1: cannot read header")?.clone();
    if headers.len() != 2 || &headers[0] != "s" || &headers[1] != "chi" {
        bail!("line 1: expected header `s,chi`");
    }
    let mut s = Vec::new();
    let mut chi = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map(|p| p.line()).unwrap_or(0);
            anyhow::anyhow!("line {line}: {e}")
        })?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        let parse = |k: usize, name: &str| -> Result<f64> {
            let v: f64 = record[k].parse().with_context(|| format!("line {line}: invalid {name} `{}`", &record[k]))?;
            if !v.is_finite() {
                bail!("line {line}: {name} is not finite");
            }
            Ok(v)
        };
        let sv = parse(0, "s")?;
        if let Some(&prev) = s.last() {
            if sv <= prev {
                bail!("line {line}: s must be strictly increasing ({sv} after {prev})");
            }
        }
        s.push(sv);
        chi.push(parse(1, "chi")?);
    }
    if s.len() < 2 {
        bail!("need at least two samples, got {}", s.len());
    }
    Ok(SampleSet::from_xy(&s, &chi)?)
}

fn run_tau(args: TauArgs) -> Result<()> {
    let chi = read_absorption(&args.input)?;
    if chi.len() < args.method.min_points() {
        bail!("{} needs at least {} samples", args.method, args.method.min_points());
    }
    let depth = optical_depth_simpson(&chi, args.method, args.tau0)?;
    let mut out = String::from("s,tau\n");
    for (s, t) in depth.s.iter().zip(&depth.tau) {
        out.push_str(&format!("{},{}\n", format_float(*s), format_float(*t)));
    }
    write_output(args.output.as_deref(), &out)
}
