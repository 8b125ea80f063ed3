//! Command-line front end: `scan`, `analyze` and `validate`.
//!
//! Exit codes: 0 on success, 1 for invalid arguments, configuration or input
//! files, 2 for a solver failure or a failed validation check.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::observables::{ObservableKind, Projection};
use crate::scan::{
    find_peak_and_width, run_scan, PolarizationSpec, ScanConfig, ScanVariable, SpectrumTable,
};
use crate::system::RabiNormalization;
use crate::validation::run_validation;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 1;
pub const EXIT_SOLVER: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "coherence-spectra",
    version,
    about = "Pump-probe spectra of degenerate two-level atoms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sweep δ, B or the saturation parameter and write a CSV spectrum.
    Scan(Box<ScanArgs>),
    /// Report the dominant resonance of a spectrum column.
    Analyze(AnalyzeArgs),
    /// Check the solver against closed forms and time-domain integration.
    Validate(ValidateArgs),
}

#[derive(Debug, Args)]
struct ScanArgs {
    /// JSON config; flags below override its fields.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Ground-level angular momentum (integer or half-integer).
    #[arg(long)]
    fg: Option<f64>,
    /// Excited-level angular momentum.
    #[arg(long)]
    fe: Option<f64>,
    /// Fraction of excited-state decay returning to the ground level.
    #[arg(long)]
    branching: Option<f64>,
    /// Transit relaxation rate.
    #[arg(long)]
    gamma: Option<f64>,
    /// Ground-level gyromagnetic factor.
    #[arg(long)]
    beta_g: Option<f64>,
    /// Excited-level gyromagnetic factor; defaults to beta-g.
    #[arg(long)]
    beta_e: Option<f64>,
    /// reduced_matrix_element or stretched_state.
    #[arg(long, value_parser = parse_normalization)]
    normalization: Option<RabiNormalization>,
    /// Pump Rabi frequency.
    #[arg(long, allow_hyphen_values = true)]
    pump_rabi: Option<f64>,
    /// Preset (lin_x, lin_y, pi, sigma+, sigma-) or `x,y,z` components.
    #[arg(long)]
    pump_pol: Option<PolarizationSpec>,
    /// Pump detuning from the optical resonance.
    #[arg(long, allow_hyphen_values = true)]
    pump_detuning: Option<f64>,
    /// Probe Rabi frequency (the response is linear in it).
    #[arg(long)]
    probe_rabi: Option<f64>,
    /// Probe polarization, same forms as pump-pol.
    #[arg(long)]
    probe_pol: Option<PolarizationSpec>,
    /// Magnetic field when not scanned.
    #[arg(long, allow_hyphen_values = true)]
    bfield: Option<f64>,
    /// Probe detuning when not scanned.
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<f64>,
    /// delta, bfield or saturation.
    #[arg(long)]
    scan: Option<ScanVariable>,
    /// Scan range as `lo,hi`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    range: Option<[f64; 2]>,
    /// Number of grid points, endpoints included.
    #[arg(long)]
    points: Option<usize>,
    /// Geometric point spacing.
    #[arg(long)]
    log: bool,
    /// Comma-separated observable names.
    #[arg(long, value_delimiter = ',')]
    observables: Option<Vec<ObservableKind>>,
    /// conjugate or literal.
    #[arg(long, value_parser = parse_projection)]
    projection: Option<Projection>,
    /// Axis for the dispersion projection.
    #[arg(long)]
    dispersion_axis: Option<PolarizationSpec>,
    /// Output CSV; standard output when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Print the effective config as JSON and exit.
    #[arg(long)]
    print_config: bool,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// CSV written by `scan`.
    input: PathBuf,
    /// Observable column; defaults to the first.
    #[arg(long)]
    column: Option<String>,
    /// Restrict the search to `lo,hi`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    window: Option<[f64; 2]>,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct ValidateArgs {
    /// Reduced set of checks, a few seconds.
    #[arg(long)]
    quick: bool,
}

fn parse_range(s: &str) -> std::result::Result<[f64; 2], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected lo,hi but got '{s}'"));
    }
    let p = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("'{t}': {e}"));
    Ok([p(parts[0])?, p(parts[1])?])
}

fn parse_normalization(s: &str) -> std::result::Result<RabiNormalization, String> {
    match s {
        "reduced_matrix_element" | "reduced" => Ok(RabiNormalization::ReducedMatrixElement),
        "stretched_state" | "stretched" => Ok(RabiNormalization::StretchedState),
        _ => Err(format!("unknown normalization '{s}'")),
    }
}

fn parse_projection(s: &str) -> std::result::Result<Projection, String> {
    match s {
        "conjugate" => Ok(Projection::Conjugate),
        "literal" => Ok(Projection::Literal),
        _ => Err(format!("unknown projection '{s}'")),
    }
}

impl ScanArgs {
    fn config(&self) -> Result<ScanConfig> {
        let mut c = match &self.config {
            Some(p) => ScanConfig::from_file(p)?,
            None => ScanConfig::default(),
        };
        let t = &mut c.transition;
        set(&mut t.fg, self.fg);
        set(&mut t.fe, self.fe);
        set(&mut t.branching, self.branching);
        set(&mut t.gamma, self.gamma);
        set(&mut t.beta_g, self.beta_g);
        if self.beta_e.is_some() {
            t.beta_e = self.beta_e;
        }
        set(&mut t.rabi_normalization, self.normalization);
        set(&mut c.pump.rabi, self.pump_rabi);
        set(&mut c.pump.polarization, self.pump_pol.clone());
        set(&mut c.pump.detuning, self.pump_detuning);
        set(&mut c.probe.rabi, self.probe_rabi);
        set(&mut c.probe.polarization, self.probe_pol.clone());
        set(&mut c.bfield, self.bfield);
        set(&mut c.delta, self.delta);
        set(&mut c.scan, self.scan);
        set(&mut c.range, self.range);
        set(&mut c.points, self.points);
        if self.log {
            c.log_spacing = true;
        }
        set(&mut c.observables, self.observables.clone());
        set(&mut c.projection, self.projection);
        if self.dispersion_axis.is_some() {
            c.dispersion_axis = self.dispersion_axis.clone();
        }
        if let Some(o) = &self.output {
            c.output = Some(o.display().to_string());
        }
        c.validate()?;
        Ok(c)
    }
}

fn set<T>(slot: &mut T, value: Option<T>) {
    if let Some(v) = value {
        *slot = v;
    }
}

fn scan(args: &ScanArgs) -> Result<()> {
    let cfg = args.config()?;
    if args.print_config {
        println!("{}", serde_json::to_string_pretty(&cfg)?);
        return Ok(());
    }
    let table = run_scan(&cfg)?;
    match &cfg.output {
        Some(path) => {
            table.save(path)?;
            eprintln!(
                "wrote {} points to {path} (max residual {:.2e})",
                table.len(),
                table.max_residual()
            );
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            table.write_csv(&mut lock)?;
            lock.flush()?;
        }
    }
    Ok(())
}

fn analyze(args: &AnalyzeArgs) -> Result<()> {
    let table = SpectrumTable::load(&args.input).map_err(|e| match e {
        Error::Io(io) => Error::Config(format!("cannot read {}: {io}", args.input.display())),
        other => other,
    })?;
    let column = match &args.column {
        Some(c) => c.clone(),
        None => table
            .columns
            .first()
            .cloned()
            .ok_or_else(|| Error::Analysis("table has no observable columns".into()))?,
    };
    let report = find_peak_and_width(&table, &column, args.window.map(|[a, b]| (a, b)))?;
    if args.json {
        println!("{}", serde_json::to_string(&report)?);
    } else {
        println!("column    {column}");
        println!("center    {:.6e}", report.center);
        println!("height    {:.6e}", report.height);
        println!("baseline  {:.6e}", report.baseline);
        println!("fwhm      {:.6e}", report.fwhm);
    }
    Ok(())
}

fn validate(args: &ValidateArgs) -> Result<bool> {
    let checks = run_validation(args.quick)?;
    for c in &checks {
        println!("{c}");
    }
    Ok(checks.iter().all(|c| c.passed()))
}

fn exit_code(e: &Error) -> i32 {
    if e.is_solver_failure() {
        EXIT_SOLVER
    } else {
        EXIT_CONFIG
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
        }
    };
    let result = match &cli.command {
        Command::Scan(a) => scan(a).map(|_| true),
        Command::Analyze(a) => analyze(a).map(|_| true),
        Command::Validate(a) => validate(a),
    };
    match result {
        Ok(true) => EXIT_OK,
        Ok(false) => {
            eprintln!("error: validation failed");
            EXIT_SOLVER
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
