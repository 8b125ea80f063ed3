//! Parameter sweeps, the spectrum table they produce, and peak analysis.

use std::fmt;
use std::io::{BufRead, Write};
use std::path::Path;
use std::str::FromStr;

use log::info;
use num_complex::Complex64 as C64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::angular::{cartesian_to_spherical, SphericalVector};
use crate::error::{Error, Result};
use crate::observables::{
    absorption, dispersion, fluorescence_modulation, fwm_power, magnetic_dipole, LinearReference,
    ObservableKind, Projection,
};
use crate::probe_response::{ProbeSolver, PumpCoupling};
use crate::system::{polarization, FieldSpec, OperatorSet, RabiNormalization, TransitionSpec};

pub const MAX_POINTS: usize = 1_000_000;

/// A complex number in a config file: `0.5`, `[re, im]` or `"0.5+0.2i"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComplexValue {
    Real(f64),
    Pair([f64; 2]),
    Text(String),
}

impl ComplexValue {
    pub fn to_complex(&self) -> Result<C64> {
        match self {
            ComplexValue::Real(x) => Ok(C64::new(*x, 0.0)),
            ComplexValue::Pair([re, im]) => Ok(C64::new(*re, *im)),
            ComplexValue::Text(s) => parse_complex(s),
        }
    }
}

fn parse_complex(s: &str) -> Result<C64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    C64::from_str(&t).map_err(|_| Error::Config(format!("cannot parse complex number '{s}'")))
}

/// A preset name or three Cartesian components `(x, y, z)`, normalized on use.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolarizationSpec {
    Preset(String),
    Components([ComplexValue; 3]),
}

impl PolarizationSpec {
    pub fn to_vector(&self) -> Result<SphericalVector> {
        match self {
            PolarizationSpec::Preset(name) => polarization::preset(name).ok_or_else(|| {
                Error::Config(format!(
                    "unknown polarization '{name}' (expected lin_x, lin_y, pi, sigma+, sigma- or three components)"
                ))
            }),
            PolarizationSpec::Components([x, y, z]) => cartesian_to_spherical(
                x.to_complex()?,
                y.to_complex()?,
                z.to_complex()?,
            )
            .normalized()
            .map_err(|e| Error::Config(e.to_string())),
        }
    }
}

impl FromStr for PolarizationSpec {
    type Err = Error;

    /// Accepts a preset name or `x,y,z` with complex components such as `1,1i,0`.
    fn from_str(s: &str) -> Result<Self> {
        if s.contains(',') {
            let parts: Vec<&str> = s.split(',').collect();
            if parts.len() != 3 {
                return Err(Error::Config(format!(
                    "polarization '{s}' must have three comma-separated components"
                )));
            }
            let mut comps = Vec::with_capacity(3);
            for p in parts {
                parse_complex(p)?;
                comps.push(ComplexValue::Text(p.trim().to_string()));
            }
            let [x, y, z]: [ComplexValue; 3] = comps.try_into().expect("three components");
            Ok(PolarizationSpec::Components([x, y, z]))
        } else {
            let spec = PolarizationSpec::Preset(s.trim().to_string());
            spec.to_vector()?;
            Ok(spec)
        }
    }
}

fn default_branching() -> f64 {
    1.0
}
fn default_gamma() -> f64 {
    1e-3
}
fn default_beta() -> f64 {
    1.0
}
fn default_probe() -> FieldConfig {
    FieldConfig {
        rabi: 1.0,
        polarization: PolarizationSpec::Preset("lin_y".into()),
        detuning: 0.0,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransitionConfig {
    pub fg: f64,
    pub fe: f64,
    #[serde(default = "default_branching")]
    pub branching: f64,
    #[serde(default = "default_gamma")]
    pub gamma: f64,
    #[serde(default = "default_beta")]
    pub beta_g: f64,
    /// Defaults to `beta_g`.
    #[serde(default)]
    pub beta_e: Option<f64>,
    #[serde(default)]
    pub rabi_normalization: RabiNormalization,
}

impl TransitionConfig {
    pub fn build(&self) -> Result<TransitionSpec> {
        let t = TransitionSpec::new(self.fg, self.fe)?
            .with_branching(self.branching)
            .with_gamma(self.gamma)
            .with_betas(self.beta_g, self.beta_e.unwrap_or(self.beta_g))
            .with_rabi_normalization(self.rabi_normalization);
        t.validate()?;
        Ok(t)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldConfig {
    pub rabi: f64,
    pub polarization: PolarizationSpec,
    /// Pump only; ignored for the probe.
    #[serde(default)]
    pub detuning: f64,
}

impl FieldConfig {
    pub fn build(&self) -> Result<FieldSpec> {
        let f =
            FieldSpec::new(self.rabi, self.polarization.to_vector()?).with_detuning(self.detuning);
        f.validate()?;
        Ok(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanVariable {
    /// Probe detuning δ.
    Delta,
    /// Magnetic field B.
    Bfield,
    /// Pump saturation parameter `S = 2Ω₁²`.
    Saturation,
}

impl ScanVariable {
    pub fn name(self) -> &'static str {
        match self {
            ScanVariable::Delta => "delta",
            ScanVariable::Bfield => "bfield",
            ScanVariable::Saturation => "saturation",
        }
    }
}

impl fmt::Display for ScanVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScanVariable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "delta" => Ok(ScanVariable::Delta),
            "bfield" | "b" | "B" => Ok(ScanVariable::Bfield),
            "saturation" | "s" | "S" => Ok(ScanVariable::Saturation),
            other => Err(Error::Config(format!("unknown scan variable '{other}'"))),
        }
    }
}

/// Pump Rabi frequency for saturation parameter `S = 2Ω₁²`.
pub fn rabi_from_saturation(s: f64) -> f64 {
    (s / 2.0).sqrt()
}

pub fn saturation_from_rabi(rabi: f64) -> f64 {
    2.0 * rabi * rabi
}

/// A full sweep description, read from JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanConfig {
    pub transition: TransitionConfig,
    pub pump: FieldConfig,
    #[serde(default = "default_probe")]
    pub probe: FieldConfig,
    /// Magnetic field when not scanned.
    #[serde(default)]
    pub bfield: f64,
    /// Probe detuning when not scanned.
    #[serde(default)]
    pub delta: f64,
    pub scan: ScanVariable,
    pub range: [f64; 2],
    pub points: usize,
    #[serde(default)]
    pub log_spacing: bool,
    pub observables: Vec<ObservableKind>,
    #[serde(default)]
    pub projection: Projection,
    /// Unit vector for the dispersion projection; defaults to the probe polarization.
    #[serde(default)]
    pub dispersion_axis: Option<PolarizationSpec>,
    #[serde(default)]
    pub output: Option<String>,
}

impl Default for ScanConfig {
    /// Closed 1 → 2, crossed linear polarizations, Ω₁ = 0.4, γ = 10⁻³, δ scan.
    fn default() -> Self {
        ScanConfig {
            transition: TransitionConfig {
                fg: 1.0,
                fe: 2.0,
                branching: 1.0,
                gamma: 1e-3,
                beta_g: 1.0,
                beta_e: None,
                rabi_normalization: RabiNormalization::default(),
            },
            pump: FieldConfig {
                rabi: 0.4,
                polarization: PolarizationSpec::Preset("lin_x".into()),
                detuning: 0.0,
            },
            probe: default_probe(),
            bfield: 0.0,
            delta: 0.0,
            scan: ScanVariable::Delta,
            range: [-0.05, 0.05],
            points: 401,
            log_spacing: false,
            observables: vec![ObservableKind::Absorption, ObservableKind::LinearAbsorption],
            projection: Projection::default(),
            dispersion_axis: None,
            output: None,
        }
    }
}

impl ScanConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path.as_ref())
            .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.as_ref().display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<()> {
        let cfg = |e: Error| match e {
            Error::InvalidInput(m) => Error::Config(m),
            other => other,
        };
        self.transition.build().map_err(cfg)?;
        self.pump.build().map_err(cfg)?;
        self.probe.build().map_err(cfg)?;
        if let Some(axis) = &self.dispersion_axis {
            axis.to_vector()?;
        }
        let [lo, hi] = self.range;
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::Config(format!(
                "range [{lo}, {hi}] must satisfy lo < hi"
            )));
        }
        if self.points < 2 || self.points > MAX_POINTS {
            return Err(Error::Config(format!(
                "points must lie in [2, {MAX_POINTS}], got {}",
                self.points
            )));
        }
        if self.observables.is_empty() {
            return Err(Error::Config("no observables requested".into()));
        }
        if self.log_spacing && lo <= 0.0 {
            return Err(Error::Config("log spacing needs a positive range".into()));
        }
        if self.scan == ScanVariable::Saturation && lo < 0.0 {
            return Err(Error::Config(
                "saturation parameter must be non-negative".into(),
            ));
        }
        if !self.bfield.is_finite() || !self.delta.is_finite() {
            return Err(Error::Config("bfield and delta must be finite".into()));
        }
        Ok(())
    }

    /// Scan coordinates in order.
    pub fn grid(&self) -> Vec<f64> {
        let [lo, hi] = self.range;
        let n = self.points;
        (0..n)
            .map(|k| {
                if k == 0 {
                    return lo;
                }
                if k == n - 1 {
                    return hi;
                }
                let f = k as f64 / (n - 1) as f64;
                if self.log_spacing {
                    (lo.ln() + f * (hi.ln() - lo.ln())).exp()
                } else {
                    lo + f * (hi - lo)
                }
            })
            .collect()
    }

    /// Operators with the pump Rabi frequency and field overridden.
    pub fn operators(&self, pump_rabi: f64, b_field: f64) -> Result<OperatorSet> {
        let t = self.transition.build()?;
        let mut pump = self.pump.build()?;
        pump.rabi = pump_rabi;
        let probe = self.probe.build()?;
        OperatorSet::new(&t, &pump, &probe, b_field)
    }

    fn axis(&self) -> Result<SphericalVector> {
        match &self.dispersion_axis {
            Some(a) => a.to_vector(),
            None => self.probe.polarization.to_vector(),
        }
    }
}

/// Evaluates the requested observables at one parameter point for any δ.
pub struct PointEvaluator {
    ops: OperatorSet,
    kinds: Vec<ObservableKind>,
    projection: Projection,
    axis: SphericalVector,
    coherent: Option<ProbeSolver>,
    incoherent: Option<ProbeSolver>,
    linear: Option<LinearReference>,
}

impl PointEvaluator {
    pub fn new(
        ops: &OperatorSet,
        kinds: &[ObservableKind],
        projection: Projection,
        axis: SphericalVector,
    ) -> Result<Self> {
        let needs_coherent = kinds.iter().any(|k| *k != ObservableKind::LinearAbsorption);
        let coherent = if needs_coherent {
            Some(ProbeSolver::new(ops)?)
        } else {
            None
        };
        let incoherent = match (
            &coherent,
            kinds.contains(&ObservableKind::IncoherentAbsorption),
        ) {
            (Some(c), true) => Some(ProbeSolver::with_steady_state(
                ops,
                c.steady_state().clone(),
                PumpCoupling::Incoherent,
            )?),
            _ => None,
        };
        let linear = if kinds.contains(&ObservableKind::LinearAbsorption) {
            Some(LinearReference::new(ops, projection)?)
        } else {
            None
        };
        Ok(PointEvaluator {
            ops: ops.clone(),
            kinds: kinds.to_vec(),
            projection,
            axis,
            coherent,
            incoherent,
            linear,
        })
    }

    pub fn steady_state_residual(&self) -> f64 {
        self.coherent
            .as_ref()
            .map(|c| c.steady_state().residual)
            .unwrap_or(0.0)
    }

    pub fn probe_solver(&self) -> Option<&ProbeSolver> {
        self.coherent.as_ref()
    }

    /// Observable values in request order and the largest solve residual.
    pub fn evaluate(&self, delta: f64) -> Result<(Vec<f64>, f64)> {
        let ops = &self.ops;
        let mut residual = self.steady_state_residual();
        let pr = match &self.coherent {
            Some(c) => {
                let pr = c.solve(delta)?;
                residual = residual.max(pr.residual);
                Some(pr)
            }
            None => None,
        };
        let mut out = Vec::with_capacity(self.kinds.len());
        for kind in &self.kinds {
            let v = match kind {
                ObservableKind::LinearAbsorption => {
                    let (v, r) = self
                        .linear
                        .as_ref()
                        .expect("linear reference built")
                        .absorption_with_residual(delta)?;
                    residual = residual.max(r);
                    v
                }
                ObservableKind::IncoherentAbsorption => {
                    let inc = self
                        .incoherent
                        .as_ref()
                        .expect("incoherent solver built")
                        .solve(delta)?;
                    residual = residual.max(inc.residual);
                    absorption(&inc, ops, &ops.probe, self.projection)
                }
                other => {
                    let pr = pr.as_ref().expect("coherent response computed");
                    match other {
                        ObservableKind::Absorption => {
                            absorption(pr, ops, &ops.probe, self.projection)
                        }
                        ObservableKind::Dispersion => {
                            dispersion(pr, ops, &self.axis, self.projection)
                        }
                        ObservableKind::FwmPower => fwm_power(pr, ops),
                        ObservableKind::FluorescenceMod => fluorescence_modulation(pr, ops),
                        ObservableKind::MagDipoleModulus => magnetic_dipole(pr, ops),
                        _ => unreachable!(),
                    }
                }
            };
            out.push(v);
        }
        Ok((out, residual))
    }
}

/// Scan results with run metadata (config echo, version, residual).
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumTable {
    pub scan_variable: String,
    pub columns: Vec<String>,
    pub scan_values: Vec<f64>,
    /// `rows[i][j]` is observable `columns[j]` at `scan_values[i]`.
    pub rows: Vec<Vec<f64>>,
    pub residuals: Vec<f64>,
    pub metadata: Vec<(String, String)>,
}

impl SpectrumTable {
    pub fn len(&self) -> usize {
        self.scan_values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scan_values.is_empty()
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let j = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[j]).collect())
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    pub fn metadata_value(&self, key: &str) -> Option<&str> {
        self.metadata
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        for (k, v) in &self.metadata {
            writeln!(w, "# {k}: {v}")?;
        }
        let mut csv = csv::Writer::from_writer(w);
        let mut header = vec![self.scan_variable.clone()];
        header.extend(self.columns.iter().cloned());
        header.push("residual".into());
        csv.write_record(&header)?;
        for ((x, row), r) in self.scan_values.iter().zip(&self.rows).zip(&self.residuals) {
            let mut rec = vec![format_float(*x)];
            rec.extend(row.iter().map(|v| format_float(*v)));
            rec.push(format_float(*r));
            csv.write_record(&rec)?;
        }
        csv.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("utf8 csv")
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let f = std::fs::File::create(path)?;
        self.write_csv(std::io::BufWriter::new(f))
    }

    pub fn read_csv<R: BufRead>(mut r: R) -> Result<Self> {
        let mut metadata = Vec::new();
        let mut body = String::new();
        let mut line = String::new();
        loop {
            line.clear();
            if r.read_line(&mut line)? == 0 {
                break;
            }
            if let Some(rest) = line.strip_prefix('#') {
                if let Some((k, v)) = rest.trim().split_once(':') {
                    metadata.push((k.trim().to_string(), v.trim().to_string()));
                }
            } else {
                body.push_str(&line);
            }
        }
        let mut rdr = csv::Reader::from_reader(body.as_bytes());
        let header: Vec<String> = rdr.headers()?.iter().map(|s| s.to_string()).collect();
        if header.len() < 2 {
            return Err(Error::Analysis(
                "table needs a scan column and at least one observable".into(),
            ));
        }
        let has_residual = header.last().map(|h| h == "residual").unwrap_or(false);
        let ncols = header.len() - 1 - usize::from(has_residual);
        let mut scan_values = Vec::new();
        let mut rows = Vec::new();
        let mut residuals = Vec::new();
        for rec in rdr.records() {
            let rec = rec?;
            let vals: Vec<f64> = rec
                .iter()
                .map(|s| {
                    s.trim()
                        .parse::<f64>()
                        .map_err(|_| Error::Analysis(format!("non-numeric cell '{s}'")))
                })
                .collect::<Result<_>>()?;
            if vals.len() != header.len() {
                return Err(Error::Dimension {
                    expected: header.len(),
                    got: vals.len(),
                });
            }
            scan_values.push(vals[0]);
            rows.push(vals[1..1 + ncols].to_vec());
            residuals.push(if has_residual {
                vals[header.len() - 1]
            } else {
                0.0
            });
        }
        Ok(SpectrumTable {
            scan_variable: header[0].clone(),
            columns: header[1..1 + ncols].to_vec(),
            scan_values,
            rows,
            residuals,
            metadata,
        })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let f = std::fs::File::open(path)?;
        Self::read_csv(std::io::BufReader::new(f))
    }
}

/// Shortest representation that parses back to the same value.
fn format_float(x: f64) -> String {
    format!("{x:e}")
}

/// Runs the sweep described by `cfg`, distributing points over the rayon pool.
pub fn run_scan(cfg: &ScanConfig) -> Result<SpectrumTable> {
    cfg.validate()?;
    let grid = cfg.grid();
    let axis = cfg.axis()?;
    let started = std::time::Instant::now();
    info!(
        "scanning {} over {} points in [{}, {}]",
        cfg.scan, cfg.points, cfg.range[0], cfg.range[1]
    );
    let kinds = &cfg.observables;
    let results: Vec<(Vec<f64>, f64)> = match cfg.scan {
        ScanVariable::Delta => {
            let ops = cfg.operators(cfg.pump.rabi, cfg.bfield)?;
            let eval = PointEvaluator::new(&ops, kinds, cfg.projection, axis)
                .map_err(|e| e.with_context(format!("B = {}", cfg.bfield)))?;
            grid.par_iter()
                .enumerate()
                .map(|(i, &d)| {
                    eval.evaluate(d).map_err(|e| {
                        e.with_context(format!("scan point {i}: delta = {d}, B = {}", cfg.bfield))
                    })
                })
                .collect::<Result<_>>()?
        }
        ScanVariable::Bfield | ScanVariable::Saturation => grid
            .par_iter()
            .enumerate()
            .map(|(i, &x)| {
                let (rabi, b) = match cfg.scan {
                    ScanVariable::Bfield => (cfg.pump.rabi, x),
                    _ => (rabi_from_saturation(x), cfg.bfield),
                };
                let at = || format!("scan point {i}: {} = {x}, delta = {}", cfg.scan, cfg.delta);
                let ops = cfg.operators(rabi, b)?;
                PointEvaluator::new(&ops, kinds, cfg.projection, axis)
                    .and_then(|e| e.evaluate(cfg.delta))
                    .map_err(|e| e.with_context(at()))
            })
            .collect::<Result<_>>()?,
    };
    let (rows, residuals): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    let max_res = residuals.iter().copied().fold(0.0, f64::max);
    info!(
        "scan finished in {:.2?}, max residual {max_res:.2e}",
        started.elapsed()
    );
    let metadata = vec![
        ("tool".to_string(), env!("CARGO_PKG_NAME").to_string()),
        ("version".to_string(), env!("CARGO_PKG_VERSION").to_string()),
        ("config".to_string(), cfg.to_json()),
        ("max_residual".to_string(), format!("{max_res:e}")),
    ];
    Ok(SpectrumTable {
        scan_variable: cfg.scan.name().to_string(),
        columns: kinds.iter().map(|k| k.name().to_string()).collect(),
        scan_values: grid,
        rows,
        residuals,
        metadata,
    })
}

/// Location, height and full width at half maximum of a resonance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PeakReport {
    pub center: f64,
    /// Signed height above the baseline (negative for a dip).
    pub height: f64,
    pub baseline: f64,
    pub fwhm: f64,
    /// Grid index of the extremum.
    pub index: usize,
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(|a, b| a.total_cmp(b));
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

/// Finds the dominant extremum of `ys` relative to a baseline taken as the
/// median of the outer 5% of points on each side (at least one).
pub fn peak_and_width(xs: &[f64], ys: &[f64]) -> Result<PeakReport> {
    let n = xs.len();
    if n != ys.len() {
        return Err(Error::Dimension {
            expected: n,
            got: ys.len(),
        });
    }
    if n < 5 {
        return Err(Error::Analysis("need at least five points".into()));
    }
    let edge = (n / 20).max(1);
    let mut edges: Vec<f64> = ys[..edge].to_vec();
    edges.extend_from_slice(&ys[n - edge..]);
    let baseline = median(edges);
    let (index, dev) = ys.iter().enumerate().map(|(i, y)| (i, y - baseline)).fold(
        (0usize, 0.0f64),
        |acc, (i, d)| if d.abs() > acc.1.abs() { (i, d) } else { acc },
    );
    let scale = ys.iter().map(|y| y.abs()).fold(0.0, f64::max);
    if dev.abs() <= 1e-8 * scale || dev == 0.0 {
        return Err(Error::Analysis("no extremum above numerical noise".into()));
    }
    if index == 0 || index == n - 1 {
        return Err(Error::Analysis("extremum lies on the window edge".into()));
    }
    // Parabola through the three points around the extremum.
    let (x0, x1, x2) = (xs[index - 1], xs[index], xs[index + 1]);
    let (y0, y1, y2) = (ys[index - 1], ys[index], ys[index + 1]);
    let denom = (x0 - x1) * (x0 - x2) * (x1 - x2);
    let a = (x2 * (y1 - y0) + x1 * (y0 - y2) + x0 * (y2 - y1)) / denom;
    let b = (x2 * x2 * (y0 - y1) + x1 * x1 * (y2 - y0) + x0 * x0 * (y1 - y2)) / denom;
    let c =
        (x1 * x2 * (x1 - x2) * y0 + x2 * x0 * (x2 - x0) * y1 + x0 * x1 * (x0 - x1) * y2) / denom;
    let (center, peak) = if a != 0.0 {
        let xc = -b / (2.0 * a);
        if xc >= x0 && xc <= x2 {
            (xc, c - b * b / (4.0 * a))
        } else {
            (x1, y1)
        }
    } else {
        (x1, y1)
    };
    let height = peak - baseline;
    let half = 0.5 * height;
    let crossing = |range: &mut dyn Iterator<Item = usize>, step: isize| -> Result<f64> {
        for i in range {
            let j = (i as isize + step) as usize;
            let (ri, rj) = ((ys[i] - baseline) / half, (ys[j] - baseline) / half);
            if ri >= 1.0 && rj < 1.0 {
                let t = (ri - 1.0) / (ri - rj);
                return Ok(xs[i] + t * (xs[j] - xs[i]));
            }
        }
        Err(Error::Analysis(
            "half-height crossing outside the window".into(),
        ))
    };
    let left = crossing(&mut (1..=index).rev(), -1)?;
    let right = crossing(&mut (index..n - 1), 1)?;
    Ok(PeakReport {
        center: center + 0.0,
        height,
        baseline,
        fwhm: right - left,
        index,
    })
}

/// [`peak_and_width`] on one table column, restricted to `window` if given.
pub fn find_peak_and_width(
    table: &SpectrumTable,
    column: &str,
    window: Option<(f64, f64)>,
) -> Result<PeakReport> {
    let ys = table
        .column(column)
        .ok_or_else(|| Error::Analysis(format!("no column '{column}'")))?;
    let (xs, ys): (Vec<f64>, Vec<f64>) = table
        .scan_values
        .iter()
        .copied()
        .zip(ys)
        .filter(|(x, _)| window.is_none_or(|(lo, hi)| *x >= lo && *x <= hi))
        .unzip();
    let mut r = peak_and_width(&xs, &ys)?;
    if let Some((lo, _)) = window {
        r.index += table.scan_values.iter().take_while(|x| **x < lo).count();
    }
    Ok(r)
}

/// A local extremum found by [`local_extrema`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum {
    pub index: usize,
    pub position: f64,
    pub value: f64,
    /// Depth or height relative to the higher (lower) of the two flanking
    /// opposite extrema.
    pub prominence: f64,
    pub is_max: bool,
}

/// Strict local maxima and minima with their topographic prominence.
pub fn local_extrema(xs: &[f64], ys: &[f64]) -> Vec<Extremum> {
    let n = ys.len();
    let mut out = Vec::new();
    for i in 1..n.saturating_sub(1) {
        let is_max = ys[i] > ys[i - 1] && ys[i] >= ys[i + 1];
        let is_min = ys[i] < ys[i - 1] && ys[i] <= ys[i + 1];
        if !(is_max || is_min) {
            continue;
        }
        let sign = if is_max { 1.0 } else { -1.0 };
        // Walk outward until the signal exceeds the extremum or the edge is hit.
        let side = |range: &mut dyn Iterator<Item = usize>| {
            let mut lowest = sign * ys[i];
            for j in range {
                let v = sign * ys[j];
                if v > sign * ys[i] {
                    break;
                }
                lowest = lowest.min(v);
            }
            lowest
        };
        let l = side(&mut (0..i).rev());
        let r = side(&mut (i + 1..n));
        let prominence = sign * ys[i] - l.max(r);
        out.push(Extremum {
            index: i,
            position: xs[i],
            value: ys[i],
            prominence,
            is_max,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lorentzian_width_is_recovered() {
        let g = 0.01;
        let xs: Vec<f64> = (0..=400).map(|k| -0.1 + 0.2 * k as f64 / 400.0).collect();
        let ys: Vec<f64> = xs.iter().map(|x| g * g / (g * g + x * x)).collect();
        let r = peak_and_width(&xs, &ys).unwrap();
        // The window edges sit at about 1% of the peak; FWHM is measured from that baseline.
        assert!((r.fwhm - 2.0 * g).abs() / (2.0 * g) < 0.02);
        assert!(r.center.abs() < 1e-12);
    }

    #[test]
    fn dips_have_negative_height() {
        let xs: Vec<f64> = (0..=200).map(|k| k as f64 / 200.0 - 0.5).collect();
        let ys: Vec<f64> = xs
            .iter()
            .map(|x| 1.0 - 0.3 * (-(x - 0.1) * (x - 0.1) / 0.002).exp())
            .collect();
        let r = peak_and_width(&xs, &ys).unwrap();
        assert!(r.height < 0.0);
        assert!((r.center - 0.1).abs() < 2.5e-3);
    }

    #[test]
    fn flat_signal_has_no_peak() {
        let xs: Vec<f64> = (0..50).map(|k| k as f64).collect();
        assert!(peak_and_width(&xs, &vec![1.0; 50]).is_err());
    }

    #[test]
    fn grid_endpoints_and_log_spacing() {
        let mut c = ScanConfig::default();
        c.range = [1e-3, 10.0];
        c.points = 5;
        c.log_spacing = true;
        let g = c.grid();
        assert_eq!(g[0], 1e-3);
        assert_eq!(g[4], 10.0);
        assert!((g[2] - 0.1).abs() < 1e-12);
    }

    #[test]
    fn config_validation() {
        let mut c = ScanConfig::default();
        assert!(c.validate().is_ok());
        c.range = [1.0, -1.0];
        assert!(matches!(c.validate(), Err(Error::Config(_))));
        let mut c = ScanConfig::default();
        c.observables.clear();
        assert!(c.validate().is_err());
        let mut c = ScanConfig::default();
        c.points = 1;
        assert!(c.validate().is_err());
        let mut c = ScanConfig::default();
        c.pump.polarization = PolarizationSpec::Preset("diagonal".into());
        assert!(c.validate().is_err());
    }

    #[test]
    fn polarization_parsing() {
        let p: PolarizationSpec = "1,-1i,0".parse().unwrap();
        let v = p.to_vector().unwrap();
        assert!(v.is_normalized());
        assert!(v.q_minus.norm() > 0.99);
        assert!("sigma+".parse::<PolarizationSpec>().is_ok());
        assert!("1,2".parse::<PolarizationSpec>().is_err());
        assert!("0,0,0"
            .parse::<PolarizationSpec>()
            .unwrap()
            .to_vector()
            .is_err());
    }

    #[test]
    fn json_round_trip() {
        let c = ScanConfig::default();
        let back = ScanConfig::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        let text = r#"{"transition":{"fg":1,"fe":2},"pump":{"rabi":0.4,"polarization":[1,[0,0],"0"]},
            "scan":"delta","range":[-0.1,0.1],"points":11,"observables":["absorption"]}"#;
        let c = ScanConfig::from_json(text).unwrap();
        assert!(c.validate().is_ok());
        assert!(ScanConfig::from_json(r#"{"bogus":1}"#).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let mut c = ScanConfig::default();
        c.points = 7;
        let t = run_scan(&c).unwrap();
        let back = SpectrumTable::read_csv(t.to_csv_string().as_bytes()).unwrap();
        assert_eq!(back.scan_values, t.scan_values);
        assert_eq!(back.rows, t.rows);
        assert_eq!(back.residuals, t.residuals);
        assert_eq!(back.columns, t.columns);
        assert!(back.metadata_value("config").is_some());
    }

    #[test]
    fn prominence_of_simple_bumps() {
        let xs: Vec<f64> = (0..9).map(|k| k as f64).collect();
        let ys = [0.0, 1.0, 0.0, 0.0, 3.0, 0.5, 0.5, 2.0, 0.0];
        let e = local_extrema(&xs, &ys);
        let maxima: Vec<_> = e.iter().filter(|e| e.is_max).collect();
        assert_eq!(maxima.len(), 3);
        assert_eq!(maxima[1].prominence, 3.0);
        assert_eq!(maxima[0].prominence, 1.0);
        assert_eq!(maxima[2].prominence, 1.5);
    }
}
