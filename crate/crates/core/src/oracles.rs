//! Independent reference calculations for verifying the frequency-domain solver.
//!
//! * [`integrate_master_equation`] integrates the full time-dependent master
//!   equation with the probe present and extracts the Fourier components of
//!   `ρ(t)` at `0` and `±δ`.
//! * The two-level functions give closed-form steady state and probe
//!   absorption for one ground and one excited sublevel.
//!
//! These paths are slow and intended for tests and user verification.

use ndarray::Array2;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::liouville::lindblad_action;
use crate::matrix::{commutator, dagger, hermiticity_defect, trace, zeros, CMatrix, I, ONE, ZERO};
use crate::system::OperatorSet;

/// Time-domain step bound: `dt ≤ STEP_FRACTION / (largest rate)`.
pub const STEP_FRACTION: f64 = 0.01;

/// Fourier components of `ρ(t)` in the pump frame.
#[derive(Debug, Clone)]
pub struct TimeDomainResult {
    pub fourier_dc: CMatrix,
    /// Component at `e^{iδt}`, the counterpart of the probe sideband σ⁺.
    pub fourier_plus: CMatrix,
    pub fourier_minus: CMatrix,
    pub integration_span: f64,
    pub dt: f64,
    pub steps: usize,
    /// Largest `|Tr ρ(t) - 1|` seen (meaningful for closed transitions).
    pub max_trace_error: f64,
    pub max_hermiticity_defect: f64,
}

/// Compressed sparse row form of a Liouville-space operator.
struct Sparse {
    row_start: Vec<usize>,
    cols: Vec<usize>,
    vals: Vec<C64>,
}

impl Sparse {
    /// Builds the matrix of `f` column by column, evaluating it on basis matrices.
    fn from_action(n: usize, f: impl Fn(&CMatrix) -> CMatrix) -> Self {
        let size = n * n;
        let mut dense = Array2::<C64>::zeros((size, size));
        for l in 0..n {
            for k in 0..n {
                let mut e = zeros(n);
                e[[k, l]] = ONE;
                let out = f(&e);
                for j in 0..n {
                    for i in 0..n {
                        dense[[i + n * j, k + n * l]] = out[[i, j]];
                    }
                }
            }
        }
        let mut row_start = vec![0];
        let mut cols = Vec::new();
        let mut vals = Vec::new();
        for r in 0..size {
            for c in 0..size {
                let v = dense[[r, c]];
                if v != ZERO {
                    cols.push(c);
                    vals.push(v);
                }
            }
            row_start.push(cols.len());
        }
        Sparse {
            row_start,
            cols,
            vals,
        }
    }

    fn mul_add(&self, coeff: C64, x: &[C64], out: &mut [C64]) {
        for (r, o) in out.iter_mut().enumerate() {
            let mut acc = ZERO;
            for k in self.row_start[r]..self.row_start[r + 1] {
                acc += self.vals[k] * x[self.cols[k]];
            }
            *o += coeff * acc;
        }
    }
}

struct Propagator {
    base: Sparse,
    plus: Sparse,
    minus: Sparse,
    feed: Vec<C64>,
    delta: f64,
    phase: C64,
}

impl Propagator {
    fn rhs(&self, t: f64, x: &[C64], out: &mut [C64]) {
        out.copy_from_slice(&self.feed);
        self.base.mul_add(ONE, x, out);
        let rot = C64::from_polar(1.0, self.delta * t) * self.phase;
        self.plus.mul_add(rot, x, out);
        self.minus.mul_add(rot.conj(), x, out);
    }

    fn rk4_step(&self, t: f64, dt: f64, x: &mut [C64], work: &mut [Vec<C64>; 5]) {
        let n = x.len();
        let [k1, k2, k3, k4, tmp] = work;
        self.rhs(t, x, k1);
        for i in 0..n {
            tmp[i] = x[i] + k1[i] * (0.5 * dt);
        }
        self.rhs(t + 0.5 * dt, tmp, k2);
        for i in 0..n {
            tmp[i] = x[i] + k2[i] * (0.5 * dt);
        }
        self.rhs(t + 0.5 * dt, tmp, k3);
        for i in 0..n {
            tmp[i] = x[i] + k3[i] * dt;
        }
        self.rhs(t + dt, tmp, k4);
        for i in 0..n {
            x[i] += (k1[i] + (k2[i] + k3[i]) * 2.0 + k4[i]) * (dt / 6.0);
        }
    }
}

fn to_matrix(n: usize, x: &[C64]) -> CMatrix {
    Array2::from_shape_fn((n, n), |(i, j)| x[i + n * j])
}

/// Largest rate in the problem, used to bound the time step.
fn energy_scale(ops: &OperatorSet, delta: f64) -> f64 {
    let h_max = (0..ops.dim)
        .map(|k| ops.h_rot[[k, k]].norm())
        .fold(0.0, f64::max);
    1.0f64.max(delta.abs()).max(ops.pump.rabi).max(h_max)
}

/// Largest admissible step for the given operators and probe detuning.
pub fn max_time_step(ops: &OperatorSet, delta: f64) -> f64 {
    STEP_FRACTION / energy_scale(ops, delta)
}

/// Integrates `dρ/dt = L ρ + γρ₀ - i[(W2 e^{iδt} + W2† e^{-iδt})/2, ρ]` from
/// `ρ(0) = ρ₀` with fixed-step RK4 and projects the final stretch of the
/// trajectory onto `{1, e^{iδt}, e^{-iδt}}`.
///
/// For `δ ≠ 0` the projection window is the last full period `2π/|δ|` and the
/// step is shortened so the window holds a whole number of steps. At `δ = 0`
/// the sidebands are separated instead by repeating the run with the probe
/// phase advanced by `0, π/2, π, 3π/2`.
pub fn integrate_master_equation(
    ops: &OperatorSet,
    delta: f64,
    t_end: f64,
    dt: f64,
) -> Result<TimeDomainResult> {
    let limit = max_time_step(ops, delta);
    if !(dt > 0.0) || dt > limit * (1.0 + 1e-9) {
        return Err(Error::InvalidInput(format!(
            "time step {dt} too coarse; the energy scale requires dt <= {limit:.3e}"
        )));
    }
    if !(t_end > 0.0) || !t_end.is_finite() {
        return Err(Error::InvalidInput(format!(
            "integration span {t_end} must be positive"
        )));
    }
    let gamma = ops.transition.gamma;
    let h = &ops.h_rot + &ops.v1;
    let n = ops.dim;
    let base = Sparse::from_action(n, |x| lindblad_action(ops, &h, x));
    let w_half = ops.w2.mapv(|z| z * 0.5);
    let w_half_dag = dagger(&w_half);
    let plus = Sparse::from_action(n, |x| commutator(&w_half, x).mapv(|z| -I * z));
    let minus = Sparse::from_action(n, |x| commutator(&w_half_dag, x).mapv(|z| -I * z));
    let rho0 = ops.rho0();
    let feed: Vec<C64> = (0..n * n).map(|k| rho0[[k % n, k / n]] * gamma).collect();
    let mut prop = Propagator {
        base,
        plus,
        minus,
        feed,
        delta,
        phase: ONE,
    };

    if delta.abs() > 1e-12 {
        let period = 2.0 * std::f64::consts::PI / delta.abs();
        if t_end < period {
            return Err(Error::InvalidInput(format!(
                "integration span {t_end} shorter than one probe period {period}"
            )));
        }
        let window_steps = (period / dt).ceil() as usize;
        let step = period / window_steps as f64;
        let settle_steps = ((t_end - period) / step).ceil() as usize;
        let run = run(&prop, &rho0, step, settle_steps, window_steps, |t| {
            [
                ONE,
                C64::from_polar(1.0, -delta * t),
                C64::from_polar(1.0, delta * t),
            ]
        });
        let scale = 1.0 / window_steps as f64;
        Ok(TimeDomainResult {
            fourier_dc: run.sums[0].mapv(|z| z * scale),
            fourier_plus: run.sums[1].mapv(|z| z * scale),
            fourier_minus: run.sums[2].mapv(|z| z * scale),
            integration_span: (settle_steps + window_steps) as f64 * step,
            dt: step,
            steps: settle_steps + window_steps,
            max_trace_error: run.max_trace_error,
            max_hermiticity_defect: run.max_herm,
        })
    } else {
        let steps = (t_end / dt).ceil() as usize;
        let step = t_end / steps as f64;
        let mut dc = zeros(n);
        let mut plus_c = zeros(n);
        let mut minus_c = zeros(n);
        let mut max_trace_error: f64 = 0.0;
        let mut max_herm: f64 = 0.0;
        for k in 0..4 {
            let phi = C64::from_polar(1.0, k as f64 * std::f64::consts::FRAC_PI_2);
            prop.phase = phi;
            let r = run(&prop, &rho0, step, steps - 1, 1, |_| [ONE, ONE, ONE]);
            let last = &r.sums[0];
            dc = dc + last.mapv(|z| z * 0.25);
            plus_c = plus_c + last.mapv(|z| z * phi.conj() * 0.25);
            minus_c = minus_c + last.mapv(|z| z * phi * 0.25);
            max_trace_error = max_trace_error.max(r.max_trace_error);
            max_herm = max_herm.max(r.max_herm);
        }
        Ok(TimeDomainResult {
            fourier_dc: dc,
            fourier_plus: plus_c,
            fourier_minus: minus_c,
            integration_span: steps as f64 * step,
            dt: step,
            steps: 4 * steps,
            max_trace_error,
            max_hermiticity_defect: max_herm,
        })
    }
}

struct RunOutput {
    sums: [CMatrix; 3],
    max_trace_error: f64,
    max_herm: f64,
}

fn run(
    prop: &Propagator,
    rho0: &CMatrix,
    dt: f64,
    settle_steps: usize,
    window_steps: usize,
    weights: impl Fn(f64) -> [C64; 3],
) -> RunOutput {
    let n = rho0.nrows();
    let size = n * n;
    let mut x: Vec<C64> = (0..size).map(|k| rho0[[k % n, k / n]]).collect();
    let mut work: [Vec<C64>; 5] = std::array::from_fn(|_| vec![ZERO; size]);
    let mut sums = [vec![ZERO; size], vec![ZERO; size], vec![ZERO; size]];
    let mut max_trace_error: f64 = 0.0;
    let mut max_herm: f64 = 0.0;
    let total = settle_steps + window_steps;
    for step in 0..total {
        let t = step as f64 * dt;
        prop.rk4_step(t, dt, &mut x, &mut work);
        let tr: C64 = (0..n).map(|k| x[k + n * k]).sum();
        max_trace_error = max_trace_error.max((tr - 1.0).norm());
        if step % 64 == 0 || step + 1 == total {
            max_herm = max_herm.max(hermiticity_defect(&to_matrix(n, &x)));
        }
        if step + 1 > settle_steps {
            let w = weights(t + dt);
            for (s, wk) in sums.iter_mut().zip(w) {
                for (si, xi) in s.iter_mut().zip(&x) {
                    *si += xi * wk;
                }
            }
        }
    }
    RunOutput {
        sums: sums.map(|s| to_matrix(n, &s)),
        max_trace_error,
        max_herm,
    }
}

/// Excited population of a two-level atom driven with coupling `Ω/2`,
/// detuning `Δ`, transit rate `γ` feeding the ground state, and branching `b`.
///
/// With `w = ½ + γ` and pumping rate `R = (Ω²/2) w/(w² + Δ²)`,
/// `n_e = γR / [γ(1 + γ + R) + R(1 - b + γ)]`. This is already normalized to
/// the total atom number including population lost to other levels.
pub fn two_level_excited_population(rabi: f64, detuning: f64, gamma: f64, branching: f64) -> f64 {
    let w = 0.5 + gamma;
    let r = 0.5 * rabi * rabi * w / (w * w + detuning * detuning);
    gamma * r / (gamma * (1.0 + gamma + r) + r * (1.0 - branching + gamma))
}

/// Closed-form steady state of the driven two-level atom.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoLevelSteadyState {
    pub n_g: f64,
    pub n_e: f64,
    /// `σ⁰_ge`.
    pub coherence: C64,
}

pub fn two_level_steady_state(
    rabi: f64,
    detuning: f64,
    gamma: f64,
    branching: f64,
) -> TwoLevelSteadyState {
    let w = 0.5 + gamma;
    let r = 0.5 * rabi * rabi * w / (w * w + detuning * detuning);
    let n_e = two_level_excited_population(rabi, detuning, gamma, branching);
    let n_g = n_e * (1.0 + gamma + r) / r.max(f64::MIN_POSITIVE);
    let n_g = if rabi == 0.0 { 1.0 } else { n_g };
    let coherence =
        C64::new(detuning, w) * (0.5 * rabi * (n_g - n_e) / (w * w + detuning * detuning));
    TwoLevelSteadyState {
        n_g,
        n_e,
        coherence,
    }
}

/// Two-level parameters for [`two_level_probe_coherence`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoLevelProbe {
    /// Pump Rabi frequency (coupling `Ω/2`).
    pub rabi: f64,
    /// Probe Rabi frequency (source `i[Ω₂|g⟩⟨e|/2, σ⁰]`).
    pub probe_rabi: f64,
    pub detuning: f64,
    pub gamma: f64,
    pub branching: f64,
}

/// Probe sideband coherence `σ⁺_ge` of the two-level atom at detuning `δ`.
///
/// The eg and ge sideband equations are eliminated in favour of the
/// population difference, leaving a 2×2 system for `σ⁺_gg`, `σ⁺_ee` that is
/// solved by Cramer's rule.
pub fn two_level_probe_coherence(p: &TwoLevelProbe, delta: f64) -> C64 {
    let TwoLevelProbe {
        rabi,
        probe_rabi,
        detuning,
        gamma,
        branching,
    } = *p;
    let w = 0.5 + gamma;
    let ss = two_level_steady_state(rabi, detuning, gamma, branching);
    let v0 = ss.coherence.conj();
    let half = 0.5 * probe_rabi;
    let s_gg = I * half * v0;
    let s_ge = I * half * (ss.n_e - ss.n_g);
    let s_ee = -I * half * v0;
    let dp = C64::new(w, detuning + delta);
    let dq = C64::new(w, delta - detuning);
    let m = (1.0 / dp + 1.0 / dq) * (0.25 * rabi * rabi);
    let sp = I * (0.5 * rabi) * s_ge / dp;
    let a11 = -m - C64::new(gamma, delta);
    let a12 = m + branching;
    let a21 = m;
    let a22 = -m - C64::new(1.0 + gamma, delta);
    let r1 = s_gg + sp;
    let r2 = s_ee - sp;
    let det = a11 * a22 - a12 * a21;
    let x_gg = (r1 * a22 - a12 * r2) / det;
    let x_ee = (a11 * r2 - a21 * r1) / det;
    (I * (0.5 * rabi) * (x_gg - x_ee) - s_ge) / dp
}

/// Closed-form two-level probe absorption `Im σ⁺_ge` for a closed
/// transition and unit probe Rabi frequency.
pub fn mollow_probe_absorption(rabi: f64, detuning: f64, delta: f64, gamma: f64) -> f64 {
    two_level_probe_coherence(
        &TwoLevelProbe {
            rabi,
            probe_rabi: 1.0,
            detuning,
            gamma,
            branching: 1.0,
        },
        delta,
    )
    .im
}

/// Relative Frobenius distance `‖a - b‖ / ‖b‖`.
pub fn relative_difference(a: &CMatrix, b: &CMatrix) -> f64 {
    let num: f64 = a
        .iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt();
    let den: f64 = b.iter().map(|y| y.norm_sqr()).sum::<f64>().sqrt();
    if den == 0.0 {
        num
    } else {
        num / den
    }
}

/// Trace of a matrix as a real number; convenience for oracle reports.
pub fn real_trace(m: &CMatrix) -> f64 {
    trace(m).re
}
