//! Self-checks of the solver against closed forms and time-domain integration.

use std::fmt;

use crate::error::Result;
use crate::matrix::{dagger, hermitian_eigenvalues, max_abs, CMatrix};
use crate::observables::{
    absorption, linear_absorption, linear_absorption_closed_form, Projection,
};
use crate::oracles::{
    integrate_master_equation, max_time_step, mollow_probe_absorption, relative_difference,
};
use crate::probe_response::ProbeSolver;
use crate::steady_state::solve_steady_state;
use crate::system::{polarization, FieldSpec, OperatorSet, RabiNormalization, TransitionSpec};
use crate::SphericalVector;

/// Outcome of one check: the worst deviation found and its tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub deviation: f64,
    pub tolerance: f64,
}

impl Check {
    fn new(name: impl Into<String>, deviation: f64, tolerance: f64) -> Self {
        Check {
            name: name.into(),
            deviation,
            tolerance,
        }
    }

    pub fn passed(&self) -> bool {
        self.deviation <= self.tolerance
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: deviation {:.3e} (tolerance {:.1e})",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.deviation,
            self.tolerance
        )
    }
}

fn transitions(quick: bool) -> Vec<(f64, f64)> {
    if quick {
        vec![(0.0, 1.0), (1.0, 2.0), (2.0, 1.0), (1.0, 1.0)]
    } else {
        vec![
            (0.0, 1.0),
            (1.0, 0.0),
            (0.5, 1.5),
            (1.0, 1.0),
            (1.0, 2.0),
            (2.0, 1.0),
            (1.5, 1.5),
            (2.0, 3.0),
            (3.0, 4.0),
            (4.0, 3.0),
        ]
    }
}

fn field_pairs() -> Vec<(&'static str, SphericalVector, SphericalVector)> {
    vec![
        ("lin_x/lin_y", polarization::lin_x(), polarization::lin_y()),
        ("pi/lin_x", polarization::pi(), polarization::lin_x()),
        (
            "sigma+/sigma-",
            polarization::sigma_plus(),
            polarization::sigma_minus(),
        ),
    ]
}

fn ops(
    t: &TransitionSpec,
    rabi: f64,
    pump: SphericalVector,
    probe: SphericalVector,
    b: f64,
) -> Result<OperatorSet> {
    OperatorSet::new(
        t,
        &FieldSpec::new(rabi, pump),
        &FieldSpec::new(1.0, probe),
        b,
    )
}

/// `Σ_q Q_q† Q_q` is the excited-level projector.
fn completeness(quick: bool) -> Result<Check> {
    let mut worst: f64 = 0.0;
    for (fg, fe) in transitions(quick) {
        let t = TransitionSpec::new(fg, fe)?;
        let o = ops(&t, 0.0, polarization::lin_x(), polarization::lin_y(), 0.0)?;
        let sum: CMatrix =
            o.q.iter()
                .map(|q| dagger(q).dot(q))
                .fold(CMatrix::zeros((o.dim, o.dim)), |a, b| a + b);
        worst = worst.max(max_abs(&(&sum - &o.pe)));
    }
    Ok(Check::new("dipole operator completeness", worst, 1e-12))
}

/// Trace balance, Hermiticity and positivity of the steady state.
fn physicality(quick: bool) -> Result<Check> {
    let mut worst: f64 = 0.0;
    for (fg, fe) in transitions(quick) {
        for b in [1.0, 0.6] {
            let t = TransitionSpec::new(fg, fe)?
                .with_branching(b)
                .with_gamma(1e-2);
            for (_, pump, probe) in field_pairs() {
                let o = ops(&t, 0.7, pump, probe, 0.02)?;
                let s = solve_steady_state(&o)?;
                let min_eig = hermitian_eigenvalues(&s.matrix)[0];
                worst = worst
                    .max((s.trace() + s.n_ext - 1.0).abs())
                    .max(s.hermiticity_defect())
                    .max((-min_eig).max(0.0));
            }
        }
    }
    Ok(Check::new(
        "steady-state trace, hermiticity, positivity",
        worst,
        1e-10,
    ))
}

/// Driven two-level absorption against its closed form.
fn two_level(quick: bool) -> Result<Check> {
    let t = TransitionSpec::new(0.0, 1.0)?
        .with_gamma(0.01)
        .with_rabi_normalization(RabiNormalization::StretchedState);
    let n = if quick { 41 } else { 401 };
    let mut worst: f64 = 0.0;
    for (rabi, det) in [(0.3, 0.0), (4.0, 0.0), (2.0, 1.1)] {
        let o = OperatorSet::new(
            &t,
            &FieldSpec::new(rabi, polarization::sigma_plus()).with_detuning(det),
            &FieldSpec::new(1.0, polarization::sigma_plus()),
            0.0,
        )?;
        let solver = ProbeSolver::new(&o)?;
        for k in 0..n {
            let delta = -8.0 + 16.0 * k as f64 / (n - 1) as f64;
            let a = absorption(&solver.solve(delta)?, &o, &o.probe, Projection::Conjugate);
            let exact = mollow_probe_absorption(rabi, det, delta, t.gamma);
            worst = worst.max((a - exact).abs() / exact.abs().max(1e-3));
        }
    }
    Ok(Check::new("two-level closed form", worst, 1e-10))
}

/// Pump-off absorption against the Lorentzian.
fn linear_lorentzian(quick: bool) -> Result<Check> {
    let mut worst: f64 = 0.0;
    for (fg, fe) in transitions(quick) {
        let t = TransitionSpec::new(fg, fe)?.with_gamma(0.01);
        for (_, pump, probe) in field_pairs() {
            let o = ops(&t, 0.0, pump, probe, 0.0)?;
            for delta in [-2.0, -0.1, 0.0, 0.05, 1.0] {
                let a = linear_absorption(&o, delta)?;
                let exact = linear_absorption_closed_form(&o, delta);
                worst = worst.max((a - exact).abs() / exact.abs());
            }
        }
    }
    Ok(Check::new("pump-off Lorentzian", worst, 1e-10))
}

/// Probe sideband against direct integration of the master equation.
fn time_domain(quick: bool) -> Result<Check> {
    let mut cases = vec![(1.0, 2.0, 0.3, 0.0)];
    if !quick {
        cases.extend([
            (2.0, 1.0, 0.2, 0.05),
            (1.0, 1.0, 0.0, 0.03),
            (0.5, 1.5, -0.4, 0.02),
        ]);
    }
    let mut worst: f64 = 0.0;
    for (fg, fe, delta, b) in cases {
        let t = TransitionSpec::new(fg, fe)?.with_gamma(0.1);
        let o = OperatorSet::new(
            &t,
            &FieldSpec::new(0.6, polarization::lin_x()),
            &FieldSpec::new(1e-3, polarization::lin_y()),
            b,
        )?;
        let pr = ProbeSolver::new(&o)?.solve(delta)?;
        let r = integrate_master_equation(&o, delta, 250.0, max_time_step(&o, delta))?;
        worst = worst.max(relative_difference(&r.fourier_plus, &pr.matrix));
    }
    Ok(Check::new("time-domain integration", worst, 1e-4))
}

/// Runs all checks; `quick` uses fewer transitions, points and trajectories.
pub fn run_validation(quick: bool) -> Result<Vec<Check>> {
    Ok(vec![
        completeness(quick)?,
        physicality(quick)?,
        two_level(quick)?,
        linear_lorentzian(quick)?,
        time_domain(quick)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_validation_passes() {
        for c in run_validation(true).unwrap() {
            assert!(c.passed(), "{c}");
        }
    }
}
