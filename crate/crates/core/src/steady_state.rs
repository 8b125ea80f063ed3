//! Pump-dressed steady state σ⁰ and its normalization to the total atom number.

use ndarray::s;

use crate::error::{Error, Result};
use crate::liouville::{lindblad_superop, unvectorize, vectorize, ShiftedSolver};
use crate::matrix::{
    hermitian_eigenvalues, hermiticity_defect, trace, trace_product, CMatrix, ZERO,
};
use crate::system::OperatorSet;

/// Smallest transit rate accepted; at γ = 0 the steady-state system is singular.
pub const MIN_GAMMA: f64 = 1e-8;

/// Normalized steady state of the pump-only master equation.
#[derive(Debug, Clone)]
pub struct DensityState {
    pub matrix: CMatrix,
    pub populations_g: Vec<f64>,
    pub populations_e: Vec<f64>,
    /// Population accumulated in levels outside the transition.
    pub n_ext: f64,
    /// Factor `N` the raw solution was divided by.
    pub normalization: f64,
    /// Relative residual of the linear solve.
    pub residual: f64,
    n_ground: usize,
}

impl DensityState {
    /// Ground-level equilibrium `P_g/(2F_g+1)`, the state with no pump.
    pub fn isotropic(ops: &OperatorSet) -> Self {
        Self::from_matrix(ops.rho0(), ops.n_ground(), 0.0, 1.0, 0.0)
    }

    fn from_matrix(
        matrix: CMatrix,
        n_ground: usize,
        n_ext: f64,
        normalization: f64,
        residual: f64,
    ) -> Self {
        let n = matrix.nrows();
        let populations_g = (0..n_ground).map(|k| matrix[[k, k]].re).collect();
        let populations_e = (n_ground..n).map(|k| matrix[[k, k]].re).collect();
        DensityState {
            matrix,
            populations_g,
            populations_e,
            n_ext,
            normalization,
            residual,
            n_ground,
        }
    }

    pub fn n_ground(&self) -> usize {
        self.n_ground
    }

    pub fn trace(&self) -> f64 {
        trace(&self.matrix).re
    }

    pub fn ground_population(&self) -> f64 {
        self.populations_g.iter().sum()
    }

    pub fn excited_population(&self) -> f64 {
        self.populations_e.iter().sum()
    }

    pub fn hermiticity_defect(&self) -> f64 {
        hermiticity_defect(&self.matrix)
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.matrix)
    }

    pub fn ground_block(&self) -> CMatrix {
        self.matrix
            .slice(s![..self.n_ground, ..self.n_ground])
            .to_owned()
    }
}

fn check_gamma(ops: &OperatorSet) -> Result<()> {
    let g = ops.transition.gamma;
    if !(g >= MIN_GAMMA) {
        return Err(Error::InvalidInput(format!(
            "transit rate {g:e} below the minimum {MIN_GAMMA:e}"
        )));
    }
    Ok(())
}

/// Solves `L σ = -γ ρ₀` and divides by `N = n_g + n_e[1 + (1-b)/γ]`.
pub fn solve_steady_state(ops: &OperatorSet) -> Result<DensityState> {
    check_gamma(ops)?;
    let solver = ShiftedSolver::new(&lindblad_superop(ops))?;
    steady_state_with_solver(ops, &solver)
}

/// As [`solve_steady_state`], reusing a reduction of the pump superoperator.
pub fn steady_state_with_solver(ops: &OperatorSet, solver: &ShiftedSolver) -> Result<DensityState> {
    check_gamma(ops)?;
    let t = &ops.transition;
    let rhs = vectorize(&ops.rho0().mapv(|z| -z * t.gamma))?;
    let context = format!(
        "steady state, pump rabi {}, B {}, gamma {}",
        ops.pump.rabi, ops.b_field, t.gamma
    );
    let sol = solver.solve(ZERO, &rhs, &context)?;
    let raw = unvectorize(&sol.x);
    // The solve leaves round-off anti-Hermitian parts; remove them.
    let raw = (&raw + &raw.t().mapv(|z| z.conj())).mapv(|z| z * 0.5);
    let ng = ops.n_ground();
    let n_g: f64 = (0..ng).map(|k| raw[[k, k]].re).sum();
    let n_e: f64 = (ng..ops.dim).map(|k| raw[[k, k]].re).sum();
    let leak = (1.0 - t.branching) / t.gamma;
    let norm = n_g + n_e * (1.0 + leak);
    if !(norm > 0.0) || !norm.is_finite() {
        return Err(Error::Singular {
            context: format!("{context}: normalization {norm}"),
        });
    }
    let matrix = raw.mapv(|z| z / norm);
    let n_ext = n_e / norm * leak;
    Ok(DensityState::from_matrix(
        matrix,
        ng,
        n_ext,
        norm,
        sol.residual,
    ))
}

#[derive(Debug, Clone, PartialEq)]
pub struct SteadyStateDiagnostics {
    pub ground_populations: Vec<f64>,
    pub excited_populations: Vec<f64>,
    /// `⟨F_z⟩` over the ground level.
    pub orientation: f64,
    /// Largest modulus among off-diagonal ground-state elements.
    pub max_ground_coherence: f64,
    pub excited_population: f64,
    pub n_ext: f64,
    pub trace: f64,
}

pub fn steady_state_diagnostics(s: &DensityState, ops: &OperatorSet) -> SteadyStateDiagnostics {
    let ng = ops.n_ground();
    let g = s.ground_block();
    let fz = ops.fz.slice(s![..ng, ..ng]).to_owned();
    let orientation = trace_product(&g, &fz).re;
    let mut max_coh: f64 = 0.0;
    for i in 0..ng {
        for j in 0..ng {
            if i != j {
                max_coh = max_coh.max(g[[i, j]].norm());
            }
        }
    }
    SteadyStateDiagnostics {
        ground_populations: s.populations_g.clone(),
        excited_populations: s.populations_e.clone(),
        orientation,
        max_ground_coherence: max_coh,
        excited_population: s.excited_population(),
        n_ext: s.n_ext,
        trace: s.trace(),
    }
}
