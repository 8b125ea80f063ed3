//! Cross-checks of the solver: the driven two-level closed form and direct
//! time integration of the master equation.

use coherence_spectra::observables::absorption;
use coherence_spectra::oracles::{
    integrate_master_equation, max_time_step, mollow_probe_absorption, relative_difference,
};
use coherence_spectra::validation::run_validation;
use coherence_spectra::{
    polarization, FieldSpec, OperatorSet, ProbeSolver, Projection, RabiNormalization,
    TransitionSpec,
};

fn main() -> coherence_spectra::Result<()> {
    // Strongly driven two-level atom: Mollow-type gain and absorption sidebands.
    let t = TransitionSpec::new(0.0, 1.0)?
        .with_gamma(1e-3)
        .with_rabi_normalization(RabiNormalization::StretchedState);
    let rabi = 6.0;
    let ops = OperatorSet::new(
        &t,
        &FieldSpec::new(rabi, polarization::sigma_plus()),
        &FieldSpec::new(1.0, polarization::sigma_plus()),
        0.0,
    )?;
    let solver = ProbeSolver::new(&ops)?;
    println!("two-level, Rabi {rabi}: solver vs closed form");
    for d in [-7.0, -6.0, -5.0, 0.0, 5.0, 6.0, 7.0] {
        let a = absorption(&solver.solve(d)?, &ops, &ops.probe, Projection::Conjugate);
        println!(
            "  delta {d:+.1}  {a:+.6e}  {:+.6e}",
            mollow_probe_absorption(rabi, 0.0, d, t.gamma)
        );
    }

    // Time-domain check of the full sideband matrix on 1 -> 2.
    let t = TransitionSpec::new(1.0, 2.0)?.with_gamma(0.1);
    let ops = OperatorSet::new(
        &t,
        &FieldSpec::new(0.4, polarization::lin_x()),
        &FieldSpec::new(1e-3, polarization::lin_y()),
        0.01,
    )?;
    let delta = 0.2;
    let pr = ProbeSolver::new(&ops)?.solve(delta)?;
    let span = 14.0 / t.gamma + std::f64::consts::TAU / delta;
    let r = integrate_master_equation(&ops, delta, span, max_time_step(&ops, delta))?;
    println!(
        "time domain, {} steps: relative sideband difference {:.2e}, trace drift {:.1e}",
        r.steps,
        relative_difference(&r.fourier_plus, &pr.matrix),
        r.max_trace_error
    );

    for check in run_validation(true)? {
        println!("{check}");
    }
    Ok(())
}
