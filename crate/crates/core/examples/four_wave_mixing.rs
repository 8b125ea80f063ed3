//! Four-wave-mixing power at 2ω₁ - ω₂: a sub-natural coherence peak for
//! crossed linear polarizations, nothing at all for σ⁺ pump and σ⁻ probe.

use coherence_spectra::observables::fwm_power;
use coherence_spectra::{polarization, FieldSpec, OperatorSet, ProbeSolver, TransitionSpec};

fn main() -> coherence_spectra::Result<()> {
    let t = TransitionSpec::new(1.0, 2.0)?.with_gamma(1e-3);
    for (name, pump, probe) in [
        (
            "lin x / lin y",
            polarization::lin_x(),
            polarization::lin_y(),
        ),
        (
            "sigma+ / sigma-",
            polarization::sigma_plus(),
            polarization::sigma_minus(),
        ),
    ] {
        let ops = OperatorSet::new(
            &t,
            &FieldSpec::new(0.4, pump),
            &FieldSpec::new(1.0, probe),
            0.0,
        )?;
        let solver = ProbeSolver::new(&ops)?;
        println!("{name}");
        for d in [-1.0, -0.01, -0.002, 0.0, 0.002, 0.01, 1.0] {
            println!(
                "  delta {d:+.3}  fwm {:.4e}",
                fwm_power(&solver.solve(d)?, &ops)
            );
        }
    }
    Ok(())
}
