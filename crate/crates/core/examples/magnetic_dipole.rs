//! Oscillating ground-state magnetization induced at the beat frequency,
//! versus magnetic field, for π and crossed-linear pumping.

use coherence_spectra::observables::magnetic_dipole;
use coherence_spectra::{polarization, FieldSpec, OperatorSet, ProbeSolver, TransitionSpec};

fn main() -> coherence_spectra::Result<()> {
    let delta = 0.01;
    for (fg, fe) in [(1.0, 2.0), (0.0, 1.0)] {
        let t = TransitionSpec::new(fg, fe)?.with_gamma(1e-3);
        for (name, pump, probe) in [
            ("pi / lin x", polarization::pi(), polarization::lin_x()),
            (
                "lin x / lin y",
                polarization::lin_x(),
                polarization::lin_y(),
            ),
        ] {
            println!("{fg} -> {fe}, {name}, delta = {delta}");
            for k in -6..=6 {
                let b = 0.0025 * k as f64;
                let ops = OperatorSet::new(
                    &t,
                    &FieldSpec::new(0.01, pump),
                    &FieldSpec::new(1.0, probe),
                    b,
                )?;
                let m = magnetic_dipole(&ProbeSolver::new(&ops)?.solve(delta)?, &ops);
                println!("  B {b:+.4}  |M| {m:.4e}");
            }
        }
    }
    Ok(())
}
