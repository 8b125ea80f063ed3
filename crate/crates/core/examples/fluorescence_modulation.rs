//! Fluorescence modulated at the beat frequency δ versus magnetic field:
//! resonances at B = 0 and at the Raman fields ±δ/2, with opposite signs for
//! 3 → 4 and 2 → 1.

use coherence_spectra::observables::fluorescence_modulation;
use coherence_spectra::{polarization, FieldSpec, OperatorSet, ProbeSolver, TransitionSpec};

fn main() -> coherence_spectra::Result<()> {
    let delta = 0.2 / 5.9;
    for (fg, fe) in [(3.0, 4.0), (2.0, 1.0)] {
        let t = TransitionSpec::new(fg, fe)?.with_gamma(1e-3);
        println!("{fg} -> {fe}, delta = {delta:.4}");
        for k in -12..=12 {
            let b = 0.0025 * k as f64;
            let ops = OperatorSet::new(
                &t,
                &FieldSpec::new(0.3, polarization::lin_x()),
                &FieldSpec::new(1.0, polarization::lin_x()),
                b,
            )?;
            let f = fluorescence_modulation(&ProbeSolver::new(&ops)?.solve(delta)?, &ops);
            println!("  B {b:+.4}  {f:.5e}");
        }
    }
    Ok(())
}
