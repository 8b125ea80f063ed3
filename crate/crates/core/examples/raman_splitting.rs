//! Absorption spectra in a magnetic field: crossed linear polarizations give a
//! resonance at δ = 0 plus Raman satellites at ±2β_g B, while σ⁺ pump and σ⁻
//! probe give a single resonance that follows the field.

use coherence_spectra::observables::absorption;
use coherence_spectra::scan::local_extrema;
use coherence_spectra::{
    polarization, FieldSpec, OperatorSet, ProbeSolver, Projection, SphericalVector, TransitionSpec,
};

fn resonances(
    fg: f64,
    fe: f64,
    pump: SphericalVector,
    probe: SphericalVector,
    b: f64,
) -> coherence_spectra::Result<Vec<String>> {
    let t = TransitionSpec::new(fg, fe)?.with_gamma(1e-3);
    let ops = OperatorSet::new(
        &t,
        &FieldSpec::new(0.3, pump),
        &FieldSpec::new(1.0, probe),
        b,
    )?;
    let solver = ProbeSolver::new(&ops)?;
    let deltas: Vec<f64> = (0..=400).map(|k| -0.04 + 0.0002 * k as f64).collect();
    let alpha = deltas
        .iter()
        .map(|&d| {
            Ok(absorption(
                &solver.solve(d)?,
                &ops,
                &ops.probe,
                Projection::Conjugate,
            ))
        })
        .collect::<coherence_spectra::Result<Vec<f64>>>()?;
    let ext = local_extrema(&deltas, &alpha);
    let top = ext.iter().map(|e| e.prominence).fold(0.0, f64::max);
    Ok(ext
        .iter()
        .filter(|e| e.prominence > 0.05 * top)
        .map(|e| {
            format!(
                "{} {:+.4}",
                if e.is_max { "max" } else { "min" },
                e.position
            )
        })
        .collect())
}

fn main() -> coherence_spectra::Result<()> {
    for (fg, fe) in [(3.0, 4.0), (2.0, 1.0)] {
        println!(
            "{fg} -> {fe}, lin x / lin y, B = 0.01: {:?}",
            resonances(fg, fe, polarization::lin_x(), polarization::lin_y(), 0.01)?
        );
        for b in [0.005, 0.01, 0.015] {
            println!(
                "{fg} -> {fe}, sigma+ / sigma-, B = {b}: {:?}",
                resonances(
                    fg,
                    fe,
                    polarization::sigma_plus(),
                    polarization::sigma_minus(),
                    b
                )?
            );
        }
    }
    Ok(())
}
