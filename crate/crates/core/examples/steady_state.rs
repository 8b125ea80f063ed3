//! Pump-dressed ground state: optical pumping into the stretched state with
//! σ⁺ light and into a dark superposition with linear light on 2 → 1.

use coherence_spectra::steady_state::steady_state_diagnostics;
use coherence_spectra::{
    polarization, solve_steady_state, FieldSpec, OperatorSet, SphericalVector, TransitionSpec,
};

fn report(
    fg: f64,
    fe: f64,
    pol: SphericalVector,
    name: &str,
    gamma: f64,
) -> coherence_spectra::Result<()> {
    let t = TransitionSpec::new(fg, fe)?.with_gamma(gamma);
    let ops = OperatorSet::new(
        &t,
        &FieldSpec::new(1.0, pol),
        &FieldSpec::new(1.0, polarization::lin_y()),
        0.0,
    )?;
    let s = solve_steady_state(&ops)?;
    let d = steady_state_diagnostics(&s, &ops);
    let pops: Vec<String> = d
        .ground_populations
        .iter()
        .map(|p| format!("{p:.4}"))
        .collect();
    println!(
        "{fg} -> {fe}, {name}, gamma {gamma:e}: ground [{}], <F_z> {:+.4}, max coherence {:.4}, excited {:.2e}",
        pops.join(", "),
        d.orientation,
        d.max_ground_coherence,
        d.excited_population
    );
    Ok(())
}

fn main() -> coherence_spectra::Result<()> {
    report(1.0, 2.0, polarization::sigma_plus(), "sigma+", 1e-3)?;
    report(1.0, 2.0, polarization::lin_x(), "lin x", 1e-3)?;
    for gamma in [1e-2, 1e-3, 1e-4] {
        report(2.0, 1.0, polarization::lin_x(), "lin x", gamma)?;
    }
    Ok(())
}
