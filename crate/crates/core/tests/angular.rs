use std::collections::HashMap;

use coherence_spectra::angular::{cartesian_to_spherical, spherical_to_cartesian};
use coherence_spectra::{clebsch_gordan, HalfInt};
use num_complex::Complex64 as C64;
use proptest::prelude::*;

fn h(twice: i32) -> HalfInt {
    HalfInt::from_twice(twice)
}

/// Coupled states `|J M⟩` built in the product basis by lowering from the
/// stretched state and orthogonalizing each new top state against the
/// higher-J multiplets. Keys and product indices use twice the quantum numbers.
fn coupled_states(tj1: i32, tj2: i32) -> HashMap<(i32, i32), Vec<f64>> {
    let n2 = (tj2 + 1) as usize;
    let dim = (tj1 + 1) as usize * n2;
    let index = |tm1: i32, tm2: i32| ((tm1 + tj1) / 2) as usize * n2 + ((tm2 + tj2) / 2) as usize;
    let lower = |v: &[f64]| {
        let mut out = vec![0.0; dim];
        for tm1 in (-tj1..=tj1).step_by(2) {
            for tm2 in (-tj2..=tj2).step_by(2) {
                let c = v[index(tm1, tm2)];
                if c == 0.0 {
                    continue;
                }
                let step = |tj: i32, tm: i32| {
                    let (j, m) = (tj as f64 / 2.0, tm as f64 / 2.0);
                    (j * (j + 1.0) - m * (m - 1.0)).sqrt()
                };
                if tm1 > -tj1 {
                    out[index(tm1 - 2, tm2)] += c * step(tj1, tm1);
                }
                if tm2 > -tj2 {
                    out[index(tm1, tm2 - 2)] += c * step(tj2, tm2);
                }
            }
        }
        let n = out.iter().map(|x| x * x).sum::<f64>().sqrt();
        out.iter_mut().for_each(|x| *x /= n);
        out
    };
    let mut states = HashMap::new();
    let mut tj = tj1 + tj2;
    while tj >= (tj1 - tj2).abs() {
        let mut top = vec![0.0; dim];
        top[index(tj1, tj - tj1)] = 1.0;
        for tjp in (tj + 2..=tj1 + tj2).step_by(2) {
            let other: &Vec<f64> = &states[&(tjp, tj)];
            let overlap: f64 = top.iter().zip(other).map(|(a, b)| a * b).sum();
            top.iter_mut()
                .zip(other)
                .for_each(|(a, b)| *a -= overlap * b);
        }
        let n = top.iter().map(|x| x * x).sum::<f64>().sqrt();
        let sign = top[index(tj1, tj - tj1)].signum();
        top.iter_mut().for_each(|x| *x *= sign / n);
        let mut tm = tj;
        let mut v = top;
        loop {
            states.insert((tj, tm), v.clone());
            if tm == -tj {
                break;
            }
            v = lower(&v);
            tm -= 2;
        }
        tj -= 2;
    }
    states
}

#[test]
fn clebsch_gordan_matches_lowering_construction() {
    let mut worst: f64 = 0.0;
    for tj1 in 0..=8 {
        for tj2 in 0..=8 {
            let n2 = (tj2 + 1) as usize;
            for ((tj, tm), v) in coupled_states(tj1, tj2) {
                for tm1 in (-tj1..=tj1).step_by(2) {
                    for tm2 in (-tj2..=tj2).step_by(2) {
                        let idx = ((tm1 + tj1) / 2) as usize * n2 + ((tm2 + tj2) / 2) as usize;
                        let cg =
                            clebsch_gordan(h(tj1), h(tm1), h(tj2), h(tm2), h(tj), h(tm)).unwrap();
                        worst = worst.max((cg - v[idx]).abs());
                    }
                }
            }
        }
    }
    assert!(worst < 1e-12, "max deviation {worst:e}");
}

#[test]
fn known_values() {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let half = h(1);
    let cg = |a, b, c, d, e, f| clebsch_gordan(h(a), h(b), h(c), h(d), h(e), h(f)).unwrap();
    assert!((cg(1, 1, 1, -1, 0, 0) - s).abs() < 1e-15);
    assert!((cg(1, -1, 1, 1, 0, 0) + s).abs() < 1e-15);
    assert!((cg(2, 0, 2, 0, 4, 0) - (2.0f64 / 3.0).sqrt()).abs() < 1e-15);
    assert!((cg(2, 0, 2, 0, 0, 0) + (1.0f64 / 3.0).sqrt()).abs() < 1e-15);
    assert_eq!(
        clebsch_gordan(half, half, half, half, h(0), h(0)).unwrap(),
        0.0
    );
}

#[test]
fn rejects_inconsistent_projection() {
    assert!(clebsch_gordan(h(2), h(4), h(2), h(0), h(2), h(4)).is_err());
    assert!(clebsch_gordan(h(2), h(1), h(2), h(0), h(2), h(1)).is_err());
}

fn momentum() -> impl Strategy<Value = i32> {
    0..=8i32
}

proptest! {
    #[test]
    fn clebsch_gordan_orthogonality(tj1 in momentum(), tj2 in momentum(), a in 0usize..100, b in 0usize..100) {
        let mut pairs = Vec::new();
        let mut tj = tj1 + tj2;
        while tj >= (tj1 - tj2).abs() {
            for tm in (-tj..=tj).step_by(2) {
                pairs.push((tj, tm));
            }
            tj -= 2;
        }
        let (tj, tm) = pairs[a % pairs.len()];
        let (tjp, tmp) = pairs[b % pairs.len()];
        let mut sum = 0.0;
        for tm1 in (-tj1..=tj1).step_by(2) {
            for tm2 in (-tj2..=tj2).step_by(2) {
                sum += clebsch_gordan(h(tj1), h(tm1), h(tj2), h(tm2), h(tj), h(tm)).unwrap()
                    * clebsch_gordan(h(tj1), h(tm1), h(tj2), h(tm2), h(tjp), h(tmp)).unwrap();
            }
        }
        let expect = if (tj, tm) == (tjp, tmp) { 1.0 } else { 0.0 };
        prop_assert!((sum - expect).abs() < 1e-12);
    }

    #[test]
    fn spherical_round_trip(c in prop::array::uniform6(-10.0f64..10.0)) {
        let (x, y, z) = (C64::new(c[0], c[1]), C64::new(c[2], c[3]), C64::new(c[4], c[5]));
        let back = spherical_to_cartesian(&cartesian_to_spherical(x, y, z));
        for (u, v) in back.iter().zip([x, y, z]) {
            prop_assert!((u - v).norm() < 1e-14 * (1.0 + v.norm()));
        }
    }

    #[test]
    fn normalization_preserved(c in prop::array::uniform6(-1.0f64..1.0)) {
        let v = cartesian_to_spherical(C64::new(c[0], c[1]), C64::new(c[2], c[3]), C64::new(c[4], c[5]));
        prop_assume!(v.norm_sqr() > 1e-6);
        let n = v.normalized().unwrap();
        prop_assert!(n.is_normalized());
        let cart = n.to_cartesian();
        let norm: f64 = cart.iter().map(|z| z.norm_sqr()).sum();
        prop_assert!((norm - 1.0).abs() < 1e-12);
    }
}
