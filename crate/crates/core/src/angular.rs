//! Angular-momentum coupling: half-integer quantum numbers, Clebsch-Gordan
//! coefficients and spherical vector components.
//!
//! Phases follow the Condon-Shortley convention throughout. Spherical
//! components of a vector `v` are the expansion coefficients on the spherical
//! basis `ê_{+1} = -(x̂ + iŷ)/√2`, `ê_0 = ẑ`, `ê_{-1} = (x̂ - iŷ)/√2`, i.e.
//! `v = Σ_q v_q ê_q`, which gives
//!
//! ```text
//! v_{+1} = -(x - iy)/√2,   v_0 = z,   v_{-1} = (x + iy)/√2
//! ```
//!
//! For real vectors these coincide with the standard components
//! `∓(x ± iy)/√2`. With this choice the circular vector `(x̂ + iŷ)/√2` maps to
//! `-ê_{+1}`, i.e. a pure σ⁺ vector.

use std::fmt;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// An angular momentum or projection quantum number stored as twice its value,
/// so half-integers are exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const ONE: HalfInt = HalfInt(2);

    pub const fn from_twice(twice: i32) -> Self {
        HalfInt(twice)
    }

    pub const fn from_int(value: i32) -> Self {
        HalfInt(2 * value)
    }

    /// Converts a float that must be an integer or half-integer.
    pub fn from_f64(value: f64) -> Result<Self> {
        let twice = 2.0 * value;
        if !twice.is_finite() || (twice - twice.round()).abs() > 1e-9 {
            return Err(Error::InvalidInput(format!(
                "{value} is not an integer or half-integer"
            )));
        }
        Ok(HalfInt(twice.round() as i32))
    }

    pub const fn twice(self) -> i32 {
        self.0
    }

    pub fn value(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    /// Number of projections `2j + 1`.
    pub fn multiplicity(self) -> usize {
        debug_assert!(self.0 >= 0);
        (self.0 + 1) as usize
    }

    /// Projections `-j, -j+1, ..., j` in increasing order.
    pub fn projections(self) -> impl Iterator<Item = HalfInt> {
        (-self.0..=self.0).step_by(2).map(HalfInt)
    }

    fn same_parity(self, other: HalfInt) -> bool {
        (self.0 - other.0).rem_euclid(2) == 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl std::ops::Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl std::ops::Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

fn check_pair(j: HalfInt, m: HalfInt) -> Result<()> {
    if j.0 < 0 {
        return Err(Error::InvalidInput(format!(
            "negative angular momentum {j}"
        )));
    }
    if !j.same_parity(m) {
        return Err(Error::InvalidInput(format!(
            "projection {m} has the wrong parity for j = {j}"
        )));
    }
    if m.0.abs() > j.0 {
        return Err(Error::InvalidInput(format!("|m| = |{m}| exceeds j = {j}")));
    }
    Ok(())
}

fn factorial(n: i32) -> f64 {
    debug_assert!(n >= 0);
    (2..=n).fold(1.0, |acc, k| acc * f64::from(k))
}

/// Clebsch-Gordan coefficient `⟨j1 m1; j2 m2 | J M⟩` (Condon-Shortley phase).
///
/// Returns 0 when `M ≠ m1 + m2` or the triangle rule fails. Evaluated with
/// Racah's closed-form sum; exact to double precision for the momenta used
/// here (factorial arguments stay well below 170).
pub fn clebsch_gordan(
    j1: HalfInt,
    m1: HalfInt,
    j2: HalfInt,
    m2: HalfInt,
    j: HalfInt,
    m: HalfInt,
) -> Result<f64> {
    check_pair(j1, m1)?;
    check_pair(j2, m2)?;
    check_pair(j, m)?;
    if m1 + m2 != m {
        return Ok(0.0);
    }
    if j.0 > j1.0 + j2.0 || j.0 < (j1.0 - j2.0).abs() || !(j1 + j2).same_parity(j) {
        return Ok(0.0);
    }
    // All combinations below are integers once the checks above pass.
    let h = |twice: i32| twice / 2;
    let a = h(j1.0 + j2.0 - j.0);
    let b = h(j1.0 - j2.0 + j.0);
    let c = h(-j1.0 + j2.0 + j.0);
    let d = h(j1.0 + j2.0 + j.0) + 1;
    let prefactor =
        (f64::from(j.0 + 1) * factorial(a) * factorial(b) * factorial(c) / factorial(d)).sqrt();
    let norms = (factorial(h(j1.0 + m1.0))
        * factorial(h(j1.0 - m1.0))
        * factorial(h(j2.0 + m2.0))
        * factorial(h(j2.0 - m2.0))
        * factorial(h(j.0 + m.0))
        * factorial(h(j.0 - m.0)))
    .sqrt();

    let e = h(j.0 - j2.0 + m1.0);
    let f = h(j.0 - j1.0 - m2.0);
    let k_min = 0.max(-e).max(-f);
    let k_max = a.min(h(j1.0 - m1.0)).min(h(j2.0 + m2.0));
    let sum: f64 = (k_min..=k_max)
        .map(|k| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign / (factorial(k)
                * factorial(a - k)
                * factorial(h(j1.0 - m1.0) - k)
                * factorial(h(j2.0 + m2.0) - k)
                * factorial(e + k)
                * factorial(f + k))
        })
        .sum();
    Ok(prefactor * norms * sum)
}

/// A vector given by its spherical components `q = -1, 0, +1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalVector {
    pub q_minus: C64,
    pub q_zero: C64,
    pub q_plus: C64,
}

impl SphericalVector {
    pub const fn new(q_minus: C64, q_zero: C64, q_plus: C64) -> Self {
        SphericalVector {
            q_minus,
            q_zero,
            q_plus,
        }
    }

    /// Component `q ∈ {-1, 0, 1}`.
    pub fn component(&self, q: i32) -> C64 {
        match q {
            -1 => self.q_minus,
            0 => self.q_zero,
            1 => self.q_plus,
            _ => panic!("spherical component index {q} out of range"),
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.q_minus.norm_sqr() + self.q_zero.norm_sqr() + self.q_plus.norm_sqr()
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm_sqr().sqrt();
        if n < 1e-300 || !n.is_finite() {
            return Err(Error::InvalidInput(
                "polarization vector has zero or non-finite norm".into(),
            ));
        }
        Ok(SphericalVector::new(
            self.q_minus / n,
            self.q_zero / n,
            self.q_plus / n,
        ))
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() <= 1e-12
    }

    pub fn to_cartesian(&self) -> [C64; 3] {
        spherical_to_cartesian(self)
    }
}

/// Spherical components of the Cartesian vector `(x, y, z)`.
pub fn cartesian_to_spherical(x: C64, y: C64, z: C64) -> SphericalVector {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let iy = C64::i() * y;
    SphericalVector {
        q_minus: (x + iy) * s,
        q_zero: z,
        q_plus: -(x - iy) * s,
    }
}

/// Inverse of [`cartesian_to_spherical`].
pub fn spherical_to_cartesian(v: &SphericalVector) -> [C64; 3] {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    [
        (v.q_minus - v.q_plus) * s,
        -C64::i() * (v.q_minus + v.q_plus) * s,
        v.q_zero,
    ]
}
