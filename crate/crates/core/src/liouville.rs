//! Liouville-space representation of the master equation and the dense
//! linear solvers used on it.
//!
//! Density matrices are vectorized by stacking columns:
//! `vec(X)[i + n·j] = X[i, j]`, so `vec(A X B) = (Bᵀ ⊗ A) vec(X)`.

use ndarray::{Array1, Array2};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::matrix::{anticommutator, commutator, dagger, CMatrix, I, ONE, ZERO};
use crate::system::OperatorSet;

/// Condition estimates above this are rejected.
pub const MAX_CONDITION: f64 = 1e12;
/// Relative residual accepted from every solve.
pub const RESIDUAL_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct LiouvilleVector {
    pub entries: Array1<C64>,
    dim: usize,
}

impl LiouvilleVector {
    pub fn from_entries(entries: Array1<C64>, dim: usize) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::Dimension {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        Ok(LiouvilleVector { entries, dim })
    }

    /// Dimension of the underlying Hilbert space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn norm(&self) -> f64 {
        norm2(self.entries.as_slice().expect("contiguous"))
    }
}

pub fn vectorize(m: &CMatrix) -> Result<LiouvilleVector> {
    let (r, c) = m.dim();
    if r != c {
        return Err(Error::Dimension {
            expected: r,
            got: c,
        });
    }
    let entries: Array1<C64> = m.t().iter().copied().collect();
    Ok(LiouvilleVector { entries, dim: r })
}

pub fn unvectorize(v: &LiouvilleVector) -> CMatrix {
    let n = v.dim;
    Array2::from_shape_fn((n, n), |(i, j)| v.entries[i + n * j])
}

/// A linear map on density matrices, stored as a dense `n² × n²` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Superoperator {
    pub entries: Array2<C64>,
    dim: usize,
}

impl Superoperator {
    pub fn zeros(dim: usize) -> Self {
        Superoperator {
            entries: Array2::zeros((dim * dim, dim * dim)),
            dim,
        }
    }

    pub fn identity(dim: usize) -> Self {
        Superoperator {
            entries: Array2::from_diag_elem(dim * dim, ONE),
            dim,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Order of the Liouville-space matrix, `n²`.
    pub fn size(&self) -> usize {
        self.dim * self.dim
    }

    /// `X ↦ A X`.
    pub fn left(a: &CMatrix) -> Self {
        let mut s = Self::zeros(a.nrows());
        s.add_left(ONE, a);
        s
    }

    /// `X ↦ X B`.
    pub fn right(b: &CMatrix) -> Self {
        let mut s = Self::zeros(b.nrows());
        s.add_right(ONE, b);
        s
    }

    /// `X ↦ A X B`.
    pub fn sandwich(a: &CMatrix, b: &CMatrix) -> Self {
        let mut s = Self::zeros(a.nrows());
        s.add_sandwich(ONE, a, b);
        s
    }

    pub fn add_left(&mut self, coeff: C64, a: &CMatrix) {
        let n = self.dim;
        for j in 0..n {
            for i in 0..n {
                for k in 0..n {
                    let v = a[[i, k]];
                    if v != ZERO {
                        self.entries[[i + n * j, k + n * j]] += coeff * v;
                    }
                }
            }
        }
    }

    pub fn add_right(&mut self, coeff: C64, b: &CMatrix) {
        let n = self.dim;
        for j in 0..n {
            for l in 0..n {
                let v = b[[l, j]];
                if v == ZERO {
                    continue;
                }
                for i in 0..n {
                    self.entries[[i + n * j, i + n * l]] += coeff * v;
                }
            }
        }
    }

    pub fn add_sandwich(&mut self, coeff: C64, a: &CMatrix, b: &CMatrix) {
        let n = self.dim;
        for j in 0..n {
            for l in 0..n {
                let bv = b[[l, j]];
                if bv == ZERO {
                    continue;
                }
                for i in 0..n {
                    for k in 0..n {
                        let av = a[[i, k]];
                        if av != ZERO {
                            self.entries[[i + n * j, k + n * l]] += coeff * av * bv;
                        }
                    }
                }
            }
        }
    }

    /// Adds `c` to every diagonal entry (the map `X ↦ X + c X`).
    pub fn add_identity(&mut self, c: C64) {
        for k in 0..self.size() {
            self.entries[[k, k]] += c;
        }
    }

    pub fn apply(&self, v: &LiouvilleVector) -> Result<LiouvilleVector> {
        if v.dim != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                got: v.dim,
            });
        }
        Ok(LiouvilleVector {
            entries: self.entries.dot(&v.entries),
            dim: self.dim,
        })
    }

    pub fn apply_matrix(&self, m: &CMatrix) -> Result<CMatrix> {
        Ok(unvectorize(&self.apply(&vectorize(m)?)?))
    }

    pub fn is_finite(&self) -> bool {
        self.entries
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

/// Superoperator of the pump master equation without the ρ₀ feed:
/// `σ ↦ -i[H_rot + V1, σ] - ½{P_e, σ} + b Σ_q Q_q σ Q_q† - γσ`.
pub fn lindblad_superop(ops: &OperatorSet) -> Superoperator {
    assemble(ops, &(&ops.h_rot + &ops.v1))
}

/// As [`lindblad_superop`] with the pump coupling removed from the
/// Hamiltonian.
pub fn lindblad_superop_without_pump(ops: &OperatorSet) -> Superoperator {
    assemble(ops, &ops.h_rot)
}

fn assemble(ops: &OperatorSet, h: &CMatrix) -> Superoperator {
    let t = &ops.transition;
    let mut s = Superoperator::zeros(ops.dim);
    s.add_left(-I, h);
    s.add_right(I, h);
    s.add_left(C64::new(-0.5, 0.0), &ops.pe);
    s.add_right(C64::new(-0.5, 0.0), &ops.pe);
    let b = C64::new(t.branching, 0.0);
    if t.branching != 0.0 {
        for q in &ops.q {
            s.add_sandwich(b, q, &dagger(q));
        }
    }
    s.add_identity(C64::new(-t.gamma, 0.0));
    s
}

/// Direct matrix evaluation of the same right-hand side as
/// [`lindblad_superop`], for Hamiltonian `h`.
pub fn lindblad_action(ops: &OperatorSet, h: &CMatrix, sigma: &CMatrix) -> CMatrix {
    let t = &ops.transition;
    let mut out = commutator(h, sigma).mapv(|z| -I * z);
    out = out - anticommutator(&ops.pe, sigma).mapv(|z| z * 0.5);
    for q in &ops.q {
        out = out + q.dot(sigma).dot(&dagger(q)).mapv(|z| z * t.branching);
    }
    out - sigma.mapv(|z| z * t.gamma)
}

fn norm2(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn norm1(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm()).sum()
}

/// Matrix 1-norm (largest column sum).
fn matrix_norm1(a: &Array2<C64>) -> f64 {
    a.columns()
        .into_iter()
        .map(|c| c.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// A factorization able to solve with the matrix and with its adjoint.
trait Factored {
    fn order(&self) -> usize;
    fn solve_in_place(&self, b: &mut [C64]);
    fn solve_adjoint_in_place(&self, b: &mut [C64]);
}

/// Lower bound on `‖A⁻¹‖₁` by Hager's method with Higham's refinements.
fn inverse_norm1_estimate(f: &impl Factored) -> f64 {
    let n = f.order();
    if n == 0 {
        return 0.0;
    }
    let mut x = vec![C64::new(1.0 / n as f64, 0.0); n];
    let mut est = 0.0;
    let mut last_j = usize::MAX;
    for _ in 0..5 {
        let mut y = x.clone();
        f.solve_in_place(&mut y);
        est = norm1(&y);
        let mut xi: Vec<C64> = y
            .iter()
            .map(|z| if z.norm() > 0.0 { z / z.norm() } else { ONE })
            .collect();
        f.solve_adjoint_in_place(&mut xi);
        let z = xi;
        let (j, zmax) =
            z.iter()
                .enumerate()
                .map(|(k, v)| (k, v.norm()))
                .fold(
                    (0, -1.0),
                    |acc, (k, v)| if v > acc.1 { (k, v) } else { acc },
                );
        let ztx: f64 = z.iter().zip(&x).map(|(a, b)| (a.conj() * b).re).sum();
        if zmax <= ztx || j == last_j {
            break;
        }
        last_j = j;
        x = vec![ZERO; n];
        x[j] = ONE;
    }
    let mut alt: Vec<C64> = (0..n)
        .map(|i| {
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            let mag = if n > 1 {
                1.0 + i as f64 / (n - 1) as f64
            } else {
                1.0
            };
            C64::new(sign * mag, 0.0)
        })
        .collect();
    f.solve_in_place(&mut alt);
    est.max(2.0 * norm1(&alt) / (3.0 * n as f64))
}

/// Dense LU factorization with partial pivoting.
#[derive(Debug, Clone)]
pub struct LuFactorization {
    n: usize,
    lu: Vec<C64>,
    perm: Vec<usize>,
}

impl LuFactorization {
    pub fn new(a: &Array2<C64>) -> Result<Self> {
        let (n, c) = a.dim();
        if n != c {
            return Err(Error::Dimension {
                expected: n,
                got: c,
            });
        }
        let mut lu: Vec<C64> = a.iter().copied().collect();
        let mut perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let (p, pmax) = (k..n)
                .map(|i| (i, lu[i * n + k].norm()))
                .fold((k, -1.0), |acc, v| if v.1 > acc.1 { v } else { acc });
            if !(pmax > 0.0) {
                return Err(Error::Singular {
                    context: format!("zero pivot in column {k}"),
                });
            }
            if p != k {
                for j in 0..n {
                    lu.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
            }
            let pivot = lu[k * n + k];
            for i in (k + 1)..n {
                let m = lu[i * n + k] / pivot;
                if m == ZERO {
                    continue;
                }
                lu[i * n + k] = m;
                for j in (k + 1)..n {
                    let u = lu[k * n + j];
                    lu[i * n + j] -= m * u;
                }
            }
        }
        Ok(LuFactorization { n, lu, perm })
    }
}

impl Factored for LuFactorization {
    fn order(&self) -> usize {
        self.n
    }

    fn solve_in_place(&self, b: &mut [C64]) {
        let n = self.n;
        let mut x: Vec<C64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            let mut acc = x[i];
            for j in 0..i {
                acc -= self.lu[i * n + j] * x[j];
            }
            x[i] = acc;
        }
        for i in (0..n).rev() {
            let mut acc = x[i];
            for j in (i + 1)..n {
                acc -= self.lu[i * n + j] * x[j];
            }
            x[i] = acc / self.lu[i * n + i];
        }
        b.copy_from_slice(&x);
    }

    fn solve_adjoint_in_place(&self, b: &mut [C64]) {
        // Aᴴ = Uᴴ Lᴴ P, so solve Uᴴ w = b, Lᴴ v = w, then x = Pᵀ v.
        let n = self.n;
        let mut w = b.to_vec();
        for i in 0..n {
            let mut acc = w[i];
            for j in 0..i {
                acc -= self.lu[j * n + i].conj() * w[j];
            }
            w[i] = acc / self.lu[i * n + i].conj();
        }
        for i in (0..n).rev() {
            let mut acc = w[i];
            for j in (i + 1)..n {
                acc -= self.lu[j * n + i].conj() * w[j];
            }
            w[i] = acc;
        }
        for (k, &p) in self.perm.iter().enumerate() {
            b[p] = w[k];
        }
    }
}

fn residual_norm(a: &Array2<C64>, shift: C64, x: &[C64], b: &[C64]) -> f64 {
    let mut worst = 0.0;
    for i in 0..x.len() {
        let row = a.row(i);
        let mut acc = shift * x[i] - b[i];
        for (aij, xj) in row.iter().zip(x) {
            acc += aij * xj;
        }
        worst += acc.norm_sqr();
    }
    worst.sqrt()
}

/// Solves `(a + shift·I) x = b` given a factorization, refining once if needed.
fn checked_solve(
    a: &Array2<C64>,
    shift: C64,
    f: &impl Factored,
    a_norm1: f64,
    b: &[C64],
    context: &str,
) -> Result<Vec<C64>> {
    let bnorm = norm2(b);
    if bnorm == 0.0 {
        return Ok(vec![ZERO; b.len()]);
    }
    let cond = a_norm1 * inverse_norm1_estimate(f);
    if !cond.is_finite() || cond > MAX_CONDITION {
        return Err(Error::IllConditioned {
            context: context.to_string(),
            condition: cond,
        });
    }
    let mut x = b.to_vec();
    f.solve_in_place(&mut x);
    let mut res = residual_norm(a, shift, &x, b) / bnorm;
    if res > RESIDUAL_TOLERANCE && res.is_finite() {
        let n = x.len();
        let mut r = vec![ZERO; n];
        for i in 0..n {
            let mut acc = b[i] - shift * x[i];
            for (aij, xj) in a.row(i).iter().zip(&x) {
                acc -= aij * xj;
            }
            r[i] = acc;
        }
        f.solve_in_place(&mut r);
        for (xi, ri) in x.iter_mut().zip(&r) {
            *xi += ri;
        }
        res = residual_norm(a, shift, &x, b) / bnorm;
    }
    if !(res <= RESIDUAL_TOLERANCE) {
        return Err(Error::Residual {
            context: context.to_string(),
            residual: res,
        });
    }
    Ok(x)
}

/// Solution of a Liouville-space linear system with its quality metrics.
#[derive(Debug, Clone)]
pub struct LinearSolution {
    pub x: LiouvilleVector,
    pub residual: f64,
}

/// Solves `L x = rhs` by dense LU with a condition estimate and a residual
/// check.
pub fn solve_linear(l: &Superoperator, rhs: &LiouvilleVector) -> Result<LiouvilleVector> {
    Ok(solve_linear_checked(l, rhs, "liouville solve")?.x)
}

pub fn solve_linear_checked(
    l: &Superoperator,
    rhs: &LiouvilleVector,
    context: &str,
) -> Result<LinearSolution> {
    if rhs.dim != l.dim {
        return Err(Error::Dimension {
            expected: l.dim,
            got: rhs.dim,
        });
    }
    if !l.is_finite() {
        return Err(Error::InvalidInput(format!(
            "non-finite superoperator ({context})"
        )));
    }
    let f = LuFactorization::new(&l.entries).map_err(|e| e.with_context(context))?;
    let b = rhs.entries.to_vec();
    let x = checked_solve(&l.entries, ZERO, &f, matrix_norm1(&l.entries), &b, context)?;
    let residual = residual_norm(&l.entries, ZERO, &x, &b) / norm2(&b).max(f64::MIN_POSITIVE);
    Ok(LinearSolution {
        x: LiouvilleVector {
            entries: Array1::from(x),
            dim: l.dim,
        },
        residual,
    })
}

/// Solver for the family `(L + s·I) x = b` over many shifts `s`.
///
/// `L` is reduced once to upper Hessenberg form `H = Uᴴ L U` by Householder
/// reflections; each shifted system then costs `O(n²)` instead of `O(n³)`.
/// Shared read-only between threads.
#[derive(Debug, Clone)]
pub struct ShiftedSolver {
    original: Array2<C64>,
    hessenberg: Array2<C64>,
    reflectors: Vec<(usize, Vec<C64>)>,
    dim: usize,
}

impl ShiftedSolver {
    pub fn new(l: &Superoperator) -> Result<Self> {
        if !l.is_finite() {
            return Err(Error::InvalidInput("non-finite superoperator".into()));
        }
        let n = l.size();
        let mut h = l.entries.as_standard_layout().into_owned();
        let mut reflectors = Vec::new();
        for k in 0..n.saturating_sub(2) {
            let xnorm = (k + 1..n).map(|i| h[[i, k]].norm_sqr()).sum::<f64>().sqrt();
            let tail = (k + 2..n).map(|i| h[[i, k]].norm_sqr()).sum::<f64>();
            if xnorm == 0.0 || tail == 0.0 {
                continue;
            }
            let x0 = h[[k + 1, k]];
            let phase = if x0.norm() > 0.0 { x0 / x0.norm() } else { ONE };
            let alpha = -phase * xnorm;
            let mut v: Vec<C64> = (k + 1..n).map(|i| h[[i, k]]).collect();
            v[0] -= alpha;
            let vn = norm2(&v);
            for z in v.iter_mut() {
                *z /= vn;
            }
            // Left: H ← (I - 2vvᴴ) H on rows k+1.., columns k.., row by row.
            let hs = h.as_slice_mut().expect("standard layout");
            let mut w = vec![ZERO; n - k];
            for (t, vi) in v.iter().enumerate() {
                let row = &hs[(k + 1 + t) * n + k..(k + 2 + t) * n];
                let c = vi.conj();
                for (wj, hj) in w.iter_mut().zip(row) {
                    *wj += c * hj;
                }
            }
            for (t, vi) in v.iter().enumerate() {
                let row = &mut hs[(k + 1 + t) * n + k..(k + 2 + t) * n];
                let c = vi * 2.0;
                for (hj, wj) in row.iter_mut().zip(&w) {
                    *hj -= c * wj;
                }
            }
            // Right: H ← H (I - 2vvᴴ) on columns k+1...
            for i in 0..n {
                let row = &mut hs[i * n + k + 1..(i + 1) * n];
                let dot = row.iter().zip(&v).fold(ZERO, |acc, (hj, vj)| acc + hj * vj) * 2.0;
                for (hj, vj) in row.iter_mut().zip(&v) {
                    *hj -= dot * vj.conj();
                }
            }
            for i in (k + 2)..n {
                h[[i, k]] = ZERO;
            }
            reflectors.push((k + 1, v));
        }
        Ok(ShiftedSolver {
            original: l.entries.clone(),
            hessenberg: h,
            reflectors,
            dim: l.dim(),
        })
    }

    fn apply_reflectors_adjoint(&self, b: &mut [C64]) {
        for (start, v) in &self.reflectors {
            reflect(b, *start, v);
        }
    }

    fn apply_reflectors(&self, b: &mut [C64]) {
        for (start, v) in self.reflectors.iter().rev() {
            reflect(b, *start, v);
        }
    }

    /// Solves `(L + shift·I) x = rhs`.
    pub fn solve(
        &self,
        shift: C64,
        rhs: &LiouvilleVector,
        context: &str,
    ) -> Result<LinearSolution> {
        if rhs.dim != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                got: rhs.dim,
            });
        }
        let f = HessenbergLu::new(&self.hessenberg, shift).map_err(|e| e.with_context(context))?;
        let b = rhs.entries.to_vec();
        let bnorm = norm2(&b);
        if bnorm == 0.0 {
            return Ok(LinearSolution {
                x: LiouvilleVector {
                    entries: Array1::zeros(b.len()),
                    dim: self.dim,
                },
                residual: 0.0,
            });
        }
        let cond = f.norm1 * inverse_norm1_estimate(&f);
        if !cond.is_finite() || cond > MAX_CONDITION {
            return Err(Error::IllConditioned {
                context: context.to_string(),
                condition: cond,
            });
        }
        let mut x = b.clone();
        self.apply_reflectors_adjoint(&mut x);
        f.solve_in_place(&mut x);
        self.apply_reflectors(&mut x);
        let mut res = residual_norm(&self.original, shift, &x, &b) / bnorm;
        if res > RESIDUAL_TOLERANCE && res.is_finite() {
            let n = x.len();
            let mut r = vec![ZERO; n];
            for i in 0..n {
                let mut acc = b[i] - shift * x[i];
                for (aij, xj) in self.original.row(i).iter().zip(&x) {
                    acc -= aij * xj;
                }
                r[i] = acc;
            }
            self.apply_reflectors_adjoint(&mut r);
            f.solve_in_place(&mut r);
            self.apply_reflectors(&mut r);
            for (xi, ri) in x.iter_mut().zip(&r) {
                *xi += ri;
            }
            res = residual_norm(&self.original, shift, &x, &b) / bnorm;
        }
        if !(res <= RESIDUAL_TOLERANCE) {
            return Err(Error::Residual {
                context: context.to_string(),
                residual: res,
            });
        }
        Ok(LinearSolution {
            x: LiouvilleVector {
                entries: Array1::from(x),
                dim: self.dim,
            },
            residual: res,
        })
    }
}

fn reflect(b: &mut [C64], start: usize, v: &[C64]) {
    let mut dot = ZERO;
    for (t, vi) in v.iter().enumerate() {
        dot += vi.conj() * b[start + t];
    }
    let dot = dot * 2.0;
    for (t, vi) in v.iter().enumerate() {
        b[start + t] -= vi * dot;
    }
}

/// LU of a shifted upper Hessenberg matrix; pivoting only ever swaps
/// adjacent rows.
struct HessenbergLu {
    n: usize,
    u: Vec<C64>,
    mult: Vec<C64>,
    swapped: Vec<bool>,
    norm1: f64,
}

impl HessenbergLu {
    fn new(h: &Array2<C64>, shift: C64) -> Result<Self> {
        let n = h.nrows();
        let mut u: Vec<C64> = h.iter().copied().collect();
        for k in 0..n {
            u[k * n + k] += shift;
        }
        let mut norm1: f64 = 0.0;
        for j in 0..n {
            let s: f64 = (0..n.min(j + 2)).map(|i| u[i * n + j].norm()).sum();
            norm1 = norm1.max(s);
        }
        let mut mult = vec![ZERO; n.saturating_sub(1)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        for k in 0..n.saturating_sub(1) {
            if u[(k + 1) * n + k].norm() > u[k * n + k].norm() {
                for j in k..n {
                    u.swap(k * n + j, (k + 1) * n + j);
                }
                swapped[k] = true;
            }
            let pivot = u[k * n + k];
            if pivot == ZERO {
                return Err(Error::Singular {
                    context: format!("zero pivot in column {k}"),
                });
            }
            let m = u[(k + 1) * n + k] / pivot;
            mult[k] = m;
            u[(k + 1) * n + k] = ZERO;
            if m != ZERO {
                for j in (k + 1)..n {
                    let t = u[k * n + j];
                    u[(k + 1) * n + j] -= m * t;
                }
            }
        }
        if n > 0 && u[n * n - 1] == ZERO {
            return Err(Error::Singular {
                context: format!("zero pivot in column {}", n - 1),
            });
        }
        Ok(HessenbergLu {
            n,
            u,
            mult,
            swapped,
            norm1,
        })
    }
}

impl Factored for HessenbergLu {
    fn order(&self) -> usize {
        self.n
    }

    fn solve_in_place(&self, b: &mut [C64]) {
        let n = self.n;
        for k in 0..n.saturating_sub(1) {
            if self.swapped[k] {
                b.swap(k, k + 1);
            }
            let t = b[k];
            b[k + 1] -= self.mult[k] * t;
        }
        for i in (0..n).rev() {
            let mut acc = b[i];
            for j in (i + 1)..n {
                acc -= self.u[i * n + j] * b[j];
            }
            b[i] = acc / self.u[i * n + i];
        }
    }

    fn solve_adjoint_in_place(&self, b: &mut [C64]) {
        let n = self.n;
        for i in 0..n {
            let mut acc = b[i];
            for j in 0..i {
                acc -= self.u[j * n + i].conj() * b[j];
            }
            b[i] = acc / self.u[i * n + i].conj();
        }
        for k in (0..n.saturating_sub(1)).rev() {
            let t = b[k + 1];
            b[k] -= self.mult[k].conj() * t;
            if self.swapped[k] {
                b.swap(k, k + 1);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{identity, max_abs, trace};
    use crate::system::{polarization, FieldSpec, TransitionSpec};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_matrix(rng: &mut StdRng, n: usize) -> CMatrix {
        Array2::from_shape_fn((n, n), |_| {
            C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        })
    }

    fn ops_12() -> OperatorSet {
        let t = TransitionSpec::new(1.0, 2.0).unwrap().with_gamma(0.01);
        OperatorSet::new(
            &t,
            &FieldSpec::new(0.4, polarization::lin_x()),
            &FieldSpec::new(1.0, polarization::lin_y()),
            0.02,
        )
        .unwrap()
    }

    #[test]
    fn vectorize_identity() {
        let v = vectorize(&identity(2)).unwrap();
        assert_eq!(v.entries.to_vec(), vec![ONE, ZERO, ZERO, ONE]);
    }

    #[test]
    fn vectorize_round_trip() {
        let mut rng = StdRng::seed_from_u64(3);
        let m = random_matrix(&mut rng, 16);
        assert_eq!(unvectorize(&vectorize(&m).unwrap()), m);
    }

    #[test]
    fn vectorize_rejects_non_square() {
        assert!(vectorize(&Array2::zeros((2, 3))).is_err());
    }

    #[test]
    fn sandwich_matches_direct_product() {
        let mut rng = StdRng::seed_from_u64(4);
        let (a, x, b) = (
            random_matrix(&mut rng, 4),
            random_matrix(&mut rng, 4),
            random_matrix(&mut rng, 4),
        );
        let direct = a.dot(&x).dot(&b);
        let via = Superoperator::sandwich(&a, &b).apply_matrix(&x).unwrap();
        assert!(max_abs(&(direct - via)) < 1e-13);
        let left = Superoperator::left(&a).apply_matrix(&x).unwrap();
        assert!(max_abs(&(left - a.dot(&x))) < 1e-13);
        let right = Superoperator::right(&b).apply_matrix(&x).unwrap();
        assert!(max_abs(&(right - x.dot(&b))) < 1e-13);
    }

    #[test]
    fn superoperator_matches_direct_evaluation() {
        let o = ops_12();
        let l = lindblad_superop(&o);
        let mut rng = StdRng::seed_from_u64(5);
        let rho = random_matrix(&mut rng, o.dim);
        let direct = lindblad_action(&o, &(&o.h_rot + &o.v1), &rho);
        assert!(max_abs(&(l.apply_matrix(&rho).unwrap() - direct)) < 1e-12);
    }

    #[test]
    fn field_free_equilibrium() {
        let t = TransitionSpec::new(1.0, 2.0).unwrap();
        let o = OperatorSet::new(
            &t,
            &FieldSpec::new(0.0, polarization::lin_x()),
            &FieldSpec::new(0.0, polarization::lin_x()),
            0.0,
        )
        .unwrap();
        let rho0 = o.rho0();
        let out = lindblad_superop(&o).apply_matrix(&rho0).unwrap();
        assert!(max_abs(&(out + rho0.mapv(|z| z * t.gamma))) < 1e-15);
    }

    #[test]
    fn closed_decay_preserves_trace() {
        let o = ops_12();
        let l = lindblad_superop(&o);
        let mut rng = StdRng::seed_from_u64(6);
        for _ in 0..5 {
            let a = random_matrix(&mut rng, o.dim);
            let rho = &a + &dagger(&a);
            let out = l.apply_matrix(&rho).unwrap();
            assert!((trace(&out) + trace(&rho) * o.transition.gamma).norm() < 1e-12);
        }
    }

    #[test]
    fn identity_and_diagonal_solves() {
        let mut rng = StdRng::seed_from_u64(7);
        let m = random_matrix(&mut rng, 3);
        let rhs = vectorize(&m).unwrap();
        let x = solve_linear(&Superoperator::identity(3), &rhs).unwrap();
        assert!((&x.entries - &rhs.entries).iter().all(|z| z.norm() < 1e-15));

        let mut d = Superoperator::zeros(3);
        let diag: Vec<C64> = (0..9).map(|k| C64::new(1.0 + k as f64, 0.5)).collect();
        for (k, v) in diag.iter().enumerate() {
            d.entries[[k, k]] = *v;
        }
        let x = solve_linear(&d, &rhs).unwrap();
        for k in 0..9 {
            assert!((x.entries[k] - rhs.entries[k] / diag[k]).norm() < 1e-14);
        }
    }

    #[test]
    fn random_system_residual() {
        let mut rng = StdRng::seed_from_u64(8);
        let mut l = Superoperator::zeros(8);
        l.entries = Array2::from_shape_fn((64, 64), |_| {
            C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        });
        l.add_identity(C64::new(10.0, 0.0));
        let rhs = vectorize(&random_matrix(&mut rng, 8)).unwrap();
        let sol = solve_linear_checked(&l, &rhs, "test").unwrap();
        assert!(sol.residual < 1e-10);
    }

    #[test]
    fn singular_system_is_rejected() {
        let l = Superoperator::zeros(2);
        let rhs = vectorize(&identity(2)).unwrap();
        let err = solve_linear(&l, &rhs).unwrap_err();
        assert!(err.is_solver_failure());
    }

    #[test]
    fn nearly_singular_system_is_ill_conditioned() {
        let mut l = Superoperator::identity(2);
        l.entries[[3, 3]] = C64::new(1e-14, 0.0);
        let rhs = vectorize(&identity(2)).unwrap();
        assert!(matches!(
            solve_linear(&l, &rhs),
            Err(Error::IllConditioned { .. })
        ));
    }

    #[test]
    fn condition_estimate_is_reasonable() {
        let mut a = Array2::from_diag_elem(5, ONE);
        a[[4, 4]] = C64::new(1e-6, 0.0);
        let f = LuFactorization::new(&a).unwrap();
        let est = matrix_norm1(&a) * inverse_norm1_estimate(&f);
        assert!((est - 1e6).abs() / 1e6 < 1e-9);
    }

    #[test]
    fn adjoint_solves_agree_with_dense_adjoint() {
        let mut rng = StdRng::seed_from_u64(9);
        let a = random_matrix(&mut rng, 6);
        let f = LuFactorization::new(&a).unwrap();
        let b: Vec<C64> = (0..6).map(|k| C64::new(k as f64, 1.0)).collect();
        let mut y = b.clone();
        f.solve_adjoint_in_place(&mut y);
        let back = dagger(&a).dot(&Array1::from(y));
        for k in 0..6 {
            assert!((back[k] - b[k]).norm() < 1e-12);
        }
    }

    #[test]
    fn shifted_solver_matches_dense() {
        let o = ops_12();
        let l = lindblad_superop(&o);
        let solver = ShiftedSolver::new(&l).unwrap();
        let mut rng = StdRng::seed_from_u64(10);
        let rhs = vectorize(&random_matrix(&mut rng, o.dim)).unwrap();
        for delta in [-0.3, 0.0, 0.017, 2.0] {
            let shift = C64::new(0.0, -delta);
            let mut shifted = l.clone();
            shifted.add_identity(shift);
            let dense = solve_linear(&shifted, &rhs).unwrap();
            let fast = solver.solve(shift, &rhs, "test").unwrap();
            let diff: f64 = (&dense.entries - &fast.x.entries)
                .iter()
                .map(|z| z.norm())
                .fold(0.0, f64::max);
            let scale: f64 = dense.entries.iter().map(|z| z.norm()).fold(0.0, f64::max);
            assert!(diff / scale < 1e-10, "delta {delta}: {diff}");
            assert!(fast.residual < 1e-10);
        }
    }

    #[test]
    fn hessenberg_adjoint_solve() {
        let mut rng = StdRng::seed_from_u64(11);
        let mut h = random_matrix(&mut rng, 7);
        for i in 0..7 {
            for j in 0..7 {
                if i > j + 1 {
                    h[[i, j]] = ZERO;
                }
            }
        }
        let f = HessenbergLu::new(&h, C64::new(0.3, -0.2)).unwrap();
        let shifted = &h + &Array2::from_diag_elem(7, C64::new(0.3, -0.2));
        let b: Vec<C64> = (0..7).map(|k| C64::new(1.0, k as f64)).collect();
        let mut x = b.clone();
        f.solve_in_place(&mut x);
        let back = shifted.dot(&Array1::from(x));
        let mut y = b.clone();
        f.solve_adjoint_in_place(&mut y);
        let back_adj = dagger(&shifted).dot(&Array1::from(y));
        for k in 0..7 {
            assert!((back[k] - b[k]).norm() < 1e-11);
            assert!((back_adj[k] - b[k]).norm() < 1e-11);
        }
    }
}
