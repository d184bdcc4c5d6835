//! Eigendecomposition, graph filtering, and matrix norms.
//!
//! The reference eigensolver is a cyclic Jacobi sweep over the full dense
//! matrix. It is O(n^3) per sweep but deterministic and accurate to near
//! machine precision at the graph sizes this crate targets, which is what
//! every downstream bound check relies on.

use crate::graph::{Graph, SymMatrix};
use crate::{Error, Result};

/// Convergence threshold for the Jacobi sweep, relative to the Frobenius
/// norm of the input: iteration stops once the off-diagonal mass drops below
/// `JACOBI_TOL * max(1, ||M||_F)`.
const JACOBI_TOL: f64 = 1e-12;

const JACOBI_MAX_SWEEPS: usize = 100;

/// Full spectral decomposition of a symmetric matrix: ascending eigenvalues
/// and the matching orthonormal eigenvectors stored as columns.
#[derive(Debug, Clone)]
pub struct EigenSystem {
    pub values: Vec<f64>,
    /// `vectors[i]` is the unit eigenvector for `values[i]`.
    pub vectors: Vec<Vec<f64>>,
}

impl EigenSystem {
    pub fn order(&self) -> usize {
        self.values.len()
    }

    /// Reconstructs `U g(Lambda) U^T` for a scalar function of the spectrum.
    /// The result is exactly symmetric: only the upper triangle is computed
    /// and then mirrored.
    pub fn materialize<F: Fn(f64) -> f64>(&self, g: F) -> SymMatrix {
        let n = self.order();
        let gains: Vec<f64> = self.values.iter().map(|&l| g(l)).collect();
        let mut m = SymMatrix::zeros(n);
        for a in 0..n {
            for b in a..n {
                let mut acc = 0.0;
                for (i, gain) in gains.iter().enumerate() {
                    acc += gain * self.vectors[i][a] * self.vectors[i][b];
                }
                m.set(a, b, acc);
            }
        }
        m
    }
}

fn off_diagonal_mass(a: &[f64], n: usize) -> f64 {
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[i * n + j] * a[i * n + j];
            }
        }
    }
    acc.sqrt()
}

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Eigenvalues are returned in ascending order. Each eigenvector is given a
/// deterministic sign: its largest-magnitude entry (ties broken by lowest
/// index) is made positive.
pub fn eig_sym(m: &SymMatrix) -> Result<EigenSystem> {
    let n = m.order();
    if n == 0 {
        return Ok(EigenSystem {
            values: vec![],
            vectors: vec![],
        });
    }
    let mut a = m.as_slice().to_vec();
    // v holds the accumulated rotations; column k is the eigenvector for a[k,k].
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let scale = m.frobenius_norm().max(1.0);
    let tol = JACOBI_TOL * scale;

    let mut converged = off_diagonal_mass(&a, n) <= tol;
    let mut sweeps = 0;
    while !converged {
        if sweeps >= JACOBI_MAX_SWEEPS {
            return Err(Error::NonConvergence {
                sweeps,
                off: off_diagonal_mass(&a, n),
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let tau = (aqq - app) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                for i in 0..n {
                    if i != p && i != q {
                        let aip = a[i * n + p];
                        let aiq = a[i * n + q];
                        a[i * n + p] = c * aip - s * aiq;
                        a[p * n + i] = a[i * n + p];
                        a[i * n + q] = s * aip + c * aiq;
                        a[q * n + i] = a[i * n + q];
                    }
                }
                a[p * n + p] = c * c * app - 2.0 * s * c * apq + s * s * aqq;
                a[q * n + q] = s * s * app + 2.0 * s * c * apq + c * c * aqq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                for i in 0..n {
                    let vip = v[i * n + p];
                    let viq = v[i * n + q];
                    v[i * n + p] = c * vip - s * viq;
                    v[i * n + q] = s * vip + c * viq;
                }
            }
        }
        sweeps += 1;
        converged = off_diagonal_mass(&a, n) <= tol;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));

    let values: Vec<f64> = order.iter().map(|&k| a[k * n + k]).collect();
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&k| {
            let mut col: Vec<f64> = (0..n).map(|i| v[i * n + k]).collect();
            fix_sign(&mut col);
            col
        })
        .collect();
    Ok(EigenSystem { values, vectors })
}

/// Makes the largest-magnitude entry positive; ties go to the lowest index.
fn fix_sign(col: &mut [f64]) {
    let mut imax = 0;
    for (i, &x) in col.iter().enumerate() {
        if x.abs() > col[imax].abs() {
            imax = i;
        }
    }
    if col[imax] < 0.0 {
        for x in col.iter_mut() {
            *x = -*x;
        }
    }
}

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm2(x: &[f64]) -> f64 {
    dot(x, x).sqrt()
}

/// Graph shift operators a filter can be evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GsoKind {
    /// The symmetric normalised Laplacian, spectrum in [0, 2].
    #[default]
    NormalizedLaplacian,
    /// `L - I`, spectrum in [-1, 1].
    ShiftedLaplacian,
    /// `2 L / lambda_max - I`, spectrum in [-1, 1].
    ScaledShiftedLaplacian,
    /// `(D + I)^{-1/2} (A + I) (D + I)^{-1/2}`, spectrum in (-1, 1].
    AugmentedAdjacency,
}

impl GsoKind {
    pub fn label(self) -> &'static str {
        match self {
            GsoKind::NormalizedLaplacian => "laplacian",
            GsoKind::ShiftedLaplacian => "shifted",
            GsoKind::ScaledShiftedLaplacian => "scaled-shifted",
            GsoKind::AugmentedAdjacency => "augmented-adjacency",
        }
    }
}

/// Materialises a graph shift operator for a graph.
pub fn gso_matrix(g: &Graph, kind: GsoKind) -> Result<SymMatrix> {
    let n = g.node_count();
    match kind {
        GsoKind::NormalizedLaplacian => Ok(g.normalized_laplacian()),
        GsoKind::ShiftedLaplacian => {
            let mut l = g.normalized_laplacian();
            for i in 0..n {
                l.set(i, i, l.get(i, i) - 1.0);
            }
            Ok(l)
        }
        GsoKind::ScaledShiftedLaplacian => {
            let l = g.normalized_laplacian();
            let lam_max = eig_sym(&l)?
                .values
                .last()
                .copied()
                .unwrap_or(0.0)
                .max(f64::MIN_POSITIVE);
            let mut m = SymMatrix::zeros(n);
            for i in 0..n {
                for j in i..n {
                    let mut v = 2.0 * l.get(i, j) / lam_max;
                    if i == j {
                        v -= 1.0;
                    }
                    m.set(i, j, v);
                }
            }
            Ok(m)
        }
        GsoKind::AugmentedAdjacency => {
            let mut m = SymMatrix::zeros(n);
            let inv_sqrt: Vec<f64> = (0..n)
                .map(|u| 1.0 / ((g.degree(u) + 1) as f64).sqrt())
                .collect();
            for u in 0..n {
                m.set(u, u, inv_sqrt[u] * inv_sqrt[u]);
            }
            for (u, v) in g.edges() {
                m.set(u, v, inv_sqrt[u] * inv_sqrt[v]);
            }
            Ok(m)
        }
    }
}

/// Spectral filter family plus parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum FilterKind {
    /// `g(lambda) = (1 + alpha * lambda)^{-1}` with `alpha > 0`.
    LowPass { alpha: f64 },
    /// `g(lambda) = sum_k theta[k] * lambda^k`.
    Polynomial { theta: Vec<f64> },
    /// `g(lambda) = lambda^K`.
    Monomial { power: u32 },
    /// `g(lambda) = lambda`.
    Identity,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralFilter {
    pub kind: FilterKind,
    /// The shift-operator family the filter is intended to act on.
    pub gso: GsoKind,
}

impl SpectralFilter {
    pub fn lowpass(alpha: f64) -> Result<SpectralFilter> {
        if !(alpha > 0.0) {
            return Err(Error::InvalidParam(format!(
                "low-pass alpha must be positive, got {alpha}"
            )));
        }
        Ok(SpectralFilter {
            kind: FilterKind::LowPass { alpha },
            gso: GsoKind::NormalizedLaplacian,
        })
    }

    pub fn polynomial(theta: Vec<f64>, gso: GsoKind) -> SpectralFilter {
        SpectralFilter {
            kind: FilterKind::Polynomial { theta },
            gso,
        }
    }

    pub fn monomial(power: u32, gso: GsoKind) -> SpectralFilter {
        SpectralFilter {
            kind: FilterKind::Monomial { power },
            gso,
        }
    }

    pub fn identity(gso: GsoKind) -> SpectralFilter {
        SpectralFilter {
            kind: FilterKind::Identity,
            gso,
        }
    }

    /// Evaluates the scalar filter response at `lambda`.
    pub fn response(&self, lambda: f64) -> f64 {
        match &self.kind {
            FilterKind::LowPass { alpha } => 1.0 / (1.0 + alpha * lambda),
            FilterKind::Polynomial { theta } => {
                // Horner evaluation.
                theta.iter().rev().fold(0.0, |acc, &c| acc * lambda + c)
            }
            FilterKind::Monomial { power } => lambda.powi(*power as i32),
            FilterKind::Identity => lambda,
        }
    }

    pub fn label(&self) -> String {
        match &self.kind {
            FilterKind::LowPass { alpha } => format!("lowpass(alpha={alpha})"),
            FilterKind::Polynomial { theta } => format!("polynomial(degree={})", theta.len().saturating_sub(1)),
            FilterKind::Monomial { power } => format!("monomial(power={power})"),
            FilterKind::Identity => "identity".into(),
        }
    }
}

/// The linear-stability constant of a filter: the factor `C` with
/// `||g(M) - g(M_p)||_2 <= C ||M_p - M||_2` over the filter's admissible
/// shift-operator family.
pub fn stability_constant(f: &SpectralFilter) -> f64 {
    match &f.kind {
        FilterKind::LowPass { alpha } => *alpha,
        FilterKind::Polynomial { theta } => theta
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| k as f64 * c.abs())
            .sum(),
        FilterKind::Monomial { power } => *power as f64,
        FilterKind::Identity => 1.0,
    }
}

/// Applies a filter to a signal given a precomputed decomposition of the
/// shift operator: `y = sum_i g(lambda_i) <u_i, x> u_i`.
pub fn apply_filter_eig(f: &SpectralFilter, eig: &EigenSystem, x: &[f64]) -> Result<Vec<f64>> {
    let n = eig.order();
    if x.len() != n {
        return Err(Error::OrderMismatch(n, x.len()));
    }
    let mut y = vec![0.0; n];
    for (i, u) in eig.vectors.iter().enumerate() {
        let coeff = f.response(eig.values[i]) * dot(u, x);
        for (yj, uj) in y.iter_mut().zip(u) {
            *yj += coeff * uj;
        }
    }
    Ok(y)
}

/// Applies a filter to a signal on a shift operator.
pub fn apply_filter(f: &SpectralFilter, m: &SymMatrix, x: &[f64]) -> Result<Vec<f64>> {
    apply_filter_eig(f, &eig_sym(m)?, x)
}

/// Dense LU factorisation with partial pivoting.
pub(crate) struct LuFactors {
    n: usize,
    lu: Vec<f64>,
    piv: Vec<usize>,
}

impl LuFactors {
    pub(crate) fn factor(a: &SymMatrix) -> Result<LuFactors> {
        let n = a.order();
        let mut lu = a.as_slice().to_vec();
        let mut piv: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let mut p = k;
            for i in (k + 1)..n {
                if lu[i * n + k].abs() > lu[p * n + k].abs() {
                    p = i;
                }
            }
            if lu[p * n + k] == 0.0 {
                return Err(Error::InvalidParam(
                    "singular matrix in triangular factorisation".into(),
                ));
            }
            if p != k {
                for j in 0..n {
                    lu.swap(k * n + j, p * n + j);
                }
                piv.swap(k, p);
            }
            let pivot = lu[k * n + k];
            for i in (k + 1)..n {
                let factor = lu[i * n + k] / pivot;
                lu[i * n + k] = factor;
                for j in (k + 1)..n {
                    lu[i * n + j] -= factor * lu[k * n + j];
                }
            }
        }
        Ok(LuFactors { n, lu, piv })
    }

    pub(crate) fn solve(&self, b: &[f64]) -> Vec<f64> {
        let n = self.n;
        let mut y: Vec<f64> = self.piv.iter().map(|&p| b[p]).collect();
        for i in 1..n {
            let mut acc = y[i];
            for j in 0..i {
                acc -= self.lu[i * n + j] * y[j];
            }
            y[i] = acc;
        }
        for i in (0..n).rev() {
            let mut acc = y[i];
            for j in (i + 1)..n {
                acc -= self.lu[i * n + j] * y[j];
            }
            y[i] = acc / self.lu[i * n + i];
        }
        y
    }
}

/// Low-pass filtering by a direct linear solve: `(I + alpha L) y = x`,
/// factored with lower-upper elimination. Agrees with the spectral route to
/// high accuracy and avoids the full eigensolve.
pub fn lowpass_solve(alpha: f64, l: &SymMatrix, x: &[f64]) -> Result<Vec<f64>> {
    if !(alpha > 0.0) {
        return Err(Error::InvalidParam(format!(
            "low-pass alpha must be positive, got {alpha}"
        )));
    }
    let n = l.order();
    if x.len() != n {
        return Err(Error::OrderMismatch(n, x.len()));
    }
    let mut b = SymMatrix::zeros(n);
    for i in 0..n {
        for j in i..n {
            let mut v = alpha * l.get(i, j);
            if i == j {
                v += 1.0;
            }
            b.set(i, j, v);
        }
    }
    Ok(LuFactors::factor(&b)?.solve(x))
}

/// Operator (spectral) norm of a symmetric matrix: the largest eigenvalue
/// magnitude, computed from the full decomposition.
pub fn operator_norm(m: &SymMatrix) -> Result<f64> {
    Ok(eig_sym(m)?
        .values
        .iter()
        .fold(0.0f64, |acc, &l| acc.max(l.abs())))
}

/// Fast-path estimate of the operator norm by power iteration on `M^2`
/// (squaring makes the dominant magnitude unique up to sign). Deterministic
/// start vector; intended as a cross-check against [`operator_norm`].
pub fn operator_norm_power_iter(m: &SymMatrix, iters: usize) -> f64 {
    let n = m.order();
    if n == 0 {
        return 0.0;
    }
    let mut x: Vec<f64> = (0..n)
        .map(|i| 1.0 + ((i * 2654435761) % 1000) as f64 / 1000.0)
        .collect();
    let norm = norm2(&x);
    for v in x.iter_mut() {
        *v /= norm;
    }
    let mut estimate = 0.0;
    for _ in 0..iters {
        let y = m.mul_vec(&m.mul_vec(&x));
        let norm = norm2(&y);
        if norm == 0.0 {
            return 0.0;
        }
        estimate = norm.sqrt();
        x = y.into_iter().map(|v| v / norm).collect();
    }
    estimate
}

/// Maximum absolute row sum.
pub fn matrix_one_norm(m: &SymMatrix) -> f64 {
    (0..m.order())
        .map(|u| row_one_norm(m, u))
        .fold(0.0, f64::max)
}

/// Absolute sum of row `u`.
pub fn row_one_norm(m: &SymMatrix, u: usize) -> f64 {
    m.row(u).iter().map(|v| v.abs()).sum()
}

/// Filter distance `||g(M) - g(M_p)||_2`, with both filtered operators
/// materialised from their own decompositions.
pub fn filter_distance(f: &SpectralFilter, m: &SymMatrix, mp: &SymMatrix) -> Result<f64> {
    filter_distance_eig(f, &eig_sym(m)?, &eig_sym(mp)?)
}

/// Filter distance from precomputed decompositions.
pub fn filter_distance_eig(
    f: &SpectralFilter,
    eig: &EigenSystem,
    eig_p: &EigenSystem,
) -> Result<f64> {
    if eig.order() != eig_p.order() {
        return Err(Error::OrderMismatch(eig.order(), eig_p.order()));
    }
    let w = eig.materialize(|l| f.response(l));
    let wp = eig_p.materialize(|l| f.response(l));
    operator_norm(&w.sub(&wp)?)
}

/// Relative output distance `||g(M)x - g(M_p)x||_2 / ||x||_2`.
pub fn relative_output_distance(
    f: &SpectralFilter,
    m: &SymMatrix,
    mp: &SymMatrix,
    x: &[f64],
) -> Result<f64> {
    relative_output_distance_eig(f, &eig_sym(m)?, &eig_sym(mp)?, x)
}

/// Relative output distance from precomputed decompositions.
pub fn relative_output_distance_eig(
    f: &SpectralFilter,
    eig: &EigenSystem,
    eig_p: &EigenSystem,
    x: &[f64],
) -> Result<f64> {
    let x_norm = norm2(x);
    if x_norm == 0.0 {
        return Err(Error::ZeroSignal);
    }
    let y = apply_filter_eig(f, eig, x)?;
    let yp = apply_filter_eig(f, eig_p, x)?;
    let diff: f64 = y
        .iter()
        .zip(&yp)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt();
    Ok(diff / x_norm)
}
