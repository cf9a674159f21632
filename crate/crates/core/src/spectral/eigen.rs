//! Symmetric eigensolvers.
//!
//! Three routes, all deterministic:
//! * a dense solver (Householder tridiagonalization + implicit QL via
//!   `nalgebra`) for small operators and as the reference in tests;
//! * shifted power iteration for the Perron pair of a nonnegative matrix;
//! * thick-restart Lanczos with full reorthogonalization for a few extreme
//!   eigenpairs of a large matrix-free operator.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Square operator applied matrix-free.
pub trait LinearOperator: Sync {
    fn dim(&self) -> usize;
    fn apply(&self, x: &[f64], y: &mut [f64]);
}

/// Solver settings shared by every spectral routine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenOptions {
    /// Target residual `‖Mv − λv‖₂`.
    pub tol: f64,
    /// Operator applications allowed; `None` means `100·n`.
    pub max_iter: Option<usize>,
    /// Operators of this size or smaller are solved densely.
    pub dense_threshold: usize,
}

impl Default for EigenOptions {
    fn default() -> Self {
        EigenOptions {
            tol: 1e-10,
            max_iter: None,
            dense_threshold: 512,
        }
    }
}

impl EigenOptions {
    pub fn budget(&self, n: usize) -> usize {
        self.max_iter.unwrap_or(100 * n.max(1))
    }

    /// Same settings with the dense route disabled.
    pub fn matrix_free(self) -> Self {
        EigenOptions {
            dense_threshold: 0,
            ..self
        }
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "tolerance must be positive, got {}",
                self.tol
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct EigenPair {
    pub value: f64,
    pub vector: Vec<f64>,
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn axpy(alpha: f64, x: &[f64], y: &mut [f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += alpha * xi;
    }
}

fn scale(v: &mut [f64], s: f64) {
    for x in v {
        *x *= s;
    }
}

/// `‖Mv − λv‖₂`.
pub(crate) fn residual(op: &dyn LinearOperator, value: f64, vector: &[f64]) -> f64 {
    let mut y = vec![0.0; vector.len()];
    op.apply(vector, &mut y);
    axpy(-value, vector, &mut y);
    norm(&y)
}

/// Flips `v` so its first component of non-negligible magnitude is positive.
pub(crate) fn fix_sign(v: &mut [f64]) {
    let peak = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if peak == 0.0 {
        return;
    }
    if let Some(first) = v.iter().find(|x| x.abs() > 1e-9 * peak) {
        if *first < 0.0 {
            scale(v, -1.0);
        }
    }
}

/// All eigenpairs of a dense symmetric matrix, ascending by value.
pub(crate) fn dense_symmetric(rows: &[Vec<f64>]) -> Vec<EigenPair> {
    let n = rows.len();
    if n == 0 {
        return Vec::new();
    }
    let m = DMatrix::from_fn(n, n, |i, j| 0.5 * (rows[i][j] + rows[j][i]));
    let eig = m.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]).then(a.cmp(&b)));
    order
        .into_iter()
        .map(|k| {
            let mut vector: Vec<f64> = eig.eigenvectors.column(k).iter().copied().collect();
            let nv = norm(&vector);
            scale(&mut vector, 1.0 / nv);
            fix_sign(&mut vector);
            EigenPair {
                value: eig.eigenvalues[k],
                vector,
            }
        })
        .collect()
}

/// Dense matrix of a linear operator, built column by column.
pub(crate) fn materialize(op: &dyn LinearOperator) -> Vec<Vec<f64>> {
    let n = op.dim();
    let mut rows = vec![vec![0.0; n]; n];
    let mut e = vec![0.0; n];
    let mut col = vec![0.0; n];
    for j in 0..n {
        e[j] = 1.0;
        op.apply(&e, &mut col);
        for i in 0..n {
            rows[i][j] = col[i];
        }
        e[j] = 0.0;
    }
    rows
}

/// Power iteration on `M + shift·I` from `start`. Returns the dominant pair of
/// `M` once the residual drops to `tol`.
pub(crate) fn shifted_power_iteration(
    op: &dyn LinearOperator,
    start: &[f64],
    shift: f64,
    tol: f64,
    budget: usize,
) -> Result<(EigenPair, f64, usize)> {
    let n = op.dim();
    let mut x = start.to_vec();
    let nx = norm(&x);
    if nx == 0.0 {
        return Err(Error::InvalidArgument("zero start vector".into()));
    }
    scale(&mut x, 1.0 / nx);
    let mut y = vec![0.0; n];
    let mut last = f64::INFINITY;
    for iteration in 1..=budget {
        op.apply(&x, &mut y);
        let rho = dot(&x, &y);
        let r = y
            .iter()
            .zip(&x)
            .map(|(yi, xi)| (yi - rho * xi).powi(2))
            .sum::<f64>()
            .sqrt();
        last = r;
        if r <= tol {
            return Ok((EigenPair { value: rho, vector: x }, r, iteration));
        }
        for (yi, xi) in y.iter_mut().zip(&x) {
            *yi += shift * xi;
        }
        let ny = norm(&y);
        if ny == 0.0 || !ny.is_finite() {
            break;
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / ny;
        }
    }
    Err(Error::NonConvergence {
        iterations: budget,
        residual: last,
    })
}

/// Converged extreme pairs plus the next Ritz value, which need not be converged.
#[derive(Debug, Clone)]
pub(crate) struct LanczosResult {
    pub pairs: Vec<EigenPair>,
    pub next_value: Option<f64>,
    pub scale: f64,
}

struct Sampler(ChaCha8Rng);

impl Sampler {
    fn new() -> Self {
        Sampler(ChaCha8Rng::seed_from_u64(0x6c61_6e63_7a6f_7321))
    }

    /// A unit vector orthogonal to `against`, or `None` if they span everything.
    fn orthogonal(&mut self, n: usize, against: &[&[f64]]) -> Option<Vec<f64>> {
        for _ in 0..8 {
            let mut v: Vec<f64> = (0..n).map(|_| self.0.gen::<f64>() - 0.5).collect();
            for _ in 0..2 {
                for a in against {
                    let c = dot(a, &v);
                    axpy(-c, a, &mut v);
                }
            }
            let nv = norm(&v);
            if nv > 1e-8 {
                scale(&mut v, 1.0 / nv);
                return Some(v);
            }
        }
        None
    }
}

/// The `k` algebraically largest eigenpairs of a symmetric operator restricted
/// to the orthogonal complement of `locked` (orthonormal vectors).
pub(crate) fn lanczos_largest(
    op: &dyn LinearOperator,
    k: usize,
    locked: &[Vec<f64>],
    tol: f64,
    budget: usize,
) -> Result<LanczosResult> {
    let n = op.dim();
    let free = n.saturating_sub(locked.len());
    if k == 0 || k > free {
        return Err(Error::InvalidArgument(format!(
            "cannot extract {k} eigenpairs from a {free}-dimensional subspace"
        )));
    }
    let m = free.min((3 * k).max(40));
    let keep = (k + (m - k) / 2).min(m - 1).max(k.min(m - 1));
    let mut sampler = Sampler::new();

    let locked_refs: Vec<&[f64]> = locked.iter().map(|v| v.as_slice()).collect();
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(m + 1);
    let mut next = sampler
        .orthogonal(n, &locked_refs)
        .ok_or_else(|| Error::InvalidArgument("no room for a start vector".into()))?;
    let mut h = vec![0.0; m * m];
    let mut kept = 0usize;
    let mut matvecs = 0usize;
    let mut w = vec![0.0; n];
    let mut last_estimate;

    loop {
        basis.truncate(kept);
        basis.push(next.clone());
        let mut beta = 0.0;
        for j in kept..m {
            op.apply(&basis[j], &mut w);
            matvecs += 1;
            for _ in 0..2 {
                for l in locked {
                    let c = dot(l, &w);
                    axpy(-c, l, &mut w);
                }
                for (i, b) in basis.iter().enumerate().take(j + 1) {
                    let c = dot(b, &w);
                    h[i * m + j] += c;
                    axpy(-c, b, &mut w);
                }
            }
            beta = norm(&w);
            if j + 1 < m {
                let scale_est = (0..=j).map(|i| h[i * m + i].abs()).fold(1.0, f64::max);
                let v = if beta > 1e-12 * scale_est {
                    h[(j + 1) * m + j] = beta;
                    w.iter().map(|x| x / beta).collect()
                } else {
                    // Invariant subspace: continue with a fresh direction.
                    let mut against = locked_refs.clone();
                    against.extend(basis.iter().map(|b| b.as_slice()));
                    sampler.orthogonal(n, &against).ok_or_else(|| {
                        Error::InvalidArgument("Krylov basis exhausted the space".into())
                    })?
                };
                basis.push(v);
            }
        }

        let sym = DMatrix::from_fn(m, m, |i, j| 0.5 * (h[i * m + j] + h[j * m + i]));
        let eig = sym.symmetric_eigen();
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]).then(a.cmp(&b)));
        let scale_est = eig.eigenvalues.iter().fold(0.0f64, |s, v| s.max(v.abs()));
        let estimates: Vec<f64> = order[..k]
            .iter()
            .map(|&c| (beta * eig.eigenvectors[(m - 1, c)]).abs())
            .collect();
        let worst = estimates.iter().copied().fold(0.0, f64::max);
        last_estimate = worst;
        let exhaustive = m == free;

        let ritz = |c: usize| -> Vec<f64> {
            let mut x = vec![0.0; n];
            for (i, b) in basis.iter().enumerate().take(m) {
                axpy(eig.eigenvectors[(i, c)], b, &mut x);
            }
            x
        };

        if worst <= 0.5 * tol || exhaustive {
            let mut pairs = Vec::with_capacity(k);
            let mut residuals = Vec::with_capacity(k);
            for &c in &order[..k] {
                let mut x = ritz(c);
                let nx = norm(&x);
                scale(&mut x, 1.0 / nx);
                fix_sign(&mut x);
                let value = eig.eigenvalues[c];
                residuals.push(residual(op, value, &x));
                matvecs += 1;
                pairs.push(EigenPair { value, vector: x });
            }
            let true_worst = residuals.iter().copied().fold(0.0, f64::max);
            if true_worst <= tol || exhaustive {
                return Ok(LanczosResult {
                    pairs,
                    next_value: order.get(k).map(|&c| eig.eigenvalues[c]),
                    scale: scale_est,
                });
            }
            last_estimate = true_worst;
        }

        if matvecs >= budget {
            return Err(Error::NonConvergence {
                iterations: matvecs,
                residual: last_estimate,
            });
        }

        // Thick restart: keep the leading Ritz vectors; the residual direction
        // becomes the next basis vector, coupled through the arrow row.
        let new_basis: Vec<Vec<f64>> = order[..keep].iter().map(|&c| ritz(c)).collect();
        h.iter_mut().for_each(|x| *x = 0.0);
        for (i, &c) in order[..keep].iter().enumerate() {
            h[i * m + i] = eig.eigenvalues[c];
        }
        basis = new_basis;
        if beta > 1e-12 * scale_est.max(1.0) {
            for (i, &c) in order[..keep].iter().enumerate() {
                h[keep * m + i] = beta * eig.eigenvectors[(m - 1, c)];
            }
            next = w.iter().map(|x| x / beta).collect();
        } else {
            let mut against = locked_refs.clone();
            against.extend(basis.iter().map(|b| b.as_slice()));
            next = sampler
                .orthogonal(n, &against)
                .ok_or_else(|| Error::InvalidArgument("Krylov basis exhausted the space".into()))?;
        }
        kept = keep;
    }
}
