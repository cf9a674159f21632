//! Graph operators and their low spectrum.
//!
//! | kind | operator |
//! |------|----------|
//! | [`OperatorKind::Laplacian`] | `L = D − A` |
//! | [`OperatorKind::SymmetricNormalized`] | `Lₛ = I − D^{-1/2} A D^{-1/2}` |
//! | [`OperatorKind::RandomWalk`] | `L_rw = I − D^{-1} A` |
//! | [`OperatorKind::Replicator`] | `R = λmax·I − A` |
//!
//! `R` equals `λmax` times `Lₛ` of the graph reweighted by eigenvector
//! centrality, which is what [`replicator_equivalence_check`] measures.

mod diffusion;
pub(crate) mod eigen;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use eigen::{dense_symmetric, lanczos_largest, residual, shifted_power_iteration, EigenPair};

pub use diffusion::{simulate_diffusion, DiffusionState};
pub use eigen::{EigenOptions, LinearOperator};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OperatorKind {
    Laplacian,
    SymmetricNormalized,
    RandomWalk,
    Replicator,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 4] = [
        OperatorKind::Laplacian,
        OperatorKind::SymmetricNormalized,
        OperatorKind::RandomWalk,
        OperatorKind::Replicator,
    ];

    /// Short name used on the command line and in result files.
    pub fn name(self) -> &'static str {
        match self {
            OperatorKind::Laplacian => "laplacian",
            OperatorKind::SymmetricNormalized => "symmetric",
            OperatorKind::RandomWalk => "random_walk",
            OperatorKind::Replicator => "replicator",
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperatorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "laplacian" | "l" => Ok(OperatorKind::Laplacian),
            "symmetric" | "symmetric_normalized" | "ls" | "normalized" => {
                Ok(OperatorKind::SymmetricNormalized)
            }
            "random_walk" | "randomwalk" | "rw" | "lrw" => Ok(OperatorKind::RandomWalk),
            "replicator" | "r" => Ok(OperatorKind::Replicator),
            other => Err(Error::InvalidArgument(format!("unknown method {other:?}"))),
        }
    }
}

/// An eigenpair with its residual `‖Mv − λv‖₂`. Vectors are unit-norm with
/// their first non-negligible component positive.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralPair {
    pub value: f64,
    pub vector: Vec<f64>,
    pub residual: f64,
}

/// JSON dump of eigenpairs for debugging.
pub fn eigenpairs_json(pairs: &[SpectralPair]) -> Result<String> {
    Ok(serde_json::to_string_pretty(pairs)?)
}

/// A graph operator ready for repeated application. For the replicator,
/// `λmax` is computed once here.
#[derive(Debug, Clone)]
pub struct Operator<'g> {
    graph: &'g Graph,
    kind: OperatorKind,
    inv_sqrt_degree: Vec<f64>,
    lambda_max: f64,
}

impl<'g> Operator<'g> {
    pub fn new(graph: &'g Graph, kind: OperatorKind, opts: &EigenOptions) -> Result<Self> {
        let mut inv_sqrt_degree = Vec::new();
        let mut lambda_max = 0.0;
        match kind {
            OperatorKind::Laplacian => {}
            OperatorKind::SymmetricNormalized | OperatorKind::RandomWalk => {
                inv_sqrt_degree = normalizer(graph)?;
            }
            OperatorKind::Replicator => {
                lambda_max = eigenvector_centrality(graph, opts)?.value;
            }
        }
        Ok(Operator {
            graph,
            kind,
            inv_sqrt_degree,
            lambda_max,
        })
    }

    /// Replicator with a known `λmax`.
    pub fn replicator(graph: &'g Graph, lambda_max: f64) -> Self {
        Operator {
            graph,
            kind: OperatorKind::Replicator,
            inv_sqrt_degree: Vec::new(),
            lambda_max,
        }
    }

    pub fn kind(&self) -> OperatorKind {
        self.kind
    }

    /// `λmax` of the adjacency matrix (replicator only).
    pub fn lambda_max(&self) -> Option<f64> {
        (self.kind == OperatorKind::Replicator).then_some(self.lambda_max)
    }
}

fn normalizer(graph: &Graph) -> Result<Vec<f64>> {
    graph
        .degrees()
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            if d > 0.0 {
                Ok(1.0 / d.sqrt())
            } else {
                Err(Error::ZeroDegree(i))
            }
        })
        .collect()
}

impl LinearOperator for Operator<'_> {
    fn dim(&self) -> usize {
        self.graph.node_count()
    }

    fn apply(&self, x: &[f64], y: &mut [f64]) {
        let g = self.graph;
        match self.kind {
            OperatorKind::Laplacian => {
                g.adjacency_apply(x, y);
                for ((yi, xi), d) in y.iter_mut().zip(x).zip(g.degrees()) {
                    *yi = d * xi - *yi;
                }
            }
            OperatorKind::SymmetricNormalized => {
                let s = &self.inv_sqrt_degree;
                let scaled: Vec<f64> = x.iter().zip(s).map(|(xi, si)| xi * si).collect();
                g.adjacency_apply(&scaled, y);
                for ((yi, xi), si) in y.iter_mut().zip(x).zip(s) {
                    *yi = xi - si * *yi;
                }
            }
            OperatorKind::RandomWalk => {
                g.adjacency_apply(x, y);
                for ((yi, xi), si) in y.iter_mut().zip(x).zip(&self.inv_sqrt_degree) {
                    *yi = xi - si * si * *yi;
                }
            }
            OperatorKind::Replicator => {
                g.adjacency_apply(x, y);
                for (yi, xi) in y.iter_mut().zip(x) {
                    *yi = self.lambda_max * xi - *yi;
                }
            }
        }
    }
}

struct Adjacency<'g>(&'g Graph);

impl LinearOperator for Adjacency<'_> {
    fn dim(&self) -> usize {
        self.0.node_count()
    }
    fn apply(&self, x: &[f64], y: &mut [f64]) {
        self.0.adjacency_apply(x, y);
    }
}

struct Negated<'a, O: LinearOperator>(&'a O);

impl<O: LinearOperator> LinearOperator for Negated<'_, O> {
    fn dim(&self) -> usize {
        self.0.dim()
    }
    fn apply(&self, x: &[f64], y: &mut [f64]) {
        self.0.apply(x, y);
        y.iter_mut().for_each(|v| *v = -*v);
    }
}

/// Matrix-free product `M x`.
pub fn apply_operator(g: &Graph, kind: OperatorKind, x: &[f64]) -> Result<Vec<f64>> {
    if x.len() != g.node_count() {
        return Err(Error::LengthMismatch {
            expected: g.node_count(),
            got: x.len(),
        });
    }
    if kind == OperatorKind::Replicator {
        g.require_connected()?;
    }
    let op = Operator::new(g, kind, &EigenOptions::default())?;
    let mut y = vec![0.0; x.len()];
    op.apply(x, &mut y);
    Ok(y)
}

/// Dense matrix of an operator (row-major).
pub fn operator_matrix(g: &Graph, kind: OperatorKind, opts: &EigenOptions) -> Result<Vec<Vec<f64>>> {
    let op = Operator::new(g, kind, opts)?;
    Ok(eigen::materialize(&op))
}

/// Perron pair `(λmax, θ)` of the adjacency matrix by power iteration from the
/// all-ones vector. `θ` is unit-norm and strictly positive.
pub fn eigenvector_centrality(g: &Graph, opts: &EigenOptions) -> Result<SpectralPair> {
    opts.validate()?;
    g.require_connected()?;
    let n = g.node_count();
    if n == 0 {
        return Err(Error::TooSmall { needed: 1, n });
    }
    if n == 1 {
        return Ok(SpectralPair {
            value: 0.0,
            vector: vec![1.0],
            residual: 0.0,
        });
    }
    let adjacency = Adjacency(g);
    // The shift keeps -λmax (bipartite graphs) from competing with λmax.
    let shift = 0.5 * g.max_degree();
    let (pair, res, _) =
        shifted_power_iteration(&adjacency, &vec![1.0; n], shift, opts.tol, opts.budget(n))?;
    let vector = positive_perron(pair.vector)?;
    Ok(SpectralPair {
        value: pair.value,
        vector,
        residual: res,
    })
}

/// Perron pair of the adjacency matrix from the eigensolver used for the low
/// spectrum (dense below the threshold, Lanczos above). More accurate than
/// [`eigenvector_centrality`] when componentwise precision matters.
pub fn perron_pair(g: &Graph, opts: &EigenOptions) -> Result<SpectralPair> {
    opts.validate()?;
    g.require_connected()?;
    let n = g.node_count();
    if n < 2 {
        return eigenvector_centrality(g, opts);
    }
    let adjacency = Adjacency(g);
    let pair = if n <= opts.dense_threshold {
        dense_symmetric(&g.to_dense()).pop().expect("n >= 2")
    } else {
        lanczos_largest(&adjacency, 1, &[], opts.tol, opts.budget(n))?
            .pairs
            .remove(0)
    };
    let vector = positive_perron(pair.vector)?;
    let res = residual(&adjacency, pair.value, &vector);
    Ok(SpectralPair {
        value: pair.value,
        vector,
        residual: res,
    })
}

fn positive_perron(mut v: Vec<f64>) -> Result<Vec<f64>> {
    if v.iter().sum::<f64>() < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    if let Some((index, &value)) = v.iter().enumerate().find(|(_, &x)| !(x > 0.0)) {
        return Err(Error::NonPositiveCentrality { index, value });
    }
    Ok(v)
}

/// The two lowest eigenpairs of an operator, plus diagnostics.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LowSpectrum {
    pub kind: OperatorKind,
    pub first: SpectralPair,
    pub second: SpectralPair,
    /// Largest adjacency eigenvalue, for the replicator.
    pub lambda_max: Option<f64>,
    /// The third eigenvalue (or the best available estimate of it).
    pub third_value: Option<f64>,
    /// Set when the second eigenvalue is repeated; `second` is then one
    /// arbitrary unit vector of its eigenspace.
    pub degenerate: bool,
}

/// Gap under which the second eigenvalue counts as repeated, relative to the
/// spectral scale (floored at 1).
pub const DEGENERACY_GAP: f64 = 1e-12;

/// The two smallest eigenpairs of `kind` on a connected graph with `n ≥ 2`.
///
/// For the replicator these come from the two largest adjacency eigenpairs
/// (`λ_R = λmax − λ_A`). For the Laplacians the known null vector is locked
/// and the next pair is found on the negated operator. `L_rw` pairs are
/// obtained from `Lₛ` through `v = D^{-1/2} u`.
pub fn two_smallest_eigenpairs(
    g: &Graph,
    kind: OperatorKind,
    opts: &EigenOptions,
) -> Result<LowSpectrum> {
    opts.validate()?;
    let n = g.node_count();
    if n < 2 {
        return Err(Error::TooSmall { needed: 2, n });
    }
    g.require_connected()?;
    match kind {
        OperatorKind::Replicator => replicator_spectrum(g, opts),
        OperatorKind::Laplacian | OperatorKind::SymmetricNormalized => laplacian_spectrum(g, kind, opts),
        OperatorKind::RandomWalk => {
            let sym = laplacian_spectrum(g, OperatorKind::SymmetricNormalized, opts)?;
            let op = Operator::new(g, OperatorKind::RandomWalk, opts)?;
            let convert = |p: &SpectralPair| -> SpectralPair {
                let mut v: Vec<f64> = p
                    .vector
                    .iter()
                    .zip(&op.inv_sqrt_degree)
                    .map(|(u, s)| u * s)
                    .collect();
                let nv = eigen::norm(&v);
                v.iter_mut().for_each(|x| *x /= nv);
                eigen::fix_sign(&mut v);
                SpectralPair {
                    value: p.value,
                    residual: residual(&op, p.value, &v),
                    vector: v,
                }
            };
            Ok(LowSpectrum {
                kind,
                first: convert(&sym.first),
                second: convert(&sym.second),
                ..sym
            })
        }
    }
}

fn is_degenerate(second: f64, third: Option<f64>, scale: f64) -> bool {
    third.is_some_and(|t| (t - second).abs() <= DEGENERACY_GAP * scale.max(1.0))
}

fn replicator_spectrum(g: &Graph, opts: &EigenOptions) -> Result<LowSpectrum> {
    let n = g.node_count();
    let adjacency = Adjacency(g);
    let (top, second, third, scale) = if n <= opts.dense_threshold {
        let mut all = dense_symmetric(&g.to_dense());
        let scale = all
            .iter()
            .fold(0.0f64, |s, p| s.max(p.value.abs()));
        let third = (n >= 3).then(|| all[n - 3].value);
        let top = all.pop().expect("n >= 2");
        let second = all.pop().expect("n >= 2");
        (top, second, third, scale)
    } else {
        let want = 2;
        let mut res = lanczos_largest(&adjacency, want, &[], opts.tol, opts.budget(n))?;
        let second = res.pairs.remove(1);
        let top = res.pairs.remove(0);
        (top, second, res.next_value, res.scale)
    };
    let lambda_max = top.value;
    let theta = positive_perron(top.vector)?;
    let op = Operator::replicator(g, lambda_max);
    let first = SpectralPair {
        value: 0.0,
        residual: residual(&op, 0.0, &theta),
        vector: theta,
    };
    let psi_value = lambda_max - second.value;
    let mut psi = second.vector;
    eigen::fix_sign(&mut psi);
    let second_pair = SpectralPair {
        value: psi_value,
        residual: residual(&op, psi_value, &psi),
        vector: psi,
    };
    Ok(LowSpectrum {
        kind: OperatorKind::Replicator,
        degenerate: is_degenerate(second.value, third, scale),
        third_value: third.map(|t| lambda_max - t),
        first,
        second: second_pair,
        lambda_max: Some(lambda_max),
    })
}

fn laplacian_spectrum(g: &Graph, kind: OperatorKind, opts: &EigenOptions) -> Result<LowSpectrum> {
    let n = g.node_count();
    let op = Operator::new(g, kind, opts)?;
    // Exact null vector: constant for L, D^{1/2}·1 for Lₛ.
    let mut null: Vec<f64> = match kind {
        OperatorKind::Laplacian => vec![1.0; n],
        _ => g.degrees().iter().map(|d| d.sqrt()).collect(),
    };
    let nn = eigen::norm(&null);
    null.iter_mut().for_each(|x| *x /= nn);

    let (first, second, third, scale) = if n <= opts.dense_threshold {
        let all = dense_symmetric(&eigen::materialize(&op));
        let scale = all.iter().fold(0.0f64, |s, p| s.max(p.value.abs()));
        let third = all.get(2).map(|p| p.value);
        let mut it = all.into_iter();
        (it.next().expect("n >= 2"), it.next().expect("n >= 2"), third, scale)
    } else {
        let negated = Negated(&op);
        let mut res = lanczos_largest(&negated, 1, &[null.clone()], opts.tol, opts.budget(n))?;
        let pair = res.pairs.remove(0);
        let second = EigenPair {
            value: -pair.value,
            vector: pair.vector,
        };
        let first = EigenPair {
            value: 0.0,
            vector: null,
        };
        (first, second, res.next_value.map(|v| -v), res.scale)
    };
    let mut first_vector = first.vector;
    eigen::fix_sign(&mut first_vector);
    let mut second_vector = second.vector;
    eigen::fix_sign(&mut second_vector);
    Ok(LowSpectrum {
        kind,
        degenerate: is_degenerate(second.value, third, scale),
        third_value: third,
        first: SpectralPair {
            value: first.value,
            residual: residual(&op, first.value, &first_vector),
            vector: first_vector,
        },
        second: SpectralPair {
            value: second.value,
            residual: residual(&op, second.value, &second_vector),
            vector: second_vector,
        },
        lambda_max: None,
    })
}

/// Componentwise ratio `second / first`, with `first` oriented positive.
pub fn ratio_vector(first: &SpectralPair, second: &SpectralPair) -> Result<Vec<f64>> {
    if first.vector.len() != second.vector.len() {
        return Err(Error::LengthMismatch {
            expected: first.vector.len(),
            got: second.vector.len(),
        });
    }
    if let Some((index, &value)) = first
        .vector
        .iter()
        .enumerate()
        .find(|(_, x)| x.abs() < 1e-14)
    {
        return Err(Error::VanishingComponent { index, value });
    }
    let orientation = if first.vector[0] < 0.0 { -1.0 } else { 1.0 };
    Ok(first
        .vector
        .iter()
        .zip(&second.vector)
        .map(|(f, s)| s / (orientation * f))
        .collect())
}

/// Largest entrywise gap between `R` on `g` and `λmax·L̃ₛ` on the graph
/// reweighted by `θ`. Dense comparison up to `opts.dense_threshold` nodes,
/// otherwise a deterministic sample of at most 64 columns.
pub fn replicator_equivalence_check(g: &Graph, opts: &EigenOptions) -> Result<f64> {
    let perron = perron_pair(g, opts)?;
    let lambda_max = perron.value;
    let reweighted = g.reweight_by_centrality(&perron.vector)?;
    let replicator = Operator::replicator(g, lambda_max);
    let normalized = Operator::new(&reweighted, OperatorKind::SymmetricNormalized, opts)?;
    let n = g.node_count();

    if n <= opts.dense_threshold {
        let r = eigen::materialize(&replicator);
        let ls = eigen::materialize(&normalized);
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                worst = worst.max((r[i][j] - lambda_max * ls[i][j]).abs());
            }
        }
        return Ok(worst);
    }

    let samples = n.min(64);
    let mut e = vec![0.0; n];
    let mut a = vec![0.0; n];
    let mut b = vec![0.0; n];
    let mut worst = 0.0f64;
    for s in 0..samples {
        let j = s * n / samples;
        e[j] = 1.0;
        replicator.apply(&e, &mut a);
        normalized.apply(&e, &mut b);
        e[j] = 0.0;
        for (x, y) in a.iter().zip(&b) {
            worst = worst.max((x - lambda_max * y).abs());
        }
    }
    Ok(worst)
}

/// Largest eigenvalue of a symmetric operator (dense or Lanczos).
pub(crate) fn largest_eigenvalue(op: &dyn LinearOperator, opts: &EigenOptions) -> Result<f64> {
    let n = op.dim();
    if n == 0 {
        return Ok(0.0);
    }
    if n <= opts.dense_threshold {
        let all = dense_symmetric(&eigen::materialize(op));
        return Ok(all.last().map_or(0.0, |p| p.value));
    }
    Ok(lanczos_largest(op, 1, &[], opts.tol, opts.budget(n))?.pairs[0].value)
}
