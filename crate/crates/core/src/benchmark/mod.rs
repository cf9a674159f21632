//! Synthetic hierarchical community benchmark.
//!
//! Nodes are split into `macro_count` equal macro communities, each made of
//! `micro_per_macro` equal micro communities. Every edge stub of a node is
//! sent to another macro community with probability `μ1`, to another micro
//! community of the same macro community with probability `μ2`, and stays in
//! its own micro community otherwise.
//!
//! This is a planted-partition model with homogeneous degrees and equal
//! community sizes, not the LFR generator: there are no power-law degree or
//! community-size distributions. The mixing semantics of `μ1` and `μ2` are the
//! part the grid experiment varies, and those are kept exactly.
//!
//! All randomness comes from ChaCha8 streams seeded with 64-bit integers, so
//! output is identical across platforms.

mod clustering;
mod generator;
mod grid;
mod nmi;

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub use clustering::{avg_clustering_coefficient, local_clustering};
pub use generator::generate;
pub use grid::{derive_seed, run_grid, snap_mu, CellRecord, GridResult, GridSpec};
pub use nmi::nmi;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkSpec {
    pub n: usize,
    pub macro_count: usize,
    pub micro_per_macro: usize,
    /// Fraction of stubs that leave the macro community.
    pub mu1: f64,
    /// Fraction of stubs that leave the micro community but stay in the macro one.
    pub mu2: f64,
    pub target_degree: f64,
    pub seed: u64,
}

impl Default for BenchmarkSpec {
    fn default() -> Self {
        BenchmarkSpec {
            n: 100,
            macro_count: 2,
            micro_per_macro: 2,
            mu1: 0.0,
            mu2: 0.0,
            target_degree: 10.0,
            seed: 0,
        }
    }
}

impl BenchmarkSpec {
    pub fn micro_count(&self) -> usize {
        self.macro_count * self.micro_per_macro
    }

    pub fn micro_size(&self) -> usize {
        self.n / self.micro_count()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidSpec(m));
        if self.macro_count == 0 || self.micro_per_macro == 0 {
            return bad("community counts must be at least 1".into());
        }
        if self.n == 0 || self.n % self.micro_count() != 0 {
            return bad(format!(
                "n = {} is not a positive multiple of {} macro × {} micro communities",
                self.n, self.macro_count, self.micro_per_macro
            ));
        }
        for (name, mu) in [("mu1", self.mu1), ("mu2", self.mu2)] {
            if !(0.0..=0.5).contains(&mu) {
                return bad(format!("{name} = {mu} is outside [0, 0.5]"));
            }
        }
        if self.mu1 + self.mu2 > 1.0 {
            return bad(format!("mu1 + mu2 = {} exceeds 1", self.mu1 + self.mu2));
        }
        if self.mu1 > 0.0 && self.macro_count < 2 {
            return bad("mu1 > 0 needs at least two macro communities".into());
        }
        if self.mu2 > 0.0 && self.micro_per_macro < 2 {
            return bad("mu2 > 0 needs at least two micro communities per macro community".into());
        }
        if !(self.target_degree > 0.0) || !self.target_degree.is_finite() {
            return bad(format!("target degree {} must be positive", self.target_degree));
        }
        if self.target_degree >= self.micro_size() as f64 {
            return bad(format!(
                "target degree {} is not below the micro community size {}",
                self.target_degree,
                self.micro_size()
            ));
        }
        Ok(())
    }

    pub fn macro_of(&self, node: usize) -> usize {
        node / (self.micro_size() * self.micro_per_macro)
    }

    pub fn micro_of(&self, node: usize) -> usize {
        node / self.micro_size()
    }
}

/// A generated graph with its planted communities.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub macro_labels: Vec<usize>,
    pub micro_labels: Vec<usize>,
    /// Stubs discarded because no valid partner was found.
    pub dropped_stubs: usize,
    /// Bridges inserted to connect the graph.
    pub repairs: usize,
}

impl LabeledGraph {
    /// Label sidecar: one `node macro micro` line per node.
    pub fn labels_text(&self, one_indexed: bool) -> String {
        let shift = usize::from(one_indexed);
        let mut out = String::new();
        for (i, (a, b)) in self.macro_labels.iter().zip(&self.micro_labels).enumerate() {
            out.push_str(&format!("{} {a} {b}\n", i + shift));
        }
        out
    }
}

/// Per-node label columns parsed from a label file.
///
/// Each non-comment line is `node label [label ...]`; nodes must cover
/// `0..n` (or `1..=n` when one-indexed) exactly once.
pub fn parse_labels(text: &str, one_indexed: bool) -> Result<Vec<Vec<usize>>> {
    let mut rows: Vec<(usize, Vec<usize>, usize)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields = line
            .split_whitespace()
            .map(|f| {
                f.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("'{f}' is not a nonnegative integer"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        if fields.len() < 2 {
            return Err(Error::Parse {
                line: line_no,
                message: "expected a node index and at least one label".into(),
            });
        }
        let node = if one_indexed {
            fields[0].checked_sub(1).ok_or(Error::Parse {
                line: line_no,
                message: "node index 0 in one-indexed input".into(),
            })?
        } else {
            fields[0]
        };
        rows.push((node, fields[1..].to_vec(), line_no));
    }
    let n = rows.len();
    let width = rows.first().map_or(0, |r| r.1.len());
    let mut columns = vec![vec![usize::MAX; n]; width];
    let mut seen = vec![false; n];
    for (node, labels, line) in rows {
        if labels.len() != width {
            return Err(Error::Parse {
                line,
                message: format!("expected {width} labels, found {}", labels.len()),
            });
        }
        if node >= n || seen[node] {
            return Err(Error::Parse {
                line,
                message: format!("node {node} is repeated or outside 0..{n}"),
            });
        }
        seen[node] = true;
        for (col, label) in columns.iter_mut().zip(labels) {
            col[node] = label;
        }
    }
    Ok(columns)
}

/// Random connected graph used by tests and timing runs: a random recursive
/// tree over a shuffled node order plus uniformly random extra edges, for
/// about `n·mean_degree/2` edges in total.
pub fn random_connected_graph(n: usize, mean_degree: f64, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::TooSmall { needed: 2, n });
    }
    if !(mean_degree >= 0.0) || !mean_degree.is_finite() {
        return Err(Error::InvalidArgument(format!("mean degree {mean_degree} is invalid")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max_edges = n * (n - 1) / 2;
    let target = ((n as f64 * mean_degree / 2.0).round() as usize).clamp(n - 1, max_edges);

    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut seen = HashSet::with_capacity(target);
    let mut edges = Vec::with_capacity(target);
    let mut push = |a: usize, b: usize, seen: &mut HashSet<(usize, usize)>| {
        let (u, v) = (a.min(b), a.max(b));
        if seen.insert((u, v)) {
            edges.push(Edge { u, v, weight: 1.0 });
        }
    };
    for k in 1..n {
        let parent = order[rng.gen_range(0..k as u64) as usize];
        push(order[k], parent, &mut seen);
    }
    if 2 * target > max_edges {
        let mut rest: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|p| !seen.contains(p))
            .collect();
        rest.shuffle(&mut rng);
        for (u, v) in rest.into_iter().take(target - (n - 1)) {
            push(u, v, &mut seen);
        }
    } else {
        while seen.len() < target {
            let a = rng.gen_range(0..n as u64) as usize;
            let b = rng.gen_range(0..n as u64) as usize;
            if a != b {
                push(a, b, &mut seen);
            }
        }
    }
    Ok(Graph::from_checked(n, edges))
}
