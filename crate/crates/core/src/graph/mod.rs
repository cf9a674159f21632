//! Undirected weighted graphs.
//!
//! A [`Graph`] is immutable once built. Edges are stored once with `u < v`
//! and mirrored into a compressed adjacency structure so neighbor scans and
//! adjacency products cost `O(E)`.

mod io;
mod toy;

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

pub use io::{load_edge_list, read_edge_list_file, write_edge_list};
pub use toy::{toy_graph, QualityTable, TableRow, Tolerance, ToyFixture, TABLE_CENTRALITY_NORM};

/// An undirected edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    offsets: Vec<usize>,
    targets: Vec<usize>,
    weights: Vec<f64>,
    degrees: Vec<f64>,
}

impl Graph {
    /// Builds a graph on `n` nodes. Self-loops, duplicate undirected edges,
    /// nonpositive or non-finite weights and out-of-range endpoints are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        for (a, b, w) in edges {
            for index in [a, b] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if !(w > 0.0) || !w.is_finite() {
                return Err(Error::NonPositiveWeight { u: a, v: b, weight: w });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if !seen.insert((u, v)) {
                return Err(Error::DuplicateEdge(u, v));
            }
            list.push(Edge { u, v, weight: w });
        }
        Ok(Self::from_checked(n, list))
    }

    /// Builds a graph with unit weights.
    pub fn unweighted(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Self::from_edges(n, edges.iter().map(|&(u, v)| (u, v, 1.0)))
    }

    pub(crate) fn from_checked(n: usize, mut edges: Vec<Edge>) -> Graph {
        edges.sort_by(|a, b| (a.u, a.v).cmp(&(b.u, b.v)));

        let mut counts = vec![0usize; n + 1];
        for e in &edges {
            counts[e.u + 1] += 1;
            counts[e.v + 1] += 1;
        }
        for i in 0..n {
            counts[i + 1] += counts[i];
        }
        let offsets = counts;
        let mut fill = offsets.clone();
        let mut targets = vec![0usize; 2 * edges.len()];
        let mut weights = vec![0.0; 2 * edges.len()];
        for e in &edges {
            targets[fill[e.u]] = e.v;
            weights[fill[e.u]] = e.weight;
            fill[e.u] += 1;
            targets[fill[e.v]] = e.u;
            weights[fill[e.v]] = e.weight;
            fill[e.v] += 1;
        }
        // Neighbor lists come out sorted by target because edges are sorted by (u, v)
        // and every node sees its lower neighbors before its higher ones.
        let degrees = (0..n)
            .map(|i| weights[offsets[i]..offsets[i + 1]].iter().sum())
            .collect();

        Graph {
            n,
            edges,
            offsets,
            targets,
            weights,
            degrees,
        }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// True when every edge has weight exactly 1.
    pub fn is_unweighted(&self) -> bool {
        self.edges.iter().all(|e| e.weight == 1.0)
    }

    /// Neighbors of `i` with edge weights, in increasing neighbor order.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let range = self.offsets[i]..self.offsets[i + 1];
        self.targets[range.clone()]
            .iter()
            .copied()
            .zip(self.weights[range].iter().copied())
    }

    pub fn neighbor_indices(&self, i: usize) -> &[usize] {
        &self.targets[self.offsets[i]..self.offsets[i + 1]]
    }

    /// Number of incident edges, ignoring weights.
    pub fn neighbor_count(&self, i: usize) -> usize {
        self.offsets[i + 1] - self.offsets[i]
    }

    /// Weight of edge `{i, j}`, or 0 if absent.
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        let range = self.offsets[i]..self.offsets[i + 1];
        match self.targets[range.clone()].binary_search(&j) {
            Ok(k) => self.weights[range.start + k],
            Err(_) => 0.0,
        }
    }

    /// Weighted degree `dᵢ = Σⱼ wᵢⱼ`.
    pub fn degree(&self, i: usize) -> Result<f64> {
        self.degrees
            .get(i)
            .copied()
            .ok_or(Error::IndexOutOfRange { index: i, n: self.n })
    }

    pub fn degrees(&self) -> &[f64] {
        &self.degrees
    }

    pub fn max_degree(&self) -> f64 {
        self.degrees.iter().copied().fold(0.0, f64::max)
    }

    /// Sum of all edge weights (each undirected edge counted once).
    pub fn total_weight(&self) -> f64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    /// Volume `ν(S) = Σ_{i∈S} dᵢ`.
    pub fn volume(&self, s: &NodeSet) -> Result<f64> {
        self.check_set(s)?;
        Ok(s.iter().map(|i| self.degrees[i]).sum())
    }

    pub(crate) fn check_set(&self, s: &NodeSet) -> Result<()> {
        if s.universe() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: s.universe(),
            });
        }
        Ok(())
    }

    /// `y = A x`.
    pub fn adjacency_apply(&self, x: &[f64], y: &mut [f64]) {
        for (i, out) in y.iter_mut().enumerate().take(self.n) {
            let range = self.offsets[i]..self.offsets[i + 1];
            let mut acc = 0.0;
            for (&j, &w) in self.targets[range.clone()].iter().zip(&self.weights[range]) {
                acc += w * x[j];
            }
            *out = acc;
        }
    }

    /// Dense adjacency matrix, row-major.
    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        let mut a = vec![vec![0.0; self.n]; self.n];
        for e in &self.edges {
            a[e.u][e.v] = e.weight;
            a[e.v][e.u] = e.weight;
        }
        a
    }

    /// Component id per node, numbered in order of their smallest member.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &v in self.neighbor_indices(u) {
                    if label[v] == usize::MAX {
                        label[v] = count;
                        queue.push_back(v);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_labels().1 <= 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        let (_, components) = self.component_labels();
        if components > 1 {
            return Err(Error::Disconnected { components });
        }
        Ok(())
    }

    /// Induced subgraph on the largest connected component. Ties go to the
    /// component holding the smallest original index.
    pub fn largest_component(&self) -> (Graph, ComponentMap) {
        let (labels, count) = self.component_labels();
        if count <= 1 {
            return (self.clone(), ComponentMap::identity(self.n));
        }
        let mut sizes = vec![0usize; count];
        for &l in &labels {
            sizes[l] += 1;
        }
        // Labels are assigned in order of smallest member, so the first maximum wins ties.
        let best = (0..count).fold(0, |b, c| if sizes[c] > sizes[b] { c } else { b });
        let mut old_to_new = vec![None; self.n];
        let mut new_to_old = Vec::with_capacity(sizes[best]);
        for (i, &l) in labels.iter().enumerate() {
            if l == best {
                old_to_new[i] = Some(new_to_old.len());
                new_to_old.push(i);
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|e| match (old_to_new[e.u], old_to_new[e.v]) {
                (Some(u), Some(v)) => Some(Edge { u, v, weight: e.weight }),
                _ => None,
            })
            .collect();
        let sub = Self::from_checked(new_to_old.len(), edges);
        (
            sub,
            ComponentMap {
                old_to_new,
                new_to_old,
            },
        )
    }

    /// Reweights every edge to `wᵢⱼ·θᵢ·θⱼ`.
    pub fn reweight_by_centrality(&self, theta: &[f64]) -> Result<Graph> {
        if theta.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: theta.len(),
            });
        }
        if let Some((index, &value)) = theta
            .iter()
            .enumerate()
            .find(|(_, &t)| !(t > 0.0) || !t.is_finite())
        {
            return Err(Error::NonPositiveCentrality { index, value });
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                weight: e.weight * theta[e.u] * theta[e.v],
                ..*e
            })
            .collect();
        Ok(Self::from_checked(self.n, edges))
    }

    /// Multiplies every weight by `factor > 0`.
    pub fn scaled(&self, factor: f64) -> Result<Graph> {
        if !(factor > 0.0) || !factor.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "scale factor must be positive, got {factor}"
            )));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                weight: e.weight * factor,
                ..*e
            })
            .collect();
        Ok(Self::from_checked(self.n, edges))
    }
}

/// Index mapping between a graph and one of its induced subgraphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentMap {
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

impl ComponentMap {
    fn identity(n: usize) -> Self {
        ComponentMap {
            old_to_new: (0..n).map(Some).collect(),
            new_to_old: (0..n).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.new_to_old.iter().enumerate().all(|(i, &o)| i == o)
            && self.old_to_new.len() == self.new_to_old.len()
    }
}

/// A subset `S` of the nodes `{0, …, n−1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NodeSet {
    member: Vec<bool>,
    len: usize,
}

impl NodeSet {
    pub fn empty(n: usize) -> Self {
        NodeSet {
            member: vec![false; n],
            len: 0,
        }
    }

    /// Duplicated indices are accepted and counted once.
    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, indices: I) -> Result<Self> {
        let mut set = Self::empty(n);
        for i in indices {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            set.insert(i);
        }
        Ok(set)
    }

    pub fn from_mask(member: Vec<bool>) -> Self {
        let len = member.iter().filter(|&&m| m).count();
        NodeSet { member, len }
    }

    pub(crate) fn insert(&mut self, i: usize) {
        if !self.member[i] {
            self.member[i] = true;
            self.len += 1;
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.member.get(i).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Size of the ground set.
    pub fn universe(&self) -> usize {
        self.member.len()
    }

    /// Empty or everything.
    pub fn is_trivial(&self) -> bool {
        self.len == 0 || self.len == self.member.len()
    }

    pub fn complement(&self) -> NodeSet {
        NodeSet {
            member: self.member.iter().map(|m| !m).collect(),
            len: self.member.len() - self.len,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.member
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn mask(&self) -> &[bool] {
        &self.member
    }

    /// 0/1 labels, 1 for members.
    pub fn labels(&self) -> Vec<usize> {
        self.member.iter().map(|&m| m as usize).collect()
    }
}
