//! Cut quality and sweep-cut spectral bisection.
//!
//! For a bipartition `(S, S̄)` with crossing weight `E(S, S̄)`:
//!
//! * ratio cut `R(S) = (1/|S| + 1/|S̄|)·E(S, S̄)`;
//! * normalized cut `N(S) = (1/ν(S) + 1/ν(S̄))·E(S, S̄)`, `ν` the volume.
//!
//! [`sweep_bisect`] sorts the nodes by an eigenvector-derived ordering and
//! scans all `N − 1` prefix cuts, updating the crossing weight, size and
//! volume incrementally in `O(deg)` per node.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSet};
use crate::spectral::{ratio_vector, two_smallest_eigenpairs, EigenOptions, OperatorKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CutMeasure {
    Ratio,
    Normalized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphVariant {
    Original,
    /// Edge weights multiplied by the centralities of both endpoints.
    Reweighted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CutQuality {
    pub measure: CutMeasure,
    pub variant: GraphVariant,
}

impl CutQuality {
    pub const RATIO: CutQuality = CutQuality {
        measure: CutMeasure::Ratio,
        variant: GraphVariant::Original,
    };
    pub const NORMALIZED: CutQuality = CutQuality {
        measure: CutMeasure::Normalized,
        variant: GraphVariant::Original,
    };
    pub const REWEIGHTED_RATIO: CutQuality = CutQuality {
        measure: CutMeasure::Ratio,
        variant: GraphVariant::Reweighted,
    };
    pub const REWEIGHTED_NORMALIZED: CutQuality = CutQuality {
        measure: CutMeasure::Normalized,
        variant: GraphVariant::Reweighted,
    };

    /// Measure minimized by the sweep for each method.
    pub fn for_method(method: OperatorKind) -> CutQuality {
        match method {
            OperatorKind::Laplacian => Self::RATIO,
            OperatorKind::SymmetricNormalized | OperatorKind::RandomWalk => Self::NORMALIZED,
            OperatorKind::Replicator => Self::REWEIGHTED_NORMALIZED,
        }
    }

    pub fn label(self) -> &'static str {
        match (self.variant, self.measure) {
            (GraphVariant::Original, CutMeasure::Ratio) => "ratio_cut",
            (GraphVariant::Original, CutMeasure::Normalized) => "normalized_cut",
            (GraphVariant::Reweighted, CutMeasure::Ratio) => "reweighted_ratio_cut",
            (GraphVariant::Reweighted, CutMeasure::Normalized) => "reweighted_normalized_cut",
        }
    }
}

impl fmt::Display for CutQuality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn check_nontrivial(g: &Graph, s: &NodeSet) -> Result<()> {
    g.check_set(s)?;
    if s.is_trivial() {
        return Err(Error::TrivialCut);
    }
    Ok(())
}

/// Total weight of edges with exactly one endpoint in `s`.
pub fn cut_weight(g: &Graph, s: &NodeSet) -> Result<f64> {
    check_nontrivial(g, s)?;
    Ok(g
        .edges()
        .iter()
        .filter(|e| s.contains(e.u) != s.contains(e.v))
        .map(|e| e.weight)
        .sum())
}

fn ratio_value(cut: f64, size: usize, n: usize) -> f64 {
    if cut == 0.0 {
        return 0.0;
    }
    cut * (1.0 / size as f64 + 1.0 / (n - size) as f64)
}

fn normalized_value(cut: f64, volume: f64, total: f64) -> f64 {
    if cut == 0.0 {
        return 0.0;
    }
    cut * (1.0 / volume + 1.0 / (total - volume))
}

pub fn ratio_cut(g: &Graph, s: &NodeSet) -> Result<f64> {
    let cut = cut_weight(g, s)?;
    Ok(ratio_value(cut, s.len(), g.node_count()))
}

pub fn normalized_cut(g: &Graph, s: &NodeSet) -> Result<f64> {
    let cut = cut_weight(g, s)?;
    let volume = g.volume(s)?;
    let total: f64 = g.degrees().iter().sum();
    Ok(normalized_value(cut, volume, total))
}

/// Evaluates `quality` on `g`, or on `g` reweighted by `theta` when the
/// quality asks for the reweighted variant.
pub fn reweighted_quality(g: &Graph, theta: &[f64], s: &NodeSet, quality: CutQuality) -> Result<f64> {
    let reweighted;
    let target = match quality.variant {
        GraphVariant::Original => g,
        GraphVariant::Reweighted => {
            reweighted = g.reweight_by_centrality(theta)?;
            &reweighted
        }
    };
    match quality.measure {
        CutMeasure::Ratio => ratio_cut(target, s),
        CutMeasure::Normalized => normalized_cut(target, s),
    }
}

/// A sweep-cut bisection.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    /// The prefix side: the first `sweep_position` nodes of the sorted order.
    pub s: NodeSet,
    pub quality: f64,
    pub method: OperatorKind,
    pub quality_kind: CutQuality,
    /// Number of nodes in the chosen prefix, in `1..=n−1`.
    pub sweep_position: usize,
    /// The vector whose sorted order defined the sweep.
    pub ordering: Vec<f64>,
    /// The second eigenvalue was repeated; the ordering is one arbitrary
    /// vector of its eigenspace.
    pub degenerate: bool,
}

impl Partition {
    /// The side with fewer nodes; on a tie, the side holding node 0.
    pub fn smaller_side(&self) -> NodeSet {
        let other = self.s.complement();
        match self.s.len().cmp(&other.len()) {
            std::cmp::Ordering::Less => self.s.clone(),
            std::cmp::Ordering::Greater => other,
            std::cmp::Ordering::Equal if self.s.contains(0) => self.s.clone(),
            std::cmp::Ordering::Equal => other,
        }
    }

    /// JSON record. Member indices are shifted by one when `one_indexed`.
    pub fn to_json(&self, include_ordering: bool, one_indexed: bool) -> serde_json::Value {
        let shift = usize::from(one_indexed);
        let members: Vec<usize> = self.smaller_side().iter().map(|i| i + shift).collect();
        let mut value = json!({
            "method": self.method.name(),
            "quality_kind": self.quality_kind.label(),
            "quality": self.quality,
            "members": members,
            "sweep_position": self.sweep_position,
            "degenerate": self.degenerate,
        });
        if include_ordering {
            value["ordering"] = json!(self.ordering);
        }
        value
    }
}

/// Node order of a sweep: ascending by value, ties by index.
pub fn sweep_order(ordering: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..ordering.len()).collect();
    order.sort_by(|&a, &b| ordering[a].total_cmp(&ordering[b]).then(a.cmp(&b)));
    order
}

/// Quality of every prefix cut `order[..k]`, `k = 1..n−1`, computed incrementally.
pub fn sweep_profile(g: &Graph, order: &[usize], measure: CutMeasure) -> Result<Vec<f64>> {
    let n = g.node_count();
    if order.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: order.len(),
        });
    }
    let degrees = g.degrees();
    let total: f64 = degrees.iter().sum();
    let mut inside = vec![false; n];
    let mut cut = 0.0;
    let mut volume = 0.0;
    let mut profile = Vec::with_capacity(n.saturating_sub(1));
    for (k, &v) in order.iter().enumerate().take(n.saturating_sub(1)) {
        if v >= n || inside[v] {
            return Err(Error::InvalidArgument(format!(
                "sweep order is not a permutation (node {v})"
            )));
        }
        let to_inside: f64 = g.neighbors(v).filter(|&(u, _)| inside[u]).map(|(_, w)| w).sum();
        cut += degrees[v] - 2.0 * to_inside;
        volume += degrees[v];
        inside[v] = true;
        let size = k + 1;
        profile.push(match measure {
            CutMeasure::Ratio => ratio_value(cut, size, n),
            CutMeasure::Normalized => normalized_value(cut, volume, total),
        });
    }
    Ok(profile)
}

fn sweep_profile_from_scratch(g: &Graph, order: &[usize], measure: CutMeasure) -> Result<Vec<f64>> {
    let n = g.node_count();
    let mut s = NodeSet::empty(n);
    let mut profile = Vec::with_capacity(n.saturating_sub(1));
    for &v in order.iter().take(n.saturating_sub(1)) {
        s.insert(v);
        profile.push(match measure {
            CutMeasure::Ratio => ratio_cut(g, &s)?,
            CutMeasure::Normalized => normalized_cut(g, &s)?,
        });
    }
    Ok(profile)
}

/// Checks incremental prefix qualities against from-scratch evaluation for
/// both measures. True iff every deviation is below `1e−9`.
pub fn verify_sweep_incremental(g: &Graph, ordering: &[f64]) -> Result<bool> {
    if ordering.len() != g.node_count() {
        return Err(Error::LengthMismatch {
            expected: g.node_count(),
            got: ordering.len(),
        });
    }
    let order = sweep_order(ordering);
    for measure in [CutMeasure::Ratio, CutMeasure::Normalized] {
        let fast = sweep_profile(g, &order, measure)?;
        let slow = sweep_profile_from_scratch(g, &order, measure)?;
        if fast.iter().zip(&slow).any(|(a, b)| !((a - b).abs() < 1e-9)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Relative slack under which two prefix qualities count as tied; the earlier
/// position wins ties.
const TIE_TOLERANCE: f64 = 1e-12;

/// Best prefix cut of `ordering` under `measure` on `g`.
fn best_prefix(g: &Graph, ordering: &[f64], measure: CutMeasure) -> Result<(NodeSet, f64, usize)> {
    let order = sweep_order(ordering);
    let profile = sweep_profile(g, &order, measure)?;
    let mut best = 0;
    for (k, &q) in profile.iter().enumerate().skip(1) {
        let incumbent = profile[best];
        if q < incumbent - TIE_TOLERANCE * incumbent.abs().max(1e-300) {
            best = k;
        }
    }
    let position = best + 1;
    let s = NodeSet::from_indices(g.node_count(), order[..position].iter().copied())?;
    Ok((s, profile[best], position))
}

/// Spectral bisection by sweep cut with the default eigensolver settings.
pub fn sweep_bisect(g: &Graph, method: OperatorKind) -> Result<Partition> {
    sweep_bisect_with(g, method, &EigenOptions::default())
}

/// Spectral bisection by sweep cut.
///
/// * Laplacian: order by the Fiedler vector, minimize `R(S)`.
/// * Symmetric normalized: order by the ratio of its second to first
///   eigenvector (the `L_rw` Fiedler vector), minimize `N(S)`.
/// * Random walk: order by its second eigenvector, minimize `N(S)`.
/// * Replicator: order by `ψ/θ`, minimize `Ñ(S)` on the centrality-reweighted graph.
pub fn sweep_bisect_with(g: &Graph, method: OperatorKind, opts: &EigenOptions) -> Result<Partition> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::TooSmall { needed: 2, n });
    }
    g.require_connected()?;
    let spectrum = two_smallest_eigenpairs(g, method, opts)?;
    if spectrum.degenerate {
        log::warn!("{method}: second eigenvalue is repeated; the sweep order is not unique");
    }
    let quality_kind = CutQuality::for_method(method);
    let (ordering, scored) = match method {
        OperatorKind::Laplacian | OperatorKind::RandomWalk => (spectrum.second.vector.clone(), None),
        OperatorKind::SymmetricNormalized => (ratio_vector(&spectrum.first, &spectrum.second)?, None),
        OperatorKind::Replicator => {
            let ordering = ratio_vector(&spectrum.first, &spectrum.second)?;
            let reweighted = g.reweight_by_centrality(&spectrum.first.vector)?;
            (ordering, Some(reweighted))
        }
    };
    let target = scored.as_ref().unwrap_or(g);
    let (s, quality, sweep_position) = best_prefix(target, &ordering, quality_kind.measure)?;
    Ok(Partition {
        s,
        quality,
        method,
        quality_kind,
        sweep_position,
        ordering,
        degenerate: spectrum.degenerate,
    })
}

/// Exhaustive minimum of a cut measure over all `2^(n−1) − 1` bipartitions.
/// Only sensible for small graphs (`n ≤ 20`).
pub fn brute_force_minimum(g: &Graph, measure: CutMeasure) -> Result<(NodeSet, f64)> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::TooSmall { needed: 2, n });
    }
    if n > 24 {
        return Err(Error::InvalidArgument(format!(
            "exhaustive search over {n} nodes is too large"
        )));
    }
    let mut best: Option<(NodeSet, f64)> = None;
    // Node n−1 always sits outside S, so each bipartition is visited once.
    for mask in 1u32..(1u32 << (n - 1)) {
        let s = NodeSet::from_mask((0..n).map(|i| i < n - 1 && mask >> i & 1 == 1).collect());
        let q = match measure {
            CutMeasure::Ratio => ratio_cut(g, &s)?,
            CutMeasure::Normalized => normalized_cut(g, &s)?,
        };
        if best.as_ref().is_none_or(|(_, b)| q < *b) {
            best = Some((s, q));
        }
    }
    Ok(best.expect("n >= 2 gives at least one bipartition"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benchmark::random_connected_graph;
    use crate::graph::toy_graph;

    fn set(n: usize, ids: impl IntoIterator<Item = usize>) -> NodeSet {
        NodeSet::from_indices(n, ids).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::unweighted(n, &e).unwrap()
    }

    fn two_triangles_bridge() -> Graph {
        Graph::unweighted(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap()
    }

    /// Crossing weight by scanning every ordered pair of the dense matrix.
    fn cut_by_enumeration(g: &Graph, s: &NodeSet) -> f64 {
        let a = g.to_dense();
        let mut total = 0.0;
        for i in s.iter() {
            for j in s.complement().iter() {
                total += a[i][j];
            }
        }
        total
    }

    #[test]
    fn cut_weight_examples() {
        let t = toy_graph();
        assert_eq!(cut_weight(&t.graph, &t.cut_a).unwrap(), 5.0);
        assert_eq!(cut_by_enumeration(&t.graph, &t.cut_a), 5.0);
        assert_eq!(cut_weight(&t.graph, &t.cut_b).unwrap(), 5.0);

        let disjoint = Graph::unweighted(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(cut_weight(&disjoint, &set(6, 0..3)).unwrap(), 0.0);
        assert_eq!(normalized_cut(&disjoint, &set(6, 0..3)).unwrap(), 0.0);

        assert_eq!(cut_weight(&complete(4), &set(4, [2])).unwrap(), 3.0);
        assert!(matches!(cut_weight(&complete(4), &NodeSet::empty(4)), Err(Error::TrivialCut)));
        assert!(matches!(
            cut_weight(&complete(4), &NodeSet::empty(4).complement()),
            Err(Error::TrivialCut)
        ));
    }

    #[test]
    fn toy_unweighted_qualities() {
        let t = toy_graph();
        let g = &t.graph;
        assert!((ratio_cut(g, &t.cut_a).unwrap() - 1.83).abs() < 0.005);
        assert!((ratio_cut(g, &t.cut_b).unwrap() - 1.83).abs() < 0.005);
        // Nodes 3–5 (0-based 2..5): 4·(1/3 + 1/8).
        let r = ratio_cut(g, &set(11, 2..5)).unwrap();
        assert!((r - 4.0 * (1.0 / 3.0 + 1.0 / 8.0)).abs() < 1e-12);
        assert!((r - 1.833).abs() < 0.0005);
        assert!((normalized_cut(g, &t.cut_a).unwrap() - 0.528).abs() < 0.001);
        assert!((normalized_cut(g, &t.cut_b).unwrap() - 0.417).abs() < 0.001);
    }

    #[test]
    fn identity_reweighting_preserves_quality() {
        let t = toy_graph();
        let ones = vec![1.0; 11];
        for s in [&t.cut_a, &t.cut_b] {
            assert_eq!(
                reweighted_quality(&t.graph, &ones, s, CutQuality::REWEIGHTED_RATIO).unwrap(),
                ratio_cut(&t.graph, s).unwrap()
            );
            assert_eq!(
                reweighted_quality(&t.graph, &ones, s, CutQuality::REWEIGHTED_NORMALIZED).unwrap(),
                normalized_cut(&t.graph, s).unwrap()
            );
        }
    }

    #[test]
    fn qualities_are_symmetric() {
        let g = random_connected_graph(30, 5.0, 3).unwrap();
        let s = set(30, (0..30).filter(|i| i % 3 == 0));
        for f in [cut_weight, ratio_cut, normalized_cut] {
            let a = f(&g, &s).unwrap();
            let b = f(&g, &s.complement()).unwrap();
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn cut_weight_matches_volume_identity() {
        // E(S, S̄) = ν(S) − 2·w(S, S).
        for seed in 0..5 {
            let g = random_connected_graph(40, 6.0, seed).unwrap();
            let s = set(40, (0..40).filter(|i| (i * 7 + seed as usize) % 5 < 2));
            let internal: f64 = g
                .edges()
                .iter()
                .filter(|e| s.contains(e.u) && s.contains(e.v))
                .map(|e| e.weight)
                .sum();
            let via_volume = g.volume(&s).unwrap() - 2.0 * internal;
            assert!((cut_weight(&g, &s).unwrap() - via_volume).abs() < 1e-9);
            assert!((cut_weight(&g, &s).unwrap() - cut_by_enumeration(&g, &s)).abs() < 1e-9);
        }
    }

    #[test]
    fn bridged_triangles_every_method() {
        let g = two_triangles_bridge();
        for measure in [CutMeasure::Ratio, CutMeasure::Normalized] {
            let (s, _) = brute_force_minimum(&g, measure).unwrap();
            assert!(s == set(6, 0..3) || s == set(6, 3..6));
        }
        for method in OperatorKind::ALL {
            let p = sweep_bisect(&g, method).unwrap();
            assert!(p.s == set(6, 0..3) || p.s == set(6, 3..6), "{method}: {:?}", p.s);
            assert_eq!(cut_weight(&g, &p.s).unwrap(), 1.0);
        }
    }

    #[test]
    fn toy_sweeps_pick_the_described_cuts() {
        let t = toy_graph();
        let ls = sweep_bisect(&t.graph, OperatorKind::SymmetricNormalized).unwrap();
        assert!(ls.s == t.cut_b || ls.s == t.cut_b.complement());
        let r = sweep_bisect(&t.graph, OperatorKind::Replicator).unwrap();
        assert!(r.s == t.cut_a || r.s == t.cut_a.complement());
        assert_eq!(r.quality_kind, CutQuality::REWEIGHTED_NORMALIZED);
        assert!((r.quality - 0.747).abs() < 0.001);
    }

    #[test]
    fn partition_quality_matches_recomputation() {
        let g = random_connected_graph(50, 6.0, 11).unwrap();
        for method in OperatorKind::ALL {
            let p = sweep_bisect(&g, method).unwrap();
            assert!(p.s.len() >= 1 && p.s.len() < 50);
            assert_eq!(p.s.len(), p.sweep_position);
            let spectrum = two_smallest_eigenpairs(&g, OperatorKind::Replicator, &EigenOptions::default()).unwrap();
            let recomputed = reweighted_quality(&g, &spectrum.first.vector, &p.s, p.quality_kind).unwrap();
            assert!((p.quality - recomputed).abs() < 1e-9, "{method}");
        }
    }

    #[test]
    fn sweep_errors() {
        let one = Graph::from_edges(1, std::iter::empty()).unwrap();
        assert!(matches!(sweep_bisect(&one, OperatorKind::Laplacian), Err(Error::TooSmall { .. })));
        let split = Graph::unweighted(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            sweep_bisect(&split, OperatorKind::Replicator),
            Err(Error::Disconnected { components: 2 })
        ));
    }

    #[test]
    fn incremental_examples() {
        let t = toy_graph();
        let ordering: Vec<f64> = (0..11).map(|i| ((i * 5) % 11) as f64).collect();
        assert!(verify_sweep_incremental(&t.graph, &ordering).unwrap());

        let g = random_connected_graph(64, 6.0, 21).unwrap();
        let ordering: Vec<f64> = (0..64).map(|i| ((i * 37) % 64) as f64).collect();
        assert!(verify_sweep_incremental(&g, &ordering).unwrap());

        let p10 = Graph::unweighted(10, &(0..9).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
        let ordering: Vec<f64> = (0..10).map(|i| i as f64).collect();
        assert!(verify_sweep_incremental(&p10, &ordering).unwrap());
        let profile = sweep_profile(&p10, &sweep_order(&ordering), CutMeasure::Ratio).unwrap();
        let best = (0..9).min_by(|&a, &b| profile[a].total_cmp(&profile[b])).unwrap();
        assert_eq!(best + 1, 5);
        assert_eq!(sweep_bisect(&p10, OperatorKind::Laplacian).unwrap().s.len(), 5);
    }

    #[test]
    fn order_ties_break_by_index() {
        assert_eq!(sweep_order(&[0.5, 0.1, 0.5, 0.1]), vec![1, 3, 0, 2]);
    }

    #[test]
    fn quality_ties_keep_earliest_position() {
        // A 4-cycle ordered around the ring: prefixes {0} and {0,1,2} tie.
        let c4 = Graph::unweighted(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let (_, q, pos) = best_prefix(&c4, &[0.0, 1.0, 2.0, 3.0], CutMeasure::Ratio).unwrap();
        assert_eq!(pos, 2);
        assert!((q - 2.0).abs() < 1e-15);
        let star = Graph::unweighted(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (_, _, pos) = best_prefix(&star, &[3.0, 0.0, 1.0, 2.0], CutMeasure::Normalized).unwrap();
        assert_eq!(pos, 1);
    }

    #[test]
    fn smaller_side_and_json() {
        let t = toy_graph();
        let r = sweep_bisect(&t.graph, OperatorKind::Replicator).unwrap();
        assert_eq!(r.smaller_side(), t.cut_a);
        let j = r.to_json(false, true);
        assert_eq!(j["members"], json!([1, 2, 3, 4, 5]));
        assert_eq!(j["method"], "replicator");
        assert_eq!(j["quality_kind"], "reweighted_normalized_cut");
        assert!(j.get("ordering").is_none());
        assert_eq!(r.to_json(true, false)["ordering"].as_array().unwrap().len(), 11);
    }

    #[test]
    fn replicator_sweep_is_scale_invariant() {
        for seed in 0..5 {
            let g = random_connected_graph(40, 5.0, 40 + seed).unwrap();
            let base = sweep_bisect(&g, OperatorKind::Replicator).unwrap();
            for factor in [0.5, 2.0, 4.0] {
                let p = sweep_bisect(&g.scaled(factor).unwrap(), OperatorKind::Replicator).unwrap();
                assert_eq!(p.s, base.s, "factor {factor}");
            }
        }
    }

    #[test]
    fn brute_force_small_cases() {
        // In K4 every bipartition has ratio cut 4.
        let (_, q) = brute_force_minimum(&complete(4), CutMeasure::Ratio).unwrap();
        assert!((q - 4.0).abs() < 1e-12);
        let p4 = Graph::unweighted(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (s, q) = brute_force_minimum(&p4, CutMeasure::Ratio).unwrap();
        assert!(s == set(4, [0, 1]) || s == set(4, [2, 3]));
        assert!((q - 1.0).abs() < 1e-12);
        let (s, q) = brute_force_minimum(&p4, CutMeasure::Normalized).unwrap();
        assert!(s == set(4, [0, 1]) || s == set(4, [2, 3]));
        assert!((q - 2.0 / 3.0).abs() < 1e-12);
    }
}
