//! The 11-node illustrative graph: a 6-clique whose hub also anchors a sparse
//! path of five nodes.
//!
//! Nodes are labelled 1–11 in prose and 0–10 here. The clique is {6,…,11},
//! the path is 1–2–3–4–5 and each path node attaches to hub 6. Both candidate
//! cuts cross five edges; cut A separates {1,…,5}, cut B separates {1,…,6}.

use serde::Serialize;

use super::{Graph, NodeSet};
use crate::error::Result;
use crate::partition::{normalized_cut, ratio_cut};
use crate::spectral::{eigenvector_centrality, EigenOptions};

/// Euclidean norm of θ under which the reference reweighted ratio cuts
/// (11.4 and 32.3) are reproduced. Reweighted ratio cut scales with ‖θ‖²;
/// reweighted normalized cut does not depend on it.
pub const TABLE_CENTRALITY_NORM: f64 = 10.0;

#[derive(Debug, Clone)]
pub struct ToyFixture {
    pub graph: Graph,
    /// {1,…,5} (0-based {0,…,4}).
    pub cut_a: NodeSet,
    /// {1,…,6} (0-based {0,…,5}).
    pub cut_b: NodeSet,
}

pub fn toy_graph() -> ToyFixture {
    let mut edges = Vec::new();
    for i in 5..11 {
        for j in i + 1..11 {
            edges.push((i, j));
        }
    }
    for i in 0..4 {
        edges.push((i, i + 1));
    }
    for i in 0..5 {
        edges.push((i, 5));
    }
    let graph = Graph::unweighted(11, &edges).expect("fixture edges are valid");
    ToyFixture {
        graph,
        cut_a: NodeSet::from_indices(11, 0..5).expect("in range"),
        cut_b: NodeSet::from_indices(11, 0..6).expect("in range"),
    }
}

/// One row of the quality table: a measure evaluated on both cuts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TableRow {
    pub cut_a: f64,
    pub cut_b: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QualityTable {
    pub ratio: TableRow,
    pub normalized: TableRow,
    pub reweighted_ratio: TableRow,
    pub reweighted_normalized: TableRow,
}

impl QualityTable {
    /// Published values for the fixture.
    pub const REFERENCE: QualityTable = QualityTable {
        ratio: TableRow { cut_a: 1.83, cut_b: 1.83 },
        normalized: TableRow { cut_a: 0.528, cut_b: 0.417 },
        reweighted_ratio: TableRow { cut_a: 11.4, cut_b: 32.3 },
        reweighted_normalized: TableRow { cut_a: 0.747, cut_b: 0.778 },
    };

    pub fn rows(&self) -> [(&'static str, TableRow); 4] {
        [
            ("R(S)", self.ratio),
            ("N(S)", self.normalized),
            ("R~(S)", self.reweighted_ratio),
            ("N~(S)", self.reweighted_normalized),
        ]
    }
}

/// Agreement rule between a computed table entry and its published value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tolerance {
    /// Within one unit of the last of this many significant digits of the
    /// reference, which covers a reference rounded in either direction.
    SignificantFigures(u32),
    Absolute(f64),
}

impl Tolerance {
    pub fn bound(self, reference: f64) -> f64 {
        match self {
            Tolerance::SignificantFigures(k) => {
                10f64.powi(reference.abs().log10().floor() as i32 - (k as i32 - 1))
            }
            Tolerance::Absolute(t) => t,
        }
    }

    pub fn accepts(self, value: f64, reference: f64) -> bool {
        (value - reference).abs() <= self.bound(reference) * (1.0 + 1e-9)
    }
}

impl QualityTable {
    /// Tolerance per row (in [`QualityTable::rows`] order) and cut.
    pub const TOLERANCES: [[Tolerance; 2]; 4] = [
        [Tolerance::SignificantFigures(3), Tolerance::SignificantFigures(3)],
        [Tolerance::SignificantFigures(3), Tolerance::SignificantFigures(3)],
        [Tolerance::Absolute(0.05), Tolerance::Absolute(1.5)],
        [Tolerance::Absolute(0.05), Tolerance::Absolute(0.05)],
    ];
}

impl ToyFixture {
    /// Quality measures of both cuts on the original graph and on the graph
    /// reweighted by θ scaled to [`TABLE_CENTRALITY_NORM`].
    pub fn quality_table(&self) -> Result<QualityTable> {
        let g = &self.graph;
        let centrality = eigenvector_centrality(g, &EigenOptions::default())?;
        let theta: Vec<f64> = centrality
            .vector
            .iter()
            .map(|t| t * TABLE_CENTRALITY_NORM)
            .collect();
        let rw = g.reweight_by_centrality(&theta)?;
        let row = |graph: &Graph, f: fn(&Graph, &NodeSet) -> Result<f64>| -> Result<TableRow> {
            Ok(TableRow {
                cut_a: f(graph, &self.cut_a)?,
                cut_b: f(graph, &self.cut_b)?,
            })
        };
        Ok(QualityTable {
            ratio: row(g, ratio_cut)?,
            normalized: row(g, normalized_cut)?,
            reweighted_ratio: row(&rw, ratio_cut)?,
            reweighted_normalized: row(&rw, normalized_cut)?,
        })
    }
}
