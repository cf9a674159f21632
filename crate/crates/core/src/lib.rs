//! Spectral graph bisection driven by epidemic diffusion.
//!
//! The replicator operator `R = λmax·I − A` governs epidemic spreading on a
//! graph. It coincides with `λmax` times the symmetric normalized Laplacian of
//! the graph whose edges are reweighted by the eigenvector centralities of
//! their endpoints, so bisecting with `R` amounts to minimizing normalized cut
//! on that reweighted graph. This crate provides:
//!
//! * [`graph`]: an immutable undirected weighted graph, edge-list I/O,
//!   connectivity queries and centrality reweighting;
//! * [`spectral`]: matrix-free operators (`L`, `Lₛ`, `L_rw`, `R`), eigenvector
//!   centrality, the two lowest eigenpairs of each operator and an explicit
//!   Euler integrator for `du/dt = −M u`;
//! * [`partition`]: cut-quality functions and the `N − 1` sweep-cut bisection;
//! * [`benchmark`]: a hierarchical planted-partition generator, NMI, clustering
//!   coefficients and the `(μ1, μ2)` grid experiment.

pub mod benchmark;
pub mod error;
pub mod graph;
pub mod partition;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{Graph, NodeSet};
pub use partition::{sweep_bisect, CutMeasure, CutQuality, GraphVariant, Partition};
pub use spectral::{OperatorKind, SpectralPair};
