//! Explicit Euler integration of `du/dt = −M u`.

use serde::Serialize;

use super::eigen::LinearOperator;
use super::{largest_eigenvalue, EigenOptions, Operator, OperatorKind};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiffusionState {
    pub step: usize,
    pub t: f64,
    pub u: Vec<f64>,
}

/// Integrates `steps` Euler steps of size `dt` from `u0`, keeping every
/// `stride`-th state plus the last one. `dt` must satisfy `dt < 2/ρ(M)`.
///
/// Every operator here is positive semidefinite and self-adjoint in either the
/// Euclidean inner product (`L`, `Lₛ`, `R`) or the degree-weighted one
/// (`L_rw`), so a stable step never increases the corresponding norm; growth
/// is reported as [`Error::Unstable`].
pub fn simulate_diffusion(
    g: &Graph,
    kind: OperatorKind,
    u0: &[f64],
    dt: f64,
    steps: usize,
    stride: usize,
    opts: &EigenOptions,
) -> Result<Vec<DiffusionState>> {
    let n = g.node_count();
    if u0.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: u0.len(),
        });
    }
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(Error::InvalidArgument(format!("dt must be positive, got {dt}")));
    }
    if stride == 0 {
        return Err(Error::InvalidArgument("stride must be at least 1".into()));
    }
    if u0.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidArgument("initial state has non-finite entries".into()));
    }
    if kind == OperatorKind::Replicator {
        g.require_connected()?;
    }
    let op = Operator::new(g, kind, opts)?;

    let spectral_radius = match kind {
        OperatorKind::RandomWalk => {
            let sym = Operator::new(g, OperatorKind::SymmetricNormalized, opts)?;
            largest_eigenvalue(&sym, opts)?
        }
        _ => largest_eigenvalue(&op, opts)?,
    };
    if spectral_radius > 0.0 && dt >= 2.0 / spectral_radius {
        return Err(Error::Unstable(format!(
            "dt = {dt} violates dt < 2/ρ = {}",
            2.0 / spectral_radius
        )));
    }

    let weights: Vec<f64> = match kind {
        OperatorKind::RandomWalk => g.degrees().to_vec(),
        _ => vec![1.0; n],
    };
    let energy = |u: &[f64]| -> f64 {
        u.iter()
            .zip(&weights)
            .map(|(x, w)| w * x * x)
            .sum::<f64>()
            .sqrt()
    };
    let limit = energy(u0) * (1.0 + 1e-9) + 1e-300;

    let mut u = u0.to_vec();
    let mut mu = vec![0.0; n];
    let mut trajectory = vec![DiffusionState {
        step: 0,
        t: 0.0,
        u: u.clone(),
    }];
    for step in 1..=steps {
        op.apply(&u, &mut mu);
        for (x, m) in u.iter_mut().zip(&mu) {
            *x -= dt * m;
        }
        let e = energy(&u);
        if !e.is_finite() || e > limit {
            return Err(Error::Unstable(format!(
                "norm grew from {} to {e} at step {step}",
                energy(u0)
            )));
        }
        if step % stride == 0 || step == steps {
            trajectory.push(DiffusionState {
                step,
                t: step as f64 * dt,
                u: u.clone(),
            });
        }
    }
    Ok(trajectory)
}
