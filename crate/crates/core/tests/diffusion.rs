use epispec::benchmark::random_connected_graph;
use epispec::spectral::{simulate_diffusion, EigenOptions};
use epispec::{Error, Graph, OperatorKind};
use nalgebra::{DMatrix, DVector};

/// Operator matrix built straight from its definition.
fn matrix(g: &Graph, kind: OperatorKind) -> DMatrix<f64> {
    let n = g.node_count();
    let a = DMatrix::from_fn(n, n, |i, j| g.weight(i, j));
    let d: Vec<f64> = (0..n).map(|i| a.row(i).sum()).collect();
    match kind {
        OperatorKind::Laplacian => DMatrix::from_diagonal(&DVector::from_vec(d)) - a,
        OperatorKind::SymmetricNormalized => {
            DMatrix::from_fn(n, n, |i, j| f64::from(i == j) - a[(i, j)] / (d[i] * d[j]).sqrt())
        }
        OperatorKind::RandomWalk => DMatrix::from_fn(n, n, |i, j| f64::from(i == j) - a[(i, j)] / d[i]),
        OperatorKind::Replicator => {
            let lmax = a.clone().symmetric_eigen().eigenvalues.max();
            DMatrix::identity(n, n) * lmax - a
        }
    }
}

/// `exp(−tM)·u0` via the eigendecomposition of `M` or, for `L_rw`, of its
/// symmetric similar `D^{1/2} L_rw D^{−1/2}`.
fn exact(g: &Graph, kind: OperatorKind, u0: &[f64], t: f64) -> Vec<f64> {
    let n = g.node_count();
    let (m, left, right) = if kind == OperatorKind::RandomWalk {
        let d: Vec<f64> = g.degrees().to_vec();
        let s = DMatrix::from_diagonal(&DVector::from_iterator(n, d.iter().map(|x| x.sqrt())));
        let si = DMatrix::from_diagonal(&DVector::from_iterator(n, d.iter().map(|x| 1.0 / x.sqrt())));
        (&s * matrix(g, kind) * &si, si, s)
    } else {
        (matrix(g, kind), DMatrix::identity(n, n), DMatrix::identity(n, n))
    };
    let sym = (&m + m.transpose()) * 0.5;
    let e = sym.symmetric_eigen();
    let expm = &e.eigenvectors
        * DMatrix::from_diagonal(&e.eigenvalues.map(|l| (-t * l).exp()))
        * e.eigenvectors.transpose();
    (left * expm * right * DVector::from_column_slice(u0)).as_slice().to_vec()
}

fn rel_err(a: &[f64], b: &[f64]) -> f64 {
    let diff: f64 = a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt();
    diff / b.iter().map(|y| y * y).sum::<f64>().sqrt()
}

fn lambda_max_adjacency(g: &Graph) -> f64 {
    let n = g.node_count();
    DMatrix::from_fn(n, n, |i, j| g.weight(i, j)).symmetric_eigen().eigenvalues.max()
}

#[test]
fn euler_tracks_matrix_exponential() {
    let opts = EigenOptions::default();
    for seed in 0..6 {
        let g = random_connected_graph(8 + 2 * seed as usize, 4.0, seed).unwrap();
        let n = g.node_count();
        let u0: Vec<f64> = (0..n).map(|i| ((i * 7 + 3) % 5) as f64 - 1.5).collect();
        let dt = 1e-3 * 2.0 / lambda_max_adjacency(&g);
        for kind in OperatorKind::ALL {
            let traj = simulate_diffusion(&g, kind, &u0, dt, 2000, 500, &opts).unwrap();
            assert_eq!(traj.len(), 5);
            for state in &traj {
                let err = rel_err(&state.u, &exact(&g, kind, &u0, state.t));
                assert!(err < 1e-3, "{kind} seed {seed} t {}: {err}", state.t);
            }
        }
    }
}

#[test]
fn trajectory_bookkeeping() {
    let g = Graph::unweighted(3, &[(0, 1), (1, 2)]).unwrap();
    let traj = simulate_diffusion(&g, OperatorKind::Laplacian, &[1.0, 0.0, 0.0], 0.1, 7, 3, &EigenOptions::default())
        .unwrap();
    let steps: Vec<usize> = traj.iter().map(|s| s.step).collect();
    assert_eq!(steps, vec![0, 3, 6, 7]);
    assert!((traj[3].t - 0.7).abs() < 1e-15);
    // The Laplacian flow conserves the sum.
    for s in &traj {
        assert!((s.u.iter().sum::<f64>() - 1.0).abs() < 1e-14);
    }
    // One step by hand: u − 0.1·L·u with u = e₀.
    let one = simulate_diffusion(&g, OperatorKind::Laplacian, &[1.0, 0.0, 0.0], 0.1, 1, 1, &EigenOptions::default())
        .unwrap();
    assert_eq!(one[1].u, vec![0.9, 0.1, 0.0]);
}

#[test]
fn step_size_limit() {
    // Path P3: ρ(L) = 3, so dt must stay below 2/3.
    let g = Graph::unweighted(3, &[(0, 1), (1, 2)]).unwrap();
    let opts = EigenOptions::default();
    let u0 = [1.0, -2.0, 1.0];
    assert!(simulate_diffusion(&g, OperatorKind::Laplacian, &u0, 0.66, 50, 1, &opts).is_ok());
    let err = simulate_diffusion(&g, OperatorKind::Laplacian, &u0, 0.67, 50, 1, &opts).unwrap_err();
    assert!(matches!(err, Error::Unstable(_)));
    assert!(err.is_numerical());
    // Ls and L_rw on P3 have spectral radius 2.
    for kind in [OperatorKind::SymmetricNormalized, OperatorKind::RandomWalk] {
        assert!(simulate_diffusion(&g, kind, &u0, 0.99, 20, 1, &opts).is_ok());
        assert!(simulate_diffusion(&g, kind, &u0, 1.0, 20, 1, &opts).is_err());
    }
}

#[test]
fn invalid_inputs() {
    let g = Graph::unweighted(3, &[(0, 1), (1, 2)]).unwrap();
    let opts = EigenOptions::default();
    let k = OperatorKind::Laplacian;
    assert!(matches!(
        simulate_diffusion(&g, k, &[1.0, 0.0], 0.1, 5, 1, &opts),
        Err(Error::LengthMismatch { .. })
    ));
    assert!(simulate_diffusion(&g, k, &[1.0, 0.0, 0.0], 0.0, 5, 1, &opts).is_err());
    assert!(simulate_diffusion(&g, k, &[1.0, 0.0, 0.0], 0.1, 5, 0, &opts).is_err());
    assert!(simulate_diffusion(&g, k, &[f64::NAN, 0.0, 0.0], 0.1, 5, 1, &opts).is_err());
    let split = Graph::unweighted(4, &[(0, 1), (2, 3)]).unwrap();
    assert!(matches!(
        simulate_diffusion(&split, OperatorKind::Replicator, &[1.0; 4], 0.1, 5, 1, &opts),
        Err(Error::Disconnected { .. })
    ));
}

#[test]
fn replicator_keeps_centrality_direction() {
    // θ spans the kernel of R, so it is a fixed point.
    let g = random_connected_graph(15, 4.0, 77).unwrap();
    let n = g.node_count();
    let a = DMatrix::from_fn(n, n, |i, j| g.weight(i, j));
    let e = a.symmetric_eigen();
    let top = e.eigenvalues.imax();
    let theta: Vec<f64> = e.eigenvectors.column(top).iter().map(|x| x.abs()).collect();
    let dt = 0.5 / e.eigenvalues.max();
    let traj = simulate_diffusion(&g, OperatorKind::Replicator, &theta, dt, 100, 100, &EigenOptions::default())
        .unwrap();
    assert!(rel_err(&traj[1].u, &theta) < 1e-9);
}
