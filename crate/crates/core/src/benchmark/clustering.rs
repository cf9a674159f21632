use crate::graph::Graph;

/// Local clustering coefficient of every node, ignoring weights. Nodes with
/// fewer than two neighbors get 0.
pub fn local_clustering(g: &Graph) -> Vec<f64> {
    (0..g.node_count())
        .map(|i| {
            let nbrs = g.neighbor_indices(i);
            let d = nbrs.len();
            if d < 2 {
                return 0.0;
            }
            let mut links = 0usize;
            for &j in nbrs {
                links += sorted_intersection(nbrs, g.neighbor_indices(j));
            }
            // Each triangle through i is seen from both of its other corners.
            links as f64 / (d * (d - 1)) as f64
        })
        .collect()
}

fn sorted_intersection(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Mean of the local clustering coefficients; 0 for the empty graph.
pub fn avg_clustering_coefficient(g: &Graph) -> f64 {
    let n = g.node_count();
    if n == 0 {
        return 0.0;
    }
    local_clustering(g).iter().sum::<f64>() / n as f64
}
