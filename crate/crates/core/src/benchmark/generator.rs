use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BenchmarkSpec, LabeledGraph};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Partner draws per stub before it is dropped.
const MATCH_RETRIES: usize = 50;
/// Candidate intra-micro edges examined per bridge.
const REWIRE_ATTEMPTS: usize = 32;

fn pick<T: Copy>(items: &[T], rng: &mut ChaCha8Rng) -> T {
    items[rng.gen_range(0..items.len() as u64) as usize]
}

/// Pairs stubs uniformly at random. With `group`, partners must lie in
/// different groups. Returns the number of dropped stubs.
fn match_stubs(
    mut stubs: Vec<usize>,
    group: Option<&dyn Fn(usize) -> usize>,
    adj: &mut [BTreeSet<usize>],
    rng: &mut ChaCha8Rng,
) -> usize {
    stubs.shuffle(rng);
    let mut dropped = 0;
    while let Some(s) = stubs.pop() {
        let mut matched = false;
        for _ in 0..MATCH_RETRIES {
            if stubs.is_empty() {
                break;
            }
            let k = rng.gen_range(0..stubs.len() as u64) as usize;
            let t = stubs[k];
            let separated = group.is_none_or(|g| g(s) != g(t));
            if t != s && separated && !adj[s].contains(&t) {
                adj[s].insert(t);
                adj[t].insert(s);
                stubs.swap_remove(k);
                matched = true;
                break;
            }
        }
        if !matched {
            dropped += 1;
        }
    }
    dropped
}

fn components(adj: &[BTreeSet<usize>]) -> (Vec<usize>, usize) {
    let n = adj.len();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = count;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if label[v] == usize::MAX {
                    label[v] = count;
                    stack.push(v);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

fn reachable(adj: &[BTreeSet<usize>], from: usize, to: usize) -> bool {
    let mut seen = vec![false; adj.len()];
    seen[from] = true;
    let mut stack = vec![from];
    while let Some(u) = stack.pop() {
        if u == to {
            return true;
        }
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    false
}

/// Joins the components into one, one bridge at a time. Each bridge links a
/// random node of the smallest-index non-largest component to a node of the
/// largest component, preferring its own micro community, then its own macro
/// community. To keep degrees close to the target, one intra-micro edge of
/// the joined component is removed when that leaves it connected.
fn repair(spec: &BenchmarkSpec, adj: &mut [BTreeSet<usize>], rng: &mut ChaCha8Rng) -> Result<usize> {
    let n = adj.len();
    let mut repairs = 0;
    loop {
        let (label, count) = components(adj);
        if count == 1 {
            return Ok(repairs);
        }
        if repairs >= n {
            return Err(Error::Generation(format!(
                "graph still has {count} components after {repairs} repairs"
            )));
        }
        let mut sizes = vec![0usize; count];
        for &l in &label {
            sizes[l] += 1;
        }
        let big = (0..count).max_by(|&a, &b| sizes[a].cmp(&sizes[b]).then(b.cmp(&a))).unwrap();
        let small = (0..count).find(|&c| c != big).unwrap();
        let members: Vec<usize> = (0..n).filter(|&i| label[i] == small).collect();
        let hub: Vec<usize> = (0..n).filter(|&i| label[i] == big).collect();

        let u = pick(&members, rng);
        let same_micro: Vec<usize> = hub.iter().copied().filter(|&w| spec.micro_of(w) == spec.micro_of(u)).collect();
        let same_macro: Vec<usize> = hub.iter().copied().filter(|&w| spec.macro_of(w) == spec.macro_of(u)).collect();
        let pool = [same_micro, same_macro, hub].into_iter().find(|p| !p.is_empty()).unwrap();
        let w = pick(&pool, rng);

        let mut intra: Vec<(usize, usize)> = members
            .iter()
            .flat_map(|&a| adj[a].iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
            .filter(|&(a, b)| spec.micro_of(a) == spec.micro_of(b))
            .collect();
        intra.shuffle(rng);
        for &(a, b) in intra.iter().take(REWIRE_ATTEMPTS) {
            adj[a].remove(&b);
            adj[b].remove(&a);
            if reachable(adj, a, b) {
                break;
            }
            adj[a].insert(b);
            adj[b].insert(a);
        }

        adj[u].insert(w);
        adj[w].insert(u);
        repairs += 1;
    }
}

/// Draws a benchmark graph. Deterministic in `spec` (including its seed).
///
/// Each node gets `⌊d⌋` stubs plus one more with probability `d − ⌊d⌋`.
/// Stubs are classified independently, then matched uniformly at random
/// within their class: intra-micro stubs within each micro community,
/// cross-micro stubs within each macro community across different micro
/// communities, cross-macro stubs globally across different macro
/// communities. A stub whose draws keep hitting itself, its own group or an
/// existing neighbor is dropped after a bounded number of tries. Finally the
/// graph is made connected by bridging components.
pub fn generate(spec: &BenchmarkSpec) -> Result<LabeledGraph> {
    spec.validate()?;
    let n = spec.n;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let whole = spec.target_degree.floor();
    let frac = spec.target_degree - whole;

    let mut intra = vec![Vec::new(); spec.micro_count()];
    let mut cross_micro = vec![Vec::new(); spec.macro_count];
    let mut cross_macro = Vec::new();
    for i in 0..n {
        let stubs = whole as usize + usize::from(rng.gen::<f64>() < frac);
        for _ in 0..stubs {
            let r: f64 = rng.gen();
            if r < spec.mu1 {
                cross_macro.push(i);
            } else if r < spec.mu1 + spec.mu2 {
                cross_micro[spec.macro_of(i)].push(i);
            } else {
                intra[spec.micro_of(i)].push(i);
            }
        }
    }

    let mut adj = vec![BTreeSet::new(); n];
    let mut dropped = 0;
    for stubs in intra {
        dropped += match_stubs(stubs, None, &mut adj, &mut rng);
    }
    let micro = |i: usize| spec.micro_of(i);
    for stubs in cross_micro {
        dropped += match_stubs(stubs, Some(&micro), &mut adj, &mut rng);
    }
    let macro_ = |i: usize| spec.macro_of(i);
    dropped += match_stubs(cross_macro, Some(&macro_), &mut adj, &mut rng);
    if dropped > 0 {
        log::warn!("benchmark seed {}: dropped {dropped} unmatched stubs", spec.seed);
    }

    let repairs = repair(spec, &mut adj, &mut rng)?;

    let edges = adj
        .iter()
        .enumerate()
        .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| Edge { u, v, weight: 1.0 }))
        .collect();
    Ok(LabeledGraph {
        graph: Graph::from_checked(n, edges),
        macro_labels: (0..n).map(|i| spec.macro_of(i)).collect(),
        micro_labels: (0..n).map(|i| spec.micro_of(i)).collect(),
        dropped_stubs: dropped,
        repairs,
    })
}
