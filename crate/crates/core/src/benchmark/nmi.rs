use std::collections::BTreeMap;

use crate::error::{Error, Result};

fn counts(labels: &[usize]) -> BTreeMap<usize, f64> {
    let mut m = BTreeMap::new();
    for &l in labels {
        *m.entry(l).or_insert(0.0) += 1.0;
    }
    m
}

/// Normalized mutual information between two labelings of the same nodes:
///
/// `−2·Σᵢⱼ Nᵢⱼ log(Nᵢⱼ N / (Nᵢ N_j)) / (Σᵢ Nᵢ log(Nᵢ/N) + Σⱼ N_j log(N_j/N))`.
///
/// When both labelings have a single cluster the result is 1; when exactly
/// one does, it is 0.
pub fn nmi(a: &[usize], b: &[usize]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            got: b.len(),
        });
    }
    if a.is_empty() {
        return Err(Error::InvalidArgument("nmi of empty labelings".into()));
    }
    let n = a.len() as f64;
    let ca = counts(a);
    let cb = counts(b);
    match (ca.len() == 1, cb.len() == 1) {
        (true, true) => return Ok(1.0),
        (true, false) | (false, true) => return Ok(0.0),
        _ => {}
    }
    let mut joint: BTreeMap<(usize, usize), f64> = BTreeMap::new();
    for (&x, &y) in a.iter().zip(b) {
        *joint.entry((x, y)).or_insert(0.0) += 1.0;
    }
    let numerator: f64 = joint
        .iter()
        .map(|(&(x, y), &nij)| nij * (nij * n / (ca[&x] * cb[&y])).ln())
        .sum();
    let entropy = |c: &BTreeMap<usize, f64>| c.values().map(|&k| k * (k / n).ln()).sum::<f64>();
    let value = -2.0 * numerator / (entropy(&ca) + entropy(&cb));
    Ok(value.clamp(0.0, 1.0))
}
