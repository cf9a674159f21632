use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{avg_clustering_coefficient, generate, nmi, BenchmarkSpec};
use crate::error::{Error, Result};
use crate::partition::sweep_bisect_with;
use crate::spectral::{EigenOptions, OperatorKind};

/// Grid experiment: for every `(μ1, μ2)` cell, `runs` graphs drawn from
/// `template`, each bisected by every method and scored against the macro
/// communities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    /// `mu1`, `mu2` and `seed` are overridden per run.
    pub template: BenchmarkSpec,
    pub mu1_values: Vec<f64>,
    pub mu2_values: Vec<f64>,
    pub runs: usize,
    pub methods: Vec<OperatorKind>,
    pub base_seed: u64,
}

/// Aggregate over the runs of one cell for one method.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CellRecord {
    pub mu1: f64,
    pub mu2: f64,
    pub method: OperatorKind,
    /// NaN when any run failed.
    pub nmi_mean: f64,
    pub nmi_std: f64,
    pub cc_mean: f64,
    pub cc_std: f64,
    pub runs: usize,
    /// First failure message, if any run failed.
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridResult {
    pub spec: GridSpec,
    pub records: Vec<CellRecord>,
}

fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Rounds to 12 decimals so that values reached by different float paths
/// (`0.1 + 0.2` versus `0.3`) name the same cell.
pub fn snap_mu(mu: f64) -> f64 {
    (mu * 1e12).round() / 1e12
}

/// Seed of one run: a SplitMix64 chain over the base seed, the bit patterns
/// of the snapped mixing parameters and the run index.
pub fn derive_seed(base: u64, mu1: f64, mu2: f64, run: usize) -> u64 {
    [snap_mu(mu1).to_bits(), snap_mu(mu2).to_bits(), run as u64]
        .into_iter()
        .fold(splitmix64(base), |h, x| splitmix64(h ^ x))
}

fn mean_std(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / n;
    (mean, var.sqrt())
}

struct RunOutcome {
    cc: Result<f64>,
    scores: Vec<Result<f64>>,
}

fn run_once(spec: &GridSpec, mu1: f64, mu2: f64, run: usize) -> RunOutcome {
    let bench = BenchmarkSpec {
        mu1,
        mu2,
        seed: derive_seed(spec.base_seed, mu1, mu2, run),
        ..spec.template.clone()
    };
    let lg = match generate(&bench) {
        Ok(lg) => lg,
        Err(e) => {
            let msg = format!("run {run}: {e}");
            return RunOutcome {
                cc: Err(Error::Generation(msg.clone())),
                scores: spec.methods.iter().map(|_| Err(Error::Generation(msg.clone()))).collect(),
            };
        }
    };
    let opts = EigenOptions::default();
    let scores = spec
        .methods
        .iter()
        .map(|&m| {
            let p = sweep_bisect_with(&lg.graph, m, &opts)?;
            nmi(&p.s.labels(), &lg.macro_labels)
        })
        .collect();
    RunOutcome {
        cc: Ok(avg_clustering_coefficient(&lg.graph)),
        scores,
    }
}

fn validate(spec: &GridSpec) -> Result<()> {
    if spec.mu1_values.is_empty() || spec.mu2_values.is_empty() {
        return Err(Error::InvalidArgument("grid has no cells".into()));
    }
    if spec.runs == 0 {
        return Err(Error::InvalidArgument("runs must be at least 1".into()));
    }
    if spec.methods.is_empty() {
        return Err(Error::InvalidArgument("no methods given".into()));
    }
    Ok(())
}

/// Runs the grid. Runs execute on the current rayon pool; results are
/// assembled in grid order, so the output does not depend on scheduling.
/// Cells whose runs fail carry NaN aggregates and the failure message.
pub fn run_grid(spec: &GridSpec) -> Result<GridResult> {
    validate(spec)?;
    let cells: Vec<(f64, f64)> = spec
        .mu1_values
        .iter()
        .flat_map(|&a| spec.mu2_values.iter().map(move |&b| (snap_mu(a), snap_mu(b))))
        .collect();
    let units: Vec<(usize, usize)> = (0..cells.len())
        .flat_map(|c| (0..spec.runs).map(move |r| (c, r)))
        .collect();
    let outcomes: Vec<RunOutcome> = units
        .par_iter()
        .map(|&(c, r)| run_once(spec, cells[c].0, cells[c].1, r))
        .collect();

    let mut records = Vec::with_capacity(cells.len() * spec.methods.len());
    for (c, &(mu1, mu2)) in cells.iter().enumerate() {
        let block = &outcomes[c * spec.runs..(c + 1) * spec.runs];
        let ccs: Result<Vec<f64>> = block
            .iter()
            .map(|o| o.cc.as_ref().copied().map_err(|e| Error::Generation(e.to_string())))
            .collect();
        let (cc_mean, cc_std) = ccs.as_deref().map_or((f64::NAN, f64::NAN), mean_std);
        for (k, &method) in spec.methods.iter().enumerate() {
            let scores: std::result::Result<Vec<f64>, String> = block
                .iter()
                .enumerate()
                .map(|(r, o)| o.scores[k].as_ref().copied().map_err(|e| format!("run {r}: {e}")))
                .collect();
            let (nmi_mean, nmi_std, error) = match scores {
                Ok(s) => {
                    let (m, sd) = mean_std(&s);
                    (m, sd, None)
                }
                Err(e) => (f64::NAN, f64::NAN, Some(e)),
            };
            records.push(CellRecord {
                mu1,
                mu2,
                method,
                nmi_mean,
                nmi_std,
                cc_mean,
                cc_std,
                runs: spec.runs,
                error,
            });
        }
    }
    Ok(GridResult {
        spec: spec.clone(),
        records,
    })
}

impl GridResult {
    /// Long-form CSV, one row per cell and method.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["mu1", "mu2", "method", "nmi_mean", "nmi_std", "cc_mean", "cc_std", "runs"])?;
        for r in &self.records {
            w.write_record([
                r.mu1.to_string(),
                r.mu2.to_string(),
                r.method.name().to_string(),
                r.nmi_mean.to_string(),
                r.nmi_std.to_string(),
                r.cc_mean.to_string(),
                r.cc_std.to_string(),
                r.runs.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv output is UTF-8"))
    }

    /// JSON with the full grid spec and every record. NaN aggregates become `null`.
    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn records_for(&self, method: OperatorKind) -> impl Iterator<Item = &CellRecord> {
        self.records.iter().filter(move |r| r.method == method)
    }
}
