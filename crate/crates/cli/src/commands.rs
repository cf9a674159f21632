use std::fs;
use std::io::Write;
use std::path::Path;

use epispec::benchmark::{generate, nmi, parse_labels, run_grid, BenchmarkSpec, GridSpec};
use epispec::graph::{read_edge_list_file, toy_graph, write_edge_list, ComponentMap, QualityTable};
use epispec::partition::sweep_bisect_with;
use epispec::spectral::{simulate_diffusion, EigenOptions};
use epispec::{Error, Graph, OperatorKind};
use serde_json::json;

use crate::range::parse_range;
use crate::{
    Command, DiffuseArgs, GenerateArgs, GraphArgs, GridFormat, LayoutArgs, NmiArgs, PartitionArgs, SolverArgs,
    SweepArgs, ToyArgs, ToyFormat,
};

pub const EXIT_USAGE: u8 = 1;
pub const EXIT_DATA: u8 = 2;
pub const EXIT_NUMERICAL: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn data(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_DATA,
            message: message.into(),
        }
    }

    pub fn to_json(&self) -> String {
        let kind = match self.code {
            EXIT_USAGE => "usage",
            EXIT_NUMERICAL => "numerical",
            _ => "data",
        };
        json!({"error": {"kind": kind, "code": self.code, "message": self.message}}).to_string()
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = if e.is_numerical() {
            EXIT_NUMERICAL
        } else if matches!(e, Error::InvalidSpec(_)) {
            EXIT_USAGE
        } else {
            EXIT_DATA
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

pub fn run(command: Command) -> CliResult<()> {
    let mut stdout = std::io::stdout().lock();
    let text = match command {
        Command::Partition(a) => partition(&a)?,
        Command::Generate(a) => generate_cmd(&a)?,
        Command::Sweep(a) => sweep(&a)?,
        Command::Nmi(a) => nmi_cmd(&a)?,
        Command::Toy(a) => toy(&a)?,
        Command::Diffuse(a) => diffuse(&a)?,
    };
    stdout
        .write_all(text.as_bytes())
        .map_err(|e| CliError::data(format!("cannot write output: {e}")))
}

fn options(s: &SolverArgs) -> CliResult<EigenOptions> {
    if !(s.tol > 0.0) {
        return Err(CliError::usage(format!("--tol must be positive, got {}", s.tol)));
    }
    Ok(EigenOptions {
        tol: s.tol,
        dense_threshold: s.dense_threshold,
        ..EigenOptions::default()
    })
}

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::data(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(input: &GraphArgs) -> CliResult<(Graph, ComponentMap)> {
    let g = read_edge_list_file(&input.graph, input.one_indexed).map_err(|e| match e {
        Error::Io(io) => CliError::data(format!("cannot read {}: {io}", input.graph.display())),
        other => CliError::data(format!("{}: {other}", input.graph.display())),
    })?;
    let components = g.component_labels().1;
    if components > 1 && !input.largest_component {
        return Err(Error::Disconnected { components }.into());
    }
    let (sub, map) = g.largest_component();
    if components > 1 {
        log::warn!(
            "graph has {components} components; using the largest ({} of {} nodes)",
            sub.node_count(),
            g.node_count()
        );
    }
    Ok((sub, map))
}

fn partition(a: &PartitionArgs) -> CliResult<String> {
    let (g, map) = load_graph(&a.input)?;
    let opts = options(&a.solver)?;
    let method = OperatorKind::from(a.method);
    let p = sweep_bisect_with(&g, method, &opts)?;
    let shift = usize::from(a.input.one_indexed);
    let members: Vec<usize> = p.smaller_side().iter().map(|i| map.new_to_old[i] + shift).collect();

    if a.pretty {
        let list: Vec<String> = members.iter().map(|m| m.to_string()).collect();
        let mut out = format!(
            "method: {}\n{}: {}\nsmaller side ({} of {} nodes): {}\nsweep position: {}\n",
            method,
            p.quality_kind,
            p.quality,
            members.len(),
            g.node_count(),
            list.join(" "),
            p.sweep_position
        );
        if p.degenerate {
            out.push_str("warning: repeated second eigenvalue, the ordering is not unique\n");
        }
        return Ok(out);
    }

    let mut value = p.to_json(false, false);
    value["members"] = json!(members);
    if !map.is_identity() {
        value["component_nodes"] = json!(g.node_count());
        value["total_nodes"] = json!(map.old_to_new.len());
    }
    if a.ordering {
        let full: Vec<Option<f64>> = map.old_to_new.iter().map(|k| k.map(|k| p.ordering[k])).collect();
        value["ordering"] = json!(full);
    }
    Ok(pretty_json(&value))
}

fn pretty_json(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values serialize");
    s.push('\n');
    s
}

fn spec_from(layout: &LayoutArgs, mu1: f64, mu2: f64) -> BenchmarkSpec {
    BenchmarkSpec {
        n: layout.n,
        macro_count: layout.macro_count,
        micro_per_macro: layout.micro_per_macro,
        mu1,
        mu2,
        target_degree: layout.degree,
        seed: layout.seed,
    }
}

fn generate_cmd(a: &GenerateArgs) -> CliResult<String> {
    let spec = spec_from(&a.layout, a.mu1, a.mu2);
    spec.validate()?;
    let lg = generate(&spec)?;
    let prefix = a.out.display().to_string();
    let edges_path = format!("{prefix}.edges");
    let labels_path = format!("{prefix}.labels");
    let write = |path: &str, text: String| {
        fs::write(path, text).map_err(|e| CliError::data(format!("cannot write {path}: {e}")))
    };
    write(&edges_path, write_edge_list(&lg.graph, a.one_indexed))?;
    write(&labels_path, lg.labels_text(a.one_indexed))?;
    Ok(pretty_json(&json!({
        "edges_file": edges_path,
        "labels_file": labels_path,
        "nodes": lg.graph.node_count(),
        "edges": lg.graph.edge_count(),
        "dropped_stubs": lg.dropped_stubs,
        "repairs": lg.repairs,
        "spec": spec,
    })))
}

fn sweep(a: &SweepArgs) -> CliResult<String> {
    let mu1_values = parse_range(&a.mu1).map_err(|e| CliError::usage(format!("--mu1: {e}")))?;
    let mu2_values = parse_range(&a.mu2).map_err(|e| CliError::usage(format!("--mu2: {e}")))?;
    if a.runs == 0 {
        return Err(CliError::usage("--runs must be at least 1"));
    }
    let mut methods: Vec<OperatorKind> = Vec::new();
    for m in &a.methods {
        let k = OperatorKind::from(*m);
        if !methods.contains(&k) {
            methods.push(k);
        }
    }
    let template = spec_from(&a.layout, 0.0, 0.0);
    for &mu1 in &mu1_values {
        for &mu2 in &mu2_values {
            BenchmarkSpec { mu1, mu2, ..template.clone() }.validate()?;
        }
    }
    let spec = GridSpec {
        template,
        mu1_values,
        mu2_values,
        runs: a.runs,
        methods,
        base_seed: a.layout.seed,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs)
        .build()
        .map_err(|e| CliError::usage(format!("--jobs: {e}")))?;
    let result = pool.install(|| run_grid(&spec))?;
    let failed = result.records.iter().filter(|r| r.error.is_some()).count();
    if failed > 0 {
        log::warn!("{failed} of {} records have failed runs", result.records.len());
    }
    let text = match a.format {
        GridFormat::Csv => result.to_csv_string()?,
        GridFormat::Json => {
            let mut s = result.to_json_string()?;
            s.push('\n');
            s
        }
    };
    match &a.out {
        Some(path) => {
            fs::write(path, &text).map_err(|e| CliError::data(format!("cannot write {}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn label_column(path: &Path, column: usize, one_indexed: bool) -> CliResult<Vec<usize>> {
    let cols = parse_labels(&read_text(path)?, one_indexed)
        .map_err(|e| CliError::data(format!("{}: {e}", path.display())))?;
    if cols.is_empty() {
        return Err(CliError::data(format!("{}: no labels", path.display())));
    }
    if column == 0 || column > cols.len() {
        return Err(CliError::usage(format!(
            "--column {column} is out of range; {} has {} label column(s)",
            path.display(),
            cols.len()
        )));
    }
    Ok(cols[column - 1].clone())
}

fn nmi_cmd(a: &NmiArgs) -> CliResult<String> {
    let x = label_column(&a.a, a.column, a.one_indexed)?;
    let y = label_column(&a.b, a.column, a.one_indexed)?;
    Ok(format!("{}\n", nmi(&x, &y)?))
}

fn toy(a: &ToyArgs) -> CliResult<String> {
    let fixture = toy_graph();
    let computed = fixture.quality_table()?;
    let reference = QualityTable::REFERENCE.rows();
    let mut rows = Vec::new();
    let mut all_ok = true;
    for (r, ((label, got), (_, want))) in computed.rows().iter().zip(&reference).enumerate() {
        for (c, (cut, value, published)) in [("A", got.cut_a, want.cut_a), ("B", got.cut_b, want.cut_b)]
            .into_iter()
            .enumerate()
        {
            let tol = QualityTable::TOLERANCES[r][c];
            let ok = tol.accepts(value, published);
            all_ok &= ok;
            rows.push((*label, cut, value, published, tol.bound(published), ok));
        }
    }
    let text = match a.format {
        ToyFormat::Json => pretty_json(&json!({
            "rows": rows.iter().map(|(label, cut, value, published, bound, ok)| json!({
                "measure": label,
                "cut": cut,
                "computed": value,
                "reference": published,
                "deviation": value - published,
                "tolerance": bound,
                "ok": ok,
            })).collect::<Vec<_>>(),
            "ok": all_ok,
        })),
        ToyFormat::Table => {
            let mut out = format!(
                "{:<8}{:<4}{:>12}{:>11}{:>12}{:>11}  {}\n",
                "measure", "cut", "computed", "reference", "deviation", "tolerance", "status"
            );
            for (label, cut, value, published, bound, ok) in &rows {
                out.push_str(&format!(
                    "{:<8}{:<4}{:>12.5}{:>11}{:>+12.5}{:>11}  {}\n",
                    label,
                    cut,
                    value,
                    published,
                    value - published,
                    bound,
                    if *ok { "ok" } else { "FAIL" }
                ));
            }
            out
        }
    };
    if all_ok {
        Ok(text)
    } else {
        print!("{text}");
        Err(CliError {
            code: EXIT_NUMERICAL,
            message: "computed table deviates from the reference beyond tolerance".into(),
        })
    }
}

fn diffuse(a: &DiffuseArgs) -> CliResult<String> {
    let (g, map) = load_graph(&a.input)?;
    let opts = options(&a.solver)?;
    let shift = usize::from(a.input.one_indexed);
    let n_total = map.old_to_new.len();
    let u0 = match &a.init {
        Some(path) => {
            let text = read_text(path)?;
            let values = text
                .lines()
                .enumerate()
                .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
                .map(|(k, l)| {
                    l.trim()
                        .parse::<f64>()
                        .map_err(|_| CliError::data(format!("{}: line {}: not a number", path.display(), k + 1)))
                })
                .collect::<CliResult<Vec<f64>>>()?;
            if values.len() != n_total {
                return Err(CliError::data(format!(
                    "{}: expected {n_total} values, found {}",
                    path.display(),
                    values.len()
                )));
            }
            map.new_to_old.iter().map(|&o| values[o]).collect()
        }
        None => {
            let source = a
                .source
                .checked_sub(shift)
                .filter(|&s| s < n_total)
                .ok_or_else(|| CliError::usage(format!("--source {} is not a node", a.source)))?;
            let local = map.old_to_new[source]
                .ok_or_else(|| CliError::usage(format!("--source {} is outside the largest component", a.source)))?;
            let mut u = vec![0.0; g.node_count()];
            u[local] = 1.0;
            u
        }
    };
    let trajectory = simulate_diffusion(&g, a.method.into(), &u0, a.dt, a.steps, a.stride, &opts)?;
    let mut out = String::from("step,t");
    for &o in &map.new_to_old {
        out.push_str(&format!(",u{}", o + shift));
    }
    out.push('\n');
    for state in &trajectory {
        out.push_str(&format!("{},{}", state.step, state.t));
        for x in &state.u {
            out.push_str(&format!(",{x}"));
        }
        out.push('\n');
    }
    Ok(out)
}
