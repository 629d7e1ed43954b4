//! Command implementations shared by the `palette-lab` binary and the examples.
//!
//! Every command returns a [`RunReport`]; rerunning a command on the same input
//! yields the same report apart from `elapsed_ms`.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::certify::{
    certify_lower_bound_with, certify_upper_bound, classify_cubic, palette_index_odd_regular_max_with,
    union_palette_index_distinct_degrees, Certificate,
};
use crate::coloring::{palette_index_with, palettes, SolverOptions};
use crate::error::{Error, Result};
use crate::even::SearchOptions;
use crate::families::{bridge_star, connected_quadratic, generate, quadratic_union, FamilyKind, FamilySpec};
use crate::graph::{named, parse_edge_list, parse_graph6, Graph};

pub const NODE_LIMIT_ENV: &str = "PALETTE_LAB_NODE_LIMIT";

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input_digest: Option<String>,
    pub results: Value,
    pub elapsed_ms: f64,
    pub tool_version: String,
    pub seed: Option<u64>,
    /// Plain-text rendering of `results`.
    #[serde(skip)]
    pub text: String,
}

impl RunReport {
    fn new(command: &str, input_digest: Option<String>, results: Value, text: String, started: Instant) -> Self {
        RunReport {
            command: command.to_string(),
            input_digest,
            results,
            elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            seed: None,
            text,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Search budgets shared by every command.
#[derive(Clone, Debug, Default)]
pub struct Budget {
    pub node_limit: Option<u64>,
}

impl Budget {
    /// Reads [`NODE_LIMIT_ENV`]; unset means unlimited.
    pub fn from_env() -> Result<Self> {
        match std::env::var(NODE_LIMIT_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(|n| Budget { node_limit: Some(n) })
                .map_err(|_| Error::Input(format!("{NODE_LIMIT_ENV}=`{v}` is not a non-negative integer"))),
            Err(_) => Ok(Budget::default()),
        }
    }

    fn even(&self) -> SearchOptions {
        SearchOptions { node_limit: self.node_limit }
    }

    fn solver(&self) -> SolverOptions {
        SolverOptions { node_limit: self.node_limit, certify_node_limit: self.node_limit }
    }
}

/// A parsed input graph together with the digest of its source text.
pub struct Input {
    pub graph: Graph,
    pub digest: String,
}

/// Parses graph6 or edge-list text. Edge lists use digits, graph6 never does.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    let looks_graph6 = trimmed.starts_with(">>graph6<<")
        || (!trimmed.is_empty()
            && !trimmed.contains(char::is_whitespace)
            && trimmed.bytes().all(|b| (63..=126).contains(&b)));
    if looks_graph6 {
        parse_graph6(trimmed)
    } else {
        parse_edge_list(text)
    }
}

/// `-` reads stdin, an existing path reads that file, anything else is inline graph6.
pub fn load_input(spec: &str) -> Result<Input> {
    let text = if spec == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s)
            .map_err(|e| Error::Input(format!("reading stdin: {e}")))?;
        s
    } else if Path::new(spec).is_file() {
        std::fs::read_to_string(spec).map_err(|e| Error::Input(format!("reading {spec}: {e}")))?
    } else {
        return Ok(Input { graph: parse_graph6(spec)?, digest: digest(spec) });
    };
    Ok(Input { graph: parse_graph_text(&text)?, digest: digest(&text) })
}

fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Exact palette index, `c_max` defaulting to `Δ + 2`.
pub fn cmd_palette_index(input: &Input, c_max: Option<usize>, budget: &Budget) -> Result<RunReport> {
    let started = Instant::now();
    let g = &input.graph;
    let c_max = c_max.unwrap_or(g.max_degree() + 2);
    let r = palette_index_with(g, c_max, &budget.solver())?;
    let table = palettes(g, &r.witness)?;
    let results = json!({
        "n": g.n(),
        "m": g.m(),
        "c_max": c_max,
        "value": r.value,
        "exactness": r.exactness,
        "exactness_reason": r.exactness_reason,
        "witness": r.witness,
        "palettes": table.palettes,
        "nodes": r.nodes,
    });
    let mut text = format!(
        "palette index: {}  [{}{}]\n",
        r.value,
        r.exactness,
        r.exactness_reason.as_deref().map(|s| format!(": {s}")).unwrap_or_default()
    );
    let _ = writeln!(text, "graph: n={} m={} c_max={c_max}", g.n(), g.m());
    let _ = writeln!(text, "witness colors: {:?}", r.witness.colors);
    let _ = writeln!(text, "palettes: {:?}", table.palettes);
    let _ = writeln!(text, "search nodes: {}", r.nodes);
    Ok(RunReport::new("palette-index", Some(input.digest.clone()), results, text, started))
}

/// Every certificate that applies to the input graph.
pub fn cmd_certify(input: &Input, budget: &Budget) -> Result<RunReport> {
    let started = Instant::now();
    let g = &input.graph;
    let mut certs: Vec<Certificate> = Vec::new();
    let mut notes: Vec<String> = Vec::new();

    match certify_lower_bound_with(g, &budget.even()) {
        Ok(Some(c)) => certs.push(c),
        Ok(None) => notes.push(
            "lower bound: a spanning even subgraph without isolated vertices exists (or Δ < 2); no bound beyond δ"
                .into(),
        ),
        Err(Error::Undecided { nodes }) => {
            notes.push(format!("lower bound: UNDECIDED after {nodes} nodes; raise {NODE_LIMIT_ENV} to search further"))
        }
        Err(e) => return Err(e),
    }
    if let Some(r) = g.regular_degree() {
        if r % 2 == 1 && r >= 3 {
            match palette_index_odd_regular_max_with(g, &budget.even()) {
                Ok(Some(c)) => certs.push(c),
                Ok(None) => {}
                Err(Error::Undecided { .. }) => {}
                Err(e) => return Err(e),
            }
        }
        if r == 3 && g.is_connected() {
            certs.push(classify_cubic(g)?.certificate);
        }
    }
    certs.push(certify_upper_bound(g)?);

    let mut text = String::new();
    for c in &certs {
        let _ = writeln!(text, "{:<22} {}", c.kind(), c.claim());
    }
    for n in &notes {
        let _ = writeln!(text, "note: {n}");
    }
    let results = json!({ "n": g.n(), "m": g.m(), "certificates": certs, "notes": notes });
    Ok(RunReport::new("certify", Some(input.digest.clone()), results, text, started))
}

/// Builds a family member; with `out`, writes `<kind>_<k>.g6` and `<kind>_<k>.json` there.
pub fn cmd_generate(kind: FamilyKind, k: usize, out: Option<&Path>) -> Result<RunReport> {
    let started = Instant::now();
    let spec = FamilySpec::new(kind, k)?;
    let (g, manifest) = generate(&spec)?;
    let stem = format!("{}_{k}", serde_json::to_value(kind).unwrap().as_str().unwrap().to_ascii_lowercase());
    let mut written = Vec::new();
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(|e| Error::Input(format!("creating {}: {e}", dir.display())))?;
        let g6 = dir.join(format!("{stem}.g6"));
        let js = dir.join(format!("{stem}.json"));
        std::fs::write(&g6, format!("{}\n", manifest.graph6))
            .map_err(|e| Error::Input(format!("writing {}: {e}", g6.display())))?;
        std::fs::write(&js, serde_json::to_string_pretty(&manifest).unwrap() + "\n")
            .map_err(|e| Error::Input(format!("writing {}: {e}", js.display())))?;
        written.push(g6.display().to_string());
        written.push(js.display().to_string());
    }
    let mut text = format!(
        "{stem}: n={} m={} Δ={} components={}  invariants ok\n",
        g.n(),
        g.m(),
        manifest.max_degree,
        manifest.components
    );
    if let Some(p) = manifest.predicted_palette_index {
        let _ = writeln!(text, "predicted palette index: {p}  [{}]", manifest.basis);
    }
    if let Some(p) = manifest.palette_index_greater_than {
        let _ = writeln!(text, "palette index > {p}  [{}]", manifest.basis);
    }
    if written.is_empty() {
        let _ = writeln!(text, "{}", manifest.graph6);
    }
    for w in &written {
        let _ = writeln!(text, "wrote {w}");
    }
    let results = json!({ "manifest": manifest, "files": written });
    Ok(RunReport::new("generate", None, results, text, started))
}

/// One line of the reproduction table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub group: &'static str,
    pub instance: String,
    pub claimed: String,
    pub computed: String,
    pub certificate_kind: String,
    pub agreement: bool,
}

pub const GROUPS: [&str; 5] = ["cubic", "extremal", "quadratic", "apex", "small"];

fn row(group: &'static str, instance: &str, claimed: String, computed: String, kind: &str, agreement: bool) -> Row {
    Row { group, instance: instance.to_string(), claimed, computed, certificate_kind: kind.to_string(), agreement }
}

fn exact_max(g: &Graph, budget: &Budget) -> Result<usize> {
    match palette_index_odd_regular_max_with(g, &budget.even())? {
        Some(Certificate::ExactOddRegularMax { value, .. }) => Ok(value),
        _ => Err(Error::Mismatch("odd-regular maximum not certified".into())),
    }
}

fn group_rows(group: &'static str, budget: &Budget) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    match group {
        "cubic" => {
            for (name, g, claim) in [
                ("K4", named::complete(4), 1),
                ("Petersen", named::petersen(), 3),
                ("bridge_star(1)", bridge_star(1), 4),
            ] {
                let cls = classify_cubic(&g)?;
                let exact = palette_index_with(&g, 4, &budget.solver())?;
                let computed = format!("{} (search c_max=4: {})", cls.value, exact.value);
                let ok = cls.value == claim && exact.value == claim;
                rows.push(row(group, name, claim.to_string(), computed, cls.certificate.kind(), ok));
            }
        }
        "extremal" => {
            for k in 1..=3 {
                let g = bridge_star(k);
                let v = exact_max(&g, budget)?;
                let claim = 2 * k + 2;
                rows.push(row(
                    group,
                    &format!("bridge_star({k})"),
                    claim.to_string(),
                    v.to_string(),
                    "EXACT_ODD_REGULAR_MAX",
                    v == claim,
                ));
            }
        }
        "quadratic" => {
            for k in 1..=4 {
                let (h, predicted) = quadratic_union(k);
                let comps: Vec<(Graph, usize)> = (1..=k)
                    .map(|i| {
                        let g = bridge_star(i);
                        exact_max(&g, budget).map(|v| (g, v))
                    })
                    .collect::<Result<_>>()?;
                let total = union_palette_index_distinct_degrees(&comps)?;
                let d = h.max_degree();
                let formula = (d * d + 4 * d - 5) / 4;
                let ok = total == predicted && formula == predicted && (d * d + 4 * d - 5) % 4 == 0;
                rows.push(row(
                    group,
                    &format!("H_{k}"),
                    format!("{predicted}"),
                    format!("{total} ((Δ²+4Δ-5)/4={formula})"),
                    "UNION_DISTINCT_DEGREES",
                    ok,
                ));
            }
        }
        "apex" => {
            let g = connected_quadratic(1);
            let r = palette_index_with(&g, 5, &budget.solver())?;
            rows.push(row(
                group,
                "connected_quadratic(1)",
                "> 4".into(),
                r.value.to_string(),
                &r.exactness.to_string(),
                r.value > 4,
            ));
            for k in 2..=3 {
                let g = connected_quadratic(k);
                let computed = format!("connected={} Δ={}", g.is_connected(), g.max_degree());
                let claimed = format!("connected=true Δ={}", 2 * k + 2);
                let ok = computed == claimed;
                rows.push(row(group, &format!("connected_quadratic({k})"), claimed, computed, "STRUCTURE", ok));
            }
        }
        "small" => {
            for (name, g, c_max, claim) in
                [("C4", named::cycle(4), 3, 1), ("C3", named::cycle(3), 4, 3), ("K4", named::complete(4), 4, 1)]
            {
                let r = palette_index_with(&g, c_max, &budget.solver())?;
                rows.push(row(
                    group,
                    &format!("{name} c_max={c_max}"),
                    claim.to_string(),
                    r.value.to_string(),
                    &r.exactness.to_string(),
                    r.value == claim,
                ));
            }
        }
        other => return Err(Error::Input(format!("unknown group `{other}`"))),
    }
    Ok(rows)
}

/// Rows of the reproduction table, optionally restricted to comma-separated groups.
pub fn reproduction_rows(only: Option<&str>, budget: &Budget) -> Result<Vec<Row>> {
    let selected: Vec<&'static str> = match only {
        None => GROUPS.to_vec(),
        Some(filter) => {
            let wanted: Vec<&str> = filter.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            if let Some(bad) = wanted.iter().find(|w| !GROUPS.contains(w)) {
                return Err(Error::Input(format!("unknown group `{bad}`; known: {}", GROUPS.join(", "))));
            }
            GROUPS.iter().copied().filter(|g| wanted.contains(g)).collect()
        }
    };
    if selected.is_empty() {
        return Err(Error::Input("no rows selected".into()));
    }
    let mut rows = Vec::new();
    for g in selected {
        rows.extend(group_rows(g, budget)?);
    }
    Ok(rows)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn rows_to_csv(rows: &[Row]) -> String {
    let mut out = String::from("instance,claimed,computed,certificate-kind,agreement\n");
    for r in rows {
        let fields = [&r.instance, &r.claimed, &r.computed, &r.certificate_kind, &r.agreement.to_string()];
        out.push_str(&fields.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

/// Runs the reproduction table and writes `reproduction.csv` into `out`.
/// Any disagreeing row turns into [`Error::Mismatch`] after the file is written.
pub fn cmd_reproduce_paper(out: Option<&Path>, only: Option<&str>, budget: &Budget) -> Result<RunReport> {
    let started = Instant::now();
    let rows = reproduction_rows(only, budget)?;
    let csv = rows_to_csv(&rows);
    let mut files = Vec::new();
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(|e| Error::Input(format!("creating {}: {e}", dir.display())))?;
        let path = dir.join("reproduction.csv");
        std::fs::write(&path, &csv).map_err(|e| Error::Input(format!("writing {}: {e}", path.display())))?;
        files.push(path.display().to_string());
    }
    let bad: Vec<&Row> = rows.iter().filter(|r| !r.agreement).collect();
    if !bad.is_empty() {
        let names: Vec<&str> = bad.iter().map(|r| r.instance.as_str()).collect();
        return Err(Error::Mismatch(names.join(", ")));
    }
    let mut text = String::new();
    for r in &rows {
        let _ = writeln!(
            text,
            "{:<9} {:<24} claimed {:<10} computed {:<28} {:<26} {}",
            r.group,
            r.instance,
            r.claimed,
            r.computed,
            r.certificate_kind,
            if r.agreement { "ok" } else { "MISMATCH" }
        );
    }
    let _ = writeln!(text, "{} rows, all agree", rows.len());
    let results = json!({ "rows": rows, "files": files, "csv": csv });
    Ok(RunReport::new("reproduce-paper", None, results, text, started))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_formats() {
        assert_eq!(parse_graph_text("C~\n").unwrap().m(), 6);
        assert_eq!(parse_graph_text("0 1\n1 2\n").unwrap().m(), 2);
        assert_eq!(parse_graph_text(">>graph6<<Dhc").unwrap().m(), 5);
    }

    #[test]
    fn only_filter() {
        let b = Budget::default();
        assert_eq!(reproduction_rows(Some("cubic"), &b).unwrap().len(), 3);
        assert_eq!(reproduction_rows(Some(""), &b).unwrap_err(), Error::Input("no rows selected".into()));
        assert!(reproduction_rows(Some("bogus"), &b).is_err());
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("plain"), "plain");
    }
}
