//! JSON, CSV and DOT renderings of graphs and spectra.

use std::fmt::Write as _;

use serde::Serialize;

use crate::eigen::SpectrumMultiset;
use crate::graph::FullGraph;
use crate::quotient::{QuotientGraph, WeightedLaplacian};
use crate::spectrum::{AssembledSpectrum, OracleReport};

pub const JSON_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct ClassRow {
    pub d: u64,
    pub size: u64,
    #[serde(rename = "D")]
    pub weighted_degree: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumRow {
    pub value: f64,
    pub multiplicity: usize,
    pub exact: bool,
}

/// Per-`n` result object.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumDocument {
    pub schema: u32,
    pub n: u64,
    pub vertex_count: u64,
    /// `"prime-power"` when the graph is edgeless or a single vertex.
    pub degenerate: Option<&'static str>,
    pub divisor_classes: Vec<ClassRow>,
    pub spectrum: Vec<SpectrumRow>,
    pub laplacian_integral: bool,
    pub oracle_checked: bool,
    pub max_deviation: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generated_at: Option<u64>,
}

impl SpectrumDocument {
    pub fn new(spectrum: &AssembledSpectrum, oracle: Option<&OracleReport>, tol: f64) -> Self {
        Self {
            schema: JSON_SCHEMA_VERSION,
            n: spectrum.n,
            vertex_count: spectrum.vertex_count,
            degenerate: spectrum.prime_power.then_some("prime-power"),
            divisor_classes: spectrum
                .integer_part
                .iter()
                .map(|e| ClassRow { d: e.divisor, size: e.class_size, weighted_degree: e.value })
                .collect(),
            spectrum: spectrum_rows(&spectrum.combined),
            laplacian_integral: spectrum.is_laplacian_integral(tol),
            oracle_checked: oracle.is_some(),
            max_deviation: oracle.map(|r| r.max_deviation()),
            generated_at: None,
        }
    }

    pub fn with_timestamp(mut self, unix_seconds: Option<u64>) -> Self {
        self.generated_at = unix_seconds;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

pub fn spectrum_rows(s: &SpectrumMultiset) -> Vec<SpectrumRow> {
    s.entries()
        .iter()
        .map(|e| SpectrumRow { value: e.value, multiplicity: e.multiplicity, exact: e.exact })
        .collect()
}

/// Exact values print as integers; solver output keeps 10 decimals, which is
/// the eigensolver's own resolution, with trailing zeros trimmed.
fn csv_value(value: f64, exact: bool) -> String {
    if exact {
        return format!("{}", value as i64);
    }
    let s = format!("{value:.10}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    match s {
        "-0" => "0".to_string(),
        _ => s.to_string(),
    }
}

/// `value,multiplicity,exact` table, one row per distinct eigenvalue.
pub fn spectrum_csv(s: &SpectrumMultiset) -> String {
    let mut out = String::from("value,multiplicity,exact\n");
    for e in s.entries() {
        let _ = writeln!(out, "{},{},{}", csv_value(e.value, e.exact), e.multiplicity, e.exact);
    }
    out
}

/// `L(Υ'_n)` with a divisor header row and column.
pub fn laplacian_csv(l: &WeightedLaplacian) -> String {
    let mut out = String::from("divisor");
    for d in l.divisors() {
        let _ = write!(out, ",{d}");
    }
    out.push('\n');
    for (i, d) in l.divisors().iter().enumerate() {
        let _ = write!(out, "{d}");
        for v in l.entries().row(i) {
            let _ = write!(out, ",{v}");
        }
        out.push('\n');
    }
    out
}

/// `Υ'_n` with weights `φ(n/k)` and weighted degrees `D_k` on the nodes.
pub fn quotient_dot(q: &QuotientGraph) -> String {
    let mut out = format!("graph quotient_{} {{\n  node [shape=circle];\n", q.n());
    for ((d, w), big_d) in q.divisors().iter().zip(q.weights()).zip(q.weighted_degrees()) {
        let _ = writeln!(out, "  k{d} [label=\"{d}\\nw={w}\\nD={big_d}\", weight={w}];");
    }
    for (i, j) in q.edges() {
        let _ = writeln!(out, "  k{} -- k{};", q.divisors()[i], q.divisors()[j]);
    }
    out.push_str("}\n");
    out
}

/// Vertex-level graph; each divisor class gets its own fill colour and `group`.
pub fn full_graph_dot(g: &FullGraph) -> String {
    let mut out = format!(
        "graph cozero_{} {{\n  node [shape=circle, style=filled, colorscheme=set312];\n",
        g.n()
    );
    let classes = g.partition().classes();
    for (i, &x) in g.vertices().iter().enumerate() {
        let class = g.class_of(i);
        let _ = writeln!(
            out,
            "  v{x} [label=\"{x}\", group=\"A{}\", fillcolor={}];",
            classes[class].divisor,
            class % 12 + 1
        );
    }
    for (i, j) in g.edges() {
        let _ = writeln!(out, "  v{} -- v{};", g.vertices()[i], g.vertices()[j]);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::SolverOptions;
    use crate::graph::{build_full_graph, BuildOptions};
    use crate::quotient::{build_quotient, build_weighted_laplacian};
    use crate::spectrum::{assemble_spectrum, verify_against_oracle, VerifyOptions};

    #[test]
    fn json_document_fields() {
        let s = assemble_spectrum(30, &SolverOptions::default()).unwrap();
        let doc = SpectrumDocument::new(&s, None, 1e-6);
        let v: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["n"], 30);
        assert_eq!(v["vertex_count"], 21);
        assert_eq!(v["oracle_checked"], false);
        assert!(v["max_deviation"].is_null());
        assert!(v.get("generated_at").is_none());
        let total: u64 = v["spectrum"].as_array().unwrap().iter().map(|e| e["multiplicity"].as_u64().unwrap()).sum();
        assert_eq!(total, 21);
        assert_eq!(v["divisor_classes"][0]["d"], 2);
        assert_eq!(v["divisor_classes"][0]["size"], 8);
        assert_eq!(v["divisor_classes"][0]["D"], 7);

        let r = verify_against_oracle(15, &VerifyOptions::default()).unwrap();
        let doc = SpectrumDocument::new(&r.assembled, Some(&r), 1e-6).with_timestamp(Some(5));
        let v: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(v["oracle_checked"], true);
        assert!(v["max_deviation"].as_f64().unwrap() < 1e-8);
        assert_eq!(v["laplacian_integral"], true);
        assert_eq!(v["generated_at"], 5);
    }

    #[test]
    fn csv_outputs() {
        let s = assemble_spectrum(15, &SolverOptions::default()).unwrap();
        let csv = spectrum_csv(&s.combined);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "value,multiplicity,exact");
        assert_eq!(lines[2], "4,1,true");
        assert_eq!(lines[3], "2,3,true");
        assert_eq!(lines.len(), 5);

        let l = build_weighted_laplacian(&build_quotient(12).unwrap()).unwrap();
        assert_eq!(laplacian_csv(&l), "divisor,2,3,4,6\n2,2,-2,0,0\n3,-2,4,-2,0\n4,0,-2,3,-1\n6,0,0,-2,2\n");
    }

    #[test]
    fn dot_outputs() {
        let dot = quotient_dot(&build_quotient(30).unwrap());
        assert!(dot.starts_with("graph quotient_30 {"));
        assert_eq!(dot.matches(" -- ").count(), 9);
        assert_eq!(dot.matches("label=").count(), 6);
        assert!(dot.contains("k15 [label=\"15\\nw=1\\nD=14\""));

        let g = build_full_graph(15, BuildOptions::default()).unwrap();
        let dot = full_graph_dot(&g);
        assert_eq!(dot.matches(" -- ").count(), 8);
        assert!(dot.contains("v9 [label=\"9\", group=\"A3\""));
    }
}
