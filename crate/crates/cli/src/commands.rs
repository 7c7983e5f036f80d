use std::fmt::Write as _;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use cozero_core::eigen::SpectrumMultiset;
use cozero_core::export::{
    full_graph_dot, laplacian_csv, quotient_dot, spectrum_csv, spectrum_rows, ClassRow, SpectrumDocument,
    SpectrumRow, JSON_SCHEMA_VERSION,
};
use cozero_core::graph::{build_full_graph, BuildOptions};
use cozero_core::number_theory::factorize;
use cozero_core::quotient::{build_quotient, build_weighted_laplacian};
use cozero_core::spectrum::{assemble_spectrum, verify_against_oracle, OracleReport, SolveChecks};
use cozero_core::Error;
use rayon::prelude::*;
use serde::Serialize;

use crate::config::{Family, Format, RunConfig, Target};

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_DEGENERATE: u8 = 2;
pub const EXIT_CAP: u8 = 3;
pub const EXIT_USAGE: u8 = 64;

/// Rendered command result. `notice` goes to stderr.
#[derive(Debug)]
pub struct Outcome {
    pub body: String,
    pub code: u8,
    pub notice: Option<String>,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Self { body, code: EXIT_OK, notice: None }
    }
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::EmptyGraph { .. } => EXIT_DEGENERATE,
            Error::VertexCap { .. } => EXIT_CAP,
            _ => EXIT_ERROR,
        };
        let message = match e {
            Error::EmptyGraph { n } => format!("degenerate input: {n} is prime, so Γ'(Z_{n}) has no vertices"),
            Error::VertexCap { vertices, cap } => {
                format!("vertex cap exceeded: {vertices} vertices > cap {cap} (raise with --cap or COZERO_CAP)")
            }
            other => other.to_string(),
        };
        Self { code, message }
    }
}

type CmdResult = Result<Outcome, Failure>;

fn unsupported(format: Format, command: &str) -> Failure {
    Failure::usage(format!("--format {} is not available for `{command}`", format_name(format)))
}

fn format_name(format: Format) -> &'static str {
    match format {
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Dot => "dot",
        Format::Text => "text",
    }
}

fn now(cfg: &RunConfig) -> Option<u64> {
    cfg.timestamp
        .then(|| SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure { code: EXIT_ERROR, message: format!("thread pool: {e}") })
}

pub fn spectrum(n: u64, cfg: &RunConfig) -> CmdResult {
    let s = assemble_spectrum(n, &cfg.solver())?;
    let body = match cfg.format {
        Format::Text => with_newline(s.combined.to_text(cfg.merge_tol)),
        Format::Csv => spectrum_csv(&s.combined),
        Format::Json => with_newline(SpectrumDocument::new(&s, None, cfg.tol).with_timestamp(now(cfg)).to_json()),
        Format::Dot => return Err(unsupported(cfg.format, "spectrum")),
    };
    if s.prime_power {
        return Ok(Outcome {
            body,
            code: EXIT_DEGENERATE,
            notice: Some(format!("degenerate input: {n} is a prime power, so Γ'(Z_{n}) has no edges")),
        });
    }
    Ok(Outcome::ok(body))
}

#[derive(Serialize)]
struct VerifyDocument<'a> {
    schema: u32,
    n: u64,
    vertex_count: u64,
    edge_count: u64,
    passed: bool,
    tol: f64,
    max_deviation: f64,
    multiplicity_mismatches: usize,
    closed_form_match: Option<bool>,
    assembled_integral: bool,
    oracle_integral: bool,
    checks: &'a SolveChecks,
    assembled: Vec<SpectrumRow>,
    oracle: Vec<SpectrumRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    generated_at: Option<u64>,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

fn verify_text(r: &OracleReport, merge_tol: f64) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n = {}: {} vertices, {} edges", r.n, r.vertex_count, r.edge_count);
    let _ = writeln!(out, "assembled: {}", r.assembled.combined.to_text(merge_tol));
    let _ = writeln!(out, "oracle:    {}", r.oracle.to_text(merge_tol));
    let _ = writeln!(out, "max deviation: {:.3e} (tol {:e})", r.max_deviation(), r.tol);
    if !r.comparison.multiplicity_mismatches.is_empty() {
        let _ = writeln!(out, "multiplicity mismatches: {}", r.comparison.multiplicity_mismatches.len());
    }
    if let Some(m) = r.closed_form_match {
        let _ = writeln!(out, "pq closed form: {}", if m { "match" } else { "MISMATCH" });
    }
    let c = &r.oracle_checks;
    let _ = writeln!(
        out,
        "checks: trace gap {:.3e}, min eigenvalue {:.3e}, zero eigenvalues {} / components {}",
        c.trace_gap(),
        c.min_eigenvalue,
        c.zero_count,
        c.components
    );
    let _ = writeln!(
        out,
        "laplacian integral: {} (oracle {})",
        yes_no(r.assembled_integral),
        yes_no(r.oracle_integral)
    );
    let _ = writeln!(out, "{}", verdict(r.passed()));
    out
}

pub fn verify(n: u64, check_definition: bool, cfg: &RunConfig) -> CmdResult {
    if !matches!(cfg.format, Format::Text | Format::Json | Format::Csv) {
        return Err(unsupported(cfg.format, "verify"));
    }
    let r = verify_against_oracle(n, &cfg.verify(check_definition))?;
    let body = match cfg.format {
        Format::Json => to_json(&VerifyDocument {
            schema: JSON_SCHEMA_VERSION,
            n,
            vertex_count: r.vertex_count,
            edge_count: r.edge_count,
            passed: r.passed(),
            tol: r.tol,
            max_deviation: r.max_deviation(),
            multiplicity_mismatches: r.comparison.multiplicity_mismatches.len(),
            closed_form_match: r.closed_form_match,
            assembled_integral: r.assembled_integral,
            oracle_integral: r.oracle_integral,
            checks: &r.oracle_checks,
            assembled: spectrum_rows(&r.assembled.combined),
            oracle: spectrum_rows(&r.oracle),
            generated_at: now(cfg),
        }),
        Format::Csv => scan_csv(&[ScanRow::from_report(&r)]),
        _ => verify_text(&r, cfg.merge_tol),
    };
    let code = if r.passed() { EXIT_OK } else { EXIT_ERROR };
    Ok(Outcome { body, code, notice: None })
}

#[derive(Debug, Clone, Serialize)]
struct ScanRow {
    n: u64,
    status: &'static str,
    vertex_count: Option<u64>,
    edge_count: Option<u64>,
    max_deviation: Option<f64>,
    laplacian_integral: Option<bool>,
    closed_form_match: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    message: Option<String>,
}

impl ScanRow {
    fn from_report(r: &OracleReport) -> Self {
        Self {
            n: r.n,
            status: if r.passed() { "pass" } else { "fail" },
            vertex_count: Some(r.vertex_count),
            edge_count: Some(r.edge_count),
            max_deviation: Some(r.max_deviation()),
            laplacian_integral: Some(r.assembled_integral),
            closed_form_match: r.closed_form_match,
            message: None,
        }
    }

    fn from_error(n: u64, e: Error) -> Self {
        let status = if matches!(e, Error::VertexCap { .. }) { "skip" } else { "error" };
        Self {
            n,
            status,
            vertex_count: None,
            edge_count: None,
            max_deviation: None,
            laplacian_integral: None,
            closed_form_match: None,
            message: Some(Failure::from(e).message),
        }
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn scan_csv(rows: &[ScanRow]) -> String {
    let mut out = String::from("n,status,vertex_count,edge_count,max_deviation,laplacian_integral,closed_form_match\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.n,
            r.status,
            opt(r.vertex_count),
            opt(r.edge_count),
            r.max_deviation.map(|d| format!("{d:e}")).unwrap_or_default(),
            opt(r.laplacian_integral),
            opt(r.closed_form_match)
        );
    }
    out
}

#[derive(Debug, Serialize)]
struct ScanSummary {
    checked: usize,
    passed: usize,
    failed: usize,
    skipped: usize,
    errors: usize,
    integral: usize,
    failures: Vec<u64>,
    non_integral: Vec<u64>,
}

impl ScanSummary {
    fn new(rows: &[ScanRow]) -> Self {
        let count = |s: &str| rows.iter().filter(|r| r.status == s).count();
        Self {
            checked: rows.len(),
            passed: count("pass"),
            failed: count("fail"),
            skipped: count("skip"),
            errors: count("error"),
            integral: rows.iter().filter(|r| r.laplacian_integral == Some(true)).count(),
            failures: rows.iter().filter(|r| matches!(r.status, "fail" | "error")).map(|r| r.n).collect(),
            non_integral: rows.iter().filter(|r| r.laplacian_integral == Some(false)).map(|r| r.n).collect(),
        }
    }
}

#[derive(Serialize)]
struct ScanDocument<'a> {
    schema: u32,
    lo: u64,
    hi: u64,
    filter: &'static str,
    rows: &'a [ScanRow],
    summary: &'a ScanSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    generated_at: Option<u64>,
}

fn list(ns: &[u64]) -> String {
    if ns.is_empty() {
        return "none".into();
    }
    ns.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn eligible(lo: u64, hi: u64, family: Family) -> Result<Vec<u64>, Failure> {
    let mut out = Vec::new();
    for n in lo..=hi {
        if family.contains(&factorize(n)?) {
            out.push(n);
        }
    }
    Ok(out)
}

pub fn scan(target: Target, family: Family, cfg: &RunConfig) -> CmdResult {
    let Target::Range { lo, hi } = target else { unreachable!("scan takes a range") };
    if cfg.format == Format::Dot {
        return Err(unsupported(cfg.format, "scan"));
    }
    let started = Instant::now();
    let ns = eligible(lo, hi, family)?;
    let opts = cfg.verify(false);
    // collect() on an indexed parallel iterator keeps rows in n order
    let rows: Vec<ScanRow> = pool(cfg.jobs)?.install(|| {
        ns.par_iter()
            .map(|&n| match verify_against_oracle(n, &opts) {
                Ok(r) => ScanRow::from_report(&r),
                Err(e) => ScanRow::from_error(n, e),
            })
            .collect()
    });
    let summary = ScanSummary::new(&rows);
    let elapsed = started.elapsed();

    let body = match cfg.format {
        Format::Json => to_json(&ScanDocument {
            schema: JSON_SCHEMA_VERSION,
            lo,
            hi,
            filter: family.as_str(),
            rows: &rows,
            summary: &summary,
            elapsed_ms: cfg.timestamp.then_some(elapsed.as_millis()),
            generated_at: now(cfg),
        }),
        Format::Csv => scan_csv(&rows),
        _ => {
            let mut out = format!("{:>8} {:>9} {:>10} {:>11} {:>8}  result\n", "n", "vertices", "edges", "max_dev", "integral");
            for r in &rows {
                let _ = writeln!(
                    out,
                    "{:>8} {:>9} {:>10} {:>11} {:>8}  {}",
                    r.n,
                    opt(r.vertex_count),
                    opt(r.edge_count),
                    r.max_deviation.map(|d| format!("{d:.2e}")).unwrap_or_else(|| "-".into()),
                    r.laplacian_integral.map(yes_no).unwrap_or("-"),
                    match r.message.as_deref() {
                        Some(m) => format!("{} ({m})", r.status.to_uppercase()),
                        None => r.status.to_uppercase(),
                    }
                );
            }
            let _ = writeln!(
                out,
                "summary [{}]: {} checked, {} passed, {} failed, {} skipped, {} errors",
                family.as_str(),
                summary.checked,
                summary.passed,
                summary.failed,
                summary.skipped,
                summary.errors
            );
            let _ = writeln!(out, "failures: {}", list(&summary.failures));
            let _ = writeln!(
                out,
                "laplacian integral: {} of {} verified; not integral: {}",
                summary.integral,
                summary.passed + summary.failed,
                list(&summary.non_integral)
            );
            if cfg.timestamp {
                let _ = writeln!(out, "elapsed: {:.3} s", elapsed.as_secs_f64());
            }
            out
        }
    };
    let code = if summary.failures.is_empty() { EXIT_OK } else { EXIT_ERROR };
    Ok(Outcome { body, code, notice: None })
}

#[derive(Serialize)]
struct StructureDocument {
    schema: u32,
    n: u64,
    vertex_count: u64,
    quotient_connected: Option<bool>,
    classes: Vec<ClassRow>,
    edges: Vec<[u64; 2]>,
    laplacian: Vec<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    generated_at: Option<u64>,
}

pub fn structure(n: u64, full: bool, cfg: &RunConfig) -> CmdResult {
    if full && cfg.format != Format::Dot {
        return Err(Failure::usage("--full needs --format dot"));
    }
    let f = factorize(n)?;
    if f.is_prime() {
        return Err(Error::EmptyGraph { n }.into());
    }
    if full {
        let g = build_full_graph(n, BuildOptions { vertex_cap: cfg.cap, verify: false })?;
        return Ok(Outcome::ok(full_graph_dot(&g)));
    }
    let q = build_quotient(n)?;
    let l = build_weighted_laplacian(&q)?;
    let classes: Vec<ClassRow> = q
        .divisors()
        .iter()
        .zip(q.weights())
        .zip(q.weighted_degrees())
        .map(|((&d, &size), big_d)| ClassRow { d, size, weighted_degree: big_d })
        .collect();
    let edges: Vec<[u64; 2]> = q.edges().into_iter().map(|(i, j)| [q.divisors()[i], q.divisors()[j]]).collect();

    let body = match cfg.format {
        Format::Dot => quotient_dot(&q),
        Format::Csv => laplacian_csv(&l),
        Format::Json => to_json(&StructureDocument {
            schema: JSON_SCHEMA_VERSION,
            n,
            vertex_count: f.vertex_count(),
            quotient_connected: q.is_connected(),
            laplacian: (0..l.dim()).map(|i| l.entries().row(i).to_vec()).collect(),
            classes,
            edges,
            generated_at: now(cfg),
        }),
        Format::Text => {
            let connected = match q.is_connected() {
                Some(true) => "connected",
                Some(false) => "disconnected",
                None => "empty",
            };
            let mut out = format!(
                "n = {n}: {} divisor classes, {} vertices, quotient {connected}\n",
                q.len(),
                f.vertex_count()
            );
            let _ = writeln!(out, "{:>10} {:>10} {:>10}", "d", "size", "D");
            for c in &classes {
                let _ = writeln!(out, "{:>10} {:>10} {:>10}", c.d, c.size, c.weighted_degree);
            }
            let pairs: Vec<String> = edges.iter().map(|[a, b]| format!("{a}-{b}")).collect();
            let _ = writeln!(out, "edges: {}", if pairs.is_empty() { "none".into() } else { pairs.join(" ") });
            out
        }
    };
    Ok(Outcome::ok(body))
}

#[derive(Debug, Clone, Serialize)]
struct IntegralityRow {
    n: u64,
    laplacian_integral: bool,
    quotient_dimension: usize,
    /// Quotient eigenvalues that are not within tolerance of an integer.
    non_integer: Vec<f64>,
}

#[derive(Serialize)]
struct IntegralityDocument<'a> {
    schema: u32,
    lo: u64,
    hi: u64,
    filter: &'static str,
    rows: &'a [IntegralityRow],
    integral: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    generated_at: Option<u64>,
}

fn non_integer(s: &SpectrumMultiset, tol: f64) -> Vec<f64> {
    s.entries().iter().map(|e| e.value).filter(|v| (v - v.round()).abs() >= tol).collect()
}

pub fn integrality(target: Target, family: Family, cfg: &RunConfig) -> CmdResult {
    if cfg.format == Format::Dot {
        return Err(unsupported(cfg.format, "integrality"));
    }
    let (lo, hi, ns) = match target {
        Target::Single(n) => {
            if factorize(n)?.is_prime() {
                return Err(Error::EmptyGraph { n }.into());
            }
            (n, n, vec![n])
        }
        Target::Range { lo, hi } => (lo, hi, eligible(lo, hi, family)?),
    };
    let solver = cfg.solver();
    let rows: Vec<IntegralityRow> = pool(cfg.jobs)?.install(|| {
        ns.par_iter()
            .map(|&n| {
                assemble_spectrum(n, &solver).map(|s| IntegralityRow {
                    n,
                    laplacian_integral: s.is_laplacian_integral(cfg.tol),
                    quotient_dimension: s.quotient_dimension(),
                    non_integer: non_integer(&s.quotient_part, cfg.tol),
                })
            })
            .collect::<Result<_, Error>>()
    })?;
    let integral: Vec<u64> = rows.iter().filter(|r| r.laplacian_integral).map(|r| r.n).collect();

    let body = match cfg.format {
        Format::Json => to_json(&IntegralityDocument {
            schema: JSON_SCHEMA_VERSION,
            lo,
            hi,
            filter: family.as_str(),
            rows: &rows,
            integral,
            generated_at: now(cfg),
        }),
        Format::Csv => {
            let mut out = String::from("n,laplacian_integral,quotient_dimension\n");
            for r in &rows {
                let _ = writeln!(out, "{},{},{}", r.n, r.laplacian_integral, r.quotient_dimension);
            }
            out
        }
        _ => {
            let mut out = String::new();
            for r in &rows {
                let _ = writeln!(out, "{:>8}  {}", r.n, if r.laplacian_integral { "integral" } else { "not integral" });
            }
            let _ = writeln!(out, "laplacian integral: {} of {}", integral.len(), rows.len());
            out
        }
    };
    Ok(Outcome::ok(body))
}
