//! Browser bindings for the static page in `www/`.
//!
//! Every export is a thin wrapper around a plain function returning
//! `Result<String, String>`, so the logic runs and is tested natively.

use std::f64::consts::PI;
use std::fmt::Write as _;

use cozero_core::eigen::SolverOptions;
use cozero_core::export::ClassRow;
use cozero_core::quotient::build_quotient;
use cozero_core::spectrum::{assemble_spectrum, verify_against_oracle, VerifyOptions, DEFAULT_COMPARE_TOL};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// The brute-force oracle is O(m³); keep it responsive in a browser tab.
pub const BROWSER_VERTEX_CAP: u64 = 2500;

/// Larger quotients are legible only as a hairball.
pub const MAX_DRAWN_NODES: usize = 120;

#[derive(Serialize)]
struct SpectrumView {
    n: u64,
    vertex_count: u64,
    text: String,
    laplacian_integral: bool,
    prime_power: bool,
    classes: Vec<ClassRow>,
    /// Eigenvalues contributed by the quotient, descending.
    quotient: Vec<f64>,
}

#[derive(Serialize)]
struct VerifyView {
    n: u64,
    vertex_count: u64,
    edge_count: u64,
    passed: bool,
    max_deviation: f64,
    closed_form_match: Option<bool>,
    assembled: String,
    oracle: String,
}

fn check_n(n: u64) -> Result<u64, String> {
    if n < 2 {
        return Err(format!("n must be at least 2, got {n}"));
    }
    Ok(n)
}

pub fn spectrum_report(n: u64) -> Result<String, String> {
    let opts = SolverOptions::default();
    let s = assemble_spectrum(check_n(n)?, &opts).map_err(|e| e.to_string())?;
    let view = SpectrumView {
        n,
        vertex_count: s.vertex_count,
        text: s.combined.to_text(opts.merge_tol),
        laplacian_integral: s.is_laplacian_integral(DEFAULT_COMPARE_TOL),
        prime_power: s.prime_power,
        classes: s
            .integer_part
            .iter()
            .map(|e| ClassRow { d: e.divisor, size: e.class_size, weighted_degree: e.value })
            .collect(),
        quotient: s.quotient_part.expanded(),
    };
    Ok(serde_json::to_string(&view).expect("view serializes"))
}

pub fn verify_report(n: u64, cap: u64) -> Result<String, String> {
    let options = VerifyOptions { vertex_cap: cap.min(BROWSER_VERTEX_CAP), ..VerifyOptions::default() };
    let merge = options.solver.merge_tol;
    let r = verify_against_oracle(check_n(n)?, &options).map_err(|e| e.to_string())?;
    let view = VerifyView {
        n,
        vertex_count: r.vertex_count,
        edge_count: r.edge_count,
        passed: r.passed(),
        max_deviation: r.max_deviation(),
        closed_form_match: r.closed_form_match,
        assembled: r.assembled.combined.to_text(merge),
        oracle: r.oracle.to_text(merge),
    };
    Ok(serde_json::to_string(&view).expect("view serializes"))
}

/// Circular layout of the quotient graph; node area grows with the class size.
pub fn quotient_svg(n: u64) -> Result<String, String> {
    let q = build_quotient(check_n(n)?).map_err(|e| e.to_string())?;
    if q.is_empty() {
        return Err(format!("{n} is prime: no proper divisors to draw"));
    }
    if q.len() > MAX_DRAWN_NODES {
        return Err(format!("{} divisor classes is too many to draw (limit {MAX_DRAWN_NODES})", q.len()));
    }
    let (size, center, ring) = (520.0, 260.0, 200.0);
    let d = q.len();
    let pos: Vec<(f64, f64)> = (0..d)
        .map(|i| {
            if d == 1 {
                return (center, center);
            }
            let a = 2.0 * PI * i as f64 / d as f64 - PI / 2.0;
            (center + ring * a.cos(), center + ring * a.sin())
        })
        .collect();

    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {size} {size}\" width=\"{size}\" height=\"{size}\">\n"
    );
    let _ = writeln!(svg, "<g stroke=\"#8a8f98\" stroke-width=\"1.2\">");
    for (i, j) in q.edges() {
        let ((x1, y1), (x2, y2)) = (pos[i], pos[j]);
        let _ = writeln!(svg, "<line x1=\"{x1:.1}\" y1=\"{y1:.1}\" x2=\"{x2:.1}\" y2=\"{y2:.1}\"/>");
    }
    svg.push_str("</g>\n<g font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">\n");
    for (i, ((div, w), big_d)) in q.divisors().iter().zip(q.weights()).zip(q.weighted_degrees()).enumerate() {
        let (x, y) = pos[i];
        let r = 12.0 + 3.0 * (*w as f64).log2();
        let _ = writeln!(
            svg,
            "<g><title>A_{div}: {w} vertices, degree {big_d}</title>\
             <circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"{r:.1}\" fill=\"#cfe3f7\" stroke=\"#2f5d8a\"/>\
             <text x=\"{x:.1}\" y=\"{:.1}\">{div}</text></g>",
            y + 4.0
        );
    }
    svg.push_str("</g>\n</svg>\n");
    Ok(svg)
}

fn js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

/// Spectrum of `Γ'(Z_n)` as JSON.
#[wasm_bindgen]
pub fn spectrum(n: u32) -> Result<String, JsValue> {
    js(spectrum_report(n.into()))
}

/// SVG drawing of the divisor quotient graph.
#[wasm_bindgen(js_name = quotientSvg)]
pub fn quotient_svg_js(n: u32) -> Result<String, JsValue> {
    js(quotient_svg(n.into()))
}

/// Brute-force check of the assembled spectrum, as JSON.
#[wasm_bindgen]
pub fn verify(n: u32, cap: u32) -> Result<String, JsValue> {
    js(verify_report(n.into(), cap.into()))
}
