//! Laplacian spectrum of `Γ'(Z_n)` assembled from the divisor quotient.
//!
//! Every divisor class is an edgeless cell, so its Laplacian spectrum is all
//! zeros: dropping one zero and shifting by the weighted degree `D_k` leaves
//! `D_k` with multiplicity `φ(n/k) − 1`. The remaining `d` eigenvalues are
//! those of `L(Υ'_n)`, computed through its symmetric form.

use serde::Serialize;

use crate::eigen::{raw_eigenvalues, DenseSymMatrix, Polynomial, SolverOptions, SpectrumMultiset};
use crate::graph::{build_full_graph, BuildOptions, DEFAULT_VERTEX_CAP};
use crate::number_theory::{checked_pow, factorize, is_prime, totient};
use crate::quotient::{build_quotient, build_weighted_laplacian};
use crate::{Error, Result};

/// Default tolerance for spectrum comparisons and integrality.
pub const DEFAULT_COMPARE_TOL: f64 = 1e-6;

/// One cell's contribution: `value = D_k` repeated `multiplicity = φ(n/k) − 1` times.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntegerEigenvalue {
    pub divisor: u64,
    pub class_size: u64,
    pub value: u64,
    pub multiplicity: u64,
}

/// Sanity checks on one numeric eigensolve of a Laplacian-like matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SolveChecks {
    pub trace: f64,
    pub eigenvalue_sum: f64,
    pub frobenius_norm: f64,
    pub min_eigenvalue: f64,
    pub zero_count: usize,
    pub components: usize,
}

impl SolveChecks {
    pub fn new(matrix: &DenseSymMatrix, values: &[f64], components: usize, zero_tol: f64) -> Self {
        Self {
            trace: matrix.trace(),
            eigenvalue_sum: values.iter().sum(),
            frobenius_norm: matrix.frobenius_norm(),
            min_eigenvalue: values.iter().copied().fold(f64::INFINITY, f64::min),
            zero_count: values.iter().filter(|v| v.abs() < zero_tol).count(),
            components,
        }
    }

    pub fn trace_gap(&self) -> f64 {
        (self.trace - self.eigenvalue_sum).abs()
    }

    pub fn trace_ok(&self) -> bool {
        self.trace_gap() <= 1e-8 * self.frobenius_norm.max(1.0)
    }

    pub fn semidefinite_ok(&self) -> bool {
        self.min_eigenvalue >= -1e-8
    }

    pub fn nullity_ok(&self) -> bool {
        self.zero_count == self.components
    }

    pub fn passed(&self) -> bool {
        self.trace_ok() && self.semidefinite_ok() && self.nullity_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AssembledSpectrum {
    pub n: u64,
    pub vertex_count: u64,
    pub integer_part: Vec<IntegerEigenvalue>,
    pub quotient_part: SpectrumMultiset,
    pub combined: SpectrumMultiset,
    /// `n = p^t` with `t ≥ 2`: the graph is edgeless (or a single vertex).
    pub prime_power: bool,
    pub quotient_connected: bool,
    /// Checks on the quotient solve; `None` when the quotient part is closed-form.
    pub quotient_checks: Option<SolveChecks>,
}

impl AssembledSpectrum {
    /// Eigenvalues delivered by the integer part, `Σ (φ(n/k) − 1)`.
    pub fn integer_part_count(&self) -> u64 {
        self.integer_part.iter().map(|e| e.multiplicity).sum()
    }

    pub fn quotient_dimension(&self) -> usize {
        self.quotient_part.total_multiplicity()
    }

    pub fn is_laplacian_integral(&self, tol: f64) -> bool {
        self.combined.is_integral(tol)
    }

    /// Weighted degrees in ascending divisor order.
    pub fn weighted_degrees(&self) -> Vec<u64> {
        self.integer_part.iter().map(|e| e.value).collect()
    }
}

pub fn is_laplacian_integral(spectrum: &AssembledSpectrum, tol: f64) -> bool {
    spectrum.is_laplacian_integral(tol)
}

fn integer_multiset(part: &[IntegerEigenvalue]) -> Result<SpectrumMultiset> {
    let pairs = part
        .iter()
        .map(|e| {
            let value = i64::try_from(e.value).map_err(|_| Error::Overflow("eigenvalue"))?;
            Ok((value, e.multiplicity as usize))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SpectrumMultiset::from_exact(pairs))
}

pub fn assemble_spectrum(n: u64, options: &SolverOptions) -> Result<AssembledSpectrum> {
    let f = factorize(n)?;
    if f.is_prime() {
        return Err(Error::EmptyGraph { n });
    }
    let quotient = build_quotient(n)?;
    let laplacian = build_weighted_laplacian(&quotient)?;
    let integer_part: Vec<IntegerEigenvalue> = quotient
        .divisors()
        .iter()
        .zip(quotient.weights())
        .zip(quotient.weighted_degrees())
        .map(|((&divisor, &class_size), value)| IntegerEigenvalue {
            divisor,
            class_size,
            value,
            multiplicity: class_size - 1,
        })
        .collect();

    let values = raw_eigenvalues(laplacian.symmetric(), options)?;
    let checks = SolveChecks::new(
        laplacian.symmetric(),
        &values,
        quotient.components().len(),
        options.merge_tol,
    );
    let quotient_part = SpectrumMultiset::from_values(&values, options.merge_tol);
    let combined = integer_multiset(&integer_part)?.union(&quotient_part, options.merge_tol);

    Ok(AssembledSpectrum {
        n,
        vertex_count: f.vertex_count(),
        integer_part,
        quotient_part,
        combined,
        prime_power: f.prime_power().is_some(),
        quotient_connected: quotient.is_connected() == Some(true),
        quotient_checks: Some(checks),
    })
}

fn require_distinct_primes(p: u64, q: u64) -> Result<()> {
    if !is_prime(p) || !is_prime(q) {
        return Err(Error::Domain(format!("{p} and {q} must both be prime")));
    }
    if p == q {
        return Err(Error::Domain(format!("primes must be distinct, got {p} twice")));
    }
    Ok(())
}

/// Spectrum of `Γ'(Z_{pq})` from the closed form
/// `{0¹, (p+q−2)¹, (p−1)^{q−2}, (q−1)^{p−2}}`; no numerics involved.
pub fn closed_form_pq(p: u64, q: u64) -> Result<AssembledSpectrum> {
    require_distinct_primes(p, q)?;
    let (p, q) = (p.min(q), p.max(q));
    let n = p.checked_mul(q).ok_or(Error::Overflow("p·q"))?;
    // class p has size φ(q) and sees class q (size φ(p)), and vice versa
    let integer_part = vec![
        IntegerEigenvalue { divisor: p, class_size: q - 1, value: p - 1, multiplicity: q - 2 },
        IntegerEigenvalue { divisor: q, class_size: p - 1, value: q - 1, multiplicity: p - 2 },
    ];
    let sum = i64::try_from(p + q - 2).map_err(|_| Error::Overflow("p + q"))?;
    let quotient_part = SpectrumMultiset::from_exact([(sum, 1), (0, 1)]);
    let combined = integer_multiset(&integer_part)?.union(&quotient_part, 0.5);
    Ok(AssembledSpectrum {
        n,
        vertex_count: p + q - 2,
        integer_part,
        quotient_part,
        combined,
        prime_power: false,
        quotient_connected: true,
        quotient_checks: None,
    })
}

/// Characteristic polynomial `l(x)` of `L(Υ'_{p²q})` from its closed-form
/// coefficients, leading term first.
pub fn charpoly_p2q(p: u64, q: u64) -> Result<Polynomial> {
    require_distinct_primes(p, q)?;
    let overflow = || Error::Overflow("charpoly_p2q coefficient");
    if p > 1 << 20 || q > 1 << 20 {
        return Err(overflow());
    }
    let (p, q) = (p as i128, q as i128);
    let c3 = -((p - 1) * (2 * p + 1) + (p + 1) * (q - 1));
    let c2 = p * (p - 1) * (p - 1) * (p + 1)
        + (p - 1) * (p + 1) * (p + 1) * (q - 1)
        + p * (q - 1) * (q - 1)
        + (p - 1) * (p - 1) * (q - 1);
    let c1 = -p * (p - 1) * (q - 1) * ((p - 1) * (p + 1) + p * (q - 1));
    Ok(Polynomial::from_i128(&[1, c3, c2, c1, 0]))
}

/// Divisor `p^i q^j` of `n = p^{n1} q^{n2}` as a point of the exponent lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct LatticePoint {
    i: u32,
    j: u32,
    divisor: u64,
    class_size: u64,
}

/// Two proper divisors are adjacent iff their exponent vectors are incomparable.
fn lattice_adjacent(a: &LatticePoint, b: &LatticePoint) -> bool {
    (a.i > b.i && a.j < b.j) || (a.i < b.i && a.j > b.j)
}

/// Spectrum of `Γ'(Z_{p^{n1} q^{n2}})` built on the exponent lattice: class
/// sizes `φ(p^{n1−i}) φ(q^{n2−j})`, adjacency by incomparability, and the
/// `(n1+1)(n2+1) − 2` quotient eigenvalues from the lattice-built matrix.
pub fn closed_form_general(
    p: u64,
    n1: u32,
    q: u64,
    n2: u32,
    options: &SolverOptions,
) -> Result<AssembledSpectrum> {
    require_distinct_primes(p, q)?;
    if n1 == 0 || n2 == 0 {
        return Err(Error::Domain("exponents must be at least 1".into()));
    }
    let n = checked_pow(p, n1)?
        .checked_mul(checked_pow(q, n2)?)
        .ok_or(Error::Overflow("p^n1 q^n2"))?;

    let mut points = Vec::new();
    for i in 0..=n1 {
        for j in 0..=n2 {
            if (i, j) == (0, 0) || (i, j) == (n1, n2) {
                continue;
            }
            let divisor = checked_pow(p, i)? * checked_pow(q, j)?;
            let class_size = totient(checked_pow(p, n1 - i)?)? * totient(checked_pow(q, n2 - j)?)?;
            points.push(LatticePoint { i, j, divisor, class_size });
        }
    }
    points.sort_by_key(|pt| pt.divisor);

    let d = points.len();
    let degrees: Vec<u64> = points
        .iter()
        .map(|a| points.iter().filter(|b| lattice_adjacent(a, b)).map(|b| b.class_size).sum())
        .collect();
    let integer_part: Vec<IntegerEigenvalue> = points
        .iter()
        .zip(&degrees)
        .map(|(pt, &value)| IntegerEigenvalue {
            divisor: pt.divisor,
            class_size: pt.class_size,
            value,
            multiplicity: pt.class_size - 1,
        })
        .collect();

    let mut data = vec![0.0; d * d];
    for (r, a) in points.iter().enumerate() {
        data[r * d + r] = degrees[r] as f64;
        for (c, b) in points.iter().enumerate() {
            if lattice_adjacent(a, b) {
                data[r * d + c] = -((a.class_size as f64) * (b.class_size as f64)).sqrt();
            }
        }
    }
    let matrix = DenseSymMatrix::new_unchecked(d, data);
    let values = raw_eigenvalues(&matrix, options)?;
    // the lattice quotient of two distinct primes is always connected
    let checks = SolveChecks::new(&matrix, &values, 1, options.merge_tol);
    let quotient_part = SpectrumMultiset::from_values(&values, options.merge_tol);
    let combined = integer_multiset(&integer_part)?.union(&quotient_part, options.merge_tol);

    Ok(AssembledSpectrum {
        n,
        vertex_count: n - totient(n)? - 1,
        integer_part,
        quotient_part,
        combined,
        prime_power: false,
        quotient_connected: true,
        quotient_checks: Some(checks),
    })
}

/// Sorted elementwise comparison of two spectra given with multiplicity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumComparison {
    pub left_len: usize,
    pub right_len: usize,
    pub max_deviation: f64,
    /// Pairs whose gap exceeds the tolerance.
    pub mismatched_pairs: usize,
    /// `(value, left count, right count)` where counts near `value` disagree.
    pub multiplicity_mismatches: Vec<(f64, usize, usize)>,
}

impl SpectrumComparison {
    pub fn matches(&self) -> bool {
        self.left_len == self.right_len
            && self.mismatched_pairs == 0
            && self.multiplicity_mismatches.is_empty()
    }
}

pub fn compare_spectra(left: &SpectrumMultiset, right: &SpectrumMultiset, tol: f64) -> SpectrumComparison {
    let a = left.expanded();
    let b = right.expanded();
    let mut max_deviation: f64 = 0.0;
    let mut mismatched_pairs = a.len().abs_diff(b.len());
    for (x, y) in a.iter().zip(&b) {
        let gap = (x - y).abs();
        max_deviation = max_deviation.max(gap);
        if !(gap <= tol) {
            mismatched_pairs += 1;
        }
    }
    let mut multiplicity_mismatches: Vec<(f64, usize, usize)> = Vec::new();
    for e in left.entries().iter().chain(right.entries()) {
        let (l, r) = (left.count_near(e.value, tol), right.count_near(e.value, tol));
        if l != r && !multiplicity_mismatches.iter().any(|m| (m.0 - e.value).abs() < tol) {
            multiplicity_mismatches.push((e.value, l, r));
        }
    }
    SpectrumComparison {
        left_len: a.len(),
        right_len: b.len(),
        max_deviation,
        mismatched_pairs,
        multiplicity_mismatches,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub vertex_cap: u64,
    pub tol: f64,
    pub solver: SolverOptions,
    /// Also cross-check every edge against exhaustively enumerated ideals.
    pub check_definition: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            vertex_cap: DEFAULT_VERTEX_CAP,
            tol: DEFAULT_COMPARE_TOL,
            solver: SolverOptions::default(),
            check_definition: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub n: u64,
    pub vertex_count: u64,
    pub edge_count: u64,
    pub assembled: AssembledSpectrum,
    pub oracle: SpectrumMultiset,
    pub comparison: SpectrumComparison,
    pub oracle_checks: SolveChecks,
    /// Agreement with the `pq` closed form, when `n = pq`.
    pub closed_form_match: Option<bool>,
    pub assembled_integral: bool,
    pub oracle_integral: bool,
    pub tol: f64,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.comparison.matches()
            && self.oracle_checks.passed()
            && self.closed_form_match != Some(false)
    }

    pub fn max_deviation(&self) -> f64 {
        self.comparison.max_deviation
    }
}

/// Build `Γ'(Z_n)` explicitly, solve its full Laplacian, and compare with
/// [`assemble_spectrum`].
pub fn verify_against_oracle(n: u64, options: &VerifyOptions) -> Result<OracleReport> {
    let f = factorize(n)?;
    if f.is_prime() {
        return Err(Error::EmptyGraph { n });
    }
    if f.vertex_count() > options.vertex_cap {
        return Err(Error::VertexCap { vertices: f.vertex_count(), cap: options.vertex_cap });
    }
    let assembled = assemble_spectrum(n, &options.solver)?;
    let graph = build_full_graph(
        n,
        BuildOptions { vertex_cap: options.vertex_cap, verify: options.check_definition },
    )?;
    let laplacian = graph.laplacian();
    let values = raw_eigenvalues(&laplacian, &options.solver)?;
    let oracle_checks =
        SolveChecks::new(&laplacian, &values, graph.components().len(), options.solver.merge_tol);
    let oracle = SpectrumMultiset::from_values(&values, options.solver.merge_tol);
    let comparison = compare_spectra(&assembled.combined, &oracle, options.tol);

    let closed_form_match = match f.factors() {
        [(p, 1), (q, 1)] => {
            let closed = closed_form_pq(*p, *q)?;
            Some(compare_spectra(&closed.combined, &assembled.combined, options.tol).matches())
        }
        _ => None,
    };

    Ok(OracleReport {
        n,
        vertex_count: graph.vertex_count() as u64,
        edge_count: graph.edge_count(),
        assembled_integral: assembled.is_laplacian_integral(options.tol),
        oracle_integral: oracle.is_integral(options.tol),
        assembled,
        oracle,
        comparison,
        oracle_checks,
        closed_form_match,
        tol: options.tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::{characteristic_polynomial, polynomial_roots_real};
    use crate::number_theory::totient;

    fn opts() -> SolverOptions {
        SolverOptions::default()
    }

    #[test]
    fn assemble_examples() {
        let s15 = assemble_spectrum(15, &opts()).unwrap();
        assert_eq!(s15.combined.to_text(1e-6), "6^1 4^1 2^3 0^1");
        assert!(s15.combined.entries()[1].exact && s15.combined.entries()[2].exact);

        let s4 = assemble_spectrum(4, &opts()).unwrap();
        assert_eq!(s4.combined.to_text(1e-6), "0^1");
        assert!(s4.prime_power);

        let s12 = assemble_spectrum(12, &opts()).unwrap();
        assert_eq!(s12.weighted_degrees(), vec![2, 4, 3, 2]);
        let mults: Vec<u64> = s12.integer_part.iter().map(|e| e.multiplicity).collect();
        assert_eq!(mults, vec![1, 1, 1, 0]);
        assert_eq!(s12.quotient_dimension(), 4);
        assert_eq!(s12.combined.total_multiplicity(), 7);

        assert_eq!(assemble_spectrum(7, &opts()).unwrap_err(), Error::EmptyGraph { n: 7 });
    }

    #[test]
    fn twelve_is_not_laplacian_integral() {
        // x^3 - 11x^2 + 34x - 28 has no integer root (candidates ±1, ±2, ±4, ±7, ±14, ±28)
        let cubic = |x: i64| x * x * x - 11 * x * x + 34 * x - 28;
        assert!([1, 2, 4, 7, 14, 28].iter().all(|&x| cubic(x) != 0 && cubic(-x) != 0));
        let s12 = assemble_spectrum(12, &opts()).unwrap();
        assert!(!is_laplacian_integral(&s12, 1e-6));
    }

    #[test]
    fn pq_closed_form_examples() {
        assert_eq!(closed_form_pq(3, 5).unwrap().combined.to_text(1e-6), "6^1 4^1 2^3 0^1");
        assert_eq!(closed_form_pq(5, 3).unwrap().combined.to_text(1e-6), "6^1 4^1 2^3 0^1");
        let s6 = closed_form_pq(2, 3).unwrap();
        assert_eq!(s6.combined.to_text(1e-6), "3^1 1^1 0^1");
        assert_eq!(s6.combined.total_multiplicity() as u64, s6.vertex_count);
        // q − 1 appears p − 2 = 0 times when p = 2
        assert_eq!(closed_form_pq(2, 7).unwrap().combined.count_near(6.0, 1e-6), 0);
        assert!(closed_form_pq(3, 3).is_err());
        assert!(closed_form_pq(4, 5).is_err());
        assert!(is_laplacian_integral(&closed_form_pq(5, 7).unwrap(), 1e-6));
    }

    #[test]
    fn charpoly_p2q_examples() {
        let l = charpoly_p2q(2, 3).unwrap();
        assert_eq!(l.to_i128().unwrap(), vec![1, -11, 34, -28, 0]);
        for (p, q) in [(2, 3), (3, 2), (2, 5), (5, 2), (3, 5), (5, 3), (7, 11)] {
            let c = charpoly_p2q(p, q).unwrap().to_i128().unwrap();
            assert_eq!((c[0], c[4]), (1, 0));
            let exact = build_weighted_laplacian(&build_quotient(p * p * q).unwrap())
                .unwrap()
                .characteristic_polynomial()
                .unwrap();
            assert_eq!(exact.to_i128().unwrap(), c, "(p, q) = ({p}, {q})");
        }
        assert!(charpoly_p2q(2, 2).is_err());
    }

    #[test]
    fn general_family_examples() {
        let pq = closed_form_general(3, 1, 5, 1, &opts()).unwrap();
        let direct = closed_form_pq(3, 5).unwrap();
        assert!(compare_spectra(&pq.combined, &direct.combined, 1e-9).matches());

        let g = closed_form_general(2, 2, 3, 1, &opts()).unwrap();
        assert_eq!(g.weighted_degrees(), vec![2, 4, 3, 2]);

        let g72 = closed_form_general(2, 3, 3, 2, &opts()).unwrap();
        assert_eq!(g72.n, 72);
        assert_eq!(g72.quotient_dimension(), 10);
        assert_eq!(g72.integer_part_count(), (72 - totient(72).unwrap() - 1) - 10);
        assert_eq!(g72.integer_part_count(), 37);

        assert!(closed_form_general(2, 0, 3, 1, &opts()).is_err());
        assert!(closed_form_general(2, 1, 2, 1, &opts()).is_err());
    }

    /// Weighted degrees of the chain families written out term by term.
    #[test]
    fn general_family_degree_formulas() {
        let phi = |x: u64| totient(x).unwrap();
        for (p, n1, q, n2) in [(2u64, 3u32, 3u64, 2u32), (3, 2, 2, 3), (5, 2, 3, 2), (2, 4, 5, 1)] {
            let g = closed_form_general(p, n1, q, n2, &opts()).unwrap();
            let d_of = |divisor: u64| g.integer_part.iter().find(|e| e.divisor == divisor).unwrap().value;
            let pw = |b: u64, e: u32| b.pow(e);
            for i in 1..=n1 {
                let expected: u64 = (0..i)
                    .flat_map(|a| (1..=n2).map(move |j| (a, j)))
                    .map(|(a, j)| phi(pw(p, n1 - a) * pw(q, n2 - j)))
                    .sum();
                assert_eq!(d_of(pw(p, i)), expected, "D_p^{i}");
            }
            for j in 1..=n2 {
                let expected: u64 = (0..j)
                    .flat_map(|b| (1..=n1).map(move |i| (i, b)))
                    .map(|(i, b)| phi(pw(p, n1 - i) * pw(q, n2 - b)))
                    .sum();
                assert_eq!(d_of(pw(q, j)), expected, "D_q^{j}");
            }
            let expected_pq: u64 = (2..=n1).map(|i| phi(pw(p, n1 - i) * pw(q, n2))).sum::<u64>()
                + (2..=n2).map(|j| phi(pw(p, n1) * pw(q, n2 - j))).sum::<u64>();
            assert_eq!(d_of(p * q), expected_pq, "D_pq");
        }
    }

    #[test]
    fn p_to_the_n_times_q_degrees() {
        let phi = |x: u64| totient(x).unwrap();
        for (p, k, q) in [(2u64, 3u32, 3u64), (3, 3, 2), (2, 4, 5), (3, 2, 7)] {
            let s = assemble_spectrum(p.pow(k) * q, &opts()).unwrap();
            let d_of = |divisor: u64| s.integer_part.iter().find(|e| e.divisor == divisor).unwrap().value;
            for i in 1..=k {
                let expected: u64 = (0..i).map(|a| phi(p.pow(k - a))).sum();
                assert_eq!(d_of(p.pow(i)), expected);
            }
            for j in 0..k {
                let expected: u64 = (j + 1..=k).map(|i| phi(p.pow(k - i) * q)).sum();
                assert_eq!(d_of(p.pow(j) * q), expected);
            }
        }
    }

    #[test]
    fn oracle_examples() {
        let r30 = verify_against_oracle(30, &VerifyOptions::default()).unwrap();
        assert!(r30.passed(), "{r30:?}");
        assert!(r30.max_deviation() < 1e-8);

        let r15 = verify_against_oracle(15, &VerifyOptions::default()).unwrap();
        assert!(r15.passed());
        assert_eq!(r15.closed_form_match, Some(true));
        assert_eq!(r15.edge_count, 8);

        let r9 = verify_against_oracle(9, &VerifyOptions::default()).unwrap();
        assert!(r9.passed());
        assert_eq!(r9.oracle.to_text(1e-6), "0^2");
        assert_eq!(r9.assembled.combined.to_text(1e-6), "0^2");
    }

    #[test]
    fn oracle_refusals() {
        let capped = VerifyOptions { vertex_cap: 10, ..Default::default() };
        assert_eq!(
            verify_against_oracle(30, &capped).unwrap_err(),
            Error::VertexCap { vertices: 21, cap: 10 }
        );
        assert_eq!(
            verify_against_oracle(7919, &VerifyOptions::default()).unwrap_err(),
            Error::EmptyGraph { n: 7919 }
        );
    }

    #[test]
    fn comparison_reports_worst_gap() {
        let a = SpectrumMultiset::from_values(&[3.0, 1.0, 0.0], 1e-6);
        let b = SpectrumMultiset::from_values(&[3.0, 1.5, 0.0], 1e-6);
        let c = compare_spectra(&a, &b, 1e-6);
        assert!(!c.matches());
        assert_eq!(c.mismatched_pairs, 1);
        assert!((c.max_deviation - 0.5).abs() < 1e-15);
        assert_eq!(c.multiplicity_mismatches.len(), 2);

        let short = SpectrumMultiset::from_values(&[3.0, 1.0], 1e-6);
        assert!(!compare_spectra(&a, &short, 1e-6).matches());
    }

    #[test]
    fn quotient_roots_reproduce_quotient_part() {
        for n in [12u64, 18, 20, 28, 30, 36, 60, 72, 210] {
            let s = assemble_spectrum(n, &opts()).unwrap();
            let l = build_weighted_laplacian(&build_quotient(n).unwrap()).unwrap();
            let roots = polynomial_roots_real(&characteristic_polynomial(l.entries()).unwrap(), 1e-9).unwrap();
            let from_roots = SpectrumMultiset::from_values(&roots, 1e-6);
            assert!(compare_spectra(&s.quotient_part, &from_roots, 1e-6).matches(), "n = {n}");
        }
    }
}
