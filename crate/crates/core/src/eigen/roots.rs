//! Real roots of integer polynomials whose roots are all real.
//!
//! Multiplicities come from an exact square-free decomposition
//! (`f_{k+1} = gcd(f_k, f_k')`). Each square-free factor has simple real
//! roots, and so does its derivative; the derivative's roots therefore
//! separate the factor's roots, which are then refined by bisection with
//! exact sign evaluation at dyadic points `a / 2^K`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Polynomial;
use crate::{Error, Result};

/// Fractional bits of the dyadic grid used for bisection.
const FRACTION_BITS: u32 = 64;

/// Coefficients low-first, no trailing zeros; the zero polynomial is empty.
type Poly = Vec<BigInt>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn degree(p: &Poly) -> usize {
    p.len().saturating_sub(1)
}

fn derivative(p: &Poly) -> Poly {
    trim(p.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
}

fn content(p: &Poly) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with a positive leading coefficient.
fn primitive(p: Poly) -> Poly {
    let p = trim(p);
    if p.is_empty() {
        return p;
    }
    let mut g = content(&p);
    if p.last().unwrap().is_negative() {
        g = -g;
    }
    p.into_iter().map(|c| c / &g).collect()
}

/// A scalar multiple of the pseudo-remainder of `a` by `b`.
fn pseudo_remainder(a: &Poly, b: &Poly) -> Poly {
    let mut r = a.clone();
    let lead_b = b.last().expect("non-zero divisor");
    while !r.is_empty() && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let lead_r = r.last().unwrap().clone();
        for c in r.iter_mut() {
            *c *= lead_b;
        }
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &lead_r * c;
        }
        r = primitive(r);
    }
    r
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (primitive(a.clone()), primitive(b.clone()));
    while !b.is_empty() {
        let r = pseudo_remainder(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// `a / b` over `Z`, for primitive `b` known to divide `a`.
fn exact_div(a: &Poly, b: &Poly) -> Result<Poly> {
    let mut r = a.clone();
    let lead_b = b.last().expect("non-zero divisor");
    let mut q = vec![BigInt::zero(); a.len().saturating_sub(b.len()) + 1];
    while !r.is_empty() && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let (factor, rem) = r.last().unwrap().div_rem(lead_b);
        if !rem.is_zero() {
            return Err(Error::Inconsistent("inexact polynomial division".into()));
        }
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &factor * c;
        }
        q[shift] = factor;
        r = trim(r);
    }
    if !r.is_empty() {
        return Err(Error::Inconsistent("polynomial division left a remainder".into()));
    }
    Ok(trim(q))
}

/// Square-free factors `t_k` whose roots are exactly the roots of
/// multiplicity `k` (index 0 holds `k = 1`).
fn square_free_decomposition(f: &Poly) -> Result<Vec<Poly>> {
    // f_k: roots of multiplicity ≥ k, each reduced by k − 1
    let mut tower = vec![primitive(f.clone())];
    while degree(tower.last().unwrap()) > 0 {
        let fk = tower.last().unwrap();
        tower.push(gcd(fk, &derivative(fk)));
    }
    // s_k = f_k / f_{k+1}: square-free, roots of multiplicity ≥ k
    let s: Vec<Poly> = tower
        .windows(2)
        .map(|w| exact_div(&w[0], &w[1]))
        .collect::<Result<_>>()?;
    let mut out = Vec::with_capacity(s.len());
    for k in 0..s.len() {
        match s.get(k + 1) {
            Some(next) => out.push(exact_div(&s[k], next)?),
            None => out.push(s[k].clone()),
        }
    }
    Ok(out)
}

/// Sign of `p(a / 2^K)`, evaluated exactly as `2^{K·d} p(a / 2^K)`.
fn sign_at(p: &Poly, a: &BigInt) -> i8 {
    let d = degree(p);
    let mut h = p[d].clone();
    for i in (0..d).rev() {
        h = h * a + (&p[i] << (FRACTION_BITS as usize * (d - i)));
    }
    match h.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Dyadic numerator of `1 + max |c_i / c_d|`, an upper bound on root magnitude.
fn cauchy_bound(p: &Poly) -> BigInt {
    let lead = p.last().unwrap().abs();
    let max_ratio = p[..p.len() - 1]
        .iter()
        .map(|c| c.abs().div_ceil(&lead))
        .max()
        .unwrap_or_else(BigInt::zero);
    (max_ratio + 2) << FRACTION_BITS as usize
}

/// Bisect for the root of `p` in `[lo, hi]`, given a sign change.
fn bisect(p: &Poly, mut lo: BigInt, mut hi: BigInt) -> BigInt {
    let sign_lo = sign_at(p, &lo);
    if sign_lo == 0 {
        return lo;
    }
    if sign_at(p, &hi) == 0 {
        return hi;
    }
    // resolution: about one f64 ulp of the endpoints, never below the grid
    let floor = BigInt::one();
    loop {
        let width = &hi - &lo;
        let magnitude = lo.abs().max(hi.abs()) >> 52usize;
        if width <= floor.clone().max(magnitude) {
            return (&lo + &hi) >> 1usize;
        }
        let mid: BigInt = (&lo + &hi) >> 1usize;
        match sign_at(p, &mid) {
            0 => return mid,
            s if s == sign_lo => lo = mid,
            _ => hi = mid,
        }
    }
}

/// Roots (dyadic numerators, ascending) of a square-free polynomial with
/// only real roots.
fn isolate_simple_real_roots(p: &Poly) -> Result<Vec<BigInt>> {
    let d = degree(p);
    if d == 0 {
        return Ok(Vec::new());
    }
    let bound = cauchy_bound(p);
    let critical = isolate_simple_real_roots(&primitive(derivative(p)))?;
    let mut fences = Vec::with_capacity(d + 1);
    fences.push(-bound.clone());
    fences.extend(critical);
    fences.push(bound);

    let mut roots = Vec::with_capacity(d);
    for w in fences.windows(2) {
        let (lo, hi) = (&w[0], &w[1]);
        let (s_lo, s_hi) = (sign_at(p, lo), sign_at(p, hi));
        if s_lo != 0 && s_lo == s_hi {
            return Err(Error::NonRealRoots);
        }
        if s_lo == 0 && roots.last() == Some(lo) {
            // the shared fence was already reported as a root
            continue;
        }
        roots.push(bisect(p, lo.clone(), hi.clone()));
    }
    if roots.len() != d {
        return Err(Error::NonRealRoots);
    }
    Ok(roots)
}

fn to_f64(numerator: &BigInt) -> f64 {
    numerator.to_f64().unwrap_or(f64::NAN) / 2f64.powi(FRACTION_BITS as i32)
}

/// All roots of `poly` (ascending, with multiplicity), assuming they are real.
///
/// Every returned root `r` satisfies `|poly(r)| ≤ tol · Σ|c_i||r|^i` in
/// floating point; a polynomial with non-real roots is rejected.
pub fn polynomial_roots_real(poly: &Polynomial, tol: f64) -> Result<Vec<f64>> {
    if poly.is_zero() {
        return Err(Error::Domain("the zero polynomial has no isolated roots".into()));
    }
    let mut low_first: Poly = poly.coeffs().iter().rev().cloned().collect();
    let zeros = low_first.iter().take_while(|c| c.is_zero()).count();
    low_first.drain(..zeros);

    let mut roots = vec![0.0; zeros];
    for (k, factor) in square_free_decomposition(&low_first)?.iter().enumerate() {
        for r in isolate_simple_real_roots(factor)? {
            let value = to_f64(&r);
            roots.extend(std::iter::repeat(value).take(k + 1));
        }
    }
    roots.sort_by(f64::total_cmp);

    for &root in &roots {
        let residual = poly.eval_f64(root).abs();
        let bound = tol * poly.magnitude_at(root);
        if !(residual <= bound) {
            return Err(Error::RootResidual { root, residual, bound });
        }
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roots(coeffs: &[i128]) -> Vec<f64> {
        polynomial_roots_real(&Polynomial::from_i128(coeffs), 1e-9).unwrap()
    }

    fn assert_close(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len(), "{got:?} vs {want:?}");
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < tol, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn simple_quadratic() {
        assert_close(&roots(&[1, -3, 2]), &[1.0, 2.0], 1e-14);
    }

    #[test]
    fn pure_power() {
        assert_eq!(roots(&[1, 0, 0, 0]), vec![0.0; 3]);
        assert_eq!(roots(&[5]), Vec::<f64>::new());
    }

    #[test]
    fn quotient_of_twelve() {
        // x(x^3 - 11x^2 + 34x - 28): cubic has three positive real roots summing to 11
        let r = roots(&[1, -11, 34, -28, 0]);
        assert_eq!(r.len(), 4);
        assert_eq!(r[0], 0.0);
        assert!(r[1..].iter().all(|&x| x > 0.0));
        assert!((r[1..].iter().sum::<f64>() - 11.0).abs() < 1e-12);
    }

    #[test]
    fn repeated_roots_get_multiplicities() {
        // (x-1)^3 (x+2)^2 (x-5)
        let mut p: Poly = vec![BigInt::one()];
        for root in [1i64, 1, 1, -2, -2, 5] {
            let mut next = vec![BigInt::zero(); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * root;
            }
            p = next;
        }
        let poly = Polynomial::new(p.into_iter().rev().collect());
        let r = polynomial_roots_real(&poly, 1e-9).unwrap();
        assert_close(&r, &[-2.0, -2.0, 1.0, 1.0, 1.0, 5.0], 1e-12);
    }

    #[test]
    fn rational_and_close_roots() {
        // (2x - 1)(3x - 1)(x - 1000)(x - 1000.001) scaled: 1000x - 1000001 factor
        let mut p: Poly = vec![BigInt::one()];
        for (num, den) in [(1i64, 2i64), (1, 3), (1000, 1), (1000001, 1000)] {
            let mut next = vec![BigInt::zero(); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                next[i + 1] += c * den;
                next[i] -= c * num;
            }
            p = next;
        }
        let poly = Polynomial::new(p.into_iter().rev().collect());
        let r = polynomial_roots_real(&poly, 1e-9).unwrap();
        assert_close(&r, &[1.0 / 3.0, 0.5, 1000.0, 1000.001], 1e-12);
    }

    #[test]
    fn complex_roots_are_rejected() {
        let err = polynomial_roots_real(&Polynomial::from_i128(&[1, 0, 1]), 1e-9).unwrap_err();
        assert_eq!(err, Error::NonRealRoots);
        let err = polynomial_roots_real(&Polynomial::from_i128(&[1, -1, 0, 1]), 1e-9).unwrap_err();
        assert_eq!(err, Error::NonRealRoots);
        assert!(matches!(
            polynomial_roots_real(&Polynomial::from_i128(&[0]), 1e-9),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn internal_algebra() {
        let p = |v: &[i64]| -> Poly { v.iter().map(|&c| BigInt::from(c)).collect() };
        // (x - 1)^2 (x + 1) = x^3 - x^2 - x + 1
        let f = p(&[1, -1, -1, 1]);
        assert_eq!(gcd(&f, &derivative(&f)), p(&[-1, 1]));
        assert_eq!(exact_div(&f, &p(&[-1, 1])).unwrap(), p(&[-1, 0, 1]));
        assert!(exact_div(&f, &p(&[2, 1])).is_err());
        let parts = square_free_decomposition(&f).unwrap();
        assert_eq!(parts, vec![p(&[1, 1]), p(&[-1, 1])]);
    }
}
