use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::{Error, Result};

/// Largest dimension accepted by [`characteristic_polynomial`].
pub const MAX_EXACT_DIMENSION: usize = 64;

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn new(dim: usize, data: Vec<i64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::Shape(format!("expected {} entries, got {}", dim * dim, data.len())));
        }
        Ok(Self { dim, data })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Shape("rows must all have length equal to the row count".into()));
        }
        Self::new(dim, rows.concat())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.dim + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.data
    }

    pub fn trace(&self) -> i64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// `P·M·Pᵀ` where `perm[i]` is the source row placed at position `i`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.dim);
        let m = self.dim;
        let data = (0..m * m).map(|k| self.get(perm[k / m], perm[k % m])).collect();
        Self { dim: m, data }
    }
}

/// Integer polynomial, coefficients from the leading term down to the constant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    /// Leading zero coefficients are stripped; the zero polynomial is `[0]`.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let first = coeffs.iter().position(|c| !c.is_zero());
        let coeffs = match first {
            Some(i) => coeffs[i..].to_vec(),
            None => vec![BigInt::zero()],
        };
        Self { coeffs }
    }

    pub fn from_i128(coeffs: &[i128]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Fixed-width coefficients; errors when any coefficient leaves `i128`.
    pub fn to_i128(&self) -> Result<Vec<i128>> {
        self.coeffs
            .iter()
            .map(|c| c.to_i128().ok_or(Error::Overflow("characteristic polynomial coefficient")))
            .collect()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    /// Horner evaluation in floating point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.to_f64().iter().fold(0.0, |acc, &c| acc * x + c)
    }

    /// `Σ |c_i| |x|^i`, the natural scale for a residual at `x`.
    pub fn magnitude_at(&self, x: f64) -> f64 {
        self.to_f64().iter().fold(0.0, |acc, &c| acc * x.abs() + c.abs())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() && (wrote || i < d) {
                continue;
            }
            let power = d - i;
            let negative = c < &BigInt::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (wrote, negative) {
                (false, true) => write!(f, "-")?,
                (true, true) => write!(f, " - ")?,
                (true, false) => write!(f, " + ")?,
                (false, false) => {}
            }
            let one = magnitude == BigInt::from(1);
            match power {
                0 => write!(f, "{magnitude}")?,
                1 if one => write!(f, "x")?,
                1 => write!(f, "{magnitude}x")?,
                _ if one => write!(f, "x^{power}")?,
                _ => write!(f, "{magnitude}x^{power}")?,
            }
            wrote = true;
        }
        Ok(())
    }
}

/// `det(xI − M)` by the Faddeev–LeVerrier recurrence in exact arithmetic:
/// `M_k = A·M_{k−1} + c_{k−1}·I`, `c_k = −tr(A·M_k)/k`.
///
/// For an integer matrix every division is exact; a non-zero remainder is
/// reported as an internal inconsistency.
pub fn characteristic_polynomial(matrix: &IntMatrix) -> Result<Polynomial> {
    let n = matrix.dim();
    if n > MAX_EXACT_DIMENSION {
        return Err(Error::DimensionTooLarge { dim: n, max: MAX_EXACT_DIMENSION });
    }
    let a = matrix.as_slice();
    let mut coeffs = vec![BigInt::from(1)];
    let mut m = vec![BigInt::zero(); n * n];
    let mut am = vec![BigInt::zero(); n * n];

    for k in 1..=n {
        for i in 0..n {
            m[i * n + i] = &am[i * n + i] + &coeffs[k - 1];
            for j in 0..n {
                if i != j {
                    m[i * n + j] = am[i * n + j].clone();
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigInt::zero();
                for l in 0..n {
                    let factor = a[i * n + l];
                    if factor != 0 {
                        acc += &m[l * n + j] * factor;
                    }
                }
                am[i * n + j] = acc;
            }
        }
        let trace: BigInt = (0..n).map(|i| &am[i * n + i]).sum();
        let (quotient, remainder) = trace.div_rem(&BigInt::from(k));
        if !remainder.is_zero() {
            return Err(Error::Inconsistent(format!(
                "Faddeev-LeVerrier trace not divisible by {k}"
            )));
        }
        coeffs.push(-quotient);
    }
    Ok(Polynomial::new(coeffs))
}
