//! Exact integer arithmetic over `u64`: factorization, Euler's totient,
//! divisor enumeration and the gcd-class partition of `Z_n`.

use serde::Serialize;

use crate::{Error, Result};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Prime-power decomposition `n = p_1^e_1 ... p_m^e_m` with strictly
/// increasing primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_prime(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// `Some((p, t))` when `n = p^t`.
    pub fn prime_power(&self) -> Option<(u64, u32)> {
        match self.factors.as_slice() {
            [single] => Some(*single),
            _ => None,
        }
    }

    pub fn distinct_primes(&self) -> usize {
        self.factors.len()
    }

    pub fn totient(&self) -> u64 {
        self.factors
            .iter()
            .fold(self.n, |acc, &(p, _)| acc / p * (p - 1))
    }

    /// All divisors of `n`, ascending, including `1` and `n`.
    pub fn divisors(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(p, e) in &self.factors {
            let current = out.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..current {
                    out.push(out[i] * pk);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Divisors `d` with `1 < d < n`, ascending.
    pub fn proper_divisors(&self) -> Vec<u64> {
        let mut all = self.divisors();
        all.retain(|&d| d != 1 && d != self.n);
        all
    }

    /// Number of vertices of the cozero-divisor graph, `n − φ(n) − 1`.
    pub fn vertex_count(&self) -> u64 {
        self.n - self.totient() - 1
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n < 2 {
        return Err(Error::Domain(format!("factorize requires n >= 2, got {n}")));
    }
    let mut factors = Vec::new();
    let mut m = n;
    let mut d = 2u64;
    while d <= m / d {
        if m % d == 0 {
            let mut e = 0;
            while m % d == 0 {
                m /= d;
                e += 1;
            }
            factors.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if m > 1 {
        factors.push((m, 1));
    }
    Ok(Factorization { n, factors })
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).map(|f| f.is_prime()).unwrap_or(false)
}

/// Euler's totient via the product formula; `totient(1) = 1`.
pub fn totient(n: u64) -> Result<u64> {
    match n {
        0 => Err(Error::Domain("totient requires n >= 1".into())),
        1 => Ok(1),
        _ => Ok(factorize(n)?.totient()),
    }
}

pub fn proper_divisors(n: u64) -> Result<Vec<u64>> {
    Ok(factorize(n)?.proper_divisors())
}

pub fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp).ok_or(Error::Overflow("integer power"))
}

/// The set `A_d = { x ∈ Z_n : gcd(x, n) = d }` summarized by its size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DivisorClass {
    pub divisor: u64,
    pub size: u64,
}

/// Equitable partition of the vertex set of `Γ'(Z_n)` by `gcd(x, n)`.
///
/// Empty (and flagged through [`DivisorClassPartition::is_empty`]) when `n`
/// is prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorClassPartition {
    n: u64,
    classes: Vec<DivisorClass>,
}

impl DivisorClassPartition {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn classes(&self) -> &[DivisorClass] {
        &self.classes
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn total_size(&self) -> u64 {
        self.classes.iter().map(|c| c.size).sum()
    }

    /// Index of the class containing the residue `x`, if `x` is a vertex.
    pub fn class_index_of(&self, x: u64) -> Option<usize> {
        let d = gcd(x % self.n, self.n);
        self.classes.binary_search_by_key(&d, |c| c.divisor).ok()
    }

    /// Recount every class size by scanning `1..n` with gcd. `O(n log n)`.
    pub fn verify_by_enumeration(&self) -> bool {
        let mut counts = vec![0u64; self.classes.len()];
        for x in 1..self.n {
            let d = gcd(x, self.n);
            if d == 1 {
                continue;
            }
            match self.classes.binary_search_by_key(&d, |c| c.divisor) {
                Ok(i) => counts[i] += 1,
                Err(_) => return false,
            }
        }
        counts
            .iter()
            .zip(&self.classes)
            .all(|(&c, class)| c == class.size)
    }
}

pub fn divisor_class_partition(n: u64) -> Result<DivisorClassPartition> {
    let f = factorize(n)?;
    let classes = f
        .proper_divisors()
        .into_iter()
        .map(|d| Ok(DivisorClass { divisor: d, size: totient(n / d)? }))
        .collect::<Result<Vec<_>>>()?;
    let partition = DivisorClassPartition { n, classes };
    debug_assert!(n > 4096 || partition.verify_by_enumeration());
    Ok(partition)
}
