//! The proper-divisor quotient graph `Υ'_n` and its vertex-weighted Laplacians.
//!
//! Vertices are the proper divisors `k_1 < … < k_d` of `n`, weighted by the
//! class sizes `w_i = φ(n / k_i)`; `k_i ~ k_j` iff neither divides the other.
//! Rows and columns are always in ascending divisor order.

use std::collections::VecDeque;

use serde::Serialize;

use crate::eigen::{characteristic_polynomial, DenseSymMatrix, IntMatrix, Polynomial};
use crate::number_theory::{divisor_class_partition, factorize};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientGraph {
    n: u64,
    divisors: Vec<u64>,
    weights: Vec<u64>,
    adjacency: Vec<bool>,
}

/// Empty (no vertices) when `n` is prime.
pub fn build_quotient(n: u64) -> Result<QuotientGraph> {
    let partition = divisor_class_partition(n)?;
    let divisors: Vec<u64> = partition.classes().iter().map(|c| c.divisor).collect();
    let weights: Vec<u64> = partition.classes().iter().map(|c| c.size).collect();
    let d = divisors.len();
    let mut adjacency = vec![false; d * d];
    for i in 0..d {
        for j in 0..d {
            adjacency[i * d + j] =
                i != j && divisors[i] % divisors[j] != 0 && divisors[j] % divisors[i] != 0;
        }
    }
    Ok(QuotientGraph { n, divisors, weights, adjacency })
}

/// Closed-form connectivity of `Υ'_n`: `None` when empty (`n` prime),
/// otherwise connected iff `n` is not `p^t` with `t ≥ 3`.
pub fn quotient_connectivity_predicate(n: u64) -> Result<Option<bool>> {
    let f = factorize(n)?;
    Ok(match f.prime_power() {
        Some((_, 1)) => None,
        Some((_, t)) => Some(t == 2),
        None => Some(true),
    })
}

impl QuotientGraph {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i * self.len() + j]
    }

    pub fn index_of(&self, divisor: u64) -> Option<usize> {
        self.divisors.binary_search(&divisor).ok()
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&j| self.is_adjacent(i, j))
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let d = self.len();
        (0..d)
            .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
            .filter(|&(i, j)| self.is_adjacent(i, j))
            .collect()
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let d = self.len();
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut component = Vec::new();
            while let Some(u) = queue.pop_front() {
                component.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            out.push(component);
        }
        out
    }

    /// BFS connectivity; `None` for the empty quotient.
    pub fn is_connected(&self) -> Option<bool> {
        if self.is_empty() {
            None
        } else {
            Some(self.components().len() == 1)
        }
    }

    /// `D_{k_j} = Σ_{k_i ~ k_j} φ(n / k_i)`; zero for isolated vertices.
    pub fn weighted_degrees(&self) -> Vec<u64> {
        (0..self.len())
            .map(|j| self.neighbors(j).map(|i| self.weights[i]).sum())
            .collect()
    }
}

pub fn is_connected_quotient(q: &QuotientGraph) -> Option<bool> {
    q.is_connected()
}

pub fn weighted_degrees(q: &QuotientGraph) -> Vec<u64> {
    q.weighted_degrees()
}

/// `L(Υ'_n)` with exact integer entries (zero row sums, not symmetric) and
/// the similar symmetric form `𝕃` with off-diagonal `−√(w_i w_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedLaplacian {
    divisors: Vec<u64>,
    weights: Vec<u64>,
    entries: IntMatrix,
    symmetric: DenseSymMatrix,
}

pub fn build_weighted_laplacian(q: &QuotientGraph) -> Result<WeightedLaplacian> {
    if q.is_empty() {
        return Err(Error::EmptyGraph { n: q.n() });
    }
    let d = q.len();
    let degrees = q.weighted_degrees();
    let mut entries = vec![0i64; d * d];
    let mut symmetric = vec![0.0; d * d];
    for i in 0..d {
        entries[i * d + i] = to_i64(degrees[i])?;
        symmetric[i * d + i] = degrees[i] as f64;
        for j in q.neighbors(i) {
            entries[i * d + j] = -to_i64(q.weights[j])?;
            symmetric[i * d + j] = -((q.weights[i] as f64) * (q.weights[j] as f64)).sqrt();
        }
    }
    Ok(WeightedLaplacian {
        divisors: q.divisors.clone(),
        weights: q.weights.clone(),
        entries: IntMatrix::new(d, entries)?,
        symmetric: DenseSymMatrix::new_unchecked(d, symmetric),
    })
}

fn to_i64(x: u64) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow("quotient Laplacian entry"))
}

impl WeightedLaplacian {
    pub fn dim(&self) -> usize {
        self.divisors.len()
    }

    pub fn divisors(&self) -> &[u64] {
        &self.divisors
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// The integer, zero-row-sum form `L`.
    pub fn entries(&self) -> &IntMatrix {
        &self.entries
    }

    /// The symmetric form `𝕃 = W^{1/2} L W^{-1/2}`.
    pub fn symmetric(&self) -> &DenseSymMatrix {
        &self.symmetric
    }

    pub fn characteristic_polynomial(&self) -> Result<Polynomial> {
        characteristic_polynomial(&self.entries)
    }

    /// Reorder rows and columns to follow `order`, a permutation of the divisors.
    pub fn reordered(&self, order: &[u64]) -> Result<WeightedLaplacian> {
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        if sorted != self.divisors {
            return Err(Error::Domain(format!(
                "{order:?} is not a permutation of the proper divisors {:?}",
                self.divisors
            )));
        }
        let perm: Vec<usize> = order
            .iter()
            .map(|d| self.divisors.binary_search(d).expect("checked above"))
            .collect();
        Ok(WeightedLaplacian {
            divisors: order.to_vec(),
            weights: perm.iter().map(|&i| self.weights[i]).collect(),
            entries: self.entries.permuted(&perm),
            symmetric: self.symmetric.permuted(&perm),
        })
    }

    /// `√w_i · L_ij / √w_j` rebuilt from the integer form; the symmetric form
    /// should match it to rounding.
    pub fn similarity_gap(&self) -> f64 {
        let d = self.dim();
        let mut worst: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                let scaled = (self.weights[i] as f64).sqrt() * self.entries.get(i, j) as f64
                    / (self.weights[j] as f64).sqrt();
                worst = worst.max((scaled - self.symmetric.get(i, j)).abs());
            }
        }
        worst
    }
}
