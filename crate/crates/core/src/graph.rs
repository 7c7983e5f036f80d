//! The explicit vertex-level cozero-divisor graph `Γ'(Z_n)`.
//!
//! Two adjacency routes are provided. [`is_adjacent_by_divisor`] uses the
//! gcd-class criterion and is what the builder uses. The definitional route
//! decides ideal membership `x ∈ (y)`, either by the divisibility shortcut
//! `gcd(y, n) | x` ([`is_adjacent_by_definition`]) or by enumerating the
//! ideal `{ r·y mod n }` outright ([`PrincipalIdeals`], verification mode).

use std::collections::VecDeque;

use crate::eigen::DenseSymMatrix;
use crate::number_theory::{divisor_class_partition, factorize, gcd, DivisorClassPartition};
use crate::{Error, Result};

/// Default upper bound on the vertex count of an explicitly built graph.
pub const DEFAULT_VERTEX_CAP: u64 = 20_000;

fn check_vertex(x: u64, n: u64) -> Result<u64> {
    let g = gcd(x % n, n);
    if x % n == 0 || g == 1 {
        Err(Error::Domain(format!("{x} is zero or a unit in Z_{n}")))
    } else {
        Ok(g)
    }
}

fn check_pair(x: u64, y: u64, n: u64) -> Result<(u64, u64)> {
    if n < 2 {
        return Err(Error::Domain(format!("modulus must be >= 2, got {n}")));
    }
    if x % n == y % n {
        return Err(Error::Domain(format!("{x} and {y} are the same element of Z_{n}")));
    }
    Ok((check_vertex(x, n)?, check_vertex(y, n)?))
}

/// `x ~ y` iff `x ∉ (y)` and `y ∉ (x)`, with `x ∈ (y) ⇔ gcd(y, n) | x`.
pub fn is_adjacent_by_definition(x: u64, y: u64, n: u64) -> Result<bool> {
    let (gx, gy) = check_pair(x, y, n)?;
    let x_in_y = (x % n) % gy == 0;
    let y_in_x = (y % n) % gx == 0;
    Ok(!x_in_y && !y_in_x)
}

/// `x ~ y` iff neither of `gcd(x, n)`, `gcd(y, n)` divides the other.
pub fn is_adjacent_by_divisor(x: u64, y: u64, n: u64) -> Result<bool> {
    let (k1, k2) = check_pair(x, y, n)?;
    Ok(k2 % k1 != 0 && k1 % k2 != 0)
}

/// Exhaustively enumerated principal ideals `(y) = { r·y mod n : r ∈ Z_n }`
/// for every residue, as bitsets. Independent of any gcd reasoning.
pub struct PrincipalIdeals {
    n: u64,
    words: usize,
    bits: Vec<u64>,
}

impl PrincipalIdeals {
    pub fn new(n: u64, elements: &[u64]) -> Self {
        let words = (n as usize).div_ceil(64);
        let mut bits = vec![0u64; words * elements.len()];
        for (row, &y) in elements.iter().enumerate() {
            let set = &mut bits[row * words..(row + 1) * words];
            let mut ry = 0u64;
            for _ in 0..n {
                set[(ry / 64) as usize] |= 1 << (ry % 64);
                ry = (ry + y) % n;
            }
        }
        Self { n, words, bits }
    }

    /// Whether `x` lies in the ideal generated by the `row`-th element.
    pub fn contains(&self, row: usize, x: u64) -> bool {
        let x = x % self.n;
        self.bits[row * self.words + (x / 64) as usize] >> (x % 64) & 1 == 1
    }
}

/// Adjacency by enumerating both ideals. `O(n)` per call.
pub fn is_adjacent_exhaustive(x: u64, y: u64, n: u64) -> Result<bool> {
    check_pair(x, y, n)?;
    let ideals = PrincipalIdeals::new(n, &[x % n, y % n]);
    Ok(!ideals.contains(1, x) && !ideals.contains(0, y))
}

/// Upper triangle of a symmetric boolean matrix, bit-packed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymBitMatrix {
    dim: usize,
    bits: Vec<u64>,
}

impl SymBitMatrix {
    pub fn new(dim: usize) -> Self {
        let len = dim * dim.saturating_sub(1) / 2;
        Self { dim, bits: vec![0; len.div_ceil(64)] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn index(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        i * (2 * self.dim - i - 1) / 2 + (j - i - 1)
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        if i == j {
            return false;
        }
        let k = self.index(i, j);
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert_ne!(i, j, "self-loops are not representable");
        let k = self.index(i, j);
        if value {
            self.bits[k / 64] |= 1 << (k % 64);
        } else {
            self.bits[k / 64] &= !(1 << (k % 64));
        }
    }

    pub fn count_ones(&self) -> u64 {
        self.bits.iter().map(|w| w.count_ones() as u64).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    pub vertex_cap: u64,
    /// Cross-check every vertex pair against exhaustively enumerated ideals.
    pub verify: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        Self { vertex_cap: DEFAULT_VERTEX_CAP, verify: false }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Connectivity {
    /// No vertices at all (`n` prime).
    Empty,
    Connected,
    Disconnected { components: usize },
}

impl Connectivity {
    pub fn is_connected(self) -> bool {
        self == Connectivity::Connected
    }
}

/// Closed-form connectivity of `Γ'(Z_n)`: empty for primes, disconnected
/// (edgeless) for `p^t` with `t ≥ 2`, except `n = 4`, which is a single vertex.
pub fn full_graph_connectivity_predicate(n: u64) -> Result<Connectivity> {
    let f = factorize(n)?;
    Ok(match f.prime_power() {
        Some((_, 1)) => Connectivity::Empty,
        Some((2, 2)) => Connectivity::Connected,
        Some(_) => Connectivity::Disconnected { components: f.vertex_count() as usize },
        None => Connectivity::Connected,
    })
}

/// `n = 4` is the one prime power whose graph is connected.
pub fn is_boundary_case(n: u64) -> bool {
    n == 4
}

#[derive(Debug, Clone)]
pub struct FullGraph {
    n: u64,
    vertices: Vec<u64>,
    class_of: Vec<usize>,
    partition: DivisorClassPartition,
    adjacency: SymBitMatrix,
}

pub fn build_full_graph(n: u64, options: BuildOptions) -> Result<FullGraph> {
    let f = factorize(n)?;
    if f.is_prime() {
        return Err(Error::EmptyGraph { n });
    }
    let count = f.vertex_count();
    if count > options.vertex_cap {
        return Err(Error::VertexCap { vertices: count, cap: options.vertex_cap });
    }
    let partition = divisor_class_partition(n)?;
    let vertices: Vec<u64> = (1..n).filter(|&x| gcd(x, n) > 1).collect();
    debug_assert_eq!(vertices.len() as u64, count);
    let class_of: Vec<usize> = vertices
        .iter()
        .map(|&x| partition.class_index_of(x).expect("non-unit has a class"))
        .collect();

    let m = vertices.len();
    let mut adjacency = SymBitMatrix::new(m);
    for i in 0..m {
        for j in i + 1..m {
            if is_adjacent_by_divisor(vertices[i], vertices[j], n)? {
                adjacency.set(i, j, true);
            }
        }
    }

    if options.verify {
        let ideals = PrincipalIdeals::new(n, &vertices);
        for i in 0..m {
            for j in i + 1..m {
                let by_definition =
                    !ideals.contains(j, vertices[i]) && !ideals.contains(i, vertices[j]);
                if by_definition != adjacency.get(i, j) {
                    return Err(Error::Inconsistent(format!(
                        "adjacency of {} and {} in Z_{n} differs between routes",
                        vertices[i], vertices[j]
                    )));
                }
            }
        }
    }

    Ok(FullGraph { n, vertices, class_of, partition, adjacency })
}

impl FullGraph {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn partition(&self) -> &DivisorClassPartition {
        &self.partition
    }

    /// Index into [`FullGraph::partition`] of the class of vertex `i`.
    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn adjacency(&self) -> &SymBitMatrix {
        &self.adjacency
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency.get(i, j)
    }

    pub fn edge_count(&self) -> u64 {
        self.adjacency.count_ones()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let m = self.vertex_count();
        (0..m).flat_map(move |i| (i + 1..m).filter(move |&j| self.is_adjacent(i, j)).map(move |j| (i, j)))
    }

    pub fn degrees(&self) -> Vec<u64> {
        let m = self.vertex_count();
        (0..m)
            .map(|i| (0..m).filter(|&j| self.is_adjacent(i, j)).count() as u64)
            .collect()
    }

    /// Connected components as lists of vertex indices, via BFS.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let m = self.vertex_count();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 0..m {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut component = Vec::new();
            while let Some(u) = queue.pop_front() {
                component.push(u);
                for v in 0..m {
                    if !seen[v] && self.is_adjacent(u, v) {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            out.push(component);
        }
        out
    }

    pub fn connectivity(&self) -> Connectivity {
        match self.components().len() {
            0 => Connectivity::Empty,
            1 => Connectivity::Connected,
            components => Connectivity::Disconnected { components },
        }
    }

    pub fn is_connected(&self) -> bool {
        self.connectivity().is_connected()
    }

    /// Dense Laplacian `D − A`.
    pub fn laplacian(&self) -> DenseSymMatrix {
        let m = self.vertex_count();
        let degrees = self.degrees();
        let mut data = vec![0.0; m * m];
        for i in 0..m {
            data[i * m + i] = degrees[i] as f64;
            for j in 0..m {
                if self.is_adjacent(i, j) {
                    data[i * m + j] = -1.0;
                }
            }
        }
        DenseSymMatrix::new_unchecked(m, data)
    }
}

/// An empty graph counts as not connected; a single vertex is connected.
pub fn is_connected_full(graph: &FullGraph) -> bool {
    graph.is_connected()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(n: u64) -> FullGraph {
        build_full_graph(n, BuildOptions { verify: true, ..Default::default() }).unwrap()
    }

    #[test]
    fn adjacency_examples() {
        assert!(is_adjacent_by_definition(2, 3, 30).unwrap());
        assert!(!is_adjacent_by_definition(2, 6, 30).unwrap());
        assert!(!is_adjacent_by_definition(2, 4, 30).unwrap());
        assert!(is_adjacent_exhaustive(2, 3, 30).unwrap());
        assert!(!is_adjacent_exhaustive(2, 6, 30).unwrap());

        assert!(is_adjacent_by_divisor(3, 10, 30).unwrap());
        assert!(!is_adjacent_by_divisor(5, 10, 30).unwrap());
        assert!(is_adjacent_by_divisor(9, 10, 30).unwrap());
    }

    #[test]
    fn same_class_is_never_adjacent() {
        // gcd(4, 30) = gcd(8, 30) = 2
        assert!(!is_adjacent_by_definition(4, 8, 30).unwrap());
        assert!(!is_adjacent_by_divisor(4, 8, 30).unwrap());
        assert!(!is_adjacent_exhaustive(4, 8, 30).unwrap());
    }

    #[test]
    fn adjacency_rejects_units_and_zero() {
        assert!(matches!(is_adjacent_by_divisor(1, 2, 30), Err(Error::Domain(_))));
        assert!(matches!(is_adjacent_by_definition(0, 2, 30), Err(Error::Domain(_))));
        assert!(matches!(is_adjacent_by_divisor(7, 2, 30), Err(Error::Domain(_))));
        assert!(matches!(is_adjacent_by_divisor(2, 32, 30), Err(Error::Domain(_))));
    }

    #[test]
    fn sym_bit_matrix_indexing() {
        let mut m = SymBitMatrix::new(70);
        m.set(3, 65, true);
        m.set(69, 68, true);
        assert!(m.get(65, 3));
        assert!(m.get(68, 69));
        assert!(!m.get(3, 3));
        assert!(!m.get(3, 64));
        assert_eq!(m.count_ones(), 2);
        m.set(65, 3, false);
        assert_eq!(m.count_ones(), 1);
    }

    #[test]
    fn build_examples() {
        assert_eq!(build(30).vertex_count(), 21);

        let g4 = build(4);
        assert_eq!(g4.vertex_count(), 1);
        assert_eq!(g4.edge_count(), 0);

        // classes 3 (size 4) and 5 (size 2) are fully joined: K_{2,4}
        let g15 = build(15);
        assert_eq!(g15.vertices(), &[3, 5, 6, 9, 10, 12]);
        let brute = (0..6)
            .flat_map(|i| (i + 1..6).map(move |j| (i, j)))
            .filter(|&(i, j)| {
                is_adjacent_exhaustive(g15.vertices()[i], g15.vertices()[j], 15).unwrap()
            })
            .count();
        assert_eq!(brute, 8);
        assert_eq!(g15.edge_count(), 8);
    }

    #[test]
    fn prime_and_cap_errors() {
        assert_eq!(build_full_graph(7, BuildOptions::default()).unwrap_err(), Error::EmptyGraph { n: 7 });
        let err = build_full_graph(30, BuildOptions { vertex_cap: 20, verify: false }).unwrap_err();
        assert_eq!(err, Error::VertexCap { vertices: 21, cap: 20 });
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_connected_full(&build(30)));
        let g9 = build(9);
        assert_eq!(g9.connectivity(), Connectivity::Disconnected { components: 2 });
        assert_eq!(g9.edge_count(), 0);
        assert!(is_connected_full(&build(4)));
        assert!(is_boundary_case(4));
        assert_eq!(full_graph_connectivity_predicate(7).unwrap(), Connectivity::Empty);
    }

    #[test]
    fn connectivity_matches_predicate() {
        for n in 4..=300u64 {
            if factorize(n).unwrap().is_prime() {
                continue;
            }
            let g = build_full_graph(n, BuildOptions::default()).unwrap();
            assert_eq!(g.connectivity(), full_graph_connectivity_predicate(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn divisor_route_matches_exhaustive_definition() {
        // `build` runs in verification mode, which errors on any disagreement.
        for n in 4..=300u64 {
            if !factorize(n).unwrap().is_prime() {
                build(n);
            }
        }
    }

    #[test]
    fn laplacian_rows_sum_to_zero() {
        let l = build(12).laplacian();
        for i in 0..l.dim() {
            let sum: f64 = (0..l.dim()).map(|j| l.get(i, j)).sum();
            assert_eq!(sum, 0.0);
        }
    }
}
