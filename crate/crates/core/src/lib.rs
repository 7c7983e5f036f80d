//! Laplacian spectra of the cozero-divisor graph of `Z_n`.
//!
//! The cozero-divisor graph `Γ'(Z_n)` has the non-zero non-unit residues as
//! vertices, with `x ~ y` iff `x ∉ (y)` and `y ∉ (x)`. Grouping vertices by
//! `gcd(x, n)` gives an equitable partition into edgeless cells, and the graph
//! is the generalized join of those cells over the proper-divisor graph
//! `Υ'_n`. Its Laplacian spectrum therefore splits into
//!
//! * an exact integer part: the weighted degree `D_k` of every proper divisor
//!   `k`, repeated `φ(n/k) − 1` times, and
//! * the `d` eigenvalues of the `d × d` vertex-weighted Laplacian of `Υ'_n`.
//!
//! Module map:
//!
//! | Module | Purpose |
//! |--------|---------|
//! | [`number_theory`] | factorization, totient, divisor classes |
//! | [`graph`] | explicit vertex-level graph, two adjacency routes |
//! | [`quotient`] | `Υ'_n`, weighted degrees, both quotient Laplacians |
//! | [`eigen`] | Jacobi / tridiagonal QL solvers, exact characteristic polynomials |
//! | [`spectrum`] | assembly, closed-form families, oracle verification |
//! | [`export`] | JSON, CSV and DOT renderings |

pub mod eigen;
pub mod error;
pub mod export;
pub mod graph;
pub mod number_theory;
pub mod quotient;
pub mod spectrum;

pub use error::{Error, Result};
