//! Exact cohomology of homogeneous vector bundles on Grassmannians and the
//! classification work built on top of it.
//!
//! The crate is organized bottom-up:
//!
//! * [`partition`] — weakly decreasing integer vectors with explicit length,
//!   conjugation, Frobenius (hook) coordinates, determinant twists;
//! * [`schur`] — dimensions of `GL(N)` modules by the Weyl formula,
//!   Littlewood–Richardson coefficients and products by direct tableau
//!   enumeration, and formal sums of Schur modules;
//! * [`charpoly`] — exact symmetric polynomials used as an independent
//!   character-theoretic route to the same decompositions;
//! * [`plethysm`] — decompositions of `∧^t Sym^d Σ` and of exterior powers of
//!   sums of symmetric powers, plus a pruned search for components with large
//!   rows;
//! * [`bott`] — the Borel–Weil–Bott algorithm on the Grassmannian of
//!   projective `r`-planes in `P^n`;
//! * [`koszul`] — cohomology tables for bundles restricted to the zero locus
//!   `F` of a general section of a sum of `Sym^{d_i} Σ*`, via the Koszul
//!   resolution and the Bott degree bookkeeping;
//! * [`classify`] — numerical invariants (δ, δ₋, the canonical twist M), the
//!   Picard-rank trichotomy, the exhaustive enumeration of the δ = 2
//!   candidate list with a termination certificate, and the obstruction scan
//!   that eliminates all but two of the candidates;
//! * [`intersect`] — the intersection-number calculus on a theta divisor used
//!   to pin the class of a curve of planes (exact rational arithmetic);
//! * [`acceptance`] — the frozen end-to-end verification suite shared by the
//!   integration tests and the CLI.
//!
//! All multiplicities and dimensions are exact (arbitrary-precision); nothing
//! in the crate rounds. Hot loops are data-parallel and run on rayon when the
//! default `parallel` feature is enabled; disabling it yields a sequential
//! build with byte-identical results.

pub mod acceptance;
pub mod bott;
pub mod charpoly;
pub mod classify;
pub mod error;
mod exec;
pub mod intersect;
pub mod koszul;
pub mod partition;
pub mod plethysm;
pub mod schur;
mod ser;

pub use error::{Error, Result};
pub use exec::set_parallelism;
pub use partition::{Frobenius, Partition};
pub use schur::ModuleSum;
