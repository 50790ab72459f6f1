//! Exact computational algebra for affine Hecke algebras of type A and the
//! structures built on top of them.
//!
//! The crate is organized around a single scalar ring and a tower of algebras:
//!
//! * [`laurent`] — exact sparse Laurent polynomials over the rationals, the
//!   coefficient ring `C[v, v^-1]` of everything else here;
//! * [`coxeter`] — the finite symmetric group `S_r` and the affine symmetric
//!   group in window notation, with length, reduced words, and bounded
//!   enumeration;
//! * [`hecke`] — the Iwahori-Hecke algebra `H(v, W)` in the Coxeter
//!   presentation, with the quadratic relation `(T_s + 1)(T_s - v^-2) = 0`;
//! * [`bernstein`] — lattice elements `X^lambda` inside the affine Hecke
//!   algebra and the Bernstein-presentation relation checks;
//! * [`specht`] — Dipper-James symmetrizers, Specht modules, Gram forms and
//!   the `D^lambda` quotients over `H(q, S_n)`;
//! * [`schur`] — v-Schur algebras `S(n, r)`, the tensor space `T(n, r)`, the
//!   Schur-Weyl commutant check, and the `E, F, K` presentation check for
//!   `S(2, d)`;
//! * [`fqsl2`] — the quantized function algebra of SL2 as a rewriting system
//!   together with truncated shift-operator representations.
//!
//! All symbolic computations are exact; numerical ranks and residuals go
//! through [`linalg`] with explicit singular-value thresholds.

pub mod bernstein;
pub mod coxeter;
pub mod error;
pub mod fqsl2;
pub mod hecke;
pub mod laurent;
pub mod linalg;
pub mod schur;
pub mod specht;

pub use coxeter::{AffinePermutation, FinitePermutation, GroupKind, Permutation, Word};
pub use error::CoreError;
pub use hecke::HeckeElement;
pub use laurent::LaurentPoly;

/// Crate version reported by the CLI and embedded in reports.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, CoreError>;
