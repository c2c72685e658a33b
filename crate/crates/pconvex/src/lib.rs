//! Symbolic-numeric analyzer for constant-coefficient PDE symbols.
//!
//! The crate computes Hörmander-style ball-sup functionals and their σ / σ⁰
//! flatness estimates, localizations at infinity at simple characteristics,
//! convex-cone geometry, and cone-based P-convexity verdicts, culminating in
//! a reproducible pipeline that builds a hypoelliptic symbol P surjective on
//! D′(X) whose one-variable augmentation P⁺ fails surjectivity on D′(X×ℝ).

pub mod error;
pub mod poly;
mod parse;

pub use error::{Error, Result};
pub use poly::{MultiIndex, Polynomial, Vector};
