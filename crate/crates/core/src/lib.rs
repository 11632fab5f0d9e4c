//! Exact computations in the algebra of constants of the Weitzenböck
//! derivation `Δ = Σ x_i ∂/∂y_i` on `K[x_1..x_n, y_1..y_n]`, `K = ℚ`.
//!
//! The kernel of `Δ` is generated by the `x_i` and the determinants
//! `u_ij = x_i y_j - x_j y_i`. This crate provides:
//!
//! * [`exact_poly`]: sparse polynomials over `ℚ` in the `x`/`y` variables,
//!   the derivation itself and the substitution used to detect divisibility.
//! * [`constants_kernel`]: membership tests and a constructive rewrite of any
//!   constant as a polynomial in the generators.
//! * [`xu_presentation`]: the presentation ring `K[X,U]`, its DILL monomial
//!   order, the Plücker-type relations and normal forms modulo them.
//! * [`basis_combinatorics`]: the non-crossing monomial basis, graded
//!   dimensions and an independent linear-algebra check of those dimensions.
//! * [`cli`]: the expression parser and the command-line driver.

pub mod basis_combinatorics;
pub mod cli;
pub mod constants_kernel;
mod error;
pub mod exact_poly;
pub mod xu_presentation;

pub use error::{Error, Result};
pub use exact_poly::{ExactRational, XYMonomial, XYPolynomial};
pub use xu_presentation::{UMonomial, UPolynomial, UVariable};
