//! Roots of quintic and trinomial equations from explicit series.
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`]: complex polynomials, Horner evaluation, synthetic division and
//!   the quadratic/quartic closed forms.
//! * [`oracle`]: an independent Durand-Kerner root finder used to check every
//!   result and as a fallback.
//! * [`series`]: the double series for `B x^5 + A x^2 + x + 1 = 0`, the
//!   trinomial series and the `4F3` root of `x^5 - x - t = 0`.
//! * [`tschirnhaus`]: power sums, the quadratic Tschirnhaus reduction of
//!   `x^5 + a3 x^3 + a1 x + a0` to principal form and the four-step solver.
//! * [`eos`]: the sextic Landau free energy and the inversion of its
//!   equation of state `f = a u + b u^3 + c u^5`.
//! * [`cli`]: the `quintic` command line, with JSON and CSV output.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod eos;
pub mod oracle;
pub mod poly;
pub mod series;
pub mod tschirnhaus;

pub use num_complex::Complex64;
pub use poly::{ComplexScalar, DepressedQuintic, Method, Poly, PrincipalQuintic, Quintic, RootSet};
