//! Exact-arithmetic toolkit for Riordan arrays and their canonical embeddings.
//!
//! A Riordan array is the lower-triangular integer matrix defined by a pair
//! of power series `(g, f)` with `g(0) = 1`, `f(0) = 0`, `f'(0) = 1`: its
//! `(n, k)` entry is the coefficient of `x^n` in `g * f^k`. Every such array
//! contains two smaller Riordan arrays interleaved in its even and odd
//! columns, and the same interleaving shows up in moment matrices of
//! orthogonal-polynomial families whose continued-fraction coefficients are
//! eventually periodic.
//!
//! The crate is organised around that circle of ideas:
//!
//! - [`fps`]: truncated formal power series over exact rationals, the
//!   substrate for everything else (multiplication, division, composition,
//!   reversion, square roots).
//! - [`gfparse`]: a small expression language (`"(1-sqrt(1-4*x))/(2*x)"`)
//!   for writing generating functions as text.
//! - [`riordan`]: the [`RiordanArray`](riordan::RiordanArray) type, its
//!   group law and inverse, and materialised [`Triangle`](triangle::Triangle)s.
//! - [`embedding`]: extracting the two embedded arrays, interleaving them
//!   back, embedding an array into a larger one, and cascading.
//! - [`prodmat`]: production matrices, row generation, the Riordan-ness
//!   criterion, and the bidiagonal-inverse construction.
//! - [`cfrac`]: Stieltjes and Jacobi continued fractions with eventually
//!   periodic coefficients, and the even/odd contraction between them.
//! - [`orthopoly`]: three-term recurrences, coefficient arrays, moment
//!   matrices, and interleaved polynomial families.
//! - [`oeis`]: an optional, cache-backed OEIS lookup client.
//! - [`verify`]: the catalogue of reference checks behind `verify-paper`.
//!
//! All arithmetic is exact: coefficients are `BigRational`, matrix entries
//! are `BigInt`, and no floating point appears anywhere.

pub mod cfrac;
pub mod embedding;
pub mod epseq;
pub mod error;
pub mod fps;
pub mod gfparse;
pub mod oeis;
pub mod orthopoly;
pub mod prodmat;
pub mod rational;
pub mod riordan;
pub mod triangle;
pub mod verify;

pub(crate) mod matrix;

pub use error::{Error, Result};
pub use fps::{Series, DEFAULT_ORDER};
pub use riordan::RiordanArray;
pub use triangle::Triangle;
