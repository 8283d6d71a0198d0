//! Exact classification of involutions of `Sp(2n, k)`.
//!
//! Involutions here are inner automorphisms `Inn_A : X -> A^{-1} X A` of
//! order two. Every automorphism of `Sp(2n, k)` is inner, so the whole story
//! is carried by the matrix `A`: it satisfies `A^2 = +-I`, and its entries
//! either all lie in `k` or are all `k`-multiples of one `sqrt(alpha)`.
//! That gives four types; [`involution::classify`] computes the type and a
//! full set of invariants, and [`involution::decide_isomorphic`] produces an
//! explicit conjugator in `Sp(2n, k)` whenever two involutions are
//! isomorphic.
//!
//! Supported base fields are the rationals, prime fields of odd
//! characteristic and a "real model" (rational arithmetic whose square
//! classes are decided by sign). All arithmetic is exact.

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod involution;
pub mod linalg;
pub mod symplectic;

pub use error::{Error, Result};
pub use field::{FVal, FieldCtx, FieldKind, Scalar, SquareClass};
pub use linalg::Mat;
pub use symplectic::SympSpace;
