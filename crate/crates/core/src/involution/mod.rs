//! Types, canonical forms, isomorphy and representatives of involutions.

mod automorphism;
mod canonical;
mod counts;
mod isomorphy;
mod representative;

use std::fmt;

use serde::Serialize;

use crate::field::{Scalar, SquareClass};
use crate::linalg::Mat;

pub use automorphism::{commutant_generator_family, invariance_check, is_scalar_automorphism};
pub use canonical::{
    canonicalize_type1, canonicalize_type2, canonicalize_type3, canonicalize_type4, classify,
    type1_canonical_matrix, verify_transition, Hyperbolic,
};
pub use counts::{count_formulas, ClassCount, ClassCountTable, ClassSummary, CountSource};
pub use isomorphy::{decide_isomorphic, hermitian_invariants, IsoDecision};
pub use representative::{representative, RepParams};

/// The four cells of the type table: entries in `k` or in `sqrt(alpha) k`,
/// crossed with `A^2 = I` or `A^2 = -I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum InvType {
    T1,
    T2,
    T3,
    T4,
}

impl InvType {
    pub fn number(self) -> u8 {
        match self {
            InvType::T1 => 1,
            InvType::T2 => 2,
            InvType::T3 => 3,
            InvType::T4 => 4,
        }
    }

    pub fn from_number(k: u8) -> Option<InvType> {
        match k {
            1 => Some(InvType::T1),
            2 => Some(InvType::T2),
            3 => Some(InvType::T3),
            4 => Some(InvType::T4),
            _ => None,
        }
    }

    pub fn gamma(self) -> i8 {
        match self {
            InvType::T1 | InvType::T2 => 1,
            InvType::T3 | InvType::T4 => -1,
        }
    }

    pub fn over_extension(self) -> bool {
        matches!(self, InvType::T2 | InvType::T4)
    }
}

impl fmt::Display for InvType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// For `A^2 = -I`: whether the eigenvalue `i` of `A` already lives in the
/// field generated by the entries (`i` in `k` for Type 3, `sqrt(-alpha)` in
/// `k` for Type 4).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RootCase {
    RootInK,
    RootNotInK,
}

/// The complete invariant of an involution together with the transition
/// matrix of its canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionReport {
    pub inv_type: InvType,
    pub n: usize,
    pub gamma: i8,
    pub alpha_class: SquareClass,
    /// `(s, t)` with `s = dim E(A, 1)` and `t = dim E(A, -1)`; Type 1 only.
    pub dim_pair: Option<(usize, usize)>,
    /// `X` or `U` from the matching canonicalization.
    pub transition: Mat,
    pub case: Option<RootCase>,
    /// Diagonal of `U_1` when the hyperbolic construction was used.
    pub gram_diag: Option<Vec<Scalar>>,
}

impl InvolutionReport {
    /// `{s, t}` as a sorted pair.
    pub fn unordered_dims(&self) -> Option<(usize, usize)> {
        self.dim_pair.map(|(s, t)| (s.min(t), s.max(t)))
    }
}
