use std::fmt;

use serde::Serialize;

use crate::field::{FieldCtx, SquareClass};
use crate::linalg::Mat;

use super::InvType;

/// Number of isomorphy classes of one type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClassCount {
    Exact(u64),
    /// An upper bound; the bound itself is the conjectured exact value.
    AtMost(u64),
    /// `|k*/(k*)^2| - 1` with infinitely many square classes.
    Unbounded,
}

impl fmt::Display for ClassCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassCount::Exact(c) => write!(f, "{c}"),
            ClassCount::AtMost(c) => write!(f, "<={c}"),
            ClassCount::Unbounded => write!(f, "<=|k*/(k*)^2|-1 (infinite)"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CountSource {
    Formulas,
    Enumeration,
}

/// One isomorphy class found by enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSummary {
    pub inv_type: InvType,
    pub size: usize,
    pub witness: Mat,
    pub dim_pair: Option<(usize, usize)>,
    pub alpha_class: SquareClass,
}

/// `C_1 .. C_4` for one `(n, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCountTable {
    pub n: usize,
    pub source: CountSource,
    pub counts: [ClassCount; 4],
    /// Per-class details; empty for formula tables.
    pub classes: Vec<ClassSummary>,
}

impl ClassCountTable {
    pub fn get(&self, ty: InvType) -> ClassCount {
        self.counts[ty.number() as usize - 1]
    }
}

/// Class counts predicted for `Sp(2n, k)`: `C_1 = floor(n/2)`, `C_2 = 0` for
/// odd `n` and at most `|k*/(k*)^2| - 1` otherwise, `C_3 = 1`, and
/// `C_4 <= |k*/(k*)^2| - 1`.
pub fn count_formulas(n: usize, ctx: &FieldCtx) -> ClassCountTable {
    let bound = match ctx.square_class_count() {
        Some(m) => ClassCount::AtMost(m - 1),
        None => ClassCount::Unbounded,
    };
    let c2 = if n % 2 == 1 {
        ClassCount::Exact(0)
    } else {
        bound
    };
    ClassCountTable {
        n,
        source: CountSource::Formulas,
        counts: [
            ClassCount::Exact((n / 2) as u64),
            c2,
            ClassCount::Exact(1),
            bound,
        ],
        classes: Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_examples() {
        let f3 = FieldCtx::prime_field(3).unwrap();
        let t = count_formulas(1, &f3);
        assert_eq!(
            t.counts,
            [
                ClassCount::Exact(0),
                ClassCount::Exact(0),
                ClassCount::Exact(1),
                ClassCount::AtMost(1)
            ]
        );
        let t = count_formulas(2, &f3);
        assert_eq!(
            t.counts,
            [
                ClassCount::Exact(1),
                ClassCount::AtMost(1),
                ClassCount::Exact(1),
                ClassCount::AtMost(1)
            ]
        );
        assert_eq!(count_formulas(2, &FieldCtx::real_model()).counts, t.counts);
        assert_eq!(
            count_formulas(3, &FieldCtx::rationals()).get(InvType::T4),
            ClassCount::Unbounded
        );
    }
}
