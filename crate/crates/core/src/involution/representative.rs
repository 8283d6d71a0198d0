use crate::error::{Error, Result};
use crate::field::{FVal, FieldCtx, RootImage, Scalar};
use crate::linalg::Mat;

use super::canonical::{classify, offdiag_model, type1_canonical_matrix};
use super::InvType;

/// Parameters for [`representative`]: `s` for Type 1, `alpha` for Types 2 and 4.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RepParams {
    pub s: Option<usize>,
    pub alpha: Option<Scalar>,
}

fn need_alpha(p: &RepParams, ty: InvType) -> Result<Scalar> {
    p.alpha
        .clone()
        .ok_or_else(|| Error::Unsatisfiable(format!("Type {ty} needs alpha")))
}

/// Adjoin `sqrt(alpha)`; a square `alpha` gives no Type 2 or 4 involutions.
fn adjoin_nonsquare(ctx: &FieldCtx, alpha: &Scalar) -> Result<crate::field::Adjoined> {
    if alpha.is_zero() {
        return Err(Error::Unsatisfiable("alpha must be nonzero".into()));
    }
    let adj = ctx.adjoin(alpha)?;
    if let RootImage::Folded(_) = adj.image {
        return Err(Error::SquareDiscriminant(alpha.to_string()));
    }
    Ok(adj)
}

/// `sqrt(alpha) * M` for a base matrix `M`, in the canonical extension.
fn root_times(adj: &crate::field::Adjoined, m: &Mat) -> Mat {
    let base = adj.ctx.base();
    Mat::from_fn(&adj.ctx, m.rows(), m.cols(), |i, j| {
        adj.value(base.zero(), m.get(i, j).a.clone())
    })
}

fn type2(ctx: &FieldCtx, n: usize, alpha: &Scalar) -> Result<Mat> {
    if n % 2 == 1 {
        return Err(Error::Type2OddN(n));
    }
    let adj = adjoin_nonsquare(ctx, alpha)?;
    let inv = alpha.inv().unwrap();
    // 2x2 block M with (sqrt(alpha) M)^2 = I.
    let block = match ctx.sum_of_two_squares(&inv) {
        Some((a, b)) => Mat::from_base(ctx, 2, 2, vec![a.clone(), b.clone(), b, -&a]),
        None => Mat::from_base(ctx, 2, 2, vec![ctx.zero(), ctx.one(), inv, ctx.zero()]),
    };
    let a1 = Mat::block_diag(&vec![block; n / 2]);
    // (A_1^{-1})^T = A_1^T because A_1 squares to I.
    let m = Mat::block_diag(&[a1.clone(), a1.transpose()]);
    Ok(root_times(&adj, &m))
}

fn type4(ctx: &FieldCtx, n: usize, alpha: &Scalar) -> Result<Mat> {
    let adj = adjoin_nonsquare(ctx, alpha)?;
    let inv = alpha.inv().unwrap();
    if let Some(r) = ctx.sqrt_in_base(&-&inv) {
        // i = r sqrt(alpha)
        let d: Vec<FVal> = (0..2 * n)
            .map(|k| ctx.lift(if k < n { r.clone() } else { -&r }))
            .collect();
        return Ok(root_times(&adj, &Mat::diag(ctx, &d)));
    }
    let (c, d) = ctx
        .sum_of_two_squares(alpha)
        .unwrap_or_else(|| (ctx.one(), ctx.zero()));
    let i = Mat::identity(ctx, n);
    let ci = i.scale(&ctx.lift(c));
    let di = i.scale(&ctx.lift(d));
    let u = Mat::block2(&ci, &di, &di.neg(), &ci);
    let k = offdiag_model(ctx, n, &-alpha);
    let m = u.mul(&k).mul(&u.inverse()?).scale(&ctx.lift(inv));
    Ok(root_times(&adj, &m))
}

/// A matrix inducing an involution with the requested invariants.
///
/// Type 1: the interleaved `+-1` diagonal with `s = dim E(A, 1)`. Type 2:
/// `blockdiag(A_1, (A_1^{-1})^T)` with `A_1` made of `2x2` blocks
/// `sqrt(alpha) [[a, b], [b, -a]]`, `a^2 + b^2 = 1/alpha` (or
/// `sqrt(alpha) [[0, 1], [1/alpha, 0]]` when `1/alpha` is not a sum of two
/// squares). Type 3: `J`. Type 4: `diag(iI, -iI)` when `sqrt(-alpha)` is in
/// `k`, else `(sqrt(alpha)/alpha) U [[0, I], [-alpha I, 0]] U^{-1}` with
/// `U = [[cI, dI], [-dI, cI]]`, `c^2 + d^2 = alpha` when solvable.
pub fn representative(ctx: &FieldCtx, ty: InvType, n: usize, params: &RepParams) -> Result<Mat> {
    if n == 0 {
        return Err(Error::Unsatisfiable("n must be at least 1".into()));
    }
    let ctx = ctx.base();
    let a = match ty {
        InvType::T1 => {
            let s = params
                .s
                .ok_or_else(|| Error::Unsatisfiable("Type 1 needs s".into()))?;
            if s % 2 == 1 || s < 2 || s + 2 > 2 * n {
                return Err(Error::Unsatisfiable(format!(
                    "Type 1 needs even s with 2 <= s <= 2n - 2 (s = {s}, n = {n})"
                )));
            }
            type1_canonical_matrix(&ctx, n, s)
        }
        InvType::T2 => type2(&ctx, n, &need_alpha(params, ty)?)?,
        InvType::T3 => Mat::standard_j(&ctx, n),
        InvType::T4 => type4(&ctx, n, &need_alpha(params, ty)?)?,
    };
    let report = classify(&a)?;
    let ok = report.inv_type == ty
        && match ty {
            InvType::T1 => report.dim_pair.map(|p| p.0) == params.s,
            InvType::T2 | InvType::T4 => {
                let want = ctx.square_class(params.alpha.as_ref().unwrap())?;
                report.alpha_class == want
            }
            InvType::T3 => true,
        };
    if !ok {
        return Err(Error::SelfCheck(format!(
            "representative for Type {ty} classified with different invariants"
        )));
    }
    Ok(a)
}
