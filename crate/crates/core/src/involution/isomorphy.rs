use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::{FVal, FieldCtx, Scalar};
use crate::linalg::Mat;
use crate::symplectic::SympSpace;

use super::canonical::{canonicalize_type1, classify};
use super::{InvType, InvolutionReport, RootCase};

/// Verdict of [`decide_isomorphic`].
///
/// When `conjugator` is present, `Q` is in `Sp(2n, k)` and
/// `Q^{-1} A Q = sign * B` has been checked exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoDecision {
    pub isomorphic: bool,
    pub conjugator: Option<Mat>,
    pub sign: Option<i8>,
    /// Why an isomorphic verdict carries no conjugator.
    pub note: Option<String>,
}

impl IsoDecision {
    fn no() -> IsoDecision {
        IsoDecision {
            isomorphic: false,
            conjugator: None,
            sign: None,
            note: None,
        }
    }

    fn with(q: Mat, sign: i8) -> IsoDecision {
        IsoDecision {
            isomorphic: true,
            conjugator: Some(q),
            sign: Some(sign),
            note: None,
        }
    }
}

fn fold(a: &Mat) -> Mat {
    if a.is_base() && a.ctx().ext_disc().is_some() {
        a.with_ctx(&a.ctx().base())
    } else {
        a.clone()
    }
}

fn product(ctx: &FieldCtx, d: &[Scalar]) -> Scalar {
    d.iter().fold(ctx.one(), |acc, x| &acc * x)
}

fn positives(ctx: &FieldCtx, d: &[Scalar]) -> usize {
    d.iter()
        .filter(|x| ctx.sign(x) == Some(Ordering::Greater))
        .count()
}

/// Are the hermitian forms `<d_A>` and `<d_B>` over `k(sqrt(-alpha)) / k`
/// equivalent? Over a finite field every such form of given rank is; over
/// the rationals and the real model the invariants are the determinant
/// modulo norms and, when `alpha > 0`, the number of positive entries.
pub fn hermitian_invariants(ctx: &FieldCtx, da: &[Scalar], db: &[Scalar], alpha: &Scalar) -> bool {
    if da.len() != db.len() {
        return false;
    }
    if ctx.is_finite() {
        return true;
    }
    let disc = &product(ctx, da) * &product(ctx, db);
    if !ctx.is_norm(&disc, alpha) {
        return false;
    }
    if ctx.sign(alpha) == Some(Ordering::Greater) && positives(ctx, da) != positives(ctx, db) {
        return false;
    }
    true
}

/// Rebuild `U_A`'s pairs so their Gram diagonal matches `target`: pair `j`
/// comes from pair `perm[j]`, rescaled by `p + s T`.
fn match_pairs(
    ctx: &FieldCtx,
    ua: &Mat,
    da: &[Scalar],
    target: &[Scalar],
    alpha: &Scalar,
) -> Option<Mat> {
    fn search(
        ctx: &FieldCtx,
        da: &[Scalar],
        target: &[Scalar],
        alpha: &Scalar,
        used: &mut Vec<bool>,
        acc: &mut Vec<(usize, Scalar, Scalar)>,
    ) -> bool {
        let j = acc.len();
        if j == target.len() {
            return true;
        }
        for i in 0..da.len() {
            if used[i] {
                continue;
            }
            let ratio = &target[j] * &da[i].inv().unwrap();
            if let Some((p, s)) = ctx.represent_norm(&ratio, alpha) {
                used[i] = true;
                acc.push((i, p, s));
                if search(ctx, da, target, alpha, used, acc) {
                    return true;
                }
                acc.pop();
                used[i] = false;
            }
        }
        false
    }
    let n = da.len();
    let mut acc = Vec::new();
    if !search(ctx, da, target, alpha, &mut vec![false; n], &mut acc) {
        return None;
    }
    let lift = |x: &Scalar| ctx.lift(x.clone());
    let mut cols_a = Vec::with_capacity(n);
    let mut cols_b = Vec::with_capacity(n);
    for (i, p, s) in acc {
        let a = ua.column(i);
        let b = ua.column(n + i);
        // a' = p a - alpha s b, b' = s a + p b
        let nas = lift(&-&(alpha * &s));
        cols_a.push(
            (0..2 * n)
                .map(|r| &ctx.mul(&lift(&p), &a[r]) + &ctx.mul(&nas, &b[r]))
                .collect::<Vec<FVal>>(),
        );
        cols_b.push(
            (0..2 * n)
                .map(|r| &ctx.mul(&lift(&s), &a[r]) + &ctx.mul(&lift(&p), &b[r]))
                .collect::<Vec<FVal>>(),
        );
    }
    cols_a.extend(cols_b);
    Some(Mat::from_columns(ctx, 2 * n, &cols_a))
}

fn verified(a: &Mat, b: &Mat, q: Mat, sign: i8) -> Result<IsoDecision> {
    let sp = SympSpace::new(&q.ctx().base(), a.rows() / 2);
    if !q.is_base() || !sp.is_symplectic(&q)? {
        return Err(Error::SelfCheck("conjugator is not in Sp(2n, k)".into()));
    }
    let qe = q.with_ctx(a.ctx());
    let target = if sign == 1 { b.clone() } else { b.neg() };
    if qe.inverse()?.mul(a).mul(&qe) != target {
        return Err(Error::SelfCheck(
            "conjugator does not intertwine A and B".into(),
        ));
    }
    Ok(IsoDecision::with(q, sign))
}

fn flip_b(u: &Mat) -> Mat {
    let ctx = u.ctx();
    let n = u.rows() / 2;
    let d: Vec<FVal> = (0..2 * n)
        .map(|k| ctx.fint(if k < n { 1 } else { -1 }))
        .collect();
    u.mul(&Mat::diag(ctx, &d))
}

fn decide_hyperbolic(
    a: &Mat,
    b: &Mat,
    ra: &InvolutionReport,
    rb: &InvolutionReport,
) -> Result<IsoDecision> {
    let base = ra.transition.ctx().clone();
    let alpha = match ra.inv_type {
        InvType::T3 => base.one(),
        _ => ra.alpha_class.rep.clone(),
    };
    let da = ra.gram_diag.as_ref().expect("hyperbolic diagonal");
    let db = rb.gram_diag.as_ref().expect("hyperbolic diagonal");
    for sign in [1i8, -1] {
        let dbs: Vec<Scalar> = if sign == 1 {
            db.clone()
        } else {
            db.iter().map(|x| -x).collect()
        };
        if !hermitian_invariants(&base, da, &dbs, &alpha) {
            continue;
        }
        let ub = if sign == 1 {
            rb.transition.clone()
        } else {
            flip_b(&rb.transition)
        };
        if let Some(v) = match_pairs(&base, &ra.transition, da, &dbs, &alpha) {
            let q = v.mul(&ub.inverse()?);
            return verified(a, b, q, sign);
        }
        return Ok(IsoDecision {
            isomorphic: true,
            conjugator: None,
            sign: Some(sign),
            note: Some(format!(
                "invariants agree, but no diagonal rescaling p^2 + {alpha} s^2 with base-field \
                 entries was found (the real model only carries rational square roots)"
            )),
        });
    }
    Ok(IsoDecision::no())
}

/// Decide whether `Inn_A` and `Inn_B` are isomorphic over `Sp(2n, k)`, with
/// an explicit conjugator when one is representable.
pub fn decide_isomorphic(a: &Mat, b: &Mat) -> Result<IsoDecision> {
    if a.ctx().kind() != b.ctx().kind() {
        return Err(Error::FieldMismatch(
            a.ctx().kind().to_string(),
            b.ctx().kind().to_string(),
        ));
    }
    if a.rows() != b.rows() {
        return Err(Error::Dimension(format!(
            "{}x{} vs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let (a, b) = (fold(a), fold(b));
    let ra = classify(&a)?;
    let rb = classify(&b)?;
    if ra.inv_type != rb.inv_type || ra.alpha_class != rb.alpha_class {
        return Ok(IsoDecision::no());
    }
    let xa = &ra.transition;
    let xb = &rb.transition;
    match ra.inv_type {
        InvType::T1 => {
            if ra.unordered_dims() != rb.unordered_dims() {
                return Ok(IsoDecision::no());
            }
            if ra.dim_pair == rb.dim_pair {
                verified(&a, &b, xa.mul(&xb.inverse()?), 1)
            } else {
                let (xnb, _, _) = canonicalize_type1(&b.neg())?;
                verified(&a, &b, xa.mul(&xnb.inverse()?), -1)
            }
        }
        InvType::T2 => verified(&a, &b, xa.mul(&xb.inverse()?), 1),
        InvType::T3 | InvType::T4 => match ra.case {
            Some(RootCase::RootInK) => verified(&a, &b, xa.mul(&xb.inverse()?), 1),
            _ => decide_hyperbolic(&a, &b, &ra, &rb),
        },
    }
}
