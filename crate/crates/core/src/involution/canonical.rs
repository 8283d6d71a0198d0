use crate::error::{Error, Result};
use crate::field::{FVal, FieldCtx, Scalar, SquareClass};
use crate::linalg::{vec_add, vec_scale, Mat};
use crate::symplectic::{skew_normalize, SympSpace};

use super::{InvType, InvolutionReport, RootCase};

/// Result of the hyperbolic-pair construction for `T` with `T^2 = -alpha I`:
/// `U = (a_1..a_n, b_1..b_n)` with `a_j = T b_j`, `U^T J U = [[0, D], [-D, 0]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperbolic {
    pub u: Mat,
    pub diag: Vec<Scalar>,
}

struct Prepared {
    a: Mat,
    sp: SympSpace,
    gamma: i8,
}

fn self_check(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::SelfCheck(what.to_string()))
    }
}

/// Shared precondition checks; folds base-valued matrices out of any extension.
fn prepare(a: &Mat) -> Result<Prepared> {
    let sp = SympSpace::for_matrix(a)?;
    if !sp.is_symplectic(a)? {
        return Err(Error::NotSymplectic);
    }
    let a = if a.is_base() && a.ctx().ext_disc().is_some() {
        a.with_ctx(&a.ctx().base())
    } else {
        a.clone()
    };
    let sp = SympSpace::new(a.ctx(), sp.n());
    if a.scalar_value().is_some() {
        return Err(Error::ScalarAutomorphism);
    }
    if !a.is_base() && !a.is_pure_root() {
        return Err(Error::DoesNotPreserve);
    }
    let sq = a.mul(&a);
    let gamma = match sq.scalar_value() {
        Some(v) if v == a.ctx().fint(1) => 1,
        Some(v) if v == a.ctx().fint(-1) => -1,
        _ => return Err(Error::NotInvolution),
    };
    Ok(Prepared { a, sp, gamma })
}

fn expect_type(p: &Prepared, want: InvType) -> Result<()> {
    let found = match (p.a.is_base(), p.gamma) {
        (true, 1) => InvType::T1,
        (false, 1) => InvType::T2,
        (true, _) => InvType::T3,
        (false, _) => InvType::T4,
    };
    if found != want {
        return Err(Error::WrongType {
            expected: format!("Type {want}"),
            found: format!("Type {found}"),
        });
    }
    Ok(())
}

/// `diag(I_{s/2}, -I_{t/2}, I_{s/2}, -I_{t/2})` with `t = 2n - s`.
pub fn type1_canonical_matrix(ctx: &FieldCtx, n: usize, s: usize) -> Mat {
    let half = s / 2;
    let d: Vec<FVal> = (0..2 * n)
        .map(|i| {
            if i % n < half {
                ctx.fint(1)
            } else {
                ctx.fint(-1)
            }
        })
        .collect();
    Mat::diag(ctx, &d)
}

fn append_cols(cols: &mut Vec<Vec<FVal>>, m: &Mat, range: std::ops::Range<usize>) {
    for j in range {
        cols.push(m.column(j));
    }
}

/// `X` in `Sp(2n, k)` with `X^{-1} A X` the interleaved `+-1` diagonal, and `(s, t)`.
pub fn canonicalize_type1(a: &Mat) -> Result<(Mat, usize, usize)> {
    let p = prepare(a)?;
    expect_type(&p, InvType::T1)?;
    let ctx = p.a.ctx().clone();
    let dim = 2 * p.sp.n();
    let id = Mat::identity(&ctx, dim);
    let plus = p.a.sub(&id).kernel_basis();
    let minus = p.a.add(&id).kernel_basis();
    let (s, t) = (plus.len(), minus.len());
    let normalize = |basis: &[Vec<FVal>]| -> Result<Mat> {
        let b = Mat::from_columns(&ctx, dim, basis);
        let n = skew_normalize(&p.sp.form_on(basis))?;
        Ok(b.mul(&n))
    };
    let ep = normalize(&plus)?;
    let em = normalize(&minus)?;
    let mut cols = Vec::with_capacity(dim);
    append_cols(&mut cols, &ep, 0..s / 2);
    append_cols(&mut cols, &em, 0..t / 2);
    append_cols(&mut cols, &ep, s / 2..s);
    append_cols(&mut cols, &em, t / 2..t);
    let x = Mat::from_columns(&ctx, dim, &cols);
    self_check(
        p.sp.is_symplectic(&x)?,
        "type 1 transition is not symplectic",
    )?;
    let canon = type1_canonical_matrix(&ctx, p.sp.n(), s);
    self_check(p.a.mul(&x) == x.mul(&canon), "type 1 canonical form")?;
    Ok((x, s, t))
}

/// `[[0, I], [c I, 0]]` of size `2n`.
pub(crate) fn offdiag_model(ctx: &FieldCtx, n: usize, c: &Scalar) -> Mat {
    let i = Mat::identity(ctx, n);
    let z = Mat::zeros(ctx, n, n);
    Mat::block2(&z, &i, &i.scale(&ctx.lift(c.clone())), &z)
}

/// `(sqrt(alpha) / alpha) * M` for a base matrix `M`, as an extension matrix.
pub(crate) fn times_root_over_alpha(m: &Mat, ext: &FieldCtx) -> Mat {
    let alpha = ext.ext_disc().expect("extension").clone();
    let inv = alpha.inv().expect("nonzero");
    let base = ext.base();
    m.with_ctx(ext).map(|x| FVal {
        a: base.zero(),
        b: &x.a * &inv,
    })
}

/// `X` over `k` with `A = (sqrt(alpha)/alpha) X [[0, I], [alpha I, 0]] X^{-1}` and
/// `X^T J X = 1/2 blockdiag(J_n, J_n / alpha)`, and the canonical `alpha`.
pub fn canonicalize_type2(a: &Mat) -> Result<(Mat, Scalar)> {
    let p = prepare(a)?;
    expect_type(&p, InvType::T2)?;
    let n = p.sp.n();
    if n % 2 == 1 {
        return Err(Error::Type2OddN(n));
    }
    let ext = p.a.ctx().clone();
    let alpha = ext.ext_disc().expect("extension").clone();
    let base = ext.base();
    let dim = 2 * n;
    let id = Mat::identity(&ext, dim);
    let plus = p.a.sub(&id).kernel_basis();
    self_check(plus.len() == n, "type 2 eigenspace dimension")?;
    let nrm = skew_normalize(&p.sp.form_on(&plus))?;
    let u = Mat::from_columns(&ext, dim, &plus).mul(&nrm);
    let re = u.base_part();
    let im = u.root_part();
    let mut cols = re.columns();
    cols.extend(im.columns());
    let x = Mat::from_columns(&base, dim, &cols);

    let half = base.frac(1, 2);
    let jn = Mat::standard_j(&base, n / 2);
    let gram = Mat::block_diag(&[
        jn.scale(&base.lift(half.clone())),
        jn.scale(&base.lift(&half * &alpha.inv().unwrap())),
    ]);
    let bsp = SympSpace::new(&base, n);
    self_check(
        x.transpose().mul(bsp.j()).mul(&x) == gram,
        "type 2 Gram identity",
    )?;
    let model = offdiag_model(&base, n, &alpha);
    let rebuilt = times_root_over_alpha(&x.mul(&model).mul(&x.inverse()?), &ext);
    self_check(rebuilt == p.a, "type 2 model identity")?;
    Ok((x, alpha))
}

/// `X = (P, b)` with `P` a basis of `E(T, c)`, `b` spanning `E(T, -c)` and
/// `P^T J b = I`, so `X^T J X = J`. Requires `T^2 = c^2 I` over `k`.
fn dual_eigenbasis(sp: &SympSpace, t: &Mat, c: &Scalar) -> Result<Mat> {
    let ctx = sp.ctx();
    let n = sp.n();
    let ci = Mat::identity(ctx, 2 * n).scale(&ctx.lift(c.clone()));
    let pos = t.sub(&ci).kernel_basis();
    let neg = t.add(&ci).kernel_basis();
    self_check(
        pos.len() == n && neg.len() == n,
        "eigenspaces of dimension n",
    )?;
    let pm = Mat::from_columns(ctx, 2 * n, &pos);
    let qm = Mat::from_columns(ctx, 2 * n, &neg);
    let pair = pm.transpose().mul(sp.j()).mul(&qm);
    let b = qm.mul(&pair.inverse()?);
    let mut cols = pos;
    cols.extend(b.columns());
    let x = Mat::from_columns(ctx, 2 * n, &cols);
    self_check(sp.is_symplectic(&x)?, "dual eigenbasis Gram identity")?;
    Ok(x)
}

/// Candidate seeds in a complement with basis `f`: `f_i`, then `f_i + f_l`,
/// then (infinite fields only) a few more small combinations.
fn seeds(ctx: &FieldCtx, f: &[Vec<FVal>]) -> Vec<Vec<FVal>> {
    let mut out: Vec<Vec<FVal>> = f.to_vec();
    for i in 0..f.len() {
        for l in i + 1..f.len() {
            out.push(vec_add(&f[i], &f[l]));
        }
    }
    if !ctx.is_finite() {
        for c in [-1i64, 2, -2, 3] {
            for i in 0..f.len() {
                for l in 0..f.len() {
                    if i != l {
                        out.push(vec_add(&f[i], &vec_scale(ctx, &ctx.fint(c), &f[l])));
                    }
                }
            }
        }
    }
    out
}

/// Hyperbolic pairs for `T` over `k` with `T^2 = -alpha I` and no eigenvalue in `k`.
///
/// Each step picks a seed `x` in the complement of the pairs so far with
/// `d = beta(Tx, x) != 0`, rescales `x -> p x + s T x` (which multiplies `d`
/// by `p^2 + alpha s^2`) to bring `d` to `alpha` or `-alpha` when possible,
/// and records `a = T x`, `b = x`.
pub(crate) fn hyperbolic_basis(sp: &SympSpace, t: &Mat, alpha: &Scalar) -> Result<Hyperbolic> {
    let ctx = sp.ctx().clone();
    let n = sp.n();
    let targets = [alpha.clone(), -alpha];
    let mut found: Vec<Vec<FVal>> = Vec::new();
    let mut avs = Vec::new();
    let mut bvs = Vec::new();
    let mut diag = Vec::new();
    for _ in 0..n {
        let f = sp.complement(&found);
        let mut fallback = None;
        let mut chosen = None;
        'seed: for x in seeds(&ctx, &f) {
            let tx = t.mul_vec(&x);
            let d = sp.beta(&tx, &x).a;
            if d.is_zero() {
                continue;
            }
            for target in &targets {
                if d == *target {
                    chosen = Some((x.clone(), d.clone()));
                    break 'seed;
                }
                let ratio = target * &d.inv().unwrap();
                if let Some((pp, ss)) = ctx.represent_norm(&ratio, alpha) {
                    let xn = vec_add(
                        &vec_scale(&ctx, &ctx.lift(pp), &x),
                        &vec_scale(&ctx, &ctx.lift(ss), &tx),
                    );
                    chosen = Some((xn, target.clone()));
                    break 'seed;
                }
            }
            if fallback.is_none() {
                fallback = Some((x, d));
            }
        }
        let (x, d) = chosen.or(fallback).ok_or(Error::SelfCheck(
            "no hyperbolic seed in the complement".into(),
        ))?;
        let a = t.mul_vec(&x);
        found.push(a.clone());
        found.push(x.clone());
        avs.push(a);
        bvs.push(x);
        diag.push(d);
    }
    avs.extend(bvs);
    let u = Mat::from_columns(&ctx, 2 * n, &avs);
    let dm = Mat::diag(
        &ctx,
        &diag.iter().map(|d| ctx.lift(d.clone())).collect::<Vec<_>>(),
    );
    let z = Mat::zeros(&ctx, n, n);
    let gram = Mat::block2(&z, &dm, &dm.neg(), &z);
    self_check(
        u.transpose().mul(sp.j()).mul(&u) == gram,
        "hyperbolic Gram identity",
    )?;
    let model = offdiag_model(&ctx, n, &-alpha);
    self_check(t.mul(&u) == u.mul(&model), "hyperbolic model identity")?;
    Ok(Hyperbolic { u, diag })
}

/// Type 3: `(X or U, case, diagonal of U_1)`.
///
/// With `i` in `k`: `X^{-1} A X = diag(iI, -iI)` and `X^T J X = J`.
/// Otherwise: `A = U J U^{-1}` and `U^T J U = [[0, D], [-D, 0]]`.
pub fn canonicalize_type3(a: &Mat) -> Result<(Mat, RootCase, Option<Vec<Scalar>>)> {
    let p = prepare(a)?;
    expect_type(&p, InvType::T3)?;
    let ctx = p.a.ctx().clone();
    if let Some(c) = ctx.sqrt_in_base(&ctx.int(-1)) {
        let x = dual_eigenbasis(&p.sp, &p.a, &c)?;
        let n = p.sp.n();
        let d: Vec<FVal> = (0..2 * n)
            .map(|k| ctx.lift(if k < n { c.clone() } else { -&c }))
            .collect();
        self_check(
            p.a.mul(&x) == x.mul(&Mat::diag(&ctx, &d)),
            "type 3 eigen form",
        )?;
        return Ok((x, RootCase::RootInK, None));
    }
    let h = hyperbolic_basis(&p.sp, &p.a, &ctx.one())?;
    Ok((h.u, RootCase::RootNotInK, Some(h.diag)))
}

/// Type 4: `(X or U, alpha, case, diagonal of U_1)`.
///
/// With `sqrt(-alpha)` in `k`: `X^{-1} A X = diag(iI, -iI)` with
/// `i = sqrt(-1/alpha) sqrt(alpha)` and `X^T J X = J`. Otherwise
/// `A = (sqrt(alpha)/alpha) U [[0, I], [-alpha I, 0]] U^{-1}`.
pub fn canonicalize_type4(a: &Mat) -> Result<(Mat, Scalar, RootCase, Option<Vec<Scalar>>)> {
    let p = prepare(a)?;
    expect_type(&p, InvType::T4)?;
    let ext = p.a.ctx().clone();
    let base = ext.base();
    let alpha = ext.ext_disc().expect("extension").clone();
    let n = p.sp.n();
    let b = p.a.root_part();
    let bsp = SympSpace::new(&base, n);
    let minus_inv = -&alpha.inv().unwrap();
    if let Some(c) = base.sqrt_in_base(&minus_inv) {
        let x = dual_eigenbasis(&bsp, &b, &c)?;
        let d: Vec<FVal> = (0..2 * n)
            .map(|k| ext.val(ext.zero(), if k < n { c.clone() } else { -&c }))
            .collect();
        let xe = x.with_ctx(&ext);
        self_check(
            p.a.mul(&xe) == xe.mul(&Mat::diag(&ext, &d)),
            "type 4 eigen form",
        )?;
        return Ok((x, alpha, RootCase::RootInK, None));
    }
    let t = b.scale(&base.lift(alpha.clone()));
    let h = hyperbolic_basis(&bsp, &t, &alpha)?;
    Ok((h.u, alpha, RootCase::RootNotInK, Some(h.diag)))
}

/// Type, invariants and transition matrix of the involution `Inn_A`.
pub fn classify(a: &Mat) -> Result<InvolutionReport> {
    let p = prepare(a)?;
    let n = p.sp.n();
    let base = p.a.ctx().base();
    let trivial = SquareClass { rep: base.one() };
    let report = match (p.a.is_base(), p.gamma) {
        (true, 1) => {
            let (x, s, t) = canonicalize_type1(&p.a)?;
            InvolutionReport {
                inv_type: InvType::T1,
                n,
                gamma: 1,
                alpha_class: trivial,
                dim_pair: Some((s, t)),
                transition: x,
                case: None,
                gram_diag: None,
            }
        }
        (false, 1) => {
            let (x, alpha) = canonicalize_type2(&p.a)?;
            InvolutionReport {
                inv_type: InvType::T2,
                n,
                gamma: 1,
                alpha_class: SquareClass { rep: alpha },
                dim_pair: None,
                transition: x,
                case: None,
                gram_diag: None,
            }
        }
        (true, _) => {
            let (x, case, diag) = canonicalize_type3(&p.a)?;
            InvolutionReport {
                inv_type: InvType::T3,
                n,
                gamma: -1,
                alpha_class: trivial,
                dim_pair: None,
                transition: x,
                case: Some(case),
                gram_diag: diag,
            }
        }
        (false, _) => {
            let (x, alpha, case, diag) = canonicalize_type4(&p.a)?;
            InvolutionReport {
                inv_type: InvType::T4,
                n,
                gamma: -1,
                alpha_class: SquareClass { rep: alpha },
                dim_pair: None,
                transition: x,
                case: Some(case),
                gram_diag: diag,
            }
        }
    };
    Ok(report)
}

/// Recheck the identities behind `r.transition` for `a` from scratch and
/// return the canonical form `X^{-1} A X`.
pub fn verify_transition(a: &Mat, r: &InvolutionReport) -> Result<Mat> {
    let x = &r.transition;
    let base = x.ctx().clone();
    let n = r.n;
    let sp = SympSpace::new(&base, n);
    let a = if a.is_base() {
        a.with_ctx(&base)
    } else {
        a.clone()
    };
    let ext = a.ctx().clone();
    let xe = x.with_ctx(&ext);
    let form = xe.inverse()?.mul(&a).mul(&xe);
    let gram = x.transpose().mul(sp.j()).mul(x);
    let hyperbolic_gram = |d: &[Scalar]| {
        let dm = Mat::diag(
            &base,
            &d.iter().map(|v| base.lift(v.clone())).collect::<Vec<_>>(),
        );
        let z = Mat::zeros(&base, n, n);
        Mat::block2(&z, &dm, &dm.neg(), &z)
    };
    // diag(c I, -c I) with c^2 = -1
    let eigen_form = |f: &Mat| {
        let c = f.get(0, 0).clone();
        let d: Vec<FVal> = (0..2 * n)
            .map(|k| if k < n { c.clone() } else { -&c })
            .collect();
        *f == Mat::diag(&ext, &d) && ext.mul(&c, &c) == ext.fint(-1)
    };
    let ok = match (r.inv_type, &r.gram_diag) {
        (InvType::T1, _) => {
            let s = r.dim_pair.map(|p| p.0).unwrap_or(0);
            gram == *sp.j() && form == type1_canonical_matrix(&base, n, s)
        }
        (InvType::T2, _) => {
            let alpha = &r.alpha_class.rep;
            let half = base.frac(1, 2);
            let jn = Mat::standard_j(&base, n / 2);
            let want = Mat::block_diag(&[
                jn.scale(&base.lift(half.clone())),
                jn.scale(&base.lift(&half * &alpha.inv().unwrap())),
            ]);
            gram == want && form == times_root_over_alpha(&offdiag_model(&base, n, alpha), &ext)
        }
        (InvType::T3, None) | (InvType::T4, None) => gram == *sp.j() && eigen_form(&form),
        (InvType::T3, Some(d)) => {
            gram == hyperbolic_gram(d) && form == offdiag_model(&base, n, &base.int(-1))
        }
        (InvType::T4, Some(d)) => {
            let alpha = &r.alpha_class.rep;
            gram == hyperbolic_gram(d)
                && form == times_root_over_alpha(&offdiag_model(&base, n, &-alpha), &ext)
        }
    };
    self_check(ok, "transition matrix identities")?;
    Ok(form)
}
