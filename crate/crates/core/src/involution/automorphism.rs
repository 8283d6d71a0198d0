use crate::error::{Error, Result};
use crate::field::{FVal, FieldCtx};
use crate::linalg::Mat;
use crate::symplectic::SympSpace;

/// `Some(p)` iff `A = p I`, which is exactly when `Inn_A` is the identity
/// on `Sp(2n, k)`.
pub fn is_scalar_automorphism(a: &Mat) -> Option<FVal> {
    a.scalar_value()
}

/// `W_1, W_2`, then `Xbar_0 .. Xbar_{n-1}`, then `Ybar_0 .. Ybar_{n-2}`.
///
/// A matrix commuting with all of them is scalar.
pub fn commutant_generator_family(ctx: &FieldCtx, n: usize) -> Vec<Mat> {
    assert!(n >= 1);
    let i = Mat::identity(ctx, n);
    let z = Mat::zeros(ctx, n, n);
    let mut out = vec![Mat::block2(&i, &i, &z, &i), Mat::block2(&i, &z, &i, &i)];
    for k in 0..n {
        let mut x = Mat::identity(ctx, n);
        x.set(n - k - 1, n - k - 1, ctx.fint(-1));
        out.push(Mat::block2(&x, &z, &z, &x));
    }
    for l in 0..n.saturating_sub(1) {
        let mut y = Mat::identity(ctx, n);
        y.set(l, l, ctx.fint(0));
        y.set(l + 1, l + 1, ctx.fint(0));
        y.set(l, l + 1, ctx.fint(1));
        y.set(l + 1, l, ctx.fint(1));
        out.push(Mat::block2(&y, &z, &z, &y));
    }
    out
}

/// Does `Inn_A` preserve `Sp(2n, k)`? For symplectic `A` over `k[sqrt(alpha)]`
/// this holds iff all entry products `a_ri a_sj` lie in `k`, i.e. iff the
/// entries are all in `k` or all in `sqrt(alpha) k`.
pub fn invariance_check(a: &Mat) -> Result<bool> {
    let sp = SympSpace::for_matrix(a)?;
    if !sp.is_symplectic(a)? {
        return Err(Error::NotSymplectic);
    }
    Ok(a.is_base() || a.is_pure_root())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes_and_membership() {
        let q = FieldCtx::rationals();
        let one = commutant_generator_family(&q, 1);
        assert_eq!(one.len(), 3);
        assert_eq!(one[0], Mat::from_ints(&q, &[&[1, 1], &[0, 1]]));
        assert_eq!(one[1], Mat::from_ints(&q, &[&[1, 0], &[1, 1]]));
        assert_eq!(one[2], Mat::from_ints(&q, &[&[-1, 0], &[0, -1]]));
        for n in 1..=4 {
            let fam = commutant_generator_family(&q, n);
            assert_eq!(fam.len(), 2 + n + n - 1);
            let sp = SympSpace::new(&q, n);
            assert!(fam.iter().all(|m| sp.is_symplectic(m).unwrap()));
        }
    }

    #[test]
    fn scalar_detection() {
        let q = FieldCtx::rationals();
        assert_eq!(
            is_scalar_automorphism(&Mat::identity(&q, 4).scale(&q.fint(3))),
            Some(q.fint(3))
        );
        let d = Mat::diag(&q, &[q.fint(1), q.fint(-1), q.fint(1), q.fint(-1)]);
        assert_eq!(is_scalar_automorphism(&d), None);
        assert_eq!(is_scalar_automorphism(&Mat::standard_j(&q, 2)), None);
    }

    #[test]
    fn invariance_examples() {
        let q = FieldCtx::rationals();
        let e = q.extension(&q.int(2)).unwrap();
        let h = e.val(e.zero(), e.frac(1, 2));
        let z = e.fint(0);
        // (sqrt2/2) [[1,1],[1,-1]] in each block
        let a = Mat::from_fn(&e, 4, 4, |i, j| {
            let same = (i < 2) == (j < 2);
            if !same {
                z.clone()
            } else if i % 2 == 1 && j % 2 == 1 {
                -&h
            } else {
                h.clone()
            }
        });
        assert!(invariance_check(&a).unwrap());
        assert!(invariance_check(&Mat::standard_j(&q, 2)).unwrap());
        // diag(1 + sqrt2, -1 + sqrt2) is symplectic but mixes shapes
        let m = Mat::diag(&e, &[e.val(e.int(1), e.int(1)), e.val(e.int(-1), e.int(1))]);
        assert!(!invariance_check(&m).unwrap());
        assert_eq!(
            invariance_check(&Mat::diag(&q, &[q.fint(2), q.fint(2)])),
            Err(Error::NotSymplectic)
        );
    }
}
