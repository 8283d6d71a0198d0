//! The standard form `J`, membership in `Sp(2n, k)`, Gram matrices of
//! subspaces, and symplectic Gram-Schmidt.

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{FVal, FieldCtx};
use crate::linalg::Mat;

/// `k^{2n}` with `beta(x, y) = x^T J y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SympSpace {
    n: usize,
    ctx: FieldCtx,
    j: Mat,
}

impl SympSpace {
    pub fn new(ctx: &FieldCtx, n: usize) -> SympSpace {
        SympSpace {
            n,
            ctx: ctx.clone(),
            j: Mat::standard_j(ctx, n),
        }
    }

    /// The space matching a square matrix of even size.
    pub fn for_matrix(a: &Mat) -> Result<SympSpace> {
        if !a.is_square() || !a.rows().is_multiple_of(2) || a.rows() == 0 {
            return Err(Error::Dimension(format!(
                "expected a 2n x 2n matrix, got {}x{}",
                a.rows(),
                a.cols()
            )));
        }
        Ok(SympSpace::new(a.ctx(), a.rows() / 2))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn j(&self) -> &Mat {
        &self.j
    }

    pub fn beta(&self, x: &[FVal], y: &[FVal]) -> FVal {
        let n = self.n;
        let mut acc = self.ctx.fint(0);
        for i in 0..n {
            acc = &acc + &self.ctx.mul(&x[i], &y[n + i]);
            acc = &acc - &self.ctx.mul(&x[n + i], &y[i]);
        }
        acc
    }

    pub fn is_symplectic(&self, a: &Mat) -> Result<bool> {
        if a.rows() != 2 * self.n || a.cols() != 2 * self.n {
            return Err(Error::Dimension(format!(
                "expected {0}x{0}, got {1}x{2}",
                2 * self.n,
                a.rows(),
                a.cols()
            )));
        }
        Ok(a.transpose().mul(&self.j).mul(a) == self.j)
    }

    /// Gram matrix `G[i][j] = beta(b_i, b_j)`.
    pub fn form_on(&self, basis: &[Vec<FVal>]) -> Mat {
        let m = basis.len();
        let mut g = Mat::zeros(&self.ctx, m, m);
        for i in 0..m {
            for j in i + 1..m {
                let v = self.beta(&basis[i], &basis[j]);
                g.set(j, i, -&v);
                g.set(i, j, v);
            }
        }
        g
    }

    /// Basis of the `beta`-orthogonal complement of the span of `vs`.
    pub fn complement(&self, vs: &[Vec<FVal>]) -> Vec<Vec<FVal>> {
        if vs.is_empty() {
            return (0..2 * self.n)
                .map(|i| {
                    let mut e = vec![self.ctx.fint(0); 2 * self.n];
                    e[i] = self.ctx.fint(1);
                    e
                })
                .collect();
        }
        // beta(v, x) = (v^T J) x
        let rows = Mat::from_columns(&self.ctx, 2 * self.n, vs)
            .transpose()
            .mul(&self.j);
        rows.kernel_basis()
    }

    /// A random element of `Sp(2n, k)`: a product of `steps` transvections
    /// `I + c v v^T J` and occasional copies of `J`, with small entries.
    pub fn random_element<R: Rng>(&self, rng: &mut R, steps: usize) -> Mat {
        let ctx = &self.ctx.base();
        let dim = 2 * self.n;
        let j = Mat::standard_j(ctx, self.n);
        let mut acc = Mat::identity(ctx, dim);
        for _ in 0..steps {
            if rng.gen_ratio(1, 5) {
                acc = acc.mul(&j);
                continue;
            }
            let v: Vec<FVal> = (0..dim).map(|_| ctx.fint(rng.gen_range(-1..=1))).collect();
            let mut c = rng.gen_range(-2..=2);
            if c == 0 {
                c = 1;
            }
            let vcol = Mat::from_columns(ctx, dim, &[v]);
            let t = Mat::identity(ctx, dim)
                .add(&vcol.mul(&vcol.transpose()).mul(&j).scale(&ctx.fint(c)));
            acc = acc.mul(&t);
        }
        acc.with_ctx(&self.ctx)
    }
}

/// `N` with `N^T M N = J` for an invertible skew-symmetric `M` of even size.
///
/// Greedy hyperbolic pairs in index order: the first remaining vector `u`,
/// its first partner `w`, `v = w / omega(u, w)`, then the rest is projected
/// off `span(u, v)`. Columns come out as `(u_1..u_m, v_1..v_m)`.
pub fn skew_normalize(m: &Mat) -> Result<Mat> {
    let size = m.rows();
    if !m.is_square() || !size.is_multiple_of(2) || size == 0 {
        return Err(Error::NoSymplecticBasis("odd or non-square size"));
    }
    if m.transpose() != m.neg() {
        return Err(Error::NoSymplecticBasis("matrix is not skew-symmetric"));
    }
    let ctx = m.ctx().clone();
    let omega = |x: &[FVal], y: &[FVal]| crate::linalg::bilinear(m, x, y);
    let mut pool: Vec<Vec<FVal>> = (0..size)
        .map(|i| {
            let mut e = vec![ctx.fint(0); size];
            e[i] = ctx.fint(1);
            e
        })
        .collect();
    let mut us = Vec::new();
    let mut vs = Vec::new();
    while !pool.is_empty() {
        let u = pool.remove(0);
        let Some(k) = pool.iter().position(|w| !omega(&u, w).is_zero()) else {
            return Err(Error::NoSymplecticBasis("matrix is singular"));
        };
        let w = pool.remove(k);
        let inv = ctx.inv(&omega(&u, &w)).expect("nonzero pairing");
        let v: Vec<FVal> = w.iter().map(|x| ctx.mul(&inv, x)).collect();
        pool = pool
            .into_iter()
            .map(|w| {
                let ou = omega(&u, &w);
                let ov = omega(&v, &w);
                (0..size)
                    .map(|i| &(&w[i] + &ctx.mul(&ov, &u[i])) - &ctx.mul(&ou, &v[i]))
                    .collect()
            })
            .collect();
        us.push(u);
        vs.push(v);
    }
    us.extend(vs);
    Ok(Mat::from_columns(&ctx, size, &us))
}
