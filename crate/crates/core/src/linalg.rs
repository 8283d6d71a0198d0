//! Dense exact matrices over a [`FieldCtx`].

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{FVal, FieldCtx, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<FVal>,
    ctx: FieldCtx,
}

impl Mat {
    pub fn zeros(ctx: &FieldCtx, rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![ctx.fint(0); rows * cols],
            ctx: ctx.clone(),
        }
    }

    pub fn identity(ctx: &FieldCtx, n: usize) -> Mat {
        let mut m = Mat::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, ctx.fint(1));
        }
        m
    }

    pub fn from_fn(
        ctx: &FieldCtx,
        rows: usize,
        cols: usize,
        f: impl Fn(usize, usize) -> FVal,
    ) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat {
            rows,
            cols,
            data,
            ctx: ctx.clone(),
        }
    }

    pub fn from_base(ctx: &FieldCtx, rows: usize, cols: usize, entries: Vec<Scalar>) -> Mat {
        assert_eq!(entries.len(), rows * cols);
        Mat {
            rows,
            cols,
            data: entries.into_iter().map(|a| ctx.lift(a)).collect(),
            ctx: ctx.clone(),
        }
    }

    /// Rows of small integers; handy in tests and examples.
    pub fn from_ints(ctx: &FieldCtx, rows: &[&[i64]]) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Mat::from_fn(ctx, r, c, |i, j| ctx.fint(rows[i][j]))
    }

    pub fn from_columns(ctx: &FieldCtx, rows: usize, cols: &[Vec<FVal>]) -> Mat {
        Mat::from_fn(ctx, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    /// The standard form `J = [[0, I], [-I, 0]]` of size `2n`.
    pub fn standard_j(ctx: &FieldCtx, n: usize) -> Mat {
        let mut m = Mat::zeros(ctx, 2 * n, 2 * n);
        for i in 0..n {
            m.set(i, n + i, ctx.fint(1));
            m.set(n + i, i, ctx.fint(-1));
        }
        m
    }

    pub fn diag(ctx: &FieldCtx, d: &[FVal]) -> Mat {
        let mut m = Mat::zeros(ctx, d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    /// `[[a, b], [c, d]]` from four equally sized square blocks.
    pub fn block2(a: &Mat, b: &Mat, c: &Mat, d: &Mat) -> Mat {
        let n = a.rows;
        Mat::from_fn(&a.ctx, 2 * n, 2 * n, |i, j| {
            let blk = match (i < n, j < n) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            blk.get(i % n, j % n).clone()
        })
    }

    pub fn block_diag(blocks: &[Mat]) -> Mat {
        let ctx = blocks[0].ctx.clone();
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let m: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(&ctx, n, m);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FVal {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FVal) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[FVal] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<FVal> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<FVal>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        Mat::from_fn(&self.ctx, rows, cols, |i, j| {
            self.get(r0 + i, c0 + j).clone()
        })
    }

    /// Reinterpret the entries in another field (e.g. lift a base matrix into
    /// an extension). Panics if an entry uses a root the target lacks.
    pub fn with_ctx(&self, ctx: &FieldCtx) -> Mat {
        if ctx.ext_disc().is_none() {
            assert!(self.is_base(), "matrix has extension entries");
        }
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.clone(),
            ctx: ctx.clone(),
        }
    }

    pub fn map(&self, f: impl Fn(&FVal) -> FVal) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            ctx: self.ctx.clone(),
        }
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(&self.ctx, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn conj(&self) -> Mat {
        self.map(|x| x.conj())
    }

    pub fn neg(&self) -> Mat {
        self.map(|x| -x)
    }

    pub fn scale(&self, c: &FVal) -> Mat {
        self.map(|x| self.ctx.mul(c, x))
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
            ctx: self.ctx.clone(),
        }
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
            ctx: self.ctx.clone(),
        }
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let ctx = &self.ctx;
        let mut out = Mat::zeros(ctx, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &ctx.mul(a, b);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[FVal]) -> Vec<FVal> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = self.ctx.fint(0);
                for (j, x) in v.iter().enumerate() {
                    acc = &acc + &self.ctx.mul(self.get(i, j), x);
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FVal::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Mat::identity(&self.ctx, self.rows)
    }

    /// `Some(c)` when the matrix is `c * I`.
    pub fn scalar_value(&self) -> Option<FVal> {
        if !self.is_square() {
            return None;
        }
        let c = self.get(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want = if i == j { &c } else { &self.ctx.fint(0) };
                if self.get(i, j) != want {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// All entries lie in the base field.
    pub fn is_base(&self) -> bool {
        self.data.iter().all(FVal::is_base)
    }

    /// All entries are base multiples of `sqrt(alpha)`.
    pub fn is_pure_root(&self) -> bool {
        self.data.iter().all(FVal::is_pure_root)
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let ctx = &self.ctx;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = ctx.inv(m.get(r, c)).expect("nonzero pivot");
            for j in 0..m.cols {
                let v = ctx.mul(&inv, m.get(r, j));
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in 0..m.cols {
                    let v = m.get(i, j) - &ctx.mul(&f, m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<FVal>> {
        let ctx = &self.ctx;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![ctx.fint(0); self.cols];
                v[f] = ctx.fint(1);
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f);
                }
                v
            })
            .collect()
    }

    /// Basis of the column space taken from the original pivot columns.
    pub fn column_space_basis(&self) -> Vec<Vec<FVal>> {
        let (_, pivots) = self.rref();
        pivots.iter().map(|&c| self.column(c)).collect()
    }

    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let aug = Mat::from_fn(&self.ctx, n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                self.ctx.fint(1)
            } else {
                self.ctx.fint(0)
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(r.submatrix(0, n, n, n))
    }

    pub fn det(&self) -> FVal {
        assert!(self.is_square());
        let ctx = &self.ctx;
        let mut m = self.clone();
        let mut det = ctx.fint(1);
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return ctx.fint(0);
            };
            if p != c {
                m.swap_rows(c, p);
                det = -&det;
            }
            let piv = m.get(c, c).clone();
            det = ctx.mul(&det, &piv);
            let inv = ctx.inv(&piv).expect("nonzero pivot");
            for i in c + 1..m.rows {
                let f = ctx.mul(m.get(i, c), &inv);
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j) - &ctx.mul(&f, m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    pub fn pow(&self, e: u32) -> Mat {
        let mut acc = Mat::identity(&self.ctx, self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The base-field matrix of `a`-parts (the "real part").
    pub fn base_part(&self) -> Mat {
        let base = self.ctx.base();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| base.lift(x.a.clone())).collect(),
            ctx: base,
        }
    }

    /// The base-field matrix of `b`-parts, so `self = base_part + sqrt(alpha) * root_part`.
    pub fn root_part(&self) -> Mat {
        let base = self.ctx.base();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| base.lift(x.b.clone())).collect(),
            ctx: base,
        }
    }
}

/// `v^T M w` for column vectors.
pub fn bilinear(m: &Mat, v: &[FVal], w: &[FVal]) -> FVal {
    let mw = m.mul_vec(w);
    dot(m.ctx(), v, &mw)
}

pub fn dot(ctx: &FieldCtx, v: &[FVal], w: &[FVal]) -> FVal {
    let mut acc = ctx.fint(0);
    for (a, b) in v.iter().zip(w) {
        acc = &acc + &ctx.mul(a, b);
    }
    acc
}

pub fn vec_add(v: &[FVal], w: &[FVal]) -> Vec<FVal> {
    v.iter().zip(w).map(|(a, b)| a + b).collect()
}

pub fn vec_scale(ctx: &FieldCtx, c: &FVal, v: &[FVal]) -> Vec<FVal> {
    v.iter().map(|x| ctx.mul(c, x)).collect()
}

impl fmt::Display for FVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let root = if self.b.is_one() {
            "w".to_string()
        } else if matches!(self.b, Scalar::Rational(_)) && (-&self.b).is_one() {
            "-w".to_string()
        } else {
            format!("{}*w", self.b)
        };
        if self.a.is_zero() {
            write!(f, "{root}")
        } else if root.starts_with('-') {
            write!(f, "{}{}", self.a, root)
        } else {
            write!(f, "{}+{}", self.a, root)
        }
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{:>width$}", cells[i * self.cols + j]))
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_det_over_rationals() {
        let q = FieldCtx::rationals();
        let a = Mat::from_ints(&q, &[&[2, 1], &[7, 4]]);
        assert_eq!(a.det(), q.fint(1));
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        let s = Mat::from_ints(&q, &[&[1, 2], &[2, 4]]);
        assert_eq!(s.inverse(), Err(Error::Singular));
        assert_eq!(s.det(), q.fint(0));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let f5 = FieldCtx::prime_field(5).unwrap();
        let a = Mat::from_ints(&f5, &[&[1, 2, 3, 4], &[0, 1, 2, 3]]);
        let ker = a.kernel_basis();
        assert_eq!(ker.len(), 2);
        for v in ker {
            assert!(a.mul_vec(&v).iter().all(FVal::is_zero));
        }
    }

    #[test]
    fn display_uses_w_for_the_root() {
        let q = FieldCtx::rationals();
        let e = q.extension(&q.int(2)).unwrap();
        assert_eq!(e.val(e.frac(1, 2), e.frac(1, 2)).to_string(), "1/2+1/2*w");
        assert_eq!(e.val(e.zero(), e.int(-1)).to_string(), "-w");
        assert_eq!(e.val(e.zero(), e.int(-3)).to_string(), "-3*w");
        assert_eq!(e.val(e.int(1), e.int(-3)).to_string(), "1-3*w");
    }
}
