//! Brute-force oracle over small prime fields: enumerate `Sp(2n, p)`, collect
//! every involution-inducing matrix, split them into isomorphy classes by
//! orbit closure and compare the class counts with the formulas.
//!
//! Elements are stored as compact residue arrays; exact [`Mat`]s are only
//! built for classification and for results handed back to callers.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Adjoined, FieldCtx, Scalar, SquareClass};
use crate::involution::{
    classify, commutant_generator_family, count_formulas, ClassCount, ClassCountTable,
    ClassSummary, CountSource, InvType,
};
use crate::linalg::Mat;

/// Refuse to enumerate groups with more elements than this.
pub const SIZE_LIMIT: u128 = 1_000_000;

const MAX_DIM: usize = 6;

/// A `dim x dim` matrix of residues, row-major.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Small {
    dim: u8,
    e: [u8; MAX_DIM * MAX_DIM],
}

impl Small {
    fn zero(dim: usize) -> Small {
        Small {
            dim: dim as u8,
            e: [0; MAX_DIM * MAX_DIM],
        }
    }

    fn identity(dim: usize) -> Small {
        let mut m = Small::zero(dim);
        for i in 0..dim {
            m.set(i, i, 1);
        }
        m
    }

    fn dim(&self) -> usize {
        self.dim as usize
    }

    fn get(&self, i: usize, j: usize) -> u8 {
        self.e[i * self.dim() + j]
    }

    fn set(&mut self, i: usize, j: usize, v: u8) {
        let d = self.dim();
        self.e[i * d + j] = v;
    }

    fn mul(&self, rhs: &Small, p: u32) -> Small {
        let d = self.dim();
        let mut out = Small::zero(d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = 0u32;
                for k in 0..d {
                    acc += self.get(i, k) as u32 * rhs.get(k, j) as u32;
                }
                out.set(i, j, (acc % p) as u8);
            }
        }
        out
    }

    fn scale(&self, c: u32, p: u32) -> Small {
        let mut out = *self;
        let d = self.dim();
        for v in out.e[..d * d].iter_mut() {
            *v = (*v as u32 * c % p) as u8;
        }
        out
    }

    /// `Some(c)` when the matrix is `c I`.
    fn scalar(&self) -> Option<u8> {
        let d = self.dim();
        let c = self.get(0, 0);
        for i in 0..d {
            for j in 0..d {
                if self.get(i, j) != if i == j { c } else { 0 } {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Fixed-width base-`p` digits of the entries.
    fn key(&self, p: u64) -> u64 {
        let d = self.dim();
        self.e[..d * d]
            .iter()
            .rev()
            .fold(0u64, |acc, &v| acc * p + v as u64)
    }

    fn from_mat(m: &Mat, p: u64) -> Small {
        let mut s = Small::zero(m.rows());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                let v = match &m.get(i, j).a {
                    Scalar::Residue(r) => r.value(),
                    Scalar::Rational(_) => unreachable!("prime-field matrix"),
                };
                s.set(i, j, (v % p) as u8);
            }
        }
        s
    }

    fn to_mat(&self, ctx: &FieldCtx) -> Mat {
        let d = self.dim();
        Mat::from_fn(ctx, d, d, |i, j| ctx.fint(self.get(i, j) as i64))
    }
}

/// `|Sp(2n, p)| = p^{n^2} prod_{i=1..n} (p^{2i} - 1)`, saturating.
pub fn group_order(n: usize, p: u64) -> u128 {
    let p = p as u128;
    let mut acc: u128 = 1;
    for _ in 0..n * n {
        acc = acc.saturating_mul(p);
    }
    for i in 1..=n as u32 {
        acc = acc.saturating_mul(p.saturating_pow(2 * i).saturating_sub(1));
    }
    acc
}

/// All of `Sp(2n, p)`, reached by breadth-first search from the generators.
#[derive(Clone, Debug)]
pub struct GroupEnumeration {
    pub n: usize,
    pub p: u64,
    ctx: FieldCtx,
    elements: Vec<Small>,
    generators: Vec<Small>,
}

impl GroupEnumeration {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn generators(&self) -> Vec<Mat> {
        self.generators
            .iter()
            .map(|g| g.to_mat(&self.ctx))
            .collect()
    }

    pub fn element(&self, i: usize) -> Mat {
        self.elements[i].to_mat(&self.ctx)
    }

    pub fn contains(&self, m: &Mat) -> bool {
        let s = Small::from_mat(m, self.p);
        self.elements.contains(&s)
    }
}

fn generator_mats(ctx: &FieldCtx, n: usize) -> Vec<Mat> {
    let dim = 2 * n;
    let j = Mat::standard_j(ctx, n);
    let mut gens = vec![j.clone()];
    let e = Mat::identity(ctx, dim).columns();
    let mut vs: Vec<Vec<_>> = e.clone();
    for a in 0..dim {
        for b in a + 1..dim {
            vs.push(crate::linalg::vec_add(&e[a], &e[b]));
        }
    }
    for v in vs {
        let col = Mat::from_columns(ctx, dim, &[v]);
        gens.push(Mat::identity(ctx, dim).add(&col.mul(&col.transpose()).mul(&j)));
    }
    gens.extend(commutant_generator_family(ctx, n));
    gens
}

pub fn enumerate_group(n: usize, p: u64) -> Result<GroupEnumeration> {
    let ctx = FieldCtx::prime_field(p)?;
    let order = group_order(n, p);
    if n == 0 || 2 * n > MAX_DIM || p > u8::MAX as u64 || order > SIZE_LIMIT {
        return Err(Error::TooLarge {
            order,
            limit: SIZE_LIMIT,
        });
    }
    let dim = 2 * n;
    let generators: Vec<Small> = generator_mats(&ctx, n)
        .iter()
        .map(|g| Small::from_mat(g, p))
        .collect();
    let pp = p as u32;
    let id = Small::identity(dim);
    let mut seen: HashMap<u64, ()> = HashMap::with_capacity(order as usize);
    seen.insert(id.key(p), ());
    let mut elements = vec![id];
    let mut head = 0;
    while head < elements.len() {
        let g = elements[head];
        head += 1;
        for s in &generators {
            let h = g.mul(s, pp);
            if seen.insert(h.key(p), ()).is_none() {
                elements.push(h);
                if elements.len() as u128 > order {
                    return Err(Error::SelfCheck(format!(
                        "generator closure exceeds |Sp({dim},{p})| = {order}"
                    )));
                }
            }
        }
    }
    if elements.len() as u128 != order {
        return Err(Error::SelfCheck(format!(
            "generator closure has {} elements, expected {order}",
            elements.len()
        )));
    }
    Ok(GroupEnumeration {
        n,
        p,
        ctx,
        elements,
        generators,
    })
}

/// Involution-inducing matrices found by enumeration.
///
/// Without `alpha` these are the `A` in the group with `A^2 = +-I`,
/// `A != +-I`. With a nonsquare `alpha` they are `A = sqrt(alpha) B` for the
/// `B` in the coset `B_0 Sp(2n, p)`, `B_0 = diag(I, alpha^{-1} I)`, with
/// `B^2 = +-alpha^{-1} I`.
#[derive(Clone, Debug)]
pub struct InvolutionSet {
    pub n: usize,
    pub p: u64,
    pub alpha: Option<Scalar>,
    adj: Option<Adjoined>,
    ctx: FieldCtx,
    items: Vec<Small>,
    /// `A^2 = I` (Types 1, 2) or `A^2 = -I` (Types 3, 4), per item.
    plus: Vec<bool>,
}

impl InvolutionSet {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// The `i`-th matrix `A` (over the canonical extension for coset sets).
    pub fn matrix(&self, i: usize) -> Mat {
        let b = self.items[i].to_mat(&self.ctx);
        match &self.adj {
            None => b,
            Some(adj) => {
                let base = adj.ctx.base();
                Mat::from_fn(&adj.ctx, b.rows(), b.cols(), |r, c| {
                    adj.value(base.zero(), b.get(r, c).a.clone())
                })
            }
        }
    }

    pub fn matrices(&self) -> Vec<Mat> {
        (0..self.len()).map(|i| self.matrix(i)).collect()
    }

    pub fn inv_type(&self, i: usize) -> InvType {
        match (self.alpha.is_some(), self.plus[i]) {
            (false, true) => InvType::T1,
            (true, true) => InvType::T2,
            (false, false) => InvType::T3,
            (true, false) => InvType::T4,
        }
    }
}

pub fn enumerate_involutions(
    group: &GroupEnumeration,
    alpha: Option<&Scalar>,
) -> Result<InvolutionSet> {
    let p = group.p;
    let pp = p as u32;
    let ctx = group.ctx.clone();
    let dim = 2 * group.n;
    let (adj, base_point, target) = match alpha {
        None => (None, None, 1u8),
        Some(a) => {
            let a = match a {
                Scalar::Residue(_) => a.clone(),
                Scalar::Rational(q) => ctx.rational(q.clone()),
            };
            if a.is_zero() || ctx.is_square(&a) {
                return Err(Error::SquareDiscriminant(a.to_string()));
            }
            let inv = match a.inv().unwrap() {
                Scalar::Residue(r) => r.value() as u8,
                Scalar::Rational(_) => unreachable!(),
            };
            let mut b0 = Small::identity(dim);
            for i in group.n..dim {
                b0.set(i, i, inv);
            }
            (Some(ctx.adjoin(&a)?), Some(b0), inv)
        }
    };
    let neg_target = ((p - target as u64) % p) as u8;
    let found: Vec<(Small, bool)> = group
        .elements
        .par_iter()
        .filter_map(|g| {
            let m = match &base_point {
                None => *g,
                Some(b0) => b0.mul(g, pp),
            };
            let sq = m.mul(&m, pp).scalar()?;
            if base_point.is_none() && m.scalar().is_some() {
                return None;
            }
            if sq == target {
                Some((m, true))
            } else if sq == neg_target {
                Some((m, false))
            } else {
                None
            }
        })
        .collect();
    Ok(InvolutionSet {
        n: group.n,
        p,
        alpha: alpha.cloned(),
        adj,
        ctx,
        items: found.iter().map(|x| x.0).collect(),
        plus: found.iter().map(|x| x.1).collect(),
    })
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        parent[hi] = lo;
    }
}

/// Orbits of an [`InvolutionSet`] under conjugation by `Sp(2n, p)` and `A ~ -A`.
#[derive(Clone, Debug)]
pub struct Partition {
    pub table: ClassCountTable,
    /// Orbit index (into `table.classes`) of every item.
    pub orbit_of: Vec<usize>,
    /// Distinct orbits of one type always carry distinct invariants.
    pub invariants_complete: bool,
}

type InvariantKey = (InvType, Option<(usize, usize)>, SquareClass);

pub fn partition_classes(set: &InvolutionSet, group: &GroupEnumeration) -> Result<Partition> {
    let p = set.p;
    let pp = p as u32;
    let index: HashMap<u64, usize> = set
        .items
        .iter()
        .enumerate()
        .map(|(i, m)| (m.key(p), i))
        .collect();
    let conj: Vec<(Small, Small)> = group
        .generators
        .iter()
        .map(|g| {
            let inv = Small::from_mat(&g.to_mat(&group.ctx).inverse().expect("invertible"), p);
            (*g, inv)
        })
        .collect();
    let neighbours: Vec<Vec<usize>> = set
        .items
        .par_iter()
        .map(|m| {
            let mut out: Vec<usize> = conj
                .iter()
                .map(|(g, gi)| gi.mul(m, pp).mul(g, pp))
                .chain(std::iter::once(m.scale(pp - 1, pp)))
                .map(|c| index[&c.key(p)])
                .collect();
            out.sort_unstable();
            out.dedup();
            out
        })
        .collect();
    let mut parent: Vec<usize> = (0..set.len()).collect();
    for (i, ns) in neighbours.iter().enumerate() {
        for &j in ns {
            union(&mut parent, i, j);
        }
    }
    let mut root_to_orbit: HashMap<usize, usize> = HashMap::new();
    let mut orbit_of = vec![0; set.len()];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for i in 0..set.len() {
        let r = find(&mut parent, i);
        let o = *root_to_orbit.entry(r).or_insert_with(|| {
            members.push(Vec::new());
            members.len() - 1
        });
        orbit_of[i] = o;
        members[o].push(i);
    }

    let keys: Vec<InvariantKey> = (0..set.len())
        .into_par_iter()
        .map(|i| {
            let r = classify(&set.matrix(i))?;
            if r.inv_type != set.inv_type(i) {
                return Err(Error::SelfCheck(format!(
                    "enumerated matrix {i} classified as Type {} instead of Type {}",
                    r.inv_type,
                    set.inv_type(i)
                )));
            }
            Ok((r.inv_type, r.unordered_dims(), r.alpha_class))
        })
        .collect::<Result<_>>()?;

    let mut classes = Vec::with_capacity(members.len());
    for ms in &members {
        let k0 = &keys[ms[0]];
        if ms.iter().any(|&i| keys[i] != *k0) {
            return Err(Error::SelfCheck(
                "classification invariants vary inside one orbit".into(),
            ));
        }
        classes.push(ClassSummary {
            inv_type: k0.0,
            size: ms.len(),
            witness: set.matrix(ms[0]),
            dim_pair: k0.1,
            alpha_class: k0.2.clone(),
        });
    }
    let mut seen_keys: Vec<&InvariantKey> = members.iter().map(|ms| &keys[ms[0]]).collect();
    let total = seen_keys.len();
    seen_keys.sort_by_key(|a| (a.0, a.1));
    seen_keys.dedup();
    let invariants_complete = seen_keys.len() == total;

    let count = |t: InvType| classes.iter().filter(|c| c.inv_type == t).count() as u64;
    let present: Vec<InvType> = match set.alpha {
        None => vec![InvType::T1, InvType::T3],
        Some(_) => vec![InvType::T2, InvType::T4],
    };
    let counts = [InvType::T1, InvType::T2, InvType::T3, InvType::T4].map(|t| {
        if present.contains(&t) {
            ClassCount::Exact(count(t))
        } else {
            ClassCount::Exact(0)
        }
    });
    Ok(Partition {
        table: ClassCountTable {
            n: set.n,
            source: CountSource::Enumeration,
            counts,
            classes,
        },
        orbit_of,
        invariants_complete,
    })
}

/// How an enumerated count compares with its formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormulaStatus {
    /// An exact formula that matches.
    Confirmed,
    /// A bound whose conjectured equality holds at this `(n, p)`.
    ConfirmedAt {
        n: usize,
        p: u64,
    },
    /// The bound holds but is not attained.
    BoundOnly,
    Violated,
}

impl std::fmt::Display for FormulaStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FormulaStatus::Confirmed => write!(f, "CONFIRMED"),
            FormulaStatus::ConfirmedAt { n, p } => write!(f, "CONFIRMED-AT-(n={n},p={p})"),
            FormulaStatus::BoundOnly => write!(f, "BOUND-ONLY"),
            FormulaStatus::Violated => write!(f, "VIOLATED"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CountRow {
    pub inv_type: InvType,
    pub formula: ClassCount,
    pub observed: u64,
    pub status: FormulaStatus,
}

#[derive(Clone, Debug)]
pub struct CountReport {
    pub n: usize,
    pub p: u64,
    pub group_order: usize,
    /// The nonsquare used for the Type 2/4 coset.
    pub alpha: Scalar,
    pub rows: Vec<CountRow>,
    pub classes: Vec<ClassSummary>,
    pub invariants_complete: bool,
}

impl CountReport {
    pub fn all_hold(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.status != FormulaStatus::Violated)
    }
}

fn judge(formula: ClassCount, observed: u64, n: usize, p: u64) -> FormulaStatus {
    match formula {
        ClassCount::Exact(v) if v == observed => FormulaStatus::Confirmed,
        ClassCount::Exact(_) => FormulaStatus::Violated,
        ClassCount::AtMost(b) if observed == b => FormulaStatus::ConfirmedAt { n, p },
        ClassCount::AtMost(b) if observed < b => FormulaStatus::BoundOnly,
        ClassCount::AtMost(_) => FormulaStatus::Violated,
        ClassCount::Unbounded => FormulaStatus::BoundOnly,
    }
}

/// Enumerate both the group and the coset of the least nonsquare, and
/// compare the class counts with [`count_formulas`].
pub fn verify_counts(n: usize, p: u64) -> Result<CountReport> {
    let group = enumerate_group(n, p)?;
    let ctx = group.ctx.clone();
    let nu = (2..p as i64)
        .map(|x| ctx.int(x))
        .find(|x| !ctx.is_square(x))
        .expect("odd prime has a nonsquare");
    let plain = partition_classes(&enumerate_involutions(&group, None)?, &group)?;
    let coset = partition_classes(&enumerate_involutions(&group, Some(&nu))?, &group)?;
    let formulas = count_formulas(n, &ctx);
    let rows = [InvType::T1, InvType::T2, InvType::T3, InvType::T4]
        .into_iter()
        .map(|t| {
            let observed = match (plain.table.get(t), coset.table.get(t)) {
                (ClassCount::Exact(a), ClassCount::Exact(b)) => a + b,
                _ => unreachable!("enumeration counts are exact"),
            };
            let formula = formulas.get(t);
            CountRow {
                inv_type: t,
                formula,
                observed,
                status: judge(formula, observed, n, p),
            }
        })
        .collect();
    let mut classes = plain.table.classes;
    classes.extend(coset.table.classes);
    classes.sort_by_key(|c| c.inv_type);
    Ok(CountReport {
        n,
        p,
        group_order: group.order(),
        alpha: nu,
        rows,
        classes,
        invariants_complete: plain.invariants_complete && coset.invariants_complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_formula() {
        assert_eq!(group_order(1, 3), 24);
        assert_eq!(group_order(1, 5), 120);
        assert_eq!(group_order(2, 3), 51840);
    }

    #[test]
    fn small_groups() {
        assert_eq!(enumerate_group(1, 3).unwrap().order(), 24);
        assert_eq!(enumerate_group(1, 5).unwrap().order(), 120);
        assert!(matches!(enumerate_group(3, 3), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn sp2_f3_type3_set() {
        let g = enumerate_group(1, 3).unwrap();
        let s = enumerate_involutions(&g, None).unwrap();
        assert_eq!(s.len(), 6);
        assert!((0..6).all(|i| s.inv_type(i) == InvType::T3));
        let part = partition_classes(&s, &g).unwrap();
        assert_eq!(part.table.classes.len(), 1);
        assert_eq!(part.table.classes[0].size, 6);
    }

    #[test]
    fn square_alpha_rejected() {
        let g = enumerate_group(1, 5).unwrap();
        let f5 = g.ctx().clone();
        assert!(matches!(
            enumerate_involutions(&g, Some(&f5.int(4))),
            Err(Error::SquareDiscriminant(_))
        ));
    }
}
