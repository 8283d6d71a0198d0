//! Exact scalars: the rationals, prime fields of odd characteristic, a
//! rational "real model" whose square classes are decided by sign, and a
//! single quadratic extension `k[sqrt(alpha)]` on top of any of them.

pub(crate) mod arith;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Residue modulo an odd prime. Always reduced into `0..modulus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    pub fn new(value: i64, modulus: u64) -> Self {
        let m = modulus as i64;
        Residue {
            value: value.rem_euclid(m) as u64,
            modulus,
        }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

/// A base-field element. Rationals and the real model share the
/// `Rational` variant; prime fields use `Residue`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue(Residue),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue(r) => r.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue(r) => r.value == 1,
        }
    }

    /// Same field, different value.
    pub fn with_int(&self, v: i64) -> Scalar {
        match self {
            Scalar::Rational(_) => Scalar::Rational(BigRational::from_integer(v.into())),
            Scalar::Residue(r) => Scalar::Residue(Residue::new(v, r.modulus)),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(q) if !q.is_zero() => Some(Scalar::Rational(q.recip())),
            Scalar::Residue(r) => arith::inv_mod(r.value, r.modulus).map(|v| {
                Scalar::Residue(Residue {
                    value: v,
                    modulus: r.modulus,
                })
            }),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::Residue(_) => None,
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = self.with_int(1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

fn mismatch() -> ! {
    panic!("scalars from different base fields combined")
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue(a), Scalar::Residue(b)) if a.modulus == b.modulus => {
                Scalar::Residue(Residue {
                    value: (a.value + b.value) % a.modulus,
                    modulus: a.modulus,
                })
            }
            _ => mismatch(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Residue(a), Scalar::Residue(b)) if a.modulus == b.modulus => {
                Scalar::Residue(Residue {
                    value: (a.value + a.modulus - b.value) % a.modulus,
                    modulus: a.modulus,
                })
            }
            _ => mismatch(),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue(a), Scalar::Residue(b)) if a.modulus == b.modulus => {
                Scalar::Residue(Residue {
                    value: a.value * b.value % a.modulus,
                    modulus: a.modulus,
                })
            }
            _ => mismatch(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue(a) => Scalar::Residue(Residue {
                value: (a.modulus - a.value) % a.modulus,
                modulus: a.modulus,
            }),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Residue(r) => write!(f, "{}", r.value),
        }
    }
}

/// `a + b*sqrt(alpha)`; `b` is zero whenever no extension is in play.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVal {
    pub a: Scalar,
    pub b: Scalar,
}

impl FVal {
    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_base(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_pure_root(&self) -> bool {
        self.a.is_zero()
    }

    /// The `sqrt(alpha)`-conjugate `a - b*sqrt(alpha)`.
    pub fn conj(&self) -> FVal {
        FVal {
            a: self.a.clone(),
            b: -&self.b,
        }
    }
}

impl Add for &FVal {
    type Output = FVal;
    fn add(self, rhs: &FVal) -> FVal {
        FVal {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &FVal {
    type Output = FVal;
    fn sub(self, rhs: &FVal) -> FVal {
        FVal {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Neg for &FVal {
    type Output = FVal;
    fn neg(self) -> FVal {
        FVal {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    PrimeField(u64),
    /// Rational arithmetic; square classes decided by sign as in the reals.
    RealModel,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rationals => write!(f, "rationals"),
            FieldKind::PrimeField(p) => write!(f, "fp {p}"),
            FieldKind::RealModel => write!(f, "real"),
        }
    }
}

/// Canonical representative of a coset of `k*/(k*)^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquareClass {
    pub rep: Scalar,
}

impl SquareClass {
    pub fn is_trivial(&self) -> bool {
        self.rep.is_one()
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

/// A base field, optionally with one adjoined square root.
///
/// When `ext` is present it holds the canonical square-class
/// representative of a nonsquare.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    kind: FieldKind,
    ext: Option<Scalar>,
}

/// How `sqrt(alpha_user)` maps into a canonical field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootImage {
    /// `alpha_user` was a square: `sqrt(alpha_user) = r` in the base field.
    Folded(Scalar),
    /// `sqrt(alpha_user) = c * sqrt(alpha)` with `alpha` canonical.
    Scaled(Scalar),
}

/// A field produced by adjoining an arbitrary `sqrt(alpha_user)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjoined {
    pub ctx: FieldCtx,
    pub image: RootImage,
}

impl Adjoined {
    /// Map `a + b*sqrt(alpha_user)` into `ctx`.
    pub fn value(&self, a: Scalar, b: Scalar) -> FVal {
        match &self.image {
            RootImage::Folded(r) => FVal {
                a: &a + &(&b * r),
                b: a.with_int(0),
            },
            RootImage::Scaled(c) => FVal { b: &b * c, a },
        }
    }
}

impl FieldCtx {
    pub fn rationals() -> Self {
        FieldCtx {
            kind: FieldKind::Rationals,
            ext: None,
        }
    }

    pub fn real_model() -> Self {
        FieldCtx {
            kind: FieldKind::RealModel,
            ext: None,
        }
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        if p == 2 || !arith::is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::NotOddPrime(p));
        }
        Ok(FieldCtx {
            kind: FieldKind::PrimeField(p),
            ext: None,
        })
    }

    pub fn from_kind(kind: FieldKind) -> Result<Self> {
        match kind {
            FieldKind::Rationals => Ok(Self::rationals()),
            FieldKind::RealModel => Ok(Self::real_model()),
            FieldKind::PrimeField(p) => Self::prime_field(p),
        }
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn ext_disc(&self) -> Option<&Scalar> {
        self.ext.as_ref()
    }

    /// The same base field with no extension.
    pub fn base(&self) -> FieldCtx {
        FieldCtx {
            kind: self.kind,
            ext: None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.kind, FieldKind::PrimeField(_))
    }

    /// `k[sqrt(alpha)]` for a canonical nonsquare `alpha`.
    pub fn extension(&self, alpha: &Scalar) -> Result<FieldCtx> {
        let class = self.square_class(alpha)?;
        if class.is_trivial() {
            return Err(Error::SquareDiscriminant(alpha.to_string()));
        }
        if class.rep != *alpha {
            return Err(Error::Dimension(format!(
                "extension discriminant {alpha} is not canonical (use {})",
                class.rep
            )));
        }
        Ok(FieldCtx {
            kind: self.kind,
            ext: Some(alpha.clone()),
        })
    }

    /// Adjoin `sqrt(alpha)` for any nonzero `alpha`, folding squares into
    /// the base field and rescaling to the canonical representative.
    pub fn adjoin(&self, alpha: &Scalar) -> Result<Adjoined> {
        let base = self.base();
        let class = base.square_class(alpha)?;
        if class.is_trivial() {
            let r = base
                .sqrt_in_base(alpha)
                .ok_or_else(|| Error::IrrationalRoot(alpha.to_string()))?;
            return Ok(Adjoined {
                ctx: base,
                image: RootImage::Folded(r),
            });
        }
        let ratio = alpha * &class.rep.inv().expect("nonzero representative");
        let c = base
            .sqrt_in_base(&ratio)
            .ok_or_else(|| Error::IrrationalRoot(ratio.to_string()))?;
        Ok(Adjoined {
            ctx: base.extension(&class.rep)?,
            image: RootImage::Scaled(c),
        })
    }

    pub fn int(&self, v: i64) -> Scalar {
        match self.kind {
            FieldKind::PrimeField(p) => Scalar::Residue(Residue::new(v, p)),
            _ => Scalar::Rational(BigRational::from_integer(v.into())),
        }
    }

    /// `num/den`; panics on a zero denominator.
    pub fn frac(&self, num: i64, den: i64) -> Scalar {
        assert!(den != 0, "zero denominator");
        match self.kind {
            FieldKind::PrimeField(_) => {
                &self.int(num) * &self.int(den).inv().expect("denominator divisible by p")
            }
            _ => Scalar::Rational(BigRational::new(num.into(), den.into())),
        }
    }

    pub fn rational(&self, q: BigRational) -> Scalar {
        match self.kind {
            FieldKind::PrimeField(p) => {
                let pm = BigInt::from(p);
                let n = q.numer().mod_floor(&pm).to_i64().unwrap();
                let d = q.denom().mod_floor(&pm).to_i64().unwrap();
                &self.int(n) * &self.int(d).inv().expect("denominator divisible by p")
            }
            _ => Scalar::Rational(q),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    pub fn lift(&self, a: Scalar) -> FVal {
        FVal { b: self.zero(), a }
    }

    pub fn val(&self, a: Scalar, b: Scalar) -> FVal {
        FVal { a, b }
    }

    pub fn fint(&self, v: i64) -> FVal {
        self.lift(self.int(v))
    }

    /// `sqrt(alpha)` itself; panics without an extension.
    pub fn root(&self) -> FVal {
        assert!(self.ext.is_some(), "no extension in play");
        FVal {
            a: self.zero(),
            b: self.one(),
        }
    }

    pub fn mul(&self, x: &FVal, y: &FVal) -> FVal {
        if x.b.is_zero() && y.b.is_zero() {
            return FVal {
                a: &x.a * &y.a,
                b: self.zero(),
            };
        }
        let alpha = self.ext.as_ref().expect("extension value in base field");
        let bd = &x.b * &y.b;
        FVal {
            a: &(&x.a * &y.a) + &(alpha * &bd),
            b: &(&x.a * &y.b) + &(&x.b * &y.a),
        }
    }

    pub fn scale(&self, c: &Scalar, x: &FVal) -> FVal {
        FVal {
            a: c * &x.a,
            b: c * &x.b,
        }
    }

    /// Field norm `a^2 - alpha*b^2` down to the base field.
    pub fn norm(&self, x: &FVal) -> Scalar {
        if x.b.is_zero() {
            return &x.a * &x.a;
        }
        let alpha = self.ext.as_ref().expect("extension value in base field");
        &(&x.a * &x.a) - &(alpha * &(&x.b * &x.b))
    }

    pub fn inv(&self, x: &FVal) -> Option<FVal> {
        let n = self.norm(x).inv()?;
        Some(FVal {
            a: &x.a * &n,
            b: -&(&x.b * &n),
        })
    }

    pub fn square_class(&self, x: &Scalar) -> Result<SquareClass> {
        if x.is_zero() {
            return Err(Error::NotAUnit);
        }
        let rep = match (self.kind, x) {
            (FieldKind::Rationals, Scalar::Rational(q)) => {
                let n = q.numer() * q.denom();
                Scalar::Rational(BigRational::from_integer(arith::squarefree_part(&n)))
            }
            (FieldKind::RealModel, Scalar::Rational(q)) => {
                self.int(if q.is_negative() { -1 } else { 1 })
            }
            (FieldKind::PrimeField(p), Scalar::Residue(r)) => {
                if arith::is_square_mod(r.value, p) {
                    self.one()
                } else {
                    self.int(arith::least_nonsquare(p) as i64)
                }
            }
            _ => mismatch(),
        };
        Ok(SquareClass { rep })
    }

    pub fn is_square(&self, x: &Scalar) -> bool {
        x.is_zero()
            || self
                .square_class(x)
                .map(|c| c.is_trivial())
                .unwrap_or(false)
    }

    /// Number of square classes, `None` when infinite.
    pub fn square_class_count(&self) -> Option<u64> {
        match self.kind {
            FieldKind::Rationals => None,
            _ => Some(2),
        }
    }

    /// Deterministic square root inside the base field: the nonnegative root
    /// for rationals and the real model (which only has rational roots), the
    /// smaller residue for prime fields.
    pub fn sqrt_in_base(&self, x: &Scalar) -> Option<Scalar> {
        match x {
            Scalar::Rational(q) => {
                if q.is_negative() {
                    return None;
                }
                let n = arith::isqrt_exact(q.numer().magnitude())?;
                let d = arith::isqrt_exact(q.denom().magnitude())?;
                Some(Scalar::Rational(BigRational::new(n.into(), d.into())))
            }
            Scalar::Residue(r) => arith::sqrt_mod(r.value, r.modulus).map(|v| {
                Scalar::Residue(Residue {
                    value: v,
                    modulus: r.modulus,
                })
            }),
        }
    }

    /// `(a, b)` with `a^2 + b^2 = c`, or `None` when no base-field solution exists.
    pub fn sum_of_two_squares(&self, c: &Scalar) -> Option<(Scalar, Scalar)> {
        match (self.kind, c) {
            (FieldKind::PrimeField(p), Scalar::Residue(_)) => (0..p as i64).find_map(|a| {
                let a = self.int(a);
                let rest = c - &(&a * &a);
                self.sqrt_in_base(&rest).map(|b| (a, b))
            }),
            (_, Scalar::Rational(q)) => {
                if !q.is_positive() {
                    return None;
                }
                let half = Scalar::Rational(q / BigRational::from_integer(2.into()));
                if let Some(r) = self.sqrt_in_base(&half) {
                    return Some((r.clone(), r));
                }
                let n: BigUint = (q.numer() * q.denom()).to_biguint()?;
                let (x, y) = arith::two_squares(&n)?;
                let d = q.denom().clone();
                Some((
                    Scalar::Rational(BigRational::new(x.into(), d.clone())),
                    Scalar::Rational(BigRational::new(y.into(), d)),
                ))
            }
            _ => mismatch(),
        }
    }

    /// Is `c = p^2 + alpha*s^2` solvable with `p, s` in the base field?
    pub fn is_norm(&self, c: &Scalar, alpha: &Scalar) -> bool {
        if c.is_zero() {
            return true;
        }
        match (c, alpha) {
            (Scalar::Residue(_), _) => true,
            (Scalar::Rational(cq), Scalar::Rational(aq)) if self.kind == FieldKind::RealModel => {
                !aq.is_positive() || cq.is_positive()
            }
            (Scalar::Rational(cq), Scalar::Rational(aq)) => {
                let ci = cq.numer() * cq.denom();
                let ai = -(aq.numer() * aq.denom());
                arith::is_rational_norm(&ci, &ai)
            }
            _ => mismatch(),
        }
    }

    /// `(p, s)` with `p^2 + alpha*s^2 = c`. Exhaustive for prime fields and
    /// for `alpha = 1`; a bounded search otherwise, attempted only after the
    /// local-global test says a solution exists.
    pub fn represent_norm(&self, c: &Scalar, alpha: &Scalar) -> Option<(Scalar, Scalar)> {
        if alpha.is_one() {
            return self.sum_of_two_squares(c);
        }
        match (self.kind, c, alpha) {
            (FieldKind::PrimeField(p), _, _) => (0..p as i64).find_map(|s| {
                let s = self.int(s);
                let rest = c - &(alpha * &(&s * &s));
                self.sqrt_in_base(&rest).map(|r| (r, s))
            }),
            (_, Scalar::Rational(cq), Scalar::Rational(aq)) => {
                if !self.is_norm(c, alpha) {
                    return None;
                }
                rational_norm_search(cq, aq)
            }
            _ => mismatch(),
        }
    }

    /// Sign of a rational (the real-model order); `None` in prime fields.
    pub fn sign(&self, x: &Scalar) -> Option<Ordering> {
        x.as_rational().map(|q| q.cmp(&BigRational::zero()))
    }
}

const NORM_SEARCH_Z: i64 = 24;
const NORM_SEARCH_Y: i64 = 400;

fn rational_norm_search(c: &BigRational, alpha: &BigRational) -> Option<(Scalar, Scalar)> {
    // alpha = a0 * t^2 with a0 a squarefree integer, so s = y' / t.
    let a_int = alpha.numer() * alpha.denom();
    let a0 = arith::squarefree_part(&a_int);
    let t = {
        let ratio = alpha / BigRational::from_integer(a0.clone());
        let n = arith::isqrt_exact(ratio.numer().magnitude())?;
        let d = arith::isqrt_exact(ratio.denom().magnitude())?;
        BigRational::new(n.into(), d.into())
    };
    let md = c.numer() * c.denom();
    for z in 1..=NORM_SEARCH_Z {
        let target = &md * BigInt::from(z * z);
        for y in 0..=NORM_SEARCH_Y {
            let rem = &target - &a0 * BigInt::from(y * y);
            if rem.is_negative() {
                break;
            }
            if let Some(x) = arith::isqrt_exact(rem.magnitude()) {
                let den = c.denom() * BigInt::from(z);
                let p = BigRational::new(x.into(), den.clone());
                let s = BigRational::new(BigInt::from(y), den) / &t;
                return Some((Scalar::Rational(p), Scalar::Rational(s)));
            }
        }
    }
    None
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.ext {
            None => write!(f, "{}", self.kind),
            Some(a) => write!(f, "{} alpha {}", self.kind, a),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_class_examples() {
        let q = FieldCtx::rationals();
        assert_eq!(q.square_class(&q.int(8)).unwrap().rep, q.int(2));
        let f7 = FieldCtx::prime_field(7).unwrap();
        assert_eq!(f7.square_class(&f7.int(3)).unwrap().rep, f7.int(3));
        let r = FieldCtx::real_model();
        assert_eq!(r.square_class(&r.int(-5)).unwrap().rep, r.int(-1));
        assert_eq!(q.square_class(&q.zero()), Err(Error::NotAUnit));
        assert_eq!(q.square_class(&q.frac(-3, 12)).unwrap().rep, q.int(-1));
    }

    #[test]
    fn sqrt_examples() {
        let q = FieldCtx::rationals();
        assert_eq!(q.sqrt_in_base(&q.frac(9, 4)), Some(q.frac(3, 2)));
        assert_eq!(q.sqrt_in_base(&q.int(2)), None);
        let f7 = FieldCtx::prime_field(7).unwrap();
        assert_eq!(f7.sqrt_in_base(&f7.int(2)), Some(f7.int(3)));
    }

    #[test]
    fn sum_of_two_squares_examples() {
        let f5 = FieldCtx::prime_field(5).unwrap();
        assert_eq!(
            f5.sum_of_two_squares(&f5.int(2)),
            Some((f5.int(1), f5.int(1)))
        );
        let f7 = FieldCtx::prime_field(7).unwrap();
        assert_eq!(
            f7.sum_of_two_squares(&f7.int(3)),
            Some((f7.int(1), f7.int(3)))
        );
        let q = FieldCtx::rationals();
        assert_eq!(
            q.sum_of_two_squares(&q.frac(1, 2)),
            Some((q.frac(1, 2), q.frac(1, 2)))
        );
        assert_eq!(q.sum_of_two_squares(&q.int(3)), None);
        let (a, b) = q.sum_of_two_squares(&q.frac(13, 9)).unwrap();
        assert_eq!(&(&a * &a) + &(&b * &b), q.frac(13, 9));
        let r = FieldCtx::real_model();
        assert_eq!(r.sum_of_two_squares(&r.int(-1)), None);
    }

    #[test]
    fn rejects_even_and_composite_moduli() {
        assert_eq!(FieldCtx::prime_field(2), Err(Error::NotOddPrime(2)));
        assert_eq!(FieldCtx::prime_field(9), Err(Error::NotOddPrime(9)));
    }

    #[test]
    fn adjoin_folds_squares_and_rescales() {
        let q = FieldCtx::rationals();
        let sq = q.adjoin(&q.int(9)).unwrap();
        assert_eq!(sq.ctx, q);
        // 1 + 2*sqrt(9) = 7
        assert_eq!(sq.value(q.int(1), q.int(2)), q.fint(7));
        let ext = q.adjoin(&q.int(8)).unwrap();
        assert_eq!(ext.ctx.ext_disc(), Some(&q.int(2)));
        // sqrt(8) = 2 sqrt(2)
        assert_eq!(ext.value(q.zero(), q.one()), q.val(q.zero(), q.int(2)));
        let real = FieldCtx::real_model();
        assert!(matches!(
            real.adjoin(&real.int(2)),
            Err(Error::IrrationalRoot(_))
        ));
    }

    #[test]
    fn extension_inverse_and_conjugation() {
        let q = FieldCtx::rationals()
            .extension(&FieldCtx::rationals().int(2))
            .unwrap();
        let x = q.val(q.int(1), q.int(1));
        let y = q.inv(&x).unwrap();
        assert_eq!(q.mul(&x, &y), q.fint(1));
        assert_eq!(q.mul(&x, &x.conj()), q.fint(-1));
    }

    #[test]
    fn norm_representation() {
        let f5 = FieldCtx::prime_field(5).unwrap();
        let (p, s) = f5.represent_norm(&f5.int(3), &f5.int(2)).unwrap();
        assert_eq!(&(&p * &p) + &(&f5.int(2) * &(&s * &s)), f5.int(3));
        let q = FieldCtx::rationals();
        // 3 = 1 + 2*1
        let (p, s) = q.represent_norm(&q.int(3), &q.int(2)).unwrap();
        assert_eq!(&(&p * &p) + &(&q.int(2) * &(&s * &s)), q.int(3));
        // 5 = p^2 + 2 s^2 has no rational solution
        assert!(!q.is_norm(&q.int(5), &q.int(2)));
        assert_eq!(q.represent_norm(&q.int(5), &q.int(2)), None);
        assert!(q.is_norm(&q.int(-1), &q.int(-1)));
    }
}
