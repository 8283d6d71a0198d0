//! Integer number theory backing the square-class and norm decisions.
//!
//! Everything here works on exact integers. Factorisation is trial division,
//! which is plenty for the matrix sizes this crate handles.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Euler criterion: `1` for nonzero squares, `p - 1` for nonsquares, `0` for zero.
pub(crate) fn euler(x: u64, p: u64) -> u64 {
    pow_mod(x % p, (p - 1) / 2, p)
}

pub(crate) fn is_square_mod(x: u64, p: u64) -> bool {
    x.is_multiple_of(p) || euler(x, p) == 1
}

pub(crate) fn least_nonsquare(p: u64) -> u64 {
    (2..p)
        .find(|&x| !is_square_mod(x, p))
        .expect("odd prime has a nonsquare")
}

/// Tonelli-Shanks; returns the smaller of the two roots.
pub(crate) fn sqrt_mod(x: u64, p: u64) -> Option<u64> {
    let x = x % p;
    if x == 0 {
        return Some(0);
    }
    if !is_square_mod(x, p) {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let z = least_nonsquare(p);
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(x, q, p);
    let mut r = pow_mod(x, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0u32;
        let mut tt = t;
        while tt != 1 {
            tt = tt * tt % p;
            i += 1;
        }
        let b = pow_mod(c, 1u64 << (m - i - 1), p);
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    Some(r.min(p - r))
}

pub(crate) fn inv_mod(x: u64, p: u64) -> Option<u64> {
    if x.is_multiple_of(p) {
        None
    } else {
        Some(pow_mod(x, p - 2, p))
    }
}

pub(crate) fn isqrt_exact(n: &BigUint) -> Option<BigUint> {
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Prime factorisation of a positive integer as (prime, exponent) pairs.
pub(crate) fn factor(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut out = Vec::new();
    let mut rest = n.clone();
    if rest.is_zero() {
        return out;
    }
    let two = BigUint::from(2u32);
    let mut e = 0;
    while rest.is_even() {
        rest /= &two;
        e += 1;
    }
    if e > 0 {
        out.push((two, e));
    }
    let mut d = BigUint::from(3u32);
    while &d * &d <= rest {
        let mut e = 0;
        while (&rest % &d).is_zero() {
            rest /= &d;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += 2u32;
    }
    if !rest.is_one() {
        out.push((rest, 1));
    }
    out
}

/// Squarefree kernel of a nonzero integer, sign preserved.
pub(crate) fn squarefree_part(n: &BigInt) -> BigInt {
    assert!(!n.is_zero());
    let mag = n.magnitude();
    let mut core = BigUint::one();
    for (q, e) in factor(mag) {
        if e % 2 == 1 {
            core *= q;
        }
    }
    BigInt::from_biguint(
        if n.is_negative() {
            Sign::Minus
        } else {
            Sign::Plus
        },
        core,
    )
}

/// Is the positive integer a sum of two integer squares?
pub(crate) fn is_sum_of_two_squares(n: &BigUint) -> bool {
    factor(n)
        .iter()
        .all(|(q, e)| (q % 4u32) != BigUint::from(3u32) || e % 2 == 0)
}

/// Least `x` with `n - x^2` a perfect square, returned as `(x, y)`.
pub(crate) fn two_squares(n: &BigUint) -> Option<(BigUint, BigUint)> {
    if !is_sum_of_two_squares(n) {
        return None;
    }
    let mut x = BigUint::zero();
    loop {
        let xx = &x * &x;
        if xx > *n {
            return None;
        }
        if let Some(y) = isqrt_exact(&(n - &xx)) {
            return Some((x, y));
        }
        x += 1u32;
    }
}

fn legendre_big(a: &BigInt, p: &BigUint) -> i32 {
    let pm = BigInt::from(p.clone());
    let r = a.mod_floor(&pm);
    if r.is_zero() {
        return 0;
    }
    let e = (&pm - 1) / 2;
    let v = r.modpow(&e, &pm);
    if v.is_one() {
        1
    } else {
        -1
    }
}

fn valuation(n: &BigInt, p: &BigUint) -> (u32, BigInt) {
    let pm = BigInt::from(p.clone());
    let mut v = 0;
    let mut rest = n.clone();
    while (&rest % &pm).is_zero() {
        rest /= &pm;
        v += 1;
    }
    (v, rest)
}

/// Hilbert symbol `(a, b)_p` for nonzero integers at a finite prime.
pub(crate) fn hilbert_symbol(a: &BigInt, b: &BigInt, p: &BigUint) -> i32 {
    let (alpha, u) = valuation(a, p);
    let (beta, v) = valuation(b, p);
    if *p == BigUint::from(2u32) {
        let eps = |x: &BigInt| -> u32 {
            let m = x.mod_floor(&BigInt::from(4)).to_u32().unwrap();
            if m == 3 {
                1
            } else {
                0
            }
        };
        let omega = |x: &BigInt| -> u32 {
            let m = x.mod_floor(&BigInt::from(8)).to_u32().unwrap();
            if m == 3 || m == 5 {
                1
            } else {
                0
            }
        };
        let e = eps(&u) * eps(&v) + alpha * omega(&v) + beta * omega(&u);
        if e % 2 == 0 {
            1
        } else {
            -1
        }
    } else {
        let eps = ((p - 1u32) / 2u32 % 2u32).to_u32().unwrap();
        let mut s = if (alpha * beta * eps).is_multiple_of(2) {
            1
        } else {
            -1
        };
        if beta % 2 == 1 {
            s *= legendre_big(&u, p);
        }
        if alpha % 2 == 1 {
            s *= legendre_big(&v, p);
        }
        s
    }
}

/// Does `x^2 - b y^2 = a z^2` have a nontrivial rational solution?
///
/// Equivalently: is `a` a norm from `Q(sqrt(b))`. Decided by the local
/// Hilbert symbols at infinity and at every prime dividing `2ab`.
pub(crate) fn is_rational_norm(a: &BigInt, b: &BigInt) -> bool {
    let a = squarefree_part(a);
    let b = squarefree_part(b);
    if a.is_negative() && b.is_negative() {
        return false;
    }
    let mut primes: Vec<BigUint> = vec![BigUint::from(2u32)];
    for (q, _) in factor(a.magnitude())
        .into_iter()
        .chain(factor(b.magnitude()))
    {
        if !primes.contains(&q) {
            primes.push(q);
        }
    }
    primes.iter().all(|p| hilbert_symbol(&a, &b, p) == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_mod_picks_smaller_root() {
        assert_eq!(sqrt_mod(2, 7), Some(3));
        assert_eq!(sqrt_mod(4, 5), Some(2));
        assert_eq!(sqrt_mod(3, 7), None);
        for p in [3u64, 5, 7, 11, 13, 17, 97, 101] {
            for x in 0..p {
                match sqrt_mod(x, p) {
                    Some(r) => assert_eq!(r * r % p, x),
                    None => assert!((0..p).all(|r| r * r % p != x)),
                }
            }
        }
    }

    #[test]
    fn squarefree() {
        assert_eq!(squarefree_part(&BigInt::from(8)), BigInt::from(2));
        assert_eq!(squarefree_part(&BigInt::from(-12)), BigInt::from(-3));
        assert_eq!(squarefree_part(&BigInt::from(49)), BigInt::from(1));
    }

    #[test]
    fn hilbert_symbol_matches_brute_force_for_small_values() {
        // a is a norm from Q(sqrt b) iff a = x^2 - b y^2 over Q; spot-check by search.
        let found = |a: i64, b: i64| {
            for z in 1..40i64 {
                for y in 0..40i64 {
                    let rhs = a * z * z + b * y * y;
                    if rhs >= 0 {
                        let r = (rhs as f64).sqrt().round() as i64;
                        if r * r == rhs && (r != 0 || y != 0) {
                            return true;
                        }
                    }
                }
            }
            false
        };
        for a in [-7i64, -6, -5, -3, -2, -1, 1, 2, 3, 5, 6, 7, 10, 21] {
            for b in [-3i64, -2, -1, 2, 3, 5] {
                let decided = is_rational_norm(&BigInt::from(a), &BigInt::from(b));
                if found(a, b) {
                    assert!(decided, "a={a} b={b}");
                }
                if decided {
                    assert!(found(a, b), "search missed a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn two_squares_least() {
        assert_eq!(
            two_squares(&BigUint::from(25u32)),
            Some((BigUint::zero(), BigUint::from(5u32)))
        );
        assert_eq!(two_squares(&BigUint::from(3u32)), None);
        assert_eq!(
            two_squares(&BigUint::from(2u32)),
            Some((BigUint::one(), BigUint::one()))
        );
    }
}
