use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use spinvol::cli::format::{parse_document, print_document};
use spinvol::involution::*;
use spinvol::symplectic::skew_normalize;
use spinvol::{FVal, FieldCtx, Mat, Scalar, SympSpace};

fn field() -> impl Strategy<Value = FieldCtx> {
    prop_oneof![
        Just(FieldCtx::rationals()),
        Just(FieldCtx::prime_field(3).unwrap()),
        Just(FieldCtx::prime_field(5).unwrap()),
        Just(FieldCtx::prime_field(7).unwrap()),
        Just(FieldCtx::prime_field(101).unwrap()),
    ]
}

fn small_frac() -> impl Strategy<Value = (i64, i64)> {
    (-30i64..=30, 1i64..=12)
}

fn scalar(ctx: &FieldCtx, (p, q): (i64, i64)) -> Scalar {
    if let spinvol::FieldKind::PrimeField(m) = ctx.kind() {
        if (q as u64).is_multiple_of(m) {
            return ctx.int(p);
        }
    }
    ctx.frac(p, q)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn extension_arithmetic(
        x in (small_frac(), small_frac()),
        y in (small_frac(), small_frac()),
        z in (small_frac(), small_frac()),
        alpha in prop_oneof![Just(2i64), Just(-1), Just(3), Just(-5), Just(7)],
    ) {
        let q = FieldCtx::rationals();
        let ext = q.extension(&q.square_class(&q.int(alpha)).unwrap().rep).unwrap();
        let v = |(a, b): ((i64, i64), (i64, i64))| ext.val(scalar(&q, a), scalar(&q, b));
        let (x, y, z) = (v(x), v(y), v(z));
        prop_assert_eq!(ext.mul(&ext.mul(&x, &y), &z), ext.mul(&x, &ext.mul(&y, &z)));
        prop_assert_eq!(ext.mul(&x, &(&y + &z)), &ext.mul(&x, &y) + &ext.mul(&x, &z));
        prop_assert_eq!(ext.norm(&ext.mul(&x, &y)), &ext.norm(&x) * &ext.norm(&y));
        if !x.is_zero() {
            let xi = ext.inv(&x).unwrap();
            prop_assert_eq!(ext.mul(&x, &xi), ext.fint(1));
        }
    }

    #[test]
    fn square_classes_ignore_squares(ctx in field(), x in small_frac(), y in small_frac()) {
        let x = scalar(&ctx, x);
        let y = scalar(&ctx, y);
        prop_assume!(!x.is_zero() && !y.is_zero());
        let c = ctx.square_class(&x).unwrap();
        prop_assert_eq!(ctx.square_class(&(&x * &(&y * &y))).unwrap(), c.clone());
        prop_assert_eq!(ctx.square_class(&c.rep).unwrap(), c.clone());
        prop_assert_eq!(ctx.is_square(&x), c.is_trivial());
        if let Some(r) = ctx.sqrt_in_base(&x) {
            prop_assert_eq!(&r * &r, x);
        }
    }

    #[test]
    fn sums_of_two_squares_are_correct(ctx in field(), c in small_frac()) {
        let c = scalar(&ctx, c);
        if let Some((a, b)) = ctx.sum_of_two_squares(&c) {
            prop_assert_eq!(&(&a * &a) + &(&b * &b), c);
        }
    }

    #[test]
    fn inverse_and_determinant(ctx in field(), entries in proptest::collection::vec(-9i64..=9, 16)) {
        let m = Mat::from_fn(&ctx, 4, 4, |i, j| ctx.fint(entries[4 * i + j]));
        let det = m.det();
        match m.inverse() {
            Ok(inv) => {
                prop_assert!(!det.is_zero());
                prop_assert!(m.mul(&inv).is_identity());
                prop_assert!(inv.mul(&m).is_identity());
            }
            Err(_) => prop_assert!(det.is_zero()),
        }
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), 4);
        for v in m.kernel_basis() {
            prop_assert!(m.mul_vec(&v).iter().all(FVal::is_zero));
        }
    }

    #[test]
    fn random_elements_are_symplectic(ctx in field(), n in 1usize..=3, seed in any::<u64>()) {
        let sp = SympSpace::new(&ctx, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = sp.random_element(&mut rng, 5);
        prop_assert!(sp.is_symplectic(&g).unwrap());
        let h = sp.random_element(&mut rng, 5);
        prop_assert!(sp.is_symplectic(&g.mul(&h)).unwrap());
        prop_assert!(sp.is_symplectic(&g.inverse().unwrap()).unwrap());
    }

    #[test]
    fn skew_normalize_reaches_j(ctx in field(), n in 1usize..=3, seed in any::<u64>()) {
        // P^T J P is a nondegenerate skew form for invertible P.
        let sp = SympSpace::new(&ctx, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = sp.random_element(&mut rng, 4);
        let d = Mat::diag(&ctx, &(0..2 * n).map(|i| ctx.fint(1 + (i as i64 % 2))).collect::<Vec<_>>());
        let p = g.mul(&d);
        let form = p.transpose().mul(sp.j()).mul(&p);
        let nrm = skew_normalize(&form).unwrap();
        prop_assert_eq!(&nrm.transpose().mul(&form).mul(&nrm), sp.j());
    }

    #[test]
    fn classification_survives_conjugation(
        ctx in field(),
        ty in 1u8..=4,
        n in 1usize..=3,
        pick in 0usize..8,
        seed in any::<u64>(),
    ) {
        let ty = InvType::from_number(ty).unwrap();
        let params = match ty {
            InvType::T1 => {
                prop_assume!(n >= 2);
                RepParams { s: Some(2 * (1 + pick % (n - 1))), alpha: None }
            }
            InvType::T2 | InvType::T4 => {
                prop_assume!(ty == InvType::T4 || n % 2 == 0);
                let alpha = if ctx.is_finite() {
                    (2..).map(|x| ctx.int(x)).find(|x| !ctx.is_square(x)).unwrap()
                } else {
                    ctx.int([2, -1, 3, -2, 5, -3, 6, 7][pick])
                };
                RepParams { s: None, alpha: Some(alpha) }
            }
            InvType::T3 => RepParams::default(),
        };
        let a = representative(&ctx, ty, n, &params).unwrap();
        let r = classify(&a).unwrap();
        let sp = SympSpace::new(&ctx, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = sp.random_element(&mut rng, 4).with_ctx(a.ctx());
        let b = g.inverse().unwrap().mul(&a).mul(&g);
        let rb = classify(&b).unwrap();
        prop_assert_eq!(rb.inv_type, r.inv_type);
        prop_assert_eq!(rb.alpha_class.clone(), r.alpha_class.clone());
        prop_assert_eq!(rb.unordered_dims(), r.unordered_dims());
        prop_assert_eq!(rb.case, r.case);
        verify_transition(&b, &rb).unwrap();
        let d = decide_isomorphic(&a, &b).unwrap();
        prop_assert!(d.isomorphic);
        if ctx.is_finite() {
            prop_assert!(d.conjugator.is_some());
        }
        prop_assert_eq!(decide_isomorphic(&a, &b.neg()).unwrap().isomorphic, true);
    }

    #[test]
    fn documents_round_trip(ctx in field(), n in 1usize..=2, seed in any::<u64>()) {
        let sp = SympSpace::new(&ctx, n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = sp.random_element(&mut rng, 3);
        let text = print_document(&g);
        let doc = parse_document(&text).unwrap();
        prop_assert_eq!(&doc.matrix, &g);
        prop_assert_eq!(print_document(&doc.matrix), text);
    }
}

#[test]
fn root_values_round_trip() {
    let q = FieldCtx::rationals();
    let ext = q.extension(&q.int(-3)).unwrap();
    let m = Mat::from_fn(&ext, 2, 2, |i, j| {
        ext.val(q.frac(i as i64 - 1, 2), q.frac(j as i64 * 3 - 1, 4))
    });
    let text = print_document(&m);
    assert_eq!(parse_document(&text).unwrap().matrix, m);
}
