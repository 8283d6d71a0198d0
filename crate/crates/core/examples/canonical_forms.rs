//! One involution of each type over Q, its transition matrix and the
//! canonical form it conjugates to.
//!
//!     cargo run --example canonical_forms

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spinvol::involution::{classify, representative, verify_transition, InvType, RepParams};
use spinvol::{FieldCtx, SympSpace};

fn main() -> spinvol::Result<()> {
    let q = FieldCtx::rationals();
    let sp = SympSpace::new(&q, 2);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cases = [
        (
            InvType::T1,
            RepParams {
                s: Some(2),
                alpha: None,
            },
        ),
        (
            InvType::T2,
            RepParams {
                s: None,
                alpha: Some(q.int(-1)),
            },
        ),
        (InvType::T3, RepParams::default()),
        (
            InvType::T4,
            RepParams {
                s: None,
                alpha: Some(q.int(3)),
            },
        ),
    ];
    for (ty, params) in cases {
        let rep = representative(&q, ty, 2, &params)?;
        // hide the representative behind a random symplectic change of basis
        let g = sp.random_element(&mut rng, 3).with_ctx(rep.ctx());
        let a = g.inverse()?.mul(&rep).mul(&g);
        let r = classify(&a)?;
        let form = verify_transition(&a, &r)?;
        println!(
            "type {} (alpha={}, dims={:?}, case={:?})",
            ty, r.alpha_class, r.dim_pair, r.case
        );
        println!("A =\n{a}transition =\n{}canonical =\n{form}", r.transition);
    }
    Ok(())
}
