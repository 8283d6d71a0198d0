//! The generator family whose commutant is the scalars, and the test for
//! which matrices over k[sqrt(alpha)] induce automorphisms of Sp(2n, k).
//!
//!     cargo run --example commutant

use spinvol::involution::{commutant_generator_family, invariance_check, is_scalar_automorphism};
use spinvol::{FieldCtx, Mat, SympSpace};

fn main() -> spinvol::Result<()> {
    let f3 = FieldCtx::prime_field(3)?;
    let family = commutant_generator_family(&f3, 2);
    for g in &family {
        println!("{g}");
    }
    let mut commuting = 0;
    for code in 0..81i64 {
        let e: Vec<i64> = (0..4).map(|k| (code / 3i64.pow(k)) % 3).collect();
        let m = Mat::from_ints(&f3, &[&e[..2], &e[2..]]);
        if m.det().is_zero() {
            continue;
        }
        let fam = commutant_generator_family(&f3, 1);
        if fam.iter().all(|g| g.mul(&m) == m.mul(g)) {
            commuting += 1;
            assert!(is_scalar_automorphism(&m).is_some());
        }
    }
    println!("invertible 2x2 matrices over F_3 commuting with the family: {commuting}");

    let ext = f3.extension(&f3.int(2))?;
    let sp = SympSpace::new(&ext, 2);
    let w = ext.root();
    // sqrt(2) diag(1, 1, 1/2, 1/2) is symplectic over F_3[sqrt 2]
    let half = ext.lift(f3.int(2).inv().unwrap());
    let a = Mat::diag(&ext, &[ext.fint(1), ext.fint(1), half.clone(), half]).scale(&w);
    println!(
        "sqrt(2) B: symplectic {}, preserves Sp(4,3) {}",
        sp.is_symplectic(&a)?,
        invariance_check(&a)?
    );
    let mut t = Mat::identity(&ext, 4);
    t.set(0, 2, w);
    println!(
        "I + w E_13: symplectic {}, preserves Sp(4,3) {}",
        sp.is_symplectic(&t)?,
        invariance_check(&t)?
    );
    Ok(())
}
