//! Isomorphy decisions with explicit conjugators.
//!
//!     cargo run --example isomorphy

use spinvol::involution::{decide_isomorphic, representative, InvType, RepParams};
use spinvol::{FieldCtx, Mat};

/// `sqrt(alpha) [[0, D^-1 / alpha], [-D, 0]]` over `k[sqrt(alpha)]`, a Type 4
/// involution whose hermitian form is `<d_1, .., d_n>`.
fn type4_with_form(base: &FieldCtx, alpha: i64, d: &[i64]) -> Mat {
    let ext = base.extension(&base.int(alpha)).unwrap();
    let n = d.len();
    let dm = Mat::diag(base, &d.iter().map(|&x| base.fint(x)).collect::<Vec<_>>());
    let upper = dm.inverse().unwrap().scale(&base.lift(base.frac(1, alpha)));
    let z = Mat::zeros(base, n, n);
    Mat::block2(&z, &upper, &dm.neg(), &z)
        .with_ctx(&ext)
        .scale(&ext.root())
}

fn show(label: &str, a: &Mat, b: &Mat) -> spinvol::Result<()> {
    let d = decide_isomorphic(a, b)?;
    println!("{label}: isomorphic={} sign={:?}", d.isomorphic, d.sign);
    if let Some(q) = d.conjugator {
        println!("Q =\n{q}");
    }
    if let Some(note) = d.note {
        println!("note: {note}");
    }
    Ok(())
}

fn main() -> spinvol::Result<()> {
    let q = FieldCtx::rationals();
    let j = Mat::standard_j(&q, 2);
    let conj = Mat::from_ints(
        &q,
        &[
            &[-1, 0, 2, 2],
            &[-2, 1, 2, 4],
            &[-2, 1, 1, 2],
            &[1, -1, 0, -1],
        ],
    );
    show("J vs conjugate of J", &j, &conj)?;

    // dims (2, 4) and (4, 2) are related by A -> -A
    let t1 = RepParams {
        s: Some(2),
        alpha: None,
    };
    let a = representative(&q, InvType::T1, 3, &t1)?;
    let b = representative(
        &q,
        InvType::T1,
        3,
        &RepParams {
            s: Some(4),
            alpha: None,
        },
    )?;
    show("Type 1, s=2 vs s=4", &a, &b)?;

    // Over Q the hermitian forms <1, 1> and <1, 5> over Q(sqrt -2) differ,
    // over F_7 every form of rank 2 is the same.
    show(
        "Type 4 over Q, <1,1> vs <1,5>",
        &type4_with_form(&q, 2, &[1, 1]),
        &type4_with_form(&q, 2, &[1, 5]),
    )?;
    let f7 = FieldCtx::prime_field(7).unwrap();
    show(
        "Type 4 over F_7, <1,1> vs <1,5>",
        &type4_with_form(&f7, 3, &[1, 1]),
        &type4_with_form(&f7, 3, &[1, 5]),
    )?;
    Ok(())
}
