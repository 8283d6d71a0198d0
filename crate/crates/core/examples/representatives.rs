//! Representatives of each type over several fields.
//!
//!     cargo run --example representatives

use spinvol::cli::format::print_document;
use spinvol::involution::{classify, representative, InvType, RepParams};
use spinvol::FieldCtx;

fn main() -> spinvol::Result<()> {
    let fields = [
        (FieldCtx::rationals(), 2),
        (FieldCtx::real_model(), -1),
        (FieldCtx::prime_field(3)?, 2),
        (FieldCtx::prime_field(5)?, 2),
        (FieldCtx::prime_field(7)?, 3),
    ];
    for (ctx, alpha) in &fields {
        for ty in [InvType::T1, InvType::T2, InvType::T3, InvType::T4] {
            let params = RepParams {
                s: Some(2),
                alpha: Some(ctx.int(*alpha)),
            };
            let m = representative(ctx, ty, 2, &params)?;
            let r = classify(&m)?;
            println!(
                "# type {} over {}, alpha class {}",
                r.inv_type,
                ctx.kind(),
                r.alpha_class
            );
            print!("{}", print_document(&m));
        }
    }
    // n odd has no Type 2
    let err = representative(
        &FieldCtx::rationals(),
        InvType::T2,
        3,
        &RepParams {
            s: None,
            alpha: Some(FieldCtx::rationals().int(2)),
        },
    );
    println!("# n = 3, type 2: {}", err.unwrap_err());
    Ok(())
}
