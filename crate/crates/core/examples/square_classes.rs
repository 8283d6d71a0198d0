//! Square classes, quadratic extensions and norms.
//!
//!     cargo run --example square_classes

use spinvol::FieldCtx;

fn main() -> spinvol::Result<()> {
    let q = FieldCtx::rationals();
    for x in [8, -12, 18, 50] {
        println!("Q: class of {x} is {}", q.square_class(&q.int(x))?);
    }
    let x = q.frac(3, 8);
    println!("Q: class of {x} is {}", q.square_class(&x)?);

    let r = FieldCtx::real_model();
    println!(
        "real: class of -7 is {}, sqrt(9/4) = {:?}",
        r.square_class(&r.int(-7))?,
        r.sqrt_in_base(&r.frac(9, 4)).map(|s| s.to_string())
    );

    for p in [3, 5, 7, 13] {
        let f = FieldCtx::prime_field(p)?;
        let squares: Vec<String> = (1..p as i64)
            .filter(|&x| f.is_square(&f.int(x)))
            .map(|x| x.to_string())
            .collect();
        let (a, b) = f.sum_of_two_squares(&f.int(-1)).unwrap();
        println!(
            "F_{p}: squares {{{}}}, -1 = {a}^2 + {b}^2",
            squares.join(",")
        );
    }

    // (1 + w)(1 - w) = -1 in Q[sqrt 2]
    let ext = q.extension(&q.int(2))?;
    let u = ext.val(q.one(), q.one());
    println!(
        "Q[w]: N(1+w) = {}, (1+w)^-1 = {}",
        ext.norm(&u),
        ext.inv(&u).unwrap()
    );
    println!(
        "5 is a norm from Q(sqrt -2): {}",
        q.is_norm(&q.int(5), &q.int(2))
    );
    println!(
        "3 is a norm from Q(sqrt -2): {:?}",
        q.represent_norm(&q.int(3), &q.int(2))
            .map(|(a, b)| format!("{a}^2 + 2*{b}^2"))
    );
    Ok(())
}
