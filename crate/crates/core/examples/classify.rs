//! Classify the four worked examples and print the Gram matrix of each
//! transition matrix.
//!
//!     cargo run --example classify

use spinvol::cli::format::parse_document;
use spinvol::involution::classify;
use spinvol::SympSpace;

const EXAMPLES: [(&str, &str); 4] = [
    (
        "Q[sqrt 2]",
        "field: rationals\nalpha: 2\n\
         1/2*w 1/2*w 0 0\n1/2*w -1/2*w 0 0\n0 0 1/2*w 1/2*w\n0 0 1/2*w -1/2*w\n",
    ),
    (
        "Q[i]",
        "field: rationals\nalpha: -1\n\
         w w 0 0\n-2*w -w 0 0\n0 0 w -2*w\n0 0 w -w\n",
    ),
    (
        "R[i]",
        "field: real\nalpha: -1\n\
         0 w 0 0\nw 0 0 0\n0 0 0 -w\n0 0 -w 0\n",
    ),
    (
        "F_5[sqrt 2]",
        "field: fp 5\nalpha: 2\n\
         w 0 2*w 0\n0 w 0 2*w\n3*w 0 4*w 0\n0 3*w 0 4*w\n",
    ),
];

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, text) in EXAMPLES {
        let a = parse_document(text)?.matrix;
        let r = classify(&a)?;
        println!(
            "{name}: type {} alpha={} case={:?}",
            r.inv_type, r.alpha_class, r.case
        );
        let x = &r.transition;
        let sp = SympSpace::new(x.ctx(), r.n);
        println!("X =\n{x}X^T J X =\n{}", x.transpose().mul(sp.j()).mul(x));
    }
    Ok(())
}
