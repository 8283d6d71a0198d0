//! Brute-force class counts of Sp(2n, p) against the formulas.
//!
//!     cargo run --release --example verify_counts

use spinvol::enumerate::verify_counts;

fn main() -> spinvol::Result<()> {
    for (n, p) in [(1, 3), (1, 5), (1, 7), (1, 11), (2, 3)] {
        let r = verify_counts(n, p)?;
        println!(
            "Sp({}, {p}): order {}, nonsquare {}",
            2 * n,
            r.group_order,
            r.alpha
        );
        for row in &r.rows {
            println!(
                "  C{} formula {:<4} observed {}  {}",
                row.inv_type,
                row.formula.to_string(),
                row.observed,
                row.status
            );
        }
        for c in &r.classes {
            println!(
                "  class type {} size {} dims {:?} alpha {}",
                c.inv_type, c.size, c.dim_pair, c.alpha_class
            );
        }
    }
    Ok(())
}
