//! Group closure, involution sets and their orbits for Sp(2, 5).
//!
//!     cargo run --example enumerate

use spinvol::enumerate::{enumerate_group, enumerate_involutions, partition_classes};
use spinvol::involution::count_formulas;

fn main() -> spinvol::Result<()> {
    let group = enumerate_group(1, 5)?;
    println!(
        "|Sp(2,5)| = {} from {} generators",
        group.order(),
        group.generators().len()
    );
    let f5 = group.ctx().clone();
    for alpha in [None, Some(f5.int(2))] {
        let set = enumerate_involutions(&group, alpha.as_ref())?;
        let part = partition_classes(&set, &group)?;
        println!(
            "alpha {:?}: {} matrices, counts {:?}",
            alpha.map(|a| a.to_string()),
            set.len(),
            part.table.counts
        );
        for c in &part.table.classes {
            println!(
                "type {} orbit of {}, witness\n{}",
                c.inv_type, c.size, c.witness
            );
        }
    }
    println!("formulas: {:?}", count_formulas(1, &f5).counts);
    Ok(())
}
