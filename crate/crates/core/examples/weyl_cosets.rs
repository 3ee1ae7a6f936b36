//! Weyl group orders and minimal length double-coset representatives.

use std::collections::BTreeSet;
use subreg::rootdata::{build_root_datum, Series};
use subreg::weyl;

fn main() -> subreg::Result<()> {
    for (s, l) in [(Series::B, 3), (Series::F, 4), (Series::E, 6)] {
        let rd = build_root_datum(s, l)?;
        println!("|W({})| = {}", rd.name(), weyl::weyl_order(&rd));
    }
    let rd = build_root_datum(Series::B, 3)?;
    let tp: BTreeSet<usize> = [1].into();
    let borel: BTreeSet<usize> = (1..=3).collect();
    println!("W⁰ for t(P) = {{1}} and the Borel in B3:");
    for w in weyl::min_coset_reps(&rd, &tp, &borel)? {
        println!("  {:?} (length {})", w.letters(), weyl::length(&rd, &w));
    }
    Ok(())
}
