//! Builds a root datum and prints its basic invariants.

use subreg::rootdata::{build_root_datum, Series};

fn main() -> subreg::Result<()> {
    for (series, rank) in [(Series::E, 8), (Series::F, 4), (Series::G, 2)] {
        let rd = build_root_datum(series, rank)?;
        println!("{}", rd.name());
        for row in rd.cartan() {
            println!("  {row:?}");
        }
        println!("  positive roots: {}", rd.positive_roots().len());
        println!("  highest root: {:?}", rd.highest_root().coeffs);
        println!("  coroot integers: {:?}", rd.coroot_integers());
        println!("  special roots: {:?}", rd.special_roots());
    }
    Ok(())
}
