//! Weights of the slices and the folding comparison.

use subreg::induction;
use subreg::subregular::{standard_class, SeriesTag};

fn main() -> subreg::Result<()> {
    for (tag, l) in [
        (SeriesTag::E, 6),
        (SeriesTag::E, 7),
        (SeriesTag::F, 4),
        (SeriesTag::G, 2),
    ] {
        let row = induction::weights_row(tag, l)?;
        println!(
            "{}: base {}, (μ|−) {:?}, slice {}",
            row.label, row.base, row.mu_weight, row.slice
        );
        for d in &row.discrepancies {
            println!("  differs from the printed table: {d}");
        }
    }
    for ((ts, ls), (tb, lb)) in induction::deformation_folding_pairs() {
        let (small, big) = (standard_class(ts, ls)?, standard_class(tb, lb)?);
        let o = induction::folding_outcome(&small, &big)?;
        let verdict = if o.holds() { "holds" } else { "fails" };
        println!(
            "({}, {}) d = {}: {verdict}",
            small.label(),
            big.label(),
            o.d
        );
    }
    Ok(())
}
