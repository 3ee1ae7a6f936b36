//! Builds a report and prints it as JSON, text and TSV.

use subreg::report::{self, Format};
use subreg::rootdata::Series;

fn main() -> subreg::Result<()> {
    let rep = report::classification(Series::D, 4)?;
    print!("{}", rep.render(Format::Json, false));
    print!("{}", rep.render(Format::Text, true));
    print!("{}", report::degrees_table(6)?.render(Format::Tsv, false));
    Ok(())
}
