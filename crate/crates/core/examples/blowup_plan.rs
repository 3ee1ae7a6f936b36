//! Blowup centres, surfaces and the singular fibre of a class.

use subreg::geometry::{self, YCondition};
use subreg::subregular::{standard_class, SeriesTag};

fn main() -> subreg::Result<()> {
    for (tag, l) in [(SeriesTag::B, 5), (SeriesTag::E, 8), (SeriesTag::G, 2)] {
        let c = standard_class(tag, l)?;
        println!("{}", c.describe());
        let dec = geometry::divisor_decomposition(&c)?;
        for t in &dec.terms {
            println!("  {} D[{}]", t.multiplicity, t.label);
        }
        for (k, f) in geometry::theta_sections(&c)?.iter().enumerate() {
            println!("  θ_{} = {f}", k + 1);
        }
        for (k, f) in geometry::theta_prime_sections(&c)?.iter().enumerate() {
            println!("  θ′_{} = {f}", k + 1);
        }
        println!(
            "  fibre of D[α_i∨+α_j∨]: {}",
            geometry::hirzebruch_component(&c)?
        );
        println!(
            "  (D_1′)_y: {} / {}",
            geometry::base_surface(&c, YCondition::Generic)?,
            geometry::base_surface(&c, YCondition::Special)?
        );
        println!("  deg (D_1)_y = {}", geometry::degree_d1(&c)?);
        let (desc, rep) = geometry::singularity_report(&c)?;
        println!("  χ⁻¹(0): {desc}");
        println!("  singularities: {}", rep.summary);
    }
    Ok(())
}
