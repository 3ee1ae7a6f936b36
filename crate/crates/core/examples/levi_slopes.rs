//! Slope vectors of a parabolic and the Levi roots with negative slope.

use subreg::parabolic;
use subreg::rational::fmt_rational;
use subreg::rootdata::{build_root_datum, Series};
use subreg::subregular::{levi_slope_roots, standard_class, SeriesTag};

fn main() -> subreg::Result<()> {
    let rd = build_root_datum(Series::D, 6)?;
    let class = standard_class(SeriesTag::D, 6)?;
    let mu = parabolic::solve_slope(&rd, &class.tp, &class.targets)?;
    let coords: Vec<String> = mu.0.iter().map(fmt_rational).collect();
    println!(
        "μ for t(P) = {:?} in D6: ({})",
        class.tp.t(),
        coords.join(", ")
    );
    println!(
        "HN vector: {}",
        parabolic::is_hn_vector(&rd, &class.tp, &mu)
    );
    println!(
        "−⟨2ρ, μ⟩ = {}",
        fmt_rational(&-parabolic::two_rho_pairing(&rd, &mu))
    );

    println!("Levi roots with ⟨α, μ′⟩ < 0 for {}:", class.describe());
    for row in levi_slope_roots(&class)? {
        println!(
            "  {:?}: ⟨α, μ′⟩ = {}, ⟨α, ϖ_l∨⟩ = {}",
            row.root,
            fmt_rational(&row.mu_prime),
            fmt_rational(&row.varpi_l)
        );
    }
    Ok(())
}
