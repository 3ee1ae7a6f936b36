//! Enumerates the subregular classes of a few groups.

use subreg::rational::fmt_rational;
use subreg::rootdata::{build_root_datum, Series};
use subreg::subregular::enumerate_subregular;

fn main() -> subreg::Result<()> {
    for (s, l) in [
        (Series::A, 4),
        (Series::B, 3),
        (Series::D, 4),
        (Series::D, 5),
        (Series::E, 6),
        (Series::G, 2),
    ] {
        let rd = build_root_datum(s, l)?;
        println!("{}:", rd.name());
        for c in enumerate_subregular(&rd)? {
            println!(
                "  {} t(P) = {:?}, α_j = {:?}, c0 = {:?}, c1 = {:?}, d = {}, N = {}, −⟨2ρ, μ⟩ = {}",
                c.describe(),
                c.tp.t(),
                c.alpha_j,
                c.c0,
                c.c1,
                c.d,
                c.big_n,
                fmt_rational(&c.minus_two_rho_mu())
            );
        }
    }
    Ok(())
}
