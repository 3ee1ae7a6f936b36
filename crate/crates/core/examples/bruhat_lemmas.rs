//! Brute-force checks of the GL_n cell lemmas and the chain description of Σ.

use subreg::bruhat;
use subreg::rootdata::{build_root_datum, Series};

fn main() -> subreg::Result<()> {
    println!("degree filter, n = 4: {:?}", bruhat::degree_filter(4)?);
    println!(
        "coset representatives, n = 4, k = 3: {:?}",
        bruhat::gln_coset_reps(4, 3)?
    );
    let chain: Vec<String> = bruhat::unipotent_quotient_roots(5, 4, 2)?
        .iter()
        .map(|r| r.to_string())
        .collect();
    println!("unipotent chain, n = 5, k = 4, p = 2: {}", chain.join(", "));
    for (s, l) in [(Series::D, 4), (Series::B, 3)] {
        let rd = build_root_datum(s, l)?;
        for (j, c) in bruhat::valid_sigma_configurations(&rd) {
            let got = bruhat::sigma_set_check(&rd, j, &c)?;
            let want = bruhat::expected_sigma_set(&rd, &c)?;
            println!(
                "{} j = {j}, c = {c:?}: {} elements, chain {}, ⟨β_c,n, β_j∨⟩ = {}",
                rd.name(),
                got.len(),
                if got == want { "matches" } else { "differs" },
                bruhat::sigma_end_pairing(&rd, j, &c)
            );
        }
    }
    Ok(())
}
