//! Dimension counts and spectral-curve numerics.

use hitchin::geometry::{hitchin_base_dim, moduli_dim, spectral_numbers, Space};
use hitchin::{Genus, Group, ModuliParams, Result};

fn main() -> Result<()> {
    let g = Genus::new(3)?;
    for r in 1..=4 {
        let p = ModuliParams::new(r, 1, 3, Group::GL)?;
        let higgs = moduli_dim(&p, Space::Higgs)?;
        let base = hitchin_base_dim(r, g, false);
        assert_eq!(2 * base, higgs);
        let s = spectral_numbers(r, g, 1)?;
        println!(
            "r = {r}: dim M_Higgs = {higgs}, dim base = {base}, g(Y) = {}, deg R = {}, deg L = {}",
            s.spectral_genus, s.ramification_degree, s.line_degree_delta
        );
    }
    for group in [Group::GL, Group::SL, Group::PGL] {
        let p = ModuliParams::new(2, 1, 3, group)?;
        println!(
            "{group}: bundles {}, higgs {}",
            moduli_dim(&p, Space::Bundles)?,
            moduli_dim(&p, Space::Higgs)?
        );
    }
    Ok(())
}
