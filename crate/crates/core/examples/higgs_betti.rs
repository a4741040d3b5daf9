//! Betti numbers of the rank-2 odd-degree SL Higgs moduli space: the sum over
//! fixed loci of the scaling action against Hitchin's closed expression.

use hitchin::higgs_poincare::{
    bb_codimension, fixed_locus_poincare, poincare_m_closed, poincare_m_stratified, StratumIndex,
};
use hitchin::{Genus, Result};

fn main() -> Result<()> {
    let g = Genus::new(3)?;
    for k in StratumIndex::all(g) {
        println!(
            "F_{}: {}  (codimension {})",
            k.k(),
            fixed_locus_poincare(g, k),
            bb_codimension(g, k)
        );
    }
    for g in 2..=5 {
        let g = Genus::new(g)?;
        let strata = poincare_m_stratified(g)?;
        assert_eq!(strata, poincare_m_closed(g)?);
        println!("g = {g}: {strata}");
    }
    Ok(())
}
