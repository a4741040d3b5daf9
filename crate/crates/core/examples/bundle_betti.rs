//! Betti numbers of the rank-2 odd-degree bundle moduli space, by the closed
//! Harder-Narasimhan formula and by the equivariant recursion.

use hitchin::bundle_poincare::{poincare_n_closed, poincare_n_recursion};
use hitchin::{Genus, Result};

fn main() -> Result<()> {
    for g in 2..=6 {
        let g = Genus::new(g)?;
        let closed = poincare_n_closed(g)?;
        let recursion = poincare_n_recursion(g)?;
        assert_eq!(closed, recursion);
        println!("g = {g}: {closed}");
    }
    Ok(())
}
