//! Torus stability verdicts and Hilbert-Mumford weights of filtrations.

use hitchin::git_stability::{
    hm_weight, torus_classify, FiltrationBlock, FiltrationData, WeightProfile,
};
use hitchin::{Genus, Result};

fn main() -> Result<()> {
    for weights in [vec![1, 2], vec![0], vec![-1, 2], vec![-1, -2], vec![0, -1]] {
        let p = WeightProfile::new(weights.clone())?;
        println!("{weights:?}: {}", torus_classify(&p));
    }

    // Quotient of O(-5)^9 onto a rank-2 bundle of degree 1 on a genus-2 curve,
    // with a weight-1 subspace of dimension 4 generating a line subbundle.
    let g = Genus::new(2)?;
    let blocks = vec![
        FiltrationBlock {
            dim: 4,
            weight: 5,
            rank: 1,
            degree: 0,
        },
        FiltrationBlock {
            dim: 5,
            weight: -4,
            rank: 1,
            degree: 1,
        },
    ];
    for m in [5, 10, 20] {
        let f = FiltrationData::new(blocks.clone(), 5, m, g)?;
        println!("m = {m}: weight {}", hm_weight(&f)?);
    }
    Ok(())
}
