use hitchin::bundle_poincare::{
    poincare_n_closed, poincare_n_recursion, poincare_n_recursion_with_order, recursion_min_order,
};
use hitchin::higgs_poincare::{
    fixed_locus_total_betti, poincare_m_closed, poincare_m_closed_with_order,
    poincare_m_stratified, StratumIndex,
};
use hitchin::{Error, Genus, IntPoly};
use num_bigint::BigInt;

fn genus(g: u32) -> Genus {
    Genus::new(g).unwrap()
}

#[test]
fn bundle_pipelines_agree_through_genus_ten() {
    for g in 2..=10 {
        let g = genus(g);
        let closed = poincare_n_closed(g).unwrap();
        assert_eq!(closed, poincare_n_recursion(g).unwrap(), "genus {g}");
        let gg = g.get() as usize;
        assert_eq!(closed.degree(), Some(6 * gg - 6));
        assert!(closed.is_palindromic_about(3 * gg - 3));
        assert!(closed.has_nonnegative_coeffs());
        assert_eq!(closed.coeff(0), BigInt::from(1));
        assert_eq!(closed.coeff(1), BigInt::from(0));
        assert_eq!(closed.coeff(2), BigInt::from(1));
        assert_eq!(closed.coeff(3), BigInt::from(2 * gg));
    }
}

#[test]
fn frozen_bundle_values() {
    assert_eq!(
        poincare_n_closed(genus(2)).unwrap(),
        IntPoly::from_i64s(&[1, 0, 1, 4, 1, 0, 1])
    );
    assert_eq!(
        poincare_n_closed(genus(3)).unwrap(),
        IntPoly::from_i64s(&[1, 0, 1, 6, 2, 6, 16, 6, 2, 6, 1, 0, 1])
    );
}

#[test]
fn higgs_pipelines_agree_through_genus_eight() {
    for g in 2..=8 {
        let g = genus(g);
        let strata = poincare_m_stratified(g).unwrap();
        assert_eq!(strata, poincare_m_closed(g).unwrap(), "genus {g}");
        assert_eq!(strata.degree(), Some(g.top_degree()));
        assert!(strata.has_nonnegative_coeffs());
        // the top degree is the middle dimension; it sees only the fixed loci
        let n = poincare_n_closed(g).unwrap();
        for i in 0..2 * g.get() as usize {
            assert_eq!(strata.coeff(i), n.coeff(i), "genus {g}, degree {i}");
        }
    }
}

#[test]
fn frozen_higgs_values() {
    assert_eq!(
        poincare_m_stratified(genus(2)).unwrap(),
        IntPoly::from_i64s(&[1, 0, 1, 4, 2, 34, 2])
    );
    assert_eq!(
        poincare_m_stratified(genus(3)).unwrap(),
        IntPoly::from_i64s(&[1, 0, 1, 6, 2, 6, 17, 12, 18, 284, 18, 264, 3])
    );
}

#[test]
fn total_betti_number_adds_up() {
    for g in 2..=7 {
        let g = genus(g);
        let total: BigInt = poincare_m_stratified(g).unwrap().eval_i64(1);
        let pieces: BigInt = poincare_n_closed(g).unwrap().eval_i64(1)
            + StratumIndex::all(g)
                .map(|k| fixed_locus_total_betti(g, k))
                .sum::<BigInt>();
        assert_eq!(total, pieces);
    }
}

#[test]
fn truncation_order_overrides() {
    let g = genus(3);
    let min = recursion_min_order(g);
    assert_eq!(
        poincare_n_recursion_with_order(g, min).unwrap(),
        poincare_n_closed(g).unwrap()
    );
    assert!(matches!(
        poincare_n_recursion_with_order(g, min - 1),
        Err(Error::InsufficientOrder { .. })
    ));
    assert_eq!(
        poincare_m_closed_with_order(g, 60).unwrap(),
        poincare_m_stratified(g).unwrap()
    );
    assert!(matches!(
        poincare_m_closed_with_order(g, 5),
        Err(Error::InsufficientOrder { .. })
    ));
}
