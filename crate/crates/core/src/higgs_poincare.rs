//! Betti numbers of the rank-2 odd-degree SL Higgs moduli space.
//!
//! Route one sums over the fixed components of the scaling action on the
//! Higgs field: `F_0` is the bundle moduli space, and for `1 <= k <= g-1` the
//! component `F_k` is a `2^{2g}`-sheeted cover of the symmetric product
//! `S^{kbar} X`, `kbar = 2g - 2k - 1`, whose upward flow has real codimension
//! `2(g + 2k - 2)`.
//!
//! Route two expands Hitchin's closed expression term by term as power series.
//! The individual terms are infinite series; only their sum is a polynomial,
//! so vanishing of the tail is the check.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Pow};

use crate::bundle_poincare::{check_tail, poincare_n_closed, TAIL_CHECK_WINDOW};
use crate::error::{invalid, Error, Result};
use crate::exactpoly::{coeff_extract_x, series_expand, IntPoly, TruncSeries};
use crate::params::Genus;

/// Index `k` of a nontrivial fixed component, with `kbar = 2g - 2k - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StratumIndex {
    k: u32,
    kbar: u32,
}

impl StratumIndex {
    pub fn new(g: Genus, k: u32) -> Result<Self> {
        if k == 0 || k >= g.get() {
            return Err(invalid(format!(
                "stratum index {k} outside 1..={} for genus {g}",
                g.get() - 1
            )));
        }
        Ok(StratumIndex {
            k,
            kbar: 2 * g.get() - 2 * k - 1,
        })
    }

    pub fn all(g: Genus) -> impl Iterator<Item = StratumIndex> {
        (1..g.get()).map(move |k| StratumIndex::new(g, k).expect("k in range"))
    }

    pub fn k(self) -> u32 {
        self.k
    }

    pub fn kbar(self) -> u32 {
        self.kbar
    }
}

/// Poincaré polynomial of `F_k`: the invariant part `P_t(S^{kbar} X)` plus,
/// for each of the `2^{2g} - 1` nontrivial characters, a copy of
/// `wedge^{kbar} H^1(X, C_gamma)`, of dimension `C(2g-2, kbar)` and sitting in
/// degree `kbar`.
pub fn fixed_locus_poincare(g: Genus, k: StratumIndex) -> IntPoly {
    let variant = (BigInt::from(2).pow(2 * g.get()) - 1u32)
        * binomial(BigInt::from(2 * g.get() - 2), BigInt::from(k.kbar));
    &coeff_extract_x(g.get(), k.kbar) + &IntPoly::monomial(variant, k.kbar as usize)
}

/// Real codimension of the upward flow from `F_k`.
pub fn bb_codimension(g: Genus, k: StratumIndex) -> u32 {
    2 * (g.get() + 2 * k.k - 2)
}

pub fn poincare_m_stratified(g: Genus) -> Result<IntPoly> {
    let mut total = poincare_n_closed(g)?;
    for k in StratumIndex::all(g) {
        total = &total + &fixed_locus_poincare(g, k).shift(bb_codimension(g, k) as usize);
    }
    match total.degree() {
        Some(d) if d > g.top_degree() => Err(Error::DegreeOverflow {
            degree: d,
            bound: g.top_degree(),
        }),
        _ => Ok(total),
    }
}

pub fn closed_default_order(g: Genus) -> usize {
    g.default_order() + TAIL_CHECK_WINDOW
}

/// The four summands of the closed expression as series modulo `t^order`:
///
/// 1. `(1+t^3)^{2g} / ((1-t^2)(1-t^4))`
/// 2. `-t^{4g-4} [(1+t^2)^2 (1+t)^{2g} - (1+t)^4 (1-t)^{2g}] / (4 (1-t^2)(1-t^4))`
/// 3. `-(g-1) t^{4g-3} (1+t)^{2g-2} / (1-t)`
/// 4. `2^{2g-1} t^{4g-4} [(1+t)^{2g-2} - (1-t)^{2g-2}]`
pub fn closed_terms(g: Genus, order: usize) -> Result<[TruncSeries; 4]> {
    let gg = g.get();
    let two_g = 2 * gg;
    let shift = 4 * gg as usize - 4;
    let one_plus_t = IntPoly::one_plus(1, 1);
    let one_minus_t = IntPoly::one_plus(-1, 1);
    let hn_den = IntPoly::one_plus(-1, 2) * IntPoly::one_plus(-1, 4);

    let first = series_expand(&IntPoly::one_plus(1, 3).pow(two_g), &hn_den, order)?;

    let bracket = IntPoly::one_plus(1, 2).pow(2) * one_plus_t.pow(two_g)
        - one_plus_t.pow(4) * one_minus_t.pow(two_g);
    let second = series_expand(&bracket.div_scalar_exact(&BigInt::from(4))?, &hn_den, order)?
        .shift(shift)
        .scale(&BigInt::from(-1));

    let third = series_expand(&one_plus_t.pow(two_g - 2), &one_minus_t, order)?
        .shift(shift + 1)
        .scale(&-BigInt::from(gg - 1));

    let fourth_poly = (one_plus_t.pow(two_g - 2) - one_minus_t.pow(two_g - 2))
        .scale(&BigInt::from(2).pow(two_g - 1))
        .shift(shift);
    let fourth = TruncSeries::new(fourth_poly, order);

    Ok([first, second, third, fourth])
}

pub fn poincare_m_closed(g: Genus) -> Result<IntPoly> {
    poincare_m_closed_with_order(g, closed_default_order(g))
}

pub fn poincare_m_closed_with_order(g: Genus, order: usize) -> Result<IntPoly> {
    let required = g.default_order();
    if order < required {
        return Err(Error::InsufficientOrder { order, required });
    }
    let sum = closed_terms(g, order)?
        .iter()
        .fold(TruncSeries::zero(order), |acc, term| acc.add(term));
    check_tail(&sum, required)?;
    Ok(sum.into_poly())
}

/// Sum of Betti numbers of `F_k`, from the two pieces separately.
pub fn fixed_locus_total_betti(g: Genus, k: StratumIndex) -> BigInt {
    let invariant: BigInt = coeff_extract_x(g.get(), k.kbar).eval(&BigInt::one());
    invariant
        + (BigInt::from(2).pow(2 * g.get()) - 1u32)
            * binomial(BigInt::from(2 * g.get() - 2), BigInt::from(k.kbar))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: u32) -> Genus {
        Genus::new(n).unwrap()
    }

    fn idx(gen: u32, k: u32) -> StratumIndex {
        StratumIndex::new(g(gen), k).unwrap()
    }

    #[test]
    fn stratum_index_invariants() {
        for gen in 2..8 {
            for k in StratumIndex::all(g(gen)) {
                assert_eq!(k.kbar() % 2, 1);
                assert!(k.kbar() <= 2 * gen - 3);
                assert_eq!(k.kbar() + gen + 2 * k.k() - 2, 3 * gen - 3);
            }
        }
        assert!(StratumIndex::new(g(3), 0).is_err());
        assert!(StratumIndex::new(g(3), 3).is_err());
    }

    #[test]
    fn fixed_loci() {
        assert_eq!(
            fixed_locus_poincare(g(2), idx(2, 1)),
            IntPoly::from_i64s(&[1, 34, 1])
        );
        assert_eq!(
            fixed_locus_poincare(g(3), idx(3, 2)),
            IntPoly::from_i64s(&[1, 258, 1])
        );
        assert_eq!(
            fixed_locus_poincare(g(3), idx(3, 1)),
            IntPoly::from_i64s(&[1, 6, 16, 278, 16, 6, 1])
        );
    }

    #[test]
    fn codimensions() {
        assert_eq!(bb_codimension(g(2), idx(2, 1)), 4);
        assert_eq!(bb_codimension(g(3), idx(3, 1)), 6);
        assert_eq!(bb_codimension(g(3), idx(3, 2)), 10);
    }

    #[test]
    fn genus_two_both_routes() {
        let expected = IntPoly::from_i64s(&[1, 0, 1, 4, 2, 34, 2]);
        assert_eq!(poincare_m_stratified(g(2)).unwrap(), expected);
        assert_eq!(poincare_m_closed(g(2)).unwrap(), expected);
        assert_eq!(expected.eval_i64(1), 44.into());
    }

    #[test]
    fn fourth_term_at_genus_two() {
        let [.., fourth] = closed_terms(g(2), 7).unwrap();
        assert_eq!(fourth.poly(), &IntPoly::monomial(32.into(), 5));
    }

    #[test]
    fn routes_agree_at_genus_three() {
        assert_eq!(
            poincare_m_closed(g(3)).unwrap(),
            poincare_m_stratified(g(3)).unwrap()
        );
    }

    #[test]
    fn dropping_a_term_leaves_a_tail() {
        let order = closed_default_order(g(3));
        let [a, b, _, d] = closed_terms(g(3), order).unwrap();
        let partial = a.add(&b).add(&d);
        assert!(matches!(
            check_tail(&partial, g(3).default_order()),
            Err(Error::TailNonzero { .. })
        ));
    }

    #[test]
    fn order_override() {
        assert!(poincare_m_closed_with_order(g(2), 6).is_err());
        assert_eq!(
            poincare_m_closed_with_order(g(2), 40).unwrap(),
            poincare_m_closed(g(2)).unwrap()
        );
    }
}
