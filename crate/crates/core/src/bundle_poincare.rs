//! Betti numbers of the moduli space of stable rank-2 bundles with fixed odd
//! determinant, by two independent routes:
//!
//! * the closed Harder–Narasimhan quotient
//!   `[(1+t^3)^{2g} - t^{2g}(1+t)^{2g}] / [(1-t^2)(1-t^4)]`;
//! * the Atiyah–Bott recursion over the Harder–Narasimhan strata `C_k` of type
//!   `(k+1, -k)`, each of codimension `2g + 4k - 4`.
//!
//! The recursion produces the Poincaré polynomial of the full moduli space,
//! which carries an extra `(1+t)^{2g}` from the Picard factor; that factor is
//! removed by exact division so any inconsistency surfaces as an error.

use crate::error::{Error, Result};
use crate::exactpoly::{series_expand, IntPoly, TruncSeries};
use crate::geometry::hn_codim_rank2;
use crate::params::Genus;

/// Extra coefficients past the true degree that are computed and must vanish.
pub const TAIL_CHECK_WINDOW: usize = 8;

pub fn poincare_n_closed(g: Genus) -> Result<IntPoly> {
    let two_g = 2 * g.get();
    let num = IntPoly::one_plus(1, 3).pow(two_g)
        - IntPoly::one_plus(1, 1).pow(two_g).shift(two_g as usize);
    let den = IntPoly::one_plus(-1, 2) * IntPoly::one_plus(-1, 4);
    let p = num.exact_div(&den)?;
    debug_assert_eq!(p.degree(), Some(g.top_degree()));
    Ok(p)
}

/// Equivariant Poincaré series of a nonsemistable stratum,
/// `((1+t)^{2g} / (1-t^2))^2`, the same for every `k`.
pub fn strata_equivariant_poly(g: Genus, order: usize) -> TruncSeries {
    let half = series_expand(
        &IntPoly::one_plus(1, 1).pow(2 * g.get()),
        &IntPoly::one_plus(-1, 2),
        order,
    )
    .expect("denominator has unit constant term");
    half.mul(&half)
}

/// Poincaré series of the classifying space of the complex gauge group,
/// `[(1+t)(1+t^3)]^{2g} / [(1-t^2)^2 (1-t^4)]`.
pub fn classifying_space_poly(g: Genus, order: usize) -> TruncSeries {
    let num = (IntPoly::one_plus(1, 1) * IntPoly::one_plus(1, 3)).pow(2 * g.get());
    let den = IntPoly::one_plus(-1, 2).pow(2) * IntPoly::one_plus(-1, 4);
    series_expand(&num, &den, order).expect("denominator has unit constant term")
}

/// Number of strata `k >= 1` whose contribution `t^{2g+4k-4} (...)` is
/// visible modulo `t^order`. Later strata vanish identically in the window,
/// so cutting the sum here is exact.
pub fn strata_count(g: Genus, order: usize) -> usize {
    (1..)
        .take_while(|&k| (hn_codim_rank2(g, k) as usize) < order)
        .count()
}

/// Smallest order that holds the full Poincaré polynomial of the moduli space
/// with the Picard factor, of degree `8g - 6`.
pub fn recursion_min_order(g: Genus) -> usize {
    g.top_degree() + 2 * g.get() as usize + 1
}

pub fn recursion_default_order(g: Genus) -> usize {
    recursion_min_order(g) + TAIL_CHECK_WINDOW
}

pub fn poincare_n_recursion(g: Genus) -> Result<IntPoly> {
    poincare_n_recursion_with_order(g, recursion_default_order(g))
}

pub fn poincare_n_recursion_with_order(g: Genus, order: usize) -> Result<IntPoly> {
    let required = recursion_min_order(g);
    if order < required {
        return Err(Error::InsufficientOrder { order, required });
    }
    let stratum = strata_equivariant_poly(g, order);
    let mut semistable = classifying_space_poly(g, order);
    for k in 1..=strata_count(g, order) as u32 {
        semistable = semistable.sub(&stratum.shift(hn_codim_rank2(g, k) as usize));
    }
    // dividing out the classifying space of the constant central C^*
    let full = semistable.mul_poly(&IntPoly::one_plus(-1, 2));
    check_tail(&full, required)?;
    let fixed_det = full
        .poly()
        .exact_div(&IntPoly::one_plus(1, 1).pow(2 * g.get()))?;
    match fixed_det.degree() {
        Some(d) if d > g.top_degree() => Err(Error::DegreeOverflow {
            degree: d,
            bound: g.top_degree(),
        }),
        _ => Ok(fixed_det),
    }
}

/// Every known coefficient at degree `>= from` must be zero.
pub(crate) fn check_tail(s: &TruncSeries, from: usize) -> Result<()> {
    for degree in from..s.order() {
        let coeff = s.coeff(degree);
        if coeff != Default::default() {
            return Err(Error::TailNonzero { degree, coeff });
        }
    }
    Ok(())
}
