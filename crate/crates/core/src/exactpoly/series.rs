use std::fmt;

use num_bigint::BigInt;

use super::intpoly::{div_from_constant, IntPoly};
use crate::error::{Error, Result};

/// Power series in `t` known modulo `t^order`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    poly: IntPoly,
    order: usize,
}

impl TruncSeries {
    pub fn new(poly: IntPoly, order: usize) -> Self {
        TruncSeries {
            poly: poly.truncate(order),
            order,
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(IntPoly::zero(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(IntPoly::one(), order)
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn into_poly(self) -> IntPoly {
        self.poly
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.poly.coeff(i)
    }

    /// Lower the order; coefficients at or above `order` are dropped.
    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.poly.clone(), order.min(self.order))
    }

    pub fn add(&self, rhs: &TruncSeries) -> Self {
        Self::new(&self.poly + &rhs.poly, self.order.min(rhs.order))
    }

    pub fn sub(&self, rhs: &TruncSeries) -> Self {
        Self::new(&self.poly - &rhs.poly, self.order.min(rhs.order))
    }

    pub fn mul(&self, rhs: &TruncSeries) -> Self {
        let order = self.order.min(rhs.order);
        Self::new(
            &self.poly.truncate(order) * &rhs.poly.truncate(order),
            order,
        )
    }

    pub fn mul_poly(&self, p: &IntPoly) -> Self {
        Self::new(&self.poly * &p.truncate(self.order), self.order)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.poly.scale(c), self.order)
    }

    /// Multiply by `t^k`; the order is unchanged, so the top `k` known
    /// coefficients fall off.
    pub fn shift(&self, k: usize) -> Self {
        Self::new(self.poly.shift(k), self.order)
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> Result<Self> {
        Ok(Self::new(self.poly.div_scalar_exact(c)?, self.order))
    }

    /// Series quotient `self / den`, with the order of `self`.
    pub fn div_poly(&self, den: &IntPoly) -> Result<Self> {
        series_expand(&self.poly, den, self.order)
    }
}

/// The unique `s` with `s * denominator == numerator (mod t^order)`.
pub fn series_expand(
    numerator: &IntPoly,
    denominator: &IntPoly,
    order: usize,
) -> Result<TruncSeries> {
    if denominator.coeff(0) == BigInt::default() {
        return Err(Error::ZeroConstantTerm);
    }
    let q = div_from_constant(numerator.coeffs(), denominator.coeffs(), order)?;
    Ok(TruncSeries::new(IntPoly::new(q), order))
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(t^{})", self.poly, self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn geometric_series() {
        let s = series_expand(&p(&[1]), &p(&[1, -1]), 4).unwrap();
        assert_eq!(s.poly(), &p(&[1, 1, 1, 1]));
        assert_eq!(s.order(), 4);
    }

    #[test]
    fn squared_binomial_over_one_minus_t() {
        let s = series_expand(&p(&[1, 2, 1]), &p(&[1, -1]), 5).unwrap();
        assert_eq!(s.poly(), &p(&[1, 3, 4, 4, 4]));
    }

    #[test]
    fn zero_numerator() {
        let s = series_expand(&IntPoly::zero(), &p(&[1, 0, -1]), 3).unwrap();
        assert!(s.poly().is_zero());
        assert_eq!(s.order(), 3);
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        assert_eq!(
            series_expand(&p(&[1]), &p(&[0, 1]), 3),
            Err(Error::ZeroConstantTerm)
        );
    }

    #[test]
    fn binary_ops_take_min_order() {
        let a = TruncSeries::new(p(&[1, 1, 1, 1, 1]), 5);
        let b = TruncSeries::new(p(&[1, 1]), 3);
        assert_eq!(a.add(&b).order(), 3);
        assert_eq!(a.mul(&b).poly(), &p(&[1, 2, 2]));
        assert_eq!(a.shift(3).poly(), &p(&[0, 0, 0, 1, 1]));
    }
}
