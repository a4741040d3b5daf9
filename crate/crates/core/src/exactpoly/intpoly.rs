use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial in `t` over the integers.
///
/// `coeffs[i]` is the coefficient of `t^i`. Trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients at all.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `1 + c * t^k`; the building block of every factor in the Betti formulas.
    pub fn one_plus(c: i64, k: usize) -> Self {
        Self::one() + Self::monomial(BigInt::from(c), k)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Number of stored coefficients (degree + 1, or 0).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Keep only the terms of degree `< order`.
    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.iter().take(order).cloned().collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divide every coefficient by `c`, failing unless each division is exact.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (i, x) in self.coeffs.iter().enumerate() {
            let (q, r) = x.div_rem(c);
            if !r.is_zero() {
                return Err(Error::NonDivisible { degree: i });
            }
            out.push(q);
        }
        Ok(Self::new(out))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn eval_i64(&self, t: i64) -> BigInt {
        self.eval(&BigInt::from(t))
    }

    /// Symmetric about `center`: `b_i = b_{2*center - i}` for every `i`.
    pub fn is_palindromic_about(&self, center: usize) -> bool {
        let top = 2 * center;
        if self.degree().is_some_and(|d| d > top) {
            return false;
        }
        (0..=top).all(|i| self.coeff(i) == self.coeff(top - i))
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficients as `i64`, if they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    /// Exact quotient `self / den`, computed from the constant term upward.
    pub fn exact_div(&self, den: &IntPoly) -> Result<IntPoly> {
        poly_exact_div(self, den)
    }
}

/// Long division from the constant term upward: returns the first `n_terms`
/// coefficients of `num / den` as a power series. `den[0]` must be nonzero and
/// must divide each intermediate coefficient exactly.
pub(crate) fn div_from_constant(
    num: &[BigInt],
    den: &[BigInt],
    n_terms: usize,
) -> Result<Vec<BigInt>> {
    let lead = match den.first() {
        Some(c) if !c.is_zero() => c,
        _ => return Err(Error::ZeroConstantTerm),
    };
    let mut q: Vec<BigInt> = Vec::with_capacity(n_terms);
    for i in 0..n_terms {
        let mut acc = num.get(i).cloned().unwrap_or_default();
        for j in 1..den.len().min(i + 1) {
            if !den[j].is_zero() {
                acc -= &den[j] * &q[i - j];
            }
        }
        let (quot, rem) = acc.div_rem(lead);
        if !rem.is_zero() {
            return Err(Error::NonDivisible { degree: i });
        }
        q.push(quot);
    }
    Ok(q)
}

/// Exact polynomial division. The powers of `t` dividing `den` are stripped
/// first (they must also divide `num`), then the quotient is built from the
/// constant term upward and checked by multiplying back.
pub fn poly_exact_div(num: &IntPoly, den: &IntPoly) -> Result<IntPoly> {
    let den_val = den.valuation().ok_or(Error::DivisionByZero)?;
    if num.is_zero() {
        return Ok(IntPoly::zero());
    }
    let num_val = num.valuation().unwrap_or(0);
    if num_val < den_val {
        return Err(Error::NonDivisible { degree: num_val });
    }
    let num_c = &num.coeffs[den_val..];
    let den_c = &den.coeffs[den_val..];
    let num_deg = num_c.len() - 1;
    let den_deg = den_c.len() - 1;
    if num_deg < den_deg {
        return Err(Error::NonDivisible { degree: 0 });
    }
    let q = IntPoly::new(div_from_constant(num_c, den_c, num_deg - den_deg + 1)?);
    let back = &q * &IntPoly::new(den_c.to_vec());
    let residue = &IntPoly::new(num_c.to_vec()) - &back;
    match residue.valuation() {
        None => Ok(q),
        Some(d) => Err(Error::NonDivisible {
            degree: d + den_val,
        }),
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &'a IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &'a IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &'a IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Human-readable form, e.g. `1 + t^2 + 4t^3`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self, |k| match k {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{k}"),
        }))
    }
}

/// Shared term renderer for plain and LaTeX output.
pub(crate) fn render_terms(p: &IntPoly, var: impl Fn(usize) -> String) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let v = var(k);
        if v.is_empty() || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str(&v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn geometric_factorization_divides() {
        let q = poly_exact_div(&p(&[1, 0, 0, 0, -1]), &p(&[1, 0, -1])).unwrap();
        assert_eq!(q, p(&[1, 0, 1]));
    }

    #[test]
    fn infinite_series_is_not_divisible() {
        let err = poly_exact_div(&p(&[1, 1]), &p(&[1, -1])).unwrap_err();
        assert!(matches!(err, Error::NonDivisible { .. }));
    }

    #[test]
    fn harder_narasimhan_numerator_at_genus_two() {
        // [(1+t^3)^4 - t^4 (1+t)^4] / [(1-t^2)(1-t^4)]
        let num = IntPoly::one_plus(1, 3).pow(4) - IntPoly::one_plus(1, 1).pow(4).shift(4);
        let den = IntPoly::one_plus(-1, 2) * IntPoly::one_plus(-1, 4);
        assert_eq!(
            poly_exact_div(&num, &den).unwrap(),
            p(&[1, 0, 1, 4, 1, 0, 1])
        );
    }

    #[test]
    fn division_by_zero_and_powers_of_t() {
        assert_eq!(
            poly_exact_div(&p(&[1]), &IntPoly::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            poly_exact_div(&p(&[0, 0, 3]), &p(&[0, 1])).unwrap(),
            p(&[0, 3])
        );
        assert!(poly_exact_div(&p(&[1]), &p(&[0, 1])).is_err());
        assert!(poly_exact_div(&p(&[1, 1]), &p(&[1, 2, 1])).is_err());
    }

    #[test]
    fn non_unit_constant_term() {
        assert_eq!(poly_exact_div(&p(&[2, 4]), &p(&[2])).unwrap(), p(&[1, 2]));
        assert!(poly_exact_div(&p(&[1, 4]), &p(&[2])).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(
            p(&[1, 0, 1, 4, 1, 0, 1]).to_string(),
            "1 + t^2 + 4t^3 + t^4 + t^6"
        );
        assert_eq!(p(&[0, -1, 0, -3]).to_string(), "-t - 3t^3");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn palindromic_and_eval() {
        let q = p(&[1, 0, 1, 4, 1, 0, 1]);
        assert!(q.is_palindromic_about(3));
        assert!(!q.is_palindromic_about(4));
        assert_eq!(q.eval_i64(1), BigInt::from(8));
        assert_eq!(q.eval_i64(-1), BigInt::from(0));
    }

    #[test]
    fn coefficients_exceed_64_bits() {
        let big = IntPoly::one_plus(1, 1).pow(80);
        assert_eq!(big.coeff(40).to_string(), "107507208733336176461620");
        assert!(big.to_i64s().is_none());
    }
}
