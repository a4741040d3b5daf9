use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Sparse polynomial in `u, v` with integer coefficients, keyed by `(p, q)`
/// for the monomial `u^p v^q`. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn monomial(c: BigInt, p: u32, q: u32) -> Self {
        let mut out = Self::zero();
        out.add_term(p, q, c);
        out
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, BigInt)>,
    {
        let mut out = Self::zero();
        for (p, q, c) in terms {
            out.add_term(p, q, c);
        }
        out
    }

    pub fn add_term(&mut self, p: u32, q: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((p, q)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(p, q));
        }
    }

    pub fn coeff(&self, p: u32, q: u32) -> BigInt {
        self.terms.get(&(p, q)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(p, q), c)| (p, q, c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(p, q)| p + q).max()
    }

    /// Multiply by `(uv)^k`.
    pub fn shift_uv(&self, k: u32) -> Self {
        BivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(p, q), c)| ((p + k, q + k), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.terms().map(|(p, q, x)| (p, q, x * c)))
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut out = Self::zero();
        for (p, q, x) in self.terms() {
            let (quot, rem) = x.div_rem(c);
            if !rem.is_zero() {
                return Err(Error::NonDivisible {
                    degree: (p + q) as usize,
                });
            }
            out.add_term(p, q, quot);
        }
        Ok(out)
    }

    pub fn eval(&self, u: &BigInt, v: &BigInt) -> BigInt {
        self.terms().map(|(p, q, c)| c * u.pow(p) * v.pow(q)).sum()
    }

    /// The first monomial (in `(p, q)` order) where `self` and `other` differ.
    pub fn first_difference(&self, other: &BivarPoly) -> Option<(u32, u32, BigInt, BigInt)> {
        let keys: std::collections::BTreeSet<_> = self
            .terms
            .keys()
            .chain(other.terms.keys())
            .copied()
            .collect();
        keys.into_iter().find_map(|(p, q)| {
            let (a, b) = (self.coeff(p, q), other.coeff(p, q));
            (a != b).then_some((p, q, a, b))
        })
    }
}

/// `(1 + sign_u * u)^e (1 + sign_v * v)^e`, expanded exactly.
pub fn signed_binomial_product(exponent: u32, sign_u: i8, sign_v: i8) -> BivarPoly {
    let su = BigInt::from(sign_u.signum());
    let sv = BigInt::from(sign_v.signum());
    let e = BigInt::from(exponent);
    let mut out = BivarPoly::zero();
    for p in 0..=exponent {
        let cu = binomial(e.clone(), BigInt::from(p)) * su.pow(p);
        for q in 0..=exponent {
            let cv = binomial(e.clone(), BigInt::from(q)) * sv.pow(q);
            out.add_term(p, q, &cu * cv);
        }
    }
    out
}

/// `(1 + sign_u u)^{g-1} (1 + sign_v v)^{g-1}` for genus `g >= 2`.
pub fn bivar_eval_signed_binomial(g: u32, sign_u: i8, sign_v: i8) -> Result<BivarPoly> {
    if g < 2 {
        return Err(crate::error::invalid(format!("genus {g} < 2")));
    }
    Ok(signed_binomial_product(g - 1, sign_u, sign_v))
}

impl<'a> Add<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &'a BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (p, q, c) in rhs.terms() {
            out.add_term(p, q, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &'a BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (p, q, c) in rhs.terms() {
            out.add_term(p, q, -c);
        }
        out
    }
}

impl<'a> Mul<&'a BivarPoly> for &'a BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &'a BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (p1, q1, a) in self.terms() {
            for (p2, q2, b) in rhs.terms() {
                out.add_term(p1 + p2, q1 + q2, a * b);
            }
        }
        out
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly::from_terms(self.terms().map(|(p, q, c)| (p, q, -c)))
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({self})")
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (p, q, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            let mono = match (p, q) {
                (0, 0) => String::new(),
                _ => {
                    let part = |x: &str, e: u32| match e {
                        0 => String::new(),
                        1 => x.to_string(),
                        _ => format!("{x}^{e}"),
                    };
                    format!("{}{}", part("u", p), part("v", q))
                }
            };
            if mono.is_empty() || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            f.write_str(&mono)?;
        }
        Ok(())
    }
}
