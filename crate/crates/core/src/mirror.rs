//! Rank-2 topological mirror symmetry, checked one twisted sector at a time.
//!
//! The group `Gamma = Jac(X)[2]` is modelled as `(Z/2)^{2g}` with the standard
//! symplectic pairing (bit `i` paired with bit `g + i`). For a nontrivial
//! character `kappa` and `gamma = w(kappa)` both sides are assembled from
//! scratch:
//!
//! * left: the `kappa`-variant part of the compactly supported E-polynomial of
//!   the SL Higgs moduli space, summed Hodge number by Hodge number over the
//!   fixed components `F_k`;
//! * right: the Prym E-polynomial averaged over `Gamma` against the pairing,
//!   times `(uv)^{g-1}` for the cotangent directions and `(uv)^{F(gamma)}` for
//!   the fermionic shift.
//!
//! E-polynomials use the signed convention `sum (-1)^{p+q} h^{p,q} u^p v^q`.
//! Under it the Prym contribution twisted by a pairing value `w = ±1` is
//! `(1 - w u)^{g-1} (1 - w v)^{g-1}`, and both sides reduce to
//! `1/2 (uv)^{3g-3} [(1-u)^{g-1}(1-v)^{g-1} - (1+u)^{g-1}(1+v)^{g-1}]`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Pow};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{invalid, Error, Result};
use crate::exactpoly::{signed_binomial_product, BivarPoly};
use crate::params::Genus;

/// Largest genus for which the Weil-pairing average is summed literally; above
/// it the average is replaced by its closed form.
pub const LITERAL_AVERAGE_MAX_GENUS: u32 = 10;

/// Largest genus swept exhaustively by default.
pub const EXHAUSTIVE_MAX_GENUS: u32 = 6;

const MAX_GENUS: u32 = 64;

/// Element of `(Z/2)^{2g}`, stored as the low `2g` bits of a `u128`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gamma2Element {
    bits: u128,
    genus: u32,
}

impl Gamma2Element {
    pub fn new(genus: u32, bits: u128) -> Result<Self> {
        if genus == 0 || genus > MAX_GENUS {
            return Err(invalid(format!("genus {genus} outside 1..={MAX_GENUS}")));
        }
        if bits & !low_mask(genus) != 0 {
            return Err(Error::LengthMismatch {
                left: 2 * genus as usize,
                right: 128 - bits.leading_zeros() as usize,
            });
        }
        Ok(Gamma2Element { bits, genus })
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        if !bits.len().is_multiple_of(2) {
            return Err(invalid("bit vector must have even length 2g"));
        }
        let packed = bits
            .iter()
            .enumerate()
            .fold(0u128, |acc, (i, &b)| acc | (u128::from(b) << i));
        Self::new((bits.len() / 2) as u32, packed)
    }

    pub fn zero(genus: u32) -> Result<Self> {
        Self::new(genus, 0)
    }

    pub fn genus(self) -> u32 {
        self.genus
    }

    pub fn len(self) -> usize {
        2 * self.genus as usize
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn bits(self) -> u128 {
        self.bits
    }

    pub fn bit(self, i: usize) -> bool {
        (self.bits >> i) & 1 == 1
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    pub fn plus(self, other: Self) -> Result<Self> {
        same_length(self, other)?;
        Ok(Gamma2Element {
            bits: self.bits ^ other.bits,
            genus: self.genus,
        })
    }

    /// All `2^{2g}` elements, in binary counting order.
    pub fn all(genus: u32) -> impl Iterator<Item = Gamma2Element> {
        assert!(genus <= 31, "enumerating (Z/2)^{{2g}} needs 2g < 64");
        (0..1u128 << (2 * genus)).map(move |bits| Gamma2Element { bits, genus })
    }

    pub fn nonzero(genus: u32) -> impl Iterator<Item = Gamma2Element> {
        Self::all(genus).skip(1)
    }

    fn halves(self) -> (u128, u128) {
        let g = self.genus;
        let lo = self.bits & ((1u128 << g) - 1);
        (lo, self.bits >> g)
    }
}

impl fmt::Debug for Gamma2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gamma2Element({self})")
    }
}

impl fmt::Display for Gamma2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Character of `(Z/2)^{2g}`: `kappa(x) = (-1)^{<kappa, x>}` for the plain dot product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Character(Gamma2Element);

impl Character {
    pub fn new(bits: Gamma2Element) -> Self {
        Character(bits)
    }

    pub fn bits(self) -> Gamma2Element {
        self.0
    }

    pub fn is_trivial(self) -> bool {
        self.0.is_zero()
    }

    pub fn eval(self, x: Gamma2Element) -> Result<i8> {
        same_length(self.0, x)?;
        Ok(sign_of_parity(self.0.bits & x.bits))
    }

    /// The character `w(gamma, -)`.
    pub fn from_pairing(gamma: Gamma2Element) -> Self {
        let (lo, hi) = gamma.halves();
        Character(Gamma2Element {
            bits: hi | (lo << gamma.genus),
            genus: gamma.genus,
        })
    }

    /// The element `gamma` with `w(gamma, -) = self`; inverse of [`Character::from_pairing`].
    pub fn weil_dual(self) -> Gamma2Element {
        let (lo, hi) = self.0.halves();
        Gamma2Element {
            bits: hi | (lo << self.0.genus),
            genus: self.0.genus,
        }
    }
}

fn low_mask(genus: u32) -> u128 {
    if 2 * genus >= 128 {
        u128::MAX
    } else {
        (1u128 << (2 * genus)) - 1
    }
}

fn same_length(a: Gamma2Element, b: Gamma2Element) -> Result<()> {
    if a.genus != b.genus {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(())
}

fn sign_of_parity(x: u128) -> i8 {
    if x.count_ones().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Weil pairing `(-1)^{a^T J b}` for the standard symplectic form mod 2.
pub fn weil_pairing(a: Gamma2Element, b: Gamma2Element) -> Result<i8> {
    Pairing::Symplectic.pair(a, b)
}

/// Pairing used by the right-hand side. Only `Symplectic` is the real Weil
/// pairing; the others exist to confirm that the check notices a wrong one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pairing {
    #[default]
    Symplectic,
    /// Symplectic form with the last hyperbolic pair removed; degenerate.
    DropLastPair,
    /// Constant `+1`.
    Trivial,
}

impl Pairing {
    pub fn pair(self, a: Gamma2Element, b: Gamma2Element) -> Result<i8> {
        same_length(a, b)?;
        let (alo, ahi) = a.halves();
        let (blo, bhi) = b.halves();
        let form = (alo & bhi) ^ (ahi & blo);
        Ok(match self {
            Pairing::Symplectic => sign_of_parity(form),
            Pairing::DropLastPair => sign_of_parity(form & !(1u128 << (a.genus - 1))),
            Pairing::Trivial => 1,
        })
    }
}

/// `F(gamma) = 2g - 2`: half the complex codimension of `T^* P_gamma`
/// (dimension `2g - 2`) inside the `6g - 6` dimensional moduli space.
pub fn fermionic_shift(g: Genus) -> u32 {
    (6 * (g.get() - 1) - 2 * (g.get() - 1)) / 2
}

/// Hodge polynomial `(1+u)^{g-1}(1+v)^{g-1}` of the Prym variety, an abelian
/// variety of dimension `g - 1`.
pub fn prym_e_poly(g: Genus) -> BivarPoly {
    signed_binomial_product(g.get() - 1, 1, 1)
}

/// Variant part of the E-polynomial for a nontrivial character.
///
/// For each `k`, the `kappa`-isotypic cohomology of `F_k` is
/// `wedge^{kbar} H^1(X, C_gamma)` with `h^{p,q} = C(g-1,p) C(g-1,q)`,
/// `p + q = kbar` odd, shifted by the flow codimension into weight
/// `(uv)^{3g-3}`.
pub fn e_poly_kappa_lhs(g: Genus, kappa: Character) -> Result<BivarPoly> {
    if kappa.is_trivial() {
        return Err(Error::TrivialCharacter);
    }
    if kappa.bits().genus() != g.get() {
        return Err(Error::LengthMismatch {
            left: 2 * g.get() as usize,
            right: kappa.bits().len(),
        });
    }
    let h = g.get() - 1;
    let weight = 3 * g.get() - 3;
    let mut out = BivarPoly::zero();
    for k in 1..g.get() {
        let kbar = 2 * g.get() - 2 * k - 1;
        debug_assert_eq!(kbar + g.get() + 2 * k - 2, weight);
        for p in 0..=kbar.min(h) {
            let q = kbar - p;
            if q > h {
                continue;
            }
            let hodge = binomial(BigInt::from(h), BigInt::from(p))
                * binomial(BigInt::from(h), BigInt::from(q));
            // odd total weight
            out.add_term(p + weight, q + weight, -hodge);
        }
    }
    Ok(out)
}

/// `1/2 (uv)^{3g-3} [(1-u)^{g-1}(1-v)^{g-1} - (1+u)^{g-1}(1+v)^{g-1}]`
pub fn e_poly_variant_closed(g: Genus) -> BivarPoly {
    let h = g.get() - 1;
    let bracket = &signed_binomial_product(h, -1, -1) - &signed_binomial_product(h, 1, 1);
    bracket
        .div_scalar_exact(&BigInt::from(2))
        .expect("bracket has even coefficients")
        .shift_uv(3 * g.get() - 3)
}

/// Right-hand side for a nontrivial `gamma`, with the real Weil pairing and shift.
pub fn e_poly_rhs(g: Genus, gamma: Gamma2Element) -> Result<BivarPoly> {
    e_poly_rhs_with(g, gamma, Pairing::Symplectic, fermionic_shift(g))
}

pub fn e_poly_rhs_with(
    g: Genus,
    gamma: Gamma2Element,
    pairing: Pairing,
    shift: u32,
) -> Result<BivarPoly> {
    if gamma.is_zero() {
        return Err(Error::TrivialElement);
    }
    if gamma.genus() != g.get() {
        return Err(Error::LengthMismatch {
            left: 2 * g.get() as usize,
            right: gamma.len(),
        });
    }
    let h = g.get() - 1;
    let group_order = BigInt::from(2).pow(2 * g.get());
    let average = if g.get() <= LITERAL_AVERAGE_MAX_GENUS {
        // every gamma' with the same pairing value contributes the same term,
        // so tally the pairing values over the whole group first
        let (mut plus, mut minus) = (0u64, 0u64);
        for other in Gamma2Element::all(g.get()) {
            match pairing.pair(gamma, other)? {
                1 => plus += 1,
                _ => minus += 1,
            }
        }
        let sum = &signed_binomial_product(h, -1, -1).scale(&BigInt::from(plus))
            - &signed_binomial_product(h, 1, 1).scale(&BigInt::from(minus));
        sum.div_scalar_exact(&group_order)?
    } else {
        let bracket = &signed_binomial_product(h, -1, -1) - &signed_binomial_product(h, 1, 1);
        bracket.div_scalar_exact(&BigInt::from(2))?
    };
    Ok(average.shift_uv(h + shift))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirrorOptions {
    /// Number of nonzero elements to check; `None` checks all of them.
    pub sample: Option<usize>,
    pub seed: u64,
    pub pairing: Pairing,
    /// Replaces the fermionic shift `2g - 2`.
    pub shift_override: Option<u32>,
}

impl MirrorOptions {
    pub const DEFAULT_SAMPLE: usize = 64;

    /// Exhaustive up to genus 6, a seeded sample above.
    pub fn for_genus(g: Genus) -> Self {
        MirrorOptions {
            sample: (g.get() > EXHAUSTIVE_MAX_GENUS).then_some(Self::DEFAULT_SAMPLE),
            seed: 0,
            pairing: Pairing::Symplectic,
            shift_override: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaCheck {
    pub gamma: Gamma2Element,
    /// First differing coefficient `(p, q, lhs, rhs)`, if any.
    pub mismatch: Option<(u32, u32, BigInt, BigInt)>,
}

impl GammaCheck {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirrorReport {
    pub genus: Genus,
    pub lhs: BivarPoly,
    pub rhs_sample: BivarPoly,
    pub checks: Vec<GammaCheck>,
}

impl MirrorReport {
    pub fn elements_checked(&self) -> usize {
        self.checks.len()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(GammaCheck::passed)
    }

    /// `Err(IdentityViolation)` for the first failing element.
    pub fn check(&self) -> Result<()> {
        match self.checks.iter().find(|c| !c.passed()) {
            None => Ok(()),
            Some(GammaCheck {
                gamma,
                mismatch: Some((p, q, lhs, rhs)),
            }) => Err(Error::IdentityViolation {
                gamma: gamma.to_string(),
                p: *p,
                q: *q,
                lhs: lhs.clone(),
                rhs: rhs.clone(),
            }),
            Some(_) => unreachable!(),
        }
    }
}

fn chosen_elements(g: Genus, opts: &MirrorOptions) -> Vec<Gamma2Element> {
    let gg = g.get();
    match opts.sample {
        Some(n) if gg > 31 || n < (1usize << (2 * gg)) - 1 => {
            let mut rng = StdRng::seed_from_u64(opts.seed);
            let mask = low_mask(gg);
            let mut picked = std::collections::BTreeSet::new();
            let limit = if gg <= 31 {
                n.min((1usize << (2 * gg)) - 1)
            } else {
                n
            };
            while picked.len() < limit {
                let bits = rng.gen::<u128>() & mask;
                if bits != 0 {
                    picked.insert(bits);
                }
            }
            picked
                .into_iter()
                .map(|bits| Gamma2Element::new(gg, bits).expect("masked"))
                .collect()
        }
        _ => Gamma2Element::nonzero(gg).collect(),
    }
}

/// Compare both sides for every chosen nonzero `gamma`.
pub fn mirror_report(g: Genus, opts: &MirrorOptions) -> Result<MirrorReport> {
    let shift = opts.shift_override.unwrap_or_else(|| fermionic_shift(g));
    let mut checks = Vec::new();
    let mut lhs_sample = None;
    let mut rhs_sample = None;
    for gamma in chosen_elements(g, opts) {
        let kappa = Character::from_pairing(gamma);
        let lhs = e_poly_kappa_lhs(g, kappa)?;
        let mismatch = match e_poly_rhs_with(g, gamma, opts.pairing, shift) {
            Ok(rhs) => {
                let diff = lhs.first_difference(&rhs);
                rhs_sample.get_or_insert(rhs);
                diff
            }
            // the average was not even integral
            Err(Error::NonDivisible { .. }) => Some((0, 0, BigInt::one(), BigInt::default())),
            Err(e) => return Err(e),
        };
        lhs_sample.get_or_insert(lhs);
        checks.push(GammaCheck { gamma, mismatch });
    }
    Ok(MirrorReport {
        genus: g,
        lhs: lhs_sample.unwrap_or_else(|| e_poly_variant_closed(g)),
        rhs_sample: rhs_sample.unwrap_or_default(),
        checks,
    })
}

/// Default sweep; fails with the first violation.
pub fn mirror_verify(g: Genus) -> Result<MirrorReport> {
    let report = mirror_report(g, &MirrorOptions::for_genus(g))?;
    report.check()?;
    Ok(report)
}
