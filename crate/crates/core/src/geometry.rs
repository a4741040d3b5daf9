//! Integer bookkeeping: moduli dimensions, the Hitchin base, spectral curves,
//! Hilbert polynomials and Harder–Narasimhan types.

use std::fmt;

use num_rational::Ratio;

use crate::error::{invalid, Error, Result};
use crate::params::{Genus, Group, ModuliParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    /// Stable vector bundles.
    Bundles,
    /// Higgs bundles, equivalently the Betti moduli space.
    Higgs,
    HitchinBase,
}

/// Complex dimension of the moduli space of the given kind.
///
/// | group   | bundles          | Higgs / Betti          | Hitchin base |
/// |---------|------------------|------------------------|--------------|
/// | GL      | `(g-1)r^2 + 1`   | `2[(g-1)r^2 + 1]`      | half of Higgs |
/// | SL, PGL | `(r^2-1)(g-1)`   | `2(r^2-1)(g-1)`        | half of Higgs |
///
/// The PGL spaces are finite quotients of the SL ones, hence equidimensional.
pub fn moduli_dim(params: &ModuliParams, space: Space) -> Result<u64> {
    let r = u64::from(params.rank);
    let g1 = u64::from(params.genus.get() - 1);
    let bundles = match params.group {
        Group::GL => g1 * r * r + 1,
        Group::SL | Group::PGL => (r * r - 1) * g1,
    };
    Ok(match space {
        Space::Bundles => bundles,
        Space::Higgs => 2 * bundles,
        Space::HitchinBase => {
            hitchin_base_dim(params.rank, params.genus, params.group != Group::GL)
        }
    })
}

/// `h^0(K^i)`: `g` for `i = 1`, and `(2i-1)(g-1)` for `i >= 2` by Riemann–Roch,
/// since `deg K^i = 2i(g-1) > 2g-2` kills `h^1`.
pub fn canonical_power_sections(i: u32, g: Genus) -> u64 {
    match i {
        0 => 1,
        1 => u64::from(g.get()),
        _ => u64::from(2 * i - 1) * u64::from(g.get() - 1),
    }
}

/// Dimension of `B = ⊕_{i=1}^r H^0(K^i)`, or of `B_0 = ⊕_{i=2}^r` when `reduced`.
pub fn hitchin_base_dim(r: u32, g: Genus, reduced: bool) -> u64 {
    let start = if reduced { 2 } else { 1 };
    (start..=r).map(|i| canonical_power_sections(i, g)).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpectralNumbers {
    /// Degree of the ramification divisor of the spectral cover.
    pub ramification_degree: u64,
    pub spectral_genus: u64,
    /// Degree of the line bundle `L` on the spectral curve with `deg π_* L = d`.
    pub line_degree_delta: i64,
}

/// Numerics of a smooth `r`-sheeted spectral cover `Y -> X` in the total space of `K`.
pub fn spectral_numbers(r: u32, g: Genus, d: i64) -> Result<SpectralNumbers> {
    if r == 0 {
        return Err(invalid("rank must be positive"));
    }
    let (r64, g1) = (u64::from(r), u64::from(g.get() - 1));
    let ramification_degree = 2 * r64 * (r64 - 1) * g1;
    let spectral_genus = r64 * r64 * g1 + 1;
    // deg π_* L = deg L + (1 - g(Y)) - r(1 - g), solved for deg L
    let line_degree_delta =
        d - (1 - spectral_genus as i64) + i64::from(r) * (1 - i64::from(g.get()));
    Ok(SpectralNumbers {
        ramification_degree,
        spectral_genus,
        line_degree_delta,
    })
}

/// `χ(E(n)) = d + r(n + 1 - g)`.
pub fn hilbert_poly(r: u32, d: i64, g: Genus, n: i64) -> i64 {
    d + i64::from(r) * (n + 1 - i64::from(g.get()))
}

/// Codimension `2g + 4k - 4` of the rank-2 stratum of type `(k+1, -k)`.
pub fn hn_codim_rank2(g: Genus, k: u32) -> u32 {
    2 * g.get() + 4 * k - 4
}

pub type Slope = Ratio<i64>;

/// Harder–Narasimhan type: graded pieces `(rank, degree)` with strictly
/// decreasing slopes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HNType {
    blocks: Vec<(u32, i64)>,
}

impl HNType {
    pub fn new(blocks: Vec<(u32, i64)>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(invalid("a Harder-Narasimhan type needs at least one block"));
        }
        if blocks.iter().any(|&(r, _)| r == 0) {
            return Err(invalid("block ranks must be positive"));
        }
        let ty = HNType { blocks };
        let slopes = ty.slopes();
        if slopes.windows(2).any(|w| w[0] <= w[1]) {
            return Err(invalid(format!(
                "slopes must be strictly decreasing, got {}",
                fmt_slopes(&slopes)
            )));
        }
        Ok(ty)
    }

    /// Type of a semistable bundle.
    pub fn semistable(rank: u32, degree: i64) -> Result<Self> {
        Self::new(vec![(rank, degree)])
    }

    pub fn blocks(&self) -> &[(u32, i64)] {
        &self.blocks
    }

    pub fn rank(&self) -> u32 {
        self.blocks.iter().map(|b| b.0).sum()
    }

    pub fn degree(&self) -> i64 {
        self.blocks.iter().map(|b| b.1).sum()
    }

    pub fn slopes(&self) -> Vec<Slope> {
        self.blocks
            .iter()
            .map(|&(r, d)| Slope::new(d, i64::from(r)))
            .collect()
    }

    /// The length-`r` vector with each slope repeated rank-many times.
    pub fn slope_vector(&self) -> Vec<Slope> {
        self.blocks
            .iter()
            .flat_map(|&(r, d)| std::iter::repeat_n(Slope::new(d, i64::from(r)), r as usize))
            .collect()
    }
}

impl fmt::Display for HNType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_slopes(&self.slope_vector()))
    }
}

fn fmt_slopes(s: &[Slope]) -> String {
    let parts: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Shatz order: `a <= b` iff every partial sum of the slope vector of `a` is
/// at most the corresponding partial sum for `b`.
pub fn hn_leq(a: &HNType, b: &HNType) -> Result<bool> {
    if a.rank() != b.rank() || a.degree() != b.degree() {
        return Err(Error::IncompatibleTypes(format!(
            "rank/degree ({}, {}) vs ({}, {})",
            a.rank(),
            a.degree(),
            b.rank(),
            b.degree()
        )));
    }
    let (va, vb) = (a.slope_vector(), b.slope_vector());
    let r = va.len();
    let mut sa = Slope::from_integer(0);
    let mut sb = Slope::from_integer(0);
    for i in 0..r.saturating_sub(1) {
        sa += va[i];
        sb += vb[i];
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}
