//! GIT stability for torus actions and for the quotients that build the
//! moduli space of bundles.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{invalid, Error, Result};
use crate::geometry::hilbert_poly;
use crate::params::Genus;

/// Weights of `C^*` on the components of a lift of a point (with repetition).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightProfile {
    weights: Vec<i64>,
}

impl WeightProfile {
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::EmptyProfile);
        }
        Ok(WeightProfile { weights })
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn min(&self) -> i64 {
        *self.weights.iter().min().expect("nonempty")
    }

    pub fn max(&self) -> i64 {
        *self.weights.iter().max().expect("nonempty")
    }

    /// Profile of the inverse one-parameter subgroup.
    pub fn negated(&self) -> Self {
        WeightProfile {
            weights: self.weights.iter().map(|w| -w).collect(),
        }
    }
}

/// Ordered from least to most stable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Stability {
    Unstable,
    StrictlySemistable,
    StrictlyPolystable,
    Stable,
}

impl Stability {
    pub fn is_semistable(self) -> bool {
        self != Stability::Unstable
    }

    pub fn is_polystable(self) -> bool {
        matches!(self, Stability::StrictlyPolystable | Stability::Stable)
    }

    pub fn is_stable(self) -> bool {
        self == Stability::Stable
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Stability::Unstable => "unstable",
            Stability::StrictlySemistable => "strictly-semistable",
            Stability::StrictlyPolystable => "strictly-polystable",
            Stability::Stable => "stable",
        }
    }
}

impl fmt::Display for Stability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Verdict from the limit `t -> 0` along one direction, with `mu = min P`.
fn one_direction(p: &WeightProfile) -> Stability {
    let mu = p.min();
    if mu > 0 {
        Stability::Unstable
    } else if mu == 0 && p.max() == 0 {
        Stability::StrictlyPolystable
    } else if mu == 0 {
        Stability::StrictlySemistable
    } else {
        Stability::Stable
    }
}

/// Classify a point under `C^*` from its weight profile. Both `λ` and `λ^{-1}`
/// are nontrivial one-parameter subgroups, so the verdict is the worse of the
/// two directions: `{-1, -2}` is unstable, `{0, -1}` strictly semistable.
pub fn torus_classify(p: &WeightProfile) -> Stability {
    one_direction(p).min(one_direction(&p.negated()))
}

/// One graded piece of a weighted filtration of `V = C^N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiltrationBlock {
    /// `N_i = dim V_i`.
    pub dim: u64,
    /// Weight `a_i`.
    pub weight: i64,
    /// Rank and degree of the graded bundle `G_i`.
    pub rank: u32,
    pub degree: i64,
}

/// A one-parameter subgroup of `SL_N` together with the filtration it
/// induces on the quotient bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationData {
    blocks: Vec<FiltrationBlock>,
    /// Twist `n` at which the quotient `O(-n)^N -> E` is taken.
    pub n: i64,
    /// Twist `m` of the linearization.
    pub m: i64,
    pub genus: Genus,
}

impl FiltrationData {
    pub fn new(blocks: Vec<FiltrationBlock>, n: i64, m: i64, genus: Genus) -> Result<Self> {
        if blocks.is_empty() {
            return Err(invalid("a filtration needs at least one block"));
        }
        if blocks.iter().any(|b| b.dim == 0) {
            return Err(invalid("block dimensions must be positive"));
        }
        if blocks.windows(2).any(|w| w[0].weight <= w[1].weight) {
            return Err(invalid("weights must be strictly decreasing"));
        }
        let trace: i128 = blocks
            .iter()
            .map(|b| i128::from(b.dim) * i128::from(b.weight))
            .sum();
        if trace != 0 {
            return Err(invalid(format!(
                "sum of N_i a_i is {trace}, not 0; not a subgroup of SL_N"
            )));
        }
        Ok(FiltrationData {
            blocks,
            n,
            m,
            genus,
        })
    }

    pub fn blocks(&self) -> &[FiltrationBlock] {
        &self.blocks
    }

    /// `N = sum N_i`.
    pub fn total_dim(&self) -> u64 {
        self.blocks.iter().map(|b| b.dim).sum()
    }

    pub fn total_rank(&self) -> u32 {
        self.blocks.iter().map(|b| b.rank).sum()
    }

    pub fn total_degree(&self) -> i64 {
        self.blocks.iter().map(|b| b.degree).sum()
    }

    fn chi_graded(&self, b: &FiltrationBlock) -> i64 {
        hilbert_poly(b.rank, b.degree, self.genus, self.m)
    }

    /// Multiply every weight by `c > 0`.
    pub fn scale_weights(&self, c: i64) -> Result<Self> {
        if c <= 0 {
            return Err(invalid("scale factor must be positive"));
        }
        let blocks = self
            .blocks
            .iter()
            .map(|b| FiltrationBlock {
                weight: b.weight * c,
                ..*b
            })
            .collect();
        Self::new(blocks, self.n, self.m, self.genus)
    }
}

/// `-sum a_i χ(G_i(m))`.
pub fn hm_weight_graded(f: &FiltrationData) -> BigInt {
    -f.blocks
        .iter()
        .map(|b| BigInt::from(b.weight) * f.chi_graded(b))
        .sum::<BigInt>()
}

/// `sum_{i<s} (a_{i+1} - a_i)(χ(E_i(m)) - dim F_i / N · χ(E(m)))`, in exact
/// rationals.
pub fn hm_weight_filtered(f: &FiltrationData) -> BigRational {
    let big_n = BigInt::from(f.total_dim());
    let chi_total: i64 = f.blocks.iter().map(|b| f.chi_graded(b)).sum();
    let mut chi_partial = 0i64;
    let mut dim_partial = 0u64;
    let mut acc = BigRational::zero();
    for w in f.blocks.windows(2) {
        chi_partial += f.chi_graded(&w[0]);
        dim_partial += w[0].dim;
        let correction = BigRational::new(BigInt::from(dim_partial) * chi_total, big_n.clone());
        let term = BigRational::from_integer(chi_partial.into()) - correction;
        acc += term * BigInt::from(w[1].weight - w[0].weight);
    }
    acc
}

/// Hilbert–Mumford weight of the quotient along the filtration, computed from
/// the graded pieces and cross-checked against the filtered form.
pub fn hm_weight(f: &FiltrationData) -> Result<BigInt> {
    let graded = hm_weight_graded(f);
    let filtered = hm_weight_filtered(f);
    if !filtered.is_integer() {
        return Err(Error::NonIntegerWeight(filtered.to_string()));
    }
    if filtered.to_integer() != graded {
        return Err(Error::ExpressionMismatch {
            first: graded,
            second: filtered.to_string(),
        });
    }
    Ok(graded)
}

/// Inputs to the subspace inequality `N' / χ(E'(m)) <= N / χ(E(m))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuotientTest {
    pub sub_dim: u64,
    pub sub_rank: u32,
    pub sub_degree: i64,
    pub total_dim: u64,
    pub rank: u32,
    pub degree: i64,
    pub genus: Genus,
    pub m: i64,
}

/// Evaluates the inequality cross-multiplied, `N' χ(E(m)) <= N χ(E'(m))`,
/// which needs both Euler characteristics positive.
pub fn quotient_semistability_test(t: &QuotientTest) -> Result<bool> {
    let chi_sub = hilbert_poly(t.sub_rank, t.sub_degree, t.genus, t.m);
    let chi = hilbert_poly(t.rank, t.degree, t.genus, t.m);
    for c in [chi_sub, chi] {
        if c <= 0 {
            return Err(Error::NonPositiveEuler(c));
        }
    }
    let lhs = i128::from(t.sub_dim) * i128::from(chi);
    let rhs = i128::from(t.total_dim) * i128::from(chi_sub);
    Ok(lhs <= rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classify(w: &[i64]) -> Stability {
        torus_classify(&WeightProfile::new(w.to_vec()).unwrap())
    }

    fn block(dim: u64, weight: i64, rank: u32, degree: i64) -> FiltrationBlock {
        FiltrationBlock {
            dim,
            weight,
            rank,
            degree,
        }
    }

    fn g2() -> Genus {
        Genus::new(2).unwrap()
    }

    #[test]
    fn torus_examples() {
        assert_eq!(classify(&[1, 2]), Stability::Unstable);
        assert_eq!(classify(&[0]), Stability::StrictlyPolystable);
        assert_eq!(classify(&[-1, 2]), Stability::Stable);
        assert_eq!(classify(&[0, 3]), Stability::StrictlySemistable);
        assert_eq!(classify(&[0, 0, 0]), Stability::StrictlyPolystable);
    }

    #[test]
    fn inverse_direction_matters() {
        assert_eq!(classify(&[-1, -2]), Stability::Unstable);
        assert_eq!(classify(&[0, -1]), Stability::StrictlySemistable);
    }

    #[test]
    fn empty_profile() {
        assert_eq!(WeightProfile::new(vec![]), Err(Error::EmptyProfile));
    }

    #[test]
    fn single_block_weight_is_zero() {
        let f = FiltrationData::new(vec![block(4, 0, 2, 1)], 3, 5, g2()).unwrap();
        assert_eq!(hm_weight(&f).unwrap(), BigInt::from(0));
    }

    #[test]
    fn two_block_weight() {
        let f =
            FiltrationData::new(vec![block(1, 1, 1, 0), block(1, -1, 1, 1)], 10, 5, g2()).unwrap();
        assert_eq!(hm_weight_graded(&f), BigInt::from(1));
        assert_eq!(hm_weight(&f).unwrap(), BigInt::from(1));
        assert_eq!(
            hm_weight(&f.scale_weights(3).unwrap()).unwrap(),
            BigInt::from(3)
        );
    }

    #[test]
    fn filtration_validation() {
        assert!(
            FiltrationData::new(vec![block(1, -1, 1, 0), block(1, 1, 1, 1)], 0, 5, g2()).is_err()
        );
        assert!(
            FiltrationData::new(vec![block(2, 1, 1, 0), block(1, -1, 1, 1)], 0, 5, g2()).is_err()
        );
        assert!(FiltrationData::new(vec![], 0, 5, g2()).is_err());
    }

    fn quot(sub_dim: u64, sub_rank: u32, sub_degree: i64, m: i64) -> QuotientTest {
        // E of rank 2, degree 1 at n = 5: N = χ(E(5)) = 9
        QuotientTest {
            sub_dim,
            sub_rank,
            sub_degree,
            total_dim: 9,
            rank: 2,
            degree: 1,
            genus: g2(),
            m,
        }
    }

    #[test]
    fn quotient_examples() {
        assert!(quotient_semistability_test(&quot(9, 2, 1, 10)).unwrap());
        // slope 1 > 1/2, N' = χ(E'(5)) = 5
        assert!(!quotient_semistability_test(&quot(5, 1, 1, 10)).unwrap());
        // slope 0 < 1/2, N' = χ(E'(5)) = 4
        assert!(quotient_semistability_test(&quot(4, 1, 0, 10)).unwrap());
    }

    #[test]
    fn quotient_needs_positive_euler() {
        assert_eq!(
            quotient_semistability_test(&quot(4, 1, 0, 1)),
            Err(Error::NonPositiveEuler(0))
        );
    }
}
