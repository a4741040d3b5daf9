use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

/// Genus of the base curve. Every moduli formula here needs `g >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Genus(u32);

impl Genus {
    pub fn new(g: u32) -> Result<Self> {
        if g < 2 {
            return Err(invalid(format!("genus must be at least 2, got {g}")));
        }
        Ok(Genus(g))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Complex dimension of the SL Higgs moduli space, `6g - 6`; the top
    /// degree of every Poincaré polynomial computed for it.
    pub fn top_degree(self) -> usize {
        6 * (self.0 as usize - 1)
    }

    /// Default truncation order: one past the top degree.
    pub fn default_order(self) -> usize {
        self.top_degree() + 1
    }
}

impl TryFrom<i64> for Genus {
    type Error = Error;
    fn try_from(g: i64) -> Result<Self> {
        u32::try_from(g)
            .map_err(|_| invalid(format!("genus must be at least 2, got {g}")))
            .and_then(Genus::new)
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    GL,
    SL,
    PGL,
}

impl FromStr for Group {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gl" => Ok(Group::GL),
            "sl" => Ok(Group::SL),
            "pgl" => Ok(Group::PGL),
            other => Err(Error::UnsupportedCombination(format!(
                "structure group {other:?}; only gl, sl and pgl are tabulated"
            ))),
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::GL => "GL",
            Group::SL => "SL",
            Group::PGL => "PGL",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModuliParams {
    pub rank: u32,
    pub degree: i64,
    pub genus: Genus,
    pub group: Group,
}

impl ModuliParams {
    pub fn new(rank: u32, degree: i64, genus: u32, group: Group) -> Result<Self> {
        if rank == 0 {
            return Err(invalid("rank must be positive"));
        }
        Ok(ModuliParams {
            rank,
            degree,
            genus: Genus::new(genus)?,
            group,
        })
    }

    /// The rank-2, odd-degree setting of the Betti-number pipelines.
    pub fn rank_two_odd(genus: u32) -> Result<Self> {
        Self::new(2, 1, genus, Group::SL)
    }

    pub fn require_rank_two_odd(&self) -> Result<()> {
        if self.rank != 2 || self.degree.rem_euclid(2) != 1 {
            return Err(Error::UnsupportedCombination(format!(
                "Poincaré pipelines need rank 2 and odd degree, got rank {} degree {}",
                self.rank, self.degree
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_bounds() {
        assert!(Genus::new(1).is_err());
        assert_eq!(Genus::new(2).unwrap().default_order(), 7);
        assert!(Genus::try_from(-3).is_err());
    }

    #[test]
    fn group_parsing() {
        assert_eq!("PGL".parse::<Group>().unwrap(), Group::PGL);
        assert!(matches!(
            "so".parse::<Group>(),
            Err(Error::UnsupportedCombination(_))
        ));
    }

    #[test]
    fn rank_two_odd_check() {
        assert!(ModuliParams::rank_two_odd(3)
            .unwrap()
            .require_rank_two_odd()
            .is_ok());
        let even = ModuliParams::new(2, 2, 3, Group::GL).unwrap();
        assert!(even.require_rank_two_odd().is_err());
        let neg_odd = ModuliParams::new(2, -1, 3, Group::GL).unwrap();
        assert!(neg_odd.require_rank_two_odd().is_ok());
        assert!(ModuliParams::new(0, 1, 3, Group::GL).is_err());
    }
}
