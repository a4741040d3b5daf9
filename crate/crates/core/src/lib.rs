//! Exact topology of rank-2 moduli spaces on a curve of genus `g >= 2`.
//!
//! * [`bundle_poincare`]: Betti numbers of the stable-bundle moduli space,
//!   from the closed quotient and from the Harder–Narasimhan recursion.
//! * [`higgs_poincare`]: Betti numbers of the Higgs moduli space, from the
//!   fixed-point stratification and from Hitchin's closed expression.
//! * [`mirror`]: the rank-2 topological mirror identity, sector by sector.
//! * [`geometry`]: dimensions, spectral-curve numerics, Harder–Narasimhan types.
//! * [`git_stability`]: torus stability and Hilbert–Mumford weights.
//! * [`cli`]: the command-line surface behind the `hitchin` binary.
//!
//! All arithmetic is over arbitrary-precision integers or exact rationals.

pub mod bundle_poincare;
pub mod cli;
pub mod error;
pub mod exactpoly;
pub mod geometry;
pub mod git_stability;
pub mod higgs_poincare;
pub mod mirror;
pub mod params;

pub use error::{Error, Result};
pub use exactpoly::{BivarPoly, IntPoly, TruncSeries};
pub use params::{Genus, Group, ModuliParams};
