//! Exact integer arithmetic: dense polynomials in `t`, truncated power series,
//! sparse polynomials in `u, v`, and the symmetric-product generating function.
//!
//! Division always runs from the constant term upward, so exact polynomial
//! division and power-series expansion share one convolution loop; the only
//! difference is whether a nonzero remainder is an error.

mod bivar;
mod intpoly;
mod macdonald;
mod series;

pub use bivar::{bivar_eval_signed_binomial, signed_binomial_product, BivarPoly};
pub use intpoly::{poly_exact_div, IntPoly};
pub use macdonald::coeff_extract_x;
pub use series::{series_expand, TruncSeries};

pub(crate) use intpoly::render_terms;
