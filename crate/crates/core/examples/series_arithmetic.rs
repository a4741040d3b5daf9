//! Exact polynomial division and truncated series expansion.

use hitchin::exactpoly::{poly_exact_div, series_expand};
use hitchin::{IntPoly, Result};

fn main() -> Result<()> {
    let one_plus_t = IntPoly::one_plus(1, 1);
    let big = one_plus_t.pow(12);
    println!(
        "(1+t)^12 / (1+t)^5 = {}",
        poly_exact_div(&big, &one_plus_t.pow(5))?
    );

    let den = IntPoly::one_plus(-1, 2) * IntPoly::one_plus(-1, 4);
    let s = series_expand(&IntPoly::one_plus(1, 3).pow(4), &den, 12)?;
    println!("(1+t^3)^4 / ((1-t^2)(1-t^4)) = {s:?}");

    let err = poly_exact_div(&big, &IntPoly::one_plus(-1, 1)).unwrap_err();
    println!("(1+t)^12 / (1-t): {err}");
    Ok(())
}
