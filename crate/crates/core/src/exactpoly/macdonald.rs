use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;

use super::intpoly::IntPoly;

/// Coefficient of `x^n` in `(1 + x t)^{2g} / ((1 - x)(1 - x t^2))`, as a
/// polynomial in `t`.
///
/// Expanding the three factors and collecting `x^a * (x t^2)^b * (x t)^c` with
/// `a + b + c = n` gives `sum C(2g, c) t^{c + 2b}`. For a curve of genus `g`
/// this is the Poincaré polynomial of its `n`-th symmetric product.
pub fn coeff_extract_x(g: u32, n: u32) -> IntPoly {
    let two_g = BigInt::from(2 * g);
    let mut coeffs = vec![BigInt::zero(); 2 * n as usize + 1];
    for c in 0..=n.min(2 * g) {
        let weight = binomial(two_g.clone(), BigInt::from(c));
        // a = n - b - c ranges freely once b + c <= n
        for b in 0..=(n - c) {
            coeffs[(c + 2 * b) as usize] += &weight;
        }
    }
    IntPoly::new(coeffs)
}
