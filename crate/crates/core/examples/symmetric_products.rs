//! Poincaré polynomials of symmetric products of a curve.

use hitchin::exactpoly::coeff_extract_x;

fn main() {
    let g = 2;
    for n in 0..=5 {
        let p = coeff_extract_x(g, n);
        println!("S^{n} X: {p}   chi = {}", p.eval_i64(-1));
    }
}
