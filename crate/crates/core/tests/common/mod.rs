//! Independent oracles: quaternion arithmetic written out by hand, in plain
//! `f64`/`i64`, sharing nothing with the library.
#![allow(dead_code)]

use tasaki_core::{LieAlgebra, Rational, Scalar};

/// Hamilton product of `(w, x, y, z)` quaternions.
pub fn qmul(p: [i64; 4], q: [i64; 4]) -> [i64; 4] {
    let [a1, b1, c1, d1] = p;
    let [a2, b2, c2, d2] = q;
    [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

pub const UNITS: [[i64; 4]; 3] = [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];

/// `φ_i` of `h_n` as an integer matrix, from the compatibility rules on
/// `𝒱` and left quaternion multiplication on each block of `ℍⁿ`.
pub fn phi_oracle(n: usize, i: usize) -> Vec<Vec<i64>> {
    let dim = 4 * n + 3;
    let mut m = vec![vec![0; dim]; dim];
    let (j, k) = ((i + 1) % 3, (i + 2) % 3);
    m[k][j] = 1;
    m[j][k] = -1;
    for block in 0..n {
        for src in 0..4 {
            let mut e = [0; 4];
            e[src] = 1;
            let img = qmul(UNITS[i], e);
            for (dst, v) in img.iter().enumerate() {
                m[3 + 4 * block + dst][3 + 4 * block + src] = *v;
            }
        }
    }
    m
}

/// `[e_a, e_b]` of `h_n` from `g([X, Y], ξ_i) = g(φ_iX, Y)` with `g` the
/// identity Gram matrix.
pub fn bracket_oracle(n: usize, a: usize, b: usize) -> Vec<i64> {
    let dim = 4 * n + 3;
    let mut out = vec![0; dim];
    if a < 3 || b < 3 {
        return out;
    }
    for (i, slot) in out.iter_mut().take(3).enumerate() {
        *slot = phi_oracle(n, i)[b][a];
    }
    out
}

pub fn rational_constants(l: &LieAlgebra<Rational>) -> Vec<(usize, usize, usize, Rational)> {
    l.structure_constants().map(|(i, j, k, c)| (i, j, k, c.clone())).collect()
}

pub fn r(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}
