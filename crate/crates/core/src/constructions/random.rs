use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::tensor::Endomorphism;

/// Random skew-symmetric matrix with entries `p/q`, `|p| ≤ max_num`, `1 ≤ q ≤ max_den`.
pub fn random_skew<S: Scalar, R: Rng + ?Sized>(n: usize, rng: &mut R, max_num: i64, max_den: i64) -> Matrix<S> {
    let mut k = Matrix::zeros(n, n);
    for r in 0..n {
        for c in r + 1..n {
            let v = S::from_ratio(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=max_den));
            k[(r, c)] = v.clone();
            k[(c, r)] = -v;
        }
    }
    k
}

/// Cayley transform `(I − K)(I + K)⁻¹` of a skew matrix: orthogonal, and
/// rational whenever `K` is.
pub fn cayley_orthogonal<S: Scalar>(skew: &Matrix<S>) -> Result<Endomorphism<S>> {
    let n = skew.rows();
    let id = Matrix::identity(n);
    let inv = id.add(skew).inverse().ok_or_else(|| Error::InvalidParameters("I + K is singular".into()))?;
    Endomorphism::new(id.sub(skew).mul(&inv))
}

pub fn random_cayley_orthogonal<S: Scalar, R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Endomorphism<S>> {
    cayley_orthogonal(&random_skew(n, rng, 2, 3))
}
