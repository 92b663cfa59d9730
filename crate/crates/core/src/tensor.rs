//! Vectors, covectors, endomorphisms and bilinear forms in a fixed basis.

use crate::error::{check_dim, Error, Result};
use crate::linalg::{dot, Matrix};
use crate::scalar::Scalar;

/// Coordinates of an algebra element in the chosen basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Vector<S>(pub Vec<S>);

/// Coordinates of a linear form in the dual basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Covector<S>(pub Vec<S>);

macro_rules! coord_type {
    ($t:ident) => {
        impl<S: Scalar> $t<S> {
            pub fn zero(dim: usize) -> Self {
                $t(vec![S::zero(); dim])
            }

            /// The `i`-th (dual) basis element.
            pub fn basis(dim: usize, i: usize) -> Self {
                let mut v = Self::zero(dim);
                v.0[i] = S::one();
                v
            }

            pub fn dim(&self) -> usize {
                self.0.len()
            }

            pub fn coords(&self) -> &[S] {
                &self.0
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(Scalar::is_zero)
            }

            pub fn approx_eq(&self, other: &Self) -> bool {
                self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| a.approx_eq(b))
            }

            pub fn scale(&self, k: &S) -> Self {
                $t(self.0.iter().map(|x| x.clone() * k.clone()).collect())
            }

            pub fn add(&self, other: &Self) -> Self {
                $t(self.0.iter().zip(&other.0).map(|(a, b)| a.clone() + b.clone()).collect())
            }

            pub fn sub(&self, other: &Self) -> Self {
                $t(self.0.iter().zip(&other.0).map(|(a, b)| a.clone() - b.clone()).collect())
            }

            pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> $t<T> {
                $t(self.0.iter().map(f).collect())
            }
        }
    };
}
coord_type!(Vector);
coord_type!(Covector);

impl<S: Scalar> Covector<S> {
    /// Pairing `η(v)`.
    pub fn apply(&self, v: &Vector<S>) -> S {
        debug_assert_eq!(self.dim(), v.dim());
        dot(&self.0, &v.0)
    }
}

/// Linear map of the algebra; column `c` holds the image of basis vector `c`.
#[derive(Clone, Debug, PartialEq)]
pub struct Endomorphism<S>(pub Matrix<S>);

impl<S: Scalar> Endomorphism<S> {
    pub fn new(matrix: Matrix<S>) -> Result<Self> {
        check_dim(matrix.rows(), matrix.cols())?;
        Ok(Endomorphism(matrix))
    }

    pub fn identity(dim: usize) -> Self {
        Endomorphism(Matrix::identity(dim))
    }

    pub fn zero(dim: usize) -> Self {
        Endomorphism(Matrix::zeros(dim, dim))
    }

    /// Rank-one map `X ↦ η(X) v`.
    pub fn outer(v: &Vector<S>, eta: &Covector<S>) -> Self {
        Endomorphism(Matrix::from_fn(v.dim(), eta.dim(), |r, c| v.0[r].clone() * eta.0[c].clone()))
    }

    /// Builds the map sending basis vector `c` to `images[c]`.
    pub fn from_images(images: &[Vector<S>]) -> Self {
        let cols: Vec<Vec<S>> = images.iter().map(|v| v.0.clone()).collect();
        Endomorphism(Matrix::from_columns(&cols, images.len()))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.0
    }

    pub fn apply(&self, v: &Vector<S>) -> Vector<S> {
        Vector(self.0.mul_vec(&v.0))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Endomorphism(self.0.mul(&other.0))
    }

    /// Pullback of a covector: `η ∘ self`.
    pub fn pullback(&self, eta: &Covector<S>) -> Covector<S> {
        Covector(self.0.transpose().mul_vec(&eta.0))
    }

    pub fn add(&self, other: &Self) -> Self {
        Endomorphism(self.0.add(&other.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Endomorphism(self.0.sub(&other.0))
    }

    pub fn scale(&self, k: &S) -> Self {
        Endomorphism(self.0.scale(k))
    }

    pub fn inverse(&self) -> Option<Self> {
        self.0.inverse().map(Endomorphism)
    }

    pub fn image(&self, c: usize) -> Vector<S> {
        Vector(self.0.column(c))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Endomorphism<T> {
        Endomorphism(self.0.map(f))
    }
}

/// Symmetric bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm<S>(Matrix<S>);

impl<S: Scalar> BilinearForm<S> {
    /// Accepts any square symmetric matrix.
    pub fn new(matrix: Matrix<S>) -> Result<Self> {
        check_dim(matrix.rows(), matrix.cols())?;
        if !matrix.is_symmetric() {
            return Err(Error::InvalidStructure("bilinear form matrix is not symmetric".into()));
        }
        Ok(BilinearForm(matrix))
    }

    /// Accepts only symmetric positive-definite matrices.
    pub fn metric(matrix: Matrix<S>) -> Result<Self> {
        let g = Self::new(matrix).map_err(|_| Error::NotMetric)?;
        if g.is_positive_definite() {
            Ok(g)
        } else {
            Err(Error::NotMetric)
        }
    }

    pub fn identity(dim: usize) -> Self {
        BilinearForm(Matrix::identity(dim))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.0
    }

    pub fn eval(&self, x: &Vector<S>, y: &Vector<S>) -> S {
        dot(&x.0, &self.0.mul_vec(&y.0))
    }

    pub fn entry(&self, i: usize, j: usize) -> &S {
        &self.0[(i, j)]
    }

    /// Positive-definiteness via symmetric elimination without pivoting:
    /// every pivot is a ratio of consecutive leading principal minors.
    pub fn is_positive_definite(&self) -> bool {
        let n = self.dim();
        let mut a = self.0.clone();
        for k in 0..n {
            let pivot = a[(k, k)].clone();
            if !pivot.is_positive() {
                return false;
            }
            for r in k + 1..n {
                let factor = a[(r, k)].clone() / pivot.clone();
                for c in k..n {
                    let delta = factor.clone() * a[(k, c)].clone();
                    a[(r, c)] = a[(r, c)].clone() - delta;
                }
            }
        }
        true
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> BilinearForm<T> {
        BilinearForm(self.0.map(f))
    }

    /// `g + k · (η ⊗ η)`.
    pub fn add_square(&self, eta: &Covector<S>, k: &S) -> Self {
        let n = self.dim();
        BilinearForm(Matrix::from_fn(n, n, |r, c| {
            self.0[(r, c)].clone() + k.clone() * eta.0[r].clone() * eta.0[c].clone()
        }))
    }

    pub fn scale(&self, k: &S) -> Self {
        BilinearForm(self.0.scale(k))
    }

    /// Pullback along a linear map: `(A*g)(X, Y) = g(AX, AY)`.
    pub fn pullback(&self, a: &Endomorphism<S>) -> Self {
        let m = a.0.transpose().mul(&self.0).mul(&a.0);
        BilinearForm(m)
    }
}

/// `X ↦ g(X, ·)`.
pub fn metric_dual<S: Scalar>(g: &BilinearForm<S>, v: &Vector<S>) -> Result<Covector<S>> {
    check_dim(g.dim(), v.dim())?;
    Ok(Covector(g.0.mul_vec(&v.0)))
}

/// Inverse of [`metric_dual`]: the vector `X` with `g(X, ·) = η`.
pub fn inverse_dual<S: Scalar>(g: &BilinearForm<S>, eta: &Covector<S>) -> Result<Vector<S>> {
    check_dim(g.dim(), eta.dim())?;
    g.0.solve(&eta.0).map(Vector).ok_or(Error::NotMetric)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn identity_dual_of_basis_vector() {
        let g = BilinearForm::<Rational>::identity(5);
        let e3 = Vector::basis(5, 2);
        assert_eq!(metric_dual(&g, &e3).unwrap(), Covector::basis(5, 2));
    }

    #[test]
    fn diagonal_metric_dual_scales() {
        let mut m = Matrix::identity(4);
        m[(0, 0)] = q(2);
        let g = BilinearForm::metric(m).unwrap();
        let eta = metric_dual(&g, &Vector::basis(4, 0)).unwrap();
        assert_eq!(eta, Covector::basis(4, 0).scale(&q(2)));
    }

    #[test]
    fn singular_or_indefinite_is_not_metric() {
        let m = Matrix::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(1)]]).unwrap();
        assert!(matches!(BilinearForm::metric(m), Err(Error::NotMetric)));
        let z = Matrix::<Rational>::zeros(2, 2);
        let g = BilinearForm::new(z).unwrap();
        assert!(matches!(inverse_dual(&g, &Covector::basis(2, 0)), Err(Error::NotMetric)));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let g = BilinearForm::<Rational>::identity(3);
        assert!(matches!(
            metric_dual(&g, &Vector::basis(4, 0)),
            Err(Error::DimensionMismatch { expected: 3, found: 4 })
        ));
    }

    proptest! {
        #[test]
        fn dual_roundtrip_exact(entries in proptest::collection::vec(-5i64..=5, 4 * 4), v in proptest::collection::vec(-9i64..=9, 4)) {
            // A^T A + I is positive-definite
            let a = Matrix::from_fn(4, 4, |r, c| q(entries[4 * r + c]));
            let g = BilinearForm::metric(a.transpose().mul(&a).add(&Matrix::identity(4))).unwrap();
            let v = Vector(v.into_iter().map(q).collect());
            let back = inverse_dual(&g, &metric_dual(&g, &v).unwrap()).unwrap();
            prop_assert_eq!(back, v);
        }
    }
}
