use super::heisenberg::{assemble_phi, quaternion_units, reeb_basis};
use crate::contact::{fundamental_form, AlmostContact3Structure, SasakiParams, SasakianLieAlgebra, EVEN_PERMUTATIONS};
use crate::error::{Error, Result};
use crate::forms::AlternatingForm;
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::tensor::{BilinearForm, Endomorphism, Vector};

/// Flat hyperkähler vector space `(ℝ^{4n}, g_N, I_1, I_2, I_3)` with Kähler
/// forms `ω_i(X, Y) = g_N(X, I_iY)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FlatHyperkahler<S> {
    metric: BilinearForm<S>,
    complex: [Endomorphism<S>; 3],
    kahler: [AlternatingForm<S>; 3],
}

impl<S: Scalar> FlatHyperkahler<S> {
    /// Validates `I_i² = −id`, `I_iI_j = I_k` and `g_N(I_iX, I_iY) = g_N(X, Y)`.
    pub fn new(metric: BilinearForm<S>, complex: [Endomorphism<S>; 3]) -> Result<Self> {
        let n = metric.dim();
        if n == 0 || !n.is_multiple_of(4) {
            return Err(Error::InvalidStructure(format!("hyperkähler dimension {n} is not a positive multiple of 4")));
        }
        if !metric.is_positive_definite() {
            return Err(Error::NotMetric);
        }
        if complex.iter().any(|c| c.dim() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: complex.iter().map(Endomorphism::dim).find(|&d| d != n).unwrap_or(n) });
        }
        let minus_id = Endomorphism::identity(n).scale(&-S::one());
        for (i, c) in complex.iter().enumerate() {
            if !c.compose(c).sub(&minus_id).matrix().is_zero() {
                return Err(Error::InvalidStructure(format!("I_{} does not square to -id", i + 1)));
            }
            if !metric.pullback(c).matrix().sub(metric.matrix()).is_zero() {
                return Err(Error::InvalidStructure(format!("I_{} is not orthogonal", i + 1)));
            }
        }
        for &(i, j, k) in &EVEN_PERMUTATIONS {
            if !complex[i].compose(&complex[j]).sub(&complex[k]).matrix().is_zero() {
                return Err(Error::InvalidStructure(format!("I_{} I_{} != I_{}", i + 1, j + 1, k + 1)));
            }
        }
        let kahler = [
            fundamental_form(&metric, &complex[0])?,
            fundamental_form(&metric, &complex[1])?,
            fundamental_form(&metric, &complex[2])?,
        ];
        Ok(FlatHyperkahler { metric, complex, kahler })
    }

    /// `ℍⁿ` with the Euclidean metric and left quaternion multiplication.
    pub fn standard(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParameters("quaternionic dimension n must be at least 1".into()));
        }
        Self::new(BilinearForm::identity(4 * n), quaternion_units(n))
    }

    pub fn dim(&self) -> usize {
        self.metric.dim()
    }

    pub fn metric(&self) -> &BilinearForm<S> {
        &self.metric
    }

    pub fn complex_structures(&self) -> &[Endomorphism<S>; 3] {
        &self.complex
    }

    pub fn kahler_forms(&self) -> &[AlternatingForm<S>; 3] {
        &self.kahler
    }
}

/// Central extension `ℝ³ ⊕ ℝ^{4n}` of a flat hyperkähler space: `𝒱 = ℝ³` is
/// central and `η_i([X, Y]) = 2α g_N(I_iX, Y)` on horizontal pairs, i.e.
/// `dη_i = 2α ω_i` pulled back. `φ_i = I_i` on `ℋ` and
/// `φ_i = η_j⊗ξ_k − η_k⊗ξ_j` on `𝒱`.
pub fn flat_boothby_wang<S: Scalar>(base: &FlatHyperkahler<S>, alpha: S) -> Result<SasakianLieAlgebra<S>> {
    let params = SasakiParams::degenerate(alpha)?;
    let h = base.dim();
    let dim = h + 3;
    let two_alpha = S::from_int(2) * params.alpha.clone();
    let mut entries = Vec::new();
    for a in 0..h {
        for b in a + 1..h {
            for (i, c) in base.complex.iter().enumerate() {
                let v = base.metric.eval(&c.image(a), &Vector::basis(h, b));
                if !v.is_zero() {
                    entries.push((a + 3, b + 3, i, two_alpha.clone() * v));
                }
            }
        }
    }
    let algebra = LieAlgebra::new(dim, entries)?;
    let metric = BilinearForm::new(Matrix::from_fn(dim, dim, |r, c| match (r >= 3, c >= 3) {
        (true, true) => base.metric.entry(r - 3, c - 3).clone(),
        (false, false) if r == c => S::one(),
        _ => S::zero(),
    }))?;
    let structure = AlmostContact3Structure::new(metric, reeb_basis(dim), None, assemble_phi(&base.complex))?;
    Ok(SasakianLieAlgebra { algebra, structure, params })
}
