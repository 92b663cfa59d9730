use crate::contact::{infer_parameters, verify_3ad, AlmostContact3Structure, AlmostContactStructure, SasakianLieAlgebra};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// ℋ-homothetic deformation parameters with `a > 0`, `c ≠ 0`, `a + b = c²`.
///
/// The last constraint keeps the deformed Reeb vectors of unit length.
#[derive(Clone, Debug, PartialEq)]
pub struct DeformationParams<S> {
    pub a: S,
    pub b: S,
    pub c: S,
}

impl<S: Scalar> DeformationParams<S> {
    pub fn new(a: S, b: S, c: S) -> Result<Self> {
        if !a.is_positive() {
            return Err(Error::InvalidParameters("deformation requires a > 0".into()));
        }
        if c.is_zero() {
            return Err(Error::InvalidParameters("deformation requires c != 0".into()));
        }
        if !(a.clone() + b.clone()).approx_eq(&(c.clone() * c.clone())) {
            return Err(Error::InvalidParameters(format!("deformation requires a + b = c^2 (got a + b = {}, c^2 = {})", a.clone() + b.clone(), c.clone() * c.clone())));
        }
        Ok(DeformationParams { a, b, c })
    }

    /// `(1, λ² − 1, λ)`.
    pub fn from_lambda(lambda: S) -> Result<Self> {
        Self::new(S::one(), lambda.clone() * lambda.clone() - S::one(), lambda)
    }

    pub fn identity() -> Self {
        DeformationParams { a: S::one(), b: S::zero(), c: S::one() }
    }
}

/// Applies `g̃ = a g + b Σ η_i⊗η_i`, `η̃_i = c η_i`, `ξ̃_i = ξ_i / c`, `φ̃_i = φ_i`,
/// keeping the Lie algebra. The new `(α, δ)` are inferred from the result.
///
/// With the conventions of this crate the inferred values come out as
/// `α̃ = cα/a` and `δ̃ = δ/c`.
pub fn h_deformation<S: Scalar>(input: &SasakianLieAlgebra<S>, d: &DeformationParams<S>) -> Result<SasakianLieAlgebra<S>> {
    let d = DeformationParams::new(d.a.clone(), d.b.clone(), d.c.clone())?;
    let before = verify_3ad(&input.algebra, &input.structure, &input.params)?;
    if !before.passed() {
        return Err(Error::VerificationFailed(before));
    }
    let s = &input.structure;
    let metric = (0..3).fold(s.metric.scale(&d.a), |g, i| g.add_square(s.eta(i), &d.b));
    let inv_c = d.c.recip();
    let tr = |t: &AlmostContactStructure<S>| AlmostContactStructure {
        xi: t.xi.scale(&inv_c),
        eta: t.eta.scale(&d.c),
        phi: t.phi.clone(),
    };
    let structure = AlmostContact3Structure { metric, triples: [tr(&s.triples[0]), tr(&s.triples[1]), tr(&s.triples[2])] };
    let inferred = infer_parameters(&input.algebra, &structure)?;
    let params = inferred.to_params(input.params.alpha.clone());
    let after = verify_3ad(&input.algebra, &structure, &params)?;
    if !after.passed() {
        return Err(Error::VerificationFailed(after));
    }
    Ok(SasakianLieAlgebra { algebra: input.algebra.clone(), structure, params })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn parameter_invariants() {
        assert!(DeformationParams::new(q(1, 1), q(3, 1), q(2, 1)).is_ok());
        let err = DeformationParams::new(q(1, 1), q(0, 1), q(2, 1)).unwrap_err().to_string();
        assert!(err.contains("a + b = c^2"), "{err}");
        assert!(DeformationParams::new(q(0, 1), q(1, 1), q(1, 1)).is_err());
        assert!(DeformationParams::new(q(1, 1), q(-1, 1), q(0, 1)).is_err());
        assert_eq!(DeformationParams::from_lambda(q(1, 2)).unwrap().b, q(-3, 4));
    }
}
