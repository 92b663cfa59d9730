use super::deformation::{h_deformation, DeformationParams};
use super::gram_schmidt::quaternionic_gram_schmidt;
use super::heisenberg::heisenberg;
use crate::contact::{verify_degenerate, SasakianLieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::tensor::{Endomorphism, Vector};

/// Acceptance threshold for the preservation report. Looser than the float
/// session tolerance since `ψ` composes Gram–Schmidt with an inversion.
pub const ISOMORPHISM_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Debug)]
pub struct IsomorphismResult<S> {
    /// Matrix of `ψ` from source to target coordinates.
    pub psi: Endomorphism<S>,
    /// Deformation applied to the source to reach `α = 1/2`, if any.
    pub matching: Option<DeformationParams<S>>,
    /// The (possibly deformed) source structure `ψ` is checked against.
    pub source: SasakianLieAlgebra<S>,
    /// `heisenberg(n)`.
    pub target: SasakianLieAlgebra<S>,
    pub report: VerificationReport,
}

/// Deformation `(a, b, c) = (2|α|, 1 − 2|α|, sign α)`, which maps `α` to `1/2`
/// and keeps `δ = 0`.
pub fn alpha_matching_deformation<S: Scalar>(alpha: &S) -> Result<DeformationParams<S>> {
    let two = S::from_int(2);
    let (a, c) = if alpha.is_positive() {
        (two * alpha.clone(), S::one())
    } else {
        (-(two * alpha.clone()), -S::one())
    };
    DeformationParams::new(a.clone(), S::one() - a, c)
}

/// Builds the structure-preserving isomorphism onto the quaternionic
/// Heisenberg algebra: `ξ_i ↦ ξ_i`, and a quaternionic orthonormal basis of
/// `ℋ` onto the standard basis of `ℍⁿ`.
///
/// The input must be nilpotent and pass [`verify_degenerate`]; a non-`1/2`
/// `α` is first matched by an ℋ-homothetic deformation.
pub fn build_isomorphism<S: Scalar>(input: &SasakianLieAlgebra<S>) -> Result<IsomorphismResult<S>> {
    if !input.algebra.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let report = verify_degenerate(&input.algebra, &input.structure, &input.params.alpha)?;
    if !report.passed() {
        return Err(Error::VerificationFailed(report));
    }
    let dim = input.dim();
    if dim < 7 || !(dim - 3).is_multiple_of(4) {
        return Err(Error::InvalidStructure(format!("dimension {dim} is not 4n + 3 with n >= 1")));
    }
    let half = S::from_ratio(1, 2);
    let (source, matching) = if input.params.alpha.approx_eq(&half) {
        (input.clone(), None)
    } else {
        let d = alpha_matching_deformation(&input.params.alpha)?;
        (h_deformation(input, &d)?, Some(d))
    };
    let target = heisenberg::<S>((dim - 3) / 4)?;

    let s = &source.structure;
    let quaternionic = quaternionic_gram_schmidt(&s.metric, &s.phis(), &s.horizontal())?;
    let columns: Vec<Vec<S>> = s.xis().iter().chain(&quaternionic).map(|v| v.0.clone()).collect();
    let frame = Matrix::from_columns(&columns, dim);
    let psi = frame.inverse().map(Endomorphism);

    let mut report = VerificationReport::new();
    report.record("iso.invertible", psi.is_some(), vec![]);
    let Some(psi) = psi else {
        return Ok(IsomorphismResult { psi: Endomorphism::zero(dim), matching, source, target, report });
    };
    report.extend(preservation_report(&psi, &source, &target));
    Ok(IsomorphismResult { psi, matching, source, target, report })
}

/// Defects of `ψ` against the bracket, metric, Reeb vectors, 1-forms and `φ_i`.
pub(crate) fn preservation_report<S: Scalar>(
    psi: &Endomorphism<S>,
    source: &SasakianLieAlgebra<S>,
    target: &SasakianLieAlgebra<S>,
) -> VerificationReport {
    let n = source.dim();
    let tol = ISOMORPHISM_TOLERANCE;
    let mut report = VerificationReport::new();
    let images: Vec<Vector<S>> = (0..n).map(|a| psi.image(a)).collect();

    let mut c = report.begin_with_tolerance::<S>("iso.bracket", tol);
    for a in 0..n {
        for b in a + 1..n {
            let lhs = psi.apply(&source.algebra.bracket_basis(a, b));
            let rhs = target.algebra.bracket(&images[a], &images[b]).expect("dims agree");
            for (k, d) in lhs.sub(&rhs).0.into_iter().enumerate() {
                c.observe(&[a, b, k], d);
            }
        }
    }
    c.finish();

    let (src, tgt) = (&source.structure, &target.structure);
    let mut c = report.begin_with_tolerance::<S>("iso.metric", tol);
    for a in 0..n {
        for b in a..n {
            c.observe(&[a, b], tgt.metric.eval(&images[a], &images[b]) - src.metric.entry(a, b).clone());
        }
    }
    c.finish();

    let mut c = report.begin_with_tolerance::<S>("iso.reeb", tol);
    for i in 0..3 {
        for (k, d) in psi.apply(src.xi(i)).sub(tgt.xi(i)).0.into_iter().enumerate() {
            c.observe(&[i, k], d);
        }
    }
    c.finish();

    let mut c = report.begin_with_tolerance::<S>("iso.eta", tol);
    for i in 0..3 {
        for (k, d) in psi.pullback(tgt.eta(i)).sub(src.eta(i)).0.into_iter().enumerate() {
            c.observe(&[i, k], d);
        }
    }
    c.finish();

    let mut c = report.begin_with_tolerance::<S>("iso.phi", tol);
    for i in 0..3 {
        let d = psi.compose(src.phi(i)).sub(&tgt.phi(i).compose(psi));
        for r in 0..n {
            for col in 0..n {
                c.observe(&[i, r, col], d.matrix()[(r, col)].clone());
            }
        }
    }
    c.finish();
    report
}
