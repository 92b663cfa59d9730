use crate::contact::{verify_3_compat, verify_acms, AlmostContact3Structure};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::tensor::Vector;

/// The unique bracket with `𝒱` central, `[ℋ, ℋ] ⊂ 𝒱` and
/// `η_i([X, Y]) = 2α g(φ_iX, Y)` on horizontal vectors.
///
/// Works in any basis: arguments are projected to `ℋ` first and the result
/// is assembled as `Σ_i η_i([X, Y]) ξ_i`.
pub fn reconstruct_bracket<S: Scalar>(s: &AlmostContact3Structure<S>, alpha: &S) -> Result<LieAlgebra<S>> {
    if alpha.is_zero() {
        return Err(Error::InvalidParameters("alpha must be nonzero".into()));
    }
    let mut report = VerificationReport::new();
    for (i, t) in s.triples.iter().enumerate() {
        report.extend(verify_acms(&s.metric, t, i));
    }
    report.extend(verify_3_compat(s));
    if !report.passed() {
        return Err(Error::Precondition { stage: "almost 3-contact metric structure".into(), report });
    }
    let n = s.dim();
    let two_alpha = S::from_int(2) * alpha.clone();
    let proj: Vec<Vector<S>> = (0..n).map(|a| s.horizontal_projection(&Vector::basis(n, a))).collect();
    let mut entries = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let mut value = Vector::zero(n);
            for i in 0..3 {
                let c = two_alpha.clone() * s.metric.eval(&s.phi(i).apply(&proj[a]), &proj[b]);
                value = value.add(&s.xi(i).scale(&c));
            }
            entries.extend(value.0.into_iter().enumerate().map(|(k, c)| (a, b, k, c)));
        }
    }
    LieAlgebra::new(n, entries)
}
