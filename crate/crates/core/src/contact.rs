//! Almost 3-contact metric structures on a metric Lie algebra and the
//! 3-(α,δ)-Sasakian conditions.
//!
//! Conventions: `Φ(X, Y) = g(X, φY)`; left-invariant forms satisfy
//! `dη(X, Y) = −η([X, Y])`. With these, the vertical part of each fundamental
//! form is `Φ_i|_𝒱 = −η_j ∧ η_k` for even permutations `(i j k)`, so
//!
//! ```text
//! dη_i = 2α Φ_i + 2(α − δ) η_j ∧ η_k
//! ```
//!
//! specializes at `δ = 0` to `dη_i = 2α Φ_i^ℋ`.

use crate::error::{check_dim, Error, Result};
use crate::forms::{increasing_tuples, AlternatingForm};
use crate::lie::{LieAlgebra, Subspace};
use crate::linalg::Matrix;
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::tensor::{metric_dual, BilinearForm, Covector, Endomorphism, Vector};

/// Even permutations `(i j k)` of `(0 1 2)`.
pub const EVEN_PERMUTATIONS: [(usize, usize, usize); 3] = [(0, 1, 2), (1, 2, 0), (2, 0, 1)];

/// One almost contact triple `(ξ, η, φ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlmostContactStructure<S> {
    pub xi: Vector<S>,
    pub eta: Covector<S>,
    pub phi: Endomorphism<S>,
}

/// Three almost contact triples sharing a metric.
#[derive(Clone, Debug, PartialEq)]
pub struct AlmostContact3Structure<S> {
    pub metric: BilinearForm<S>,
    pub triples: [AlmostContactStructure<S>; 3],
}

impl<S: Scalar> AlmostContact3Structure<S> {
    /// Assembles a structure; `eta` defaults to the metric duals of `xi`.
    pub fn new(
        metric: BilinearForm<S>,
        xi: [Vector<S>; 3],
        eta: Option<[Covector<S>; 3]>,
        phi: [Endomorphism<S>; 3],
    ) -> Result<Self> {
        let n = metric.dim();
        for x in &xi {
            check_dim(n, x.dim())?;
        }
        for p in &phi {
            check_dim(n, p.dim())?;
        }
        let eta = match eta {
            Some(e) => {
                for c in &e {
                    check_dim(n, c.dim())?;
                }
                e
            }
            None => [metric_dual(&metric, &xi[0])?, metric_dual(&metric, &xi[1])?, metric_dual(&metric, &xi[2])?],
        };
        let [x0, x1, x2] = xi;
        let [e0, e1, e2] = eta;
        let [p0, p1, p2] = phi;
        Ok(AlmostContact3Structure {
            metric,
            triples: [
                AlmostContactStructure { xi: x0, eta: e0, phi: p0 },
                AlmostContactStructure { xi: x1, eta: e1, phi: p1 },
                AlmostContactStructure { xi: x2, eta: e2, phi: p2 },
            ],
        })
    }

    pub fn dim(&self) -> usize {
        self.metric.dim()
    }

    pub fn xi(&self, i: usize) -> &Vector<S> {
        &self.triples[i].xi
    }

    pub fn eta(&self, i: usize) -> &Covector<S> {
        &self.triples[i].eta
    }

    pub fn phi(&self, i: usize) -> &Endomorphism<S> {
        &self.triples[i].phi
    }

    pub fn phis(&self) -> [Endomorphism<S>; 3] {
        [self.phi(0).clone(), self.phi(1).clone(), self.phi(2).clone()]
    }

    pub fn xis(&self) -> [Vector<S>; 3] {
        [self.xi(0).clone(), self.xi(1).clone(), self.xi(2).clone()]
    }

    /// `𝒱 = span(ξ_1, ξ_2, ξ_3)`.
    pub fn vertical(&self) -> Subspace<S> {
        Subspace::span(self.dim(), &self.xis())
    }

    /// `ℋ = ∩ ker η_i`.
    pub fn horizontal(&self) -> Subspace<S> {
        let m = Matrix::from_rows((0..3).map(|i| self.eta(i).0.clone()).collect()).expect("uniform rows");
        Subspace::kernel_of(&m)
    }

    /// `X ↦ X − Σ η_i(X) ξ_i`.
    pub fn horizontal_projection(&self, x: &Vector<S>) -> Vector<S> {
        (0..3).fold(x.clone(), |acc, i| acc.sub(&self.xi(i).scale(&self.eta(i).apply(x))))
    }

    /// Push-forward along a linear isomorphism `A` (a change of basis).
    pub fn transport(&self, a: &Endomorphism<S>) -> Result<Self> {
        check_dim(self.dim(), a.dim())?;
        let inv = a.inverse().ok_or_else(|| Error::InvalidParameters("transport map is singular".into()))?;
        let metric = self.metric.pullback(&inv);
        let tr = |t: &AlmostContactStructure<S>| AlmostContactStructure {
            xi: a.apply(&t.xi),
            eta: inv.pullback(&t.eta),
            phi: a.compose(&t.phi).compose(&inv),
        };
        Ok(AlmostContact3Structure { metric, triples: [tr(&self.triples[0]), tr(&self.triples[1]), tr(&self.triples[2])] })
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T + Copy) -> AlmostContact3Structure<T> {
        let tr = |t: &AlmostContactStructure<S>| AlmostContactStructure { xi: t.xi.map(f), eta: t.eta.map(f), phi: t.phi.map(f) };
        AlmostContact3Structure {
            metric: self.metric.map(f),
            triples: [tr(&self.triples[0]), tr(&self.triples[1]), tr(&self.triples[2])],
        }
    }
}

/// The pair `(α, δ)` with `α ≠ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct SasakiParams<S> {
    pub alpha: S,
    pub delta: S,
}

impl<S: Scalar> SasakiParams<S> {
    pub fn new(alpha: S, delta: S) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::InvalidParameters("alpha must be nonzero".into()));
        }
        Ok(SasakiParams { alpha, delta })
    }

    pub fn degenerate(alpha: S) -> Result<Self> {
        Self::new(alpha, S::zero())
    }

    pub fn is_degenerate(&self) -> bool {
        self.delta.is_zero()
    }
}

/// A Lie algebra with an almost 3-contact metric structure and its parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct SasakianLieAlgebra<S> {
    pub algebra: LieAlgebra<S>,
    pub structure: AlmostContact3Structure<S>,
    pub params: SasakiParams<S>,
}

impl<S: Scalar> SasakianLieAlgebra<S> {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T + Copy) -> SasakianLieAlgebra<T> {
        SasakianLieAlgebra {
            algebra: self.algebra.map(f),
            structure: self.structure.map(f),
            params: SasakiParams { alpha: f(&self.params.alpha), delta: f(&self.params.delta) },
        }
    }

    /// Rewrites everything in a new basis: `A` maps old coordinates to new ones.
    pub fn transport(&self, a: &Endomorphism<S>) -> Result<Self> {
        Ok(SasakianLieAlgebra {
            algebra: self.algebra.transport(a)?,
            structure: self.structure.transport(a)?,
            params: self.params.clone(),
        })
    }
}

/// `Φ(X, Y) = g(X, φY)`; fails if the result is not alternating.
pub fn fundamental_form<S: Scalar>(g: &BilinearForm<S>, phi: &Endomorphism<S>) -> Result<AlternatingForm<S>> {
    check_dim(g.dim(), phi.dim())?;
    let m = g.matrix().mul(phi.matrix());
    let n = g.dim();
    for a in 0..n {
        for b in a..n {
            if !(m[(a, b)].clone() + m[(b, a)].clone()).is_zero() {
                return Err(Error::NotAlternating(a, b));
            }
        }
    }
    Ok(AlternatingForm::from_basis_values(n, 2, |ab| m[(ab[0], ab[1])].clone()))
}

/// `Φ^ℋ = Φ ∘ (π_ℋ ⊗ π_ℋ)`.
pub fn horizontal_part<S: Scalar>(s: &AlmostContact3Structure<S>, phi_form: &AlternatingForm<S>) -> Result<AlternatingForm<S>> {
    check_dim(s.dim(), phi_form.dim())?;
    let n = s.dim();
    let proj: Vec<Vector<S>> = (0..n).map(|a| s.horizontal_projection(&Vector::basis(n, a))).collect();
    let mut err = None;
    let form = AlternatingForm::from_basis_values(n, 2, |ab| {
        phi_form.eval(&[proj[ab[0]].clone(), proj[ab[1]].clone()]).unwrap_or_else(|e| {
            err = Some(e);
            S::zero()
        })
    });
    err.map_or(Ok(form), Err)
}

/// Identifier helpers for the named checks; 1-based structure indices.
pub mod checks {
    pub fn acms(i: usize, what: &str) -> String {
        format!("acms{}.{what}", i + 1)
    }
    pub fn compat(i: usize, j: usize, what: &str) -> String {
        format!("compat{}{}.{what}", i + 1, j + 1)
    }
    pub fn sasakian(i: usize) -> String {
        format!("sasakian{}.structure_equation", i + 1)
    }
    pub fn degenerate(i: usize) -> String {
        format!("degenerate{}.structure_equation", i + 1)
    }
    pub fn kernel(i: usize) -> String {
        format!("degenerate{}.kernel", i + 1)
    }
    pub const JACOBI: &str = "Jacobi identity";
    pub const METRIC: &str = "metric.positive_definite";
    pub const SPLIT_ORTHOGONAL: &str = "split.orthogonal";
    pub const SPLIT_DIMENSION: &str = "split.dimension";
    pub const REEB_COMMUTE: &str = "reeb.commute";
    pub const REEB_COMMUTATORS: &str = "reeb.commutators";
}

/// Checks `g(ξ,ξ) = 1`, `η = g(ξ,·)`, `φξ = 0`, `φ² = −id + ξ⊗η` and
/// `g(φX,φY) = g(X,Y) − η(X)η(Y)` on all basis pairs. `index` labels the checks.
pub fn verify_acms<S: Scalar>(g: &BilinearForm<S>, s: &AlmostContactStructure<S>, index: usize) -> VerificationReport {
    let mut report = VerificationReport::new();
    let n = g.dim();
    if s.xi.dim() != n || s.eta.dim() != n || s.phi.dim() != n {
        report.record(checks::acms(index, "dimensions"), false, vec![]);
        return report;
    }

    let mut c = report.begin::<S>(checks::acms(index, "unit"));
    c.observe(&[], g.eval(&s.xi, &s.xi) - S::one());
    c.finish();

    let dual = metric_dual(g, &s.xi).expect("dims checked");
    let mut c = report.begin::<S>(checks::acms(index, "dual"));
    for (r, (a, b)) in dual.0.iter().zip(&s.eta.0).enumerate() {
        c.observe(&[r], a.clone() - b.clone());
    }
    c.finish();

    let phi_xi = s.phi.apply(&s.xi);
    let mut c = report.begin::<S>(checks::acms(index, "phi_xi"));
    for (r, v) in phi_xi.0.into_iter().enumerate() {
        c.observe(&[r], v);
    }
    c.finish();

    let lhs = s.phi.compose(&s.phi);
    let rhs = Endomorphism::outer(&s.xi, &s.eta).sub(&Endomorphism::identity(n));
    let mut c = report.begin::<S>(checks::acms(index, "phi_squared"));
    for r in 0..n {
        for col in 0..n {
            c.observe(&[r, col], lhs.matrix()[(r, col)].clone() - rhs.matrix()[(r, col)].clone());
        }
    }
    c.finish();

    let pulled = g.pullback(&s.phi);
    let mut c = report.begin::<S>(checks::acms(index, "compatible_metric"));
    for a in 0..n {
        for b in a..n {
            let want = g.entry(a, b).clone() - s.eta.0[a].clone() * s.eta.0[b].clone();
            c.observe(&[a, b], pulled.entry(a, b).clone() - want);
        }
    }
    c.finish();
    report
}

/// Checks the three compatibility identities for all even permutations plus
/// the orthogonal `𝒱 ⊕ ℋ` splitting and its dimensions.
pub fn verify_3_compat<S: Scalar>(s: &AlmostContact3Structure<S>) -> VerificationReport {
    let mut report = VerificationReport::new();
    let n = s.dim();
    for &(i, j, k) in &EVEN_PERMUTATIONS {
        let mut c = report.begin::<S>(checks::compat(i, j, "phi_xi"));
        let d = s.phi(i).apply(s.xi(j)).sub(s.xi(k));
        for (r, v) in d.0.into_iter().enumerate() {
            c.observe(&[r], v);
        }
        c.finish();

        let mut c = report.begin::<S>(checks::compat(i, j, "eta_phi"));
        let d = s.phi(j).pullback(s.eta(i)).sub(s.eta(k));
        for (r, v) in d.0.into_iter().enumerate() {
            c.observe(&[r], v);
        }
        c.finish();

        let mut c = report.begin::<S>(checks::compat(i, j, "phi_phi"));
        let lhs = s.phi(i).compose(s.phi(j));
        let rhs = s.phi(k).add(&Endomorphism::outer(s.xi(i), s.eta(j)));
        for r in 0..n {
            for col in 0..n {
                c.observe(&[r, col], lhs.matrix()[(r, col)].clone() - rhs.matrix()[(r, col)].clone());
            }
        }
        c.finish();
    }

    let vertical = s.vertical();
    let horizontal = s.horizontal();
    let mut c = report.begin::<S>(checks::SPLIT_ORTHOGONAL);
    for (i, x) in s.xis().iter().enumerate() {
        for (h, y) in horizontal.basis().iter().enumerate() {
            c.observe(&[i, h], s.metric.eval(x, y));
        }
    }
    c.finish();
    let dims_ok = vertical.dim() == 3 && vertical.dim() + horizontal.dim() == n && n % 4 == 3 && horizontal.dim().is_multiple_of(4);
    report.record(checks::SPLIT_DIMENSION, dims_ok, vec![vertical.dim(), horizontal.dim()]);
    report
}

/// `[ξ_i, ξ_j]` for all pairs.
pub fn reeb_commutators<S: Scalar>(l: &LieAlgebra<S>, s: &AlmostContact3Structure<S>) -> Result<Vec<Vec<Vector<S>>>> {
    check_dim(l.dim(), s.dim())?;
    (0..3)
        .map(|i| (0..3).map(|j| l.bracket(s.xi(i), s.xi(j))).collect())
        .collect()
}

/// Whether `[ξ_i, ξ_j] = 2δ ξ_k` for every even permutation.
pub fn reeb_consistent<S: Scalar>(l: &LieAlgebra<S>, s: &AlmostContact3Structure<S>, delta: &S) -> Result<bool> {
    let table = reeb_commutators(l, s)?;
    let two_delta = S::from_int(2) * delta.clone();
    Ok(EVEN_PERMUTATIONS
        .iter()
        .all(|&(i, j, k)| table[i][j].approx_eq(&s.xi(k).scale(&two_delta))))
}

/// Left-invariant Killing criterion: `ad_X` is `g`-skew.
pub fn killing_check<S: Scalar>(l: &LieAlgebra<S>, g: &BilinearForm<S>, x: &Vector<S>) -> Result<bool> {
    check_dim(l.dim(), g.dim())?;
    let ad = l.ad(x)?;
    let m = g.matrix().mul(ad.matrix());
    let n = l.dim();
    // g([X,e_b], e_a) + g(e_b, [X,e_a])
    Ok((0..n).all(|a| (a..n).all(|b| (m[(a, b)].clone() + m[(b, a)].clone()).is_zero())))
}

/// Runs the shared preconditions in order; returns the first failing stage.
fn preconditions<S: Scalar>(l: &LieAlgebra<S>, s: &AlmostContact3Structure<S>) -> Result<()> {
    check_dim(l.dim(), s.dim())?;
    let fail = |stage: &str, report: VerificationReport| Err(Error::Precondition { stage: stage.into(), report });
    let jacobi = l.jacobi_check();
    if !jacobi.passed() {
        return fail("jacobi", jacobi);
    }
    if !s.metric.is_positive_definite() {
        let mut r = VerificationReport::new();
        r.record(checks::METRIC, false, vec![]);
        return fail("metric", r);
    }
    let mut acms = VerificationReport::new();
    for (i, t) in s.triples.iter().enumerate() {
        acms.extend(verify_acms(&s.metric, t, i));
    }
    if !acms.passed() {
        return fail("almost contact metric", acms);
    }
    let compat = verify_3_compat(s);
    if !compat.passed() {
        return fail("3-contact compatibility", compat);
    }
    Ok(())
}

/// `dη_i`, `Φ_i` for all three structures.
fn differentials_and_forms<S: Scalar>(
    l: &LieAlgebra<S>,
    s: &AlmostContact3Structure<S>,
) -> Result<Vec<(AlternatingForm<S>, AlternatingForm<S>)>> {
    (0..3)
        .map(|i| {
            let d_eta = l.ce_differential(&AlternatingForm::from_covector(s.eta(i)))?;
            let phi_form = fundamental_form(&s.metric, s.phi(i))?;
            Ok((d_eta, phi_form))
        })
        .collect()
}

fn observe_form_defect<S: Scalar>(report: &mut VerificationReport, name: String, defect: &AlternatingForm<S>) -> bool {
    let mut c = report.begin::<S>(name);
    for idx in increasing_tuples(defect.dim(), defect.degree()) {
        c.observe(&idx, defect.coefficient(&idx));
    }
    c.finish()
}

/// Checks `dη_i = 2αΦ_i + 2(α−δ) η_j∧η_k` coefficient-wise.
///
/// Precondition failures (Jacobi, metric, almost contact axioms, compatibility)
/// are returned as [`Error::Precondition`], never as axiom failures.
pub fn verify_3ad<S: Scalar>(l: &LieAlgebra<S>, s: &AlmostContact3Structure<S>, p: &SasakiParams<S>) -> Result<VerificationReport> {
    preconditions(l, s)?;
    let two = S::from_int(2);
    let forms = differentials_and_forms(l, s)?;
    let mut report = VerificationReport::new();
    for &(i, j, k) in &EVEN_PERMUTATIONS {
        let (d_eta, phi_form) = &forms[i];
        let ej = AlternatingForm::from_covector(s.eta(j));
        let ek = AlternatingForm::from_covector(s.eta(k));
        let rhs = phi_form
            .scale(&(two.clone() * p.alpha.clone()))
            .add(&ej.wedge(&ek)?.scale(&(two.clone() * (p.alpha.clone() - p.delta.clone()))))?;
        observe_form_defect(&mut report, checks::sasakian(i), &d_eta.sub(&rhs)?);
    }
    Ok(report)
}

/// Degenerate specialization: `dη_i = 2αΦ_i^ℋ`, `ker dη_i = 𝒱`, and commuting Reeb vectors.
pub fn verify_degenerate<S: Scalar>(l: &LieAlgebra<S>, s: &AlmostContact3Structure<S>, alpha: &S) -> Result<VerificationReport> {
    if alpha.is_zero() {
        return Err(Error::InvalidParameters("alpha must be nonzero".into()));
    }
    preconditions(l, s)?;
    let two_alpha = S::from_int(2) * alpha.clone();
    let forms = differentials_and_forms(l, s)?;
    let vertical = s.vertical();
    let mut report = VerificationReport::new();
    for (i, (d_eta, phi_form)) in forms.iter().enumerate() {
        let rhs = horizontal_part(s, phi_form)?.scale(&two_alpha);
        observe_form_defect(&mut report, checks::degenerate(i), &d_eta.sub(&rhs)?);
    }
    for (i, (d_eta, _)) in forms.iter().enumerate() {
        let radical = Subspace::span(s.dim(), &d_eta.radical());
        report.record(checks::kernel(i), radical.same_as(&vertical), vec![radical.dim()]);
    }
    let table = reeb_commutators(l, s)?;
    let mut c = report.begin::<S>(checks::REEB_COMMUTE);
    for i in 0..3 {
        for j in i + 1..3 {
            for (r, v) in table[i][j].0.iter().enumerate() {
                c.observe(&[i, j, r], v.clone());
            }
        }
    }
    c.finish();
    Ok(report)
}

/// Parameters recovered from a structure. `alpha` is `None` when `ℋ = 0`,
/// where every nonzero `α` satisfies the structure equations.
#[derive(Clone, Debug, PartialEq)]
pub struct InferredParameters<S> {
    pub alpha: Option<S>,
    pub delta: S,
}

impl<S: Scalar> InferredParameters<S> {
    /// Concrete parameters, substituting `fallback_alpha` when `α` is free.
    pub fn to_params(&self, fallback_alpha: S) -> SasakiParams<S> {
        SasakiParams { alpha: self.alpha.clone().unwrap_or(fallback_alpha), delta: self.delta.clone() }
    }
}

/// Recovers `(α, δ)`: `δ` from `[ξ_i, ξ_j] = 2δξ_k`, `α` from the ratio
/// `dη_i : 2Φ_i` on horizontal pairs. All ratios must agree exactly (within
/// tolerance in float mode), and the result is confirmed with [`verify_3ad`].
pub fn infer_parameters<S: Scalar>(l: &LieAlgebra<S>, s: &AlmostContact3Structure<S>) -> Result<InferredParameters<S>> {
    preconditions(l, s)?;
    let not_sasakian = |msg: String| Err(Error::NotSasakian(msg));
    let two = S::from_int(2);

    let table = reeb_commutators(l, s)?;
    let mut delta: Option<S> = None;
    for &(i, j, k) in &EVEN_PERMUTATIONS {
        let b = &table[i][j];
        let d = s.eta(k).apply(b) / two.clone();
        if !b.approx_eq(&s.xi(k).scale(&(two.clone() * d.clone()))) {
            return not_sasakian(format!("[xi_{}, xi_{}] is not a multiple of xi_{}", i + 1, j + 1, k + 1));
        }
        match &delta {
            None => delta = Some(d),
            Some(prev) if prev.approx_eq(&d) => {}
            Some(prev) => return not_sasakian(format!("Reeb commutators give inconsistent delta ({prev} vs {d})")),
        }
    }
    let delta = delta.expect("three permutations");

    let horizontal = s.horizontal();
    let h = horizontal.basis();
    let forms = differentials_and_forms(l, s)?;
    // (ratio, |denominator|): keep the best-conditioned ratio as the reference
    let mut alpha: Option<(S, f64)> = None;
    for (i, (d_eta, phi_form)) in forms.iter().enumerate() {
        for a in 0..h.len() {
            for b in a + 1..h.len() {
                let num = d_eta.eval(&[h[a].clone(), h[b].clone()])?;
                let den = two.clone() * phi_form.eval(&[h[a].clone(), h[b].clone()])?;
                if den.is_zero() {
                    if !num.is_zero() {
                        return not_sasakian(format!("d eta_{} is nonzero where Phi_{} vanishes", i + 1, i + 1));
                    }
                    continue;
                }
                let ratio = num / den.clone();
                match &alpha {
                    None => alpha = Some((ratio, den.magnitude())),
                    Some((prev, _)) if prev.approx_eq(&ratio) => {
                        if den.magnitude() > alpha.as_ref().map_or(0.0, |x| x.1) {
                            alpha = Some((ratio, den.magnitude()));
                        }
                    }
                    Some((prev, _)) => {
                        return not_sasakian(format!("inconsistent alpha ratios ({prev} vs {ratio})"));
                    }
                }
            }
        }
    }
    let alpha = alpha.map(|(a, _)| a);
    if let Some(a) = &alpha {
        if a.is_zero() {
            return not_sasakian("alpha = 0: d eta_i vanishes on the horizontal space".into());
        }
    } else if horizontal.dim() > 0 {
        return not_sasakian("Phi_i vanishes on the horizontal space".into());
    }

    let inferred = InferredParameters { alpha, delta };
    let report = verify_3ad(l, s, &inferred.to_params(S::one()))?;
    if !report.passed() {
        return not_sasakian(format!("inferred parameters do not satisfy the structure equations: {report}"));
    }
    Ok(inferred)
}
