//! Subcommand implementations, generic over the scalar backend.

use std::path::Path;

use serde::Serialize;
use tasaki_core::constructions::{
    build_isomorphism, flat_boothby_wang, h_deformation, heisenberg, t3, DeformationParams, FlatHyperkahler,
};
use tasaki_core::contact::{checks, infer_parameters, verify_3_compat, verify_3ad, verify_acms, verify_degenerate};
use tasaki_core::scalar::parse_scalar;
use tasaki_core::{Error, Rational, SasakiParams, SasakianLieAlgebra, Scalar, VerificationReport};

use crate::document::{quaternionic_labels, DocumentError, Input, ScalarMode, ScalarText, StructureDocument};
use crate::report::{ParametersEntry, ReportDocument};

/// Failure classes with stable exit codes.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Exit 2: unreadable input, bad arguments, malformed documents.
    #[error("{0}")]
    Usage(String),
    /// Exit 1: the mathematics does not check out.
    #[error("{0}")]
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(_) => 1,
            CliError::Usage(_) => 2,
        }
    }
}

impl From<DocumentError> for CliError {
    fn from(e: DocumentError) -> Self {
        CliError::Usage(format!("invalid document at {e}"))
    }
}

fn math(e: Error) -> CliError {
    match e {
        Error::InvalidParameters(m) => CliError::Usage(m),
        Error::Precondition { stage, report } => {
            CliError::Math(format!("precondition `{stage}` failed:\n{}", ReportDocument::new(&report, None).render()))
        }
        Error::VerificationFailed(report) => CliError::Math(format!("verification failed:\n{}", ReportDocument::new(&report, None).render())),
        other => CliError::Math(other.to_string()),
    }
}

pub fn read_document(path: &Path) -> Result<StructureDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    StructureDocument::parse(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) if p != Path::new("-") => {
            std::fs::write(p, text).map_err(|e| CliError::Usage(format!("cannot write {}: {e}", p.display())))
        }
        _ => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_param<S: Scalar>(text: &str, name: &str) -> Result<S, CliError> {
    parse_scalar::<S>(text).map_err(|e| CliError::Usage(format!("--{name}: {e}")))
}

/// Result of [`verify`]: the report plus the parameters the equations were checked with.
pub struct Verification<S> {
    pub report: ReportDocument,
    pub params: Option<SasakiParams<S>>,
}

/// Runs the checks stage by stage (Jacobi, metric, almost contact axioms,
/// compatibility, structure equations) and stops after the first failing
/// stage, so a broken input is reported at its earliest defect only.
///
/// Parameters come from the document when declared, otherwise they are inferred.
pub fn verify<S: Scalar>(input: &Input<S>, degenerate_only: bool) -> Verification<S> {
    let (l, s) = (&input.algebra, &input.structure);
    let mut report = VerificationReport::new();
    let done = |report: &VerificationReport, params| Verification { report: ReportDocument::new(report, None), params };

    report.extend(l.jacobi_check());
    if !report.passed() {
        return done(&report, None);
    }
    report.record(checks::METRIC, s.metric.is_positive_definite(), vec![]);
    if !report.passed() {
        return done(&report, None);
    }
    for (i, t) in s.triples.iter().enumerate() {
        report.extend(verify_acms(&s.metric, t, i));
    }
    if !report.passed() {
        return done(&report, None);
    }
    report.extend(verify_3_compat(s));
    if !report.passed() {
        return done(&report, None);
    }

    let inferred = infer_parameters(l, s);
    let params = match (&input.alpha, &input.delta, &inferred) {
        (Some(a), d, _) => SasakiParams { alpha: a.clone(), delta: d.clone().unwrap_or_else(S::zero) },
        (None, d, Ok(p)) => {
            let mut params = p.to_params(S::one());
            if let Some(d) = d {
                params.delta = d.clone();
            }
            params
        }
        (None, _, Err(e)) => {
            report.push(tasaki_core::Check {
                name: "parameters.inferred".into(),
                passed: false,
                witness: vec![],
                defect: Some(e.to_string()),
                max_defect: f64::INFINITY,
            });
            return done(&report, None);
        }
    };

    if !degenerate_only {
        report.extend(verify_3ad(l, s, &params).expect("preconditions already checked"));
        if !report.passed() {
            return done(&report, Some(params));
        }
    }
    if params.is_degenerate() {
        report.extend(verify_degenerate(l, s, &params.alpha).expect("preconditions already checked"));
    } else if degenerate_only {
        report.record("parameters.degenerate", false, vec![]);
    }
    let mut doc = ReportDocument::new(&report, None);
    doc.inferred_parameters = inferred.ok().map(|p| ParametersEntry::of(&p));
    Verification { report: doc, params: Some(params) }
}

pub fn cmd_verify<S: Scalar>(doc: &StructureDocument, degenerate_only: bool, json: Option<&Path>) -> Result<u8, CliError> {
    let input = doc.to_input::<S>()?;
    let v = verify(&input, degenerate_only);
    match json {
        Some(p) => {
            write_output(Some(p), &v.report.to_json())?;
            if p != Path::new("-") {
                print!("{}", v.report.render());
            }
        }
        None => print!("{}", v.report.render()),
    }
    Ok(if v.report.passed() { 0 } else { 1 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GenerateKind {
    Heisenberg,
    T3,
    FlatBw,
}

/// Builds a generator output in exact mode.
pub fn generate(kind: GenerateKind, n: usize, alpha: Option<&str>) -> Result<StructureDocument, CliError> {
    let alpha = alpha.map(|a| parse_param::<Rational>(a, "alpha")).transpose()?;
    if alpha.as_ref().is_some_and(Scalar::is_zero) {
        return Err(CliError::Usage("--alpha must be nonzero".into()));
    }
    let built: SasakianLieAlgebra<Rational> = match kind {
        GenerateKind::Heisenberg => {
            if alpha.is_some() {
                return Err(CliError::Usage("heisenberg has fixed alpha = 1/2; use flat-bw for other values".into()));
            }
            heisenberg(n).map_err(math)?
        }
        GenerateKind::T3 => t3(alpha.unwrap_or_else(Rational::one)).map_err(math)?,
        GenerateKind::FlatBw => {
            let base = FlatHyperkahler::standard(n).map_err(math)?;
            flat_boothby_wang(&base, alpha.unwrap_or_else(Rational::one)).map_err(math)?
        }
    };
    Ok(StructureDocument::from_sasakian(&built, quaternionic_labels(built.dim())))
}

fn sasakian_from<S: Scalar>(input: Input<S>) -> Result<SasakianLieAlgebra<S>, CliError> {
    let params = match input.alpha.clone() {
        Some(alpha) => SasakiParams { alpha, delta: input.delta.clone().unwrap_or_else(S::zero) },
        None => infer_parameters(&input.algebra, &input.structure).map_err(math)?.to_params(S::one()),
    };
    Ok(SasakianLieAlgebra { algebra: input.algebra, structure: input.structure, params })
}

pub fn deform<S: Scalar>(doc: &StructureDocument, a: &str, b: &str, c: &str) -> Result<StructureDocument, CliError> {
    let d = DeformationParams::new(parse_param::<S>(a, "a")?, parse_param::<S>(b, "b")?, parse_param::<S>(c, "c")?)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let input = sasakian_from(doc.to_input::<S>()?)?;
    let out = h_deformation(&input, &d).map_err(math)?;
    Ok(StructureDocument::from_sasakian(&out, doc.basis_labels.clone()))
}

pub fn infer<S: Scalar>(doc: &StructureDocument) -> Result<ParametersEntry, CliError> {
    let input = doc.to_input::<S>()?;
    let p = infer_parameters(&input.algebra, &input.structure).map_err(math)?;
    Ok(ParametersEntry::of(&p))
}

#[derive(Serialize)]
pub struct IsomorphismDocument {
    pub format_version: String,
    pub scalar_mode: ScalarMode,
    pub dim: usize,
    /// Rows of the matrix of `ψ`, columns are images of the source basis.
    pub psi: Vec<Vec<ScalarText>>,
    pub matching_deformation: Option<MatchingEntry>,
    pub report: ReportDocument,
}

#[derive(Serialize)]
pub struct MatchingEntry {
    pub a: ScalarText,
    pub b: ScalarText,
    pub c: ScalarText,
}

pub fn isomorphism<S: Scalar>(doc: &StructureDocument) -> Result<IsomorphismDocument, CliError> {
    let input = sasakian_from(doc.to_input::<S>()?)?;
    let iso = build_isomorphism(&input).map_err(|e| match e {
        Error::NotNilpotent => CliError::Math(
            "the Lie algebra is not nilpotent; only nilpotent algebras are isomorphic to a quaternionic Heisenberg algebra".into(),
        ),
        other => math(other),
    })?;
    Ok(IsomorphismDocument {
        format_version: crate::document::FORMAT_VERSION.into(),
        scalar_mode: if S::EXACT { ScalarMode::Exact } else { ScalarMode::Float },
        dim: input.dim(),
        psi: iso.psi.matrix().to_rows().iter().map(|r| r.iter().map(ScalarText::of).collect()).collect(),
        matching_deformation: iso
            .matching
            .map(|d| MatchingEntry { a: ScalarText::of(&d.a), b: ScalarText::of(&d.b), c: ScalarText::of(&d.c) }),
        report: ReportDocument::new(&iso.report, None),
    })
}
