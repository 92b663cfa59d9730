//! The JSON interchange format for structures.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use tasaki_core::contact::{AlmostContact3Structure, SasakianLieAlgebra};
use tasaki_core::linalg::Matrix;
use tasaki_core::scalar::parse_scalar;
use tasaki_core::tensor::metric_dual;
use tasaki_core::{BilinearForm, Covector, Endomorphism, LieAlgebra, Scalar, Vector};

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ScalarMode {
    Exact,
    Float,
}

impl fmt::Display for ScalarMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScalarMode::Exact => "exact",
            ScalarMode::Float => "float",
        })
    }
}

/// A scalar as written in a document. Accepts JSON strings (`"1/2"`,
/// `"0.25"`) and plain JSON numbers; always written back as a string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarText(pub String);

impl Serialize for ScalarText {
    fn serialize<Se: Serializer>(&self, s: Se) -> Result<Se::Ok, Se::Error> {
        s.serialize_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for ScalarText {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Number(serde_json::Number),
        }
        Ok(match Raw::deserialize(d).map_err(|_| serde::de::Error::custom("expected a number or a fraction string"))? {
            Raw::Text(t) => ScalarText(t),
            Raw::Number(n) => ScalarText(n.to_string()),
        })
    }
}

impl ScalarText {
    pub fn of<S: Scalar>(x: &S) -> Self {
        if !S::EXACT && x.to_f64() == 0.0 {
            return ScalarText("0".into());
        }
        ScalarText(x.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstantEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub value: ScalarText,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDocument {
    pub format_version: String,
    pub dim: usize,
    pub scalar_mode: ScalarMode,
    #[serde(default)]
    pub basis_labels: Vec<String>,
    pub structure_constants: Vec<ConstantEntry>,
    pub metric: Vec<Vec<ScalarText>>,
    pub xi: Vec<Vec<ScalarText>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<Vec<Vec<ScalarText>>>,
    pub phi: Vec<Vec<Vec<ScalarText>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<ScalarText>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<ScalarText>,
}

/// A problem in a document, located by a JSON path or a line and column.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{location}: {message}")]
pub struct DocumentError {
    pub location: String,
    pub message: String,
}

fn doc_err(location: impl Into<String>, message: impl Into<String>) -> DocumentError {
    DocumentError { location: location.into(), message: message.into() }
}

/// A parsed document in one scalar backend. `alpha`/`delta` are whatever the
/// document declares.
#[derive(Clone, Debug)]
pub struct Input<S> {
    pub algebra: LieAlgebra<S>,
    pub structure: AlmostContact3Structure<S>,
    pub alpha: Option<S>,
    pub delta: Option<S>,
}

impl StructureDocument {
    /// Parses JSON text; syntax and type errors carry line, column and path.
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            let inner = e.into_inner();
            let location = if path.is_empty() || path == "." || path == "?" {
                format!("line {} column {}", inner.line(), inner.column())
            } else {
                format!("{path} (line {} column {})", inner.line(), inner.column())
            };
            doc_err(location, inner.to_string())
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    /// Validates shapes and converts every value into the backend `S`.
    pub fn to_input<S: Scalar>(&self) -> Result<Input<S>, DocumentError> {
        if self.format_version != FORMAT_VERSION {
            return Err(doc_err("format_version", format!("unsupported version {:?}, expected \"{FORMAT_VERSION}\"", self.format_version)));
        }
        let n = self.dim;
        if n == 0 {
            return Err(doc_err("dim", "dimension must be positive"));
        }
        if !self.basis_labels.is_empty() && self.basis_labels.len() != n {
            return Err(doc_err("basis_labels", format!("expected {n} labels, found {}", self.basis_labels.len())));
        }

        let mut entries = Vec::with_capacity(self.structure_constants.len());
        for (idx, c) in self.structure_constants.iter().enumerate() {
            let at = format!("structure_constants[{idx}]");
            for (name, v) in [("i", c.i), ("j", c.j), ("k", c.k)] {
                if v >= n {
                    return Err(doc_err(format!("{at}.{name}"), format!("index {v} out of range for dimension {n}")));
                }
            }
            if c.i >= c.j {
                return Err(doc_err(at, format!("entries need i < j (got i = {}, j = {})", c.i, c.j)));
            }
            entries.push((c.i, c.j, c.k, scalar::<S>(&c.value, &format!("{at}.value"))?));
        }
        let algebra = LieAlgebra::new(n, entries).map_err(|e| doc_err("structure_constants", e.to_string()))?;

        let metric = matrix::<S>(&self.metric, n, "metric")?;
        if !metric.is_symmetric() {
            return Err(doc_err("metric", "matrix is not symmetric"));
        }
        let metric = BilinearForm::new(metric).map_err(|e| doc_err("metric", e.to_string()))?;

        let xi = triple(&self.xi, "xi", |v, at| vector::<S>(v, n, at).map(Vector))?;
        let eta = match &self.eta {
            Some(e) => Some(triple(e, "eta", |v, at| vector::<S>(v, n, at).map(Covector))?),
            None => None,
        };
        let phi = triple(&self.phi, "phi", |m, at| matrix::<S>(m, n, at).map(Endomorphism))?;
        let structure = match eta {
            Some(_) => AlmostContact3Structure::new(metric, xi, eta, phi),
            None => {
                // metric duals need only symmetry here; positivity is a named check
                let duals = [0, 1, 2].map(|i| Covector(metric.matrix().mul_vec(&xi[i].0)));
                AlmostContact3Structure::new(metric, xi, Some(duals), phi)
            }
        }
        .map_err(|e| doc_err(".", e.to_string()))?;

        let alpha = self.alpha.as_ref().map(|a| scalar::<S>(a, "alpha")).transpose()?;
        if alpha.as_ref().is_some_and(Scalar::is_zero) {
            return Err(doc_err("alpha", "alpha must be nonzero"));
        }
        let delta = self.delta.as_ref().map(|d| scalar::<S>(d, "delta")).transpose()?;
        Ok(Input { algebra, structure, alpha, delta })
    }

    /// Serializes a structure. `eta` is written only when it differs from
    /// the metric duals of `xi`.
    pub fn from_parts<S: Scalar>(
        algebra: &LieAlgebra<S>,
        structure: &AlmostContact3Structure<S>,
        alpha: Option<&S>,
        delta: Option<&S>,
        basis_labels: Vec<String>,
    ) -> Self {
        let n = algebra.dim();
        let text = ScalarText::of::<S>;
        let row = |v: &[S]| v.iter().map(text).collect::<Vec<_>>();
        let rows = |m: &Matrix<S>| m.to_rows().iter().map(|r| row(r)).collect::<Vec<_>>();
        let duals_match = (0..3).all(|i| {
            metric_dual(&structure.metric, structure.xi(i)).is_ok_and(|d| d.approx_eq(structure.eta(i)))
        });
        StructureDocument {
            format_version: FORMAT_VERSION.into(),
            dim: n,
            scalar_mode: if S::EXACT { ScalarMode::Exact } else { ScalarMode::Float },
            basis_labels,
            structure_constants: algebra
                .structure_constants()
                .map(|(i, j, k, c)| ConstantEntry { i, j, k, value: text(c) })
                .collect(),
            metric: rows(structure.metric.matrix()),
            xi: (0..3).map(|i| row(&structure.xi(i).0)).collect(),
            eta: (!duals_match).then(|| (0..3).map(|i| row(&structure.eta(i).0)).collect()),
            phi: (0..3).map(|i| rows(structure.phi(i).matrix())).collect(),
            alpha: alpha.map(text),
            delta: delta.map(text),
        }
    }

    pub fn from_sasakian<S: Scalar>(l: &SasakianLieAlgebra<S>, basis_labels: Vec<String>) -> Self {
        Self::from_parts(&l.algebra, &l.structure, Some(&l.params.alpha), Some(&l.params.delta), basis_labels)
    }
}

/// Labels `ξ_1, ξ_2, ξ_3, e_1, φ_1e_1, φ_2e_1, φ_3e_1, …` for dimension `4n + 3`.
pub fn quaternionic_labels(dim: usize) -> Vec<String> {
    let mut labels: Vec<String> = (1..=3).map(|i| format!("xi{i}")).collect();
    for b in 1..=(dim.saturating_sub(3) / 4) {
        labels.push(format!("e{b}"));
        labels.extend((1..=3).map(|i| format!("phi{i} e{b}")));
    }
    labels
}

fn scalar<S: Scalar>(t: &ScalarText, at: &str) -> Result<S, DocumentError> {
    parse_scalar::<S>(&t.0).map_err(|e| doc_err(at, e.to_string()))
}

fn vector<S: Scalar>(v: &[ScalarText], n: usize, at: &str) -> Result<Vec<S>, DocumentError> {
    if v.len() != n {
        return Err(doc_err(at, format!("expected {n} entries, found {}", v.len())));
    }
    v.iter().enumerate().map(|(i, t)| scalar(t, &format!("{at}[{i}]"))).collect()
}

fn matrix<S: Scalar>(m: &[Vec<ScalarText>], n: usize, at: &str) -> Result<Matrix<S>, DocumentError> {
    if m.len() != n {
        return Err(doc_err(at, format!("expected {n} rows, found {}", m.len())));
    }
    let rows = m
        .iter()
        .enumerate()
        .map(|(r, row)| vector(row, n, &format!("{at}[{r}]")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(rows).expect("rows have equal length"))
}

fn triple<T, X>(items: &[X], at: &str, f: impl Fn(&X, &str) -> Result<T, DocumentError>) -> Result<[T; 3], DocumentError> {
    if items.len() != 3 {
        return Err(doc_err(at, format!("expected 3 entries, found {}", items.len())));
    }
    Ok([f(&items[0], &format!("{at}[0]"))?, f(&items[1], &format!("{at}[1]"))?, f(&items[2], &format!("{at}[2]"))?])
}
