//! Lie algebras given by structure constants.
//!
//! Left-invariant forms use the sign convention `dη(X, Y) = −η([X, Y])`; in
//! general degree the Chevalley–Eilenberg differential of a constant form is
//!
//! ```text
//! dω(X_0, …, X_k) = Σ_{i<j} (−1)^{i+j} ω([X_i, X_j], X_0, …, X̂_i, …, X̂_j, …, X_k).
//! ```

use std::collections::BTreeMap;

use crate::error::{check_dim, Error, Result};
use crate::forms::{increasing_tuples, AlternatingForm};
use crate::linalg::{row_space_basis, Matrix};
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::tensor::{BilinearForm, Endomorphism, Vector};

/// Finite-dimensional Lie algebra `[e_i, e_j] = Σ_k c^k_{ij} e_k`.
///
/// Construction does not check the Jacobi identity; call [`LieAlgebra::jacobi_check`].
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra<S> {
    dim: usize,
    /// Nonzero constants keyed by `(i, j, k)` with `i < j`.
    constants: BTreeMap<(usize, usize, usize), S>,
    /// Dense `[e_i, e_j]` for all ordered pairs.
    table: Vec<Vec<S>>,
}

impl<S: Scalar> LieAlgebra<S> {
    pub fn abelian(dim: usize) -> Self {
        Self::new(dim, std::iter::empty()).expect("abelian algebra is always valid")
    }

    /// Builds from `(i, j, k, c^k_{ij})` entries. `i > j` entries are stored
    /// negated; `i == j` with a nonzero value and repeated keys are rejected.
    pub fn new(dim: usize, entries: impl IntoIterator<Item = (usize, usize, usize, S)>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidStructure("dimension must be positive".into()));
        }
        let mut constants = BTreeMap::new();
        for (i, j, k, c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidStructure(format!("index ({i}, {j}, {k}) out of range for dimension {dim}")));
            }
            if i == j {
                if c.is_zero() {
                    continue;
                }
                return Err(Error::InvalidStructure(format!("[e_{i}, e_{i}] must vanish")));
            }
            let (key, value) = if i < j { ((i, j, k), c) } else { ((j, i, k), -c) };
            if constants.contains_key(&key) {
                return Err(Error::InvalidStructure(format!("duplicate structure constant {key:?}")));
            }
            if !value.is_zero() {
                constants.insert(key, value);
            }
        }
        let mut table = vec![vec![S::zero(); dim]; dim * dim];
        for (&(i, j, k), c) in &constants {
            table[i * dim + j][k] = c.clone();
            table[j * dim + i][k] = -c.clone();
        }
        Ok(LieAlgebra { dim, constants, table })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Nonzero `(i, j, k, c^k_{ij})` with `i < j`, in lexicographic order.
    pub fn structure_constants(&self) -> impl Iterator<Item = (usize, usize, usize, &S)> {
        self.constants.iter().map(|(&(i, j, k), c)| (i, j, k, c))
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> S {
        self.table[i * self.dim + j][k].clone()
    }

    /// `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector<S> {
        Vector(self.table[i * self.dim + j].clone())
    }

    pub fn bracket(&self, x: &Vector<S>, y: &Vector<S>) -> Result<Vector<S>> {
        check_dim(self.dim, x.dim())?;
        check_dim(self.dim, y.dim())?;
        let mut out = vec![S::zero(); self.dim];
        for (i, xi) in x.0.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.0.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let w = xi.clone() * yj.clone();
                for (k, c) in self.table[i * self.dim + j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = out[k].clone() + w.clone() * c.clone();
                    }
                }
            }
        }
        Ok(Vector(out))
    }

    /// Matrix of `ad_X = [X, ·]`.
    pub fn ad(&self, x: &Vector<S>) -> Result<Endomorphism<S>> {
        let images = (0..self.dim)
            .map(|j| self.bracket(x, &Vector::basis(self.dim, j)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Endomorphism::from_images(&images))
    }

    /// Triples `i < j < k` where the cyclic sum of double brackets is nonzero.
    pub fn jacobi_violations(&self) -> Vec<JacobiViolation<S>> {
        let n = self.dim;
        let mut out = Vec::new();
        for t in increasing_tuples(n, 3) {
            let (i, j, k) = (t[0], t[1], t[2]);
            let e = |a| Vector::basis(n, a);
            let term = |a, b, c| self.bracket(&self.bracket_basis(a, b), &e(c)).expect("dims agree");
            let sum = term(i, j, k).add(&term(j, k, i)).add(&term(k, i, j));
            if !sum.is_zero() {
                out.push(JacobiViolation { triple: [i, j, k], defect: sum });
            }
        }
        out
    }

    pub fn jacobi_check(&self) -> VerificationReport {
        let mut report = VerificationReport::new();
        let violations = self.jacobi_violations();
        let mut check = report.begin::<S>("Jacobi identity");
        for v in &violations {
            let worst = v.defect.0.iter().max_by(|a, b| a.magnitude().total_cmp(&b.magnitude())).cloned();
            check.observe(&v.triple, worst.unwrap_or_else(S::zero));
        }
        check.finish();
        report
    }

    /// Chevalley–Eilenberg differential of a constant `k`-form.
    pub fn ce_differential(&self, omega: &AlternatingForm<S>) -> Result<AlternatingForm<S>> {
        check_dim(self.dim, omega.dim())?;
        let k = omega.degree();
        Ok(AlternatingForm::from_basis_values(self.dim, k + 1, |x| {
            let mut total = S::zero();
            for i in 0..=k {
                for j in i + 1..=k {
                    let rest: Vec<usize> =
                        x.iter().enumerate().filter(|&(p, _)| p != i && p != j).map(|(_, &v)| v).collect();
                    let mut args = Vec::with_capacity(k);
                    args.push(0);
                    args.extend_from_slice(&rest);
                    let mut term = S::zero();
                    for (m, c) in self.table[x[i] * self.dim + x[j]].iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        args[0] = m;
                        term = term + c.clone() * omega.eval_basis(&args);
                    }
                    total = if (i + j) % 2 == 0 { total + term } else { total - term };
                }
            }
            total
        }))
    }

    /// Center, as the common kernel of all `ad` matrices.
    pub fn center(&self) -> Subspace<S> {
        let n = self.dim;
        // row (j, k): Σ_i X_i c^k_{ij} = 0
        let m = Matrix::from_fn(n * n, n, |row, i| {
            let (j, k) = (row / n, row % n);
            self.table[i * n + j][k].clone()
        });
        Subspace::from_basis_unchecked(n, m.kernel().into_iter().map(Vector).collect())
    }

    /// Span of `[a, b]` for `a ∈ A`, `b ∈ B`.
    pub fn bracket_span(&self, a: &Subspace<S>, b: &Subspace<S>) -> Subspace<S> {
        let mut vs = Vec::new();
        for x in &a.basis {
            for y in &b.basis {
                vs.push(self.bracket(x, y).expect("dims agree"));
            }
        }
        Subspace::span(self.dim, &vs)
    }

    pub fn is_ideal(&self, s: &Subspace<S>) -> bool {
        let whole = Subspace::full(self.dim);
        self.bracket_span(&whole, s).is_subspace_of(s)
    }

    /// `L ⊇ [L, L] ⊇ [L, [L, L]] ⊇ …`, ending at the first zero or repeated term.
    pub fn lower_central_series(&self) -> Vec<Subspace<S>> {
        let whole = Subspace::full(self.dim);
        let mut series = vec![whole.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_span(&whole, last);
            let stop = next.dim() == 0 || next.dim() == last.dim();
            series.push(next);
            if stop {
                return series;
            }
        }
    }

    /// `(true, class)` when the lower central series reaches zero; class counts nonzero terms.
    pub fn nilpotency(&self) -> (bool, usize) {
        let series = self.lower_central_series();
        let nilpotent = series.last().is_none_or(|s| s.dim() == 0);
        let class = series.iter().filter(|s| s.dim() > 0).count();
        (nilpotent, if nilpotent { class } else { 0 })
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency().0
    }

    /// Transport along a linear isomorphism `A`: `[X, Y]' = A[A⁻¹X, A⁻¹Y]`.
    pub fn transport(&self, a: &Endomorphism<S>) -> Result<Self> {
        check_dim(self.dim, a.dim())?;
        let inv = a.inverse().ok_or_else(|| Error::InvalidParameters("transport map is singular".into()))?;
        let n = self.dim;
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let x = inv.image(i);
                let y = inv.image(j);
                let b = a.apply(&self.bracket(&x, &y)?);
                entries.extend(b.0.into_iter().enumerate().map(|(k, c)| (i, j, k, c)));
            }
        }
        Self::new(n, entries)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> LieAlgebra<T> {
        LieAlgebra::new(self.dim, self.structure_constants().map(|(i, j, k, c)| (i, j, k, f(c))))
            .expect("mapping preserves validity")
    }

    /// True when all structure constants agree within the backend tolerance.
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.table.iter().zip(&other.table).all(|(a, b)| a.iter().zip(b).all(|(x, y)| x.approx_eq(y)))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct JacobiViolation<S> {
    pub triple: [usize; 3],
    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
    pub defect: Vector<S>,
}

/// Linear subspace stored by an echelon-form basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<S> {
    ambient: usize,
    basis: Vec<Vector<S>>,
}

impl<S: Scalar> Subspace<S> {
    pub fn span(ambient: usize, vectors: &[Vector<S>]) -> Self {
        let raw: Vec<Vec<S>> = vectors.iter().map(|v| v.0.clone()).collect();
        let basis = row_space_basis(&raw, ambient).into_iter().map(Vector).collect();
        Subspace { ambient, basis }
    }

    fn from_basis_unchecked(ambient: usize, basis: Vec<Vector<S>>) -> Self {
        Subspace { ambient, basis }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: (0..ambient).map(|i| Vector::basis(ambient, i)).collect() }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new() }
    }

    /// `{x : M x = 0}`.
    pub fn kernel_of(m: &Matrix<S>) -> Self {
        Subspace { ambient: m.cols(), basis: m.kernel().into_iter().map(Vector).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector<S>] {
        &self.basis
    }

    pub fn contains(&self, v: &Vector<S>) -> bool {
        if v.is_zero() {
            return true;
        }
        let mut vs = self.basis.clone();
        vs.push(v.clone());
        Subspace::span(self.ambient, &vs).dim() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn same_as(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.dim() == other.dim() && self.is_subspace_of(other)
    }
}

/// Which conditions [`structure_derivations`] imposes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DerivationConstraints {
    /// `D[X, Y] = [DX, Y] + [X, DY]`
    pub derivation: bool,
    /// `g(DX, Y) + g(X, DY) = 0`
    pub skew: bool,
    /// `D φ_i = φ_i D`
    pub commute_phi: bool,
    /// `D ξ_i = 0`
    pub fix_reeb: bool,
}

impl Default for DerivationConstraints {
    fn default() -> Self {
        DerivationConstraints { derivation: true, skew: true, commute_phi: true, fix_reeb: true }
    }
}

/// Basis of the infinitesimal structure-preserving maps: derivations of `L`
/// that are `g`-skew, commute with every `φ_i` and kill every `ξ_i`.
pub fn structure_derivations<S: Scalar>(
    lie: &LieAlgebra<S>,
    g: &BilinearForm<S>,
    phi: &[Endomorphism<S>],
    xi: &[Vector<S>],
    constraints: DerivationConstraints,
) -> Result<Vec<Endomorphism<S>>> {
    let n = lie.dim();
    check_dim(n, g.dim())?;
    for p in phi {
        check_dim(n, p.dim())?;
    }
    for x in xi {
        check_dim(n, x.dim())?;
    }
    // unknown D_{rc} (image of e_c, component r) sits at r * n + c
    let var = |r: usize, c: usize| r * n + c;
    let mut rows: Vec<Vec<S>> = Vec::new();
    let mut push = |row: Vec<S>| {
        if row.iter().any(|x| !x.is_zero()) {
            rows.push(row);
        }
    };
    if constraints.derivation {
        for a in 0..n {
            for b in a + 1..n {
                for k in 0..n {
                    let mut row = vec![S::zero(); n * n];
                    for m in 0..n {
                        let c = lie.constant(a, b, m);
                        if !c.is_zero() {
                            row[var(k, m)] = row[var(k, m)].clone() + c;
                        }
                    }
                    for r in 0..n {
                        let c1 = lie.constant(r, b, k);
                        if !c1.is_zero() {
                            row[var(r, a)] = row[var(r, a)].clone() - c1;
                        }
                        let c2 = lie.constant(a, r, k);
                        if !c2.is_zero() {
                            row[var(r, b)] = row[var(r, b)].clone() - c2;
                        }
                    }
                    push(row);
                }
            }
        }
    }
    if constraints.skew {
        for a in 0..n {
            for b in a..n {
                let mut row = vec![S::zero(); n * n];
                for r in 0..n {
                    row[var(r, a)] = row[var(r, a)].clone() + g.entry(r, b).clone();
                    row[var(r, b)] = row[var(r, b)].clone() + g.entry(a, r).clone();
                }
                push(row);
            }
        }
    }
    if constraints.commute_phi {
        for p in phi {
            let pm = p.matrix();
            for r in 0..n {
                for c in 0..n {
                    let mut row = vec![S::zero(); n * n];
                    for m in 0..n {
                        row[var(r, m)] = row[var(r, m)].clone() + pm[(m, c)].clone();
                        row[var(m, c)] = row[var(m, c)].clone() - pm[(r, m)].clone();
                    }
                    push(row);
                }
            }
        }
    }
    if constraints.fix_reeb {
        for x in xi {
            for r in 0..n {
                let mut row = vec![S::zero(); n * n];
                for c in 0..n {
                    row[var(r, c)] = x.0[c].clone();
                }
                push(row);
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..n * n).map(|u| {
            let mut v = vec![S::zero(); n * n];
            v[u] = S::one();
            v
        }).collect()
    } else {
        Matrix::from_rows(rows).expect("uniform rows").kernel()
    };
    Ok(kernel
        .into_iter()
        .map(|v| Endomorphism(Matrix::from_fn(n, n, |r, c| v[var(r, c)].clone())))
        .collect())
}
