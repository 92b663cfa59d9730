//! Constant-coefficient alternating forms.
//!
//! A `k`-form is stored sparsely as coefficients of the monomials
//! `e^{i_1} ∧ … ∧ e^{i_k}` with `i_1 < … < i_k`. Monomials evaluate as
//! determinants, `e^I(X_1, …, X_k) = det[e^{i_a}(X_b)]`, which is the shuffle
//! convention without factorial prefactors: `(e^1 ∧ e^2)(e_1, e_2) = 1`.

use std::collections::BTreeMap;

use crate::error::{check_dim, Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::tensor::{Covector, Vector};

#[derive(Clone, Debug, PartialEq)]
pub struct AlternatingForm<S> {
    dim: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, S>,
}

impl<S: Scalar> AlternatingForm<S> {
    pub fn zero(dim: usize, degree: usize) -> Self {
        AlternatingForm { dim, degree, coeffs: BTreeMap::new() }
    }

    pub fn constant(dim: usize, value: S) -> Self {
        let mut f = Self::zero(dim, 0);
        f.insert(Vec::new(), value);
        f
    }

    pub fn from_covector(eta: &Covector<S>) -> Self {
        let mut f = Self::zero(eta.dim(), 1);
        for (i, c) in eta.0.iter().enumerate() {
            f.insert(vec![i], c.clone());
        }
        f
    }

    /// `e^{i_1} ∧ … ∧ e^{i_k}` for arbitrary (possibly unsorted) indices.
    pub fn monomial(dim: usize, indices: &[usize]) -> Self {
        let mut f = Self::zero(dim, indices.len());
        if let Some((sorted, sign)) = sort_with_sign(indices) {
            f.insert(sorted, if sign { S::one() } else { -S::one() });
        }
        f
    }

    /// Builds the `k`-form whose value on increasing basis tuples is `f(tuple)`.
    pub fn from_basis_values(dim: usize, degree: usize, mut f: impl FnMut(&[usize]) -> S) -> Self {
        let mut form = Self::zero(dim, degree);
        for idx in increasing_tuples(dim, degree) {
            let v = f(&idx);
            form.insert(idx, v);
        }
        form
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Stored nonzero coefficients keyed by increasing index tuples.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &S)> {
        self.coeffs.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coefficient(&self, increasing: &[usize]) -> S {
        self.coeffs.get(increasing).cloned().unwrap_or_else(S::zero)
    }

    fn insert(&mut self, idx: Vec<usize>, value: S) {
        debug_assert!(idx.windows(2).all(|w| w[0] < w[1]) && idx.iter().all(|&i| i < self.dim));
        if value.is_zero() {
            self.coeffs.remove(&idx);
        } else {
            self.coeffs.insert(idx, value);
        }
    }

    fn accumulate(&mut self, idx: Vec<usize>, value: S) {
        let current = self.coefficient(&idx);
        self.insert(idx, current + value);
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(Scalar::is_zero)
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.degree == other.degree && self.sub(other).is_ok_and(|d| d.is_zero())
    }

    /// Value on basis vectors `e_{j_1}, …, e_{j_k}` in any order.
    pub fn eval_basis(&self, indices: &[usize]) -> S {
        assert_eq!(indices.len(), self.degree, "wrong number of arguments");
        match sort_with_sign(indices) {
            Some((sorted, true)) => self.coefficient(&sorted),
            Some((sorted, false)) => -self.coefficient(&sorted),
            None => S::zero(),
        }
    }

    /// Value on arbitrary vectors (multilinear, alternating).
    pub fn eval(&self, args: &[Vector<S>]) -> Result<S> {
        check_dim(self.degree, args.len())?;
        for a in args {
            check_dim(self.dim, a.dim())?;
        }
        let k = self.degree;
        Ok(self.coeffs.iter().fold(S::zero(), |acc, (idx, c)| {
            let m = Matrix::from_fn(k, k, |r, col| args[col].0[idx[r]].clone());
            acc + c.clone() * determinant(&m)
        }))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let mut out = self.clone();
        for (idx, c) in &other.coeffs {
            out.accumulate(idx.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-S::one()))
    }

    pub fn scale(&self, k: &S) -> Self {
        let mut out = Self::zero(self.dim, self.degree);
        for (idx, c) in &self.coeffs {
            out.insert(idx.clone(), c.clone() * k.clone());
        }
        out
    }

    /// `ω ∧ τ`.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut out = Self::zero(self.dim, self.degree + other.degree);
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                let joined: Vec<usize> = i.iter().chain(j).copied().collect();
                if let Some((sorted, sign)) = sort_with_sign(&joined) {
                    let v = a.clone() * b.clone();
                    out.accumulate(sorted, if sign { v } else { -v });
                }
            }
        }
        Ok(out)
    }

    /// Interior product `v ⨼ ω`, i.e. `(v ⨼ ω)(X_2, …) = ω(v, X_2, …)`.
    pub fn interior(&self, v: &Vector<S>) -> Result<Self> {
        if self.degree == 0 {
            return Err(Error::ZeroDegree);
        }
        check_dim(self.dim, v.dim())?;
        let mut out = Self::zero(self.dim, self.degree - 1);
        for (idx, c) in &self.coeffs {
            for (a, &i) in idx.iter().enumerate() {
                if v.0[i].is_zero() {
                    continue;
                }
                let rest: Vec<usize> = idx.iter().copied().filter(|&j| j != i).collect();
                let term = c.clone() * v.0[i].clone();
                out.accumulate(rest, if a % 2 == 0 { term } else { -term });
            }
        }
        Ok(out)
    }

    /// Gram matrix `ω(e_a, e_b)` of a 2-form.
    pub fn as_matrix(&self) -> Matrix<S> {
        assert_eq!(self.degree, 2, "as_matrix needs a 2-form");
        Matrix::from_fn(self.dim, self.dim, |a, b| self.eval_basis(&[a, b]))
    }

    /// Radical `{X : ω(X, ·) = 0}` of a 2-form.
    pub fn radical(&self) -> Vec<Vector<S>> {
        self.as_matrix().kernel().into_iter().map(Vector).collect()
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> AlternatingForm<T> {
        let mut out = AlternatingForm::zero(self.dim, self.degree);
        for (idx, c) in &self.coeffs {
            out.insert(idx.clone(), f(c));
        }
        out
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        check_dim(self.dim, other.dim)?;
        check_dim(self.degree, other.degree)
    }
}

/// Sorts distinct indices, returning the parity (`true` = even); `None` on repeats.
pub fn sort_with_sign(indices: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = indices.to_vec();
    let mut even = true;
    // insertion sort, counting transpositions
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            even = !even;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, even))
    }
}

/// All strictly increasing `k`-tuples from `0..n`, lexicographically.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

fn determinant<S: Scalar>(m: &Matrix<S>) -> S {
    let n = m.rows();
    match n {
        0 => S::one(),
        1 => m[(0, 0)].clone(),
        2 => m[(0, 0)].clone() * m[(1, 1)].clone() - m[(0, 1)].clone() * m[(1, 0)].clone(),
        _ => {
            let mut a = m.clone();
            let mut det = S::one();
            for col in 0..n {
                let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                    return S::zero();
                };
                if p != col {
                    for c in 0..n {
                        let tmp = a[(p, c)].clone();
                        a[(p, c)] = a[(col, c)].clone();
                        a[(col, c)] = tmp;
                    }
                    det = -det;
                }
                let pivot = a[(col, col)].clone();
                det = det * pivot.clone();
                for r in col + 1..n {
                    let f = a[(r, col)].clone() / pivot.clone();
                    for c in col..n {
                        let d = f.clone() * a[(col, c)].clone();
                        a[(r, c)] = a[(r, c)].clone() - d;
                    }
                }
            }
            det
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;
    use proptest::prelude::*;

    type F = AlternatingForm<Rational>;

    fn e(dim: usize, i: usize) -> F {
        F::monomial(dim, &[i])
    }

    #[test]
    fn wedge_convention_has_no_factorial() {
        let w = e(3, 0).wedge(&e(3, 1)).unwrap();
        let v = w.eval(&[Vector::basis(3, 0), Vector::basis(3, 1)]).unwrap();
        assert_eq!(v, Rational::from_int(1));
    }

    #[test]
    fn wedge_with_itself_vanishes() {
        assert!(e(4, 2).wedge(&e(4, 2)).unwrap().is_zero());
    }

    #[test]
    fn swapped_arguments_negate() {
        // (η_2 ∧ η_3)(ξ_3, ξ_2) = -1
        let w = e(7, 1).wedge(&e(7, 2)).unwrap();
        assert_eq!(w.eval_basis(&[2, 1]), Rational::from_int(-1));
    }

    #[test]
    fn interior_examples() {
        let w23 = e(7, 1).wedge(&e(7, 2)).unwrap();
        assert!(w23.interior(&Vector::basis(7, 0)).unwrap().is_zero());
        assert_eq!(w23.interior(&Vector::basis(7, 1)).unwrap(), e(7, 2));
        let w12 = e(3, 0).wedge(&e(3, 1)).unwrap();
        assert_eq!(w12.interior(&Vector::basis(3, 0)).unwrap(), e(3, 1));
        assert!(matches!(F::constant(3, Rational::from_int(1)).interior(&Vector::basis(3, 0)), Err(Error::ZeroDegree)));
    }

    #[test]
    fn wedge_dimension_mismatch() {
        assert!(matches!(e(3, 0).wedge(&e(4, 0)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn tuple_counts() {
        assert_eq!(increasing_tuples(7, 2).len(), 21);
        assert_eq!(increasing_tuples(11, 3).len(), 165);
        assert_eq!(increasing_tuples(3, 0), vec![Vec::<usize>::new()]);
    }

    fn arb_form(dim: usize, degree: usize) -> impl Strategy<Value = F> {
        let n = increasing_tuples(dim, degree).len();
        proptest::collection::vec(-3i64..=3, n).prop_map(move |cs| {
            let mut it = cs.into_iter();
            F::from_basis_values(dim, degree, |_| Rational::from_int(it.next().unwrap()))
        })
    }

    fn arb_vec(dim: usize) -> impl Strategy<Value = Vector<Rational>> {
        proptest::collection::vec(-4i64..=4, dim).prop_map(|v| Vector(v.into_iter().map(Rational::from_int).collect()))
    }

    proptest! {
        #[test]
        fn wedge_associative((a, b, c) in (3usize..=11, 0usize..=2, 0usize..=2, 0usize..=2)
            .prop_flat_map(|(d, p, q, r)| (arb_form(d, p), arb_form(d, q), arb_form(d, r)))) {
            let left = a.wedge(&b).unwrap().wedge(&c).unwrap();
            let right = a.wedge(&b.wedge(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn graded_commutative(a in arb_form(6, 2), b in arb_form(6, 1)) {
            let ab = a.wedge(&b).unwrap();
            let ba = b.wedge(&a).unwrap();
            // (-1)^{2·1} = 1
            prop_assert_eq!(ab, ba);
            let c = b.clone();
            let bc = b.wedge(&c).unwrap();
            prop_assert!(bc.is_zero());
        }

        #[test]
        fn interior_is_antiderivation(a in arb_form(5, 2), b in arb_form(5, 1), v in arb_vec(5)) {
            let lhs = a.wedge(&b).unwrap().interior(&v).unwrap();
            let t1 = a.interior(&v).unwrap().wedge(&b).unwrap();
            let t2 = a.wedge(&b.interior(&v).unwrap()).unwrap();
            // deg a = 2, sign +1
            prop_assert_eq!(lhs, t1.add(&t2).unwrap());
        }

        #[test]
        fn repeated_argument_gives_zero(a in arb_form(5, 3), v in arb_vec(5), w in arb_vec(5)) {
            prop_assert!(a.eval(&[v.clone(), w.clone(), v.clone()]).unwrap().is_zero());
            let s1 = a.eval(&[v.clone(), w.clone(), Vector::basis(5, 1)]).unwrap();
            let s2 = a.eval(&[w, v, Vector::basis(5, 1)]).unwrap();
            prop_assert_eq!(s1, -s2);
        }

        #[test]
        fn eval_matches_basis_eval(a in arb_form(4, 2), i in 0usize..4, j in 0usize..4) {
            let direct = a.eval(&[Vector::basis(4, i), Vector::basis(4, j)]).unwrap();
            prop_assert_eq!(direct, a.eval_basis(&[i, j]));
        }
    }
}
