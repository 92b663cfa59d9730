use crate::contact::{AlmostContact3Structure, SasakiParams, SasakianLieAlgebra};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::tensor::{BilinearForm, Endomorphism, Vector};

/// Left multiplication by `i`, `j`, `k` on `ℍⁿ`, in the basis
/// `(e_1, i e_1, j e_1, k e_1, …)`.
pub fn quaternion_units<S: Scalar>(n: usize) -> [Endomorphism<S>; 3] {
    // image of (1, i, j, k) under left multiplication, as (target slot, sign)
    const TABLE: [[(usize, i64); 4]; 3] = [
        [(1, 1), (0, -1), (3, 1), (2, -1)],
        [(2, 1), (3, -1), (0, -1), (1, 1)],
        [(3, 1), (2, 1), (1, -1), (0, -1)],
    ];
    let dim = 4 * n;
    let build = |unit: usize| {
        let mut m = Matrix::zeros(dim, dim);
        for block in 0..n {
            for (src, &(dst, sign)) in TABLE[unit].iter().enumerate() {
                m[(4 * block + dst, 4 * block + src)] = S::from_int(sign);
            }
        }
        Endomorphism(m)
    };
    [build(0), build(1), build(2)]
}

/// The vertical action `ξ_i ↦ 0, ξ_j ↦ ξ_k, ξ_k ↦ −ξ_j` on the first three
/// coordinates, extended by zero.
pub fn vertical_phi<S: Scalar>(dim: usize) -> [Endomorphism<S>; 3] {
    let build = |i: usize| {
        let (j, k) = ((i + 1) % 3, (i + 2) % 3);
        let mut m = Matrix::zeros(dim, dim);
        m[(k, j)] = S::one();
        m[(j, k)] = -S::one();
        Endomorphism(m)
    };
    [build(0), build(1), build(2)]
}

/// `φ_i` on `ℝ³ ⊕ ℝ^{4n}`: the vertical action plus `horizontal[i]` on the last block.
pub(crate) fn assemble_phi<S: Scalar>(horizontal: &[Endomorphism<S>; 3]) -> [Endomorphism<S>; 3] {
    let h = horizontal[0].dim();
    let dim = h + 3;
    let vert = vertical_phi::<S>(dim);
    let build = |i: usize| {
        let mut m = vert[i].matrix().clone();
        for r in 0..h {
            for c in 0..h {
                m[(3 + r, 3 + c)] = horizontal[i].matrix()[(r, c)].clone();
            }
        }
        Endomorphism(m)
    };
    [build(0), build(1), build(2)]
}

pub(crate) fn reeb_basis<S: Scalar>(dim: usize) -> [Vector<S>; 3] {
    [Vector::basis(dim, 0), Vector::basis(dim, 1), Vector::basis(dim, 2)]
}

/// Quaternionic Heisenberg algebra of dimension `4n + 3`.
///
/// Basis `(ξ_1, ξ_2, ξ_3, e_1, φ_1e_1, φ_2e_1, φ_3e_1, …)`, orthonormal; the
/// center is `span(ξ_i)` and `g([X, Y], ξ_i) = g(φ_iX, Y)` on `ℍⁿ`. The
/// returned parameters are `(1/2, 0)`.
pub fn heisenberg<S: Scalar>(n: usize) -> Result<SasakianLieAlgebra<S>> {
    if n < 1 {
        return Err(Error::InvalidParameters("quaternionic dimension n must be at least 1".into()));
    }
    let dim = 4 * n + 3;
    let phi = assemble_phi(&quaternion_units::<S>(n));
    let g = BilinearForm::identity(dim);
    let mut entries = Vec::new();
    for a in 3..dim {
        for b in a + 1..dim {
            for (i, p) in phi.iter().enumerate() {
                // g(φ_i e_a, e_b) with g = identity
                let c = p.matrix()[(b, a)].clone();
                if !c.is_zero() {
                    entries.push((a, b, i, c));
                }
            }
        }
    }
    let algebra = LieAlgebra::new(dim, entries)?;
    let structure = AlmostContact3Structure::new(g, reeb_basis(dim), None, phi)?;
    Ok(SasakianLieAlgebra { algebra, structure, params: SasakiParams::degenerate(S::from_ratio(1, 2))? })
}

/// Abelian `ℝ³` with `ξ_i = e_i`, the compact toy example `T³` at the Lie algebra level.
pub fn t3<S: Scalar>(alpha: S) -> Result<SasakianLieAlgebra<S>> {
    let structure = AlmostContact3Structure::new(BilinearForm::identity(3), reeb_basis(3), None, vertical_phi(3))?;
    Ok(SasakianLieAlgebra { algebra: LieAlgebra::abelian(3), structure, params: SasakiParams::degenerate(alpha)? })
}

/// `su(2)` with orthonormal `ξ_i` and `[ξ_i, ξ_j] = 2ξ_k`: the non-degenerate smoke test, `δ = 1`.
pub fn su2_toy<S: Scalar>(alpha: S) -> Result<SasakianLieAlgebra<S>> {
    let two = S::from_int(2);
    let algebra = LieAlgebra::new(3, [(0, 1, 2, two.clone()), (1, 2, 0, two.clone()), (2, 0, 1, two)])?;
    let structure = AlmostContact3Structure::new(BilinearForm::identity(3), reeb_basis(3), None, vertical_phi(3))?;
    Ok(SasakianLieAlgebra { algebra, structure, params: SasakiParams::new(alpha, S::one())? })
}
