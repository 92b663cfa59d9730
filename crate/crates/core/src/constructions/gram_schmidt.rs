use crate::error::{check_dim, Error, Result};
use crate::lie::Subspace;
use crate::scalar::Scalar;
use crate::tensor::{BilinearForm, Endomorphism, Vector};

/// Orthonormal basis of a quaternionic subspace of the form
/// `(v_1, φ_1v_1, φ_2v_1, φ_3v_1, …, v_n, φ_1v_n, φ_2v_n, φ_3v_n)`.
///
/// Seeds are the basis vectors of `h` in order, each projected onto the
/// `g`-orthogonal complement of the quadruples found so far; seeds already in
/// their span are skipped. Normalization needs square roots, so the exact
/// backend only succeeds when every norm is rational.
pub fn quaternionic_gram_schmidt<S: Scalar>(
    g: &BilinearForm<S>,
    phi: &[Endomorphism<S>; 3],
    h: &Subspace<S>,
) -> Result<Vec<Vector<S>>> {
    quaternionic_gram_schmidt_seeded(g, phi, h, &[])
}

/// As [`quaternionic_gram_schmidt`], trying `seeds` (which must lie in `h`) first.
pub fn quaternionic_gram_schmidt_seeded<S: Scalar>(
    g: &BilinearForm<S>,
    phi: &[Endomorphism<S>; 3],
    h: &Subspace<S>,
    seeds: &[Vector<S>],
) -> Result<Vec<Vector<S>>> {
    let n = g.dim();
    check_dim(n, h.ambient())?;
    for p in phi {
        check_dim(n, p.dim())?;
    }
    if !h.dim().is_multiple_of(4) {
        return Err(Error::InvalidStructure(format!("subspace of dimension {} is not quaternionic", h.dim())));
    }
    for (i, p) in phi.iter().enumerate() {
        if let Some(b) = h.basis().iter().position(|v| !h.contains(&p.apply(v))) {
            return Err(Error::InvalidStructure(format!("subspace is not phi_{}-invariant (basis vector {b})", i + 1)));
        }
    }
    for s in seeds {
        check_dim(n, s.dim())?;
        if !h.contains(s) {
            return Err(Error::InvalidStructure("seed vector does not lie in the subspace".into()));
        }
    }

    let mut basis: Vec<Vector<S>> = Vec::with_capacity(h.dim());
    for seed in seeds.iter().chain(h.basis()) {
        if basis.len() == h.dim() {
            break;
        }
        // two projection passes keep float round-off from accumulating
        let mut v = seed.clone();
        for _ in 0..if S::EXACT { 1 } else { 2 } {
            for u in &basis {
                v = v.sub(&u.scale(&g.eval(u, &v)));
            }
        }
        let norm_sq = g.eval(&v, &v);
        if norm_sq.is_zero() {
            continue;
        }
        if !norm_sq.is_positive() {
            return Err(Error::NotMetric);
        }
        let norm = norm_sq
            .sqrt()
            .ok_or_else(|| Error::InvalidParameters(format!("norm^2 = {norm_sq} has no square root in this backend; use float mode")))?;
        let v = v.scale(&norm.recip());
        let quad = [v.clone(), phi[0].apply(&v), phi[1].apply(&v), phi[2].apply(&v)];
        for (a, x) in quad.iter().enumerate() {
            for y in basis.iter().chain(&quad[..a]) {
                if !g.eval(x, y).is_zero() {
                    return Err(Error::InvalidStructure("loss of rank: phi_i are not g-compatible on the subspace".into()));
                }
            }
            if !g.eval(x, x).is_one() {
                return Err(Error::InvalidStructure("loss of rank: phi_i do not preserve the norm".into()));
            }
        }
        basis.extend(quad);
    }
    if basis.len() != h.dim() {
        return Err(Error::InvalidStructure("loss of rank while building a quaternionic basis".into()));
    }
    Ok(basis)
}
