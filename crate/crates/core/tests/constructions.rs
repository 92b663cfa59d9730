mod common;

use common::{r, rational_constants};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tasaki_core::constructions::{
    alpha_matching_deformation, build_isomorphism, cayley_orthogonal, flat_boothby_wang, h_deformation, heisenberg,
    quaternion_units, quaternionic_gram_schmidt, quaternionic_gram_schmidt_seeded, random_cayley_orthogonal, reconstruct_bracket,
    t3, DeformationParams, FlatHyperkahler,
};
use tasaki_core::contact::{infer_parameters, verify_3ad, verify_degenerate};
use tasaki_core::linalg::Matrix;
use tasaki_core::{Approx, BilinearForm, Endomorphism, Error, LieAlgebra, Rational, SasakianLieAlgebra, Scalar, Subspace, Vector};

fn to_float(h: &SasakianLieAlgebra<Rational>) -> SasakianLieAlgebra<Approx> {
    h.map(Approx::from_rational)
}

#[test]
fn heisenberg_shapes() {
    let h1 = heisenberg::<Rational>(1).unwrap();
    assert_eq!(h1.dim(), 7);
    assert_eq!(h1.algebra.center().dim(), 3);
    assert_eq!(h1.algebra.structure_constants().count(), 6);
    for n in 1..=3 {
        let h = heisenberg::<Rational>(n).unwrap();
        assert_eq!(h.dim(), 4 * n + 3);
        assert_eq!((h.params.alpha.clone(), h.params.delta.clone()), (r(1, 2), r(0, 1)));
        assert!(verify_degenerate(&h.algebra, &h.structure, &h.params.alpha).unwrap().passed());
    }
    assert!(heisenberg::<Rational>(0).is_err());
}

#[test]
fn identity_deformation_is_identity() {
    let h = heisenberg::<Rational>(1).unwrap();
    assert_eq!(h_deformation(&h, &DeformationParams::identity()).unwrap(), h);
}

#[test]
fn deformation_rejects_broken_constraint() {
    let err = DeformationParams::new(r(1, 1), r(0, 1), r(2, 1)).unwrap_err();
    assert!(err.to_string().contains("a + b = c^2"));
    assert!(DeformationParams::new(r(0, 1), r(4, 1), r(2, 1)).is_err());
    assert!(DeformationParams::new(r(1, 1), r(-1, 1), r(0, 1)).is_err());
}

/// Every nonzero `p/q` on the grid whose `verify_degenerate` passes.
fn passing_alphas(h: &SasakianLieAlgebra<Rational>) -> Vec<Rational> {
    let mut out = Vec::new();
    for q in 1..=4 {
        for p in -12..=12 {
            let a = r(p, q);
            if a.is_zero() || out.contains(&a) {
                continue;
            }
            if verify_degenerate(&h.algebra, &h.structure, &a).unwrap().passed() {
                out.push(a);
            }
        }
    }
    out
}

#[test]
fn deformed_alpha_is_unique_on_rational_grid() {
    let h = heisenberg::<Rational>(1).unwrap();
    for (lambda, frozen) in [(r(1, 2), r(1, 4)), (r(2, 1), r(1, 1)), (r(3, 1), r(3, 2))] {
        let out = h_deformation(&h, &DeformationParams::from_lambda(lambda).unwrap()).unwrap();
        assert_eq!(passing_alphas(&out), vec![out.params.alpha.clone()]);
        assert_eq!(out.params.alpha, frozen);
        assert_eq!(out.params.delta, Rational::zero());
    }
}

#[test]
fn deformed_alpha_follows_c_alpha_over_a() {
    let h = heisenberg::<Rational>(1).unwrap();
    for (a, c) in [(r(1, 1), r(2, 1)), (r(2, 1), r(1, 1)), (r(3, 2), r(-1, 1)), (r(1, 4), r(1, 2)), (r(1, 2), r(-2, 1))] {
        let d = DeformationParams::new(a.clone(), c.clone() * c.clone() - a.clone(), c.clone()).unwrap();
        let out = h_deformation(&h, &d).unwrap();
        assert_eq!(passing_alphas(&out), vec![out.params.alpha.clone()]);
        assert_eq!(out.params.alpha, c * h.params.alpha.clone() / a);
    }
}

#[test]
fn deformed_delta_follows_delta_over_c() {
    let su = tasaki_core::constructions::su2_toy::<Rational>(Rational::one()).unwrap();
    let out = h_deformation(&su, &DeformationParams::new(r(1, 1), r(3, 1), r(2, 1)).unwrap()).unwrap();
    assert_eq!(out.params.delta, r(1, 2));
    assert!(verify_3ad(&out.algebra, &out.structure, &out.params).unwrap().passed());
}

#[test]
fn alpha_matching_returns_to_one_half() {
    let h = heisenberg::<Rational>(1).unwrap();
    for lambda in [r(1, 3), r(2, 1), r(5, 2)] {
        let deformed = h_deformation(&h, &DeformationParams::from_lambda(lambda).unwrap()).unwrap();
        let back = h_deformation(&deformed, &alpha_matching_deformation(&deformed.params.alpha).unwrap()).unwrap();
        assert_eq!(back.params.alpha, r(1, 2));
    }
}

#[test]
fn flat_boothby_wang_reproduces_heisenberg() {
    for n in 1..=2 {
        let base = FlatHyperkahler::<Rational>::standard(n).unwrap();
        let bw = flat_boothby_wang(&base, r(1, 2)).unwrap();
        let h = heisenberg::<Rational>(n).unwrap();
        assert_eq!(rational_constants(&bw.algebra), rational_constants(&h.algebra));
        assert_eq!(bw.structure, h.structure);
    }
}

#[test]
fn flat_boothby_wang_with_alpha_one() {
    let bw = flat_boothby_wang(&FlatHyperkahler::<Rational>::standard(1).unwrap(), r(1, 1)).unwrap();
    assert!(verify_degenerate(&bw.algebra, &bw.structure, &r(1, 1)).unwrap().passed());
    assert!(!verify_degenerate(&bw.algebra, &bw.structure, &r(1, 2)).unwrap().passed());
    assert!(bw.algebra.center().same_as(&bw.structure.vertical()));
}

#[test]
fn flat_boothby_wang_rejects_bad_base() {
    let [i, j, _] = quaternion_units::<Rational>(1);
    let err = FlatHyperkahler::new(BilinearForm::identity(4), [i.clone(), j, i]);
    assert!(matches!(err, Err(Error::InvalidStructure(_))));
    assert!(flat_boothby_wang(&FlatHyperkahler::<Rational>::standard(1).unwrap(), r(0, 1)).is_err());
}

#[test]
fn flat_boothby_wang_h8_is_isomorphic_to_h2() {
    let bw = flat_boothby_wang(&FlatHyperkahler::<Approx>::standard(2).unwrap(), Approx(0.5)).unwrap();
    let iso = build_isomorphism(&bw).unwrap();
    assert!(iso.report.passed(), "{}", iso.report);
    assert!(iso.psi.sub(&Endomorphism::identity(11)).matrix().max_abs() <= 1e-12);
}

fn h1_float() -> (BilinearForm<Approx>, [Endomorphism<Approx>; 3], Subspace<Approx>) {
    let h = to_float(&heisenberg::<Rational>(1).unwrap());
    let s = &h.structure;
    (s.metric.clone(), s.phis(), s.horizontal())
}

#[test]
fn gram_schmidt_on_standard_block_is_trivial() {
    let (g, phi, hsub) = h1_float();
    let basis = quaternionic_gram_schmidt_seeded(&g, &phi, &hsub, &[Vector::basis(7, 3)]).unwrap();
    for (a, v) in basis.iter().enumerate() {
        assert_eq!(v, &Vector::basis(7, 3 + a));
    }
}

#[test]
fn gram_schmidt_normalizes_seed() {
    let (g, phi, hsub) = h1_float();
    let seed = Vector::basis(7, 3).add(&Vector::basis(7, 4));
    let basis = quaternionic_gram_schmidt_seeded(&g, &phi, &hsub, &[seed]).unwrap();
    let s = 0.5f64.sqrt();
    let expected = [0.0, 0.0, 0.0, s, s, 0.0, 0.0];
    for (x, y) in basis[0].0.iter().zip(expected) {
        assert!((x.0 - y).abs() <= 1e-12);
    }
    for a in 0..4 {
        for b in 0..4 {
            let want = if a == b { 1.0 } else { 0.0 };
            assert!((g.eval(&basis[a], &basis[b]).0 - want).abs() <= 1e-9);
        }
    }
}

#[test]
fn gram_schmidt_on_conjugated_h2() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let h = to_float(&heisenberg::<Rational>(2).unwrap());
    for _ in 0..5 {
        let q = random_cayley_orthogonal::<Approx, _>(11, &mut rng).unwrap();
        let s = h.structure.transport(&q).unwrap();
        let basis = quaternionic_gram_schmidt(&s.metric, &s.phis(), &s.horizontal()).unwrap();
        assert_eq!(basis.len(), 8);
        for a in 0..8 {
            for b in 0..8 {
                let want = if a == b { 1.0 } else { 0.0 };
                assert!((s.metric.eval(&basis[a], &basis[b]).0 - want).abs() <= 1e-9);
            }
        }
        for quad in basis.chunks(4) {
            for i in 0..3 {
                assert!(s.phi(i).apply(&quad[0]).sub(&quad[i + 1]).0.iter().all(|x| x.0.abs() <= 1e-12));
            }
        }
    }
}

#[test]
fn gram_schmidt_rejects_non_invariant_subspace() {
    let (g, phi, _) = h1_float();
    let sub = Subspace::span(7, &[Vector::basis(7, 3), Vector::basis(7, 4), Vector::basis(7, 5), Vector::basis(7, 0)]);
    assert!(matches!(quaternionic_gram_schmidt(&g, &phi, &sub), Err(Error::InvalidStructure(_))));
}

#[test]
fn reconstruct_examples() {
    let h = heisenberg::<Rational>(1).unwrap();
    assert_eq!(reconstruct_bracket(&h.structure, &r(1, 2)).unwrap(), h.algebra);

    let t = t3::<Rational>(Rational::one()).unwrap();
    assert_eq!(reconstruct_bracket(&t.structure, &r(5, 1)).unwrap(), LieAlgebra::abelian(3));

    let doubled = reconstruct_bracket(&h.structure, &r(1, 1)).unwrap();
    let expected = h.algebra.map(|c| c.clone() * r(2, 1));
    assert_eq!(doubled, expected);
    assert!(verify_degenerate(&doubled, &h.structure, &r(1, 1)).unwrap().passed());
}

#[test]
fn reconstruct_round_trips_in_a_rotated_basis() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let h = heisenberg::<Rational>(1).unwrap();
    let deformed = h_deformation(&h, &DeformationParams::from_lambda(r(3, 2)).unwrap()).unwrap();
    let q = random_cayley_orthogonal::<Rational, _>(7, &mut rng).unwrap();
    let rotated = deformed.transport(&q).unwrap();
    let rebuilt = reconstruct_bracket(&rotated.structure, &rotated.params.alpha).unwrap();
    assert_eq!(rebuilt, rotated.algebra);
}

#[test]
fn isomorphism_of_heisenberg_is_identity() {
    let h = to_float(&heisenberg::<Rational>(1).unwrap());
    let iso = build_isomorphism(&h).unwrap();
    assert!(iso.report.passed());
    assert!(iso.matching.is_none());
    assert!(iso.psi.sub(&Endomorphism::identity(7)).matrix().max_abs() <= 1e-12);
}

#[test]
fn isomorphism_undoes_structure_preserving_conjugation() {
    // skew map commuting with every φ_i: right multiplication by 2i − j/3 + k/2 on ℍ
    let q = [Rational::zero(), r(2, 1), r(-1, 3), r(1, 2)];
    let mut k = Matrix::zeros(7, 7);
    let right = [
        [q[0].clone(), -q[1].clone(), -q[2].clone(), -q[3].clone()],
        [q[1].clone(), q[0].clone(), q[3].clone(), -q[2].clone()],
        [q[2].clone(), -q[3].clone(), q[0].clone(), q[1].clone()],
        [q[3].clone(), q[2].clone(), -q[1].clone(), q[0].clone()],
    ];
    for a in 0..4 {
        for b in 0..4 {
            k[(3 + a, 3 + b)] = right[a][b].clone();
        }
    }
    let c = cayley_orthogonal(&k).unwrap();
    let h = heisenberg::<Rational>(1).unwrap();
    for i in 0..3 {
        assert_eq!(c.compose(h.structure.phi(i)), h.structure.phi(i).compose(&c));
    }
    let conjugated = h.transport(&c).unwrap();
    assert_eq!(conjugated, h);
}

#[test]
fn isomorphism_of_rotated_heisenberg_is_a_structure_automorphism_after_rotation() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let h = to_float(&heisenberg::<Rational>(1).unwrap());
    let q = random_cayley_orthogonal::<Approx, _>(7, &mut rng).unwrap();
    let iso = build_isomorphism(&h.transport(&q).unwrap()).unwrap();
    assert!(iso.report.passed(), "{}", iso.report);
    // ψ∘Q preserves the standard structure
    let auto = iso.psi.compose(&q);
    for i in 0..3 {
        let d = auto.compose(h.structure.phi(i)).sub(&h.structure.phi(i).compose(&auto));
        assert!(d.matrix().max_abs() <= 1e-9);
        assert!(auto.apply(h.structure.xi(i)).sub(h.structure.xi(i)).0.iter().all(|x| x.0.abs() <= 1e-9));
    }
}

#[test]
fn isomorphism_after_deformation() {
    let h = heisenberg::<Rational>(1).unwrap();
    let deformed = to_float(&h_deformation(&h, &DeformationParams::from_lambda(r(3, 1)).unwrap()).unwrap());
    let iso = build_isomorphism(&deformed).unwrap();
    assert!(iso.matching.is_some());
    assert!(iso.report.passed(), "{}", iso.report);
    assert!(iso.report.max_defect() <= 1e-8);
}

#[test]
fn isomorphism_exact_when_norms_are_rational() {
    let h = heisenberg::<Rational>(1).unwrap();
    // α̃ = 2 is matched by a = 4, so every norm is rational
    let deformed = h_deformation(&h, &DeformationParams::from_lambda(r(4, 1)).unwrap()).unwrap();
    let iso = build_isomorphism(&deformed).unwrap();
    assert!(iso.report.passed(), "{}", iso.report);
    assert_eq!(iso.report.max_defect(), 0.0);
}

#[test]
fn isomorphism_rejects_non_nilpotent() {
    let su = tasaki_core::constructions::su2_toy::<Rational>(Rational::one()).unwrap();
    assert!(matches!(build_isomorphism(&su), Err(Error::NotNilpotent)));
}

#[test]
fn inferred_parameters_survive_rotation() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let h = heisenberg::<Rational>(2).unwrap();
    let q = random_cayley_orthogonal::<Rational, _>(11, &mut rng).unwrap();
    let rotated = h.transport(&q).unwrap();
    let p = infer_parameters(&rotated.algebra, &rotated.structure).unwrap();
    assert_eq!(p.alpha, Some(r(1, 2)));
}
