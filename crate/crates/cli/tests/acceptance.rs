//! Acceptance criteria 1–10. Each test prints one `PASS`/`FAIL` line; run with
//! `cargo test -p tasaki-cli --test acceptance -- --nocapture --test-threads=1`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tasaki_cli::{ReportDocument, StructureDocument};
use tasaki_core::constructions::{
    build_isomorphism, flat_boothby_wang, h_deformation, heisenberg, random_cayley_orthogonal, DeformationParams,
    FlatHyperkahler, ISOMORPHISM_TOLERANCE,
};
use tasaki_core::contact::{
    fundamental_form, horizontal_part, infer_parameters, killing_check, reeb_commutators, verify_3_compat, verify_acms,
    verify_degenerate,
};
use tasaki_core::forms::{increasing_tuples, AlternatingForm};
use tasaki_core::{Approx, LieAlgebra, Rational, SasakianLieAlgebra, Scalar, Subspace};

fn criterion(n: u32, title: &str, body: impl FnOnce()) {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(body));
    let status = if result.is_ok() { "PASS" } else { "FAIL" };
    println!("criterion {n:>2} {status}  {title}  ({:.2?})", start.elapsed());
    if let Err(e) = result {
        std::panic::resume_unwind(e);
    }
}

fn within(limit: Duration, start: Instant, what: &str) {
    let t = start.elapsed();
    assert!(t < limit, "{what} took {t:.2?}, limit {limit:.2?}");
}

fn r(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn load(name: &str) -> SasakianLieAlgebra<Rational> {
    let doc = StructureDocument::parse(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap();
    let input = doc.to_input::<Rational>().unwrap();
    let params = match input.alpha {
        Some(alpha) => tasaki_core::SasakiParams { alpha, delta: input.delta.unwrap_or_else(Rational::zero) },
        None => infer_parameters(&input.algebra, &input.structure).unwrap().to_params(Rational::one()),
    };
    SasakianLieAlgebra { algebra: input.algebra, structure: input.structure, params }
}

const VALID_FIXTURES: [&str; 7] =
    ["h1.json", "h2.json", "t3.json", "su2.json", "flat-bw-alpha1.json", "h1-deformed-lambda2.json", "h1-conjugated.json"];

/// Bundled degenerate structures: generators plus the valid degenerate fixtures.
fn degenerate_examples() -> Vec<(String, SasakianLieAlgebra<Rational>)> {
    let mut out: Vec<_> = (1..=3).map(|n| (format!("heisenberg({n})"), heisenberg::<Rational>(n).unwrap())).collect();
    out.push(("flat_boothby_wang(R^4, 1)".into(), flat_boothby_wang(&FlatHyperkahler::standard(1).unwrap(), r(1, 1)).unwrap()));
    for name in VALID_FIXTURES {
        let ex = load(name);
        if ex.params.is_degenerate() {
            out.push((name.to_string(), ex));
        }
    }
    out
}

#[test]
fn criterion_01_heisenberg_validity() {
    criterion(1, "heisenberg(n), n = 1..3: axioms, degenerate equations, inferred (1/2, 0) exactly", || {
        let start = Instant::now();
        for n in 1..=3 {
            let h = heisenberg::<Rational>(n).unwrap();
            let s = &h.structure;
            for i in 0..3 {
                assert!(verify_acms(&s.metric, &s.triples[i], i).passed(), "n={n} acms{i}");
            }
            assert!(verify_3_compat(s).passed(), "n={n}");
            assert!(verify_degenerate(&h.algebra, s, &r(1, 2)).unwrap().passed(), "n={n}");
            let p = infer_parameters(&h.algebra, s).unwrap();
            assert_eq!(p.alpha, Some(r(1, 2)), "n={n}");
            assert_eq!(p.delta, Rational::zero(), "n={n}");
        }
        within(Duration::from_secs(1), start, "criterion 1");
    });
}

/// `[e_a, e_b]` on `ℍ¹` as `Σ_i <u_i x, y> ξ_i`, with `x`, `y` basis quaternions.
fn oracle_bracket_xi1(a: usize, b: usize) -> i64 {
    if a < 3 || b < 3 {
        return 0;
    }
    let q = |idx: usize| {
        let mut v = [0i64; 4];
        v[idx - 3] = 1;
        v
    };
    let [a1, b1, c1, d1] = [0, 1, 0, 0];
    let [a2, b2, c2, d2] = q(a);
    let ix = [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ];
    ix.iter().zip(q(b)).map(|(x, y)| x * y).sum()
}

#[test]
fn criterion_02_structure_equations() {
    criterion(2, "d eta_1 = -(e^45 + e^67) = 2 (1/2) Phi_1^H on heisenberg(1), checked on all 21 pairs", || {
        let h = heisenberg::<Rational>(1).unwrap();
        let s = &h.structure;
        let d = h.algebra.ce_differential(&AlternatingForm::from_covector(s.eta(0))).unwrap();
        let e45_e67 = AlternatingForm::monomial(7, &[3, 4]).add(&AlternatingForm::monomial(7, &[5, 6])).unwrap();
        assert_eq!(d, e45_e67.scale(&r(-1, 1)));
        let rhs = horizontal_part(s, &fundamental_form(&s.metric, s.phi(0)).unwrap()).unwrap().scale(&(r(2, 1) * r(1, 2)));
        assert_eq!(d, rhs);
        let pairs = increasing_tuples(7, 2);
        assert_eq!(pairs.len(), 21);
        for p in pairs {
            // dη(X, Y) = −η([X, Y])
            assert_eq!(d.eval_basis(&p), Rational::from_int(-oracle_bracket_xi1(p[0], p[1])), "pair {p:?}");
        }
    });
}

#[test]
fn criterion_03_kernel_is_vertical() {
    criterion(3, "ker d eta_i = V exactly on every bundled degenerate structure", || {
        for (name, ex) in degenerate_examples() {
            let v = ex.structure.vertical();
            for i in 0..3 {
                let d = ex.algebra.ce_differential(&AlternatingForm::from_covector(ex.structure.eta(i))).unwrap();
                let kernel = Subspace::span(ex.dim(), &d.radical());
                assert!(kernel.same_as(&v), "{name} eta_{}", i + 1);
            }
        }
    });
}

#[test]
fn criterion_04_reeb_properties() {
    criterion(4, "[xi_i, xi_j] = 0 and every xi_i Killing on every degenerate example", || {
        for (name, ex) in degenerate_examples() {
            let table = reeb_commutators(&ex.algebra, &ex.structure).unwrap();
            assert!(table.iter().flatten().all(|v| v.is_zero()), "{name}");
            for i in 0..3 {
                assert!(killing_check(&ex.algebra, &ex.structure.metric, ex.structure.xi(i)).unwrap(), "{name} xi_{}", i + 1);
            }
        }
    });
}

#[test]
fn criterion_05_center_theorems() {
    criterion(5, "center(h_n) = span(xi_i), nilpotency class 2, n = 1..3", || {
        for n in 1..=3 {
            let h = heisenberg::<Rational>(n).unwrap();
            let expected = Subspace::span(h.dim(), &h.structure.xis());
            assert!(h.algebra.center().same_as(&expected), "n={n}");
            assert_eq!(h.algebra.nilpotency(), (true, 2), "n={n}");
        }
    });
}

fn constants(l: &LieAlgebra<Rational>) -> Vec<(usize, usize, usize, Rational)> {
    l.structure_constants().map(|(i, j, k, c)| (i, j, k, c.clone())).collect()
}

#[test]
fn criterion_06_boothby_wang() {
    criterion(6, "flat_boothby_wang(R^4, 1/2) = heisenberg(1); alpha = 1 passes the degenerate check", || {
        let start = Instant::now();
        let base = FlatHyperkahler::<Rational>::standard(1).unwrap();
        let half = flat_boothby_wang(&base, r(1, 2)).unwrap();
        assert_eq!(constants(&half.algebra), constants(&heisenberg::<Rational>(1).unwrap().algebra));
        let one = flat_boothby_wang(&base, r(1, 1)).unwrap();
        assert!(verify_degenerate(&one.algebra, &one.structure, &r(1, 1)).unwrap().passed());
        within(Duration::from_secs(1), start, "criterion 6");
    });
}

#[test]
fn criterion_07_deformation_closure() {
    criterion(7, "deformation (1, lambda^2 - 1, lambda), lambda in {1/2, 2, 3}: degenerate, unique alpha; identity is identity", || {
        let h = heisenberg::<Rational>(1).unwrap();
        for lambda in [r(1, 2), r(2, 1), r(3, 1)] {
            let out = h_deformation(&h, &DeformationParams::from_lambda(lambda.clone()).unwrap()).unwrap();
            assert!(verify_degenerate(&out.algebra, &out.structure, &out.params.alpha).unwrap().passed(), "lambda={lambda}");
            let mut passing = Vec::new();
            for q in 1..=4 {
                for p in -12..=12 {
                    let a = r(p, q);
                    if !a.is_zero() && !passing.contains(&a) && verify_degenerate(&out.algebra, &out.structure, &a).unwrap().passed() {
                        passing.push(a);
                    }
                }
            }
            assert_eq!(passing, vec![out.params.alpha.clone()], "lambda={lambda}");
        }
        assert_eq!(h_deformation(&h, &DeformationParams::identity()).unwrap(), h);
    });
}

#[test]
fn criterion_08_uniqueness_witness() {
    criterion(8, "20 random conjugated (and deformed) instances per n in {1, 2}: isomorphism report passes, defect <= 1e-8", || {
        let start = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5a5a);
        let mut worst = 0.0f64;
        for n in 1..=2 {
            let h = heisenberg::<Rational>(n).unwrap().map(Approx::from_rational);
            for instance in 0..20 {
                let q = random_cayley_orthogonal::<Approx, _>(h.dim(), &mut rng).unwrap();
                let mut ex = h.transport(&q).unwrap();
                if instance % 2 == 1 {
                    let lambda = Approx(rng.gen_range(0.25..4.0));
                    ex = h_deformation(&ex, &DeformationParams::from_lambda(lambda).unwrap()).unwrap();
                }
                let iso = build_isomorphism(&ex).unwrap();
                assert!(iso.report.passed(), "n={n} instance {instance}: {}", iso.report);
                worst = worst.max(iso.report.max_defect());
            }
        }
        assert!(worst <= ISOMORPHISM_TOLERANCE, "max defect {worst:e}");
        within(Duration::from_secs(10), start, "criterion 8");
    });
}

#[test]
fn criterion_09_negative_suite() {
    criterion(9, "each broken fixture fails its named check first, after passing earlier stages, with exit code 1", || {
        for (file, expected) in [
            ("broken-perturbed-constant.json", "sasakian1.structure_equation"),
            ("broken-scaled-phi.json", "acms1.phi_squared"),
            ("broken-nonunit-xi.json", "acms1.unit"),
            ("broken-jacobi.json", "Jacobi identity"),
            ("broken-wrong-alpha.json", "sasakian1.structure_equation"),
        ] {
            let out = Command::new(env!("CARGO_BIN_EXE_tasaki"))
                .args(["verify", fixture(file).to_str().unwrap(), "--json", "-"])
                .output()
                .unwrap();
            assert_eq!(out.status.code(), Some(1), "{file}");
            let report: ReportDocument = serde_json::from_slice(&out.stdout).unwrap();
            let first = report.checks.iter().position(|c| c.status == tasaki_cli::report::Status::Fail).unwrap();
            assert_eq!(report.checks[first].name, expected, "{file}");
            assert!(report.checks[..first].iter().all(|c| c.status == tasaki_cli::report::Status::Pass), "{file}");
        }
    });
}

#[test]
fn criterion_10_d_squared_and_jacobi() {
    criterion(10, "d o d = 0 on random forms of degree <= 2 and Jacobi, exact, over all bundled algebras", || {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let mut algebras: Vec<(String, LieAlgebra<Rational>)> =
            VALID_FIXTURES.iter().map(|f| (f.to_string(), load(f).algebra)).collect();
        algebras.extend((1..=3).map(|n| (format!("heisenberg({n})"), heisenberg::<Rational>(n).unwrap().algebra)));
        for (name, l) in &algebras {
            assert!(l.jacobi_check().passed(), "{name}");
            for degree in 0..=2 {
                for _ in 0..8 {
                    let w = AlternatingForm::from_basis_values(l.dim(), degree, |_| r(rng.gen_range(-9..=9), rng.gen_range(1..=5)));
                    let dd = l.ce_differential(&l.ce_differential(&w).unwrap()).unwrap();
                    assert!(dd.is_zero(), "{name} degree {degree}");
                }
            }
        }
    });
}
