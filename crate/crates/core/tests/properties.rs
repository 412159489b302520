mod common;

use common::*;
use lieforge::catalog::{self, h3, h3_sasakian_phi};
use lieforge::derivations::{derivation_space, Constraint};
use lieforge::extensions::*;
use lieforge::forms::{ce_differential, increasing_tuples, radical, wedge};
use lieforge::linalg::rank;
use lieforge::scalar::{int, one, sign};
use lieforge::structures::*;
use lieforge::{KForm, LieAlgebra, LinearMap, Subspace, Vector};
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;

fn config() -> ProptestConfig {
    ProptestConfig { cases: 48, ..ProptestConfig::default() }
}

fn h3s() -> SasakianStructure {
    SasakianStructure::verified(&h3(), &Vector::basis(3, 2), &KForm::dual(3, 2), &h3_sasakian_phi()).unwrap()
}

/// Derivation of `h3` with `α∘D = α` and `[Φ, D] = 0` on `Ker α`.
fn compatible_h3_derivation(r: &mut TestRng) -> LinearMap {
    let kernel = Subspace::span(3, &[Vector::basis(3, 0), Vector::basis(3, 1)]);
    let space = derivation_space(
        &h3(),
        &[
            Constraint::FormEigen { form: KForm::dual(3, 2), lambda: one() },
            Constraint::Commutes { map: h3_sasakian_phi(), subspace: kernel },
        ],
    )
    .unwrap();
    let params: Vec<_> = (0..space.dim()).map(|_| scalar(r)).collect();
    space.point(&params).unwrap()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn d_squared_vanishes(seed in any::<u64>(), n in 1usize..=6, k in 0usize..=6) {
        let mut r = rng(seed);
        let g = random_algebra(&mut r, n);
        let f = form(&mut r, n, k.min(n));
        let df = ce_differential(&g, &f);
        prop_assert_eq!(&df, &d_oracle(&g, &f));
        prop_assert!(ce_differential(&g, &df).is_zero());
    }

    #[test]
    fn kirillov_is_minus_d(seed in any::<u64>(), n in 1usize..=6) {
        let mut r = rng(seed);
        let g = random_algebra(&mut r, n);
        let phi = form(&mut r, n, 1);
        let b = kirillov_form(&g, &phi).unwrap();
        prop_assert!(b.add(&ce_differential(&g, &phi)).is_zero());
    }

    #[test]
    fn wedge_is_graded_commutative_and_associative(seed in any::<u64>(), n in 1usize..=6) {
        let mut r = rng(seed);
        let degs: Vec<usize> = (0..3).map(|_| r.random_range(0..=n.min(3))).collect();
        let (a, b, c) = (form(&mut r, n, degs[0]), form(&mut r, n, degs[1]), form(&mut r, n, degs[2]));
        let ab = wedge(&a, &b);
        prop_assert_eq!(&ab, &wedge(&b, &a).scale(&sign(degs[0] * degs[1])));
        prop_assert_eq!(wedge(&ab, &c), wedge(&a, &wedge(&b, &c)));
    }

    #[test]
    fn radical_and_rank(seed in any::<u64>(), n in 1usize..=6) {
        let mut r = rng(seed);
        let b = form(&mut r, n, 2);
        let rad = radical(&b);
        let m = b.matrix();
        for v in rad.basis() {
            for row in &m {
                let s: lieforge::Scalar = row.iter().zip(&v.0).map(|(x, y)| x * y).sum();
                prop_assert!(s.is_zero());
            }
        }
        prop_assert_eq!(rank(&m, n) + rad.dim(), n);
    }

    #[test]
    fn inner_derivations_lie_in_the_derivation_space(seed in any::<u64>(), n in 1usize..=5) {
        let mut r = rng(seed);
        let g = random_algebra(&mut r, n);
        let space = derivation_space(&g, &[]).unwrap();
        prop_assert!(space.particular.as_ref().unwrap().is_zero());
        let span = Subspace::span(n * n, &space.homogeneous.iter().map(|m| Vector(m.flatten())).collect::<Vec<_>>());
        for i in 0..n {
            prop_assert!(span.contains(&Vector(g.adjoint(&Vector::basis(n, i)).flatten())));
        }
    }

    #[test]
    fn jacobi_witness_reproduces_a_nonzero_cyclic_sum(seed in any::<u64>(), n in 3usize..=5) {
        let mut r = rng(seed);
        let brackets: Vec<_> = increasing_tuples(n, 2).into_iter().map(|t| (t[0], t[1], vector(&mut r, n))).collect();
        let g = LieAlgebra::from_brackets(lieforge::algebra::default_labels(n), brackets).unwrap();
        let report = g.check_jacobi();
        prop_assert_eq!(report.passed(), jacobi_oracle(&g));
        if let Some(item) = report.first_failure() {
            let w = item.witness.as_ref().unwrap();
            let (x, y, z) = (Vector::basis(n, w.indices[0]), Vector::basis(n, w.indices[1]), Vector::basis(n, w.indices[2]));
            let s = &(&g.bracket(&g.bracket(&x, &y), &z) + &g.bracket(&g.bracket(&y, &z), &x)) + &g.bracket(&g.bracket(&z, &x), &y);
            prop_assert!(!s.is_zero());
        }
    }

    #[test]
    fn central_extension_jacobi_iff_cocycle(seed in any::<u64>(), n in 2usize..=5) {
        let mut r = rng(seed);
        let g = random_algebra(&mut r, n);
        let theta = if r.random_bool(0.5) { random_cocycle(&mut r, &g) } else { form(&mut r, n, 2) };
        let ext = central_extension_unchecked(&g, &theta).unwrap();
        prop_assert_eq!(ext.algebra.check_jacobi().passed(), is_cocycle(&g, &theta).unwrap().passed());
        prop_assert_eq!(central_extension(&g, &theta).is_ok(), d_oracle(&g, &theta).is_zero());
    }

    #[test]
    fn derivation_extension_jacobi_iff_leibniz(seed in any::<u64>(), n in 1usize..=5) {
        let mut r = rng(seed);
        let g = random_algebra(&mut r, n);
        let d = if r.random_bool(0.5) { random_derivation(&mut r, &g) } else { map(&mut r, n) };
        let ext = derivation_extension_unchecked(&g, &d).unwrap();
        prop_assert_eq!(ext.algebra.check_jacobi().passed(), g.is_derivation(&d).passed());
        prop_assert_eq!(derivation_extension(&g, &d).is_ok(), leibniz_oracle(&g, &d));
    }

    #[test]
    fn embeddings_are_homomorphisms_up_to_z(seed in any::<u64>(), n in 1usize..=5) {
        let mut r = rng(seed);
        let g = random_algebra(&mut r, n);
        let theta = random_cocycle(&mut r, &g);
        let central = central_extension(&g, &theta).unwrap();
        let derived = derivation_extension(&g, &random_derivation(&mut r, &g)).unwrap();
        for ext in [&central, &derived] {
            for (_, _, v) in embedding_defects(&g, ext) {
                let ok = match ext.central {
                    Some(z) => v.support().iter().all(|&k| k == z),
                    None => v.is_zero(),
                };
                prop_assert!(ok);
            }
        }
        let z = Vector::basis(n + 1, n);
        prop_assert!(central.algebra.center().contains(&z));
    }

    #[test]
    fn double_extension_composes(seed in any::<u64>(), n in 1usize..=4) {
        let mut r = rng(seed);
        let g = random_algebra(&mut r, n);
        let theta = random_cocycle(&mut r, &g);
        let gt = central_extension(&g, &theta).unwrap().algebra;
        let d = random_derivation(&mut r, &gt);
        let both = double_extension(&g, &theta, &d).unwrap().algebra;
        let stepwise = derivation_extension(&gt, &d).unwrap().algebra;
        prop_assert_eq!(both.structure_constants(), stepwise.structure_constants());
    }

    #[test]
    fn nijenhuis_identity_on_central_extensions(seed in any::<u64>(), big in any::<bool>()) {
        let mut r = rng(seed);
        let n = if big { 4 } else { 2 };
        let (g, j, omega) = random_almost_kahler(&mut r, n);
        let ext = central_extension(&g, &omega).unwrap().algebra;
        let phi = j.pad(1);
        let alpha = KForm::dual(n + 1, n);
        let da = ce_differential(&ext, &alpha);
        let (nphi, nj) = (nijenhuis(&ext, &phi).unwrap(), nijenhuis(&g, &j).unwrap());
        for t in increasing_tuples(n + 1, 2) {
            let base = if t[1] < n { nj.get(t[0], t[1]).pad(1) } else { Vector::zero(n + 1) };
            let xi = Vector::basis(n + 1, n).scale(&da.coeff(&t));
            prop_assert!((&(&nphi.get(t[0], t[1]) - &base) + &xi).is_zero());
        }
    }

    #[test]
    fn accepted_sasakian_structures_satisfy_the_consequences(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = compatible_h3_derivation(&mut r);
        let out = sasakian_to_fk(&h3(), &h3s(), &d).unwrap();
        let k = out.kahler.structure.unwrap();
        let (ext, s) = kahler_to_sasakian_central(&out.extension.algebra, &k).unwrap();
        let s = s.structure.unwrap();
        prop_assert!(s.phi.apply(&s.xi).is_zero());
        for j in 0..ext.algebra.dim() {
            prop_assert!(s.alpha.apply(&s.phi.column(j)).is_zero());
        }
    }

    #[test]
    fn sasakian_to_fk_outputs_are_frobenius_kahler(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = compatible_h3_derivation(&mut r);
        let out = sasakian_to_fk(&h3(), &h3s(), &d).unwrap();
        prop_assert!(out.frobenius.passed(), "{:?}", out.frobenius.report);
        prop_assert!(out.principal_matches);
        prop_assert!(out.kahler.passed(), "{:?}", out.kahler.report);
        let f = out.frobenius.structure.unwrap();
        let k = out.kahler.structure.unwrap();
        let ideal = contact_ideal_restriction(&out.extension.algebra, &f, &k).unwrap();
        prop_assert_eq!(ideal.reeb_criterion(), ideal.principal_criterion());
    }

    #[test]
    fn fk_to_sasakian_outputs_are_sasakian(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (g, phi, j) = (catalog::d4half(), KForm::dual(4, 2), catalog::d4half_j());
        let f = check_frobenius(&g, &phi).unwrap().structure.unwrap();
        let k = check_kahler(&g, &j, &catalog::d4half_omega()).unwrap().structure.unwrap();
        let space = derivation_space(
            &g,
            &[
                Constraint::FormEigen { form: phi, lambda: int(0) },
                Constraint::Commutes { map: j, subspace: Subspace::whole(4) },
            ],
        )
        .unwrap();
        let params: Vec<_> = (0..space.dim()).map(|_| scalar(&mut r)).collect();
        let d = space.point(&params).unwrap();
        let (_, s) = fk_to_sasakian(&g, &f, &k, &d).unwrap();
        prop_assert!(s.passed(), "{:?}", s.report);
    }

    #[test]
    fn reeb_vectors_scale_inversely(seed in any::<u64>(), half_dim in 1usize..=2) {
        let mut r = rng(seed);
        let n = 2 * half_dim + 1;
        let g = random_algebra(&mut r, n);
        let alpha = form(&mut r, n, 1);
        let lambda = nonzero_scalar(&mut r);
        let (c, cl) = (check_contact(&g, &alpha).unwrap(), check_contact(&g, &alpha.scale(&lambda)).unwrap());
        prop_assert_eq!(c.passed(), cl.passed());
        if let (Some(s), Some(sl)) = (c.structure, cl.structure) {
            prop_assert_eq!(alpha.apply(&s.xi), one());
            prop_assert_eq!(radical(&kirillov_form(&g, &alpha).unwrap()), Subspace::span(n, std::slice::from_ref(&s.xi)));
            prop_assert_eq!(sl.xi.scale(&lambda), s.xi);
        }
    }
}
