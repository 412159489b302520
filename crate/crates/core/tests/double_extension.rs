mod common;

use common::*;
use lieforge::catalog::{h3, h3_sasakian_phi};
use lieforge::derivations::{derivation_space, Constraint};
use lieforge::extensions::central_extension;
use lieforge::scalar::{int, zero};
use lieforge::structures::{sasakian_double_conditions, sasakian_double_extension, SasakianStructure};
use lieforge::{CheckReport, Error, KForm, LinearMap, Vector};
use rand::Rng;

const POSITIVITY: &str = "metric positive-definite";

fn failing(r: &CheckReport) -> Vec<&str> {
    r.items.iter().filter(|i| !i.passed).map(|i| i.name.as_str()).collect()
}

/// Over arbitrary derivations of `g_θ`, the five conditions coincide with the
/// Sasakian axioms other than positivity, and positivity is the only item on
/// which the two sides ever disagree.
#[test]
fn conditions_match_the_algebraic_axioms() {
    let s = SasakianStructure::verified(&h3(), &Vector::basis(3, 2), &KForm::dual(3, 2), &h3_sasakian_phi()).unwrap();
    let mut r = rng(31);
    let (mut valid, mut sasakian, mut positivity_gaps) = (0, 0, 0);
    for _ in 0..3000 {
        if valid >= 150 {
            break;
        }
        let theta = if r.random_bool(0.4) { KForm::zero(3, 2) } else { random_cocycle(&mut r, &h3()) };
        let gt = central_extension(&h3(), &theta).unwrap().algebra;
        let d = match r.random_range(0..3) {
            0 => random_derivation(&mut r, &gt),
            k => {
                let mut cs = vec![Constraint::Diagonal];
                if k == 2 {
                    cs.extend((0..2).map(|i| Constraint::Maps { from: Vector::basis(4, i), to: Vector::zero(4) }));
                }
                let space = derivation_space(&gt, &cs).unwrap();
                let params: Vec<_> = (0..space.dim()).map(|_| scalar(&mut r)).collect();
                space.point(&params).unwrap()
            }
        };
        let c = nonzero_scalar(&mut r);
        let conds = match sasakian_double_conditions(&h3(), &s, &theta, &d, &c) {
            Ok(rep) => rep,
            Err(Error::Precondition { .. }) => continue,
            Err(e) => panic!("{e}"),
        };
        valid += 1;
        let built = sasakian_double_extension(&h3(), &s, &theta, &d, &c).unwrap();
        let direct = failing(&built.sasakian.report);
        let algebraic = direct.iter().all(|n| *n == POSITIVITY);
        assert_eq!(conds.passed(), algebraic, "θ = {theta:?}, D = {d:?}, c = {c}: {:?} vs {direct:?}", failing(&conds));
        if conds.passed() && !direct.is_empty() {
            positivity_gaps += 1;
        }
        sasakian += built.sasakian.passed() as usize;
    }
    assert!(valid >= 100, "only {valid} instances passed the preconditions");
    assert!(sasakian > 0 && positivity_gaps > 0, "{sasakian} Sasakian, {positivity_gaps} positivity gaps");
}

/// With `θ = 0` and `D = diag(0, 0, 0, p)` the conditions hold, and the metric
/// on the derivation slot is `c·p`.
#[test]
fn positivity_tracks_the_sign_of_c_times_p() {
    let s = SasakianStructure::verified(&h3(), &Vector::basis(3, 2), &KForm::dual(3, 2), &h3_sasakian_phi()).unwrap();
    let theta = KForm::zero(3, 2);
    for p in [-2i64, -1, 1, 2] {
        for c in [-1i64, 1, 3] {
            let d = LinearMap::diag(&[zero(), zero(), zero(), int(p)]);
            let c = int(c);
            let conds = sasakian_double_conditions(&h3(), &s, &theta, &d, &c).unwrap();
            let built = sasakian_double_extension(&h3(), &s, &theta, &d, &c).unwrap();
            assert!(conds.passed());
            let cp = &c * int(p);
            let positive = cp > zero();
            assert_eq!(built.sasakian.passed(), positive);
            assert!(positive || failing(&built.sasakian.report) == [POSITIVITY]);
            let metric = lieforge::structures::sasakian_metric(&built.extension.algebra, &built.alpha, &built.phi);
            assert_eq!(metric[4][4], cp);
        }
    }
}
