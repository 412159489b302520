use num_traits::Zero;

use crate::algebra::{LieAlgebra, LinearMap, Vector};
use crate::error::{ensure_dim, Result};
use crate::forms::{ce_differential, KForm};
use crate::linalg::Rows;
use crate::report::{CheckReport, Witness};
use crate::scalar::one;

use super::{gram, metric_items, nijenhuis, residual, Checked};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SasakianStructure {
    pub xi: Vector,
    pub alpha: KForm,
    pub phi: LinearMap,
    /// `g(x, y) = −dα(x, Φy) + α(x)α(y)` on the basis.
    pub metric: Rows,
}

pub fn sasakian_metric(g: &LieAlgebra, alpha: &KForm, phi: &LinearMap) -> Rows {
    let n = g.dim();
    let da = ce_differential(g, alpha);
    let a = alpha.covector();
    gram(n, |i, j| -da.pair(&Vector::basis(n, i), &phi.column(j)) + &a[i] * &a[j])
}

/// The Sasakian axioms for `(ξ, α, Φ)` with the derived metric, plus the
/// consequences `Φξ = 0` and `α∘Φ = 0` as separate items.
pub fn check_sasakian(
    g: &LieAlgebra,
    xi: &Vector,
    alpha: &KForm,
    phi: &LinearMap,
) -> Result<Checked<SasakianStructure>> {
    let n = g.dim();
    ensure_dim(n, xi.dim())?;
    ensure_dim(n, alpha.dim())?;
    ensure_dim(1, alpha.degree())?;
    ensure_dim(n, phi.dim())?;
    let a = alpha.covector();
    let da = ce_differential(g, alpha);
    let e = |i| Vector::basis(n, i);
    let mut report = CheckReport::new();

    let ax = alpha.apply(xi);
    report.record("α(ξ) = 1", (ax != one()).then(|| Witness::new(vec![], vec![ax.clone()]).with_note("α(ξ)")));

    // Φ² e_j + e_j − α_j ξ
    let sq = phi.compose(phi);
    let w = (0..n).find_map(|j| {
        let r = &(&sq.column(j) + &e(j)) - &xi.scale(&a[j]);
        residual(vec![j], &r, "(Φ² + Id − α⊗ξ) e_j")
    });
    report.record("Φ² = −Id + α⊗ξ", w);

    let table = nijenhuis(g, phi)?;
    let w = table.entries().iter().find_map(|(i, j, v)| {
        let r = v + &xi.scale(&da.coeff(&[*i, *j]));
        residual(vec![*i, *j], &r, "N_Φ(e_i,e_j) + dα(e_i,e_j) ξ")
    });
    report.record("N_Φ = −dα⊗ξ", w);

    let metric = sasakian_metric(g, alpha, phi);
    metric_items(&mut report, &metric);

    let gv = |x: &Vector, y: &Vector| -> crate::scalar::Scalar {
        let mut s = crate::scalar::zero();
        for i in x.support() {
            for j in y.support() {
                s += &x.0[i] * &y.0[j] * &metric[i][j];
            }
        }
        s
    };
    let mut w = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let lhs = gv(&phi.column(i), &phi.column(j));
            let rhs = &metric[i][j] - &a[i] * &a[j];
            if lhs != rhs {
                w = Some(Witness::new(vec![i, j], vec![lhs, rhs]).with_note("g(Φx,Φy), g(x,y) − α(x)α(y)"));
                break 'outer;
            }
        }
    }
    report.record("g(Φx,Φy) = g(x,y) − α(x)α(y)", w);

    let mut w = None;
    'outer2: for i in 0..n {
        for j in 0..n {
            let lhs = gv(&e(i), &phi.column(j));
            let rhs = da.coeff(&[i, j]);
            if lhs != rhs {
                w = Some(Witness::new(vec![i, j], vec![lhs, rhs]).with_note("g(x,Φy), dα(x,y)"));
                break 'outer2;
            }
        }
    }
    report.record("g(x,Φy) = dα(x,y)", w);

    report.record("Φ(ξ) = 0", residual(vec![], &phi.apply(xi), "Φ(ξ)"));
    let a_phi: Vec<_> = (0..n).map(|j| alpha.apply(&phi.column(j))).collect();
    let w = (!a_phi.iter().all(Zero::is_zero)).then(|| Witness::new((0..n).collect(), a_phi).with_note("α(Φ e_j)"));
    report.record("α∘Φ = 0", w);

    Ok(Checked::new(report, || SasakianStructure { xi: xi.clone(), alpha: alpha.clone(), phi: phi.clone(), metric }))
}

impl SasakianStructure {
    /// Runs the checks and returns the structure, or the failing report.
    pub fn verified(g: &LieAlgebra, xi: &Vector, alpha: &KForm, phi: &LinearMap) -> Result<Self> {
        let c = check_sasakian(g, xi, alpha, phi)?;
        c.structure.ok_or_else(|| crate::error::Error::precondition("Sasakian structure", c.report))
    }
}
