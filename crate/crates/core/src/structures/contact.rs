use crate::algebra::{LieAlgebra, Subspace, Vector};
use crate::error::{ensure_dim, Result};
use crate::forms::{radical, top_contact_test, KForm};
use crate::linalg::{self, Solve};
use crate::report::{CheckReport, Witness};
use crate::scalar::{int, one};

use super::{kirillov_form, Checked};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactStructure {
    pub alpha: KForm,
    pub xi: Vector,
}

/// Unique `ξ` with `α(ξ) = 1` and `B_α(ξ, ·) = 0`, if there is one.
pub fn reeb_vector(g: &LieAlgebra, alpha: &KForm) -> Result<Option<Vector>> {
    let n = g.dim();
    let b = kirillov_form(g, alpha)?.matrix();
    let mut rows: Vec<_> = (0..n).map(|j| (0..n).map(|i| b[i][j].clone()).collect()).collect();
    let mut rhs = vec![crate::scalar::zero(); n];
    rows.push(alpha.covector());
    rhs.push(one());
    Ok(match linalg::solve_affine(&rows, &rhs, n) {
        Solve::Solved(s) if s.homogeneous.is_empty() => Some(Vector(s.particular)),
        _ => None,
    })
}

/// Odd dimension and `α∧(dα)^m ≠ 0`; on success solves and verifies the Reeb vector.
pub fn check_contact(g: &LieAlgebra, alpha: &KForm) -> Result<Checked<ContactStructure>> {
    let n = g.dim();
    ensure_dim(n, alpha.dim())?;
    ensure_dim(1, alpha.degree())?;
    let mut report = CheckReport::new();
    report.record(
        "odd dimension",
        n.is_multiple_of(2).then(|| Witness::new(vec![], vec![int(n as i64)]).with_note("dimension")),
    );
    let top = top_contact_test(g, alpha);
    report.record(
        "α∧(dα)^m ≠ 0",
        (!top.verdict)
            .then(|| Witness::new((0..n).collect(), vec![top.coefficient.clone()]).with_note(top.reason.clone())),
    );
    let mut xi = None;
    if report.passed() {
        xi = reeb_vector(g, alpha)?;
        report.record(
            "Reeb vector unique",
            xi.is_none()
                .then(|| Witness::new(vec![], vec![]).with_note("no unique solution of α(ξ) = 1, B_α(ξ,·) = 0")),
        );
        if let Some(x) = &xi {
            let rad = radical(&kirillov_form(g, alpha)?);
            let ok = rad == Subspace::span(n, std::slice::from_ref(x));
            report.record(
                "Rad(B_α) = span{ξ}",
                (!ok).then(|| Witness::new(vec![], vec![int(rad.dim() as i64)]).with_note("dimension of the radical")),
            );
        }
    }
    Ok(Checked::new(report, || ContactStructure { alpha: alpha.clone(), xi: xi.expect("solved") }))
}
