use crate::algebra::{LieAlgebra, Vector};
use crate::error::{ensure_dim, Error, Result};
use crate::forms::{radical, KForm};
use crate::linalg::{self, Solve};
use crate::report::{CheckReport, Witness};
use crate::scalar::int;

use super::Checked;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusStructure {
    pub phi: KForm,
    pub principal: Vector,
}

/// `B_φ(x, y) = φ([x, y])`.
pub fn kirillov_form(g: &LieAlgebra, phi: &KForm) -> Result<KForm> {
    let n = g.dim();
    ensure_dim(n, phi.dim())?;
    ensure_dim(1, phi.degree())?;
    let mut b = KForm::zero(n, 2);
    for i in 0..n {
        for j in i + 1..n {
            b.set(&[i, j], phi.apply(&g.basis_bracket(i, j)));
        }
    }
    Ok(b)
}

/// Even dimension and nondegenerate `B_φ`; computes the principal element on success.
pub fn check_frobenius(g: &LieAlgebra, phi: &KForm) -> Result<Checked<FrobeniusStructure>> {
    let n = g.dim();
    let b = kirillov_form(g, phi)?;
    let mut report = CheckReport::new();
    report.record(
        "even dimension",
        (n % 2 == 1).then(|| Witness::new(vec![], vec![int(n as i64)]).with_note("dimension")),
    );
    let rad = radical(&b);
    let witness = rad.basis().first().map(|v| {
        let s = v.support();
        Witness::new(s.clone(), s.iter().map(|&i| v.0[i].clone()).collect()).with_note("radical vector of B_φ")
    });
    report.record("Kirillov form nondegenerate", witness);
    let principal = report.passed().then(|| solve_principal(g, phi, &b)).flatten();
    Ok(Checked::new(report, || FrobeniusStructure { phi: phi.clone(), principal: principal.expect("nondegenerate") }))
}

/// Unique solution of `φ([x, e_j]) = φ(e_j)` for all `j`, if any.
fn solve_principal(g: &LieAlgebra, phi: &KForm, b: &KForm) -> Option<Vector> {
    let n = g.dim();
    let m = b.matrix();
    // Row j: Σ_i x_i B(e_i, e_j) = φ_j.
    let rows: Vec<_> = (0..n).map(|j| (0..n).map(|i| m[i][j].clone()).collect()).collect();
    match linalg::solve_affine(&rows, &phi.covector(), n) {
        Solve::Solved(s) if s.homogeneous.is_empty() => Some(Vector(s.particular)),
        _ => None,
    }
}

/// Principal element `x_P` with `φ∘ad(x_P) = φ`.
pub fn principal_element(g: &LieAlgebra, phi: &KForm) -> Result<Vector> {
    let checked = check_frobenius(g, phi)?;
    match checked.structure {
        Some(f) => Ok(f.principal),
        None => Err(Error::precondition("principal element", checked.report)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::default_labels;
    use crate::catalog;
    use crate::forms::ce_differential;
    use crate::scalar::frac;

    fn aff1() -> LieAlgebra {
        LieAlgebra::from_table(default_labels(2), &[(0, 1, &[(1, int(1))])]).unwrap()
    }

    #[test]
    fn kirillov_examples() {
        let b = kirillov_form(&catalog::h3(), &KForm::dual(3, 2)).unwrap();
        assert_eq!(b.coeff(&[0, 1]), int(1));
        assert_eq!(b.terms().count(), 1);
        let b4 = kirillov_form(&catalog::d4half(), &KForm::dual(4, 2)).unwrap();
        assert_eq!(b4.coeff(&[3, 2]), int(1));
        assert_eq!(b4.add(&ce_differential(&catalog::d4half(), &KForm::dual(4, 2))), KForm::zero(4, 2));
        assert!(kirillov_form(&LieAlgebra::abelian(3), &KForm::dual(3, 0)).unwrap().is_zero());
    }

    #[test]
    fn frobenius_examples() {
        let f = check_frobenius(&catalog::d4half(), &KForm::dual(4, 2)).unwrap();
        assert_eq!(f.structure.unwrap().principal, Vector::basis(4, 3));
        let odd = check_frobenius(&catalog::h3(), &KForm::dual(3, 2)).unwrap();
        assert!(!odd.report.verdict("even dimension"));
        let a = check_frobenius(&aff1(), &KForm::dual(2, 1)).unwrap();
        assert_eq!(a.structure.unwrap().principal, Vector::basis(2, 0));
    }

    #[test]
    fn principal_is_scale_invariant() {
        let phi = KForm::dual(4, 2).scale(&frac(-3, 7));
        assert_eq!(principal_element(&catalog::d4half(), &phi).unwrap(), Vector::basis(4, 3));
        assert!(principal_element(&catalog::h3(), &KForm::dual(3, 2)).is_err());
    }
}
