use crate::algebra::{LieAlgebra, LinearMap};
use crate::error::{ensure_dim, Result};
use crate::forms::{ce_differential, KForm};
use crate::linalg::Rows;
use crate::report::{CheckReport, Witness};

use super::{gram, metric_items, nijenhuis, residual, Checked};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KahlerStructure {
    pub j: LinearMap,
    pub omega: KForm,
    /// `g(e_i, e_j) = ω(e_i, J e_j)`.
    pub metric: Rows,
}

pub fn kahler_metric(j: &LinearMap, omega: &KForm) -> Rows {
    gram(j.dim(), |a, b| omega.pair(&crate::algebra::Vector::basis(j.dim(), a), &j.column(b)))
}

/// `J² = −Id`, `N_J = 0`, `dω = 0`, `J`-invariance of `ω`, and a symmetric
/// positive-definite `g(x,y) = ω(x, Jy)`, each as its own item.
pub fn check_kahler(g: &LieAlgebra, j: &LinearMap, omega: &KForm) -> Result<Checked<KahlerStructure>> {
    let n = g.dim();
    ensure_dim(n, j.dim())?;
    ensure_dim(n, omega.dim())?;
    ensure_dim(2, omega.degree())?;
    let mut report = CheckReport::new();

    let sq = j.compose(j).add(&LinearMap::identity(n));
    let w = (0..n).find_map(|c| residual(vec![c], &sq.column(c), "(J² + Id) e_j"));
    report.record("J² = −Id", w);

    let table = nijenhuis(g, j)?;
    let w = table.first_nonzero().and_then(|(a, b, v)| residual(vec![*a, *b], v, "N_J(e_i, e_j)"));
    report.record("N_J = 0", w);

    let d = ce_differential(g, omega);
    let w = d.terms().next().map(|(idx, v)| Witness::new(idx.clone(), vec![v.clone()]).with_note("dω"));
    report.record("dω = 0", w);

    let mut w = None;
    'outer: for a in 0..n {
        for b in a + 1..n {
            let lhs = omega.pair(&j.column(a), &j.column(b));
            let rhs = omega.coeff(&[a, b]);
            if lhs != rhs {
                w = Some(Witness::new(vec![a, b], vec![lhs, rhs]).with_note("ω(Jx,Jy), ω(x,y)"));
                break 'outer;
            }
        }
    }
    report.record("ω(Jx,Jy) = ω(x,y)", w);

    let metric = kahler_metric(j, omega);
    metric_items(&mut report, &metric);
    Ok(Checked::new(report, || KahlerStructure { j: j.clone(), omega: omega.clone(), metric }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Vector;
    use crate::catalog;
    use crate::scalar::int;

    fn rotation() -> LinearMap {
        LinearMap::from_columns(&[Vector::basis(2, 1), -&Vector::basis(2, 0)]).unwrap()
    }

    #[test]
    fn d4half_is_kahler_with_identity_metric() {
        let k = check_kahler(&catalog::d4half(), &catalog::d4half_j(), &catalog::d4half_omega()).unwrap();
        assert!(k.passed(), "{:?}", k.report);
        assert_eq!(LinearMap::from_rows(k.structure.unwrap().metric).unwrap(), LinearMap::identity(4));
    }

    #[test]
    fn flat_plane() {
        let k = check_kahler(&LieAlgebra::abelian(2), &rotation(), &KForm::elementary(2, &[0, 1])).unwrap();
        assert!(k.passed());
    }

    #[test]
    fn heisenberg_plus_line_is_not_kahler() {
        let g = catalog::h3().direct_sum(&LieAlgebra::abelian(1));
        let omega = catalog::d4half_omega();
        // Same pattern as on d4half: integrable, but ω is not closed.
        let k = check_kahler(&g, &catalog::d4half_j(), &omega).unwrap();
        assert!(k.report.verdict("N_J = 0"));
        let w = k.report.item("dω = 0").unwrap().witness.clone().unwrap();
        assert_eq!((w.indices, w.values), (vec![0, 1, 3], vec![int(1)]));
        // Pairing e1 with e3 and e2 with e4 breaks integrability.
        let j = LinearMap::from_columns(&[
            Vector::basis(4, 2),
            Vector::basis(4, 3),
            -&Vector::basis(4, 0),
            -&Vector::basis(4, 1),
        ])
        .unwrap();
        let k = check_kahler(&g, &j, &omega).unwrap();
        let w = k.report.item("N_J = 0").unwrap().witness.clone().unwrap();
        assert_eq!(w.indices, vec![0, 1]);
        assert_eq!(w.values, vec![int(0), int(0), int(-1), int(0)]);
    }

    #[test]
    fn sign_flipped_structure_is_indefinite() {
        let k = check_kahler(&catalog::d4half(), &catalog::d4half_j(), &catalog::d4half_omega().neg()).unwrap();
        assert!(!k.report.verdict("metric positive-definite"));
        assert!(k.report.verdict("N_J = 0"));
    }
}
