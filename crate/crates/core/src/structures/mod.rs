//! Geometric structures on Lie algebras and the constructions relating them.

mod contact;
mod double;
mod fk;
mod frobenius;
mod kahler;
mod nijenhuis;
mod reduction;
mod sasakian;

pub use contact::{check_contact, reeb_vector, ContactStructure};
pub use double::{
    sasakian_double_conditions, sasakian_double_extension, SasakianDoubleExtension, SasakianDoubleParams,
};
pub use fk::{
    contact_ideal_restriction, fk_double_extension, fk_to_sasakian, sasakian_to_fk, ContactIdeal, FkExtension,
};
pub use frobenius::{check_frobenius, kirillov_form, principal_element, FrobeniusStructure};
pub use kahler::{check_kahler, kahler_metric, KahlerStructure};
pub use nijenhuis::{nijenhuis, nijenhuis_pair, NijenhuisTable};
pub use reduction::{
    extend_complex_structure, kahler_extension_obstruction, kahler_to_sasakian_central, sasakian_reduction,
    ComplexExtension, KahlerObstruction, Reduction,
};
pub use sasakian::{check_sasakian, sasakian_metric, SasakianStructure};

use num_traits::Zero;

use crate::algebra::Vector;
use crate::linalg::{self, Rows};
use crate::report::{CheckReport, Witness};
use crate::scalar::Scalar;

/// Verification outcome; `structure` is present exactly when the report passes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checked<T> {
    pub report: CheckReport,
    pub structure: Option<T>,
}

impl<T> Checked<T> {
    pub(crate) fn new(report: CheckReport, build: impl FnOnce() -> T) -> Self {
        let structure = report.passed().then(build);
        Self { report, structure }
    }

    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// Any of the supported structures together with its derived data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeometricStructure {
    Contact(ContactStructure),
    Frobenius(FrobeniusStructure),
    Kahler(KahlerStructure),
    Sasakian(SasakianStructure),
}

/// Records symmetry and positive-definiteness (Sylvester) of `m`.
pub(crate) fn metric_items(report: &mut CheckReport, m: &Rows) {
    let n = m.len();
    let mut asym = None;
    'outer: for i in 0..n {
        for j in i + 1..n {
            if m[i][j] != m[j][i] {
                asym =
                    Some(Witness::new(vec![i, j], vec![m[i][j].clone(), m[j][i].clone()]).with_note("g(x,y), g(y,x)"));
                break 'outer;
            }
        }
    }
    let symmetric = asym.is_none();
    report.record("metric symmetric", asym);
    let minors = linalg::leading_minors(m);
    let bad = minors.iter().position(|d| !crate::scalar::is_positive(d));
    let witness = match (symmetric, bad) {
        (_, Some(k)) => Some(
            Witness::new((0..=k).collect(), vec![minors[k].clone()]).with_note("non-positive leading principal minor"),
        ),
        (false, None) => Some(Witness::new(vec![], vec![]).with_note("metric is not symmetric")),
        (true, None) => None,
    };
    report.record("metric positive-definite", witness);
}

/// Witness listing a nonzero residual vector at the given basis indices.
pub(crate) fn residual(indices: Vec<usize>, v: &Vector, note: &str) -> Option<Witness> {
    (!v.is_zero()).then(|| Witness::new(indices, v.0.clone()).with_note(note))
}

/// `p` = last index with `α_p ≠ 0` and the basis `e_i − (α_i/α_p) e_p`
/// (`i ≠ p`) of `Ker α`.
pub(crate) fn kernel_basis(alpha: &[Scalar]) -> Option<(usize, Vec<Vector>)> {
    let n = alpha.len();
    let p = (0..n).rev().find(|&i| !alpha[i].is_zero())?;
    let basis = (0..n)
        .filter(|&i| i != p)
        .map(|i| {
            let mut v = Vector::basis(n, i);
            v.0[p] = -(&alpha[i] / &alpha[p]);
            v
        })
        .collect();
    Some((p, basis))
}

/// Symmetric matrix `[b(e_i, e_j)]`.
pub(crate) fn gram(n: usize, b: impl Fn(usize, usize) -> Scalar) -> Rows {
    (0..n).map(|i| (0..n).map(|j| b(i, j)).collect()).collect()
}
