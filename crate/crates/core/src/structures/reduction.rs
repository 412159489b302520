use crate::algebra::{default_labels, LieAlgebra, LinearMap, Subspace, Vector};
use crate::error::{ensure_dim, Error, Result};
use crate::extensions::{central_extension, double_extension, is_cocycle, ExtensionResult};
use crate::forms::{ce_differential, KForm};
use crate::report::{CheckReport, Witness};
use crate::scalar::int;

use super::{
    check_kahler, check_sasakian, kernel_basis, nijenhuis, residual, Checked, KahlerStructure, SasakianStructure,
};

/// Quotient-style reduction of a Sasakian algebra along its central Reeb vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub algebra: LieAlgebra,
    /// Basis of `Ker α` in the parent, one vector per basis element of `algebra`.
    pub kernel_basis: Vec<Vector>,
    pub kahler: Checked<KahlerStructure>,
}

/// Coordinates of `y ∈ Ker α` on the basis from [`kernel_basis`], i.e. `y` with entry `p` dropped.
fn drop_index(y: &Vector, p: usize) -> Vector {
    Vector(y.0.iter().enumerate().filter(|(i, _)| *i != p).map(|(_, c)| c.clone()).collect())
}

/// `h = Ker α` with the bracket's `Ker α`-component, `J = Φ|h` and
/// `ω(x,y) = α([x,y])`; requires the center to be exactly `span{ξ}`.
pub fn sasakian_reduction(g: &LieAlgebra, s: &SasakianStructure) -> Result<Reduction> {
    let n = g.dim();
    ensure_dim(n, s.xi.dim())?;
    let center = g.center();
    let expected = Subspace::span(n, std::slice::from_ref(&s.xi));
    if center != expected {
        let mut report = CheckReport::new();
        let w = Witness::new(vec![], vec![int(center.dim() as i64)]).with_note("dimension of the center");
        report.fail("center = span{ξ}", w);
        return Err(Error::precondition("Sasakian reduction", report));
    }
    let a = s.alpha.covector();
    let (p, basis) = kernel_basis(&a).ok_or_else(|| Error::Invalid("α vanishes".into()))?;
    let m = n - 1;
    let project = |v: &Vector| &v.clone() - &s.xi.scale(&s.alpha.apply(v));
    let labels = if g.labels() == default_labels(n).as_slice() {
        default_labels(m)
    } else {
        (0..n).filter(|&i| i != p).map(|i| g.labels()[i].clone()).collect()
    };
    let mut brackets = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let v = drop_index(&project(&g.bracket(&basis[i], &basis[j])), p);
            if !v.is_zero() {
                brackets.push((i, j, v));
            }
        }
    }
    let h = LieAlgebra::from_brackets(labels, brackets)?;
    let j =
        LinearMap::from_columns(&basis.iter().map(|v| drop_index(&project(&s.phi.apply(v)), p)).collect::<Vec<_>>())?;
    let mut omega = KForm::zero(m, 2);
    for i in 0..m {
        for k in i + 1..m {
            omega.set(&[i, k], s.alpha.apply(&g.bracket(&basis[i], &basis[k])));
        }
    }
    let kahler = check_kahler(&h, &j, &omega)?;
    Ok(Reduction { algebra: h, kernel_basis: basis, kahler })
}

/// Central extension by `ω` with `ξ = z`, `α = z*` and `Φ = J ⊕ 0`.
pub fn kahler_to_sasakian_central(
    g: &LieAlgebra,
    k: &KahlerStructure,
) -> Result<(ExtensionResult, Checked<SasakianStructure>)> {
    let checked = check_kahler(g, &k.j, &k.omega)?;
    if !checked.passed() {
        return Err(Error::precondition("Kähler to Sasakian", checked.report));
    }
    let n = g.dim();
    let ext = central_extension(g, &k.omega)?;
    let xi = Vector::basis(n + 1, n);
    let alpha = KForm::dual(n + 1, n);
    let phi = k.j.pad(1);
    let s = check_sasakian(&ext.algebra, &xi, &alpha, &phi)?;
    Ok((ext, s))
}

/// Constraints forced by integrability and closedness of the natural Kähler
/// candidate on a central extension of a Sasakian algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KahlerObstruction {
    pub extension: ExtensionResult,
    /// `J = Φ + α ⊗ z` on `g`, `J(z) = −ξ`.
    pub j: LinearMap,
    pub constraints: CheckReport,
}

impl KahlerObstruction {
    /// True when at least one constraint fails, so no Kähler structure of this shape exists.
    pub fn confirmed(&self) -> bool {
        !self.constraints.passed()
    }

    pub fn report(&self) -> CheckReport {
        let mut r = CheckReport::new();
        let w = (!self.confirmed()).then(|| Witness::new(vec![], vec![]).with_note("every constraint holds"));
        r.record("no-go confirmed", w);
        r
    }
}

pub fn kahler_extension_obstruction(g: &LieAlgebra, s: &SasakianStructure, theta: &KForm) -> Result<KahlerObstruction> {
    let n = g.dim();
    ensure_dim(n, theta.dim())?;
    let cocycle = is_cocycle(g, theta)?;
    if !cocycle.passed() {
        return Err(Error::precondition("Kähler extension obstruction", cocycle));
    }
    let ext = central_extension(g, theta)?;
    let gt = &ext.algebra;
    let (_, ker) = kernel_basis(&s.alpha.covector()).ok_or_else(|| Error::Invalid("α vanishes".into()))?;
    let mut report = CheckReport::new();

    let mut w1 = None;
    let mut w2 = None;
    for (a, x) in ker.iter().enumerate() {
        for (b, y) in ker.iter().enumerate().skip(a + 1) {
            let (px, py) = (s.phi.apply(x), s.phi.apply(y));
            let v1 = theta.pair(x, y) + theta.pair(&px, &py);
            if w1.is_none() && v1 != int(0) {
                w1 = Some(Witness::new(vec![a, b], vec![v1]).with_note("on the Ker α basis"));
            }
            let v2 = theta.pair(&px, y) + theta.pair(x, &py);
            if w2.is_none() && v2 != int(0) {
                w2 = Some(Witness::new(vec![a, b], vec![v2]).with_note("on the Ker α basis"));
            }
        }
    }
    report.record("θ(x,y) + θ(Φx,Φy) = 0", w1);
    report.record("θ(Φx,y) + θ(x,Φy) = 0", w2);
    let w3 = ker.iter().enumerate().find_map(|(a, x)| {
        let v = theta.pair(x, &s.xi);
        (v != int(0)).then(|| Witness::new(vec![a], vec![v]).with_note("θ(x, ξ) on the Ker α basis"))
    });
    report.record("θ(x,ξ) = 0", w3);

    let a = s.alpha.covector();
    let mut cols: Vec<Vector> = (0..n)
        .map(|i| {
            let mut v = s.phi.column(i).pad(1);
            v.0[n] = a[i].clone();
            v
        })
        .collect();
    cols.push((-&s.xi).pad(1));
    let j = LinearMap::from_columns(&cols)?;
    let table = nijenhuis(gt, &j)?;
    let w4 = table.first_nonzero().and_then(|(x, y, v)| residual(vec![*x, *y], v, "N_J"));
    report.record("N_J = 0", w4);

    let dxi = ce_differential(gt, &s.alpha.pad(1));
    let w5 = dxi.terms().next().map(|(idx, v)| Witness::new(idx.clone(), vec![v.clone()]).with_note("dξ*"));
    report.record("dξ* = 0", w5);

    Ok(KahlerObstruction { extension: ext, j, constraints: report })
}

/// Both sides of the integrability criterion for `J̄ = J ⊕ (z ↦ d, d ↦ −z)`
/// on a double extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexExtension {
    pub extension: ExtensionResult,
    pub j: LinearMap,
    pub report: CheckReport,
}

impl ComplexExtension {
    pub fn integrable(&self) -> bool {
        self.report.verdict("N_J̄ = 0")
    }

    pub fn commutes(&self) -> bool {
        self.report.verdict("J̄(Dx) = D(Jx)")
    }

    pub fn agree(&self) -> bool {
        self.integrable() == self.commutes()
    }
}

pub fn extend_complex_structure(
    g: &LieAlgebra,
    theta: &KForm,
    d: &LinearMap,
    j: &LinearMap,
) -> Result<ComplexExtension> {
    let n = g.dim();
    ensure_dim(n, j.dim())?;
    let mut pre = CheckReport::new();
    let sq = j.compose(j).add(&LinearMap::identity(n));
    pre.record("J² = −Id", (0..n).find_map(|c| residual(vec![c], &sq.column(c), "(J² + Id) e_j")));
    let t = nijenhuis(g, j)?;
    pre.record("N_J = 0", t.first_nonzero().and_then(|(a, b, v)| residual(vec![*a, *b], v, "N_J")));
    if !pre.passed() {
        return Err(Error::precondition("complex structure extension", pre));
    }
    let ext = double_extension(g, theta, d)?;
    let (z, slot) = (n, n + 1);
    let mut cols: Vec<Vector> = (0..n).map(|i| j.column(i).pad(2)).collect();
    cols.push(Vector::basis(n + 2, slot));
    cols.push(-&Vector::basis(n + 2, z));
    let jbar = LinearMap::from_columns(&cols)?;
    let mut report = CheckReport::new();
    let table = nijenhuis(&ext.algebra, &jbar)?;
    report.record("N_J̄ = 0", table.first_nonzero().and_then(|(a, b, v)| residual(vec![*a, *b], v, "N_J̄")));
    let w = (0..n).find_map(|i| {
        let lhs = jbar.apply(&d.column(i).pad(1));
        let rhs = d.apply(&j.column(i).pad(1)).pad(1);
        residual(vec![i], &(&lhs - &rhs), "J̄(D e_i) − D(J e_i)")
    });
    report.record("J̄(Dx) = D(Jx)", w);
    Ok(ComplexExtension { extension: ext, j: jbar, report })
}
