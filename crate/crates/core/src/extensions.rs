//! Central, derivation, double and reversed double extensions.
//!
//! Output bases keep the parent basis first with unchanged indices, followed
//! by the new central element `z` and then the derivation slot `d`
//! (reversed extensions adjoin `d` first, so there `d` precedes `z`).

use crate::algebra::{LieAlgebra, LinearMap, Vector};
use crate::error::{ensure_dim, Error, Result};
use crate::forms::{ce_differential, increasing_tuples, radical, KForm};
use crate::report::{CheckReport, Witness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionResult {
    pub algebra: LieAlgebra,
    /// Parent basis index `i` maps to child index `embedding[i]`.
    pub embedding: Vec<usize>,
    pub central: Option<usize>,
    pub derivation: Option<usize>,
}

/// Label for a new basis element that does not clash with `labels`.
fn fresh_label(labels: &[String], preferred: &str) -> String {
    let next = format!("e{}", labels.len() + 1);
    if labels == crate::algebra::default_labels(labels.len()).as_slice() {
        return next;
    }
    let mut candidate = preferred.to_string();
    while labels.contains(&candidate) {
        candidate.push('\'');
    }
    candidate
}

/// `dθ = 0`; the witness is the first increasing triple where `dθ` is nonzero.
pub fn is_cocycle(g: &LieAlgebra, theta: &KForm) -> Result<CheckReport> {
    ensure_dim(g.dim(), theta.dim())?;
    ensure_dim(2, theta.degree())?;
    let d = ce_differential(g, theta);
    let witness = d
        .terms()
        .next()
        .map(|(idx, v)| Witness::new(idx.clone(), vec![v.clone()]).with_note("dθ on the listed basis triple"));
    let mut report = CheckReport::new();
    report.record("cocycle dθ = 0", witness);
    Ok(report)
}

/// `[x,y]_θ = [x,y] + θ(x,y) z` with `z` appended last.
pub fn central_extension(g: &LieAlgebra, theta: &KForm) -> Result<ExtensionResult> {
    let report = is_cocycle(g, theta)?;
    if !report.passed() {
        return Err(Error::precondition("central extension", report));
    }
    central_extension_unchecked(g, theta)
}

/// Central extension without the cocycle check; the output may violate Jacobi.
pub fn central_extension_unchecked(g: &LieAlgebra, theta: &KForm) -> Result<ExtensionResult> {
    let n = g.dim();
    ensure_dim(n, theta.dim())?;
    ensure_dim(2, theta.degree())?;
    let z = fresh_label(g.labels(), "z");
    let mut out = g.with_extra_dims(vec![z]);
    for (idx, v) in theta.terms() {
        let mut b = g.basis_bracket(idx[0], idx[1]).pad(1);
        b.0[n] = v.clone();
        out.put_bracket(idx[0], idx[1], &b);
    }
    Ok(ExtensionResult { algebra: out, embedding: (0..n).collect(), central: Some(n), derivation: None })
}

/// `⟨d⟩ ⋉ g` with `[d, x] = D x`, `d` appended last.
pub fn derivation_extension(g: &LieAlgebra, d: &LinearMap) -> Result<ExtensionResult> {
    ensure_dim(g.dim(), d.dim())?;
    let report = g.is_derivation(d);
    if !report.passed() {
        return Err(Error::precondition("derivation extension", report));
    }
    derivation_extension_unchecked(g, d)
}

/// Derivation extension without the Leibniz check; the output may violate Jacobi.
pub fn derivation_extension_unchecked(g: &LieAlgebra, d: &LinearMap) -> Result<ExtensionResult> {
    let n = g.dim();
    ensure_dim(n, d.dim())?;
    let label = fresh_label(g.labels(), "d");
    let mut out = g.with_extra_dims(vec![label]);
    for i in 0..n {
        out.put_bracket(n, i, &d.column(i).pad(1));
    }
    Ok(ExtensionResult { algebra: out, embedding: (0..n).collect(), central: None, derivation: Some(n) })
}

/// Central extension by `θ` followed by adjoining `D ∈ Der(g_θ)`.
pub fn double_extension(g: &LieAlgebra, theta: &KForm, d: &LinearMap) -> Result<ExtensionResult> {
    let central = central_extension(g, theta)?;
    let top = derivation_extension(&central.algebra, d)?;
    Ok(ExtensionResult { derivation: top.derivation, ..central_with(top.algebra, central) })
}

fn central_with(algebra: LieAlgebra, central: ExtensionResult) -> ExtensionResult {
    ExtensionResult { algebra, ..central }
}

/// Adjoins `D`, then centrally extends `g(D)` by `ω = −d(α)` with `α`
/// lifted by zero on the new slot. Basis order: parent, `d`, `z`.
pub fn reversed_double_extension(g: &LieAlgebra, alpha: &KForm, d: &LinearMap) -> Result<ExtensionResult> {
    ensure_dim(g.dim(), alpha.dim())?;
    ensure_dim(1, alpha.degree())?;
    let gd = derivation_extension(g, d)?;
    let lifted = alpha.pad(1);
    let omega = ce_differential(&gd.algebra, &lifted).neg();
    let rad = radical(&omega);
    if !rad.is_zero() {
        let v = &rad.basis()[0];
        let mut report = CheckReport::new();
        report.fail(
            "ω = −dα nondegenerate on g(D)",
            Witness::new(v.support(), v.support().iter().map(|&i| v.0[i].clone()).collect())
                .with_note("radical vector of ω"),
        );
        return Err(Error::precondition("reversed double extension", report));
    }
    let top = central_extension(&gd.algebra, &omega)?;
    Ok(ExtensionResult {
        algebra: top.algebra,
        embedding: gd.embedding,
        central: top.central,
        derivation: gd.derivation,
    })
}

/// `D` on `g_θ` assembled from a map on `g` plus the image of `z`.
pub fn assemble_on_central(d: &LinearMap, dz: &Vector) -> Result<LinearMap> {
    let n = d.dim();
    ensure_dim(n + 1, dz.dim())?;
    let mut cols: Vec<Vector> = (0..n).map(|i| d.column(i).pad(1)).collect();
    cols.push(dz.clone());
    LinearMap::from_columns(&cols)
}

/// Child bracket of embedded basis vectors minus the embedded parent bracket,
/// for every pair; these must lie in the span of the central element.
pub fn embedding_defects(parent: &LieAlgebra, ext: &ExtensionResult) -> Vec<(usize, usize, Vector)> {
    let n = parent.dim();
    let m = ext.algebra.dim();
    let mut out = Vec::new();
    for t in increasing_tuples(n, 2) {
        let (i, j) = (t[0], t[1]);
        let child = ext.algebra.basis_bracket(ext.embedding[i], ext.embedding[j]);
        let mut lifted = Vector::zero(m);
        for (k, c) in parent.bracket_coeffs(i, j).iter().enumerate() {
            lifted.0[ext.embedding[k]] = c.clone();
        }
        out.push((i, j, &child - &lifted));
    }
    out
}
