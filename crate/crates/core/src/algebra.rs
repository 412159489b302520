//! Lie algebras given by structure constants, their elements, and linear maps
//! on them.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{ensure_dim, Error, Result};
use crate::linalg::{self, Rows};
use crate::report::{CheckReport, Witness};
use crate::scalar::{one, zero, Scalar};

/// Coordinates of an element on the basis of its algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector(pub Vec<Scalar>);

impl Vector {
    pub fn zero(n: usize) -> Self {
        Vector(vec![zero(); n])
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zero(n);
        v.0[i] = one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| crate::scalar::int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector(self.0.iter().map(|c| c * s).collect())
    }

    /// Appends `extra` zero coordinates.
    pub fn pad(&self, extra: usize) -> Vector {
        let mut v = self.0.clone();
        v.extend(std::iter::repeat_with(zero).take(extra));
        Vector(v)
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.0[i].is_zero()).collect()
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<&Vector> for &Scalar {
    type Output = Vector;
    fn mul(self, rhs: &Vector) -> Vector {
        rhs.scale(self)
    }
}

/// Square matrix acting on coordinates; column `j` is the image of `e_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearMap {
    rows: Rows,
}

impl LinearMap {
    pub fn from_rows(rows: Rows) -> Result<Self> {
        let n = rows.len();
        for r in &rows {
            ensure_dim(n, r.len())?;
        }
        Ok(Self { rows })
    }

    pub fn from_columns(cols: &[Vector]) -> Result<Self> {
        let n = cols.len();
        for c in cols {
            ensure_dim(n, c.dim())?;
        }
        Ok(Self { rows: (0..n).map(|r| cols.iter().map(|c| c.0[r].clone()).collect()).collect() })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        Self { rows: (0..n).map(|r| (0..n).map(|c| f(r, c)).collect()).collect() }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_, _| zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |r, c| if r == c { one() } else { zero() })
    }

    pub fn diag(entries: &[Scalar]) -> Self {
        Self::from_fn(entries.len(), |r, c| if r == c { entries[r].clone() } else { zero() })
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &Rows {
        &self.rows
    }

    pub fn entry(&self, r: usize, c: usize) -> &Scalar {
        &self.rows[r][c]
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector(self.rows.iter().map(|r| r[j].clone()).collect())
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.dim(), "map/vector dimension mismatch");
        Vector(
            self.rows
                .iter()
                .map(|r| r.iter().zip(&v.0).filter(|(_, b)| !b.is_zero()).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        let n = self.dim();
        assert_eq!(n, other.dim(), "composition dimension mismatch");
        LinearMap::from_fn(n, |r, c| (0..n).map(|k| &self.rows[r][k] * &other.rows[k][c]).sum())
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        LinearMap::from_fn(self.dim(), |r, c| &self.rows[r][c] + &other.rows[r][c])
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        LinearMap::from_fn(self.dim(), |r, c| &self.rows[r][c] - &other.rows[r][c])
    }

    pub fn scale(&self, s: &Scalar) -> LinearMap {
        LinearMap::from_fn(self.dim(), |r, c| &self.rows[r][c] * s)
    }

    /// `self ∘ other − other ∘ self`.
    pub fn commutator(&self, other: &LinearMap) -> LinearMap {
        self.compose(other).sub(&other.compose(self))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Zero::is_zero)
    }

    /// Flattened row-major entries.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.rows.iter().flatten().cloned().collect()
    }

    pub fn from_flat(n: usize, flat: &[Scalar]) -> Result<Self> {
        ensure_dim(n * n, flat.len())?;
        Ok(Self::from_fn(n, |r, c| flat[r * n + c].clone()))
    }

    pub fn inverse(&self) -> Option<LinearMap> {
        linalg::inverse(&self.rows).map(|rows| LinearMap { rows })
    }

    /// The map on an enlarged space acting as `self` on the first
    /// coordinates and as zero on the `extra` new ones.
    pub fn pad(&self, extra: usize) -> LinearMap {
        let n = self.dim();
        LinearMap::from_fn(n + extra, |r, c| if r < n && c < n { self.rows[r][c].clone() } else { zero() })
    }
}

/// Subspace stored by its canonical reduced echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        let rows: Rows = vectors.iter().map(|v| v.0.clone()).collect();
        let basis = linalg::echelon_basis(rows, ambient).into_iter().map(Vector).collect();
        Self { ambient, basis }
    }

    pub(crate) fn from_echelon(ambient: usize, rows: Rows) -> Self {
        Self { ambient, basis: rows.into_iter().map(Vector).collect() }
    }

    pub fn whole(n: usize) -> Self {
        Self::span(n, &(0..n).map(|i| Vector::basis(n, i)).collect::<Vec<_>>())
    }

    pub fn zero(n: usize) -> Self {
        Self { ambient: n, basis: Vec::new() }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, v: &Vector) -> bool {
        let mut rows: Rows = self.basis.iter().map(|b| b.0.clone()).collect();
        rows.push(v.0.clone());
        linalg::rank(&rows, self.ambient) == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }
}

/// Rows `(i, j, [(k, c)])` meaning `[e_i, e_j] = Σ c e_k`.
pub type BracketTable<'a> = [(usize, usize, &'a [(usize, Scalar)])];

/// Finite-dimensional Lie algebra over ℚ with `[e_i, e_j] = Σ_k c[i][j][k] e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    consts: Vec<Scalar>,
}

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl LieAlgebra {
    /// Builds an algebra from brackets `[e_i, e_j] = v`, completing by
    /// antisymmetry. Pairs may be given in either order but only once.
    pub fn from_brackets(
        labels: Vec<String>,
        brackets: impl IntoIterator<Item = (usize, usize, Vector)>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Invalid("a Lie algebra needs at least one basis element".into()));
        }
        let mut alg = Self::abelian_labeled(labels);
        let mut seen = std::collections::BTreeSet::new();
        for (i, j, v) in brackets {
            if i >= n || j >= n {
                return Err(Error::Invalid(format!("bracket index out of range: [{}, {}]", i + 1, j + 1)));
            }
            if i == j {
                return Err(Error::Invalid(format!("bracket of e{} with itself is forced to zero", i + 1)));
            }
            ensure_dim(n, v.dim())?;
            let (a, b, v) = if i < j { (i, j, v) } else { (j, i, -&v) };
            if !seen.insert((a, b)) {
                return Err(Error::Invalid(format!("bracket [{}, {}] given twice", a + 1, b + 1)));
            }
            alg.set_bracket(a, b, &v);
        }
        Ok(alg)
    }

    /// Convenience table form: `(i, j, [(k, c)])` with 0-based indices.
    pub fn from_table(labels: Vec<String>, table: &BracketTable) -> Result<Self> {
        let n = labels.len();
        let entries = table.iter().map(|(i, j, terms)| {
            let mut v = Vector::zero(n);
            for (k, c) in terms.iter() {
                v.0[*k] += c;
            }
            (*i, *j, v)
        });
        Self::from_brackets(labels, entries.collect::<Vec<_>>())
    }

    pub fn abelian(n: usize) -> Self {
        Self::abelian_labeled(default_labels(n))
    }

    fn abelian_labeled(labels: Vec<String>) -> Self {
        let n = labels.len();
        Self { labels, consts: vec![zero(); n * n * n] }
    }

    fn set_bracket(&mut self, i: usize, j: usize, v: &Vector) {
        let n = self.dim();
        for k in 0..n {
            self.consts[(i * n + j) * n + k] = v.0[k].clone();
            self.consts[(j * n + i) * n + k] = -v.0[k].clone();
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        ensure_dim(self.dim(), labels.len())?;
        self.labels = labels;
        Ok(self)
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.consts[(i * n + j) * n + k]
    }

    /// Coefficients of `[e_i, e_j]`.
    pub fn bracket_coeffs(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim();
        &self.consts[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vector {
        Vector(self.bracket_coeffs(i, j).to_vec())
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::basis(self.dim(), i)
    }

    pub fn try_bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        ensure_dim(self.dim(), x.dim())?;
        ensure_dim(self.dim(), y.dim())?;
        Ok(self.bracket(x, y))
    }

    /// Bilinear expansion of `[x, y]`. Panics on dimension mismatch; see
    /// [`LieAlgebra::try_bracket`] for the checked form.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        let n = self.dim();
        assert!(x.dim() == n && y.dim() == n, "bracket dimension mismatch");
        let mut out = Vector::zero(n);
        for i in x.support() {
            for j in y.support() {
                if i == j {
                    continue;
                }
                let s = &x.0[i] * &y.0[j];
                for (o, c) in out.0.iter_mut().zip(self.bracket_coeffs(i, j)) {
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        out
    }

    /// `ad(x)`: column `j` is `[x, e_j]`.
    pub fn adjoint(&self, x: &Vector) -> LinearMap {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.bracket(x, &self.basis_vector(j))).collect();
        LinearMap::from_columns(&cols).expect("square by construction")
    }

    pub fn is_abelian(&self) -> bool {
        self.consts.iter().all(Zero::is_zero)
    }

    /// Jacobi identity on all basis triples `i < j < k`.
    pub fn check_jacobi(&self) -> CheckReport {
        let n = self.dim();
        let mut report = CheckReport::new();
        let mut witness = None;
        'outer: for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let r = self.jacobiator(i, j, k);
                    if !r.is_zero() {
                        witness = Some(
                            Witness::new(vec![i, j, k], r.0).with_note("cyclic sum [[x,y],z] + [[y,z],x] + [[z,x],y]"),
                        );
                        break 'outer;
                    }
                }
            }
        }
        report.record("Jacobi identity", witness);
        report
    }

    /// `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vector {
        let (ei, ej, ek) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
        let a = self.bracket(&self.basis_bracket(i, j), &ek);
        let b = self.bracket(&self.basis_bracket(j, k), &ei);
        let c = self.bracket(&self.basis_bracket(k, i), &ej);
        &(&a + &b) + &c
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // x central iff Σ_i x_i c[i][j][k] = 0 for all j, k.
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.constant(i, j, k).clone()).collect());
            }
        }
        Subspace::from_echelon(n, linalg::nullspace(&rows, n))
    }

    /// Leibniz rule `D[e_i,e_j] = [De_i,e_j] + [e_i,De_j]` on all pairs `i < j`.
    pub fn is_derivation(&self, d: &LinearMap) -> CheckReport {
        let mut report = CheckReport::new();
        let witness = self.leibniz_failure(d);
        report.record("Leibniz rule", witness);
        report
    }

    fn leibniz_failure(&self, d: &LinearMap) -> Option<Witness> {
        let n = self.dim();
        if d.dim() != n {
            return Some(Witness::new(vec![], vec![]).with_note(format!(
                "map has dimension {}, algebra {}",
                d.dim(),
                n
            )));
        }
        for i in 0..n {
            for j in i + 1..n {
                let lhs = d.apply(&self.basis_bracket(i, j));
                let rhs = &self.bracket(&d.column(i), &self.basis_vector(j))
                    + &self.bracket(&self.basis_vector(i), &d.column(j));
                if lhs != rhs {
                    let mut values = lhs.0.clone();
                    values.extend(rhs.0);
                    return Some(Witness::new(vec![i, j], values).with_note("D[x,y] followed by [Dx,y] + [x,Dy]"));
                }
            }
        }
        None
    }

    /// Structure constants in the basis `f_j = Σ_i p[i][j] e_i` (the columns of `p`).
    pub fn change_basis(&self, p: &LinearMap) -> Result<LieAlgebra> {
        let n = self.dim();
        ensure_dim(n, p.dim())?;
        let inv = p.inverse().ok_or_else(|| Error::Invalid("change of basis is singular".into()))?;
        let mut out = Self::abelian_labeled(self.labels.clone());
        for i in 0..n {
            for j in i + 1..n {
                let b = self.bracket(&p.column(i), &p.column(j));
                out.set_bracket(i, j, &inv.apply(&b));
            }
        }
        Ok(out)
    }

    /// Subalgebra spanned by the listed basis vectors, in the listed order.
    pub fn restrict(&self, keep: &[usize]) -> Result<LieAlgebra> {
        let n = self.dim();
        let m = keep.len();
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let mut out = Self::abelian_labeled(labels);
        for a in 0..m {
            for b in a + 1..m {
                let v = self.bracket_coeffs(keep[a], keep[b]);
                for k in 0..n {
                    if !keep.contains(&k) && !v[k].is_zero() {
                        return Err(Error::Invalid(format!(
                            "span is not closed under the bracket: [{}, {}] has a {} component",
                            self.labels[keep[a]], self.labels[keep[b]], self.labels[k]
                        )));
                    }
                }
                let w = Vector(keep.iter().map(|&k| v[k].clone()).collect());
                out.set_bracket(a, b, &w);
            }
        }
        Ok(out)
    }

    /// Direct sum `self ⊕ other`, basis of `self` first.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (n, m) = (self.dim(), other.dim());
        let mut labels = self.labels.clone();
        labels.extend((n + 1..=n + m).map(|i| format!("e{i}")));
        let mut out = Self::abelian_labeled(labels);
        for i in 0..n {
            for j in i + 1..n {
                out.set_bracket(i, j, &self.basis_bracket(i, j).pad(m));
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                let mut v = Vector::zero(n);
                v.0.extend(other.bracket_coeffs(i, j).iter().cloned());
                out.set_bracket(n + i, n + j, &v);
            }
        }
        out
    }

    /// Nonzero brackets `[e_i, e_j]` with `i < j`.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Vector)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.basis_bracket(i, j);
                if !v.is_zero() {
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    /// Flattened constants, `c[i][j][k]` at `(i * n + j) * n + k`.
    pub fn structure_constants(&self) -> &[Scalar] {
        &self.consts
    }

    pub(crate) fn with_extra_dims(&self, labels: Vec<String>) -> LieAlgebra {
        let n = self.dim();
        let m = labels.len();
        let mut all = self.labels.clone();
        all.extend(labels);
        let mut out = Self::abelian_labeled(all);
        for i in 0..n {
            for j in i + 1..n {
                out.set_bracket(i, j, &self.basis_bracket(i, j).pad(m));
            }
        }
        out
    }

    pub(crate) fn put_bracket(&mut self, i: usize, j: usize, v: &Vector) {
        self.set_bracket(i, j, v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::{frac, int};

    #[test]
    fn heisenberg_bracket() {
        let h3 = catalog::h3();
        let (e1, e2, e3) = (h3.basis_vector(0), h3.basis_vector(1), h3.basis_vector(2));
        assert_eq!(h3.bracket(&e1, &e2), e3);
        assert_eq!(h3.bracket(&e2, &e1), -&e3);
        let x = Vector(vec![int(3), frac(-1, 2), int(7)]);
        assert!(h3.bracket(&x, &x).is_zero());
    }

    #[test]
    fn derivation_extension_bracket() {
        let d4 = catalog::d4half();
        let v = d4.bracket(&d4.basis_vector(3), &d4.basis_vector(0));
        assert_eq!(v, Vector(vec![frac(1, 2), int(0), int(0), int(0)]));
    }

    #[test]
    fn bracket_dimension_mismatch() {
        let h3 = catalog::h3();
        assert!(matches!(
            h3.try_bracket(&Vector::zero(2), &Vector::zero(3)),
            Err(Error::DimensionMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn jacobi_checks() {
        assert!(LieAlgebra::abelian(3).check_jacobi().passed());
        assert!(catalog::h3().check_jacobi().passed());
        // [e1,e2] = e3, [e1,e3] = e1: cyclic sum on (1,2,3) is [e3,e3] + 0 + [-e1,e2] = -e3.
        let bad = LieAlgebra::from_table(default_labels(3), &[(0, 1, &[(2, int(1))]), (0, 2, &[(0, int(1))])]).unwrap();
        let r = bad.check_jacobi();
        assert!(!r.passed());
        let w = r.items[0].witness.as_ref().unwrap();
        assert_eq!(w.indices, vec![0, 1, 2]);
        assert_eq!(w.values, vec![int(0), int(0), int(-1)]);
    }

    #[test]
    fn adjoint_maps() {
        assert!(LieAlgebra::abelian(3).adjoint(&Vector::from_ints(&[1, 2, 3])).is_zero());
        let h3 = catalog::h3();
        let ad = h3.adjoint(&h3.basis_vector(0));
        assert_eq!(ad.column(0), Vector::zero(3));
        assert_eq!(ad.column(1), h3.basis_vector(2));
        assert_eq!(ad.column(2), Vector::zero(3));
        let d4 = catalog::d4half();
        let ad4 = d4.adjoint(&d4.basis_vector(3));
        assert_eq!(ad4, LinearMap::diag(&[frac(1, 2), frac(1, 2), int(1), int(0)]));
    }

    #[test]
    fn centers() {
        let h3 = catalog::h3();
        assert_eq!(h3.center(), Subspace::span(3, &[h3.basis_vector(2)]));
        assert!(catalog::d4half().center().is_zero());
        assert_eq!(LieAlgebra::abelian(4).center(), Subspace::whole(4));
    }

    #[test]
    fn derivation_checks() {
        let h3 = catalog::h3();
        assert!(h3.is_derivation(&LinearMap::diag(&[frac(1, 2), frac(1, 2), int(1)])).passed());
        let r = h3.is_derivation(&LinearMap::identity(3));
        let w = r.items[0].witness.as_ref().unwrap();
        assert_eq!(w.indices, vec![0, 1]);
        assert_eq!(w.values, vec![int(0), int(0), int(1), int(0), int(0), int(2)]);
        let any = LinearMap::from_rows(vec![vec![int(1), int(5)], vec![frac(2, 3), int(-4)]]).unwrap();
        assert!(LieAlgebra::abelian(2).is_derivation(&any).passed());
    }

    #[test]
    fn duplicate_and_diagonal_brackets_rejected() {
        let l = default_labels(2);
        assert!(LieAlgebra::from_brackets(l.clone(), vec![(0, 0, Vector::zero(2))]).is_err());
        assert!(LieAlgebra::from_brackets(l, vec![(0, 1, Vector::zero(2)), (1, 0, Vector::zero(2))]).is_err());
    }

    #[test]
    fn change_of_basis_preserves_jacobi() {
        let d4 = catalog::d4half();
        let p = LinearMap::from_rows(vec![
            vec![int(1), int(1), int(0), int(0)],
            vec![int(0), int(1), int(2), int(0)],
            vec![int(0), int(0), int(1), int(-1)],
            vec![int(1), int(0), int(0), int(1)],
        ])
        .unwrap();
        let q = d4.change_basis(&p).unwrap();
        assert!(q.check_jacobi().passed());
        assert_eq!(q.center().dim(), 0);
    }
}
