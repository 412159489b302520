//! Alternating forms on a Lie algebra and the Chevalley–Eilenberg differential.
//!
//! A [`KForm`] of degree `k` stores its values on strictly increasing
//! `k`-tuples of basis vectors, `coeff(I) = ω(e_{i_1}, …, e_{i_k})`. With
//! this normalization `e^1∧e^2` evaluates to `+1` on `(e_1, e_2)`
//! (determinant convention) and wedge products carry shuffle signs only.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{LieAlgebra, Subspace, Vector};
use crate::linalg::{self, Rows};
use crate::scalar::{one, sign, zero, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KForm {
    dim: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, Scalar>,
}

/// Sorts `idx` in place and returns the permutation parity, or `None` if
/// an index repeats.
fn sort_with_parity(idx: &mut [usize]) -> Option<usize> {
    let mut swaps = 0;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(swaps)
    }
}

/// All strictly increasing `k`-tuples drawn from `0..n`.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

impl KForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        Self { dim, degree, coeffs: BTreeMap::new() }
    }

    pub fn constant(dim: usize, value: Scalar) -> Self {
        let mut f = Self::zero(dim, 0);
        f.set(&[], value);
        f
    }

    /// The 1-form `Σ c_i e^i`.
    pub fn one_form(coeffs: &[Scalar]) -> Self {
        let mut f = Self::zero(coeffs.len(), 1);
        for (i, c) in coeffs.iter().enumerate() {
            f.set(&[i], c.clone());
        }
        f
    }

    /// Dual basis functional `e^i`.
    pub fn dual(dim: usize, i: usize) -> Self {
        Self::elementary(dim, &[i])
    }

    /// `e^{i_1}∧…∧e^{i_k}` for arbitrary (possibly unsorted) indices.
    pub fn elementary(dim: usize, indices: &[usize]) -> Self {
        let mut f = Self::zero(dim, indices.len());
        let mut idx = indices.to_vec();
        if let Some(p) = sort_with_parity(&mut idx) {
            f.coeffs.insert(idx, sign(p));
        }
        f
    }

    /// 2-form from values `ω(e_i, e_j)` on the listed pairs.
    pub fn two_form(dim: usize, entries: &[(usize, usize, Scalar)]) -> Self {
        let mut f = Self::zero(dim, 2);
        for (i, j, v) in entries {
            f.add_to(&[*i, *j], v);
        }
        f
    }

    /// 2-form with values `m[i][j]` for `i < j`; the lower triangle is ignored.
    pub fn from_matrix(m: &[Vec<Scalar>]) -> Self {
        let n = m.len();
        let mut f = Self::zero(n, 2);
        for i in 0..n {
            for j in i + 1..n {
                f.set(&[i, j], m[i][j].clone());
            }
        }
        f
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero values on increasing tuples, in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.coeffs.iter()
    }

    /// Value on basis vectors `e_{idx[0]}, …`; alternation applied.
    pub fn coeff(&self, idx: &[usize]) -> Scalar {
        assert_eq!(idx.len(), self.degree, "form degree mismatch");
        let mut sorted = idx.to_vec();
        match sort_with_parity(&mut sorted) {
            None => zero(),
            Some(p) => match self.coeffs.get(&sorted) {
                Some(c) => sign(p) * c,
                None => zero(),
            },
        }
    }

    /// Sets the value on the tuple `idx` (alternation applied).
    pub fn set(&mut self, idx: &[usize], value: Scalar) {
        assert_eq!(idx.len(), self.degree, "form degree mismatch");
        let mut sorted = idx.to_vec();
        let Some(p) = sort_with_parity(&mut sorted) else {
            assert!(value.is_zero(), "alternating form cannot be nonzero on a repeated index");
            return;
        };
        let v = sign(p) * value;
        if v.is_zero() {
            self.coeffs.remove(&sorted);
        } else {
            self.coeffs.insert(sorted, v);
        }
    }

    fn add_to(&mut self, idx: &[usize], value: &Scalar) {
        let cur = self.coeff(idx);
        self.set(idx, cur + value);
    }

    /// Coefficients of a 1-form.
    pub fn covector(&self) -> Vec<Scalar> {
        assert_eq!(self.degree, 1, "covector of a non-1-form");
        (0..self.dim).map(|i| self.coeff(&[i])).collect()
    }

    /// `α(v)` for a 1-form.
    pub fn apply(&self, v: &Vector) -> Scalar {
        assert_eq!(self.degree, 1, "apply on a non-1-form");
        self.coeffs.iter().map(|(i, c)| c * &v.0[i[0]]).sum()
    }

    /// `ω(x, y)` for a 2-form.
    pub fn pair(&self, x: &Vector, y: &Vector) -> Scalar {
        assert_eq!(self.degree, 2, "pair on a non-2-form");
        self.coeffs
            .iter()
            .map(|(ij, c)| {
                let (i, j) = (ij[0], ij[1]);
                c * (&x.0[i] * &y.0[j] - &x.0[j] * &y.0[i])
            })
            .sum()
    }

    /// Antisymmetric Gram matrix `m[i][j] = ω(e_i, e_j)` of a 2-form.
    pub fn matrix(&self) -> Rows {
        assert_eq!(self.degree, 2, "matrix of a non-2-form");
        let n = self.dim;
        let mut m = vec![vec![zero(); n]; n];
        for (ij, c) in &self.coeffs {
            m[ij[0]][ij[1]] = c.clone();
            m[ij[1]][ij[0]] = -c.clone();
        }
        m
    }

    /// Multilinear evaluation on arbitrary vectors.
    pub fn eval(&self, vectors: &[Vector]) -> Scalar {
        assert_eq!(vectors.len(), self.degree, "form degree mismatch");
        self.coeffs
            .iter()
            .map(|(idx, c)| {
                let m: Rows = vectors.iter().map(|v| idx.iter().map(|&i| v.0[i].clone()).collect()).collect();
                c * linalg::determinant(&m)
            })
            .sum()
    }

    pub fn add(&self, other: &KForm) -> KForm {
        assert_eq!((self.dim, self.degree), (other.dim, other.degree), "adding incompatible forms");
        let mut out = self.clone();
        for (idx, c) in &other.coeffs {
            out.add_to(idx, c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> KForm {
        let mut out = Self::zero(self.dim, self.degree);
        if !s.is_zero() {
            for (idx, c) in &self.coeffs {
                out.coeffs.insert(idx.clone(), c * s);
            }
        }
        out
    }

    pub fn neg(&self) -> KForm {
        self.scale(&-one())
    }

    pub fn sub(&self, other: &KForm) -> KForm {
        self.add(&other.neg())
    }

    /// The same form on `self.dim + extra` coordinates, vanishing whenever
    /// an argument lies in the new directions.
    pub fn pad(&self, extra: usize) -> KForm {
        Self { dim: self.dim + extra, degree: self.degree, coeffs: self.coeffs.clone() }
    }

    /// Restriction to the span of the listed basis vectors, reindexed in the
    /// listed order.
    pub fn restrict(&self, keep: &[usize]) -> KForm {
        let mut out = Self::zero(keep.len(), self.degree);
        for idx in increasing_tuples(keep.len(), self.degree) {
            let orig: Vec<usize> = idx.iter().map(|&i| keep[i]).collect();
            out.set(&idx, self.coeff(&orig));
        }
        out
    }

    /// Pullback along `x ↦ A x`: `(A^*ω)(e_I) = ω(A e_{i_1}, …)`.
    pub fn pullback(&self, a: &crate::algebra::LinearMap) -> KForm {
        let n = a.dim();
        let mut out = Self::zero(n, self.degree);
        for idx in increasing_tuples(n, self.degree) {
            let vs: Vec<Vector> = idx.iter().map(|&i| a.column(i)).collect();
            out.set(&idx, self.eval(&vs));
        }
        out
    }
}

/// `ω([x,y]-slot, rest…)` expanded linearly in the first slot.
fn eval_first_vector(form: &KForm, first: &[Scalar], rest: &[usize]) -> Scalar {
    let mut total = zero();
    let mut idx = Vec::with_capacity(rest.len() + 1);
    for (m, c) in first.iter().enumerate() {
        if c.is_zero() || rest.contains(&m) {
            continue;
        }
        idx.clear();
        idx.push(m);
        idx.extend_from_slice(rest);
        let v = form.coeff(&idx);
        if !v.is_zero() {
            total += c * v;
        }
    }
    total
}

/// Chevalley–Eilenberg differential with trivial coefficients,
/// `(dω)(x_0,…,x_k) = Σ_{i<j} (−1)^{i+j} ω([x_i,x_j], x_0,…,x̂_i,…,x̂_j,…,x_k)`.
/// In degree one this is `dα(x,y) = −α([x,y])`.
pub fn ce_differential(g: &LieAlgebra, form: &KForm) -> KForm {
    let n = g.dim();
    assert_eq!(form.dim(), n, "form lives on a different algebra");
    let k = form.degree();
    let mut out = KForm::zero(n, k + 1);
    if k + 1 > n || form.is_zero() {
        return out;
    }
    for tuple in increasing_tuples(n, k + 1) {
        let mut total = zero();
        for a in 0..=k {
            for b in a + 1..=k {
                let br = g.bracket_coeffs(tuple[a], tuple[b]);
                if br.iter().all(Zero::is_zero) {
                    continue;
                }
                let rest: Vec<usize> =
                    tuple.iter().enumerate().filter(|(p, _)| *p != a && *p != b).map(|(_, &i)| i).collect();
                let v = eval_first_vector(form, br, &rest);
                if !v.is_zero() {
                    total += sign(a + b) * v;
                }
            }
        }
        out.set(&tuple, total);
    }
    out
}

/// Graded-commutative wedge product in the determinant normalization.
pub fn wedge(a: &KForm, b: &KForm) -> KForm {
    assert_eq!(a.dim(), b.dim(), "wedge of forms on different spaces");
    let n = a.dim();
    let mut out = KForm::zero(n, a.degree() + b.degree());
    if a.degree() + b.degree() > n {
        return out;
    }
    for (i, ca) in a.terms() {
        for (j, cb) in b.terms() {
            if i.iter().any(|x| j.contains(x)) {
                continue;
            }
            let mut idx: Vec<usize> = i.iter().chain(j.iter()).copied().collect();
            let parity = sort_with_parity(&mut idx).expect("disjoint index sets");
            let cur = out.coeffs.get(&idx).cloned().unwrap_or_else(zero);
            let v = cur + sign(parity) * ca * cb;
            if v.is_zero() {
                out.coeffs.remove(&idx);
            } else {
                out.coeffs.insert(idx, v);
            }
        }
    }
    out
}

/// `{x : B(x, y) = 0 for all y}` for a 2-form `B`.
pub fn radical(form: &KForm) -> Subspace {
    let m = form.matrix();
    Subspace::from_echelon(form.dim(), linalg::nullspace(&m, form.dim()))
}

pub fn is_nondegenerate(form: &KForm) -> bool {
    form.degree() == 2 && radical(form).is_zero()
}

/// Result of the top-degree contact test `α∧(dα)^m ≠ 0` on a `(2m+1)`-dimensional algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopContactTest {
    pub verdict: bool,
    /// Coefficient of `α∧(dα)^m` on `(e_1, …, e_n)`; zero in even dimension.
    pub coefficient: Scalar,
    pub reason: String,
}

pub fn top_contact_test(g: &LieAlgebra, alpha: &KForm) -> TopContactTest {
    let n = g.dim();
    if n.is_multiple_of(2) {
        return TopContactTest { verdict: false, coefficient: zero(), reason: format!("dimension {n} is even") };
    }
    let m = (n - 1) / 2;
    let da = ce_differential(g, alpha);
    let mut power = KForm::constant(n, one());
    for _ in 0..m {
        power = wedge(&power, &da);
    }
    let top = wedge(alpha, &power);
    let all: Vec<usize> = (0..n).collect();
    let coefficient = top.coeff(&all);
    let verdict = !coefficient.is_zero();
    TopContactTest {
        verdict, reason: if verdict { String::new() } else { "α∧(dα)^m vanishes".into() }, coefficient
    }
}

/// How wedge monomials of 1-forms are evaluated and printed.
///
/// `Determinant`: `(χ_1∧…∧χ_k)(x_1,…,x_k) = det[χ_a(x_b)]`.
/// `Interior`: the composite of interior derivations, which is
/// `(−1)^{k(k−1)/2}` times the determinant. The two agree on 1-forms and
/// differ by a sign on 2-forms. Verdicts never depend on the choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WedgeConvention {
    #[default]
    Determinant,
    Interior,
}

impl WedgeConvention {
    /// Factor relating a wedge monomial's coefficient in this convention to
    /// the stored (determinant) value.
    pub fn sign(self, degree: usize) -> Scalar {
        match self {
            WedgeConvention::Determinant => one(),
            WedgeConvention::Interior => sign(degree * degree.saturating_sub(1) / 2),
        }
    }

    /// Evaluates `χ_1∧…∧χ_k` on `x_1,…,x_k` in this convention.
    pub fn evaluate(self, covectors: &[KForm], vectors: &[Vector]) -> Scalar {
        assert_eq!(covectors.len(), vectors.len(), "arity mismatch");
        let m: Rows = covectors.iter().map(|c| vectors.iter().map(|v| c.apply(v)).collect()).collect();
        self.sign(covectors.len()) * linalg::determinant(&m)
    }
}
