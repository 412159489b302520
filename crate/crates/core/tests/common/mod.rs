//! Seeded generators and hand-rolled oracles shared by the integration tests.
#![allow(dead_code)]

use lieforge::derivations::derivation_space;
use lieforge::extensions::{central_extension, derivation_extension};
use lieforge::forms::{ce_differential, increasing_tuples};
use lieforge::linalg::nullspace;
use lieforge::scalar::{frac, int, one, zero};
use lieforge::{KForm, LieAlgebra, LinearMap, Scalar, Vector};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

const SMALL: [(i64, i64); 9] = [(-2, 1), (-1, 1), (-1, 2), (0, 1), (1, 2), (1, 1), (2, 1), (3, 1), (1, 3)];

/// Small rational, zero included.
pub fn scalar(r: &mut TestRng) -> Scalar {
    let (p, q) = SMALL[r.random_range(0..SMALL.len())];
    frac(p, q)
}

pub fn nonzero_scalar(r: &mut TestRng) -> Scalar {
    loop {
        let s = scalar(r);
        if !s.is_zero() {
            return s;
        }
    }
}

/// Small rational that is zero with probability about one half.
pub fn sparse_scalar(r: &mut TestRng) -> Scalar {
    if r.random_bool(0.5) {
        zero()
    } else {
        nonzero_scalar(r)
    }
}

pub fn vector(r: &mut TestRng, n: usize) -> Vector {
    Vector((0..n).map(|_| scalar(r)).collect())
}

pub fn map(r: &mut TestRng, n: usize) -> LinearMap {
    let rows = (0..n).map(|_| (0..n).map(|_| sparse_scalar(r)).collect()).collect();
    LinearMap::from_rows(rows).unwrap()
}

pub fn form(r: &mut TestRng, n: usize, k: usize) -> KForm {
    let mut f = KForm::zero(n, k);
    for idx in increasing_tuples(n, k) {
        f.set(&idx, sparse_scalar(r));
    }
    f
}

fn combine<T: Clone>(r: &mut TestRng, basis: &[T], add: impl Fn(&T, &T, &Scalar) -> T, zero: T) -> T {
    let mut acc = zero;
    for b in basis {
        acc = add(&acc, b, &sparse_scalar(r));
    }
    acc
}

/// Basis of `Z²(g)`, the kernel of `d` on 2-forms.
pub fn cocycle_basis(g: &LieAlgebra) -> Vec<KForm> {
    let n = g.dim();
    let pairs = increasing_tuples(n, 2);
    let triples = increasing_tuples(n, 3);
    let images: Vec<KForm> = pairs.iter().map(|p| ce_differential(g, &KForm::elementary(n, p))).collect();
    let rows: Vec<Vec<Scalar>> = triples.iter().map(|t| images.iter().map(|f| f.coeff(t)).collect()).collect();
    let kernel = if triples.is_empty() {
        (0..pairs.len()).map(|i| (0..pairs.len()).map(|j| if i == j { one() } else { zero() }).collect()).collect()
    } else {
        nullspace(&rows, pairs.len())
    };
    kernel
        .into_iter()
        .map(|v| {
            let mut f = KForm::zero(n, 2);
            for (p, c) in pairs.iter().zip(v) {
                f.set(p, c);
            }
            f
        })
        .collect()
}

pub fn random_cocycle(r: &mut TestRng, g: &LieAlgebra) -> KForm {
    let basis = cocycle_basis(g);
    combine(r, &basis, |a, b, t| a.add(&b.scale(t)), KForm::zero(g.dim(), 2))
}

pub fn random_derivation(r: &mut TestRng, g: &LieAlgebra) -> LinearMap {
    let space = derivation_space(g, &[]).expect("unconstrained derivations");
    let params: Vec<Scalar> = (0..space.dim()).map(|_| sparse_scalar(r)).collect();
    space.point(&params).expect("derivations form a vector space")
}

pub fn aff1() -> LieAlgebra {
    LieAlgebra::from_brackets(lieforge::algebra::default_labels(2), [(0, 1, Vector::from_ints(&[0, 1]))]).unwrap()
}

pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        lieforge::algebra::default_labels(3),
        [
            (0, 1, Vector::from_ints(&[0, 2, 0])),
            (0, 2, Vector::from_ints(&[0, 0, -2])),
            (1, 2, Vector::from_ints(&[1, 0, 0])),
        ],
    )
    .unwrap()
}

/// Invertible map built from a few elementary operations and a diagonal scaling.
pub fn random_invertible(r: &mut TestRng, n: usize) -> LinearMap {
    let mut p = LinearMap::diag(&(0..n).map(|_| nonzero_scalar(r)).collect::<Vec<_>>());
    for _ in 0..n {
        if n < 2 {
            break;
        }
        let i = r.random_range(0..n);
        let j = (i + r.random_range(1..n)) % n;
        let t = nonzero_scalar(r);
        let mut e = LinearMap::identity(n);
        let mut rows = e.rows().clone();
        rows[i][j] = t;
        e = LinearMap::from_rows(rows).unwrap();
        p = e.compose(&p);
    }
    p
}

/// Jacobi-valid algebra of the given dimension: a seed algebra grown by
/// random central and derivation extensions, then written in a random basis.
pub fn random_algebra(r: &mut TestRng, n: usize) -> LieAlgebra {
    let mut g = match r.random_range(0..4) {
        0 | 1 if n >= 2 => aff1(),
        2 if n >= 3 => sl2(),
        3 if n >= 3 => lieforge::catalog::h3(),
        _ => LieAlgebra::abelian(1),
    };
    while g.dim() < n {
        g = if r.random_bool(0.5) {
            let theta = random_cocycle(r, &g);
            central_extension(&g, &theta).unwrap().algebra
        } else {
            let d = random_derivation(r, &g);
            derivation_extension(&g, &d).unwrap().algebra
        };
    }
    let p = random_invertible(r, n);
    g.change_basis(&p).unwrap()
}

/// `[x, y]` expanded through the raw structure constants.
pub fn bracket_oracle(g: &LieAlgebra, x: &Vector, y: &Vector) -> Vector {
    let n = g.dim();
    let mut out = vec![zero(); n];
    for i in 0..n {
        for j in 0..n {
            let c = &x.0[i] * &y.0[j];
            if c.is_zero() {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                *o += &c * g.constant(i, j, k);
            }
        }
    }
    Vector(out)
}

pub fn jacobi_oracle(g: &LieAlgebra) -> bool {
    let n = g.dim();
    let e = |i| Vector::basis(n, i);
    for t in increasing_tuples(n, 3) {
        let (x, y, z) = (e(t[0]), e(t[1]), e(t[2]));
        let s = &(&bracket_oracle(g, &bracket_oracle(g, &x, &y), &z)
            + &bracket_oracle(g, &bracket_oracle(g, &y, &z), &x))
            + &bracket_oracle(g, &bracket_oracle(g, &z, &x), &y);
        if !s.is_zero() {
            return false;
        }
    }
    true
}

pub fn leibniz_oracle(g: &LieAlgebra, d: &LinearMap) -> bool {
    let n = g.dim();
    for t in increasing_tuples(n, 2) {
        let (x, y) = (Vector::basis(n, t[0]), Vector::basis(n, t[1]));
        let lhs = d.apply(&bracket_oracle(g, &x, &y));
        let rhs = &bracket_oracle(g, &d.apply(&x), &y) + &bracket_oracle(g, &x, &d.apply(&y));
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// `dω` evaluated through full multilinear evaluation on basis tuples.
pub fn d_oracle(g: &LieAlgebra, f: &KForm) -> KForm {
    let n = g.dim();
    let k = f.degree();
    let mut out = KForm::zero(n, k + 1);
    for t in increasing_tuples(n, k + 1) {
        let xs: Vec<Vector> = t.iter().map(|&i| Vector::basis(n, i)).collect();
        let mut total = zero();
        for a in 0..=k {
            for b in a + 1..=k {
                let mut args = vec![bracket_oracle(g, &xs[a], &xs[b])];
                args.extend(xs.iter().enumerate().filter(|(p, _)| *p != a && *p != b).map(|(_, v)| v.clone()));
                let v = f.eval(&args);
                if (a + b) % 2 == 0 {
                    total += v;
                } else {
                    total -= v;
                }
            }
        }
        out.set(&t, total);
    }
    out
}

/// `N_A(x,y) = A²[x,y] + [Ax,Ay] − A[x,Ay] − A[Ax,y]`.
pub fn nijenhuis_oracle(g: &LieAlgebra, a: &LinearMap, x: &Vector, y: &Vector) -> Vector {
    let br = |u: &Vector, v: &Vector| bracket_oracle(g, u, v);
    let (ax, ay) = (a.apply(x), a.apply(y));
    let t1 = a.apply(&a.apply(&br(x, y)));
    let t2 = br(&ax, &ay);
    let t3 = a.apply(&br(x, &ay));
    let t4 = a.apply(&br(&ax, y));
    &(&(&t1 + &t2) - &t3) - &t4
}

/// Symplectic basis `f_1, …, f_{2m}` with `ω(f_{2i−1}, f_{2i}) = 1`, as columns.
pub fn darboux_basis(omega: &KForm) -> LinearMap {
    let n = omega.dim();
    let mut pool: Vec<Vector> = (0..n).map(|i| Vector::basis(n, i)).collect();
    let mut out = Vec::new();
    while let Some(u) = pool.iter().position(|v| !v.is_zero()).map(|i| pool.remove(i)) {
        let w_pos = pool.iter().position(|w| !omega.pair(&u, w).is_zero()).expect("nondegenerate");
        let w = pool.remove(w_pos);
        let w = w.scale(&(one() / omega.pair(&u, &w)));
        pool = pool
            .into_iter()
            .map(|v| {
                let a = omega.pair(&v, &w);
                let b = omega.pair(&u, &v);
                &(&v - &u.scale(&a)) - &w.scale(&b)
            })
            .collect();
        out.push(u);
        out.push(w);
    }
    LinearMap::from_columns(&out).unwrap()
}

/// Compatible almost complex structure with positive metric `ω(x, Jy)`: the
/// standard one in a Darboux basis, conjugated by random symplectic transvections.
pub fn compatible_j(r: &mut TestRng, omega: &KForm) -> LinearMap {
    let n = omega.dim();
    let b = darboux_basis(omega);
    let std = KForm::two_form(n, &(0..n / 2).map(|i| (2 * i, 2 * i + 1, one())).collect::<Vec<_>>());
    let mut s = LinearMap::identity(n);
    for _ in 0..3 {
        let v = vector(r, n);
        let t = nonzero_scalar(r);
        // x ↦ x + t ω₀(v, x) v
        let tv = LinearMap::from_fn(n, |i, j| {
            let delta = if i == j { one() } else { zero() };
            delta + &t * &v.0[i] * std.pair(&v, &Vector::basis(n, j))
        });
        s = tv.compose(&s);
    }
    let mut j0 = LinearMap::zero(n);
    let mut rows = j0.rows().clone();
    for i in 0..n / 2 {
        rows[2 * i + 1][2 * i] = one();
        rows[2 * i][2 * i + 1] = -one();
    }
    j0 = LinearMap::from_rows(rows).unwrap();
    let conj = b.compose(&s);
    conj.compose(&j0).compose(&conj.inverse().unwrap())
}

/// Random closed nondegenerate 2-form on `g`, if one turns up in a few draws.
pub fn random_symplectic(r: &mut TestRng, g: &LieAlgebra) -> Option<KForm> {
    let basis = cocycle_basis(g);
    for _ in 0..8 {
        let w = combine(r, &basis, |a, b, t| a.add(&b.scale(t)), KForm::zero(g.dim(), 2));
        if lieforge::forms::is_nondegenerate(&w) {
            return Some(w);
        }
    }
    None
}

/// `(g, J, ω)` with `dω = 0`, `ω(J·,J·) = ω` and positive metric; `N_J` is unconstrained.
pub fn random_almost_kahler(r: &mut TestRng, n: usize) -> (LieAlgebra, LinearMap, KForm) {
    loop {
        let g = random_algebra(r, n);
        if let Some(omega) = random_symplectic(r, &g) {
            let j = compatible_j(r, &omega);
            return (g, j, omega);
        }
    }
}

pub fn half() -> Scalar {
    frac(1, 2)
}

pub fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| int(x)).collect()
}
