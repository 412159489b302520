//! Dense exact linear algebra over the rationals: row reduction, nullspaces,
//! affine solves, determinants.
//!
//! Everything here works on plain row-major `Vec<Vec<Scalar>>` so the
//! algebra-level types can build systems without intermediate wrappers.

use num_traits::{One, Zero};

use crate::scalar::Scalar;

pub type Rows = Vec<Vec<Scalar>>;

/// Reduces `rows` in place to reduced row echelon form and returns the pivot
/// columns in increasing order. Zero rows are dropped.
pub fn rref(rows: &mut Rows, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = Scalar::one() / &rows[r][col];
        for v in rows[r].iter_mut().skip(col) {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Scalar>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : A x = 0}` in canonical reduced echelon form.
pub fn nullspace(rows: &[Vec<Scalar>], ncols: usize) -> Rows {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let mut basis = Vec::new();
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    for &f in &free {
        let mut v = vec![Scalar::zero(); ncols];
        v[f] = Scalar::one();
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = -row[f].clone();
        }
        basis.push(v);
    }
    echelon_basis(basis, ncols)
}

/// Canonical echelon basis for the span of `vectors`.
pub fn echelon_basis(vectors: Rows, ncols: usize) -> Rows {
    let mut m = vectors;
    rref(&mut m, ncols);
    m
}

/// Solution set of the affine system `A x = b`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineSolution {
    pub particular: Vec<Scalar>,
    pub homogeneous: Rows,
}

/// Outcome of an affine solve; `Inconsistent` carries the index of an
/// original equation that cannot be satisfied together with the others.
#[derive(Debug, Clone, PartialEq)]
pub enum Solve {
    Solved(AffineSolution),
    Inconsistent { row: usize },
}

pub fn solve_affine(rows: &[Vec<Scalar>], rhs: &[Scalar], ncols: usize) -> Solve {
    assert_eq!(rows.len(), rhs.len());
    // Augment with the rhs and a one-hot tag column per equation so the
    // offending equation can be reported when the system is inconsistent.
    let neq = rows.len();
    let width = ncols + 1 + neq;
    let mut aug: Rows = rows
        .iter()
        .zip(rhs)
        .enumerate()
        .map(|(i, (r, b))| {
            let mut v = r.clone();
            v.push(b.clone());
            v.extend((0..neq).map(|k| if k == i { Scalar::one() } else { Scalar::zero() }));
            v
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if let Some(pos) = pivots.iter().position(|&p| p == ncols) {
        let tag = &aug[pos][ncols + 1..width];
        let row = tag.iter().rposition(|t| !t.is_zero()).unwrap_or(0);
        return Solve::Inconsistent { row };
    }
    let mut particular = vec![Scalar::zero(); ncols];
    for (row, &p) in aug.iter().zip(&pivots) {
        particular[p] = row[ncols].clone();
    }
    Solve::Solved(AffineSolution { particular, homogeneous: nullspace(rows, ncols) })
}

pub fn determinant(matrix: &[Vec<Scalar>]) -> Scalar {
    let n = matrix.len();
    let mut m = matrix.to_vec();
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return Scalar::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for i in col + 1..n {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] / &pivot;
            for j in col..n {
                let delta = &f * &m[col][j];
                m[i][j] -= delta;
            }
        }
    }
    det
}

pub fn inverse(matrix: &[Vec<Scalar>]) -> Option<Rows> {
    let n = matrix.len();
    let mut aug: Rows = matrix
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..n).map(|k| if k == i { Scalar::one() } else { Scalar::zero() }));
            v
        })
        .collect();
    let pivots = rref(&mut aug, n);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| i != p) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Leading principal minors `det(M[..k][..k])` for `k = 1..=n`.
pub fn leading_minors(matrix: &[Vec<Scalar>]) -> Vec<Scalar> {
    (1..=matrix.len())
        .map(|k| {
            let sub: Rows = matrix[..k].iter().map(|r| r[..k].to_vec()).collect();
            determinant(&sub)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn m(rows: &[&[i64]]) -> Rows {
        rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn rref_is_canonical() {
        let mut a = m(&[&[2, 4, 6], &[1, 2, 4], &[3, 6, 10]]);
        let piv = rref(&mut a, 3);
        assert_eq!(piv, vec![0, 2]);
        assert_eq!(a, m(&[&[1, 2, 0], &[0, 0, 1]]));
    }

    #[test]
    fn nullspace_of_rank_one() {
        let ns = nullspace(&m(&[&[1, 1, 1]]), 3);
        assert_eq!(ns, m(&[&[1, 0, -1], &[0, 1, -1]]));
        let empty = nullspace(&m(&[&[1, 0], &[0, 1]]), 2);
        assert!(empty.is_empty());
    }

    #[test]
    fn affine_solve_and_inconsistency() {
        let a = m(&[&[1, 1], &[1, -1]]);
        match solve_affine(&a, &[int(3), int(1)], 2) {
            Solve::Solved(s) => {
                assert_eq!(s.particular, vec![int(2), int(1)]);
                assert!(s.homogeneous.is_empty());
            }
            other => panic!("{other:?}"),
        }
        let b = m(&[&[1, 1], &[2, 2], &[1, 0]]);
        assert_eq!(solve_affine(&b, &[int(1), int(3), int(0)], 2), Solve::Inconsistent { row: 1 });
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(determinant(&a), int(1));
        assert_eq!(inverse(&a).unwrap(), m(&[&[1, -1], &[-1, 2]]));
        assert_eq!(inverse(&m(&[&[1, 2], &[2, 4]])), None);
        let b = vec![vec![frac(1, 2), int(0)], vec![int(3), int(4)]];
        assert_eq!(determinant(&b), int(2));
        assert_eq!(leading_minors(&b), vec![frac(1, 2), int(2)]);
    }
}
