//! Affine families of derivations cut out by linear constraints.
//!
//! Unknowns are the `n²` entries of `D` flattened row-major, so the entry
//! `D[r][c]` (row `r`, column `c`) is unknown number `r * n + c`.

use crate::algebra::{LieAlgebra, LinearMap, Subspace, Vector};
use crate::error::{ensure_dim, Result};
use crate::forms::KForm;
use crate::linalg::{self, Solve};
use crate::scalar::{zero, Scalar};

/// Extra affine conditions imposed on a derivation `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constraint {
    /// `φ∘D = λφ`.
    FormEigen { form: KForm, lambda: Scalar },
    /// `D∘A = A∘D` on every vector of `subspace`.
    Commutes { map: LinearMap, subspace: Subspace },
    /// `D(v) = w`.
    Maps { from: Vector, to: Vector },
    /// Off-diagonal entries vanish.
    Diagonal,
}

impl Constraint {
    pub fn describe(&self) -> String {
        match self {
            Constraint::FormEigen { lambda, .. } => format!("φ∘D = {lambda}·φ"),
            Constraint::Commutes { .. } => "D∘A = A∘D".into(),
            Constraint::Maps { .. } => "D(v) = w".into(),
            Constraint::Diagonal => "D diagonal".into(),
        }
    }
}

/// Solution set `particular + span(homogeneous)`; `particular` is `None`
/// when the system is inconsistent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationSpace {
    pub particular: Option<LinearMap>,
    pub homogeneous: Vec<LinearMap>,
    /// Label of an equation that cannot be met, for inconsistent systems.
    pub conflict: Option<String>,
}

impl DerivationSpace {
    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }

    pub fn dim(&self) -> usize {
        self.homogeneous.len()
    }

    /// `particular + Σ t_i h_i`.
    pub fn point(&self, params: &[Scalar]) -> Option<LinearMap> {
        let mut m = self.particular.clone()?;
        for (t, h) in params.iter().zip(&self.homogeneous) {
            m = m.add(&h.scale(t));
        }
        Some(m)
    }
}

struct System {
    n: usize,
    rows: Vec<Vec<Scalar>>,
    rhs: Vec<Scalar>,
    labels: Vec<String>,
}

impl System {
    fn push(&mut self, row: Vec<Scalar>, rhs: Scalar, label: String) {
        self.rows.push(row);
        self.rhs.push(rhs);
        self.labels.push(label);
    }

    fn blank(&self) -> Vec<Scalar> {
        vec![zero(); self.n * self.n]
    }
}

fn leibniz_rows(g: &LieAlgebra, sys: &mut System) {
    let n = g.dim();
    // D[e_i,e_j] − [De_i,e_j] − [e_i,De_j] = 0, coordinate k.
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let mut row = sys.blank();
                for m in 0..n {
                    row[k * n + m] += g.constant(i, j, m);
                    row[m * n + i] -= g.constant(m, j, k);
                    row[m * n + j] -= g.constant(i, m, k);
                }
                let label =
                    format!("Leibniz rule on ({}, {}), coordinate {}", g.labels()[i], g.labels()[j], g.labels()[k]);
                sys.push(row, zero(), label);
            }
        }
    }
}

fn constraint_rows(n: usize, idx: usize, c: &Constraint, sys: &mut System) {
    let label = |extra: String| format!("constraint {} ({}){extra}", idx + 1, c.describe());
    match c {
        Constraint::FormEigen { form, lambda } => {
            let phi = form.covector();
            for col in 0..n {
                let mut row = sys.blank();
                for (r, p) in phi.iter().enumerate() {
                    row[r * n + col] = p.clone();
                }
                sys.push(row, lambda * &phi[col], label(format!(", column {}", col + 1)));
            }
        }
        Constraint::Commutes { map, subspace } => {
            for (b, v) in subspace.basis().iter().enumerate() {
                let av = map.apply(v);
                for r in 0..n {
                    let mut row = sys.blank();
                    // (D A v)_r − (A D v)_r
                    for col in 0..n {
                        row[r * n + col] += &av.0[col];
                        for s in 0..n {
                            row[s * n + col] -= map.entry(r, s) * &v.0[col];
                        }
                    }
                    sys.push(row, zero(), label(format!(", basis vector {}, coordinate {}", b + 1, r + 1)));
                }
            }
        }
        Constraint::Maps { from, to } => {
            for r in 0..n {
                let mut row = sys.blank();
                for col in 0..n {
                    row[r * n + col] = from.0[col].clone();
                }
                sys.push(row, to.0[r].clone(), label(format!(", coordinate {}", r + 1)));
            }
        }
        Constraint::Diagonal => {
            for r in 0..n {
                for col in 0..n {
                    if r != col {
                        let mut row = sys.blank();
                        row[r * n + col] = crate::scalar::one();
                        sys.push(row, zero(), label(format!(", entry ({}, {})", r + 1, col + 1)));
                    }
                }
            }
        }
    }
}

fn check_constraint_dims(n: usize, c: &Constraint) -> Result<()> {
    match c {
        Constraint::FormEigen { form, .. } => {
            ensure_dim(n, form.dim())?;
            ensure_dim(1, form.degree())
        }
        Constraint::Commutes { map, subspace } => {
            ensure_dim(n, map.dim())?;
            ensure_dim(n, subspace.ambient())
        }
        Constraint::Maps { from, to } => {
            ensure_dim(n, from.dim())?;
            ensure_dim(n, to.dim())
        }
        Constraint::Diagonal => Ok(()),
    }
}

/// All derivations of `g` satisfying every constraint.
pub fn derivation_space(g: &LieAlgebra, constraints: &[Constraint]) -> Result<DerivationSpace> {
    let n = g.dim();
    for c in constraints {
        check_constraint_dims(n, c)?;
    }
    let mut sys = System { n, rows: Vec::new(), rhs: Vec::new(), labels: Vec::new() };
    leibniz_rows(g, &mut sys);
    for (i, c) in constraints.iter().enumerate() {
        constraint_rows(n, i, c, &mut sys);
    }
    let to_map = |flat: &[Scalar]| LinearMap::from_flat(n, flat).expect("n² entries");
    Ok(match linalg::solve_affine(&sys.rows, &sys.rhs, n * n) {
        Solve::Solved(s) => DerivationSpace {
            particular: Some(to_map(&s.particular)),
            homogeneous: s.homogeneous.iter().map(|h| to_map(h)).collect(),
            conflict: None,
        },
        Solve::Inconsistent { row } => DerivationSpace {
            particular: None,
            homogeneous: linalg::nullspace(&sys.rows, n * n).iter().map(|h| to_map(h)).collect(),
            conflict: Some(sys.labels[row].clone()),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::{frac, int};

    #[test]
    fn heisenberg_derivations() {
        let space = derivation_space(&catalog::h3(), &[]).unwrap();
        assert_eq!(space.dim(), 6);
        assert!(space.particular.as_ref().unwrap().is_zero());
        for d in &space.homogeneous {
            assert!(catalog::h3().is_derivation(d).passed());
        }
    }

    #[test]
    fn abelian_derivations_are_everything() {
        let space = derivation_space(&LieAlgebra::abelian(2), &[]).unwrap();
        assert_eq!(space.dim(), 4);
    }

    #[test]
    fn eigenform_family_contains_standard_map() {
        let h3 = catalog::h3();
        let c = Constraint::FormEigen { form: KForm::dual(3, 2), lambda: int(1) };
        let space = derivation_space(&h3, &[c, Constraint::Diagonal]).unwrap();
        // Diagonal derivations with p3 = p1 + p2 and p3 = 1: one free parameter.
        assert_eq!(space.dim(), 1);
        let target = LinearMap::diag(&[frac(1, 2), frac(1, 2), int(1)]);
        let p = space.particular.clone().unwrap();
        let diff = target.sub(&p).flatten();
        let h = space.homogeneous[0].flatten();
        let k = h.iter().position(|x| *x != zero()).unwrap();
        let t = &diff[k] / &h[k];
        assert_eq!(space.point(&[t]).unwrap(), target);
    }

    #[test]
    fn inconsistent_system_names_a_constraint() {
        let h3 = catalog::h3();
        let constraints =
            [Constraint::Maps { from: Vector::basis(3, 2), to: Vector::basis(3, 0) }, Constraint::Diagonal];
        let space = derivation_space(&h3, &constraints).unwrap();
        assert!(space.is_empty());
        assert!(space.conflict.unwrap().starts_with("constraint"));
    }

    #[test]
    fn commuting_constraint() {
        let h3 = catalog::h3();
        let phi = catalog::h3_sasakian_phi();
        let ker = Subspace::span(3, &[Vector::basis(3, 0), Vector::basis(3, 1)]);
        let c = Constraint::Commutes { map: phi.clone(), subspace: ker };
        let space = derivation_space(&h3, &[c, Constraint::Diagonal]).unwrap();
        for d in &space.homogeneous {
            assert_eq!(d.entry(0, 0), d.entry(1, 1));
        }
        assert_eq!(space.dim(), 1);
    }
}
