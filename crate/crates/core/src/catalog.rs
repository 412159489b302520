//! Built-in algebras and their canonical structures.
//!
//! - `h3`: Heisenberg algebra, `[e1,e2] = e3`, Sasakian with `ξ = e3`.
//! - `d4half`: `h3` extended by `diag(1/2, 1/2, 1)`, Frobenius-Kähler with `φ = e³`.
//! - `g0`: `d4half` extended by the rotation derivation `E`, Sasakian with trivial center.
//! - `g5`: central extension of `d4half` by its Kähler form, Sasakian with `ξ = e5`.

use crate::algebra::{default_labels, BracketTable, LieAlgebra, LinearMap, Vector};
use crate::forms::KForm;
use crate::scalar::{frac, int};

pub const NAMES: [&str; 4] = ["h3", "d4half", "g0", "g5"];

fn build(n: usize, table: &BracketTable) -> LieAlgebra {
    LieAlgebra::from_table(default_labels(n), table).expect("built-in table is well formed")
}

fn cols(n: usize, images: &[&[(usize, i64)]]) -> LinearMap {
    let vs: Vec<Vector> = images
        .iter()
        .map(|terms| {
            let mut v = Vector::zero(n);
            for &(k, c) in terms.iter() {
                v.0[k] = int(c);
            }
            v
        })
        .collect();
    LinearMap::from_columns(&vs).expect("square")
}

pub fn h3() -> LieAlgebra {
    build(3, &[(0, 1, &[(2, int(1))])])
}

pub fn d4half() -> LieAlgebra {
    build(4, &[(0, 1, &[(2, int(1))]), (3, 0, &[(0, frac(1, 2))]), (3, 1, &[(1, frac(1, 2))]), (3, 2, &[(2, int(1))])])
}

pub fn g0() -> LieAlgebra {
    build(
        5,
        &[
            (0, 1, &[(2, int(1))]),
            (3, 0, &[(0, frac(1, 2))]),
            (3, 1, &[(1, frac(1, 2))]),
            (3, 2, &[(2, int(1))]),
            (4, 0, &[(1, int(-1))]),
            (4, 1, &[(0, int(1))]),
        ],
    )
}

pub fn g5() -> LieAlgebra {
    build(
        5,
        &[
            (0, 1, &[(2, int(1)), (4, int(1))]),
            (3, 0, &[(0, frac(1, 2))]),
            (3, 1, &[(1, frac(1, 2))]),
            (3, 2, &[(2, int(1)), (4, int(1))]),
        ],
    )
}

/// `Φ e1 = e2, Φ e2 = −e1, Φ e3 = 0` on `h3`.
pub fn h3_sasakian_phi() -> LinearMap {
    cols(3, &[&[(1, 1)], &[(0, -1)], &[]])
}

/// `diag(1/2, 1/2, 1)`, the derivation producing `d4half` from `h3`.
pub fn h3_d() -> LinearMap {
    LinearMap::diag(&[frac(1, 2), frac(1, 2), int(1)])
}

/// `J e1 = e2, J e2 = −e1, J e3 = −e4, J e4 = e3` on `d4half`.
pub fn d4half_j() -> LinearMap {
    cols(4, &[&[(1, 1)], &[(0, -1)], &[(3, -1)], &[(2, 1)]])
}

/// `E e1 = −e2, E e2 = e1, E e3 = E e4 = 0` on `d4half`.
pub fn d4half_e() -> LinearMap {
    cols(4, &[&[(1, -1)], &[(0, 1)], &[], &[]])
}

/// `ω = e¹∧e² − e³∧e⁴ = −d(e³)` on `d4half`.
pub fn d4half_omega() -> KForm {
    KForm::two_form(4, &[(0, 1, int(1)), (2, 3, int(-1))])
}

/// `Φ e1 = e2, Φ e2 = −e1, Φ e3 = −e4, Φ e4 = e3 − e5, Φ e5 = 0` on `g0`.
pub fn g0_phi() -> LinearMap {
    cols(5, &[&[(1, 1)], &[(0, -1)], &[(3, -1)], &[(2, 1), (4, -1)], &[]])
}

/// `J ⊕ 0` on `g5`.
pub fn g5_phi() -> LinearMap {
    cols(5, &[&[(1, 1)], &[(0, -1)], &[(3, -1)], &[(2, 1)], &[]])
}

/// Raw Sasakian data `(ξ, α, Φ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SasakianData {
    pub xi: Vector,
    pub alpha: KForm,
    pub phi: LinearMap,
}

/// Raw Frobenius-Kähler data `(φ, J, ω)` with `ω = −dφ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FkData {
    pub phi: KForm,
    pub j: LinearMap,
    pub omega: KForm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Builtin {
    pub name: &'static str,
    pub algebra: LieAlgebra,
    pub sasakian: Option<SasakianData>,
    pub frobenius_kahler: Option<FkData>,
    /// Maps addressable by name on the command line.
    pub maps: Vec<(&'static str, LinearMap)>,
}

pub fn builtin(name: &str) -> Option<Builtin> {
    let b = match name {
        "h3" => Builtin {
            name: "h3",
            algebra: h3(),
            sasakian: Some(SasakianData { xi: Vector::basis(3, 2), alpha: KForm::dual(3, 2), phi: h3_sasakian_phi() }),
            frobenius_kahler: None,
            maps: vec![("Phi", h3_sasakian_phi()), ("D", h3_d())],
        },
        "d4half" => Builtin {
            name: "d4half",
            algebra: d4half(),
            sasakian: None,
            frobenius_kahler: Some(FkData { phi: KForm::dual(4, 2), j: d4half_j(), omega: d4half_omega() }),
            maps: vec![("J", d4half_j()), ("E", d4half_e())],
        },
        "g0" => Builtin {
            name: "g0",
            algebra: g0(),
            sasakian: Some(SasakianData {
                xi: Vector::basis(5, 4),
                alpha: KForm::dual(5, 2).add(&KForm::dual(5, 4)),
                phi: g0_phi(),
            }),
            frobenius_kahler: None,
            maps: vec![("Phi", g0_phi())],
        },
        "g5" => Builtin {
            name: "g5",
            algebra: g5(),
            sasakian: Some(SasakianData { xi: Vector::basis(5, 4), alpha: KForm::dual(5, 4), phi: g5_phi() }),
            frobenius_kahler: None,
            maps: vec![("Phi", g5_phi())],
        },
        _ => return None,
    };
    Some(b)
}

impl Builtin {
    pub fn map(&self, name: &str) -> Option<&LinearMap> {
        self.maps.iter().find(|(n, _)| *n == name).map(|(_, m)| m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_builtins_satisfy_jacobi() {
        for name in NAMES {
            let b = builtin(name).unwrap();
            assert!(b.algebra.check_jacobi().passed(), "{name}");
        }
        assert!(builtin("h4").is_none());
    }

    #[test]
    fn named_maps_are_derivations() {
        assert!(h3().is_derivation(&h3_d()).passed());
        assert!(d4half().is_derivation(&d4half_e()).passed());
    }
}
