//! Sasakian structures on double extensions `g(θ, D)` of a Sasakian algebra.
//!
//! Index layout of `g(θ, D)`: the base `g` at `0..m`, the central element `z`
//! at `m`, the derivation slot at `m + 1`.

use num_traits::Zero;

use crate::algebra::{LieAlgebra, LinearMap, Vector};
use crate::error::{ensure_dim, Error, Result};
use crate::extensions::{double_extension, ExtensionResult};
use crate::forms::{radical, KForm};
use crate::report::{CheckReport, Witness};
use crate::scalar::{one, Scalar};

use super::{check_contact, check_sasakian, kernel_basis, residual, Checked, SasakianStructure};

/// Parameters of the Reeb decomposition `ξ = u + aξ̄ + bz` and of `w = cξ̄ + dz`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SasakianDoubleParams {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub d: Scalar,
    /// `u ∈ Ker ᾱ`, in base coordinates.
    pub u: Vector,
}

impl SasakianDoubleParams {
    pub fn delta(&self) -> Scalar {
        &self.a * &self.d - &self.b * &self.c
    }

    /// `a + b = 1`, `c + d = 0`, `δ ≠ 0`.
    pub fn validate(&self) -> CheckReport {
        let mut r = CheckReport::new();
        let s = &self.a + &self.b;
        r.record("a + b = 1", (s != one()).then(|| Witness::new(vec![], vec![s.clone()])));
        let t = &self.c + &self.d;
        r.record("c + d = 0", (!t.is_zero()).then(|| Witness::new(vec![], vec![t.clone()])));
        let delta = self.delta();
        r.record("δ = ad − bc ≠ 0", delta.is_zero().then(|| Witness::new(vec![], vec![delta.clone()])));
        r
    }
}

/// Everything built on the way to the Sasakian candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SasakianDoubleExtension {
    pub extension: ExtensionResult,
    pub params: SasakianDoubleParams,
    pub xi: Vector,
    pub alpha: KForm,
    pub phi: LinearMap,
    pub contact: CheckReport,
    pub sasakian: Checked<SasakianStructure>,
}

impl SasakianDoubleExtension {
    pub fn report(&self) -> CheckReport {
        let mut r = CheckReport::new();
        r.extend_prefixed("contact: ", &self.contact);
        r.extend_prefixed("", &self.sasakian.report);
        r
    }
}

struct Setup {
    ext: ExtensionResult,
    m: usize,
    alpha: KForm,
    xi: Vector,
    params: SasakianDoubleParams,
    contact: CheckReport,
    phi: LinearMap,
}

fn setup(g: &LieAlgebra, s: &SasakianStructure, theta: &KForm, d: &LinearMap, c: &Scalar) -> Result<Setup> {
    let m = g.dim();
    ensure_dim(m, theta.dim())?;
    ensure_dim(m + 1, d.dim())?;
    let ext = double_extension(g, theta, d)?;
    let big = &ext.algebra;
    let mut alpha = s.alpha.pad(2);
    alpha.set(&[m], one());

    let mut pre = CheckReport::new();
    let adz = alpha.apply(&d.column(m).pad(1));
    pre.record("α(D(z)) ≠ 0", adz.is_zero().then(|| Witness::new(vec![m], vec![adz.clone()]).with_note("α(D(z))")));
    if !pre.passed() {
        return Err(Error::precondition("Sasakian double extension", pre));
    }
    let contact = check_contact(big, &alpha)?;
    let xi = match &contact.structure {
        Some(cs) => cs.xi.clone(),
        None => return Err(Error::precondition("Sasakian double extension", contact.report)),
    };
    let mut contact_report = contact.report.clone();
    let slot = xi.0[m + 1].clone();
    contact_report.record(
        "Reeb vector has no derivation component",
        (!slot.is_zero()).then(|| Witness::new((0..m + 2).collect(), xi.0.clone()).with_note("solved Reeb vector")),
    );
    if !contact_report.passed() {
        return Err(Error::precondition("Sasakian double extension", contact_report));
    }

    let x = Vector(xi.0[..m].to_vec());
    let b = xi.0[m].clone();
    let a = s.alpha.apply(&x);
    let u = &x - &s.xi.scale(&a);
    let params = SasakianDoubleParams { a, b, c: c.clone(), d: -c.clone(), u };
    let valid = params.validate();
    if !valid.passed() {
        return Err(Error::precondition("Sasakian double extension", valid));
    }

    let phi = build_phi(m, s, &params);
    Ok(Setup { ext, m, alpha, xi, params, contact: contact_report, phi })
}

/// `Φ` on `g(θ, D)`: `Φ̄` on `Ker ᾱ`, `Φ(w) = D`, `Φ(D) = −w`, `Φ(ξ) = 0`.
fn build_phi(m: usize, s: &SasakianStructure, p: &SasakianDoubleParams) -> LinearMap {
    let n = m + 2;
    let delta = p.delta();
    let e_d = Vector::basis(n, m + 1);
    let phi_u = s.phi.apply(&p.u).pad(2);
    let phi_xibar = (&e_d.scale(&p.b) + &phi_u.scale(&p.d)).scale(&(-one() / &delta));
    let phi_z = (&e_d.scale(&p.a) + &phi_u.scale(&p.c)).scale(&(one() / &delta));
    let abar = s.alpha.covector();
    let mut cols: Vec<Vector> = (0..m).map(|i| &s.phi.column(i).pad(2) + &phi_xibar.scale(&abar[i])).collect();
    cols.push(phi_z);
    let w = &s.xi.pad(2).scale(&p.c) + &Vector::basis(n, m).scale(&p.d);
    cols.push(-&w);
    LinearMap::from_columns(&cols).expect("square")
}

/// Builds `(ξ, α = ᾱ + z*, Φ)` on the double extension and checks the Sasakian axioms.
pub fn sasakian_double_extension(
    g: &LieAlgebra,
    s: &SasakianStructure,
    theta: &KForm,
    d: &LinearMap,
    c: &Scalar,
) -> Result<SasakianDoubleExtension> {
    let st = setup(g, s, theta, d, c)?;
    let sasakian = check_sasakian(&st.ext.algebra, &st.xi, &st.alpha, &st.phi)?;
    Ok(SasakianDoubleExtension {
        extension: st.ext,
        params: st.params,
        xi: st.xi,
        alpha: st.alpha,
        phi: st.phi,
        contact: st.contact,
        sasakian,
    })
}

/// The five conditions, each evaluated independently.
pub fn sasakian_double_conditions(
    g: &LieAlgebra,
    s: &SasakianStructure,
    theta: &KForm,
    d: &LinearMap,
    c: &Scalar,
) -> Result<CheckReport> {
    let st = setup(g, s, theta, d, c)?;
    let m = st.m;
    let phi = &st.phi;
    let p = &st.params;
    let (_, ker) = kernel_basis(&s.alpha.covector()).ok_or_else(|| Error::Invalid("ᾱ vanishes".into()))?;
    let lift = |v: &Vector| v.pad(2);
    let dmap = |v: &Vector| d.apply(&v.pad(1)).pad(1);
    let mut report = CheckReport::new();

    let mut w1 = None;
    'c1: for (i, x) in ker.iter().enumerate() {
        for (j, y) in ker.iter().enumerate().skip(i + 1) {
            let v = theta.pair(&s.phi.apply(x), y) + theta.pair(x, &s.phi.apply(y));
            if !v.is_zero() {
                w1 = Some(Witness::new(vec![i, j], vec![v]).with_note("θ(Φ̄x,y) + θ(x,Φ̄y) on the Ker ᾱ basis"));
                break 'c1;
            }
        }
    }
    report.record("θ(Φ̄x,y) + θ(x,Φ̄y) = 0 on Ker ᾱ", w1);

    let rad = radical(theta);
    let w2 = [(&p.u, "u"), (&s.xi, "ξ̄")].into_iter().find_map(|(v, name)| {
        (!rad.contains(v)).then(|| {
            let vals: Vec<_> = (0..m).map(|k| theta.pair(v, &Vector::basis(m, k))).collect();
            Witness::new((0..m).collect(), vals).with_note(format!("θ({name}, e_k)"))
        })
    });
    report.record("u, ξ̄ ∈ Rad(θ)", w2);

    let w3 = ker.iter().enumerate().find_map(|(i, x)| {
        let lhs = dmap(&s.phi.apply(x));
        let rhs = phi.apply(&dmap(x));
        residual(vec![i], &(&lhs - &rhs), "D(Φ̄x) − Φ(Dx) for the Ker ᾱ basis vector")
    });
    report.record("D∘Φ̄ = Φ∘D on Ker ᾱ", w3);

    let w4 = ker.iter().enumerate().find_map(|(i, x)| {
        let lhs = g.bracket(&p.u, x);
        let rhs = -&s.phi.apply(&g.bracket(&p.u, &s.phi.apply(x)));
        residual(vec![i], &(&lhs - &rhs), "ad(u)x + Φ̄(ad(u)Φ̄x) for the Ker ᾱ basis vector")
    });
    report.record("ad(u) = −Φ̄∘ad(u)∘Φ̄ on Ker ᾱ", w4);

    let xi_u = lift(&g.bracket(&s.xi, &p.u));
    let d_xi = d.apply(&Vector(st.xi.0[..m + 1].to_vec())).pad(1);
    let five_a = &xi_u.scale(&p.c) + &phi.apply(&d_xi);
    let five_b = &(-&d_xi) + &phi.apply(&xi_u).scale(&p.c);
    let w5 = residual(vec![], &five_a, "c[ξ̄,u] + Φ(D(ξ))")
        .or_else(|| residual(vec![], &five_b, "−D(ξ) + cΦ([ξ̄,u]), the equivalent form"));
    report.record("c[ξ̄,u] + Φ(D(ξ)) = 0", w5);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::{frac, int};

    fn h3s() -> SasakianStructure {
        SasakianStructure::verified(
            &catalog::h3(),
            &Vector::basis(3, 2),
            &KForm::dual(3, 2),
            &catalog::h3_sasakian_phi(),
        )
        .unwrap()
    }

    #[test]
    fn standard_instance_agrees_with_direct_check() {
        let d = LinearMap::diag(&[frac(1, 2), frac(1, 2), int(1), int(2)]);
        let theta = KForm::zero(3, 2);
        let built = sasakian_double_extension(&catalog::h3(), &h3s(), &theta, &d, &int(1)).unwrap();
        let conds = sasakian_double_conditions(&catalog::h3(), &h3s(), &theta, &d, &int(1)).unwrap();
        assert_eq!(conds.items.len(), 5);
        assert!(conds.verdict("θ(Φ̄x,y) + θ(x,Φ̄y) = 0 on Ker ᾱ"));
        assert!(conds.verdict("u, ξ̄ ∈ Rad(θ)"));
        assert_eq!(conds.passed(), built.sasakian.passed(), "{conds:?}\n{:?}", built.sasakian.report);
        assert_eq!(built.params.a + built.params.b.clone(), int(1));
    }

    #[test]
    fn equal_weights_are_not_contact() {
        // α∧(dα)² is proportional to p4 − (p1 + p2) for D = diag(p1, p2, p1 + p2, p4).
        let d = LinearMap::diag(&[frac(1, 2), frac(1, 2), int(1), int(1)]);
        let err = sasakian_double_extension(&catalog::h3(), &h3s(), &KForm::zero(3, 2), &d, &int(1)).unwrap_err();
        assert!(!err.report().unwrap().verdict("α∧(dα)^m ≠ 0"));
    }

    #[test]
    fn contact_precondition() {
        let d = LinearMap::diag(&[int(0), int(0), int(0), int(0)]);
        let err = sasakian_double_extension(&catalog::h3(), &h3s(), &KForm::zero(3, 2), &d, &int(1)).unwrap_err();
        assert!(!err.report().unwrap().verdict("α(D(z)) ≠ 0"));
    }

    #[test]
    fn zero_delta_is_rejected() {
        let d = LinearMap::diag(&[frac(1, 2), frac(1, 2), int(1), int(2)]);
        let err = sasakian_double_extension(&catalog::h3(), &h3s(), &KForm::zero(3, 2), &d, &int(0)).unwrap_err();
        assert!(!err.report().unwrap().verdict("δ = ad − bc ≠ 0"));
    }
}
