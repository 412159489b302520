//! Passing between Frobenius-Kähler algebras and Sasakian algebras by
//! adjoining a derivation, and back by restricting to a contact ideal.

use num_traits::Zero;

use crate::algebra::{LieAlgebra, LinearMap, Vector};
use crate::error::{ensure_dim, Error, Result};
use crate::extensions::{derivation_extension, ExtensionResult};
use crate::forms::{ce_differential, KForm};
use crate::report::{CheckReport, Witness};
use crate::scalar::one;

use super::{
    check_contact, check_frobenius, check_kahler, check_sasakian, kahler_to_sasakian_central, kernel_basis, residual,
    Checked, FrobeniusStructure, KahlerStructure, SasakianStructure,
};

fn covector_witness(values: Vec<crate::scalar::Scalar>, note: &str) -> Option<Witness> {
    (!values.iter().all(Zero::is_zero)).then(|| Witness::new((0..values.len()).collect(), values).with_note(note))
}

/// Adjoins `ξ` with `ad(ξ)|g = D` and sets `ᾱ = φ + ξ*`,
/// `Φ(x) = J(x) − ᾱ(Jx) ξ` on `g`, `Φ(ξ) = 0`.
pub fn fk_to_sasakian(
    g: &LieAlgebra,
    f: &FrobeniusStructure,
    k: &KahlerStructure,
    d: &LinearMap,
) -> Result<(ExtensionResult, Checked<SasakianStructure>)> {
    let n = g.dim();
    ensure_dim(n, f.phi.dim())?;
    ensure_dim(n, k.j.dim())?;
    ensure_dim(n, d.dim())?;
    let mut pre = CheckReport::new();
    let diff = k.omega.add(&ce_differential(g, &f.phi));
    pre.record(
        "ω = −dφ",
        diff.terms().next().map(|(idx, v)| Witness::new(idx.clone(), vec![v.clone()]).with_note("ω + dφ")),
    );
    pre.extend_prefixed("", &g.is_derivation(d));
    let phi_d: Vec<_> = (0..n).map(|j| f.phi.apply(&d.column(j))).collect();
    pre.record("φ∘D = 0", covector_witness(phi_d, "φ(D e_j)"));
    let comm = d.commutator(&k.j);
    pre.record("D∘J = J∘D", (0..n).find_map(|c| residual(vec![c], &comm.column(c), "[D, J] e_j")));
    if !pre.passed() {
        return Err(Error::precondition("Frobenius-Kähler to Sasakian", pre));
    }
    let ext = derivation_extension(g, d)?;
    let xi = Vector::basis(n + 1, n);
    let mut alpha = f.phi.pad(1);
    alpha.set(&[n], one());
    let mut cols: Vec<Vector> = (0..n)
        .map(|i| {
            let jx = k.j.column(i);
            let mut v = jx.pad(1);
            v.0[n] = -f.phi.apply(&jx);
            v
        })
        .collect();
    cols.push(Vector::zero(n + 1));
    let phi = LinearMap::from_columns(&cols)?;
    let s = check_sasakian(&ext.algebra, &xi, &alpha, &phi)?;
    Ok((ext, s))
}

/// Output of adjoining a principal derivation to a Sasakian algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FkExtension {
    pub extension: ExtensionResult,
    pub phi: KForm,
    pub j: LinearMap,
    pub omega: KForm,
    pub frobenius: Checked<FrobeniusStructure>,
    pub kahler: Checked<KahlerStructure>,
    /// The principal element of the output equals the adjoined element.
    pub principal_matches: bool,
}

impl FkExtension {
    pub fn report(&self) -> CheckReport {
        let mut r = CheckReport::new();
        r.extend_prefixed("Frobenius: ", &self.frobenius.report);
        r.extend_prefixed("Kähler: ", &self.kahler.report);
        let w = (!self.principal_matches).then(|| Witness::new(vec![], vec![]).with_note("principal element differs"));
        r.record("principal element = adjoined element", w);
        r
    }
}

/// Adjoins `x_P` with `ad(x_P)|g = D` and sets `J(x) = Φ(x) − α(x) x_P`
/// on `g`, `J(x_P) = ξ`, `ω = −dα` with `α` extended by zero.
pub fn sasakian_to_fk(g: &LieAlgebra, s: &SasakianStructure, d: &LinearMap) -> Result<FkExtension> {
    let n = g.dim();
    ensure_dim(n, d.dim())?;
    let mut pre = CheckReport::new();
    pre.extend_prefixed("", &g.is_derivation(d));
    let a = s.alpha.covector();
    let diff: Vec<_> = (0..n).map(|j| s.alpha.apply(&d.column(j)) - &a[j]).collect();
    pre.record("α∘D = α", covector_witness(diff, "α(D e_j) − α(e_j)"));
    let (_, ker) = kernel_basis(&a).ok_or_else(|| Error::Invalid("α vanishes".into()))?;
    let comm = s.phi.commutator(d);
    pre.record(
        "[Φ, D] = 0 on Ker α",
        ker.iter().enumerate().find_map(|(i, x)| residual(vec![i], &comm.apply(x), "[Φ, D] on the Ker α basis")),
    );
    if !pre.passed() {
        return Err(Error::precondition("Sasakian to Frobenius-Kähler", pre));
    }
    let ext = derivation_extension(g, d)?;
    let xp = Vector::basis(n + 1, n);
    // α + x_P* and the zero lift of α share the Kirillov form (the derived
    // algebra lies in g); only the latter has x_P as principal element.
    let phi = s.alpha.pad(1);
    let mut cols: Vec<Vector> = (0..n)
        .map(|i| {
            let mut v = s.phi.column(i).pad(1);
            v.0[n] = -a[i].clone();
            v
        })
        .collect();
    cols.push(s.xi.pad(1));
    let j = LinearMap::from_columns(&cols)?;
    let omega = ce_differential(&ext.algebra, &phi).neg();
    let frobenius = check_frobenius(&ext.algebra, &phi)?;
    let kahler = check_kahler(&ext.algebra, &j, &omega)?;
    let principal_matches = frobenius.structure.as_ref().is_some_and(|f| f.principal == xp);
    Ok(FkExtension { extension: ext, phi, j, omega, frobenius, kahler, principal_matches })
}

/// Central extension by `ω` followed by adjoining `D` on `g ⊕ ⟨ξ⟩`.
pub fn fk_double_extension(g: &LieAlgebra, k: &KahlerStructure, d: &LinearMap) -> Result<FkExtension> {
    let (_, s) = kahler_to_sasakian_central(g, k)?;
    let ext = crate::extensions::central_extension(g, &k.omega)?;
    let s = s.structure.ok_or_else(|| Error::Invalid("central extension is not Sasakian".into()))?;
    let mut out = sasakian_to_fk(&ext.algebra, &s, d)?;
    out.extension.central = ext.central;
    Ok(out)
}

/// The codimension-one ideal complementary to the principal element, with
/// the induced almost contact data and both forms of the Sasakian criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactIdeal {
    /// Basis index of `g` dropped to form the ideal.
    pub dropped: usize,
    pub algebra: LieAlgebra,
    pub xi: Vector,
    pub alpha: KForm,
    pub phi: LinearMap,
    pub criteria: CheckReport,
    pub sasakian: Checked<SasakianStructure>,
}

impl ContactIdeal {
    /// Verdict of `[ad(ξ), Φ] = 0` on the ideal.
    pub fn reeb_criterion(&self) -> bool {
        self.criteria.verdict("[ad(ξ), Φ] = 0 on h")
    }

    /// Verdict of `[ad(x_P), Φ] = 0` on `Ker ᾱ`.
    pub fn principal_criterion(&self) -> bool {
        self.criteria.verdict("[ad(x_P), Φ] = 0 on Ker ᾱ")
    }
}

pub fn contact_ideal_restriction(g: &LieAlgebra, f: &FrobeniusStructure, k: &KahlerStructure) -> Result<ContactIdeal> {
    let n = g.dim();
    let mut pre = CheckReport::new();
    let fro = check_frobenius(g, &f.phi)?;
    pre.extend_prefixed("Frobenius: ", &fro.report);
    let kah = check_kahler(g, &k.j, &k.omega)?;
    pre.extend_prefixed("Kähler: ", &kah.report);
    let diff = k.omega.add(&ce_differential(g, &f.phi));
    pre.record(
        "ω = −dφ",
        diff.terms().next().map(|(idx, v)| Witness::new(idx.clone(), vec![v.clone()]).with_note("ω + dφ")),
    );
    if !pre.passed() {
        return Err(Error::precondition("contact ideal restriction", pre));
    }
    let xp = fro.structure.expect("passed").principal;

    let mut found = None;
    for p in xp.support() {
        let keep: Vec<usize> = (0..n).filter(|&i| i != p).collect();
        if let Ok(h) = g.restrict(&keep) {
            if (0..n).all(|i| keep.iter().all(|&j| g.basis_bracket(i, j).0[p].is_zero())) {
                found = Some((p, keep, h));
                break;
            }
        }
    }
    let (p, keep, h) =
        found.ok_or_else(|| Error::Invalid("no coordinate hyperplane complementary to x_P is an ideal".into()))?;
    let m = n - 1;
    let embed = |v: &Vector| {
        let mut out = Vector::zero(n);
        for (a, &i) in keep.iter().enumerate() {
            out.0[i] = v.0[a].clone();
        }
        out
    };
    let restrict = |v: &Vector| Vector(keep.iter().map(|&i| v.0[i].clone()).collect());

    let alpha = f.phi.restrict(&keep);
    let contact = check_contact(&h, &alpha)?;
    let xi = match contact.structure {
        Some(c) => c.xi,
        None => return Err(Error::precondition("contact ideal restriction", contact.report)),
    };
    let mut criteria = CheckReport::new();
    // Φ = projection of J onto Ker ᾱ along span{ξ, x_P}, and Φ(ξ) = 0.
    let mut leak = None;
    let project = |v: &Vector| -> (Vector, crate::scalar::Scalar, crate::scalar::Scalar) {
        let jv = k.j.apply(&embed(v));
        let s = &jv.0[p] / &xp.0[p];
        let r = restrict(&(&jv - &xp.scale(&s)));
        let t = alpha.apply(&r);
        (&r - &xi.scale(&t), s, t)
    };
    let cols: Vec<Vector> = (0..m)
        .map(|i| {
            let ei = Vector::basis(m, i);
            let x = &ei - &xi.scale(&alpha.apply(&ei));
            let (y, s, t) = project(&x);
            if leak.is_none() && !(s.is_zero() && t.is_zero()) {
                leak =
                    Some(Witness::new(vec![keep[i]], vec![s, t]).with_note("x_P and ξ components of J(e_i − ᾱ(e_i)ξ)"));
            }
            y
        })
        .collect();
    criteria.record("J preserves Ker ᾱ", leak);
    let phi = LinearMap::from_columns(&cols)?;

    let ad_xi = h.adjoint(&xi);
    let comm = ad_xi.commutator(&phi);
    criteria
        .record("[ad(ξ), Φ] = 0 on h", (0..m).find_map(|c| residual(vec![keep[c]], &comm.column(c), "[ad(ξ), Φ] e_i")));
    let ad_xp = LinearMap::from_columns(
        &(0..m).map(|c| restrict(&g.bracket(&xp, &embed(&Vector::basis(m, c))))).collect::<Vec<_>>(),
    )?;
    let comm_p = ad_xp.commutator(&phi);
    let (_, ker) = kernel_basis(&alpha.covector()).ok_or_else(|| Error::Invalid("ᾱ vanishes on h".into()))?;
    criteria.record(
        "[ad(x_P), Φ] = 0 on Ker ᾱ",
        ker.iter()
            .enumerate()
            .find_map(|(i, x)| residual(vec![i], &comm_p.apply(x), "[ad(x_P), Φ] on the Ker ᾱ basis")),
    );
    let sasakian = check_sasakian(&h, &xi, &alpha, &phi)?;
    Ok(ContactIdeal { dropped: p, algebra: h, xi, alpha, phi, criteria, sasakian })
}
