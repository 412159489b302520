//! The `lieforge` command line.
//!
//! Every command prints one report document on standard output. Exit status
//! is 0 when the overall verdict is pass, 1 when it is fail (including failed
//! preconditions), and 2 for usage, parse and dimension errors.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{LieAlgebra, LinearMap, Vector};
use crate::catalog::{self, Builtin};
use crate::derivations::derivation_space;
use crate::error::{Error, Result};
use crate::extensions::{
    central_extension, central_extension_unchecked, derivation_extension, derivation_extension_unchecked,
    double_extension, is_cocycle, reversed_double_extension, ExtensionResult,
};
use crate::forms::{KForm, WedgeConvention};
use crate::io::{
    fmt_form, fmt_map, fmt_rows, fmt_vector, parse_algebra, parse_constraint, ReportDocument, StructureFile,
};
use crate::report::CheckReport;
use crate::scalar::{one, Scalar};
use crate::structures::{
    check_contact, check_frobenius, check_kahler, check_sasakian, contact_ideal_restriction, fk_to_sasakian,
    kahler_to_sasakian_central, kirillov_form, principal_element, reeb_vector, sasakian_double_conditions,
    sasakian_double_extension, sasakian_reduction, sasakian_to_fk, FrobeniusStructure, KahlerStructure,
    SasakianStructure,
};

#[derive(Debug, Parser)]
#[command(name = "lieforge", version, about = "Exact Lie algebra extensions and geometric structures")]
pub struct Cli {
    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,

    /// Sign convention for printed forms of degree ≥ 2. Verdicts never depend on it.
    #[arg(long = "wedge-convention", global = true, value_enum, default_value_t = Convention::Determinant)]
    pub wedge_convention: Convention,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    /// `(χ₁∧χ₂)(x₁,x₂) = −det[χ_a(x_b)]`.
    Paper,
    /// `(χ₁∧χ₂)(x₁,x₂) = det[χ_a(x_b)]`.
    Determinant,
}

impl From<Convention> for WedgeConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Paper => WedgeConvention::Interior,
            Convention::Determinant => WedgeConvention::Determinant,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify an identity or structure.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        #[command(flatten)]
        input: Inputs,
    },
    /// Build a central, derivation, double or reversed double extension.
    Extend {
        #[arg(value_enum)]
        kind: ExtendKind,
        #[command(flatten)]
        input: Inputs,
        /// Skip the precondition check; the output may violate Jacobi.
        #[arg(long)]
        force: bool,
    },
    /// Build a structure on a related algebra and re-verify it.
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        #[command(flatten)]
        input: Inputs,
    },
    /// Solve for derivations, a Reeb vector or a principal element.
    Solve {
        #[arg(value_enum)]
        kind: SolveKind,
        #[command(flatten)]
        input: Inputs,
        /// Constraint such as `alpha∘D=alpha:e3`, `D∘J=J∘D:J`, `D(e1)=e1` or `diagonal`.
        #[arg(long, allow_hyphen_values = true)]
        fix: Vec<String>,
    },
    /// Print a built-in algebra with its canonical structures.
    Builtin { name: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Jacobi,
    Cocycle,
    Derivation,
    Contact,
    Frobenius,
    Kahler,
    Sasakian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExtendKind {
    Central,
    Derivation,
    Double,
    Reversed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    FkToSasakian,
    SasakianToFk,
    KahlerToSasakian,
    SasakianReduction,
    SasakianDouble,
    ContactIdeal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveKind {
    Derivations,
    Reeb,
    Principal,
}

/// Where the algebra and its data come from. Flags override structure files,
/// which override the canonical data of a built-in.
#[derive(Debug, Clone, Default, Args)]
pub struct Inputs {
    /// Built-in algebra: h3, d4half, g0 or g5.
    #[arg(long)]
    pub builtin: Option<String>,
    /// Algebra document.
    #[arg(long)]
    pub algebra: Option<PathBuf>,
    /// Structure document; may be repeated.
    #[arg(long)]
    pub structure: Vec<PathBuf>,
    /// 1-form (α, φ).
    #[arg(long, allow_hyphen_values = true)]
    pub form: Option<String>,
    /// 2-form (θ, ω).
    #[arg(long = "two-form", allow_hyphen_values = true)]
    pub two_form: Option<String>,
    /// Linear map D, e.g. `diag:1/2,1/2,1` or a built-in map name.
    #[arg(long, allow_hyphen_values = true)]
    pub map: Option<String>,
    /// Reeb vector ξ.
    #[arg(long, allow_hyphen_values = true)]
    pub xi: Option<String>,
    /// Endomorphism Φ.
    #[arg(long, allow_hyphen_values = true)]
    pub phi: Option<String>,
    /// Complex structure J.
    #[arg(long = "j", allow_hyphen_values = true)]
    pub j: Option<String>,
    /// Image D(z) of the central element, when `--map` is given on the base.
    #[arg(long, allow_hyphen_values = true)]
    pub dz: Option<String>,
    /// Scale c of w = cξ̄ − cz.
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let conv = WedgeConvention::from(cli.wedge_convention);
    match dispatch(&cli.command, conv) {
        Ok(doc) => {
            let stdout = match cli.output {
                OutputFormat::Text => doc.to_text(),
                OutputFormat::Json => doc.to_json(),
            };
            Outcome { code: if doc.passed() { 0 } else { 1 }, stdout, stderr: String::new() }
        }
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn dispatch(command: &Command, conv: WedgeConvention) -> Result<ReportDocument> {
    match command {
        Command::Check { kind, input } => {
            let ctx = Context::load(input)?;
            let name = format!("check {}", kind_name(*kind));
            guarded(name.clone(), &ctx, |doc| check(*kind, &ctx, doc, conv))
        }
        Command::Extend { kind, input, force } => {
            let ctx = Context::load(input)?;
            let name = format!("extend {}", kind_name(*kind));
            guarded(name, &ctx, |doc| extend(*kind, &ctx, *force, doc, conv))
        }
        Command::Construct { kind, input } => {
            let ctx = Context::load(input)?;
            let name = format!("construct {}", kind_name(*kind));
            guarded(name, &ctx, |doc| construct(*kind, &ctx, doc, conv))
        }
        Command::Solve { kind, input, fix } => {
            let ctx = Context::load(input)?;
            let name = format!("solve {}", kind_name(*kind));
            guarded(name, &ctx, |doc| solve(*kind, &ctx, fix, doc, conv))
        }
        Command::Builtin { name } => builtin_doc(name, conv),
    }
}

fn kind_name<K: ValueEnum>(kind: K) -> String {
    kind.to_possible_value().expect("no skipped variants").get_name().to_string()
}

/// Runs `body`, turning a failed library precondition into a failing report.
fn guarded(
    command: String,
    ctx: &Context,
    body: impl FnOnce(&mut ReportDocument) -> Result<()>,
) -> Result<ReportDocument> {
    let mut doc = ReportDocument::new(command);
    match body(&mut doc) {
        Ok(()) => Ok(doc),
        Err(Error::Precondition { op, report }) => {
            doc.add_report(format!("precondition: {op}"), &report, ctx.g.labels());
            Ok(doc)
        }
        Err(e) => Err(e),
    }
}

/// The loaded algebra plus every value supplied for it.
struct Context {
    g: LieAlgebra,
    builtin: Option<Builtin>,
    values: StructureFile,
}

impl Context {
    fn load(input: &Inputs) -> Result<Self> {
        let (g, builtin) = match (&input.builtin, &input.algebra) {
            (Some(_), Some(_)) => return Err(Error::Invalid("give either --builtin or --algebra, not both".into())),
            (Some(name), None) => {
                let b = catalog::builtin(name).ok_or_else(|| unknown_builtin(name))?;
                (b.algebra.clone(), Some(b))
            }
            (None, Some(path)) => (parse_algebra(&read(path)?)?, None),
            (None, None) => {
                return Err(Error::Invalid("an algebra is required: --builtin NAME or --algebra FILE".into()))
            }
        };
        let mut values = StructureFile::default();
        for path in &input.structure {
            values.merge(StructureFile::parse(&read(path)?)?);
        }
        let flags = [
            ("form", &input.form),
            ("two_form", &input.two_form),
            ("map", &input.map),
            ("xi", &input.xi),
            ("phi", &input.phi),
            ("J", &input.j),
            ("dz", &input.dz),
            ("c", &input.c),
        ];
        for (key, value) in flags {
            if let Some(v) = value {
                values.set(key, v);
            }
        }
        Ok(Self { g, builtin, values })
    }

    fn n(&self) -> usize {
        self.g.dim()
    }

    fn labels(&self) -> &[String] {
        self.g.labels()
    }

    fn named(&self) -> Vec<(&str, LinearMap)> {
        self.builtin.as_ref().map(|b| b.maps.iter().map(|(k, m)| (*k, m.clone())).collect()).unwrap_or_default()
    }

    fn first<T>(&self, keys: &[&str], get: impl Fn(&str) -> Result<Option<T>>) -> Result<Option<T>> {
        for key in keys {
            if let Some(v) = get(key)? {
                return Ok(Some(v));
            }
        }
        Ok(None)
    }

    fn one_form(&self, keys: &[&str]) -> Result<Option<KForm>> {
        self.first(keys, |k| self.values.one_form(k, self.labels()))
    }

    fn two_form(&self, keys: &[&str]) -> Result<Option<KForm>> {
        self.first(keys, |k| self.values.two_form(k, self.labels()))
    }

    fn map(&self, keys: &[&str]) -> Result<Option<LinearMap>> {
        let named = self.named();
        self.first(keys, |k| self.values.map(k, self.n(), &named))
    }

    fn required_map(&self) -> Result<LinearMap> {
        self.map(&["map"])?.ok_or_else(|| missing("--map"))
    }

    fn required_theta(&self) -> Result<KForm> {
        self.two_form(&["two_form", "theta"])?.ok_or_else(|| missing("--two-form"))
    }

    fn scalar_c(&self) -> Result<Scalar> {
        Ok(self.values.scalar("c")?.unwrap_or_else(one))
    }

    /// `(ξ, α, Φ)` from flags, files, or the built-in's Sasakian data.
    fn sasakian_data(&self) -> Result<(Vector, KForm, LinearMap)> {
        let canon = self.builtin.as_ref().and_then(|b| b.sasakian.clone());
        let xi = self.values.vector("xi", self.labels())?.or_else(|| canon.as_ref().map(|s| s.xi.clone()));
        let alpha = self.one_form(&["form", "alpha"])?.or_else(|| canon.as_ref().map(|s| s.alpha.clone()));
        let phi = self.map(&["phi"])?.or_else(|| canon.as_ref().map(|s| s.phi.clone()));
        Ok((
            xi.ok_or_else(|| missing("--xi"))?,
            alpha.ok_or_else(|| missing("--form"))?,
            phi.ok_or_else(|| missing("--phi"))?,
        ))
    }

    fn sasakian(&self) -> Result<SasakianStructure> {
        let (xi, alpha, phi) = self.sasakian_data()?;
        SasakianStructure::verified(&self.g, &xi, &alpha, &phi)
    }

    /// `φ` from flags, files, or the built-in's Frobenius-Kähler data.
    fn frobenius_form(&self) -> Result<KForm> {
        let canon = self.builtin.as_ref().and_then(|b| b.frobenius_kahler.as_ref().map(|f| f.phi.clone()));
        self.one_form(&["form", "alpha"])?.or(canon).ok_or_else(|| missing("--form"))
    }

    fn contact_form(&self) -> Result<KForm> {
        let canon = self.builtin.as_ref().and_then(|b| b.sasakian.as_ref().map(|s| s.alpha.clone()));
        self.one_form(&["form", "alpha"])?.or(canon).ok_or_else(|| missing("--form"))
    }

    /// `(J, ω)` from flags, files, or the built-in's Frobenius-Kähler data.
    fn kahler_data(&self) -> Result<(LinearMap, KForm)> {
        let canon = self.builtin.as_ref().and_then(|b| b.frobenius_kahler.clone());
        let j = self.map(&["J"])?.or_else(|| canon.as_ref().map(|f| f.j.clone()));
        let omega = self.two_form(&["two_form", "omega"])?.or_else(|| canon.as_ref().map(|f| f.omega.clone()));
        Ok((j.ok_or_else(|| missing("--j"))?, omega.ok_or_else(|| missing("--two-form"))?))
    }

    fn kahler(&self) -> Result<KahlerStructure> {
        let (j, omega) = self.kahler_data()?;
        let c = check_kahler(&self.g, &j, &omega)?;
        c.structure.ok_or_else(|| Error::precondition("Kähler structure", c.report))
    }

    fn frobenius(&self) -> Result<FrobeniusStructure> {
        let c = check_frobenius(&self.g, &self.frobenius_form()?)?;
        c.structure.ok_or_else(|| Error::precondition("Frobenius structure", c.report))
    }

    /// `D` on `g_θ`: either given on `g_θ` directly, or on `g` with `--dz`.
    fn map_on_central(&self, theta: &KForm) -> Result<LinearMap> {
        let central = central_extension_unchecked(&self.g, theta)?;
        let labels = central.algebra.labels();
        let named = self.named();
        if let Some(dz) = self.values.vector("dz", labels)? {
            let base = self.values.map("map", self.n(), &named)?.ok_or_else(|| missing("--map"))?;
            return crate::extensions::assemble_on_central(&base, &dz);
        }
        match self.values.map("map", self.n() + 1, &named) {
            Ok(Some(m)) => Ok(m),
            Ok(None) => Err(missing("--map")),
            Err(full) => match self.values.map("map", self.n(), &named) {
                Ok(Some(m)) => crate::extensions::assemble_on_central(&m, &Vector::zero(self.n() + 1)),
                _ => Err(full),
            },
        }
    }
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn missing(flag: &str) -> Error {
    Error::Invalid(format!("missing {flag}"))
}

fn unknown_builtin(name: &str) -> Error {
    Error::Invalid(format!("unknown built-in {name:?}; valid names: {}", catalog::NAMES.join(", ")))
}

fn add_extension(doc: &mut ReportDocument, ext: &ExtensionResult) {
    let labels = ext.algebra.labels();
    if let Some(z) = ext.central {
        doc.add_value("central", labels[z].clone());
    }
    if let Some(d) = ext.derivation {
        doc.add_value("derivation", labels[d].clone());
    }
    let emb: Vec<String> = ext.embedding.iter().map(|&i| labels[i].clone()).collect();
    doc.add_value("embedding", emb.join(" "));
    doc.set_algebra(&ext.algebra);
}

fn add_sasakian(doc: &mut ReportDocument, s: &SasakianStructure, labels: &[String], conv: WedgeConvention) {
    doc.add_value("xi", fmt_vector(&s.xi, labels));
    doc.add_value("alpha", fmt_form(&s.alpha, labels, conv));
    doc.add_value("phi", fmt_map(&s.phi));
    doc.add_value("metric", fmt_rows(&s.metric));
}

fn check(kind: CheckKind, ctx: &Context, doc: &mut ReportDocument, conv: WedgeConvention) -> Result<()> {
    let g = &ctx.g;
    let labels = ctx.labels();
    match kind {
        CheckKind::Jacobi => doc.add_report("jacobi", &g.check_jacobi(), labels),
        CheckKind::Cocycle => doc.add_report("cocycle", &is_cocycle(g, &ctx.required_theta()?)?, labels),
        CheckKind::Derivation => doc.add_report("derivation", &g.is_derivation(&ctx.required_map()?), labels),
        CheckKind::Contact => {
            let alpha = ctx.contact_form()?;
            let c = check_contact(g, &alpha)?;
            doc.add_report("contact", &c.report, labels);
            doc.add_value("alpha", fmt_form(&alpha, labels, conv));
            if let Some(s) = &c.structure {
                doc.add_value("reeb", fmt_vector(&s.xi, labels));
            }
        }
        CheckKind::Frobenius => {
            let phi = ctx.frobenius_form()?;
            let c = check_frobenius(g, &phi)?;
            doc.add_report("frobenius", &c.report, labels);
            doc.add_value("phi", fmt_form(&phi, labels, conv));
            doc.add_value("kirillov", fmt_form(&kirillov_form(g, &phi)?, labels, conv));
            if let Some(f) = &c.structure {
                doc.add_value("principal", fmt_vector(&f.principal, labels));
            }
        }
        CheckKind::Kahler => {
            let (j, omega) = ctx.kahler_data()?;
            let c = check_kahler(g, &j, &omega)?;
            doc.add_report("kahler", &c.report, labels);
            doc.add_value("J", fmt_map(&j));
            doc.add_value("omega", fmt_form(&omega, labels, conv));
            doc.add_value("metric", fmt_rows(&crate::structures::kahler_metric(&j, &omega)));
        }
        CheckKind::Sasakian => {
            let (xi, alpha, phi) = ctx.sasakian_data()?;
            let c = check_sasakian(g, &xi, &alpha, &phi)?;
            doc.add_report("sasakian", &c.report, labels);
            let s = SasakianStructure { metric: crate::structures::sasakian_metric(g, &alpha, &phi), xi, alpha, phi };
            add_sasakian(doc, &s, labels, conv);
        }
    }
    Ok(())
}

fn extend(kind: ExtendKind, ctx: &Context, force: bool, doc: &mut ReportDocument, conv: WedgeConvention) -> Result<()> {
    let g = &ctx.g;
    let labels = ctx.labels();
    let ext = match kind {
        ExtendKind::Central => {
            let theta = ctx.required_theta()?;
            if force {
                doc.add_report("cocycle", &is_cocycle(g, &theta)?, labels);
                central_extension_unchecked(g, &theta)?
            } else {
                central_extension(g, &theta)?
            }
        }
        ExtendKind::Derivation => {
            let d = ctx.required_map()?;
            if force {
                doc.add_report("derivation", &g.is_derivation(&d), labels);
                derivation_extension_unchecked(g, &d)?
            } else {
                derivation_extension(g, &d)?
            }
        }
        ExtendKind::Double => {
            let theta = ctx.required_theta()?;
            let d = ctx.map_on_central(&theta)?;
            if force {
                doc.add_report("cocycle", &is_cocycle(g, &theta)?, labels);
                let central = central_extension_unchecked(g, &theta)?;
                doc.add_report("derivation", &central.algebra.is_derivation(&d), central.algebra.labels());
                let top = derivation_extension_unchecked(&central.algebra, &d)?;
                ExtensionResult { algebra: top.algebra, derivation: top.derivation, ..central }
            } else {
                double_extension(g, &theta, &d)?
            }
        }
        ExtendKind::Reversed => {
            let alpha = ctx.one_form(&["form", "alpha"])?.ok_or_else(|| missing("--form"))?;
            let d = ctx.required_map()?;
            let ext = reversed_double_extension(g, &alpha, &d)?;
            let gd = derivation_extension(g, &d)?.algebra;
            let omega = crate::forms::ce_differential(&gd, &alpha.pad(1)).neg();
            doc.add_value("omega", fmt_form(&omega, gd.labels(), conv));
            ext
        }
    };
    doc.add_report("jacobi", &ext.algebra.check_jacobi(), ext.algebra.labels());
    add_extension(doc, &ext);
    Ok(())
}

fn construct(kind: ConstructKind, ctx: &Context, doc: &mut ReportDocument, conv: WedgeConvention) -> Result<()> {
    let g = &ctx.g;
    match kind {
        ConstructKind::FkToSasakian => {
            let (ext, s) = fk_to_sasakian(g, &ctx.frobenius()?, &ctx.kahler()?, &ctx.required_map()?)?;
            let labels = ext.algebra.labels().to_vec();
            doc.add_report("sasakian", &s.report, &labels);
            if let Some(s) = &s.structure {
                add_sasakian(doc, s, &labels, conv);
            }
            doc.add_value("center dimension", ext.algebra.center().dim().to_string());
            add_extension(doc, &ext);
        }
        ConstructKind::SasakianToFk => {
            let out = sasakian_to_fk(g, &ctx.sasakian()?, &ctx.required_map()?)?;
            let labels = out.extension.algebra.labels().to_vec();
            doc.add_report("frobenius-kahler", &out.report(), &labels);
            doc.add_value("phi", fmt_form(&out.phi, &labels, conv));
            doc.add_value("J", fmt_map(&out.j));
            doc.add_value("omega", fmt_form(&out.omega, &labels, conv));
            if let Some(f) = &out.frobenius.structure {
                doc.add_value("principal", fmt_vector(&f.principal, &labels));
            }
            if let Some(k) = &out.kahler.structure {
                doc.add_value("metric", fmt_rows(&k.metric));
            }
            add_extension(doc, &out.extension);
        }
        ConstructKind::KahlerToSasakian => {
            let (ext, s) = kahler_to_sasakian_central(g, &ctx.kahler()?)?;
            let labels = ext.algebra.labels().to_vec();
            doc.add_report("sasakian", &s.report, &labels);
            if let Some(s) = &s.structure {
                add_sasakian(doc, s, &labels, conv);
            }
            add_extension(doc, &ext);
        }
        ConstructKind::SasakianReduction => {
            let r = sasakian_reduction(g, &ctx.sasakian()?)?;
            let labels = r.algebra.labels().to_vec();
            doc.add_report("kahler", &r.kahler.report, &labels);
            let basis: Vec<String> = r.kernel_basis.iter().map(|v| fmt_vector(v, ctx.labels())).collect();
            doc.add_value("kernel basis", basis.join("; "));
            if let Some(k) = &r.kahler.structure {
                doc.add_value("J", fmt_map(&k.j));
                doc.add_value("omega", fmt_form(&k.omega, &labels, conv));
                doc.add_value("metric", fmt_rows(&k.metric));
            }
            doc.set_algebra(&r.algebra);
        }
        ConstructKind::SasakianDouble => {
            let s = ctx.sasakian()?;
            let theta = ctx.two_form(&["two_form", "theta"])?.unwrap_or_else(|| KForm::zero(ctx.n(), 2));
            let d = ctx.map_on_central(&theta)?;
            let c = ctx.scalar_c()?;
            let built = sasakian_double_extension(g, &s, &theta, &d, &c)?;
            let conds = sasakian_double_conditions(g, &s, &theta, &d, &c)?;
            let labels = built.extension.algebra.labels().to_vec();
            doc.add_report("contact", &built.contact, &labels);
            doc.add_report("sasakian", &built.sasakian.report, &labels);
            doc.add_report("conditions", &conds, ctx.labels());
            let supplied = supplied_params(ctx, &built.params)?;
            if !supplied.items.is_empty() {
                doc.add_report("supplied parameters", &supplied, ctx.labels());
            }
            let p = &built.params;
            for (name, v) in [("a", &p.a), ("b", &p.b), ("c", &p.c), ("d", &p.d)] {
                doc.add_value(name, v.to_string());
            }
            doc.add_value("delta", p.delta().to_string());
            doc.add_value("u", fmt_vector(&p.u, ctx.labels()));
            doc.add_value("xi", fmt_vector(&built.xi, &labels));
            doc.add_value("alpha", fmt_form(&built.alpha, &labels, conv));
            doc.add_value("phi", fmt_map(&built.phi));
            add_extension(doc, &built.extension);
        }
        ConstructKind::ContactIdeal => {
            let ci = contact_ideal_restriction(g, &ctx.frobenius()?, &ctx.kahler()?)?;
            let labels = ci.algebra.labels().to_vec();
            doc.add_report("criteria", &ci.criteria, &labels);
            doc.add_report("sasakian", &ci.sasakian.report, &labels);
            doc.add_value("dropped", ctx.labels()[ci.dropped].clone());
            doc.add_value("xi", fmt_vector(&ci.xi, &labels));
            doc.add_value("alpha", fmt_form(&ci.alpha, &labels, conv));
            doc.add_value("phi", fmt_map(&ci.phi));
            doc.set_algebra(&ci.algebra);
        }
    }
    Ok(())
}

/// Compares user-supplied `a`, `b`, `d`, `u` with the values solved from the Reeb vector.
fn supplied_params(ctx: &Context, solved: &crate::structures::SasakianDoubleParams) -> Result<CheckReport> {
    let mut r = CheckReport::new();
    for (key, value) in [("a", &solved.a), ("b", &solved.b), ("d", &solved.d)] {
        if let Some(v) = ctx.values.scalar(key)? {
            let w = (&v != value).then(|| {
                crate::report::Witness::new(vec![], vec![v.clone(), value.clone()]).with_note("supplied, solved")
            });
            r.record(format!("{key} matches the Reeb vector"), w);
        }
    }
    if let Some(u) = ctx.values.vector("u", ctx.labels())? {
        let diff = &u - &solved.u;
        let w = (!diff.is_zero()).then(|| {
            crate::report::Witness::new((0..ctx.n()).collect(), diff.0.clone()).with_note("supplied u − solved u")
        });
        r.record("u matches the Reeb vector", w);
    }
    Ok(r)
}

fn solve(
    kind: SolveKind,
    ctx: &Context,
    fix: &[String],
    doc: &mut ReportDocument,
    conv: WedgeConvention,
) -> Result<()> {
    let g = &ctx.g;
    let labels = ctx.labels();
    match kind {
        SolveKind::Derivations => {
            let named = ctx.named();
            let constraints =
                fix.iter().map(|f| parse_constraint(f, labels, &named, "--fix")).collect::<Result<Vec<_>>>()?;
            let space = derivation_space(g, &constraints)?;
            match &space.particular {
                Some(p) => {
                    doc.add_value("particular", fmt_map(p));
                    doc.add_value("dimension", space.dim().to_string());
                    for (i, h) in space.homogeneous.iter().enumerate() {
                        doc.add_value(format!("basis {}", i + 1), fmt_map(h));
                    }
                }
                None => {
                    doc.add_value("solution", "empty");
                    if let Some(c) = &space.conflict {
                        doc.add_value("conflict", c.clone());
                    }
                    doc.fail();
                }
            }
        }
        SolveKind::Reeb => {
            let alpha = ctx.contact_form()?;
            doc.add_value("alpha", fmt_form(&alpha, labels, conv));
            match reeb_vector(g, &alpha)? {
                Some(xi) => doc.add_value("reeb", fmt_vector(&xi, labels)),
                None => {
                    doc.add_value("reeb", "none");
                    doc.fail();
                }
            }
        }
        SolveKind::Principal => {
            let phi = ctx.frobenius_form()?;
            doc.add_value("phi", fmt_form(&phi, labels, conv));
            let x = principal_element(g, &phi)?;
            doc.add_value("principal", fmt_vector(&x, labels));
        }
    }
    Ok(())
}

fn builtin_doc(name: &str, conv: WedgeConvention) -> Result<ReportDocument> {
    let b = catalog::builtin(name).ok_or_else(|| unknown_builtin(name))?;
    let labels = b.algebra.labels();
    let mut doc = ReportDocument::new(format!("builtin {name}"));
    doc.add_report("jacobi", &b.algebra.check_jacobi(), labels);
    if let Some(s) = &b.sasakian {
        doc.add_value("xi", fmt_vector(&s.xi, labels));
        doc.add_value("alpha", fmt_form(&s.alpha, labels, conv));
        doc.add_value("phi", fmt_map(&s.phi));
    }
    if let Some(f) = &b.frobenius_kahler {
        doc.add_value("phi", fmt_form(&f.phi, labels, conv));
        doc.add_value("J", fmt_map(&f.j));
        doc.add_value("omega", fmt_form(&f.omega, labels, conv));
    }
    for (map_name, m) in &b.maps {
        doc.add_value(format!("map {map_name}"), fmt_map(m));
    }
    let center: Vec<String> = b.algebra.center().basis().iter().map(|v| fmt_vector(v, labels)).collect();
    doc.add_value("center", if center.is_empty() { "0".to_string() } else { center.join("; ") });
    doc.set_algebra(&b.algebra);
    Ok(doc)
}
