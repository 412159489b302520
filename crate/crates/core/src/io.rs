//! The `lieforge/1` text formats and the value syntax shared by files and
//! command-line flags.
//!
//! Algebra documents list brackets with 1-based indices and `i < j`:
//!
//! ```text
//! lieforge/1 algebra
//! dim 3
//! basis e1 e2 e3
//! bracket 1 2 3=1
//! ```
//!
//! Structure documents hold one value per line, `key value`, using the same
//! syntax as the flags:
//!
//! ```text
//! lieforge/1 structure
//! xi e3
//! alpha e3
//! phi rows:0,-1,0;1,0,0;0,0,0
//! ```
//!
//! Vectors and 1-forms are written `e3`, `e3 + e5`, `1/2*e1 - e2` or as a
//! coefficient list `0,0,1`. Two-forms are `e1^e2 - e3^e4`, index pairs
//! `1,2=1 3,4=-1`, or `0`. Maps are `diag:a,b,c`, `rows:r1;r2;…` (row `r`
//! holds the `e_r` coefficients of the images), `id`, `zero`, or the name of
//! a built-in map. Blank lines and `#` comments are ignored in documents.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{default_labels, LieAlgebra, LinearMap, Subspace, Vector};
use crate::derivations::Constraint;
use crate::error::{Error, Result};
use crate::forms::{KForm, WedgeConvention};
use crate::linalg;
use crate::report::{CheckReport, ReportDoc};
use crate::scalar::{parse_scalar, Scalar};

pub const FORMAT: &str = "lieforge/1";

fn perr(offset: usize, field: &str, message: impl Into<String>) -> Error {
    Error::Parse { offset, field: field.to_string(), message: message.into() }
}

/// Moves a parse error's offset by `base`.
fn shifted(err: Error, base: usize) -> Error {
    match err {
        Error::Parse { offset, field, message } => Error::Parse { offset: offset + base, field, message },
        other => other,
    }
}

fn scalar_at(text: &str, offset: usize, field: &str) -> Result<Scalar> {
    parse_scalar(text).ok_or_else(|| perr(offset, field, format!("not a rational number: {text:?}")))
}

/// Tokens separated by whitespace or commas, with their byte offsets.
fn list_tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        let sep = ch.is_whitespace() || ch == ',';
        match (sep, start) {
            (true, Some(s)) => {
                out.push((s, &text[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out
}

fn scalar_list(text: &str, n: usize, field: &str) -> Result<Vec<Scalar>> {
    let toks = list_tokens(text);
    if toks.len() != n {
        return Err(perr(0, field, format!("expected {n} entries, found {}", toks.len())));
    }
    toks.into_iter().map(|(o, t)| scalar_at(t, o, field)).collect()
}

/// One signed term `coef * body` of a linear combination.
struct Term<'a> {
    offset: usize,
    coef: Scalar,
    body: &'a str,
}

fn terms<'a>(text: &'a str, field: &str) -> Result<Vec<Term<'a>>> {
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut out = Vec::new();
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    while i < bytes.len() {
        let offset = i;
        let mut negative = false;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            negative = bytes[i] == b'-';
            i += 1;
            skip_ws(&mut i);
        } else if !out.is_empty() {
            return Err(perr(i, field, "expected '+' or '-' between terms"));
        }
        let cs = i;
        while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'/') {
            i += 1;
        }
        let mut coef = if cs == i { Scalar::one() } else { scalar_at(&text[cs..i], cs, field)? };
        skip_ws(&mut i);
        if i < bytes.len() && bytes[i] == b'*' {
            i += 1;
            skip_ws(&mut i);
        }
        let bs = i;
        while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            i += 1;
        }
        let body = text[bs..i].trim();
        if body.is_empty() && cs == bs {
            return Err(perr(offset, field, "expected a term"));
        }
        if negative {
            coef = -coef;
        }
        out.push(Term { offset: bs, coef, body });
    }
    if out.is_empty() {
        return Err(perr(0, field, "empty value"));
    }
    Ok(out)
}

fn label_index(labels: &[String], label: &str, offset: usize, field: &str) -> Result<usize> {
    labels
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| perr(offset, field, format!("unknown basis label {label:?} (basis: {})", labels.join(" "))))
}

fn is_numeric_list(text: &str) -> bool {
    text.chars().all(|c| c.is_ascii_digit() || "+-/, \t".contains(c))
}

/// A vector (or the coefficient list of a 1-form) on the basis `labels`.
pub fn parse_vector(text: &str, labels: &[String], field: &str) -> Result<Vector> {
    let n = labels.len();
    let t = text.trim();
    if t == "0" {
        return Ok(Vector::zero(n));
    }
    if is_numeric_list(t) && list_tokens(t).len() > 1 || n == 1 && is_numeric_list(t) {
        return Ok(Vector(scalar_list(text, n, field)?));
    }
    let mut v = Vector::zero(n);
    for term in terms(text, field)? {
        if term.body.is_empty() {
            return Err(perr(term.offset, field, "constant term in a vector"));
        }
        let k = label_index(labels, term.body, term.offset, field)?;
        v.0[k] += term.coef;
    }
    Ok(v)
}

pub fn parse_one_form(text: &str, labels: &[String], field: &str) -> Result<KForm> {
    Ok(KForm::one_form(&parse_vector(text, labels, field)?.0))
}

/// A 2-form; input is always read in the determinant convention.
pub fn parse_two_form(text: &str, labels: &[String], field: &str) -> Result<KForm> {
    let n = labels.len();
    let t = text.trim();
    let mut form = KForm::zero(n, 2);
    if t == "0" {
        return Ok(form);
    }
    let mut add = |i: usize, j: usize, v: Scalar, offset: usize| -> Result<()> {
        if i == j {
            return Err(perr(offset, field, "repeated index in a 2-form term"));
        }
        let (a, b, v) = if i < j { (i, j, v) } else { (j, i, -v) };
        let cur = form.coeff(&[a, b]);
        form.set(&[a, b], cur + v);
        Ok(())
    };
    if t.contains('=') {
        for (o, tok) in t.split_whitespace().map(|s| (s.as_ptr() as usize - text.as_ptr() as usize, s)) {
            let (pair, value) = tok.split_once('=').ok_or_else(|| perr(o, field, "expected i,j=value"))?;
            let (i, j) = pair.split_once(',').ok_or_else(|| perr(o, field, "expected i,j=value"))?;
            let idx = |s: &str| -> Result<usize> {
                match s.parse::<usize>() {
                    Ok(k) if (1..=n).contains(&k) => Ok(k - 1),
                    _ => Err(perr(o, field, format!("basis index {s:?} out of range 1..={n}"))),
                }
            };
            let v = scalar_at(value, o + pair.len() + 1, field)?;
            add(idx(i)?, idx(j)?, v, o)?;
        }
        return Ok(form);
    }
    for term in terms(text, field)? {
        let parts: Vec<&str> = term.body.split(['^', '∧']).map(str::trim).collect();
        if parts.len() != 2 {
            return Err(perr(term.offset, field, "expected a term of the form a^b"));
        }
        let i = label_index(labels, parts[0], term.offset, field)?;
        let j = label_index(labels, parts[1], term.offset, field)?;
        add(i, j, term.coef, term.offset)?;
    }
    Ok(form)
}

/// A square map on an `n`-dimensional space; `named` supplies built-in maps.
pub fn parse_map(text: &str, n: usize, named: &[(&str, LinearMap)], field: &str) -> Result<LinearMap> {
    let t = text.trim();
    let lead = text.len() - text.trim_start().len();
    match t {
        "0" | "zero" => return Ok(LinearMap::zero(n)),
        "id" => return Ok(LinearMap::identity(n)),
        _ => {}
    }
    if let Some(rest) = t.strip_prefix("diag:") {
        let entries = scalar_list(rest, n, field).map_err(|e| shifted(e, lead + 5))?;
        return Ok(LinearMap::diag(&entries));
    }
    let (body, base) = match t.strip_prefix("rows:") {
        Some(rest) => (rest, lead + 5),
        None if t.contains(';') => (t, lead),
        None => {
            return named.iter().find(|(name, _)| *name == t).map(|(_, m)| m.clone()).ok_or_else(|| {
                let names: Vec<&str> = named.iter().map(|(name, _)| *name).collect();
                perr(
                    lead,
                    field,
                    format!("unknown map {t:?}; use diag:, rows:, id, zero or one of [{}]", names.join(", ")),
                )
            });
        }
    };
    let mut rows = Vec::new();
    let mut offset = base;
    for row in body.split(';') {
        rows.push(scalar_list(row, n, field).map_err(|e| shifted(e, offset))?);
        offset += row.len() + 1;
    }
    if rows.len() != n {
        return Err(perr(base, field, format!("expected {n} rows, found {}", rows.len())));
    }
    LinearMap::from_rows(rows)
}

/// `Ker φ` as a subspace.
fn kernel_of(form: &KForm) -> Subspace {
    let n = form.dim();
    let basis: Vec<Vector> = linalg::nullspace(&[form.covector()], n).into_iter().map(Vector).collect();
    Subspace::span(n, &basis)
}

/// A derivation constraint.
///
/// - `diagonal`
/// - `alpha∘D=alpha:FORM`, `alpha∘D=0:FORM`, `alpha∘D=2*alpha:FORM`
/// - `D∘A=A∘D:MAP`, optionally restricted with `@ker:FORM`
/// - `D(VECTOR)=VECTOR`
///
/// `.` may be written for `∘`.
pub fn parse_constraint(text: &str, labels: &[String], named: &[(&str, LinearMap)], field: &str) -> Result<Constraint> {
    let n = labels.len();
    let t = text.trim();
    if t == "diagonal" {
        return Ok(Constraint::Diagonal);
    }
    let at = |s: &str| s.as_ptr() as usize - text.as_ptr() as usize;
    if let Some(rest) = t.strip_prefix("D(") {
        let (from, to) = rest.split_once(")=").ok_or_else(|| perr(at(rest), field, "expected D(v)=w"))?;
        let v = parse_vector(from, labels, field).map_err(|e| shifted(e, at(from)))?;
        let w = parse_vector(to, labels, field).map_err(|e| shifted(e, at(to)))?;
        return Ok(Constraint::Maps { from: v, to: w });
    }
    let (eq, arg) =
        t.split_once(':').ok_or_else(|| perr(at(t), field, "expected CONSTRAINT:ARGUMENT, diagonal, or D(v)=w"))?;
    let eq_norm = eq.replace('∘', ".").replace(' ', "");
    let (lhs, rhs) = eq_norm.split_once('=').ok_or_else(|| perr(at(eq), field, "expected an equation"))?;
    if let Some(name) = lhs.strip_suffix(".D") {
        let form = parse_one_form(arg, labels, field).map_err(|e| shifted(e, at(arg)))?;
        let lambda = if rhs == "0" {
            Scalar::zero()
        } else if rhs == name {
            Scalar::one()
        } else {
            let coef = rhs.strip_suffix(name).map(|c| c.trim_end_matches('*')).unwrap_or("");
            scalar_at(coef, at(eq), field)?
        };
        return Ok(Constraint::FormEigen { form, lambda });
    }
    if let Some(a) = lhs.strip_prefix("D.") {
        if rhs != format!("{a}.D") {
            return Err(perr(at(eq), field, "expected D∘A=A∘D"));
        }
        let (map_text, sub) = match arg.split_once("@ker:") {
            Some((m, f)) => (m, Some(f)),
            None => (arg, None),
        };
        let map = parse_map(map_text, n, named, field).map_err(|e| shifted(e, at(map_text)))?;
        let subspace = match sub {
            Some(f) => kernel_of(&parse_one_form(f, labels, field).map_err(|e| shifted(e, at(f)))?),
            None => Subspace::whole(n),
        };
        return Ok(Constraint::Commutes { map, subspace });
    }
    Err(perr(at(eq), field, format!("unsupported constraint {eq:?}")))
}

/// Non-empty content lines with their byte offsets.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let body = line.split('#').next().unwrap_or("").trim_end();
        let lead = body.len() - body.trim_start().len();
        if !body.trim().is_empty() {
            out.push((offset + lead, body.trim_start()));
        }
        offset += line.len();
    }
    out
}

fn check_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, kind: &str) -> Result<()> {
    match lines.next() {
        Some((o, line)) => {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks != [FORMAT, kind] {
                return Err(perr(o, "header", format!("expected \"{FORMAT} {kind}\"")));
            }
            Ok(())
        }
        None => Err(perr(0, "header", "empty document")),
    }
}

fn key_value(line: &str) -> (&str, &str, usize) {
    match line.find(char::is_whitespace) {
        Some(p) => {
            let rest = &line[p..];
            let lead = rest.len() - rest.trim_start().len();
            (&line[..p], rest.trim(), p + lead)
        }
        None => (line, "", line.len()),
    }
}

type ParsedBracket = (usize, usize, Vec<(usize, Scalar)>, usize);

/// Parses an algebra document, or the algebra embedded in a text report.
/// Jacobi is not checked here.
pub fn parse_algebra(text: &str) -> Result<LieAlgebra> {
    let mut all = content_lines(text);
    if all.first().is_some_and(|(_, l)| l.split_whitespace().eq([FORMAT, "report"])) {
        let start = all.iter().position(|(_, l)| *l == "begin algebra");
        let end = all.iter().position(|(_, l)| *l == "end algebra");
        match (start, end) {
            (Some(s), Some(e)) if s < e => all = all[s + 1..e].to_vec(),
            _ => return Err(perr(0, "algebra", "report carries no algebra block")),
        }
    }
    let mut lines = all.into_iter();
    check_header(&mut lines, "algebra")?;
    let mut dim: Option<usize> = None;
    let mut labels: Option<Vec<String>> = None;
    // (i, j, terms, byte offset of the line)
    let mut brackets: Vec<ParsedBracket> = Vec::new();
    for (o, line) in lines {
        let (key, value, vo) = key_value(line);
        let vo = o + vo;
        match key {
            "dim" => {
                let d = value.parse::<usize>().ok().filter(|&d| d > 0);
                dim = Some(d.ok_or_else(|| perr(vo, "dim", "expected a positive integer"))?);
            }
            "basis" => labels = Some(value.split_whitespace().map(String::from).collect()),
            "bracket" => {
                let toks: Vec<&str> = value.split_whitespace().collect();
                if toks.len() < 2 {
                    return Err(perr(vo, "bracket", "expected i j k=v ..."));
                }
                let tok_at = |s: &str| s.as_ptr() as usize - text.as_ptr() as usize;
                let idx = |s: &str| -> Result<usize> {
                    s.parse::<usize>()
                        .ok()
                        .filter(|&k| k >= 1)
                        .map(|k| k - 1)
                        .ok_or_else(|| perr(tok_at(s), "bracket", format!("bad basis index {s:?}")))
                };
                let (i, j) = (idx(toks[0])?, idx(toks[1])?);
                if i >= j {
                    return Err(perr(tok_at(toks[0]), "bracket", "brackets are given for i < j only"));
                }
                let mut coeffs = Vec::new();
                for tok in &toks[2..] {
                    let (k, v) = tok.split_once('=').ok_or_else(|| perr(tok_at(tok), "bracket", "expected k=value"))?;
                    coeffs.push((idx(k)?, scalar_at(v, tok_at(v), "bracket")?));
                }
                brackets.push((i, j, coeffs, vo));
            }
            other => return Err(perr(o, other, format!("unknown field {other:?} in an algebra document"))),
        }
    }
    let labels = match (dim, labels) {
        (Some(d), Some(l)) if l.len() != d => {
            return Err(perr(0, "basis", format!("{} labels for dimension {d}", l.len())));
        }
        (_, Some(l)) => l,
        (Some(d), None) => default_labels(d),
        (None, None) => return Err(perr(0, "dim", "missing dim")),
    };
    let n = labels.len();
    let mut seen = BTreeMap::new();
    let mut entries = Vec::new();
    for (i, j, coeffs, o) in brackets {
        if j >= n {
            return Err(perr(o, "bracket", format!("index {} exceeds dimension {n}", j + 1)));
        }
        if seen.insert((i, j), ()).is_some() {
            return Err(perr(o, "bracket", format!("bracket [{}, {}] given twice", i + 1, j + 1)));
        }
        let mut v = Vector::zero(n);
        for (k, c) in coeffs {
            if k >= n {
                return Err(perr(o, "bracket", format!("index {} exceeds dimension {n}", k + 1)));
            }
            v.0[k] += c;
        }
        entries.push((i, j, v));
    }
    LieAlgebra::from_brackets(labels, entries)
}

/// Serializable algebra with 1-based indices, the JSON mirror of an algebra document.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct AlgebraDoc {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketDoc>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct BracketDoc {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<CoeffDoc>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CoeffDoc {
    pub k: usize,
    pub value: String,
}

impl AlgebraDoc {
    pub fn new(g: &LieAlgebra) -> Self {
        let brackets = g
            .nonzero_brackets()
            .into_iter()
            .map(|(i, j, v)| BracketDoc {
                i: i + 1,
                j: j + 1,
                coeffs: v.support().into_iter().map(|k| CoeffDoc { k: k + 1, value: v.0[k].to_string() }).collect(),
            })
            .collect();
        Self { dim: g.dim(), basis: g.labels().to_vec(), brackets }
    }
}

pub fn write_algebra(g: &LieAlgebra) -> String {
    let doc = AlgebraDoc::new(g);
    let mut s = format!("{FORMAT} algebra\ndim {}\nbasis {}\n", doc.dim, doc.basis.join(" "));
    for b in &doc.brackets {
        let _ = write!(s, "bracket {} {}", b.i, b.j);
        for c in &b.coeffs {
            let _ = write!(s, " {}={}", c.k, c.value);
        }
        s.push('\n');
    }
    s
}

/// Raw `key value` fields of a structure document, typed on access.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StructureFile {
    fields: BTreeMap<String, (usize, String)>,
}

pub const STRUCTURE_KEYS: [&str; 14] =
    ["form", "alpha", "xi", "phi", "J", "omega", "two_form", "theta", "map", "dz", "a", "b", "c", "d"];

impl StructureFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text).into_iter();
        check_header(&mut lines, "structure")?;
        let mut fields = BTreeMap::new();
        for (o, line) in lines {
            let (key, value, vo) = key_value(line);
            if !STRUCTURE_KEYS.contains(&key) && key != "u" {
                return Err(perr(o, key, format!("unknown field {key:?} in a structure document")));
            }
            if value.is_empty() {
                return Err(perr(o + vo, key, "missing value"));
            }
            if fields.insert(key.to_string(), (o + vo, value.to_string())).is_some() {
                return Err(perr(o, key, "field given twice"));
            }
        }
        Ok(Self { fields })
    }

    pub fn has(&self, key: &str) -> bool {
        self.fields.contains_key(key)
    }

    /// Raw value and its byte offset in the document.
    pub fn raw(&self, key: &str) -> Option<(usize, &str)> {
        self.fields.get(key).map(|(o, v)| (*o, v.as_str()))
    }

    /// Sets `key` to `value`, offsets counted from the start of `value`.
    pub fn set(&mut self, key: &str, value: &str) {
        self.fields.insert(key.to_string(), (0, value.to_string()));
    }

    /// Folds `other` in; its fields win.
    pub fn merge(&mut self, other: StructureFile) {
        self.fields.extend(other.fields);
    }

    fn typed<T>(&self, key: &str, f: impl FnOnce(&str) -> Result<T>) -> Result<Option<T>> {
        match self.raw(key) {
            Some((o, v)) => f(v).map(Some).map_err(|e| shifted(e, o)),
            None => Ok(None),
        }
    }

    pub fn vector(&self, key: &str, labels: &[String]) -> Result<Option<Vector>> {
        self.typed(key, |v| parse_vector(v, labels, key))
    }

    pub fn one_form(&self, key: &str, labels: &[String]) -> Result<Option<KForm>> {
        self.typed(key, |v| parse_one_form(v, labels, key))
    }

    pub fn two_form(&self, key: &str, labels: &[String]) -> Result<Option<KForm>> {
        self.typed(key, |v| parse_two_form(v, labels, key))
    }

    pub fn map(&self, key: &str, n: usize, named: &[(&str, LinearMap)]) -> Result<Option<LinearMap>> {
        self.typed(key, |v| parse_map(v, n, named, key))
    }

    pub fn scalar(&self, key: &str) -> Result<Option<Scalar>> {
        self.typed(key, |v| scalar_at(v, 0, key))
    }
}

fn coef_prefix(c: &Scalar, first: bool) -> String {
    let neg = *c < Scalar::zero();
    let abs = if neg { -c.clone() } else { c.clone() };
    let sign = match (first, neg) {
        (true, false) => "",
        (true, true) => "-",
        (false, false) => " + ",
        (false, true) => " - ",
    };
    if abs.is_one() {
        sign.to_string()
    } else {
        format!("{sign}{abs}*")
    }
}

/// `1/2*e1 - e2`; `0` for the zero vector.
pub fn fmt_vector(v: &Vector, labels: &[String]) -> String {
    let mut s = String::new();
    for k in v.support() {
        s += &coef_prefix(&v.0[k], s.is_empty());
        s += &labels[k];
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

/// Forms as sums of wedge monomials `e1^e2`, coefficients shown in `conv`.
pub fn fmt_form(f: &KForm, labels: &[String], conv: WedgeConvention) -> String {
    if f.degree() == 0 {
        return f.coeff(&[]).to_string();
    }
    let sign = conv.sign(f.degree());
    let mut s = String::new();
    for (idx, c) in f.terms() {
        s += &coef_prefix(&(c * &sign), s.is_empty());
        s += &idx.iter().map(|&i| labels[i].as_str()).collect::<Vec<_>>().join("^");
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

pub fn fmt_rows(rows: &[Vec<Scalar>]) -> String {
    let body: Vec<String> =
        rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
    format!("rows:{}", body.join(";"))
}

pub fn fmt_map(m: &LinearMap) -> String {
    fmt_rows(m.rows())
}

/// A report with a section name.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct NamedReport {
    pub name: String,
    #[serde(flatten)]
    pub report: ReportDoc,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Entry {
    pub name: String,
    pub value: String,
}

/// Output of one command invocation.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ReportDocument {
    pub format: String,
    pub command: String,
    pub verdict: String,
    pub reports: Vec<NamedReport>,
    pub values: Vec<Entry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraDoc>,
}

impl ReportDocument {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            format: FORMAT.into(),
            command: command.into(),
            verdict: "pass".into(),
            reports: Vec::new(),
            values: Vec::new(),
            algebra: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == "pass" && self.reports.iter().all(|r| r.report.verdict == "pass")
    }

    pub fn add_report(&mut self, name: impl Into<String>, report: &CheckReport, labels: &[String]) {
        self.reports.push(NamedReport { name: name.into(), report: report.to_doc(labels) });
        self.refresh();
    }

    pub fn add_value(&mut self, name: impl Into<String>, value: impl Into<String>) {
        self.values.push(Entry { name: name.into(), value: value.into() });
    }

    pub fn set_algebra(&mut self, g: &LieAlgebra) {
        self.algebra = Some(AlgebraDoc::new(g));
    }

    /// Forces an overall failure (for outcomes that are not report items).
    pub fn fail(&mut self) {
        self.verdict = "fail".into();
    }

    fn refresh(&mut self) {
        if self.reports.iter().any(|r| r.report.verdict != "pass") {
            self.verdict = "fail".into();
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report documents serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{FORMAT} report\ncommand {}\nverdict {}\n", self.command, self.verdict);
        for r in &self.reports {
            let _ = writeln!(s, "report {} {}", r.name, r.report.verdict);
            for item in &r.report.items {
                let _ = writeln!(s, "  {} {}", item.verdict, item.name);
                if let Some(w) = &item.witness {
                    let _ = write!(s, "    witness [{}] ({})", w.basis.join(", "), w.values.join(", "));
                    if !w.note.is_empty() {
                        let _ = write!(s, " {}", w.note);
                    }
                    s.push('\n');
                }
            }
        }
        for e in &self.values {
            let _ = writeln!(s, "value {} = {}", e.name, e.value);
        }
        if let Some(a) = &self.algebra {
            s.push_str("begin algebra\n");
            let _ = writeln!(s, "{FORMAT} algebra\ndim {}\nbasis {}", a.dim, a.basis.join(" "));
            for b in &a.brackets {
                let _ = write!(s, "bracket {} {}", b.i, b.j);
                for c in &b.coeffs {
                    let _ = write!(s, " {}={}", c.k, c.value);
                }
                s.push('\n');
            }
            s.push_str("end algebra\n");
        }
        s
    }
}
