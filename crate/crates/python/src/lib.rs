//! Python bindings. Vectors, forms and maps cross the boundary in the same
//! text syntax the command line accepts and prints.

use lieforge::catalog;
use lieforge::extensions::{self, ExtensionResult};
use lieforge::io::{self, fmt_form, fmt_map, fmt_vector};
use lieforge::structures::{self, Checked};
use lieforge::{CheckReport, Error, KForm, LinearMap, Vector, WedgeConvention};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(lieforge_py, PreconditionError, PyValueError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Precondition { .. } => PreconditionError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn lift<T>(r: lieforge::Result<T>) -> PyResult<T> {
    r.map_err(to_py)
}

/// One checked condition.
#[pyclass(name = "CheckItem", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyCheckItem {
    #[pyo3(get)]
    name: String,
    #[pyo3(get)]
    passed: bool,
    /// Human-readable witness for a failed item.
    #[pyo3(get)]
    witness: Option<String>,
}

#[pymethods]
impl PyCheckItem {
    fn __repr__(&self) -> String {
        let mark = if self.passed { "pass" } else { "FAIL" };
        match &self.witness {
            Some(w) => format!("<{mark} {}: {w}>", self.name),
            None => format!("<{mark} {}>", self.name),
        }
    }
}

/// Ordered list of checked conditions.
#[pyclass(name = "Report", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyReport {
    #[pyo3(get)]
    items: Vec<PyCheckItem>,
}

impl PyReport {
    fn new(r: &CheckReport, labels: &[String]) -> Self {
        let doc = r.to_doc(labels);
        let items = doc
            .items
            .into_iter()
            .map(|i| PyCheckItem {
                passed: i.verdict == "pass",
                name: i.name,
                witness: i.witness.map(|w| {
                    let mut s = format!("[{}] -> [{}]", w.basis.join(", "), w.values.join(", "));
                    if !w.note.is_empty() {
                        s += &format!(" ({})", w.note);
                    }
                    s
                }),
            })
            .collect();
        Self { items }
    }
}

#[pymethods]
impl PyReport {
    #[getter]
    fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    fn failures(&self) -> Vec<String> {
        self.items.iter().filter(|i| !i.passed).map(|i| i.name.clone()).collect()
    }

    fn __bool__(&self) -> bool {
        self.passed()
    }

    fn __len__(&self) -> usize {
        self.items.len()
    }

    fn __repr__(&self) -> String {
        let n = self.items.iter().filter(|i| i.passed).count();
        format!("<Report {} ({n}/{} passed)>", if self.passed() { "pass" } else { "fail" }, self.items.len())
    }
}

/// A finite-dimensional Lie algebra over the rationals.
#[pyclass(name = "LieAlgebra", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyLieAlgebra {
    inner: lieforge::LieAlgebra,
    /// Maps addressable by name, carried over from a builtin.
    named: Vec<(&'static str, LinearMap)>,
}

impl PyLieAlgebra {
    fn plain(inner: lieforge::LieAlgebra) -> Self {
        Self { inner, named: Vec::new() }
    }

    fn labels(&self) -> &[String] {
        self.inner.labels()
    }

    fn vector(&self, text: &str) -> PyResult<Vector> {
        lift(io::parse_vector(text, self.labels(), "vector"))
    }

    fn one_form(&self, text: &str) -> PyResult<KForm> {
        lift(io::parse_one_form(text, self.labels(), "form"))
    }

    fn two_form(&self, text: &str) -> PyResult<KForm> {
        lift(io::parse_two_form(text, self.labels(), "two-form"))
    }

    fn map(&self, text: &str) -> PyResult<LinearMap> {
        lift(io::parse_map(text, self.inner.dim(), &self.named, "map"))
    }

    fn fmt_vector(&self, v: &Vector) -> String {
        fmt_vector(v, self.labels())
    }

    fn fmt_form(&self, f: &KForm) -> String {
        fmt_form(f, self.labels(), WedgeConvention::Determinant)
    }

    fn report(&self, r: &CheckReport) -> PyReport {
        PyReport::new(r, self.labels())
    }

    fn extension(&self, ext: lieforge::Result<ExtensionResult>) -> PyResult<PyLieAlgebra> {
        Ok(PyLieAlgebra::plain(lift(ext)?.algebra))
    }
}

fn checked<'py, T>(
    py: Python<'py>,
    g: &PyLieAlgebra,
    c: &Checked<T>,
    fill: impl FnOnce(&T, &Bound<'py, PyDict>) -> PyResult<()>,
) -> PyResult<(PyReport, Bound<'py, PyDict>)> {
    let data = PyDict::new(py);
    if let Some(s) = &c.structure {
        fill(s, &data)?;
    }
    Ok((g.report(&c.report), data))
}

#[pymethods]
impl PyLieAlgebra {
    /// Parses a `lieforge/1 algebra` document (or a report that embeds one).
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Self::plain(lift(io::parse_algebra(text))?))
    }

    /// One of `h3`, `d4half`, `g0`, `g5`, with its named maps.
    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        let b = catalog::builtin(name).ok_or_else(|| PyValueError::new_err(format!("unknown builtin {name:?}")))?;
        Ok(Self { inner: b.algebra, named: b.maps })
    }

    #[staticmethod]
    fn abelian(n: usize) -> Self {
        Self::plain(lieforge::LieAlgebra::abelian(n))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter(labels)]
    fn py_labels(&self) -> Vec<String> {
        self.labels().to_vec()
    }

    fn to_text(&self) -> String {
        io::write_algebra(&self.inner)
    }

    fn bracket(&self, x: &str, y: &str) -> PyResult<String> {
        let v = lift(self.inner.try_bracket(&self.vector(x)?, &self.vector(y)?))?;
        Ok(self.fmt_vector(&v))
    }

    fn check_jacobi(&self) -> PyReport {
        self.report(&self.inner.check_jacobi())
    }

    fn is_derivation(&self, d: &str) -> PyResult<PyReport> {
        Ok(self.report(&self.inner.is_derivation(&self.map(d)?)))
    }

    /// Basis of the center.
    fn center(&self) -> Vec<String> {
        self.inner.center().basis().iter().map(|v| self.fmt_vector(v)).collect()
    }

    /// Chevalley–Eilenberg differential of a 1- or 2-form.
    fn d(&self, form: &str) -> PyResult<String> {
        let f = self.one_form(form).or_else(|_| self.two_form(form))?;
        Ok(self.fmt_form(&lieforge::forms::ce_differential(&self.inner, &f)))
    }

    #[pyo3(signature = (theta, force = false))]
    fn central_extension(&self, theta: &str, force: bool) -> PyResult<Self> {
        let t = self.two_form(theta)?;
        self.extension(if force {
            extensions::central_extension_unchecked(&self.inner, &t)
        } else {
            extensions::central_extension(&self.inner, &t)
        })
    }

    #[pyo3(signature = (d, force = false))]
    fn derivation_extension(&self, d: &str, force: bool) -> PyResult<Self> {
        let d = self.map(d)?;
        self.extension(if force {
            extensions::derivation_extension_unchecked(&self.inner, &d)
        } else {
            extensions::derivation_extension(&self.inner, &d)
        })
    }

    /// `D` acts on the central extension, so it is given in dimension `n + 1`.
    fn double_extension(&self, theta: &str, d: &str) -> PyResult<Self> {
        let t = self.two_form(theta)?;
        let d = lift(io::parse_map(d, self.inner.dim() + 1, &[], "map"))?;
        self.extension(extensions::double_extension(&self.inner, &t, &d))
    }

    fn reversed_double_extension(&self, alpha: &str, d: &str) -> PyResult<Self> {
        let a = self.one_form(alpha)?;
        self.extension(extensions::reversed_double_extension(&self.inner, &a, &self.map(d)?))
    }

    fn check_contact<'py>(&self, py: Python<'py>, alpha: &str) -> PyResult<(PyReport, Bound<'py, PyDict>)> {
        let c = lift(structures::check_contact(&self.inner, &self.one_form(alpha)?))?;
        checked(py, self, &c, |s, d| d.set_item("reeb", self.fmt_vector(&s.xi)))
    }

    fn check_frobenius<'py>(&self, py: Python<'py>, phi: &str) -> PyResult<(PyReport, Bound<'py, PyDict>)> {
        let c = lift(structures::check_frobenius(&self.inner, &self.one_form(phi)?))?;
        checked(py, self, &c, |s, d| d.set_item("principal", self.fmt_vector(&s.principal)))
    }

    fn kirillov_form(&self, phi: &str) -> PyResult<String> {
        Ok(self.fmt_form(&lift(structures::kirillov_form(&self.inner, &self.one_form(phi)?))?))
    }

    fn principal_element(&self, phi: &str) -> PyResult<String> {
        Ok(self.fmt_vector(&lift(structures::principal_element(&self.inner, &self.one_form(phi)?))?))
    }

    fn check_kahler<'py>(&self, py: Python<'py>, j: &str, omega: &str) -> PyResult<(PyReport, Bound<'py, PyDict>)> {
        let c = lift(structures::check_kahler(&self.inner, &self.map(j)?, &self.two_form(omega)?))?;
        checked(py, self, &c, |s, d| d.set_item("metric", io::fmt_rows(&s.metric)))
    }

    fn check_sasakian<'py>(
        &self,
        py: Python<'py>,
        xi: &str,
        alpha: &str,
        phi: &str,
    ) -> PyResult<(PyReport, Bound<'py, PyDict>)> {
        let c =
            lift(structures::check_sasakian(&self.inner, &self.vector(xi)?, &self.one_form(alpha)?, &self.map(phi)?))?;
        checked(py, self, &c, |s, d| d.set_item("metric", io::fmt_rows(&s.metric)))
    }

    /// Adjoins `ξ` acting by `D` to a Frobenius–Kähler algebra and returns the
    /// extension with the verdict on the induced Sasakian structure.
    fn fk_to_sasakian<'py>(
        &self,
        py: Python<'py>,
        phi: &str,
        j: &str,
        d: &str,
    ) -> PyResult<(Self, PyReport, Bound<'py, PyDict>)> {
        let phi = self.one_form(phi)?;
        let omega = lift(structures::kirillov_form(&self.inner, &phi))?;
        let f = lift(structures::check_frobenius(&self.inner, &phi))?;
        let k = lift(structures::check_kahler(&self.inner, &self.map(j)?, &omega))?;
        let (Some(f), Some(k)) = (f.structure, k.structure) else {
            return Err(PreconditionError::new_err("input is not Frobenius–Kähler"));
        };
        let (ext, s) = lift(structures::fk_to_sasakian(&self.inner, &f, &k, &self.map(d)?))?;
        let out = Self::plain(ext.algebra);
        let (rep, data) = checked(py, &out, &s, |s, dict| {
            dict.set_item("xi", out.fmt_vector(&s.xi))?;
            dict.set_item("alpha", out.fmt_form(&s.alpha))?;
            dict.set_item("phi", fmt_map(&s.phi))
        })?;
        Ok((out, rep, data))
    }

    /// Adjoins a principal element acting by `D` to a Sasakian algebra.
    fn sasakian_to_fk<'py>(
        &self,
        py: Python<'py>,
        xi: &str,
        alpha: &str,
        phi: &str,
        d: &str,
    ) -> PyResult<(Self, PyReport, Bound<'py, PyDict>)> {
        let c =
            lift(structures::check_sasakian(&self.inner, &self.vector(xi)?, &self.one_form(alpha)?, &self.map(phi)?))?;
        let Some(s) = c.structure else {
            return Err(PreconditionError::new_err("input is not Sasakian"));
        };
        let fk = lift(structures::sasakian_to_fk(&self.inner, &s, &self.map(d)?))?;
        let out = Self::plain(fk.extension.algebra.clone());
        let data = PyDict::new(py);
        data.set_item("phi", out.fmt_form(&fk.phi))?;
        data.set_item("j", fmt_map(&fk.j))?;
        data.set_item("omega", out.fmt_form(&fk.omega))?;
        if let Some(f) = &fk.frobenius.structure {
            data.set_item("principal", out.fmt_vector(&f.principal))?;
        }
        let rep = out.report(&fk.report());
        Ok((out, rep, data))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("<LieAlgebra dim {} with {} nonzero brackets>", self.inner.dim(), self.inner.nonzero_brackets().len())
    }
}

/// Runs the command-line interface in-process; returns `(code, stdout, stderr)`.
#[pyfunction]
fn run(args: Vec<String>) -> (i32, String, String) {
    let o = lieforge::cli::run(std::iter::once("lieforge".to_string()).chain(args));
    (o.code, o.stdout, o.stderr)
}

#[pymodule]
fn lieforge_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLieAlgebra>()?;
    m.add_class::<PyReport>()?;
    m.add_class::<PyCheckItem>()?;
    m.add("PreconditionError", m.py().get_type::<PreconditionError>())?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    Ok(())
}
