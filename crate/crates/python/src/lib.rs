//! Python bindings. Ring elements cross the boundary as `int` (over `Z`
//! and `Z/n`) or `fractions.Fraction` (over `Q`); rings are written
//! `"Z"`, `"Q"`, `"Z/n"` or a bare modulus `n`.

use num_bigint::BigInt;
use orzech_core::engine::{self, InjectivityCertificate, Reduction};
use orzech_core::format::Document;
use orzech_core::{Error, Hom, Matrix, ModulePresentation, Ring, RingElement, SubmoduleGens};
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyModule;

create_exception!(orzech, OrzechError, PyException);
create_exception!(orzech, InputError, OrzechError);
create_exception!(orzech, NotSurjectiveError, OrzechError);
create_exception!(orzech, VerificationError, OrzechError);

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::NotSurjective(_) => NotSurjectiveError::new_err(e.to_string()),
        Error::ChainFailure { .. } | Error::InternalContradiction(_) => VerificationError::new_err(e.to_string()),
        _ => InputError::new_err(e.to_string()),
    }
}

fn parse_ring(spec: &Bound<'_, PyAny>) -> PyResult<Ring> {
    if let Ok(n) = spec.extract::<u64>() {
        return Ring::modn(n).map_err(to_py_err);
    }
    let s: String = spec.extract()?;
    match s.as_str() {
        "Z" => Ok(Ring::Integers),
        "Q" => Ok(Ring::Rationals),
        other => {
            let n = other
                .strip_prefix("Z/")
                .and_then(|n| n.parse::<u64>().ok())
                .ok_or_else(|| InputError::new_err(format!("unknown ring {other:?}")))?;
            Ring::modn(n).map_err(to_py_err)
        }
    }
}

fn element_from_py(ring: Ring, obj: &Bound<'_, PyAny>) -> PyResult<RingElement> {
    if let Ok(i) = obj.extract::<BigInt>() {
        return Ok(ring.from_bigint(&i));
    }
    if let Ok(s) = obj.extract::<String>() {
        return ring.parse_element(&s).map_err(to_py_err);
    }
    if let (Ok(num), Ok(den)) = (obj.getattr("numerator"), obj.getattr("denominator")) {
        let (num, den): (BigInt, BigInt) = (num.extract()?, den.extract()?);
        return ring.from_fraction(&num, &den).map_err(to_py_err);
    }
    Err(InputError::new_err(format!("cannot read {obj} as an element of {ring}")))
}

fn element_to_py<'py>(py: Python<'py>, e: &RingElement) -> PyResult<Bound<'py, PyAny>> {
    match e {
        RingElement::Rat(q) if !q.is_integer() => {
            let fraction = PyModule::import(py, "fractions")?.getattr("Fraction")?;
            fraction.call1((q.numer().clone(), q.denom().clone()))
        }
        RingElement::Rat(q) => Ok(q.numer().clone().into_pyobject(py)?.into_any()),
        other => Ok(other.to_bigint().expect("integral element").into_pyobject(py)?.into_any()),
    }
}

fn vector_from_py(ring: Ring, items: &[Bound<'_, PyAny>]) -> PyResult<Vec<RingElement>> {
    items.iter().map(|x| element_from_py(ring, x)).collect()
}

fn vector_to_py<'py>(py: Python<'py>, v: &[RingElement]) -> PyResult<Vec<Bound<'py, PyAny>>> {
    v.iter().map(|e| element_to_py(py, e)).collect()
}

fn columns_to_matrix(ring: Ring, rows: usize, cols: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Matrix> {
    let cols = cols.iter().map(|c| vector_from_py(ring, c)).collect::<PyResult<Vec<_>>>()?;
    Matrix::from_columns(ring, rows, &cols).map_err(to_py_err)
}

/// Dense matrix over `Z`, `Q` or `Z/n`.
#[pyclass(name = "Matrix", module = "orzech", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyMatrix {
    inner: Matrix,
}

#[pymethods]
impl PyMatrix {
    /// `Matrix(ring, rows)`; pass `cols` to build a matrix with no rows.
    #[new]
    #[pyo3(signature = (ring, rows, cols = None))]
    fn new(ring: &Bound<'_, PyAny>, rows: Vec<Vec<Bound<'_, PyAny>>>, cols: Option<usize>) -> PyResult<Self> {
        let ring = parse_ring(ring)?;
        let ncols = cols.unwrap_or_else(|| rows.first().map_or(0, Vec::len));
        let mut data = Vec::new();
        for row in &rows {
            if row.len() != ncols {
                return Err(InputError::new_err("rows have different lengths"));
            }
            data.extend(vector_from_py(ring, row)?);
        }
        Ok(PyMatrix { inner: Matrix::new(ring, rows.len(), ncols, data).map_err(to_py_err)? })
    }

    #[staticmethod]
    fn identity(ring: &Bound<'_, PyAny>, n: usize) -> PyResult<Self> {
        Ok(PyMatrix { inner: Matrix::identity(parse_ring(ring)?, n) })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let doc = Document::parse(text).map_err(to_py_err)?;
        let inner = doc.matrix.ok_or_else(|| InputError::new_err("document has no matrix"))?;
        Ok(PyMatrix { inner })
    }

    fn to_json(&self) -> String {
        let mut d = Document::new(self.inner.ring());
        d.matrix = Some(self.inner.clone());
        d.to_json_string()
    }

    #[getter]
    fn ring(&self) -> String {
        self.inner.ring().to_string()
    }

    #[getter]
    fn rows(&self) -> usize {
        self.inner.rows()
    }

    #[getter]
    fn cols(&self) -> usize {
        self.inner.cols()
    }

    fn entries<'py>(&self, py: Python<'py>) -> PyResult<Vec<Vec<Bound<'py, PyAny>>>> {
        self.inner.to_rows().iter().map(|r| vector_to_py(py, r)).collect()
    }

    fn __matmul__(&self, other: &PyMatrix) -> PyResult<PyMatrix> {
        Ok(PyMatrix { inner: self.inner.mul(&other.inner).map_err(to_py_err)? })
    }

    fn __add__(&self, other: &PyMatrix) -> PyResult<PyMatrix> {
        Ok(PyMatrix { inner: self.inner.add(&other.inner).map_err(to_py_err)? })
    }

    fn __sub__(&self, other: &PyMatrix) -> PyResult<PyMatrix> {
        Ok(PyMatrix { inner: self.inner.sub(&other.inner).map_err(to_py_err)? })
    }

    fn __repr__(&self) -> String {
        let rows: Vec<String> = self
            .inner
            .to_rows()
            .iter()
            .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        format!("Matrix({:?}, [{}])", self.inner.ring().to_string(), rows.join(", "))
    }
}

/// A map `f : N -> M` with `M = A^m / colspan(R)`, `N` generated by the
/// columns of `G` and `f` given by the images of those columns.
#[pyclass(name = "Hom", module = "orzech", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyHom {
    inner: Hom,
}

#[pymethods]
impl PyHom {
    /// Matrices are lists of columns. Without `submodule_gens`, `N = M`.
    #[new]
    #[pyo3(signature = (ring, ambient_rank, images, relations = Vec::new(), submodule_gens = None))]
    fn new(
        ring: &Bound<'_, PyAny>,
        ambient_rank: usize,
        images: Vec<Vec<Bound<'_, PyAny>>>,
        relations: Vec<Vec<Bound<'_, PyAny>>>,
        submodule_gens: Option<Vec<Vec<Bound<'_, PyAny>>>>,
    ) -> PyResult<Self> {
        let ring = parse_ring(ring)?;
        let module = ModulePresentation::new(columns_to_matrix(ring, ambient_rank, relations)?);
        let domain = match submodule_gens {
            Some(g) => SubmoduleGens::new(module, columns_to_matrix(ring, ambient_rank, g)?).map_err(to_py_err)?,
            None => SubmoduleGens::whole(module),
        };
        let images = columns_to_matrix(ring, ambient_rank, images)?;
        Ok(PyHom { inner: Hom::new(domain, images).map_err(to_py_err)? })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let doc = Document::parse(text).map_err(to_py_err)?;
        let inner = doc.module.ok_or_else(|| InputError::new_err("document has no module"))?;
        Ok(PyHom { inner })
    }

    fn to_json(&self) -> String {
        let mut d = Document::new(self.inner.ring());
        d.module = Some(self.inner.clone());
        d.to_json_string()
    }

    #[getter]
    fn ring(&self) -> String {
        self.inner.ring().to_string()
    }

    #[getter]
    fn images(&self) -> PyMatrix {
        PyMatrix { inner: self.inner.images().clone() }
    }

    #[getter]
    fn relations(&self) -> PyMatrix {
        PyMatrix { inner: self.inner.relations().clone() }
    }

    #[getter]
    fn submodule_gens(&self) -> PyMatrix {
        PyMatrix { inner: self.inner.gens().clone() }
    }

    fn is_well_defined(&self) -> PyResult<bool> {
        self.inner.is_well_defined().map_err(to_py_err)
    }

    fn is_surjective(&self) -> PyResult<bool> {
        Ok(self.inner.is_surjective().map_err(to_py_err)?.is_some())
    }

    fn certify(&self) -> PyResult<PyCertificate> {
        certify(self)
    }

    fn invert(&self) -> PyResult<PyHom> {
        invert(self)
    }

    /// Restricts to a finitely generated submodule containing the kernel
    /// element with coordinates `v` and certifies that `v` is zero.
    fn reduce(&self, v: Vec<Bound<'_, PyAny>>) -> PyResult<PyReduction> {
        let v = vector_from_py(self.inner.ring(), &v)?;
        Ok(PyReduction { inner: engine::reduce_to_fingen(&self.inner, &v).map_err(to_py_err)? })
    }

    fn __repr__(&self) -> String {
        format!(
            "Hom(ring={:?}, ambient_rank={}, generators={})",
            self.inner.ring().to_string(),
            self.inner.codomain().ambient_rank(),
            self.inner.domain().num_gens()
        )
    }
}

/// Injectivity certificate, bound to the map it was produced for.
#[pyclass(name = "Certificate", module = "orzech", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyCertificate {
    hom: Hom,
    inner: InjectivityCertificate,
}

#[pymethods]
impl PyCertificate {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let doc = Document::parse(text).map_err(to_py_err)?;
        let (hom, inner) = doc.certificate.ok_or_else(|| InputError::new_err("document has no certificate"))?;
        Ok(PyCertificate { hom, inner })
    }

    fn to_json(&self) -> String {
        let mut d = Document::new(self.hom.ring());
        d.certificate = Some((self.hom.clone(), self.inner.clone()));
        d.to_json_string()
    }

    #[getter]
    fn hom(&self) -> PyHom {
        PyHom { inner: self.hom.clone() }
    }

    #[getter]
    fn ch_coeffs<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        vector_to_py(py, &self.inner.ch_coeffs)
    }

    #[getter]
    fn lift_matrix(&self) -> PyMatrix {
        PyMatrix { inner: self.inner.lift_matrix.clone() }
    }

    #[getter]
    fn kernel_gens(&self) -> PyMatrix {
        PyMatrix { inner: self.inner.kernel_gens.clone() }
    }

    /// Raises `VerificationError` with the reason code on rejection.
    fn verify(&self) -> PyResult<()> {
        engine::verify_certificate(&self.hom, &self.inner).map_err(|r| VerificationError::new_err(r.to_string()))
    }

    fn is_valid(&self) -> bool {
        engine::is_valid(&self.hom, &self.inner)
    }
}

#[pyclass(name = "Reduction", module = "orzech", frozen)]
struct PyReduction {
    inner: Reduction,
}

#[pymethods]
impl PyReduction {
    fn verify(&self) -> bool {
        self.inner.verify()
    }

    #[getter]
    fn restricted(&self) -> PyHom {
        PyHom { inner: self.inner.restricted.clone() }
    }

    #[getter]
    fn certificate(&self) -> PyCertificate {
        PyCertificate { hom: self.inner.restricted.clone(), inner: self.inner.certificate.clone() }
    }

    fn to_json(&self) -> String {
        let mut d = Document::new(self.inner.restricted.ring());
        d.reduction = Some(self.inner.clone());
        d.to_json_string()
    }
}

/// Coefficients `c_0, ..., c_n` of `det(X I - M)`.
#[pyfunction]
fn charpoly<'py>(py: Python<'py>, m: &PyMatrix) -> PyResult<Vec<Bound<'py, PyAny>>> {
    vector_to_py(py, orzech_core::charpoly(&m.inner).map_err(to_py_err)?.coeffs())
}

#[pyfunction]
fn determinant<'py>(py: Python<'py>, m: &PyMatrix) -> PyResult<Bound<'py, PyAny>> {
    element_to_py(py, &orzech_core::determinant(&m.inner).map_err(to_py_err)?)
}

#[pyfunction]
fn cayley_hamilton_check(m: &PyMatrix) -> PyResult<bool> {
    orzech_core::cayley_hamilton_check(&m.inner).map_err(to_py_err)
}

/// `(H, U)` with `M @ U == H`.
#[pyfunction]
fn hnf(m: &PyMatrix) -> PyResult<(PyMatrix, PyMatrix)> {
    let r = orzech_core::hnf(&m.inner).map_err(to_py_err)?;
    Ok((PyMatrix { inner: r.h }, PyMatrix { inner: r.u }))
}

/// `(S, U, V)` with `U @ M @ V == S`.
#[pyfunction]
fn snf(m: &PyMatrix) -> PyResult<(PyMatrix, PyMatrix, PyMatrix)> {
    let r = orzech_core::snf(&m.inner).map_err(to_py_err)?;
    Ok((PyMatrix { inner: r.s }, PyMatrix { inner: r.u }, PyMatrix { inner: r.v }))
}

/// Some `x` with `M x = b`, or `None`.
#[pyfunction]
fn solve<'py>(py: Python<'py>, m: &PyMatrix, b: Vec<Bound<'py, PyAny>>) -> PyResult<Option<Vec<Bound<'py, PyAny>>>> {
    let b = vector_from_py(m.inner.ring(), &b)?;
    orzech_core::solve(&m.inner, &b).map_err(to_py_err)?.map(|x| vector_to_py(py, &x)).transpose()
}

/// Columns generate the kernel of `M`.
#[pyfunction]
fn kernel(m: &PyMatrix) -> PyResult<PyMatrix> {
    Ok(PyMatrix { inner: orzech_core::kernel_gens(&m.inner).map_err(to_py_err)? })
}

#[pyfunction]
fn certify(f: &PyHom) -> PyResult<PyCertificate> {
    let cert = orzech_core::orzech_certify(&f.inner).map_err(to_py_err)?;
    Ok(PyCertificate { hom: f.inner.clone(), inner: cert })
}

#[pyfunction]
fn verify(cert: &PyCertificate) -> PyResult<()> {
    cert.verify()
}

#[pyfunction]
fn invert(f: &PyHom) -> PyResult<PyHom> {
    Ok(PyHom { inner: orzech_core::inverse_hom(&f.inner).map_err(to_py_err)? })
}

#[pymodule]
fn orzech(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PyMatrix>()?;
    m.add_class::<PyHom>()?;
    m.add_class::<PyCertificate>()?;
    m.add_class::<PyReduction>()?;
    m.add_function(wrap_pyfunction!(charpoly, m)?)?;
    m.add_function(wrap_pyfunction!(determinant, m)?)?;
    m.add_function(wrap_pyfunction!(cayley_hamilton_check, m)?)?;
    m.add_function(wrap_pyfunction!(hnf, m)?)?;
    m.add_function(wrap_pyfunction!(snf, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(kernel, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(invert, m)?)?;
    m.add("OrzechError", py.get_type::<OrzechError>())?;
    m.add("InputError", py.get_type::<InputError>())?;
    m.add("NotSurjectiveError", py.get_type::<NotSurjectiveError>())?;
    m.add("VerificationError", py.get_type::<VerificationError>())?;
    Ok(())
}
