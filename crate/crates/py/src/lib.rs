//! Python bindings: instances, modules and command reports.

use std::path::Path;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use recoll::higher_ar::tau_n;
use recoll::module::{ext, find_isomorphism, hom_basis, RightModule};
use recoll::FieldSpec;
use recoll_cli::{parse_field, run, Command, Format, Instance, Options, Report};

fn py_err(e: recoll::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn field_arg(field: Option<&str>) -> PyResult<Option<FieldSpec>> {
    field.map(parse_field).transpose().map_err(py_err)
}

/// A parsed instance file: an algebra, named modules and task parameters.
#[pyclass(name = "Instance", frozen)]
struct PyInstance(Instance);

#[pymethods]
impl PyInstance {
    #[staticmethod]
    #[pyo3(signature = (path, field = None))]
    fn load(path: &str, field: Option<&str>) -> PyResult<Self> {
        Instance::from_path(Path::new(path), field_arg(field)?).map(PyInstance).map_err(py_err)
    }

    #[staticmethod]
    #[pyo3(signature = (text, name = "instance", field = None))]
    fn parse(text: &str, name: &str, field: Option<&str>) -> PyResult<Self> {
        Instance::parse(name, text, field_arg(field)?).map(PyInstance).map_err(py_err)
    }

    #[getter]
    fn name(&self) -> &str {
        &self.0.name
    }

    #[getter]
    fn algebra_dim(&self) -> usize {
        self.0.algebra.dim()
    }

    #[getter]
    fn field(&self) -> String {
        self.0.algebra.field().to_string()
    }

    /// Names of the knitted indecomposables.
    fn indecomposables(&self) -> PyResult<Vec<String>> {
        Ok(self.0.universe().map_err(py_err)?.names)
    }

    fn module(&self, name: &str) -> PyResult<PyModuleRef> {
        self.0.resolve(name).map(PyModuleRef).map_err(py_err)
    }

    #[pyo3(signature = (command, n = None, idempotent = None))]
    fn run(&self, command: &str, n: Option<usize>, idempotent: Option<Vec<String>>) -> PyResult<PyReport> {
        let cmd: Command = command.parse().map_err(py_err)?;
        let opts = Options { n, idempotent };
        run(cmd, &self.0, &opts).map(PyReport).map_err(py_err)
    }

    fn __repr__(&self) -> String {
        format!("Instance({:?}, dim {})", self.0.name, self.0.algebra.dim())
    }
}

/// A finite-dimensional right module.
#[pyclass(name = "Module", frozen)]
struct PyModuleRef(RightModule);

#[pymethods]
impl PyModuleRef {
    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn dimension_vector(&self) -> PyResult<Vec<usize>> {
        self.0.dimension_vector().map_err(py_err)
    }

    fn is_indecomposable(&self) -> PyResult<bool> {
        self.0.is_indecomposable().map_err(py_err)
    }

    /// Summands with multiplicities.
    fn decompose(&self) -> PyResult<Vec<(PyModuleRef, usize)>> {
        let d = self.0.decompose().map_err(py_err)?;
        Ok(d.summands.into_iter().map(|(m, k)| (PyModuleRef(m), k)).collect())
    }

    fn direct_sum(&self, other: &PyModuleRef) -> PyResult<PyModuleRef> {
        self.0.direct_sum(&other.0).map(PyModuleRef).map_err(py_err)
    }

    fn dual(&self) -> PyModuleRef {
        PyModuleRef(self.0.dual())
    }

    fn hom_dim(&self, other: &PyModuleRef) -> PyResult<usize> {
        Ok(hom_basis(&self.0, &other.0).map_err(py_err)?.dim())
    }

    fn ext_dim(&self, other: &PyModuleRef, degree: usize) -> PyResult<usize> {
        Ok(ext(&self.0, &other.0, degree).map_err(py_err)?.dim)
    }

    /// `τ_n` of the module; `n = 1` is the classical translate.
    #[pyo3(signature = (n = 1))]
    fn tau(&self, n: usize) -> PyResult<PyModuleRef> {
        tau_n(&self.0, n).map(PyModuleRef).map_err(py_err)
    }

    fn is_isomorphic(&self, other: &PyModuleRef) -> PyResult<bool> {
        Ok(find_isomorphism(&self.0, &other.0).map_err(py_err)?.is_some())
    }

    fn __repr__(&self) -> String {
        format!("Module(dim {})", self.0.dim())
    }
}

/// Outcome of a verification command.
#[pyclass(name = "Report", frozen)]
struct PyReport(Report);

#[pymethods]
impl PyReport {
    #[getter]
    fn passed(&self) -> bool {
        self.0.pass
    }

    #[getter]
    fn command(&self) -> &str {
        &self.0.command
    }

    /// `(name, pass, detail)` per check.
    fn checks(&self) -> Vec<(String, bool, String)> {
        self.0.checks.iter().map(|c| (c.name.clone(), c.pass, c.detail.clone())).collect()
    }

    /// Rows of a table by title.
    fn table(&self, title: &str) -> Option<(Vec<String>, Vec<Vec<String>>)> {
        self.0.get_table(title).map(|t| (t.columns.clone(), t.rows.clone()))
    }

    fn text(&self) -> String {
        self.0.render(Format::Text)
    }

    fn json(&self) -> String {
        self.0.render(Format::Structured)
    }

    fn __repr__(&self) -> String {
        format!("Report({}, pass={})", self.0.command, self.0.pass)
    }
}

/// Names accepted by `Instance.run`.
#[pyfunction]
fn commands() -> Vec<&'static str> {
    Command::ALL.iter().map(|c| c.name()).collect()
}

#[pymodule]
fn recoll_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyInstance>()?;
    m.add_class::<PyModuleRef>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(commands, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_arguments() {
        assert_eq!(field_arg(Some("gf 7")).unwrap(), Some(FieldSpec::Prime(7)));
        assert_eq!(field_arg(None).unwrap(), None);
        assert_eq!(commands().len(), Command::ALL.len());
    }
}
