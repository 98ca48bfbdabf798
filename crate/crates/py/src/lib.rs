use pyo3::prelude::*;

#[pymodule]
fn psapprox_py(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}
