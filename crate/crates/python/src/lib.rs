//! Python bindings. Exact values cross the boundary as strings
//! (`"1 + a5"`, `"-2/3"`) so nothing is rounded.

use gkz_core::exact::affine::fmt_rational;
use gkz_core::exact::{integer_kernel_basis, ParamVector};
use gkz_core::hyper::{self, Curve};
use gkz_core::pairs::{standard_pairs, top_pair_count};
use gkz_core::toric::binomial::fmt_monomial;
use gkz_core::toric::groebner_fan_monomial_initial_ideals;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

create_exception!(gkz, GkzError, PyException);

fn err(e: gkz_core::Error) -> PyErr {
    match e {
        gkz_core::Error::Parse(_) | gkz_core::Error::InvariantViolation { .. } => PyValueError::new_err(e.to_string()),
        _ => GkzError::new_err(e.to_string()),
    }
}

fn strings(v: &ParamVector) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// An integer `d × n` matrix with first row all ones and `n - d = 2`.
#[pyclass(module = "gkz", frozen)]
pub struct Configuration {
    inner: gkz_core::exact::Configuration,
}

#[pymethods]
impl Configuration {
    #[new]
    fn new(rows: Vec<Vec<i64>>) -> PyResult<Self> {
        Ok(Configuration {
            inner: gkz_core::exact::Configuration::new(rows).map_err(err)?,
        })
    }

    /// Parse the CLI input format (text or JSON).
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Configuration {
            inner: gkz_core::cli::parse_configuration(text).map_err(err)?,
        })
    }

    #[getter]
    fn d(&self) -> usize {
        self.inner.d()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<i64>> {
        self.inner.rows().to_vec()
    }

    /// Rows of the HNF kernel basis.
    fn kernel_basis(&self) -> PyResult<Vec<[i64; 2]>> {
        Ok(integer_kernel_basis(&self.inner).map_err(err)?.rows().to_vec())
    }

    #[pyo3(signature = (seed = 0))]
    fn volume(&self, seed: u64) -> PyResult<u64> {
        hyper::volume(&self.inner, seed).map_err(err)
    }

    #[pyo3(signature = (bound = None))]
    fn is_cohen_macaulay(&self, bound: Option<i64>) -> PyResult<bool> {
        Ok(hyper::is_cohen_macaulay_codim2(&self.inner, bound).map_err(err)?.is_cm)
    }

    /// Minimal generators of every monomial initial ideal, as monomial strings.
    fn initial_ideals(&self) -> PyResult<Vec<Vec<String>>> {
        let b = integer_kernel_basis(&self.inner).map_err(err)?;
        Ok(groebner_fan_monomial_initial_ideals(&b)
            .iter()
            .map(|c| c.ideal.generators().iter().map(|g| fmt_monomial(g)).collect())
            .collect())
    }

    /// `(top, total)` standard pair counts per initial ideal.
    fn standard_pair_counts(&self) -> PyResult<Vec<(usize, usize)>> {
        let b = integer_kernel_basis(&self.inner).map_err(err)?;
        Ok(groebner_fan_monomial_initial_ideals(&b)
            .iter()
            .map(|c| {
                let p = standard_pairs(&c.ideal);
                (top_pair_count(&p, self.inner.d()), p.len())
            })
            .collect())
    }

    #[pyo3(signature = (bound = None))]
    fn construct(&self, bound: Option<i64>) -> PyResult<Construction> {
        Ok(Construction {
            inner: hyper::construct_exceptional(&self.inner, bound).map_err(err)?,
        })
    }

    /// Names and verdicts of the five construction witness checks.
    #[pyo3(signature = (seed = 0, bound = None))]
    fn verify_witnesses(&self, seed: u64, bound: Option<i64>) -> PyResult<Vec<(String, bool)>> {
        let r = hyper::verify_construction_witnesses(&self.inner, bound, seed).map_err(err)?;
        Ok(r.checks.iter().map(|c| (c.name.to_string(), c.passed)).collect())
    }

    /// Components of the arrangement bounding the exceptional set.
    fn arrangement(&self) -> PyResult<Vec<String>> {
        let a = hyper::exceptional_arrangement(&self.inner).map_err(err)?;
        Ok(a.components().iter().map(ToString::to_string).collect())
    }

    /// `d = 2` only: the full exceptional set.
    fn exceptional_set(&self) -> PyResult<Vec<[i64; 2]>> {
        Ok(Curve::from_configuration(&self.inner).map_err(err)?.exceptional_set())
    }

    /// `d = 2` only.
    fn is_exceptional(&self, beta: [i64; 2]) -> PyResult<bool> {
        hyper::cdd_exceptional_d2(&self.inner, beta).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Configuration({:?})", self.inner.rows())
    }
}

/// The exceptional parameter built from a normalized Gale diagram.
#[pyclass(module = "gkz", frozen)]
pub struct Construction {
    inner: hyper::Construction,
}

#[pymethods]
impl Construction {
    /// Column order as 0-based indices into the input.
    #[getter]
    fn permutation(&self) -> Vec<usize> {
        self.inner.normal.permutation().to_vec()
    }

    #[getter]
    fn gale(&self) -> Vec<[i64; 2]> {
        self.inner.b().rows().to_vec()
    }

    #[getter]
    fn v(&self) -> Vec<String> {
        strings(&self.inner.v)
    }

    #[getter]
    fn beta(&self) -> Vec<String> {
        strings(&self.inner.beta)
    }

    /// The family as `(point, directions)` of exact rationals.
    fn family(&self) -> PyResult<(Vec<String>, Vec<Vec<String>>)> {
        let f = hyper::exceptional_family(&self.inner).map_err(err)?;
        Ok((
            f.point().iter().map(fmt_rational).collect(),
            f.directions()
                .iter()
                .map(|d| d.iter().map(fmt_rational).collect())
                .collect(),
        ))
    }

    /// Log-free exponents at `beta` under the refinement of `-e3` by a
    /// seeded generic weight.
    #[pyo3(signature = (seed = 0))]
    fn logfree_exponents(&self, seed: u64) -> PyResult<Vec<Vec<String>>> {
        let c = &self.inner;
        let primary = gkz_core::toric::order::unit(c.normal.n(), 2, -1);
        let r = gkz_core::toric::perturb::generic_refinement(c.b(), &primary, seed).map_err(err)?;
        let f = hyper::logfree_exponents(&c.normal.a, c.b(), &c.beta, &r.ideal).map_err(err)?;
        Ok(f.iter().map(|e| strings(&e.u)).collect())
    }

    fn __repr__(&self) -> String {
        format!("Construction(beta={})", self.inner.beta)
    }
}

#[pymodule]
pub fn gkz(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Configuration>()?;
    m.add_class::<Construction>()?;
    m.add("GkzError", m.py().get_type::<GkzError>())?;
    Ok(())
}
