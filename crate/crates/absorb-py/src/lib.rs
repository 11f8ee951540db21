//! Python bindings for the finite-ring kernel.
//!
//! Exposes rings, ideals and the predicate checkers as Python classes and
//! functions; the heavyweight harnesses (`sweep`, `verify_theorem`,
//! `example21`) return their canonical JSON reports as strings.
//!
//!     import absorb_py as ab
//!     R = ab.Ring("Z/12")
//!     P, I = R.ideal_from_text("6"), R.ideal_from_text("2")
//!     v = ab.is_n_absorbing_i_primary(P, I, 1)
//!     assert not v.holds and v.witness == [2, 3]

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use absorb_core::ideal::{enumerate_ideals, Ideal};
use absorb_core::parse::{parse_element, parse_ideal_gens, parse_ring_spec};
use absorb_core::predicate::{self, ScanOpts, Verdict};
use absorb_core::report::{example_report, to_canonical_json, Report};
use absorb_core::ring::{build_ring, check_axioms, quotient_ring, Elem, RingRef};
use absorb_core::verify::{self, Reading, VerifyParams};
use absorb_core::Error;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::CostCapExceeded { .. } | Error::SizeCapExceeded { .. } => {
            PyRuntimeError::new_err(e.to_string())
        }
        other => PyValueError::new_err(other.to_string()),
    }
}

fn scan_opts(fast: bool, symmetric: bool, force: bool) -> ScanOpts {
    ScanOpts { minimal_witness: !fast, symmetric, force }
}

/// A finite commutative ring built from a spec string such as `Z/12`,
/// `Z/4 x Z/9` or `Z/2[x]/(x^2+x+1)`.
#[pyclass(frozen, name = "Ring")]
struct PyRing {
    inner: RingRef,
}

#[pymethods]
impl PyRing {
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        let parsed = parse_ring_spec(spec).map_err(py_err)?;
        Ok(PyRing { inner: build_ring(&parsed).map_err(py_err)? })
    }

    fn __repr__(&self) -> String {
        format!("Ring({:?}, size={})", self.inner.spec_text(), self.inner.size())
    }

    fn spec(&self) -> String {
        self.inner.spec_text().to_string()
    }

    fn size(&self) -> usize {
        self.inner.size()
    }

    fn zero(&self) -> u32 {
        self.inner.zero().0
    }

    fn one(&self) -> u32 {
        self.inner.one().0
    }

    fn add(&self, a: u32, b: u32) -> PyResult<u32> {
        let (a, b) = (self.elem(a)?, self.elem(b)?);
        Ok(self.inner.add(a, b).0)
    }

    fn mul(&self, a: u32, b: u32) -> PyResult<u32> {
        let (a, b) = (self.elem(a)?, self.elem(b)?);
        Ok(self.inner.mul(a, b).0)
    }

    fn neg(&self, a: u32) -> PyResult<u32> {
        Ok(self.inner.neg(self.elem(a)?).0)
    }

    fn is_unit(&self, a: u32) -> PyResult<bool> {
        Ok(self.inner.is_unit(self.elem(a)?))
    }

    /// Renders an element index as a literal (`7`, `(1,2)`, `x+1`).
    fn element_text(&self, a: u32) -> PyResult<String> {
        Ok(self.inner.element_text(self.elem(a)?))
    }

    /// Parses an element literal back to its index.
    fn parse_element(&self, text: &str) -> PyResult<u32> {
        Ok(parse_element(&self.inner, text).map_err(py_err)?.0)
    }

    /// The ideal generated by the given element indices.
    fn ideal(&self, gens: Vec<u32>) -> PyResult<PyIdeal> {
        let gens: Vec<Elem> = gens
            .into_iter()
            .map(|g| self.elem(g))
            .collect::<PyResult<_>>()?;
        Ok(PyIdeal { inner: Ideal::from_generators(&self.inner, &gens).map_err(py_err)? })
    }

    /// The ideal generated by a comma-separated literal list, e.g. "4" or
    /// "(1,0), (0,3)".
    fn ideal_from_text(&self, text: &str) -> PyResult<PyIdeal> {
        let gens = parse_ideal_gens(&self.inner, text).map_err(py_err)?;
        Ok(PyIdeal { inner: Ideal::from_generators(&self.inner, &gens).map_err(py_err)? })
    }

    /// Every ideal of the ring in (cardinality, members) order.
    fn ideals(&self) -> PyResult<Vec<PyIdeal>> {
        Ok(enumerate_ideals(&self.inner)
            .map_err(py_err)?
            .into_iter()
            .map(|inner| PyIdeal { inner })
            .collect())
    }

    /// The coset ring R/J plus the projection table (base index -> coset
    /// index).
    fn quotient(&self, j: &PyIdeal) -> PyResult<(PyRing, Vec<u32>)> {
        let (ring, proj) = quotient_ring(&self.inner, &j.inner).map_err(py_err)?;
        Ok((PyRing { inner: ring }, proj))
    }

    /// First violated ring axiom, if any (exhaustive over all triples).
    fn check_axioms(&self) -> Option<String> {
        check_axioms(&self.inner)
    }
}

impl PyRing {
    fn elem(&self, a: u32) -> PyResult<Elem> {
        self.inner.elem(a).map_err(py_err)
    }
}

/// An ideal of a `Ring`, held as its full member set.
#[pyclass(frozen, name = "Ideal")]
struct PyIdeal {
    inner: Ideal,
}

#[pymethods]
impl PyIdeal {
    fn __repr__(&self) -> String {
        format!(
            "Ideal(({}) of {})",
            self.inner.gens_text().join(", "),
            self.inner.ring().spec_text()
        )
    }

    fn __eq__(&self, other: &PyIdeal) -> bool {
        self.inner == other.inner
    }

    fn members(&self) -> Vec<u32> {
        self.inner.members().map(|m| m as u32).collect()
    }

    fn member_text(&self) -> Vec<String> {
        let ring = self.inner.ring();
        self.inner
            .members()
            .map(|m| ring.element_text(Elem(m as u32)))
            .collect()
    }

    /// Canonical minimal generator texts.
    fn gens(&self) -> Vec<String> {
        self.inner.gens_text()
    }

    fn contains(&self, x: u32) -> PyResult<bool> {
        let e = self.inner.ring().elem(x).map_err(py_err)?;
        Ok(self.inner.contains_elem(e))
    }

    fn contains_ideal(&self, other: &PyIdeal) -> PyResult<bool> {
        self.inner.contains_ideal(&other.inner).map_err(py_err)
    }

    fn is_proper(&self) -> bool {
        self.inner.is_proper()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn sum(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        Ok(PyIdeal { inner: self.inner.sum(&other.inner).map_err(py_err)? })
    }

    fn product(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        Ok(PyIdeal { inner: self.inner.product(&other.inner).map_err(py_err)? })
    }

    fn intersection(&self, other: &PyIdeal) -> PyResult<PyIdeal> {
        Ok(PyIdeal { inner: self.inner.intersection(&other.inner).map_err(py_err)? })
    }

    fn power(&self, k: usize) -> PyResult<PyIdeal> {
        if k < 1 {
            return Err(PyValueError::new_err("power requires k >= 1"));
        }
        Ok(PyIdeal { inner: self.inner.power(k) })
    }

    fn colon(&self, x: u32) -> PyResult<PyIdeal> {
        let e = self.inner.ring().elem(x).map_err(py_err)?;
        Ok(PyIdeal { inner: self.inner.colon(e) })
    }

    fn radical(&self) -> PyIdeal {
        PyIdeal { inner: self.inner.radical() }
    }
}

/// Predicate outcome: `holds`, the minimal violating tuple (element indices
/// and rendered text) and the failed clause tags.
#[pyclass(frozen, name = "Verdict")]
struct PyVerdict {
    #[pyo3(get)]
    holds: bool,
    #[pyo3(get)]
    witness: Option<Vec<u32>>,
    #[pyo3(get)]
    witness_text: Option<Vec<String>>,
    #[pyo3(get)]
    clauses: Vec<String>,
}

#[pymethods]
impl PyVerdict {
    fn __bool__(&self) -> bool {
        self.holds
    }

    fn __repr__(&self) -> String {
        match &self.witness_text {
            None => "Verdict(holds=True)".to_string(),
            Some(w) => format!("Verdict(holds=False, witness=({}))", w.join(", ")),
        }
    }
}

fn verdict_of(p: &PyIdeal, v: Verdict) -> PyVerdict {
    let ring = p.inner.ring();
    PyVerdict {
        holds: v.holds,
        witness: v.witness_indices(),
        witness_text: v
            .witness
            .as_ref()
            .map(|w| w.iter().map(|&e| ring.element_text(e)).collect()),
        clauses: v.clause_tags,
    }
}

macro_rules! simple_predicate {
    ($pyname:ident, $func:path) => {
        #[pyfunction]
        #[pyo3(signature = (p, *, fast = false, symmetric = false, force = false))]
        fn $pyname(p: &PyIdeal, fast: bool, symmetric: bool, force: bool) -> PyResult<PyVerdict> {
            let v = $func(&p.inner, &scan_opts(fast, symmetric, force)).map_err(py_err)?;
            Ok(verdict_of(p, v))
        }
    };
}

simple_predicate!(is_prime, predicate::is_prime);
simple_predicate!(is_weakly_prime, predicate::is_weakly_prime);
simple_predicate!(is_primary, predicate::is_primary);
simple_predicate!(is_weakly_primary, predicate::is_weakly_primary);

#[pyfunction]
#[pyo3(signature = (p, n, *, fast = false, symmetric = false, force = false))]
fn is_n_absorbing(
    p: &PyIdeal,
    n: usize,
    fast: bool,
    symmetric: bool,
    force: bool,
) -> PyResult<PyVerdict> {
    let v = predicate::is_n_absorbing(&p.inner, n, &scan_opts(fast, symmetric, force))
        .map_err(py_err)?;
    Ok(verdict_of(p, v))
}

#[pyfunction]
#[pyo3(signature = (p, n, *, fast = false, symmetric = false, force = false))]
fn is_n_absorbing_primary(
    p: &PyIdeal,
    n: usize,
    fast: bool,
    symmetric: bool,
    force: bool,
) -> PyResult<PyVerdict> {
    let v = predicate::is_n_absorbing_primary(&p.inner, n, &scan_opts(fast, symmetric, force))
        .map_err(py_err)?;
    Ok(verdict_of(p, v))
}

#[pyfunction]
#[pyo3(signature = (p, n, *, fast = false, symmetric = false, force = false))]
fn is_weakly_n_absorbing_primary(
    p: &PyIdeal,
    n: usize,
    fast: bool,
    symmetric: bool,
    force: bool,
) -> PyResult<PyVerdict> {
    let v = predicate::is_weakly_n_absorbing_primary(
        &p.inner,
        n,
        &scan_opts(fast, symmetric, force),
    )
    .map_err(py_err)?;
    Ok(verdict_of(p, v))
}

#[pyfunction]
#[pyo3(signature = (p, i, *, fast = false, symmetric = false, force = false))]
fn is_i_primary(
    p: &PyIdeal,
    i: &PyIdeal,
    fast: bool,
    symmetric: bool,
    force: bool,
) -> PyResult<PyVerdict> {
    let v = predicate::is_i_primary(&p.inner, &i.inner, &scan_opts(fast, symmetric, force))
        .map_err(py_err)?;
    Ok(verdict_of(p, v))
}

#[pyfunction]
#[pyo3(signature = (p, i, n, *, fast = false, symmetric = false, force = false))]
fn is_n_absorbing_i_primary(
    p: &PyIdeal,
    i: &PyIdeal,
    n: usize,
    fast: bool,
    symmetric: bool,
    force: bool,
) -> PyResult<PyVerdict> {
    let v = predicate::is_n_absorbing_i_primary(
        &p.inner,
        &i.inner,
        n,
        &scan_opts(fast, symmetric, force),
    )
    .map_err(py_err)?;
    Ok(verdict_of(p, v))
}

#[pyfunction]
#[pyo3(signature = (p, i, n, *, fast = false, symmetric = false, force = false))]
fn is_n_absorbing_i_primary_colon(
    p: &PyIdeal,
    i: &PyIdeal,
    n: usize,
    fast: bool,
    symmetric: bool,
    force: bool,
) -> PyResult<PyVerdict> {
    let v = predicate::is_n_absorbing_i_primary_colon(
        &p.inner,
        &i.inner,
        n,
        &scan_opts(fast, symmetric, force),
    )
    .map_err(py_err)?;
    Ok(verdict_of(p, v))
}

/// Smallest obstruction tuple, or None: the product lies in IP, the first n
/// factors multiply outside P, and every omission keeping the last factor
/// stays outside √P.
#[pyfunction]
#[pyo3(signature = (p, i, n, *, fast = false, force = false))]
fn find_i_tuple(
    p: &PyIdeal,
    i: &PyIdeal,
    n: usize,
    fast: bool,
    force: bool,
) -> PyResult<Option<Vec<u32>>> {
    let found = predicate::find_i_tuple(&p.inner, &i.inner, n, &scan_opts(fast, false, force))
        .map_err(py_err)?;
    Ok(found.map(|tuple| tuple.iter().map(|e| e.0).collect()))
}

/// Runs one verification law and returns the canonical JSON report.
#[pyfunction]
#[pyo3(signature = (theorem, *, rings = None, n = None, m = None, k = None, drop = None, reading = "primary", symmetric = false, force = false))]
#[allow(clippy::too_many_arguments)]
fn verify_theorem(
    theorem: &str,
    rings: Option<Vec<String>>,
    n: Option<Vec<usize>>,
    m: Option<Vec<usize>>,
    k: Option<Vec<usize>>,
    drop: Option<String>,
    reading: &str,
    symmetric: bool,
    force: bool,
) -> PyResult<String> {
    let ring_list = match rings {
        None => verify::default_battery().map_err(py_err)?,
        Some(texts) => texts
            .iter()
            .map(|t| build_ring(&parse_ring_spec(t)?))
            .collect::<absorb_core::Result<Vec<_>>>()
            .map_err(py_err)?,
    };
    let reading = match reading {
        "primary" => Reading::Primary,
        "alternate" => Reading::Alternate,
        other => return Err(PyValueError::new_err(format!("unknown reading {other:?}"))),
    };
    let defaults = VerifyParams::default();
    let params = VerifyParams {
        n_list: n.unwrap_or(defaults.n_list),
        m_list: m.unwrap_or(defaults.m_list),
        k_lists: vec![k.unwrap_or_else(|| defaults.k_lists[0].clone())],
        reading,
        dropped: drop,
        scan: scan_opts(false, symmetric, force),
    };
    let report = verify::run_theorem(theorem, &ring_list, &params).map_err(py_err)?;
    serde_json::to_string_pretty(&serde_json::to_value(&report).unwrap())
        .map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

/// Full predicate grid over a ring as a canonical JSON report.
#[pyfunction]
#[pyo3(signature = (ring, n_max = 2, *, symmetric = false, force = false))]
fn sweep(ring: &PyRing, n_max: usize, symmetric: bool, force: bool) -> PyResult<String> {
    let rows =
        verify::sweep(&ring.inner, n_max, &scan_opts(false, symmetric, force)).map_err(py_err)?;
    let mut report = Report::new(format!(
        "sweep --ring {} --n {n_max}",
        ring.inner.spec_text()
    ));
    report.ring = Some(ring.inner.spec_text().to_string());
    report.param("n_max", n_max);
    report.table = Some(rows);
    Ok(to_canonical_json(&report))
}

/// Bounded monomial scan of the worked polynomial-ring construction, as a
/// canonical JSON payload.
#[pyfunction]
#[pyo3(signature = (n, deg_bound = 3, *, force = false))]
fn example21(n: usize, deg_bound: u32, force: bool) -> PyResult<String> {
    let payload = example_report(n, deg_bound, force).map_err(py_err)?;
    serde_json::to_string_pretty(&serde_json::to_value(&payload).unwrap())
        .map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

#[pymodule]
fn absorb_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRing>()?;
    m.add_class::<PyIdeal>()?;
    m.add_class::<PyVerdict>()?;
    m.add_function(wrap_pyfunction!(is_prime, m)?)?;
    m.add_function(wrap_pyfunction!(is_weakly_prime, m)?)?;
    m.add_function(wrap_pyfunction!(is_primary, m)?)?;
    m.add_function(wrap_pyfunction!(is_weakly_primary, m)?)?;
    m.add_function(wrap_pyfunction!(is_n_absorbing, m)?)?;
    m.add_function(wrap_pyfunction!(is_n_absorbing_primary, m)?)?;
    m.add_function(wrap_pyfunction!(is_weakly_n_absorbing_primary, m)?)?;
    m.add_function(wrap_pyfunction!(is_i_primary, m)?)?;
    m.add_function(wrap_pyfunction!(is_n_absorbing_i_primary, m)?)?;
    m.add_function(wrap_pyfunction!(is_n_absorbing_i_primary_colon, m)?)?;
    m.add_function(wrap_pyfunction!(find_i_tuple, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(example21, m)?)?;
    Ok(())
}
