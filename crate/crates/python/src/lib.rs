use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

use skewgb::binomial::{self, classify};
use skewgb::groebner;
use skewgb::quotient::{self, NormalQuotient, QuotientAlgebra};
use skewgb::{Poly, Side};

create_exception!(skewgb_py, SkewgbError, PyException);

fn err(e: skewgb::Error) -> PyErr {
    match e {
        skewgb::Error::Parse(p) => PyValueError::new_err(p.to_string()),
        e => SkewgbError::new_err(e.to_string()),
    }
}

fn side(s: &str) -> PyResult<Side> {
    s.parse().map_err(PyValueError::new_err)
}

/// A presentation of a finitely presented algebra.
#[pyclass(name = "Presentation", frozen)]
struct PyPresentation {
    inner: skewgb::Presentation,
}

impl PyPresentation {
    fn render_all(&self, ps: &[Poly]) -> Vec<String> {
        ps.iter().map(|p| self.inner.render(p)).collect()
    }
}

#[pymethods]
impl PyPresentation {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyPresentation { inner: skewgb::Presentation::parse(text).map_err(err)? })
    }

    /// One of the bundled example presentations, e.g. `"qplane"`.
    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        let f = skewgb::corpus::fixture(name).ok_or_else(|| PyValueError::new_err(format!("no fixture named {name}")))?;
        Ok(PyPresentation { inner: f.presentation() })
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        self.inner.names.clone()
    }

    #[getter]
    fn relations(&self) -> Vec<String> {
        self.render_all(&self.inner.relations)
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    /// Two-sided normal form of `poly` with respect to the relations as given.
    fn nf(&self, poly: &str) -> PyResult<String> {
        let f = self.inner.poly(poly).map_err(err)?;
        let r = skewgb::rewrite::normal_form(&f, &self.inner.relations, &self.inner.order);
        Ok(self.inner.render(&r))
    }

    /// `"verified"`, `"refuted"` or `"inconclusive"`.
    #[pyo3(signature = (max_deg = 6))]
    fn check_gb(&self, max_deg: u32) -> &'static str {
        groebner::check_gb(&self.inner.relations, &self.inner.order, max_deg).verdict().name()
    }

    /// Reduced basis up to `max_deg` and whether the run was truncated.
    #[pyo3(signature = (max_deg = 6))]
    fn complete(&self, max_deg: u32) -> (Vec<String>, bool) {
        let c = groebner::complete(&self.inner.relations, &self.inner.order, max_deg);
        (self.render_all(&c.basis), c.truncated)
    }

    /// Type tags of the relations, e.g. `["LeftType"]`.
    fn classify(&self) -> PyResult<Vec<&'static str>> {
        let c = classify(&self.inner.relations, &self.inner.order).map_err(err)?;
        Ok(c.tag_names())
    }

    /// Leading homogeneous presentation, if the presentation is almost skew.
    fn leading_homogeneous(&self) -> PyResult<Option<Vec<String>>> {
        let r = binomial::almost_skew_check(&self.inner).map_err(err)?;
        Ok(r.almost.then(|| self.render_all(&r.lh.relations)))
    }

    /// Whether some admissible ordering on normal words exists, by 2-SAT.
    #[pyo3(signature = (side = "two", max_deg = 4))]
    fn ordering_exists(&self, side: &str, max_deg: u32) -> PyResult<bool> {
        let nq = NormalQuotient::from_presentation(&self.inner, max_deg);
        Ok(binomial::ordering_sat(&nq, max_deg, self::side(side)?).map_err(err)?.sat)
    }

    /// Whether `u` and `v` name the same element up to a nonzero scalar.
    #[pyo3(signature = (u, v, max_deg = 6))]
    fn equivalent(&self, u: &str, v: &str, max_deg: u32) -> PyResult<Option<bool>> {
        let nq = NormalQuotient::from_presentation(&self.inner, max_deg);
        let classes = binomial::equiv_classes(&nq, max_deg).map_err(err)?;
        Ok(classes.equivalent(&self.inner.word(u).map_err(err)?, &self.inner.word(v).map_err(err)?))
    }

    #[pyo3(signature = (max_deg = 6, scheme = None, lh = false))]
    fn quotient(&self, max_deg: u32, scheme: Option<&str>, lh: bool) -> PyResult<PyQuotient> {
        let scheme = scheme.map(|s| s.parse()).transpose().map_err(err)?;
        let q = if lh {
            quotient::build_lh_quotient(&self.inner, max_deg, scheme)
        } else {
            quotient::build_quotient_with(&self.inner, max_deg, scheme)
        };
        Ok(PyQuotient { inner: q.map_err(err)? })
    }

    fn __repr__(&self) -> String {
        format!("Presentation({} generators, {} relations)", self.inner.nvars(), self.inner.relations.len())
    }
}

/// A quotient algebra with its normal-word basis, truncated in degree.
#[pyclass(name = "Quotient", frozen)]
struct PyQuotient {
    inner: QuotientAlgebra,
}

#[pymethods]
impl PyQuotient {
    #[getter]
    fn tags(&self) -> Vec<&'static str> {
        self.inner.tags()
    }

    #[getter]
    fn max_deg(&self) -> u32 {
        self.inner.maxdeg()
    }

    fn normal_words(&self) -> Vec<String> {
        self.inner.sorted_normal_words().iter().map(|w| self.inner.render_word(w)).collect()
    }

    fn dimension(&self, degree: u32) -> usize {
        self.inner.dimension_upto(degree)
    }

    fn nf(&self, poly: &str) -> PyResult<String> {
        let f = self.inner.base.presentation().poly(poly).map_err(err)?;
        Ok(self.inner.render(&self.inner.nf(&f).map_err(err)?))
    }

    fn mul(&self, f: &str, g: &str) -> PyResult<String> {
        let p = self.inner.base.presentation();
        let prod = self.inner.mul_poly(&p.poly(f).map_err(err)?, &p.poly(g).map_err(err)?).map_err(err)?;
        Ok(self.inner.render(&prod))
    }

    /// Leading monomial under the quotient ordering; `None` for zero.
    fn lm(&self, poly: &str) -> PyResult<Option<String>> {
        let f = self.inner.base.presentation().poly(poly).map_err(err)?;
        let f = self.inner.nf(&f).map_err(err)?;
        Ok(self.inner.lm(&f).map(|w| self.inner.render_word(&w)))
    }

    #[pyo3(signature = (gens, side = "left", max_deg = None))]
    fn onesided_gb(&self, gens: Vec<String>, side: &str, max_deg: Option<u32>) -> PyResult<Vec<String>> {
        let p = self.inner.base.presentation();
        let gens: Vec<Poly> = gens.iter().map(|t| p.poly(t).map_err(err)).collect::<PyResult<_>>()?;
        let d = max_deg.unwrap_or(self.inner.maxdeg());
        let basis = quotient::onesided_gb(&self.inner, &gens, self::side(side)?, d).map_err(err)?;
        Ok(basis.elements.iter().map(|g| self.inner.render(g)).collect())
    }

    fn is_domain(&self) -> PyResult<bool> {
        Ok(quotient::is_domain_upto(&self.inner.base, self.inner.maxdeg()).map_err(err)?.domain)
    }
}

/// Normal form of `poly` in the algebra presented by `text`, after completion.
#[pyfunction]
#[pyo3(signature = (text, poly, max_deg = 6))]
fn normal_form(text: &str, poly: &str, max_deg: u32) -> PyResult<String> {
    let p = skewgb::Presentation::parse(text).map_err(err)?;
    let nq = NormalQuotient::from_presentation(&p, max_deg);
    let f = p.poly(poly).map_err(err)?;
    Ok(nq.render(&nq.nf(&f).map_err(err)?))
}

#[pymodule]
fn skewgb_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPresentation>()?;
    m.add_class::<PyQuotient>()?;
    m.add_function(wrap_pyfunction!(normal_form, m)?)?;
    m.add("SkewgbError", m.py().get_type::<SkewgbError>())?;
    Ok(())
}
