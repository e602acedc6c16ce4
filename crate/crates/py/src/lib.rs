//! Python bindings. Categories, set-functors and topologies cross the
//! boundary as JSON strings in the same formats the command-line tool reads.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use fincat::json::{self as fj, Loader, Variance};
use fincat::setfun::DEFAULT_BUDGET;
use fincat::CatError;

fn err(e: CatError) -> PyErr {
    match e {
        CatError::SearchBudgetExceeded { .. } => PyRuntimeError::new_err(format!("{}: {e}", e.name())),
        _ => PyValueError::new_err(format!("{}: {e}", e.name())),
    }
}

fn parse(text: &str) -> PyResult<serde_json::Value> {
    fj::parse(text).map_err(err)
}

/// A finite category.
#[pyclass(frozen, skip_from_py_object, module = "pyfincat")]
#[derive(Clone)]
struct Category {
    inner: fincat::FinCat,
}

#[pymethods]
impl Category {
    /// Reads the JSON category format; identities may be omitted from the
    /// composition table.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Category> {
        let v = parse(text)?;
        Ok(Category {
            inner: Loader::default().category(&v).map_err(err)?,
        })
    }

    /// One of TERM, ARROW2, PAIR, SPAN, COSPAN, IDEM, DISCRETE2, Z2.
    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Category> {
        fincat::fixtures::all()
            .into_iter()
            .find(|(n, _)| *n == name)
            .map(|(_, c)| Category { inner: c })
            .ok_or_else(|| PyValueError::new_err(format!("unknown fixture `{name}`")))
    }

    fn to_json(&self) -> String {
        fj::category_to_value(&self.inner).to_string()
    }

    #[getter]
    fn objects(&self) -> Vec<String> {
        self.inner.objects().to_vec()
    }

    /// `(id, dom, cod)` for every arrow, identities included.
    #[getter]
    fn arrows(&self) -> Vec<(String, String, String)> {
        let c = &self.inner;
        c.arrows()
            .iter()
            .map(|a| (a.id.clone(), c.object_name(a.dom).to_string(), c.object_name(a.cod).to_string()))
            .collect()
    }

    fn hom(&self, x: &str, y: &str) -> PyResult<Vec<String>> {
        let c = &self.inner;
        let (x, y) = (c.object_index(x).map_err(err)?, c.object_index(y).map_err(err)?);
        Ok(c.hom(x, y).iter().map(|&f| c.arrow_name(f).to_string()).collect())
    }

    fn compose(&self, g: &str, f: &str) -> PyResult<Option<String>> {
        let c = &self.inner;
        let (g, f) = (c.arrow_index(g).map_err(err)?, c.arrow_index(f).map_err(err)?);
        Ok(c.compose(g, f).map(|h| c.arrow_name(h).to_string()))
    }

    fn opposite(&self) -> Category {
        Category {
            inner: self.inner.opposite(),
        }
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_filtered(&self) -> bool {
        self.inner.is_filtered()
    }

    /// `(object, arrow, is_identity)` for each idempotent.
    fn idempotents(&self) -> Vec<(String, String, bool)> {
        let c = &self.inner;
        fincat::karoubi::idempotents(c)
            .into_iter()
            .map(|(o, e)| (c.object_name(o).to_string(), c.arrow_name(e).to_string(), c.is_identity(e)))
            .collect()
    }

    fn karoubi_envelope(&self) -> PyResult<Category> {
        let (k, _) = fincat::karoubi::karoubi_envelope(&self.inner).map_err(err)?;
        Ok(Category { inner: k })
    }

    fn is_cauchy_complete(&self) -> bool {
        fincat::karoubi::is_cauchy_complete(&self.inner)
    }

    #[pyo3(signature = (other, budget = DEFAULT_BUDGET))]
    fn is_equivalent(&self, other: &Category, budget: u64) -> PyResult<bool> {
        Ok(fincat::karoubi::equivalent_categories(&self.inner, &other.inner, budget)
            .map_err(err)?
            .is_some())
    }

    fn __len__(&self) -> usize {
        self.inner.num_arrows()
    }

    fn __repr__(&self) -> String {
        format!(
            "Category(objects={:?}, arrows={})",
            self.inner.objects(),
            self.inner.num_arrows()
        )
    }
}

/// A set-valued functor, covariant or a presheaf on its written base.
#[pyclass(frozen, skip_from_py_object, module = "pyfincat")]
#[derive(Clone)]
struct SetFunctor {
    inner: fincat::SetFunctor,
    variance: Variance,
}

impl SetFunctor {
    fn presheaf(&self) -> PyResult<&fincat::SetFunctor> {
        match self.variance {
            Variance::Presheaf => Ok(&self.inner),
            Variance::Covariant => Err(PyValueError::new_err("expected a presheaf")),
        }
    }

    fn covariant(&self) -> PyResult<&fincat::SetFunctor> {
        match self.variance {
            Variance::Covariant => Ok(&self.inner),
            Variance::Presheaf => Err(PyValueError::new_err("expected a covariant functor")),
        }
    }
}

#[pymethods]
impl SetFunctor {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<SetFunctor> {
        let v = parse(text)?;
        let loaded = Loader::default().set_functor(&v).map_err(err)?;
        Ok(SetFunctor {
            inner: loaded.functor,
            variance: loaded.variance,
        })
    }

    /// The representable presheaf `Hom(-, obj)`.
    #[staticmethod]
    fn yoneda(cat: &Category, obj: &str) -> PyResult<SetFunctor> {
        Ok(SetFunctor {
            inner: fincat::setfun::yoneda_named(&cat.inner, obj).map_err(err)?,
            variance: Variance::Presheaf,
        })
    }

    fn to_json(&self) -> String {
        fj::set_functor_to_value(&self.inner, self.variance).to_string()
    }

    #[getter]
    fn variance(&self) -> &'static str {
        self.variance.as_str()
    }

    /// Value sets keyed by object.
    fn sets(&self) -> Vec<(String, Vec<String>)> {
        let base = self.inner.base();
        (0..base.num_objects())
            .map(|c| (base.object_name(c).to_string(), self.inner.set(c).to_vec()))
            .collect()
    }

    /// Classes of the colimit, each as a list of `(object, element)`.
    fn colimit(&self) -> Vec<Vec<(String, String)>> {
        classes(&fincat::colimit(&self.inner))
    }

    /// Compatible families of the limit, rendered as strings.
    fn limit(&self) -> Vec<String> {
        let l = fincat::limit(&self.inner);
        (0..l.len()).map(|k| l.render(&self.inner, k)).collect()
    }

    /// `None` if flat, otherwise the failing condition and its witness.
    fn flatness_violation(&self) -> PyResult<Option<(String, String)>> {
        Ok(fincat::flat::flatness(self.presheaf()?).map(|v| (v.condition().to_string(), v.to_string())))
    }

    fn is_flat(&self) -> PyResult<bool> {
        Ok(fincat::flat::is_flat(self.presheaf()?))
    }

    fn is_flat_via_elements(&self) -> PyResult<bool> {
        fincat::flat::is_flat_via_elements(self.presheaf()?).map_err(err)
    }

    /// Number of natural transformations into `other`.
    #[pyo3(signature = (other, budget = DEFAULT_BUDGET))]
    fn count_nat(&self, other: &SetFunctor, budget: u64) -> PyResult<usize> {
        if self.variance != other.variance {
            return Err(PyValueError::new_err("variance differs"));
        }
        Ok(fincat::setfun::nat_transformations(&self.inner, &other.inner, budget)
            .map_err(err)?
            .len())
    }

    fn __repr__(&self) -> String {
        format!("SetFunctor({}, {:?})", self.variance.as_str(), self.sets())
    }
}

fn classes(q: &fincat::QuotientSet) -> Vec<Vec<(String, String)>> {
    q.classes()
        .iter()
        .map(|cls| {
            cls.iter()
                .map(|&p| {
                    let (b, x) = q.carrier_element(p);
                    (q.tag(b).to_string(), q.block_elements(b)[x].clone())
                })
                .collect()
        })
        .collect()
}

/// A Grothendieck topology on a category.
#[pyclass(frozen, module = "pyfincat")]
struct Topology {
    inner: fincat::sites::Topology,
}

#[pymethods]
impl Topology {
    /// `{"covers": {obj: [[arrow ids]...]}}`, each list closed under
    /// precomposition.
    #[staticmethod]
    fn from_json(cat: &Category, text: &str) -> PyResult<Topology> {
        let v = parse(text)?;
        Ok(Topology {
            inner: Loader::default().topology(&cat.inner, &v).map_err(err)?,
        })
    }

    /// The least topology containing the given sieves, same format.
    #[staticmethod]
    fn generate(cat: &Category, text: &str) -> PyResult<Topology> {
        let v = parse(text)?;
        let coverage = Loader::default().coverage(&cat.inner, &v).map_err(err)?;
        Ok(Topology {
            inner: fincat::sites::generate_topology(&cat.inner, &coverage).map_err(err)?,
        })
    }

    fn to_json(&self) -> String {
        fj::topology_to_value(&self.inner).to_string()
    }

    fn irreducibles(&self) -> Vec<String> {
        let c = self.inner.base();
        fincat::sites::irreducibles(&self.inner)
            .into_iter()
            .map(|o| c.object_name(o).to_string())
            .collect()
    }

    fn is_rigid(&self) -> bool {
        fincat::sites::is_rigid(&self.inner)
    }

    fn is_sheaf(&self, presheaf: &SetFunctor) -> PyResult<bool> {
        fincat::sites::is_sheaf(presheaf.presheaf()?, &self.inner).map_err(err)
    }
}

/// Classes of `F ⊗ P` for a presheaf `F` and a covariant `P`.
#[pyfunction]
fn tensor(presheaf: &SetFunctor, covariant: &SetFunctor) -> PyResult<Vec<Vec<(String, String)>>> {
    let q = fincat::tensor(presheaf.presheaf()?, covariant.covariant()?).map_err(err)?;
    Ok(classes(&q))
}

/// Whether both colimits over categories of elements agree with the tensor.
#[pyfunction]
fn tensor_commutes(presheaf: &SetFunctor, covariant: &SetFunctor) -> PyResult<bool> {
    match fincat::colimits::tensor_commute_check(presheaf.presheaf()?, covariant.covariant()?) {
        Ok(_) => Ok(true),
        Err(CatError::CommutationFailure { .. }) => Ok(false),
        Err(e) => Err(err(e)),
    }
}

/// `(suite, cases, skipped, failures)` for each randomized self-test suite.
#[pyfunction]
#[pyo3(signature = (seed = 0, budget = DEFAULT_BUDGET))]
fn selftest(seed: u64, budget: u64) -> PyResult<Vec<(String, usize, usize, usize)>> {
    Ok(fincat::suites::selftest(seed, budget)
        .map_err(err)?
        .into_iter()
        .map(|r| (r.name.to_string(), r.cases, r.skipped, r.failures.len()))
        .collect())
}

#[pymodule]
fn pyfincat(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Category>()?;
    m.add_class::<SetFunctor>()?;
    m.add_class::<Topology>()?;
    m.add_function(wrap_pyfunction!(tensor, m)?)?;
    m.add_function(wrap_pyfunction!(tensor_commutes, m)?)?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    Ok(())
}
