//! Python bindings. Words cross the boundary as `str`; every core error
//! surfaces as `ValueError`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use circword_core::fibonacci::{self, FibIndex};
use circword_core::iterative::{self, DEFAULT_GUARD};
use circword_core::trie;
use circword_core::verify::{self as core_verify, SuiteId, VerifyConfig};
use circword_core::{word as cw_word, Word};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse(s: &str) -> PyResult<Word> {
    s.parse().map_err(err)
}

fn nonempty(s: &str) -> PyResult<Word> {
    let w = parse(s)?;
    if w.is_empty() {
        return Err(err(circword_core::Error::EmptyWord));
    }
    Ok(w)
}

fn strings(ws: impl IntoIterator<Item = Word>) -> Vec<String> {
    ws.into_iter().map(|w| w.to_string()).collect()
}

/// A word up to rotation, stored as its least rotation.
#[pyclass(name = "CircularWord", module = "circword", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyCircularWord(circword_core::CircularWord);

#[pymethods]
impl PyCircularWord {
    /// Accepts a linear word, optionally prefixed with `o:`.
    #[new]
    fn new(word: &str) -> PyResult<Self> {
        word.parse().map(PyCircularWord).map_err(err)
    }

    #[getter]
    fn canonical(&self) -> String {
        self.0.canonical().to_string()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("CircularWord('{}')", self.0.canonical())
    }

    fn __contains__(&self, word: &str) -> PyResult<bool> {
        Ok(self.0.contains(&parse(word)?))
    }

    fn members(&self) -> Vec<String> {
        strings(self.0.members())
    }

    fn weak_periods(&self) -> Vec<usize> {
        self.0.weak_periods()
    }

    fn strong_periods(&self) -> Vec<usize> {
        self.0.strong_periods()
    }

    /// Minimal representations as `(root, n)` pairs, ordered by root.
    fn minimal_representations(&self) -> Vec<(String, usize)> {
        self.0
            .minimal_representations()
            .into_iter()
            .map(|r| (r.root.to_string(), r.n))
            .collect()
    }

    fn encode(&self) -> PyIterativeRepresentation {
        PyIterativeRepresentation(iterative::greedy_encode(&self.0))
    }

    #[pyo3(signature = (guard = DEFAULT_GUARD))]
    fn encode_optimal(&self, guard: usize) -> PyResult<PyIterativeRepresentation> {
        iterative::optimal_encode(&self.0, guard)
            .map(PyIterativeRepresentation)
            .map_err(err)
    }

    fn trie(&self) -> PyConjugateTrie {
        PyConjugateTrie(trie::build_trie(&self.0))
    }
}

/// Tuple `(root, l1, k1, ..., lm)` describing a circular word.
#[pyclass(name = "IterativeRepresentation", module = "circword", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PyIterativeRepresentation(circword_core::IterativeRepresentation);

#[pymethods]
impl PyIterativeRepresentation {
    /// Parses the comma-separated text form `root,l1,k1,...,lm`.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyIterativeRepresentation).map_err(err)
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        circword_core::IterativeRepresentation::from_json(s)
            .map(PyIterativeRepresentation)
            .map_err(err)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[getter]
    fn root(&self) -> String {
        self.0.root.to_string()
    }

    #[getter]
    fn steps(&self) -> Vec<(usize, usize)> {
        self.0.steps.clone()
    }

    #[getter]
    fn final_len(&self) -> usize {
        self.0.final_len
    }

    #[getter]
    fn m(&self) -> usize {
        self.0.m()
    }

    fn fields(&self) -> Vec<usize> {
        self.0.fields()
    }

    fn decode(&self) -> PyResult<PyCircularWord> {
        self.0.decode().map(PyCircularWord).map_err(err)
    }

    #[pyo3(signature = (shift = 0))]
    fn decode_linear(&self, shift: usize) -> PyResult<String> {
        self.0.decode_linear(shift).map(|w| w.to_string()).map_err(err)
    }

    fn is_strictly_monotone(&self) -> bool {
        self.0.is_strictly_monotone()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("IterativeRepresentation('{}')", self.0)
    }
}

/// Trie of the distinct rotations of a circular word.
#[pyclass(name = "ConjugateTrie", module = "circword", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyConjugateTrie(circword_core::ConjugateTrie);

#[pymethods]
impl PyConjugateTrie {
    #[new]
    fn new(word: &str) -> PyResult<Self> {
        let cw: circword_core::CircularWord = word.parse().map_err(err)?;
        Ok(PyConjugateTrie(trie::build_trie(&cw)))
    }

    #[getter]
    fn source(&self) -> PyCircularWord {
        PyCircularWord(self.0.source().clone())
    }

    #[getter]
    fn node_count(&self) -> usize {
        self.0.nodes().len()
    }

    #[getter]
    fn leaf_count(&self) -> usize {
        self.0.leaf_count()
    }

    #[getter]
    fn depth(&self) -> usize {
        self.0.depth()
    }

    fn level_counts(&self) -> Vec<usize> {
        self.0.level_counts()
    }

    fn words(&self) -> Vec<String> {
        strings(self.0.words())
    }

    fn branching_profile(&self) -> Vec<usize> {
        self.0.branching_profile().counts
    }

    fn branching_gaps(&self) -> Vec<usize> {
        self.0.branching_gaps()
    }

    fn is_subtree_of(&self, other: &PyConjugateTrie) -> bool {
        self.0.is_subtree_of(&other.0)
    }

    fn check_cascade(&self) -> bool {
        trie::check_branching_cascade(&self.0)
    }

    fn check_level_n_minus_2(&self) -> PyResult<bool> {
        trie::check_level_n_minus_2(&self.0).map_err(err)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn to_dot(&self) -> String {
        self.0.to_dot()
    }
}

#[pyfunction]
fn shift(word: &str, l: i64) -> PyResult<String> {
    cw_word::shift(&parse(word)?, l).map(|w| w.to_string()).map_err(err)
}

#[pyfunction]
fn fractional_power(word: &str, p: usize) -> PyResult<String> {
    cw_word::fractional_power(&parse(word)?, p).map(|w| w.to_string()).map_err(err)
}

#[pyfunction]
fn periods(word: &str) -> PyResult<Vec<usize>> {
    cw_word::periods(&nonempty(word)?).map_err(err)
}

#[pyfunction]
fn borders(word: &str) -> PyResult<Vec<usize>> {
    cw_word::borders(&nonempty(word)?).map_err(err)
}

#[pyfunction]
fn primitive_root(word: &str) -> PyResult<String> {
    cw_word::primitive_root(&nonempty(word)?).map(|w| w.to_string()).map_err(err)
}

#[pyfunction]
fn is_primitive(word: &str) -> PyResult<bool> {
    cw_word::is_primitive(&nonempty(word)?).map_err(err)
}

#[pyfunction]
fn conjugates(word: &str) -> PyResult<Vec<String>> {
    cw_word::conjugates(&nonempty(word)?).map(strings).map_err(err)
}

/// Least rotation and the shift that produces it.
#[pyfunction]
fn canonical_rotation(word: &str) -> PyResult<(String, usize)> {
    cw_word::canonical_rotation(&nonempty(word)?)
        .map(|(w, i)| (w.to_string(), i))
        .map_err(err)
}

#[pyfunction]
fn encode(word: &str) -> PyResult<PyIterativeRepresentation> {
    Ok(PyCircularWord::new(word)?.encode())
}

#[pyfunction]
#[pyo3(signature = (word, guard = DEFAULT_GUARD))]
fn encode_optimal(word: &str, guard: usize) -> PyResult<PyIterativeRepresentation> {
    PyCircularWord::new(word)?.encode_optimal(guard)
}

#[pyfunction]
fn decode(text: &str) -> PyResult<PyCircularWord> {
    PyIterativeRepresentation::new(text)?.decode()
}

fn fib_index(i: usize) -> PyResult<FibIndex> {
    FibIndex::new(i).map_err(err)
}

#[pyfunction]
fn fib_word(i: usize) -> PyResult<String> {
    fibonacci::fib_word(fib_index(i)?).map(|w| w.to_string()).map_err(err)
}

#[pyfunction]
fn fib_trie(i: usize) -> PyResult<PyConjugateTrie> {
    fibonacci::fib_trie(fib_index(i)?).map(PyConjugateTrie).map_err(err)
}

#[pyfunction]
fn squares_in(word: &str) -> PyResult<Vec<String>> {
    fibonacci::squares_in(&parse(word)?).map(strings).map_err(err)
}

#[pyfunction]
fn check_fib_branching(i: usize) -> PyResult<bool> {
    fibonacci::check_fib_branching(fib_index(i)?).map_err(err)
}

#[pyfunction]
fn check_fib_factor_count(i: usize) -> PyResult<bool> {
    fibonacci::check_fib_factor_count(fib_index(i)?).map_err(err)
}

#[pyfunction]
fn check_fib_gaps(i: usize) -> PyResult<bool> {
    fibonacci::check_fib_gaps(fib_index(i)?).map_err(err)
}

#[pyfunction]
fn check_fib_subtrees(i: usize, j: usize) -> PyResult<bool> {
    fibonacci::check_fib_subtrees(fib_index(i)?, fib_index(j)?).map_err(err)
}

/// Runs a suite by name; returns violations as `(suite, input, detail)`.
#[pyfunction]
#[pyo3(signature = (suite, max_len = core_verify::DEFAULT_MAX_LEN, fib_max = core_verify::DEFAULT_FIB_MAX, jobs = 0))]
fn verify(
    py: Python<'_>,
    suite: &str,
    max_len: usize,
    fib_max: usize,
    jobs: usize,
) -> PyResult<Vec<(String, String, String)>> {
    let id: SuiteId = suite.parse().map_err(err)?;
    let cfg = VerifyConfig {
        max_len,
        fib_max,
        jobs,
    };
    let found = py.detach(|| core_verify::run_suite(id, &cfg)).map_err(err)?;
    Ok(found
        .into_iter()
        .map(|v| (v.suite.to_string(), v.input, v.detail))
        .collect())
}

#[pymodule]
fn circword(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCircularWord>()?;
    m.add_class::<PyIterativeRepresentation>()?;
    m.add_class::<PyConjugateTrie>()?;
    m.add_function(wrap_pyfunction!(shift, m)?)?;
    m.add_function(wrap_pyfunction!(fractional_power, m)?)?;
    m.add_function(wrap_pyfunction!(periods, m)?)?;
    m.add_function(wrap_pyfunction!(borders, m)?)?;
    m.add_function(wrap_pyfunction!(primitive_root, m)?)?;
    m.add_function(wrap_pyfunction!(is_primitive, m)?)?;
    m.add_function(wrap_pyfunction!(conjugates, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_rotation, m)?)?;
    m.add_function(wrap_pyfunction!(encode, m)?)?;
    m.add_function(wrap_pyfunction!(encode_optimal, m)?)?;
    m.add_function(wrap_pyfunction!(decode, m)?)?;
    m.add_function(wrap_pyfunction!(fib_word, m)?)?;
    m.add_function(wrap_pyfunction!(fib_trie, m)?)?;
    m.add_function(wrap_pyfunction!(squares_in, m)?)?;
    m.add_function(wrap_pyfunction!(check_fib_branching, m)?)?;
    m.add_function(wrap_pyfunction!(check_fib_factor_count, m)?)?;
    m.add_function(wrap_pyfunction!(check_fib_gaps, m)?)?;
    m.add_function(wrap_pyfunction!(check_fib_subtrees, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("SUITES", SuiteId::ALL.iter().map(|s| s.name()).collect::<Vec<_>>())?;
    Ok(())
}
