//! Python bindings for the `cliquecover` solvers.
//!
//! Vertices are 0-based integers. Every solver returns a [`Result`] with the
//! answer, the witness cover, exact clique weights where the problem has
//! them (as `fractions.Fraction`), and search counters.

#[pyo3::pymodule]
mod pycliquecover {
    use cliquecover::drivers::{self, Engine};
    use cliquecover::f2::{self, AewcdOptions};
    use cliquecover::instance::{
        rational_string, AewcdInstance, AwecpInstance, ProblemInstance, SearchLimits, SearchResult, Solution,
    };
    use cliquecover::{degeneracy::DegeneracyContext, io, verify};
    use pyo3::exceptions::PyValueError;
    use pyo3::prelude::*;

    fn value_error(e: impl std::fmt::Display) -> PyErr {
        PyValueError::new_err(e.to_string())
    }

    fn engine(name: &str) -> PyResult<Engine> {
        name.parse().map_err(PyValueError::new_err)
    }

    #[pyclass(frozen)]
    pub struct Graph {
        inner: cliquecover::Graph,
    }

    #[pymethods]
    impl Graph {
        #[new]
        fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
            Ok(Graph { inner: cliquecover::Graph::new(n, edges).map_err(value_error)? })
        }

        /// Parses `u v` lines, optionally preceded by a vertex count line.
        #[staticmethod]
        fn from_edge_list(text: &str) -> PyResult<Self> {
            Ok(Graph { inner: io::parse_edge_list(text).map_err(value_error)? })
        }

        /// Parses DIMACS `p edge` / `e u v` text (1-based in the file).
        #[staticmethod]
        fn from_dimacs(text: &str) -> PyResult<Self> {
            Ok(Graph { inner: io::parse_dimacs(text).map_err(value_error)? })
        }

        fn to_edge_list(&self) -> String {
            io::serialize_edge_list(&self.inner)
        }

        #[getter]
        fn n(&self) -> usize {
            self.inner.n()
        }

        #[getter]
        fn m(&self) -> usize {
            self.inner.m()
        }

        fn edges(&self) -> Vec<(usize, usize)> {
            self.inner.edges().to_vec()
        }

        fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
            if v >= self.inner.n() {
                return Err(PyValueError::new_err(format!("vertex {v} out of range")));
            }
            Ok(self.inner.neighbors(v).to_vec())
        }

        fn has_edge(&self, u: usize, v: usize) -> bool {
            u < self.inner.n() && v < self.inner.n() && self.inner.has_edge(u, v)
        }

        fn degeneracy(&self) -> usize {
            DegeneracyContext::new(&self.inner).d
        }

        fn complement(&self) -> Graph {
            Graph { inner: self.inner.complement() }
        }

        fn __len__(&self) -> usize {
            self.inner.n()
        }

        fn __repr__(&self) -> String {
            format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
        }
    }

    #[pyclass(frozen, name = "Result")]
    pub struct SolveResult {
        #[pyo3(get)]
        answer: bool,
        #[pyo3(get)]
        cover: Option<Vec<Vec<usize>>>,
        gamma: Option<Vec<String>>,
        /// Optimum for the minimisers.
        #[pyo3(get)]
        value: Option<usize>,
        #[pyo3(get)]
        nodes: u64,
        #[pyo3(get)]
        depth: usize,
        #[pyo3(get)]
        max_branching: usize,
        #[pyo3(get)]
        time_ms: f64,
    }

    impl SolveResult {
        fn of(r: SearchResult) -> Self {
            let s = r.stats;
            let (cover, gamma) = match r.solution {
                Some(Solution { cliques, gamma }) => {
                    (Some(cliques), gamma.map(|g| g.iter().map(rational_string).collect()))
                }
                None => (None, None),
            };
            SolveResult {
                answer: cover.is_some(),
                cover,
                gamma,
                value: None,
                nodes: s.nodes,
                depth: s.max_depth,
                max_branching: s.max_branching,
                time_ms: s.time_ms(),
            }
        }

        fn minimum(m: drivers::Minimum) -> Self {
            let mut r = SolveResult::of(SearchResult { solution: Some(Solution::cover(m.cover)), stats: m.stats });
            r.value = Some(m.value);
            r
        }
    }

    #[pymethods]
    impl SolveResult {
        /// Clique weights as `fractions.Fraction`, parallel to `cover`.
        #[getter]
        fn gamma<'py>(&self, py: Python<'py>) -> PyResult<Option<Vec<Bound<'py, PyAny>>>> {
            let Some(g) = &self.gamma else { return Ok(None) };
            let fraction = py.import("fractions")?.getattr("Fraction")?;
            g.iter().map(|s| fraction.call1((s.as_str(),))).collect::<PyResult<_>>().map(Some)
        }

        fn __bool__(&self) -> bool {
            self.answer
        }

        fn __repr__(&self) -> String {
            let n = self.cover.as_ref().map_or(0, Vec::len);
            let answer = if self.answer { "True" } else { "False" };
            format!("Result(answer={answer}, cliques={n}, nodes={})", self.nodes)
        }
    }

    fn limits(timeout_s: Option<f64>) -> PyResult<SearchLimits> {
        match timeout_s {
            None => Ok(SearchLimits::default()),
            Some(s) => {
                let d = std::time::Duration::try_from_secs_f64(s).map_err(value_error)?;
                Ok(SearchLimits::timeout(d))
            }
        }
    }

    /// Edge clique cover with at most `k` cliques.
    #[pyfunction]
    #[pyo3(signature = (g, k, engine = "f2", reduce = true, timeout_s = None))]
    fn solve_ecc(g: &Graph, k: usize, engine: &str, reduce: bool, timeout_s: Option<f64>) -> PyResult<SolveResult> {
        let out = drivers::solve_ecc(&g.inner, k, self::engine(engine)?, reduce, limits(timeout_s)?);
        Ok(SolveResult::of(out.result))
    }

    /// Edge clique cover with total clique size at most `t`.
    #[pyfunction]
    #[pyo3(signature = (g, t, engine = "f2", reduce = true, timeout_s = None))]
    fn solve_acc(g: &Graph, t: usize, engine: &str, reduce: bool, timeout_s: Option<f64>) -> PyResult<SolveResult> {
        let out = drivers::solve_acc(&g.inner, t, self::engine(engine)?, reduce, limits(timeout_s)?).map_err(value_error)?;
        Ok(SolveResult::of(out.result))
    }

    #[pyfunction]
    #[pyo3(signature = (g, engine = "f2", reduce = true))]
    fn min_ecc(g: &Graph, engine: &str, reduce: bool) -> PyResult<SolveResult> {
        Ok(SolveResult::minimum(drivers::min_ecc(&g.inner, self::engine(engine)?, reduce)))
    }

    #[pyfunction]
    #[pyo3(signature = (g, engine = "f2"))]
    fn min_assignment_cover(g: &Graph, engine: &str) -> PyResult<SolveResult> {
        let m = drivers::min_assignment_cover(&g.inner, self::engine(engine)?).map_err(value_error)?;
        Ok(SolveResult::minimum(m))
    }

    /// Weighted edge clique partition; `weights` uses the weight-file format
    /// (`u v w` per edge, `v s W` per annotated vertex).
    #[pyfunction]
    fn solve_wecp(g: &Graph, k: usize, weights: &str) -> PyResult<SolveResult> {
        let w = io::parse_weights(weights).map_err(value_error)?;
        let inst = AwecpInstance::from_weights(g.inner.clone(), k, &w).map_err(value_error)?;
        Ok(SolveResult::of(f2::awecps(&inst)))
    }

    /// Weighted edge clique decomposition with rational clique weights.
    /// With `wmax`, weights are restricted to integers in `1..=wmax`.
    #[pyfunction]
    #[pyo3(signature = (g, k, weights, wmax = None, merged = false))]
    fn solve_ewcd(g: &Graph, k: usize, weights: &str, wmax: Option<u64>, merged: bool) -> PyResult<SolveResult> {
        let w = io::parse_weights(weights).map_err(value_error)?;
        let inst = AewcdInstance::from_weights(g.inner.clone(), k, &w).map_err(value_error)?;
        let opts = AewcdOptions { merged, integer_wmax: wmax };
        Ok(SolveResult::of(f2::aewcds_with(&inst, opts, SearchLimits::default())))
    }

    /// Vertex clique cover with at most `k` cliques that also covers every
    /// edge in `e_star`.
    #[pyfunction]
    #[pyo3(signature = (g, k, e_star = Vec::new()))]
    fn solve_lrcc(g: &Graph, k: usize, e_star: Vec<(usize, usize)>) -> PyResult<SolveResult> {
        Ok(SolveResult::of(f2::lrccs(&g.inner, k, &e_star).map_err(value_error)?))
    }

    /// Multi-colouring with at most `k` colours: adjacent vertices share no
    /// colour and every pair in `pairs` shares one. The cover lists the colour
    /// classes.
    #[pyfunction]
    #[pyo3(signature = (g, k, pairs = Vec::new()))]
    fn solve_pmc(g: &Graph, k: usize, pairs: Vec<(usize, usize)>) -> PyResult<SolveResult> {
        Ok(SolveResult::of(f2::solve_pmc(&g.inner, k, &pairs).map_err(value_error)?))
    }

    /// `None` when `cover` is an edge clique cover with at most `k` cliques,
    /// otherwise the violation.
    #[pyfunction]
    fn verify_ecc(g: &Graph, k: usize, cover: Vec<Vec<usize>>) -> Option<String> {
        let p = ProblemInstance::Ecc { graph: g.inner.clone(), k };
        verify::verify_solution(&p, &Solution::cover(cover)).err().map(|v| v.to_string())
    }
}
