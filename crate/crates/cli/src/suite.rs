//! The built-in verification suite run by `verify-all`.
//!
//! Each criterion compares a closed form, identity or known spectrum against
//! an independent numeric computation on built-in graphs, so the suite needs
//! no fixture files. Random trials use a seeded generator and are
//! reproducible.

use std::fmt::Write as _;

use cvejoin::equienergetic::{
    certify_family_with, cp_graph, equienergetic_family, partitions_min3, variable_part_energy,
    variable_part_energy_numeric,
};
use cvejoin::formulas::{Branch, FormulaSet};
use cvejoin::graph::{adjacency_matrix, complete, cycle, line_graph, DenseSymMatrix};
use cvejoin::indices::{verify_join_indices, CheckStatus, IndexName, IndexValue, REAL_INDEX_TOL};
use cvejoin::join::{bfs_eccentricity, cve_degree, cve_eccentricity, cve_order, cve_size};
use cvejoin::spectral::{
    closed_form_d_spectrum_with, distance_spectrum, line_graph_spectrum_oracle, max_deviation,
    sym_eigenvalues, GROUPING_TOL,
};
use cvejoin::{cve_join, Graph};
use num_rational::Ratio;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::io::builtin;
use crate::report::{num, Check, Render};

pub const DEFAULT_SEED: u64 = 0x00C0_FFEE;
pub const DEFAULT_TRIALS: usize = 256;

/// Closed-form spectrum vs numeric spectrum.
pub const SPECTRUM_TOL: f64 = 1e-8;
pub const LINE_GRAPH_TOL: f64 = 1e-9;
pub const VARIABLE_PART_TOL: f64 = 1e-9;
/// Per vertex; the energy tolerance for a family is this times the order.
pub const ENERGY_TOL_PER_VERTEX: f64 = 1e-8;
pub const EIGENSOLVER_REL_TOL: f64 = 1e-10;

/// Criteria that read the closed-form coefficient tables; a perturbed
/// coefficient can only show up here.
pub const FORMULA_CRITERIA: [u8; 2] = [1, 5];
pub const ALL_CRITERIA: [u8; 7] = [1, 2, 3, 4, 5, 6, 7];

#[derive(Debug, Clone)]
pub struct SuiteOptions<'a> {
    pub formulas: &'a FormulaSet,
    pub seed: u64,
    pub trials: usize,
    /// Label of the perturbed coefficient, if any; recorded in the report.
    pub mutation: Option<String>,
}

impl Default for SuiteOptions<'static> {
    fn default() -> Self {
        SuiteOptions {
            formulas: FormulaSet::standard(),
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
            mutation: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl CriterionResult {
    fn new(id: u8, title: &'static str, checks: Vec<Check>) -> Self {
        CriterionResult {
            id,
            title,
            pass: !checks.is_empty() && checks.iter().all(|c| c.pass),
            checks,
        }
    }

    pub fn summary_line(&self) -> String {
        let passed = self.checks.iter().filter(|c| c.pass).count();
        format!(
            "criterion {}: {} ({}/{} checks) {}",
            self.id,
            if self.pass { "PASS" } else { "FAIL" },
            passed,
            self.checks.len(),
            self.title
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub trials: usize,
    pub mutation: Option<String>,
    pub pass: bool,
    pub criteria: Vec<CriterionResult>,
}

/// How many failures the text report details at the end.
const SHOWN_FAILURES: usize = 10;

impl Render for SuiteReport {
    fn text(&self) -> String {
        let mut out = String::new();
        if let Some(m) = &self.mutation {
            let _ = writeln!(out, "mutation: {m} (+1)");
        }
        let _ = writeln!(out, "seed: {}  random trials: {}", self.seed, self.trials);
        for c in &self.criteria {
            let _ = writeln!(out, "\n{}", c.summary_line());
            for check in &c.checks {
                let _ = writeln!(out, "  {}", check.line());
            }
        }
        let failures: Vec<_> = self
            .criteria
            .iter()
            .flat_map(|c| c.checks.iter().filter(|k| !k.pass).map(move |k| (c.id, k)))
            .collect();
        let _ = writeln!(out);
        if failures.is_empty() {
            let _ = writeln!(out, "verify-all: PASS");
        } else {
            let _ = writeln!(out, "verify-all: FAIL ({} failed checks)", failures.len());
            for (id, k) in failures.iter().take(SHOWN_FAILURES) {
                let _ = writeln!(out, "  criterion {id}: {}", k.line());
            }
        }
        out
    }

    fn passed(&self) -> bool {
        self.pass
    }
}

pub fn run_suite(opts: &SuiteOptions) -> SuiteReport {
    run_criteria(&ALL_CRITERIA, opts)
}

pub fn run_criteria(ids: &[u8], opts: &SuiteOptions) -> SuiteReport {
    let criteria: Vec<CriterionResult> = ids.iter().map(|&id| run_criterion(id, opts)).collect();
    SuiteReport {
        seed: opts.seed,
        trials: opts.trials,
        mutation: opts.mutation.clone(),
        pass: criteria.iter().all(|c| c.pass),
        criteria,
    }
}

/// Runs one criterion (1 to 7).
///
/// # Panics
/// On an unknown criterion id.
pub fn run_criterion(id: u8, opts: &SuiteOptions) -> CriterionResult {
    match id {
        1 => CriterionResult::new(
            1,
            "closed-form D-spectrum vs numeric",
            spectrum_checks(opts.formulas),
        ),
        2 => CriterionResult::new(
            2,
            "multiplicity of -2 in the D-spectrum",
            minus_two_checks(),
        ),
        3 => CriterionResult::new(3, "line-graph spectrum identity", line_graph_checks()),
        4 => CriterionResult::new(4, "D-equienergetic family certification", family_checks()),
        5 => CriterionResult::new(
            5,
            "index closed forms vs definitions",
            index_checks(opts.formulas),
        ),
        6 => CriterionResult::new(
            6,
            "order, size, degree and eccentricity formulas on random triples",
            structure_checks(opts.seed, opts.trials),
        ),
        7 => CriterionResult::new(
            7,
            "eigensolver accuracy on known spectra",
            eigensolver_checks(opts.seed),
        ),
        _ => panic!("unknown criterion {id}"),
    }
}

fn g(name: &str) -> Graph {
    builtin(name).expect("suite uses known builtins")
}

fn triple(names: [&str; 3]) -> ([Graph; 3], String) {
    (names.map(g), names.join(","))
}

const SPECTRUM_TRIPLES: [[&str; 3]; 4] = [
    ["c4", "k2", "k2"],
    ["c6", "c3", "k2"],
    ["k33", "c4", "c5"],
    ["petersen", "k3", "c4"],
];

fn spectrum_checks(formulas: &FormulaSet) -> Vec<Check> {
    SPECTRUM_TRIPLES
        .iter()
        .map(|&names| {
            let ([g1, g2, g3], label) = triple(names);
            let name = format!("D-spectrum ({label})");
            let result = (|| {
                let closed = closed_form_d_spectrum_with(formulas, &g1, &g2, &g3)?;
                let numeric = distance_spectrum(cve_join(&g1, &g2, &g3)?.graph())?;
                Ok::<_, cvejoin::SpectralError>(
                    max_deviation(&closed, &numeric)
                        .ok_or_else(|| format!("dimension {} vs {}", closed.dim(), numeric.dim())),
                )
            })();
            match result {
                Ok(Ok(dev)) => Check::within(name, dev, SPECTRUM_TOL),
                Ok(Err(detail)) => Check::failed(name, detail),
                Err(e) => Check::failed(name, e.to_string()),
            }
        })
        .collect()
}

fn minus_two_checks() -> Vec<Check> {
    [["k33", "c4", "c5"], ["petersen", "k3", "c4"]]
        .iter()
        .map(|&names| {
            let ([g1, g2, g3], label) = triple(names);
            let name = format!("multiplicity of -2 ({label})");
            let required = g1.size() - g1.order();
            match cve_join(&g1, &g2, &g3)
                .map_err(cvejoin::SpectralError::from)
                .and_then(|j| distance_spectrum(j.graph()))
            {
                Ok(s) => {
                    let found = s.multiplicity_of(-2.0);
                    Check {
                        name,
                        measured: Some(found as f64),
                        tolerance: Some(GROUPING_TOL),
                        pass: found >= required,
                        detail: format!("found {found}, need >= m1 - n1 = {required}"),
                    }
                }
                Err(e) => Check::failed(name, e.to_string()),
            }
        })
        .collect()
}

fn line_graph_checks() -> Vec<Check> {
    ["c4", "k4", "k33", "petersen"]
        .iter()
        .map(|&name| {
            let graph = g(name);
            let check = format!("line-graph spectrum ({name})");
            let result = (|| {
                let oracle = line_graph_spectrum_oracle(&graph)?;
                let numeric = sym_eigenvalues(&adjacency_matrix(&line_graph(&graph)?))?;
                Ok::<_, cvejoin::SpectralError>(max_deviation(&oracle, &numeric))
            })();
            match result {
                Ok(Some(dev)) => Check::within(check, dev, LINE_GRAPH_TOL),
                Ok(None) => Check::failed(check, "dimension mismatch"),
                Err(e) => Check::failed(check, e.to_string()),
            }
        })
        .collect()
}

fn family_checks() -> Vec<Check> {
    let (h1, h2) = (g("c4"), g("k2"));
    let k2 = h2.is_regular().expect("K2 is regular");
    let mut checks = Vec::new();
    for a in 3..=12 {
        let family = match equienergetic_family(&h1, &h2, a) {
            Ok(f) => f,
            Err(e) => {
                checks.push(Check::failed(format!("family a={a}"), e.to_string()));
                continue;
            }
        };
        let order = family[0].join.graph().order();
        let energy_tol = ENERGY_TOL_PER_VERTEX * order as f64;
        match certify_family_with(&family, energy_tol, GROUPING_TOL) {
            Ok(cert) => {
                checks.push(
                    Check::within(
                        format!("energy spread a={a}"),
                        cert.energy_spread,
                        energy_tol,
                    )
                    .with_detail(format!(
                        "{} members, order {order}, energy {}",
                        cert.members.len(),
                        num(cert.members[0].energy)
                    )),
                );
                let pairs = cert.witnesses.len() + cert.cospectral_pairs.len();
                checks.push(Check {
                    name: format!("non-cospectral a={a}"),
                    measured: Some(cert.cospectral_pairs.len() as f64),
                    tolerance: Some(GROUPING_TOL),
                    pass: cert.cospectral_pairs.is_empty(),
                    detail: format!("{} of {pairs} pairs separated", cert.witnesses.len()),
                });
            }
            Err(e) => checks.push(Check::failed(format!("certificate a={a}"), e.to_string())),
        }
        let expected = variable_part_energy(a, k2, h2.order());
        let worst = partitions_min3(a)
            .map_err(|e| e.to_string())
            .and_then(|parts| {
                parts.iter().try_fold(0.0f64, |acc, p| {
                    variable_part_energy_numeric(&cp_graph(p), &h2)
                        .map(|x| acc.max((x - expected).abs()))
                        .map_err(|e| e.to_string())
                })
            });
        checks.push(match worst {
            Ok(dev) => Check::within(format!("variable part a={a}"), dev, VARIABLE_PART_TOL)
                .with_detail(format!("2a + 2n2 - k2 - 6 = {expected}")),
            Err(e) => Check::failed(format!("variable part a={a}"), e),
        });
    }
    checks
}

const INDEX_TRIPLES: [[&str; 3]; 5] = [
    ["c4", "k2", "k2"],
    ["c6", "c3", "k2"],
    ["k33", "c4", "c5"],
    ["k4", "k2", "k2"],
    ["k3", "c3", "k2"],
];

fn index_checks(formulas: &FormulaSet) -> Vec<Check> {
    let mut checks = Vec::new();
    for names in INDEX_TRIPLES {
        let ([g1, g2, g3], label) = triple(names);
        let verification = cve_join(&g1, &g2, &g3)
            .map_err(|e| e.to_string())
            .and_then(|j| {
                verify_join_indices(formulas, &j, REAL_INDEX_TOL).map_err(|e| e.to_string())
            });
        let v = match verification {
            Ok(v) => v,
            Err(e) => {
                checks.push(Check::failed(format!("indices ({label})"), e));
                continue;
            }
        };
        for c in &v.checks {
            let name = format!("{} ({label}, {})", c.name, v.branch.label());
            checks.push(match c.status {
                CheckStatus::Pass | CheckStatus::Fail => Check {
                    name,
                    measured: c.difference,
                    tolerance: c.tolerance,
                    pass: c.status == CheckStatus::Pass,
                    detail: format!(
                        "definitional {} closed form {}",
                        c.definitional,
                        c.closed_form.map_or("n/a".to_string(), |x| x.to_string())
                    ),
                },
                // The Wiener closed form is stated for triangle-free G1 only;
                // anything else missing is a failure.
                CheckStatus::Unavailable
                    if c.name == IndexName::Wiener && v.branch == Branch::Otherwise =>
                {
                    Check {
                        name,
                        measured: None,
                        tolerance: None,
                        pass: true,
                        detail: format!(
                            "definitional {}, no closed form for this branch",
                            c.definitional
                        ),
                    }
                }
                CheckStatus::Unavailable => {
                    Check::failed(name, c.unavailable.clone().unwrap_or_default())
                }
            });
        }
        if names == ["c4", "k2", "k2"] {
            let expect = [
                (IndexName::Wiener, Ratio::from_integer(108)),
                (IndexName::Tau, Ratio::from_integer(28)),
                (IndexName::Aveg, Ratio::new(7, 3)),
            ];
            for (index, value) in expect {
                let c = v.check(index).expect("all indices are checked");
                let both = [Some(c.definitional), c.closed_form];
                checks.push(Check {
                    name: format!("{index} ({label}) = {value}"),
                    measured: None,
                    tolerance: None,
                    pass: both.iter().all(|x| *x == Some(IndexValue::Exact(value))),
                    detail: format!(
                        "definitional {}, closed form {}",
                        c.definitional,
                        c.closed_form.map_or("n/a".to_string(), |x| x.to_string())
                    ),
                });
            }
        }
    }
    checks
}

/// A connected triangle-free graph: a random tree plus random chords that
/// close no triangle.
pub fn random_triangle_free(rng: &mut StdRng, n: usize) -> Graph {
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    let mut add = |adj: &mut Vec<Vec<bool>>, u: usize, v: usize| {
        adj[u][v] = true;
        adj[v][u] = true;
        edges.push((u, v));
    };
    for v in 1..n {
        let u = rng.gen_range(0..v);
        add(&mut adj, u, v);
    }
    for u in 0..n {
        for v in u + 1..n {
            if !adj[u][v] && rng.gen_bool(0.35) && !(0..n).any(|w| adj[u][w] && adj[v][w]) {
                add(&mut adj, u, v);
            }
        }
    }
    Graph::new(n, &edges).expect("generated edges are simple")
}

/// `G(n, 1/2)`, possibly disconnected.
pub fn random_graph(rng: &mut StdRng, n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(0.5))
        .collect();
    Graph::new(n, &edges).expect("generated edges are simple")
}

#[derive(Default)]
struct Tally {
    trials: usize,
    failures: usize,
    first: Option<String>,
}

impl Tally {
    fn record(&mut self, failure: Option<String>) {
        self.trials += 1;
        if let Some(f) = failure {
            self.failures += 1;
            self.first.get_or_insert(f);
        }
    }

    fn check(self, name: &str) -> Check {
        let mut detail = format!("{} trials, {} failures", self.trials, self.failures);
        if let Some(f) = self.first {
            let _ = write!(detail, "; first: {f}");
        }
        Check::within(name, self.failures as f64, 0.0).with_detail(detail)
    }
}

fn structure_checks(seed: u64, trials: usize) -> Vec<Check> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut counts = Tally::default();
    let mut degrees = Tally::default();
    let mut ecc_tf = Tally::default();
    let mut ecc_tri = Tally::default();
    for t in 0..trials {
        // every fourth trial uses a K3 or K4 base
        let g1 = if t % 4 == 3 {
            complete(3 + (t / 4) % 2).expect("valid size")
        } else {
            let n1 = rng.gen_range(2..=7);
            random_triangle_free(&mut rng, n1)
        };
        let n2 = rng.gen_range(1..=4);
        let g2 = random_graph(&mut rng, n2);
        let n3 = rng.gen_range(1..=4);
        let g3 = random_graph(&mut rng, n3);
        let desc = format!(
            "G1={:?} G2={:?} G3={:?}",
            g1.edges(),
            g2.edges(),
            g3.edges()
        );

        let join = match cve_join(&g1, &g2, &g3) {
            Ok(j) => j,
            Err(e) => {
                counts.record(Some(format!("{desc}: {e}")));
                continue;
            }
        };
        let p = join.params();
        let graph = join.graph();
        counts.record(
            (cve_order(p) != graph.order() || cve_size(p) != graph.size()).then(|| {
                format!(
                    "{desc}: formula ({}, {}) vs constructed ({}, {})",
                    cve_order(p),
                    cve_size(p),
                    graph.order(),
                    graph.size()
                )
            }),
        );
        degrees.record((0..graph.order()).find_map(|v| match cve_degree(&join, v) {
            Ok(d) if d == graph.degree(v) => None,
            Ok(d) => Some(format!(
                "{desc}: vertex {v} formula {d} vs {}",
                graph.degree(v)
            )),
            Err(e) => Some(format!("{desc}: vertex {v}: {e}")),
        }));
        let ecc = (0..graph.order()).find_map(|v| {
            match (cve_eccentricity(&join, v), bfs_eccentricity(&join, v)) {
                (Ok(a), Ok(Some(b))) if a == b => None,
                (a, b) => Some(format!("{desc}: vertex {v} formula {a:?} vs bfs {b:?}")),
            }
        });
        if join.g1_triangle_free() {
            ecc_tf.record(ecc);
        } else {
            ecc_tri.record(ecc);
        }
    }
    vec![
        counts.check("order and size"),
        degrees.check("degrees"),
        ecc_tf.check("eccentricities, triangle-free G1"),
        ecc_tri.check("eccentricities, G1 in {K3, K4}"),
    ]
}

/// `H D H` for a random Householder reflector `H = I - 2 v vᵀ / vᵀv`: dense,
/// with the spectrum of `D`.
fn reflected_diagonal(d: &[f64], rng: &mut StdRng) -> DenseSymMatrix {
    let v: Vec<f64> = d.iter().map(|_| rng.gen_range(-1.0..1.0)).collect();
    let s: f64 = v.iter().map(|x| x * x).sum();
    let dv: Vec<f64> = d.iter().zip(&v).map(|(a, b)| a * b).collect();
    let vdv: f64 = v.iter().zip(&dv).map(|(a, b)| a * b).sum();
    DenseSymMatrix::from_fn(d.len(), |i, j| {
        let diag = if i == j { d[i] } else { 0.0 };
        diag - 2.0 * (v[i] * dv[j] + dv[i] * v[j]) / s + 4.0 * v[i] * v[j] * vdv / (s * s)
    })
}

const EIGEN_DIMS: [usize; 5] = [3, 10, 64, 200, 500];

fn eigensolver_checks(seed: u64) -> Vec<Check> {
    let mut rng = StdRng::seed_from_u64(seed ^ 0x5EED);
    let mut checks = Vec::new();
    for n in EIGEN_DIMS {
        let complete_spec: Vec<f64> = std::iter::once(n as f64 - 1.0)
            .chain(std::iter::repeat_n(-1.0, n - 1))
            .collect();
        let cycle_spec: Vec<f64> = (0..n)
            .map(|j| 2.0 * (2.0 * std::f64::consts::PI * j as f64 / n as f64).cos())
            .collect();
        let diag: Vec<f64> = (0..n)
            .map(|_| rng.gen_range(-(n as f64)..n as f64))
            .collect();
        let cases = [
            (
                format!("K{n} adjacency"),
                adjacency_matrix(&complete(n).expect("n >= 1")),
                complete_spec,
            ),
            (
                format!("C{n} adjacency"),
                adjacency_matrix(&cycle(n).expect("n >= 3")),
                cycle_spec,
            ),
            (
                format!("diagonal {n}"),
                DenseSymMatrix::diagonal(&diag),
                diag.clone(),
            ),
            (
                format!("reflected diagonal {n}"),
                reflected_diagonal(&diag, &mut rng),
                diag.clone(),
            ),
        ];
        for (name, matrix, mut expected) in cases {
            expected.sort_by(|a, b| b.total_cmp(a));
            let radius = expected.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            let tol = EIGENSOLVER_REL_TOL * radius.max(1.0);
            checks.push(match sym_eigenvalues(&matrix) {
                Ok(s) => {
                    let err = s
                        .values()
                        .iter()
                        .zip(&expected)
                        .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
                    Check::within(name, err, tol)
                }
                Err(e) => Check::failed(name, e.to_string()),
            });
        }
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_graphs_are_as_promised() {
        let mut rng = StdRng::seed_from_u64(7);
        for n in 1..=7 {
            for _ in 0..20 {
                let g = random_triangle_free(&mut rng, n);
                assert!(g.is_connected() && g.is_triangle_free());
            }
        }
    }

    #[test]
    fn unknown_criterion_panics() {
        let r = std::panic::catch_unwind(|| run_criterion(9, &SuiteOptions::default()));
        assert!(r.is_err());
    }
}
