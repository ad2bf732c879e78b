//! Eccentricity-based topological indices and the Wiener index.
//!
//! [`indices_definitional`] evaluates the nine indices straight from their
//! definitions on any connected graph. The `*_closed_form` functions evaluate
//! the corresponding formulas in the join parameters, and [`verify_indices`]
//! puts both side by side for a constructed join.
//!
//! Rational-valued indices are kept as exact fractions so the two routes can
//! be compared for equality; GA4 and ABC5 are irrational in general and are
//! compared with an absolute tolerance.

use std::fmt;

use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::formulas::{Branch, Formula, FormulaSet};
use crate::graph::Graph;
use crate::join::{cve_join, CveGraph, CveParameters, JoinError};
use crate::spectral::{all_pairs_distances, SpectralError};

/// Absolute tolerance for comparing GA4 and ABC5 between routes.
pub const REAL_INDEX_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IndexError {
    #[error("graph is disconnected: no path from {u} to {v}")]
    Disconnected { u: usize, v: usize },
    #[error("graph needs at least two vertices")]
    TooSmall,
    #[error("closed form unavailable: {0}")]
    ClosedFormUnavailable(String),
    #[error("missing regularity: {0}")]
    MissingRegularity(String),
    #[error(transparent)]
    Join(#[from] JoinError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IndexName {
    #[serde(rename = "xi_c")]
    XiC,
    #[serde(rename = "xi_ce")]
    XiCe,
    #[serde(rename = "tau")]
    Tau,
    #[serde(rename = "aveg")]
    Aveg,
    M1,
    M2,
    GA4,
    ABC5,
    #[serde(rename = "wiener")]
    Wiener,
}

impl IndexName {
    pub const ALL: [IndexName; 9] = [
        IndexName::XiC,
        IndexName::XiCe,
        IndexName::Tau,
        IndexName::Aveg,
        IndexName::M1,
        IndexName::M2,
        IndexName::GA4,
        IndexName::ABC5,
        IndexName::Wiener,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IndexName::XiC => "xi_c",
            IndexName::XiCe => "xi_ce",
            IndexName::Tau => "tau",
            IndexName::Aveg => "aveg",
            IndexName::M1 => "M1",
            IndexName::M2 => "M2",
            IndexName::GA4 => "GA4",
            IndexName::ABC5 => "ABC5",
            IndexName::Wiener => "wiener",
        }
    }

    pub fn is_exact(self) -> bool {
        !matches!(self, IndexName::GA4 | IndexName::ABC5)
    }
}

impl fmt::Display for IndexName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IndexValue {
    Exact(Ratio<i64>),
    Real(f64),
}

impl IndexValue {
    pub fn to_f64(self) -> f64 {
        match self {
            IndexValue::Exact(r) => r.to_f64().unwrap_or(f64::NAN),
            IndexValue::Real(x) => x,
        }
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexValue::Exact(r) => write!(f, "{r}"),
            IndexValue::Real(x) => write!(f, "{x:.12e}"),
        }
    }
}

/// Exact values serialize as a string fraction (`"74/3"`), reals as numbers.
impl Serialize for IndexValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            IndexValue::Exact(r) => s.serialize_str(&r.to_string()),
            IndexValue::Real(x) => s.serialize_f64(*x),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Definitional,
    ClosedForm,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexEntry {
    pub name: IndexName,
    pub value: IndexValue,
    pub route: Route,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexReport {
    pub entries: Vec<IndexEntry>,
}

impl IndexReport {
    pub fn get(&self, name: IndexName) -> Option<IndexValue> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .map(|e| e.value)
    }

    fn exact(&self, name: IndexName) -> Ratio<i64> {
        match self.get(name) {
            Some(IndexValue::Exact(r)) => r,
            other => panic!("{name} is not exact: {other:?}"),
        }
    }

    pub fn wiener(&self) -> i64 {
        self.exact(IndexName::Wiener).to_integer()
    }

    pub fn tau(&self) -> i64 {
        self.exact(IndexName::Tau).to_integer()
    }

    pub fn aveg(&self) -> Ratio<i64> {
        self.exact(IndexName::Aveg)
    }
}

/// All nine indices from degrees, BFS eccentricities and the distance matrix.
pub fn indices_definitional(g: &Graph) -> Result<IndexReport, IndexError> {
    if g.order() < 2 {
        return Err(IndexError::TooSmall);
    }
    let dist = all_pairs_distances(g).map_err(|e| match e {
        SpectralError::Disconnected { u, v } => IndexError::Disconnected { u, v },
        other => unreachable!("BFS distances only fail on disconnection: {other}"),
    })?;
    let ecc: Vec<i64> = dist.eccentricities().into_iter().map(i64::from).collect();
    let deg: Vec<i64> = g.degrees().into_iter().map(|d| d as i64).collect();
    let n = g.order() as i64;

    let xi_c: i64 = deg.iter().zip(&ecc).map(|(d, e)| d * e).sum();
    let xi_ce: Ratio<i64> = deg.iter().zip(&ecc).map(|(&d, &e)| Ratio::new(d, e)).sum();
    let tau: i64 = ecc.iter().sum();
    let m1: i64 = ecc.iter().map(|e| e * e).sum();
    let mut m2 = 0i64;
    let mut ga4 = 0.0;
    let mut abc5 = 0.0;
    for &(u, v) in g.edges() {
        let (a, b) = (ecc[u], ecc[v]);
        m2 += a * b;
        let (af, bf) = (a as f64, b as f64);
        ga4 += 2.0 * (af * bf).sqrt() / (af + bf);
        abc5 += ((af + bf - 2.0) / (af * bf)).sqrt();
    }
    let transmissions: u64 = (0..g.order())
        .map(|v| dist.transmission(v).expect("in range"))
        .sum();
    let wiener = (transmissions / 2) as i64;

    let int = |x: i64| IndexValue::Exact(Ratio::from_integer(x));
    let values = [
        int(xi_c),
        IndexValue::Exact(xi_ce),
        int(tau),
        IndexValue::Exact(Ratio::new(tau, n)),
        int(m1),
        int(m2),
        IndexValue::Real(ga4),
        IndexValue::Real(abc5),
        int(wiener),
    ];
    Ok(IndexReport {
        entries: IndexName::ALL
            .into_iter()
            .zip(values)
            .map(|(name, value)| IndexEntry {
                name,
                value,
                route: Route::Definitional,
            })
            .collect(),
    })
}

fn gate(p: &CveParameters) -> Result<(), IndexError> {
    p.validate()?;
    if !p.has_full_joins() {
        return Err(IndexError::ClosedFormUnavailable(
            "closed forms need nonempty G2 and G3".into(),
        ));
    }
    Ok(())
}

fn eval_exact(f: &Formula<i64>, p: &CveParameters) -> Result<Ratio<i64>, IndexError> {
    f.eval(p)
        .map_err(|m| IndexError::MissingRegularity(m.to_string()))
}

fn eval_real(f: &Formula<f64>, p: &CveParameters) -> Result<f64, IndexError> {
    f.eval(p)
        .map_err(|m| IndexError::MissingRegularity(m.to_string()))
}

/// Closed-form value of one index, evaluated from `formulas`.
pub fn closed_form_index(
    formulas: &FormulaSet,
    name: IndexName,
    p: &CveParameters,
    triangle_free: bool,
) -> Result<IndexValue, IndexError> {
    gate(p)?;
    let b = Branch::of(triangle_free);
    let exact = |f: &Formula<i64>| eval_exact(f, p).map(IndexValue::Exact);
    let real = |f: &Formula<f64>| eval_real(f, p).map(IndexValue::Real);
    match name {
        IndexName::XiC => exact(formulas.xi_c.get(b)),
        IndexName::XiCe => exact(formulas.xi_ce.get(b)),
        IndexName::Tau => exact(formulas.tau.get(b)),
        IndexName::Aveg => exact(formulas.aveg.get(b)),
        IndexName::M1 => exact(formulas.m1.get(b)),
        IndexName::M2 => exact(formulas.m2.get(b)),
        IndexName::GA4 => real(formulas.ga4.get(b)),
        IndexName::ABC5 => real(formulas.abc5.get(b)),
        IndexName::Wiener => {
            if !triangle_free {
                return Err(IndexError::ClosedFormUnavailable(
                    "Wiener closed form needs triangle-free G1".into(),
                ));
            }
            if p.k2.is_none() || p.k3.is_none() {
                return Err(IndexError::MissingRegularity(
                    "Wiener closed form needs regular G2 and G3".into(),
                ));
            }
            exact(&formulas.wiener)
        }
    }
}

/// Every index whose closed form is available for `p`, in the order of
/// [`IndexName::ALL`]; unavailable ones are left out.
pub fn indices_closed_form(p: &CveParameters, triangle_free: bool) -> IndexReport {
    IndexReport {
        entries: IndexName::ALL
            .into_iter()
            .filter_map(|name| {
                let value =
                    closed_form_index(FormulaSet::standard(), name, p, triangle_free).ok()?;
                Some(IndexEntry {
                    name,
                    value,
                    route: Route::ClosedForm,
                })
            })
            .collect(),
    }
}

fn std_exact(name: IndexName, p: &CveParameters, tf: bool) -> Result<Ratio<i64>, IndexError> {
    match closed_form_index(FormulaSet::standard(), name, p, tf)? {
        IndexValue::Exact(r) => Ok(r),
        IndexValue::Real(_) => unreachable!("{name} is exact"),
    }
}

fn std_real(name: IndexName, p: &CveParameters, tf: bool) -> Result<f64, IndexError> {
    closed_form_index(FormulaSet::standard(), name, p, tf).map(IndexValue::to_f64)
}

pub fn wiener_closed_form(p: &CveParameters, triangle_free: bool) -> Result<i64, IndexError> {
    std_exact(IndexName::Wiener, p, triangle_free).map(|r| r.to_integer())
}

pub fn xi_c_closed_form(p: &CveParameters, triangle_free: bool) -> Result<i64, IndexError> {
    std_exact(IndexName::XiC, p, triangle_free).map(|r| r.to_integer())
}

pub fn xi_ce_closed_form(p: &CveParameters, triangle_free: bool) -> Result<Ratio<i64>, IndexError> {
    std_exact(IndexName::XiCe, p, triangle_free)
}

pub fn tau_closed_form(p: &CveParameters, triangle_free: bool) -> Result<i64, IndexError> {
    std_exact(IndexName::Tau, p, triangle_free).map(|r| r.to_integer())
}

pub fn aveg_closed_form(p: &CveParameters, triangle_free: bool) -> Result<Ratio<i64>, IndexError> {
    std_exact(IndexName::Aveg, p, triangle_free)
}

/// `(M1, M2)`.
pub fn zagreb_closed_form(
    p: &CveParameters,
    triangle_free: bool,
) -> Result<(i64, i64), IndexError> {
    Ok((
        std_exact(IndexName::M1, p, triangle_free)?.to_integer(),
        std_exact(IndexName::M2, p, triangle_free)?.to_integer(),
    ))
}

pub fn ga4_closed_form(p: &CveParameters, triangle_free: bool) -> Result<f64, IndexError> {
    std_real(IndexName::GA4, p, triangle_free)
}

pub fn abc5_closed_form(p: &CveParameters, triangle_free: bool) -> Result<f64, IndexError> {
    std_real(IndexName::ABC5, p, triangle_free)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Unavailable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexCheck {
    pub name: IndexName,
    pub definitional: IndexValue,
    pub closed_form: Option<IndexValue>,
    /// Why the closed form is missing, when it is.
    pub unavailable: Option<String>,
    pub difference: Option<f64>,
    /// `None` for exact comparison.
    pub tolerance: Option<f64>,
    pub status: CheckStatus,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IndexVerification {
    pub params: CveParameters,
    pub branch: Branch,
    pub checks: Vec<IndexCheck>,
}

impl IndexVerification {
    /// No check failed (unavailable closed forms do not count as failures).
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn check(&self, name: IndexName) -> Option<&IndexCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Builds the join and compares every index between the two routes.
pub fn verify_indices(g1: &Graph, g2: &Graph, g3: &Graph) -> Result<IndexVerification, IndexError> {
    let join = cve_join(g1, g2, g3)?;
    verify_join_indices(FormulaSet::standard(), &join, REAL_INDEX_TOL)
}

pub fn verify_join_indices(
    formulas: &FormulaSet,
    join: &CveGraph,
    real_tol: f64,
) -> Result<IndexVerification, IndexError> {
    let definitional = indices_definitional(join.graph())?;
    let p = *join.params();
    let tf = join.g1_triangle_free();
    let checks = definitional
        .entries
        .iter()
        .map(|entry| {
            let name = entry.name;
            let tolerance = (!name.is_exact()).then_some(real_tol);
            match closed_form_index(formulas, name, &p, tf) {
                Ok(cf) => {
                    let difference = (entry.value.to_f64() - cf.to_f64()).abs();
                    let ok = match (entry.value, cf) {
                        (IndexValue::Exact(a), IndexValue::Exact(b)) => a == b,
                        _ => difference <= real_tol,
                    };
                    IndexCheck {
                        name,
                        definitional: entry.value,
                        closed_form: Some(cf),
                        unavailable: None,
                        difference: Some(difference),
                        tolerance,
                        status: if ok {
                            CheckStatus::Pass
                        } else {
                            CheckStatus::Fail
                        },
                    }
                }
                Err(e) => IndexCheck {
                    name,
                    definitional: entry.value,
                    closed_form: None,
                    unavailable: Some(e.to_string()),
                    difference: None,
                    tolerance,
                    status: CheckStatus::Unavailable,
                },
            }
        })
        .collect();
    Ok(IndexVerification {
        params: p,
        branch: Branch::of(tf),
        checks,
    })
}
