//! One function per subcommand. Each returns a report; `main` decides how
//! to print it and which exit status to use.

use std::fmt::Write as _;

use cvejoin::equienergetic::{
    certify_family_with, cp_graph, equienergetic_family, variable_part_energy,
    variable_part_energy_numeric, EquienergeticError, FamilyCertificate,
};
use cvejoin::formulas::{Branch, FormulaSet};
use cvejoin::indices::{verify_join_indices, CheckStatus, IndexCheck, IndexError};
use cvejoin::spectral::{
    closed_form_d_spectrum, distance_spectrum, max_deviation, quotient_matrix, QuotientMatrix,
    GROUPING_TOL,
};
use cvejoin::{cve_join, Graph, JoinError, SpectralError};
use serde::Serialize;
use thiserror::Error;

use crate::io::{load_graph, write_edge_list, InputError};
use crate::report::{num, tol, Check, InputDescriptor, JoinSummary, Render, SpectrumSummary};
use crate::suite::{
    run_suite, SuiteOptions, SuiteReport, ENERGY_TOL_PER_VERTEX, VARIABLE_PART_TOL,
};

/// Anything that stops a command before it can produce a report.
#[derive(Debug, Error)]
pub enum CommandError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("construction failed: {0}")]
    Construction(#[from] JoinError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Equienergetic(#[from] EquienergeticError),
    #[error("{0}")]
    Usage(String),
}

fn load_all(sources: &[String]) -> Result<Vec<(String, Graph)>, CommandError> {
    sources
        .iter()
        .map(|s| Ok((s.clone(), load_graph(s)?)))
        .collect()
}

fn load_triple(sources: &[String]) -> Result<[Graph; 3], CommandError> {
    let [a, b, c]: [String; 3] = sources
        .to_vec()
        .try_into()
        .map_err(|_| CommandError::Usage(format!("expected 3 graphs, got {}", sources.len())))?;
    Ok([load_graph(&a)?, load_graph(&b)?, load_graph(&c)?])
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstructReport {
    pub inputs: Vec<InputDescriptor>,
    pub join: JoinSummary,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip)]
    edge_list: String,
}

impl Render for ConstructReport {
    /// The edge-list file itself.
    fn text(&self) -> String {
        self.edge_list.clone()
    }
}

pub fn construct(sources: &[String]) -> Result<ConstructReport, CommandError> {
    let [g1, g2, g3] = load_triple(sources)?;
    let join = cve_join(&g1, &g2, &g3)?;
    let summary = JoinSummary::of(&join);
    let mut header = vec![
        format!("CVE-join of {}", sources.join(" ")),
        "0-based vertex labels".to_string(),
    ];
    header.extend(summary.block_lines());
    Ok(ConstructReport {
        inputs: sources
            .iter()
            .zip([&g1, &g2, &g3])
            .map(|(s, g)| InputDescriptor::new(s, g))
            .collect(),
        edges: join.graph().edges().to_vec(),
        edge_list: write_edge_list(join.graph(), &header),
        join: summary,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ClosedFormSection {
    pub spectrum: SpectrumSummary,
    pub quotient: QuotientMatrix,
    pub max_deviation: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub inputs: Vec<InputDescriptor>,
    pub join: Option<JoinSummary>,
    pub spectrum: SpectrumSummary,
    pub closed_form: Option<ClosedFormSection>,
    pub checks: Vec<Check>,
}

impl Render for SpectrumReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for i in &self.inputs {
            let _ = writeln!(out, "input {}", i.line());
        }
        if let Some(j) = &self.join {
            let _ = writeln!(out, "join: n={} m={}", j.order, j.size);
        }
        self.spectrum.write_text(&mut out, "D-spectrum");
        if let Some(cf) = &self.closed_form {
            let _ = writeln!(out, "quotient matrix:");
            for row in cf.quotient.entries {
                let _ = writeln!(out, "  {row:?}");
            }
            cf.spectrum.write_text(&mut out, "closed-form D-spectrum");
            let _ = writeln!(out, "max deviation: {}", num(cf.max_deviation));
        }
        for c in &self.checks {
            let _ = writeln!(out, "{}", c.line());
        }
        out
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// D-spectrum of one connected graph, or of the join of a triple. With
/// `closed_form` the triple's spectrum is also assembled from the closed
/// form and compared at `tol`.
pub fn spectrum(
    sources: &[String],
    closed_form: bool,
    tol: f64,
) -> Result<SpectrumReport, CommandError> {
    let graphs = load_all(sources)?;
    let inputs = graphs
        .iter()
        .map(|(s, g)| InputDescriptor::new(s, g))
        .collect();
    match graphs.as_slice() {
        [(_, g)] => {
            if closed_form {
                return Err(CommandError::Usage(
                    "--closed-form needs three graphs".into(),
                ));
            }
            Ok(SpectrumReport {
                inputs,
                join: None,
                spectrum: SpectrumSummary::of(&distance_spectrum(g)?),
                closed_form: None,
                checks: Vec::new(),
            })
        }
        [(_, g1), (_, g2), (_, g3)] => {
            let join = cve_join(g1, g2, g3)?;
            let numeric = distance_spectrum(join.graph())?;
            let mut checks = Vec::new();
            let section = if closed_form {
                let closed = closed_form_d_spectrum(g1, g2, g3)?;
                let dev = max_deviation(&closed, &numeric).unwrap_or(f64::INFINITY);
                checks.push(Check::within("closed-form vs numeric D-spectrum", dev, tol));
                Some(ClosedFormSection {
                    spectrum: SpectrumSummary::of(&closed),
                    quotient: quotient_matrix(join.params())?,
                    max_deviation: dev,
                })
            } else {
                None
            };
            Ok(SpectrumReport {
                inputs,
                join: Some(JoinSummary::of(&join)),
                spectrum: SpectrumSummary::of(&numeric),
                closed_form: section,
                checks,
            })
        }
        _ => Err(CommandError::Usage(format!(
            "expected 1 or 3 graphs, got {}",
            sources.len()
        ))),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IndicesReport {
    pub inputs: Vec<InputDescriptor>,
    pub join: JoinSummary,
    pub branch: Branch,
    pub indices: Vec<IndexCheck>,
}

impl Render for IndicesReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for i in &self.inputs {
            let _ = writeln!(out, "input {}", i.line());
        }
        let _ = writeln!(out, "join: n={} m={}", self.join.order, self.join.size);
        let _ = writeln!(
            out,
            "{:<7} {:<14} {:<22} {:<22} {:<20} {:<9} status",
            "index", "branch", "definitional", "closed form", "difference", "tol"
        );
        for c in &self.indices {
            let status = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Unavailable => "n/a",
            };
            let _ = write!(
                out,
                "{:<7} {:<14} {:<22} {:<22} {:<20} {:<9} {status}",
                c.name.as_str(),
                self.branch.label(),
                c.definitional.to_string(),
                c.closed_form.map_or("n/a".to_string(), |v| v.to_string()),
                c.difference.map_or("n/a".to_string(), num),
                c.tolerance.map_or("exact".to_string(), tol),
            );
            if let Some(why) = &c.unavailable {
                let _ = write!(out, " ({why})");
            }
            let _ = writeln!(out);
        }
        out
    }

    fn passed(&self) -> bool {
        self.indices.iter().all(|c| c.status != CheckStatus::Fail)
    }
}

pub fn indices(sources: &[String], real_tol: f64) -> Result<IndicesReport, CommandError> {
    let [g1, g2, g3] = load_triple(sources)?;
    let join = cve_join(&g1, &g2, &g3)?;
    let v = verify_join_indices(FormulaSet::standard(), &join, real_tol)?;
    Ok(IndicesReport {
        inputs: sources
            .iter()
            .zip([&g1, &g2, &g3])
            .map(|(s, g)| InputDescriptor::new(s, g))
            .collect(),
        join: JoinSummary::of(&join),
        branch: v.branch,
        indices: v.checks,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct EquienergeticReport {
    pub inputs: Vec<InputDescriptor>,
    pub certificate: FamilyCertificate,
    pub checks: Vec<Check>,
}

impl Render for EquienergeticReport {
    fn text(&self) -> String {
        let c = &self.certificate;
        let mut out = String::new();
        for i in &self.inputs {
            let _ = writeln!(out, "input {}", i.line());
        }
        let _ = writeln!(
            out,
            "a={} order={} members={}",
            c.a,
            c.order,
            c.members.len()
        );
        for (i, m) in c.members.iter().enumerate() {
            let _ = writeln!(
                out,
                "  [{i}] partition {:<16} energy {}",
                m.partition.to_string(),
                num(m.energy)
            );
        }
        let _ = writeln!(
            out,
            "energy spread: {} (tol {})",
            num(c.energy_spread),
            tol(c.energy_tol)
        );
        for w in &c.witnesses {
            let _ = writeln!(
                out,
                "  non-cospectral {:?}: first differ at index {}, max gap {}",
                w.members,
                w.index,
                num(w.max_gap)
            );
        }
        for p in &c.cospectral_pairs {
            let _ = writeln!(out, "  cospectral pair {p:?}");
        }
        for k in &self.checks {
            let _ = writeln!(out, "{}", k.line());
        }
        let _ = writeln!(out, "{}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }

    fn passed(&self) -> bool {
        self.certificate.pass && self.checks.iter().all(|c| c.pass)
    }
}

/// Certifies the family of joins `H1^C ▷ (C_P^V ∪ H2^E)` over the
/// partitions `P` of `a`. `tol` is the energy tolerance per vertex.
pub fn equienergetic(
    h1_source: &str,
    h2_source: &str,
    a: usize,
    tol: f64,
    cospectral_tol: f64,
) -> Result<EquienergeticReport, CommandError> {
    let h1 = load_graph(h1_source)?;
    let h2 = load_graph(h2_source)?;
    let family = equienergetic_family(&h1, &h2, a)?;
    let order = family
        .first()
        .ok_or(EquienergeticError::EmptyFamily)?
        .join
        .graph()
        .order();
    let energy_tol = tol * order as f64;
    let certificate = certify_family_with(&family, energy_tol, cospectral_tol)?;

    let mut checks = vec![
        Check::within("energy spread", certificate.energy_spread, energy_tol),
        Check {
            name: "pairwise non-cospectral".into(),
            measured: Some(certificate.cospectral_pairs.len() as f64),
            tolerance: Some(cospectral_tol),
            pass: certificate.cospectral_pairs.is_empty(),
            detail: format!("{} separated pairs", certificate.witnesses.len()),
        },
    ];
    let k2 = h2.is_regular().ok_or(EquienergeticError::H2NotRegular)?;
    let expected = variable_part_energy(a, k2, h2.order());
    let mut worst = 0.0f64;
    for m in &family {
        worst = worst
            .max((variable_part_energy_numeric(&cp_graph(&m.partition), &h2)? - expected).abs());
    }
    checks.push(
        Check::within("variable part of the energy", worst, VARIABLE_PART_TOL)
            .with_detail(format!("2a + 2n2 - k2 - 6 = {expected}")),
    );
    Ok(EquienergeticReport {
        inputs: vec![
            InputDescriptor::new(h1_source, &h1),
            InputDescriptor::new(h2_source, &h2),
        ],
        certificate,
        checks,
    })
}

/// Default tolerances, shared with `main`.
pub const DEFAULT_SPECTRUM_TOL: f64 = crate::suite::SPECTRUM_TOL;
pub const DEFAULT_ENERGY_TOL: f64 = ENERGY_TOL_PER_VERTEX;
pub const DEFAULT_COSPECTRAL_TOL: f64 = GROUPING_TOL;

pub fn verify_all(mutation: Option<&str>) -> Result<SuiteReport, CommandError> {
    let Some(label) = mutation else {
        return Ok(run_suite(&SuiteOptions::default()));
    };
    let standard = FormulaSet::standard();
    let id = FormulaSet::parse_coefficient_id(label).ok_or_else(|| {
        CommandError::Usage(format!(
            "bad coefficient id {label:?}, expected <formula>#<term>"
        ))
    })?;
    let formulas = standard
        .perturbed(&id)
        .ok_or_else(|| CommandError::Usage(format!("no coefficient {label:?}")))?;
    Ok(run_suite(&SuiteOptions {
        formulas: &formulas,
        mutation: Some(id.to_string()),
        ..SuiteOptions::default()
    }))
}
