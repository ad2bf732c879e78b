//! Report documents: a serializable structure per command plus a plain-text
//! rendering. Text output prints every float with 13 significant digits;
//! JSON uses the shortest representation that round-trips exactly.

use std::fmt::Write as _;

use cvejoin::join::Block;
use cvejoin::{CveGraph, Graph, Spectrum};
use serde::Serialize;

pub fn num(x: f64) -> String {
    format!("{x:.12e}")
}

/// Tolerances are round numbers, or round numbers scaled by an order.
pub fn tol(t: f64) -> String {
    let s = format!("{t:.6e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent form");
    format!(
        "{}e{exp}",
        mantissa.trim_end_matches('0').trim_end_matches('.')
    )
}

/// A rendered command result.
pub trait Render: Serialize {
    fn text(&self) -> String;

    /// Whether every verification in the report passed.
    fn passed(&self) -> bool {
        true
    }

    fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// One pass/fail verification line.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    /// Measured deviation or count, when there is one.
    pub measured: Option<f64>,
    pub tolerance: Option<f64>,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn within(name: impl Into<String>, measured: f64, tolerance: f64) -> Self {
        Check {
            name: name.into(),
            measured: Some(measured),
            tolerance: Some(tolerance),
            // NaN fails
            pass: measured <= tolerance,
            detail: String::new(),
        }
    }

    pub fn failed(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            measured: None,
            tolerance: None,
            pass: false,
            detail: detail.into(),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    pub fn line(&self) -> String {
        let mut s = format!("{} {}", if self.pass { "PASS" } else { "FAIL" }, self.name);
        if let Some(m) = self.measured {
            let _ = write!(s, "  measured={}", num(m));
        }
        if let Some(t) = self.tolerance {
            let _ = write!(s, "  tol={}", tol(t));
        }
        if !self.detail.is_empty() {
            let _ = write!(s, "  ({})", self.detail);
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InputDescriptor {
    pub source: String,
    pub order: usize,
    pub size: usize,
    pub regular_degree: Option<usize>,
    pub triangle_free: bool,
    pub connected: bool,
}

impl InputDescriptor {
    pub fn new(source: &str, g: &Graph) -> Self {
        InputDescriptor {
            source: source.to_string(),
            order: g.order(),
            size: g.size(),
            regular_degree: g.is_regular(),
            triangle_free: g.is_triangle_free(),
            connected: g.is_connected(),
        }
    }

    pub fn line(&self) -> String {
        let reg = self
            .regular_degree
            .map_or("no".to_string(), |k| k.to_string());
        format!(
            "{}: n={} m={} regular={} triangle-free={} connected={}",
            self.source, self.order, self.size, reg, self.triangle_free, self.connected
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlockRange {
    pub block: &'static str,
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JoinSummary {
    pub order: usize,
    pub size: usize,
    pub g1_triangle_free: bool,
    pub blocks: Vec<BlockRange>,
}

impl JoinSummary {
    pub fn of(join: &CveGraph) -> Self {
        JoinSummary {
            order: join.graph().order(),
            size: join.graph().size(),
            g1_triangle_free: join.g1_triangle_free(),
            blocks: Block::ALL
                .iter()
                .map(|&b| {
                    let r = join.block_range(b);
                    BlockRange {
                        block: b.label(),
                        start: r.start,
                        end: r.end,
                    }
                })
                .collect(),
        }
    }

    /// `"V(G1) 0..4"`-style lines.
    pub fn block_lines(&self) -> Vec<String> {
        self.blocks
            .iter()
            .map(|b| format!("block {} {}..{}", b.block, b.start, b.end))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Group {
    pub value: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumSummary {
    pub values: Vec<f64>,
    pub groups: Vec<Group>,
    pub grouping_tol: f64,
    pub energy: f64,
}

impl SpectrumSummary {
    pub fn of(s: &Spectrum) -> Self {
        SpectrumSummary {
            values: s.values().to_vec(),
            groups: s
                .groups()
                .iter()
                .map(|&(value, multiplicity)| Group {
                    value,
                    multiplicity,
                })
                .collect(),
            grouping_tol: s.grouping_tol(),
            energy: s.energy(),
        }
    }

    pub fn write_text(&self, out: &mut String, title: &str) {
        let _ = writeln!(out, "{title} (grouped at {:e}):", self.grouping_tol);
        for g in &self.groups {
            let _ = writeln!(out, "  {:>20}  x{}", num(g.value), g.multiplicity);
        }
        let _ = writeln!(out, "energy: {}", num(self.energy));
    }
}
