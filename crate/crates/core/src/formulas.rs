//! Closed-form expressions over the join parameters, stored as coefficient
//! tables.
//!
//! Every polynomial closed form in the crate (the 4×4 quotient matrix and the
//! eccentricity-index formulas) is a [`Formula`]: a list of `coefficient ×
//! monomial` terms over the parameters `n_i, m_i, k_i`, divided by a constant
//! or by the order of the join. Keeping them as data lets the verification
//! suite perturb any single coefficient and confirm that the perturbation is
//! detected.

use std::fmt;
use std::sync::LazyLock;

use num_rational::Ratio;
use serde::Serialize;

use crate::join::{cve_order, CveParameters};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Var {
    N1,
    M1,
    K1,
    N2,
    M2,
    K2,
    N3,
    M3,
    K3,
}

impl Var {
    fn name(self) -> &'static str {
        match self {
            Var::N1 => "n1",
            Var::M1 => "m1",
            Var::K1 => "k1",
            Var::N2 => "n2",
            Var::M2 => "m2",
            Var::K2 => "k2",
            Var::N3 => "n3",
            Var::M3 => "m3",
            Var::K3 => "k3",
        }
    }

    /// `None` when the variable is a regularity degree the inputs lack.
    fn value(self, p: &CveParameters) -> Option<i64> {
        let v = match self {
            Var::N1 => Some(p.n1),
            Var::M1 => Some(p.m1),
            Var::K1 => p.k1,
            Var::N2 => Some(p.n2),
            Var::M2 => Some(p.m2),
            Var::K2 => p.k2,
            Var::N3 => Some(p.n3),
            Var::M3 => Some(p.m3),
            Var::K3 => p.k3,
        };
        v.map(|x| x as i64)
    }
}

/// `coeff * Π vars`; an empty `vars` is the constant term.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Term<C> {
    pub coeff: C,
    pub vars: &'static [Var],
}

const fn t<C>(coeff: C, vars: &'static [Var]) -> Term<C> {
    Term { coeff, vars }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Denominator {
    Const(i64),
    /// Divide by `n1 + m1 + n2 + n3`.
    Order,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Formula<C> {
    pub terms: Vec<Term<C>>,
    pub denom: Denominator,
}

/// The formula needs a regularity degree that is not available.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MissingVar(pub Var);

impl fmt::Display for MissingVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (input graph is not regular)", self.0.name())
    }
}

fn monomial(vars: &[Var], p: &CveParameters) -> Result<i64, MissingVar> {
    vars.iter().try_fold(1i64, |acc, &v| {
        v.value(p).map(|x| acc * x).ok_or(MissingVar(v))
    })
}

fn denominator(d: Denominator, p: &CveParameters) -> i64 {
    match d {
        Denominator::Const(c) => c,
        Denominator::Order => cve_order(p) as i64,
    }
}

impl Formula<i64> {
    fn new(terms: &[Term<i64>], denom: Denominator) -> Self {
        Formula {
            terms: terms.to_vec(),
            denom,
        }
    }

    pub fn eval(&self, p: &CveParameters) -> Result<Ratio<i64>, MissingVar> {
        let numer = self
            .terms
            .iter()
            .map(|t| monomial(t.vars, p).map(|m| t.coeff * m))
            .sum::<Result<i64, _>>()?;
        Ok(Ratio::new(numer, denominator(self.denom, p)))
    }
}

impl Formula<f64> {
    fn new(terms: &[Term<f64>], denom: Denominator) -> Self {
        Formula {
            terms: terms.to_vec(),
            denom,
        }
    }

    pub fn eval(&self, p: &CveParameters) -> Result<f64, MissingVar> {
        let numer = self
            .terms
            .iter()
            .map(|t| monomial(t.vars, p).map(|m| t.coeff * m as f64))
            .sum::<Result<f64, _>>()?;
        Ok(numer / denominator(self.denom, p) as f64)
    }
}

/// Which eccentricity regime a formula belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    TriangleFree,
    Otherwise,
}

impl Branch {
    pub fn of(triangle_free: bool) -> Self {
        if triangle_free {
            Branch::TriangleFree
        } else {
            Branch::Otherwise
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Branch::TriangleFree => "triangle-free",
            Branch::Otherwise => "otherwise",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Branches<F> {
    pub triangle_free: F,
    pub otherwise: F,
}

impl<F> Branches<F> {
    pub fn get(&self, b: Branch) -> &F {
        match b {
            Branch::TriangleFree => &self.triangle_free,
            Branch::Otherwise => &self.otherwise,
        }
    }
}

/// Every polynomial closed form used by the crate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FormulaSet {
    pub quotient: [[Formula<i64>; 4]; 4],
    /// Triangle-free `G1` only.
    pub wiener: Formula<i64>,
    pub xi_c: Branches<Formula<i64>>,
    pub xi_ce: Branches<Formula<i64>>,
    pub tau: Branches<Formula<i64>>,
    pub aveg: Branches<Formula<i64>>,
    pub m1: Branches<Formula<i64>>,
    pub m2: Branches<Formula<i64>>,
    pub ga4: Branches<Formula<f64>>,
    pub abc5: Branches<Formula<f64>>,
}

/// Identifies one coefficient inside a [`FormulaSet`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CoefficientId {
    pub formula: String,
    pub term: usize,
}

impl fmt::Display for CoefficientId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}#{}", self.formula, self.term)
    }
}

enum FormulaMut<'a> {
    Exact(&'a mut Formula<i64>),
    Real(&'a mut Formula<f64>),
}

use Var::*;

static STANDARD: LazyLock<FormulaSet> = LazyLock::new(|| {
    use Denominator::{Const, Order};
    let one = Const(1);
    let q = |terms: &[Term<i64>]| Formula::<i64>::new(terms, one);
    let exact = |tf: &[Term<i64>], tf_d, ow: &[Term<i64>], ow_d| Branches {
        triangle_free: Formula::<i64>::new(tf, tf_d),
        otherwise: Formula::<i64>::new(ow, ow_d),
    };
    let real = |tf: &[Term<f64>], ow: &[Term<f64>]| Branches {
        triangle_free: Formula::<f64>::new(tf, one),
        otherwise: Formula::<f64>::new(ow, one),
    };
    let ga_cross = 2.0 * 6f64.sqrt() / 5.0;
    let r2 = std::f64::consts::FRAC_1_SQRT_2;
    let tau_tf = [t(2, &[N1]), t(2, &[M1]), t(3, &[N2]), t(3, &[N3])];

    FormulaSet {
        quotient: [
            [
                q(&[t(1, &[N1]), t(-1, &[]), t(1, &[K1])]),
                q(&[t(2, &[M1]), t(-1, &[K1])]),
                q(&[t(1, &[N2])]),
                q(&[t(2, &[N3])]),
            ],
            [
                q(&[t(2, &[N1]), t(-2, &[])]),
                q(&[t(2, &[M1]), t(-2, &[])]),
                q(&[t(2, &[N2])]),
                q(&[t(1, &[N3])]),
            ],
            [
                q(&[t(1, &[N1])]),
                q(&[t(2, &[M1])]),
                q(&[t(2, &[N2]), t(-1, &[K2]), t(-2, &[])]),
                q(&[t(3, &[N3])]),
            ],
            [
                q(&[t(2, &[N1])]),
                q(&[t(1, &[M1])]),
                q(&[t(3, &[N2])]),
                q(&[t(2, &[N3]), t(-1, &[K3]), t(-2, &[])]),
            ],
        ],
        wiener: Formula::<i64>::new(
            &[
                t(1, &[N1, N1]),
                t(-1, &[N1]),
                t(2, &[N2, N2]),
                t(2, &[N3, N3]),
                t(2, &[N1, N2]),
                t(-2, &[N2]),
                t(-2, &[N3]),
                t(2, &[M1, N3]),
                t(2, &[M1, M1]),
                t(4, &[N1, N3]),
                t(4, &[M1, N1]),
                t(4, &[M1, N2]),
                t(-4, &[M1]),
                t(-1, &[N2, K2]),
                t(-1, &[N3, K3]),
                t(6, &[N2, N3]),
            ],
            Const(2),
        ),
        xi_c: exact(
            &[
                t(2, &[N1, N1]),
                t(5, &[N1, N2]),
                t(5, &[M1, N3]),
                t(-2, &[N1]),
                t(4, &[M1]),
                t(6, &[M2]),
                t(6, &[M3]),
            ],
            one,
            &[
                t(3, &[N1, N1]),
                t(6, &[N1, N2]),
                t(6, &[M1, N3]),
                t(-3, &[N1]),
                t(6, &[M1]),
                t(6, &[M2]),
                t(6, &[M3]),
            ],
            one,
        ),
        xi_ce: exact(
            &[
                t(3, &[N1, N1]),
                t(5, &[N1, N2]),
                t(5, &[M1, N3]),
                t(6, &[M1]),
                t(4, &[M2]),
                t(4, &[M3]),
                t(-3, &[N1]),
            ],
            Const(6),
            &[
                t(1, &[N1, N1]),
                t(2, &[N1, N2]),
                t(2, &[M1, N3]),
                t(-1, &[N1]),
                t(2, &[M1]),
                t(2, &[M2]),
                t(2, &[M3]),
            ],
            Const(3),
        ),
        tau: exact(
            &tau_tf,
            one,
            &[t(3, &[N1]), t(3, &[N2]), t(3, &[N3]), t(3, &[M1])],
            one,
        ),
        aveg: exact(&tau_tf, Order, &[t(3, &[])], one),
        m1: exact(
            &[t(4, &[N1]), t(4, &[M1]), t(9, &[N2]), t(9, &[N3])],
            one,
            &[t(9, &[N1]), t(9, &[N2]), t(9, &[N3]), t(9, &[M1])],
            one,
        ),
        m2: exact(
            &[
                t(4, &[M1]),
                t(9, &[M2]),
                t(9, &[M3]),
                t(2, &[N1, N1]),
                t(-2, &[N1]),
                t(6, &[N1, N2]),
                t(6, &[M1, N3]),
            ],
            one,
            &[
                t(18, &[M1]),
                t(18, &[M2]),
                t(18, &[M3]),
                t(18, &[N1, N2]),
                t(18, &[M1, N3]),
                t(9, &[N1, N1]),
                t(-9, &[N1]),
            ],
            Const(2),
        ),
        ga4: real(
            &[
                t(1.0, &[M1]),
                t(1.0, &[M2]),
                t(1.0, &[M3]),
                t(ga_cross, &[N1, N2]),
                t(ga_cross, &[M1, N3]),
                t(0.5, &[N1, N1]),
                t(-0.5, &[N1]),
            ],
            &[
                t(1.0, &[M1]),
                t(1.0, &[M2]),
                t(1.0, &[M3]),
                t(1.0, &[N1, N2]),
                t(1.0, &[M1, N3]),
                t(0.5, &[N1, N1]),
                t(-0.5, &[N1]),
            ],
        ),
        abc5: real(
            &[
                t(2.0 / 3.0, &[M2]),
                t(2.0 / 3.0, &[M3]),
                t(r2, &[N1, N2]),
                t(r2, &[M1, N3]),
                t(r2, &[M1]),
                t(r2 / 2.0, &[N1, N1]),
                t(-r2 / 2.0, &[N1]),
            ],
            &[
                t(2.0 / 3.0, &[M1]),
                t(2.0 / 3.0, &[M2]),
                t(2.0 / 3.0, &[M3]),
                t(2.0 / 3.0, &[N1, N2]),
                t(2.0 / 3.0, &[M1, N3]),
                t(1.0 / 3.0, &[N1, N1]),
                t(-1.0 / 3.0, &[N1]),
            ],
        ),
    }
});

impl FormulaSet {
    pub fn standard() -> &'static FormulaSet {
        &STANDARD
    }

    fn named_mut(&mut self) -> Vec<(String, FormulaMut<'_>)> {
        let mut out = Vec::new();
        for (i, row) in self.quotient.iter_mut().enumerate() {
            for (j, f) in row.iter_mut().enumerate() {
                out.push((format!("quotient[{i}][{j}]"), FormulaMut::Exact(f)));
            }
        }
        out.push(("wiener".to_string(), FormulaMut::Exact(&mut self.wiener)));
        let exact = [
            ("xi_c", &mut self.xi_c),
            ("xi_ce", &mut self.xi_ce),
            ("tau", &mut self.tau),
            ("aveg", &mut self.aveg),
            ("M1", &mut self.m1),
            ("M2", &mut self.m2),
        ];
        for (name, b) in exact {
            out.push((
                format!("{name}/triangle-free"),
                FormulaMut::Exact(&mut b.triangle_free),
            ));
            out.push((
                format!("{name}/otherwise"),
                FormulaMut::Exact(&mut b.otherwise),
            ));
        }
        for (name, b) in [("GA4", &mut self.ga4), ("ABC5", &mut self.abc5)] {
            out.push((
                format!("{name}/triangle-free"),
                FormulaMut::Real(&mut b.triangle_free),
            ));
            out.push((
                format!("{name}/otherwise"),
                FormulaMut::Real(&mut b.otherwise),
            ));
        }
        out
    }

    /// Every coefficient in the set, in a fixed order.
    pub fn coefficient_ids(&self) -> Vec<CoefficientId> {
        self.clone()
            .named_mut()
            .into_iter()
            .flat_map(|(formula, f)| {
                let len = match f {
                    FormulaMut::Exact(f) => f.terms.len(),
                    FormulaMut::Real(f) => f.terms.len(),
                };
                (0..len).map(move |term| CoefficientId {
                    formula: formula.clone(),
                    term,
                })
            })
            .collect()
    }

    /// A copy with one coefficient increased by 1, or `None` if `id` does
    /// not name a coefficient.
    pub fn perturbed(&self, id: &CoefficientId) -> Option<FormulaSet> {
        let mut out = self.clone();
        let (_, f) = out
            .named_mut()
            .into_iter()
            .find(|(name, _)| *name == id.formula)?;
        match f {
            FormulaMut::Exact(f) => f.terms.get_mut(id.term)?.coeff += 1,
            FormulaMut::Real(f) => f.terms.get_mut(id.term)?.coeff += 1.0,
        }
        Some(out)
    }

    pub fn parse_coefficient_id(s: &str) -> Option<CoefficientId> {
        let (formula, term) = s.rsplit_once('#')?;
        Some(CoefficientId {
            formula: formula.to_string(),
            term: term.parse().ok()?,
        })
    }
}
