//! D-equienergetic families `H1^C ▷ (C_P^V ∪ H2^E)` indexed by the partitions
//! `P` of an integer `a` into parts of size at least 3, where `C_P` is the
//! disjoint union of cycles with lengths given by `P`.
//!
//! Every member has the same order and the same D-energy; members built from
//! different partitions have different D-spectra. [`certify_family`] checks
//! both facts numerically.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{adjacency_matrix, cycle, disjoint_union, Graph};
use crate::join::{cve_join, CveGraph, JoinError};
use crate::spectral::{
    distance_spectrum, first_difference, max_deviation, sym_eigenvalues, SpectralError, Spectrum,
};

/// Slack allowed below -2 when checking the least adjacency eigenvalue of `H2`.
pub const LEAST_EIGENVALUE_SLACK: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EquienergeticError {
    #[error("a = {0} is too small: partitions into parts >= 3 need a >= 3")]
    TooSmall(usize),
    #[error("H1 not eligible: {0}")]
    H1NotEligible(String),
    #[error("H2 not regular")]
    H2NotRegular,
    #[error("H2 least adjacency eigenvalue {0} is below -2")]
    H2LeastEigTooSmall(f64),
    #[error("family is empty")]
    EmptyFamily,
    #[error("family members have different orders ({0} and {1})")]
    MixedOrders(usize, usize),
    #[error(transparent)]
    Join(#[from] JoinError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Integer partition with every part >= 3, parts descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts `parts` descending; `None` if any part is below 3.
    pub fn new(mut parts: Vec<usize>) -> Option<Self> {
        if parts.is_empty() || parts.iter().any(|&p| p < 3) {
            return None;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Some(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// All partitions of `a` into parts >= 3, in descending lexicographic order.
pub fn partitions_min3(a: usize) -> Result<Vec<Partition>, EquienergeticError> {
    if a < 3 {
        return Err(EquienergeticError::TooSmall(a));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_partitions(a, a, &mut current, &mut out);
    Ok(out)
}

fn extend_partitions(
    rest: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if rest == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (3..=max_part.min(rest)).rev() {
        // a remainder of 1 or 2 can never be completed
        let left = rest - part;
        if left != 0 && left < 3 {
            continue;
        }
        current.push(part);
        extend_partitions(left, part, current, out);
        current.pop();
    }
}

/// Disjoint union of cycles `C_{p1} ∪ C_{p2} ∪ ...`.
pub fn cp_graph(p: &Partition) -> Graph {
    let cycles: Vec<Graph> = p
        .parts()
        .iter()
        .map(|&len| cycle(len).expect("parts are >= 3"))
        .collect();
    disjoint_union(&cycles).expect("partition is nonempty")
}

#[derive(Debug, Clone)]
pub struct FamilyMember {
    pub partition: Partition,
    pub join: CveGraph,
}

fn check_h1(h1: &Graph) -> Result<(), EquienergeticError> {
    let bad = |s: &str| Err(EquienergeticError::H1NotEligible(s.to_string()));
    match h1.is_regular() {
        None => return bad("H1 not regular"),
        Some(k) if k < 2 => return bad("H1 degree k1 < 2"),
        _ => {}
    }
    if !h1.is_triangle_free() {
        return bad("H1 not triangle-free");
    }
    if !h1.is_connected() {
        return bad("H1 not connected");
    }
    Ok(())
}

fn check_h2(h2: &Graph) -> Result<(), EquienergeticError> {
    if h2.order() == 0 || h2.is_regular().is_none() {
        return Err(EquienergeticError::H2NotRegular);
    }
    let spectrum = sym_eigenvalues(&adjacency_matrix(h2))?;
    let least = *spectrum.values().last().expect("nonempty");
    if least < -2.0 - LEAST_EIGENVALUE_SLACK {
        return Err(EquienergeticError::H2LeastEigTooSmall(least));
    }
    Ok(())
}

/// One join `H1^C ▷ (C_P^V ∪ H2^E)` per partition `P` of `a`.
pub fn equienergetic_family(
    h1: &Graph,
    h2: &Graph,
    a: usize,
) -> Result<Vec<FamilyMember>, EquienergeticError> {
    check_h1(h1)?;
    check_h2(h2)?;
    partitions_min3(a)?
        .into_iter()
        .map(|partition| {
            let join = cve_join(h1, &cp_graph(&partition), h2)?;
            Ok(FamilyMember { partition, join })
        })
        .collect()
}

/// The partition-independent part of the energy,
/// `Σ|−λ−2|` over non-principal eigenvalues of `C_P` plus `Σ|−γ−2|` over
/// non-principal eigenvalues of `H2`, which equals `2a − k2 + 2 n2 − 6`.
pub fn variable_part_energy(a: usize, k2: usize, n2: usize) -> f64 {
    (2 * a + 2 * n2) as f64 - k2 as f64 - 6.0
}

/// The same quantity computed from numeric adjacency spectra.
pub fn variable_part_energy_numeric(cp: &Graph, h2: &Graph) -> Result<f64, SpectralError> {
    let mut total = 0.0;
    for g in [cp, h2] {
        let s = sym_eigenvalues(&adjacency_matrix(g))?;
        total += s
            .values()
            .iter()
            .skip(1)
            .map(|x| (-x - 2.0).abs())
            .sum::<f64>();
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphSummary {
    pub order: usize,
    pub size: usize,
    pub regular_degree: Option<usize>,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Self {
        GraphSummary {
            order: g.order(),
            size: g.size(),
            regular_degree: g.is_regular(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MemberEnergy {
    pub partition: Partition,
    pub energy: f64,
}

/// Where two member spectra separate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NonCospectralWitness {
    pub members: (usize, usize),
    /// First index of the descending spectra differing by more than the tolerance.
    pub index: usize,
    pub max_gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyCertificate {
    pub a: usize,
    pub order: usize,
    pub base_pair: (GraphSummary, GraphSummary),
    pub members: Vec<MemberEnergy>,
    pub energy_spread: f64,
    pub energy_tol: f64,
    pub cospectral_tol: f64,
    pub cospectral_pairs: Vec<(usize, usize)>,
    pub witnesses: Vec<NonCospectralWitness>,
    pub pass: bool,
}

pub fn certify_family(
    family: &[FamilyMember],
    tol: f64,
) -> Result<FamilyCertificate, EquienergeticError> {
    certify_family_with(family, tol, tol)
}

/// Energies must agree within `energy_tol`; two members count as cospectral
/// when their sorted spectra agree within `cospectral_tol`.
pub fn certify_family_with(
    family: &[FamilyMember],
    energy_tol: f64,
    cospectral_tol: f64,
) -> Result<FamilyCertificate, EquienergeticError> {
    let first = family.first().ok_or(EquienergeticError::EmptyFamily)?;
    let order = first.join.graph().order();
    if let Some(m) = family.iter().find(|m| m.join.graph().order() != order) {
        return Err(EquienergeticError::MixedOrders(
            order,
            m.join.graph().order(),
        ));
    }

    let spectra: Vec<Spectrum> = family
        .par_iter()
        .map(|m| distance_spectrum(m.join.graph()))
        .collect::<Result<_, _>>()?;

    let members: Vec<MemberEnergy> = family
        .iter()
        .zip(&spectra)
        .map(|(m, s)| MemberEnergy {
            partition: m.partition.clone(),
            energy: s.energy(),
        })
        .collect();
    let (lo, hi) = members
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), m| {
            (lo.min(m.energy), hi.max(m.energy))
        });
    let energy_spread = hi - lo;

    let mut cospectral_pairs = Vec::new();
    let mut witnesses = Vec::new();
    for i in 0..spectra.len() {
        for j in i + 1..spectra.len() {
            match first_difference(&spectra[i], &spectra[j], cospectral_tol) {
                None => cospectral_pairs.push((i, j)),
                Some(index) => witnesses.push(NonCospectralWitness {
                    members: (i, j),
                    index,
                    max_gap: max_deviation(&spectra[i], &spectra[j]).unwrap_or(f64::INFINITY),
                }),
            }
        }
    }

    Ok(FamilyCertificate {
        a: first.join.params().n2,
        order,
        base_pair: (
            GraphSummary::of(first.join.g1()),
            GraphSummary::of(first.join.g3()),
        ),
        members,
        energy_spread,
        energy_tol,
        cospectral_tol,
        pass: energy_spread <= energy_tol && cospectral_pairs.is_empty(),
        cospectral_pairs,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    fn parts(p: &[Partition]) -> Vec<Vec<usize>> {
        p.iter().map(|p| p.parts().to_vec()).collect()
    }

    #[test]
    fn partition_examples() {
        assert_eq!(parts(&partitions_min3(3).unwrap()), vec![vec![3]]);
        assert_eq!(
            parts(&partitions_min3(7).unwrap()),
            vec![vec![7], vec![4, 3]]
        );
        assert_eq!(
            parts(&partitions_min3(9).unwrap()),
            vec![vec![9], vec![6, 3], vec![5, 4], vec![3, 3, 3]]
        );
        assert_eq!(partitions_min3(2), Err(EquienergeticError::TooSmall(2)));
        assert!(partitions_min3(4).unwrap().len() == 1);
        assert!(Partition::new(vec![3, 2]).is_none());
        assert_eq!(Partition::new(vec![3, 5]).unwrap().parts(), &[5, 3]);
    }

    #[test]
    fn cycle_unions() {
        let g = cp_graph(&Partition::new(vec![3, 3, 3]).unwrap());
        assert_eq!((g.order(), g.is_regular()), (9, Some(2)));
        assert_eq!(g.bfs(0).iter().filter(|d| d.is_some()).count(), 3);
        assert_eq!(
            cp_graph(&Partition::new(vec![9]).unwrap()),
            cycle(9).unwrap()
        );
        let g = cp_graph(&Partition::new(vec![4, 5]).unwrap());
        assert_eq!(g.order(), 9);
        assert_eq!(g.bfs(0).iter().filter(|d| d.is_some()).count(), 5);
    }

    #[test]
    fn family_construction() {
        let c4 = cycle(4).unwrap();
        let k2 = complete(2).unwrap();
        let fam = equienergetic_family(&c4, &k2, 9).unwrap();
        assert_eq!(fam.len(), 4);
        assert!(fam.iter().all(|m| m.join.graph().order() == 19));
        assert_eq!(equienergetic_family(&c4, &k2, 3).unwrap().len(), 1);
        assert!(matches!(
            equienergetic_family(&complete(4).unwrap(), &k2, 9),
            Err(EquienergeticError::H1NotEligible(m)) if m == "H1 not triangle-free"
        ));
        let star = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(
            equienergetic_family(&c4, &star, 9).unwrap_err(),
            EquienergeticError::H2NotRegular
        );
        assert!(matches!(
            equienergetic_family(&c4, &k2, 2),
            Err(EquienergeticError::TooSmall(2))
        ));
    }

    #[test]
    fn h2_least_eigenvalue_gate() {
        // K_{3,3} has least eigenvalue -3
        let k33 = crate::graph::complete_bipartite(3, 3).unwrap();
        assert!(matches!(
            equienergetic_family(&cycle(4).unwrap(), &k33, 6),
            Err(EquienergeticError::H2LeastEigTooSmall(x)) if (x + 3.0).abs() < 1e-9
        ));
        // cycles reach exactly -2 and pass
        assert!(equienergetic_family(&cycle(4).unwrap(), &cycle(6).unwrap(), 6).is_ok());
    }

    #[test]
    fn certificate_for_a9() {
        let fam = equienergetic_family(&cycle(4).unwrap(), &complete(2).unwrap(), 9).unwrap();
        let cert = certify_family(&fam, 1e-8).unwrap();
        assert!(cert.pass, "{cert:?}");
        assert!(cert.energy_spread <= 1e-8);
        assert!(cert.cospectral_pairs.is_empty());
        assert_eq!(cert.witnesses.len(), 6);
        assert_eq!((cert.a, cert.order), (9, 19));
    }

    #[test]
    fn singleton_and_duplicate_families() {
        let fam = equienergetic_family(&cycle(4).unwrap(), &complete(2).unwrap(), 3).unwrap();
        let cert = certify_family(&fam, 1e-8).unwrap();
        assert!(cert.pass);
        assert_eq!(cert.energy_spread, 0.0);

        let doubled = vec![fam[0].clone(), fam[0].clone()];
        let cert = certify_family(&doubled, 1e-8).unwrap();
        assert_eq!(cert.cospectral_pairs, vec![(0, 1)]);
        assert!(!cert.pass);

        assert_eq!(
            certify_family(&[], 1e-8).unwrap_err(),
            EquienergeticError::EmptyFamily
        );
    }

    #[test]
    fn mixed_orders_rejected() {
        let c4 = cycle(4).unwrap();
        let k2 = complete(2).unwrap();
        let mut fam = equienergetic_family(&c4, &k2, 3).unwrap();
        fam.extend(equienergetic_family(&c4, &k2, 6).unwrap());
        assert!(matches!(
            certify_family(&fam, 1e-8),
            Err(EquienergeticError::MixedOrders(13, 16))
        ));
    }

    #[test]
    fn variable_part() {
        assert_eq!(variable_part_energy(9, 1, 2), 15.0);
        assert_eq!(variable_part_energy(3, 1, 2), 3.0);
        let k2 = complete(2).unwrap();
        for p in partitions_min3(9).unwrap() {
            let numeric = variable_part_energy_numeric(&cp_graph(&p), &k2).unwrap();
            assert!((numeric - 15.0).abs() <= 1e-9, "{p}: {numeric}");
        }
    }
}
