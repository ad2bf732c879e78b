use serde::Serialize;

/// Eigenvalues sorted descending, with multiplicities grouped under a tolerance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    values: Vec<f64>,
    groups: Vec<(f64, usize)>,
    grouping_tol: f64,
}

impl Spectrum {
    /// Consecutive sorted values within `grouping_tol` of the first value of
    /// their group share a group; the representative is the group mean.
    pub fn from_values(mut values: Vec<f64>, grouping_tol: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        let mut groups: Vec<(f64, usize)> = Vec::new();
        let mut start = 0;
        for i in 1..=values.len() {
            if i == values.len() || values[start] - values[i] > grouping_tol {
                if i > start {
                    let len = i - start;
                    let mean = values[start..i].iter().sum::<f64>() / len as f64;
                    groups.push((mean, len));
                }
                start = i;
            }
        }
        Spectrum {
            values,
            groups,
            grouping_tol,
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `(representative, multiplicity)` pairs, descending.
    pub fn groups(&self) -> &[(f64, usize)] {
        &self.groups
    }

    pub fn grouping_tol(&self) -> f64 {
        self.grouping_tol
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn energy(&self) -> f64 {
        self.values.iter().map(|x| x.abs()).sum()
    }

    /// Grouped multiplicity of `value` (0 if no group is within the grouping tolerance).
    pub fn multiplicity_of(&self, value: f64) -> usize {
        self.groups
            .iter()
            .filter(|(rep, _)| (rep - value).abs() <= self.grouping_tol)
            .map(|&(_, m)| m)
            .sum()
    }
}

/// Largest pairwise gap between the sorted value lists, or `None` when the
/// dimensions differ.
pub fn max_deviation(a: &Spectrum, b: &Spectrum) -> Option<f64> {
    (a.dim() == b.dim()).then(|| {
        a.values
            .iter()
            .zip(&b.values)
            .fold(0.0f64, |acc, (x, y)| acc.max((x - y).abs()))
    })
}

/// First sorted index where the spectra differ by more than `tol`.
pub fn first_difference(a: &Spectrum, b: &Spectrum, tol: f64) -> Option<usize> {
    if a.dim() != b.dim() {
        return Some(a.dim().min(b.dim()));
    }
    a.values
        .iter()
        .zip(&b.values)
        .position(|(x, y)| (x - y).abs() > tol)
}

pub fn spectra_equal(a: &Spectrum, b: &Spectrum, tol: f64) -> bool {
    max_deviation(a, b).is_some_and(|d| d <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grouping() {
        let s = Spectrum::from_values(vec![-1.0, 3.0, -1.0 + 1e-9, -1.0 - 1e-9], 1e-6);
        assert_eq!(s.values()[0], 3.0);
        assert_eq!(s.groups().len(), 2);
        assert_eq!(s.groups()[1].1, 3);
        assert_eq!(s.multiplicity_of(-1.0), 3);
        assert_eq!(s.multiplicity_of(0.0), 0);
        assert_eq!(s.groups().iter().map(|g| g.1).sum::<usize>(), s.dim());
    }

    #[test]
    fn equality() {
        let a = Spectrum::from_values(vec![4.0, 0.0, -2.0, -2.0], 1e-6);
        let b = Spectrum::from_values(vec![3.0, -1.0, -1.0, -1.0], 1e-6);
        assert!(spectra_equal(&a, &a, 0.0));
        assert!(!spectra_equal(&a, &b, 1e-6));
        assert_eq!(first_difference(&a, &b, 1e-6), Some(0));
        assert_eq!(first_difference(&a, &a, 1e-6), None);
        let c = Spectrum::from_values(vec![1.0], 1e-6);
        assert!(!spectra_equal(&a, &c, 10.0));
        assert_eq!(max_deviation(&a, &c), None);
    }
}
