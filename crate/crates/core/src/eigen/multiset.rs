use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralValue {
    pub value: f64,
    pub multiplicity: usize,
    /// Known analytically to be this integer, rather than computed numerically.
    pub exact: bool,
}

/// Eigenvalues with multiplicities, sorted descending.
#[derive(Debug, Clone, PartialEq, Default, Serialize)]
#[serde(transparent)]
pub struct SpectrumMultiset {
    entries: Vec<SpectralValue>,
}

impl SpectrumMultiset {
    /// Group numerically computed values: after sorting descending, a value
    /// joins the current group while it is within `merge_tol` of the group's
    /// largest member. The group value is the mean.
    pub fn from_values(values: &[f64], merge_tol: f64) -> Self {
        let items: Vec<(f64, bool)> = values.iter().map(|&v| (v, false)).collect();
        Self::merge(items, merge_tol)
    }

    /// Exact integer eigenvalues as `(value, multiplicity)`; zero multiplicities are dropped.
    pub fn from_exact(pairs: impl IntoIterator<Item = (i64, usize)>) -> Self {
        let items = pairs
            .into_iter()
            .flat_map(|(v, k)| std::iter::repeat((v as f64, true)).take(k))
            .collect();
        Self::merge(items, 0.5)
    }

    /// Multiset union. Coinciding values merge under `merge_tol`; a merged
    /// group stays exact only if all of its members are.
    pub fn union(&self, other: &SpectrumMultiset, merge_tol: f64) -> Self {
        let items = self.flat().chain(other.flat()).collect();
        Self::merge(items, merge_tol)
    }

    fn flat(&self) -> impl Iterator<Item = (f64, bool)> + '_ {
        self.entries
            .iter()
            .flat_map(|e| std::iter::repeat((e.value, e.exact)).take(e.multiplicity))
    }

    fn merge(mut items: Vec<(f64, bool)>, merge_tol: f64) -> Self {
        items.sort_by(|a, b| b.0.total_cmp(&a.0));
        let mut entries: Vec<SpectralValue> = Vec::new();
        let mut start = 0;
        while start < items.len() {
            let head = items[start].0;
            let mut end = start + 1;
            while end < items.len() && head - items[end].0 < merge_tol {
                end += 1;
            }
            let group = &items[start..end];
            let exact_member = group.iter().find(|(_, exact)| *exact).map(|(v, _)| *v);
            let value = exact_member
                .unwrap_or_else(|| group.iter().map(|(v, _)| v).sum::<f64>() / group.len() as f64);
            entries.push(SpectralValue {
                value,
                multiplicity: group.len(),
                exact: group.iter().all(|(_, exact)| *exact),
            });
            start = end;
        }
        Self { entries }
    }

    pub fn entries(&self) -> &[SpectralValue] {
        &self.entries
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Every eigenvalue repeated by multiplicity, descending.
    pub fn expanded(&self) -> Vec<f64> {
        self.flat().map(|(v, _)| v).collect()
    }

    pub fn max(&self) -> Option<f64> {
        self.entries.first().map(|e| e.value)
    }

    pub fn min(&self) -> Option<f64> {
        self.entries.last().map(|e| e.value)
    }

    pub fn sum(&self) -> f64 {
        self.entries.iter().map(|e| e.value * e.multiplicity as f64).sum()
    }

    /// Number of eigenvalues (with multiplicity) within `tol` of `target`.
    pub fn count_near(&self, target: f64, tol: f64) -> usize {
        self.entries
            .iter()
            .filter(|e| (e.value - target).abs() < tol)
            .map(|e| e.multiplicity)
            .sum()
    }

    pub fn is_integral(&self, tol: f64) -> bool {
        self.entries.iter().all(|e| (e.value - e.value.round()).abs() < tol)
    }

    /// Compact rendering, e.g. `6^1 4^1 2^3 0^1`.
    pub fn to_text(&self, integral_tol: f64) -> String {
        self.entries
            .iter()
            .map(|e| format!("{}^{}", format_value(e.value, integral_tol), e.multiplicity))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Integers print bare; everything else with six decimals.
pub(crate) fn format_value(value: f64, integral_tol: f64) -> String {
    let rounded = value.round();
    if (value - rounded).abs() < integral_tol {
        format!("{}", rounded as i64)
    } else {
        format!("{value:.6}")
    }
}
