//! Cross-checks of the brute-force Loday construction against closed forms
//! and against independently computed coequalizers.

mod bar;
mod checks;
mod suite;

pub use bar::two_sided_bar;
pub use checks::{
    check_collapse_page, check_collapse_control, check_ground, check_juggle, check_monoid_closed_form, check_pair_coequalizer,
    check_pushout_coequalizer, check_quotient_pair, check_thh_coefficients, check_two_sided_bar, stated_thh_answer, MonoidCase,
};
pub use suite::{run_suite, suite_names, SuiteEntry};

use crate::algebra::AlgebraError;
use crate::exact::HomologyTable;
use crate::gca::GcaError;
use crate::loday::LodayError;
use crate::simplicial::SimplicialError;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::time::Instant;

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("the algebra has no augmentation, so there is no section of the coefficients")]
    NoSection,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error(transparent)]
    Loday(#[from] LodayError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
    #[error(transparent)]
    Gca(#[from] GcaError),
}

/// One compared value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub quantity: String,
    pub degree: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<u32>,
    pub expected: String,
    pub computed: String,
}

impl CheckRow {
    pub fn agrees(&self) -> bool {
        self.expected == self.computed
    }
}

/// Outcome of one check. Equality ignores the runtime.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub parameters: BTreeMap<String, String>,
    pub rows: Vec<CheckRow>,
    pub passed: bool,
    pub runtime_ms: u64,
}

impl PartialEq for CheckReport {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.parameters == other.parameters && self.rows == other.rows && self.passed == other.passed
    }
}

impl CheckReport {
    pub(crate) fn new(name: &str) -> Self {
        CheckReport { name: name.into(), parameters: BTreeMap::new(), rows: Vec::new(), passed: false, runtime_ms: 0 }
    }

    pub(crate) fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.parameters.insert(key.into(), value.to_string());
        self
    }

    pub(crate) fn row(&mut self, quantity: &str, degree: usize, weight: Option<u32>, expected: String, computed: String) {
        self.rows.push(CheckRow { quantity: quantity.into(), degree, weight, expected, computed });
    }

    pub(crate) fn finish(mut self, started: Instant) -> Self {
        self.passed = !self.rows.is_empty() && self.rows.iter().all(CheckRow::agrees);
        self.runtime_ms = started.elapsed().as_millis() as u64;
        self
    }

    pub fn first_mismatch(&self) -> Option<&CheckRow> {
        self.rows.iter().find(|r| !r.agrees())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// One line: name, verdict, parameters and the first disagreement.
    pub fn summary(&self) -> String {
        let params: Vec<String> = self.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut line = format!("{} {} [{}]", if self.passed { "PASS" } else { "FAIL" }, self.name, params.join(", "));
        if let Some(r) = self.first_mismatch() {
            let w = r.weight.map_or(String::new(), |w| format!(", weight {w}"));
            line.push_str(&format!(
                ": {} differs at degree {}{w}: expected {}, computed {}",
                r.quantity, r.degree, r.expected, r.computed
            ));
        } else if self.rows.is_empty() {
            line.push_str(": nothing was compared");
        }
        line
    }

    /// Level dimensions `level -> weight -> dim` on both sides.
    pub(crate) fn compare_levels(
        &mut self,
        quantity: &str,
        expected: &[BTreeMap<u32, usize>],
        computed: &[BTreeMap<u32, usize>],
    ) {
        for (n, (e, c)) in expected.iter().zip(computed).enumerate() {
            let weights: BTreeSet<u32> = e.keys().chain(c.keys()).copied().collect();
            let e_total: usize = e.values().sum();
            let c_total: usize = c.values().sum();
            self.row(quantity, n, None, e_total.to_string(), c_total.to_string());
            if weights.len() > 1 {
                for w in weights {
                    let get = |m: &BTreeMap<u32, usize>| m.get(&w).copied().unwrap_or(0).to_string();
                    self.row(quantity, n, Some(w), get(e), get(c));
                }
            }
        }
    }

    /// Homology per degree, and per weight wherever either side is graded.
    pub(crate) fn compare_homology(&mut self, quantity: &str, expected: &HomologyTable, computed: &HomologyTable) {
        let top = expected.max_degree().min(computed.max_degree());
        for k in 0..=top {
            self.row(quantity, k, None, expected.degrees[k].to_string(), computed.degrees[k].to_string());
        }
        let cells: BTreeSet<(usize, u32)> = expected.cells.keys().chain(computed.cells.keys()).copied().collect();
        let weights: BTreeSet<u32> = cells.iter().map(|&(_, w)| w).collect();
        if weights.len() <= 1 {
            return;
        }
        for (k, w) in cells {
            if k > top {
                continue;
            }
            let get = |t: &HomologyTable| {
                t.cells.get(&(k, w)).cloned().unwrap_or_else(|| crate::exact::HomologyEntry::zero(t.coefficients))
            };
            let (e, c) = (get(expected), get(computed));
            if !(e.is_zero() && c.is_zero()) {
                self.row(quantity, k, Some(w), e.to_string(), c.to_string());
            }
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.summary())?;
        writeln!(f, "  {:<22} {:>3} {:>6}  {:<16} {:<16}", "quantity", "k", "weight", "expected", "computed")?;
        for r in &self.rows {
            let w = r.weight.map_or("-".to_string(), |w| w.to_string());
            let mark = if r.agrees() { "" } else { "  <-" };
            writeln!(f, "  {:<22} {:>3} {:>6}  {:<16} {:<16}{mark}", r.quantity, r.degree, w, r.expected, r.computed)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FinAlgebra;
    use crate::exact::{Coefficients, HomologyEntry};
    use crate::simplicial::SimplicialPair;
    use std::sync::Arc;

    fn table(dims: &[u64]) -> HomologyTable {
        let c = Coefficients::prime_field(2).unwrap();
        let mut t = HomologyTable::new(c, dims.len() - 1);
        for (k, &d) in dims.iter().enumerate() {
            t.add_cell(k, 0, HomologyEntry::Field { dim: d });
        }
        t
    }

    #[test]
    fn mismatch_is_reported_with_both_values() {
        let mut r = CheckReport::new("demo").param("N", 2);
        r.compare_homology("homology", &table(&[1, 2, 3]), &table(&[1, 2, 4]));
        let r = r.finish(Instant::now());
        assert!(!r.passed);
        let m = r.first_mismatch().unwrap();
        assert_eq!((m.degree, m.expected.as_str(), m.computed.as_str()), (2, "3", "4"));
        assert!(r.summary().contains("expected 3, computed 4"));
    }

    #[test]
    fn runtime_is_not_part_of_equality() {
        let mut a = CheckReport::new("demo");
        a.row("dim", 0, None, "1".into(), "1".into());
        let mut b = a.clone();
        a.runtime_ms = 1;
        b.runtime_ms = 900;
        assert_eq!(a, b);
        assert_eq!(CheckReport::from_json(&a.to_json()).unwrap(), a);
    }

    #[test]
    fn empty_report_does_not_pass() {
        assert!(!CheckReport::new("nothing").finish(Instant::now()).passed);
    }

    #[test]
    fn level_rows_split_by_weight() {
        let mut r = CheckReport::new("levels");
        let e = vec![BTreeMap::from([(0, 1), (1, 2)])];
        let c = vec![BTreeMap::from([(0, 1), (1, 3)])];
        r.compare_levels("level dim", &e, &c);
        assert_eq!(r.rows.len(), 3);
        assert!(!r.rows[0].agrees());
        assert_eq!(r.rows[2].weight, Some(1));
    }

    #[test]
    fn errors_for_unsupported_inputs() {
        let zi = Arc::new(FinAlgebra::gaussian_integers().with_augmentation(None).unwrap());
        let pair = SimplicialPair::delta_boundary(1).unwrap();
        assert!(matches!(check_quotient_pair(&pair, &zi, 2), Err(VerifyError::NoSection)));
        assert!(matches!(
            check_monoid_closed_form(MonoidCase::Cyclic { p: 2, q: 4 }, 1, 3),
            Err(VerifyError::Unsupported(_))
        ));
        assert!(matches!(run_suite(&["nonsense"]), Err(VerifyError::UnknownCheck(_))));
    }

    #[test]
    fn suite_selection_by_prefix() {
        let got = run_suite(&["thh"]).unwrap();
        assert_eq!(got.len(), 4);
        assert!(got.iter().all(|(_, r)| r.as_ref().unwrap().passed));
        assert!(suite_names().contains(&"collapse-control"));
    }

    #[test]
    fn reports_are_reproducible() {
        let a = check_juggle(&crate::algebra::AlgebraMap::identity(Arc::new(
            FinAlgebra::truncated_polynomial(Coefficients::prime_field(2).unwrap(), 2, 1).unwrap(),
        )), 3)
        .unwrap();
        let b = check_juggle(&crate::algebra::AlgebraMap::identity(Arc::new(
            FinAlgebra::truncated_polynomial(Coefficients::prime_field(2).unwrap(), 2, 1).unwrap(),
        )), 3)
        .unwrap();
        assert_eq!(a, b);
        assert!(a.passed);
    }
}
