use serde::{Deserialize, Serialize};

use super::constructions::best_even_count_divisor;
use super::{
    lower_bound, search_min, witness_even_count_divisor, witness_flat, witness_thm_main, SearchError, SparseSignature,
    Strategy,
};
use crate::numtheory::is_prime_power;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UpperSource {
    CorPq,
    ThmMain,
    LemFlat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpperBound {
    pub value: u64,
    pub source: UpperSource,
    pub witness: SparseSignature,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Omission {
    pub source: UpperSource,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactValue {
    #[serde(flatten)]
    pub witness: SparseSignature,
    pub strategy: Strategy,
}

impl ExactValue {
    pub fn degree(&self) -> u64 {
        self.witness.degree()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SearchStatus {
    Complete,
    /// Prime powers need no search.
    Skipped,
    BudgetExhausted {
        lowest_unexplored_degree: u64,
    },
    /// Beyond the configured search limits.
    NotAttempted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: u64,
    /// Every member of `A_n` has degree strictly above this.
    pub lower: u64,
    pub uppers: Vec<UpperBound>,
    pub omitted: Vec<Omission>,
    pub exact: Option<ExactValue>,
    pub empty: bool,
    pub search: SearchStatus,
}

impl BoundReport {
    pub fn best_upper(&self) -> Option<u64> {
        self.uppers.iter().map(|u| u.value).min()
    }

    /// Every witness is a member of the stated degree, and
    /// `lower < exact <= min(uppers)`.
    pub fn is_consistent(&self) -> bool {
        let witnesses_ok = self
            .uppers
            .iter()
            .all(|u| u.witness.degree() == u.value && u.witness.is_member(self.n));
        let exact_ok = self.exact.as_ref().is_none_or(|e| {
            e.witness.is_member(self.n) && e.degree() > self.lower && self.best_upper().is_none_or(|b| e.degree() <= b)
        });
        witnesses_ok && exact_ok && !(self.empty && (self.exact.is_some() || !self.uppers.is_empty()))
    }
}

/// Which strategy, if any, `bounds_report_with` runs for each `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundsPolicy {
    /// Exhaustive search without a budget up to this `n`.
    pub exhaustive_max: u64,
    /// Budgeted search up to this `n`.
    pub budgeted_max: u64,
    pub budgeted_strategy: Strategy,
    pub budget: u64,
}

impl Default for BoundsPolicy {
    fn default() -> Self {
        BoundsPolicy {
            exhaustive_max: 36,
            budgeted_max: 60,
            budgeted_strategy: Strategy::Exhaustive,
            budget: 20_000_000,
        }
    }
}

fn upper_bounds(n: u64) -> (Vec<UpperBound>, Vec<Omission>) {
    let mut uppers = Vec::new();
    let mut omitted = Vec::new();
    let mut record = |source, result: Result<SparseSignature, String>| match result {
        Ok(witness) => uppers.push(UpperBound {
            value: witness.degree(),
            source,
            witness,
        }),
        Err(reason) => omitted.push(Omission { source, reason }),
    };
    record(
        UpperSource::CorPq,
        best_even_count_divisor(n)
            .ok_or_else(|| "no square-free divisor with an even number of primes".to_string())
            .and_then(|d| witness_even_count_divisor(n, d).map_err(|e| e.to_string())),
    );
    record(
        UpperSource::ThmMain,
        witness_thm_main(n).map(|(_, s)| s).map_err(|e| e.to_string()),
    );
    record(UpperSource::LemFlat, witness_flat(n).map_err(|e| e.to_string()));
    (uppers, omitted)
}

/// Lower bound, every applicable construction, and the exact minimum when
/// the default search policy reaches it.
pub fn bounds_report(n: u64) -> Result<BoundReport, SearchError> {
    bounds_report_with(n, &BoundsPolicy::default())
}

pub fn bounds_report_with(n: u64, policy: &BoundsPolicy) -> Result<BoundReport, SearchError> {
    if n < 2 {
        return Err(SearchError::ModulusTooSmall(n));
    }
    let lower = lower_bound(n);
    let (uppers, omitted) = upper_bounds(n);
    let mut report = BoundReport {
        n,
        lower,
        uppers,
        omitted,
        exact: None,
        empty: false,
        search: SearchStatus::NotAttempted,
    };
    if is_prime_power(n) {
        report.empty = true;
        report.search = SearchStatus::Skipped;
        return Ok(report);
    }
    let run = if n <= policy.exhaustive_max {
        Some((Strategy::Exhaustive, None))
    } else if n <= policy.budgeted_max {
        Some((policy.budgeted_strategy, Some(policy.budget)))
    } else {
        None
    };
    if let Some((strategy, budget)) = run {
        match search_min(n, strategy, budget) {
            Ok(Some(witness)) => {
                report.exact = Some(ExactValue { witness, strategy });
                report.search = SearchStatus::Complete;
            }
            Ok(None) => {
                report.empty = true;
                report.search = SearchStatus::Complete;
            }
            Err(SearchError::BudgetExhausted {
                lowest_unexplored_degree,
                ..
            }) => {
                report.search = SearchStatus::BudgetExhausted {
                    lowest_unexplored_degree,
                }
            }
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}
