use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::grid::{signature_domains, Budget, CrtGrid, Domain, Exhausted};
use super::{best_constructive_upper, lower_bound, SearchError, SparseSignature};
use crate::numtheory::is_prime_power;
use crate::polyring::cyclotomic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Complete search on the CRT grid.
    Exhaustive,
    /// Hash join of half-range residues modulo `Phi_n`.
    MeetInMiddle,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Exhaustive => "exhaustive",
            Strategy::MeetInMiddle => "meet_in_middle",
        })
    }
}

impl FromStr for Strategy {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, SearchError> {
        match s {
            "exhaustive" => Ok(Strategy::Exhaustive),
            "meet_in_middle" | "meet-in-middle" | "mitm" => Ok(Strategy::MeetInMiddle),
            other => Err(SearchError::UnknownStrategy(other.to_string())),
        }
    }
}

/// Turns a solver coefficient vector into a verified signature.
fn accept(n: u64, m: u64, coeffs: &[i64]) -> SparseSignature {
    let inner = (1..m).filter(|&k| coeffs[k as usize] == -1).collect();
    let s = SparseSignature::new(m, inner).expect("solver respects the signature domains");
    assert_eq!(s.sg_statistic(n), 0, "solver produced a non-member {s} for n = {n}");
    assert!(s.is_member(n), "solver produced a non-member {s} for n = {n}");
    s
}

/// Lexicographically smallest member of degree `m`, built one inner
/// exponent at a time with the solver as a feasibility oracle.
fn exhaustive_at(grid: &CrtGrid, n: u64, m: u64, budget: &mut Budget) -> Result<Option<SparseSignature>, Exhausted> {
    let m_idx = m as usize;
    let mut domains = signature_domains(n, m);
    let Some(mut solution) = grid.solve(&domains, budget)? else {
        return Ok(None);
    };
    let mut last = 0usize;
    loop {
        let mut closed = domains.clone();
        closed[last + 1..m_idx].fill(Domain::ZERO);
        if let Some(s) = grid.solve(&closed, budget)? {
            solution = s;
            break;
        }
        let mut next = (last + 1..m_idx)
            .find(|&k| solution[k] == -1)
            .expect("an open prefix has a further inner exponent");
        for s in last + 1..next {
            let mut trial = domains.clone();
            trial[last + 1..s].fill(Domain::ZERO);
            trial[s] = Domain::NEG;
            if let Some(found) = grid.solve(&trial, budget)? {
                solution = found;
                next = s;
                break;
            }
        }
        domains[last + 1..next].fill(Domain::ZERO);
        domains[next] = Domain::NEG;
        last = next;
    }
    Ok(Some(accept(n, m, &solution)))
}

/// Coefficient vectors of `x^k mod Phi_n` for `k = 0..=m`.
fn power_residues(n: u64, m: u64) -> Vec<Vec<i64>> {
    let phi: Vec<i64> = cyclotomic(n)
        .coeffs()
        .iter()
        .map(|c| i64::try_from(c).expect("cyclotomic coefficients fit in i64 at search sizes"))
        .collect();
    let width = phi.len() - 1;
    let mut current = vec![0i64; width];
    current[0] = 1;
    let mut out = Vec::with_capacity(m as usize + 1);
    for _ in 0..=m {
        out.push(current.clone());
        let top = current[width - 1];
        current.rotate_right(1);
        current[0] = 0;
        for (c, p) in current.iter_mut().zip(&phi) {
            *c -= top * p;
        }
    }
    out
}

/// Visits the residue sum of every subset of `exponents` in Gray-code order.
fn for_each_subset_sum(
    exponents: &[u64],
    residues: &[Vec<i64>],
    budget: &mut Budget,
    mut visit: impl FnMut(&[i64], u64),
) -> Result<(), Exhausted> {
    let width = residues[0].len();
    let mut sum = vec![0i64; width];
    let mut mask = 0u64;
    budget.tick()?;
    visit(&sum, mask);
    for i in 1u64..(1u64 << exponents.len()) {
        budget.tick()?;
        let bit = i.trailing_zeros() as usize;
        let r = &residues[exponents[bit] as usize];
        mask ^= 1 << bit;
        let sign = if mask >> bit & 1 == 1 { 1 } else { -1 };
        for (s, x) in sum.iter_mut().zip(r) {
            *s += sign * x;
        }
        visit(&sum, mask);
    }
    Ok(())
}

fn mask_to_exponents(exponents: &[u64], mask: u64) -> impl Iterator<Item = u64> + '_ {
    exponents
        .iter()
        .enumerate()
        .filter(move |(i, _)| mask >> i & 1 == 1)
        .map(|(_, &k)| k)
}

/// Every member of degree `m` via a hash join on residues, returning the
/// lexicographically smallest.
fn meet_in_middle_at(n: u64, m: u64, budget: &mut Budget) -> Result<Option<SparseSignature>, Exhausted> {
    let residues = power_residues(n, m);
    let target: Vec<i64> = residues[m as usize]
        .iter()
        .zip(&residues[0])
        .map(|(a, b)| a - b)
        .collect();
    let half = (m - 1) / 2;
    let left: Vec<u64> = (1..=half).collect();
    let right: Vec<u64> = (half + 1..m).collect();
    if let Some(limit) = budget.limit {
        let needed = (1u64 << left.len()) + (1u64 << right.len());
        if budget.used.saturating_add(needed) > limit {
            return Err(Exhausted);
        }
    }
    let mut table: HashMap<Vec<i64>, Vec<u64>> = HashMap::new();
    for_each_subset_sum(&right, &residues, budget, |sum, mask| {
        table.entry(sum.to_vec()).or_default().push(mask);
    })?;
    let mut best: Option<SparseSignature> = None;
    let mut need = vec![0i64; target.len()];
    for_each_subset_sum(&left, &residues, budget, |sum, left_mask| {
        for ((x, t), s) in need.iter_mut().zip(&target).zip(sum) {
            *x = t - s;
        }
        let Some(right_masks) = table.get(&need) else {
            return;
        };
        for &right_mask in right_masks {
            let inner = mask_to_exponents(&left, left_mask)
                .chain(mask_to_exponents(&right, right_mask))
                .collect();
            let candidate = SparseSignature::new(m, inner).expect("exponents lie in 1..m");
            if candidate.sg_statistic(n) != 0 || !candidate.is_member(n) {
                continue;
            }
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
    })?;
    Ok(best)
}

/// Minimum-degree member of `A_n`, lexicographically smallest among those
/// of that degree; `None` when `A_n` is empty.
///
/// Prime powers return `None` without searching. `budget` caps solver nodes
/// (exhaustive) or table entries (meet-in-the-middle).
pub fn search_min(n: u64, strategy: Strategy, budget: Option<u64>) -> Result<Option<SparseSignature>, SearchError> {
    if n < 2 {
        return Err(SearchError::ModulusTooSmall(n));
    }
    if is_prime_power(n) {
        return Ok(None);
    }
    let mut budget = Budget::new(budget);
    let grid = (strategy == Strategy::Exhaustive).then(|| CrtGrid::new(n));
    for m in (lower_bound(n) + 1).max(2)..n {
        let found = match &grid {
            Some(grid) => exhaustive_at(grid, n, m, &mut budget),
            None => meet_in_middle_at(n, m, &mut budget),
        };
        match found {
            Ok(Some(s)) => return Ok(Some(s)),
            Ok(None) => {}
            Err(Exhausted) => {
                return Err(SearchError::BudgetExhausted {
                    best_upper: best_constructive_upper(n),
                    lowest_unexplored_degree: m,
                })
            }
        }
    }
    Ok(None)
}

/// Members of `A_n` of the given degree in ascending order, at most `limit`.
pub fn enumerate_members(n: u64, degree: u64, limit: usize) -> Vec<SparseSignature> {
    if degree < 2 || degree >= n {
        return Vec::new();
    }
    let grid = CrtGrid::new(n);
    let mut out: Vec<SparseSignature> = grid
        .solve_all(&signature_domains(n, degree), limit)
        .iter()
        .map(|c| accept(n, degree, c))
        .collect();
    out.sort();
    out
}
