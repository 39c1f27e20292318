//! Vanishing at `zeta_n` for polynomials of degree below `n`, on the CRT grid.
//!
//! Write `n = t * n0` with `n0 = rad(n) = p_1 ... p_r`. Cell `k` splits as
//! `k = i + t * j` with class `i < t`, and `j` has CRT coordinates
//! `(j mod p_1, ..., j mod p_r)`. Since `1, zeta_n, ..., zeta_n^(t-1)` is a
//! basis over `Q(zeta_n0)`, a coefficient vector `c` vanishes at `zeta_n` iff
//! each class vanishes at `zeta_n0` independently. Within a class, using the
//! basis of products of non-trivial prime roots, that holds iff for every
//! tuple `a` with all coordinates nonzero
//!
//! ```text
//! sum_{S subset [r]} (-1)^(r - |S|) c(a|_S) = 0
//! ```
//!
//! where `a|_S` zeroes the coordinates outside `S`. Each such "full" cell is
//! therefore determined by the non-full cells of its class, and appears in
//! exactly one constraint.

use crate::numtheory::factorize;

/// Allowed values of one coefficient, as a bit set over `{-1, 0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Domain(u8);

impl Domain {
    pub const NEG: Domain = Domain(0b001);
    pub const ZERO: Domain = Domain(0b010);
    pub const POS: Domain = Domain(0b100);
    pub const NEG_OR_ZERO: Domain = Domain(0b011);

    fn contains(self, v: i64) -> bool {
        (-1..=1).contains(&v) && self.0 & (1 << (v + 1)) != 0
    }

    fn values(self) -> impl Iterator<Item = i64> {
        // -1 first so that the first solution found prefers inner exponents
        [-1i64, 0, 1].into_iter().filter(move |&v| self.contains(v))
    }

    fn is_empty(self) -> bool {
        self.0 == 0
    }

    fn min(self) -> i64 {
        self.values().next().expect("non-empty domain")
    }

    fn max(self) -> i64 {
        self.values().last().expect("non-empty domain")
    }

    fn meets(self, lo: i64, hi: i64) -> bool {
        self.values().any(|v| lo <= v && v <= hi)
    }
}

/// Coefficient domains for `x^m - sum_{k in K} x^k - 1` with `m < n`.
pub(crate) fn signature_domains(n: u64, m: u64) -> Vec<Domain> {
    (0..n)
        .map(|k| match k {
            0 => Domain::NEG,
            k if k == m => Domain::POS,
            k if k < m => Domain::NEG_OR_ZERO,
            _ => Domain::ZERO,
        })
        .collect()
}

struct Constraint {
    full: usize,
    /// `(position among the class's free cells, coefficient)`; the full
    /// cell's value is `sum coefficient * value`.
    terms: Vec<(usize, i64)>,
}

struct ClassSystem {
    free: Vec<usize>,
    constraints: Vec<Constraint>,
    /// For each free position, `(constraint, coefficient)` pairs.
    incidence: Vec<Vec<(usize, i64)>>,
}

/// Counts search nodes and enforces an optional limit.
pub(crate) struct Budget {
    pub used: u64,
    pub limit: Option<u64>,
}

impl Budget {
    pub fn new(limit: Option<u64>) -> Self {
        Budget { used: 0, limit }
    }

    pub fn tick(&mut self) -> Result<(), Exhausted> {
        self.used += 1;
        match self.limit {
            Some(l) if self.used > l => Err(Exhausted),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Exhausted;

/// The vanishing constraints for one modulus `n`.
pub(crate) struct CrtGrid {
    n: usize,
    classes: Vec<ClassSystem>,
}

impl CrtGrid {
    pub fn new(n: u64) -> Self {
        let primes: Vec<u64> = factorize(n).expect("n >= 1").primes().collect();
        let n0: u64 = primes.iter().product();
        let t = (n / n0) as usize;
        let r = primes.len();
        let coords = |j: u64| -> Vec<u64> { primes.iter().map(|p| j % p).collect() };
        // CRT inverse on Z_n0: j from its coordinates
        let mut from_coords = std::collections::HashMap::new();
        for j in 0..n0 {
            from_coords.insert(coords(j), j);
        }
        let classes = (0..t)
            .map(|i| {
                let cell = |j: u64| i + t * j as usize;
                let free: Vec<u64> = {
                    let mut v: Vec<u64> = (0..n0).filter(|&j| coords(j).contains(&0)).collect();
                    v.sort_by_key(|&j| (coords(j).iter().filter(|&&c| c != 0).count(), j));
                    v
                };
                let position: std::collections::HashMap<u64, usize> =
                    free.iter().enumerate().map(|(p, &j)| (j, p)).collect();
                let mut constraints = Vec::new();
                for j in (0..n0).filter(|&j| !coords(j).contains(&0)) {
                    let a = coords(j);
                    let terms = (0..(1usize << r) - 1)
                        .map(|mask| {
                            let restricted: Vec<u64> =
                                (0..r).map(|l| if mask >> l & 1 == 1 { a[l] } else { 0 }).collect();
                            let kept = mask.count_ones() as usize;
                            // full + sum_{S proper} (-1)^(r-|S|) c_S = 0
                            let coefficient = if (r - kept).is_multiple_of(2) { -1 } else { 1 };
                            (position[&from_coords[&restricted]], coefficient)
                        })
                        .collect();
                    constraints.push(Constraint { full: cell(j), terms });
                }
                let mut incidence = vec![Vec::new(); free.len()];
                for (ci, c) in constraints.iter().enumerate() {
                    for &(p, a) in &c.terms {
                        incidence[p].push((ci, a));
                    }
                }
                ClassSystem {
                    free: free.into_iter().map(cell).collect(),
                    constraints,
                    incidence,
                }
            })
            .collect();
        CrtGrid { n: n as usize, classes }
    }

    /// One coefficient vector within `domains` vanishing at `zeta_n`, if any.
    pub fn solve(&self, domains: &[Domain], budget: &mut Budget) -> Result<Option<Vec<i64>>, Exhausted> {
        assert_eq!(domains.len(), self.n);
        let mut out = vec![0i64; self.n];
        for class in &self.classes {
            let mut found = None;
            class.search(domains, budget, &mut |values| {
                found = Some(values.to_vec());
                false
            })?;
            match found {
                Some(values) => class.write(&values, &mut out),
                None => return Ok(None),
            }
        }
        Ok(Some(out))
    }

    /// Every coefficient vector within `domains` vanishing at `zeta_n`, up to
    /// `limit` of them.
    pub fn solve_all(&self, domains: &[Domain], limit: usize) -> Vec<Vec<i64>> {
        let mut budget = Budget::new(None);
        let mut partial = vec![vec![0i64; self.n]];
        for class in &self.classes {
            let mut per_class = Vec::new();
            class
                .search(domains, &mut budget, &mut |values| {
                    per_class.push(values.to_vec());
                    per_class.len() < limit
                })
                .expect("unlimited budget");
            let mut next = Vec::new();
            'outer: for base in &partial {
                for values in &per_class {
                    let mut v = base.clone();
                    class.write(values, &mut v);
                    next.push(v);
                    if next.len() >= limit {
                        break 'outer;
                    }
                }
            }
            partial = next;
            if partial.is_empty() {
                break;
            }
        }
        partial
    }
}

impl ClassSystem {
    fn write(&self, values: &[i64], out: &mut [i64]) {
        for (&k, &v) in self.free.iter().zip(values) {
            out[k] = v;
        }
        for c in &self.constraints {
            out[c.full] = c.terms.iter().map(|&(p, a)| a * values[p]).sum();
        }
    }

    /// Depth-first search with interval pruning. `visit` receives each
    /// solution and returns whether to continue.
    fn search(
        &self,
        domains: &[Domain],
        budget: &mut Budget,
        visit: &mut dyn FnMut(&[i64]) -> bool,
    ) -> Result<(), Exhausted> {
        let free_domains: Vec<Domain> = self.free.iter().map(|&k| domains[k]).collect();
        if free_domains.iter().any(|d| d.is_empty()) {
            return Ok(());
        }
        let full_domains: Vec<Domain> = self.constraints.iter().map(|c| domains[c.full]).collect();
        let fixed = vec![0i64; self.constraints.len()];
        let mut lo = vec![0i64; self.constraints.len()];
        let mut hi = vec![0i64; self.constraints.len()];
        for (ci, c) in self.constraints.iter().enumerate() {
            for &(p, a) in &c.terms {
                let (x, y) = (a * free_domains[p].min(), a * free_domains[p].max());
                lo[ci] += x.min(y);
                hi[ci] += x.max(y);
            }
            if !full_domains[ci].meets(lo[ci], hi[ci]) {
                return Ok(());
            }
        }
        let mut state = SearchState {
            system: self,
            free_domains,
            full_domains,
            fixed,
            lo,
            hi,
            values: vec![0; self.free.len()],
        };
        state.descend(0, budget, visit).map(|_| ())
    }
}

struct SearchState<'a> {
    system: &'a ClassSystem,
    free_domains: Vec<Domain>,
    full_domains: Vec<Domain>,
    fixed: Vec<i64>,
    lo: Vec<i64>,
    hi: Vec<i64>,
    values: Vec<i64>,
}

impl SearchState<'_> {
    /// Returns `Ok(false)` once `visit` asks to stop.
    fn descend(
        &mut self,
        pos: usize,
        budget: &mut Budget,
        visit: &mut dyn FnMut(&[i64]) -> bool,
    ) -> Result<bool, Exhausted> {
        if pos == self.values.len() {
            return Ok(visit(&self.values));
        }
        let domain = self.free_domains[pos];
        for v in domain.values() {
            budget.tick()?;
            let ok = self.assign(pos, domain, v, 1);
            let keep_going = if ok {
                self.descend(pos + 1, budget, visit)?
            } else {
                true
            };
            self.assign(pos, domain, v, -1);
            if !keep_going {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Applies (`dir = 1`) or reverts (`dir = -1`) `values[pos] = v`, and
    /// reports whether every touched constraint is still satisfiable.
    fn assign(&mut self, pos: usize, domain: Domain, v: i64, dir: i64) -> bool {
        self.values[pos] = v;
        let mut ok = true;
        for &(ci, a) in &self.system.incidence[pos] {
            let (x, y) = (a * domain.min(), a * domain.max());
            self.fixed[ci] += dir * a * v;
            self.lo[ci] -= dir * x.min(y);
            self.hi[ci] -= dir * x.max(y);
            if dir == 1 {
                ok &= self.full_domains[ci].meets(self.fixed[ci] + self.lo[ci], self.fixed[ci] + self.hi[ci]);
            }
        }
        ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{cyclotomic, IntPolynomial};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn vanishes(n: u64, c: &[i64]) -> bool {
        IntPolynomial::from_i64s(c).divisible_by(&cyclotomic(n)).unwrap()
    }

    /// Solutions from the grid are exactly the vanishing vectors, checked
    /// against polynomial division on every vector in a small domain.
    #[test]
    fn matches_division_on_small_moduli() {
        for n in 2..=12u64 {
            let grid = CrtGrid::new(n);
            let domains = vec![Domain::NEG_OR_ZERO; n as usize];
            let mut solutions = grid.solve_all(&domains, usize::MAX);
            solutions.sort();
            let mut expected = Vec::new();
            for mask in 0u32..(1 << n) {
                let c: Vec<i64> = (0..n).map(|k| -i64::from(mask >> k & 1)).collect();
                if vanishes(n, &c) {
                    expected.push(c);
                }
            }
            expected.sort();
            assert_eq!(solutions, expected, "n = {n}");
        }
    }

    #[test]
    fn solutions_vanish_for_random_domains() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6772_6964);
        for n in [18u64, 20, 30, 36] {
            let grid = CrtGrid::new(n);
            for _ in 0..20 {
                let domains: Vec<Domain> = (0..n)
                    .map(|_| match rng.gen_range(0..4) {
                        0 => Domain::NEG,
                        1 => Domain::ZERO,
                        2 => Domain::POS,
                        _ => Domain::NEG_OR_ZERO,
                    })
                    .collect();
                let mut budget = Budget::new(None);
                if let Some(c) = grid.solve(&domains, &mut budget).unwrap() {
                    assert!(vanishes(n, &c));
                    assert!(c.iter().zip(&domains).all(|(&v, d)| d.contains(v)));
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let grid = CrtGrid::new(30);
        let domains = signature_domains(30, 29);
        let mut budget = Budget::new(Some(3));
        assert_eq!(grid.solve(&domains, &mut budget), Err(Exhausted));
    }
}
