//! Brute-force factorization counting in the symmetric group.
//!
//! Two modes. Transposition mode counts ordered tuples of n + l - 2
//! transpositions whose product is a fixed permutation with l cycles and
//! whose factors generate a transitive group; this is the quantity
//! `closed_form::h_alpha` predicts. Arbitrary mode counts ordered m-tuples
//! of permutations with a fixed product, generating a transitive group,
//! whose cycle counts sum to (m-1)n - l + 2; `closed_form::g_alpha`
//! predicts this one for m >= 2.
//!
//! Both searches grow brutally fast, so every entry point takes a budget and
//! refuses work that would exceed it instead of hanging.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::perm::Permutation;

/// Hard ceiling on n in transposition mode, from the fixed-size union-find
/// and cycle bitmask in the search state.
const TRANSPOSITION_N_CEILING: u32 = 8;

#[derive(Debug, Clone)]
pub struct OracleBudget {
    /// Largest n accepted in transposition mode. The search visits at least
    /// one node per factorization, and the counts grow superexponentially.
    pub max_n_transpositions: u32,
    /// Cap on (n!)^(m-1), the number of tuples scanned in arbitrary mode.
    pub max_arbitrary_tuples: u128,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_n_transpositions: 6,
            max_arbitrary_tuples: 1_000_000,
        }
    }
}

/// Counts minimal transitive factorizations into transpositions of the
/// canonical permutation with cycle type `alpha`. The count is the same for
/// every permutation of that type; see `count_transpositions_with_target`.
pub fn count_transposition_factorizations(
    alpha: &Partition,
    budget: &OracleBudget,
) -> Result<BigInt> {
    if alpha.is_empty() {
        return Err(Error::usage("factorization counts need a nonempty partition"));
    }
    count_transpositions_with_target(&Permutation::canonical_of_type(alpha), budget)
}

/// Counts tuples (t_1, ..., t_r) of transpositions with t_r ... t_1 = pi,
/// r = n + l - 2 where l is the cycle count of pi, such that the t_i
/// together act transitively on {1, ..., n}.
pub fn count_transpositions_with_target(
    pi: &Permutation,
    budget: &OracleBudget,
) -> Result<BigInt> {
    let n = pi.n();
    if n == 0 {
        return Err(Error::usage("factorization counts need n >= 1"));
    }
    let cap = budget.max_n_transpositions.min(TRANSPOSITION_N_CEILING);
    if n > cap {
        return Err(Error::BudgetExceeded {
            what: "transposition factorization search".into(),
            cost: format!("n = {n}"),
            budget: format!("n <= {cap}"),
        });
    }

    let n = n as usize;
    let l = pi.cycle_count() as usize;
    let r = n + l - 2;
    let sigma: Vec<usize> = (1..=n).map(|i| pi.apply(i as u32) as usize - 1).collect();

    let mut search = TranspositionSearch { n, sigma, count: 0 };
    debug_assert_eq!((r - (n - l)) % 2, 0);
    search.dfs(r, Dsu::new(n));
    Ok(BigInt::from(search.count))
}

struct TranspositionSearch {
    n: usize,
    /// What the factors still to be chosen must multiply to, as 0-indexed
    /// images. Choosing t as the next factor replaces sigma by sigma * t,
    /// which swaps two entries, so undo is the same swap.
    sigma: Vec<usize>,
    count: u128,
}

impl TranspositionSearch {
    fn cycles(&self) -> usize {
        let mut seen = 0u64;
        let mut c = 0;
        for start in 0..self.n {
            if seen & (1 << start) == 0 {
                c += 1;
                let mut j = start;
                while seen & (1 << j) == 0 {
                    seen |= 1 << j;
                    j = self.sigma[j];
                }
            }
        }
        c
    }

    fn dfs(&mut self, remaining: usize, dsu: Dsu) {
        if remaining == 0 {
            debug_assert!(self.sigma.iter().enumerate().all(|(i, &v)| i == v));
            debug_assert_eq!(dsu.components, 1);
            self.count += 1;
            return;
        }
        for a in 0..self.n {
            for b in a + 1..self.n {
                self.sigma.swap(a, b);
                // The factor chosen here must leave a permutation reachable
                // with the remaining factors, and enough factors must be
                // left to connect the components the chosen pairs span.
                let dist = self.n - self.cycles();
                if dist < remaining {
                    let mut joined = dsu;
                    joined.union(a, b);
                    if usize::from(joined.components) <= remaining {
                        self.dfs(remaining - 1, joined);
                    }
                }
                self.sigma.swap(a, b);
            }
        }
    }
}

#[derive(Clone, Copy)]
struct Dsu {
    parent: [u8; TRANSPOSITION_N_CEILING as usize],
    components: u8,
}

impl Dsu {
    fn new(n: usize) -> Self {
        let mut parent = [0u8; TRANSPOSITION_N_CEILING as usize];
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i as u8;
        }
        Dsu {
            parent,
            components: n as u8,
        }
    }

    fn find(&self, mut i: u8) -> u8 {
        while self.parent[i as usize] != i {
            i = self.parent[i as usize];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a as u8);
        let rb = self.find(b as u8);
        if ra != rb {
            self.parent[ra as usize] = rb;
            self.components -= 1;
        }
    }
}

/// Counts transitive genus-zero factorizations of the canonical permutation
/// of type `alpha` into m arbitrary permutations.
pub fn count_arbitrary_factorizations(
    alpha: &Partition,
    m: u32,
    budget: &OracleBudget,
) -> Result<BigInt> {
    if alpha.is_empty() {
        return Err(Error::usage("factorization counts need a nonempty partition"));
    }
    count_arbitrary_with_target(&Permutation::canonical_of_type(alpha), m, budget)
}

/// Counts tuples (f_1, ..., f_m) of permutations of {1, ..., n} with
/// f_m ... f_1 = pi, generating a transitive group, whose cycle counts sum
/// to (m-1)n - l + 2 where l is the cycle count of pi. The last factor is
/// determined by the first m-1, so the scan covers (n!)^(m-1) tuples.
pub fn count_arbitrary_with_target(
    pi: &Permutation,
    m: u32,
    budget: &OracleBudget,
) -> Result<BigInt> {
    let n = pi.n();
    if n == 0 {
        return Err(Error::usage("factorization counts need n >= 1"));
    }
    if m == 0 {
        return Err(Error::usage("factorization counts need m >= 1"));
    }
    let factorial: u128 = (1..=n as u128).product();
    let cost = factorial.checked_pow(m - 1);
    if cost.is_none_or(|c| c > budget.max_arbitrary_tuples) {
        return Err(Error::BudgetExceeded {
            what: "arbitrary factorization search".into(),
            cost: match cost {
                Some(c) => c.to_string(),
                None => format!("({n}!)^{}", m - 1),
            },
            budget: budget.max_arbitrary_tuples.to_string(),
        });
    }

    let l = pi.cycle_count();
    let target_cycles = (i64::from(m) - 1) * i64::from(n) - i64::from(l) + 2;
    let all = if m >= 2 {
        Permutation::all(n)
    } else {
        Vec::new()
    };

    let mut search = ArbitrarySearch {
        pi,
        all: &all,
        m: m as usize,
        target_cycles,
        factors: Vec::with_capacity(m as usize),
        count: 0,
    };
    search.rec(Permutation::identity(n), 0);
    Ok(BigInt::from(search.count))
}

struct ArbitrarySearch<'a> {
    pi: &'a Permutation,
    all: &'a [Permutation],
    m: usize,
    target_cycles: i64,
    factors: Vec<Permutation>,
    count: u128,
}

impl ArbitrarySearch<'_> {
    /// `partial` is f_depth ... f_1 for the factors chosen so far.
    fn rec(&mut self, partial: Permutation, cycle_sum: i64) {
        if self.factors.len() == self.m - 1 {
            let last = self.pi.compose(&partial.inverse());
            if cycle_sum + i64::from(last.cycle_count()) == self.target_cycles {
                self.factors.push(last);
                if generates_transitively(&self.factors) {
                    self.count += 1;
                }
                self.factors.pop();
            }
            return;
        }
        for f in self.all {
            self.factors.push(f.clone());
            self.rec(f.compose(&partial), cycle_sum + i64::from(f.cycle_count()));
            self.factors.pop();
        }
    }
}

fn generates_transitively(factors: &[Permutation]) -> bool {
    let n = factors[0].n() as usize;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let mut components = n;
    for f in factors {
        for i in 1..=n as u32 {
            let a = find(&mut parent, i as usize - 1);
            let b = find(&mut parent, f.apply(i) as usize - 1);
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
    }
    components == 1
}

/// Runs one of the two counts for every partition of n.
pub fn census_transpositions(n: u32, budget: &OracleBudget) -> Result<Vec<(Partition, BigInt)>> {
    partitions_of(n)
        .into_iter()
        .map(|alpha| {
            let c = count_transposition_factorizations(&alpha, budget)?;
            Ok((alpha, c))
        })
        .collect()
}

pub fn census_arbitrary(
    n: u32,
    m: u32,
    budget: &OracleBudget,
) -> Result<Vec<(Partition, BigInt)>> {
    partitions_of(n)
        .into_iter()
        .map(|alpha| {
            let c = count_arbitrary_factorizations(&alpha, m, budget)?;
            Ok((alpha, c))
        })
        .collect()
}
