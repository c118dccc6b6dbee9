//! Integer partitions as cycle types, conjugacy-class sizes, and the
//! genus bookkeeping constants attached to a factorization problem.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::numbers::{big, factorial, int_pow};

/// A partition of n: weakly decreasing positive parts. Doubles as the cycle
/// type of a permutation in S_n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
    n: u32,
    /// part value -> multiplicity, cached at construction
    mults: BTreeMap<u32, u32>,
}

impl Partition {
    /// Builds a partition from parts in any order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::usage("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        let mut mults = BTreeMap::new();
        for &p in &parts {
            *mults.entry(p).or_insert(0) += 1;
        }
        Ok(Partition { parts, n, mults })
    }

    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            n: 0,
            mults: BTreeMap::new(),
        }
    }

    /// Parses the CLI text form: comma-separated parts in any order,
    /// e.g. "3,1,1". Emitted canonically (weakly decreasing) by Display.
    pub fn parse(text: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for piece in text.split(',') {
            let piece = piece.trim();
            if piece.is_empty() {
                return Err(Error::usage(format!("empty part in partition {text:?}")));
            }
            let p: u32 = piece
                .parse()
                .map_err(|_| Error::usage(format!("invalid partition part {piece:?}")))?;
            parts.push(p);
        }
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of parts.
    pub fn len(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// part value -> number of parts with that value.
    pub fn multiplicities(&self) -> &BTreeMap<u32, u32> {
        &self.mults
    }

    /// |C_alpha| = n! / prod_i i^{d_i} d_i!, the size of the conjugacy class
    /// of permutations with this cycle type.
    pub fn class_size(&self) -> BigInt {
        let mut denom = big(1);
        for (&i, &d) in &self.mults {
            denom *= int_pow(i as u64, d) * factorial(d as u64);
        }
        factorial(self.n as u64) / denom
    }

    /// Total cycle count (m-1)n - l + 2 that the m arbitrary factors of a
    /// minimal transitive factorization must share.
    pub fn minimal_cycle_total(&self, m: u32) -> i64 {
        (m as i64 - 1) * self.n as i64 - self.len() as i64 + 2
    }

    /// Number n + l - 2 of transpositions in a minimal transitive
    /// factorization of this cycle type.
    pub fn transposition_count(&self) -> i64 {
        self.n as i64 + self.len() as i64 - 2
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// All partitions of n, each exactly once, in reverse lexicographic order:
/// (n) first, (1,...,1) last. n = 0 yields the single empty partition.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n, n, &mut stack, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::new(stack.clone()).expect("generated parts are positive"));
        return;
    }
    let hi = remaining.min(max_part);
    for part in (1..=hi).rev() {
        stack.push(part);
        descend(remaining - part, part, stack, out);
        stack.pop();
    }
}

/// Solves the Riemann-Hurwitz relation
/// sum_{i=0}^{k} (n - l(alpha_i)) = 2n - 2 + 2g
/// for g, where `alpha` plays the role of alpha_0 and `factor_types` the
/// rest. The result may be a half-integer or negative; callers filter on
/// g = 0 explicitly.
pub fn riemann_hurwitz_genus(alpha: &Partition, factor_types: &[Partition]) -> Result<BigRational> {
    let n = alpha.n();
    if factor_types.iter().any(|t| t.n() != n) {
        return Err(Error::usage(
            "all factor types must partition the same n as alpha",
        ));
    }
    let mut defect = n as i64 - alpha.len() as i64;
    for t in factor_types {
        defect += n as i64 - t.len() as i64;
    }
    Ok(BigRational::new(
        big(defect - 2 * n as i64 + 2),
        big(2),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::rat_int;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn partitions_of_one() {
        let ps = partitions_of(1);
        assert_eq!(ps, vec![p(&[1])]);
    }

    #[test]
    fn partitions_of_four_in_reverse_lex_order() {
        let ps = partitions_of(4);
        let expected: Vec<Partition> = [
            vec![4u32],
            vec![3, 1],
            vec![2, 2],
            vec![2, 1, 1],
            vec![1, 1, 1, 1],
        ]
        .into_iter()
        .map(|v| Partition::new(v).unwrap())
        .collect();
        assert_eq!(ps, expected);
    }

    #[test]
    fn partitions_of_eight_has_22_entries() {
        // independent count: p(k) by the coin-change recurrence
        fn count(n: usize) -> u64 {
            let mut table = vec![0u64; n + 1];
            table[0] = 1;
            for part in 1..=n {
                for total in part..=n {
                    table[total] += table[total - part];
                }
            }
            table[n]
        }
        let ps = partitions_of(8);
        assert_eq!(ps.len(), 22);
        assert_eq!(count(8), 22);
        for n in 0..=12u32 {
            assert_eq!(partitions_of(n).len() as u64, count(n as usize));
        }
    }

    #[test]
    fn partitions_of_zero_is_single_empty() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
    }

    #[test]
    fn generated_partitions_are_valid_and_distinct() {
        for n in 1..=10u32 {
            let ps = partitions_of(n);
            for q in &ps {
                assert_eq!(q.parts().iter().sum::<u32>(), n);
                assert!(q.parts().windows(2).all(|w| w[0] >= w[1]));
                let l: u32 = q.multiplicities().values().sum();
                assert_eq!(l, q.len());
                let total: u32 = q.multiplicities().iter().map(|(i, d)| i * d).sum();
                assert_eq!(total, n);
            }
            let mut sorted = ps.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), ps.len());
        }
    }

    #[test]
    fn class_size_identity_class_is_one() {
        for n in 1..=8 {
            let alpha = Partition::new(vec![1; n]).unwrap();
            assert_eq!(alpha.class_size(), big(1));
        }
    }

    #[test]
    fn class_size_matches_direct_enumeration_of_small_groups() {
        // oracle: enumerate all of S_n, bucket by cycle type
        use crate::perm::Permutation;
        for n in 1..=5u32 {
            let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
            for perm in Permutation::all(n) {
                *counts.entry(perm.cycle_type()).or_insert(0) += 1;
            }
            for alpha in partitions_of(n) {
                let expected = counts.get(&alpha).copied().unwrap_or(0);
                assert_eq!(alpha.class_size(), big(expected as i64), "alpha = {alpha}");
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 1..=10u32 {
            let total: BigInt = partitions_of(n).iter().map(|a| a.class_size()).sum();
            assert_eq!(total, factorial(n as u64));
        }
    }

    #[test]
    fn cycle_totals_match_examples() {
        assert_eq!(p(&[1]).minimal_cycle_total(2), 2);
        assert_eq!(p(&[2, 1]).minimal_cycle_total(2), 3);
        assert_eq!(p(&[3]).minimal_cycle_total(3), 7);
        assert_eq!(p(&[1]).transposition_count(), 0);
        assert_eq!(p(&[3]).transposition_count(), 2);
        assert_eq!(p(&[2, 2]).transposition_count(), 4);
    }

    #[test]
    fn genus_examples() {
        let g = riemann_hurwitz_genus(&p(&[3]), &[p(&[2, 1]), p(&[2, 1])]).unwrap();
        assert_eq!(g, rat_int(0));
        let g = riemann_hurwitz_genus(&p(&[1, 1]), &[p(&[2]), p(&[2])]).unwrap();
        assert_eq!(g, rat_int(0));
        let g = riemann_hurwitz_genus(&p(&[2, 2]), &vec![p(&[2, 1, 1]); 6]).unwrap();
        assert_eq!(g, rat_int(1));
    }

    #[test]
    fn genus_rejects_mixed_n() {
        assert!(riemann_hurwitz_genus(&p(&[2]), &[p(&[3])]).is_err());
    }

    #[test]
    fn genus_zero_at_the_bookkeeping_constants() {
        // r transposition factors give genus 0; so do m factors carrying
        // the minimal cycle total.
        for n in 1..=8u32 {
            for alpha in partitions_of(n) {
                let r = alpha.transposition_count();
                if n >= 2 {
                    let transposition = {
                        let mut parts = vec![2u32];
                        parts.extend(std::iter::repeat(1).take(n as usize - 2));
                        Partition::new(parts).unwrap()
                    };
                    let g =
                        riemann_hurwitz_genus(&alpha, &vec![transposition; r as usize]).unwrap();
                    assert_eq!(g, rat_int(0), "alpha = {alpha}");
                }
                for m in 2..=4u32 {
                    // concrete factor types whose lengths sum to the minimal
                    // cycle total: hand out cycle counts greedily
                    let c = alpha.minimal_cycle_total(m);
                    assert!(c >= m as i64 && c <= (m * n) as i64);
                    let mut remaining = c;
                    let mut factors = Vec::new();
                    for slot in 0..m as i64 {
                        let slots_left = m as i64 - slot - 1;
                        let li = (remaining - slots_left).min(n as i64).max(1);
                        remaining -= li;
                        // a partition of n with exactly li parts
                        let mut parts = vec![n - li as u32 + 1];
                        parts.extend(std::iter::repeat(1).take(li as usize - 1));
                        factors.push(Partition::new(parts).unwrap());
                    }
                    assert_eq!(remaining, 0);
                    let g = riemann_hurwitz_genus(&alpha, &factors).unwrap();
                    assert_eq!(g, rat_int(0), "alpha = {alpha}, m = {m}");
                }
            }
        }
    }

    #[test]
    fn parse_is_lenient_display_is_canonical() {
        let alpha = Partition::parse("1,3,1").unwrap();
        assert_eq!(alpha.parts(), &[3, 1, 1]);
        assert_eq!(alpha.to_string(), "3,1,1");
        assert!(Partition::parse("0,1").is_err());
        assert!(Partition::parse("").is_err());
        assert!(Partition::parse("2,x").is_err());
    }
}
