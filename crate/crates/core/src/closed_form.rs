//! Product formulas for the two factorization counts and the balanced-tree
//! count they predict. Everything is evaluated in exact rationals and then
//! asserted integral; a non-integral value here is a bug, not bad input.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::numbers::{binomial, expect_integer, factorial, int_pow, rational_pow};
use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountKind {
    H,
    G,
    BalancedTrees,
}

impl CountKind {
    pub fn name(self) -> &'static str {
        match self {
            CountKind::H => "H",
            CountKind::G => "G",
            CountKind::BalancedTrees => "BalancedTrees",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub kind: CountKind,
    pub alpha: Partition,
    pub m: Option<u32>,
    pub value: BigInt,
}

/// Number of ways to factor a fixed permutation of cycle type `alpha` into
/// the minimal number n + l - 2 of transpositions generating a transitive
/// group: n^{l-3} (n+l-2)! prod_i (i^i / (i-1)!)^{d_i}.
pub fn h_alpha(alpha: &Partition) -> CountResult {
    assert!(alpha.n() >= 1, "counts are defined for nonempty partitions");
    let n = alpha.n() as u64;
    let l = alpha.len() as u64;

    let mut value = rational_pow(&BigInt::from(n), l as i64 - 3);
    value *= BigRational::from_integer(factorial(n + l - 2));
    for (&i, &d) in alpha.multiplicities() {
        let base = BigRational::new(int_pow(i as u64, i), factorial(i as u64 - 1));
        for _ in 0..d {
            value *= &base;
        }
    }

    CountResult {
        kind: CountKind::H,
        alpha: alpha.clone(),
        m: None,
        value: expect_integer(&value, "transposition factorization count"),
    }
}

/// Number of ways to factor a fixed permutation of cycle type `alpha` into
/// m arbitrary factors with the minimal total cycle count (m-1)n - l + 2,
/// generating a transitive group:
/// m ((m-1)n - 1)! / ((m-1)n - l + 2)! prod_i (i C(mi-1, i))^{d_i}.
pub fn g_alpha(alpha: &Partition, m: u32) -> Result<CountResult> {
    if m < 2 {
        return Err(Error::usage(format!(
            "the m-factor count needs m >= 2, got m = {m}"
        )));
    }
    assert!(alpha.n() >= 1, "counts are defined for nonempty partitions");
    let n = alpha.n() as u64;
    let l = alpha.len() as u64;
    let m64 = m as u64;

    let mut value = BigRational::new(
        BigInt::from(m64) * factorial((m64 - 1) * n - 1),
        factorial((m64 - 1) * n - l + 2),
    );
    for (&i, &d) in alpha.multiplicities() {
        let base = BigRational::from_integer(
            BigInt::from(i) * binomial(m64 * i as u64 - 1, i as u64),
        );
        for _ in 0..d {
            value *= &base;
        }
    }

    Ok(CountResult {
        kind: CountKind::G,
        alpha: alpha.clone(),
        m: Some(m),
        value: expect_integer(&value, "m-factor factorization count"),
    })
}

/// |C_alpha| g_alpha(alpha, m) / (n-1)!, the predicted number of balanced
/// planted trees of this type (see the trees module for the enumeration it
/// is checked against).
pub fn balanced_tree_prediction(alpha: &Partition, m: u32) -> Result<CountResult> {
    let g = g_alpha(alpha, m)?;
    let n = alpha.n() as u64;
    let value = BigRational::new(alpha.class_size() * g.value, factorial(n - 1));
    Ok(CountResult {
        kind: CountKind::BalancedTrees,
        alpha: alpha.clone(),
        m: Some(m),
        value: expect_integer(&value, "balanced tree count"),
    })
}

/// h_alpha for the single-cycle type (n) simplifies to n^{n-2}.
pub fn cayley_check(n: u32) -> bool {
    let alpha = Partition::new(vec![n]).unwrap();
    let expected = rational_pow(&BigInt::from(n), n as i64 - 2);
    BigRational::from_integer(h_alpha(&alpha).value) == expected
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn h(parts: &[u32]) -> BigInt {
        h_alpha(&p(parts)).value
    }

    fn g(parts: &[u32], m: u32) -> BigInt {
        g_alpha(&p(parts), m).unwrap().value
    }

    #[test]
    fn transposition_counts_for_small_types() {
        assert_eq!(h(&[1]), BigInt::from(1));
        assert_eq!(h(&[2]), BigInt::from(1));
        assert_eq!(h(&[1, 1]), BigInt::from(1));
        assert_eq!(h(&[3]), BigInt::from(3));
        assert_eq!(h(&[2, 2]), BigInt::from(96));
    }

    #[test]
    fn single_cycle_count_is_a_tree_count() {
        for n in 1..=12 {
            assert!(cayley_check(n), "n = {n}");
        }
        assert_eq!(h(&[5]), BigInt::from(125));
    }

    #[test]
    fn m_factor_counts_for_small_types() {
        assert_eq!(g(&[1], 3), BigInt::from(1));
        assert_eq!(g(&[2], 2), BigInt::from(2));
        assert_eq!(g(&[3], 2), BigInt::from(5));
        assert_eq!(g(&[2, 1], 2), BigInt::from(4));
        assert_eq!(g(&[1, 1, 1, 1], 2), BigInt::from(6));
    }

    #[test]
    fn m_factor_count_rejects_small_m() {
        assert!(g_alpha(&p(&[3]), 1).is_err());
        assert!(g_alpha(&p(&[3]), 0).is_err());
    }

    #[test]
    fn balanced_tree_predictions() {
        let b = |parts: &[u32], m| balanced_tree_prediction(&p(parts), m).unwrap().value;
        assert_eq!(b(&[2], 2), BigInt::from(2));
        assert_eq!(b(&[3], 2), BigInt::from(5));
        assert_eq!(b(&[1, 1], 2), BigInt::from(1));
        assert_eq!(b(&[1, 1, 1, 1], 2), BigInt::from(1));
    }

    #[test]
    fn integrality_sweep_small() {
        for n in 1..=9u32 {
            for alpha in crate::partition::partitions_of(n) {
                h_alpha(&alpha);
                for m in 2..=5 {
                    g_alpha(&alpha, m).unwrap();
                    balanced_tree_prediction(&alpha, m).unwrap();
                }
            }
        }
    }
}
