//! Permutations of {1,...,n}, 1-indexed throughout.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A permutation of {1,...,n} stored as its image table:
/// `images[i-1]` is the image of i.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &v in &images {
            if v == 0 || v > n || seen[(v - 1) as usize] {
                return Err(Error::usage("images do not form a bijection on 1..=n"));
            }
            seen[(v - 1) as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: u32) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The transposition (a b) in S_n.
    pub fn transposition(n: u32, a: u32, b: u32) -> Self {
        assert!(a != b && a >= 1 && b >= 1 && a <= n && b <= n);
        let mut images: Vec<u32> = (1..=n).collect();
        images.swap((a - 1) as usize, (b - 1) as usize);
        Permutation { images }
    }

    pub fn n(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn apply(&self, i: u32) -> u32 {
        self.images[(i - 1) as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Function composition: (self * other)(i) = self(other(i)).
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[(v - 1) as usize] = i as u32 + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as u32 + 1)
    }

    pub fn cycle_count(&self) -> u32 {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = (self.images[i] - 1) as usize;
            }
        }
        cycles
    }

    /// The partition of disjoint-cycle lengths.
    pub fn cycle_type(&self) -> Partition {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                len += 1;
                i = (self.images[i] - 1) as usize;
            }
            lengths.push(len);
        }
        Partition::new(lengths).expect("cycle lengths are positive")
    }

    /// The canonical representative of the class with cycle type `alpha`:
    /// cycles filled with consecutive integers, largest part first.
    /// For alpha = (3,2) this is (1 2 3)(4 5).
    pub fn canonical_of_type(alpha: &Partition) -> Permutation {
        let n = alpha.n();
        let mut images: Vec<u32> = (1..=n).collect();
        let mut next = 1u32;
        for &part in alpha.parts() {
            for off in 0..part {
                let from = next + off;
                let to = next + (off + 1) % part;
                images[(from - 1) as usize] = to;
            }
            next += part;
        }
        Permutation { images }
    }

    /// All n! permutations of {1..n}, in lexicographic order of image tables.
    pub fn all(n: u32) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<u32> = Vec::new();
        let mut used = vec![false; n as usize];
        fn rec(n: u32, current: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if current.len() == n as usize {
                out.push(Permutation {
                    images: current.clone(),
                });
                return;
            }
            for v in 1..=n {
                if !used[(v - 1) as usize] {
                    used[(v - 1) as usize] = true;
                    current.push(v);
                    rec(n, current, used, out);
                    current.pop();
                    used[(v - 1) as usize] = false;
                }
            }
        }
        rec(n, &mut current, &mut used, &mut out);
        out
    }

    /// Conjugate sigma * self * sigma^{-1}.
    pub fn conjugate_by(&self, sigma: &Permutation) -> Permutation {
        sigma.compose(self).compose(&sigma.inverse())
    }
}

/// Disjoint cycle notation, fixed points omitted, identity as "e".
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || (self.images[start] - 1) as usize == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = (self.images[i] - 1) as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "e")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn cycle_type_examples() {
        let id4 = Permutation::identity(4);
        assert_eq!(id4.cycle_type(), p(&[1, 1, 1, 1]));

        let swap = Permutation::new(vec![2, 1, 3]).unwrap();
        assert_eq!(swap.cycle_type(), p(&[2, 1]));

        let four_cycle = Permutation::new(vec![2, 3, 4, 1]).unwrap();
        assert_eq!(four_cycle.cycle_type(), p(&[4]));
    }

    #[test]
    fn canonical_representative_has_requested_type() {
        for n in 1..=7u32 {
            for alpha in crate::partition::partitions_of(n) {
                let pi = Permutation::canonical_of_type(&alpha);
                assert_eq!(pi.cycle_type(), alpha);
            }
        }
        // (3,2): cycles (1 2 3)(4 5)
        let pi = Permutation::canonical_of_type(&p(&[3, 2]));
        assert_eq!(pi.images(), &[2, 3, 1, 5, 4]);
    }

    #[test]
    fn compose_and_inverse() {
        let a = Permutation::new(vec![2, 3, 1]).unwrap();
        let b = Permutation::new(vec![2, 1, 3]).unwrap();
        // (a. b)(1) = a(b(1)) = a(2) = 3
        assert_eq!(a.compose(&b).apply(1), 3);
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn all_enumerates_the_group() {
        assert_eq!(Permutation::all(4).len(), 24);
        let mut seen = Permutation::all(3);
        seen.dedup();
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1, 3]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
    }

    #[test]
    fn display_uses_cycle_notation() {
        assert_eq!(Permutation::identity(3).to_string(), "e");
        assert_eq!(
            Permutation::canonical_of_type(&p(&[3, 2])).to_string(),
            "(1 2 3)(4 5)"
        );
    }
}
