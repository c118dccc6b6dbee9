//! Sparse polynomials in u, x, and the variables p_1, p_2, ... over the
//! rationals. A truncated series in z keeps one such polynomial per power
//! of z, so this is the coefficient ring everything else works in.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::partition::Partition;

/// u^a x^b prod p_i^{e_i}. Ordered by u exponent, then x exponent, then the
/// p exponent table; "least monomial" below always refers to this order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    pub u_exp: u32,
    pub x_exp: u32,
    pub p_exp: BTreeMap<u32, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn u() -> Self {
        Monomial {
            u_exp: 1,
            ..Default::default()
        }
    }

    pub fn x() -> Self {
        Monomial {
            x_exp: 1,
            ..Default::default()
        }
    }

    pub fn p(i: u32) -> Self {
        assert!(i >= 1);
        let mut p_exp = BTreeMap::new();
        p_exp.insert(i, 1);
        Monomial {
            u_exp: 0,
            x_exp: 0,
            p_exp,
        }
    }

    /// u^{u_exp} x^{x_exp} p_alpha, where p_alpha = prod over parts of alpha.
    pub fn from_partition(alpha: &Partition, u_exp: u32, x_exp: u32) -> Self {
        Monomial {
            u_exp,
            x_exp,
            p_exp: alpha.multiplicities().clone(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.u_exp == 0 && self.x_exp == 0 && self.p_exp.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut p_exp = self.p_exp.clone();
        for (&i, &e) in &other.p_exp {
            *p_exp.entry(i).or_insert(0) += e;
        }
        Monomial {
            u_exp: self.u_exp + other.u_exp,
            x_exp: self.x_exp + other.x_exp,
            p_exp,
        }
    }

    /// Sum of e_i, the total degree in the p variables.
    pub fn p_degree(&self) -> u32 {
        self.p_exp.values().sum()
    }

    /// Sum of i * e_i. In every series here this matches the power of z.
    pub fn p_weight(&self) -> u64 {
        self.p_exp.iter().map(|(&i, &e)| i as u64 * e as u64).sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut pieces = Vec::new();
        let var = |name: String, e: u32| {
            if e == 1 {
                name
            } else {
                format!("{name}^{e}")
            }
        };
        if self.u_exp > 0 {
            pieces.push(var("u".into(), self.u_exp));
        }
        if self.x_exp > 0 {
            pieces.push(var("x".into(), self.x_exp));
        }
        for (&i, &e) in &self.p_exp {
            pieces.push(var(format!("p_{i}"), e));
        }
        write!(f, "{}", pieces.join(" "))
    }
}

/// A rational linear combination of monomials, normalized so that no stored
/// coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolyCoeff {
    terms: BTreeMap<Monomial, BigRational>,
}

impl PolyCoeff {
    pub fn zero() -> Self {
        PolyCoeff::default()
    }

    pub fn one() -> Self {
        PolyCoeff::constant(BigRational::one())
    }

    pub fn constant(q: BigRational) -> Self {
        PolyCoeff::from_term(Monomial::one(), q)
    }

    pub fn from_term(mono: Monomial, q: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(mono, q);
        }
        PolyCoeff { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigRational {
        self.terms.get(mono).cloned().unwrap_or_else(BigRational::zero)
    }

    pub(crate) fn insert_add(&mut self, mono: Monomial, q: BigRational) {
        if q.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(slot) => {
                slot.insert(q);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += q;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, q: &BigRational) -> PolyCoeff {
        if q.is_zero() {
            return PolyCoeff::zero();
        }
        PolyCoeff {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * q))
                .collect(),
        }
    }

    /// Applies `f` to each monomial, scaling its coefficient by the returned
    /// rational and replacing the monomial; `None` drops the term.
    fn map_terms<F>(&self, mut f: F) -> PolyCoeff
    where
        F: FnMut(&Monomial) -> Option<(Monomial, BigRational)>,
    {
        let mut out = PolyCoeff::zero();
        for (mono, q) in &self.terms {
            if let Some((new_mono, factor)) = f(mono) {
                out.insert_add(new_mono, q * factor);
            }
        }
        out
    }

    /// u d/du: multiplies each term by its u exponent.
    pub fn u_ddu(&self) -> PolyCoeff {
        self.map_terms(|m| Some((m.clone(), BigRational::from_integer(m.u_exp.into()))))
    }

    /// x d/dx.
    pub fn x_ddx(&self) -> PolyCoeff {
        self.map_terms(|m| Some((m.clone(), BigRational::from_integer(m.x_exp.into()))))
    }

    /// d/dx.
    pub fn ddx(&self) -> PolyCoeff {
        self.map_terms(|m| {
            if m.x_exp == 0 {
                return None;
            }
            let mut lowered = m.clone();
            lowered.x_exp -= 1;
            Some((lowered, BigRational::from_integer(m.x_exp.into())))
        })
    }

    /// d/dp_k.
    pub fn ddp(&self, k: u32) -> PolyCoeff {
        self.map_terms(|m| {
            let e = *m.p_exp.get(&k)?;
            let mut lowered = m.clone();
            if e == 1 {
                lowered.p_exp.remove(&k);
            } else {
                lowered.p_exp.insert(k, e - 1);
            }
            Some((lowered, BigRational::from_integer(e.into())))
        })
    }

    /// Sum over k of p_k d/dp_k: multiplies each term by its total p degree.
    pub fn sum_p_ddp(&self) -> PolyCoeff {
        self.map_terms(|m| Some((m.clone(), BigRational::from_integer(m.p_degree().into()))))
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> PolyCoeff {
        self.map_terms(|m| Some((m.mul(mono), BigRational::one())))
    }
}

impl fmt::Display for PolyCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mono, q) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            if mono.is_one() {
                write!(f, "{q}")?;
            } else if q.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{q} {mono}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl Add for &PolyCoeff {
    type Output = PolyCoeff;
    fn add(self, rhs: &PolyCoeff) -> PolyCoeff {
        let mut out = self.clone();
        for (mono, q) in &rhs.terms {
            out.insert_add(mono.clone(), q.clone());
        }
        out
    }
}

impl Sub for &PolyCoeff {
    type Output = PolyCoeff;
    fn sub(self, rhs: &PolyCoeff) -> PolyCoeff {
        let mut out = self.clone();
        for (mono, q) in &rhs.terms {
            out.insert_add(mono.clone(), -q.clone());
        }
        out
    }
}

impl Mul for &PolyCoeff {
    type Output = PolyCoeff;
    fn mul(self, rhs: &PolyCoeff) -> PolyCoeff {
        let mut out = PolyCoeff::zero();
        for (ma, qa) in &self.terms {
            for (mb, qb) in &rhs.terms {
                out.insert_add(ma.mul(mb), qa * qb);
            }
        }
        out
    }
}

impl Neg for &PolyCoeff {
    type Output = PolyCoeff;
    fn neg(self) -> PolyCoeff {
        PolyCoeff {
            terms: self
                .terms
                .iter()
                .map(|(m, q)| (m.clone(), -q.clone()))
                .collect(),
        }
    }
}


#[cfg(test)]
mod tests {
    use super::testgen::poly as arb_poly;
    use super::*;
    use crate::numbers::{rat, rat_int};
    use proptest::prelude::*;

    fn mono(u: u32, x: u32, ps: &[(u32, u32)]) -> Monomial {
        Monomial {
            u_exp: u,
            x_exp: x,
            p_exp: ps.iter().copied().collect(),
        }
    }

    #[test]
    fn display_examples() {
        assert_eq!(Monomial::one().to_string(), "1");
        assert_eq!(mono(2, 1, &[(1, 2), (3, 1)]).to_string(), "u^2 x p_1^2 p_3");
        let poly = &PolyCoeff::from_term(Monomial::p(2), rat(1, 2))
            + &PolyCoeff::from_term(mono(0, 0, &[(1, 2)]), rat(1, 4));
        assert_eq!(poly.to_string(), "1/4 p_1^2 + 1/2 p_2");
    }

    #[test]
    fn zero_coefficients_are_never_stored() {
        let a = PolyCoeff::from_term(Monomial::p(1), rat_int(3));
        let b = PolyCoeff::from_term(Monomial::p(1), rat_int(-3));
        assert!((&a + &b).is_zero());
        assert_eq!((&a + &b).num_terms(), 0);
        assert!(PolyCoeff::from_term(Monomial::u(), rat_int(0)).is_zero());
    }

    #[test]
    fn product_collects_like_monomials() {
        // (p_1 + p_2)(p_1 - p_2) = p_1^2 - p_2^2
        let a = &PolyCoeff::from_term(Monomial::p(1), rat_int(1))
            + &PolyCoeff::from_term(Monomial::p(2), rat_int(1));
        let b = &PolyCoeff::from_term(Monomial::p(1), rat_int(1))
            - &PolyCoeff::from_term(Monomial::p(2), rat_int(1));
        let prod = &a * &b;
        assert_eq!(prod.coeff(&mono(0, 0, &[(1, 2)])), rat_int(1));
        assert_eq!(prod.coeff(&mono(0, 0, &[(2, 2)])), rat_int(-1));
        assert_eq!(prod.num_terms(), 2);
    }

    #[test]
    fn derivative_operators() {
        // f = u^2 x^3 p_2^2
        let f = PolyCoeff::from_term(mono(2, 3, &[(2, 2)]), rat_int(1));
        assert_eq!(f.u_ddu(), f.scale(&rat_int(2)));
        assert_eq!(f.x_ddx(), f.scale(&rat_int(3)));
        assert_eq!(
            f.ddx(),
            PolyCoeff::from_term(mono(2, 2, &[(2, 2)]), rat_int(3))
        );
        assert_eq!(
            f.ddp(2),
            PolyCoeff::from_term(mono(2, 3, &[(2, 1)]), rat_int(2))
        );
        assert!(f.ddp(1).is_zero());
        assert_eq!(f.sum_p_ddp(), f.scale(&rat_int(2)));
    }

    #[test]
    fn weight_and_degree() {
        let m = mono(1, 0, &[(1, 2), (3, 1)]);
        assert_eq!(m.p_degree(), 3);
        assert_eq!(m.p_weight(), 5);
    }

    #[test]
    fn partition_monomial() {
        let alpha = Partition::new(vec![3, 1, 1]).unwrap();
        let m = Monomial::from_partition(&alpha, 3, 2);
        assert_eq!(m.to_string(), "u^3 x^2 p_1^2 p_3");
        assert_eq!(m.p_weight(), alpha.n() as u64);
        assert_eq!(m.p_degree(), alpha.len());
    }

    proptest! {
        #[test]
        fn addition_commutes(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn multiplication_commutes(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn multiplication_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn multiplication_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn subtraction_inverts_addition(a in arb_poly(), b in arb_poly()) {
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn ddx_satisfies_leibniz(a in arb_poly(), b in arb_poly()) {
            let lhs = (&a * &b).ddx();
            let rhs = &(&a.ddx() * &b) + &(&a * &b.ddx());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn u_ddu_satisfies_leibniz(a in arb_poly(), b in arb_poly()) {
            let lhs = (&a * &b).u_ddu();
            let rhs = &(&a.u_ddu() * &b) + &(&a * &b.u_ddu());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn ddp_satisfies_leibniz(a in arb_poly(), b in arb_poly(), k in 1u32..4) {
            let lhs = (&a * &b).ddp(k);
            let rhs = &(&a.ddp(k) * &b) + &(&a * &b.ddp(k));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
