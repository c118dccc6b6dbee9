//! The two implicit series at the heart of the counts, each solved by
//! fixed-point iteration, plus coefficient extraction through the classical
//! inversion formula [t^n] f(w) = (1/n) [lambda^{n-1}] f'(lambda) phi(lambda)^n.
//! The two code paths are independent so each can check the other.

use num_rational::BigRational;

use crate::error::Result;
use crate::numbers::{binomial, factorial, int_pow};
use crate::poly::{Monomial, PolyCoeff};
use crate::series::{Series, Var};

/// The kernel phi of an implicit equation f = z phi(f).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kernel {
    /// phi(lambda) = (x + A(lambda))^{m-1}, the kernel of the m-factor
    /// series. Needs m >= 2.
    Power { m: u32 },
    /// phi(lambda) = exp B(lambda), the kernel of the transposition series.
    Exp,
}

impl Kernel {
    pub fn power(m: u32) -> Kernel {
        assert!(m >= 2, "the power kernel is defined for m >= 2");
        Kernel::Power { m }
    }

    /// The branch polynomial the kernel is built from: A(t) for `Power`,
    /// B(t) for `Exp`, truncated at t^order.
    pub fn branch_poly(&self, order: usize) -> Series {
        match *self {
            Kernel::Power { m } => branch_poly_power(m, order),
            Kernel::Exp => branch_poly_exp(order),
        }
    }

    pub fn phi(&self, order: usize) -> Series {
        match *self {
            Kernel::Power { m } => {
                let x = Series::constant(
                    Var::Lambda,
                    order,
                    PolyCoeff::from_term(Monomial::x(), BigRational::from_integer(1.into())),
                );
                (&x + &branch_poly_power(m, order)).pow(m - 1)
            }
            Kernel::Exp => branch_poly_exp(order)
                .exp()
                .expect("branch polynomials have no constant term"),
        }
    }
}

/// A(t) = sum_{i>=1} C(mi-1, i) u p_i t^i. At m = 1 every coefficient
/// vanishes (binomial with upper index below the lower).
pub fn branch_poly_power(m: u32, order: usize) -> Series {
    let mut coeffs = vec![PolyCoeff::zero(); order + 1];
    for i in 1..=order {
        let c = binomial(m as u64 * i as u64 - 1, i as u64);
        let mono = Monomial::p(i as u32).mul(&Monomial::u());
        coeffs[i] = PolyCoeff::from_term(mono, BigRational::from_integer(c));
    }
    Series::from_coeffs(Var::Lambda, coeffs)
}

/// B(t) = sum_{i>=1} (i^i / i!) p_i t^i.
pub fn branch_poly_exp(order: usize) -> Series {
    let mut coeffs = vec![PolyCoeff::zero(); order + 1];
    for i in 1..=order {
        let q = BigRational::new(int_pow(i as u64, i as u32), factorial(i as u64));
        coeffs[i] = PolyCoeff::from_term(Monomial::p(i as u32), q);
    }
    Series::from_coeffs(Var::Lambda, coeffs)
}

/// Solves f = z phi(f) by iterating from f = 0. Iteration k fixes the
/// coefficient of z^k, so the loop must stabilize within order + 1 rounds;
/// anything else is a kernel bug.
pub fn solve_fixed_point(kernel: &Kernel, order: usize) -> Series {
    let phi = kernel.phi(order);
    let mut f = Series::zero(Var::Z, order);
    for _ in 0..=order + 1 {
        let next = phi
            .compose(&f)
            .expect("iterates keep a zero constant term")
            .mul_var()
            .truncated(order);
        if next == f {
            return f;
        }
        f = next;
    }
    panic!("fixed-point iteration failed to stabilize at order {order}");
}

/// (1/n) [lambda^{n-1}] fprime(lambda) phi(lambda)^n, the coefficient of
/// z^n in f(w) where w solves w = z phi(w). `fprime` must be a Lambda
/// series of order at least n-1.
pub fn lagrange_coeff(kernel: &Kernel, fprime: &Series, n: usize) -> Result<PolyCoeff> {
    assert!(n >= 1, "coefficient extraction starts at z^1");
    let phi_n = kernel.phi(n - 1).pow(n as u32);
    let prod = fprime * &phi_n;
    let c = prod.coeff(n - 1)?;
    Ok(c.scale(&BigRational::new(1.into(), n.into())))
}
