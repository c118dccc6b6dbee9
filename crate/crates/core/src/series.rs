//! Truncated formal power series with polynomial coefficients. A series
//! carries its truncation order explicitly; asking for a coefficient beyond
//! that order is an error, never a silent zero. Binary operations truncate
//! to the shorter operand, which is exactly as far as the result is known.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::poly::PolyCoeff;

/// The formal variable a series is expanded in. `Z` is the main counting
/// variable; `Lambda` is the auxiliary variable of branch polynomials and
/// coefficient extraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    Z,
    Lambda,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::Z => "z",
            Var::Lambda => "lambda",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    var: Var,
    coeffs: Vec<PolyCoeff>,
}

impl Series {
    pub fn zero(var: Var, order: usize) -> Self {
        Series {
            var,
            coeffs: vec![PolyCoeff::zero(); order + 1],
        }
    }

    pub fn one(var: Var, order: usize) -> Self {
        let mut s = Series::zero(var, order);
        s.coeffs[0] = PolyCoeff::one();
        s
    }

    /// The series consisting of the variable itself.
    pub fn variable(var: Var, order: usize) -> Self {
        let mut s = Series::zero(var, order);
        if order >= 1 {
            s.coeffs[1] = PolyCoeff::one();
        }
        s
    }

    /// A degree-0 series whose constant term is the given polynomial.
    pub fn constant(var: Var, order: usize, poly: PolyCoeff) -> Self {
        let mut s = Series::zero(var, order);
        s.coeffs[0] = poly;
        s
    }

    pub fn from_coeffs(var: Var, coeffs: Vec<PolyCoeff>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least the constant term");
        Series { var, coeffs }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Result<&PolyCoeff> {
        self.coeffs.get(n).ok_or(Error::TruncationOverflow {
            needed: n,
            order: self.order(),
        })
    }

    pub fn coeffs(&self) -> &[PolyCoeff] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(PolyCoeff::is_zero)
    }

    pub fn truncated(&self, order: usize) -> Series {
        assert!(
            order <= self.order(),
            "cannot extend a series from order {} to {}",
            self.order(),
            order
        );
        Series {
            var: self.var,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    fn check_var(&self, other: &Series) {
        assert_eq!(
            self.var, other.var,
            "mixed series variables in one operation"
        );
    }

    pub fn scale(&self, q: &BigRational) -> Series {
        Series {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| c.scale(q)).collect(),
        }
    }

    pub fn scale_poly(&self, p: &PolyCoeff) -> Series {
        Series {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    fn map_coeffs<F>(&self, f: F) -> Series
    where
        F: Fn(&PolyCoeff) -> PolyCoeff,
    {
        Series {
            var: self.var,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// z d/dz (in the series variable): scales coefficient n by n.
    pub fn var_dd(&self) -> Series {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.scale(&BigRational::from_integer(n.into())))
            .collect();
        Series {
            var: self.var,
            coeffs,
        }
    }

    /// d/dz. The result is known to one order less than the input, and the
    /// order bookkeeping says so.
    pub fn dd(&self) -> Series {
        assert!(self.order() >= 1, "cannot differentiate an order-0 series");
        let coeffs = (1..self.coeffs.len())
            .map(|n| self.coeffs[n].scale(&BigRational::from_integer(n.into())))
            .collect();
        Series {
            var: self.var,
            coeffs,
        }
    }

    /// Multiplication by the series variable. All coefficients of the result
    /// are determined, so the order grows by one.
    pub fn mul_var(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(PolyCoeff::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Series {
            var: self.var,
            coeffs,
        }
    }

    pub fn u_ddu(&self) -> Series {
        self.map_coeffs(PolyCoeff::u_ddu)
    }

    pub fn x_ddx(&self) -> Series {
        self.map_coeffs(PolyCoeff::x_ddx)
    }

    pub fn ddx(&self) -> Series {
        self.map_coeffs(PolyCoeff::ddx)
    }

    pub fn ddp(&self, k: u32) -> Series {
        self.map_coeffs(|c| c.ddp(k))
    }

    /// Sum over k of p_k d/dp_k, applied coefficientwise.
    pub fn sum_p_ddp(&self) -> Series {
        self.map_coeffs(PolyCoeff::sum_p_ddp)
    }

    pub fn pow(&self, k: u32) -> Series {
        let mut out = Series::one(self.var, self.order());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// exp of a series with zero constant term.
    pub fn exp(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm { operation: "exp" });
        }
        let order = self.order();
        let mut acc = Series::one(self.var, order);
        let mut term = Series::one(self.var, order);
        for k in 1..=order {
            term = &term * self;
            term = term.scale(&BigRational::new(1.into(), k.into()));
            if term.is_zero() {
                break;
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Substitutes `inner` (which must have zero constant term) for this
    /// series' variable. The result is expanded in `inner`'s variable and
    /// known to `inner`'s order.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm {
                operation: "compose",
            });
        }
        let order = inner.order();
        let mut out = Series::zero(inner.var, order);
        out.coeffs[0] = self.coeffs[0].clone();
        let mut power = Series::one(inner.var, order);
        for i in 1..self.coeffs.len() {
            power = &power * inner;
            if power.is_zero() {
                break;
            }
            out = &out + &power.scale_poly(&self.coeffs[i]);
        }
        Ok(out)
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.check_var(rhs);
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
            .collect();
        Series {
            var: self.var,
            coeffs,
        }
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.check_var(rhs);
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| &self.coeffs[n] - &rhs.coeffs[n])
            .collect();
        Series {
            var: self.var,
            coeffs,
        }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        self.check_var(rhs);
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![PolyCoeff::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Series {
            var: self.var,
            coeffs,
        }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.map_coeffs(|c| -c)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.var.name();
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c}) {name}")?,
                _ => write!(f, "({c}) {name}^{n}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O({name}^{})", self.order() + 1)
    }
}

/// One coefficient mismatch between two series: the lowest degree at which
/// they differ, and within it the least monomial (in `Monomial` order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub degree: usize,
    pub monomial: crate::poly::Monomial,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at degree {} on {}: lhs {} vs rhs {}",
            self.degree, self.monomial, self.lhs, self.rhs
        )
    }
}

/// Compares two series coefficientwise through degree `up_to` inclusive.
pub fn first_discrepancy(lhs: &Series, rhs: &Series, up_to: usize) -> Result<Option<Discrepancy>> {
    for n in 0..=up_to {
        let diff = lhs.coeff(n)? - rhs.coeff(n)?;
        let mono = diff.terms().next().map(|(m, _)| m.clone());
        if let Some(mono) = mono {
            return Ok(Some(Discrepancy {
                degree: n,
                lhs: lhs.coeff(n)?.coeff(&mono),
                rhs: rhs.coeff(n)?.coeff(&mono),
                monomial: mono,
            }));
        }
    }
    Ok(None)
}
