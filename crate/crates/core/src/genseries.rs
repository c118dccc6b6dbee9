//! Assembles the truncated generating series that the counting formulas
//! feed: the m-factor series G, the transposition series H and its
//! u-weighted variant, the derived series T and v, and the implicit series
//! w, s together with the branch compositions A(w), B(s).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::closed_form::{g_alpha, h_alpha};
use crate::error::{Error, Result};
use crate::lagrange::{solve_fixed_point, Kernel};
use crate::numbers::{factorial, int_pow};
use crate::partition::{partitions_of, Partition};
use crate::poly::{Monomial, PolyCoeff};
use crate::series::{Series, Var};

/// The series the CLI and verifier can build by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesTag {
    G,
    H,
    Hhat,
    T,
    V,
    W,
    S,
    Aw,
    Bs,
}

impl SeriesTag {
    pub const ALL: [SeriesTag; 9] = [
        SeriesTag::G,
        SeriesTag::H,
        SeriesTag::Hhat,
        SeriesTag::T,
        SeriesTag::V,
        SeriesTag::W,
        SeriesTag::S,
        SeriesTag::Aw,
        SeriesTag::Bs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesTag::G => "G",
            SeriesTag::H => "H",
            SeriesTag::Hhat => "Hhat",
            SeriesTag::T => "T",
            SeriesTag::V => "V",
            SeriesTag::W => "W",
            SeriesTag::S => "S",
            SeriesTag::Aw => "Aw",
            SeriesTag::Bs => "Bs",
        }
    }

    pub fn needs_m(self) -> bool {
        matches!(
            self,
            SeriesTag::G | SeriesTag::T | SeriesTag::V | SeriesTag::W | SeriesTag::Aw
        )
    }
}

impl fmt::Display for SeriesTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SeriesTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::usage(format!("unknown series tag: {s}")))
    }
}

fn require_m(m: Option<u32>, what: &str) -> Result<u32> {
    match m {
        Some(m) if m >= 2 => Ok(m),
        Some(m) => Err(Error::usage(format!("{what} needs m >= 2, got {m}"))),
        None => Err(Error::usage(format!("{what} needs an m parameter"))),
    }
}

/// Builds the series named by `tag` at truncation order `order`.
pub fn build_series(tag: SeriesTag, m: Option<u32>, order: usize) -> Result<Series> {
    match tag {
        SeriesTag::G => g_series(require_m(m, "series G")?, order),
        SeriesTag::H => Ok(h_series(order)),
        SeriesTag::Hhat => Ok(hhat_series(order)),
        SeriesTag::T => t_series(require_m(m, "series T")?, order),
        SeriesTag::V => v_series(require_m(m, "series V")?, order),
        SeriesTag::W => Ok(w_series(require_m(m, "series W")?, order)),
        SeriesTag::S => Ok(s_series(order)),
        SeriesTag::Aw => Ok(aw_series(require_m(m, "series Aw")?, order)),
        SeriesTag::Bs => Ok(bs_series(order)),
    }
}

/// G = sum over n >= 1, alpha of n: count(alpha) |C_alpha| / n! *
/// u^{l} p_alpha x^{(m-1)n - l + 2} z^n, with the count supplied by the
/// caller. The production source is the closed form; tests inject
/// perturbed sources to confirm the verifier notices.
pub fn g_series_from_counts(
    m: u32,
    order: usize,
    count: &dyn Fn(&Partition) -> BigInt,
) -> Series {
    assert!(m >= 2);
    let mut coeffs = vec![PolyCoeff::zero(); order + 1];
    for n in 1..=order {
        let mut c = PolyCoeff::zero();
        for alpha in partitions_of(n as u32) {
            let weight = BigRational::new(
                count(&alpha) * alpha.class_size(),
                factorial(n as u64),
            );
            let mono = Monomial::from_partition(
                &alpha,
                alpha.len(),
                alpha.minimal_cycle_total(m) as u32,
            );
            c.insert_add(mono, weight);
        }
        coeffs[n] = c;
    }
    Series::from_coeffs(Var::Z, coeffs)
}

pub fn g_series(m: u32, order: usize) -> Result<Series> {
    if m < 2 {
        return Err(Error::usage(format!("series G needs m >= 2, got {m}")));
    }
    Ok(g_series_from_counts(m, order, &|alpha| {
        g_alpha(alpha, m).expect("m >= 2 checked above").value
    }))
}

/// H = sum over n, alpha: H_alpha |C_alpha| / (n! (n+l-2)!) p_alpha z^n.
pub fn h_series(order: usize) -> Series {
    let mut coeffs = vec![PolyCoeff::zero(); order + 1];
    for n in 1..=order {
        let mut c = PolyCoeff::zero();
        for alpha in partitions_of(n as u32) {
            let l = alpha.len() as u64;
            let weight = BigRational::new(
                h_alpha(&alpha).value * alpha.class_size(),
                factorial(n as u64) * factorial(n as u64 + l - 2),
            );
            c.insert_add(Monomial::from_partition(&alpha, 0, 0), weight);
        }
        coeffs[n] = c;
    }
    Series::from_coeffs(Var::Z, coeffs)
}

/// The u-decorated variant of H: every p_k picks up a factor of u, so each
/// coefficient of H gains u^l where l is the number of parts. The substitution
/// is a ring homomorphism, which is exactly what lets the quadratic
/// differential equation for H carry over with u d/du in place of the
/// sum of p_k d/dp_k.
pub fn hhat_series(order: usize) -> Series {
    let mut coeffs = vec![PolyCoeff::zero(); order + 1];
    for n in 1..=order {
        let mut c = PolyCoeff::zero();
        for alpha in partitions_of(n as u32) {
            let l = alpha.len() as u64;
            let weight = BigRational::new(
                h_alpha(&alpha).value * alpha.class_size(),
                factorial(n as u64) * factorial(n as u64 + l - 2),
            );
            c.insert_add(Monomial::from_partition(&alpha, alpha.len(), 0), weight);
        }
        coeffs[n] = c;
    }
    Series::from_coeffs(Var::Z, coeffs)
}

/// T = (1/m) dG/dz, built from G at one order higher so the result is
/// good through `order`.
pub fn t_series(m: u32, order: usize) -> Result<Series> {
    Ok(t_from_g(&g_series(m, order + 1)?, m))
}

pub(crate) fn t_from_g(g_at_order_plus_one: &Series, m: u32) -> Series {
    g_at_order_plus_one
        .dd()
        .scale(&BigRational::new(1.into(), m.into()))
}

/// v = (m-1) z dT/dx.
pub fn v_series(m: u32, order: usize) -> Result<Series> {
    Ok(v_from_t(&t_series(m, order)?, m).truncated(order))
}

pub(crate) fn v_from_t(t: &Series, m: u32) -> Series {
    t.ddx()
        .mul_var()
        .scale(&BigRational::from_integer((m as i64 - 1).into()))
}

/// The solution of w = z (x + A(w))^{m-1}.
pub fn w_series(m: u32, order: usize) -> Series {
    solve_fixed_point(&Kernel::power(m), order)
}

/// The solution of s = z exp B(s).
pub fn s_series(order: usize) -> Series {
    solve_fixed_point(&Kernel::Exp, order)
}

/// A(w): the power-kernel branch polynomial composed with its solution.
pub fn aw_series(m: u32, order: usize) -> Series {
    let kernel = Kernel::power(m);
    kernel
        .branch_poly(order)
        .compose(&w_series(m, order))
        .expect("w has no constant term")
}

/// B(s): the exp-kernel branch polynomial composed with its solution.
pub fn bs_series(order: usize) -> Series {
    Kernel::Exp
        .branch_poly(order)
        .compose(&s_series(order))
        .expect("s has no constant term")
}

/// sum_{i>=1} (i^{i-1} / i!) p_i t^i, the companion of the exp branch
/// polynomial with rooted-tree numerators.
pub fn rooted_tree_poly(order: usize) -> Series {
    let mut coeffs = vec![PolyCoeff::zero(); order + 1];
    for i in 1..=order {
        let q = BigRational::new(int_pow(i as u64, i as u32 - 1), factorial(i as u64));
        coeffs[i] = PolyCoeff::from_term(Monomial::p(i as u32), q);
    }
    Series::from_coeffs(Var::Lambda, coeffs)
}
