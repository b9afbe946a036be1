//! Exact arithmetic substrate: arbitrary-precision rationals, dense
//! univariate polynomials, Laurent polynomials, truncated power series,
//! dense matrices, and root multisets encoding monic rational functions.
//!
//! Every computation in this crate is exact; no floating point exists
//! anywhere. Rationals cross all I/O boundaries as strings `"p/q"` or `"p"`.

pub mod laurent;
pub mod matrix;
pub mod multiset;
pub mod poly;
pub mod series;

use std::ops::{Div, Neg, Sub};

use num::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use laurent::{qnum, LaurentPoly};
pub use matrix::Mat;
pub use multiset::RootMultiset;
pub use poly::Poly;
pub use series::{series_matrix_inverse, series_residual_is_identity, TruncSeries};

/// Ground field element: an arbitrary-precision rational number.
///
/// `BigRational` keeps the denominator positive and the fraction reduced,
/// which is exactly the invariant the rest of the crate relies on.
pub type Rat = num::BigRational;

/// The coefficient-field interface shared by polynomials, series and
/// matrices: exact field arithmetic by value.
pub trait Field:
    Clone + PartialEq + Zero + One + Sub<Output = Self> + Div<Output = Self> + Neg<Output = Self>
{
}

impl<T> Field for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Sub<Output = Self>
        + Div<Output = Self>
        + Neg<Output = Self>
{
}

/// Shorthand for small integer rationals.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

/// Parse a rational from the I/O convention `"p/q"` or `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat, ExactError> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|_| ExactError::BadRational(s.to_owned()))
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("cannot parse `{0}` as a rational number")]
    BadRational(String),
    #[error("matrix determinant vanishes identically")]
    SingularMatrix,
    #[error("root multiset has a negative multiplicity; not a polynomial")]
    NotPolynomial,
    #[error("series expansion would require negative powers")]
    NegativeValuation,
}

/// Global parameters shared by every module: the deformation parameter ħ.
///
/// ħ is an arbitrary nonzero rational, defaulting to 1. It is carried
/// explicitly and never baked into any type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlobalParams {
    hbar: Rat,
}

impl GlobalParams {
    /// Panics if `hbar` is zero.
    pub fn new(hbar: Rat) -> Self {
        assert!(!num::Zero::is_zero(&hbar), "hbar must be nonzero");
        GlobalParams { hbar }
    }

    pub fn hbar(&self) -> &Rat {
        &self.hbar
    }

    /// ħ/2, the elementary shift step of the whole theory.
    pub fn half_hbar(&self) -> Rat {
        self.hbar.clone() / rat(2)
    }
}

impl Default for GlobalParams {
    fn default() -> Self {
        GlobalParams::new(rat(1))
    }
}
