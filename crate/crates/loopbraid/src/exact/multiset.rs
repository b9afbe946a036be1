//! Root multisets: exact monic rational functions of `u` encoded as finite
//! multiplicity maps from rational roots to nonzero integers.
//!
//! The multiset `{a_1: m_1, ..., a_k: m_k}` represents the monic rational
//! function `prod_t (u - a_t)^{m_t}`. Multiplication is multiplicity
//! addition, inversion is negation, and shifting the argument translates
//! every root. This makes equality of rational functions a plain map
//! comparison, immune to coefficient blowup.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::poly::Poly;
use super::{ExactError, Rat};

/// A monic rational function of `u` with rational roots, as a multiset.
///
/// Invariant: no zero multiplicities are stored. The empty multiset is the
/// constant function 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RootMultiset {
    entries: BTreeMap<Rat, i64>,
}

impl RootMultiset {
    /// The constant function 1.
    pub fn one() -> Self {
        RootMultiset::default()
    }

    /// The monic linear factor `u - root`.
    pub fn linear(root: Rat) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(root, 1);
        RootMultiset { entries }
    }

    pub fn from_entries<I: IntoIterator<Item = (Rat, i64)>>(iter: I) -> Self {
        let mut out = RootMultiset::one();
        for (root, mult) in iter {
            out.insert(root, mult);
        }
        out
    }

    /// Add `mult` to the multiplicity of `root`, pruning zeros.
    pub fn insert(&mut self, root: Rat, mult: i64) {
        if mult == 0 {
            return;
        }
        match self.entries.get_mut(&root) {
            Some(slot) => {
                *slot += mult;
                if *slot == 0 {
                    self.entries.remove(&root);
                }
            }
            None => {
                self.entries.insert(root, mult);
            }
        }
    }

    pub fn is_one(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Rat, i64)> {
        self.entries.iter().map(|(r, &m)| (r, m))
    }

    pub fn multiplicity(&self, root: &Rat) -> i64 {
        self.entries.get(root).copied().unwrap_or(0)
    }

    /// Degree as a rational function: the sum of all multiplicities.
    pub fn degree(&self) -> i64 {
        self.entries.values().sum()
    }

    /// Product of two monic rational functions.
    pub fn mul(&self, rhs: &RootMultiset) -> RootMultiset {
        let mut out = self.clone();
        for (root, mult) in rhs.entries() {
            out.insert(root.clone(), mult);
        }
        out
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> RootMultiset {
        RootMultiset {
            entries: self.entries.iter().map(|(r, m)| (r.clone(), -m)).collect(),
        }
    }

    /// Integer power (negative exponents allowed).
    pub fn pow(&self, e: i64) -> RootMultiset {
        if e == 0 {
            return RootMultiset::one();
        }
        RootMultiset {
            entries: self
                .entries
                .iter()
                .map(|(r, m)| (r.clone(), m * e))
                .collect(),
        }
    }

    /// The function `u -> f(u - c)`: every root `a` becomes `a + c`.
    pub fn shift(&self, c: &Rat) -> RootMultiset {
        if c.is_zero() {
            return self.clone();
        }
        RootMultiset {
            entries: self.entries.iter().map(|(r, m)| (r + c, *m)).collect(),
        }
    }

    /// True when all multiplicities are nonnegative (a polynomial).
    pub fn is_polynomial(&self) -> bool {
        self.entries.values().all(|&m| m >= 0)
    }

    /// Roots with positive multiplicity.
    pub fn zeros(&self) -> Vec<Rat> {
        self.entries
            .iter()
            .filter(|(_, &m)| m > 0)
            .map(|(r, _)| r.clone())
            .collect()
    }

    /// Roots with negative multiplicity.
    pub fn poles(&self) -> Vec<Rat> {
        self.entries
            .iter()
            .filter(|(_, &m)| m < 0)
            .map(|(r, _)| r.clone())
            .collect()
    }

    /// Multiply out the linear factors into a monic dense polynomial.
    ///
    /// Fails with `NotPolynomial` when any multiplicity is negative.
    pub fn expand(&self) -> Result<Poly<Rat>, ExactError> {
        if !self.is_polynomial() {
            return Err(ExactError::NotPolynomial);
        }
        let mut out = Poly::one();
        for (root, mult) in self.entries() {
            let lin = Poly::linear(root);
            for _ in 0..mult {
                out = &out * &lin;
            }
        }
        Ok(out)
    }
}

impl fmt::Display for RootMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (root, mult) in self.entries() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if mult == 1 {
                write!(f, "(u - {})", root)?;
            } else {
                write!(f, "(u - {})^{}", root, mult)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    #[test]
    fn group_law_and_cancellation() {
        // (u-1)(u-2) * (u-2)^-1 = (u-1)
        let f = RootMultiset::from_entries([(rat(1), 1), (rat(2), 1)]);
        let g = RootMultiset::from_entries([(rat(2), -1)]);
        assert_eq!(f.mul(&g), RootMultiset::linear(rat(1)));
        // f * f^-1 = 1
        assert!(f.mul(&f.inv()).is_one());
        assert_eq!(f.degree(), 2);
        assert_eq!(f.inv().degree(), -2);
    }

    #[test]
    fn shift_translates_roots() {
        // f = (u-1)^2 shifted by 1/2 is (u - 3/2)^2
        let f = RootMultiset::from_entries([(rat(1), 2)]);
        let g = f.shift(&ratio(1, 2));
        assert_eq!(g, RootMultiset::from_entries([(ratio(3, 2), 2)]));
        assert_eq!(g.degree(), f.degree());
        assert_eq!(f.shift(&rat(0)), f);
    }

    #[test]
    fn expand_squared_factor() {
        let f = RootMultiset::from_entries([(rat(1), 2)]);
        let p = f.expand().unwrap();
        assert_eq!(p.coeffs(), &[rat(1), rat(-2), rat(1)]);
        assert!(RootMultiset::from_entries([(rat(1), -1)]).expand().is_err());
    }

    #[test]
    fn zeros_and_poles_split() {
        let f = RootMultiset::from_entries([(rat(1), 2), (rat(3), -1)]);
        assert_eq!(f.zeros(), vec![rat(1)]);
        assert_eq!(f.poles(), vec![rat(3)]);
        assert!(!f.is_polynomial());
    }
}
