//! Laurent polynomials over the rationals, used for z-numbers `[m]_z` and
//! the quantized Cartan matrix entries.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::{rat, Rat};

/// A Laurent polynomial `sum_k c_k z^(offset + k)`.
///
/// Invariant: the first and last stored coefficients are nonzero unless the
/// whole polynomial is zero (empty list, offset 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    offset: i64,
    coeffs: Vec<Rat>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            offset: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(rat(1), 0)
    }

    /// `c * z^k`.
    pub fn monomial(c: Rat, k: i64) -> Self {
        if c.is_zero() {
            LaurentPoly::zero()
        } else {
            LaurentPoly {
                offset: k,
                coeffs: vec![c],
            }
        }
    }

    pub fn from_parts(offset: i64, coeffs: Vec<Rat>) -> Self {
        let mut p = LaurentPoly { offset, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.offset += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.offset = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with nonzero coefficient (the valuation at z = 0).
    pub fn valuation(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset)
        }
    }

    pub fn max_degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.offset + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeff(&self, k: i64) -> Rat {
        let idx = k - self.offset;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            Rat::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero coefficients as `(exponent, value)` pairs, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rat)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.offset + i as i64, c))
    }

    /// Substitute `z -> z^-1`.
    pub fn invert_variable(&self) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let top = self.offset + self.coeffs.len() as i64 - 1;
        let coeffs = self.coeffs.iter().rev().cloned().collect();
        LaurentPoly::from_parts(-top, coeffs)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(rhs.offset);
        let hi = (self.offset + self.coeffs.len() as i64).max(rhs.offset + rhs.coeffs.len() as i64);
        let mut coeffs = Vec::with_capacity((hi - lo) as usize);
        for k in lo..hi {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        LaurentPoly::from_parts(lo, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_parts(self.offset + rhs.offset, coeffs)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})*z", c)?,
                _ => write!(f, "({})*z^{}", c, k)?,
            }
        }
        Ok(())
    }
}

/// The z-number `[m]_{z^p} = (z^{pm} - z^{-pm}) / (z^p - z^{-p})`.
///
/// For `m > 0` this is `z^{p(m-1)} + z^{p(m-3)} + ... + z^{-p(m-1)}`, an
/// m-term Laurent polynomial; `[0] = 0` and `[-m] = -[m]`. Panics if `p = 0`.
pub fn qnum(m: i64, power: i64) -> LaurentPoly {
    assert!(power != 0, "qnum power must be nonzero");
    let p = power.abs();
    let (m_abs, sign) = if m >= 0 { (m, 1) } else { (-m, -1) };
    let mut out = LaurentPoly::zero();
    for k in 0..m_abs {
        let expo = p * (m_abs - 1 - 2 * k);
        out = &out + &LaurentPoly::monomial(rat(sign), expo);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qnum_basic_values() {
        // [2]_z = z + z^-1
        let two = qnum(2, 1);
        assert_eq!(two.coeff(1), rat(1));
        assert_eq!(two.coeff(-1), rat(1));
        assert_eq!(two.terms().count(), 2);
        // [0] = 0
        assert!(qnum(0, 1).is_zero());
        // [-3]_{z^2} = -(z^4 + 1 + z^-4)
        let m = qnum(-3, 2);
        assert_eq!(m.coeff(4), rat(-1));
        assert_eq!(m.coeff(0), rat(-1));
        assert_eq!(m.coeff(-4), rat(-1));
        assert_eq!(m.terms().count(), 3);
    }

    #[test]
    fn qnum_defining_identity() {
        // [m] * (z - z^-1) = z^m - z^-m
        let zm = &LaurentPoly::monomial(rat(1), 1) - &LaurentPoly::monomial(rat(1), -1);
        for m in -6..=6 {
            let lhs = &qnum(m, 1) * &zm;
            let rhs = &LaurentPoly::monomial(rat(1), m) - &LaurentPoly::monomial(rat(1), -m);
            assert_eq!(lhs, rhs, "m = {}", m);
        }
    }

    #[test]
    fn arithmetic_normalizes() {
        let a = LaurentPoly::from_parts(-2, vec![rat(0), rat(1), rat(0), rat(3), rat(0)]);
        assert_eq!(a.valuation(), Some(-1));
        assert_eq!(a.max_degree(), Some(1));
        let diff = &a - &a;
        assert!(diff.is_zero());
    }
}
