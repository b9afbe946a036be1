//! Dense univariate polynomials over an exact field, lowest degree first.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use super::Field;

/// A dense polynomial `c_0 + c_1 x + ... + c_d x^d`.
///
/// Invariant: the leading coefficient is nonzero unless the polynomial is
/// zero (empty coefficient list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Field> Poly<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::from_coeffs(vec![T::one()])
    }

    pub fn constant(c: T) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monic linear factor `x - root`.
    pub fn linear(root: &T) -> Self {
        Poly::from_coeffs(vec![-root.clone(), T::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Euclidean division, valid over a field. Panics on division by zero.
    pub fn div_rem(&self, rhs: &Poly<T>) -> (Poly<T>, Poly<T>) {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        let mut rem = self.coeffs.clone();
        let dr = rhs.coeffs.len() - 1;
        let lead = rhs.coeffs.last().unwrap();
        if rem.len() <= dr {
            return (Poly::zero(), Poly::from_coeffs(rem));
        }
        let mut quot = vec![T::zero(); rem.len() - dr];
        while rem.len() > dr {
            let k = rem.len() - 1 - dr;
            let q = rem[rem.len() - 1].clone() / lead.clone();
            for (j, b) in rhs.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - q.clone() * b.clone();
            }
            // q cancels the leading term of rem, so rem strictly shrinks
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            quot[k] = q;
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Monic gcd via the Euclidean algorithm. gcd(0, 0) = 0.
    pub fn gcd(&self, rhs: &Poly<T>) -> Poly<T> {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.make_monic();
        a
    }

    /// Scale so the leading coefficient is 1 (no-op on zero).
    pub fn make_monic(&mut self) {
        if let Some(lead) = self.coeffs.last().cloned() {
            if !lead.is_one() {
                for c in &mut self.coeffs {
                    *c = c.clone() / lead.clone();
                }
            }
        }
    }
}

impl<T: Field> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::from_coeffs(out)
    }
}

impl<T: Field> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::from_coeffs(out)
    }
}

impl<T: Field> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<T: fmt::Display + Zero> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})*u", c)?,
                _ => write!(f, "({})*u^{}", c, k)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, Rat};

    #[test]
    fn mul_and_eval() {
        // (u - 1)^2 = u^2 - 2u + 1
        let f = Poly::linear(&rat(1));
        let sq = &f * &f;
        assert_eq!(sq.coeffs(), &[rat(1), rat(-2), rat(1)]);
        assert_eq!(sq.eval(&rat(3)), rat(4));
        assert!(sq.is_monic());
    }

    #[test]
    fn division_exact() {
        let f = &Poly::linear(&rat(1)) * &Poly::linear(&rat(2));
        let (q, r) = f.div_rem(&Poly::linear(&rat(2)));
        assert!(r.is_zero());
        assert_eq!(q, Poly::linear(&rat(1)));
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = &Poly::linear(&rat(1)) * &Poly::linear(&rat(2));
        let b = &Poly::linear(&rat(2)) * &Poly::linear(&rat(5));
        assert_eq!(a.gcd(&b), Poly::linear(&rat(2)));
        let z: Poly<Rat> = Poly::zero();
        assert_eq!(z.gcd(&z), Poly::zero());
    }

    #[test]
    fn normalization_trims_leading_zeros() {
        let f = Poly::from_coeffs(vec![rat(1), rat(0), rat(0)]);
        assert_eq!(f.degree(), Some(0));
    }
}
