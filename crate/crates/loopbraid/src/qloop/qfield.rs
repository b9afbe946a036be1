//! The field of rational functions in the quantum parameter `q`, with
//! exact rational coefficients.
//!
//! `q` stays a formal variable throughout: no numeric specialization ever
//! happens, so "generic q" is literal.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact::{rat, Poly, Rat};

/// An element of `Q(q)` as a reduced fraction `num / den` with the
/// denominator monic and `gcd(num, den) = 1`; equality is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QField {
    num: Poly<Rat>,
    den: Poly<Rat>,
}

impl QField {
    fn reduced(num: Poly<Rat>, den: Poly<Rat>) -> Self {
        assert!(!den.is_zero(), "division by the zero polynomial");
        if num.is_zero() {
            return QField {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (mut num, _) = num.div_rem(&g);
        let (mut den, _) = den.div_rem(&g);
        let lead = den.leading().expect("nonzero denominator").clone();
        if !lead.is_one() {
            num = &num * &Poly::constant(rat(1) / lead.clone());
            den = &den * &Poly::constant(rat(1) / lead);
        }
        QField { num, den }
    }

    pub fn from_poly(p: Poly<Rat>) -> Self {
        QField {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        QField::from_poly(Poly::constant(c))
    }

    /// `q^e` for any integer exponent.
    pub fn q_pow(e: i64) -> Self {
        let mut mono = vec![rat(0); e.unsigned_abs() as usize + 1];
        let last = mono.len() - 1;
        mono[last] = rat(1);
        let p = Poly::from_coeffs(mono);
        if e >= 0 {
            QField::from_poly(p)
        } else {
            QField {
                num: Poly::one(),
                den: p,
            }
        }
    }

    /// The variable `q` itself.
    pub fn q() -> Self {
        QField::q_pow(1)
    }

    pub fn num(&self) -> &Poly<Rat> {
        &self.num
    }

    pub fn den(&self) -> &Poly<Rat> {
        &self.den
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero in Q(q)");
        QField::reduced(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut out = QField::one();
        for _ in 0..e.unsigned_abs() {
            out = out * base.clone();
        }
        out
    }

    /// The z-number `[m]` evaluated at `q^k`:
    /// `(q^{km} - q^{-km}) / (q^k - q^{-k})`, as an exact element of `Q(q)`.
    /// Expanded as the Laurent-polynomial sum, so no division is involved.
    pub fn qnum_at(m: i64, k: i64) -> Self {
        let (m_abs, sign) = if m >= 0 { (m, 1) } else { (-m, -1) };
        let mut out = QField::zero();
        for l in 0..m_abs {
            out = out + QField::q_pow(k * (m_abs - 1 - 2 * l)) * QField::constant(rat(sign));
        }
        out
    }
}

impl Zero for QField {
    fn zero() -> Self {
        QField {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for QField {
    fn one() -> Self {
        QField {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    fn is_one(&self) -> bool {
        self.num == Poly::one() && self.den == Poly::one()
    }
}

impl Add for QField {
    type Output = QField;
    fn add(self, rhs: QField) -> QField {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        QField::reduced(num, den)
    }
}

impl Sub for QField {
    type Output = QField;
    fn sub(self, rhs: QField) -> QField {
        self + (-rhs)
    }
}

impl Neg for QField {
    type Output = QField;
    fn neg(self) -> QField {
        QField {
            num: &Poly::zero() - &self.num,
            den: self.den,
        }
    }
}

impl Mul for QField {
    type Output = QField;
    fn mul(self, rhs: QField) -> QField {
        QField::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for QField {
    type Output = QField;
    fn div(self, rhs: QField) -> QField {
        assert!(!rhs.is_zero(), "division by zero in Q(q)");
        QField::reduced(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl fmt::Display for QField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |p: &Poly<Rat>| -> String { format!("{}", p).replace("*u", "*q") };
        if self.den.is_one() {
            write!(f, "{}", show(&self.num))
        } else {
            write!(f, "({}) / ({})", show(&self.num), show(&self.den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_spotcheck() {
        let a = QField::q_pow(2) + QField::constant(rat(1));
        let b = QField::q_pow(-1);
        assert_eq!((a.clone() * b.clone()) / b.clone(), a);
        assert_eq!(a.clone() - a.clone(), QField::zero());
        assert_eq!(a.clone() * a.inv(), QField::one());
    }

    #[test]
    fn negative_powers_reduce() {
        // q * q^-1 = 1, q^-2 * q^3 = q
        assert_eq!(QField::q() * QField::q_pow(-1), QField::one());
        assert_eq!(QField::q_pow(-2) * QField::q_pow(3), QField::q());
    }

    #[test]
    fn qnum_values() {
        // [2]_q = q + q^-1, as (q^2 + 1)/q
        let two = QField::qnum_at(2, 1);
        assert_eq!(two, QField::q() + QField::q_pow(-1));
        // [m] (q - q^-1) = q^m - q^-m
        for m in -5..=5 {
            for k in 1..=3 {
                let lhs = QField::qnum_at(m, k) * (QField::q_pow(k) - QField::q_pow(-k));
                let rhs = QField::q_pow(k * m) - QField::q_pow(-k * m);
                assert_eq!(lhs, rhs, "m = {}, k = {}", m, k);
            }
        }
    }

    #[test]
    fn canonical_form_makes_equality_structural() {
        // (q^2 - 1)/(q - 1) = q + 1
        let num = Poly::from_coeffs(vec![rat(-1), rat(0), rat(1)]);
        let den = Poly::from_coeffs(vec![rat(-1), rat(1)]);
        let x = QField::reduced(num, den);
        assert_eq!(x, QField::q() + QField::one());
    }
}
