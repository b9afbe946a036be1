//! Truncated power series and exact Laurent-matrix inversion.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use super::laurent::LaurentPoly;
use super::{ExactError, Field, Rat};

/// A power series truncated modulo `z^order`: coefficients `c_0 .. c_{order-1}`.
///
/// All arithmetic is closed modulo `z^order`; binary operations require equal
/// orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries<T> {
    order: usize,
    coeffs: Vec<T>,
}

impl<T: Field> TruncSeries<T> {
    pub fn zero(order: usize) -> Self {
        assert!(order > 0, "series order must be positive");
        TruncSeries {
            order,
            coeffs: vec![T::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = TruncSeries::zero(order);
        s.coeffs[0] = T::one();
        s
    }

    /// Build from the given low-order coefficients, padding with zeros.
    pub fn from_coeffs(order: usize, coeffs: Vec<T>) -> Self {
        let mut s = TruncSeries::zero(order);
        for (k, c) in coeffs.into_iter().enumerate().take(order) {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: T) {
        assert!(k < self.order);
        self.coeffs[k] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Multiply by `z^k`, dropping coefficients past the truncation order.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut out = TruncSeries::zero(self.order);
        for i in k..self.order {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// Re-truncate to a smaller order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order);
        TruncSeries {
            order,
            coeffs: self.coeffs[..order].to_vec(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        TruncSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiplicative inverse of a unit series (nonzero constant term).
    ///
    /// `b_0 = 1/a_0`, `b_k = -(sum_{j=1..k} a_j b_{k-j}) / a_0`.
    pub fn invert_unit(&self) -> Self {
        assert!(
            !self.coeffs[0].is_zero(),
            "series constant term must be a unit"
        );
        let a0 = self.coeffs[0].clone();
        let mut inv: Vec<T> = Vec::with_capacity(self.order);
        inv.push(T::one() / a0.clone());
        for k in 1..self.order {
            let mut acc = T::zero();
            for j in 1..=k {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc = acc + self.coeffs[j].clone() * inv[k - j].clone();
            }
            inv.push(-acc / a0.clone());
        }
        TruncSeries {
            order: self.order,
            coeffs: inv,
        }
    }
}

impl<T: Field> Add for &TruncSeries<T> {
    type Output = TruncSeries<T>;
    fn add(self, rhs: &TruncSeries<T>) -> TruncSeries<T> {
        assert_eq!(self.order, rhs.order, "series order mismatch");
        TruncSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Field> Sub for &TruncSeries<T> {
    type Output = TruncSeries<T>;
    fn sub(self, rhs: &TruncSeries<T>) -> TruncSeries<T> {
        assert_eq!(self.order, rhs.order, "series order mismatch");
        TruncSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: Field> Mul for &TruncSeries<T> {
    type Output = TruncSeries<T>;
    fn mul(self, rhs: &TruncSeries<T>) -> TruncSeries<T> {
        assert_eq!(self.order, rhs.order, "series order mismatch");
        let mut out = TruncSeries::<T>::zero(self.order);
        for i in 0..self.order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..self.order - i {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                out.coeffs[i + j] =
                    out.coeffs[i + j].clone() + self.coeffs[i].clone() * rhs.coeffs[j].clone();
            }
        }
        out
    }
}

impl<T: fmt::Display + Zero> fmt::Display for TruncSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
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
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order)
    }
}

/// Determinant of a square Laurent-polynomial matrix by cofactor expansion.
///
/// Expansion runs along the first remaining row, skipping zero entries; for
/// the near-tridiagonal quantized Cartan matrices this prunes almost all
/// branches.
fn laurent_det(m: &[Vec<LaurentPoly>], cols: &mut Vec<usize>, row: usize) -> LaurentPoly {
    let n = cols.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    if n == 1 {
        return m[row][cols[0]].clone();
    }
    let mut acc = LaurentPoly::zero();
    for pos in 0..n {
        let col = cols[pos];
        let entry = &m[row][col];
        if entry.is_zero() {
            continue;
        }
        let removed = cols.remove(pos);
        let minor = laurent_det(m, cols, row + 1);
        cols.insert(pos, removed);
        let term = entry * &minor;
        if pos % 2 == 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}

/// Laurent expansion at `z = 0` of `num / den`, truncated modulo `z^order`.
///
/// Returns `NegativeValuation` if the quotient has a pole at `z = 0`.
fn laurent_quotient(
    num: &LaurentPoly,
    den: &LaurentPoly,
    order: usize,
) -> Result<TruncSeries<Rat>, ExactError> {
    if num.is_zero() {
        return Ok(TruncSeries::zero(order));
    }
    let vn = num.valuation().unwrap();
    let vd = den.valuation().expect("nonzero denominator");
    let shift = vn - vd;
    if shift < 0 {
        return Err(ExactError::NegativeValuation);
    }
    let shift = shift as usize;
    if shift >= order {
        return Ok(TruncSeries::zero(order));
    }
    // strip valuations so both sides become unit power series
    let unit = |p: &LaurentPoly, val: i64| -> TruncSeries<Rat> {
        let mut s = TruncSeries::zero(order);
        for (k, c) in p.terms() {
            let idx = k - val;
            if (idx as usize) < order {
                s.set_coeff(idx as usize, c.clone());
            }
        }
        s
    };
    let num_s = unit(num, vn);
    let den_s = unit(den, vd);
    Ok((&num_s * &den_s.invert_unit()).shift_up(shift))
}

/// Exact inverse of a square Laurent-polynomial matrix, with every entry
/// Laurent-expanded at `z = 0` modulo `z^order`.
///
/// Computed as adjugate over determinant; returns `SingularMatrix` when the
/// determinant vanishes identically, and `NegativeValuation` if any entry of
/// the inverse has a pole at the origin.
pub fn series_matrix_inverse(
    m: &[Vec<LaurentPoly>],
    order: usize,
) -> Result<Vec<Vec<TruncSeries<Rat>>>, ExactError> {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    let det = laurent_det(m, &mut (0..n).collect(), 0);
    if det.is_zero() {
        return Err(ExactError::SingularMatrix);
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            // inverse entry (i, j) = cofactor (j, i) / det
            let mut cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let sub: Vec<Vec<LaurentPoly>> =
                (0..n).filter(|&r| r != j).map(|r| m[r].clone()).collect();
            let minor = laurent_det(&sub, &mut cols, 0);
            let cof = if (i + j) % 2 == 0 { minor } else { -&minor };
            row.push(laurent_quotient(&cof, &det, order)?);
        }
        out.push(row);
    }
    Ok(out)
}

/// Audit that `m * m^-1` re-expands to the identity modulo `z^order`.
///
/// The inverse is recomputed with enough slack that negative Laurent
/// exponents of `m` cannot pollute the compared coefficient window.
#[allow(clippy::needless_range_loop)]
pub fn series_residual_is_identity(m: &[Vec<LaurentPoly>], order: usize) -> bool {
    let n = m.len();
    let min_val = m
        .iter()
        .flatten()
        .filter_map(|p| p.valuation())
        .min()
        .unwrap_or(0)
        .min(0);
    let pad = (-min_val) as usize;
    let inv = match series_matrix_inverse(m, order + pad) {
        Ok(inv) => inv,
        Err(_) => return false,
    };
    for i in 0..n {
        for j in 0..n {
            // entry (i,j) of m * inv, indexed by exponent + pad
            let mut acc = vec![Rat::zero(); order + 2 * pad];
            for k in 0..n {
                for (e, c) in m[i][k].terms() {
                    for (s, v) in inv[k][j].coeffs().iter().enumerate() {
                        if v.is_zero() {
                            continue;
                        }
                        let idx = e + s as i64 + pad as i64;
                        if idx >= 0 && (idx as usize) < acc.len() {
                            acc[idx as usize] += c * v;
                        }
                    }
                }
            }
            // exponents -pad .. order are now exact
            for (idx, v) in acc.iter().enumerate().take(pad + order) {
                let expo = idx as i64 - pad as i64;
                let expect = if expo == 0 && i == j {
                    super::rat(1)
                } else {
                    Rat::zero()
                };
                if *v != expect {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{qnum, rat, ratio};

    #[test]
    fn invert_unit_series() {
        // 1/(1 + z^2) = 1 - z^2 + z^4 - ...
        let s = TruncSeries::from_coeffs(6, vec![rat(1), rat(0), rat(1)]);
        let inv = s.invert_unit();
        assert_eq!(
            inv.coeffs(),
            &[rat(1), rat(0), rat(-1), rat(0), rat(1), rat(0)]
        );
        assert_eq!(&s * &inv, TruncSeries::one(6));
    }

    #[test]
    fn invert_with_rational_leading_coeff() {
        let s = TruncSeries::from_coeffs(4, vec![rat(2), rat(1)]);
        let inv = s.invert_unit();
        assert_eq!(inv.coeff(0), ratio(1, 2));
        assert_eq!(&s * &inv, TruncSeries::one(4));
    }

    #[test]
    fn a1_quantum_cartan_expansion() {
        // ([2]_z)^-1 = z - z^3 + z^5 - ... mod z^6
        let m = vec![vec![qnum(2, 1)]];
        let inv = series_matrix_inverse(&m, 6).unwrap();
        let v = &inv[0][0];
        assert_eq!(
            v.coeffs(),
            &[rat(0), rat(1), rat(0), rat(-1), rat(0), rat(1)]
        );
        assert!(series_residual_is_identity(&m, 6));
    }

    #[test]
    fn identity_matrix_inverts_to_identity() {
        let one = LaurentPoly::one();
        let zero = LaurentPoly::zero();
        let m = vec![vec![one.clone(), zero.clone()], vec![zero, one]];
        let inv = series_matrix_inverse(&m, 4).unwrap();
        assert_eq!(inv[0][0], TruncSeries::<Rat>::one(4));
        assert_eq!(inv[1][1], TruncSeries::<Rat>::one(4));
        assert!(inv[0][1].is_zero() && inv[1][0].is_zero());
    }

    #[test]
    fn singular_matrix_detected() {
        let one = LaurentPoly::one();
        let m = vec![vec![one.clone(), one.clone()], vec![one.clone(), one]];
        assert_eq!(
            series_matrix_inverse(&m, 4),
            Err(ExactError::SingularMatrix)
        );
    }
}
