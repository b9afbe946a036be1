//! Small dense matrices over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::Field;

/// A dense row-major matrix. Sizes here are tiny (at most a few dozen), so
/// everything is plain cubic-time arithmetic over the exact coefficient
/// field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Mat<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[T] {
        &self.data
    }
}

impl<T: Field> Mat<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: T) {
        let slot = &mut self.data[r * self.cols + c];
        *slot = slot.clone() + v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Index of the first nonzero entry, if any. Used for witnesses.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|v| !v.is_zero())
            .map(|k| (k / self.cols, k % self.cols))
    }

    /// Exact inverse by Gauss-Jordan elimination. Returns `None` when
    /// singular.
    pub fn inverse(&self) -> Option<Mat<T>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::<T>::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.at(r, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a.at(col, col).clone();
            for j in 0..n {
                a.set(col, j, a.at(col, j).clone() / p.clone());
                inv.set(col, j, inv.at(col, j).clone() / p.clone());
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for j in 0..n {
                    let t = factor.clone() * a.at(col, j).clone();
                    a.set(r, j, a.at(r, j).clone() - t);
                    let t = factor.clone() * inv.at(col, j).clone();
                    inv.set(r, j, inv.at(r, j).clone() - t);
                }
            }
        }
        Some(inv)
    }

    /// Integer power; negative exponents go through the exact inverse.
    pub fn pow(&self, e: i64) -> Mat<T> {
        assert_eq!(self.rows, self.cols);
        let base = if e < 0 {
            self.inverse().expect("matrix power of a singular matrix")
        } else {
            self.clone()
        };
        let mut out = Mat::identity(self.rows);
        for _ in 0..e.unsigned_abs() {
            out = &out * &base;
        }
        out
    }
}

impl<T: Field> Add for &Mat<T> {
    type Output = Mat<T>;
    fn add(self, rhs: &Mat<T>) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Field> Sub for &Mat<T> {
    type Output = Mat<T>;
    fn sub(self, rhs: &Mat<T>) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: Field> Mul for &Mat<T> {
    type Output = Mat<T>;
    fn mul(self, rhs: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, rhs.rows, "matrix dimension mismatch");
        let mut out = Mat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.add_to(i, j, a.clone() * b.clone());
                }
            }
        }
        out
    }
}

impl<T: fmt::Display> fmt::Display for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, Rat};

    #[test]
    fn inverse_of_unipotent() {
        let mut m: Mat<Rat> = Mat::identity(3);
        m.set(1, 0, rat(5));
        m.set(2, 1, rat(-2));
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Mat::identity(3));
        assert_eq!(m.pow(-1), inv);
        assert_eq!(m.pow(0), Mat::identity(3));
    }

    #[test]
    fn singular_detected() {
        let mut m: Mat<Rat> = Mat::zero(2, 2);
        m.set(0, 0, rat(1));
        m.set(0, 1, rat(2));
        m.set(1, 0, rat(2));
        m.set(1, 1, rat(4));
        assert!(m.inverse().is_none());
    }
}
