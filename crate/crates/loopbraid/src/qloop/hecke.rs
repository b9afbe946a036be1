//! Hecke-algebra matrices over `Q(q)` acting on the span of the loop-Cartan
//! generators in a fixed mode `r`.
//!
//! The generators act by `T_j(h_i) = q_j^{-r} h_i - [a_ij]_{q_i^r} h_j`,
//! the central parameter `z` acts by the scalar `q^{-r}`, and
//! `z_i = z^{d_i}`. The scalar action of `z` is what the Yangian shift
//! operator becomes in mode `r`, and is forced by `T_j = z^{d_j}` composed
//! with the additive braid generator.

use crate::cartan::CartanData;
use crate::exact::Mat;

use super::qfield::QField;

/// Exact `n x n` matrices for the Hecke generators in mode `r`.
#[derive(Debug, Clone)]
pub struct QHeckeModel {
    cd: CartanData,
    pub r: i64,
    t: Vec<Mat<QField>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QHeckeReport {
    pub braid_ok: bool,
    pub quadratic_ok: bool,
    /// `(relation, i, j)` of the first failure.
    pub witness: Option<(String, usize, usize)>,
}

impl QHeckeReport {
    pub fn all_ok(&self) -> bool {
        self.braid_ok && self.quadratic_ok
    }
}

impl QHeckeModel {
    pub fn cd(&self) -> &CartanData {
        &self.cd
    }

    /// The generator matrix `T_j`, 1-based.
    pub fn t(&self, j: usize) -> &Mat<QField> {
        &self.t[j - 1]
    }

    /// The scalar by which `z^k` acts in mode `r`.
    pub fn z_scalar(&self, k: i64) -> QField {
        QField::q_pow(-self.r * k)
    }
}

/// Build the mode-`r` Hecke matrices. Panics when `r = 0` (the mode must
/// be a nonzero integer).
pub fn q_hecke_model(cd: &CartanData, r: i64) -> QHeckeModel {
    assert!(r != 0, "mode r must be nonzero");
    let n = cd.n();
    let mut t = Vec::with_capacity(n);
    for j in 1..=n {
        let mut m = Mat::zero(n, n);
        for i in 1..=n {
            // column i: image of h_i
            m.add_to(i - 1, i - 1, QField::q_pow(-r * cd.d(j)));
            let coef = QField::qnum_at(cd.a(i, j), cd.d(i) * r);
            m.add_to(j - 1, i - 1, -coef);
        }
        t.push(m);
    }
    QHeckeModel {
        cd: cd.clone(),
        r,
        t,
    }
}

/// Check the braid relations and the quadratic relations
/// `(T_i - z_i)(T_i + z_i^{-1}) = 0` with `z_i = z^{d_i}` acting by the
/// scalar `q^{-r d_i}`.
pub fn q_verify(model: &QHeckeModel) -> QHeckeReport {
    let cd = &model.cd;
    let n = cd.n();
    let id: Mat<QField> = Mat::identity(n);
    let mut report = QHeckeReport {
        braid_ok: true,
        quadratic_ok: true,
        witness: None,
    };
    for i in 1..=n {
        for j in (i + 1)..=n {
            let m = cd.m(i, j);
            let mut lhs = Mat::identity(n);
            let mut rhs = Mat::identity(n);
            for k in 0..m {
                lhs = &lhs * model.t(if k % 2 == 0 { i } else { j });
                rhs = &rhs * model.t(if k % 2 == 0 { j } else { i });
            }
            if lhs != rhs {
                report.braid_ok = false;
                if report.witness.is_none() {
                    report.witness = Some(("braid".into(), i, j));
                }
            }
        }
    }
    for i in 1..=n {
        let zi = model.z_scalar(cd.d(i));
        let scale = |m: &Mat<QField>, c: &QField| -> Mat<QField> {
            let mut out = m.clone();
            for r in 0..n {
                for s in 0..n {
                    out.set(r, s, m.at(r, s).clone() * c.clone());
                }
            }
            out
        };
        let a = &model.t(i).clone() - &scale(&id, &zi);
        let b = &model.t(i).clone() + &scale(&id, &zi.inv());
        if !(&a * &b).is_zero() {
            report.quadratic_ok = false;
            if report.witness.is_none() {
                report.witness = Some(("quadratic".into(), i, i));
            }
        }
    }
    report
}
