//! Finite-dimensional exact matrix model of the span of logarithmic
//! coefficients, the shift operator, the modified braid operators, and
//! verification of the Iwahori-Hecke relations.
//!
//! The space is spanned by basis symbols `t_{j,k}` for nodes `j` and levels
//! `0 <= k <= r`, ordered node-major. The shift operator `Z` realizes the
//! substitution `u -> u + hbar/2` on the generating series, the operators
//! `Tau_i` realize the modified braid generators, and `T_i = Z^{d_i} Tau_i`
//! satisfy the Hecke relations with parameter `z_i = z^{d_i}`.

use crate::cartan::CartanData;
use crate::exact::{rat, GlobalParams, Mat, Rat};

/// Exact matrices for the shift operator, the modified braid operators,
/// and the Hecke generators on the span of `t_{j,k}`.
#[derive(Debug, Clone)]
pub struct HeckeModel {
    cd: CartanData,
    gp: GlobalParams,
    r: usize,
    dim: usize,
    z: Mat<Rat>,
    z_inv: Mat<Rat>,
    tau: Vec<Mat<Rat>>,
    t: Vec<Mat<Rat>>,
}

/// Outcome of the exact relation checks, with a witness for the first
/// failure: `(relation, i, j, basis column)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeReport {
    pub braid_ok: bool,
    pub quadratic_ok: bool,
    pub commute_ok: bool,
    pub witness: Option<(String, usize, usize, usize)>,
}

impl HeckeReport {
    pub fn all_ok(&self) -> bool {
        self.braid_ok && self.quadratic_ok && self.commute_ok
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let mut out = 1i64;
    for s in 0..k.min(n - k) {
        out = out * (n - s) as i64 / (s + 1) as i64;
    }
    out
}

/// The matrix of the shift `t_j(u) -> t_j(u + m hbar / 2)` on the basis:
/// `t_{j,k} -> sum_{s<=k} binom(k, s) (-m hbar / 2)^{k-s} t_{j,s}`.
fn shift_power_matrix(n: usize, r: usize, hbar: &Rat, m: i64) -> Mat<Rat> {
    let dim = n * (r + 1);
    let mut z = Mat::zero(dim, dim);
    let c = -(hbar.clone() * rat(m)) / rat(2);
    for j in 0..n {
        for k in 0..=r {
            for s in 0..=k {
                let mut coeff = rat(binomial(k, s));
                for _ in 0..(k - s) {
                    coeff *= c.clone();
                }
                z.set(j * (r + 1) + s, j * (r + 1) + k, coeff);
            }
        }
    }
    z
}

impl HeckeModel {
    pub fn cd(&self) -> &CartanData {
        &self.cd
    }

    pub fn gp(&self) -> &GlobalParams {
        &self.gp
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Basis index of `t_{j,k}` (node-major, 1-based node).
    pub fn basis_index(&self, j: usize, k: usize) -> usize {
        (j - 1) * (self.r + 1) + k
    }

    /// Basis label `(j, k)` of a flat index.
    pub fn basis_label(&self, idx: usize) -> (usize, usize) {
        (idx / (self.r + 1) + 1, idx % (self.r + 1))
    }

    pub fn z(&self) -> &Mat<Rat> {
        &self.z
    }

    pub fn z_inv(&self) -> &Mat<Rat> {
        &self.z_inv
    }

    /// `Z^m` for any integer `m`, computed directly from the shift formula.
    pub fn z_power(&self, m: i64) -> Mat<Rat> {
        shift_power_matrix(self.cd.n(), self.r, self.gp.hbar(), m)
    }

    /// The modified braid operator at node `i` (1-based).
    pub fn tau(&self, i: usize) -> &Mat<Rat> {
        &self.tau[i - 1]
    }

    /// The Hecke generator `T_i = Z^{d_i} Tau_i` (1-based).
    pub fn t(&self, i: usize) -> &Mat<Rat> {
        &self.t[i - 1]
    }
}

/// Build the exact matrix model at truncation level `r`.
///
/// `Tau_i` sends `t_{j,k}` to
/// `t_{j,k} + (-1)^{delta_ij} sum_{l=0}^{|a_ij|-1} Z^{-d_i(|a_ij|-2l)} t_{i,k}`,
/// the Laurent-operator expansion of the z-number `-z^{-d_i}[a_ij]_{z^{d_i}}`.
pub fn build_model(cd: &CartanData, gp: &GlobalParams, r: usize) -> HeckeModel {
    let n = cd.n();
    let dim = n * (r + 1);
    let z = shift_power_matrix(n, r, gp.hbar(), 1);
    let z_inv = shift_power_matrix(n, r, gp.hbar(), -1);
    let mut tau = Vec::with_capacity(n);
    for i in 1..=n {
        let mut m = Mat::identity(dim);
        for j in 1..=n {
            let a = cd.a(i, j).abs();
            let sign = if i == j { rat(-1) } else { rat(1) };
            for l in 0..a {
                let zp = shift_power_matrix(n, r, gp.hbar(), -cd.d(i) * (a - 2 * l));
                // column of t_{i,k} inside Z^p lands in rows t_{i,s}
                for k in 0..=r {
                    let col = (j - 1) * (r + 1) + k;
                    let src = (i - 1) * (r + 1) + k;
                    for s in 0..=r {
                        let row = (i - 1) * (r + 1) + s;
                        let add = sign.clone() * zp.at((i - 1) * (r + 1) + s, src).clone();
                        if !num_traits::Zero::is_zero(&add) {
                            m.add_to(row, col, add);
                        }
                    }
                }
            }
        }
        tau.push(m);
    }
    let t = (1..=n)
        .map(|i| &shift_power_matrix(n, r, gp.hbar(), cd.d(i)) * &tau[i - 1])
        .collect();
    HeckeModel {
        cd: cd.clone(),
        gp: gp.clone(),
        r,
        dim,
        z,
        z_inv,
        tau,
        t,
    }
}

/// Alternating product `M_i M_j M_i ...` with `len` factors.
fn alternating(mats: &[Mat<Rat>], i: usize, j: usize, len: i64) -> Mat<Rat> {
    let dim = mats[0].rows();
    let mut out = Mat::identity(dim);
    for k in 0..len {
        let pick = if k % 2 == 0 { i } else { j };
        out = &out * &mats[pick - 1];
    }
    out
}

/// Check, as exact matrix identities: the braid relations for the `Tau_i`
/// and for the `T_i`, the quadratic relations
/// `Tau_i^2 + (Z^{-2 d_i} - Id) Tau_i = Z^{-2 d_i}`, and `[Tau_i, Z] = 0`.
/// Failures are reported with a witness, never raised.
pub fn verify_hecke(model: &HeckeModel) -> HeckeReport {
    let cd = &model.cd;
    let n = cd.n();
    let id = Mat::identity(model.dim);
    let mut report = HeckeReport {
        braid_ok: true,
        quadratic_ok: true,
        commute_ok: true,
        witness: None,
    };
    let witness = |report_field: &mut bool,
                   witness_slot: &mut Option<(String, usize, usize, usize)>,
                   name: &str,
                   i: usize,
                   j: usize,
                   diff: &Mat<Rat>| {
        if !diff.is_zero() {
            *report_field = false;
            if witness_slot.is_none() {
                let (_, col) = diff.first_nonzero().unwrap();
                *witness_slot = Some((name.to_string(), i, j, col));
            }
        }
    };
    for i in 1..=n {
        for j in (i + 1)..=n {
            let m = cd.m(i, j);
            let lhs = alternating(&model.tau, i, j, m);
            let rhs = alternating(&model.tau, j, i, m);
            witness(
                &mut report.braid_ok,
                &mut report.witness,
                "braid-tau",
                i,
                j,
                &(&lhs - &rhs),
            );
            let lhs = alternating(&model.t, i, j, m);
            let rhs = alternating(&model.t, j, i, m);
            witness(
                &mut report.braid_ok,
                &mut report.witness,
                "braid-t",
                i,
                j,
                &(&lhs - &rhs),
            );
        }
    }
    for i in 1..=n {
        let z2 = model.z_power(-2 * cd.d(i));
        let tau = model.tau(i);
        let tau_sq = tau * tau;
        let lhs = &(&tau_sq + &(&(&z2 - &id) * tau)) - &z2;
        witness(
            &mut report.quadratic_ok,
            &mut report.witness,
            "quadratic",
            i,
            i,
            &lhs,
        );
        let comm = &(tau * &model.z) - &(&model.z * tau);
        witness(
            &mut report.commute_ok,
            &mut report.witness,
            "commute",
            i,
            i,
            &comm,
        );
    }
    report
}

/// Verify that every generator matrix preserves the span of the basis
/// vectors `t_{j,k}` with `k <= r_sub`.
pub fn submodule_check(model: &HeckeModel, r_sub: usize) -> bool {
    assert!(r_sub <= model.r);
    let mut gens: Vec<&Mat<Rat>> = vec![&model.z, &model.z_inv];
    gens.extend(model.tau.iter());
    gens.extend(model.t.iter());
    for g in gens {
        for col_idx in 0..model.dim {
            let (_, k) = model.basis_label(col_idx);
            if k > r_sub {
                continue;
            }
            for row_idx in 0..model.dim {
                let (_, kr) = model.basis_label(row_idx);
                if kr > r_sub && !num_traits::Zero::is_zero(g.at(row_idx, col_idx)) {
                    return false;
                }
            }
        }
    }
    true
}
