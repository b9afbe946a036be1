//! Truncated check of the intertwining between the additive braid action
//! on the quantum-loop side and the modified braid operators on the
//! Yangian side, through the embedding of the loop-Cartan generators.
//!
//! Everything is expanded in the formal variable `v` with `q = e^{v/2}`,
//! exactly over the rationals, modulo `v^N`. The image of the normalized
//! mode-`r` generator is
//! `Phi(h_{i,r}) = [v / (q_i^r - q_i^{-r})] * Bt_i(r v / hbar)`,
//! where `Bt_i` is the Borel transform of the logarithmic series, a vector
//! in the span of the `t_{i,k}` with series coefficients.

use thiserror::Error;

use crate::cartan::CartanData;
use crate::exact::{rat, GlobalParams, Mat, Rat, TruncSeries};
use crate::hecke::{build_model, HeckeModel};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GtlError {
    #[error("truncation order {0} is too small")]
    TruncationTooSmall(usize),
}

/// Expansion context: truncation order `N`, the basis of the t-span up to
/// level `N - 1`, and the Yangian braid matrices acting on it.
#[derive(Debug, Clone)]
pub struct GTLContext {
    pub order: usize,
    hecke: HeckeModel,
}

/// A vector in the t-span whose coordinates are truncated v-series.
pub type TSpanSeries = Vec<TruncSeries<Rat>>;

impl GTLContext {
    pub fn new(cd: &CartanData, gp: &GlobalParams, order: usize) -> Result<Self, GtlError> {
        if order == 0 {
            return Err(GtlError::TruncationTooSmall(order));
        }
        Ok(GTLContext {
            order,
            hecke: build_model(cd, gp, order - 1),
        })
    }

    pub fn cd(&self) -> &CartanData {
        self.hecke.cd()
    }

    pub fn gp(&self) -> &GlobalParams {
        self.hecke.gp()
    }

    pub fn dim(&self) -> usize {
        self.hecke.dim()
    }

    /// `exp(c v)` as an exact truncated series.
    pub fn exp_series(&self, c: &Rat) -> TruncSeries<Rat> {
        let mut s = TruncSeries::zero(self.order);
        let mut term = rat(1);
        for k in 0..self.order {
            s.set_coeff(k, term.clone());
            term = term * c.clone() / rat(k as i64 + 1);
        }
        s
    }

    /// Expansion of `q^e = e^{e v / 2}`.
    pub fn q_power_series(&self, e: Rat) -> TruncSeries<Rat> {
        self.exp_series(&(e / rat(2)))
    }

    /// Expansion of `q^{a} - q^{-a}` divided by `v`; a unit series whenever
    /// `a != 0`.
    fn sinh_over_v(&self, a: Rat) -> TruncSeries<Rat> {
        // (e^{a v / 2} - e^{-a v / 2}) / v = a/1! (1/2)^1 + a^3 (v^2/3!) (1/2)^3 + ...
        let mut s = TruncSeries::zero(self.order);
        let half_a = a / rat(2);
        let mut pow = half_a.clone();
        let mut fact = rat(1);
        let mut k = 1i64;
        loop {
            let idx = (k - 1) as usize;
            if idx >= self.order {
                break;
            }
            s.set_coeff(idx, pow.clone() * rat(2) / fact.clone());
            pow = pow * half_a.clone() * half_a.clone();
            fact = fact * rat(k + 1) * rat(k + 2);
            k += 2;
        }
        s
    }
}

/// The image of the normalized mode-`r` generator at node `i`, as a t-span
/// vector of truncated v-series: the scalar prefactor
/// `v / (q_i^r - q_i^{-r})` times the Borel series
/// `hbar sum_k t_{i,k} (r v / hbar)^k / k!`.
pub fn gtl_phi(ctx: &GTLContext, i: usize, r: i64) -> Result<TSpanSeries, GtlError> {
    assert!(r != 0, "mode r must be nonzero");
    if ctx.order < 1 {
        return Err(GtlError::TruncationTooSmall(ctx.order));
    }
    let cd = ctx.cd();
    let gp = ctx.gp();
    let prefactor = ctx.sinh_over_v(rat(r * cd.d(i))).invert_unit();
    let mut out = vec![TruncSeries::zero(ctx.order); ctx.dim()];
    let level = ctx.order - 1;
    // Borel term k: hbar (r/hbar)^k v^k / k! on basis vector t_{i,k}
    let mut coeff = gp.hbar().clone();
    for k in 0..=level {
        let mut term = TruncSeries::zero(ctx.order);
        if k < ctx.order {
            term.set_coeff(k, coeff.clone());
        }
        out[ctx.hecke.basis_index(i, k)] = &prefactor * &term;
        coeff = coeff * rat(r) / (gp.hbar().clone() * rat(k as i64 + 1));
    }
    Ok(out)
}

/// Apply a matrix over the rationals to a t-span vector of series.
fn apply_matrix(m: &Mat<Rat>, x: &TSpanSeries) -> TSpanSeries {
    let order = x[0].order();
    let mut out = vec![TruncSeries::zero(order); x.len()];
    for (col, series) in x.iter().enumerate() {
        if series.is_zero() {
            continue;
        }
        for (row, slot) in out.iter_mut().enumerate() {
            let c = m.at(row, col);
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            *slot = &*slot + &series.scale(c);
        }
    }
    out
}

/// Verify, modulo `v^N`, that the Yangian braid operator at node `j`
/// intertwines the embedded mode-`r` generators:
/// `Tau_j Phi(h_{i,r}) = Phi(h_{i,r}) - S(v) Phi(h_{j,r})` with the scalar
/// series `S(v) = q_j^r [r a_ij]_{q_i} / [r]_{q_i}` expanded at `q = e^{v/2}`.
pub fn gtl_intertwine_check(
    ctx: &GTLContext,
    i: usize,
    j: usize,
    r: i64,
) -> Result<bool, GtlError> {
    let cd = ctx.cd();
    let phi_i = gtl_phi(ctx, i, r)?;
    let lhs = apply_matrix(ctx.hecke.tau(j), &phi_i);
    // S(v) = q_j^r (q_i^{r a_ij} - q_i^{-r a_ij}) / (q_i^r - q_i^{-r})
    let scalar = if cd.a(i, j) == 0 {
        TruncSeries::zero(ctx.order)
    } else {
        let num = ctx.sinh_over_v(rat(r * cd.d(i) * cd.a(i, j)));
        let den = ctx.sinh_over_v(rat(r * cd.d(i)));
        let ratio_series = &num * &den.invert_unit();
        &ctx.q_power_series(rat(r * cd.d(j))) * &ratio_series
    };
    let phi_j = gtl_phi(ctx, j, r)?;
    let mut rhs = phi_i.clone();
    for (slot, pj) in rhs.iter_mut().zip(&phi_j) {
        *slot = &*slot - &(&scalar * pj);
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::cartan_data;
    use crate::exact::ratio;

    fn ctx(ty: &str, order: usize) -> GTLContext {
        let cd = cartan_data(ty.parse().unwrap()).unwrap();
        GTLContext::new(&cd, &GlobalParams::default(), order).unwrap()
    }

    #[test]
    fn phi_leading_coefficient() {
        // Phi(h_{i,r}) = (1/(r d_i)) hbar t_{i,0} + O(v)
        let c = ctx("B2", 5);
        for (i, r) in [(1usize, 1i64), (1, 2), (2, 1), (2, -3)] {
            let phi = gtl_phi(&c, i, r).unwrap();
            let idx = c.hecke.basis_index(i, 0);
            assert_eq!(
                phi[idx].coeff(0),
                ratio(1, r * c.cd().d(i)),
                "i = {}, r = {}",
                i,
                r
            );
            // no other basis line carries a constant term
            for (k, s) in phi.iter().enumerate() {
                if k != idx {
                    assert_eq!(s.coeff(0), rat(0));
                }
            }
        }
    }

    #[test]
    fn phi_parity_in_r() {
        // negating r flips the prefactor sign and the Borel argument sign
        // consistently: the v^s coefficient picks up (-1)^{s+1}
        let c = ctx("A1", 6);
        let plus = gtl_phi(&c, 1, 2).unwrap();
        let minus = gtl_phi(&c, 1, -2).unwrap();
        for idx in 0..c.dim() {
            for s in 0..6 {
                let flip = if s % 2 == 0 { rat(-1) } else { rat(1) };
                assert_eq!(minus[idx].coeff(s), plus[idx].coeff(s) * flip);
            }
        }
    }

    #[test]
    fn truncation_one_keeps_only_leading_term() {
        let c = ctx("A1", 1);
        let phi = gtl_phi(&c, 1, 5).unwrap();
        assert_eq!(phi[0].coeff(0), ratio(1, 5));
        assert_eq!(phi.len(), 1);
    }

    #[test]
    fn a1_intertwining_collapses_to_scalar() {
        // for i = j on A1 the right side collapses to -q^{2r} Phi(h_{1,r})
        let c = ctx("A1", 6);
        assert!(gtl_intertwine_check(&c, 1, 1, 1).unwrap());
        assert!(gtl_intertwine_check(&c, 1, 1, 2).unwrap());
        assert!(gtl_intertwine_check(&c, 1, 1, -1).unwrap());
    }

    #[test]
    fn a2_and_b2_intertwining() {
        for ty in ["A2", "B2"] {
            let c = ctx(ty, 6);
            for i in 1..=2 {
                for j in 1..=2 {
                    for r in [1i64, 2, -1, -2] {
                        assert!(
                            gtl_intertwine_check(&c, i, j, r).unwrap(),
                            "{} (i, j, r) = ({}, {}, {})",
                            ty,
                            i,
                            j,
                            r
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn triple_bond_intertwining() {
        // a_12 = -3 exercises the longest factor chain
        let c = ctx("G2", 6);
        for i in 1..=2 {
            for j in 1..=2 {
                for r in [1i64, -1, 2] {
                    assert!(gtl_intertwine_check(&c, i, j, r).unwrap());
                }
            }
        }
    }

    #[test]
    fn monotone_in_truncation_order() {
        for order in [2usize, 4, 6, 8] {
            let c = ctx("B2", order);
            assert!(
                gtl_intertwine_check(&c, 1, 2, 1).unwrap(),
                "order {}",
                order
            );
        }
    }

    #[test]
    fn zero_order_rejected() {
        let cd = cartan_data("A1".parse().unwrap()).unwrap();
        assert!(matches!(
            GTLContext::new(&cd, &GlobalParams::default(), 0),
            Err(GtlError::TruncationTooSmall(0))
        ));
    }
}
