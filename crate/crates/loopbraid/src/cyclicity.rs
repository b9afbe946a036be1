//! Sufficient conditions for cyclicity and irreducibility of tensor
//! products of irreducible modules, and verification of their equivalence.
//!
//! Two conditions are evaluated for a pair of Drinfeld tuples `(P, Q)`:
//! - pole route: for every node `i`, the zeros of `Q_i(u + hbar d_i)` miss
//!   the `i`-th pole set of `L(P)`;
//! - braid route: for every position `r` of a reduced word for the longest
//!   element, the zeros of `Q_{j_r}(u + hbar d_{j_r})` miss the zeros of
//!   the suffix orbit component at `r`.
//!
//! The two conditions are equivalent; evaluating both and comparing is a
//! built-in self-check.

use thiserror::Error;

use crate::baxter::{is_longest_element_word, pole_set, suffix_factors, QCartanInverse};
use crate::braid::DrinfeldTuple;
use crate::cartan::{longest_word, CartanData, WeylWord};
use crate::exact::{rat, GlobalParams, Rat};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CyclicityError {
    #[error("word is not a reduced expression of the longest element")]
    NotLongestElement,
    #[error("pole and braid cyclicity conditions disagree (internal error): {0}")]
    EquivalenceViolation(String),
}

/// A common root hit by the pole condition: node, and the offending point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoleWitness {
    pub node: usize,
    pub point: Rat,
}

/// A common root hit by the braid condition: word position, node `j_r`,
/// and the offending point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWitness {
    pub position: usize,
    pub node: usize,
    pub point: Rat,
}

/// Joint verdict of both sufficient conditions.
///
/// `condition_poles` and `condition_braid` always agree; `cyclic_sufficient`
/// repeats their common value, and `irreducible_sufficient` holds when the
/// pole condition holds in both tensor orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicityVerdict {
    pub condition_poles: bool,
    pub condition_braid: bool,
    pub cyclic_sufficient: bool,
    pub irreducible_sufficient: bool,
    pub pole_witnesses: Vec<PoleWitness>,
    pub braid_witnesses: Vec<BraidWitness>,
    /// Pole witnesses of the reversed pair, populated for the
    /// irreducibility check.
    pub reversed_pole_witnesses: Vec<PoleWitness>,
}

/// Pole-route condition: true when for every node `i` the set
/// `zeros(Q_i) - hbar d_i` misses `sigma_i(L(P))`. Returns the verdict and
/// every violation.
pub fn condition_poles(
    cd: &CartanData,
    gp: &GlobalParams,
    qci: &QCartanInverse,
    p: &DrinfeldTuple,
    q: &DrinfeldTuple,
) -> (bool, Vec<PoleWitness>) {
    let mut witnesses = Vec::new();
    for i in 1..=cd.n() {
        let poles = pole_set(qci, gp, p, i);
        let shift = gp.hbar().clone() * rat(cd.d(i));
        for z in q.component(i).zeros() {
            let shifted = z - shift.clone();
            if poles.contains(&shifted) {
                witnesses.push(PoleWitness {
                    node: i,
                    point: shifted,
                });
            }
        }
    }
    (witnesses.is_empty(), witnesses)
}

/// Braid-route condition along a reduced word for the longest element.
///
/// The result does not depend on which reduced word is supplied.
pub fn condition_braid(
    cd: &CartanData,
    gp: &GlobalParams,
    p: &DrinfeldTuple,
    q: &DrinfeldTuple,
    w0_word: &WeylWord,
) -> Result<(bool, Vec<BraidWitness>), CyclicityError> {
    if !is_longest_element_word(cd, w0_word) {
        return Err(CyclicityError::NotLongestElement);
    }
    let mut witnesses = Vec::new();
    for (r, jr, factor) in suffix_factors(cd, gp, p, w0_word) {
        let zeros: std::collections::BTreeSet<Rat> = factor.zeros().into_iter().collect();
        let shift = gp.hbar().clone() * rat(cd.d(jr));
        for z in q.component(jr).zeros() {
            let shifted = z - shift.clone();
            if zeros.contains(&shifted) {
                witnesses.push(BraidWitness {
                    position: r,
                    node: jr,
                    point: shifted,
                });
            }
        }
    }
    Ok((witnesses.is_empty(), witnesses))
}

/// Evaluate both conditions (the braid route at the canonical longest
/// word), assert their equivalence, and assemble the verdict.
pub fn verdict(
    cd: &CartanData,
    gp: &GlobalParams,
    qci: &QCartanInverse,
    p: &DrinfeldTuple,
    q: &DrinfeldTuple,
) -> Result<CyclicityVerdict, CyclicityError> {
    let (w0, _) = longest_word(cd).map_err(|_| CyclicityError::NotLongestElement)?;
    let (cp, pole_witnesses) = condition_poles(cd, gp, qci, p, q);
    let (cb, braid_witnesses) = condition_braid(cd, gp, p, q, &w0)?;
    if cp != cb {
        return Err(CyclicityError::EquivalenceViolation(format!(
            "poles = {}, braid = {} for P = {}, Q = {}",
            cp,
            cb,
            p.as_monic(),
            q.as_monic()
        )));
    }
    let (cp_rev, reversed_pole_witnesses) = condition_poles(cd, gp, qci, q, p);
    Ok(CyclicityVerdict {
        condition_poles: cp,
        condition_braid: cb,
        cyclic_sufficient: cp,
        irreducible_sufficient: cp && cp_rev,
        pole_witnesses,
        braid_witnesses,
        reversed_pole_witnesses,
    })
}
