//! The dominance order on bipartitions, the reverse-lexicographic order
//! that refines it, bipartition enumeration, and the restrictedness test.

use serde::{Deserialize, Serialize};

use crate::bipartition::Bipartition;
use crate::error::Result;
use crate::fock::{classical_word_apply, residue_sequences};
use crate::partition::{partitions_of, Params};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    Equal,
    DominatedBy,
    Dominates,
    Incomparable,
}

/// Outcome of a dominance comparison; `witness` is the first prefix length
/// at which the interleaved prefix sums differ (absent only for `Equal`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderVerdict {
    pub relation: Relation,
    pub witness: Option<usize>,
}

/// The interleaved prefix sums compared by the dominance order: the first
/// `j` parts of the first component, and `|first|` plus the first `j` parts
/// of the second.
fn prefix_profile(bp: &Bipartition, len: usize) -> Vec<u32> {
    let mut profile = Vec::with_capacity(2 * len);
    let mut sum = 0;
    for j in 0..len {
        sum += bp.first().part(j);
        profile.push(sum);
    }
    let mut sum = bp.first().rank();
    for j in 0..len {
        sum += bp.second().part(j);
        profile.push(sum);
    }
    profile
}

/// Dominance comparison of `mu` against `lambda`.
pub fn dominance_verdict(mu: &Bipartition, lambda: &Bipartition) -> OrderVerdict {
    let len = [
        mu.first().len(),
        mu.second().len(),
        lambda.first().len(),
        lambda.second().len(),
    ]
    .into_iter()
    .max()
    .unwrap_or(0)
        + 1;
    let mu_profile = prefix_profile(mu, len);
    let lambda_profile = prefix_profile(lambda, len);
    let mut mu_below = true;
    let mut lambda_below = true;
    let mut witness = None;
    for (j, (&a, &b)) in mu_profile.iter().zip(&lambda_profile).enumerate() {
        if a != b && witness.is_none() {
            witness = Some(j);
        }
        if a > b {
            mu_below = false;
        }
        if b > a {
            lambda_below = false;
        }
    }
    let relation = match (mu_below, lambda_below) {
        (true, true) => Relation::Equal,
        (true, false) => Relation::DominatedBy,
        (false, true) => Relation::Dominates,
        (false, false) => Relation::Incomparable,
    };
    OrderVerdict { relation, witness }
}

/// `mu` is dominated by `lambda` (weakly).
pub fn dominance_leq(mu: &Bipartition, lambda: &Bipartition) -> bool {
    matches!(
        dominance_verdict(mu, lambda).relation,
        Relation::Equal | Relation::DominatedBy
    )
}

/// `mu` is strictly dominated by `lambda`.
pub fn dominance_lt(mu: &Bipartition, lambda: &Bipartition) -> bool {
    dominance_verdict(mu, lambda).relation == Relation::DominatedBy
}

/// The reverse-lexicographic order: compare second components at the
/// largest index where they differ (zero-padded), then first components.
pub fn prec(lambda: &Bipartition, nu: &Bipartition) -> bool {
    for (a, b) in [(lambda.second(), nu.second()), (lambda.first(), nu.first())] {
        let len = a.len().max(b.len());
        for j in (0..len).rev() {
            if a.part(j) != b.part(j) {
                return a.part(j) < b.part(j);
            }
        }
    }
    false
}

/// All bipartitions of rank `n`, each exactly once, in a fixed order:
/// ascending rank of the first component, then the partition enumeration
/// order on each side.
pub fn enumerate_bipartitions(n: u32) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for k in 0..=n {
        for first in partitions_of(k) {
            for second in partitions_of(n - k) {
                out.push(Bipartition::new(first.clone(), second));
            }
        }
    }
    out
}

/// Restrictedness via one classical operator pass per candidate residue
/// sequence: some residue sequence of the shape must be realized by no
/// strictly dominated shape of the same rank.
pub fn is_restricted(bp: &Bipartition, params: Params) -> Result<bool> {
    for word in residue_sequences(bp, params) {
        let vector = classical_word_apply(&word, params)?;
        let clean = vector
            .iter()
            .all(|(nu, &coeff)| coeff == 0 || !dominance_lt(nu, bp));
        if clean {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Direct tableau-set restrictedness oracle: enumerates the residue
/// sequences of every strictly dominated shape and looks for one the
/// dominated shapes miss.  Independent of the Fock-space route.
pub fn is_restricted_tableau_oracle(bp: &Bipartition, params: Params) -> bool {
    let own = residue_sequences(bp, params);
    let dominated: Vec<Bipartition> = enumerate_bipartitions(bp.rank())
        .into_iter()
        .filter(|nu| dominance_lt(nu, bp))
        .collect();
    own.iter().any(|word| {
        dominated
            .iter()
            .all(|nu| !residue_sequences(nu, params).contains(word))
    })
}
