//! The level-two deformed Fock space: vectors supported on bipartitions
//! with Laurent-polynomial coefficients, the operators `f_i` and their
//! divided powers, the triangular expansion of a Kleshchev bipartition, and
//! the tableau-count specialization at `v = 1`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde_json::json;

use crate::bipartition::{Bipartition, Node};
use crate::error::{Error, Result};
use crate::laurent::{quantum_factorial, LaurentPoly};
use crate::order::prec;
use crate::partition::Params;
use crate::sequences::optimal_sequence;

/// Which side of a node the addable/removable counts are taken on when
/// forming the deformation exponent.  `CountBelow` is the production
/// convention; `CountAbove` exists so the acceptance checks can reject it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Convention {
    #[default]
    CountBelow,
    CountAbove,
}

/// A finitely supported vector over the bipartition basis.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FockVector {
    terms: BTreeMap<Bipartition, LaurentPoly>,
}

impl FockVector {
    pub fn zero() -> Self {
        FockVector::default()
    }

    pub fn basis(bp: Bipartition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(bp, LaurentPoly::one());
        FockVector { terms }
    }

    pub fn coefficient(&self, bp: &Bipartition) -> LaurentPoly {
        self.terms.get(bp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Bipartition, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    fn accumulate(&mut self, bp: Bipartition, delta: &LaurentPoly) -> Result<()> {
        let entry = self.terms.entry(bp).or_default();
        *entry = entry.add(delta)?;
        Ok(())
    }

    fn normalized(mut self) -> Self {
        self.terms.retain(|_, poly| !poly.is_zero());
        self
    }

    /// `[{"bipartition":"a|b","coeff":{"-1":1,"1":2}}, ...]` with
    /// exponent-keyed coefficient maps.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(bp, poly)| {
                let coeff: serde_json::Map<String, serde_json::Value> = poly
                    .terms()
                    .map(|(exp, c)| (exp.to_string(), json!(c)))
                    .collect();
                json!({ "bipartition": bp.to_string(), "coeff": coeff })
            })
            .collect();
        json!(entries)
    }
}

/// Deformation exponent of an addable `i`-node: addable minus removable
/// `i`-node count, taken strictly below (or strictly above) the node.
fn exponent(gamma: Node, addable: &[Node], removable: &[Node], convention: Convention) -> i64 {
    let counts = |nodes: &[Node]| -> i64 {
        nodes
            .iter()
            .filter(|node| match convention {
                Convention::CountBelow => gamma.is_above(node),
                Convention::CountAbove => node.is_above(&gamma),
            })
            .count() as i64
    };
    counts(addable) - counts(removable)
}

/// The deformed operator `f_i`, extended linearly.
pub fn f_apply_with(
    i: u32,
    w: &FockVector,
    params: Params,
    convention: Convention,
) -> Result<FockVector> {
    let mut out = FockVector::zero();
    for (bp, coeff) in w.terms() {
        let addable = bp.addable_nodes(i, params);
        let removable = bp.removable_nodes(i, params);
        for &gamma in &addable {
            let exp = exponent(gamma, &addable, &removable, convention);
            let scaled = coeff.mul_monomial(exp, 1)?;
            out.accumulate(bp.add_node(gamma), &scaled)?;
        }
    }
    Ok(out.normalized())
}

pub fn f_apply(i: u32, w: &FockVector, params: Params) -> Result<FockVector> {
    f_apply_with(i, w, params, Convention::CountBelow)
}

/// The divided power `f_i^(a)`: apply `f_i` `a` times and divide every
/// coefficient exactly by `[a]!`.  Inexact division signals a wrong
/// exponent convention or an arithmetic bug.
pub fn f_divided_apply_with(
    i: u32,
    a: u32,
    w: &FockVector,
    params: Params,
    convention: Convention,
) -> Result<FockVector> {
    let mut current = w.clone();
    for _ in 0..a {
        current = f_apply_with(i, &current, params, convention)?;
    }
    if a < 2 {
        return Ok(current);
    }
    let factorial = quantum_factorial(a)?;
    let mut out = FockVector::zero();
    for (bp, coeff) in current.terms() {
        out.accumulate(bp.clone(), &coeff.exact_divide(&factorial)?)?;
    }
    Ok(out.normalized())
}

pub fn f_divided_apply(i: u32, a: u32, w: &FockVector, params: Params) -> Result<FockVector> {
    f_divided_apply_with(i, a, w, params, Convention::CountBelow)
}

/// Expands a Kleshchev bipartition through the divided powers of its
/// optimal sequence, applying the last-stripped block first.  The result
/// must have constant coefficient one on the bipartition itself, strictly
/// smaller support elsewhere, and nonnegative coefficients; any violation
/// is reported as a structured error.
pub fn expand_optimal_with(
    bp: &Bipartition,
    params: Params,
    convention: Convention,
) -> Result<FockVector> {
    let blocks = optimal_sequence(bp, params)?.blocks;
    let mut vector = FockVector::basis(Bipartition::empty());
    for block in blocks.iter().rev() {
        vector = f_divided_apply_with(block.i, block.a, &vector, params, convention)?;
    }
    if !vector.coefficient(bp).is_one() {
        return Err(Error::ConventionViolation(format!(
            "coefficient of {bp} is {}, expected 1",
            vector.coefficient(bp)
        )));
    }
    for (nu, coeff) in vector.terms() {
        if nu != bp && !prec(nu, bp) {
            return Err(Error::ConventionViolation(format!(
                "support term {nu} is not strictly smaller than {bp}"
            )));
        }
        if !coeff.is_nonnegative() {
            return Err(Error::ConventionViolation(format!(
                "coefficient of {nu} has a negative term: {coeff}"
            )));
        }
    }
    Ok(vector)
}

pub fn expand_optimal(bp: &Bipartition, params: Params) -> Result<FockVector> {
    expand_optimal_with(bp, params, Convention::CountBelow)
}

/// Classical (`v = 1`) Fock vector: integer coefficients only.
pub type ClassicalFock = BTreeMap<Bipartition, i64>;

/// Parses a comma-separated residue word, rejecting residues outside
/// `0..e`.
pub fn parse_residue_word(text: &str, params: Params) -> Result<Vec<u32>> {
    text.split(',')
        .map(|token| {
            let token = token.trim();
            let i: u32 = token
                .parse()
                .map_err(|_| Error::BadResidueToken(token.to_string()))?;
            if i >= params.e() {
                return Err(Error::BadResidue(i, params.e()));
            }
            Ok(i)
        })
        .collect()
}

/// The undeformed operator `f_i`: sum over addable `i`-nodes with unit
/// coefficients.
pub fn classical_f_apply(i: u32, w: &ClassicalFock, params: Params) -> Result<ClassicalFock> {
    let mut out = ClassicalFock::new();
    for (bp, &coeff) in w {
        for gamma in bp.addable_nodes(i, params) {
            let entry = out.entry(bp.add_node(gamma)).or_insert(0);
            *entry = entry.checked_add(coeff).ok_or(Error::CoeffOverflow)?;
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

/// Applies `f_{s_n} ... f_{s_1}` to the empty bipartition at `v = 1`;
/// the first entry of the sequence acts first.
pub fn classical_word_apply(word: &[u32], params: Params) -> Result<ClassicalFock> {
    let mut vector = ClassicalFock::from([(Bipartition::empty(), 1i64)]);
    for &i in word {
        vector = classical_f_apply(i, &vector, params)?;
    }
    Ok(vector)
}

/// Number of standard bitableaux of shape `nu` whose residue sequence is
/// `word` (first-added node first).
pub fn count_bitableaux(nu: &Bipartition, word: &[u32], params: Params) -> u64 {
    fn rec(
        nu: &Bipartition,
        word: &[u32],
        params: Params,
        memo: &mut HashMap<(Bipartition, usize), u64>,
    ) -> u64 {
        if word.is_empty() {
            return u64::from(nu.is_empty());
        }
        let key = (nu.clone(), word.len());
        if let Some(&count) = memo.get(&key) {
            return count;
        }
        let &last = word.last().expect("nonempty");
        let rest = &word[..word.len() - 1];
        let count = nu
            .removable_nodes(last, params)
            .into_iter()
            .map(|gamma| rec(&nu.remove_node(gamma), rest, params, memo))
            .sum();
        memo.insert(key, count);
        count
    }
    if nu.rank() as usize != word.len() {
        return 0;
    }
    rec(nu, word, params, &mut HashMap::new())
}

/// The set of residue sequences realized by the standard bitableaux of a
/// bipartition, in addition order, deduplicated.
pub fn residue_sequences(bp: &Bipartition, params: Params) -> BTreeSet<Vec<u32>> {
    fn rec(
        bp: &Bipartition,
        params: Params,
        memo: &mut HashMap<Bipartition, BTreeSet<Vec<u32>>>,
    ) -> BTreeSet<Vec<u32>> {
        if bp.is_empty() {
            return BTreeSet::from([Vec::new()]);
        }
        if let Some(cached) = memo.get(bp) {
            return cached.clone();
        }
        let mut sequences = BTreeSet::new();
        for i in 0..params.e() {
            for gamma in bp.removable_nodes(i, params) {
                for mut seq in rec(&bp.remove_node(gamma), params, memo) {
                    seq.push(i);
                    sequences.insert(seq);
                }
            }
        }
        memo.insert(bp.clone(), sequences.clone());
        sequences
    }
    rec(bp, params, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(e: u32, m: u32) -> Params {
        Params::new(e, m).unwrap()
    }

    fn bp(text: &str) -> Bipartition {
        text.parse().unwrap()
    }

    fn mono(exp: i64, coeff: i64) -> LaurentPoly {
        LaurentPoly::monomial(exp, coeff)
    }

    #[test]
    fn f_apply_rank_one() {
        let p20 = params(2, 0);
        let w = f_apply(0, &FockVector::basis(Bipartition::empty()), p20).unwrap();
        assert_eq!(w.coefficient(&bp("1|-")), mono(1, 1));
        assert_eq!(w.coefficient(&bp("-|1")), mono(0, 1));
        assert_eq!(w.support_len(), 2);
    }

    #[test]
    fn f_apply_rank_two() {
        let p20 = params(2, 0);
        let w = f_apply(0, &FockVector::basis(bp("-|1")), p20).unwrap();
        assert_eq!(w.coefficient(&bp("1|1")), mono(-1, 1));
        assert_eq!(w.support_len(), 1);

        let w = f_apply(1, &FockVector::basis(bp("-|1")), p20).unwrap();
        assert_eq!(w.coefficient(&bp("-|2")), mono(1, 1));
        assert_eq!(w.coefficient(&bp("-|1,1")), mono(0, 1));
    }

    #[test]
    fn divided_powers() {
        let p20 = params(2, 0);
        let empty = FockVector::basis(Bipartition::empty());
        let w = f_divided_apply(0, 2, &empty, p20).unwrap();
        assert_eq!(w.coefficient(&bp("1|1")), LaurentPoly::one());
        assert_eq!(w.support_len(), 1);

        assert_eq!(f_divided_apply(0, 0, &empty, p20).unwrap(), empty);
        assert_eq!(
            f_divided_apply(0, 1, &empty, p20).unwrap(),
            f_apply(0, &empty, p20).unwrap()
        );
    }

    #[test]
    fn expand_optimal_examples() {
        let p20 = params(2, 0);
        let w = expand_optimal(&bp("1|1"), p20).unwrap();
        assert_eq!(w.coefficient(&bp("1|1")), LaurentPoly::one());
        assert_eq!(w.support_len(), 1);

        let w = expand_optimal(&bp("-|1"), p20).unwrap();
        assert_eq!(w.coefficient(&bp("-|1")), LaurentPoly::one());
        assert_eq!(w.coefficient(&bp("1|-")), mono(1, 1));

        let w = expand_optimal(&bp("3,2|4,2,1"), params(4, 2)).unwrap();
        assert_eq!(w.coefficient(&bp("3,2|4,2,1")), LaurentPoly::one());
    }

    #[test]
    fn above_counting_convention_fails_at_rank_one() {
        // The opposite exponent convention puts the monomial v on the
        // Kleshchev term, so the triangular expansion rejects it.
        let err = expand_optimal_with(&bp("-|1"), params(2, 0), Convention::CountAbove);
        assert!(matches!(err, Err(Error::ConventionViolation(_))));
    }

    #[test]
    fn bitableau_counts() {
        let p20 = params(2, 0);
        assert_eq!(count_bitableaux(&bp("1|1"), &[0, 0], p20), 2);
        assert_eq!(count_bitableaux(&Bipartition::empty(), &[], p20), 1);
        assert_eq!(count_bitableaux(&bp("-|1"), &[1], p20), 0);
        assert_eq!(count_bitableaux(&bp("-|1"), &[0, 0], p20), 0);
    }

    #[test]
    fn residue_sequence_sets() {
        let p20 = params(2, 0);
        assert_eq!(
            residue_sequences(&bp("-|1"), p20),
            BTreeSet::from([vec![0]])
        );
        assert_eq!(
            residue_sequences(&bp("1|1"), p20),
            BTreeSet::from([vec![0, 0]])
        );
        assert_eq!(
            residue_sequences(&bp("1|1"), params(2, 1)),
            BTreeSet::from([vec![0, 1], vec![1, 0]])
        );
    }

    #[test]
    fn classical_specialization_matches_counts() {
        let p21 = params(2, 1);
        let word = vec![1, 0, 1, 0];
        let vector = classical_word_apply(&word, p21).unwrap();
        for (nu, &coeff) in &vector {
            assert_eq!(coeff as u64, count_bitableaux(nu, &word, p21), "{nu}");
        }
    }
}
