//! Admissible sequences of removable i-nodes and the optimal sequence of a
//! Kleshchev bipartition obtained by iterated block stripping.

use serde::{Deserialize, Serialize};

use crate::abacus::akt_is_kleshchev;
use crate::bipartition::{Bipartition, Component, Node};
use crate::error::{Error, Result};
use crate::partition::Params;

/// A block of removable `i`-nodes, highest first, satisfying the
/// admissibility conditions for the bipartition it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleBlock {
    pub residue: u32,
    pub nodes: Vec<Node>,
}

/// The `(i_j, a_j)` blocks of an optimal sequence, in stripping order
/// (the block stripped from the full bipartition first).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimalSequence {
    pub blocks: Vec<SequenceBlock>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceBlock {
    pub i: u32,
    pub a: u32,
}

impl OptimalSequence {
    /// The flattened residue word in stripping order.
    pub fn word(&self) -> Vec<u32> {
        self.blocks
            .iter()
            .flat_map(|b| std::iter::repeat_n(b.i, b.a as usize))
            .collect()
    }
}

/// The residue selection of the last-row rule: the last-row corner of the
/// second component when it is nonempty, otherwise of the first.  For a
/// Kleshchev input every addable node of that residue lies above the corner;
/// a violation is reported as a non-Kleshchev input.
pub fn select_residue(bp: &Bipartition, params: Params) -> Result<(u32, Node)> {
    if bp.is_empty() {
        return Err(Error::EmptyBipartition);
    }
    let (component, lam) = if !bp.second().is_empty() {
        (Component::Second, bp.second())
    } else {
        (Component::First, bp.first())
    };
    let row = lam.len() - 1;
    let corner = Node::new(row, lam.part(row) as usize - 1, component);
    let residue = corner.residue(params);
    for eta in bp.addable_nodes(residue, params) {
        if !eta.is_above(&corner) {
            return Err(Error::NotKleshchev(bp.to_string()));
        }
    }
    Ok((residue, corner))
}

/// Validates the admissibility conditions: the nodes are exactly the lowest
/// `s` removable `i`-nodes, every addable `i`-node is above all of them, and
/// every removable `i`-node above them has an addable `i`-node below it.
pub fn is_admissible(bp: &Bipartition, i: u32, nodes: &[Node], params: Params) -> bool {
    if nodes.is_empty() {
        return false;
    }
    let removable = bp.removable_nodes(i, params);
    let s = nodes.len();
    if s > removable.len() || nodes != &removable[removable.len() - s..] {
        return false;
    }
    let addable = bp.addable_nodes(i, params);
    if !addable
        .iter()
        .all(|eta| nodes.iter().all(|node| eta.is_above(node)))
    {
        return false;
    }
    removable[..removable.len() - s]
        .iter()
        .all(|r| addable.iter().any(|eta| r.is_above(eta)))
}

/// The admissible block of a nonempty Kleshchev bipartition for the residue
/// picked by `select_residue`: all removable `i`-nodes below the lowest
/// addable `i`-node, or all removable `i`-nodes when none is addable.
pub fn admissible_sequence(bp: &Bipartition, params: Params) -> Result<AdmissibleBlock> {
    let (residue, _) = select_residue(bp, params)?;
    let removable = bp.removable_nodes(residue, params);
    let addable = bp.addable_nodes(residue, params);
    let nodes: Vec<Node> = match addable.last() {
        Some(lowest_addable) => removable
            .into_iter()
            .filter(|node| lowest_addable.is_above(node))
            .collect(),
        None => removable,
    };
    if nodes.is_empty() {
        return Err(Error::EmptyAdmissibleBlock(bp.to_string()));
    }
    debug_assert!(is_admissible(bp, residue, &nodes, params));
    Ok(AdmissibleBlock { residue, nodes })
}

fn strip(bp: &Bipartition, nodes: &[Node]) -> Bipartition {
    nodes
        .iter()
        .fold(bp.clone(), |current, &node| current.remove_node(node))
}

/// Iterated block stripping down to the empty bipartition.  Every
/// intermediate bipartition is asserted Kleshchev through the beta-number
/// characterization; a failure there signals a bug, not bad input.
pub fn optimal_sequence(bp: &Bipartition, params: Params) -> Result<OptimalSequence> {
    if !akt_is_kleshchev(bp, params) {
        return Err(Error::NotKleshchev(bp.to_string()));
    }
    let mut current = bp.clone();
    let mut blocks = Vec::new();
    while !current.is_empty() {
        let block = admissible_sequence(&current, params)?;
        current = strip(&current, &block.nodes);
        if !akt_is_kleshchev(&current, params) {
            return Err(Error::IntermediateNotKleshchev(current.to_string()));
        }
        blocks.push(SequenceBlock {
            i: block.residue,
            a: block.nodes.len() as u32,
        });
    }
    Ok(OptimalSequence { blocks })
}

/// Replays a flattened residue word as consecutive equal-letter blocks,
/// checking that each block is the lowest removable nodes of its residue and
/// passes the admissibility validator at every intermediate bipartition.
pub fn validate_word_blocks(bp: &Bipartition, word: &[u32], params: Params) -> Result<()> {
    if word.len() as u32 != bp.rank() {
        return Err(Error::ConventionViolation(format!(
            "word length {} does not match rank {}",
            word.len(),
            bp.rank()
        )));
    }
    let mut current = bp.clone();
    let mut rest = word;
    while let Some(&i) = rest.first() {
        let a = rest.iter().take_while(|&&x| x == i).count();
        rest = &rest[a..];
        let removable = current.removable_nodes(i, params);
        if removable.len() < a {
            return Err(Error::ConventionViolation(format!(
                "block of {a} removable {i}-nodes unavailable at {current}"
            )));
        }
        let nodes: Vec<Node> = removable[removable.len() - a..].to_vec();
        if !is_admissible(&current, i, &nodes, params) {
            return Err(Error::ConventionViolation(format!(
                "block ({i}, {a}) is not admissible at {current}"
            )));
        }
        current = strip(&current, &nodes);
    }
    Ok(())
}
