//! Bipartitions with residue coloring, the node order, normal and good
//! nodes, the Kashiwara operators, the recursive Kleshchev test and
//! crystal-graph generation.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Params, Partition};

/// Which component of a bipartition a node lives in.  The first component
/// is above the second in the node order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Component {
    First,
    Second,
}

impl Component {
    pub fn index(self) -> u8 {
        match self {
            Component::First => 1,
            Component::Second => 2,
        }
    }
}

/// A node `(row, col, component)` of a bipartition diagram, 0-indexed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Node {
    pub component: Component,
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, component: Component) -> Self {
        Node {
            component,
            row,
            col,
        }
    }

    /// Residue: `col - row + m (mod e)` in the first component,
    /// `col - row (mod e)` in the second.
    pub fn residue(&self, params: Params) -> u32 {
        let shift = match self.component {
            Component::First => i64::from(params.m()),
            Component::Second => 0,
        };
        (self.col as i64 - self.row as i64 + shift).rem_euclid(i64::from(params.e())) as u32
    }

    /// The node order on addable/removable nodes: first component above
    /// second, smaller rows above larger rows within a component.
    pub fn is_above(&self, other: &Node) -> bool {
        (self.component, self.row) < (other.component, other.row)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.component.index())
    }
}

/// An ordered pair of partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bipartition {
    first: Partition,
    second: Partition,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition { first, second }
    }

    pub fn empty() -> Self {
        Bipartition::default()
    }

    pub fn first(&self) -> &Partition {
        &self.first
    }

    pub fn second(&self) -> &Partition {
        &self.second
    }

    pub fn component(&self, c: Component) -> &Partition {
        match c {
            Component::First => &self.first,
            Component::Second => &self.second,
        }
    }

    pub fn rank(&self) -> u32 {
        self.first.rank() + self.second.rank()
    }

    pub fn is_empty(&self) -> bool {
        self.first.is_empty() && self.second.is_empty()
    }

    /// Residue rows of a component: one vector per stored row.
    pub fn residue_rows(&self, c: Component, params: Params) -> Vec<Vec<u32>> {
        let lam = self.component(c);
        (0..lam.len())
            .map(|row| {
                (0..lam.part(row) as usize)
                    .map(|col| Node::new(row, col, c).residue(params))
                    .collect()
            })
            .collect()
    }

    /// Addable `i`-nodes, highest first.
    pub fn addable_nodes(&self, i: u32, params: Params) -> Vec<Node> {
        self.boundary_nodes(i, params, true)
    }

    /// Removable `i`-nodes, highest first.
    pub fn removable_nodes(&self, i: u32, params: Params) -> Vec<Node> {
        self.boundary_nodes(i, params, false)
    }

    fn boundary_nodes(&self, i: u32, params: Params, addable: bool) -> Vec<Node> {
        let mut nodes = Vec::new();
        for c in [Component::First, Component::Second] {
            let lam = self.component(c);
            if addable {
                for row in 0..=lam.len() {
                    let col = lam.part(row) as usize;
                    let fits = row == 0 || lam.part(row) < lam.part(row - 1);
                    if fits {
                        let node = Node::new(row, col, c);
                        if node.residue(params) == i {
                            nodes.push(node);
                        }
                    }
                }
            } else {
                for row in 0..lam.len() {
                    if lam.part(row) > lam.part(row + 1) {
                        let node = Node::new(row, lam.part(row) as usize - 1, c);
                        if node.residue(params) == i {
                            nodes.push(node);
                        }
                    }
                }
            }
        }
        // Rows within a component are visited top-down and the first
        // component before the second, so this is already highest-first.
        nodes
    }

    /// The bipartition with `node` adjoined.  `node` must be addable.
    pub fn add_node(&self, node: Node) -> Bipartition {
        let lam = self.component(node.component);
        debug_assert_eq!(node.col as u32, lam.part(node.row));
        let mut parts: Vec<u32> = lam.parts().to_vec();
        if node.row == parts.len() {
            parts.push(1);
        } else {
            parts[node.row] += 1;
        }
        let changed = Partition::new(parts).expect("adding an addable node keeps monotonicity");
        self.with_component(node.component, changed)
    }

    /// The bipartition with `node` removed.  `node` must be removable.
    pub fn remove_node(&self, node: Node) -> Bipartition {
        let lam = self.component(node.component);
        debug_assert_eq!(node.col as u32 + 1, lam.part(node.row));
        let mut parts: Vec<u32> = lam.parts().to_vec();
        parts[node.row] -= 1;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let changed = Partition::new(parts).expect("removing a removable node keeps monotonicity");
        self.with_component(node.component, changed)
    }

    fn with_component(&self, c: Component, lam: Partition) -> Bipartition {
        match c {
            Component::First => Bipartition::new(lam, self.second.clone()),
            Component::Second => Bipartition::new(self.first.clone(), lam),
        }
    }

    /// Removable `i`-nodes that survive the addable-below obstruction: for
    /// every addable `i`-node below the candidate, there are strictly more
    /// removable than addable `i`-nodes strictly between them.  Highest
    /// first.
    pub fn normal_nodes(&self, i: u32, params: Params) -> Vec<Node> {
        let removable = self.removable_nodes(i, params);
        let addable = self.addable_nodes(i, params);
        removable
            .iter()
            .copied()
            .filter(|&gamma| {
                addable.iter().all(|&eta| {
                    if !gamma.is_above(&eta) {
                        return true;
                    }
                    let removable_between = removable
                        .iter()
                        .filter(|r| gamma.is_above(r) && r.is_above(&eta))
                        .count();
                    let addable_between = addable
                        .iter()
                        .filter(|a| gamma.is_above(a) && a.is_above(&eta))
                        .count();
                    removable_between > addable_between
                })
            })
            .collect()
    }

    /// The highest normal `i`-node, if any.
    pub fn good_node(&self, i: u32, params: Params) -> Option<Node> {
        self.normal_nodes(i, params).first().copied()
    }

    /// Kashiwara operator: remove the good `i`-node.
    pub fn e_tilde(&self, i: u32, params: Params) -> Option<Bipartition> {
        self.good_node(i, params)
            .map(|gamma| self.remove_node(gamma))
    }

    /// Kashiwara operator: the unique extension by an addable `i`-node that
    /// becomes the good `i`-node of the result.
    ///
    /// Implemented by candidate search; finding two qualifying candidates
    /// would contradict crystal theory and panics as an internal invariant
    /// violation.
    pub fn f_tilde(&self, i: u32, params: Params) -> Option<Bipartition> {
        let mut found: Option<(Node, Bipartition)> = None;
        for gamma in self.addable_nodes(i, params) {
            let extended = self.add_node(gamma);
            if extended.good_node(i, params) == Some(gamma) {
                assert!(
                    found.is_none(),
                    "two distinct good-node extensions of {self} for residue {i}"
                );
                found = Some((gamma, extended));
            }
        }
        found.map(|(_, extended)| extended)
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.first, self.second)
    }
}

impl FromStr for Bipartition {
    type Err = Error;

    /// `"<partition>|<partition>"`, e.g. `"3,2|4,2,1"` or `"-|1,1"`.
    fn from_str(text: &str) -> Result<Self> {
        let mut sides = text.split('|');
        let (first, second) = match (sides.next(), sides.next(), sides.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(Error::BadBipartitionText),
        };
        let (first, second): (Partition, Partition) = (first.parse()?, second.parse()?);
        if first.rank().checked_add(second.rank()).is_none() {
            return Err(Error::RankOverflow);
        }
        Ok(Bipartition::new(first, second))
    }
}

/// Memo table for the recursive Kleshchev test, keyed by parameters and
/// shape.  Use one per worker when running concurrently.
#[derive(Debug, Default)]
pub struct KleshchevCache {
    memo: HashMap<(Params, Bipartition), bool>,
}

impl KleshchevCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Recursive definition: empty, or some good-node removal is Kleshchev.
    pub fn is_kleshchev(&mut self, bp: &Bipartition, params: Params) -> bool {
        if bp.is_empty() {
            return true;
        }
        let key = (params, bp.clone());
        if let Some(&cached) = self.memo.get(&key) {
            return cached;
        }
        let mut verdict = false;
        for i in 0..params.e() {
            if let Some(gamma) = bp.good_node(i, params) {
                if self.is_kleshchev(&bp.remove_node(gamma), params) {
                    verdict = true;
                    break;
                }
            }
        }
        self.memo.insert(key, verdict);
        verdict
    }
}

/// One-shot recursive Kleshchev test with a fresh memo table.
pub fn is_kleshchev_recursive(bp: &Bipartition, params: Params) -> bool {
    KleshchevCache::new().is_kleshchev(bp, params)
}

/// The crystal graph truncated at a maximal rank: nodes are the Kleshchev
/// bipartitions reachable from the empty bipartition, edges are labeled by
/// the residue of the applied operator.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CrystalGraph {
    pub nodes: Vec<String>,
    pub edges: Vec<CrystalEdge>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CrystalEdge {
    pub from: String,
    pub to: String,
    pub i: u32,
}

/// Breadth-first closure of the empty bipartition under all `f_tilde`
/// operators, truncated at `max_rank`.
pub fn crystal_graph(params: Params, max_rank: u32) -> CrystalGraph {
    let mut seen: Vec<Bipartition> = vec![Bipartition::empty()];
    let mut queue: VecDeque<Bipartition> = VecDeque::from([Bipartition::empty()]);
    let mut edges = Vec::new();
    while let Some(bp) = queue.pop_front() {
        if bp.rank() >= max_rank {
            continue;
        }
        for i in 0..params.e() {
            if let Some(next) = bp.f_tilde(i, params) {
                edges.push(CrystalEdge {
                    from: bp.to_string(),
                    to: next.to_string(),
                    i,
                });
                if !seen.contains(&next) {
                    seen.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
    }
    let mut nodes: Vec<String> = seen.iter().map(|bp| bp.to_string()).collect();
    nodes.sort();
    edges.sort_by(|a, b| (&a.from, &a.to, a.i).cmp(&(&b.from, &b.to, b.i)));
    CrystalGraph { nodes, edges }
}

impl CrystalGraph {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for node in &self.nodes {
            out.push_str(&format!("    \"{node}\";\n"));
        }
        for edge in &self.edges {
            out.push_str(&format!(
                "    \"{}\" -> \"{}\" [label=\"{}\"];\n",
                edge.from, edge.to, edge.i
            ));
        }
        out.push_str("}\n");
        out
    }
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

    #[test]
    fn parse_and_display() {
        assert_eq!(bp("3,2|4,2,1").to_string(), "3,2|4,2,1");
        assert_eq!(bp("-|1,1").first(), &Partition::empty());
        assert_eq!(bp("|").rank(), 0);
        assert!("3,2".parse::<Bipartition>().is_err());
        assert!("1|2|3".parse::<Bipartition>().is_err());
    }

    #[test]
    fn residues_match_colored_diagram() {
        let p42 = params(4, 2);
        assert_eq!(Node::new(0, 0, Component::First).residue(p42), 2);
        assert_eq!(Node::new(0, 3, Component::Second).residue(p42), 3);
        assert_eq!(Node::new(1, 0, Component::Second).residue(params(2, 0)), 1);
    }

    #[test]
    fn node_order() {
        let a = Node::new(5, 0, Component::First);
        let b = Node::new(0, 9, Component::Second);
        assert!(a.is_above(&b));
        assert!(Node::new(0, 3, Component::First).is_above(&Node::new(2, 0, Component::First)));
        assert!(!Node::new(1, 1, Component::Second).is_above(&Node::new(0, 4, Component::Second)));
    }

    #[test]
    fn addable_removable_enumeration() {
        let p42 = params(4, 2);
        let lam = bp("3,2|4,2,1");
        let removable2 = lam.removable_nodes(2, p42);
        assert_eq!(
            removable2,
            vec![
                Node::new(1, 1, Component::First),
                Node::new(2, 0, Component::Second)
            ]
        );
        assert!(lam.addable_nodes(2, p42).is_empty());

        let p20 = params(2, 0);
        assert_eq!(
            Bipartition::empty().addable_nodes(0, p20),
            vec![
                Node::new(0, 0, Component::First),
                Node::new(0, 0, Component::Second)
            ]
        );
    }

    #[test]
    fn normal_and_good_nodes() {
        let p20 = params(2, 0);
        assert_eq!(
            bp("1|1").normal_nodes(0, p20),
            vec![
                Node::new(0, 0, Component::First),
                Node::new(0, 0, Component::Second)
            ]
        );
        assert!(bp("1|-").normal_nodes(0, p20).is_empty());
        assert!(Bipartition::empty().normal_nodes(0, p20).is_empty());

        assert_eq!(
            bp("1|1").good_node(0, p20),
            Some(Node::new(0, 0, Component::First))
        );
        assert_eq!(bp("1|-").good_node(0, p20), None);
        assert_eq!(
            bp("-|1").good_node(0, p20),
            Some(Node::new(0, 0, Component::Second))
        );
    }

    #[test]
    fn kashiwara_operators() {
        let p20 = params(2, 0);
        assert_eq!(bp("1|1").e_tilde(0, p20), Some(bp("-|1")));
        assert_eq!(bp("-|1").e_tilde(0, p20), Some(Bipartition::empty()));
        assert_eq!(bp("-|1").e_tilde(1, p20), None);

        assert_eq!(Bipartition::empty().f_tilde(0, p20), Some(bp("-|1")));
        assert_eq!(bp("-|1").f_tilde(1, p20), Some(bp("-|1,1")));
        let p31 = params(3, 1);
        assert_eq!(Bipartition::empty().f_tilde(1, p31), Some(bp("1|-")));
    }

    #[test]
    fn recursive_kleshchev_examples() {
        assert!(is_kleshchev_recursive(&Bipartition::empty(), params(2, 0)));
        assert!(is_kleshchev_recursive(&bp("3,2|4,2,1"), params(4, 2)));
        assert!(!is_kleshchev_recursive(&bp("1|-"), params(2, 0)));
    }

    #[test]
    fn crystal_layers_small() {
        let p20 = params(2, 0);
        let graph = crystal_graph(p20, 1);
        assert_eq!(graph.nodes, vec!["-|-".to_string(), "-|1".to_string()]);
        assert_eq!(graph.edges.len(), 1);
        assert_eq!(graph.edges[0].i, 0);

        let graph = crystal_graph(p20, 2);
        let rank2: Vec<&String> = graph
            .nodes
            .iter()
            .filter(|n| n.parse::<Bipartition>().unwrap().rank() == 2)
            .collect();
        assert_eq!(rank2.len(), 2);
        assert!(graph.nodes.contains(&"1|1".to_string()));
        assert!(graph.nodes.contains(&"-|1,1".to_string()));

        let graph = crystal_graph(params(3, 1), 0);
        assert_eq!(graph.nodes.len(), 1);
        assert!(graph.edges.is_empty());
    }

    #[test]
    fn dot_export_quotes_labels() {
        let dot = crystal_graph(params(2, 0), 1).to_dot();
        assert!(dot.contains("\"-|-\" -> \"-|1\" [label=\"0\"];"));
    }
}
