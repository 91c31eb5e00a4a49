//! Undirected simple graphs on dense node ids `0..n`.
//!
//! Everything downstream (feasibility, separators, facet checks, the SAT
//! gadget) works on [`Graph`]. Edges are stored canonically as `(lo, hi)`
//! and kept sorted, so an edge list doubles as a stable coordinate order.

mod cycles;
pub mod generate;
mod menger;
mod separator;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use cycles::{simple_cycles, simple_paths};
pub use menger::{
    disjoint_paths_exhaustive, disjoint_paths_flow, max_disjoint_paths, min_proper_separator,
    min_separator_exhaustive, min_separator_flow, EXHAUSTIVE_NODE_LIMIT,
};
pub use separator::{auxiliary_graph, is_cut_node, is_separator, proper_cut_nodes, AuxiliaryGraph};

pub type Node = usize;

/// An unordered node pair, stored with the smaller id first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Edge {
    lo: Node,
    hi: Node,
}

impl Edge {
    /// Canonical pair for `{a, b}`. Panics on `a == b`; use [`Edge::try_new`]
    /// for unchecked input.
    pub fn new(a: Node, b: Node) -> Self {
        Self::try_new(a, b).expect("edge endpoints must differ")
    }

    pub fn try_new(a: Node, b: Node) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { lo: a, hi: b }),
            std::cmp::Ordering::Greater => Ok(Edge { lo: b, hi: a }),
            std::cmp::Ordering::Equal => Err(Error::InvalidGraph(format!("self-loop at node {a}"))),
        }
    }

    pub fn lo(self) -> Node {
        self.lo
    }

    pub fn hi(self) -> Node {
        self.hi
    }

    pub fn endpoints(self) -> (Node, Node) {
        (self.lo, self.hi)
    }

    pub fn contains(self, v: Node) -> bool {
        self.lo == v || self.hi == v
    }

    /// The endpoint other than `v`, if `v` is an endpoint.
    pub fn other(self, v: Node) -> Option<Node> {
        if self.lo == v {
            Some(self.hi)
        } else if self.hi == v {
            Some(self.lo)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.lo, e.hi]
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = Error;

    fn try_from(pair: [usize; 2]) -> Result<Self> {
        Edge::try_new(pair[0], pair[1])
    }
}

/// Undirected simple graph. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    node_count: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<Node>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range ids.
    pub fn new(node_count: usize, edges: impl IntoIterator<Item = (Node, Node)>) -> Result<Self> {
        let mut canonical = Vec::new();
        for (a, b) in edges {
            let e = Edge::try_new(a, b)?;
            if e.hi >= node_count {
                return Err(Error::InvalidGraph(format!(
                    "edge {e} has endpoint outside 0..{node_count}"
                )));
            }
            canonical.push(e);
        }
        Self::from_edges(node_count, canonical)
    }

    pub fn from_edges(node_count: usize, mut edges: Vec<Edge>) -> Result<Self> {
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("duplicate edge {}", w[0])));
        }
        if let Some(e) = edges.iter().find(|e| e.hi >= node_count) {
            return Err(Error::InvalidGraph(format!(
                "edge {e} has endpoint outside 0..{node_count}"
            )));
        }
        let mut adjacency = vec![Vec::new(); node_count];
        for e in &edges {
            adjacency[e.lo].push(e.hi);
            adjacency[e.hi].push(e.lo);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            node_count,
            edges,
            adjacency,
        })
    }

    pub fn empty(node_count: usize) -> Self {
        Graph {
            node_count,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); node_count],
        }
    }

    pub fn complete(node_count: usize) -> Self {
        let edges = (0..node_count)
            .flat_map(|a| (a + 1..node_count).map(move |b| Edge { lo: a, hi: b }))
            .collect();
        Self::from_edges(node_count, edges).expect("complete graph is simple")
    }

    pub fn path(node_count: usize) -> Self {
        Self::new(node_count, (1..node_count).map(|v| (v - 1, v))).expect("path is simple")
    }

    pub fn cycle(node_count: usize) -> Self {
        assert!(node_count >= 3, "cycle needs at least three nodes");
        Self::new(node_count, (0..node_count).map(|v| (v, (v + 1) % node_count)))
            .expect("cycle is simple")
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (sorted) order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn nodes(&self) -> std::ops::Range<Node> {
        0..self.node_count
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: Node) -> &[Node] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Node) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: Node, b: Node) -> bool {
        a != b && a < self.node_count && b < self.node_count && self.adjacency[a].binary_search(&b).is_ok()
    }

    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub(crate) fn check_node(&self, v: Node) -> Result<()> {
        if v < self.node_count {
            Ok(())
        } else {
            Err(Error::InvalidQuery(format!(
                "node {v} outside 0..{}",
                self.node_count
            )))
        }
    }

    pub fn is_connected(&self) -> bool {
        self.node_count <= 1 || connected_components(self).len() == 1
    }

    /// Whether `target` is reachable from `source` without entering a
    /// blocked node. Blocked endpoints count as unreachable.
    pub fn reachable_avoiding(&self, source: Node, target: Node, blocked: &[bool]) -> bool {
        if blocked[source] || blocked[target] {
            return false;
        }
        if source == target {
            return true;
        }
        let mut seen = vec![false; self.node_count];
        let mut queue = VecDeque::from([source]);
        seen[source] = true;
        while let Some(v) = queue.pop_front() {
            for &n in &self.adjacency[v] {
                if n == target {
                    return true;
                }
                if !seen[n] && !blocked[n] {
                    seen[n] = true;
                    queue.push_back(n);
                }
            }
        }
        false
    }

    /// A shortest `source`-`target` path (ascending-id tie break), if any.
    pub fn shortest_path(&self, source: Node, target: Node) -> Option<Vec<Node>> {
        self.shortest_path_where(source, target, |_, _| true)
    }

    /// BFS shortest path using only edges accepted by `allow`.
    pub fn shortest_path_where(
        &self,
        source: Node,
        target: Node,
        allow: impl Fn(Node, Node) -> bool,
    ) -> Option<Vec<Node>> {
        let mut parent = vec![usize::MAX; self.node_count];
        parent[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            if v == target {
                let mut path = vec![target];
                let mut cur = target;
                while cur != source {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &n in &self.adjacency[v] {
                if parent[n] == usize::MAX && allow(v, n) {
                    parent[n] = v;
                    queue.push_back(n);
                }
            }
        }
        None
    }

    /// Subgraph induced by `keep`, with nodes renumbered in ascending order.
    /// Returns the graph and the old-to-new map.
    pub fn induced(&self, keep: &[bool]) -> (Graph, Vec<Option<Node>>) {
        let mut map = vec![None; self.node_count];
        let mut next = 0;
        for v in self.nodes() {
            if keep[v] {
                map[v] = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|e| Some(Edge::new(map[e.lo]?, map[e.hi]?)))
            .collect();
        (
            Graph::from_edges(next, edges).expect("induced subgraph is simple"),
            map,
        )
    }
}

/// Partition of the nodes into connected components, each sorted, ordered by
/// smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<Node>> {
    let labels = component_labels(g);
    let count = labels.iter().copied().max().map_or(0, |m| m + 1);
    let mut parts = vec![Vec::new(); count];
    for (v, &c) in labels.iter().enumerate() {
        parts[c].push(v);
    }
    parts
}

/// Component id per node; ids are assigned in order of smallest member.
pub fn component_labels(g: &Graph) -> Vec<usize> {
    let mut label = vec![usize::MAX; g.node_count];
    let mut next = 0;
    for start in g.nodes() {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = next;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &n in g.neighbors(v) {
                if label[n] == usize::MAX {
                    label[n] = next;
                    stack.push(n);
                }
            }
        }
        next += 1;
    }
    label
}

/// Simple path given as its node sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodePath(Vec<Node>);

impl NodePath {
    /// Validates simplicity and that consecutive nodes are adjacent in `host`.
    pub fn new(host: &Graph, nodes: Vec<Node>) -> Result<Self> {
        Self::check(nodes, |a, b| host.has_edge(a, b))
    }

    /// Like [`NodePath::new`] with adjacency supplied by the caller (used for
    /// paths in an augmentation rather than in a [`Graph`]).
    pub fn with_adjacency(nodes: Vec<Node>, adjacent: impl Fn(Node, Node) -> bool) -> Result<Self> {
        Self::check(nodes, adjacent)
    }

    fn check(nodes: Vec<Node>, adjacent: impl Fn(Node, Node) -> bool) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::InvalidInput("empty path".into()));
        }
        if !all_distinct(&nodes) {
            return Err(Error::InvalidInput(format!("path {nodes:?} repeats a node")));
        }
        if let Some(w) = nodes.windows(2).find(|w| !adjacent(w[0], w[1])) {
            return Err(Error::InvalidInput(format!(
                "path {nodes:?} uses non-edge {}-{}",
                w[0], w[1]
            )));
        }
        Ok(NodePath(nodes))
    }

    pub(crate) fn from_trusted(nodes: Vec<Node>) -> Self {
        NodePath(nodes)
    }

    pub fn nodes(&self) -> &[Node] {
        &self.0
    }

    pub fn first(&self) -> Node {
        self.0[0]
    }

    pub fn last(&self) -> Node {
        *self.0.last().expect("paths are non-empty")
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.windows(2).map(|w| Edge::new(w[0], w[1]))
    }

    pub fn contains(&self, v: Node) -> bool {
        self.0.contains(&v)
    }

    pub fn into_nodes(self) -> Vec<Node> {
        self.0
    }
}

/// Simple cycle given as a cyclic node sequence (closing edge implied).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeCycle(Vec<Node>);

impl NodeCycle {
    pub fn new(host: &Graph, nodes: Vec<Node>) -> Result<Self> {
        Self::with_adjacency(nodes, |a, b| host.has_edge(a, b))
    }

    pub fn with_adjacency(nodes: Vec<Node>, adjacent: impl Fn(Node, Node) -> bool) -> Result<Self> {
        if nodes.len() < 3 {
            return Err(Error::InvalidInput(format!(
                "cycle {nodes:?} has fewer than three nodes"
            )));
        }
        if !all_distinct(&nodes) {
            return Err(Error::InvalidInput(format!("cycle {nodes:?} repeats a node")));
        }
        let n = nodes.len();
        if let Some(i) = (0..n).find(|&i| !adjacent(nodes[i], nodes[(i + 1) % n])) {
            return Err(Error::InvalidInput(format!(
                "cycle {nodes:?} uses non-edge {}-{}",
                nodes[i],
                nodes[(i + 1) % n]
            )));
        }
        Ok(NodeCycle(nodes))
    }

    pub(crate) fn from_trusted(nodes: Vec<Node>) -> Self {
        NodeCycle(nodes)
    }

    pub fn nodes(&self) -> &[Node] {
        &self.0
    }

    /// Number of edges (equal to the number of nodes).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Edges `v0v1, v1v2, ..., v_{n-1}v0`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| Edge::new(self.0[i], self.0[(i + 1) % n]))
    }

    /// Same cycle started at position `start`.
    pub fn rotated(&self, start: usize) -> NodeCycle {
        let mut nodes = self.0.clone();
        nodes.rotate_left(start);
        NodeCycle(nodes)
    }
}

fn all_distinct(nodes: &[Node]) -> bool {
    let mut sorted = nodes.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_edges() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
    }

    #[test]
    fn edges_are_canonical_and_sorted() {
        let g = Graph::new(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        let pairs: Vec<_> = g.edges().iter().map(|e| e.endpoints()).collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.neighbors(0), &[1, 2]);
    }

    #[test]
    fn components_of_small_graphs() {
        assert_eq!(
            connected_components(&Graph::empty(3)),
            vec![vec![0], vec![1], vec![2]]
        );
        assert_eq!(
            connected_components(&Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()),
            vec![vec![0, 1, 2]]
        );
        assert_eq!(
            connected_components(&Graph::new(4, [(0, 1)]).unwrap()),
            vec![vec![0, 1], vec![2], vec![3]]
        );
    }

    #[test]
    fn path_and_cycle_validation() {
        let g = Graph::cycle(4);
        assert!(NodePath::new(&g, vec![0, 1, 2]).is_ok());
        assert!(NodePath::new(&g, vec![0, 2]).is_err());
        assert!(NodePath::new(&g, vec![0, 1, 0]).is_err());
        assert!(NodeCycle::new(&g, vec![0, 1, 2, 3]).is_ok());
        assert!(NodeCycle::new(&g, vec![0, 1, 2]).is_err());
        assert!(NodeCycle::new(&g, vec![0, 1]).is_err());
    }

    #[test]
    fn induced_subgraph_renumbers() {
        let g = Graph::cycle(5);
        let (h, map) = g.induced(&[true, true, false, true, true]);
        assert_eq!(h.node_count(), 4);
        assert_eq!(map[2], None);
        assert_eq!(map[3], Some(2));
        // surviving edges: 0-1, 3-4, 4-0
        assert_eq!(h.edge_count(), 3);
    }
}
