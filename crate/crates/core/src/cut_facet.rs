//! `f_d`-paths and the facet condition for cut inequalities.
//!
//! For a lifted pair `f = uw` and a `uw`-cut `δ ⊆ E`, an `f_d`-path is a
//! `uw`-path in `G` that contains both endpoints of no `δ`-edge other than
//! `d`. An `f_d`-path for every `d ∈ δ` is necessary for the cut inequality
//! to be a facet, and sufficient when `F = {f}`. Deciding it is NP-hard, so
//! the search here is exhaustive.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Node, NodePath};
use crate::multicut::LiftedInstance;

/// Whether deleting `cut` from `G` separates the endpoints of `f`.
///
/// Every edge of `cut` must belong to `G`.
pub fn disconnects(inst: &LiftedInstance, f: Edge, cut: &[Edge]) -> Result<bool> {
    let g = inst.graph();
    g.check_node(f.hi()).map_err(|e| Error::InvalidCut(e.to_string()))?;
    if let Some(e) = cut.iter().find(|&&e| g.edge_index(e).is_none()) {
        return Err(Error::InvalidCut(format!("{e} is not an edge of G")));
    }
    let removed: BTreeSet<Edge> = cut.iter().copied().collect();
    Ok(g
        .shortest_path_where(f.lo(), f.hi(), |a, b| !removed.contains(&Edge::new(a, b)))
        .is_none())
}

/// A lifted pair with a cut `δ` of `G` separating its endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FCut {
    f: Edge,
    delta: Vec<Edge>,
}

impl FCut {
    /// Checks `f ∈ F`, `δ ⊆ E` and that `δ` separates `f`. `δ` is stored
    /// sorted and deduplicated.
    pub fn new(inst: &LiftedInstance, f: Edge, delta: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let delta: Vec<Edge> = delta.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if !validate_cut(inst, f, &delta)? {
            return Err(Error::InvalidCut(format!(
                "removing {} does not separate {f}",
                format_edges(&delta)
            )));
        }
        Ok(FCut { f, delta })
    }

    pub fn f(&self) -> Edge {
        self.f
    }

    pub fn delta(&self) -> &[Edge] {
        &self.delta
    }
}

/// Whether `(V, E ∖ δ)` has the endpoints of `f` in different components.
pub fn validate_cut(inst: &LiftedInstance, f: Edge, delta: &[Edge]) -> Result<bool> {
    if !inst.is_lifted(f) {
        return Err(Error::InvalidQuery(format!("{f} is not a lifted pair")));
    }
    disconnects(inst, f, delta)
}

/// Whether `path` is an `f_d`-path: a simple path of `G` joining the
/// endpoints of `f` that contains no other `δ`-edge as a node pair.
pub fn is_fd_path(inst: &LiftedInstance, cut: &FCut, d: Edge, path: &[Node]) -> bool {
    let g = inst.graph();
    if NodePath::new(g, path.to_vec()).is_err() {
        return false;
    }
    let (first, last) = (path[0], path[path.len() - 1]);
    if path.len() < 2 || Edge::new(first, last) != cut.f {
        return false;
    }
    let mut on_path = vec![false; g.node_count()];
    for &v in path {
        on_path[v] = true;
    }
    cut.delta
        .iter()
        .all(|&e| e == d || !(on_path[e.lo()] && on_path[e.hi()]))
}

/// The first `f_d`-path from `u` (the smaller endpoint of `f`) found by
/// depth-first search in ascending neighbour order, or `None`.
pub fn find_fd_path(inst: &LiftedInstance, cut: &FCut, d: Edge) -> Result<Option<NodePath>> {
    if !cut.delta.contains(&d) {
        return Err(Error::InvalidQuery(format!("{d} is not in the cut")));
    }
    let mut search = FdSearch::new(inst, cut, d);
    Ok(search.run().map(NodePath::from_trusted))
}

/// Depth-first search state.
///
/// `forbidden[v]` counts path nodes that are joined to `v` by an edge of
/// `δ ∖ {d}`; entering such a node would complete a forbidden pair.
struct FdSearch<'a> {
    inst: &'a LiftedInstance,
    u: Node,
    w: Node,
    /// `δ ∖ {d}` partners of each node.
    partners: Vec<Vec<Node>>,
    on_path: Vec<bool>,
    forbidden: Vec<u32>,
    path: Vec<Node>,
    failed: HashSet<(Node, FixedBitSet)>,
}

impl<'a> FdSearch<'a> {
    fn new(inst: &'a LiftedInstance, cut: &FCut, d: Edge) -> Self {
        let n = inst.node_count();
        let mut partners = vec![Vec::new(); n];
        for &e in cut.delta.iter().filter(|&&e| e != d) {
            partners[e.lo()].push(e.hi());
            partners[e.hi()].push(e.lo());
        }
        FdSearch {
            inst,
            u: cut.f.lo(),
            w: cut.f.hi(),
            partners,
            on_path: vec![false; n],
            forbidden: vec![0; n],
            path: Vec::new(),
            failed: HashSet::new(),
        }
    }

    fn run(&mut self) -> Option<Vec<Node>> {
        self.push(self.u);
        if self.extend() {
            Some(std::mem::take(&mut self.path))
        } else {
            None
        }
    }

    fn push(&mut self, v: Node) {
        self.on_path[v] = true;
        self.path.push(v);
        for i in 0..self.partners[v].len() {
            let p = self.partners[v][i];
            self.forbidden[p] += 1;
        }
    }

    fn pop(&mut self) {
        let v = self.path.pop().expect("non-empty path");
        self.on_path[v] = false;
        for i in 0..self.partners[v].len() {
            let p = self.partners[v][i];
            self.forbidden[p] -= 1;
        }
    }

    /// Edges of `δ ∖ {d}` are never walked.
    fn walkable(&self, a: Node, b: Node) -> bool {
        !self.partners[a].contains(&b)
    }

    fn free(&self, v: Node) -> bool {
        !self.on_path[v] && self.forbidden[v] == 0
    }

    /// Free nodes reachable from the path's last node through free nodes and
    /// walkable edges.
    fn reachable(&self) -> FixedBitSet {
        let g = self.inst.graph();
        let start = *self.path.last().unwrap();
        let mut seen = FixedBitSet::with_capacity(g.node_count());
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &t in g.neighbors(v) {
                if seen[t] || !self.free(t) || !self.walkable(v, t) {
                    continue;
                }
                seen.insert(t);
                stack.push(t);
            }
        }
        seen
    }

    /// Every later path node lies in the reachable set, and nodes outside it
    /// cannot matter, so `(last node, reachable set)` decides whether the
    /// search can still succeed. Failed states are remembered.
    fn extend(&mut self) -> bool {
        let v = *self.path.last().unwrap();
        if v == self.w {
            return true;
        }
        let reach = self.reachable();
        if !reach[self.w] {
            return false;
        }
        let state = (v, reach);
        if self.failed.contains(&state) {
            return false;
        }
        let g = self.inst.graph();
        for &t in g.neighbors(v) {
            if !self.free(t) || !self.walkable(v, t) {
                continue;
            }
            self.push(t);
            if self.extend() {
                return true;
            }
            self.pop();
        }
        self.failed.insert(state);
        false
    }
}

/// Outcome of the `f_d`-path test for every `d ∈ δ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutFacetVerdict {
    pub f: Edge,
    pub per_edge: Vec<(Edge, Option<NodePath>)>,
    pub condition_holds: bool,
    /// The facet verdict, known only when `F = {f}`.
    pub facet_decision: Option<bool>,
}

impl CutFacetVerdict {
    pub fn failing_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.per_edge.iter().filter(|(_, p)| p.is_none()).map(|&(d, _)| d)
    }
}

impl fmt::Display for CutFacetVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, path) in &self.per_edge {
            match path {
                Some(p) => {
                    let nodes: Vec<String> = p.nodes().iter().map(|v| v.to_string()).collect();
                    writeln!(f, "{d}: {}", nodes.join(","))?;
                }
                None => writeln!(f, "{d}: no path")?,
            }
        }
        match self.facet_decision {
            Some(true) => write!(f, "facet"),
            Some(false) => write!(f, "not facet"),
            None if self.condition_holds => write!(f, "condition holds; facet undecided (|F| > 1)"),
            None => write!(f, "not facet (necessary condition fails)"),
        }
    }
}

pub fn check_cut_condition(inst: &LiftedInstance, cut: &FCut) -> Result<CutFacetVerdict> {
    let per_edge = cut
        .delta
        .iter()
        .map(|&d| Ok((d, find_fd_path(inst, cut, d)?)))
        .collect::<Result<Vec<_>>>()?;
    let condition_holds = per_edge.iter().all(|(_, p)| p.is_some());
    let facet_decision = (inst.lifted().len() == 1).then_some(condition_holds);
    Ok(CutFacetVerdict {
        f: cut.f,
        per_edge,
        condition_holds,
        facet_decision,
    })
}

pub(crate) fn format_edges(edges: &[Edge]) -> String {
    let parts: Vec<String> = edges.iter().map(Edge::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}
