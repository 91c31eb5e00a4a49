//! Lifted multicut instances and their feasible sets.
//!
//! A feasible vector assigns `0` to a pair exactly when both endpoints share
//! a component of some decomposition of `G`. Membership is decided through
//! components of the zero-labelled `E`-edges rather than by listing the
//! exponentially many cycle, path and cut inequalities.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{component_labels, Edge, Graph, Node, NodeCycle, NodePath};
use crate::polytope::LinearInequality;

/// Default cap on `|E|` for subset enumeration.
pub const DEFAULT_ENUM_BOUND: usize = 22;

/// Environment variable overriding [`DEFAULT_ENUM_BOUND`].
pub const ENUM_BOUND_ENV: &str = "LIFTCUT_MAX_ENUM";

const HARD_ENUM_LIMIT: usize = 40;

/// The enumeration bound in effect: `LIFTCUT_MAX_ENUM` if set and valid,
/// otherwise [`DEFAULT_ENUM_BOUND`].
pub fn enumeration_bound() -> usize {
    std::env::var(ENUM_BOUND_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUM_BOUND)
}

/// Whether a coordinate belongs to `E` or to the lifted set `F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    Graph,
    Lifted,
}

/// Connected graph `G`, lifted pairs `F` disjoint from `E`, optional costs.
///
/// Coordinates of every vector over `E ∪ F` follow the sorted order of the
/// union (see [`LiftedInstance::coords`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedInstance {
    graph: Graph,
    lifted: Vec<Edge>,
    coords: Vec<Edge>,
    kinds: Vec<EdgeKind>,
    costs: Option<Vec<BigRational>>,
}

impl LiftedInstance {
    pub fn new(graph: Graph, lifted: impl IntoIterator<Item = (Node, Node)>) -> Result<Self> {
        let lifted = lifted
            .into_iter()
            .map(|(a, b)| Edge::try_new(a, b))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::InvalidInstance(e.to_string()))?;
        Self::from_edges(graph, lifted)
    }

    pub fn from_edges(graph: Graph, mut lifted: Vec<Edge>) -> Result<Self> {
        if graph.node_count() == 0 {
            return Err(Error::InvalidInstance("graph has no nodes".into()));
        }
        if !graph.is_connected() {
            return Err(Error::InvalidInstance("graph is not connected".into()));
        }
        lifted.sort_unstable();
        if let Some(w) = lifted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidInstance(format!("duplicate lifted pair {}", w[0])));
        }
        for f in &lifted {
            if f.hi() >= graph.node_count() {
                return Err(Error::InvalidInstance(format!(
                    "lifted pair {f} has endpoint outside 0..{}",
                    graph.node_count()
                )));
            }
            if graph.has_edge(f.lo(), f.hi()) {
                return Err(Error::InvalidInstance(format!(
                    "lifted pair {f} is also an edge of G"
                )));
            }
        }
        let mut tagged: Vec<(Edge, EdgeKind)> = graph
            .edges()
            .iter()
            .map(|&e| (e, EdgeKind::Graph))
            .chain(lifted.iter().map(|&f| (f, EdgeKind::Lifted)))
            .collect();
        tagged.sort_unstable_by_key(|&(e, _)| e);
        let (coords, kinds) = tagged.into_iter().unzip();
        Ok(LiftedInstance {
            graph,
            lifted,
            coords,
            kinds,
            costs: None,
        })
    }

    /// Attaches costs; pairs missing from `costs` cost zero.
    pub fn with_costs(mut self, costs: BTreeMap<Edge, BigRational>) -> Result<Self> {
        let mut dense = vec![BigRational::zero(); self.coords.len()];
        for (e, c) in costs {
            let i = self
                .coord_index(e)
                .ok_or_else(|| Error::InvalidInstance(format!("cost on {e}, which is not in E ∪ F")))?;
            dense[i] = c;
        }
        self.costs = Some(dense);
        Ok(self)
    }

    /// Costs given as integers in coordinate order.
    pub fn with_integer_costs(self, costs: &[i64]) -> Result<Self> {
        if costs.len() != self.coords.len() {
            return Err(Error::InvalidInstance(format!(
                "expected {} costs, got {}",
                self.coords.len(),
                costs.len()
            )));
        }
        let map = self
            .coords
            .iter()
            .zip(costs)
            .map(|(&e, &c)| (e, BigRational::from_integer(BigInt::from(c))))
            .collect();
        self.with_costs(map)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn lifted(&self) -> &[Edge] {
        &self.lifted
    }

    pub fn node_count(&self) -> usize {
        self.graph.node_count()
    }

    /// `E ∪ F` in sorted order; the coordinate order of every vector.
    pub fn coords(&self) -> &[Edge] {
        &self.coords
    }

    pub fn kind(&self, index: usize) -> EdgeKind {
        self.kinds[index]
    }

    /// `|E ∪ F|`.
    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    pub fn coord_index(&self, e: Edge) -> Option<usize> {
        self.coords.binary_search(&e).ok()
    }

    pub fn contains_pair(&self, e: Edge) -> bool {
        self.coord_index(e).is_some()
    }

    pub fn is_lifted(&self, e: Edge) -> bool {
        self.lifted.binary_search(&e).is_ok()
    }

    pub fn costs(&self) -> Option<&[BigRational]> {
        self.costs.as_deref()
    }

    /// Cost map keyed by pair, if costs are present.
    pub fn cost_map(&self) -> Option<BTreeMap<Edge, BigRational>> {
        self.costs
            .as_ref()
            .map(|c| self.coords.iter().copied().zip(c.iter().cloned()).collect())
    }

    /// Whether `a` and `b` are adjacent in the augmentation `(V, E ∪ F)`.
    pub fn adjacent_in_augmentation(&self, a: Node, b: Node) -> bool {
        a != b
            && a < self.node_count()
            && b < self.node_count()
            && self.contains_pair(Edge::new(a, b))
    }

    /// Augmentation pairs incident to `v`.
    pub fn augmentation_edges_at(&self, v: Node) -> impl Iterator<Item = Edge> + '_ {
        self.coords.iter().copied().filter(move |e| e.contains(v))
    }
}

/// 0/1 labelling of `E ∪ F` in coordinate order. `1` means cut.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MulticutVector(Vec<u8>);

impl MulticutVector {
    pub fn new(inst: &LiftedInstance, values: Vec<u8>) -> Result<Self> {
        if values.len() != inst.dimension() {
            return Err(Error::InvalidVector(format!(
                "expected {} coordinates, got {}",
                inst.dimension(),
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|&&v| v > 1) {
            return Err(Error::InvalidVector(format!("entry {v} is not 0 or 1")));
        }
        Ok(MulticutVector(values))
    }

    /// From a map whose key set must equal `E ∪ F`.
    pub fn from_map(inst: &LiftedInstance, map: &BTreeMap<Edge, u8>) -> Result<Self> {
        if map.len() != inst.dimension() || !map.keys().all(|&e| inst.contains_pair(e)) {
            return Err(Error::InvalidVector("domain differs from E ∪ F".into()));
        }
        Self::new(inst, map.values().copied().collect())
    }

    pub fn all(inst: &LiftedInstance, value: u8) -> Self {
        MulticutVector(vec![value; inst.dimension()])
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, index: usize) -> u8 {
        self.0[index]
    }

    /// Value on pair `e`; panics if `e` is not a coordinate of `inst`.
    pub fn at(&self, inst: &LiftedInstance, e: Edge) -> u8 {
        self.0[inst.coord_index(e).expect("pair is a coordinate")]
    }

    fn check_domain(&self, inst: &LiftedInstance) -> Result<()> {
        if self.0.len() != inst.dimension() {
            return Err(Error::InvalidVector(format!(
                "vector has {} coordinates, instance has {}",
                self.0.len(),
                inst.dimension()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for MulticutVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Partition of `V` into parts that each induce a connected subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    parts: Vec<Vec<Node>>,
}

impl Decomposition {
    pub fn new(graph: &Graph, parts: Vec<Vec<Node>>) -> Result<Self> {
        let mut seen = vec![false; graph.node_count()];
        let mut parts: Vec<Vec<Node>> = parts.into_iter().filter(|p| !p.is_empty()).collect();
        for part in &mut parts {
            part.sort_unstable();
            check_part(graph, part, &mut seen)?;
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidParts(format!("node {v} is in no part")));
        }
        parts.sort();
        Ok(Decomposition { parts })
    }

    pub fn parts(&self) -> &[Vec<Node>] {
        &self.parts
    }
}

fn check_part(graph: &Graph, part: &[Node], seen: &mut [bool]) -> Result<()> {
    for &v in part {
        if v >= graph.node_count() {
            return Err(Error::InvalidParts(format!("node {v} out of range")));
        }
        if seen[v] {
            return Err(Error::InvalidParts(format!("node {v} is in two parts")));
        }
        seen[v] = true;
    }
    let mut keep = vec![false; graph.node_count()];
    for &v in part {
        keep[v] = true;
    }
    let (sub, _) = graph.induced(&keep);
    if !sub.is_connected() {
        return Err(Error::InvalidParts(format!(
            "part {part:?} does not induce a connected subgraph"
        )));
    }
    Ok(())
}

/// `x^A`: zero exactly on pairs inside a common set of `parts`. Nodes outside
/// every set act as singletons.
pub fn vector_from_parts(inst: &LiftedInstance, parts: &[Vec<Node>]) -> Result<MulticutVector> {
    let n = inst.node_count();
    let mut seen = vec![false; n];
    let mut label: Vec<usize> = (0..n).map(|v| n + v).collect();
    for (i, part) in parts.iter().enumerate() {
        check_part(inst.graph(), part, &mut seen)?;
        for &v in part {
            label[v] = i;
        }
    }
    Ok(vector_from_labels(inst, &label))
}

fn vector_from_labels(inst: &LiftedInstance, label: &[usize]) -> MulticutVector {
    MulticutVector(
        inst.coords()
            .iter()
            .map(|e| u8::from(label[e.lo()] != label[e.hi()]))
            .collect(),
    )
}

/// Components of `(V, {e ∈ E : x_e = 0})`.
fn zero_components(inst: &LiftedInstance, x: &MulticutVector) -> Vec<usize> {
    let zero_edges = inst
        .coords()
        .iter()
        .enumerate()
        .filter(|&(i, _)| inst.kind(i) == EdgeKind::Graph && x.get(i) == 0)
        .map(|(_, &e)| e)
        .collect();
    let g0 = Graph::from_edges(inst.node_count(), zero_edges).expect("subgraph of G");
    component_labels(&g0)
}

pub fn is_feasible(inst: &LiftedInstance, x: &MulticutVector) -> Result<bool> {
    x.check_domain(inst)?;
    let label = zero_components(inst, x);
    Ok(inst
        .coords()
        .iter()
        .enumerate()
        .all(|(i, e)| (x.get(i) == 0) == (label[e.lo()] == label[e.hi()])))
}

/// The decomposition encoded by a feasible vector.
pub fn decomposition_of(inst: &LiftedInstance, x: &MulticutVector) -> Result<Decomposition> {
    if !is_feasible(inst, x)? {
        return Err(Error::InvalidVector(format!("{x} is not feasible")));
    }
    let label = zero_components(inst, x);
    let count = label.iter().max().map_or(0, |m| m + 1);
    let mut parts = vec![Vec::new(); count];
    for (v, &c) in label.iter().enumerate() {
        parts[c].push(v);
    }
    Decomposition::new(inst.graph(), parts)
}

pub fn enumerate_feasible(inst: &LiftedInstance) -> Result<Vec<MulticutVector>> {
    enumerate_feasible_with_bound(inst, enumeration_bound())
}

/// Exact feasible set, sorted ascending.
///
/// Scans subsets `E₀ ⊆ E`, keeps the closed ones (no `E`-edge outside `E₀`
/// joins two nodes of one component of `(V, E₀)`), and reads the lifted
/// coordinates off the components. Closed subsets and decompositions are in
/// bijection, so no duplicates arise.
pub fn enumerate_feasible_with_bound(
    inst: &LiftedInstance,
    bound: usize,
) -> Result<Vec<MulticutVector>> {
    let m = inst.graph().edge_count();
    if m > bound.min(HARD_ENUM_LIMIT) {
        return Err(Error::TooLarge {
            what: "edge set for enumeration",
            size: m,
            limit: bound.min(HARD_ENUM_LIMIT),
        });
    }
    let n = inst.node_count();
    let edges = inst.graph().edges();
    let mut out = Vec::new();
    let mut parent = vec![0usize; n];
    for mask in 0u64..(1u64 << m) {
        for (v, p) in parent.iter_mut().enumerate() {
            *p = v;
        }
        for (i, e) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (a, b) = (find(&mut parent, e.lo()), find(&mut parent, e.hi()));
                parent[a] = b;
            }
        }
        let label: Vec<usize> = (0..n).map(|v| find(&mut parent, v)).collect();
        let closed = edges
            .iter()
            .enumerate()
            .all(|(i, e)| mask >> i & 1 == 1 || label[e.lo()] != label[e.hi()]);
        if closed {
            out.push(vector_from_labels(inst, &label));
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

pub fn objective(inst: &LiftedInstance, x: &MulticutVector) -> Result<BigRational> {
    let costs = inst.costs().ok_or(Error::NoObjective)?;
    x.check_domain(inst)?;
    Ok(costs
        .iter()
        .zip(x.values())
        .filter(|&(_, &v)| v == 1)
        .fold(BigRational::zero(), |acc, (c, _)| acc + c))
}

/// Exact minimiser by enumeration. Among minimisers the lexicographically
/// greatest vector is returned.
pub fn solve_brute_force(inst: &LiftedInstance) -> Result<(MulticutVector, BigRational)> {
    if inst.costs().is_none() {
        return Err(Error::NoObjective);
    }
    let mut best: Option<(MulticutVector, BigRational)> = None;
    // ascending order, so `<=` keeps the greatest among ties
    for x in enumerate_feasible(inst)? {
        let value = objective(inst, &x)?;
        if best.as_ref().is_none_or(|(_, b)| value <= *b) {
            best = Some((x, value));
        }
    }
    Ok(best.expect("the all-zero vector is always feasible"))
}

/// A violated inequality of the lifted multicut formulation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Cycle inequality: `edge` is cut, every other cycle edge is not.
    Cycle { cycle: NodeCycle, edge: Edge },
    /// Path inequality: lifted pair cut although `path` is uncut.
    Path { lifted: Edge, path: NodePath },
    /// Cut inequality: lifted pair uncut although every edge of `cut` is cut.
    Cut { lifted: Edge, cut: Vec<Edge> },
}

impl Violation {
    /// The inequality this witness refers to, in `≤` form.
    pub fn inequality(&self) -> LinearInequality {
        match self {
            Violation::Cycle { cycle, edge } => {
                let mut coeffs: BTreeMap<Edge, i64> = cycle.edges().map(|e| (e, -1)).collect();
                coeffs.insert(*edge, 1);
                LinearInequality::new(coeffs, 0)
            }
            Violation::Path { lifted, path } => {
                let mut coeffs: BTreeMap<Edge, i64> = path.edges().map(|e| (e, -1)).collect();
                coeffs.insert(*lifted, 1);
                LinearInequality::new(coeffs, 0)
            }
            Violation::Cut { lifted, cut } => LinearInequality::cut(*lifted, cut),
        }
    }

    /// Checks that the witness is well formed for `inst` and that `x`
    /// violates its inequality.
    pub fn verify(&self, inst: &LiftedInstance, x: &MulticutVector) -> Result<()> {
        let g = inst.graph();
        match self {
            Violation::Cycle { cycle, edge } => {
                NodeCycle::new(g, cycle.nodes().to_vec())?;
                if !cycle.edges().any(|e| e == *edge) {
                    return Err(Error::InvalidWitness(format!("{edge} is not on the cycle")));
                }
            }
            Violation::Path { lifted, path } => {
                NodePath::new(g, path.nodes().to_vec())?;
                if !inst.is_lifted(*lifted) {
                    return Err(Error::InvalidWitness(format!("{lifted} is not in F")));
                }
                if Edge::new(path.first(), path.last()) != *lifted {
                    return Err(Error::InvalidWitness("path does not join the lifted pair".into()));
                }
            }
            Violation::Cut { lifted, cut } => {
                if !inst.is_lifted(*lifted) {
                    return Err(Error::InvalidWitness(format!("{lifted} is not in F")));
                }
                if !crate::cut_facet::disconnects(inst, *lifted, cut)? {
                    return Err(Error::InvalidWitness("edge set is not a cut".into()));
                }
            }
        }
        let ineq = self.inequality();
        if ineq.evaluate(inst, x)? <= ineq.rhs() {
            return Err(Error::InvalidWitness(format!("{x} satisfies the inequality")));
        }
        Ok(())
    }
}

/// A violated cycle, path or cut inequality (searched in that order), or
/// `None` exactly when `x` is feasible.
pub fn find_violated_constraint(
    inst: &LiftedInstance,
    x: &MulticutVector,
) -> Result<Option<Violation>> {
    x.check_domain(inst)?;
    let label = zero_components(inst, x);
    let g = inst.graph();
    let zero_edge = |a: Node, b: Node| x.at(inst, Edge::new(a, b)) == 0;

    for (i, &e) in inst.coords().iter().enumerate() {
        if inst.kind(i) == EdgeKind::Graph && x.get(i) == 1 && label[e.lo()] == label[e.hi()] {
            let nodes = g
                .shortest_path_where(e.lo(), e.hi(), zero_edge)
                .expect("endpoints share a zero component");
            return Ok(Some(Violation::Cycle {
                cycle: NodeCycle::from_trusted(nodes),
                edge: e,
            }));
        }
    }
    for (i, &f) in inst.coords().iter().enumerate() {
        if inst.kind(i) == EdgeKind::Lifted && x.get(i) == 1 && label[f.lo()] == label[f.hi()] {
            let nodes = g
                .shortest_path_where(f.lo(), f.hi(), zero_edge)
                .expect("endpoints share a zero component");
            return Ok(Some(Violation::Path {
                lifted: f,
                path: NodePath::from_trusted(nodes),
            }));
        }
    }
    for (i, &f) in inst.coords().iter().enumerate() {
        if inst.kind(i) == EdgeKind::Lifted && x.get(i) == 0 && label[f.lo()] != label[f.hi()] {
            let side = label[f.lo()];
            let cut = g
                .edges()
                .iter()
                .copied()
                .filter(|e| (label[e.lo()] == side) != (label[e.hi()] == side))
                .collect();
            return Ok(Some(Violation::Cut { lifted: f, cut }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn vec_of(inst: &LiftedInstance, v: &[u8]) -> MulticutVector {
        MulticutVector::new(inst, v.to_vec()).unwrap()
    }

    #[test]
    fn triangle_feasible_set() {
        let inst = fixtures::triangle().instance;
        let all = enumerate_feasible(&inst).unwrap();
        let got: Vec<Vec<u8>> = all.iter().map(|x| x.values().to_vec()).collect();
        assert_eq!(
            got,
            vec![vec![0, 0, 0], vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 1]]
        );
    }

    #[test]
    fn triangle_membership() {
        let inst = fixtures::triangle().instance;
        assert!(is_feasible(&inst, &vec_of(&inst, &[0, 1, 1])).unwrap());
        assert!(!is_feasible(&inst, &vec_of(&inst, &[1, 1, 0])).unwrap());
        assert!(is_feasible(&inst, &MulticutVector::all(&inst, 0)).unwrap());
        assert!(MulticutVector::new(&inst, vec![0, 1]).is_err());
    }

    #[test]
    fn domain_mismatch_is_rejected() {
        let inst = fixtures::triangle().instance;
        let other = LiftedInstance::new(Graph::path(2), []).unwrap();
        let x = MulticutVector::all(&other, 0);
        assert!(matches!(is_feasible(&inst, &x), Err(Error::InvalidVector(_))));
    }

    #[test]
    fn parts_to_vectors() {
        let ex = fixtures::triangle();
        let inst = &ex.instance;
        let (a, b, c) = (ex.node("a"), ex.node("b"), ex.node("c"));
        assert_eq!(vector_from_parts(inst, &[vec![a, b, c]]).unwrap().values(), &[0, 0, 0]);
        assert_eq!(vector_from_parts(inst, &[]).unwrap().values(), &[1, 1, 1]);
        let x = vector_from_parts(inst, &[vec![a, b]]).unwrap();
        assert_eq!(x.at(inst, Edge::new(a, b)), 0);
        assert_eq!(x.at(inst, Edge::new(c, a)), 1);
        assert_eq!(x.at(inst, Edge::new(b, c)), 1);
        // {b, c} induces no edge of G
        assert!(matches!(
            vector_from_parts(inst, &[vec![b, c]]),
            Err(Error::InvalidParts(_))
        ));
        assert!(matches!(
            vector_from_parts(inst, &[vec![a, b], vec![b]]),
            Err(Error::InvalidParts(_))
        ));
    }

    #[test]
    fn single_edge_and_four_cycle_counts() {
        let single = LiftedInstance::new(Graph::path(2), []).unwrap();
        assert_eq!(enumerate_feasible(&single).unwrap().len(), 2);

        // u-a-w-b-u with F = {uw}; closed subsets of a 4-cycle: all but the
        // four 3-edge subsets, i.e. 16 - 4 = 12 decompositions
        let inst = fixtures::four_cycle_lifted().instance;
        let feasible = enumerate_feasible(&inst).unwrap();
        assert_eq!(feasible.len(), 12);
        let brute: Vec<MulticutVector> = (0u32..32)
            .map(|m| vec_of(&inst, &(0..5).map(|i| (m >> i & 1) as u8).collect::<Vec<_>>()))
            .filter(|x| is_feasible(&inst, x).unwrap())
            .collect();
        let mut brute = brute;
        brute.sort();
        assert_eq!(brute, feasible);
    }

    #[test]
    fn too_large_is_reported() {
        let inst = LiftedInstance::new(Graph::complete(5), []).unwrap();
        assert!(matches!(
            enumerate_feasible_with_bound(&inst, 5),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn brute_force_optimum_on_triangle() {
        let base = fixtures::triangle().instance;
        let cases: [([i64; 3], [u8; 3], i64); 3] = [
            ([1, 1, 1], [0, 0, 0], 0),
            ([-1, -1, -1], [1, 1, 1], -3),
            ([-1, 1, 1], [1, 0, 1], 0),
        ];
        for (costs, want, value) in cases {
            let inst = base.clone().with_integer_costs(&costs).unwrap();
            let (x, v) = solve_brute_force(&inst).unwrap();
            assert_eq!(x.values(), &want, "costs {costs:?}");
            assert_eq!(v, BigRational::from_integer(value.into()));
        }
        assert!(matches!(solve_brute_force(&base), Err(Error::NoObjective)));
    }

    #[test]
    fn cycle_witness_on_triangle() {
        let inst = LiftedInstance::new(Graph::complete(3), []).unwrap();
        // coords ab=01, ac=02, bc=12 ; cut only ab
        let x = vec_of(&inst, &[1, 0, 0]);
        let v = find_violated_constraint(&inst, &x).unwrap().unwrap();
        match &v {
            Violation::Cycle { cycle, edge } => {
                assert_eq!(*edge, Edge::new(0, 1));
                assert_eq!(cycle.len(), 3);
            }
            other => panic!("expected cycle witness, got {other:?}"),
        }
        v.verify(&inst, &x).unwrap();
    }

    #[test]
    fn path_witness_on_triangle() {
        let ex = fixtures::triangle();
        let inst = &ex.instance;
        let x = vec_of(inst, &[0, 0, 1]);
        let v = find_violated_constraint(inst, &x).unwrap().unwrap();
        let (a, b, c) = (ex.node("a"), ex.node("b"), ex.node("c"));
        assert_eq!(
            v,
            Violation::Path {
                lifted: Edge::new(b, c),
                path: NodePath::from_trusted(vec![b, a, c]),
            }
        );
        v.verify(inst, &x).unwrap();
    }

    #[test]
    fn cut_witness_on_triangle() {
        let inst = fixtures::triangle().instance;
        let x = vec_of(&inst, &[1, 1, 0]);
        let v = find_violated_constraint(&inst, &x).unwrap().unwrap();
        assert!(matches!(v, Violation::Cut { .. }));
        v.verify(&inst, &x).unwrap();
    }

    #[test]
    fn feasible_vectors_have_no_witness() {
        let inst = fixtures::four_cycle_lifted().instance;
        for x in enumerate_feasible(&inst).unwrap() {
            assert_eq!(find_violated_constraint(&inst, &x).unwrap(), None);
            decomposition_of(&inst, &x).unwrap();
        }
    }

    #[test]
    fn instance_validation() {
        assert!(LiftedInstance::new(Graph::new(3, [(0, 1)]).unwrap(), []).is_err());
        assert!(LiftedInstance::new(Graph::path(3), [(0, 1)]).is_err());
        assert!(LiftedInstance::new(Graph::path(3), [(0, 2), (2, 0)]).is_err());
        assert!(LiftedInstance::new(Graph::path(3), [(0, 3)]).is_err());
        assert!(LiftedInstance::new(Graph::path(3), [(0, 2)]).is_ok());
    }
}
