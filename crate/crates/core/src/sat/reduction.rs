//! 3-SAT to `f_d`-path existence.
//!
//! Node numbering: `u`, the clause layers (literal order within a clause),
//! `d1`, then `d2`, the variable layers (`x_k` before `¬x_k`), `w`, `w'`.
//! `G1` spans `u..=d1` and `G2` spans `d2..=w'`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{brute_force_sat, literal_value, Cnf3, Literal};
use crate::cut_facet::{find_fd_path, is_fd_path, FCut};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Node, NodePath};
use crate::multicut::LiftedInstance;

/// Fresh labels of the auxiliary nodes; never complementary to anything.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AuxLabel {
    U,
    D1,
    D2,
    W,
    WPrime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    Literal(Literal),
    Aux(AuxLabel),
}

impl Label {
    /// Whether `self = ¬other`.
    pub fn complements(self, other: Label) -> bool {
        matches!((self, other), (Label::Literal(a), Label::Literal(b)) if a == -b)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Literal(l) if *l > 0 => write!(f, "x{l}"),
            Label::Literal(l) => write!(f, "-x{}", -l),
            Label::Aux(a) => f.write_str(match a {
                AuxLabel::U => "u",
                AuxLabel::D1 => "d1",
                AuxLabel::D2 => "d2",
                AuxLabel::W => "w",
                AuxLabel::WPrime => "w'",
            }),
        }
    }
}

impl std::str::FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let aux = match s {
            "u" => Some(AuxLabel::U),
            "d1" => Some(AuxLabel::D1),
            "d2" => Some(AuxLabel::D2),
            "w" => Some(AuxLabel::W),
            "w'" => Some(AuxLabel::WPrime),
            _ => None,
        };
        if let Some(a) = aux {
            return Ok(Label::Aux(a));
        }
        let (sign, rest) = match s.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, s),
        };
        rest.strip_prefix('x')
            .and_then(|k| k.parse::<Literal>().ok())
            .filter(|&k| k > 0)
            .map(|k| Label::Literal(sign * k))
            .ok_or_else(|| Error::Parse(format!("bad node label {s:?}")))
    }
}

impl Serialize for Label {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    G1,
    G2,
}

/// The gadget built by [`reduce`].
#[derive(Clone, Debug)]
pub struct ReductionInstance {
    pub cnf: Cnf3,
    pub instance: LiftedInstance,
    pub cut: FCut,
    /// The edge `d1d2`.
    pub d: Edge,
    pub labels: Vec<Label>,
    /// Side and layer index of each node.
    pub layers: Vec<(Side, usize)>,
}

impl ReductionInstance {
    pub fn u(&self) -> Node {
        0
    }

    pub fn d1(&self) -> Node {
        3 * self.cnf.clauses().len() + 1
    }

    pub fn d2(&self) -> Node {
        self.d1() + 1
    }

    pub fn w(&self) -> Node {
        self.d2() + 2 * self.cnf.num_vars() + 1
    }

    pub fn w_prime(&self) -> Node {
        self.w() + 1
    }

    /// Nodes of one layer in ascending order.
    pub fn layer(&self, side: Side, index: usize) -> Vec<Node> {
        (0..self.labels.len())
            .filter(|&v| self.layers[v] == (side, index))
            .collect()
    }

    pub fn side(&self, v: Node) -> Side {
        self.layers[v].0
    }
}

/// Builds the gadget: `G1` has `m + 2` layers with complete bipartite joins
/// between consecutive ones, `G2` has `n + 3` layers likewise plus `w'`
/// joined to every `G2` node except `d2`. The cut `δ` holds `d1d2`, `d1w'`
/// and every `G1`-`G2` pair with complementary labels; `F = {uw}`.
pub fn reduce(cnf: &Cnf3) -> Result<ReductionInstance> {
    let cnf = Cnf3::new(cnf.num_vars(), cnf.clauses().to_vec())?;
    let m = cnf.clauses().len();
    let n = cnf.num_vars();

    let mut labels = vec![Label::Aux(AuxLabel::U)];
    let mut layers = vec![(Side::G1, 0)];
    for (j, clause) in cnf.clauses().iter().enumerate() {
        for &lit in clause {
            labels.push(Label::Literal(lit));
            layers.push((Side::G1, j + 1));
        }
    }
    labels.push(Label::Aux(AuxLabel::D1));
    layers.push((Side::G1, m + 1));
    labels.push(Label::Aux(AuxLabel::D2));
    layers.push((Side::G2, 0));
    for k in 1..=n {
        let k = k as Literal;
        labels.extend([Label::Literal(k), Label::Literal(-k)]);
        layers.extend([(Side::G2, k as usize), (Side::G2, k as usize)]);
    }
    labels.push(Label::Aux(AuxLabel::W));
    layers.push((Side::G2, n + 1));
    labels.push(Label::Aux(AuxLabel::WPrime));
    layers.push((Side::G2, n + 2));

    let size = labels.len();
    let mut edges = Vec::new();
    for a in 0..size {
        for b in a + 1..size {
            let ((sa, la), (sb, lb)) = (layers[a], layers[b]);
            if sa == sb && lb == la + 1 {
                edges.push(Edge::new(a, b));
            }
        }
    }
    let d1 = 3 * m + 1;
    let d2 = d1 + 1;
    let w = d2 + 2 * n + 1;
    let w_prime = w + 1;
    // w' to every G2 node but d2; w-w' is already a layer join
    edges.extend((d2 + 1..w).map(|v| Edge::new(v, w_prime)));

    let mut delta = vec![Edge::new(d1, d2), Edge::new(d1, w_prime)];
    for s in 0..=d1 {
        for t in d2..size {
            if labels[s].complements(labels[t]) {
                delta.push(Edge::new(s, t));
            }
        }
    }
    edges.extend(delta.iter().copied());

    let graph = Graph::from_edges(size, edges)?;
    let instance = LiftedInstance::new(graph, [(0, w)])?;
    let cut = FCut::new(&instance, Edge::new(0, w), delta)?;
    Ok(ReductionInstance {
        cnf,
        instance,
        cut,
        d: Edge::new(d1, d2),
        labels,
        layers,
    })
}

/// `φ(x_k)` is true exactly when the path visits a `G1` node labelled `x_k`.
pub fn assignment_from_path(r: &ReductionInstance, path: &NodePath) -> Result<Vec<bool>> {
    if !is_fd_path(&r.instance, &r.cut, r.d, path.nodes()) {
        return Err(Error::InvalidCertificate(format!(
            "{:?} is not an f_d-path for d = {}",
            path.nodes(),
            r.d
        )));
    }
    let mut phi = vec![false; r.cnf.num_vars()];
    for &v in path.nodes() {
        if let (Side::G1, Label::Literal(lit)) = (r.side(v), r.labels[v]) {
            if lit > 0 {
                phi[lit as usize - 1] = true;
            }
        }
    }
    Ok(phi)
}

/// The canonical `f_d`-path of a satisfying assignment: the first true node
/// of each clause layer, then the true node of each variable layer.
pub fn path_from_assignment(r: &ReductionInstance, phi: &[bool]) -> Result<NodePath> {
    if !r.cnf.is_satisfied_by(phi) {
        return Err(Error::InvalidAssignment(format!(
            "{phi:?} does not satisfy {}",
            r.cnf
        )));
    }
    let is_true = |v: Node| matches!(r.labels[v], Label::Literal(l) if literal_value(l, phi));
    let mut nodes = vec![r.u()];
    for j in 1..=r.cnf.clauses().len() {
        nodes.push(*r.layer(Side::G1, j).iter().find(|&&v| is_true(v)).expect("clause satisfied"));
    }
    nodes.extend([r.d1(), r.d2()]);
    for k in 1..=r.cnf.num_vars() {
        nodes.push(*r.layer(Side::G2, k).iter().find(|&&v| is_true(v)).expect("one literal true"));
    }
    nodes.push(r.w());
    debug_assert!(is_fd_path(&r.instance, &r.cut, r.d, &nodes));
    Ok(NodePath::from_trusted(nodes))
}

/// Outcome of [`verify_reduction`].
#[derive(Clone, Debug, Serialize)]
pub struct ReductionReport {
    pub satisfiable: bool,
    /// `f_d`-path for `d = d1d2` found by search.
    pub d_path: Option<NodePath>,
    /// Satisfiable exactly when `d_path` exists.
    pub equivalence: bool,
    /// A found path maps to a satisfying assignment, and the oracle's
    /// assignment maps to a valid path.
    pub certificates: bool,
    /// Edges `d' ≠ d` of `δ` without an `f_{d'}`-path.
    pub missing_paths: Vec<Edge>,
    pub passed: bool,
}

impl fmt::Display for ReductionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "satisfiable: {}; f_d-path for d1d2: {}",
            self.satisfiable,
            if self.d_path.is_some() { "found" } else { "none" }
        )?;
        if !self.missing_paths.is_empty() {
            let parts: Vec<String> = self.missing_paths.iter().map(Edge::to_string).collect();
            writeln!(f, "no f_d'-path for: {}", parts.join(", "))?;
        }
        write!(f, "{}", if self.passed { "pass" } else { "FAIL" })
    }
}

/// Checks that SAT holds exactly when an `f_d`-path exists for `d1d2`, that
/// certificates translate both ways, and that every other cut edge has a
/// path regardless.
pub fn verify_reduction(cnf: &Cnf3) -> Result<ReductionReport> {
    let r = reduce(cnf)?;
    let solution = brute_force_sat(&r.cnf)?;
    let d_path = find_fd_path(&r.instance, &r.cut, r.d)?;
    let equivalence = solution.is_some() == d_path.is_some();
    let mut certificates = true;
    if let Some(p) = &d_path {
        certificates &= r.cnf.is_satisfied_by(&assignment_from_path(&r, p)?);
    }
    if let Some(phi) = &solution {
        let p = path_from_assignment(&r, phi)?;
        certificates &= is_fd_path(&r.instance, &r.cut, r.d, p.nodes());
    }
    let mut missing_paths = Vec::new();
    for &e in r.cut.delta().iter().filter(|&&e| e != r.d) {
        if find_fd_path(&r.instance, &r.cut, e)?.is_none() {
            missing_paths.push(e);
        }
    }
    let passed = equivalence && certificates && missing_paths.is_empty();
    Ok(ReductionReport {
        satisfiable: solution.is_some(),
        d_path,
        equivalence,
        certificates,
        missing_paths,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::tests::all_eight;

    fn clause_example() -> ReductionInstance {
        reduce(&Cnf3::new(3, vec![[-1, 2, 3]]).unwrap()).unwrap()
    }

    #[test]
    fn clause_example_shape() {
        let r = clause_example();
        assert_eq!(r.instance.node_count(), 14);
        assert_eq!((0..14).filter(|&v| r.side(v) == Side::G1).count(), 5);
        let delta: Vec<(usize, usize)> = r.cut.delta().iter().map(|e| e.endpoints()).collect();
        assert_eq!(delta, [(1, 6), (2, 9), (3, 11), (4, 5), (4, 13)]);
        assert_eq!(r.instance.lifted(), &[Edge::new(0, 12)]);
        assert_eq!(r.d, Edge::new(4, 5));
        assert!(r.instance.graph().is_connected());
        // w' is joined to everything in G2 except d2
        let g = r.instance.graph();
        assert_eq!(g.neighbors(13), &[4, 6, 7, 8, 9, 10, 11, 12]);
    }

    #[test]
    fn drawn_path_gives_assignment_fft() {
        let r = clause_example();
        let drawn = NodePath::new(r.instance.graph(), vec![0, 3, 4, 5, 6, 9, 10, 12]).unwrap();
        assert!(is_fd_path(&r.instance, &r.cut, r.d, drawn.nodes()));
        assert_eq!(assignment_from_path(&r, &drawn).unwrap(), [false, false, true]);
    }

    #[test]
    fn canonical_path_for_assignment_fft() {
        let r = clause_example();
        let p = path_from_assignment(&r, &[false, false, true]).unwrap();
        assert_eq!(p.nodes(), [0, 1, 4, 5, 7, 9, 10, 12]);
        assert!(is_fd_path(&r.instance, &r.cut, r.d, p.nodes()));
        assert!(matches!(
            path_from_assignment(&r, &[true, false, false]),
            Err(Error::InvalidAssignment(_))
        ));
    }

    #[test]
    fn all_true_positive_clause() {
        let r = reduce(&Cnf3::new(3, vec![[1, 2, 3]]).unwrap()).unwrap();
        let p = path_from_assignment(&r, &[true, true, true]).unwrap();
        assert_eq!(p.nodes(), [0, 1, 4, 5, 6, 8, 10, 12]);
        assert_eq!(assignment_from_path(&r, &p).unwrap(), [true, false, false]);
    }

    #[test]
    fn tautological_clause() {
        let r = reduce(&Cnf3::new(2, vec![[1, -1, 2]]).unwrap()).unwrap();
        for phi in [[false, false], [true, false], [false, true], [true, true]] {
            let p = path_from_assignment(&r, &phi).unwrap();
            assert!(is_fd_path(&r.instance, &r.cut, r.d, p.nodes()));
        }
    }

    #[test]
    fn non_path_certificate_is_rejected() {
        let r = clause_example();
        let p = NodePath::from_trusted(vec![0, 1, 4, 13, 12]);
        assert!(matches!(assignment_from_path(&r, &p), Err(Error::InvalidCertificate(_))));
    }

    #[test]
    fn verification_passes() {
        let report = verify_reduction(&Cnf3::new(3, vec![[-1, 2, 3]]).unwrap()).unwrap();
        assert!(report.satisfiable && report.passed);
        let report = verify_reduction(&all_eight()).unwrap();
        assert!(!report.satisfiable && report.d_path.is_none() && report.passed);
    }

    #[test]
    fn labels_round_trip() {
        for s in ["u", "d1", "d2", "w", "w'", "x3", "-x12"] {
            assert_eq!(s.parse::<Label>().unwrap().to_string(), s);
        }
        assert!("x0".parse::<Label>().is_err());
        assert!("y1".parse::<Label>().is_err());
    }
}
