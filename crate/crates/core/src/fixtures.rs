//! Small named instances used throughout the tests, the examples and the CLI.
//!
//! Node ids follow the order of the `names` list of each instance.

use crate::graph::{Edge, Graph, Node};
use crate::multicut::LiftedInstance;

/// An instance whose nodes carry human-readable names.
#[derive(Clone, Debug)]
pub struct NamedInstance {
    pub instance: LiftedInstance,
    pub names: Vec<&'static str>,
}

impl NamedInstance {
    fn build(names: &[&'static str], edges: &[(&str, &str)], lifted: &[(&str, &str)]) -> Self {
        let id = |name: &str| {
            names
                .iter()
                .position(|&n| n == name)
                .unwrap_or_else(|| panic!("unknown node {name}"))
        };
        let graph = Graph::new(names.len(), edges.iter().map(|&(a, b)| (id(a), id(b))))
            .expect("fixture graph is simple");
        let instance = LiftedInstance::new(graph, lifted.iter().map(|&(a, b)| (id(a), id(b))))
            .expect("fixture instance is valid");
        NamedInstance {
            instance,
            names: names.to_vec(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.instance.graph()
    }

    pub fn node(&self, name: &str) -> Node {
        self.names
            .iter()
            .position(|&n| n == name)
            .unwrap_or_else(|| panic!("unknown node {name}"))
    }

    pub fn name(&self, v: Node) -> &'static str {
        self.names[v]
    }

    pub fn edge(&self, a: &str, b: &str) -> Edge {
        Edge::new(self.node(a), self.node(b))
    }

    pub fn nodes(&self, names: &[&str]) -> Vec<Node> {
        names.iter().map(|n| self.node(n)).collect()
    }

    pub fn names_of(&self, nodes: &[Node]) -> Vec<&'static str> {
        nodes.iter().map(|&v| self.name(v)).collect()
    }
}

/// Triangle with `E = {ab, ca}` and the lifted pair `f = bc`. Coordinates in
/// order `(ab, ca, bc)`.
pub fn triangle() -> NamedInstance {
    NamedInstance::build(&["a", "b", "c"], &[("a", "b"), ("c", "a")], &[("b", "c")])
}

/// Four-cycle `u-a-w-b-u` with `F = {uw}`.
pub fn four_cycle_lifted() -> NamedInstance {
    NamedInstance::build(
        &["u", "a", "w", "b"],
        &[("u", "a"), ("a", "w"), ("w", "b"), ("b", "u")],
        &[("u", "w")],
    )
}

/// Lower box `0 ≤ x_uw` fails through a path of separators from `u` to `w`:
/// `u v0 v1 v2 v3 v4 w`.
pub fn box_path_violation() -> NamedInstance {
    NamedInstance::build(
        &["u", "v0", "v1", "v2", "v3", "v4", "v5", "w", "u1", "u3"],
        &[
            ("u", "v0"),
            ("u", "u1"),
            ("u1", "v1"),
            ("v1", "v3"),
            ("v0", "v2"),
            ("v0", "v1"),
            ("v4", "v5"),
            ("v2", "v4"),
            ("v3", "v5"),
            ("v4", "w"),
            ("v5", "u3"),
            ("u3", "w"),
        ],
        &[("v2", "v3"), ("v1", "v2"), ("v3", "v4"), ("u", "w")],
    )
}

const LADDER_NODES: [&str; 12] = [
    "u", "v0", "v1", "v2", "v3", "v4", "v5", "w", "u0", "u1", "u2", "u3",
];

const LADDER_EDGES: [(&str, &str); 14] = [
    ("u", "u0"),
    ("u0", "v0"),
    ("u", "u1"),
    ("u1", "v1"),
    ("v1", "v3"),
    ("v0", "v2"),
    ("v0", "v1"),
    ("v4", "v5"),
    ("v2", "v4"),
    ("v3", "v5"),
    ("v4", "u2"),
    ("u2", "w"),
    ("v5", "u3"),
    ("u3", "w"),
];

/// Lower box `0 ≤ x_uw` fails through the six-cycle of separators
/// `v0 v1 v2 v3 v4 v5`.
pub fn box_cycle_violation() -> NamedInstance {
    NamedInstance::build(
        &LADDER_NODES,
        &LADDER_EDGES,
        &[
            ("v2", "v3"),
            ("v1", "v2"),
            ("v3", "v4"),
            ("v5", "v0"),
            ("u", "w"),
        ],
    )
}

/// The six-cycle instance without the closing lifted pair `v5v0`; here
/// `0 ≤ x_uw` is a facet and the separator layers are
/// `{v0v1, v4v5}, {v1v2, v3v4}, {v2v3}`.
pub fn box_facet_ladder() -> NamedInstance {
    NamedInstance::build(
        &LADDER_NODES,
        &LADDER_EDGES,
        &[("v2", "v3"), ("v1", "v2"), ("v3", "v4"), ("u", "w")],
    )
}

/// Graph with two proper `uw`-cut-nodes `c1`, `c2`.
pub fn auxiliary_example() -> NamedInstance {
    NamedInstance::build(
        &["u", "v0", "c1", "c2", "v2", "v3", "w"],
        &[
            ("u", "c1"),
            ("c1", "c2"),
            ("c1", "v0"),
            ("c2", "v2"),
            ("v2", "w"),
            ("c2", "v3"),
            ("v3", "w"),
        ],
        &[],
    )
}

/// [`auxiliary_example`] with `c1`, `c2` removed and their neighbourhoods
/// joined, written with the surviving node names.
pub fn auxiliary_example_reduced() -> NamedInstance {
    NamedInstance::build(
        &["u", "v0", "v2", "v3", "w"],
        &[
            ("u", "v0"),
            ("u", "v2"),
            ("u", "v3"),
            ("v0", "v2"),
            ("v0", "v3"),
            ("v2", "v3"),
            ("v2", "w"),
            ("v3", "w"),
        ],
        &[],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        assert_eq!(triangle().instance.dimension(), 3);
        assert_eq!(four_cycle_lifted().instance.dimension(), 5);
        assert_eq!(box_path_violation().instance.dimension(), 16);
        assert_eq!(box_cycle_violation().instance.dimension(), 19);
        assert_eq!(box_facet_ladder().instance.dimension(), 18);
        assert_eq!(auxiliary_example().graph().edge_count(), 7);
    }

    #[test]
    fn triangle_coordinate_order() {
        let t = triangle();
        assert_eq!(
            t.instance.coords(),
            &[t.edge("a", "b"), t.edge("c", "a"), t.edge("b", "c")]
        );
    }
}
