//! Internally node-disjoint paths and minimum proper separators.
//!
//! Two independent routes for each quantity: exhaustive search for small
//! graphs and unit-node-capacity max-flow for larger ones. Menger's theorem
//! says the path count and the separator size agree, which the tests check
//! across both routes.

use std::collections::VecDeque;

use super::{separator::separates, Graph, Node};
use crate::error::{Error, Result};

/// Graphs with at most this many nodes use exhaustive search.
pub const EXHAUSTIVE_NODE_LIMIT: usize = 10;

const SEPARATOR_SUBSET_LIMIT: usize = 18;

fn check_query(g: &Graph, u: Node, w: Node) -> Result<()> {
    g.check_node(u)?;
    g.check_node(w)?;
    if u == w {
        return Err(Error::InvalidQuery(format!("u and w coincide ({u})")));
    }
    if g.has_edge(u, w) {
        return Err(Error::InvalidQuery(format!(
            "{u} and {w} are adjacent; proper separators do not exist"
        )));
    }
    Ok(())
}

/// Maximum number of internally node-disjoint `u`-`w` paths.
pub fn max_disjoint_paths(g: &Graph, u: Node, w: Node) -> Result<usize> {
    check_query(g, u, w)?;
    Ok(if g.node_count() > EXHAUSTIVE_NODE_LIMIT {
        disjoint_paths_flow(g, u, w)
    } else {
        disjoint_paths_exhaustive(g, u, w)
    })
}

/// Size of a minimum proper `u`-`w` separator.
pub fn min_proper_separator(g: &Graph, u: Node, w: Node) -> Result<usize> {
    check_query(g, u, w)?;
    Ok(if g.node_count() <= SEPARATOR_SUBSET_LIMIT {
        min_separator_exhaustive(g, u, w).len()
    } else {
        min_separator_flow(g, u, w).len()
    })
}

/// Backtracking over path families. Each family is built in increasing order
/// of the paths' first hop, so every family is visited once.
pub fn disjoint_paths_exhaustive(g: &Graph, u: Node, w: Node) -> usize {
    let mut used = vec![false; g.node_count()];
    used[u] = true;
    let bound = g.degree(u).min(g.degree(w));
    let mut best = 0;
    grow_family(g, u, w, &mut used, 0, 0, bound, &mut best);
    best
}

#[allow(clippy::too_many_arguments)]
fn grow_family(
    g: &Graph,
    u: Node,
    w: Node,
    used: &mut Vec<bool>,
    first_hop_from: usize,
    count: usize,
    bound: usize,
    best: &mut usize,
) {
    *best = (*best).max(count);
    if *best >= bound {
        return;
    }
    let hops = g.neighbors(u);
    for (i, &a) in hops.iter().enumerate().skip(first_hop_from) {
        if *best >= bound || count + (hops.len() - i) <= *best {
            return;
        }
        if used[a] {
            continue;
        }
        // every simple a-w path through unused nodes extends the family
        let mut path = vec![a];
        used[a] = true;
        for_each_path(g, w, used, &mut path, &mut |used: &mut Vec<bool>| {
            grow_family(g, u, w, used, i + 1, count + 1, bound, best);
        });
        used[a] = false;
    }
}

fn for_each_path(
    g: &Graph,
    w: Node,
    used: &mut Vec<bool>,
    path: &mut Vec<Node>,
    visit: &mut dyn FnMut(&mut Vec<bool>),
) {
    let last = *path.last().unwrap();
    for &n in g.neighbors(last) {
        if n == w {
            visit(used);
        } else if !used[n] {
            used[n] = true;
            path.push(n);
            for_each_path(g, w, used, path, visit);
            path.pop();
            used[n] = false;
        }
    }
}

/// A minimum proper separator by subsets of increasing size.
pub fn min_separator_exhaustive(g: &Graph, u: Node, w: Node) -> Vec<Node> {
    let inner: Vec<Node> = g.nodes().filter(|&v| v != u && v != w).collect();
    let mut blocked = vec![false; g.node_count()];
    for size in 0..=inner.len() {
        let mut found = None;
        for_each_subset(&inner, size, &mut Vec::new(), 0, &mut |subset| {
            if found.is_some() {
                return;
            }
            for &v in subset {
                blocked[v] = true;
            }
            if separates(g, u, w, &blocked) {
                found = Some(subset.to_vec());
            }
            for &v in subset {
                blocked[v] = false;
            }
        });
        if let Some(s) = found {
            return s;
        }
    }
    unreachable!("the set of all inner nodes separates non-adjacent u and w")
}

fn for_each_subset(
    items: &[Node],
    size: usize,
    chosen: &mut Vec<Node>,
    from: usize,
    visit: &mut dyn FnMut(&[Node]),
) {
    if chosen.len() == size {
        visit(chosen);
        return;
    }
    for i in from..items.len() {
        if items.len() - i < size - chosen.len() {
            break;
        }
        chosen.push(items[i]);
        for_each_subset(items, size, chosen, i + 1, visit);
        chosen.pop();
    }
}

/// Unit node-capacity flow network: node `v` becomes `2v -> 2v+1`.
struct SplitNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<usize>,
}

impl SplitNetwork {
    fn new(g: &Graph, u: Node, w: Node) -> Self {
        let mut net = SplitNetwork {
            head: vec![Vec::new(); 2 * g.node_count()],
            to: Vec::new(),
            cap: Vec::new(),
        };
        let big = g.node_count();
        for v in g.nodes() {
            let c = if v == u || v == w { big } else { 1 };
            net.arc(2 * v, 2 * v + 1, c);
        }
        for e in g.edges() {
            let (a, b) = e.endpoints();
            net.arc(2 * a + 1, 2 * b, big);
            net.arc(2 * b + 1, 2 * a, big);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: usize) {
        self.head[from].push(self.to.len());
        self.to.push(to);
        self.cap.push(cap);
        self.head[to].push(self.to.len());
        self.to.push(from);
        self.cap.push(0);
    }

    /// Edmonds-Karp; every augmenting path carries one unit.
    fn max_flow(&mut self, source: usize, sink: usize) -> usize {
        let mut flow = 0;
        loop {
            let mut via = vec![usize::MAX; self.head.len()];
            let mut seen = vec![false; self.head.len()];
            seen[source] = true;
            let mut queue = VecDeque::from([source]);
            while let Some(x) = queue.pop_front() {
                for &a in &self.head[x] {
                    let y = self.to[a];
                    if self.cap[a] > 0 && !seen[y] {
                        seen[y] = true;
                        via[y] = a;
                        queue.push_back(y);
                    }
                }
            }
            if !seen[sink] {
                return flow;
            }
            let mut x = sink;
            while x != source {
                let a = via[x];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                x = self.to[a ^ 1];
            }
            flow += 1;
        }
    }

    fn residual_reach(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[source] = true;
        let mut stack = vec![source];
        while let Some(x) = stack.pop() {
            for &a in &self.head[x] {
                let y = self.to[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }
}

pub fn disjoint_paths_flow(g: &Graph, u: Node, w: Node) -> usize {
    SplitNetwork::new(g, u, w).max_flow(2 * u + 1, 2 * w)
}

/// Minimum proper separator read off the residual network of a max flow.
pub fn min_separator_flow(g: &Graph, u: Node, w: Node) -> Vec<Node> {
    let mut net = SplitNetwork::new(g, u, w);
    net.max_flow(2 * u + 1, 2 * w);
    let reach = net.residual_reach(2 * u + 1);
    g.nodes()
        .filter(|&v| v != u && v != w && reach[2 * v] && !reach[2 * v + 1])
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_separator;

    fn k4_minus_edge() -> Graph {
        // K4 on {0,1,2,3} without 0-3
        Graph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn path_counts() {
        let p = Graph::path(3);
        assert_eq!(max_disjoint_paths(&p, 0, 2).unwrap(), 1);
        assert_eq!(min_proper_separator(&p, 0, 2).unwrap(), 1);
        let c = Graph::cycle(4);
        assert_eq!(max_disjoint_paths(&c, 0, 2).unwrap(), 2);
        assert_eq!(min_proper_separator(&c, 0, 2).unwrap(), 2);
        let k = k4_minus_edge();
        assert_eq!(max_disjoint_paths(&k, 0, 3).unwrap(), 2);
    }

    #[test]
    fn disconnected_pair_needs_empty_separator() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(min_proper_separator(&g, 0, 3).unwrap(), 0);
        assert_eq!(max_disjoint_paths(&g, 0, 3).unwrap(), 0);
    }

    #[test]
    fn adjacent_pair_is_rejected() {
        let g = Graph::path(2);
        assert!(matches!(
            max_disjoint_paths(&g, 0, 1),
            Err(Error::InvalidQuery(_))
        ));
        assert!(min_proper_separator(&g, 0, 1).is_err());
    }

    #[test]
    fn flow_separator_is_a_separator() {
        let g = Graph::new(
            7,
            [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6), (1, 5)],
        )
        .unwrap();
        let s = min_separator_flow(&g, 0, 6);
        assert!(is_separator(&g, 0, 6, &s).unwrap());
        assert_eq!(s.len(), min_separator_exhaustive(&g, 0, 6).len());
        assert_eq!(disjoint_paths_flow(&g, 0, 6), disjoint_paths_exhaustive(&g, 0, 6));
    }

    #[test]
    fn large_graph_uses_flow() {
        // wheel-like ladder on 14 nodes: two rails of 6 plus endpoints
        let mut edges = vec![];
        for i in 1..6 {
            edges.push((i, i + 1));
            edges.push((i + 6, i + 7));
            edges.push((i, i + 6));
        }
        edges.extend([(0, 1), (0, 7), (6, 13), (12, 13)]);
        let g = Graph::new(14, edges).unwrap();
        assert_eq!(max_disjoint_paths(&g, 0, 13).unwrap(), 2);
        assert_eq!(min_proper_separator(&g, 0, 13).unwrap(), 2);
    }
}
