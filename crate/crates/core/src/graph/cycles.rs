//! Exhaustive path and cycle enumeration. Exponential; desk-scale only.

use super::{Graph, Node};

/// All simple `source`-`target` paths, each as a node sequence, in DFS order
/// with ascending neighbours.
pub fn simple_paths(g: &Graph, source: Node, target: Node) -> Vec<Vec<Node>> {
    let mut out = Vec::new();
    let mut on_path = vec![false; g.node_count()];
    let mut path = vec![source];
    on_path[source] = true;
    extend_paths(g, target, &mut path, &mut on_path, &mut out);
    out
}

fn extend_paths(
    g: &Graph,
    target: Node,
    path: &mut Vec<Node>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<Node>>,
) {
    let last = *path.last().unwrap();
    if last == target {
        out.push(path.clone());
        return;
    }
    for &n in g.neighbors(last) {
        if on_path[n] {
            continue;
        }
        on_path[n] = true;
        path.push(n);
        extend_paths(g, target, path, on_path, out);
        path.pop();
        on_path[n] = false;
    }
}

/// Every simple cycle of `g` exactly once. A cycle is reported starting at
/// its smallest node, with the second node smaller than the last.
pub fn simple_cycles(g: &Graph) -> Vec<Vec<Node>> {
    let mut out = Vec::new();
    let mut on_path = vec![false; g.node_count()];
    for start in g.nodes() {
        let mut path = vec![start];
        on_path[start] = true;
        extend_cycles(g, start, &mut path, &mut on_path, &mut out);
        on_path[start] = false;
    }
    out
}

fn extend_cycles(
    g: &Graph,
    start: Node,
    path: &mut Vec<Node>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<Node>>,
) {
    let last = *path.last().unwrap();
    for &n in g.neighbors(last) {
        if n == start && path.len() >= 3 && path[1] < last {
            out.push(path.clone());
        }
        if n <= start || on_path[n] {
            continue;
        }
        on_path[n] = true;
        path.push(n);
        extend_cycles(g, start, path, on_path, out);
        path.pop();
        on_path[n] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_of_complete_graph() {
        // K4: four triangles and three 4-cycles
        let cycles = simple_cycles(&Graph::complete(4));
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 3);
    }

    #[test]
    fn trees_have_no_cycles() {
        assert!(simple_cycles(&Graph::path(6)).is_empty());
    }

    #[test]
    fn paths_in_four_cycle() {
        let g = Graph::cycle(4);
        assert_eq!(simple_paths(&g, 0, 2), vec![vec![0, 1, 2], vec![0, 3, 2]]);
    }
}
