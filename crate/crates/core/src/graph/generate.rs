//! Graph families for exhaustive and randomized sweeps.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Edge, Graph};

/// Largest node count supported by [`canonical_code`] (pairs fit in a `u64`).
pub const MAX_CANONICAL_NODES: usize = 11;

fn pair_bit(a: usize, b: usize) -> u32 {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    (hi * (hi - 1) / 2 + lo) as u32
}

fn code_under(g: &Graph, perm: &[usize]) -> u64 {
    g.edges()
        .iter()
        .fold(0u64, |acc, e| acc | 1 << pair_bit(perm[e.lo()], perm[e.hi()]))
}

/// Isomorphism-invariant code: the minimum adjacency bit string over all
/// relabelings that respect a degree-refined ordering of the nodes.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.node_count();
    assert!(n <= MAX_CANONICAL_NODES, "canonical codes support at most {MAX_CANONICAL_NODES} nodes");
    let cells = refined_cells(g);

    let mut perm = vec![0; n];
    let mut best = u64::MAX;
    let mut offset = 0;
    let mut cell_perms: Vec<(usize, Vec<usize>)> = Vec::new();
    for cell in &cells {
        cell_perms.push((offset, cell.clone()));
        offset += cell.len();
    }
    permute_cells(g, &mut cell_perms, 0, &mut perm, &mut best);
    best
}

fn permute_cells(
    g: &Graph,
    cells: &mut [(usize, Vec<usize>)],
    idx: usize,
    perm: &mut Vec<usize>,
    best: &mut u64,
) {
    if idx == cells.len() {
        *best = (*best).min(code_under(g, perm));
        return;
    }
    let (offset, mut members) = cells[idx].clone();
    heap_permutations(&mut members, &mut |order| {
        for (k, &v) in order.iter().enumerate() {
            perm[v] = offset + k;
        }
        permute_cells(g, cells, idx + 1, perm, best);
    });
}

fn heap_permutations(items: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
    fn rec(k: usize, items: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
        if k <= 1 {
            visit(items);
            return;
        }
        for i in 0..k - 1 {
            rec(k - 1, items, visit);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
        rec(k - 1, items, visit);
    }
    let k = items.len();
    rec(k, items, visit);
}

/// Ordered partition of the nodes by iterated neighbourhood-colour refinement.
fn refined_cells(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.node_count();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let mut signature: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&x| colour[x]).collect();
                nb.sort_unstable();
                (colour[v], nb, v)
            })
            .collect();
        signature.sort();
        let mut next = vec![0; n];
        let mut c = 0;
        for i in 0..n {
            if i > 0 && (signature[i].0 != signature[i - 1].0 || signature[i].1 != signature[i - 1].1) {
                c += 1;
            }
            next[signature[i].2] = c;
        }
        let before = colour.iter().collect::<HashSet<_>>().len();
        let after = c + usize::from(n > 0);
        colour = next;
        if after == before {
            break;
        }
    }
    let classes = colour.iter().copied().max().map_or(0, |m| m + 1);
    let mut cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[colour[v]].push(v);
    }
    cells
}

/// One representative per isomorphism class of graphs on `n` nodes,
/// connected or not.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_CANONICAL_NODES);
    let mut layer = vec![Graph::empty(n.min(1))];
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    for size in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &layer {
            let new = size - 1;
            for mask in 0u32..(1 << new) {
                let mut edges: Vec<Edge> = g.edges().to_vec();
                edges.extend((0..new).filter(|&v| mask >> v & 1 == 1).map(|v| Edge::new(v, new)));
                let h = Graph::from_edges(size, edges).expect("extension is simple");
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        layer = next;
    }
    layer
}

pub fn connected_nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    nonisomorphic_graphs(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

/// Every connected graph on the labelled node set `0..n`.
pub fn labelled_connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "too many labelled graphs");
    let pairs: Vec<Edge> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| Edge::new(a, b)))
        .collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("simple")
        })
        .filter(Graph::is_connected)
        .collect()
}

/// Connected graph on `n` nodes: a random spanning tree plus each remaining
/// pair independently with probability `p`.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = HashSet::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.insert(Edge::new(parent, order[i]));
    }
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.insert(Edge::new(a, b));
            }
        }
    }
    Graph::from_edges(n, edges.into_iter().collect()).expect("random graph is simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequences() {
        // graphs / connected graphs on n unlabeled nodes
        let all = [1, 2, 4, 11, 34, 156];
        let connected = [1, 1, 2, 6, 21, 112];
        for n in 1..=6 {
            assert_eq!(nonisomorphic_graphs(n).len(), all[n - 1], "n={n}");
            assert_eq!(connected_nonisomorphic_graphs(n).len(), connected[n - 1], "n={n}");
        }
    }

    #[test]
    fn labelled_connected_counts() {
        for (n, &count) in [1, 1, 4, 38, 728].iter().enumerate() {
            assert_eq!(labelled_connected_graphs(n + 1).len(), count, "n={}", n + 1);
        }
    }

    #[test]
    fn canonical_code_is_relabeling_invariant() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        let h = Graph::new(5, [(4, 3), (3, 2), (2, 1), (3, 0)]).unwrap();
        assert_eq!(canonical_code(&g), canonical_code(&h));
        assert_ne!(canonical_code(&g), canonical_code(&Graph::path(5)));
    }

    #[test]
    fn random_graphs_are_connected() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 1..9 {
            assert!(random_connected_graph(n, 0.3, &mut rng).is_connected());
        }
    }
}
