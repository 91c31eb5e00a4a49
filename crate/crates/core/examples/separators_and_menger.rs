//! Cut-nodes, the auxiliary graph, Menger's theorem and the parity of
//! separator cycles on a small graph.

use liftcut::graph::{
    auxiliary_graph, max_disjoint_paths, min_proper_separator, min_separator_flow, proper_cut_nodes,
};
use liftcut::{find_odd_separator_cycle, Graph};

fn main() -> liftcut::Result<()> {
    // two diamonds joined at node 3: 0 = {1, 2} = 3 = {4, 5} = 6
    let g = Graph::new(
        7,
        [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6), (1, 2)],
    )?;
    let (u, w) = (0, 6);
    println!("proper cut-nodes between {u} and {w}: {:?}", proper_cut_nodes(&g, u, w)?);

    let aux = auxiliary_graph(&g, u, w)?;
    println!(
        "auxiliary graph: {} nodes, {} edges, removed {:?}",
        aux.graph.node_count(),
        aux.graph.edge_count(),
        aux.removed
    );

    for (a, b) in [(0, 3), (0, 6), (1, 6)] {
        println!(
            "{a}-{b}: {} disjoint paths, smallest separator {} {:?}",
            max_disjoint_paths(&g, a, b)?,
            min_proper_separator(&g, a, b)?,
            min_separator_flow(&g, a, b)
        );
    }
    println!("odd separator cycle: {:?}", find_odd_separator_cycle(&g, u, w)?);
    Ok(())
}
