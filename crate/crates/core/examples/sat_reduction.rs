//! The 3-SAT gadget for the single clause `¬x1 ∨ x2 ∨ x3` and for an
//! unsatisfiable formula.

use liftcut::cut_facet::is_fd_path;
use liftcut::sat::{assignment_from_path, path_from_assignment};
use liftcut::{brute_force_sat, parse_dimacs, reduce, verify_reduction, Cnf3, NodePath};

fn main() -> liftcut::Result<()> {
    let cnf = parse_dimacs("c one clause\np cnf 3 1\n-1 2 3 0\n")?;
    let r = reduce(&cnf)?;
    println!("{cnf}: {} nodes, f = {}, d = {}", r.instance.node_count(), r.cut.f(), r.d);
    for v in 0..r.instance.node_count() {
        let (side, layer) = r.layers[v];
        println!("  {v:>2} {:<3} {side:?} layer {layer}", r.labels[v].to_string());
    }
    let delta: Vec<String> = r.cut.delta().iter().map(ToString::to_string).collect();
    println!("delta = {{{}}}", delta.join(", "));

    let drawn = NodePath::new(r.instance.graph(), vec![0, 3, 4, 5, 6, 9, 10, 12])?;
    println!(
        "path {:?}: f_d-path {}, assignment {:?}",
        drawn.nodes(),
        is_fd_path(&r.instance, &r.cut, r.d, drawn.nodes()),
        assignment_from_path(&r, &drawn)?
    );
    let canonical = path_from_assignment(&r, &[false, false, true])?;
    println!("canonical path for (F, F, T): {:?}", canonical.nodes());
    println!("{}", verify_reduction(&cnf)?);

    let every_sign: Vec<[i32; 3]> = (0..8)
        .map(|m: i32| [1 - 2 * (m & 1), 2 - 4 * (m >> 1 & 1), 3 - 6 * (m >> 2 & 1)])
        .collect();
    let unsat = Cnf3::new(3, every_sign)?;
    println!("\n{unsat}");
    println!("brute force: {:?}", brute_force_sat(&unsat)?);
    println!("{}", verify_reduction(&unsat)?);
    Ok(())
}
