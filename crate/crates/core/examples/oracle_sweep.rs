//! Cross-checks the structural facet tests against the exact oracle on all
//! small instances and on infeasible random vectors.

use liftcut::sweep;

fn main() -> liftcut::Result<()> {
    let instances = sweep::labelled_instances(4, 2);
    let boxes = sweep::box_sweep(&instances)?;
    println!(
        "box: {} instances, {} inequalities, {} facets, {} disagreements",
        boxes.instances,
        boxes.checks,
        boxes.facets,
        boxes.disagreements.len()
    );

    let cuts = sweep::cut_sweep(&sweep::single_lifted_instances(5), 4)?;
    println!(
        "cut: {} instances, {} cuts, {} facets, {} disagreements",
        cuts.instances,
        cuts.cuts,
        cuts.facets,
        cuts.disagreements.len()
    );

    let infeasible = sweep::infeasible_sweep(&instances, 200, 1)?;
    println!(
        "infeasible vectors: {} ({} cycle, {} path, {} cut), {} failures",
        infeasible.vectors,
        infeasible.cycle,
        infeasible.path,
        infeasible.cut,
        infeasible.failures.len()
    );

    let menger = sweep::menger_sweep(6);
    println!("menger: {} graphs, {} pairs, {} violations", menger.graphs, menger.pairs, menger.violations.len());
    Ok(())
}
