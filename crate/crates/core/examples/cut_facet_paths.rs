//! `f_d`-paths for cut inequalities, compared with the exact oracle.

use liftcut::{check_cut_condition, cut_to_inequality, face_report, FCut, Graph, LiftedInstance};

fn report(inst: &LiftedInstance, f: (usize, usize), delta: &[(usize, usize)]) -> liftcut::Result<()> {
    let f = liftcut::Edge::new(f.0, f.1);
    let delta: Vec<liftcut::Edge> = delta.iter().map(|&(a, b)| liftcut::Edge::new(a, b)).collect();
    let cut = FCut::new(inst, f, delta)?;
    let verdict = check_cut_condition(inst, &cut)?;
    println!("{verdict}");
    let oracle = face_report(inst, &cut_to_inequality(inst, f, cut.delta())?)?;
    println!("oracle: {oracle}\n");
    Ok(())
}

fn main() -> liftcut::Result<()> {
    // four-cycle 0-1-2-3 with the lifted diagonal 0-2
    let square = LiftedInstance::new(Graph::cycle(4), [(0, 2)])?;
    report(&square, (0, 2), &[(0, 1), (0, 3)])?;

    // path 1-0-2 with the lifted pair 1-2: no f_d-path for either edge
    let path = LiftedInstance::new(Graph::new(3, [(0, 1), (0, 2)])?, [(1, 2)])?;
    report(&path, (1, 2), &[(0, 1), (0, 2)])?;

    // a 2x3 grid: the cut through the middle column
    let grid = LiftedInstance::new(
        Graph::new(6, [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (1, 4), (2, 5)])?,
        [(0, 5)],
    )?;
    report(&grid, (0, 5), &[(0, 1), (3, 4)])?;
    Ok(())
}
