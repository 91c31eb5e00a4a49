//! The smallest lifted instance: a path `b - a - c` with the lifted pair
//! `bc`. Lists its feasible vectors, checks the polytope is full-dimensional
//! and reports every box inequality.

use liftcut::fixtures;
use liftcut::{affine_rank, box_inequality, enumerate_feasible, face_report, solve_brute_force, BoxSide};

fn main() -> liftcut::Result<()> {
    let ex = fixtures::triangle();
    let inst = &ex.instance;
    let coords: Vec<String> = inst
        .coords()
        .iter()
        .map(|e| format!("{}{}", ex.name(e.lo()), ex.name(e.hi())))
        .collect();
    println!("coordinates: {}", coords.join(" "));

    let feasible = enumerate_feasible(inst)?;
    for x in &feasible {
        println!("  {x}");
    }
    let rows: Vec<Vec<i64>> = feasible.iter().map(|x| x.values().iter().map(|&v| i64::from(v)).collect()).collect();
    println!("{} feasible vectors, affine rank {}", feasible.len(), affine_rank(&rows)?);

    for &e in inst.coords() {
        for side in [BoxSide::Lower, BoxSide::Upper] {
            let ineq = box_inequality(inst, e, side)?;
            println!("{ineq:<16} {}", face_report(inst, &ineq)?);
        }
    }

    let weighted = inst.clone().with_integer_costs(&[1, 1, -3])?;
    let (x, cost) = solve_brute_force(&weighted)?;
    println!("minimiser for costs (1, 1, -3): {x} with cost {cost}");
    Ok(())
}
