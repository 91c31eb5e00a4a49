//! JSON instances with rational costs, edge lists and DOT output.

use liftcut::io::{parse_edge_list, parse_instance, to_dot, write_instance};
use liftcut::{enumerate_feasible, solve_brute_force};

const INSTANCE: &str = r#"{
  "nodes": 4,
  "edges": [[0, 1], [1, 2], [2, 3]],
  "lifted": [[0, 3]],
  "costs": {"0-1": "1/2", "1-2": "-2", "2-3": "1", "0-3": "-3/4"}
}"#;

fn main() -> liftcut::Result<()> {
    let inst = parse_instance(INSTANCE)?;
    print!("{}", write_instance(&inst));
    println!("{} feasible vectors", enumerate_feasible(&inst)?.len());
    let (x, cost) = solve_brute_force(&inst)?;
    println!("minimiser {x} with cost {cost}");

    let cut = parse_edge_list("0-1, 1-2")?;
    print!("{}", to_dot(&inst, &cut, None));
    Ok(())
}
