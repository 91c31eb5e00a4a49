//! Lower box inequalities: a path witness, a cycle witness, and a facet
//! with its `H` layering.

use liftcut::fixtures::{self, NamedInstance};
use liftcut::{check_box_facet, compute_h_sequence, face_report, verify_orthogonal_equality, BoxSide};

fn show(ex: &NamedInstance, title: &str) -> liftcut::Result<()> {
    let uw = ex.edge("u", "w");
    let verdict = check_box_facet(&ex.instance, uw)?;
    let oracle = face_report(&ex.instance, &liftcut::box_inequality(&ex.instance, uw, BoxSide::Lower)?)?;
    println!("{title}: facet {} (oracle: {})", verdict.facet, oracle.is_facet);
    if let Some(w) = &verdict.witness {
        println!("  {} witness {}", w.kind(), ex.names_of(w.nodes()).join(","));
        println!(
            "  alternating sum vanishes on the face: {}",
            verify_orthogonal_equality(&ex.instance, uw, w)?
        );
    }
    Ok(())
}

fn main() -> liftcut::Result<()> {
    show(&fixtures::box_path_violation(), "path example")?;
    show(&fixtures::box_cycle_violation(), "cycle example")?;

    let ladder = fixtures::box_facet_ladder();
    show(&ladder, "ladder")?;
    let seq = compute_h_sequence(&ladder.instance, ladder.edge("u", "w"))?;
    for (j, layer) in seq.layers.iter().enumerate() {
        let names: Vec<String> = layer
            .iter()
            .map(|e| format!("{}{}", ladder.name(e.lo()), ladder.name(e.hi())))
            .collect();
        println!("  H{j} = {{{}}}", names.join(", "));
    }
    println!("  layers exhaust H: {}", seq.is_partition());
    Ok(())
}
