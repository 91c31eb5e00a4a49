//! Batch cross-validation of the structural checks against the exact
//! oracle, parallelised over instances.
//!
//! Graphs are taken up to isomorphism; lifted sets range over all labelled
//! choices on each representative. Facet status is invariant under
//! relabelling, so this covers every labelled instance.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::box_facet::{check_box_facet, compute_h_sequence, validate_witness, verify_orthogonal_equality_in};
use crate::cut_facet::{check_cut_condition, disconnects, FCut};
use crate::error::Result;
use crate::graph::generate::{
    connected_nonisomorphic_graphs, labelled_connected_graphs, nonisomorphic_graphs, random_connected_graph,
};
use crate::graph::{
    disjoint_paths_exhaustive, disjoint_paths_flow, min_separator_exhaustive, min_separator_flow, Edge, Graph,
};
use crate::multicut::{enumerate_feasible, find_violated_constraint, is_feasible, LiftedInstance, MulticutVector};
use crate::polytope::{face_report_in, LinearInequality};
use crate::sat::{brute_force_sat, reduce, verify_reduction, Cnf3, Literal};

/// A failed check together with the instance it failed on.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub instance: LiftedInstance,
    pub check: String,
}

/// Totals of a box-facet sweep.
#[derive(Clone, Debug, Default)]
pub struct BoxSweep {
    pub instances: usize,
    pub checks: usize,
    pub facets: usize,
    /// Checker and oracle disagree.
    pub disagreements: Vec<Counterexample>,
    /// A witness fails validation or the orthogonal equality.
    pub witness_failures: Vec<Counterexample>,
    /// A facet whose `H` layers do not exhaust `H`.
    pub layering_violations: Vec<Counterexample>,
    pub feasible_checked: usize,
    /// A feasible vector for which a violated inequality was reported.
    pub feasibility_failures: Vec<Counterexample>,
}

impl BoxSweep {
    fn merge(mut self, other: BoxSweep) -> BoxSweep {
        self.instances += other.instances;
        self.checks += other.checks;
        self.facets += other.facets;
        self.disagreements.extend(other.disagreements);
        self.witness_failures.extend(other.witness_failures);
        self.layering_violations.extend(other.layering_violations);
        self.feasible_checked += other.feasible_checked;
        self.feasibility_failures.extend(other.feasibility_failures);
        self
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &Counterexample> {
        self.disagreements
            .iter()
            .chain(&self.witness_failures)
            .chain(&self.layering_violations)
            .chain(&self.feasibility_failures)
    }
}

/// Every pair of distinct nodes not joined in `g`.
pub fn non_edges(g: &Graph) -> Vec<Edge> {
    let n = g.node_count();
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| Edge::new(a, b)))
        .filter(|e| !g.has_edge(e.lo(), e.hi()))
        .collect()
}

fn subsets_up_to<T: Copy>(items: &[T], max: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for size in 1..=max.min(items.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(idx.iter().map(|&i| items[i]).collect());
            let Some(pos) = (0..size).rev().find(|&p| idx[p] != p + items.len() - size) else {
                break;
            };
            idx[pos] += 1;
            for q in pos + 1..size {
                idx[q] = idx[q - 1] + 1;
            }
        }
    }
    out
}

/// All connected graphs on `2..=max_nodes` nodes (up to isomorphism) with
/// every lifted set of at most `max_lifted` pairs.
pub fn exhaustive_instances(max_nodes: usize, max_lifted: usize) -> Vec<LiftedInstance> {
    let mut out = Vec::new();
    for n in 2..=max_nodes {
        for g in connected_nonisomorphic_graphs(n) {
            for f in subsets_up_to(&non_edges(&g), max_lifted) {
                out.push(LiftedInstance::from_edges(g.clone(), f).expect("valid augmentation"));
            }
        }
    }
    out
}

/// All connected graphs on the labelled node sets `0..n`, `2 <= n <=
/// max_nodes`, with every lifted set of at most `max_lifted` pairs.
pub fn labelled_instances(max_nodes: usize, max_lifted: usize) -> Vec<LiftedInstance> {
    let mut out = Vec::new();
    for n in 2..=max_nodes {
        for g in labelled_connected_graphs(n) {
            for f in subsets_up_to(&non_edges(&g), max_lifted) {
                out.push(LiftedInstance::from_edges(g.clone(), f).expect("valid augmentation"));
            }
        }
    }
    out
}

/// Random connected graphs on `nodes` nodes with up to `max_lifted` random
/// lifted pairs.
pub fn random_instances(nodes: usize, count: usize, max_lifted: usize, seed: u64) -> Vec<LiftedInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let p = rng.gen_range(0.1..0.7);
            let g = random_connected_graph(nodes, p, &mut rng);
            let mut candidates = non_edges(&g);
            candidates.shuffle(&mut rng);
            let k = rng.gen_range(0..=max_lifted.min(candidates.len()));
            candidates.truncate(k);
            LiftedInstance::from_edges(g, candidates).expect("valid augmentation")
        })
        .collect()
}

fn box_check_instance(inst: &LiftedInstance) -> Result<BoxSweep> {
    let feasible = enumerate_feasible(inst)?;
    let mut out = BoxSweep {
        instances: 1,
        ..BoxSweep::default()
    };
    let fail = |check: String| Counterexample {
        instance: inst.clone(),
        check,
    };
    for &uw in inst.coords() {
        out.checks += 1;
        let verdict = check_box_facet(inst, uw)?;
        let oracle = face_report_in(inst, &feasible, &LinearInequality::lower_box(uw))?;
        if verdict.facet != oracle.is_facet {
            out.disagreements.push(fail(format!(
                "lower box on {uw}: checker says facet={}, oracle says facet={}",
                verdict.facet, oracle.is_facet
            )));
        }
        match &verdict.witness {
            Some(witness) => {
                let ok = validate_witness(inst, uw, witness).is_ok()
                    && verify_orthogonal_equality_in(inst, &feasible, uw, witness)?;
                if !ok {
                    out.witness_failures.push(fail(format!("lower box on {uw}: bad {witness}")));
                }
            }
            None => {
                out.facets += 1;
                if !compute_h_sequence(inst, uw)?.is_partition() {
                    out.layering_violations
                        .push(fail(format!("lower box on {uw}: H layers miss part of H")));
                }
            }
        }
    }
    for x in &feasible {
        out.feasible_checked += 1;
        if let Some(v) = find_violated_constraint(inst, x)? {
            out.feasibility_failures
                .push(fail(format!("feasible {x} reported as violating {}", v.inequality())));
        }
    }
    Ok(out)
}

/// Runs the box-facet checker, witness verification, the `H` layering and
/// the feasibility round trip on every instance.
pub fn box_sweep(instances: &[LiftedInstance]) -> Result<BoxSweep> {
    instances
        .par_iter()
        .map(box_check_instance)
        .try_reduce(BoxSweep::default, |a, b| Ok(a.merge(b)))
}

/// Totals of a cut-facet sweep.
#[derive(Clone, Debug, Default)]
pub struct CutSweep {
    pub instances: usize,
    pub cuts: usize,
    pub facets: usize,
    pub disagreements: Vec<Counterexample>,
}

impl CutSweep {
    fn merge(mut self, other: CutSweep) -> CutSweep {
        self.instances += other.instances;
        self.cuts += other.cuts;
        self.facets += other.facets;
        self.disagreements.extend(other.disagreements);
        self
    }
}

/// Every subset of `E` with at most `max_delta` edges that separates `f`.
pub fn valid_cuts(inst: &LiftedInstance, f: Edge, max_delta: usize) -> Result<Vec<Vec<Edge>>> {
    let mut out = Vec::new();
    for delta in subsets_up_to(inst.graph().edges(), max_delta) {
        if !delta.is_empty() && disconnects(inst, f, &delta)? {
            out.push(delta);
        }
    }
    Ok(out)
}

fn cut_check_instance(inst: &LiftedInstance, max_delta: usize) -> Result<CutSweep> {
    let feasible = enumerate_feasible(inst)?;
    let mut out = CutSweep {
        instances: 1,
        ..CutSweep::default()
    };
    for &f in inst.lifted() {
        for delta in valid_cuts(inst, f, max_delta)? {
            out.cuts += 1;
            let cut = FCut::new(inst, f, delta.iter().copied())?;
            let verdict = check_cut_condition(inst, &cut)?;
            let oracle = face_report_in(inst, &feasible, &LinearInequality::cut(f, cut.delta()))?;
            out.facets += usize::from(oracle.is_facet);
            // sufficiency when |F| = 1, necessity otherwise
            let agrees = match verdict.facet_decision {
                Some(decision) => decision == oracle.is_facet,
                None => verdict.condition_holds || !oracle.is_facet,
            };
            if !agrees {
                out.disagreements.push(Counterexample {
                    instance: inst.clone(),
                    check: format!(
                        "cut inequality f={f}, delta={}: condition holds={}, oracle facet={}",
                        crate::cut_facet::format_edges(cut.delta()),
                        verdict.condition_holds,
                        oracle.is_facet
                    ),
                });
            }
        }
    }
    Ok(out)
}

/// All connected labelled graphs on `2..=max_nodes` nodes with a single
/// lifted pair.
pub fn single_lifted_instances(max_nodes: usize) -> Vec<LiftedInstance> {
    labelled_instances(max_nodes, 1)
        .into_iter()
        .filter(|i| i.lifted().len() == 1)
        .collect()
}

/// Compares the `f_d`-path condition with the oracle for every cut of at
/// most `max_delta` edges.
pub fn cut_sweep(instances: &[LiftedInstance], max_delta: usize) -> Result<CutSweep> {
    instances
        .par_iter()
        .map(|inst| cut_check_instance(inst, max_delta))
        .try_reduce(CutSweep::default, |a, b| Ok(a.merge(b)))
}

/// Counts over `(graph, u, w)` triples.
#[derive(Clone, Debug, Default, Serialize)]
pub struct PairSweep {
    pub graphs: usize,
    pub pairs: usize,
    pub violations: Vec<String>,
}

impl PairSweep {
    fn merge(mut self, other: PairSweep) -> PairSweep {
        self.graphs += other.graphs;
        self.pairs += other.pairs;
        self.violations.extend(other.violations);
        self
    }
}

fn all_graphs(max_nodes: usize) -> Vec<Graph> {
    (2..=max_nodes).flat_map(nonisomorphic_graphs).collect()
}

fn graph_text(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(Edge::to_string).collect();
    format!("n={} [{}]", g.node_count(), edges.join(" "))
}

/// Odd separator cycles over all graphs (connected or not) up to
/// `max_nodes` nodes and all pairs `u`, `w`.
pub fn evenness_sweep(max_nodes: usize) -> Result<PairSweep> {
    all_graphs(max_nodes)
        .par_iter()
        .map(|g| {
            let mut out = PairSweep {
                graphs: 1,
                ..PairSweep::default()
            };
            for u in g.nodes() {
                for w in u + 1..g.node_count() {
                    out.pairs += 1;
                    if let Some(c) = crate::box_facet::find_odd_separator_cycle(g, u, w)? {
                        out.violations
                            .push(format!("{}: u={u} w={w} odd cycle {:?}", graph_text(g), c.nodes()));
                    }
                }
            }
            Ok(out)
        })
        .try_reduce(PairSweep::default, |a, b| Ok(a.merge(b)))
}

/// Path counts against separator sizes, by exhaustive search and by flow,
/// over all graphs up to `max_nodes` nodes and non-adjacent pairs.
pub fn menger_sweep(max_nodes: usize) -> PairSweep {
    all_graphs(max_nodes)
        .par_iter()
        .map(|g| {
            let mut out = PairSweep {
                graphs: 1,
                ..PairSweep::default()
            };
            for u in g.nodes() {
                for w in (u + 1..g.node_count()).filter(|&w| !g.has_edge(u, w)) {
                    out.pairs += 1;
                    let values = [
                        disjoint_paths_exhaustive(g, u, w),
                        min_separator_exhaustive(g, u, w).len(),
                        disjoint_paths_flow(g, u, w),
                        min_separator_flow(g, u, w).len(),
                    ];
                    if values.iter().any(|&v| v != values[0]) {
                        out.violations.push(format!(
                            "{}: u={u} w={w} paths/separator/flow paths/flow separator = {values:?}",
                            graph_text(g)
                        ));
                    }
                }
            }
            out
        })
        .reduce(PairSweep::default, PairSweep::merge)
}

/// Totals of a reduction sweep.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ReductionSweep {
    pub formulas: usize,
    pub satisfiable: usize,
    pub failures: Vec<String>,
}

impl ReductionSweep {
    fn merge(mut self, other: ReductionSweep) -> ReductionSweep {
        self.formulas += other.formulas;
        self.satisfiable += other.satisfiable;
        self.failures.extend(other.failures);
        self
    }
}

/// Every clause over `num_vars` variables: three distinct literals, in
/// ascending order.
pub fn all_clauses(num_vars: usize) -> Vec<[Literal; 3]> {
    let n = num_vars as Literal;
    let literals: Vec<Literal> = (1..=n).flat_map(|k| [-k, k]).collect();
    let mut out = Vec::new();
    for (i, &a) in literals.iter().enumerate() {
        for (j, &b) in literals.iter().enumerate().skip(i + 1) {
            for &c in &literals[j + 1..] {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// The eight clauses over `x1, x2, x3` with every sign pattern: the
/// smallest unsatisfiable 3-CNF.
pub fn all_sign_clauses() -> Vec<[Literal; 3]> {
    (0..8)
        .map(|mask: Literal| {
            let sign = |bit: Literal| if mask >> bit & 1 == 1 { -1 } else { 1 };
            [sign(0), 2 * sign(1), 3 * sign(2)]
        })
        .collect()
}

/// Every set of at most `max_clauses` distinct clauses over `1..=max_vars`
/// variables.
pub fn exhaustive_formulas(max_vars: usize, max_clauses: usize) -> Vec<Cnf3> {
    let mut out = Vec::new();
    for n in 1..=max_vars {
        for clauses in subsets_up_to(&all_clauses(n), max_clauses) {
            out.push(Cnf3::new(n, clauses).expect("valid clauses"));
        }
    }
    out
}

/// Random formulas with `min_vars..=max_vars` variables and
/// `1..=max_clauses` clauses of distinct literals.
pub fn random_formulas(count: usize, min_vars: usize, max_vars: usize, max_clauses: usize, seed: u64) -> Vec<Cnf3> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_vars..=max_vars);
            let m = rng.gen_range(1..=max_clauses);
            let literals: Vec<Literal> = (1..=n as Literal).flat_map(|k| [-k, k]).collect();
            let clauses = (0..m)
                .map(|_| {
                    let picked: Vec<Literal> = literals.choose_multiple(&mut rng, 3).copied().collect();
                    [picked[0], picked[1], picked[2]]
                })
                .collect();
            Cnf3::new(n, clauses).expect("valid clauses")
        })
        .collect()
}

fn check_formula(cnf: &Cnf3) -> Result<ReductionSweep> {
    let report = verify_reduction(cnf)?;
    let mut failures = Vec::new();
    if !report.passed {
        failures.push(format!("{cnf}: {report}"));
    }
    if let Some(path) = &report.d_path {
        let r = reduce(cnf)?;
        if let Some(problem) = fd_path_problem(&r, path.nodes()) {
            failures.push(format!("{cnf}: {problem}"));
        }
    }
    // the size formula |V| = 3m + 2n + 5
    let expected = 3 * cnf.clauses().len() + 2 * cnf.num_vars() + 5;
    let r = reduce(cnf)?;
    if r.instance.node_count() != expected {
        failures.push(format!("{cnf}: {} nodes, expected {expected}", r.instance.node_count()));
    }
    debug_assert_eq!(report.satisfiable, brute_force_sat(cnf)?.is_some());
    Ok(ReductionSweep {
        formulas: 1,
        satisfiable: usize::from(report.satisfiable),
        failures,
    })
}

/// Structural properties of an `f_d`-path in a reduction: every clause has
/// a literal on the path in `G1`, no variable appears with both signs, and
/// every layer but `{w'}` is visited. Layers can be visited more than once,
/// since a path may step back and forth between consecutive layers.
pub fn fd_path_problem(r: &crate::sat::ReductionInstance, path: &[usize]) -> Option<String> {
    use crate::sat::{Label, Side};
    for (j, clause) in r.cnf.clauses().iter().enumerate() {
        let hit = path.iter().any(|&v| {
            r.side(v) == Side::G1 && matches!(r.labels[v], Label::Literal(l) if clause.contains(&l))
        });
        if !hit {
            return Some(format!("clause {} has no literal on the path", j + 1));
        }
    }
    for &a in path {
        for &b in path {
            if r.side(a) == Side::G1 && r.labels[a].complements(r.labels[b]) {
                return Some(format!("path holds {} and {}", r.labels[a], r.labels[b]));
            }
        }
    }
    if path.contains(&r.w_prime()) {
        return Some("path visits w'".into());
    }
    let visited: std::collections::BTreeSet<_> = path.iter().map(|&v| r.layers[v]).collect();
    let layer_total = r.cnf.clauses().len() + 2 + r.cnf.num_vars() + 2;
    if visited.len() != layer_total {
        return Some(format!("path visits {} of {layer_total} layers", visited.len()));
    }
    None
}

/// Runs [`verify_reduction`] and the path properties on every formula.
pub fn reduction_sweep(formulas: &[Cnf3]) -> Result<ReductionSweep> {
    formulas
        .par_iter()
        .map(check_formula)
        .try_reduce(ReductionSweep::default, |a, b| Ok(a.merge(b)))
}

/// Totals of the infeasible-vector check.
#[derive(Clone, Debug, Default)]
pub struct InfeasibleSweep {
    pub vectors: usize,
    pub cycle: usize,
    pub path: usize,
    pub cut: usize,
    pub failures: Vec<Counterexample>,
}

/// Draws random 0/1 vectors on random instances from `pool` until `count`
/// infeasible ones were found, and checks that each gets a verified
/// violated inequality.
pub fn infeasible_sweep(pool: &[LiftedInstance], count: usize, seed: u64) -> Result<InfeasibleSweep> {
    use crate::multicut::Violation;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let candidates: Vec<&LiftedInstance> = pool.iter().filter(|i| i.dimension() >= 3).collect();
    let mut out = InfeasibleSweep::default();
    let mut attempts = 0usize;
    while out.vectors < count && !candidates.is_empty() {
        attempts += 1;
        assert!(attempts < 1000 * count.max(1), "too few infeasible vectors in the pool");
        let inst = candidates[rng.gen_range(0..candidates.len())];
        let values: Vec<u8> = (0..inst.dimension()).map(|_| rng.gen_range(0..=1)).collect();
        let x = MulticutVector::new(inst, values)?;
        if is_feasible(inst, &x)? {
            continue;
        }
        out.vectors += 1;
        let fail = |check: String| Counterexample {
            instance: inst.clone(),
            check,
        };
        match find_violated_constraint(inst, &x)? {
            None => out.failures.push(fail(format!("no violation found for infeasible {x}"))),
            Some(v) => {
                match &v {
                    Violation::Cycle { .. } => out.cycle += 1,
                    Violation::Path { .. } => out.path += 1,
                    Violation::Cut { .. } => out.cut += 1,
                }
                if let Err(e) = v.verify(inst, &x) {
                    out.failures.push(fail(format!("witness for {x} fails: {e}")));
                }
            }
        }
    }
    Ok(out)
}

/// Number of decompositions of `g`, by listing every set partition and
/// keeping those whose blocks induce connected subgraphs.
pub fn count_decompositions(g: &Graph) -> usize {
    fn rec(g: &Graph, v: usize, blocks: &mut Vec<Vec<usize>>, count: &mut usize) {
        if v == g.node_count() {
            let connected = blocks.iter().all(|b| {
                let keep: Vec<bool> = g.nodes().map(|x| b.contains(&x)).collect();
                g.induced(&keep).0.is_connected()
            });
            *count += usize::from(connected);
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(v);
            rec(g, v + 1, blocks, count);
            blocks[i].pop();
        }
        blocks.push(vec![v]);
        rec(g, v + 1, blocks, count);
        blocks.pop();
    }
    let mut count = 0;
    rec(g, 0, &mut Vec::new(), &mut count);
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_listing() {
        assert_eq!(subsets_up_to(&[1, 2, 3], 2).len(), 1 + 3 + 3);
        assert_eq!(subsets_up_to(&[1, 2], 5).len(), 4);
    }

    #[test]
    fn small_box_sweep_is_clean() {
        let summary = box_sweep(&exhaustive_instances(4, 2)).unwrap();
        assert!(summary.instances > 0);
        assert_eq!(summary.counterexamples().count(), 0);
    }

    #[test]
    fn small_cut_sweep_is_clean() {
        let summary = cut_sweep(&single_lifted_instances(4), 3).unwrap();
        assert!(summary.cuts > 0);
        assert!(summary.disagreements.is_empty());
    }

    #[test]
    fn formula_families() {
        assert_eq!(all_clauses(3).len(), 20);
        assert_eq!(all_clauses(1).len(), 0);
        // n=1: {∅}; n=2: 4 clauses, sets of size ≤ 2 → 1+4+6
        assert_eq!(exhaustive_formulas(2, 2).len(), 1 + 11);
        let random = random_formulas(10, 3, 4, 5, 1);
        assert!(random.iter().all(|c| (3..=4).contains(&c.num_vars())));
    }

    #[test]
    fn decomposition_counts_match_enumeration() {
        for g in connected_nonisomorphic_graphs(5) {
            let inst = LiftedInstance::new(g.clone(), []).unwrap();
            assert_eq!(enumerate_feasible(&inst).unwrap().len(), count_decompositions(&g));
        }
    }
}
