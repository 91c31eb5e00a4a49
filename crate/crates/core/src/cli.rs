//! The `liftcut` command-line tool.
//!
//! Exit codes: `0` success (or facet), `1` usage error or unknown edge,
//! `2` invalid input, `3` not a facet, `4` disagreement with the oracle or a
//! failed verification.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::box_facet::check_box_facet;
use crate::cut_facet::{check_cut_condition, FCut};
use crate::error::{Error, Result};
use crate::graph::Edge;
use crate::io::{self, Document};
use crate::multicut::{enumerate_feasible, solve_brute_force, LiftedInstance};
use crate::polytope::{face_report, LinearInequality};
use crate::sat::{parse_dimacs, reduce, verify_reduction};
use crate::sweep;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NOT_FACET: i32 = 3;
pub const EXIT_DISAGREE: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "liftcut", version, about = "Facet checks for lifted multicut polytopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether the lower box inequality 0 <= x_uw is a facet.
    CheckBox {
        #[arg(long)]
        instance: PathBuf,
        /// The pair u,w (an edge or lifted pair of the instance).
        #[arg(long)]
        edge: String,
        #[arg(long)]
        json: bool,
    },
    /// Search f_d-paths for every edge of a cut and decide the cut inequality.
    CheckCut {
        #[arg(long)]
        instance: PathBuf,
        /// The lifted pair u,w.
        #[arg(long)]
        f: String,
        /// Cut edges as a list (0-1,0-2) or a file holding such a list.
        #[arg(long)]
        delta: String,
        /// Also run the brute-force oracle and compare.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Build the cut-facet instance of a 3-CNF formula (DIMACS input).
    #[command(name = "reduce-3sat")]
    Reduce3Sat {
        #[arg(long)]
        cnf: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Check SAT against f_d-path existence.
        #[arg(long)]
        verify: bool,
    },
    /// Face report of an inequality: lower:U-W, upper:U-W,
    /// cut:U-W:A-B,C-D or custom:A-B=1,C-D=-1<=RHS.
    Oracle {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        ineq: String,
        #[arg(long)]
        json: bool,
    },
    /// Count (and optionally list) the feasible vectors.
    Enum {
        #[arg(long)]
        instance: PathBuf,
        /// Print every vector.
        #[arg(long)]
        all: bool,
        /// Print a minimiser of the instance costs.
        #[arg(long)]
        solve: bool,
    },
    /// Cross-validate the box and cut checks against the oracle.
    Sweep {
        #[arg(long)]
        max_nodes: usize,
        #[arg(long, default_value_t = 2)]
        max_lifted: usize,
        #[arg(long, default_value_t = 4)]
        max_delta: usize,
        /// Extra random instances on max_nodes + 1 nodes.
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where counterexamples are written.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// Graphviz rendering: E solid, F dashed, cut edges red.
    ExportDot {
        #[arg(long)]
        instance: PathBuf,
        /// Edges to highlight.
        #[arg(long)]
        delta: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Runs the tool on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidQuery(_) => EXIT_USAGE,
        _ => EXIT_INVALID,
    }
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}

fn load(path: &Path) -> Result<Document> {
    io::read_document(path)
}

/// A pair given as `u,w` or `u-w`; unknown node ids count as usage errors.
fn parse_pair(text: &str) -> Result<Edge> {
    io::parse_edge(text).map_err(|e| Error::InvalidQuery(e.to_string()))
}

fn read_list(arg: &str) -> Result<Vec<Edge>> {
    let path = Path::new(arg);
    if path.is_file() {
        io::parse_edge_list(&std::fs::read_to_string(path)?)
    } else {
        io::parse_edge_list(arg)
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::CheckBox { instance, edge, json } => {
            let doc = load(&instance)?;
            let verdict = check_box_facet(doc.instance(), parse_pair(&edge)?)?;
            if json {
                emit_json(out, &verdict)?;
            } else {
                match &verdict.witness {
                    None => writeln!(out, "facet")?,
                    Some(w) => writeln!(out, "not facet; {w}")?,
                }
            }
            Ok(if verdict.facet { EXIT_OK } else { EXIT_NOT_FACET })
        }
        Command::CheckCut {
            instance,
            f,
            delta,
            oracle,
            json,
        } => {
            let doc = load(&instance)?;
            let inst = doc.instance();
            let f = parse_pair(&f)?;
            let cut = FCut::new(inst, f, read_list(&delta)?)?;
            let verdict = check_cut_condition(inst, &cut)?;
            if json {
                emit_json(out, &verdict)?;
            } else {
                writeln!(out, "{verdict}")?;
            }
            let mut code = if verdict.condition_holds { EXIT_OK } else { EXIT_NOT_FACET };
            if oracle {
                let report = face_report(inst, &LinearInequality::cut(f, cut.delta()))?;
                let agree = match verdict.facet_decision {
                    Some(d) => d == report.is_facet,
                    None => verdict.condition_holds || !report.is_facet,
                };
                writeln!(out, "oracle: {report}")?;
                if agree {
                    writeln!(out, "oracle: agree")?;
                } else {
                    writeln!(err, "oracle: DISAGREE")?;
                    code = EXIT_DISAGREE;
                }
            }
            Ok(code)
        }
        Command::Reduce3Sat { cnf, out: target, verify } => {
            let formula = parse_dimacs(&std::fs::read_to_string(&cnf)?)?;
            let r = reduce(&formula)?;
            std::fs::write(&target, io::write_reduction(&r)?)?;
            writeln!(
                out,
                "{} nodes, {} edges, |delta| = {}, f = {}, d = {}",
                r.instance.node_count(),
                r.instance.graph().edge_count(),
                r.cut.delta().len(),
                r.cut.f(),
                r.d
            )?;
            if verify {
                let report = verify_reduction(&formula)?;
                writeln!(out, "{report}")?;
                if !report.passed {
                    return Ok(EXIT_DISAGREE);
                }
            }
            Ok(EXIT_OK)
        }
        Command::Oracle { instance, ineq, json } => {
            let doc = load(&instance)?;
            let inst = doc.instance();
            let ineq = parse_inequality(inst, &ineq)?;
            let report = face_report(inst, &ineq)?;
            if json {
                emit_json(out, &report)?;
            } else {
                writeln!(out, "{ineq}")?;
                writeln!(out, "{report}")?;
            }
            Ok(if report.is_facet { EXIT_OK } else { EXIT_NOT_FACET })
        }
        Command::Enum { instance, all, solve } => {
            let doc = load(&instance)?;
            let inst = doc.instance();
            let feasible = enumerate_feasible(inst)?;
            writeln!(out, "{} feasible vectors", feasible.len())?;
            if all {
                let coords: Vec<String> = inst.coords().iter().map(Edge::to_string).collect();
                writeln!(out, "coordinates: {}", coords.join(" "))?;
                for x in &feasible {
                    writeln!(out, "{x}")?;
                }
            }
            if solve {
                let (x, cost) = solve_brute_force(inst)?;
                writeln!(out, "minimum {cost} at {x}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Sweep {
            max_nodes,
            max_lifted,
            max_delta,
            random,
            seed,
            out_dir,
        } => run_sweep(max_nodes, max_lifted, max_delta, random, seed, &out_dir, out),
        Command::ExportDot { instance, delta, out: target } => {
            let doc = load(&instance)?;
            let dot = match (&doc, delta) {
                (Document::Reduction(r), None) => io::reduction_to_dot(r),
                (_, delta) => {
                    let highlight = delta.as_deref().map(read_list).transpose()?.unwrap_or_default();
                    io::to_dot(doc.instance(), &highlight, None)
                }
            };
            match target {
                Some(path) => std::fs::write(path, dot)?,
                None => out.write_all(dot.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
    }
}

/// Parses an inequality spec (see the `oracle` subcommand).
pub fn parse_inequality(inst: &LiftedInstance, spec: &str) -> Result<LinearInequality> {
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("bad inequality spec {spec:?}")))?;
    match kind {
        "lower" | "upper" => {
            let side = if kind == "lower" {
                crate::polytope::BoxSide::Lower
            } else {
                crate::polytope::BoxSide::Upper
            };
            crate::polytope::box_inequality(inst, parse_pair(rest)?, side)
        }
        "cut" => {
            let (f, delta) = rest
                .split_once(':')
                .ok_or_else(|| Error::Parse("cut spec is cut:U-W:A-B,C-D".into()))?;
            crate::polytope::cut_to_inequality(inst, parse_pair(f)?, &io::parse_edge_list(delta)?)
        }
        "custom" => {
            let (lhs, rhs) = rest
                .split_once("<=")
                .ok_or_else(|| Error::Parse("custom spec needs <= RHS".into()))?;
            let rhs: i64 = rhs
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad right-hand side {rhs:?}")))?;
            let mut coeffs = std::collections::BTreeMap::new();
            for term in lhs.split(',').filter(|t| !t.trim().is_empty()) {
                let (e, c) = term
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("bad term {term:?}, expected A-B=COEF")))?;
                let c: i64 = c
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad coefficient in {term:?}")))?;
                let e = io::parse_edge(e)?;
                if !inst.contains_pair(e) {
                    return Err(Error::InvalidQuery(format!("{e} is not in E ∪ F")));
                }
                *coeffs.entry(e).or_insert(0) += c;
            }
            Ok(LinearInequality::new(coeffs, rhs))
        }
        _ => Err(Error::Parse(format!("unknown inequality kind {kind:?}"))),
    }
}

fn run_sweep(
    max_nodes: usize,
    max_lifted: usize,
    max_delta: usize,
    random: usize,
    seed: u64,
    out_dir: &Path,
    out: &mut dyn Write,
) -> Result<i32> {
    let mut instances = sweep::labelled_instances(max_nodes, max_lifted);
    instances.extend(sweep::random_instances(max_nodes + 1, random, max_lifted, seed));
    let boxes = sweep::box_sweep(&instances)?;
    writeln!(
        out,
        "box facets: {} instances, {} inequalities, {} facets, {} disagreements",
        boxes.instances,
        boxes.checks,
        boxes.facets,
        boxes.disagreements.len()
    )?;
    writeln!(out, "witnesses: {} failures", boxes.witness_failures.len())?;
    writeln!(out, "H layering: {} violations", boxes.layering_violations.len())?;
    writeln!(
        out,
        "feasibility: {} vectors, {} failures",
        boxes.feasible_checked,
        boxes.feasibility_failures.len()
    )?;

    let cuts = sweep::cut_sweep(&sweep::single_lifted_instances(max_nodes), max_delta)?;
    writeln!(
        out,
        "cut facets: {} instances, {} cuts, {} facets, {} disagreements",
        cuts.instances,
        cuts.cuts,
        cuts.facets,
        cuts.disagreements.len()
    )?;

    let failures: Vec<&sweep::Counterexample> = boxes.counterexamples().chain(&cuts.disagreements).collect();
    let total = boxes.disagreements.len() + cuts.disagreements.len();
    writeln!(out, "{total} disagreements")?;
    if failures.is_empty() {
        return Ok(EXIT_OK);
    }
    std::fs::create_dir_all(out_dir)?;
    for (i, c) in failures.iter().enumerate() {
        let path = out_dir.join(format!("counterexample-{i}.json"));
        std::fs::write(&path, io::write_instance(&c.instance))?;
        writeln!(out, "{}: {}", path.display(), c.check)?;
    }
    Ok(EXIT_DISAGREE)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("liftcut").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
        let path = dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        path.to_string_lossy().into_owned()
    }

    #[test]
    fn check_box_exit_codes() {
        let dir = tempfile::tempdir().unwrap();
        let tri = write_temp(&dir, "t.json", &io::write_instance(&fixtures::triangle().instance));
        let (code, out, _) = run_args(&["check-box", "--instance", &tri, "--edge", "1,2"]);
        assert_eq!(code, EXIT_NOT_FACET);
        assert_eq!(out, "not facet; path witness: 1,0,2\n");
        let (code, _, err) = run_args(&["check-box", "--instance", &tri, "--edge", "1,7"]);
        assert_eq!(code, EXIT_USAGE, "{err}");
        let single = write_temp(&dir, "s.json", "{\"nodes\": 2, \"edges\": [[0, 1]]}");
        let (code, out, _) = run_args(&["check-box", "--instance", &single, "--edge", "0,1"]);
        assert_eq!((code, out.as_str()), (EXIT_OK, "facet\n"));
        let bad = write_temp(&dir, "b.json", "{\"nodes\": 3, \"edges\": [[0, 1]]}");
        assert_eq!(run_args(&["check-box", "--instance", &bad, "--edge", "0,1"]).0, EXIT_INVALID);
        assert_eq!(run_args(&["check-box", "--instance", &tri]).0, EXIT_USAGE);
    }

    #[test]
    fn check_cut_with_oracle() {
        let dir = tempfile::tempdir().unwrap();
        let c4 = write_temp(&dir, "c4.json", &io::write_instance(&fixtures::four_cycle_lifted().instance));
        let (code, out, _) = run_args(&["check-cut", "--instance", &c4, "--f", "0,2", "--delta", "0-1,0-3", "--oracle"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("oracle: agree"));
        let (code, _, _) = run_args(&["check-cut", "--instance", &c4, "--f", "0,2", "--delta", "0-1"]);
        assert_eq!(code, EXIT_INVALID);
        let tri = write_temp(&dir, "t.json", &io::write_instance(&fixtures::triangle().instance));
        let (code, out, _) = run_args(&["check-cut", "--instance", &tri, "--f", "1,2", "--delta", "0-1,0-2", "--oracle"]);
        assert_eq!(code, EXIT_NOT_FACET);
        assert!(out.contains("0-1: no path") && out.contains("oracle: agree"));
    }

    #[test]
    fn enum_oracle_and_dot() {
        let dir = tempfile::tempdir().unwrap();
        let tri = write_temp(&dir, "t.json", &io::write_instance(&fixtures::triangle().instance));
        let (code, out, _) = run_args(&["enum", "--instance", &tri]);
        assert_eq!((code, out.as_str()), (EXIT_OK, "4 feasible vectors\n"));
        let (code, out, _) = run_args(&["oracle", "--instance", &tri, "--ineq", "upper:1-2"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("face dim: 2 of 3"));
        let (code, _, _) = run_args(&["oracle", "--instance", &tri, "--ineq", "custom:0-1=1,0-2=1,1-2=-1<=1"]);
        assert_eq!(code, EXIT_NOT_FACET);
        let (code, _, _) = run_args(&["oracle", "--instance", &tri, "--ineq", "bogus"]);
        assert_eq!(code, EXIT_INVALID);
        let (code, out, _) = run_args(&["export-dot", "--instance", &tri, "--delta", "0-1"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("graph G {"));
    }

    #[test]
    fn reduce_and_verify() {
        let dir = tempfile::tempdir().unwrap();
        let cnf = write_temp(&dir, "f.cnf", "p cnf 3 1\n-1 2 3 0\n");
        let target = dir.path().join("r.json");
        let (code, out, _) = run_args(&[
            "reduce-3sat",
            "--cnf",
            &cnf,
            "--out",
            target.to_str().unwrap(),
            "--verify",
        ]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.starts_with("14 nodes"));
        let r = target.to_str().unwrap();
        let (code, out, _) = run_args(&["check-cut", "--instance", r, "--f", "0,12", "--delta", "1-6,2-9,3-11,4-5,4-13"]);
        assert_eq!(code, EXIT_OK, "{out}");
        let bad = write_temp(&dir, "bad.cnf", "p cnf 3 1\n1 2 0\n");
        assert_eq!(
            run_args(&["reduce-3sat", "--cnf", &bad, "--out", target.to_str().unwrap()]).0,
            EXIT_INVALID
        );
    }

    #[test]
    fn small_sweep_is_clean() {
        let dir = tempfile::tempdir().unwrap();
        let (code, out, _) = run_args(&["sweep", "--max-nodes", "4", "--out-dir", dir.path().to_str().unwrap()]);
        assert_eq!(code, EXIT_OK);
        assert!(out.ends_with("0 disagreements\n"));
    }
}
