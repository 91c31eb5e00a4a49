//! JSON instance files, reduction files and DOT export.
//!
//! Instance file layout:
//!
//! ```json
//! {
//!   "nodes": 3,
//!   "edges": [[0, 1], [0, 2]],
//!   "lifted": [[1, 2]],
//!   "costs": {"0-1": "1", "0-2": "-1/2", "1-2": "3"}
//! }
//! ```
//!
//! `costs` is optional. Files written by [`write_instance`] list edges and
//! cost keys in coordinate order, so reading and writing such a file
//! reproduces it byte for byte.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::multicut::LiftedInstance;
use crate::sat::{reduce, Cnf3, Label, ReductionInstance, Side};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    nodes: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    lifted: Vec<[usize; 2]>,
    #[serde(default)]
    costs: Option<BTreeMap<String, String>>,
}

fn pair(p: [usize; 2], what: &str) -> Result<Edge> {
    Edge::try_new(p[0], p[1]).map_err(|e| Error::InvalidInstance(format!("{what}: {e}")))
}

/// Parses `"u-w"` (either order) into an edge.
pub fn parse_edge(text: &str) -> Result<Edge> {
    let (a, b) = text
        .split_once(['-', ','])
        .ok_or_else(|| Error::Parse(format!("expected u-w, got {text:?}")))?;
    let node = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad node id {s:?} in {text:?}")))
    };
    Edge::try_new(node(a)?, node(b)?).map_err(|e| Error::Parse(e.to_string()))
}

/// Parses an edge list such as `0-1,0-2` or `0-1 0-2`, or a JSON list of
/// pairs.
pub fn parse_edge_list(text: &str) -> Result<Vec<Edge>> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        let pairs: Vec<[usize; 2]> = serde_json::from_str(trimmed)?;
        return pairs
            .into_iter()
            .map(|p| Edge::try_new(p[0], p[1]).map_err(|e| Error::Parse(e.to_string())))
            .collect();
    }
    trimmed
        .split(|c: char| c == ',' || c == ';' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(parse_edge)
        .collect()
}

pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let bad = || Error::Parse(format!("bad rational {text:?}"));
    match t.split_once('/') {
        Some((p, q)) => {
            let (p, q) = (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?);
            if q == num_bigint::BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

pub fn parse_instance(text: &str) -> Result<LiftedInstance> {
    let file: InstanceFile = serde_json::from_str(text)?;
    instance_from_file(file)
}

fn instance_from_file(file: InstanceFile) -> Result<LiftedInstance> {
    let edges = file
        .edges
        .into_iter()
        .map(|p| pair(p, "edge"))
        .collect::<Result<Vec<_>>>()?;
    let lifted = file
        .lifted
        .into_iter()
        .map(|p| pair(p, "lifted pair"))
        .collect::<Result<Vec<_>>>()?;
    let graph = Graph::from_edges(file.nodes, edges).map_err(|e| Error::InvalidInstance(e.to_string()))?;
    let inst = LiftedInstance::from_edges(graph, lifted)?;
    match file.costs {
        None => Ok(inst),
        Some(costs) => {
            let mut map = BTreeMap::new();
            for (key, value) in costs {
                let e = parse_edge(&key)?;
                if map.insert(e, parse_rational(&value)?).is_some() {
                    return Err(Error::InvalidInstance(format!("cost for {e} given twice")));
                }
            }
            inst.with_costs(map)
        }
    }
}

pub fn read_instance(path: &Path) -> Result<LiftedInstance> {
    parse_instance(&std::fs::read_to_string(path)?)
}

fn pairs_json(edges: &[Edge]) -> String {
    let parts: Vec<String> = edges.iter().map(|e| format!("[{}, {}]", e.lo(), e.hi())).collect();
    format!("[{}]", parts.join(", "))
}

/// Canonical JSON text of an instance (trailing newline included).
pub fn write_instance(inst: &LiftedInstance) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"nodes\": {},", inst.node_count());
    let _ = writeln!(out, "  \"edges\": {},", pairs_json(inst.graph().edges()));
    match inst.costs() {
        None => {
            let _ = writeln!(out, "  \"lifted\": {}", pairs_json(inst.lifted()));
        }
        Some(costs) => {
            let _ = writeln!(out, "  \"lifted\": {},", pairs_json(inst.lifted()));
            let entries: Vec<String> = inst
                .coords()
                .iter()
                .zip(costs)
                .map(|(e, c)| format!("\"{}\": \"{c}\"", e))
                .collect();
            let _ = writeln!(out, "  \"costs\": {{{}}}", entries.join(", "));
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ReductionFile {
    cnf: Cnf3,
    instance: serde_json::Value,
    f: Edge,
    delta: Vec<Edge>,
    d: Edge,
    labels: Vec<Label>,
    layers: Vec<(Side, usize)>,
}

/// JSON text of a reduction: the formula, the instance, `f`, `δ`, `d` and
/// the node labels and layers.
pub fn write_reduction(r: &ReductionInstance) -> Result<String> {
    let file = ReductionFile {
        cnf: r.cnf.clone(),
        instance: serde_json::from_str(&write_instance(&r.instance))?,
        f: r.cut.f(),
        delta: r.cut.delta().to_vec(),
        d: r.d,
        labels: r.labels.clone(),
        layers: r.layers.clone(),
    };
    Ok(serde_json::to_string_pretty(&file)? + "\n")
}

/// Reads a reduction file, rebuilding the gadget from its formula and
/// checking that the stored data matches.
pub fn parse_reduction(text: &str) -> Result<ReductionInstance> {
    let file: ReductionFile = serde_json::from_str(text)?;
    let r = reduce(&file.cnf)?;
    let stored: InstanceFile = serde_json::from_value(file.instance)?;
    let consistent = instance_from_file(stored)? == r.instance
        && file.f == r.cut.f()
        && file.delta == r.cut.delta()
        && file.d == r.d
        && file.labels == r.labels
        && file.layers == r.layers;
    if !consistent {
        return Err(Error::InvalidInstance(
            "reduction file does not match the gadget of its formula".into(),
        ));
    }
    Ok(r)
}

/// Either kind of input file accepted by the command-line tool.
#[derive(Clone, Debug)]
pub enum Document {
    Instance(LiftedInstance),
    Reduction(Box<ReductionInstance>),
}

impl Document {
    pub fn instance(&self) -> &LiftedInstance {
        match self {
            Document::Instance(i) => i,
            Document::Reduction(r) => &r.instance,
        }
    }
}

pub fn parse_document(text: &str) -> Result<Document> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("cnf").is_some() {
        Ok(Document::Reduction(Box::new(parse_reduction(text)?)))
    } else {
        Ok(Document::Instance(parse_instance(text)?))
    }
}

pub fn read_document(path: &Path) -> Result<Document> {
    parse_document(&std::fs::read_to_string(path)?)
}

/// DOT rendering: `E` solid, `F` dashed, `highlight` edges drawn red and
/// bold.
pub fn to_dot(inst: &LiftedInstance, highlight: &[Edge], labels: Option<&[String]>) -> String {
    let highlight: BTreeSet<Edge> = highlight.iter().copied().collect();
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    if let Some(labels) = labels {
        for (v, l) in labels.iter().enumerate() {
            let _ = writeln!(out, "  {v} [label={}];", serde_json::Value::from(l.as_str()));
        }
    } else {
        for v in inst.graph().nodes() {
            let _ = writeln!(out, "  {v};");
        }
    }
    for (i, &e) in inst.coords().iter().enumerate() {
        let mut attrs = Vec::new();
        if inst.kind(i) == crate::multicut::EdgeKind::Lifted {
            attrs.push("style=dashed");
        }
        if highlight.contains(&e) {
            attrs.push("color=red");
            attrs.push("penwidth=2");
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {} -- {};", e.lo(), e.hi());
        } else {
            let _ = writeln!(out, "  {} -- {} [{}];", e.lo(), e.hi(), attrs.join(", "));
        }
    }
    out.push_str("}\n");
    out
}

/// DOT for a reduction: nodes labelled by their literals, `δ` and `f`
/// highlighted.
pub fn reduction_to_dot(r: &ReductionInstance) -> String {
    let labels: Vec<String> = r.labels.iter().map(Label::to_string).collect();
    let mut highlight = r.cut.delta().to_vec();
    highlight.push(r.cut.f());
    to_dot(&r.instance, &highlight, Some(&labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn instance_round_trip_is_byte_identical() {
        let t = fixtures::triangle();
        let inst = t.instance.clone().with_integer_costs(&[-1, 1, 1]).unwrap();
        let text = write_instance(&inst);
        assert_eq!(
            text,
            "{\n  \"nodes\": 3,\n  \"edges\": [[0, 1], [0, 2]],\n  \"lifted\": [[1, 2]],\n  \"costs\": {\"0-1\": \"-1\", \"0-2\": \"1\", \"1-2\": \"1\"}\n}\n"
        );
        let back = parse_instance(&text).unwrap();
        assert_eq!(back, inst);
        assert_eq!(write_instance(&back), text);
        let plain = write_instance(&t.instance);
        assert_eq!(write_instance(&parse_instance(&plain).unwrap()), plain);
    }

    #[test]
    fn non_canonical_input_is_normalised() {
        let text = r#"{"nodes": 3, "edges": [[2, 0], [1, 0]], "lifted": [[2, 1]], "costs": {"2-1": "2/4"}}"#;
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.coords(), fixtures::triangle().instance.coords());
        assert!(write_instance(&inst).contains("\"1-2\": \"1/2\""));
    }

    #[test]
    fn invalid_files_are_rejected() {
        for text in [
            r#"{"nodes": 3, "edges": [[0, 1]], "lifted": []}"#,
            r#"{"nodes": 2, "edges": [[0, 0]], "lifted": []}"#,
            r#"{"nodes": 2, "edges": [[0, 1]], "lifted": [[0, 1]]}"#,
            r#"{"nodes": 2, "edges": [[0, 1]], "costs": {"0-1": "1/0"}}"#,
            r#"{"nodes": 2, "edges": [[0, 1]], "extra": 1}"#,
            "not json",
        ] {
            assert!(parse_instance(text).is_err(), "{text}");
        }
    }

    #[test]
    fn edge_lists() {
        let expected = vec![Edge::new(0, 1), Edge::new(0, 2)];
        assert_eq!(parse_edge_list("0-1,2-0").unwrap(), expected);
        assert_eq!(parse_edge_list("0-1 0-2\n").unwrap(), expected);
        assert_eq!(parse_edge_list("[[1, 0], [0, 2]]").unwrap(), expected);
        assert!(parse_edge_list("0-0").is_err());
        assert!(parse_edge_list("a-b").is_err());
    }

    #[test]
    fn reduction_round_trip() {
        let r = reduce(&Cnf3::new(3, vec![[-1, 2, 3]]).unwrap()).unwrap();
        let text = write_reduction(&r).unwrap();
        let back = parse_reduction(&text).unwrap();
        assert_eq!(back.instance, r.instance);
        assert!(matches!(parse_document(&text).unwrap(), Document::Reduction(_)));
        let tampered = text.replacen("\"u\"", "\"w\"", 1);
        assert!(parse_reduction(&tampered).is_err());
    }

    #[test]
    fn dot_styles() {
        let t = fixtures::triangle();
        let dot = to_dot(&t.instance, &[t.edge("a", "b")], None);
        assert!(dot.contains("0 -- 1 [color=red, penwidth=2];"));
        assert!(dot.contains("0 -- 2;"));
        assert!(dot.contains("1 -- 2 [style=dashed];"));
    }
}
