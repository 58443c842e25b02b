//! File formats: plain edge lists, the JSON graph schema, the JSON labeling
//! schema, and DOT export. Writers emit canonical bytes so round-trips are
//! byte-stable.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::intset::IntSet;
use crate::labeling::SetLabeling;
use crate::ops::{OpResult, VertexSource};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {0}: {1}")]
    Parse(usize, String),
    #[error("invalid json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("empty set for vertex {0:?}")]
    EmptyLabel(String),
}

/// Writes the edge-list format: `p <order> <size>` then one `e <u> <v>`
/// line per edge, 1-based, ascending. Vertex names are not carried.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// Reads the edge-list format; vertices get canonical names `v1..vn`.
/// Lines starting with `c` are treated as comments.
pub fn read_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut graph: Option<Graph> = None;
    let mut declared_size = 0usize;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_ascii_whitespace().collect();
        match fields.as_slice() {
            ["p", order, size] => {
                if graph.is_some() {
                    return Err(IoError::Parse(i + 1, "duplicate p line".into()));
                }
                let order: usize = order
                    .parse()
                    .map_err(|_| IoError::Parse(i + 1, "bad order".into()))?;
                declared_size = size
                    .parse()
                    .map_err(|_| IoError::Parse(i + 1, "bad size".into()))?;
                graph = Some(Graph::with_order(order));
            }
            ["e", u, v] => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| IoError::Parse(i + 1, "e line before p line".into()))?;
                let u: usize = u
                    .parse()
                    .map_err(|_| IoError::Parse(i + 1, "bad endpoint".into()))?;
                let v: usize = v
                    .parse()
                    .map_err(|_| IoError::Parse(i + 1, "bad endpoint".into()))?;
                if u == 0 || v == 0 || u > g.order() || v > g.order() {
                    return Err(IoError::Parse(i + 1, "endpoint out of range".into()));
                }
                if u == v {
                    return Err(IoError::Parse(i + 1, "self-loop".into()));
                }
                g.add_edge(u - 1, v - 1);
            }
            _ => return Err(IoError::Parse(i + 1, format!("unrecognized line {line:?}"))),
        }
    }
    let g = graph.ok_or_else(|| IoError::Parse(0, "missing p line".into()))?;
    if g.size() != declared_size {
        return Err(IoError::Parse(
            0,
            format!("declared {} edges, found {}", declared_size, g.size()),
        ));
    }
    Ok(g)
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<usize>,
    names: Vec<String>,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    operation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    provenance: Option<serde_json::Value>,
}

/// JSON graph schema with vertices/edges/names arrays.
pub fn write_graph_json(g: &Graph) -> String {
    graph_json(g, None)
}

/// JSON schema for an operation result, provenance included.
pub fn write_op_json(op: &OpResult) -> String {
    graph_json(&op.graph, Some((&op.operation, &op.provenance)))
}

fn graph_json(g: &Graph, op: Option<(&str, &Vec<VertexSource>)>) -> String {
    let doc = GraphJson {
        vertices: g.vertices().collect(),
        names: g.names().to_vec(),
        edges: g.edges(),
        operation: op.map(|(name, _)| name.to_string()),
        provenance: op.map(|(_, prov)| serde_json::to_value(prov).expect("serializable")),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("serializable");
    out.push('\n');
    out
}

pub fn read_graph_json(text: &str) -> Result<Graph, IoError> {
    let doc: GraphJson = serde_json::from_str(text)?;
    let mut g = Graph::new(doc.names)?;
    for (u, v) in doc.edges {
        if u >= g.order() || v >= g.order() {
            return Err(IoError::Graph(GraphError::EndpointOutOfRange(u, g.order())));
        }
        if u == v {
            return Err(IoError::Graph(GraphError::SelfLoop(g.name(u).to_string())));
        }
        g.add_edge(u, v);
    }
    Ok(g)
}

/// Detects the format by content: JSON documents start with `{`.
pub fn read_graph(text: &str) -> Result<Graph, IoError> {
    if text.trim_start().starts_with('{') {
        read_graph_json(text)
    } else {
        read_edge_list(text)
    }
}

/// JSON labeling schema: a map from vertex name to the sorted elements of
/// its set-label.
pub fn write_labeling(f: &SetLabeling) -> String {
    let map: BTreeMap<&String, &IntSet> = f.iter().collect();
    let mut out = serde_json::to_string_pretty(&map).expect("serializable");
    out.push('\n');
    out
}

pub fn read_labeling(text: &str) -> Result<SetLabeling, IoError> {
    let map: BTreeMap<String, Vec<u64>> = serde_json::from_str(text)?;
    let mut f = SetLabeling::new();
    for (name, elems) in map {
        let set = IntSet::new(elems).ok_or_else(|| IoError::EmptyLabel(name.clone()))?;
        f.insert(name, set);
    }
    Ok(f)
}

/// DOT export for visualization.
pub fn write_dot(g: &Graph, graph_name: &str) -> String {
    let mut out = format!("graph {graph_name} {{\n");
    for v in g.vertices() {
        out.push_str(&format!("  \"{}\";\n", g.name(v)));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  \"{}\" -- \"{}\";\n", g.name(u), g.name(v)));
    }
    out.push_str("}\n");
    out
}
