//! Graph operations: union, join, cartesian product, corona, complement,
//! powers, subdivisions, line and total graphs, contraction, and degree-2
//! smoothing.
//!
//! Every result records per-vertex provenance so set-labelings can be
//! transported from operands into the result. Composite result names keep
//! operand vertices identifiable: `g1:x` / `g2:x` for binary operations on
//! disjoint operands, `(u,v)` for products, `e:u,v` for vertices standing
//! for an operand edge, `copy{i}:x` for corona copies. The union does not
//! rename: it identifies operand vertices by name equality.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Error)]
pub enum OpError {
    #[error("vertex {0:?} has degree {1}, expected 2")]
    NotDegreeTwo(String, usize),
    #[error("vertex {0:?} lies in a triangle; its neighbors are adjacent")]
    InTriangle(String),
    #[error("{0:?} is not an edge")]
    NotAnEdge(String),
    #[error("power exponent must be >= 1")]
    BadExponent,
}

/// Where a result vertex came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VertexSource {
    /// Operand vertex carried over under its own name.
    Original { name: String },
    /// Vertex of the first operand (renamed in the result).
    Left { name: String },
    /// Vertex of the second operand (renamed in the result).
    Right { name: String },
    /// Union vertex present in both operands.
    Shared { name: String },
    /// New vertex standing for the operand edge `uv`.
    EdgeVertex { u: String, v: String },
    /// Product vertex for the operand pair.
    Pair { left: String, right: String },
    /// Vertex of the `copy`-th corona copy of the second operand.
    CopyOf { copy: usize, name: String },
    /// Contraction survivor; `absorbed` was merged into `kept`.
    Merged { kept: String, absorbed: String },
}

/// A graph produced by an operation, with the operation name and the
/// vertex-level provenance mapping result vertices to operand elements.
#[derive(Debug, Clone)]
pub struct OpResult {
    pub graph: Graph,
    pub operation: String,
    pub provenance: Vec<VertexSource>,
}

/// Union identifying vertices by name equality; shared edges merge.
pub fn union(g1: &Graph, g2: &Graph) -> OpResult {
    let mut names: Vec<String> = g1.names().to_vec();
    let mut provenance: Vec<VertexSource> = g1
        .vertices()
        .map(|v| {
            let name = g1.name(v).to_string();
            if g2.vertex_by_name(&name).is_some() {
                VertexSource::Shared { name }
            } else {
                VertexSource::Left { name }
            }
        })
        .collect();
    for v in g2.vertices() {
        if g1.vertex_by_name(g2.name(v)).is_none() {
            names.push(g2.name(v).to_string());
            provenance.push(VertexSource::Right {
                name: g2.name(v).to_string(),
            });
        }
    }
    let mut graph = Graph::new(names).expect("operand names unique");
    for (u, v) in g1.edges() {
        graph.add_edge(u, v);
    }
    for (u, v) in g2.edges() {
        let a = graph.vertex_by_name(g2.name(u)).unwrap();
        let b = graph.vertex_by_name(g2.name(v)).unwrap();
        graph.add_edge(a, b);
    }
    OpResult {
        graph,
        operation: "union".into(),
        provenance,
    }
}

/// The intersection graph of two graphs under name identification: vertices
/// named in both, edges present in both.
pub fn intersection(g1: &Graph, g2: &Graph) -> Graph {
    let names: Vec<String> = g1
        .names()
        .iter()
        .filter(|n| g2.vertex_by_name(n).is_some())
        .cloned()
        .collect();
    let mut graph = Graph::new(names).expect("names unique");
    for (u, v) in g1.edges() {
        let (nu, nv) = (g1.name(u), g1.name(v));
        if let (Some(a), Some(b)) = (graph.vertex_by_name(nu), graph.vertex_by_name(nv)) {
            let (x, y) = (g2.vertex_by_name(nu).unwrap(), g2.vertex_by_name(nv).unwrap());
            if g2.has_edge(x, y) {
                graph.add_edge(a, b);
            }
        }
    }
    graph
}

fn disjoint_names(g1: &Graph, g2: &Graph) -> (Vec<String>, Vec<VertexSource>) {
    let mut names = Vec::with_capacity(g1.order() + g2.order());
    let mut provenance = Vec::with_capacity(names.capacity());
    for v in g1.vertices() {
        names.push(format!("g1:{}", g1.name(v)));
        provenance.push(VertexSource::Left {
            name: g1.name(v).to_string(),
        });
    }
    for v in g2.vertices() {
        names.push(format!("g2:{}", g2.name(v)));
        provenance.push(VertexSource::Right {
            name: g2.name(v).to_string(),
        });
    }
    (names, provenance)
}

/// Disjoint union under automatic `g1:`/`g2:` renaming.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> OpResult {
    let (names, provenance) = disjoint_names(g1, g2);
    let mut graph = Graph::new(names).expect("prefixed names unique");
    for (u, v) in g1.edges() {
        graph.add_edge(u, v);
    }
    for (u, v) in g2.edges() {
        graph.add_edge(g1.order() + u, g1.order() + v);
    }
    OpResult {
        graph,
        operation: "disjoint_union".into(),
        provenance,
    }
}

/// Join: disjoint operands plus every cross edge.
pub fn join(g1: &Graph, g2: &Graph) -> OpResult {
    let mut result = disjoint_union(g1, g2);
    for u in 0..g1.order() {
        for v in 0..g2.order() {
            result.graph.add_edge(u, g1.order() + v);
        }
    }
    result.operation = "join".into();
    result
}

/// Cartesian product: `(u1,v1) ~ (u2,v2)` iff equal in one coordinate and
/// adjacent in the other.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> OpResult {
    let mut names = Vec::with_capacity(g1.order() * g2.order());
    let mut provenance = Vec::with_capacity(names.capacity());
    for u in g1.vertices() {
        for v in g2.vertices() {
            names.push(format!("({},{})", g1.name(u), g2.name(v)));
            provenance.push(VertexSource::Pair {
                left: g1.name(u).to_string(),
                right: g2.name(v).to_string(),
            });
        }
    }
    let mut graph = Graph::new(names).expect("pair names unique");
    let idx = |u: VertexId, v: VertexId| u * g2.order() + v;
    for u in g1.vertices() {
        for (a, b) in g2.edges() {
            graph.add_edge(idx(u, a), idx(u, b));
        }
    }
    for (a, b) in g1.edges() {
        for v in g2.vertices() {
            graph.add_edge(idx(a, v), idx(b, v));
        }
    }
    OpResult {
        graph,
        operation: "cartesian_product".into(),
        provenance,
    }
}

/// Corona: one copy of `g1` plus `|V(g1)|` copies of `g2`, the i-th operand
/// vertex joined to every vertex of the i-th copy.
pub fn corona(g1: &Graph, g2: &Graph) -> OpResult {
    let mut names: Vec<String> = g1.vertices().map(|v| format!("g1:{}", g1.name(v))).collect();
    let mut provenance: Vec<VertexSource> = g1
        .vertices()
        .map(|v| VertexSource::Left {
            name: g1.name(v).to_string(),
        })
        .collect();
    for i in g1.vertices() {
        for v in g2.vertices() {
            names.push(format!("copy{}:{}", i + 1, g2.name(v)));
            provenance.push(VertexSource::CopyOf {
                copy: i,
                name: g2.name(v).to_string(),
            });
        }
    }
    let mut graph = Graph::new(names).expect("copy names unique");
    for (u, v) in g1.edges() {
        graph.add_edge(u, v);
    }
    let base = g1.order();
    for i in g1.vertices() {
        let offset = base + i * g2.order();
        for (u, v) in g2.edges() {
            graph.add_edge(offset + u, offset + v);
        }
        for v in 0..g2.order() {
            graph.add_edge(i, offset + v);
        }
    }
    OpResult {
        graph,
        operation: "corona".into(),
        provenance,
    }
}

/// Complement on the same vertex set.
pub fn complement(g: &Graph) -> OpResult {
    let mut graph = Graph::new(g.names().to_vec()).expect("names unique");
    for u in g.vertices() {
        for v in (u + 1)..g.order() {
            if !g.has_edge(u, v) {
                graph.add_edge(u, v);
            }
        }
    }
    OpResult {
        graph,
        operation: "complement".into(),
        provenance: original_provenance(g),
    }
}

fn original_provenance(g: &Graph) -> Vec<VertexSource> {
    g.vertices()
        .map(|v| VertexSource::Original {
            name: g.name(v).to_string(),
        })
        .collect()
}

/// r-th power: adjacency iff BFS distance at most r.
pub fn power(g: &Graph, r: usize) -> Result<OpResult, OpError> {
    if r < 1 {
        return Err(OpError::BadExponent);
    }
    let mut graph = Graph::new(g.names().to_vec()).expect("names unique");
    for s in g.vertices() {
        for (t, d) in g.bfs_distances(s).into_iter().enumerate() {
            if s < t {
                if let Some(d) = d {
                    if d <= r {
                        graph.add_edge(s, t);
                    }
                }
            }
        }
    }
    Ok(OpResult {
        graph,
        operation: format!("power^{r}"),
        provenance: original_provenance(g),
    })
}

/// Complete subdivision: one new vertex on every edge.
pub fn complete_subdivision(g: &Graph) -> OpResult {
    let mut names: Vec<String> = g.names().to_vec();
    let mut provenance = original_provenance(g);
    let mut graph_edges = Vec::new();
    for (i, (u, v)) in g.edges().into_iter().enumerate() {
        names.push(format!("e:{},{}", g.name(u), g.name(v)));
        provenance.push(VertexSource::EdgeVertex {
            u: g.name(u).to_string(),
            v: g.name(v).to_string(),
        });
        let w = g.order() + i;
        graph_edges.push((u, w));
        graph_edges.push((v, w));
    }
    let mut graph = Graph::new(names).expect("edge names unique");
    for (a, b) in graph_edges {
        graph.add_edge(a, b);
    }
    OpResult {
        graph,
        operation: "complete_subdivision".into(),
        provenance,
    }
}

/// Super subdivision: every edge uv replaced by K_{2,m} with parts {u,v}
/// and m new vertices.
pub fn super_subdivision(g: &Graph, m: usize) -> Result<OpResult, OpError> {
    if m < 1 {
        return Err(OpError::BadExponent);
    }
    let mut names: Vec<String> = g.names().to_vec();
    let mut provenance = original_provenance(g);
    let mut graph_edges = Vec::new();
    let mut next = g.order();
    for (u, v) in g.edges() {
        for j in 1..=m {
            names.push(format!("e{}:{},{}", j, g.name(u), g.name(v)));
            provenance.push(VertexSource::EdgeVertex {
                u: g.name(u).to_string(),
                v: g.name(v).to_string(),
            });
            graph_edges.push((u, next));
            graph_edges.push((v, next));
            next += 1;
        }
    }
    let mut graph = Graph::new(names).expect("edge names unique");
    for (a, b) in graph_edges {
        graph.add_edge(a, b);
    }
    Ok(OpResult {
        graph,
        operation: format!("super_subdivision^{m}"),
        provenance,
    })
}

/// Line graph: vertices are the edges of g, adjacent iff the edges share an
/// endpoint.
pub fn line_graph(g: &Graph) -> OpResult {
    let edges = g.edges();
    let names: Vec<String> = edges
        .iter()
        .map(|&(u, v)| format!("e:{},{}", g.name(u), g.name(v)))
        .collect();
    let provenance: Vec<VertexSource> = edges
        .iter()
        .map(|&(u, v)| VertexSource::EdgeVertex {
            u: g.name(u).to_string(),
            v: g.name(v).to_string(),
        })
        .collect();
    let mut graph = Graph::new(names).expect("edge names unique");
    for i in 0..edges.len() {
        for j in (i + 1)..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                graph.add_edge(i, j);
            }
        }
    }
    OpResult {
        graph,
        operation: "line_graph".into(),
        provenance,
    }
}

/// Total graph: vertices are V(g) plus E(g); vertex-vertex adjacency as in
/// g, edge-edge as in the line graph, vertex-edge iff incident.
pub fn total_graph(g: &Graph) -> OpResult {
    let edges = g.edges();
    let mut names: Vec<String> = g.names().to_vec();
    let mut provenance = original_provenance(g);
    for &(u, v) in &edges {
        names.push(format!("e:{},{}", g.name(u), g.name(v)));
        provenance.push(VertexSource::EdgeVertex {
            u: g.name(u).to_string(),
            v: g.name(v).to_string(),
        });
    }
    let mut graph = Graph::new(names).expect("names unique");
    for &(u, v) in &edges {
        graph.add_edge(u, v);
    }
    let base = g.order();
    for (i, &(a, b)) in edges.iter().enumerate() {
        graph.add_edge(a, base + i);
        graph.add_edge(b, base + i);
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                graph.add_edge(base + i, base + j);
            }
        }
    }
    OpResult {
        graph,
        operation: "total_graph".into(),
        provenance,
    }
}

/// Contracts the edge uv: v is merged into u, loops dropped, parallel edges
/// collapsed. The survivor keeps u's name.
pub fn contract_edge(g: &Graph, u: VertexId, v: VertexId) -> Result<OpResult, OpError> {
    if !g.has_edge(u, v) {
        return Err(OpError::NotAnEdge(format!("{},{}", g.name(u), g.name(v))));
    }
    let (kept, absorbed) = (u.min(v), u.max(v));
    let names: Vec<String> = g
        .vertices()
        .filter(|&x| x != absorbed)
        .map(|x| g.name(x).to_string())
        .collect();
    let provenance: Vec<VertexSource> = g
        .vertices()
        .filter(|&x| x != absorbed)
        .map(|x| {
            if x == kept {
                VertexSource::Merged {
                    kept: g.name(kept).to_string(),
                    absorbed: g.name(absorbed).to_string(),
                }
            } else {
                VertexSource::Original {
                    name: g.name(x).to_string(),
                }
            }
        })
        .collect();
    let mut graph = Graph::new(names).expect("names unique");
    let remap = |x: VertexId| -> VertexId {
        let x = if x == absorbed { kept } else { x };
        if x > absorbed {
            x - 1
        } else {
            x
        }
    };
    for (a, b) in g.edges() {
        let (a, b) = (remap(a), remap(b));
        if a != b {
            graph.add_edge(a, b);
        }
    }
    Ok(OpResult {
        graph,
        operation: "contract_edge".into(),
        provenance,
    })
}

/// Removes a degree-2 vertex v (whose neighbors u, w are non-adjacent) and
/// adds the edge uw.
pub fn smooth_degree2(g: &Graph, v: VertexId) -> Result<OpResult, OpError> {
    if g.degree(v) != 2 {
        return Err(OpError::NotDegreeTwo(g.name(v).to_string(), g.degree(v)));
    }
    let nbrs: Vec<VertexId> = g.neighbors(v).collect();
    let (u, w) = (nbrs[0], nbrs[1]);
    if g.has_edge(u, w) {
        return Err(OpError::InTriangle(g.name(v).to_string()));
    }
    let names: Vec<String> = g
        .vertices()
        .filter(|&x| x != v)
        .map(|x| g.name(x).to_string())
        .collect();
    let provenance: Vec<VertexSource> = g
        .vertices()
        .filter(|&x| x != v)
        .map(|x| VertexSource::Original {
            name: g.name(x).to_string(),
        })
        .collect();
    let mut graph = Graph::new(names).expect("names unique");
    let remap = |x: VertexId| if x > v { x - 1 } else { x };
    for (a, b) in g.edges() {
        if a != v && b != v {
            graph.add_edge(remap(a), remap(b));
        }
    }
    graph.add_edge(remap(u), remap(w));
    Ok(OpResult {
        graph,
        operation: "smooth_degree2".into(),
        provenance,
    })
}
