//! Finite simple undirected graphs with stable vertex identities and
//! generators for the graph families used throughout the crate.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Stable vertex identity: the index of the vertex in declaration order.
pub type VertexId = usize;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("invalid {family} parameters: {constraint}")]
    InvalidParameter {
        family: &'static str,
        constraint: String,
    },
    #[error("duplicate vertex name {0:?}")]
    DuplicateName(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("edge endpoint {0} out of range (order {1})")]
    EndpointOutOfRange(usize, usize),
    #[error("self-loop at vertex {0:?}")]
    SelfLoop(String),
}

/// A finite simple undirected graph.
///
/// Vertices are identified by their index (0-based, in declaration order) and
/// carry a display name. Names are unique within a graph; the union operation
/// identifies vertices of its operands by name equality, so every generator
/// and graph operation documents the names it produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    adj: Vec<BTreeSet<VertexId>>,
    size: usize,
}

impl Graph {
    /// Creates an edgeless graph with the given vertex names.
    pub fn new(names: Vec<String>) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        for name in &names {
            if !seen.insert(name.clone()) {
                return Err(GraphError::DuplicateName(name.clone()));
            }
        }
        let n = names.len();
        Ok(Graph {
            names,
            adj: vec![BTreeSet::new(); n],
            size: 0,
        })
    }

    /// Edgeless graph with canonical names `v1..vn`.
    pub fn with_order(n: usize) -> Self {
        Graph::new((1..=n).map(|i| format!("v{i}")).collect()).expect("canonical names unique")
    }

    /// Adds the edge `uv`. Self-loops are rejected; parallel edges collapse.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) {
        assert!(u < self.order() && v < self.order(), "endpoint out of range");
        assert_ne!(u, v, "self-loop");
        if self.adj[u].insert(v) {
            self.adj[v].insert(u);
            self.size += 1;
        }
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) {
        if self.adj[u].remove(&v) {
            self.adj[v].remove(&u);
            self.size -= 1;
        }
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order() && self.adj[u].contains(&v)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.order()
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.size);
        for u in self.vertices() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.names.iter().position(|n| n == name)
    }

    /// Adjacency bitmasks, usable for graphs up to 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.order() > 64 {
            return None;
        }
        let mut masks = vec![0u64; self.order()];
        for (u, v) in self.edges() {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        Some(masks)
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.adj.iter().any(|a| a.is_empty())
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Eulerian: connected with every degree even (and at least one edge).
    pub fn is_eulerian(&self) -> bool {
        self.size > 0
            && self.is_connected()
            && self.vertices().all(|v| self.degree(v).is_multiple_of(2))
    }

    /// BFS distances from `s`; unreachable vertices map to `None`.
    pub fn bfs_distances(&self, s: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x].unwrap();
            for y in self.neighbors(x) {
                if dist[y].is_none() {
                    dist[y] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Induced subgraph on `keep` (any order); names carry over.
    pub fn induced(&self, keep: &[VertexId]) -> Graph {
        let mut sorted: Vec<VertexId> = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let names = sorted.iter().map(|&v| self.names[v].clone()).collect();
        let mut g = Graph::new(names).expect("names unique in source graph");
        let index: BTreeMap<VertexId, VertexId> =
            sorted.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        for (u, v) in self.edges() {
            if let (Some(&a), Some(&b)) = (index.get(&u), index.get(&v)) {
                g.add_edge(a, b);
            }
        }
        g
    }

    /// Erdos-Renyi graph G(n, p) with a fixed seed; names `v1..vn`.
    pub fn random(n: usize, p: f64, seed: u64) -> Graph {
        let mut g = Graph::with_order(n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

/// Specification of a catalog graph family.
///
/// Generated vertex names are fixed per family so that labelings and solver
/// witnesses are reproducible:
/// path/cycle/complete `v1..vn`; complete bipartite `a1..am` / `b1..bn`;
/// wheel and fan `hub` + `r1..rn`; double wheel `hub` + `a*`/`b*`;
/// m-wheel `hub` + `c{i}_{j}`; gear `hub` + spoke ends `v1..vn` with `w{i}`
/// inserted between `v{i}` and `v{i+1}`; complete sun clique `u1..un` with
/// `w{i}` adjacent to `u{i}` and `u{i+1}`; complete split clique `k1..kr` +
/// independent `s1..ss`; windmill `hub` + `b{i}_{j}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { m: usize, n: usize },
    /// Wheel W_{n+1}: hub joined to the cycle C_n.
    Wheel { rim: usize },
    /// Double wheel DW_{2n+1}: hub joined to two disjoint copies of C_n.
    DoubleWheel { rim: usize },
    /// m copies of C_n joined to a single hub.
    MWheel { cycles: usize, rim: usize },
    /// Fan F_{1,n}: hub joined to the path P_n.
    Fan { rim: usize },
    /// Gear (bipartite wheel) BW_n: 2n+1 vertices, 3n edges.
    Gear { n: usize },
    /// Complete sun S_n on 2n vertices: clique u1..un, independent w1..wn,
    /// w_i adjacent to u_i and u_{i+1 mod n}.
    CompleteSun { n: usize },
    /// Complete split K_S(r,s): clique K_r fully joined to s independent vertices.
    CompleteSplit { clique: usize, independent: usize },
    /// Windmill W(n,k): k copies of K_n sharing one vertex.
    Windmill { blade: usize, copies: usize },
}

impl FamilySpec {
    pub fn family_name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteBipartite { .. } => "complete_bipartite",
            FamilySpec::Wheel { .. } => "wheel",
            FamilySpec::DoubleWheel { .. } => "double_wheel",
            FamilySpec::MWheel { .. } => "m_wheel",
            FamilySpec::Fan { .. } => "fan",
            FamilySpec::Gear { .. } => "gear",
            FamilySpec::CompleteSun { .. } => "complete_sun",
            FamilySpec::CompleteSplit { .. } => "complete_split",
            FamilySpec::Windmill { .. } => "windmill",
        }
    }
}

fn param_error(family: &'static str, constraint: impl Into<String>) -> GraphError {
    GraphError::InvalidParameter {
        family,
        constraint: constraint.into(),
    }
}

/// Generates the canonical member of a graph family.
pub fn generate(spec: FamilySpec) -> Result<Graph, GraphError> {
    match spec {
        FamilySpec::Path { n } => {
            if n < 1 {
                return Err(param_error("path", "n >= 1"));
            }
            let mut g = Graph::with_order(n);
            for i in 0..n.saturating_sub(1) {
                g.add_edge(i, i + 1);
            }
            Ok(g)
        }
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return Err(param_error("cycle", "n >= 3"));
            }
            let mut g = Graph::with_order(n);
            for i in 0..n {
                g.add_edge(i, (i + 1) % n);
            }
            Ok(g)
        }
        FamilySpec::Complete { n } => {
            if n < 1 {
                return Err(param_error("complete", "n >= 1"));
            }
            let mut g = Graph::with_order(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    g.add_edge(u, v);
                }
            }
            Ok(g)
        }
        FamilySpec::CompleteBipartite { m, n } => {
            if m < 1 || n < 1 {
                return Err(param_error("complete_bipartite", "m >= 1 and n >= 1"));
            }
            let names = (1..=m)
                .map(|i| format!("a{i}"))
                .chain((1..=n).map(|i| format!("b{i}")))
                .collect();
            let mut g = Graph::new(names)?;
            for u in 0..m {
                for v in 0..n {
                    g.add_edge(u, m + v);
                }
            }
            Ok(g)
        }
        FamilySpec::Wheel { rim } => hub_cycles("wheel", 1, rim),
        FamilySpec::DoubleWheel { rim } => hub_cycles("double_wheel", 2, rim),
        FamilySpec::MWheel { cycles, rim } => {
            if cycles < 1 {
                return Err(param_error("m_wheel", "m >= 1"));
            }
            hub_cycles("m_wheel", cycles, rim)
        }
        FamilySpec::Fan { rim } => {
            if rim < 1 {
                return Err(param_error("fan", "n >= 1"));
            }
            let names = std::iter::once("hub".to_string())
                .chain((1..=rim).map(|i| format!("r{i}")))
                .collect();
            let mut g = Graph::new(names)?;
            for i in 1..rim {
                g.add_edge(i, i + 1);
            }
            for i in 1..=rim {
                g.add_edge(0, i);
            }
            Ok(g)
        }
        FamilySpec::Gear { n } => {
            if n < 3 {
                return Err(param_error("gear", "n >= 3"));
            }
            let names = std::iter::once("hub".to_string())
                .chain((1..=n).map(|i| format!("v{i}")))
                .chain((1..=n).map(|i| format!("w{i}")))
                .collect();
            let mut g = Graph::new(names)?;
            for i in 0..n {
                let vi = 1 + i;
                let wi = 1 + n + i;
                let vnext = 1 + (i + 1) % n;
                g.add_edge(0, vi);
                g.add_edge(vi, wi);
                g.add_edge(wi, vnext);
            }
            Ok(g)
        }
        FamilySpec::CompleteSun { n } => {
            if n < 3 {
                return Err(param_error("complete_sun", "n >= 3"));
            }
            let names = (1..=n)
                .map(|i| format!("u{i}"))
                .chain((1..=n).map(|i| format!("w{i}")))
                .collect();
            let mut g = Graph::new(names)?;
            for u in 0..n {
                for v in (u + 1)..n {
                    g.add_edge(u, v);
                }
            }
            for i in 0..n {
                g.add_edge(n + i, i);
                g.add_edge(n + i, (i + 1) % n);
            }
            Ok(g)
        }
        FamilySpec::CompleteSplit {
            clique,
            independent,
        } => {
            if clique < 1 || independent < 1 {
                return Err(param_error("complete_split", "r >= 1 and s >= 1"));
            }
            let names = (1..=clique)
                .map(|i| format!("k{i}"))
                .chain((1..=independent).map(|i| format!("s{i}")))
                .collect();
            let mut g = Graph::new(names)?;
            for u in 0..clique {
                for v in (u + 1)..clique {
                    g.add_edge(u, v);
                }
            }
            for u in 0..clique {
                for v in 0..independent {
                    g.add_edge(u, clique + v);
                }
            }
            Ok(g)
        }
        FamilySpec::Windmill { blade, copies } => {
            if blade < 2 || copies < 2 {
                return Err(param_error("windmill", "n >= 2 and k >= 2"));
            }
            let mut names = vec!["hub".to_string()];
            for c in 1..=copies {
                for j in 1..(blade) {
                    names.push(format!("b{c}_{j}"));
                }
            }
            let mut g = Graph::new(names)?;
            for c in 0..copies {
                let mut clique = vec![0];
                clique.extend((0..blade - 1).map(|j| 1 + c * (blade - 1) + j));
                for (i, &u) in clique.iter().enumerate() {
                    for &v in &clique[i + 1..] {
                        g.add_edge(u, v);
                    }
                }
            }
            Ok(g)
        }
    }
}

fn hub_cycles(family: &'static str, copies: usize, rim: usize) -> Result<Graph, GraphError> {
    if rim < 3 {
        return Err(param_error(family, "rim n >= 3"));
    }
    let prefixes = ["a", "b", "c", "d", "e", "f", "g", "h"];
    let mut names = vec!["hub".to_string()];
    for c in 0..copies {
        let prefix = if copies == 1 {
            "r".to_string()
        } else if c < prefixes.len() {
            prefixes[c].to_string()
        } else {
            format!("c{}_", c + 1)
        };
        for i in 1..=rim {
            names.push(format!("{prefix}{i}"));
        }
    }
    let mut g = Graph::new(names)?;
    for c in 0..copies {
        let base = 1 + c * rim;
        for i in 0..rim {
            g.add_edge(base + i, base + (i + 1) % rim);
            g.add_edge(0, base + i);
        }
    }
    Ok(g)
}

/// Proper 2-coloring if one exists. Within each component the side holding
/// the smallest vertex id comes first; sides are concatenated over components
/// in order of their smallest vertex.
pub fn bipartition(g: &Graph) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
    let mut color: Vec<Option<bool>> = vec![None; g.order()];
    for comp in g.components() {
        let root = comp[0];
        color[root] = Some(true);
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x) {
                match color[y] {
                    None => {
                        color[y] = Some(!color[x].unwrap());
                        queue.push_back(y);
                    }
                    Some(c) if c == color[x].unwrap() => return None,
                    _ => {}
                }
            }
        }
    }
    let mut left = Vec::new();
    let mut right = Vec::new();
    for v in g.vertices() {
        if color[v] == Some(true) {
            left.push(v);
        } else {
            right.push(v);
        }
    }
    Some((left, right))
}

/// Finds some odd cycle (as a vertex sequence) in a non-bipartite graph.
pub fn odd_cycle_witness(g: &Graph) -> Option<Vec<VertexId>> {
    // BFS layering; an edge within a layer closes an odd cycle through the
    // two vertices' lowest common ancestor in the BFS tree.
    let mut color: Vec<Option<(bool, VertexId)>> = vec![None; g.order()];
    for comp in g.components() {
        let root = comp[0];
        color[root] = Some((true, root));
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x) {
                match color[y] {
                    None => {
                        color[y] = Some((!color[x].unwrap().0, x));
                        queue.push_back(y);
                    }
                    Some((c, _)) if c == color[x].unwrap().0 => {
                        let path_to_root = |mut v: VertexId| {
                            let mut path = vec![v];
                            while color[v].unwrap().1 != v {
                                v = color[v].unwrap().1;
                                path.push(v);
                            }
                            path
                        };
                        let px = path_to_root(x);
                        let py = path_to_root(y);
                        let common: BTreeSet<_> = px.iter().copied().collect();
                        let meet = *py.iter().find(|v| common.contains(v)).unwrap();
                        let mut cycle: Vec<VertexId> =
                            px.iter().take_while(|&&v| v != meet).copied().collect();
                        cycle.push(meet);
                        let tail: Vec<VertexId> =
                            py.iter().take_while(|&&v| v != meet).copied().collect();
                        cycle.extend(tail.into_iter().rev());
                        return Some(cycle);
                    }
                    _ => {}
                }
            }
        }
    }
    None
}

/// An edge-disjoint cycle decomposition of an Eulerian graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    /// Each cycle as its vertex sequence (closing edge back to the first).
    pub cycles: Vec<Vec<VertexId>>,
    pub odd_count: usize,
}

/// Decomposes an Eulerian graph into edge-disjoint cycles with a
/// deterministic smallest-id-first walk, splitting the walk into simple
/// cycles as vertices repeat. Returns `None` if the graph is not Eulerian.
/// The decomposition is a witness; cycle decompositions are not unique.
pub fn odd_cycle_decomposition(g: &Graph) -> Option<CycleDecomposition> {
    if !g.is_eulerian() {
        return None;
    }
    let mut remaining: Vec<BTreeSet<VertexId>> =
        g.vertices().map(|v| g.neighbors(v).collect()).collect();
    let mut cycles: Vec<Vec<VertexId>> = Vec::new();
    while let Some(start) = (0..g.order()).find(|&v| !remaining[v].is_empty()) {
        // Walk smallest-first until a vertex repeats on the stack, popping
        // each completed simple cycle.
        let mut stack: Vec<VertexId> = vec![start];
        let mut on_stack: BTreeSet<VertexId> = BTreeSet::from([start]);
        loop {
            let here = *stack.last().unwrap();
            let Some(&next) = remaining[here].iter().next() else {
                // Exhausted vertex mid-walk: an Eulerian graph only does this
                // once the whole walk is consumed.
                stack.pop();
                on_stack.remove(&here);
                if stack.is_empty() {
                    break;
                }
                continue;
            };
            remaining[here].remove(&next);
            remaining[next].remove(&here);
            if on_stack.contains(&next) {
                let pos = stack.iter().rposition(|&v| v == next).unwrap();
                let cycle: Vec<VertexId> = stack.drain(pos..).collect();
                for v in &cycle {
                    on_stack.remove(v);
                }
                cycles.push(cycle);
                stack.push(next);
                on_stack.insert(next);
            } else {
                stack.push(next);
                on_stack.insert(next);
            }
        }
    }
    let odd_count = cycles.iter().filter(|c| c.len() % 2 == 1).count();
    Some(CycleDecomposition { cycles, odd_count })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_counts() {
        let k5 = generate(FamilySpec::Complete { n: 5 }).unwrap();
        assert_eq!(k5.order(), 5);
        assert_eq!(k5.size(), 10);
    }

    #[test]
    fn gear_counts() {
        let g = generate(FamilySpec::Gear { n: 4 }).unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(g.size(), 12);
    }

    #[test]
    fn complete_sun_structure() {
        let g = generate(FamilySpec::CompleteSun { n: 3 }).unwrap();
        assert_eq!(g.order(), 6);
        // W = {w1,w2,w3} independent
        for i in 3..6 {
            for j in (i + 1)..6 {
                assert!(!g.has_edge(i, j), "w vertices must be independent");
            }
        }
        // <U> complete
        for i in 0..3 {
            for j in (i + 1)..3 {
                assert!(g.has_edge(i, j));
            }
        }
        // each w_i has degree 2
        for i in 3..6 {
            assert_eq!(g.degree(i), 2);
        }
    }

    #[test]
    fn family_counts_match_closed_forms() {
        for n in 3..=8 {
            let wheel = generate(FamilySpec::Wheel { rim: n }).unwrap();
            assert_eq!(wheel.order(), n + 1);
            assert_eq!(wheel.size(), 2 * n);
            let gear = generate(FamilySpec::Gear { n }).unwrap();
            assert_eq!(gear.order(), 2 * n + 1);
            assert_eq!(gear.size(), 3 * n);
            let sun = generate(FamilySpec::CompleteSun { n }).unwrap();
            assert_eq!(sun.order(), 2 * n);
            assert_eq!(sun.size(), n * (n - 1) / 2 + 2 * n);
        }
        for (n, k) in [(2, 2), (3, 2), (4, 3)] {
            let w = generate(FamilySpec::Windmill {
                blade: n,
                copies: k,
            })
            .unwrap();
            assert_eq!(w.order(), k * (n - 1) + 1);
            assert_eq!(w.size(), k * n * (n - 1) / 2);
        }
        for (r, s) in [(2, 1), (3, 2), (4, 4)] {
            let g = generate(FamilySpec::CompleteSplit {
                clique: r,
                independent: s,
            })
            .unwrap();
            assert_eq!(g.order(), r + s);
            assert_eq!(g.size(), r * (r - 1) / 2 + r * s);
        }
    }

    #[test]
    fn invalid_parameters_name_constraint() {
        let err = generate(FamilySpec::Cycle { n: 2 }).unwrap_err();
        assert!(err.to_string().contains("n >= 3"));
        assert!(generate(FamilySpec::Windmill { blade: 1, copies: 3 }).is_err());
        assert!(generate(FamilySpec::CompleteSun { n: 2 }).is_err());
    }

    #[test]
    fn bipartition_of_even_cycle() {
        let c6 = generate(FamilySpec::Cycle { n: 6 }).unwrap();
        let (a, b) = bipartition(&c6).unwrap();
        assert_eq!(a.len(), 3);
        assert_eq!(b.len(), 3);
        assert_eq!(a[0], 0);
    }

    #[test]
    fn odd_cycle_not_bipartite() {
        let c5 = generate(FamilySpec::Cycle { n: 5 }).unwrap();
        assert!(bipartition(&c5).is_none());
        let witness = odd_cycle_witness(&c5).unwrap();
        assert_eq!(witness.len() % 2, 1);
        // the witness really is a cycle
        for (i, &v) in witness.iter().enumerate() {
            let next = witness[(i + 1) % witness.len()];
            assert!(c5.has_edge(v, next));
        }
    }

    #[test]
    fn gear_is_bipartite() {
        let g = generate(FamilySpec::Gear { n: 5 }).unwrap();
        assert!(bipartition(&g).is_some());
    }

    #[test]
    fn decomposition_of_single_cycle() {
        let c7 = generate(FamilySpec::Cycle { n: 7 }).unwrap();
        let d = odd_cycle_decomposition(&c7).unwrap();
        assert_eq!(d.cycles.len(), 1);
        assert_eq!(d.odd_count, 1);
    }

    #[test]
    fn decomposition_of_bowtie() {
        let bowtie = generate(FamilySpec::Windmill { blade: 3, copies: 2 }).unwrap();
        let d = odd_cycle_decomposition(&bowtie).unwrap();
        assert_eq!(d.cycles.len(), 2);
        assert_eq!(d.odd_count, 2);
    }

    #[test]
    fn decomposition_of_k5_covers_all_edges() {
        let k5 = generate(FamilySpec::Complete { n: 5 }).unwrap();
        let d = odd_cycle_decomposition(&k5).unwrap();
        let total: usize = d.cycles.iter().map(|c| c.len()).sum();
        assert_eq!(total, 10);
        // every walked edge exists and none repeats
        let mut seen = BTreeSet::new();
        for cycle in &d.cycles {
            assert!(cycle.len() >= 3);
            for (i, &v) in cycle.iter().enumerate() {
                let w = cycle[(i + 1) % cycle.len()];
                assert!(k5.has_edge(v, w));
                let key = (v.min(w), v.max(w));
                assert!(seen.insert(key), "edge reused in decomposition");
            }
        }
    }

    #[test]
    fn non_eulerian_has_no_decomposition() {
        let p4 = generate(FamilySpec::Path { n: 4 }).unwrap();
        assert!(odd_cycle_decomposition(&p4).is_none());
    }

    #[test]
    fn random_graph_is_deterministic() {
        let a = Graph::random(10, 0.5, 7);
        let b = Graph::random(10, 0.5, 7);
        assert_eq!(a, b);
        assert_ne!(a, Graph::random(10, 0.5, 8));
    }
}
