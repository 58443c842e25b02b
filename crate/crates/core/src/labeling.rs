//! Set-labelings of graphs: verification of the IASI / weak / strong /
//! uniform conditions, and constructors that realize weak and k-uniform
//! labelings with certified mono-edge counts.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{bipartition, odd_cycle_witness, Graph, VertexId};
use crate::intset::{mian_chowla, IntSet};
use crate::ops::{OpResult, VertexSource};

#[derive(Debug, Error)]
pub enum LabelError {
    #[error("vertex {0:?} has no label")]
    MissingLabel(String),
    #[error("non-mono vertices {0:?} and {1:?} are adjacent")]
    NotIndependent(String, String),
    #[error("requested cardinality for {0:?} must be at least 2")]
    BadCardinality(String),
    #[error("uniformity k must be at least 2")]
    BadUniformity,
    #[error("graph is not bipartite; odd cycle {0:?}")]
    NotBipartite(String),
    #[error("operation {0:?} does not support label transport")]
    UnsupportedTransport(String),
    #[error("operand labelings disagree on shared vertex {0:?}")]
    SharedVertexMismatch(String),
    #[error("constructed labeling failed verification: {0}")]
    ConstructionFailed(String),
}

/// An injective assignment of integer sets to vertices, keyed by vertex name
/// so labels survive graph operations. Edge labels are derived sumsets.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SetLabeling {
    labels: BTreeMap<String, IntSet>,
}

impl SetLabeling {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, name: impl Into<String>, label: IntSet) {
        self.labels.insert(name.into(), label);
    }

    pub fn get(&self, name: &str) -> Option<&IntSet> {
        self.labels.get(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &IntSet)> {
        self.labels.iter()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn as_map(&self) -> &BTreeMap<String, IntSet> {
        &self.labels
    }

    pub fn from_map(labels: BTreeMap<String, IntSet>) -> Self {
        SetLabeling { labels }
    }

    fn label_of(&self, g: &Graph, v: VertexId) -> Result<&IntSet, LabelError> {
        self.labels
            .get(g.name(v))
            .ok_or_else(|| LabelError::MissingLabel(g.name(v).to_string()))
    }

    /// Derived edge label: the sumset of the endpoint labels.
    pub fn edge_label(&self, g: &Graph, u: VertexId, v: VertexId) -> Result<IntSet, LabelError> {
        Ok(self.label_of(g, u)?.sumset(self.label_of(g, v)?))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    DuplicateVertexLabel { a: String, b: String },
    DuplicateEdgeLabel { a: (String, String), b: (String, String) },
    /// Edge label cardinality differs from max(|f(u)|,|f(v)|).
    WeakCondition {
        edge: (String, String),
        cardinality: usize,
        expected: usize,
    },
}

/// Outcome of checking a labeling against every IASI condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelingReport {
    pub is_iasi: bool,
    pub is_wiasi: bool,
    pub is_siasi: bool,
    pub mono_vertex_count: usize,
    pub mono_edge_count: usize,
    /// `Some(k)` when every edge label has cardinality exactly k
    /// (graphs with no edges report `None`).
    pub uniformity: Option<usize>,
    pub violations: Vec<Violation>,
}

/// Checks vertex injectivity, edge-label injectivity, and the weak, strong,
/// and uniformity conditions, listing every violating witness.
pub fn verify(g: &Graph, f: &SetLabeling) -> Result<LabelingReport, LabelError> {
    for v in g.vertices() {
        f.label_of(g, v)?;
    }
    let mut violations = Vec::new();

    let mut by_label: BTreeMap<&IntSet, VertexId> = BTreeMap::new();
    for v in g.vertices() {
        let label = f.label_of(g, v)?;
        if let Some(&prev) = by_label.get(label) {
            violations.push(Violation::DuplicateVertexLabel {
                a: g.name(prev).to_string(),
                b: g.name(v).to_string(),
            });
        } else {
            by_label.insert(label, v);
        }
    }
    let vertex_injective = violations.is_empty();

    let mut edge_labels: Vec<((VertexId, VertexId), IntSet)> = Vec::with_capacity(g.size());
    for (u, v) in g.edges() {
        edge_labels.push(((u, v), f.edge_label(g, u, v)?));
    }
    let mut by_edge_label: BTreeMap<&IntSet, (VertexId, VertexId)> = BTreeMap::new();
    let mut edge_injective = true;
    for ((u, v), label) in &edge_labels {
        if let Some(&(a, b)) = by_edge_label.get(label) {
            edge_injective = false;
            violations.push(Violation::DuplicateEdgeLabel {
                a: (g.name(a).to_string(), g.name(b).to_string()),
                b: (g.name(*u).to_string(), g.name(*v).to_string()),
            });
        } else {
            by_edge_label.insert(label, (*u, *v));
        }
    }

    let mut weak = true;
    let mut strong = true;
    let mut cardinalities = BTreeSet::new();
    for ((u, v), label) in &edge_labels {
        let (cu, cv) = (f.label_of(g, *u)?.len(), f.label_of(g, *v)?.len());
        cardinalities.insert(label.len());
        if label.len() != cu.max(cv) {
            weak = false;
            violations.push(Violation::WeakCondition {
                edge: (g.name(*u).to_string(), g.name(*v).to_string()),
                cardinality: label.len(),
                expected: cu.max(cv),
            });
        }
        if label.len() != cu * cv {
            strong = false;
        }
    }

    let is_iasi = vertex_injective && edge_injective;
    let mono_vertex_count = g
        .vertices()
        .filter(|&v| f.label_of(g, v).map(IntSet::is_singleton).unwrap_or(false))
        .count();
    let mono_edge_count = edge_labels
        .iter()
        .filter(|((u, v), _)| {
            f.label_of(g, *u).unwrap().is_singleton() && f.label_of(g, *v).unwrap().is_singleton()
        })
        .count();
    Ok(LabelingReport {
        is_iasi,
        is_wiasi: is_iasi && weak,
        is_siasi: is_iasi && strong,
        mono_vertex_count,
        mono_edge_count,
        uniformity: if cardinalities.len() == 1 {
            cardinalities.first().copied()
        } else {
            None
        },
        violations,
    })
}

fn check_independent(g: &Graph, nonmono: &BTreeSet<VertexId>) -> Result<(), LabelError> {
    for &u in nonmono {
        for v in g.neighbors(u) {
            if v > u && nonmono.contains(&v) {
                return Err(LabelError::NotIndependent(
                    g.name(u).to_string(),
                    g.name(v).to_string(),
                ));
            }
        }
    }
    Ok(())
}

/// Builds a weak labeling: vertices outside `nonmono` get distinct Sidon
/// singletons (the Mian-Chowla sequence), vertices in `nonmono` get
/// contiguous blocks of the requested cardinality (default 2) at offsets
/// spaced beyond twice the largest singleton so all labels stay distinct.
///
/// The mono edges of the result are exactly the edges inside the complement
/// of `nonmono`. The output is re-verified before it is returned.
pub fn construct_weak(
    g: &Graph,
    nonmono: &BTreeSet<VertexId>,
    cardinalities: &BTreeMap<VertexId, usize>,
) -> Result<SetLabeling, LabelError> {
    check_independent(g, nonmono)?;
    for (&v, &k) in cardinalities {
        if k < 2 {
            return Err(LabelError::BadCardinality(g.name(v).to_string()));
        }
    }
    let mono: Vec<VertexId> = g.vertices().filter(|v| !nonmono.contains(v)).collect();
    let singletons = mian_chowla(mono.len());
    let max_singleton = singletons.last().copied().unwrap_or(0);
    let max_card = nonmono
        .iter()
        .map(|v| cardinalities.get(v).copied().unwrap_or(2))
        .max()
        .unwrap_or(2);
    let stride = 2 * max_singleton + max_card as u64 + 1;

    let mut f = SetLabeling::new();
    for (&v, &s) in mono.iter().zip(&singletons) {
        f.insert(g.name(v), IntSet::singleton(s));
    }
    for (j, &v) in nonmono.iter().enumerate() {
        let k = cardinalities.get(&v).copied().unwrap_or(2);
        f.insert(g.name(v), IntSet::block((j as u64 + 1) * stride, k));
    }

    let report = verify(g, &f)?;
    if !report.is_wiasi {
        return Err(LabelError::ConstructionFailed(format!(
            "{:?}",
            report.violations
        )));
    }
    Ok(f)
}

/// `construct_weak` with the default cardinality 2 everywhere.
pub fn construct_weak_default(
    g: &Graph,
    nonmono: &BTreeSet<VertexId>,
) -> Result<SetLabeling, LabelError> {
    construct_weak(g, nonmono, &BTreeMap::new())
}

/// Builds a weakly k-uniform labeling of a bipartite graph: one side gets
/// Sidon singletons, the other distinct k-blocks, so every edge label has
/// cardinality exactly k. Errors on non-bipartite input, citing an odd
/// cycle.
pub fn construct_k_uniform(g: &Graph, k: usize) -> Result<SetLabeling, LabelError> {
    if k < 2 {
        return Err(LabelError::BadUniformity);
    }
    let Some((_, right)) = bipartition(g) else {
        let cycle = odd_cycle_witness(g)
            .unwrap_or_default()
            .iter()
            .map(|&v| g.name(v).to_string())
            .collect::<Vec<_>>()
            .join(",");
        return Err(LabelError::NotBipartite(cycle));
    };
    let nonmono: BTreeSet<VertexId> = right.iter().copied().collect();
    let cards: BTreeMap<VertexId, usize> = right.iter().map(|&v| (v, k)).collect();
    let f = construct_weak(g, &nonmono, &cards)?;
    let report = verify(g, &f)?;
    if g.size() > 0 && report.uniformity != Some(k) {
        return Err(LabelError::ConstructionFailed(format!(
            "uniformity {:?}, wanted {k}",
            report.uniformity
        )));
    }
    Ok(f)
}

/// Restriction of a labeling to a subgraph (vertices matched by name).
pub fn restrict(f: &SetLabeling, h: &Graph) -> Result<SetLabeling, LabelError> {
    let mut out = SetLabeling::new();
    for v in h.vertices() {
        let label = f
            .get(h.name(v))
            .ok_or_else(|| LabelError::MissingLabel(h.name(v).to_string()))?;
        out.insert(h.name(v), label.clone());
    }
    Ok(out)
}

/// Transports a labeling along an operation whose vertices all trace to a
/// single operand: carried vertices keep their label, vertices standing for
/// an operand edge receive that edge's sumset label. Supports line graphs,
/// total graphs, subdivisions, smoothing, powers, and complements.
pub fn transport(f: &SetLabeling, op: &OpResult) -> Result<SetLabeling, LabelError> {
    let mut out = SetLabeling::new();
    for (v, source) in op.provenance.iter().enumerate() {
        let name = op.graph.name(v);
        let label = match source {
            VertexSource::Original { name: orig } => f
                .get(orig)
                .ok_or_else(|| LabelError::MissingLabel(orig.clone()))?
                .clone(),
            VertexSource::EdgeVertex { u, v: w } => {
                let lu = f.get(u).ok_or_else(|| LabelError::MissingLabel(u.clone()))?;
                let lw = f.get(w).ok_or_else(|| LabelError::MissingLabel(w.clone()))?;
                lu.sumset(lw)
            }
            other => {
                return Err(LabelError::UnsupportedTransport(format!(
                    "{}: {:?}",
                    op.operation, other
                )))
            }
        };
        out.insert(name, label);
    }
    Ok(out)
}

/// Combines operand labelings across a binary operation (join, disjoint or
/// overlapping union). Shared union vertices must carry identical labels.
pub fn combine(
    f1: &SetLabeling,
    f2: &SetLabeling,
    op: &OpResult,
) -> Result<SetLabeling, LabelError> {
    let mut out = SetLabeling::new();
    for (v, source) in op.provenance.iter().enumerate() {
        let name = op.graph.name(v);
        let label = match source {
            VertexSource::Left { name: n } => f1
                .get(n)
                .ok_or_else(|| LabelError::MissingLabel(n.clone()))?
                .clone(),
            VertexSource::Right { name: n } => f2
                .get(n)
                .ok_or_else(|| LabelError::MissingLabel(n.clone()))?
                .clone(),
            VertexSource::Shared { name: n } => {
                let a = f1.get(n).ok_or_else(|| LabelError::MissingLabel(n.clone()))?;
                let b = f2.get(n).ok_or_else(|| LabelError::MissingLabel(n.clone()))?;
                if a != b {
                    return Err(LabelError::SharedVertexMismatch(n.clone()));
                }
                a.clone()
            }
            other => {
                return Err(LabelError::UnsupportedTransport(format!(
                    "{}: {:?}",
                    op.operation, other
                )))
            }
        };
        out.insert(name, label);
    }
    Ok(out)
}

/// Combines a base labeling with per-copy labelings across a corona.
pub fn combine_corona(
    f1: &SetLabeling,
    copies: &[SetLabeling],
    op: &OpResult,
) -> Result<SetLabeling, LabelError> {
    let mut out = SetLabeling::new();
    for (v, source) in op.provenance.iter().enumerate() {
        let name = op.graph.name(v);
        let label = match source {
            VertexSource::Left { name: n } => f1
                .get(n)
                .ok_or_else(|| LabelError::MissingLabel(n.clone()))?
                .clone(),
            VertexSource::CopyOf { copy, name: n } => copies
                .get(*copy)
                .and_then(|f| f.get(n))
                .ok_or_else(|| LabelError::MissingLabel(format!("copy{}:{}", copy + 1, n)))?
                .clone(),
            other => {
                return Err(LabelError::UnsupportedTransport(format!(
                    "{}: {:?}",
                    op.operation, other
                )))
            }
        };
        out.insert(name, label);
    }
    Ok(out)
}

/// Label source for claim probes. Singletons are distinct powers of 16 and
/// blocks start at fresh powers, so any sum of at most two derived labels
/// decodes uniquely from its minimum element; labels stay injective even
/// after transport through line graphs, total graphs, and subdivisions.
/// A single pool can label several operand graphs compatibly.
#[derive(Debug, Default)]
pub struct LabelPool {
    next: u32,
}

impl LabelPool {
    pub fn new() -> Self {
        LabelPool { next: 1 }
    }

    fn next_base(&mut self) -> u64 {
        assert!(self.next <= 14, "label pool exhausted");
        let base = 16u64.pow(self.next);
        self.next += 1;
        base
    }

    pub fn singleton(&mut self) -> IntSet {
        IntSet::singleton(self.next_base())
    }

    pub fn block(&mut self, k: usize) -> IntSet {
        assert!((2..=8).contains(&k));
        IntSet::block(self.next_base(), k)
    }

    /// Labels `g` with singletons outside `nonmono` and k-blocks inside.
    pub fn label(
        &mut self,
        g: &Graph,
        nonmono: &BTreeSet<VertexId>,
        k: usize,
    ) -> Result<SetLabeling, LabelError> {
        check_independent(g, nonmono)?;
        let mut f = SetLabeling::new();
        for v in g.vertices() {
            let label = if nonmono.contains(&v) {
                self.block(k)
            } else {
                self.singleton()
            };
            f.insert(g.name(v), label);
        }
        Ok(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};
    use crate::ops;

    fn labeling(pairs: &[(&str, &[u64])]) -> SetLabeling {
        let mut f = SetLabeling::new();
        for (name, elems) in pairs {
            f.insert(*name, IntSet::new(elems.iter().copied()).unwrap());
        }
        f
    }

    #[test]
    fn verify_single_edge_weak() {
        let k2 = generate(FamilySpec::Complete { n: 2 }).unwrap();
        let f = labeling(&[("v1", &[1]), ("v2", &[2, 4])]);
        let r = verify(&k2, &f).unwrap();
        assert!(r.is_wiasi);
        assert_eq!(r.mono_edge_count, 0);
        assert_eq!(r.uniformity, Some(2));
    }

    #[test]
    fn verify_all_singleton_triangle() {
        let k3 = generate(FamilySpec::Complete { n: 3 }).unwrap();
        let f = labeling(&[("v1", &[1]), ("v2", &[2]), ("v3", &[3])]);
        let r = verify(&k3, &f).unwrap();
        assert!(r.is_wiasi);
        assert!(r.is_siasi);
        assert_eq!(r.mono_edge_count, 3);
        assert_eq!(r.uniformity, Some(1));
    }

    #[test]
    fn verify_weak_violation() {
        let k2 = generate(FamilySpec::Complete { n: 2 }).unwrap();
        // sumset {4,5,6} has cardinality 3 > max(2,2)
        let f = labeling(&[("v1", &[1, 2]), ("v2", &[3, 4])]);
        let r = verify(&k2, &f).unwrap();
        assert!(!r.is_wiasi);
        assert!(r.is_iasi);
        assert!(matches!(r.violations[0], Violation::WeakCondition { .. }));
    }

    #[test]
    fn verify_missing_label_names_vertex() {
        let k2 = generate(FamilySpec::Complete { n: 2 }).unwrap();
        let f = labeling(&[("v1", &[1])]);
        let err = verify(&k2, &f).unwrap_err();
        assert!(err.to_string().contains("v2"));
    }

    #[test]
    fn construct_weak_on_even_cycle() {
        let c4 = generate(FamilySpec::Cycle { n: 4 }).unwrap();
        let nonmono = BTreeSet::from([0, 2]);
        let f = construct_weak_default(&c4, &nonmono).unwrap();
        let r = verify(&c4, &f).unwrap();
        assert!(r.is_wiasi);
        assert_eq!(r.mono_edge_count, 0);
    }

    #[test]
    fn construct_weak_on_odd_cycle() {
        let c5 = generate(FamilySpec::Cycle { n: 5 }).unwrap();
        let nonmono = BTreeSet::from([0, 2]);
        let f = construct_weak_default(&c5, &nonmono).unwrap();
        let r = verify(&c5, &f).unwrap();
        assert!(r.is_wiasi);
        assert_eq!(r.mono_edge_count, 1);
    }

    #[test]
    fn construct_weak_on_complete_graph() {
        let k4 = generate(FamilySpec::Complete { n: 4 }).unwrap();
        let f = construct_weak_default(&k4, &BTreeSet::from([0])).unwrap();
        let r = verify(&k4, &f).unwrap();
        assert!(r.is_wiasi);
        assert_eq!(r.mono_edge_count, 3);
    }

    #[test]
    fn construct_weak_rejects_adjacent_nonmono() {
        let k4 = generate(FamilySpec::Complete { n: 4 }).unwrap();
        let err = construct_weak_default(&k4, &BTreeSet::from([0, 1])).unwrap_err();
        assert!(err.to_string().contains("v1"));
        assert!(err.to_string().contains("v2"));
    }

    #[test]
    fn k_uniform_on_bipartite() {
        let g = generate(FamilySpec::CompleteBipartite { m: 2, n: 3 }).unwrap();
        let f = construct_k_uniform(&g, 3).unwrap();
        let r = verify(&g, &f).unwrap();
        assert!(r.is_wiasi);
        assert_eq!(r.uniformity, Some(3));
        for (u, v) in g.edges() {
            assert_eq!(f.edge_label(&g, u, v).unwrap().len(), 3);
        }

        let p2 = generate(FamilySpec::Path { n: 2 }).unwrap();
        let f = construct_k_uniform(&p2, 5).unwrap();
        assert_eq!(verify(&p2, &f).unwrap().uniformity, Some(5));
    }

    #[test]
    fn k_uniform_rejects_odd_cycle() {
        let c3 = generate(FamilySpec::Cycle { n: 3 }).unwrap();
        let err = construct_k_uniform(&c3, 2).unwrap_err();
        assert!(matches!(err, LabelError::NotBipartite(_)));
        assert!(err.to_string().contains("v1"));
    }

    #[test]
    fn restriction_stays_weak() {
        let k4 = generate(FamilySpec::Complete { n: 4 }).unwrap();
        let f = construct_weak_default(&k4, &BTreeSet::from([0])).unwrap();
        assert!(verify(&k4, &f).unwrap().is_wiasi);
        // any triangle inside K_4
        let h = k4.induced(&[0, 1, 2]);
        let fh = restrict(&f, &h).unwrap();
        assert!(verify(&h, &fh).unwrap().is_wiasi);
    }

    #[test]
    fn transport_to_total_graph_of_k2() {
        let k2 = generate(FamilySpec::Complete { n: 2 }).unwrap();
        // 1-uniform labeling: all singletons
        let f = labeling(&[("v1", &[1]), ("v2", &[2])]);
        let t = ops::total_graph(&k2);
        let tf = transport(&f, &t).unwrap();
        let r = verify(&t.graph, &tf).unwrap();
        assert!(r.is_wiasi);
    }

    #[test]
    fn transport_to_subdivision_with_nonmono_endpoint_violates() {
        let k2 = generate(FamilySpec::Complete { n: 2 }).unwrap();
        let f = labeling(&[("v1", &[1]), ("v2", &[16, 17])]);
        let s = ops::complete_subdivision(&k2);
        let sf = transport(&f, &s).unwrap();
        let r = verify(&s.graph, &sf).unwrap();
        assert!(!r.is_wiasi);
        assert!(r
            .violations
            .iter()
            .any(|v| matches!(v, Violation::WeakCondition { .. })));
    }

    #[test]
    fn transport_rejects_ops_without_elementwise_provenance() {
        let p3 = generate(FamilySpec::Path { n: 3 }).unwrap();
        let f = labeling(&[("v1", &[1]), ("v2", &[2]), ("v3", &[4])]);
        let product = ops::cartesian_product(&p3, &p3);
        let err = transport(&f, &product).unwrap_err();
        assert!(matches!(err, LabelError::UnsupportedTransport(_)));

        // missing source label is reported by name
        let q = Graph::new(vec!["v1".into(), "x".into()]).unwrap();
        let sub = ops::complete_subdivision(&q);
        let err = transport(&f, &sub).unwrap_err();
        assert!(err.to_string().contains('x'));
    }

    #[test]
    fn pool_labels_survive_total_graph_transport() {
        // all-singleton pool labeling of C_6 stays injective in T(C_6)
        let c6 = generate(FamilySpec::Cycle { n: 6 }).unwrap();
        let mut pool = LabelPool::new();
        let f = pool.label(&c6, &BTreeSet::new(), 2).unwrap();
        let t = ops::total_graph(&c6);
        let tf = transport(&f, &t).unwrap();
        let r = verify(&t.graph, &tf).unwrap();
        assert!(r.is_iasi, "violations: {:?}", r.violations);
        assert!(r.is_wiasi);
    }

    #[test]
    fn combine_over_join() {
        let p2 = generate(FamilySpec::Path { n: 2 }).unwrap();
        let p3 = generate(FamilySpec::Path { n: 3 }).unwrap();
        let mut pool = LabelPool::new();
        let f1 = pool.label(&p2, &BTreeSet::new(), 2).unwrap();
        let f2 = pool.label(&p3, &BTreeSet::from([1]), 2).unwrap();
        let j = ops::join(&p2, &p3);
        let jf = combine(&f1, &f2, &j).unwrap();
        let r = verify(&j.graph, &jf).unwrap();
        // g1 is 1-uniform, so the join stays weak
        assert!(r.is_wiasi, "violations: {:?}", r.violations);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        // random graph plus a vertex pool greedily pruned to an independent set
        fn graph_and_independent() -> impl Strategy<Value = (Graph, BTreeSet<VertexId>, Vec<usize>)>
        {
            (3usize..=10, any::<u64>(), proptest::collection::vec(0usize..10, 0..6), proptest::collection::vec(2usize..=5, 10))
                .prop_map(|(n, seed, picks, cards)| {
                    let g = Graph::random(n, 0.4, seed);
                    let mut nonmono = BTreeSet::new();
                    for v in picks.into_iter().filter(|&v| v < n) {
                        if nonmono.iter().all(|&u| !g.has_edge(u, v)) {
                            nonmono.insert(v);
                        }
                    }
                    (g, nonmono, cards)
                })
        }

        proptest! {
            #[test]
            fn construct_weak_always_verifies((g, nonmono, cards) in graph_and_independent()) {
                let cardinalities: BTreeMap<VertexId, usize> = nonmono
                    .iter()
                    .map(|&v| (v, cards[v]))
                    .collect();
                let f = construct_weak(&g, &nonmono, &cardinalities).unwrap();
                let report = verify(&g, &f).unwrap();
                prop_assert!(report.is_wiasi);
                let expected_mono = g
                    .edges()
                    .into_iter()
                    .filter(|(u, v)| !nonmono.contains(u) && !nonmono.contains(v))
                    .count();
                prop_assert_eq!(report.mono_edge_count, expected_mono);
                // restriction to any vertex-deleted subgraph stays weak
                if g.order() > 1 {
                    let keep: Vec<VertexId> = g.vertices().skip(1).collect();
                    let h = g.induced(&keep);
                    let fh = restrict(&f, &h).unwrap();
                    prop_assert!(verify(&h, &fh).unwrap().is_wiasi);
                }
            }
        }
    }
}
