//! Exact sparing-number oracle.
//!
//! In any weak set-labeling the non-mono vertices form an independent set,
//! and every independent set is realizable as exactly the non-mono vertices,
//! so the sparing number is the minimum, over independent sets I, of the
//! number of edges induced on the complement of I. The exact solver branches
//! on vertex inclusion with the committed induced-edge count as lower bound;
//! the brute-force solver enumerates all subsets and exists to validate it.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::params;
use crate::DEFAULT_EXACT_CAP;

#[derive(Debug, Error)]
pub enum SparingError {
    #[error("order {order} exceeds the exact cap {cap}; use the heuristic solver")]
    CapExceeded { order: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SparingResult {
    /// Minimum number of mono-indexed edges over all weak labelings
    /// (an upper bound when `exact` is false).
    pub value: usize,
    /// Independent set of vertices receiving non-singleton labels;
    /// the lexicographically smallest optimal witness when exact.
    pub witness_nonmono: Vec<VertexId>,
    /// Edges induced on the complement of the witness.
    pub witness_mono_edges: Vec<(VertexId, VertexId)>,
    pub exact: bool,
    /// Search nodes visited.
    pub explored: u64,
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Branch-and-bound minimum of the induced-complement edge count.
///
/// `forced_in`/`forced_out` fix part of the assignment (forced_in must be
/// independent); remaining vertices are decided in descending-degree order.
/// Prunes once the committed count reaches `best`; `target` allows an early
/// exit for feasibility queries.
struct Search<'a> {
    masks: &'a [u64],
    order: &'a [VertexId],
    explored: u64,
    best: usize,
    target: usize,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, in_set: u64, out_set: u64, count: usize) {
        self.explored += 1;
        if count >= self.best || self.best <= self.target {
            return;
        }
        let Some(&v) = self.order.get(pos) else {
            self.best = count;
            return;
        };
        let bit = 1u64 << v;
        if (in_set | out_set) & bit != 0 {
            // already decided (forced assignment)
            self.run(pos + 1, in_set, out_set, count);
            return;
        }
        if self.masks[v] & in_set == 0 {
            self.run(pos + 1, in_set | bit, out_set, count);
        }
        let gained = (self.masks[v] & out_set).count_ones() as usize;
        self.run(pos + 1, in_set, out_set | bit, count + gained);
    }
}

fn min_induced_count(
    masks: &[u64],
    order: &[VertexId],
    forced_in: u64,
    forced_out: u64,
    upper: usize,
    target: usize,
    explored: &mut u64,
) -> usize {
    // seed the committed count with edges already inside forced_out
    let count = count_edges_inside(masks, forced_out);
    let mut search = Search {
        masks,
        order,
        explored: 0,
        best: upper + 1,
        target,
    };
    search.run(0, forced_in, forced_out, count);
    *explored += search.explored;
    search.best
}

fn degree_order(g: &Graph) -> Vec<VertexId> {
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order
}

/// Greedy independent set maximizing degree sum, as an initial upper bound.
fn greedy_value(g: &Graph) -> usize {
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut taken: Vec<VertexId> = Vec::new();
    let mut sum = 0;
    for v in order {
        if taken.iter().all(|&u| !g.has_edge(u, v)) {
            taken.push(v);
            sum += g.degree(v);
        }
    }
    g.size() - sum
}

fn mono_edges_of(g: &Graph, nonmono: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    let inside: std::collections::BTreeSet<VertexId> = nonmono.iter().copied().collect();
    g.edges()
        .into_iter()
        .filter(|(u, v)| !inside.contains(u) && !inside.contains(v))
        .collect()
}

/// Exact sparing number with the default cap.
pub fn sparing_exact(g: &Graph) -> Result<SparingResult, SparingError> {
    sparing_exact_with_cap(g, DEFAULT_EXACT_CAP)
}

pub fn sparing_exact_with_cap(g: &Graph, cap: usize) -> Result<SparingResult, SparingError> {
    let n = g.order();
    if n > cap || n > 64 {
        return Err(SparingError::CapExceeded {
            order: n,
            cap: cap.min(64),
        });
    }
    let masks = g.adjacency_masks().expect("order checked above");
    let order = degree_order(g);
    let mut explored = 0;
    let upper = greedy_value(g);
    let value = min_induced_count(&masks, &order, 0, 0, upper, 0, &mut explored).min(upper);

    // lexicographically smallest optimal witness: extend greedily, keeping a
    // vertex only when an optimal completion through higher ids exists
    let mut witness: Vec<VertexId> = Vec::new();
    let mut in_mask = 0u64;
    for v in 0..n {
        let out_now = full_mask(n) & !in_mask;
        let count_now = count_edges_inside(&masks, out_now);
        if count_now == value {
            break; // the prefix alone is optimal; extensions are lex-larger
        }
        let bit = 1u64 << v;
        if masks[v] & in_mask != 0 {
            continue;
        }
        let forced_out = full_mask(v + 1) & !(in_mask | bit);
        let reachable = min_induced_count(
            &masks,
            &order,
            in_mask | bit,
            forced_out,
            value,
            value,
            &mut explored,
        );
        if reachable == value {
            witness.push(v);
            in_mask |= bit;
        }
    }
    let witness_mono_edges = mono_edges_of(g, &witness);
    debug_assert_eq!(witness_mono_edges.len(), value);
    Ok(SparingResult {
        value,
        witness_nonmono: witness,
        witness_mono_edges,
        exact: true,
        explored,
    })
}

fn count_edges_inside(masks: &[u64], set: u64) -> usize {
    let mut count = 0;
    let mut scan = set;
    while scan != 0 {
        let v = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        count += (masks[v] & scan).count_ones() as usize;
    }
    count
}

/// Exhaustive reference oracle over all 2^n vertex subsets (order <= 20).
pub fn sparing_bruteforce(g: &Graph) -> Result<SparingResult, SparingError> {
    const BRUTE_CAP: usize = 20;
    let n = g.order();
    if n > BRUTE_CAP {
        return Err(SparingError::CapExceeded {
            order: n,
            cap: BRUTE_CAP,
        });
    }
    let masks = g.adjacency_masks().expect("order checked above");
    let m = g.size();
    let degs: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut best = m + 1;
    let mut explored = 0u64;
    let mut best_witness: Option<Vec<VertexId>> = None;
    for mask in 0u64..(1 << n) {
        explored += 1;
        let mut independent = true;
        let mut degsum = 0;
        let mut scan = mask;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if masks[v] & mask != 0 {
                independent = false;
                break;
            }
            degsum += degs[v];
        }
        if !independent {
            continue;
        }
        // independent set: induced complement has m - degsum edges
        let value = m - degsum;
        if value < best {
            best = value;
            best_witness = Some(bits_of(mask));
        } else if value == best {
            let candidate = bits_of(mask);
            if best_witness.as_ref().is_none_or(|w| candidate < *w) {
                best_witness = Some(candidate);
            }
        }
    }
    let witness = best_witness.unwrap_or_default();
    Ok(SparingResult {
        value: best,
        witness_mono_edges: mono_edges_of(g, &witness),
        witness_nonmono: witness,
        exact: true,
        explored,
    })
}

fn bits_of(mask: u64) -> Vec<VertexId> {
    let mut out = Vec::new();
    let mut scan = mask;
    while scan != 0 {
        let v = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        out.push(v);
    }
    out
}

/// Greedy plus swap/add/drop local search; the value is an upper bound.
pub fn sparing_heuristic(g: &Graph) -> SparingResult {
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut taken: Vec<VertexId> = Vec::new();
    for &v in &order {
        if taken.iter().all(|&u| !g.has_edge(u, v)) {
            taken.push(v);
        }
    }
    let mut explored = 0u64;
    let degsum =
        |set: &[VertexId]| -> usize { set.iter().map(|&v| g.degree(v)).sum() };
    let mut improved = true;
    while improved {
        improved = false;
        explored += 1;
        // additions
        for v in g.vertices() {
            if !taken.contains(&v) && taken.iter().all(|&u| !g.has_edge(u, v)) {
                taken.push(v);
                improved = true;
            }
        }
        // 1-for-1 swaps that raise the degree sum
        'swap: for i in 0..taken.len() {
            for v in g.vertices() {
                if taken.contains(&v) || g.degree(v) <= g.degree(taken[i]) {
                    continue;
                }
                let ok = taken
                    .iter()
                    .enumerate()
                    .all(|(j, &u)| j == i || !g.has_edge(u, v));
                if ok {
                    taken[i] = v;
                    improved = true;
                    break 'swap;
                }
            }
        }
    }
    taken.sort_unstable();
    let value = g.size() - degsum(&taken);
    SparingResult {
        value,
        witness_mono_edges: mono_edges_of(g, &taken),
        witness_nonmono: taken,
        exact: false,
        explored,
    }
}

/// Minimum number of mono-indexed vertices over weak labelings (the vertex
/// cover number), together with the maximum non-mono witness (a maximum
/// independent set).
pub fn mono_vertex_minimum(
    g: &Graph,
    cap: usize,
) -> Result<(usize, Vec<VertexId>), SparingError> {
    if g.order() > cap || g.order() > 64 {
        return Err(SparingError::CapExceeded {
            order: g.order(),
            cap: cap.min(64),
        });
    }
    Ok((
        params::vertex_cover_number(g),
        params::max_independent_set(g),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    fn phi(g: &Graph) -> usize {
        sparing_exact(g).unwrap().value
    }

    #[test]
    fn desk_scale_values() {
        assert_eq!(phi(&generate(FamilySpec::Complete { n: 5 }).unwrap()), 6);
        assert_eq!(phi(&generate(FamilySpec::Cycle { n: 7 }).unwrap()), 1);
        assert_eq!(
            phi(&generate(FamilySpec::CompleteBipartite { m: 3, n: 3 }).unwrap()),
            0
        );
        // bowtie, cross-checking (k/2)(n-1)(n-2) at n=3, k=2
        assert_eq!(
            phi(&generate(FamilySpec::Windmill { blade: 3, copies: 2 }).unwrap()),
            2
        );
    }

    #[test]
    fn degenerate_graphs() {
        let empty = Graph::with_order(4);
        let r = sparing_bruteforce(&empty).unwrap();
        assert_eq!(r.value, 0);
        assert_eq!(r.witness_nonmono, Vec::<usize>::new());

        let k2 = generate(FamilySpec::Complete { n: 2 }).unwrap();
        let r = sparing_exact(&k2).unwrap();
        assert_eq!(r.value, 0);
    }

    #[test]
    fn exact_matches_bruteforce_on_random_graphs() {
        for seed in 0..60 {
            let n = 4 + (seed as usize % 9);
            let p = [0.2, 0.5, 0.8][seed as usize % 3];
            let g = Graph::random(n, p, seed);
            let a = sparing_exact(&g).unwrap();
            let b = sparing_bruteforce(&g).unwrap();
            assert_eq!(a.value, b.value, "seed {seed}");
            assert_eq!(a.witness_nonmono, b.witness_nonmono, "witness seed {seed}");
        }
    }

    #[test]
    fn witness_invariants() {
        for g in [
            generate(FamilySpec::Wheel { rim: 6 }).unwrap(),
            generate(FamilySpec::CompleteSun { n: 4 }).unwrap(),
            generate(FamilySpec::Gear { n: 4 }).unwrap(),
        ] {
            let r = sparing_exact(&g).unwrap();
            for (i, &u) in r.witness_nonmono.iter().enumerate() {
                for &v in &r.witness_nonmono[i + 1..] {
                    assert!(!g.has_edge(u, v), "witness must be independent");
                }
            }
            assert_eq!(r.witness_mono_edges.len(), r.value);
        }
    }

    #[test]
    fn zero_iff_bipartite() {
        let mut graphs = vec![
            generate(FamilySpec::Gear { n: 5 }).unwrap(),
            generate(FamilySpec::Cycle { n: 9 }).unwrap(),
            generate(FamilySpec::Wheel { rim: 4 }).unwrap(),
        ];
        for seed in 0..30 {
            graphs.push(Graph::random(8, 0.4, seed));
        }
        for g in &graphs {
            let zero = phi(g) == 0;
            let bipartite = crate::graph::bipartition(g).is_some();
            assert_eq!(zero, bipartite);
        }
    }

    #[test]
    fn cycle_witness_parity() {
        for n in 3..=10 {
            let g = generate(FamilySpec::Cycle { n }).unwrap();
            let r = sparing_exact(&g).unwrap();
            assert_eq!(r.value % 2, n % 2);
        }
    }

    #[test]
    fn adding_an_edge_never_decreases_phi() {
        for seed in 0..30 {
            let g = Graph::random(8, 0.35, seed);
            let before = phi(&g);
            let mut h = g.clone();
            let mut added = false;
            'outer: for u in h.vertices() {
                for v in (u + 1)..h.order() {
                    if !h.has_edge(u, v) {
                        h.add_edge(u, v);
                        added = true;
                        break 'outer;
                    }
                }
            }
            if added {
                assert!(phi(&h) >= before, "seed {seed}");
            }
        }
    }

    #[test]
    fn heuristic_reaches_known_optima() {
        let k10 = generate(FamilySpec::Complete { n: 10 }).unwrap();
        let r = sparing_heuristic(&k10);
        assert!(!r.exact);
        assert_eq!(r.value, 36);

        let c101 = generate(FamilySpec::Cycle { n: 101 }).unwrap();
        assert!(sparing_heuristic(&c101).value <= 1);

        let bip = generate(FamilySpec::CompleteBipartite { m: 20, n: 30 }).unwrap();
        assert_eq!(sparing_heuristic(&bip).value, 0);
    }

    #[test]
    fn cap_errors_direct_to_heuristic() {
        let g = generate(FamilySpec::Cycle { n: 40 }).unwrap();
        let err = sparing_exact_with_cap(&g, 30).unwrap_err();
        assert!(err.to_string().contains("heuristic"));
        assert!(sparing_bruteforce(&g).is_err());
    }

    #[test]
    fn mono_vertex_minimum_is_cover_number() {
        let c5 = generate(FamilySpec::Cycle { n: 5 }).unwrap();
        assert_eq!(mono_vertex_minimum(&c5, 30).unwrap().0, 3);
        let k4 = generate(FamilySpec::Complete { n: 4 }).unwrap();
        assert_eq!(mono_vertex_minimum(&k4, 30).unwrap().0, 3);
        let k23 = generate(FamilySpec::CompleteBipartite { m: 2, n: 3 }).unwrap();
        let (beta, alpha_witness) = mono_vertex_minimum(&k23, 30).unwrap();
        assert_eq!(beta, 2);
        assert_eq!(alpha_witness.len(), 3);
    }
}
