//! Exact classical graph parameters at desk scale: matching number,
//! vertex cover, independence number, chromatic number, diameter.
//!
//! Everything here is exact search. Fields are reported as `None` when the
//! graph is larger than the configured cap rather than silently approximated.

use serde::Serialize;

use crate::graph::{bipartition, Graph, VertexId};
use crate::DEFAULT_EXACT_CAP;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphParams {
    pub order: usize,
    pub size: usize,
    /// Matching number, `None` above the exact cap.
    pub matching_number: Option<usize>,
    /// Vertex cover number, `None` above the exact cap.
    pub vertex_cover_number: Option<usize>,
    /// Independence number, `None` above the exact cap.
    pub independence_number: Option<usize>,
    /// Chromatic number, `None` above the exact cap.
    pub chromatic_number: Option<usize>,
    /// `None` when the graph is disconnected or empty.
    pub diameter: Option<usize>,
    pub is_bipartite: bool,
    pub is_eulerian: bool,
}

/// Computes all parameters with the default exact cap.
pub fn parameters(g: &Graph) -> GraphParams {
    parameters_with_cap(g, DEFAULT_EXACT_CAP)
}

pub fn parameters_with_cap(g: &Graph, cap: usize) -> GraphParams {
    let within = g.order() <= cap && g.order() <= 64;
    GraphParams {
        order: g.order(),
        size: g.size(),
        matching_number: within.then(|| maximum_matching(g)),
        vertex_cover_number: within.then(|| vertex_cover_number(g)),
        independence_number: within.then(|| independence_number(g)),
        chromatic_number: within.then(|| chromatic_number(g)),
        diameter: diameter(g),
        is_bipartite: bipartition(g).is_some(),
        is_eulerian: g.is_eulerian(),
    }
}

/// Longest shortest path; `None` for disconnected or empty graphs.
pub fn diameter(g: &Graph) -> Option<usize> {
    if g.order() == 0 {
        return None;
    }
    let mut best = 0;
    for s in g.vertices() {
        for d in g.bfs_distances(s) {
            best = best.max(d?);
        }
    }
    Some(best)
}

fn masks_of(g: &Graph) -> Vec<u64> {
    g.adjacency_masks()
        .expect("exact parameter search requires order <= 64")
}

/// Exact maximum matching by branch and bound over the lowest live vertex.
pub fn maximum_matching(g: &Graph) -> usize {
    let masks = masks_of(g);
    let full: u64 = if g.order() == 64 {
        u64::MAX
    } else {
        (1u64 << g.order()) - 1
    };
    let mut best = 0;
    matching_rec(&masks, full, 0, &mut best);
    best
}

fn matching_rec(masks: &[u64], avail: u64, current: usize, best: &mut usize) {
    if current > *best {
        *best = current;
    }
    if avail == 0 || current + (avail.count_ones() as usize) / 2 <= *best {
        return;
    }
    let v = avail.trailing_zeros() as usize;
    let rest = avail & !(1 << v);
    let mut nbrs = masks[v] & rest;
    // try each partner for v, then leaving v unmatched
    while nbrs != 0 {
        let u = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        matching_rec(masks, rest & !(1 << u), current + 1, best);
    }
    matching_rec(masks, rest, current, best);
}

/// Size of a maximum independent set among `cand`, stopping early once
/// `target` is reached (pass `usize::MAX` for the true maximum).
fn mis_size(masks: &[u64], cand: u64, target: usize) -> usize {
    fn rec(masks: &[u64], cand: u64, current: usize, best: &mut usize, target: usize) {
        if current > *best {
            *best = current;
        }
        if *best >= target || cand == 0 {
            return;
        }
        if current + cand.count_ones() as usize <= *best {
            return;
        }
        // branch on the highest-degree candidate
        let mut v = 0;
        let mut vdeg = usize::MAX;
        let mut scan = cand;
        while scan != 0 {
            let u = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let d = (masks[u] & cand).count_ones() as usize;
            if vdeg == usize::MAX || d > vdeg {
                v = u;
                vdeg = d;
            }
        }
        rec(masks, cand & !(1 << v) & !masks[v], current + 1, best, target);
        rec(masks, cand & !(1 << v), current, best, target);
    }
    let mut best = 0;
    rec(masks, cand, 0, &mut best, target);
    best
}

pub fn independence_number(g: &Graph) -> usize {
    mis_size(&masks_of(g), full_mask(g.order()), usize::MAX)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// The lexicographically smallest maximum independent set (compared as
/// sorted id sequences).
pub fn max_independent_set(g: &Graph) -> Vec<VertexId> {
    let masks = masks_of(g);
    let n = g.order();
    let alpha = mis_size(&masks, full_mask(n), usize::MAX);
    let mut chosen: Vec<VertexId> = Vec::new();
    let mut cand = full_mask(n);
    for v in 0..n {
        if cand & (1 << v) == 0 {
            continue;
        }
        if chosen.len() == alpha {
            break;
        }
        let after = cand & !(1 << v) & !masks[v] & !(full_mask(v + 1));
        let need = alpha - chosen.len() - 1;
        if mis_size(&masks, after, need) >= need {
            chosen.push(v);
            cand &= !(1 << v) & !masks[v];
        }
    }
    debug_assert_eq!(chosen.len(), alpha);
    chosen
}

/// Exact vertex cover number by branching on an uncovered edge. This is an
/// independent route from the independence-number search (Gallai ties them
/// together, which the tests exploit).
pub fn vertex_cover_number(g: &Graph) -> usize {
    let edges = g.edges();
    let mut best = g.order();
    cover_rec(&edges, 0, 0u64, 0, &mut best);
    best
}

fn cover_rec(
    edges: &[(VertexId, VertexId)],
    idx: usize,
    in_cover: u64,
    count: usize,
    best: &mut usize,
) {
    if count >= *best {
        return;
    }
    let mut i = idx;
    while i < edges.len() {
        let (u, v) = edges[i];
        if in_cover & (1 << u) == 0 && in_cover & (1 << v) == 0 {
            cover_rec(edges, i + 1, in_cover | (1 << u), count + 1, best);
            cover_rec(edges, i + 1, in_cover | (1 << v), count + 1, best);
            return;
        }
        i += 1;
    }
    *best = count;
}

/// Minimum cover size with some vertices forbidden from the cover;
/// `None` when infeasible (an edge has both endpoints forbidden).
fn cover_size_forbidden(
    edges: &[(VertexId, VertexId)],
    forbidden: u64,
    upper: usize,
) -> Option<usize> {
    fn rec(
        edges: &[(VertexId, VertexId)],
        idx: usize,
        in_cover: u64,
        forbidden: u64,
        count: usize,
        best: &mut Option<usize>,
        upper: usize,
    ) {
        if count >= best.unwrap_or(upper + 1) {
            return;
        }
        let mut i = idx;
        while i < edges.len() {
            let (u, v) = edges[i];
            if in_cover & (1 << u) == 0 && in_cover & (1 << v) == 0 {
                let u_ok = forbidden & (1 << u) == 0;
                let v_ok = forbidden & (1 << v) == 0;
                if u_ok {
                    rec(edges, i + 1, in_cover | (1 << u), forbidden, count + 1, best, upper);
                }
                if v_ok {
                    rec(edges, i + 1, in_cover | (1 << v), forbidden, count + 1, best, upper);
                }
                return;
            }
            i += 1;
        }
        if best.is_none_or(|b| count < b) {
            *best = Some(count);
        }
    }
    let mut best = None;
    rec(edges, 0, 0, forbidden, 0, &mut best, upper);
    best.filter(|&b| b <= upper)
}

/// The lexicographically smallest minimum vertex cover.
pub fn min_vertex_cover(g: &Graph) -> Vec<VertexId> {
    let edges = g.edges();
    let beta = vertex_cover_number(g);
    let mut chosen: Vec<VertexId> = Vec::new();
    let mut in_cover = 0u64;
    let mut forbidden = 0u64;
    for v in 0..g.order() {
        if chosen.len() == beta {
            break;
        }
        // keep v in the cover only if a minimum cover extends chosen + {v}
        // with every earlier undecided vertex left out
        let remaining: Vec<(VertexId, VertexId)> = edges
            .iter()
            .copied()
            .filter(|&(a, b)| {
                (in_cover | 1 << v) & (1 << a) == 0 && (in_cover | 1 << v) & (1 << b) == 0
            })
            .collect();
        let need = beta - chosen.len() - 1;
        if cover_size_forbidden(&remaining, forbidden | full_mask(v + 1), need)
            .is_some_and(|c| c <= need)
        {
            chosen.push(v);
            in_cover |= 1 << v;
        } else {
            forbidden |= 1 << v;
        }
    }
    debug_assert_eq!(chosen.len(), beta);
    chosen
}

/// Exact chromatic number via iterative-deepening backtracking.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.size() == 0 {
        return if g.order() == 0 { 0 } else { 1 };
    }
    if bipartition(&g.clone()).is_some() {
        return 2;
    }
    let masks = masks_of(g);
    // order by descending degree for faster failure
    let mut order: Vec<VertexId> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for k in 3..=g.order() {
        if k_colorable(&masks, &order, k) {
            return k;
        }
    }
    g.order()
}

fn k_colorable(masks: &[u64], order: &[VertexId], k: usize) -> bool {
    fn rec(masks: &[u64], order: &[VertexId], colors: &mut [usize], pos: usize, used: usize, k: usize) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        // allowing only one fresh color breaks color-permutation symmetry
        let limit = (used + 1).min(k);
        'next: for c in 0..limit {
            let mut nbrs = masks[v];
            while nbrs != 0 {
                let u = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                if colors[u] == c {
                    continue 'next;
                }
            }
            colors[v] = c;
            if rec(masks, order, colors, pos + 1, used.max(c + 1), k) {
                return true;
            }
            colors[v] = usize::MAX;
        }
        false
    }
    let mut colors = vec![usize::MAX; masks.len()];
    rec(masks, order, &mut colors, 0, 0, k)
}

/// All proper colorings of `g` with exactly `k` color classes available,
/// reporting the largest possible total size of the two biggest classes.
/// Exponential; intended for desk-scale claim evaluation only.
pub fn best_two_color_classes(g: &Graph, k: usize) -> usize {
    let masks = masks_of(g);
    let n = g.order();
    let mut best = 0;
    fn rec(
        masks: &[u64],
        n: usize,
        colors: &mut [usize],
        v: usize,
        used: usize,
        k: usize,
        best: &mut usize,
    ) {
        if v == n {
            let mut sizes = vec![0usize; k];
            for &c in colors.iter() {
                sizes[c] += 1;
            }
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            let two = sizes[0] + sizes.get(1).copied().unwrap_or(0);
            if two > *best {
                *best = two;
            }
            return;
        }
        let limit = (used + 1).min(k);
        'next: for c in 0..limit {
            let mut nbrs = masks[v];
            while nbrs != 0 {
                let u = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                if u < v && colors[u] == c {
                    continue 'next;
                }
            }
            colors[v] = c;
            rec(masks, n, colors, v + 1, used.max(c + 1), k, best);
        }
    }
    let mut colors = vec![usize::MAX; n];
    rec(&masks, n, &mut colors, 0, 0, k, &mut best);
    best
}

/// Minimum number of edges whose deletion leaves a bipartite graph,
/// computed as `|E|` minus the maximum cut over all vertex bipartitions.
/// Exhaustive over 2^(n-1) bipartitions; an independent oracle used by the
/// claims catalog, not by the sparing solver.
pub fn edge_bipartization_number(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 24, "bipartization oracle is exhaustive; order capped at 24");
    if n == 0 {
        return 0;
    }
    let edges = g.edges();
    let mut best_cut = 0;
    for side in 0..(1u64 << (n - 1)) {
        let cut = edges
            .iter()
            .filter(|&&(u, v)| ((side >> u) ^ (side >> v)) & 1 == 1)
            .count();
        best_cut = best_cut.max(cut);
    }
    g.size() - best_cut
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, FamilySpec};

    #[test]
    fn c5_parameters() {
        let c5 = generate(FamilySpec::Cycle { n: 5 }).unwrap();
        let p = parameters(&c5);
        assert_eq!(p.matching_number, Some(2));
        assert_eq!(p.independence_number, Some(2));
        assert_eq!(p.vertex_cover_number, Some(3));
        assert_eq!(p.chromatic_number, Some(3));
        assert_eq!(p.diameter, Some(2));
        assert!(!p.is_bipartite);
        assert!(p.is_eulerian);
    }

    #[test]
    fn k33_parameters() {
        let g = generate(FamilySpec::CompleteBipartite { m: 3, n: 3 }).unwrap();
        let p = parameters(&g);
        assert!(p.is_bipartite);
        assert_eq!(p.chromatic_number, Some(2));
        assert_eq!(p.matching_number, Some(3));
    }

    fn petersen() -> Graph {
        let mut g = Graph::with_order(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5); // outer cycle
            g.add_edge(i, i + 5); // spokes
            g.add_edge(5 + i, 5 + (i + 2) % 5); // pentagram
        }
        g
    }

    /// Exhaustive matching enumeration, the independent oracle for the
    /// branch-and-bound matcher.
    fn matching_by_enumeration(g: &Graph) -> usize {
        let edges = g.edges();
        let mut best = 0;
        for mask in 0u32..(1 << edges.len()) {
            let mut touched = 0u64;
            let mut ok = true;
            let mut count = 0;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    if touched & (1 << u) != 0 || touched & (1 << v) != 0 {
                        ok = false;
                        break;
                    }
                    touched |= (1 << u) | (1 << v);
                    count += 1;
                }
            }
            if ok && count > best {
                best = count;
            }
        }
        best
    }

    #[test]
    fn petersen_matching_is_five() {
        let g = petersen();
        assert_eq!(matching_by_enumeration(&g), 5);
        assert_eq!(maximum_matching(&g), 5);
    }

    #[test]
    fn matching_agrees_with_enumeration_on_random_graphs() {
        for seed in 0..20 {
            let g = Graph::random(8, 0.4, seed);
            assert_eq!(maximum_matching(&g), matching_by_enumeration(&g), "seed {seed}");
        }
    }

    #[test]
    fn gallai_identity_on_families_and_random() {
        let mut graphs = vec![
            generate(FamilySpec::Complete { n: 7 }).unwrap(),
            generate(FamilySpec::Wheel { rim: 6 }).unwrap(),
            generate(FamilySpec::Gear { n: 4 }).unwrap(),
            generate(FamilySpec::CompleteSun { n: 4 }).unwrap(),
        ];
        for seed in 0..20 {
            graphs.push(Graph::random(9, 0.5, seed));
        }
        for g in &graphs {
            let alpha = independence_number(g);
            let beta = vertex_cover_number(g);
            assert_eq!(alpha + beta, g.order());
        }
    }

    #[test]
    fn witnesses_are_consistent() {
        for seed in 0..10 {
            let g = Graph::random(9, 0.5, seed);
            let mis = max_independent_set(&g);
            assert_eq!(mis.len(), independence_number(&g));
            for (i, &u) in mis.iter().enumerate() {
                for &v in &mis[i + 1..] {
                    assert!(!g.has_edge(u, v));
                }
            }
            let cover = min_vertex_cover(&g);
            assert_eq!(cover.len(), vertex_cover_number(&g));
            let in_cover: std::collections::BTreeSet<_> = cover.into_iter().collect();
            for (u, v) in g.edges() {
                assert!(in_cover.contains(&u) || in_cover.contains(&v));
            }
        }
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&generate(FamilySpec::Complete { n: 6 }).unwrap()), 6);
        assert_eq!(chromatic_number(&generate(FamilySpec::Cycle { n: 7 }).unwrap()), 3);
        assert_eq!(chromatic_number(&generate(FamilySpec::Cycle { n: 8 }).unwrap()), 2);
        assert_eq!(chromatic_number(&generate(FamilySpec::Wheel { rim: 5 }).unwrap()), 4);
        assert_eq!(chromatic_number(&generate(FamilySpec::Wheel { rim: 6 }).unwrap()), 3);
        assert_eq!(chromatic_number(&petersen()), 3);
    }

    #[test]
    fn diameter_values() {
        assert_eq!(diameter(&generate(FamilySpec::Cycle { n: 6 }).unwrap()), Some(3));
        assert_eq!(diameter(&generate(FamilySpec::Complete { n: 4 }).unwrap()), Some(1));
        assert_eq!(diameter(&petersen()), Some(2));
        let mut disconnected = Graph::with_order(4);
        disconnected.add_edge(0, 1);
        disconnected.add_edge(2, 3);
        assert_eq!(diameter(&disconnected), None);
    }

    #[test]
    fn cap_marks_fields_unsupported() {
        let g = generate(FamilySpec::Complete { n: 8 }).unwrap();
        let p = parameters_with_cap(&g, 5);
        assert_eq!(p.matching_number, None);
        assert_eq!(p.chromatic_number, None);
        assert_eq!(p.order, 8);
    }

    #[test]
    fn bipartization_of_k5_is_four() {
        let k5 = generate(FamilySpec::Complete { n: 5 }).unwrap();
        assert_eq!(edge_bipartization_number(&k5), 4);
        let c7 = generate(FamilySpec::Cycle { n: 7 }).unwrap();
        assert_eq!(edge_bipartization_number(&c7), 1);
        let c8 = generate(FamilySpec::Cycle { n: 8 }).unwrap();
        assert_eq!(edge_bipartization_number(&c8), 0);
    }

    #[test]
    fn two_best_color_classes() {
        // odd cycle: 3-chromatic, best two classes miss exactly one vertex
        let c7 = generate(FamilySpec::Cycle { n: 7 }).unwrap();
        assert_eq!(best_two_color_classes(&c7, 3), 6);
        // complete graph: any two classes are two vertices
        let k5 = generate(FamilySpec::Complete { n: 5 }).unwrap();
        assert_eq!(best_two_color_classes(&k5, 5), 2);
    }
}
