//! Exhaustive generation of connected graphs with maximum degree 3.
//!
//! The main generator grows graphs one vertex at a time: every connected
//! graph has a vertex whose removal leaves it connected, so attaching a new
//! vertex to every admissible set of 1 to 3 existing vertices, over all
//! connected graphs of order `k`, reaches every connected graph of order
//! `k + 1`. Isomorphic copies are merged through [`canonical_form`].
//!
//! A second, unrelated generator adds edges one at a time to the empty graph
//! on `n` vertices. A third one walks every labelled edge subset. Both exist
//! only to cross-check the first.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::exec::Exec;

use super::canon::{canonical_form, SmallGraph};

/// Children of `g` obtained by attaching one new vertex.
fn vertex_children(g: &SmallGraph) -> Vec<SmallGraph> {
    let n = g.order();
    let open: Vec<usize> = (0..n).filter(|&v| g.degree(v) < 3).collect();
    let mut out = Vec::new();
    let k = open.len();
    for a in 0..k {
        out.push(attach(g, &[open[a]]));
        for b in a + 1..k {
            out.push(attach(g, &[open[a], open[b]]));
            for c in b + 1..k {
                out.push(attach(g, &[open[a], open[b], open[c]]));
            }
        }
    }
    out
}

fn attach(g: &SmallGraph, targets: &[usize]) -> SmallGraph {
    let mut h = *g;
    h.n += 1;
    let new = g.order();
    for &t in targets {
        h.add_edge(new, t);
    }
    canonical_form(&h)
}

fn dedupe(mut graphs: Vec<SmallGraph>) -> Vec<SmallGraph> {
    graphs.sort_unstable();
    graphs.dedup();
    graphs
}

/// All connected graphs of order `n` with maximum degree at most 3, one per
/// isomorphism class, sorted by canonical form.
pub fn connected_level(prev: &[SmallGraph], exec: Exec) -> Vec<SmallGraph> {
    let children = exec.flat_map(prev, vertex_children);
    dedupe(children)
}

/// The order-1 seed of the vertex-addition generator.
pub fn seed() -> Vec<SmallGraph> {
    vec![SmallGraph::empty(1)]
}

/// Isomorphism-class counts of connected subcubic graphs on `n` vertices,
/// keyed by size, computed by edge addition from the empty graph.
pub fn edge_addition_counts(n: usize, exec: Exec) -> BTreeMap<usize, usize> {
    let mut level = vec![SmallGraph::empty(n)];
    let mut counts = BTreeMap::new();
    let mut size = 0;
    while !level.is_empty() {
        let connected = level.iter().filter(|g| g.is_connected()).count();
        if connected > 0 {
            counts.insert(size, connected);
        }
        let children = exec.flat_map(&level, |g| {
            let mut out = Vec::new();
            for u in 0..n {
                if g.degree(u) >= 3 {
                    continue;
                }
                for v in u + 1..n {
                    if g.degree(v) < 3 && !g.has_edge(u, v) {
                        let mut h = *g;
                        h.add_edge(u, v);
                        out.push(canonical_form(&h));
                    }
                }
            }
            out
        });
        level = dedupe(children);
        size += 1;
    }
    counts
}

/// Realizable points by size, from every labelled edge subset on `n`
/// vertices. Exponential; intended for `n <= 7`.
pub fn labelled_points(n: usize) -> BTreeMap<usize, BTreeSet<[i64; 3]>> {
    assert!(n <= 7, "labelled enumeration is only feasible for tiny orders");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out: BTreeMap<usize, BTreeSet<[i64; 3]>> = BTreeMap::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut g = SmallGraph::empty(n);
        let mut ok = true;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if g.degree(u) == 3 || g.degree(v) == 3 {
                    ok = false;
                    break;
                }
                g.add_edge(u, v);
            }
        }
        if ok && g.is_connected() {
            out.entry(mask.count_ones() as usize)
                .or_default()
                .insert(g.point());
        }
    }
    out
}

/// Number of distinct canonical forms in a list (used by tests).
pub fn distinct(graphs: &[SmallGraph]) -> usize {
    graphs.iter().collect::<HashSet<_>>().len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn levels(up_to: usize) -> Vec<Vec<SmallGraph>> {
        let mut out = vec![seed()];
        while out.len() < up_to {
            let next = connected_level(out.last().unwrap(), Exec::Sequential);
            out.push(next);
        }
        out
    }

    #[test]
    fn known_class_counts() {
        // Connected graphs with maximum degree at most 3, orders 1..=7.
        let expected = [1, 1, 2, 6, 10, 29, 64];
        let got: Vec<usize> = levels(7).iter().map(|l| l.len()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn generators_agree_on_six_vertices() {
        let by_vertex = levels(6).pop().unwrap();
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for g in &by_vertex {
            *counts.entry(g.size()).or_default() += 1;
        }
        assert_eq!(counts, edge_addition_counts(6, Exec::Sequential));
        assert_eq!(distinct(&by_vertex), by_vertex.len());
    }
}
