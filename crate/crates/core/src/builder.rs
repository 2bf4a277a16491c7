//! Witness graphs for realizable points.
//!
//! Every chemical graph with at least one degree-3 vertex decomposes into a
//! skeleton multigraph on its degree-3 vertices and its leaves, where each
//! skeleton edge stands for a chain of zero or more degree-2 vertices. The
//! edge-type triple only depends on which skeleton edges are left bare:
//!
//! * a bare leaf edge is a 13-edge, a subdivided one yields one 12-edge;
//! * a bare edge between degree-3 vertices is a 33-edge, so the bare edges
//!   must form a simple graph; a subdivided one yields two 23-edges;
//! * every degree-2 vertex beyond the first on a chain adds one 22-edge;
//!   a subdivided loop needs at least two of them.
//!
//! The builder picks the leaf distribution and a skeleton, marks the right
//! number of edges bare and distributes the degree-2 vertices. With four or
//! more degree-3 vertices a simple connected skeleton always exists and is
//! optimal; below that, all skeletons are tried.

use crate::error::{Error, Result};
use crate::graph::ChemicalGraph;
use crate::model::{derive_degree_counts, derive_full_vector, OrderSize, Point3};
use crate::oracle;
use crate::realize::check_point;

/// How a witness was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Strategy {
    Path,
    Cycle,
    Skeleton,
    OracleLookup,
}

/// Skeleton on `k` degree-3 vertices.
#[derive(Clone, Debug)]
struct Skeleton {
    /// Leaves hanging off each degree-3 vertex.
    leaves: Vec<usize>,
    /// Edges between degree-3 vertices; `(v, v)` is a loop.
    edges: Vec<(usize, usize)>,
}

impl Skeleton {
    fn loops(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    /// Indices of a maximum set of edges that may be left bare.
    fn bare_candidates(&self) -> Vec<usize> {
        let mut seen = std::collections::BTreeSet::new();
        (0..self.edges.len())
            .filter(|&i| {
                let (u, v) = self.edges[i];
                u != v && seen.insert((u.min(v), u.max(v)))
            })
            .collect()
    }
}

fn connected(k: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let mut comps = k;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a] = b;
            comps -= 1;
        }
    }
    comps <= 1
}

/// Havel-Hakimi with ties broken by index. `None` if not graphical.
fn havel_hakimi(deg: &[usize]) -> Option<Vec<(usize, usize)>> {
    let mut rem = deg.to_vec();
    let mut edges = Vec::new();
    loop {
        let mut order: Vec<usize> = (0..rem.len()).filter(|&v| rem[v] > 0).collect();
        if order.is_empty() {
            return Some(edges);
        }
        order.sort_by_key(|&v| (std::cmp::Reverse(rem[v]), v));
        let v = order[0];
        let d = rem[v];
        if d > order.len() - 1 {
            return None;
        }
        rem[v] = 0;
        for &u in &order[1..=d] {
            rem[u] -= 1;
            edges.push((v.min(u), v.max(u)));
        }
    }
}

/// Merges components of a simple graph by degree-preserving edge switches
/// until it is connected. Requires at least `k - 1` edges.
fn make_connected(k: usize, mut edges: Vec<(usize, usize)>) -> Option<Vec<(usize, usize)>> {
    loop {
        let comp = components(k, &edges);
        let count = comp.iter().max().map_or(0, |c| c + 1);
        if count <= 1 {
            return Some(edges);
        }
        // An edge on a cycle: its ends stay connected without it.
        let cyclic = (0..edges.len()).find(|&i| {
            let (u, v) = edges[i];
            let mut rest = edges.clone();
            rest.swap_remove(i);
            let c = components(k, &rest);
            c[u] == c[v]
        })?;
        let (u, v) = edges[cyclic];
        let other = (0..edges.len()).find(|&j| comp[edges[j].0] != comp[u])?;
        let (x, y) = edges[other];
        edges[cyclic] = (u.min(x), u.max(x));
        edges[other] = (v.min(y), v.max(y));
    }
}

fn components(k: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj = vec![Vec::new(); k];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut comp = vec![usize::MAX; k];
    let mut next = 0;
    for s in 0..k {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = next;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if comp[y] == usize::MAX {
                    comp[y] = next;
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    comp
}

/// Leaves dealt round-robin, so skeleton degrees differ by at most one.
fn balanced_skeleton(k: usize, leaves: usize) -> Option<Skeleton> {
    let mut per = vec![0usize; k];
    for i in 0..leaves {
        per[i % k] += 1;
    }
    if per.iter().any(|&l| l > 3) {
        return None;
    }
    let deg: Vec<usize> = per.iter().map(|l| 3 - l).collect();
    if deg.iter().any(|&d| d == 0) {
        return None;
    }
    let edges = make_connected(k, havel_hakimi(&deg)?)?;
    Some(Skeleton { leaves: per, edges })
}

/// Every skeleton on one to three degree-3 vertices with the given number
/// of leaves, in a fixed order.
fn tiny_skeletons(k: usize, leaves: usize) -> Vec<Skeleton> {
    let pairs: Vec<(usize, usize)> = match k {
        1 => vec![],
        2 => vec![(0, 1)],
        _ => vec![(0, 1), (0, 2), (1, 2)],
    };
    let mut out = Vec::new();
    let loop_choices = 1usize << k;
    let mult_choices = 4usize.pow(pairs.len() as u32);
    for lo in 0..loop_choices {
        for mc in 0..mult_choices {
            let mut mult = Vec::with_capacity(pairs.len());
            let mut x = mc;
            for _ in &pairs {
                mult.push(x % 4);
                x /= 4;
            }
            let mut used = vec![0usize; k];
            let mut edges = Vec::new();
            for v in 0..k {
                if lo >> v & 1 == 1 {
                    used[v] += 2;
                    edges.push((v, v));
                }
            }
            for (i, &(u, v)) in pairs.iter().enumerate() {
                used[u] += mult[i];
                used[v] += mult[i];
                edges.extend(std::iter::repeat_n((u, v), mult[i]));
            }
            if used.iter().any(|&d| d > 3) {
                continue;
            }
            let per: Vec<usize> = used.iter().map(|d| 3 - d).collect();
            if per.iter().sum::<usize>() != leaves || !connected(k, &edges) {
                continue;
            }
            out.push(Skeleton { leaves: per, edges });
        }
    }
    out
}

/// Target counts for one skeleton build.
struct Target {
    m12: usize,
    m13: usize,
    m33: usize,
    n2: usize,
}

fn assemble(sk: &Skeleton, t: &Target) -> Option<ChemicalGraph> {
    let bare_ok = sk.bare_candidates();
    if t.m33 > bare_ok.len() {
        return None;
    }
    let bare: std::collections::BTreeSet<usize> = bare_ok.into_iter().take(t.m33).collect();
    let leaves: usize = sk.leaves.iter().sum();
    if t.m12 + t.m13 != leaves {
        return None;
    }
    let subdivided_edges = sk.edges.len() - t.m33;
    let chains = t.m12 + subdivided_edges;
    let minimum = chains + sk.loops();
    if t.n2 < minimum || (chains == 0 && t.n2 > 0) {
        return None;
    }
    let mut extra = t.n2 - minimum;

    let k = sk.leaves.len();
    let mut n = k;
    let mut edges = Vec::new();
    let chain = |from: usize, to: Option<usize>, len: usize, n: &mut usize, edges: &mut Vec<(usize, usize)>| {
        let mut prev = from;
        for _ in 0..len {
            edges.push((prev, *n));
            prev = *n;
            *n += 1;
        }
        let end = to.unwrap_or_else(|| {
            *n += 1;
            *n - 1
        });
        edges.push((prev, end));
    };
    for (i, &(u, v)) in sk.edges.iter().enumerate() {
        if bare.contains(&i) {
            edges.push((u, v));
            continue;
        }
        let len = if u == v { 2 } else { 1 } + std::mem::take(&mut extra);
        chain(u, Some(v), len, &mut n, &mut edges);
    }
    let mut direct = t.m13;
    for (v, &l) in sk.leaves.iter().enumerate() {
        for _ in 0..l {
            if direct > 0 {
                direct -= 1;
                chain(v, None, 0, &mut n, &mut edges);
            } else {
                let len = 1 + std::mem::take(&mut extra);
                chain(v, None, len, &mut n, &mut edges);
            }
        }
    }
    ChemicalGraph::new(n, edges).ok()
}

fn from_skeletons(ns: OrderSize, p: [i64; 3]) -> Option<ChemicalGraph> {
    let v = derive_full_vector(ns, &Point3::from_array(p)).ok()?;
    let d = derive_degree_counts(ns, &v).ok()?;
    let (n1, n2, n3) = (d.n1 as usize, d.n2 as usize, d.n3 as usize);
    let t = Target {
        m12: v.m12 as usize,
        m13: v.m13 as usize,
        m33: v.m33 as usize,
        n2,
    };
    if n3 >= 4 {
        if let Some(g) = balanced_skeleton(n3, n1).and_then(|sk| assemble(&sk, &t)) {
            return Some(g);
        }
    }
    if (1..=3).contains(&n3) {
        return tiny_skeletons(n3, n1).iter().find_map(|sk| assemble(sk, &t));
    }
    None
}

fn path(n: usize) -> ChemicalGraph {
    ChemicalGraph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is valid")
}

fn cycle(n: usize) -> ChemicalGraph {
    ChemicalGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is valid")
}

/// A graph of order `n` and size `m` whose edge-type triple is `p`, with
/// the strategy that produced it.
pub fn build_witness_traced(ns: OrderSize, p: &Point3) -> Result<(ChemicalGraph, Strategy)> {
    let verdict = check_point(ns, p);
    if !verdict.realizable {
        return Err(Error::NotRealizable {
            n: ns.n(),
            m: ns.m(),
            point: p.to_string(),
            failed: verdict.failed_conditions,
        });
    }
    let q = p.to_ints().expect("realizable points are integral");
    let n = ns.n() as usize;
    let d = verdict.degree_counts.expect("realizable verdicts carry degree counts");
    let candidates: [(Strategy, Box<dyn Fn() -> Option<ChemicalGraph>>); 4] = [
        (Strategy::Path, Box::new(|| (d.n3 == 0 && d.n1 == 2).then(|| path(n)))),
        (Strategy::Cycle, Box::new(|| (d.n3 == 0 && d.n1 == 0).then(|| cycle(n)))),
        (Strategy::Skeleton, Box::new(|| from_skeletons(ns, q))),
        (
            Strategy::OracleLookup,
            Box::new(|| oracle::lookup_witness(ns, q, oracle::DEFAULT_LIMIT)),
        ),
    ];
    for (strategy, attempt) in candidates {
        if let Some(g) = attempt() {
            if g.order() == n && g.size() as u64 == ns.m() && g.point() == q {
                return Ok((g, strategy));
            }
        }
    }
    Err(Error::ConstructionFailed {
        n: ns.n(),
        m: ns.m(),
        point: p.to_string(),
    })
}

/// A graph of order `n` and size `m` whose edge-type triple is `p`. The
/// result is recounted before it is returned.
pub fn build_witness(ns: OrderSize, p: &Point3) -> Result<ChemicalGraph> {
    build_witness_traced(ns, p).map(|(g, _)| g)
}

/// [`build_witness`] for an integer triple.
pub fn build_witness_int(ns: OrderSize, p: [i64; 3]) -> Result<ChemicalGraph> {
    build_witness(ns, &Point3::from_array(p))
}
