//! Canonical labelling of small graphs by partition refinement and
//! individualization.
//!
//! The search explores every leaf of the refinement tree and keeps the
//! lexicographically largest adjacency certificate. There is no automorphism
//! pruning: for at most 12 vertices of degree at most 3 the trees stay small.

/// Largest order the bitset representation supports.
pub const MAX_ORDER: usize = 12;

/// A graph on at most [`MAX_ORDER`] vertices stored as neighbour bitmasks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallGraph {
    pub n: u8,
    pub adj: [u16; MAX_ORDER],
}

impl SmallGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER);
        SmallGraph {
            n: n as u8,
            adj: [0; MAX_ORDER],
        }
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn size(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v) as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.order() {
            for v in u + 1..self.order() {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return true;
        }
        let full: u16 = if n == 16 { u16::MAX } else { (1 << n) - 1 };
        let mut seen: u16 = 1;
        let mut frontier: u16 = 1;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full
    }

    /// `(m12, m13, m33)` of the graph.
    pub fn point(&self) -> [i64; 3] {
        let mut p = [0i64; 3];
        for (u, v) in self.edges() {
            let (a, b) = {
                let (x, y) = (self.degree(u), self.degree(v));
                (x.min(y), x.max(y))
            };
            match (a, b) {
                (1, 2) => p[0] += 1,
                (1, 3) => p[1] += 1,
                (3, 3) => p[2] += 1,
                _ => {}
            }
        }
        p
    }

    /// Relabels so that old vertex `order[i]` becomes vertex `i`.
    pub fn relabel(&self, order: &[usize]) -> SmallGraph {
        let mut pos = [0usize; MAX_ORDER];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = SmallGraph::empty(self.order());
        for (u, v) in self.edges() {
            g.add_edge(pos[u], pos[v]);
        }
        g
    }

    /// Upper-triangle adjacency bits under a labelling, as a comparable key.
    fn certificate(&self, order: &[usize]) -> u128 {
        let n = self.order();
        let mut cert = 0u128;
        for j in 1..n {
            for i in 0..j {
                cert <<= 1;
                if self.has_edge(order[i], order[j]) {
                    cert |= 1;
                }
            }
        }
        cert
    }
}

type Partition = Vec<Vec<usize>>;

/// Splits cells by neighbour counts into every other cell until stable.
fn refine(g: &SmallGraph, mut cells: Partition) -> Partition {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let mask: u16 = cells[s].iter().fold(0, |m, &v| m | 1 << v);
            let mut next: Partition = Vec::with_capacity(cells.len() + 2);
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cell
                    .iter()
                    .map(|&v| ((g.adj[v] & mask).count_ones(), v))
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() != cells.len() {
                changed = true;
            }
            cells = next;
            s += 1;
        }
        if !changed {
            return cells;
        }
    }
}

fn search(g: &SmallGraph, cells: Partition, best: &mut Option<(u128, Vec<usize>)>) {
    let cells = refine(g, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let cert = g.certificate(&order);
        if best.as_ref().is_none_or(|(b, _)| cert > *b) {
            *best = Some((cert, order));
        }
        return;
    };
    for &v in &cells[target] {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(vec![v]);
        next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        search(g, next, best);
    }
}

/// A canonical labelling: isomorphic graphs map to identical results.
pub fn canonical_form(g: &SmallGraph) -> SmallGraph {
    let n = g.order();
    if n <= 1 {
        return *g;
    }
    let mut by_degree: Vec<(u32, usize)> = (0..n).map(|v| (g.degree(v), v)).collect();
    by_degree.sort_unstable();
    let mut cells: Partition = Vec::new();
    for (d, v) in by_degree {
        match cells.last_mut() {
            Some(c) if g.degree(c[0]) == d => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = None;
    search(g, cells, &mut best);
    let (_, order) = best.expect("search reaches at least one leaf");
    g.relabel(&order)
}
