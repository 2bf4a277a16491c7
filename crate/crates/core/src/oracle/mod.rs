//! Ground truth at small scale: every connected graph with maximum degree 3
//! on up to 12 vertices, the realizable points they produce, and exact
//! convex hulls of those points.

pub mod canon;
pub mod enumerate;
pub mod hull;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::ChemicalGraph;
use crate::model::OrderSize;

pub use canon::SmallGraph;
pub use hull::{exact_hull, ExactHull3, HullEquality, HullFacet};

/// Default largest order the oracle enumerates.
pub const DEFAULT_LIMIT: u64 = 10;
/// Absolute largest order the oracle supports.
pub const HARD_CAP: u64 = canon::MAX_ORDER as u64;

/// Realizable points for one `(n, m)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizableSet {
    pub order_size: OrderSize,
    pub points: BTreeSet<[i64; 3]>,
    /// Non-isomorphic graphs of this order and size.
    pub graph_count: usize,
}

/// Everything the oracle knows about one order.
#[derive(Debug)]
pub struct Level {
    pub n: usize,
    /// One canonical representative per isomorphism class.
    pub graphs: Vec<SmallGraph>,
    /// Per size: class count and one witness per realizable point.
    pub by_size: BTreeMap<usize, (usize, BTreeMap<[i64; 3], SmallGraph>)>,
}

impl Level {
    fn new(n: usize, graphs: Vec<SmallGraph>) -> Self {
        let mut by_size: BTreeMap<usize, (usize, BTreeMap<[i64; 3], SmallGraph>)> =
            BTreeMap::new();
        for g in &graphs {
            let entry = by_size.entry(g.size()).or_default();
            entry.0 += 1;
            entry.1.entry(g.point()).or_insert(*g);
        }
        Level { n, graphs, by_size }
    }
}

fn cache() -> &'static Mutex<Vec<Arc<Level>>> {
    static CACHE: OnceLock<Mutex<Vec<Arc<Level>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

/// The level for order `n`, generating (and caching) all smaller levels
/// first. Concurrent callers serialize on the cache lock.
pub fn level(n: u64, exec: Exec) -> Result<Arc<Level>> {
    if n > HARD_CAP || n == 0 {
        return Err(Error::LimitExceeded { n, cap: HARD_CAP });
    }
    let mut levels = cache().lock().unwrap_or_else(|e| e.into_inner());
    if levels.is_empty() {
        levels.push(Arc::new(Level::new(1, enumerate::seed())));
    }
    while levels.len() < n as usize {
        let prev = levels.last().expect("seeded");
        let next = enumerate::connected_level(&prev.graphs, exec);
        let k = prev.n + 1;
        levels.push(Arc::new(Level::new(k, next)));
    }
    Ok(Arc::clone(&levels[n as usize - 1]))
}

/// Realizable points for `(n, m)` with the default order limit.
pub fn enumerate_realizable(ns: OrderSize) -> Result<RealizableSet> {
    enumerate_realizable_with(ns, DEFAULT_LIMIT, Exec::default())
}

pub fn enumerate_realizable_with(ns: OrderSize, limit: u64, exec: Exec) -> Result<RealizableSet> {
    let cap = limit.min(HARD_CAP);
    if ns.n() > cap {
        return Err(Error::LimitExceeded { n: ns.n(), cap });
    }
    let lv = level(ns.n(), exec)?;
    let (count, points) = lv
        .by_size
        .get(&(ns.m() as usize))
        .map(|(c, pts)| (*c, pts.keys().copied().collect()))
        .unwrap_or_default();
    Ok(RealizableSet {
        order_size: ns,
        points,
        graph_count: count,
    })
}

/// A stored witness graph for `p`, if one exists within the limit.
pub fn lookup_witness(ns: OrderSize, p: [i64; 3], limit: u64) -> Option<ChemicalGraph> {
    if ns.n() > limit.min(HARD_CAP) {
        return None;
    }
    let lv = level(ns.n(), Exec::default()).ok()?;
    let g = lv.by_size.get(&(ns.m() as usize))?.1.get(&p)?;
    ChemicalGraph::new(g.order(), g.edges()).ok()
}

/// Every graph of order `n` (one per isomorphism class) as a validated graph.
pub fn graphs_of_order(n: u64, exec: Exec) -> Result<Vec<ChemicalGraph>> {
    let lv = level(n, exec)?;
    Ok(lv
        .graphs
        .iter()
        .map(|g| ChemicalGraph::new(g.order(), g.edges()).expect("generator output is valid"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(n: u64, m: u64) -> OrderSize {
        OrderSize::new(n, m).unwrap()
    }

    #[test]
    fn triangle_only() {
        let r = enumerate_realizable(ns(3, 3)).unwrap();
        assert_eq!(r.points, BTreeSet::from([[0, 0, 0]]));
        assert_eq!(r.graph_count, 1);
    }

    #[test]
    fn five_five_hull() {
        let r = enumerate_realizable(ns(5, 5)).unwrap();
        let pts: Vec<_> = r.points.iter().copied().collect();
        let h = exact_hull(&pts);
        assert_eq!(h.dimension, 3);
        assert_eq!(h.vertices, vec![[0, 0, 0], [0, 1, 0], [0, 2, 1], [1, 0, 0]]);
    }

    #[test]
    fn six_six_contains_figure_point() {
        let r = enumerate_realizable(ns(6, 6)).unwrap();
        assert!(r.points.contains(&[1, 0, 0]));
        let w = lookup_witness(ns(6, 6), [1, 0, 0], 10).unwrap();
        assert_eq!(w.point(), [1, 0, 0]);
    }

    #[test]
    fn limits() {
        assert!(matches!(
            enumerate_realizable(ns(11, 12)),
            Err(Error::LimitExceeded { n: 11, cap: 10 })
        ));
        assert!(matches!(
            enumerate_realizable_with(ns(13, 13), 20, Exec::default()),
            Err(Error::LimitExceeded { n: 13, cap: 12 })
        ));
    }
}
