//! Simple connected graphs with maximum degree at most 3, plus graph6,
//! DOT and edge-list serialization.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::EdgeTypeVector;

/// A validated chemical graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct ChemicalGraph {
    n: usize,
    /// Sorted, each pair with `u < v`.
    edges: Vec<(usize, usize)>,
}

#[derive(Clone, Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<RawGraph> for ChemicalGraph {
    type Error = Error;
    fn try_from(raw: RawGraph) -> Result<Self> {
        ChemicalGraph::new(raw.n, raw.edges.iter().map(|e| (e[0], e[1])))
    }
}

impl From<ChemicalGraph> for RawGraph {
    fn from(g: ChemicalGraph) -> Self {
        RawGraph {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl ChemicalGraph {
    /// Validates simplicity, connectivity and the degree bound.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::GraphParse(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::GraphParse(format!("edge ({u}, {v}) out of range")));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::GraphParse(format!("parallel edge ({u}, {v})")));
            }
        }
        let g = ChemicalGraph {
            n,
            edges: set.into_iter().collect(),
        };
        if let Some(v) = g.degrees().iter().position(|&d| d > 3) {
            return Err(Error::GraphParse(format!("vertex {v} has degree above 3")));
        }
        if !g.is_connected() {
            return Err(Error::GraphParse("graph is not connected".into()));
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Counts edges by the degree pair of their endpoints.
    pub fn edge_type_vector(&self) -> EdgeTypeVector {
        let d = self.degrees();
        let mut v = EdgeTypeVector::default();
        for &(a, b) in &self.edges {
            match (d[a].min(d[b]), d[a].max(d[b])) {
                (1, 2) => v.m12 += 1,
                (1, 3) => v.m13 += 1,
                (2, 2) => v.m22 += 1,
                (2, 3) => v.m23 += 1,
                (3, 3) => v.m33 += 1,
                // Only K2 has a 11-edge, and it is never a valid order here.
                _ => {}
            }
        }
        v
    }

    pub fn point(&self) -> [i64; 3] {
        self.edge_type_vector().point()
    }

    /// Standard graph6 encoding (no header).
    pub fn to_graph6(&self) -> String {
        let mut out = Vec::new();
        encode_order(self.n, &mut out);
        let adj: BTreeSet<(usize, usize)> = self.edges.iter().copied().collect();
        let mut bits = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for j in 1..self.n {
            for i in 0..j {
                bits.push(adj.contains(&(i, j)));
            }
        }
        for chunk in bits.chunks(6) {
            let mut byte = 0u8;
            for k in 0..6 {
                byte <<= 1;
                if chunk.get(k).copied().unwrap_or(false) {
                    byte |= 1;
                }
            }
            out.push(byte + 63);
        }
        String::from_utf8(out).expect("graph6 is printable ASCII")
    }

    /// Parses a graph6 string, with or without the `>>graph6<<` header.
    pub fn from_graph6(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
        let bytes = s.as_bytes();
        if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
            return Err(Error::GraphParse("graph6 byte out of range".into()));
        }
        let (n, rest) = decode_order(bytes)?;
        let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
        if rest.len() != needed {
            return Err(Error::GraphParse(format!(
                "graph6 body has {} bytes, expected {needed}",
                rest.len()
            )));
        }
        let mut edges = Vec::new();
        let mut k = 0usize;
        for j in 1..n {
            for i in 0..j {
                let byte = rest[k / 6] - 63;
                if byte >> (5 - k % 6) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        ChemicalGraph::new(n, edges)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.n {
            let _ = writeln!(s, "  {v};");
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(s, "  {u} -- {v};");
        }
        s.push_str("}\n");
        s
    }

    /// First line `n m`, then one `u v` line per edge.
    pub fn to_edgelist(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

fn decode_order(b: &[u8]) -> Result<(usize, &[u8])> {
    let take = |k: usize, from: usize| -> Result<usize> {
        let slice = b
            .get(from..from + k)
            .ok_or_else(|| Error::GraphParse("truncated graph6 order".into()))?;
        Ok(slice.iter().fold(0usize, |acc, &x| (acc << 6) | (x - 63) as usize))
    };
    match b {
        [] => Err(Error::GraphParse("empty graph6 string".into())),
        [126, 126, ..] => Ok((take(6, 2)?, &b[8..])),
        [126, ..] => Ok((take(3, 1)?, &b[4..])),
        [x, ..] => Ok(((x - 63) as usize, &b[1..])),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_golden_vector() {
        let g = ChemicalGraph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(g.to_graph6(), "DQc");
        assert_eq!(ChemicalGraph::from_graph6("DQc").unwrap(), g);
        assert_eq!(ChemicalGraph::from_graph6(">>graph6<<DQc").unwrap(), g);
    }

    #[test]
    fn graph6_long_order() {
        let n = 100;
        let g = ChemicalGraph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap();
        let s = g.to_graph6();
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 99]);
        assert_eq!(ChemicalGraph::from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_invalid_graphs() {
        assert!(ChemicalGraph::new(3, [(0, 0)]).is_err());
        assert!(ChemicalGraph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(ChemicalGraph::new(4, [(0, 1), (2, 3)]).is_err());
        assert!(ChemicalGraph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).is_err());
        assert!(ChemicalGraph::from_graph6("D??").is_err());
    }

    #[test]
    fn path_counts() {
        let g = ChemicalGraph::new(5, (0..4).map(|i| (i, i + 1))).unwrap();
        let v = g.edge_type_vector();
        assert_eq!(v.as_array(), [2, 0, 2, 0, 0]);
    }

    #[test]
    fn text_formats() {
        let g = ChemicalGraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.to_edgelist(), "3 2\n0 1\n1 2\n");
        assert!(g.to_dot().contains("0 -- 1;"));
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        assert_eq!(serde_json::from_str::<ChemicalGraph>(&json).unwrap(), g);
    }
}
