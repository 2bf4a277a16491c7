//! Oracle-versus-engine sweep over every valid pair up to a given order.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exec::Exec;
use crate::model::OrderSize;
use crate::oracle::{enumerate_realizable_with, exact_hull};
use crate::polytope::build_polytope;
use crate::realize::is_realizable;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub n: u64,
    pub m: u64,
    pub pass: bool,
    pub graphs: usize,
    pub realizable_points: usize,
    pub engine_vertices: Vec<[i64; 3]>,
    pub oracle_vertices: Vec<[i64; 3]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub problems: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub max_n: u64,
    pub passed: usize,
    pub failed: usize,
    pub pairs: Vec<PairReport>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for p in &self.pairs {
            let status = if p.pass { "pass" } else { "FAIL" };
            s.push_str(&format!(
                "({:>2}, {:>2})  {status}  {:>5} graphs  {:>3} points  {:>2} vertices\n",
                p.n,
                p.m,
                p.graphs,
                p.realizable_points,
                p.engine_vertices.len()
            ));
            for problem in &p.problems {
                s.push_str(&format!("          {problem}\n"));
            }
        }
        s.push_str(&format!("{} passed, {} failed\n", self.passed, self.failed));
        s
    }
}

fn check_pair(ns: OrderSize, limit: u64, exec: Exec) -> Result<PairReport> {
    let set = enumerate_realizable_with(ns, limit, exec)?;
    let pts: Vec<[i64; 3]> = set.points.iter().copied().collect();
    let mut problems = Vec::new();
    let (engine_vertices, oracle_vertices) = match build_polytope(ns) {
        Ok(d) => {
            let hull = exact_hull(&pts);
            if hull.dimension != d.dimension {
                problems.push(format!("dimension {} vs oracle {}", d.dimension, hull.dimension));
            }
            if hull.vertices != d.points() {
                problems.push("vertex sets differ".to_string());
            }
            for p in pts.iter().filter(|p| !d.contains(**p)) {
                problems.push(format!("realizable {p:?} violates the description"));
            }
            (d.points(), hull.vertices)
        }
        Err(e) => {
            problems.push(e.to_string());
            (Vec::new(), exact_hull(&pts).vertices)
        }
    };
    // The realizability test must accept exactly the enumerated points.
    let top = 3 * ns.n_i64();
    for a in 0..=top {
        for b in 0..=top {
            for c in 0..=top {
                let p = [a, b, c];
                if is_realizable(ns, p) != set.points.contains(&p) {
                    problems.push(format!("realizability test disagrees at {p:?}"));
                }
            }
        }
    }
    Ok(PairReport {
        n: ns.n(),
        m: ns.m(),
        pass: problems.is_empty(),
        graphs: set.graph_count,
        realizable_points: pts.len(),
        engine_vertices,
        oracle_vertices,
        problems,
    })
}

/// Runs the sweep for every valid pair with `3 <= n <= max_n`. Fails only
/// if `max_n` exceeds the oracle limit.
pub fn verify(max_n: u64, limit: u64, exec: Exec) -> Result<VerifyReport> {
    let mut pairs = Vec::new();
    for ns in OrderSize::all_up_to(3, max_n) {
        pairs.push(check_pair(ns, limit, exec)?);
    }
    let passed = pairs.iter().filter(|p| p.pass).count();
    Ok(VerifyReport {
        max_n,
        passed,
        failed: pairs.len() - passed,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_passes() {
        let r = verify(6, 10, Exec::Sequential).unwrap();
        assert!(r.ok(), "{}", r.to_text());
        assert_eq!(r.pairs.len(), OrderSize::all_up_to(3, 6).len());
    }

    #[test]
    fn over_the_limit() {
        assert!(verify(11, 10, Exec::Sequential).is_err());
    }
}
