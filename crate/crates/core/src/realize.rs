//! Realizability of an edge-type triple for a given order and size.

use serde::{Deserialize, Serialize};

use crate::model::{derived_counts, DegreeCounts, EdgeTypeVector, OrderSize, Point3};

/// Outcome of [`check_point`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizabilityVerdict {
    pub realizable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub full_vector: Option<EdgeTypeVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree_counts: Option<DegreeCounts>,
    /// `NONINT`, `NEG`, or `C10` through `C16`.
    pub failed_conditions: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// δ(x): 1 for x ≥ 1, else 0.
pub fn delta(x: i64) -> i64 {
    i64::from(x >= 1)
}

fn failing(codes: &[&str], detail: Option<String>) -> RealizabilityVerdict {
    RealizabilityVerdict {
        realizable: false,
        full_vector: None,
        degree_counts: None,
        failed_conditions: codes.iter().map(|c| c.to_string()).collect(),
        detail,
    }
}

/// The feasibility conditions on a complete, non-negative count vector.
/// Returns the identifiers of the violated ones.
pub fn failed_feasibility(ns: OrderSize, v: &EdgeTypeVector, d: &DegreeCounts) -> Vec<&'static str> {
    let [m22, m23, m33] = [v.m22, v.m23, v.m33].map(|x| x as i64);
    let (n2, n3) = (d.n2 as i64, d.n3 as i64);
    let mut failed = Vec::new();
    if (1..=3).contains(&n3) && m33 > n3 * (n3 - 1) / 2 {
        failed.push("C10");
    }
    if (1..=2).contains(&n2) && m22 > n2 * (n2 - 1) / 2 {
        failed.push("C11");
    }
    if (1..=2).contains(&n2) && n3 == 1 && m23 > n2 * n3 {
        failed.push("C12");
    }
    if m23 < delta(n2) + delta(n3) - 1 {
        failed.push("C13");
    }
    if m23 + m33 < n3 + delta(n2) - 1 {
        failed.push("C14");
    }
    if m22 + m23 < n2 + delta(n3) - 1 {
        failed.push("C15");
    }
    if ns.m() + 1 < ns.n() {
        failed.push("C16");
    }
    failed
}

/// Decides whether `p` is the edge-type triple of some chemical graph of
/// order `n` and size `m`. Never errors; every failure is in the verdict.
pub fn check_point(ns: OrderSize, p: &Point3) -> RealizabilityVerdict {
    match p.to_ints() {
        Some(q) => check_int(ns, q),
        None if !p.is_integral() => failing(&["NONINT"], Some(format!("{p} is not integral"))),
        None => failing(&["NEG"], Some(format!("{p} is out of range"))),
    }
}

/// [`check_point`] for an integer triple.
pub fn check_int(ns: OrderSize, p: [i64; 3]) -> RealizabilityVerdict {
    let [m12, m13, m33] = p;
    let (m22, m23) = derived_counts(ns, p);
    let named = [("m12", m12), ("m13", m13), ("m22", m22), ("m23", m23), ("m33", m33)];
    if let Some((name, value)) = named.iter().find(|(_, v)| *v < 0) {
        return failing(&["NEG"], Some(format!("{name} = {value}")));
    }
    let v = EdgeTypeVector {
        m12: m12 as u64,
        m13: m13 as u64,
        m22: m22 as u64,
        m23: m23 as u64,
        m33: m33 as u64,
    };
    let d = match crate::model::derive_degree_counts(ns, &v) {
        Ok(d) => d,
        Err(e) => {
            let mut verdict = failing(&["NONINT"], Some(e.to_string()));
            verdict.full_vector = Some(v);
            return verdict;
        }
    };
    let failed = failed_feasibility(ns, &v, &d);
    RealizabilityVerdict {
        realizable: failed.is_empty(),
        full_vector: Some(v),
        degree_counts: Some(d),
        failed_conditions: failed.into_iter().map(String::from).collect(),
        detail: None,
    }
}

/// Fast boolean form of [`check_int`], used by lattice scans.
pub fn is_realizable(ns: OrderSize, p: [i64; 3]) -> bool {
    let [m12, m13, m33] = p;
    let (m22, m23) = derived_counts(ns, p);
    if m12 < 0 || m13 < 0 || m33 < 0 || m22 < 0 || m23 < 0 {
        return false;
    }
    let n2 = (m12 + 2 * m22 + m23) / 2;
    let n3 = (m13 + m23 + 2 * m33) / 3;
    let ok10 = !(1..=3).contains(&n3) || m33 <= n3 * (n3 - 1) / 2;
    let ok11 = !(1..=2).contains(&n2) || m22 <= n2 * (n2 - 1) / 2;
    let ok12 = !((1..=2).contains(&n2) && n3 == 1) || m23 <= n2 * n3;
    let ok13 = m23 >= delta(n2) + delta(n3) - 1;
    let ok14 = m23 + m33 >= n3 + delta(n2) - 1;
    let ok15 = m22 + m23 >= n2 + delta(n3) - 1;
    ok10 && ok11 && ok12 && ok13 && ok14 && ok15
}
