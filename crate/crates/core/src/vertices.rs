//! Closed-form candidate extreme points and their realizability and
//! extremality conditions.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::{eq, int, le, m, n, ne, one_of, Cond, Expr};
use crate::model::{OrderSize, Point3};

#[derive(Clone, Debug)]
pub struct VertexFamily {
    pub id: &'static str,
    pub coords: [Expr; 3],
    pub realizable: Cond,
    pub extreme: Cond,
}

impl VertexFamily {
    /// Raw formula substitution, without any condition check.
    pub fn point(&self, ns: OrderSize) -> Point3 {
        let (n, m) = (ns.n_big(), ns.m_big());
        let [a, b, c] = &self.coords;
        Point3::new(a.eval(&n, &m), b.eval(&n, &m), c.eval(&n, &m))
    }

    pub fn is_realizable_at(&self, ns: OrderSize) -> bool {
        self.realizable.holds(&ns.n_big(), &ns.m_big())
    }

    pub fn is_extreme_at(&self, ns: OrderSize) -> bool {
        self.extreme.holds(&ns.n_big(), &ns.m_big())
    }
}

fn r3() -> Expr {
    m().modulo(3)
}

fn t3() -> Expr {
    (2 * m()).modulo(3)
}

fn r4() -> Expr {
    (m() - 2 * n()).modulo(4)
}

fn s4() -> Expr {
    (2 * n() - m()).modulo(4)
}

fn parity() -> Expr {
    n().modulo(2)
}

fn fl(e: Expr, d: i64) -> Expr {
    e.div(d).floor()
}

fn family(id: &'static str, coords: [Expr; 3], realizable: Cond, extreme: Cond) -> VertexFamily {
    VertexFamily {
        id,
        coords,
        realizable,
        extreme,
    }
}

fn same(id: &'static str, coords: [Expr; 3], cond: Cond) -> VertexFamily {
    family(id, coords, cond.clone(), cond)
}

fn build_catalog() -> Vec<VertexFamily> {
    let k = int;
    let base = 6 * n() - 5 * m();
    let top = 3 * n() - 2 * m();
    let seven = 7 * m() - 6 * n();
    let ub_7a = (6 * n() - 3 * r4()).div(5);
    vec![
        same(
            "V1",
            [k(0), k(0), k(0)],
            le(n(), m()).and(le(m(), fl(6 * n(), 5))),
        ),
        family(
            "V2",
            [k(2), k(0), k(0)],
            le(m(), fl(6 * n() - 8, 5)),
            eq(m(), n() - 1).or(eq(m(), fl(6 * n() - 8, 5)).and(ne(m().modulo(6), k(0)))),
        ),
        family(
            "V3",
            [k(0), k(0), k(1)],
            le(n() + 1, m()).and(le(m(), fl(6 * n() + 1, 5))),
            eq(m(), n() + 1).or(eq(m(), fl(6 * n() + 1, 5)).and(eq(m().modulo(6), k(5)))),
        ),
        same(
            "V6",
            [k(0), k(0), 5 * m() - 6 * n()],
            le(fl(6 * n() + 4, 5), m()),
        ),
        same(
            "V7a",
            [(base.clone() - 3 * r4()).div(4), r4(), k(0)],
            le(m(), ub_7a.clone()),
        ),
        same(
            "V7b",
            [(base.clone() + r4()).div(4), k(0), r4()],
            le(m(), fl(6 * n() + 3, 5)),
        ),
        same(
            "V7c",
            [(base.clone() - s4()).div(4), k(0), k(0)],
            le(m(), fl(6 * n(), 5)),
        ),
        same(
            "V8c",
            [
                k(0),
                (top.clone() - parity()).div(2),
                (4 * m() - 3 * n() - 3 * parity()).div(2),
            ],
            Cond::Always,
        ),
        same(
            "V8d",
            [k(1), (top.clone() - 3).div(2), (4 * m() - 3 * n() - 1).div(2)],
            eq(parity(), k(1)),
        ),
        family(
            "V9a",
            [
                3 * m() - 3 * n() - 2,
                3 * m() - 3 * n() - 2,
                6 * m() - 6 * n() - 1,
            ],
            le(n() + 1, m()).and(le(m(), fl(21 * n() + 13, 20))),
            eq(m(), n() + 1),
        ),
        family(
            "V9b",
            [3 * m() - 3 * n() - 1, k(0), 6 * m() - 6 * n() - 1],
            le(n() + 1, m()).and(le(m(), fl(12 * n() + 3, 11))),
            eq(m(), n() + 1)
                .or(eq(m(), fl(12 * n() + 3, 11)).and(one_of(m().modulo(12), &[9, 10, 11]))),
        ),
        family(
            "V9c",
            [k(0), 3 * m() - 3 * n() - 2, 6 * m() - 6 * n() - 3],
            le(n() + 1, m()).and(le(m(), fl(9 * n() + 3, 8))),
            eq(m(), n() + 1).or(eq(m(), fl(9 * n() + 3, 8)).and(eq(m().modulo(9), k(6)))),
        ),
        same(
            "V10a",
            [k(0), (base.clone() - r3()).div(3), k(0)],
            le(m(), fl(6 * n(), 5)),
        ),
        same(
            "V10b",
            [r3(), (base.clone() - 4 * r3()).div(3), k(0)],
            le(m(), ub_7a),
        ),
        same(
            "V10c",
            [k(0), (base + t3()).div(3), t3()],
            le(m(), fl(6 * n() + 2, 5)),
        ),
        same(
            "V11a",
            [
                (top.clone() - r3()).div(3),
                k(0),
                (seven.clone() - 4 * r3()).div(3),
            ],
            Cond::Always,
        ),
        same(
            "V11b",
            [
                (top.clone() - 2 * t3()).div(3),
                t3(),
                (seven.clone() + t3()).div(3),
            ],
            Cond::Always,
        ),
        same(
            "V11c",
            [(top - r3()).div(3), k(0), (seven - r3()).div(3)],
            Cond::Always,
        ),
        family(
            "V12a",
            [k(0), 3 * n() - 3 * m() + 1, k(0)],
            le(m(), n()),
            eq(m(), n() - 1),
        ),
        same(
            "V12b",
            [k(0), k(0), 3 * m() - 3 * n() - 1],
            le(n() + 2, m()),
        ),
        same(
            "V12c",
            [k(1), k(0), 3 * m() - 3 * n() + 1],
            le(n() + 2, m()),
        ),
    ]
}

/// The 21 families in catalog order.
pub fn vertex_families() -> &'static [VertexFamily] {
    static CATALOG: OnceLock<Vec<VertexFamily>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

pub fn vertex_family(id: &str) -> Option<&'static VertexFamily> {
    vertex_families().iter().find(|f| f.id == id)
}

/// Evaluates a family at `(n, m)`, requiring its realizability condition.
pub fn evaluate_vertex(id: &str, ns: OrderSize) -> Result<Point3> {
    let fam = vertex_family(id).ok_or_else(|| Error::ConditionViolated {
        family: id.to_string(),
        n: ns.n(),
        m: ns.m(),
    })?;
    if !fam.is_realizable_at(ns) {
        return Err(Error::ConditionViolated {
            family: id.to_string(),
            n: ns.n(),
            m: ns.m(),
        });
    }
    let p = fam.point(ns);
    if !p.is_integral() {
        return Err(Error::NonInteger(format!("{id} = {p}")));
    }
    Ok(p)
}

/// Whether a family labels a vertex in its own right at `(n, m)`, or only
/// shows up because its point happens to coincide with another family.
///
/// The boundary clauses of the extremality conditions (e.g. V9c at
/// `m = ⌊(9n+3)/8⌋`) always land on a point already carried by another
/// family, and at `5m = 6n` the families V1, V7*, V10* all collapse onto V6.
/// Those are reported as coincident labels, not as the vertex's family.
pub fn is_primary_label(id: &str, ns: OrderSize) -> bool {
    let (n, m) = (ns.n(), ns.m());
    match id {
        "V2" => m + 1 == n,
        "V3" | "V9a" | "V9b" | "V9c" => m == n + 1,
        "V1" | "V7a" | "V7b" | "V7c" | "V10a" | "V10b" | "V10c" => 5 * m < 6 * n,
        _ => true,
    }
}

/// One evaluated candidate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateVertex {
    pub id: String,
    pub point: [i64; 3],
    /// False when the family is extreme only through a boundary clause and
    /// coincides with another family's point.
    pub primary: bool,
}

/// Every family whose extremality condition holds at `(n, m)`, evaluated.
/// Coincident families are returned as separate entries sharing a point.
pub fn candidate_vertices(ns: OrderSize) -> Result<Vec<CandidateVertex>> {
    if !ns.in_general_regime() {
        return Err(Error::OutOfRegime {
            n: ns.n(),
            m: ns.m(),
        });
    }
    let mut out = Vec::new();
    for fam in vertex_families() {
        if !fam.is_extreme_at(ns) {
            continue;
        }
        let p = evaluate_vertex(fam.id, ns)?;
        let point = p
            .to_ints()
            .ok_or_else(|| Error::NonInteger(format!("{} = {p}", fam.id)))?;
        out.push(CandidateVertex {
            id: fam.id.to_string(),
            point,
            primary: is_primary_label(fam.id, ns),
        });
    }
    Ok(out)
}

/// Distinct candidate points with their coincident families grouped, in
/// lexicographic order of the point.
pub fn grouped_candidates(ns: OrderSize) -> Result<Vec<([i64; 3], Vec<String>)>> {
    let mut groups: std::collections::BTreeMap<[i64; 3], Vec<String>> = Default::default();
    for c in candidate_vertices(ns)? {
        groups.entry(c.point).or_default().push(c.id);
    }
    Ok(groups.into_iter().collect())
}
