//! The polytope of realizable points for one `(n, m)`.
//!
//! Small and degenerate pairs come straight from the stored catalog. In the
//! general regime the vertices are computed geometrically, by intersecting
//! every triple of active facet hyperplanes, and then reconciled against the
//! closed-form vertex catalog; any disagreement is a hard error.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::facets::{active_facets, FacetInequality, LinearEquality};
use crate::model::OrderSize;
use crate::realize::check_int;
use crate::small::small_case;
use crate::vertices::{candidate_vertices, vertex_families};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    Degenerate0,
    Degenerate1,
    Degenerate2,
    SmallFull,
    GeneralFull,
}

pub fn classify(ns: OrderSize) -> Regime {
    match small_case(ns) {
        None => Regime::GeneralFull,
        Some(c) => match c.dimension {
            0 => Regime::Degenerate0,
            1 => Regime::Degenerate1,
            2 => Regime::Degenerate2,
            _ => Regime::SmallFull,
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeVertex {
    pub point: [i64; 3],
    /// Vertex families this point belongs to.
    pub families: Vec<String>,
    /// Further families whose point coincides with this one only through a
    /// boundary clause of their extremality condition.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub coincident: Vec<String>,
    /// Facets tight at this vertex.
    pub supports: Vec<String>,
}

impl PolytopeVertex {
    /// Families joined as in `V7a=V10a=V10b=V10c`.
    pub fn label(&self) -> String {
        self.families.join("=")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeDescription {
    pub n: u64,
    pub m: u64,
    pub regime: Regime,
    pub dimension: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    pub equalities: Vec<LinearEquality>,
    pub facets: Vec<FacetInequality>,
    /// Sorted lexicographically by point.
    pub vertices: Vec<PolytopeVertex>,
}

impl PolytopeDescription {
    pub fn order_size(&self) -> OrderSize {
        OrderSize::new(self.n, self.m).expect("descriptions are built from valid pairs")
    }

    pub fn points(&self) -> Vec<[i64; 3]> {
        self.vertices.iter().map(|v| v.point).collect()
    }

    pub fn contains(&self, p: [i64; 3]) -> bool {
        self.equalities.iter().all(|e| e.holds_int(p))
            && self.facets.iter().all(|f| f.is_satisfied_int(p))
    }

    pub fn facet_ids(&self) -> Vec<&str> {
        self.facets.iter().map(|f| f.id.as_str()).collect()
    }

    /// Human-readable rendering: one facet per row, one vertex per row.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = write!(
            s,
            "n = {}, m = {}, dimension {} ({:?}",
            self.n, self.m, self.dimension, self.regime
        );
        if let Some(c) = &self.class {
            let _ = write!(s, ", {c}");
        }
        s.push_str(")\n");
        if !self.equalities.is_empty() {
            s.push_str("\nequalities\n");
            for e in &self.equalities {
                let _ = writeln!(s, "  {e}");
            }
        }
        s.push_str("\nfacets\n");
        for f in &self.facets {
            let _ = writeln!(s, "  {:<6} {f}", f.id);
        }
        s.push_str("\nvertices\n");
        for v in &self.vertices {
            let p = format!("({},{},{})", v.point[0], v.point[1], v.point[2]);
            let mut label = v.label();
            if !v.coincident.is_empty() {
                label = format!("{label} (also {})", v.coincident.join(", "));
            }
            let _ = writeln!(s, "  {p:<14} {label:<28} [{}]", v.supports.join(","));
        }
        s
    }
}

fn tight_ids(facets: &[FacetInequality], p: [i64; 3]) -> Vec<String> {
    facets
        .iter()
        .filter(|f| f.is_tight_int(p))
        .map(|f| f.id.clone())
        .collect()
}

/// Families whose extremality condition holds at `(n, m)` and whose
/// integral point equals `p`, regardless of regime.
fn matching_families(ns: OrderSize, p: [i64; 3]) -> Vec<String> {
    vertex_families()
        .iter()
        .filter(|f| f.is_extreme_at(ns))
        .filter(|f| f.point(ns).to_ints() == Some(p))
        .map(|f| f.id.to_string())
        .collect()
}

/// The stored description of a small or degenerate pair, or `None` in the
/// general regime.
pub fn small_case_polytope(ns: OrderSize) -> Option<PolytopeDescription> {
    let c = small_case(ns)?;
    let vertices = c
        .points
        .iter()
        .map(|&p| PolytopeVertex {
            point: p,
            families: if c.dimension == 3 && c.class.is_some_and(|k| k.len() <= 3) {
                matching_families(ns, p)
            } else {
                Vec::new()
            },
            coincident: Vec::new(),
            supports: tight_ids(&c.facets, p),
        })
        .collect();
    Some(PolytopeDescription {
        n: ns.n(),
        m: ns.m(),
        regime: classify(ns),
        dimension: c.dimension,
        class: c.class.map(String::from),
        equalities: c.equalities,
        facets: c.facets,
        vertices,
    })
}

fn det3(r: [[&BigInt; 3]; 3]) -> BigInt {
    r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
        + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
}

/// Exact intersection of three facet hyperplanes as integer numerators over
/// a positive common denominator, or `None` if they do not meet in a point.
pub fn intersect(a: &FacetInequality, b: &FacetInequality, c: &FacetInequality) -> Option<([BigInt; 3], BigInt)> {
    let rows = [a.normal(), b.normal(), c.normal()];
    let d = det3(rows);
    if d.is_zero() {
        return None;
    }
    let rhs = [&a.rhs, &b.rhs, &c.rhs];
    let col = |k: usize| {
        let mut r = rows;
        for i in 0..3 {
            r[i][k] = rhs[i];
        }
        det3(r)
    };
    let mut num = [col(0), col(1), col(2)];
    let mut den = d;
    if den.is_negative() {
        den = -den;
        for x in &mut num {
            *x = -&*x;
        }
    }
    Some((num, den))
}

fn feasible(facets: &[FacetInequality], num: &[BigInt; 3], den: &BigInt) -> bool {
    facets.iter().all(|f| {
        let lhs = &f.a12 * &num[0] + &f.a13 * &num[1] + &f.a33 * &num[2];
        lhs >= &f.rhs * den
    })
}

/// Vertices of the polyhedron cut out by `facets`, as exact points, sorted.
/// Fractional intersections are reported through the `Err` side.
pub fn facet_vertices(facets: &[FacetInequality], exec: Exec) -> std::result::Result<Vec<[i64; 3]>, String> {
    let k = facets.len();
    let firsts: Vec<usize> = (0..k).collect();
    let found: Vec<std::result::Result<[i64; 3], String>> = exec.flat_map(&firsts, |&i| {
        let mut out = Vec::new();
        for j in i + 1..k {
            for l in j + 1..k {
                let Some((num, den)) = intersect(&facets[i], &facets[j], &facets[l]) else {
                    continue;
                };
                if !feasible(facets, &num, &den) {
                    continue;
                }
                let ints: Option<Vec<i64>> = num
                    .iter()
                    .map(|x| {
                        let (q, r) = num_integer::Integer::div_rem(x, &den);
                        if r.is_zero() {
                            q.to_i64()
                        } else {
                            None
                        }
                    })
                    .collect();
                out.push(match ints {
                    Some(v) => Ok([v[0], v[1], v[2]]),
                    None => Err(format!("({}/{d},{}/{d},{}/{d})", num[0], num[1], num[2], d = den)),
                });
            }
        }
        out
    });
    let mut pts = BTreeSet::new();
    for r in found {
        pts.insert(r?);
    }
    Ok(pts.into_iter().collect())
}

fn general(ns: OrderSize, exec: Exec) -> Result<PolytopeDescription> {
    let facets = active_facets(ns)?;
    let geometric = facet_vertices(&facets, exec).map_err(|point| Error::NonIntegerVertex {
        n: ns.n(),
        m: ns.m(),
        point,
    })?;
    let mismatch = |detail: String| Error::EngineMismatch {
        n: ns.n(),
        m: ns.m(),
        detail,
    };

    let mut labels: BTreeMap<[i64; 3], (Vec<String>, Vec<String>)> = BTreeMap::new();
    for c in candidate_vertices(ns)? {
        let entry = labels.entry(c.point).or_default();
        if c.primary {
            entry.0.push(c.id);
        } else {
            entry.1.push(c.id);
        }
    }
    let catalog: BTreeSet<[i64; 3]> = labels.keys().copied().collect();
    let geo: BTreeSet<[i64; 3]> = geometric.iter().copied().collect();
    if catalog != geo {
        let extra: Vec<_> = geo.difference(&catalog).collect();
        let missing: Vec<_> = catalog.difference(&geo).collect();
        return Err(mismatch(format!(
            "geometric vertices not in catalog: {extra:?}; catalog points not vertices: {missing:?}"
        )));
    }

    let mut vertices = Vec::with_capacity(geometric.len());
    for p in geometric {
        let verdict = check_int(ns, p);
        if !verdict.realizable {
            return Err(mismatch(format!(
                "vertex {p:?} is not realizable ({:?})",
                verdict.failed_conditions
            )));
        }
        let (families, coincident) = labels.remove(&p).unwrap_or_default();
        if families.is_empty() {
            return Err(mismatch(format!(
                "vertex {p:?} only carries boundary labels {coincident:?}"
            )));
        }
        vertices.push(PolytopeVertex {
            point: p,
            families,
            coincident,
            supports: tight_ids(&facets, p),
        });
    }
    Ok(PolytopeDescription {
        n: ns.n(),
        m: ns.m(),
        regime: Regime::GeneralFull,
        dimension: 3,
        class: None,
        equalities: Vec::new(),
        facets,
        vertices,
    })
}

/// Builds the polytope description for any valid pair.
pub fn build_polytope(ns: OrderSize) -> Result<PolytopeDescription> {
    build_polytope_with(ns, Exec::Sequential)
}

/// As [`build_polytope`], optionally spreading the facet-triple search over
/// the worker pool. The result does not depend on `exec`.
pub fn build_polytope_with(ns: OrderSize, exec: Exec) -> Result<PolytopeDescription> {
    match small_case_polytope(ns) {
        Some(d) => Ok(d),
        None => general(ns, exec),
    }
}

/// At most 16 vertices and at most 10 facets.
pub fn vertex_count_bound_check(ns: OrderSize) -> Result<bool> {
    let d = build_polytope(ns)?;
    Ok(d.vertices.len() <= 16 && d.facets.len() <= 10)
}
