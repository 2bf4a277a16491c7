//! Exact convex hull of a finite set of integer points in 3-space,
//! including lower-dimensional inputs.
//!
//! The inputs are small (a few hundred points at most) so the hull is found
//! by brute force over supporting planes, with exact `i128` arithmetic.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

type V = [i128; 3];

/// An inequality `normal · x >= rhs` with coprime integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HullFacet {
    pub normal: [i64; 3],
    pub rhs: i64,
}

/// An equality `normal · x = rhs` of the affine hull.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HullEquality {
    pub normal: [i64; 3],
    pub rhs: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactHull3 {
    pub dimension: u8,
    /// Sorted lexicographically.
    pub vertices: Vec<[i64; 3]>,
    /// Facets relative to the affine hull; sorted.
    pub facets: Vec<HullFacet>,
    pub equalities: Vec<HullEquality>,
}

impl ExactHull3 {
    pub fn contains(&self, p: [i64; 3]) -> bool {
        let dot = |a: [i64; 3]| -> i128 { (0..3).map(|i| a[i] as i128 * p[i] as i128).sum() };
        self.equalities.iter().all(|e| dot(e.normal) == e.rhs as i128)
            && self.facets.iter().all(|f| dot(f.normal) >= f.rhs as i128)
    }
}

fn sub(a: V, b: V) -> V {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: V, b: V) -> V {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: V, b: V) -> i128 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn is_zero(a: V) -> bool {
    a == [0, 0, 0]
}

fn primitive(a: V) -> V {
    let g = a[0].gcd(&a[1]).gcd(&a[2]);
    if g == 0 {
        a
    } else {
        [a[0] / g, a[1] / g, a[2] / g]
    }
}

fn to_i64(a: V) -> [i64; 3] {
    a.map(|x| i64::try_from(x).expect("hull coefficient fits i64"))
}

/// Normal oriented so that every point satisfies `normal·x >= rhs`, if
/// the plane through `base` with normal `dir` supports the point set.
fn supporting(points: &[V], base: V, dir: V) -> Option<(V, i128)> {
    let dir = primitive(dir);
    let rhs = dot(dir, base);
    let (mut lo, mut hi) = (false, false);
    for &p in points {
        let s = dot(dir, p) - rhs;
        lo |= s < 0;
        hi |= s > 0;
        if lo && hi {
            return None;
        }
    }
    if lo {
        Some(([-dir[0], -dir[1], -dir[2]], -rhs))
    } else {
        Some((dir, rhs))
    }
}

/// Keeps only the lowest and highest point of every vertical column; the
/// points in between can never be vertices.
fn column_extremes(points: &[V]) -> Vec<V> {
    let mut cols: BTreeMap<(i128, i128), (i128, i128)> = BTreeMap::new();
    for p in points {
        let e = cols.entry((p[0], p[1])).or_insert((p[2], p[2]));
        e.0 = e.0.min(p[2]);
        e.1 = e.1.max(p[2]);
    }
    let mut out = Vec::new();
    for ((a, b), (lo, hi)) in cols {
        out.push([a, b, lo]);
        if hi != lo {
            out.push([a, b, hi]);
        }
    }
    out
}

fn rank_of(normals: &[V]) -> usize {
    let nonzero: Vec<V> = normals.iter().copied().filter(|n| !is_zero(*n)).collect();
    if nonzero.is_empty() {
        return 0;
    }
    let a = nonzero[0];
    let Some(b) = nonzero.iter().copied().find(|&b| !is_zero(cross(a, b))) else {
        return 1;
    };
    let c = cross(a, b);
    if nonzero.iter().any(|&x| dot(c, x) != 0) {
        3
    } else {
        2
    }
}

/// Exact convex hull. Panics on empty input.
pub fn exact_hull(input: &[[i64; 3]]) -> ExactHull3 {
    assert!(!input.is_empty(), "hull of an empty set");
    let set: BTreeSet<V> = input.iter().map(|p| p.map(|x| x as i128)).collect();
    let points: Vec<V> = set.into_iter().collect();
    let p0 = points[0];
    let Some(&p1) = points.iter().find(|&&p| p != p0) else {
        return ExactHull3 {
            dimension: 0,
            vertices: vec![to_i64(p0)],
            facets: Vec::new(),
            equalities: (0..3)
                .map(|i| {
                    let mut e = [0i64; 3];
                    e[i] = 1;
                    HullEquality {
                        normal: e,
                        rhs: p0[i] as i64,
                    }
                })
                .collect(),
        };
    };
    let d1 = sub(p1, p0);
    let plane = points
        .iter()
        .map(|&p| cross(d1, sub(p, p0)))
        .find(|c| !is_zero(*c));
    let Some(normal) = plane else {
        return segment_hull(&points, p0, d1);
    };
    let normal = primitive(normal);
    if points.iter().all(|&p| dot(normal, sub(p, p0)) == 0) {
        return polygon_hull(&points, p0, normal);
    }
    solid_hull(&points)
}

fn segment_hull(points: &[V], p0: V, d: V) -> ExactHull3 {
    let d = primitive(d);
    let t = |p: V| dot(d, sub(p, p0));
    let lo = *points.iter().min_by_key(|&&p| t(p)).unwrap();
    let hi = *points.iter().max_by_key(|&&p| t(p)).unwrap();
    // Two independent normals orthogonal to the line.
    let mut eqs: Vec<V> = Vec::new();
    for axis in [[1, 0, 0], [0, 1, 0], [0, 0, 1]] {
        let c = primitive(cross(d, axis));
        if !is_zero(c) && eqs.iter().all(|&e| !is_zero(cross(e, c))) && eqs.len() < 2 {
            eqs.push(c);
        }
    }
    let mut vertices = vec![to_i64(lo), to_i64(hi)];
    vertices.sort();
    let mut facets = vec![
        HullFacet {
            normal: to_i64(d),
            rhs: dot(d, lo) as i64,
        },
        HullFacet {
            normal: to_i64([-d[0], -d[1], -d[2]]),
            rhs: -dot(d, hi) as i64,
        },
    ];
    facets.sort();
    let mut equalities: Vec<HullEquality> = eqs
        .into_iter()
        .map(|e| HullEquality {
            normal: to_i64(e),
            rhs: dot(e, p0) as i64,
        })
        .collect();
    equalities.sort();
    ExactHull3 {
        dimension: 1,
        vertices,
        facets,
        equalities,
    }
}

fn polygon_hull(points: &[V], p0: V, normal: V) -> ExactHull3 {
    let mut lines: BTreeSet<(V, i128)> = BTreeSet::new();
    for (i, &a) in points.iter().enumerate() {
        for &b in &points[i + 1..] {
            let dir = cross(normal, sub(b, a));
            if let Some(f) = supporting(points, a, dir) {
                lines.insert(f);
            }
        }
    }
    let vertices = tight_vertices(points, &lines, 2);
    let mut equalities = vec![HullEquality {
        normal: to_i64(normal),
        rhs: dot(normal, p0) as i64,
    }];
    // Sign-normalize the single equality for a stable representation.
    if equalities[0].normal < [0, 0, 0] {
        let e = &mut equalities[0];
        e.normal = e.normal.map(|x| -x);
        e.rhs = -e.rhs;
    }
    ExactHull3 {
        dimension: 2,
        vertices,
        facets: lines
            .into_iter()
            .map(|(n, r)| HullFacet {
                normal: to_i64(n),
                rhs: r as i64,
            })
            .collect(),
        equalities,
    }
}

fn solid_hull(all: &[V]) -> ExactHull3 {
    let points = column_extremes(all);
    let mut planes: BTreeSet<(V, i128)> = BTreeSet::new();
    let k = points.len();
    for i in 0..k {
        for j in i + 1..k {
            let dij = sub(points[j], points[i]);
            for l in j + 1..k {
                let c = cross(dij, sub(points[l], points[i]));
                if is_zero(c) {
                    continue;
                }
                let key = primitive(c);
                let r = dot(key, points[i]);
                if planes.contains(&(key, r)) || planes.contains(&(key.map(|x| -x), -r)) {
                    continue;
                }
                if let Some(f) = supporting(&points, points[i], c) {
                    planes.insert(f);
                }
            }
        }
    }
    let vertices = tight_vertices(&points, &planes, 3);
    ExactHull3 {
        dimension: 3,
        vertices,
        facets: planes
            .into_iter()
            .map(|(n, r)| HullFacet {
                normal: to_i64(n),
                rhs: r as i64,
            })
            .collect(),
        equalities: Vec::new(),
    }
}

/// Points whose tight constraints span the required rank. In the polygon
/// case the line normals are all orthogonal to the plane normal, so two
/// independent ones identify a vertex.
fn tight_vertices(points: &[V], constraints: &BTreeSet<(V, i128)>, rank: usize) -> Vec<[i64; 3]> {
    let mut out: Vec<[i64; 3]> = points
        .iter()
        .filter(|&&p| {
            let tight: Vec<V> = constraints
                .iter()
                .filter(|(n, r)| dot(*n, p) == *r)
                .map(|(n, _)| *n)
                .collect();
            rank_of(&tight) >= rank
        })
        .map(|&p| to_i64(p))
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton() {
        let h = exact_hull(&[[0, 0, 0]]);
        assert_eq!(h.dimension, 0);
        assert_eq!(h.vertices, vec![[0, 0, 0]]);
        assert!(h.contains([0, 0, 0]));
        assert!(!h.contains([0, 0, 1]));
    }

    #[test]
    fn segment() {
        let h = exact_hull(&[[0, 3, 0], [2, 0, 0]]);
        assert_eq!(h.dimension, 1);
        assert_eq!(h.vertices, vec![[0, 3, 0], [2, 0, 0]]);
        assert_eq!(h.equalities.len(), 2);
        assert!(!h.contains([1, 1, 0]));
    }

    #[test]
    fn square_with_center() {
        let h = exact_hull(&[[0, 0, 0], [2, 0, 0], [0, 2, 0], [2, 2, 0], [1, 1, 0], [1, 0, 0]]);
        assert_eq!(h.dimension, 2);
        assert_eq!(h.vertices, vec![[0, 0, 0], [0, 2, 0], [2, 0, 0], [2, 2, 0]]);
        assert_eq!(h.facets.len(), 4);
    }

    #[test]
    fn cube_with_interior_and_edge_points() {
        let mut pts = Vec::new();
        for x in 0..=2 {
            for y in 0..=2 {
                for z in 0..=2 {
                    pts.push([x, y, z]);
                }
            }
        }
        let h = exact_hull(&pts);
        assert_eq!(h.dimension, 3);
        assert_eq!(h.vertices.len(), 8);
        assert_eq!(h.facets.len(), 6);
        for p in &pts {
            assert!(h.contains(*p));
        }
    }

    #[test]
    fn tetrahedron() {
        let pts = [[0, 0, 0], [0, 1, 0], [0, 2, 1], [1, 0, 0]];
        let h = exact_hull(&pts);
        assert_eq!(h.dimension, 3);
        assert_eq!(h.vertices.len(), 4);
        assert_eq!(h.facets.len(), 4);
    }
}
