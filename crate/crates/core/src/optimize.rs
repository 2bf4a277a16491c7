//! Extremal values of a degree-based index over the realizable points of
//! one `(n, m)`, and closed forms of the index at every vertex family.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::builder::build_witness_int;
use crate::error::Result;
use crate::exec::Exec;
use crate::expr::{int, Expr};
use crate::graph::ChemicalGraph;
use crate::model::{reduce_index, IndexSpec, OrderSize, ReducedIndex};
use crate::polytope::{build_polytope_with, PolytopeDescription};
use crate::realize::is_realizable;
use crate::vertices::vertex_families;

/// Absolute tolerance for ties between floating-point objective values.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Min,
    Max,
}

impl FromStr for Direction {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "min" => Ok(Direction::Min),
            "max" => Ok(Direction::Max),
            other => Err(format!("direction must be min or max, not {other:?}")),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Min => "min",
            Direction::Max => "max",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OptimalVertex {
    pub point: [i64; 3],
    pub families: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub point: [i64; 3],
    pub graph6: String,
    pub graph: ChemicalGraph,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OptimizationResult {
    pub n: u64,
    pub m: u64,
    pub index: String,
    pub direction: Direction,
    /// Whether the integer path was used (no tolerance involved).
    pub exact: bool,
    /// Optimum of the reduced functional on `(m12, m13, m33)`.
    pub reduced_value: f64,
    /// The index itself: reduced value plus the affine term in `n`, `m`.
    pub optimal_value: f64,
    pub optimal_vertices: Vec<OptimalVertex>,
    /// Every realizable integer point of the optimal face, sorted.
    pub optimal_lattice_points: Vec<[i64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Witness>>,
}

/// Objective evaluation, exact when the index has integer coefficients.
enum Objective {
    Exact(crate::model::ExactReduced),
    Float([f64; 3]),
}

impl Objective {
    fn of(r: &ReducedIndex) -> Self {
        match r.exact {
            Some(e) => Objective::Exact(e),
            None => Objective::Float(r.coeffs()),
        }
    }

    fn value(&self, p: [i64; 3]) -> f64 {
        match self {
            Objective::Exact(e) => e.functional(p) as f64,
            Objective::Float(c) => c[0] * p[0] as f64 + c[1] * p[1] as f64 + c[2] * p[2] as f64,
        }
    }

    /// Whether `p` attains `best`, where `best` is a value of [`Self::value`]
    /// at a vertex.
    fn attains(&self, p: [i64; 3], best: f64) -> bool {
        match self {
            Objective::Exact(e) => e.functional(p) as f64 == best,
            Objective::Float(_) => (self.value(p) - best).abs() <= TIE_TOLERANCE,
        }
    }
}

fn better(dir: Direction, a: f64, b: f64) -> bool {
    match dir {
        Direction::Min => a < b,
        Direction::Max => a > b,
    }
}

/// Integer constraint `a·x >= b` (or `= b`) in machine integers.
type Row = ([i128; 3], i128);

fn rows(d: &PolytopeDescription) -> (Vec<Row>, Vec<Row>) {
    let conv = |a: &num_bigint::BigInt| a.to_i128().expect("catalog coefficients fit in i128");
    let facets = d
        .facets
        .iter()
        .map(|f| ([conv(&f.a12), conv(&f.a13), conv(&f.a33)], conv(&f.rhs)))
        .collect();
    let eqs = d
        .equalities
        .iter()
        .map(|e| ([conv(&e.a12), conv(&e.a13), conv(&e.a33)], conv(&e.rhs)))
        .collect();
    (facets, eqs)
}

fn div_floor(a: i128, b: i128) -> i128 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i128, b: i128) -> i128 {
    -div_floor(-a, b)
}

/// All integer points of the polytope that satisfy `keep`, found by
/// scanning the vertex bounding box in `(m12, m13)` and solving the
/// constraints for the admissible `m33` interval.
fn lattice_points(d: &PolytopeDescription, keep: impl Fn([i64; 3]) -> bool) -> Vec<[i64; 3]> {
    let pts = d.points();
    let lo = |k: usize| pts.iter().map(|p| p[k]).min().unwrap_or(0);
    let hi = |k: usize| pts.iter().map(|p| p[k]).max().unwrap_or(-1);
    let (facets, eqs) = rows(d);
    let mut out = Vec::new();
    for a in lo(0)..=hi(0) {
        for b in lo(1)..=hi(1) {
            let (mut zlo, mut zhi) = (lo(2) as i128, hi(2) as i128);
            let mut fixed: Option<i128> = None;
            let mut empty = false;
            let mut bound = |coef: [i128; 3], rhs: i128, equal: bool| {
                let rest = rhs - coef[0] * a as i128 - coef[1] * b as i128;
                let c = coef[2];
                if c == 0 {
                    if (equal && rest != 0) || (!equal && rest > 0) {
                        empty = true;
                    }
                } else if equal {
                    if rest % c != 0 {
                        empty = true;
                    } else if fixed.is_some_and(|z| z != rest / c) {
                        empty = true;
                    } else {
                        fixed = Some(rest / c);
                    }
                } else if c > 0 {
                    zlo = zlo.max(div_ceil(rest, c));
                } else {
                    zhi = zhi.min(div_floor(rest, c));
                }
            };
            for (coef, rhs) in &eqs {
                bound(*coef, *rhs, true);
            }
            for (coef, rhs) in &facets {
                bound(*coef, *rhs, false);
            }
            if empty {
                continue;
            }
            if let Some(z) = fixed {
                zlo = zlo.max(z);
                zhi = zhi.min(z);
            }
            for z in zlo..=zhi {
                let p = [a, b, z as i64];
                if keep(p) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Optimizes `idx` over the realizable points of `ns`.
pub fn optimize(ns: OrderSize, idx: &IndexSpec, dir: Direction) -> Result<OptimizationResult> {
    optimize_with(ns, idx, dir, false, Exec::Sequential)
}

/// [`optimize`], optionally building a witness graph for every optimal
/// lattice point.
pub fn optimize_with(
    ns: OrderSize,
    idx: &IndexSpec,
    dir: Direction,
    witnesses: bool,
    exec: Exec,
) -> Result<OptimizationResult> {
    let d = build_polytope_with(ns, exec)?;
    let reduced = reduce_index(idx);
    let obj = Objective::of(&reduced);
    let mut best: Option<f64> = None;
    for v in &d.vertices {
        let f = obj.value(v.point);
        if best.is_none_or(|b| better(dir, f, b)) {
            best = Some(f);
        }
    }
    let best = best.expect("every polytope has a vertex");
    let optimal_vertices: Vec<OptimalVertex> = d
        .vertices
        .iter()
        .filter(|v| obj.attains(v.point, best))
        .map(|v| OptimalVertex {
            point: v.point,
            families: v.families.clone(),
        })
        .collect();
    let optimal_lattice_points = lattice_points(&d, |p| obj.attains(p, best) && is_realizable(ns, p));
    let constant = match &obj {
        Objective::Exact(e) => e.constant(ns) as f64,
        Objective::Float(_) => reduced.constant(ns),
    };
    let witnesses = if witnesses {
        let mut out = Vec::with_capacity(optimal_lattice_points.len());
        for &p in &optimal_lattice_points {
            let graph = build_witness_int(ns, p)?;
            out.push(Witness {
                point: p,
                graph6: graph.to_graph6(),
                graph,
            });
        }
        Some(out)
    } else {
        None
    };
    Ok(OptimizationResult {
        n: ns.n(),
        m: ns.m(),
        index: idx.name.clone(),
        direction: dir,
        exact: matches!(obj, Objective::Exact(_)),
        reduced_value: best,
        optimal_value: best + constant,
        optimal_vertices,
        optimal_lattice_points,
        witnesses,
    })
}

/// One result per valid `(n, m)` with `lo <= n <= hi`, in order.
pub fn sweep(
    lo: u64,
    hi: u64,
    idx: &IndexSpec,
    dir: Direction,
    exec: Exec,
) -> Vec<(OrderSize, Result<OptimizationResult>)> {
    let pairs = OrderSize::all_up_to(lo, hi);
    exec.map(&pairs, |&ns| (ns, optimize_with(ns, idx, dir, false, Exec::Sequential)))
}

/// The reduced functional at one vertex family as a closed form in `n`, `m`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicValue {
    pub family: &'static str,
    /// Present when the index has integer coefficients.
    pub expr: Option<Expr>,
    coords: [Expr; 3],
    coeffs: [f64; 3],
}

impl SymbolicValue {
    /// Value at `(n, m)`, exact when the index has integer coefficients.
    pub fn exact_at(&self, ns: OrderSize) -> Option<BigRational> {
        self.expr.as_ref().map(|e| e.eval_at(ns.n(), ns.m()))
    }

    pub fn value_at(&self, ns: OrderSize) -> f64 {
        if let Some(v) = self.exact_at(ns) {
            return v.to_f64().unwrap_or(f64::NAN);
        }
        self.coords
            .iter()
            .zip(self.coeffs)
            .map(|(c, k)| k * c.eval_at(ns.n(), ns.m()).to_f64().unwrap_or(f64::NAN))
            .sum()
    }
}

impl fmt::Display for SymbolicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(e) = &self.expr {
            return write!(f, "{e}");
        }
        let terms: Vec<String> = self
            .coords
            .iter()
            .zip(self.coeffs)
            .filter(|(c, k)| *k != 0.0 && **c != int(0))
            .map(|(c, k)| format!("{k}*({c})"))
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

fn linear_combination(coeffs: [i64; 3], coords: &[Expr; 3]) -> Expr {
    let mut acc: Option<Expr> = None;
    for (k, c) in coeffs.iter().zip(coords) {
        if *k == 0 || *c == int(0) {
            continue;
        }
        let term = match (*k, c) {
            (k, Expr::Int(v)) => int(k * v),
            (1, c) => c.clone(),
            (-1, c) => -c.clone(),
            (k, c) => int(k) * c.clone(),
        };
        acc = Some(match acc {
            None => term,
            Some(a) => a + term,
        });
    }
    acc.unwrap_or_else(|| int(0))
}

/// The reduced functional of `idx` evaluated symbolically at every vertex
/// family, in catalog order.
pub fn symbolic_vertex_values(idx: &IndexSpec) -> Vec<SymbolicValue> {
    let reduced = reduce_index(idx);
    vertex_families()
        .iter()
        .map(|fam| SymbolicValue {
            family: fam.id,
            expr: reduced
                .exact
                .map(|e| linear_combination([e.cp12, e.cp13, e.cp33], &fam.coords)),
            coords: fam.coords.clone(),
            coeffs: reduced.coeffs(),
        })
        .collect()
}

/// Reduced value of every vertex of `d`, for comparison with the
/// symbolic table.
pub fn vertex_values(d: &PolytopeDescription, idx: &IndexSpec) -> Vec<([i64; 3], f64)> {
    let obj = Objective::of(&reduce_index(idx));
    d.vertices.iter().map(|v| (v.point, obj.value(v.point))).collect()
}

impl OptimizationResult {
    pub fn to_text(&self) -> String {
        use std::fmt::Write as _;
        let mut s = String::new();
        let _ = writeln!(
            s,
            "n = {}, m = {}, {} {} = {} (reduced {})",
            self.n, self.m, self.direction, self.index, self.optimal_value, self.reduced_value
        );
        s.push_str("optimal vertices\n");
        for v in &self.optimal_vertices {
            let p = format!("({},{},{})", v.point[0], v.point[1], v.point[2]);
            let _ = writeln!(s, "  {p:<14} {}", v.families.join("="));
        }
        s.push_str("optimal lattice points\n");
        for p in &self.optimal_lattice_points {
            let _ = writeln!(s, "  ({},{},{})", p[0], p[1], p[2]);
        }
        if let Some(ws) = &self.witnesses {
            s.push_str("witnesses (graph6)\n");
            for w in ws {
                let p = format!("({},{},{})", w.point[0], w.point[1], w.point[2]);
                let _ = writeln!(s, "  {p:<14} {}", w.graph6);
            }
        }
        s
    }
}
