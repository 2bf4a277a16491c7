//! End-to-end acceptance checks. Each criterion prints one PASS or FAIL
//! line. The process exits non-zero on any failure that is not one of the
//! recognized known deviations, which are tagged on their FAIL line.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use chempoly::builder::build_witness_int;
use chempoly::expr::{int, m, n, Expr};
use chempoly::facets::{evaluate_facet, facet_triples};
use chempoly::index::IndexRegistry;
use chempoly::optimize::{optimize, symbolic_vertex_values, Direction};
use chempoly::oracle::{enumerate_realizable, exact_hull};
use chempoly::polytope::{build_polytope, small_case_polytope, Regime};
use chempoly::realize::check_int;
use chempoly::vertices::vertex_family;
use chempoly::{Exec, OrderSize, Point3};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

/// `Ok` carries a summary. `Err` carries the reason, tagged as a known
/// deviation when the reference figure itself cannot be met by a correct
/// computation; those still print FAIL but do not fail the run.
type Outcome = Result<String, Failure>;

#[derive(Debug)]
enum Failure {
    Defect(String),
    Known(String),
}

fn defect<T>(why: String) -> Result<T, Failure> {
    Err(Failure::Defect(why))
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Defect(s)
    }
}

impl From<&str> for Failure {
    fn from(s: &str) -> Self {
        Failure::Defect(s.to_string())
    }
}

fn ns(n: u64, m: u64) -> OrderSize {
    OrderSize::new(n, m).unwrap()
}

fn within(limit: Duration, start: Instant, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        Err(format!("{what} took {t:.1?}, limit {limit:?}"))
    } else {
        Ok(())
    }
}

fn regime_pairs(max_n: u64) -> Vec<OrderSize> {
    OrderSize::all_up_to(3, max_n)
        .into_iter()
        .filter(|p| p.in_general_regime())
        .collect()
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for p in OrderSize::all_up_to(3, 10) {
        let d = build_polytope(p).map_err(|e| format!("{p}: {e}"))?;
        let pts: Vec<[i64; 3]> = enumerate_realizable(p)
            .map_err(|e| e.to_string())?
            .points
            .into_iter()
            .collect();
        let h = exact_hull(&pts);
        if h.dimension != d.dimension {
            return defect(format!("{p}: dimension {} vs {}", h.dimension, d.dimension));
        }
        if h.vertices != d.points() {
            return defect(format!("{p}: vertices {:?} vs {:?}", h.vertices, d.points()));
        }
        if let Some(q) = pts.iter().find(|q| !d.contains(**q)) {
            return defect(format!("{p}: realizable {q:?} violates the description"));
        }
        if let Some(v) = d.points().iter().find(|v| !h.contains(**v)) {
            return defect(format!("{p}: engine vertex {v:?} outside the oracle hull"));
        }
        checked += 1;
    }
    within(Duration::from_secs(600), start, "sweep")?;
    Ok(format!("{checked} pairs in {:.1?}", start.elapsed()))
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let d = build_polytope(ns(13, 15)).map_err(|e| e.to_string())?;
    if d.facets.len() != 6 {
        return defect(format!("{} facets", d.facets.len()));
    }
    let expected: BTreeMap<[i64; 3], &str> = [
        ([0, 0, 0], "V1=V7c"),
        ([0, 1, 0], "V7a=V10a=V10b=V10c"),
        ([1, 0, 1], "V7b"),
        ([0, 4, 9], "V8c"),
        ([1, 3, 10], "V8d"),
        ([3, 0, 9], "V11a=V11b=V11c"),
        ([0, 0, 5], "V12b"),
        ([1, 0, 7], "V12c"),
    ]
    .into_iter()
    .collect();
    let got: BTreeMap<[i64; 3], String> = d.vertices.iter().map(|v| (v.point, v.label())).collect();
    if got.len() != expected.len() || expected.iter().any(|(p, l)| got.get(p).map(String::as_str) != Some(*l)) {
        return defect(format!("labels {got:?}"));
    }
    let albertson = IndexRegistry::standard().lookup("albertson").unwrap().clone();
    let r = optimize(ns(13, 15), &albertson, Direction::Min).map_err(|e| e.to_string())?;
    let opt: Vec<[i64; 3]> = r.optimal_vertices.iter().map(|v| v.point).collect();
    if opt != vec![[0, 0, 5], [1, 0, 7]] || r.reduced_value != -10.0 {
        return defect(format!("optimum {opt:?} with value {}", r.reduced_value));
    }
    within(Duration::from_secs(1), start, "worked example")?;
    Ok(format!("in {:.1?}", start.elapsed()))
}

fn lemma_case() -> Outcome {
    let d = build_polytope(ns(15, 18)).map_err(|e| e.to_string())?;
    let got: BTreeSet<String> = d.vertices.iter().map(|v| v.label()).collect();
    let expected: BTreeSet<String> = ["V6", "V8c", "V8d", "V11a=V11b=V11c", "V12b", "V12c"]
        .into_iter()
        .map(String::from)
        .collect();
    if got != expected {
        return defect(format!("families {got:?}"));
    }
    Ok("6 vertex families".into())
}

fn degenerate_catalog() -> Outcome {
    let cases: [(u64, u64, &[[i64; 3]]); 8] = [
        (3, 2, &[[2, 0, 0]]),
        (3, 3, &[[0, 0, 0]]),
        (4, 5, &[[0, 0, 1]]),
        (4, 3, &[[0, 3, 0], [2, 0, 0]]),
        (4, 4, &[[0, 1, 0], [0, 0, 0]]),
        (5, 4, &[[1, 2, 0], [2, 0, 0]]),
        (5, 6, &[[0, 0, 0], [0, 0, 1], [0, 1, 3]]),
        (10, 14, &[[0, 1, 13], [0, 0, 11], [0, 0, 10]]),
    ];
    for (a, b, pts) in cases {
        let d = build_polytope(ns(a, b)).map_err(|e| e.to_string())?;
        let want: BTreeSet<_> = pts.iter().copied().collect();
        let got: BTreeSet<_> = d.points().into_iter().collect();
        if want != got {
            return defect(format!("({a}, {b}): {got:?}"));
        }
        if d.dimension == 3 || matches!(d.regime, Regime::GeneralFull | Regime::SmallFull) {
            return defect(format!("({a}, {b}) classified as {:?}", d.regime));
        }
    }
    Ok("8 cases".into())
}

/// The small-case table, transcribed row by row.
fn small_table() -> Vec<(u64, u64, u8, Vec<[i64; 3]>)> {
    let rows: &[(u64, u64, u8, &[[i64; 3]])] = &[
        (3, 2, 0, &[[2, 0, 0]]),
        (3, 3, 0, &[[0, 0, 0]]),
        (4, 3, 1, &[[0, 3, 0], [2, 0, 0]]),
        (4, 4, 1, &[[0, 0, 0], [0, 1, 0]]),
        (4, 5, 0, &[[0, 0, 1]]),
        (5, 4, 1, &[[1, 2, 0], [2, 0, 0]]),
        (5, 5, 3, &[[0, 0, 0], [0, 1, 0], [0, 2, 1], [1, 0, 0]]),
        (5, 6, 2, &[[0, 0, 0], [0, 0, 1], [0, 1, 3]]),
        (6, 5, 3, &[[0, 4, 1], [1, 2, 0], [2, 0, 0], [2, 1, 0]]),
        (6, 6, 3, &[[0, 0, 0], [0, 2, 0], [0, 3, 3], [1, 0, 0], [1, 1, 1]]),
        (6, 7, 3, &[[0, 0, 0], [0, 0, 1], [0, 1, 2], [0, 2, 5], [1, 0, 3]]),
        (7, 6, 3, &[[0, 4, 0], [1, 3, 1], [2, 0, 0], [3, 0, 0]]),
        (7, 7, 3, &[[0, 0, 0], [0, 2, 0], [0, 3, 2], [1, 0, 0], [1, 1, 0], [1, 2, 3], [2, 0, 1]]),
        (7, 8, 3, &[[0, 0, 0], [0, 0, 1], [0, 1, 1], [0, 1, 3], [0, 2, 4], [1, 0, 2], [1, 0, 3], [1, 1, 5]]),
        (7, 9, 3, &[[0, 0, 3], [0, 0, 5], [0, 1, 6], [1, 0, 7]]),
        (8, 7, 3, &[[0, 4, 0], [0, 5, 2], [1, 3, 0], [2, 0, 0], [2, 2, 1], [3, 0, 0]]),
        (8, 8, 3, &[[0, 0, 0], [0, 2, 0], [0, 3, 1], [0, 4, 4], [2, 0, 0], [2, 0, 1], [2, 1, 3]]),
        (8, 9, 3, &[[0, 0, 0], [0, 0, 1], [0, 1, 0], [0, 1, 3], [0, 3, 6], [1, 0, 1], [1, 1, 5], [2, 0, 5]]),
        (8, 10, 3, &[[0, 0, 2], [0, 0, 5], [0, 2, 8], [1, 0, 6], [1, 0, 7]]),
        (9, 8, 3, &[[0, 4, 0], [0, 5, 1], [1, 4, 2], [2, 0, 0], [2, 2, 0], [3, 0, 0], [3, 1, 1]]),
        (9, 9, 3, &[[0, 0, 0], [0, 3, 0], [0, 4, 3], [1, 3, 4], [2, 0, 0], [3, 0, 3]]),
        (
            9,
            10,
            3,
            &[[0, 0, 0], [0, 0, 1], [0, 1, 0], [0, 1, 3], [0, 2, 2], [0, 3, 5], [1, 0, 0], [1, 1, 5], [1, 2, 6], [2, 0, 4], [2, 0, 5]],
        ),
        (9, 11, 3, &[[0, 0, 1], [0, 0, 5], [0, 2, 7], [1, 0, 5], [1, 0, 7], [1, 1, 8]]),
        (10, 9, 3, &[[0, 4, 0], [0, 5, 0], [0, 6, 3], [2, 0, 0], [3, 0, 0], [3, 1, 0], [4, 0, 1]]),
        (
            10,
            10,
            3,
            &[[0, 0, 0], [0, 3, 0], [0, 4, 2], [0, 5, 5], [1, 2, 0], [2, 0, 0], [2, 2, 4], [3, 0, 2], [3, 0, 3]],
        ),
        (
            10,
            11,
            3,
            &[[0, 0, 0], [0, 0, 1], [0, 1, 0], [0, 1, 3], [0, 2, 1], [0, 4, 7], [1, 0, 0], [1, 1, 5], [2, 0, 3], [2, 0, 5], [2, 1, 6]],
        ),
        (
            11,
            10,
            3,
            &[[0, 4, 0], [0, 5, 0], [0, 6, 2], [1, 4, 0], [1, 5, 3], [2, 0, 0], [3, 2, 2], [4, 0, 0], [4, 0, 1]],
        ),
        (
            11,
            11,
            3,
            &[[0, 0, 0], [0, 3, 0], [0, 4, 1], [0, 5, 4], [1, 4, 5], [2, 0, 0], [2, 1, 0], [3, 0, 1], [3, 0, 3], [3, 1, 4]],
        ),
        (
            12,
            11,
            3,
            &[[0, 4, 0], [0, 5, 0], [0, 6, 1], [0, 7, 4], [2, 0, 0], [2, 3, 0], [4, 0, 0], [4, 0, 1], [4, 1, 2]],
        ),
    ];
    let mut out: Vec<_> = rows.iter().map(|(a, b, d, p)| (*a, *b, *d, p.to_vec())).collect();
    // The three parametric rows, instantiated for every order up to 40.
    for k in 4..=40u64 {
        let m3 = 3 * k / 2;
        if k % 2 == 0 {
            out.push((k, m3, 0, vec![[0, 0, m3 as i64]]));
            if k >= 6 {
                let mm = (3 * k - 2) / 2;
                let mi = mm as i64;
                out.push((k, mm, 2, vec![[0, 0, mi - 4], [0, 0, mi - 3], [0, 1, mi - 1]]));
            }
        } else if k >= 5 {
            let mm = (3 * k - 1) / 2;
            out.push((k, mm, 0, vec![[0, 0, mm as i64 - 2]]));
        }
    }
    out
}

fn small_cases() -> Outcome {
    let table = small_table();
    let mut confirmed = 0;
    for (a, b, dim, pts) in &table {
        let p = ns(*a, *b);
        let d = small_case_polytope(p).ok_or_else(|| format!("{p}: no stored row"))?;
        let want: BTreeSet<_> = pts.iter().copied().collect();
        let got: BTreeSet<_> = d.points().into_iter().collect();
        if d.dimension != *dim || want != got {
            return defect(format!("{p}: dim {} points {got:?}", d.dimension));
        }
        if *a <= 10 {
            let oracle: Vec<_> = enumerate_realizable(p).map_err(|e| e.to_string())?.points.into_iter().collect();
            let h = exact_hull(&oracle);
            if h.dimension != *dim || h.vertices.iter().copied().collect::<BTreeSet<_>>() != want {
                return defect(format!("{p}: oracle hull {:?}", h.vertices));
            }
            confirmed += 1;
        }
    }
    Ok(format!("{} rows, {confirmed} confirmed by the oracle", table.len()))
}

/// The closed forms of the reduced Albertson functional per family.
fn albertson_table() -> Vec<(&'static str, Expr)> {
    let six_n_5m = || int(6) * n() - int(5) * m();
    let m2n = || (m() - int(2) * n()).modulo(4);
    let m3 = || m().modulo(3);
    vec![
        ("V1", int(0)),
        ("V2", int(8)),
        ("V3", int(-2)),
        ("V6", int(12) * n() - int(10) * m()),
        ("V7a", six_n_5m() + m2n()),
        ("V7b", six_n_5m() - m2n()),
        ("V7c", six_n_5m() - (int(2) * n() - m()).modulo(4)),
        ("V8c", int(9) * n() - int(8) * m() + n().modulo(2)),
        ("V8d", int(9) * n() - int(8) * m() - int(1)),
        ("V9a", int(12) * m() - int(12) * n() - int(14)),
        ("V9b", int(-2)),
        ("V9c", int(-2)),
        ("V10a", (int(4) * (six_n_5m() - m3())).div(3)),
        ("V10b", (int(4) * (six_n_5m() - m3())).div(3)),
        ("V10c", (int(4) * (six_n_5m() - (int(2) * m()).modulo(3).div(2))).div(3)),
        ("V11a", (int(2) * (int(12) * n() - int(11) * m() + int(2) * m3())).div(3)),
        ("V11b", (int(2) * (int(12) * n() - int(11) * m() + m3())).div(3)),
        ("V11c", (int(2) * (int(12) * n() - int(11) * m() - m3())).div(3)),
        ("V12a", int(12) * n() - int(12) * m() + int(4)),
        ("V12b", int(6) * n() - int(6) * m() + int(2)),
        ("V12c", int(6) * n() - int(6) * m() + int(2)),
    ]
}

fn albertson_tables() -> Outcome {
    let albertson = IndexRegistry::standard().lookup("albertson").unwrap().clone();
    let symbolic = symbolic_vertex_values(&albertson);
    let table = albertson_table();
    if symbolic.len() != table.len() {
        return defect(format!("{} symbolic rows", symbolic.len()));
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut pairs = regime_pairs(300);
    pairs.shuffle(&mut rng);
    let mut v11b_mismatches = 0;
    for p in pairs.iter().take(50) {
        for (id, form) in &table {
            let s = symbolic.iter().find(|s| s.family == *id).ok_or(format!("missing {id}"))?;
            let want = form.eval_at(p.n(), p.m());
            let got = s.exact_at(*p).ok_or("no exact form")?;
            if want == got {
                continue;
            }
            // The tabulated V11b row uses m mod 3 where the coordinates use
            // (2m) mod 3; it is not even an integer unless 3 divides m.
            let corrected = (int(2) * (int(12) * n() - int(11) * m() + (int(2) * m()).modulo(3))).div(3);
            if *id == "V11b" && p.m() % 3 != 0 && corrected.eval_at(p.n(), p.m()) == got {
                v11b_mismatches += 1;
                continue;
            }
            return defect(format!("{id} at {p}: table {want} vs engine {got}"));
        }
        // Numeric agreement with the optimizer's per-vertex evaluation.
        let d = build_polytope(*p).map_err(|e| e.to_string())?;
        for v in &d.vertices {
            let f = 4 * v.point[0] + 4 * v.point[1] - 2 * v.point[2];
            for fam in &v.families {
                let s = symbolic.iter().find(|s| s.family == fam).unwrap();
                if s.value_at(*p) != f as f64 {
                    return defect(format!("{fam} at {p}: {} vs {f}", s.value_at(*p)));
                }
            }
        }
    }

    type Expected = fn(i64, i64) -> (Vec<[i64; 3]>, Vec<[i64; 3]>);
    let regimes: [(&str, fn(&OrderSize) -> bool, Expected); 4] = [
        ("m = n-1", |p| p.m() + 1 == p.n(), |_, _| (vec![[2, 0, 0]], vec![])),
        ("m = n", |p| p.m() == p.n(), |_, _| (vec![[0, 0, 0]], vec![])),
        ("m = n+1", |p| p.m() == p.n() + 1, |_, _| {
            (vec![[0, 0, 1], [0, 1, 3], [1, 1, 5], [2, 0, 5]], vec![[1, 0, 3]])
        }),
        ("n+2 <= m", |p| p.m() >= p.n() + 2 && 2 * p.m() + 3 <= 3 * p.n(), |n, m| {
            (vec![[0, 0, 3 * m - 3 * n - 1], [1, 0, 3 * m - 3 * n + 1]], vec![])
        }),
    ];
    for (name, member, expected) in regimes {
        let mut pool: Vec<_> = regime_pairs(300).into_iter().filter(|p| member(p)).collect();
        pool.shuffle(&mut rng);
        if pool.len() < 20 {
            return defect(format!("only {} pairs in regime {name}", pool.len()));
        }
        for p in pool.iter().take(20) {
            let r = optimize(*p, &albertson, Direction::Min).map_err(|e| e.to_string())?;
            let (vertices, extra) = expected(p.n_i64(), p.m_i64());
            let got: BTreeSet<_> = r.optimal_vertices.iter().map(|v| v.point).collect();
            if got != vertices.iter().copied().collect() {
                return defect(format!("{name} at {p}: minimizers {got:?}"));
            }
            for q in vertices.iter().chain(&extra) {
                if !r.optimal_lattice_points.contains(q) {
                    return defect(format!("{name} at {p}: lattice points miss {q:?}"));
                }
            }
        }
    }
    if v11b_mismatches > 0 {
        return Err(Failure::Known(format!(
            "tabulated V11b form differs at {v11b_mismatches} of 50 pairs (m mod 3 != 0), where it \
             is fractional; the (2m) mod 3 form matches. Other 20 forms and all 4 minimizer regimes match"
        )));
    }
    Ok("21 closed forms at 50 pairs, 4 regimes x 20 pairs".into())
}

fn bound_check() -> Outcome {
    let start = Instant::now();
    let pairs = OrderSize::all_up_to(3, 200);
    let results = Exec::Parallel.map(&pairs, |p| build_polytope(*p).map(|d| (d.vertices.len(), d.facets.len())));
    let mut worst = (0, 0);
    for (p, r) in pairs.iter().zip(results) {
        let (v, f) = r.map_err(|e| format!("{p}: {e}"))?;
        if v > 16 || f > 10 {
            return defect(format!("{p}: {v} vertices, {f} facets"));
        }
        worst = (worst.0.max(v), worst.1.max(f));
    }
    within(Duration::from_secs(120), start, "bound sweep")?;
    let d = build_polytope(ns(14, 13)).map_err(|e| e.to_string())?;
    if (d.vertices.len(), d.facets.len()) != (12, 10) {
        let labels: usize = d.vertices.iter().map(|v| v.families.len()).sum();
        let why = format!(
            "(14, 13): {} distinct vertices carrying {labels} family labels, {} facets",
            d.vertices.len(),
            d.facets.len()
        );
        return Err(if labels == 12 && d.facets.len() == 10 {
            Failure::Known(format!("{why}; the expected 12 counts coincident labels separately"))
        } else {
            Failure::Defect(why)
        });
    }
    Ok(format!(
        "{} pairs, at most {} vertices and {} facets, {:.1?}",
        pairs.len(),
        worst.0,
        worst.1,
        start.elapsed()
    ))
}

fn facet_defining() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0xface7);
    let pool = regime_pairs(150);
    let mut rows = 0;
    for t in facet_triples() {
        let mut fits: Vec<_> = pool.iter().copied().filter(|p| t.condition.holds_at(p.n(), p.m())).collect();
        if fits.is_empty() {
            return defect(format!("{}: no pair satisfies the row condition", t.facet));
        }
        fits.shuffle(&mut rng);
        for p in fits.iter().take(5) {
            let f = evaluate_facet(t.facet, *p).ok_or(format!("unknown facet {}", t.facet))?;
            let mut pts = Vec::new();
            for id in t.vertices {
                let q: Point3 = vertex_family(id).ok_or(format!("unknown family {id}"))?.point(*p);
                let q = q.to_ints().ok_or(format!("{id} at {p} is not integral"))?;
                if !check_int(*p, q).realizable {
                    return defect(format!("{} {id} at {p}: {q:?} not realizable", t.facet));
                }
                if !f.is_tight_int(q) {
                    return defect(format!("{} {id} at {p}: {q:?} not on the facet", t.facet));
                }
                pts.push(q.map(|x| x as i128));
            }
            let u = [0, 1, 2].map(|k| pts[1][k] - pts[0][k]);
            let w = [0, 1, 2].map(|k| pts[2][k] - pts[0][k]);
            let cross = [u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]];
            if cross == [0, 0, 0] {
                return defect(format!("{} at {p}: points are affinely dependent", t.facet));
            }
        }
        rows += 1;
    }
    Ok(format!("{rows} rows"))
}

fn witness_round_trip() -> Outcome {
    let start = Instant::now();
    let mut pairs = OrderSize::all_up_to(3, 20);
    for k in [30, 40, 50, 60] {
        pairs.extend(OrderSize::all_with_order(k));
    }
    let jobs: Vec<(OrderSize, [i64; 3])> = pairs
        .iter()
        .flat_map(|p| build_polytope(*p).unwrap().points().into_iter().map(move |q| (*p, q)))
        .collect();
    let failures: Vec<String> = Exec::Parallel
        .map(&jobs, |(p, q)| match build_witness_int(*p, *q) {
            Ok(g) if g.point() == *q && g.order() as u64 == p.n() && g.size() as u64 == p.m() => None,
            Ok(g) => Some(format!("{p} {q:?}: recount {:?}", g.point())),
            Err(e) => Some(format!("{p} {q:?}: {e}")),
        })
        .into_iter()
        .flatten()
        .collect();
    if let Some(f) = failures.first() {
        return defect(format!("{} failures, first {f}", failures.len()));
    }
    within(Duration::from_secs(300), start, "witness sweep")?;
    Ok(format!("{} vertices in {:.1?}", jobs.len(), start.elapsed()))
}

fn realizability_soundness() -> Outcome {
    let mut pairs = 0;
    for p in OrderSize::all_up_to(3, 10) {
        let oracle = enumerate_realizable(p).map_err(|e| e.to_string())?.points;
        let top = 3 * p.n_i64();
        let mut accepted = BTreeSet::new();
        for a in 0..=top {
            for b in 0..=top {
                for c in 0..=top {
                    if check_int(p, [a, b, c]).realizable {
                        accepted.insert([a, b, c]);
                    }
                }
            }
        }
        if accepted != oracle {
            let extra: Vec<_> = accepted.difference(&oracle).collect();
            let missing: Vec<_> = oracle.difference(&accepted).collect();
            return defect(format!("{p}: accepted but not realized {extra:?}, realized but rejected {missing:?}"));
        }
        pairs += 1;
    }
    Ok(format!("{pairs} pairs"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("oracle equivalence for n <= 10", oracle_equivalence),
        ("worked example at (13, 15)", worked_example),
        ("vertex families at (15, 18)", lemma_case),
        ("degenerate catalog", degenerate_catalog),
        ("small-case table", small_cases),
        ("Albertson closed forms and minimizers", albertson_tables),
        ("vertex and facet bounds for n <= 200", bound_check),
        ("facet-defining point triples", facet_defining),
        ("witness round trip", witness_round_trip),
        ("realizability soundness for n <= 10", realizability_soundness),
    ];
    let mut defects = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(Failure::Defect(format!("panicked: {msg}")))
        });
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(Failure::Known(why)) => println!("FAIL {:>2} {name}: {why} [known deviation]", i + 1),
            Err(Failure::Defect(why)) => {
                defects += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    if defects > 0 {
        std::process::exit(1);
    }
}
