use chempoly::oracle::{enumerate_realizable, exact_hull};
use chempoly::polytope::build_polytope;
use chempoly::OrderSize;

#[test]
fn engine_builds_every_pair_up_to_order_150() {
    let mut failures = Vec::new();
    for ns in OrderSize::all_up_to(3, 150) {
        if let Err(e) = build_polytope(ns) {
            failures.push(format!("{ns}: {e}"));
        }
    }
    assert!(failures.is_empty(), "{} failures:\n{}", failures.len(), failures.join("\n"));
}

#[test]
fn engine_matches_oracle_hulls_up_to_order_10() {
    let mut failures = Vec::new();
    for ns in OrderSize::all_up_to(3, 10) {
        let d = build_polytope(ns).unwrap();
        let r = enumerate_realizable(ns).unwrap();
        let pts: Vec<_> = r.points.iter().copied().collect();
        let h = exact_hull(&pts);
        if h.vertices != d.points() || h.dimension != d.dimension {
            failures.push(format!("{ns}: oracle dim {} {:?} vs engine dim {} {:?}", h.dimension, h.vertices, d.dimension, d.points()));
        }
        for p in &pts {
            if !d.contains(*p) {
                failures.push(format!("{ns}: realizable {p:?} violates description"));
            }
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
#[ignore = "enumerates about 25k graphs; run with --ignored"]
fn engine_matches_oracle_hulls_at_orders_11_and_12() {
    use chempoly::oracle::{enumerate_realizable_with, HARD_CAP};
    let mut failures = Vec::new();
    for ns in OrderSize::all_up_to(11, 12) {
        let d = build_polytope(ns).unwrap();
        let r = enumerate_realizable_with(ns, HARD_CAP, chempoly::Exec::Parallel).unwrap();
        let pts: Vec<_> = r.points.iter().copied().collect();
        let h = exact_hull(&pts);
        if h.vertices != d.points() {
            failures.push(format!("{ns}: oracle {:?} vs engine {:?}", h.vertices, d.points()));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}
