//! Stored descriptions for the pairs outside the general regime: the
//! degenerate (dimension < 3) polytopes and the small full-dimensional ones.

use crate::facets::{evaluate_facet, facet_families, FacetInequality, LinearEquality};
use crate::model::OrderSize;

/// A stored polytope for one small or degenerate pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallCase {
    pub order_size: OrderSize,
    pub dimension: u8,
    /// Extreme points, lexicographically sorted.
    pub points: Vec<[i64; 3]>,
    pub equalities: Vec<LinearEquality>,
    pub facets: Vec<FacetInequality>,
    /// Polytope class name for the full-dimensional rows (e.g. "P76").
    pub class: Option<&'static str>,
}

/// Where a stored case's facet list comes from.
enum Facets {
    /// Explicit in-plane or in-line description.
    Degenerate,
    /// Named catalog families (the small-case facet table).
    Listed(&'static [&'static str]),
    /// Whatever the general activity conditions switch on at this pair.
    Activity,
}

struct Row {
    n: u64,
    m: u64,
    dim: u8,
    points: &'static [[i64; 3]],
    class: Option<&'static str>,
    facets: Facets,
}

const fn row(
    n: u64,
    m: u64,
    dim: u8,
    points: &'static [[i64; 3]],
    class: Option<&'static str>,
    facets: Facets,
) -> Row {
    Row {
        n,
        m,
        dim,
        points,
        class,
        facets,
    }
}

use Facets::{Activity, Degenerate, Listed};

static ROWS: [Row; 29] = [
    row(3, 2, 0, &[[2, 0, 0]], None, Degenerate),
    row(3, 3, 0, &[[0, 0, 0]], None, Degenerate),
    row(4, 3, 1, &[[0, 3, 0], [2, 0, 0]], None, Degenerate),
    row(4, 4, 1, &[[0, 0, 0], [0, 1, 0]], None, Degenerate),
    row(4, 5, 0, &[[0, 0, 1]], None, Degenerate),
    row(5, 4, 1, &[[1, 2, 0], [2, 0, 0]], None, Degenerate),
    row(
        5,
        5,
        3,
        &[[0, 0, 0], [0, 1, 0], [0, 2, 1], [1, 0, 0]],
        Some("P76"),
        Listed(&["F2", "F5", "F11", "F22"]),
    ),
    row(5, 6, 2, &[[0, 0, 0], [0, 0, 1], [0, 1, 3]], None, Degenerate),
    row(
        6,
        5,
        3,
        &[[0, 4, 1], [1, 2, 0], [2, 0, 0], [2, 1, 0]],
        Some("P77"),
        Listed(&["F5", "F11", "F15", "F17"]),
    ),
    row(
        6,
        6,
        3,
        &[[0, 0, 0], [0, 2, 0], [0, 3, 3], [1, 0, 0], [1, 1, 1]],
        Some("P78"),
        Listed(&["F1", "F2", "F5", "F14", "F23"]),
    ),
    row(
        6,
        7,
        3,
        &[[0, 0, 0], [0, 0, 1], [0, 1, 2], [0, 2, 5], [1, 0, 3]],
        Some("P79"),
        Listed(&["F1", "F2", "F3", "F7", "F12"]),
    ),
    row(
        7,
        6,
        3,
        &[[0, 4, 0], [1, 3, 1], [2, 0, 0], [3, 0, 0]],
        Some("P80"),
        Listed(&["F1", "F5", "F6", "F15"]),
    ),
    row(
        7,
        7,
        3,
        &[
            [0, 0, 0],
            [0, 2, 0],
            [0, 3, 2],
            [1, 0, 0],
            [1, 1, 0],
            [1, 2, 3],
            [2, 0, 1],
        ],
        Some("P81"),
        Listed(&["F1", "F2", "F3", "F5", "F10", "F13", "F18", "F24"]),
    ),
    row(
        7,
        8,
        3,
        &[
            [0, 0, 0],
            [0, 0, 1],
            [0, 1, 1],
            [0, 1, 3],
            [0, 2, 4],
            [1, 0, 2],
            [1, 0, 3],
            [1, 1, 5],
        ],
        Some("P82"),
        Listed(&["F1", "F2", "F3", "F6", "F9", "F14", "F16"]),
    ),
    row(
        7,
        9,
        3,
        &[[0, 0, 3], [0, 0, 5], [0, 1, 6], [1, 0, 7]],
        Some("P73"),
        Activity,
    ),
    row(
        8,
        7,
        3,
        &[
            [0, 4, 0],
            [0, 5, 2],
            [1, 3, 0],
            [2, 0, 0],
            [2, 2, 1],
            [3, 0, 0],
        ],
        Some("P83"),
        Listed(&["F1", "F5", "F10", "F12", "F15", "F17", "F20"]),
    ),
    row(
        8,
        8,
        3,
        &[
            [0, 0, 0],
            [0, 2, 0],
            [0, 3, 1],
            [0, 4, 4],
            [2, 0, 0],
            [2, 0, 1],
            [2, 1, 3],
        ],
        Some("P84"),
        Listed(&["F1", "F2", "F3", "F4", "F5", "F9", "F11", "F25"]),
    ),
    row(
        8,
        9,
        3,
        &[
            [0, 0, 0],
            [0, 0, 1],
            [0, 1, 0],
            [0, 1, 3],
            [0, 3, 6],
            [1, 0, 1],
            [1, 1, 5],
            [2, 0, 5],
        ],
        Some("P85"),
        Listed(&["F1", "F2", "F3", "F4", "F7", "F13", "F16"]),
    ),
    row(
        8,
        10,
        3,
        &[[0, 0, 2], [0, 0, 5], [0, 2, 8], [1, 0, 6], [1, 0, 7]],
        Some("P74"),
        Activity,
    ),
    row(
        9,
        8,
        3,
        &[
            [0, 4, 0],
            [0, 5, 1],
            [1, 4, 2],
            [2, 0, 0],
            [2, 2, 0],
            [3, 0, 0],
            [3, 1, 1],
        ],
        Some("P86"),
        Listed(&["F1", "F5", "F6", "F11", "F14", "F15", "F19"]),
    ),
    row(
        9,
        9,
        3,
        &[
            [0, 0, 0],
            [0, 3, 0],
            [0, 4, 3],
            [1, 3, 4],
            [2, 0, 0],
            [3, 0, 3],
        ],
        Some("P22"),
        Activity,
    ),
    row(
        9,
        10,
        3,
        &[
            [0, 0, 0],
            [0, 0, 1],
            [0, 1, 0],
            [0, 1, 3],
            [0, 2, 2],
            [0, 3, 5],
            [1, 0, 0],
            [1, 1, 5],
            [1, 2, 6],
            [2, 0, 4],
            [2, 0, 5],
        ],
        Some("P34"),
        Activity,
    ),
    row(
        9,
        11,
        3,
        &[
            [0, 0, 1],
            [0, 0, 5],
            [0, 2, 7],
            [1, 0, 5],
            [1, 0, 7],
            [1, 1, 8],
        ],
        Some("P75"),
        Activity,
    ),
    row(
        10,
        9,
        3,
        &[
            [0, 4, 0],
            [0, 5, 0],
            [0, 6, 3],
            [2, 0, 0],
            [3, 0, 0],
            [3, 1, 0],
            [4, 0, 1],
        ],
        Some("P11"),
        Activity,
    ),
    row(
        10,
        10,
        3,
        &[
            [0, 0, 0],
            [0, 3, 0],
            [0, 4, 2],
            [0, 5, 5],
            [1, 2, 0],
            [2, 0, 0],
            [2, 2, 4],
            [3, 0, 2],
            [3, 0, 3],
        ],
        Some("P23"),
        Activity,
    ),
    row(
        10,
        11,
        3,
        &[
            [0, 0, 0],
            [0, 0, 1],
            [0, 1, 0],
            [0, 1, 3],
            [0, 2, 1],
            [0, 4, 7],
            [1, 0, 0],
            [1, 1, 5],
            [2, 0, 3],
            [2, 0, 5],
            [2, 1, 6],
        ],
        Some("P35"),
        Activity,
    ),
    row(
        11,
        10,
        3,
        &[
            [0, 4, 0],
            [0, 5, 0],
            [0, 6, 2],
            [1, 4, 0],
            [1, 5, 3],
            [2, 0, 0],
            [3, 2, 2],
            [4, 0, 0],
            [4, 0, 1],
        ],
        Some("P12"),
        Activity,
    ),
    row(
        11,
        11,
        3,
        &[
            [0, 0, 0],
            [0, 3, 0],
            [0, 4, 1],
            [0, 5, 4],
            [1, 4, 5],
            [2, 0, 0],
            [2, 1, 0],
            [3, 0, 1],
            [3, 0, 3],
            [3, 1, 4],
        ],
        Some("P24"),
        Activity,
    ),
    row(
        12,
        11,
        3,
        &[
            [0, 4, 0],
            [0, 5, 0],
            [0, 6, 1],
            [0, 7, 4],
            [2, 0, 0],
            [2, 3, 0],
            [4, 0, 0],
            [4, 0, 1],
            [4, 1, 2],
        ],
        Some("P1"),
        Activity,
    ),
];

/// Number of explicit rows; the three parametric families come on top.
pub const EXPLICIT_ROWS: usize = 29;

fn eqn(a: [i64; 3], rhs: i64) -> LinearEquality {
    LinearEquality::from_ints(a, rhs)
}

fn side(id: &str, a: [i64; 3], rhs: i64) -> FacetInequality {
    FacetInequality::from_ints(id, a, rhs)
}

/// The affine hull and relative facets of a point or segment or triangle.
fn degenerate_system(ns: OrderSize, points: &[[i64; 3]]) -> (Vec<LinearEquality>, Vec<FacetInequality>) {
    let (n, m) = (ns.n_i64(), ns.m_i64());
    match points.len() {
        1 => {
            let [a, b, c] = points[0];
            (
                vec![eqn([1, 0, 0], a), eqn([0, 1, 0], b), eqn([0, 0, 1], c)],
                Vec::new(),
            )
        }
        2 => match (n, m) {
            (4, 3) => (
                vec![eqn([0, 0, 1], 0), eqn([3, 2, 0], 6)],
                vec![side("S1", [1, 0, 0], 0), side("S2", [-1, 0, 0], -2)],
            ),
            (4, 4) => (
                vec![eqn([1, 0, 0], 0), eqn([0, 0, 1], 0)],
                vec![side("S1", [0, 1, 0], 0), side("S2", [0, -1, 0], -1)],
            ),
            (5, 4) => (
                vec![eqn([0, 0, 1], 0), eqn([2, 1, 0], 4)],
                vec![side("S1", [0, 1, 0], 0), side("S2", [0, -1, 0], -2)],
            ),
            _ => unreachable!("no stored segment for ({n}, {m})"),
        },
        // Every two-dimensional case is the same triangle in the plane m12 = 0.
        3 => (
            vec![eqn([1, 0, 0], 0)],
            vec![
                side("S1", [0, 1, 0], 0),
                side("S2", [0, -3, 1], 5 * m - 6 * n),
                side("S3", [0, 2, -1], 6 * n - 5 * m - 1),
            ],
        ),
        k => unreachable!("degenerate case with {k} points"),
    }
}

fn activity_facets(ns: OrderSize) -> Vec<FacetInequality> {
    facet_families()
        .iter()
        .filter(|f| f.is_active(ns))
        .map(|f| f.evaluate(ns))
        .collect()
}

fn from_row(r: &Row) -> SmallCase {
    let ns = OrderSize::new(r.n, r.m).expect("stored rows are valid");
    let mut points = r.points.to_vec();
    points.sort();
    let (equalities, facets) = match &r.facets {
        Degenerate => degenerate_system(ns, &points),
        Listed(ids) => (
            Vec::new(),
            ids.iter()
                .map(|id| evaluate_facet(id, ns).expect("listed facets exist"))
                .collect(),
        ),
        Activity => (Vec::new(), activity_facets(ns)),
    };
    SmallCase {
        order_size: ns,
        dimension: r.dim,
        points,
        equalities,
        facets,
        class: r.class,
    }
}

fn parametric(ns: OrderSize) -> Option<SmallCase> {
    let (n, m) = (ns.n(), ns.m());
    let mi = m as i64;
    let points: Vec<[i64; 3]> = if n % 2 == 0 && n >= 4 && 2 * m == 3 * n {
        vec![[0, 0, mi]]
    } else if n % 2 == 1 && n >= 5 && 2 * m + 1 == 3 * n {
        vec![[0, 0, mi - 2]]
    } else if n % 2 == 0 && n >= 6 && 2 * m + 2 == 3 * n {
        vec![[0, 0, mi - 4], [0, 0, mi - 3], [0, 1, mi - 1]]
    } else {
        return None;
    };
    let (equalities, facets) = degenerate_system(ns, &points);
    Some(SmallCase {
        order_size: ns,
        dimension: if points.len() == 1 { 0 } else { 2 },
        points,
        equalities,
        facets,
        class: None,
    })
}

/// The stored polytope for `(n, m)`, or `None` inside the general regime.
pub fn small_case(ns: OrderSize) -> Option<SmallCase> {
    if ns.in_general_regime() {
        return None;
    }
    if let Some(r) = ROWS.iter().find(|r| r.n == ns.n() && r.m == ns.m()) {
        return Some(from_row(r));
    }
    parametric(ns)
}

/// All explicit rows, in table order.
pub fn explicit_rows() -> Vec<SmallCase> {
    ROWS.iter().map(from_row).collect()
}
