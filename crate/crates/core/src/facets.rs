//! The facet inequality families and their activity conditions.
//!
//! Every family is a linear inequality `a12·m12 + a13·m13 + a33·m33 >= rhs`
//! whose coefficients are expressions in `(n, m)`. A family is *active* at
//! `(n, m)` when its condition holds; inside the general regime the active
//! families are exactly the facets of the polytope.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::{eq, ge, int, le, m, n, ne, Cond, Expr};
use crate::model::{OrderSize, Point3};

/// A facet family with symbolic coefficients.
#[derive(Clone, Debug)]
pub struct FacetFamily {
    pub id: &'static str,
    pub a12: Expr,
    pub a13: Expr,
    pub a33: Expr,
    pub rhs: Expr,
    pub condition: Cond,
}

impl FacetFamily {
    pub fn is_active(&self, ns: OrderSize) -> bool {
        self.condition.holds(&ns.n_big(), &ns.m_big())
    }

    /// Substitutes `(n, m)` into the coefficient expressions.
    pub fn evaluate(&self, ns: OrderSize) -> FacetInequality {
        let (n, m) = (ns.n_big(), ns.m_big());
        let ev = |e: &Expr| {
            e.eval_int(&n, &m)
                .unwrap_or_else(|| panic!("facet {} has a fractional coefficient", self.id))
        };
        FacetInequality {
            id: self.id.to_string(),
            a12: ev(&self.a12),
            a13: ev(&self.a13),
            a33: ev(&self.a33),
            rhs: ev(&self.rhs),
        }
    }
}

/// An evaluated inequality `a12·m12 + a13·m13 + a33·m33 >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FacetInequality {
    pub id: String,
    #[serde(with = "crate::numser")]
    pub a12: BigInt,
    #[serde(with = "crate::numser")]
    pub a13: BigInt,
    #[serde(with = "crate::numser")]
    pub a33: BigInt,
    #[serde(with = "crate::numser")]
    pub rhs: BigInt,
}

impl FacetInequality {
    pub fn from_ints(id: &str, a: [i64; 3], rhs: i64) -> Self {
        FacetInequality {
            id: id.to_string(),
            a12: a[0].into(),
            a13: a[1].into(),
            a33: a[2].into(),
            rhs: rhs.into(),
        }
    }

    pub fn normal(&self) -> [&BigInt; 3] {
        [&self.a12, &self.a13, &self.a33]
    }

    pub fn lhs(&self, p: &Point3) -> BigRational {
        let q = |b: &BigInt| BigRational::from_integer(b.clone());
        q(&self.a12) * &p.m12 + q(&self.a13) * &p.m13 + q(&self.a33) * &p.m33
    }

    pub fn lhs_int(&self, p: [i64; 3]) -> BigInt {
        &self.a12 * p[0] + &self.a13 * p[1] + &self.a33 * p[2]
    }

    /// `lhs - rhs`; non-negative exactly when the point satisfies the facet.
    pub fn slack(&self, p: &Point3) -> BigRational {
        self.lhs(p) - BigRational::from_integer(self.rhs.clone())
    }

    pub fn is_satisfied(&self, p: &Point3) -> bool {
        self.slack(p) >= BigRational::zero()
    }

    pub fn is_tight(&self, p: &Point3) -> bool {
        self.slack(p).is_zero()
    }

    pub fn is_satisfied_int(&self, p: [i64; 3]) -> bool {
        self.lhs_int(p) >= self.rhs
    }

    pub fn is_tight_int(&self, p: [i64; 3]) -> bool {
        self.lhs_int(p) == self.rhs
    }
}

fn term(f: &mut fmt::Formatter<'_>, first: &mut bool, c: &BigInt, var: &str) -> fmt::Result {
    if c.is_zero() {
        return Ok(());
    }
    let neg = c.sign() == num_bigint::Sign::Minus;
    let mag = if neg { -c } else { c.clone() };
    match (*first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    if mag != BigInt::from(1) {
        write!(f, "{mag}")?;
    }
    f.write_str(var)?;
    *first = false;
    Ok(())
}

impl fmt::Display for FacetInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        term(f, &mut first, &self.a12, "m12")?;
        term(f, &mut first, &self.a13, "m13")?;
        term(f, &mut first, &self.a33, "m33")?;
        if first {
            f.write_str("0")?;
        }
        write!(f, " >= {}", self.rhs)
    }
}

/// A linear equality `a12·m12 + a13·m13 + a33·m33 = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearEquality {
    #[serde(with = "crate::numser")]
    pub a12: BigInt,
    #[serde(with = "crate::numser")]
    pub a13: BigInt,
    #[serde(with = "crate::numser")]
    pub a33: BigInt,
    #[serde(with = "crate::numser")]
    pub rhs: BigInt,
}

impl LinearEquality {
    pub fn from_ints(a: [i64; 3], rhs: i64) -> Self {
        LinearEquality {
            a12: a[0].into(),
            a13: a[1].into(),
            a33: a[2].into(),
            rhs: rhs.into(),
        }
    }

    pub fn holds(&self, p: &Point3) -> bool {
        let q = |b: &BigInt| BigRational::from_integer(b.clone());
        q(&self.a12) * &p.m12 + q(&self.a13) * &p.m13 + q(&self.a33) * &p.m33 == q(&self.rhs)
    }

    pub fn holds_int(&self, p: [i64; 3]) -> bool {
        &self.a12 * p[0] + &self.a13 * p[1] + &self.a33 * p[2] == self.rhs
    }
}

impl fmt::Display for LinearEquality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let as_facet = FacetInequality {
            id: String::new(),
            a12: self.a12.clone(),
            a13: self.a13.clone(),
            a33: self.a33.clone(),
            rhs: self.rhs.clone(),
        };
        let s = as_facet.to_string();
        write!(f, "{}", s.replacen(" >= ", " = ", 1))
    }
}

fn r3() -> Expr {
    m().modulo(3)
}

fn r4() -> Expr {
    (m() - 2 * n()).modulo(4)
}

fn n_odd() -> Cond {
    eq(n().modulo(2), int(1))
}

fn n_even() -> Cond {
    eq(n().modulo(2), int(0))
}

fn fam(id: &'static str, a: [Expr; 3], rhs: Expr, condition: Cond) -> FacetFamily {
    let [a12, a13, a33] = a;
    FacetFamily {
        id,
        a12,
        a13,
        a33,
        rhs,
        condition,
    }
}

fn build_catalog() -> Vec<FacetFamily> {
    let k = int;
    let d = 3 * n() - 2 * m();
    vec![
        fam("F2", [k(1), k(0), k(0)], k(0), Cond::Always),
        fam("F3", [k(0), k(1), k(0)], k(0), Cond::Always),
        fam(
            "F5",
            [k(0), k(0), k(1)],
            k(0),
            le(m(), (6 * n() - 4).div(5)),
        ),
        fam("F9", [k(-3), k(0), k(0)], 2 * m() - 3 * n() + 2, eq(r3(), k(2))),
        fam("F8", [k(-6), k(-3), k(0)], 4 * m() - 6 * n() + 2, eq(r3(), k(1))),
        fam("F1", [k(-4), k(-3), k(1)], 5 * m() - 6 * n(), Cond::Always),
        fam(
            "F11",
            [k(-3), k(-3), k(3)],
            5 * m() - 6 * n() + 2,
            le(m(), (6 * n() - 5).div(5)).and(eq(r3(), k(2))),
        ),
        fam(
            "F14",
            [k(-4), k(-2), k(2)],
            5 * m() - 6 * n() + 2,
            le(m(), (6 * n() - 2).div(5)).and(eq(r4(), k(2))),
        ),
        fam(
            "F13",
            [k(-4), k(0), k(4)],
            5 * m() - 6 * n() + 3,
            le(m(), (6 * n() - 3).div(5)).and(eq(r4(), k(1))),
        ),
        fam(
            "F12",
            [k(-12), k(-8), k(4)],
            15 * m() - 18 * n() + 3,
            le(m(), (6 * n() - 1).div(5)).and(eq(r4(), k(3))),
        ),
        fam(
            "F10",
            [k(-6), k(-6), k(3)],
            10 * m() - 12 * n() + 2,
            le(m(), (6 * n() - 4).div(5)).and(eq(r3(), k(1))),
        ),
        fam(
            "F4",
            [k(1), k(1), k(-1)],
            3 * n() - 3 * m(),
            le(n(), m()).and(le(m(), (3 * n() - 6).div(2))),
        ),
        fam(
            "F6",
            [k(2), k(1), k(-1)],
            3 * n() - 3 * m() + 1,
            ne(m(), n()).and(n_odd()),
        ),
        fam(
            "F18",
            [2 * (n() - 2), n() - 3, -(n() - 1)],
            k(0),
            eq(m(), n()).and(n_odd()),
        ),
        fam(
            "F7",
            [2 * (n() - 4), n() - 2, -(n() - 4)],
            -2 * n() + 10,
            eq(m(), n() + 1).and(n_even()),
        ),
        // Stored with m23 eliminated, which introduces a quadratic right-hand side.
        fam(
            "F7bis",
            [2 * d.clone(), d.clone() + 2, -d],
            6 * (m() * m()) + 9 * (n() * n()) - 15 * (n() * m()) - 2 * m() + 3 * n(),
            ge(m(), n() + 2).and(n_even()),
        ),
        fam(
            "F17",
            [2 * (n() - 4), n() - 4, -(n() - 6)],
            4 * n() - 16,
            eq(m(), n() - 1).and(n_even()),
        ),
        fam(
            "F19",
            [n() - 9, n() - 6, -(n() - 6)],
            2 * n() - 18,
            eq(m(), n() - 1).and(eq(n().modulo(3), k(0))),
        ),
        fam(
            "F20",
            [2 * n() - 16, 2 * n() - 13, -(2 * n() - 10)],
            4 * n() - 32,
            eq(m(), n() - 1).and(eq(n().modulo(3), k(2))),
        ),
        fam(
            "F15",
            [n() - 7, n() - 6, -(n() - 4)],
            2 * n() - 14,
            eq(m(), n() - 1),
        ),
        fam("F16", [k(2), k(2), k(-1)], k(-1), eq(m(), n() + 1)),
        // The last four only occur in the stored small full-dimensional cases.
        fam("F22", [k(0), k(2), k(-4)], k(0), Cond::Never),
        fam("F23", [k(0), k(4), k(-4)], k(0), Cond::Never),
        fam("F24", [k(2), k(5), k(-4)], k(0), Cond::Never),
        fam("F25", [k(2), k(8), k(-4)], k(0), Cond::Never),
    ]
}

/// All 25 families, in catalog order.
pub fn facet_families() -> &'static [FacetFamily] {
    static CATALOG: OnceLock<Vec<FacetFamily>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

pub fn facet_family(id: &str) -> Option<&'static FacetFamily> {
    facet_families().iter().find(|f| f.id == id)
}

/// Facets active at `(n, m)`, in catalog order.
pub fn active_facets(ns: OrderSize) -> Result<Vec<FacetInequality>> {
    if !ns.in_general_regime() {
        return Err(Error::OutOfRegime {
            n: ns.n(),
            m: ns.m(),
        });
    }
    Ok(facet_families()
        .iter()
        .filter(|f| f.is_active(ns))
        .map(|f| f.evaluate(ns))
        .collect())
}

/// Evaluates a family regardless of its activity condition.
pub fn evaluate_facet(id: &str, ns: OrderSize) -> Option<FacetInequality> {
    facet_family(id).map(|f| f.evaluate(ns))
}

/// The F7bis inequality in its `m23` form:
/// `(3n-2m)(m12+m23) + 4m13 >= 6n-4m`, returned as `lhs - rhs`.
pub fn f7bis_m23_slack(ns: OrderSize, p: [i64; 3]) -> i128 {
    let (n, m) = (ns.n() as i128, ns.m() as i128);
    let [m12, m13, m33] = p.map(|v| v as i128);
    let m23 = 6 * m - 6 * n + 3 * m12 + 2 * m13 - 2 * m33;
    (3 * n - 2 * m) * (m12 + m23) + 4 * m13 - (6 * n - 4 * m)
}

/// One row of the facet-defining table: three catalog vertices that are
/// tight on `facet` whenever `condition` holds.
#[derive(Clone, Debug)]
pub struct FacetTriple {
    pub facet: &'static str,
    pub vertices: [&'static str; 3],
    pub condition: Cond,
}

fn triple(facet: &'static str, vertices: [&'static str; 3], condition: Cond) -> FacetTriple {
    FacetTriple {
        facet,
        vertices,
        condition,
    }
}

fn build_triples() -> Vec<FacetTriple> {
    let k = int;
    let six_n = |c: i64| (6 * n() + c).div(5);
    let three_n = |c: i64| (3 * n() + c).div(2);
    let r4_is = |v: i64| eq(r4(), k(v));
    let r3_is = |v: i64| eq(r3(), k(v));
    let f4_range = |hi: i64| le(n() + 2, m()).and(le(m(), three_n(hi)));
    vec![
        triple("F2", ["V6", "V8c", "V12b"], le(six_n(1), m())),
        triple("F2", ["V1", "V8c", "V10c"], le(n(), m()).and(le(m(), six_n(0)))),
        triple("F2", ["V8c", "V10a", "V12a"], eq(n() - 1, m())),
        triple("F3", ["V6", "V11a", "V12b"], le(six_n(1), m())),
        triple("F3", ["V1", "V11a", "V12b"], le(six_n(-3), m()).and(le(m(), six_n(0)))),
        triple("F3", ["V1", "V7c", "V11a"], le(n(), m()).and(le(m(), six_n(-4)))),
        triple("F3", ["V2", "V7c", "V11c"], eq(n() - 1, m())),
        triple("F5", ["V1", "V7c", "V10a"], le(n(), m()).and(le(m(), six_n(-4)))),
        triple("F5", ["V2", "V7c", "V10b"], eq(n() - 1, m())),
        triple("F9", ["V11a", "V11b", "V11c"], r3_is(2)),
        triple("F8", ["V11a", "V11b", "V11c"], r3_is(1)),
        triple("F1", ["V6", "V8c", "V11a"], le(six_n(3), m())),
        triple("F1", ["V8c", "V10c", "V11a"], le(m(), six_n(2))),
        triple("F11", ["V7c", "V10a", "V10c"], eq(m(), six_n(-5))),
        triple("F11", ["V10a", "V10b", "V10c"], le(m(), six_n(-8)).and(r3_is(2))),
        triple("F14", ["V7b", "V10a", "V10c"], eq(m(), six_n(-2))),
        triple("F14", ["V7a", "V7b", "V7c"], le(m(), six_n(-6)).and(r4_is(2))),
        triple("F13", ["V7a", "V7b", "V7c"], le(m(), six_n(-3)).and(r4_is(1))),
        triple(
            "F12",
            ["V7b", "V7c", "V10c"],
            eq(m(), six_n(-5)).or(eq(m(), six_n(-1))),
        ),
        triple("F12", ["V7a", "V7b", "V7c"], le(m(), six_n(-9)).and(r4_is(3))),
        triple("F10", ["V10a", "V10b", "V10c"], le(m(), six_n(-4)).and(r3_is(1))),
        triple("F4", ["V11b", "V11c", "V12c"], f4_range(-6).and(ne(r3(), k(0)))),
        triple(
            "F4",
            ["V8c", "V11a", "V12c"],
            f4_range(-6).and(r3_is(0)).and(n_even()),
        ),
        triple(
            "F4",
            ["V8d", "V11a", "V12c"],
            f4_range(-7).and(r3_is(0)).and(n_odd()),
        ),
        triple("F4", ["V8c", "V9a", "V11b"], eq(n() + 1, m()).and(n_even())),
        triple("F4", ["V8d", "V9a", "V11b"], eq(n() + 1, m()).and(n_odd())),
        triple(
            "F4",
            ["V1", "V11b", "V11c"],
            eq(n(), m()).and(ne(n().modulo(3), k(0))),
        ),
        triple(
            "F4",
            ["V1", "V8c", "V11a"],
            eq(n(), m()).and(eq(n().modulo(6), k(0))),
        ),
        triple(
            "F4",
            ["V1", "V8d", "V11a"],
            eq(n(), m()).and(eq(n().modulo(6), k(3))),
        ),
        triple(
            "F6",
            ["V8c", "V8d", "V12b"],
            le(n() + 2, m()).and(le(m(), three_n(-3))).and(n_odd()),
        ),
        triple("F6", ["V8c", "V8d", "V9c"], eq(n() + 1, m()).and(n_odd())),
        triple("F6", ["V2", "V8c", "V8d"], eq(n() - 1, m()).and(n_odd())),
        triple("F18", ["V1", "V8c", "V8d"], eq(n(), m()).and(n_odd())),
        triple("F7", ["V8c", "V9a", "V9c"], eq(n() + 1, m()).and(n_even())),
        triple("F7bis", ["V8c", "V12b", "V12c"], le(n() + 2, m()).and(n_even())),
        triple("F17", ["V2", "V8c", "V12a"], eq(n() - 1, m()).and(n_even())),
        triple(
            "F19",
            ["V2", "V11b", "V11c"],
            eq(n() - 1, m()).and(eq(n().modulo(3), k(0))),
        ),
        triple(
            "F20",
            ["V2", "V11b", "V11c"],
            eq(n() - 1, m()).and(eq(n().modulo(3), k(2))),
        ),
        triple("F15", ["V2", "V8d", "V11b"], eq(n() - 1, m()).and(n_odd())),
        triple("F15", ["V2", "V8c", "V11b"], eq(n() - 1, m()).and(n_even())),
        triple("F16", ["V9a", "V9b", "V9c"], eq(n() + 1, m())),
    ]
}

/// The facet-defining triples, one entry per table row.
pub fn facet_triples() -> &'static [FacetTriple] {
    static TRIPLES: OnceLock<Vec<FacetTriple>> = OnceLock::new();
    TRIPLES.get_or_init(build_triples)
}
