//! Shared domain types and the counting identities that tie the edge-type
//! triple `(m12, m13, m33)` to the full edge-type vector and degree counts.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A valid pair (order, size) of a chemical graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawOrderSize")]
pub struct OrderSize {
    n: u64,
    m: u64,
}

#[derive(Deserialize)]
struct RawOrderSize {
    n: u64,
    m: u64,
}

impl TryFrom<RawOrderSize> for OrderSize {
    type Error = Error;
    fn try_from(raw: RawOrderSize) -> Result<Self> {
        OrderSize::new(raw.n, raw.m)
    }
}

impl OrderSize {
    pub fn new(n: u64, m: u64) -> Result<Self> {
        let max_m = Self::max_size(n);
        if n < 3 || m + 1 < n || m > max_m {
            return Err(Error::InvalidOrderSize { n, m, max_m });
        }
        Ok(OrderSize { n, m })
    }

    /// Largest admissible size for order `n`: min(⌊3n/2⌋, n(n-1)/2).
    pub fn max_size(n: u64) -> u64 {
        (3 * n / 2).min(n * n.saturating_sub(1) / 2)
    }

    pub fn n(self) -> u64 {
        self.n
    }

    pub fn m(self) -> u64 {
        self.m
    }

    pub fn n_i64(self) -> i64 {
        self.n as i64
    }

    pub fn m_i64(self) -> i64 {
        self.m as i64
    }

    pub fn n_big(self) -> BigInt {
        BigInt::from(self.n)
    }

    pub fn m_big(self) -> BigInt {
        BigInt::from(self.m)
    }

    /// All valid sizes for a given order, in increasing `m`.
    pub fn all_with_order(n: u64) -> Vec<OrderSize> {
        if n < 3 {
            return Vec::new();
        }
        (n - 1..=Self::max_size(n))
            .map(|m| OrderSize { n, m })
            .collect()
    }

    /// Every valid pair with `lo <= n <= hi`.
    pub fn all_up_to(lo: u64, hi: u64) -> Vec<OrderSize> {
        (lo.max(3)..=hi).flat_map(Self::all_with_order).collect()
    }

    /// `max(12, n-1) <= m <= floor((3n-3)/2)`: the pairs covered by the
    /// general facet catalog.
    pub fn in_general_regime(self) -> bool {
        let (n, m) = (self.n, self.m);
        m >= 12 && m + 1 >= n && 2 * m + 3 <= 3 * n
    }
}

impl fmt::Display for OrderSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.m)
    }
}

/// A point of `(m12, m13, m33)`-space with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point3 {
    pub m12: BigRational,
    pub m13: BigRational,
    pub m33: BigRational,
}

impl Point3 {
    pub fn new(m12: BigRational, m13: BigRational, m33: BigRational) -> Self {
        Point3 { m12, m13, m33 }
    }

    pub fn from_ints(m12: i64, m13: i64, m33: i64) -> Self {
        let q = |v: i64| BigRational::from_integer(BigInt::from(v));
        Point3::new(q(m12), q(m13), q(m33))
    }

    pub fn from_array(p: [i64; 3]) -> Self {
        Self::from_ints(p[0], p[1], p[2])
    }

    pub fn coords(&self) -> [&BigRational; 3] {
        [&self.m12, &self.m13, &self.m33]
    }

    pub fn is_integral(&self) -> bool {
        self.coords().iter().all(|c| c.is_integer())
    }

    /// Integer coordinates, if every component is integral and fits `i64`.
    pub fn to_ints(&self) -> Option<[i64; 3]> {
        let conv = |c: &BigRational| -> Option<i64> {
            if c.is_integer() {
                c.to_integer().to_i64()
            } else {
                None
            }
        };
        Some([conv(&self.m12)?, conv(&self.m13)?, conv(&self.m33)?])
    }
}

impl From<[i64; 3]> for Point3 {
    fn from(p: [i64; 3]) -> Self {
        Point3::from_array(p)
    }
}

impl fmt::Display for Point3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.m12, self.m13, self.m33)
    }
}

/// The five non-trivial edge-type counts of a chemical graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeTypeVector {
    pub m12: u64,
    pub m13: u64,
    pub m22: u64,
    pub m23: u64,
    pub m33: u64,
}

impl EdgeTypeVector {
    pub fn total(&self) -> u64 {
        self.m12 + self.m13 + self.m22 + self.m23 + self.m33
    }

    pub fn point(&self) -> [i64; 3] {
        [self.m12 as i64, self.m13 as i64, self.m33 as i64]
    }

    /// Counts in the order (m12, m13, m22, m23, m33).
    pub fn as_array(&self) -> [u64; 5] {
        [self.m12, self.m13, self.m22, self.m23, self.m33]
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeCounts {
    pub n1: u64,
    pub n2: u64,
    pub n3: u64,
}

/// `m22` and `m23` as signed integers, before any sign check.
pub fn derived_counts(ns: OrderSize, p: [i64; 3]) -> (i64, i64) {
    let (n, m) = (ns.n_i64(), ns.m_i64());
    let [m12, m13, m33] = p;
    let m22 = 6 * n - 5 * m - 4 * m12 - 3 * m13 + m33;
    let m23 = 6 * m - 6 * n + 3 * m12 + 2 * m13 - 2 * m33;
    (m22, m23)
}

/// Completes `(m12, m13, m33)` to the full edge-type vector.
pub fn derive_full_vector(ns: OrderSize, p: &Point3) -> Result<EdgeTypeVector> {
    if !p.is_integral() {
        return Err(Error::NonInteger(p.to_string()));
    }
    let n = BigRational::from_integer(ns.n_big());
    let m = BigRational::from_integer(ns.m_big());
    let k = |v: i64| BigRational::from_integer(BigInt::from(v));
    let m22 = k(6) * &n - k(5) * &m - k(4) * &p.m12 - k(3) * &p.m13 + &p.m33;
    let m23 = k(6) * &m - k(6) * &n + k(3) * &p.m12 + k(2) * &p.m13 - k(2) * &p.m33;
    let named = [
        ("m12", &p.m12),
        ("m13", &p.m13),
        ("m22", &m22),
        ("m23", &m23),
        ("m33", &p.m33),
    ];
    let mut out = [0u64; 5];
    for (slot, (name, value)) in out.iter_mut().zip(named) {
        if value.is_negative() {
            return Err(Error::NegativeDerived {
                name,
                value: value.to_string(),
            });
        }
        *slot = value
            .to_integer()
            .to_u64()
            .ok_or_else(|| Error::NonInteger(p.to_string()))?;
    }
    Ok(EdgeTypeVector {
        m12: out[0],
        m13: out[1],
        m22: out[2],
        m23: out[3],
        m33: out[4],
    })
}

/// Degree counts from an edge-type vector.
pub fn derive_degree_counts(ns: OrderSize, v: &EdgeTypeVector) -> Result<DegreeCounts> {
    let n1 = v.m12 + v.m13;
    let twice_n2 = v.m12 + 2 * v.m22 + v.m23;
    if twice_n2 % 2 != 0 {
        return Err(Error::NonIntegerDegreeCount { name: "n2" });
    }
    let thrice_n3 = v.m13 + v.m23 + 2 * v.m33;
    if thrice_n3 % 3 != 0 {
        return Err(Error::NonIntegerDegreeCount { name: "n3" });
    }
    let counts = DegreeCounts {
        n1,
        n2: twice_n2 / 2,
        n3: thrice_n3 / 3,
    };
    let got = counts.n1 + counts.n2 + counts.n3;
    if got != ns.n() {
        return Err(Error::SumMismatch {
            expected: ns.n(),
            got,
        });
    }
    Ok(counts)
}

/// Coefficients `c12, c13, c22, c23, c33` of a degree-based index.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndexSpec {
    pub name: String,
    pub c12: f64,
    pub c13: f64,
    pub c22: f64,
    pub c23: f64,
    pub c33: f64,
    /// Exact integer coefficients, when the index has them.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<[i64; 5]>,
}

impl IndexSpec {
    pub fn new(name: impl Into<String>, c: [f64; 5]) -> Result<Self> {
        const NAMES: [&str; 5] = ["c12", "c13", "c22", "c23", "c33"];
        for (value, name) in c.iter().zip(NAMES) {
            if !value.is_finite() {
                return Err(Error::NonFiniteCoefficient { name });
            }
        }
        let exact = c
            .iter()
            .all(|v| v.fract() == 0.0 && v.abs() < 1e15)
            .then(|| c.map(|v| v as i64));
        Ok(IndexSpec {
            name: name.into(),
            c12: c[0],
            c13: c[1],
            c22: c[2],
            c23: c[3],
            c33: c[4],
            exact,
        })
    }

    /// Builds an index from a coefficient function `c(i, j)` of endpoint degrees.
    pub fn from_fn(name: impl Into<String>, f: impl Fn(f64, f64) -> f64) -> Result<Self> {
        Self::new(
            name,
            [f(1.0, 2.0), f(1.0, 3.0), f(2.0, 2.0), f(2.0, 3.0), f(3.0, 3.0)],
        )
    }

    pub fn coeffs(&self) -> [f64; 5] {
        [self.c12, self.c13, self.c22, self.c23, self.c33]
    }

    /// Σ c_ij·m_ij on a full edge-type vector.
    pub fn evaluate(&self, v: &EdgeTypeVector) -> f64 {
        self.coeffs()
            .iter()
            .zip(v.as_array())
            .map(|(c, k)| c * k as f64)
            .sum()
    }
}

/// The index rewritten on `(m12, m13, m33)` plus an affine term in `(n, m)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReducedIndex {
    pub cp12: f64,
    pub cp13: f64,
    pub cp33: f64,
    pub constant_n_coeff: f64,
    pub constant_m_coeff: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact: Option<ExactReduced>,
}

/// Integer version of [`ReducedIndex`] for indices with integer coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactReduced {
    pub cp12: i64,
    pub cp13: i64,
    pub cp33: i64,
    pub constant_n_coeff: i64,
    pub constant_m_coeff: i64,
}

impl ExactReduced {
    pub fn functional(&self, p: [i64; 3]) -> i128 {
        self.cp12 as i128 * p[0] as i128
            + self.cp13 as i128 * p[1] as i128
            + self.cp33 as i128 * p[2] as i128
    }

    pub fn constant(&self, ns: OrderSize) -> i128 {
        self.constant_n_coeff as i128 * ns.n() as i128
            + self.constant_m_coeff as i128 * ns.m() as i128
    }
}

impl ReducedIndex {
    pub fn coeffs(&self) -> [f64; 3] {
        [self.cp12, self.cp13, self.cp33]
    }

    /// The reduced linear functional alone.
    pub fn functional(&self, p: [i64; 3]) -> f64 {
        self.cp12 * p[0] as f64 + self.cp13 * p[1] as f64 + self.cp33 * p[2] as f64
    }

    /// `(6n-5m)·c22 + (6m-6n)·c23`.
    pub fn constant(&self, ns: OrderSize) -> f64 {
        self.constant_n_coeff * ns.n() as f64 + self.constant_m_coeff * ns.m() as f64
    }

    /// Index value of any graph with the given order, size and point.
    pub fn value(&self, ns: OrderSize, p: [i64; 3]) -> f64 {
        self.functional(p) + self.constant(ns)
    }
}

pub fn reduce_index(idx: &IndexSpec) -> ReducedIndex {
    let [c12, c13, c22, c23, c33] = idx.coeffs();
    ReducedIndex {
        cp12: c12 - 4.0 * c22 + 3.0 * c23,
        cp13: c13 - 3.0 * c22 + 2.0 * c23,
        cp33: c22 - 2.0 * c23 + c33,
        constant_n_coeff: 6.0 * c22 - 6.0 * c23,
        constant_m_coeff: 6.0 * c23 - 5.0 * c22,
        exact: idx.exact.map(|[c12, c13, c22, c23, c33]| ExactReduced {
            cp12: c12 - 4 * c22 + 3 * c23,
            cp13: c13 - 3 * c22 + 2 * c23,
            cp33: c22 - 2 * c23 + c33,
            constant_n_coeff: 6 * c22 - 6 * c23,
            constant_m_coeff: 6 * c23 - 5 * c22,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_size_bounds() {
        assert!(OrderSize::new(2, 1).is_err());
        assert!(OrderSize::new(3, 1).is_err());
        assert!(OrderSize::new(3, 3).is_ok());
        assert!(OrderSize::new(3, 4).is_err());
        assert!(OrderSize::new(4, 6).is_ok());
        assert!(OrderSize::new(5, 8).is_err());
        assert!(OrderSize::new(5, 7).is_ok());
        let msg = OrderSize::new(5, 8).unwrap_err().to_string();
        assert!(msg.contains("n-1 <= m"), "{msg}");
    }

    #[test]
    fn general_regime_edges() {
        assert!(OrderSize::new(13, 15).unwrap().in_general_regime());
        assert!(OrderSize::new(13, 12).unwrap().in_general_regime());
        assert!(!OrderSize::new(12, 11).unwrap().in_general_regime());
        assert!(OrderSize::new(13, 18).unwrap().in_general_regime());
        assert!(!OrderSize::new(13, 19).unwrap().in_general_regime());
    }

    #[test]
    fn full_vector_examples() {
        let ns = OrderSize::new(20, 23).unwrap();
        let v = derive_full_vector(ns, &Point3::from_ints(0, 0, 0)).unwrap();
        assert_eq!((v.m22, v.m23), (5, 18));
        let d = derive_degree_counts(ns, &v).unwrap();
        assert_eq!((d.n1, d.n2, d.n3), (0, 14, 6));

        let ns = OrderSize::new(13, 15).unwrap();
        let v = derive_full_vector(ns, &Point3::from_ints(0, 0, 5)).unwrap();
        assert_eq!((v.m22, v.m23), (8, 2));
        let d = derive_degree_counts(ns, &v).unwrap();
        // n1 - n3 = 2(n - m) pins this down: 0 - 4 = -4
        assert_eq!((d.n1, d.n2, d.n3), (0, 9, 4));

        match derive_full_vector(ns, &Point3::from_ints(5, 0, 0)) {
            Err(Error::NegativeDerived { name, value }) => {
                assert_eq!(name, "m22");
                assert_eq!(value, "-17");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn fractional_point_is_rejected() {
        let ns = OrderSize::new(13, 15).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        let zero = BigRational::from_integer(0.into());
        let p = Point3::new(half, zero.clone(), zero);
        assert!(matches!(derive_full_vector(ns, &p), Err(Error::NonInteger(_))));
    }

    #[test]
    fn path_degree_counts() {
        let ns = OrderSize::new(5, 4).unwrap();
        let v = EdgeTypeVector {
            m12: 2,
            m13: 0,
            m22: 2,
            m23: 0,
            m33: 0,
        };
        let d = derive_degree_counts(ns, &v).unwrap();
        assert_eq!((d.n1, d.n2, d.n3), (2, 3, 0));
    }

    #[test]
    fn reductions() {
        let alb = IndexSpec::new("albertson", [1.0, 2.0, 0.0, 1.0, 0.0]).unwrap();
        let r = reduce_index(&alb);
        assert_eq!(r.coeffs(), [4.0, 4.0, -2.0]);
        let e = r.exact.unwrap();
        assert_eq!((e.cp12, e.cp13, e.cp33), (4, 4, -2));

        let zero = IndexSpec::new("zero", [0.0; 5]).unwrap();
        let r = reduce_index(&zero);
        assert_eq!(r.coeffs(), [0.0; 3]);
        assert_eq!((r.constant_n_coeff, r.constant_m_coeff), (0.0, 0.0));

        let z = IndexSpec::new("sum", [3.0, 4.0, 4.0, 5.0, 6.0]).unwrap();
        assert_eq!(reduce_index(&z).coeffs(), [2.0, 2.0, 0.0]);
    }

    #[test]
    fn non_finite_coefficients_are_rejected() {
        assert!(IndexSpec::new("bad", [f64::NAN, 0.0, 0.0, 0.0, 0.0]).is_err());
        assert!(IndexSpec::new("bad", [0.0, 0.0, f64::INFINITY, 0.0, 0.0]).is_err());
    }

    #[test]
    fn order_size_deserialization_validates() {
        let ok: OrderSize = serde_json::from_str(r#"{"n":13,"m":15}"#).unwrap();
        assert_eq!(ok, OrderSize::new(13, 15).unwrap());
        assert!(serde_json::from_str::<OrderSize>(r#"{"n":2,"m":1}"#).is_err());
    }
}
