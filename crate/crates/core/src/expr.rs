//! Closed-form expressions and predicates in the order `n` and size `m`.
//!
//! Facet coefficients, vertex coordinates and the activity conditions of
//! both catalogs are written once as [`Expr`] / [`Cond`] trees. They are
//! evaluated exactly over rationals and printed in a compact infix form
//! for the catalog dumps.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

/// Rational expression in `n` and `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    N,
    M,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    /// Exact division by a non-zero integer.
    Div(Box<Expr>, i64),
    Floor(Box<Expr>),
    /// Mathematical (non-negative) residue modulo a positive integer.
    Mod(Box<Expr>, i64),
}

pub fn n() -> Expr {
    Expr::N
}

pub fn m() -> Expr {
    Expr::M
}

pub fn int(k: i64) -> Expr {
    Expr::Int(k)
}

impl Expr {
    pub fn div(self, k: i64) -> Expr {
        assert!(k != 0, "division by zero in catalog expression");
        Expr::Div(Box::new(self), k)
    }

    pub fn floor(self) -> Expr {
        Expr::Floor(Box::new(self))
    }

    pub fn modulo(self, k: i64) -> Expr {
        assert!(k > 0, "modulus must be positive");
        Expr::Mod(Box::new(self), k)
    }

    /// Evaluates the expression exactly.
    pub fn eval(&self, n: &BigInt, m: &BigInt) -> BigRational {
        match self {
            Expr::Int(k) => BigRational::from_integer(BigInt::from(*k)),
            Expr::N => BigRational::from_integer(n.clone()),
            Expr::M => BigRational::from_integer(m.clone()),
            Expr::Add(a, b) => a.eval(n, m) + b.eval(n, m),
            Expr::Sub(a, b) => a.eval(n, m) - b.eval(n, m),
            Expr::Mul(a, b) => a.eval(n, m) * b.eval(n, m),
            Expr::Neg(a) => -a.eval(n, m),
            Expr::Div(a, k) => a.eval(n, m) / BigRational::from_integer(BigInt::from(*k)),
            Expr::Floor(a) => BigRational::from_integer(a.eval(n, m).floor().to_integer()),
            Expr::Mod(a, k) => {
                let x = a.eval(n, m);
                let k = BigRational::from_integer(BigInt::from(*k));
                let q = (&x / &k).floor();
                x - q * k
            }
        }
    }

    /// Convenience wrapper for machine-sized arguments.
    pub fn eval_at(&self, n: u64, m: u64) -> BigRational {
        self.eval(&BigInt::from(n), &BigInt::from(m))
    }

    /// Evaluates and demands an integer result.
    pub fn eval_int(&self, n: &BigInt, m: &BigInt) -> Option<BigInt> {
        let v = self.eval(n, m);
        v.is_integer().then(|| v.to_integer())
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Neg(..) => 2,
            Expr::Mul(..) | Expr::Div(..) => 3,
            Expr::Int(k) if *k < 0 => 2,
            _ => 4,
        }
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let paren = self.precedence() < min;
        if paren {
            f.write_str("(")?;
        }
        match self {
            Expr::Int(k) => write!(f, "{k}")?,
            Expr::N => f.write_str("n")?,
            Expr::M => f.write_str("m")?,
            Expr::Add(a, b) => {
                a.fmt_prec(f, 1)?;
                match b.as_ref() {
                    Expr::Int(k) if *k < 0 => write!(f, "-{}", -k)?,
                    Expr::Neg(inner) => {
                        f.write_str("-")?;
                        inner.fmt_prec(f, 2)?;
                    }
                    other => {
                        f.write_str("+")?;
                        other.fmt_prec(f, 1)?;
                    }
                }
            }
            Expr::Sub(a, b) => {
                a.fmt_prec(f, 1)?;
                f.write_str("-")?;
                b.fmt_prec(f, 2)?;
            }
            Expr::Neg(a) => {
                f.write_str("-")?;
                a.fmt_prec(f, 3)?;
            }
            Expr::Mul(a, b) => match (a.as_ref(), b.as_ref()) {
                (Expr::Int(k), Expr::N | Expr::M) => {
                    write!(f, "{k}")?;
                    b.fmt_prec(f, 4)?;
                }
                (Expr::Int(k), _) => {
                    write!(f, "{k}")?;
                    f.write_str("(")?;
                    b.fmt_prec(f, 0)?;
                    f.write_str(")")?;
                }
                _ => {
                    a.fmt_prec(f, 4)?;
                    f.write_str("*")?;
                    b.fmt_prec(f, 4)?;
                }
            },
            Expr::Div(a, k) => {
                a.fmt_prec(f, 4)?;
                write!(f, "/{k}")?;
            }
            Expr::Floor(a) => {
                f.write_str("floor(")?;
                a.fmt_prec(f, 0)?;
                f.write_str(")")?;
            }
            Expr::Mod(a, k) => {
                f.write_str("(")?;
                a.fmt_prec(f, 4)?;
                write!(f, " mod {k})")?;
            }
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

impl Add for Expr {
    type Output = Expr;
    fn add(self, rhs: Expr) -> Expr {
        Expr::Add(Box::new(self), Box::new(rhs))
    }
}

impl Add<i64> for Expr {
    type Output = Expr;
    fn add(self, rhs: i64) -> Expr {
        self + Expr::Int(rhs)
    }
}

impl Sub for Expr {
    type Output = Expr;
    fn sub(self, rhs: Expr) -> Expr {
        Expr::Sub(Box::new(self), Box::new(rhs))
    }
}

impl Sub<i64> for Expr {
    type Output = Expr;
    fn sub(self, rhs: i64) -> Expr {
        self - Expr::Int(rhs)
    }
}

impl Mul for Expr {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::Mul(Box::new(self), Box::new(rhs))
    }
}

impl Mul<Expr> for i64 {
    type Output = Expr;
    fn mul(self, rhs: Expr) -> Expr {
        Expr::Mul(Box::new(Expr::Int(self)), Box::new(rhs))
    }
}

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Lt,
    Le,
    Eq,
    Ne,
    Ge,
    Gt,
}

impl Rel {
    fn holds(self, a: &BigRational, b: &BigRational) -> bool {
        match self {
            Rel::Lt => a < b,
            Rel::Le => a <= b,
            Rel::Eq => a == b,
            Rel::Ne => a != b,
            Rel::Ge => a >= b,
            Rel::Gt => a > b,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Rel::Lt => "<",
            Rel::Le => "<=",
            Rel::Eq => "=",
            Rel::Ne => "!=",
            Rel::Ge => ">=",
            Rel::Gt => ">",
        }
    }
}

/// Predicate over `(n, m)`: conjunctions/disjunctions of exact comparisons
/// and residue-class membership tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cond {
    Always,
    /// Never active through the general catalog (used by facets that only
    /// appear in stored small-case descriptions).
    Never,
    Cmp(Expr, Rel, Expr),
    In(Expr, Vec<i64>),
    And(Vec<Cond>),
    Or(Vec<Cond>),
}

pub fn le(a: Expr, b: Expr) -> Cond {
    Cond::Cmp(a, Rel::Le, b)
}

pub fn lt(a: Expr, b: Expr) -> Cond {
    Cond::Cmp(a, Rel::Lt, b)
}

pub fn ge(a: Expr, b: Expr) -> Cond {
    Cond::Cmp(a, Rel::Ge, b)
}

pub fn eq(a: Expr, b: Expr) -> Cond {
    Cond::Cmp(a, Rel::Eq, b)
}

pub fn ne(a: Expr, b: Expr) -> Cond {
    Cond::Cmp(a, Rel::Ne, b)
}

pub fn one_of(a: Expr, values: &[i64]) -> Cond {
    Cond::In(a, values.to_vec())
}

impl Cond {
    pub fn and(self, other: Cond) -> Cond {
        match self {
            Cond::Always => other,
            Cond::And(mut v) => {
                v.push(other);
                Cond::And(v)
            }
            c => Cond::And(vec![c, other]),
        }
    }

    pub fn or(self, other: Cond) -> Cond {
        match self {
            Cond::Or(mut v) => {
                v.push(other);
                Cond::Or(v)
            }
            c => Cond::Or(vec![c, other]),
        }
    }

    pub fn holds(&self, n: &BigInt, m: &BigInt) -> bool {
        match self {
            Cond::Always => true,
            Cond::Never => false,
            Cond::Cmp(a, rel, b) => rel.holds(&a.eval(n, m), &b.eval(n, m)),
            Cond::In(a, values) => {
                let v = a.eval(n, m);
                values
                    .iter()
                    .any(|k| v == BigRational::from_integer(BigInt::from(*k)))
            }
            Cond::And(cs) => cs.iter().all(|c| c.holds(n, m)),
            Cond::Or(cs) => cs.iter().any(|c| c.holds(n, m)),
        }
    }

    pub fn holds_at(&self, n: u64, m: u64) -> bool {
        self.holds(&BigInt::from(n), &BigInt::from(m))
    }

    fn fmt_nested(&self, f: &mut fmt::Formatter<'_>, nested: bool) -> fmt::Result {
        match self {
            Cond::Always => f.write_str("always"),
            Cond::Never => f.write_str("never"),
            Cond::Cmp(a, rel, b) => write!(f, "{a} {} {b}", rel.symbol()),
            Cond::In(a, values) => {
                let list: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                write!(f, "{a} in {{{}}}", list.join(","))
            }
            Cond::And(cs) | Cond::Or(cs) => {
                let sep = if matches!(self, Cond::And(_)) {
                    " and "
                } else {
                    " or "
                };
                if nested {
                    f.write_str("(")?;
                }
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(sep)?;
                    }
                    c.fmt_nested(f, true)?;
                }
                if nested {
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Cond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_nested(f, false)
    }
}

/// Non-negative residue of `a` modulo `k` for signed integers.
pub fn residue(a: i64, k: i64) -> i64 {
    a.mod_floor(&k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues_are_non_negative() {
        // (m - 2n) mod 4 at (13, 15) is (-11) mod 4 = 1
        let e = (m() - 2 * n()).modulo(4);
        assert_eq!(e.eval_at(13, 15), BigRational::from_integer(1.into()));
        assert_eq!(residue(-11, 4), 1);
        assert_eq!(residue(-15, 4), 1);
    }

    #[test]
    fn floor_and_division_are_exact() {
        let e = (6 * n() - 8).div(5).floor();
        assert_eq!(e.eval_at(13, 0), BigRational::from_integer(14.into()));
        let q = (6 * n() - 4).div(5);
        assert_eq!(
            q.eval_at(13, 0),
            BigRational::new(74.into(), 5.into())
        );
    }

    #[test]
    fn fractional_bounds_compare_exactly() {
        // m <= (6n-4)/5 at n = 13: 14 passes, 15 fails (74/5 = 14.8)
        let c = le(m(), (6 * n() - 4).div(5));
        assert!(c.holds_at(13, 14));
        assert!(!c.holds_at(13, 15));
    }

    #[test]
    fn display_is_compact() {
        let e = (6 * n() - 5 * m() - 3 * (m() - 2 * n()).modulo(4)).div(4);
        assert_eq!(e.to_string(), "(6n-5m-3(((m-2n) mod 4)))/4");
        let c = le(m(), (6 * n() - 4).div(5)).and(eq(m().modulo(3), int(1)));
        assert_eq!(c.to_string(), "m <= (6n-4)/5 and (m mod 3) = 1");
    }
}
