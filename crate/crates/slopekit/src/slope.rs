//! Exact arithmetic on the projective rational line and on curve classes
//! of the torus `T^2 = R^2/Z^2`.
//!
//! A slope is a point of `Q ∪ {∞}`, stored as `p/q` with `gcd(|p|, q) = 1`
//! and `q >= 0`; infinity has the unique representative `1/0`. A curve
//! class is a primitive integer vector `(x, y)`, and its slope is `y/x`,
//! so `(1, 0)` has slope `0` and `(0, 1)` has slope `∞`. Curve classes
//! keep orientation information that slopes forget: `(x, y)` and
//! `(-x, -y)` are the two orientations of the same curve.
//!
//! All predicates in this crate reduce to sign tests on 2x2 integer
//! determinants; no floating point is used anywhere.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g`.
pub(crate) fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (g, s, t) = egcd(b, a.rem_euclid(b));
        (g, t, s - (a.div_euclid(b)) * t)
    }
}

/// An integer vector in `Z^2`.
///
/// Used both for (not necessarily primitive) homology classes and for
/// relative Euler classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vec2 {
    pub x: i64,
    pub y: i64,
}

impl Vec2 {
    pub const fn new(x: i64, y: i64) -> Self {
        Vec2 { x, y }
    }

    pub const ZERO: Vec2 = Vec2 { x: 0, y: 0 };

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn is_primitive(&self) -> bool {
        gcd(self.x, self.y) == 1
    }
}

/// Determinant of the 2x2 matrix with columns `a`, `b`, computed in `i128`
/// so that no slope in `i64` range can overflow the sign test.
pub fn det(a: Vec2, b: Vec2) -> i128 {
    (a.x as i128) * (b.y as i128) - (a.y as i128) * (b.x as i128)
}

pub(crate) fn dot(a: Vec2, b: Vec2) -> i128 {
    (a.x as i128) * (b.x as i128) + (a.y as i128) * (b.y as i128)
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Mul<Vec2> for i64 {
    type Output = Vec2;
    fn mul(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self * rhs.x, self * rhs.y)
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl FromStr for Vec2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Vec2> {
        let err = || Error::ParseError {
            input: s.to_string(),
            expected: "an integer pair \"(x,y)\"",
        };
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(err)?;
        let (xs, ys) = inner.split_once(',').ok_or_else(err)?;
        let x = xs.trim().parse::<i64>().map_err(|_| err())?;
        let y = ys.trim().parse::<i64>().map_err(|_| err())?;
        Ok(Vec2::new(x, y))
    }
}

/// A point of the projective rational line `QP^1 = Q ∪ {∞}`.
///
/// The canonical representative has `q >= 0`, `gcd(|p|, q) = 1`, and
/// infinity is `1/0`, so equality of slopes is structural equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    pub const INFINITY: Slope = Slope { p: 1, q: 0 };

    /// Canonicalizes `p/q`; the only rejected input is `0/0`.
    pub fn new(p: i64, q: i64) -> Result<Slope> {
        if p == 0 && q == 0 {
            return Err(Error::ZeroVector);
        }
        if q == 0 {
            return Ok(Slope::INFINITY);
        }
        let g = gcd(p, q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 {
            p = -p;
            q = -q;
        }
        Ok(Slope { p, q })
    }

    pub fn numer(&self) -> i64 {
        self.p
    }

    pub fn denom(&self) -> i64 {
        self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q == 0
    }

    pub fn is_integer(&self) -> bool {
        self.q == 1
    }

    pub fn as_integer(&self) -> Option<i64> {
        (self.q == 1).then_some(self.p)
    }

    /// The direction vector `(q, p)` of this slope, i.e. the canonical
    /// curve-class representative (slope of `(x, y)` is `y/x`).
    pub fn direction(&self) -> Vec2 {
        Vec2::new(self.q, self.p)
    }

    /// The slope of a nonzero integer vector `(x, y)`, namely `y/x`.
    pub fn of_vector(v: Vec2) -> Result<Slope> {
        Slope::new(v.y, v.x)
    }
}

impl From<i64> for Slope {
    fn from(n: i64) -> Slope {
        Slope { p: n, q: 1 }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q == 0 {
            write!(f, "inf")
        } else if self.q == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

impl FromStr for Slope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Slope> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("inf") || t == "∞" {
            return Ok(Slope::INFINITY);
        }
        let err = || Error::ParseError {
            input: s.to_string(),
            expected: "a slope \"p/q\", an integer, or \"inf\"",
        };
        if let Some((ps, qs)) = t.split_once('/') {
            let p = ps.trim().parse::<i64>().map_err(|_| err())?;
            let q = qs.trim().parse::<i64>().map_err(|_| err())?;
            Slope::new(p, q)
        } else {
            let p = t.parse::<i64>().map_err(|_| err())?;
            Ok(Slope::from(p))
        }
    }
}

/// Normalizes an integer pair to the canonical slope representative.
pub fn normalize_slope(p: i64, q: i64) -> Result<Slope> {
    Slope::new(p, q)
}

/// A primitive class in `H_1(T^2) = Z^2`.
///
/// The slope of `(x, y)` is `y/x`. The sign of the vector is meaningful
/// (it is what relative Euler classes are made of) and is preserved by
/// every operation here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurveClass {
    v: Vec2,
}

impl CurveClass {
    /// Requires a primitive nonzero vector.
    pub fn new(x: i64, y: i64) -> Result<CurveClass> {
        let v = Vec2::new(x, y);
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        if !v.is_primitive() {
            return Err(Error::NotPrimitive(x, y));
        }
        Ok(CurveClass { v })
    }

    /// Divides out the gcd of a nonzero vector.
    pub fn from_direction(v: Vec2) -> Result<CurveClass> {
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        let g = gcd(v.x, v.y);
        Ok(CurveClass {
            v: Vec2::new(v.x / g, v.y / g),
        })
    }

    pub fn x(&self) -> i64 {
        self.v.x
    }

    pub fn y(&self) -> i64 {
        self.v.y
    }

    pub fn vec(&self) -> Vec2 {
        self.v
    }

    pub fn slope(&self) -> Slope {
        Slope::of_vector(self.v).expect("curve classes are nonzero")
    }

    pub fn parallel_to(&self, other: &CurveClass) -> bool {
        det(self.v, other.v) == 0
    }
}

impl Neg for CurveClass {
    type Output = CurveClass;
    fn neg(self) -> CurveClass {
        CurveClass { v: -self.v }
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl FromStr for CurveClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<CurveClass> {
        let v = Vec2::from_str(s)?;
        CurveClass::new(v.x, v.y)
    }
}

/// An integer 2x2 matrix of determinant ±1, acting on curve classes and
/// (projectively) on slopes. Rows are `(a, b)` and `(c, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GluingMap {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl GluingMap {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<GluingMap> {
        let det = (a as i128) * (d as i128) - (b as i128) * (c as i128);
        if det != 1 && det != -1 {
            return Err(Error::NotUnimodular(a, b, c, d));
        }
        Ok(GluingMap { a, b, c, d })
    }

    pub const IDENTITY: GluingMap = GluingMap {
        a: 1,
        b: 0,
        c: 0,
        d: 1,
    };

    pub fn rows(&self) -> ((i64, i64), (i64, i64)) {
        ((self.a, self.b), (self.c, self.d))
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn inverse(&self) -> GluingMap {
        let s = self.det(); // ±1
        GluingMap {
            a: s * self.d,
            b: -s * self.b,
            c: -s * self.c,
            d: s * self.a,
        }
    }

    pub fn apply_vec(&self, v: Vec2) -> Vec2 {
        Vec2::new(self.a * v.x + self.b * v.y, self.c * v.x + self.d * v.y)
    }

    /// Matrix-vector product; unimodularity keeps primitive classes primitive.
    pub fn apply(&self, c: &CurveClass) -> CurveClass {
        CurveClass::from_direction(self.apply_vec(c.vec())).expect("unimodular image is nonzero")
    }

    /// The induced projective action on slopes.
    pub fn apply_slope(&self, s: &Slope) -> Slope {
        Slope::of_vector(self.apply_vec(s.direction())).expect("unimodular image is nonzero")
    }
}

impl Mul for GluingMap {
    type Output = GluingMap;
    fn mul(self, rhs: GluingMap) -> GluingMap {
        GluingMap {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }
}

impl fmt::Display for GluingMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({},{}),({},{}))", self.a, self.b, self.c, self.d)
    }
}

/// Applies a gluing map to a curve class.
pub fn apply_gluing(g: &GluingMap, c: &CurveClass) -> CurveClass {
    g.apply(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_reduces_and_fixes_sign() {
        assert_eq!(normalize_slope(2, 4).unwrap(), Slope::new(1, 2).unwrap());
        assert_eq!(normalize_slope(-3, -6).unwrap(), Slope::new(1, 2).unwrap());
        assert_eq!(normalize_slope(5, 0).unwrap(), Slope::INFINITY);
        assert_eq!(normalize_slope(0, -7).unwrap(), Slope::from(0));
        assert_eq!(normalize_slope(0, 0), Err(Error::ZeroVector));
    }

    #[test]
    fn slope_round_trips_through_strings() {
        for s in ["inf", "0", "-1", "7/3", "-5/3", "-1/2"] {
            let slope: Slope = s.parse().unwrap();
            assert_eq!(slope.to_string(), s);
        }
        assert_eq!("6/-4".parse::<Slope>().unwrap().to_string(), "-3/2");
        assert!("abc".parse::<Slope>().is_err());
        assert_eq!("0/0".parse::<Slope>(), Err(Error::ZeroVector));
    }

    #[test]
    fn curve_class_requires_primitive() {
        assert!(CurveClass::new(-2, 1).is_ok());
        assert_eq!(CurveClass::new(2, 4), Err(Error::NotPrimitive(2, 4)));
        assert_eq!(CurveClass::new(0, 0), Err(Error::ZeroVector));
        let c = CurveClass::from_direction(Vec2::new(2, 4)).unwrap();
        assert_eq!(c, CurveClass::new(1, 2).unwrap());
        assert_eq!(c.slope(), Slope::new(2, 1).unwrap());
    }

    #[test]
    fn gluing_examples() {
        let phi_minus = GluingMap::new(1, 0, -1, 1).unwrap();
        let c = CurveClass::new(1, 0).unwrap();
        assert_eq!(phi_minus.apply(&c), CurveClass::new(1, -1).unwrap());

        let id = GluingMap::IDENTITY;
        let c = CurveClass::new(-2, 1).unwrap();
        assert_eq!(id.apply(&c), c);

        let phi_plus = GluingMap::new(1, 0, 1, 1).unwrap();
        let c = CurveClass::new(0, 1).unwrap();
        assert_eq!(phi_plus.apply(&c), c);
    }

    #[test]
    fn gluing_rejects_singular_matrices() {
        assert!(GluingMap::new(2, 0, 0, 1).is_err());
        assert!(GluingMap::new(1, 1, 1, 1).is_err());
    }

    #[test]
    fn inverse_composes_to_identity() {
        let g = GluingMap::new(3, 2, 4, 3).unwrap(); // det 1
        assert_eq!(g * g.inverse(), GluingMap::IDENTITY);
        let h = GluingMap::new(0, 1, 1, 0).unwrap(); // det -1
        assert_eq!(h * h.inverse(), GluingMap::IDENTITY);
    }

    #[test]
    fn slope_action_is_projective() {
        // Shear x' = x, y' = x + y adds 1 to every slope.
        let g = GluingMap::new(1, 0, 1, 1).unwrap();
        assert_eq!(g.apply_slope(&Slope::from(-2)), Slope::from(-1));
        assert_eq!(g.apply_slope(&Slope::INFINITY), Slope::INFINITY);
        assert_eq!(
            g.apply_slope(&Slope::new(-1, 2).unwrap()),
            Slope::new(1, 2).unwrap()
        );
    }
}
