//! The additive group of points on a short-Weierstrass curve
//! `y^2 = x^3 + ax + b` over `F_p`: validation, the chord-tangent group
//! law, scalar multiplication, exhaustive point enumeration and point
//! orders.
//!
//! Curves here are deliberately small. Enumeration scans every residue,
//! so the modulus is capped (see [`DEFAULT_ENUMERATION_LIMIT`]), and
//! square roots are found by table lookup rather than Tonelli-Shanks.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::field::{mul_mod, FieldElement, PrimeModulus};

/// Largest modulus `enumerate_points` accepts unless a caller raises it.
pub const DEFAULT_ENUMERATION_LIMIT: u64 = 10_000;

/// A point of the curve group: affine coordinates or the identity `O`.
///
/// The derived ordering sorts affine points ascending by `(x, y)` and
/// places `O` after every affine point, which fixes the order used for
/// alphabet derivation and serialization.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Point {
    Affine { x: u64, y: u64 },
    Infinity,
}

impl Point {
    pub fn affine(x: u64, y: u64) -> Self {
        Point::Affine { x, y }
    }

    pub fn is_infinity(self) -> bool {
        matches!(self, Point::Infinity)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => write!(f, "O"),
            Point::Affine { x, y } => write!(f, "({x},{y})"),
        }
    }
}

impl FromStr for Point {
    type Err = Error;

    /// Accepts `O`, `(x,y)` and the bare form `x,y`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "O" {
            return Ok(Point::Infinity);
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|rest| rest.strip_suffix(')'))
            .unwrap_or(s);
        let (xs, ys) = inner
            .split_once(',')
            .ok_or_else(|| Error::parse(format!("expected `O` or `(x,y)`, got {s:?}")))?;
        let x = xs
            .trim()
            .parse::<u64>()
            .map_err(|e| Error::parse(format!("bad x coordinate {xs:?}: {e}")))?;
        let y = ys
            .trim()
            .parse::<u64>()
            .map_err(|e| Error::parse(format!("bad y coordinate {ys:?}: {e}")))?;
        Ok(Point::affine(x, y))
    }
}

/// A validated curve `y^2 = x^3 + ax + b` over `F_p`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CurveParams {
    p: PrimeModulus,
    a: u64,
    b: u64,
}

impl CurveParams {
    /// Checks primality of `p` and the discriminant condition
    /// `4a^3 + 27b^2 != 0 (mod p)`.
    pub fn new(p: u64, a: u64, b: u64) -> Result<Self, Error> {
        let p = PrimeModulus::new(p)?;
        let pv = p.get();
        let (a, b) = (a % pv, b % pv);
        let a3 = mul_mod(mul_mod(a, a, pv), a, pv);
        let b2 = mul_mod(b, b, pv);
        let disc = (mul_mod(4 % pv, a3, pv) + mul_mod(27 % pv, b2, pv)) % pv;
        if disc == 0 {
            return Err(Error::SingularCurve { p: pv });
        }
        Ok(CurveParams { p, a, b })
    }

    pub fn p(&self) -> u64 {
        self.p.get()
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.p
    }

    fn fe(&self, v: u64) -> FieldElement {
        FieldElement::new(v, self.p)
    }

    /// `x^3 + ax + b mod p`.
    fn rhs(&self, x: u64) -> u64 {
        let p = self.p.get();
        let x2 = mul_mod(x, x, p);
        (mul_mod(x2, x, p) + mul_mod(self.a, x, p) + self.b) % p
    }

    pub fn is_on_curve(&self, point: Point) -> bool {
        match point {
            Point::Infinity => true,
            Point::Affine { x, y } => {
                let p = self.p.get();
                x < p && y < p && mul_mod(y, y, p) == self.rhs(x)
            }
        }
    }

    /// `-(x, y) = (x, p - y)`; the identity negates to itself.
    pub fn negate(&self, point: Point) -> Point {
        match point {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::affine(x, (self.p.get() - y) % self.p.get()),
        }
    }

    /// Chord-tangent addition. Both inputs must lie on the curve;
    /// off-curve points are rejected rather than silently combined.
    pub fn add(&self, lhs: Point, rhs: Point) -> Result<Point, Error> {
        if !self.is_on_curve(lhs) {
            return Err(Error::PointNotOnCurve { point: lhs });
        }
        if !self.is_on_curve(rhs) {
            return Err(Error::PointNotOnCurve { point: rhs });
        }
        let (x1, y1) = match lhs {
            Point::Infinity => return Ok(rhs),
            Point::Affine { x, y } => (x, y),
        };
        let (x2, y2) = match rhs {
            Point::Infinity => return Ok(lhs),
            Point::Affine { x, y } => (x, y),
        };
        let p = self.p.get();
        if x1 == x2 && (y1 as u128 + y2 as u128) % p as u128 == 0 {
            // inverse pair, including the 2-torsion case y = 0
            return Ok(Point::Infinity);
        }
        let lambda = if lhs == rhs {
            let num = self.fe(3) * self.fe(x1) * self.fe(x1) + self.fe(self.a);
            let den = (self.fe(2) * self.fe(y1))
                .inverse()
                .expect("doubling with y = 0 was handled above");
            num * den
        } else {
            let num = self.fe(y2) - self.fe(y1);
            let den = (self.fe(x2) - self.fe(x1))
                .inverse()
                .expect("distinct x coordinates");
            num * den
        };
        let x3 = lambda * lambda - self.fe(x1) - self.fe(x2);
        let y3 = lambda * (self.fe(x1) - x3) - self.fe(y1);
        Ok(Point::affine(x3.value(), y3.value()))
    }

    /// `m`-fold sum of `point` by double-and-add; `m = 0` gives `O`.
    pub fn scalar_mul(&self, m: u64, point: Point) -> Result<Point, Error> {
        if !self.is_on_curve(point) {
            return Err(Error::PointNotOnCurve { point });
        }
        let mut result = Point::Infinity;
        let mut addend = point;
        let mut m = m;
        while m > 0 {
            if m & 1 == 1 {
                result = self.add(result, addend)?;
            }
            m >>= 1;
            if m > 0 {
                addend = self.add(addend, addend)?;
            }
        }
        Ok(result)
    }

    /// Every point of the group, affine points sorted ascending by
    /// `(x, y)` with `O` last. The length of the result is the group order.
    pub fn enumerate_points(&self) -> Result<Vec<Point>, Error> {
        self.enumerate_points_limited(DEFAULT_ENUMERATION_LIMIT)
    }

    /// Enumeration with a caller-chosen modulus cap.
    pub fn enumerate_points_limited(&self, limit: u64) -> Result<Vec<Point>, Error> {
        let p = self.p.get();
        if p > limit {
            return Err(Error::CurveTooLarge { p, limit });
        }
        // bucket every y by its square so each x costs one lookup
        let mut roots: Vec<Vec<u64>> = vec![Vec::new(); p as usize];
        for y in 0..p {
            roots[mul_mod(y, y, p) as usize].push(y);
        }
        let mut points = Vec::new();
        for x in 0..p {
            for &y in &roots[self.rhs(x) as usize] {
                points.push(Point::affine(x, y));
            }
        }
        points.sort_unstable();
        points.push(Point::Infinity);
        Ok(points)
    }

    /// Group order `#E` via enumeration.
    pub fn group_order(&self) -> Result<u64, Error> {
        Ok(self.enumerate_points()?.len() as u64)
    }

    /// Least `m >= 1` with `m * point = O`.
    pub fn order_of_point(&self, point: Point) -> Result<u64, Error> {
        if !self.is_on_curve(point) {
            return Err(Error::PointNotOnCurve { point });
        }
        let mut acc = point;
        let mut order = 1u64;
        while !acc.is_infinity() {
            acc = self.add(acc, point)?;
            order += 1;
        }
        Ok(order)
    }
}

impl fmt::Display for CurveParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} a={} b={}", self.p.get(), self.a, self.b)
    }
}

impl FromStr for CurveParams {
    type Err = Error;

    /// Parses the textual form `p=<int> a=<int> b=<int>`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut p = None;
        let mut a = None;
        let mut b = None;
        for token in s.split_whitespace() {
            let (key, value) = token
                .split_once('=')
                .ok_or_else(|| Error::parse(format!("expected key=value, got {token:?}")))?;
            let value: u64 = value
                .parse()
                .map_err(|e| Error::parse(format!("bad value in {token:?}: {e}")))?;
            match key {
                "p" => p = Some(value),
                "a" => a = Some(value),
                "b" => b = Some(value),
                _ => return Err(Error::parse(format!("unknown curve field {key:?}"))),
            }
        }
        match (p, a, b) {
            (Some(p), Some(a), Some(b)) => CurveParams::new(p, a, b),
            _ => Err(Error::parse("curve needs p=, a= and b=".to_string())),
        }
    }
}
