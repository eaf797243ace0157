//! Exact planar geometry in the universal cover of the unit torus.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Point {
    pub x: Q,
    pub y: Q,
}

impl Point {
    pub fn new(x: Q, y: Q) -> Self {
        Point { x, y }
    }

    pub fn from_ratios(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        Point { x: q(xn, xd), y: q(yn, yd) }
    }

    pub fn zero() -> Self {
        Point { x: Q::zero(), y: Q::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn cross(&self, o: &Point) -> Q {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn dot(&self, o: &Point) -> Q {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    /// Representative in `[0, 1)^2`.
    pub fn reduce(&self) -> Point {
        Point { x: &self.x - self.x.floor(), y: &self.y - self.y.floor() }
    }

    pub fn scale(&self, t: &Q) -> Point {
        Point { x: &self.x * t, y: &self.y * t }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64().unwrap_or(f64::NAN), self.y.to_f64().unwrap_or(f64::NAN))
    }

    /// Whether both coordinates lie in `[0, 1)`.
    pub fn in_unit_square(&self) -> bool {
        let unit = Q::from_integer(1.into());
        !self.x.is_negative() && !self.y.is_negative() && self.x < unit && self.y < unit
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, o: &Point) -> Point {
        Point { x: &self.x + &o.x, y: &self.y + &o.y }
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, o: &Point) -> Point {
        Point { x: &self.x - &o.x, y: &self.y - &o.y }
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point { x: -&self.x, y: -&self.y }
    }
}

/// Half-plane index used for angular sorting: 0 for angles in `[0, pi)`,
/// 1 for `[pi, 2 pi)`.
fn half(p: &Point) -> u8 {
    if p.y.is_positive() || (p.y.is_zero() && p.x.is_positive()) {
        0
    } else {
        1
    }
}

/// Counterclockwise order of nonzero direction vectors starting from the
/// positive x axis.
pub fn angle_cmp(a: &Point, b: &Point) -> Ordering {
    half(a).cmp(&half(b)).then_with(|| Q::zero().cmp(&a.cross(b)))
}

/// Same direction (parallel with the same sense).
pub fn same_direction(a: &Point, b: &Point) -> bool {
    a.cross(b).is_zero() && a.dot(b).is_positive()
}

/// Turn from direction `a` to direction `b`, in the exact quarter-turn form
/// when both are axis-parallel.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SignedAngle {
    Quarter(i32),
    Radians(f64),
    /// The two directions are opposite.
    Straight,
}

fn axis_index(p: &Point) -> Option<i32> {
    match (p.x.is_zero(), p.y.is_zero()) {
        (false, true) if p.x.is_positive() => Some(0),
        (true, false) if p.y.is_positive() => Some(1),
        (false, true) => Some(2),
        (true, false) => Some(3),
        _ => None,
    }
}

/// Signed angle in `(-pi, pi)` turning direction `a` into direction `b`.
pub fn signed_angle(a: &Point, b: &Point) -> SignedAngle {
    if a.cross(b).is_zero() && a.dot(b).is_negative() {
        return SignedAngle::Straight;
    }
    if let (Some(i), Some(j)) = (axis_index(a), axis_index(b)) {
        let d = (j - i).rem_euclid(4);
        return SignedAngle::Quarter(if d == 3 { -1 } else { d });
    }
    let (ax, ay) = a.to_f64();
    let (bx, by) = b.to_f64();
    let cr = ax * by - ay * bx;
    let dt = ax * bx + ay * by;
    SignedAngle::Radians(cr.atan2(dt))
}

/// A proper crossing of segment `p0 p1` with segment `c0 c1`: parameters
/// along each segment and the sign of `cross(p1 - p0, c1 - c0)`.
#[derive(Clone, Debug, PartialEq)]
pub enum SegmentMeet {
    None,
    Proper { t: Q, s: Q, cross_sign: i32 },
    /// Touching at an endpoint of either segment or overlapping collinearly.
    Degenerate { t: Option<Q>, s: Option<Q> },
}

pub fn segment_meet(p0: &Point, p1: &Point, c0: &Point, c1: &Point) -> SegmentMeet {
    let e = p1 - p0;
    let c = c1 - c0;
    let d = e.cross(&c);
    let w = c0 - p0;
    let zero = Q::zero();
    let one = Q::from_integer(1.into());
    if d.is_zero() {
        if !w.cross(&e).is_zero() || !w.cross(&c).is_zero() {
            return SegmentMeet::None;
        }
        // collinear: overlap test on the projection onto e (or c if e is degenerate)
        let axis = if e.is_zero() { c.clone() } else { e.clone() };
        let len = axis.dot(&axis);
        if len.is_zero() {
            return if w.is_zero() { SegmentMeet::Degenerate { t: None, s: None } } else { SegmentMeet::None };
        }
        let a0 = Q::zero();
        let a1 = e.dot(&axis) / &len;
        let b0 = w.dot(&axis) / &len;
        let b1 = (c1 - p0).dot(&axis) / &len;
        let (lo_a, hi_a) = if a0 <= a1 { (a0, a1.clone()) } else { (a1.clone(), a0) };
        let (lo_b, hi_b) = if b0 <= b1 { (b0.clone(), b1.clone()) } else { (b1.clone(), b0.clone()) };
        if hi_a < lo_b || hi_b < lo_a {
            return SegmentMeet::None;
        }
        if hi_a == lo_b || hi_b == lo_a {
            // touching at a single endpoint
            if e.is_zero() || c.is_zero() {
                return SegmentMeet::Degenerate { t: None, s: None };
            }
            let x = if hi_a == lo_b { hi_a } else { lo_a };
            let t = x.clone() / &a1;
            let s = (x - &b0) / (b1 - &b0);
            return SegmentMeet::Degenerate { t: Some(t), s: Some(s) };
        }
        return SegmentMeet::Degenerate { t: None, s: None };
    }
    let t = w.cross(&c) / &d;
    let s = w.cross(&e) / &d;
    if t < zero || t > one || s < zero || s > one {
        return SegmentMeet::None;
    }
    if t == zero || t == one || s == zero || s == one {
        return SegmentMeet::Degenerate { t: Some(t), s: Some(s) };
    }
    SegmentMeet::Proper { t, s, cross_sign: if d.is_positive() { 1 } else { -1 } }
}

/// Integer translations `(m, n)` for which the box of segment `c` moved by
/// `(m, n)` can meet the box of segment `p`.
pub fn candidate_translations(p0: &Point, p1: &Point, c0: &Point, c1: &Point) -> Vec<(i64, i64)> {
    let range = |a0: &Q, a1: &Q, b0: &Q, b1: &Q| {
        let (pmin, pmax) = if a0 <= a1 { (a0, a1) } else { (a1, a0) };
        let (cmin, cmax) = if b0 <= b1 { (b0, b1) } else { (b1, b0) };
        let lo = (pmin - cmax).floor().to_integer().to_i64().unwrap_or(0);
        let hi = (pmax - cmin).ceil().to_integer().to_i64().unwrap_or(0);
        lo..=hi
    };
    let mut out = Vec::new();
    for m in range(&p0.x, &p1.x, &c0.x, &c1.x) {
        for n in range(&p0.y, &p1.y, &c0.y, &c1.y) {
            out.push((m, n));
        }
    }
    out
}

pub fn translate(p: &Point, m: i64, n: i64) -> Point {
    Point { x: &p.x + Q::from_integer(m.into()), y: &p.y + Q::from_integer(n.into()) }
}
