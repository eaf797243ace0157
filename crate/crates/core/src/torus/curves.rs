//! Closed polylines on the torus and their intersections with edges.
//!
//! Intersection sign: for oriented curves `a`, `b` meeting transversally,
//! `<a, b> = +1` when `b` crosses `a` from its left side to its right side.
//! With the rim pointing up and the cut pointing right this gives
//! `<rim, cut> = +1`.

use std::cmp::Ordering;

use num_traits::Zero;

use super::geometry::{candidate_translations, segment_meet, translate, Point, SegmentMeet, Q};
use super::TorusError;

/// A closed curve given by a lift to the plane; the last point equals the
/// first point translated by the (nonzero, integral) homology class.
#[derive(Clone, Debug, PartialEq)]
pub struct Curve {
    points: Vec<Point>,
}

/// Where a segment meets a curve.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveHit {
    /// Index of the curve segment.
    pub segment: usize,
    /// Parameter along that curve segment, in `(0, 1)`.
    pub s: Q,
    /// Parameter along the crossing segment, in `(0, 1)`.
    pub t: Q,
    /// `<curve, segment>` for this crossing.
    pub sign: i32,
}

impl CurveHit {
    /// Order of hits along the curve.
    pub fn position_cmp(&self, o: &Self) -> Ordering {
        self.segment.cmp(&o.segment).then_with(|| self.s.cmp(&o.s))
    }
}

impl Curve {
    pub fn new(points: Vec<Point>) -> Result<Self, TorusError> {
        if points.len() < 2 {
            return Err(TorusError::BadCurve("a curve needs at least two points".into()));
        }
        let class = points.last().unwrap() - &points[0];
        if !class.is_integral() || class.is_zero() {
            return Err(TorusError::BadCurve("curve does not close up to a nonzero lattice vector".into()));
        }
        if points.windows(2).any(|w| w[0] == w[1]) {
            return Err(TorusError::BadCurve("repeated curve point".into()));
        }
        Ok(Curve { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn num_segments(&self) -> usize {
        self.points.len() - 1
    }

    pub fn segment(&self, i: usize) -> (&Point, &Point) {
        (&self.points[i], &self.points[i + 1])
    }

    /// Homology class as an integer vector.
    pub fn class(&self) -> (i64, i64) {
        let d = self.points.last().unwrap() - &self.points[0];
        use num_traits::ToPrimitive;
        (d.x.to_integer().to_i64().unwrap_or(0), d.y.to_integer().to_i64().unwrap_or(0))
    }

    /// Transversal crossings of the straight segment `p0 p1` (in the
    /// plane) with every lift of this curve.
    pub fn hits(&self, p0: &Point, p1: &Point) -> Result<Vec<CurveHit>, TorusError> {
        let mut out = Vec::new();
        for i in 0..self.num_segments() {
            let (c0, c1) = self.segment(i);
            for (m, n) in candidate_translations(p0, p1, c0, c1) {
                let (d0, d1) = (translate(c0, m, n), translate(c1, m, n));
                match segment_meet(p0, p1, &d0, &d1) {
                    SegmentMeet::None => {}
                    SegmentMeet::Proper { t, s, cross_sign } => {
                        // <curve, seg> = -sign(cross(curve', seg')) = sign(cross(seg', curve'))
                        out.push(CurveHit { segment: i, s, t, sign: cross_sign });
                    }
                    SegmentMeet::Degenerate { .. } => {
                        return Err(TorusError::NonTransversal { segment: i });
                    }
                }
            }
        }
        out.sort_by(|a, b| a.t.cmp(&b.t));
        Ok(out)
    }

    /// Whether the point (any lift) lies on the curve.
    pub fn contains_point(&self, p: &Point) -> bool {
        (0..self.num_segments()).any(|i| {
            let (c0, c1) = self.segment(i);
            candidate_translations(p, p, c0, c1).into_iter().any(|(m, n)| {
                let (d0, d1) = (translate(c0, m, n), translate(c1, m, n));
                segment_meet(p, p, &d0, &d1) != SegmentMeet::None
            })
        })
    }

    /// Simplicity on the torus: lifts of distinct segments meet only where
    /// consecutive segments share an endpoint.
    pub fn is_simple(&self) -> bool {
        let k = self.num_segments();
        let (cm, cn) = self.class();
        for i in 0..k {
            let (p0, p1) = self.segment(i);
            for j in 0..k {
                let (c0, c1) = self.segment(j);
                for (m, n) in candidate_translations(p0, p1, c0, c1) {
                    if i == j && m == 0 && n == 0 {
                        continue;
                    }
                    let (d0, d1) = (translate(c0, m, n), translate(c1, m, n));
                    match segment_meet(p0, p1, &d0, &d1) {
                        SegmentMeet::None => {}
                        SegmentMeet::Degenerate { t: Some(t), s: Some(s) } => {
                            let one = Q::from_integer(1.into());
                            let forward = t == one
                                && s.is_zero()
                                && j == (i + 1) % k
                                && (m, n) == if i == k - 1 { (cm, cn) } else { (0, 0) };
                            let backward = t.is_zero()
                                && s == one
                                && i == (j + 1) % k
                                && (m, n) == if j == k - 1 { (-cm, -cn) } else { (0, 0) };
                            if !(forward || backward) {
                                return false;
                            }
                        }
                        _ => return false,
                    }
                }
            }
        }
        true
    }

    /// Signed transversal crossings of `self` with `other`, as `<self, other>`
    /// per crossing.
    pub fn crossings_with(&self, other: &Curve) -> Result<Vec<i32>, TorusError> {
        let mut out = Vec::new();
        for i in 0..self.num_segments() {
            let (p0, p1) = self.segment(i);
            for j in 0..other.num_segments() {
                let (c0, c1) = other.segment(j);
                for (m, n) in candidate_translations(p0, p1, c0, c1) {
                    let (d0, d1) = (translate(c0, m, n), translate(c1, m, n));
                    match segment_meet(p0, p1, &d0, &d1) {
                        SegmentMeet::None => {}
                        // <self, other> = -sign(cross(self', other'))
                        SegmentMeet::Proper { cross_sign, .. } => out.push(-cross_sign),
                        SegmentMeet::Degenerate { .. } => {
                            return Err(TorusError::NonTransversal { segment: j });
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Rim and cut.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvePair {
    pub rim: Curve,
    pub cut: Curve,
}

impl CurvePair {
    /// Homological intersection number `<rim, cut>` from the classes.
    pub fn class_pairing(&self) -> i64 {
        let (a, b) = self.rim.class();
        let (c, d) = self.cut.class();
        -(a * d - b * c)
    }
}
