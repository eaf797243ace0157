//! Structural validation with report-style results.

use std::fmt;

use serde::Serialize;

use crate::algebra::Scalar;

use super::faces::{compute_faces, Face};
use super::graph::ToricGraph;
use super::TorusError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ViolationCode {
    LeaflessViolation,
    SelfLoop,
    ZeroLift,
    PositionOutOfRange,
    DisplacementMismatch,
    DegenerateAngles,
    EulerCharacteristic,
    FaceNotClosed,
    FaceHomology,
    NotBipartite,
    ColorCountMismatch,
    PerfectnessViolation,
    MissingCurves,
    CurveNotSimple,
    CurveThroughVertex,
    NotIdeal,
    RimOrientation,
    CutNotSimpleCrossing,
    RimCrosserNotBlackToWhite,
    RimCrossersNotParallel,
    SourceAdjacentNotWhite,
}

impl fmt::Display for ViolationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default();
        f.write_str(&s)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub code: ViolationCode,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.code, self.message)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub face_count: Option<usize>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, code: ViolationCode, message: impl Into<String>) {
        self.violations.push(Violation { code, message: message.into() });
    }

    pub fn has(&self, code: ViolationCode) -> bool {
        self.violations.iter().any(|v| v.code == code)
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
        if other.face_count.is_some() {
            self.face_count = other.face_count;
        }
    }
}

/// Checks the graph and, when the local conditions hold, traces faces and
/// checks that they are disks. Returns the faces when tracing succeeded.
pub fn validate_graph<S: Scalar>(g: &ToricGraph<S>) -> (ValidationReport, Option<Vec<Face>>) {
    use ViolationCode::*;
    let mut r = ValidationReport::default();
    for v in g.vertices() {
        if !v.pos.in_unit_square() {
            r.push(PositionOutOfRange, format!("vertex {} at {} is outside [0,1)^2", v.id, v.pos));
        }
        let d = g.degree(v.id);
        if d < 2 {
            r.push(LeaflessViolation, format!("vertex {} has degree {d}", v.id));
        }
    }
    for e in g.edges() {
        if e.tail == e.head {
            r.push(SelfLoop, format!("edge {} is a loop at vertex {}", e.id, e.tail));
        }
        if e.lift.is_zero() {
            r.push(ZeroLift, format!("edge {} has zero length", e.id));
            continue;
        }
        let d = &e.lift - &(&g.vertex(e.head).pos - &g.vertex(e.tail).pos);
        if !d.is_integral() {
            r.push(DisplacementMismatch, format!("edge {} lift {} does not join its endpoints", e.id, e.lift));
        }
    }
    if !r.is_ok() {
        return (r, None);
    }
    let faces = match compute_faces(g) {
        Ok(f) => f,
        Err(TorusError::DegenerateAngles(v)) => {
            r.push(DegenerateAngles, format!("two edges leave vertex {v} in the same direction"));
            return (r, None);
        }
        Err(e) => {
            r.push(DegenerateAngles, e.to_string());
            return (r, None);
        }
    };
    r.face_count = Some(faces.len());
    let (nv, ne, nf) = (g.vertices().len() as i64, g.edges().len() as i64, faces.len() as i64);
    if nv - ne + nf != 0 {
        r.push(EulerCharacteristic, format!("V - E + F = {nv} - {ne} + {nf} = {}", nv - ne + nf));
    }
    for (k, f) in faces.iter().enumerate() {
        let s = f.lift_sum(g);
        if !s.is_zero() {
            r.push(FaceNotClosed, format!("face {k} boundary has total displacement {s}"));
        }
        let c = f.crossing_sum(g);
        if c != (0, 0) {
            r.push(FaceHomology, format!("face {k} boundary has crossing sum {c:?}"));
        }
    }
    (r, Some(faces))
}

/// Additional bipartite checks: every edge joins opposite colors and the
/// color classes have equal size.
pub fn validate_bipartite<S: Scalar>(g: &ToricGraph<S>) -> ValidationReport {
    use super::graph::Color;
    let mut r = ValidationReport::default();
    for e in g.edges() {
        if g.vertex(e.tail).color == g.vertex(e.head).color {
            r.push(ViolationCode::NotBipartite, format!("edge {} joins two {} vertices", e.id, g.vertex(e.tail).color));
        }
    }
    let (w, b) = (g.ids_of_color(Color::White).len(), g.ids_of_color(Color::Black).len());
    if w != b {
        r.push(ViolationCode::ColorCountMismatch, format!("{w} white vs {b} black vertices"));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Cyclo8;
    use crate::torus::geometry::Point;
    use crate::torus::graph::{Color, Edge, Vertex};

    fn pt(xn: i64, xd: i64, yn: i64, yd: i64) -> Point {
        Point::from_ratios(xn, xd, yn, yd)
    }

    #[test]
    fn leaf_is_reported() {
        let vertices = vec![
            Vertex { id: 0, color: Color::White, pos: pt(1, 4, 1, 4) },
            Vertex { id: 1, color: Color::Black, pos: pt(1, 2, 1, 2) },
        ];
        let edges = vec![Edge { id: 0, tail: 0, head: 1, weight: Cyclo8::from_int(1), lift: pt(1, 4, 1, 4), cross_rim: 0, cross_cut: 0 }];
        let g = ToricGraph::new(vertices, edges, None).unwrap();
        let (r, faces) = validate_graph(&g);
        assert!(r.has(ViolationCode::LeaflessViolation));
        assert!(faces.is_none());
        assert_eq!(ViolationCode::LeaflessViolation.to_string(), "LEAFLESS_VIOLATION");
    }
}
