//! JSON instance files.
//!
//! ```json
//! {
//!   "vertices": [{"id": 0, "color": "white", "pos": [1, 3, 2, 3]}],
//!   "edges": [{"id": 1, "tail": 0, "head": 1, "weight": "2", "lift": [0, 1, 2, 3]}],
//!   "rim": [[0, 1, 1, 2], [0, 1, 3, 2]],
//!   "cut": [[1, 2, 0, 1], [3, 2, 0, 1]],
//!   "orientation": [1]
//! }
//! ```
//!
//! Rationals are written `[num, den]`, points `[xnum, xden, ynum, yden]`.
//! Weights are exact literals (`"3/2"`, `"1/2+1/2*z^2"`) or floating
//! objects (`{"re": 1.5, "im": 0}`); one file uses one kind throughout.
//! When `orientation` is present the file describes a network oriented
//! along the stored `tail -> head` direction of every listed edge.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{AlgebraError, Backend, Cyclo8, Scalar};
use crate::torus::{Color, Curve, CurvePair, Edge, Point, ToricGraph, TorusError, Vertex};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Torus(#[from] TorusError),
    #[error("bad rational {0:?}: denominators must be nonzero")]
    BadRational(Vec<i64>),
    #[error("rim and cut must be given together")]
    HalfCurvePair,
    #[error("orientation must list every edge id exactly once")]
    BadOrientation,
    #[error("file holds {found} weights but the {wanted} backend was requested")]
    BackendMismatch { found: Backend, wanted: Backend },
    #[error("cannot read file: {0}")]
    Read(String),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: u32,
    pub color: ColorName,
    pub pos: [i64; 4],
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum ColorName {
    Black,
    White,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeRecord {
    pub id: u32,
    pub tail: u32,
    pub head: u32,
    pub weight: Value,
    pub lift: [i64; 4],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross_rim: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross_cut: Option<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rim: Option<Vec<[i64; 4]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cut: Option<Vec<[i64; 4]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Vec<u32>>,
}

/// A parsed instance.
#[derive(Clone, Debug)]
pub struct Instance<S> {
    pub name: Option<String>,
    pub graph: ToricGraph<S>,
    /// Whether the file carries an orientation (describes a network).
    pub oriented: bool,
}

fn point(r: &[i64; 4]) -> Result<Point, IoError> {
    if r[1] == 0 || r[3] == 0 {
        return Err(IoError::BadRational(r.to_vec()));
    }
    Ok(Point::from_ratios(r[0], r[1], r[2], r[3]))
}

fn point_record(p: &Point) -> [i64; 4] {
    let part = |x: &num_rational::BigRational| {
        (x.numer().to_i64().expect("coordinate fits in i64"), x.denom().to_i64().expect("coordinate fits in i64"))
    };
    let (a, b) = part(&p.x);
    let (c, d) = part(&p.y);
    [a, b, c, d]
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, IoError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &std::path::Path) -> Result<Self, IoError> {
        let text = std::fs::read_to_string(path).map_err(|e| IoError::Read(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Kind of weight literals in the file; mixed files are rejected.
    pub fn backend(&self) -> Result<Backend, IoError> {
        let mut found = None;
        for e in &self.edges {
            let b = match &e.weight {
                Value::String(_) | Value::Number(_) => Backend::Exact,
                Value::Object(_) => Backend::Float,
                other => return Err(AlgebraError::BadLiteral(other.to_string()).into()),
            };
            match found {
                None => found = Some(b),
                Some(f) if f != b => return Err(AlgebraError::MixedBackend.into()),
                _ => {}
            }
        }
        Ok(found.unwrap_or(Backend::Exact))
    }

    /// Builds the instance over scalar type `S`. Exact literals are accepted
    /// by the floating backend (through the complex embedding); the converse
    /// is an error.
    pub fn build<S: Scalar>(&self) -> Result<Instance<S>, IoError> {
        let found = self.backend()?;
        if found == Backend::Float && S::BACKEND == Backend::Exact {
            return Err(IoError::BackendMismatch { found, wanted: S::BACKEND });
        }
        let vertices = self
            .vertices
            .iter()
            .map(|v| {
                Ok(Vertex {
                    id: v.id,
                    color: match v.color {
                        ColorName::Black => Color::Black,
                        ColorName::White => Color::White,
                    },
                    pos: point(&v.pos)?,
                })
            })
            .collect::<Result<Vec<_>, IoError>>()?;
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let weight = match (&e.weight, found) {
                    (Value::Number(n), _) => S::from_exact(&Cyclo8::parse(&n.to_string())?),
                    (w, Backend::Exact) => S::from_exact(&Cyclo8::parse_literal(w)?),
                    (w, Backend::Float) => S::parse_literal(w)?,
                };
                Ok(Edge {
                    id: e.id,
                    tail: e.tail,
                    head: e.head,
                    weight,
                    lift: point(&e.lift)?,
                    cross_rim: e.cross_rim.unwrap_or(0),
                    cross_cut: e.cross_cut.unwrap_or(0),
                })
            })
            .collect::<Result<Vec<_>, IoError>>()?;
        let curves = match (&self.rim, &self.cut) {
            (Some(r), Some(c)) => Some(CurvePair {
                rim: Curve::new(r.iter().map(point).collect::<Result<_, _>>()?)?,
                cut: Curve::new(c.iter().map(point).collect::<Result<_, _>>()?)?,
            }),
            (None, None) => None,
            _ => return Err(IoError::HalfCurvePair),
        };
        if let Some(o) = &self.orientation {
            let mut ids: Vec<u32> = o.clone();
            ids.sort_unstable();
            let mut all: Vec<u32> = self.edges.iter().map(|e| e.id).collect();
            all.sort_unstable();
            if ids != all {
                return Err(IoError::BadOrientation);
            }
        }
        let graph = ToricGraph::new(vertices, edges, curves)?;
        Ok(Instance { name: self.name.clone(), graph, oriented: self.orientation.is_some() })
    }

    pub fn from_graph<S: Scalar>(g: &ToricGraph<S>, name: Option<String>, oriented: bool) -> Self {
        let curve = |c: &Curve| c.points().iter().map(point_record).collect::<Vec<_>>();
        InstanceFile {
            name,
            vertices: g
                .vertices()
                .iter()
                .map(|v| VertexRecord {
                    id: v.id,
                    color: match v.color {
                        Color::Black => ColorName::Black,
                        Color::White => ColorName::White,
                    },
                    pos: point_record(&v.pos),
                })
                .collect(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeRecord {
                    id: e.id,
                    tail: e.tail,
                    head: e.head,
                    weight: e.weight.to_literal(),
                    lift: point_record(&e.lift),
                    cross_rim: (g.curves().is_none() && e.cross_rim != 0).then_some(e.cross_rim),
                    cross_cut: (g.curves().is_none() && e.cross_cut != 0).then_some(e.cross_cut),
                })
                .collect(),
            rim: g.curves().map(|c| curve(&c.rim)),
            cut: g.curves().map(|c| curve(&c.cut)),
            orientation: oriented.then(|| g.edges().iter().map(|e| e.id).collect()),
        }
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance serializes")
    }
}
