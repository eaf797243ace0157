//! Built-in instances and seeded random generators.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Cyclo8, Scalar};
use crate::io::InstanceFile;
use crate::torus::geometry::q;
use crate::torus::{Color, Curve, CurvePair, Edge, Point, ToricGraph, Vertex};

/// Instance files shipped with the crate, by file name.
pub const BUNDLED: &[(&str, &str)] = &[
    ("example1.json", include_str!("../instances/example1.json")),
    ("example1_switched.json", include_str!("../instances/example1_switched.json")),
    ("grid4x2_sg.json", include_str!("../instances/grid4x2_sg.json")),
    ("grid4x4_sg2.json", include_str!("../instances/grid4x4_sg2.json")),
];

pub fn bundled(name: &str) -> Option<InstanceFile> {
    BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| InstanceFile::parse(text).expect("bundled instance parses"))
}

fn pt(xn: i64, xd: i64, yn: i64, yd: i64) -> Point {
    Point::from_ratios(xn, xd, yn, yd)
}

fn edge<S>(id: u32, tail: u32, head: u32, weight: S, lift: Point) -> Edge<S> {
    Edge { id, tail, head, weight, lift, cross_rim: 0, cross_cut: 0 }
}

/// The four-vertex network with two black and two white vertices and six
/// edges; edge `k` carries weight `w[k - 1]`. Stored directions are the
/// perfect orientation. With `switched`, the roles of the two basis curves
/// are exchanged.
pub fn example1<S: Scalar>(w: &[S; 6], switched: bool) -> ToricGraph<S> {
    // 0 = black (1/3,1/3), 1 = white (1/3,2/3), 2 = white (2/3,1/3), 3 = black (2/3,2/3)
    let vertices = vec![
        Vertex { id: 0, color: Color::Black, pos: pt(1, 3, 1, 3) },
        Vertex { id: 1, color: Color::White, pos: pt(1, 3, 2, 3) },
        Vertex { id: 2, color: Color::White, pos: pt(2, 3, 1, 3) },
        Vertex { id: 3, color: Color::Black, pos: pt(2, 3, 2, 3) },
    ];
    let edges = vec![
        edge(1, 1, 0, w[0].clone(), pt(0, 1, 2, 3)),
        edge(2, 1, 0, w[1].clone(), pt(0, 1, -1, 3)),
        edge(3, 1, 3, w[2].clone(), pt(1, 3, 0, 1)),
        edge(4, 0, 2, w[3].clone(), pt(1, 3, 0, 1)),
        edge(5, 3, 1, w[4].clone(), pt(2, 3, 0, 1)),
        edge(6, 2, 0, w[5].clone(), pt(2, 3, 0, 1)),
    ];
    let curves = if switched {
        CurvePair {
            rim: Curve::new(vec![pt(3, 2, 0, 1), pt(1, 2, 0, 1)]).unwrap(),
            cut: Curve::new(vec![pt(0, 1, 1, 2), pt(0, 1, 3, 2)]).unwrap(),
        }
    } else {
        CurvePair {
            rim: Curve::new(vec![pt(0, 1, 1, 2), pt(0, 1, 3, 2)]).unwrap(),
            cut: Curve::new(vec![pt(1, 2, 0, 1), pt(3, 2, 0, 1)]).unwrap(),
        }
    };
    ToricGraph::new(vertices, edges, Some(curves)).expect("example is well formed")
}

pub fn example1_exact(x: [i64; 6], switched: bool) -> ToricGraph<Cyclo8> {
    example1(&x.map(Cyclo8::from_int), switched)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridPattern {
    /// Every row runs left to right; vertical edges run white to black.
    Parallel,
    /// Rows alternate direction, starting left to right at the bottom;
    /// vertical edges run white to black.
    Alternating,
}

/// A `w` by `h` square grid on the torus (both even), vertex `(c, r)` at
/// `((2c+1)/2w, (2r+1)/2h)`, white when `c + r` is even. The horizontal edge
/// leaving `(c, r)` has id `2 (r w + c)`, the vertical one `2 (r w + c) + 1`.
/// Weights come from `weight(edge id)`. Rim is the line `x = 0` pointing up,
/// cut the line `y = 0` pointing right.
pub fn square_grid<S: Scalar>(w: usize, h: usize, pattern: GridPattern, mut weight: impl FnMut(u32) -> S) -> ToricGraph<S> {
    assert!(w >= 2 && h >= 2 && w % 2 == 0 && h % 2 == 0, "grid sides must be even and at least 2");
    let (wi, hi) = (w as i64, h as i64);
    let vid = |c: usize, r: usize| (r * w + c) as u32;
    let white = |c: usize, r: usize| (c + r) % 2 == 0;
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for r in 0..h {
        for c in 0..w {
            vertices.push(Vertex {
                id: vid(c, r),
                color: if white(c, r) { Color::White } else { Color::Black },
                pos: pt(2 * c as i64 + 1, 2 * wi, 2 * r as i64 + 1, 2 * hi),
            });
            let base = 2 * vid(c, r);
            let right = match pattern {
                GridPattern::Parallel => true,
                GridPattern::Alternating => r % 2 == 0,
            };
            let (a, b) = (vid(c, r), vid((c + 1) % w, r));
            let hl = pt(1, wi, 0, 1);
            edges.push(if right {
                edge(base, a, b, weight(base), hl)
            } else {
                edge(base, b, a, weight(base), -&hl)
            });
            let (a, b) = (vid(c, r), vid(c, (r + 1) % h));
            let vl = pt(0, 1, 1, hi);
            edges.push(if white(c, r) {
                edge(base + 1, a, b, weight(base + 1), vl)
            } else {
                edge(base + 1, b, a, weight(base + 1), -&vl)
            });
        }
    }
    let off_x = q(1, 4 * wi);
    let off_y = q(1, 4 * hi);
    let one = q(1, 1);
    let zero = q(0, 1);
    let curves = CurvePair {
        rim: Curve::new(vec![Point::new(zero.clone(), off_y.clone()), Point::new(zero.clone(), &off_y + &one)]).unwrap(),
        cut: Curve::new(vec![Point::new(off_x.clone(), zero.clone()), Point::new(&off_x + &one, zero)]).unwrap(),
    };
    ToricGraph::new(vertices, edges, Some(curves)).expect("grid is well formed")
}

/// Random positive rational `p / q` with `1 <= p, q <= max`.
pub fn random_positive(rng: &mut ChaCha8Rng, max: i64) -> Cyclo8 {
    let p = rng.gen_range(1..=max);
    let d = rng.gen_range(1..=max);
    Cyclo8::from_rational(num_rational::BigRational::new(p.into(), d.into()))
}

/// Random weights for every edge of `g`.
pub fn randomize_weights(g: &ToricGraph<Cyclo8>, rng: &mut ChaCha8Rng, max: i64) -> ToricGraph<Cyclo8> {
    let w: Vec<Cyclo8> = g.edges().iter().map(|_| random_positive(rng, max)).collect();
    g.with_weights(&w)
}

/// Moves every vertex of a grid by a random offset of size at most `eps`
/// (a rational with denominator `den`), keeping lifts consistent.
pub fn perturb<S: Scalar>(g: &ToricGraph<S>, rng: &mut ChaCha8Rng, den: i64, max_num: i64) -> ToricGraph<S> {
    let (vertices, edges, curves) = g.clone().into_parts();
    let mut moved = Vec::with_capacity(vertices.len());
    for v in &vertices {
        let dx = q(rng.gen_range(-max_num..=max_num), den);
        let dy = q(rng.gen_range(-max_num..=max_num), den);
        moved.push(Vertex { id: v.id, color: v.color, pos: Point::new(&v.pos.x + &dx, &v.pos.y + &dy) });
    }
    let find = |id: u32| moved.iter().find(|v| v.id == id).unwrap().pos.clone();
    let orig = |id: u32| vertices.iter().find(|v| v.id == id).unwrap().pos.clone();
    let edges = edges
        .into_iter()
        .map(|mut e| {
            let shift = &(&find(e.head) - &orig(e.head)) - &(&find(e.tail) - &orig(e.tail));
            e.lift = &e.lift + &shift;
            e.cross_rim = 0;
            e.cross_cut = 0;
            e
        })
        .collect();
    ToricGraph::new(moved, edges, curves).expect("perturbed grid stays transversal")
}
