//! Exact planar polygons, their cone lift into 3-space, edge normals, the
//! alpha determinants, and the set of external vertices.
//!
//! Public accessors taking an index use 1-based cyclic indexing: `normal(0)`
//! is `normal(d)`, `vertex(d + 1)` is `vertex(1)`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::rational::{self, Rational};

pub type Vec3 = [Rational; 3];

pub fn dot(a: &Vec3, b: &Vec3) -> Rational {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// `|a b c|` with a, b, c as rows.
pub fn det3(a: &Vec3, b: &Vec3, c: &Vec3) -> Rational {
    dot(&cross(a, b), c)
}

/// Maps a 1-based cyclic index to a 0-based slot.
pub(crate) fn slot(i: i64, d: usize) -> usize {
    (i - 1).rem_euclid(d as i64) as usize
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("a polygon needs at least 4 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertices {0} and {1} coincide")]
    DuplicateVertex(usize, usize),
    #[error("vertices {0}, {1}, {2} are collinear, merging two edge lines")]
    DegenerateEdge(usize, usize, usize),
    #[error("edge lines {0}, {1}, {2} meet at a common point")]
    GenericityFailure(usize, usize, usize),
    #[error("polygon has zero signed area")]
    ZeroArea,
    #[error("malformed polygon input: {0}")]
    Parse(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(rational::int(x), rational::int(y))
    }

    /// The lifted ray `(x, y, 1)`.
    pub fn lift(&self) -> Vec3 {
        [self.x.clone(), self.y.clone(), rational::int(1)]
    }

    pub fn to_f64(&self) -> [f64; 2] {
        [rational::to_f64(&self.x), rational::to_f64(&self.y)]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {})",
            rational::format(&self.x),
            rational::format(&self.y)
        )
    }
}

/// Turn of the path a -> b -> c: `(b - a) x (c - b)`.
fn turn(a: &Point, b: &Point, c: &Point) -> Rational {
    (&b.x - &a.x) * (&c.y - &b.y) - (&b.y - &a.y) * (&c.x - &b.x)
}

/// A validated generic polygon, oriented counterclockwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    vertices: Vec<Point>,
    convex: bool,
    reoriented: bool,
}

impl Polygon {
    pub fn d(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// 1-based cyclic.
    pub fn vertex(&self, i: i64) -> &Point {
        &self.vertices[slot(i, self.d())]
    }

    /// Strictly convex. Non-convex generic polygons are accepted but the
    /// positivity of the coordinates does not hold for them.
    pub fn is_convex(&self) -> bool {
        self.convex
    }

    /// True when the input was clockwise and has been reversed.
    pub fn was_reoriented(&self) -> bool {
        self.reoriented
    }

    pub fn vertices_f64(&self) -> Vec<[f64; 2]> {
        self.vertices.iter().map(Point::to_f64).collect()
    }

    pub fn to_json(&self) -> PolygonJson {
        PolygonJson::from_points(&self.vertices)
    }
}

/// Validates a vertex list and normalizes it to counterclockwise order.
///
/// Reversal keeps the first vertex in place (`v1, vd, ..., v2`). Error indices
/// refer to the caller's input order, 1-based.
pub fn validate_polygon(vertices: &[Point]) -> Result<Polygon, GeometryError> {
    let d = vertices.len();
    if d < 4 {
        return Err(GeometryError::TooFewVertices(d));
    }
    for i in 0..d {
        for j in i + 1..d {
            if vertices[i] == vertices[j] {
                return Err(GeometryError::DuplicateVertex(i + 1, j + 1));
            }
        }
    }
    for i in 0..d {
        let (a, b, c) = (&vertices[i], &vertices[(i + 1) % d], &vertices[(i + 2) % d]);
        if turn(a, b, c).is_zero() {
            return Err(GeometryError::DegenerateEdge(
                i + 1,
                (i + 1) % d + 1,
                (i + 2) % d + 1,
            ));
        }
    }
    let twice_area = (0..d).fold(Rational::zero(), |acc, i| {
        let (a, b) = (&vertices[i], &vertices[(i + 1) % d]);
        acc + &a.x * &b.y - &a.y * &b.x
    });
    if twice_area.is_zero() {
        return Err(GeometryError::ZeroArea);
    }
    let reoriented = twice_area.is_negative();
    // input position (0-based) of each ccw slot
    let order: Vec<usize> = if reoriented {
        std::iter::once(0).chain((1..d).rev()).collect()
    } else {
        (0..d).collect()
    };
    let ccw: Vec<Point> = order.iter().map(|&k| vertices[k].clone()).collect();

    let lifted: Vec<Vec3> = ccw.iter().map(Point::lift).collect();
    let normals: Vec<Vec3> = (0..d)
        .map(|i| cross(&lifted[i], &lifted[(i + 1) % d]))
        .collect();
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                if det3(&normals[i], &normals[j], &normals[k]).is_zero() {
                    let mut e = [
                        edge_label(&order, i),
                        edge_label(&order, j),
                        edge_label(&order, k),
                    ];
                    e.sort_unstable();
                    return Err(GeometryError::GenericityFailure(e[0], e[1], e[2]));
                }
            }
        }
    }

    // strict convexity: every vertex off edge j lies strictly to its left
    let convex = (0..d).all(|j| {
        (0..d)
            .filter(|&i| i != j && i != (j + 1) % d)
            .all(|i| dot(&normals[j], &lifted[i]).is_positive())
    });

    Ok(Polygon {
        vertices: ccw,
        convex,
        reoriented,
    })
}

/// Names the ccw edge starting at slot `i` by the input index (1-based) of
/// its start vertex.
fn edge_label(order: &[usize], i: usize) -> usize {
    order[i] + 1
}

/// The cone over the polygon: lifted vertices, edge normals, alphas.
#[derive(Clone, Debug)]
pub struct ConeData {
    lifted: Vec<Vec3>,
    normals: Vec<Vec3>,
    alphas: Vec<Rational>,
    convex: bool,
}

pub fn cone_data(polygon: &Polygon) -> ConeData {
    let d = polygon.d();
    let lifted: Vec<Vec3> = polygon.vertices.iter().map(Point::lift).collect();
    let normals: Vec<Vec3> = (0..d)
        .map(|i| cross(&lifted[i], &lifted[(i + 1) % d]))
        .collect();
    let alphas = (0..d)
        .map(|i| det3(&lifted[(i + d - 1) % d], &lifted[i], &lifted[(i + 1) % d]))
        .collect();
    ConeData {
        lifted,
        normals,
        alphas,
        convex: polygon.convex,
    }
}

impl ConeData {
    pub fn d(&self) -> usize {
        self.lifted.len()
    }

    /// Lifted vertex `(v_i, 1)`, 1-based cyclic.
    pub fn lifted(&self, i: i64) -> &Vec3 {
        &self.lifted[slot(i, self.d())]
    }

    /// Edge normal `v_i x v_{i+1}`, 1-based cyclic.
    pub fn normal(&self, i: i64) -> &Vec3 {
        &self.normals[slot(i, self.d())]
    }

    /// `|v_{i-1} v_i v_{i+1}|`, 1-based cyclic.
    pub fn alpha(&self, i: i64) -> &Rational {
        &self.alphas[slot(i, self.d())]
    }

    pub fn lifted_all(&self) -> &[Vec3] {
        &self.lifted
    }

    pub fn normals_all(&self) -> &[Vec3] {
        &self.normals
    }

    pub fn alphas_all(&self) -> &[Rational] {
        &self.alphas
    }

    pub fn is_convex(&self) -> bool {
        self.convex
    }
}

/// A point of the projective plane in coprime-integer canonical form, first
/// nonzero coordinate positive.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint([BigInt; 3]);

impl ProjPoint {
    /// `None` for the zero vector.
    pub fn from_vec3(v: &Vec3) -> Option<Self> {
        if v.iter().all(Zero::is_zero) {
            return None;
        }
        let factor = rational::primitive_integer_scaling(v);
        let coords = [
            (&v[0] * &factor).to_integer(),
            (&v[1] * &factor).to_integer(),
            (&v[2] * &factor).to_integer(),
        ];
        Some(ProjPoint(coords))
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Option<Self> {
        Self::from_vec3(&[rational::int(x), rational::int(y), rational::int(z)])
    }

    pub fn coords(&self) -> &[BigInt; 3] {
        &self.0
    }

    pub fn to_vec3(&self) -> Vec3 {
        [
            Rational::from_integer(self.0[0].clone()),
            Rational::from_integer(self.0[1].clone()),
            Rational::from_integer(self.0[2].clone()),
        ]
    }

    #[cfg(test)]
    fn is_canonical(&self) -> bool {
        use num_integer::Integer;
        let g = self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let first = self.0.iter().find(|c| !c.is_zero());
        g == BigInt::from(1) && first.map_or(false, |c| c.is_positive())
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.0[0], self.0[1], self.0[2])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExternalVertex {
    pub point: ProjPoint,
    /// The two edge lines through the point, 1-based, `i < j`.
    pub lines: (usize, usize),
}

#[derive(Clone, Debug)]
pub struct ExternalVertexSet {
    pub vertices: Vec<ExternalVertex>,
}

impl ExternalVertexSet {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn points(&self) -> impl Iterator<Item = &ProjPoint> {
        self.vertices.iter().map(|v| &v.point)
    }
}

/// Pairwise intersections of the edge lines, minus the polygon's vertices.
pub fn external_vertices(cone: &ConeData) -> Result<ExternalVertexSet, GeometryError> {
    let d = cone.d();
    let polygon_vertices: BTreeSet<ProjPoint> = cone
        .lifted
        .iter()
        .filter_map(ProjPoint::from_vec3)
        .collect();
    let mut vertices = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let v = cross(&cone.normals[i], &cone.normals[j]);
            let Some(p) = ProjPoint::from_vec3(&v) else {
                return Err(GeometryError::GenericityFailure(i + 1, j + 1, j + 1));
            };
            if polygon_vertices.contains(&p) {
                continue;
            }
            let pv = p.to_vec3();
            if let Some(k) =
                (0..d).find(|&k| k != i && k != j && dot(&cone.normals[k], &pv).is_zero())
            {
                let mut e = [i + 1, j + 1, k + 1];
                e.sort_unstable();
                return Err(GeometryError::GenericityFailure(e[0], e[1], e[2]));
            }
            vertices.push(ExternalVertex {
                point: p,
                lines: (i + 1, j + 1),
            });
        }
    }
    Ok(ExternalVertexSet { vertices })
}

/// On-disk polygon: `{"vertices": [["0","0"], ["1","0"], ...]}` with each
/// coordinate an integer or `p/q` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonJson {
    pub vertices: Vec<[String; 2]>,
}

impl PolygonJson {
    pub fn from_points(points: &[Point]) -> Self {
        PolygonJson {
            vertices: points
                .iter()
                .map(|p| [rational::format(&p.x), rational::format(&p.y)])
                .collect(),
        }
    }

    pub fn points(&self) -> Result<Vec<Point>, GeometryError> {
        self.vertices
            .iter()
            .map(|[x, y]| {
                let x = rational::parse(x).map_err(|e| GeometryError::Parse(e.to_string()))?;
                let y = rational::parse(y).map_err(|e| GeometryError::Parse(e.to_string()))?;
                Ok(Point::new(x, y))
            })
            .collect()
    }

    pub fn parse(text: &str) -> Result<Self, GeometryError> {
        serde_json::from_str(text).map_err(|e| GeometryError::Parse(e.to_string()))
    }

    /// One vertex per line.
    pub fn to_string_pretty(&self) -> String {
        let rows: Vec<String> = self
            .vertices
            .iter()
            .map(|[x, y]| format!("    [{}, {}]", serde_json::json!(x), serde_json::json!(y)))
            .collect();
        format!("{{\n  \"vertices\": [\n{}\n  ]\n}}\n", rows.join(",\n"))
    }
}

/// Parses and validates a polygon JSON document.
pub fn polygon_from_json(text: &str) -> Result<Polygon, GeometryError> {
    validate_polygon(&PolygonJson::parse(text)?.points()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(x, y)| Point::from_ints(x, y)).collect()
    }

    fn square() -> Polygon {
        validate_polygon(&pts(&[(0, 0), (1, 0), (1, 1), (0, 1)])).unwrap()
    }

    fn v3(a: i64, b: i64, c: i64) -> Vec3 {
        [int(a), int(b), int(c)]
    }

    #[test]
    fn unit_square_is_valid_convex() {
        let p = square();
        assert_eq!(p.d(), 4);
        assert!(p.is_convex());
        assert!(!p.was_reoriented());
    }

    #[test]
    fn collinear_triple_is_degenerate_edge() {
        let err = validate_polygon(&pts(&[(0, 0), (1, 0), (2, 0), (1, 1)])).unwrap_err();
        assert_eq!(err, GeometryError::DegenerateEdge(1, 2, 3));
    }

    #[test]
    fn duplicate_vertex_is_named() {
        let err = validate_polygon(&pts(&[(0, 0), (1, 0), (1, 1), (1, 0), (0, 1)])).unwrap_err();
        assert_eq!(err, GeometryError::DuplicateVertex(2, 4));
    }

    #[test]
    fn too_few_vertices() {
        assert_eq!(
            validate_polygon(&pts(&[(0, 0), (1, 0), (0, 1)])).unwrap_err(),
            GeometryError::TooFewVertices(3)
        );
    }

    #[test]
    fn hexagon_fixture_is_convex() {
        let p = validate_polygon(&pts(&[(1, 0), (2, 0), (3, 1), (2, 2), (1, 2), (0, 1)])).unwrap();
        assert_eq!(p.d(), 6);
        assert!(p.is_convex());
    }

    #[test]
    fn clockwise_input_is_reversed_keeping_first_vertex() {
        let p = validate_polygon(&pts(&[(0, 0), (0, 1), (1, 1), (1, 0)])).unwrap();
        assert!(p.was_reoriented());
        assert_eq!(p.vertices(), square().vertices());
    }

    #[test]
    fn three_mutually_parallel_edges_are_not_generic() {
        // L-shape: three horizontal edge lines meet at (1:0:0)
        let err = validate_polygon(&pts(&[(0, 0), (6, 0), (6, 1), (4, 1), (4, 2), (0, 2)]));
        assert!(
            matches!(err, Err(GeometryError::GenericityFailure(..))),
            "{err:?}"
        );
    }

    #[test]
    fn three_concurrent_edge_lines_fail() {
        // edge lines y = 0, y = x and x = 0 all pass through the origin
        let err =
            validate_polygon(&pts(&[(1, 0), (5, 0), (5, 5), (2, 2), (0, 3), (0, 1)])).unwrap_err();
        assert_eq!(err, GeometryError::GenericityFailure(1, 3, 5));
    }

    #[test]
    fn unit_square_normals_and_alphas() {
        let c = cone_data(&square());
        assert_eq!(c.normal(1), &v3(0, 1, 0));
        assert_eq!(c.normal(2), &v3(-1, 0, 1));
        assert_eq!(c.normal(3), &v3(0, -1, 1));
        assert_eq!(c.normal(4), &v3(1, 0, 0));
        for i in 1..=4 {
            assert_eq!(c.alpha(i), &int(1));
        }
        assert_eq!(c.normal(0), c.normal(4));
    }

    #[test]
    fn normals_vanish_on_their_edge() {
        let p = validate_polygon(&pts(&[(1, 0), (2, 0), (3, 1), (2, 2), (1, 2), (0, 1)])).unwrap();
        let c = cone_data(&p);
        for i in 1..=6 {
            assert!(dot(c.normal(i), c.lifted(i)).is_zero());
            assert!(dot(c.normal(i), c.lifted(i + 1)).is_zero());
            assert!(c.alpha(i).is_positive());
        }
    }

    #[test]
    fn unit_square_external_vertices_at_infinity() {
        let y = external_vertices(&cone_data(&square())).unwrap();
        let got: BTreeSet<_> = y.points().cloned().collect();
        let want: BTreeSet<_> = [
            ProjPoint::from_ints(1, 0, 0).unwrap(),
            ProjPoint::from_ints(0, 1, 0).unwrap(),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
        let lines: BTreeSet<_> = y.vertices.iter().map(|v| v.lines).collect();
        assert_eq!(lines, [(1, 3), (2, 4)].into_iter().collect());
    }

    #[test]
    fn hexagon_has_nine_external_vertices() {
        let p = validate_polygon(&pts(&[(1, 0), (2, 0), (3, 1), (2, 2), (1, 2), (0, 1)])).unwrap();
        assert_eq!(external_vertices(&cone_data(&p)).unwrap().len(), 9);
    }

    #[test]
    fn projpoint_canonical_form() {
        let p =
            ProjPoint::from_vec3(&[rational::ratio(-1, 2), int(0), rational::ratio(3, 4)]).unwrap();
        assert_eq!(
            p.coords(),
            &[BigInt::from(2), BigInt::from(0), BigInt::from(-3)]
        );
        assert!(p.is_canonical());
        assert!(ProjPoint::from_ints(0, 0, 0).is_none());
    }

    #[test]
    fn polygon_json_round_trip() {
        let text = r#"{"vertices": [["0","0"],["2/2","0"],["1","1"],["0","3/3"]]}"#;
        let p = polygon_from_json(text).unwrap();
        assert_eq!(p, square());
        let out = p.to_json();
        assert_eq!(out.vertices[1], ["1".to_string(), "0".to_string()]);
        assert!(matches!(
            polygon_from_json("{\"vertices\": [[\"a\",\"0\"]]}"),
            Err(GeometryError::Parse(_))
        ));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn canonicalization_is_idempotent_and_scale_invariant(
                a in -50i64..50, b in -50i64..50, c in -50i64..50, s in 1i64..20, t in 1i64..7, neg in any::<bool>()
            ) {
                prop_assume!(a != 0 || b != 0 || c != 0);
                let v = v3(a, b, c);
                let p = ProjPoint::from_vec3(&v).unwrap();
                prop_assert!(p.is_canonical());
                prop_assert_eq!(ProjPoint::from_vec3(&p.to_vec3()).unwrap(), p.clone());
                let mut k = rational::ratio(s, t);
                if neg { k = -k; }
                let scaled = [&v[0] * &k, &v[1] * &k, &v[2] * &k];
                prop_assert_eq!(ProjPoint::from_vec3(&scaled).unwrap(), p);
            }
        }
    }
}
