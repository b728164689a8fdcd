//! Reproducible test polygons: small named examples, seeded random convex
//! polygons, and rational approximations of regular polygons.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{validate_polygon, GeometryError, Point, Polygon};
use crate::rational::from_f64_rounded;

/// Denominator used for random circle points.
pub const RANDOM_DENOMINATOR: i64 = 32;

fn from_ints(pts: &[(i64, i64)]) -> Polygon {
    validate_polygon(
        &pts.iter()
            .map(|&(x, y)| Point::from_ints(x, y))
            .collect::<Vec<_>>(),
    )
    .expect("fixture is generic")
}

pub fn unit_square() -> Polygon {
    from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)])
}

/// Convex pentagon with small integer vertices.
pub fn pentagon() -> Polygon {
    from_ints(&[(0, 0), (3, 0), (4, 2), (2, 4), (0, 3)])
}

/// Centrally symmetric hexagon; its alternate alpha products agree.
pub fn hexagon() -> Polygon {
    from_ints(&[(1, 0), (2, 0), (3, 1), (2, 2), (1, 2), (0, 1)])
}

/// A convex generic `d`-gon with vertices on the circle of radius 1,
/// rounded to denominator [`RANDOM_DENOMINATOR`]. Draws are repeated until
/// the polygon validates and is strictly convex; the result depends only on
/// `(d, seed)`.
pub fn random_convex_polygon(d: usize, seed: u64) -> Polygon {
    assert!(d >= 4, "need d >= 4");
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((d as u64) << 32));
    loop {
        let mut angles: Vec<f64> = (0..d).map(|_| rng.gen_range(0.0..TAU)).collect();
        angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let pts: Vec<Point> = angles
            .iter()
            .map(|a| {
                Point::new(
                    from_f64_rounded(a.cos(), RANDOM_DENOMINATOR),
                    from_f64_rounded(a.sin(), RANDOM_DENOMINATOR),
                )
            })
            .collect();
        if let Ok(p) = validate_polygon(&pts) {
            if p.is_convex() {
                return p;
            }
        }
    }
}

/// Vertices `(cos(2 pi k/d), sin(2 pi k/d))` rounded to denominator
/// `denominator`.
pub fn regular_approx_with(d: usize, denominator: i64) -> Result<Polygon, GeometryError> {
    if d < 4 {
        return Err(GeometryError::TooFewVertices(d));
    }
    let pts: Vec<Point> = (0..d)
        .map(|k| {
            let a = TAU * k as f64 / d as f64;
            Point::new(
                from_f64_rounded(a.cos(), denominator),
                from_f64_rounded(a.sin(), denominator),
            )
        })
        .collect();
    validate_polygon(&pts)
}

/// [`regular_approx_with`] at denominator 1000, retrying with 10x larger
/// denominators up to 10^6 if rounding breaks genericity.
pub fn regular_approx(d: usize) -> Result<Polygon, GeometryError> {
    let mut den = 1000;
    loop {
        match regular_approx_with(d, den) {
            Ok(p) => return Ok(p),
            Err(e) if den >= 1_000_000 => return Err(e),
            Err(_) => den *= 10,
        }
    }
}
