//! Wachspress coordinates: edge forms, numerators, adjoints, the pullback
//! along the Wachspress map, and floating-point evaluation for deformation.
//!
//! All symbolic work is homogeneous in `x, y, z`; affine evaluation sets
//! `z = 1`.

use std::sync::Arc;

use num_bigint::BigInt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::geometry::{det3, slot, ConeData, Point, Polygon, Vec3};
use crate::polyring::{Poly, PolyError, VarSet};
use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CoordError {
    #[error("simplex ({0}, {1}, {2}) has zero volume")]
    DegenerateSimplex(usize, usize, usize),
    #[error("triangulation references ray {0} but there are {1} rays")]
    BadTriangulation(usize, usize),
    #[error("coordinate denominator vanishes at ({0}, {1})")]
    DenominatorNearZero(f64, f64),
    #[error("polygon needs at least 4 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertices {0} and {1} coincide")]
    RepeatedVertex(usize, usize),
    #[error("polygon has (numerically) zero area")]
    ZeroArea,
    #[error("non-finite coordinate in input")]
    NonFinite,
    #[error("expected {expected} target vertices, got {got}")]
    LengthMismatch { expected: usize, got: usize },
}

/// `l_1, ..., l_d` with `l_j = n_j . (x, y, z)`.
#[derive(Clone, Debug)]
pub struct EdgeForms {
    forms: Vec<Poly>,
}

impl EdgeForms {
    /// 1-based cyclic.
    pub fn get(&self, j: i64) -> &Poly {
        &self.forms[slot(j, self.forms.len())]
    }

    pub fn all(&self) -> &[Poly] {
        &self.forms
    }
}

pub fn edge_forms(cone: &ConeData) -> EdgeForms {
    let r = VarSet::plane();
    EdgeForms {
        forms: cone
            .normals_all()
            .iter()
            .map(|n| Poly::linear(&r, n))
            .collect(),
    }
}

/// The numerators `b_i` and the product `A` of all edge forms.
#[derive(Clone, Debug)]
pub struct Numerators {
    b: Vec<Poly>,
    product: Poly,
}

impl Numerators {
    /// 1-based cyclic.
    pub fn get(&self, i: i64) -> &Poly {
        &self.b[slot(i, self.b.len())]
    }

    pub fn all(&self) -> &[Poly] {
        &self.b
    }

    /// `A = l_1 ... l_d`.
    pub fn product(&self) -> &Poly {
        &self.product
    }

    /// The common denominator `sum_i b_i`.
    pub fn denominator(&self) -> Poly {
        let mut acc = Poly::zero(self.product.vars());
        for b in &self.b {
            acc = &acc + b;
        }
        acc
    }

    pub fn ring(&self) -> &Arc<VarSet> {
        self.product.vars()
    }

    /// Replaces `b_i` (1-based); used to build negative controls.
    pub fn with_replaced(&self, i: i64, b: Poly) -> Numerators {
        let mut out = self.clone();
        let k = slot(i, out.b.len());
        out.b[k] = b;
        out
    }
}

/// `b_i = alpha_i * prod_{j not in {i-1, i}} l_j`.
pub fn numerators(cone: &ConeData) -> Numerators {
    let d = cone.d();
    let forms = edge_forms(cone);
    let r = forms.forms[0].vars().clone();
    let b = (1..=d as i64)
        .map(|i| {
            let skip = [slot(i - 1, d), slot(i, d)];
            let mut p = Poly::constant(&r, cone.alpha(i).clone());
            for (j, l) in forms.forms.iter().enumerate() {
                if !skip.contains(&j) {
                    p = &p * l;
                }
            }
            p
        })
        .collect();
    let product = forms.forms.iter().fold(Poly::one(&r), |acc, l| &acc * l);
    Numerators { b, product }
}

/// Triangulation of a polygonal cone by triples of ray indices (0-based,
/// each triple in cyclic order so its determinant is positive for a convex
/// counterclockwise cone).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    rays: usize,
    simplices: Vec<[usize; 3]>,
}

impl Triangulation {
    /// Fan from ray `apex` (0-based).
    pub fn fan(rays: usize, apex: usize) -> Self {
        let simplices = (1..rays - 1)
            .map(|k| {
                let mut t = [apex, (apex + k) % rays, (apex + k + 1) % rays];
                t.sort_unstable();
                t
            })
            .collect();
        Triangulation { rays, simplices }
    }

    /// Zig-zag strip alternating between the two ends of the ray list.
    pub fn snake(rays: usize) -> Self {
        let (mut lo, mut hi) = (0, rays - 1);
        let mut simplices = Vec::new();
        let mut left = true;
        while hi - lo >= 2 {
            if left {
                simplices.push([lo, lo + 1, hi]);
                lo += 1;
            } else {
                simplices.push([lo, hi - 1, hi]);
                hi -= 1;
            }
            left = !left;
        }
        Triangulation { rays, simplices }
    }

    pub fn new(rays: usize, simplices: Vec<[usize; 3]>) -> Result<Self, CoordError> {
        for s in &simplices {
            for &i in s {
                if i >= rays {
                    return Err(CoordError::BadTriangulation(i, rays));
                }
            }
        }
        Ok(Triangulation { rays, simplices })
    }

    pub fn rays(&self) -> usize {
        self.rays
    }

    pub fn simplices(&self) -> &[[usize; 3]] {
        &self.simplices
    }
}

/// `sum_S |r_i r_j r_k| * prod_{r not in S} (r . p)`.
pub fn adjoint(rays: &[Vec3], t: &Triangulation) -> Result<Poly, CoordError> {
    if t.rays != rays.len() {
        return Err(CoordError::BadTriangulation(t.rays, rays.len()));
    }
    let r = VarSet::plane();
    let forms: Vec<Poly> = rays.iter().map(|v| Poly::linear(&r, v)).collect();
    let mut acc = Poly::zero(&r);
    for s in &t.simplices {
        let a = det3(&rays[s[0]], &rays[s[1]], &rays[s[2]]);
        if a.is_zero() {
            return Err(CoordError::DegenerateSimplex(s[0] + 1, s[1] + 1, s[2] + 1));
        }
        let mut term = Poly::constant(&r, a);
        for (k, f) in forms.iter().enumerate() {
            if !s.contains(&k) {
                term = &term * f;
            }
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Adjoint of the dual cone (rays `n_1, ..., n_d`), fan from `n_1`.
pub fn dual_adjoint(cone: &ConeData) -> Poly {
    adjoint(cone.normals_all(), &Triangulation::fan(cone.d(), 0))
        .expect("generic polygon has nondegenerate dual fan")
}

/// `F(b_1, ..., b_d)`.
pub fn pullback(f: &Poly, nums: &Numerators) -> Result<Poly, PolyError> {
    f.substitute(&nums.b)
}

/// Values of `(b_1, ..., b_d)` at the grid points `(i, j, 1)`,
/// `0 <= i, j <= m (d - 2)`, each vector scaled by a positive constant to be
/// integral.
///
/// A form `f` of degree at most `m` has `f(b) = 0` iff `f` vanishes at every
/// returned vector: `f(b)(x, y, 1)` has degree at most `m (d - 2)` in each
/// variable, so vanishing on the grid forces it to be zero, and scaling
/// changes a value of a homogeneous `f` only by a nonzero factor.
pub fn pullback_grid(nums: &Numerators, m: u32) -> Vec<Vec<BigInt>> {
    let span = m * (nums.b.len() as u32 - 2).max(1);
    let mut out = Vec::new();
    for i in 0..=span {
        for j in 0..=span {
            let p = [
                Rational::from_integer(i.into()),
                Rational::from_integer(j.into()),
                Rational::one(),
            ];
            let vals: Vec<Rational> = nums.b.iter().map(|b| b.eval(&p)).collect();
            let den = vals.iter().fold(BigInt::one(), |l, v| {
                num_integer::Integer::lcm(&l, v.denom())
            });
            out.push(
                vals.iter()
                    .map(|v| v.numer() * (&den / v.denom()))
                    .collect(),
            );
        }
    }
    out
}

/// Value of the monomial with exponents `exps` at `point`.
pub fn monomial_value(exps: &[u16], point: &[BigInt]) -> BigInt {
    exps.iter().zip(point).fold(BigInt::one(), |acc, (&e, x)| {
        if e == 0 {
            acc
        } else {
            acc * num_traits::pow(x.clone(), e as usize)
        }
    })
}

/// Decides `f(b) = 0` for each homogeneous `f` without expanding the
/// substitution, by evaluation on [`pullback_grid`].
pub fn pullback_vanishes(fs: &[&Poly], nums: &Numerators) -> Vec<bool> {
    let integral: Vec<Vec<(Vec<u16>, BigInt)>> = fs
        .iter()
        .map(|f| {
            f.primitive()
                .terms()
                .map(|(m, c)| (m.exps().to_vec(), c.numer().clone()))
                .collect()
        })
        .collect();
    let max_deg = fs
        .iter()
        .map(|f| f.degree().unwrap_or(0))
        .max()
        .unwrap_or(0);
    let mut alive = vec![true; fs.len()];
    for point in pullback_grid(nums, max_deg) {
        for (k, terms) in integral.iter().enumerate() {
            if alive[k] {
                alive[k] = terms
                    .iter()
                    .map(|(e, c)| c * monomial_value(e, &point))
                    .sum::<BigInt>()
                    .is_zero();
            }
        }
    }
    alive
}

/// Checks `z * sum_i b_i v_i = (sum_i b_i) * (x, y, z)` componentwise, the
/// homogeneous form of `sum_i beta_i v_i = p`.
pub fn linear_precision_check(cone: &ConeData, nums: &Numerators) -> bool {
    let r = nums.ring().clone();
    let denom = nums.denominator();
    let z = Poly::var(&r, 2);
    (0..3).all(|c| {
        let mut lhs = Poly::zero(&r);
        for (b, v) in nums.b.iter().zip(cone.lifted_all()) {
            lhs = &lhs + &b.scale(&v[c]);
        }
        &z * &lhs == &denom * &Poly::var(&r, c)
    })
}

/// The scalar `lambda` with `sum_i b_i = lambda * z * A*`, where `A*` is the
/// dual-cone adjoint, or `None` if no such scalar exists.
pub fn denominator_adjoint_scalar(cone: &ConeData, nums: &Numerators) -> Option<Rational> {
    let denom = nums.denominator();
    let r = nums.ring().clone();
    let za = &Poly::var(&r, 2) * &dual_adjoint(cone);
    let (m, c) = za.leading_term()?;
    let lambda = denom.coefficient(m) / c;
    if lambda.is_zero() || denom != za.scale(&lambda) {
        return None;
    }
    Some(lambda)
}

/// Exact Wachspress coordinates of the affine point `p`.
pub fn eval_exact(nums: &Numerators, p: &Point) -> Option<Vec<Rational>> {
    let pt = p.lift();
    let vals: Vec<Rational> = nums.b.iter().map(|b| b.eval(&pt)).collect();
    let s: Rational = vals.iter().sum();
    if s.is_zero() {
        return None;
    }
    Some(vals.into_iter().map(|v| v / &s).collect())
}

/// Outcome of checking a floating-point polygon before evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatPolygonInfo {
    pub convex: bool,
    pub counterclockwise: bool,
}

/// Rejects polygons that cannot carry coordinates: fewer than 4 vertices,
/// non-finite entries, repeated vertices (within 1e-12), or zero area.
/// Convexity is judged with a 1e-9 cross-product tolerance.
pub fn check_float_polygon(vertices: &[[f64; 2]]) -> Result<FloatPolygonInfo, CoordError> {
    let d = vertices.len();
    if d < 4 {
        return Err(CoordError::TooFewVertices(d));
    }
    if vertices.iter().flatten().any(|v| !v.is_finite()) {
        return Err(CoordError::NonFinite);
    }
    for i in 0..d {
        for j in i + 1..d {
            let (a, b) = (vertices[i], vertices[j]);
            if (a[0] - b[0]).abs() <= 1e-12 && (a[1] - b[1]).abs() <= 1e-12 {
                return Err(CoordError::RepeatedVertex(i + 1, j + 1));
            }
        }
    }
    let area2: f64 = (0..d)
        .map(|i| {
            let (a, b) = (vertices[i], vertices[(i + 1) % d]);
            a[0] * b[1] - a[1] * b[0]
        })
        .sum();
    if area2.abs() <= 1e-12 {
        return Err(CoordError::ZeroArea);
    }
    let sign = area2.signum();
    let convex = (0..d).all(|i| {
        let (a, b, c) = (vertices[i], vertices[(i + 1) % d], vertices[(i + 2) % d]);
        let t = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
        sign * t > 1e-9
    });
    Ok(FloatPolygonInfo {
        convex,
        counterclockwise: sign > 0.0,
    })
}

fn cross3(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Precomputed edge normals and alphas of a floating-point polygon.
#[derive(Clone, Debug)]
pub struct NumericCoordinates {
    normals: Vec<[f64; 3]>,
    alphas: Vec<f64>,
}

impl NumericCoordinates {
    /// Orientation does not matter: reversing the vertex order scales every
    /// numerator by the same sign.
    pub fn new(vertices: &[[f64; 2]]) -> Self {
        let d = vertices.len();
        let lifted: Vec<[f64; 3]> = vertices.iter().map(|v| [v[0], v[1], 1.0]).collect();
        let normals: Vec<[f64; 3]> = (0..d)
            .map(|i| cross3(lifted[i], lifted[(i + 1) % d]))
            .collect();
        let alphas = (0..d)
            .map(|i| {
                dot3(
                    cross3(lifted[(i + d - 1) % d], lifted[i]),
                    lifted[(i + 1) % d],
                )
            })
            .collect();
        NumericCoordinates { normals, alphas }
    }

    pub fn d(&self) -> usize {
        self.alphas.len()
    }

    pub fn eval(&self, p: [f64; 2]) -> Result<Vec<f64>, CoordError> {
        let d = self.d();
        let pt = [p[0], p[1], 1.0];
        let ls: Vec<f64> = self.normals.iter().map(|n| dot3(*n, pt)).collect();
        let b: Vec<f64> = (0..d)
            .map(|i| {
                let prev = (i + d - 1) % d;
                (0..d)
                    .filter(|&j| j != prev && j != i)
                    .fold(self.alphas[i], |acc, j| acc * ls[j])
            })
            .collect();
        let s: f64 = b.iter().sum();
        if !(s.abs() >= 1e-300) {
            return Err(CoordError::DenominatorNearZero(p[0], p[1]));
        }
        Ok(b.into_iter().map(|v| v / s).collect())
    }
}

/// `beta_i(p) = b_i(p, 1) / sum_j b_j(p, 1)`.
pub fn eval_numeric(vertices: &[[f64; 2]], p: [f64; 2]) -> Result<Vec<f64>, CoordError> {
    NumericCoordinates::new(vertices).eval(p)
}

/// Maps each point `p` to `sum_i beta_i(p) * target_i`, with `beta` computed on
/// `source`. Points where the denominator vanishes come back as errors.
pub fn deform(
    source: &[[f64; 2]],
    target: &[[f64; 2]],
    points: &[[f64; 2]],
) -> Result<Vec<Result<[f64; 2], CoordError>>, CoordError> {
    if target.len() != source.len() {
        return Err(CoordError::LengthMismatch {
            expected: source.len(),
            got: target.len(),
        });
    }
    let coords = NumericCoordinates::new(source);
    Ok(points
        .iter()
        .map(|&p| {
            coords.eval(p).map(|beta| {
                beta.iter().zip(target).fold([0.0, 0.0], |acc, (w, t)| {
                    [acc[0] + w * t[0], acc[1] + w * t[1]]
                })
            })
        })
        .collect())
}

pub fn eval_exact_polygon(polygon: &Polygon, p: &Point) -> Option<Vec<Rational>> {
    eval_exact(&numerators(&crate::geometry::cone_data(polygon)), p)
}
