use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wachspress::coordinates::{
    adjoint, denominator_adjoint_scalar, dual_adjoint, eval_exact, eval_numeric,
    linear_precision_check, numerators, Triangulation,
};
use wachspress::fixtures::{hexagon, pentagon, random_convex_polygon, unit_square};
use wachspress::geometry::{cone_data, Point, Polygon};
use wachspress::rational::{int, ratio, to_f64, Rational};

fn polygons_up_to_8() -> Vec<Polygon> {
    let mut out = vec![unit_square(), pentagon(), hexagon()];
    for d in 4..=8 {
        out.push(random_convex_polygon(d, 11));
        out.push(random_convex_polygon(d, 12));
    }
    out
}

/// Interior rational points as seeded convex combinations of the vertices.
fn interior_points(poly: &Polygon, n: usize, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let w: Vec<Rational> = poly
                .vertices()
                .iter()
                .map(|_| ratio(rng.gen_range(1..100), 1))
                .collect();
            let total: Rational = w.iter().sum();
            let x = poly
                .vertices()
                .iter()
                .zip(&w)
                .map(|(v, wi)| &v.x * wi)
                .sum::<Rational>()
                / &total;
            let y = poly
                .vertices()
                .iter()
                .zip(&w)
                .map(|(v, wi)| &v.y * wi)
                .sum::<Rational>()
                / &total;
            Point::new(x, y)
        })
        .collect()
}

#[test]
fn adjoints_do_not_depend_on_the_triangulation() {
    for poly in polygons_up_to_8() {
        let c = cone_data(&poly);
        let d = poly.d();
        for rays in [c.lifted_all(), c.normals_all()] {
            let reference = adjoint(rays, &Triangulation::fan(d, 0)).unwrap();
            assert!(!reference.is_zero());
            assert_eq!(reference.degree(), Some(d as u32 - 3));
            for apex in 1..d {
                assert_eq!(
                    adjoint(rays, &Triangulation::fan(d, apex)).unwrap(),
                    reference,
                    "d = {d}, apex {apex}"
                );
            }
            assert_eq!(
                adjoint(rays, &Triangulation::snake(d)).unwrap(),
                reference,
                "d = {d}, snake"
            );
        }
        assert_eq!(
            dual_adjoint(&c),
            adjoint(c.normals_all(), &Triangulation::fan(d, 0)).unwrap()
        );
    }
}

#[test]
fn denominator_is_a_multiple_of_z_times_dual_adjoint() {
    for poly in polygons_up_to_8() {
        let c = cone_data(&poly);
        let lambda = denominator_adjoint_scalar(&c, &numerators(&c));
        assert!(lambda.is_some_and(|l| !l.is_zero()), "d = {}", poly.d());
    }
}

#[test]
fn linear_precision_holds() {
    for poly in polygons_up_to_8() {
        let c = cone_data(&poly);
        assert!(linear_precision_check(&c, &numerators(&c)));
    }
}

#[test]
fn coordinates_are_positive_inside_convex_polygons() {
    for poly in polygons_up_to_8() {
        let nums = numerators(&cone_data(&poly));
        for p in interior_points(&poly, 100, poly.d() as u64) {
            let beta = eval_exact(&nums, &p).unwrap();
            assert!(
                beta.iter().all(|b| b > &Rational::zero()),
                "d = {} at {p}",
                poly.d()
            );
            assert!(beta.iter().sum::<Rational>().is_one());
        }
    }
}

#[test]
fn numerators_interpolate_vertices() {
    for poly in polygons_up_to_8() {
        let c = cone_data(&poly);
        let nums = numerators(&c);
        let d = poly.d() as i64;
        for i in 1..=d {
            for j in 1..=d {
                let v = c.lifted(j).to_vec();
                assert_eq!(nums.get(i).eval(&v).is_zero(), i != j, "b_{i}(v_{j})");
            }
            let beta = eval_exact(&nums, poly.vertex(i)).unwrap();
            assert!(beta
                .iter()
                .enumerate()
                .all(|(k, b)| *b == int((k as i64 + 1 == i) as i64)));
        }
    }
}

#[test]
fn numeric_matches_exact() {
    for poly in polygons_up_to_8() {
        let nums = numerators(&cone_data(&poly));
        let verts = poly.vertices_f64();
        let mut points = interior_points(&poly, 25, 99);
        // a few exterior points too, away from the adjoint curve
        points.push(Point::new(ratio(7, 3), ratio(-5, 4)));
        points.push(Point::new(ratio(-3, 2), ratio(1, 7)));
        for p in points {
            let Some(exact) = eval_exact(&nums, &p) else {
                continue;
            };
            let approx = eval_numeric(&verts, p.to_f64()).unwrap();
            for (a, e) in approx.iter().zip(&exact) {
                assert!(
                    (a - to_f64(e)).abs() <= 1e-10,
                    "d = {}: {a} vs {}",
                    poly.d(),
                    to_f64(e)
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn numeric_partition_of_unity_and_precision(d in 4usize..10, seed in 0u64..500, a in 0.05f64..1.0, b in 0.05f64..1.0) {
        let poly = random_convex_polygon(d, seed);
        let verts = poly.vertices_f64();
        // a point inside the triangle v1, v2, v3 of a convex polygon
        let (s, t) = if a + b > 1.0 { (1.0 - a, 1.0 - b) } else { (a, b) };
        let p = [
            verts[0][0] + s * (verts[1][0] - verts[0][0]) + t * (verts[2][0] - verts[0][0]),
            verts[0][1] + s * (verts[1][1] - verts[0][1]) + t * (verts[2][1] - verts[0][1]),
        ];
        let beta = eval_numeric(&verts, p).unwrap();
        prop_assert!((beta.iter().sum::<f64>() - 1.0).abs() < 1e-9);
        let x: f64 = beta.iter().zip(&verts).map(|(w, v)| w * v[0]).sum();
        let y: f64 = beta.iter().zip(&verts).map(|(w, v)| w * v[1]).sum();
        prop_assert!((x - p[0]).abs() < 1e-9 && (y - p[1]).abs() < 1e-9);
        prop_assert!(beta.iter().all(|&w| w >= -1e-12));
    }
}
