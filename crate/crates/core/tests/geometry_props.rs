use proptest::prelude::*;

use wachspress::fixtures::{hexagon, pentagon, random_convex_polygon, unit_square};
use wachspress::geometry::{
    cone_data, det3, dot, external_vertices, polygon_from_json, validate_polygon, GeometryError,
    Point, Polygon, PolygonJson, ProjPoint,
};
use wachspress::rational::int;

fn test_polygons() -> Vec<Polygon> {
    let mut out = vec![unit_square(), pentagon(), hexagon()];
    for d in 4..=8 {
        for seed in 1..=3 {
            out.push(random_convex_polygon(d, seed));
        }
    }
    out
}

#[test]
fn normal_triple_formula_holds_for_all_triples() {
    for poly in test_polygons() {
        let c = cone_data(&poly);
        let d = poly.d() as i64;
        let v = |i: i64| c.lifted(i).clone();
        for i in 1..=d {
            for j in 1..=d {
                for k in 1..=d {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let lhs = det3(c.normal(i), c.normal(j), c.normal(k));
                    let rhs = det3(&v(j), &v(k), &v(k + 1)) * det3(&v(i), &v(i + 1), &v(j + 1))
                        - det3(&v(j + 1), &v(k), &v(k + 1)) * det3(&v(i), &v(i + 1), &v(j));
                    assert_eq!(lhs, rhs, "d = {d}, ({i},{j},{k})");
                }
            }
        }
    }
}

#[test]
fn consecutive_normals_give_alpha_products() {
    for poly in test_polygons() {
        let c = cone_data(&poly);
        for i in 1..=poly.d() as i64 {
            let lhs = det3(c.normal(i - 1), c.normal(i), c.normal(i + 1));
            assert_eq!(lhs, c.alpha(i) * c.alpha(i + 1));
        }
    }
}

#[test]
fn cone_data_invariants() {
    for poly in test_polygons() {
        let c = cone_data(&poly);
        for i in 1..=poly.d() as i64 {
            assert!(c.alpha(i) > &int(0));
            assert_eq!(dot(c.normal(i), c.lifted(i)), int(0));
            assert_eq!(dot(c.normal(i), c.lifted(i + 1)), int(0));
        }
    }
}

#[test]
fn external_vertex_invariants() {
    for poly in test_polygons() {
        let c = cone_data(&poly);
        let d = poly.d();
        let y = external_vertices(&c).unwrap();
        assert_eq!(y.len(), d * (d - 3) / 2);
        let lifted: Vec<ProjPoint> = c
            .lifted_all()
            .iter()
            .map(|v| ProjPoint::from_vec3(v).unwrap())
            .collect();
        for p in y.points() {
            assert!(!lifted.contains(p), "{p} is a polygon vertex");
            let on = c
                .normals_all()
                .iter()
                .filter(|n| dot(n, &p.to_vec3()) == int(0))
                .count();
            assert_eq!(on, 2, "{p} lies on {on} edge lines");
        }
    }
}

#[test]
fn clockwise_input_is_reoriented() {
    let cw: Vec<Point> = unit_square().vertices().iter().rev().cloned().collect();
    let p = validate_polygon(&cw).unwrap();
    assert!(p.was_reoriented());
    assert_eq!(p.vertex(1), &cw[0]);
    assert!(cone_data(&p).alphas_all().iter().all(|a| a > &int(0)));
}

#[test]
fn invalid_polygons_are_rejected() {
    let pts = |v: &[(i64, i64)]| {
        v.iter()
            .map(|&(x, y)| Point::from_ints(x, y))
            .collect::<Vec<_>>()
    };
    assert!(matches!(
        validate_polygon(&pts(&[(0, 0), (1, 0), (0, 1)])),
        Err(GeometryError::TooFewVertices(3))
    ));
    assert!(matches!(
        validate_polygon(&pts(&[(0, 0), (1, 0), (1, 0), (0, 1)])),
        Err(GeometryError::DuplicateVertex(..))
    ));
    assert!(matches!(
        validate_polygon(&pts(&[(0, 0), (1, 0), (2, 0), (1, 1)])),
        Err(GeometryError::DegenerateEdge(..))
    ));
    // edges on x = 0, y = 0 and y = x all pass through the origin
    let notched = pts(&[
        (1, 0),
        (2, 0),
        (5, 1),
        (4, 4),
        (3, 3),
        (1, 5),
        (0, 2),
        (0, 1),
    ]);
    assert!(matches!(
        validate_polygon(&notched),
        Err(GeometryError::GenericityFailure(..))
    ));
}

#[test]
fn polygon_json_round_trip() {
    for poly in test_polygons() {
        let text = poly.to_json().to_string_pretty();
        let back = polygon_from_json(&text).unwrap();
        assert_eq!(back.vertices(), poly.vertices());
    }
    assert!(PolygonJson::parse("{\"vertices\": [[\"1/0\", \"1\"]]}")
        .and_then(|j| j.points())
        .is_err());
}

proptest! {
    #[test]
    fn proj_point_canonical_form(x in -50i64..50, y in -50i64..50, z in -50i64..50, k in 1i64..20, neg: bool) {
        prop_assume!((x, y, z) != (0, 0, 0));
        let s = if neg { -k } else { k };
        let p = ProjPoint::from_ints(x, y, z).unwrap();
        let q = ProjPoint::from_ints(s * x, s * y, s * z).unwrap();
        prop_assert_eq!(&p, &q);
        prop_assert_eq!(ProjPoint::from_vec3(&p.to_vec3()).unwrap(), p);
    }

    #[test]
    fn random_polygons_are_valid_and_convex(d in 4usize..10, seed in 0u64..1000) {
        let p = random_convex_polygon(d, seed);
        prop_assert_eq!(p.d(), d);
        prop_assert!(p.is_convex());
        let c = cone_data(&p);
        prop_assert!(c.alphas_all().iter().all(|a| a > &int(0)));
        prop_assert_eq!(external_vertices(&c).unwrap().len(), d * (d - 3) / 2);
    }
}
