use wachspress::coordinates::{numerators, pullback, pullback_vanishes};
use wachspress::fixtures::{hexagon, random_convex_polygon};
use wachspress::geometry::cone_data;
use wachspress::ideals::{
    adjoint_identity_scalars, build_ideal, diagonal_intersection_dimension,
    image_ideal_dimension_bound, image_ideal_oracle, lambda_all, lambda_rank, linear_multiples,
    quadric_basis, quadrics, tau,
};
use wachspress::polyring::{buchberger, dot, span_rank, spans_equal, Order, Poly, VarSet};
use wachspress::rational::binomial;

#[test]
fn generators_pull_back_to_zero() {
    for d in 4..=8 {
        for seed in [21, 22] {
            let cone = cone_data(&random_convex_polygon(d, seed));
            let nums = numerators(&cone);
            let ideal = build_ideal(&cone).unwrap();
            let gens: Vec<&Poly> = ideal
                .quadrics
                .iter()
                .chain(ideal.all_cubics().map(|c| &c.poly))
                .collect();
            assert!(
                pullback_vanishes(&gens, &nums).into_iter().all(|ok| ok),
                "d = {d}, seed {seed}"
            );
        }
    }
}

#[test]
fn grid_test_agrees_with_symbolic_pullback() {
    let cone = cone_data(&random_convex_polygon(5, 4));
    let nums = numerators(&cone);
    let s = VarSet::ambient(5);
    let ideal = build_ideal(&cone).unwrap();
    let mut candidates: Vec<Poly> = ideal.quadrics.clone();
    candidates.push(Poly::parse(&s, "x1*x3 - x2*x4").unwrap());
    candidates.push(&Poly::var(&s, 0) * &ideal.quadrics[2]);
    candidates.push(&ideal.quadrics[0] + &Poly::parse(&s, "x1*x2").unwrap());
    let refs: Vec<&Poly> = candidates.iter().collect();
    let fast = pullback_vanishes(&refs, &nums);
    let slow: Vec<bool> = candidates
        .iter()
        .map(|f| pullback(f, &nums).unwrap().is_zero())
        .collect();
    assert_eq!(fast, slow);
    assert_eq!(slow.iter().filter(|v| !**v).count(), 2);
}

#[test]
fn oracles_agree_in_degrees_two_and_three() {
    for d in 4..=7 {
        let cone = cone_data(&random_convex_polygon(d, 31));
        let nums = numerators(&cone);
        let ideal = build_ideal(&cone).unwrap();
        assert!(
            spans_equal(&ideal.quadric_basis, &image_ideal_oracle(&nums, 2)),
            "degree 2, d = {d}"
        );
        let mut ours = linear_multiples(&ideal.quadric_basis);
        ours.extend(ideal.all_cubics().map(|c| c.poly.clone()));
        let oracle = image_ideal_oracle(&nums, 3);
        assert!(spans_equal(&ours, &oracle), "degree 3, d = {d}");
        assert_eq!(image_ideal_dimension_bound(&nums, 3, 5), oracle.len());
    }
}

#[test]
fn middle_quadrics_span_the_quadric_space() {
    for d in 4..=8 {
        let cone = cone_data(&random_convex_polygon(d, 41));
        let q = quadrics(&cone);
        let middle = &q[1..d - 2];
        assert_eq!(span_rank(middle), d - 3);
        assert!(
            spans_equal(middle, &quadric_basis(&cone).unwrap()),
            "d = {d}"
        );
    }
}

#[test]
fn quadrics_factor_through_tau() {
    for d in 4..=8 {
        let cone = cone_data(&random_convex_polygon(d, 42));
        let t = tau(&cone);
        for (k, (l, q)) in lambda_all(&cone).iter().zip(quadrics(&cone)).enumerate() {
            assert_eq!(dot(l, &t), q);
            let support: Vec<usize> = (0..d)
                .filter(|&i| l.iter().any(|p| p.monomials().any(|m| m.exps()[i] > 0)))
                .collect();
            assert_eq!(support, {
                let mut s = vec![k, (k + 1) % d];
                s.sort();
                s
            });
        }
        assert_eq!(lambda_rank(&cone), d);
        assert_eq!(diagonal_intersection_dimension(&cone), d - 3);
    }
}

#[test]
fn essential_cubic_count_and_inventories() {
    for d in 4..=8 {
        let cone = cone_data(&random_convex_polygon(d, 43));
        let ideal = build_ideal(&cone).unwrap();
        assert_eq!(ideal.all_cubics().count() as i64, binomial(d as i64, 3));
        assert_eq!(
            ideal.essential_cubics.len() as i64,
            binomial(d as i64 - 3, 3),
            "d = {d}"
        );
        if d <= 7 {
            let order = Order::grlex(d);
            let all = buchberger(&ideal.generators_with_cubics(false), &order);
            let no_last = buchberger(&ideal.generators_with_cubics(true), &order);
            assert_eq!(all.polys(), no_last.polys(), "d = {d}");
            assert_eq!(ideal.groebner().polys(), all.polys());
        }
    }
}

#[test]
fn adjoint_identity_holds_modulo_quadrics() {
    for d in 4..=6 {
        let cone = cone_data(&random_convex_polygon(d, 44));
        let gb = buchberger(&quadrics(&cone), &Order::grlex(d));
        let ids = adjoint_identity_scalars(&cone, &numerators(&cone), &gb).expect("identity");
        assert_eq!(ids.len(), d);
    }
}

#[test]
fn symmetric_hexagon_cubic() {
    let ideal = build_ideal(&cone_data(&hexagon())).unwrap();
    let w = ideal.all_cubics().find(|c| c.indices == (1, 3, 5)).unwrap();
    assert_eq!(w.poly.primitive().to_text(), "x1*x3*x5 - x2*x4*x6");
    assert_eq!(ideal.generators().len(), 4);
}

#[test]
fn generator_records_round_trip() {
    let ideal = build_ideal(&cone_data(&random_convex_polygon(6, 45))).unwrap();
    let s = ideal.ring();
    for g in ideal.generators() {
        assert_eq!(Poly::from_records(&s, &g.to_records()).unwrap(), g);
        assert_eq!(Poly::parse(&s, &g.to_text()).unwrap(), g);
    }
}
