use std::cmp::Ordering;

use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wachspress::combinatorics::{face_count_hilbert, SimplicialComplex};
use wachspress::fixtures::random_convex_polygon;
use wachspress::geometry::cone_data;
use wachspress::ideals::build_ideal;
use wachspress::polyring::{buchberger, normal_form, Monomial, MonomialIdeal, Order, Poly, VarSet};
use wachspress::rational::{int, Rational};

fn ideal_generators(d: usize, seed: u64) -> Vec<Poly> {
    let ideal = build_ideal(&cone_data(&random_convex_polygon(d, seed))).unwrap();
    let mut gens = ideal.quadrics.clone();
    gens.extend(ideal.all_cubics().map(|c| c.poly.clone()));
    gens
}

#[test]
fn reduced_basis_ignores_generator_order() {
    for d in [5, 6] {
        let gens = ideal_generators(d, 2);
        let order = Order::grlex(d);
        let reference = buchberger(&gens, &order);
        let mut rng = ChaCha8Rng::seed_from_u64(d as u64);
        for _ in 0..4 {
            let mut shuffled = gens.clone();
            shuffled.shuffle(&mut rng);
            assert_eq!(
                buchberger(&shuffled, &order).polys(),
                reference.polys(),
                "d = {d}"
            );
        }
    }
}

#[test]
fn basis_is_homogeneous_and_primitive() {
    for d in 4..=7 {
        let gb = buchberger(&ideal_generators(d, 1), &Order::grlex(d));
        for g in gb.polys() {
            assert!(g.is_homogeneous());
            assert!(g.terms().all(|(_, c)| c.is_integer()));
            let content = g.terms().fold(num_bigint::BigInt::zero(), |acc, (_, c)| {
                num_integer::Integer::gcd(&acc, c.numer())
            });
            assert!(content.is_one(), "content {content} in {g}");
            assert!(g.leading_term().unwrap().1 > &int(0));
        }
    }
}

#[test]
fn every_s_polynomial_reduces_to_zero() {
    let d = 6;
    let order = Order::grlex(d);
    let gb = buchberger(&ideal_generators(d, 3), &order);
    let g = gb.polys();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let (mi, ci) = g[i].leading_term().unwrap();
            let (mj, cj) = g[j].leading_term().unwrap();
            let l = mi.lcm(mj);
            let a = g[i].mul_monomial(&mi.quotient_of(&l).unwrap(), &(Rational::one() / ci));
            let b = g[j].mul_monomial(&mj.quotient_of(&l).unwrap(), &(Rational::one() / cj));
            assert!(normal_form(&(&a - &b), g, &order).is_zero());
        }
    }
}

#[test]
fn rotated_order_gives_the_same_ideal() {
    let d = 5;
    let gens = ideal_generators(d, 1);
    let rotated = buchberger(&gens, &Order::rotated(d, 2));
    let plain = buchberger(&gens, &Order::grlex(d));
    for g in rotated.polys() {
        let lead = g.leading_term_in(rotated.order()).unwrap().0;
        assert!(g
            .monomials()
            .all(|m| rotated.order().cmp(m, lead) != Ordering::Greater));
        assert!(plain.contains(g));
    }
    assert!(plain.polys().iter().all(|g| rotated.contains(g)));
}

fn small_poly(vars: &std::sync::Arc<VarSet>, coeffs: &[i64], degree: u32) -> Poly {
    let monos = wachspress::polyring::monomials_of_degree(vars.len(), degree);
    Poly::from_terms(
        vars,
        monos.into_iter().zip(coeffs).map(|(m, &c)| (m, int(c))),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_ignores_ideal_multiples(
        fc in proptest::collection::vec(-3i64..4, 4),
        rc in proptest::collection::vec(-3i64..4, 15),
        pick in 0usize..100,
    ) {
        let d = 5;
        let order = Order::grlex(d);
        let gb = buchberger(&ideal_generators(d, 1), &order);
        let vars = VarSet::ambient(d);
        let g = &gb.polys()[pick % gb.len()];
        let f = small_poly(&vars, &fc, 1);
        let r = small_poly(&vars, &rc, 2);
        let lhs = normal_form(&(&(&f * g) + &r), gb.polys(), &order);
        prop_assert_eq!(lhs, normal_form(&r, gb.polys(), &order));
    }

    #[test]
    fn order_is_multiplicative(
        a in proptest::collection::vec(0u16..3, 4),
        b in proptest::collection::vec(0u16..3, 4),
        c in proptest::collection::vec(0u16..3, 4),
        start in 0usize..4,
    ) {
        let order = Order::rotated(4, start);
        let (a, b, c) = (Monomial::new(a), Monomial::new(b), Monomial::new(c));
        prop_assert_eq!(order.cmp(&a, &b), order.cmp(&(&a * &c), &(&b * &c)));
        prop_assert!(order.cmp(&(&a * &c), &a) != Ordering::Less);
    }

    #[test]
    fn squarefree_hilbert_function_counts_faces(
        n in 3usize..7,
        facets in proptest::collection::vec(proptest::collection::btree_set(0usize..6, 1..4), 1..6),
    ) {
        let faces: Vec<Vec<usize>> = facets
            .into_iter()
            .map(|f| f.into_iter().filter(|&v| v < n).collect::<Vec<_>>())
            .filter(|f| !f.is_empty())
            .collect();
        let complex = SimplicialComplex::from_faces(n, faces);
        let sr: MonomialIdeal = complex.stanley_reisner_ideal(n);
        prop_assert!(sr.is_squarefree());
        let f = complex.f_vector();
        for t in 0..=3u32 {
            prop_assert_eq!(sr.hilbert_function(t), face_count_hilbert(&f, t as u64), "t = {}", t);
        }
    }
}
