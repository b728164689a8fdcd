//! Buchberger's algorithm over the rationals.
//!
//! Pairs are processed by the normal strategy (smallest lcm first) with the
//! coprime-leading-monomial and chain criteria. Basis elements are kept monic
//! during the run; the final reduced basis is reported with coprime integer
//! coefficients and positive leading coefficient.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use super::{Monomial, MonomialIdeal, Order, Poly};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    polys: Vec<Poly>,
    order: Order,
}

impl GroebnerBasis {
    /// Elements sorted by ascending leading monomial.
    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys
            .iter()
            .map(|p| p.leading_term_in(&self.order).unwrap().0.clone())
            .collect()
    }

    pub fn reduce(&self, f: &Poly) -> Poly {
        normal_form(f, &self.polys, &self.order)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        initial_ideal(self)
    }

    /// Number of basis elements in each degree.
    pub fn degree_counts(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for p in &self.polys {
            *out.entry(p.degree().unwrap_or(0)).or_insert(0) += 1;
        }
        out
    }
}

pub fn initial_ideal(gb: &GroebnerBasis) -> MonomialIdeal {
    let n = gb.order.nvars();
    MonomialIdeal::from_generators(n, gb.leading_monomials())
}

/// Remainder of `f` on division by `g` (fully reduced: no term of the result is
/// divisible by a leading monomial of `g`).
pub fn normal_form(f: &Poly, g: &[Poly], order: &Order) -> Poly {
    if order.is_default() {
        return nf_default(f, g);
    }
    let fwd = order.new_from_old();
    let back = order.old_from_new();
    let gp: Vec<Poly> = g.iter().map(|p| p.permuted(&fwd)).collect();
    nf_default(&f.permuted(&fwd), &gp).permuted(&back_map(&back))
}

fn back_map(old_from_new: &[usize]) -> Vec<usize> {
    // new index k sits at old index old_from_new[k]
    old_from_new.to_vec()
}

fn nf_default(f: &Poly, g: &[Poly]) -> Poly {
    let leads: Vec<(usize, &Monomial, &Rational)> = g
        .iter()
        .enumerate()
        .filter_map(|(i, p)| p.leading_term().map(|(m, c)| (i, m, c)))
        .collect();
    let mut p = f.terms.clone();
    let mut r = Poly::zero(&f.vars);
    while let Some((m, c)) = p.pop_last() {
        let hit = leads
            .iter()
            .find_map(|&(i, lm, lc)| lm.quotient_of(&m).map(|q| (i, q, lc)));
        match hit {
            Some((i, q, lc)) => {
                let factor = -(c / lc);
                for (gm, gc) in g[i].terms.iter().rev().skip(1) {
                    add_into(&mut p, gm * &q, gc * &factor);
                }
            }
            None => {
                r.terms.insert(m, c);
            }
        }
    }
    r
}

fn add_into(map: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    use std::collections::btree_map::Entry;
    match map.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    lcm: Monomial,
    i: usize,
    j: usize,
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Poly], order: &Order) -> GroebnerBasis {
    let polys = if order.is_default() {
        buchberger_default(gens)
    } else {
        let fwd = order.new_from_old();
        let back = back_map(&order.old_from_new());
        let gp: Vec<Poly> = gens.iter().map(|p| p.permuted(&fwd)).collect();
        buchberger_default(&gp)
            .into_iter()
            .map(|p| p.permuted(&back))
            .collect()
    };
    let mut polys: Vec<Poly> = polys
        .into_iter()
        .map(|p| p.primitive_in(Some(order)))
        .collect();
    polys.sort_by(|a, b| {
        order.cmp(
            a.leading_term_in(order).unwrap().0,
            b.leading_term_in(order).unwrap().0,
        )
    });
    GroebnerBasis {
        polys,
        order: order.clone(),
    }
}

fn buchberger_default(gens: &[Poly]) -> Vec<Poly> {
    let mut basis: Vec<Poly> = Vec::new();
    let mut queue: BTreeSet<Pair> = BTreeSet::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();

    let push = |h: Poly,
                basis: &mut Vec<Poly>,
                queue: &mut BTreeSet<Pair>,
                pending: &mut BTreeSet<(usize, usize)>| {
        let h = h.monic();
        let idx = basis.len();
        let lh = h.leading_monomial().unwrap().clone();
        for (i, b) in basis.iter().enumerate() {
            let lcm = b.leading_monomial().unwrap().lcm(&lh);
            queue.insert(Pair { lcm, i, j: idx });
            pending.insert((i, idx));
        }
        basis.push(h);
    };

    for g in gens {
        let h = nf_default(g, &basis);
        if !h.is_zero() {
            push(h, &mut basis, &mut queue, &mut pending);
        }
    }

    while let Some(pair) = queue.pop_first() {
        pending.remove(&(pair.i, pair.j));
        let li = basis[pair.i].leading_monomial().unwrap();
        let lj = basis[pair.j].leading_monomial().unwrap();
        if li.is_coprime(lj) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k].leading_monomial().unwrap().divides(&pair.lcm)
                && !pending.contains(&ordered(pair.i, k))
                && !pending.contains(&ordered(pair.j, k))
        });
        if chain {
            continue;
        }
        let s = s_poly(&basis[pair.i], &basis[pair.j], &pair.lcm);
        let h = nf_default(&s, &basis);
        if !h.is_zero() {
            push(h, &mut basis, &mut queue, &mut pending);
        }
    }

    reduce_basis(basis)
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn s_poly(f: &Poly, g: &Poly, lcm: &Monomial) -> Poly {
    // both monic
    let qf = f.leading_monomial().unwrap().quotient_of(lcm).unwrap();
    let qg = g.leading_monomial().unwrap().quotient_of(lcm).unwrap();
    let mut s = f.mul_monomial(&qf, &Rational::from_integer(1.into()));
    s.add_scaled(g, &Rational::from_integer((-1).into()), &qg);
    s
}

/// Minimalizes then interreduces a Groebner basis in the default order.
fn reduce_basis(basis: Vec<Poly>) -> Vec<Poly> {
    let mut keep: Vec<Poly> = Vec::new();
    for (i, p) in basis.iter().enumerate() {
        let lp = p.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(j, q)| {
            let lq = q.leading_monomial().unwrap();
            j != i && lq.divides(lp) && (lq != lp || j < i)
        });
        if !redundant {
            keep.push(p.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Poly> = keep
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, q)| q.clone())
            .collect();
        out.push(nf_default(&keep[i], &others).monic());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::VarSet;

    fn parse_all(r: &std::sync::Arc<VarSet>, src: &[&str]) -> Vec<Poly> {
        src.iter().map(|s| Poly::parse(r, s).unwrap()).collect()
    }

    #[test]
    fn twisted_cubic() {
        // 2x2 minors of [[x0,x1,x2],[x1,x2,x3]]
        let r = VarSet::new(["a", "b", "c", "d"]).unwrap();
        let gens = parse_all(&r, &["a*c - b^2", "a*d - b*c", "b*d - c^2"]);
        let gb = buchberger(&gens, &Order::grlex(4));
        assert_eq!(gb.len(), 3);
        let txt: Vec<String> = gb.polys().iter().map(|p| p.to_text()).collect();
        assert_eq!(txt, vec!["b*d - c^2", "a*d - b*c", "a*c - b^2"]);
    }

    #[test]
    fn generator_order_is_irrelevant() {
        let r = VarSet::ambient(3);
        let a = parse_all(&r, &["x1^2 - x2*x3", "x1*x2 - x3^2", "x2^2 - x1*x3"]);
        let mut b = a.clone();
        b.reverse();
        let b: Vec<Poly> = b
            .iter()
            .map(|p| p.scale(&crate::rational::ratio(-3, 7)))
            .collect();
        assert_eq!(
            buchberger(&a, &Order::grlex(3)),
            buchberger(&b, &Order::grlex(3))
        );
    }

    #[test]
    fn basis_members_reduce_to_zero() {
        let r = VarSet::ambient(3);
        let gens = parse_all(&r, &["x1^2*x2 - x3^3", "x1*x3^2 - x2^3"]);
        let gb = buchberger(&gens, &Order::grlex(3));
        for g in &gens {
            assert!(gb.contains(g));
        }
        assert!(!gb.contains(&Poly::var(&r, 0)));
    }

    #[test]
    fn permuted_order_matches_renamed_computation() {
        let r = VarSet::ambient(3);
        let gens = parse_all(&r, &["x1*x2 - x3^2", "x2^2 - x1*x3"]);
        let ord = Order::rotated(3, 1);
        let gb = buchberger(&gens, &ord);
        for p in gb.polys() {
            let lt = p.leading_term_in(&ord).unwrap();
            assert!(lt.1 > &Rational::zero());
        }
        for g in &gens {
            assert!(gb.contains(g));
        }
        // leading monomials are those of the default computation after renaming
        let perm = [2usize, 0, 1]; // x2 -> slot 0, x3 -> slot 1, x1 -> slot 2
        let renamed: Vec<Poly> = gens.iter().map(|p| p.permuted(&perm)).collect();
        let gb0 = buchberger(&renamed, &Order::grlex(3));
        let mut l1: Vec<Monomial> = gb
            .leading_monomials()
            .iter()
            .map(|m| m.permuted(&perm))
            .collect();
        let mut l0 = gb0.leading_monomials();
        l1.sort();
        l0.sort();
        assert_eq!(l0, l1);
    }

    #[test]
    fn normal_form_remainder_has_no_divisible_terms() {
        let r = VarSet::ambient(2);
        let g = parse_all(&r, &["x1^2 - x2"]);
        let f = Poly::parse(&r, "x1^5 + x1*x2").unwrap();
        let nf = normal_form(&f, &g, &Order::grlex(2));
        assert_eq!(nf.to_text(), "x1*x2^2 + x1*x2");
    }
}
