//! The map `tau`, the vectors `Lambda_k`, the quadrics `Q_k`, the cubic
//! determinants `w_ijk`, the assembled ideal `I(d)`, and brute-force oracles
//! for graded pieces of the ideal of the Wachspress surface.
//!
//! Ring: `S = k[x1, ..., xd]` with graded lex, `x1 > ... > xd`.

use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::coordinates::{dual_adjoint, monomial_value, pullback_grid, Numerators};
use crate::geometry::{slot, ConeData};
use crate::linalg::integer_kernel;
use crate::polyring::{
    buchberger, det3, monomials_of_degree, GroebnerBasis, LinearSpan, Monomial, Order, Poly,
    PolyError, VarSet,
};
use crate::rational::Rational;
use num_bigint::BigInt;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IdealError {
    #[error("quadric reduction produced lead terms {got:?}, expected {expected:?}")]
    LeadTermFailure {
        expected: Vec<String>,
        got: Vec<String>,
    },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn ring(cone: &ConeData) -> Arc<VarSet> {
    VarSet::ambient(cone.d())
}

/// 1-based cyclic variable `x_i` of `S`.
fn x(s: &Arc<VarSet>, i: i64) -> Poly {
    Poly::var(s, slot(i, s.len()))
}

/// `tau = sum_i x_i v_i`, three linear forms in `S`.
pub fn tau(cone: &ConeData) -> [Poly; 3] {
    let s = ring(cone);
    let comp = |c: usize| {
        Poly::linear(
            &s,
            &cone
                .lifted_all()
                .iter()
                .map(|v| v[c].clone())
                .collect::<Vec<_>>(),
        )
    };
    [comp(0), comp(1), comp(2)]
}

/// `x_{k+1} alpha_k n_{k+1} - x_k alpha_{k+1} n_{k-1}` (1-based `k`).
pub fn lambda_hat(cone: &ConeData, k: i64) -> [Poly; 3] {
    let s = ring(cone);
    let (xk, xk1) = (x(&s, k), x(&s, k + 1));
    let a = cone.alpha(k);
    let a1 = cone.alpha(k + 1);
    let (np, nm) = (cone.normal(k + 1), cone.normal(k - 1));
    std::array::from_fn(|c| &xk1.scale(&(a * &np[c])) - &xk.scale(&(a1 * &nm[c])))
}

pub fn lambda_all(cone: &ConeData) -> Vec<[Poly; 3]> {
    (1..=cone.d() as i64).map(|k| lambda_hat(cone, k)).collect()
}

/// Rank of `{Lambda_1, ..., Lambda_d}` viewed as vectors of length `3d`.
pub fn lambda_rank(cone: &ConeData) -> usize {
    let d = cone.d();
    let rows: Vec<Vec<Rational>> = lambda_all(cone)
        .iter()
        .map(|l| {
            l.iter()
                .flat_map(|p| p.linear_coefficients().expect("linear"))
                .collect()
        })
        .collect();
    debug_assert!(rows.iter().all(|r| r.len() == 3 * d));
    crate::linalg::Matrix::from_rows(rows).rank()
}

fn dot3(a: &[Poly; 3], b: &[Poly; 3]) -> Poly {
    &(&(&a[0] * &b[0]) + &(&a[1] * &b[1])) + &(&a[2] * &b[2])
}

/// `Q_k = Lambda_k . tau` for `k = 1..d`.
pub fn quadrics(cone: &ConeData) -> Vec<Poly> {
    let t = tau(cone);
    lambda_all(cone).iter().map(|l| dot3(l, &t)).collect()
}

/// `x1*x3, x1*x4, ..., x1*x_{d-1}`.
pub fn expected_quadric_leads(d: usize) -> Vec<Monomial> {
    (3..d)
        .map(|j| Monomial::from_indices(d, &[0, j - 1]))
        .collect()
}

/// Echelon basis `Q^_2, ..., Q^_{d-2}` of the span of the quadrics, with
/// `Q^_j` led by `x1*x_{j+1}` and free of the other leads; integer content 1.
pub fn quadric_basis(cone: &ConeData) -> Result<Vec<Poly>, IdealError> {
    let mut span = LinearSpan::new();
    for q in quadrics(cone) {
        span.insert(&q);
    }
    let expected = expected_quadric_leads(cone.d());
    let mut got: Vec<Monomial> = span.pivots().cloned().collect();
    got.sort();
    let mut want = expected.clone();
    want.sort();
    if got != want {
        let s = ring(cone);
        let show = |v: &[Monomial]| -> Vec<String> {
            v.iter()
                .map(|m| Poly::monomial(&s, m.clone(), Rational::one()).to_text())
                .collect()
        };
        return Err(IdealError::LeadTermFailure {
            expected: show(&want),
            got: show(&got),
        });
    }
    let basis: Vec<Poly> = span.basis().cloned().collect();
    Ok(expected
        .iter()
        .map(|m| {
            basis
                .iter()
                .find(|p| p.leading_monomial() == Some(m))
                .unwrap()
                .primitive()
        })
        .collect())
}

/// `w_ijk = |Lambda_i Lambda_j Lambda_k|` (1-based indices).
pub fn cubic(cone: &ConeData, i: i64, j: i64, k: i64) -> Poly {
    det3([
        &lambda_hat(cone, i),
        &lambda_hat(cone, j),
        &lambda_hat(cone, k),
    ])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cubic {
    pub indices: (usize, usize, usize),
    #[serde(serialize_with = "ser_poly")]
    pub poly: Poly,
}

fn ser_poly<S: serde::Serializer>(p: &Poly, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_text())
}

/// All `C(d, 3)` determinants in lexicographic index order.
pub fn cubics(cone: &ConeData) -> Vec<Cubic> {
    let d = cone.d();
    let lams = lambda_all(cone);
    let mut out = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                out.push(Cubic {
                    indices: (i + 1, j + 1, k + 1),
                    poly: det3([&lams[i], &lams[j], &lams[k]]),
                });
            }
        }
    }
    out
}

/// Generators of `I(d)` split by role.
#[derive(Clone, Debug)]
pub struct WachspressIdeal {
    pub d: usize,
    /// `Q_1, ..., Q_d` as constructed.
    pub quadrics: Vec<Poly>,
    pub quadric_basis: Vec<Poly>,
    /// Cubics not in `S_1 * (quadrics)` nor spanned by earlier essential ones.
    pub essential_cubics: Vec<Cubic>,
    /// The remaining cubics, kept for inspection.
    pub redundant_cubics: Vec<Cubic>,
}

impl WachspressIdeal {
    pub fn ring(&self) -> Arc<VarSet> {
        VarSet::ambient(self.d)
    }

    /// Minimal generating set: quadric basis then essential cubics.
    pub fn generators(&self) -> Vec<Poly> {
        self.quadric_basis
            .iter()
            .cloned()
            .chain(self.essential_cubics.iter().map(|c| c.poly.primitive()))
            .collect()
    }

    pub fn all_cubics(&self) -> impl Iterator<Item = &Cubic> {
        self.essential_cubics.iter().chain(&self.redundant_cubics)
    }

    /// Quadric basis with every cubic, or only those with `k != d`.
    pub fn generators_with_cubics(&self, skip_last: bool) -> Vec<Poly> {
        let mut out = self.quadric_basis.clone();
        let mut cubes: Vec<&Cubic> = self.all_cubics().collect();
        cubes.sort_by_key(|c| c.indices);
        out.extend(
            cubes
                .into_iter()
                .filter(|c| !skip_last || c.indices.2 != self.d)
                .map(|c| c.poly.clone()),
        );
        out
    }

    pub fn groebner(&self) -> GroebnerBasis {
        buchberger(&self.generators(), &Order::grlex(self.d))
    }
}

/// Degree-3 multiples `x_i * g` of a list of quadrics.
pub fn linear_multiples(quadrics: &[Poly]) -> Vec<Poly> {
    let Some(first) = quadrics.first() else {
        return Vec::new();
    };
    let s = first.vars().clone();
    let mut out = Vec::new();
    for q in quadrics {
        for i in 0..s.len() {
            out.push(&Poly::var(&s, i) * q);
        }
    }
    out
}

pub fn build_ideal(cone: &ConeData) -> Result<WachspressIdeal, IdealError> {
    let quads = quadrics(cone);
    let basis = quadric_basis(cone)?;
    let mut span = LinearSpan::new();
    for p in linear_multiples(&basis) {
        span.insert(&p);
    }
    let mut essential = Vec::new();
    let mut redundant = Vec::new();
    for c in cubics(cone) {
        if span.insert(&c.poly) {
            essential.push(c);
        } else {
            redundant.push(c);
        }
    }
    Ok(WachspressIdeal {
        d: cone.d(),
        quadrics: quads,
        quadric_basis: basis,
        essential_cubics: essential,
        redundant_cubics: redundant,
    })
}

/// Basis of `(I_W)_m`: the kernel of `S_m -> R_{m(d-2)}`, `x^a -> b^a`,
/// computed as the kernel of the evaluation matrix on [`pullback_grid`].
pub fn image_ideal_oracle(nums: &Numerators, m: u32) -> Vec<Poly> {
    let d = nums.all().len();
    let s = VarSet::ambient(d);
    let basis = monomials_of_degree(d, m);
    let rows: Vec<Vec<BigInt>> = pullback_grid(nums, m)
        .iter()
        .map(|p| {
            basis
                .iter()
                .map(|mono| monomial_value(mono.exps(), p))
                .collect()
        })
        .collect();
    integer_kernel(&rows, basis.len())
        .into_iter()
        .map(|v| Poly::from_terms(&s, basis.iter().cloned().zip(v)).primitive())
        .collect()
}

/// `dim (I_W)_m`, exactly.
pub fn image_ideal_dimension(nums: &Numerators, m: u32) -> usize {
    image_ideal_oracle(nums, m).len()
}

/// Upper bound on `dim (I_W)_m` from the rank over `F_p` of the pullback
/// evaluated at `|S_m| + 8` seeded random integer points. The rank mod `p`
/// never exceeds the rational rank of the pullback map, so the bound is
/// exact arithmetic, and equals the true dimension whenever it meets a lower
/// bound.
pub fn image_ideal_dimension_bound(nums: &Numerators, m: u32, seed: u64) -> usize {
    use crate::linalg::{rank_mod_p, rational_mod_p, MOD_PRIME};
    use rand::{Rng, SeedableRng};
    let d = nums.all().len();
    let basis = monomials_of_degree(d, m);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    while rows.len() < basis.len() + 8 {
        let p = [
            Rational::from_integer(rng.gen_range(-1000..=1000).into()),
            Rational::from_integer(rng.gen_range(-1000..=1000).into()),
            Rational::one(),
        ];
        let Some(vals) = nums
            .all()
            .iter()
            .map(|b| rational_mod_p(&b.eval(&p)))
            .collect::<Option<Vec<u64>>>()
        else {
            continue;
        };
        let row: Vec<u64> = basis
            .iter()
            .map(|mono| {
                mono.exps().iter().zip(&vals).fold(1u64, |acc, (&e, &v)| {
                    (0..e).fold(acc, |a, _| {
                        ((a as u128 * v as u128) % MOD_PRIME as u128) as u64
                    })
                })
            })
            .collect();
        rows.push(row);
    }
    basis.len() - rank_mod_p(rows)
}

/// Monomials `x_i x_j` with `j` not in `{i-1, i, i+1}` (cyclically).
pub fn diagonal_monomials(d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for i in 0..d {
        for j in i + 2..d {
            if !(i == 0 && j == d - 1) {
                out.push(Monomial::from_indices(d, &[i, j]));
            }
        }
    }
    out
}

pub fn is_diagonal(m: &Monomial) -> bool {
    let d = m.nvars();
    let sup = m.support();
    m.degree() == 2 && sup.len() == 2 && {
        let gap = sup[1] - sup[0];
        gap >= 2 && gap != d - 1
    }
}

/// True iff every polynomial is supported on diagonal monomials.
pub fn diagonal_support_check(polys: &[Poly]) -> bool {
    polys.iter().all(|p| p.monomials().all(is_diagonal))
}

/// Dimension of `{(c_j) in S_1^n : sum c_j g_j = 0}` for quadrics `g_j`.
pub fn linear_syzygy_dimension(quadrics: &[Poly]) -> usize {
    let products = linear_multiples(quadrics);
    products.len() - crate::polyring::span_rank(&products)
}

/// `dim (Diag intersect (I_C)_2)` where `I_C = <tau_1, tau_2, tau_3>`.
pub fn diagonal_intersection_dimension(cone: &ConeData) -> usize {
    let s = ring(cone);
    let diag: Vec<Poly> = diagonal_monomials(cone.d())
        .into_iter()
        .map(|m| Poly::monomial(&s, m, Rational::one()))
        .collect();
    let ic2 = linear_multiples(&tau(cone));
    let a = crate::polyring::span_rank(&diag);
    let b = crate::polyring::span_rank(&ic2);
    let both: Vec<Poly> = diag.into_iter().chain(ic2).collect();
    a + b - crate::polyring::span_rank(&both)
}

/// Variable rescaling tried when matching the adjoint identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rescaling {
    None,
    /// `x_i -> alpha_i x_i`
    Alpha,
    /// `x_i -> x_i / alpha_i`
    InverseAlpha,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AdjointIdentity {
    pub k: usize,
    pub rescaling: Rescaling,
    #[serde(serialize_with = "ser_rational")]
    pub lambda: Rational,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&crate::rational::format(r))
}

/// Finds `lambda` with `lambda * b_k(tau(x)) - A*(tau(x)) * x_k` in the ideal
/// of the quadrics, for each `k`, trying the rescalings in order. `None` when
/// no rescaling admits a scalar for some `k`.
pub fn adjoint_identity_scalars(
    cone: &ConeData,
    nums: &Numerators,
    quad_gb: &GroebnerBasis,
) -> Option<Vec<AdjointIdentity>> {
    let s = ring(cone);
    let d = cone.d();
    let astar = dual_adjoint(cone);
    for resc in [Rescaling::None, Rescaling::Alpha, Rescaling::InverseAlpha] {
        let scaled: Vec<Poly> = (0..d)
            .map(|i| {
                let a = &cone.alphas_all()[i];
                match resc {
                    Rescaling::None => Poly::var(&s, i),
                    Rescaling::Alpha => Poly::var(&s, i).scale(a),
                    Rescaling::InverseAlpha => Poly::var(&s, i).scale(&(Rational::one() / a)),
                }
            })
            .collect();
        let t: Vec<Poly> = tau(cone)
            .iter()
            .map(|c| c.substitute(&scaled).expect("arity"))
            .collect();
        let a_t = quad_gb.reduce(&astar.substitute(&t).expect("arity"));
        let mut found = Vec::new();
        for k in 0..d {
            let lhs = quad_gb.reduce(&nums.all()[k].substitute(&t).expect("arity"));
            let rhs = quad_gb.reduce(&(&a_t * &scaled[k]));
            match proportionality(&lhs, &rhs) {
                Some(lambda) => found.push(AdjointIdentity {
                    k: k + 1,
                    rescaling: resc,
                    lambda,
                }),
                None => break,
            }
        }
        if found.len() == d {
            return Some(found);
        }
    }
    None
}

/// `lambda != 0` with `lambda * a = b`.
fn proportionality(a: &Poly, b: &Poly) -> Option<Rational> {
    if a.is_zero() || b.is_zero() {
        return None;
    }
    let (m, c) = a.leading_term()?;
    let lambda = b.coefficient(m) / c;
    if lambda.is_zero() || &a.scale(&lambda) != b {
        return None;
    }
    Some(lambda)
}
