//! End-to-end certification of one polygon: geometry, coordinates, the ideal
//! and its Groebner basis, Hilbert data, degree-wise oracles, the external
//! vertex module, betti consistency, and sampled decomposition checks.

use std::time::Instant;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::combinatorics::{
    betti_formula, expected_alternating_sum, gamma_complex, hilbert_polynomial_formula,
    hilbert_series_formula, hochster_betti, stanley_reisner,
};
use crate::coordinates::{
    adjoint, denominator_adjoint_scalar, edge_forms, linear_precision_check, numerators,
    pullback_vanishes, Numerators, Triangulation,
};
use crate::geometry::{
    cone_data, det3, external_vertices, validate_polygon, ConeData, Point, Polygon, PolygonJson,
};
use crate::ideals::{
    adjoint_identity_scalars, build_ideal, diagonal_intersection_dimension, diagonal_support_check,
    expected_quadric_leads, image_ideal_dimension_bound, image_ideal_oracle, lambda_rank,
    linear_multiples, linear_syzygy_dimension, WachspressIdeal,
};
use crate::linalg::Matrix;
use crate::polyring::{
    buchberger, monomials_of_degree, span_rank, spans_equal, Monomial, Order, Poly, VarSet,
};
use crate::rational::{binomial, format, int, ratio, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub witness: Value,
    pub ms: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub polygon: PolygonJson,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn check(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Copy with every timing field zeroed, for byte comparisons.
    pub fn without_timing(&self) -> Self {
        let mut r = self.clone();
        for c in &mut r.checks {
            c.ms = 0;
        }
        r
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skip => "skip",
            };
            out.push_str(&format!(
                "{tag}  {:<width$}  {:>6} ms  {}\n",
                c.id, c.ms, c.anchor
            ));
            if !c.witness.is_null() {
                out.push_str(&format!("      {}\n", c.witness));
            }
        }
        out.push_str(&format!("verdict: {:?} (seed {})\n", self.verdict, self.seed).to_lowercase());
        out
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Random points per sampled check (at least 10 are used).
    pub samples: usize,
    /// Ideal-membership form of the adjoint identity; `None` runs it for
    /// `d <= 6` only.
    pub adjoint_identity: Option<bool>,
    /// Degree-3 pullback kernel comparison.
    pub degree3_oracle: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            samples: 10,
            adjoint_identity: None,
            degree3_oracle: true,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("rank check failed: {0}")]
    RankFailure(String),
    #[error("membership check failed at {0}")]
    MembershipFailure(String),
}

struct Ctx {
    checks: Vec<CheckResult>,
}

impl Ctx {
    fn run(&mut self, id: &str, anchor: &str, f: impl FnOnce() -> (Status, Value)) {
        let t = Instant::now();
        let (status, witness) = f();
        self.checks.push(CheckResult {
            id: id.into(),
            anchor: anchor.into(),
            status,
            witness,
            ms: t.elapsed().as_millis() as u64,
        });
    }

    fn skip(&mut self, id: &str, anchor: &str, why: &str) {
        self.checks.push(CheckResult {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::Skip,
            witness: json!({ "reason": why }),
            ms: 0,
        });
    }
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn mono_text(d: usize, m: &Monomial) -> String {
    Poly::monomial(&VarSet::ambient(d), m.clone(), Rational::one()).to_text()
}

/// Anchors: short statements of the property each check certifies.
mod anchor {
    pub const VALIDATE: &str = "no three edge lines are concurrent";
    pub const CONE: &str = "normals vanish on their edge; alphas are nonzero, positive when convex";
    pub const NORMALS: &str = "triple-normal determinant identities";
    pub const EXTERNAL: &str = "|Y| = d(d-3)/2, each external vertex on exactly two edge lines";
    pub const PRECISION: &str = "linear precision: sum b_i v_i = (sum b_i) p";
    pub const ADJOINT: &str = "the adjoint does not depend on the triangulation";
    pub const DENOMINATOR: &str = "sum b_i is the dual-cone adjoint up to z and a scalar";
    pub const PULLBACK: &str = "the quadrics Q_k and cubics w_ijk vanish on the Wachspress surface";
    pub const GROEBNER: &str =
        "in graded lex the initial ideal of I(d) is the Stanley-Reisner ideal of Gamma(d)";
    pub const SERIES: &str = "Hilbert series (1 + (d-3)t + C(d-3,2)t^2)/(1-t)^3";
    pub const POLYNOMIAL: &str = "Hilbert polynomial agrees with the Hilbert function from t = 0";
    pub const QUADRIC_ORACLE: &str = "(I_W)_2 has dimension d-3 with lead terms x1*x3..x1*x_{d-1}";
    pub const CUBIC_ORACLE: &str = "(I_W)_3 is spanned by S_1 * quadrics and the cubics";
    pub const DIAGONAL: &str = "the quadrics are supported on diagonal monomials";
    pub const SYZYGY: &str = "the quadrics have no linear syzygies";
    pub const LAMBDA: &str = "Lambda_1..Lambda_d are linearly independent";
    pub const DIAG_CENTER: &str =
        "diagonal quadrics meeting the center ideal form a space of dimension d-3";
    pub const POINTS: &str = "I_Y has one form of degree d-3 and d of degree d-2, spanned by A/(l_i l_{i+1}) with d linear syzygies";
    pub const POINTS_LOW: &str = "I_Y below degree d-3";
    pub const BETTI_SUM: &str =
        "alternating betti sum equals the Hilbert numerator times (1-t)^(d-3)";
    pub const BETTI_HOCHSTER: &str =
        "formula betti numbers are bounded by those of the initial ideal";
    pub const BETTI_SHAPE: &str =
        "nonzero betti numbers only at (0,0), (1,2) and (i,i+2): regularity two, no linear strand";
    pub const CENTER: &str = "the quadrics vanish on the center of projection";
    pub const IMAGE: &str = "points of the Wachspress image satisfy I(d)";
    pub const ADJ_IDENTITY: &str =
        "lambda b_k(tau) - A*(tau) x_k lies in the ideal of the quadrics";
}

/// Runs every check on the given vertex list.
pub fn verify_polygon(vertices: &[Point], options: &VerifyOptions) -> VerificationReport {
    let mut ctx = Ctx { checks: Vec::new() };
    let polygon = match validate_polygon(vertices) {
        Ok(p) => {
            ctx.run("geometry.validate", anchor::VALIDATE, || {
                (Status::Pass, json!({ "d": p.d(), "convex": p.is_convex(), "reoriented": p.was_reoriented() }))
            });
            p
        }
        Err(e) => {
            ctx.run("geometry.validate", anchor::VALIDATE, || {
                (Status::Fail, json!({ "error": e.to_string() }))
            });
            return VerificationReport {
                polygon: PolygonJson::from_points(vertices),
                seed: options.seed,
                checks: ctx.checks,
                verdict: Verdict::Fail,
            };
        }
    };
    run_checks(&mut ctx, &polygon, options);
    let verdict = if ctx.checks.iter().any(|c| c.status == Status::Fail) {
        Verdict::Fail
    } else {
        Verdict::Pass
    };
    VerificationReport {
        polygon: polygon.to_json(),
        seed: options.seed,
        checks: ctx.checks,
        verdict,
    }
}

fn run_checks(ctx: &mut Ctx, polygon: &Polygon, options: &VerifyOptions) {
    let d = polygon.d();
    let cone = cone_data(polygon);
    let nums = numerators(&cone);
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    let samples = options.samples.max(10);

    ctx.run("geometry.cone", anchor::CONE, || cone_check(&cone));
    ctx.run("geometry.normal-identities", anchor::NORMALS, || {
        normal_identities(&cone)
    });
    ctx.run(
        "geometry.external-vertices",
        anchor::EXTERNAL,
        || match external_vertices(&cone) {
            Ok(y) => (
                status(y.len() == d * (d - 3) / 2),
                json!({ "count": y.len() }),
            ),
            Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
        },
    );

    ctx.run("wachspress.linear-precision", anchor::PRECISION, || {
        (status(linear_precision_check(&cone, &nums)), Value::Null)
    });
    ctx.run("wachspress.adjoint-independence", anchor::ADJOINT, || {
        adjoint_independence(&cone)
    });
    ctx.run(
        "wachspress.denominator-adjoint",
        anchor::DENOMINATOR,
        || match denominator_adjoint_scalar(&cone, &nums) {
            Some(l) => (Status::Pass, json!({ "lambda": format(&l) })),
            None => (Status::Fail, json!({ "lambda": null })),
        },
    );

    let ideal = match build_ideal(&cone) {
        Ok(i) => i,
        Err(e) => {
            ctx.run("ideal.build", anchor::QUADRIC_ORACLE, || {
                (Status::Fail, json!({ "error": e.to_string() }))
            });
            return;
        }
    };

    let mut generators_vanish = false;
    ctx.run("ideal.pullback", anchor::PULLBACK, || {
        let mut labels: Vec<String> = (1..=ideal.quadrics.len())
            .map(|k| format!("Q{k}"))
            .collect();
        let mut polys: Vec<&Poly> = ideal.quadrics.iter().collect();
        for c in ideal.all_cubics() {
            labels.push(format!("w{}{}{}", c.indices.0, c.indices.1, c.indices.2));
            polys.push(&c.poly);
        }
        let bad: Vec<String> = labels
            .into_iter()
            .zip(pullback_vanishes(&polys, &nums))
            .filter(|(_, ok)| !ok)
            .map(|(l, _)| l)
            .collect();
        let n = ideal.quadrics.len() + ideal.all_cubics().count();
        generators_vanish = bad.is_empty();
        (
            status(bad.is_empty()),
            json!({ "generators": n, "nonvanishing": bad }),
        )
    });

    let gb = ideal.groebner();
    let init = gb.initial_ideal();
    ctx.run("groebner.initial-ideal", anchor::GROEBNER, || {
        let sr = stanley_reisner(d);
        let gens: Vec<String> = init.generators().iter().map(|m| mono_text(d, m)).collect();
        (
            status(init == sr),
            json!({ "basis_size": gb.len(), "initial_ideal": gens }),
        )
    });

    ctx.run("hilbert.series", anchor::SERIES, || {
        let hs = hilbert_series_formula(d);
        let mismatches: Vec<u64> = (0..=d as u64 + 2)
            .filter(|&t| init.hilbert_function(t as u32) as i64 != hs.coefficient(t))
            .collect();
        (
            status(mismatches.is_empty()),
            json!({ "series": hs.to_text(), "range": d + 2, "mismatch_at": mismatches }),
        )
    });
    ctx.run("hilbert.polynomial", anchor::POLYNOMIAL, || {
        let hp = hilbert_polynomial_formula(d);
        let mismatches: Vec<i64> = (0..=d as i64 + 2)
            .filter(|&t| hp.eval(t) != int(init.hilbert_function(t as u32) as i64))
            .collect();
        (
            status(mismatches.is_empty()),
            json!({ "polynomial": hp.to_text(), "mismatch_at": mismatches }),
        )
    });

    ctx.run("ideal.quadric-oracle", anchor::QUADRIC_ORACLE, || {
        quadric_oracle(&ideal, &nums)
    });
    if options.degree3_oracle {
        ctx.run("ideal.cubic-oracle", anchor::CUBIC_ORACLE, || {
            cubic_oracle(&ideal, &nums, generators_vanish)
        });
    } else {
        ctx.skip(
            "ideal.cubic-oracle",
            anchor::CUBIC_ORACLE,
            "disabled by option",
        );
    }
    ctx.run("ideal.diagonal-support", anchor::DIAGONAL, || {
        (status(diagonal_support_check(&ideal.quadrics)), Value::Null)
    });
    ctx.run("ideal.linear-syzygies", anchor::SYZYGY, || {
        let k = linear_syzygy_dimension(&ideal.quadric_basis);
        (status(k == 0), json!({ "dimension": k }))
    });
    ctx.run("ideal.lambda-basis", anchor::LAMBDA, || {
        let r = lambda_rank(&cone);
        (status(r == d), json!({ "rank": r }))
    });
    ctx.run("ideal.diagonal-center", anchor::DIAG_CENTER, || {
        let k = diagonal_intersection_dimension(&cone);
        (status(k == d - 3), json!({ "dimension": k }))
    });

    ctx.run(
        "points.module",
        anchor::POINTS,
        || match points_module_checks(&cone) {
            Ok(data) => (Status::Pass, serde_json::to_value(&data).unwrap()),
            Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
        },
    );
    ctx.skip(
        "points.low-degree",
        anchor::POINTS_LOW,
        "agreement is only established from degree d-3 on",
    );

    ctx.run(
        "betti.alternating-sum",
        anchor::BETTI_SUM,
        || match betti_formula(d) {
            Ok(b) => (
                status(b.alternating_sum() == expected_alternating_sum(d)),
                json!({ "totals": b.totals() }),
            ),
            Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
        },
    );
    ctx.run(
        "betti.hochster-domination",
        anchor::BETTI_HOCHSTER,
        || match (betti_formula(d), hochster_betti(&gamma_complex(d), d)) {
            (Ok(f), Ok(h)) => (
                status(f.dominated_by(&h)),
                json!({ "hochster_totals": h.totals() }),
            ),
            (Err(e), _) => (Status::Fail, json!({ "error": e.to_string() })),
            (_, Err(e)) => (Status::Fail, json!({ "error": e.to_string() })),
        },
    );
    ctx.run("betti.shape", anchor::BETTI_SHAPE, || {
        match betti_formula(d) {
            Ok(b) => {
                let ok = b
                    .entries()
                    .keys()
                    .all(|&(i, j)| (i, j) == (0, 0) || (i, j) == (1, 2) || (i >= 1 && j == i + 2));
                let reg = if d == 4 { 1 } else { 2 };
                (
                    status(ok && b.regularity() == reg && b.projective_dimension() == d - 3),
                    Value::Null,
                )
            }
            Err(e) => (Status::Fail, json!({ "error": e.to_string() })),
        }
    });

    ctx.run("decomposition.center", anchor::CENTER, || {
        center_points(&cone, &ideal, &mut rng, samples)
    });
    ctx.run("decomposition.image", anchor::IMAGE, || {
        image_points(&nums, &ideal, &mut rng, samples)
    });
    let run_gg = options.adjoint_identity.unwrap_or(d <= 6);
    if run_gg {
        ctx.run(
            "decomposition.adjoint-identity",
            anchor::ADJ_IDENTITY,
            || {
                let qgb = buchberger(&ideal.quadrics, &Order::grlex(d));
                match adjoint_identity_scalars(&cone, &nums, &qgb) {
                    Some(ids) => (Status::Pass, serde_json::to_value(&ids).unwrap()),
                    None => (Status::Fail, Value::Null),
                }
            },
        );
    } else {
        ctx.skip(
            "decomposition.adjoint-identity",
            anchor::ADJ_IDENTITY,
            "enabled by default only for d <= 6",
        );
    }
}

fn cone_check(cone: &ConeData) -> (Status, Value) {
    use crate::geometry::dot;
    let d = cone.d() as i64;
    let incidence = (1..=d).all(|i| {
        dot(cone.normal(i), cone.lifted(i)).is_zero()
            && dot(cone.normal(i), cone.lifted(i + 1)).is_zero()
    });
    let alphas_ok = cone
        .alphas_all()
        .iter()
        .all(|a| !a.is_zero() && (!cone.is_convex() || a.is_positive()));
    let alphas: Vec<String> = cone.alphas_all().iter().map(format).collect();
    (
        status(incidence && alphas_ok),
        json!({ "alphas": alphas, "convex": cone.is_convex() }),
    )
}

fn normal_identities(cone: &ConeData) -> (Status, Value) {
    let d = cone.d() as i64;
    let v = |i: i64| cone.lifted(i);
    let n = |i: i64| cone.normal(i);
    let mut failures = Vec::new();
    for i in 1..=d {
        for j in 1..=d {
            for k in 1..=d {
                if i == j || j == k || i == k {
                    continue;
                }
                let lhs = det3(n(i), n(j), n(k));
                let rhs = det3(v(j), v(k), v(k + 1)) * det3(v(i), v(i + 1), v(j + 1))
                    - det3(v(j + 1), v(k), v(k + 1)) * det3(v(i), v(i + 1), v(j));
                if lhs != rhs {
                    failures.push(format!("({i},{j},{k})"));
                }
            }
        }
        if det3(n(i - 1), n(i), n(i + 1)) != cone.alpha(i) * cone.alpha(i + 1) {
            failures.push(format!("alpha product at {i}"));
        }
    }
    (status(failures.is_empty()), json!({ "failures": failures }))
}

fn adjoint_independence(cone: &ConeData) -> (Status, Value) {
    let d = cone.d();
    let mut ok = true;
    for rays in [cone.lifted_all(), cone.normals_all()] {
        let reference = adjoint(rays, &Triangulation::fan(d, 0));
        let others = [
            Triangulation::fan(d, 1),
            Triangulation::fan(d, d / 2),
            Triangulation::snake(d),
        ];
        for t in others {
            if adjoint(rays, &t) != reference {
                ok = false;
            }
        }
        if reference.is_err() {
            ok = false;
        }
    }
    (
        status(ok),
        json!({ "cones": ["primal", "dual"], "triangulations": ["fan 1", "fan 2", "fan d/2+1", "snake"] }),
    )
}

fn quadric_oracle(ideal: &WachspressIdeal, nums: &Numerators) -> (Status, Value) {
    let d = ideal.d;
    let oracle = image_ideal_oracle(nums, 2);
    let leads: Vec<Monomial> = ideal
        .quadric_basis
        .iter()
        .map(|q| q.leading_monomial().unwrap().clone())
        .collect();
    let ok = oracle.len() == d - 3
        && span_rank(&ideal.quadrics) == d - 3
        && leads == expected_quadric_leads(d)
        && spans_equal(&oracle, &ideal.quadric_basis);
    let leads: Vec<String> = leads.iter().map(|m| mono_text(d, m)).collect();
    (
        status(ok),
        json!({ "dimension": oracle.len(), "leads": leads }),
    )
}

fn cubic_oracle(
    ideal: &WachspressIdeal,
    nums: &Numerators,
    generators_vanish: bool,
) -> (Status, Value) {
    let mut gens = linear_multiples(&ideal.quadric_basis);
    gens.extend(ideal.all_cubics().map(|c| c.poly.clone()));
    let ours = span_rank(&gens);
    // ours <= dim (I_W)_3 <= bound once every generator pulls back to zero
    let bound = image_ideal_dimension_bound(nums, 3, 0);
    (
        status(generators_vanish && ours == bound),
        json!({ "generated_dimension": ours, "kernel_dimension_bound": bound, "generators_vanish": generators_vanish }),
    )
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.gen_range(-30..=30), rng.gen_range(1..=12))
}

fn center_points(
    cone: &ConeData,
    ideal: &WachspressIdeal,
    rng: &mut ChaCha8Rng,
    samples: usize,
) -> (Status, Value) {
    let d = cone.d();
    let rows: Vec<Vec<Rational>> = (0..3)
        .map(|c| cone.lifted_all().iter().map(|v| v[c].clone()).collect())
        .collect();
    let kernel = Matrix::from_rows(rows).kernel();
    let mut failures = Vec::new();
    for s in 0..samples {
        let coeffs: Vec<Rational> = kernel.iter().map(|_| random_rational(rng)).collect();
        let pt: Vec<Rational> = (0..d)
            .map(|i| kernel.iter().zip(&coeffs).map(|(k, c)| &k[i] * c).sum())
            .collect();
        if ideal.quadrics.iter().any(|q| !q.eval(&pt).is_zero()) {
            failures.push(s);
        }
    }
    (
        status(failures.is_empty()),
        json!({ "samples": samples, "center_dimension": kernel.len(), "failures": failures }),
    )
}

fn image_points(
    nums: &Numerators,
    ideal: &WachspressIdeal,
    rng: &mut ChaCha8Rng,
    samples: usize,
) -> (Status, Value) {
    let mut failures = Vec::new();
    let gens: Vec<&Poly> = ideal
        .quadrics
        .iter()
        .chain(ideal.all_cubics().map(|c| &c.poly))
        .collect();
    for _ in 0..samples {
        let p = [random_rational(rng), random_rational(rng), Rational::one()];
        let w: Vec<Rational> = nums.all().iter().map(|b| b.eval(&p)).collect();
        if gens.iter().any(|g| !g.eval(&w).is_zero()) {
            failures.push(format!("({}, {})", format(&p[0]), format(&p[1])));
        }
    }
    (
        status(failures.is_empty()),
        json!({ "samples": samples, "failures": failures }),
    )
}

/// Exact rank data for the ideal of the external vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointsModuleData {
    pub external_vertices: usize,
    /// `dim (I_Y)_{d-3}`.
    pub dim_degree_d_minus_3: usize,
    /// `dim (I_Y)_{d-2}`.
    pub dim_degree_d_minus_2: usize,
    /// `(t, HF(R/I_Y, t))` for `t = d-3, d-2, d-1`.
    pub hilbert_function: Vec<(u32, usize)>,
    /// The unique form of degree `d-3` through `Y`.
    pub form: String,
    /// The forms `A/(l_i l_{i+1})` span `(I_Y)_{d-2}`.
    pub span_matches: bool,
    pub linear_syzygies: usize,
}

fn evaluation_rank(points: &[[Rational; 3]], t: u32) -> (usize, Vec<Monomial>, Matrix) {
    let monos = monomials_of_degree(3, t);
    let rows: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| {
            let pp = p.to_vec();
            monos
                .iter()
                .map(|m| Poly::monomial(&VarSet::plane(), m.clone(), Rational::one()).eval(&pp))
                .collect()
        })
        .collect();
    let m = Matrix::from_rows(rows);
    (m.rank(), monos, m)
}

pub fn points_module_checks(cone: &ConeData) -> Result<PointsModuleData, VerifyError> {
    let d = cone.d();
    let y = external_vertices(cone).map_err(|e| VerifyError::RankFailure(e.to_string()))?;
    let pts: Vec<[Rational; 3]> = y.points().map(|p| p.to_vec3()).collect();
    let expect_y = d * (d - 3) / 2;
    if pts.len() != expect_y {
        return Err(VerifyError::RankFailure(format!(
            "|Y| = {} (expected {expect_y})",
            pts.len()
        )));
    }
    let dim_r = |t: usize| binomial(t as i64 + 2, 2) as usize;

    let mut hf = Vec::new();
    for t in [d - 3, d - 2, d - 1] {
        let (rank, _, _) = evaluation_rank(&pts, t as u32);
        if rank != pts.len() {
            return Err(VerifyError::RankFailure(format!(
                "HF(R/I_Y, {t}) = {rank}, expected {}",
                pts.len()
            )));
        }
        hf.push((t as u32, rank));
    }
    let (r3, monos3, m3) = evaluation_rank(&pts, (d - 3) as u32);
    let dim3 = dim_r(d - 3) - r3;
    if dim3 != 1 {
        return Err(VerifyError::RankFailure(format!(
            "dim (I_Y)_{} = {dim3}, expected 1",
            d - 3
        )));
    }
    let plane = VarSet::plane();
    let form = Poly::from_terms(&plane, monos3.into_iter().zip(m3.kernel().remove(0))).primitive();
    let (r2, _, _) = evaluation_rank(&pts, (d - 2) as u32);
    let dim2 = dim_r(d - 2) - r2;
    if dim2 != d {
        return Err(VerifyError::RankFailure(format!(
            "dim (I_Y)_{} = {dim2}, expected {d}",
            d - 2
        )));
    }

    let forms = edge_forms(cone);
    let gens: Vec<Poly> = (1..=d as i64)
        .map(|i| {
            let mut g = Poly::one(&plane);
            for j in 1..=d as i64 {
                let (a, b) = (crate::geometry::slot(i, d), crate::geometry::slot(i + 1, d));
                let s = crate::geometry::slot(j, d);
                if s != a && s != b {
                    g = &g * forms.get(j);
                }
            }
            g
        })
        .collect();
    let vanish = gens
        .iter()
        .all(|g| pts.iter().all(|p| g.eval(&p.to_vec()).is_zero()));
    let span_matches = vanish && span_rank(&gens) == d;
    if !span_matches {
        return Err(VerifyError::RankFailure(
            "A/(l_i l_{i+1}) do not span (I_Y)_{d-2}".into(),
        ));
    }
    let syz = linear_syzygy_dimension(&gens);
    if syz != d {
        return Err(VerifyError::RankFailure(format!(
            "linear syzygies = {syz}, expected {d}"
        )));
    }
    Ok(PointsModuleData {
        external_vertices: pts.len(),
        dim_degree_d_minus_3: dim3,
        dim_degree_d_minus_2: dim2,
        hilbert_function: hf,
        form: form.to_text(),
        span_matches,
        linear_syzygies: syz,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn square_report_passes() {
        let sq = fixtures::unit_square();
        let r = verify_polygon(sq.vertices(), &VerifyOptions::default());
        assert!(r.passed(), "{}", r.render_text());
        assert_eq!(
            r.check("groebner.initial-ideal").unwrap().witness["initial_ideal"],
            json!(["x1*x3"])
        );
        assert_eq!(r.check("points.low-degree").unwrap().status, Status::Skip);
    }

    #[test]
    fn concurrent_lines_fail_validation() {
        let pts: Vec<Point> = [(1, 0), (5, 0), (5, 5), (2, 2), (0, 3), (0, 1)]
            .iter()
            .map(|&(x, y)| Point::from_ints(x, y))
            .collect();
        let r = verify_polygon(&pts, &VerifyOptions::default());
        assert_eq!(r.verdict, Verdict::Fail);
        assert_eq!(r.checks.len(), 1);
        assert!(r.checks[0].witness["error"]
            .as_str()
            .unwrap()
            .contains("edge lines"));
    }

    #[test]
    fn points_module_small_cases() {
        let sq = points_module_checks(&cone_data(&fixtures::unit_square())).unwrap();
        assert_eq!(
            (
                sq.external_vertices,
                sq.dim_degree_d_minus_3,
                sq.dim_degree_d_minus_2
            ),
            (2, 1, 4)
        );
        assert_eq!(sq.form, "z");
        let p5 = points_module_checks(&cone_data(&fixtures::pentagon())).unwrap();
        assert_eq!(
            (
                p5.external_vertices,
                p5.dim_degree_d_minus_3,
                p5.dim_degree_d_minus_2
            ),
            (5, 1, 5)
        );
        let p6 = points_module_checks(&cone_data(&fixtures::hexagon())).unwrap();
        assert_eq!(
            (
                p6.external_vertices,
                p6.dim_degree_d_minus_3,
                p6.dim_degree_d_minus_2,
                p6.linear_syzygies
            ),
            (9, 1, 6, 6)
        );
    }

    #[test]
    fn report_is_deterministic() {
        let p = fixtures::pentagon();
        let opts = VerifyOptions {
            seed: 5,
            ..Default::default()
        };
        let a = verify_polygon(p.vertices(), &opts).without_timing();
        let b = verify_polygon(p.vertices(), &opts).without_timing();
        assert_eq!(a.to_json_pretty(), b.to_json_pretty());
    }
}
