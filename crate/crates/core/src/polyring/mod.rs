//! Sparse multivariate polynomials over the rationals.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], whose `Ord` is graded lex
//! with `x1 > x2 > ... > xn`; the leading term in that order is the last
//! entry. Other graded lex orders (permuted variable priority) are handled by
//! [`Order`], which the Groebner routines implement by renaming variables.

mod groebner;
mod linear;
mod monomial_ideal;
mod text;

pub use groebner::{buchberger, initial_ideal, normal_form, GroebnerBasis};
pub use linear::{graded_kernel, kernel_polys, span_rank, spans_equal, LinearSpan};
pub use monomial_ideal::{monomials_of_degree, MonomialIdeal};
pub use text::TermRecord;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;
use thiserror::Error;

use crate::rational::{self, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials live in different rings ({0} vs {1})")]
    VarSetMismatch(String, String),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("expected {expected} entries, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid variable priority: {0:?}")]
    InvalidOrder(Vec<usize>),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// Ordered, uniquely named variables of a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
    ) -> Result<Arc<Self>, PolyError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(PolyError::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(VarSet { names }))
    }

    /// `x, y, z`: the homogeneous coordinate ring of the plane.
    pub fn plane() -> Arc<Self> {
        Arc::new(VarSet {
            names: vec!["x".into(), "y".into(), "z".into()],
        })
    }

    /// `x1, ..., xd`.
    pub fn ambient(d: usize) -> Arc<Self> {
        Arc::new(VarSet {
            names: (1..=d).map(|i| format!("x{i}")).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names.join(","))
    }
}

pub type Exponent = u16;

/// Dense exponent vector with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    deg: u32,
    exps: SmallVec<[Exponent; 12]>,
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg
            .cmp(&other.deg)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = Exponent>) -> Self {
        let exps: SmallVec<[Exponent; 12]> = exps.into_iter().collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { deg, exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            deg: 0,
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    /// Product of the (0-based) variables listed, with repetition.
    pub fn from_indices(nvars: usize, vars: &[usize]) -> Self {
        let mut m = Self::one(nvars);
        for &v in vars {
            m.exps[v] += 1;
        }
        m.deg = vars.len() as u32;
        m
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            deg: other.deg - self.deg,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| b - a)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Indices (0-based) of the variables present.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    fn permuted(&self, new_from_old: &[usize]) -> Monomial {
        let mut exps: SmallVec<[Exponent; 12]> = SmallVec::from_elem(0, self.exps.len());
        for (old, &new) in new_from_old.iter().enumerate() {
            exps[new] = self.exps[old];
        }
        Monomial {
            deg: self.deg,
            exps,
        }
    }
}

impl Mul for &Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &Monomial) -> Monomial {
        Monomial {
            deg: self.deg + rhs.deg,
            exps: self
                .exps
                .iter()
                .zip(&rhs.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// Graded lex order with a chosen variable priority.
///
/// `priority[0]` is the largest variable. The default priority is
/// `x1 > x2 > ... > xn`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order {
    priority: Vec<usize>,
}

impl Order {
    pub fn grlex(nvars: usize) -> Self {
        Order {
            priority: (0..nvars).collect(),
        }
    }

    pub fn grlex_with_priority(priority: Vec<usize>) -> Result<Self, PolyError> {
        let mut seen = vec![false; priority.len()];
        for &p in &priority {
            if p >= priority.len() || seen[p] {
                return Err(PolyError::InvalidOrder(priority));
            }
            seen[p] = true;
        }
        Ok(Order { priority })
    }

    /// `x_i > x_{i+1} > ... > x_n > x_1 > ... > x_{i-1}` (0-based start).
    pub fn rotated(nvars: usize, start: usize) -> Self {
        Order {
            priority: (0..nvars).map(|k| (start + k) % nvars).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    pub fn is_default(&self) -> bool {
        self.priority.iter().enumerate().all(|(k, &p)| k == p)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.deg.cmp(&b.deg).then_with(|| {
            self.priority
                .iter()
                .map(|&v| a.exps[v].cmp(&b.exps[v]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }

    /// Position map sending old variable `v` to its slot under this priority,
    /// so that default graded lex on the renamed ring equals this order.
    fn new_from_old(&self) -> Vec<usize> {
        let mut map = vec![0; self.priority.len()];
        for (k, &v) in self.priority.iter().enumerate() {
            map[v] = k;
        }
        map
    }

    fn old_from_new(&self) -> Vec<usize> {
        self.priority.clone()
    }
}

#[derive(Clone)]
pub struct Poly {
    vars: Arc<VarSet>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.vars, &other.vars) && self.terms == other.terms
    }
}

impl Eq for Poly {}

fn same_ring(a: &Arc<VarSet>, b: &Arc<VarSet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Poly {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        Poly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<VarSet>, c: Rational) -> Self {
        Self::monomial(vars, Monomial::one(vars.len()), c)
    }

    pub fn one(vars: &Arc<VarSet>) -> Self {
        Self::constant(vars, Rational::one())
    }

    /// The 0-based variable `i`.
    pub fn var(vars: &Arc<VarSet>, i: usize) -> Self {
        Self::monomial(vars, Monomial::var(vars.len(), i), Rational::one())
    }

    pub fn monomial(vars: &Arc<VarSet>, m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Linear form `sum c_i x_i`.
    pub fn linear(vars: &Arc<VarSet>, coeffs: &[Rational]) -> Self {
        Self::from_terms(
            vars,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| (Monomial::var(vars.len(), i), c.clone())),
        )
    }

    /// Sums repeated monomials and drops zeros.
    pub fn from_terms(
        vars: &Arc<VarSet>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), vars.len());
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl DoubleEndedIterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Leading term in default graded lex.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn leading_term_in(&self, order: &Order) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Largest total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Zero counts as homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    fn check_ring(&self, other: &Poly) -> Result<(), PolyError> {
        if same_ring(&self.vars, &other.vars) {
            Ok(())
        } else {
            Err(PolyError::VarSetMismatch(
                self.vars.to_string(),
                other.vars.to_string(),
            ))
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_ring(other)?;
        let mut out = Poly::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma * mb, ca * cb);
            }
        }
        Ok(out)
    }

    /// `self += c * m * other`.
    pub fn add_scaled(&mut self, other: &Poly, c: &Rational, m: &Monomial) {
        if c.is_zero() {
            return;
        }
        for (om, oc) in &other.terms {
            self.add_term(om * m, oc * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, a)| (k * m, a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.vars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(
            point.len(),
            self.nvars(),
            "evaluation point has wrong arity"
        );
        self.terms.iter().fold(Rational::zero(), |acc, (m, c)| {
            let v = m.exps.iter().zip(point).fold(c.clone(), |v, (&e, x)| {
                v * num_traits::pow(x.clone(), e as usize)
            });
            acc + v
        })
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.exps
                    .iter()
                    .zip(point)
                    .fold(rational::to_f64(c), |v, (&e, x)| v * x.powi(e as i32))
            })
            .sum()
    }

    /// Substitutes `images[i]` for variable `i`; all images must share a ring.
    pub fn substitute(&self, images: &[Poly]) -> Result<Poly, PolyError> {
        if images.len() != self.nvars() {
            return Err(PolyError::DimensionMismatch {
                expected: self.nvars(),
                got: images.len(),
            });
        }
        let target = images
            .first()
            .map(|p| p.vars.clone())
            .unwrap_or_else(|| self.vars.clone());
        for im in images {
            if !same_ring(&target, &im.vars) {
                return Err(PolyError::VarSetMismatch(
                    target.to_string(),
                    im.vars.to_string(),
                ));
            }
        }
        // powers cache: powers[i][e] = images[i]^e
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(&p.vars)]).collect();
        let mut out = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut term = Poly::constant(&target, c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    /// Scales to coprime integer coefficients with a positive leading
    /// coefficient (default order).
    pub fn primitive(&self) -> Poly {
        self.primitive_in(None)
    }

    pub fn primitive_in(&self, order: Option<&Order>) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let coeffs: Vec<Rational> = self.terms.values().cloned().collect();
        let mut factor = rational::primitive_integer_scaling(&coeffs);
        // primitive_integer_scaling fixes the sign of the smallest term; use the
        // leading one instead
        let lead = match order {
            Some(o) => self.leading_term_in(o).map(|t| t.1).unwrap(),
            None => self.leading_term().map(|t| t.1).unwrap(),
        };
        if (lead * &factor).is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Content-free integer scaling with positive leading coefficient, but
    /// divided by the leading coefficient: the monic associate.
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&(Rational::one() / c)),
        }
    }

    /// Reinterprets the polynomial in another ring with the same number of
    /// variables (names may differ).
    pub fn with_vars(&self, vars: &Arc<VarSet>) -> Poly {
        assert_eq!(vars.len(), self.nvars());
        Poly {
            vars: vars.clone(),
            terms: self.terms.clone(),
        }
    }

    fn permuted(&self, new_from_old: &[usize]) -> Poly {
        Poly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.permuted(new_from_old), c.clone()))
                .collect(),
        }
    }

    /// Coefficient vector of a linear form, `None` if not linear homogeneous.
    pub fn linear_coefficients(&self) -> Option<Vec<Rational>> {
        if self.terms.keys().any(|m| m.degree() != 1) {
            return None;
        }
        Some(
            (0..self.nvars())
                .map(|i| self.coefficient(&Monomial::var(self.nvars(), i)))
                .collect(),
        )
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl Add for &Poly {
    type Output = Poly;
    /// Panics on mismatched rings; use [`Poly::checked_add`] to handle that.
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("ring mismatch in addition")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("ring mismatch in subtraction")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs)
            .expect("ring mismatch in multiplication")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

/// Dot product of two equal-length vectors of polynomials.
pub fn dot(a: &[Poly], b: &[Poly]) -> Poly {
    assert_eq!(a.len(), b.len());
    let mut acc = Poly::zero(a[0].vars());
    for (x, y) in a.iter().zip(b) {
        acc = &acc + &(x * y);
    }
    acc
}

/// Product of a list of polynomials (1 for the empty list).
pub fn product<'a>(vars: &Arc<VarSet>, factors: impl IntoIterator<Item = &'a Poly>) -> Poly {
    factors.into_iter().fold(Poly::one(vars), |acc, f| &acc * f)
}

/// Determinant of a 3x3 matrix of polynomials given by rows.
pub fn det3(rows: [&[Poly; 3]; 3]) -> Poly {
    let [a, b, c] = rows;
    let m1 = &(&b[1] * &c[2]) - &(&b[2] * &c[1]);
    let m2 = &(&b[2] * &c[0]) - &(&b[0] * &c[2]);
    let m3 = &(&b[0] * &c[1]) - &(&b[1] * &c[0]);
    &(&(&a[0] * &m1) + &(&a[1] * &m2)) + &(&a[2] * &m3)
}
