//! Stanley-Reisner side: the complex `Gamma(d)`, its face ideal, closed-form
//! Hilbert data, the betti-number formula, and a Hochster-formula oracle.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::Matrix;
use crate::polyring::{Monomial, MonomialIdeal};
use crate::rational::{binomial, int, ratio, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("betti formula gives {value} at (i, j) = ({i}, {j})")]
    NegativeBetti { i: usize, j: usize, value: i64 },
    #[error("homology oracle supports complexes of dimension at most 2, got {0}")]
    DimensionTooLarge(usize),
    #[error("d must be at least 4, got {0}")]
    TooSmall(usize),
}

/// Simplicial complex on vertices `0..n`, stored by its facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    nverts: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Facets may be given redundantly; faces contained in others are dropped.
    pub fn from_faces(nverts: usize, faces: impl IntoIterator<Item = Vec<usize>>) -> Self {
        let mut all: Vec<Vec<usize>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        all.sort_by_key(|f| std::cmp::Reverse(f.len()));
        let mut facets: Vec<Vec<usize>> = Vec::new();
        for f in all {
            if !facets.iter().any(|g| f.iter().all(|v| g.contains(v))) {
                facets.push(f);
            }
        }
        facets.sort();
        SimplicialComplex { nverts, facets }
    }

    /// Complete graph on `n` vertices.
    pub fn complete_graph(n: usize) -> Self {
        let mut faces = Vec::new();
        for i in 0..n {
            faces.push(vec![i]);
            for j in i + 1..n {
                faces.push(vec![i, j]);
            }
        }
        Self::from_faces(n, faces)
    }

    pub fn nverts(&self) -> usize {
        self.nverts
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Maximum face size minus one; `-1` for the void-of-vertices complex.
    pub fn dim(&self) -> isize {
        self.facets
            .iter()
            .map(|f| f.len() as isize)
            .max()
            .unwrap_or(0)
            - 1
    }

    pub fn is_face(&self, s: &[usize]) -> bool {
        s.is_empty() || self.facets.iter().any(|f| s.iter().all(|v| f.contains(v)))
    }

    /// All faces including the empty face, grouped by size.
    pub fn faces_by_size(&self) -> Vec<BTreeSet<Vec<usize>>> {
        let top = (self.dim() + 1).max(0) as usize;
        let mut out = vec![BTreeSet::new(); top + 1];
        out[0].insert(Vec::new());
        for f in &self.facets {
            for mask in 1u32..(1 << f.len()) {
                let sub: Vec<usize> = (0..f.len())
                    .filter(|b| mask & (1 << b) != 0)
                    .map(|b| f[b])
                    .collect();
                out[sub.len()].insert(sub);
            }
        }
        out
    }

    /// `(f_{-1}, f_0, f_1, ...)`.
    pub fn f_vector(&self) -> Vec<u64> {
        self.faces_by_size()
            .iter()
            .map(|s| s.len() as u64)
            .collect()
    }

    /// Coefficients of `h(t) = f(t - 1)` where `f(t) = sum_i f_{i-1} t^{n-i}`.
    pub fn h_vector(&self) -> Vec<i64> {
        h_from_f(&self.f_vector())
    }

    /// Induced subcomplex on `w`, relabelled to `0..|w|`.
    pub fn induced(&self, w: &[usize]) -> SimplicialComplex {
        let faces = self
            .faces_by_size()
            .into_iter()
            .flatten()
            .filter(|f| !f.is_empty() && f.iter().all(|v| w.contains(v)))
            .map(|f| {
                f.iter()
                    .map(|v| w.iter().position(|x| x == v).unwrap())
                    .collect()
            });
        SimplicialComplex::from_faces(w.len(), faces)
    }

    /// Minimal non-faces as squarefree monomials in `nvars >= nverts`
    /// variables; variables past `nverts` are cone points and do not appear.
    pub fn stanley_reisner_ideal(&self, nvars: usize) -> MonomialIdeal {
        let max = (self.dim() + 2).max(1) as usize;
        let mut gens = Vec::new();
        for size in 1..=max {
            for s in subsets(self.nverts, size) {
                if !self.is_face(&s) && s.iter().all(|&v| self.is_face(&without(&s, v))) {
                    gens.push(Monomial::from_indices(nvars, &s));
                }
            }
        }
        MonomialIdeal::from_generators(nvars, gens)
    }

    /// Reduced rational homology dimensions `dim H~_k` for `k = -1, 0, 1, 2`.
    pub fn reduced_homology(&self) -> Result<[u64; 4], CombinatoricsError> {
        if self.dim() > 2 {
            return Err(CombinatoricsError::DimensionTooLarge(self.dim() as usize));
        }
        let faces: Vec<Vec<Vec<usize>>> = self
            .faces_by_size()
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        let count = |size: usize| faces.get(size).map_or(0, Vec::len);
        // rank of the boundary from size-`s` faces to size-`s-1` faces
        let rank = |s: usize| -> usize {
            if count(s) == 0 || s == 0 {
                return 0;
            }
            let lower = &faces[s - 1];
            let mut m = Matrix::zeros(lower.len(), faces[s].len());
            for (c, f) in faces[s].iter().enumerate() {
                for skip in 0..f.len() {
                    let sub = without(f, f[skip]);
                    let r = lower.iter().position(|g| *g == sub).unwrap();
                    m.set(r, c, int(if skip % 2 == 0 { 1 } else { -1 }));
                }
            }
            m.rank()
        };
        let mut out = [0u64; 4];
        for (k, slot) in out.iter_mut().enumerate() {
            let size = k; // H~_{k-1} lives on faces of size k
            *slot = (count(size) - rank(size) - rank(size + 1)) as u64;
        }
        Ok(out)
    }
}

fn without(s: &[usize], v: usize) -> Vec<usize> {
    s.iter().copied().filter(|&x| x != v).collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// `h(t) = f(t - 1)` on coefficient lists `(f_{-1}, ..., f_{n-1})`.
pub fn h_from_f(f: &[u64]) -> Vec<i64> {
    let n = f.len() - 1;
    // f(t) = sum_i f_{i-1} t^{n-i}; expand sum_i f_{i-1} (t-1)^{n-i}, collect
    // the coefficient of t^{n-k} as h_k
    let mut h = vec![0i64; n + 1];
    for (i, &fi) in f.iter().enumerate() {
        let e = n - i;
        for j in 0..=e {
            // (t-1)^e contributes C(e, j) (-1)^{e-j} t^j
            let sign = if (e - j) % 2 == 0 { 1 } else { -1 };
            h[n - j] += fi as i64 * binomial(e as i64, j as i64) * sign;
        }
    }
    h
}

/// Inverse of [`h_from_f`]: `f(t) = h(t + 1)`.
pub fn f_from_h(h: &[i64]) -> Vec<i64> {
    let n = h.len() - 1;
    let mut f = vec![0i64; n + 1];
    for (i, &hi) in h.iter().enumerate() {
        let e = n - i;
        for j in 0..=e {
            f[n - j] += hi * binomial(e as i64, j as i64);
        }
    }
    f
}

/// Graph on `x1..x_{d-1}` (vertices `0..d-1`): the complete graph on
/// `x2..x_{d-1}` plus the edge `x1 x2`. The variable `x_d` is free.
pub fn gamma_complex(d: usize) -> SimplicialComplex {
    let mut faces: Vec<Vec<usize>> = (0..d - 1).map(|v| vec![v]).collect();
    faces.push(vec![0, 1]);
    for i in 1..d - 1 {
        for j in i + 1..d - 1 {
            faces.push(vec![i, j]);
        }
    }
    SimplicialComplex::from_faces(d - 1, faces)
}

/// `<x1 x3, ..., x1 x_{d-1}>` plus all squarefree cubics in `x2..x_{d-1}`,
/// as an ideal of `k[x1..xd]`.
pub fn stanley_reisner(d: usize) -> MonomialIdeal {
    let mut gens: Vec<Monomial> = (2..d - 1)
        .map(|j| Monomial::from_indices(d, &[0, j]))
        .collect();
    for s in subsets(d - 2, 3) {
        let idx: Vec<usize> = s.iter().map(|v| v + 1).collect();
        gens.push(Monomial::from_indices(d, &idx));
    }
    MonomialIdeal::from_generators(d, gens)
}

/// `numerator(t) / (1 - t)^denominator_exp`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub numerator: Vec<i64>,
    pub denominator_exp: u32,
}

impl HilbertSeries {
    /// Coefficient of `t^n` in the power-series expansion.
    pub fn coefficient(&self, n: u64) -> i64 {
        let e = self.denominator_exp as i64;
        self.numerator
            .iter()
            .enumerate()
            .filter(|(k, _)| *k as u64 <= n)
            .map(|(k, &c)| {
                let m = n as i64 - k as i64;
                if e == 0 {
                    i64::from(m == 0) * c
                } else {
                    c * binomial(m + e - 1, e - 1)
                }
            })
            .sum()
    }

    pub fn to_text(&self) -> String {
        format!(
            "({})/(1-t)^{}",
            poly_t_text(&self.numerator),
            self.denominator_exp
        )
    }
}

fn poly_t_text(c: &[i64]) -> String {
    let mut out = String::new();
    for (k, &v) in c.iter().enumerate().filter(|(_, v)| **v != 0) {
        if !out.is_empty() {
            out.push_str(if v < 0 { " - " } else { " + " });
        } else if v < 0 {
            out.push('-');
        }
        let a = v.abs();
        match k {
            0 => write!(out, "{a}").unwrap(),
            _ => {
                if a != 1 {
                    write!(out, "{a}").unwrap();
                }
                out.push('t');
                if k > 1 {
                    write!(out, "^{k}").unwrap();
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn hilbert_series_formula(d: usize) -> HilbertSeries {
    let m = d as i64 - 3;
    HilbertSeries {
        numerator: vec![1, m, binomial(m, 2)],
        denominator_exp: 3,
    }
}

/// `a t^2 + b t + c` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

impl HilbertPolynomial {
    pub fn eval(&self, t: i64) -> Rational {
        let t = int(t);
        &self.a * &t * &t + &self.b * &t + &self.c
    }

    pub fn to_text(&self) -> String {
        use crate::rational::format;
        let mut out = String::new();
        for (c, var) in [(&self.a, "t^2"), (&self.b, "t"), (&self.c, "")] {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            match (out.is_empty(), neg) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            let a = c.abs();
            match (a.is_one(), var.is_empty()) {
                (true, false) => out.push_str(var),
                (_, true) => out.push_str(&format(&a)),
                (false, false) => out.push_str(&format!("{}*{var}", format(&a))),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// `((d^2 - 5d + 8)/4) t^2 - ((d^2 - 9d + 12)/4) t + 1`.
pub fn hilbert_polynomial_formula(d: usize) -> HilbertPolynomial {
    let d = d as i64;
    HilbertPolynomial {
        a: ratio(d * d - 5 * d + 8, 4),
        b: -ratio(d * d - 9 * d + 12, 4),
        c: int(1),
    }
}

/// Graded betti numbers `b_{i,j}` of a cyclic module `S/I`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub totals: Vec<u64>,
    pub rows: BTreeMap<String, Vec<u64>>,
}

impl BettiTable {
    pub fn from_entries(entries: impl IntoIterator<Item = ((usize, usize), u64)>) -> Self {
        BettiTable {
            entries: entries.into_iter().filter(|(_, v)| *v != 0).collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries keyed by `(i, j)`.
    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    pub fn totals(&self) -> Vec<u64> {
        let mut t = vec![0; self.projective_dimension() + 1];
        for (&(i, _), &v) in &self.entries {
            t[i] += v;
        }
        t
    }

    /// Row `r` lists `b_{i, i + r}` for `i = 0..=pdim`.
    pub fn row(&self, r: usize) -> Vec<u64> {
        (0..=self.projective_dimension())
            .map(|i| self.get(i, i + r))
            .collect()
    }

    /// `sum_{i,j} (-1)^i b_{i,j} t^j` as coefficients in `t`.
    pub fn alternating_sum(&self) -> Vec<i64> {
        let top = self.entries.keys().map(|k| k.1).max().unwrap_or(0);
        let mut out = vec![0i64; top + 1];
        for (&(i, j), &v) in &self.entries {
            out[j] += if i % 2 == 0 { v as i64 } else { -(v as i64) };
        }
        out
    }

    /// Entrywise `self <= other`.
    pub fn dominated_by(&self, other: &BettiTable) -> bool {
        self.entries
            .iter()
            .all(|(&(i, j), &v)| v <= other.get(i, j))
    }

    /// Column `i`, row `j - i`, zeros as `-`.
    pub fn render(&self) -> String {
        let cols = self.projective_dimension() + 1;
        let rows = self.regularity() + 1;
        let totals = self.totals();
        let cell = |v: u64| {
            if v == 0 {
                "-".to_string()
            } else {
                v.to_string()
            }
        };
        let width: Vec<usize> = (0..cols)
            .map(|i| {
                let body = (0..rows)
                    .map(|r| cell(self.get(i, i + r)).len())
                    .max()
                    .unwrap_or(1);
                body.max(totals[i].to_string().len())
            })
            .collect();
        let mut out = String::new();
        let line = |label: &str, vals: Vec<String>| -> String {
            let mut s = format!("{label:>6}");
            for (v, w) in vals.iter().zip(&width) {
                write!(s, " {v:>w$}").unwrap();
            }
            s
        };
        out.push_str(&line("total:", totals.iter().map(u64::to_string).collect()));
        out.push('\n');
        for r in 0..rows {
            out.push_str(&line(
                &format!("{r}:"),
                (0..cols).map(|i| cell(self.get(i, i + r))).collect(),
            ));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> BettiJson {
        BettiJson {
            totals: self.totals(),
            rows: (0..=self.regularity())
                .map(|r| (r.to_string(), self.row(r)))
                .collect(),
        }
    }

    pub fn from_json(j: &BettiJson) -> Self {
        let mut entries = BTreeMap::new();
        for (r, vals) in &j.rows {
            let r: usize = r.parse().unwrap_or(0);
            for (i, &v) in vals.iter().enumerate() {
                if v != 0 {
                    entries.insert((i, i + r), v);
                }
            }
        }
        BettiTable { entries }
    }
}

/// `b_{1,2} = d-3` and, for `i >= 3`,
/// `b_{i-2,i} = C(d-3,i) - (d-3) C(d-3,i-1) + C(d-3,2) C(d-3,i-2)`.
pub fn betti_formula(d: usize) -> Result<BettiTable, CombinatoricsError> {
    if d < 4 {
        return Err(CombinatoricsError::TooSmall(d));
    }
    let m = d as i64 - 3;
    let mut entries = vec![((0, 0), 1u64), ((1, 2), m as u64)];
    for i in 3..=(d + 1) as i64 {
        let v = binomial(m, i) - m * binomial(m, i - 1) + binomial(m, 2) * binomial(m, i - 2);
        if v < 0 {
            return Err(CombinatoricsError::NegativeBetti {
                i: (i - 2) as usize,
                j: i as usize,
                value: v,
            });
        }
        entries.push((((i - 2) as usize, i as usize), v as u64));
    }
    Ok(BettiTable::from_entries(entries))
}

/// Betti numbers of `k[x]/I_Delta` by Hochster's formula,
/// `b_{i,j} = sum_{|W| = j} dim H~_{j-i-1}(Delta|_W)`. Variables beyond the
/// complex's vertices are free and contribute nothing.
pub fn hochster_betti(
    complex: &SimplicialComplex,
    nvars: usize,
) -> Result<BettiTable, CombinatoricsError> {
    if complex.dim() > 2 {
        return Err(CombinatoricsError::DimensionTooLarge(complex.dim() as usize));
    }
    debug_assert!(nvars >= complex.nverts());
    let n = complex.nverts();
    let mut entries: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for mask in 0u64..(1 << n) {
        let w: Vec<usize> = (0..n).filter(|b| mask & (1 << b) != 0).collect();
        let j = w.len();
        let h = complex.induced(&w).reduced_homology()?;
        for (slot, &dim) in h.iter().enumerate() {
            // slot k holds H~_{k-1}; j - i - 1 = k - 1 gives i = j - k
            if dim > 0 && slot <= j {
                *entries.entry((j - slot, j)).or_insert(0) += dim;
            }
        }
    }
    Ok(BettiTable::from_entries(entries))
}

/// `(1 + (d-3) t + C(d-3,2) t^2) (1 - t)^(d-3)`.
pub fn expected_alternating_sum(d: usize) -> Vec<i64> {
    let m = d as i64 - 3;
    let mut acc = vec![1, m, binomial(m, 2)];
    for _ in 0..m {
        let mut next = vec![0; acc.len() + 1];
        for (k, &c) in acc.iter().enumerate() {
            next[k] += c;
            next[k + 1] -= c;
        }
        acc = next;
    }
    while acc.len() > 1 && *acc.last().unwrap() == 0 {
        acc.pop();
    }
    acc
}

/// `HF(S/I_Delta, t) = sum_i f_{i-1} C(t-1, i-1)` for `t >= 1`, `1` at `t = 0`,
/// with the complex on all of the ring's variables.
pub fn face_count_hilbert(f: &[u64], t: u64) -> u64 {
    if t == 0 {
        return 1;
    }
    f.iter()
        .enumerate()
        .skip(1)
        .map(|(i, &fi)| fi * binomial(t as i64 - 1, i as i64 - 1) as u64)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gamma_six_face_counts() {
        assert_eq!(gamma_complex(6).f_vector(), vec![1, 5, 7]);
        let g4 = gamma_complex(4);
        assert_eq!(g4.facets(), &[vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn tetrahedron_skeleton_vectors() {
        let k4 = SimplicialComplex::complete_graph(4);
        assert_eq!(k4.f_vector(), vec![1, 4, 6]);
        assert_eq!(k4.h_vector(), vec![1, 2, 3]);
    }

    #[test]
    fn stanley_reisner_generators() {
        let show = |d: usize| -> Vec<Vec<usize>> {
            let mut g: Vec<Vec<usize>> = stanley_reisner(d)
                .generators()
                .iter()
                .map(|m| m.support().iter().map(|v| v + 1).collect())
                .collect();
            g.sort_by_key(|s| (s.len(), s.clone()));
            g
        };
        assert_eq!(show(4), vec![vec![1, 3]]);
        assert_eq!(show(5), vec![vec![1, 3], vec![1, 4], vec![2, 3, 4]]);
        for d in 4..10 {
            let sr = stanley_reisner(d);
            assert_eq!(
                sr.generators().len() as i64,
                d as i64 - 3 + binomial(d as i64 - 2, 3)
            );
            assert_eq!(sr, gamma_complex(d).stanley_reisner_ideal(d));
        }
    }

    #[test]
    fn series_and_polynomial_values() {
        assert_eq!(hilbert_series_formula(6).numerator, vec![1, 3, 3]);
        assert_eq!(hilbert_series_formula(4).to_text(), "(1 + t)/(1-t)^3");
        let hp6 = hilbert_polynomial_formula(6);
        assert_eq!((hp6.a.clone(), hp6.b.clone()), (ratio(7, 2), ratio(3, 2)));
        let hp4 = hilbert_polynomial_formula(4);
        assert_eq!((hp4.a, hp4.b, hp4.c), (int(1), int(2), int(1)));
        let hp5 = hilbert_polynomial_formula(5);
        assert_eq!((hp5.a, hp5.b), (int(2), int(2)));
        assert_eq!(stanley_reisner(6).hilbert_function(2), 18);
        assert_eq!(stanley_reisner(6).hilbert_function(0), 1);
    }

    #[test]
    fn betti_six_matches_table() {
        let b = betti_formula(6).unwrap();
        assert_eq!(b.totals(), vec![1, 4, 6, 3]);
        assert_eq!(
            b.render(),
            "total: 1 4 6 3\n    0: 1 - - -\n    1: - 3 - -\n    2: - 1 6 3\n"
        );
    }

    #[test]
    fn small_betti_tables() {
        let b5 = betti_formula(5).unwrap();
        assert_eq!(
            b5.entries()
                .iter()
                .map(|(k, v)| (*k, *v))
                .collect::<Vec<_>>(),
            vec![((0, 0), 1), ((1, 2), 2), ((2, 4), 1)]
        );
        let b4 = betti_formula(4).unwrap();
        assert_eq!(b4.render(), "total: 1 1\n    0: 1 -\n    1: - 1\n");
        let empty = BettiTable::from_entries([((0, 0), 1)]);
        assert_eq!(empty.render(), "total: 1\n    0: 1\n");
    }

    #[test]
    fn hochster_small_cases() {
        let edge = SimplicialComplex::from_faces(2, vec![vec![0, 1]]);
        assert_eq!(
            hochster_betti(&edge, 2).unwrap(),
            BettiTable::from_entries([((0, 0), 1)])
        );
        let points = SimplicialComplex::from_faces(2, vec![vec![0], vec![1]]);
        assert_eq!(hochster_betti(&points, 2).unwrap().get(1, 2), 1);
        let h6 = hochster_betti(&gamma_complex(6), 6).unwrap();
        assert_eq!((h6.get(1, 2), h6.get(1, 3)), (3, 4));
    }

    #[test]
    fn json_round_trip() {
        let b = betti_formula(7).unwrap();
        let j = b.to_json();
        assert_eq!(j.rows["0"], vec![1, 0, 0, 0, 0]);
        assert_eq!(BettiTable::from_json(&j), b);
    }

    #[test]
    fn homology_of_circle() {
        let c = SimplicialComplex::from_faces(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]);
        assert_eq!(c.reduced_homology().unwrap(), [0, 0, 1, 0]);
        let empty = SimplicialComplex::from_faces(0, Vec::<Vec<usize>>::new());
        assert_eq!(empty.reduced_homology().unwrap(), [1, 0, 0, 0]);
    }

    proptest! {
        #[test]
        fn h_f_round_trip(n in 2usize..6, picks in proptest::collection::vec(proptest::collection::vec(0usize..6, 1..4), 1..8)) {
            let faces: Vec<Vec<usize>> = picks.into_iter().map(|f| f.into_iter().map(|v| v % n).collect()).collect();
            let c = SimplicialComplex::from_faces(n, faces);
            let f = c.f_vector();
            let back = f_from_h(&c.h_vector());
            prop_assert_eq!(back, f.iter().map(|&x| x as i64).collect::<Vec<_>>());
        }
    }
}
