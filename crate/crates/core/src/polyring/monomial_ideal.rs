use std::collections::BTreeMap;

use super::{Exponent, Monomial};

/// Ideal generated by monomials, stored by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn from_generators(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort();
        all.dedup();
        let mut min: Vec<Monomial> = Vec::new();
        for m in all {
            // ascending graded order: any divisor of m was seen earlier
            if !min.iter().any(|g| g.divides(&m)) {
                min.push(m);
            }
        }
        MonomialIdeal { nvars, gens: min }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Minimal generators, ascending graded lex.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn generator_degrees(&self) -> BTreeMap<u32, usize> {
        let mut out = BTreeMap::new();
        for g in &self.gens {
            *out.entry(g.degree()).or_insert(0) += 1;
        }
        out
    }

    /// `dim_k (S/M)_t`: the number of degree-`t` monomials outside the ideal.
    pub fn hilbert_function(&self, t: u32) -> u64 {
        if self.nvars == 0 {
            return u64::from(t == 0 && !self.contains(&Monomial::one(0)));
        }
        let mut exps = vec![0 as Exponent; self.nvars];
        let mut count = 0;
        self.count_standard(0, t, &mut exps, &mut count);
        count
    }

    fn count_standard(&self, var: usize, left: u32, exps: &mut Vec<Exponent>, count: &mut u64) {
        if var + 1 == self.nvars {
            exps[var] = left as Exponent;
            if !self.contains(&Monomial::new(exps.iter().copied())) {
                *count += 1;
            }
            exps[var] = 0;
            return;
        }
        for e in 0..=left {
            exps[var] = e as Exponent;
            // prune: if the partial monomial is already in the ideal, every
            // completion is too
            let partial = Monomial::new(exps.iter().copied());
            if self.contains(&partial) {
                break;
            }
            self.count_standard(var + 1, left - e, exps, count);
        }
        exps[var] = 0;
    }
}

/// All monomials of degree `t` in `n` variables, descending graded lex.
pub fn monomials_of_degree(n: usize, t: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0 as Exponent; n];
    fn rec(var: usize, left: u32, exps: &mut Vec<Exponent>, out: &mut Vec<Monomial>) {
        let n = exps.len();
        if var + 1 == n {
            exps[var] = left as Exponent;
            out.push(Monomial::new(exps.iter().copied()));
            exps[var] = 0;
            return;
        }
        for e in (0..=left).rev() {
            exps[var] = e as Exponent;
            rec(var + 1, left - e, exps, out);
        }
        exps[var] = 0;
    }
    if n == 0 {
        if t == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, t, &mut exps, &mut out);
    out
}
