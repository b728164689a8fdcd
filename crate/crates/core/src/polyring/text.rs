use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{Monomial, Order, Poly, PolyError, VarSet};
use crate::rational::{self, Rational};

/// One term of a polynomial in the JSON interchange format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

fn monomial_text(vars: &VarSet, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars.name(i).to_string()),
            _ => parts.push(format!("{}^{}", vars.name(i), e)),
        }
    }
    parts.join("*")
}

impl Poly {
    /// Human-readable form, terms in descending default graded lex, e.g.
    /// `x1*x3 - 2*x2^2*x4`.
    pub fn to_text(&self) -> String {
        self.text_from(self.terms.iter().rev())
    }

    /// Same as [`Poly::to_text`] with terms listed in descending `order`.
    pub fn to_text_in(&self, order: &Order) -> String {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.cmp(b.0, a.0));
        self.text_from(terms.into_iter())
    }

    fn text_from<'a>(&self, terms: impl Iterator<Item = (&'a Monomial, &'a Rational)>) -> String {
        let mut out = String::new();
        for (k, (m, c)) in terms.enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mon = monomial_text(&self.vars, m);
            if mon.is_empty() {
                out.push_str(&rational::format(&a));
            } else if a.is_one() {
                out.push_str(&mon);
            } else {
                out.push_str(&rational::format(&a));
                out.push('*');
                out.push_str(&mon);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Parses the text form produced by [`Poly::to_text`]. Whitespace is
    /// ignored; coefficients are integers or `p/q`.
    pub fn parse(vars: &Arc<VarSet>, text: &str) -> Result<Poly, PolyError> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(PolyError::Parse("empty input".into()));
        }
        let mut terms: Vec<(bool, &str)> = Vec::new();
        let mut start = 0;
        let mut neg = false;
        let bytes = s.as_bytes();
        let mut i = 0;
        if bytes[0] == b'+' || bytes[0] == b'-' {
            neg = bytes[0] == b'-';
            start = 1;
            i = 1;
        }
        while i < bytes.len() {
            let b = bytes[i];
            if (b == b'+' || b == b'-') && i > start && bytes[i - 1] != b'^' {
                terms.push((neg, &s[start..i]));
                neg = b == b'-';
                start = i + 1;
            }
            i += 1;
        }
        terms.push((neg, &s[start..]));

        let mut out = Poly::zero(vars);
        for (neg, t) in terms {
            if t.is_empty() {
                return Err(PolyError::Parse(format!("dangling sign in `{text}`")));
            }
            let mut coeff = Rational::one();
            let mut exps = vec![0u16; vars.len()];
            for factor in t.split('*') {
                if factor.is_empty() {
                    return Err(PolyError::Parse(format!("empty factor in `{t}`")));
                }
                if factor.as_bytes()[0].is_ascii_digit() {
                    let c = rational::parse(factor).map_err(|e| PolyError::Parse(e.to_string()))?;
                    coeff *= c;
                    continue;
                }
                let (name, e) = match factor.split_once('^') {
                    Some((n, e)) => {
                        let e: u16 = e
                            .parse()
                            .map_err(|_| PolyError::Parse(format!("bad exponent in `{factor}`")))?;
                        (n, e)
                    }
                    None => (factor, 1),
                };
                let idx = vars
                    .index_of(name)
                    .ok_or_else(|| PolyError::Parse(format!("unknown variable `{name}`")))?;
                exps[idx] += e;
            }
            if neg {
                coeff = -coeff;
            }
            if !coeff.is_zero() {
                out.add_term(Monomial::new(exps), coeff);
            }
        }
        Ok(out)
    }

    /// Terms in descending default order.
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| TermRecord {
                exponents: m.exps().iter().map(|&e| e as u32).collect(),
                coefficient: rational::format(c),
            })
            .collect()
    }

    pub fn from_records(vars: &Arc<VarSet>, records: &[TermRecord]) -> Result<Poly, PolyError> {
        let mut out = Poly::zero(vars);
        for r in records {
            if r.exponents.len() != vars.len() {
                return Err(PolyError::DimensionMismatch {
                    expected: vars.len(),
                    got: r.exponents.len(),
                });
            }
            let c = rational::parse(&r.coefficient).map_err(|e| PolyError::Parse(e.to_string()))?;
            let exps: Vec<u16> = r
                .exponents
                .iter()
                .map(|&e| {
                    u16::try_from(e)
                        .map_err(|_| PolyError::Parse(format!("exponent {e} too large")))
                })
                .collect::<Result<_, _>>()?;
            out.add_term(Monomial::new(exps), c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let r = VarSet::ambient(4);
        for src in ["x1*x3 - x2*x4", "-x1^2 + 1/3*x2*x3 - 7", "0", "5", "-x4"] {
            let p = Poly::parse(&r, src).unwrap();
            assert_eq!(p.to_text(), src);
            assert_eq!(Poly::parse(&r, &p.to_text()).unwrap(), p);
        }
    }

    #[test]
    fn parse_collects_like_terms() {
        let r = VarSet::plane();
        let p = Poly::parse(&r, "x*y + y*x - 2*x*y + z").unwrap();
        assert_eq!(p.to_text(), "z");
    }

    #[test]
    fn parse_errors() {
        let r = VarSet::plane();
        assert!(Poly::parse(&r, "x + w").is_err());
        assert!(Poly::parse(&r, "x +").is_err());
        assert!(Poly::parse(&r, "x^a").is_err());
        assert!(Poly::parse(&r, "").is_err());
    }

    #[test]
    fn records_round_trip() {
        let r = VarSet::ambient(3);
        let p = Poly::parse(&r, "2*x1^2*x3 - 1/5*x2").unwrap();
        let rec = p.to_records();
        assert_eq!(rec[0].exponents, vec![2, 0, 1]);
        assert_eq!(rec[0].coefficient, "2");
        assert_eq!(Poly::from_records(&r, &rec).unwrap(), p);
    }

    #[test]
    fn ordered_text() {
        let r = VarSet::ambient(3);
        let p = Poly::parse(&r, "x1*x2 + x3^2").unwrap();
        assert_eq!(p.to_text_in(&Order::rotated(3, 2)), "x3^2 + x1*x2");
    }
}
