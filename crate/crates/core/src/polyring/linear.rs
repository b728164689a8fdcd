//! Linear algebra on finite sets of polynomials via their coefficient vectors.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{Monomial, Poly, PolyError, VarSet};
use crate::linalg::Matrix;
use crate::rational::Rational;

/// Matrix whose column `k` is the coefficient vector of `polys[k]`.
fn coefficient_matrix(polys: &[Poly]) -> Matrix {
    let mut index: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for p in polys {
        for m in p.monomials() {
            let n = index.len();
            index.entry(m).or_insert(n);
        }
    }
    let mut a = Matrix::zeros(index.len(), polys.len());
    for (k, p) in polys.iter().enumerate() {
        for (m, c) in p.terms() {
            a.set(index[m], k, c.clone());
        }
    }
    a
}

/// Incrementally built echelon basis of a space of polynomials.
///
/// Each stored element is monic with a distinct leading monomial, and no
/// stored element has a term at another element's pivot.
#[derive(Clone, Debug, Default)]
pub struct LinearSpan {
    rows: BTreeMap<Monomial, Poly>,
}

impl LinearSpan {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `p` after eliminating every pivot monomial.
    pub fn reduce(&self, p: &Poly) -> Poly {
        let mut r = p.clone();
        // pivots are processed from the top; subtracting a row only touches
        // monomials below its pivot
        for (m, row) in self.rows.iter().rev() {
            let c = r.coefficient(m);
            if !num_traits::Zero::is_zero(&c) {
                r.add_scaled(row, &-c, &Monomial::one(r.nvars()));
            }
        }
        r
    }

    pub fn contains(&self, p: &Poly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Adds `p`; returns false if it was already in the span.
    pub fn insert(&mut self, p: &Poly) -> bool {
        let r = self.reduce(p);
        let Some(lead) = r.leading_monomial().cloned() else {
            return false;
        };
        let r = r.monic();
        for row in self.rows.values_mut() {
            let c = row.coefficient(&lead);
            if !num_traits::Zero::is_zero(&c) {
                row.add_scaled(&r, &-c, &Monomial::one(r.nvars()));
            }
        }
        self.rows.insert(lead, r);
        true
    }

    /// Pivot monomials, ascending.
    pub fn pivots(&self) -> impl Iterator<Item = &Monomial> {
        self.rows.keys()
    }

    /// The reduced echelon basis, ascending by pivot.
    pub fn basis(&self) -> impl Iterator<Item = &Poly> {
        self.rows.values()
    }
}

/// Dimension of the linear span.
pub fn span_rank(polys: &[Poly]) -> usize {
    let mut s = LinearSpan::new();
    for p in polys {
        s.insert(p);
    }
    s.dim()
}

pub fn spans_equal(a: &[Poly], b: &[Poly]) -> bool {
    let ra = span_rank(a);
    let rb = span_rank(b);
    let both: Vec<Poly> = a.iter().chain(b).cloned().collect();
    ra == rb && span_rank(&both) == ra
}

/// Kernel of the linear map sending `source_basis[k]` to `images[k]`, as
/// coefficient vectors over `source_basis`.
pub fn graded_kernel(
    images: &[Poly],
    source_basis: &[Monomial],
) -> Result<Vec<Vec<Rational>>, PolyError> {
    if images.len() != source_basis.len() {
        return Err(PolyError::DimensionMismatch {
            expected: source_basis.len(),
            got: images.len(),
        });
    }
    if images.is_empty() {
        return Ok(Vec::new());
    }
    Ok(coefficient_matrix(images).kernel())
}

/// [`graded_kernel`] with the kernel vectors assembled into polynomials of the
/// source ring.
pub fn kernel_polys(
    images: &[Poly],
    source_basis: &[Monomial],
    source: &Arc<VarSet>,
) -> Result<Vec<Poly>, PolyError> {
    let ker = graded_kernel(images, source_basis)?;
    Ok(ker
        .into_iter()
        .map(|v| Poly::from_terms(source, source_basis.iter().cloned().zip(v)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::monomials_of_degree;

    #[test]
    fn veronese_kernel() {
        // x1 -> s^2, x2 -> s*t, x3 -> t^2: quadric kernel is x1*x3 - x2^2
        let target = VarSet::new(["s", "t"]).unwrap();
        let source = VarSet::ambient(3);
        let images = [
            Poly::parse(&target, "s^2").unwrap(),
            Poly::parse(&target, "s*t").unwrap(),
            Poly::parse(&target, "t^2").unwrap(),
        ];
        let basis = monomials_of_degree(3, 2);
        let quad_images: Vec<Poly> = basis
            .iter()
            .map(|m| {
                Poly::monomial(&source, m.clone(), Rational::from_integer(1.into()))
                    .substitute(&images)
                    .unwrap()
            })
            .collect();
        let ker = kernel_polys(&quad_images, &basis, &source).unwrap();
        assert_eq!(ker.len(), 1);
        assert_eq!(ker[0].primitive().to_text(), "x1*x3 - x2^2");
    }

    #[test]
    fn mismatch_is_reported() {
        let r = VarSet::ambient(2);
        let err = graded_kernel(&[Poly::var(&r, 0)], &[]).unwrap_err();
        assert_eq!(
            err,
            PolyError::DimensionMismatch {
                expected: 0,
                got: 1
            }
        );
    }

    #[test]
    fn echelon_span_is_reduced() {
        let r = VarSet::ambient(3);
        let mut s = LinearSpan::new();
        assert!(s.insert(&Poly::parse(&r, "x1^2 + x2^2").unwrap()));
        assert!(s.insert(&Poly::parse(&r, "x2^2 - x3^2").unwrap()));
        assert!(!s.insert(&Poly::parse(&r, "x1^2 + x3^2").unwrap()));
        let basis: Vec<String> = s.basis().map(|p| p.to_text()).collect();
        assert_eq!(basis, vec!["x2^2 - x3^2", "x1^2 + x3^2"]);
        assert_eq!(span_rank(&[Poly::zero(&r)]), 0);
    }

    #[test]
    fn span_equality() {
        let r = VarSet::ambient(2);
        let a = [
            Poly::parse(&r, "x1 + x2").unwrap(),
            Poly::parse(&r, "x1 - x2").unwrap(),
        ];
        let b = [Poly::var(&r, 0), Poly::var(&r, 1)];
        assert!(spans_equal(&a, &b));
        assert!(!spans_equal(&a[..1], &b[..1]));
    }
}
