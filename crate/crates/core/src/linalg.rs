//! Dense exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Rational>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![vec![Rational::zero(); cols]; rows],
        }
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(data: Vec<Vec<Rational>>) -> Self {
        let cols = data.first().map_or(0, Vec::len);
        assert!(data.iter().all(|r| r.len() == cols), "ragged matrix");
        Matrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r][c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                t.data[c][r] = v.clone();
            }
        }
        t
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = Rational::one() / &m[r][c];
            for v in m[r].iter_mut().skip(c) {
                *v *= &inv;
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !pv.is_zero() {
                        *v -= &f * pv;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (
            Matrix {
                rows: self.rows,
                cols: self.cols,
                data: m,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : A v = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut out = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.data[row][free].clone();
            }
            out.push(v);
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Solves `A x = b`, returning one solution if consistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let aug = Matrix::from_rows(
            self.data
                .iter()
                .zip(b)
                .map(|(row, bi)| {
                    row.iter()
                        .cloned()
                        .chain(std::iter::once(bi.clone()))
                        .collect()
                })
                .collect(),
        );
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.data[row][self.cols].clone();
        }
        Some(x)
    }
}

/// The Mersenne prime `2^61 - 1`.
pub const MOD_PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MOD_PRIME as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

/// Image of a rational in `F_p`, `None` if `p` divides the denominator.
pub fn rational_mod_p(r: &Rational) -> Option<u64> {
    let p = BigInt::from(MOD_PRIME);
    let num = r.numer().mod_floor(&p);
    let den = r.denom().mod_floor(&p);
    if den.is_zero() {
        return None;
    }
    let num: u64 = num.try_into().expect("reduced below p");
    let den: u64 = den.try_into().expect("reduced below p");
    Some(mul_mod(num, pow_mod(den, MOD_PRIME - 2)))
}

/// Rank over `F_p` of a matrix of residues.
///
/// For a matrix reduced from a `p`-integral rational matrix this is a lower
/// bound for the rank over the rationals.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = pow_mod(rows[rank][c], MOD_PRIME - 2);
        let pivot: Vec<u64> = rows[rank].iter().map(|&v| mul_mod(v, inv)).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for (v, &pv) in row.iter_mut().zip(&pivot).skip(c) {
                *v = (*v + MOD_PRIME - mul_mod(f, pv)) % MOD_PRIME;
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Kernel of an integer matrix by fraction-free Gauss-Jordan elimination.
fn fraction_free_kernel(mut m: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<Rational>> {
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot_row = m[r].clone();
        let pv = pivot_row[c].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let f = row[c].clone();
            for (v, pr) in row.iter_mut().zip(&pivot_row) {
                *v = (&pv * &*v - &f * pr) / &prev;
            }
        }
        prev = pv;
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -Rational::new(m[row][free].clone(), m[row][pc].clone());
            }
            v
        })
        .collect()
}

/// Exact kernel of an integer matrix given by rows.
///
/// Rows independent modulo `p` are independent over the rationals, so the
/// kernel is first computed on a maximal such subset. Each kernel vector is
/// then checked exactly against the remaining rows; if any check fails the
/// whole matrix is reduced instead.
pub fn integer_kernel(rows: &[Vec<BigInt>], cols: usize) -> Vec<Vec<Rational>> {
    let p = BigInt::from(MOD_PRIME);
    let mut echelon: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut r: Vec<u64> = row
            .iter()
            .map(|v| u64::try_from(v.mod_floor(&p)).expect("reduced below p"))
            .collect();
        for (pc, prow) in &echelon {
            let f = r[*pc];
            if f != 0 {
                for (v, &pv) in r.iter_mut().zip(prow) {
                    *v = (*v + MOD_PRIME - mul_mod(f, pv)) % MOD_PRIME;
                }
            }
        }
        if let Some(pc) = r.iter().position(|&v| v != 0) {
            let inv = pow_mod(r[pc], MOD_PRIME - 2);
            let r: Vec<u64> = r.iter().map(|&v| mul_mod(v, inv)).collect();
            echelon.push((pc, r));
            chosen.push(idx);
            if chosen.len() == cols {
                break;
            }
        }
    }
    let to_rational = |rs: &[&Vec<BigInt>]| {
        Matrix::from_rows(
            rs.iter()
                .map(|r| {
                    r.iter()
                        .map(|v| Rational::from_integer(v.clone()))
                        .collect()
                })
                .collect(),
        )
    };
    if chosen.is_empty() {
        return Matrix::zeros(0, cols).kernel();
    }
    let selected: Vec<&Vec<BigInt>> = chosen.iter().map(|&i| &rows[i]).collect();
    let kernel = fraction_free_kernel(selected.iter().map(|r| (*r).clone()).collect(), cols);
    let integral: Vec<Vec<BigInt>> = kernel
        .iter()
        .map(|v| {
            let scale = crate::rational::primitive_integer_scaling(v);
            v.iter().map(|x| (x * &scale).to_integer()).collect()
        })
        .collect();
    let consistent = rows.iter().all(|row| {
        integral.iter().all(|k| {
            row.iter()
                .zip(k)
                .map(|(a, b)| a * b)
                .sum::<BigInt>()
                .is_zero()
        })
    });
    if consistent {
        kernel
    } else {
        let all: Vec<&Vec<BigInt>> = rows.iter().collect();
        to_rational(&all).kernel()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]).rank(), 2);
        assert_eq!(Matrix::zeros(3, 4).rank(), 0);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 7, 9]]);
        let k = a.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 1], &[1, -1]]);
        assert_eq!(a.solve(&[int(3), int(1)]).unwrap(), vec![int(2), int(1)]);
        let b = m(&[&[1, 1], &[2, 2]]);
        assert!(b.solve(&[int(1), int(3)]).is_none());
    }

    #[test]
    fn modular_residues() {
        use crate::rational::ratio;
        assert_eq!(rational_mod_p(&ratio(1, 2)).map(|h| mul_mod(h, 2)), Some(1));
        assert_eq!(rational_mod_p(&ratio(-3, 1)), Some(MOD_PRIME - 3));
    }

    #[test]
    fn integer_kernel_matches_rational_kernel() {
        let rows: Vec<Vec<BigInt>> = [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 1], [1, 3, 4, 5]]
            .iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        let k = integer_kernel(&rows, 4);
        assert_eq!(k.len(), 2);
        let m = Matrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|v| Rational::from_integer(v.clone()))
                        .collect()
                })
                .collect(),
        );
        assert!(k.iter().all(|v| m.mul_vec(v).iter().all(Zero::is_zero)));
        assert_eq!(integer_kernel(&[], 3).len(), 3);
    }

    proptest! {
        #[test]
        fn modular_rank_matches_small_integer_rank(entries in proptest::collection::vec(-3i64..4, 12)) {
            let rows: Vec<Vec<Rational>> = entries.chunks(4).map(|c| c.iter().map(|&v| int(v)).collect()).collect();
            let residues = rows.iter().map(|r| r.iter().map(|v| rational_mod_p(v).unwrap()).collect()).collect();
            prop_assert_eq!(rank_mod_p(residues), Matrix::from_rows(rows).rank());
        }

        #[test]
        fn rank_nullity(entries in proptest::collection::vec(-3i64..4, 12)) {
            let rows: Vec<Vec<Rational>> = entries.chunks(4).map(|c| c.iter().map(|&v| int(v)).collect()).collect();
            let a = Matrix::from_rows(rows);
            prop_assert_eq!(a.rank() + a.kernel().len(), 4);
            prop_assert_eq!(a.rank(), a.transpose().rank());
        }
    }
}
