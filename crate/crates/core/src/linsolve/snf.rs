//! Smith normal form over `Z`: `U * M * V = S` with `U`, `V` unimodular and
//! `S` diagonal with nonnegative entries `d_1 | d_2 | ... | d_r`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{from_int_rows, require_integers, to_int_rows, IntRows};
use crate::error::Result;
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub s: Matrix,
    pub u: Matrix,
    pub v: Matrix,
}

impl SnfResult {
    /// Diagonal entries `d_1, ..., d_min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols())).map(|i| self.s[(i, i)].as_int().cloned().unwrap_or_default()).collect()
    }
}

fn identity_rows(n: usize) -> IntRows {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

struct SnfCalc {
    a: IntRows,
    u: IntRows,
    v: IntRows,
    rows: usize,
    cols: usize,
}

impl SnfCalc {
    fn swap_rows(&mut self, i: usize, k: usize) {
        self.a.swap(i, k);
        self.u.swap(i, k);
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            row.swap(j, k);
        }
    }

    /// `row[dst] += q * row[src]`
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for m in [&mut self.a, &mut self.u] {
            let src_row = m[src].clone();
            for (x, y) in m[dst].iter_mut().zip(&src_row) {
                *x += q * y;
            }
        }
    }

    /// `col[dst] += q * col[src]`
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for row in self.a.iter_mut().chain(self.v.iter_mut()) {
            let t = q * &row[src];
            row[dst] += t;
        }
    }

    fn smallest_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    fn diagonalize_at(&mut self, t: usize) -> bool {
        loop {
            let Some((pi, pj)) = self.smallest_entry(t) else {
                return false;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            let p = self.a[t][t].clone();

            let mut clean = true;
            for i in t + 1..self.rows {
                let q = self.a[i][t].div_floor(&p);
                if !q.is_zero() {
                    self.add_row(i, t, &-q);
                }
                clean &= self.a[i][t].is_zero();
            }
            for j in t + 1..self.cols {
                let q = self.a[t][j].div_floor(&p);
                if !q.is_zero() {
                    self.add_col(j, t, &-q);
                }
                clean &= self.a[t][j].is_zero();
            }
            if !clean {
                continue;
            }

            // pivot must divide the rest of the block
            let offending = (t + 1..self.rows).find(|&i| (t + 1..self.cols).any(|j| !self.a[i][j].is_multiple_of(&p)));
            match offending {
                Some(i) => self.add_row(t, i, &BigInt::one()),
                None => {
                    if p.is_negative() {
                        for m in [&mut self.a, &mut self.u] {
                            for x in m[t].iter_mut() {
                                *x = -&*x;
                            }
                        }
                    }
                    return true;
                }
            }
        }
    }
}

pub fn snf(m: &Matrix) -> Result<SnfResult> {
    require_integers(m)?;
    let (rows, cols) = (m.rows(), m.cols());
    let mut calc = SnfCalc { a: to_int_rows(m), u: identity_rows(rows), v: identity_rows(cols), rows, cols };
    for t in 0..rows.min(cols) {
        if !calc.diagonalize_at(t) {
            break;
        }
    }
    Ok(SnfResult {
        s: from_int_rows(&calc.a, rows, cols),
        u: from_int_rows(&calc.u, rows, rows),
        v: from_int_rows(&calc.v, cols, cols),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::determinant;
    use crate::ring::Ring;

    const Z: Ring = Ring::Integers;

    fn check_contract(m: &Matrix, res: &SnfResult) {
        assert_eq!(res.u.mul(m).unwrap().mul(&res.v).unwrap(), res.s);
        for t in [&res.u, &res.v] {
            let d = determinant(t).unwrap();
            assert!(d == Z.one() || d == Z.from_i64(-1));
        }
    }

    #[test]
    fn zero_matrix() {
        let m = Matrix::zeros(Z, 2, 2);
        let res = snf(&m).unwrap();
        assert!(res.s.is_zero());
        check_contract(&m, &res);
    }

    #[test]
    fn coprime_diagonal() {
        let m = Matrix::from_i64_rows(Z, &[&[2, 0], &[0, 3]]);
        let res = snf(&m).unwrap();
        assert_eq!(res.s, Matrix::from_i64_rows(Z, &[&[1, 0], &[0, 6]]));
        check_contract(&m, &res);
    }

    #[test]
    fn two_by_two() {
        let m = Matrix::from_i64_rows(Z, &[&[2, 4], &[6, 8]]);
        let res = snf(&m).unwrap();
        assert_eq!(res.s, Matrix::from_i64_rows(Z, &[&[2, 0], &[0, 4]]));
        check_contract(&m, &res);
    }

    #[test]
    fn rectangular() {
        let m = Matrix::from_i64_rows(Z, &[&[6, 4, 10]]);
        let res = snf(&m).unwrap();
        assert_eq!(res.diagonal(), vec![BigInt::from(2)]);
        check_contract(&m, &res);
        let t = m.transpose();
        let res = snf(&t).unwrap();
        assert_eq!(res.diagonal(), vec![BigInt::from(2)]);
        check_contract(&t, &res);
    }
}
