//! Column Hermite normal form over `Z`.
//!
//! Convention: `M * U = H` with `U` unimodular. Nonzero columns of `H`
//! come first; the pivot of a nonzero column is its topmost nonzero entry
//! and is positive; pivot rows strictly increase from left to right; within
//! a pivot row the entries left of the pivot lie in `[0, pivot)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{from_int_rows, require_integers, to_int_rows, IntRows};
use crate::error::Result;
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnfResult {
    pub h: Matrix,
    pub u: Matrix,
    /// Row index of the pivot of column `k`, for each nonzero column `k`.
    pub pivot_rows: Vec<usize>,
}

impl HnfResult {
    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }
}

pub fn hnf(m: &Matrix) -> Result<HnfResult> {
    require_integers(m)?;
    let (h, u, pivot_rows) = hnf_rows(to_int_rows(m), m.rows(), m.cols());
    Ok(HnfResult { h: from_int_rows(&h, m.rows(), m.cols()), u: from_int_rows(&u, m.cols(), m.cols()), pivot_rows })
}

/// `col[dst] = a*col[dst] + b*col[src]` and `col[src] = c*col[dst] + d*col[src]`
/// applied simultaneously to both `h` and `u`.
#[allow(clippy::too_many_arguments)]
fn combine_columns(rows: &mut IntRows, dst: usize, src: usize, a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt) {
    for row in rows.iter_mut() {
        let x = row[dst].clone();
        let y = row[src].clone();
        row[dst] = a * &x + b * &y;
        row[src] = c * &x + d * &y;
    }
}

fn swap_columns(rows: &mut IntRows, a: usize, b: usize) {
    for row in rows.iter_mut() {
        row.swap(a, b);
    }
}

fn negate_column(rows: &mut IntRows, j: usize) {
    for row in rows.iter_mut() {
        row[j] = -&row[j];
    }
}

/// `col[dst] -= q * col[src]`.
fn sub_column_multiple(rows: &mut IntRows, dst: usize, src: usize, q: &BigInt) {
    for row in rows.iter_mut() {
        let t = q * &row[src];
        row[dst] -= t;
    }
}

pub(crate) fn hnf_rows(mut h: IntRows, rows: usize, cols: usize) -> (IntRows, IntRows, Vec<usize>) {
    let mut u: IntRows =
        (0..cols).map(|i| (0..cols).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect();
    let mut pivot_rows = Vec::new();
    let mut pc = 0;
    for r in 0..rows {
        if pc == cols {
            break;
        }
        for j in pc + 1..cols {
            if h[r][j].is_zero() {
                continue;
            }
            if h[r][pc].is_zero() {
                swap_columns(&mut h, pc, j);
                swap_columns(&mut u, pc, j);
                continue;
            }
            let a = h[r][pc].clone();
            let b = h[r][j].clone();
            let e = a.extended_gcd(&b);
            let (ag, bg) = (&a / &e.gcd, &b / &e.gcd);
            let nbg = -bg;
            // [x  -b/g]
            // [y   a/g]  has determinant 1.
            combine_columns(&mut h, pc, j, &e.x, &e.y, &nbg, &ag);
            combine_columns(&mut u, pc, j, &e.x, &e.y, &nbg, &ag);
        }
        if h[r][pc].is_zero() {
            continue;
        }
        if h[r][pc].is_negative() {
            negate_column(&mut h, pc);
            negate_column(&mut u, pc);
        }
        let p = h[r][pc].clone();
        for j in 0..pc {
            let q = h[r][j].div_floor(&p);
            if !q.is_zero() {
                sub_column_multiple(&mut h, j, pc, &q);
                sub_column_multiple(&mut u, j, pc, &q);
            }
        }
        pivot_rows.push(r);
        pc += 1;
    }
    (h, u, pivot_rows)
}
