//! Gauss-Jordan elimination for `Q` and `Z/p` with `p` prime.

use crate::matrix::{Matrix, Vector};
use crate::ring::RingElement;

/// Reduced row echelon form and the pivot column of each nonzero row.
pub(crate) fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a[(r, c)].inverse_of_unit().expect("nonzero element of a field");
        for j in c..cols {
            a[(r, j)] = &a[(r, j)] * &inv;
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..cols {
                let t = &f * &a[(r, j)];
                a[(i, j)] = &a[(i, j)] - &t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub(crate) fn solve(m: &Matrix, b: &[RingElement]) -> Option<Vector> {
    let ring = m.ring();
    let n = m.cols();
    let aug = m.hcat(&Matrix::column_vector(ring, b).expect("ring checked by caller")).expect("rows checked by caller");
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![ring.zero(); n];
    for (row, &c) in pivots.iter().enumerate() {
        x[c] = r[(row, n)].clone();
    }
    Some(x)
}

/// Basis of the null space, one vector per free column.
pub(crate) fn kernel(m: &Matrix) -> Vec<Vector> {
    let ring = m.ring();
    let n = m.cols();
    let (r, pivots) = rref(m);
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![ring.zero(); n];
            v[free] = ring.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&r[(row, free)];
            }
            v
        })
        .collect()
}
