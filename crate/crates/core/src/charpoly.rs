//! Characteristic polynomials without division, and the Cayley-Hamilton
//! annihilator they provide.
//!
//! `charpoly` uses the Samuelson-Berkowitz recurrence, which only adds and
//! multiplies ring elements and is therefore valid over `Z/n` with `n`
//! composite as well as over `Z` and `Q`. The convention is
//! `charpoly(M) = det(X*I - M)`, which is monic.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Vector};
use crate::poly::Polynomial;
use crate::ring::RingElement;

fn require_square(m: &Matrix) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    Ok(m.rows())
}

/// `det(X*I_n - M)`. A `0x0` matrix has characteristic polynomial `1`.
pub fn charpoly(m: &Matrix) -> Result<Polynomial> {
    let n = require_square(m)?;
    let ring = m.ring();

    // Highest-degree-first coefficients of the charpoly of the trailing
    // principal submatrix M[r.., r..], grown one row/column at a time.
    let mut p: Vec<RingElement> = vec![ring.one()];
    for r in (0..n).rev() {
        let s = n - r - 1;
        let a = &m[(r, r)];
        let row: Vec<&RingElement> = (r + 1..n).map(|j| &m[(r, j)]).collect();
        let mut col: Vector = (r + 1..n).map(|i| m[(i, r)].clone()).collect();

        // Toeplitz column: 1, -a, -R C, -R A C, ..., -R A^{s-1} C
        let mut t = Vec::with_capacity(s + 2);
        t.push(ring.one());
        t.push(-a);
        for step in 0..s {
            let rc = row.iter().zip(&col).fold(ring.zero(), |acc, (x, y)| &acc + &(*x * y));
            t.push(-&rc);
            if step + 1 < s {
                col = (0..s)
                    .map(|i| (0..s).fold(ring.zero(), |acc, j| &acc + &(&m[(r + 1 + i, r + 1 + j)] * &col[j])))
                    .collect();
            }
        }

        let next = (0..s + 2).map(|i| (0..=i.min(s)).fold(ring.zero(), |acc, j| &acc + &(&t[i - j] * &p[j]))).collect();
        p = next;
    }
    p.reverse();
    Polynomial::new(ring, p)
}

/// Horner evaluation `p(M) = sum p_k M^k` with `M^0 = I_n`.
pub fn eval_poly_at_matrix(p: &Polynomial, m: &Matrix) -> Result<Matrix> {
    let n = require_square(m)?;
    if p.ring() != m.ring() {
        return Err(Error::RingMismatch(p.ring(), m.ring()));
    }
    let ring = m.ring();
    let mut acc = Matrix::zeros(ring, n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(m)?;
        for i in 0..n {
            acc[(i, i)] = &acc[(i, i)] + c;
        }
    }
    Ok(acc)
}

/// Evaluates `charpoly(M)` at `M` and reports whether the result vanishes.
pub fn cayley_hamilton_check(m: &Matrix) -> Result<bool> {
    let chi = charpoly(m)?;
    Ok(eval_poly_at_matrix(&chi, m)?.is_zero())
}

/// Coefficients `(c_0, ..., c_n)` with `c_n = 1` and `sum c_k M^k = 0`.
pub fn monic_annihilator(m: &Matrix) -> Result<Vec<RingElement>> {
    let n = require_square(m)?;
    let chi = charpoly(m)?;
    let coeffs: Vec<RingElement> = (0..=n).map(|k| chi.coeff(k)).collect();
    debug_assert!(coeffs[n].is_one());
    Ok(coeffs)
}

/// `det M = (-1)^n * charpoly(M)(0)`.
pub fn determinant(m: &Matrix) -> Result<RingElement> {
    let n = require_square(m)?;
    let c0 = charpoly(m)?.coeff(0);
    Ok(if n % 2 == 0 { c0 } else { -&c0 })
}
