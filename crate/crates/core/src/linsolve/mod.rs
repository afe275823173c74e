//! Linear systems over the supported rings.
//!
//! * `Z`: column Hermite normal form and back-substitution.
//! * `Q`, `Z/p` (p prime): Gauss-Jordan elimination.
//! * `Z/n` (n composite): lift to `Z` and solve `[M | n*I] (x, y) = b`,
//!   keeping `x mod n`.
//!
//! All solvers are deterministic: pivots are taken in index order.

mod field;
mod hnf;
mod snf;

pub use hnf::{hnf, HnfResult};
pub use snf::{snf, SnfResult};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::{is_zero_vector, Matrix, Vector};
use crate::ring::{Ring, RingElement};

pub(crate) type IntRows = Vec<Vec<BigInt>>;

pub(crate) fn require_integers(m: &Matrix) -> Result<()> {
    if m.ring() != Ring::Integers {
        return Err(Error::UnsupportedRing { expected: "the integers", got: m.ring() });
    }
    Ok(())
}

/// Integer representatives of the entries (residues in `[0, n)` for `Z/n`).
pub(crate) fn to_int_rows(m: &Matrix) -> IntRows {
    (0..m.rows()).map(|i| m.row(i).iter().map(|e| e.to_bigint().expect("integral entry")).collect()).collect()
}

pub(crate) fn from_int_rows(rows: &IntRows, nrows: usize, ncols: usize) -> Matrix {
    let data = rows.iter().flatten().map(|x| RingElement::Int(x.clone())).collect();
    Matrix::new(Ring::Integers, nrows, ncols, data).expect("shape preserved")
}

fn check_system(m: &Matrix, b: &[RingElement]) -> Result<()> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} for a matrix with {} rows",
            b.len(),
            m.rows()
        )));
    }
    if let Some(bad) = b.iter().find(|e| e.ring() != m.ring()) {
        return Err(Error::RingMismatch(m.ring(), bad.ring()));
    }
    Ok(())
}

/// Some `x` with `M x = b`, or `None` when the system has no solution.
pub fn solve(m: &Matrix, b: &[RingElement]) -> Result<Option<Vector>> {
    check_system(m, b)?;
    let ring = m.ring();
    let x = match ring {
        Ring::Integers => solve_integers(m, b),
        _ if ring.is_field() => field::solve(m, b),
        Ring::ModN(n) => {
            let lifted = lift_with_modulus_block(m, n);
            let rhs: Vector = b.iter().map(|e| RingElement::Int(e.to_bigint().unwrap())).collect();
            solve_integers(&lifted, &rhs)
                .map(|xy| xy[..m.cols()].iter().map(|e| ring.from_bigint(e.as_int().unwrap())).collect())
        }
        Ring::Rationals => unreachable!("Q is a field"),
    };
    debug_assert!(x.as_ref().is_none_or(|x| m.mul_vec(x).unwrap() == b));
    Ok(x)
}

/// `[M~ | n*I_m]` over `Z`, where `M~` holds the residues of `M`.
fn lift_with_modulus_block(m: &Matrix, n: u64) -> Matrix {
    let lifted = from_int_rows(&to_int_rows(m), m.rows(), m.cols());
    let block = Matrix::identity(Ring::Integers, m.rows()).scalar_mul(&RingElement::Int(BigInt::from(n))).unwrap();
    lifted.hcat(&block).unwrap()
}

fn solve_integers(m: &Matrix, b: &[RingElement]) -> Option<Vector> {
    let res = hnf(m).expect("integer matrix");
    let h = to_int_rows(&res.h);
    let b: Vec<BigInt> = b.iter().map(|e| e.as_int().unwrap().clone()).collect();

    let mut y = vec![BigInt::zero(); m.cols()];
    for (k, &r) in res.pivot_rows.iter().enumerate() {
        let partial: BigInt = (0..k).map(|j| &h[r][j] * &y[j]).sum();
        let rest = &b[r] - partial;
        let (q, rem) = rest.div_rem(&h[r][k]);
        if !rem.is_zero() {
            return None;
        }
        y[k] = q;
    }
    let hy: Vec<BigInt> = h.iter().map(|row| row.iter().zip(&y).map(|(a, c)| a * c).sum()).collect();
    if hy != b {
        return None;
    }
    let y: Vector = y.into_iter().map(RingElement::Int).collect();
    Some(res.u.mul_vec(&y).unwrap())
}

/// Columns generating `{x : M x = 0}`.
///
/// Over `Z` this is a basis taken from the Hermite transform; over fields a
/// null-space basis; over composite `Z/n` the projection of the integer
/// kernel of `[M | n*I]`, with zero and repeated columns dropped.
pub fn kernel_gens(m: &Matrix) -> Result<Matrix> {
    let ring = m.ring();
    let cols = match ring {
        Ring::Integers => {
            let res = hnf(m)?;
            (res.rank()..m.cols()).map(|j| res.u.column(j)).collect()
        }
        _ if ring.is_field() => field::kernel(m),
        Ring::ModN(n) => {
            let lifted = lift_with_modulus_block(m, n);
            let res = hnf(&lifted)?;
            let mut gens: Vec<Vector> = Vec::new();
            for j in res.rank()..lifted.cols() {
                let v: Vector = (0..m.cols()).map(|i| ring.from_bigint(res.u[(i, j)].as_int().unwrap())).collect();
                if !is_zero_vector(&v) && !gens.contains(&v) {
                    gens.push(v);
                }
            }
            gens
        }
        Ring::Rationals => unreachable!("Q is a field"),
    };
    Matrix::from_columns(ring, m.cols(), &cols)
}

/// Evidence that `v = G * coeffs + R * aux`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MembershipWitness {
    pub coeffs: Vector,
    pub aux: Vector,
}

impl MembershipWitness {
    /// Re-multiplies the witness. Also insists that coefficients on zero
    /// columns are zero, so the witness is in normal form.
    pub fn check(&self, v: &[RingElement], gens: &Matrix, relations: Option<&Matrix>) -> bool {
        let empty = Matrix::zeros(gens.ring(), gens.rows(), 0);
        let rels = relations.unwrap_or(&empty);
        if self.coeffs.len() != gens.cols() || self.aux.len() != rels.cols() || v.len() != gens.rows() {
            return false;
        }
        if rels.rows() != gens.rows() || rels.ring() != gens.ring() {
            return false;
        }
        let normal = |m: &Matrix, c: &[RingElement]| (0..m.cols()).all(|j| c[j].is_zero() || !m.is_zero_column(j));
        if !normal(gens, &self.coeffs) || !normal(rels, &self.aux) {
            return false;
        }
        let (Ok(a), Ok(b)) = (gens.mul_vec(&self.coeffs), rels.mul_vec(&self.aux)) else {
            return false;
        };
        a.iter().zip(&b).zip(v).all(|((x, y), t)| &(x + y) == t)
    }
}

/// Decides `v in colspan(G) + colspan(R)` and returns explicit coefficients.
pub fn membership(v: &[RingElement], gens: &Matrix, relations: Option<&Matrix>) -> Result<Option<MembershipWitness>> {
    let ring = gens.ring();
    let empty = Matrix::zeros(ring, gens.rows(), 0);
    let rels = relations.unwrap_or(&empty);
    if rels.ring() != ring {
        return Err(Error::RingMismatch(ring, rels.ring()));
    }
    if rels.rows() != gens.rows() {
        return Err(Error::DimensionMismatch(format!(
            "generators have {} rows, relations {}",
            gens.rows(),
            rels.rows()
        )));
    }
    let all = gens.hcat(rels)?;
    check_system(&all, v)?;

    // Solve only against nonzero columns; zero columns get coefficient 0.
    let live: Vec<usize> = (0..all.cols()).filter(|&j| !all.is_zero_column(j)).collect();
    let Some(x) = solve(&all.select_columns(&live), v)? else {
        return Ok(None);
    };
    let mut full = vec![ring.zero(); all.cols()];
    for (&j, xj) in live.iter().zip(x) {
        full[j] = xj;
    }
    let aux = full.split_off(gens.cols());
    Ok(Some(MembershipWitness { coeffs: full, aux }))
}
