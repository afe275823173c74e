//! Independent oracles and random generators shared by the integration
//! tests. Nothing here calls the library's solvers or normal forms.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use orzech_core::{Matrix, ModulePresentation, Polynomial, Ring, RingElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const Z: Ring = Ring::Integers;
pub const Q: Ring = Ring::Rationals;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Z in `[-9, 9]`, Q as `p/q` with `|p| <= 9`, `1 <= q <= 5`, `Z/n` uniform.
pub fn random_element(rng: &mut impl Rng, ring: Ring) -> RingElement {
    match ring {
        Ring::Integers => ring.from_i64(rng.gen_range(-9..=9)),
        Ring::Rationals => {
            let p = BigInt::from(rng.gen_range(-9..=9));
            let q = BigInt::from(rng.gen_range(1..=5));
            ring.from_fraction(&p, &q).unwrap()
        }
        Ring::ModN(n) => ring.from_i64(rng.gen_range(0..n as i64)),
    }
}

pub fn random_matrix(rng: &mut impl Rng, ring: Ring, rows: usize, cols: usize) -> Matrix {
    let data = (0..rows * cols).map(|_| random_element(rng, ring)).collect();
    Matrix::new(ring, rows, cols, data).unwrap()
}

pub fn random_int_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> Matrix {
    let data = (0..rows * cols).map(|_| Z.from_i64(rng.gen_range(-bound..=bound))).collect();
    Matrix::new(Z, rows, cols, data).unwrap()
}

pub fn matrix_from_i64(ring: Ring, rows: usize, cols: usize, entries: &[Vec<i64>]) -> Matrix {
    let data = entries.iter().flatten().map(|&x| ring.from_i64(x)).collect();
    Matrix::new(ring, rows, cols, data).unwrap()
}

pub fn int_rows(m: &Matrix) -> Vec<Vec<BigInt>> {
    m.to_rows().iter().map(|r| r.iter().map(|e| e.to_bigint().unwrap()).collect()).collect()
}

fn poly_det(m: &[Vec<Polynomial>], ring: Ring) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::constant(ring.one());
    }
    let mut acc = Polynomial::zero(ring);
    for j in 0..n {
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = m[0][j].mul(&poly_det(&minor, ring)).unwrap();
        acc = if j % 2 == 0 { acc.add(&term).unwrap() } else { acc.sub(&term).unwrap() };
    }
    acc
}

/// `det(X I - M)` by cofactor expansion over the polynomial ring.
pub fn cofactor_charpoly(m: &Matrix) -> Polynomial {
    let ring = m.ring();
    let n = m.rows();
    let entries: Vec<Vec<Polynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = Polynomial::constant(m[(i, j)].clone()).neg();
                    if i == j {
                        Polynomial::x(ring).add(&c).unwrap()
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    poly_det(&entries, ring)
}

pub fn laplace_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut acc = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * laplace_det(&minor);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// Invariant factors `D_k / D_{k-1}`, where `D_k` is the gcd of all
/// `k x k` minors.
pub fn minors_invariant_factors(m: &[Vec<BigInt>], rows: usize, cols: usize) -> Vec<BigInt> {
    let mut prev = BigInt::one();
    let mut out = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        for rs in combinations(rows, k) {
            for cs in combinations(cols, k) {
                let sub: Vec<Vec<BigInt>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect()).collect();
                g = g.gcd(&laplace_det(&sub));
            }
        }
        out.push(if prev.is_zero() { BigInt::zero() } else { &g / &prev });
        prev = g;
    }
    out
}

fn mul_i64(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter().map(|row| (0..cols).map(|j| (0..inner).map(|t| row[t] * b[t][j]).sum()).collect()).collect()
}

fn identity_i64(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// `Z^m / colspan(P D)` with `D = diag(d)`. The map `x -> P^{-1} x mod d`
/// identifies it with `Z/d_1 x ... x Z/d_m`, which gives a normal form
/// for elements independent of the library.
#[derive(Debug, Clone)]
pub struct FiniteModule {
    pub d: Vec<i64>,
    pub p: Vec<Vec<i64>>,
    pub p_inv: Vec<Vec<i64>>,
    /// `m x r`, row-major.
    pub relations: Vec<Vec<i64>>,
}

impl FiniteModule {
    pub fn random(rng: &mut impl Rng, max_order: i64) -> FiniteModule {
        let m = rng.gen_range(1..=3);
        let d: Vec<i64> = loop {
            let d: Vec<i64> = (0..m).map(|_| rng.gen_range(1..=8)).collect();
            if d.iter().product::<i64>() <= max_order {
                break d;
            }
        };
        let mut p = identity_i64(m);
        let mut p_inv = identity_i64(m);
        if m > 1 {
            for _ in 0..rng.gen_range(0..=4) {
                let a = rng.gen_range(0..m);
                let b = (a + rng.gen_range(1..m)) % m;
                let c = *[-2, -1, 1, 2].get(rng.gen_range(0..4)).unwrap();
                let mut e = identity_i64(m);
                e[a][b] = c;
                let mut e_inv = identity_i64(m);
                e_inv[a][b] = -c;
                p = mul_i64(&p, &e);
                p_inv = mul_i64(&e_inv, &p_inv);
            }
        }
        let diag: Vec<Vec<i64>> = (0..m).map(|i| (0..m).map(|j| if i == j { d[i] } else { 0 }).collect()).collect();
        let mut relations = mul_i64(&p, &diag);
        if rng.gen_bool(0.5) {
            let w: Vec<Vec<i64>> = loop {
                let w: Vec<Vec<i64>> = (0..m).map(|_| vec![rng.gen_range(-2..=2)]).collect();
                if w.iter().any(|x| x[0] != 0) {
                    break w;
                }
            };
            let extra = mul_i64(&relations, &w);
            for (row, x) in relations.iter_mut().zip(extra) {
                row.push(x[0]);
            }
        }
        FiniteModule { d, p, p_inv, relations }
    }

    pub fn rank(&self) -> usize {
        self.d.len()
    }

    pub fn order(&self) -> i64 {
        self.d.iter().product()
    }

    pub fn presentation(&self) -> ModulePresentation {
        let m = self.rank();
        ModulePresentation::new(matrix_from_i64(Z, m, self.relations[0].len(), &self.relations))
    }

    pub fn canonical(&self, x: &[i64]) -> Vec<i64> {
        let col: Vec<Vec<i64>> = x.iter().map(|&v| vec![v]).collect();
        mul_i64(&self.p_inv, &col).iter().zip(&self.d).map(|(y, &d)| y[0].rem_euclid(d)).collect()
    }

    pub fn canonical_of(&self, v: &[RingElement]) -> Vec<i64> {
        let x: Vec<i64> = v.iter().map(|e| i64::try_from(e.to_bigint().unwrap()).unwrap()).collect();
        self.canonical(&x)
    }

    /// One representative `P a` per element.
    pub fn elements(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new()];
        for &d in &self.d {
            out = out.into_iter().flat_map(|a| (0..d).map(move |t| [a.clone(), vec![t]].concat())).collect();
        }
        out.into_iter()
            .map(|a| {
                mul_i64(&self.p, &a.iter().map(|&v| vec![v]).collect::<Vec<_>>()).into_iter().map(|r| r[0]).collect()
            })
            .collect()
    }

    /// `P B P^{-1}` with `B_ij` a multiple of `d_i / gcd(d_i, d_j)`, so the
    /// matrix maps relations into relations.
    pub fn random_endomorphism(&self, rng: &mut impl Rng) -> Vec<Vec<i64>> {
        let m = self.rank();
        let b: Vec<Vec<i64>> = (0..m)
            .map(|i| (0..m).map(|j| rng.gen_range(-3..=3) * (self.d[i] / gcd_i64(self.d[i], self.d[j]))).collect())
            .collect();
        mul_i64(&mul_i64(&self.p, &b), &self.p_inv)
    }

    fn apply(f: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
        f.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn is_well_defined(&self, f: &[Vec<i64>]) -> bool {
        let r = self.relations[0].len();
        (0..r).all(|j| {
            let col: Vec<i64> = self.relations.iter().map(|row| row[j]).collect();
            self.canonical(&Self::apply(f, &col)).iter().all(|&v| v == 0)
        })
    }

    /// Bijectivity of the induced map by enumeration.
    pub fn induced_is_bijective(&self, f: &[Vec<i64>]) -> bool {
        let images: BTreeSet<Vec<i64>> = self.elements().iter().map(|x| self.canonical(&Self::apply(f, x))).collect();
        images.len() as i64 == self.order()
    }

    /// `f(g(x)) = x` for every element.
    pub fn composite_is_identity(&self, f: &[Vec<i64>], g: &[Vec<i64>]) -> bool {
        self.elements().iter().all(|x| self.canonical(&Self::apply(f, &Self::apply(g, x))) == self.canonical(x))
    }
}

pub fn i64_rows(m: &Matrix) -> Vec<Vec<i64>> {
    m.to_rows().iter().map(|r| r.iter().map(|e| i64::try_from(e.to_bigint().unwrap()).unwrap()).collect()).collect()
}

/// All elements of the `Z/n`-span of the columns of `m`.
pub fn span_mod(m: &Matrix, n: u64) -> BTreeSet<Vec<u64>> {
    let residue = |e: &RingElement| -> u64 {
        let v = e.to_bigint().unwrap().mod_floor(&BigInt::from(n));
        u64::try_from(v).unwrap()
    };
    let mut span: BTreeSet<Vec<u64>> = [vec![0; m.rows()]].into_iter().collect();
    for col in m.columns() {
        let g: Vec<u64> = col.iter().map(residue).collect();
        let mut next = BTreeSet::new();
        for s in &span {
            let mut cur = s.clone();
            for _ in 0..n {
                next.insert(cur.clone());
                cur = cur.iter().zip(&g).map(|(a, b)| (a + b) % n).collect();
            }
        }
        span = next;
    }
    span
}

/// Every vector of `(Z/n)^len`.
pub fn all_vectors_mod(n: u64, len: usize) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out.into_iter().flat_map(|v: Vec<u64>| (0..n).map(move |t| [v.clone(), vec![t]].concat())).collect();
    }
    out
}
