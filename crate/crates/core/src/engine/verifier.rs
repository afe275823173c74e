//! Solver-free certificate checking. Everything here is re-multiplication
//! and comparison; the partial sums are rebuilt from explicit powers of
//! `H`, not from the recurrence the prover uses.

use std::fmt;

use crate::charpoly::charpoly;
use crate::linsolve::MembershipWitness;
use crate::matrix::{is_zero_vector, Matrix};
use crate::module::Hom;
use crate::ring::RingElement;

use super::certificate::InjectivityCertificate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RejectReason {
    Malformed,
    AnnihilatorNotMonic,
    AnnihilatorNotCharpoly,
    AnnihilatorNonzero,
    WitnessMismatch,
}

impl RejectReason {
    pub fn code(self) -> &'static str {
        match self {
            RejectReason::Malformed => "malformed certificate",
            RejectReason::AnnihilatorNotMonic => "annihilator not monic",
            RejectReason::AnnihilatorNotCharpoly => "annihilator is not the characteristic polynomial of H",
            RejectReason::AnnihilatorNonzero => "annihilator does not vanish at H",
            RejectReason::WitnessMismatch => "witness re-multiplication failed",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    pub reason: RejectReason,
    pub detail: String,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.reason.code(), self.detail)
    }
}

impl std::error::Error for Rejection {}

fn reject(reason: RejectReason, detail: impl Into<String>) -> Rejection {
    Rejection { reason, detail: detail.into() }
}

fn check_shape(f: &Hom, cert: &InjectivityCertificate) -> Result<(), Rejection> {
    let ring = f.ring();
    let k = f.domain().num_gens();
    let r = f.relations().cols();
    let h = &cert.lift_matrix;
    let v = &cert.kernel_gens;
    let s = v.cols();
    let len_ok = |vs: &[Vec<RingElement>], count: usize, len: usize| {
        vs.len() == count && vs.iter().all(|x| x.len() == len && x.iter().all(|e| e.ring() == ring))
    };

    let problem = if h.ring() != ring || v.ring() != ring {
        Some("matrix over the wrong ring")
    } else if h.rows() != k || h.cols() != k {
        Some("lift matrix has the wrong shape")
    } else if v.rows() != k {
        Some("kernel generators have the wrong length")
    } else if cert.ch_coeffs.len() != k + 1 || cert.ch_coeffs.iter().any(|c| c.ring() != ring) {
        Some("annihilator has the wrong length")
    } else if !len_ok(&cert.pullback_witnesses, k, r) {
        Some("pullback witnesses have the wrong shape")
    } else if !len_ok(&cert.kernel_witnesses, s, r) {
        Some("kernel witnesses have the wrong shape")
    } else if !len_ok(&cert.zero_witnesses, s, r) {
        Some("zero witnesses have the wrong shape")
    } else if cert.invariance_witnesses.len() != k + 1 || !cert.invariance_witnesses.iter().all(|row| len_ok(row, s, s))
    {
        Some("invariance witnesses have the wrong shape")
    } else if (0..s).any(|j| v.is_zero_column(j)) {
        Some("zero kernel generator")
    } else {
        None
    };
    match problem {
        Some(p) => Err(reject(RejectReason::Malformed, p)),
        None => Ok(()),
    }
}

/// Checks every claim in `cert` against `f` by re-multiplication.
///
/// `f` itself is taken as given: its well-definedness is a property of
/// the input, not of the certificate.
pub fn verify_certificate(f: &Hom, cert: &InjectivityCertificate) -> Result<(), Rejection> {
    check_shape(f, cert)?;
    let ring = f.ring();
    let k = f.domain().num_gens();
    let h = &cert.lift_matrix;
    let c = &cert.ch_coeffs;
    let v = &cert.kernel_gens;
    let module = f.codomain();
    let mul_err = |e: crate::Error| reject(RejectReason::Malformed, e.to_string());

    // (a) monic annihilator of H
    if !c[k].is_one() {
        return Err(reject(RejectReason::AnnihilatorNotMonic, format!("c_{k} = {}", c[k])));
    }
    let chi = charpoly(h).map_err(mul_err)?;
    if (0..=k).any(|t| chi.coeff(t) != c[t]) {
        return Err(reject(RejectReason::AnnihilatorNotCharpoly, "coefficient mismatch"));
    }
    let mut powers = vec![Matrix::identity(ring, k)];
    for t in 1..=k {
        powers.push(powers[t - 1].mul(h).map_err(mul_err)?);
    }
    let partial_sum = |u: usize| -> Result<Matrix, Rejection> {
        let mut acc = Matrix::zeros(ring, k, k);
        for t in 0..=k - u {
            acc = acc.add(&powers[t].scalar_mul(&c[u + t]).map_err(mul_err)?).map_err(mul_err)?;
        }
        Ok(acc)
    };
    if !partial_sum(0)?.is_zero() {
        return Err(reject(RejectReason::AnnihilatorNonzero, "sum c_t H^t != 0"));
    }

    // (b) F h_i + R y_i = G e_i
    for i in 0..k {
        let w = MembershipWitness { coeffs: h.column(i), aux: cert.pullback_witnesses[i].clone() };
        if !w.check(&f.gens().column(i), f.images(), Some(f.relations())) {
            return Err(reject(RejectReason::WitnessMismatch, format!("pullback identity for generator {}", i + 1)));
        }
    }

    // (c) F v_j + R z_j = 0
    for j in 0..v.cols() {
        let fv = f.images().mul_vec(&v.column(j)).map_err(mul_err)?;
        let neg: Vec<RingElement> = fv.iter().map(|x| -x).collect();
        if !module.check_zero_witness(&neg, &cert.kernel_witnesses[j]) {
            return Err(reject(RejectReason::WitnessMismatch, format!("kernel generator {}", j + 1)));
        }
    }

    // (d) S_u v_j in colspan(V)
    for u in 0..=k {
        let s = partial_sum(u)?;
        for j in 0..v.cols() {
            let image = s.mul_vec(&v.column(j)).map_err(mul_err)?;
            let w = MembershipWitness { coeffs: cert.invariance_witnesses[u][j].clone(), aux: Vec::new() };
            if !w.check(&image, v, None) {
                return Err(reject(
                    RejectReason::WitnessMismatch,
                    format!("invariance at u = {u}, kernel generator {}", j + 1),
                ));
            }
        }
    }

    // (e) G v_j = R a_j
    for j in 0..v.cols() {
        let pv = f.gens().mul_vec(&v.column(j)).map_err(mul_err)?;
        if !module.check_zero_witness(&pv, &cert.zero_witnesses[j]) {
            return Err(reject(RejectReason::WitnessMismatch, format!("zero witness {}", j + 1)));
        }
    }
    debug_assert!(v.columns().iter().all(|col| !is_zero_vector(col)));
    Ok(())
}

pub fn is_valid(f: &Hom, cert: &InjectivityCertificate) -> bool {
    verify_certificate(f, cert).is_ok()
}
