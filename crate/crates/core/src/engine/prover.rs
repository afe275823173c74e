//! Construction of injectivity certificates.
//!
//! For `f : N -> M` with `N` generated by the columns of `G` (`k` of them)
//! and `f` given by images `F`, the coordinate map `p : A^k -> N` sends
//! `e_i` to the `i`-th generator. Surjectivity lets us pick `h_i` with
//! `f(p(h_i)) = p(e_i)`; the matrix `H = [h_1 .. h_k]` is a map
//! `g : A^k -> A^k` with `f o p o g = p`. `V = Ker(f o p)` then satisfies
//! `g^{-1}(V) ⊆ V`, and the Cayley-Hamilton annihilator of `H` drives the
//! chain of partial sums that forces `g(V) ⊆ V`, hence `p(V) = 0` and
//! `Ker f = 0`.

use crate::charpoly::monic_annihilator;
use crate::error::{Error, Result};
use crate::linsolve::{kernel_gens, membership};
use crate::matrix::{unit_vector, vec_add, vec_scale, Matrix, Vector};
use crate::module::{Hom, ModulePresentation, SubmoduleGens};
use crate::ring::RingElement;

use super::certificate::InjectivityCertificate;
use super::verifier::verify_certificate;

/// `H` together with the relation coefficients `y_i` of `F h_i + R y_i = G e_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pullback {
    pub lift_matrix: Matrix,
    pub witnesses: Vec<Vector>,
}

pub fn build_pullback(f: &Hom) -> Result<Pullback> {
    let ring = f.ring();
    let k = f.domain().num_gens();
    let mut cols = Vec::with_capacity(k);
    let mut witnesses = Vec::with_capacity(k);
    for i in 0..k {
        let target = f.gens().column(i);
        let Some(w) = membership(&target, f.images(), Some(f.relations()))? else {
            return Err(Error::NotSurjective(format!("generator {} of N has no preimage", i + 1)));
        };
        cols.push(w.coeffs);
        witnesses.push(w.aux);
    }
    Ok(Pullback { lift_matrix: Matrix::from_columns(ring, k, &cols)?, witnesses })
}

/// Generators of `V = {x in A^k : F x in colspan(R)}` with their relation
/// coefficients `z_j` (`F v_j + R z_j = 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelOfComposite {
    pub gens: Matrix,
    pub witnesses: Vec<Vector>,
}

#[allow(non_snake_case)]
pub fn compute_V(f: &Hom) -> Result<KernelOfComposite> {
    let k = f.domain().num_gens();
    let full = kernel_gens(&f.images_with_relations())?;
    let mut gens: Vec<Vector> = Vec::new();
    let mut witnesses = Vec::new();
    for c in full.columns() {
        let (x, z) = c.split_at(k);
        if x.iter().all(RingElement::is_zero) || gens.iter().any(|g| g == x) {
            continue;
        }
        gens.push(x.to_vec());
        witnesses.push(z.to_vec());
    }
    Ok(KernelOfComposite { gens: Matrix::from_columns(f.ring(), k, &gens)?, witnesses })
}

/// Annihilator coefficients and the witnesses `S_u v_j ∈ colspan(V)` for
/// `u = 0..=k`, indexed `[u][j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceChain {
    pub ch_coeffs: Vec<RingElement>,
    pub witnesses: Vec<Vec<Vector>>,
}

/// `S_k = I`, `S_{u-1} = c_{u-1} I + H S_u`. Index `u` of the result is `S_u`.
pub(crate) fn partial_sums(h: &Matrix, c: &[RingElement]) -> Result<Vec<Matrix>> {
    let k = h.rows();
    let ring = h.ring();
    let mut sums = vec![Matrix::identity(ring, k)];
    for u in (1..=k).rev() {
        let prev = h.mul(sums.last().unwrap())?.add(&Matrix::identity(ring, k).scalar_mul(&c[u - 1])?)?;
        sums.push(prev);
    }
    sums.reverse();
    Ok(sums)
}

pub fn invariance_chain(h: &Matrix, v: &Matrix) -> Result<InvarianceChain> {
    if v.rows() != h.rows() {
        return Err(Error::DimensionMismatch(format!(
            "kernel generators of length {} for a {}x{} lift matrix",
            v.rows(),
            h.rows(),
            h.cols()
        )));
    }
    let ch_coeffs = monic_annihilator(h)?;
    let sums = partial_sums(h, &ch_coeffs)?;
    let mut witnesses = Vec::with_capacity(sums.len());
    for (u, s) in sums.iter().enumerate() {
        let mut row = Vec::with_capacity(v.cols());
        for j in 0..v.cols() {
            let image = s.mul_vec(&v.column(j))?;
            match membership(&image, v, None)? {
                Some(w) => row.push(w.coeffs),
                None => return Err(Error::ChainFailure { u, j }),
            }
        }
        witnesses.push(row);
    }
    Ok(InvarianceChain { ch_coeffs, witnesses })
}

pub fn orzech_certify(f: &Hom) -> Result<InjectivityCertificate> {
    f.require_well_defined()?;
    f.basis_preimages()?;
    let pullback = build_pullback(f)?;
    let kernel = compute_V(f)?;
    let chain = invariance_chain(&pullback.lift_matrix, &kernel.gens)?;

    let codomain = f.codomain();
    let mut zero_witnesses = Vec::with_capacity(kernel.gens.cols());
    for j in 0..kernel.gens.cols() {
        let pv = f.gens().mul_vec(&kernel.gens.column(j))?;
        match codomain.zero_witness(&pv)? {
            Some(w) => zero_witnesses.push(w.aux),
            None => {
                return Err(Error::InternalContradiction(format!(
                    "kernel generator {} of f o p does not map to zero in M",
                    j + 1
                )))
            }
        }
    }

    let cert = InjectivityCertificate {
        ch_coeffs: chain.ch_coeffs,
        lift_matrix: pullback.lift_matrix,
        pullback_witnesses: pullback.witnesses,
        kernel_gens: kernel.gens,
        kernel_witnesses: kernel.witnesses,
        invariance_witnesses: chain.witnesses,
        zero_witnesses,
    };
    if let Err(rejection) = verify_certificate(f, &cert) {
        return Err(Error::InternalContradiction(format!("assembled certificate rejected: {rejection}")));
    }
    Ok(cert)
}

/// Result of reducing a kernel element `v` of `f` to the finitely generated
/// submodule `N' = Av + A g_1 + ... + A g_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    /// `f` restricted to `N'`; generator 0 is `v`, generator `i` is `g_i`.
    pub restricted: Hom,
    pub certificate: InjectivityCertificate,
    /// Coordinates of `e_0` in the kernel generators of the certificate.
    pub kernel_coords: Vector,
    /// `a` with `(G v) = R a`: the class of `v` in `M` is zero.
    pub zero_witness: Vector,
}

impl Reduction {
    /// Multiplication-only validation of the reduction.
    pub fn verify(&self) -> bool {
        let ring = self.restricted.ring();
        let k = self.restricted.domain().num_gens();
        if k == 0 || verify_certificate(&self.restricted, &self.certificate).is_err() {
            return false;
        }
        let v = &self.certificate.kernel_gens;
        if self.kernel_coords.len() != v.cols() {
            return false;
        }
        let Ok(e0) = v.mul_vec(&self.kernel_coords) else {
            return false;
        };
        e0 == unit_vector(ring, k, 0)
            && self.restricted.codomain().check_zero_witness(&self.restricted.gens().column(0), &self.zero_witness)
    }
}

pub fn reduce_to_fingen(f: &Hom, v_coords: &[RingElement]) -> Result<Reduction> {
    let ring = f.ring();
    let k = f.domain().num_gens();
    if v_coords.len() != k {
        return Err(Error::DimensionMismatch(format!(
            "kernel element has {} coordinates, N has {k} generators",
            v_coords.len()
        )));
    }
    let fv = f.apply(v_coords)?;
    if !f.codomain().is_zero(&fv)? {
        return Err(Error::NotInKernel);
    }
    let preimages = f.basis_preimages()?;
    let m = f.codomain().ambient_rank();

    let mut gens = vec![f.gens().mul_vec(v_coords)?];
    let mut images = vec![fv];
    for i in 0..m {
        gens.push(f.gens().mul_vec(&preimages.column(i))?);
        images.push(unit_vector(ring, m, i));
    }
    let sub = SubmoduleGens::new(f.codomain().clone(), Matrix::from_columns(ring, m, &gens)?)?;
    let restricted = Hom::new(sub, Matrix::from_columns(ring, m, &images)?)?;
    let certificate = orzech_certify(&restricted)?;

    let e0 = unit_vector(ring, m + 1, 0);
    let Some(w) = membership(&e0, &certificate.kernel_gens, None)? else {
        return Err(Error::InternalContradiction("v is not in the span of the kernel generators".into()));
    };
    let mut zero_witness = vec![ring.zero(); f.relations().cols()];
    for (lambda, a) in w.coeffs.iter().zip(&certificate.zero_witnesses) {
        zero_witness = vec_add(&zero_witness, &vec_scale(lambda, a));
    }
    let reduction = Reduction { restricted, certificate, kernel_coords: w.coeffs, zero_witness };
    if !reduction.verify() {
        return Err(Error::InternalContradiction("reduction failed its own check".into()));
    }
    Ok(reduction)
}

/// Two-sided inverse of a surjective endomorphism of `M`, given on the
/// ambient basis.
pub fn inverse_hom(f: &Hom) -> Result<Hom> {
    let m = f.codomain().ambient_rank();
    let ring = f.ring();
    if f.gens() != &Matrix::identity(ring, m) {
        return Err(Error::NotEndomorphism);
    }
    orzech_certify(f)?;
    let x = f.basis_preimages()?;
    let inverse = Hom::endomorphism(f.codomain().clone(), x.clone())?;
    if !is_two_sided_inverse(f.codomain(), f.images(), &x)? || !inverse.is_well_defined()? {
        return Err(Error::InternalContradiction("computed inverse fails the two-sided check".into()));
    }
    Ok(inverse)
}

/// `F X e_i = e_i` and `X F e_i = e_i` in `M` for every basis index.
pub fn is_two_sided_inverse(module: &ModulePresentation, f: &Matrix, x: &Matrix) -> Result<bool> {
    let m = module.ambient_rank();
    let ring = module.ring();
    for i in 0..m {
        let e = unit_vector(ring, m, i);
        let fx = f.mul_vec(&x.mul_vec(&e)?)?;
        let xf = x.mul_vec(&f.mul_vec(&e)?)?;
        if !module.elem_eq(&fx, &e)? || !module.elem_eq(&xf, &e)? {
            return Ok(false);
        }
    }
    Ok(true)
}
