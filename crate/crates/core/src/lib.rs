//! Exact linear algebra and finitely presented modules over `Z`, `Q` and
//! `Z/n`, with a certificate-producing prover for the statement that a
//! surjective map from a submodule of a finitely generated module onto the
//! whole module is injective.

pub mod charpoly;
pub mod cli;
pub mod engine;
pub mod error;
pub mod format;
pub mod linsolve;
pub mod matrix;
pub mod module;
pub mod poly;
pub mod ring;

pub use charpoly::{cayley_hamilton_check, charpoly, determinant, eval_poly_at_matrix, monic_annihilator};
pub use engine::{
    build_pullback, compute_V, invariance_chain, inverse_hom, orzech_certify, reduce_to_fingen, verify_certificate,
    InjectivityCertificate, RejectReason, Rejection,
};
pub use error::{Error, Result};
pub use linsolve::{hnf, kernel_gens, membership, snf, solve, HnfResult, MembershipWitness, SnfResult};
pub use matrix::{Matrix, Vector};
pub use module::{Hom, ModulePresentation, SubmoduleGens};
pub use poly::Polynomial;
pub use ring::{Ring, RingElement};
