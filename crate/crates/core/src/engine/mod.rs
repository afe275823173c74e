//! Prover and verifier for injectivity of surjective module maps.

mod certificate;
mod prover;
mod verifier;

pub use certificate::InjectivityCertificate;
pub use prover::{
    build_pullback, compute_V, invariance_chain, inverse_hom, is_two_sided_inverse, orzech_certify, reduce_to_fingen,
    InvarianceChain, KernelOfComposite, Pullback, Reduction,
};
pub use verifier::{is_valid, verify_certificate, RejectReason, Rejection};
