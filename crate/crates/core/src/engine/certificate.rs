use crate::matrix::{Matrix, Vector};
use crate::ring::RingElement;

/// Self-contained evidence that a surjective `f : N -> M` is injective.
///
/// With `k` generators of `N` (so `G` is `m x k`), `F` the images and `R`
/// the relations of `M`:
///
/// * `H` (`lift_matrix`) satisfies `F h_i = G e_i` modulo `R`;
///   `pullback_witnesses[i]` is the `y` with `F h_i + R y = G e_i`.
/// * `ch_coeffs` is the characteristic polynomial of `H`, so
///   `sum c_t H^t = 0` and `c_k = 1`.
/// * The columns `v_j` of `kernel_gens` generate `{x : F x in colspan(R)}`;
///   `kernel_witnesses[j]` is the `z` with `F v_j + R z = 0`.
/// * `invariance_witnesses[u][j]` expresses `S_u v_j` in the columns of
///   `kernel_gens`, where `S_u = sum_{t=0}^{k-u} c_{u+t} H^t`.
/// * `zero_witnesses[j]` is the `a` with `G v_j = R a`: each kernel
///   generator maps to zero in `M`, so `Ker f = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InjectivityCertificate {
    pub ch_coeffs: Vec<RingElement>,
    pub lift_matrix: Matrix,
    pub pullback_witnesses: Vec<Vector>,
    pub kernel_gens: Matrix,
    pub kernel_witnesses: Vec<Vector>,
    pub invariance_witnesses: Vec<Vec<Vector>>,
    pub zero_witnesses: Vec<Vector>,
}

impl InjectivityCertificate {
    /// Number of generators of the domain.
    pub fn rank(&self) -> usize {
        self.lift_matrix.rows()
    }

    /// Mutable references to every stored ring element, in a fixed order.
    /// Used by tamper tests and fuzzers.
    pub fn coefficients_mut(&mut self) -> Vec<&mut RingElement> {
        let mut out: Vec<&mut RingElement> = Vec::new();
        out.extend(self.ch_coeffs.iter_mut());
        out.extend(self.lift_matrix.entries_mut());
        out.extend(self.pullback_witnesses.iter_mut().flatten());
        out.extend(self.kernel_gens.entries_mut());
        out.extend(self.kernel_witnesses.iter_mut().flatten());
        out.extend(self.invariance_witnesses.iter_mut().flatten().flatten());
        out.extend(self.zero_witnesses.iter_mut().flatten());
        out
    }
}
