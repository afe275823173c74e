//! Finitely presented modules `M = A^m / colspan(R)`, finitely generated
//! submodules `N` of `M`, and homomorphisms `N -> M` given on generators.

use crate::error::{Error, Result};
use crate::linsolve::{kernel_gens, membership, MembershipWitness};
use crate::matrix::{unit_vector, vec_sub, zero_vector, Matrix, Vector};
use crate::ring::{Ring, RingElement};

/// `A^m / colspan(R)` for an `m x r` relation matrix `R` (`r` may be 0).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModulePresentation {
    relations: Matrix,
}

impl ModulePresentation {
    pub fn new(relations: Matrix) -> ModulePresentation {
        ModulePresentation { relations }
    }

    pub fn free(ring: Ring, rank: usize) -> ModulePresentation {
        ModulePresentation { relations: Matrix::zeros(ring, rank, 0) }
    }

    pub fn ring(&self) -> Ring {
        self.relations.ring()
    }

    pub fn ambient_rank(&self) -> usize {
        self.relations.rows()
    }

    pub fn relations(&self) -> &Matrix {
        &self.relations
    }

    fn check_element(&self, v: &[RingElement]) -> Result<()> {
        if v.len() != self.ambient_rank() {
            return Err(Error::DimensionMismatch(format!(
                "element of length {} in a module of ambient rank {}",
                v.len(),
                self.ambient_rank()
            )));
        }
        if let Some(bad) = v.iter().find(|e| e.ring() != self.ring()) {
            return Err(Error::RingMismatch(self.ring(), bad.ring()));
        }
        Ok(())
    }

    /// Witness that `v` is zero in `M`, i.e. `v = R * aux`.
    pub fn zero_witness(&self, v: &[RingElement]) -> Result<Option<MembershipWitness>> {
        self.check_element(v)?;
        let none = Matrix::zeros(self.ring(), self.ambient_rank(), 0);
        membership(v, &none, Some(&self.relations))
    }

    pub fn is_zero(&self, v: &[RingElement]) -> Result<bool> {
        Ok(self.zero_witness(v)?.is_some())
    }

    /// Equality of the classes of `v` and `w` in `M`.
    pub fn elem_eq(&self, v: &[RingElement], w: &[RingElement]) -> Result<bool> {
        self.check_element(w)?;
        self.is_zero(&vec_sub(v, w))
    }

    /// Multiplication-only check that `v = R * aux` with `aux` in normal form.
    pub fn check_zero_witness(&self, v: &[RingElement], aux: &[RingElement]) -> bool {
        let w = MembershipWitness { coeffs: Vec::new(), aux: aux.to_vec() };
        w.check(v, &Matrix::zeros(self.ring(), self.ambient_rank(), 0), Some(&self.relations))
    }
}

/// Submodule of `parent` generated by the classes of the columns of `gens`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubmoduleGens {
    parent: ModulePresentation,
    gens: Matrix,
}

impl SubmoduleGens {
    pub fn new(parent: ModulePresentation, gens: Matrix) -> Result<SubmoduleGens> {
        if gens.ring() != parent.ring() {
            return Err(Error::RingMismatch(parent.ring(), gens.ring()));
        }
        if gens.rows() != parent.ambient_rank() {
            return Err(Error::DimensionMismatch(format!(
                "generators have {} rows, ambient rank is {}",
                gens.rows(),
                parent.ambient_rank()
            )));
        }
        Ok(SubmoduleGens { parent, gens })
    }

    /// The whole module, generated by the classes of the ambient basis.
    pub fn whole(parent: ModulePresentation) -> SubmoduleGens {
        let gens = Matrix::identity(parent.ring(), parent.ambient_rank());
        SubmoduleGens { parent, gens }
    }

    pub fn parent(&self) -> &ModulePresentation {
        &self.parent
    }

    pub fn gens(&self) -> &Matrix {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.cols()
    }

    /// Columns generating `{s : G s in colspan(R)}`: the first `k`
    /// coordinates of the kernel of `[G | R]`.
    pub fn syzygies(&self) -> Result<Matrix> {
        let k = self.num_gens();
        let full = kernel_gens(&self.gens.hcat(self.parent.relations())?)?;
        let mut cols: Vec<Vector> = Vec::new();
        for c in full.columns() {
            let s: Vector = c[..k].to_vec();
            if s.iter().any(|e| !e.is_zero()) && !cols.contains(&s) {
                cols.push(s);
            }
        }
        Matrix::from_columns(self.parent.ring(), k, &cols)
    }
}

/// `f : N -> M` with `f(j-th generator of N) = j-th column of images`.
/// `N` must be a submodule of the codomain `M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hom {
    domain: SubmoduleGens,
    images: Matrix,
}

impl Hom {
    pub fn new(domain: SubmoduleGens, images: Matrix) -> Result<Hom> {
        let parent = domain.parent();
        if images.ring() != parent.ring() {
            return Err(Error::RingMismatch(parent.ring(), images.ring()));
        }
        if images.rows() != parent.ambient_rank() || images.cols() != domain.num_gens() {
            return Err(Error::DimensionMismatch(format!(
                "images must be {}x{}, got {}x{}",
                parent.ambient_rank(),
                domain.num_gens(),
                images.rows(),
                images.cols()
            )));
        }
        Ok(Hom { domain, images })
    }

    /// Endomorphism of `M` given by its matrix on the ambient basis.
    pub fn endomorphism(module: ModulePresentation, matrix: Matrix) -> Result<Hom> {
        Hom::new(SubmoduleGens::whole(module), matrix)
    }

    pub fn ring(&self) -> Ring {
        self.images.ring()
    }

    pub fn domain(&self) -> &SubmoduleGens {
        &self.domain
    }

    pub fn codomain(&self) -> &ModulePresentation {
        self.domain.parent()
    }

    pub fn images(&self) -> &Matrix {
        &self.images
    }

    /// `G`, the domain generators as ambient columns.
    pub fn gens(&self) -> &Matrix {
        self.domain.gens()
    }

    pub fn relations(&self) -> &Matrix {
        self.codomain().relations()
    }

    /// `[F | R]`.
    pub(crate) fn images_with_relations(&self) -> Matrix {
        self.images.hcat(self.relations()).expect("shapes checked on construction")
    }

    /// Index of the first syzygy `s` with `F s != 0` in `M`, if any.
    pub fn first_bad_syzygy(&self) -> Result<Option<usize>> {
        let syz = self.domain.syzygies()?;
        for (j, s) in syz.columns().iter().enumerate() {
            if !self.codomain().is_zero(&self.images.mul_vec(s)?)? {
                return Ok(Some(j));
            }
        }
        Ok(None)
    }

    pub fn is_well_defined(&self) -> Result<bool> {
        Ok(self.first_bad_syzygy()?.is_none())
    }

    pub(crate) fn require_well_defined(&self) -> Result<()> {
        match self.first_bad_syzygy()? {
            Some(syzygy) => Err(Error::IllDefinedHom { syzygy }),
            None => Ok(()),
        }
    }

    /// The `k x m` matrix whose `i`-th column gives, in the domain
    /// generators, an element `g_i` with `f(g_i) = e_i` in `M`.
    /// Fails with `NotSurjective` naming the first unreachable basis class.
    pub fn basis_preimages(&self) -> Result<Matrix> {
        self.require_well_defined()?;
        let ring = self.ring();
        let m = self.codomain().ambient_rank();
        let mut cols = Vec::with_capacity(m);
        for i in 0..m {
            let target = unit_vector(ring, m, i);
            match membership(&target, &self.images, Some(self.relations()))? {
                Some(w) => cols.push(w.coeffs),
                None => return Err(Error::NotSurjective(format!("ambient basis element e_{} has no preimage", i + 1))),
            }
        }
        Matrix::from_columns(ring, self.domain.num_gens(), &cols)
    }

    /// Surjectivity witnesses, or `None` when some basis class is not hit.
    pub fn is_surjective(&self) -> Result<Option<Matrix>> {
        match self.basis_preimages() {
            Ok(w) => Ok(Some(w)),
            Err(Error::NotSurjective(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// `f(x)` for `x` given in domain-generator coordinates.
    pub fn apply(&self, coords: &[RingElement]) -> Result<Vector> {
        self.images.mul_vec(coords)
    }

    pub fn zero_coords(&self) -> Vector {
        zero_vector(self.ring(), self.domain.num_gens())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: Ring = Ring::Integers;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| Z.from_i64(x)).collect()
    }

    fn z2_mod_02() -> ModulePresentation {
        ModulePresentation::new(Matrix::from_i64_rows(Z, &[&[0], &[2]]))
    }

    #[test]
    fn elem_eq_examples() {
        let m = z2_mod_02();
        assert!(m.elem_eq(&v(&[4, 7]), &v(&[4, 7])).unwrap());
        assert!(m.elem_eq(&v(&[1, 3]), &v(&[1, 1])).unwrap());
        assert!(!m.elem_eq(&v(&[1, 1]), &v(&[0, 1])).unwrap());
        assert!(m.elem_eq(&v(&[1]), &v(&[1])).is_err());
    }

    #[test]
    fn syzygy_examples() {
        let free2 = ModulePresentation::free(Z, 2);
        let n = SubmoduleGens::new(free2, Matrix::from_i64_rows(Z, &[&[2, 0], &[0, 1]])).unwrap();
        assert_eq!(n.syzygies().unwrap().cols(), 0);

        let z = ModulePresentation::free(Z, 1);
        let n = SubmoduleGens::new(z.clone(), Matrix::from_i64_rows(Z, &[&[2, 3]])).unwrap();
        let syz = n.syzygies().unwrap();
        assert_eq!(syz.cols(), 1);
        let s = syz.column(0);
        assert!(s == v(&[3, -2]) || s == v(&[-3, 2]));

        let n = SubmoduleGens::new(z, Matrix::from_i64_rows(Z, &[&[5, 5]])).unwrap();
        let s = n.syzygies().unwrap().column(0);
        assert!(s == v(&[1, -1]) || s == v(&[-1, 1]));
    }

    #[test]
    fn syzygies_see_relations() {
        // N = <1> in Z/4: syzygies are multiples of 4
        let m = ModulePresentation::new(Matrix::from_i64_rows(Z, &[&[4]]));
        let n = SubmoduleGens::whole(m);
        let syz = n.syzygies().unwrap();
        assert_eq!(syz.cols(), 1);
        assert!(syz.column(0) == v(&[4]) || syz.column(0) == v(&[-4]));
    }

    #[test]
    fn well_definedness_examples() {
        let z = ModulePresentation::free(Z, 1);
        let n = SubmoduleGens::new(z.clone(), Matrix::from_i64_rows(Z, &[&[2, 3]])).unwrap();
        let id = Hom::endomorphism(z2_mod_02(), Matrix::identity(Z, 2)).unwrap();
        assert!(id.is_well_defined().unwrap());
        let inclusion = Hom::new(n.clone(), Matrix::from_i64_rows(Z, &[&[2, 3]])).unwrap();
        assert!(inclusion.is_well_defined().unwrap());
        let bad = Hom::new(n, Matrix::from_i64_rows(Z, &[&[1, 1]])).unwrap();
        assert!(!bad.is_well_defined().unwrap());
        assert!(matches!(bad.is_surjective(), Err(Error::IllDefinedHom { .. })));
    }

    #[test]
    fn surjectivity_examples() {
        let free2 = ModulePresentation::free(Z, 2);
        let id = Hom::endomorphism(free2.clone(), Matrix::identity(Z, 2)).unwrap();
        assert_eq!(id.is_surjective().unwrap(), Some(Matrix::identity(Z, 2)));

        let n = SubmoduleGens::new(free2, Matrix::from_i64_rows(Z, &[&[2, 0], &[0, 1]])).unwrap();
        let f = Hom::new(n, Matrix::identity(Z, 2)).unwrap();
        let w = f.is_surjective().unwrap().unwrap();
        assert_eq!(w, Matrix::identity(Z, 2));
        for i in 0..2 {
            let image = f.apply(&w.column(i)).unwrap();
            assert!(f.codomain().elem_eq(&image, &unit_vector(Z, 2, i)).unwrap());
        }

        let double = Hom::endomorphism(ModulePresentation::free(Z, 1), Matrix::from_i64_rows(Z, &[&[2]])).unwrap();
        assert_eq!(double.is_surjective().unwrap(), None);
        let err = double.basis_preimages().unwrap_err();
        assert!(err.to_string().contains("e_1"), "{err}");
    }

    #[test]
    fn construction_errors() {
        let free2 = ModulePresentation::free(Z, 2);
        assert!(SubmoduleGens::new(free2.clone(), Matrix::identity(Z, 3)).is_err());
        assert!(SubmoduleGens::new(free2.clone(), Matrix::identity(Ring::Rationals, 2)).is_err());
        assert!(Hom::new(SubmoduleGens::whole(free2), Matrix::zeros(Z, 2, 3)).is_err());
    }
}
