use num_traits::Zero;

use super::Matrix;
use crate::arith::GaussianRational;
use crate::error::{Error, Result};

type GR = GaussianRational;

/// A linear subspace of ℚ(i)^n with a canonical basis.
///
/// The basis is the nonzero rows of the reduced row echelon form of any
/// spanning set, so equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<GR>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace::span(ambient, Matrix::identity(ambient).columns())
    }

    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = Vec<GR>>) -> Subspace {
        let rows: Vec<Vec<GR>> = vectors.into_iter().inspect(|v| assert_eq!(v.len(), ambient)).collect();
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        let rref = Matrix::from_rows(ambient, rows).rref();
        let basis = (0..rref.pivots.len()).map(|r| rref.matrix.row(r).to_vec()).collect();
        Subspace { ambient, basis }
    }

    /// Column space of `m`.
    pub fn image(m: &Matrix) -> Subspace {
        Subspace::span(m.rows(), m.columns())
    }

    pub fn kernel(m: &Matrix) -> Subspace {
        Subspace::span(m.cols(), m.kernel())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<GR>] {
        &self.basis
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        self.check_ambient(other);
        Subspace::span(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        self.check_ambient(other);
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        // x·U = y·V  ⇔  (x, y) in the kernel of [Uᵀ | −Vᵀ]
        let u = Matrix::from_columns(self.ambient, &self.basis);
        let v = Matrix::from_columns(self.ambient, &other.basis);
        let joint = u.hcat(&-&v);
        let k = self.dim();
        let vectors = joint.kernel().into_iter().map(|sol| u.apply(&sol[..k]));
        Subspace::span(self.ambient, vectors)
    }

    pub fn contains_vector(&self, v: &[GR]) -> bool {
        assert_eq!(v.len(), self.ambient);
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        Subspace::span(self.ambient, self.basis.iter().cloned().chain(std::iter::once(v.to_vec()))).dim()
            == self.dim()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        self.check_ambient(other);
        self.sum(other).dim() == self.dim()
    }

    /// `dim self − dim sub`, requiring `sub ⊆ self`.
    pub fn quotient_dim(&self, sub: &Subspace) -> Result<usize> {
        if !self.contains(sub) {
            return Err(Error::NotASubspace(format!(
                "a {}-dimensional space is not contained in the {}-dimensional one",
                sub.dim(),
                self.dim()
            )));
        }
        Ok(self.dim() - sub.dim())
    }

    /// `m(self)`.
    pub fn map(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        Subspace::span(m.rows(), self.basis.iter().map(|b| m.apply(b)))
    }

    /// `{x : m x ∈ target}`.
    pub fn preimage(m: &Matrix, target: &Subspace) -> Subspace {
        assert_eq!(m.rows(), target.ambient);
        if target.dim() == 0 {
            return Subspace::kernel(m);
        }
        let w = Matrix::from_columns(target.ambient, &target.basis);
        let joint = m.hcat(&-&w);
        let n = m.cols();
        Subspace::span(n, joint.kernel().into_iter().map(|sol| sol[..n].to_vec()))
    }

    /// Picks vectors of `self` completing a basis of `sub` to a basis of `self`.
    ///
    /// Fails when `sub ⊄ self`.
    pub fn complement_in(&self, sub: &Subspace) -> Result<Vec<Vec<GR>>> {
        self.quotient_dim(sub)?;
        let mut acc = sub.clone();
        let mut out = Vec::new();
        for b in &self.basis {
            if !acc.contains_vector(b) {
                acc = acc.sum(&Subspace::span(self.ambient, [b.clone()]));
                out.push(b.clone());
            }
        }
        Ok(out)
    }

    fn check_ambient(&self, other: &Subspace) {
        assert_eq!(self.ambient, other.ambient, "subspaces live in different ambient spaces");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn v(xs: &[i64]) -> Vec<GR> {
        xs.iter().map(|&x| GR::from_int(x)).collect()
    }

    #[test]
    fn sum_and_intersection_of_lines() {
        let u = Subspace::span(4, [v(&[1, 0, 0, 0])]);
        let w = Subspace::span(4, [v(&[1, 1, 0, 0])]);
        assert_eq!(u.sum(&w).dim(), 2);
        assert_eq!(u.intersection(&w).dim(), 0);
        assert_eq!(u.intersection(&u), u);
    }

    #[test]
    fn quotient_requires_containment() {
        let u = Subspace::span(3, [v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let w = Subspace::span(3, [v(&[1, 1, 0])]);
        assert_eq!(u.quotient_dim(&w).unwrap(), 1);
        let outside = Subspace::span(3, [v(&[0, 0, 1])]);
        assert!(matches!(u.quotient_dim(&outside), Err(Error::NotASubspace(_))));
    }

    #[test]
    fn canonical_basis_is_unique() {
        let a = Subspace::span(3, [v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, [v(&[1, 3, 4]), v(&[2, 5, 7])]);
        assert_eq!(a, b);
    }

    #[test]
    fn preimage_of_image() {
        let m = Matrix::from_rows(3, vec![v(&[1, 0, 1]), v(&[0, 1, 1])]);
        let target = Subspace::span(2, [v(&[1, 0])]);
        let pre = Subspace::preimage(&m, &target);
        // x + z arbitrary, y + z = 0
        assert_eq!(pre.dim(), 2);
        for b in pre.basis() {
            assert!(target.contains_vector(&m.apply(b)));
        }
    }

    /// Brute-force oracle: x ∈ U ∩ V iff x solves both membership systems.
    #[test]
    fn random_intersections_match_joint_kernel() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let n = 5;
            let mut pick = |k: usize| -> Vec<Vec<GR>> {
                (0..k).map(|_| (0..n).map(|_| GR::from_int(rng.gen_range(-2..=2))).collect()).collect()
            };
            let (ku, kv) = (2 + (n % 3), 3);
            let u = Subspace::span(n, pick(ku));
            let w = Subspace::span(n, pick(kv));
            let meet = u.intersection(&w);
            assert_eq!(meet.dim(), u.dim() + w.dim() - u.sum(&w).dim());
            // x ∈ U∩V iff x is annihilated by the orthogonal complements of both
            let ann = |s: &Subspace| Matrix::from_rows(n, s.basis().to_vec()).kernel();
            let mut eqs = ann(&u);
            eqs.extend(ann(&w));
            let joint = if eqs.is_empty() { Subspace::full(n) } else { Subspace::kernel(&Matrix::from_rows(n, eqs)) };
            // kernel of the transpose annihilator picks out U∩V under the bilinear pairing x·y
            assert_eq!(joint, meet);
        }
    }
}
