use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

/// A finite sequence of spaces `V_0, …, V_m` with two differentials
/// `∂, ∂_J : V_p → V_{p+1}`, given as matrices.
///
/// `del[p]` has shape `dim V_{p+1} × dim V_p`; the last one has zero rows.
#[derive(Clone, Debug)]
pub struct DoubleComplex {
    dims: Vec<usize>,
    del: Vec<Matrix>,
    del_j: Vec<Matrix>,
    ddj: Vec<Matrix>,
}

impl DoubleComplex {
    pub fn new(del: Vec<Matrix>, del_j: Vec<Matrix>) -> Result<DoubleComplex> {
        if del.len() != del_j.len() || del.is_empty() {
            return Err(Error::DimensionMismatch("∂ and ∂_J need the same nonzero number of degrees".into()));
        }
        let dims: Vec<usize> = del.iter().map(Matrix::cols).collect();
        for p in 0..dims.len() {
            let next = dims.get(p + 1).copied().unwrap_or(0);
            for (name, m) in [("∂", &del[p]), ("∂_J", &del_j[p])] {
                if m.rows() != next || m.cols() != dims[p] {
                    return Err(Error::DimensionMismatch(format!(
                        "{name} in degree {p} is {}x{}, expected {next}x{}",
                        m.rows(),
                        m.cols(),
                        dims[p]
                    )));
                }
            }
        }
        let ddj = (0..dims.len())
            .map(|p| match del.get(p + 1) {
                Some(d) => d * &del_j[p],
                None => Matrix::zeros(0, dims[p]),
            })
            .collect();
        Ok(DoubleComplex { dims, del, del_j, ddj })
    }

    /// Number of degrees, `top + 1`.
    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dim(&self, p: usize) -> usize {
        self.dims[p]
    }

    pub fn del(&self, p: usize) -> &Matrix {
        &self.del[p]
    }

    pub fn del_j(&self, p: usize) -> &Matrix {
        &self.del_j[p]
    }

    /// `∂∂_J : V_p → V_{p+2}`, zero rows past the top.
    pub fn ddj(&self, p: usize) -> &Matrix {
        &self.ddj[p]
    }

    pub fn ker_del(&self, p: usize) -> Subspace {
        Subspace::kernel(&self.del[p])
    }

    pub fn ker_del_j(&self, p: usize) -> Subspace {
        Subspace::kernel(&self.del_j[p])
    }

    pub fn ker_ddj(&self, p: usize) -> Subspace {
        Subspace::kernel(&self.ddj[p])
    }

    /// `∂(V_{p−1}) ⊆ V_p`.
    pub fn im_del(&self, p: usize) -> Subspace {
        if p == 0 {
            Subspace::zero(self.dims[0])
        } else {
            Subspace::image(&self.del[p - 1])
        }
    }

    pub fn im_del_j(&self, p: usize) -> Subspace {
        if p == 0 {
            Subspace::zero(self.dims[0])
        } else {
            Subspace::image(&self.del_j[p - 1])
        }
    }

    /// `∂∂_J(V_{p−2}) ⊆ V_p`.
    pub fn im_ddj(&self, p: usize) -> Subspace {
        if p < 2 {
            Subspace::zero(self.dims[p])
        } else {
            Subspace::image(&self.ddj[p - 2])
        }
    }

    /// Checks `∂² = ∂_J² = ∂∂_J + ∂_J∂ = 0`, returning the first failure.
    pub fn check_relations(&self) -> std::result::Result<(), String> {
        for p in 0..self.len().saturating_sub(1) {
            let (d0, d1) = (&self.del[p], &self.del[p + 1]);
            let (j0, j1) = (&self.del_j[p], &self.del_j[p + 1]);
            if !(d1 * d0).is_zero() {
                return Err(format!("∂² ≠ 0 on degree {p}"));
            }
            if !(j1 * j0).is_zero() {
                return Err(format!("∂_J² ≠ 0 on degree {p}"));
            }
            if !(&(d1 * j0) + &(j1 * d0)).is_zero() {
                return Err(format!("∂∂_J + ∂_J∂ ≠ 0 on degree {p}"));
            }
        }
        Ok(())
    }
}
