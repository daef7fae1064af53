use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::DoubleComplex;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};

/// All dimensions in one degree `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyRow {
    pub p: usize,
    pub h_del: usize,
    pub h_del_j: usize,
    pub h_bc: usize,
    pub h_ae: usize,
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub e: usize,
    pub f: usize,
    pub dim_e1: usize,
    pub dim_e2: usize,
    /// `h_BC + h_AE − 2 dim E_2`; signed so that a failed inequality stays visible.
    pub delta: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyTable {
    pub rows: Vec<CohomologyRow>,
}

impl CohomologyTable {
    pub fn row(&self, p: usize) -> &CohomologyRow {
        &self.rows[p]
    }

    pub fn degenerate_at_first_page(&self) -> bool {
        self.rows.iter().all(|r| r.dim_e1 == r.dim_e2)
    }

    pub fn deltas(&self) -> Vec<i64> {
        self.rows.iter().map(|r| r.delta).collect()
    }
}

/// `dim(ker ∂) − dim(Im ∂)` and the same for `∂_J` in degree `p`.
pub fn dolbeault_dims(cx: &DoubleComplex, p: usize) -> Result<(usize, usize)> {
    Ok((cx.ker_del(p).quotient_dim(&cx.im_del(p))?, cx.ker_del_j(p).quotient_dim(&cx.im_del_j(p))?))
}

/// `(h_BC, h_AE)` in degree `p`.
pub fn bc_ae_dims(cx: &DoubleComplex, p: usize) -> Result<(usize, usize)> {
    let bc = cx.ker_del(p).intersection(&cx.ker_del_j(p)).quotient_dim(&cx.im_ddj(p))?;
    let ae = cx.ker_ddj(p).quotient_dim(&cx.im_del(p).sum(&cx.im_del_j(p)))?;
    Ok((bc, ae))
}

/// `(a, b, c, d, e, f)` in degree `p`.
pub fn varouchas_dims(cx: &DoubleComplex, p: usize) -> Result<[usize; 6]> {
    let (ker_d, ker_j, ker_dj) = (cx.ker_del(p), cx.ker_del_j(p), cx.ker_ddj(p));
    let (im_d, im_j, im_dj) = (cx.im_del(p), cx.im_del_j(p), cx.im_ddj(p));
    Ok([
        im_d.intersection(&im_j).quotient_dim(&im_dj)?,
        ker_d.intersection(&im_j).quotient_dim(&im_dj)?,
        ker_dj.quotient_dim(&ker_d.sum(&im_j))?,
        im_d.intersection(&ker_j).quotient_dim(&im_dj)?,
        ker_dj.quotient_dim(&im_d.sum(&ker_j))?,
        ker_dj.quotient_dim(&ker_d.sum(&ker_j))?,
    ])
}

/// `dim E_2` from the quotient `{∂φ = 0, ∂_Jφ ∈ Im ∂} / (Im ∂ + ∂_J(ker ∂))`.
pub fn e2_quotient(cx: &DoubleComplex, p: usize) -> Result<usize> {
    let ker_d = cx.ker_del(p);
    let numerator = match p + 1 < cx.len() {
        true => ker_d.intersection(&Subspace::preimage(cx.del_j(p), &cx.im_del(p + 1))),
        false => ker_d,
    };
    let denominator = if p == 0 { Subspace::zero(cx.dim(0)) } else { cx.im_del(p).sum(&cx.ker_del(p - 1).map(cx.del_j(p - 1))) };
    numerator.quotient_dim(&denominator)
}

/// Representatives of `H_∂` in degree `p`: a complement of `Im ∂` in `ker ∂`.
fn e1_representatives(cx: &DoubleComplex, p: usize) -> Result<Vec<Vec<crate::GaussianRational>>> {
    cx.ker_del(p).complement_in(&cx.im_del(p))
}

/// `dim E_2` for every degree by building the map induced by `∂_J` on
/// `E_1 = H_∂` and taking its cohomology.
pub fn e2_page_iteration(cx: &DoubleComplex) -> Result<Vec<usize>> {
    let top = cx.len();
    let reps: Vec<_> = (0..top).map(|p| e1_representatives(cx, p)).collect::<Result<_>>()?;
    // rank of the induced map E_1^p → E_1^{p+1}
    let mut ranks = vec![0usize; top];
    for p in 0..top.saturating_sub(1) {
        if reps[p].is_empty() || reps[p + 1].is_empty() {
            continue;
        }
        let target = &reps[p + 1];
        let n = cx.dim(p + 1);
        // columns: target representatives followed by a spanning set of Im ∂
        let boundary = cx.del(p).columns();
        let mut cols = target.clone();
        cols.extend(boundary);
        let system = Matrix::from_columns(n, &cols);
        let mut coords = Vec::with_capacity(reps[p].len());
        for r in &reps[p] {
            let image = cx.del_j(p).apply(r);
            let sol = solve(&system, &image).ok_or_else(|| {
                Error::InternalInconsistency(format!("∂_J of a ∂-closed form in degree {p} is not ∂-closed"))
            })?;
            coords.push(sol[..target.len()].to_vec());
        }
        ranks[p] = Matrix::from_columns(target.len(), &coords).rank();
    }
    Ok((0..top)
        .map(|p| reps[p].len() - ranks[p] - if p > 0 { ranks[p - 1] } else { 0 })
        .collect())
}

/// One solution of `m x = b`, if any.
fn solve(m: &Matrix, b: &[crate::GaussianRational]) -> Option<Vec<crate::GaussianRational>> {
    let aug = m.hcat(&Matrix::from_columns(m.rows(), &[b.to_vec()])).rref();
    let n = m.cols();
    if aug.pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![crate::GaussianRational::default(); n];
    for (row, &pc) in aug.pivots.iter().enumerate() {
        x[pc] = aug.matrix[(row, n)].clone();
    }
    Some(x)
}

/// Computes every dimension of the table, cross-checking `E_2` by both routes.
pub fn compute_table(cx: &DoubleComplex) -> Result<CohomologyTable> {
    let iterated = e2_page_iteration(cx)?;
    let rows = (0..cx.len())
        .into_par_iter()
        .map(|p| -> Result<CohomologyRow> {
            let (h_del, h_del_j) = dolbeault_dims(cx, p)?;
            let (h_bc, h_ae) = bc_ae_dims(cx, p)?;
            let [a, b, c, d, e, f] = varouchas_dims(cx, p)?;
            let dim_e2 = e2_quotient(cx, p)?;
            if dim_e2 != iterated[p] {
                return Err(Error::InternalInconsistency(format!(
                    "dim E_2 in degree {p}: quotient gives {dim_e2}, page iteration gives {}",
                    iterated[p]
                )));
            }
            let delta = h_bc as i64 + h_ae as i64 - 2 * dim_e2 as i64;
            Ok(CohomologyRow { p, h_del, h_del_j, h_bc, h_ae, a, b, c, d, e, f, dim_e1: h_del, dim_e2, delta })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CohomologyTable { rows })
}

/// Checks `Δ^p ≥ 0` everywhere and, for `n = 2`, `Δ¹ = Δ³ = 0` and `Δ² ∈ {0, 2}`.
pub fn non_hkt_degrees(table: &CohomologyTable, n: usize) -> Result<Vec<i64>> {
    let deltas = table.deltas();
    if let Some((p, d)) = deltas.iter().enumerate().find(|(_, d)| **d < 0) {
        return Err(Error::TheoremViolation(format!("Δ^{p} = {d} < 0")));
    }
    if n == 2 {
        if deltas[1] != 0 || deltas[3] != 0 {
            return Err(Error::TheoremViolation(format!("Δ¹ = {}, Δ³ = {} on an 8-dimensional algebra", deltas[1], deltas[3])));
        }
        if deltas[2] != 0 && deltas[2] != 2 {
            return Err(Error::TheoremViolation(format!("Δ² = {} is not in {{0, 2}}", deltas[2])));
        }
    }
    Ok(deltas)
}

/// Whether every `∂`-closed `∂_J`-exact form is `∂∂_J`-exact, i.e. `b = 0` in
/// all degrees; must agree with `h_BC + h_AE = 2 dim E_2` in all degrees.
pub fn ddj_lemma_holds(table: &CohomologyTable) -> Result<bool> {
    let lemma = table.rows.iter().all(|r| r.b == 0);
    let equality = table.rows.iter().all(|r| r.h_bc + r.h_ae == 2 * r.dim_e2);
    if lemma != equality {
        return Err(Error::TheoremViolation(format!(
            "∂∂_J-lemma is {lemma} but the equality h_BC + h_AE = 2 dim E_2 is {equality}"
        )));
    }
    Ok(lemma)
}
