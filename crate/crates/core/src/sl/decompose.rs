use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{hodge_data, vectors_to_strings};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::session::Session;
use crate::GaussianRational as GR;

/// Images in `H^{2,0}_∂` of the `∂`-closed forms with `∗_Φ φ = ±φ`. The
/// dimensions are real: `self_dual + anti_self_dual = 2 h_del`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SdAsdReport {
    pub h_del: usize,
    pub self_dual: usize,
    pub anti_self_dual: usize,
    pub direct: bool,
    pub exhausts: bool,
    /// No nonzero `∂_J`-exact form is self-dual or anti-self-dual.
    pub exact_forms_not_dual: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub h_del: usize,
    pub plus: usize,
    pub minus: usize,
    pub intersection: usize,
    pub sum: usize,
    /// Dimension of a complement of `H^{J̄,+} + H^{J̄,−}` in `H^{2,0}_∂`.
    pub complement: usize,
    pub pure: bool,
    pub full: bool,
    pub pure_and_full: bool,
    pub plus_representatives: Vec<String>,
    pub minus_representatives: Vec<String>,
    pub sd_asd: Option<SdAsdReport>,
}

fn eigenspace(m: &Matrix, sign: i64) -> Subspace {
    let shifted = m - &Matrix::identity(m.rows()).scale(&sign.into());
    Subspace::kernel(&shifted)
}

/// `(closed ∩ E) + exact`, the preimage of the image in cohomology.
struct Split {
    h: usize,
    plus: Subspace,
    minus: Subspace,
    exact: Subspace,
    plus_reps: Vec<Vec<crate::GaussianRational>>,
    minus_reps: Vec<Vec<crate::GaussianRational>>,
}

fn split(s: &Session, m: &Matrix) -> Result<Split> {
    let cx = s.double_complex();
    let closed = cx.ker_del(2);
    let exact = cx.im_del(2);
    let h = closed.quotient_dim(&exact)?;
    let part = |sign| -> Result<(Subspace, Vec<_>)> {
        let lifted = closed.intersection(&eigenspace(m, sign));
        let reps = lifted.complement_in(&lifted.intersection(&exact))?;
        Ok((lifted.sum(&exact), reps))
    };
    let (plus, plus_reps) = part(1)?;
    let (minus, minus_reps) = part(-1)?;
    Ok(Split { h, plus, minus, exact, plus_reps, minus_reps })
}

/// `v ↦ (Re v, Im v)` applied to a complex subspace: the real span of a basis
/// and its multiples by `i`. Real vectors span complex subspaces of the same
/// dimension, so `Subspace` arithmetic on the result is real arithmetic.
fn realify(sub: &Subspace) -> Subspace {
    let n = sub.ambient();
    let i = GR::complex(0, 1, 1, 1);
    let real = |v: &[GR]| -> Vec<GR> {
        v.iter().map(|x| GR::from_real(x.re().clone())).chain(v.iter().map(|x| GR::from_real(x.im().clone()))).collect()
    };
    let vectors = sub.basis().iter().flat_map(|v| [real(v), real(&v.iter().map(|x| x * &i).collect::<Vec<_>>())]);
    Subspace::span(2 * n, vectors)
}

/// Real `±1` eigenspace of the antilinear map `v ↦ A v̄`, in the
/// coordinates of [`realify`]: with `A = P + iQ` and `v = x + iy`, `A v̄ = σ v`
/// reads `Px + Qy = σx`, `Qx − Py = σy`.
fn antilinear_eigenspace(a: &Matrix, sign: i64) -> Subspace {
    let n = a.rows();
    let sigma = GR::from_int(sign);
    let m = Matrix::from_fn(2 * n, 2 * n, |r, c| {
        let (rr, cc) = (r % n, c % n);
        let p = GR::from_real(a[(rr, cc)].re().clone());
        let q = GR::from_real(a[(rr, cc)].im().clone());
        let diag = if rr == cc { sigma.clone() } else { GR::zero() };
        match (r < n, c < n) {
            (true, true) => &p - &diag,
            (true, false) => q,
            (false, true) => q,
            (false, false) => &(-&p) - &diag,
        }
    });
    Subspace::kernel(&m)
}

/// Self-dual / anti-self-dual splitting of `H^{2,0}_∂`, defined for `n = 2`.
/// `∗_Φ` is antilinear, so its eigenspaces and the reported dimensions are
/// real.
pub fn sd_asd_decomposition(s: &Session) -> Result<SdAsdReport> {
    if s.n() != 2 {
        return Err(Error::NotSL2(s.n()));
    }
    let hodge = hodge_data(s)?;
    let cx = s.double_complex();
    let closed = realify(&cx.ker_del(2));
    let exact = realify(&cx.im_del(2));
    let h = cx.ker_del(2).quotient_dim(&cx.im_del(2))?;
    let dual = |sign| antilinear_eigenspace(hodge.linear(2), sign);
    let (sd, asd) = (dual(1), dual(-1));
    let plus = closed.intersection(&sd).sum(&exact);
    let minus = closed.intersection(&asd).sum(&exact);
    let direct = plus.intersection(&minus) == exact;
    let exhausts = plus.sum(&minus) == closed;
    let im_j = realify(&cx.im_del_j(2));
    let exact_forms_not_dual = im_j.intersection(&sd).dim() == 0 && im_j.intersection(&asd).dim() == 0;
    let report = SdAsdReport {
        h_del: h,
        self_dual: plus.dim() - exact.dim(),
        anti_self_dual: minus.dim() - exact.dim(),
        direct,
        exhausts,
        exact_forms_not_dual,
    };
    if !(direct && exhausts && exact_forms_not_dual) {
        return Err(Error::DecompositionFailure(format!("{report:?}")));
    }
    Ok(report)
}

/// Splitting of `H^{2,0}_∂` by the linear part of `J̄`. For `n = 2` the
/// pure-and-full property is enforced.
pub fn jbar_decomposition(s: &Session) -> Result<DecompositionReport> {
    let sp = split(s, &s.jbar[2].matrix)?;
    let base = sp.exact.dim();
    let plus = sp.plus.dim() - base;
    let minus = sp.minus.dim() - base;
    let intersection = sp.plus.intersection(&sp.minus).dim() - base;
    let sum = sp.plus.sum(&sp.minus).dim() - base;
    let complement = sp.h - sum;
    let sd_asd = if s.n() == 2 { Some(sd_asd_decomposition(s)?) } else { None };
    let report = DecompositionReport {
        h_del: sp.h,
        plus,
        minus,
        intersection,
        sum,
        complement,
        pure: intersection == 0,
        full: complement == 0,
        pure_and_full: intersection == 0 && complement == 0,
        plus_representatives: vectors_to_strings(s, &sp.plus_reps, 2),
        minus_representatives: vectors_to_strings(s, &sp.minus_reps, 2),
        sd_asd,
    };
    if s.n() == 2 && !report.pure_and_full {
        return Err(Error::TheoremViolation(format!(
            "H^{{2,0}}_∂ is not pure-and-full on an 8-dimensional algebra: intersection {intersection}, complement {complement}"
        )));
    }
    Ok(report)
}
