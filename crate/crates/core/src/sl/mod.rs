//! Holomorphic volume form, Hodge star, duality pairing and the
//! self-dual and real/imaginary decompositions of `H^{2,0}_∂`.

mod decompose;

pub use decompose::{jbar_decomposition, sd_asd_decomposition, DecompositionReport, SdAsdReport};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::GaussianRational;
use crate::error::{Error, Result};
use crate::exterior::{is_zero_vector, Form, Mask, OperatorKind, OperatorMatrix};
use crate::linalg::{Matrix, Subspace};
use crate::session::Session;

type GR = GaussianRational;

/// `Φ = φ^1 ∧ … ∧ φ^{2n}` after checking `∂̄Φ = 0` and `J̄Φ = Φ`.
#[derive(Clone, Debug)]
pub struct VolumeForm {
    pub phi: Form,
    /// `∫ Φ ∧ Φ̄`; integration is normalized so that this is 1.
    pub normalization: GR,
}

pub fn canonical_volume_form(s: &Session) -> Result<VolumeForm> {
    let e = &s.engine;
    let top: Mask = (1 << e.holo()) - 1;
    let phi = Form::monomial(e.gens(), top, GR::one());
    let dphi = e.d(&phi);
    if !dphi.is_zero() {
        return Err(Error::NotHolomorphic(format!("dΦ = {}", e.describe(&dphi))));
    }
    let jbar = e.jbar(&phi);
    if jbar != phi {
        return Err(Error::NotReal(format!("J̄Φ = {}", e.describe(&jbar))));
    }
    let normalization = integrate(s, &phi.wedge(&e.conj(&phi)));
    Ok(VolumeForm { phi, normalization })
}

/// Coefficient of `Φ ∧ Φ̄` in a top-degree form.
pub fn integrate(s: &Session, f: &Form) -> GR {
    let all: Mask = if s.engine.gens() == 64 { u64::MAX } else { (1 << s.engine.gens()) - 1 };
    f.coeff(all)
}

/// Coefficient of `Φ` in a `(2n,0)`-form.
pub fn top_coefficient(s: &Session, f: &Form) -> GR {
    f.coeff((1 << s.engine.holo()) - 1)
}

/// `Ω_std = Σ φ^{2i−1} ∧ φ^{2i}`.
pub fn standard_omega(s: &Session) -> Form {
    let e = &s.engine;
    let mut omega = Form::zero(e.gens());
    for k in 0..e.holo() / 2 {
        omega = &omega + &e.phi(2 * k).wedge(&e.phi(2 * k + 1));
    }
    omega
}

/// The Hodge star for the metric making the coframe `φ` unitary, one
/// antilinear operator per degree.
#[derive(Clone, Debug)]
pub struct HodgeData {
    /// Index `p`: `∗ : Λ^{p,0} → Λ^{2n−p,0}`.
    pub star: Vec<OperatorMatrix>,
}

/// Matrix `W[I][K]` of the coefficient of `Φ` in `φ^I ∧ φ^K`.
fn wedge_pairing(s: &Session, p: usize) -> Matrix {
    let e = &s.engine;
    let top = e.holo();
    let left = e.basis(p, 0);
    let right = e.basis(top - p, 0);
    Matrix::from_fn(left.len(), right.len(), |i, k| {
        let a = Form::monomial(e.gens(), left[i], GR::one());
        let b = Form::monomial(e.gens(), right[k], GR::one());
        top_coefficient(s, &a.wedge(&b))
    })
}

/// Solves `φ^I ∧ ∗φ^J = h(φ^I, φ^J) Φ` degree by degree.
pub fn hodge_data(s: &Session) -> Result<HodgeData> {
    let top = s.engine.holo();
    let mut star = Vec::with_capacity(top + 1);
    for p in 0..=top {
        // W X = Gram, Gram = identity for the unitary coframe
        let w = wedge_pairing(s, p);
        let x = w.inverse().map_err(|_| Error::SingularGram)?;
        star.push(OperatorMatrix { kind: OperatorKind::Star, source: (p, 0), target: (top - p, 0), matrix: x, antilinear: true });
    }
    let data = HodgeData { star };
    // monomial rule ∗(φ^1∧…∧φ^p) = φ^{p+1}∧…∧φ^{2n}
    for p in 0..=top {
        let first: Mask = (1 << p) - 1;
        let rest: Mask = ((1 << top) - 1) & !first;
        let image = data.apply(s, &Form::monomial(s.engine.gens(), first, GR::one()))?;
        if image != Form::monomial(s.engine.gens(), rest, GR::one()) {
            return Err(Error::InternalInconsistency(format!("Hodge star breaks the monomial rule in degree {p}")));
        }
    }
    Ok(data)
}

impl HodgeData {
    pub fn apply(&self, s: &Session, f: &Form) -> Result<Form> {
        let e = &s.engine;
        let Some((p, 0)) = e.pure_bidegree(f) else {
            if f.is_zero() {
                return Ok(f.clone());
            }
            return Err(Error::DimensionMismatch("∗ acts on (p,0)-forms".into()));
        };
        let v = e.vector(f, p)?;
        Ok(e.form(&self.star[p].apply(&v), e.holo() - p))
    }

    /// Linear part of `∗` on degree `p`.
    pub fn linear(&self, p: usize) -> &Matrix {
        &self.star[p].matrix
    }

    /// `∗∗ = (−1)^p` as `S_{2n−p} · conj(S_p)`.
    pub fn square_sign_holds(&self, p: usize) -> bool {
        let top = self.star.len() - 1;
        let sq = &self.star[top - p].matrix * &self.star[p].matrix.conj();
        let id = Matrix::identity(sq.rows());
        sq == if p % 2 == 0 { id } else { -&id }
    }

    /// `h`-adjoint of `A : Λ^{p,0} → Λ^{p+1,0}` computed as `−∗A∗`.
    pub fn star_adjoint(&self, a: &[OperatorMatrix], p: usize) -> Matrix {
        let top = self.star.len() - 1;
        // v ↦ −S_{2n−p} conj(A_{2n−p−1} S_{p+1} conj(v))
        let inner = &a[top - p - 1].matrix.conj() * &self.star[p + 1].matrix.conj();
        -&(&self.star[top - p].matrix * &inner)
    }

    /// `A_p^† = −∗A∗` with `†` the conjugate transpose (the coframe is unitary).
    pub fn adjoint_identity_holds(&self, a: &[OperatorMatrix], p: usize) -> bool {
        a[p].matrix.adjoint() == self.star_adjoint(a, p)
    }

    /// `∗Δ_∂ = Δ_∂∗` on degree `p`.
    pub fn commutes_with_laplacian(&self, del: &[OperatorMatrix], p: usize) -> bool {
        let top = self.star.len() - 1;
        let lap = |q: usize| laplacian(del, q);
        let lhs = &self.star[p].matrix * &lap(p).conj();
        let rhs = &lap(top - p) * &self.star[p].matrix;
        lhs == rhs
    }
}

/// `Δ_∂ = ∂∂^† + ∂^†∂` on degree `p` for the unitary coframe metric.
pub fn laplacian(del: &[OperatorMatrix], p: usize) -> Matrix {
    let d = &del[p].matrix;
    let mut lap = &d.adjoint() * d;
    if p > 0 {
        let prev = &del[p - 1].matrix;
        lap = &lap + &(prev * &prev.adjoint());
    }
    lap
}

#[derive(Clone, Debug, Serialize)]
pub struct PairingReport {
    pub p: usize,
    pub h_bc: usize,
    pub h_ae_dual: usize,
    /// Entry `(i, j)`: `∫ α_i ∧ β_j ∧ Φ̄`.
    pub matrix: Vec<Vec<GR>>,
    pub bc_representatives: Vec<String>,
    pub ae_representatives: Vec<String>,
    pub nondegenerate: bool,
}

/// Pairing `H^{p,0}_BC × H^{2n−p,0}_AE → ℂ` on chosen representatives,
/// checked to be independent of the representatives.
pub fn pairing_matrix(s: &Session, p: usize) -> Result<PairingReport> {
    let cx = s.double_complex();
    let top = s.engine.holo();
    if p > top {
        return Err(Error::DimensionMismatch(format!("degree {p} exceeds {top}")));
    }
    let q = top - p;
    let bc_closed = cx.ker_del(p).intersection(&cx.ker_del_j(p));
    let bc_exact = cx.im_ddj(p);
    let ae_closed = cx.ker_ddj(q);
    let ae_exact = cx.im_del(q).sum(&cx.im_del_j(q));
    let bc_reps = bc_closed.complement_in(&bc_exact)?;
    let ae_reps = ae_closed.complement_in(&ae_exact)?;
    let w = wedge_pairing(s, p);
    let pair = |a: &[GR], b: &[GR]| -> GR {
        let wb = w.apply(b);
        a.iter().zip(&wb).map(|(x, y)| x * y).sum()
    };
    let matrix: Vec<Vec<GR>> = bc_reps.iter().map(|a| ae_reps.iter().map(|b| pair(a, b)).collect()).collect();
    // independence of representatives: closed forms pair to zero with exact ones
    let vanish = |xs: &Subspace, ys: &Subspace| xs.basis().iter().all(|a| ys.basis().iter().all(|b| pair(a, b).is_zero()));
    if !vanish(&bc_closed, &ae_exact) || !vanish(&bc_exact, &ae_closed) {
        return Err(Error::RepresentativeDependence(format!("degree {p}")));
    }
    // and concretely on perturbed representatives
    let perturb = |reps: &[Vec<GR>], by: &Subspace| -> Vec<Vec<GR>> {
        reps.iter()
            .map(|r| by.basis().iter().fold(r.clone(), |acc, b| acc.iter().zip(b).map(|(x, y)| x + y).collect()))
            .collect()
    };
    let (bc_alt, ae_alt) = (perturb(&bc_reps, &bc_exact), perturb(&ae_reps, &ae_exact));
    let alt: Vec<Vec<GR>> = bc_alt.iter().map(|a| ae_alt.iter().map(|b| pair(a, b)).collect()).collect();
    if alt != matrix {
        return Err(Error::RepresentativeDependence(format!("degree {p}, perturbed representatives")));
    }
    let nondegenerate = bc_reps.len() == ae_reps.len()
        && (bc_reps.is_empty() || !Matrix::from_rows(ae_reps.len(), matrix.clone()).det().is_zero());
    let e = &s.engine;
    Ok(PairingReport {
        p,
        h_bc: bc_reps.len(),
        h_ae_dual: ae_reps.len(),
        matrix,
        bc_representatives: bc_reps.iter().map(|v| e.describe(&e.form(v, p))).collect(),
        ae_representatives: ae_reps.iter().map(|v| e.describe(&e.form(v, q))).collect(),
        nondegenerate,
    })
}

/// `deg(α) = ∫ ∂α ∧ Ω ∧ Φ̄` for a `∂∂_J`-closed `(1,0)`-form `α` and a
/// quaternionic Gauduchon `Ω`, on 8-dimensional algebras.
pub fn degree_map(s: &Session, omega: &Form, alpha: &Form) -> Result<GR> {
    let e = &s.engine;
    if s.n() != 2 {
        return Err(Error::NotSL2(s.n()));
    }
    if !e.del(&e.del_j(omega)?)?.is_zero() {
        return Err(Error::NotGauduchon);
    }
    if !alpha.is_zero() && e.pure_bidegree(alpha) != Some((1, 0)) {
        return Err(Error::DimensionMismatch("the degree map takes a (1,0)-form".into()));
    }
    if !e.del(&e.del_j(alpha)?)?.is_zero() {
        return Err(Error::NotAeppliClosed);
    }
    Ok(top_coefficient(s, &e.del(alpha)?.wedge(omega)))
}

/// Degree map on a basis of `H^{1,0}_AE`, with representatives perturbed by
/// `∂`- and `∂_J`-exact terms to confirm independence.
pub fn degree_map_on_aeppli_basis(s: &Session, omega: &Form) -> Result<Vec<(String, GR)>> {
    if s.n() != 2 {
        return Err(Error::NotSL2(s.n()));
    }
    let cx = s.double_complex();
    let e = &s.engine;
    let closed = cx.ker_ddj(1);
    let exact = cx.im_del(1).sum(&cx.im_del_j(1));
    // H^{1,0}_∂ first, then a completion to H^{1,0}_AE
    let del_closed = cx.ker_del(1);
    let mut reps = del_closed.complement_in(&Subspace::zero(closed.ambient()).sum(&exact).intersection(&del_closed))?;
    let span = Subspace::span(closed.ambient(), reps.iter().cloned()).sum(&exact);
    reps.extend(closed.complement_in(&span)?);
    let mut out = Vec::new();
    for r in reps {
        let alpha = e.form(&r, 1);
        let value = degree_map(s, omega, &alpha)?;
        for b in exact.basis() {
            let shifted = &alpha + &e.form(b, 1);
            if degree_map(s, omega, &shifted)? != value {
                return Err(Error::RepresentativeDependence("degree map".into()));
            }
        }
        out.push((e.describe(&alpha), value));
    }
    Ok(out)
}

pub(crate) fn vectors_to_strings(s: &Session, vs: &[Vec<GR>], p: usize) -> Vec<String> {
    vs.iter().filter(|v| !is_zero_vector(v)).map(|v| s.engine.describe(&s.engine.form(v, p))).collect()
}
