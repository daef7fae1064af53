//! Invariant quaternionic Hermitian metrics: the predicates of the metric
//! hierarchy, exact positivity, and the HKT / strongly Gauduchon verdicts.

mod search;

pub use search::{hkt_search_space, positive_search, sg_search_space, SearchBounds, SearchOutcome, SearchSpace};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::GaussianRational;
use crate::cohomology::CohomologyTable;
use crate::error::{Error, Result};
use crate::exterior::Form;
use crate::linalg::{Matrix, Subspace};
use crate::session::Session;

pub use crate::sl::standard_omega;

type GR = GaussianRational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricCandidate {
    pub omega: String,
    /// Coefficients on the lexicographic basis of `Λ^{2,0}`.
    pub coefficients: Vec<GR>,
    /// `G_ab = ½ Ω(Z_a, J Z̄_b)` on the frame dual to the coframe.
    pub gram: Vec<Vec<GR>>,
    /// Leading principal minors of `G`; empty when `G` is not Hermitian.
    pub minors: Vec<GR>,
    pub hermitian: bool,
    pub hkt: bool,
    pub gauduchon: bool,
    pub strongly_gauduchon: bool,
    pub hyperkahler: bool,
}

impl MetricCandidate {
    /// hyperkähler ⇒ HKT ⇒ strongly Gauduchon ⇒ Gauduchon.
    pub fn flags_monotone(&self) -> bool {
        (!self.hyperkahler || self.hkt) && (!self.hkt || self.strongly_gauduchon) && (!self.strongly_gauduchon || self.gauduchon)
    }
}

/// Matrix of `φ^c(J Z̄_b)`: `J Z̄_{2k} = −Z_{2k−1}` and `J Z̄_{2k−1} = Z_{2k}`,
/// so that `Ω_std` has Gram matrix `½ Id`.
fn j_conj_frame(holo: usize) -> Matrix {
    let mut m = Matrix::zeros(holo, holo);
    for k in 0..holo / 2 {
        m[(2 * k, 2 * k + 1)] = GR::from_int(-1);
        m[(2 * k + 1, 2 * k)] = GR::one();
    }
    m
}

/// Gram matrix of a `(2,0)`-form given by its coefficient vector.
pub fn gram_matrix(s: &Session, coefficients: &[GR]) -> Matrix {
    let holo = s.engine.holo();
    let mut a = Matrix::zeros(holo, holo);
    for (mask, c) in s.engine.basis(2, 0).iter().zip(coefficients) {
        let i = mask.trailing_zeros() as usize;
        let j = 63 - mask.leading_zeros() as usize;
        a[(i, j)] = c.clone();
        a[(j, i)] = -c;
    }
    (&a * &j_conj_frame(holo)).scale(&GR::frac(1, 2))
}

/// Leading principal minors, or `None` if `g` is not Hermitian. Computed as
/// running products of the pivots of elimination without row exchanges; a
/// zero pivot makes the remaining minors fall back to determinants.
pub fn leading_minors(g: &Matrix) -> Option<Vec<GR>> {
    if *g != g.adjoint() {
        return None;
    }
    Some(match pivots(g) {
        Ok(ps) => ps
            .iter()
            .scan(GR::one(), |acc, p| {
                *acc *= p;
                Some(acc.clone())
            })
            .collect(),
        Err(_) => (1..=g.rows()).map(|k| g.submatrix(0..k, 0..k).det()).collect(),
    })
}

/// Pivots of Gaussian elimination without exchanges; stops at a zero pivot.
fn pivots(g: &Matrix) -> std::result::Result<Vec<GR>, usize> {
    let n = g.rows();
    let mut m = g.clone();
    let mut out = Vec::with_capacity(n);
    for c in 0..n {
        let p = m[(c, c)].clone();
        if p.is_zero() {
            return Err(c);
        }
        let inv = p.inv().expect("nonzero pivot");
        for r in c + 1..n {
            if m[(r, c)].is_zero() {
                continue;
            }
            let f = &m[(r, c)] * &inv;
            for k in c..n {
                let sub = &f * &m[(c, k)];
                m[(r, k)] -= &sub;
            }
        }
        out.push(p);
    }
    Ok(out)
}

/// Sylvester's criterion: every leading principal minor is positive, which
/// for a Hermitian matrix means every elimination pivot is positive.
pub fn positive_definite(g: &Matrix) -> bool {
    if *g != g.adjoint() {
        return false;
    }
    let n = g.rows();
    let mut m = g.clone();
    for c in 0..n {
        let p = m[(c, c)].clone();
        if !(p.im().is_zero() && p.re() > &Zero::zero()) {
            return false;
        }
        let inv = p.inv().expect("nonzero pivot");
        for r in c + 1..n {
            if m[(r, c)].is_zero() {
                continue;
            }
            let f = &m[(r, c)] * &inv;
            for k in c..n {
                let sub = &f * &m[(c, k)];
                m[(r, k)] -= &sub;
            }
        }
    }
    true
}

/// Whether `v ∈ Λ^{p,0}` is `∂_J`-exact, via `rank[M | v] = rank M`.
fn del_j_exact(s: &Session, v: &[GR], p: usize) -> bool {
    if p == 0 {
        return v.iter().all(Zero::is_zero);
    }
    let m = &s.del_j[p - 1].matrix;
    m.rank() == m.hcat(&Matrix::from_columns(m.rows(), &[v.to_vec()])).rank()
}

/// Evaluates every predicate of the metric hierarchy on a `(2,0)`-form.
pub fn classify_metric(s: &Session, omega: &Form) -> Result<MetricCandidate> {
    let e = &s.engine;
    if !omega.is_zero() && e.pure_bidegree(omega) != Some((2, 0)) {
        return Err(Error::NotBidegree20);
    }
    let coefficients = e.vector(omega, 2)?;
    let g = gram_matrix(s, &coefficients);
    let minors = leading_minors(&g);
    let hermitian = e.jbar(omega) == *omega && positive_definite(&g);
    let n = s.n();
    let power = omega.wedge_power(n - 1);
    let del_power = e.del(&power)?;
    let gauduchon = e.del(&e.del_j(&power)?)?.is_zero();
    let strongly = del_j_exact(s, &e.vector(&del_power, 2 * n - 1)?, 2 * n - 1);
    let hkt = e.del(omega)?.is_zero();
    let hyperkahler = e.d(omega).is_zero();
    Ok(MetricCandidate {
        omega: e.describe(omega),
        coefficients,
        gram: (0..g.rows()).map(|r| g.row(r).to_vec()).collect(),
        minors: minors.unwrap_or_default(),
        hermitian,
        hkt: hermitian && hkt,
        gauduchon: hermitian && gauduchon,
        strongly_gauduchon: hermitian && strongly,
        hyperkahler: hermitian && hyperkahler,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Question {
    Hkt,
    StronglyGauduchon,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Delta2Criterion,
    EvenH10Criterion,
    ExplicitCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExistenceVerdict {
    pub question: Question,
    pub answer: bool,
    pub method: Method,
    pub delta2: i64,
    pub h10_del: usize,
    pub search: Option<SearchOutcome>,
    pub certificate: Option<MetricCandidate>,
}

impl ExistenceVerdict {
    pub fn answer_word(&self) -> &'static str {
        if self.answer {
            "yes"
        } else {
            "no"
        }
    }
}

/// HKT existence for `n = 2`: `Δ² = 0` compared with the parity of
/// `h^{1,0}_∂`, then a certificate search when the answer is yes.
pub fn hkt_existence(s: &Session, table: &CohomologyTable, bounds: &SearchBounds) -> Result<ExistenceVerdict> {
    if s.n() != 2 {
        return Err(Error::NotSL2(s.n()));
    }
    let delta2 = table.row(2).delta;
    let h10 = table.row(1).h_del;
    let by_delta = delta2 == 0;
    if by_delta != (h10 % 2 == 0) {
        return Err(Error::TheoremViolation(format!("Δ² = {delta2} but h^{{1,0}}_∂ = {h10}")));
    }
    let mut verdict = ExistenceVerdict {
        question: Question::Hkt,
        answer: by_delta,
        method: Method::Delta2Criterion,
        delta2,
        h10_del: h10,
        search: None,
        certificate: None,
    };
    if by_delta {
        let outcome = positive_search(s, &hkt_search_space(s)?, bounds)?;
        if let Some(c) = &outcome.certificate {
            if !c.hkt {
                return Err(Error::InternalInconsistency(format!("HKT certificate {} fails classification", c.omega)));
            }
            verdict.method = Method::ExplicitCertificate;
            verdict.certificate = Some(c.clone());
        }
        verdict.search = Some(outcome);
    }
    Ok(verdict)
}

/// Strongly Gauduchon existence for `n = 2`: the answer equals the HKT one; a
/// direct search over invariant strongly Gauduchon forms must not contradict it.
pub fn sg_existence(s: &Session, table: &CohomologyTable, bounds: &SearchBounds) -> Result<ExistenceVerdict> {
    let hkt = hkt_existence(s, table, bounds)?;
    let outcome = positive_search(s, &sg_search_space(s)?, bounds)?;
    if let Some(c) = &outcome.certificate {
        if !c.strongly_gauduchon {
            return Err(Error::InternalInconsistency(format!("certificate {} is not strongly Gauduchon", c.omega)));
        }
        if !hkt.answer {
            return Err(Error::TheoremViolation(format!(
                "strongly Gauduchon form {} found although no HKT metric exists",
                c.omega
            )));
        }
    }
    let certificate = outcome.certificate.clone().or_else(|| hkt.certificate.clone());
    Ok(ExistenceVerdict {
        question: Question::StronglyGauduchon,
        answer: hkt.answer,
        method: if certificate.is_some() { Method::ExplicitCertificate } else { Method::Delta2Criterion },
        delta2: hkt.delta2,
        h10_del: hkt.h10_del,
        search: Some(outcome),
        certificate,
    })
}

/// Real-linear subspace `{v : constraints·v = 0, J̄v = v}` of `Λ^{2,0}` as
/// a rational basis of complex vectors.
pub(crate) fn real_solution_space(s: &Session, constraints: &Matrix) -> Result<Vec<Vec<GR>>> {
    let m = &s.jbar[2].matrix;
    let n = m.cols();
    if m.row(0).iter().chain((1..m.rows()).flat_map(|r| m.row(r).iter())).any(|x| !x.is_real()) {
        return Err(Error::InternalInconsistency("J̄ on (2,0)-forms has non-real entries".into()));
    }
    let re = |x: &GR| GR::from_real(x.re().clone());
    let im = |x: &GR| GR::from_real(x.im().clone());
    // unknowns (x, y) with v = x + iy; J̄v = M conj(v) = v means Mx = x, My = −y
    let mut rows: Vec<Vec<GR>> = Vec::new();
    for r in 0..n {
        let mut row = vec![GR::zero(); 2 * n];
        let mut row2 = vec![GR::zero(); 2 * n];
        for c in 0..n {
            let d = if r == c { GR::one() } else { GR::zero() };
            row[c] = &m[(r, c)] - &d;
            row2[n + c] = &m[(r, c)] + &d;
        }
        rows.push(row);
        rows.push(row2);
    }
    for r in 0..constraints.rows() {
        let mut real = vec![GR::zero(); 2 * n];
        let mut imag = vec![GR::zero(); 2 * n];
        for c in 0..n {
            let x = &constraints[(r, c)];
            real[c] = re(x);
            real[n + c] = -&im(x);
            imag[c] = im(x);
            imag[n + c] = re(x);
        }
        rows.push(real);
        rows.push(imag);
    }
    let system = Matrix::from_rows(2 * n, rows);
    Ok(Subspace::kernel(&system)
        .basis()
        .iter()
        .map(|k| (0..n).map(|c| &k[c] + &(&k[n + c] * &GR::i())).collect())
        .collect())
}
