use serde::{Deserialize, Serialize};

use super::Algebra;
use crate::arith::GaussianRational;
use crate::error::{Error, Result};
use crate::exterior::{Form, Substitution};
use crate::linalg::{Matrix, Subspace};

type GR = GaussianRational;

/// Canonical basis (reduced echelon rows) of the `+i` eigenspace of `m`
/// acting on coefficient columns.
pub fn plus_i_eigenspace(m: &Matrix) -> Vec<Vec<GR>> {
    let n = m.rows();
    let shifted = m - &Matrix::identity(n).scale(&GR::i());
    Subspace::kernel(&shifted).basis().to_vec()
}

/// A complex basis `ψ = (φ^1, …, φ^h, φ̄^1, …, φ̄^h)` of the complexified
/// coframe with the change-of-basis substitutions in both directions.
#[derive(Clone, Debug)]
pub struct ComplexFrame {
    half: usize,
    /// Column `c` holds the real-coframe coordinates of `ψ^c`.
    p: Matrix,
    /// `P⁻¹`; column `k` holds the `ψ`-coordinates of `e^k`.
    q: Matrix,
    to_frame: Substitution,
    from_frame: Substitution,
}

/// Builds the frame from `(1,0)` coordinate vectors `φ^a`.
pub fn complex_frame(holo: &[Vec<GR>]) -> Result<ComplexFrame> {
    let half = holo.len();
    let dim = 2 * half;
    let mut cols: Vec<Vec<GR>> = holo.to_vec();
    cols.extend(holo.iter().map(|v| v.iter().map(GR::conj).collect::<Vec<_>>()));
    let p = Matrix::from_columns(dim, &cols);
    let q = p.inverse().map_err(|_| Error::EigenspaceDimension { expected: half, found: p.rank().saturating_sub(half) })?;
    let to_frame = Substitution::new(dim, (0..dim).map(|k| Form::linear(&q.column(k))).collect());
    let from_frame = Substitution::new(dim, (0..dim).map(|c| Form::linear(&p.column(c))).collect());
    Ok(ComplexFrame { half, p, q, to_frame, from_frame })
}

impl ComplexFrame {
    pub fn half(&self) -> usize {
        self.half
    }

    pub fn p(&self) -> &Matrix {
        &self.p
    }

    pub fn q(&self) -> &Matrix {
        &self.q
    }

    /// Rewrites a form in the real coframe in terms of `ψ`.
    pub fn to_frame(&self, f: &Form) -> Form {
        self.to_frame.apply(f)
    }

    /// Rewrites a form in `ψ` in terms of the real coframe.
    pub fn from_frame(&self, f: &Form) -> Form {
        self.from_frame.apply(f)
    }

    /// Matrix of a real-coframe endomorphism in the `ψ` basis.
    pub fn conjugate_action(&self, m: &Matrix) -> Matrix {
        &(&self.q * m) * &self.p
    }
}

/// The `(1,0)`-coframe `φ^1, …, φ^{2n}` of `I` paired by `φ^{2k} = J φ̄^{2k−1}`.
#[derive(Clone, Debug)]
pub struct QuaternionicCoframe {
    phi: Vec<Vec<GR>>,
    frame: ComplexFrame,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoframeEntry {
    pub name: String,
    pub expression: String,
}

impl QuaternionicCoframe {
    /// Coordinates of `φ^{a+1}` on the real coframe.
    pub fn phi(&self) -> &[Vec<GR>] {
        &self.phi
    }

    pub fn frame(&self) -> &ComplexFrame {
        &self.frame
    }

    pub fn len(&self) -> usize {
        self.phi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phi.is_empty()
    }

    /// Human-readable `φ^a = …` lines.
    pub fn describe(&self) -> Vec<CoframeEntry> {
        self.phi
            .iter()
            .enumerate()
            .map(|(a, v)| CoframeEntry { name: format!("phi{}", a + 1), expression: describe_one_form(v, "e") })
            .collect()
    }
}

pub fn describe_one_form(v: &[GR], symbol: &str) -> String {
    use num_traits::{One, Zero};
    let mut out = String::new();
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = if c.is_one() {
            format!("{symbol}{}", k + 1)
        } else if (-c).is_one() {
            format!("-{symbol}{}", k + 1)
        } else if c.is_real() || c.re().is_zero() {
            format!("{c}*{symbol}{}", k + 1)
        } else {
            format!("({c})*{symbol}{}", k + 1)
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Picks `φ^{2k−1}` as the first reduced eigenspace row outside the span
/// found so far and sets `φ^{2k} = J φ̄^{2k−1}`.
pub fn build_coframe(alg: &Algebra) -> Result<QuaternionicCoframe> {
    let half = alg.dim / 2;
    let eig = plus_i_eigenspace(&alg.i);
    if eig.len() != half {
        return Err(Error::EigenspaceDimension { expected: half, found: eig.len() });
    }
    let mut phi: Vec<Vec<GR>> = Vec::with_capacity(half);
    let mut span = Subspace::zero(alg.dim);
    for row in &eig {
        if phi.len() == half {
            break;
        }
        if span.contains_vector(row) {
            continue;
        }
        let conj: Vec<GR> = row.iter().map(GR::conj).collect();
        let partner = alg.j.apply(&conj);
        let i_partner: Vec<GR> = partner.iter().map(|x| x * &GR::i()).collect();
        if alg.i.apply(&partner) != i_partner {
            return Err(Error::QuaternionicRelationFailure("J does not map (0,1)-forms of I to (1,0)-forms".into()));
        }
        span = span.sum(&Subspace::span(alg.dim, [row.clone(), partner.clone()]));
        phi.push(row.clone());
        phi.push(partner);
    }
    if phi.len() != half || span.dim() != half {
        return Err(Error::EigenspaceDimension { expected: half, found: span.dim() });
    }
    let frame = complex_frame(&phi)?;
    Ok(QuaternionicCoframe { phi, frame })
}
