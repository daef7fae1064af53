use num_traits::{One, Zero};
use serde::Serialize;

use super::form::{mask_indices, Derivation, Form, Mask, Substitution};
use crate::algebra::{Algebra, QuaternionicCoframe};
use crate::arith::GaussianRational;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

type GR = GaussianRational;

/// Lexicographic list of `k`-subsets of `offset..offset + m` as masks.
pub fn combinations(m: usize, k: usize, offset: usize) -> Vec<Mask> {
    fn rec(start: usize, m: usize, k: usize, offset: usize, acc: Mask, out: &mut Vec<Mask>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for a in start..m {
            if m - a < k {
                break;
            }
            rec(a + 1, m, k - 1, offset, acc | (1 << (a + offset)), out);
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, offset, 0, &mut out);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum OperatorKind {
    Del,
    DelJ,
    DelBar,
    Jbar,
    DdJ,
    Star,
}

/// An operator on a fixed bidegree realized on lexicographic monomial bases.
///
/// When `antilinear` is set the operator is `v ↦ matrix · conj(v)`.
#[derive(Clone, Debug, Serialize)]
pub struct OperatorMatrix {
    pub kind: OperatorKind,
    pub source: (usize, usize),
    pub target: (usize, usize),
    pub matrix: Matrix,
    pub antilinear: bool,
}

impl OperatorMatrix {
    pub fn apply(&self, v: &[GR]) -> Vec<GR> {
        if self.antilinear {
            self.matrix.apply(&v.iter().map(GR::conj).collect::<Vec<_>>())
        } else {
            self.matrix.apply(v)
        }
    }
}

/// The complexified exterior algebra in the basis
/// `ψ = (φ^1, …, φ^{2n}, φ̄^1, …, φ̄^{2n})` with `d`, `J` and conjugation.
#[derive(Clone, Debug)]
pub struct Engine {
    holo: usize,
    d: Derivation,
    j: Substitution,
    conj: Substitution,
}

impl Engine {
    pub fn new(alg: &Algebra, coframe: &QuaternionicCoframe) -> Engine {
        let frame = coframe.frame();
        let gens = alg.dim;
        let holo = gens / 2;
        let p = frame.p();
        let d_images = (0..gens).map(|b| frame.to_frame(&alg.d_of_one_form(&p.column(b)))).collect();
        let j_psi = frame.conjugate_action(&alg.j);
        let j_images = (0..gens).map(|b| Form::linear(&j_psi.column(b))).collect();
        let conj_images = (0..gens).map(|a| Form::generator(gens, (a + holo) % gens)).collect();
        Engine { holo, d: Derivation::new(d_images), j: Substitution::new(gens, j_images), conj: Substitution::new(gens, conj_images) }
    }

    /// `2n`, the number of holomorphic generators.
    pub fn holo(&self) -> usize {
        self.holo
    }

    pub fn gens(&self) -> usize {
        2 * self.holo
    }

    pub fn bidegree(&self, mask: Mask) -> (usize, usize) {
        let hmask: Mask = (1 << self.holo) - 1;
        ((mask & hmask).count_ones() as usize, (mask & !hmask).count_ones() as usize)
    }

    /// `φ^{a+1}`.
    pub fn phi(&self, a: usize) -> Form {
        Form::generator(self.gens(), a)
    }

    /// `conj(φ^{a+1})`.
    pub fn phibar(&self, a: usize) -> Form {
        Form::generator(self.gens(), a + self.holo)
    }

    /// `φ^{I}` for 1-based holomorphic indices, e.g. `phis(&[1, 2])` is `φ^{12}`.
    pub fn phis(&self, indices: &[usize]) -> Form {
        indices.iter().fold(Form::one(self.gens()), |acc, &a| acc.wedge(&self.phi(a - 1)))
    }

    /// Lexicographic monomial basis of `Λ^{p,q}`.
    pub fn basis(&self, p: usize, q: usize) -> Vec<Mask> {
        let holo = combinations(self.holo, p, 0);
        let anti = combinations(self.holo, q, self.holo);
        holo.iter().flat_map(|h| anti.iter().map(move |a| h | a)).collect()
    }

    /// The bidegree of a nonzero form of pure type.
    pub fn pure_bidegree(&self, f: &Form) -> Option<(usize, usize)> {
        let mut it = f.terms().map(|(m, _)| self.bidegree(m));
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    pub fn project(&self, f: &Form, p: usize, q: usize) -> Form {
        f.filter(|m| self.bidegree(m) == (p, q))
    }

    pub fn d(&self, f: &Form) -> Form {
        self.d.apply(f)
    }

    /// The `ψ`-expansion of `d ψ^k`.
    pub fn d_generator(&self, k: usize) -> &Form {
        self.d.image(k)
    }

    /// `(∂f, ∂̄f)` for `f` of pure bidegree, failing if `df` has other components.
    pub fn split_d(&self, f: &Form) -> Result<(Form, Form)> {
        let Some((p, q)) = self.pure_bidegree(f) else {
            return Ok((Form::zero(self.gens()), Form::zero(self.gens())));
        };
        let df = self.d(f);
        let del = self.project(&df, p + 1, q);
        let del_bar = self.project(&df, p, q + 1);
        if &(&del + &del_bar) != &df {
            return Err(Error::IntegrabilityViolation { p, q });
        }
        Ok((del, del_bar))
    }

    pub fn del(&self, f: &Form) -> Result<Form> {
        Ok(self.split_d(f)?.0)
    }

    pub fn del_bar(&self, f: &Form) -> Result<Form> {
        Ok(self.split_d(f)?.1)
    }

    /// `J` acting factor-wise on wedge monomials.
    pub fn j_action(&self, f: &Form) -> Form {
        self.j.apply(f)
    }

    pub fn conj(&self, f: &Form) -> Form {
        self.conj.apply(&f.conj_coeffs())
    }

    /// `φ ↦ J φ̄`.
    pub fn jbar(&self, f: &Form) -> Form {
        self.j_action(&self.conj(f))
    }

    /// `∂_J = J⁻¹ ∂̄ J` on `(p,0)`-forms, with `J⁻¹ = (−1)^k J` on `k`-forms.
    pub fn del_j(&self, f: &Form) -> Result<Form> {
        let Some((p, q)) = self.pure_bidegree(f) else {
            return Ok(Form::zero(self.gens()));
        };
        if q != 0 {
            return Err(Error::DimensionMismatch(format!("∂_J is defined on (p,0)-forms, got ({p},{q})")));
        }
        let g = self.del_bar(&self.j_action(f))?;
        let h = self.j_action(&g);
        Ok(if (p + 1) % 2 == 1 { -&h } else { h })
    }

    fn matrix_of(&self, source: &[Mask], target: &[Mask], mut op: impl FnMut(&Form) -> Result<Form>) -> Result<Matrix> {
        let gens = self.gens();
        let mut cols = Vec::with_capacity(source.len());
        for &m in source {
            let image = op(&Form::monomial(gens, m, GR::one()))?;
            let v = image.to_vector(target).ok_or_else(|| {
                Error::InternalInconsistency(format!("operator image {image:?} leaves the target bidegree"))
            })?;
            cols.push(v);
        }
        Ok(Matrix::from_columns(target.len(), &cols))
    }

    /// Realizes an operator on `Λ^{p,0}` (or `Λ^{p,0} → Λ^{p,1}` for `∂̄`).
    pub fn operator_matrix(&self, kind: OperatorKind, p: usize) -> Result<OperatorMatrix> {
        let n2 = self.holo;
        if p > n2 {
            return Err(Error::DimensionMismatch(format!("no (p,0)-forms for p = {p} > {n2}")));
        }
        let source = self.basis(p, 0);
        let (target_bd, antilinear) = match kind {
            OperatorKind::Del | OperatorKind::DelJ => ((p + 1, 0), false),
            OperatorKind::DelBar => ((p, 1), false),
            OperatorKind::Jbar => ((p, 0), true),
            OperatorKind::DdJ => ((p + 2, 0), false),
            OperatorKind::Star => ((n2 - p, 0), true),
        };
        let target = if target_bd.0 > n2 { Vec::new() } else { self.basis(target_bd.0, target_bd.1) };
        let matrix = match kind {
            OperatorKind::Del => self.matrix_of(&source, &target, |f| self.del(f))?,
            OperatorKind::DelJ => self.matrix_of(&source, &target, |f| self.del_j(f))?,
            OperatorKind::DelBar => self.matrix_of(&source, &target, |f| self.del_bar(f))?,
            OperatorKind::Jbar => self.matrix_of(&source, &target, |f| Ok(self.jbar(f)))?,
            OperatorKind::DdJ => self.matrix_of(&source, &target, |f| self.del(&self.del_j(f)?))?,
            OperatorKind::Star => {
                return Err(Error::DimensionMismatch("the Hodge star is built by the SL(n,H) layer".into()));
            }
        };
        Ok(OperatorMatrix { kind, source: (p, 0), target: target_bd, matrix, antilinear })
    }

    /// Coefficient vector of a `(p,0)`-form on the lexicographic basis.
    pub fn vector(&self, f: &Form, p: usize) -> Result<Vec<GR>> {
        f.to_vector(&self.basis(p, 0))
            .ok_or_else(|| Error::DimensionMismatch(format!("form {f:?} is not of bidegree ({p},0)")))
    }

    pub fn form(&self, v: &[GR], p: usize) -> Form {
        Form::from_vector(self.gens(), &self.basis(p, 0), v)
    }

    /// Human-readable name of a `(p,0)` basis monomial, e.g. `phi^{13}`.
    pub fn monomial_name(&self, mask: Mask) -> String {
        let idx: Vec<String> = mask_indices(mask)
            .into_iter()
            .map(|k| if k < self.holo { format!("{}", k + 1) } else { format!("{}b", k + 1 - self.holo) })
            .collect();
        if idx.is_empty() {
            "1".into()
        } else if idx.iter().all(|s| s.len() == 1) {
            format!("phi{}", idx.concat())
        } else {
            format!("phi{{{}}}", idx.join(","))
        }
    }

    /// Readable expansion of a form, e.g. `phi12 - 1/2*phi34`.
    pub fn describe(&self, f: &Form) -> String {
        let mut out = String::new();
        for (m, c) in f.terms() {
            let name = self.monomial_name(m);
            let term = if c.is_one() {
                name
            } else if (-c).is_one() {
                format!("-{name}")
            } else if c.is_real() || c.re().is_zero() {
                format!("{c}*{name}")
            } else {
                format!("({c})*{name}")
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
}

/// `true` when every coefficient of the vector is zero.
pub fn is_zero_vector(v: &[GR]) -> bool {
    v.iter().all(Zero::is_zero)
}
