use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::coframe::{complex_frame, plus_i_eigenspace};
use super::Algebra;
use crate::error::{Error, Result};
use crate::exterior::{mask_indices, Form, Mask};
use crate::linalg::{Matrix, Subspace};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub jacobi_ok: bool,
    pub nilpotent_ok: bool,
    pub nilpotency_step: Option<usize>,
    /// `None` until the hypercomplex checks have run.
    pub quaternionic_relations_ok: Option<bool>,
    pub integrability: BTreeMap<String, bool>,
    pub messages: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.messages.is_empty()
    }

    /// The first failure as an error.
    pub fn check(&self) -> Result<()> {
        if !self.jacobi_ok || !self.nilpotent_ok {
            return Err(Error::InvalidLieAlgebra(self.messages.join("; ")));
        }
        if self.quaternionic_relations_ok == Some(false) {
            return Err(Error::QuaternionicRelationFailure(self.messages.join("; ")));
        }
        if let Some((name, _)) = self.integrability.iter().find(|(_, ok)| !**ok) {
            let form = self.messages.iter().find(|m| m.starts_with(name.as_str())).cloned().unwrap_or_default();
            return Err(Error::IntegrabilityFailure { structure: name.clone(), form });
        }
        Ok(())
    }
}

/// Jacobi identity as `d²e^k = 0` and nilpotency via the ascending filtration
/// of the coframe.
pub fn validate_lie_algebra(alg: &Algebra) -> ValidationReport {
    let mut messages = Vec::new();
    let d = alg.differential();
    let mut jacobi_ok = true;
    for (k, dk) in alg.d.iter().enumerate() {
        let dd = d.apply(dk);
        if !dd.is_zero() {
            jacobi_ok = false;
            messages.push(format!("Jacobi identity fails: d(de^{}) = {:?}", k + 1, dd));
        }
    }
    let step = if jacobi_ok { nilpotency_step(alg) } else { None };
    if jacobi_ok && step.is_none() {
        messages.push("Lie algebra is not nilpotent".into());
    }
    ValidationReport {
        jacobi_ok,
        nilpotent_ok: step.is_some(),
        nilpotency_step: step,
        quaternionic_relations_ok: None,
        integrability: BTreeMap::new(),
        messages,
    }
}

/// Length of the filtration `V_1 = closed 1-forms`,
/// `V_{k+1} = {α : dα ∈ V_k ∧ 𝔤*}`, or `None` if it stalls short of `𝔤*`.
pub fn nilpotency_step(alg: &Algebra) -> Option<usize> {
    let n = alg.dim;
    let two_basis: Vec<Mask> = two_form_basis(n);
    // matrix of d on 1-forms: column k = de^k
    let dmat = Matrix::from_columns(
        two_basis.len(),
        &alg.d.iter().map(|f| f.to_vector(&two_basis).expect("2-form")).collect::<Vec<_>>(),
    );
    let mut v = Subspace::kernel(&dmat);
    let mut step = 1;
    loop {
        if v.dim() == n {
            return Some(step);
        }
        let mut wedges = Vec::new();
        for b in v.basis() {
            let f = Form::linear(b);
            for j in 0..n {
                wedges.push(f.wedge(&Form::generator(n, j)).to_vector(&two_basis).expect("2-form"));
            }
        }
        let target = Subspace::span(two_basis.len(), wedges);
        let next = Subspace::preimage(&dmat, &target);
        if next.dim() == v.dim() {
            return None;
        }
        v = next;
        step += 1;
    }
}

fn two_form_basis(n: usize) -> Vec<Mask> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            out.push((1 << a) | (1 << b));
        }
    }
    out
}

/// Runs the Lie algebra checks, then the quaternionic relations and the
/// integrability of `I`, `J` and `K = I∘J`.
pub fn validate_hypercomplex(alg: &Algebra) -> ValidationReport {
    let mut report = validate_lie_algebra(alg);
    let n = alg.dim;
    let minus_id = -&Matrix::identity(n);
    let mut rel_ok = true;
    let mut rel = |ok: bool, msg: &str, report: &mut ValidationReport| {
        if !ok {
            rel_ok = false;
            report.messages.push(msg.to_string());
        }
    };
    rel(&alg.i * &alg.i == minus_id, "I² ≠ −Id", &mut report);
    rel(&alg.j * &alg.j == minus_id, "J² ≠ −Id", &mut report);
    rel(&alg.i * &alg.j == -&(&alg.j * &alg.i), "IJ ≠ −JI", &mut report);
    rel(&alg.k * &alg.k == minus_id, "K² ≠ −Id", &mut report);
    if let Some(k) = &alg.k_input {
        rel(k == &alg.k, "supplied K differs from I∘J", &mut report);
    }
    report.quaternionic_relations_ok = Some(rel_ok);
    if !rel_ok {
        return report;
    }
    for (name, m) in [("I", &alg.i), ("J", &alg.j), ("K", &alg.k)] {
        match first_non_integrable(alg, m) {
            Ok(None) => {
                report.integrability.insert(name.into(), true);
            }
            Ok(Some(msg)) => {
                report.integrability.insert(name.into(), false);
                report.messages.push(format!("{name}: {msg}"));
            }
            Err(e) => {
                report.integrability.insert(name.into(), false);
                report.messages.push(format!("{name}: {e}"));
            }
        }
    }
    report
}

/// Finds a (1,0)-form whose differential has a nonzero (0,2) part.
fn first_non_integrable(alg: &Algebra, m: &Matrix) -> Result<Option<String>> {
    let half = alg.dim / 2;
    let eig = plus_i_eigenspace(m);
    if eig.len() != half {
        return Err(Error::EigenspaceDimension { expected: half, found: eig.len() });
    }
    let frame = complex_frame(&eig)?;
    for (a, v) in eig.iter().enumerate() {
        let dv = frame.to_frame(&alg.d_of_one_form(v));
        let bad = dv.filter(|mask| mask_indices(mask).iter().all(|&k| k >= half));
        if !bad.is_zero() {
            let shown: Vec<String> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("({c})e^{}", k + 1))
                .collect();
            return Ok(Some(format!("d of the (1,0)-form #{} = {} has a (0,2) part", a + 1, shown.join(" + "))));
        }
    }
    Ok(None)
}
