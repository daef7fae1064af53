//! The full structured result for one instantiated algebra.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::CoframeEntry;
use crate::cohomology::{compute_table, ddj_lemma_holds, CohomologyTable};
use crate::error::Result;
use crate::metric::{classify_metric, hkt_existence, sg_existence, ExistenceVerdict, MetricCandidate, SearchBounds};
use crate::session::Session;
use crate::sl::{degree_map_on_aeppli_basis, jbar_decomposition, standard_omega, DecompositionReport};
use crate::suite::{run_property_suite, SuiteReport};
use crate::GaussianRational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceEcho {
    pub name: String,
    pub dimension: usize,
    pub quaternionic_dimension: usize,
    pub parameters: BTreeMap<String, String>,
    /// Nonzero `de^k` in the real coframe.
    pub structure: Vec<String>,
    pub nilpotency_step: Option<usize>,
    pub coframe: Vec<CoframeEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeValue {
    pub representative: String,
    pub value: GaussianRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub degenerate_at_first_page: bool,
    pub ddj_lemma: bool,
    pub pure: bool,
    pub full: bool,
    /// `None` unless `n = 2`.
    pub hkt: Option<ExistenceVerdict>,
    pub strongly_gauduchon: Option<ExistenceVerdict>,
    pub standard_metric: MetricCandidate,
    /// `None` unless `n = 2` and `Ω_std` is quaternionic Gauduchon.
    pub degree_map: Option<Vec<DegreeValue>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub algebra: InstanceEcho,
    pub table: CohomologyTable,
    pub decomposition: DecompositionReport,
    pub verdicts: Verdicts,
    pub suite: SuiteReport,
}

/// The numbers and verdicts of a report, without anything that depends on
/// the presentation (names, coframe, representatives, certificates).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportInvariants {
    pub table: CohomologyTable,
    pub decomposition: [usize; 6],
    pub sd_asd: Option<(usize, usize)>,
    pub degenerate_at_first_page: bool,
    pub ddj_lemma: bool,
    pub hkt: Option<bool>,
    pub strongly_gauduchon: Option<bool>,
    pub certificate_found: Option<bool>,
    pub suite_passed: bool,
}

impl ReportDocument {
    pub fn invariants(&self) -> ReportInvariants {
        let d = &self.decomposition;
        let v = &self.verdicts;
        ReportInvariants {
            table: self.table.clone(),
            decomposition: [d.h_del, d.plus, d.minus, d.intersection, d.sum, d.complement],
            sd_asd: d.sd_asd.as_ref().map(|x| (x.self_dual, x.anti_self_dual)),
            degenerate_at_first_page: v.degenerate_at_first_page,
            ddj_lemma: v.ddj_lemma,
            hkt: v.hkt.as_ref().map(|x| x.answer),
            strongly_gauduchon: v.strongly_gauduchon.as_ref().map(|x| x.answer),
            certificate_found: v.hkt.as_ref().map(|x| x.certificate.is_some()),
            suite_passed: self.suite.passed(),
        }
    }
}

pub fn echo(s: &Session) -> InstanceEcho {
    let alg = &s.algebra;
    let structure = alg
        .d
        .iter()
        .enumerate()
        .filter(|(_, f)| !f.is_zero())
        .map(|(k, f)| format!("de{} = {}", k + 1, describe_real(f)))
        .collect();
    InstanceEcho {
        name: s.name.clone(),
        dimension: alg.dim,
        quaternionic_dimension: s.n(),
        parameters: alg.bindings.iter().map(|(k, v)| (k.clone(), v.to_string())).collect(),
        structure,
        nilpotency_step: s.validation.nilpotency_step,
        coframe: s.coframe.describe(),
    }
}

/// `e12 - 1/2*e34` style rendering of a real form.
fn describe_real(f: &crate::Form) -> String {
    let mut out = String::new();
    for (mask, c) in f.terms() {
        let idx: Vec<String> = crate::exterior::mask_indices(mask).iter().map(|k| (k + 1).to_string()).collect();
        let sep = if idx.iter().any(|s| s.len() > 1) { "," } else { "" };
        let name = format!("e{}", idx.join(sep));
        let term = if num_traits::One::is_one(c) {
            name
        } else if num_traits::One::is_one(&-c) {
            format!("-{name}")
        } else {
            format!("{c}*{name}")
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    out
}

/// Computes everything; theorem violations surface as errors.
pub fn build_report(s: &Session, bounds: &SearchBounds) -> Result<ReportDocument> {
    let table = compute_table(&s.double_complex())?;
    let ddj_lemma = ddj_lemma_holds(&table)?;
    let decomposition = jbar_decomposition(s)?;
    let (hkt, strongly_gauduchon) = if s.n() == 2 {
        (Some(hkt_existence(s, &table, bounds)?), Some(sg_existence(s, &table, bounds)?))
    } else {
        (None, None)
    };
    let omega = standard_omega(s);
    let degree_map = match degree_map_on_aeppli_basis(s, &omega) {
        Ok(values) => Some(values.into_iter().map(|(representative, value)| DegreeValue { representative, value }).collect()),
        Err(crate::Error::NotGauduchon | crate::Error::NotSL2(_)) => None,
        Err(e) => return Err(e),
    };
    let verdicts = Verdicts {
        degenerate_at_first_page: table.degenerate_at_first_page(),
        ddj_lemma,
        pure: decomposition.pure,
        full: decomposition.full,
        hkt,
        strongly_gauduchon,
        standard_metric: classify_metric(s, &omega)?,
        degree_map,
    };
    Ok(ReportDocument { algebra: echo(s), table, decomposition, verdicts, suite: run_property_suite(s, bounds) })
}
