//! Every structural identity and theorem the engine knows, evaluated on one
//! algebra. Failures are data, not errors.

use serde::{Deserialize, Serialize};

use crate::cohomology::{compute_table, ddj_lemma_holds, e2_page_iteration, e2_quotient, non_hkt_degrees, CohomologyTable};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::metric::{classify_metric, hkt_search_space, positive_search, sg_existence, SearchBounds};
use crate::session::Session;
use crate::sl::{
    canonical_volume_form, degree_map_on_aeppli_basis, hodge_data, jbar_decomposition, pairing_matrix,
    sd_asd_decomposition, standard_omega,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub statement: String,
    pub status: Status,
    /// Witnesses on failure, measured values otherwise.
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub algebra: String,
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

struct Recorder {
    checks: Vec<CheckOutcome>,
}

impl Recorder {
    fn push(&mut self, name: &str, statement: &str, status: Status, detail: String) {
        self.checks.push(CheckOutcome { name: name.into(), statement: statement.into(), status, detail });
    }

    /// Records a check whose evaluation yields `Ok(witnesses)`; an empty
    /// witness list passes, an error fails.
    fn check(&mut self, name: &str, statement: &str, run: impl FnOnce() -> Result<Vec<String>>) {
        match run() {
            Ok(w) if w.is_empty() => self.push(name, statement, Status::Pass, String::new()),
            Ok(w) => self.push(name, statement, Status::Fail, w.join("; ")),
            Err(e) => self.push(name, statement, Status::Fail, e.to_string()),
        }
    }

    fn not_applicable(&mut self, name: &str, statement: &str, detail: String) {
        self.push(name, statement, Status::NotApplicable, detail);
    }
}

fn failures<T>(items: impl IntoIterator<Item = T>, ok: impl Fn(&T) -> bool, show: impl Fn(&T) -> String) -> Vec<String> {
    items.into_iter().filter(|x| !ok(x)).map(|x| show(&x)).collect()
}

/// Runs every check on `s`; `bounds` drives the certificate searches.
pub fn run_property_suite(s: &Session, bounds: &SearchBounds) -> SuiteReport {
    let mut r = Recorder { checks: Vec::new() };
    let top = s.engine.holo();
    let n = s.n();
    let cx = s.double_complex();

    r.check("complex relations", "∂² = ∂_J² = ∂∂_J + ∂_J∂ = 0 as matrices", || {
        Ok(cx.check_relations().err().into_iter().collect())
    });
    r.check("J̄ intertwines ∂ and ∂_J", "∂_J∘J̄ = −J̄∘∂", || {
        Ok(failures(
            0..top,
            |&p| &s.del_j[p].matrix * &s.jbar[p].matrix == -&(&s.jbar[p + 1].matrix * &s.del[p].matrix.conj()),
            |p| format!("degree {p}"),
        ))
    });
    r.check("J̄ squares to a sign", "J̄² = (−1)^p on (p,0)-forms", || {
        Ok(failures(
            0..=top,
            |&p| {
                let m = &s.jbar[p].matrix;
                let id = Matrix::identity(m.rows());
                m * &m.conj() == if p % 2 == 0 { id } else { -&id }
            },
            |p| format!("degree {p}"),
        ))
    });

    let table = match compute_table(&cx) {
        Ok(t) => Some(t),
        Err(e) => {
            r.push("cohomology table", "every dimension computes and E₂ agrees by both routes", Status::Fail, e.to_string());
            None
        }
    };
    if let Some(t) = &table {
        table_checks(&mut r, s, t, n, top, bounds);
    }

    r.check("E₂ by two routes", "quotient formula and page iteration give the same dim E₂", || {
        let iterated = e2_page_iteration(&cx)?;
        let mut w = Vec::new();
        for (p, it) in iterated.iter().enumerate() {
            let q = e2_quotient(&cx, p)?;
            if q != *it {
                w.push(format!("degree {p}: {q} vs {it}"));
            }
        }
        Ok(w)
    });

    r.check("holomorphic volume form", "∂̄Φ = 0 and J̄Φ = Φ", || canonical_volume_form(s).map(|_| Vec::new()));
    match hodge_data(s) {
        Ok(h) => {
            r.check("star squares to a sign", "∗_Φ² = (−1)^p", || {
                Ok(failures(0..=top, |&p| h.square_sign_holds(p), |p| format!("degree {p}")))
            });
            r.check("adjoint identity", "∂^† = −∗_Φ ∂ ∗_Φ and ∂_J^† = −∗_Φ ∂_J ∗_Φ", || {
                Ok(failures(
                    0..top,
                    |&p| h.adjoint_identity_holds(&s.del, p) && h.adjoint_identity_holds(&s.del_j, p),
                    |p| format!("degree {p}"),
                ))
            });
            r.check("star commutes with the Laplacian", "∗_Φ Δ_∂ = Δ_∂ ∗_Φ", || {
                Ok(failures(0..=top, |&p| h.commutes_with_laplacian(&s.del, p), |p| format!("degree {p}")))
            });
            r.check("norm of the standard form", "h(Ω_std, Ω_std) = n", || {
                let v = s.engine.vector(&standard_omega(s), 2)?;
                let norm: crate::GaussianRational = v.iter().map(|x| x * &x.conj()).sum();
                Ok(if norm == crate::GaussianRational::from_int(n as i64) { vec![] } else { vec![format!("{norm}")] })
            });
            if n == 2 {
                r.check("standard form is self-dual", "∗_Φ Ω_std = Ω_std", || {
                    let om = standard_omega(s);
                    let star = h.apply(s, &om)?;
                    Ok(if star == om { vec![] } else { vec![s.engine.describe(&star)] })
                });
            }
        }
        Err(e) => r.push("Hodge star", "the defining relation has a unique solution", Status::Fail, e.to_string()),
    }
    r.check("pairing is nondegenerate", "∫ α∧β∧Φ̄ pairs H^{p,0}_BC and H^{2n−p,0}_AE perfectly", || {
        let mut w = Vec::new();
        for p in 0..=top {
            let pr = pairing_matrix(s, p)?;
            if !pr.nondegenerate {
                w.push(format!("degree {p}: {}x{}", pr.h_bc, pr.h_ae_dual));
            }
        }
        Ok(w)
    });

    r.check("metric flags are monotone", "hyperkähler ⇒ HKT ⇒ strongly Gauduchon ⇒ Gauduchon", || {
        let c = classify_metric(s, &standard_omega(s))?;
        Ok(if c.flags_monotone() { vec![] } else { vec![format!("{c:?}")] })
    });
    r.check("standard form is Hermitian", "J̄Ω_std = Ω_std with positive Gram matrix", || {
        let c = classify_metric(s, &standard_omega(s))?;
        Ok(if c.hermitian { vec![] } else { vec![format!("minors {:?}", c.minors)] })
    });

    match jbar_decomposition(s) {
        Ok(d) if n == 2 => {
            r.push("pure and full", "H^{J̄,+} ∩ H^{J̄,−} = 0 and H^{J̄,+} + H^{J̄,−} = H^{2,0}_∂", Status::Pass, format!("{} + {}", d.plus, d.minus));
        }
        Ok(d) => r.not_applicable(
            "pure and full",
            "H^{J̄,+} ∩ H^{J̄,−} = 0 and H^{J̄,+} + H^{J̄,−} = H^{2,0}_∂",
            format!("n = {n}; intersection {}, complement {}", d.intersection, d.complement),
        ),
        Err(e) => r.push("pure and full", "H^{J̄,+} ∩ H^{J̄,−} = 0 and H^{J̄,+} + H^{J̄,−} = H^{2,0}_∂", Status::Fail, e.to_string()),
    }
    if n == 2 {
        r.check("self-dual splitting", "H^{2,0}_∂ = H^{Φ,+} ⊕ H^{Φ,−}", || sd_asd_decomposition(s).map(|_| Vec::new()));
    } else {
        r.not_applicable("self-dual splitting", "H^{2,0}_∂ = H^{Φ,+} ⊕ H^{Φ,−}", format!("n = {n}"));
    }

    SuiteReport { algebra: s.name.clone(), checks: r.checks }
}

fn table_checks(r: &mut Recorder, s: &Session, t: &CohomologyTable, n: usize, top: usize, bounds: &SearchBounds) {
    let rows = &t.rows;
    let at = |p: usize| rows.get(p);
    r.check("first exact sequence", "a − b + h_∂ − h_AE + c = 0", || {
        Ok(failures(rows, |x| x.a + x.h_del + x.c == x.b + x.h_ae, |x| format!("degree {}", x.p)))
    });
    r.check("second exact sequence", "d − h_BC + h_∂ − e + f = 0", || {
        Ok(failures(rows, |x| x.d + x.h_del + x.f == x.h_bc + x.e, |x| format!("degree {}", x.p)))
    });
    r.check("Varouchas symmetries", "b = d and c = e", || {
        Ok(failures(rows, |x| x.b == x.d && x.c == x.e, |x| format!("degree {}", x.p)))
    });
    r.check("Varouchas shifts", "e(p) = b(p+1) and c(p) = d(p+1)", || {
        Ok(failures(
            rows,
            |x| {
                let (b1, d1) = at(x.p + 1).map_or((0, 0), |y| (y.b, y.d));
                x.e == b1 && x.c == d1
            },
            |x| format!("degree {}", x.p),
        ))
    });
    r.check("Frölicher-type inequality", "h_BC + h_AE ≥ 2 h_∂ ≥ 2 dim E₂", || {
        Ok(failures(rows, |x| x.h_bc + x.h_ae >= 2 * x.h_del && x.h_del >= x.dim_e2, |x| format!("degree {}", x.p)))
    });
    r.check("non-HKT degree formula", "Δ^p = a + f + 2(h_∂ − dim E₂)", || {
        Ok(failures(
            rows,
            |x| x.delta == (x.a + x.f) as i64 + 2 * (x.h_del as i64 - x.dim_e2 as i64),
            |x| format!("degree {}: Δ = {}", x.p, x.delta),
        ))
    });
    r.check("∂∂_J-lemma criterion", "every B^{p,0} = 0 iff h_BC + h_AE = 2 dim E₂ in every degree", || {
        ddj_lemma_holds(t).map(|_| Vec::new())
    });
    r.check("SL(n,H) symmetry", "h_BC(p) = h_AE(2n−p) and h_∂(p) = h_∂(2n−p)", || {
        Ok(failures(
            rows,
            |x| x.h_bc == rows[top - x.p].h_ae && x.h_del == rows[top - x.p].h_del,
            |x| format!("degree {}", x.p),
        ))
    });
    r.check("parity in degree one", "h^{1,0}_BC and h^{1,0}_AE are even", || {
        let x = &rows[1];
        Ok(if x.h_bc % 2 == 0 && x.h_ae % 2 == 0 { vec![] } else { vec![format!("{} and {}", x.h_bc, x.h_ae)] })
    });
    let omega = standard_omega(s);
    match degree_map_on_aeppli_basis(s, &omega) {
        Ok(values) => r.check("degree map", "deg vanishes on H^{1,0}_∂ and h^{1,0}_AE ≤ h^{1,0}_∂ + 1", || {
            let h = rows[1].h_del;
            let mut w: Vec<String> = values.iter().take(h).filter(|(_, v)| !num_traits::Zero::is_zero(v)).map(|(a, v)| format!("deg({a}) = {v}")).collect();
            if rows[1].h_ae > h + 1 {
                w.push(format!("h_AE = {} > {}", rows[1].h_ae, h + 1));
            }
            Ok(w)
        }),
        Err(crate::Error::NotGauduchon) => {
            r.not_applicable("degree map", "deg vanishes on H^{1,0}_∂", "Ω_std is not quaternionic Gauduchon".into())
        }
        Err(crate::Error::NotSL2(n)) => r.not_applicable("degree map", "deg vanishes on H^{1,0}_∂", format!("n = {n}")),
        Err(e) => r.push("degree map", "deg vanishes on H^{1,0}_∂", Status::Fail, e.to_string()),
    }

    if n != 2 {
        for name in ["Δ in degrees one and three", "Δ² is 0 or 2", "degeneration at the first page", "three HKT criteria agree", "strongly Gauduchon iff HKT"] {
            r.not_applicable(name, "holds on 8-dimensional algebras", format!("n = {n}"));
        }
        return;
    }
    r.check("Δ in degrees one and three", "Δ¹ = Δ³ = 0", || {
        Ok(if rows[1].delta == 0 && rows[3].delta == 0 { vec![] } else { vec![format!("{} and {}", rows[1].delta, rows[3].delta)] })
    });
    r.check("Δ² is 0 or 2", "Δ² ∈ {0, 2}", || non_hkt_degrees(t, n).map(|_| Vec::new()));
    r.check("degeneration at the first page", "E₁ ≅ E₂", || {
        Ok(failures(rows, |x| x.dim_e1 == x.dim_e2, |x| format!("degree {}: {} vs {}", x.p, x.dim_e1, x.dim_e2)))
    });
    r.check("three HKT criteria agree", "Δ² = 0 iff h^{1,0}_∂ even iff an invariant HKT form is found", || {
        let by_delta = rows[2].delta == 0;
        let by_parity = rows[1].h_del % 2 == 0;
        let search = positive_search(s, &hkt_search_space(s)?, bounds)?;
        let found = search.certificate.is_some();
        Ok(if by_delta == by_parity && by_parity == found {
            vec![]
        } else {
            vec![format!("Δ² = 0: {by_delta}, h even: {by_parity}, certificate: {found}")]
        })
    });
    r.check("strongly Gauduchon iff HKT", "an invariant strongly Gauduchon form exists only when Δ² = 0", || {
        sg_existence(s, t, bounds).map(|_| Vec::new())
    });
}
