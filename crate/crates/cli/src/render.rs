//! Plain-text rendering of the structured results. Every number shown here
//! comes from the same value that `--format json` prints.

use std::fmt::Write;

use quatcohom::metric::{ExistenceVerdict, MetricCandidate, Method, Question};
use quatcohom::report::ReportDocument;
use quatcohom::sl::{DecompositionReport, PairingReport};
use quatcohom::suite::{Status, SuiteReport};
use quatcohom::{CohomologyTable, ValidationReport};

/// A boxed grid in the style `| (p,0) || h | h |`, with a double rule under
/// the header and after the first column.
fn grid(header: &[&str], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let width: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).chain([header[c].chars().count()]).max().unwrap_or(0))
        .collect();
    let line = |cells: &[String]| -> String {
        let mut s = String::from("|");
        for (c, cell) in cells.iter().enumerate() {
            let pad = width[c] - cell.chars().count();
            let _ = write!(s, " {}{}{} |", " ".repeat(pad / 2), cell, " ".repeat(pad - pad / 2));
            if c == 0 {
                s.push('|');
            }
        }
        s.push('\n');
        s
    };
    let rule = |ch: char| -> String {
        let mut s = String::from("+");
        for (c, w) in width.iter().enumerate() {
            s.push_str(&ch.to_string().repeat(w + 2));
            s.push('+');
            if c == 0 {
                s.push('+');
            }
        }
        s.push('\n');
        s
    };
    let mut out = rule('-');
    out.push_str(&line(&header.iter().map(|h| h.to_string()).collect::<Vec<_>>()));
    out.push_str(&rule('='));
    for r in rows {
        out.push_str(&line(r));
        out.push_str(&rule('-'));
    }
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// The two tables of the worked examples: rows `(1,0)` to `(2n−1,0)`, since
/// the end degrees are always one-dimensional.
pub fn cohomology_tables(t: &CohomologyTable) -> String {
    let inner = &t.rows[1..t.rows.len() - 1];
    let label = |p: usize| format!("({p},0)");
    let dims: Vec<Vec<String>> = inner
        .iter()
        .map(|r| vec![label(r.p), r.h_del.to_string(), r.h_del_j.to_string(), r.h_bc.to_string(), r.h_ae.to_string()])
        .collect();
    let varouchas: Vec<Vec<String>> = inner
        .iter()
        .map(|r| {
            let mut row = vec![label(r.p)];
            row.extend([r.a, r.b, r.c, r.d, r.e, r.f].iter().map(|x| x.to_string()));
            row
        })
        .collect();
    let pages: Vec<Vec<String>> = t
        .rows
        .iter()
        .map(|r| vec![label(r.p), r.dim_e1.to_string(), r.dim_e2.to_string(), r.delta.to_string()])
        .collect();
    let mut out = grid(&["(p,0)", "h_∂", "h_∂J", "h_BC", "h_AE"], &dims);
    out.push('\n');
    out.push_str(&grid(&["(p,0)", "a", "b", "c", "d", "e", "f"], &varouchas));
    out.push('\n');
    out.push_str(&grid(&["(p,0)", "dim E_1", "dim E_2", "Δ"], &pages));
    out
}

fn metric_lines(out: &mut String, indent: &str, m: &MetricCandidate) {
    let minors: Vec<String> = m.minors.iter().map(|x| x.to_string()).collect();
    let _ = writeln!(out, "{indent}Ω = {}", m.omega);
    let _ = writeln!(out, "{indent}leading minors of the Gram matrix: {}", minors.join(", "));
    let _ = writeln!(
        out,
        "{indent}hermitian {}, HKT {}, Gauduchon {}, strongly Gauduchon {}, hyperkähler {}",
        yes_no(m.hermitian),
        yes_no(m.hkt),
        yes_no(m.gauduchon),
        yes_no(m.strongly_gauduchon),
        yes_no(m.hyperkahler)
    );
}

fn method(m: Method) -> &'static str {
    match m {
        Method::Delta2Criterion => "the Δ² criterion",
        Method::EvenH10Criterion => "the parity of h^{1,0}_∂",
        Method::ExplicitCertificate => "an explicit certificate",
    }
}

pub fn existence(verdicts: &[ExistenceVerdict]) -> String {
    let mut out = String::new();
    for v in verdicts {
        let what = match v.question {
            Question::Hkt => "HKT",
            Question::StronglyGauduchon => "strongly Gauduchon",
        };
        let _ = writeln!(out, "{what}: {}", v.answer_word());
        let _ = writeln!(out, "  Δ² = {}, h^{{1,0}}_∂ = {}, decided by {}", v.delta2, v.h10_del, method(v.method));
        if let Some(s) = &v.search {
            let _ = writeln!(
                out,
                "  search: dimension {}, {} of {} grid points{}{}",
                s.dimension,
                s.probes,
                s.grid_size,
                if s.exhaustive { "" } else { " (capped)" },
                if s.infeasible { ", no positive element possible" } else { "" }
            );
        }
        if let Some(c) = &v.certificate {
            out.push_str("  certificate:\n");
            metric_lines(&mut out, "    ", c);
        }
    }
    out
}

pub fn decomposition(d: &DecompositionReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "h^{{2,0}}_∂ = {}", d.h_del);
    let _ = writeln!(out, "dim H^{{J̄,+}} = {}, dim H^{{J̄,−}} = {}", d.plus, d.minus);
    let _ = writeln!(out, "intersection {}, sum {}, complement {}", d.intersection, d.sum, d.complement);
    let _ = writeln!(out, "pure {}, full {}", yes_no(d.pure), yes_no(d.full));
    let _ = writeln!(out, "H^{{J̄,+}} spanned by: {}", d.plus_representatives.join(", "));
    let _ = writeln!(out, "H^{{J̄,−}} spanned by: {}", d.minus_representatives.join(", "));
    if let Some(s) = &d.sd_asd {
        let _ = writeln!(
            out,
            "self-dual {}, anti-self-dual {}, direct {}, exhaustive {}",
            s.self_dual,
            s.anti_self_dual,
            yes_no(s.direct),
            yes_no(s.exhausts)
        );
    }
    out
}

pub fn pairing(p: &PairingReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "H^{{{},0}}_BC × H^{{2n−{},0}}_AE: {} × {}", p.p, p.p, p.h_bc, p.h_ae_dual);
    for (rep, row) in p.bc_representatives.iter().zip(&p.matrix) {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "  [{}]  {}", cells.join(", "), rep);
    }
    let _ = writeln!(out, "Aeppli representatives: {}", p.ae_representatives.join(", "));
    let _ = writeln!(out, "nondegenerate: {}", yes_no(p.nondegenerate));
    out
}

pub fn suite(s: &SuiteReport) -> String {
    let mut out = String::new();
    for c in &s.checks {
        let status = match c.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::NotApplicable => "n/a ",
        };
        let _ = write!(out, "{status}  {:<34} {}", c.name, c.statement);
        if !c.detail.is_empty() {
            let _ = write!(out, "  [{}]", c.detail);
        }
        out.push('\n');
    }
    let failed = s.failures().count();
    let _ = writeln!(out, "{}: {} checks, {} failed", s.algebra, s.checks.len(), failed);
    out
}

pub fn validation(v: &ValidationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Jacobi identity: {}", yes_no(v.jacobi_ok));
    let step = v.nilpotency_step.map_or("not nilpotent".to_string(), |s| format!("step {s}"));
    let _ = writeln!(out, "nilpotent: {} ({step})", yes_no(v.nilpotent_ok));
    if let Some(q) = v.quaternionic_relations_ok {
        let _ = writeln!(out, "quaternionic relations: {}", yes_no(q));
    }
    for (name, ok) in &v.integrability {
        let _ = writeln!(out, "{name} integrable: {}", yes_no(*ok));
    }
    for m in &v.messages {
        let _ = writeln!(out, "  {m}");
    }
    let _ = writeln!(out, "{}", if v.is_valid() { "valid" } else { "invalid" });
    out
}

pub fn report(r: &ReportDocument) -> String {
    let a = &r.algebra;
    let v = &r.verdicts;
    let mut out = String::new();
    let _ = writeln!(out, "{}: real dimension {}, n = {}", a.name, a.dimension, a.quaternionic_dimension);
    for (k, x) in &a.parameters {
        let _ = writeln!(out, "  {k} = {x}");
    }
    for eq in &a.structure {
        let _ = writeln!(out, "  {eq}");
    }
    for c in &a.coframe {
        let _ = writeln!(out, "  {} = {}", c.name, c.expression);
    }
    out.push('\n');
    out.push_str(&cohomology_tables(&r.table));
    out.push('\n');
    out.push_str(&decomposition(&r.decomposition));
    out.push('\n');
    let _ = writeln!(out, "Frölicher degenerates at E_1: {}", yes_no(v.degenerate_at_first_page));
    let _ = writeln!(out, "∂∂_J-lemma: {}", yes_no(v.ddj_lemma));
    let _ = writeln!(out, "pure-and-full: {}", yes_no(v.pure && v.full));
    let verdicts: Vec<ExistenceVerdict> = v.hkt.iter().chain(&v.strongly_gauduchon).cloned().collect();
    out.push_str(&existence(&verdicts));
    out.push_str("standard metric:\n");
    metric_lines(&mut out, "  ", &v.standard_metric);
    if let Some(values) = &v.degree_map {
        out.push_str("degree map on H^{1,0}_AE:\n");
        for d in values {
            let _ = writeln!(out, "  deg({}) = {}", d.representative, d.value);
        }
    }
    out.push('\n');
    out.push_str(&suite(&r.suite));
    out
}
