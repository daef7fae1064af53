//! One line per acceptance criterion, driven through the binary where the
//! criterion is about command output and through the library for the
//! randomized corpora.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use quatcohom::arith::rational;
use quatcohom::cohomology::random::random_double_complex;
use quatcohom::cohomology::{compute_table, ddj_lemma_holds, e2_page_iteration, e2_quotient};
use quatcohom::metric::SearchBounds;
use quatcohom::report::ReportDocument;
use quatcohom::suite::run_property_suite;
use quatcohom::variants::{random_bindings, random_quaternionic_change};
use quatcohom::{corpus, Bindings, CohomologyTable, DoubleComplex, Session};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn corpus_path(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/corpus").join(name);
    p.to_str().unwrap().to_string()
}

/// Runs the binary, returning stdout and the wall time.
fn cli(args: &[&str]) -> Result<(String, Duration), String> {
    let start = Instant::now();
    let o = Command::new(env!("CARGO_BIN_EXE_quatcohom")).args(args).output().map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if !o.status.success() {
        return Err(format!("`{}` exited {:?}: {}", args.join(" "), o.status.code(), String::from_utf8_lossy(&o.stderr)));
    }
    Ok((String::from_utf8(o.stdout).map_err(|e| e.to_string())?, elapsed))
}

fn report_json(file: &str, t: Option<&str>) -> Result<(ReportDocument, Duration), String> {
    let path = corpus_path(file);
    let param = t.map(|t| format!("t={t}"));
    let mut args = vec!["report", path.as_str(), "--format", "json"];
    if let Some(p) = &param {
        args.extend(["--param", p.as_str()]);
    }
    let (out, elapsed) = cli(&args)?;
    let doc = serde_json::from_str(&out).map_err(|e| format!("unreadable report for {file}: {e}"))?;
    Ok((doc, elapsed))
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < limit, || format!("{what} took {elapsed:?}, limit {limit:?}"))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn example1_tables() -> Outcome {
    let (doc, elapsed) = report_json("example1.json", None)?;
    let rows: Vec<_> = doc.table.rows[1..4].iter().map(|r| (r.h_del, r.h_del_j, r.h_bc, r.h_ae)).collect();
    ensure(rows == [(3, 3, 2, 4), (4, 4, 5, 5), (3, 3, 4, 2)], || format!("dimensions {rows:?}"))?;
    let varouchas: Vec<_> = doc.table.rows[1..4].iter().map(|r| [r.a, r.b, r.c, r.d, r.e, r.f]).collect();
    ensure(varouchas == [[0, 0, 1, 0, 1, 0], [1, 1, 1, 1, 1, 1], [0, 1, 0, 1, 0, 0]], || format!("a..f {varouchas:?}"))?;
    let (table, _) = cli(&["report", &corpus_path("example1.json"), "--format", "table"])?;
    ensure(table.contains("| (2,0) ||  4  |  4   |  5   |  5   |"), || "table rendering differs".into())?;
    within(elapsed, Duration::from_secs(1), "report example1")?;
    Ok(format!("both tables exact, {elapsed:.0?}"))
}

fn example1_verdicts() -> Outcome {
    let (doc, _) = report_json("example1.json", None)?;
    let v = &doc.verdicts;
    let hkt = v.hkt.as_ref().ok_or("no HKT verdict")?;
    let sg = v.strongly_gauduchon.as_ref().ok_or("no strongly Gauduchon verdict")?;
    let d = &doc.decomposition;
    let got = (doc.table.row(2).delta, hkt.answer_word(), sg.answer_word(), v.degenerate_at_first_page, d.pure_and_full, d.plus, d.minus);
    ensure(got == (2, "no", "no", true, true, 2, 2), || format!("(Δ², HKT, SG, E1, pure-and-full, +, −) = {got:?}"))?;
    Ok("Δ² = 2, HKT no, SG no, E₁ = E₂, pure-and-full 2 + 2".into())
}

fn example2_family() -> Outcome {
    let (reference, _) = report_json("example1.json", None)?;
    let reference = reference.invariants();
    let mut slowest = Duration::ZERO;
    for t in ["1/3", "1/4", "3/4"] {
        let (doc, elapsed) = report_json("example2.json", Some(t))?;
        ensure(doc.invariants() == reference, || format!("t = {t} differs from example 1"))?;
        slowest = slowest.max(elapsed);
    }
    let (half, elapsed) = report_json("example2.json", Some("1/2"))?;
    slowest = slowest.max(elapsed);
    for r in &half.table.rows {
        let c = binomial(4, r.p);
        ensure((r.h_del, r.h_del_j, r.h_bc, r.h_ae) == (c, c, c, c), || format!("t = 1/2, p = {}: {r:?}", r.p))?;
        ensure([r.a, r.b, r.c, r.d, r.e, r.f] == [0; 6] && r.delta == 0, || format!("t = 1/2, p = {}: {r:?}", r.p))?;
    }
    let hkt = half.verdicts.hkt.as_ref().ok_or("no HKT verdict")?;
    let cert = hkt.certificate.as_ref().ok_or("no certificate at t = 1/2")?;
    let positive = cert.minors.iter().all(|m| m.is_real() && m.re() > &num_traits::Zero::zero());
    ensure(hkt.answer && cert.hkt && cert.hermitian && positive, || format!("certificate {cert:?}"))?;
    within(slowest, Duration::from_secs(1), "slowest example 2 instantiation")?;
    Ok(format!("three values match example 1, t = 1/2 certified by {}, slowest {slowest:.0?}", cert.omega))
}

fn example3() -> Outcome {
    let (doc, elapsed) = report_json("example3.json", None)?;
    let d = &doc.decomposition;
    let got = (d.pure, d.full, d.intersection, d.complement, doc.table.row(2).h_del, doc.verdicts.degenerate_at_first_page);
    ensure(got == (false, false, 2, 2, 9, true), || format!("(pure, full, ∩, complement, h^{{2,0}}, E1) = {got:?}"))?;
    within(elapsed, Duration::from_secs(5), "report example3")?;
    Ok(format!("not pure (2), not full (2), h^{{2,0}}_∂ = 9, E₁ = E₂, {elapsed:.0?}"))
}

/// Corpus sessions plus at least twenty randomized variants that validate.
fn full_corpus() -> Vec<Session> {
    let t = |p, q| -> Bindings { [("t".to_string(), rational(p, q))].into_iter().collect() };
    let mut out = vec![
        Session::new(&corpus::example1(), &Bindings::new()).unwrap(),
        Session::new(&corpus::example2(), &t(1, 2)).unwrap(),
        Session::new(&corpus::example2(), &t(1, 3)).unwrap(),
        Session::new(&corpus::example3(), &Bindings::new()).unwrap(),
        Session::new(&corpus::abelian(), &Bindings::new()).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..8 {
        let (_, alg) = random_bindings(&corpus::example2(), &mut rng).unwrap();
        out.push(Session::from_algebra(alg).unwrap());
    }
    for spec in [corpus::example1(), corpus::example3(), corpus::abelian()] {
        let base = Session::new(&spec, &Bindings::new()).unwrap();
        for _ in 0..4 {
            out.push(Session::from_algebra(random_quaternionic_change(&base.algebra, &mut rng).unwrap()).unwrap());
        }
    }
    out
}

fn property_suite(corpus: &[Session]) -> Outcome {
    let start = Instant::now();
    for (file, t) in [("example1.json", None), ("example2.json", Some("t=1/2")), ("example3.json", None), ("abelian.json", None)] {
        let path = corpus_path(file);
        let mut args = vec!["suite", path.as_str()];
        if let Some(t) = t {
            args.extend(["--param", t]);
        }
        cli(&args)?;
    }
    let mut checks = 0;
    for s in corpus {
        let suite = run_property_suite(s, &SearchBounds::default());
        let failed: Vec<_> = suite.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect();
        ensure(failed.is_empty(), || format!("{}: {failed:?}", s.name))?;
        checks += suite.checks.len();
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(30), "property suite")?;
    Ok(format!("{} algebras ({} randomized), {checks} checks, {elapsed:.1?}", corpus.len(), corpus.len() - 5))
}

fn e2_mismatches(cx: &DoubleComplex) -> Result<usize, String> {
    let iterated = e2_page_iteration(cx).map_err(|e| e.to_string())?;
    let mut bad = 0;
    for (p, dim) in iterated.iter().enumerate() {
        if e2_quotient(cx, p).map_err(|e| e.to_string())? != *dim {
            bad += 1;
        }
    }
    Ok(bad)
}

fn dual_e2(corpus: &[Session]) -> Outcome {
    let mut bad = 0;
    for s in corpus {
        bad += e2_mismatches(&s.double_complex())?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..100 {
        let top = rng.gen_range(1..=5);
        bad += e2_mismatches(&random_double_complex(top, &mut rng))?;
    }
    ensure(bad == 0, || format!("{bad} mismatches"))?;
    Ok(format!("{} corpus algebras and 100 random complexes, 0 mismatches", corpus.len()))
}

fn lemma_equivalence(corpus: &[Session]) -> Outcome {
    let mut mismatches = Vec::new();
    let (mut holds, mut fails) = (0, 0);
    for s in corpus {
        let table: CohomologyTable = compute_table(&s.double_complex()).map_err(|e| e.to_string())?;
        let lemma = match ddj_lemma_holds(&table) {
            Ok(l) => l,
            Err(e) => {
                mismatches.push(format!("{}: {e}", s.name));
                continue;
            }
        };
        let equality = table.rows.iter().all(|r| r.h_bc + r.h_ae == 2 * r.dim_e2);
        if lemma != equality {
            mismatches.push(s.name.clone());
        }
        if lemma {
            holds += 1;
        } else {
            fails += 1;
        }
    }
    ensure(mismatches.is_empty(), || format!("mismatches: {mismatches:?}"))?;
    Ok(format!("{} algebras ({holds} satisfy the lemma, {fails} do not), 0 mismatches", corpus.len()))
}

#[test]
fn acceptance() {
    let corpus = full_corpus();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("example 1 golden tables", Box::new(example1_tables)),
        ("example 1 verdicts", Box::new(example1_verdicts)),
        ("example 2 family", Box::new(example2_family)),
        ("example 3", Box::new(example3)),
        ("property suite on the corpus", Box::new(|| property_suite(&corpus))),
        ("dual-oracle E2", Box::new(|| dual_e2(&corpus))),
        ("ddJ-lemma equivalence", Box::new(|| lemma_equivalence(&corpus))),
    ];
    let mut failed = Vec::new();
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", k + 1),
            Err(why) => {
                println!("criterion {}: FAIL  {name}: {why}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
