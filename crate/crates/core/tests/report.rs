use quatcohom::arith::{rational, Bindings};
use quatcohom::metric::SearchBounds;
use quatcohom::report::{build_report, ReportDocument, ReportInvariants};
use quatcohom::suite::Status;
use quatcohom::variants::{random_bindings, random_quaternionic_change};
use quatcohom::{corpus, AlgebraSpec, Session};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn report(spec: &AlgebraSpec, t: Option<(i64, i64)>) -> ReportDocument {
    let b: Bindings = t.map(|(p, q)| ("t".to_string(), rational(p, q))).into_iter().collect();
    build_report(&Session::new(spec, &b).unwrap(), &SearchBounds::default()).unwrap()
}

fn assert_suite_passes(r: &ReportDocument) {
    let failures: Vec<_> = r.suite.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect();
    assert!(failures.is_empty(), "{}: {failures:?}", r.algebra.name);
}

/// The parts of the invariants that do not depend on the chosen coframe.
/// The `J̄` and `∗` splittings use linear parts in the coframe, so only
/// `h^{2,0}_∂` survives; for `n = 2` pure-and-full is still enforced by the
/// suite.
fn frame_free(i: &ReportInvariants) -> ReportInvariants {
    let mut i = i.clone();
    i.decomposition = [i.decomposition[0], 0, 0, 0, 0, 0];
    i.sd_asd = None;
    i
}

#[test]
fn report_roundtrips_through_json() {
    let r = report(&corpus::example1(), None);
    let json = serde_json::to_string(&r).unwrap();
    let back: ReportDocument = serde_json::from_str(&json).unwrap();
    assert_eq!(back, r);
}

#[test]
fn reports_are_deterministic() {
    let a = report(&corpus::example2(), Some((1, 2)));
    let b = report(&corpus::example2(), Some((1, 2)));
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn example1_verdicts() {
    let r = report(&corpus::example1(), None);
    let v = &r.verdicts;
    assert_eq!(r.table.row(2).delta, 2);
    assert!(v.degenerate_at_first_page && !v.ddj_lemma && v.pure && v.full);
    assert_eq!(v.hkt.as_ref().unwrap().answer_word(), "no");
    assert_eq!(v.strongly_gauduchon.as_ref().unwrap().answer_word(), "no");
    assert_eq!((r.decomposition.plus, r.decomposition.minus), (2, 2));
    assert_eq!(r.algebra.nilpotency_step, Some(2));
    assert_suite_passes(&r);
}

#[test]
fn example2_reports_match_example1_away_from_one_half() {
    let reference = report(&corpus::example1(), None).invariants();
    for (p, q) in [(1, 3), (1, 4), (3, 4)] {
        let r = report(&corpus::example2(), Some((p, q)));
        assert_eq!(r.invariants(), reference, "t = {p}/{q}");
    }
    let half = report(&corpus::example2(), Some((1, 2)));
    assert_ne!(half.invariants(), reference);
    assert!(half.verdicts.hkt.as_ref().unwrap().certificate.is_some());
    assert_suite_passes(&half);
}

#[test]
fn corpus_passes_the_property_suite() {
    for spec in [corpus::example1(), corpus::example3(), corpus::abelian()] {
        let r = report(&spec, None);
        assert_suite_passes(&r);
        let applicable = r.suite.checks.iter().filter(|c| c.status == Status::Pass).count();
        assert!(applicable >= 20, "{} ran only {applicable} checks", r.algebra.name);
    }
}

#[test]
fn randomized_variants_pass_and_keep_their_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let bounds = SearchBounds::default();
    let mut count = 0;
    let reference = report(&corpus::example1(), None).invariants();
    let hkt_point = report(&corpus::example2(), Some((1, 2))).invariants();
    for _ in 0..8 {
        let (b, alg) = random_bindings(&corpus::example2(), &mut rng).unwrap();
        let r = build_report(&Session::from_algebra(alg).unwrap(), &bounds).unwrap();
        assert_suite_passes(&r);
        let expected = if b["t"] == rational(1, 2) { &hkt_point } else { &reference };
        assert_eq!(&r.invariants(), expected, "t = {:?}", b["t"]);
        count += 1;
    }
    for spec in [corpus::example1(), corpus::example3(), corpus::abelian()] {
        let base = Session::new(&spec, &Bindings::new()).unwrap();
        let expected = frame_free(&build_report(&base, &bounds).unwrap().invariants());
        for _ in 0..4 {
            let alg = random_quaternionic_change(&base.algebra, &mut rng).unwrap();
            let r = build_report(&Session::from_algebra(alg).unwrap(), &bounds).unwrap();
            assert_suite_passes(&r);
            assert_eq!(frame_free(&r.invariants()), expected, "{}", r.algebra.name);
            count += 1;
        }
    }
    assert!(count >= 20);
}
