use num_traits::Zero;
use quatcohom::algebra::{build_coframe, validate_hypercomplex, validate_lie_algebra, AlgebraSpec};
use quatcohom::arith::{rational, Bindings};
use quatcohom::io::parse_spec;
use quatcohom::{corpus, Error, GaussianRational as GR};

fn t(num: i64, den: i64) -> Bindings {
    [("t".to_string(), rational(num, den))].into_iter().collect()
}

fn modified(text: &str, edit: impl FnOnce(&mut serde_json::Value)) -> AlgebraSpec {
    let mut v: serde_json::Value = serde_json::from_str(text).unwrap();
    edit(&mut v);
    parse_spec(&v.to_string()).unwrap()
}

/// `a e^j - i b e^k` style vector from (index, coefficient) pairs, 1-based.
fn vector(dim: usize, entries: &[(usize, GR)]) -> Vec<GR> {
    let mut v = vec![GR::zero(); dim];
    for (k, c) in entries {
        v[k - 1] = c.clone();
    }
    v
}

#[test]
fn example1_is_a_two_step_nilpotent_hypercomplex_algebra() {
    let alg = corpus::example1().instantiate(&Bindings::new()).unwrap();
    let r = validate_hypercomplex(&alg);
    assert!(r.jacobi_ok && r.nilpotent_ok);
    assert_eq!(r.nilpotency_step, Some(2));
    assert_eq!(r.quaternionic_relations_ok, Some(true));
    assert!(r.integrability.values().all(|&ok| ok));
    assert!(r.messages.is_empty());
}

#[test]
fn abelian_has_step_one() {
    let alg = corpus::abelian().instantiate(&Bindings::new()).unwrap();
    let r = validate_lie_algebra(&alg);
    assert_eq!(r.nilpotency_step, Some(1));
    assert!(validate_hypercomplex(&alg).is_valid());
}

#[test]
fn example3_validates() {
    let alg = corpus::example3().instantiate(&Bindings::new()).unwrap();
    let r = validate_hypercomplex(&alg);
    assert!(r.is_valid(), "{:?}", r.messages);
    assert_eq!(r.nilpotency_step, Some(2));
}

#[test]
fn rescaled_structure_constant_still_satisfies_jacobi() {
    let spec = modified(corpus::EXAMPLE1, |v| v["structure"][0]["terms"][0]["coeff"] = 2.into());
    let alg = spec.instantiate(&Bindings::new()).unwrap();
    assert!(validate_lie_algebra(&alg).jacobi_ok);
}

#[test]
fn broken_jacobi_is_detected() {
    // de3 = e12, de4 = e13, de5 = e34: d(de5) = de3∧e4 − e3∧de4 = e124 ≠ 0
    let spec = modified(corpus::ABELIAN, |v| {
        v["structure"] = serde_json::json!([
            {"k": 3, "terms": [{"i": 1, "j": 2, "coeff": 1}]},
            {"k": 4, "terms": [{"i": 1, "j": 3, "coeff": 1}]},
            {"k": 5, "terms": [{"i": 3, "j": 4, "coeff": 1}]}
        ]);
    });
    let alg = spec.instantiate(&Bindings::new()).unwrap();
    let r = validate_lie_algebra(&alg);
    assert!(!r.jacobi_ok);
    assert!(matches!(r.check(), Err(Error::InvalidLieAlgebra(_))));
}

#[test]
fn wrong_sign_in_j_breaks_quaternionic_relations() {
    // J e^2 = +e^4 instead of −e^4
    let spec = modified(corpus::EXAMPLE1, |v| v["J"][1][3] = 1.into());
    let alg = spec.instantiate(&Bindings::new()).unwrap();
    let r = validate_hypercomplex(&alg);
    assert_eq!(r.quaternionic_relations_ok, Some(false));
    assert!(matches!(r.check(), Err(Error::QuaternionicRelationFailure(_))));
}

#[test]
fn non_integrable_structure_is_named() {
    // e^13 − e^24 = Re(φ¹∧φ²) has a (0,2) part for I
    let spec = modified(corpus::ABELIAN, |v| {
        v["structure"] = serde_json::json!([
            {"k": 5, "terms": [{"i": 1, "j": 3, "coeff": 1}, {"i": 2, "j": 4, "coeff": -1}]}
        ]);
    });
    let alg = spec.instantiate(&Bindings::new()).unwrap();
    let r = validate_hypercomplex(&alg);
    assert!(r.jacobi_ok);
    assert_eq!(r.integrability.get("I"), Some(&false));
    assert!(matches!(r.check(), Err(Error::IntegrabilityFailure { .. })));
}

#[test]
fn example1_coframe_matches_listed_basis() {
    let alg = corpus::example1().instantiate(&Bindings::new()).unwrap();
    let cf = build_coframe(&alg).unwrap();
    let mi = -GR::i();
    for (a, (x, y)) in [(1, 2), (3, 4), (5, 6), (7, 8)].into_iter().enumerate() {
        assert_eq!(cf.phi()[a], vector(8, &[(x, GR::from_int(1)), (y, mi.clone())]));
    }
}

#[test]
fn example2_first_coframe_form() {
    let alg = corpus::example2().instantiate(&t(1, 3)).unwrap();
    assert!(validate_hypercomplex(&alg).is_valid());
    let cf = build_coframe(&alg).unwrap();
    // (t−1)/t at t = 1/3 is −2, so φ¹ = e¹ + 2i e²
    assert_eq!(cf.phi()[0], vector(8, &[(1, GR::from_int(1)), (2, GR::complex(0, 1, 2, 1))]));
}

#[test]
fn coframe_pairing_and_quaternionic_square() {
    for (text, b) in [(corpus::EXAMPLE1, Bindings::new()), (corpus::EXAMPLE2, t(3, 4)), (corpus::EXAMPLE3, Bindings::new())] {
        let alg = parse_spec(text).unwrap().instantiate(&b).unwrap();
        let cf = build_coframe(&alg).unwrap();
        let jbar = |v: &[GR]| alg.j.apply(&v.iter().map(GR::conj).collect::<Vec<_>>());
        for k in 0..cf.len() / 2 {
            assert_eq!(jbar(&cf.phi()[2 * k]), cf.phi()[2 * k + 1]);
        }
        for v in cf.phi() {
            let back: Vec<GR> = jbar(&jbar(v)).into_iter().map(|x| -x).collect();
            assert_eq!(&back, v);
            assert_eq!(alg.i.apply(v), v.iter().map(|x| x * &GR::i()).collect::<Vec<_>>());
        }
        let minus = -&quatcohom::Matrix::identity(alg.dim);
        assert_eq!(&alg.k * &alg.k, minus);
        assert_eq!(&alg.i * &alg.k, -&(&alg.k * &alg.i));
    }
}

#[test]
fn unbound_and_pole_parameters() {
    assert!(matches!(corpus::example2().instantiate(&Bindings::new()), Err(Error::UnboundParameter(p)) if p == "t"));
    assert!(matches!(corpus::example2().instantiate(&t(1, 1)), Err(Error::PoleAtBinding { .. })));
}
