use num_traits::{One, Zero};
use quatcohom::arith::{rational, Bindings};
use quatcohom::sl::*;
use quatcohom::{corpus, AlgebraSpec, Error, GaussianRational as GR, Session};

fn session(spec: AlgebraSpec) -> Session {
    Session::new(&spec, &Bindings::new()).unwrap()
}

fn corpus_sessions() -> Vec<Session> {
    let t: Bindings = [("t".to_string(), rational(1, 3))].into_iter().collect();
    vec![
        session(corpus::example1()),
        Session::new(&corpus::example2(), &t).unwrap(),
        session(corpus::example3()),
        session(corpus::abelian()),
    ]
}

#[test]
fn volume_form_is_holomorphic_real_and_normalized() {
    for s in corpus_sessions() {
        let v = canonical_volume_form(&s).unwrap();
        assert_eq!(v.normalization.clone(), integrate(&s, &v.phi.wedge(&s.engine.conj(&v.phi))));
        assert!(!v.normalization.is_zero());
        assert_eq!(top_coefficient(&s, &v.phi), GR::one());
    }
}

#[test]
fn hodge_star_on_example1() {
    let s = session(corpus::example1());
    let e = &s.engine;
    let h = hodge_data(&s).unwrap();
    let one = quatcohom::Form::one(e.gens());
    assert_eq!(h.apply(&s, &one).unwrap(), e.phis(&[1, 2, 3, 4]));
    assert_eq!(h.apply(&s, &e.phis(&[1, 2, 3, 4])).unwrap(), one);
    let omega = standard_omega(&s);
    assert_eq!(h.apply(&s, &omega).unwrap(), omega);
    // antilinear
    let i = GR::complex(0, 1, 1, 1);
    assert_eq!(h.apply(&s, &e.phis(&[1]).scale(&i)).unwrap(), h.apply(&s, &e.phis(&[1])).unwrap().scale(&-&i));
}

#[test]
fn star_identities_on_the_corpus() {
    for s in corpus_sessions() {
        let h = hodge_data(&s).unwrap();
        let top = s.engine.holo();
        for p in 0..=top {
            assert!(h.square_sign_holds(p), "{} ∗² in degree {p}", s.name);
            assert!(h.commutes_with_laplacian(&s.del, p), "{} Laplacian in degree {p}", s.name);
            if p < top {
                assert!(h.adjoint_identity_holds(&s.del, p), "{} ∂ adjoint in degree {p}", s.name);
                assert!(h.adjoint_identity_holds(&s.del_j, p), "{} ∂_J adjoint in degree {p}", s.name);
            }
        }
    }
}

#[test]
fn example1_pairings() {
    let s = session(corpus::example1());
    let dims: Vec<_> = (0..=4).map(|p| pairing_matrix(&s, p).unwrap()).map(|r| (r.h_bc, r.h_ae_dual, r.nondegenerate)).collect();
    assert_eq!(dims, vec![(1, 1, true), (2, 2, true), (5, 5, true), (4, 4, true), (1, 1, true)]);
    assert_eq!(pairing_matrix(&s, 0).unwrap().matrix, vec![vec![GR::one()]]);
    assert!(pairing_matrix(&s, 5).is_err());
}

#[test]
fn pairings_nondegenerate_on_the_corpus() {
    for s in corpus_sessions() {
        for p in 0..=s.engine.holo() {
            assert!(pairing_matrix(&s, p).unwrap().nondegenerate, "{} degree {p}", s.name);
        }
    }
}

#[test]
fn example1_is_pure_and_full() {
    let s = session(corpus::example1());
    let r = jbar_decomposition(&s).unwrap();
    assert_eq!((r.h_del, r.plus, r.minus, r.intersection, r.complement), (4, 2, 2, 0, 0));
    assert!(r.pure_and_full);
    let sd = r.sd_asd.unwrap();
    // real dimensions; multiplication by i swaps the two eigenspaces of the antilinear ∗
    assert_eq!((sd.self_dual, sd.anti_self_dual), (4, 4));
    assert!(sd.direct && sd.exhausts && sd.exact_forms_not_dual);

    // the classes named in the worked example are real and imaginary
    let e = &s.engine;
    let plus = [&e.phis(&[1, 3]) + &e.phis(&[2, 4]), &e.phis(&[1, 4]) - &e.phis(&[2, 3])];
    let minus = [&e.phis(&[1, 3]) - &e.phis(&[2, 4]), &e.phis(&[1, 4]) + &e.phis(&[2, 3])];
    for f in &plus {
        assert!(e.del(f).unwrap().is_zero());
        assert_eq!(&e.jbar(f), f);
    }
    for f in &minus {
        assert!(e.del(f).unwrap().is_zero());
        assert_eq!(e.jbar(f), -f);
    }
}

#[test]
fn example3_is_neither_pure_nor_full() {
    let s = session(corpus::example3());
    let r = jbar_decomposition(&s).unwrap();
    assert_eq!((r.h_del, r.plus, r.minus, r.intersection, r.complement), (9, 5, 4, 2, 2));
    assert!(!r.pure && !r.full);
    assert!(r.sd_asd.is_none());
    assert!(matches!(sd_asd_decomposition(&s), Err(Error::NotSL2(3))));
}

#[test]
fn abelian_decomposition() {
    let r = jbar_decomposition(&session(corpus::abelian())).unwrap();
    assert_eq!((r.h_del, r.plus + r.minus, r.intersection, r.complement), (6, 6, 0, 0));
    let sd = r.sd_asd.unwrap();
    assert_eq!((sd.self_dual, sd.anti_self_dual), (6, 6));
}

#[test]
fn example1_degree_map() {
    let s = session(corpus::example1());
    let e = &s.engine;
    let omega = standard_omega(&s);
    let values: Vec<GR> = degree_map_on_aeppli_basis(&s, &omega).unwrap().into_iter().map(|(_, v)| v).collect();
    assert_eq!(values, vec![GR::zero(), GR::zero(), GR::zero(), GR::one()]);
    // ∂φ⁴ = φ¹², so the degree of φ⁴ is the coefficient of φ¹²³⁴ in φ¹² ∧ Ω
    assert_eq!(degree_map(&s, &omega, &e.phis(&[4])).unwrap(), GR::one());
    assert!(matches!(degree_map(&s, &omega, &e.phis(&[1, 2])), Err(Error::DimensionMismatch(_))));
}

#[test]
fn self_dual_splitting_survives_a_change_of_coframe() {
    use quatcohom::variants::random_quaternionic_change;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let base = session(corpus::example1());
    for _ in 0..6 {
        let s = Session::from_algebra(random_quaternionic_change(&base.algebra, &mut rng).unwrap()).unwrap();
        let sd = sd_asd_decomposition(&s).unwrap();
        assert_eq!((sd.self_dual, sd.anti_self_dual), (4, 4));
        assert!(jbar_decomposition(&s).unwrap().pure_and_full);
    }
}

#[test]
fn degree_map_needs_eight_dimensions() {
    let s = session(corpus::example3());
    let omega = standard_omega(&s);
    assert!(matches!(degree_map_on_aeppli_basis(&s, &omega), Err(Error::NotSL2(3))));
}
