use confluence_core::algebra::shuffle;
use confluence_core::confluence::{confluence_relation, generate_confluence, Mode};
use confluence_core::io::index_to_word;
use confluence_core::numeric::{
    eval_li, eval_mzv, hyperlog_by_continuation, relation_residuals, Evaluator, PrecisionConfig,
};
use confluence_core::{NCPoly, Word};

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

const PI: f64 = std::f64::consts::PI;

#[test]
fn weight_four_values_match_closed_forms() {
    let cfg = PrecisionConfig::default();
    let z4 = PI.powi(4) / 90.0;
    // L = (−1)^depth ζ(index)
    for (index, value) in [
        (vec![4], -z4),
        (vec![2, 2], 0.75 * z4),
        (vec![1, 3], 0.25 * z4),
        (vec![1, 1, 2], -z4),
    ] {
        let v = eval_mzv(&index_to_word(&index).unwrap(), &cfg)
            .unwrap()
            .to_f64();
        assert!((v - value).abs() < 1e-14, "{index:?}: {v}");
    }
}

#[test]
fn mzv_agrees_with_continuation_through_weight_five() {
    let cfg = PrecisionConfig::default();
    let z = cfg.real(5.0);
    for k in 2..=5 {
        for word in confluence_core::SubspaceTag::A0.words_of_weight(k) {
            let a = eval_mzv(&word, &cfg).unwrap();
            let b = hyperlog_by_continuation(&word, &z, &cfg);
            assert!((&a - &b).abs().to_f64() < 1e-20, "{word}");
        }
    }
}

#[test]
fn li_route_agrees_with_continuation() {
    let cfg = PrecisionConfig::default();
    let z = cfg.real(2.5);
    for s in ["z", "z0", "zz0", "z0z", "z00z0"] {
        let a = confluence_core::numeric::eval_hyperlog(&w(s), &z, &cfg).unwrap();
        let b = hyperlog_by_continuation(&w(s), &z, &cfg);
        assert!((&a - &b).abs().to_f64() < 1e-20, "{s}");
    }
}

#[test]
fn polylog_series_matches_direct_summation() {
    let cfg = PrecisionConfig::default();
    let x = cfg.real(0.25);
    let v = eval_li(&[1, 2], &x, &cfg).unwrap().to_f64();
    let mut direct = 0.0;
    for m2 in 2..200 {
        let inner: f64 = (1..m2).map(|m1| 1.0 / m1 as f64).sum();
        direct += 0.25f64.powi(m2) * inner / (m2 * m2) as f64;
    }
    assert!((v - direct).abs() < 1e-15);
}

#[test]
fn worked_relation_vanishes_but_perturbation_does_not() {
    let ev = Evaluator::default();
    let r = confluence_relation(&w("1z10")).unwrap();
    let res = relation_residuals([&r.body], &ev).unwrap();
    assert!(res[0] < 1e-20);
    let perturbed = &r.body + &NCPoly::from(w("1000"));
    assert!(ev.poly_mzv(&perturbed).unwrap().abs().to_f64() > 1.0);
}

#[test]
fn weight_five_relations_vanish() {
    let ev = Evaluator::default();
    let recs = generate_confluence(5, Mode::Stuffle).unwrap();
    let res = relation_residuals(recs.iter().map(|r| &r.body), &ev).unwrap();
    assert!(res.iter().all(|&x| x < 1e-10));
}

#[test]
fn shuffle_product_of_hyperlogs_near_one() {
    let ev = Evaluator::default();
    let z = ev.config().real(1.25);
    let u = NCPoly::from(w("10"));
    let v = NCPoly::from(w("1z"));
    let lhs = ev.poly_hyperlog(&shuffle(&u, &v), &z).unwrap();
    let rhs = &ev.poly_hyperlog(&u, &z).unwrap() * &ev.poly_hyperlog(&v, &z).unwrap();
    assert!((&lhs - &rhs).abs().to_f64() < 1e-20);
}
