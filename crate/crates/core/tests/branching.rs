mod common;

use prv_core::branchkit::{self, Saturation, TorusRestriction};
use prv_core::{charkit, literal, weyl, RootDatum, Weight, WeylElement};

fn w(c: &[i64]) -> Weight {
    Weight(c.to_vec())
}

#[test]
fn diagonal_branching_is_the_tensor_product() {
    for name in ["A1", "A2", "C2"] {
        let d = RootDatum::parse(name).unwrap();
        let diag = TorusRestriction::diagonal(&d).unwrap();
        let weights = common::dominant_weights(&d, 4);
        for mu in &weights {
            for nu in &weights {
                let mut both = mu.coords().to_vec();
                both.extend_from_slice(nu.coords());
                let lambda_hat = Weight(both);
                let got = branchkit::branch(&diag, &lambda_hat).unwrap();
                let want = charkit::tensor_decompose(&d, mu, nu).unwrap();
                assert_eq!(got, want, "{} (x) {}", d.format_weight(mu), d.format_weight(nu));
            }
        }
    }
}

#[test]
fn restriction_conserves_mass_and_dimension() {
    for rho in [
        TorusRestriction::sp_in_gl(2).unwrap(),
        TorusRestriction::so3_in_sl3().unwrap(),
        TorusRestriction::diagonal(&RootDatum::parse("G2").unwrap()).unwrap(),
    ] {
        for lambda_hat in common::dominant_weights(rho.source(), 3) {
            let chi = charkit::irreducible_character(rho.source(), &lambda_hat).unwrap();
            let r = branchkit::restrict_character(&rho, &chi).unwrap();
            assert_eq!(r.mass(), chi.mass());
            let d = branchkit::branch(&rho, &lambda_hat).unwrap();
            assert_eq!(d.total_dimension(rho.target()).unwrap(), chi.mass() as u128);
        }
    }
}

fn sp4_sweep_weights() -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for size in 0..=6u32 {
        for part in prv_core::kronkit::Partition::bounded(size, 4) {
            out.push(part.padded(4).iter().map(|&x| x as i64).collect());
        }
    }
    out
}

#[test]
fn sp_in_gl_rule_is_sound() {
    let rho = TorusRestriction::sp_in_gl(2).unwrap();
    let perms = common::permutations(4);
    let weights = sp4_sweep_weights();
    assert_eq!(weights.len(), 27);
    for lambda_hat in weights {
        let decomposition = branchkit::branch(&rho, &Weight(lambda_hat.clone())).unwrap();
        for (perm, _) in &perms {
            let lambda = branchkit::sp_in_gl_weight(2, &lambda_hat, perm).unwrap();
            assert!(
                decomposition.get(&lambda) >= 1,
                "{lambda_hat:?} with {} gives {lambda}",
                literal::format_permutation(perm)
            );
            let w_hat = WeylElement::permutation(rho.source(), perm).unwrap();
            let cand = branchkit::extremal_candidate(&rho, &w_hat.inverse(rho.source()), &Weight(lambda_hat.clone())).unwrap();
            assert_eq!(cand, lambda);
        }
    }
}

#[test]
fn extremal_candidates_saturate() {
    let fixtures = [
        TorusRestriction::so3_in_sl3().unwrap(),
        TorusRestriction::sp_in_gl(2).unwrap(),
        TorusRestriction::diagonal(&RootDatum::parse("A2").unwrap()).unwrap(),
    ];
    for rho in &fixtures {
        let elements = weyl::elements(rho.source(), weyl::DEFAULT_WEYL_CAP).unwrap();
        for lambda_hat in common::dominant_weights(rho.source(), 2) {
            for w_hat in &elements {
                let lambda = branchkit::extremal_candidate(rho, w_hat, &lambda_hat).unwrap();
                assert!(rho.target().is_dominant(&lambda));
                let order = branchkit::saturation_order(rho, &lambda, &lambda_hat, 6).unwrap();
                assert!(matches!(order, Saturation::Order(_)), "{rho}: {lambda_hat} {lambda}");
            }
        }
    }
}

#[test]
fn sl3_so3_memberships() {
    let rho = TorusRestriction::so3_in_sl3().unwrap();
    let (omega_a, omega_b) = (w(&[1, 0, 0]), w(&[1, 1, 0]));
    assert_eq!(branchkit::contains(&rho, &w(&[0]), &omega_a).unwrap(), 0);
    assert_eq!(branchkit::contains(&rho, &w(&[0]), &omega_b).unwrap(), 0);
    assert!(branchkit::contains(&rho, &w(&[1]), &omega_b).unwrap() >= 1);
    assert!(branchkit::contains(&rho, &w(&[1]), &w(&[2, 1, 0])).unwrap() >= 1);
    assert_eq!(
        branchkit::saturation_order(&rho, &w(&[0]), &omega_a, 6).unwrap(),
        Saturation::Order(2)
    );
}

#[test]
fn diagonal_prv_saturates_at_one() {
    let a2 = RootDatum::parse("A2").unwrap();
    let rho = TorusRestriction::diagonal(&a2).unwrap();
    let w1 = a2.fundamental_weight(0).unwrap();
    let w0 = weyl::longest_element(&a2);
    let lambda = a2.dominant(&a2.canonicalize(&(&w1 + &w0.act(&w1))));
    let mut both = w1.coords().to_vec();
    both.extend_from_slice(w1.coords());
    assert_eq!(
        branchkit::saturation_order(&rho, &lambda, &Weight(both), 6).unwrap(),
        Saturation::Order(1)
    );
}

#[test]
fn tableau_candidates_in_gl9() {
    let rho = TorusRestriction::gl_tensor(3, 3).unwrap();
    let gamma = w(&[1, 1, 1, 1, 0, 0, 0, 0, 0]);
    let first = [1, 1, 1, 1, 0, 0, 0, 0, 0];
    let second = [1, 0, 1, 0, 1, 0, 0, 0, 1];
    for (cells, want) in [(first, [3, 1, 0, 2, 1, 1]), (second, [2, 1, 1, 2, 1, 1])] {
        let x = w(&cells.map(|c| c as i64));
        let raw = rho.apply(&x);
        let bar = rho.target().dominant(&raw);
        assert_eq!(bar, w(&want));
    }
    assert_eq!(branchkit::contains(&rho, &w(&[3, 1, 0, 2, 1, 1]), &gamma).unwrap(), 1);
    assert_eq!(branchkit::contains(&rho, &w(&[2, 1, 1, 2, 1, 1]), &gamma).unwrap(), 0);
    assert_eq!(
        branchkit::saturation_order(&rho, &w(&[2, 1, 1, 2, 1, 1]), &gamma, 6).unwrap(),
        Saturation::Order(2)
    );
}

#[test]
fn schur_weyl_route_matches_torus_restriction() {
    let via_kron = TorusRestriction::gl_tensor(2, 2).unwrap();
    let via_torus = TorusRestriction::new(
        via_kron.source().clone(),
        via_kron.target().clone(),
        via_kron.matrix().to_vec(),
    )
    .unwrap();
    for size in 0..=4u32 {
        for part in prv_core::kronkit::Partition::bounded(size, 4) {
            let lambda_hat = Weight(part.padded(4).iter().map(|&x| x as i64).collect());
            assert_eq!(
                branchkit::branch(&via_kron, &lambda_hat).unwrap(),
                branchkit::branch(&via_torus, &lambda_hat).unwrap(),
                "{lambda_hat}"
            );
        }
    }
}
