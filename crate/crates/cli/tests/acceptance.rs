//! Acceptance gate: one PASS/FAIL line per criterion.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use prv_core::branchkit::{self, Saturation, TorusRestriction};
use prv_core::charkit::{self, Character};
use prv_core::kronkit::{self, Partition, DEFAULT_KRONECKER_CAP};
use prv_core::prvkit::{self, Certificate, RootRef};
use prv_core::weyl::{self, DEFAULT_WEYL_CAP};
use prv_core::{RootDatum, Weight, WeylElement};

type Outcome = Result<String, String>;

const SWEEP: [&str; 3] = ["A2", "C2", "G2"];

fn prv(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_prv")).args(args).output().expect("run prv");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

fn sp4_decomposition() -> Outcome {
    let (code, out) = prv(&["tensor", "C2:[0,1]", "C2:[0,1]"]);
    check(code == 0, format!("exit code {code}"))?;
    let doc: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let want = serde_json::json!({
        "datum": "C2",
        "summands": [
            {"weight": [0, 0], "mult": 1},
            {"weight": [2, 0], "mult": 1},
            {"weight": [0, 2], "mult": 1},
        ]
    });
    check(doc == want, format!("got {out}"))?;
    let c2 = RootDatum::parse("C2").unwrap();
    let w2 = c2.from_display(&[0, 1]).unwrap();
    let dim = charkit::tensor_decompose(&c2, &w2, &w2)
        .and_then(|d| d.total_dimension(&c2))
        .map_err(|e| e.to_string())?;
    check(dim == 25, format!("dimension {dim}"))?;
    Ok("V(0) + V(2w1) + V(2w2), dimension 25".into())
}

fn kronecker_fixtures() -> Outcome {
    let n = |a: &str, b: &str, c: &str| {
        kronkit::kronecker_coefficient(&p(a), &p(b), &p(c), DEFAULT_KRONECKER_CAP).map_err(|e| e.to_string())
    };
    let (x, y, z) = (n("[3,1]", "[2,1,1]", "[1^4]")?, n("[2,1,1]", "[2,1,1]", "[1^4]")?, n("[4,2,2]", "[4,2,2]", "[2^4]")?);
    check(x >= 1 && y == 0 && z >= 1, format!("coefficients {x}, {y}, {z}"))?;
    let rules = [
        ("[2,1^4]", 2, 3, "[4,2]", "[3,2,1]"),
        ("[4,3,3,2,1,1]", 3, 3, "[7,4,3]", "[10,3,1]"),
        ("[4,3^3,2^3,1^2]", 3, 3, "[9,6,6]", "[10,7,4]"),
    ];
    for (gamma, m, k, a, b) in rules {
        let comps = kronkit::kron_rule_components(&p(gamma), m, k).map_err(|e| e.to_string())?;
        check(comps.contains(&(p(a), p(b))), format!("({a},{b}) missing for {gamma}"))?;
    }
    Ok(format!("N = {x}, {y}, {z}; three rule outputs present"))
}

fn sl3_so3_fixtures() -> Outcome {
    let rho = TorusRestriction::so3_in_sl3().map_err(|e| e.to_string())?;
    let omega_a = Weight(vec![1, 0, 0]);
    let omega_b = Weight(vec![1, 1, 0]);
    let two_omega = Weight(vec![1]);
    let c = |l: &Weight, lh: &Weight| branchkit::contains(&rho, l, lh).map_err(|e| e.to_string());
    let zero = c(&Weight(vec![0]), &omega_a)?;
    let b = c(&two_omega, &omega_b)?;
    let ab = c(&two_omega, &(&omega_a + &omega_b))?;
    let sat = branchkit::saturation_order(&rho, &Weight(vec![0]), &omega_a, 6).map_err(|e| e.to_string())?;
    check(
        zero == 0 && b >= 1 && ab >= 1 && sat == Saturation::Order(2),
        format!("multiplicities {zero}, {b}, {ab}; saturation {sat}"),
    )?;
    Ok(format!("multiplicities {zero}, {b}, {ab}; saturation order 2"))
}

struct Sweep {
    certificates: usize,
    prv: usize,
    segments: usize,
}

/// Criteria 4, 5 and 7 share one enumeration; each gets its own verdict.
fn sweep() -> (Outcome, Outcome, Outcome, Duration) {
    let start = Instant::now();
    let mut stats = Sweep {
        certificates: 0,
        prv: 0,
        segments: 0,
    };
    let mut cert_fail = None;
    let mut prv_fail = None;
    let mut seg_fail = None;
    for name in SWEEP {
        let d = RootDatum::parse(name).unwrap();
        let weights = common::dominant_weights(&d, 3);
        for mu in &weights {
            for nu in &weights {
                let dec = charkit::tensor_decompose(&d, mu, nu).unwrap();
                let prv = prvkit::prv_components(&d, mu, nu, DEFAULT_WEYL_CAP).unwrap();
                let prv_set: BTreeSet<_> = prv.iter().cloned().collect();
                for l in &prv {
                    stats.prv += 1;
                    if dec.get(l) == 0 && prv_fail.is_none() {
                        prv_fail = Some(format!("{} from {} x {}", d.format_weight(l), d.format_weight(mu), d.format_weight(nu)));
                    }
                }
                let certs = prvkit::prv_ext_certificates(&d, mu, nu, DEFAULT_WEYL_CAP).unwrap();
                let mut families = BTreeSet::new();
                for c in &certs {
                    stats.certificates += 1;
                    if dec.get(&c.lambda) == 0 && cert_fail.is_none() {
                        cert_fail = Some(format!("{} from {} x {}", d.format_weight(&c.lambda), d.format_weight(mu), d.format_weight(nu)));
                    }
                    let RootRef::Simple(i) = c.alpha.normalized(&d) else {
                        cert_fail.get_or_insert_with(|| "certificate with non-simple root".into());
                        continue;
                    };
                    if !families.insert((c.v.word(&d), c.w.word(&d), i)) {
                        continue;
                    }
                    stats.segments += 1;
                    let seg = prvkit::prv_segment(&d, &c.v, &c.w, i, mu, nu).unwrap();
                    let end = seg.endpoint(&d);
                    let ok = seg.is_suffix_monotone()
                        && seg.steps.last().map(|s| &s.lambda) == Some(&end)
                        && prv_set.contains(&d.canonicalize(&d.dominant(&end)));
                    if !ok && seg_fail.is_none() {
                        seg_fail = Some(format!("{} v={} w={} a{}", name, c.v.format(&d), c.w.format(&d), i + 1));
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let verdict = |fail: Option<String>, ok: String| match fail {
        Some(f) => Err(f),
        None => Ok(ok),
    };
    (
        verdict(cert_fail, format!("{} certificates, all in the decomposition", stats.certificates)),
        verdict(prv_fail, format!("{} PRV components, all in the decomposition", stats.prv)),
        verdict(seg_fail, format!("{} segment families suffix-monotone with PRV endpoints", stats.segments)),
        elapsed,
    )
}

fn counterexample() -> Outcome {
    let c2 = RootDatum::parse("C2").unwrap();
    let w2 = c2.from_display(&[0, 1]).unwrap();
    let theta = &c2.simple_roots()[0] + &c2.simple_roots()[1];
    let id = WeylElement::identity(&c2);
    let cert = Certificate {
        v: id.clone(),
        w: id,
        alpha: RootRef::Vector(theta.clone()),
        k: 1,
        lambda: &w2.scaled(2) - &theta,
    };
    check(cert.lambda == w2, "certificate does not point at w2")?;
    let v = prvkit::validate_certificate(&c2, &cert, &w2, &w2);
    check(
        !v.accepted && v.reasons.iter().any(|r| r == prvkit::REASON_NOT_SIMPLE),
        format!("verdict {:?}", v.reasons),
    )?;
    let oracle = common::tensor_oracle(&c2, &w2, &w2);
    check(!oracle.contains_key(&w2), "oracle contains V(w2)")?;
    Ok(format!("rejected with \"{}\"; oracle has no V(w2)", prvkit::REASON_NOT_SIMPLE))
}

fn sp_in_gl_rule() -> Outcome {
    let rho = TorusRestriction::sp_in_gl(2).map_err(|e| e.to_string())?;
    let perms = weyl::elements(rho.source(), DEFAULT_WEYL_CAP).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for size in 0..=6u32 {
        for part in Partition::bounded(size, 4) {
            let lambda_hat: Vec<i64> = part.padded(4).iter().map(|&x| x as i64).collect();
            let d = branchkit::branch(&rho, &Weight(lambda_hat.clone())).map_err(|e| e.to_string())?;
            for w in &perms {
                let perm = w.as_permutation().ok_or("not a permutation")?;
                let lambda = branchkit::sp_in_gl_weight(2, &lambda_hat, &perm).map_err(|e| e.to_string())?;
                check(d.get(&lambda) >= 1, format!("{lambda_hat:?} with {perm:?} gives {lambda}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (weight, permutation) pairs"))
}

fn oracle_cross_validation() -> Outcome {
    let mut weights_checked = 0;
    let mut pairs_checked = 0;
    for name in SWEEP {
        let d = RootDatum::parse(name).unwrap();
        let weights = common::dominant_weights(&d, 4);
        let elements = weyl::elements(&d, DEFAULT_WEYL_CAP).unwrap();
        let mut chars = Vec::new();
        for lambda in &weights {
            let chi = charkit::irreducible_character(&d, lambda).unwrap();
            let oracle = common::weyl_character(&d, lambda);
            let ours: std::collections::BTreeMap<_, _> = chi.iter().map(|(w, m)| (w.clone(), *m)).collect();
            check(ours == oracle, format!("{} character differs", d.format_weight(lambda)))?;
            for i in 0..d.rank() {
                for l in 0..=lambda.dot(&d.simple_coroots()[i]) {
                    let y = lambda.add_scaled(&d.simple_roots()[i], -l);
                    for w in &elements {
                        let wy = d.canonicalize(&w.act(&y));
                        check(chi.get(&wy) == 1, format!("{} string at {wy}", d.format_weight(lambda)))?;
                    }
                }
            }
            weights_checked += 1;
            chars.push((lambda.clone(), chi));
        }
        for (mu, chi_mu) in &chars {
            for (nu, chi_nu) in &chars {
                let klimyk = charkit::tensor_decompose(&d, mu, nu).unwrap();
                let product: Character = chi_mu.product(chi_nu);
                let peeled = charkit::decompose_character(&d, &product).unwrap();
                check(
                    klimyk == peeled,
                    format!("{} x {} disagree", d.format_weight(mu), d.format_weight(nu)),
                )?;
                pairs_checked += 1;
            }
        }
    }
    Ok(format!("{weights_checked} characters, {pairs_checked} tensor products"))
}

fn claims_command() -> Outcome {
    let (code, out) = prv(&["claims"]);
    let doc: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let total = doc["claims"].as_array().map_or(0, Vec::len);
    let failed = doc["failed"].as_u64().unwrap_or(u64::MAX);
    check(code == 0 && failed == 0 && total >= 20, format!("exit {code}, {failed} failed of {total}"))?;
    Ok(format!("{total} claims, 0 failed"))
}

fn timed(f: fn() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

#[test]
fn acceptance() {
    let suite = Instant::now();
    let mut results: Vec<(u32, &str, Outcome, Duration, Option<Duration>)> = Vec::new();
    let secs = Duration::from_secs;

    let (o, t) = timed(sp4_decomposition);
    results.push((1, "Sp4 decomposition", o, t, Some(secs(1))));
    let (o, t) = timed(kronecker_fixtures);
    results.push((2, "Kronecker fixtures", o, t, Some(secs(10))));
    let (o, t) = timed(sl3_so3_fixtures);
    results.push((3, "SL3/SO3 fixtures", o, t, Some(secs(1))));
    let (certs, prv, segs, sweep_t) = sweep();
    results.push((4, "certificate soundness sweep", certs, sweep_t, Some(secs(60))));
    results.push((5, "PRV soundness sweep", prv, sweep_t, Some(secs(60))));
    let (o, t) = timed(counterexample);
    results.push((6, "non-simple counterexample", o, t, Some(secs(1))));
    results.push((7, "segment property", segs, sweep_t, None));
    let (o, t) = timed(sp_in_gl_rule);
    results.push((8, "Sp(4) in GL(4) rule", o, t, Some(secs(30))));
    let (o, t) = timed(oracle_cross_validation);
    results.push((9, "oracle cross-validation", o, t, None));
    let (o, t) = timed(claims_command);
    results.push((10, "claims command", o, t, None));

    let mut failures = 0;
    for (id, name, outcome, took, bound) in results {
        let over = bound.is_some_and(|b| took > b);
        let (status, detail) = match (&outcome, over) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; took {took:?}, bound {:?}", bound.unwrap())),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!("criterion {id:>2} {status} {name}: {detail} [{:.2}s]", took.as_secs_f64());
    }
    println!("acceptance suite: {failures} failed, {:.1}s total", suite.elapsed().as_secs_f64());
    assert_eq!(failures, 0, "acceptance criteria failed");
}
