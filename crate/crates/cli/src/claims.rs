//! Published examples re-derived from scratch and reported as pass/fail.

use serde::Serialize;

use prv_core::branchkit::{self, Saturation, TorusRestriction};
use prv_core::kronkit::{self, Partition, DEFAULT_KRONECKER_CAP};
use prv_core::prvkit::{self, Certificate, RootRef};
use prv_core::weyl::{self, DEFAULT_WEYL_CAP};
use prv_core::{charkit, Error, Result, RootDatum, Weight, WeylElement};

/// A check returns whether the claim holds together with a short detail.
pub type Check = fn() -> Result<(bool, String)>;

#[derive(Debug, Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    pub source: &'static str,
    pub check: Check,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimOutcome {
    pub id: String,
    pub source: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub claims: Vec<ClaimOutcome>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl ClaimReport {
    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed > 0)
    }
}

/// Runs the built-in claims whose id starts with `filter`.
pub fn run_claims(filter: Option<&str>) -> ClaimReport {
    run_claim_set(&builtin_claims(), filter)
}

pub fn run_claim_set(claims: &[Claim], filter: Option<&str>) -> ClaimReport {
    let mut outcomes = Vec::new();
    for claim in claims {
        if filter.is_some_and(|f| !claim.id.starts_with(f)) {
            continue;
        }
        let (status, detail) = match (claim.check)() {
            Ok((true, d)) => (Status::Pass, d),
            Ok((false, d)) => (Status::Fail, d),
            Err(e @ Error::CapExceeded { .. }) => (Status::Skip, e.to_string()),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        outcomes.push(ClaimOutcome {
            id: claim.id.to_string(),
            source: claim.source.to_string(),
            status,
            detail,
        });
    }
    let count = |s| outcomes.iter().filter(|o| o.status == s).count();
    ClaimReport {
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skip),
        claims: outcomes,
    }
}

fn p(s: &str) -> Partition {
    s.parse().expect("fixture partition")
}

fn datum(name: &str) -> RootDatum {
    RootDatum::parse(name).expect("fixture datum")
}

fn fw(d: &RootDatum, c: &[i64]) -> Weight {
    d.from_display(c).expect("fixture weight")
}

fn kron(a: &str, b: &str, c: &str) -> Result<u64> {
    kronkit::kronecker_coefficient(&p(a), &p(b), &p(c), DEFAULT_KRONECKER_CAP)
}

fn rule_has(gamma: &str, m: usize, n: usize, a: &str, b: &str) -> Result<(bool, String)> {
    let comps = kronkit::kron_rule_components(&p(gamma), m, n)?;
    Ok((
        comps.contains(&(p(a), p(b))),
        format!("{} pairs from {gamma} in {m}x{n}", comps.len()),
    ))
}

fn sl3() -> TorusRestriction {
    TorusRestriction::so3_in_sl3().expect("fixture")
}

const OMEGA_A: [i64; 3] = [1, 0, 0];
const OMEGA_B: [i64; 3] = [1, 1, 0];

fn sp4_square() -> Result<(bool, String)> {
    let c2 = datum("C2");
    let w2 = fw(&c2, &[0, 1]);
    let d = charkit::tensor_decompose(&c2, &w2, &w2)?;
    let want = [fw(&c2, &[0, 0]), fw(&c2, &[2, 0]), fw(&c2, &[0, 2])];
    let ok = d.len() == 3 && want.iter().all(|w| d.get(w) == 1) && d.total_dimension(&c2)? == 25;
    Ok((ok, format!("{} summands, dimension {}", d.len(), d.total_dimension(&c2)?)))
}

fn sp4_square_prv() -> Result<(bool, String)> {
    let c2 = datum("C2");
    let w2 = fw(&c2, &[0, 1]);
    let prv = prvkit::prv_components(&c2, &w2, &w2, DEFAULT_WEYL_CAP)?;
    let want = vec![fw(&c2, &[0, 0]), fw(&c2, &[2, 0]), fw(&c2, &[0, 2])];
    Ok((prv == want, format!("{} PRV components", prv.len())))
}

fn counterexample_theta() -> Certificate {
    let c2 = datum("C2");
    let w2 = fw(&c2, &[0, 1]);
    let theta = &c2.simple_roots()[0] + &c2.simple_roots()[1];
    let id = WeylElement::identity(&c2);
    Certificate {
        v: id.clone(),
        w: id,
        alpha: RootRef::Vector(theta.clone()),
        k: 1,
        lambda: &w2.scaled(2) - &theta,
    }
}

fn counterexample_rejected() -> Result<(bool, String)> {
    let c2 = datum("C2");
    let w2 = fw(&c2, &[0, 1]);
    let v = prvkit::validate_certificate(&c2, &counterexample_theta(), &w2, &w2);
    let ok = !v.accepted && v.reasons.iter().any(|r| r == prvkit::REASON_NOT_SIMPLE);
    Ok((ok, v.reasons.join("; ")))
}

fn counterexample_absent() -> Result<(bool, String)> {
    let c2 = datum("C2");
    let w2 = fw(&c2, &[0, 1]);
    let m = charkit::tensor_decompose(&c2, &w2, &w2)?.get(&w2);
    Ok((m == 0, format!("multiplicity of ω2 is {m}")))
}

fn no_certificate_for_omega2() -> Result<(bool, String)> {
    let c2 = datum("C2");
    let w2 = fw(&c2, &[0, 1]);
    let certs = prvkit::prv_ext_certificates(&c2, &w2, &w2, DEFAULT_WEYL_CAP)?;
    let hits = certs.iter().filter(|c| c.lambda == w2).count();
    Ok((hits == 0 && !certs.is_empty(), format!("{} certificates, {hits} for ω2", certs.len())))
}

fn simple_root_certificate() -> Result<(bool, String)> {
    let c2 = datum("C2");
    let w2 = fw(&c2, &[0, 1]);
    let id = WeylElement::identity(&c2);
    let cert = Certificate {
        v: id.clone(),
        w: id,
        alpha: RootRef::Simple(1),
        k: 1,
        lambda: fw(&c2, &[2, 0]),
    };
    let v = prvkit::validate_certificate(&c2, &cert, &w2, &w2);
    let m = charkit::tensor_decompose(&c2, &w2, &w2)?.get(&cert.lambda);
    Ok((v.accepted && m >= 1, format!("accepted={}, multiplicity {m}", v.accepted)))
}

fn figure_segment() -> Result<(bool, String)> {
    let a2 = datum("A2");
    let (mu, nu) = (fw(&a2, &[7, 2]), fw(&a2, &[1, 3]));
    let id = WeylElement::identity(&a2);
    let seg = prvkit::prv_segment(&a2, &id, &id, 0, &mu, &nu)?;
    let d = charkit::tensor_decompose(&a2, &mu, &nu)?;
    let got: Vec<_> = seg.steps.iter().map(|s| (s.k, a2.to_display(&s.lambda), s.dominant)).collect();
    let ok = got == vec![(0, vec![8, 5], true), (1, vec![6, 6], true)]
        && seg.steps.iter().all(|s| d.get(&s.lambda) >= 1);
    Ok((ok, format!("{got:?}")))
}

fn figure_endpoint_is_prv() -> Result<(bool, String)> {
    let a2 = datum("A2");
    let (mu, nu) = (fw(&a2, &[7, 2]), fw(&a2, &[1, 3]));
    let id = WeylElement::identity(&a2);
    let seg = prvkit::prv_segment(&a2, &id, &id, 0, &mu, &nu)?;
    let end = seg.endpoint(&a2);
    let prv = prvkit::prv_components(&a2, &mu, &nu, DEFAULT_WEYL_CAP)?;
    Ok((prv.contains(&a2.dominant(&end)), a2.format_weight(&end)))
}

fn so3_trivial_absent() -> Result<(bool, String)> {
    let rho = sl3();
    let a = branchkit::contains(&rho, &Weight(vec![0]), &Weight(OMEGA_A.to_vec()))?;
    let b = branchkit::contains(&rho, &Weight(vec![0]), &Weight(OMEGA_B.to_vec()))?;
    Ok((a == 0 && b == 0, format!("multiplicities {a}, {b}")))
}

fn so3_restriction_of_standard() -> Result<(bool, String)> {
    let rho = sl3();
    let d = branchkit::branch(&rho, &Weight(OMEGA_A.to_vec()))?;
    let ok = d.len() == 1 && d.get(&Weight(vec![1])) == 1;
    Ok((ok, format!("{} summands", d.len())))
}

fn so3_pairs_in_semigroup() -> Result<(bool, String)> {
    let rho = sl3();
    let one = Weight(vec![1]);
    let b = branchkit::contains(&rho, &one, &Weight(OMEGA_B.to_vec()))?;
    let ab = branchkit::contains(&rho, &one, &Weight(vec![2, 1, 0]))?;
    Ok((b >= 1 && ab >= 1, format!("multiplicities {b}, {ab}")))
}

fn so3_extremal_zero() -> Result<(bool, String)> {
    let rho = sl3();
    let s1 = WeylElement::simple_reflection(rho.source(), 0)?;
    let s2 = WeylElement::simple_reflection(rho.source(), 1)?;
    let a = branchkit::extremal_candidate(&rho, &s1, &Weight(OMEGA_A.to_vec()))?;
    let b = branchkit::extremal_candidate(&rho, &s2, &Weight(OMEGA_B.to_vec()))?;
    Ok((a.is_zero() && b.is_zero(), format!("{a}, {b}")))
}

fn so3_saturation() -> Result<(bool, String)> {
    let rho = sl3();
    let s = branchkit::saturation_order(&rho, &Weight(vec![0]), &Weight(OMEGA_A.to_vec()), 6)?;
    Ok((s == Saturation::Order(2), s.to_string()))
}

fn sp_gl_rule() -> Result<(bool, String)> {
    let rho = TorusRestriction::sp_in_gl(2)?;
    let perms = weyl::elements(rho.source(), DEFAULT_WEYL_CAP)?;
    let mut checked = 0;
    for size in 0..=6u32 {
        for part in Partition::bounded(size, 4) {
            let lambda_hat: Vec<i64> = part.padded(4).iter().map(|&x| x as i64).collect();
            let d = branchkit::branch(&rho, &Weight(lambda_hat.clone()))?;
            for w in &perms {
                let perm = w.as_permutation().expect("GL Weyl elements permute coordinates");
                let lambda = branchkit::sp_in_gl_weight(2, &lambda_hat, &perm)?;
                if d.get(&lambda) == 0 {
                    return Ok((false, format!("{lambda_hat:?} with {perm:?} gives {lambda}")));
                }
                checked += 1;
            }
        }
    }
    Ok((true, format!("{checked} (weight, permutation) pairs")))
}

fn kron_31() -> Result<(bool, String)> {
    let n = kron("[3,1]", "[2,1,1]", "[1^4]")?;
    Ok((n >= 1, format!("N = {n}")))
}

fn kron_211() -> Result<(bool, String)> {
    let n = kron("[2,1,1]", "[2,1,1]", "[1^4]")?;
    Ok((n == 0, format!("N = {n}")))
}

fn kron_422() -> Result<(bool, String)> {
    let n = kron("[4,2,2]", "[4,2,2]", "[2^4]")?;
    Ok((n >= 1, format!("N = {n}")))
}

fn rule_42() -> Result<(bool, String)> {
    rule_has("[2,1^4]", 2, 3, "[4,2]", "[3,2,1]")
}

fn rule_743() -> Result<(bool, String)> {
    rule_has("[4,3,3,2,1,1]", 3, 3, "[7,4,3]", "[10,3,1]")
}

fn rule_966() -> Result<(bool, String)> {
    rule_has("[4,3^3,2^3,1^2]", 3, 3, "[9,6,6]", "[10,7,4]")
}

fn rule_filling_2x3() -> Result<(bool, String)> {
    let want = kronkit::Tableau::from_rows(&[vec![2, 1, 1], vec![1, 1, 0]])?;
    let fills = kronkit::monotone_fillings(&p("[2,1^4]"), 2, 3)?;
    Ok((fills.contains(&want), format!("{} monotone fillings", fills.len())))
}

fn gl9_tableau(rows: [[u32; 3]; 3]) -> Result<(Weight, Weight)> {
    let rho = TorusRestriction::gl_tensor(3, 3)?;
    let t = kronkit::Tableau::from_rows(&rows.map(|r| r.to_vec()))?;
    let fills = kronkit::all_fillings(&p("[1^4]"), 3, 3, kronkit::DEFAULT_FILLING_CAP)?;
    if !fills.contains(&t) {
        return Err(Error::Invalid("tableau is not an extremal weight".into()));
    }
    let x = Weight(t.cells().iter().map(|&c| c as i64).collect());
    let raw = rho.apply(&x);
    Ok((raw.clone(), rho.target().dominant(&raw)))
}

fn tableau_first() -> Result<(bool, String)> {
    let (raw, bar) = gl9_tableau([[1, 1, 1], [1, 0, 0], [0, 0, 0]])?;
    let want = Weight(vec![3, 1, 0, 2, 1, 1]);
    let rho = TorusRestriction::gl_tensor(3, 3)?;
    let gamma = Weight(vec![1, 1, 1, 1, 0, 0, 0, 0, 0]);
    let m = branchkit::contains(&rho, &bar, &gamma)?;
    Ok((raw == want && bar == want && m >= 1, format!("{raw} -> {bar}, multiplicity {m}")))
}

fn tableau_second() -> Result<(bool, String)> {
    let (raw, bar) = gl9_tableau([[1, 0, 1], [0, 1, 0], [0, 0, 1]])?;
    let rho = TorusRestriction::gl_tensor(3, 3)?;
    let gamma = Weight(vec![1, 1, 1, 1, 0, 0, 0, 0, 0]);
    let m = branchkit::contains(&rho, &bar, &gamma)?;
    let s = branchkit::saturation_order(&rho, &bar, &gamma, 6)?;
    let ok = raw == Weight(vec![2, 1, 1, 1, 1, 2])
        && bar == Weight(vec![2, 1, 1, 2, 1, 1])
        && m == 0
        && s == Saturation::Order(2);
    Ok((ok, format!("{raw} -> {bar}, multiplicity {m}, saturation {s}")))
}

pub fn builtin_claims() -> Vec<Claim> {
    vec![
        Claim {
            id: "charkit.sp4-square",
            source: "V(ω2)⊗V(ω2) for Sp(4) is V(0)⊕V(2ω1)⊕V(2ω2)",
            check: sp4_square,
        },
        Claim {
            id: "prv.sp4-square-components",
            source: "PRV components of V(ω2)⊗V(ω2) for Sp(4)",
            check: sp4_square_prv,
        },
        Claim {
            id: "prv.simple-root-certificate",
            source: "certificate v=w=e, α=α2, k=1 for Sp(4) gives 2ω1",
            check: simple_root_certificate,
        },
        Claim {
            id: "prv.counterexample-rejected",
            source: "non-simple root α1+α2 breaks the certificate theorem",
            check: counterexample_rejected,
        },
        Claim {
            id: "prv.counterexample-absent",
            source: "V(ω2) does not occur in V(ω2)⊗V(ω2) for Sp(4)",
            check: counterexample_absent,
        },
        Claim {
            id: "prv.counterexample-uncertified",
            source: "no simple-root certificate produces ω2 for Sp(4)",
            check: no_certificate_for_omega2,
        },
        Claim {
            id: "prv.figure-segment",
            source: "segment for μ=7ω1+2ω2, ν=ω1+3ω2 in SL(3)",
            check: figure_segment,
        },
        Claim {
            id: "prv.figure-endpoint",
            source: "segment endpoint is an original PRV component",
            check: figure_endpoint_is_prv,
        },
        Claim {
            id: "branch.so3-trivial-absent",
            source: "V(0) of SO(3) is in neither fundamental SL(3) module",
            check: so3_trivial_absent,
        },
        Claim {
            id: "branch.so3-standard",
            source: "C^3 restricts irreducibly to SO(3)",
            check: so3_restriction_of_standard,
        },
        Claim {
            id: "branch.so3-pairs",
            source: "(2ω, ω̂β) and (2ω, ω̂α+ω̂β) lie in the SO(3)⊂SL(3) branching semigroup",
            check: so3_pairs_in_semigroup,
        },
        Claim {
            id: "branch.so3-extremal",
            source: "ρ(s_α̂ ω̂α) = ρ(s_β̂ ω̂β) = 0 for SO(3)⊂SL(3)",
            check: so3_extremal_zero,
        },
        Claim {
            id: "branch.so3-saturation",
            source: "(0, 2ω̂α) lies in the SO(3)⊂SL(3) branching semigroup",
            check: so3_saturation,
        },
        Claim {
            id: "branch.sp-gl-rule",
            source: "Sp(2n)⊂GL(2n) rule: sorted absolute pair differences",
            check: sp_gl_rule,
        },
        Claim {
            id: "kron.coeff-31",
            source: "[1^4] appears in [3,1]⊗[2,1^2]",
            check: kron_31,
        },
        Claim {
            id: "kron.coeff-211",
            source: "[1^4] does not appear in [2,1^2]⊗[2,1^2]",
            check: kron_211,
        },
        Claim {
            id: "kron.coeff-422",
            source: "[2^4] appears in [4,2^2]⊗[4,2^2]",
            check: kron_422,
        },
        Claim {
            id: "kron.rule-42",
            source: "tableau rule gives [4,2]⊗[3,2,1] for [2,1^4]",
            check: rule_42,
        },
        Claim {
            id: "kron.rule-743",
            source: "tableau rule gives [7,4,3]⊗[10,3,1] for [4,3^2,2,1^2]",
            check: rule_743,
        },
        Claim {
            id: "kron.rule-966",
            source: "tableau rule gives [9,6,6]⊗[10,7,4] for [4,3^3,2^3,1^2]",
            check: rule_966,
        },
        Claim {
            id: "kron.rule-filling",
            source: "monotone 2x3 filling (2,1,1)/(1,1,0) of [2,1^4]",
            check: rule_filling_2x3,
        },
        Claim {
            id: "kron.tableau-first",
            source: "extremal tableau with ρ(t) = ((3,1,0),(2,1,1)) in GL(3)×GL(3)⊂GL(9)",
            check: tableau_first,
        },
        Claim {
            id: "kron.tableau-second",
            source: "extremal tableau with ρ(t) = ((2,1,1),(1,1,2)) fails, its double succeeds",
            check: tableau_second,
        },
    ]
}
