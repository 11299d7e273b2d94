//! PRV components of tensor products and their generalization by
//! certificates `(v, w, α, k)` with `λ = vμ + wν - kα`.

use std::collections::BTreeSet;

use num_rational::Ratio;

use crate::charkit;
use crate::error::{Error, Result};
use crate::rootlat::{RootDatum, Weight};
use crate::weyl::{self, WeylElement};

/// The root `α` named by a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootRef {
    /// Simple root, 0-based.
    Simple(usize),
    /// Arbitrary lattice vector, possibly a non-simple root or not a root.
    Vector(Weight),
}

impl RootRef {
    pub fn vector(&self, datum: &RootDatum) -> Result<Weight> {
        match self {
            RootRef::Simple(i) => datum.simple_root(*i).cloned(),
            RootRef::Vector(v) => {
                datum.check_dim(v)?;
                Ok(datum.canonicalize(v))
            }
        }
    }

    /// Normalizes a vector that happens to be a simple root.
    pub fn normalized(&self, datum: &RootDatum) -> RootRef {
        match self {
            RootRef::Vector(v) => match datum.simple_index(&datum.canonicalize(v)) {
                Some(i) => RootRef::Simple(i),
                None => self.clone(),
            },
            simple => simple.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub v: WeylElement,
    pub w: WeylElement,
    pub alpha: RootRef,
    pub k: i64,
    pub lambda: Weight,
}

/// Per-condition diagnostics for a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub accepted: bool,
    pub alpha_is_root: bool,
    pub alpha_simple: bool,
    /// `l(s_α v) = l(v) + 1` and `l(s_α w) = l(w) + 1`.
    pub condition1: bool,
    /// `λ = vμ + wν - kα`.
    pub condition2: bool,
    /// `0 <= k <= <vμ, α∨>` and `0 <= k <= <wν, α∨>`.
    pub condition3: bool,
    /// `c` with `vμ + wν - λ = cα`, when `c` exists and is an integer.
    pub integral_coefficient: Option<i64>,
    pub lambda_dominant: bool,
    pub reasons: Vec<String>,
}

pub const REASON_NOT_ROOT: &str = "α not a root";
pub const REASON_NOT_SIMPLE: &str = "α not simple";
pub const REASON_CONDITION1: &str = "condition 1 violated";
pub const REASON_CONDITION2: &str = "condition 2 violated";
pub const REASON_CONDITION3: &str = "condition 3 violated";

fn sort_weights(datum: &RootDatum, set: BTreeSet<Weight>) -> Vec<Weight> {
    let mut out: Vec<Weight> = set.into_iter().collect();
    out.sort_by_cached_key(|w| datum.height_key(w));
    out
}

fn require_inputs(datum: &RootDatum, mu: &Weight, nu: &Weight) -> Result<()> {
    datum.check_dim(mu)?;
    datum.check_dim(nu)?;
    datum.require_dominant(mu)?;
    datum.require_dominant(nu)
}

/// `{ bar(μ + wν) : w ∈ W }`, sorted by height.
pub fn prv_components(datum: &RootDatum, mu: &Weight, nu: &Weight, cap: u128) -> Result<Vec<Weight>> {
    require_inputs(datum, mu, nu)?;
    let orbit = weyl::orbit_capped(datum, nu, cap)?;
    let set = orbit
        .iter()
        .map(|x| datum.canonicalize(&datum.dominant(&(mu + x))))
        .collect();
    Ok(sort_weights(datum, set))
}

fn certificate_key(datum: &RootDatum, c: &Certificate) -> impl Ord {
    (
        datum.height_key(&c.lambda),
        c.k,
        c.alpha.clone(),
        c.v.clone(),
        c.w.clone(),
    )
}

/// Every certificate with simple `α` whose `λ` is dominant, over all pairs
/// `(v, w)` of Weyl group elements.
pub fn prv_ext_certificates(
    datum: &RootDatum,
    mu: &Weight,
    nu: &Weight,
    cap: u128,
) -> Result<Vec<Certificate>> {
    require_inputs(datum, mu, nu)?;
    let elements = weyl::elements(datum, cap)?;
    let images: Vec<(Weight, Weight)> = elements.iter().map(|e| (e.act(mu), e.act(nu))).collect();
    let mut out = Vec::new();
    for i in 0..datum.rank() {
        let alpha = &datum.simple_roots()[i];
        let coroot = &datum.simple_coroots()[i];
        let ascents: Vec<usize> = (0..elements.len())
            .filter(|&e| elements[e].has_ascent(datum, i).expect("index in range"))
            .collect();
        for &a in &ascents {
            let vmu = &images[a].0;
            let pv = vmu.dot(coroot);
            for &b in &ascents {
                let wnu = &images[b].1;
                let top = pv.min(wnu.dot(coroot));
                let base = vmu + wnu;
                for k in 0..=top {
                    let lambda = datum.canonicalize(&base.add_scaled(alpha, -k));
                    if datum.is_dominant(&lambda) {
                        out.push(Certificate {
                            v: elements[a].clone(),
                            w: elements[b].clone(),
                            alpha: RootRef::Simple(i),
                            k,
                            lambda,
                        });
                    }
                }
            }
        }
    }
    out.sort_by_cached_key(|c| certificate_key(datum, c));
    Ok(out)
}

/// Distinct `λ` witnessed by the certificates, sorted by height.
pub fn certified_components(datum: &RootDatum, certs: &[Certificate]) -> Vec<Weight> {
    sort_weights(datum, certs.iter().map(|c| c.lambda.clone()).collect())
}

/// How many components of `V(μ) ⊗ V(ν)` are certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coverage {
    pub certified: usize,
    pub prv: usize,
    pub total: usize,
}

pub fn coverage(datum: &RootDatum, mu: &Weight, nu: &Weight, cap: u128) -> Result<Coverage> {
    let decomposition = charkit::tensor_decompose(datum, mu, nu)?;
    let certified = certified_components(datum, &prv_ext_certificates(datum, mu, nu, cap)?);
    let prv = prv_components(datum, mu, nu, cap)?;
    Ok(Coverage {
        certified: certified.iter().filter(|l| decomposition.get(l) > 0).count(),
        prv: prv.iter().filter(|l| decomposition.get(l) > 0).count(),
        total: decomposition.len(),
    })
}

/// `l(s_β x) = l(x) + 1`; for simple `β` this is `has_ascent`.
fn raises_length_by_one(datum: &RootDatum, x: &WeylElement, beta: &Weight) -> Result<bool> {
    if let Some(i) = datum.simple_index(beta) {
        return x.has_ascent(datum, i);
    }
    let s = WeylElement::reflection(datum, beta)?;
    Ok(s.compose(datum, x).length() == x.length() + 1)
}

/// `c` with `d = cα` exactly, if it exists.
fn proportionality(d: &Weight, alpha: &Weight) -> Option<Ratio<i64>> {
    let pivot = alpha.coords().iter().position(|&a| a != 0)?;
    let c = Ratio::new(d.coords()[pivot], alpha.coords()[pivot]);
    d.coords()
        .iter()
        .zip(alpha.coords())
        .all(|(&x, &a)| Ratio::from_integer(x) == c * a)
        .then_some(c)
}

/// Checks each hypothesis independently; never fails on malformed data but
/// reports it as a rejection.
pub fn validate_certificate(datum: &RootDatum, cert: &Certificate, mu: &Weight, nu: &Weight) -> Verdict {
    let mut verdict = Verdict {
        accepted: false,
        alpha_is_root: false,
        alpha_simple: false,
        condition1: false,
        condition2: false,
        condition3: false,
        integral_coefficient: None,
        lambda_dominant: false,
        reasons: Vec::new(),
    };
    let dims_ok = [mu, nu, &cert.lambda].iter().all(|x| datum.check_dim(x).is_ok())
        && cert.v.matrix().len() == datum.lattice_rank().pow(2)
        && cert.w.matrix().len() == datum.lattice_rank().pow(2);
    let Some(alpha) = cert.alpha.vector(datum).ok().filter(|_| dims_ok) else {
        verdict.reasons.push(REASON_NOT_ROOT.into());
        return verdict;
    };
    let lambda = datum.canonicalize(&cert.lambda);
    let vmu = datum.canonicalize(&cert.v.act(mu));
    let wnu = datum.canonicalize(&cert.w.act(nu));
    verdict.lambda_dominant = datum.is_dominant(&lambda);
    verdict.alpha_is_root = datum.find_root(&alpha).is_some();
    verdict.alpha_simple = datum.simple_index(&alpha).is_some();

    if verdict.alpha_is_root {
        verdict.condition1 = raises_length_by_one(datum, &cert.v, &alpha).unwrap_or(false)
            && raises_length_by_one(datum, &cert.w, &alpha).unwrap_or(false);
        let coroot = datum.coroot_of(&alpha).expect("root");
        let k = cert.k;
        verdict.condition3 = k >= 0 && k <= vmu.dot(&coroot) && k <= wnu.dot(&coroot);
    }
    verdict.condition2 = datum.canonicalize(&(&vmu + &wnu).add_scaled(&alpha, -cert.k)) == lambda;
    let d = datum.canonicalize(&(&(&vmu + &wnu) - &lambda));
    verdict.integral_coefficient = if d.is_zero() {
        Some(0)
    } else {
        proportionality(&d, &alpha).filter(|c| c.is_integer()).map(|c| c.to_integer())
    };

    if !verdict.alpha_is_root {
        verdict.reasons.push(REASON_NOT_ROOT.into());
    }
    if !verdict.alpha_simple {
        verdict.reasons.push(REASON_NOT_SIMPLE.into());
    }
    if !verdict.condition1 {
        verdict.reasons.push(REASON_CONDITION1.into());
    }
    if !verdict.condition2 {
        verdict.reasons.push(REASON_CONDITION2.into());
    }
    if !verdict.condition3 {
        verdict.reasons.push(REASON_CONDITION3.into());
    }
    verdict.accepted = verdict.alpha_simple && verdict.condition1 && verdict.condition2 && verdict.condition3;
    verdict
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentStep {
    pub k: i64,
    pub lambda: Weight,
    pub dominant: bool,
}

/// The points `λ_k = vμ + wν - kα` for `k = 0..=k_max`, oriented so that
/// `<vμ, α∨> <= <wν, α∨>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub v: WeylElement,
    pub w: WeylElement,
    pub mu: Weight,
    pub nu: Weight,
    pub alpha: usize,
    /// Whether `(v, μ)` and `(w, ν)` were exchanged to reach the orientation.
    pub swapped: bool,
    pub steps: Vec<SegmentStep>,
}

impl Segment {
    pub fn k_max(&self) -> i64 {
        self.steps.last().map_or(0, |s| s.k)
    }

    /// `s_α(vμ) + wν`.
    pub fn endpoint(&self, datum: &RootDatum) -> Weight {
        datum.canonicalize(&(&datum.reflect(self.alpha, &self.v.act(&self.mu)) + &self.w.act(&self.nu)))
    }

    /// Once a step is dominant every later step is too.
    pub fn is_suffix_monotone(&self) -> bool {
        self.steps
            .windows(2)
            .all(|p| !p[0].dominant || p[1].dominant)
    }
}

pub fn prv_segment(
    datum: &RootDatum,
    v: &WeylElement,
    w: &WeylElement,
    alpha: usize,
    mu: &Weight,
    nu: &Weight,
) -> Result<Segment> {
    require_inputs(datum, mu, nu)?;
    let root = datum.simple_root(alpha)?.clone();
    for (name, x) in [("v", v), ("w", w)] {
        if !x.has_ascent(datum, alpha)? {
            return Err(Error::AscentPrecondition(format!(
                "{name} = {} has no ascent at α{}",
                x.format(datum),
                alpha + 1
            )));
        }
    }
    let coroot = &datum.simple_coroots()[alpha];
    let (mut v, mut w, mut mu, mut nu) = (v.clone(), w.clone(), mu.clone(), nu.clone());
    let swapped = v.act(&mu).dot(coroot) > w.act(&nu).dot(coroot);
    if swapped {
        std::mem::swap(&mut v, &mut w);
        std::mem::swap(&mut mu, &mut nu);
    }
    let (vmu, wnu) = (v.act(&mu), w.act(&nu));
    let k_max = vmu.dot(coroot);
    let base = &vmu + &wnu;
    let steps = (0..=k_max)
        .map(|k| {
            let lambda = datum.canonicalize(&base.add_scaled(&root, -k));
            SegmentStep {
                k,
                dominant: datum.is_dominant(&lambda),
                lambda,
            }
        })
        .collect();
    Ok(Segment {
        v,
        w,
        mu,
        nu,
        alpha,
        swapped,
        steps,
    })
}
