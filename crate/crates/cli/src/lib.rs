//! Command-line surface over `prv-core`.
//!
//! Every subcommand prints one JSON document (or a TSV table with `--tsv`)
//! and exits with 0 on success, 1 when a claim or certificate check fails,
//! 2 on malformed input and 3 when an enumeration cap is exceeded.

pub mod claims;
pub mod json;
pub mod polytope;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use prv_core::branchkit::{self, Saturation, TorusRestriction};
use prv_core::kronkit::{self, Partition, DEFAULT_KRONECKER_CAP};
use prv_core::prvkit;
use prv_core::weyl::DEFAULT_WEYL_CAP;
use prv_core::{charkit, literal, Error, Family, Result, RootDatum, Weight, WeylElement};

use crate::json::{load_embedding, CertificateJson, DecompositionJson, EmbeddingJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "prv", version, about = "PRV components, branching rules and Kronecker coefficients")]
pub struct Cli {
    /// Emit tab-separated tables instead of JSON where available.
    #[arg(long, global = true)]
    pub tsv: bool,

    /// Bound on Weyl group and tableau enumerations.
    #[arg(long, global = true, env = "PRV_CAP", default_value_t = DEFAULT_WEYL_CAP)]
    pub cap: u128,

    /// Largest symmetric group degree for Kronecker coefficients.
    #[arg(long, global = true, default_value_t = DEFAULT_KRONECKER_CAP)]
    pub max_degree: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decompose V(mu) ⊗ V(nu), e.g. `tensor C2:[0,1] C2:[0,1]`.
    Tensor { mu: String, nu: String },
    /// Restrict V(lambda_hat) along an embedding and decompose.
    Branch {
        #[arg(long, short)]
        embedding: String,
        lambda_hat: String,
    },
    /// Multiplicity of V(lambda) in the restriction of V(lambda_hat).
    Contains {
        #[arg(long, short)]
        embedding: String,
        lambda: String,
        lambda_hat: String,
    },
    /// Dominant representative of rho(w_hat lambda_hat).
    Extremal {
        #[arg(long, short)]
        embedding: String,
        /// Weyl word (`s1*s2`) or, for GL sources, a permutation (`[2,1,3]`).
        w_hat: String,
        lambda_hat: String,
    },
    /// Print an embedding (fixture name, file or inline JSON) as JSON.
    Embedding { spec: String },
    /// PRV components bar(mu + w nu).
    Prv { mu: String, nu: String },
    /// Components certified by (v, w, alpha, k) with simple alpha.
    PrvExt {
        mu: String,
        nu: String,
        /// Include every certificate, not only the distinct components.
        #[arg(long)]
        witnesses: bool,
    },
    /// The points vμ + wν - kα for k = 0..k_max.
    Segment {
        mu: String,
        nu: String,
        #[arg(long, default_value = "e")]
        v: String,
        #[arg(long, default_value = "e")]
        w: String,
        /// 1-based simple root index.
        #[arg(long)]
        alpha: usize,
    },
    /// Check a certificate (JSON inline or in a file) against mu and nu.
    Validate { mu: String, nu: String, certificate: String },
    /// Pairs (alpha, beta) from monotone m x n fillings of gamma.
    KronRule { gamma: String, rows: usize, cols: usize },
    /// Kronecker coefficient N(alpha, beta, gamma).
    KronCoeff { alpha: String, beta: String, gamma: String },
    /// Sp(2n) weight given by the pairing rule for lambda_hat and a permutation.
    SpGl {
        n: usize,
        lambda_hat: String,
        /// One-line (`[1,3,2,4]`) or cycle (`(2 3)`) notation, 1-based.
        perm: String,
        /// Skip the branching multiplicity check.
        #[arg(long)]
        no_check: bool,
    },
    /// Least n with V(n lambda) inside V(n lambda_hat).
    Saturation {
        #[arg(long, short)]
        embedding: String,
        lambda: String,
        lambda_hat: String,
        #[arg(long, default_value_t = 6)]
        max: u32,
    },
    /// Re-derive the built-in published examples.
    Claims {
        /// Only run claims whose id starts with this prefix.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Components of V(mu) ⊗ V(nu) with PRV and certificate markers.
    Polytope { mu: String, nu: String },
}

/// What a command printed and how the process should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: EXIT_OK }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_INVALID,
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable output");
    s.push('\n');
    s
}

fn tsv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut out = header.join("\t");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out
}

fn coords(c: &[i64]) -> String {
    let body: Vec<String> = c.iter().map(i64::to_string).collect();
    format!("[{}]", body.join(","))
}

/// The first weight names its datum; the second may omit the prefix.
fn weight_pair(mu: &str, nu: &str) -> Result<(RootDatum, Weight, Weight)> {
    let (datum, mu) = literal::parse_weight(mu)?;
    let nu = literal::parse_weight_in(&datum, nu)?;
    Ok((datum, mu, nu))
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    s.trim()
        .trim_start_matches(['[', '('])
        .trim_end_matches([']', ')'])
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad integer `{t}`"))))
        .collect()
}

fn parse_partition(s: &str) -> Result<Partition> {
    s.parse()
}

/// Weyl word, or a permutation for a single GL factor.
fn parse_source_element(datum: &RootDatum, s: &str) -> Result<WeylElement> {
    let t = s.trim();
    let single_gl = datum.factors().len() == 1 && datum.factors()[0].spec.family == Family::GL;
    if single_gl && (t.starts_with('[') || t.starts_with('(')) {
        let perm = literal::parse_permutation(t, datum.lattice_rank())?;
        return WeylElement::permutation(datum, &perm);
    }
    literal::parse_weyl_word(datum, t)
}

fn read_inline_or_file(s: &str) -> Result<String> {
    if s.trim_start().starts_with('{') {
        Ok(s.to_string())
    } else {
        std::fs::read_to_string(s).map_err(|e| Error::Parse(format!("cannot read `{s}`: {e}")))
    }
}

fn decomposition_output(cli: &Cli, datum: &RootDatum, d: &charkit::Decomposition) -> String {
    let doc = DecompositionJson::new(datum, d);
    if cli.tsv {
        tsv(
            &["weight", "mult"],
            doc.summands.iter().map(|s| vec![coords(&s.weight), s.mult.to_string()]),
        )
    } else {
        to_json(&doc)
    }
}

fn weights_output(cli: &Cli, datum: &RootDatum, key: &str, weights: &[Weight]) -> String {
    let shown: Vec<Vec<i64>> = weights.iter().map(|w| datum.to_display(w)).collect();
    if cli.tsv {
        tsv(&["weight"], shown.iter().map(|w| vec![coords(w)]))
    } else {
        let mut doc = serde_json::Map::new();
        doc.insert("datum".into(), json!(datum.name()));
        doc.insert(key.into(), json!(shown));
        to_json(&doc)
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let cap = cli.cap;
    let out = match &cli.command {
        Command::Tensor { mu, nu } => {
            let (datum, mu, nu) = weight_pair(mu, nu)?;
            let d = charkit::tensor_decompose(&datum, &mu, &nu)?;
            decomposition_output(cli, &datum, &d)
        }
        Command::Branch { embedding, lambda_hat } => {
            let rho = load_embedding(embedding)?;
            let lambda_hat = literal::parse_weight_in(rho.source(), lambda_hat)?;
            let d = branchkit::branch(&rho, &lambda_hat)?;
            decomposition_output(cli, rho.target(), &d)
        }
        Command::Contains {
            embedding,
            lambda,
            lambda_hat,
        } => {
            let rho = load_embedding(embedding)?;
            let lambda = literal::parse_weight_in(rho.target(), lambda)?;
            let lambda_hat = literal::parse_weight_in(rho.source(), lambda_hat)?;
            let m = branchkit::contains(&rho, &lambda, &lambda_hat)?;
            to_json(&json!({
                "lambda": rho.target().to_display(&lambda),
                "lambda_hat": rho.source().to_display(&lambda_hat),
                "multiplicity": m,
            }))
        }
        Command::Extremal {
            embedding,
            w_hat,
            lambda_hat,
        } => {
            let rho = load_embedding(embedding)?;
            let w_hat = parse_source_element(rho.source(), w_hat)?;
            let lambda_hat = literal::parse_weight_in(rho.source(), lambda_hat)?;
            rho.source().require_dominant(&lambda_hat)?;
            let raw = rho.apply(&w_hat.act(&lambda_hat));
            let bar = branchkit::extremal_candidate(&rho, &w_hat, &lambda_hat)?;
            to_json(&json!({
                "image": rho.target().to_display(&raw),
                "dominant": rho.target().to_display(&bar),
            }))
        }
        Command::Embedding { spec } => to_json(&EmbeddingJson::new(&load_embedding(spec)?)),
        Command::Prv { mu, nu } => {
            let (datum, mu, nu) = weight_pair(mu, nu)?;
            let comps = prvkit::prv_components(&datum, &mu, &nu, cap)?;
            weights_output(cli, &datum, "components", &comps)
        }
        Command::PrvExt { mu, nu, witnesses } => {
            let (datum, mu, nu) = weight_pair(mu, nu)?;
            let certs = prvkit::prv_ext_certificates(&datum, &mu, &nu, cap)?;
            if cli.tsv && *witnesses {
                tsv(
                    &["v", "w", "alpha", "k", "lambda"],
                    certs.iter().map(|c| {
                        let j = CertificateJson::new(&datum, c);
                        vec![j.v, j.w, serde_json::to_string(&j.alpha).unwrap(), j.k.to_string(), coords(&j.lambda)]
                    }),
                )
            } else if cli.tsv {
                weights_output(cli, &datum, "components", &prvkit::certified_components(&datum, &certs))
            } else {
                let comps: Vec<Vec<i64>> = prvkit::certified_components(&datum, &certs)
                    .iter()
                    .map(|w| datum.to_display(w))
                    .collect();
                let cov = prvkit::coverage(&datum, &mu, &nu, cap)?;
                let mut doc = serde_json::Map::new();
                doc.insert("datum".into(), json!(datum.name()));
                doc.insert("components".into(), json!(comps));
                doc.insert(
                    "coverage".into(),
                    json!({"certified": cov.certified, "prv": cov.prv, "total": cov.total}),
                );
                if *witnesses {
                    let list: Vec<CertificateJson> = certs.iter().map(|c| CertificateJson::new(&datum, c)).collect();
                    doc.insert("certificates".into(), json!(list));
                }
                to_json(&doc)
            }
        }
        Command::Segment { mu, nu, v, w, alpha } => {
            let (datum, mu, nu) = weight_pair(mu, nu)?;
            if *alpha == 0 {
                return Err(Error::Parse("simple roots are numbered from 1".into()));
            }
            let v = literal::parse_weyl_word(&datum, v)?;
            let w = literal::parse_weyl_word(&datum, w)?;
            let seg = prvkit::prv_segment(&datum, &v, &w, alpha - 1, &mu, &nu)?;
            let end = seg.endpoint(&datum);
            let prv = prvkit::prv_components(&datum, &mu, &nu, cap)?;
            if cli.tsv {
                tsv(
                    &["k", "lambda", "dominant"],
                    seg.steps.iter().map(|s| {
                        vec![s.k.to_string(), coords(&datum.to_display(&s.lambda)), s.dominant.to_string()]
                    }),
                )
            } else {
                let steps: Vec<_> = seg
                    .steps
                    .iter()
                    .map(|s| json!({"k": s.k, "lambda": datum.to_display(&s.lambda), "dominant": s.dominant}))
                    .collect();
                to_json(&json!({
                    "datum": datum.name(),
                    "v": seg.v.format(&datum),
                    "w": seg.w.format(&datum),
                    "alpha": alpha,
                    "swapped": seg.swapped,
                    "k_max": seg.k_max(),
                    "steps": steps,
                    "endpoint": datum.to_display(&end),
                    "endpoint_is_prv": prv.contains(&datum.dominant(&end)),
                }))
            }
        }
        Command::Validate { mu, nu, certificate } => {
            let (datum, mu, nu) = weight_pair(mu, nu)?;
            let text = read_inline_or_file(certificate)?;
            let cert: CertificateJson =
                serde_json::from_str(&text).map_err(|e| Error::Parse(format!("certificate JSON: {e}")))?;
            let cert = cert.decode(&datum)?;
            let v = prvkit::validate_certificate(&datum, &cert, &mu, &nu);
            let doc = json!({
                "accepted": v.accepted,
                "alpha_is_root": v.alpha_is_root,
                "alpha_simple": v.alpha_simple,
                "condition1": v.condition1,
                "condition2": v.condition2,
                "condition3": v.condition3,
                "integral_coefficient": v.integral_coefficient,
                "lambda_dominant": v.lambda_dominant,
                "reasons": v.reasons,
            });
            return Ok(Outcome {
                stdout: to_json(&doc),
                code: if v.accepted { EXIT_OK } else { EXIT_CHECK_FAILED },
            });
        }
        Command::KronRule { gamma, rows, cols } => {
            let gamma = parse_partition(gamma)?;
            let pairs = kronkit::kron_rule_components(&gamma, *rows, *cols)?;
            let mut entries = Vec::new();
            for (a, b) in &pairs {
                let n = if gamma.size() <= cli.max_degree {
                    Some(kronkit::kronecker_coefficient(a, b, &gamma, cli.max_degree)?)
                } else {
                    None
                };
                entries.push((a, b, n));
            }
            if cli.tsv {
                tsv(
                    &["alpha", "beta", "gamma", "N"],
                    entries.iter().map(|(a, b, n)| {
                        vec![
                            a.to_string(),
                            b.to_string(),
                            gamma.to_string(),
                            n.map_or_else(|| "-".to_string(), |n| n.to_string()),
                        ]
                    }),
                )
            } else {
                let list: Vec<_> = entries
                    .iter()
                    .map(|(a, b, n)| json!({"alpha": a.parts(), "beta": b.parts(), "gamma": gamma.parts(), "n": n}))
                    .collect();
                to_json(&json!({"gamma": gamma.parts(), "rows": rows, "cols": cols, "pairs": list}))
            }
        }
        Command::KronCoeff { alpha, beta, gamma } => {
            let (a, b, c) = (parse_partition(alpha)?, parse_partition(beta)?, parse_partition(gamma)?);
            let n = kronkit::kronecker_coefficient(&a, &b, &c, cli.max_degree)?;
            if cli.tsv {
                tsv(
                    &["alpha", "beta", "gamma", "N"],
                    [vec![a.to_string(), b.to_string(), c.to_string(), n.to_string()]],
                )
            } else {
                to_json(&json!({"alpha": a.parts(), "beta": b.parts(), "gamma": c.parts(), "n": n}))
            }
        }
        Command::SpGl {
            n,
            lambda_hat,
            perm,
            no_check,
        } => {
            let lambda_hat = parse_ints(lambda_hat)?;
            let perm = literal::parse_permutation(perm, 2 * n)?;
            let weight = branchkit::sp_in_gl_weight(*n, &lambda_hat, &perm)?;
            let rho = TorusRestriction::sp_in_gl(*n)?;
            let multiplicity = if *no_check {
                None
            } else {
                Some(branchkit::contains(&rho, &weight, &Weight(lambda_hat.clone()))?)
            };
            let doc = json!({
                "n": n,
                "lambda_hat": lambda_hat,
                "perm": literal::format_permutation(&perm),
                "epsilon": weight.coords(),
                "weight": rho.target().to_display(&weight),
                "multiplicity": multiplicity,
            });
            let failed = multiplicity == Some(0);
            return Ok(Outcome {
                stdout: to_json(&doc),
                code: if failed { EXIT_CHECK_FAILED } else { EXIT_OK },
            });
        }
        Command::Saturation {
            embedding,
            lambda,
            lambda_hat,
            max,
        } => {
            let rho = load_embedding(embedding)?;
            let lambda = literal::parse_weight_in(rho.target(), lambda)?;
            let lambda_hat = literal::parse_weight_in(rho.source(), lambda_hat)?;
            let s = branchkit::saturation_order(&rho, &lambda, &lambda_hat, *max)?;
            let order = match s {
                Saturation::Order(n) => Some(n),
                Saturation::NoneUpTo(_) => None,
            };
            to_json(&json!({"order": order, "searched": max}))
        }
        Command::Claims { filter } => {
            let report = claims::run_claims(filter.as_deref());
            let stdout = if cli.tsv {
                tsv(
                    &["id", "status", "source", "detail"],
                    report.claims.iter().map(|c| {
                        vec![
                            c.id.clone(),
                            serde_json::to_value(c.status).unwrap().as_str().unwrap().to_string(),
                            c.source.clone(),
                            c.detail.clone(),
                        ]
                    }),
                )
            } else {
                to_json(&report)
            };
            return Ok(Outcome {
                stdout,
                code: report.exit_code(),
            });
        }
        Command::Polytope { mu, nu } => {
            let (datum, mu, nu) = weight_pair(mu, nu)?;
            let pts = polytope::emit_polytope_points(&datum, &mu, &nu, cap)?;
            if cli.tsv {
                tsv(
                    &["weight", "mult", "prv", "segments"],
                    pts.points.iter().map(|p| {
                        let marks: Vec<String> = p.segments.iter().map(|s| format!("a{}:k{}", s.alpha, s.k)).collect();
                        vec![coords(&p.weight), p.mult.to_string(), p.prv.to_string(), marks.join(",")]
                    }),
                )
            } else {
                to_json(&pts)
            }
        }
    };
    Ok(Outcome::ok(out))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            return Outcome {
                stdout: e.render().to_string(),
                code,
            };
        }
    };
    match run(&cli) {
        Ok(out) => out,
        Err(e) => Outcome {
            stdout: format!("error: {e}\n"),
            code: exit_code(&e),
        },
    }
}
