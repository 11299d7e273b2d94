//! JSON forms of decompositions, certificates and embeddings.
//!
//! Weights are written in display coordinates: fundamental-weight
//! coordinates for semisimple factors, epsilon coordinates for `GL` factors.

use serde::{Deserialize, Serialize};

use prv_core::branchkit::TorusRestriction;
use prv_core::charkit::Decomposition;
use prv_core::prvkit::{Certificate, RootRef};
use prv_core::{literal, Error, Result, RootDatum, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandJson {
    pub weight: Vec<i64>,
    pub mult: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub datum: String,
    pub summands: Vec<SummandJson>,
}

impl DecompositionJson {
    pub fn new(datum: &RootDatum, d: &Decomposition) -> Self {
        DecompositionJson {
            datum: datum.name().to_string(),
            summands: d
                .sorted(datum)
                .into_iter()
                .map(|(w, mult)| SummandJson {
                    weight: datum.to_display(&w),
                    mult,
                })
                .collect(),
        }
    }

    pub fn decode(&self) -> Result<(RootDatum, Decomposition)> {
        let datum = RootDatum::parse(&self.datum)?;
        let pairs = self
            .summands
            .iter()
            .map(|s| Ok((datum.from_display(&s.weight)?, s.mult)))
            .collect::<Result<Vec<_>>>()?;
        Ok((datum, Decomposition::from_pairs(pairs)))
    }
}

/// `α` as a 1-based simple index, a simple-root expression such as
/// `"a1+2*a2"`, or display coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlphaJson {
    Simple(usize),
    Expr(String),
    Coords(Vec<i64>),
}

impl AlphaJson {
    pub fn new(datum: &RootDatum, alpha: &RootRef) -> Self {
        match alpha.normalized(datum) {
            RootRef::Simple(i) => AlphaJson::Simple(i + 1),
            RootRef::Vector(v) => match datum.root_coordinates(&v) {
                Some(c) if c.iter().all(|x| x.is_integer()) => {
                    let coeffs: Vec<i64> = c.iter().map(|x| x.to_integer()).collect();
                    AlphaJson::Expr(format_root_expr(&coeffs))
                }
                _ => AlphaJson::Coords(datum.to_display(&v)),
            },
        }
    }

    pub fn decode(&self, datum: &RootDatum) -> Result<RootRef> {
        let root = match self {
            AlphaJson::Simple(0) => return Err(Error::Parse("simple roots are numbered from 1".into())),
            AlphaJson::Simple(i) => return Ok(RootRef::Simple(i - 1)),
            AlphaJson::Expr(e) => parse_root_expr(datum, e)?,
            AlphaJson::Coords(c) => datum.from_display(c)?,
        };
        Ok(RootRef::Vector(root).normalized(datum))
    }
}

fn format_root_expr(coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        if c < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if c.abs() != 1 {
            out.push_str(&format!("{}*", c.abs()));
        }
        out.push_str(&format!("a{}", i + 1));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses integer combinations of simple roots: `a1+a2`, `2*a1-a2`.
pub fn parse_root_expr(datum: &RootDatum, expr: &str) -> Result<Weight> {
    let bad = || Error::Parse(format!("bad root expression `{expr}`"));
    let mut total = Weight::zero(datum.lattice_rank());
    let cleaned: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned == "0" {
        return Ok(total);
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, ch) in cleaned.char_indices() {
        if (ch == '+' || ch == '-') && i > 0 {
            terms.push(&cleaned[start..i]);
            start = i;
        }
    }
    terms.push(&cleaned[start..]);
    for term in terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(b) => (-1, b),
            None => (1, term.strip_prefix('+').unwrap_or(term)),
        };
        let (coef, name) = match body.split_once('*') {
            Some((c, n)) => (c.parse::<i64>().map_err(|_| bad())?, n),
            None => (1, body),
        };
        let idx: usize = name
            .strip_prefix('a')
            .and_then(|n| n.parse().ok())
            .filter(|&n| n >= 1)
            .ok_or_else(bad)?;
        let root = datum.simple_root(idx - 1)?;
        total = total.add_scaled(root, sign * coef);
    }
    Ok(total)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub v: String,
    pub w: String,
    pub alpha: AlphaJson,
    pub k: i64,
    pub lambda: Vec<i64>,
}

impl CertificateJson {
    pub fn new(datum: &RootDatum, c: &Certificate) -> Self {
        CertificateJson {
            v: c.v.format(datum),
            w: c.w.format(datum),
            alpha: AlphaJson::new(datum, &c.alpha),
            k: c.k,
            lambda: datum.to_display(&c.lambda),
        }
    }

    pub fn decode(&self, datum: &RootDatum) -> Result<Certificate> {
        Ok(Certificate {
            v: literal::parse_weyl_word(datum, &self.v)?,
            w: literal::parse_weyl_word(datum, &self.w)?,
            alpha: self.alpha.decode(datum)?,
            k: self.k,
            lambda: datum.from_display(&self.lambda)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub source: String,
    pub target: String,
    pub matrix: Vec<Vec<i64>>,
}

impl EmbeddingJson {
    pub fn new(rho: &TorusRestriction) -> Self {
        EmbeddingJson {
            source: rho.source().name().to_string(),
            target: rho.target().name().to_string(),
            matrix: rho.matrix().to_vec(),
        }
    }

    pub fn decode(&self) -> Result<TorusRestriction> {
        TorusRestriction::new(
            RootDatum::parse(&self.source)?,
            RootDatum::parse(&self.target)?,
            self.matrix.clone(),
        )
    }
}

/// A fixture name, a path to an embedding file, or inline JSON.
pub fn load_embedding(spec: &str) -> Result<TorusRestriction> {
    let text = if spec.trim_start().starts_with('{') {
        spec.to_string()
    } else if let Ok(rho) = TorusRestriction::fixture(spec) {
        return Ok(rho);
    } else {
        std::fs::read_to_string(spec)
            .map_err(|e| Error::Parse(format!("`{spec}` is neither a fixture nor a readable file: {e}")))?
    };
    let parsed: EmbeddingJson =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("embedding JSON: {e}")))?;
    parsed.decode()
}
