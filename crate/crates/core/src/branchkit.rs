//! Branching from a group `Ĝ` to a subgroup `G` through the restriction map
//! between character lattices of maximal tori.

use std::collections::BTreeMap;
use std::fmt;

use crate::charkit::{self, Character, Decomposition};
use crate::error::{Error, Result};
use crate::kronkit::{self, Partition};
use crate::rootlat::{Family, FactorSpec, RootDatum, Weight};
use crate::weyl::WeylElement;

/// How multiplicities are computed for a restriction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Route {
    /// Push the full weight system of `Ĝ` through the torus map.
    Character,
    /// `GL(m) x GL(n) ⊂ GL(mn)`: multiplicities are Kronecker coefficients.
    SchurWeyl { m: usize, n: usize },
}

/// Integer linear map `X(T̂) -> X(T)`, stored as a
/// `target.lattice_rank() x source.lattice_rank()` matrix.
#[derive(Debug, Clone)]
pub struct TorusRestriction {
    source: RootDatum,
    target: RootDatum,
    matrix: Vec<Vec<i64>>,
    route: Route,
}

impl TorusRestriction {
    pub fn new(source: RootDatum, target: RootDatum, matrix: Vec<Vec<i64>>) -> Result<Self> {
        if matrix.len() != target.lattice_rank() {
            return Err(Error::InvalidEmbedding(format!(
                "matrix has {} rows, {} expects {}",
                matrix.len(),
                target.name(),
                target.lattice_rank()
            )));
        }
        if let Some(row) = matrix.iter().find(|r| r.len() != source.lattice_rank()) {
            return Err(Error::InvalidEmbedding(format!(
                "matrix row has {} entries, {} expects {}",
                row.len(),
                source.name(),
                source.lattice_rank()
            )));
        }
        let rho = TorusRestriction {
            source,
            target,
            matrix,
            route: Route::Character,
        };
        // Type-A blocks are stored modulo the all-ones vector; the map must
        // respect that quotient.
        for f in rho.source.factors() {
            if f.spec.family == Family::A {
                let mut ones = Weight::zero(rho.source.lattice_rank());
                for k in f.lattice_range() {
                    ones.0[k] = 1;
                }
                if !rho.target.canonicalize(&rho.apply(&ones)).is_zero() {
                    return Err(Error::InvalidEmbedding(format!(
                        "map is not defined on the weight lattice of {}",
                        f.spec
                    )));
                }
            }
        }
        Ok(rho)
    }

    /// Diagonal `G ⊂ G x G`: `(λ, μ) ↦ λ + μ`.
    pub fn diagonal(datum: &RootDatum) -> Result<Self> {
        let r = datum.lattice_rank();
        let matrix = (0..r)
            .map(|i| {
                let mut row = vec![0; 2 * r];
                row[i] = 1;
                row[r + i] = 1;
                row
            })
            .collect();
        Self::new(datum.squared()?, datum.clone(), matrix)
    }

    /// `Sp(2n) ⊂ GL(2n)` for the form with `J`-blocks on the diagonal:
    /// `ε̂_{2i-1} ↦ ε_i` and `ε̂_{2i} ↦ -ε_i`.
    pub fn sp_in_gl(n: usize) -> Result<Self> {
        let source = RootDatum::new(&[FactorSpec::new(Family::GL, 2 * n)])?;
        let target = RootDatum::new(&[FactorSpec::new(Family::C, n)])?;
        let matrix = (0..n)
            .map(|i| {
                let mut row = vec![0; 2 * n];
                row[2 * i] = 1;
                row[2 * i + 1] = -1;
                row
            })
            .collect();
        Self::new(source, target, matrix)
    }

    /// `SO(3) ⊂ SL(3)` preserving the form with antidiagonal Gram matrix; the
    /// torus `diag(t, 1, t^-1)` gives `(a, b, c) ↦ a - c` on `X(T) = Z`.
    pub fn so3_in_sl3() -> Result<Self> {
        let source = RootDatum::new(&[FactorSpec::new(Family::A, 2)])?;
        let target = RootDatum::new(&[FactorSpec::new(Family::B, 1)])?;
        Self::new(source, target, vec![vec![1, 0, -1]])
    }

    /// `GL(m) x GL(n) ⊂ GL(mn)` acting on `E ⊗ F`; the basis vector
    /// `e_i ⊗ f_j` is coordinate `i * n + j`.
    pub fn gl_tensor(m: usize, n: usize) -> Result<Self> {
        let source = RootDatum::new(&[FactorSpec::new(Family::GL, m * n)])?;
        let target = RootDatum::new(&[FactorSpec::new(Family::GL, m), FactorSpec::new(Family::GL, n)])?;
        let mut matrix = vec![vec![0; m * n]; m + n];
        for i in 0..m {
            for j in 0..n {
                matrix[i][i * n + j] = 1;
                matrix[m + j][i * n + j] = 1;
            }
        }
        let mut rho = Self::new(source, target, matrix)?;
        rho.route = Route::SchurWeyl { m, n };
        Ok(rho)
    }

    /// Resolves `diag:<G>`, `sp-in-gl:<n>`, `so3-in-sl3` and `gl-tensor:<m>x<n>`.
    pub fn fixture(name: &str) -> Result<Self> {
        let name = name.trim();
        if name == "so3-in-sl3" {
            return Self::so3_in_sl3();
        }
        let bad = || Error::Parse(format!("unknown embedding fixture `{name}`"));
        let (kind, arg) = name.split_once(':').ok_or_else(bad)?;
        match kind {
            "diag" => Self::diagonal(&RootDatum::parse(arg)?),
            "sp-in-gl" => Self::sp_in_gl(arg.parse().map_err(|_| bad())?),
            "gl-tensor" => {
                let (m, n) = arg.split_once('x').ok_or_else(bad)?;
                Self::gl_tensor(m.parse().map_err(|_| bad())?, n.parse().map_err(|_| bad())?)
            }
            _ => Err(bad()),
        }
    }

    pub fn source(&self) -> &RootDatum {
        &self.source
    }

    pub fn target(&self) -> &RootDatum {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    /// Image of a source weight, canonicalized in the target lattice.
    pub fn apply(&self, x: &Weight) -> Weight {
        let coords = self
            .matrix
            .iter()
            .map(|row| row.iter().zip(x.coords()).map(|(a, b)| a * b).sum())
            .collect();
        self.target.canonicalize(&Weight(coords))
    }

    pub fn apply_checked(&self, x: &Weight) -> Result<Weight> {
        self.source.check_dim(x)?;
        Ok(self.apply(x))
    }
}

impl fmt::Display for TorusRestriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.source.name(), self.target.name())
    }
}

/// Pushforward of weight multiplicities along the torus map.
pub fn restrict_character(rho: &TorusRestriction, chi: &Character) -> Result<Character> {
    let mut out = Character::new();
    for (w, &m) in chi.iter() {
        out.add(rho.apply_checked(w)?, m);
    }
    Ok(out)
}

fn require_source_dominant(rho: &TorusRestriction, lambda_hat: &Weight) -> Result<()> {
    rho.source.check_dim(lambda_hat)?;
    rho.source.require_dominant(lambda_hat)
}

/// Decomposition of `V_Ĝ(λ̂)` restricted to `G`.
pub fn branch(rho: &TorusRestriction, lambda_hat: &Weight) -> Result<Decomposition> {
    require_source_dominant(rho, lambda_hat)?;
    if let Route::SchurWeyl { m, n } = rho.route {
        return branch_schur_weyl(rho, m, n, lambda_hat);
    }
    let chi = charkit::irreducible_character(&rho.source, lambda_hat)?;
    let restricted = restrict_character(rho, &chi)?;
    if !restricted.is_weyl_invariant(&rho.target) {
        return Err(Error::InvalidEmbedding(format!(
            "restriction of {} along {rho} is not invariant under the Weyl group of {}",
            rho.source.format_weight(lambda_hat),
            rho.target.name()
        )));
    }
    charkit::decompose_character(&rho.target, &restricted).map_err(|e| match e {
        Error::NotGenuine(at) => Error::InconsistentRestriction(format!(
            "peeling the restriction of {} went negative at {at}",
            rho.source.format_weight(lambda_hat)
        )),
        other => other,
    })
}

/// Multiplicity of `V_G(λ)` in the restriction of `V_Ĝ(λ̂)`.
pub fn contains(rho: &TorusRestriction, lambda: &Weight, lambda_hat: &Weight) -> Result<u64> {
    rho.target.check_dim(lambda)?;
    rho.target.require_dominant(lambda)?;
    require_source_dominant(rho, lambda_hat)?;
    if let Route::SchurWeyl { m, n } = rho.route {
        return schur_weyl_multiplicity(m, n, lambda, lambda_hat);
    }
    Ok(branch(rho, lambda_hat)?.get(&rho.target.canonicalize(lambda)))
}

/// Shifts a weakly decreasing integer vector by `shift` and reads it as a
/// partition, or `None` if an entry stays negative.
fn shifted_partition(x: &[i64], shift: i64) -> Option<Partition> {
    let parts: Option<Vec<u32>> = x.iter().map(|&c| u32::try_from(c + shift).ok()).collect();
    Partition::new(parts?).ok()
}

/// `det_{mn}` restricts to `det_m^n ⊗ det_n^m`, so negative entries are
/// removed by a common twist before applying Schur-Weyl duality.
fn schur_weyl_multiplicity(m: usize, n: usize, lambda: &Weight, lambda_hat: &Weight) -> Result<u64> {
    let c = -lambda_hat.coords().iter().copied().min().unwrap_or(0).min(0);
    let (alpha, beta) = lambda.coords().split_at(m);
    let (Some(gamma), Some(alpha), Some(beta)) = (
        shifted_partition(lambda_hat.coords(), c),
        shifted_partition(alpha, c * n as i64),
        shifted_partition(beta, c * m as i64),
    ) else {
        return Ok(0);
    };
    if alpha.size() != gamma.size() || beta.size() != gamma.size() {
        return Ok(0);
    }
    kronkit::kronecker_coefficient(&alpha, &beta, &gamma, kronkit::DEFAULT_KRONECKER_CAP)
}

fn branch_schur_weyl(
    rho: &TorusRestriction,
    m: usize,
    n: usize,
    lambda_hat: &Weight,
) -> Result<Decomposition> {
    let c = -lambda_hat.coords().iter().copied().min().unwrap_or(0).min(0);
    let gamma = shifted_partition(lambda_hat.coords(), c).expect("dominant GL weight");
    let size = gamma.size();
    let mut out = BTreeMap::new();
    for alpha in Partition::bounded(size, m) {
        for beta in Partition::bounded(size, n) {
            let k = kronkit::kronecker_coefficient(&alpha, &beta, &gamma, kronkit::DEFAULT_KRONECKER_CAP)?;
            if k == 0 {
                continue;
            }
            let mut coords: Vec<i64> = alpha.padded(m).iter().map(|&a| a as i64 - c * n as i64).collect();
            coords.extend(beta.padded(n).iter().map(|&b| b as i64 - c * m as i64));
            out.insert(rho.target.canonicalize(&Weight(coords)), k);
        }
    }
    Ok(Decomposition::from_pairs(out))
}

/// `bar(ρ(ŵ λ̂))`, the candidate component attached to the extremal weight
/// `ŵ λ̂`.
pub fn extremal_candidate(
    rho: &TorusRestriction,
    w_hat: &WeylElement,
    lambda_hat: &Weight,
) -> Result<Weight> {
    let x = w_hat.act_checked(&rho.source, lambda_hat)?;
    Ok(rho.target.canonicalize(&rho.target.dominant(&rho.apply(&x))))
}

/// Outcome of a saturation probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Saturation {
    /// Least `n` with `(nλ, nλ̂)` in the branching semigroup.
    Order(u32),
    /// No such `n` up to the bound.
    NoneUpTo(u32),
}

impl fmt::Display for Saturation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Saturation::Order(n) => write!(f, "{n}"),
            Saturation::NoneUpTo(n) => write!(f, "none up to {n}"),
        }
    }
}

pub fn saturation_order(
    rho: &TorusRestriction,
    lambda: &Weight,
    lambda_hat: &Weight,
    n_max: u32,
) -> Result<Saturation> {
    if n_max == 0 {
        return Err(Error::Invalid("saturation bound must be positive".into()));
    }
    for n in 1..=n_max {
        if contains(rho, &lambda.scaled(n as i64), &lambda_hat.scaled(n as i64))? > 0 {
            return Ok(Saturation::Order(n));
        }
    }
    Ok(Saturation::NoneUpTo(n_max))
}

/// Rule for `Sp(2n) ⊂ GL(2n)`: pair up the entries of `λ̂` along the
/// permutation and sort the absolute differences. `perm` is 0-based.
pub fn sp_in_gl_weight(n: usize, lambda_hat: &[i64], perm: &[usize]) -> Result<Weight> {
    if lambda_hat.len() != 2 * n {
        return Err(Error::DimensionMismatch {
            expected: 2 * n,
            got: lambda_hat.len(),
        });
    }
    if lambda_hat.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotDominant(format!("{lambda_hat:?}")));
    }
    crate::weyl::check_permutation(perm, 2 * n)?;
    let mut out: Vec<i64> = (0..n)
        .map(|i| (lambda_hat[perm[2 * i]] - lambda_hat[perm[2 * i + 1]]).abs())
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(Weight(out))
}
