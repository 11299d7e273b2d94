//! Root data for GL, the classical families, G2, and finite products of
//! these, together with exact weight-lattice arithmetic.
//!
//! Classical factors use epsilon coordinates. An `SL_n` factor (type A) is
//! stored as `GL_n` weights modulo the all-ones vector, using the
//! representative whose last coordinate is zero. G2 is stored in the basis of
//! fundamental weights. Products concatenate the factor lattices.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Maximal semisimple rank accepted per factor.
pub const MAX_FACTOR_RANK: usize = 8;

/// An integer vector in the character lattice of a maximal torus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight(vec![0; dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        Weight(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// The standard dot product, used to evaluate a covector on a weight.
    pub fn dot(&self, other: &Weight) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    /// `self + k * other`
    pub fn add_scaled(&self, other: &Weight, k: i64) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        -&self
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        rhs.scaled(self)
    }
}

/// Family tags of the supported factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `GL_n`; the rank parameter is `n`.
    GL,
    /// `SL_{r+1}`, type `A_r`.
    A,
    /// `SO_{2r+1}`, type `B_r` (no spin weights).
    B,
    /// `Sp_{2r}`, type `C_r`.
    C,
    /// `SO_{2r}`, type `D_r`.
    D,
    G2,
}

/// One factor of a (product) root datum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FactorSpec {
    pub family: Family,
    pub rank: usize,
}

impl FactorSpec {
    pub fn new(family: Family, rank: usize) -> Self {
        FactorSpec { family, rank }
    }

    /// Number of simple roots.
    pub fn semisimple_rank(&self) -> usize {
        match self.family {
            Family::GL => self.rank.saturating_sub(1),
            _ => self.rank,
        }
    }

    /// Number of lattice coordinates used by this factor.
    pub fn lattice_dim(&self) -> usize {
        match self.family {
            Family::GL => self.rank,
            Family::A => self.rank + 1,
            Family::B | Family::C | Family::D => self.rank,
            Family::G2 => 2,
        }
    }

    pub fn is_semisimple(&self) -> bool {
        self.family != Family::GL
    }

    fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::UnsupportedDatum(format!("{self}: {why}")));
        match self.family {
            Family::GL if self.rank == 0 => bad("GL needs n >= 1"),
            Family::GL if self.rank > MAX_FACTOR_RANK + 1 => bad("rank above 8"),
            Family::G2 if self.rank != 2 => bad("G2 has rank 2"),
            Family::D if self.rank < 2 => bad("D needs rank >= 2"),
            Family::A | Family::B | Family::C if self.rank == 0 => bad("rank must be positive"),
            f if f != Family::GL && self.rank > MAX_FACTOR_RANK => bad("rank above 8"),
            _ => Ok(()),
        }
    }

    fn weyl_order(&self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        let r = self.rank;
        match self.family {
            Family::GL => fact(r),
            Family::A => fact(r + 1),
            Family::B | Family::C => (1u128 << r) * fact(r),
            Family::D => (1u128 << (r - 1)) * fact(r),
            Family::G2 => 12,
        }
    }

    /// Simple roots and coroots in the factor's own coordinates.
    fn simple_system(&self) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
        let d = self.lattice_dim();
        let e = |i: usize| {
            let mut v = vec![0i64; d];
            v[i] = 1;
            v
        };
        let diff = |i: usize, j: usize| {
            let mut v = vec![0i64; d];
            v[i] += 1;
            v[j] -= 1;
            v
        };
        let sum = |i: usize, j: usize| {
            let mut v = vec![0i64; d];
            v[i] += 1;
            v[j] += 1;
            v
        };
        let scale = |v: Vec<i64>, k: i64| v.into_iter().map(|c| c * k).collect::<Vec<_>>();
        let r = self.rank;
        match self.family {
            Family::GL | Family::A => {
                let n = d;
                let roots = (0..n - 1)
                    .map(|i| canonical_sl(diff(i, i + 1)))
                    .collect();
                let coroots = (0..n - 1).map(|i| diff(i, i + 1)).collect();
                if self.family == Family::GL {
                    ((0..n - 1).map(|i| diff(i, i + 1)).collect(), coroots)
                } else {
                    (roots, coroots)
                }
            }
            Family::B => {
                let mut roots: Vec<_> = (0..r - 1).map(|i| diff(i, i + 1)).collect();
                let mut coroots = roots.clone();
                roots.push(e(r - 1));
                coroots.push(scale(e(r - 1), 2));
                (roots, coroots)
            }
            Family::C => {
                let mut roots: Vec<_> = (0..r - 1).map(|i| diff(i, i + 1)).collect();
                let mut coroots = roots.clone();
                roots.push(scale(e(r - 1), 2));
                coroots.push(e(r - 1));
                (roots, coroots)
            }
            Family::D => {
                let mut roots: Vec<_> = (0..r - 1).map(|i| diff(i, i + 1)).collect();
                roots.push(sum(r - 2, r - 1));
                let coroots = roots.clone();
                (roots, coroots)
            }
            Family::G2 => {
                // Fundamental-weight coordinates; alpha_1 short, alpha_2 long.
                (vec![vec![2, -1], vec![-3, 2]], vec![e(0), e(1)])
            }
        }
    }

    /// Fundamental weights, doubled so that half-integral spin weights stay
    /// integral.
    fn fundamental_weights_x2(&self) -> Vec<Vec<i64>> {
        let d = self.lattice_dim();
        let r = self.rank;
        let prefix = |i: usize| -> Vec<i64> { (0..d).map(|k| if k <= i { 2 } else { 0 }).collect() };
        match self.family {
            Family::GL => Vec::new(),
            Family::A | Family::C => (0..r).map(prefix).collect(),
            Family::B => {
                let mut w: Vec<_> = (0..r - 1).map(prefix).collect();
                w.push(vec![1; d]);
                w
            }
            Family::D => {
                let mut w: Vec<_> = (0..r - 2).map(prefix).collect();
                let mut minus = vec![1; d];
                minus[d - 1] = -1;
                w.push(minus);
                w.push(vec![1; d]);
                w
            }
            Family::G2 => vec![vec![2, 0], vec![0, 2]],
        }
    }
}

fn canonical_sl(mut v: Vec<i64>) -> Vec<i64> {
    let last = *v.last().expect("nonempty");
    for c in v.iter_mut() {
        *c -= last;
    }
    v
}

impl fmt::Display for FactorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::GL => write!(f, "GL{}", self.rank),
            Family::A => write!(f, "A{}", self.rank),
            Family::B => write!(f, "B{}", self.rank),
            Family::C => write!(f, "C{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            Family::G2 => write!(f, "G2"),
        }
    }
}

impl FromStr for FactorSpec {
    type Err = Error;

    /// Accepts Cartan labels (`A2`, `C2`, `G2`) and group names
    /// (`GL4`, `SL3`, `SO5`, `SO8`, `Sp4`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let err = || Error::Parse(format!("unknown group factor `{s}`"));
        if s.eq_ignore_ascii_case("G2") {
            return Ok(FactorSpec::new(Family::G2, 2));
        }
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(err)?;
        let (head, tail) = s.split_at(split);
        let n: usize = tail.parse().map_err(|_| err())?;
        let spec = match head {
            "GL" | "Gl" | "gl" => FactorSpec::new(Family::GL, n),
            "A" => FactorSpec::new(Family::A, n),
            "B" => FactorSpec::new(Family::B, n),
            "C" => FactorSpec::new(Family::C, n),
            "D" => FactorSpec::new(Family::D, n),
            "SL" | "Sl" | "sl" if n >= 2 => FactorSpec::new(Family::A, n - 1),
            "Sp" | "SP" | "sp" if n >= 2 && n.is_multiple_of(2) => FactorSpec::new(Family::C, n / 2),
            "SO" | "So" | "so" if n >= 3 && n % 2 == 1 => FactorSpec::new(Family::B, (n - 1) / 2),
            "SO" | "So" | "so" if n >= 4 && n.is_multiple_of(2) => FactorSpec::new(Family::D, n / 2),
            _ => return Err(err()),
        };
        Ok(spec)
    }
}

/// Placement of one factor inside the product lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub spec: FactorSpec,
    pub lattice_offset: usize,
    pub simple_offset: usize,
}

impl Factor {
    pub fn lattice_range(&self) -> std::ops::Range<usize> {
        self.lattice_offset..self.lattice_offset + self.spec.lattice_dim()
    }

    pub fn simple_range(&self) -> std::ops::Range<usize> {
        self.simple_offset..self.simple_offset + self.spec.semisimple_rank()
    }
}

/// A positive root with its coroot and its coordinates in the simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveRoot {
    pub root: Weight,
    pub coroot: Weight,
    pub coefficients: Vec<i64>,
}

impl PositiveRoot {
    pub fn height(&self) -> i64 {
        self.coefficients.iter().sum()
    }
}

#[derive(Debug, Clone)]
pub struct RootDatum {
    name: String,
    factors: Vec<Factor>,
    lattice_rank: usize,
    simple_roots: Vec<Weight>,
    simple_coroots: Vec<Weight>,
    positive_roots: Vec<PositiveRoot>,
    root_index: HashMap<Weight, usize>,
    weyl_order: u128,
    two_rho: Weight,
    two_rho_check: Weight,
    form: Vec<Vec<i64>>,
    cartan_inverse: Vec<Vec<Ratio<i64>>>,
    fundamental_x2: Vec<Weight>,
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors
    }
}

impl Eq for RootDatum {}

impl RootDatum {
    /// Builds the root datum of a product of factors.
    pub fn new(specs: &[FactorSpec]) -> Result<Self> {
        if specs.is_empty() {
            return Err(Error::UnsupportedDatum("empty factor list".into()));
        }
        let mut factors = Vec::with_capacity(specs.len());
        let (mut lat, mut simp) = (0, 0);
        for spec in specs {
            spec.validate()?;
            factors.push(Factor {
                spec: *spec,
                lattice_offset: lat,
                simple_offset: simp,
            });
            lat += spec.lattice_dim();
            simp += spec.semisimple_rank();
        }
        let lattice_rank = lat;
        let embed = |f: &Factor, v: &[i64]| {
            let mut out = vec![0i64; lattice_rank];
            out[f.lattice_range()].copy_from_slice(v);
            Weight(out)
        };

        let mut simple_roots = Vec::with_capacity(simp);
        let mut simple_coroots = Vec::with_capacity(simp);
        let mut fundamental_x2 = Vec::with_capacity(simp);
        for f in &factors {
            let (roots, coroots) = f.spec.simple_system();
            simple_roots.extend(roots.iter().map(|r| embed(f, r)));
            simple_coroots.extend(coroots.iter().map(|r| embed(f, r)));
            if f.spec.is_semisimple() {
                fundamental_x2.extend(f.spec.fundamental_weights_x2().iter().map(|w| embed(f, w)));
            }
        }

        let positive_roots = close_positive_roots(&simple_roots, &simple_coroots);
        let root_index = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.root.clone(), i))
            .collect();

        let mut two_rho = Weight::zero(lattice_rank);
        let mut two_rho_check = Weight::zero(lattice_rank);
        let mut form = vec![vec![0i64; lattice_rank]; lattice_rank];
        for pr in &positive_roots {
            two_rho += &pr.root;
            two_rho_check += &pr.coroot;
            for i in 0..lattice_rank {
                for j in 0..lattice_rank {
                    form[i][j] += pr.coroot.0[i] * pr.coroot.0[j];
                }
            }
        }

        let cartan: Vec<Vec<i64>> = simple_coroots
            .iter()
            .map(|cv| simple_roots.iter().map(|r| r.dot(cv)).collect())
            .collect();
        let cartan_inverse = invert_rational(&cartan)
            .ok_or_else(|| Error::UnsupportedDatum("singular Cartan matrix".into()))?;

        let name = specs.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("x");
        Ok(RootDatum {
            name,
            weyl_order: specs.iter().map(|s| s.weyl_order()).product(),
            factors,
            lattice_rank,
            simple_roots,
            simple_coroots,
            positive_roots,
            root_index,
            two_rho,
            two_rho_check,
            form,
            cartan_inverse,
            fundamental_x2,
        })
    }

    /// Parses names such as `C2`, `GL3xGL3`, `SL3`, `Sp4`.
    pub fn parse(name: &str) -> Result<Self> {
        let specs = name
            .split(['x', '×'])
            .map(str::parse)
            .collect::<Result<Vec<FactorSpec>>>()?;
        Self::new(&specs)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn lattice_rank(&self) -> usize {
        self.lattice_rank
    }

    /// Number of simple roots.
    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[Weight] {
        &self.simple_coroots
    }

    pub fn simple_root(&self, i: usize) -> Result<&Weight> {
        self.simple_roots.get(i).ok_or(Error::SimpleIndexOutOfRange {
            index: i + 1,
            rank: self.rank(),
        })
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    pub fn weyl_order(&self) -> u128 {
        self.weyl_order
    }

    /// Sum of the positive roots.
    pub fn two_rho(&self) -> &Weight {
        &self.two_rho
    }

    /// Sum of the positive coroots; strictly positive on every positive root.
    pub fn two_rho_check(&self) -> &Weight {
        &self.two_rho_check
    }

    /// Weyl-invariant integral symmetric form `sum over positive coroots of
    /// <x, b^v><y, b^v>`. On each simple factor it is a positive multiple of
    /// the normalized invariant form; it vanishes on the centre of GL factors.
    pub fn form(&self, x: &Weight, y: &Weight) -> i64 {
        self.positive_roots
            .iter()
            .map(|pr| x.dot(&pr.coroot) * y.dot(&pr.coroot))
            .sum()
    }

    /// Gram matrix of [`Self::form`].
    pub fn form_matrix(&self) -> &[Vec<i64>] {
        &self.form
    }

    /// `a[i][j] = <alpha_j, alpha_i^v>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple_coroots
            .iter()
            .map(|cv| self.simple_roots.iter().map(|r| r.dot(cv)).collect())
            .collect()
    }

    pub fn check_dim(&self, w: &Weight) -> Result<()> {
        if w.len() != self.lattice_rank {
            return Err(Error::DimensionMismatch {
                expected: self.lattice_rank,
                got: w.len(),
            });
        }
        Ok(())
    }

    /// Pairings with all simple coroots.
    pub fn simple_pairings(&self, w: &Weight) -> Vec<i64> {
        self.simple_coroots.iter().map(|c| w.dot(c)).collect()
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        self.simple_coroots.iter().all(|c| w.dot(c) >= 0)
    }

    pub fn require_dominant(&self, w: &Weight) -> Result<()> {
        self.check_dim(w)?;
        if !self.is_dominant(w) {
            return Err(Error::NotDominant(self.format_weight(w)));
        }
        Ok(())
    }

    /// Index into [`Self::positive_roots`] and sign (+1 / -1) of a root.
    pub fn find_root(&self, beta: &Weight) -> Option<(usize, i64)> {
        if let Some(&i) = self.root_index.get(beta) {
            return Some((i, 1));
        }
        self.root_index.get(&-beta).map(|&i| (i, -1))
    }

    pub fn is_positive_root(&self, beta: &Weight) -> bool {
        self.root_index.contains_key(beta)
    }

    /// Coroot of an arbitrary (positive or negative) root.
    pub fn coroot_of(&self, beta: &Weight) -> Result<Weight> {
        let (i, sign) = self
            .find_root(beta)
            .ok_or_else(|| Error::NotARoot(beta.to_string()))?;
        Ok(self.positive_roots[i].coroot.scaled(sign))
    }

    /// `<lambda, beta^v>` for any root `beta`.
    pub fn pairing(&self, lambda: &Weight, beta: &Weight) -> Result<i64> {
        self.check_dim(lambda)?;
        Ok(lambda.dot(&self.coroot_of(beta)?))
    }

    /// Index of a simple root, if `beta` is one.
    pub fn simple_index(&self, beta: &Weight) -> Option<usize> {
        self.simple_roots.iter().position(|r| r == beta)
    }

    /// `s_i(x) = x - <x, alpha_i^v> alpha_i`
    pub fn reflect(&self, i: usize, x: &Weight) -> Weight {
        let p = x.dot(&self.simple_coroots[i]);
        x.add_scaled(&self.simple_roots[i], -p)
    }

    /// Reflection in an arbitrary root.
    pub fn reflect_in_root(&self, beta: &Weight, x: &Weight) -> Result<Weight> {
        let p = self.pairing(x, beta)?;
        Ok(x.add_scaled(beta, -p))
    }

    /// Coordinates of `x` in the basis of simple roots, or `None` when `x`
    /// lies outside the rational span of the roots.
    pub fn root_coordinates(&self, x: &Weight) -> Option<Vec<Ratio<i64>>> {
        let p = self.simple_pairings(x);
        let coeffs: Vec<Ratio<i64>> = self
            .cartan_inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&p)
                    .fold(Ratio::from_integer(0), |acc, (a, &b)| acc + *a * b)
            })
            .collect();
        // Reconstruct to detect components outside the root span.
        let den = coeffs.iter().fold(1i64, |acc, c| num_integer::lcm(acc, *c.denom()));
        let mut recon = Weight::zero(self.lattice_rank);
        for (c, r) in coeffs.iter().zip(&self.simple_roots) {
            recon = recon.add_scaled(r, (c * den).to_integer());
        }
        if recon != x.scaled(den) {
            return None;
        }
        Some(coeffs)
    }

    /// Whether `x` is a nonnegative integral combination of simple roots.
    pub fn in_positive_root_cone(&self, x: &Weight) -> bool {
        match self.root_coordinates(x) {
            Some(c) => c.iter().all(|q| q.is_integer() && *q.numer() >= 0),
            None => false,
        }
    }

    /// Dominance order `mu <= lambda`.
    pub fn dominance_le(&self, mu: &Weight, lambda: &Weight) -> bool {
        self.in_positive_root_cone(&(lambda - mu))
    }

    /// Replaces the coordinates of every type-A block by the representative
    /// with last coordinate zero.
    pub fn canonicalize(&self, w: &Weight) -> Weight {
        let mut out = w.clone();
        for f in &self.factors {
            if f.spec.family == Family::A {
                let r = f.lattice_range();
                let last = out.0[r.end - 1];
                for c in &mut out.0[r] {
                    *c -= last;
                }
            }
        }
        out
    }

    /// Converts lattice coordinates to display coordinates: epsilon
    /// coordinates for GL factors, fundamental-weight coordinates otherwise.
    pub fn to_display(&self, w: &Weight) -> Vec<i64> {
        let mut out = Vec::new();
        for f in &self.factors {
            if f.spec.is_semisimple() {
                out.extend(f.simple_range().map(|i| w.dot(&self.simple_coroots[i])));
            } else {
                out.extend_from_slice(&w.0[f.lattice_range()]);
            }
        }
        out
    }

    pub fn display_len(&self) -> usize {
        self.factors
            .iter()
            .map(|f| {
                if f.spec.is_semisimple() {
                    f.spec.semisimple_rank()
                } else {
                    f.spec.lattice_dim()
                }
            })
            .sum()
    }

    /// Inverse of [`Self::to_display`].
    pub fn from_display(&self, coords: &[i64]) -> Result<Weight> {
        if coords.len() != self.display_len() {
            return Err(Error::DimensionMismatch {
                expected: self.display_len(),
                got: coords.len(),
            });
        }
        let mut x2 = Weight::zero(self.lattice_rank);
        let mut pos = 0;
        for f in &self.factors {
            if f.spec.is_semisimple() {
                for i in f.simple_range() {
                    x2 = x2.add_scaled(&self.fundamental_x2[i], coords[pos]);
                    pos += 1;
                }
            } else {
                for k in f.lattice_range() {
                    x2.0[k] = 2 * coords[pos];
                    pos += 1;
                }
            }
        }
        if x2.0.iter().any(|c| c % 2 != 0) {
            return Err(Error::Invalid(format!(
                "{coords:?} is not in the character lattice of {}",
                self.name
            )));
        }
        Ok(Weight(x2.0.iter().map(|c| c / 2).collect()))
    }

    /// Fundamental-weight coordinates of one factor (`None` for GL).
    pub fn fundamental_coords(&self, w: &Weight, factor: usize) -> Option<Vec<i64>> {
        let f = &self.factors[factor];
        f.spec
            .is_semisimple()
            .then(|| f.simple_range().map(|i| w.dot(&self.simple_coroots[i])).collect())
    }

    /// The fundamental weight `omega_i` (0-based global index), when it lies
    /// in the lattice.
    pub fn fundamental_weight(&self, i: usize) -> Result<Weight> {
        let mut coords = vec![0; self.display_len()];
        let mut pos = 0;
        for f in &self.factors {
            if f.spec.is_semisimple() {
                for j in f.simple_range() {
                    if j == i {
                        coords[pos] = 1;
                    }
                    pos += 1;
                }
            } else {
                pos += f.spec.lattice_dim();
            }
        }
        if !coords.contains(&1) {
            return Err(Error::SimpleIndexOutOfRange {
                index: i + 1,
                rank: self.rank(),
            });
        }
        self.from_display(&coords)
    }

    /// Weight literal such as `C2:[0,1]` or `GL3xGL3:(3,1,0)x(2,1,1)`.
    pub fn format_weight(&self, w: &Weight) -> String {
        let parts: Vec<String> = self
            .factors
            .iter()
            .enumerate()
            .map(|(fi, f)| {
                if let Some(c) = self.fundamental_coords(w, fi) {
                    format!("[{}]", join(&c))
                } else {
                    format!("({})", join(&w.0[f.lattice_range()]))
                }
            })
            .collect();
        format!("{}:{}", self.name, parts.join("x"))
    }

    /// `(height, display coordinates)` sort key used for canonical output.
    pub fn height_key(&self, w: &Weight) -> (i64, Vec<i64>) {
        (w.dot(&self.two_rho_check), self.to_display(w))
    }

    /// Product datum `self x self`.
    pub fn squared(&self) -> Result<RootDatum> {
        let specs: Vec<FactorSpec> = self
            .factors
            .iter()
            .chain(self.factors.iter())
            .map(|f| f.spec)
            .collect();
        RootDatum::new(&specs)
    }

    /// Returns the dominant point of the Weyl orbit of `lambda` together with
    /// a Weyl element `w` satisfying `w . lambda = bar(lambda)`.
    pub fn dominant_representative(
        &self,
        lambda: &Weight,
    ) -> Result<(Weight, crate::weyl::WeylElement)> {
        self.check_dim(lambda)?;
        let mut x = lambda.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..self.rank()).find(|&i| x.dot(&self.simple_coroots[i]) < 0) {
            x = self.reflect(i, &x);
            word.push(i);
        }
        // x = s_{ik} ... s_{i1} lambda, so the element is the reversed word.
        word.reverse();
        let w = crate::weyl::WeylElement::from_word(self, &word)?;
        Ok((x, w))
    }

    /// Dominant point of the Weyl orbit, without tracking the element.
    pub fn dominant(&self, lambda: &Weight) -> Weight {
        let mut x = lambda.clone();
        while let Some(i) = (0..self.rank()).find(|&i| x.dot(&self.simple_coroots[i]) < 0) {
            x = self.reflect(i, &x);
        }
        x
    }
}

fn join(c: &[i64]) -> String {
    c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Reflection closure of the simple roots inside the positive roots:
/// `s_i` permutes the positive roots other than `alpha_i`.
fn close_positive_roots(simple: &[Weight], coroots: &[Weight]) -> Vec<PositiveRoot> {
    let n = simple.len();
    let mut seen: HashMap<Weight, usize> = HashMap::new();
    let mut out: Vec<PositiveRoot> = Vec::new();
    let mut queue = VecDeque::new();
    for i in 0..n {
        let mut coeffs = vec![0; n];
        coeffs[i] = 1;
        let pr = PositiveRoot {
            root: simple[i].clone(),
            coroot: coroots[i].clone(),
            coefficients: coeffs,
        };
        seen.insert(pr.root.clone(), out.len());
        queue.push_back(out.len());
        out.push(pr);
    }
    while let Some(idx) = queue.pop_front() {
        for j in 0..n {
            let beta = out[idx].clone();
            if beta.root == simple[j] {
                continue;
            }
            let p = beta.root.dot(&coroots[j]);
            if p == 0 {
                continue;
            }
            let root = beta.root.add_scaled(&simple[j], -p);
            if seen.contains_key(&root) {
                continue;
            }
            let q = simple[j].dot(&beta.coroot);
            let coroot = beta.coroot.add_scaled(&coroots[j], -q);
            let mut coefficients = beta.coefficients.clone();
            coefficients[j] -= p;
            seen.insert(root.clone(), out.len());
            queue.push_back(out.len());
            out.push(PositiveRoot {
                root,
                coroot,
                coefficients,
            });
        }
    }
    out.sort_by(|a, b| {
        a.height()
            .cmp(&b.height())
            .then_with(|| b.coefficients.cmp(&a.coefficients))
    });
    out
}

/// Exact inverse of a square integer matrix.
fn invert_rational(m: &[Vec<i64>]) -> Option<Vec<Vec<Ratio<i64>>>> {
    let n = m.len();
    let zero = Ratio::from_integer(0);
    let one = Ratio::from_integer(1);
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Ratio<i64>> = row.iter().map(|&x| Ratio::from_integer(x)).collect();
            r.extend((0..n).map(|j| if i == j { one } else { zero }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != zero)?;
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && a[r][col] != zero {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}
