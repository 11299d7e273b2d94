//! Weyl group elements stored as integer action matrices on the lattice.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::rootlat::{Family, RootDatum, Weight};

/// Default bound on full Weyl group enumeration.
pub const DEFAULT_WEYL_CAP: u128 = 10_080;

#[derive(Debug, Clone)]
pub struct WeylElement {
    dim: usize,
    matrix: Vec<i64>,
    inverse: Vec<i64>,
    length: usize,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.length
            .cmp(&other.length)
            .then_with(|| other.matrix.cmp(&self.matrix))
    }
}

fn identity_matrix(d: usize) -> Vec<i64> {
    let mut m = vec![0; d * d];
    for i in 0..d {
        m[i * d + i] = 1;
    }
    m
}

fn mat_mul(d: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; d * d];
    for i in 0..d {
        for k in 0..d {
            let aik = a[i * d + k];
            if aik == 0 {
                continue;
            }
            for j in 0..d {
                out[i * d + j] += aik * b[k * d + j];
            }
        }
    }
    out
}

/// Matrix of `x -> x - <x, coroot> root`.
fn reflection_matrix(d: usize, root: &Weight, coroot: &Weight) -> Vec<i64> {
    let mut m = identity_matrix(d);
    for i in 0..d {
        for j in 0..d {
            m[i * d + j] -= root.0[i] * coroot.0[j];
        }
    }
    m
}

fn apply(d: usize, m: &[i64], x: &Weight) -> Weight {
    Weight(
        (0..d)
            .map(|i| (0..d).map(|j| m[i * d + j] * x.0[j]).sum())
            .collect(),
    )
}

impl WeylElement {
    fn from_parts(datum: &RootDatum, matrix: Vec<i64>, inverse: Vec<i64>) -> Self {
        let d = datum.lattice_rank();
        let length = datum
            .positive_roots()
            .iter()
            .filter(|pr| !datum.is_positive_root(&apply(d, &matrix, &pr.root)))
            .count();
        WeylElement {
            dim: d,
            matrix,
            inverse,
            length,
        }
    }

    pub fn identity(datum: &RootDatum) -> Self {
        let d = datum.lattice_rank();
        WeylElement {
            dim: d,
            matrix: identity_matrix(d),
            inverse: identity_matrix(d),
            length: 0,
        }
    }

    pub fn simple_reflection(datum: &RootDatum, i: usize) -> Result<Self> {
        let root = datum.simple_root(i)?;
        let m = reflection_matrix(datum.lattice_rank(), root, &datum.simple_coroots()[i]);
        Ok(Self::from_parts(datum, m.clone(), m))
    }

    /// Reflection `s_beta` in any root.
    pub fn reflection(datum: &RootDatum, beta: &Weight) -> Result<Self> {
        let coroot = datum.coroot_of(beta)?;
        let m = reflection_matrix(datum.lattice_rank(), beta, &coroot);
        Ok(Self::from_parts(datum, m.clone(), m))
    }

    /// `s_{i1} s_{i2} ... s_{ik}` for 0-based simple indices.
    pub fn from_word(datum: &RootDatum, word: &[usize]) -> Result<Self> {
        let d = datum.lattice_rank();
        let mut m = identity_matrix(d);
        let mut inv = identity_matrix(d);
        for &i in word {
            let root = datum.simple_root(i)?;
            let s = reflection_matrix(d, root, &datum.simple_coroots()[i]);
            m = mat_mul(d, &m, &s);
            inv = mat_mul(d, &s, &inv);
        }
        Ok(Self::from_parts(datum, m, inv))
    }

    /// Coordinate permutation of a datum made of a single GL factor:
    /// `perm[i]` (0-based) is the position that coordinate `i` moves to.
    pub fn permutation(datum: &RootDatum, perm: &[usize]) -> Result<Self> {
        let factors = datum.factors();
        if factors.len() != 1 || factors[0].spec.family != Family::GL {
            return Err(Error::Invalid(format!(
                "coordinate permutations are only Weyl elements of a single GL factor, not {}",
                datum.name()
            )));
        }
        let d = datum.lattice_rank();
        check_permutation(perm, d)?;
        let mut m = vec![0; d * d];
        let mut inv = vec![0; d * d];
        for (i, &p) in perm.iter().enumerate() {
            m[p * d + i] = 1;
            inv[i * d + p] = 1;
        }
        Ok(Self::from_parts(datum, m, inv))
    }

    pub fn act(&self, x: &Weight) -> Weight {
        apply(self.dim, &self.matrix, x)
    }

    pub fn act_checked(&self, datum: &RootDatum, x: &Weight) -> Result<Weight> {
        if self.dim != datum.lattice_rank() {
            return Err(Error::DatumMismatch(format!(
                "Weyl element acts on rank {} lattice, datum {} has rank {}",
                self.dim,
                datum.name(),
                datum.lattice_rank()
            )));
        }
        datum.check_dim(x)?;
        Ok(self.act(x))
    }

    pub fn act_inverse(&self, x: &Weight) -> Weight {
        apply(self.dim, &self.inverse, x)
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == identity_matrix(self.dim)
    }

    /// Row-major `dim x dim` matrix on lattice coordinates.
    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Recovers the argument of [`Self::permutation`] when the matrix
    /// permutes coordinates.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        let d = self.dim;
        (0..d)
            .map(|i| {
                let col: Vec<i64> = (0..d).map(|r| self.matrix[r * d + i]).collect();
                match (col.iter().filter(|&&x| x != 0).count(), col.iter().position(|&x| x == 1)) {
                    (1, Some(r)) => Some(r),
                    _ => None,
                }
            })
            .collect()
    }

    pub fn inverse(&self, datum: &RootDatum) -> Self {
        Self::from_parts(datum, self.inverse.clone(), self.matrix.clone())
    }

    /// `self * other`, acting as `other` first.
    pub fn compose(&self, datum: &RootDatum, other: &Self) -> Self {
        let d = self.dim;
        Self::from_parts(
            datum,
            mat_mul(d, &self.matrix, &other.matrix),
            mat_mul(d, &other.inverse, &self.inverse),
        )
    }

    /// `l(s_i w) = l(w) + 1`, decided by `w^{-1} alpha_i > 0`.
    pub fn has_ascent(&self, datum: &RootDatum, i: usize) -> Result<bool> {
        let alpha = datum.simple_root(i)?;
        Ok(datum.is_positive_root(&self.act_inverse(alpha)))
    }

    /// A reduced word (0-based simple indices), obtained by repeatedly
    /// stripping a left descent.
    pub fn word(&self, datum: &RootDatum) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length);
        let mut cur = self.clone();
        while cur.length > 0 {
            let i = (0..datum.rank())
                .find(|&i| !cur.has_ascent(datum, i).unwrap_or(true))
                .expect("nonidentity element has a left descent");
            word.push(i);
            let s = WeylElement::simple_reflection(datum, i).expect("valid index");
            cur = s.compose(datum, &cur);
        }
        word
    }

    /// Literal such as `s1*s2*s1`, or `e` for the identity.
    pub fn format(&self, datum: &RootDatum) -> String {
        let w = self.word(datum);
        if w.is_empty() {
            return "e".to_string();
        }
        w.iter()
            .map(|i| format!("s{}", i + 1))
            .collect::<Vec<_>>()
            .join("*")
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::Invalid(format!(
            "permutation has {} letters, expected {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::Invalid(format!("{perm:?} is not a permutation")));
        }
        seen[p] = true;
    }
    Ok(())
}

/// Weyl orbit of `lambda` by breadth-first closure under simple reflections.
pub fn orbit(datum: &RootDatum, lambda: &Weight) -> Result<BTreeSet<Weight>> {
    orbit_capped(datum, lambda, u128::MAX)
}

pub fn orbit_capped(datum: &RootDatum, lambda: &Weight, cap: u128) -> Result<BTreeSet<Weight>> {
    datum.check_dim(lambda)?;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(lambda.clone());
    queue.push_back(lambda.clone());
    while let Some(x) = queue.pop_front() {
        for i in 0..datum.rank() {
            if x.dot(&datum.simple_coroots()[i]) == 0 {
                continue;
            }
            let y = datum.reflect(i, &x);
            if seen.insert(y.clone()) {
                if seen.len() as u128 > cap {
                    return Err(Error::CapExceeded {
                        what: "Weyl orbit",
                        needed: seen.len() as u128,
                        cap,
                    });
                }
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

pub fn longest_element(datum: &RootDatum) -> WeylElement {
    let (_, w) = datum
        .dominant_representative(&-datum.two_rho())
        .expect("dimension matches");
    w
}

/// All Weyl group elements, sorted by length; refuses groups above `cap`.
pub fn elements(datum: &RootDatum, cap: u128) -> Result<Vec<WeylElement>> {
    if datum.weyl_order() > cap {
        return Err(Error::CapExceeded {
            what: "Weyl group enumeration",
            needed: datum.weyl_order(),
            cap,
        });
    }
    let gens: Vec<WeylElement> = (0..datum.rank())
        .map(|i| WeylElement::simple_reflection(datum, i))
        .collect::<Result<_>>()?;
    let id = WeylElement::identity(datum);
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(id.matrix.clone());
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for s in &gens {
            let sw = s.compose(datum, &w);
            if seen.insert(sw.matrix.clone()) {
                out.push(sw.clone());
                queue.push_back(sw);
            }
        }
    }
    out.sort();
    Ok(out)
}
