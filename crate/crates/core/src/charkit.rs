//! Weight multiplicities, dimensions, characters and tensor product
//! decompositions of irreducible highest-weight modules.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::rootlat::{RootDatum, Weight};
use crate::weyl;

/// Finitely supported weight multiplicities; zero entries are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Character {
    support: BTreeMap<Weight, u64>,
}

impl Character {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (Weight, u64)>>(pairs: I) -> Self {
        let mut c = Character::new();
        for (w, m) in pairs {
            c.add(w, m);
        }
        c
    }

    pub fn add(&mut self, w: Weight, m: u64) {
        if m > 0 {
            *self.support.entry(w).or_insert(0) += m;
        }
    }

    pub fn get(&self, w: &Weight) -> u64 {
        self.support.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &u64)> {
        self.support.iter()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// Total multiplicity.
    pub fn mass(&self) -> u128 {
        self.support.values().map(|&m| m as u128).sum()
    }

    pub fn sum(&self, other: &Character) -> Character {
        let mut out = self.clone();
        for (w, &m) in &other.support {
            out.add(w.clone(), m);
        }
        out
    }

    /// Character of the tensor product (convolution of weight multisets).
    pub fn product(&self, other: &Character) -> Character {
        let mut out = Character::new();
        for (a, &ma) in &self.support {
            for (b, &mb) in &other.support {
                out.add(a + b, ma * mb);
            }
        }
        out
    }

    /// Multiplicity is constant along every simple reflection.
    pub fn is_weyl_invariant(&self, datum: &RootDatum) -> bool {
        self.support.iter().all(|(w, &m)| {
            (0..datum.rank()).all(|i| self.get(&datum.reflect(i, w)) == m)
        })
    }

    pub fn into_map(self) -> BTreeMap<Weight, u64> {
        self.support
    }
}

/// Multiset of irreducible summands keyed by dominant highest weight.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Decomposition {
    summands: BTreeMap<Weight, u64>,
}

impl Decomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (Weight, u64)>>(pairs: I) -> Self {
        let mut d = Decomposition::new();
        for (w, m) in pairs {
            if m > 0 {
                *d.summands.entry(w).or_insert(0) += m;
            }
        }
        d
    }

    pub fn get(&self, w: &Weight) -> u64 {
        self.summands.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &u64)> {
        self.summands.iter()
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn weights(&self) -> BTreeSet<Weight> {
        self.summands.keys().cloned().collect()
    }

    /// `sum of mult * dim` over the summands.
    pub fn total_dimension(&self, datum: &RootDatum) -> Result<u128> {
        self.summands
            .iter()
            .map(|(w, &m)| Ok(m as u128 * dimension(datum, w)?))
            .sum()
    }

    /// Summands in canonical order: height, then display coordinates.
    pub fn sorted(&self, datum: &RootDatum) -> Vec<(Weight, u64)> {
        let mut v: Vec<_> = self.summands.iter().map(|(w, &m)| (w.clone(), m)).collect();
        v.sort_by_cached_key(|(w, _)| datum.height_key(w));
        v
    }
}

/// Dominant weights of `V(lambda)` with their multiplicities (Freudenthal).
pub fn dominant_multiplicities(datum: &RootDatum, lambda: &Weight) -> Result<BTreeMap<Weight, u64>> {
    datum.require_dominant(lambda)?;

    // Dominant weights below lambda are connected by positive-root steps.
    let mut dominant: BTreeSet<Weight> = BTreeSet::new();
    let mut queue = VecDeque::from([lambda.clone()]);
    dominant.insert(lambda.clone());
    while let Some(y) = queue.pop_front() {
        for pr in datum.positive_roots() {
            let z = &y - &pr.root;
            if datum.is_dominant(&z) && !dominant.contains(&z) {
                dominant.insert(z.clone());
                queue.push_back(z);
            }
        }
    }

    let two_rho_check = datum.two_rho_check();
    let mut order: Vec<Weight> = dominant.iter().cloned().collect();
    order.sort_by_key(|mu| (lambda - mu).dot(two_rho_check));

    let shifted = lambda + datum.two_rho();
    let mut table: BTreeMap<Weight, u64> = BTreeMap::new();
    table.insert(lambda.clone(), 1);
    for mu in order.iter().skip(1) {
        let mut num: i128 = 0;
        for pr in datum.positive_roots() {
            let mut k = 1;
            loop {
                let y = mu.add_scaled(&pr.root, k);
                let m = match table.get(&datum.dominant(&y)) {
                    Some(&m) => m,
                    None => break,
                };
                num += m as i128 * datum.form(&y, &pr.root) as i128;
                k += 1;
            }
        }
        num *= 2;
        let den = datum.form(&(lambda - mu), &(&shifted + mu)) as i128;
        if den <= 0 || num % den != 0 {
            return Err(Error::Invalid(format!(
                "Freudenthal recursion is not integral at {mu} (num {num}, den {den})"
            )));
        }
        let m = num / den;
        if m > 0 {
            table.insert(mu.clone(), m as u64);
        }
    }
    Ok(table)
}

/// Multiplicity of the weight `mu` in `V(lambda)`.
pub fn weight_multiplicity(datum: &RootDatum, lambda: &Weight, mu: &Weight) -> Result<u64> {
    datum.check_dim(mu)?;
    let table = dominant_multiplicities(datum, lambda)?;
    Ok(table.get(&datum.dominant(mu)).copied().unwrap_or(0))
}

/// Weyl dimension formula.
pub fn dimension(datum: &RootDatum, lambda: &Weight) -> Result<u128> {
    datum.require_dominant(lambda)?;
    let two_rho = datum.two_rho();
    let mut acc = Ratio::<i128>::from_integer(1);
    for pr in datum.positive_roots() {
        let rho_pair = (two_rho.dot(&pr.coroot) / 2) as i128;
        let top = lambda.dot(&pr.coroot) as i128 + rho_pair;
        acc *= Ratio::new(top, rho_pair);
    }
    debug_assert!(acc.is_integer());
    Ok(acc.to_integer() as u128)
}

/// Full weight system of `V(lambda)`.
pub fn irreducible_character(datum: &RootDatum, lambda: &Weight) -> Result<Character> {
    let table = dominant_multiplicities(datum, lambda)?;
    let mut ch = Character::new();
    for (mu, m) in table {
        for w in weyl::orbit(datum, &mu)? {
            ch.add(w, m);
        }
    }
    Ok(ch)
}

/// Moves `x` to the dominant chamber under the dot action
/// `w . x = w(x + rho) - rho`. Returns `None` when `x + rho` is singular.
pub fn dot_dominant(datum: &RootDatum, x: &Weight) -> Option<(Weight, i64)> {
    let mut x = x.clone();
    let mut sign = 1;
    loop {
        let mut moved = false;
        for i in 0..datum.rank() {
            let p = x.dot(&datum.simple_coroots()[i]);
            if p == -1 {
                return None;
            }
            if p < -1 {
                x = x.add_scaled(&datum.simple_roots()[i], -(p + 1));
                sign = -sign;
                moved = true;
                break;
            }
        }
        if !moved {
            return Some((x, sign));
        }
    }
}

/// `V(mu) (x) V(nu)` by Klimyk's formula over the weights of the smaller
/// factor.
pub fn tensor_decompose(datum: &RootDatum, mu: &Weight, nu: &Weight) -> Result<Decomposition> {
    datum.require_dominant(mu)?;
    datum.require_dominant(nu)?;
    let (big, small) = if dimension(datum, mu)? >= dimension(datum, nu)? {
        (mu, nu)
    } else {
        (nu, mu)
    };
    let ch = irreducible_character(datum, small)?;
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (delta, &m) in ch.iter() {
        if let Some((x, sign)) = dot_dominant(datum, &(big + delta)) {
            *acc.entry(x).or_insert(0) += sign * m as i64;
        }
    }
    let mut out = Decomposition::new();
    for (w, m) in acc {
        if m < 0 {
            return Err(Error::NotGenuine(datum.format_weight(&w)));
        }
        if m > 0 {
            out.summands.insert(w, m as u64);
        }
    }
    Ok(out)
}

/// Decomposes a Weyl-invariant character into irreducibles by repeatedly
/// removing the character of a maximal dominant weight (largest height,
/// then largest display coordinates).
pub fn decompose_character(datum: &RootDatum, chi: &Character) -> Result<Decomposition> {
    if !chi.is_weyl_invariant(datum) {
        return Err(Error::NotWeylInvariant);
    }
    let mut rest: BTreeMap<Weight, i64> = chi.iter().map(|(w, &m)| (w.clone(), m as i64)).collect();
    let mut out = Decomposition::new();
    loop {
        let top = rest
            .keys()
            .filter(|w| datum.is_dominant(w))
            .max_by_key(|w| datum.height_key(w))
            .cloned();
        let Some(top) = top else {
            break;
        };
        let m = rest[&top];
        for (w, mult) in irreducible_character(datum, &top)?.iter() {
            let e = rest.entry(w.clone()).or_insert(0);
            *e -= m * *mult as i64;
            if *e < 0 {
                return Err(Error::NotGenuine(datum.format_weight(w)));
            }
            if *e == 0 {
                rest.remove(w);
            }
        }
        out.summands.insert(top, m as u64);
    }
    if !rest.is_empty() {
        return Err(Error::NotGenuine("non-dominant remainder".into()));
    }
    Ok(out)
}
