//! Partitions, rectangular tableaux, symmetric group characters and
//! Kronecker coefficients.
//!
//! The tableau rule: fill an `m x n` grid with the parts of `gamma` (padded
//! by zeros) so that entries weakly decrease along rows and columns; the row
//! sums `alpha` and column sums `beta` then satisfy `N(alpha, beta, gamma) > 0`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};

/// Largest `n` for which Kronecker coefficients are computed by default.
pub const DEFAULT_KRONECKER_CAP: u32 = 14;

/// Default bound on the number of arrangements produced by [`all_fillings`].
pub const DEFAULT_FILLING_CAP: u128 = 1_000_000;

/// Weakly decreasing sequence of positive integers; zero parts are dropped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn padded(&self, len: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(len.max(v.len()), 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|k| self.0.iter().filter(|&&p| p >= k).count() as u32)
                .collect(),
        )
    }

    /// All partitions of `n`, in decreasing lexicographic order.
    pub fn all(n: u32) -> Vec<Partition> {
        Self::bounded(n, usize::MAX)
    }

    /// Partitions of `n` with at most `max_len` parts.
    pub fn bounded(n: u32, max_len: usize) -> Vec<Partition> {
        fn rec(rest: u32, cap: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if cur.len() == max_len {
                return;
            }
            for p in (1..=cap.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p, max_len, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// `z_mu = prod i^{m_i} m_i!`, the centralizer order of the class.
    pub fn centralizer_order(&self) -> u128 {
        let mut counts: HashMap<u32, u32> = HashMap::new();
        for &p in &self.0 {
            *counts.entry(p).or_default() += 1;
        }
        counts
            .iter()
            .map(|(&i, &m)| (i as u128).pow(m) * (1..=m as u128).product::<u128>())
            .product()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// `[4,3,3,2,1,1]`, with `a^k` for `k` repeated parts (`[2,1^4]`).
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .trim_start_matches(['[', '('])
            .trim_end_matches([']', ')']);
        let mut parts = Vec::new();
        for item in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (base, exp) = match item.split_once('^') {
                Some((b, e)) => (b, e),
                None => (item, "1"),
            };
            let base: u32 = base
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad partition part `{item}`")))?;
            let exp: usize = exp
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{item}`")))?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts)
    }
}

/// An `m x n` grid of nonnegative integers, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: usize,
    cols: usize,
    cells: Vec<u32>,
}

impl Tableau {
    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Invalid("ragged tableau rows".into()));
        }
        Ok(Tableau {
            rows: rows.len(),
            cols,
            cells: rows.concat(),
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Tableau {
            rows,
            cols,
            cells: vec![0; rows * cols],
        }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.cells[i * self.cols + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.cells.chunks(self.cols.max(1)).map(<[u32]>::to_vec).collect()
    }

    pub fn cells(&self) -> &[u32] {
        &self.cells
    }

    /// Weakly decreasing along every row and every column.
    pub fn is_monotone(&self) -> bool {
        (0..self.rows).all(|i| {
            (0..self.cols).all(|j| {
                (j == 0 || self.get(i, j) <= self.get(i, j - 1))
                    && (i == 0 || self.get(i, j) <= self.get(i - 1, j))
            })
        })
    }

    /// Multiset of entries as a partition.
    pub fn content(&self) -> Partition {
        Partition::from_unsorted(self.cells.clone())
    }
}

/// Row sums and column sums.
pub fn tableau_sums(t: &Tableau) -> (Vec<u32>, Vec<u32>) {
    let rows = (0..t.rows).map(|i| (0..t.cols).map(|j| t.get(i, j)).sum()).collect();
    let cols = (0..t.cols).map(|j| (0..t.rows).map(|i| t.get(i, j)).sum()).collect();
    (rows, cols)
}

fn check_fits(gamma: &Partition, m: usize, n: usize) -> Result<()> {
    if gamma.length() > m * n {
        return Err(Error::Invalid(format!(
            "{gamma} has {} parts, more than the {m}x{n} = {} cells",
            gamma.length(),
            m * n
        )));
    }
    Ok(())
}

/// The sorted parts of `gamma` placed row-major; always monotone.
pub fn canonical_filling(gamma: &Partition, m: usize, n: usize) -> Result<Tableau> {
    check_fits(gamma, m, n)?;
    Ok(Tableau {
        rows: m,
        cols: n,
        cells: gamma.padded(m * n),
    })
}

/// Every monotone filling of an `m x n` grid by the parts of `gamma`.
///
/// Cells are filled column by column; each cell is bounded above by its
/// upper and left neighbours and by the `k`-th largest part, where `k` is the
/// size of the rectangle it closes.
pub fn monotone_fillings(gamma: &Partition, m: usize, n: usize) -> Result<Vec<Tableau>> {
    check_fits(gamma, m, n)?;
    let padded = gamma.padded(m * n);
    let mut values: Vec<u32> = padded.clone();
    values.dedup();
    let mut counts: Vec<usize> = values
        .iter()
        .map(|v| padded.iter().filter(|p| *p == v).count())
        .collect();

    struct Search<'a> {
        m: usize,
        n: usize,
        values: &'a [u32],
        sorted: &'a [u32],
        grid: Vec<u32>,
        out: Vec<Tableau>,
    }

    fn step(s: &mut Search<'_>, counts: &mut [usize], pos: usize) {
        let (m, n) = (s.m, s.n);
        if pos == m * n {
            s.out.push(Tableau {
                rows: m,
                cols: n,
                cells: s.grid.clone(),
            });
            return;
        }
        let (j, i) = (pos / m, pos % m);
        let mut bound = s.sorted[(i + 1) * (j + 1) - 1];
        if i > 0 {
            bound = bound.min(s.grid[(i - 1) * n + j]);
        }
        if j > 0 {
            bound = bound.min(s.grid[i * n + j - 1]);
        }
        for k in 0..s.values.len() {
            let v = s.values[k];
            if v > bound || counts[k] == 0 {
                continue;
            }
            counts[k] -= 1;
            s.grid[i * n + j] = v;
            step(s, counts, pos + 1);
            counts[k] += 1;
        }
    }

    let mut search = Search {
        m,
        n,
        values: &values,
        sorted: &padded,
        grid: vec![0; m * n],
        out: Vec::new(),
    };
    step(&mut search, &mut counts, 0);
    let mut out = search.out;
    out.sort();
    Ok(out)
}

/// Every arrangement of the parts of `gamma` (padded with zeros) in an
/// `m x n` grid: the extremal weights of `S_gamma(E (x) F)`.
pub fn all_fillings(gamma: &Partition, m: usize, n: usize, cap: u128) -> Result<Vec<Tableau>> {
    check_fits(gamma, m, n)?;
    let cells = m * n;
    let padded = gamma.padded(cells);
    let mut multinomial: u128 = 1;
    let mut placed: u128 = 0;
    let mut i = 0;
    while i < cells {
        let mut j = i;
        while j < cells && padded[j] == padded[i] {
            j += 1;
            placed += 1;
            multinomial = multinomial * placed / (j - i) as u128;
        }
        i = j;
    }
    if multinomial > cap {
        return Err(Error::CapExceeded {
            what: "tableau arrangements",
            needed: multinomial,
            cap,
        });
    }
    let mut arr: Vec<u32> = padded;
    arr.sort_unstable();
    let mut out = Vec::with_capacity(multinomial as usize);
    loop {
        out.push(Tableau {
            rows: m,
            cols: n,
            cells: arr.clone(),
        });
        if !next_permutation(&mut arr) {
            break;
        }
    }
    out.sort();
    Ok(out)
}

fn next_permutation(a: &mut [u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Murnaghan-Nakayama evaluation on beta-sets (first-column hook lengths):
/// removing a border strip of length `r` moves one bead from `b` to `b - r`.
struct MurnaghanNakayama {
    memo: HashMap<(Vec<u32>, Vec<u32>), i64>,
}

impl MurnaghanNakayama {
    fn eval(&mut self, beta: &[u32], cycles: &[u32], idx: usize) -> i64 {
        if idx == cycles.len() {
            return 1;
        }
        let key = (beta.to_vec(), cycles[idx..].to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let r = cycles[idx];
        let mut total = 0;
        for (pos, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let target = b - r;
            let crossed = beta.iter().filter(|&&c| c > target && c < b).count();
            let mut next: Vec<u32> = beta.to_vec();
            next[pos] = target;
            next.sort_unstable_by(|x, y| y.cmp(x));
            let sign = if crossed % 2 == 0 { 1 } else { -1 };
            total += sign * self.eval(&next, cycles, idx + 1);
        }
        self.memo.insert(key, total);
        total
    }
}

fn beta_set(lambda: &Partition) -> Vec<u32> {
    let l = lambda.length() as u32;
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + l - 1 - i as u32)
        .collect()
}

/// `chi^lambda` evaluated on the class of cycle type `ct`.
pub fn sn_character_value(lambda: &Partition, ct: &Partition) -> Result<i64> {
    if lambda.size() != ct.size() {
        return Err(Error::SizeMismatch(format!(
            "|{lambda}| = {} but |{ct}| = {}",
            lambda.size(),
            ct.size()
        )));
    }
    let mut mn = MurnaghanNakayama {
        memo: HashMap::new(),
    };
    Ok(mn.eval(&beta_set(lambda), ct.parts(), 0))
}

/// Character table of `S_n`: rows and columns indexed by [`Partition::all`].
#[derive(Debug)]
pub struct CharacterTable {
    n: u32,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    class_sizes: Vec<u128>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: u32) -> Self {
        let partitions = Partition::all(n);
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let fact = factorial(n);
        let class_sizes = partitions.iter().map(|c| fact / c.centralizer_order()).collect();
        let mut mn = MurnaghanNakayama {
            memo: HashMap::new(),
        };
        let values = partitions
            .iter()
            .map(|lam| {
                let beta = beta_set(lam);
                partitions.iter().map(|ct| mn.eval(&beta, ct.parts(), 0)).collect()
            })
            .collect();
        CharacterTable {
            n,
            partitions,
            index,
            class_sizes,
            values,
        }
    }

    /// Shared table for `S_n`, built once per process.
    pub fn cached(n: u32) -> Arc<CharacterTable> {
        static TABLES: OnceLock<Mutex<HashMap<u32, Arc<CharacterTable>>>> = OnceLock::new();
        let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(t) = tables.lock().expect("table cache poisoned").get(&n) {
            return Arc::clone(t);
        }
        let table = Arc::new(CharacterTable::new(n));
        tables
            .lock()
            .expect("table cache poisoned")
            .entry(n)
            .or_insert(table)
            .clone()
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn class_sizes(&self) -> &[u128] {
        &self.class_sizes
    }

    pub fn row(&self, lambda: &Partition) -> Option<&[i64]> {
        self.index.get(lambda).map(|&i| self.values[i].as_slice())
    }

    pub fn value(&self, lambda: &Partition, ct: &Partition) -> Option<i64> {
        Some(self.values[*self.index.get(lambda)?][*self.index.get(ct)?])
    }
}

fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

/// `N(alpha, beta, gamma)`, the multiplicity of `[gamma]` in
/// `[alpha] (x) [beta]`, as `(1/n!) sum |class| chi_alpha chi_beta chi_gamma`.
pub fn kronecker_coefficient(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    cap: u32,
) -> Result<u64> {
    let n = alpha.size();
    if beta.size() != n || gamma.size() != n {
        return Err(Error::SizeMismatch(format!(
            "Kronecker coefficient needs equal sizes, got {}, {}, {}",
            n,
            beta.size(),
            gamma.size()
        )));
    }
    if n > cap {
        return Err(Error::CapExceeded {
            what: "symmetric group degree",
            needed: n as u128,
            cap: cap as u128,
        });
    }
    let table = CharacterTable::cached(n);
    let (ra, rb, rc) = (
        table.row(alpha).expect("partition of n"),
        table.row(beta).expect("partition of n"),
        table.row(gamma).expect("partition of n"),
    );
    let total: i128 = (0..table.partitions.len())
        .map(|c| table.class_sizes[c] as i128 * ra[c] as i128 * rb[c] as i128 * rc[c] as i128)
        .sum();
    let fact = factorial(n) as i128;
    assert!(
        total % fact == 0 && total >= 0,
        "class sum {total} for {alpha} {beta} {gamma} is not a nonnegative multiple of {n}!"
    );
    Ok((total / fact) as u64)
}

/// `(alpha, beta)` pairs produced by the tableau rule for `gamma`.
pub fn kron_rule_components(
    gamma: &Partition,
    m: usize,
    n: usize,
) -> Result<BTreeSet<(Partition, Partition)>> {
    let mut out = BTreeSet::new();
    for t in monotone_fillings(gamma, m, n)? {
        let (rows, cols) = tableau_sums(&t);
        let alpha = Partition::new(rows).expect("monotone tableau has decreasing row sums");
        let beta = Partition::new(cols).expect("monotone tableau has decreasing column sums");
        out.insert((alpha, beta));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn partition_normalization_and_parsing() {
        assert_eq!(p("[2,1,0,0]"), p("[2,1]"));
        assert_eq!(p("[2,1^4]").parts(), &[2, 1, 1, 1, 1]);
        assert_eq!(p("[4,3^3,2^3,1^2]").size(), 21);
        assert!("[1,2]".parse::<Partition>().is_err());
        assert_eq!(p("[3,1]").conjugate(), p("[2,1,1]"));
        assert_eq!(Partition::all(6).len(), 11);
        assert_eq!(Partition::bounded(6, 2).len(), 4);
    }

    #[test]
    fn tableau_sums_examples() {
        let z = Tableau::zeros(2, 3);
        assert_eq!(tableau_sums(&z), (vec![0, 0], vec![0, 0, 0]));
        let t = Tableau::from_rows(&[vec![2, 1, 1], vec![1, 1, 0]]).unwrap();
        assert_eq!(tableau_sums(&t), (vec![4, 2], vec![3, 2, 1]));
        let t = Tableau::from_rows(&[vec![4, 3, 2], vec![3, 2, 1], vec![3, 2, 1]]).unwrap();
        assert_eq!(tableau_sums(&t), (vec![9, 6, 6], vec![10, 7, 4]));
    }

    #[test]
    fn monotone_fillings_examples() {
        assert_eq!(monotone_fillings(&p("[1]"), 1, 1).unwrap().len(), 1);
        let fills = monotone_fillings(&p("[2,1^4]"), 2, 3).unwrap();
        let want = Tableau::from_rows(&[vec![2, 1, 1], vec![1, 1, 0]]).unwrap();
        assert!(fills.contains(&want));
        let fills = monotone_fillings(&p("[4,3,3,2,1,1]"), 3, 3).unwrap();
        assert!(fills
            .iter()
            .any(|t| tableau_sums(t) == (vec![7, 4, 3], vec![10, 3, 1])));
        let canon = canonical_filling(&p("[4,3,3,2,1,1]"), 3, 3).unwrap();
        assert!(canon.is_monotone());
        assert!(fills.contains(&canon));
        assert!(monotone_fillings(&p("[1^5]"), 2, 2).is_err());
    }

    #[test]
    fn monotone_fillings_match_permutation_filter() {
        for (gamma, m, n) in [("[2,1,1]", 2, 2), ("[3,2,2,1]", 2, 3), ("[2,2,1,1,1]", 3, 3), ("[1^4]", 3, 3)] {
            let g = p(gamma);
            let brute: Vec<Tableau> = all_fillings(&g, m, n, DEFAULT_FILLING_CAP)
                .unwrap()
                .into_iter()
                .filter(Tableau::is_monotone)
                .collect();
            assert_eq!(monotone_fillings(&g, m, n).unwrap(), brute, "{gamma} {m}x{n}");
        }
    }

    #[test]
    fn all_fillings_examples() {
        assert_eq!(all_fillings(&p("[1]"), 1, 2, DEFAULT_FILLING_CAP).unwrap().len(), 2);
        assert_eq!(all_fillings(&p("[2,1]"), 1, 3, DEFAULT_FILLING_CAP).unwrap().len(), 6);
        let fills = all_fillings(&p("[1^4]"), 3, 3, DEFAULT_FILLING_CAP).unwrap();
        assert_eq!(fills.len(), 126);
        let first = Tableau::from_rows(&[vec![1, 1, 1], vec![1, 0, 0], vec![0, 0, 0]]).unwrap();
        let second = Tableau::from_rows(&[vec![1, 0, 1], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        assert!(fills.contains(&first) && fills.contains(&second));
        assert!(matches!(
            all_fillings(&p("[1^4]"), 3, 3, 100),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn character_values() {
        for ct in Partition::all(5) {
            assert_eq!(sn_character_value(&p("[5]"), &ct).unwrap(), 1);
            let odd = ct.parts().iter().filter(|&&c| c % 2 == 0).count() % 2;
            let sign = if odd == 0 { 1 } else { -1 };
            assert_eq!(sn_character_value(&p("[1^5]"), &ct).unwrap(), sign);
        }
        assert_eq!(sn_character_value(&p("[2,1]"), &p("[1,1,1]")).unwrap(), 2);
        assert_eq!(sn_character_value(&p("[2,1]"), &p("[3]")).unwrap(), -1);
        assert!(sn_character_value(&p("[2,1]"), &p("[2]")).is_err());
    }

    #[test]
    fn kronecker_examples() {
        let cap = DEFAULT_KRONECKER_CAP;
        for beta in Partition::all(4) {
            for gamma in Partition::all(4) {
                let n = kronecker_coefficient(&p("[4]"), &beta, &gamma, cap).unwrap();
                assert_eq!(n, u64::from(beta == gamma));
            }
        }
        assert_eq!(kronecker_coefficient(&p("[3,1]"), &p("[2,1,1]"), &p("[1^4]"), cap).unwrap(), 1);
        assert_eq!(kronecker_coefficient(&p("[2,1,1]"), &p("[2,1,1]"), &p("[1^4]"), cap).unwrap(), 0);
        assert!(kronecker_coefficient(&p("[2]"), &p("[1]"), &p("[1]"), cap).is_err());
        assert!(matches!(
            kronecker_coefficient(&p("[15]"), &p("[15]"), &p("[15]"), cap),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn rule_examples() {
        let comps = kron_rule_components(&p("[1^4]"), 2, 2).unwrap();
        assert!(comps.contains(&(p("[2,2]"), p("[2,2]"))));
        assert_eq!(
            kronecker_coefficient(&p("[2,2]"), &p("[2,2]"), &p("[1^4]"), DEFAULT_KRONECKER_CAP).unwrap(),
            1
        );
        let comps = kron_rule_components(&p("[2,1^4]"), 2, 3).unwrap();
        assert!(comps.contains(&(p("[4,2]"), p("[3,2,1]"))));
    }
}
