//! Brute-force oracles that share no multiplicity code with the library.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, VecDeque};

use prv_core::{RootDatum, Weight};

/// Dominant weights whose display coordinates sum to at most `max_sum`.
pub fn dominant_weights(datum: &RootDatum, max_sum: i64) -> Vec<Weight> {
    let len = datum.display_len();
    let mut out = Vec::new();
    let mut cur = vec![0i64; len];
    fn rec(d: &RootDatum, pos: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if pos == cur.len() {
            if let Ok(w) = d.from_display(cur) {
                out.push(w);
            }
            return;
        }
        for v in 0..=left {
            cur[pos] = v;
            rec(d, pos + 1, left - v, cur, out);
        }
        cur[pos] = 0;
    }
    rec(datum, 0, max_sum, &mut cur, &mut out);
    out.retain(|w| datum.is_dominant(w));
    out
}

type Poly = HashMap<Weight, i64>;

/// Dot-orbit of `λ` with signs: `{ (w(λ+ρ) - ρ, (-1)^{l(w)}) }`, computed on
/// doubled coordinates by breadth-first search from the regular point
/// `2(λ+ρ)`; path parity gives the sign.
fn alternant(datum: &RootDatum, lambda: &Weight) -> Poly {
    let two_rho = datum.two_rho().clone();
    let start = datum.canonicalize(&(&lambda.scaled(2) + &two_rho));
    let mut sign: HashMap<Weight, i64> = HashMap::new();
    sign.insert(start.clone(), 1);
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        let s = sign[&x];
        for i in 0..datum.rank() {
            let y = datum.canonicalize(&datum.reflect(i, &x));
            if !sign.contains_key(&y) {
                sign.insert(y.clone(), -s);
                queue.push_back(y);
            }
        }
    }
    sign.into_iter()
        .map(|(x, s)| {
            let d = datum.canonicalize(&(&x - &two_rho));
            assert!(d.coords().iter().all(|c| c % 2 == 0), "dot orbit left the lattice");
            (Weight(d.coords().iter().map(|c| c / 2).collect()), s)
        })
        .collect()
}

/// Exact division of `f` by `1 - e^{-beta}`; panics if not exact.
fn divide(datum: &RootDatum, f: &Poly, beta: &Weight) -> Poly {
    let coroot = datum.coroot_of(beta).expect("positive root");
    let mut lines: HashMap<Weight, BTreeMap<i64, i64>> = HashMap::new();
    for (x, &c) in f {
        if c == 0 {
            continue;
        }
        let q = x.dot(&coroot).div_euclid(2);
        let base = datum.canonicalize(&x.add_scaled(beta, -q));
        *lines.entry(base).or_default().entry(q).or_default() += c;
    }
    let mut g = Poly::new();
    for (base, pts) in lines {
        let (lo, hi) = (*pts.keys().next().unwrap(), *pts.keys().last().unwrap());
        let mut acc = 0;
        for t in (lo..=hi).rev() {
            acc += pts.get(&t).copied().unwrap_or(0);
            if acc != 0 {
                g.insert(datum.canonicalize(&base.add_scaled(beta, t)), acc);
            }
        }
        assert_eq!(acc, 0, "division by 1 - e^-beta is not exact");
    }
    g
}

/// Weyl character formula: `sum_w sign(w) e^{w.λ} / prod_{β>0} (1 - e^{-β})`.
pub fn weyl_character(datum: &RootDatum, lambda: &Weight) -> BTreeMap<Weight, u64> {
    let mut f = alternant(datum, lambda);
    for beta in datum.positive_roots() {
        f = divide(datum, &f, &beta.root);
    }
    f.into_iter()
        .map(|(x, c)| {
            assert!(c > 0, "negative multiplicity {c} at {x}");
            (x, c as u64)
        })
        .collect()
}

/// Tensor product by brute force: multiply oracle characters and peel off
/// highest weights with oracle characters.
pub fn tensor_oracle(datum: &RootDatum, mu: &Weight, nu: &Weight) -> BTreeMap<Weight, u64> {
    let a = weyl_character(datum, mu);
    let b = weyl_character(datum, nu);
    let mut prod: BTreeMap<Weight, i64> = BTreeMap::new();
    for (x, &m) in &a {
        for (y, &n) in &b {
            *prod.entry(datum.canonicalize(&(x + y))).or_default() += (m * n) as i64;
        }
    }
    let mut out = BTreeMap::new();
    loop {
        prod.retain(|_, c| *c != 0);
        let Some(top) = prod
            .iter()
            .filter(|(x, _)| datum.is_dominant(x))
            .map(|(x, _)| x.clone())
            .max_by_key(|x| datum.height_key(x))
        else {
            assert!(prod.is_empty(), "non-dominant remainder");
            return out;
        };
        let c = prod[&top];
        assert!(c > 0, "negative coefficient at {top}");
        out.insert(top.clone(), c as u64);
        for (x, m) in weyl_character(datum, &top) {
            *prod.entry(x).or_default() -= c * m as i64;
        }
    }
}

/// Permutations of `0..n` in lexicographic order with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i64)>) {
        if cur.len() == n {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| cur[i] > cur[j])
                .count();
            out.push((cur.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for k in 0..n {
            if !used[k] {
                used[k] = true;
                cur.push(k);
                rec(n, cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

/// Frobenius formula: `chi^λ(μ)` is the coefficient of `x^{λ+δ}` in
/// `a_δ(x) p_μ(x)` over `l = len(λ)` variables.
pub fn frobenius_character(lambda: &[u32], mu: &[u32]) -> i64 {
    let l = lambda.len().max(1);
    let target: Vec<u32> = (0..l)
        .map(|i| lambda.get(i).copied().unwrap_or(0) + (l - 1 - i) as u32)
        .collect();
    let mut poly: HashMap<Vec<u32>, i64> = HashMap::from([(vec![0; l], 1)]);
    for &r in mu {
        let mut next: HashMap<Vec<u32>, i64> = HashMap::new();
        for (e, c) in &poly {
            for i in 0..l {
                let mut f = e.clone();
                f[i] += r;
                if f[i] <= target[i] {
                    *next.entry(f).or_default() += c;
                }
            }
        }
        poly = next;
    }
    permutations(l)
        .into_iter()
        .map(|(sigma, sign)| {
            let need: Option<Vec<u32>> = (0..l)
                .map(|i| target[i].checked_sub((l - 1 - sigma[i]) as u32))
                .collect();
            need.and_then(|e| poly.get(&e)).map_or(0, |c| sign * c)
        })
        .sum()
}

/// All distinct arrangements of `cells` values, filtered to those weakly
/// decreasing along rows and columns of an `m x n` grid.
pub fn brute_monotone(values: &[u32], m: usize, n: usize) -> Vec<Vec<Vec<u32>>> {
    let mut out = std::collections::BTreeSet::new();
    for (perm, _) in permutations(values.len()) {
        let grid: Vec<Vec<u32>> = (0..m)
            .map(|i| (0..n).map(|j| values[perm[i * n + j]]).collect())
            .collect();
        let ok = (0..m).all(|i| {
            (0..n).all(|j| {
                (j == 0 || grid[i][j] <= grid[i][j - 1]) && (i == 0 || grid[i][j] <= grid[i - 1][j])
            })
        });
        if ok {
            out.insert(grid);
        }
    }
    out.into_iter().collect()
}
