//! Combinatorial types, integer partitions, the pre-type bound and simple-dessin counts.

use std::collections::BTreeSet;

use rayon::prelude::*;
use statrs::function::gamma::ln_gamma;
use thiserror::Error;

use crate::dessin::Dessin;

pub const PRETYPE_MAX_N: usize = 12;
pub const SIMPLE_MAX_N: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("n = {n} exceeds the limit {max}")]
    SizeGuard { n: usize, max: usize },
    #[error("n must be at least 1")]
    ZeroSize,
    #[error("invalid combinatorial type: {0}")]
    InvalidType(String),
}

/// Region sizes of a dessin in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CombinatorialType {
    pub n: usize,
    pub sizes: Vec<usize>,
}

impl CombinatorialType {
    /// Validates evenness, the total `6n` and the length range `[n+2, 3n]`.
    pub fn new(n: usize, mut sizes: Vec<usize>) -> Result<Self, CombinatoricsError> {
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        if sizes.iter().any(|&s| s == 0 || s % 2 == 1) {
            return Err(CombinatoricsError::InvalidType(format!(
                "{sizes:?} has an odd or zero size"
            )));
        }
        let total: usize = sizes.iter().sum();
        if total != 6 * n {
            return Err(CombinatoricsError::InvalidType(format!(
                "{sizes:?} sums to {total}, not {}",
                6 * n
            )));
        }
        if sizes.len() < n + 2 || sizes.len() > 3 * n {
            return Err(CombinatoricsError::InvalidType(format!(
                "{sizes:?} has {} regions, outside [{}, {}]",
                sizes.len(),
                n + 2,
                3 * n
            )));
        }
        Ok(CombinatorialType { n, sizes })
    }
}

impl std::fmt::Display for CombinatorialType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(|s| s.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Sizes of the regions, sorted non-increasingly; not validated.
pub fn combinatorial_type(d: &Dessin) -> CombinatorialType {
    CombinatorialType {
        n: d.n,
        sizes: d.combinatorial_sizes(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    pub parts: Vec<usize>,
}

/// Partitions of `n` in reverse-lexicographic order: `{n}, {n-1,1}, {n-2,2}, {n-2,1,1}, ...`.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for k in (1..=max.min(rest)).rev() {
            cur.push(k);
            rec(rest - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// `p(n)` by Euler's pentagonal recurrence.
pub fn partition_count(n: usize) -> u128 {
    let mut p = vec![0u128; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut acc: i128 = 0;
        let mut k: i64 = 1;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign: i128 = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[m - g1] as i128;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                acc += sign * p[m - g2] as i128;
            }
            k += 1;
        }
        p[m] = acc as u128;
    }
    p[n]
}

/// Partitions of `n` into exactly `m` parts.
pub fn partition_count_len(n: usize, m: usize) -> u128 {
    // t[a][b] = partitions of a into exactly b parts
    let mut t = vec![vec![0u128; m + 1]; n + 1];
    t[0][0] = 1;
    for a in 1..=n {
        for b in 1..=m.min(a) {
            t[a][b] = t[a - 1][b - 1] + if a >= b { t[a - b][b] } else { 0 };
        }
    }
    t[n][m]
}

/// The closed-form bound `p(p+1)(p+2)/6 - K(n)`, with `K` evaluated term by term;
/// empty inner ranges contribute zero.
pub fn bound_formula(n: usize) -> i128 {
    let p = partition_count(n) as i128;
    p * (p + 1) * (p + 2) / 6 - k_term(n)
}

/// The triple sum `K(n)`.
pub fn k_term(n: usize) -> i128 {
    let pl = |m: usize| partition_count_len(n, m) as i128;
    let mut k = 0i128;
    for r in 1..=(n + 1) / 3 {
        let mut middle = 0i128;
        let j_hi = (n + 1 - r) / 2;
        for j in r..=j_hi {
            let i_hi = (n + 1) as isize - j as isize - r as isize;
            let inner: i128 = (j as isize..=i_hi).map(|i| pl(i as usize)).sum();
            middle += pl(j) * inner;
        }
        k += pl(r) * middle;
    }
    k
}

/// All unordered triples of partitions of `n` with at least `n + 2` parts in total,
/// and the distinct size lists they merge into.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreTypeCatalog {
    pub n: usize,
    pub triples: BTreeSet<[Partition; 3]>,
    pub merged: BTreeSet<CombinatorialType>,
}

pub fn enumerate_pretypes(n: usize) -> Result<PreTypeCatalog, CombinatoricsError> {
    if n == 0 {
        return Err(CombinatoricsError::ZeroSize);
    }
    if n > PRETYPE_MAX_N {
        return Err(CombinatoricsError::SizeGuard {
            n,
            max: PRETYPE_MAX_N,
        });
    }
    let ps = partitions(n);
    let mut triples = BTreeSet::new();
    let mut merged = BTreeSet::new();
    for a in 0..ps.len() {
        for b in a..ps.len() {
            for c in b..ps.len() {
                let len = ps[a].parts.len() + ps[b].parts.len() + ps[c].parts.len();
                if len < n + 2 {
                    continue;
                }
                let mut sizes: Vec<usize> = [&ps[a], &ps[b], &ps[c]]
                    .iter()
                    .flat_map(|p| p.parts.iter().map(|k| 2 * k))
                    .collect();
                sizes.sort_unstable_by(|x, y| y.cmp(x));
                triples.insert([ps[a].clone(), ps[b].clone(), ps[c].clone()]);
                merged.insert(CombinatorialType { n, sizes });
            }
        }
    }
    Ok(PreTypeCatalog { n, triples, merged })
}

/// Pre-types known not to occur as the type of any curve.
pub fn known_nonrealizable(n: usize) -> BTreeSet<CombinatorialType> {
    let mut out = BTreeSet::new();
    if n == 4 {
        out.insert(CombinatorialType {
            n: 4,
            sizes: vec![6, 4, 4, 4, 4, 2],
        });
    }
    out
}

/// Whether realizability of pre-types is settled for this degree.
pub fn realizability_known(n: usize) -> bool {
    (1..=4).contains(&n)
}

/// Whether `m` is the lexicographically largest matrix obtainable from its own rows by
/// permuting rows and columns; returns false as soon as a larger arrangement appears.
fn is_lexmax(m: &[Vec<u8>]) -> bool {
    let n = m.len();
    // column classes: runs of columns that are still interchangeable, in order
    fn search(m: &[Vec<u8>], used: &mut Vec<bool>, classes: &[Vec<usize>], depth: usize) -> bool {
        let n = m.len();
        if depth == n {
            return true;
        }
        let target = &m[depth];
        for r in 0..n {
            if used[r] {
                continue;
            }
            // best arrangement of row r given the classes
            let mut row = Vec::with_capacity(n);
            let mut sorted_classes = Vec::with_capacity(classes.len());
            for cls in classes {
                let mut cols = cls.clone();
                cols.sort_by(|&a, &b| m[r][b].cmp(&m[r][a]));
                row.extend(cols.iter().map(|&c| m[r][c]));
                sorted_classes.push(cols);
            }
            match row.as_slice().cmp(target.as_slice()) {
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => {
                    let mut next = Vec::new();
                    for cols in sorted_classes {
                        let mut start = 0;
                        for k in 1..=cols.len() {
                            if k == cols.len() || m[r][cols[k]] != m[r][cols[start]] {
                                next.push(cols[start..k].to_vec());
                                start = k;
                            }
                        }
                    }
                    used[r] = true;
                    let ok = search(m, used, &next, depth + 1);
                    used[r] = false;
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }
    let mut used = vec![false; n];
    let cols = m.first().map_or(0, |r| r.len());
    search(m, &mut used, &[(0..cols).collect()], 0)
}

/// Rows with sum 3 in non-increasing lexicographic order.
fn row_candidates(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    fn rec(n: usize, rest: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == n {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in (0..=rest).rev() {
            cur.push(v);
            rec(n, rest - v, cur, out);
            cur.pop();
        }
    }
    rec(n, 3, &mut Vec::new(), &mut out);
    out
}

/// Count lexmax representatives among matrices with rows and columns both in
/// non-increasing lexicographic order, extending a fixed prefix of rows.
fn count_from(n: usize, rows: &[Vec<u8>], prefix: Vec<Vec<u8>>) -> u64 {
    fn rec(
        n: usize,
        rows: &[Vec<u8>],
        m: &mut Vec<Vec<u8>>,
        colsum: &mut Vec<u8>,
        tie: &mut Vec<bool>,
    ) -> u64 {
        if m.len() == n {
            return if colsum.iter().all(|&c| c == 3) && is_lexmax(m) {
                1
            } else {
                0
            };
        }
        let left = (n - m.len()) as u8;
        let mut total = 0;
        for row in rows {
            if row > m.last().unwrap() {
                continue;
            }
            // column capacities and column order among tied columns
            let mut ok = true;
            for j in 0..n {
                if colsum[j] + row[j] > 3 || 3 - colsum[j] - row[j] > 3 * (left - 1) {
                    ok = false;
                    break;
                }
                if j + 1 < n && tie[j] && row[j] < row[j + 1] {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            let saved = tie.clone();
            for j in 0..n {
                colsum[j] += row[j];
                if j + 1 < n && row[j] != row[j + 1] {
                    tie[j] = false;
                }
            }
            m.push(row.clone());
            // a canonical matrix has a canonical set of leading rows
            if m.len() == n || is_lexmax(m) {
                total += rec(n, rows, m, colsum, tie);
            }
            m.pop();
            for j in 0..n {
                colsum[j] -= row[j];
            }
            *tie = saved;
        }
        total
    }
    let mut colsum = vec![0u8; n];
    let mut tie = vec![true; n];
    for (k, row) in prefix.iter().enumerate() {
        if k > 0 && row > &prefix[k - 1] {
            return 0;
        }
        for j in 0..n {
            if j + 1 < n && tie[j] && row[j] < row[j + 1] {
                return 0;
            }
        }
        for j in 0..n {
            colsum[j] += row[j];
            if j + 1 < n && row[j] != row[j + 1] {
                tie[j] = false;
            }
        }
    }
    if colsum.iter().any(|&c| c > 3) {
        return 0;
    }
    let mut m = prefix;
    rec(n, rows, &mut m, &mut colsum, &mut tie)
}

/// Number of `n x n` non-negative integer matrices with all row and column sums 3,
/// up to independent row and column permutations.
pub fn count_simple(n: usize) -> Result<u64, CombinatoricsError> {
    if n == 0 {
        return Err(CombinatoricsError::ZeroSize);
    }
    if n > SIMPLE_MAX_N {
        return Err(CombinatoricsError::SizeGuard {
            n,
            max: SIMPLE_MAX_N,
        });
    }
    let rows = row_candidates(n);
    // the first row of a column-sorted matrix is itself non-increasing
    let firsts: Vec<&Vec<u8>> = rows
        .iter()
        .filter(|r| r.windows(2).all(|w| w[0] >= w[1]))
        .collect();
    let mut prefixes = Vec::new();
    for f in firsts {
        if n == 1 {
            prefixes.push(vec![f.clone()]);
            continue;
        }
        for s in &rows {
            if s <= f {
                prefixes.push(vec![f.clone(), s.clone()]);
            }
        }
    }
    Ok(prefixes
        .into_par_iter()
        .map(|p| count_from(n, &rows, p))
        .sum())
}

/// `(3n)! / (6^{2n} (n!)^2) * exp(2 - 2/(9n))`.
pub fn simple_asymptotic(n: usize) -> f64 {
    let nf = n as f64;
    (ln_gamma(3.0 * nf + 1.0) - 2.0 * nf * 6f64.ln() - 2.0 * ln_gamma(nf + 1.0) + 2.0
        - 2.0 / (9.0 * nf))
        .exp()
}
