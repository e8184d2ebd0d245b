//! Young diagrams, p-cores and the block decomposition of partitions of `d`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A Young diagram, stored as its weakly decreasing list of positive parts.
///
/// The derived ordering is lexicographic on parts; the canonical listing
/// order used for tables is the reverse of it (largest first).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validating constructor. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::PartitionSyntax(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition by sorting arbitrary part sizes and dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of boxes.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `k` (0-based), zero past the end.
    pub fn part(&self, k: usize) -> usize {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition(
            (0..cols)
                .map(|j| self.0.iter().take_while(|&&r| r > j).count())
                .collect(),
        )
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Dominance order `self ⊵ other` (for equal weights).
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0, 0);
        for k in 0..self.len().max(other.len()) {
            a += self.part(k);
            b += other.part(k);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Every part multiplied by `k`.
    pub fn scaled(&self, k: usize) -> Partition {
        Partition(self.0.iter().map(|x| x * k).collect())
    }

    /// Hook length of cell `(i, j)` (0-based row and column).
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        let conj_j = self.0.iter().take_while(|&&r| r > j).count();
        self.0[i] - j + conj_j - i - 1
    }

    /// All hook lengths, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.weight());
        for (i, &r) in self.0.iter().enumerate() {
            for j in 0..r {
                out.push(r - j + conj.0[j] - i - 1);
            }
        }
        out
    }

    /// Every rim hook of length `len`, returned as the diagram left after
    /// removing it together with its leg length (rows spanned minus one).
    pub fn rim_hooks(&self, len: usize) -> Vec<(Partition, usize)> {
        if len == 0 {
            return Vec::new();
        }
        let conj = self.conjugate();
        let mut out = Vec::new();
        for (i, &r) in self.0.iter().enumerate() {
            for j in 0..r {
                if r - j + conj.0[j] - i - 1 != len {
                    continue;
                }
                let last = conj.0[j] - 1;
                let mut mu = self.0.clone();
                for row in i..last {
                    mu[row] = self.0[row + 1] - 1;
                }
                mu[last] = j;
                out.push((Partition::new(mu).expect("rim hook removal"), last - i));
            }
        }
        out
    }

    /// True when no hook length is divisible by `p`.
    pub fn is_p_core(&self, p: u32) -> bool {
        self.hook_lengths().iter().all(|&h| h % p as usize != 0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `[2,1,1]`; whitespace is ignored and `[]` is the empty diagram.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::PartitionSyntax(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(bad)?;
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| x.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(bad());
        }
        Partition::new(parts).map_err(|_| bad())
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `d`, largest first in lexicographic order.
pub fn enumerate_partitions(d: usize) -> Vec<Partition> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for k in (1..=rem.min(max)).rev() {
            cur.push(k);
            go(rem - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `d` with at most `rows` parts, in the same order.
pub fn partitions_with_rows(d: usize, rows: usize) -> Vec<Partition> {
    enumerate_partitions(d)
        .into_iter()
        .filter(|l| l.len() <= rows)
        .collect()
}

/// Compositions of `d` into exactly `n` nonnegative parts, in reverse
/// lexicographic order (so `(d,0,..,0)` comes first).
pub fn compositions(d: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(rem);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in (0..=rem).rev() {
            cur.push(k);
            go(rem - k, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(d, n, &mut Vec::new(), &mut out);
    out
}

/// p-core of `λ` and the number of rim p-hooks removed, via beta-sets.
pub fn p_core(lambda: &Partition, p: u32) -> (Partition, usize) {
    let p = p as usize;
    let r = lambda.len();
    if r == 0 {
        return (Partition::empty(), 0);
    }
    let beta: Vec<usize> = (0..r).map(|k| lambda.0[k] + (r - 1 - k)).collect();
    let mut counts = vec![0usize; p];
    let mut level_sum = 0usize;
    for &b in &beta {
        counts[b % p] += 1;
        level_sum += b / p;
    }
    let mut settled = Vec::with_capacity(r);
    let mut settled_sum = 0usize;
    for (runner, &c) in counts.iter().enumerate() {
        for level in 0..c {
            settled.push(runner + p * level);
            settled_sum += level;
        }
    }
    settled.sort_unstable_by(|a, b| b.cmp(a));
    let parts = settled
        .iter()
        .enumerate()
        .map(|(k, &b)| b - (r - 1 - k))
        .collect();
    (Partition::new(parts).expect("abacus core"), level_sum - settled_sum)
}

/// p-core by repeatedly removing the first rim p-hook found. Test oracle
/// for [`p_core`].
pub fn p_core_naive(lambda: &Partition, p: u32) -> (Partition, usize) {
    let mut cur = lambda.clone();
    let mut w = 0;
    while let Some((next, _)) = cur.rim_hooks(p as usize).into_iter().next() {
        cur = next;
        w += 1;
    }
    (cur, w)
}

/// Partitions of `d` grouped by p-core.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockTable {
    pub p: u32,
    pub d: usize,
    pub entries: BTreeMap<Partition, Vec<Partition>>,
}

impl BlockTable {
    /// Cores in canonical (largest first) order.
    pub fn cores(&self) -> Vec<&Partition> {
        self.entries.keys().rev().collect()
    }

    pub fn fiber(&self, core: &Partition) -> Option<&[Partition]> {
        self.entries.get(core).map(Vec::as_slice)
    }

    /// A block is basic when its core has full weight `d`; its fiber is then
    /// the core alone.
    pub fn is_basic_block(&self, core: &Partition) -> bool {
        self.fiber(core)
            .is_some_and(|f| f.len() == 1 && &f[0] == core)
    }
}

pub fn blocks(d: usize, p: u32) -> BlockTable {
    let mut entries: BTreeMap<Partition, Vec<Partition>> = BTreeMap::new();
    for lambda in enumerate_partitions(d) {
        let (core, _) = p_core(&lambda, p);
        entries.entry(core).or_default().push(lambda);
    }
    BlockTable { p, d, entries }
}

/// λ is a p-core whose block among partitions of its weight is `{λ}`.
pub fn is_basic(lambda: &Partition, p: u32) -> bool {
    if !lambda.is_p_core(p) {
        return false;
    }
    enumerate_partitions(lambda.weight())
        .iter()
        .all(|mu| mu == lambda || p_core(mu, p).0 != *lambda)
}

/// Basic diagrams of weight `d`, in canonical order.
pub fn basic_diagrams(d: usize, p: u32) -> Vec<Partition> {
    enumerate_partitions(d)
        .into_iter()
        .filter(|l| is_basic(l, p))
        .collect()
}
