//! Littlewood–Richardson coefficients by lattice-word tableau enumeration.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use crate::partitions::{enumerate_partitions, Partition};

type Key = (Partition, Partition, Partition);

fn cache() -> &'static Mutex<HashMap<Key, u64>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, u64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `c^λ_{μν}`: number of semistandard fillings of `λ/μ` with content `ν`
/// whose right-to-left, top-to-bottom reading word is a lattice word.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.weight() != mu.weight() + nu.weight() || !lambda.contains(mu) || !lambda.contains(nu)
    {
        return 0;
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(&v) = cache().lock().expect("lr cache").get(&key) {
        return v;
    }
    let v = lr_coeff_uncached(lambda, mu, nu);
    cache().lock().expect("lr cache").insert(key, v);
    v
}

/// Same as [`lr_coeff`] without consulting the shared cache.
pub fn lr_coeff_uncached(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.weight() != mu.weight() + nu.weight() || !lambda.contains(mu) {
        return 0;
    }
    // Cells in reading order: rows top to bottom, each row right to left.
    let mut cells = Vec::new();
    for r in 0..lambda.len() {
        for c in (mu.part(r)..lambda.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let rows = lambda.len();
    let width = lambda.part(0);
    let mut grid = vec![0usize; rows * width];
    let mut count = vec![0usize; nu.len() + 1];
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut [usize],
        width: usize,
        mu: &Partition,
        nu: &Partition,
        count: &mut [usize],
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        // Row weak increase: value ≤ right neighbour (already placed).
        let hi = if c + 1 < width && grid[r * width + c + 1] != 0 {
            grid[r * width + c + 1]
        } else {
            nu.len()
        };
        // Column strict increase against the cell above, if it is in the skew shape.
        let lo = if r > 0 && c >= mu.part(r - 1) {
            grid[(r - 1) * width + c] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in lo..=hi {
            if count[v] >= nu.part(v - 1) {
                continue;
            }
            if v > 1 && count[v] + 1 > count[v - 1] {
                continue;
            }
            count[v] += 1;
            grid[r * width + c] = v;
            total += go(k + 1, cells, grid, width, mu, nu, count);
            grid[r * width + c] = 0;
            count[v] -= 1;
        }
        total
    }
    go(0, &cells, &mut grid, width, mu, nu, &mut count)
}

/// Expansion `s_μ · s_ν = Σ c^λ_{μν} s_λ`, optionally keeping only `λ ⊆ bound`.
pub fn lr_product(mu: &Partition, nu: &Partition, bound: Option<&Partition>) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    for lambda in enumerate_partitions(mu.weight() + nu.weight()) {
        if bound.is_some_and(|b| !b.contains(&lambda)) {
            continue;
        }
        let c = lr_coeff(&lambda, mu, nu);
        if c > 0 {
            out.insert(lambda, c);
        }
    }
    out
}

/// Expansion of `s_{μ¹} ⋯ s_{μᵏ}`, folding pairwise products left to right.
pub fn lr_fold(factors: &[Partition], bound: Option<&Partition>) -> BTreeMap<Partition, u64> {
    let mut acc = BTreeMap::from([(Partition::empty(), 1u64)]);
    for f in factors {
        acc = lr_multiply(&acc, f, bound);
    }
    acc
}

/// Multiplies a Schur expansion by `s_f`, truncating outside `bound`.
pub fn lr_multiply(
    acc: &BTreeMap<Partition, u64>,
    f: &Partition,
    bound: Option<&Partition>,
) -> BTreeMap<Partition, u64> {
    if f.is_empty() {
        return acc.clone();
    }
    let mut next = BTreeMap::new();
    for (nu, &m) in acc {
        for (lambda, c) in lr_product(nu, f, bound) {
            *next.entry(lambda).or_insert(0) += m * c;
        }
    }
    next
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let l = part("[3,2,1]");
        assert_eq!(lr_coeff(&l, &l, &Partition::empty()), 1);
        assert_eq!(lr_coeff(&part("[2,1]"), &part("[1]"), &part("[1,1]")), 1);
        assert_eq!(lr_coeff(&part("[2,2]"), &part("[2]"), &part("[1]")), 0);
        assert_eq!(lr_coeff(&part("[3,2,1]"), &part("[2,1]"), &part("[2,1]")), 2);
    }

    #[test]
    fn pieri_rule() {
        let prod = lr_product(&part("[2,1]"), &part("[1]"), None);
        let keys: Vec<String> = prod.keys().map(ToString::to_string).collect();
        assert_eq!(keys, vec!["[2,1,1]", "[2,2]", "[3,1]"]);
        assert!(prod.values().all(|&c| c == 1));
    }
}
