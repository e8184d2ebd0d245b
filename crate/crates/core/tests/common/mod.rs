//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library except for the `Partition` type.
#![allow(dead_code)]

use std::collections::BTreeMap;

use strictpoly::partitions::Partition;

/// Boundary 0/1 sequence from bottom-left to top-right: 1 = up, 0 = right.
pub fn edge_sequence(lambda: &[usize]) -> Vec<u8> {
    let mut seq = Vec::new();
    let mut col = 0;
    for &r in lambda.iter().rev() {
        seq.extend(std::iter::repeat(0).take(r - col));
        col = r;
        seq.push(1);
    }
    seq
}

pub fn from_edge_sequence(seq: &[u8]) -> Vec<usize> {
    let mut col = 0;
    let mut rows = Vec::new();
    for &b in seq {
        if b == 0 {
            col += 1;
        } else if col > 0 {
            rows.push(col);
        }
    }
    rows.reverse();
    rows
}

/// Rim hooks of length `h`: (remaining parts, leg length).
pub fn rim_hooks(lambda: &[usize], h: usize) -> Vec<(Vec<usize>, usize)> {
    let seq = edge_sequence(lambda);
    let mut out = Vec::new();
    for k in 0..seq.len() {
        if seq[k] == 0 && k + h < seq.len() && seq[k + h] == 1 {
            let leg = seq[k + 1..k + h].iter().filter(|&&b| b == 1).count();
            let mut s = seq.clone();
            s.swap(k, k + h);
            out.push((from_edge_sequence(&s), leg));
        }
    }
    out
}

/// Symmetric-group character by Murnaghan–Nakayama on edge sequences.
pub fn character(lambda: &[usize], rho: &[usize]) -> i64 {
    let Some((&first, rest)) = rho.split_first() else {
        return i64::from(lambda.is_empty());
    };
    rim_hooks(lambda, first)
        .into_iter()
        .map(|(mu, leg)| if leg % 2 == 0 { 1 } else { -1 } * character(&mu, rest))
        .sum()
}

pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Size of the conjugacy class with cycle type `rho`.
pub fn class_size(rho: &[usize]) -> u64 {
    let n: usize = rho.iter().sum();
    let mut z: u64 = 1;
    let mut counts = BTreeMap::new();
    for &r in rho {
        *counts.entry(r).or_insert(0u64) += 1;
        z *= r as u64;
    }
    for &m in counts.values() {
        z *= factorial(m as usize);
    }
    factorial(n) / z
}

/// `c^λ_{μν} = <χ^λ ↓, χ^μ × χ^ν>` over `Σ_a × Σ_b`.
pub fn lr_by_characters(lambda: &[usize], mu: &[usize], nu: &[usize]) -> u64 {
    let (a, b) = (mu.iter().sum::<usize>(), nu.iter().sum::<usize>());
    if lambda.iter().sum::<usize>() != a + b {
        return 0;
    }
    let mut total: i128 = 0;
    for rho in partitions(a) {
        for pi in partitions(b) {
            let mut joint: Vec<usize> = rho.iter().chain(&pi).copied().collect();
            joint.sort_unstable_by(|x, y| y.cmp(x));
            total += (class_size(&rho) * class_size(&pi)) as i128
                * (character(lambda, &joint) * character(mu, &rho) * character(nu, &pi)) as i128;
        }
    }
    let den = (factorial(a) * factorial(b)) as i128;
    assert_eq!(total % den, 0);
    (total / den) as u64
}

/// Semistandard fillings of `shape` with letters `0..letters.len()`,
/// as a map from total letter degree to count.
pub fn ssyt_by_degree(shape: &[usize], letters: &[i64]) -> BTreeMap<i64, u64> {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    let mut out = BTreeMap::new();
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        letters: &[i64],
        deg: i64,
        out: &mut BTreeMap<i64, u64>,
    ) {
        if k == cells.len() {
            *out.entry(deg).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..letters.len() {
            grid[r][c] = v;
            go(k + 1, cells, grid, letters, deg + letters[v], out);
        }
    }
    go(0, &cells, &mut grid, letters, 0, &mut out);
    out
}

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}
