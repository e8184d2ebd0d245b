//! Symmetric groups, their group algebras and ordinary characters.

use std::collections::HashMap;

use crate::partitions::Partition;
use crate::primefield as pf;

/// `Σ_d` with its elements listed in lexicographic order of image vectors.
#[derive(Clone, Debug)]
pub struct SymmetricGroup {
    pub d: usize,
    elems: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
    mult: Vec<u32>,
    inv: Vec<usize>,
}

impl SymmetricGroup {
    pub fn new(d: usize) -> Self {
        let mut elems = Vec::new();
        let mut cur: Vec<u8> = (0..d as u8).collect();
        loop {
            elems.push(cur.clone());
            if !next_permutation(&mut cur) {
                break;
            }
        }
        let index: HashMap<Vec<u8>, usize> = elems.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        let n = elems.len();
        let mut mult = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let c: Vec<u8> = (0..d).map(|k| elems[a][elems[b][k] as usize]).collect();
                mult[a * n + b] = index[&c] as u32;
            }
        }
        let inv = (0..n)
            .map(|a| (0..n).find(|&b| mult[a * n + b] == 0).expect("group inverse"))
            .collect();
        SymmetricGroup {
            d,
            elems,
            index,
            mult,
            inv,
        }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elem(&self, k: usize) -> &[u8] {
        &self.elems[k]
    }

    pub fn index_of(&self, perm: &[u8]) -> usize {
        self.index[perm]
    }

    /// Index of `σ ∘ τ`.
    #[inline]
    pub fn compose(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.elems.len() + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn cycle_type(&self, a: usize) -> Partition {
        let perm = &self.elems[a];
        let mut seen = vec![false; self.d];
        let mut parts = Vec::new();
        for s in 0..self.d {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut k = s;
            while !seen[k] {
                seen[k] = true;
                k = perm[k] as usize;
                len += 1;
            }
            parts.push(len);
        }
        Partition::from_unsorted(parts)
    }

    pub fn sign(&self, a: usize) -> bool {
        let ct = self.cycle_type(a);
        ct.parts().iter().filter(|&&l| l % 2 == 0).count() % 2 == 1
    }

    /// `(σ·m)_k = m_{σ^{-1}(k)}`.
    pub fn act_on_tuple<T: Copy>(&self, a: usize, m: &[T]) -> Vec<T> {
        let perm = &self.elems[a];
        let mut out = m.to_vec();
        for (k, &s) in perm.iter().enumerate() {
            out[s as usize] = m[k];
        }
        out
    }

    /// Product in the group algebra `F_p Σ_d`.
    pub fn algebra_mul(&self, p: u32, x: &[u32], y: &[u32]) -> Vec<u32> {
        let n = self.order();
        let mut out = vec![0u32; n];
        for a in 0..n {
            if x[a] == 0 {
                continue;
            }
            for b in 0..n {
                if y[b] == 0 {
                    continue;
                }
                let c = self.compose(a, b);
                out[c] = pf::add(p, out[c], pf::mul(p, x[a], y[b]));
            }
        }
        out
    }

    /// Rank of `x ↦ x e` on the regular module, i.e. `dim F_p Σ_d · e`.
    pub fn left_ideal_dim(&self, p: u32, e: &[u32]) -> usize {
        let n = self.order();
        let mut m = crate::primefield::PFMatrix::zeros(p, n, n);
        for a in 0..n {
            let mut x = vec![0u32; n];
            x[a] = 1;
            let row = self.algebra_mul(p, &x, e);
            m.row_mut(a).copy_from_slice(&row);
        }
        m.rank()
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `χ^λ` at cycle type `ρ` by the Murnaghan–Nakayama rule.
pub fn character(lambda: &Partition, rho: &Partition) -> i64 {
    fn go(lambda: &Partition, parts: &[usize], memo: &mut HashMap<(Partition, usize), i64>) -> i64 {
        if parts.is_empty() {
            return i64::from(lambda.is_empty());
        }
        if let Some(&v) = memo.get(&(lambda.clone(), parts.len())) {
            return v;
        }
        let mut total = 0;
        for (rest, leg) in lambda.rim_hooks(parts[0]) {
            let sign = if leg % 2 == 0 { 1 } else { -1 };
            total += sign * go(&rest, &parts[1..], memo);
        }
        memo.insert((lambda.clone(), parts.len()), total);
        total
    }
    if lambda.weight() != rho.weight() {
        return 0;
    }
    go(lambda, rho.parts(), &mut HashMap::new())
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}
