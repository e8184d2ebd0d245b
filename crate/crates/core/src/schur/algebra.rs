use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec;
use crate::primefield::{self as pf, PFMatrix};

/// Finite-dimensional associative algebra over `F_p` given by structure
/// constants `b_i b_j = Σ_k c_{ij}^k b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructAlgebra {
    p: u32,
    dim: usize,
    labels: Vec<String>,
    // CSR over the pair index i * dim + j.
    offsets: Vec<usize>,
    entries: Vec<(u32, u32)>,
    identity: Vec<u32>,
}

/// JSON dump of an algebra: labels, identity and sparse `[i, j, k, c]` triples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDump {
    pub p: u32,
    pub labels: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degrees: Option<Vec<i64>>,
    pub identity: Vec<u32>,
    pub structure_constants: Vec<[u64; 4]>,
}

impl StructAlgebra {
    /// Builds an algebra from per-pair products: `products[i * dim + j]`
    /// lists `(k, c)` with `c` already reduced.
    pub fn from_products(
        p: u32,
        labels: Vec<String>,
        products: Vec<Vec<(u32, u32)>>,
        identity: Vec<u32>,
    ) -> Result<Self> {
        let dim = labels.len();
        if products.len() != dim * dim {
            return Err(Error::mismatch("structure constants", dim * dim, products.len()));
        }
        if identity.len() != dim {
            return Err(Error::mismatch("identity", dim, identity.len()));
        }
        let mut offsets = Vec::with_capacity(dim * dim + 1);
        let mut entries = Vec::new();
        offsets.push(0);
        for mut row in products {
            row.retain(|&(_, c)| c % p != 0);
            row.sort_unstable();
            entries.extend(row);
            offsets.push(entries.len());
        }
        Ok(StructAlgebra {
            p,
            dim,
            labels,
            offsets,
            entries,
            identity,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn identity(&self) -> &[u32] {
        &self.identity
    }

    /// Number of nonzero structure constants.
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// `b_i b_j` as sparse `(k, c)` pairs.
    #[inline]
    pub fn product(&self, i: usize, j: usize) -> &[(u32, u32)] {
        let ij = i * self.dim + j;
        &self.entries[self.offsets[ij]..self.offsets[ij + 1]]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim];
        v[i] = 1 % self.p;
        v
    }

    /// Product of two elements given by coordinates.
    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        let mut acc = vec![0u64; self.dim];
        let ys: Vec<(usize, u64)> = y
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(j, &v)| (j, v as u64))
            .collect();
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for &(j, yj) in &ys {
                let s = xi as u64 * yj % p;
                for &(k, c) in self.product(i, j) {
                    acc[k as usize] = (acc[k as usize] + s * c as u64) % p;
                }
            }
        }
        acc.into_iter().map(|v| v as u32).collect()
    }

    pub fn add(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter().zip(y).map(|(&a, &b)| pf::add(self.p, a, b)).collect()
    }

    pub fn scale(&self, x: &[u32], c: u32) -> Vec<u32> {
        x.iter().map(|&a| pf::mul(self.p, a, c)).collect()
    }

    /// Matrix of `y ↦ x y` in the basis.
    pub fn left_mult_matrix(&self, x: &[u32]) -> PFMatrix {
        let mut m = PFMatrix::zeros(self.p, self.dim, self.dim);
        let p = self.p;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for j in 0..self.dim {
                for &(k, c) in self.product(i, j) {
                    let k = k as usize;
                    m.set(k, j, pf::add(p, m.get(k, j), pf::mul(p, xi, c)));
                }
            }
        }
        m
    }

    /// Matrix of `y ↦ y x` in the basis.
    pub fn right_mult_matrix(&self, x: &[u32]) -> PFMatrix {
        let mut m = PFMatrix::zeros(self.p, self.dim, self.dim);
        let p = self.p;
        for (j, &xj) in x.iter().enumerate() {
            if xj == 0 {
                continue;
            }
            for i in 0..self.dim {
                for &(k, c) in self.product(i, j) {
                    let k = k as usize;
                    m.set(k, i, pf::add(p, m.get(k, i), pf::mul(p, xj, c)));
                }
            }
        }
        m
    }

    /// First basis triple violating associativity, if any.
    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let found = exec::map_range(self.dim, |i| {
            let mut buf = (vec![0u32; self.dim], vec![0u32; self.dim]);
            for j in 0..self.dim {
                for k in 0..self.dim {
                    if !self.associates(i, j, k, &mut buf) {
                        return Some((i, j, k));
                    }
                }
            }
            None
        });
        found.into_iter().flatten().next()
    }

    /// Associativity on a deterministic sample of `count` triples.
    pub fn associativity_violation_sampled(&self, count: usize, seed: u64) -> Option<(usize, usize, usize)> {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut buf = (vec![0u32; self.dim], vec![0u32; self.dim]);
        (0..count)
            .map(|_| {
                (
                    rng.gen_range(0..self.dim),
                    rng.gen_range(0..self.dim),
                    rng.gen_range(0..self.dim),
                )
            })
            .find(|&(i, j, k)| !self.associates(i, j, k, &mut buf))
    }

    /// `(b_i b_j) b_k == b_i (b_j b_k)` from the sparse table; `buf` holds
    /// two zeroed scratch vectors of length `dim` and is left zeroed.
    fn associates(&self, i: usize, j: usize, k: usize, buf: &mut (Vec<u32>, Vec<u32>)) -> bool {
        let p = self.p;
        let (left, right) = buf;
        for &(l, c) in self.product(i, j) {
            for &(m, c2) in self.product(l as usize, k) {
                left[m as usize] = pf::add(p, left[m as usize], pf::mul(p, c, c2));
            }
        }
        for &(l, c) in self.product(j, k) {
            for &(m, c2) in self.product(i, l as usize) {
                right[m as usize] = pf::add(p, right[m as usize], pf::mul(p, c, c2));
            }
        }
        let mut ok = true;
        let touched = self
            .product(i, j)
            .iter()
            .flat_map(|&(l, _)| self.product(l as usize, k))
            .chain(self.product(j, k).iter().flat_map(|&(l, _)| self.product(i, l as usize)));
        for &(m, _) in touched {
            let m = m as usize;
            ok &= left[m] == right[m];
            left[m] = 0;
            right[m] = 0;
        }
        ok
    }

    /// Whether the stored identity is a two-sided unit on every basis element.
    pub fn identity_is_unit(&self) -> bool {
        (0..self.dim).all(|i| {
            let b = self.basis_vector(i);
            self.mul(&self.identity, &b) == b && self.mul(&b, &self.identity) == b
        })
    }

    pub fn is_idempotent(&self, e: &[u32]) -> bool {
        self.mul(e, e) == e
    }

    pub fn dump(&self, degrees: Option<Vec<i64>>) -> AlgebraDump {
        let mut sc = Vec::with_capacity(self.entries.len());
        for i in 0..self.dim {
            for j in 0..self.dim {
                for &(k, c) in self.product(i, j) {
                    sc.push([i as u64, j as u64, k as u64, c as u64]);
                }
            }
        }
        AlgebraDump {
            p: self.p,
            labels: self.labels.clone(),
            degrees,
            identity: self.identity.clone(),
            structure_constants: sc,
        }
    }

    /// Rebuilds an algebra from its dump.
    pub fn from_dump(d: &AlgebraDump) -> Result<Self> {
        let dim = d.labels.len();
        let mut products = vec![Vec::new(); dim * dim];
        for &[i, j, k, c] in &d.structure_constants {
            let (i, j, k) = (i as usize, j as usize, k as usize);
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::InvalidArgument(format!("structure constant index out of range: {i},{j},{k}")));
            }
            products[i * dim + j].push((k as u32, (c % d.p as u64) as u32));
        }
        Self::from_products(d.p, d.labels.clone(), products, d.identity.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Matrix algebra M_2(F_3) with matrix units e_{rc} at index 2r + c.
    fn m2() -> StructAlgebra {
        let mut prods = vec![Vec::new(); 16];
        for a in 0..4 {
            for b in 0..4 {
                let (r1, c1, r2, c2) = (a / 2, a % 2, b / 2, b % 2);
                if c1 == r2 {
                    prods[a * 4 + b].push(((2 * r1 + c2) as u32, 1));
                }
            }
        }
        let labels = ["e11", "e12", "e21", "e22"].map(String::from).to_vec();
        StructAlgebra::from_products(3, labels, prods, vec![1, 0, 0, 1]).unwrap()
    }

    #[test]
    fn matrix_algebra_laws() {
        let a = m2();
        assert!(a.identity_is_unit());
        assert_eq!(a.associativity_violation(), None);
        assert!(a.is_idempotent(&[1, 0, 0, 0]));
        let dump = a.dump(None);
        assert_eq!(StructAlgebra::from_dump(&dump).unwrap(), a);
    }

    #[test]
    fn multiplication_matrices_agree_with_mul() {
        let a = m2();
        let x = vec![1, 2, 0, 1];
        let y = vec![2, 1, 1, 0];
        let xy = a.mul(&x, &y);
        assert_eq!(a.left_mult_matrix(&x).mat_vec(&y).unwrap(), xy);
        assert_eq!(a.right_mult_matrix(&y).mat_vec(&x).unwrap(), xy);
    }
}
