//! Schur algebras `S(n, d) = End_{Σ_d}((k^n)^{⊗d})` over `F_p`, their
//! tensor-space representation, Weyl modules and simple modules.
//!
//! The algebra is built on the basis of Σ_d-orbit sums of word pairs. These
//! are exactly the reduced row-echelon basis of the commutant (each has a
//! 0/1 pattern with disjoint support), ordered by their first nonzero
//! position; [`commutant_basis`] recovers the same basis by solving
//! `[X, s_k] = 0` and serves as an oracle.

mod algebra;
mod module;
mod weyl;

use std::collections::HashMap;

pub use algebra::{AlgebraDump, StructAlgebra};
pub use module::{AModule, IsoResult, ModuleDump};
pub use weyl::WeylData;

use crate::error::{Error, Result};
use crate::exec;
use crate::partitions::{compositions, partitions_with_rows, Partition};
use crate::primefield::{check_prime, PFMatrix};
use crate::symchar::binomial;

/// Size limits for Schur algebra construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SchurCaps {
    /// Bound on `n^d`.
    pub max_tensor_dim: usize,
    /// Bound on the squared dimension of the weight-restricted tensor space
    /// (the word-pair orbit table).
    pub max_pair_table: usize,
}

impl Default for SchurCaps {
    fn default() -> Self {
        SchurCaps {
            max_tensor_dim: 65_536,
            max_pair_table: 1 << 24,
        }
    }
}

/// Which weight spaces of tensor space the algebra acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightForm {
    /// All compositions of `d` into `n` parts: the Schur algebra itself.
    Full,
    /// Only partitions of `d` with at most `n` parts: the idempotent
    /// truncation `ξ S(n, d) ξ` with `ξ = Σ_{α dominant} ξ_α`. Every simple
    /// module has a dominant weight, so this algebra is Morita equivalent to
    /// `S(n, d)` and has the same Ext groups between corresponding simples.
    DominantCorner,
}

/// `(k^n)^{⊗d}` with its basis of words and the place-permutation action.
#[derive(Clone, Debug)]
pub struct TensorSpace {
    pub n: usize,
    pub d: usize,
    words: Vec<Vec<u8>>,
}

impl TensorSpace {
    pub fn new(n: usize, d: usize, caps: &SchurCaps) -> Result<Self> {
        let size = (n as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
        if n == 0 || n > 255 || size > caps.max_tensor_dim as u128 {
            return Err(Error::cap("tensor space dimension n^d", size, caps.max_tensor_dim as u128));
        }
        let size = size as usize;
        let words = (0..size)
            .map(|mut idx| {
                let mut w = vec![0u8; d];
                for k in (0..d).rev() {
                    w[k] = (idx % n) as u8;
                    idx /= n;
                }
                w
            })
            .collect();
        Ok(TensorSpace { n, d, words })
    }

    pub fn dim(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Vec<u8>] {
        &self.words
    }

    pub fn index(&self, w: &[u8]) -> usize {
        w.iter().fold(0, |acc, &x| acc * self.n + x as usize)
    }

    /// Index of `w ∘ σ`, i.e. the word whose letter at position `k` is `w[σ(k)]`.
    pub fn permute(&self, idx: usize, sigma: &[usize]) -> usize {
        let w = &self.words[idx];
        let moved: Vec<u8> = sigma.iter().map(|&s| w[s]).collect();
        self.index(&moved)
    }

    /// Permutation matrix of the adjacent transposition swapping positions `k, k+1`.
    pub fn transposition_matrix(&self, k: usize, p: u32) -> PFMatrix {
        let mut sigma: Vec<usize> = (0..self.d).collect();
        sigma.swap(k, k + 1);
        let mut m = PFMatrix::zeros(p, self.dim(), self.dim());
        for i in 0..self.dim() {
            m.set(self.permute(i, &sigma), i, 1);
        }
        m
    }
}

fn content(w: &[u8], n: usize) -> Vec<usize> {
    let mut c = vec![0; n];
    for &x in w {
        c[x as usize] += 1;
    }
    c
}

/// A Schur algebra (or its dominant truncation) with its action on the
/// weight-restricted tensor space.
#[derive(Clone, Debug)]
pub struct SchurAlgebra {
    pub n: usize,
    pub d: usize,
    pub p: u32,
    pub form: WeightForm,
    weights: Vec<Vec<usize>>,
    words: Vec<Vec<u8>>,
    word_index: HashMap<Vec<u8>, usize>,
    pair_orbit: Vec<u32>,
    orbit_reps: Vec<(usize, usize)>,
    xi: Vec<usize>,
    tau: Vec<usize>,
    algebra: StructAlgebra,
}

fn orbit_key(u: &[u8], v: &[u8], n: usize) -> Vec<u16> {
    let mut k: Vec<u16> = u
        .iter()
        .zip(v)
        .map(|(&a, &b)| (a as usize * n + b as usize) as u16)
        .collect();
    k.sort_unstable();
    k
}

impl SchurAlgebra {
    pub fn new(n: usize, d: usize, p: u32, form: WeightForm, caps: &SchurCaps) -> Result<Self> {
        check_prime(p)?;
        if d == 0 {
            return Err(Error::InvalidArgument("degree d must be positive".into()));
        }
        let ts = TensorSpace::new(n, d, caps)?;
        let weights: Vec<Vec<usize>> = match form {
            WeightForm::Full => compositions(d, n),
            WeightForm::DominantCorner => partitions_with_rows(d, n)
                .into_iter()
                .map(|l| (0..n).map(|k| l.part(k)).collect())
                .collect(),
        };
        let words: Vec<Vec<u8>> = ts
            .words
            .into_iter()
            .filter(|w| {
                let c = content(w, n);
                form == WeightForm::Full || c.windows(2).all(|x| x[0] >= x[1])
            })
            .collect();
        let t = words.len();
        if t * t > caps.max_pair_table {
            return Err(Error::cap("word-pair table (weight space dim squared)", (t * t) as u128, caps.max_pair_table as u128));
        }
        let word_index: HashMap<Vec<u8>, usize> =
            words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();

        // Orbits numbered by first occurrence in row-major (u, v) order.
        let mut key_to_orbit: HashMap<Vec<u16>, u32> = HashMap::new();
        let mut orbit_reps = Vec::new();
        let mut pair_orbit = vec![0u32; t * t];
        for u in 0..t {
            for v in 0..t {
                let key = orbit_key(&words[u], &words[v], n);
                let next = orbit_reps.len() as u32;
                let o = *key_to_orbit.entry(key).or_insert_with(|| {
                    orbit_reps.push((u, v));
                    next
                });
                pair_orbit[u * t + v] = o;
            }
        }
        let dim = orbit_reps.len();
        if form == WeightForm::Full {
            let expected = binomial((n * n + d - 1) as u64, d as u64) as usize;
            if dim != expected {
                return Err(Error::Invariant(format!("S({n},{d}) has {dim} orbit basis elements, expected {expected}")));
            }
        }

        // c_{ab}^c = #{w : (u_c, w) ∈ a, (w, v_c) ∈ b} at the representative of c.
        let products_by_target: Vec<Vec<(u32, u32, u32)>> = exec::map_range(dim, |c| {
            let (u, v) = orbit_reps[c];
            let mut counts: HashMap<(u32, u32), u64> = HashMap::new();
            for w in 0..t {
                let a = pair_orbit[u * t + w];
                let b = pair_orbit[w * t + v];
                *counts.entry((a, b)).or_insert(0) += 1;
            }
            counts
                .into_iter()
                .filter(|&(_, m)| m % p as u64 != 0)
                .map(|((a, b), m)| (a, b, (m % p as u64) as u32))
                .collect()
        });
        let mut products = vec![Vec::new(); dim * dim];
        for (c, list) in products_by_target.into_iter().enumerate() {
            for (a, b, m) in list {
                products[a as usize * dim + b as usize].push((c as u32, m));
            }
        }

        let xi: Vec<usize> = weights
            .iter()
            .map(|alpha| {
                let w: Vec<u8> = alpha
                    .iter()
                    .enumerate()
                    .flat_map(|(letter, &m)| std::iter::repeat(letter as u8).take(m))
                    .collect();
                let i = word_index[&w];
                pair_orbit[i * t + i] as usize
            })
            .collect();
        let mut identity = vec![0u32; dim];
        for &x in &xi {
            identity[x] = 1;
        }
        let tau: Vec<usize> = orbit_reps
            .iter()
            .map(|&(u, v)| pair_orbit[v * t + u] as usize)
            .collect();
        let labels = orbit_reps
            .iter()
            .map(|&(u, v)| {
                let show = |w: &[u8]| w.iter().map(|x| (x + 1).to_string()).collect::<String>();
                format!("{}|{}", show(&words[u]), show(&words[v]))
            })
            .collect();
        let algebra = StructAlgebra::from_products(p, labels, products, identity)?;
        Ok(SchurAlgebra {
            n,
            d,
            p,
            form,
            weights,
            words,
            word_index,
            pair_orbit,
            orbit_reps,
            xi,
            tau,
            algebra,
        })
    }

    /// The full Schur algebra `S(n, d)` with default caps.
    pub fn full(n: usize, d: usize, p: u32) -> Result<Self> {
        Self::new(n, d, p, WeightForm::Full, &SchurCaps::default())
    }

    pub fn algebra(&self) -> &StructAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Weights indexing the idempotents `ξ_α`, in construction order.
    pub fn weights(&self) -> &[Vec<usize>] {
        &self.weights
    }

    /// Basis index of `ξ_α` for each weight, aligned with [`Self::weights`].
    pub fn weight_idempotents(&self) -> &[usize] {
        &self.xi
    }

    /// The transpose anti-automorphism as a permutation of the basis.
    pub fn transpose_antiauto(&self) -> &[usize] {
        &self.tau
    }

    /// Words spanning the weight-restricted tensor space.
    pub fn words(&self) -> &[Vec<u8>] {
        &self.words
    }

    pub fn word_index(&self, w: &[u8]) -> Option<usize> {
        self.word_index.get(w).copied()
    }

    pub fn tensor_dim(&self) -> usize {
        self.words.len()
    }

    /// Orbit of the word pair `(u, v)`.
    pub fn pair_orbit(&self, u: usize, v: usize) -> usize {
        self.pair_orbit[u * self.words.len() + v] as usize
    }

    pub fn orbit_rep(&self, o: usize) -> (usize, usize) {
        self.orbit_reps[o]
    }

    /// Matrix of basis element `o` on the weight-restricted tensor space.
    pub fn tensor_matrix(&self, o: usize) -> PFMatrix {
        let t = self.words.len();
        let mut m = PFMatrix::zeros(self.p, t, t);
        for u in 0..t {
            for v in 0..t {
                if self.pair_orbit[u * t + v] as usize == o {
                    m.set(u, v, 1);
                }
            }
        }
        m
    }

    /// The tensor-space representation as a module.
    pub fn tensor_module(&self) -> AModule {
        let action = (0..self.dim()).map(|o| self.tensor_matrix(o)).collect();
        AModule::new(self.p, self.tensor_dim(), action).expect("tensor module shape")
    }

    /// `y ↦ (b_o y)_o` for every basis element at once, as rows indexed by orbit.
    pub fn apply_all(&self, y: &[u32]) -> Vec<Vec<u32>> {
        let t = self.words.len();
        let p = self.p as u64;
        let mut out = vec![vec![0u32; t]; self.dim()];
        let support: Vec<(usize, u32)> = y
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| (i, x))
            .collect();
        for u in 0..t {
            for &(v, x) in &support {
                let o = self.pair_orbit[u * t + v] as usize;
                out[o][u] = ((out[o][u] as u64 + x as u64) % p) as u32;
            }
        }
        out
    }

    /// `b_o y` for a single basis element.
    pub fn apply(&self, o: usize, y: &[u32]) -> Vec<u32> {
        let t = self.words.len();
        let p = self.p as u64;
        let mut out = vec![0u32; t];
        for u in 0..t {
            let mut acc = 0u64;
            for v in 0..t {
                if y[v] != 0 && self.pair_orbit[u * t + v] as usize == o {
                    acc += y[v] as u64;
                }
            }
            out[u] = (acc % p) as u32;
        }
        out
    }

    /// Dimension of the `α`-weight space of the tensor space.
    pub fn weight_space_dim(&self, alpha: &[usize]) -> usize {
        self.words.iter().filter(|w| content(w, self.n) == alpha).count()
    }

    /// Content of word `i`.
    pub fn word_content(&self, i: usize) -> Vec<usize> {
        content(&self.words[i], self.n)
    }

    /// Partitions labelling the simple modules of this algebra.
    pub fn simple_labels(&self) -> Vec<Partition> {
        partitions_with_rows(self.d, self.n)
    }

    pub fn weyl_module(&self, lambda: &Partition) -> Result<WeylData> {
        weyl::weyl_module(self, lambda)
    }

    pub fn simple_module(&self, lambda: &Partition) -> Result<AModule> {
        Ok(self.weyl_module(lambda)?.simple)
    }

    pub fn kuhn_dual(&self, m: &AModule) -> AModule {
        m.kuhn_dual(&self.tau)
    }
}

/// `p^i λ`: the label of the Frobenius twist `L(λ)^{(i)}`.
pub fn twist_label(lambda: &Partition, p: u32, i: u32) -> Partition {
    lambda.scaled((p as usize).pow(i))
}

/// Basis of the commutant `End_{Σ_d}((k^n)^{⊗d})` by solving `[X, s_k] = 0`
/// for the adjacent transpositions, returned in reduced row-echelon form
/// with `X` flattened row-major. Test oracle for [`SchurAlgebra`].
pub fn commutant_basis(n: usize, d: usize, p: u32, caps: &SchurCaps) -> Result<Vec<Vec<u32>>> {
    check_prime(p)?;
    let ts = TensorSpace::new(n, d, caps)?;
    let t = ts.dim();
    let unknowns = t * t;
    let mut rows: Vec<u32> = Vec::new();
    let mut count = 0;
    for k in 0..d.saturating_sub(1) {
        let mut sigma: Vec<usize> = (0..d).collect();
        sigma.swap(k, k + 1);
        let perm: Vec<usize> = (0..t).map(|i| ts.permute(i, &sigma)).collect();
        // With S e_v = e_{π v} and π an involution: (S X)[u][v] = X[π u][v]
        // and (X S)[u][v] = X[u][π v].
        for u in 0..t {
            for v in 0..t {
                let mut eq = vec![0u32; unknowns];
                eq[perm[u] * t + v] = 1;
                let j = u * t + perm[v];
                eq[j] = (eq[j] + p - 1) % p;
                rows.extend(eq);
                count += 1;
            }
        }
    }
    let kernel = if count == 0 {
        PFMatrix::identity(p, unknowns)
    } else {
        PFMatrix::from_data(p, count, unknowns, rows)?.kernel_basis()
    };
    let r = kernel.transpose().rref();
    Ok((0..r.rank).map(|k| r.matrix.row(k).to_vec()).collect())
}
