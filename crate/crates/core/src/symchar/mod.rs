//! Dimension and graded-dimension formulas for Schur functors and the
//! algebras built from them.

mod graded;
pub mod lr;

use std::collections::BTreeMap;

pub use graded::{GradedAlphabet, GradedDim};
pub use lr::{lr_coeff, lr_fold, lr_product};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, is_basic, p_core, Partition};

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
    }
    acc as u64
}

/// `dim S_λ(k^n)` by the hook-content formula.
pub fn dim_schur(lambda: &Partition, n: usize) -> u64 {
    if lambda.len() > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for (i, &r) in lambda.parts().iter().enumerate() {
        for j in 0..r {
            num *= (n + j - i) as u128;
            den *= lambda.hook_length(i, j) as u128;
        }
    }
    (num / den) as u64
}

/// `dim S_λ(k^n)` by counting semistandard tableaux with entries `< n`.
pub fn dim_schur_ssyt(lambda: &Partition, n: usize) -> u64 {
    graded_dim_schur(lambda, &GradedAlphabet::trivial(n)).total()
}

/// Weyl and Schur functors share characters; the alias keeps block formulas readable.
pub fn dim_weyl(lambda: &Partition, n: usize) -> u64 {
    dim_schur(lambda, n)
}

/// Partitions `ν` with `μ ⊆ ν ⊆ bound` and `ν/μ` a horizontal strip.
fn horizontal_strips(mu: &Partition, bound: &Partition) -> Vec<Partition> {
    let rows = (mu.len() + 1).min(bound.len());
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    fn go(k: usize, rows: usize, mu: &Partition, bound: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if k == rows {
            out.push(Partition::from_unsorted(cur.clone()));
            return;
        }
        let hi = if k == 0 {
            bound.part(0)
        } else {
            bound.part(k).min(mu.part(k - 1))
        };
        for v in mu.part(k)..=hi {
            cur.push(v);
            go(k + 1, rows, mu, bound, cur, out);
            cur.pop();
        }
    }
    go(0, rows, mu, bound, &mut cur, &mut out);
    out
}

/// Principal specialization of `s_λ` at the graded alphabet: the graded
/// dimension of `S_λ(W)` for `W` with the given basis degrees.
pub fn graded_dim_schur(lambda: &Partition, alphabet: &GradedAlphabet) -> GradedDim {
    // Branching over letters: adding one letter adds a horizontal strip.
    let mut state: BTreeMap<Partition, GradedDim> = BTreeMap::from([(Partition::empty(), GradedDim::one())]);
    for &e in alphabet.degrees() {
        let mut next: BTreeMap<Partition, GradedDim> = BTreeMap::new();
        for (mu, g) in &state {
            for nu in horizontal_strips(mu, lambda) {
                let added = (nu.weight() - mu.weight()) as i64;
                let term = g.shift(e * added);
                let slot = next.entry(nu).or_default();
                *slot = slot.add(&term);
            }
        }
        state = next;
    }
    state.remove(lambda).unwrap_or_default()
}

/// Degrees of the monomial basis of `A_i = k[x_1..x_i]/(x_j^p)` with
/// `|x_j| = 2p^(j-1)`. Monomial with index `t` (base-`p` exponents) has degree `2t`.
pub fn graded_dim_ai(p: u32, i: u32) -> GradedAlphabet {
    let n = (p as i64).pow(i);
    GradedAlphabet::new((0..n).map(|t| 2 * t).collect())
}

/// `dim Γ^d(Hom(k^m, k^n))`.
pub fn dim_gamma_hom(n: usize, m: usize, d: usize) -> u64 {
    binomial((n * m + d) as u64 - 1, d as u64)
}

fn check_core(core: &Partition, d: usize, p: u32) -> Result<()> {
    let w = core.weight();
    if !core.is_p_core(p) || w > d || (d - w) % p as usize != 0 {
        return Err(Error::InvalidCore {
            core: core.clone(),
            p,
            d,
        });
    }
    Ok(())
}

/// Partitions of `d` with the given p-core.
pub fn block_fiber(core: &Partition, d: usize, p: u32) -> Result<Vec<Partition>> {
    check_core(core, d, p)?;
    Ok(enumerate_partitions(d)
        .into_iter()
        .filter(|mu| p_core(mu, p).0 == *core)
        .collect())
}

/// `Σ_{μ in block} gdim S_μ(k^n ⊗ alphabet) · dim W_μ(k^m)`.
pub fn graded_dim_block(
    core: &Partition,
    n: usize,
    m: usize,
    d: usize,
    p: u32,
    alphabet: &GradedAlphabet,
) -> Result<GradedDim> {
    graded_dim_block_bi(core, d, p, &alphabet.copies(n), &GradedAlphabet::trivial(m))
}

/// Block sum with graded spaces in both arguments:
/// `Σ_{μ in block} gdim S_μ(first) · gdim S_μ(second)`.
pub fn graded_dim_block_bi(
    core: &Partition,
    d: usize,
    p: u32,
    first: &GradedAlphabet,
    second: &GradedAlphabet,
) -> Result<GradedDim> {
    let mut acc = GradedDim::zero();
    for mu in block_fiber(core, d, p)? {
        let a = graded_dim_schur(&mu, first);
        let b = graded_dim_schur(&mu, second);
        acc = acc.add(&a.mul(&b));
    }
    Ok(acc)
}

/// Graded dimension of `A_{i,λ}` from Littlewood–Richardson numbers.
///
/// With `k = p^i` letters of degrees `e_1..e_k`, sums
/// `(c^λ_{μ¹…μᵏ})² q^{Σ e_j |μ^j|}` over all k-tuples of partitions.
pub fn graded_dim_corner_lr(lambda: &Partition, d: usize, p: u32, i: u32) -> Result<GradedDim> {
    if lambda.weight() != d {
        return Err(Error::WeightMismatch {
            lambda: lambda.clone(),
            d,
        });
    }
    if !is_basic(lambda, p) {
        return Err(Error::NotBasic(lambda.clone(), p));
    }
    let degrees = graded_dim_ai(p, i).degrees().to_vec();
    let mut out = GradedDim::zero();
    let start = BTreeMap::from([(Partition::empty(), 1u64)]);
    corner_rec(lambda, &degrees, 0, d, 0, &start, &mut out);
    Ok(out)
}

fn corner_rec(
    lambda: &Partition,
    degrees: &[i64],
    slot: usize,
    remaining: usize,
    deg: i64,
    acc: &BTreeMap<Partition, u64>,
    out: &mut GradedDim,
) {
    if acc.is_empty() {
        return;
    }
    if remaining == 0 {
        let c = acc.get(lambda).copied().unwrap_or(0);
        out.add_term(deg, c * c);
        return;
    }
    if slot == degrees.len() {
        return;
    }
    for w in 0..=remaining {
        for mu in enumerate_partitions(w) {
            if !lambda.contains(&mu) {
                continue;
            }
            let next = lr::lr_multiply(acc, &mu, Some(lambda));
            corner_rec(
                lambda,
                degrees,
                slot + 1,
                remaining - w,
                deg + degrees[slot] * w as i64,
                &next,
                out,
            );
        }
    }
}

/// `gdim Γ^d(End(k^n) ⊗ A_i)`.
pub fn graded_dim_affine_schur(n: usize, d: usize, p: u32, i: u32) -> GradedDim {
    let alph = graded_dim_ai(p, i).copies(n * n);
    graded_dim_schur(&Partition::new(vec![d]).expect("row"), &alph)
}

/// Number of semistandard tableaux of shape `κ` and content `α`.
pub fn kostka(kappa: &Partition, alpha: &[usize]) -> u64 {
    let weights = content_weights(kappa, alpha.len(), &[0]);
    weights.get(alpha).map_or(0, GradedDim::total)
}

/// For each content vector `α` (one entry per outer letter), the graded count
/// of semistandard tableaux of shape `λ` over the letters `(a, j)`, `a < n`,
/// `j` ranging over `inner`, ordered lexicographically, whose outer content is `α`.
fn content_weights(lambda: &Partition, n: usize, inner: &[i64]) -> BTreeMap<Vec<usize>, GradedDim> {
    type State = BTreeMap<(Partition, Vec<usize>), GradedDim>;
    let mut state: State = BTreeMap::from([((Partition::empty(), Vec::new()), GradedDim::one())]);
    for _a in 0..n {
        // Entering a new outer letter: run its inner letters, tracking boxes added.
        let mut block: BTreeMap<(Partition, Vec<usize>, usize), GradedDim> = state
            .into_iter()
            .map(|((mu, alpha), g)| ((mu, alpha, 0), g))
            .collect();
        for &e in inner {
            let mut next: BTreeMap<(Partition, Vec<usize>, usize), GradedDim> = BTreeMap::new();
            for ((mu, alpha, added), g) in &block {
                for nu in horizontal_strips(mu, lambda) {
                    let k = nu.weight() - mu.weight();
                    let slot = next.entry((nu, alpha.clone(), added + k)).or_default();
                    *slot = slot.add(&g.shift(e * k as i64));
                }
            }
            block = next;
        }
        state = BTreeMap::new();
        for ((mu, mut alpha, added), g) in block {
            alpha.push(added);
            let slot = state.entry((mu, alpha)).or_default();
            *slot = slot.add(&g);
        }
    }
    state
        .into_iter()
        .filter(|((mu, _), _)| mu == lambda)
        .map(|((_, alpha), g)| (alpha, g))
        .collect()
}

/// Graded multiplicity of `S_λ(V)` in `S_λ(V ⊗ W)` for `V = k^{|λ|}` and `W`
/// the graded space with the given alphabet.
///
/// Computed from the dominant weight spaces of the graded character of
/// `S_λ(V ⊗ W)` by peeling off Kostka numbers from the top of the
/// dominance order. This is the graded dimension of `Hom_{Σ_d}(S^λ, S^λ ⊗ W^{⊗d})`,
/// hence of the corner algebra `e_λ (W^{⊗d} ⋊ kΣ_d) e_λ` when `W = A_i`.
pub fn graded_multiplicity_in_schur(lambda: &Partition, alphabet: &GradedAlphabet) -> GradedDim {
    let d = lambda.weight();
    let weights = content_weights(lambda, d, alphabet.degrees());
    let pad = |kappa: &Partition| -> Vec<usize> { (0..d).map(|k| kappa.part(k)).collect() };
    // Signed peeling; all final multiplicities are nonnegative.
    let mut mult: BTreeMap<Partition, BTreeMap<i64, i128>> = BTreeMap::new();
    for kappa in enumerate_partitions(d) {
        let mut coeff: BTreeMap<i64, i128> = weights
            .get(&pad(&kappa))
            .map(|g| g.terms().map(|(e, c)| (e, c as i128)).collect())
            .unwrap_or_default();
        for (higher, m) in &mult {
            let k = kostka(higher, &pad(&kappa)) as i128;
            if k == 0 {
                continue;
            }
            for (&e, &c) in m {
                *coeff.entry(e).or_insert(0) -= k * c;
            }
        }
        coeff.retain(|_, c| *c != 0);
        let done = kappa == *lambda;
        mult.insert(kappa, coeff);
        if done {
            break;
        }
    }
    let m = mult.remove(lambda).unwrap_or_default();
    GradedDim::from_pairs(m.into_iter().map(|(e, c)| {
        assert!(c >= 0, "negative multiplicity while peeling characters");
        (e, c as u64)
    }))
}
