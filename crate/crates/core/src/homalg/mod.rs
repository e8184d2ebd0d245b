//! Radicals, projective indecomposables, minimal projective resolutions
//! and Ext tables over a [`StructAlgebra`].
//!
//! Projective modules are realised inside free modules `A^r` (column
//! vectors of `r` algebra elements, with `A` acting slot-wise from the left).
//! A cover of a module `Ω` by `⊕ A e_t` sends `a e_t ↦ a g_t` for chosen
//! generators `g_t ∈ e_t Ω`; its kernel is the next syzygy.

mod ext;
pub mod oracle;

pub use ext::{ext_table, ExtComputation, ExtConfig, ExtRow, ExtTable};

use crate::error::{Error, Result};
use crate::exec;
use crate::primefield::{self as pf, EchelonBasis, PFMatrix, Subspace};
use crate::schur::{AModule, StructAlgebra};

/// The Jacobson radical with its nilpotency index.
#[derive(Clone, Debug)]
pub struct Radical {
    pub basis: Subspace,
    /// Least `k` with `J^k = 0`.
    pub nilpotency_index: usize,
}

/// Matrix whose rows are the coordinate functionals `a ↦ ρ_L(a)[r][c]`.
fn evaluation_matrix(alg: &StructAlgebra, simples: &[AModule]) -> PFMatrix {
    let rows: usize = simples.iter().map(|l| l.dim() * l.dim()).sum();
    let mut m = PFMatrix::zeros(alg.p(), rows, alg.dim());
    let mut r0 = 0;
    for l in simples {
        for i in 0..alg.dim() {
            let a = l.action(i);
            for r in 0..l.dim() {
                for c in 0..l.dim() {
                    m.set(r0 + r * l.dim() + c, i, a.get(r, c));
                }
            }
        }
        r0 += l.dim() * l.dim();
    }
    m
}

/// `rad A = ⋂ ann L` for a complete list of pairwise non-isomorphic,
/// absolutely simple modules.
pub fn radical(alg: &StructAlgebra, simples: &[AModule]) -> Result<Radical> {
    let ev = evaluation_matrix(alg, simples);
    let expected: usize = simples.iter().map(|l| l.dim() * l.dim()).sum();
    let rank = ev.rank();
    if rank != expected {
        return Err(Error::IncompleteSimples(format!(
            "A maps onto a space of dimension {rank}, but the simples need {expected}"
        )));
    }
    let j = Subspace::column_space_of(&ev.kernel_basis());
    let nilpotency_index = nilpotency(alg, &j)?;
    Ok(Radical {
        basis: j,
        nilpotency_index,
    })
}

/// Elements `g` with `A·{g} = J`. Since `J^k A = J^k`, these give
/// `J^{k+1} = J^k · G`.
fn left_generators(alg: &StructAlgebra, j: &Subspace) -> Vec<Vec<u32>> {
    let mut span = EchelonBasis::new(alg.p(), alg.dim());
    let mut gens = Vec::new();
    for x in j.basis() {
        if span.rank() == j.dim() {
            break;
        }
        if span.contains(x) {
            continue;
        }
        let r = alg.right_mult_matrix(x);
        for c in r.columns() {
            span.insert(&c);
        }
        gens.push(x.clone());
    }
    gens
}

/// Powers `J, J², …` until zero. A list of simples that misses one leaves a
/// non-nilpotent kernel, which is reported here.
fn nilpotency(alg: &StructAlgebra, j: &Subspace) -> Result<usize> {
    if j.dim() == 0 {
        return Ok(1);
    }
    let rights: Vec<PFMatrix> = exec::map(&left_generators(alg, j), |g| alg.right_mult_matrix(g));
    let mut power = j.clone();
    let mut k = 1;
    while power.dim() > 0 {
        let cols = power.to_matrix().transpose();
        let prods: Vec<PFMatrix> = exec::map(&rights, |r| r.matmul(&cols).expect("square"));
        let mut stacked = prods[0].transpose();
        for m in &prods[1..] {
            stacked = stacked.vstack(&m.transpose())?;
        }
        let next = Subspace::row_space(&stacked);
        if next.dim() == power.dim() {
            return Err(Error::IncompleteSimples(format!(
                "the common annihilator of the simples is not nilpotent (stable at dimension {})",
                next.dim()
            )));
        }
        power = next;
        k += 1;
    }
    Ok(k)
}

/// A projective indecomposable `P = A e` with top `L(label)`.
#[derive(Clone, Debug)]
pub struct Pim {
    /// Index into the list of simples.
    pub label: usize,
    pub idempotent: Vec<u32>,
    /// Basis of `A e` in algebra coordinates.
    pub basis: Subspace,
}

impl Pim {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }
}

/// `e ↦ 3e² − 2e³` until `e² = e`.
pub fn lift_idempotent(alg: &StructAlgebra, e: &[u32], max_steps: usize) -> Result<Vec<u32>> {
    let p = alg.p();
    let mut e = e.to_vec();
    for _ in 0..=max_steps {
        let e2 = alg.mul(&e, &e);
        if e2 == e {
            return Ok(e);
        }
        let e3 = alg.mul(&e2, &e);
        e = e2
            .iter()
            .zip(&e3)
            .map(|(&a, &b)| pf::sub(p, pf::mul(p, 3, a), pf::mul(p, 2, b)))
            .collect();
    }
    Err(Error::LiftingDidNotConverge(max_steps))
}

/// `A e` for an element `e`.
pub fn left_ideal(alg: &StructAlgebra, e: &[u32]) -> Subspace {
    let r = alg.right_mult_matrix(e);
    Subspace::column_space_of(&r)
}

/// Everything homological computations need about an algebra.
#[derive(Clone, Debug)]
pub struct ProjectiveData {
    pub simples: Vec<AModule>,
    pub radical: Radical,
    pub pims: Vec<Pim>,
}

impl ProjectiveData {
    pub fn new(alg: &StructAlgebra, simples: Vec<AModule>) -> Result<Self> {
        let radical = radical(alg, &simples)?;
        let pims = pims(alg, &simples, &radical)?;
        Ok(ProjectiveData {
            simples,
            radical,
            pims,
        })
    }
}

/// Primitive idempotents lifted from `A/rad`, one per simple, with their PIMs.
pub fn pims(alg: &StructAlgebra, simples: &[AModule], rad: &Radical) -> Result<Vec<Pim>> {
    let ev = evaluation_matrix(alg, simples);
    let mut out = Vec::with_capacity(simples.len());
    let mut offset = 0;
    for (label, l) in simples.iter().enumerate() {
        let mut target = vec![0u32; ev.rows()];
        target[offset] = 1; // matrix unit E_00 of this simple, zero elsewhere
        offset += l.dim() * l.dim();
        let eps = ev
            .solve(&target)?
            .ok_or_else(|| Error::Invariant("matrix unit not in the image of A".into()))?;
        let e = lift_idempotent(alg, &eps, rad.nilpotency_index + 2)?;
        out.push(Pim {
            label,
            basis: left_ideal(alg, &e),
            idempotent: e,
        });
    }
    let total: usize = out.iter().map(|pm| simples[pm.label].dim() * pm.dim()).sum();
    if total != alg.dim() {
        return Err(Error::Invariant(format!(
            "Σ dim L · dim P = {total}, but dim A = {}",
            alg.dim()
        )));
    }
    Ok(out)
}

/// Where the module being covered lives.
#[derive(Clone, Copy, Debug)]
pub enum Ambient<'a> {
    /// An abstract module given by action matrices.
    Module(&'a AModule),
    /// A submodule of the free module `A^r`.
    Free(usize),
}

impl Ambient<'_> {
    fn dim(&self, alg: &StructAlgebra) -> usize {
        match self {
            Ambient::Module(m) => m.dim(),
            Ambient::Free(r) => r * alg.dim(),
        }
    }

    /// Matrix of `a ↦ a·g` from `A` into the ambient space.
    fn right_action(&self, alg: &StructAlgebra, g: &[u32]) -> PFMatrix {
        match self {
            Ambient::Module(m) => {
                let cols: Vec<Vec<u32>> = m
                    .actions()
                    .iter()
                    .map(|a| a.mat_vec(g).expect("vector length"))
                    .collect();
                PFMatrix::from_columns(alg.p(), m.dim(), &cols).expect("shape")
            }
            Ambient::Free(r) => {
                let n = alg.dim();
                let mut out = alg.right_mult_matrix(&g[..n]);
                for t in 1..*r {
                    out = out
                        .vstack(&alg.right_mult_matrix(&g[t * n..(t + 1) * n]))
                        .expect("shape");
                }
                out
            }
        }
    }

    /// `a·v` for each column vector `v`.
    fn act_many(&self, alg: &StructAlgebra, a: &[u32], vectors: &[Vec<u32>]) -> Vec<Vec<u32>> {
        if vectors.is_empty() {
            return Vec::new();
        }
        match self {
            Ambient::Module(m) => {
                let rho = m.act(a);
                vectors.iter().map(|v| rho.mat_vec(v).expect("length")).collect()
            }
            Ambient::Free(r) => {
                let n = alg.dim();
                let l = alg.left_mult_matrix(a);
                // Columns: every slot of every vector.
                let cols: Vec<Vec<u32>> = vectors
                    .iter()
                    .flat_map(|v| (0..*r).map(move |t| v[t * n..(t + 1) * n].to_vec()))
                    .collect();
                let w = PFMatrix::from_columns(alg.p(), n, &cols).expect("shape");
                let prod = l.matmul(&w).expect("shape");
                (0..vectors.len())
                    .map(|k| {
                        let mut out = Vec::with_capacity(r * n);
                        for t in 0..*r {
                            out.extend(prod.column(k * r + t));
                        }
                        out
                    })
                    .collect()
            }
        }
    }
}

/// How generators of each syzygy are chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverStrategy {
    /// Cover the top `Ω/JΩ` only: the minimal resolution.
    Minimal,
    /// Greedily add `e_μ`-components of basis vectors until they generate
    /// `Ω`; no radical involved. Used as an independent oracle.
    Greedy,
}

/// A truncated projective resolution `P_s → … → P_0 → M`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub target_dim: usize,
    /// PIM labels of the summands of each term.
    pub terms: Vec<Vec<usize>>,
    pub term_dims: Vec<usize>,
    /// `differentials[0]: P_0 → M`, `differentials[s]: P_s → P_{s-1}`, in the
    /// bases of the PIM summands.
    pub differentials: Vec<PFMatrix>,
    /// Generators `g_t` of each term's image: for `s = 0` vectors of `M`,
    /// otherwise vectors of `A^{r_{s-1}}`.
    pub generators: Vec<Vec<Vec<u32>>>,
    pub minimal: bool,
}

impl Resolution {
    /// Multiplicity of `P(label)` in term `s` (zero past the computed range).
    pub fn multiplicity(&self, s: usize, label: usize) -> usize {
        self.terms
            .get(s)
            .map_or(0, |t| t.iter().filter(|&&l| l == label).count())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `d_{s-1} ∘ d_s = 0` for every computed pair.
    pub fn check_complex(&self) -> Result<()> {
        for s in 1..self.differentials.len() {
            let prod = self.differentials[s - 1].matmul(&self.differentials[s])?;
            if !prod.is_zero() {
                return Err(Error::Invariant(format!("d_{} ∘ d_{s} ≠ 0", s - 1)));
            }
        }
        Ok(())
    }

    /// Surjectivity onto `M` and `rank d_{s+1} = dim P_s − rank d_s` wherever
    /// both maps were computed.
    pub fn check_exact(&self) -> Result<()> {
        let ranks: Vec<usize> = self.differentials.iter().map(PFMatrix::rank).collect();
        if let Some(&r0) = ranks.first() {
            if r0 != self.target_dim {
                return Err(Error::Invariant(format!("P_0 → M has rank {r0}, dim M = {}", self.target_dim)));
            }
        }
        for s in 0..ranks.len().saturating_sub(1) {
            if ranks[s + 1] + ranks[s] != self.term_dims[s] {
                return Err(Error::Invariant(format!(
                    "not exact at P_{s}: rank d_{} = {}, dim ker d_{s} = {}",
                    s + 1,
                    ranks[s + 1],
                    self.term_dims[s] - ranks[s]
                )));
            }
        }
        Ok(())
    }

    /// Every generator of a higher term lies in `J·A^r`, so each image is in `rad P`.
    pub fn check_minimal(&self, alg: &StructAlgebra, rad: &Radical) -> Result<()> {
        let n = alg.dim();
        for (s, gens) in self.generators.iter().enumerate().skip(1) {
            for g in gens {
                for chunk in g.chunks(n) {
                    if !rad.basis.contains(chunk) {
                        return Err(Error::Invariant(format!("image of d_{s} is not in rad P_{}", s - 1)));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Resolves `m` through terms `0..=s_max` (the kernel of the last cover is
/// not computed). `max_total_dim` caps `Σ dim P_s`.
pub fn resolve(
    alg: &StructAlgebra,
    pd: &ProjectiveData,
    m: &AModule,
    s_max: usize,
    strategy: CoverStrategy,
    max_total_dim: usize,
) -> Result<Resolution> {
    let mut res = Resolution {
        target_dim: m.dim(),
        terms: Vec::new(),
        term_dims: Vec::new(),
        differentials: Vec::new(),
        generators: Vec::new(),
        minimal: strategy == CoverStrategy::Minimal,
    };
    let p = alg.p();
    let mut omega = Subspace::span(p, m.dim(), &(0..m.dim()).map(|k| unit(p, m.dim(), k)).collect::<Vec<_>>());
    let mut prev_labels: Vec<usize> = Vec::new();
    let mut total = 0usize;
    for s in 0..=s_max {
        let amb = if s == 0 { Ambient::Module(m) } else { Ambient::Free(prev_labels.len()) };
        let (labels, gens) = if omega.dim() == 0 {
            (Vec::new(), Vec::new())
        } else {
            match strategy {
                CoverStrategy::Minimal => top_generators(alg, pd, &amb, &omega),
                CoverStrategy::Greedy => greedy_generators(alg, pd, &amb, &omega),
            }
        };
        // Cover map F: P_s → ambient, columns = images of the PIM bases.
        let amb_dim = amb.dim(alg);
        let mut cols: Vec<Vec<u32>> = Vec::new();
        for (&lab, g) in labels.iter().zip(&gens) {
            let ra = amb.right_action(alg, g);
            let b = pd.pims[lab].basis.to_matrix().transpose();
            let img = ra.matmul(&b)?;
            cols.extend(img.columns());
        }
        let dim_p = cols.len();
        total += dim_p;
        if total > max_total_dim {
            return Err(Error::cap("total resolution dimension", total as u128, max_total_dim as u128));
        }
        let f = if dim_p == 0 {
            PFMatrix::zeros(p, amb_dim, 0)
        } else {
            PFMatrix::from_columns(p, amb_dim, &cols)?
        };
        let d = if s == 0 {
            f.clone()
        } else {
            to_term_coords(pd, &prev_labels, &f)?
        };
        res.terms.push(labels.clone());
        res.term_dims.push(dim_p);
        res.differentials.push(d);
        res.generators.push(gens);
        if s == s_max {
            break;
        }
        // Next syzygy: kernel of F, moved into A^r.
        let ker = if dim_p == 0 { PFMatrix::zeros(p, 0, 0) } else { f.kernel_basis() };
        let vecs = term_vectors(alg, pd, &labels, &ker);
        omega = Subspace::span(p, labels.len() * alg.dim(), &vecs);
        prev_labels = labels;
    }
    Ok(res)
}

fn unit(p: u32, n: usize, k: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[k] = 1 % p;
    v
}

/// Columns of `ker` (coordinates in the PIM bases of a term) as vectors of `A^r`.
fn term_vectors(alg: &StructAlgebra, pd: &ProjectiveData, labels: &[usize], ker: &PFMatrix) -> Vec<Vec<u32>> {
    let n = alg.dim();
    (0..ker.cols())
        .map(|c| {
            let col = ker.column(c);
            let mut out = Vec::with_capacity(labels.len() * n);
            let mut off = 0;
            for &lab in labels {
                let b = &pd.pims[lab].basis;
                out.extend(b.combine(&col[off..off + b.dim()]));
                off += b.dim();
            }
            out
        })
        .collect()
}

/// Re-expresses vectors of `A^r` (columns of `f`) in the PIM bases of a term.
fn to_term_coords(pd: &ProjectiveData, labels: &[usize], f: &PFMatrix) -> Result<PFMatrix> {
    let n = if labels.is_empty() { 0 } else { f.rows() / labels.len() };
    let dims: Vec<usize> = labels.iter().map(|&l| pd.pims[l].dim()).collect();
    let total: usize = dims.iter().sum();
    let mut out = PFMatrix::zeros(f.p(), total, f.cols());
    for c in 0..f.cols() {
        let col = f.column(c);
        let mut off = 0;
        for (t, &lab) in labels.iter().enumerate() {
            let coords = pd.pims[lab]
                .basis
                .coords(&col[t * n..(t + 1) * n])
                .ok_or_else(|| Error::Invariant("image leaves the projective term".into()))?;
            for (k, x) in coords.into_iter().enumerate() {
                out.set(off + k, c, x);
            }
            off += dims[t];
        }
    }
    Ok(out)
}

/// Generators of `Ω` lifting bases of `e_μ Ω / e_μ JΩ`, with their labels.
fn top_generators(
    alg: &StructAlgebra,
    pd: &ProjectiveData,
    amb: &Ambient,
    omega: &Subspace,
) -> (Vec<usize>, Vec<Vec<u32>>) {
    let p = alg.p();
    let k = omega.dim();
    let jprods: Vec<Vec<Vec<u32>>> = exec::map(pd.radical.basis.basis(), |j| {
        amb.act_many(alg, j, omega.basis())
            .iter()
            .map(|v| omega.coords_unchecked(v))
            .collect()
    });
    let jomega = Subspace::span(p, k, &jprods.concat());
    let mut labels = Vec::new();
    let mut gens = Vec::new();
    for pim in &pd.pims {
        let mut ech = EchelonBasis::new(p, k);
        for v in jomega.basis() {
            ech.insert(v);
        }
        for g in amb.act_many(alg, &pim.idempotent, omega.basis()) {
            if ech.insert(&omega.coords_unchecked(&g)) {
                labels.push(pim.label);
                gens.push(g);
            }
        }
    }
    (labels, gens)
}

/// Greedy generating set drawn from the `e_μ Ω` without using the radical.
fn greedy_generators(
    alg: &StructAlgebra,
    pd: &ProjectiveData,
    amb: &Ambient,
    omega: &Subspace,
) -> (Vec<usize>, Vec<Vec<u32>>) {
    let p = alg.p();
    let k = omega.dim();
    let mut covered = EchelonBasis::new(p, k);
    let mut labels = Vec::new();
    let mut gens = Vec::new();
    for pim in &pd.pims {
        for g in amb.act_many(alg, &pim.idempotent, omega.basis()) {
            if covered.rank() == k {
                return (labels, gens);
            }
            if covered.contains(&omega.coords_unchecked(&g)) {
                continue;
            }
            let span = amb.right_action(alg, &g);
            for c in 0..span.cols() {
                covered.insert(&omega.coords_unchecked(&span.column(c)));
            }
            labels.push(pim.label);
            gens.push(g);
        }
    }
    (labels, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::SchurAlgebra;

    fn part(s: &str) -> crate::Partition {
        s.parse().unwrap()
    }

    fn s22() -> (SchurAlgebra, ProjectiveData) {
        let s = SchurAlgebra::full(2, 2, 2).unwrap();
        let simples = s
            .simple_labels()
            .iter()
            .map(|l| s.simple_module(l).unwrap())
            .collect();
        let pd = ProjectiveData::new(s.algebra(), simples).unwrap();
        (s, pd)
    }

    #[test]
    fn radical_of_s22() {
        let (_, pd) = s22();
        assert_eq!(pd.radical.basis.dim(), 5);
        assert!(pd.radical.nilpotency_index >= 2);
    }

    #[test]
    fn incomplete_simples_are_detected() {
        let s = SchurAlgebra::full(2, 2, 2).unwrap();
        let only = vec![s.simple_module(&part("[2]")).unwrap()];
        assert!(matches!(radical(s.algebra(), &only), Err(Error::IncompleteSimples(_))));
    }

    #[test]
    fn pims_of_s22() {
        let (s, pd) = s22();
        let dims: usize = pd.pims.iter().map(|p| pd.simples[p.label].dim() * p.dim()).sum();
        assert_eq!(dims, s.dim());
        for pim in &pd.pims {
            assert!(s.algebra().is_idempotent(&pim.idempotent));
        }
    }

    #[test]
    fn resolution_of_simple_in_s22() {
        let (s, pd) = s22();
        let l = &pd.simples[0];
        let res = resolve(s.algebra(), &pd, l, 4, CoverStrategy::Minimal, 100_000).unwrap();
        res.check_complex().unwrap();
        res.check_exact().unwrap();
        res.check_minimal(s.algebra(), &pd.radical).unwrap();
        let row0: Vec<usize> = (0..=2).map(|k| res.multiplicity(k, 0)).collect();
        assert_eq!(row0, vec![1, 0, 1]);
        let row1: Vec<usize> = (0..=2).map(|k| res.multiplicity(k, 1)).collect();
        assert_eq!(row1, vec![0, 1, 0]);
    }

    #[test]
    fn projective_module_resolves_in_one_step() {
        let (s, pd) = s22();
        let pim = &pd.pims[1];
        let p_mod = AModule::regular(s.algebra()).submodule(&pim.basis).unwrap();
        let res = resolve(s.algebra(), &pd, &p_mod, 3, CoverStrategy::Minimal, 100_000).unwrap();
        assert_eq!(res.term_dims[0], pim.dim());
        assert!(res.term_dims[1..].iter().all(|&d| d == 0));
    }
}
