use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use super::StructAlgebra;
use crate::error::{Error, Result};
use crate::primefield::{self as pf, EchelonBasis, PFMatrix, Subspace};

/// Left module over a [`StructAlgebra`], given by the action matrix of
/// every basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AModule {
    p: u32,
    dim: usize,
    action: Vec<PFMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDump {
    pub p: u32,
    pub dim: usize,
    pub action: Vec<Vec<Vec<u32>>>,
}

/// Outcome of an isomorphism search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoResult {
    Isomorphic(PFMatrix),
    NotIsomorphic,
    Unknown,
}

impl IsoResult {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoResult::Isomorphic(_))
    }
}

impl AModule {
    pub fn new(p: u32, dim: usize, action: Vec<PFMatrix>) -> Result<Self> {
        for m in &action {
            if m.rows() != dim || m.cols() != dim || m.p() != p {
                return Err(Error::mismatch("module action", dim, format!("{}x{}", m.rows(), m.cols())));
            }
        }
        Ok(AModule { p, dim, action })
    }

    /// The regular left module.
    pub fn regular(alg: &StructAlgebra) -> Self {
        let action = (0..alg.dim())
            .map(|i| alg.left_mult_matrix(&alg.basis_vector(i)))
            .collect();
        AModule {
            p: alg.p(),
            dim: alg.dim(),
            action,
        }
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn action(&self, i: usize) -> &PFMatrix {
        &self.action[i]
    }
    pub fn actions(&self) -> &[PFMatrix] {
        &self.action
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn act(&self, a: &[u32]) -> PFMatrix {
        let mut m = PFMatrix::zeros(self.p, self.dim, self.dim);
        let p = self.p;
        for (i, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for r in 0..self.dim {
                let src = self.action[i].row(r).to_vec();
                pf::axpy(p, m.row_mut(r), c, &src);
            }
        }
        m
    }

    /// Action of element `a` on vector `v`.
    pub fn act_on(&self, a: &[u32], v: &[u32]) -> Vec<u32> {
        let mut out = vec![0; self.dim];
        for (i, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let w = self.action[i].mat_vec(v).expect("module vector length");
            pf::axpy(self.p, &mut out, c, &w);
        }
        out
    }

    /// Checks `ρ(b_i)ρ(b_j) = Σ c ρ(b_k)` on all pairs and that 1 acts as the identity.
    pub fn check_action(&self, alg: &StructAlgebra) -> Result<()> {
        if self.action.len() != alg.dim() {
            return Err(Error::mismatch("module action count", alg.dim(), self.action.len()));
        }
        if self.act(alg.identity()) != PFMatrix::identity(self.p, self.dim) {
            return Err(Error::Invariant("identity does not act as identity".into()));
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let lhs = self.action[i].matmul(&self.action[j])?;
                let mut rhs = PFMatrix::zeros(self.p, self.dim, self.dim);
                for &(k, c) in alg.product(i, j) {
                    rhs = rhs.add(&self.action[k as usize].scale(c))?;
                }
                if lhs != rhs {
                    return Err(Error::Invariant(format!("action fails on pair ({i}, {j})")));
                }
            }
        }
        Ok(())
    }

    /// Whether the subspace spanned by the columns of `basis` is stable.
    pub fn is_submodule(&self, basis: &Subspace) -> bool {
        self.action.iter().all(|m| {
            basis
                .basis()
                .iter()
                .all(|v| basis.contains(&m.mat_vec(v).expect("length")))
        })
    }

    /// Restriction to a stable subspace, in the subspace's echelon basis.
    pub fn submodule(&self, sub: &Subspace) -> Result<AModule> {
        let k = sub.dim();
        let mut action = Vec::with_capacity(self.action.len());
        for m in &self.action {
            let mut a = PFMatrix::zeros(self.p, k, k);
            for (c, v) in sub.basis().iter().enumerate() {
                let w = m.mat_vec(v)?;
                let coords = sub
                    .coords(&w)
                    .ok_or_else(|| Error::Invariant("subspace is not a submodule".into()))?;
                for (r, x) in coords.into_iter().enumerate() {
                    a.set(r, c, x);
                }
            }
            action.push(a);
        }
        AModule::new(self.p, k, action)
    }

    /// Quotient by a submodule. The quotient basis is the images of the
    /// standard basis vectors not at pivot positions of `sub`.
    pub fn quotient(&self, sub: &Subspace) -> Result<AModule> {
        let free: Vec<usize> = (0..self.dim).filter(|c| !sub.pivots().contains(c)).collect();
        let q = free.len();
        let mut action = Vec::with_capacity(self.action.len());
        for m in &self.action {
            let mut a = PFMatrix::zeros(self.p, q, q);
            for (c, &f) in free.iter().enumerate() {
                let mut w = m.column(f);
                // Reduce modulo the submodule; the result vanishes on its pivots.
                for (b, &pc) in sub.basis().iter().zip(sub.pivots()) {
                    let x = w[pc];
                    if x != 0 {
                        pf::axpy(self.p, &mut w, self.p - x, b);
                    }
                }
                for (r, &g) in free.iter().enumerate() {
                    a.set(r, c, w[g]);
                }
            }
            action.push(a);
        }
        AModule::new(self.p, q, action)
    }

    /// Dual module twisted by an anti-automorphism given as a permutation of
    /// the basis: `ρ#(b) = ρ(τ b)^T`.
    pub fn kuhn_dual(&self, tau: &[usize]) -> AModule {
        AModule {
            p: self.p,
            dim: self.dim,
            action: tau.iter().map(|&t| self.action[t].transpose()).collect(),
        }
    }

    /// Basis of `Hom_A(self, other)`, each as an `other.dim x self.dim` matrix.
    pub fn hom_basis(&self, other: &AModule) -> Vec<PFMatrix> {
        let (m, n) = (self.dim, other.dim);
        let unknowns = n * m;
        let mut rows = EchelonBasis::new(self.p, unknowns);
        // X is n x m, unknown index r * m + c. Equation: ρ_N(b) X - X ρ_M(b) = 0.
        'outer: for (a, b) in other.action.iter().zip(&self.action) {
            for r in 0..n {
                for c in 0..m {
                    let mut eq = vec![0u32; unknowns];
                    for t in 0..n {
                        let v = a.get(r, t);
                        if v != 0 {
                            eq[t * m + c] = pf::add(self.p, eq[t * m + c], v);
                        }
                    }
                    for t in 0..m {
                        let v = b.get(t, c);
                        if v != 0 {
                            eq[r * m + t] = pf::sub(self.p, eq[r * m + t], v);
                        }
                    }
                    rows.insert(&eq);
                    if rows.rank() == unknowns {
                        break 'outer;
                    }
                }
            }
        }
        let sys = if rows.rank() == 0 {
            PFMatrix::zeros(self.p, 0, unknowns)
        } else {
            PFMatrix::from_data(self.p, rows.rank(), unknowns, rows.vectors().concat()).expect("system")
        };
        let k = if rows.rank() == 0 {
            PFMatrix::identity(self.p, unknowns)
        } else {
            sys.kernel_basis()
        };
        (0..k.cols())
            .map(|j| PFMatrix::from_data(self.p, n, m, k.column(j)).expect("hom shape"))
            .collect()
    }

    /// Searches `Hom_A(self, other)` for an invertible element.
    ///
    /// Every combination is tried when `p^{dim Hom} ≤ sweep_cap`; otherwise up
    /// to `trials` random combinations from a fixed seed, and a failure is
    /// reported as [`IsoResult::Unknown`].
    pub fn is_isomorphic(&self, other: &AModule, sweep_cap: u64, trials: usize) -> IsoResult {
        if self.dim != other.dim || self.action.len() != other.action.len() {
            return IsoResult::NotIsomorphic;
        }
        if self.dim == 0 {
            return IsoResult::Isomorphic(PFMatrix::zeros(self.p, 0, 0));
        }
        let hom = self.hom_basis(other);
        if hom.is_empty() {
            return IsoResult::NotIsomorphic;
        }
        let combine = |coeffs: &[u32]| {
            let mut x = PFMatrix::zeros(self.p, self.dim, self.dim);
            for (h, &c) in hom.iter().zip(coeffs) {
                if c != 0 {
                    x = x.add(&h.scale(c)).expect("same shape");
                }
            }
            x
        };
        let r = hom.len() as u32;
        let total = (self.p as u64).checked_pow(r);
        if let Some(total) = total.filter(|&t| t <= sweep_cap) {
            for idx in 0..total {
                let mut coeffs = Vec::with_capacity(r as usize);
                let mut t = idx;
                for _ in 0..r {
                    coeffs.push((t % self.p as u64) as u32);
                    t /= self.p as u64;
                }
                let x = combine(&coeffs);
                if x.rank() == self.dim {
                    return IsoResult::Isomorphic(x);
                }
            }
            return IsoResult::NotIsomorphic;
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_150);
        for _ in 0..trials {
            let coeffs: Vec<u32> = (0..r).map(|_| rng.gen_range(0..self.p)).collect();
            let x = combine(&coeffs);
            if x.rank() == self.dim {
                return IsoResult::Isomorphic(x);
            }
        }
        IsoResult::Unknown
    }

    pub fn dump(&self) -> ModuleDump {
        ModuleDump {
            p: self.p,
            dim: self.dim,
            action: self
                .action
                .iter()
                .map(|m| (0..m.rows()).map(|r| m.row(r).to_vec()).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trivial_algebra() -> StructAlgebra {
        StructAlgebra::from_products(5, vec!["1".into()], vec![vec![(0, 1)]], vec![1]).unwrap()
    }

    #[test]
    fn iso_self_and_size_mismatch() {
        let a = trivial_algebra();
        let m = AModule::new(5, 2, vec![PFMatrix::identity(5, 2)]).unwrap();
        m.check_action(&a).unwrap();
        match m.is_isomorphic(&m, 1 << 16, 10) {
            IsoResult::Isomorphic(x) => assert_eq!(x.rank(), 2),
            other => panic!("{other:?}"),
        }
        let n = AModule::new(5, 1, vec![PFMatrix::identity(5, 1)]).unwrap();
        assert_eq!(m.is_isomorphic(&n, 1 << 16, 10), IsoResult::NotIsomorphic);
        assert_eq!(m.hom_basis(&m).len(), 4);
    }

    #[test]
    fn randomized_path_reports_unknown_or_witness() {
        let m = AModule::new(5, 2, vec![PFMatrix::identity(5, 2)]).unwrap();
        // Sweep cap below 5^4 forces the randomized path.
        assert!(m.is_isomorphic(&m, 1, 50).is_isomorphic());
    }
}
