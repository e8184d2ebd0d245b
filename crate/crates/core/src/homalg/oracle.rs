//! Ext dimensions as cohomology of `Hom_A(P_•, N)` for an arbitrary
//! projective resolution. Independent of minimality and of the radical.

use super::{ProjectiveData, Resolution};
use crate::error::{Error, Result};
use crate::primefield::{PFMatrix, Subspace};
use crate::schur::{AModule, StructAlgebra};

/// `dim H^s(Hom_A(P_•, N))` for `s = 0 .. res.len() - 2`.
///
/// `Hom_A(A e_t, N) ≅ e_t N`, and precomposition with `d_{s+1}` sends
/// `(n_t)_t` to `(Σ_t ρ_N(x_{t',t}) n_t)_{t'}`, where `x_{t',t} ∈ A e_t` are
/// the slot components of the generator `g_{t'}` of term `s + 1`.
pub fn hom_complex_cohomology(
    alg: &StructAlgebra,
    pd: &ProjectiveData,
    res: &Resolution,
    target: &AModule,
) -> Result<Vec<usize>> {
    let p = alg.p();
    let n = alg.dim();
    let pieces: Vec<Subspace> = pd
        .pims
        .iter()
        .map(|pim| Subspace::column_space_of(&target.act(&pim.idempotent)))
        .collect();
    let cdim = |s: usize| -> usize { res.terms[s].iter().map(|&l| pieces[l].dim()).sum() };

    // δ^s : C^s → C^{s+1} for s + 1 < len.
    let mut deltas: Vec<PFMatrix> = Vec::new();
    for s in 0..res.len().saturating_sub(1) {
        let (src, dst) = (&res.terms[s], &res.terms[s + 1]);
        let mut delta = PFMatrix::zeros(p, cdim(s + 1), cdim(s));
        let mut row_off = 0;
        for (tp, &lp) in dst.iter().enumerate() {
            let g = &res.generators[s + 1][tp];
            let mut col_off = 0;
            for (t, &l) in src.iter().enumerate() {
                let x = &g[t * n..(t + 1) * n];
                if x.iter().any(|&v| v != 0) {
                    let rho = target.act(x);
                    for (c, nvec) in pieces[l].basis().iter().enumerate() {
                        let img = rho.mat_vec(nvec)?;
                        let coords = pieces[lp]
                            .coords(&img)
                            .ok_or_else(|| Error::Invariant("Hom differential leaves e_t N".into()))?;
                        for (r, v) in coords.into_iter().enumerate() {
                            delta.set(row_off + r, col_off + c, v);
                        }
                    }
                }
                col_off += pieces[l].dim();
            }
            row_off += pieces[lp].dim();
        }
        deltas.push(delta);
    }
    for s in 1..deltas.len() {
        if !deltas[s].matmul(&deltas[s - 1])?.is_zero() {
            return Err(Error::Invariant(format!("δ^{s} ∘ δ^{} ≠ 0", s - 1)));
        }
    }
    let ranks: Vec<usize> = deltas.iter().map(PFMatrix::rank).collect();
    Ok((0..deltas.len())
        .map(|s| {
            let ker = cdim(s) - ranks[s];
            let im = if s == 0 { 0 } else { ranks[s - 1] };
            ker - im
        })
        .collect())
}
