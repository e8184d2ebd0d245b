use super::{AModule, SchurAlgebra};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::primefield::{self as pf, EchelonBasis, PFMatrix, Subspace};

/// A Weyl module `Δ(λ)` inside tensor space, its contravariant form and
/// its simple head `L(λ)`.
#[derive(Clone, Debug)]
pub struct WeylData {
    pub lambda: Partition,
    pub module: AModule,
    /// Basis vectors of `Δ(λ)` in tensor-space coordinates; the first is `v_λ`.
    pub basis: Vec<Vec<u32>>,
    /// Algebra basis index `g_k` with `basis[k] = b_{g_k} v_λ`.
    pub generators: Vec<usize>,
    /// Coordinates of the highest-weight vector (always `e_0`).
    pub highest_weight: Vec<u32>,
    /// `Gram[k][l] = ⟨x_k, x_l⟩`, normalised by `⟨v_λ, v_λ⟩ = 1`.
    pub gram: PFMatrix,
    pub radical: Subspace,
    pub simple: AModule,
}

impl WeylData {
    /// Dimension of the `α`-weight space of `Δ(λ)`.
    pub fn weight_dim(&self, s: &SchurAlgebra, alpha: &[usize]) -> usize {
        let rows: Vec<usize> = (0..s.tensor_dim())
            .filter(|&i| s.word_content(i) == alpha)
            .collect();
        let vecs: Vec<Vec<u32>> = self
            .basis
            .iter()
            .map(|v| rows.iter().map(|&r| v[r]).collect())
            .collect();
        Subspace::span(s.p, rows.len(), &vecs).dim()
    }

    pub fn simple_dim(&self) -> usize {
        self.simple.dim()
    }
}

/// Column-antisymmetrised tensor of shape `λ`: positions are the cells in
/// row-reading order and the base word puts letter `r` in every cell of row `r`.
pub(super) fn highest_weight_tensor(s: &SchurAlgebra, lambda: &Partition) -> Vec<u32> {
    let p = s.p;
    let mut cells = Vec::new();
    for (r, &len) in lambda.parts().iter().enumerate() {
        for c in 0..len {
            cells.push((r, c));
        }
    }
    let base: Vec<u8> = cells.iter().map(|&(r, _)| r as u8).collect();
    let conj = lambda.conjugate();
    // For each column, the positions of its cells (top to bottom).
    let columns: Vec<Vec<usize>> = (0..conj.len())
        .map(|c| {
            cells
                .iter()
                .enumerate()
                .filter(|(_, &(_, cc))| cc == c)
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    let mut v = vec![0u32; s.tensor_dim()];
    // Enumerate the column group as a product of symmetric groups.
    let per_column: Vec<Vec<(Vec<usize>, bool)>> = columns
        .iter()
        .map(|col| signed_permutations(col.len()))
        .collect();
    let mut choice = vec![0usize; columns.len()];
    loop {
        let mut word = base.clone();
        let mut odd = false;
        for (ci, col) in columns.iter().enumerate() {
            let (perm, sign) = &per_column[ci][choice[ci]];
            odd ^= sign;
            for (k, &pos) in col.iter().enumerate() {
                word[pos] = base[col[perm[k]]];
            }
        }
        let idx = s.word_index(&word).expect("content λ is a tensor weight");
        v[idx] = if odd { pf::sub(p, v[idx], 1) } else { pf::add(p, v[idx], 1) };
        // Odometer step.
        let mut k = 0;
        loop {
            if k == choice.len() {
                return v;
            }
            choice[k] += 1;
            if choice[k] < per_column[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// All permutations of `0..m` with their parity (`true` = odd).
pub(crate) fn signed_permutations(m: usize) -> Vec<(Vec<usize>, bool)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..m).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, odd: bool, out: &mut Vec<(Vec<usize>, bool)>) -> bool {
        // Returns parity after generating all permutations of the first k entries.
        if k <= 1 {
            out.push((cur.clone(), odd));
            return odd;
        }
        let mut odd = odd;
        for i in 0..k - 1 {
            odd = heap(k - 1, cur, odd, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
            odd = !odd;
        }
        heap(k - 1, cur, odd, out)
    }
    heap(m, &mut cur, false, &mut out);
    out
}

pub(super) fn weyl_module(s: &SchurAlgebra, lambda: &Partition) -> Result<WeylData> {
    if lambda.weight() != s.d {
        return Err(Error::WeightMismatch {
            lambda: lambda.clone(),
            d: s.d,
        });
    }
    if lambda.len() > s.n {
        return Err(Error::TooManyRows {
            lambda: lambda.clone(),
            n: s.n,
        });
    }
    let p = s.p;
    let v = highest_weight_tensor(s, lambda);
    let images = s.apply_all(&v);

    // Greedy basis x_k = b_{g_k} v; the λ-weight idempotent gives v itself first.
    let lam_weight: Vec<usize> = (0..s.n).map(|k| lambda.part(k)).collect();
    let xi_lambda = s
        .weights()
        .iter()
        .position(|w| *w == lam_weight)
        .map(|k| s.weight_idempotents()[k])
        .expect("λ is a weight");
    let mut order: Vec<usize> = vec![xi_lambda];
    order.extend((0..s.dim()).filter(|&o| o != xi_lambda));
    let mut ech = EchelonBasis::new(p, s.tensor_dim());
    let mut basis = Vec::new();
    let mut generators = Vec::new();
    for &o in &order {
        if ech.insert(&images[o]) {
            basis.push(images[o].clone());
            generators.push(o);
        }
    }
    debug_assert_eq!(basis[0], v);
    let m = basis.len();

    // Coordinates via an invertible m x m row selection.
    let xmat = PFMatrix::from_columns(p, s.tensor_dim(), &basis)?;
    let sel = xmat.transpose().rref().pivots;
    let xsel = xmat.select_rows(&sel);
    let xinv = xsel
        .inverse()?
        .ok_or_else(|| Error::Invariant("Weyl basis selection is singular".into()))?;
    let coords = |y: &[u32]| -> Vec<u32> {
        let ys: Vec<u32> = sel.iter().map(|&r| y[r]).collect();
        xinv.mat_vec(&ys).expect("selection length")
    };

    let images_of_basis: Vec<Vec<Vec<u32>>> =
        crate::exec::map(&basis, |x| s.apply_all(x));
    let mut action = vec![PFMatrix::zeros(p, m, m); s.dim()];
    for (k, imgs) in images_of_basis.iter().enumerate() {
        for (o, y) in imgs.iter().enumerate() {
            let c = coords(y);
            debug_assert_eq!(xmat.mat_vec(&c).unwrap(), *y, "Δ(λ) not closed");
            for (r, val) in c.into_iter().enumerate() {
                action[o].set(r, k, val);
            }
        }
    }
    let module = AModule::new(p, m, action)?;

    // ⟨x_k, x_l⟩ = coefficient of the base word in τ(b_{g_k}) x_l.
    let base_word_idx = {
        let mut word = Vec::new();
        for (r, &len) in lambda.parts().iter().enumerate() {
            word.extend(std::iter::repeat(r as u8).take(len));
        }
        s.word_index(&word).expect("base word")
    };
    debug_assert_eq!(v[base_word_idx], 1);
    let tau = s.transpose_antiauto();
    let mut gram = PFMatrix::zeros(p, m, m);
    for k in 0..m {
        let t = tau[generators[k]];
        for l in 0..m {
            let y = &images_of_basis[l][t];
            gram.set(k, l, y[base_word_idx]);
        }
    }
    if gram != gram.transpose() {
        return Err(Error::Invariant(format!("contravariant form of Δ{lambda} is not symmetric")));
    }
    let radical = Subspace::column_space_of(&gram.kernel_basis());
    let simple = module.quotient(&radical)?;
    let mut highest_weight = vec![0; m];
    highest_weight[0] = 1;
    Ok(WeylData {
        lambda: lambda.clone(),
        module,
        basis,
        generators,
        highest_weight,
        gram,
        radical,
        simple,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symchar::{dim_weyl, kostka};

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn signed_permutation_parities() {
        let perms = signed_permutations(3);
        assert_eq!(perms.len(), 6);
        for (perm, odd) in perms {
            let inversions = (0..3)
                .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j])
                .count();
            assert_eq!(odd, inversions % 2 == 1, "{perm:?}");
        }
    }

    #[test]
    fn weyl_dims_and_characters() {
        for (n, d, p) in [(2, 2, 2), (3, 3, 2), (3, 3, 3), (2, 3, 3)] {
            let s = SchurAlgebra::full(n, d, p).unwrap();
            for lambda in s.simple_labels() {
                let w = s.weyl_module(&lambda).unwrap();
                assert_eq!(w.module.dim() as u64, dim_weyl(&lambda, n));
                for alpha in s.weights() {
                    assert_eq!(w.weight_dim(&s, alpha) as u64, kostka(&lambda, alpha));
                }
                w.module.check_action(s.algebra()).unwrap();
            }
        }
    }

    #[test]
    fn simple_examples() {
        let s = SchurAlgebra::full(2, 2, 2).unwrap();
        assert_eq!(s.simple_module(&part("[2]")).unwrap().dim(), 2);
        assert_eq!(s.simple_module(&part("[1,1]")).unwrap().dim(), 1);
        let s = SchurAlgebra::full(3, 3, 2).unwrap();
        assert_eq!(s.weyl_module(&part("[2,1]")).unwrap().module.dim(), 8);
        assert!(s.weyl_module(&part("[1,1,1,1]")).is_err());
    }
}
