use strictpoly::partitions::Partition;
use strictpoly::schur::*;

mod common;
use common::{p, ssyt_by_degree};

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

fn multinomial(alpha: &[usize]) -> u64 {
    let d: usize = alpha.iter().sum();
    alpha.iter().fold(common::factorial(d), |acc, &a| acc / common::factorial(a))
}

/// Nonnegative integer matrices with the given row and column sums: these
/// index the Σ_d-orbits on word pairs of contents (α, β).
fn contingency_tables(rows: &[usize], cols: &[usize]) -> u64 {
    fn go(rows: &[usize], cols: &mut Vec<usize>) -> u64 {
        let Some((&r, rest)) = rows.split_first() else {
            return cols.iter().all(|&c| c == 0) as u64;
        };
        fn fill(k: usize, rem: usize, rest: &[usize], cols: &mut Vec<usize>) -> u64 {
            if k == cols.len() {
                return if rem == 0 { go(rest, cols) } else { 0 };
            }
            let mut total = 0;
            for x in 0..=rem.min(cols[k]) {
                cols[k] -= x;
                total += fill(k + 1, rem - x, rest, cols);
                cols[k] += x;
            }
            total
        }
        fill(0, r, rest, cols)
    }
    go(rows, &mut cols.to_vec())
}

/// Kostka number by counting tableaux: letter j gets degree B^j, so the
/// degree of a tableau encodes its content.
fn kostka_oracle(lambda: &Partition, alpha: &[usize]) -> u64 {
    let base = lambda.weight() as i64 + 1;
    let letters: Vec<i64> = (0..alpha.len() as u32).map(|j| base.pow(j)).collect();
    let key: i64 = alpha.iter().enumerate().map(|(j, &a)| a as i64 * base.pow(j as u32)).sum();
    ssyt_by_degree(lambda.parts(), &letters).get(&key).copied().unwrap_or(0)
}

/// Steinberg tensor product for two rows: dim L(a, b) = Π (digit + 1) over
/// the base-p digits of a − b.
fn gl2_simple_dim(lambda: &Partition, p: u32) -> usize {
    let parts = lambda.parts();
    let mut diff = parts[0] - parts.get(1).copied().unwrap_or(0);
    let mut dim = 1;
    while diff > 0 {
        dim *= diff % p as usize + 1;
        diff /= p as usize;
    }
    dim
}

fn vector_of(a: &StructAlgebra, i: usize) -> Vec<u32> {
    a.basis_vector(i)
}

#[test]
fn full_dimension_is_binomial() {
    for p in [2u32, 3] {
        for n in 1..=3usize {
            for d in 1..=4usize {
                if n.pow(d as u32) > 100 {
                    continue;
                }
                let s = SchurAlgebra::full(n, d, p).unwrap();
                assert_eq!(s.dim() as u64, binom((n * n + d - 1) as u64, d as u64), "S({n},{d})");
                assert_eq!(s.tensor_dim(), n.pow(d as u32));
            }
        }
    }
}

#[test]
fn dominant_corner_dimension_counts_tables() {
    for (n, d) in [(2, 2), (2, 3), (3, 3), (3, 4), (4, 4)] {
        let s = SchurAlgebra::new(n, d, 2, WeightForm::DominantCorner, &SchurCaps::default()).unwrap();
        let dominant: Vec<Vec<usize>> = common::partitions(d)
            .into_iter()
            .filter(|l| l.len() <= n)
            .map(|mut l| {
                l.resize(n, 0);
                l
            })
            .collect();
        let expected: u64 = dominant
            .iter()
            .flat_map(|a| dominant.iter().map(move |b| contingency_tables(a, b)))
            .sum();
        assert_eq!(s.dim() as u64, expected, "n={n} d={d}");
        assert_eq!(s.weights(), dominant.as_slice());
    }
}

#[test]
fn weight_idempotents_decompose_identity() {
    for (n, d, p) in [(2, 2, 2), (2, 3, 3), (3, 2, 2), (3, 3, 5)] {
        let s = SchurAlgebra::full(n, d, p).unwrap();
        let a = s.algebra();
        let xi = s.weight_idempotents();
        let mut sum = vec![0u32; a.dim()];
        for &x in xi {
            sum = a.add(&sum, &vector_of(a, x));
        }
        assert_eq!(sum, a.identity());
        for (k, &x) in xi.iter().enumerate() {
            for &y in &xi[k + 1..] {
                assert!(a.mul(&vector_of(a, x), &vector_of(a, y)).iter().all(|&c| c == 0));
            }
            let rank = s.tensor_matrix(x).rank() as u64;
            assert_eq!(rank, multinomial(&s.weights()[k]));
            assert_eq!(s.weight_space_dim(&s.weights()[k]) as u64, rank);
        }
    }
}

#[test]
fn transpose_is_an_anti_involution() {
    for (n, d, p) in [(2, 2, 2), (2, 3, 3), (3, 2, 5)] {
        let s = SchurAlgebra::full(n, d, p).unwrap();
        let a = s.algebra();
        let tau = s.transpose_antiauto();
        let apply = |v: &[u32]| {
            let mut out = vec![0u32; v.len()];
            for (i, &c) in v.iter().enumerate() {
                out[tau[i]] = c;
            }
            out
        };
        for i in 0..a.dim() {
            assert_eq!(tau[tau[i]], i);
            assert_eq!(s.tensor_matrix(tau[i]), s.tensor_matrix(i).transpose());
            for j in 0..a.dim() {
                let (x, y) = (vector_of(a, i), vector_of(a, j));
                assert_eq!(apply(&a.mul(&x, &y)), a.mul(&apply(&y), &apply(&x)));
            }
        }
    }
}

#[test]
fn tensor_representation_is_faithful_action() {
    let s = SchurAlgebra::full(2, 3, 2).unwrap();
    let m = s.tensor_module();
    m.check_action(s.algebra()).unwrap();
    let mats: Vec<Vec<u32>> = (0..s.dim()).map(|o| s.tensor_matrix(o).data().to_vec()).collect();
    let t = s.tensor_dim();
    let stacked = strictpoly::PFMatrix::from_columns(2, t * t, &mats).unwrap();
    assert_eq!(stacked.rank(), s.dim());
    let y: Vec<u32> = (0..t as u32).map(|k| k % 2).collect();
    let all = s.apply_all(&y);
    for o in 0..s.dim() {
        assert_eq!(all[o], s.apply(o, &y));
        assert_eq!(all[o], s.tensor_matrix(o).mat_vec(&y).unwrap());
    }
}

#[test]
fn weyl_characters_are_kostka_numbers() {
    for (n, d, p) in [(2, 4, 2), (3, 3, 2), (3, 4, 3), (2, 3, 5)] {
        let s = SchurAlgebra::full(n, d, p).unwrap();
        for lambda in s.simple_labels() {
            let w = s.weyl_module(&lambda).unwrap();
            let mut total = 0;
            for alpha in s.weights() {
                let k = kostka_oracle(&lambda, alpha);
                assert_eq!(w.weight_dim(&s, alpha) as u64, k, "{lambda} {alpha:?}");
                total += k;
            }
            assert_eq!(w.module.dim() as u64, total);
        }
    }
}

#[test]
fn weyl_examples() {
    let s = SchurAlgebra::full(3, 3, 2).unwrap();
    let w = s.weyl_module(&p(&[2, 1])).unwrap();
    assert_eq!(w.module.dim(), 8);
    assert_eq!(w.simple_dim(), 8);
    assert_eq!(w.highest_weight[0], 1);
    assert_eq!(w.gram.get(0, 0), 1);
    let s = SchurAlgebra::full(2, 2, 2).unwrap();
    assert_eq!(s.simple_module(&p(&[2])).unwrap().dim(), 2);
    assert_eq!(s.simple_module(&p(&[1, 1])).unwrap().dim(), 1);
}

#[test]
fn gl2_simples_follow_steinberg() {
    for p in [2u32, 3] {
        for d in 1..=6 {
            let s = SchurAlgebra::full(2, d, p).unwrap();
            for lambda in s.simple_labels() {
                let l = s.simple_module(&lambda).unwrap();
                assert_eq!(l.dim(), gl2_simple_dim(&lambda, p), "{lambda} p={p}");
            }
        }
    }
}

#[test]
fn weyl_radical_is_submodule_and_head_is_simple() {
    for (n, d, p) in [(2, 3, 2), (3, 3, 2), (3, 3, 3)] {
        let s = SchurAlgebra::full(n, d, p).unwrap();
        for lambda in s.simple_labels() {
            let w = s.weyl_module(&lambda).unwrap();
            assert!(w.module.is_submodule(&w.radical));
            let q = w.module.quotient(&w.radical).unwrap();
            assert_eq!(q.dim(), w.simple_dim());
            assert!(q.is_isomorphic(&w.simple, 1 << 16, 64).is_isomorphic());
            assert_eq!(w.gram.rank(), w.simple_dim());
            // End of a simple module over F_p with split endomorphisms.
            assert_eq!(w.simple.hom_basis(&w.simple).len(), 1);
        }
    }
}

#[test]
fn semisimple_when_p_exceeds_degree() {
    let s = SchurAlgebra::full(3, 3, 5).unwrap();
    for lambda in s.simple_labels() {
        let w = s.weyl_module(&lambda).unwrap();
        assert_eq!(w.radical.dim(), 0, "{lambda}");
    }
}

#[test]
fn simples_are_kuhn_self_dual() {
    for p in [2u32, 3] {
        for d in 1..=3 {
            let s = SchurAlgebra::full(3, d, p).unwrap();
            let labels = s.simple_labels();
            let simples: Vec<AModule> = labels.iter().map(|l| s.simple_module(l).unwrap()).collect();
            for (k, l) in simples.iter().enumerate() {
                let dual = s.kuhn_dual(l);
                dual.check_action(s.algebra()).unwrap();
                for (j, m) in simples.iter().enumerate() {
                    assert_eq!(dual.is_isomorphic(m, 1 << 16, 64).is_isomorphic(), j == k, "{} vs {}", labels[k], labels[j]);
                }
            }
        }
    }
}

#[test]
fn weyl_module_is_not_self_dual_when_reducible() {
    let s = SchurAlgebra::full(2, 2, 2).unwrap();
    let w = s.weyl_module(&p(&[2])).unwrap().module;
    assert_eq!(w.dim(), 3);
    let dual = s.kuhn_dual(&w);
    assert_eq!(w.is_isomorphic(&dual, 1 << 16, 64), IsoResult::NotIsomorphic);
}

#[test]
fn dumps_round_trip() {
    let s = SchurAlgebra::full(2, 3, 3).unwrap();
    let dump = s.algebra().dump(None);
    let json = serde_json::to_string(&dump).unwrap();
    let back: AlgebraDump = serde_json::from_str(&json).unwrap();
    assert_eq!(back, dump);
    assert_eq!(&StructAlgebra::from_dump(&back).unwrap(), s.algebra());
    let m = s.simple_module(&p(&[2, 1])).unwrap().dump();
    let back: ModuleDump = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
    assert_eq!(back, m);
}

#[test]
fn caps_and_arguments() {
    let caps = SchurCaps {
        max_tensor_dim: 8,
        ..SchurCaps::default()
    };
    assert!(SchurAlgebra::new(3, 2, 2, WeightForm::Full, &caps).unwrap_err().is_resource_refusal());
    assert!(SchurAlgebra::full(2, 2, 4).is_err());
    assert!(SchurAlgebra::full(2, 0, 2).is_err());
    let s = SchurAlgebra::full(2, 2, 2).unwrap();
    assert!(s.weyl_module(&p(&[1, 1, 1])).is_err());
}
