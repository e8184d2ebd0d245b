use std::collections::BTreeMap;

use proptest::prelude::*;
use strictpoly::partitions::{basic_diagrams, blocks, enumerate_partitions, Partition};
use strictpoly::symchar::lr::{lr_coeff_uncached, lr_multiply};
use strictpoly::symchar::*;

mod common;
use common::{lr_by_characters, p, ssyt_by_degree};

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn oracle_graded(lambda: &Partition, letters: &[i64]) -> GradedDim {
    GradedDim::from_pairs(ssyt_by_degree(lambda.parts(), letters))
}

#[test]
fn dim_examples() {
    for n in 1..6 {
        for d in 0..6 {
            assert_eq!(dim_schur(&p(&[d]).clone(), n), binomial((n + d - 1) as u64, d as u64));
        }
    }
    assert_eq!(dim_schur(&part("[1,1,1]"), 2), 0);
    assert_eq!(dim_schur(&part("[2,1]"), 3), 8);
    assert_eq!(dim_weyl(&part("[2,1]"), 3), 8);
}

#[test]
fn hook_content_matches_tableaux() {
    for d in 0..=8 {
        for l in enumerate_partitions(d) {
            for n in 1..=6 {
                let brute: u64 = ssyt_by_degree(l.parts(), &vec![0; n]).values().sum();
                assert_eq!(dim_schur(&l, n), brute, "{l} n={n}");
                assert_eq!(dim_schur_ssyt(&l, n), brute, "{l} n={n}");
            }
        }
    }
}

#[test]
fn graded_schur_examples() {
    let a = GradedAlphabet::new(vec![0, 2]);
    assert_eq!(graded_dim_schur(&part("[1]"), &a), GradedDim::from_coeffs(&[1, 0, 1]));
    assert_eq!(graded_dim_schur(&part("[2]"), &a), GradedDim::from_coeffs(&[1, 0, 1, 0, 1]));
    for d in 0..=5 {
        for l in enumerate_partitions(d) {
            for n in 1..=4 {
                assert_eq!(
                    graded_dim_schur(&l, &GradedAlphabet::trivial(n)),
                    GradedDim::constant(dim_schur(&l, n))
                );
            }
        }
    }
}

#[test]
fn graded_schur_matches_tableaux() {
    let alphabets = [vec![0, 2], vec![0, 2, 4], vec![0, 0, 2, 6], vec![0, 2, 2, 4, 4]];
    for letters in alphabets {
        let a = GradedAlphabet::new(letters.clone());
        for d in 0..=5 {
            for l in enumerate_partitions(d) {
                assert_eq!(graded_dim_schur(&l, &a), oracle_graded(&l, &letters), "{l} {letters:?}");
            }
        }
    }
}

#[test]
fn ai_alphabets() {
    assert_eq!(graded_dim_ai(2, 1).degrees(), &[0, 2]);
    assert_eq!(graded_dim_ai(3, 1).degrees(), &[0, 2, 4]);
    assert_eq!(graded_dim_ai(2, 2).degrees(), &[0, 2, 4, 6]);
    for p in [2u32, 3, 5] {
        for i in 1..=3 {
            let g = graded_dim_ai(p, i).graded_dim();
            let top = 2 * ((p as i64).pow(i) - 1);
            assert_eq!(g.total(), (p as u64).pow(i));
            assert_eq!(g.top_degree(), Some(top));
            assert!(g.is_palindromic_about(top));
        }
    }
}

#[test]
fn lr_examples() {
    for d in 0..=5 {
        for l in enumerate_partitions(d) {
            assert_eq!(lr_coeff(&l, &l, &Partition::empty()), 1);
            assert_eq!(lr_coeff(&l, &Partition::empty(), &l), 1);
        }
    }
    assert_eq!(lr_coeff(&part("[2,1]"), &part("[1]"), &part("[1,1]")), 1);
    assert_eq!(lr_coeff(&part("[2,2]"), &part("[2]"), &part("[1]")), 0);
    assert_eq!(lr_coeff(&part("[3,2,1]"), &part("[2,1]"), &part("[2,1]")), 2);
}

#[test]
fn lr_matches_character_inner_products() {
    for total in 0..=6 {
        for l in enumerate_partitions(total) {
            for a in 0..=total {
                for mu in enumerate_partitions(a) {
                    for nu in enumerate_partitions(total - a) {
                        assert_eq!(
                            lr_coeff(&l, &mu, &nu),
                            lr_by_characters(l.parts(), mu.parts(), nu.parts()),
                            "c^{l}_{mu},{nu}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn lr_symmetry_and_fold_associativity() {
    for total in 0..=6 {
        for l in enumerate_partitions(total) {
            for a in 0..=total {
                for mu in enumerate_partitions(a) {
                    for nu in enumerate_partitions(total - a) {
                        assert_eq!(lr_coeff(&l, &mu, &nu), lr_coeff(&l, &nu, &mu));
                    }
                }
            }
        }
    }
    let triples = [
        ("[1]", "[1]", "[1]"),
        ("[2]", "[1,1]", "[1]"),
        ("[2,1]", "[1]", "[2]"),
        ("[1,1]", "[2,1]", "[1]"),
        ("[2]", "[2]", "[2]"),
    ];
    for (a, b, c) in triples {
        let (a, b, c) = (part(a), part(b), part(c));
        let left = lr_fold(&[a.clone(), b.clone(), c.clone()], None);
        let bc = lr_product(&b, &c, None);
        let mut right: BTreeMap<Partition, u64> = BTreeMap::new();
        for (k, m) in &bc {
            for (l, x) in lr_product(&a, k, None) {
                *right.entry(l).or_insert(0) += m * x;
            }
        }
        assert_eq!(left, right, "({a} {b}) {c}");
        let via_multiply = lr_multiply(&lr_multiply(&lr_product(&a, &b, None), &c, None), &Partition::empty(), None);
        assert_eq!(left, via_multiply);
    }
}

#[test]
fn lr_cache_is_transparent() {
    let mut work = Vec::new();
    for l in enumerate_partitions(5) {
        for mu in enumerate_partitions(2) {
            for nu in enumerate_partitions(3) {
                work.push((l.clone(), mu.clone(), nu));
            }
        }
    }
    std::thread::scope(|s| {
        for _ in 0..4 {
            s.spawn(|| {
                for (l, mu, nu) in &work {
                    assert_eq!(lr_coeff(l, mu, nu), lr_coeff_uncached(l, mu, nu));
                }
            });
        }
    });
}

#[test]
fn gamma_hom_examples() {
    assert_eq!(dim_gamma_hom(2, 2, 2), 10);
    for n in 1..4 {
        for m in 1..4 {
            assert_eq!(dim_gamma_hom(n, m, 0), 1);
        }
    }
    for d in 0..6 {
        assert_eq!(dim_gamma_hom(1, 1, d), 1);
    }
}

#[test]
fn cauchy_identity() {
    for n in 1..=4 {
        for m in 1..=4 {
            for d in 0..=6 {
                let sum: u64 = enumerate_partitions(d)
                    .iter()
                    .map(|mu| dim_weyl(mu, n) * dim_weyl(mu, m))
                    .sum();
                assert_eq!(dim_gamma_hom(n, m, d), sum, "n={n} m={m} d={d}");
            }
        }
    }
}

#[test]
fn block_examples() {
    let t = GradedAlphabet::trivial(1);
    assert_eq!(graded_dim_block(&part("[1]"), 1, 1, 1, 2, &t).unwrap(), GradedDim::one());
    assert_eq!(graded_dim_block(&part("[2]"), 2, 2, 2, 3, &t).unwrap(), GradedDim::constant(9));
    let total = graded_dim_block(&part("[2]"), 2, 2, 2, 3, &t)
        .unwrap()
        .add(&graded_dim_block(&part("[1,1]"), 2, 2, 2, 3, &t).unwrap());
    assert_eq!(total, GradedDim::constant(dim_gamma_hom(2, 2, 2)));
    assert!(graded_dim_block(&part("[2]"), 2, 2, 2, 2, &t).is_err());
    assert!(graded_dim_block(&part("[1]"), 2, 2, 2, 3, &t).is_err());
}

#[test]
fn blocks_split_cauchy() {
    let t = GradedAlphabet::trivial(1);
    for p in [2u32, 3, 5] {
        for d in 0..=5 {
            let table = blocks(d, p);
            for n in 1..=3 {
                for m in 1..=3 {
                    let mut sum = GradedDim::zero();
                    for core in table.cores() {
                        sum = sum.add(&graded_dim_block(core, n, m, d, p, &t).unwrap());
                    }
                    assert_eq!(sum, GradedDim::constant(dim_gamma_hom(n, m, d)), "p={p} d={d} n={n} m={m}");
                }
            }
        }
    }
}

/// `A_1` on the first argument against its shifted dual on the second.
fn shadow_sides(core: &Partition, n: usize, m: usize, d: usize, p: u32) -> (GradedDim, GradedDim) {
    let a = graded_dim_ai(p, 1);
    let dual = a.dual_shifted(2 * (p as i64 - 1));
    (
        graded_dim_block_bi(core, d, p, &a.copies(n), &GradedAlphabet::trivial(m)).unwrap(),
        graded_dim_block_bi(core, d, p, &GradedAlphabet::trivial(n), &dual.copies(m)).unwrap(),
    )
}

#[test]
fn dual_alphabet_shadow() {
    for p in [2u32, 3] {
        for d in 0..=3 {
            let table = blocks(d, p);
            for n in 1..=3 {
                for m in 1..=3 {
                    let (mut l, mut r) = (GradedDim::zero(), GradedDim::zero());
                    for core in table.cores() {
                        let (a, b) = shadow_sides(core, n, m, d, p);
                        if n == m {
                            assert_eq!(a, b, "block {core} p={p} d={d} n={n}");
                        }
                        l = l.add(&a);
                        r = r.add(&b);
                    }
                    assert_eq!(l, r, "p={p} d={d} n={n} m={m}");
                }
            }
        }
    }
}

#[test]
fn dual_alphabet_shadow_per_block_needs_equal_ranks() {
    // p = 2, d = 3: the block of core (1) is {(3), (1,1,1)}. With n = 1, m = 2
    // the sides are 4 gdim S^3(A_1) and gdim S^3(A_1 ⊕ A_1).
    let (a, b) = shadow_sides(&part("[1]"), 1, 2, 3, 2);
    assert_eq!(a, GradedDim::from_coeffs(&[4, 0, 4, 0, 4, 0, 4]));
    assert_eq!(b, GradedDim::from_coeffs(&[4, 0, 6, 0, 6, 0, 4]));
}

#[test]
fn basic_block_factorises() {
    let t = GradedAlphabet::trivial(1);
    for p in [2u32, 3, 5, 7] {
        for d in 0..=6 {
            for l in basic_diagrams(d, p) {
                for n in 1..=4 {
                    for m in 1..=4 {
                        assert_eq!(
                            graded_dim_block(&l, n, m, d, p, &t).unwrap(),
                            GradedDim::constant(dim_schur(&l, n) * dim_schur(&l, m))
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn corner_lr_examples() {
    assert_eq!(graded_dim_corner_lr(&part("[1]"), 1, 2, 1).unwrap(), GradedDim::from_coeffs(&[1, 0, 1]));
    assert_eq!(
        graded_dim_corner_lr(&part("[1]"), 1, 3, 1).unwrap(),
        GradedDim::from_coeffs(&[1, 0, 1, 0, 1])
    );
    let g = graded_dim_corner_lr(&part("[2]"), 2, 3, 1).unwrap();
    assert_eq!(g.top_degree(), Some(8));
    assert!(g.is_palindromic_about(8));
    assert!(matches!(
        graded_dim_corner_lr(&part("[2]"), 2, 2, 1),
        Err(strictpoly::Error::NotBasic(..))
    ));
}

#[test]
fn corner_lr_palindromic_and_matches_weight_peeling() {
    for (p, dmax) in [(2u32, 3usize), (3, 4), (5, 4), (7, 3)] {
        for i in 1..=2 {
            if p.pow(i) > 9 && i > 1 {
                continue;
            }
            for d in 1..=dmax {
                for l in basic_diagrams(d, p) {
                    let g = graded_dim_corner_lr(&l, d, p, i).unwrap();
                    let top = 2 * d as i64 * ((p as i64).pow(i) - 1);
                    assert_eq!(g.top_degree(), Some(top), "{l} p={p} i={i}");
                    assert!(g.is_palindromic_about(top), "{l} p={p} i={i}");
                    assert_eq!(g, graded_multiplicity_in_schur(&l, &graded_dim_ai(p, i)), "{l} p={p} i={i}");
                }
            }
        }
    }
}

#[test]
fn affine_schur_examples() {
    assert_eq!(graded_dim_affine_schur(1, 1, 2, 1), GradedDim::from_coeffs(&[1, 0, 1]));
    for n in 1..=3 {
        for d in 0..=4 {
            assert_eq!(
                graded_dim_affine_schur(n, d, 2, 1).total(),
                binomial((2 * n * n + d - 1) as u64, d as u64)
            );
        }
    }
    // Multisets of size 2 from four degree-0 and four degree-2 basis elements.
    let mut oracle = BTreeMap::new();
    let degs = [0i64, 0, 0, 0, 2, 2, 2, 2];
    for a in 0..8 {
        for b in a..8 {
            *oracle.entry(degs[a] + degs[b]).or_insert(0u64) += 1;
        }
    }
    assert_eq!(graded_dim_affine_schur(2, 2, 2, 1), GradedDim::from_pairs(oracle));
}

#[test]
fn graded_dim_json() {
    let g = GradedDim::from_coeffs(&[1, 0, 1]);
    assert_eq!(serde_json::to_string(&g).unwrap(), r#"{"0":1,"2":1}"#);
    assert_eq!(serde_json::from_str::<GradedDim>(r#"{"0":1,"2":1}"#).unwrap(), g);
    assert_eq!(g.to_string(), "1 + q^2");
}

fn arb_graded() -> impl Strategy<Value = GradedDim> {
    proptest::collection::vec((0i64..8, 0u64..4), 0..6)
        .prop_map(|v| GradedDim::from_pairs(v.into_iter().map(|(e, c)| (2 * e, c))))
}

proptest! {
    #[test]
    fn graded_dim_ring_laws(a in arb_graded(), b in arb_graded(), c in arb_graded()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).total(), a.total() * b.total());
        prop_assert!(a.terms().all(|(_, c)| c > 0));
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).div_exact(&b), Some(a.clone()));
        }
        prop_assert_eq!(a.shift(4).shift(-4), a);
    }
}
