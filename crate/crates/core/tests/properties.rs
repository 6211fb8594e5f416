//! Randomized invariants of signed mutation and of the Lie algebra images.

mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use mutalg::algebra::{chevalley_algebra, StructureAlgebra};
use mutalg::cartan::CartanCounterpart;
use mutalg::dynkin::DynkinType;
use mutalg::presentation::*;
use mutalg::{GssMatrix, SignedValuedQuiver, TElem};

use common::*;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn sign_zero_in_line(b: &GssMatrix, k: usize) -> bool {
    (0..b.n()).any(|j| {
        let (x, y) = (b.get(k, j), b.get(j, k));
        (!x.is_zero() && x.sign() == 0) || (!y.is_zero() && y.sign() == 0)
    })
}

type Member = (SignedValuedQuiver, GeneratorImages);

/// Class members with faithful images, one list per type, built once.
fn members() -> &'static Vec<(StructureAlgebra, Vec<Member>)> {
    static CELL: OnceLock<Vec<(StructureAlgebra, Vec<Member>)>> = OnceLock::new();
    CELL.get_or_init(|| {
        ["A3", "B3", "C3", "D4", "G2", "A4"]
            .iter()
            .map(|t| {
                let ty: DynkinType = t.parse().unwrap();
                let alg = chevalley_algebra(ty.clone()).unwrap();
                let base = GeneratorImages::canonical(&alg);
                let class = class_with_images(&ty.canonical_quiver(), &alg, &base)
                    .into_iter()
                    .map(|(_, q, im)| (q, im))
                    .collect();
                (alg, class)
            })
            .collect()
    })
}

fn pick_member(sel: usize) -> (&'static StructureAlgebra, &'static Member) {
    let all = members();
    let (alg, class) = &all[sel % all.len()];
    (alg, &class[(sel / all.len()) % class.len()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn fourfold_mutation_is_identity(seed in any::<u64>()) {
        let b = random_gss(&mut rng(seed), 6, 4);
        for k in 0..b.n() {
            prop_assert_eq!(&b.mutate_seq(&[k, k, k, k]).unwrap(), &b);
            let m = b.mutate(k).unwrap();
            prop_assert_eq!(m.symmetrizer(), b.symmetrizer());
        }
    }

    #[test]
    fn double_mutation_scales_line_by_t_without_sign_zero_entries(seed in any::<u64>()) {
        let b = random_gss(&mut rng(seed), 6, 4);
        for k in (0..b.n()).filter(|&k| !sign_zero_in_line(&b, k)) {
            prop_assert_eq!(b.mutate_seq(&[k, k]).unwrap(), b.scale_t(k));
        }
    }

    #[test]
    fn specialization_commutes_with_mutation(seed in any::<u64>()) {
        let b = random_gss(&mut rng(seed), 6, 4);
        for k in 0..b.n() {
            prop_assert_eq!(at_one(&b.mutate(k).unwrap()), fz_oracle(&at_one(&b), k));
        }
    }

    #[test]
    fn purity_after_mutation_matches_positive_3cycle_condition(seed in any::<u64>()) {
        let b = random_pure_gss(&mut rng(seed), 6, 4);
        prop_assert!(b.is_pure());
        for k in 0..b.n() {
            let m = b.mutate(k).unwrap();
            let ok = b.positive_3cycle_ok(k).unwrap();
            prop_assert_eq!(m.is_pure(), ok);
            if ok {
                prop_assert!(m.positive_3cycle_ok(k).unwrap());
            }
        }
    }

    #[test]
    fn cartan_acts_on_words_by_weight_sum(
        sel in any::<usize>(),
        i in 0usize..4,
        letters in prop::collection::vec((any::<bool>(), 0usize..4), 1..=5),
    ) {
        let (alg, (q, im)) = pick_member(sel);
        let n = q.n();
        let c = CartanCounterpart::of_quiver(q);
        let i = i % n;
        let word: Vec<Gen> = letters.iter().map(|&(pos, j)| Gen::e(if pos { 1 } else { -1 }, j % n)).collect();
        let weight: i64 = word
            .iter()
            .map(|g| match *g {
                Gen::E(eps, j) => eps as i64 * c.get(i, j),
                Gen::H(_) => unreachable!(),
            })
            .sum();
        let w = bracket_eval(alg, &Expr::word(&word), im).unwrap();
        let mut with_h = vec![Gen::H(i)];
        with_h.extend(&word);
        let lhs = bracket_eval(alg, &Expr::word(&with_h), im).unwrap();
        prop_assert_eq!(lhs, w.scale_int(weight));
    }
}

#[test]
fn double_mutation_fixes_sign_zero_entries() {
    // x = 1 - t has sign 0, so both mutations leave it alone while t x = -x.
    let b = GssMatrix::from_pairs(&[vec![(0, 0), (1, -1)], vec![(-1, 1), (0, 0)]]).unwrap();
    assert_eq!(b.mutate(0).unwrap(), b);
    assert_eq!(b.mutate_seq(&[0, 0]).unwrap(), b);
    assert_ne!(b.scale_t(0), b);
    assert_eq!(b.scale_t(0).get(0, 1), &TElem::new(-1, 1));
}

#[test]
fn same_sign_neighbors_commute_in_every_image() {
    let mut checked = 0;
    for (alg, class) in members() {
        for (q, im) in class {
            let c = CartanCounterpart::of_quiver(q);
            for i in 0..q.n() {
                for j in (0..q.n()).filter(|&j| j != i && c.get(i, j) != 0) {
                    let d = c.get(i, j).signum();
                    for eps in [1, -1] {
                        let w = Expr::word(&[Gen::e(eps, i), Gen::e(eps * d, j)]);
                        assert!(bracket_eval(alg, &w, im).unwrap().is_zero(), "{w} in {q:?}");
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 1000, "only {checked} brackets checked");
}

#[test]
fn rotated_sign_chain_relation_follows_on_simple_cycles() {
    let (mut antecedents, mut cycles) = (0, 0);
    for (alg, class) in members() {
        for (q, im) in class {
            let c = CartanCounterpart::of_quiver(q);
            for cy in quiver_cycles(q) {
                let Ok((CycleShape::Simple, _)) = cycle_shape(&c, &cy.vertices) else { continue };
                cycles += 1;
                let t = cy.vertices.len();
                for s in 0..t {
                    let seq: Vec<usize> = (0..t).map(|p| cy.vertices[(s + p) % t]).collect();
                    let rot: Vec<usize> = (1..=t).map(|p| seq[p % t]).collect();
                    for eps in [1, -1] {
                        let eps2 = -c.get(seq[0], seq[1]).signum() * eps;
                        let w = bracket_eval(alg, &Expr::word(&sign_chain_word(&c, &seq, eps)), im).unwrap();
                        if w.is_zero() {
                            antecedents += 1;
                            let r = bracket_eval(alg, &Expr::word(&sign_chain_word(&c, &rot, eps2)), im).unwrap();
                            assert!(r.is_zero(), "rotation of {seq:?} fails in {q:?}");
                        }
                    }
                }
            }
        }
    }
    assert!(cycles > 0 && antecedents > 0, "{cycles} cycles, {antecedents} antecedents");
}

#[test]
fn inverse_maps_undo_each_mutation_over_classes() {
    let mut steps = 0;
    for (alg, class) in members() {
        for (q, im) in class {
            for k in 0..q.n() {
                let fwd = phi_k(q, k, im, alg).unwrap();
                assert_eq!(&psi_k(q, k, &fwd, alg).unwrap(), im, "psi after phi at {k} in {q:?}");
                let back = psi_k(q, k, &fwd, alg).unwrap();
                assert_eq!(phi_k(q, k, &back, alg).unwrap(), fwd, "phi after psi at {k} in {q:?}");
                steps += 1;
            }
        }
    }
    assert!(steps > 500);
}
