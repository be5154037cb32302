use std::collections::BTreeMap;
use std::time::Instant;

use operadkit::cobar::{
    ainfty_slice_check, apply_differential, cobar_differential, cobar_differential_with, d_squared_check,
    d_squared_check_with, delta1, partial_compose, CobarGenerator, CobarTree, Delta1Term, SignRule, TwoAsBasis,
};

fn basis_up_to(total: usize) -> Vec<TwoAsBasis> {
    let mut out = Vec::new();
    for s in 0..=total {
        for i in 0..=s {
            out.push(TwoAsBasis::new(i, s - i));
        }
    }
    out
}

#[test]
fn partial_composition_ignores_the_slot() {
    let all = basis_up_to(5);
    for outer in &all {
        for inner in &all {
            if outer.i + outer.j + inner.i + inner.j > 5 {
                continue;
            }
            let first = partial_compose(*outer, 0, *inner).unwrap();
            for p in 0..outer.arity() {
                assert_eq!(partial_compose(*outer, p, *inner).unwrap(), first);
            }
            assert_eq!(first, TwoAsBasis::new(outer.i + inner.i, outer.j + inner.j));
        }
    }
    let u = TwoAsBasis::new(2, 1);
    for p in 0..u.arity() {
        assert_eq!(partial_compose(u, p, TwoAsBasis::identity()).unwrap(), u);
    }
}

/// Dualize partial composition by brute force: μ_cd^∨ decomposes into every
/// non-trivial pair whose composite is μ_cd.
fn dual_of_composition(total: usize) -> BTreeMap<TwoAsBasis, Vec<Delta1Term>> {
    let all = basis_up_to(total);
    let mut out: BTreeMap<TwoAsBasis, Vec<Delta1Term>> = BTreeMap::new();
    for outer in &all {
        for inner in &all {
            if outer.is_identity() || inner.is_identity() || outer.i + outer.j + inner.i + inner.j > total {
                continue;
            }
            for slot in 0..outer.arity() {
                let target = partial_compose(*outer, slot, *inner).unwrap();
                out.entry(target).or_default().push(Delta1Term {
                    outer: *outer,
                    slot,
                    inner: *inner,
                });
            }
        }
    }
    out
}

#[test]
fn delta1_is_adjoint_to_partial_composition() {
    let dual = dual_of_composition(5);
    for target in basis_up_to(5) {
        if target.is_identity() {
            continue;
        }
        let mut ours = delta1(target.i, target.j);
        let mut expect = dual.get(&target).cloned().unwrap_or_default();
        ours.sort();
        expect.sort();
        assert_eq!(ours, expect, "{target:?}");
    }
}

#[test]
fn delta1_pairing_on_every_triple() {
    // ⟨Δ₍₁₎(μ_cd^∨), outer ⊗_p inner⟩ = 1 iff outer ∘_p inner = μ_cd
    let all = basis_up_to(4);
    for target in &all {
        if target.is_identity() {
            continue;
        }
        let d = delta1(target.i, target.j);
        for outer in &all {
            for inner in &all {
                if outer.is_identity() || inner.is_identity() {
                    continue;
                }
                for slot in 0..outer.arity() {
                    let t = Delta1Term {
                        outer: *outer,
                        slot,
                        inner: *inner,
                    };
                    let pairing = d.iter().filter(|x| **x == t).count();
                    let composes = partial_compose(*outer, slot, *inner).unwrap() == *target;
                    assert_eq!(pairing, usize::from(composes));
                }
            }
        }
    }
}

#[test]
fn delta1_closed_count() {
    for c in 0..=5usize {
        for d in 0..=(5 - c) {
            if c + d == 0 {
                continue;
            }
            let mut count = 0;
            for i in 0..=c {
                for j in 0..=d {
                    if (i, j) != (0, 0) && (c - i, d - j) != (0, 0) {
                        count += i + j + 1;
                    }
                }
            }
            assert_eq!(delta1(c, d).len(), count);
        }
    }
}

fn m(i: usize, j: usize) -> CobarGenerator {
    CobarGenerator::new(i, j).unwrap()
}

#[test]
fn differential_of_m11() {
    assert!(cobar_differential(m(1, 0)).is_zero());
    assert!(cobar_differential(m(0, 1)).is_zero());
    let d = cobar_differential(m(1, 1));
    let signs: Vec<i64> = d.terms.iter().map(|t| t.sign).collect();
    assert_eq!(signs, vec![1, -1, 1, -1]);
    // (−1)^{0+2·1} and (−1)^{1+2·0}
    assert_eq!((d.terms[0].slot, d.terms[0].rest), (0, 1));
    assert_eq!((d.terms[1].slot, d.terms[1].rest), (1, 0));
}

#[test]
fn differential_index_and_degree_bookkeeping() {
    for g in CobarGenerator::up_to_arity(8) {
        for t in cobar_differential(g).terms {
            assert_eq!(t.outer.i() + t.inner.i(), g.i());
            assert_eq!(t.outer.j() + t.inner.j(), g.j());
            assert_eq!(t.slot + t.rest, t.outer.i() + t.outer.j());
            assert_eq!(t.slot + t.inner.arity() + t.rest, g.arity());
            let tree = t.to_tree();
            assert_eq!(tree.arity(), g.arity());
            assert_eq!(tree.degree(), g.degree() - 1);
        }
    }
}

#[test]
fn derivation_lowers_degree() {
    for g in CobarGenerator::up_to_arity(6) {
        for (t, _) in cobar_differential(g).to_element().terms() {
            for (u, _) in apply_differential(t, SignRule::Standard).terms() {
                assert_eq!(u.degree(), t.degree() - 1);
                assert_eq!(u.arity(), t.arity());
            }
        }
    }
}

#[test]
fn d_squared_vanishes_through_arity_eight() {
    let start = Instant::now();
    let check = d_squared_check(8).unwrap();
    assert!(check.passed(), "{}", check.witness.unwrap());
    assert_eq!(check.generators_checked, (2..=8).sum::<usize>());
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn slot_only_sign_fails_at_arity_four() {
    assert!(d_squared_check_with(3, SignRule::SlotOnly).unwrap().passed());
    let check = d_squared_check_with(8, SignRule::SlotOnly).unwrap();
    let w = check.witness.expect("a witness");
    assert_eq!(w.generator.arity(), 4);
    assert_ne!(w.coefficient, 0);
    assert_eq!(w.tree.arity(), 4);
}

#[test]
fn ainfty_slice_matches_hand_tables() {
    assert!(ainfty_slice_check(8).unwrap());
    // arity 3: m2(m2,1) − m2(1,m2)
    let d3 = cobar_differential(m(2, 0)).to_string();
    assert_eq!(d3, "d m[2,0] = + m[1,0](m[1,0],1) - m[1,0](1,m[1,0])");
    // arity 4: (p,q,r) with signs (−1)^{p+qr}
    let mut d4: Vec<(i64, usize, usize, usize)> = cobar_differential(m(3, 0))
        .terms
        .iter()
        .map(|t| (t.sign, t.slot, t.inner.arity(), t.rest))
        .collect();
    d4.sort();
    let mut hand = vec![
        (-1, 0, 3, 1), // m2(m3,1): 0 + 3·1
        (-1, 1, 3, 0), // m2(1,m3): 1 + 0
        (1, 0, 2, 2),  // m3(m2,1,1): 0 + 2·2
        (-1, 1, 2, 1), // m3(1,m2,1): 1 + 2·1
        (1, 2, 2, 0),  // m3(1,1,m2): 2 + 0
    ];
    hand.sort();
    assert_eq!(d4, hand);
}

#[test]
fn j_count_is_conserved() {
    for g in CobarGenerator::up_to_arity(8) {
        assert!(cobar_differential(g).terms.iter().all(|t| t.outer.j() + t.inner.j() == g.j()));
    }
}

fn mirror_tree(t: &CobarTree) -> CobarTree {
    match t {
        CobarTree::Leaf => CobarTree::Leaf,
        CobarTree::Node(g, ch) => CobarTree::Node(g.mirror(), ch.iter().map(mirror_tree).collect()),
    }
}

#[test]
fn mirror_symmetry_commutes_with_the_differential() {
    for g in CobarGenerator::up_to_arity(8) {
        let mut mirrored: Vec<_> = cobar_differential(g).terms.iter().map(|t| t.mirror()).collect();
        let mut direct = cobar_differential(g.mirror()).terms;
        mirrored.sort();
        direct.sort();
        assert_eq!(mirrored, direct);
    }
    for g in CobarGenerator::up_to_arity(6) {
        for (t, _) in cobar_differential(g).to_element().terms() {
            let a: Vec<(CobarTree, i64)> =
                apply_differential(t, SignRule::Standard).terms().map(|(u, c)| (mirror_tree(u), c)).collect();
            let b = apply_differential(&mirror_tree(t), SignRule::Standard);
            let mut a = a;
            a.sort();
            let b: Vec<(CobarTree, i64)> = b.terms().map(|(u, c)| (u.clone(), c)).collect();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn standard_and_slot_only_agree_below_arity_four() {
    for g in CobarGenerator::up_to_arity(3) {
        assert_eq!(cobar_differential(g), cobar_differential_with(g, SignRule::SlotOnly));
    }
}
