use std::cmp::Ordering;

use operadkit::free::{all_monomials, graft_element, path_lex_compare, OperadElement, Signature, Tree};
use operadkit::linalg::int;
use proptest::prelude::*;

fn sig() -> Signature {
    Signature::binary(&["*", "•"])
}

fn monomials_up_to(n: usize) -> Vec<Tree> {
    (1..=n).flat_map(|k| all_monomials(&sig(), k)).collect()
}

#[test]
fn monomial_counts_are_catalan_times_labelings() {
    let expect = [(1, 1), (2, 2), (3, 8), (4, 40), (5, 224), (6, 1344)];
    for (n, count) in expect {
        assert_eq!(all_monomials(&sig(), n).len(), count, "arity {n}");
    }
    // Catalan(n-1) * 2^(n-1)
    let catalan = [1u64, 1, 2, 5, 14, 42];
    for n in 1..=6usize {
        assert_eq!(all_monomials(&sig(), n).len() as u64, catalan[n - 1] * (1 << (n - 1)));
    }
}

#[test]
fn encoding_round_trips_and_is_injective() {
    let s = sig();
    let all = monomials_up_to(6);
    let mut seen = std::collections::HashSet::new();
    for t in &all {
        let code = t.encode();
        assert_eq!(&Tree::decode(&s, &code).unwrap(), t);
        assert!(seen.insert(code), "duplicate encoding");
    }
}

#[test]
fn sequential_and_parallel_grafting_agree() {
    // (a ∘_i b) ∘_j c computed both ways, over every admissible pair of slots
    let small = monomials_up_to(3);
    for a in &small {
        for b in &small {
            for c in &small {
                let (na, nb) = (a.arity(), b.arity());
                for i in 0..na {
                    // sequential: c lands inside b
                    for j in 0..nb {
                        let lhs = a.graft(i, b).unwrap().graft(i + j, c).unwrap();
                        let rhs = a.graft(i, &b.graft(j, c).unwrap()).unwrap();
                        assert_eq!(lhs, rhs);
                    }
                    // parallel: c lands in another slot of a
                    for k in 0..na {
                        if k == i {
                            continue;
                        }
                        let lhs = if k < i {
                            a.graft(i, b).unwrap().graft(k, c).unwrap()
                        } else {
                            a.graft(i, b).unwrap().graft(k + nb - 1, c).unwrap()
                        };
                        let rhs = if k < i {
                            a.graft(k, c).unwrap().graft(i + c.arity() - 1, b).unwrap()
                        } else {
                            a.graft(k, c).unwrap().graft(i, b).unwrap()
                        };
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}

#[test]
fn order_is_total_and_compatible_with_grafting() {
    let s = sig();
    for n in 1..=4 {
        let all = all_monomials(&s, n);
        for a in &all {
            for b in &all {
                let ab = path_lex_compare(&s, a, b).unwrap();
                assert_eq!(ab, path_lex_compare(&s, b, a).unwrap().reverse());
                assert_eq!(ab == Ordering::Equal, a == b);
                if ab != Ordering::Greater {
                    continue;
                }
                for c in monomials_up_to(4 - n + 1) {
                    for slot in 0..c.arity() {
                        let (x, y) = (c.graft(slot, a).unwrap(), c.graft(slot, b).unwrap());
                        assert_eq!(path_lex_compare(&s, &x, &y).unwrap(), Ordering::Greater);
                    }
                    for slot in 0..n {
                        let (x, y) = (a.graft(slot, &c).unwrap(), b.graft(slot, &c).unwrap());
                        assert_eq!(path_lex_compare(&s, &x, &y).unwrap(), Ordering::Greater);
                    }
                }
            }
        }
    }
}

#[test]
fn order_is_transitive_on_arity_four() {
    let s = sig();
    let mut all = all_monomials(&s, 4);
    all.sort_by(|a, b| path_lex_compare(&s, a, b).unwrap());
    for w in all.windows(2) {
        assert_eq!(path_lex_compare(&s, &w[0], &w[1]).unwrap(), Ordering::Less);
    }
    for (i, a) in all.iter().enumerate() {
        for b in &all[i + 1..] {
            assert_eq!(path_lex_compare(&s, a, b).unwrap(), Ordering::Less);
        }
    }
}

#[test]
fn element_grafting_distributes() {
    let s = sig();
    let star = Tree::corolla(&s, 0);
    let bullet = Tree::corolla(&s, 1);
    let outer = OperadElement::from_terms(2, [(int(2), star.clone()), (int(-3), bullet.clone())]).unwrap();
    let inner = OperadElement::from_terms(2, [(int(5), bullet.clone()), (int(7), star.clone())]).unwrap();
    for slot in 0..2 {
        let lhs = graft_element(&outer, slot, &inner).unwrap();
        let mut rhs = OperadElement::zero(3);
        for (t, a) in outer.terms() {
            for (u, b) in inner.terms() {
                rhs.add_term(a * b, t.graft(slot, u).unwrap());
            }
        }
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.len(), 4);
    }
}

fn arb_tree() -> impl Strategy<Value = Tree> {
    let leaf = Just(Tree::Leaf);
    leaf.prop_recursive(5, 16, 2, |inner| {
        (0usize..2, inner.clone(), inner).prop_map(|(g, l, r)| Tree::Node(g, vec![l, r]))
    })
}

proptest! {
    #[test]
    fn graft_arity_law(a in arb_tree(), b in arb_tree(), slot in 0usize..16) {
        let slot = slot % a.arity();
        let g = a.graft(slot, &b).unwrap();
        prop_assert_eq!(g.arity(), a.arity() + b.arity() - 1);
        prop_assert_eq!(g.vertex_count(), a.vertex_count() + b.vertex_count());
        prop_assert_eq!(Tree::decode(&sig(), &g.encode()).unwrap(), g);
    }
}
