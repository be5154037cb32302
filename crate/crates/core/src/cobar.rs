//! The operad ²As in its closed form, the infinitesimal decomposition of its
//! dual cooperad, and the cobar differential on the generators `m[i,j]`.
//!
//! Generator degrees carry the desuspension: `|m[i,j]| = i + j - 1`. The
//! derivation extension uses the Koszul rule with these degrees.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Basis element μ_ij of ²As: `i` products `*` and `j` products `•`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoAsBasis {
    pub i: usize,
    pub j: usize,
}

impl TwoAsBasis {
    pub fn new(i: usize, j: usize) -> Self {
        TwoAsBasis { i, j }
    }

    pub fn identity() -> Self {
        TwoAsBasis { i: 0, j: 0 }
    }

    pub fn is_identity(&self) -> bool {
        self.i == 0 && self.j == 0
    }

    pub fn arity(&self) -> usize {
        self.i + self.j + 1
    }
}

/// Full composition γ(outer; inners).
pub fn gamma(outer: TwoAsBasis, inners: &[TwoAsBasis]) -> Result<TwoAsBasis> {
    if inners.len() != outer.arity() {
        return Err(Error::ArityMismatch {
            expected: outer.arity(),
            found: inners.len(),
        });
    }
    let i = outer.i + inners.iter().map(|b| b.i).sum::<usize>();
    let j = outer.j + inners.iter().map(|b| b.j).sum::<usize>();
    Ok(TwoAsBasis { i, j })
}

pub fn partial_compose(outer: TwoAsBasis, slot: usize, inner: TwoAsBasis) -> Result<TwoAsBasis> {
    if slot >= outer.arity() {
        return Err(Error::SlotOutOfRange {
            slot,
            arity: outer.arity(),
        });
    }
    let mut inners = vec![TwoAsBasis::identity(); outer.arity()];
    inners[slot] = inner;
    gamma(outer, &inners)
}

/// One term `outer ⊗_slot inner` of the reduced infinitesimal decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Delta1Term {
    pub outer: TwoAsBasis,
    pub slot: usize,
    pub inner: TwoAsBasis,
}

/// Reduced Δ₍₁₎ of the dual basis element μ_cd^∨; every coefficient is +1.
pub fn delta1(c: usize, d: usize) -> Vec<Delta1Term> {
    let mut out = Vec::new();
    for i in (0..=c).rev() {
        for j in (0..=d).rev() {
            let outer = TwoAsBasis::new(i, j);
            let inner = TwoAsBasis::new(c - i, d - j);
            if outer.is_identity() || inner.is_identity() {
                continue;
            }
            for slot in 0..outer.arity() {
                out.push(Delta1Term { outer, slot, inner });
            }
        }
    }
    out
}

/// Generator `m[i,j]` of the cobar construction, of arity i+j+1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CobarGenerator {
    i: usize,
    j: usize,
}

impl CobarGenerator {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i + j == 0 {
            return Err(Error::Contract("m[0,0] is not a cobar generator".into()));
        }
        Ok(CobarGenerator { i, j })
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn arity(&self) -> usize {
        self.i + self.j + 1
    }

    pub fn degree(&self) -> i64 {
        (self.i + self.j) as i64 - 1
    }

    /// Swap the roles of `*` and `•`.
    pub fn mirror(&self) -> Self {
        CobarGenerator { i: self.j, j: self.i }
    }

    /// All generators of arity between 2 and `max_arity`, by arity then by decreasing i.
    pub fn up_to_arity(max_arity: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for n in 2..=max_arity {
            for i in (0..n).rev() {
                out.push(CobarGenerator { i, j: n - 1 - i });
            }
        }
        out
    }
}

impl fmt::Display for CobarGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m[{},{}]", self.i, self.j)
    }
}

/// Sign rule for the two-level terms of ∂(m[i,j]).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SignRule {
    /// (−1)^(p + q·r)
    #[default]
    Standard,
    /// (−1)^p; does not square to zero. Kept as a negative control.
    SlotOnly,
}

impl SignRule {
    fn sign(self, p: usize, q: usize, r: usize) -> i64 {
        let e = match self {
            SignRule::Standard => p + q * r,
            SignRule::SlotOnly => p,
        };
        if e % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// `sign · outer(1^slot, inner, 1^rest)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DifferentialTerm {
    pub sign: i64,
    pub outer: CobarGenerator,
    pub slot: usize,
    pub inner: CobarGenerator,
    pub rest: usize,
}

impl DifferentialTerm {
    pub fn mirror(&self) -> Self {
        DifferentialTerm {
            outer: self.outer.mirror(),
            inner: self.inner.mirror(),
            ..*self
        }
    }

    pub fn to_tree(&self) -> CobarTree {
        let mut children = vec![CobarTree::Leaf; self.outer.arity()];
        children[self.slot] = CobarTree::corolla(self.inner);
        CobarTree::Node(self.outer, children)
    }
}

impl fmt::Display for DifferentialTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut args = vec!["1".to_string(); self.slot];
        args.push(self.inner.to_string());
        args.extend(std::iter::repeat_n("1".to_string(), self.rest));
        write!(f, "{}({})", self.outer, args.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialExpression {
    pub generator: CobarGenerator,
    pub terms: Vec<DifferentialTerm>,
}

impl DifferentialExpression {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_element(&self) -> CobarElement {
        let mut e = CobarElement::zero();
        for t in &self.terms {
            e.add(t.sign, t.to_tree());
        }
        e
    }
}

impl fmt::Display for DifferentialExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d {} =", self.generator)?;
        if self.terms.is_empty() {
            return write!(f, " 0");
        }
        for t in &self.terms {
            write!(f, " {} {}", if t.sign > 0 { '+' } else { '-' }, t)?;
        }
        Ok(())
    }
}

pub fn cobar_differential(g: CobarGenerator) -> DifferentialExpression {
    cobar_differential_with(g, SignRule::Standard)
}

/// ∂(m[i,j]) = Σ (−1)^(p+qr) m[a,b](1^p, m[c,d], 1^r), summed over a+c = i,
/// b+d = j with both factors non-trivial, where q = c+d+1 and r = a+b−p.
pub fn cobar_differential_with(g: CobarGenerator, rule: SignRule) -> DifferentialExpression {
    let mut terms = Vec::new();
    for a in (0..=g.i).rev() {
        for b in (0..=g.j).rev() {
            let (c, d) = (g.i - a, g.j - b);
            if a + b == 0 || c + d == 0 {
                continue;
            }
            let outer = CobarGenerator { i: a, j: b };
            let inner = CobarGenerator { i: c, j: d };
            let q = inner.arity();
            for slot in 0..outer.arity() {
                let rest = a + b - slot;
                terms.push(DifferentialTerm {
                    sign: rule.sign(slot, q, rest),
                    outer,
                    slot,
                    inner,
                    rest,
                });
            }
        }
    }
    DifferentialExpression { generator: g, terms }
}

/// Tree monomial in the free graded ns operad on the generators `m[i,j]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CobarTree {
    Leaf,
    Node(CobarGenerator, Vec<CobarTree>),
}

impl CobarTree {
    pub fn corolla(g: CobarGenerator) -> Self {
        CobarTree::Node(g, vec![CobarTree::Leaf; g.arity()])
    }

    pub fn arity(&self) -> usize {
        match self {
            CobarTree::Leaf => 1,
            CobarTree::Node(_, ch) => ch.iter().map(CobarTree::arity).sum(),
        }
    }

    pub fn degree(&self) -> i64 {
        match self {
            CobarTree::Leaf => 0,
            CobarTree::Node(g, ch) => g.degree() + ch.iter().map(CobarTree::degree).sum::<i64>(),
        }
    }
}

impl fmt::Display for CobarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CobarTree::Leaf => write!(f, "1"),
            CobarTree::Node(g, ch) => {
                write!(f, "{g}(")?;
                for (k, c) in ch.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Integer combination of cobar tree monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CobarElement {
    terms: BTreeMap<CobarTree, i64>,
}

impl CobarElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add(&mut self, coeff: i64, t: CobarTree) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(t) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, coeff: i64, other: &CobarElement) {
        for (t, c) in &other.terms {
            self.add(coeff * c, t.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CobarTree, i64)> {
        self.terms.iter().map(|(t, c)| (t, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

fn koszul(exponent: i64) -> i64 {
    if exponent.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Extend ∂ to a tree as a degree −1 derivation.
pub fn apply_differential(t: &CobarTree, rule: SignRule) -> CobarElement {
    let mut out = CobarElement::zero();
    let CobarTree::Node(g, children) = t else {
        return out;
    };
    // ∂ at the root: m[a,b](1^p, m[c,d], 1^r) ∘ (T_1, ..., T_n)
    for term in cobar_differential_with(*g, rule).terms {
        let q = term.inner.arity();
        let before: i64 = children[..term.slot].iter().map(CobarTree::degree).sum();
        let sign = term.sign * koszul(term.inner.degree() * before);
        let mut outer_children = children[..term.slot].to_vec();
        outer_children.push(CobarTree::Node(term.inner, children[term.slot..term.slot + q].to_vec()));
        outer_children.extend_from_slice(&children[term.slot + q..]);
        out.add(sign, CobarTree::Node(term.outer, outer_children));
    }
    // ∂ on a subtree, passing the root and the subtrees to its left
    let mut passed = g.degree();
    for (k, child) in children.iter().enumerate() {
        let dc = apply_differential(child, rule);
        let sign = koszul(passed);
        for (u, c) in dc.terms() {
            let mut ch = children.clone();
            ch[k] = u.clone();
            out.add(sign * c, CobarTree::Node(*g, ch));
        }
        passed += child.degree();
    }
    out
}

pub fn apply_differential_element(e: &CobarElement, rule: SignRule) -> CobarElement {
    let mut out = CobarElement::zero();
    for (t, c) in e.terms() {
        out.add_scaled(c, &apply_differential(t, rule));
    }
    out
}

/// A nonzero coefficient of ∂²(m[i,j]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct D2Witness {
    pub generator: CobarGenerator,
    pub tree: CobarTree,
    pub coefficient: i64,
}

impl fmt::Display for D2Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "d(d {}) has coefficient {} on {} (arity {})",
            self.generator,
            self.coefficient,
            self.tree,
            self.generator.arity()
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct D2Check {
    pub max_arity: usize,
    pub generators_checked: usize,
    pub witness: Option<D2Witness>,
}

impl D2Check {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn d_squared_check(max_arity: usize) -> Result<D2Check> {
    d_squared_check_with(max_arity, SignRule::Standard)
}

pub fn d_squared_check_with(max_arity: usize, rule: SignRule) -> Result<D2Check> {
    if max_arity < 2 {
        return Err(Error::Contract(format!("d2check needs N >= 2, got {max_arity}")));
    }
    let gens = CobarGenerator::up_to_arity(max_arity);
    let mut witness = None;
    for g in &gens {
        let dd = apply_differential_element(&apply_differential(&CobarTree::corolla(*g), rule), rule);
        let first = dd.terms().next().map(|(t, c)| D2Witness {
            generator: *g,
            tree: t.clone(),
            coefficient: c,
        });
        if first.is_some() {
            witness = first;
            break;
        }
    }
    Ok(D2Check {
        max_arity,
        generators_checked: gens.len(),
        witness,
    })
}

/// Classical A∞ table: ∂(m_n) = Σ (−1)^(p+qr) m_(p+1+r)(1^p, m_q, 1^r),
/// as (sign, p, q, r) with q ≥ 2 and p+1+r ≥ 2.
pub fn ainfty_table(n: usize) -> Vec<(i64, usize, usize, usize)> {
    let mut out = Vec::new();
    for q in 2..n {
        for p in 0..=(n - q) {
            let r = n - q - p;
            let sign = if (p + q * r).is_multiple_of(2) { 1 } else { -1 };
            out.push((sign, p, q, r));
        }
    }
    out
}

/// Compare the j = 0 slice of ∂ with the classical table under m[i,0] ↔ m_(i+1).
pub fn ainfty_slice_check(max_arity: usize) -> Result<bool> {
    if max_arity < 2 {
        return Err(Error::Contract(format!("slice check needs N >= 2, got {max_arity}")));
    }
    for n in 2..=max_arity {
        let mut ours: Vec<(i64, usize, usize, usize)> = cobar_differential(CobarGenerator { i: n - 1, j: 0 })
            .terms
            .iter()
            .map(|t| (t.sign, t.slot, t.inner.arity(), t.rest))
            .collect();
        let mut classical = ainfty_table(n);
        ours.sort();
        classical.sort();
        if ours != classical {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(i: usize, j: usize) -> CobarGenerator {
        CobarGenerator::new(i, j).unwrap()
    }

    #[test]
    fn gamma_examples() {
        let (i, j, k, l) = (2, 1, 3, 4);
        let g = gamma(TwoAsBasis::new(1, 0), &[TwoAsBasis::new(i, j), TwoAsBasis::new(k, l)]).unwrap();
        assert_eq!(g, TwoAsBasis::new(i + k + 1, j + l));
        let g = gamma(TwoAsBasis::new(0, 1), &[TwoAsBasis::new(i, j), TwoAsBasis::new(k, l)]).unwrap();
        assert_eq!(g, TwoAsBasis::new(i + k, j + l + 1));
        let u = TwoAsBasis::new(2, 3);
        assert_eq!(gamma(u, &[TwoAsBasis::identity(); 6]).unwrap(), u);
        assert!(gamma(u, &[TwoAsBasis::identity()]).is_err());
    }

    #[test]
    fn partial_compose_examples() {
        for p in 0..2 {
            assert_eq!(
                partial_compose(TwoAsBasis::new(1, 0), p, TwoAsBasis::new(0, 1)).unwrap(),
                TwoAsBasis::new(1, 1)
            );
        }
        assert!(partial_compose(TwoAsBasis::new(1, 0), 2, TwoAsBasis::new(0, 1)).is_err());
    }

    #[test]
    fn delta1_small() {
        assert!(delta1(1, 0).is_empty());
        assert!(delta1(0, 1).is_empty());
        let d = delta1(1, 1);
        assert_eq!(d.len(), 4);
        assert!(d.iter().all(|t| (t.outer, t.inner) == (TwoAsBasis::new(1, 0), TwoAsBasis::new(0, 1))
            || (t.outer, t.inner) == (TwoAsBasis::new(0, 1), TwoAsBasis::new(1, 0))));
    }

    #[test]
    fn low_differentials() {
        assert!(cobar_differential(m(1, 0)).is_zero());
        assert!(cobar_differential(m(0, 1)).is_zero());
        assert_eq!(
            cobar_differential(m(1, 1)).to_string(),
            "d m[1,1] = + m[1,0](m[0,1],1) - m[1,0](1,m[0,1]) + m[0,1](m[1,0],1) - m[0,1](1,m[1,0])"
        );
        assert_eq!(
            cobar_differential(m(2, 0)).to_string(),
            "d m[2,0] = + m[1,0](m[1,0],1) - m[1,0](1,m[1,0])"
        );
        assert_eq!(cobar_differential(m(1, 0)).to_string(), "d m[1,0] = 0");
        assert!(CobarGenerator::new(0, 0).is_err());
    }

    #[test]
    fn d_squared_small() {
        assert!(d_squared_check(3).unwrap().passed());
        assert!(d_squared_check(5).unwrap().passed());
        assert!(d_squared_check(1).is_err());
        let bad = d_squared_check_with(4, SignRule::SlotOnly).unwrap();
        assert_eq!(bad.witness.unwrap().generator.arity(), 4);
    }

    #[test]
    fn slice() {
        assert_eq!(ainfty_table(4).len(), 5);
        assert!(ainfty_slice_check(5).unwrap());
    }
}
