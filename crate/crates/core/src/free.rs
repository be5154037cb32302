//! Free nonsymmetric operads: planar tree monomials over a signature of
//! generators, partial composition by grafting, and formal linear
//! combinations with rational coefficients.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{display_rational, Rational};

/// Index of a generator inside its [`Signature`].
pub type GenId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub symbol: String,
    pub arity: usize,
    pub degree: i32,
    /// Position in the total order on generators; larger means greater.
    pub rank: u32,
}

impl Generator {
    pub fn binary(symbol: impl Into<String>, rank: u32) -> Self {
        Generator {
            symbol: symbol.into(),
            arity: 2,
            degree: 0,
            rank,
        }
    }
}

/// An ordered list of generators with distinct symbols and distinct ranks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    gens: Vec<Generator>,
}

impl Signature {
    pub fn new(gens: Vec<Generator>) -> Result<Self> {
        for (k, g) in gens.iter().enumerate() {
            if g.arity == 0 {
                return Err(Error::InvalidSignature(format!("generator `{}` has arity 0", g.symbol)));
            }
            if g.symbol.is_empty() || g.symbol.chars().any(|c| c.is_whitespace() || "()+-,".contains(c)) {
                return Err(Error::InvalidSignature(format!("bad generator symbol `{}`", g.symbol)));
            }
            for h in &gens[..k] {
                if h.symbol == g.symbol {
                    return Err(Error::InvalidSignature(format!("duplicate symbol `{}`", g.symbol)));
                }
                if h.rank == g.rank {
                    return Err(Error::InvalidSignature(format!(
                        "generators `{}` and `{}` share rank {}",
                        h.symbol, g.symbol, g.rank
                    )));
                }
            }
        }
        Ok(Signature { gens })
    }

    /// Binary degree-0 generators ranked by listing order, the first one greatest.
    pub fn binary(symbols: &[&str]) -> Self {
        let n = symbols.len() as u32;
        let gens = symbols
            .iter()
            .enumerate()
            .map(|(k, s)| Generator::binary(*s, n - k as u32))
            .collect();
        Signature::new(gens).expect("valid binary signature")
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn get(&self, id: GenId) -> &Generator {
        &self.gens[id]
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn lookup(&self, symbol: &str) -> Option<GenId> {
        self.gens.iter().position(|g| g.symbol == symbol)
    }

    pub fn is_binary(&self) -> bool {
        self.gens.iter().all(|g| g.arity == 2 && g.degree == 0)
    }

    /// Checks that every vertex of `t` carries a known generator with the right number of children.
    pub fn check(&self, t: &Tree) -> Result<()> {
        match t {
            Tree::Leaf => Ok(()),
            Tree::Node(g, children) => {
                let gen = self
                    .gens
                    .get(*g)
                    .ok_or_else(|| Error::UnknownGenerator(format!("#{g}")))?;
                if gen.arity != children.len() {
                    return Err(Error::ArityMismatch {
                        expected: gen.arity,
                        found: children.len(),
                    });
                }
                children.iter().try_for_each(|c| self.check(c))
            }
        }
    }
}

/// A planar rooted tree whose internal vertices are labeled by generators.
///
/// Leaves are unlabeled; they are numbered left to right. A bare leaf is the
/// operadic identity. The derived `Ord` is structural and only used for
/// storage; the monomial order is [`path_lex_compare`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Leaf,
    Node(GenId, Vec<Tree>),
}

/// One token of the canonical preorder encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Token {
    Leaf,
    Vertex(GenId),
}

impl Tree {
    pub fn identity() -> Tree {
        Tree::Leaf
    }

    pub fn corolla(sig: &Signature, g: GenId) -> Tree {
        Tree::Node(g, vec![Tree::Leaf; sig.get(g).arity])
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    pub fn arity(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Node(_, ch) => ch.iter().map(Tree::arity).sum(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Node(_, ch) => 1 + ch.iter().map(Tree::vertex_count).sum::<usize>(),
        }
    }

    pub fn root(&self) -> Option<GenId> {
        match self {
            Tree::Leaf => None,
            Tree::Node(g, _) => Some(*g),
        }
    }

    pub fn children(&self) -> &[Tree] {
        match self {
            Tree::Leaf => &[],
            Tree::Node(_, ch) => ch,
        }
    }

    /// Partial composition `self ∘_slot inner`: replaces leaf number `slot`
    /// (counted from 0) by `inner`.
    pub fn graft(&self, slot: usize, inner: &Tree) -> Result<Tree> {
        let arity = self.arity();
        if slot >= arity {
            return Err(Error::SlotOutOfRange { slot, arity });
        }
        Ok(self.graft_unchecked(slot, inner))
    }

    fn graft_unchecked(&self, slot: usize, inner: &Tree) -> Tree {
        match self {
            Tree::Leaf => inner.clone(),
            Tree::Node(g, ch) => {
                let mut offset = slot;
                let mut out = Vec::with_capacity(ch.len());
                let mut done = false;
                for c in ch {
                    let a = c.arity();
                    if !done && offset < a {
                        out.push(c.graft_unchecked(offset, inner));
                        done = true;
                    } else {
                        if !done {
                            offset -= a;
                        }
                        out.push(c.clone());
                    }
                }
                Tree::Node(*g, out)
            }
        }
    }

    /// Substitutes `inputs[k]` for leaf `k`. `inputs.len()` must equal the arity.
    pub fn substitute(&self, inputs: &[Tree]) -> Tree {
        fn go(t: &Tree, inputs: &[Tree], next: &mut usize) -> Tree {
            match t {
                Tree::Leaf => {
                    let out = inputs[*next].clone();
                    *next += 1;
                    out
                }
                Tree::Node(g, ch) => Tree::Node(*g, ch.iter().map(|c| go(c, inputs, next)).collect()),
            }
        }
        assert_eq!(inputs.len(), self.arity(), "substitution arity");
        let mut next = 0;
        go(self, inputs, &mut next)
    }

    pub fn encode(&self) -> Vec<Token> {
        fn go(t: &Tree, out: &mut Vec<Token>) {
            match t {
                Tree::Leaf => out.push(Token::Leaf),
                Tree::Node(g, ch) => {
                    out.push(Token::Vertex(*g));
                    ch.iter().for_each(|c| go(c, out));
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out
    }

    pub fn decode(sig: &Signature, tokens: &[Token]) -> Result<Tree> {
        fn go(sig: &Signature, tokens: &[Token], pos: &mut usize) -> Result<Tree> {
            let tok = *tokens
                .get(*pos)
                .ok_or_else(|| Error::Parse("truncated tree encoding".into()))?;
            *pos += 1;
            match tok {
                Token::Leaf => Ok(Tree::Leaf),
                Token::Vertex(g) => {
                    if g >= sig.len() {
                        return Err(Error::UnknownGenerator(format!("#{g}")));
                    }
                    let children = (0..sig.get(g).arity)
                        .map(|_| go(sig, tokens, pos))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(Tree::Node(g, children))
                }
            }
        }
        let mut pos = 0;
        let t = go(sig, tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(Error::Parse("trailing tokens in tree encoding".into()));
        }
        Ok(t)
    }

    /// For each leaf, the word of generators met on the way from the root.
    pub fn path_sequence(&self) -> Vec<Vec<GenId>> {
        fn go(t: &Tree, prefix: &mut Vec<GenId>, out: &mut Vec<Vec<GenId>>) {
            match t {
                Tree::Leaf => out.push(prefix.clone()),
                Tree::Node(g, ch) => {
                    prefix.push(*g);
                    ch.iter().for_each(|c| go(c, prefix, out));
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }

    /// Vertex addresses in preorder; an address is the list of child indices from the root.
    pub fn vertex_addresses(&self) -> Vec<Vec<usize>> {
        fn go(t: &Tree, addr: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if let Tree::Node(_, ch) = t {
                out.push(addr.clone());
                for (k, c) in ch.iter().enumerate() {
                    addr.push(k);
                    go(c, addr, out);
                    addr.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn subtree(&self, addr: &[usize]) -> &Tree {
        addr.iter().fold(self, |t, &k| &t.children()[k])
    }

    /// Replaces the subtree at `addr` by `with`.
    pub fn replace_at(&self, addr: &[usize], with: Tree) -> Tree {
        match addr.split_first() {
            None => with,
            Some((&k, rest)) => match self {
                Tree::Leaf => panic!("address runs through a leaf"),
                Tree::Node(g, ch) => {
                    let mut ch = ch.clone();
                    ch[k] = ch[k].replace_at(rest, with);
                    Tree::Node(*g, ch)
                }
            },
        }
    }

    /// If `pattern` occurs with its root at the root of `self`, returns the
    /// subtrees of `self` sitting at the pattern's leaves, in order.
    pub fn match_root<'a>(&'a self, pattern: &Tree) -> Option<Vec<&'a Tree>> {
        fn go<'a>(t: &'a Tree, p: &Tree, out: &mut Vec<&'a Tree>) -> bool {
            match (p, t) {
                (Tree::Leaf, _) => {
                    out.push(t);
                    true
                }
                (Tree::Node(pg, pc), Tree::Node(tg, tc)) if pg == tg && pc.len() == tc.len() => {
                    pc.iter().zip(tc).all(|(p, t)| go(t, p, out))
                }
                _ => false,
            }
        }
        let mut out = Vec::new();
        go(self, pattern, &mut out).then_some(out)
    }

    /// True if `pattern` occurs rooted at some vertex of `self`.
    pub fn contains_pattern(&self, pattern: &Tree) -> bool {
        self.vertex_addresses()
            .iter()
            .any(|a| self.subtree(a).match_root(pattern).is_some())
    }
}

fn word_cmp(sig: &Signature, a: &[GenId], b: &[GenId]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| sig.get(x).rank.cmp(&sig.get(y).rank))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

fn token_cmp(sig: &Signature, a: &Token, b: &Token) -> Ordering {
    match (a, b) {
        (Token::Leaf, Token::Leaf) => Ordering::Equal,
        (Token::Leaf, Token::Vertex(_)) => Ordering::Less,
        (Token::Vertex(_), Token::Leaf) => Ordering::Greater,
        (Token::Vertex(x), Token::Vertex(y)) => sig.get(*x).rank.cmp(&sig.get(*y).rank),
    }
}

/// Path-lexicographic monomial order on trees of equal arity.
///
/// Each tree is read as its sequence of root-to-leaf label words. Sequences
/// are compared leaf by leaf, words by length first (longer is greater) and
/// then letter by letter using generator ranks. Remaining ties fall back to
/// the preorder encoding. The order is total, and it is preserved by grafting
/// on either side, which is what makes rewriting with it terminate.
pub fn path_lex_compare(sig: &Signature, a: &Tree, b: &Tree) -> Result<Ordering> {
    let (na, nb) = (a.arity(), b.arity());
    if na != nb {
        return Err(Error::ArityMismatch { expected: na, found: nb });
    }
    let pa = a.path_sequence();
    let pb = b.path_sequence();
    let by_paths = pa
        .iter()
        .zip(&pb)
        .map(|(x, y)| word_cmp(sig, x, y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal);
    if by_paths.is_ne() {
        return Ok(by_paths);
    }
    let (ea, eb) = (a.encode(), b.encode());
    Ok(ea
        .iter()
        .zip(&eb)
        .map(|(x, y)| token_cmp(sig, x, y))
        .find(|o| o.is_ne())
        .unwrap_or_else(|| ea.len().cmp(&eb.len())))
}

/// All tree monomials of the given arity, in structural order.
pub fn all_monomials(sig: &Signature, arity: usize) -> Vec<Tree> {
    fn go(sig: &Signature, n: usize, memo: &mut BTreeMap<usize, Vec<Tree>>) -> Vec<Tree> {
        if let Some(v) = memo.get(&n) {
            return v.clone();
        }
        let mut out = Vec::new();
        if n == 1 {
            out.push(Tree::Leaf);
        }
        for (g, gen) in sig.generators().iter().enumerate() {
            let k = gen.arity;
            if k > n || (k == 1 && n == 1) {
                continue;
            }
            // distribute n leaves among k children, each with at least one leaf
            let mut parts = Vec::new();
            compositions(n, k, &mut Vec::new(), &mut parts);
            for part in parts {
                if k == 1 && part[0] == n && n == 1 {
                    continue;
                }
                let mut acc: Vec<Vec<Tree>> = vec![Vec::new()];
                for &m in &part {
                    let subs = go(sig, m, memo);
                    acc = acc
                        .into_iter()
                        .flat_map(|prefix| {
                            subs.iter().map(move |s| {
                                let mut p = prefix.clone();
                                p.push(s.clone());
                                p
                            })
                        })
                        .collect();
                }
                out.extend(acc.into_iter().map(|ch| Tree::Node(g, ch)));
            }
        }
        out.sort();
        memo.insert(n, out.clone());
        out
    }
    assert!(
        sig.generators().iter().all(|g| g.arity >= 2),
        "enumeration needs generators of arity at least 2"
    );
    if arity == 0 {
        return Vec::new();
    }
    go(sig, arity, &mut BTreeMap::new())
}

fn compositions(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k == 0 {
        if n == 0 {
            out.push(cur.clone());
        }
        return;
    }
    for first in 1..=n.saturating_sub(k - 1) {
        cur.push(first);
        compositions(n - first, k - 1, cur, out);
        cur.pop();
    }
}

/// Renders a tree as a nested infix expression with leaves `x1, x2, ...`.
/// Binary generators are written infix, e.g. `(x1*x2)•x3`; others as `g(x1,x2,x3)`.
pub fn render(sig: &Signature, t: &Tree) -> String {
    fn go(sig: &Signature, t: &Tree, next: &mut usize, top: bool, out: &mut String) {
        match t {
            Tree::Leaf => {
                *next += 1;
                out.push_str(&format!("x{next}"));
            }
            Tree::Node(g, ch) => {
                let gen = sig.get(*g);
                if ch.len() == 2 {
                    if !top {
                        out.push('(');
                    }
                    go(sig, &ch[0], next, false, out);
                    out.push_str(&gen.symbol);
                    go(sig, &ch[1], next, false, out);
                    if !top {
                        out.push(')');
                    }
                } else {
                    out.push_str(&gen.symbol);
                    out.push('(');
                    for (k, c) in ch.iter().enumerate() {
                        if k > 0 {
                            out.push(',');
                        }
                        go(sig, c, next, true, out);
                    }
                    out.push(')');
                }
            }
        }
    }
    let mut out = String::new();
    go(sig, t, &mut 0, true, &mut out);
    out
}

/// A finite rational linear combination of tree monomials of one arity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperadElement {
    arity: usize,
    terms: BTreeMap<Tree, Rational>,
}

impl OperadElement {
    pub fn zero(arity: usize) -> Self {
        OperadElement {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(t: Tree) -> Self {
        Self::term(Rational::one(), t)
    }

    pub fn term(coeff: Rational, t: Tree) -> Self {
        let mut e = Self::zero(t.arity());
        e.add_term(coeff, t);
        e
    }

    /// Builds an element from terms, rejecting mixed arities.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Rational, Tree)>) -> Result<Self> {
        let mut e = Self::zero(arity);
        for (c, t) in terms {
            if t.arity() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    found: t.arity(),
                });
            }
            e.add_term(c, t);
        }
        Ok(e)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tree, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &Tree) -> Rational {
        self.terms.get(t).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, coeff: Rational, t: Tree) {
        debug_assert_eq!(t.arity(), self.arity);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, coeff: &Rational, other: &OperadElement) {
        for (t, c) in &other.terms {
            self.add_term(coeff * c, t.clone());
        }
    }

    pub fn scaled(&self, coeff: &Rational) -> Self {
        let mut out = Self::zero(self.arity);
        out.add_scaled(coeff, self);
        out
    }

    pub fn sub(&self, other: &OperadElement) -> Self {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), other);
        out
    }

    /// Greatest monomial under the path-lexicographic order.
    pub fn leading(&self, sig: &Signature) -> Option<(&Tree, &Rational)> {
        self.terms.iter().max_by(|(a, _), (b, _)| {
            path_lex_compare(sig, a, b).expect("terms share one arity")
        })
    }

    pub fn render(&self, sig: &Signature) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut sorted: Vec<(&Tree, &Rational)> = self.terms.iter().collect();
        sorted.sort_by(|(a, _), (b, _)| path_lex_compare(sig, b, a).expect("one arity"));
        let mut out = String::new();
        for (k, (t, c)) in sorted.into_iter().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, false) => {}
                (0, true) => out.push('-'),
                (_, false) => out.push_str(" + "),
                (_, true) => out.push_str(" - "),
            }
            if !mag.is_one() {
                out.push_str(&display_rational(&mag));
                out.push(' ');
            }
            out.push_str(&render(sig, t));
        }
        out
    }
}

/// Bilinear extension of grafting: `outer ∘_slot inner`.
pub fn graft_element(outer: &OperadElement, slot: usize, inner: &OperadElement) -> Result<OperadElement> {
    if slot >= outer.arity {
        return Err(Error::SlotOutOfRange {
            slot,
            arity: outer.arity,
        });
    }
    let mut out = OperadElement::zero(outer.arity + inner.arity - 1);
    for (t, a) in &outer.terms {
        for (s, b) in &inner.terms {
            out.add_term(a * b, t.graft(slot, s)?);
        }
    }
    Ok(out)
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Leaf => write!(f, "|"),
            Token::Vertex(g) => write!(f, "{g}"),
        }
    }
}
