//! Rewriting systems for binary quadratic ns operads.
//!
//! Relators are oriented by a monomial order into rules `leading term ↦
//! smaller terms`. A presentation is Koszul as soon as every critical
//! monomial (a three-vertex tree in which two leading terms overlap) rewrites
//! to a single normal form no matter which rule fires first.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::free::{all_monomials, path_lex_compare, render, OperadElement, Signature, Tree};
use crate::linalg::{Rational, RatMatrix};
use crate::presentation::{QuadraticPresentation, Weight2Vector};

/// Step budget for a single normalization.
pub const REWRITE_BUDGET: usize = 1_000_000;

/// Monomial orders available for orienting relators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MonomialOrder {
    #[default]
    PathLex,
    /// The opposite of `PathLex`. Also compatible with grafting, and
    /// well-founded because each arity has finitely many monomials.
    ReversePathLex,
}

impl MonomialOrder {
    pub fn compare(self, sig: &Signature, a: &Tree, b: &Tree) -> Ordering {
        let o = path_lex_compare(sig, a, b).expect("compared monomials share an arity");
        match self {
            MonomialOrder::PathLex => o,
            MonomialOrder::ReversePathLex => o.reverse(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Tree,
    pub rhs: OperadElement,
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    sig: Signature,
    order: MonomialOrder,
    rules: Vec<RewriteRule>,
}

/// Where a rule applies: the rule index and the address of the matched root vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Redex {
    pub rule: usize,
    pub address: Vec<usize>,
}

/// Orients the relators of `p` and inter-reduces them.
///
/// The relator matrix is brought to reduced row-echelon form with columns
/// sorted from greatest to least monomial, so every rule has a distinct
/// leading term that appears in no other rule.
pub fn orient(p: &QuadraticPresentation, order: MonomialOrder) -> Result<RewriteSystem> {
    let sig = p.signature().clone();
    let dim = p.weight2_dim();
    let monomials: Vec<Tree> = (0..dim)
        .map(|n| {
            let mut c = vec![Rational::zero(); dim];
            c[n] = Rational::one();
            let e = Weight2Vector::from_coords(&sig, c).to_element();
            let t = e.terms().next().expect("basis monomial").0.clone();
            t
        })
        .collect();
    let mut perm: Vec<usize> = (0..dim).collect();
    perm.sort_by(|&a, &b| order.compare(&sig, &monomials[b], &monomials[a]));

    let rows: Vec<Vec<Rational>> = p
        .relator_vectors()
        .into_iter()
        .map(|v| perm.iter().map(|&n| v[n].clone()).collect())
        .collect();
    let (red, pivots) = RatMatrix::from_rows(dim, &rows).rref();
    if pivots.len() < rows.len() {
        return Err(Error::LeadingTermCancelled(pivots.len()));
    }
    let rules = pivots
        .iter()
        .enumerate()
        .map(|(r, &pc)| {
            let lhs = monomials[perm[pc]].clone();
            let mut rhs = OperadElement::zero(3);
            for c in pc + 1..dim {
                let coeff = &red[(r, c)];
                if !coeff.is_zero() {
                    rhs.add_term(-coeff.clone(), monomials[perm[c]].clone());
                }
            }
            RewriteRule { lhs, rhs }
        })
        .collect();
    RewriteSystem::new(sig, order, rules)
}

impl RewriteSystem {
    /// Builds a system from explicit rules. Each rule's right-hand side must
    /// consist of monomials strictly smaller than its left-hand side.
    pub fn new(sig: Signature, order: MonomialOrder, rules: Vec<RewriteRule>) -> Result<Self> {
        for (k, r) in rules.iter().enumerate() {
            sig.check(&r.lhs)?;
            if r.rhs.arity() != r.lhs.arity() {
                return Err(Error::ArityMismatch {
                    expected: r.lhs.arity(),
                    found: r.rhs.arity(),
                });
            }
            for (t, _) in r.rhs.terms() {
                if order.compare(&sig, t, &r.lhs) != Ordering::Less {
                    return Err(Error::Contract(format!(
                        "rule {k}: `{}` is not below its leading term `{}`",
                        render(&sig, t),
                        render(&sig, &r.lhs)
                    )));
                }
            }
            if rules[..k].iter().any(|o| o.lhs == r.lhs) {
                return Err(Error::Contract(format!("rule {k}: duplicate leading term")));
            }
        }
        Ok(RewriteSystem { sig, order, rules })
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    /// Every place a rule applies in `t`, in leftmost-innermost order
    /// (children before parents, left before right).
    pub fn redexes(&self, t: &Tree) -> Vec<Redex> {
        fn go(rs: &RewriteSystem, t: &Tree, addr: &mut Vec<usize>, out: &mut Vec<Redex>) {
            if let Tree::Node(_, ch) = t {
                for (k, c) in ch.iter().enumerate() {
                    addr.push(k);
                    go(rs, c, addr, out);
                    addr.pop();
                }
                for (n, rule) in rs.rules.iter().enumerate() {
                    if t.match_root(&rule.lhs).is_some() {
                        out.push(Redex {
                            rule: n,
                            address: addr.clone(),
                        });
                    }
                }
            }
        }
        let mut out = Vec::new();
        go(self, t, &mut Vec::new(), &mut out);
        out
    }

    pub fn first_redex(&self, t: &Tree) -> Option<Redex> {
        self.redexes(t).into_iter().next()
    }

    pub fn is_normal(&self, t: &Tree) -> bool {
        self.rules.iter().all(|r| !t.contains_pattern(&r.lhs))
    }

    /// One rewrite of the monomial `t` at `redex`.
    pub fn rewrite_at(&self, t: &Tree, redex: &Redex) -> OperadElement {
        let rule = &self.rules[redex.rule];
        let inputs: Vec<Tree> = t
            .subtree(&redex.address)
            .match_root(&rule.lhs)
            .expect("redex matches")
            .into_iter()
            .cloned()
            .collect();
        let mut out = OperadElement::zero(t.arity());
        for (r, c) in rule.rhs.terms() {
            out.add_term(c.clone(), t.replace_at(&redex.address, r.substitute(&inputs)));
        }
        out
    }

    /// Rewrites one term of `e` once. Returns `None` when `e` is normal.
    ///
    /// The greatest reducible term is chosen, and within it the
    /// leftmost-innermost redex.
    pub fn step(&self, e: &OperadElement) -> Option<OperadElement> {
        let mut reducible: Vec<(&Tree, &Rational, Redex)> = e
            .terms()
            .filter_map(|(t, c)| self.first_redex(t).map(|r| (t, c, r)))
            .collect();
        reducible.sort_by(|a, b| self.order.compare(&self.sig, b.0, a.0));
        let (t, c, redex) = reducible.into_iter().next()?;
        let mut out = e.clone();
        out.add_term(-c.clone(), t.clone());
        out.add_scaled(c, &self.rewrite_at(t, &redex));
        Some(out)
    }

    /// Normal form of `e`.
    pub fn normalize(&self, e: &OperadElement) -> Result<OperadElement> {
        Ok(self.normalize_traced(e)?.pop().unwrap_or_else(|| e.clone()))
    }

    /// The full chain `e, step(e), step(step(e)), ...` ending at the normal form.
    pub fn normalize_traced(&self, e: &OperadElement) -> Result<Vec<OperadElement>> {
        let mut chain = vec![e.clone()];
        for _ in 0..REWRITE_BUDGET {
            match self.step(chain.last().expect("nonempty")) {
                Some(next) => chain.push(next),
                None => return Ok(chain),
            }
        }
        Err(Error::RewriteBudget(REWRITE_BUDGET))
    }

    /// Normalizes with an arbitrary strategy: `choose(n)` picks one of the
    /// `n` available (term, redex) pairs at each step.
    pub fn normalize_with(
        &self,
        e: &OperadElement,
        mut choose: impl FnMut(usize) -> usize,
    ) -> Result<(OperadElement, usize)> {
        let mut cur = e.clone();
        for steps in 0..REWRITE_BUDGET {
            let options: Vec<(Tree, Rational, Redex)> = cur
                .terms()
                .flat_map(|(t, c)| self.redexes(t).into_iter().map(move |r| (t.clone(), c.clone(), r)))
                .collect();
            if options.is_empty() {
                return Ok((cur, steps));
            }
            let (t, c, redex) = &options[choose(options.len()) % options.len()];
            let replaced = self.rewrite_at(t, redex);
            cur.add_term(-c.clone(), t.clone());
            cur.add_scaled(c, &replaced);
        }
        Err(Error::RewriteBudget(REWRITE_BUDGET))
    }

    /// Three-vertex monomials in which two leading terms overlap along a
    /// chain: the inner vertex of one is the root of the other.
    pub fn critical_monomials(&self) -> Vec<Tree> {
        let mut set = BTreeSet::new();
        for upper in &self.rules {
            let Tree::Node(_, ch) = &upper.lhs else { continue };
            for (slot, child) in ch.iter().enumerate() {
                let Some(label) = child.root() else { continue };
                for lower in &self.rules {
                    if lower.lhs.root() == Some(label) && upper.lhs.vertex_count() == 2 {
                        set.insert(upper.lhs.replace_at(&[slot], lower.lhs.clone()));
                    }
                }
            }
        }
        self.sorted(set)
    }

    /// Three-vertex monomials in which two leading terms share only their
    /// root vertex, one reaching into each of two different children.
    pub fn branch_overlaps(&self) -> Vec<Tree> {
        let mut set = BTreeSet::new();
        for a in &self.rules {
            for b in &self.rules {
                let (Tree::Node(ga, ca), Tree::Node(gb, cb)) = (&a.lhs, &b.lhs) else { continue };
                if ga != gb || a.lhs.vertex_count() != 2 || b.lhs.vertex_count() != 2 {
                    continue;
                }
                let sa = ca.iter().position(|c| !c.is_leaf());
                let sb = cb.iter().position(|c| !c.is_leaf());
                if let (Some(sa), Some(sb)) = (sa, sb) {
                    if sa < sb {
                        let mut children = ca.clone();
                        children[sb] = cb[sb].clone();
                        set.insert(Tree::Node(*ga, children));
                    }
                }
            }
        }
        self.sorted(set)
    }

    fn sorted(&self, set: BTreeSet<Tree>) -> Vec<Tree> {
        let mut v: Vec<Tree> = set.into_iter().collect();
        v.sort_by(|a, b| self.order.compare(&self.sig, b, a));
        v
    }

    fn check_overlap(&self, t: &Tree) -> Result<OverlapCheck> {
        let mut branches = Vec::new();
        for redex in self.redexes(t) {
            let first = self.rewrite_at(t, &redex);
            let chain = self.normalize_traced(&first)?;
            branches.push(Branch { redex, chain });
        }
        let joinable = branches
            .windows(2)
            .all(|w| w[0].normal_form() == w[1].normal_form());
        Ok(OverlapCheck {
            monomial: t.clone(),
            branches,
            joinable,
        })
    }

    /// Checks every critical monomial, and every branch overlap, for confluence.
    pub fn confluence_report(&self) -> Result<ConfluenceReport> {
        let critical = self
            .critical_monomials()
            .iter()
            .map(|t| self.check_overlap(t))
            .collect::<Result<Vec<_>>>()?;
        let branch = self
            .branch_overlaps()
            .iter()
            .map(|t| self.check_overlap(t))
            .collect::<Result<Vec<_>>>()?;
        Ok(ConfluenceReport {
            sig: self.sig.clone(),
            critical,
            branch,
        })
    }

    /// Number of arity-`n` monomials containing no leading term.
    pub fn count_normal_forms(&self, n: usize) -> usize {
        self.normal_monomials(n).len()
    }

    pub fn normal_monomials(&self, n: usize) -> Vec<Tree> {
        all_monomials(&self.sig, n)
            .into_iter()
            .filter(|t| self.is_normal(t))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct Branch {
    pub redex: Redex,
    /// Result of the first rewrite followed by every normalization step.
    pub chain: Vec<OperadElement>,
}

impl Branch {
    pub fn normal_form(&self) -> &OperadElement {
        self.chain.last().expect("chain starts with the first rewrite")
    }

    /// Number of rewrites from the overlap to the normal form.
    pub fn steps(&self) -> usize {
        self.chain.len()
    }
}

#[derive(Clone, Debug)]
pub struct OverlapCheck {
    pub monomial: Tree,
    pub branches: Vec<Branch>,
    pub joinable: bool,
}

#[derive(Clone, Debug)]
pub struct ConfluenceReport {
    sig: Signature,
    pub critical: Vec<OverlapCheck>,
    pub branch: Vec<OverlapCheck>,
}

impl ConfluenceReport {
    pub fn passed(&self) -> bool {
        self.critical.iter().chain(&self.branch).all(|c| c.joinable)
    }

    pub fn failures(&self) -> impl Iterator<Item = &OverlapCheck> {
        self.critical.iter().chain(&self.branch).filter(|c| !c.joinable)
    }

    pub fn find(&self, t: &Tree) -> Option<&OverlapCheck> {
        self.critical.iter().chain(&self.branch).find(|c| &c.monomial == t)
    }
}

impl fmt::Display for ConfluenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sig = &self.sig;
        let block = |f: &mut fmt::Formatter<'_>, kind: &str, c: &OverlapCheck| -> fmt::Result {
            writeln!(f, "{kind} {}", render(sig, &c.monomial))?;
            for (n, b) in c.branches.iter().enumerate() {
                let at = if b.redex.address.is_empty() {
                    "root".to_string()
                } else {
                    b.redex
                        .address
                        .iter()
                        .map(|k| (k + 1).to_string())
                        .collect::<Vec<_>>()
                        .join(".")
                };
                writeln!(f, "  branch {} (rule {} at {at}):", n + 1, b.redex.rule + 1)?;
                writeln!(f, "      {}", render(sig, &c.monomial))?;
                for e in &b.chain {
                    writeln!(f, "   -> {}", e.render(sig))?;
                }
            }
            writeln!(f, "  {}", if c.joinable { "joinable" } else { "NOT JOINABLE" })
        };
        for c in &self.critical {
            block(f, "critical", c)?;
        }
        for c in &self.branch {
            block(f, "branch overlap", c)?;
        }
        writeln!(
            f,
            "verdict: {} ({} critical monomials, {} branch overlaps)",
            if self.passed() { "confluent" } else { "not confluent" },
            self.critical.len(),
            self.branch.len()
        )
    }
}

/// `f(t) = Σ_{n≥1} (-1)^n dims[n-1] t^n`, truncated after `t^n_max`.
fn signed_series(dims: &[u64], n_max: usize) -> Vec<Rational> {
    let mut s = vec![Rational::zero(); n_max + 1];
    for n in 1..=n_max {
        let v = Rational::from_integer(dims[n - 1].into());
        s[n] = if n % 2 == 0 { v } else { -v };
    }
    s
}

fn series_mul(a: &[Rational], b: &[Rational], n_max: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n_max + 1];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate().take(n_max + 1 - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Checks `f_dual(f_P(t)) ≡ t (mod t^{n_max+1})` for the signed generating
/// series of two dimension sequences given for arities `1..=n_max`.
pub fn poincare_consistency(dims_p: &[u64], dims_dual: &[u64], n_max: usize) -> Result<bool> {
    if n_max == 0 || dims_p.len() < n_max || dims_dual.len() < n_max {
        return Err(Error::Contract(format!(
            "need dimensions for arities 1..={n_max}, got {} and {}",
            dims_p.len(),
            dims_dual.len()
        )));
    }
    let f = signed_series(dims_p, n_max);
    let g = signed_series(dims_dual, n_max);
    let mut composite = vec![Rational::zero(); n_max + 1];
    let mut power = vec![Rational::zero(); n_max + 1];
    power[0] = Rational::one();
    for coeff in g.iter().skip(1) {
        power = series_mul(&power, &f, n_max);
        for (c, p) in composite.iter_mut().zip(&power) {
            *c += coeff * p;
        }
    }
    Ok(composite
        .iter()
        .enumerate()
        .all(|(n, c)| if n == 1 { c.is_one() } else { c.is_zero() }))
}

/// Dimension sequence `1..=n_max` of normal forms of a rewriting system.
pub fn normal_form_dims(rs: &RewriteSystem, n_max: usize) -> Vec<u64> {
    (1..=n_max).map(|n| rs.count_normal_forms(n) as u64).collect()
}

/// Sum of absolute values of the coefficients; a cheap witness size.
pub fn coefficient_mass(e: &OperadElement) -> Rational {
    e.terms().fold(Rational::zero(), |acc, (_, c)| acc + c.abs())
}
