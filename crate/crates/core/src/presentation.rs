//! Binary quadratic presentations, the weight-2 pairing and Koszul duality.
//!
//! A presentation over `k` binary generators lives in the weight-2 space of
//! the free operad, spanned by the `2·k²` two-vertex monomials
//! `g ∘_1 h = g(h(x1,x2),x3)` and `g ∘_2 h = g(x1,h(x2,x3))`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::free::{graft_element, render, GenId, OperadElement, Signature, Tree};
use crate::linalg::{display_rational, int, parse_rational, primitive, span_basis, span_equal, span_rank, RatMatrix, RatVec, Rational};

/// Position of the inner vertex in a two-vertex monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    /// `outer ∘_1 inner`: the inner vertex is the left child.
    Left,
    /// `outer ∘_2 inner`: the inner vertex is the right child.
    Right,
}

impl Shape {
    pub fn slot(self) -> usize {
        match self {
            Shape::Left => 0,
            Shape::Right => 1,
        }
    }
}

/// The two-vertex monomial `outer ∘_shape inner`.
pub fn weight2_monomial(sig: &Signature, shape: Shape, outer: GenId, inner: GenId) -> Tree {
    Tree::corolla(sig, outer)
        .graft(shape.slot(), &Tree::corolla(sig, inner))
        .expect("binary corolla has two slots")
}

fn weight2_index(k: usize, shape: Shape, outer: GenId, inner: GenId) -> usize {
    shape.slot() * k * k + outer * k + inner
}

/// Reads a two-vertex monomial back as (shape, outer, inner).
fn weight2_parts(t: &Tree) -> Option<(Shape, GenId, GenId)> {
    match t {
        Tree::Node(outer, ch) if ch.len() == 2 => match (&ch[0], &ch[1]) {
            (Tree::Node(inner, a), Tree::Leaf) if a.iter().all(Tree::is_leaf) && a.len() == 2 => {
                Some((Shape::Left, *outer, *inner))
            }
            (Tree::Leaf, Tree::Node(inner, a)) if a.iter().all(Tree::is_leaf) && a.len() == 2 => {
                Some((Shape::Right, *outer, *inner))
            }
            _ => None,
        },
        _ => None,
    }
}

/// Coordinates of a weight-2 element in the monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight2Vector {
    sig: Signature,
    coords: RatVec,
}

impl Weight2Vector {
    pub fn from_element(sig: &Signature, e: &OperadElement) -> Result<Self> {
        let k = sig.len();
        let mut coords = vec![Rational::zero(); 2 * k * k];
        for (t, c) in e.terms() {
            let (s, o, i) = weight2_parts(t)
                .ok_or_else(|| Error::Contract(format!("`{}` is not a weight-2 monomial", render(sig, t))))?;
            if o >= k || i >= k {
                return Err(Error::GeneratorMismatch);
            }
            coords[weight2_index(k, s, o, i)] += c;
        }
        Ok(Weight2Vector {
            sig: sig.clone(),
            coords,
        })
    }

    pub fn from_coords(sig: &Signature, coords: RatVec) -> Self {
        assert_eq!(coords.len(), 2 * sig.len() * sig.len());
        Weight2Vector {
            sig: sig.clone(),
            coords,
        }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn to_element(&self) -> OperadElement {
        let k = self.sig.len();
        let mut e = OperadElement::zero(3);
        for shape in [Shape::Left, Shape::Right] {
            for o in 0..k {
                for i in 0..k {
                    let c = &self.coords[weight2_index(k, shape, o, i)];
                    e.add_term(c.clone(), weight2_monomial(&self.sig, shape, o, i));
                }
            }
        }
        e
    }
}

/// Sign of the diagonal pairing on a basis monomial: `+1` on `∘_1`, `-1` on `∘_2`.
fn pairing_sign(k: usize, index: usize) -> Rational {
    if index < k * k {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// The scalar product on the weight-2 space under which Koszul duals are
/// annihilators. Same labels pair to `+1` on `∘_1` and `-1` on `∘_2`.
pub fn weight2_pairing(u: &Weight2Vector, v: &Weight2Vector) -> Result<Rational> {
    if u.sig != v.sig {
        return Err(Error::GeneratorMismatch);
    }
    let k = u.sig.len();
    Ok(u.coords
        .iter()
        .zip(&v.coords)
        .enumerate()
        .fold(Rational::zero(), |acc, (n, (a, b))| acc + pairing_sign(k, n) * a * b))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticPresentation {
    sig: Signature,
    relators: Vec<OperadElement>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    As,
    TwoAs,
    As2,
}

impl Preset {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "as" => Ok(Preset::As),
            "two_as" => Ok(Preset::TwoAs),
            "as_2" => Ok(Preset::As2),
            other => Err(Error::UnknownPreset(other.to_string())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Preset::As => "as",
            Preset::TwoAs => "two_as",
            Preset::As2 => "as_2",
        }
    }
}

/// Generator ids of the two-generator presets: `*` ranks above `•`.
pub const STAR: GenId = 0;
pub const BULLET: GenId = 1;

/// Looks up a preset by name.
pub fn preset(name: &str) -> Result<QuadraticPresentation> {
    Ok(QuadraticPresentation::preset(Preset::parse(name)?))
}

impl QuadraticPresentation {
    /// Validates that the signature is binary, every relator is a weight-2
    /// element, and the relators are linearly independent.
    pub fn new(sig: Signature, relators: Vec<OperadElement>) -> Result<Self> {
        if !sig.is_binary() {
            return Err(Error::InvalidSignature(
                "quadratic presentations need binary degree-0 generators".into(),
            ));
        }
        let vecs = relators
            .iter()
            .map(|r| Weight2Vector::from_element(&sig, r).map(|v| v.coords))
            .collect::<Result<Vec<_>>>()?;
        if vecs.iter().any(|v| v.iter().all(Zero::is_zero))
            || span_rank(2 * sig.len() * sig.len(), &vecs) != vecs.len()
        {
            return Err(Error::DependentRelators);
        }
        Ok(QuadraticPresentation { sig, relators })
    }

    pub fn preset(p: Preset) -> Self {
        match p {
            Preset::As => {
                let sig = Signature::binary(&["*"]);
                let r = associator(&sig, 0);
                Self::new(sig, vec![r]).expect("valid preset")
            }
            Preset::TwoAs => {
                let sig = Signature::binary(&["*", "•"]);
                let m = |s, o, i| OperadElement::monomial(weight2_monomial(&sig, s, o, i));
                let relators = vec![
                    associator(&sig, STAR),
                    m(Shape::Left, STAR, BULLET).sub(&m(Shape::Right, STAR, BULLET)),
                    m(Shape::Left, BULLET, STAR).sub(&m(Shape::Right, BULLET, STAR)),
                    associator(&sig, BULLET),
                    m(Shape::Right, STAR, BULLET).sub(&m(Shape::Right, BULLET, STAR)),
                ];
                Self::new(sig, relators).expect("valid preset")
            }
            Preset::As2 => {
                let sig = Signature::binary(&["*", "•"]);
                let m = |s, o, i| OperadElement::monomial(weight2_monomial(&sig, s, o, i));
                let mut compat = m(Shape::Left, STAR, BULLET);
                compat.add_scaled(&Rational::one(), &m(Shape::Left, BULLET, STAR));
                compat.add_scaled(&-Rational::one(), &m(Shape::Right, BULLET, STAR));
                compat.add_scaled(&-Rational::one(), &m(Shape::Right, STAR, BULLET));
                let relators = vec![associator(&sig, STAR), associator(&sig, BULLET), compat];
                Self::new(sig, relators).expect("valid preset")
            }
        }
    }

    pub fn signature(&self) -> &Signature {
        &self.sig
    }

    pub fn relators(&self) -> &[OperadElement] {
        &self.relators
    }

    /// Dimension of the ambient weight-2 space, `2·k²`.
    pub fn weight2_dim(&self) -> usize {
        2 * self.sig.len() * self.sig.len()
    }

    pub fn relator_vectors(&self) -> Vec<RatVec> {
        self.relators
            .iter()
            .map(|r| {
                Weight2Vector::from_element(&self.sig, r)
                    .expect("validated at construction")
                    .coords
            })
            .collect()
    }

    /// True iff both presentations have the same generators and relator span.
    pub fn same_relations(&self, other: &QuadraticPresentation) -> bool {
        self.sig == other.sig && span_equal(&self.relator_vectors(), &other.relator_vectors())
    }

    /// Quadratic dual: same generators, relators a basis of `R^⊥`.
    pub fn koszul_dual(&self) -> QuadraticPresentation {
        let k = self.sig.len();
        let dim = self.weight2_dim();
        let rows: Vec<RatVec> = self
            .relator_vectors()
            .into_iter()
            .map(|v| v.into_iter().enumerate().map(|(n, c)| c * pairing_sign(k, n)).collect())
            .collect();
        let annihilator = if rows.is_empty() {
            RatMatrix::identity(dim).row_vecs()
        } else {
            RatMatrix::from_rows(dim, &rows).nullspace_basis()
        };
        let relators = span_basis(dim, &annihilator)
            .into_iter()
            .map(|v| Weight2Vector::from_coords(&self.sig, primitive(&v)).to_element())
            .collect();
        QuadraticPresentation::new(self.sig.clone(), relators).expect("annihilator basis is independent")
    }

    /// Text form: a `generators:` line listing symbols from greatest to
    /// least, then one `relator:` line per relator.
    pub fn to_text(&self) -> String {
        let mut ranked: Vec<_> = self.sig.generators().iter().collect();
        ranked.sort_by_key(|g| std::cmp::Reverse(g.rank));
        let mut out = format!(
            "generators: {}\n",
            ranked.iter().map(|g| g.symbol.as_str()).collect::<Vec<_>>().join(" ")
        );
        for r in &self.relators {
            out.push_str("relator: ");
            out.push_str(&r.render(&self.sig));
            out.push('\n');
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut sig = None;
        let mut relators = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let at = |msg: String| Error::Parse(format!("line {}: {msg}", n + 1));
            if let Some(rest) = line.strip_prefix("generators:") {
                if sig.is_some() {
                    return Err(at("duplicate generators line".into()));
                }
                let symbols: Vec<&str> = rest.split_whitespace().collect();
                if symbols.is_empty() {
                    return Err(at("no generators".into()));
                }
                if let Some(bad) = symbols
                    .iter()
                    .find(|s| s.starts_with('x') || s.chars().any(|c| c.is_ascii_digit() || c == '/'))
                {
                    return Err(at(format!("generator symbol `{bad}` clashes with leaf or coefficient syntax")));
                }
                let n = symbols.len() as u32;
                let gens = symbols
                    .iter()
                    .enumerate()
                    .map(|(k, s)| crate::free::Generator::binary(*s, n - k as u32))
                    .collect();
                sig = Some(Signature::new(gens).map_err(|e| at(e.to_string()))?);
            } else if let Some(rest) = line.strip_prefix("relator:") {
                let s = sig.as_ref().ok_or_else(|| at("relator before generators line".into()))?;
                relators.push(parse_element(s, rest).map_err(|e| at(e.to_string()))?);
            } else {
                return Err(at(format!("unrecognized line `{line}`")));
            }
        }
        let sig = sig.ok_or_else(|| Error::Parse("missing generators line".into()))?;
        QuadraticPresentation::new(sig, relators)
    }
}

impl fmt::Display for QuadraticPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `g ∘_1 g - g ∘_2 g`.
pub fn associator(sig: &Signature, g: GenId) -> OperadElement {
    OperadElement::monomial(weight2_monomial(sig, Shape::Left, g, g))
        .sub(&OperadElement::monomial(weight2_monomial(sig, Shape::Right, g, g)))
}

/// Associator of the operation `λ·g0 + μ·g1`, split by the powers
/// `λ², λμ, μ²` of the two parameters.
pub fn pencil_relators(sig: &Signature) -> Result<[OperadElement; 3]> {
    if sig.len() != 2 {
        return Err(Error::GeneratorCount {
            expected: 2,
            found: sig.len(),
        });
    }
    let mut parts = [OperadElement::zero(3), OperadElement::zero(3), OperadElement::zero(3)];
    for o in 0..2 {
        for i in 0..2 {
            // bucket = number of g1 factors
            let bucket = o + i;
            parts[bucket].add_term(int(1), weight2_monomial(sig, Shape::Left, o, i));
            parts[bucket].add_term(int(-1), weight2_monomial(sig, Shape::Right, o, i));
        }
    }
    Ok(parts)
}

/// Associator of `λ·g0 + μ·g1` for concrete parameters.
pub fn blended_associator(sig: &Signature, lambda: &Rational, mu: &Rational) -> Result<OperadElement> {
    if sig.len() != 2 {
        return Err(Error::GeneratorCount {
            expected: 2,
            found: sig.len(),
        });
    }
    let mut blend = OperadElement::zero(2);
    blend.add_term(lambda.clone(), Tree::corolla(sig, 0));
    blend.add_term(mu.clone(), Tree::corolla(sig, 1));
    let left = graft_element(&blend, 0, &blend)?;
    let right = graft_element(&blend, 1, &blend)?;
    Ok(left.sub(&right))
}

/// True iff the relations of `p` are exactly associativity of every
/// operation in the pencil `λ·g0 + μ·g1`.
pub fn pencil_associativity_check(p: &QuadraticPresentation) -> Result<bool> {
    let pencil = pencil_relators(p.signature())?;
    let vecs = pencil
        .iter()
        .map(|e| Weight2Vector::from_element(p.signature(), e).map(|v| v.coords))
        .collect::<Result<Vec<_>>>()?;
    Ok(span_equal(&p.relator_vectors(), &vecs))
}

/// Parses a sum such as `(x1*x2)*x3 - 2/3 x1*(x2*x3)`.
pub fn parse_element(sig: &Signature, text: &str) -> Result<OperadElement> {
    let mut p = Parser {
        sig,
        src: text,
        pos: 0,
    };
    let mut terms: Vec<(Rational, Tree)> = Vec::new();
    p.skip_ws();
    let mut first = true;
    while !p.at_end() {
        let mut sign = Rational::one();
        if p.eat('-') {
            sign = -sign;
        } else if !p.eat('+') && !first {
            return Err(p.error("expected `+` or `-` between terms"));
        }
        p.skip_ws();
        let coeff = p.coefficient()?.unwrap_or_else(Rational::one);
        p.skip_ws();
        let mut next_leaf = 0;
        let t = p.expr(&mut next_leaf)?;
        terms.push((sign * coeff, t));
        p.skip_ws();
        first = false;
    }
    let Some(arity) = terms.first().map(|(_, t)| t.arity()) else {
        return Err(Error::Parse("empty expression".into()));
    };
    OperadElement::from_terms(arity, terms)
}

/// Parses a single monomial such as `(x1*x2)•x3`.
pub fn parse_monomial(sig: &Signature, text: &str) -> Result<Tree> {
    let mut p = Parser {
        sig,
        src: text,
        pos: 0,
    };
    p.skip_ws();
    let mut next = 0;
    let t = p.expr(&mut next)?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("trailing input"));
    }
    Ok(t)
}

struct Parser<'a> {
    sig: &'a Signature,
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in `{}`", self.pos, self.src.trim()))
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, c: char) -> bool {
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn coefficient(&mut self) -> Result<Option<Rational>> {
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_digit() || c == '/'))
            .unwrap_or(self.rest().len());
        if len == 0 {
            return Ok(None);
        }
        let q = parse_rational(&self.rest()[..len])?;
        self.pos += len;
        Ok(Some(q))
    }

    fn operand(&mut self, next_leaf: &mut usize) -> Result<Tree> {
        self.skip_ws();
        if self.eat('(') {
            let t = self.expr(next_leaf)?;
            self.skip_ws();
            if !self.eat(')') {
                return Err(self.error("expected `)`"));
            }
            return Ok(t);
        }
        if self.eat('x') {
            let len = self
                .rest()
                .find(|c: char| !c.is_ascii_digit())
                .unwrap_or(self.rest().len());
            let n: usize = self.rest()[..len]
                .parse()
                .map_err(|_| self.error("expected leaf index after `x`"))?;
            self.pos += len;
            *next_leaf += 1;
            if n != *next_leaf {
                return Err(self.error(&format!("leaves must read x1, x2, ... in order; found x{n}")));
            }
            return Ok(Tree::Leaf);
        }
        Err(self.error("expected `(` or a leaf `xN`"))
    }

    fn symbol(&mut self) -> Option<GenId> {
        let rest = self.rest();
        let best = self
            .sig
            .generators()
            .iter()
            .enumerate()
            .filter(|(_, g)| rest.starts_with(g.symbol.as_str()))
            .max_by_key(|(_, g)| g.symbol.len())?;
        self.pos += best.1.symbol.len();
        Some(best.0)
    }

    fn expr(&mut self, next_leaf: &mut usize) -> Result<Tree> {
        let left = self.operand(next_leaf)?;
        self.skip_ws();
        let Some(g) = self.symbol() else {
            return Ok(left);
        };
        let right = self.operand(next_leaf)?;
        Ok(Tree::Node(g, vec![left, right]))
    }
}

/// Renders a weight-2 coordinate vector, used in reports.
pub fn render_coords(sig: &Signature, coords: &[Rational]) -> String {
    let k = sig.len();
    let mut parts = Vec::new();
    for shape in [Shape::Left, Shape::Right] {
        for o in 0..k {
            for i in 0..k {
                let c = &coords[weight2_index(k, shape, o, i)];
                if !c.is_zero() {
                    parts.push(format!("{}·[{}]", display_rational(c), render(sig, &weight2_monomial(sig, shape, o, i))));
                }
            }
        }
    }
    parts.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn two() -> Signature {
        Signature::binary(&["*", "•"])
    }

    fn w(shape: Shape, o: GenId, i: GenId) -> Weight2Vector {
        let sig = two();
        Weight2Vector::from_element(&sig, &OperadElement::monomial(weight2_monomial(&sig, shape, o, i))).unwrap()
    }

    #[test]
    fn preset_sizes() {
        assert_eq!(preset("as").unwrap().relators().len(), 1);
        assert_eq!(preset("two_as").unwrap().relators().len(), 5);
        assert_eq!(preset("as_2").unwrap().relators().len(), 3);
        assert_eq!(preset("lie"), Err(Error::UnknownPreset("lie".into())));
        let a = preset("as").unwrap();
        assert_eq!(a.relators()[0].render(a.signature()), "(x1*x2)*x3 - x1*(x2*x3)");
    }

    #[test]
    fn pairing_values() {
        let l = w(Shape::Left, STAR, STAR);
        let r = w(Shape::Right, STAR, STAR);
        assert_eq!(weight2_pairing(&l, &l).unwrap(), int(1));
        assert_eq!(weight2_pairing(&r, &r).unwrap(), int(-1));
        assert_eq!(weight2_pairing(&l, &r).unwrap(), int(0));
        assert_eq!(
            weight2_pairing(&w(Shape::Left, STAR, BULLET), &w(Shape::Left, BULLET, STAR)).unwrap(),
            int(0)
        );
        let one = Signature::binary(&["*"]);
        let u = Weight2Vector::from_coords(&one, vec![int(1), int(0)]);
        assert_eq!(weight2_pairing(&u, &l), Err(Error::GeneratorMismatch));
    }

    #[test]
    fn pairing_matrix_is_signed_identity() {
        let sig = two();
        let basis: Vec<Weight2Vector> = (0..8)
            .map(|n| {
                let mut c = vec![Rational::zero(); 8];
                c[n] = Rational::one();
                Weight2Vector::from_coords(&sig, c)
            })
            .collect();
        for (a, u) in basis.iter().enumerate() {
            for (b, v) in basis.iter().enumerate() {
                let expect = match (a == b, a < 4) {
                    (false, _) => int(0),
                    (true, true) => int(1),
                    (true, false) => int(-1),
                };
                assert_eq!(weight2_pairing(u, v).unwrap(), expect);
            }
        }
    }

    #[test]
    fn dual_of_as_is_as() {
        let a = preset("as").unwrap();
        assert!(a.koszul_dual().same_relations(&a));
    }

    #[test]
    fn dual_of_two_as_is_as2() {
        let d = preset("two_as").unwrap().koszul_dual();
        assert_eq!(d.relators().len(), 3);
        assert!(d.same_relations(&preset("as_2").unwrap()));
        assert!(d.koszul_dual().same_relations(&preset("two_as").unwrap()));
    }

    #[test]
    fn dependent_relators_rejected() {
        let sig = Signature::binary(&["*"]);
        let r = associator(&sig, 0);
        assert_eq!(
            QuadraticPresentation::new(sig, vec![r.clone(), r.scaled(&int(2))]),
            Err(Error::DependentRelators)
        );
    }

    #[test]
    fn pencil() {
        assert!(pencil_associativity_check(&preset("as_2").unwrap()).unwrap());
        assert!(!pencil_associativity_check(&preset("two_as").unwrap()).unwrap());
        let sig = two();
        let star_only = QuadraticPresentation::new(sig.clone(), vec![associator(&sig, STAR)]).unwrap();
        assert!(!pencil_associativity_check(&star_only).unwrap());
        assert!(matches!(
            pencil_associativity_check(&preset("as").unwrap()),
            Err(Error::GeneratorCount { .. })
        ));
    }

    #[test]
    fn blended_associator_in_as2_span() {
        let p = preset("as_2").unwrap();
        let e = blended_associator(p.signature(), &rat(2, 3), &rat(-5, 7)).unwrap();
        let v = Weight2Vector::from_element(p.signature(), &e).unwrap();
        assert!(crate::linalg::in_span(&p.relator_vectors(), v.coords()));
        let q = preset("two_as").unwrap();
        // totally compatible products are in particular linearly compatible
        let e = blended_associator(q.signature(), &int(1), &int(1)).unwrap();
        let v = Weight2Vector::from_element(q.signature(), &e).unwrap();
        assert!(crate::linalg::in_span(&q.relator_vectors(), v.coords()));
    }

    #[test]
    fn text_round_trip() {
        for name in ["as", "two_as", "as_2"] {
            let p = preset(name).unwrap();
            let back = QuadraticPresentation::parse_text(&p.to_text()).unwrap();
            assert_eq!(back, p, "{name}");
        }
    }

    #[test]
    fn text_parse_coefficients_and_errors() {
        let text = "# comment\ngenerators: * •\nrelator: 2/3 (x1*x2)•x3 - 2/3 x1•(x2*x3)\n";
        let p = QuadraticPresentation::parse_text(text).unwrap();
        assert_eq!(p.relators()[0].render(p.signature()), "2/3 (x1*x2)•x3 - 2/3 x1•(x2*x3)");
        assert!(QuadraticPresentation::parse_text("relator: x1*x2").is_err());
        assert!(QuadraticPresentation::parse_text("generators: *\nrelator: (x1*x3)*x2").is_err());
        assert!(QuadraticPresentation::parse_text("generators: *\nrelator: x1*x2*x3").is_err());
        assert!(QuadraticPresentation::parse_text("generators: *\nbogus").is_err());
    }
}
