use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::One;

use crate::cobar::{cobar_differential, CobarGenerator};
use crate::error::{Error, Result};
use crate::linalg::Rational;

use super::algebra::{DgAs2Algebra, Product};
use super::complex::{apply_matrix, unit, ChainComplex};
use super::retract::DeformationRetract;
use super::tensor::{add_scaled, scaled, MultiLinear, SparseVec};

/// Largest weight i+j accepted by [`transfer`].
pub const MAX_WEIGHT: usize = 7;

/// The operations m[i,j] on the small complex, for i+j+1 up to `max_arity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferredStructure {
    complex: ChainComplex,
    max_arity: usize,
    ops: BTreeMap<(usize, usize), MultiLinear>,
}

impl TransferredStructure {
    /// Every (i,j) with 2 ≤ i+j+1 ≤ max arity must be present, with matching
    /// arity and degree; outputs must sit in the right degree.
    pub fn new(complex: ChainComplex, ops: BTreeMap<(usize, usize), MultiLinear>) -> Result<Self> {
        let max_arity = ops.keys().map(|(i, j)| i + j + 1).max().unwrap_or(1);
        for n in 2..=max_arity {
            for i in 0..n {
                if !ops.contains_key(&(i, n - 1 - i)) {
                    return Err(Error::Contract(format!("missing operation ({i},{})", n - 1 - i)));
                }
            }
        }
        for (&(i, j), m) in &ops {
            if i + j == 0 {
                return Err(Error::Contract("operation (0,0) is not allowed".into()));
            }
            let deg = (i + j) as i32 - 1;
            if m.arity() != i + j + 1 || m.degree() != deg {
                return Err(Error::Contract(format!("operation ({i},{j}) has the wrong arity or degree")));
            }
            for (inputs, out) in m.entries() {
                if inputs.iter().chain(out.keys()).any(|&k| k >= complex.dim()) {
                    return Err(Error::Contract(format!("operation ({i},{j}) refers to an unknown basis index")));
                }
                let target = inputs.iter().map(|&k| complex.degree(k)).sum::<i32>() + deg;
                if out.keys().any(|&k| complex.degree(k) != target) {
                    let names: Vec<&str> = inputs.iter().map(|&k| complex.name(k)).collect();
                    return Err(Error::Contract(format!(
                        "operation ({i},{j}) on ({}) leaves degree {target}",
                        names.join(", ")
                    )));
                }
            }
        }
        Ok(TransferredStructure {
            complex,
            max_arity,
            ops,
        })
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&MultiLinear> {
        self.ops.get(&(i, j))
    }

    pub fn operations(&self) -> &BTreeMap<(usize, usize), MultiLinear> {
        &self.ops
    }

    /// Mutable access for building perturbed copies.
    pub fn get_mut(&mut self, i: usize, j: usize) -> Option<&mut MultiLinear> {
        self.ops.get_mut(&(i, j))
    }

    /// Relabel m[i,j] as m[j,i].
    pub fn swapped(&self) -> Self {
        TransferredStructure {
            complex: self.complex.clone(),
            max_arity: self.max_arity,
            ops: self.ops.iter().map(|(&(i, j), m)| ((j, i), m.clone())).collect(),
        }
    }
}

/// Vertex sign (−1)^(α·k + β·l + γ·k·l + δ) in the tree formula, where k and
/// l are the arities of the left and right subtrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TreeSign {
    pub alpha: u8,
    pub beta: u8,
    pub gamma: u8,
    pub delta: u8,
}

impl TreeSign {
    /// The convention used by [`transfer`].
    pub const SHIPPED: TreeSign = TreeSign {
        alpha: 1,
        beta: 0,
        gamma: 0,
        delta: 1,
    };

    pub fn all() -> Vec<TreeSign> {
        let mut out = Vec::new();
        for bits in 0..16u8 {
            out.push(TreeSign {
                alpha: bits & 1,
                beta: (bits >> 1) & 1,
                gamma: (bits >> 2) & 1,
                delta: (bits >> 3) & 1,
            });
        }
        out
    }

    fn sign(&self, k: usize, l: usize) -> Rational {
        let e = self.alpha as usize * k + self.beta as usize * l + self.gamma as usize * k * l + self.delta as usize;
        if e.is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        }
    }
}

fn koszul(exponent: i64) -> Rational {
    if exponent.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Homotopy transfer of the two products along a deformation retract.
///
/// λ[i,j] is the sum over planar binary trees with i vertices `star` and j
/// vertices `bullet`; leaves carry incl and internal edges carry h. At a
/// vertex with subtrees F (arity k) and G (arity l),
/// `g∘(F ⊗ G)(x ⊗ y) = θ(k,l) (−1)^(|G|·|x|) g(F x, G y)`, and
/// m[i,j] = proj∘λ[i,j]. The vertex sign θ is [`TreeSign::SHIPPED`],
/// (−1)^(k+1); the Koszul factor comes from |G| = weight of G.
pub fn transfer(alg: &DgAs2Algebra, r: &DeformationRetract, max_weight: usize) -> Result<TransferredStructure> {
    transfer_with_sign(alg, r, max_weight, TreeSign::SHIPPED)
}

pub fn transfer_with_sign(
    alg: &DgAs2Algebra,
    r: &DeformationRetract,
    max_weight: usize,
    sign: TreeSign,
) -> Result<TransferredStructure> {
    if !alg.complex().same_as(r.big()) {
        return Err(Error::Contract("the algebra's complex is not the retract's big complex".into()));
    }
    if max_weight == 0 || max_weight > MAX_WEIGHT {
        return Err(Error::Contract(format!("weight must be between 1 and {MAX_WEIGHT}, got {max_weight}")));
    }
    let v = r.small();
    let mut engine = Engine {
        alg,
        r,
        sign,
        memo: HashMap::new(),
    };
    let mut ops = BTreeMap::new();
    for w in 1..=max_weight {
        for i in (0..=w).rev() {
            let j = w - i;
            let n = w + 1;
            let mut m = MultiLinear::zero(n, w as i32 - 1);
            for tuple in tuples(v.dim(), n) {
                let value = apply_matrix(r.proj(), &engine.lambda(i, j, &tuple));
                m.set(tuple, value)?;
            }
            ops.insert((i, j), m);
        }
    }
    TransferredStructure::new(v.clone(), ops)
}

struct Engine<'a> {
    alg: &'a DgAs2Algebra,
    r: &'a DeformationRetract,
    sign: TreeSign,
    memo: HashMap<(usize, usize, Vec<usize>), SparseVec>,
}

impl Engine<'_> {
    /// λ[i,j] on a tuple of basis elements of the small complex.
    fn lambda(&mut self, i: usize, j: usize, tuple: &[usize]) -> SparseVec {
        let key = (i, j, tuple.to_vec());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let out = self.compute(i, j, tuple);
        self.memo.insert(key, out.clone());
        out
    }

    /// H∘λ: incl on a leaf, h after any vertex.
    fn edge(&mut self, i: usize, j: usize, tuple: &[usize]) -> SparseVec {
        if i + j == 0 {
            apply_matrix(self.r.incl(), &unit(tuple[0]))
        } else {
            apply_matrix(self.r.h(), &self.lambda(i, j, tuple))
        }
    }

    fn compute(&mut self, i: usize, j: usize, tuple: &[usize]) -> SparseVec {
        let mut out = SparseVec::new();
        if i + j == 0 {
            return apply_matrix(self.r.incl(), &unit(tuple[0]));
        }
        let v = self.r.small();
        for (g, rest_i, rest_j) in [(Product::Star, i.wrapping_sub(1), j), (Product::Bullet, i, j.wrapping_sub(1))] {
            if rest_i > i || rest_j > j {
                continue;
            }
            for i1 in 0..=rest_i {
                for j1 in 0..=rest_j {
                    let (i2, j2) = (rest_i - i1, rest_j - j1);
                    let k = i1 + j1 + 1;
                    let l = i2 + j2 + 1;
                    let left_degree: i64 = tuple[..k].iter().map(|&x| v.degree(x) as i64).sum();
                    let right_weight = (i2 + j2) as i64;
                    let c = &self.sign.sign(k, l) * &koszul(right_weight * left_degree);
                    let a = self.edge(i1, j1, &tuple[..k]);
                    if a.is_empty() {
                        continue;
                    }
                    let b = self.edge(i2, j2, &tuple[k..]);
                    if b.is_empty() {
                        continue;
                    }
                    add_scaled(&mut out, &c, &self.alg.mul(g, &a, &b));
                }
            }
        }
        out
    }
}

fn tuples(dim: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..dim).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

/// A basis tuple on which an ∞-relation fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationWitness {
    pub i: usize,
    pub j: usize,
    pub inputs: Vec<String>,
    pub lhs: Vec<(String, Rational)>,
    pub rhs: Vec<(String, Rational)>,
}

impl fmt::Display for RelationWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[(String, Rational)]| {
            if v.is_empty() {
                "0".to_string()
            } else {
                v.iter()
                    .map(|(n, c)| format!("{} {n}", crate::linalg::format_rational(c)))
                    .collect::<Vec<_>>()
                    .join(" + ")
            }
        };
        write!(
            f,
            "relation for m[{},{}] fails on ({}): d-side = {}, composite side = {}",
            self.i,
            self.j,
            self.inputs.join(", "),
            show(&self.lhs),
            show(&self.rhs)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub max_arity: usize,
    pub tuples_checked: usize,
    pub witness: Option<RelationWitness>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Check ∂_V(m[i,j]) = Σ (−1)^(p+qr) m[a,b](1^p ⊗ m[c,d] ⊗ 1^r) on every basis
/// tuple, for 2 ≤ i+j+1 ≤ `max_arity`, where
/// ∂_V(m) = d∘m − (−1)^|m| Σ_k m(1^k ⊗ d ⊗ 1^(n−k−1)).
/// Arity 2 amounts to m[1,0] and m[0,1] being chain maps.
pub fn verify_infinity_relations(t: &TransferredStructure, v: &ChainComplex, max_arity: usize) -> Result<Verification> {
    if max_arity < 2 {
        return Err(Error::Contract(format!("max arity must be at least 2, got {max_arity}")));
    }
    if max_arity > t.max_arity() {
        return Err(Error::Contract(format!(
            "structure only has operations up to arity {}, asked for {max_arity}",
            t.max_arity()
        )));
    }
    let names = t.complex().names();
    if v.names() != names || v.degrees() != t.complex().degrees() {
        return Err(Error::Contract("complex does not match the structure's basis".into()));
    }
    let mut checked = 0;
    for g in CobarGenerator::up_to_arity(max_arity) {
        let (i, j) = (g.i(), g.j());
        let m = t.get(i, j).expect("validated on construction");
        let deg = g.degree();
        let diff = cobar_differential(g);
        for tuple in tuples(v.dim(), g.arity()) {
            checked += 1;
            let degs: Vec<i64> = tuple.iter().map(|&k| v.degree(k) as i64).collect();
            let args: Vec<SparseVec> = tuple.iter().map(|&k| unit(k)).collect();
            // d-side
            let mut lhs = v.apply_d(&m.eval(&args));
            for k in 0..tuple.len() {
                let before: i64 = degs[..k].iter().sum();
                let mut moved = args.clone();
                moved[k] = v.d_basis(tuple[k]);
                let c = -(koszul(deg) * koszul(before));
                add_scaled(&mut lhs, &c, &m.eval(&moved));
            }
            // composite side
            let mut rhs = SparseVec::new();
            for term in &diff.terms {
                let outer = t.get(term.outer.i(), term.outer.j()).expect("validated");
                let inner = t.get(term.inner.i(), term.inner.j()).expect("validated");
                let (p, q) = (term.slot, term.inner.arity());
                let before: i64 = degs[..p].iter().sum();
                let c = Rational::from_integer(term.sign.into()) * koszul(term.inner.degree() * before);
                let mid = inner.eval(&args[p..p + q]);
                if mid.is_empty() {
                    continue;
                }
                let mut outer_args = args[..p].to_vec();
                outer_args.push(mid);
                outer_args.extend_from_slice(&args[p + q..]);
                add_scaled(&mut rhs, &c, &outer.eval(&outer_args));
            }
            if lhs != rhs {
                let named = |s: &SparseVec| s.iter().map(|(&k, c)| (names[k].clone(), c.clone())).collect();
                return Ok(Verification {
                    max_arity,
                    tuples_checked: checked,
                    witness: Some(RelationWitness {
                        i,
                        j,
                        inputs: tuple.iter().map(|&k| names[k].clone()).collect(),
                        lhs: named(&lhs),
                        rhs: named(&rhs),
                    }),
                });
            }
        }
    }
    Ok(Verification {
        max_arity,
        tuples_checked: checked,
        witness: None,
    })
}

/// Scale one stored value by −1; for negative controls.
pub fn flip_one_entry(t: &mut TransferredStructure, i: usize, j: usize) -> Option<Vec<usize>> {
    let m = t.get_mut(i, j)?;
    let (inputs, value) = m.entries_mut().next()?;
    *value = scaled(&-Rational::one(), value);
    Some(inputs.clone())
}
