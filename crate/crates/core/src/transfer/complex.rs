use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, Rational};

use super::tensor::{add_scaled, SparseVec};

/// Finite-dimensional graded vector space over ℚ with a differential of
/// degree −1. Basis elements are ordered by degree, then by the order given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    names: Vec<String>,
    degrees: Vec<i32>,
    index: HashMap<String, usize>,
    /// column k holds d(e_k)
    d: RatMatrix,
}

impl ChainComplex {
    pub fn new(basis: &BTreeMap<i32, Vec<String>>, d: RatMatrix) -> Result<Self> {
        let mut names = Vec::new();
        let mut degrees = Vec::new();
        let mut index = HashMap::new();
        for (&deg, ns) in basis {
            for n in ns {
                if n.is_empty() {
                    return Err(Error::Contract("empty basis name".into()));
                }
                if index.insert(n.clone(), names.len()).is_some() {
                    return Err(Error::Contract(format!("duplicate basis name `{n}`")));
                }
                names.push(n.clone());
                degrees.push(deg);
            }
        }
        let dim = names.len();
        if d.rows() != dim || d.cols() != dim {
            return Err(Error::Contract(format!(
                "differential is {}x{}, expected {dim}x{dim}",
                d.rows(),
                d.cols()
            )));
        }
        for col in 0..dim {
            for row in 0..dim {
                if !d[(row, col)].is_zero() && degrees[row] != degrees[col] - 1 {
                    return Err(Error::Contract(format!(
                        "d({}) has a component on `{}`, which is not one degree lower",
                        names[col], names[row]
                    )));
                }
            }
        }
        if !(&d * &d).is_zero() {
            return Err(Error::Contract("differential does not square to zero".into()));
        }
        Ok(ChainComplex {
            names,
            degrees,
            index,
            d,
        })
    }

    /// `entries` lists (from, to, c): d(from) has coefficient c on `to`.
    pub fn from_entries(basis: &BTreeMap<i32, Vec<String>>, entries: &[(String, String, Rational)]) -> Result<Self> {
        let zero = Self::new(basis, RatMatrix::zeros(count(basis), count(basis)))?;
        let mut d = RatMatrix::zeros(zero.dim(), zero.dim());
        let mut seen = std::collections::HashSet::new();
        for (from, to, c) in entries {
            let f = zero.require(from)?;
            let t = zero.require(to)?;
            if !seen.insert((f, t)) {
                return Err(Error::Contract(format!("duplicate differential entry {from} -> {to}")));
            }
            d[(t, f)] = c.clone();
        }
        Self::new(basis, d)
    }

    pub fn with_zero_differential(basis: &BTreeMap<i32, Vec<String>>) -> Result<Self> {
        Self::new(basis, RatMatrix::zeros(count(basis), count(basis)))
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, k: usize) -> &str {
        &self.names[k]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn degree(&self, k: usize) -> i32 {
        self.degrees[k]
    }

    pub fn degrees(&self) -> &[i32] {
        &self.degrees
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::Contract(format!("unknown basis element `{name}`")))
    }

    pub fn d(&self) -> &RatMatrix {
        &self.d
    }

    pub fn in_degree(&self, n: i32) -> Vec<usize> {
        (0..self.dim()).filter(|&k| self.degrees[k] == n).collect()
    }

    pub fn graded_basis(&self) -> BTreeMap<i32, Vec<String>> {
        let mut out: BTreeMap<i32, Vec<String>> = BTreeMap::new();
        for (n, &deg) in self.names.iter().zip(&self.degrees) {
            out.entry(deg).or_default().push(n.clone());
        }
        out
    }

    /// Nonzero entries of d as (from, to, coefficient), in basis order.
    pub fn differential_entries(&self) -> Vec<(usize, usize, Rational)> {
        let mut out = Vec::new();
        for f in 0..self.dim() {
            for t in 0..self.dim() {
                if !self.d[(t, f)].is_zero() {
                    out.push((f, t, self.d[(t, f)].clone()));
                }
            }
        }
        out
    }

    pub fn apply_d(&self, v: &SparseVec) -> SparseVec {
        apply_matrix(&self.d, v)
    }

    /// d(e_k)
    pub fn d_basis(&self, k: usize) -> SparseVec {
        let mut out = SparseVec::new();
        for t in 0..self.dim() {
            if !self.d[(t, k)].is_zero() {
                out.insert(t, self.d[(t, k)].clone());
            }
        }
        out
    }

    /// Degree of a homogeneous vector; `None` for zero or mixed degrees.
    pub fn degree_of(&self, v: &SparseVec) -> Option<i32> {
        let mut degs = v.keys().map(|&k| self.degrees[k]);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Same graded basis and differential.
    pub fn same_as(&self, other: &ChainComplex) -> bool {
        self.names == other.names && self.degrees == other.degrees && self.d == other.d
    }
}

fn count(basis: &BTreeMap<i32, Vec<String>>) -> usize {
    basis.values().map(Vec::len).sum()
}

pub fn apply_matrix(m: &RatMatrix, v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    for (&k, c) in v {
        let mut col = SparseVec::new();
        for r in 0..m.rows() {
            if !m[(r, k)].is_zero() {
                col.insert(r, m[(r, k)].clone());
            }
        }
        add_scaled(&mut out, c, &col);
    }
    out
}

pub fn unit(k: usize) -> SparseVec {
    let mut v = SparseVec::new();
    v.insert(k, Rational::one());
    v
}
