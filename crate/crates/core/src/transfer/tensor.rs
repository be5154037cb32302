use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Rational;

/// Sparse vector: basis index to nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Rational>;

pub fn add_scaled(acc: &mut SparseVec, c: &Rational, v: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (&k, x) in v {
        let e = acc.entry(k).or_insert_with(Rational::zero);
        *e += c * x;
        if e.is_zero() {
            acc.remove(&k);
        }
    }
}

pub fn scaled(c: &Rational, v: &SparseVec) -> SparseVec {
    let mut out = SparseVec::new();
    add_scaled(&mut out, c, v);
    out
}

/// Multilinear map V^⊗n → V of a fixed degree, stored on basis tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiLinear {
    arity: usize,
    degree: i32,
    entries: BTreeMap<Vec<usize>, SparseVec>,
}

impl MultiLinear {
    pub fn zero(arity: usize, degree: i32) -> Self {
        MultiLinear {
            arity,
            degree,
            entries: BTreeMap::new(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Set the value on a basis tuple; zero values are not stored.
    pub fn set(&mut self, inputs: Vec<usize>, value: SparseVec) -> Result<()> {
        if inputs.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: inputs.len(),
            });
        }
        let value: SparseVec = value.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if value.is_empty() {
            self.entries.remove(&inputs);
        } else {
            self.entries.insert(inputs, value);
        }
        Ok(())
    }

    pub fn get(&self, inputs: &[usize]) -> Option<&SparseVec> {
        self.entries.get(inputs)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &SparseVec)> {
        self.entries.iter()
    }

    pub fn entries_mut(&mut self) -> impl Iterator<Item = (&Vec<usize>, &mut SparseVec)> {
        self.entries.iter_mut()
    }

    /// Value on arbitrary vectors, by plain multilinear expansion (no signs).
    pub fn eval(&self, args: &[SparseVec]) -> SparseVec {
        assert_eq!(args.len(), self.arity, "arity mismatch in eval");
        let mut out = SparseVec::new();
        let mut idx = Vec::with_capacity(self.arity);
        self.expand(args, &mut idx, &Rational::one(), &mut out);
        out
    }

    fn expand(&self, args: &[SparseVec], idx: &mut Vec<usize>, c: &Rational, out: &mut SparseVec) {
        if idx.len() == args.len() {
            if let Some(v) = self.entries.get(idx.as_slice()) {
                add_scaled(out, c, v);
            }
            return;
        }
        for (&k, x) in &args[idx.len()] {
            idx.push(k);
            self.expand(args, idx, &(c * x), out);
            idx.pop();
        }
    }
}
