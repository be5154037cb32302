use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{RatMatrix, RatVec, Rational};

use super::complex::ChainComplex;

/// Deformation retract (incl, proj, h) of `big` onto `small`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationRetract {
    big: ChainComplex,
    small: ChainComplex,
    /// dim big × dim small
    incl: RatMatrix,
    /// dim small × dim big
    proj: RatMatrix,
    /// dim big × dim big, degree +1
    h: RatMatrix,
}

impl DeformationRetract {
    /// Validates every retract identity and side condition.
    pub fn new(big: ChainComplex, small: ChainComplex, incl: RatMatrix, proj: RatMatrix, h: RatMatrix) -> Result<Self> {
        let (a, v) = (big.dim(), small.dim());
        let shapes = [
            ("incl", &incl, a, v),
            ("proj", &proj, v, a),
            ("h", &h, a, a),
        ];
        for (name, m, r, c) in shapes {
            if m.rows() != r || m.cols() != c {
                return Err(Error::Contract(format!("{name} is {}x{}, expected {r}x{c}", m.rows(), m.cols())));
            }
        }
        let r = DeformationRetract {
            big,
            small,
            incl,
            proj,
            h,
        };
        if let Some(why) = r.violation() {
            return Err(Error::Contract(why));
        }
        Ok(r)
    }

    /// i = p = id, h = 0.
    pub fn identity(a: &ChainComplex) -> Self {
        let n = a.dim();
        DeformationRetract {
            big: a.clone(),
            small: a.clone(),
            incl: RatMatrix::identity(n),
            proj: RatMatrix::identity(n),
            h: RatMatrix::zeros(n, n),
        }
    }

    pub fn big(&self) -> &ChainComplex {
        &self.big
    }

    pub fn small(&self) -> &ChainComplex {
        &self.small
    }

    pub fn incl(&self) -> &RatMatrix {
        &self.incl
    }

    pub fn proj(&self) -> &RatMatrix {
        &self.proj
    }

    pub fn h(&self) -> &RatMatrix {
        &self.h
    }

    /// The first identity that fails, if any.
    pub fn violation(&self) -> Option<String> {
        let (a, v) = (&self.big, &self.small);
        if let Some(w) = degree_violation(&self.incl, a, v, 0) {
            return Some(format!("incl is not of degree 0: {w}"));
        }
        if let Some(w) = degree_violation(&self.proj, v, a, 0) {
            return Some(format!("proj is not of degree 0: {w}"));
        }
        if let Some(w) = degree_violation(&self.h, a, a, 1) {
            return Some(format!("h is not of degree +1: {w}"));
        }
        let (i, p, h) = (&self.incl, &self.proj, &self.h);
        let (da, dv) = (a.d(), v.d());
        if p * i != RatMatrix::identity(v.dim()) {
            return Some("proj∘incl is not the identity".into());
        }
        if da * i != i * dv {
            return Some("incl is not a chain map".into());
        }
        if dv * p != p * da {
            return Some("proj is not a chain map".into());
        }
        let lhs = &RatMatrix::identity(a.dim()) - &(i * p);
        let rhs = &(da * h) + &(h * da);
        if lhs != rhs {
            return Some("id − incl∘proj ≠ d∘h + h∘d".into());
        }
        if !(h * h).is_zero() {
            return Some("h∘h ≠ 0".into());
        }
        if !(h * i).is_zero() {
            return Some("h∘incl ≠ 0".into());
        }
        if !(p * h).is_zero() {
            return Some("proj∘h ≠ 0".into());
        }
        None
    }
}

fn degree_violation(m: &RatMatrix, target: &ChainComplex, source: &ChainComplex, shift: i32) -> Option<String> {
    for c in 0..m.cols() {
        for r in 0..m.rows() {
            if !m[(r, c)].is_zero() && target.degree(r) != source.degree(c) + shift {
                return Some(format!("{} -> {}", source.name(c), target.name(r)));
            }
        }
    }
    None
}

/// Retract onto a complex with zero differential, one basis element
/// `H{n}_{k}` per homology class.
///
/// In each degree the basis of A is split as H ⊕ B ⊕ C: C spans the pivot
/// columns of d out of that degree, B = d(C) from the degree above, and H
/// completes B to a basis of the cycles. Then h(d c) = c and h vanishes on H
/// and C, which gives the side conditions for free.
pub fn build_retract(a: &ChainComplex) -> DeformationRetract {
    let n = a.dim();
    let d = a.d();
    let degrees: Vec<i32> = {
        let mut v: Vec<i32> = a.degrees().to_vec();
        v.dedup();
        v
    };
    // C_k: basis vectors at the pivot columns of d out of degree k
    let mut chains: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
    for &deg in &degrees {
        let src = a.in_degree(deg);
        let tgt = a.in_degree(deg - 1);
        if tgt.is_empty() {
            chains.insert(deg, Vec::new());
            continue;
        }
        let block = RatMatrix::from_rows(
            src.len(),
            &tgt.iter().map(|&t| src.iter().map(|&s| d[(t, s)].clone()).collect()).collect::<Vec<RatVec>>(),
        );
        let (_, pivots) = block.rref();
        chains.insert(deg, pivots.iter().map(|&p| src[p]).collect());
    }
    let mut basis: BTreeMap<i32, Vec<String>> = BTreeMap::new();
    // homology representatives; these become the columns of incl
    let mut incl_cols: Vec<RatVec> = Vec::new();
    let mut h = RatMatrix::zeros(n, n);
    // change of basis rows for p: coordinates in the H ⊕ B ⊕ C basis
    let mut proj_rows: Vec<RatVec> = Vec::new();
    for &deg in &degrees {
        let src = a.in_degree(deg);
        let unit_vec = |k: usize| {
            let mut v = vec![Rational::zero(); n];
            v[k] = Rational::one();
            v
        };
        let boundaries: Vec<(usize, RatVec)> = chains
            .get(&(deg + 1))
            .map(|cs| cs.iter().map(|&c| (c, a.d().column(c))).collect())
            .unwrap_or_default();
        let own_chains: Vec<RatVec> = chains[&deg].iter().map(|&c| unit_vec(c)).collect();
        // cycles in this degree, as global vectors
        let dsrc = RatMatrix::from_rows(
            src.len(),
            &(0..n).map(|r| src.iter().map(|&s| d[(r, s)].clone()).collect()).collect::<Vec<RatVec>>(),
        );
        let cycles: Vec<RatVec> = dsrc
            .nullspace_basis()
            .into_iter()
            .map(|z| {
                let mut v = vec![Rational::zero(); n];
                for (k, &s) in src.iter().enumerate() {
                    v[s] = z[k].clone();
                }
                v
            })
            .collect();
        let mut span: Vec<RatVec> = boundaries.iter().map(|(_, b)| b.clone()).collect();
        let mut homology: Vec<RatVec> = Vec::new();
        for z in cycles {
            let mut trial = span.clone();
            trial.push(z.clone());
            if crate::linalg::span_rank(n, &trial) > span.len() {
                span.push(z.clone());
                homology.push(z);
            }
        }
        // basis of A_deg: H, then B, then C; invert to get coordinates
        let mut cols: Vec<RatVec> = homology.clone();
        cols.extend(boundaries.iter().map(|(_, b)| b.clone()));
        cols.extend(own_chains);
        debug_assert_eq!(cols.len(), src.len());
        let local = RatMatrix::from_rows(
            cols.len(),
            &src.iter().map(|&s| cols.iter().map(|c| c[s].clone()).collect()).collect::<Vec<RatVec>>(),
        );
        let inv = local.inverse().expect("H ⊕ B ⊕ C is a basis");
        for k in 0..homology.len() {
            let mut row = vec![Rational::zero(); n];
            for (l, &s) in src.iter().enumerate() {
                row[s] = inv[(k, l)].clone();
            }
            proj_rows.push(row);
        }
        // h(b_k) = c_k: h = Σ_k c_k ⊗ (B-coordinate k)
        for (k, (c, _)) in boundaries.iter().enumerate() {
            for (l, &s) in src.iter().enumerate() {
                h[(*c, s)] = inv[(homology.len() + k, l)].clone();
            }
        }
        let names: Vec<String> = (0..homology.len()).map(|k| format!("H{deg}_{k}")).collect();
        if !names.is_empty() {
            basis.insert(deg, names);
        }
        incl_cols.extend(homology);
    }
    let v = ChainComplex::with_zero_differential(&basis).expect("fresh names");
    let mut incl = RatMatrix::zeros(n, v.dim());
    for (k, col) in incl_cols.iter().enumerate() {
        for r in 0..n {
            incl[(r, k)] = col[r].clone();
        }
    }
    let proj = RatMatrix::from_rows(n, &proj_rows);
    let r = DeformationRetract {
        big: a.clone(),
        small: v,
        incl,
        proj,
        h,
    };
    debug_assert!(r.violation().is_none(), "{:?}", r.violation());
    r
}
