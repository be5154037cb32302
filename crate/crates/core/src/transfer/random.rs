//! Seeded generators for test data.
//!
//! Algebras are truncated monomial algebras: the basis is a factor-closed set
//! of words in graded letters (sometimes including the empty word `1`), `star` is concatenation (zero when the word
//! falls outside the set), d is a random square-zero derivation found by a
//! linear solve of the Leibniz constraints, and
//! `x • y = β (x * y) + γ (x * a * y)` for a random degree-0 cycle a.
//! Any such `•` is associative and compatible with `*`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{int, rat, RatMatrix, RatVec, Rational};

use super::algebra::{check_dg_as2, DgAs2Algebra};
use super::complex::{unit, ChainComplex};
use super::tensor::{add_scaled, MultiLinear, SparseVec};

const MAX_TOTAL: usize = 8;
const ATTEMPTS: usize = 400;

fn check_dims(dims: &BTreeMap<i32, usize>) -> Result<usize> {
    let total: usize = dims.values().sum();
    if total > MAX_TOTAL {
        return Err(Error::Contract(format!("total dimension {total} exceeds {MAX_TOTAL}")));
    }
    Ok(total)
}

fn small_invertible(rng: &mut ChaCha8Rng, n: usize) -> RatMatrix {
    loop {
        let mut m = RatMatrix::identity(n);
        for r in 0..n {
            for c in 0..n {
                if r != c && rng.gen_bool(0.4) {
                    m[(r, c)] = int(rng.gen_range(-2..=2));
                }
            }
        }
        if m.inverse().is_some() {
            return m;
        }
    }
}

/// Random complex with the given dimensions per degree; basis `e0, e1, ...`.
///
/// A random split complex (pairs c ↦ b) conjugated by a random change of
/// basis in each degree.
pub fn random_complex(seed: u64, dims: &BTreeMap<i32, usize>) -> Result<ChainComplex> {
    let total: usize = dims.values().sum();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut basis: BTreeMap<i32, Vec<String>> = BTreeMap::new();
    let mut next = 0;
    for (&deg, &n) in dims {
        if n > 0 {
            basis.insert(deg, (next..next + n).map(|k| format!("e{k}")).collect());
            next += n;
        }
    }
    let probe = ChainComplex::with_zero_differential(&basis)?;
    let mut split = RatMatrix::zeros(total, total);
    // free[k]: unused basis indices in degree k, neither source nor target yet
    let mut free: BTreeMap<i32, Vec<usize>> = dims.keys().map(|&d| (d, probe.in_degree(d))).collect();
    for &deg in dims.keys().rev() {
        while let (Some(src), Some(tgt)) = (free.get(&deg), free.get(&(deg - 1))) {
            if src.is_empty() || tgt.is_empty() || rng.gen_bool(0.3) {
                break;
            }
            let c = src[0];
            let b = tgt[tgt.len() - 1];
            split[(b, c)] = int(1);
            free.get_mut(&deg).unwrap().remove(0);
            free.get_mut(&(deg - 1)).unwrap().pop();
        }
    }
    let mut change = RatMatrix::zeros(total, total);
    for &deg in dims.keys() {
        let idx = probe.in_degree(deg);
        let block = small_invertible(&mut rng, idx.len());
        for (r, &gr) in idx.iter().enumerate() {
            for (c, &gc) in idx.iter().enumerate() {
                change[(gr, gc)] = block[(r, c)].clone();
            }
        }
    }
    let inv = change.inverse().expect("blockwise invertible");
    ChainComplex::new(&basis, &(&change * &split) * &inv)
}

/// Factor-closed word set matching `dims` exactly, or `None`. With `unital`
/// the empty word takes one slot in degree 0.
fn random_words(rng: &mut ChaCha8Rng, dims: &BTreeMap<i32, usize>, unital: bool) -> Option<Vec<(String, i32)>> {
    let mut remaining = dims.clone();
    if unital {
        *remaining.get_mut(&0)? -= 1;
    }
    let mut letters: Vec<(char, i32)> = Vec::new();
    let mut next = b'a';
    for (&deg, n) in remaining.iter_mut() {
        let count = if *n == 0 { 0 } else { rng.gen_range(1..=*n) };
        for _ in 0..count {
            letters.push((next as char, deg));
            next += 1;
        }
        *n -= count;
    }
    let degree_of = |w: &str| -> i32 {
        w.chars()
            .map(|ch| letters.iter().find(|(l, _)| *l == ch).unwrap().1)
            .sum()
    };
    let mut words: BTreeSet<String> = letters.iter().map(|(l, _)| l.to_string()).collect();
    if unital {
        words.insert(String::new());
    }
    loop {
        let mut candidates = Vec::new();
        for w in &words {
            if w.len() >= 3 {
                continue;
            }
            for (l, _) in &letters {
                for cand in [format!("{w}{l}"), format!("{l}{w}")] {
                    if words.contains(&cand) || candidates.contains(&cand) {
                        continue;
                    }
                    let factors_present = (1..cand.len()).all(|len| {
                        (0..=cand.len() - len).all(|s| words.contains(&cand[s..s + len]))
                    });
                    let room = remaining.get(&degree_of(&cand)).is_some_and(|&r| r > 0);
                    if factors_present && room {
                        candidates.push(cand);
                    }
                }
            }
        }
        let Some(pick) = candidates.choose(rng).cloned() else { break };
        *remaining.get_mut(&degree_of(&pick)).unwrap() -= 1;
        words.insert(pick);
    }
    if remaining.values().any(|&r| r > 0) {
        return None;
    }
    let mut out: Vec<(String, i32)> = words.into_iter().map(|w| (w.clone(), degree_of(&w))).collect();
    out.sort_by(|a, b| (a.1, a.0.len(), &a.0).cmp(&(b.1, b.0.len(), &b.0)));
    Some(out)
}

fn concatenation(words: &[String]) -> MultiLinear {
    let mut star = MultiLinear::zero(2, 0);
    for (x, u) in words.iter().enumerate() {
        for (y, w) in words.iter().enumerate() {
            let uw = format!("{u}{w}");
            if let Some(z) = words.iter().position(|n| *n == uw) {
                star.set(vec![x, y], unit(z)).expect("arity 2");
            }
        }
    }
    star
}

/// Square-zero degree −1 derivations of `star`: a random element of the
/// solution space of the Leibniz constraints, retried until d² = 0.
fn random_derivation(rng: &mut ChaCha8Rng, degrees: &[i32], star: &MultiLinear) -> RatMatrix {
    let n = degrees.len();
    let unknowns: Vec<(usize, usize)> = (0..n)
        .flat_map(|from| (0..n).map(move |to| (from, to)))
        .filter(|&(from, to)| degrees[to] == degrees[from] - 1)
        .collect();
    let zero = RatMatrix::zeros(n, n);
    if unknowns.is_empty() {
        return zero;
    }
    // d(x*y) − dx*y − (−1)^|x| x*dy, coefficient of z, for each unknown
    let mut rows: Vec<RatVec> = Vec::new();
    for (x, deg_x) in degrees.iter().enumerate() {
        for y in 0..n {
            let sx = if deg_x.rem_euclid(2) == 0 { int(1) } else { int(-1) };
            let mut per_unknown: Vec<SparseVec> = Vec::with_capacity(unknowns.len());
            let xy = star.eval(&[unit(x), unit(y)]);
            for &(from, to) in &unknowns {
                let mut v = SparseVec::new();
                if let Some(c) = xy.get(&from) {
                    add_scaled(&mut v, c, &unit(to));
                }
                if from == x {
                    add_scaled(&mut v, &int(-1), &star.eval(&[unit(to), unit(y)]));
                }
                if from == y {
                    add_scaled(&mut v, &-sx.clone(), &star.eval(&[unit(x), unit(to)]));
                }
                per_unknown.push(v);
            }
            for z in 0..n {
                let row: RatVec = per_unknown
                    .iter()
                    .map(|v| v.get(&z).cloned().unwrap_or_else(Rational::zero))
                    .collect();
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let solutions = if rows.is_empty() {
        (0..unknowns.len())
            .map(|k| (0..unknowns.len()).map(|l| int(i64::from(k == l))).collect())
            .collect()
    } else {
        RatMatrix::from_rows(unknowns.len(), &rows).nullspace_basis()
    };
    if solutions.is_empty() {
        return zero;
    }
    for _ in 0..40 {
        let mut coeffs = vec![Rational::zero(); unknowns.len()];
        for s in &solutions {
            let c = int(rng.gen_range(-2..=2));
            for (k, x) in s.iter().enumerate() {
                coeffs[k] += &c * x;
            }
        }
        let mut d = RatMatrix::zeros(n, n);
        for (k, &(from, to)) in unknowns.iter().enumerate() {
            d[(to, from)] = coeffs[k].clone();
        }
        if !d.is_zero() && (&d * &d).is_zero() {
            return d;
        }
    }
    zero
}

/// A random dg As²-algebra with the given dimension in each degree
/// (total at most 8). Always satisfies [`check_dg_as2`].
pub fn random_dg_as2(seed: u64, dims: &BTreeMap<i32, usize>) -> Result<DgAs2Algebra> {
    let total = check_dims(dims)?;
    let dims: BTreeMap<i32, usize> = dims.iter().filter(|(_, &n)| n > 0).map(|(&d, &n)| (d, n)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if total == 0 {
        let c = ChainComplex::with_zero_differential(&BTreeMap::new())?;
        return Ok(DgAs2Algebra::trivial(c));
    }
    for _ in 0..ATTEMPTS {
        let unital = dims.get(&0).is_some_and(|&n| n > 0) && rng.gen_bool(0.5);
        let Some(words) = random_words(&mut rng, &dims, unital) else { continue };
        let raw: Vec<String> = words.iter().map(|(w, _)| w.clone()).collect();
        let degrees: Vec<i32> = words.iter().map(|(_, d)| *d).collect();
        let mut basis: BTreeMap<i32, Vec<String>> = BTreeMap::new();
        for (w, d) in &words {
            let name = if w.is_empty() { "1".to_string() } else { w.clone() };
            basis.entry(*d).or_default().push(name);
        }
        let star = concatenation(&raw);
        let d = random_derivation(&mut rng, &degrees, &star);
        let complex = ChainComplex::new(&basis, d)?;
        let bullet = random_bullet(&mut rng, &complex, &star);
        let alg = DgAs2Algebra::new(complex, star, bullet)?;
        if check_dg_as2(&alg).is_ok() {
            return Ok(alg);
        }
    }
    Err(Error::Contract(format!("no algebra found for dims {dims:?}")))
}

fn random_bullet(rng: &mut ChaCha8Rng, complex: &ChainComplex, star: &MultiLinear) -> MultiLinear {
    let n = complex.dim();
    let zero_deg = complex.in_degree(0);
    let mut a = SparseVec::new();
    if !zero_deg.is_empty() {
        let block = RatMatrix::from_rows(
            zero_deg.len(),
            &(0..n)
                .map(|r| zero_deg.iter().map(|&s| complex.d()[(r, s)].clone()).collect())
                .collect::<Vec<RatVec>>(),
        );
        for z in block.nullspace_basis() {
            let c = int(rng.gen_range(-2..=2));
            for (k, &s) in zero_deg.iter().enumerate() {
                add_scaled(&mut a, &(&c * &z[k]), &unit(s));
            }
        }
    }
    let beta = [int(0), int(1), int(-1), rat(1, 2)].choose(rng).unwrap().clone();
    let gamma = [int(1), int(-1), int(2), rat(1, 3)].choose(rng).unwrap().clone();
    let mut bullet = MultiLinear::zero(2, 0);
    for x in 0..n {
        for y in 0..n {
            let mut v = SparseVec::new();
            add_scaled(&mut v, &beta, &star.eval(&[unit(x), unit(y)]));
            let xa = star.eval(&[unit(x), a.clone()]);
            add_scaled(&mut v, &gamma, &star.eval(&[xa, unit(y)]));
            bullet.set(vec![x, y], v).expect("arity 2");
        }
    }
    bullet
}
