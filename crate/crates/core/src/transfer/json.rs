//! JSON encodings of complexes, algebras and transferred structures.
//!
//! Rationals are strings `"num/den"` (a bare integer is also accepted on
//! input). Output has sorted keys and terms in basis order, so it is
//! byte-identical across runs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{format_rational, parse_rational};

use super::algebra::DgAs2Algebra;
use super::complex::ChainComplex;
use super::homotopy::TransferredStructure;
use super::tensor::{MultiLinear, SparseVec};

type Terms = Vec<(String, String)>;
type Degrees = BTreeMap<String, Vec<String>>;
type Entries = Vec<(String, String, String)>;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub degrees: BTreeMap<String, Vec<String>>,
    pub d: Vec<(String, String, String)>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub degrees: BTreeMap<String, Vec<String>>,
    pub d: Vec<(String, String, String)>,
    pub star: Vec<(String, String, Terms)>,
    pub bullet: Vec<(String, String, Terms)>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureJson {
    pub complex: ComplexJson,
    pub operations: BTreeMap<String, Vec<(Vec<String>, Terms)>>,
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Pretty JSON with sorted object keys.
fn render<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("plain data serializes");
    let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
    s.push('\n');
    s
}

fn field_rational(field: &str, s: &str) -> Result<crate::linalg::Rational> {
    parse_rational(s).map_err(|_| Error::Parse(format!("{field}: invalid rational `{s}`")))
}

fn complex_from_parts(degrees: &BTreeMap<String, Vec<String>>, d: &[(String, String, String)]) -> Result<ChainComplex> {
    let mut basis = BTreeMap::new();
    for (k, names) in degrees {
        let deg: i32 = k
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("degrees: key `{k}` is not an integer")))?;
        basis.insert(deg, names.clone());
    }
    let mut entries = Vec::with_capacity(d.len());
    for (n, (from, to, c)) in d.iter().enumerate() {
        entries.push((from.clone(), to.clone(), field_rational(&format!("d[{n}]"), c)?));
    }
    ChainComplex::from_entries(&basis, &entries)
}

fn complex_parts(c: &ChainComplex) -> (Degrees, Entries) {
    let degrees = c
        .graded_basis()
        .into_iter()
        .map(|(d, names)| (d.to_string(), names))
        .collect();
    let d = c
        .differential_entries()
        .into_iter()
        .map(|(f, t, q)| (c.name(f).to_string(), c.name(t).to_string(), format_rational(&q)))
        .collect();
    (degrees, d)
}

fn terms_out(c: &ChainComplex, v: &SparseVec) -> Terms {
    v.iter().map(|(&k, q)| (c.name(k).to_string(), format_rational(q))).collect()
}

fn terms_in(c: &ChainComplex, field: &str, terms: &Terms) -> Result<SparseVec> {
    let mut v = SparseVec::new();
    for (name, q) in terms {
        let k = c.require(name)?;
        if v.insert(k, field_rational(field, q)?).is_some() {
            return Err(Error::Contract(format!("{field}: `{name}` appears twice")));
        }
    }
    Ok(v)
}

pub fn complex_from_json(text: &str) -> Result<ChainComplex> {
    let j: ComplexJson = parse_json(text)?;
    complex_from_parts(&j.degrees, &j.d)
}

pub fn complex_to_json(c: &ChainComplex) -> String {
    let (degrees, d) = complex_parts(c);
    render(&ComplexJson { degrees, d })
}

fn bilinear_in(c: &ChainComplex, field: &str, rows: &[(String, String, Terms)]) -> Result<MultiLinear> {
    let mut m = MultiLinear::zero(2, 0);
    for (n, (x, y, terms)) in rows.iter().enumerate() {
        let inputs = vec![c.require(x)?, c.require(y)?];
        if m.get(&inputs).is_some() {
            return Err(Error::Contract(format!("{field}: ({x}, {y}) given twice")));
        }
        m.set(inputs, terms_in(c, &format!("{field}[{n}]"), terms)?)?;
    }
    Ok(m)
}

fn bilinear_out(c: &ChainComplex, m: &MultiLinear) -> Vec<(String, String, Terms)> {
    m.entries()
        .map(|(inputs, v)| (c.name(inputs[0]).to_string(), c.name(inputs[1]).to_string(), terms_out(c, v)))
        .collect()
}

pub fn algebra_from_json(text: &str) -> Result<DgAs2Algebra> {
    let j: AlgebraJson = parse_json(text)?;
    let c = complex_from_parts(&j.degrees, &j.d)?;
    let star = bilinear_in(&c, "star", &j.star)?;
    let bullet = bilinear_in(&c, "bullet", &j.bullet)?;
    DgAs2Algebra::new(c, star, bullet)
}

pub fn algebra_to_json(a: &DgAs2Algebra) -> String {
    let c = a.complex();
    let (degrees, d) = complex_parts(c);
    render(&AlgebraJson {
        degrees,
        d,
        star: bilinear_out(c, a.star()),
        bullet: bilinear_out(c, a.bullet()),
    })
}

fn parse_key(k: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("operations: key `{k}` is not of the form \"(i,j)\""));
    let inner = k.strip_prefix('(').and_then(|s| s.strip_suffix(')')).ok_or_else(bad)?;
    let (i, j) = inner.split_once(',').ok_or_else(bad)?;
    Ok((i.trim().parse().map_err(|_| bad())?, j.trim().parse().map_err(|_| bad())?))
}

pub fn structure_from_json(text: &str) -> Result<TransferredStructure> {
    let j: StructureJson = parse_json(text)?;
    let c = complex_from_parts(&j.complex.degrees, &j.complex.d)?;
    let mut ops = BTreeMap::new();
    for (key, rows) in &j.operations {
        let (i, jj) = parse_key(key)?;
        if i + jj == 0 {
            return Err(Error::Contract("operation (0,0) is not allowed".into()));
        }
        let mut m = MultiLinear::zero(i + jj + 1, (i + jj) as i32 - 1);
        for (n, (inputs, terms)) in rows.iter().enumerate() {
            let field = format!("operations[{key}][{n}]");
            if inputs.len() != i + jj + 1 {
                return Err(Error::Contract(format!("{field}: expected {} inputs", i + jj + 1)));
            }
            let idx = inputs.iter().map(|x| c.require(x)).collect::<Result<Vec<_>>>()?;
            if m.get(&idx).is_some() {
                return Err(Error::Contract(format!("{field}: input tuple given twice")));
            }
            m.set(idx, terms_in(&c, &field, terms)?)?;
        }
        if ops.insert((i, jj), m).is_some() {
            return Err(Error::Contract(format!("operations: ({i},{jj}) given twice")));
        }
    }
    TransferredStructure::new(c, ops)
}

pub fn structure_to_json(t: &TransferredStructure) -> String {
    let c = t.complex();
    let (degrees, d) = complex_parts(c);
    let operations = t
        .operations()
        .iter()
        .map(|((i, j), m)| {
            let rows = m
                .entries()
                .map(|(inputs, v)| (inputs.iter().map(|&k| c.name(k).to_string()).collect(), terms_out(c, v)))
                .collect();
            (format!("({i},{j})"), rows)
        })
        .collect();
    render(&StructureJson {
        complex: ComplexJson { degrees, d },
        operations,
    })
}
