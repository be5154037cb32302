use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::Rational;

use super::complex::{unit, ChainComplex};
use super::tensor::{add_scaled, MultiLinear, SparseVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Product {
    Star,
    Bullet,
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Product::Star => "star",
            Product::Bullet => "bullet",
        })
    }
}

/// A chain complex with two degree-0 products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgAs2Algebra {
    complex: ChainComplex,
    star: MultiLinear,
    bullet: MultiLinear,
}

impl DgAs2Algebra {
    /// Checks shapes and degrees only; the algebra axioms are left to
    /// [`check_dg_as2`].
    pub fn new(complex: ChainComplex, star: MultiLinear, bullet: MultiLinear) -> Result<Self> {
        for (name, t) in [("star", &star), ("bullet", &bullet)] {
            if t.arity() != 2 || t.degree() != 0 {
                return Err(Error::Contract(format!("{name} must be bilinear of degree 0")));
            }
            for (inputs, out) in t.entries() {
                if inputs.iter().chain(out.keys()).any(|&k| k >= complex.dim()) {
                    return Err(Error::Contract(format!("{name} refers to a basis index out of range")));
                }
                let deg = complex.degree(inputs[0]) + complex.degree(inputs[1]);
                if out.keys().any(|&k| complex.degree(k) != deg) {
                    return Err(Error::Contract(format!(
                        "{name}({}, {}) is not of degree {deg}",
                        complex.name(inputs[0]),
                        complex.name(inputs[1])
                    )));
                }
            }
        }
        Ok(DgAs2Algebra { complex, star, bullet })
    }

    /// Both products zero.
    pub fn trivial(complex: ChainComplex) -> Self {
        DgAs2Algebra {
            complex,
            star: MultiLinear::zero(2, 0),
            bullet: MultiLinear::zero(2, 0),
        }
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn star(&self) -> &MultiLinear {
        &self.star
    }

    pub fn bullet(&self) -> &MultiLinear {
        &self.bullet
    }

    pub fn product(&self, which: Product) -> &MultiLinear {
        match which {
            Product::Star => &self.star,
            Product::Bullet => &self.bullet,
        }
    }

    /// The same complex with the two products exchanged.
    pub fn swapped(&self) -> Self {
        DgAs2Algebra {
            complex: self.complex.clone(),
            star: self.bullet.clone(),
            bullet: self.star.clone(),
        }
    }

    pub fn mul(&self, which: Product, x: &SparseVec, y: &SparseVec) -> SparseVec {
        self.product(which).eval(&[x.clone(), y.clone()])
    }

    /// λ·star + μ·bullet as a single bilinear map.
    pub fn blend(&self, lambda: &Rational, mu: &Rational) -> MultiLinear {
        let mut out = MultiLinear::zero(2, 0);
        let n = self.complex.dim();
        for x in 0..n {
            for y in 0..n {
                let mut v = SparseVec::new();
                if let Some(s) = self.star.get(&[x, y]) {
                    add_scaled(&mut v, lambda, s);
                }
                if let Some(b) = self.bullet.get(&[x, y]) {
                    add_scaled(&mut v, mu, b);
                }
                out.set(vec![x, y], v).expect("arity 2");
            }
        }
        out
    }
}

/// First axiom that fails, with the basis elements involved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DgAs2Failure {
    Leibniz { product: Product, x: String, y: String },
    Associativity { product: Product, x: String, y: String, z: String },
    Compatibility { x: String, y: String, z: String },
}

impl fmt::Display for DgAs2Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DgAs2Failure::Leibniz { product, x, y } => {
                write!(f, "Leibniz rule fails for {product} on ({x}, {y})")
            }
            DgAs2Failure::Associativity { product, x, y, z } => {
                write!(f, "{product} is not associative on ({x}, {y}, {z})")
            }
            DgAs2Failure::Compatibility { x, y, z } => {
                write!(f, "compatibility relation fails on ({x}, {y}, {z})")
            }
        }
    }
}

/// Associativity of a bilinear map on all basis triples; first failing triple.
pub fn associativity_witness(n: usize, m: &MultiLinear) -> Option<(usize, usize, usize)> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let left = m.eval(&[m.eval(&[unit(x), unit(y)]), unit(z)]);
                let right = m.eval(&[unit(x), m.eval(&[unit(y), unit(z)])]);
                if left != right {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

pub fn check_dg_as2(a: &DgAs2Algebra) -> std::result::Result<(), DgAs2Failure> {
    let c = &a.complex;
    let n = c.dim();
    let name = |k: usize| c.name(k).to_string();
    for which in [Product::Star, Product::Bullet] {
        for x in 0..n {
            for y in 0..n {
                let (ex, ey) = (unit(x), unit(y));
                let lhs = c.apply_d(&a.mul(which, &ex, &ey));
                let mut rhs = a.mul(which, &c.d_basis(x), &ey);
                let sign = if c.degree(x).rem_euclid(2) == 0 {
                    Rational::one()
                } else {
                    -Rational::one()
                };
                add_scaled(&mut rhs, &sign, &a.mul(which, &ex, &c.d_basis(y)));
                if lhs != rhs {
                    return Err(DgAs2Failure::Leibniz {
                        product: which,
                        x: name(x),
                        y: name(y),
                    });
                }
            }
        }
        if let Some((x, y, z)) = associativity_witness(n, a.product(which)) {
            return Err(DgAs2Failure::Associativity {
                product: which,
                x: name(x),
                y: name(y),
                z: name(z),
            });
        }
    }
    use Product::{Bullet, Star};
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (ex, ey, ez) = (unit(x), unit(y), unit(z));
                // (x*y)•z + (x•y)*z = x*(y•z) + x•(y*z)
                let mut lhs = a.mul(Bullet, &a.mul(Star, &ex, &ey), &ez);
                add_scaled(&mut lhs, &Rational::one(), &a.mul(Star, &a.mul(Bullet, &ex, &ey), &ez));
                let mut rhs = a.mul(Star, &ex, &a.mul(Bullet, &ey, &ez));
                add_scaled(&mut rhs, &Rational::one(), &a.mul(Bullet, &ex, &a.mul(Star, &ey, &ez)));
                if lhs != rhs {
                    return Err(DgAs2Failure::Compatibility {
                        x: name(x),
                        y: name(y),
                        z: name(z),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Whether λ·star + μ·bullet is associative.
pub fn blend_is_associative(a: &DgAs2Algebra, lambda: &Rational, mu: &Rational) -> bool {
    associativity_witness(a.complex.dim(), &a.blend(lambda, mu)).is_none()
}
