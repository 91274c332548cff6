use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::gauss::GaussRat;
use super::poly::{falling, FockPoly, Shape};
use crate::error::{Error, Result};

/// Key of a normal-ordered term `x^a ∂^b`.
type Key = (Vec<u32>, Vec<u32>);

/// A differential operator with polynomial coefficients in normal order:
/// every term is `c · x^a ∂^b` with multiplications left of derivatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylOp {
    shape: Shape,
    terms: BTreeMap<Key, GaussRat>,
}

fn binomial(n: u32, j: u32) -> BigInt {
    falling(n, j) / falling(j, j)
}

impl WeylOp {
    pub fn zero(shape: Shape) -> Self {
        WeylOp { shape, terms: BTreeMap::new() }
    }

    pub fn scalar(shape: Shape, c: GaussRat) -> Self {
        let mut op = WeylOp::zero(shape);
        let n = shape.nvars();
        op.add_term(vec![0; n], vec![0; n], c);
        op
    }

    pub fn identity(shape: Shape) -> Self {
        Self::scalar(shape, GaussRat::one())
    }

    /// Multiplication by `x_idx`.
    pub fn mul_var(shape: Shape, idx: usize) -> Self {
        let mut a = vec![0; shape.nvars()];
        a[idx] = 1;
        let mut op = WeylOp::zero(shape);
        op.add_term(a, vec![0; shape.nvars()], GaussRat::one());
        op
    }

    /// `∂/∂x_idx`.
    pub fn deriv(shape: Shape, idx: usize) -> Self {
        let mut b = vec![0; shape.nvars()];
        b[idx] = 1;
        let mut op = WeylOp::zero(shape);
        op.add_term(vec![0; shape.nvars()], b, GaussRat::one());
        op
    }

    /// Multiplication by `p`.
    pub fn multiplication(p: &FockPoly) -> Self {
        let shape = p.shape();
        let mut op = WeylOp::zero(shape);
        for (e, c) in p.terms() {
            op.add_term(e.clone(), vec![0; shape.nvars()], c.clone());
        }
        op
    }

    /// `p(D)`: every variable replaced by the corresponding derivative.
    pub fn derivative_form(p: &FockPoly) -> Self {
        let shape = p.shape();
        let mut op = WeylOp::zero(shape);
        for (e, c) in p.terms() {
            op.add_term(vec![0; shape.nvars()], e.clone(), c.clone());
        }
        op
    }

    pub fn shape(&self) -> Shape {
        self.shape
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

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &GaussRat)> + '_ {
        self.terms.iter()
    }

    pub fn add_term(&mut self, mul: Vec<u32>, der: Vec<u32>, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        let key = (mul, der);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        let mut out = WeylOp::zero(self.shape);
        for ((a, b), v) in &self.terms {
            out.add_term(a.clone(), b.clone(), v * c);
        }
        out
    }

    /// `A f`.
    pub fn apply(&self, f: &FockPoly) -> Result<FockPoly> {
        if f.shape() != self.shape {
            return Err(Error::ShapeMismatch(format!("operator {:?} on polynomial {:?}", self.shape, f.shape())));
        }
        let mut out = FockPoly::zero(self.shape);
        for ((a, b), v) in &self.terms {
            for (e, c) in f.terms() {
                if e.iter().zip(b).any(|(x, y)| x < y) {
                    continue;
                }
                let mut coef = v * c;
                let mut exps = Vec::with_capacity(e.len());
                for ((&x, &y), &z) in e.iter().zip(b).zip(a) {
                    if y > 0 {
                        coef = &coef * &GaussRat::from(falling(x, y));
                    }
                    exps.push(x - y + z);
                }
                out.add_term(exps, coef);
            }
        }
        Ok(out)
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &WeylOp) -> WeylOp {
        &(self * other) - &(other * self)
    }

    /// The adjoint under the Fock pairing: `x ↔ ∂` and conjugated coefficients.
    pub fn adjoint(&self) -> WeylOp {
        // (c x^a ∂^b)† = conj(c) x^b ∂^a, already in normal order
        let mut out = WeylOp::zero(self.shape);
        for ((a, b), v) in &self.terms {
            out.add_term(b.clone(), a.clone(), v.conj());
        }
        out
    }
}

/// Normal-ordered product of `x^a ∂^b` and `x^c ∂^d`:
/// `Σ_j Π_v C(b_v, j_v)·c_v^(j_v) · x^{a+c-j} ∂^{b-j+d}`.
fn compose_terms(a: &[u32], b: &[u32], c: &[u32], d: &[u32], coef: GaussRat, out: &mut WeylOp) {
    let mut partial: Vec<(Vec<u32>, Vec<u32>, BigInt)> = vec![(
        a.iter().zip(c).map(|(x, y)| x + y).collect(),
        b.iter().zip(d).map(|(x, y)| x + y).collect(),
        BigInt::from(1),
    )];
    for v in 0..a.len() {
        let top = b[v].min(c[v]);
        if top == 0 {
            continue;
        }
        let mut next = Vec::with_capacity(partial.len() * (top as usize + 1));
        for (m, der, w) in &partial {
            for j in 0..=top {
                let mut m = m.clone();
                let mut der = der.clone();
                m[v] -= j;
                der[v] -= j;
                next.push((m, der, w * binomial(b[v], j) * falling(c[v], j)));
            }
        }
        partial = next;
    }
    for (m, der, w) in partial {
        out.add_term(m, der, &coef * &GaussRat::from(w));
    }
}

impl Mul for &WeylOp {
    type Output = WeylOp;
    fn mul(self, rhs: &WeylOp) -> WeylOp {
        assert_eq!(self.shape, rhs.shape, "shape mismatch in composition");
        let mut out = WeylOp::zero(self.shape);
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &rhs.terms {
                compose_terms(a, b, c, d, x * y, &mut out);
            }
        }
        out
    }
}

impl Add for &WeylOp {
    type Output = WeylOp;
    fn add(self, rhs: &WeylOp) -> WeylOp {
        assert_eq!(self.shape, rhs.shape, "shape mismatch in addition");
        let mut out = self.clone();
        for ((a, b), v) in &rhs.terms {
            out.add_term(a.clone(), b.clone(), v.clone());
        }
        out
    }
}

impl Sub for &WeylOp {
    type Output = WeylOp;
    fn sub(self, rhs: &WeylOp) -> WeylOp {
        self + &(-rhs)
    }
}

impl Neg for &WeylOp {
    type Output = WeylOp;
    fn neg(self) -> WeylOp {
        WeylOp { shape: self.shape, terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect() }
    }
}

impl fmt::Display for WeylOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|((a, b), v)| {
                let mut s = format!("({v})");
                for (idx, &x) in a.iter().enumerate().filter(|(_, &x)| x > 0) {
                    s += &format!(" * x{}^{x}", idx + 1);
                }
                for (idx, &x) in b.iter().enumerate().filter(|(_, &x)| x > 0) {
                    s += &format!(" * d{}^{x}", idx + 1);
                }
                s
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `A f`.
pub fn weyl_apply(op: &WeylOp, f: &FockPoly) -> Result<FockPoly> {
    op.apply(f)
}

/// `[A, B]` in normal order.
pub fn weyl_commutator(a: &WeylOp, b: &WeylOp) -> WeylOp {
    a.commutator(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_commutation() {
        let sh = Shape::new(1, 2);
        let x = WeylOp::mul_var(sh, 0);
        let d = WeylOp::deriv(sh, 0);
        assert_eq!(d.commutator(&x), WeylOp::identity(sh));
        let d2 = WeylOp::deriv(sh, 1);
        assert!(d2.commutator(&x).is_zero());
        assert!(x.commutator(&x).is_zero());
    }

    #[test]
    fn composition_normal_orders() {
        // ∂² x² = x²∂² + 4x∂ + 2
        let sh = Shape::new(1, 1);
        let x = WeylOp::mul_var(sh, 0);
        let d = WeylOp::deriv(sh, 0);
        let lhs = &(&d * &d) * &(&x * &x);
        let mut rhs = WeylOp::zero(sh);
        rhs.add_term(vec![2], vec![2], GaussRat::one());
        rhs.add_term(vec![1], vec![1], GaussRat::from_int(4));
        rhs.add_term(vec![0], vec![0], GaussRat::from_int(2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn composition_matches_application() {
        let sh = Shape::new(1, 2);
        let x1 = WeylOp::mul_var(sh, 0);
        let d1 = WeylOp::deriv(sh, 0);
        let d2 = WeylOp::deriv(sh, 1);
        let a = &(&x1 * &d2) + &d1;
        let b = &(&d1 * &d1) + &(&x1 * &x1);
        let f = &FockPoly::z(sh, 0, 0).pow(3) * &FockPoly::z(sh, 0, 1).pow(2);
        assert_eq!((&a * &b).apply(&f).unwrap(), a.apply(&b.apply(&f).unwrap()).unwrap());
    }

    #[test]
    fn euler_operator() {
        let sh = Shape::new(1, 2);
        let l = &(&WeylOp::mul_var(sh, 0) * &WeylOp::deriv(sh, 0)) + &(&WeylOp::mul_var(sh, 1) * &WeylOp::deriv(sh, 1));
        let f = &FockPoly::z(sh, 0, 0).pow(2) * &FockPoly::z(sh, 0, 1);
        assert_eq!(l.apply(&f).unwrap(), f.scale(&GaussRat::from_int(3)));
        assert_eq!(WeylOp::identity(sh).apply(&f).unwrap(), f);
    }

    #[test]
    fn adjoint_swaps_creation_and_annihilation() {
        let sh = Shape::new(1, 2);
        assert_eq!(WeylOp::mul_var(sh, 1).adjoint(), WeylOp::deriv(sh, 1));
        let a = &WeylOp::mul_var(sh, 0) * &WeylOp::deriv(sh, 1);
        assert_eq!(a.adjoint(), &WeylOp::mul_var(sh, 1) * &WeylOp::deriv(sh, 0));
        assert_eq!(a.adjoint().adjoint(), a);
    }
}
