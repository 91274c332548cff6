use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::gauss::GaussRat;
use crate::error::{Error, Result};

/// Variable layout: an `n × k` block `Z` and an optional `q × k` block `W`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    pub n: usize,
    pub k: usize,
    pub q: usize,
}

/// A variable of a [`Shape`], with 0-based indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Z(usize, usize),
    W(usize, usize),
}

impl Shape {
    pub fn new(n: usize, k: usize) -> Self {
        Shape { n, k, q: 0 }
    }

    pub fn with_w(n: usize, q: usize, k: usize) -> Self {
        Shape { n, k, q }
    }

    pub fn nvars(&self) -> usize {
        (self.n + self.q) * self.k
    }

    /// Flat index of `Z[a][i]`.
    pub fn z(&self, a: usize, i: usize) -> usize {
        assert!(a < self.n && i < self.k, "Z[{a}][{i}] outside {self:?}");
        a * self.k + i
    }

    /// Flat index of `W[b][j]`.
    pub fn w(&self, b: usize, j: usize) -> usize {
        assert!(b < self.q && j < self.k, "W[{b}][{j}] outside {self:?}");
        (self.n + b) * self.k + j
    }

    pub fn var(&self, v: Var) -> usize {
        match v {
            Var::Z(a, i) => self.z(a, i),
            Var::W(b, j) => self.w(b, j),
        }
    }

    pub fn var_of(&self, idx: usize) -> Var {
        let (row, col) = (idx / self.k, idx % self.k);
        if row < self.n {
            Var::Z(row, col)
        } else {
            Var::W(row - self.n, col)
        }
    }
}

pub(crate) fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, x| acc * x)
}

/// `n (n-1) ... (n-j+1)`.
pub(crate) fn falling(n: u32, j: u32) -> BigInt {
    (0..j).fold(BigInt::one(), |acc, t| acc * (n - t))
}

/// A polynomial in the variables of a [`Shape`] with Gaussian-rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockPoly {
    shape: Shape,
    terms: BTreeMap<Vec<u32>, GaussRat>,
}

/// Which side a matrix acts on in [`FockPoly::translate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TranslateSide {
    /// `f(Z) ↦ f(Zg)`, `g` of order `k`.
    Right,
    /// `f(Z) ↦ f(gᵗZ)`, `g` of order `n`.
    LeftTranspose,
}

impl FockPoly {
    pub fn zero(shape: Shape) -> Self {
        FockPoly { shape, terms: BTreeMap::new() }
    }

    pub fn constant(shape: Shape, c: GaussRat) -> Self {
        let mut p = FockPoly::zero(shape);
        p.add_term(vec![0; shape.nvars()], c);
        p
    }

    pub fn one(shape: Shape) -> Self {
        Self::constant(shape, GaussRat::one())
    }

    /// The single variable with flat index `idx`.
    pub fn variable(shape: Shape, idx: usize) -> Self {
        let mut e = vec![0; shape.nvars()];
        e[idx] = 1;
        let mut p = FockPoly::zero(shape);
        p.add_term(e, GaussRat::one());
        p
    }

    pub fn z(shape: Shape, a: usize, i: usize) -> Self {
        Self::variable(shape, shape.z(a, i))
    }

    pub fn w(shape: Shape, b: usize, j: usize) -> Self {
        Self::variable(shape, shape.w(b, j))
    }

    pub fn monomial(shape: Shape, exponents: Vec<u32>, c: GaussRat) -> Self {
        let mut p = FockPoly::zero(shape);
        p.add_term(exponents, c);
        p
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &GaussRat)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> GaussRat {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: GaussRat) {
        assert_eq!(exponents.len(), self.shape.nvars(), "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exponents) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&exponents);
                }
            }
            None => {
                self.terms.insert(exponents, c);
            }
        }
    }

    /// Reinterprets the polynomial in a larger shape with the same `k`.
    pub fn embed(&self, shape: Shape) -> Result<Self> {
        if shape.k != self.shape.k || shape.n < self.shape.n || shape.q < self.shape.q {
            return Err(Error::ShapeMismatch(format!("cannot embed {:?} into {shape:?}", self.shape)));
        }
        let mut out = FockPoly::zero(shape);
        for (e, c) in &self.terms {
            let mut f = vec![0; shape.nvars()];
            for (idx, &x) in e.iter().enumerate() {
                if x > 0 {
                    f[shape.var(self.shape.var_of(idx))] = x;
                }
            }
            out.add_term(f, c.clone());
        }
        Ok(out)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// The common degree of all terms, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = degrees.next()?;
        degrees.all(|x| x == d).then_some(d)
    }

    pub fn scale(&self, c: &GaussRat) -> Self {
        let mut out = FockPoly::zero(self.shape);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * c);
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = FockPoly::one(self.shape);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// `∂f/∂x_idx`.
    pub fn derivative(&self, idx: usize) -> Self {
        let mut out = FockPoly::zero(self.shape);
        for (e, v) in &self.terms {
            if e[idx] > 0 {
                let mut f = e.clone();
                f[idx] -= 1;
                out.add_term(f, v * &GaussRat::from(BigInt::from(e[idx])));
            }
        }
        out
    }

    fn check_shape(&self, other: &FockPoly) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(format!("{:?} vs {:?}", self.shape, other.shape)));
        }
        Ok(())
    }

    /// `⟨f, g⟩ = Σ (r)!·f_(r)·conj(g_(r))`.
    pub fn pairing(&self, other: &FockPoly) -> Result<GaussRat> {
        self.check_shape(other)?;
        let mut total = GaussRat::zero();
        for (e, v) in &self.terms {
            if let Some(w) = other.terms.get(e) {
                let fact: BigInt = e.iter().map(|&x| factorial(x)).product();
                total += &(&(v * &w.conj()) * &GaussRat::from(fact));
            }
        }
        Ok(total)
    }

    /// Substitutes each `Z` variable by a linear form; `W` variables are kept.
    fn substitute_z(&self, image: impl Fn(usize, usize) -> FockPoly) -> Self {
        let shape = self.shape;
        let images: Vec<FockPoly> = (0..shape.n * shape.k).map(|idx| image(idx / shape.k, idx % shape.k)).collect();
        let mut powers: BTreeMap<(usize, u32), FockPoly> = BTreeMap::new();
        let mut out = FockPoly::zero(shape);
        for (e, v) in &self.terms {
            let mut term = FockPoly::zero(shape);
            let mut rest = vec![0; shape.nvars()];
            rest[shape.n * shape.k..].copy_from_slice(&e[shape.n * shape.k..]);
            term.add_term(rest, v.clone());
            for (idx, &x) in e.iter().enumerate().take(shape.n * shape.k) {
                if x > 0 {
                    let p = powers.entry((idx, x)).or_insert_with(|| images[idx].pow(x));
                    term = &term * p;
                }
            }
            out = &out + &term;
        }
        out
    }

    /// `f(Zg)` or `f(gᵗZ)`.
    pub fn translate(&self, g: &[Vec<GaussRat>], side: TranslateSide) -> Result<Self> {
        let shape = self.shape;
        let order = match side {
            TranslateSide::Right => shape.k,
            TranslateSide::LeftTranspose => shape.n,
        };
        if g.len() != order || g.iter().any(|row| row.len() != order) {
            return Err(Error::DimensionMismatch(format!("matrix must be {order}×{order} for {side:?} translation")));
        }
        Ok(match side {
            // (Zg)[a][i] = Σ_j Z[a][j] g[j][i]
            TranslateSide::Right => self.substitute_z(|a, i| {
                let mut p = FockPoly::zero(shape);
                for (j, row) in g.iter().enumerate() {
                    p = &p + &FockPoly::z(shape, a, j).scale(&row[i]);
                }
                p
            }),
            // (gᵗZ)[a][i] = Σ_b g[b][a] Z[b][i]
            TranslateSide::LeftTranspose => self.substitute_z(|a, i| {
                let mut p = FockPoly::zero(shape);
                for (b, row) in g.iter().enumerate() {
                    p = &p + &FockPoly::z(shape, b, i).scale(&row[a]);
                }
                p
            }),
        })
    }

    /// Value with every variable set to the given numbers.
    pub fn evaluate(&self, values: &[GaussRat]) -> GaussRat {
        let mut total = GaussRat::zero();
        for (e, v) in &self.terms {
            let mut t = v.clone();
            for (idx, &x) in e.iter().enumerate() {
                if x > 0 {
                    t = &t * &values[idx].pow(x);
                }
            }
            total += &t;
        }
        total
    }
}

impl Add for &FockPoly {
    type Output = FockPoly;
    fn add(self, rhs: &FockPoly) -> FockPoly {
        assert_eq!(self.shape, rhs.shape, "shape mismatch in addition");
        let mut out = self.clone();
        for (e, v) in &rhs.terms {
            out.add_term(e.clone(), v.clone());
        }
        out
    }
}

impl Sub for &FockPoly {
    type Output = FockPoly;
    fn sub(self, rhs: &FockPoly) -> FockPoly {
        self + &(-rhs)
    }
}

impl Neg for &FockPoly {
    type Output = FockPoly;
    fn neg(self) -> FockPoly {
        FockPoly { shape: self.shape, terms: self.terms.iter().map(|(e, v)| (e.clone(), -v)).collect() }
    }
}

impl Mul for &FockPoly {
    type Output = FockPoly;
    fn mul(self, rhs: &FockPoly) -> FockPoly {
        assert_eq!(self.shape, rhs.shape, "shape mismatch in multiplication");
        let mut out = FockPoly::zero(self.shape);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }
}

/// Square matrix of rationals given as `(numerator, denominator)` pairs.
pub fn rational_matrix(entries: &[&[(i64, i64)]]) -> Vec<Vec<GaussRat>> {
    entries
        .iter()
        .map(|row| {
            row.iter().map(|&(p, q)| GaussRat::real(BigRational::new(BigInt::from(p), BigInt::from(q)))).collect()
        })
        .collect()
}

/// Identity matrix of order `n`.
pub fn identity_matrix(n: usize) -> Vec<Vec<GaussRat>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { GaussRat::one() } else { GaussRat::zero() }).collect()).collect()
}

/// Matrix product.
pub fn mat_mul(a: &[Vec<GaussRat>], b: &[Vec<GaussRat>]) -> Vec<Vec<GaussRat>> {
    let m = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| {
                    let mut s = GaussRat::zero();
                    for (t, x) in row.iter().enumerate() {
                        s += &(x * &b[t][j]);
                    }
                    s
                })
                .collect()
        })
        .collect()
}

/// Transposed matrix.
pub fn transpose(a: &[Vec<GaussRat>]) -> Vec<Vec<GaussRat>> {
    let m = a.first().map_or(0, Vec::len);
    (0..m).map(|j| a.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Determinant of a square matrix of polynomials (Laplace expansion).
pub fn poly_det(m: &[Vec<FockPoly>], shape: Shape) -> FockPoly {
    if m.is_empty() {
        return FockPoly::one(shape);
    }
    let mut total = FockPoly::zero(shape);
    for col in 0..m.len() {
        let minor: Vec<Vec<FockPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = &m[0][col] * &poly_det(&minor, shape);
        total = if col % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}
