use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial with integer coefficients in a fixed number of
/// torus coordinates. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn monomial(exponents: Vec<i32>, c: impl Into<BigInt>) -> Self {
        let mut p = LaurentPoly::zero(exponents.len());
        p.add_term(exponents, c.into());
        p
    }

    /// `x_i^e`.
    pub fn var_power(nvars: usize, i: usize, e: i32) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Self::monomial(exps, 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
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

    pub fn add_term(&mut self, exponents: Vec<i32>, c: BigInt) {
        assert_eq!(exponents.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exponents) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exponents);
                }
            }
            None => {
                self.terms.insert(exponents, c);
            }
        }
    }

    pub fn coefficient(&self, exponents: &[i32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> + '_ {
        self.terms.iter()
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Vec<i32>, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Value at `x_1 = ... = x_n = 1`.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero(self.nvars);
        }
        LaurentPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    /// Substitutes `x_i -> x_i^{-1}`.
    pub fn invert_var(&self, i: usize) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| {
                    let mut e = e.clone();
                    e[i] = -e[i];
                    (e, v.clone())
                })
                .collect(),
        }
    }

    pub fn has_negative_coefficient(&self) -> bool {
        self.terms.values().any(|v| v.is_negative())
    }

    /// Divides every exponent by `d`, failing if any is not divisible.
    pub fn divide_exponents(&self, d: i32) -> Result<Self> {
        let mut out = LaurentPoly::zero(self.nvars);
        for (e, v) in &self.terms {
            if e.iter().any(|x| x % d != 0) {
                return Err(Error::DivisionNotExact(format!("exponent {e:?} not divisible by {d}")));
            }
            out.terms.insert(e.iter().map(|x| x / d).collect(), v.clone());
        }
        Ok(out)
    }

    fn exponent_box(&self) -> (Vec<i32>, Vec<i32>) {
        let mut lo = vec![i32::MAX; self.nvars];
        let mut hi = vec![i32::MIN; self.nvars];
        for e in self.terms.keys() {
            for i in 0..self.nvars {
                lo[i] = lo[i].min(e[i]);
                hi[i] = hi[i].max(e[i]);
            }
        }
        (lo, hi)
    }

    /// Exact division by `divisor`.
    ///
    /// Leading terms are cancelled in lexicographic order; every quotient
    /// exponent must stay inside the per-variable degree window forced by
    /// exactness, which also bounds the loop.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<Self> {
        assert_eq!(self.nvars, divisor.nvars);
        let Some((d_lead, d_coef)) = divisor.leading_term() else {
            return Err(Error::DivisionNotExact("division by zero".into()));
        };
        let (d_lead, d_coef) = (d_lead.clone(), d_coef.clone());
        let mut quotient = LaurentPoly::zero(self.nvars);
        if self.is_zero() {
            return Ok(quotient);
        }
        let (n_lo, n_hi) = self.exponent_box();
        let (d_lo, d_hi) = divisor.exponent_box();
        let mut rem = self.clone();
        while let Some((lead, coef)) = rem.leading_term() {
            let t: Vec<i32> = lead.iter().zip(&d_lead).map(|(a, b)| a - b).collect();
            let in_window = (0..self.nvars).all(|i| t[i] >= n_lo[i] - d_lo[i] && t[i] <= n_hi[i] - d_hi[i]);
            let (c, r) = coef.div_rem(&d_coef);
            if !in_window || !r.is_zero() {
                return Err(Error::DivisionNotExact(format!("remainder term {lead:?}")));
            }
            let step = LaurentPoly::monomial(t.clone(), c.clone());
            rem = &rem - &(&step * divisor);
            quotient.add_term(t, c);
        }
        Ok(quotient)
    }

    /// Determinant of a square matrix of Laurent polynomials (Laplace expansion).
    pub fn det(matrix: &[Vec<LaurentPoly>], nvars: usize) -> LaurentPoly {
        let n = matrix.len();
        if n == 0 {
            return LaurentPoly::one(nvars);
        }
        let mut total = LaurentPoly::zero(nvars);
        for col in 0..n {
            let minor: Vec<Vec<LaurentPoly>> = matrix[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(j, _)| *j != col).map(|(_, p)| p.clone()).collect())
                .collect();
            let term = &matrix[0][col] * &LaurentPoly::det(&minor, nvars);
            total = if col % 2 == 0 { &total + &term } else { &total - &term };
        }
        total
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, v) in &rhs.terms {
            out.add_term(e.clone(), v.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), -v)).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut acc: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e: Vec<i32> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                *acc.entry(e).or_insert_with(BigInt::zero) += x * y;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        LaurentPoly { nvars: self.nvars, terms: acc }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, v)) in self.terms.iter().rev().enumerate() {
            let negative = v.is_negative();
            if idx > 0 {
                f.write_str(if negative { " - " } else { " + " })?;
            } else if negative {
                f.write_str("-")?;
            }
            let abs = v.abs();
            let monomial: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| if x == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, x) })
                .collect();
            if monomial.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                f.write_str(&monomial.join("*"))?;
            }
        }
        Ok(())
    }
}
