//! Text form of polynomials: `coef * Z[a][i]^e * W[b][j]^e` terms with
//! 1-based indices, joined by `+` and `-`.

use std::fmt;
use std::iter::Peekable;
use std::str::Chars;

use num_bigint::BigInt;
use num_traits::Zero;

use super::gauss::GaussRat;
use super::poly::{FockPoly, Shape, Var};
use crate::error::{Error, Result};

impl fmt::Display for FockPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let shape = self.shape();
        for (idx, (e, c)) in self.terms().rev().enumerate() {
            let negative = c.is_negative_atom();
            let c = if negative { -c } else { c.clone() };
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(v, &x)| {
                    let name = match shape.var_of(v) {
                        Var::Z(a, i) => format!("Z[{}][{}]", a + 1, i + 1),
                        Var::W(b, j) => format!("W[{}][{}]", b + 1, j + 1),
                    };
                    if x == 1 {
                        name
                    } else {
                        format!("{name}^{x}")
                    }
                })
                .collect();
            let coef = if !c.re.is_zero() && !c.im.is_zero() { format!("({c})") } else { c.to_string() };
            if factors.is_empty() {
                f.write_str(&coef)?;
            } else {
                if !c.is_one() {
                    write!(f, "{coef} * ")?;
                }
                f.write_str(&factors.join(" * "))?;
            }
        }
        Ok(())
    }
}

/// Parsed expression over sparse variables, before a shape is fixed.
#[derive(Clone, Debug)]
struct Sparse {
    terms: Vec<(Vec<(Var, u32)>, GaussRat)>,
}

impl Sparse {
    fn constant(c: GaussRat) -> Self {
        Sparse { terms: vec![(Vec::new(), c)] }
    }

    fn var(v: Var) -> Self {
        Sparse { terms: vec![(vec![(v, 1)], GaussRat::one())] }
    }

    fn neg(self) -> Self {
        Sparse { terms: self.terms.into_iter().map(|(m, c)| (m, -&c)).collect() }
    }

    fn plus(mut self, other: Sparse) -> Self {
        self.terms.extend(other.terms);
        self
    }

    fn times(&self, other: &Sparse) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mut m = m1.clone();
                m.extend(m2.iter().copied());
                terms.push((m, c1 * c2));
            }
        }
        Sparse { terms }
    }

    /// The value when the expression has no variables.
    fn as_constant(&self) -> Option<GaussRat> {
        let mut total = GaussRat::zero();
        for (m, c) in &self.terms {
            if !m.is_empty() {
                return None;
            }
            total += c;
        }
        Some(total)
    }

    fn min_shape(&self) -> Shape {
        let mut shape = Shape { n: 0, k: 0, q: 0 };
        for (m, _) in &self.terms {
            for &(v, _) in m {
                match v {
                    Var::Z(a, i) => {
                        shape.n = shape.n.max(a + 1);
                        shape.k = shape.k.max(i + 1);
                    }
                    Var::W(b, j) => {
                        shape.q = shape.q.max(b + 1);
                        shape.k = shape.k.max(j + 1);
                    }
                }
            }
        }
        shape
    }

    fn build(&self, shape: Shape) -> Result<FockPoly> {
        let mut out = FockPoly::zero(shape);
        for (m, c) in &self.terms {
            let mut e = vec![0; shape.nvars()];
            for &(v, x) in m {
                let fits = match v {
                    Var::Z(a, i) => a < shape.n && i < shape.k,
                    Var::W(b, j) => b < shape.q && j < shape.k,
                };
                if !fits {
                    return Err(Error::ShapeMismatch(format!("{v:?} outside {shape:?}")));
                }
                e[shape.var(v)] += x;
            }
            out.add_term(e, c.clone());
        }
        Ok(out)
    }
}

struct Parser<'a> {
    src: &'a str,
    chars: Peekable<Chars<'a>>,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, chars: src.chars().peekable() }
    }

    fn err(&self, msg: &str) -> Error {
        Error::ParsePolynomial(format!("{msg} in {:?}", self.src))
    }

    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.chars.next();
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let mut digits = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        digits.parse().map_err(|_| self.err("expected a number"))
    }

    fn index(&mut self) -> Result<usize> {
        self.expect('[')?;
        let n = self.number()?;
        self.expect(']')?;
        let n: usize = n.try_into().map_err(|_| self.err("index too large"))?;
        if n == 0 {
            return Err(self.err("indices are 1-based"));
        }
        Ok(n - 1)
    }

    fn expr(&mut self) -> Result<Sparse> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.chars.next();
                self.term()?.neg()
            }
            Some('+') => {
                self.chars.next();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.chars.next();
                    acc = acc.plus(self.term()?);
                }
                Some('-') => {
                    self.chars.next();
                    acc = acc.plus(self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Sparse> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.chars.next();
                    acc = acc.times(&self.power()?);
                }
                Some('/') => {
                    self.chars.next();
                    let d = self.power()?.as_constant().ok_or_else(|| self.err("division by a non-constant"))?;
                    let inv = d.inv().ok_or_else(|| self.err("division by zero"))?;
                    acc = acc.times(&Sparse::constant(inv));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Sparse> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.chars.next();
            let e: u32 = self.number()?.try_into().map_err(|_| self.err("exponent too large"))?;
            let mut out = Sparse::constant(GaussRat::one());
            for _ in 0..e {
                out = out.times(&base);
            }
            return Ok(out);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Sparse> {
        match self.peek() {
            Some('(') => {
                self.chars.next();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('-') => {
                self.chars.next();
                Ok(self.atom()?.neg())
            }
            Some(c) if c.is_ascii_digit() => Ok(Sparse::constant(GaussRat::from(self.number()?))),
            Some('i') => {
                self.chars.next();
                Ok(Sparse::constant(GaussRat::i()))
            }
            Some(c @ ('Z' | 'W')) => {
                self.chars.next();
                let (row, col) = (self.index()?, self.index()?);
                Ok(Sparse::var(if c == 'Z' { Var::Z(row, col) } else { Var::W(row, col) }))
            }
            Some(c) => Err(self.err(&format!("unexpected '{c}'"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

fn parse_sparse(src: &str) -> Result<Sparse> {
    let mut p = Parser::new(src);
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Parses `src` in the given shape.
pub fn parse_poly_in(src: &str, shape: Shape) -> Result<FockPoly> {
    parse_sparse(src)?.build(shape)
}

/// Parses several polynomials into the smallest common shape (at least `1×1`).
pub fn parse_polys(srcs: &[&str]) -> Result<Vec<FockPoly>> {
    let parsed: Vec<Sparse> = srcs.iter().map(|s| parse_sparse(s)).collect::<Result<_>>()?;
    let mut shape = Shape { n: 1, k: 1, q: 0 };
    for p in &parsed {
        let s = p.min_shape();
        shape = Shape { n: shape.n.max(s.n), k: shape.k.max(s.k), q: shape.q.max(s.q) };
    }
    parsed.iter().map(|p| p.build(shape)).collect()
}

/// Parses one polynomial into its smallest shape.
pub fn parse_poly(src: &str) -> Result<FockPoly> {
    Ok(parse_polys(&[src])?.remove(0))
}
