//! Highest-weight vectors and Borel covariance checks.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;

use super::gauss::GaussRat;
use super::poly::{poly_det, FockPoly, Shape, TranslateSide};
use crate::error::{Error, Result};
use crate::signature::{MixedSignature, Signature};

/// Kinds of highest-weight vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HwvKind {
    /// Products of principal minors of `Z`, for `U(n)`.
    Gl,
    /// `(Z₁ + iZ_j)^r` on `F_{1×k}`.
    SoRank1,
    /// Principal minors of `Z q`, for `SO(k)`.
    SoGeneral,
    /// `f_ν(Z)·f_λ(W̃)` for the mixed pair.
    Upq,
}

impl HwvKind {
    pub fn tag(self) -> &'static str {
        match self {
            HwvKind::Gl => "gl",
            HwvKind::SoRank1 => "so_rank1",
            HwvKind::SoGeneral => "so_general",
            HwvKind::Upq => "upq",
        }
    }
}

impl fmt::Display for HwvKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for HwvKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.replace('-', "_").as_str() {
            "gl" => Ok(HwvKind::Gl),
            "so_rank1" => Ok(HwvKind::SoRank1),
            "so_general" => Ok(HwvKind::SoGeneral),
            "upq" => Ok(HwvKind::Upq),
            _ => Err(Error::BadSignature(format!("unknown highest-weight vector kind {s:?}"))),
        }
    }
}

/// `∏_i Δ_i(M)^{λ_i - λ_{i+1}}`, `Δ_i` the leading principal `i × i` minor.
fn minor_product(m: &[Vec<FockPoly>], lambda: &Signature, shape: Shape) -> FockPoly {
    let mut out = FockPoly::one(shape);
    for i in 1..=lambda.len() {
        let e = lambda.part(i - 1) - lambda.part(i);
        if e == 0 {
            continue;
        }
        let block: Vec<Vec<FockPoly>> = m[..i].iter().map(|row| row[..i].to_vec()).collect();
        out = &out * &poly_det(&block, shape).pow(e);
    }
    out
}

fn z_matrix(shape: Shape) -> Vec<Vec<FockPoly>> {
    (0..shape.n).map(|a| (0..shape.k).map(|i| FockPoly::z(shape, a, i)).collect()).collect()
}

fn check_fits(lambda: &Signature, rows: usize, cols: usize) -> Result<()> {
    if lambda.len() > rows || lambda.len() > cols {
        return Err(Error::BadSignature(format!(
            "({lambda}) has length {} but the block is {rows}×{cols}",
            lambda.len()
        )));
    }
    Ok(())
}

/// `f_λ(Z) = ∏ Δ_i(Z)^{λ_i - λ_{i+1}}` on `F_{n×k}`.
pub fn hwv_gl(lambda: &Signature, n: usize, k: usize) -> Result<FockPoly> {
    check_fits(lambda, n, k)?;
    let shape = Shape::new(n, k);
    Ok(minor_product(&z_matrix(shape), lambda, shape))
}

/// Column `j < ⌊k/2⌋` of `Z q` with the `√2` scalings cleared:
/// `Z_{αj} + i Z_{α,off+j}`, `off = ν` for even `k` and `ν + 1` for odd `k`.
fn zq_entry(shape: Shape, a: usize, j: usize) -> FockPoly {
    let nu = shape.k / 2;
    let off = if shape.k.is_multiple_of(2) { nu } else { nu + 1 };
    &FockPoly::z(shape, a, j) + &FockPoly::z(shape, a, off + j).scale(&GaussRat::i())
}

/// `(Z₁ + iZ_{s+1})^r` for `k = 2s`, `(Z₁ + iZ_{s+2})^r` for `k = 2s+1`.
pub fn hwv_so_rank1(r: u32, k: usize) -> Result<FockPoly> {
    if k < 2 {
        return Err(Error::BadSignature(format!("no isotropic vector for k = {k}")));
    }
    Ok(zq_entry(Shape::new(1, k), 0, 0).pow(r))
}

/// Principal minors of `Z q` on `F_{n×k}`, for `len(μ) ≤ n ≤ ⌊k/2⌋`.
pub fn hwv_so_general(mu: &Signature, n: usize, k: usize) -> Result<FockPoly> {
    let nu = k / 2;
    if n > nu || n == 0 {
        return Err(Error::BadSignature(format!("need 1 ≤ n ≤ {nu} for k = {k}, got n = {n}")));
    }
    check_fits(mu, n, nu)?;
    let shape = Shape::new(n, k);
    let m: Vec<Vec<FockPoly>> = (0..n).map(|a| (0..n).map(|j| zq_entry(shape, a, j)).collect()).collect();
    Ok(minor_product(&m, mu, shape))
}

/// Splits `(ν₁..ν_p, 0.., -λ_q..-λ₁)` into `ν` and `λ`.
pub fn split_mixed(sigma: &MixedSignature, p: usize, q: usize) -> Result<(Signature, Signature)> {
    let k = sigma.rank();
    if p + q > k {
        return Err(Error::BadSignature(format!("p + q = {} exceeds k = {k}", p + q)));
    }
    let parts = sigma.parts();
    let bad = || Error::BadSignature(format!("({sigma}) is not of the form (ν, 0, ..., 0, -λ) with p = {p}, q = {q}"));
    if parts[p..k - q].iter().any(|&x| x != 0)
        || parts[..p].iter().any(|&x| x < 0)
        || parts[k - q..].iter().any(|&x| x > 0)
    {
        return Err(bad());
    }
    let nu = Signature::new(parts[..p].iter().map(|&x| x as u32).collect::<Vec<_>>());
    let lambda = Signature::new(parts[k - q..].iter().rev().map(|&x| (-x) as u32).collect::<Vec<_>>());
    Ok((nu, lambda))
}

/// `f_ν(Z)·f_λ(W̃)` on `F_{(p+q)×k}`, with `W̃[a][b] = W[q-1-a][k-1-b]`.
pub fn hwv_upq(sigma: &MixedSignature, p: usize, q: usize) -> Result<FockPoly> {
    let k = sigma.rank();
    let (nu, lambda) = split_mixed(sigma, p, q)?;
    let shape = Shape::with_w(p, q, k);
    let z: Vec<Vec<FockPoly>> = (0..p).map(|a| (0..k).map(|i| FockPoly::z(shape, a, i)).collect()).collect();
    let w: Vec<Vec<FockPoly>> =
        (0..q).map(|a| (0..k).map(|b| FockPoly::w(shape, q - 1 - a, k - 1 - b)).collect()).collect();
    Ok(&minor_product(&z, &nu, shape) * &minor_product(&w, &lambda, shape))
}

fn nonnegative(sig: &[i64]) -> Result<Signature> {
    if sig.iter().any(|&x| x < 0) {
        return Err(Error::BadSignature(format!("{sig:?} has negative parts")));
    }
    Signature::canonicalize(sig).map_err(|e| Error::BadSignature(e.to_string()))
}

/// Dispatches on `kind`. For `upq` the signature is the full mixed tuple of
/// length `k` and `q` is the number of `W` rows (with `p = n`).
pub fn hwv(kind: HwvKind, sig: &[i64], n: usize, k: usize, q: usize) -> Result<FockPoly> {
    match kind {
        HwvKind::Gl => hwv_gl(&nonnegative(sig)?, n, k),
        HwvKind::SoRank1 => {
            let s = nonnegative(sig)?;
            if s.len() > 1 || n != 1 {
                return Err(Error::BadSignature(format!("so_rank1 needs n = 1 and a one-row signature, got ({s})")));
            }
            hwv_so_rank1(s.part(0), k)
        }
        HwvKind::SoGeneral => hwv_so_general(&nonnegative(sig)?, n, k),
        HwvKind::Upq => {
            let sigma = MixedSignature::new(sig.to_vec()).map_err(|e| Error::BadSignature(e.to_string()))?;
            if sigma.rank() != k {
                return Err(Error::BadSignature(format!("mixed signature needs {k} parts, got {}", sigma.rank())));
            }
            hwv_upq(&sigma, n, q)
        }
    }
}

/// Which Borel subgroup acts in [`check_covariance`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CovarianceSide {
    /// `f(b′Z) = ∏ b′_ii^{λ_i} f(Z)` for lower-triangular `b′` of order `n`.
    LeftLower,
    /// `f(Zb) = ∏ b_ii^{λ_i} f(Z)` for upper-triangular `b` of order `k`.
    RightUpper,
}

/// Default number of random trials in covariance checks.
pub const DEFAULT_TRIALS: usize = 8;

fn random_triangular(order: usize, lower: bool, rng: &mut impl Rng) -> Vec<Vec<GaussRat>> {
    let off = [(0, 1), (1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2)];
    let diag = [(1, 1), (2, 1), (1, 2)];
    (0..order)
        .map(|i| {
            (0..order)
                .map(|j| {
                    let pick = |set: &[(i64, i64)], rng: &mut dyn rand::RngCore| {
                        let &(p, q) = set.choose(rng).expect("nonempty");
                        GaussRat::from_ratio(p, q)
                    };
                    if i == j {
                        pick(&diag, rng)
                    } else if (i > j) == lower {
                        pick(&off, rng)
                    } else {
                        GaussRat::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Randomized exact test of Borel covariance with character exponents `exps`.
pub fn check_covariance(f: &FockPoly, side: CovarianceSide, exps: &[u32], trials: usize, rng: &mut impl Rng) -> bool {
    let shape = f.shape();
    let order = match side {
        CovarianceSide::LeftLower => shape.n,
        CovarianceSide::RightUpper => shape.k,
    };
    if exps.len() > order {
        return false;
    }
    for _ in 0..trials {
        let b = random_triangular(order, side == CovarianceSide::LeftLower, rng);
        let character = exps.iter().enumerate().fold(GaussRat::one(), |acc, (i, &e)| &acc * &b[i][i].pow(e));
        let moved = match side {
            // f(b′Z) is the left-transpose translate by b′ᵗ
            CovarianceSide::LeftLower => {
                let bt: Vec<Vec<GaussRat>> =
                    (0..order).map(|i| (0..order).map(|j| b[j][i].clone()).collect()).collect();
                f.translate(&bt, TranslateSide::LeftTranspose)
            }
            CovarianceSide::RightUpper => f.translate(&b, TranslateSide::Right),
        };
        match moved {
            Ok(g) if g == f.scale(&character) => {}
            _ => return false,
        }
    }
    true
}
