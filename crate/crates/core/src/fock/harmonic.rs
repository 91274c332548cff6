//! Rank-one harmonic decomposition `P^(m) = ⊕ p₀^j H^(m-2j)` on `F_{1×k}`.

use super::gauss::GaussRat;
use super::generators::{laplacian, sl2_generators};
use super::poly::{FockPoly, Shape};
use crate::error::{Error, Result};

/// `p₀ = Σ_i Z_i²` on `F_{1×k}`.
pub fn p0(k: usize) -> FockPoly {
    let shape = Shape::new(1, k);
    let mut p = FockPoly::zero(shape);
    for i in 0..k {
        p = &p + &FockPoly::z(shape, 0, i).pow(2);
    }
    p
}

/// True when every Laplacian `Δ_{αβ}` of the `Z` block kills `f`.
pub fn is_harmonic(f: &FockPoly) -> bool {
    let shape = f.shape();
    (0..shape.n).all(|a| (a..shape.n).all(|b| laplacian(shape, a, b).apply(f).map(|g| g.is_zero()).unwrap_or(false)))
}

/// `X⁻(p₀^j h) = c·p₀^{j-1} h` for harmonic `h` of degree `r`, with
/// `c = j(k + 2(r + j - 1))`.
pub fn ladder_constant(j: u32, r: u32, k: usize) -> i64 {
    j as i64 * (k as i64 + 2 * (r as i64 + j as i64 - 1))
}

/// Writes a homogeneous `f` of degree `m` as `Σ_j p₀^j h_j` with `h_j`
/// harmonic of degree `m - 2j`. Zero components are omitted; the list is in
/// increasing `j`.
pub fn harmonic_project_rank1(f: &FockPoly, k: usize) -> Result<Vec<(u32, FockPoly)>> {
    let shape = Shape::new(1, k);
    if f.shape() != shape {
        return Err(Error::ShapeMismatch(format!("expected {shape:?}, found {:?}", f.shape())));
    }
    if f.is_zero() {
        return Ok(Vec::new());
    }
    let m = f.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    let x_minus = sl2_generators(k).x_minus;
    let p0 = p0(k);
    let mut rest = f.clone();
    let mut out = Vec::new();
    for j in (0..=m / 2).rev() {
        if rest.is_zero() {
            break;
        }
        let r = m - 2 * j;
        // (X⁻)^j kills every p₀^i h_i with i < j
        let mut h = rest.clone();
        let mut denom: i64 = 1;
        for t in 1..=j {
            h = x_minus.apply(&h)?;
            denom *= ladder_constant(t, r, k);
        }
        if h.is_zero() {
            continue;
        }
        let h = h.scale(&GaussRat::from_ratio(1, denom));
        rest = &rest - &(&p0.pow(j) * &h);
        out.push((j, h));
    }
    debug_assert!(rest.is_zero(), "harmonic projection must be exact");
    out.reverse();
    Ok(out)
}
