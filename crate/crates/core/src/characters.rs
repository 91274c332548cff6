//! Character-theoretic oracles, disjoint from the LR combinatorics.
//!
//! `GL(k)` characters are Schur polynomials summed over semistandard
//! tableaux. `SO(k)` and `Sp(k)` characters are Weyl alternant ratios on the
//! maximal torus with coordinates `x_1, ..., x_ν` (`ν = ⌊k/2⌋`), divided
//! exactly. For odd `k` the alternants have half-integer exponents, so they
//! are built in `y = x^{1/2}` and halved after the division.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::lr::tensor_pair;
use crate::signature::{Family, Group, Signature};

/// Largest rank accepted by the torus-character oracles.
pub const MAX_TORUS_RANK: usize = 7;
/// Largest number of variables for Schur-polynomial products.
pub const MAX_SCHUR_PRODUCT_RANK: usize = 5;

fn rank_of(group: &Group) -> Result<usize> {
    group.finite_rank().ok_or_else(|| Error::RankConstraint(format!("{group} has no finite rank")))
}

/// Dimension of the irreducible representation `σ` of `group` (Weyl dimension formula).
pub fn dim(group: &Group, sig: &Signature) -> Result<BigUint> {
    let k = rank_of(group)?;
    if group.family == Family::Sp && k % 2 == 1 {
        return Err(Error::OddRankForSp(k));
    }
    group.check(sig)?;
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    match group.family {
        Family::Gl => {
            for i in 0..k {
                for j in (i + 1)..k {
                    num *= sig.part(i) as i64 - sig.part(j) as i64 + (j - i) as i64;
                    den *= (j - i) as i64;
                }
            }
        }
        family => {
            let nu = k / 2;
            // shifted weights l = λ + ρ, doubled when ρ is half-integral
            let (l, r): (Vec<i64>, Vec<i64>) = (0..nu)
                .map(|i| {
                    let lam = sig.part(i) as i64;
                    let rho = match (family, k % 2) {
                        (Family::So, 1) => 2 * (nu - i) as i64 - 1,
                        (Family::So, _) => (nu - i - 1) as i64,
                        _ => (nu - i) as i64,
                    };
                    let scale = if family == Family::So && k % 2 == 1 { 2 } else { 1 };
                    (scale * lam + rho, rho)
                })
                .unzip();
            for i in 0..nu {
                for j in (i + 1)..nu {
                    num *= l[i] * l[i] - l[j] * l[j];
                    den *= r[i] * r[i] - r[j] * r[j];
                }
            }
            let short_roots = family == Family::Sp || k % 2 == 1;
            if short_roots {
                for i in 0..nu {
                    num *= l[i];
                    den *= r[i];
                }
            }
        }
    }
    let q = &num / &den;
    debug_assert!((&q * &den) == num, "Weyl dimension quotient must be exact");
    Ok(q.to_biguint().expect("dimension is positive"))
}

/// Content vectors of the semistandard tableaux of `shape` with entries in
/// `1..=nvals`, with their counts.
pub fn tableau_contents(shape: &Signature, nvals: usize) -> BTreeMap<Vec<u32>, u64> {
    let cells: Vec<(usize, usize)> =
        (0..shape.len()).flat_map(|r| (0..shape.part(r) as usize).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = (0..shape.len()).map(|r| vec![0; shape.part(r) as usize]).collect();
    let mut content = vec![0u32; nvals];
    let mut out = BTreeMap::new();

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        content: &mut Vec<u32>,
        nvals: usize,
        out: &mut BTreeMap<Vec<u32>, u64>,
    ) {
        let Some(&(r, c)) = cells.get(idx) else {
            *out.entry(content.clone()).or_insert(0) += 1;
            return;
        };
        let left = if c > 0 { grid[r][c - 1] } else { 1 };
        let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        // rows below need room for strictly larger entries
        let depth_below = grid[r + 1..].iter().filter(|row| row.len() > c).count();
        let lo = left.max(above);
        if nvals < depth_below + 1 {
            return;
        }
        for v in lo..=(nvals - depth_below) {
            grid[r][c] = v;
            content[v - 1] += 1;
            rec(idx + 1, cells, grid, content, nvals, out);
            content[v - 1] -= 1;
        }
    }
    if shape.len() <= nvals {
        rec(0, &cells, &mut grid, &mut content, nvals, &mut out);
    }
    out
}

/// The Schur polynomial `s_λ(x_1, ..., x_k)`.
pub fn schur_polynomial(lambda: &Signature, k: usize) -> LaurentPoly {
    let mut p = LaurentPoly::zero(k);
    for (content, count) in tableau_contents(lambda, k) {
        p.add_term(content.iter().map(|&e| e as i32).collect(), BigInt::from(count));
    }
    p
}

/// The `U(k)` character of `λ` restricted to the SO(k) torus
/// `(x_1, ..., x_ν, x_1^{-1}, ..., x_ν^{-1}[, 1])`.
pub fn schur_laurent_on_so_torus(lambda: &Signature, k: usize) -> Result<LaurentPoly> {
    if k > MAX_TORUS_RANK {
        return Err(Error::RankTooLarge { rank: k, limit: MAX_TORUS_RANK });
    }
    if lambda.len() > k {
        return Err(Error::RankTooSmall { len: lambda.len(), rank: k });
    }
    let nu = k / 2;
    let mut p = LaurentPoly::zero(nu);
    for (content, count) in tableau_contents(lambda, k) {
        let e: Vec<i32> = (0..nu).map(|j| content[j] as i32 - content[nu + j] as i32).collect();
        p.add_term(e, BigInt::from(count));
    }
    Ok(p)
}

/// Irreducible `SO(k)` character with highest weight `μ`, `2·len(μ) < k`.
pub fn so_character(mu: &Signature, k: usize) -> Result<LaurentPoly> {
    if k > MAX_TORUS_RANK {
        return Err(Error::RankTooLarge { rank: k, limit: MAX_TORUS_RANK });
    }
    if 2 * mu.len() >= k && !mu.is_empty() {
        return Err(Error::SignatureTooLong { len: mu.len(), rank: k });
    }
    let nu = k / 2;
    if nu == 0 {
        return Ok(LaurentPoly::one(0));
    }
    if k % 2 == 1 {
        // type B in y = x^{1/2}: entries y_j^{a} - y_j^{-a}, a = 2(λ_i + ν - i) + 1
        let exps = |lam: &Signature| -> Vec<i32> {
            (0..nu).map(|i| 2 * (lam.part(i) as i32 + (nu - i - 1) as i32) + 1).collect()
        };
        let q = alternant_ratio(nu, &exps(mu), &exps(&Signature::trivial()), -1)?;
        q.divide_exponents(2)
    } else {
        // type D with λ_ν = 0: entries x_j^{l} + x_j^{-l}, l = λ_i + ν - i
        let exps =
            |lam: &Signature| -> Vec<i32> { (0..nu).map(|i| lam.part(i) as i32 + (nu - i - 1) as i32).collect() };
        alternant_ratio(nu, &exps(mu), &exps(&Signature::trivial()), 1)
    }
}

/// Irreducible `Sp(k)` character with highest weight `μ`, `len(μ) ≤ k/2`.
pub fn sp_character(mu: &Signature, k: usize) -> Result<LaurentPoly> {
    if k % 2 == 1 {
        return Err(Error::OddRankForSp(k));
    }
    if k > MAX_TORUS_RANK {
        return Err(Error::RankTooLarge { rank: k, limit: MAX_TORUS_RANK });
    }
    let nu = k / 2;
    if mu.len() > nu {
        return Err(Error::SignatureTooLong { len: mu.len(), rank: k });
    }
    if nu == 0 {
        return Ok(LaurentPoly::one(0));
    }
    // type C: entries x_j^{l} - x_j^{-l}, l = λ_i + ν - i + 1
    let exps = |lam: &Signature| -> Vec<i32> { (0..nu).map(|i| lam.part(i) as i32 + (nu - i) as i32).collect() };
    alternant_ratio(nu, &exps(mu), &exps(&Signature::trivial()), -1)
}

/// `det[x_j^{a_i} + s·x_j^{-a_i}] / det[x_j^{b_i} + s·x_j^{-b_i}]`.
fn alternant_ratio(nvars: usize, num_exps: &[i32], den_exps: &[i32], sign: i64) -> Result<LaurentPoly> {
    let matrix = |exps: &[i32]| -> Vec<Vec<LaurentPoly>> {
        exps.iter()
            .map(|&a| {
                (0..nvars)
                    .map(|j| {
                        let up = LaurentPoly::var_power(nvars, j, a);
                        let down = LaurentPoly::var_power(nvars, j, -a).scale(&BigInt::from(sign));
                        &up + &down
                    })
                    .collect()
            })
            .collect()
    };
    let num = LaurentPoly::det(&matrix(num_exps), nvars);
    let den = LaurentPoly::det(&matrix(den_exps), nvars);
    num.exact_div(&den)
}

fn irreducible_character(group: &Group, sig: &Signature) -> Result<LaurentPoly> {
    let k = rank_of(group)?;
    match group.family {
        Family::Gl => Ok(schur_polynomial(sig, k)),
        Family::So => so_character(sig, k),
        Family::Sp => sp_character(sig, k),
    }
}

/// Peels irreducible characters off `chi`, always taking the
/// lexicographically largest surviving weight (which is dominance-maximal).
pub fn greedy_decompose(chi: &LaurentPoly, group: &Group) -> Result<Decomposition> {
    let k = rank_of(group)?;
    let expected_vars = if group.family == Family::Gl { k } else { k / 2 };
    if chi.nvars() != expected_vars {
        return Err(Error::DimensionMismatch(format!(
            "character has {} variables, {group} needs {expected_vars}",
            chi.nvars()
        )));
    }
    let mut rest = chi.clone();
    let mut out = Decomposition::new(*group);
    let mut cache: HashMap<Signature, LaurentPoly> = HashMap::new();
    while let Some((lead, coef)) = rest.leading_term() {
        if coef.is_negative() {
            return Err(Error::NegativeMultiplicity(format!("weight {lead:?} has coefficient {coef}")));
        }
        if lead.iter().any(|&e| e < 0) || lead.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDominant(lead.clone()));
        }
        let sig = Signature::new(lead.iter().map(|&e| e as u32).collect::<Vec<_>>());
        let mult = coef.clone();
        if !cache.contains_key(&sig) {
            cache.insert(sig.clone(), irreducible_character(group, &sig)?);
        }
        rest = &rest - &cache[&sig].scale(&mult);
        if rest.has_negative_coefficient() {
            return Err(Error::NegativeMultiplicity(format!(
                "subtracting {mult}·χ({sig}) leaves negative coefficients"
            )));
        }
        let mult: u64 = mult.try_into().expect("multiplicity fits in u64");
        out.add(sig, mult);
    }
    Ok(out)
}

/// `s_λ · s_μ` in `k` variables, decomposed back into Schur polynomials.
pub fn schur_product_decompose(lambda: &Signature, mu: &Signature, k: usize) -> Result<Decomposition> {
    if k > MAX_SCHUR_PRODUCT_RANK {
        return Err(Error::RankTooLarge { rank: k, limit: MAX_SCHUR_PRODUCT_RANK });
    }
    let product = &schur_polynomial(lambda, k) * &schur_polynomial(mu, k);
    greedy_decompose(&product, &Group::gl(k))
}

/// `Σ mult · dim` over a decomposition.
pub fn weighted_dimension(d: &Decomposition, group: &Group) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for (sig, m) in d.iter() {
        total += dim(group, sig)? * m;
    }
    Ok(total)
}

/// Cross-check helper: the LR decomposition and the Schur-product oracle agree.
pub fn lr_matches_schur_product(lambda: &Signature, mu: &Signature, k: usize) -> Result<bool> {
    Ok(tensor_pair(lambda, mu, k)?.same_terms(&schur_product_decompose(lambda, mu, k)?))
}
