//! Stabilization of `k`-indexed decompositions.
//!
//! A family of decompositions is probed at increasing rank until `confirm`
//! consecutive probes agree (signatures compared with trailing zeros
//! trimmed). The first rank of that run is the stabilization index `k0`.

use crate::branching::{diagonal_branch, restrict_gl_to_so, restrict_gl_to_sp, Variance};
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::lr::tensor_multi;
use crate::signature::{Family, Group, MixedSignature, Signature};

/// Probes beyond `k_start + MAX_EXTRA_RANK` are not attempted.
pub const MAX_EXTRA_RANK: usize = 32;
/// Default number of consecutive equal probes.
pub const DEFAULT_CONFIRM: usize = 2;

/// A stable decomposition and how it was found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableResult {
    pub stable: Decomposition,
    pub k0: usize,
    pub probes: Vec<(usize, Decomposition)>,
}

/// Probes `compute_at(k)` for `k = k_start, k_start + 1, ...`.
pub fn stabilize(
    compute_at: impl FnMut(usize) -> Result<Decomposition>,
    k_start: usize,
    confirm: usize,
) -> Result<StableResult> {
    stabilize_step(compute_at, k_start, 1, confirm)
}

/// As [`stabilize`], probing every `step`-th rank.
pub fn stabilize_step(
    mut compute_at: impl FnMut(usize) -> Result<Decomposition>,
    k_start: usize,
    step: usize,
    confirm: usize,
) -> Result<StableResult> {
    let confirm = confirm.max(1);
    let step = step.max(1);
    let cap = k_start + MAX_EXTRA_RANK;
    let mut probes: Vec<(usize, Decomposition)> = Vec::new();
    let mut run_start = k_start;
    let mut run_len = 0;
    let mut k = k_start;
    while k <= cap {
        let d = compute_at(k)?;
        match probes.last() {
            Some((_, prev)) if prev.same_terms(&d) => run_len += 1,
            _ => {
                run_start = k;
                run_len = 1;
            }
        }
        probes.push((k, d));
        if run_len >= confirm {
            let (_, last) = probes.last().expect("at least one probe");
            let family = last.group().family;
            let stable = last.clone().with_group(Group::stable(family));
            return Ok(StableResult { stable, k0: run_start, probes });
        }
        k += step;
    }
    Err(Error::NoStabilization { start: k_start, cap })
}

/// The stable `U(∞)` tensor product of the factors.
pub fn stable_tensor(factors: &[Signature]) -> Result<StableResult> {
    if factors.is_empty() {
        return Err(Error::EmptyFactors);
    }
    let k_start = factors.iter().map(Signature::len).max().unwrap_or(0).max(1);
    let result = stabilize(|k| tensor_multi(factors, k), k_start, DEFAULT_CONFIRM)?;
    let bound: usize = factors.iter().map(Signature::len).sum::<usize>().max(1);
    if result.k0 > bound {
        log::warn!("stabilization index {} exceeds the sum of factor lengths {bound}", result.k0);
    }
    Ok(result)
}

/// The stable restriction of `λ` to `SO(∞)` or `Sp(∞)`.
pub fn stable_branch(lambda: &Signature, target: Family) -> Result<StableResult> {
    match target {
        Family::So => stabilize(|k| restrict_gl_to_so(lambda, k), 2 * lambda.len() + 1, DEFAULT_CONFIRM),
        Family::Sp => stabilize_step(|k| restrict_gl_to_sp(lambda, k), 2 * lambda.len() + 2, 2, DEFAULT_CONFIRM),
        Family::Gl => Err(Error::RankConstraint("branching target must be SO or Sp".into())),
    }
}

/// Multiplicity of the trivial representation in `λ₁ ⊗ ... ⊗ λ_r ⊗ μ✓` at a
/// rank where the factors' product has stabilized.
pub fn identity_multiplicity(factors: &[Signature], mu: &Signature) -> Result<u64> {
    let k0 = if factors.is_empty() { 1 } else { stable_tensor(factors)?.k0 };
    let k = k0.max(mu.len()).max(1);
    let mut all: Vec<(Signature, Variance)> = factors.iter().map(|f| (f.clone(), Variance::Direct)).collect();
    all.push((mu.clone(), Variance::Contragredient));
    Ok(diagonal_branch(&all, k)?.get(&MixedSignature::zero(k)))
}
