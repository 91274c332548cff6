//! Restriction from `U(k)` to `SO(k)` and `Sp(k)` in the stable range, the
//! dual-side multiplicity formula, and the two-sided reciprocity check.

use crate::characters::{greedy_decompose, schur_laurent_on_so_torus};
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::lr::{lr_coefficient, tensor_mixed};
use crate::signature::{partitions, Family, Group, MixedSignature, Signature};

fn check_stable_range(lambda: &Signature, k: usize) -> Result<()> {
    if 2 * lambda.len() >= k && !lambda.is_empty() {
        return Err(Error::OutsideStableRange { len: lambda.len(), rank: k });
    }
    Ok(())
}

/// Partitions `μ ⊆ λ` of the given weight with at most `max_len` rows.
fn contained(lambda: &Signature, weight: u32, max_len: usize) -> Vec<Signature> {
    partitions(weight, max_len.min(lambda.len()), lambda.part(0)).into_iter().filter(|mu| lambda.contains(mu)).collect()
}

/// `Σ_δ c^λ_{μδ}` over `δ ⊆ λ` passing `keep`, for every `μ`.
fn littlewood_sum(lambda: &Signature, max_len: usize, keep: impl Fn(&Signature) -> bool) -> Vec<(Signature, u64)> {
    let mut out = Vec::new();
    for w in 0..=lambda.weight() {
        for delta in contained(lambda, w, lambda.len()).into_iter().filter(|d| keep(d)) {
            for mu in contained(lambda, lambda.weight() - w, max_len) {
                let c = lr_coefficient(&mu, &delta, lambda);
                if c > 0 {
                    out.push((mu, c));
                }
            }
        }
    }
    out
}

/// `λ|_{SO(k)}` by the Littlewood rule: `μ` occurs `Σ_{δ even rows} c^λ_{μδ}` times.
pub fn restrict_gl_to_so(lambda: &Signature, k: usize) -> Result<Decomposition> {
    check_stable_range(lambda, k)?;
    let terms = littlewood_sum(lambda, k / 2, Signature::has_even_rows);
    Ok(Decomposition::from_terms(Group::so(k), terms))
}

/// `λ|_{Sp(k)}`: `μ` occurs `Σ_{δ even columns} c^λ_{μδ}` times.
pub fn restrict_gl_to_sp(lambda: &Signature, k: usize) -> Result<Decomposition> {
    if k % 2 == 1 {
        return Err(Error::OddRank(k));
    }
    check_stable_range(lambda, k)?;
    let terms = littlewood_sum(lambda, k / 2, Signature::has_even_columns);
    Ok(Decomposition::from_terms(Group::new(Family::Sp, k)?, terms))
}

/// `(m)|_{SO(k)} = (m) + (m-2) + ...`, valid for every `k ≥ 3`.
pub fn branch_rank1_closed_form(m: u32) -> Decomposition {
    Decomposition::from_terms(Group::stable(Family::So), (0..=m / 2).map(|i| (Signature::row(m - 2 * i), 1)))
}

/// Multiplicity of the `U(n)`-type `λ` in the module with lowest type `μ`:
/// `Σ c^λ_{μδ}` over `δ` with even parts and at most `n` rows.
pub fn dual_side_multiplicity(lambda: &Signature, mu: &Signature, n: usize) -> Result<u64> {
    for s in [lambda, mu] {
        if s.len() > n {
            return Err(Error::RankTooSmall { len: s.len(), rank: n });
        }
    }
    if !lambda.contains(mu) || (lambda.weight() - mu.weight()) % 2 == 1 {
        return Ok(0);
    }
    let extra = lambda.weight() - mu.weight();
    Ok(contained(lambda, extra, n).iter().filter(|d| d.has_even_rows()).map(|d| lr_coefficient(mu, d, lambda)).sum())
}

/// One row of a [`ReciprocityReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocityRow {
    pub mu: Signature,
    pub side_a: u64,
    pub side_b: u64,
    pub agree: bool,
}

/// Both sides of the reciprocity for `λ` under the pair `(O(k), sp(2n))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocityReport {
    pub lambda: Signature,
    pub n: usize,
    pub k: usize,
    pub rows: Vec<ReciprocityRow>,
}

impl ReciprocityReport {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agree)
    }
}

/// Compares the `SO(k)` multiplicities of `λ` computed from characters
/// with the dual-side multiplicities computed from LR sums.
pub fn reciprocity_check(lambda: &Signature, n: usize, k: usize) -> Result<ReciprocityReport> {
    if lambda.len() > n {
        return Err(Error::RankTooSmall { len: lambda.len(), rank: n });
    }
    if k <= 2 * n {
        return Err(Error::OutsideStableRange { len: n, rank: k });
    }
    let chi = schur_laurent_on_so_torus(lambda, k)?;
    let side_a = greedy_decompose(&chi, &Group::so(k))?;
    let mut mus: Vec<Signature> = side_a.signatures().cloned().collect();
    for w in 0..=lambda.weight() {
        mus.extend(contained(lambda, w, n));
    }
    mus.sort_unstable_by(|a, b| b.cmp(a));
    mus.dedup();
    let mut rows = Vec::new();
    for mu in mus {
        let a = side_a.get(&mu);
        let b = if mu.len() <= n { dual_side_multiplicity(lambda, &mu, n)? } else { 0 };
        if a > 0 || b > 0 {
            rows.push(ReciprocityRow { mu, side_a: a, side_b: b, agree: a == b });
        }
    }
    Ok(ReciprocityReport { lambda: lambda.clone(), n, k, rows })
}

/// How a tensor factor is acted on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variance {
    Direct,
    Contragredient,
}

/// Restriction of an outer tensor product to the diagonal `U(k)`.
pub fn diagonal_branch(factors: &[(Signature, Variance)], k: usize) -> Result<Decomposition<MixedSignature>> {
    let mut acc = Decomposition::from_terms(Group::gl(k), [(MixedSignature::zero(k), 1)]);
    for (sig, variance) in factors {
        let mut f = sig.to_mixed(k)?;
        if *variance == Variance::Contragredient {
            f = f.contragredient();
        }
        let mut next = Decomposition::new(Group::gl(k));
        for (sigma, m) in acc.iter() {
            for (tau, c) in tensor_mixed(sigma, &f, k)?.iter() {
                next.add(tau.clone(), m * c);
            }
        }
        acc = next;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::{dim, weighted_dimension};

    fn s(parts: &[u32]) -> Signature {
        Signature::new(parts.to_vec())
    }

    #[test]
    fn so_examples() {
        assert_eq!(restrict_gl_to_so(&s(&[3]), 5).unwrap().to_string(), "(3) + (1)");
        assert_eq!(restrict_gl_to_so(&s(&[]), 3).unwrap().to_string(), "(0)");
        assert_eq!(restrict_gl_to_so(&s(&[2, 2]), 5).unwrap().to_string(), "(2,2) + (2) + (0)");
        assert_eq!(restrict_gl_to_so(&s(&[1, 1]), 4).unwrap_err().name(), "OutsideStableRange");
    }

    #[test]
    fn sp_examples() {
        assert_eq!(restrict_gl_to_sp(&s(&[1, 1]), 6).unwrap().to_string(), "(1,1) + (0)");
        assert_eq!(restrict_gl_to_sp(&s(&[]), 4).unwrap().to_string(), "(0)");
        assert_eq!(restrict_gl_to_sp(&s(&[1]), 4).unwrap().to_string(), "(1)");
        assert_eq!(restrict_gl_to_sp(&s(&[1]), 5).unwrap_err().name(), "OddRank");
    }

    #[test]
    fn rank1_closed_form() {
        assert_eq!(branch_rank1_closed_form(3).to_string(), "(3) + (1)");
        assert_eq!(branch_rank1_closed_form(0).to_string(), "(0)");
        assert_eq!(branch_rank1_closed_form(4).to_string(), "(4) + (2) + (0)");
    }

    #[test]
    fn dual_side_examples() {
        assert_eq!(dual_side_multiplicity(&s(&[6]), &s(&[2]), 1).unwrap(), 1);
        assert_eq!(dual_side_multiplicity(&s(&[5]), &s(&[2]), 1).unwrap(), 0);
        assert_eq!(dual_side_multiplicity(&s(&[2, 2]), &s(&[]), 2).unwrap(), 1);
        assert_eq!(dual_side_multiplicity(&s(&[1, 1]), &s(&[]), 1).unwrap_err().name(), "RankTooSmall");
    }

    #[test]
    fn reciprocity_examples() {
        let r = reciprocity_check(&s(&[3]), 1, 5).unwrap();
        let rows: Vec<_> = r.rows.iter().map(|x| (x.mu.clone(), x.side_a, x.side_b)).collect();
        assert_eq!(rows, vec![(s(&[3]), 1, 1), (s(&[1]), 1, 1)]);
        let r = reciprocity_check(&s(&[]), 1, 3).unwrap();
        assert_eq!(r.rows.len(), 1);
        assert!(r.all_agree());
        assert!(reciprocity_check(&s(&[2, 1]), 2, 5).unwrap().all_agree());
        assert_eq!(reciprocity_check(&s(&[1]), 2, 4).unwrap_err().name(), "OutsideStableRange");
    }

    #[test]
    fn diagonal_examples() {
        let d = diagonal_branch(&[(s(&[1]), Variance::Direct), (s(&[1]), Variance::Direct)], 3).unwrap();
        assert_eq!(d.to_string(), "(2,0,0) + (1,1,0)");
        let d = diagonal_branch(&[(s(&[1]), Variance::Direct), (s(&[1]), Variance::Contragredient)], 2).unwrap();
        assert_eq!(d.to_string(), "(1,-1) + (0,0)");
        let d = diagonal_branch(&[(s(&[2, 1]), Variance::Direct)], 3).unwrap();
        assert_eq!(d.to_string(), "(2,1,0)");
    }

    #[test]
    fn branching_dimensions() {
        for lambda in [s(&[2]), s(&[2, 1]), s(&[3, 1]), s(&[2, 2])] {
            for k in [5usize, 6, 7] {
                let gl = dim(&Group::gl(k), &lambda).unwrap();
                let so = restrict_gl_to_so(&lambda, k).unwrap();
                assert_eq!(weighted_dimension(&so, &Group::so(k)).unwrap(), gl);
                if k % 2 == 0 {
                    let sp = restrict_gl_to_sp(&lambda, k).unwrap();
                    assert_eq!(weighted_dimension(&sp, &sp.group()).unwrap(), gl);
                }
            }
        }
    }
}
