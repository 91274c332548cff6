//! Littlewood–Richardson coefficients and `GL(k)` tensor-product decompositions.
//!
//! Coefficients are counted by depth-first enumeration of LR skew tableaux:
//! rows of `ν/λ` are filled top to bottom and right to left (the reverse
//! reading order), so the lattice-word condition can be enforced on every
//! prefix. Results are memoized process-wide.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::signature::{Group, MixedSignature, Signature};

type MemoKey = (Signature, Signature, Signature);

fn memo() -> &'static RwLock<HashMap<MemoKey, u64>> {
    static MEMO: OnceLock<RwLock<HashMap<MemoKey, u64>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Number of memoized coefficients.
pub fn memo_len() -> usize {
    memo().read().map(|m| m.len()).unwrap_or(0)
}

/// `c^ν_{λμ}`: the number of LR tableaux of shape `ν/λ` and content `μ`.
pub fn lr_coefficient(lambda: &Signature, mu: &Signature, nu: &Signature) -> u64 {
    if nu.weight() != lambda.weight() + mu.weight() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    if mu.is_empty() || lambda.is_empty() {
        return u64::from(if mu.is_empty() { lambda == nu } else { mu == nu });
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(&c) = memo().read().ok().and_then(|m| m.get(&key).copied()).as_ref() {
        return c;
    }
    let c = count_lr_tableaux(lambda, mu, nu);
    if let Ok(mut m) = memo().write() {
        m.insert(key, c);
    }
    c
}

struct Filler<'a> {
    lambda: &'a Signature,
    content: Vec<u32>,
    counts: Vec<u32>,
    // skew cells in reverse reading order: rows top to bottom, each right to left
    cells: Vec<(usize, usize)>,
    entries: Vec<Vec<u8>>,
    row_end: Vec<usize>,
}

impl Filler<'_> {
    fn fill(&mut self, idx: usize) -> u64 {
        let Some(&(r, c)) = self.cells.get(idx) else {
            return 1;
        };
        let right = if c + 1 < self.row_end[r] { self.entries[r][c + 1] } else { u8::MAX };
        let above = if r > 0 && c >= self.lambda.part(r - 1) as usize { self.entries[r - 1][c] } else { 0 };
        let max_value = (self.content.len() as u8).min(right);
        let mut total = 0;
        for v in (above + 1)..=max_value {
            let i = (v - 1) as usize;
            if self.counts[i] >= self.content[i] || (i > 0 && self.counts[i] >= self.counts[i - 1]) {
                continue;
            }
            self.counts[i] += 1;
            self.entries[r][c] = v;
            total += self.fill(idx + 1);
            self.counts[i] -= 1;
        }
        total
    }
}

fn count_lr_tableaux(lambda: &Signature, mu: &Signature, nu: &Signature) -> u64 {
    let row_end: Vec<usize> = (0..nu.len()).map(|r| nu.part(r) as usize).collect();
    let cells = (0..nu.len()).flat_map(|r| (lambda.part(r) as usize..row_end[r]).rev().map(move |c| (r, c))).collect();
    let mut filler = Filler {
        lambda,
        content: mu.parts().to_vec(),
        counts: vec![0; mu.len()],
        cells,
        entries: row_end.iter().map(|&e| vec![0; e]).collect(),
        row_end,
    };
    filler.fill(0)
}

/// Partitions `ν ⊇ base` with `|ν| = |base| + extra`, at most `max_len` rows,
/// and no row growing by more than `row_cap`.
fn candidates(base: &Signature, extra: u32, row_cap: u32, max_len: usize) -> Vec<Signature> {
    fn rec(
        base: &Signature,
        row: usize,
        remaining: u32,
        row_cap: u32,
        max_len: usize,
        cur: &mut Vec<u32>,
        out: &mut Vec<Signature>,
    ) {
        if remaining == 0 {
            let mut parts = cur.clone();
            parts.extend((row..base.len()).map(|i| base.part(i)));
            out.push(Signature::new(parts));
            return;
        }
        if row >= max_len {
            return;
        }
        let lo = base.part(row);
        let prev = if row == 0 { u32::MAX } else { cur[row - 1] };
        let hi = prev.min(lo + row_cap.min(remaining));
        for v in (lo..=hi).rev() {
            cur.push(v);
            rec(base, row + 1, remaining - (v - lo), row_cap, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(base, 0, extra, row_cap, max_len, &mut Vec::new(), &mut out);
    out
}

fn check_len(sig: &Signature, rank: usize) -> Result<()> {
    if sig.len() > rank {
        return Err(Error::RankTooSmall { len: sig.len(), rank });
    }
    Ok(())
}

/// All `ν` with `c^ν_{λμ} > 0`, of length at most `max_len`.
fn lr_product(lambda: &Signature, mu: &Signature, max_len: usize) -> Vec<(Signature, u64)> {
    // enumerate skew shapes over the heavier factor: fewer added boxes
    let (base, content) = if lambda.weight() >= mu.weight() { (lambda, mu) } else { (mu, lambda) };
    let max_len = max_len.min(base.len() + content.len());
    candidates(base, content.weight(), content.part(0), max_len)
        .into_iter()
        .filter_map(|nu| {
            let c = lr_coefficient(base, content, &nu);
            (c > 0).then_some((nu, c))
        })
        .collect()
}

/// `λ ⊗ μ` for `GL(k)`.
pub fn tensor_pair(lambda: &Signature, mu: &Signature, rank: usize) -> Result<Decomposition> {
    check_len(lambda, rank)?;
    check_len(mu, rank)?;
    Ok(Decomposition::from_terms(Group::gl(rank), lr_product(lambda, mu, rank)))
}

/// Iterated tensor product, multiplied in ascending weight order.
pub fn tensor_multi(factors: &[Signature], rank: usize) -> Result<Decomposition> {
    for f in factors {
        check_len(f, rank)?;
    }
    let mut order: Vec<&Signature> = factors.iter().collect();
    order.sort_by_key(|s| s.weight());
    let mut acc = Decomposition::from_terms(Group::gl(rank), [(Signature::trivial(), 1)]);
    for factor in order {
        let mut next = Decomposition::new(Group::gl(rank));
        for (nu, m) in acc.iter() {
            for (rho, c) in lr_product(nu, factor, rank) {
                next.add(rho, m * c);
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// `σ ⊗ τ` for rational `GL(k)` representations, via determinant shifts.
pub fn tensor_mixed(
    sigma: &MixedSignature,
    tau: &MixedSignature,
    rank: usize,
) -> Result<Decomposition<MixedSignature>> {
    for s in [sigma, tau] {
        if s.rank() != rank {
            return Err(Error::RankMismatch { expected: rank, found: s.rank() });
        }
    }
    let (a, b) = (sigma.nonnegative_shift(), tau.nonnegative_shift());
    tensor_mixed_with_shifts(sigma, tau, rank, a, b)
}

/// As [`tensor_mixed`] with explicit shifts; `a` and `b` must make the
/// shifted factors nonnegative.
pub fn tensor_mixed_with_shifts(
    sigma: &MixedSignature,
    tau: &MixedSignature,
    rank: usize,
    a: i64,
    b: i64,
) -> Result<Decomposition<MixedSignature>> {
    let lift = |s: &MixedSignature, c: i64| {
        s.shift(c).to_signature().ok_or_else(|| Error::BadSignature(format!("shift {c} leaves ({s}) negative")))
    };
    let pair = tensor_pair(&lift(sigma, a)?, &lift(tau, b)?, rank)?;
    let mut out = Decomposition::new(Group::gl(rank));
    for (nu, m) in pair.iter() {
        out.add(nu.to_mixed(rank)?.shift(-(a + b)), m);
    }
    Ok(out)
}

/// Reverse-and-negate.
pub fn contragredient(sigma: &MixedSignature) -> MixedSignature {
    sigma.contragredient()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(parts: &[u32]) -> Signature {
        Signature::new(parts.to_vec())
    }

    fn m(parts: &[i64]) -> MixedSignature {
        MixedSignature::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(lr_coefficient(&s(&[1]), &s(&[1]), &s(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&s(&[2, 1]), &s(&[1]), &s(&[4])), 0);
        assert_eq!(lr_coefficient(&s(&[2, 1]), &s(&[2, 1]), &s(&[3, 2, 1])), 2);
        assert_eq!(lr_coefficient(&s(&[]), &s(&[2]), &s(&[2])), 1);
        assert_eq!(lr_coefficient(&s(&[1]), &s(&[]), &s(&[2])), 0);
    }

    #[test]
    fn pair_examples() {
        let d = tensor_pair(&s(&[1]), &s(&[1]), 2).unwrap();
        assert_eq!(d.to_string(), "(2) + (1,1)");
        let d = tensor_pair(&s(&[1]), &s(&[1]), 1).unwrap();
        assert_eq!(d.to_string(), "(2)");
        let d = tensor_pair(&s(&[3, 1]), &s(&[]), 4).unwrap();
        assert_eq!(d.to_string(), "(3,1)");
        assert_eq!(tensor_pair(&s(&[1, 1]), &s(&[1]), 1).unwrap_err().name(), "RankTooSmall");
    }

    #[test]
    fn mixed_examples() {
        let d = tensor_mixed(&m(&[1, 0]), &m(&[0, -1]), 2).unwrap();
        assert_eq!(d.to_string(), "(1,-1) + (0,0)");
        let d = tensor_mixed(&m(&[1, 0, 0]), &m(&[0, 0, -1]), 3).unwrap();
        assert_eq!(d.to_string(), "(1,0,-1) + (0,0,0)");
        let sigma = m(&[2, 0, -1]);
        let d = tensor_mixed(&sigma, &MixedSignature::zero(3), 3).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d.get(&sigma), 1);
        assert_eq!(tensor_mixed(&m(&[1, 0]), &m(&[0]), 2).unwrap_err().name(), "RankMismatch");
    }

    #[test]
    fn contragredient_examples() {
        assert_eq!(contragredient(&m(&[2, 1, 0])), m(&[0, -1, -2]));
        assert_eq!(contragredient(&m(&[0, 0])), m(&[0, 0]));
        assert_eq!(contragredient(&m(&[3, 0, 0, -1])), m(&[1, 0, 0, -3]));
    }

    #[test]
    fn shifts_do_not_matter() {
        let (x, y) = (m(&[1, 0, -2]), m(&[0, -1, -1]));
        let base = tensor_mixed(&x, &y, 3).unwrap();
        for (a, b) in [(2, 1), (3, 5), (4, 4)] {
            assert_eq!(tensor_mixed_with_shifts(&x, &y, 3, a, b).unwrap(), base);
        }
    }

    #[test]
    fn empty_product_is_trivial() {
        let d = tensor_multi(&[], 3).unwrap();
        assert_eq!(d.to_string(), "(0)");
    }
}
