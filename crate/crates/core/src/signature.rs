//! Signatures (highest weights) of classical-group representations.
//!
//! A [`Signature`] is a partition stored without trailing zeros, so that
//! `(m, 0, ..., 0)` at every rank is the same value. A [`MixedSignature`]
//! carries its rank explicitly and may contain negative parts; it labels
//! rational representations of `GL(k)` such as contragredients.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing list of nonnegative parts with trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature {
    parts: Vec<u32>,
}

impl Signature {
    /// The trivial signature `()`.
    pub fn trivial() -> Self {
        Signature { parts: Vec::new() }
    }

    /// Canonical form of `parts`. Unsorted input is rejected, never repaired.
    pub fn canonicalize(parts: &[i64]) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts.to_vec()));
        }
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::NegativePart(parts.to_vec()));
        }
        let mut parts: Vec<u32> = parts.iter().map(|&p| p as u32).collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Signature { parts })
    }

    /// Builds a signature from already-valid parts.
    ///
    /// Panics if `parts` is not weakly decreasing.
    pub fn new(parts: impl Into<Vec<u32>>) -> Self {
        let mut parts = parts.into();
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "signature parts must be weakly decreasing: {parts:?}");
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Signature { parts }
    }

    /// The one-row signature `(m)`.
    pub fn row(m: u32) -> Self {
        Signature::new(vec![m])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`, the number of boxes.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero beyond the stored length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> Signature {
        let width = self.part(0) as usize;
        let parts =
            (0..width).map(|c| self.parts.iter().filter(|&&p| p as usize > c).count() as u32).collect::<Vec<_>>();
        Signature { parts }
    }

    /// Young-diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Signature) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Parts padded with zeros to length `rank`.
    ///
    /// Panics if the signature is longer than `rank`.
    pub fn padded(&self, rank: usize) -> Vec<u32> {
        assert!(self.len() <= rank);
        let mut v = self.parts.clone();
        v.resize(rank, 0);
        v
    }

    /// True when every part is even.
    pub fn has_even_rows(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    /// True when every column has even length.
    pub fn has_even_columns(&self) -> bool {
        self.conjugate().has_even_rows()
    }

    /// The mixed signature of the same weight at rank `k`.
    pub fn to_mixed(&self, rank: usize) -> Result<MixedSignature> {
        if self.len() > rank {
            return Err(Error::RankTooSmall { len: self.len(), rank });
        }
        Ok(MixedSignature { parts: self.padded(rank).into_iter().map(|p| p as i64).collect() })
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s = self.parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{s}")
    }
}

impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Signature::canonicalize(&parse_parts(s)?)
    }
}

fn parse_parts(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|p| p.trim().parse::<i64>().map_err(|_| Error::ParseSignature(s.to_string()))).collect()
}

/// A weakly decreasing integer tuple of fixed length `rank`; parts may be negative.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MixedSignature {
    parts: Vec<i64>,
}

impl MixedSignature {
    pub fn new(parts: impl Into<Vec<i64>>) -> Result<Self> {
        let parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        Ok(MixedSignature { parts })
    }

    /// The all-zero signature at rank `k`.
    pub fn zero(rank: usize) -> Self {
        MixedSignature { parts: vec![0; rank] }
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    /// Adds `c` to every part (tensoring with `det^c`).
    pub fn shift(&self, c: i64) -> MixedSignature {
        MixedSignature { parts: self.parts.iter().map(|p| p + c).collect() }
    }

    /// Signature of the dual representation: reverse and negate.
    pub fn contragredient(&self) -> MixedSignature {
        MixedSignature { parts: self.parts.iter().rev().map(|p| -p).collect() }
    }

    /// The smallest shift making every part nonnegative.
    pub fn nonnegative_shift(&self) -> i64 {
        self.parts.last().map_or(0, |&last| (-last).max(0))
    }

    /// The trimmed signature, if no part is negative.
    pub fn to_signature(&self) -> Option<Signature> {
        if self.parts.iter().any(|&p| p < 0) {
            return None;
        }
        Some(Signature::new(self.parts.iter().map(|&p| p as u32).collect::<Vec<_>>()))
    }
}

impl fmt::Display for MixedSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.parts.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{s}")
    }
}

impl FromStr for MixedSignature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MixedSignature::new(parse_parts(s)?)
    }
}

/// Entrywise shift of a mixed signature.
pub fn shift_mixed(sigma: &MixedSignature, c: i64) -> MixedSignature {
    sigma.shift(c)
}

/// Classical group families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `GL(k)`, equivalently `U(k)`.
    Gl,
    So,
    Sp,
}

impl Family {
    /// Short lowercase tag: `u`, `so`, `sp`.
    pub fn tag(self) -> &'static str {
        match self {
            Family::Gl => "u",
            Family::So => "so",
            Family::Sp => "sp",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Gl => "U",
            Family::So => "SO",
            Family::Sp => "Sp",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "u" | "gl" => Ok(Family::Gl),
            "so" => Ok(Family::So),
            "sp" => Ok(Family::Sp),
            _ => Err(Error::RankConstraint(format!("unknown group family {s:?}"))),
        }
    }
}

/// A finite rank or the inductive limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rank {
    Finite(usize),
    Stable,
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rank::Finite(k) => write!(f, "{k}"),
            Rank::Stable => f.write_str("∞"),
        }
    }
}

/// A group family at a given rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Group {
    pub family: Family,
    pub rank: Rank,
}

impl Group {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family == Family::Sp && rank % 2 == 1 {
            return Err(Error::OddRankForSp(rank));
        }
        Ok(Group { family, rank: Rank::Finite(rank) })
    }

    pub fn gl(rank: usize) -> Self {
        Group { family: Family::Gl, rank: Rank::Finite(rank) }
    }

    pub fn so(rank: usize) -> Self {
        Group { family: Family::So, rank: Rank::Finite(rank) }
    }

    pub fn stable(family: Family) -> Self {
        Group { family, rank: Rank::Stable }
    }

    pub fn finite_rank(&self) -> Option<usize> {
        match self.rank {
            Rank::Finite(k) => Some(k),
            Rank::Stable => None,
        }
    }

    /// Largest signature length labelling an irreducible of this group.
    pub fn max_length(&self) -> Option<usize> {
        self.finite_rank().map(|k| match self.family {
            Family::Gl => k,
            Family::So | Family::Sp => k / 2,
        })
    }

    /// Checks that `sig` labels an irreducible representation of this group.
    pub fn check(&self, sig: &Signature) -> Result<()> {
        match self.max_length() {
            Some(max) if sig.len() > max => Err(Error::RankConstraint(format!(
                "signature ({sig}) has length {} > {max} allowed for {self}",
                sig.len()
            ))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.rank)
    }
}

/// All partitions of `n` with at most `max_len` parts, each at most `max_part`,
/// in descending lexicographic order.
pub fn partitions(n: u32, max_len: usize, max_part: u32) -> Vec<Signature> {
    fn rec(n: u32, max_len: usize, max_part: u32, cur: &mut Vec<u32>, out: &mut Vec<Signature>) {
        if n == 0 {
            out.push(Signature { parts: cur.clone() });
            return;
        }
        if max_len == 0 {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            cur.push(p);
            rec(n - p, max_len - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_len, max_part, &mut Vec::new(), &mut out);
    out
}
