use std::collections::BTreeMap;
use std::fmt;

use crate::signature::{Group, MixedSignature, Signature};

/// A multiset of irreducible labels with positive multiplicities.
///
/// Iteration is in descending lexicographic order of the labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition<S: Ord = Signature> {
    group: Group,
    terms: BTreeMap<S, u64>,
}

impl<S: Ord + Clone> Decomposition<S> {
    pub fn new(group: Group) -> Self {
        Decomposition { group, terms: BTreeMap::new() }
    }

    pub fn from_terms(group: Group, terms: impl IntoIterator<Item = (S, u64)>) -> Self {
        let mut d = Decomposition::new(group);
        for (s, m) in terms {
            d.add(s, m);
        }
        d
    }

    pub fn group(&self) -> Group {
        self.group
    }

    /// Adds `mult` copies of `sig`; zero multiplicities are not stored.
    pub fn add(&mut self, sig: S, mult: u64) {
        if mult > 0 {
            *self.terms.entry(sig).or_insert(0) += mult;
        }
    }

    pub fn get(&self, sig: &S) -> u64 {
        self.terms.get(sig).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending order.
    pub fn iter(&self) -> impl Iterator<Item = (&S, u64)> + '_ {
        self.terms.iter().rev().map(|(s, &m)| (s, m))
    }

    pub fn signatures(&self) -> impl Iterator<Item = &S> + '_ {
        self.terms.keys().rev()
    }

    /// Sum of all multiplicities.
    pub fn total_multiplicity(&self) -> u64 {
        self.terms.values().sum()
    }

    /// Equality of term maps, ignoring the group tag.
    pub fn same_terms(&self, other: &Decomposition<S>) -> bool {
        self.terms == other.terms
    }

    pub fn with_group(mut self, group: Group) -> Self {
        self.group = group;
        self
    }

    pub fn map_signatures<T: Ord + Clone>(&self, group: Group, f: impl Fn(&S) -> T) -> Decomposition<T> {
        Decomposition::from_terms(group, self.terms.iter().map(|(s, &m)| (f(s), m)))
    }
}

impl Decomposition<Signature> {
    /// Keeps only the terms of length at most `max_len`.
    pub fn truncated(&self, max_len: usize) -> Self {
        Decomposition {
            group: self.group,
            terms: self.terms.iter().filter(|(s, _)| s.len() <= max_len).map(|(s, &m)| (s.clone(), m)).collect(),
        }
    }
}

impl Decomposition<MixedSignature> {
    /// Converts to trimmed signatures when no label has a negative part.
    pub fn to_nonnegative(&self) -> Option<Decomposition<Signature>> {
        let mut out = Decomposition::new(self.group);
        for (s, &m) in &self.terms {
            out.add(s.to_signature()?, m);
        }
        Some(out)
    }
}

impl<S: Ord + Clone + fmt::Display> fmt::Display for Decomposition<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (s, m) in self.iter() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if m != 1 {
                write!(f, "{m}")?;
            }
            write!(f, "({s})")?;
        }
        Ok(())
    }
}
