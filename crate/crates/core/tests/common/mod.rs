#![allow(dead_code)]

use isotypic::signature::partitions;
use isotypic::Signature;
use proptest::prelude::*;

/// All partitions of weight at most `max_weight` with at most `max_len` rows.
pub fn partitions_up_to(max_weight: u32, max_len: usize) -> Vec<Signature> {
    (0..=max_weight).flat_map(|w| partitions(w, max_len, w)).collect()
}

pub fn partition(max_weight: u32, max_len: usize) -> impl Strategy<Value = Signature> {
    prop::sample::select(partitions_up_to(max_weight, max_len))
}

pub fn sig(parts: &[u32]) -> Signature {
    Signature::new(parts.to_vec())
}
