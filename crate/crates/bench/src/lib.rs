//! Shared fixtures for the engine benchmarks.

use isotypic::fock::{FockPoly, GaussRat, Shape};
use isotypic::Signature;

/// The four one-row factors `(1) ⊗ (2) ⊗ (2) ⊗ (3)`.
pub fn remark_factors() -> Vec<Signature> {
    [1, 2, 2, 3].into_iter().map(Signature::row).collect()
}

/// A dense homogeneous polynomial of degree `m` on `F_{1×k}`: the sum of all
/// monomials with small integer coefficients.
pub fn dense_homogeneous(k: usize, m: u32) -> FockPoly {
    let shape = Shape::new(1, k);
    let mut f = FockPoly::zero(shape);
    let mut stack = vec![(Vec::new(), m)];
    while let Some((prefix, left)) = stack.pop() {
        if prefix.len() + 1 == k {
            let mut e = prefix.clone();
            e.push(left);
            let c = e.iter().enumerate().map(|(i, &x)| (i as i64 + 1) * x as i64).sum::<i64>() % 5 + 1;
            f.add_term(e, GaussRat::from_int(c));
            continue;
        }
        for x in 0..=left {
            let mut e = prefix.clone();
            e.push(x);
            stack.push((e, left - x));
        }
    }
    f
}
