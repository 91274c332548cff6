//! Symbolic Bargmann–Fock space on `n × k` matrix variables.
//!
//! Polynomials carry Gaussian-rational coefficients and are paired by
//! `⟨f, g⟩ = Σ (r)!·f_(r)·conj(g_(r))`, under which multiplication by a
//! variable is adjoint to differentiation. Operators are normal-ordered
//! elements of the Weyl algebra, so operator identities are decided exactly.

mod gauss;
mod generators;
mod harmonic;
mod hwv;
mod poly;
mod text;
mod weyl;

pub use gauss::GaussRat;
pub use generators::{
    euler, inner_product, laplacian, pd_bracket_expected, pd_bracket_transposed, sl2_generators, sp2n_generators,
    supq_laplacians, verify_sl2, verify_sp2n, verify_supq, RelationCheck, Sl2, Sp2n, SupqLaplacians,
};
pub use harmonic::{harmonic_project_rank1, is_harmonic, ladder_constant, p0};
pub use hwv::{
    check_covariance, hwv, hwv_gl, hwv_so_general, hwv_so_rank1, hwv_upq, split_mixed, CovarianceSide, HwvKind,
    DEFAULT_TRIALS,
};
pub use poly::{identity_matrix, mat_mul, poly_det, rational_matrix, transpose, FockPoly, Shape, TranslateSide, Var};
pub use text::{parse_poly, parse_poly_in, parse_polys};
pub use weyl::{weyl_apply, weyl_commutator, WeylOp};

/// `⟨f, g⟩`.
pub fn pairing(f: &FockPoly, g: &FockPoly) -> crate::Result<GaussRat> {
    f.pairing(g)
}

/// `f(Zg)` or `f(gᵗZ)`.
pub fn translate(f: &FockPoly, g: &[Vec<GaussRat>], side: TranslateSide) -> crate::Result<FockPoly> {
    f.translate(g, side)
}
