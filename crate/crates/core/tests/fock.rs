mod common;

use common::{partitions_up_to, sig};
use isotypic::fock::{
    euler, harmonic_project_rank1, hwv_so_general, hwv_so_rank1, is_harmonic, ladder_constant, laplacian, mat_mul, p0,
    parse_poly_in, rational_matrix, sl2_generators, transpose, verify_sl2, verify_sp2n, verify_supq, FockPoly,
    GaussRat, Shape, TranslateSide, WeylOp,
};
use num_rational::BigRational;
use proptest::prelude::*;

fn gauss() -> impl Strategy<Value = GaussRat> {
    (-4i64..=4, 1i64..=3, -3i64..=3).prop_map(|(p, q, im)| {
        GaussRat::new(BigRational::new(p.into(), q.into()), BigRational::from_integer(im.into()))
    })
}

fn poly(shape: Shape, max_degree: u32, max_terms: usize) -> impl Strategy<Value = FockPoly> {
    let nvars = shape.nvars();
    proptest::collection::vec((proptest::collection::vec(0..=max_degree, nvars), gauss()), 0..=max_terms).prop_map(
        move |terms| {
            let mut f = FockPoly::zero(shape);
            for (mut e, c) in terms {
                while e.iter().sum::<u32>() > max_degree {
                    let i = e.iter().position(|&x| x > 0).unwrap();
                    e[i] -= 1;
                }
                f.add_term(e, c);
            }
            f
        },
    )
}

fn homogeneous(k: usize, degree: u32, max_terms: usize) -> impl Strategy<Value = FockPoly> {
    let shape = Shape::new(1, k);
    proptest::collection::vec((proptest::collection::vec(0..k, degree as usize), gauss()), 1..=max_terms).prop_map(
        move |terms| {
            let mut f = FockPoly::zero(shape);
            for (vars, c) in terms {
                let mut e = vec![0; k];
                for v in vars {
                    e[v] += 1;
                }
                f.add_term(e, c);
            }
            f
        },
    )
}

fn orthogonal() -> Vec<Vec<GaussRat>> {
    rational_matrix(&[&[(3, 5), (4, 5)], &[(-4, 5), (3, 5)]])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pairing_adjointness(f in poly(Shape::new(2, 2), 3, 4), g in poly(Shape::new(2, 2), 4, 4), v in 0usize..4) {
        let x = FockPoly::variable(f.shape(), v);
        prop_assert_eq!((&x * &f).pairing(&g).unwrap(), f.pairing(&g.derivative(v)).unwrap());
    }

    #[test]
    fn pairing_is_hermitian(f in poly(Shape::new(1, 3), 3, 4), g in poly(Shape::new(1, 3), 3, 4)) {
        prop_assert_eq!(f.pairing(&g).unwrap(), g.pairing(&f).unwrap().conj());
    }

    #[test]
    fn unitarity(f in poly(Shape::new(2, 2), 4, 4), g in poly(Shape::new(2, 2), 4, 4), left in any::<bool>()) {
        let side = if left { TranslateSide::LeftTranspose } else { TranslateSide::Right };
        let u = orthogonal();
        let (tf, tg) = (f.translate(&u, side).unwrap(), g.translate(&u, side).unwrap());
        prop_assert_eq!(tf.pairing(&tg).unwrap(), f.pairing(&g).unwrap());
    }

    #[test]
    fn translation_composes(f in poly(Shape::new(1, 2), 3, 4), a in proptest::collection::vec(-2i64..=2, 4), b in proptest::collection::vec(-2i64..=2, 4)) {
        let m = |v: &[i64]| rational_matrix(&[&[(v[0], 1), (v[1], 1)], &[(v[2], 1), (v[3], 1)]]);
        let (ga, gb) = (m(&a), m(&b));
        let step = f.translate(&ga, TranslateSide::Right).unwrap().translate(&gb, TranslateSide::Right).unwrap();
        prop_assert_eq!(step, f.translate(&mat_mul(&gb, &ga), TranslateSide::Right).unwrap());
    }

    #[test]
    fn translation_adjoint_is_transpose(f in poly(Shape::new(1, 2), 3, 4), g in poly(Shape::new(1, 2), 3, 4), a in proptest::collection::vec(-2i64..=2, 4)) {
        let m = rational_matrix(&[&[(a[0], 1), (a[1], 1)], &[(a[2], 1), (a[3], 1)]]);
        let lhs = f.translate(&m, TranslateSide::Right).unwrap().pairing(&g).unwrap();
        let rhs = f.pairing(&g.translate(&transpose(&m), TranslateSide::Right).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn harmonic_projection_is_exact(
        (k, m, f) in (2usize..=5, 0u32..=8).prop_flat_map(|(k, m)| homogeneous(k, m, 3).prop_map(move |f| (k, m, f)))
    ) {
        let parts = harmonic_project_rank1(&f, k).unwrap();
        let p = p0(k);
        let mut sum = FockPoly::zero(f.shape());
        for (j, h) in &parts {
            prop_assert!(is_harmonic(h));
            prop_assert_eq!(h.homogeneous_degree(), Some(m - 2 * j));
            sum = &sum + &(&p.pow(*j) * h);
        }
        prop_assert_eq!(sum, f);
    }

    #[test]
    fn x_minus_of_p0_times_f(f in homogeneous(3, 3, 4)) {
        let k = 3;
        let x_minus = sl2_generators(k).x_minus;
        let p = p0(k);
        let lhs = x_minus.apply(&(&p * &f)).unwrap();
        let lap = laplacian(f.shape(), 0, 0).apply(&f).unwrap();
        let rhs = &f.scale(&GaussRat::from_int(k as i64 + 6)) + &(&p * &lap).scale(&GaussRat::from_ratio(1, 2));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn weyl_composition_matches_application(f in poly(Shape::new(1, 2), 3, 3), a in 0usize..2, b in 0usize..2) {
        let sh = f.shape();
        let op = &WeylOp::deriv(sh, a) * &WeylOp::mul_var(sh, b);
        let direct = &FockPoly::variable(sh, b) * &f;
        prop_assert_eq!(op.apply(&f).unwrap(), direct.derivative(a));
    }

    #[test]
    fn text_round_trip(f in poly(Shape::with_w(2, 1, 2), 3, 4)) {
        prop_assert_eq!(parse_poly_in(&f.to_string(), f.shape()).unwrap(), f);
    }
}

#[test]
fn monomial_norms_and_orthogonality() {
    let sh = Shape::new(2, 3);
    let z = |a, i| FockPoly::z(sh, a, i);
    let f = &z(0, 0).pow(2) * &z(1, 2);
    assert_eq!(f.pairing(&f).unwrap(), GaussRat::from_int(2));
    assert_eq!(f.pairing(&(&z(0, 0) * &z(1, 2).pow(2))).unwrap(), GaussRat::zero());
    let g = z(0, 1).pow(3).scale(&GaussRat::i());
    assert_eq!(g.pairing(&g).unwrap(), GaussRat::from_int(6));
    assert_eq!(g.pairing(&z(0, 1).pow(3)).unwrap(), &GaussRat::from_int(6) * &GaussRat::i());
}

#[test]
fn ladder_identity() {
    for k in [3usize, 5] {
        let x_minus = sl2_generators(k).x_minus;
        let p = p0(k);
        for r in 0..=4 {
            let h = hwv_so_rank1(r, k).unwrap();
            assert!(is_harmonic(&h));
            for j in 1..=4 {
                let lhs = x_minus.apply(&(&p.pow(j) * &h)).unwrap();
                let c = j as i64 * (k as i64 + 2 * (r as i64 + j as i64 - 1));
                assert_eq!(ladder_constant(j, r, k), c);
                assert_eq!(lhs, (&p.pow(j - 1) * &h).scale(&GaussRat::from_int(c)), "j={j} r={r} k={k}");
            }
        }
    }
}

#[test]
fn euler_eigenvalue() {
    for k in [3usize, 4, 5] {
        let e = sl2_generators(k).e;
        let p = p0(k);
        for r in 0..=3 {
            let h = hwv_so_rank1(r, k).unwrap();
            for j in 0..=3u32 {
                let f = &p.pow(j) * &h;
                let lambda = GaussRat::from_ratio(k as i64 + 2 * (r as i64 + 2 * j as i64), 2);
                assert_eq!(e.apply(&f).unwrap(), f.scale(&lambda), "k={k} r={r} j={j}");
            }
        }
    }
}

#[test]
fn euler_operator_counts_degree() {
    let sh = Shape::new(2, 2);
    let f = &FockPoly::z(sh, 0, 0).pow(2) * &FockPoly::z(sh, 1, 1);
    assert_eq!(euler(sh, 0, 0).apply(&f).unwrap(), f.scale(&GaussRat::from_int(2)));
    assert_eq!(euler(sh, 1, 1).apply(&f).unwrap(), f);
}

#[test]
fn sl2_and_sp2n_relations() {
    for k in [5, 7, 8] {
        assert!(verify_sl2(k).iter().all(|c| c.holds()), "sl2 k={k}");
        for n in 1..=3 {
            for c in verify_sp2n(n, k) {
                assert!(c.holds(), "sp2n n={n} k={k}: {} {:?}", c.name, c.failures);
            }
        }
    }
}

#[test]
fn supq_relations() {
    for (p, q, k) in [(1, 1, 3), (1, 1, 4), (2, 1, 3)] {
        for c in verify_supq(p, q, k) {
            assert!(c.holds(), "p={p} q={q} k={k}: {}", c.name);
        }
    }
}

#[test]
fn so_general_vectors_are_harmonic() {
    for k in [5, 6] {
        for mu in [sig(&[1]), sig(&[2]), sig(&[1, 1]), sig(&[2, 1])] {
            let f = hwv_so_general(&mu, 2, k).unwrap();
            assert!(!f.is_zero());
            let sh = f.shape();
            for a in 0..2 {
                for b in 0..2 {
                    assert!(laplacian(sh, a, b).apply(&f).unwrap().is_zero(), "{mu} k={k} ({a},{b})");
                }
            }
        }
        for mu in partitions_up_to(4, 2) {
            assert!(is_harmonic(&hwv_so_general(&mu, 2, k).unwrap()), "{mu} k={k}");
        }
    }
}
