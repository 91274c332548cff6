//! Generator families of the dual Lie algebras acting on `F_{n×k}`.

use super::gauss::GaussRat;
use super::poly::Shape;
use super::weyl::WeylOp;

/// `L_{αβ} = Σ_i Z_{αi} ∂/∂Z_{βi}`.
pub fn euler(shape: Shape, alpha: usize, beta: usize) -> WeylOp {
    let mut op = WeylOp::zero(shape);
    for i in 0..shape.k {
        op = &op + &(&WeylOp::mul_var(shape, shape.z(alpha, i)) * &WeylOp::deriv(shape, shape.z(beta, i)));
    }
    op
}

/// `p_{αβ} = Σ_i Z_{αi} Z_{βi}` as a multiplication operator.
pub fn inner_product(shape: Shape, alpha: usize, beta: usize) -> WeylOp {
    let mut op = WeylOp::zero(shape);
    for i in 0..shape.k {
        op = &op + &(&WeylOp::mul_var(shape, shape.z(alpha, i)) * &WeylOp::mul_var(shape, shape.z(beta, i)));
    }
    op
}

/// `Δ_{αβ} = Σ_i ∂²/∂Z_{αi}∂Z_{βi}`.
pub fn laplacian(shape: Shape, alpha: usize, beta: usize) -> WeylOp {
    let mut op = WeylOp::zero(shape);
    for i in 0..shape.k {
        op = &op + &(&WeylOp::deriv(shape, shape.z(alpha, i)) * &WeylOp::deriv(shape, shape.z(beta, i)));
    }
    op
}

/// The `sl₂` triple on `F_{1×k}`.
#[derive(Clone, Debug)]
pub struct Sl2 {
    pub k: usize,
    pub e: WeylOp,
    pub x_plus: WeylOp,
    pub x_minus: WeylOp,
}

/// `E = k/2 + L`, `X⁺ = p₀/2`, `X⁻ = Δ/2`.
pub fn sl2_generators(k: usize) -> Sl2 {
    let shape = Shape::new(1, k);
    let half = GaussRat::from_ratio(1, 2);
    Sl2 {
        k,
        e: &WeylOp::scalar(shape, GaussRat::from_ratio(k as i64, 2)) + &euler(shape, 0, 0),
        x_plus: inner_product(shape, 0, 0).scale(&half),
        x_minus: laplacian(shape, 0, 0).scale(&half),
    }
}

/// The `sp₂ₙ` family `{E_{αβ}, P_{αβ}, D_{αβ}}` on `F_{n×k}`.
#[derive(Clone, Debug)]
pub struct Sp2n {
    pub n: usize,
    pub k: usize,
    pub e: Vec<Vec<WeylOp>>,
    pub p: Vec<Vec<WeylOp>>,
    pub d: Vec<Vec<WeylOp>>,
}

/// `E_{αβ} = L_{αβ} + (k/2)δ_{αβ}`, `P_{αβ} = -p_{αβ}`, `D_{αβ} = Δ_{αβ}`.
pub fn sp2n_generators(n: usize, k: usize) -> Sp2n {
    let shape = Shape::new(n, k);
    let grid = |f: &dyn Fn(usize, usize) -> WeylOp| -> Vec<Vec<WeylOp>> {
        (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
    };
    Sp2n {
        n,
        k,
        e: grid(&|a, b| {
            let l = euler(shape, a, b);
            if a == b {
                &l + &WeylOp::scalar(shape, GaussRat::from_ratio(k as i64, 2))
            } else {
                l
            }
        }),
        p: grid(&|a, b| -&inner_product(shape, a, b)),
        d: grid(&|a, b| laplacian(shape, a, b)),
    }
}

/// Mixed invariants `p_{αβ} = Σ_i Z_{αi} W_{βi}` and Laplacians
/// `Δ_{αβ} = Σ_i ∂²/∂Z_{αi}∂W_{βi}` on `F_{(p+q)×k}`.
#[derive(Clone, Debug)]
pub struct SupqLaplacians {
    pub p: usize,
    pub q: usize,
    pub k: usize,
    pub invariants: Vec<Vec<WeylOp>>,
    pub laplacians: Vec<Vec<WeylOp>>,
}

pub fn supq_laplacians(p: usize, q: usize, k: usize) -> SupqLaplacians {
    let shape = Shape::with_w(p, q, k);
    let mut invariants = Vec::with_capacity(p);
    let mut laplacians = Vec::with_capacity(p);
    for a in 0..p {
        let (mut inv_row, mut lap_row) = (Vec::with_capacity(q), Vec::with_capacity(q));
        for b in 0..q {
            let (mut inv, mut lap) = (WeylOp::zero(shape), WeylOp::zero(shape));
            for i in 0..k {
                let (z, w) = (shape.z(a, i), shape.w(b, i));
                inv = &inv + &(&WeylOp::mul_var(shape, z) * &WeylOp::mul_var(shape, w));
                lap = &lap + &(&WeylOp::deriv(shape, z) * &WeylOp::deriv(shape, w));
            }
            inv_row.push(inv);
            lap_row.push(lap);
        }
        invariants.push(inv_row);
        laplacians.push(lap_row);
    }
    SupqLaplacians { p, q, k, invariants, laplacians }
}

/// Outcome of checking one family of operator identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: &'static str,
    /// Number of index combinations checked.
    pub checked: usize,
    /// Index combinations where the identity failed.
    pub failures: Vec<Vec<usize>>,
}

impl RelationCheck {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

fn family(name: &'static str, dims: &[usize], mut check: impl FnMut(&[usize]) -> bool) -> RelationCheck {
    let mut idx = vec![0; dims.len()];
    let mut out = RelationCheck { name, checked: 0, failures: Vec::new() };
    if dims.contains(&0) {
        return out;
    }
    loop {
        out.checked += 1;
        if !check(&idx) {
            out.failures.push(idx.clone());
        }
        let mut pos = dims.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < dims[pos] {
                break;
            }
            idx[pos] = 0;
        }
    }
}

fn delta(a: usize, b: usize) -> bool {
    a == b
}

/// `Σ` of the operators whose Kronecker conditions hold.
fn delta_sum(shape: Shape, terms: &[(bool, &WeylOp, i64)]) -> WeylOp {
    let mut out = WeylOp::zero(shape);
    for &(on, op, sign) in terms {
        if on {
            out = &out + &op.scale(&GaussRat::from_int(sign));
        }
    }
    out
}

/// `[E,X⁺] = 2X⁺`, `[E,X⁻] = -2X⁻`, `[X⁻,X⁺] = E`.
pub fn verify_sl2(k: usize) -> Vec<RelationCheck> {
    let g = sl2_generators(k);
    let two = GaussRat::from_int(2);
    vec![
        family("[E,X+] = 2X+", &[], |_| g.e.commutator(&g.x_plus) == g.x_plus.scale(&two)),
        family("[E,X-] = -2X-", &[], |_| g.e.commutator(&g.x_minus) == g.x_minus.scale(&-&two)),
        family("[X-,X+] = E", &[], |_| g.x_minus.commutator(&g.x_plus) == g.e),
    ]
}

/// The `[P,D]` relation with the index pattern that the generators satisfy:
/// `δ_{αμ}E_{βν} + δ_{αν}E_{βμ} + δ_{βμ}E_{αν} + δ_{βν}E_{αμ}`.
pub fn pd_bracket_expected(g: &Sp2n, [a, b, m, n]: [usize; 4]) -> WeylOp {
    let shape = Shape::new(g.n, g.k);
    delta_sum(
        shape,
        &[
            (delta(a, m), &g.e[b][n], 1),
            (delta(a, n), &g.e[b][m], 1),
            (delta(b, m), &g.e[a][n], 1),
            (delta(b, n), &g.e[a][m], 1),
        ],
    )
}

/// The `[P,D]` right-hand side with the transposed `E` indices,
/// `δ_{αμ}E_{νβ} + δ_{αν}E_{μβ} + δ_{βμ}E_{να} + δ_{βν}E_{μα}`.
pub fn pd_bracket_transposed(g: &Sp2n, [a, b, m, n]: [usize; 4]) -> WeylOp {
    let shape = Shape::new(g.n, g.k);
    delta_sum(
        shape,
        &[
            (delta(a, m), &g.e[n][b], 1),
            (delta(a, n), &g.e[m][b], 1),
            (delta(b, m), &g.e[n][a], 1),
            (delta(b, n), &g.e[m][a], 1),
        ],
    )
}

/// All commutation relations of the `sp₂ₙ` family over every index combination.
pub fn verify_sp2n(n: usize, k: usize) -> Vec<RelationCheck> {
    let g = sp2n_generators(n, k);
    let shape = Shape::new(n, k);
    let four = [n, n, n, n];
    vec![
        family("[E_ab,E_mn] = d_bm E_an - d_an E_mb", &four, |i| {
            let (a, b, m, nn) = (i[0], i[1], i[2], i[3]);
            let rhs = delta_sum(shape, &[(delta(b, m), &g.e[a][nn], 1), (delta(a, nn), &g.e[m][b], -1)]);
            g.e[a][b].commutator(&g.e[m][nn]) == rhs
        }),
        family("[E_ab,P_mn] = d_bm P_an + d_bn P_am", &four, |i| {
            let (a, b, m, nn) = (i[0], i[1], i[2], i[3]);
            let rhs = delta_sum(shape, &[(delta(b, m), &g.p[a][nn], 1), (delta(b, nn), &g.p[a][m], 1)]);
            g.e[a][b].commutator(&g.p[m][nn]) == rhs
        }),
        family("[E_ab,D_mn] = -d_am D_bn - d_an D_bm", &four, |i| {
            let (a, b, m, nn) = (i[0], i[1], i[2], i[3]);
            let rhs = delta_sum(shape, &[(delta(a, m), &g.d[b][nn], -1), (delta(a, nn), &g.d[b][m], -1)]);
            g.e[a][b].commutator(&g.d[m][nn]) == rhs
        }),
        family("[P_ab,D_mn] = d_am E_bn + d_an E_bm + d_bm E_an + d_bn E_am", &four, |i| {
            g.p[i[0]][i[1]].commutator(&g.d[i[2]][i[3]]) == pd_bracket_expected(&g, [i[0], i[1], i[2], i[3]])
        }),
        family("[P_ab,P_mn] = [D_ab,D_mn] = 0", &four, |i| {
            g.p[i[0]][i[1]].commutator(&g.p[i[2]][i[3]]).is_zero()
                && g.d[i[0]][i[1]].commutator(&g.d[i[2]][i[3]]).is_zero()
        }),
        family("P_ab = P_ba, D_ab = D_ba", &[n, n], |i| {
            g.p[i[0]][i[1]] == g.p[i[1]][i[0]] && g.d[i[0]][i[1]] == g.d[i[1]][i[0]]
        }),
        family("P_ab^+ = -D_ab, E_ab^+ = E_ba", &[n, n], |i| {
            g.p[i[0]][i[1]].adjoint() == -&g.d[i[0]][i[1]] && g.e[i[0]][i[1]].adjoint() == g.e[i[1]][i[0]]
        }),
    ]
}

/// `[Δ_ab, Δ_mn] = 0` and `[p_ab, p_mn] = 0` for the mixed family.
pub fn verify_supq(p: usize, q: usize, k: usize) -> Vec<RelationCheck> {
    let s = supq_laplacians(p, q, k);
    let dims = [p, q, p, q];
    vec![
        family("[Lap_ab,Lap_mn] = 0", &dims, |i| {
            s.laplacians[i[0]][i[1]].commutator(&s.laplacians[i[2]][i[3]]).is_zero()
        }),
        family("[p_ab,p_mn] = 0", &dims, |i| s.invariants[i[0]][i[1]].commutator(&s.invariants[i[2]][i[3]]).is_zero()),
    ]
}
