//! λ-brackets between the generators `J^{a}` (`a ∈ g♮`) and `G^{u}`
//! (`u ∈ g_{-1/2}`) of the universal minimal W-algebra, assembled exactly from
//! the structure constants of a matrix realization.
//!
//! Elements of `g♮` are carried in coordinates with respect to the fixed basis
//! `GradedDecomposition::nat`; coefficients that depend on the level are
//! [`PolyK`]s.

mod check;

pub use check::{component_levels, verify_bracket_reduction, BracketReductionReport};

use crate::exactmath::{q, qi, PolyK, RatFunK, Q};
use crate::levels::central_charge_of;
use crate::matrixalg::{
    minimal_grading, DualBases, Elem, GradedDecomposition, MatrixAlgError, SuperMatrixAlgebra,
};
use crate::rootcat::superdimensions;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum WError {
    #[error(transparent)]
    Algebra(#[from] MatrixAlgError),
    #[error("{id}: -(k+h∨)c(g,k) is not a polynomial: {value}")]
    PoleNotCancelled { id: String, value: String },
    #[error("{id}: pair ({u}, {v}) gives {found}, expected {expected}")]
    InconsistentPairs {
        id: String,
        u: String,
        v: String,
        found: String,
        expected: String,
    },
    #[error("{id}: (e_θ|[u,v]) vanishes on every basis pair")]
    NoNondegeneratePair { id: String },
    #[error("{id}: extracted p(k) = {p} is not a monic quadratic")]
    NotMonicQuadratic { id: String, p: String },
    #[error("{id}: mismatch at ({u}, {v}) in {term}: {detail}")]
    MismatchAt {
        id: String,
        u: String,
        v: String,
        term: String,
        detail: String,
    },
    #[error("{id}: form on g♮ component {component} is degenerate")]
    DegenerateComponent { id: String, component: String },
}

/// A `g♮`-valued coefficient vector, one [`PolyK`] per basis element of `g♮`.
pub type NatPoly = Vec<PolyK>;

/// Precomputed data for bracket computations on one realized algebra.
#[derive(Debug, Clone)]
pub struct WContext {
    pub alg: SuperMatrixAlgebra,
    pub dec: GradedDecomposition,
    pub db: DualBases,
    pub h_vee: Q,
    pub sdim_g: i64,
    /// `(n_i|n_j)` on the `g♮` basis.
    gram: Vec<Vec<Q>>,
    /// `½ str_{g_{1/2} ⊕ g_1}(ad n_i ad n_j)`.
    half_str: Vec<Vec<Q>>,
    /// `Σ_α κ_0(n_α, n^α)`.
    kappa_trace: Q,
    /// `sdim g♮`.
    sdim_nat: i64,
    /// `-(k+h∨) c(g,k)`.
    shifted_c: PolyK,
    /// `[u, u^γ]♮` in `g♮` coordinates, indexed `[u][γ]`.
    left: Vec<Vec<Vec<Q>>>,
    /// `[u_γ, v]♮` in `g♮` coordinates, indexed `[γ][v]`.
    right: Vec<Vec<Vec<Q>>>,
}

/// Scalar and bracket parts of `[J^{a} λ J^{b}]`.
#[derive(Debug, Clone, PartialEq)]
pub struct JJBracket {
    /// `[a,b]` in `g♮` coordinates.
    pub bracket: Vec<Q>,
    /// Coefficient of `λ·1`.
    pub lambda_scalar: PolyK,
}

/// All terms of `[G^{u} λ G^{v}]` for basis vectors `u, v ∈ g_{-1/2}`.
#[derive(Debug, Clone, PartialEq)]
pub struct GGBracket {
    /// Indices into `GradedDecomposition::gminus_half`.
    pub u: usize,
    pub v: usize,
    /// `(e_θ|[u,v])`.
    pub pairing: Q,
    pub omega_coeff: PolyK,
    /// Coefficient of `:J^{n_i} J^{n_j}:` from `(e_θ|[u,v]) Σ_α :J^{a^α}J^{a_α}:`.
    pub quad_nat: Vec<Vec<Q>>,
    /// Coefficient of `:J^{n_i} J^{n_j}:` from `Σ_γ :J^{[u,u^γ]♮}J^{[u_γ,v]♮}:`.
    pub quad_half: Vec<Vec<Q>>,
    /// Coefficient of `∂J`.
    pub deriv_term: NatPoly,
    /// Coefficient of `λJ`.
    pub lambda_term: NatPoly,
    /// Coefficient of `λ²·1`.
    pub lambda2_scalar: PolyK,
}

/// Result of [`extract_pk`].
#[derive(Debug, Clone, PartialEq)]
pub struct PkResult {
    pub p: PolyK,
    /// `(u label, v label, λ²-scalar / 2(e_θ|[u,v]))` for every pair with nonzero pairing.
    pub per_pair_witnesses: Vec<(String, String, PolyK)>,
}

fn add_scaled(out: &mut [Q], c: &Q, v: &[Q]) {
    if c.is_zero() {
        return;
    }
    for (o, x) in out.iter_mut().zip(v) {
        *o += c * x;
    }
}

fn poly_vec_from(c: &PolyK, v: &[Q]) -> NatPoly {
    v.iter().map(|x| c.scale(x)).collect()
}

fn poly_vec_add(a: &mut NatPoly, b: &NatPoly) {
    for (x, y) in a.iter_mut().zip(b) {
        *x = &*x + y;
    }
}

impl WContext {
    pub fn new(alg: SuperMatrixAlgebra) -> Result<Self, WError> {
        let dec = minimal_grading(&alg)?;
        let db = DualBases::new(&alg, &dec)?;
        let h_vee = dec.mg.h_vee.clone();
        let sdim_g = superdimensions(&alg.rd, &dec.mg).sdim_g;
        let n = dec.nat.len();
        let gram: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| alg.inner(&dec.nat[i], &dec.nat[j]))
                    .collect()
            })
            .collect();
        let mut upper: Vec<usize> = dec.ghalf.clone();
        upper.push(alg.e_theta);
        let half_str: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| alg.supertrace_on(&dec.nat[i], &dec.nat[j], &upper) * q(1, 2))
                    .collect()
            })
            .collect();
        let kappa_trace = (0..n).fold(Q::zero(), |acc, a| {
            acc + alg.kappa0(&dec, &dec.nat[a], &db.nat_dual[a])
        });
        let sdim_nat = dec
            .nat
            .iter()
            .map(|b| if alg.parity_of(b) { -1 } else { 1 })
            .sum();

        let c = central_charge_of(sdim_g, &h_vee);
        let shift = RatFunK::from_poly(&PolyK::linear(h_vee.clone()).scale(&qi(-1)));
        let prod = &shift * &c;
        let shifted_c = prod.as_poly().ok_or_else(|| WError::PoleNotCancelled {
            id: alg.rd.id.to_string(),
            value: prod.to_string(),
        })?;

        let mut ctx = WContext {
            alg,
            dec,
            db,
            h_vee,
            sdim_g,
            gram,
            half_str,
            kappa_trace,
            sdim_nat,
            shifted_c,
            left: Vec::new(),
            right: Vec::new(),
        };
        let minus: Vec<Elem> = ctx
            .dec
            .gminus_half
            .iter()
            .map(|&i| ctx.alg.basis(i))
            .collect();
        ctx.left = minus
            .iter()
            .map(|u| {
                ctx.db
                    .half_dual
                    .iter()
                    .map(|ug| ctx.nat_coords(&ctx.alg.bracket(u, ug)))
                    .collect()
            })
            .collect();
        ctx.right = ctx
            .db
            .half
            .iter()
            .map(|ug| {
                minus
                    .iter()
                    .map(|v| ctx.nat_coords(&ctx.alg.bracket(ug, v)))
                    .collect()
            })
            .collect();
        Ok(ctx)
    }

    pub fn id(&self) -> String {
        self.alg.rd.id.to_string()
    }

    pub fn nat_dim(&self) -> usize {
        self.dec.nat.len()
    }

    /// Coordinates of `a♮` in the `g♮` basis, for `a ∈ g_0`.
    pub fn nat_coords(&self, a: &[Q]) -> Vec<Q> {
        self.db
            .nat_dual
            .iter()
            .map(|d| self.alg.inner(d, a))
            .collect()
    }

    /// The element of `g` with the given `g♮` coordinates.
    pub fn nat_elem(&self, c: &[Q]) -> Elem {
        let mut out = self.alg.zero();
        for (x, b) in c.iter().zip(&self.dec.nat) {
            add_scaled(&mut out, x, b);
        }
        out
    }

    /// Label of the `i`-th basis vector of `g_{-1/2}`.
    pub fn minus_label(&self, i: usize) -> &str {
        &self.alg.labels[self.dec.gminus_half[i]]
    }

    pub fn minus_dim(&self) -> usize {
        self.dec.gminus_half.len()
    }

    /// `(e_θ|[u,v])` for basis indices into `g_{-1/2}`.
    pub fn pairing(&self, u: usize, v: usize) -> Q {
        let bu = self.alg.basis(self.dec.gminus_half[u]);
        let bv = self.alg.basis(self.dec.gminus_half[v]);
        self.alg.inner(
            &self.alg.basis(self.alg.e_theta),
            &self.alg.bracket(&bu, &bv),
        )
    }

    /// `[[e_θ,u],v]♮` as an element of `g`.
    pub fn theta_bracket(&self, u: usize, v: usize) -> Elem {
        let bu = self.alg.basis(self.dec.gminus_half[u]);
        let bv = self.alg.basis(self.dec.gminus_half[v]);
        let w = self.alg.bracket(
            &self.alg.bracket(&self.alg.basis(self.alg.e_theta), &bu),
            &bv,
        );
        self.db.nat_projection(&self.alg, &w)
    }

    /// `c'(a,b) = k(a|b) + ½ str_{g_{1/2}⊕g_1}(ad a ad b)` on `g♮` coordinates.
    pub fn c_prime(&self, a: &[Q], b: &[Q]) -> PolyK {
        let mut form = Q::zero();
        let mut tr = Q::zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                form += &xy * &self.gram[i][j];
                tr += &xy * &self.half_str[i][j];
            }
        }
        PolyK::new(vec![tr, form])
    }

    /// `-(k+h∨) c(g,k)`, checked to be polynomial on construction.
    pub fn shifted_central_charge(&self) -> &PolyK {
        &self.shifted_c
    }

    /// `[J^{a} λ J^{b}] = J^{[a,b]} + λ((k+h∨/2)(a|b) − ¼κ_0(a,b))`.
    pub fn ope_jj(&self, a: &[Q], b: &[Q]) -> JJBracket {
        let ea = self.nat_elem(a);
        let eb = self.nat_elem(b);
        let form = self.alg.inner(&ea, &eb);
        let kappa = self.alg.kappa0(&self.dec, &ea, &eb);
        let level = PolyK::linear(&self.h_vee * q(1, 2));
        let lambda_scalar = &level.scale(&form) - &PolyK::constant(kappa * q(1, 4));
        JJBracket {
            bracket: self.nat_coords(&self.alg.bracket(&ea, &eb)),
            lambda_scalar,
        }
    }

    /// Every term of `[G^{u} λ G^{v}]` for basis vectors of `g_{-1/2}`.
    pub fn ope_gg_full(&self, u: usize, v: usize) -> GGBracket {
        let n = self.nat_dim();
        let e = self.pairing(u, v);
        let h = &self.h_vee;

        let omega_coeff = PolyK::linear(h.clone()).scale(&(qi(-2) * &e));

        let mut quad_nat = vec![vec![Q::zero(); n]; n];
        if !e.is_zero() {
            for alpha in 0..n {
                let dual = self.nat_coords(&self.db.nat_dual[alpha]);
                for i in 0..n {
                    quad_nat[i][alpha] += &e * &dual[i];
                }
            }
        }

        let mut quad_half = vec![vec![Q::zero(); n]; n];
        let mut lambda_term: NatPoly = vec![PolyK::zero(); n];
        let mut c_sum = PolyK::zero();
        let mut inner_sum = vec![Q::zero(); n];
        for g in 0..self.db.half.len() {
            let a = &self.left[u][g];
            let b = &self.right[g][v];
            for i in 0..n {
                if a[i].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !b[j].is_zero() {
                        quad_half[i][j] += &a[i] * &b[j];
                    }
                }
            }
            let ab = self.alg.bracket(&self.nat_elem(a), &self.nat_elem(b));
            add_scaled(
                &mut inner_sum,
                &Q::from_integer(1.into()),
                &self.nat_coords(&ab),
            );
            c_sum = &c_sum + &self.c_prime(a, b);
        }
        poly_vec_add(&mut lambda_term, &poly_vec_from(&PolyK::one(), &inner_sum));

        let theta = self.nat_coords(&self.theta_bracket(u, v));
        let k_plus_one = PolyK::linear(qi(1));
        let deriv_term = poly_vec_from(&k_plus_one.scale(&qi(2)), &theta);
        poly_vec_add(
            &mut lambda_term,
            &poly_vec_from(&k_plus_one.scale(&qi(4)), &theta),
        );

        let half_level = PolyK::linear(h * q(1, 2));
        let bracket_part = &(&self.shifted_c + &half_level.scale(&qi(self.sdim_nat)))
            - &PolyK::constant(&self.kappa_trace * q(1, 4));
        let lambda2_scalar = (&c_sum + &bracket_part.scale(&e)).scale(&q(1, 3));

        GGBracket {
            u,
            v,
            pairing: e,
            omega_coeff,
            quad_nat,
            quad_half,
            deriv_term,
            lambda_term,
            lambda2_scalar,
        }
    }

    /// `λ²`-scalar of `[G^{u} λ G^{v}]` on all basis pairs, indexed `[u][v]`.
    pub fn lambda2_matrix(&self) -> Vec<Vec<PolyK>> {
        let m = self.minus_dim();
        (0..m)
            .map(|u| {
                (0..m)
                    .map(|v| self.ope_gg_full(u, v).lambda2_scalar)
                    .collect()
            })
            .collect()
    }
}

/// Recovers `p(k)` from the `λ²` coefficient: `G^{u}_{(2)}G^{v} = 2·λ²-coefficient = 4(e_θ|[u,v]) p(k)`.
pub fn extract_pk(ctx: &WContext) -> Result<PkResult, WError> {
    let m = ctx.minus_dim();
    let mut p: Option<(PolyK, String, String)> = None;
    let mut witnesses = Vec::new();
    for u in 0..m {
        for v in 0..m {
            let gg = ctx.ope_gg_full(u, v);
            let lu = ctx.minus_label(u).to_string();
            let lv = ctx.minus_label(v).to_string();
            if gg.pairing.is_zero() {
                if !gg.lambda2_scalar.is_zero() {
                    return Err(WError::InconsistentPairs {
                        id: ctx.id(),
                        u: lu,
                        v: lv,
                        found: gg.lambda2_scalar.to_string(),
                        expected: "0".into(),
                    });
                }
                continue;
            }
            let value = gg.lambda2_scalar.scale(&(qi(2) / (qi(4) * &gg.pairing)));
            match &p {
                None => p = Some((value.clone(), lu.clone(), lv.clone())),
                Some((prev, _, _)) if *prev != value => {
                    return Err(WError::InconsistentPairs {
                        id: ctx.id(),
                        u: lu,
                        v: lv,
                        found: value.to_string(),
                        expected: prev.to_string(),
                    })
                }
                _ => {}
            }
            witnesses.push((lu, lv, value));
        }
    }
    let (p, _, _) = p.ok_or_else(|| WError::NoNondegeneratePair { id: ctx.id() })?;
    if p.degree() != 2 || p.leading() != qi(1) {
        return Err(WError::NotMonicQuadratic {
            id: ctx.id(),
            p: p.to_string(),
        });
    }
    Ok(PkResult {
        p,
        per_pair_witnesses: witnesses,
    })
}

/// First pair `(u, v)` where `S(v,u) ≠ −(−1)^{p(u)p(v)} S(u,v)`.
pub fn check_skew_symmetry(ctx: &WContext, s: &[Vec<PolyK>]) -> Result<(), WError> {
    let m = ctx.minus_dim();
    for u in 0..m {
        for v in 0..m {
            let pu = ctx.alg.parity[ctx.dec.gminus_half[u]];
            let pv = ctx.alg.parity[ctx.dec.gminus_half[v]];
            let sign = if pu && pv { qi(1) } else { qi(-1) };
            if s[v][u] != s[u][v].scale(&sign) {
                return Err(WError::MismatchAt {
                    id: ctx.id(),
                    u: ctx.minus_label(u).into(),
                    v: ctx.minus_label(v).into(),
                    term: "skew-symmetry".into(),
                    detail: format!("S(v,u) = {}, S(u,v) = {}", s[v][u], s[u][v]),
                });
            }
        }
    }
    Ok(())
}

/// Checks `f([a,u],v) + (−1)^{p(a)p(u)} f(u,[a,v]) = 0` for each given `a ∈ g♮`
/// (in `g♮` coordinates) and all basis pairs, with `f` the `λ²`-scalar.
pub fn check_invariance(
    ctx: &WContext,
    s: &[Vec<PolyK>],
    elements: &[Vec<Q>],
) -> Result<(), WError> {
    let m = ctx.minus_dim();
    let act = |a: &Elem, u: usize| -> Vec<Q> {
        let w = ctx.alg.bracket(a, &ctx.alg.basis(ctx.dec.gminus_half[u]));
        ctx.dec.gminus_half.iter().map(|&i| w[i].clone()).collect()
    };
    let f = |x: &[Q], y: &[Q]| -> PolyK {
        let mut acc = PolyK::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    acc = &acc + &s[i][j].scale(&(xi * yj));
                }
            }
        }
        acc
    };
    for a in elements {
        let ea = ctx.nat_elem(a);
        let pa = ctx.alg.parity_of(&ea);
        for u in 0..m {
            let pu = ctx.alg.parity[ctx.dec.gminus_half[u]];
            let au = act(&ea, u);
            let unit_u: Vec<Q> = (0..m)
                .map(|i| if i == u { qi(1) } else { Q::zero() })
                .collect();
            for v in 0..m {
                let unit_v: Vec<Q> = (0..m)
                    .map(|i| if i == v { qi(1) } else { Q::zero() })
                    .collect();
                let av = act(&ea, v);
                let sign = if pa && pu { qi(-1) } else { qi(1) };
                let total = &f(&au, &unit_v) + &f(&unit_u, &av).scale(&sign);
                if !total.is_zero() {
                    return Err(WError::MismatchAt {
                        id: ctx.id(),
                        u: ctx.minus_label(u).into(),
                        v: ctx.minus_label(v).into(),
                        term: "g♮-invariance".into(),
                        detail: format!("defect {total}"),
                    });
                }
            }
        }
    }
    Ok(())
}
