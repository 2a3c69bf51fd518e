use super::{extract_pk, poly_vec_from, NatPoly, WContext, WError};
use crate::exactmath::{q, qi, PolyK, Q};
use num_traits::Zero;
use std::fmt::Write as _;

/// Outcome of comparing the full bracket with its simplified form on every
/// basis pair of `g_{-1/2}`.
#[derive(Debug, Clone, PartialEq)]
pub struct BracketReductionReport {
    pub id: String,
    pub p: PolyK,
    /// `(component key, k_i)`.
    pub levels: Vec<(String, PolyK)>,
    pub pairs_checked: usize,
}

impl BracketReductionReport {
    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "algebra: {}", self.id);
        let _ = writeln!(s, "p(k): {}", self.p.render_factored());
        for (key, k) in &self.levels {
            let _ = writeln!(s, "k[{key}]: {k}  divides p(k)");
        }
        let _ = writeln!(s, "pairs checked: {}", self.pairs_checked);
        s
    }
}

/// `k_i = k + (h∨ − h∨_{0,i})/2` for each component of `g♮` (the center has `h∨_0 = 0`).
pub fn component_levels(ctx: &WContext) -> Vec<(String, PolyK)> {
    ctx.dec
        .mg
        .components
        .iter()
        .map(|c| {
            let h0 = if c.is_center() {
                Q::zero()
            } else {
                c.h0.clone()
            };
            (c.key(), PolyK::linear((&ctx.h_vee - h0) * q(1, 2)))
        })
        .collect()
}

fn mismatch(ctx: &WContext, u: usize, v: usize, term: &str, detail: String) -> WError {
    WError::MismatchAt {
        id: ctx.id(),
        u: ctx.minus_label(u).into(),
        v: ctx.minus_label(v).into(),
        term: term.into(),
        detail,
    }
}

fn render_nat(ctx: &WContext, v: &NatPoly) -> String {
    let parts: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| format!("({c})·n{i}"))
        .collect();
    let _ = ctx;
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Checks that every `k_i` divides `p(k)`, and that on every basis pair the
/// full bracket agrees term by term with
/// `−2(k+h∨)eω + eΣ:J^{a^α}J^{a_α}: + Σ_γ:J^{[u,u^γ]♮}J^{[u_γ,v]♮}: + 2(k+1)∂J^{X}
///  + 4λΣ_i (p/k_i) J^{X_i} + 2λ²e p`, where `e = (e_θ|[u,v])` and `X = [[e_θ,u],v]♮`.
pub fn verify_bracket_reduction(ctx: &WContext) -> Result<BracketReductionReport, WError> {
    let p = extract_pk(ctx)?.p;
    let levels = component_levels(ctx);
    let mut ratios = Vec::new();
    for (key, k) in &levels {
        let (quot, rem) = p.div_rem(k).expect("k_i is nonzero");
        if !rem.is_zero() {
            return Err(WError::MismatchAt {
                id: ctx.id(),
                u: "-".into(),
                v: "-".into(),
                term: format!("k[{key}] | p(k)"),
                detail: format!("remainder {rem}"),
            });
        }
        ratios.push(quot.scale(&qi(4)));
    }

    let n = ctx.nat_dim();
    let mut casimir = vec![vec![Q::zero(); n]; n];
    for (i, comp) in ctx.db.components.iter().enumerate() {
        let (basis, dual) = comp.as_ref().ok_or_else(|| WError::DegenerateComponent {
            id: ctx.id(),
            component: levels[i].0.clone(),
        })?;
        for (b, d) in basis.iter().zip(dual) {
            let bc = ctx.nat_coords(b);
            let dc = ctx.nat_coords(d);
            for r in 0..n {
                if dc[r].is_zero() {
                    continue;
                }
                for c in 0..n {
                    if !bc[c].is_zero() {
                        casimir[r][c] += &dc[r] * &bc[c];
                    }
                }
            }
        }
    }

    let m = ctx.minus_dim();
    for u in 0..m {
        for v in 0..m {
            let gg = ctx.ope_gg_full(u, v);
            let e = &gg.pairing;
            let x = ctx.theta_bracket(u, v);

            let omega = PolyK::linear(ctx.h_vee.clone()).scale(&(qi(-2) * e));
            if gg.omega_coeff != omega {
                return Err(mismatch(
                    ctx,
                    u,
                    v,
                    "ω",
                    format!("{} vs {}", gg.omega_coeff, omega),
                ));
            }
            let quad: Vec<Vec<Q>> = casimir
                .iter()
                .map(|row| row.iter().map(|c| c * e).collect())
                .collect();
            if gg.quad_nat != quad {
                return Err(mismatch(
                    ctx,
                    u,
                    v,
                    "Σ:J^{a^α}J^{a_α}:",
                    "coefficient matrices differ".into(),
                ));
            }
            let deriv = poly_vec_from(&PolyK::linear(qi(1)).scale(&qi(2)), &ctx.nat_coords(&x));
            if gg.deriv_term != deriv {
                return Err(mismatch(
                    ctx,
                    u,
                    v,
                    "∂J",
                    format!(
                        "{} vs {}",
                        render_nat(ctx, &gg.deriv_term),
                        render_nat(ctx, &deriv)
                    ),
                ));
            }
            let mut lambda: NatPoly = vec![PolyK::zero(); n];
            for (i, ratio) in ratios.iter().enumerate() {
                let xi = ctx
                    .db
                    .component_projection(&ctx.alg, i, &x)
                    .expect("checked nondegenerate");
                for (l, c) in lambda.iter_mut().zip(ctx.nat_coords(&xi)) {
                    *l = &*l + &ratio.scale(&c);
                }
            }
            if gg.lambda_term != lambda {
                return Err(mismatch(
                    ctx,
                    u,
                    v,
                    "λJ",
                    format!(
                        "{} vs {}",
                        render_nat(ctx, &gg.lambda_term),
                        render_nat(ctx, &lambda)
                    ),
                ));
            }
            let l2 = p.scale(&(qi(2) * e));
            if gg.lambda2_scalar != l2 {
                return Err(mismatch(
                    ctx,
                    u,
                    v,
                    "λ²",
                    format!("{} vs {}", gg.lambda2_scalar, l2),
                ));
            }
        }
    }
    Ok(BracketReductionReport {
        id: ctx.id(),
        p,
        levels,
        pairs_checked: m * m,
    })
}
