use super::lattice::add_term;
use super::{render_combination, Realization, RealizeError, RealizeReport};
use crate::exactmath::{fmt_q, q, qi, Q};
use crate::levels::classify;
use crate::rootcat::AlgebraId;
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};

/// Strong generators of `W_k(sl(2|n), θ)` and the vacuum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WKey {
    One,
    /// `J^{n_i}` for the `i`-th basis vector of `g♮`.
    J(usize),
    /// `G^{u}` for the `i`-th basis vector of `g_{-1/2}`.
    G(usize),
}

impl WKey {
    pub fn is_odd(self) -> bool {
        matches!(self, WKey::G(_))
    }

    pub fn weight(self) -> Q {
        match self {
            WKey::One => qi(0),
            WKey::J(_) => qi(1),
            WKey::G(_) => q(3, 2),
        }
    }
}

pub type WElem = BTreeMap<WKey, Q>;

#[derive(Debug, Clone, PartialEq)]
pub struct Generator {
    pub key: WKey,
    pub label: String,
    pub odd: bool,
    pub weight: Q,
    /// `J^{c}_{(0)}`-eigenvalue; equal to the `φ̄_{(0)}`-eigenvalue of `x ⊗ 1`.
    pub charge: i64,
}

/// Products `a_{(m)}b` of generators, `k = (n−1)/2`.
#[derive(Debug, Clone)]
pub struct OpeTable {
    pub n: usize,
    pub k: Q,
    pub generators: Vec<Generator>,
    pub products: BTreeMap<(WKey, WKey, i64), WElem>,
    /// Entries set to zero because they vanish in the simple quotient
    /// (`:G_i^±G_j^±: = 0`) rather than computed.
    pub imposed: BTreeSet<(WKey, WKey, i64)>,
}

fn from_coords(coords: &[Q], key: fn(usize) -> WKey) -> WElem {
    coords
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (key(i), x.clone()))
        .collect()
}

fn scalar(x: Q) -> WElem {
    let mut e = WElem::new();
    add_term(&mut e, &WKey::One, x);
    e
}

fn scaled(e: &WElem, s: &Q) -> WElem {
    let mut out = WElem::new();
    for (k, x) in e {
        add_term(&mut out, k, x * s);
    }
    out
}

impl OpeTable {
    pub fn generator(&self, k: WKey) -> &Generator {
        self.generators
            .iter()
            .find(|g| g.key == k)
            .expect("generator key")
    }

    pub fn label(&self, k: WKey) -> &str {
        if k == WKey::One {
            return "1";
        }
        &self.generator(k).label
    }

    pub fn render(&self, e: &WElem) -> String {
        render_combination(e.iter().map(|(k, x)| {
            let name = if *k == WKey::One {
                String::new()
            } else {
                self.label(*k).to_string()
            };
            (name, x.clone())
        }))
    }

    /// `a_{(m)}b`; vacuum rules and the weight bound cover entries not stored.
    pub fn product(&self, a: WKey, m: i64, b: WKey) -> Result<WElem, RealizeError> {
        if a == WKey::One {
            return Ok(if m == -1 { scalar_key(b) } else { WElem::new() });
        }
        if b == WKey::One {
            return match m {
                m if m >= 0 => Ok(WElem::new()),
                -1 => Ok(scalar_key(a)),
                _ => Err(RealizeError::Unsupported(format!(
                    "∂^({}) {}",
                    -m - 1,
                    self.label(a)
                ))),
            };
        }
        if let Some(e) = self.products.get(&(a, b, m)) {
            return Ok(e.clone());
        }
        if qi(m) > a.weight() + b.weight() - qi(1) {
            return Ok(WElem::new());
        }
        Err(RealizeError::Unsupported(format!(
            "{}_({m}){}",
            self.label(a),
            self.label(b)
        )))
    }
}

fn scalar_key(k: WKey) -> WElem {
    [(k, qi(1))].into_iter().collect()
}

/// OPE table of the generators at `k = (n−1)/2` from the closed-form
/// products: `J` brackets with levels `k_0 = ½` on the center and
/// `k_1 = (n+1)/2` on `sl(n)`, `[J^{a} λ G^{u}] = G^{[a,u]}`, and for
/// `G_i^+` against `G_j^−`
/// `(1): 2(k+h∨/2)J^{E2+j,2+i}` (`i ≠ j`),
/// `(1): ((n−2)/n)(k+1)J^{c} + 2(k+h∨/2)J^{a_i}` (`i = j`),
/// `(2): δ_{ij} 2(k+1)(k+h∨/2)`.
pub fn ope_table(r: &Realization) -> Result<OpeTable, RealizeError> {
    let n = r.n;
    let ctx = &r.ctx;
    let alg = &ctx.alg;
    let k = r.k.clone();
    let h = r.h_vee();
    let nat = &ctx.dec.nat;
    let nd = ctx.nat_dim();
    let md = ctx.minus_dim();

    let mut generators = Vec::new();
    for (i, e) in nat.iter().enumerate() {
        generators.push(Generator {
            key: WKey::J(i),
            label: format!("J^{{{}}}", r.render_elem(e)),
            odd: false,
            weight: qi(1),
            charge: 0,
        });
    }
    for u in 0..md {
        let (label, charge) = if let Some(i) = r.plus.iter().position(|&x| x == u) {
            (format!("G_{}^+", i + 1), 1)
        } else if let Some(i) = r.minus.iter().position(|&x| x == u) {
            (format!("G_{}^−", i + 1), -1)
        } else {
            return Err(RealizeError::Unsupported(format!(
                "{} is neither G^+ nor G^−",
                ctx.minus_label(u)
            )));
        };
        generators.push(Generator {
            key: WKey::G(u),
            label,
            odd: true,
            weight: q(3, 2),
            charge,
        });
    }

    let cc = alg.inner(&r.c, &r.c);
    let (k0, k1) = (q(1, 2), q(n as i64 + 1, 2));
    let mut products = BTreeMap::new();
    let mut imposed = BTreeSet::new();

    for x in 0..nd {
        let xc = alg.inner(&nat[x], &r.c);
        for y in 0..nd {
            let br = ctx.nat_coords(&alg.bracket(&nat[x], &nat[y]));
            products.insert((WKey::J(x), WKey::J(y), 0), from_coords(&br, WKey::J));
            let yc = alg.inner(&nat[y], &r.c);
            let center = &xc * &yc / &cc;
            let s = &k0 * &center + &k1 * (alg.inner(&nat[x], &nat[y]) - &center);
            products.insert((WKey::J(x), WKey::J(y), 1), scalar(s));
        }
    }

    let minus_coords = |e: &[Q]| -> Result<Vec<Q>, RealizeError> {
        let out: Vec<Q> = ctx.dec.gminus_half.iter().map(|&g| e[g].clone()).collect();
        let mass: usize = e.iter().filter(|x| !x.is_zero()).count();
        if out.iter().filter(|x| !x.is_zero()).count() != mass {
            return Err(RealizeError::Unsupported(
                "[g♮, g_(-1/2)] leaves g_(-1/2)".into(),
            ));
        }
        Ok(out)
    };
    for x in 0..nd {
        for u in 0..md {
            let v = alg.bracket(&nat[x], &alg.basis(ctx.dec.gminus_half[u]));
            let g = from_coords(&minus_coords(&v)?, WKey::G);
            products.insert((WKey::G(u), WKey::J(x), 0), scaled(&g, &qi(-1)));
            products.insert((WKey::J(x), WKey::G(u), 0), g);
            products.insert((WKey::J(x), WKey::G(u), 1), WElem::new());
            products.insert((WKey::G(u), WKey::J(x), 1), WElem::new());
        }
    }

    let k_half = &k + &h * q(1, 2);
    let k_one = &k + qi(1);
    for i in 0..n {
        for j in 0..n {
            let (p, m) = (WKey::G(r.plus[i]), WKey::G(r.minus[j]));
            let first = if i != j {
                let e = r.labeled(&format!("E{},{}", 3 + j, 3 + i));
                scaled(
                    &from_coords(&ctx.nat_coords(&e), WKey::J),
                    &(qi(2) * &k_half),
                )
            } else {
                let mut out = scaled(
                    &from_coords(&r.c_coords, WKey::J),
                    &(q(n as i64 - 2, n as i64) * &k_one),
                );
                let a = from_coords(&ctx.nat_coords(&r.a_i(i + 1)), WKey::J);
                for (kk, x) in a {
                    add_term(&mut out, &kk, x * qi(2) * &k_half);
                }
                out
            };
            let second = if i == j {
                scalar(qi(2) * &k_one * &k_half)
            } else {
                WElem::new()
            };
            // G^−_(1)G^+ = −G^+_(1)G^− + ∂(G^+_(2)G^−) and G^−_(2)G^+ = G^+_(2)G^−.
            products.insert((m, p, 1), scaled(&first, &qi(-1)));
            products.insert((m, p, 2), second.clone());
            products.insert((p, m, 1), first);
            products.insert((p, m, 2), second);
        }
    }
    for same in [&r.plus, &r.minus] {
        for &u in same.iter() {
            for &v in same.iter() {
                for mode in -1..=2 {
                    products.insert((WKey::G(u), WKey::G(v), mode), WElem::new());
                }
                imposed.insert((WKey::G(u), WKey::G(v), -1));
            }
        }
    }
    Ok(OpeTable {
        n,
        k,
        generators,
        products,
        imposed,
    })
}

/// Compares the table with the λ-brackets computed from structure constants
/// at `k = (n−1)/2`, together with `(c|c) = 2 − 4/h∨` and the levels
/// `k_0 = ½`, `k_1 = (n+1)/2` from the level classification.
pub fn cross_validate(r: &Realization, t: &OpeTable) -> Result<RealizeReport, RealizeError> {
    let n = r.n;
    let ctx = &r.ctx;
    let k = &r.k;
    let mut rep = RealizeReport::new(n, "OPE table against structure constants");
    let fail = |at: String, detail: String| RealizeError::CrossCheck { n, at, detail };

    let cc = ctx.alg.inner(&r.c, &r.c);
    let expected_cc = qi(2) - qi(4) / r.h_vee();
    if !rep.push("(c|c)", fmt_q(&cc), fmt_q(&expected_cc)) {
        return Err(fail(
            "(c|c)".into(),
            format!("{} vs {}", fmt_q(&cc), fmt_q(&expected_cc)),
        ));
    }
    let lc = classify(&AlgebraId::Sl { m: 2, n })
        .map_err(|e| RealizeError::Unsupported(e.to_string()))?;
    for comp in &lc.components {
        let level = comp.k_i.eval(k);
        let expected = if comp.is_center {
            q(1, 2)
        } else {
            q(n as i64 + 1, 2)
        };
        let name = if comp.is_center {
            "k_0".to_string()
        } else {
            format!("k_1 ({})", comp.tag)
        };
        if !rep.push(&name, fmt_q(&level), fmt_q(&expected)) {
            return Err(fail(name, "level".into()));
        }
    }

    let nd = ctx.nat_dim();
    let mut jj_ok = 0usize;
    for x in 0..nd {
        let ux = crate::exactmath::linalg::unit(nd, x);
        for y in 0..nd {
            let uy = crate::exactmath::linalg::unit(nd, y);
            let jj = ctx.ope_jj(&ux, &uy);
            let bracket = from_coords(&jj.bracket, WKey::J);
            let scalar_part = scalar(jj.lambda_scalar.eval(k));
            let (a, b) = (WKey::J(x), WKey::J(y));
            if t.product(a, 0, b)? != bracket || t.product(a, 1, b)? != scalar_part {
                return Err(fail(
                    format!("[{} λ {}]", t.label(a), t.label(b)),
                    format!(
                        "table {} + λ({}), computed {} + λ({})",
                        t.render(&t.product(a, 0, b)?),
                        t.render(&t.product(a, 1, b)?),
                        t.render(&bracket),
                        t.render(&scalar_part)
                    ),
                ));
            }
            jj_ok += 1;
        }
    }
    rep.push(
        "[J λ J] on all basis pairs",
        jj_ok.to_string(),
        (nd * nd).to_string(),
    );

    let md = ctx.minus_dim();
    let mut gg_ok = 0usize;
    for u in 0..md {
        for v in 0..md {
            let gg = ctx.ope_gg_full(u, v);
            let (a, b) = (WKey::G(u), WKey::G(v));
            let first = from_coords(
                &gg.lambda_term.iter().map(|p| p.eval(k)).collect::<Vec<_>>(),
                WKey::J,
            );
            let second = scalar(qi(2) * gg.lambda2_scalar.eval(k));
            let at = format!("[{} λ {}]", t.label(a), t.label(b));
            if t.product(a, 1, b)? != first {
                return Err(fail(
                    at,
                    format!(
                        "(1): table {}, computed {}",
                        t.render(&t.product(a, 1, b)?),
                        t.render(&first)
                    ),
                ));
            }
            if t.product(a, 2, b)? != second {
                return Err(fail(
                    at,
                    format!(
                        "(2): table {}, computed {}",
                        t.render(&t.product(a, 2, b)?),
                        t.render(&second)
                    ),
                ));
            }
            let like = t.generator(a).charge == t.generator(b).charge;
            if like {
                let zero_quad =
                    |m: &Vec<Vec<Q>>| m.iter().all(|row| row.iter().all(|x| x.is_zero()));
                let zero0 = gg.pairing.is_zero()
                    && zero_quad(&gg.quad_nat)
                    && zero_quad(&gg.quad_half)
                    && gg.deriv_term.iter().all(|p| p.eval(k).is_zero());
                if !zero0 {
                    return Err(fail(at, "(0): λ⁰ term does not vanish".into()));
                }
            }
            gg_ok += 1;
        }
    }
    rep.push(
        "[G λ G] modes 0..2 on all basis pairs",
        gg_ok.to_string(),
        (md * md).to_string(),
    );
    Ok(rep)
}
