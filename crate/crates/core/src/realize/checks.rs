use super::lattice::{FockMonomial, LatticeData};
use super::table::{OpeTable, WKey};
use super::tensor::{self, difference, render, sum, term, TElem};
use super::{check_n, sugawara_eigenvalue_closed_form, Realization, RealizeError, RealizeReport};
use crate::exactmath::{fmt_q, q, qi, Q};
use crate::levels::classify;
use crate::matrixalg::Elem;
use crate::rootcat::{
    build_catalog_entry, grading, halfspace_weights, minimal_grading, weight_casimir, AlgebraId,
};
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeSet;

const LATTICE: LatticeData = LatticeData { pairing: -1 };

fn vac() -> FockMonomial {
    FockMonomial::vacuum()
}

fn unit_scalar() -> TElem {
    term(WKey::One, vac(), qi(1))
}

/// `J^{x} ⊗ 1` for `g♮` coordinates `x`.
fn j_elem(coords: &[Q]) -> TElem {
    let mut out = TElem::new();
    for (i, x) in coords.iter().enumerate() {
        tensor::add_into(&mut out, &term(WKey::J(i), vac(), qi(1)), x);
    }
    out
}

fn phi_elem() -> TElem {
    term(WKey::One, FockMonomial::phi(), qi(1))
}

/// `w = J^{c}⊗1 + (n/(n−2))·1⊗φ`.
fn w_elem(r: &Realization) -> TElem {
    let n = r.n as i64;
    sum(&[(&j_elem(&r.c_coords), qi(1)), (&phi_elem(), q(n, n - 2))])
}

/// `φ̄ = J^{c}⊗1 + 1⊗φ`.
fn phibar(r: &Realization) -> TElem {
    sum(&[(&j_elem(&r.c_coords), qi(1)), (&phi_elem(), qi(1))])
}

fn g_plus(r: &Realization, i: usize) -> TElem {
    term(WKey::G(r.plus[i]), FockMonomial::exp(1), qi(1))
}

fn g_minus(r: &Realization, i: usize) -> TElem {
    term(WKey::G(r.minus[i]), FockMonomial::exp(-1), qi(1))
}

fn prod(t: &OpeTable, a: &TElem, m: i64, b: &TElem) -> Result<TElem, RealizeError> {
    tensor::product(t, &LATTICE, a, m, b)
}

type Matrix = Vec<Vec<Q>>;

/// A basis element of `sl(n+1)` as an `(n+1)×(n+1)` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SlBasisElem {
    pub name: String,
    pub matrix: Matrix,
}

fn zero_matrix(d: usize) -> Matrix {
    vec![vec![Q::zero(); d]; d]
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let d = a.len();
    let mut out = zero_matrix(d);
    for i in 0..d {
        for l in 0..d {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..d {
                if !b[l][j].is_zero() {
                    out[i][j] += &a[i][l] * &b[l][j];
                }
            }
        }
    }
    out
}

fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    let (ab, ba) = (mat_mul(a, b), mat_mul(b, a));
    ab.iter()
        .zip(&ba)
        .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p - q).collect())
        .collect()
}

fn trace_form(a: &Matrix, b: &Matrix) -> Q {
    let ab = mat_mul(a, b);
    (0..ab.len()).map(|i| ab[i][i].clone()).sum()
}

/// `ι(E_{ab})`, `ι(E_{aa} − E_{a+1,a+1})`, `ι(I_n)`, `e_{1,1+i}`, `e_{1+i,1}`
/// with `ι(a) = diag(−tr a, a)`.
pub fn sl_basis(n: usize) -> Vec<SlBasisElem> {
    let d = n + 1;
    let unit = |i: usize, j: usize| {
        let mut m = zero_matrix(d);
        m[i][j] = qi(1);
        m
    };
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            if a != b {
                out.push(SlBasisElem {
                    name: format!("ι(E{a},{b})"),
                    matrix: unit(a, b),
                });
            }
        }
    }
    for a in 1..n {
        let mut m = unit(a, a);
        m[a + 1][a + 1] = qi(-1);
        out.push(SlBasisElem {
            name: format!("ι(H{a})"),
            matrix: m,
        });
    }
    let mut id = zero_matrix(d);
    id[0][0] = qi(-(n as i64));
    for a in 1..=n {
        id[a][a] = qi(1);
    }
    out.push(SlBasisElem {
        name: "ι(I_n)".into(),
        matrix: id,
    });
    for i in 1..=n {
        out.push(SlBasisElem {
            name: format!("e1,{}", 1 + i),
            matrix: unit(0, i),
        });
    }
    for i in 1..=n {
        out.push(SlBasisElem {
            name: format!("e{},1", 1 + i),
            matrix: unit(i, 0),
        });
    }
    out
}

/// The traceless `n×n` block placed in the odd-odd block of `sl(2|n)`.
fn embed_block(r: &Realization, a0: &[Vec<Q>]) -> Elem {
    let n = r.n;
    let mut e = r.ctx.alg.zero();
    let add = |e: &mut Elem, v: &Elem, s: &Q| {
        for (x, y) in e.iter_mut().zip(v) {
            *x += s * y;
        }
    };
    for a in 0..n {
        for b in 0..n {
            if a != b && !a0[a][b].is_zero() {
                add(
                    &mut e,
                    &r.labeled(&format!("E{},{}", 3 + a, 3 + b)),
                    &a0[a][b],
                );
            }
        }
    }
    let mut partial = Q::zero();
    for a in 0..n - 1 {
        partial += &a0[a][a];
        if !partial.is_zero() {
            add(&mut e, &r.odd_diag_difference(3 + a, 4 + a), &partial);
        }
    }
    e
}

/// `γ(X)` for `X ∈ sl(n+1)`.
pub fn gamma(r: &Realization, x: &Matrix) -> Result<TElem, RealizeError> {
    let n = r.n;
    let tr: Q = (1..=n).map(|a| x[a][a].clone()).sum();
    if x[0][0] != -tr.clone() {
        return Err(RealizeError::Unsupported("matrix is not traceless".into()));
    }
    let mean = &tr / qi(n as i64);
    let a0: Vec<Vec<Q>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    if a == b {
                        &x[1 + a][1 + b] - &mean
                    } else {
                        x[1 + a][1 + b].clone()
                    }
                })
                .collect()
        })
        .collect();
    let mut out = j_elem(&r.ctx.nat_coords(&embed_block(r, &a0)));
    let ni = n as i64;
    let c_in = q((ni + 1) * (ni - 2), 2);
    tensor::add_into(&mut out, &w_elem(r), &(mean * c_in));
    for i in 0..n {
        tensor::add_into(&mut out, &g_plus(r, i), &x[0][1 + i]);
        tensor::add_into(&mut out, &g_minus(r, i), &x[1 + i][0]);
    }
    Ok(out)
}

/// Sugawara eigenvalue on `:G_i^±G_j^±:` from highest weights of the
/// `g_{-1/2}` pieces.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SugawaraEigenvalueReport {
    pub n: usize,
    /// Per piece of `g_{-1/2}`, the contribution of each `g♮` component.
    pub contributions: Vec<Vec<String>>,
    pub eigenvalue: String,
    pub closed_form: String,
    /// `L_0` of `:G_i^±G_j^±:`.
    pub conformal_weight: String,
    /// The two eigenvalues coincide, so the argument excluding a singular
    /// vector in that weight does not apply.
    pub degenerate: bool,
    pub report: RealizeReport,
}

fn vec_add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vec_sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn verify_sugawara_eigenvalue(n: usize) -> Result<SugawaraEigenvalueReport, RealizeError> {
    if n < 4 {
        return Err(RealizeError::UnsupportedN {
            n,
            reason: "need n ≥ 4".into(),
        });
    }
    let id = AlgebraId::Sl { m: 2, n };
    let err = |e: String| RealizeError::Unsupported(e);
    let rd = build_catalog_entry(&id).map_err(|e| err(e.to_string()))?;
    let mg = minimal_grading(&rd).map_err(|e| err(e.to_string()))?;
    let hw = halfspace_weights(&rd, &mg).map_err(|e| err(e.to_string()))?;
    let lc = classify(&id).map_err(|e| err(e.to_string()))?;
    let k = q(n as i64 - 1, 2);
    let half_theta: Vec<Q> = rd.theta_vec().iter().map(|x| x * q(1, 2)).collect();

    let mut rep = RealizeReport::new(n, "Sugawara eigenvalue on :G_i^±G_j^±:");
    let closed = sugawara_eigenvalue_closed_form(n);
    let mut contributions = Vec::new();
    let mut eigen: Option<Q> = None;
    for (pi, piece) in hw.pieces.iter().enumerate() {
        // Weights of :G_i G_j:, i ≠ j, restricted to g♮.
        let shifted: Vec<Vec<Q>> = piece
            .roots
            .iter()
            .map(|&ri| vec_add(&rd.roots[ri].v, &half_theta))
            .collect();
        let mut pairs: Vec<Vec<Q>> = Vec::new();
        for a in 0..shifted.len() {
            for b in a + 1..shifted.len() {
                pairs.push(vec_add(&shifted[a], &shifted[b]));
            }
        }
        let split = |nu: &[Q]| -> Result<Vec<Vec<Q>>, RealizeError> {
            let mut parts = Vec::new();
            let mut left = nu.to_vec();
            for c in &mg.components {
                if c.is_center() {
                    parts.push(Vec::new());
                    continue;
                }
                let p = grading::project(&rd, &c.span, nu)
                    .ok_or_else(|| err("degenerate component".into()))?;
                left = vec_sub(&left, &p);
                parts.push(p);
            }
            if mg.has_center() {
                parts[0] = left;
            }
            Ok(parts)
        };
        let split_pairs: Vec<Vec<Vec<Q>>> =
            pairs.iter().map(|p| split(p)).collect::<Result<_, _>>()?;
        let positive: Vec<(usize, Vec<Q>)> = mg
            .components
            .iter()
            .enumerate()
            .flat_map(|(ci, c)| {
                c.roots
                    .iter()
                    .filter(|&&ra| mg.positive[ra])
                    .map(move |&ra| (ci, ra))
            })
            .map(|(ci, ra)| (ci, rd.roots[ra].v.clone()))
            .collect();
        let all: BTreeSet<Vec<Vec<Q>>> = split_pairs.iter().cloned().collect();
        // Highest weight: raising by any positive root of g♮ leaves the set.
        let top = split_pairs
            .iter()
            .find(|parts| {
                positive.iter().all(|(ci, alpha)| {
                    let mut raised = (*parts).clone();
                    raised[*ci] = vec_add(&raised[*ci], alpha);
                    !all.contains(&raised)
                })
            })
            .ok_or_else(|| err("no highest weight among :G_i G_j:".into()))?;
        let mut total = Q::zero();
        let mut contrib = Vec::new();
        for (ci, comp) in lc.components.iter().enumerate() {
            let cas = weight_casimir(&rd, &mg, comp.index, &top[comp.index]);
            let den = qi(2) * comp.sugawara_denominator().eval(&k);
            if den.is_zero() {
                return Err(err(format!("component {ci} is at its critical level")));
            }
            let x = cas / den;
            contrib.push(format!("{}: {}", comp.tag, fmt_q(&x)));
            total += x;
        }
        rep.push(
            format!("eigenvalue on piece {pi}"),
            fmt_q(&total),
            fmt_q(&closed),
        );
        contributions.push(contrib);
        match &eigen {
            Some(e) if *e != total => {
                return Err(err(format!(
                    "pieces disagree: {} vs {}",
                    fmt_q(e),
                    fmt_q(&total)
                )));
            }
            _ => eigen = Some(total),
        }
    }
    let eigenvalue = eigen.ok_or_else(|| err("g_(-1/2) is empty".into()))?;
    let weight = qi(3);
    let degenerate = eigenvalue == weight;
    rep.push(
        "degenerate (eigenvalue = 3)",
        degenerate.to_string(),
        (n == 5).to_string(),
    );
    Ok(SugawaraEigenvalueReport {
        n,
        contributions,
        eigenvalue: fmt_q(&eigenvalue),
        closed_form: fmt_q(&closed),
        conformal_weight: fmt_q(&weight),
        degenerate,
        report: rep,
    })
}

/// The products of `G_i^± ⊗ e^{±φ}` in `W_k ⊗ V_{ℤφ}`:
/// like signs vanish in every mode `≥ 0`; for `i ≠ j`
/// `(0) = −J^{E2+j,2+i}⊗1`; for `i = j`
/// `(0) = −((n−2)(n+1)/(2n))J^{c} − ((n+1)/2)1⊗φ − J^{a_i}`;
/// `(1) = −δ_{ij}(n+1)/2`; modes `≥ 2` vanish.
pub fn verify_lattice_products(
    r: &Realization,
    t: &OpeTable,
) -> Result<RealizeReport, RealizeError> {
    check_n(r.n)?;
    let n = r.n;
    let ni = n as i64;
    let mut rep = RealizeReport::new(n, "products of G_i^± ⊗ e^{±φ}");
    let check = |rep: &mut RealizeReport,
                 item: u8,
                 i: usize,
                 j: usize,
                 mode: i64,
                 got: &TElem,
                 exp: &TElem| {
        let (g, e) = (render(t, got), render(t, exp));
        let name = format!("({item}) i={} j={} mode {mode}", i + 1, j + 1);
        if got != exp {
            rep.push(name, g.clone(), e.clone());
            return Err(RealizeError::MismatchAt {
                n,
                item,
                i: i + 1,
                j: j + 1,
                mode,
                got: g,
                expected: e,
            });
        }
        rep.push(name, g, e);
        Ok(())
    };
    let zero = TElem::new();
    for i in 0..n {
        for j in 0..n {
            for mode in 0..=3 {
                let pp = prod(t, &g_plus(r, i), mode, &g_plus(r, j))?;
                check(&mut rep, 1, i, j, mode, &pp, &zero)?;
                let mm = prod(t, &g_minus(r, i), mode, &g_minus(r, j))?;
                check(&mut rep, 1, i, j, mode, &mm, &zero)?;
            }
            let p0 = prod(t, &g_plus(r, i), 0, &g_minus(r, j))?;
            if i != j {
                let e = r.labeled(&format!("E{},{}", 3 + j, 3 + i));
                let exp = sum(&[(&j_elem(&r.ctx.nat_coords(&e)), qi(-1))]);
                check(&mut rep, 2, i, j, 0, &p0, &exp)?;
            } else {
                let exp = sum(&[
                    (&j_elem(&r.c_coords), q(-(ni - 2) * (ni + 1), 2 * ni)),
                    (&phi_elem(), q(-(ni + 1), 2)),
                    (&j_elem(&r.ctx.nat_coords(&r.a_i(i + 1))), qi(-1)),
                ]);
                check(&mut rep, 3, i, j, 0, &p0, &exp)?;
            }
            let p1 = prod(t, &g_plus(r, i), 1, &g_minus(r, j))?;
            let exp1 = if i == j {
                sum(&[(&unit_scalar(), q(-(ni + 1), 2))])
            } else {
                TElem::new()
            };
            check(&mut rep, 4, i, j, 1, &p1, &exp1)?;
            for mode in 2..=4 {
                let pm = prod(t, &g_plus(r, i), mode, &g_minus(r, j))?;
                check(&mut rep, 5, i, j, mode, &pm, &zero)?;
            }
        }
    }
    Ok(rep)
}

/// `[γ(a) λ γ(b)] = γ([a,b]) − ((n+1)/2)λ(a,b)` on every ordered basis pair,
/// `φ̄_{(1)}w = 0`, and `[φ̄ λ γ(b)] = 0`.
pub fn verify_gamma_homomorphism(
    r: &Realization,
    t: &OpeTable,
) -> Result<RealizeReport, RealizeError> {
    check_n(r.n)?;
    let n = r.n;
    let level = q(-(n as i64 + 1), 2);
    let mut rep = RealizeReport::new(n, "γ on sl(n+1) at level −(n+1)/2");
    let basis = sl_basis(n);
    let images: Vec<TElem> = basis
        .iter()
        .map(|b| gamma(r, &b.matrix))
        .collect::<Result<_, _>>()?;
    let modes = |a: &TElem, b: &TElem| -> Result<Vec<TElem>, RealizeError> {
        (0..=3).map(|m| prod(t, a, m, b)).collect()
    };
    let show = |v: &[TElem]| {
        v.iter()
            .enumerate()
            .map(|(m, e)| format!("({m}) {}", render(t, e)))
            .collect::<Vec<_>>()
            .join("; ")
    };

    for (a, ga) in basis.iter().zip(&images) {
        for (b, gb) in basis.iter().zip(&images) {
            let got = modes(ga, gb)?;
            let expected = vec![
                gamma(r, &commutator(&a.matrix, &b.matrix))?,
                sum(&[(&unit_scalar(), &level * trace_form(&a.matrix, &b.matrix))]),
                TElem::new(),
                TElem::new(),
            ];
            let name = format!("[γ({}) λ γ({})]", a.name, b.name);
            if let Some(m) = (0..got.len()).find(|&m| got[m] != expected[m]) {
                rep.push(name, show(&got), show(&expected));
                return Err(RealizeError::HomomorphismFailure {
                    n,
                    a: a.name.clone(),
                    b: b.name.clone(),
                    mode: m as i64,
                    discrepancy: render(t, &difference(&got[m], &expected[m])),
                });
            }
            rep.push(name, show(&got), show(&expected));
        }
    }

    let pb = phibar(r);
    let w1 = prod(t, &pb, 1, &w_elem(r))?;
    if !rep.push("φ̄_(1) w", render(t, &w1), "0") {
        return Err(RealizeError::HomomorphismFailure {
            n,
            a: "φ̄".into(),
            b: "w".into(),
            mode: 1,
            discrepancy: render(t, &w1),
        });
    }
    for (b, gb) in basis.iter().zip(&images) {
        let got = modes(&pb, gb)?;
        let zeros = vec![TElem::new(); got.len()];
        if !rep.push(format!("[φ̄ λ γ({})]", b.name), show(&got), show(&zeros)) {
            let m = got.iter().position(|e| !e.is_empty()).unwrap_or(0);
            return Err(RealizeError::HomomorphismFailure {
                n,
                a: "φ̄".into(),
                b: b.name.clone(),
                mode: m as i64,
                discrepancy: render(t, &got[m]),
            });
        }
    }
    Ok(rep)
}

/// `J^{c}_{(0)}`-charges of the generators, `φ̄_{(0)}`-charges of the images
/// of `γ`, and `G_i^±⊗1 = (G_i^±⊗e^{±φ})_{(−2)}(1⊗e^{∓φ})`.
pub fn charge_decomposition(r: &Realization, t: &OpeTable) -> Result<RealizeReport, RealizeError> {
    check_n(r.n)?;
    let n = r.n;
    let mut rep = RealizeReport::new(n, "charge decomposition");
    let jc = j_elem(&r.c_coords);
    for g in &t.generators {
        let x = term(g.key, vac(), qi(1));
        let got = prod(t, &jc, 0, &x)?;
        let expected = sum(&[(&x, qi(g.charge))]);
        if !rep.push(
            format!("J^c_(0) {}", g.label),
            render(t, &got),
            render(t, &expected),
        ) {
            return Err(RealizeError::ChargeMismatch {
                n,
                what: g.label.clone(),
                got: render(t, &got),
                expected: render(t, &expected),
            });
        }
    }
    let pb = phibar(r);
    for b in sl_basis(n) {
        let img = gamma(r, &b.matrix)?;
        let got = prod(t, &pb, 0, &img)?;
        if !rep.push(format!("φ̄_(0) γ({})", b.name), render(t, &got), "0") {
            return Err(RealizeError::ChargeMismatch {
                n,
                what: format!("γ({})", b.name),
                got: render(t, &got),
                expected: "0".into(),
            });
        }
    }
    for i in 0..n {
        for (gen, sign) in [(g_plus(r, i), 1), (g_minus(r, i), -1)] {
            let inv = term(WKey::One, FockMonomial::exp(-sign), qi(1));
            let got = prod(t, &gen, -2, &inv)?;
            let key = gen.keys().next().expect("single term").0;
            let expected = term(key, vac(), qi(1));
            let label = t.label(key).to_string();
            if !rep.push(
                format!("({label}⊗e)_(−2)(1⊗e^∓)"),
                render(t, &got),
                render(t, &expected),
            ) {
                return Err(RealizeError::ChargeMismatch {
                    n,
                    what: format!("{label}⊗1 recovery"),
                    got: render(t, &got),
                    expected: render(t, &expected),
                });
            }
        }
    }
    Ok(rep)
}
