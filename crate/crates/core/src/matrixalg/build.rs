use super::{MatrixAlgError, SuperMatrixAlgebra};
use crate::exactmath::{linalg, q, qi, Q};
use crate::rootcat::{build_catalog_entry, AlgebraId, RootDatum};
use num_traits::{One, Zero};

type Mat = Vec<Vec<Q>>;

/// Basis data before normalization.
struct Raw {
    labels: Vec<String>,
    parity: Vec<bool>,
    weights: Vec<Option<Vec<Q>>>,
    brackets: Vec<Vec<Vec<(usize, Q)>>>,
    form: Mat,
}

struct MatBasisElem {
    label: String,
    odd: bool,
    weight: Option<Vec<Q>>,
    m: Mat,
}

fn zeros(n: usize) -> Mat {
    vec![vec![Q::zero(); n]; n]
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut c = zeros(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    c[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    c
}

/// `XY - (-1)^{|X||Y|} YX`.
fn super_commutator(x: &Mat, px: bool, y: &Mat, py: bool) -> Mat {
    let xy = mat_mul(x, y);
    let yx = mat_mul(y, x);
    let anti = px && py;
    xy.iter()
        .zip(&yx)
        .map(|(r1, r2)| {
            r1.iter()
                .zip(r2)
                .map(|(a, b)| if anti { a + b } else { a - b })
                .collect()
        })
        .collect()
}

fn supertrace(m: &Mat, odd_index: &[bool]) -> Q {
    let mut s = Q::zero();
    for (i, r) in m.iter().enumerate() {
        if odd_index[i] {
            s -= &r[i];
        } else {
            s += &r[i];
        }
    }
    s
}

/// Computes structure constants and the supertrace form of a basis of
/// supermatrices. With `mod_identity`, matrices are reduced modulo the
/// identity by clearing the last diagonal entry.
fn from_matrices(
    basis: Vec<MatBasisElem>,
    odd_index: &[bool],
    mod_identity: bool,
    id: &str,
) -> Result<Raw, MatrixAlgError> {
    let n = odd_index.len();
    let dim = basis.len();
    let reduce = |mut m: Mat| -> Mat {
        if mod_identity {
            let c = m[n - 1][n - 1].clone();
            if !c.is_zero() {
                for (i, row) in m.iter_mut().enumerate() {
                    row[i] -= &c;
                }
            }
        }
        m
    };
    let flat = |m: &Mat| -> Vec<Q> { m.iter().flat_map(|r| r.iter().cloned()).collect() };
    let rows: Vec<Vec<Q>> = basis.iter().map(|b| flat(&reduce(b.m.clone()))).collect();
    let (_, pivots) = linalg::rref(&rows);
    assert_eq!(pivots.len(), dim, "basis of {id} is linearly dependent");
    let square: Mat = (0..dim)
        .map(|i| pivots.iter().map(|&p| rows[i][p].clone()).collect())
        .collect();
    // Coordinates c solve c · square = y[pivots].
    let inv_t = linalg::inverse(&linalg::transpose(&square)).expect("pivot block invertible");
    let coords = |m: Mat| -> Result<Vec<(usize, Q)>, MatrixAlgError> {
        let y = flat(&reduce(m));
        let yp: Vec<Q> = pivots.iter().map(|&p| y[p].clone()).collect();
        let c = linalg::mat_vec(&inv_t, &yp);
        let mut back = vec![Q::zero(); y.len()];
        for (ci, row) in c.iter().zip(&rows) {
            if !ci.is_zero() {
                for (b, r) in back.iter_mut().zip(row) {
                    *b += ci * r;
                }
            }
        }
        if back != y {
            return Err(MatrixAlgError::NotClosed { id: id.to_string() });
        }
        Ok(c.into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .collect())
    };
    let mut brackets = vec![vec![Vec::new(); dim]; dim];
    for i in 0..dim {
        for j in 0..dim {
            let m = super_commutator(&basis[i].m, basis[i].odd, &basis[j].m, basis[j].odd);
            brackets[i][j] = coords(m)?;
        }
    }
    let mut form = zeros(dim);
    for i in 0..dim {
        for j in 0..dim {
            form[i][j] = supertrace(&mat_mul(&basis[i].m, &basis[j].m), odd_index);
        }
    }
    Ok(Raw {
        labels: basis.iter().map(|b| b.label.clone()).collect(),
        parity: basis.iter().map(|b| b.odd).collect(),
        weights: basis.iter().map(|b| b.weight.clone()).collect(),
        brackets,
        form,
    })
}

fn elementary(n: usize, i: usize, j: usize, c: Q) -> Mat {
    let mut m = zeros(n);
    m[i][j] = c;
    m
}

fn unit_vec(n: usize, i: usize, c: Q) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = c;
    v
}

/// `sl(m|n)`, or `psl(m|m)` when `projective`.
fn sl_raw(m: usize, n: usize, projective: bool, id: &str) -> Result<Raw, MatrixAlgError> {
    let size = m + n;
    let odd_index: Vec<bool> = (0..size).map(|i| i >= m).collect();
    let sigma = |i: usize| if odd_index[i] { -Q::one() } else { Q::one() };
    let mut basis = Vec::new();
    for i in 0..size {
        for j in 0..size {
            if i != j {
                let mut w = vec![Q::zero(); size];
                w[i] += Q::one();
                w[j] -= Q::one();
                basis.push(MatBasisElem {
                    label: format!("E{},{}", i + 1, j + 1),
                    odd: odd_index[i] != odd_index[j],
                    weight: Some(w),
                    m: elementary(size, i, j, Q::one()),
                });
            }
        }
    }
    let cartan = if projective { size - 2 } else { size - 1 };
    for i in 0..cartan {
        let mut h = elementary(size, i, i, sigma(i + 1));
        h[i + 1][i + 1] = -sigma(i);
        basis.push(MatBasisElem {
            label: format!("H{}", i + 1),
            odd: false,
            weight: None,
            m: h,
        });
    }
    from_matrices(basis, &odd_index, projective, id)
}

/// `osp(mm|nn)` preserving an even supersymmetric form with antidiagonal
/// blocks; spanned by `w ↦ u B(v,w) - (-1)^{|u||v|} v B(u,w)`.
fn osp_raw(mm: usize, nn: usize, id: &str) -> Result<Raw, MatrixAlgError> {
    let size = mm + nn;
    let (r, s) = (mm / 2, nn / 2);
    let amb = r + s;
    let odd_index: Vec<bool> = (0..size).map(|i| i >= mm).collect();
    let weight = |a: usize| -> Vec<Q> {
        if a < mm {
            if a < r {
                unit_vec(amb, a, Q::one())
            } else if mm % 2 == 1 && a == r {
                vec![Q::zero(); amb]
            } else {
                unit_vec(amb, mm - 1 - a, -Q::one())
            }
        } else {
            let b = a - mm;
            if b < s {
                unit_vec(amb, r + b, Q::one())
            } else {
                unit_vec(amb, r + (nn - 1 - b), -Q::one())
            }
        }
    };
    let mut form_v = zeros(size);
    for a in 0..mm {
        form_v[a][mm - 1 - a] = Q::one();
    }
    for b in 0..nn {
        form_v[mm + b][mm + nn - 1 - b] = if b < s { Q::one() } else { -Q::one() };
    }
    let t = |u: usize, v: usize| -> Mat {
        let sign = if odd_index[u] && odd_index[v] {
            -Q::one()
        } else {
            Q::one()
        };
        let mut m = zeros(size);
        for b in 0..size {
            m[u][b] += &form_v[v][b];
            m[v][b] -= &sign * &form_v[u][b];
        }
        m
    };
    let mut basis: Vec<MatBasisElem> = Vec::new();
    let mut seen: Vec<Vec<Q>> = Vec::new();
    let mut cartan = Vec::new();
    for u in 0..size {
        for v in u..size {
            let m = t(u, v);
            if m.iter().all(|r| r.iter().all(|x| x.is_zero())) {
                continue;
            }
            let w: Vec<Q> = weight(u)
                .iter()
                .zip(weight(v))
                .map(|(a, b)| a + b)
                .collect();
            let label = format!("X{},{}", u + 1, v + 1);
            let odd = odd_index[u] != odd_index[v];
            if w.iter().all(|x| x.is_zero()) {
                cartan.push(MatBasisElem {
                    label,
                    odd,
                    weight: None,
                    m,
                });
            } else if !seen.contains(&w) {
                seen.push(w.clone());
                basis.push(MatBasisElem {
                    label,
                    odd,
                    weight: Some(w),
                    m,
                });
            }
        }
    }
    basis.extend(cartan);
    from_matrices(basis, &odd_index, false, id)
}

/// `D(2,1;a)` on `sl(2)^3 ⊕ (ℂ²)^{⊗3}` with `σ = (-(1+a), 1, a)`.
fn d21a_raw(a: &Q) -> Raw {
    let sigma = [-(Q::one() + a), Q::one(), a.clone()];
    // Even basis: (e_i, h_i, f_i) at 3i, 3i+1, 3i+2; odd basis at 9 + code,
    // code bit t set meaning v_- in factor t.
    let dim = 17;
    let odd_idx = |s: [usize; 3]| 9 + s[0] + 2 * s[1] + 4 * s[2];
    let odd_signs = |k: usize| -> [usize; 3] {
        let c = k - 9;
        [c & 1, (c >> 1) & 1, (c >> 2) & 1]
    };
    let mut labels = Vec::new();
    let mut weights = Vec::new();
    for i in 0..3 {
        for (nm, w) in [("e", 2), ("h", 0), ("f", -2)] {
            labels.push(format!("{nm}{}", i + 1));
            weights.push(if w == 0 {
                None
            } else {
                Some(unit_vec(3, i, qi(w)))
            });
        }
    }
    for k in 9..17 {
        let s = odd_signs(k);
        labels.push(format!(
            "v{}",
            s.iter()
                .map(|&b| if b == 0 { '+' } else { '-' })
                .collect::<String>()
        ));
        weights.push(Some(
            s.iter()
                .map(|&b| if b == 0 { qi(1) } else { qi(-1) })
                .collect(),
        ));
    }
    let mut parity = vec![false; 9];
    parity.extend(vec![true; 8]);
    let mut br: Vec<Vec<Vec<(usize, Q)>>> = vec![vec![Vec::new(); dim]; dim];
    // sl(2) brackets.
    for i in 0..3 {
        let (e, h, f) = (3 * i, 3 * i + 1, 3 * i + 2);
        br[h][e] = vec![(e, qi(2))];
        br[e][h] = vec![(e, qi(-2))];
        br[h][f] = vec![(f, qi(-2))];
        br[f][h] = vec![(f, qi(2))];
        br[e][f] = vec![(h, qi(1))];
        br[f][e] = vec![(h, qi(-1))];
    }
    // Action of sl(2)_i on the i-th tensor factor (0 = v_+, 1 = v_-).
    for i in 0..3 {
        for k in 9..17 {
            let s = odd_signs(k);
            let mut out = Vec::new();
            let (e, h, f) = (3 * i, 3 * i + 1, 3 * i + 2);
            let hv = if s[i] == 0 { qi(1) } else { qi(-1) };
            br[h][k] = vec![(k, hv.clone())];
            br[k][h] = vec![(k, -hv)];
            if s[i] == 1 {
                let mut t = s;
                t[i] = 0;
                out.push((e, odd_idx(t)));
            } else {
                let mut t = s;
                t[i] = 1;
                out.push((f, odd_idx(t)));
            }
            for (x, target) in out {
                br[x][k] = vec![(target, qi(1))];
                br[k][x] = vec![(target, qi(-1))];
            }
        }
    }
    // ψ(v_+, v_-) = 1 and p(v,w) = ψ(w,·)v + ψ(v,·)w expressed in (e,h,f).
    let psi = |x: usize, y: usize| -> Q {
        match (x, y) {
            (0, 1) => qi(1),
            (1, 0) => qi(-1),
            _ => Q::zero(),
        }
    };
    let p = |i: usize, x: usize, y: usize| -> Vec<(usize, Q)> {
        match (x, y) {
            (0, 0) => vec![(3 * i, qi(2))],
            (1, 1) => vec![(3 * i + 2, qi(-2))],
            _ => vec![(3 * i + 1, qi(-1))],
        }
    };
    for k in 9..17 {
        for l in 9..17 {
            let (s, t) = (odd_signs(k), odd_signs(l));
            let mut out: Vec<(usize, Q)> = Vec::new();
            for i in 0..3 {
                let mut c = sigma[i].clone();
                for j in 0..3 {
                    if j != i {
                        c *= psi(s[j], t[j]);
                    }
                }
                if c.is_zero() {
                    continue;
                }
                for (b, v) in p(i, s[i], t[i]) {
                    out.push((b, &c * v));
                }
            }
            br[k][l] = out;
        }
    }
    let mut form = zeros(dim);
    for i in 0..3 {
        let c = q(-1, 2) / &sigma[i];
        form[3 * i][3 * i + 2] = c.clone();
        form[3 * i + 2][3 * i] = c.clone();
        form[3 * i + 1][3 * i + 1] = &c * qi(2);
    }
    for k in 9..17 {
        for l in 9..17 {
            let (s, t) = (odd_signs(k), odd_signs(l));
            form[k][l] = psi(s[0], t[0]) * psi(s[1], t[1]) * psi(s[2], t[2]);
        }
    }
    Raw {
        labels,
        parity,
        weights,
        brackets: br,
        form,
    }
}

/// Rescales basis vector `i` by `s`, updating structure constants and form.
fn rescale(raw: &mut Raw, i: usize, s: &Q) {
    let dim = raw.labels.len();
    for a in 0..dim {
        for b in 0..dim {
            let mut f = Q::one();
            if a == i {
                f *= s;
            }
            if b == i {
                f *= s;
            }
            for (k, c) in raw.brackets[a][b].iter_mut() {
                *c *= &f;
                if *k == i {
                    *c /= s;
                }
            }
        }
    }
    for a in 0..dim {
        raw.form[i][a] *= s;
        raw.form[a][i] *= s;
    }
}

fn finish(rd: RootDatum, mut raw: Raw) -> Result<SuperMatrixAlgebra, MatrixAlgError> {
    let id = rd.id.to_string();
    let dim = raw.labels.len();
    let root_of: Vec<Option<usize>> = raw
        .weights
        .iter()
        .map(|w| {
            w.as_ref().map(|w| {
                rd.find(w)
                    .unwrap_or_else(|| panic!("weight {w:?} of {id} is not a root"))
            })
        })
        .collect();
    let nroots = root_of.iter().flatten().count();
    assert_eq!(
        nroots,
        rd.roots.len(),
        "{id}: root vectors do not match root data"
    );
    assert_eq!(
        dim - nroots,
        rd.cartan_dim,
        "{id}: Cartan dimension mismatch"
    );
    for (i, r) in root_of.iter().enumerate() {
        if let Some(r) = r {
            assert_eq!(
                raw.parity[i], rd.roots[*r].odd,
                "{id}: parity of {}",
                raw.labels[i]
            );
        }
    }
    let find = |r: usize| {
        root_of
            .iter()
            .position(|x| *x == Some(r))
            .expect("root vector present")
    };
    let et = find(rd.theta);
    let emt = find(rd.negate(rd.theta));
    let mut tmp = SuperMatrixAlgebra {
        rd,
        labels: raw.labels.clone(),
        parity: raw.parity.clone(),
        root_of: root_of.clone(),
        brackets: raw.brackets.clone(),
        form: raw.form.clone(),
        e_theta: et,
        e_minus_theta: emt,
        x: vec![],
    };
    let h = tmp.bracket(&tmp.basis(et), &tmp.basis(emt));
    let lam = tmp.bracket(&h, &tmp.basis(et))[et].clone();
    assert!(!lam.is_zero(), "{id}: θ(h_θ) = 0");
    // Scale e_θ (not e_{-θ}) so that x = [e_θ, e_{-θ}] with e_{-θ} the plain matrix unit.
    rescale(&mut raw, et, &(Q::one() / &lam));
    tmp.brackets = raw.brackets;
    tmp.form = raw.form;
    let x = tmp.bracket(&tmp.basis(et), &tmp.basis(emt));
    let t = tmp.inner(&x, &x);
    let s = q(1, 2) / t;
    for row in tmp.form.iter_mut() {
        for c in row.iter_mut() {
            *c *= &s;
        }
    }
    tmp.x = x;
    // ad x must act diagonally with the grading predicted by the roots.
    for i in 0..dim {
        let v = tmp.bracket(&tmp.x, &tmp.basis(i));
        let g = v[i].clone();
        let mut rest = v;
        rest[i] = Q::zero();
        let expected = match tmp.root_of[i] {
            Some(r) => tmp.rd.root_inner(r, tmp.rd.theta) / qi(2),
            None => Q::zero(),
        };
        if rest.iter().any(|c| !c.is_zero()) || g != expected {
            return Err(MatrixAlgError::GradingViolation {
                id,
                label: tmp.labels[i].clone(),
                value: crate::exactmath::fmt_q(&g),
            });
        }
    }
    Ok(tmp)
}

/// Builds the structure-constant realization of a classical family member or
/// `D(2,1;a)`.
pub fn realize(id: &AlgebraId) -> Result<SuperMatrixAlgebra, MatrixAlgError> {
    let name = id.to_string();
    let raw = match id {
        AlgebraId::Exceptional(_) | AlgebraId::F4Super(_) | AlgebraId::G3Super(_) => {
            id.validate()?;
            return Err(MatrixAlgError::UnsupportedRealization(name));
        }
        AlgebraId::Sl { m, n } => {
            id.validate()?;
            sl_raw(*m, *n, false, &name)?
        }
        AlgebraId::Psl { m } => {
            id.validate()?;
            sl_raw(*m, *m, true, &name)?
        }
        AlgebraId::Osp { m, n } | AlgebraId::Spo { n, m } => {
            id.validate()?;
            osp_raw(*m, *n, &name)?
        }
        AlgebraId::D21a { a } => {
            id.validate()?;
            d21a_raw(a)
        }
    };
    let rd = build_catalog_entry(id)?;
    finish(rd, raw)
}
