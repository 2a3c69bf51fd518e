use super::{Elem, MatrixAlgError, SuperMatrixAlgebra};
use crate::exactmath::{linalg, q, Q};
use crate::rootcat::{minimal_grading as root_grading, MinimalGrading};
use num_traits::{One, Signed, Zero};

/// `g = g_{-1} ⊕ g_{-1/2} ⊕ g_0 ⊕ g_{1/2} ⊕ g_1` in a realized algebra, with
/// `g♮` split along the root-level components.
#[derive(Debug, Clone)]
pub struct GradedDecomposition {
    pub mg: MinimalGrading,
    /// Basis indices of each eigenspace of `ad x`.
    pub g0: Vec<usize>,
    pub ghalf: Vec<usize>,
    pub gminus_half: Vec<usize>,
    /// Basis of `g♮`: root vectors first, then the Cartan part.
    pub nat: Vec<Elem>,
    /// Bases of the minimal ideals, aligned with `mg.components`. The center
    /// entry is normalized to act by `±1` on `g_{-1/2}`.
    pub components: Vec<Vec<Elem>>,
}

fn lin_comb(a: &SuperMatrixAlgebra, coeffs: &[Q], basis: &[Elem]) -> Elem {
    let mut out = a.zero();
    for (c, b) in coeffs.iter().zip(basis) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            *o += c * x;
        }
    }
    out
}

fn independent(vs: Vec<Elem>) -> Vec<Elem> {
    let idx = linalg::independent_subset(&vs);
    idx.into_iter().map(|i| vs[i].clone()).collect()
}

/// Computes the `ad x` grading and the `g♮` decomposition.
pub fn minimal_grading(a: &SuperMatrixAlgebra) -> Result<GradedDecomposition, MatrixAlgError> {
    let mg = root_grading(&a.rd)?;
    let grade = |i: usize| -> Q {
        let v = a.bracket(&a.x, &a.basis(i));
        v[i].clone()
    };
    let mut g0 = Vec::new();
    let mut ghalf = Vec::new();
    let mut gminus_half = Vec::new();
    for i in 0..a.dim() {
        let g = grade(i);
        if g.is_zero() {
            g0.push(i);
        } else if g == q(1, 2) {
            ghalf.push(i);
        } else if g == q(-1, 2) {
            gminus_half.push(i);
        } else if g.abs() == Q::one() {
            continue;
        } else {
            return Err(MatrixAlgError::GradingViolation {
                id: a.rd.id.to_string(),
                label: a.labels[i].clone(),
                value: crate::exactmath::fmt_q(&g),
            });
        }
    }
    let xx = a.inner(&a.x, &a.x);
    let perp = |v: Elem| -> Elem {
        let c = a.inner(&v, &a.x) / &xx;
        v.iter().zip(&a.x).map(|(p, xv)| p - &c * xv).collect()
    };
    let mut nat: Vec<Elem> = g0
        .iter()
        .filter(|&&i| a.root_of[i].is_some())
        .map(|&i| a.basis(i))
        .collect();
    let cartan_nat = independent(a.cartan().into_iter().map(|i| perp(a.basis(i))).collect());
    nat.extend(cartan_nat.iter().cloned());
    debug_assert_eq!(
        nat.len(),
        a.rd.cartan_dim - 1 + mg.roots_with_grade(&Q::zero()).len()
    );

    let mut components = Vec::new();
    for c in &mg.components {
        if c.is_center() {
            // Cartan♮ elements killing every g♮ root vector.
            let nat_roots: Vec<usize> = g0
                .iter()
                .copied()
                .filter(|&i| a.root_of[i].is_some())
                .collect();
            let rows: linalg::Matrix = nat_roots
                .iter()
                .flat_map(|&r| {
                    let br: Vec<Elem> = cartan_nat
                        .iter()
                        .map(|h| a.bracket(h, &a.basis(r)))
                        .collect();
                    (0..a.dim()).map(move |k| br.iter().map(|v| v[k].clone()).collect::<Vec<Q>>())
                })
                .collect();
            let ns = if rows.is_empty() {
                (0..cartan_nat.len())
                    .map(|i| linalg::unit(cartan_nat.len(), i))
                    .collect()
            } else {
                linalg::nullspace(&rows, cartan_nat.len())
            };
            let mut center: Vec<Elem> = ns.iter().map(|co| lin_comb(a, co, &cartan_nat)).collect();
            // Scale so that the eigenvalue on the highest piece of g_{-1/2} is 1.
            if center.len() == 1 {
                if let Some(&u) = gminus_half.first() {
                    let ev = a.bracket(&center[0], &a.basis(u))[u].clone();
                    if !ev.is_zero() {
                        let s = Q::one() / ev.abs();
                        center[0] = center[0].iter().map(|x| x * &s).collect();
                    }
                }
            }
            components.push(center);
        } else {
            let mut b: Vec<Elem> = Vec::new();
            let mut hs = Vec::new();
            for &r in &c.roots {
                let i = a.basis_of_root(r).expect("root vector");
                b.push(a.basis(i));
                let j = a.basis_of_root(a.rd.negate(r)).expect("root vector");
                hs.push(a.bracket(&a.basis(i), &a.basis(j)));
            }
            b.extend(independent(hs));
            components.push(b);
        }
    }
    Ok(GradedDecomposition {
        mg,
        g0,
        ghalf,
        gminus_half,
        nat,
        components,
    })
}

/// Dual basis `{d^α}` with `pairing(d^α, b_β) = δ_{αβ}`.
pub fn dual_basis(
    a: &SuperMatrixAlgebra,
    basis: &[Elem],
    pairing: impl Fn(&Elem, &Elem) -> Q,
) -> Option<Vec<Elem>> {
    let g: linalg::Matrix = basis
        .iter()
        .map(|x| basis.iter().map(|y| pairing(x, y)).collect())
        .collect();
    let inv = linalg::inverse(&g)?;
    Some(inv.iter().map(|row| lin_comb(a, row, basis)).collect())
}

/// Orthogonal projection onto `span(basis)`: the unique `p` in the span with
/// `(b|p) = (b|v)` for all `b` in the span.
pub fn project(a: &SuperMatrixAlgebra, basis: &[Elem], v: &[Q]) -> Option<Elem> {
    if basis.is_empty() {
        return Some(a.zero());
    }
    let g: linalg::Matrix = basis
        .iter()
        .map(|x| basis.iter().map(|y| a.inner(x, y)).collect())
        .collect();
    let rhs: Vec<Q> = basis.iter().map(|b| a.inner(b, v)).collect();
    let c = linalg::solve(&g, &rhs)?;
    Some(lin_comb(a, &c, basis))
}

/// Dual bases for `(·|·)` on `g♮` and its ideals, and for
/// `⟨a,b⟩_ne = (e_{-θ}|[a,b])` on `g_{1/2}`.
#[derive(Debug, Clone)]
pub struct DualBases {
    pub nat: Vec<Elem>,
    /// `(nat_dual[α] | nat[β]) = δ`.
    pub nat_dual: Vec<Elem>,
    pub half: Vec<Elem>,
    /// `⟨half[γ], half_dual[δ]⟩_ne = δ`. The pairing is skew on even vectors,
    /// so the order matters.
    pub half_dual: Vec<Elem>,
    /// Per-component dual pairs; `None` when the restricted form is singular.
    pub components: Vec<Option<(Vec<Elem>, Vec<Elem>)>>,
}

impl DualBases {
    pub fn new(a: &SuperMatrixAlgebra, d: &GradedDecomposition) -> Result<Self, MatrixAlgError> {
        let id = a.rd.id.to_string();
        let nat_dual = dual_basis(a, &d.nat, |x, y| a.inner(x, y)).ok_or_else(|| {
            MatrixAlgError::DegenerateForm {
                id: id.clone(),
                space: "g♮".into(),
            }
        })?;
        let half: Vec<Elem> = d.ghalf.iter().map(|&i| a.basis(i)).collect();
        let emt = a.basis(a.e_minus_theta);
        let half_dual =
            dual_basis(a, &half, |x, y| a.inner(&emt, &a.bracket(y, x))).ok_or_else(|| {
                MatrixAlgError::DegenerateForm {
                    id,
                    space: "g_1/2".into(),
                }
            })?;
        let components = d
            .components
            .iter()
            .map(|b| dual_basis(a, b, |x, y| a.inner(x, y)).map(|du| (b.clone(), du)))
            .collect();
        Ok(DualBases {
            nat: d.nat.clone(),
            nat_dual,
            half,
            half_dual,
            components,
        })
    }

    /// `a ↦ a♮` for `a ∈ g_0`.
    pub fn nat_projection(&self, a: &SuperMatrixAlgebra, v: &[Q]) -> Elem {
        let mut out = a.zero();
        for (b, du) in self.nat.iter().zip(&self.nat_dual) {
            let c = a.inner(du, v);
            if !c.is_zero() {
                for (o, x) in out.iter_mut().zip(b) {
                    *o += &c * x;
                }
            }
        }
        out
    }

    /// `a ↦ a_i♮`.
    pub fn component_projection(&self, a: &SuperMatrixAlgebra, i: usize, v: &[Q]) -> Option<Elem> {
        let (b, du) = self.components[i].as_ref()?;
        let mut out = a.zero();
        for (bb, dd) in b.iter().zip(du) {
            let c = a.inner(dd, v);
            if !c.is_zero() {
                for (o, x) in out.iter_mut().zip(bb) {
                    *o += &c * x;
                }
            }
        }
        Some(out)
    }
}

/// Eigenvalue of `Σ_α ad(b_α) ad(b^α)` on each target, with `(b^α|b_β) = δ`;
/// `None` if it does not act as one scalar.
pub(super) fn casimir_on(a: &SuperMatrixAlgebra, basis: &[Elem], targets: &[Elem]) -> Option<Q> {
    let dual = dual_basis(a, basis, |x, y| a.inner(x, y))?;
    let mut value: Option<Q> = None;
    for w in targets {
        let mut out = a.zero();
        for (b, du) in basis.iter().zip(&dual) {
            let v = a.bracket(b, &a.bracket(du, w));
            for (o, x) in out.iter_mut().zip(v) {
                *o += x;
            }
        }
        let k = w.iter().position(|c| !c.is_zero())?;
        let lam = &out[k] / &w[k];
        if out.iter().zip(w).any(|(o, x)| *o != &lam * x) {
            return None;
        }
        match &value {
            None => value = Some(lam),
            Some(v) if *v != lam => return None,
            _ => {}
        }
    }
    Some(value.unwrap_or_else(Q::zero))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CasimirTarget {
    /// `C_g` on `g`.
    GOnG,
    /// `C_{g_0}` on `g_{-1/2}`.
    G0OnGHalf,
    /// `C_{g_i♮}` on `g_i♮`.
    Component(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CasimirReport {
    pub target: CasimirTarget,
    pub eigenvalue: Q,
    pub is_scalar: bool,
}

impl SuperMatrixAlgebra {
    pub fn casimir_eigenvalue(
        &self,
        d: &GradedDecomposition,
        which: CasimirTarget,
    ) -> Result<CasimirReport, MatrixAlgError> {
        let (basis, targets): (Vec<Elem>, Vec<Elem>) = match which {
            CasimirTarget::GOnG => {
                let all: Vec<Elem> = (0..self.dim()).map(|i| self.basis(i)).collect();
                (all.clone(), all)
            }
            CasimirTarget::G0OnGHalf => {
                let mut b = d.nat.clone();
                b.push(self.x.clone());
                (b, d.gminus_half.iter().map(|&i| self.basis(i)).collect())
            }
            CasimirTarget::Component(i) => (d.components[i].clone(), d.components[i].clone()),
        };
        match casimir_on(self, &basis, &targets) {
            Some(eigenvalue) => Ok(CasimirReport {
                target: which,
                eigenvalue,
                is_scalar: true,
            }),
            None => Err(MatrixAlgError::NotScalar {
                id: self.rd.id.to_string(),
                target: format!("{which:?}"),
            }),
        }
    }

    /// `κ_0(a,b) = str_{g_0}(ad a ad b)`.
    pub fn kappa0(&self, d: &GradedDecomposition, a: &[Q], b: &[Q]) -> Q {
        self.supertrace_on(a, b, &d.g0)
    }

    /// `str_g(ad a ad b)`.
    pub fn killing(&self, a: &[Q], b: &[Q]) -> Q {
        let all: Vec<usize> = (0..self.dim()).collect();
        self.supertrace_on(a, b, &all)
    }
}
