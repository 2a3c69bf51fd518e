//! Explicit structure-constant realizations of the classical families and
//! `D(2,1;a)`, with the invariant form normalized by `(θ|θ) = 2`.

mod build;
mod graded;

pub use build::realize;
pub use graded::{
    dual_basis, minimal_grading, project, CasimirReport, CasimirTarget, DualBases,
    GradedDecomposition,
};

use crate::exactmath::{linalg, qi, Q};
use crate::rootcat::{CatalogError, RootDatum};
use num_traits::{One, Zero};
use rand::Rng;
use std::collections::BTreeMap;
use std::fmt::Write as _;

/// Coordinates of an element in the algebra's basis.
pub type Elem = Vec<Q>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixAlgError {
    #[error("{0}: no matrix realization (root-level data only)")]
    UnsupportedRealization(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("{id}: ad x has eigenvalue {value} on {label}")]
    GradingViolation {
        id: String,
        label: String,
        value: String,
    },
    #[error("{id}: Casimir on {target} is not scalar")]
    NotScalar { id: String, target: String },
    #[error("{id}: degenerate pairing on {space}")]
    DegenerateForm { id: String, space: String },
    #[error("{id}: bracket leaves the span of the basis")]
    NotClosed { id: String },
}

/// A finite-dimensional Lie superalgebra given by a homogeneous basis,
/// sparse structure constants and an invariant supersymmetric form.
#[derive(Debug, Clone)]
pub struct SuperMatrixAlgebra {
    pub rd: RootDatum,
    pub labels: Vec<String>,
    pub parity: Vec<bool>,
    /// Root index for root vectors, `None` for Cartan elements.
    pub root_of: Vec<Option<usize>>,
    /// `brackets[i][j]` holds `[b_i, b_j]` as sparse coordinates.
    brackets: Vec<Vec<Vec<(usize, Q)>>>,
    pub form: linalg::Matrix,
    pub e_theta: usize,
    pub e_minus_theta: usize,
    /// `[e_θ, e_{-θ}]`, with `[x, e_{±θ}] = ±e_{±θ}`.
    pub x: Elem,
}

impl SuperMatrixAlgebra {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn even_dim(&self) -> usize {
        self.parity.iter().filter(|p| !**p).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    pub fn basis(&self, i: usize) -> Elem {
        let mut v = vec![Q::zero(); self.dim()];
        v[i] = Q::one();
        v
    }

    pub fn zero(&self) -> Elem {
        vec![Q::zero(); self.dim()]
    }

    pub fn basis_of_root(&self, root: usize) -> Option<usize> {
        self.root_of.iter().position(|r| *r == Some(root))
    }

    pub fn cartan(&self) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.root_of[i].is_none())
            .collect()
    }

    /// Parity of a homogeneous element (`false` for zero).
    pub fn parity_of(&self, a: &[Q]) -> bool {
        a.iter()
            .enumerate()
            .any(|(i, c)| !c.is_zero() && self.parity[i])
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.brackets[i][j]
    }

    pub fn bracket(&self, a: &[Q], b: &[Q]) -> Elem {
        let mut out = self.zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let s = ai * bj;
                for (k, c) in &self.brackets[i][j] {
                    out[*k] += &s * c;
                }
            }
        }
        out
    }

    pub fn inner(&self, a: &[Q], b: &[Q]) -> Q {
        let mut s = Q::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() && !self.form[i][j].is_zero() {
                    s += ai * &self.form[i][j] * bj;
                }
            }
        }
        s
    }

    /// Matrix of `ad a` in the full basis (column `j` is `[a, b_j]`).
    pub fn ad(&self, a: &[Q]) -> linalg::Matrix {
        let n = self.dim();
        let mut m = vec![vec![Q::zero(); n]; n];
        for j in 0..n {
            let col = self.bracket(a, &self.basis(j));
            for (i, c) in col.into_iter().enumerate() {
                m[i][j] = c;
            }
        }
        m
    }

    /// `str_W(ad a ∘ ad b)` over a subspace spanned by basis vectors that is
    /// stable under `ad a ∘ ad b`.
    pub fn supertrace_on(&self, a: &[Q], b: &[Q], subspace: &[usize]) -> Q {
        let mut s = Q::zero();
        for &j in subspace {
            let v = self.bracket(a, &self.bracket(b, &self.basis(j)));
            if self.parity[j] {
                s -= &v[j];
            } else {
                s += &v[j];
            }
        }
        s
    }

    /// `Σ c·[b_i, b_l]` over the sparse `(l, c)` terms, added into `out` with factor `s`.
    fn add_left_bracket(&self, out: &mut BTreeMap<usize, Q>, i: usize, v: &[(usize, Q)], s: &Q) {
        for (l, c) in v {
            for (m, d) in &self.brackets[i][*l] {
                *out.entry(*m).or_insert_with(Q::zero) += s * c * d;
            }
        }
    }

    /// Sparse super Jacobi defect on basis elements; zero entries may remain.
    fn jacobi_defect_sparse(&self, i: usize, j: usize, k: usize) -> BTreeMap<usize, Q> {
        let mut out = BTreeMap::new();
        // [b_i,[b_j,b_k]]
        self.add_left_bracket(&mut out, i, &self.brackets[j][k], &Q::one());
        // −[[b_i,b_j],b_k]
        for (l, c) in &self.brackets[i][j] {
            for (m, d) in &self.brackets[*l][k] {
                *out.entry(*m).or_insert_with(Q::zero) -= c * d;
            }
        }
        // −(−1)^{|a||b|}[b_j,[b_i,b_k]]
        let sign = if self.parity[i] && self.parity[j] {
            Q::one()
        } else {
            -Q::one()
        };
        self.add_left_bracket(&mut out, j, &self.brackets[i][k], &sign);
        out
    }

    /// Super Jacobi defect `[a,[b,c]] - [[a,b],c] - (-1)^{|a||b|}[b,[a,c]]` on
    /// basis elements.
    pub fn jacobi_defect(&self, i: usize, j: usize, k: usize) -> Elem {
        let mut e = self.zero();
        for (m, x) in self.jacobi_defect_sparse(i, j, k) {
            e[m] = x;
        }
        e
    }

    /// Checks the super Jacobi identity on every basis triple when
    /// `dim ≤ exhaustive_limit`, otherwise on `samples` random triples drawn
    /// from `rng`. Returns the first failing triple.
    pub fn check_jacobi<R: Rng>(
        &self,
        exhaustive_limit: usize,
        samples: usize,
        rng: &mut R,
    ) -> Result<usize, (usize, usize, usize)> {
        let n = self.dim();
        let ok = |i, j, k| {
            self.jacobi_defect_sparse(i, j, k)
                .values()
                .all(|c| c.is_zero())
        };
        if n <= exhaustive_limit {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        if !ok(i, j, k) {
                            return Err((i, j, k));
                        }
                    }
                }
            }
            Ok(n * n * n)
        } else {
            for _ in 0..samples {
                let (i, j, k) = (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                );
                if !ok(i, j, k) {
                    return Err((i, j, k));
                }
            }
            Ok(samples)
        }
    }

    /// `[a,b] + (-1)^{|a||b|}[b,a] = 0` on basis pairs.
    pub fn check_antisymmetry(&self) -> Result<(), (usize, usize)> {
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let ab = self.bracket(&self.basis(i), &self.basis(j));
                let ba = self.bracket(&self.basis(j), &self.basis(i));
                let s = if self.parity[i] && self.parity[j] {
                    Q::one()
                } else {
                    -Q::one()
                };
                if ab.iter().zip(&ba).any(|(x, y)| *x != &s * y) {
                    return Err((i, j));
                }
            }
        }
        Ok(())
    }

    /// `([a,b]|c) = (a|[b,c])` on basis triples, and supersymmetry of the form.
    pub fn check_form_invariance(&self) -> Result<(), (usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let sym = if self.parity[i] && self.parity[j] {
                    -Q::one()
                } else {
                    Q::one()
                };
                if self.form[i][j] != &sym * &self.form[j][i] {
                    return Err((i, j, j));
                }
                if !self.form[i][j].is_zero() && self.parity[i] != self.parity[j] {
                    return Err((i, j, j));
                }
            }
        }
        // ([b_i,b_j]|b_k) = (b_i|[b_j,b_k]) from the sparse constants.
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let lhs: Q = self.brackets[i][j]
                        .iter()
                        .map(|(l, c)| c * &self.form[*l][k])
                        .sum();
                    let rhs: Q = self.brackets[j][k]
                        .iter()
                        .map(|(l, c)| c * &self.form[i][*l])
                        .sum();
                    if lhs != rhs {
                        return Err((i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    /// Plain-text dump, one nonzero structure constant per line:
    /// `label label label coefficient`.
    pub fn dump_structure_constants(&self) -> String {
        let mut s = String::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                for (k, c) in &self.brackets[i][j] {
                    let _ = writeln!(
                        s,
                        "{} {} {} {}",
                        self.labels[i],
                        self.labels[j],
                        self.labels[*k],
                        crate::exactmath::fmt_q(c)
                    );
                }
            }
        }
        s
    }

    /// Half the Casimir eigenvalue of `g` on itself.
    pub fn dual_coxeter(&self) -> Result<Q, MatrixAlgError> {
        let all: Vec<usize> = (0..self.dim()).collect();
        let basis: Vec<Elem> = all.iter().map(|&i| self.basis(i)).collect();
        let targets: Vec<Elem> = basis.clone();
        let c = graded::casimir_on(self, &basis, &targets).ok_or_else(|| {
            MatrixAlgError::NotScalar {
                id: self.rd.id.to_string(),
                target: "g".into(),
            }
        })?;
        Ok(c / qi(2))
    }
}
