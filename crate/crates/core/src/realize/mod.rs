//! Free-field check for `W_k(sl(2|n), θ)` at `k = (n−1)/2`: the generators
//! `G_i^± ⊗ e^{±φ}`, `J^{a} ⊗ 1` and a Heisenberg field inside
//! `W_k ⊗ V_{ℤφ}` (`⟨φ,φ⟩ = −1`) close into `V_{−(n+1)/2}(sl(n+1))`.
//!
//! Conventions: `G_i^+ = G^{E2,2+i}`, `G_i^− = G^{E2+i,1}`, `c ∈ g♮` is the
//! central element with `[c, E2,2+i] = E2,2+i`.

mod checks;
mod lattice;
mod table;
mod tensor;

pub use checks::{
    charge_decomposition, gamma, sl_basis, verify_gamma_homomorphism, verify_lattice_products,
    verify_sugawara_eigenvalue, SlBasisElem, SugawaraEigenvalueReport,
};
pub use lattice::{FockMonomial, FockState, LatticeData};
pub use table::{cross_validate, ope_table, Generator, OpeTable, WElem, WKey};
pub use tensor::{TElem, TKey};

use crate::exactmath::{fmt_q, q, qi, Q};
use crate::matrixalg::{realize, Elem};
use crate::rootcat::AlgebraId;
use crate::wstruct::{WContext, WError};
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RealizeError {
    #[error("n = {n} not supported: {reason}")]
    UnsupportedN { n: usize, reason: String },
    #[error(transparent)]
    Structure(#[from] WError),
    #[error(
        "n = {n}: table disagrees with the λ-brackets of the matrix realization at {at}: {detail}"
    )]
    CrossCheck {
        n: usize,
        at: String,
        detail: String,
    },
    #[error(
        "n = {n}: item ({item}) fails at i={i}, j={j}, mode {mode}: got {got}, expected {expected}"
    )]
    MismatchAt {
        n: usize,
        item: u8,
        i: usize,
        j: usize,
        mode: i64,
        got: String,
        expected: String,
    },
    #[error("n = {n}: [γ({a}) λ γ({b})] differs in mode {mode}: {discrepancy}")]
    HomomorphismFailure {
        n: usize,
        a: String,
        b: String,
        mode: i64,
        discrepancy: String,
    },
    #[error("n = {n}: {what} has charge {got}, expected {expected}")]
    ChargeMismatch {
        n: usize,
        what: String,
        got: String,
        expected: String,
    },
    #[error("product outside the implemented span: {0}")]
    Unsupported(String),
}

/// One verified identity with both sides rendered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizeReport {
    pub n: usize,
    pub title: String,
    pub checks: Vec<IdentityCheck>,
}

impl RealizeReport {
    fn new(n: usize, title: &str) -> Self {
        RealizeReport {
            n,
            title: title.into(),
            checks: Vec::new(),
        }
    }

    fn push(
        &mut self,
        name: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
    ) -> bool {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let holds = lhs == rhs;
        self.checks.push(IdentityCheck {
            name: name.into(),
            lhs,
            rhs,
            holds,
        });
        holds
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn render(&self) -> String {
        let mut s = format!("# {} (n = {})\n", self.title, self.n);
        for c in &self.checks {
            let mark = if c.holds { "ok" } else { "FAIL" };
            s.push_str(&format!("[{mark}] {}: {} = {}\n", c.name, c.lhs, c.rhs));
        }
        s
    }
}

/// `4(n−2)/(n−1)`, the `L_0`-eigenvalue of `:G_i^±G_j^±:` under the Sugawara
/// vector of `g♮`.
pub fn sugawara_eigenvalue_closed_form(n: usize) -> Q {
    let n = n as i64;
    q(4 * (n - 2), n - 1)
}

pub fn check_n(n: usize) -> Result<(), RealizeError> {
    if n < 4 {
        return Err(RealizeError::UnsupportedN {
            n,
            reason: "need n ≥ 4".into(),
        });
    }
    if n == 5 {
        return Err(RealizeError::UnsupportedN {
            n,
            reason: "Sugawara eigenvalue 4(n−2)/(n−1) equals conformal weight 3".into(),
        });
    }
    Ok(())
}

/// The matrix realization of `sl(2|n)` with the data used throughout.
#[derive(Debug, Clone)]
pub struct Realization {
    pub n: usize,
    /// `(n−1)/2`.
    pub k: Q,
    pub ctx: WContext,
    /// `g_{-1/2}` index of `G_i^+`, `i = 1..n` stored at `i−1`.
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
    /// The central element `c`, and its `g♮` coordinates.
    pub c: Elem,
    pub c_coords: Vec<Q>,
    /// Component index of `sl(n) ⊂ g♮`.
    pub sl_index: usize,
}

impl Realization {
    pub fn new(n: usize) -> Result<Self, RealizeError> {
        check_n(n)?;
        let alg = realize(&AlgebraId::Sl { m: 2, n }).map_err(WError::from)?;
        let ctx = WContext::new(alg)?;
        let find = |label: String| -> Result<usize, RealizeError> {
            let global = ctx.alg.labels.iter().position(|l| *l == label);
            global
                .and_then(|g| ctx.dec.gminus_half.iter().position(|&x| x == g))
                .ok_or_else(|| RealizeError::Unsupported(format!("{label} is not in g_(-1/2)")))
        };
        let plus = (1..=n)
            .map(|i| find(format!("E2,{}", 2 + i)))
            .collect::<Result<Vec<_>, _>>()?;
        let minus = (1..=n)
            .map(|i| find(format!("E{},1", 2 + i)))
            .collect::<Result<Vec<_>, _>>()?;

        let comps = &ctx.dec.mg.components;
        let center = comps.iter().position(|c| c.is_center());
        let sl_index = comps.iter().position(|c| !c.is_center());
        let (Some(center), Some(sl_index)) = (center, sl_index) else {
            return Err(RealizeError::Unsupported(
                "g♮ is not center ⊕ simple".into(),
            ));
        };
        let z = ctx.dec.components[center][0].clone();
        let u = ctx.alg.basis(ctx.dec.gminus_half[plus[0]]);
        let zu = ctx.alg.bracket(&z, &u);
        let pos = ctx.dec.gminus_half[plus[0]];
        let scale = &zu[pos];
        if scale.is_zero() {
            return Err(RealizeError::Unsupported(
                "center acts trivially on G_1^+".into(),
            ));
        }
        let c: Elem = z.iter().map(|x| x / scale).collect();
        let c_coords = ctx.nat_coords(&c);
        Ok(Realization {
            n,
            k: q(n as i64 - 1, 2),
            ctx,
            plus,
            minus,
            c,
            c_coords,
            sl_index,
        })
    }

    pub fn h_vee(&self) -> Q {
        qi(2 - self.n as i64)
    }

    /// Element of `g` for a basis label such as `"E3,4"`.
    pub fn labeled(&self, label: &str) -> Elem {
        let i = self
            .ctx
            .alg
            .labels
            .iter()
            .position(|l| l == label)
            .expect("label of sl(2|n)");
        self.ctx.alg.basis(i)
    }

    /// `E_{a,a} − E_{b,b}` for odd-block indices (1-based in `sl(2|n)`).
    pub fn odd_diag_difference(&self, a: usize, b: usize) -> Elem {
        self.ctx.alg.bracket(
            &self.labeled(&format!("E{a},{b}")),
            &self.labeled(&format!("E{b},{a}")),
        )
    }

    /// `(E_{1,1} + E_{2+i,2+i})♮` projected to the `sl(n)` ideal.
    pub fn a_i(&self, i: usize) -> Elem {
        let alg = &self.ctx.alg;
        let mut v = alg.bracket(&self.labeled("E1,2"), &self.labeled("E2,1"));
        let w = alg.bracket(
            &self.labeled(&format!("E2,{}", 2 + i)),
            &self.labeled(&format!("E{},2", 2 + i)),
        );
        for (x, y) in v.iter_mut().zip(&w) {
            *x += y;
        }
        self.ctx
            .db
            .component_projection(alg, self.sl_index, &v)
            .expect("sl(n) ideal is nondegenerate")
    }

    /// Readable name of a `g`-element.
    pub fn render_elem(&self, e: &[Q]) -> String {
        render_combination(
            e.iter()
                .enumerate()
                .map(|(i, x)| (self.ctx.alg.labels[i].clone(), x.clone())),
        )
    }
}

/// `c₁·name₁ + c₂·name₂ + …`, or `0`.
pub(crate) fn render_combination(terms: impl Iterator<Item = (String, Q)>) -> String {
    let mut s = String::new();
    for (name, x) in terms {
        if x.is_zero() {
            continue;
        }
        let neg = x < Q::zero();
        let a = if neg { -x } else { x };
        if s.is_empty() {
            if neg {
                s.push('−');
            }
        } else {
            s.push_str(if neg { " − " } else { " + " });
        }
        if name.is_empty() {
            s.push_str(&fmt_q(&a));
        } else if a == qi(1) {
            s.push_str(&name);
        } else {
            s.push_str(&format!("{}·{}", fmt_q(&a), name));
        }
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}
