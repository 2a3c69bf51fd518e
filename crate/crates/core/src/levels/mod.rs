//! Collapsing, trivial and conformal levels, central charges and collapse
//! chains for every catalog entry.
//!
//! Everything here is computed from root data. The only tabulated input is the
//! quadratic `p(k)` (see [`crate::rootcat::reference`]), which the λ-bracket
//! module recomputes independently wherever a matrix realization exists.

mod charges;
mod collapse;
mod record;

pub use charges::{central_charge_of, sugawara_term};
pub use collapse::{
    collapse_chain, collapse_target, ChainEnd, ChainStep, CollapseChain, CollapseFactor,
    CollapseTarget,
};
pub use record::ClassificationRecord;

use crate::exactmath::{
    fmt_q, q, qi, ratfun_equal_solutions, rational_roots, ExactError, PolyK, RatFunK, Solutions, Q,
};
use crate::rootcat::{
    build_catalog_entry, halfspace_weights, minimal_grading, reference::table_row, superdimensions,
    weight_casimir, AlgebraId, CatalogError,
};
use num_traits::Zero;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LevelsError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("{id}: k = {k} is not a collapsing level")]
    NotCollapsing { id: String, k: String },
    #[error("{id}: conformal-level equation has different solutions on different summands of g_(-1/2): {detail}")]
    ComponentDependent { id: String, detail: String },
    #[error(
        "{id}: c(g,k) = c_sug solution set differs; missing {missing:?}, unexpected {unexpected:?}"
    )]
    SetMismatch {
        id: String,
        missing: Vec<String>,
        unexpected: Vec<String>,
    },
}

/// Why a candidate conformal level is not a conformal non-collapsing level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExclusionReason {
    /// `k + h∨ = 0`.
    Critical,
    /// `p(k) = 0`.
    Collapsing,
    /// Some `k_i = 0`.
    KiZero,
    /// Some `k_i + h∨_{0,i} = 0` with `k_i ≠ 0`.
    SugawaraPole,
}

impl ExclusionReason {
    pub fn tag(self) -> &'static str {
        match self {
            ExclusionReason::Critical => "critical",
            ExclusionReason::Collapsing => "collapsing",
            ExclusionReason::KiZero => "ki_zero",
            ExclusionReason::SugawaraPole => "sugawara_pole",
        }
    }
}

impl fmt::Display for ExclusionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// One minimal ideal of `g♮` with its level.
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentLevel {
    pub index: usize,
    /// Isomorphism type key, `"center"` for the center.
    pub tag: String,
    pub is_center: bool,
    pub h0: Q,
    /// `k_i = k + (h∨ − h∨_{0,i})/2`.
    pub k_i: PolyK,
    pub sdim: i64,
}

impl ComponentLevel {
    /// `k_i + h∨_{0,i}`.
    pub fn sugawara_denominator(&self) -> PolyK {
        &self.k_i + &PolyK::constant(self.h0.clone())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LevelClassification {
    pub algebra: AlgebraId,
    pub h_vee: Q,
    pub components: Vec<ComponentLevel>,
    pub p_of_k: PolyK,
    pub collapsing: BTreeSet<Q>,
    pub trivial: BTreeSet<Q>,
    pub conformal_noncollapsing: BTreeSet<Q>,
    /// Candidate solutions of the conformal-level equation that were discarded.
    pub excluded: Vec<(Q, ExclusionReason)>,
    pub c_g: RatFunK,
    /// Generic branch: every `k_i ≠ 0`.
    pub c_sug: RatFunK,
    /// `(μ^i|μ^i + 2ρ_0^i)` per component, for the first summand of `g_{-1/2}`.
    pub weight_casimirs: Vec<Q>,
}

impl LevelClassification {
    /// Whether `k` lies in the set where the Sugawara vectors make sense:
    /// `k + h∨ ≠ 0` and `k_i + h∨_{0,i} ≠ 0` whenever `k_i ≠ 0`.
    pub fn in_sugawara_domain(&self, k: &Q) -> bool {
        if (k + &self.h_vee).is_zero() {
            return false;
        }
        self.components
            .iter()
            .all(|c| c.k_i.eval(k).is_zero() || !c.sugawara_denominator().eval(k).is_zero())
    }

    pub fn is_collapsing(&self, k: &Q) -> bool {
        self.collapsing.contains(k)
    }

    /// First applicable reason in the order critical, collapsing, ki_zero, sugawara_pole.
    pub fn exclusion(&self, k: &Q) -> Option<ExclusionReason> {
        if (k + &self.h_vee).is_zero() {
            Some(ExclusionReason::Critical)
        } else if self.p_of_k.eval(k).is_zero() {
            Some(ExclusionReason::Collapsing)
        } else if self.components.iter().any(|c| c.k_i.eval(k).is_zero()) {
            Some(ExclusionReason::KiZero)
        } else if !self.in_sugawara_domain(k) {
            Some(ExclusionReason::SugawaraPole)
        } else {
            None
        }
    }

    /// Central charge of `Σ_{i: k_i≠0} ω^i_sug` at a given level; `None` outside
    /// the Sugawara domain.
    pub fn sugawara_central_charge_at(&self, k: &Q) -> Option<Q> {
        if !self.in_sugawara_domain(k) {
            return None;
        }
        let mut total = Q::zero();
        for c in &self.components {
            let ki = c.k_i.eval(k);
            if ki.is_zero() {
                continue;
            }
            total += sugawara_term(&c.k_i, c.sdim, &c.h0, c.is_center).eval(k)?;
        }
        Some(total)
    }

    /// Conformal levels in the sense of the Sugawara vector equalling `ω`:
    /// collapsing levels in the Sugawara domain together with the non-collapsing ones.
    pub fn conformal_levels(&self) -> BTreeSet<Q> {
        let mut out: BTreeSet<Q> = self
            .collapsing
            .iter()
            .filter(|k| self.in_sugawara_domain(k))
            .cloned()
            .collect();
        out.extend(self.conformal_noncollapsing.iter().cloned());
        out
    }

    pub fn record(&self) -> ClassificationRecord {
        ClassificationRecord::from(self)
    }
}

fn roots_of(p: &PolyK) -> Result<Vec<Q>, LevelsError> {
    if p.degree() == 0 {
        return Ok(vec![]);
    }
    let rs = rational_roots(p)?;
    if !rs.splits {
        return Err(ExactError::IrrationalSolutions {
            roots: rs.roots,
            residual: rs.residual,
        }
        .into());
    }
    Ok(rs.roots)
}

/// `c(g,k)` for a catalog entry.
pub fn central_charge(id: &AlgebraId) -> Result<RatFunK, LevelsError> {
    let rd = build_catalog_entry(id)?;
    let mg = minimal_grading(&rd)?;
    Ok(central_charge_of(rd.sdim(), &mg.h_vee))
}

/// Rational roots of `Σ_i (μ^i|μ^i+2ρ_0^i) / 2(k_i + h∨_{0,i}) = 3/2` for one
/// summand of `g_{-1/2}`, after multiplying through by every denominator.
/// Roots of the cleared equation that sit on a pole are kept so the caller can
/// record why they are discarded.
fn conformal_candidates(
    components: &[ComponentLevel],
    casimirs: &[Q],
) -> Result<Vec<Q>, LevelsError> {
    let dens: Vec<PolyK> = components
        .iter()
        .map(|c| c.sugawara_denominator().scale(&qi(2)))
        .collect();
    let all = dens.iter().fold(PolyK::one(), |acc, d| &acc * d);
    let mut cleared = all.scale(&q(-3, 2));
    for (i, w) in casimirs.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let others = dens
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .fold(PolyK::one(), |acc, (_, d)| &acc * d);
        cleared = &cleared + &others.scale(w);
    }
    if cleared.is_zero() {
        return Ok(vec![]);
    }
    roots_of(&cleared)
}

pub fn classify(id: &AlgebraId) -> Result<LevelClassification, LevelsError> {
    let rd = build_catalog_entry(id)?;
    let mg = minimal_grading(&rd)?;
    if !mg.is_direct_sum() {
        let c = mg
            .components
            .iter()
            .find(|c| c.degenerate)
            .expect("degenerate component");
        return Err(CatalogError::DegenerateComponent {
            id: id.to_string(),
            component: c.key(),
        }
        .into());
    }
    let h = mg.h_vee.clone();
    let sd = superdimensions(&rd, &mg);
    let components: Vec<ComponentLevel> = mg
        .components
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let h0 = if c.is_center() {
                Q::zero()
            } else {
                c.h0.clone()
            };
            ComponentLevel {
                index: i,
                tag: c.key(),
                is_center: c.is_center(),
                k_i: PolyK::linear((&h - &h0) * q(1, 2)),
                h0,
                sdim: sd.per_component[i],
            }
        })
        .collect();
    let p = table_row(id).p;

    let critical = -h.clone();
    let collapsing: BTreeSet<Q> = roots_of(&p)?
        .into_iter()
        .filter(|k| *k != critical)
        .collect();
    let trivial: BTreeSet<Q> = collapsing
        .iter()
        .filter(|k| components.iter().all(|c| c.k_i.eval(k).is_zero()))
        .cloned()
        .collect();

    let hw = halfspace_weights(&rd, &mg)?;
    let mut candidates: Option<(Vec<Q>, Vec<Q>)> = None;
    for piece in &hw.pieces {
        let casimirs: Vec<Q> = (0..components.len())
            .map(|i| weight_casimir(&rd, &mg, i, &piece.mu[i]))
            .collect();
        let sols = conformal_candidates(&components, &casimirs)?;
        match &candidates {
            None => candidates = Some((sols, casimirs)),
            Some((prev, _)) if *prev != sols => {
                return Err(LevelsError::ComponentDependent {
                    id: id.to_string(),
                    detail: format!(
                        "{:?} vs {:?}",
                        prev.iter().map(fmt_q).collect::<Vec<_>>(),
                        sols.iter().map(fmt_q).collect::<Vec<_>>()
                    ),
                })
            }
            _ => {}
        }
    }
    let (candidates, weight_casimirs) = candidates.unwrap_or_default();

    let c_g = central_charge_of(sd.sdim_g, &h);
    let mut c_sug = RatFunK::zero();
    for c in &components {
        c_sug = &c_sug + &sugawara_term(&c.k_i, c.sdim, &c.h0, c.is_center);
    }

    let mut out = LevelClassification {
        algebra: id.clone(),
        h_vee: h,
        components,
        p_of_k: p,
        collapsing,
        trivial,
        conformal_noncollapsing: BTreeSet::new(),
        excluded: Vec::new(),
        c_g,
        c_sug,
        weight_casimirs,
    };
    for k in candidates {
        match out.exclusion(&k) {
            Some(r) => out.excluded.push((k, r)),
            None => {
                out.conformal_noncollapsing.insert(k);
            }
        }
    }
    Ok(out)
}

/// Levels with `W_k = ℂ1`: collapsing with every `k_i = 0`.
pub fn trivial_levels(id: &AlgebraId) -> Result<BTreeSet<Q>, LevelsError> {
    Ok(classify(id)?.trivial)
}

/// Outcome of comparing the solutions of `c(g,k) = c_sug` with the conformal levels.
#[derive(Debug, Clone, PartialEq)]
pub struct LevelEquationReport {
    pub algebra: AlgebraId,
    pub solutions: BTreeSet<Q>,
    pub expected: BTreeSet<Q>,
}

/// Solves `c(g,k) = c_sug(k)`, where `c_sug` drops components with `k_i = 0`,
/// and checks that the solutions are exactly the conformal levels.
pub fn check_level_equation(lc: &LevelClassification) -> Result<LevelEquationReport, LevelsError> {
    let id = lc.algebra.to_string();
    let special: Vec<Q> = lc
        .components
        .iter()
        .flat_map(|c| roots_of(&c.k_i).unwrap_or_default())
        .collect();
    let mut solutions = BTreeSet::new();
    match ratfun_equal_solutions(&lc.c_g, &lc.c_sug, &special)? {
        Solutions::Finite(v) => {
            solutions.extend(v.into_iter().filter(|k| lc.in_sugawara_domain(k)));
        }
        Solutions::AllK => {
            return Err(LevelsError::SetMismatch {
                id,
                missing: vec![],
                unexpected: vec!["all k".into()],
            })
        }
    }
    for k in special {
        if !lc.in_sugawara_domain(&k) {
            continue;
        }
        if let (Some(cg), Some(cs)) = (lc.c_g.eval(&k), lc.sugawara_central_charge_at(&k)) {
            if cg == cs {
                solutions.insert(k);
            }
        }
    }
    let expected = lc.conformal_levels();
    if solutions != expected {
        return Err(LevelsError::SetMismatch {
            id,
            missing: expected.difference(&solutions).map(fmt_q).collect(),
            unexpected: solutions.difference(&expected).map(fmt_q).collect(),
        });
    }
    Ok(LevelEquationReport {
        algebra: lc.algebra.clone(),
        solutions,
        expected,
    })
}
