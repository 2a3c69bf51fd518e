use super::{central_charge_of, classify, LevelClassification, LevelsError};
use crate::exactmath::{fmt_q, qi, Q};
use crate::rootcat::{AlgebraId, Exceptional};
use num_traits::Zero;
use std::fmt;

/// A surviving affine factor `V_{k_i}(g_i♮)` of a collapsed W-algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct CollapseFactor {
    pub index: usize,
    pub tag: String,
    pub is_center: bool,
    pub level: Q,
}

/// `W_k(g,θ) = ⊗_{k_i ≠ 0} V_{k_i}(g_i♮)`; empty means `ℂ1`.
#[derive(Debug, Clone, PartialEq)]
pub struct CollapseTarget {
    pub factors: Vec<CollapseFactor>,
}

impl CollapseTarget {
    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }
}

impl fmt::Display for CollapseTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("C1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|x| {
                if x.is_center {
                    format!("Heisenberg(level {})", fmt_q(&x.level))
                } else {
                    format!("V_{}({})", fmt_q(&x.level), x.tag)
                }
            })
            .collect();
        f.write_str(&parts.join(" ⊗ "))
    }
}

fn target_of(lc: &LevelClassification, k: &Q) -> Result<CollapseTarget, LevelsError> {
    if !lc.is_collapsing(k) {
        return Err(LevelsError::NotCollapsing {
            id: lc.algebra.to_string(),
            k: fmt_q(k),
        });
    }
    let factors = lc
        .components
        .iter()
        .filter_map(|c| {
            let level = c.k_i.eval(k);
            (!level.is_zero()).then(|| CollapseFactor {
                index: c.index,
                tag: c.tag.clone(),
                is_center: c.is_center,
                level,
            })
        })
        .collect();
    Ok(CollapseTarget { factors })
}

pub fn collapse_target(id: &AlgebraId, k: &Q) -> Result<CollapseTarget, LevelsError> {
    target_of(&classify(id)?, k)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChainStep {
    pub algebra: AlgebraId,
    pub level: Q,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ChainEnd {
    /// `ℂ1`.
    Trivial,
    /// Rank-one Heisenberg `M(1)`.
    Heisenberg,
    /// Simple Virasoro algebra reached from the last `sl(2)` step.
    Virasoro { c: Q },
    /// A single affine factor that does not collapse further, or has no
    /// minimal grading in the catalog.
    Affine { tag: String, level: Q },
    /// More than one factor survives.
    MultiFactor(CollapseTarget),
}

impl fmt::Display for ChainEnd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainEnd::Trivial => f.write_str("C1"),
            ChainEnd::Heisenberg => f.write_str("Heisenberg M(1)"),
            ChainEnd::Virasoro { c } => write!(f, "Virasoro c={}", fmt_q(c)),
            ChainEnd::Affine { tag, level } => write!(f, "V_{}({})", fmt_q(level), tag),
            ChainEnd::MultiFactor(t) => write!(f, "MultiFactor {t}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CollapseChain {
    pub steps: Vec<ChainStep>,
    pub end: ChainEnd,
}

/// The catalog algebra of a simple Lie type key (`"A5"`, `"C3"`, `"E6"`, ...).
fn lie_algebra_of(tag: &str) -> Option<AlgebraId> {
    let (head, rank) = tag.split_at(1);
    let r: usize = rank.parse().ok()?;
    Some(match (head, r) {
        ("A", r) => AlgebraId::sl(r + 1),
        ("B", r) => AlgebraId::so(2 * r + 1),
        ("C", r) => AlgebraId::sp(2 * r),
        ("D", r) => AlgebraId::so(2 * r),
        ("G", 2) => AlgebraId::Exceptional(Exceptional::G2),
        ("F", 4) => AlgebraId::Exceptional(Exceptional::F4),
        ("E", 6) => AlgebraId::Exceptional(Exceptional::E6),
        ("E", 7) => AlgebraId::Exceptional(Exceptional::E7),
        ("E", 8) => AlgebraId::Exceptional(Exceptional::E8),
        _ => return None,
    })
}

/// Repeatedly replaces `(g, k)` by the single surviving simple factor and its
/// level while that level is collapsing again. An `sl(2)` factor ends the
/// chain at the Virasoro algebra of central charge `c(sl(2), k)`.
pub fn collapse_chain(id: &AlgebraId, k: &Q) -> Result<CollapseChain, LevelsError> {
    let mut steps = vec![ChainStep {
        algebra: id.clone(),
        level: k.clone(),
    }];
    let mut lc = classify(id)?;
    let mut level = k.clone();
    loop {
        let target = target_of(&lc, &level)?;
        let end = match target.factors.as_slice() {
            [] => ChainEnd::Trivial,
            [f] if f.is_center => ChainEnd::Heisenberg,
            [f] => {
                if f.tag == "A1" {
                    steps.push(ChainStep {
                        algebra: AlgebraId::sl(2),
                        level: f.level.clone(),
                    });
                    let c = central_charge_of(3, &qi(2)).eval(&f.level);
                    match c {
                        Some(c) => ChainEnd::Virasoro { c },
                        None => ChainEnd::Affine {
                            tag: f.tag.clone(),
                            level: f.level.clone(),
                        },
                    }
                } else {
                    let next =
                        lie_algebra_of(&f.tag).and_then(|a| classify(&a).ok().map(|c| (a, c)));
                    match next {
                        Some((a, c)) if c.is_collapsing(&f.level) => {
                            steps.push(ChainStep {
                                algebra: a,
                                level: f.level.clone(),
                            });
                            level = f.level.clone();
                            lc = c;
                            continue;
                        }
                        _ => ChainEnd::Affine {
                            tag: f.tag.clone(),
                            level: f.level.clone(),
                        },
                    }
                }
            }
            _ => ChainEnd::MultiFactor(target),
        };
        return Ok(CollapseChain { steps, end });
    }
}
