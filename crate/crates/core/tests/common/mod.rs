//! Family-by-family reference data written out from the closed-form family
//! statements, independent of the root-data pipeline.
#![allow(dead_code)]

use minw_core::exactmath::{fmt_q, q, qi, PolyK, Q};
use minw_core::levels::{ExclusionReason, LevelClassification};
use minw_core::rootcat::{AlgebraId, Exceptional, F4Theta, G3Theta};
use std::collections::BTreeSet;

use ExclusionReason::*;

/// Dual Coxeter number from the family formulas.
pub fn family_h_vee(id: &AlgebraId) -> Q {
    match id {
        AlgebraId::Sl { m, n } => qi(*m as i64 - *n as i64),
        AlgebraId::Psl { .. } | AlgebraId::D21a { .. } => qi(0),
        AlgebraId::Osp { m, n } => qi(*m as i64 - *n as i64 - 2),
        AlgebraId::Spo { n, m } => q(*n as i64 - *m as i64, 2) + qi(1),
        AlgebraId::F4Super(F4Theta::Sl2) => qi(-2),
        AlgebraId::F4Super(F4Theta::D212) => qi(3),
        AlgebraId::G3Super(G3Theta::Sl2) => q(-3, 2),
        AlgebraId::G3Super(G3Theta::G2) => qi(2),
        AlgebraId::Exceptional(e) => qi(match e {
            Exceptional::G2 => 4,
            Exceptional::F4 => 9,
            Exceptional::E6 => 12,
            Exceptional::E7 => 18,
            Exceptional::E8 => 30,
        }),
    }
}

/// `−2h∨/3`.
pub fn level_a(h: &Q) -> Q {
    -(h * q(2, 3))
}

/// `−(h∨−1)/2`.
pub fn level_b(h: &Q) -> Q {
    -((h - qi(1)) * q(1, 2))
}

/// Conformal non-collapsing levels and the discarded `(level, reason)` pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpectedConformal {
    pub conformal: BTreeSet<Q>,
    pub discarded: Vec<(Q, ExclusionReason)>,
}

fn exp(conformal: &[Q], discarded: &[(Q, ExclusionReason)]) -> ExpectedConformal {
    ExpectedConformal {
        conformal: conformal.iter().cloned().collect(),
        discarded: discarded.to_vec(),
    }
}

/// The per-family list of conformal non-collapsing levels.
pub fn expected_conformal(id: &AlgebraId) -> ExpectedConformal {
    let h = family_h_vee(id);
    let (a, b) = (level_a(&h), level_b(&h));
    let both = || exp(&[a.clone(), b.clone()], &[]);
    let only_a = |d: &[(Q, ExclusionReason)]| exp(&[a.clone()], d);
    let only_b = |d: &[(Q, ExclusionReason)]| exp(&[b.clone()], d);
    let none = |d: &[(Q, ExclusionReason)]| exp(&[], d);
    match id {
        AlgebraId::Sl { m: 3, n: 0 } => none(&[(b.clone(), Collapsing)]),
        AlgebraId::Sl { n: 0, .. } => both(),
        // sl(2|1) ≅ spo(2|2).
        AlgebraId::Sl { m: 2, n: 1 } => only_a(&[]),
        &AlgebraId::Sl { m, n } => {
            if m == n + 3 {
                none(&[(b.clone(), Collapsing), (a.clone(), SugawaraPole)])
            } else if n == m + 1 {
                only_a(&[(b.clone(), Critical)])
            } else if n + 1 == m {
                only_a(&[(b.clone(), SugawaraPole)])
            } else {
                both()
            }
        }
        AlgebraId::Psl { .. } => only_b(&[]),
        // so(5) ≅ sp(4), so(6) ≅ sl(4).
        AlgebraId::Osp { m: 5, n: 0 } => none(&[(a.clone(), Collapsing)]),
        AlgebraId::Osp { m: 6, n: 0 } => both(),
        &AlgebraId::Osp { m, n } => match m as i64 - n as i64 {
            5 => none(&[(a.clone(), Collapsing), (b.clone(), SugawaraPole)]),
            8 if n >= 2 => only_b(&[(a.clone(), SugawaraPole)]),
            8 => only_b(&[]),
            2 if n >= 2 => only_b(&[(a.clone(), Critical)]),
            -4 if n >= 8 => only_b(&[(a.clone(), Collapsing)]),
            7 => only_a(&[(b.clone(), Collapsing)]),
            1 if n >= 4 => only_a(&[(b.clone(), Critical)]),
            _ => both(),
        },
        &AlgebraId::Spo { n, m } => {
            if m == n + 2 {
                none(&[(a.clone(), Critical)])
            } else if m + 1 == n {
                // spo(2|1) has g♮ = 0 and no equation to solve.
                if n > 2 {
                    none(&[(a.clone(), SugawaraPole)])
                } else {
                    none(&[])
                }
            } else if m + 4 == n {
                none(&[(a.clone(), Collapsing)])
            } else {
                only_a(&[])
            }
        }
        AlgebraId::D21a { a: x } => {
            let zero = (qi(0), Critical);
            if *x == q(1, 2) || *x == q(-3, 2) {
                none(&[zero, (q(1, 2), Collapsing)])
            } else if *x == q(-1, 2) {
                none(&[zero, (q(1, 2), SugawaraPole)])
            } else {
                only_b(&[zero])
            }
        }
        // h∨ = 3 here, so −(h∨−1)/2 = −1 = −h∨/3 is a root of p(k), exactly as for sl(3).
        AlgebraId::F4Super(F4Theta::D212) => none(&[(b.clone(), Collapsing)]),
        AlgebraId::F4Super(_) | AlgebraId::G3Super(_) | AlgebraId::Exceptional(_) => only_b(&[]),
    }
}

/// Differences between a computed classification and the family list: the
/// conformal sets must agree, every discarded level must be excluded for the
/// stated reason and appear in the ledger when it solves the cleared equation,
/// and every candidate must be one of the two universal levels.
pub fn compare_conformal(lc: &LevelClassification, e: &ExpectedConformal) -> Vec<String> {
    let id = lc.algebra.to_string();
    let mut out = Vec::new();
    if lc.conformal_noncollapsing != e.conformal {
        out.push(format!(
            "{id}: conformal {:?}, expected {:?}",
            lc.conformal_noncollapsing
                .iter()
                .map(fmt_q)
                .collect::<Vec<_>>(),
            e.conformal.iter().map(fmt_q).collect::<Vec<_>>()
        ));
    }
    for (k, r) in &e.discarded {
        if lc.exclusion(k) != Some(*r) {
            out.push(format!(
                "{id}: {} should be excluded as {r}, got {:?}",
                fmt_q(k),
                lc.exclusion(k)
            ));
        }
        let candidate = lc.excluded.iter().any(|(x, _)| x == k);
        if candidate && !lc.excluded.contains(&(k.clone(), *r)) {
            out.push(format!(
                "{id}: ledger has {} with a different reason",
                fmt_q(k)
            ));
        }
    }
    let universal = [level_a(&lc.h_vee), level_b(&lc.h_vee)];
    for k in lc
        .conformal_noncollapsing
        .iter()
        .chain(lc.excluded.iter().map(|(k, _)| k))
    {
        if !universal.contains(k) {
            out.push(format!(
                "{id}: candidate {} is neither −2h∨/3 nor −(h∨−1)/2",
                fmt_q(k)
            ));
        }
    }
    out
}

fn in_deligne_like_family(id: &AlgebraId) -> bool {
    match id {
        AlgebraId::Sl { m: 3, n: 0 } | AlgebraId::Osp { m: 8, n: 0 } => true,
        AlgebraId::Psl { .. }
        | AlgebraId::F4Super(_)
        | AlgebraId::G3Super(_)
        | AlgebraId::Exceptional(_) => true,
        AlgebraId::Osp { m, n } => *n >= 2 && *m == n + 8,
        AlgebraId::Spo { n: 2, m: 1 } => true,
        _ => false,
    }
}

/// `spo(n|m)` up to isomorphism: `sp(n)`, `so(5)`, `sl(2|1)` and the
/// `D(2,1;-1/2)` grading, which coincides with that of `spo(2|4)`.
fn in_spo_family(id: &AlgebraId) -> bool {
    match id {
        AlgebraId::Spo { .. } | AlgebraId::Osp { m: 5, n: 0 } | AlgebraId::Sl { m: 2, n: 1 } => {
            true
        }
        AlgebraId::D21a { a } => *a == q(-1, 2),
        _ => false,
    }
}

/// Levels with `W_k = ℂ1` from the two families: `−h∨/6 − 1` and `−1/2`.
pub fn expected_trivial(id: &AlgebraId) -> BTreeSet<Q> {
    let h = family_h_vee(id);
    let mut s = BTreeSet::new();
    if in_deligne_like_family(id) {
        s.insert(-(&h * q(1, 6)) - qi(1));
    }
    // −1/2 is the critical level when h∨ = 1/2, i.e. for spo(n|n+1).
    if in_spo_family(id) && h != q(1, 2) {
        s.insert(q(-1, 2));
    }
    s
}

/// A closed form for `(sdim g, p(k), h∨_0 of every simple ideal of g♮)`.
pub struct ClosedForm {
    pub name: &'static str,
    pub sdim: Q,
    pub p: PolyK,
    pub h0: Option<Q>,
}

/// All closed forms that apply to a catalog entry.
pub fn closed_forms(id: &AlgebraId) -> Vec<ClosedForm> {
    let h = family_h_vee(id);
    let mut out = Vec::new();
    let one = qi(1);
    if in_deligne_like_family(id) {
        out.push(ClosedForm {
            name: "exceptional-series",
            sdim: qi(2) * (&h + &one) * (qi(5) * &h - qi(6)) / (&h + qi(6)),
            p: &PolyK::linear(&h * q(1, 6) + &one) * &PolyK::linear(&h * q(1, 3)),
            h0: Some(&h * q(2, 3) - qi(2)),
        });
    }
    if matches!(id, AlgebraId::Spo { .. }) {
        out.push(ClosedForm {
            name: "spo",
            sdim: (qi(2) * &h - &one) * (&h - &one),
            p: &PolyK::linear(q(1, 2)) * &PolyK::linear((&h + &one) * q(1, 2)),
            h0: Some(&h - &one),
        });
    }
    if matches!(id, AlgebraId::Sl { .. }) {
        out.push(ClosedForm {
            name: "sl",
            sdim: &h * &h - &one,
            p: &PolyK::linear(one.clone()) * &PolyK::linear(&h * q(1, 2)),
            h0: None,
        });
    }
    if matches!(id, AlgebraId::Osp { .. }) {
        out.push(ClosedForm {
            name: "osp",
            sdim: (&h + &one) * (&h + qi(2)) * q(1, 2),
            p: &PolyK::linear(qi(2)) * &PolyK::linear((&h - qi(2)) * q(1, 2)),
            h0: None,
        });
    }
    out
}
