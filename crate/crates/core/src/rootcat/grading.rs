use super::identify::{super_key, LieType};
use super::{CatalogError, RootDatum};
use crate::exactmath::{linalg, qi, Q};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentKind {
    /// Abelian center of `g♮`.
    Center { dim: usize },
    /// Simple ideal, keyed by isomorphism type.
    Simple { key: String, lie: Option<LieType> },
}

/// One minimal ideal of `g♮` (or its center).
#[derive(Debug, Clone)]
pub struct GnatComponent {
    pub kind: ComponentKind,
    /// Root indices belonging to this ideal.
    pub roots: Vec<usize>,
    pub rank: usize,
    /// Linearly independent roots spanning the ideal's part of the Cartan dual.
    pub span: Vec<usize>,
    /// Highest root under the global order.
    pub theta: Option<usize>,
    pub rho: Vec<Q>,
    /// Dual Coxeter number in the normalization of `g`.
    pub h0: Q,
    pub even_dim: usize,
    pub odd_dim: usize,
    /// The restricted form is singular on the span; `g♮` is then not a direct sum
    /// of minimal ideals.
    pub degenerate: bool,
}

impl GnatComponent {
    pub fn sdim(&self) -> i64 {
        self.even_dim as i64 - self.odd_dim as i64
    }

    pub fn is_center(&self) -> bool {
        matches!(self.kind, ComponentKind::Center { .. })
    }

    pub fn key(&self) -> String {
        match &self.kind {
            ComponentKind::Center { .. } => "center".into(),
            ComponentKind::Simple { key, .. } => key.clone(),
        }
    }
}

/// Root-level data of the minimal grading defined by θ.
#[derive(Debug, Clone)]
pub struct MinimalGrading {
    /// `(η|θ)/2` per root.
    pub grade: Vec<Q>,
    pub positive: Vec<bool>,
    pub rho: Vec<Q>,
    pub h_vee: Q,
    /// Center first (if present), then simple ideals.
    pub components: Vec<GnatComponent>,
}

impl MinimalGrading {
    pub fn has_center(&self) -> bool {
        self.components.first().is_some_and(|c| c.is_center())
    }

    pub fn is_direct_sum(&self) -> bool {
        !self.components.iter().any(|c| c.degenerate)
    }

    pub fn roots_with_grade(&self, g: &Q) -> Vec<usize> {
        (0..self.grade.len())
            .filter(|&i| &self.grade[i] == g)
            .collect()
    }
}

/// Orders roots by `(η|θ)` first, then lexicographically by coordinates.
pub fn root_order(rd: &RootDatum, a: usize, b: usize) -> Ordering {
    let ta = rd.root_inner(a, rd.theta);
    let tb = rd.root_inner(b, rd.theta);
    ta.cmp(&tb).then_with(|| rd.roots[a].v.cmp(&rd.roots[b].v))
}

fn is_positive(rd: &RootDatum, i: usize) -> bool {
    let t = rd.root_inner(i, rd.theta);
    if !t.is_zero() {
        return t.is_positive();
    }
    rd.roots[i]
        .v
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_positive())
}

/// `½ Σ_{even>0} η − ½ Σ_{odd>0} η` over the given positive roots.
fn weyl_vector(rd: &RootDatum, roots: &[usize], positive: &[bool]) -> Vec<Q> {
    let half = Q::new(1.into(), 2.into());
    let mut rho = vec![Q::zero(); rd.ambient()];
    for &i in roots {
        if !positive[i] {
            continue;
        }
        let s = if rd.roots[i].odd {
            -half.clone()
        } else {
            half.clone()
        };
        for (r, x) in rho.iter_mut().zip(&rd.roots[i].v) {
            *r += &s * x;
        }
    }
    rho
}

fn plus(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn minus(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn scaled(a: &[Q], s: &Q) -> Vec<Q> {
    a.iter().map(|x| x * s).collect()
}

/// Union-find grouping of `set` under a symmetric relation.
fn group(set: &[usize], related: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let n = set.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if related(set[i], set[j]) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(vec![]);
        }
        groups[slot[r]].push(set[i]);
    }
    groups
}

/// Dual-coordinate images `G v` of roots, whose rank is the dimension of the
/// span modulo the radical of the form.
fn span_rank(rd: &RootDatum, roots: &[usize]) -> (usize, Vec<usize>) {
    let images: Vec<Vec<Q>> = roots
        .iter()
        .map(|&i| linalg::mat_vec(&rd.gram, &rd.roots[i].v))
        .collect();
    let idx = linalg::independent_subset(&images);
    (idx.len(), idx.into_iter().map(|k| roots[k]).collect())
}

/// Orthogonal projection of `w` onto the span of the given roots. `None` when
/// the restricted form is singular.
pub fn project(rd: &RootDatum, span: &[usize], w: &[Q]) -> Option<Vec<Q>> {
    if span.is_empty() {
        return Some(vec![Q::zero(); rd.ambient()]);
    }
    let m: linalg::Matrix = span
        .iter()
        .map(|&i| span.iter().map(|&j| rd.root_inner(i, j)).collect())
        .collect();
    let rhs: Vec<Q> = span.iter().map(|&i| rd.inner(&rd.roots[i].v, w)).collect();
    let inv = linalg::inverse(&m)?;
    let c = linalg::mat_vec(&inv, &rhs);
    let mut out = vec![Q::zero(); rd.ambient()];
    for (ci, &i) in c.iter().zip(span) {
        for (o, x) in out.iter_mut().zip(&rd.roots[i].v) {
            *o += ci * x;
        }
    }
    Some(out)
}

fn classify_component(rd: &RootDatum, roots: &[usize], rank: usize) -> ComponentKind {
    let odd = roots.iter().filter(|&&i| rd.roots[i].odd).count();
    let even = roots.len() - odd;
    if odd == 0 {
        let lens: Vec<Q> = roots.iter().map(|&i| rd.root_inner(i, i).abs()).collect();
        let max = lens.iter().max().cloned().unwrap_or_else(Q::zero);
        let long = lens.iter().filter(|l| **l == max).count();
        let lie = LieType::identify(rank, roots.len(), long);
        let key = lie
            .map(|t| t.key())
            .unwrap_or_else(|| format!("lie[{rank};{}]", roots.len()));
        return ComponentKind::Simple { key, lie };
    }
    let mut a = None;
    if (even + rank, odd, rank) == (9, 8, 3) {
        let evens: Vec<usize> = roots
            .iter()
            .copied()
            .filter(|&i| !rd.roots[i].odd)
            .collect();
        let lens: Vec<Q> = evens
            .iter()
            .filter(|&&i| is_positive(rd, i))
            .map(|&i| rd.root_inner(i, i))
            .collect();
        if lens.len() == 3 && !lens[1].is_zero() {
            a = Some(&lens[0] / &lens[1]);
        }
    }
    ComponentKind::Simple {
        key: super_key(even + rank, odd, rank, a.as_ref()),
        lie: None,
    }
}

/// Computes grading, positive system, `h∨` and the `g♮` components.
pub fn minimal_grading(rd: &RootDatum) -> Result<MinimalGrading, CatalogError> {
    let n = rd.roots.len();
    let two = qi(2);
    let theta = rd.theta;
    let neg_theta = rd.negate(theta);
    let mut grade = Vec::with_capacity(n);
    for i in 0..n {
        let t = rd.root_inner(i, theta);
        let ok =
            t.is_zero() || t.abs() == qi(1) || ((i == theta || i == neg_theta) && t.abs() == two);
        if !ok {
            return Err(CatalogError::GradingViolation {
                id: rd.id.to_string(),
                detail: format!("root #{i} has (η|θ) = {t}"),
            });
        }
        grade.push(t / &two);
    }
    if rd.roots[theta].odd {
        return Err(CatalogError::GradingViolation {
            id: rd.id.to_string(),
            detail: "θ is odd".into(),
        });
    }
    let positive: Vec<bool> = (0..n).map(|i| is_positive(rd, i)).collect();
    let all: Vec<usize> = (0..n).collect();
    let rho = weyl_vector(rd, &all, &positive);
    let tv = rd.theta_vec().to_vec();
    let h_vee = rd.inner(&tv, &plus(&tv, &scaled(&rho, &two))) / &two;

    let nat: Vec<usize> = (0..n).filter(|&i| grade[i].is_zero()).collect();
    let in_nat = |v: &[Q]| rd.find(v).is_some_and(|j| grade[j].is_zero());
    let groups = group(&nat, |a, b| {
        let va = &rd.roots[a].v;
        let vb = &rd.roots[b].v;
        rd.negate(a) == b || in_nat(&plus(va, vb)) || in_nat(&minus(va, vb))
    });
    let mut comps = Vec::new();
    let mut rank_total = 0;
    for g in groups {
        let (rank, span) = span_rank(rd, &g);
        rank_total += rank;
        let top = *g
            .iter()
            .max_by(|&&a, &&b| root_order(rd, a, b))
            .expect("nonempty");
        let crho = weyl_vector(rd, &g, &positive);
        let tvi = rd.roots[top].v.clone();
        let h0 = rd.inner(&tvi, &plus(&tvi, &scaled(&crho, &two))) / &two;
        let m: linalg::Matrix = span
            .iter()
            .map(|&i| span.iter().map(|&j| rd.root_inner(i, j)).collect())
            .collect();
        let degenerate = linalg::rank(&m) < span.len();
        let odd = g.iter().filter(|&&i| rd.roots[i].odd).count();
        let kind = classify_component(rd, &g, rank);
        comps.push(GnatComponent {
            kind,
            even_dim: rank + g.len() - odd,
            odd_dim: odd,
            roots: g,
            rank,
            span,
            theta: Some(top),
            rho: crho,
            h0,
            degenerate,
        });
    }
    // Deterministic order: by descending rank, then key.
    comps.sort_by(|a, b| {
        b.rank
            .cmp(&a.rank)
            .then_with(|| a.key().cmp(&b.key()))
            .then_with(|| a.roots.cmp(&b.roots))
    });
    let center_dim = rd.cartan_dim as i64 - 1 - rank_total as i64;
    assert!(center_dim >= 0, "negative center dimension for {}", rd.id);
    if center_dim > 0 {
        comps.insert(
            0,
            GnatComponent {
                kind: ComponentKind::Center {
                    dim: center_dim as usize,
                },
                roots: vec![],
                rank: center_dim as usize,
                span: vec![],
                theta: None,
                rho: vec![Q::zero(); rd.ambient()],
                h0: Q::zero(),
                even_dim: center_dim as usize,
                odd_dim: 0,
                degenerate: false,
            },
        );
    }
    Ok(MinimalGrading {
        grade,
        positive,
        rho,
        h_vee,
        components: comps,
    })
}

/// `h∨ = (θ|θ+2ρ)/2`.
pub fn dual_coxeter(rd: &RootDatum) -> Result<Q, CatalogError> {
    Ok(minimal_grading(rd)?.h_vee)
}

/// `h∨_{0,i}`; zero for the center.
pub fn component_dual_coxeter(mg: &MinimalGrading, i: usize) -> Q {
    mg.components[i].h0.clone()
}

/// Whether `g_{-1/2}` is irreducible or a sum of two contragredient pieces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplicity {
    Irreducible,
    DualPair,
}

/// One irreducible `g♮`-submodule of `g_{-1/2}`.
#[derive(Debug, Clone)]
pub struct HalfSpacePiece {
    pub roots: Vec<usize>,
    /// Highest root of the piece.
    pub highest: usize,
    /// Restriction of the shifted highest weight to each component, aligned with
    /// `MinimalGrading::components` (the center entry holds the leftover part).
    pub mu: Vec<Vec<Q>>,
    pub even_dim: usize,
    pub odd_dim: usize,
}

#[derive(Debug, Clone)]
pub struct HalfSpaceWeights {
    pub pieces: Vec<HalfSpacePiece>,
    pub multiplicity: Multiplicity,
}

/// Splits `g_{-1/2}` into `g♮`-irreducibles and records their highest weights.
pub fn halfspace_weights(
    rd: &RootDatum,
    mg: &MinimalGrading,
) -> Result<HalfSpaceWeights, CatalogError> {
    let minus_half = Q::new((-1).into(), 2.into());
    let half_roots = mg.roots_with_grade(&minus_half);
    let in_nat = |v: &[Q]| rd.find(v).is_some_and(|j| mg.grade[j].is_zero());
    let groups = group(&half_roots, |a, b| {
        in_nat(&minus(&rd.roots[a].v, &rd.roots[b].v))
    });
    let tv = rd.theta_vec().to_vec();
    let half = Q::new(1.into(), 2.into());
    let mut pieces = Vec::new();
    for g in groups {
        let top = *g
            .iter()
            .max_by(|&&a, &&b| root_order(rd, a, b))
            .expect("nonempty");
        let mubar = plus(&rd.roots[top].v, &scaled(&tv, &half));
        let mut mu = Vec::new();
        let mut left = mubar.clone();
        for c in &mg.components {
            if c.is_center() {
                mu.push(vec![]);
                continue;
            }
            let p =
                project(rd, &c.span, &mubar).ok_or_else(|| CatalogError::DegenerateComponent {
                    id: rd.id.to_string(),
                    component: c.key(),
                })?;
            left = minus(&left, &p);
            mu.push(p);
        }
        if mg.has_center() {
            mu[0] = left;
        }
        let odd = g.iter().filter(|&&i| rd.roots[i].odd).count();
        pieces.push(HalfSpacePiece {
            even_dim: g.len() - odd,
            odd_dim: odd,
            roots: g,
            highest: top,
            mu,
        });
    }
    pieces.sort_by(|a, b| root_order(rd, b.highest, a.highest));
    let multiplicity = match pieces.len() {
        1 => Multiplicity::Irreducible,
        2 => Multiplicity::DualPair,
        k => {
            return Err(CatalogError::GradingViolation {
                id: rd.id.to_string(),
                detail: format!("g_(-1/2) splits into {k} pieces"),
            })
        }
    };
    Ok(HalfSpaceWeights {
        pieces,
        multiplicity,
    })
}

/// `(μ^i | μ^i + 2ρ_0^i)`, or `(μ^0|μ^0)` for the center.
pub fn weight_casimir(rd: &RootDatum, mg: &MinimalGrading, i: usize, mu: &[Q]) -> Q {
    let c = &mg.components[i];
    if c.is_center() {
        return rd.inner(mu, mu);
    }
    rd.inner(mu, &plus(mu, &scaled(&c.rho, &qi(2))))
}

/// Superdimension bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Superdimensions {
    pub sdim_g: i64,
    pub sdim_g0: i64,
    pub sdim_ghalf: i64,
    pub per_component: Vec<i64>,
}

pub fn superdimensions(rd: &RootDatum, mg: &MinimalGrading) -> Superdimensions {
    let count = |g: &Q| -> i64 {
        mg.roots_with_grade(g)
            .iter()
            .map(|&i| if rd.roots[i].odd { -1 } else { 1 })
            .sum()
    };
    Superdimensions {
        sdim_g: rd.sdim(),
        sdim_g0: rd.cartan_dim as i64 + count(&Q::zero()),
        sdim_ghalf: count(&Q::new(1.into(), 2.into())),
        per_component: mg.components.iter().map(|c| c.sdim()).collect(),
    }
}
