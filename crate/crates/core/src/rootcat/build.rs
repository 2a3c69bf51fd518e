use super::{AlgebraId, CatalogError, Exceptional, F4Theta, G3Theta};
use crate::exactmath::{linalg::Matrix, q, qi, Q};
use num_traits::{One, Zero};
use std::collections::HashMap;

/// A root in ambient coordinates together with its parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub v: Vec<Q>,
    pub odd: bool,
}

/// Root system with an invariant form normalized so that `(θ|θ) = 2`.
///
/// Roots are stored in an ambient coordinate space that may be larger than
/// the Cartan subalgebra dual (for `sl(m|n)` and `psl(m|m)`), so the Cartan
/// dimension is recorded separately.
#[derive(Debug, Clone)]
pub struct RootDatum {
    pub id: AlgebraId,
    pub gram: Matrix,
    pub roots: Vec<Root>,
    pub cartan_dim: usize,
    pub theta: usize,
    index: HashMap<Vec<Q>, usize>,
}

impl RootDatum {
    fn new(
        id: AlgebraId,
        gram: Matrix,
        roots: Vec<Root>,
        cartan_dim: usize,
        theta: Vec<Q>,
    ) -> Self {
        let index: HashMap<Vec<Q>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.v.clone(), i))
            .collect();
        assert_eq!(index.len(), roots.len(), "duplicate root in {id}");
        let t = *index
            .get(&theta)
            .unwrap_or_else(|| panic!("θ is not a root of {id}"));
        let mut rd = RootDatum {
            id,
            gram,
            roots,
            cartan_dim,
            theta: t,
            index,
        };
        let tt = rd.inner(&rd.roots[t].v.clone(), &rd.roots[t].v.clone());
        let s = qi(2) / tt;
        for row in rd.gram.iter_mut() {
            for x in row.iter_mut() {
                *x *= &s;
            }
        }
        rd
    }

    pub fn ambient(&self) -> usize {
        self.gram.len()
    }

    pub fn inner(&self, a: &[Q], b: &[Q]) -> Q {
        let mut s = Q::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() && !self.gram[i][j].is_zero() {
                    s += ai * &self.gram[i][j] * bj;
                }
            }
        }
        s
    }

    pub fn root_inner(&self, i: usize, j: usize) -> Q {
        self.inner(&self.roots[i].v, &self.roots[j].v)
    }

    pub fn theta_vec(&self) -> &[Q] {
        &self.roots[self.theta].v
    }

    /// Index of the root with these coordinates.
    pub fn find(&self, v: &[Q]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn negate(&self, i: usize) -> usize {
        let v: Vec<Q> = self.roots[i].v.iter().map(|x| -x).collect();
        self.find(&v).expect("roots closed under negation")
    }

    /// Even roots minus odd roots plus the Cartan dimension.
    pub fn sdim(&self) -> i64 {
        let odd = self.roots.iter().filter(|r| r.odd).count() as i64;
        let even = self.roots.len() as i64 - odd;
        self.cartan_dim as i64 + even - odd
    }
}

fn unit(n: usize, i: usize, c: Q) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = c;
    v
}

fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn neg(a: &[Q]) -> Vec<Q> {
    a.iter().map(|x| -x).collect()
}

fn diag(entries: &[Q]) -> Matrix {
    let n = entries.len();
    (0..n).map(|i| unit(n, i, entries[i].clone())).collect()
}

struct Acc {
    roots: Vec<Root>,
}

impl Acc {
    fn push(&mut self, v: Vec<Q>, odd: bool) {
        if !self.roots.iter().any(|r| r.v == v) {
            self.roots.push(Root { v, odd });
        }
    }
    fn push_pm(&mut self, v: Vec<Q>, odd: bool) {
        self.push(neg(&v), odd);
        self.push(v, odd);
    }
}

fn sl_roots(m: usize, n: usize) -> Vec<Root> {
    let dim = m + n;
    let e = |i: usize| unit(dim, i, Q::one());
    let mut acc = Acc { roots: vec![] };
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                let odd = (i < m) != (j < m);
                acc.push(add(&e(i), &neg(&e(j))), odd);
            }
        }
    }
    acc.roots
}

fn ortho_symplectic(mm: usize, nn: usize) -> (Matrix, Vec<Root>, usize, usize) {
    // so(mm) coordinates ε_1..ε_r, sp(nn) coordinates δ_1..δ_s.
    let r = mm / 2;
    let s = nn / 2;
    let dim = r + s;
    let e = |i: usize| unit(dim, i, Q::one());
    let d = |j: usize| unit(dim, r + j, Q::one());
    let mut acc = Acc { roots: vec![] };
    for i in 0..r {
        for j in (i + 1)..r {
            acc.push_pm(add(&e(i), &e(j)), false);
            acc.push_pm(add(&e(i), &neg(&e(j))), false);
        }
        if mm % 2 == 1 {
            acc.push_pm(e(i), false);
        }
    }
    for i in 0..s {
        for j in (i + 1)..s {
            acc.push_pm(add(&d(i), &d(j)), false);
            acc.push_pm(add(&d(i), &neg(&d(j))), false);
        }
        acc.push_pm(add(&d(i), &d(i)), false);
    }
    for i in 0..r {
        for j in 0..s {
            acc.push_pm(add(&e(i), &d(j)), true);
            acc.push_pm(add(&e(i), &neg(&d(j))), true);
        }
    }
    if mm % 2 == 1 {
        for j in 0..s {
            acc.push_pm(d(j), true);
        }
    }
    let mut g = vec![Q::one(); r];
    g.extend(vec![-Q::one(); s]);
    (diag(&g), acc.roots, r, s)
}

fn e8_roots() -> Vec<Vec<Q>> {
    let mut out = Vec::new();
    for i in 0..8 {
        for j in (i + 1)..8 {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![Q::zero(); 8];
                v[i] = qi(si);
                v[j] = qi(sj);
                out.push(v);
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            out.push(
                (0..8)
                    .map(|i| {
                        if mask >> i & 1 == 1 {
                            q(-1, 2)
                        } else {
                            q(1, 2)
                        }
                    })
                    .collect(),
            );
        }
    }
    out
}

fn lex_max(vs: &[Vec<Q>]) -> Vec<Q> {
    vs.iter().max().cloned().expect("nonempty")
}

/// Builds the root datum for a validated catalog entry.
pub fn build_catalog_entry(id: &AlgebraId) -> Result<RootDatum, CatalogError> {
    id.validate()?;
    let rd = match id {
        AlgebraId::Sl { m, n } => {
            let mut g = vec![Q::one(); *m];
            g.extend(vec![-Q::one(); *n]);
            let dim = m + n;
            let theta = add(&unit(dim, 0, Q::one()), &unit(dim, 1, -Q::one()));
            RootDatum::new(id.clone(), diag(&g), sl_roots(*m, *n), dim - 1, theta)
        }
        AlgebraId::Psl { m } => {
            let mut g = vec![Q::one(); *m];
            g.extend(vec![-Q::one(); *m]);
            let dim = 2 * m;
            let theta = add(&unit(dim, 0, Q::one()), &unit(dim, 1, -Q::one()));
            RootDatum::new(id.clone(), diag(&g), sl_roots(*m, *m), dim - 2, theta)
        }
        AlgebraId::Osp { m, n } => {
            let (g, roots, r, s) = ortho_symplectic(*m, *n);
            let dim = r + s;
            let theta = add(&unit(dim, 0, Q::one()), &unit(dim, 1, Q::one()));
            RootDatum::new(id.clone(), g, roots, dim, theta)
        }
        AlgebraId::Spo { n, m } => {
            let (g, roots, r, s) = ortho_symplectic(*m, *n);
            let dim = r + s;
            let theta = unit(dim, r, qi(2));
            RootDatum::new(id.clone(), g, roots, dim, theta)
        }
        AlgebraId::D21a { a } => {
            let g = diag(&[-(Q::one() + a) / qi(2), q(1, 2), a / qi(2)]);
            let mut acc = Acc { roots: vec![] };
            for i in 0..3 {
                acc.push_pm(unit(3, i, qi(2)), false);
            }
            for s2 in [1, -1] {
                for s3 in [1, -1] {
                    acc.push_pm(vec![qi(1), qi(s2), qi(s3)], true);
                }
            }
            RootDatum::new(id.clone(), g, acc.roots, 3, unit(3, 1, qi(2)))
        }
        AlgebraId::F4Super(choice) => {
            let g = diag(&[qi(1), qi(1), qi(1), qi(-3)]);
            let mut acc = Acc { roots: vec![] };
            let e = |i: usize| unit(4, i, Q::one());
            for i in 0..3 {
                for j in (i + 1)..3 {
                    acc.push_pm(add(&e(i), &e(j)), false);
                    acc.push_pm(add(&e(i), &neg(&e(j))), false);
                }
                acc.push_pm(e(i), false);
            }
            acc.push_pm(e(3), false);
            for mask in 0u32..16 {
                let v = (0..4)
                    .map(|i| {
                        if mask >> i & 1 == 1 {
                            q(-1, 2)
                        } else {
                            q(1, 2)
                        }
                    })
                    .collect();
                acc.push(v, true);
            }
            let theta = match choice {
                F4Theta::Sl2 => e(3),
                F4Theta::D212 => add(&e(0), &e(1)),
            };
            RootDatum::new(id.clone(), g, acc.roots, 4, theta)
        }
        AlgebraId::G3Super(choice) => {
            // Basis ε1, ε2, δ with ε3 = -ε1 - ε2.
            let g = vec![
                vec![qi(-2), qi(1), qi(0)],
                vec![qi(1), qi(-2), qi(0)],
                vec![qi(0), qi(0), qi(2)],
            ];
            let eps = [
                vec![qi(1), qi(0), qi(0)],
                vec![qi(0), qi(1), qi(0)],
                vec![qi(-1), qi(-1), qi(0)],
            ];
            let delta = vec![qi(0), qi(0), qi(1)];
            let mut acc = Acc { roots: vec![] };
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        acc.push(add(&eps[i], &neg(&eps[j])), false);
                    }
                }
                acc.push_pm(eps[i].clone(), false);
            }
            acc.push_pm(add(&delta, &delta), false);
            for e in &eps {
                acc.push_pm(add(e, &delta), true);
                acc.push_pm(add(e, &neg(&delta)), true);
            }
            acc.push_pm(delta.clone(), true);
            let theta = match choice {
                G3Theta::Sl2 => add(&delta, &delta),
                G3Theta::G2 => add(&eps[0], &neg(&eps[1])),
            };
            RootDatum::new(id.clone(), g, acc.roots, 3, theta)
        }
        AlgebraId::Exceptional(t) => exceptional(id, *t),
    };
    Ok(rd)
}

fn exceptional(id: &AlgebraId, t: Exceptional) -> RootDatum {
    let mk = |vs: Vec<Vec<Q>>| {
        vs.into_iter()
            .map(|v| Root { v, odd: false })
            .collect::<Vec<_>>()
    };
    match t {
        Exceptional::G2 => {
            let e = |i: usize| unit(3, i, Q::one());
            let mut acc = Acc { roots: vec![] };
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        acc.push(add(&e(i), &neg(&e(j))), false);
                    }
                }
                let others: Vec<usize> = (0..3).filter(|&x| x != i).collect();
                let long = add(&add(&e(i), &e(i)), &neg(&add(&e(others[0]), &e(others[1]))));
                acc.push_pm(long, false);
            }
            let theta = vec![qi(2), qi(-1), qi(-1)];
            RootDatum::new(
                id.clone(),
                diag(&[qi(1), qi(1), qi(1)]),
                acc.roots,
                2,
                theta,
            )
        }
        Exceptional::F4 => {
            let e = |i: usize| unit(4, i, Q::one());
            let mut acc = Acc { roots: vec![] };
            for i in 0..4 {
                for j in (i + 1)..4 {
                    acc.push_pm(add(&e(i), &e(j)), false);
                    acc.push_pm(add(&e(i), &neg(&e(j))), false);
                }
                acc.push_pm(e(i), false);
            }
            for mask in 0u32..16 {
                let v = (0..4)
                    .map(|i| {
                        if mask >> i & 1 == 1 {
                            q(-1, 2)
                        } else {
                            q(1, 2)
                        }
                    })
                    .collect();
                acc.push(v, false);
            }
            let theta = add(&e(0), &e(1));
            RootDatum::new(
                id.clone(),
                diag(&[qi(1), qi(1), qi(1), qi(1)]),
                acc.roots,
                4,
                theta,
            )
        }
        Exceptional::E8 | Exceptional::E7 | Exceptional::E6 => {
            let all = e8_roots();
            let dot = |a: &[Q], b: &[Q]| a.iter().zip(b).fold(Q::zero(), |s, (x, y)| s + x * y);
            // E7 is the centralizer of one root, E6 of an A2 pair.
            let r0: Vec<Q> = [0, 0, 0, 0, 0, 0, 1, 1].iter().map(|&x| qi(x)).collect();
            let r1: Vec<Q> = [0, 0, 0, 0, 0, 1, -1, 0].iter().map(|&x| qi(x)).collect();
            let (kept, rank): (Vec<Vec<Q>>, usize) = match t {
                Exceptional::E8 => (all, 8),
                Exceptional::E7 => (
                    all.into_iter().filter(|v| dot(v, &r0).is_zero()).collect(),
                    7,
                ),
                _ => (
                    all.into_iter()
                        .filter(|v| dot(v, &r0).is_zero() && dot(v, &r1).is_zero())
                        .collect(),
                    6,
                ),
            };
            let theta = lex_max(&kept);
            RootDatum::new(id.clone(), diag(&vec![Q::one(); 8]), mk(kept), rank, theta)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(s: &str) -> (usize, usize, i64) {
        let rd = build_catalog_entry(&AlgebraId::parse(s).unwrap()).unwrap();
        let odd = rd.roots.iter().filter(|r| r.odd).count();
        (rd.roots.len() - odd, odd, rd.sdim())
    }

    #[test]
    fn root_counts() {
        assert_eq!(counts("E8"), (240, 0, 248));
        assert_eq!(counts("E7"), (126, 0, 133));
        assert_eq!(counts("E6"), (72, 0, 78));
        assert_eq!(counts("F4"), (48, 0, 52));
        assert_eq!(counts("G2"), (12, 0, 14));
        assert_eq!(counts("F(4):sl2"), (20, 16, 8));
        assert_eq!(counts("G(3):G2"), (14, 14, 3));
        assert_eq!(counts("D(2,1;2)"), (6, 8, 1));
        assert_eq!(counts("osp(5|2)"), (10, 10, 3));
        assert_eq!(counts("psl(2|2)"), (4, 8, -2));
        assert_eq!(counts("sl(3|1)"), (6, 6, 3));
    }

    #[test]
    fn theta_normalized_and_negation_closed() {
        for s in [
            "G(3):sl2",
            "G(3):G2",
            "F(4):sl2",
            "spo(4|3)",
            "E6",
            "D(2,1;-3/2)",
        ] {
            let rd = build_catalog_entry(&AlgebraId::parse(s).unwrap()).unwrap();
            assert_eq!(rd.inner(rd.theta_vec(), rd.theta_vec()), qi(2), "{s}");
            for i in 0..rd.roots.len() {
                let j = rd.negate(i);
                assert_eq!(rd.roots[i].odd, rd.roots[j].odd);
            }
        }
    }
}
