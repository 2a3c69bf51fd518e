//! Isomorphism-type keys for the simple components of `g♮`.
//!
//! Keys are canonical strings so that computed components and tabulated
//! expectations can be compared directly: `"A3"`, `"B2"` (also `sp(4)`),
//! `"sl(3|1)"`, `"osp(3|2)"`, `"D(2,1;2)"`, `"center"`.

use super::id::d21a_canonical;
use crate::exactmath::{fmt_q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl LieType {
    /// Folds low-rank coincidences: `B2 = C2`, `D3 = A3`, `C1 = B1 = A1`.
    pub fn canonical(self) -> Self {
        match self {
            LieType::C(2) => LieType::B(2),
            LieType::B(1) | LieType::C(1) => LieType::A(1),
            LieType::D(3) => LieType::A(3),
            t => t,
        }
    }

    pub fn key(self) -> String {
        match self.canonical() {
            LieType::A(r) => format!("A{r}"),
            LieType::B(r) => format!("B{r}"),
            LieType::C(r) => format!("C{r}"),
            LieType::D(r) => format!("D{r}"),
            t => format!("{t:?}"),
        }
    }

    pub fn rank(self) -> usize {
        match self {
            LieType::A(r) | LieType::B(r) | LieType::C(r) | LieType::D(r) => r,
            LieType::G2 => 2,
            LieType::F4 => 4,
            LieType::E6 => 6,
            LieType::E7 => 7,
            LieType::E8 => 8,
        }
    }

    /// Identifies a simple Lie algebra from its rank, root count, and the
    /// number of long roots (all roots are long when simply laced).
    pub fn identify(rank: usize, roots: usize, long: usize) -> Option<Self> {
        let r = rank;
        let simply_laced = long == roots;
        if simply_laced {
            if roots == r * (r + 1) {
                return Some(LieType::A(r));
            }
            if r >= 4 && roots == 2 * r * (r - 1) {
                return Some(LieType::D(r));
            }
            return match (r, roots) {
                (6, 72) => Some(LieType::E6),
                (7, 126) => Some(LieType::E7),
                (8, 240) => Some(LieType::E8),
                _ => None,
            };
        }
        match (r, roots) {
            (2, 12) => return Some(LieType::G2),
            (4, 48) => return Some(LieType::F4),
            _ => {}
        }
        if roots == 2 * r * r {
            if long == 2 * r * (r - 1) {
                return Some(LieType::B(r).canonical());
            }
            if long == 2 * r {
                return Some(LieType::C(r).canonical());
            }
        }
        None
    }
}

/// Key for `sl(p|q)`, covering the purely even and empty cases. `None` for
/// the zero algebra.
pub fn sl_keys(p: usize, q: usize) -> Vec<String> {
    let (p, q) = if p >= q { (p, q) } else { (q, p) };
    if q == 0 {
        return if p >= 2 {
            vec![LieType::A(p - 1).key()]
        } else {
            vec![]
        };
    }
    vec![super_key(p * p + q * q - 1, 2 * p * q, p + q - 1, None)]
}

/// Keys for `gl(p|q)`: center plus `sl(p|q)`.
pub fn gl_keys(p: usize, q: usize) -> Vec<String> {
    if p + q == 0 {
        return vec![];
    }
    let mut v = vec!["center".to_string()];
    v.extend(sl_keys(p, q));
    v
}

pub fn so_keys(m: usize) -> Vec<String> {
    match m {
        0 | 1 => vec![],
        2 => vec!["center".into()],
        3 => vec![LieType::A(1).key()],
        4 => vec![LieType::A(1).key(), LieType::A(1).key()],
        _ if m % 2 == 1 => vec![LieType::B(m / 2).key()],
        _ => vec![LieType::D(m / 2).key()],
    }
}

pub fn sp_keys(n: usize) -> Vec<String> {
    if n == 0 {
        vec![]
    } else {
        vec![LieType::C(n / 2).key()]
    }
}

/// Keys for `osp(m|n)` including its degenerate members.
pub fn osp_keys(m: usize, n: usize) -> Vec<String> {
    if n == 0 {
        return so_keys(m);
    }
    if m == 0 {
        return sp_keys(n);
    }
    if m == 4 && n == 2 {
        return vec![d21a_key(&Q::from_integer(1.into()))];
    }
    let even = m * (m - 1) / 2 + n * (n + 1) / 2;
    vec![super_key(even, m * n, m / 2 + n / 2, None)]
}

pub fn d21a_key(a: &Q) -> String {
    format!("D(2,1;{})", fmt_q(&d21a_canonical(a)))
}

/// Canonical key of a simple Lie superalgebra with odd part, from its even
/// dimension, odd dimension and rank. `d21a` carries the parameter when the
/// dimensions are those of `D(2,1;a)`.
pub fn super_key(even: usize, odd: usize, rank: usize, d21a: Option<&Q>) -> String {
    if (even, odd, rank) == (9, 8, 3) {
        if let Some(a) = d21a {
            return d21a_key(a);
        }
    }
    for p in 1..=16usize {
        for q in 1..p {
            if p * p + q * q - 1 == even && 2 * p * q == odd && p + q - 1 == rank {
                return format!("sl({p}|{q})");
            }
        }
        if 2 * p * p - 2 == even && 2 * p * p == odd && 2 * p - 2 == rank {
            return format!("psl({p}|{p})");
        }
    }
    for m in 1..=24usize {
        for n in (2..=24usize).step_by(2) {
            if m * (m - 1) / 2 + n * (n + 1) / 2 == even && m * n == odd && m / 2 + n / 2 == rank {
                return format!("osp({m}|{n})");
            }
        }
    }
    match (even, odd, rank) {
        (24, 16, 4) => "F(4)".into(),
        (17, 14, 3) => "G(3)".into(),
        _ => format!("super[{even}|{odd};{rank}]"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identify_lie_types() {
        assert_eq!(LieType::identify(6, 72, 72), Some(LieType::E6));
        assert_eq!(LieType::identify(6, 72, 60), Some(LieType::B(6)));
        assert_eq!(LieType::identify(6, 72, 12), Some(LieType::C(6)));
        assert_eq!(LieType::identify(2, 8, 4), Some(LieType::B(2)));
        assert_eq!(LieType::identify(3, 12, 12), Some(LieType::A(3)));
        assert_eq!(LieType::identify(4, 24, 24), Some(LieType::D(4)));
        assert_eq!(LieType::identify(2, 12, 6), Some(LieType::G2));
    }

    #[test]
    fn low_rank_coincidences() {
        assert_eq!(so_keys(5), sp_keys(4));
        assert_eq!(so_keys(6), sl_keys(4, 0));
        assert_eq!(osp_keys(2, 2), sl_keys(2, 1));
        assert_eq!(osp_keys(1, 2), vec!["osp(1|2)".to_string()]);
        assert_eq!(osp_keys(4, 2), vec!["D(2,1;1)".to_string()]);
    }
}
