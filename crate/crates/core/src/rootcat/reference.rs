//! Tabulated data for each catalog entry, used to cross-check what the root
//! computations produce.

use super::identify::{gl_keys, osp_keys, sl_keys, LieType};
use super::{AlgebraId, Exceptional, F4Theta, G3Theta};
use crate::exactmath::{q, qi, PolyK, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub h_vee: Q,
    /// Component keys of `g♮`, sorted; `"center"` for a one-dimensional center.
    pub gnat: Vec<String>,
    pub ghalf_even: usize,
    pub ghalf_odd: usize,
    /// Number of irreducible `g♮`-summands of `g_{1/2}`.
    pub pieces: usize,
    /// The monic quadratic whose roots are the collapsing levels to `ℂ1`.
    pub p: PolyK,
}

fn lin(a: Q) -> PolyK {
    PolyK::linear(a)
}

fn keys(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

fn lie(t: LieType) -> String {
    t.key()
}

pub fn table_row(id: &AlgebraId) -> TableRow {
    let z = |n: i64| qi(n);
    let (h_vee, gnat, ge, go, pieces, p) = match id {
        AlgebraId::Sl { m, n } => {
            let (mi, ni) = (*m as i64, *n as i64);
            (
                z(mi - ni),
                gl_keys(m - 2, *n),
                2 * (m - 2),
                2 * n,
                2,
                lin(z(1)) * lin(q(mi - ni, 2)),
            )
        }
        AlgebraId::Psl { m } => (
            z(0),
            sl_keys(m - 2, *m),
            2 * (m - 2),
            2 * m,
            2,
            PolyK::k() * lin(z(1)),
        ),
        AlgebraId::Osp { m, n } => {
            let (mi, ni) = (*m as i64, *n as i64);
            let mut g = vec![lie(LieType::A(1))];
            g.extend(osp_keys(m - 4, *n));
            (
                z(mi - ni - 2),
                g,
                2 * (m - 4),
                2 * n,
                1,
                lin(z(2)) * lin(q(mi - ni - 4, 2)),
            )
        }
        AlgebraId::Spo { n, m } => {
            let (mi, ni) = (*m as i64, *n as i64);
            (
                q(ni - mi, 2) + z(1),
                osp_keys(*m, n - 2),
                n - 2,
                *m,
                1,
                lin(q(1, 2)) * lin(q(ni - mi + 4, 4)),
            )
        }
        AlgebraId::D21a { a } => (
            z(0),
            vec![lie(LieType::A(1)), lie(LieType::A(1))],
            0,
            4,
            1,
            lin(-a.clone()) * lin(a + z(1)),
        ),
        AlgebraId::F4Super(F4Theta::Sl2) => (
            z(-2),
            vec![lie(LieType::B(3))],
            0,
            8,
            1,
            lin(q(2, 3)) * lin(q(-2, 3)),
        ),
        AlgebraId::F4Super(F4Theta::D212) => (
            z(3),
            vec!["D(2,1;2)".into()],
            6,
            4,
            1,
            lin(q(3, 2)) * lin(z(1)),
        ),
        AlgebraId::G3Super(G3Theta::Sl2) => (
            q(-3, 2),
            vec![lie(LieType::G2)],
            0,
            7,
            1,
            lin(q(-1, 2)) * lin(q(3, 4)),
        ),
        AlgebraId::G3Super(G3Theta::G2) => (
            z(2),
            vec!["osp(3|2)".into()],
            4,
            4,
            1,
            lin(q(2, 3)) * lin(q(4, 3)),
        ),
        AlgebraId::Exceptional(e) => match e {
            Exceptional::G2 => (
                z(4),
                vec![lie(LieType::A(1))],
                4,
                0,
                1,
                lin(q(4, 3)) * lin(q(5, 3)),
            ),
            Exceptional::F4 => (
                z(9),
                vec![lie(LieType::C(3))],
                14,
                0,
                1,
                lin(q(5, 2)) * lin(z(3)),
            ),
            Exceptional::E6 => (
                z(12),
                vec![lie(LieType::A(5))],
                20,
                0,
                1,
                lin(z(3)) * lin(z(4)),
            ),
            Exceptional::E7 => (
                z(18),
                vec![lie(LieType::D(6))],
                32,
                0,
                1,
                lin(z(4)) * lin(z(6)),
            ),
            Exceptional::E8 => (
                z(30),
                vec![lie(LieType::E7)],
                56,
                0,
                1,
                lin(z(6)) * lin(z(10)),
            ),
        },
    };
    // A center in g♮ acts by opposite charges on the two halves of g_{1/2}.
    let pieces = if gnat.iter().any(|k| k == "center") {
        2
    } else {
        pieces
    };
    TableRow {
        h_vee,
        gnat: keys(gnat),
        ghalf_even: ge,
        ghalf_odd: go,
        pieces,
        p,
    }
}
