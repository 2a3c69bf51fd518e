//! Products in `W_k ⊗ V_{ℤφ}`:
//! `(a⊗b)_{(r)}(c⊗d) = (−1)^{|b||c|} Σ_m a_{(m)}c ⊗ b_{(r−m−1)}d`.

use super::lattice::{add_term, single, FockMonomial, LatticeData};
use super::table::{OpeTable, WKey};
use super::{render_combination, RealizeError};
use crate::exactmath::{qi, Q};
use num_integer::Integer;
use num_traits::ToPrimitive;
use std::collections::BTreeMap;

pub type TKey = (WKey, FockMonomial);
pub type TElem = BTreeMap<TKey, Q>;

pub fn term(w: WKey, f: FockMonomial, c: Q) -> TElem {
    let mut e = TElem::new();
    add_term(&mut e, &(w, f), c);
    e
}

pub fn add_into(out: &mut TElem, e: &TElem, s: &Q) {
    for (k, x) in e {
        add_term(out, k, x * s);
    }
}

pub fn sum(parts: &[(&TElem, Q)]) -> TElem {
    let mut out = TElem::new();
    for (e, s) in parts {
        add_into(&mut out, e, s);
    }
    out
}

pub fn difference(a: &TElem, b: &TElem) -> TElem {
    sum(&[(a, qi(1)), (b, qi(-1))])
}

fn product_basis(
    t: &OpeTable,
    lat: &LatticeData,
    (wa, fa): &TKey,
    r: i64,
    (wb, fb): &TKey,
) -> Result<TElem, RealizeError> {
    let sign = if lat.is_odd(fa) && wb.is_odd() {
        qi(-1)
    } else {
        qi(1)
    };
    let jmax = lat
        .max_mode(fa, fb)
        .map_err(|e| RealizeError::Unsupported(e.0))?;
    let bound = wa.weight() + wb.weight() - qi(1);
    let m_high = bound
        .numer()
        .div_floor(bound.denom())
        .to_i64()
        .expect("small weight");
    let fock = single(fb.clone());
    let mut out = TElem::new();
    for m in (r - 1 - jmax)..=m_high {
        let f = lat
            .product(fa, r - m - 1, &fock)
            .map_err(|e| RealizeError::Unsupported(e.0))?;
        if f.is_empty() {
            continue;
        }
        let w = t.product(*wa, m, *wb)?;
        for (wk, wx) in &w {
            for (fk, fx) in &f {
                add_term(&mut out, &(*wk, fk.clone()), wx * fx * &sign);
            }
        }
    }
    Ok(out)
}

/// `a_{(r)}b` on `W_k ⊗ V_{ℤφ}`.
pub fn product(
    t: &OpeTable,
    lat: &LatticeData,
    a: &TElem,
    r: i64,
    b: &TElem,
) -> Result<TElem, RealizeError> {
    let mut out = TElem::new();
    for (ka, xa) in a {
        for (kb, xb) in b {
            let p = product_basis(t, lat, ka, r, kb)?;
            add_into(&mut out, &p, &(xa * xb));
        }
    }
    Ok(out)
}

pub fn render(t: &OpeTable, e: &TElem) -> String {
    render_combination(e.iter().map(|((w, f), x)| {
        let name = match (w, f == &FockMonomial::vacuum()) {
            (WKey::One, true) => String::new(),
            (WKey::One, false) => format!("1⊗{f}"),
            (w, _) => format!("{}⊗{f}", t.label(*w)),
        };
        (name, x.clone())
    }))
}
