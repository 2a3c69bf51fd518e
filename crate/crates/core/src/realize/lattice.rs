//! Rank-one lattice vertex superalgebra `V_{ℤφ}` realized on
//! `ℂ[φ(−1), φ(−2), …] ⊗ ℂ[ℤφ]`, with trivial cocycle.

use crate::exactmath::{qi, Q};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// `φ(−1)^{e_1} φ(−2)^{e_2} ⋯ e^{tφ}`; `exps` carries no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FockMonomial {
    pub exps: Vec<u32>,
    pub charge: i64,
}

impl FockMonomial {
    pub fn vacuum() -> Self {
        FockMonomial {
            exps: Vec::new(),
            charge: 0,
        }
    }

    /// `φ_{(−1)}1`.
    pub fn phi() -> Self {
        FockMonomial {
            exps: vec![1],
            charge: 0,
        }
    }

    /// `e^{tφ}`.
    pub fn exp(t: i64) -> Self {
        FockMonomial {
            exps: Vec::new(),
            charge: t,
        }
    }

    fn trimmed(mut exps: Vec<u32>, charge: i64) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        FockMonomial { exps, charge }
    }

    /// Oscillator weight `Σ n e_n`.
    pub fn oscillator_weight(&self) -> i64 {
        self.exps
            .iter()
            .enumerate()
            .map(|(i, &e)| (i as i64 + 1) * e as i64)
            .sum()
    }
}

impl fmt::Display for FockMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("φ(−{})", i + 1)),
                e => parts.push(format!("φ(−{})^{e}", i + 1)),
            }
        }
        match self.charge {
            0 => {}
            1 => parts.push("e^φ".into()),
            -1 => parts.push("e^{−φ}".into()),
            t => parts.push(format!("e^{{{t}φ}}")),
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(""))
        }
    }
}

pub type FockState = BTreeMap<FockMonomial, Q>;

pub(crate) fn add_term<K: Ord + Clone>(out: &mut BTreeMap<K, Q>, k: &K, c: Q) {
    if c.is_zero() {
        return;
    }
    let entry = out.entry(k.clone()).or_insert_with(Q::zero);
    *entry += c;
    if entry.is_zero() {
        out.remove(k);
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnsupportedField(pub String);

/// The lattice `ℤφ` with `⟨φ,φ⟩ = pairing`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeData {
    pub pairing: i64,
}

type Poly = BTreeMap<Vec<u32>, Q>;

fn poly_mul_var(p: &Poly, n: usize) -> Poly {
    p.iter()
        .map(|(e, c)| {
            let mut e = e.clone();
            if e.len() < n {
                e.resize(n, 0);
            }
            e[n - 1] += 1;
            (e, c.clone())
        })
        .collect()
}

fn poly_diff(p: &Poly, n: usize) -> Poly {
    let mut out = Poly::new();
    for (e, c) in p {
        if let Some(&k) = e.get(n - 1) {
            if k > 0 {
                let mut e2 = e.clone();
                e2[n - 1] -= 1;
                while e2.last() == Some(&0) {
                    e2.pop();
                }
                add_term(&mut out, &e2, c * qi(k as i64));
            }
        }
    }
    out
}

fn poly_add_scaled(out: &mut Poly, p: &Poly, s: &Q) {
    for (e, c) in p {
        add_term(out, e, c * s);
    }
}

fn poly_max_var(p: &Poly) -> usize {
    p.keys().map(|e| e.len()).max().unwrap_or(0)
}

impl LatticeData {
    pub fn new(pairing: i64) -> Self {
        LatticeData { pairing }
    }

    pub fn inner(&self, s: i64, t: i64) -> i64 {
        s * t * self.pairing
    }

    /// `e^{tφ}` is odd iff `⟨tφ,tφ⟩` is odd.
    pub fn is_odd(&self, m: &FockMonomial) -> bool {
        self.inner(m.charge, m.charge).rem_euclid(2) == 1
    }

    /// Conformal weight `Σ n e_n + ⟨tφ,tφ⟩/2`.
    pub fn weight(&self, m: &FockMonomial) -> Q {
        qi(m.oscillator_weight()) + Q::new(self.inner(m.charge, m.charge).into(), 2.into())
    }

    /// Heisenberg mode `φ(n)` on a state.
    pub fn phi_mode(&self, n: i64, b: &FockState) -> FockState {
        let mut out = FockState::new();
        for (m, c) in b {
            if n == 0 {
                add_term(&mut out, m, c * qi(self.inner(1, m.charge)));
                continue;
            }
            let p: Poly = [(m.exps.clone(), Q::from_integer(1.into()))]
                .into_iter()
                .collect();
            let (res, s) = if n < 0 {
                (poly_mul_var(&p, (-n) as usize), qi(1))
            } else {
                (poly_diff(&p, n as usize), qi(n * self.pairing))
            };
            for (e, x) in res {
                add_term(&mut out, &FockMonomial::trimmed(e, m.charge), c * &x * &s);
            }
        }
        out
    }

    /// Largest `j` with `a_{(j)}b` possibly nonzero, for a generator `a`.
    pub fn max_mode(&self, a: &FockMonomial, b: &FockMonomial) -> Result<i64, UnsupportedField> {
        if *a == FockMonomial::vacuum() {
            Ok(-1)
        } else if *a == FockMonomial::phi() {
            Ok(b.oscillator_weight().max(0))
        } else if a.exps.is_empty() {
            Ok(b.oscillator_weight() - self.inner(a.charge, b.charge) - 1)
        } else {
            Err(UnsupportedField(format!("field of {a}")))
        }
    }

    /// `a_{(j)}b` for `a ∈ {1, φ_{(−1)}1, e^{tφ}}`.
    pub fn product(
        &self,
        a: &FockMonomial,
        j: i64,
        b: &FockState,
    ) -> Result<FockState, UnsupportedField> {
        if *a == FockMonomial::vacuum() {
            return Ok(if j == -1 { b.clone() } else { FockState::new() });
        }
        if *a == FockMonomial::phi() {
            return Ok(self.phi_mode(j, b));
        }
        if !a.exps.is_empty() {
            return Err(UnsupportedField(format!("field of {a}")));
        }
        let s = a.charge;
        let mut out = FockState::new();
        for (m, c) in b {
            for (e, x) in self.vertex_coefficient(s, j, m) {
                add_term(&mut out, &FockMonomial::trimmed(e, s + m.charge), c * &x);
            }
        }
        Ok(out)
    }

    /// Coefficient of `z^{−j−1}` in
    /// `exp(Σ α(−n)zⁿ/n) exp(−Σ α(n)z⁻ⁿ/n) e^α z^{α(0)}` applied to `m`, `α = sφ`.
    fn vertex_coefficient(&self, s: i64, j: i64, m: &FockMonomial) -> Poly {
        let target = -j - 1;
        let base = self.inner(s, m.charge);
        // exp(−Σ α(n)z⁻ⁿ/n) shifts φ(−n) by −s⟨φ,φ⟩z⁻ⁿ; collect by the power of z⁻¹.
        let shift = qi(-s * self.pairing);
        let mut annihilated: BTreeMap<i64, Poly> = BTreeMap::new();
        let mut term: BTreeMap<i64, Poly> = [(0, [(m.exps.clone(), qi(1))].into_iter().collect())]
            .into_iter()
            .collect();
        let mut order = 0i64;
        while !term.is_empty() {
            for (nn, p) in &term {
                let slot = annihilated.entry(*nn).or_default();
                poly_add_scaled(slot, p, &qi(1));
            }
            order += 1;
            let mut next: BTreeMap<i64, Poly> = BTreeMap::new();
            for (nn, p) in &term {
                for v in 1..=poly_max_var(p) {
                    let d = poly_diff(p, v);
                    if d.is_empty() {
                        continue;
                    }
                    let slot = next.entry(nn + v as i64).or_default();
                    poly_add_scaled(slot, &d, &(&shift / qi(order)));
                }
            }
            next.retain(|_, p| !p.is_empty());
            term = next;
        }
        let mut out = Poly::new();
        for (nn, p) in annihilated {
            let mm = target - base + nn;
            if mm < 0 || p.is_empty() {
                continue;
            }
            let schur = self.schur(s, mm as usize);
            for (e1, c1) in &schur {
                for (e2, c2) in &p {
                    let len = e1.len().max(e2.len());
                    let e: Vec<u32> = (0..len)
                        .map(|i| e1.get(i).copied().unwrap_or(0) + e2.get(i).copied().unwrap_or(0))
                        .collect();
                    add_term(&mut out, &e, c1 * c2);
                }
            }
        }
        out
    }

    /// Coefficient of `z^M` in `exp(s Σ φ(−n)zⁿ/n)`.
    fn schur(&self, s: i64, big_m: usize) -> Poly {
        let mut table: Vec<Poly> = vec![[(Vec::new(), qi(1))].into_iter().collect()];
        for mm in 1..=big_m {
            let mut acc = Poly::new();
            for n in 1..=mm {
                poly_add_scaled(
                    &mut acc,
                    &poly_mul_var(&table[mm - n], n),
                    &Q::new(s.into(), (mm as i64).into()),
                );
            }
            table.push(acc);
        }
        table.swap_remove(big_m)
    }
}

pub fn single(m: FockMonomial) -> FockState {
    [(m, qi(1))].into_iter().collect()
}
