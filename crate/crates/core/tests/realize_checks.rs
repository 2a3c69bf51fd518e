use minw_core::exactmath::{fmt_q, q, qi};
use minw_core::realize::{
    charge_decomposition, check_n, cross_validate, ope_table, verify_gamma_homomorphism,
    verify_lattice_products, verify_sugawara_eigenvalue, FockMonomial, FockState, LatticeData,
    Realization, RealizeError, WKey,
};

const NS: [usize; 3] = [4, 6, 7];

fn single(m: FockMonomial) -> FockState {
    [(m, qi(1))].into_iter().collect()
}

#[test]
fn lattice_products() {
    let lat = LatticeData::new(-1);
    let (ep, em) = (FockMonomial::exp(1), FockMonomial::exp(-1));
    assert_eq!(
        lat.product(&ep, -2, &single(em.clone())).unwrap(),
        single(FockMonomial::vacuum())
    );
    assert_eq!(
        lat.product(&ep, -3, &single(em.clone())).unwrap(),
        single(FockMonomial::phi())
    );
    assert!(lat
        .product(&ep, -1, &single(em.clone()))
        .unwrap()
        .is_empty());
    // Skew-symmetry: e^{−φ}_(−3)e^φ = −φ_(−1)1 + ∂1.
    let mut neg_phi = FockState::new();
    neg_phi.insert(FockMonomial::phi(), qi(-1));
    assert_eq!(lat.product(&em, -3, &single(ep.clone())).unwrap(), neg_phi);
    // φ_(0)e^{±φ} = ∓e^{±φ}, φ_(1)φ = ⟨φ,φ⟩.
    let mut minus_ep = FockState::new();
    minus_ep.insert(ep.clone(), qi(-1));
    assert_eq!(
        lat.product(&FockMonomial::phi(), 0, &single(ep.clone()))
            .unwrap(),
        minus_ep
    );
    let mut pairing = FockState::new();
    pairing.insert(FockMonomial::vacuum(), qi(-1));
    assert_eq!(
        lat.product(&FockMonomial::phi(), 1, &single(FockMonomial::phi()))
            .unwrap(),
        pairing
    );
    // e^φ_(0) φ_(−1)1 = e^φ.
    assert_eq!(
        lat.product(&ep, 0, &single(FockMonomial::phi())).unwrap(),
        single(ep.clone())
    );
    assert!(lat.is_odd(&ep) && !lat.is_odd(&FockMonomial::phi()));
    assert_eq!(lat.weight(&ep), q(-1, 2));
}

#[test]
fn unsupported_n() {
    assert!(matches!(
        check_n(3),
        Err(RealizeError::UnsupportedN { n: 3, .. })
    ));
    match check_n(5) {
        Err(RealizeError::UnsupportedN { n: 5, reason }) => {
            assert!(reason.contains("Sugawara eigenvalue 4(n−2)/(n−1) equals conformal weight 3"))
        }
        other => panic!("{other:?}"),
    }
    assert!(Realization::new(5).is_err());
}

#[test]
fn sugawara_eigenvalues() {
    for (n, v) in [
        (4, q(8, 3)),
        (5, qi(3)),
        (6, q(16, 5)),
        (7, q(10, 3)),
        (8, q(24, 7)),
    ] {
        let r = verify_sugawara_eigenvalue(n).unwrap();
        assert_eq!(r.eigenvalue, fmt_q(&v), "n={n}");
        assert_eq!(r.closed_form, fmt_q(&v), "n={n}");
        assert_eq!(r.degenerate, n == 5, "n={n}");
        assert!(r.report.all_hold(), "{}", r.report.render());
    }
}

#[test]
fn ope_table_matches_structure_constants() {
    for n in NS {
        let r = Realization::new(n).unwrap();
        let t = ope_table(&r).unwrap();
        let rep = cross_validate(&r, &t).unwrap();
        assert!(rep.all_hold(), "{}", rep.render());

        // G_i^+ (2) G_i^− = 2(k+1)(k+h∨/2) = (n+1)/2, and (1) for i ≠ j is J^{E2+j,2+i}.
        let (p1, m1, m2) = (WKey::G(r.plus[0]), WKey::G(r.minus[0]), WKey::G(r.minus[1]));
        let two = t.product(p1, 2, m1).unwrap();
        assert_eq!(two.get(&WKey::One), Some(&q(n as i64 + 1, 2)));
        assert_eq!(t.render(&t.product(p1, 1, m2).unwrap()), "J^{E4,3}");
        for mode in -1..=2 {
            assert!(t.product(p1, mode, WKey::G(r.plus[1])).unwrap().is_empty());
        }
        assert!(t.imposed.contains(&(p1, WKey::G(r.plus[1]), -1)));
    }
}

#[test]
fn ope_table_bookkeeping() {
    let r = Realization::new(4).unwrap();
    let t = ope_table(&r).unwrap();
    for ((a, b, m), e) in &t.products {
        let (ga, gb) = (t.generator(*a), t.generator(*b));
        for k in e.keys() {
            let (w, c) = match k {
                WKey::One => (qi(0), 0),
                _ => (t.generator(*k).weight.clone(), t.generator(*k).charge),
            };
            assert_eq!(
                w,
                &ga.weight + &gb.weight - qi(*m + 1),
                "{}_({m}){}",
                ga.label,
                gb.label
            );
            assert_eq!(c, ga.charge + gb.charge, "{}_({m}){}", ga.label, gb.label);
        }
    }
}

#[test]
fn lattice_product_items() {
    for n in NS {
        let r = Realization::new(n).unwrap();
        let t = ope_table(&r).unwrap();
        let rep = verify_lattice_products(&r, &t).unwrap();
        assert!(rep.all_hold());
        if n == 4 {
            let line = |name: &str| {
                rep.checks
                    .iter()
                    .find(|c| c.name == name)
                    .unwrap()
                    .lhs
                    .clone()
            };
            assert_eq!(line("(4) i=1 j=1 mode 1"), "−5/2");
            assert_eq!(line("(5) i=1 j=2 mode 2"), "0");
            let item3 = line("(3) i=1 j=1 mode 0");
            assert!(item3.contains("5/2·1⊗φ(−1)"), "{item3}");
        }
    }
}

#[test]
fn gamma_is_a_homomorphism() {
    for n in NS {
        let r = Realization::new(n).unwrap();
        let t = ope_table(&r).unwrap();
        let rep = verify_gamma_homomorphism(&r, &t).unwrap();
        assert!(rep.all_hold());
        let pairs = (n + 1) * (n + 1) - 1;
        assert_eq!(rep.checks.len(), pairs * pairs + 1 + pairs);
        let ni = n as i64;
        let find = |name: &str| {
            rep.checks
                .iter()
                .find(|c| c.name == name)
                .unwrap()
                .lhs
                .clone()
        };
        let ii = find("[γ(ι(I_n)) λ γ(ι(I_n))]");
        assert!(
            ii.starts_with(&format!("(0) 0; (1) −{}", (ni + 1) * (ni + 1) * ni / 2)),
            "{ii}"
        );
        let ie = find("[γ(ι(I_n)) λ γ(e1,2)]");
        assert!(
            ie.starts_with(&format!("(0) −{}·G_1^+⊗e^φ;", ni + 1)),
            "{ie}"
        );
    }
}

#[test]
fn charges() {
    for n in NS {
        let r = Realization::new(n).unwrap();
        let t = ope_table(&r).unwrap();
        let rep = charge_decomposition(&r, &t).unwrap();
        assert!(rep.all_hold());
        let g3 = rep
            .checks
            .iter()
            .find(|c| c.name == "J^c_(0) G_3^+")
            .unwrap();
        assert_eq!(g3.lhs, "G_3^+⊗1");
    }
}

#[test]
fn corrupted_table_is_detected() {
    let r = Realization::new(4).unwrap();
    let mut t = ope_table(&r).unwrap();
    let key = (WKey::G(r.plus[0]), WKey::G(r.minus[0]), 2);
    *t.products
        .get_mut(&key)
        .unwrap()
        .get_mut(&WKey::One)
        .unwrap() += qi(1);
    assert!(matches!(
        verify_lattice_products(&r, &t),
        Err(RealizeError::MismatchAt {
            item: 3,
            i: 1,
            j: 1,
            mode: 0,
            ..
        })
    ));
    assert!(matches!(
        verify_gamma_homomorphism(&r, &t),
        Err(RealizeError::HomomorphismFailure { .. })
    ));
    assert!(matches!(
        cross_validate(&r, &t),
        Err(RealizeError::CrossCheck { .. })
    ));
}
