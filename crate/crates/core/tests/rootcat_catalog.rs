use minw_core::exactmath::{poly_divides, q, qi, PolyK, Q};
use minw_core::rootcat::reference::table_row;
use minw_core::rootcat::{
    build_catalog_entry, catalog, component_dual_coxeter, halfspace_weights, minimal_grading,
    superdimensions, weight_casimir, AlgebraId, CatalogError, Multiplicity,
};

fn id(s: &str) -> AlgebraId {
    AlgebraId::parse_valid(s).unwrap()
}

#[test]
fn every_entry_matches_tabulated_data() {
    for a in catalog() {
        let rd = build_catalog_entry(&a).unwrap();
        let mg = minimal_grading(&rd).unwrap();
        let row = table_row(&a);
        assert_eq!(mg.h_vee, row.h_vee, "h∨ of {a}");
        assert!(mg.is_direct_sum(), "{a}");

        let mut keys: Vec<String> = mg.components.iter().map(|c| c.key()).collect();
        keys.sort();
        assert_eq!(keys, row.gnat, "g♮ of {a}");
        assert!(mg.components.len() <= 3);
        if mg.components.len() == 3 {
            assert_eq!(a, AlgebraId::so(8));
        }

        let hw = halfspace_weights(&rd, &mg).unwrap();
        assert_eq!(hw.pieces.len(), row.pieces, "pieces of {a}");
        let ev: usize = hw.pieces.iter().map(|p| p.even_dim).sum();
        let od: usize = hw.pieces.iter().map(|p| p.odd_dim).sum();
        assert_eq!((ev, od), (row.ghalf_even, row.ghalf_odd), "g_1/2 of {a}");

        // Casimir of g on g_{-1/2}: ½ from the x-part, the rest from g♮.
        for piece in &hw.pieces {
            let mut s = q(1, 2);
            for (i, mu) in piece.mu.iter().enumerate() {
                s += weight_casimir(&rd, &mg, i, mu);
            }
            assert_eq!(s, &mg.h_vee - qi(1), "Casimir on g_-1/2 of {a}");
        }

        let sd = superdimensions(&rd, &mg);
        assert_eq!(
            qi(sd.sdim_ghalf),
            qi(2) * &mg.h_vee - qi(4),
            "sdim g_1/2 of {a}"
        );
        assert_eq!(sd.sdim_g0, sd.sdim_g - 2 * sd.sdim_ghalf - 2, "{a}");
        assert_eq!(sd.sdim_g0 - 1, sd.per_component.iter().sum::<i64>(), "{a}");

        for i in 0..mg.components.len() {
            let ki = PolyK::linear((&mg.h_vee - component_dual_coxeter(&mg, i)) / qi(2));
            assert!(poly_divides(&ki, &row.p).unwrap(), "k_{i} ∤ p for {a}");
        }

        let one = Q::from_integer(1.into());
        assert_eq!(mg.roots_with_grade(&one).len(), 1);
        assert_eq!(mg.roots_with_grade(&-one).len(), 1);
    }
}

#[test]
fn superdimension_closed_forms() {
    for a in catalog() {
        let rd = build_catalog_entry(&a).unwrap();
        let h = minimal_grading(&rd).unwrap().h_vee;
        let sdim = qi(rd.sdim());
        match &a {
            AlgebraId::Sl { .. } => assert_eq!(sdim, &h * &h - qi(1), "{a}"),
            AlgebraId::Spo { .. } => assert_eq!(sdim, (qi(2) * &h - qi(1)) * (&h - qi(1)), "{a}"),
            _ => {}
        }
        let deligne = match &a {
            AlgebraId::Exceptional(_) | AlgebraId::F4Super(_) | AlgebraId::G3Super(_) => true,
            AlgebraId::Psl { .. } => true,
            AlgebraId::Sl { m: 3, n: 0 } | AlgebraId::Osp { m: 8, n: 0 } => true,
            AlgebraId::Spo { n: 2, m: 1 } => true,
            AlgebraId::Osp { m, n } => *n > 0 && *m == n + 8,
            _ => false,
        };
        if deligne {
            let d = qi(2) * (&h + qi(1)) * (qi(5) * &h - qi(6)) / (&h + qi(6));
            assert_eq!(sdim, d, "{a}");
        }
    }
}

#[test]
fn dual_coxeter_examples() {
    let h = |s: &str| {
        minimal_grading(&build_catalog_entry(&id(s)).unwrap())
            .unwrap()
            .h_vee
    };
    assert_eq!(h("osp(4|2)"), qi(0));
    assert_eq!(h("osp(4|4)"), qi(-2));
    assert_eq!(h("G(3):sl2"), q(-3, 2));
    assert_eq!(h("spo(6|2)"), qi(3));
    assert_eq!(h("sl(3|1)"), qi(2));
}

#[test]
fn sl31_has_degenerate_gnat() {
    let rd = build_catalog_entry(&id("sl(3|1)")).unwrap();
    assert_eq!(rd.sdim(), 3);
    let mg = minimal_grading(&rd).unwrap();
    assert!(!mg.is_direct_sum());
}

#[test]
fn excluded_and_invalid() {
    assert!(matches!(
        AlgebraId::parse_valid("sl(4|2)"),
        Err(CatalogError::ExcludedAlgebra { .. })
    ));
    assert!(matches!(
        AlgebraId::parse_valid("sl(2)"),
        Err(CatalogError::ExcludedAlgebra { .. })
    ));
    assert!(matches!(
        AlgebraId::parse_valid("D(2,1;-1)"),
        Err(CatalogError::InvalidParameter { .. })
    ));
    assert!(matches!(
        AlgebraId::parse_valid("D(2,1;0)"),
        Err(CatalogError::InvalidParameter { .. })
    ));
}

#[test]
fn component_dual_coxeter_examples() {
    for n in 4..=8usize {
        let rd = build_catalog_entry(&AlgebraId::sl(n)).unwrap();
        let mg = minimal_grading(&rd).unwrap();
        assert!(mg.has_center());
        assert_eq!(component_dual_coxeter(&mg, 0), qi(0));
        assert_eq!(component_dual_coxeter(&mg, 1), qi(n as i64 - 2));
        let hw = halfspace_weights(&rd, &mg).unwrap();
        let mu0 = &hw.pieces[0].mu[0];
        let h = &mg.h_vee;
        assert_eq!(weight_casimir(&rd, &mg, 0, mu0), h / (qi(2) * h - qi(4)));
    }
    for n in [1usize, 3, 4, 5] {
        let rd = build_catalog_entry(&AlgebraId::Sl { m: 2, n }).unwrap();
        let mg = minimal_grading(&rd).unwrap();
        let simple = mg.components.iter().position(|c| !c.is_center());
        if n >= 2 {
            assert_eq!(
                component_dual_coxeter(&mg, simple.unwrap()),
                qi(-(n as i64))
            );
        } else {
            assert!(simple.is_none());
        }
        let hw = halfspace_weights(&rd, &mg).unwrap();
        assert_eq!(hw.multiplicity, Multiplicity::DualPair);
        for p in &hw.pieces {
            assert_eq!((p.even_dim, p.odd_dim), (0, n));
        }
    }
}

#[test]
fn so8_half_weights_are_half_roots() {
    let rd = build_catalog_entry(&AlgebraId::so(8)).unwrap();
    let mg = minimal_grading(&rd).unwrap();
    assert_eq!(mg.components.len(), 3);
    let hw = halfspace_weights(&rd, &mg).unwrap();
    assert_eq!(hw.multiplicity, Multiplicity::Irreducible);
    for (i, c) in mg.components.iter().enumerate() {
        let alpha = &rd.roots[c.theta.unwrap()].v;
        let half: Vec<Q> = alpha.iter().map(|x| x / qi(2)).collect();
        assert_eq!(hw.pieces[0].mu[i], half);
        assert_eq!(weight_casimir(&rd, &mg, i, &half), q(3, 2));
    }
}
