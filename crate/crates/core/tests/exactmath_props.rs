use minw_core::exactmath::{
    linalg, q, ratfun_equal_solutions, rational_roots, PolyK, RatFunK, Solutions, Q,
};
use proptest::prelude::*;

fn small_q() -> impl Strategy<Value = Q> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

fn poly() -> impl Strategy<Value = PolyK> {
    prop::collection::vec(small_q(), 0..5).prop_map(PolyK::new)
}

proptest! {
    #[test]
    fn product_of_linear_factors_splits(roots in prop::collection::vec(small_q(), 1..5), lead in small_q()) {
        prop_assume!(lead != q(0, 1));
        let p = PolyK::from_roots(&roots).scale(&lead);
        let rs = rational_roots(&p).unwrap();
        prop_assert!(rs.splits);
        let mut want = roots.clone();
        want.sort();
        want.dedup();
        prop_assert_eq!(rs.roots, want);
    }

    #[test]
    fn found_roots_are_roots(p in poly()) {
        prop_assume!(!p.is_zero());
        let rs = rational_roots(&p).unwrap();
        for r in &rs.roots {
            prop_assert_eq!(p.eval(r), q(0, 1));
        }
    }

    #[test]
    fn div_rem_reconstructs(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        let (qt, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&qt * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn ratfun_eval_is_homomorphic(a in poly(), b in poly(), c in poly(), x in small_q()) {
        prop_assume!(!b.is_zero());
        let f = RatFunK::new(a.clone(), b.clone()).unwrap();
        let g = RatFunK::from_poly(&c);
        prop_assume!(b.eval(&x) != q(0, 1));
        let s = &f + &g;
        let m = &f * &g;
        prop_assert_eq!(s.eval(&x).unwrap(), a.eval(&x) / b.eval(&x) + c.eval(&x));
        prop_assert_eq!(m.eval(&x).unwrap(), a.eval(&x) / b.eval(&x) * c.eval(&x));
    }

    #[test]
    fn solutions_satisfy_equation(a in poly(), b in poly(), c in poly()) {
        prop_assume!(!b.is_zero());
        let f = RatFunK::new(a, b).unwrap();
        let g = RatFunK::from_poly(&c);
        if let Ok(Solutions::Finite(v)) = ratfun_equal_solutions(&f, &g, &[]) {
            for r in v {
                prop_assert_eq!(f.eval(&r).unwrap(), g.eval(&r).unwrap());
            }
        }
    }

    #[test]
    fn nullspace_dimension(rows in prop::collection::vec(prop::collection::vec(small_q(), 4), 1..5)) {
        let r = linalg::rank(&rows);
        let ns = linalg::nullspace(&rows, 4);
        prop_assert_eq!(r + ns.len(), 4);
        for v in ns {
            prop_assert!(linalg::mat_vec(&rows, &v).iter().all(|x| *x == q(0, 1)));
        }
    }
}
