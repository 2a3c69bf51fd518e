use minw_core::exactmath::{q, qi, Q};
use minw_core::matrixalg::{minimal_grading, realize, CasimirTarget, DualBases, MatrixAlgError};
use minw_core::rootcat::{AlgebraId, CatalogError};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SAMPLE: &[&str] = &[
    "sl(3)",
    "sl(4)",
    "sl(2|1)",
    "sl(3|1)",
    "sl(2|4)",
    "sl(4|1)",
    "psl(2|2)",
    "psl(3|3)",
    "osp(5|2)",
    "osp(4|2)",
    "spo(2|1)",
    "spo(4|2)",
    "so(7)",
    "so(8)",
    "sp(4)",
    "D(2,1;2)",
    "D(2,1;1/2)",
];

fn id(s: &str) -> AlgebraId {
    AlgebraId::parse_valid(s).unwrap()
}

#[test]
fn dimensions_and_form() {
    let a = realize(&id("sl(2|4)")).unwrap();
    assert_eq!((a.even_dim(), a.odd_dim()), (4 + 16 - 1, 16));
    let et = a.basis(a.e_theta);
    let emt = a.basis(a.e_minus_theta);
    assert_eq!(a.inner(&et, &emt), q(1, 2));
    assert_eq!(a.inner(&a.x, &a.x), q(1, 2));
    assert_eq!(a.bracket(&a.x, &et), et);
    let p = realize(&id("psl(3|3)")).unwrap();
    assert_eq!((p.even_dim(), p.odd_dim()), (16, 18));
}

#[test]
fn unsupported_and_excluded() {
    assert!(matches!(
        realize(&id("E8")),
        Err(MatrixAlgError::UnsupportedRealization(_))
    ));
    assert!(matches!(
        realize(&id("F(4):sl2")),
        Err(MatrixAlgError::UnsupportedRealization(_))
    ));
    let bad = AlgebraId::parse("sl(4|2)").unwrap();
    assert!(matches!(
        realize(&bad),
        Err(MatrixAlgError::Catalog(
            CatalogError::ExcludedAlgebra { .. }
        ))
    ));
}

#[test]
fn axioms_hold() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for s in SAMPLE {
        let a = realize(&id(s)).unwrap();
        assert_eq!(a.check_antisymmetry(), Ok(()), "{s}");
        assert_eq!(a.check_form_invariance(), Ok(()), "{s}");
        assert!(a.check_jacobi(40, 2000, &mut rng).is_ok(), "{s}");
    }
}

#[test]
fn casimir_route_matches_weight_route() {
    for s in SAMPLE {
        let a = realize(&id(s)).unwrap();
        let d = minimal_grading(&a).unwrap();
        let h = d.mg.h_vee.clone();
        assert_eq!(a.dual_coxeter().unwrap(), h, "{s}");
        let c0 = a.casimir_eigenvalue(&d, CasimirTarget::G0OnGHalf).unwrap();
        assert_eq!(c0.eigenvalue, &h - qi(1), "{s}");
        if !d.mg.is_direct_sum() {
            continue;
        }
        for (i, comp) in d.mg.components.iter().enumerate() {
            let r = a
                .casimir_eigenvalue(&d, CasimirTarget::Component(i))
                .unwrap();
            assert_eq!(r.eigenvalue, qi(2) * &comp.h0, "{s} component {i}");
            // κ_0 restricted to the ideal is 2h∨_{0,i}(·|·).
            for x in &d.components[i] {
                for y in &d.components[i] {
                    assert_eq!(a.kappa0(&d, x, y), qi(2) * &comp.h0 * a.inner(x, y), "{s}");
                }
            }
        }
    }
}

#[test]
fn center_of_sl2n() {
    for n in [1usize, 3, 4, 6] {
        let a = realize(&AlgebraId::Sl { m: 2, n }).unwrap();
        let d = minimal_grading(&a).unwrap();
        assert!(d.mg.has_center());
        let c = &d.components[0][0];
        let h = d.mg.h_vee.clone();
        assert_eq!(a.inner(c, c), qi(2) - qi(4) / &h, "n={n}");
        assert_eq!(a.killing(c, c), qi(2) * &h * a.inner(c, c));
        let r = a
            .casimir_eigenvalue(&d, CasimirTarget::Component(0))
            .unwrap();
        assert_eq!(r.eigenvalue, Q::zero());
    }
}

#[test]
fn dual_bases_and_projections() {
    let a = realize(&id("sl(2|4)")).unwrap();
    let d = minimal_grading(&a).unwrap();
    let db = DualBases::new(&a, &d).unwrap();
    assert!(db.nat_projection(&a, &a.x).iter().all(|c| c.is_zero()));
    // ⟨·,·⟩_ne on g_{-1/2} is nondegenerate and super-antisymmetric.
    let emt = a.basis(a.e_minus_theta);
    let et = a.basis(a.e_theta);
    for &u in &d.gminus_half {
        for &v in &d.gminus_half {
            let uv = a.inner(&et, &a.bracket(&a.basis(u), &a.basis(v)));
            let vu = a.inner(&et, &a.bracket(&a.basis(v), &a.basis(u)));
            assert_eq!(uv, vu, "odd u, v: the pairing is symmetric in this grading");
        }
    }
    for (g, du) in db.half.iter().zip(&db.half_dual) {
        assert_eq!(a.inner(&emt, &a.bracket(g, du)), qi(1));
    }
    // a♮ splits into its center part and its sl(n) part.
    for h in a.cartan() {
        let v = a.basis(h);
        let nat = db.nat_projection(&a, &v);
        let mut sum = a.zero();
        for i in 0..d.components.len() {
            for (s, t) in sum
                .iter_mut()
                .zip(db.component_projection(&a, i, &v).unwrap())
            {
                *s += t;
            }
        }
        assert_eq!(nat, sum);
    }
}

#[test]
fn d21a_one_matches_osp42() {
    let d = realize(&id("D(2,1;1)")).unwrap();
    let o = realize(&id("osp(4|2)")).unwrap();
    assert_eq!((d.even_dim(), d.odd_dim()), (o.even_dim(), o.odd_dim()));
    assert_eq!(d.dual_coxeter().unwrap(), o.dual_coxeter().unwrap());
    let dd = minimal_grading(&d).unwrap();
    let od = minimal_grading(&o).unwrap();
    let keys = |g: &minw_core::matrixalg::GradedDecomposition| {
        let mut v: Vec<String> = g.mg.components.iter().map(|c| c.key()).collect();
        v.sort();
        v
    };
    assert_eq!(keys(&dd), keys(&od));
}
