//! End-to-end acceptance checks, run without the test harness so that the
//! `PASS`/`FAIL` line of each criterion is always shown. Exits nonzero if any
//! criterion fails. All comparisons are exact.

mod common;

use common::{closed_forms, compare_conformal, expected_conformal, expected_trivial, family_h_vee};
use minw_core::exactmath::{fmt_q, poly_divides, q, qi, PolyK, Q};
use minw_core::levels::{check_level_equation, classify};
use minw_core::matrixalg::{self, realize, CasimirTarget};
use minw_core::realize::{
    charge_decomposition, check_n, cross_validate, ope_table, verify_gamma_homomorphism,
    verify_lattice_products, verify_sugawara_eigenvalue, Realization, RealizeError, RealizeReport,
};
use minw_core::rootcat::reference::table_row;
use minw_core::rootcat::{
    build_catalog_entry, catalog, component_dual_coxeter, halfspace_weights, minimal_grading,
    superdimensions, weight_casimir, AlgebraId,
};
use minw_core::wstruct::{check_invariance, check_skew_symmetry, extract_pk, WContext};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};

type Outcome = Result<String, Vec<String>>;

fn id(s: &str) -> AlgebraId {
    AlgebraId::parse_valid(s).unwrap()
}

fn set(v: &[Q]) -> BTreeSet<Q> {
    v.iter().cloned().collect()
}

fn show(s: &BTreeSet<Q>) -> String {
    format!("{{{}}}", s.iter().map(fmt_q).collect::<Vec<_>>().join(", "))
}

fn finish(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Ok(summary)
    } else {
        Err(failures)
    }
}

fn lin(a: Q) -> PolyK {
    PolyK::linear(a)
}

/// Closed-form `p(k)` per family, written out directly from the family list.
fn p_closed_form(a: &AlgebraId) -> PolyK {
    match a {
        AlgebraId::Sl { m, n } => &lin(qi(1)) * &lin(q(*m as i64 - *n as i64, 2)),
        AlgebraId::Psl { .. } => &lin(qi(0)) * &lin(qi(1)),
        AlgebraId::Osp { m, n } => &lin(qi(2)) * &lin(q(*m as i64 - *n as i64 - 4, 2)),
        AlgebraId::Spo { n, m } => &lin(q(1, 2)) * &lin(q(*n as i64 - *m as i64 + 4, 4)),
        AlgebraId::D21a { a } => &lin(-a.clone()) * &lin(a + qi(1)),
        other => panic!("no closed form listed for {other}"),
    }
}

const PK_INSTANCES: [&str; 23] = [
    "sl(3)",
    "sl(4)",
    "sl(5)",
    "sl(6)",
    "sl(3|1)",
    "sl(4|1)",
    "sl(2|4)",
    "psl(3|3)",
    "psl(4|4)",
    "osp(5|2)",
    "osp(7|2)",
    "spo(4|2)",
    "spo(6|2)",
    "spo(2|1)",
    "sp(4)",
    "sp(6)",
    "so(7)",
    "so(8)",
    "so(9)",
    "D(2,1;2)",
    "D(2,1;1/2)",
    "D(2,1;-3/2)",
    "D(2,1;3)",
];

fn context(a: &AlgebraId) -> WContext {
    WContext::new(realize(a).unwrap()).unwrap()
}

fn extracted_pk() -> Outcome {
    let mut failures = Vec::new();
    for s in PK_INSTANCES {
        let a = id(s);
        let p = extract_pk(&context(&a)).unwrap().p;
        let expected = p_closed_form(&a);
        if p != expected {
            failures.push(format!(
                "{s}: extracted {}, closed form {}",
                p.render_factored(),
                expected.render_factored()
            ));
        }
    }
    finish(failures, format!("{} algebras", PK_INSTANCES.len()))
}

fn catalog_invariants() -> Outcome {
    let mut failures = Vec::new();
    let (mut matrix, mut weights) = (0, 0);
    for a in catalog() {
        let rd = build_catalog_entry(&a).unwrap();
        let mg = minimal_grading(&rd).unwrap();
        let h = &mg.h_vee;
        if *h != family_h_vee(&a) || *h != table_row(&a).h_vee {
            failures.push(format!("{a}: h∨ = {}", fmt_q(h)));
        }
        let sd = superdimensions(&rd, &mg);
        if qi(sd.sdim_ghalf) != qi(2) * h - qi(4) {
            failures.push(format!("{a}: sdim g_1/2 = {}", sd.sdim_ghalf));
        }
        let target = h - qi(1);
        match realize(&a) {
            Ok(alg) => {
                matrix += 1;
                let d = matrixalg::minimal_grading(&alg).unwrap();
                let c = alg
                    .casimir_eigenvalue(&d, CasimirTarget::G0OnGHalf)
                    .unwrap()
                    .eigenvalue;
                if c != target {
                    failures.push(format!("{a}: Casimir (matrix) {} ≠ h∨−1", fmt_q(&c)));
                }
            }
            Err(_) => {
                weights += 1;
                for piece in &halfspace_weights(&rd, &mg).unwrap().pieces {
                    let mut c = q(1, 2);
                    for (i, mu) in piece.mu.iter().enumerate() {
                        c += weight_casimir(&rd, &mg, i, mu);
                    }
                    if c != target {
                        failures.push(format!("{a}: Casimir (weights) {} ≠ h∨−1", fmt_q(&c)));
                    }
                }
            }
        }
        let p = classify(&a).unwrap().p_of_k;
        for i in 0..mg.components.len() {
            let ki = lin((h - component_dual_coxeter(&mg, i)) / qi(2));
            if !poly_divides(&ki, &p).unwrap() {
                failures.push(format!("{a}: k_{i} = {ki} ∤ {}", p.render_factored()));
            }
        }
    }
    finish(
        failures,
        format!(
            "{} entries ({matrix} matrix route, {weights} weight route)",
            matrix + weights
        ),
    )
}

fn trivial_levels() -> Outcome {
    let mut failures = Vec::new();
    let mut nonempty = 0;
    for a in catalog() {
        let got = classify(&a).unwrap().trivial;
        let expected = expected_trivial(&a);
        nonempty += usize::from(!got.is_empty());
        if got != expected {
            failures.push(format!("{a}: {} ≠ {}", show(&got), show(&expected)));
        }
    }
    for (s, expected) in [
        ("spo(2|1)", set(&[q(-1, 2), q(-5, 4)])),
        ("so(8)", set(&[qi(-2)])),
    ] {
        let got = classify(&id(s)).unwrap().trivial;
        if got != expected {
            failures.push(format!("{s}: {} ≠ {}", show(&got), show(&expected)));
        }
    }
    finish(failures, format!("{nonempty} entries with a trivial level"))
}

fn closed_form_checks() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for a in catalog() {
        let lc = classify(&a).unwrap();
        let sdim = qi(build_catalog_entry(&a).unwrap().sdim());
        for cf in closed_forms(&a) {
            checked += 1;
            if sdim != cf.sdim {
                failures.push(format!(
                    "{a} [{}]: sdim {} ≠ {}",
                    cf.name,
                    fmt_q(&sdim),
                    fmt_q(&cf.sdim)
                ));
            }
            if lc.p_of_k != cf.p {
                failures.push(format!("{a} [{}]: p(k) {} ≠ {}", cf.name, lc.p_of_k, cf.p));
            }
            if let Some(h0) = &cf.h0 {
                for c in lc.components.iter().filter(|c| !c.is_center && &c.h0 != h0) {
                    failures.push(format!(
                        "{a} [{}]: h∨_0[{}] = {}",
                        cf.name,
                        c.tag,
                        fmt_q(&c.h0)
                    ));
                }
            }
        }
    }
    if checked < 60 {
        failures.push(format!("only {checked} closed forms applied"));
    }
    finish(failures, format!("{checked} closed-form applications"))
}

fn conformal_levels() -> Outcome {
    let mut failures = Vec::new();
    let mut levels = 0;
    for a in catalog() {
        let lc = classify(&a).unwrap();
        levels += lc.conformal_noncollapsing.len();
        failures.extend(compare_conformal(&lc, &expected_conformal(&a)));
        let universal = set(&[-(&lc.h_vee * q(2, 3)), -((&lc.h_vee - qi(1)) / qi(2))]);
        if !lc.conformal_noncollapsing.is_subset(&universal) {
            failures.push(format!(
                "{a}: {} ⊄ {}",
                show(&lc.conformal_noncollapsing),
                show(&universal)
            ));
        }
    }
    finish(
        failures,
        format!(
            "{} entries, {levels} conformal non-collapsing levels",
            catalog().len()
        ),
    )
}

fn level_equation() -> Outcome {
    let mut failures = Vec::new();
    for a in catalog() {
        let lc = classify(&a).unwrap();
        let r = match check_level_equation(&lc) {
            Ok(r) => r,
            Err(e) => {
                failures.push(e.to_string());
                continue;
            }
        };
        if let AlgebraId::Sl { m, n: 0 } = a {
            let m = m as i64;
            let expected = if m >= 4 {
                set(&[qi(-1), q(-2 * m, 3), q(1 - m, 2), q(-m, 2)])
            } else {
                set(&[qi(-1), q(-3, 2)])
            };
            if r.solutions != expected {
                failures.push(format!(
                    "sl({m}): {} ≠ {}",
                    show(&r.solutions),
                    show(&expected)
                ));
            }
        }
    }
    finish(failures, format!("{} entries", catalog().len()))
}

fn all_hold(r: &RealizeReport, failures: &mut Vec<String>) {
    for c in r.checks.iter().filter(|c| !c.holds) {
        failures.push(format!(
            "n={} {}: {}: {} ≠ {}",
            r.n, r.title, c.name, c.lhs, c.rhs
        ));
    }
}

fn free_field_realization() -> Outcome {
    let mut failures = Vec::new();
    let mut identities = 0;
    for (n, expected) in [(4, q(8, 3)), (6, q(16, 5)), (7, q(10, 3))] {
        let r = Realization::new(n).unwrap();
        let t = ope_table(&r).unwrap();
        let eig = verify_sugawara_eigenvalue(n).unwrap();
        if eig.eigenvalue != fmt_q(&expected) {
            failures.push(format!(
                "n={n}: eigenvalue {} ≠ {}",
                eig.eigenvalue,
                fmt_q(&expected)
            ));
        }
        let gamma = verify_gamma_homomorphism(&r, &t).unwrap();
        match gamma.checks.iter().find(|c| c.name == "φ̄_(1) w") {
            Some(c) if c.lhs == "0" => {}
            other => failures.push(format!("n={n}: φ̄_(1)w = {other:?}")),
        }
        for rep in [
            cross_validate(&r, &t).unwrap(),
            eig.report,
            verify_lattice_products(&r, &t).unwrap(),
            gamma,
            charge_decomposition(&r, &t).unwrap(),
        ] {
            identities += rep.checks.len();
            all_hold(&rep, &mut failures);
        }
    }
    match check_n(5) {
        Err(RealizeError::UnsupportedN { n: 5, reason })
            if reason.contains("equals conformal weight 3") => {}
        other => failures.push(format!("n=5 not rejected: {other:?}")),
    }
    finish(
        failures,
        format!("n = 4, 6, 7: {identities} identities; n = 5 rejected"),
    )
}

fn structural_properties() -> Outcome {
    let mut failures = Vec::new();
    let (mut exhaustive, mut sampled) = (0, 0);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for a in catalog() {
        let lc = classify(&a).unwrap();
        for k in lc.collapsing.iter().filter(|k| lc.in_sugawara_domain(k)) {
            let (cg, cs) = (lc.c_g.eval(k), lc.sugawara_central_charge_at(k));
            if cg.is_none() || cg != cs {
                failures.push(format!("{a}: collapsing {} not conformal", fmt_q(k)));
            }
        }
        let Ok(alg) = realize(&a) else { continue };
        if let Err(e) = alg.check_antisymmetry() {
            failures.push(format!("{a}: antisymmetry fails at {e:?}"));
        }
        if let Err(e) = alg.check_form_invariance() {
            failures.push(format!("{a}: form invariance fails at {e:?}"));
        }
        if alg.dim() <= 60 {
            exhaustive += 1;
        } else {
            sampled += 1;
        }
        if let Err(e) = alg.check_jacobi(60, 20_000, &mut rng) {
            failures.push(format!("{a}: Jacobi fails at {e:?}"));
        }
        let ctx = WContext::new(alg).unwrap();
        let m = ctx.lambda2_matrix();
        if let Err(e) = check_skew_symmetry(&ctx, &m) {
            failures.push(e.to_string());
        }
        let n = ctx.nat_dim();
        let units: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { qi(1) } else { qi(0) }).collect())
            .collect();
        if let Err(e) = check_invariance(&ctx, &m, &units) {
            failures.push(e.to_string());
        }
    }
    finish(
        failures,
        format!("Jacobi exhaustive on {exhaustive} algebras, sampled on {sampled}"),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        (
            "p(k) extracted from the brackets equals the closed form",
            extracted_pk,
        ),
        (
            "catalog invariants: h∨, sdim g_1/2, Casimir on g_-1/2, k_i | p(k)",
            catalog_invariants,
        ),
        (
            "trivial-collapse levels match both families",
            trivial_levels,
        ),
        ("closed forms for sdim g, p(k) and h∨_0", closed_form_checks),
        (
            "conformal non-collapsing levels and exclusion ledger over the sweep",
            conformal_levels,
        ),
        (
            "solutions of c(g,k) = c_sug are the conformal levels",
            level_equation,
        ),
        (
            "free-field realization of sl(n+1) at level −(n+1)/2",
            free_field_realization,
        ),
        (
            "super Jacobi, λ²-form symmetry and invariance, collapsing ⇒ conformal",
            structural_properties,
        ),
    ];
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(vec![format!("panicked: {msg}")])
        });
        match outcome {
            Ok(summary) => println!("PASS {} {name} ({summary})", i + 1),
            Err(reasons) => {
                println!("FAIL {} {name}", i + 1);
                for r in &reasons {
                    println!("    {r}");
                }
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
