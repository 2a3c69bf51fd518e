//! Verification suites run by `minw verify`. Each suite produces one case per
//! instance; cases are computed in parallel and reported in instance order.

use crate::goldens;
use minw_core::exactmath::{fmt_q, poly_divides, q, qi, PolyK, Q};
use minw_core::levels::{check_level_equation, classify, collapse_target, ClassificationRecord};
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
use minw_core::wstruct::{
    check_invariance, check_skew_symmetry, extract_pk, verify_bracket_reduction, WContext,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::path::PathBuf;
use std::str::FromStr;

/// Algebras whose `p(k)` is extracted from the brackets of an explicit realization.
pub const PK_INSTANCES: [&str; 23] = [
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

/// `sl(3|1)` is left out: its `g♮ = gl(1|1)` has no splitting into ideals.
pub const BRACKET_REDUCTION_INSTANCES: [&str; 9] = [
    "sl(4)", "sl(5)", "sp(6)", "so(8)", "spo(2|1)", "osp(5|2)", "psl(3|3)", "sl(2|4)", "D(2,1;2)",
];

/// Jacobi is checked on every triple up to this dimension, on samples above it.
pub const JACOBI_EXHAUSTIVE_DIM: usize = 60;
pub const JACOBI_SAMPLES: usize = 20_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Suite {
    Pk,
    Invariants,
    BracketReduction,
    TrivialLevels,
    ConformalLevels,
    LevelEquation,
    Structure,
    Realize(usize),
}

pub const SUITE_NAMES: &str =
    "pk, invariants, bracket-reduction, trivial-levels, conformal-levels, level-equation, structure, realize-<n>";

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "pk" => Suite::Pk,
            "invariants" => Suite::Invariants,
            "bracket-reduction" => Suite::BracketReduction,
            "trivial-levels" => Suite::TrivialLevels,
            "conformal-levels" => Suite::ConformalLevels,
            "level-equation" => Suite::LevelEquation,
            "structure" => Suite::Structure,
            _ => match s.strip_prefix("realize-").map(str::parse) {
                Some(Ok(n)) => Suite::Realize(n),
                _ => {
                    return Err(format!(
                        "unknown suite '{s}'; expected one of {SUITE_NAMES}"
                    ))
                }
            },
        })
    }
}

impl Suite {
    pub fn name(&self) -> String {
        match self {
            Suite::Pk => "pk".into(),
            Suite::Invariants => "invariants".into(),
            Suite::BracketReduction => "bracket-reduction".into(),
            Suite::TrivialLevels => "trivial-levels".into(),
            Suite::ConformalLevels => "conformal-levels".into(),
            Suite::LevelEquation => "level-equation".into(),
            Suite::Structure => "structure".into(),
            Suite::Realize(n) => format!("realize-{n}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub goldens: PathBuf,
    pub regenerate: bool,
    pub verbose: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub case: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<CaseResult>,
}

type CaseOutcome = Result<String, String>;

fn case(name: impl Into<String>, outcome: CaseOutcome) -> CaseResult {
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CaseResult {
        case: name.into(),
        passed,
        detail,
    }
}

fn report(suite: &Suite, cases: Vec<CaseResult>) -> SuiteReport {
    let passed = cases.iter().filter(|c| c.passed).count();
    SuiteReport {
        suite: suite.name(),
        passed,
        failed: cases.len() - passed,
        cases,
    }
}

fn parsed(list: &[&str]) -> Vec<AlgebraId> {
    list.iter()
        .map(|s| AlgebraId::parse_valid(s).expect("built-in instance list parses"))
        .collect()
}

fn context(id: &AlgebraId) -> Result<WContext, String> {
    let alg = realize(id).map_err(|e| e.to_string())?;
    WContext::new(alg).map_err(|e| e.to_string())
}

/// Requires `got == expected`, naming the quantity on failure.
fn same<T: PartialEq + std::fmt::Display>(what: &str, got: T, expected: T) -> Result<(), String> {
    if got == expected {
        Ok(())
    } else {
        Err(format!("{what}: computed {got}, expected {expected}"))
    }
}

fn pk_case(id: &AlgebraId) -> CaseOutcome {
    let p = extract_pk(&context(id)?).map_err(|e| e.to_string())?.p;
    let expected = table_row(id).p;
    if p == expected {
        Ok(format!("p(k) = {}", p.render_factored()))
    } else {
        Err(format!(
            "p(k) mismatch: extracted {}, tabulated {}",
            p.render_factored(),
            expected.render_factored()
        ))
    }
}

fn invariants_case(id: &AlgebraId) -> CaseOutcome {
    let err = |e: &dyn std::fmt::Display| e.to_string();
    let rd = build_catalog_entry(id).map_err(|e| err(&e))?;
    let mg = minimal_grading(&rd).map_err(|e| err(&e))?;
    let row = table_row(id);
    same("h∨", fmt_q(&mg.h_vee), fmt_q(&row.h_vee))?;
    let sd = superdimensions(&rd, &mg);
    same("sdim g_1/2", qi(sd.sdim_ghalf), qi(2) * &mg.h_vee - qi(4))?;

    let target = &mg.h_vee - qi(1);
    let route = match realize(id) {
        Ok(alg) => {
            let d = matrixalg::minimal_grading(&alg).map_err(|e| err(&e))?;
            let c = alg
                .casimir_eigenvalue(&d, CasimirTarget::G0OnGHalf)
                .map_err(|e| err(&e))?;
            same(
                "Casimir of g_0 on g_-1/2 (matrix)",
                fmt_q(&c.eigenvalue),
                fmt_q(&target),
            )?;
            "matrix"
        }
        Err(_) => {
            let hw = halfspace_weights(&rd, &mg).map_err(|e| err(&e))?;
            for piece in &hw.pieces {
                let mut s = q(1, 2);
                for (i, mu) in piece.mu.iter().enumerate() {
                    s += weight_casimir(&rd, &mg, i, mu);
                }
                same(
                    "Casimir of g_0 on g_-1/2 (weights)",
                    fmt_q(&s),
                    fmt_q(&target),
                )?;
            }
            "weights"
        }
    };
    for i in 0..mg.components.len() {
        let ki = PolyK::linear((&mg.h_vee - component_dual_coxeter(&mg, i)) / qi(2));
        if !poly_divides(&ki, &row.p).map_err(|e| err(&e))? {
            return Err(format!(
                "k_{i} = {ki} does not divide p(k) = {}",
                row.p.render_factored()
            ));
        }
    }
    Ok(format!(
        "h∨ = {}, sdim g_1/2 = {}, Casimir route: {route}",
        fmt_q(&mg.h_vee),
        sd.sdim_ghalf
    ))
}

fn bracket_reduction_case(id: &AlgebraId) -> CaseOutcome {
    let r = verify_bracket_reduction(&context(id)?).map_err(|e| e.to_string())?;
    Ok(format!(
        "{} pairs, p(k) = {}",
        r.pairs_checked,
        r.p.render_factored()
    ))
}

fn catalog_records() -> Result<Vec<ClassificationRecord>, String> {
    catalog()
        .par_iter()
        .map(|id| {
            classify(id)
                .map(|lc| lc.record())
                .map_err(|e| format!("{id}: {e}"))
        })
        .collect()
}

/// Pairs computed records with the committed ones, by algebra name.
fn golden_pairs(
    suite: &Suite,
    cfg: &SuiteConfig,
    records: &[ClassificationRecord],
) -> Result<Vec<(ClassificationRecord, Option<ClassificationRecord>)>, String> {
    if cfg.regenerate {
        goldens::write(&cfg.goldens, &suite.name(), records)?;
    }
    let golden = goldens::load(&cfg.goldens)?;
    Ok(records
        .iter()
        .map(|r| {
            (
                r.clone(),
                golden
                    .records
                    .iter()
                    .find(|g| g.algebra == r.algebra)
                    .cloned(),
            )
        })
        .collect())
}

fn diff_sets(what: &str, got: &[String], expected: &[String]) -> Result<(), String> {
    if got == expected {
        return Ok(());
    }
    let missing: Vec<_> = expected.iter().filter(|x| !got.contains(x)).collect();
    let extra: Vec<_> = got.iter().filter(|x| !expected.contains(x)).collect();
    Err(format!(
        "{what} differs from golden: missing {missing:?}, unexpected {extra:?}"
    ))
}

fn trivial_case(rec: &ClassificationRecord, golden: Option<&ClassificationRecord>) -> CaseOutcome {
    let g = golden.ok_or("no golden record")?;
    diff_sets("trivial levels", &rec.trivial, &g.trivial)?;
    let id = AlgebraId::parse_valid(&rec.algebra).map_err(|e| e.to_string())?;
    let lc = classify(&id).map_err(|e| e.to_string())?;
    for k in &lc.trivial {
        let t = collapse_target(&id, k).map_err(|e| e.to_string())?;
        if !t.is_trivial() {
            return Err(format!(
                "k = {} is listed trivial but collapses to {t}",
                fmt_q(k)
            ));
        }
    }
    Ok(format!("trivial {{{}}}", rec.trivial.join(", ")))
}

fn conformal_case(
    rec: &ClassificationRecord,
    golden: Option<&ClassificationRecord>,
) -> CaseOutcome {
    let g = golden.ok_or("no golden record")?;
    diff_sets("collapsing levels", &rec.collapsing, &g.collapsing)?;
    diff_sets(
        "conformal non-collapsing levels",
        &rec.conformal_noncollapsing,
        &g.conformal_noncollapsing,
    )?;
    let ledger = |r: &ClassificationRecord| {
        r.excluded
            .iter()
            .map(|e| format!("{}:{}", e.k, e.reason))
            .collect::<Vec<_>>()
    };
    diff_sets("exclusion ledger", &ledger(rec), &ledger(g))?;
    if rec != g {
        return Err("record differs from golden outside the level sets".into());
    }
    let id = AlgebraId::parse_valid(&rec.algebra).map_err(|e| e.to_string())?;
    let lc = classify(&id).map_err(|e| e.to_string())?;
    let allowed = [-(&lc.h_vee * q(2, 3)), -((&lc.h_vee - qi(1)) / qi(2))];
    if let Some(k) = lc
        .conformal_noncollapsing
        .iter()
        .find(|k| !allowed.contains(k))
    {
        return Err(format!(
            "conformal level {} is outside {{−2h∨/3, −(h∨−1)/2}}",
            fmt_q(k)
        ));
    }
    Ok(format!(
        "conformal {{{}}}, {} discarded",
        rec.conformal_noncollapsing.join(", "),
        rec.excluded.len()
    ))
}

fn level_equation_case(id: &AlgebraId) -> CaseOutcome {
    let lc = classify(id).map_err(|e| e.to_string())?;
    let r = check_level_equation(&lc).map_err(|e| e.to_string())?;
    let v: Vec<String> = r.solutions.iter().map(fmt_q).collect();
    Ok(format!("solutions {{{}}}", v.join(", ")))
}

fn structure_case(id: &AlgebraId, seed: u64) -> CaseOutcome {
    let lc = classify(id).map_err(|e| e.to_string())?;
    for k in lc.collapsing.iter().filter(|k| lc.in_sugawara_domain(k)) {
        let cg = lc.c_g.eval(k);
        let cs = lc.sugawara_central_charge_at(k);
        if cg.is_none() || cg != cs {
            let show = |x: Option<Q>| x.map(|x| fmt_q(&x)).unwrap_or_else(|| "undefined".into());
            return Err(format!(
                "collapsing k = {} is not conformal: c = {}, c_sug = {}",
                fmt_q(k),
                show(cg),
                show(cs)
            ));
        }
    }
    let alg = match realize(id) {
        Ok(a) => a,
        Err(_) => return Ok("collapsing ⇒ conformal; root data only".into()),
    };
    alg.check_antisymmetry()
        .map_err(|(i, j)| format!("bracket not supersymmetric at ({i}, {j})"))?;
    alg.check_form_invariance()
        .map_err(|(i, j, k)| format!("form not invariant at ({i}, {j}, {k})"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples = alg
        .check_jacobi(JACOBI_EXHAUSTIVE_DIM, JACOBI_SAMPLES, &mut rng)
        .map_err(|(i, j, k)| format!("Jacobi fails on basis triple ({i}, {j}, {k})"))?;
    let dim = alg.dim();
    let ctx = WContext::new(alg).map_err(|e| e.to_string())?;
    let m = ctx.lambda2_matrix();
    check_skew_symmetry(&ctx, &m).map_err(|e| e.to_string())?;
    let units: Vec<Vec<Q>> = (0..ctx.nat_dim())
        .map(|i| {
            (0..ctx.nat_dim())
                .map(|j| if i == j { qi(1) } else { qi(0) })
                .collect()
        })
        .collect();
    check_invariance(&ctx, &m, &units).map_err(|e| e.to_string())?;
    let mode = if dim <= JACOBI_EXHAUSTIVE_DIM {
        "all"
    } else {
        "sampled"
    };
    Ok(format!(
        "dim {dim}, Jacobi on {triples} triples ({mode}), λ²-form skew and g♮-invariant"
    ))
}

/// Every report produced by the free-field check for one `n`.
pub fn realize_reports(n: usize) -> Result<Vec<RealizeReport>, RealizeError> {
    check_n(n)?;
    let r = Realization::new(n)?;
    let t = ope_table(&r)?;
    let (gamma, rest) = rayon::join(
        || verify_gamma_homomorphism(&r, &t),
        || -> Result<_, RealizeError> {
            Ok(vec![
                cross_validate(&r, &t)?,
                verify_sugawara_eigenvalue(n)?.report,
                verify_lattice_products(&r, &t)?,
                charge_decomposition(&r, &t)?,
            ])
        },
    );
    let mut out = rest?;
    out.insert(3, gamma?);
    Ok(out)
}

fn realize_cases(n: usize) -> Result<Vec<CaseResult>, String> {
    match realize_reports(n) {
        Ok(reports) => Ok(reports
            .iter()
            .map(|r| {
                let outcome = match r.checks.iter().find(|c| !c.holds) {
                    None => Ok(format!("{} identities hold", r.checks.len())),
                    Some(c) => Err(format!("{}: {} ≠ {}", c.name, c.lhs, c.rhs)),
                };
                case(r.title.clone(), outcome)
            })
            .collect()),
        Err(e @ RealizeError::UnsupportedN { .. }) => Err(e.to_string()),
        Err(e) => Ok(vec![case(format!("n = {n}"), Err(e.to_string()))]),
    }
}

fn per_algebra(
    ids: &[AlgebraId],
    cfg: &SuiteConfig,
    f: impl Fn(usize, &AlgebraId) -> CaseOutcome + Sync,
) -> Vec<CaseResult> {
    ids.par_iter()
        .enumerate()
        .map(|(i, id)| {
            let c = case(id.to_string(), f(i, id));
            if cfg.verbose > 0 {
                eprintln!("[{}] {}", if c.passed { "ok" } else { "FAIL" }, c.case);
            }
            c
        })
        .collect()
}

/// Runs a suite. `Err` is reserved for problems with the request itself.
pub fn run(suite: &Suite, cfg: &SuiteConfig) -> Result<SuiteReport, String> {
    let cases = match suite {
        Suite::Pk => per_algebra(&parsed(&PK_INSTANCES), cfg, |_, id| pk_case(id)),
        Suite::Invariants => per_algebra(&catalog(), cfg, |_, id| invariants_case(id)),
        Suite::BracketReduction => {
            per_algebra(&parsed(&BRACKET_REDUCTION_INSTANCES), cfg, |_, id| {
                bracket_reduction_case(id)
            })
        }
        Suite::TrivialLevels | Suite::ConformalLevels => {
            let records = catalog_records()?;
            let pairs = golden_pairs(suite, cfg, &records)?;
            pairs
                .par_iter()
                .map(|(r, g)| {
                    let outcome = match suite {
                        Suite::TrivialLevels => trivial_case(r, g.as_ref()),
                        _ => conformal_case(r, g.as_ref()),
                    };
                    case(r.algebra.clone(), outcome)
                })
                .collect()
        }
        Suite::LevelEquation => per_algebra(&catalog(), cfg, |_, id| level_equation_case(id)),
        Suite::Structure => per_algebra(&catalog(), cfg, |i, id| {
            structure_case(id, cfg.seed.wrapping_add(i as u64))
        }),
        Suite::Realize(n) => realize_cases(*n)?,
    };
    Ok(report(suite, cases))
}
