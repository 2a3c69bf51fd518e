//! Rendering of reports as JSON, CSV or Markdown. Rationals are always `p/q`.

use crate::suites::SuiteReport;
use clap::ValueEnum;
use minw_core::exactmath::{fmt_q, Q};
use minw_core::levels::{ChainEnd, CollapseChain, LevelClassification};
use minw_core::realize::RealizeReport;
use minw_core::rootcat::AlgebraId;
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn csv_table(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(&r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn md_cell(s: &str) -> String {
    s.replace('|', "\\|")
}

fn set(s: &std::collections::BTreeSet<Q>) -> String {
    let v: Vec<String> = s.iter().map(fmt_q).collect();
    format!("{{{}}}", v.join(", "))
}

/// One document per algebra; a single algebra gives a bare object in JSON.
pub fn classifications(f: Format, lcs: &[LevelClassification]) -> String {
    match f {
        Format::Json => {
            let recs: Vec<_> = lcs.iter().map(|lc| lc.record()).collect();
            match recs.as_slice() {
                [one] => json(one),
                _ => json(&recs),
            }
        }
        Format::Csv => csv_table(
            &[
                "algebra",
                "h_vee",
                "p_of_k",
                "collapsing",
                "trivial",
                "conformal_noncollapsing",
                "excluded",
            ],
            lcs.iter().map(|lc| {
                let excluded: Vec<String> = lc
                    .excluded
                    .iter()
                    .map(|(k, r)| format!("{}:{}", fmt_q(k), r))
                    .collect();
                let join = |s: &std::collections::BTreeSet<Q>| {
                    s.iter().map(fmt_q).collect::<Vec<_>>().join(";")
                };
                vec![
                    lc.algebra.to_string(),
                    fmt_q(&lc.h_vee),
                    lc.p_of_k.to_string(),
                    join(&lc.collapsing),
                    join(&lc.trivial),
                    join(&lc.conformal_noncollapsing),
                    excluded.join(";"),
                ]
            }),
        ),
        Format::Markdown => {
            let mut s = String::new();
            for lc in lcs {
                let _ = writeln!(s, "## {}\n", lc.algebra);
                let _ = writeln!(s, "| field | value |\n|---|---|");
                let _ = writeln!(s, "| h∨ | {} |", fmt_q(&lc.h_vee));
                let _ = writeln!(s, "| p(k) | {} |", md_cell(&lc.p_of_k.render_factored()));
                for c in &lc.components {
                    let _ = writeln!(
                        s,
                        "| k_i [{}] | {} (h∨_0 = {}, sdim {}) |",
                        md_cell(&c.tag),
                        c.k_i,
                        fmt_q(&c.h0),
                        c.sdim
                    );
                }
                let _ = writeln!(s, "| collapsing | {} |", set(&lc.collapsing));
                let _ = writeln!(s, "| trivial | {} |", set(&lc.trivial));
                let _ = writeln!(
                    s,
                    "| conformal non-collapsing | {} |",
                    set(&lc.conformal_noncollapsing)
                );
                if !lc.excluded.is_empty() {
                    let _ = writeln!(s, "\n| discarded k | reason |\n|---|---|");
                    for (k, r) in &lc.excluded {
                        let _ = writeln!(s, "| {} | {} |", fmt_q(k), r);
                    }
                }
                s.push('\n');
            }
            s
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainStepView {
    pub algebra: String,
    pub level: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainView {
    pub algebra: String,
    pub k: String,
    pub steps: Vec<ChainStepView>,
    /// `C1`, `Heisenberg`, `Virasoro`, `Affine` or `MultiFactor`.
    pub end_kind: String,
    pub end: String,
}

impl ChainView {
    pub fn new(id: &AlgebraId, k: &Q, c: &CollapseChain) -> Self {
        let end_kind = match &c.end {
            ChainEnd::Trivial => "C1",
            ChainEnd::Heisenberg => "Heisenberg",
            ChainEnd::Virasoro { .. } => "Virasoro",
            ChainEnd::Affine { .. } => "Affine",
            ChainEnd::MultiFactor(_) => "MultiFactor",
        };
        ChainView {
            algebra: id.to_string(),
            k: fmt_q(k),
            steps: c
                .steps
                .iter()
                .map(|s| ChainStepView {
                    algebra: s.algebra.to_string(),
                    level: fmt_q(&s.level),
                })
                .collect(),
            end_kind: end_kind.into(),
            end: c.end.to_string(),
        }
    }
}

pub fn chain(f: Format, c: &ChainView) -> String {
    match f {
        Format::Json => json(c),
        Format::Csv => {
            let mut rows: Vec<Vec<String>> = c
                .steps
                .iter()
                .enumerate()
                .map(|(i, s)| vec![i.to_string(), s.algebra.clone(), s.level.clone()])
                .collect();
            rows.push(vec!["end".into(), c.end_kind.clone(), c.end.clone()]);
            csv_table(&["step", "algebra", "level"], rows)
        }
        Format::Markdown => {
            let mut s = format!(
                "## Collapse chain of {} at k = {}\n\n| step | algebra | level |\n|---|---|---|\n",
                c.algebra, c.k
            );
            for (i, st) in c.steps.iter().enumerate() {
                let _ = writeln!(s, "| {i} | {} | {} |", md_cell(&st.algebra), st.level);
            }
            let _ = writeln!(s, "\nEnds at: {}", c.end);
            s
        }
    }
}

pub fn suite(f: Format, r: &SuiteReport) -> String {
    match f {
        Format::Json => json(r),
        Format::Csv => csv_table(
            &["suite", "case", "passed", "detail"],
            r.cases.iter().map(|c| {
                vec![
                    r.suite.clone(),
                    c.case.clone(),
                    c.passed.to_string(),
                    c.detail.clone(),
                ]
            }),
        ),
        Format::Markdown => {
            let mut s = format!(
                "## Suite `{}`: {} passed, {} failed\n\n| case | result | detail |\n|---|---|---|\n",
                r.suite, r.passed, r.failed
            );
            for c in &r.cases {
                let mark = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    s,
                    "| {} | {mark} | {} |",
                    md_cell(&c.case),
                    md_cell(&c.detail)
                );
            }
            s
        }
    }
}

pub fn realize(f: Format, reports: &[RealizeReport]) -> String {
    match f {
        Format::Json => json(reports),
        Format::Csv => csv_table(
            &["n", "report", "identity", "lhs", "rhs", "holds"],
            reports.iter().flat_map(|r| {
                r.checks.iter().map(move |c| {
                    vec![
                        r.n.to_string(),
                        r.title.clone(),
                        c.name.clone(),
                        c.lhs.clone(),
                        c.rhs.clone(),
                        c.holds.to_string(),
                    ]
                })
            }),
        ),
        Format::Markdown => {
            let mut s = String::new();
            for r in reports {
                let _ = writeln!(
                    s,
                    "## {} (n = {})\n\n| identity | lhs | rhs | |\n|---|---|---|---|",
                    r.title, r.n
                );
                for c in &r.checks {
                    let mark = if c.holds { "ok" } else { "FAIL" };
                    let _ = writeln!(
                        s,
                        "| {} | {} | {} | {mark} |",
                        md_cell(&c.name),
                        md_cell(&c.lhs),
                        md_cell(&c.rhs)
                    );
                }
                s.push('\n');
            }
            s
        }
    }
}
