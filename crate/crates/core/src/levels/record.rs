use super::LevelClassification;
use crate::exactmath::{fmt_q, PolyK};
use serde::{Deserialize, Serialize};

/// Serializable summary of a [`LevelClassification`]. Rationals are `"p/q"`
/// strings, polynomials are coefficient lists from the constant term up.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub algebra: String,
    pub h_vee: String,
    pub p_of_k: Vec<String>,
    pub components: Vec<ComponentRecord>,
    pub collapsing: Vec<String>,
    pub trivial: Vec<String>,
    pub conformal_noncollapsing: Vec<String>,
    pub excluded: Vec<ExcludedRecord>,
    pub c_g: RatRecord,
    pub c_sug: RatRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRecord {
    pub tag: String,
    pub h0: String,
    pub k_i: Vec<String>,
    pub sdim: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcludedRecord {
    pub k: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatRecord {
    pub numer: Vec<String>,
    pub denom: Vec<String>,
}

fn coeffs(p: &PolyK) -> Vec<String> {
    p.coeffs().iter().map(fmt_q).collect()
}

impl From<&LevelClassification> for ClassificationRecord {
    fn from(lc: &LevelClassification) -> Self {
        let set = |s: &std::collections::BTreeSet<_>| s.iter().map(fmt_q).collect();
        ClassificationRecord {
            algebra: lc.algebra.to_string(),
            h_vee: fmt_q(&lc.h_vee),
            p_of_k: coeffs(&lc.p_of_k),
            components: lc
                .components
                .iter()
                .map(|c| ComponentRecord {
                    tag: c.tag.clone(),
                    h0: fmt_q(&c.h0),
                    k_i: coeffs(&c.k_i),
                    sdim: c.sdim,
                })
                .collect(),
            collapsing: set(&lc.collapsing),
            trivial: set(&lc.trivial),
            conformal_noncollapsing: set(&lc.conformal_noncollapsing),
            excluded: lc
                .excluded
                .iter()
                .map(|(k, r)| ExcludedRecord {
                    k: fmt_q(k),
                    reason: r.tag().into(),
                })
                .collect(),
            c_g: RatRecord {
                numer: coeffs(lc.c_g.numer()),
                denom: coeffs(lc.c_g.denom()),
            },
            c_sug: RatRecord {
                numer: coeffs(lc.c_sug.numer()),
                denom: coeffs(lc.c_sug.denom()),
            },
        }
    }
}

impl ClassificationRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serializes")
    }
}
