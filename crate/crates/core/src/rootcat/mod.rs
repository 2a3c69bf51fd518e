//! Root data for the catalog of pairs (g, θ), the minimal grading they
//! induce, and the decomposition of `g♮` into minimal ideals.

mod build;
pub mod grading;
mod id;
pub mod identify;
pub mod reference;

pub use build::{build_catalog_entry, Root, RootDatum};
pub use grading::{
    component_dual_coxeter, dual_coxeter, halfspace_weights, minimal_grading, superdimensions,
    weight_casimir, ComponentKind, GnatComponent, HalfSpacePiece, HalfSpaceWeights, MinimalGrading,
    Multiplicity, Superdimensions,
};
pub use id::{d21a_canonical, d21a_orbit, AlgebraId, Exceptional, F4Theta, G3Theta};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("cannot parse '{token}': {reason}")]
    Parse { token: String, reason: String },
    #[error("{id} is excluded: {reason}")]
    ExcludedAlgebra { id: String, reason: String },
    #[error("{id}: invalid parameter: {reason}")]
    InvalidParameter { id: String, reason: String },
    #[error("{id}: grading check failed: {detail}")]
    GradingViolation { id: String, detail: String },
    #[error("{id}: invariant form is degenerate on component {component}")]
    DegenerateComponent { id: String, component: String },
}

/// Every catalog entry used by sweeps, in a fixed order.
///
/// Sizes are bounded: `sl(n)` up to 9, `sl(m|n)` with `m + n ≤ 9`, `psl(m|m)`
/// up to 4, ortho-symplectic with total size up to 12, five values of the
/// `D(2,1;a)` parameter and every exceptional case.
pub fn catalog() -> Vec<AlgebraId> {
    use crate::exactmath::q;
    let mut v = Vec::new();
    for m in 3..=9 {
        v.push(AlgebraId::sl(m));
    }
    for total in 3..=9usize {
        for n in 1..total {
            let m = total - n;
            let id = AlgebraId::Sl { m, n };
            if id.validate().is_ok() && m != n + 2 {
                v.push(id);
            }
        }
    }
    for m in 2..=4 {
        v.push(AlgebraId::Psl { m });
    }
    for m in 5..=12 {
        v.push(AlgebraId::so(m));
    }
    for n in (4..=12).step_by(2) {
        v.push(AlgebraId::sp(n));
    }
    for total in 1..=12usize {
        for n in (2..=total).step_by(2) {
            let m = total - n;
            if m == 0 {
                continue;
            }
            let o = AlgebraId::Osp { m, n };
            if o.validate().is_ok() {
                v.push(o);
            }
            let s = AlgebraId::Spo { n, m };
            if s.validate().is_ok() {
                v.push(s);
            }
        }
    }
    for a in [q(1, 2), q(-1, 2), q(-3, 2), q(2, 1), q(3, 1)] {
        v.push(AlgebraId::D21a { a });
    }
    v.push(AlgebraId::F4Super(F4Theta::Sl2));
    v.push(AlgebraId::F4Super(F4Theta::D212));
    v.push(AlgebraId::G3Super(G3Theta::Sl2));
    v.push(AlgebraId::G3Super(G3Theta::G2));
    for e in [
        Exceptional::G2,
        Exceptional::F4,
        Exceptional::E6,
        Exceptional::E7,
        Exceptional::E8,
    ] {
        v.push(AlgebraId::Exceptional(e));
    }
    v
}
