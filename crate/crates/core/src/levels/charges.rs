use crate::exactmath::{qi, PolyK, RatFunK, Q};

/// `c(g,k) = k·sdim g/(k+h∨) − 6k + h∨ − 4`.
pub fn central_charge_of(sdim: i64, h_vee: &Q) -> RatFunK {
    let k = PolyK::k();
    let first = RatFunK::new(k.scale(&qi(sdim)), PolyK::linear(h_vee.clone())).expect("k + h∨ ≠ 0");
    let rest = PolyK::new(vec![h_vee - qi(4), qi(-6)]);
    &first + &RatFunK::from_poly(&rest)
}

/// Sugawara central charge `k·sdim/(k+h∨)` of a simple factor at level `k`
/// (as a polynomial in the W-algebra level), or `1` for a rank-one center.
pub fn sugawara_term(k_i: &PolyK, sdim: i64, h0: &Q, is_center: bool) -> RatFunK {
    if is_center {
        return RatFunK::constant(qi(1));
    }
    let den = k_i + &PolyK::constant(h0.clone());
    RatFunK::new(k_i.scale(&qi(sdim)), den).expect("nonzero denominator")
}
