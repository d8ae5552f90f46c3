//! Closed-form predictions for linear complexity, minimal polynomials and
//! autocorrelation, and a verifier that checks them against measurement.

mod params;
mod predict;
mod verify;

pub use params::{g_param, h0, h1, mod_underline, n2, nu, odd_part, two_adic_valuation};
pub use predict::{
    acf_predict_interleaved, acf_profile_predict_interleaved, acf_via_decomposition,
    case2_long_min_poly, chan_games_predict, hasse_at_one_predict, interleaved_case1,
    interleaved_case2, interleaved_lc_bounds, large_lc_case, large_lc_conditions,
    lc_predict, lc_predict_interleaved, lc_predict_nonresidue, merged_case_index,
    min_poly_predict, n1, ntu_acf_predict, ntu_acf_profile_predict, Basis, CorollaryPrediction,
    InterleavedLcPrediction, LargeLcDecomposition, LcPrediction,
};
pub use verify::{
    distribution_summary, poly_summary, sweep, verify_tuple, AChoice, EChoice, Quantity,
    ReportRow, Status, SweepCase, VerificationReport, VerifyOptions,
};
