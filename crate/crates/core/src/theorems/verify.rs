//! Measure sequences, compare against every applicable closed form, and
//! tabulate the outcome.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::predict::{self, Basis};
use crate::correlate::{autocorrelation_profile, cross_correlation_profile};
use crate::error::{param_err, Error, Result};
use crate::gf::{legendre_symbol, ExtFieldContext, PrimeFieldElement};
use crate::lincomp::{berlekamp_massey, minimal_poly_gcd, period_polynomial, DensePoly, LcReport};
use crate::seqgen::{balance_count, NtuFamily, SymbolSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Quantity {
    #[serde(rename = "lc_T")]
    LcLong,
    #[serde(rename = "lc_Tbar")]
    LcLongComplement,
    #[serde(rename = "lc_t")]
    LcShort,
    #[serde(rename = "min_poly_T")]
    MinPolyLong,
    #[serde(rename = "min_poly_t")]
    MinPolyShort,
    #[serde(rename = "hasse_T_at_1")]
    HasseAtOne,
    #[serde(rename = "acf_T")]
    AcfLong,
    #[serde(rename = "balance_Se")]
    BalanceInterleaved,
    #[serde(rename = "acf_Se")]
    AcfInterleaved,
    #[serde(rename = "lc_Se")]
    LcInterleaved,
    #[serde(rename = "min_poly_Se")]
    MinPolyInterleaved,
    #[serde(rename = "lc_Se_bounds")]
    LcInterleavedBounds,
}

impl Quantity {
    pub fn as_str(self) -> &'static str {
        match self {
            Quantity::LcLong => "lc_T",
            Quantity::LcLongComplement => "lc_Tbar",
            Quantity::LcShort => "lc_t",
            Quantity::MinPolyLong => "min_poly_T",
            Quantity::MinPolyShort => "min_poly_t",
            Quantity::HasseAtOne => "hasse_T_at_1",
            Quantity::AcfLong => "acf_T",
            Quantity::BalanceInterleaved => "balance_Se",
            Quantity::AcfInterleaved => "acf_Se",
            Quantity::LcInterleaved => "lc_Se",
            Quantity::MinPolyInterleaved => "min_poly_Se",
            Quantity::LcInterleavedBounds => "lc_Se_bounds",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    Violated,
    HypothesisNotMet,
    ConjectureVerified,
    ConjectureViolated,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Violated => "violated",
            Status::HypothesisNotMet => "hypothesis_not_met",
            Status::ConjectureVerified => "conjecture_verified",
            Status::ConjectureViolated => "conjecture_violated",
        }
    }

    fn from_comparison(basis: Basis, holds: bool) -> Status {
        match (basis.is_conjecture(), holds) {
            (false, true) => Status::Verified,
            (false, false) => Status::Violated,
            (true, true) => Status::ConjectureVerified,
            (true, false) => Status::ConjectureViolated,
        }
    }
}

/// One predicted-vs-measured comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub p: u32,
    pub m: usize,
    pub ell: u32,
    #[serde(rename = "A")]
    pub a: u32,
    pub e: Option<usize>,
    pub quantity: Quantity,
    pub basis: Basis,
    pub predicted: Option<String>,
    pub measured: String,
    pub status: Status,
}

impl ReportRow {
    fn sort_key(&self) -> (u32, usize, u32, u32, Option<usize>, Quantity, Basis) {
        (self.p, self.m, self.ell, self.a, self.e, self.quantity, self.basis)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub rows: Vec<ReportRow>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    schema: u32,
    rows: &'a [ReportRow],
    summary: BTreeMap<&'static str, usize>,
}

impl VerificationReport {
    pub fn any_violated(&self) -> bool {
        self.rows.iter().any(|r| r.status == Status::Violated)
    }

    pub fn count(&self, status: Status) -> usize {
        self.rows.iter().filter(|r| r.status == status).count()
    }

    pub fn summary(&self) -> BTreeMap<&'static str, usize> {
        let mut out = BTreeMap::new();
        for r in &self.rows {
            *out.entry(r.status.as_str()).or_insert(0) += 1;
        }
        out
    }

    /// Canonical order: by parameters, then quantity and basis.
    pub fn sort(&mut self) {
        self.rows.sort_by_key(ReportRow::sort_key);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("p,m,ell,A,e,quantity,basis,predicted,measured,status\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                r.p,
                r.m,
                r.ell,
                r.a,
                r.e.map(|e| e.to_string()).unwrap_or_default(),
                r.quantity.as_str(),
                r.basis.as_str(),
                csv_field(r.predicted.as_deref().unwrap_or("")),
                csv_field(&r.measured),
                r.status.as_str()
            );
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&JsonReport {
            schema: 1,
            rows: &self.rows,
            summary: self.summary(),
        })
        .expect("report serializes")
    }

    /// Fixed-width table for terminals.
    pub fn to_table(&self) -> String {
        let header = [
            "p", "m", "ell", "A", "e", "quantity", "basis", "predicted", "measured", "status",
        ];
        let cells: Vec<[String; 10]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.p.to_string(),
                    r.m.to_string(),
                    r.ell.to_string(),
                    r.a.to_string(),
                    r.e.map(|e| e.to_string()).unwrap_or_else(|| "-".into()),
                    r.quantity.as_str().into(),
                    r.basis.as_str().into(),
                    r.predicted.clone().unwrap_or_else(|| "-".into()),
                    r.measured.clone(),
                    r.status.as_str().into(),
                ]
            })
            .collect();
        let mut widths = header.map(|h| h.chars().count());
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        let mut line = |fields: &[&str]| {
            let parts: Vec<String> = fields
                .iter()
                .zip(&widths)
                .map(|(f, &w)| format!("{f:<w$}"))
                .collect();
            out.push_str(parts.join("  ").trim_end());
            out.push('\n');
        };
        line(&header);
        for row in &cells {
            line(&row.each_ref().map(|s| s.as_str()));
        }
        let summary: Vec<String> = self
            .summary()
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = writeln!(out, "{} rows: {}", self.rows.len(), summary.join(" "));
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Long polynomials are shown by degree and weight only; comparisons are exact.
pub fn poly_summary(poly: &DensePoly) -> String {
    let terms = poly.terms().len();
    if terms <= 12 {
        poly.to_string()
    } else {
        format!("deg {} ({} terms)", poly.degree().unwrap_or(0), terms)
    }
}

/// `value:count` pairs in ascending order.
pub fn distribution_summary(values: &[i64]) -> String {
    let mut d = BTreeMap::new();
    for &v in values {
        *d.entry(v).or_insert(0usize) += 1;
    }
    d.iter()
        .map(|(v, c)| format!("{v}:{c}"))
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Also run Berlekamp–Massey and fail hard if it disagrees with the gcd formula.
    pub bm_cross_check: bool,
    /// Include the autocorrelation comparisons.
    pub correlation: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            bm_cross_check: false,
            correlation: true,
        }
    }
}

struct RowSink<'a> {
    fam: &'a NtuFamily,
    e: Option<usize>,
    rows: Vec<ReportRow>,
}

impl RowSink<'_> {
    fn push(&mut self, quantity: Quantity, basis: Basis, predicted: Option<String>, measured: String, status: Status) {
        let params = self.fam.params();
        self.rows.push(ReportRow {
            p: params.p,
            m: params.m,
            ell: params.ell,
            a: params.a,
            e: self.e,
            quantity,
            basis,
            predicted,
            measured,
            status,
        });
    }

    fn compare<T: PartialEq + ToString>(&mut self, quantity: Quantity, basis: Basis, predicted: &T, measured: &T) {
        let holds = predicted == measured;
        self.push(
            quantity,
            basis,
            Some(predicted.to_string()),
            measured.to_string(),
            Status::from_comparison(basis, holds),
        );
    }

    fn compare_poly(&mut self, quantity: Quantity, basis: Basis, predicted: &DensePoly, measured: &DensePoly) {
        self.push(
            quantity,
            basis,
            Some(poly_summary(predicted)),
            poly_summary(measured),
            Status::from_comparison(basis, predicted == measured),
        );
    }

    fn not_met(&mut self, quantity: Quantity, measured: String) {
        self.push(quantity, Basis::None, None, measured, Status::HypothesisNotMet);
    }
}

/// Non-conjectural predictors of the same quantity must agree.
fn check_agreement(quantity: Quantity, preds: &[(Basis, u64)]) -> Result<()> {
    let firm: Vec<_> = preds.iter().filter(|(b, _)| !b.is_conjecture()).collect();
    if let Some(&&(b0, v0)) = firm.first() {
        if let Some(&&(b1, v1)) = firm.iter().find(|(_, v)| *v != v0) {
            return Err(Error::PredictorDisagreement {
                quantity: quantity.as_str().into(),
                first: format!("{} = {v0}", b0.as_str()),
                second: format!("{} = {v1}", b1.as_str()),
            });
        }
    }
    Ok(())
}

fn measure(seq: &SymbolSequence, opts: &VerifyOptions) -> Result<LcReport> {
    let report = minimal_poly_gcd(seq);
    if opts.bm_cross_check {
        let bm = berlekamp_massey(seq);
        if bm.minimal_poly != report.minimal_poly {
            return Err(Error::PredictorDisagreement {
                quantity: "minimal polynomial".into(),
                first: format!("berlekamp_massey = {}", poly_summary(&bm.minimal_poly)),
                second: format!("gcd = {}", poly_summary(&report.minimal_poly)),
            });
        }
    }
    Ok(report)
}

/// Measurements at the `T`-level, shared by every `e`.
struct LongLevel {
    lc_t: LcReport,
    acf_t: Option<Vec<i64>>,
}

/// Run every applicable comparison for one `(p, m, ℓ, A)` and the given shifts.
pub fn verify_tuple(fam: &NtuFamily, es: &[usize], opts: &VerifyOptions) -> Result<VerificationReport> {
    let params = fam.params();
    let (p, m, ell, a) = (params.p as u64, params.m, params.ell, params.a);
    let binary_nonzero = ell == 2 && a != 0;
    if !es.is_empty() && ell != 2 {
        return param_err("interleaved sequences require ℓ = 2");
    }
    let legendre = legendre_symbol(a as i64, p)?;
    let mut sink = RowSink { fam, e: None, rows: Vec::new() };

    let long = fam.generalized_ntu();
    let short = fam.short_companion();
    let lc_long = measure(&long, opts)?;
    let lc_short = measure(&short, opts)?;
    let (l_long, l_short) = (lc_long.linear_complexity as u64, lc_short.linear_complexity as u64);

    // L(T)
    let mut preds = Vec::new();
    let route = predict::lc_predict(p, m, ell, params.k, l_short);
    preds.push((route.basis, route.value));
    if ell == 2 && a == 0 {
        preds.push((Basis::NtuZero, 2 * fam.nu()));
    }
    let corollary = if binary_nonzero {
        predict::min_poly_predict(p, m, a, legendre)
    } else {
        None
    };
    if let Some(c) = &corollary {
        preds.push((corollary_basis(c.case), c.lc_long));
    }
    check_agreement(Quantity::LcLong, &preds)?;
    for (basis, value) in &preds {
        sink.compare(Quantity::LcLong, *basis, value, &l_long);
    }

    // L(T̄) by Chan–Games whenever the complemented map vanishes at 0
    if let Ok(zero_image) = fam.complement_map(PrimeFieldElement::new(0, params.p)) {
        let lc_bar = measure(&fam.complement()?, opts)?.linear_complexity as u64;
        if zero_image == 0 {
            let lc_short_bar = measure(&fam.short_complement()?, opts)?.linear_complexity as u64;
            let predicted = predict::chan_games_predict(fam.nu(), lc_short_bar);
            sink.compare(Quantity::LcLongComplement, Basis::ChanGames, &predicted, &lc_bar);
        } else {
            sink.not_met(Quantity::LcLongComplement, lc_bar.to_string());
        }
    }

    match &corollary {
        Some(c) => {
            let basis = corollary_basis(c.case);
            sink.compare(Quantity::LcShort, basis, &c.lc_short, &l_short);
            sink.compare_poly(Quantity::MinPolyShort, basis, &c.min_poly_short, &lc_short.minimal_poly);
            sink.compare_poly(Quantity::MinPolyLong, basis, &c.min_poly_long, &lc_long.minimal_poly);
        }
        None => {
            sink.not_met(Quantity::LcShort, l_short.to_string());
            sink.not_met(Quantity::MinPolyLong, poly_summary(&lc_long.minimal_poly));
        }
    }

    let hasse = period_polynomial(long.symbols(), ell).hasse_derivative(1).eval(1);
    match predict::hasse_at_one_predict(p, m, ell, legendre) {
        Some(v) => sink.compare(Quantity::HasseAtOne, Basis::HasseLemma, &v, &hasse),
        None => sink.not_met(Quantity::HasseAtOne, hasse.to_string()),
    }

    let acf_t = if binary_nonzero && opts.correlation {
        let measured = autocorrelation_profile(&long)?.values;
        let predicted = predict::ntu_acf_profile_predict(fam)?;
        sink.push(
            Quantity::AcfLong,
            Basis::NtuAutocorrelation,
            Some(distribution_summary(&predicted)),
            distribution_summary(&measured),
            Status::from_comparison(Basis::NtuAutocorrelation, predicted == measured),
        );
        Some(measured)
    } else {
        None
    };

    let level = LongLevel { lc_t: lc_long, acf_t };
    for &e in es {
        sink.e = Some(e);
        verify_shift(&mut sink, fam, &level, e, legendre, opts)?;
    }
    Ok(VerificationReport { rows: sink.rows })
}

fn corollary_basis(case: u8) -> Basis {
    if case == 1 {
        Basis::LargeLcCase1
    } else {
        Basis::LargeLcCase2
    }
}

fn verify_shift(
    sink: &mut RowSink<'_>,
    fam: &NtuFamily,
    level: &LongLevel,
    e: usize,
    legendre: i8,
    opts: &VerifyOptions,
) -> Result<()> {
    let params = fam.params();
    let (p, m, a) = (params.p as u64, params.m, params.a);
    let s = fam.proposed_sequence(e)?;
    let n = fam.long_period() as u64;
    if a != 0 && m % 2 == 0 {
        // ν is even for even m, so 2e ≡ 1 + jν (mod N) has no solution
        assert!(predict::merged_case_index(fam, e as u64).is_none());
    }

    let counts = balance_count(&s);
    sink.compare(
        Quantity::BalanceInterleaved,
        Basis::Balance,
        &format!("{n}/{n}"),
        &format!("{}/{}", counts[0], counts[1]),
    );

    if let (Some(r_t), true) = (&level.acf_t, opts.correlation) {
        let measured = cross_correlation_profile(&s, &s)?.values;
        let closed = predict::acf_profile_predict_interleaved(fam, e as u64)?;
        let lemma: Vec<i64> = (0..2 * n as i64)
            .map(|tau| predict::acf_via_decomposition(r_t, e as i64, e as i64, tau))
            .collect();
        if closed != lemma && level_matches_closed_form(fam, r_t)? {
            return Err(Error::PredictorDisagreement {
                quantity: Quantity::AcfInterleaved.as_str().into(),
                first: format!("closed form {}", distribution_summary(&closed)),
                second: format!("decomposition {}", distribution_summary(&lemma)),
            });
        }
        for (basis, predicted) in [
            (Basis::InterleavedAutocorrelation, &closed),
            (Basis::InterleavedDecomposition, &lemma),
        ] {
            sink.push(
                Quantity::AcfInterleaved,
                basis,
                Some(distribution_summary(predicted)),
                distribution_summary(&measured),
                Status::from_comparison(basis, *predicted == measured),
            );
        }
    }

    let lc_s = measure(&s, opts)?;
    let measured_lc = lc_s.linear_complexity as u64;
    let theorem = if a != 0 {
        predict::lc_predict_interleaved(p, m, a, legendre, e as u64)
    } else {
        None
    };
    let routed = match theorem {
        Some(t) => Some((t.case, if t.case == 1 { Basis::InterleavedLcCase1 } else { Basis::InterleavedLcCase2 }, t)),
        None if a != 0 => structural_route(fam, &level.lc_t, e as u64),
        None => None,
    };
    match routed {
        Some((case, basis, pred)) => {
            sink.compare(Quantity::LcInterleaved, basis, &pred.lc, &measured_lc);
            sink.compare_poly(Quantity::MinPolyInterleaved, basis, &pred.min_poly, &lc_s.minimal_poly);
            if case == 1 {
                let (lo, hi) = predict::interleaved_lc_bounds(n);
                sink.push(
                    Quantity::LcInterleavedBounds,
                    Basis::InterleavedLcBounds,
                    Some(format!("{lo}..={hi}")),
                    measured_lc.to_string(),
                    Status::from_comparison(Basis::InterleavedLcBounds, (lo..=hi).contains(&measured_lc)),
                );
            }
        }
        None => sink.not_met(Quantity::LcInterleaved, measured_lc.to_string()),
    }
    Ok(())
}

/// The two autocorrelation predictors are only comparable once `R_T` itself
/// has its closed form; otherwise a mismatch is reported as a violation.
fn level_matches_closed_form(fam: &NtuFamily, r_t: &[i64]) -> Result<bool> {
    Ok(predict::ntu_acf_profile_predict(fam)? == r_t)
}

/// Interleaved formulas applied under their operative premise, read off the
/// measured minimal polynomial of `T`.
fn structural_route(
    fam: &NtuFamily,
    lc_t: &LcReport,
    e: u64,
) -> Option<(u8, Basis, predict::InterleavedLcPrediction)> {
    let n = fam.n() as u64;
    if lc_t.linear_complexity as u64 == n {
        return Some((1, Basis::InterleavedLcCase1Measured, predict::interleaved_case1(n, e)));
    }
    let nu = fam.nu();
    if n.is_multiple_of(2 * nu) && lc_t.minimal_poly == predict::case2_long_min_poly(n as usize, nu as usize) {
        return Some((2, Basis::InterleavedLcCase2Measured, predict::interleaved_case2(n, nu, e)));
    }
    None
}

/// Which `A` to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AChoice {
    Literal(u32),
    /// The smallest nonzero `A` in `D_0`.
    Residue,
    /// The smallest nonzero `A` outside `D_0`.
    Nonresidue,
    /// Every `A` in `F_p`, including 0.
    All,
}

impl AChoice {
    pub fn select(self, fam_ctx: &ExtFieldContext, ell: u32) -> Result<Vec<u32>> {
        let p = fam_ctx.p();
        let cyclo = crate::gf::CyclotomicContext::new(p as u64, ell, fam_ctx.g())?;
        let class = |a: u32| cyclo.class_index(PrimeFieldElement::new(a as i64, p)).expect("nonzero");
        Ok(match self {
            AChoice::Literal(a) => vec![a],
            AChoice::Residue => (1..p).filter(|&a| class(a) == 0).take(1).collect(),
            AChoice::Nonresidue => (1..p).filter(|&a| class(a) != 0).take(1).collect(),
            AChoice::All => (0..p).collect(),
        })
    }
}

/// Which shifts `e` to run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EChoice {
    None,
    List(Vec<usize>),
    /// Every `e` in `[0, N)`.
    All,
}

impl EChoice {
    pub fn resolve(&self, period: usize) -> Result<Vec<usize>> {
        match self {
            EChoice::None => Ok(Vec::new()),
            EChoice::All => Ok((0..period).collect()),
            EChoice::List(es) => {
                if let Some(&bad) = es.iter().find(|&&e| e >= period) {
                    return param_err(format!("shift e = {bad} must lie in [0, {period})"));
                }
                Ok(es.clone())
            }
        }
    }
}

/// One sweep cell: a field, `ℓ`, and the `A`/`e` selections.
#[derive(Clone, Debug)]
pub struct SweepCase {
    pub p: u64,
    pub m: usize,
    pub ell: u32,
    pub poly: Option<Vec<u32>>,
    pub a: AChoice,
    pub e: EChoice,
}

/// Verify every `(p, m, ℓ, A, e)` in the cases, in parallel, rows in canonical order.
pub fn sweep(cases: &[SweepCase], opts: &VerifyOptions, max_field: u64) -> Result<VerificationReport> {
    let mut jobs = Vec::new();
    for case in cases {
        let ctx = ExtFieldContext::with_limit(case.p, case.m, case.poly.as_deref(), max_field)?;
        for a in case.a.select(&ctx, case.ell)? {
            jobs.push((ctx.clone(), case.ell, a, case.e.clone()));
        }
    }
    let parts: Vec<Result<VerificationReport>> = jobs
        .into_par_iter()
        .map(|(ctx, ell, a, e)| {
            let fam = NtuFamily::new(ctx, ell, a)?;
            let es = if ell == 2 { e.resolve(fam.long_period())? } else { Vec::new() };
            verify_tuple(&fam, &es, opts)
        })
        .collect();
    let mut report = VerificationReport::default();
    for part in parts {
        report.rows.extend(part?.rows);
    }
    report.sort();
    Ok(report)
}
