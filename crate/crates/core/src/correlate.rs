//! Periodic cross- and autocorrelation of binary sequences, computed exactly.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::BitVec;
use crate::error::{param_err, Result};
use crate::seqgen::{SeqTag, SymbolSequence};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorrelationProfile {
    /// `values[τ]` for `τ = 0, ..., N - 1`.
    pub values: Vec<i64>,
    pub tag: Option<SeqTag>,
}

impl CorrelationProfile {
    pub fn period(&self) -> usize {
        self.values.len()
    }

    /// `(value, count)` pairs, ascending by value.
    pub fn distribution(&self) -> BTreeMap<i64, usize> {
        let mut d = BTreeMap::new();
        for &v in &self.values {
            *d.entry(v).or_insert(0) += 1;
        }
        d
    }
}

fn check_binary(seq: &SymbolSequence) -> Result<()> {
    if !seq.is_binary() {
        return param_err(format!(
            "correlation is defined here for binary sequences only (got ℓ = {})",
            seq.alphabet()
        ));
    }
    Ok(())
}

/// `Σ_i (-1)^(a_i + b_{i+τ})`, with `τ` reduced mod `N`.
pub fn cross_correlation(a: &SymbolSequence, b: &SymbolSequence, tau: i64) -> Result<i64> {
    check_binary(a)?;
    check_binary(b)?;
    if a.period() != b.period() {
        return param_err(format!(
            "periods differ: {} vs {}",
            a.period(),
            b.period()
        ));
    }
    let n = a.period();
    let t = tau.rem_euclid(n as i64) as usize;
    Ok((0..n)
        .map(|i| if a.at(i) == b.at(i + t) { 1 } else { -1 })
        .sum())
}

pub fn autocorrelation(seq: &SymbolSequence, tau: i64) -> Result<i64> {
    cross_correlation(seq, seq, tau)
}

/// Packed evaluator: `b` is stored twice so every rotation is a contiguous window.
struct PackedPair {
    a: BitVec,
    b2: BitVec,
    n: usize,
}

impl PackedPair {
    fn new(a: &SymbolSequence, b: &SymbolSequence) -> Self {
        let n = a.period();
        let bits = |s: &SymbolSequence, reps: usize| {
            BitVec::from_bits((0..n * reps).map(|i| s.at(i) == 1))
        };
        PackedPair {
            a: bits(a, 1),
            b2: bits(b, 2),
            n,
        }
    }

    fn at(&self, tau: usize) -> i64 {
        let words = self.a.words();
        let mut diff = 0usize;
        for (w, &aw) in words.iter().enumerate() {
            let mut x = aw ^ self.b2.word_at(tau + 64 * w);
            let remaining = self.n - 64 * w;
            if remaining < 64 {
                x &= (1u64 << remaining) - 1;
            }
            diff += x.count_ones() as usize;
        }
        self.n as i64 - 2 * diff as i64
    }
}

/// Cross-correlation at every shift, word-parallel and fanned out over shifts.
pub fn cross_correlation_profile(
    a: &SymbolSequence,
    b: &SymbolSequence,
) -> Result<CorrelationProfile> {
    check_binary(a)?;
    check_binary(b)?;
    if a.period() != b.period() {
        return param_err(format!("periods differ: {} vs {}", a.period(), b.period()));
    }
    let packed = PackedPair::new(a, b);
    let values = (0..a.period()).into_par_iter().map(|t| packed.at(t)).collect();
    Ok(CorrelationProfile {
        values,
        tag: a.tag().cloned(),
    })
}

pub fn autocorrelation_profile(seq: &SymbolSequence) -> Result<CorrelationProfile> {
    cross_correlation_profile(seq, seq)
}

/// `tau,value` rows with a header line.
pub fn profile_to_csv(profile: &CorrelationProfile) -> String {
    let mut out = String::with_capacity(16 * profile.values.len() + 10);
    out.push_str("tau,value\n");
    for (t, v) in profile.values.iter().enumerate() {
        out.push_str(&format!("{t},{v}\n"));
    }
    out
}
