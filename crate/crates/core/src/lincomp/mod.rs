//! Linear complexity and minimal polynomials of periodic sequences.
//!
//! Two independent routes are provided: Berlekamp–Massey over two periods,
//! and the closed form `m_S(x) = (x^N - 1)/gcd(x^N - 1, S(x))`. For binary
//! sequences both run on bit-packed words.

mod bm;
mod gf2poly;
mod poly;

use serde::Serialize;

pub use gf2poly::Gf2Poly;
pub use poly::{binomial_mod, DensePoly};

use crate::bits::BitVec;
use crate::error::{param_err, Result};
use crate::gf::is_prime;
use crate::seqgen::{SeqTag, SymbolSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LcMethod {
    BerlekampMassey,
    Gcd,
}

impl LcMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            LcMethod::BerlekampMassey => "berlekamp_massey",
            LcMethod::Gcd => "gcd",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LcReport {
    pub linear_complexity: usize,
    pub minimal_poly: DensePoly,
    pub method: LcMethod,
    pub period: usize,
    pub tag: Option<SeqTag>,
}

fn check_alphabet(ell: u32) -> Result<()> {
    if !is_prime(ell as u64) {
        return param_err(format!("alphabet size {ell} must be prime"));
    }
    Ok(())
}

fn bits_of(symbols: &[u32], repeats: usize) -> BitVec {
    BitVec::from_bits(
        std::iter::repeat_n(symbols, repeats)
            .flatten()
            .map(|&s| s == 1),
    )
}

/// Berlekamp–Massey fed with exactly two periods.
pub fn berlekamp_massey(seq: &SymbolSequence) -> LcReport {
    let mut r = berlekamp_massey_symbols(seq.symbols(), seq.alphabet())
        .expect("sequence alphabet is prime");
    r.tag = seq.tag().cloned();
    r
}

pub fn berlekamp_massey_symbols(symbols: &[u32], ell: u32) -> Result<LcReport> {
    check_alphabet(ell)?;
    let (l, conn) = if ell == 2 {
        let (l, c) = bm::berlekamp_massey_gf2(&bits_of(symbols, 2));
        (l, DensePoly::from_gf2(&c))
    } else {
        let twice: Vec<u32> = symbols.iter().chain(symbols).copied().collect();
        bm::berlekamp_massey_generic(&twice, ell)
    };
    Ok(LcReport {
        linear_complexity: l,
        minimal_poly: bm::reciprocal(&conn, l),
        method: LcMethod::BerlekampMassey,
        period: symbols.len(),
        tag: None,
    })
}

/// `S(x) = S_0 + S_1 x + ... + S_{N-1} x^{N-1}`.
pub fn period_polynomial(symbols: &[u32], ell: u32) -> DensePoly {
    DensePoly::from_raw(ell, symbols.to_vec())
}

/// `L = N - deg gcd(x^N - 1, S(x))`. The quotient `(x^N - 1)/gcd` is the
/// reciprocal of the recurrence polynomial; it is reversed so that both
/// methods return the polynomial whose recurrence regenerates `S`.
pub fn minimal_poly_gcd(seq: &SymbolSequence) -> LcReport {
    let mut r = minimal_poly_gcd_symbols(seq.symbols(), seq.alphabet())
        .expect("sequence alphabet is prime");
    r.tag = seq.tag().cloned();
    r
}

pub fn minimal_poly_gcd_symbols(symbols: &[u32], ell: u32) -> Result<LcReport> {
    check_alphabet(ell)?;
    let n = symbols.len();
    let minimal_poly = if ell == 2 {
        let modulus = Gf2Poly::x_pow_plus_one(n);
        let s = Gf2Poly::from_bitvec(&bits_of(symbols, 1));
        let g = modulus.gcd(&s);
        DensePoly::from_gf2(&modulus.div_rem(&g).0)
    } else {
        let modulus = DensePoly::x_pow_minus_one(ell, n);
        let g = modulus.gcd(&period_polynomial(symbols, ell));
        modulus.exact_div(&g)?
    };
    // monic divisor of x^N - 1, so the constant term is nonzero and the degree survives
    let minimal_poly = DensePoly::from_raw(ell, minimal_poly.coeffs().iter().rev().copied().collect())
        .make_monic();
    Ok(LcReport {
        linear_complexity: minimal_poly.degree().unwrap_or(0),
        minimal_poly,
        method: LcMethod::Gcd,
        period: n,
        tag: None,
    })
}

/// Linear complexity alone, via the gcd degree.
pub fn linear_complexity(seq: &SymbolSequence) -> usize {
    linear_complexity_symbols(seq.symbols(), seq.alphabet()).expect("sequence alphabet is prime")
}

pub fn linear_complexity_symbols(symbols: &[u32], ell: u32) -> Result<usize> {
    check_alphabet(ell)?;
    let n = symbols.len();
    let gdeg = if ell == 2 {
        let s = Gf2Poly::from_bitvec(&bits_of(symbols, 1));
        Gf2Poly::x_pow_plus_one(n).gcd(&s).degree()
    } else {
        DensePoly::x_pow_minus_one(ell, n)
            .gcd(&period_polynomial(symbols, ell))
            .degree()
    };
    Ok(n - gdeg.unwrap_or(0).min(n))
}

pub fn hasse_derivative(poly: &DensePoly, k: usize) -> DensePoly {
    poly.hasse_derivative(k)
}

/// `None` for the zero polynomial (every order vanishes).
pub fn multiplicity_at_one(poly: &DensePoly) -> Option<usize> {
    poly.multiplicity_at_one()
}

/// Regenerate `len` terms from the first `L` using the recurrence of `m_S`.
pub fn regenerate(minimal_poly: &DensePoly, seed: &[u32], len: usize) -> Vec<u32> {
    let l = minimal_poly.degree().unwrap_or(0);
    let ell = minimal_poly.modulus() as u64;
    let mut out: Vec<u32> = seed[..l.min(seed.len())].to_vec();
    out.resize(l.min(len), 0);
    // S_{n+L} = -(m_0 S_n + ... + m_{L-1} S_{n+L-1})
    while out.len() < len {
        let n = out.len() - l;
        let s = (0..l).fold(0u64, |acc, i| {
            (acc + minimal_poly.coeff(i) as u64 * out[n + i] as u64) % ell
        });
        out.push(((ell - s) % ell) as u32);
    }
    out.truncate(len);
    out
}
