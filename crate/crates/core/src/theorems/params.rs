//! Integer helpers used by the closed forms.

use crate::gf::gcd;

/// `(p^m - 1)/(p - 1)`.
pub fn nu(p: u64, m: usize) -> u64 {
    (p.pow(m as u32) - 1) / (p - 1)
}

/// The representative of `a` mod `n` in `{1, ..., n}`.
pub fn mod_underline(a: i64, n: u64) -> u64 {
    assert!(n > 0, "modulus must be positive");
    let r = a.rem_euclid(n as i64) as u64;
    if r == 0 {
        n
    } else {
        r
    }
}

/// Exponent of the largest power of 2 dividing `n > 0`.
pub fn two_adic_valuation(n: u64) -> u32 {
    n.trailing_zeros()
}

pub fn odd_part(n: u64) -> u64 {
    n >> n.trailing_zeros()
}

fn offset_gcd(e: u64, modulus: u64) -> u64 {
    gcd(mod_underline(1 - 2 * e as i64, modulus), modulus)
}

/// `G(N, e) = gcd(-2e + 1 mod_ N/2^{v2(N)}, N/2^{v2(N)})`.
pub fn g_param(n: u64, e: u64) -> u64 {
    offset_gcd(e, odd_part(n))
}

/// `H_0(ν, e) = gcd(-2e + 1 mod_ ν, ν)`.
pub fn h0(nu: u64, e: u64) -> u64 {
    offset_gcd(e, nu)
}

/// `H_1(N, e) = gcd(-2e + 1 mod_ N/2, N/2)`.
pub fn h1(n: u64, e: u64) -> u64 {
    offset_gcd(e, n / 2)
}

/// `N_2 = p^{m-2} - 1`.
pub fn n2(p: u64, m: usize) -> i64 {
    p.pow(m as u32 - 2) as i64 - 1
}
