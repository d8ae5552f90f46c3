//! Berlekamp–Massey over `F_ℓ`, with a word-parallel variant for `F_2`.
//!
//! Both return `(L, C)` where `C(x) = 1 + c_1 x + ... + c_L x^L` is the
//! connection polynomial: `s_n + c_1 s_{n-1} + ... + c_L s_{n-L} = 0`.

use super::gf2poly::{xor_shifted_into, Gf2Poly};
use super::poly::DensePoly;
use crate::bits::BitVec;
use crate::gf::mod_pow;

pub fn berlekamp_massey_gf2(seq: &BitVec) -> (usize, Gf2Poly) {
    let n = seq.len();
    // reversed copy: s_{i-j} = rev[n - 1 - i + j], so the discrepancy at step i
    // is a word-aligned dot product of C against rev starting at n - 1 - i.
    let rev = BitVec::from_bits((0..n).rev().map(|i| seq.get(i)));
    let mut c: Vec<u64> = vec![1];
    let mut b: Vec<u64> = vec![1];
    let mut l = 0usize;
    let mut shift = 1usize;
    for i in 0..n {
        let base = n - 1 - i;
        let words = (l / 64) + 1;
        let mut acc = 0u32;
        for (w, &cw) in c.iter().take(words).enumerate() {
            acc ^= (cw & rev.word_at(base + 64 * w)).count_ones();
        }
        if acc & 1 == 0 {
            shift += 1;
        } else if 2 * l <= i {
            let prev = c.clone();
            xor_shifted_into(&mut c, &b, shift);
            l = i + 1 - l;
            b = prev;
            shift = 1;
        } else {
            xor_shifted_into(&mut c, &b, shift);
            shift += 1;
        }
    }
    (l, Gf2Poly::from_words(c))
}

pub fn berlekamp_massey_generic(seq: &[u32], ell: u32) -> (usize, DensePoly) {
    let l64 = ell as u64;
    let inv = |a: u64| mod_pow(a, l64 - 2, l64);
    let mut c: Vec<u64> = vec![1];
    let mut b: Vec<u64> = vec![1];
    let mut l = 0usize;
    let mut shift = 1usize;
    let mut b_disc = 1u64;
    for i in 0..seq.len() {
        let mut d = seq[i] as u64 % l64;
        for j in 1..=l.min(c.len() - 1) {
            d = (d + c[j] * seq[i - j] as u64) % l64;
        }
        if d == 0 {
            shift += 1;
            continue;
        }
        let coef = d * inv(b_disc) % l64;
        let prev = (2 * l <= i).then(|| c.clone());
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, 0);
        }
        for (j, &bj) in b.iter().enumerate() {
            c[j + shift] = (c[j + shift] + l64 - coef * bj % l64) % l64;
        }
        match prev {
            Some(prev) => {
                l = i + 1 - l;
                b = prev;
                b_disc = d;
                shift = 1;
            }
            None => shift += 1,
        }
    }
    (
        l,
        DensePoly::from_raw(ell, c.into_iter().map(|x| x as u32).collect()),
    )
}

/// `x^L C(1/x)`, the monic minimal polynomial.
pub fn reciprocal(conn: &DensePoly, l: usize) -> DensePoly {
    let mut coeffs = vec![0u32; l + 1];
    for (i, &c) in conn.coeffs().iter().enumerate().take(l + 1) {
        coeffs[l - i] = c;
    }
    DensePoly::from_raw(conn.modulus(), coeffs)
}
