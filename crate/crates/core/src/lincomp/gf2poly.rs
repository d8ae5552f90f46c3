//! Bit-packed polynomials over `F_2`. Bit `i` of the word vector is the
//! coefficient of `x^i`.

use crate::bits::BitVec;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    /// No trailing zero words.
    words: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Gf2Poly::default()
    }

    pub fn one() -> Self {
        Gf2Poly { words: vec![1] }
    }

    pub fn monomial(deg: usize) -> Self {
        let mut p = Gf2Poly {
            words: vec![0; deg / 64 + 1],
        };
        p.words[deg / 64] = 1 << (deg % 64);
        p
    }

    /// `x^n + 1`; zero when `n = 0`.
    pub fn x_pow_plus_one(n: usize) -> Self {
        let mut p = Gf2Poly::monomial(n);
        p.flip(0);
        p.normalize();
        p
    }

    pub fn from_words(words: Vec<u64>) -> Self {
        let mut p = Gf2Poly { words };
        p.normalize();
        p
    }

    pub fn from_bitvec(bits: &BitVec) -> Self {
        Gf2Poly::from_words(bits.words().to_vec())
    }

    /// From an ascending list of 0/1 coefficients.
    pub fn from_coeffs(coeffs: &[u32]) -> Self {
        Gf2Poly::from_bitvec(&BitVec::from_bits(coeffs.iter().map(|&c| c & 1 == 1)))
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    fn flip(&mut self, i: usize) {
        if self.words.len() <= i / 64 {
            self.words.resize(i / 64 + 1, 0);
        }
        self.words[i / 64] ^= 1 << (i % 64);
    }

    /// Exponents of the nonzero terms, descending.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate().rev() {
            let mut w = w;
            while w != 0 {
                let b = 63 - w.leading_zeros() as usize;
                out.push(wi * 64 + b);
                w ^= 1 << b;
            }
        }
        out
    }

    pub fn add(&self, other: &Gf2Poly) -> Gf2Poly {
        let mut out = self.clone();
        out.add_shifted(other, 0);
        out.normalize();
        out
    }

    /// `self += other * x^shift`, without normalizing.
    fn add_shifted(&mut self, other: &Gf2Poly, shift: usize) {
        if other.words.is_empty() {
            return;
        }
        xor_shifted_into(&mut self.words, &other.words, shift);
    }

    pub fn mul(&self, other: &Gf2Poly) -> Gf2Poly {
        let (small, big) = if self.words.len() <= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Gf2Poly::zero();
        for e in small.support() {
            out.add_shifted(big, e);
        }
        out.normalize();
        out
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Gf2Poly) -> (Gf2Poly, Gf2Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.words.clone();
        let mut quot = vec![0u64; rem.len()];
        let mut top = top_bit(&rem, rem.len() * 64);
        while let Some(rd) = top {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            quot[shift / 64] |= 1 << (shift % 64);
            xor_shifted_into(&mut rem, &divisor.words, shift);
            top = top_bit(&rem, rd);
        }
        (Gf2Poly::from_words(quot), Gf2Poly::from_words(rem))
    }

    pub fn rem(&self, divisor: &Gf2Poly) -> Gf2Poly {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.words.clone();
        let mut top = top_bit(&rem, rem.len() * 64);
        while let Some(rd) = top {
            if rd < dd {
                break;
            }
            xor_shifted_into(&mut rem, &divisor.words, rd - dd);
            top = top_bit(&rem, rd);
        }
        Gf2Poly::from_words(rem)
    }

    pub fn gcd(&self, other: &Gf2Poly) -> Gf2Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    pub fn eval_at_one(&self) -> bool {
        self.words.iter().map(|w| w.count_ones()).sum::<u32>() % 2 == 1
    }
}

/// Highest set bit strictly below `below`.
fn top_bit(words: &[u64], below: usize) -> Option<usize> {
    if below == 0 {
        return None;
    }
    let last = below - 1;
    let mut wi = (last / 64).min(words.len().checked_sub(1)?);
    let mut mask = if wi == last / 64 && last % 64 != 63 {
        (1u64 << (last % 64 + 1)) - 1
    } else {
        u64::MAX
    };
    loop {
        let w = words[wi] & mask;
        if w != 0 {
            return Some(wi * 64 + 63 - w.leading_zeros() as usize);
        }
        if wi == 0 {
            return None;
        }
        wi -= 1;
        mask = u64::MAX;
    }
}

pub(crate) fn xor_shifted_into(dst: &mut Vec<u64>, src: &[u64], shift: usize) {
    let ws = shift / 64;
    let bs = shift % 64;
    let need = ws + src.len() + usize::from(bs != 0);
    if dst.len() < need {
        dst.resize(need, 0);
    }
    if bs == 0 {
        for (d, &s) in dst[ws..].iter_mut().zip(src) {
            *d ^= s;
        }
    } else {
        for (i, &s) in src.iter().enumerate() {
            dst[ws + i] ^= s << bs;
            dst[ws + i + 1] ^= s >> (64 - bs);
        }
    }
}
