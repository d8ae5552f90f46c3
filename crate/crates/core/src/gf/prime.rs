//! Arithmetic in prime fields and the elementary number theory behind it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{param_err, Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Multiplicative order of `x` modulo the prime `p`. `x` must be nonzero mod `p`.
pub fn multiplicative_order(x: u64, p: u64) -> u64 {
    let group = p - 1;
    let mut order = group;
    for q in prime_factors(group) {
        while order.is_multiple_of(q) && mod_pow(x, order / q, p) == 1 {
            order /= q;
        }
    }
    order
}

pub fn is_primitive_root(x: u64, p: u64) -> bool {
    !x.is_multiple_of(p) && multiplicative_order(x, p) == p - 1
}

pub(crate) fn check_odd_prime(p: u64) -> Result<()> {
    if p.is_multiple_of(2) || !is_prime(p) {
        return param_err(format!("p = {p} must be an odd prime"));
    }
    Ok(())
}

/// Legendre symbol `(a/p)` by Euler's criterion.
pub fn legendre_symbol(a: i64, p: u64) -> Result<i8> {
    check_odd_prime(p)?;
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return Ok(0);
    }
    Ok(if mod_pow(r, (p - 1) / 2, p) == 1 { 1 } else { -1 })
}

/// A residue modulo an odd prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeFieldElement {
    value: u32,
    p: u32,
}

impl PrimeFieldElement {
    /// Reduces `value` into `[0, p)`. The modulus is trusted; use
    /// [`PrimeField`] to obtain a validated one.
    pub fn new(value: i64, p: u32) -> Self {
        PrimeFieldElement {
            value: value.rem_euclid(p as i64) as u32,
            p,
        }
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn pow(self, exp: u64) -> Self {
        PrimeFieldElement {
            value: mod_pow(self.value as u64, exp, self.p as u64) as u32,
            p: self.p,
        }
    }

    pub fn inverse(self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::Domain("0 has no inverse".into()));
        }
        Ok(self.pow(self.p as u64 - 2))
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for PrimeFieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        let s = self.value as u64 + rhs.value as u64;
        PrimeFieldElement {
            value: (s % self.p as u64) as u32,
            p: self.p,
        }
    }
}

impl Sub for PrimeFieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for PrimeFieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        PrimeFieldElement {
            value: if self.value == 0 { 0 } else { self.p - self.value },
            p: self.p,
        }
    }
}

impl Mul for PrimeFieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        PrimeFieldElement {
            value: (self.value as u64 * rhs.value as u64 % self.p as u64) as u32,
            p: self.p,
        }
    }
}

/// A validated prime field `F_p`, `p` odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        check_odd_prime(p)?;
        let p = u32::try_from(p).map_err(|_| Error::Capacity {
            what: "p",
            requested: p,
            limit: u32::MAX as u64,
        })?;
        Ok(PrimeField { p })
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    pub fn element(self, value: i64) -> PrimeFieldElement {
        PrimeFieldElement::new(value, self.p)
    }

    /// Smallest primitive root.
    pub fn primitive_root(self) -> PrimeFieldElement {
        let p = self.p as u64;
        let g = (2..p).find(|&g| is_primitive_root(g, p)).unwrap_or(1);
        self.element(g as i64)
    }
}
