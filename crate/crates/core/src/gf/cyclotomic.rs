//! Cyclotomic classes of order `d` in `F_p` and their difference parameters.

use super::prime::{check_odd_prime, is_primitive_root, PrimeFieldElement};
use crate::error::{param_err, Error, Result};

/// Classes `D_j = g^j D_0`, where `D_0` is the set of nonzero `d`-th powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicContext {
    p: u32,
    d: u32,
    g: u32,
    /// Discrete log base `g`; index 0 unused.
    log: Vec<u32>,
}

impl CyclotomicContext {
    pub fn new(p: u64, d: u32, g: PrimeFieldElement) -> Result<Self> {
        check_odd_prime(p)?;
        if d == 0 || !(p - 1).is_multiple_of(d as u64) {
            return param_err(format!("d = {d} must divide p - 1 = {}", p - 1));
        }
        if g.modulus() as u64 != p || !is_primitive_root(g.value() as u64, p) {
            return param_err(format!("{} is not a primitive element of F_{p}", g.value()));
        }
        let p32 = p as u32;
        let mut log = vec![0u32; p32 as usize];
        let mut x = 1u64;
        for k in 0..p32 - 1 {
            log[x as usize] = k;
            x = x * g.value() as u64 % p;
        }
        Ok(CyclotomicContext {
            p: p32,
            d,
            g: g.value(),
            log,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn order(&self) -> u32 {
        self.d
    }

    pub fn generator(&self) -> PrimeFieldElement {
        PrimeFieldElement::new(self.g as i64, self.p)
    }

    /// Discrete logarithm base `g` of a nonzero residue.
    pub fn log(&self, x: u32) -> Result<u32> {
        let x = x % self.p;
        if x == 0 {
            return Err(Error::Domain("0 has no discrete logarithm".into()));
        }
        Ok(self.log[x as usize])
    }

    /// The `j` with `x` in `D_j`.
    pub fn class_index(&self, x: PrimeFieldElement) -> Result<u32> {
        if x.is_zero() {
            return Err(Error::Domain("0 belongs to no cyclotomic class".into()));
        }
        Ok(self.log[x.value() as usize] % self.d)
    }

    /// Members of `D_j`, ascending.
    pub fn class_members(&self, j: u32) -> Vec<u32> {
        (1..self.p)
            .filter(|&x| self.log[x as usize] % self.d == j % self.d)
            .collect()
    }

    /// `#(D_i ∩ (D_j - a))`, counted directly.
    pub fn difference_parameter(&self, i: u32, j: u32, a: PrimeFieldElement) -> Result<usize> {
        if i >= self.d || j >= self.d {
            return param_err(format!("class indices must lie in [0, {})", self.d));
        }
        let p = self.p as u64;
        let a = a.value() as u64;
        Ok((1..self.p)
            .filter(|&x| self.log[x as usize] % self.d == i)
            .filter(|&x| {
                let y = ((x as u64 + a) % p) as u32;
                y != 0 && self.log[y as usize] % self.d == j
            })
            .count())
    }

    /// The cyclotomic number `(i, j)_d`.
    pub fn cyclotomic_number(&self, i: u32, j: u32) -> Result<usize> {
        self.difference_parameter(i, j, PrimeFieldElement::new(1, self.p))
    }
}
