//! Dense polynomials over a prime field `F_ℓ`.

use std::fmt;
use std::str::FromStr;

use super::gf2poly::Gf2Poly;
use crate::error::{param_err, Error, Result};
use crate::gf::{is_prime, mod_pow};

/// Ascending coefficients over `F_ℓ`, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DensePoly {
    modulus: u32,
    coeffs: Vec<u32>,
}

fn inv_mod(a: u32, l: u32) -> u32 {
    mod_pow(a as u64, l as u64 - 2, l as u64) as u32
}

impl DensePoly {
    /// Reduces the coefficients mod `ℓ` and strips trailing zeros.
    pub fn new(modulus: u32, coeffs: Vec<u32>) -> Result<Self> {
        if !is_prime(modulus as u64) {
            return param_err(format!("coefficient field size {modulus} must be prime"));
        }
        Ok(Self::from_raw(modulus, coeffs))
    }

    pub(crate) fn from_raw(modulus: u32, mut coeffs: Vec<u32>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= modulus;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        DensePoly { modulus, coeffs }
    }

    pub fn zero(modulus: u32) -> Self {
        DensePoly {
            modulus,
            coeffs: Vec::new(),
        }
    }

    pub fn one(modulus: u32) -> Self {
        Self::monomial(modulus, 0, 1)
    }

    pub fn monomial(modulus: u32, deg: usize, c: u32) -> Self {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = c;
        Self::from_raw(modulus, coeffs)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(modulus: u32, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = 1;
        coeffs[0] = (coeffs[0] + modulus - 1) % modulus;
        Self::from_raw(modulus, coeffs)
    }

    /// `x^n + 1`.
    pub fn x_pow_plus_one(modulus: u32, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[n] = 1;
        coeffs[0] = (coeffs[0] + 1) % modulus;
        Self::from_raw(modulus, coeffs)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<u32> {
        self.coeffs.last().copied()
    }

    fn check_same_field(&self, other: &DensePoly) {
        assert_eq!(self.modulus, other.modulus, "polynomials over different fields");
    }

    pub fn add(&self, other: &DensePoly) -> DensePoly {
        self.check_same_field(other);
        let l = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| (self.coeff(i) + other.coeff(i)) % l).collect();
        Self::from_raw(l, coeffs)
    }

    pub fn neg(&self) -> DensePoly {
        let l = self.modulus;
        Self::from_raw(l, self.coeffs.iter().map(|&c| (l - c) % l).collect())
    }

    pub fn sub(&self, other: &DensePoly) -> DensePoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u32) -> DensePoly {
        let l = self.modulus as u64;
        Self::from_raw(
            self.modulus,
            self.coeffs.iter().map(|&a| (a as u64 * c as u64 % l) as u32).collect(),
        )
    }

    pub fn mul(&self, other: &DensePoly) -> DensePoly {
        self.check_same_field(other);
        if self.modulus == 2 {
            return Self::from_gf2(&self.to_gf2().mul(&other.to_gf2()));
        }
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.modulus);
        }
        let l = self.modulus as u64;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u64 * b as u64) % l;
            }
        }
        Self::from_raw(self.modulus, out.into_iter().map(|c| c as u32).collect())
    }

    pub fn div_rem(&self, divisor: &DensePoly) -> Result<(DensePoly, DensePoly)> {
        self.check_same_field(divisor);
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        if self.modulus == 2 {
            let (q, r) = self.to_gf2().div_rem(&divisor.to_gf2());
            return Ok((Self::from_gf2(&q), Self::from_gf2(&r)));
        }
        let l = self.modulus as u64;
        let lead_inv = inv_mod(divisor.coeffs[dd], self.modulus) as u64;
        let mut rem: Vec<u64> = self.coeffs.iter().map(|&c| c as u64).collect();
        let qlen = rem.len().saturating_sub(dd);
        let mut quot = vec![0u32; qlen];
        for shift in (0..qlen).rev() {
            let c = rem[shift + dd] * lead_inv % l;
            if c == 0 {
                continue;
            }
            quot[shift] = c as u32;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = (rem[shift + i] + l - c * d as u64 % l) % l;
            }
        }
        Ok((
            Self::from_raw(self.modulus, quot),
            Self::from_raw(self.modulus, rem.into_iter().map(|c| c as u32).collect()),
        ))
    }

    /// Quotient of a division known to be exact.
    pub fn exact_div(&self, divisor: &DensePoly) -> Result<DensePoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Domain("division is not exact".into()));
        }
        Ok(q)
    }

    pub fn make_monic(&self) -> DensePoly {
        match self.leading() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(inv_mod(c, self.modulus)),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &DensePoly) -> DensePoly {
        self.check_same_field(other);
        if self.modulus == 2 {
            return Self::from_gf2(&self.to_gf2().gcd(&other.to_gf2()));
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn eval(&self, x: u32) -> u32 {
        let l = self.modulus as u64;
        let x = x as u64 % l;
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| (acc * x + c as u64) % l) as u32
    }

    /// `k`-th Hasse derivative: coefficient `i - k` is `C(i, k) a_i`.
    pub fn hasse_derivative(&self, k: usize) -> DensePoly {
        let l = self.modulus;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(k)
            .map(|(i, &a)| {
                (binomial_mod(i as u64, k as u64, l) as u64 * a as u64 % l as u64) as u32
            })
            .collect();
        Self::from_raw(l, coeffs)
    }

    /// Multiplicity of 1 as a root, via successive Hasse derivatives at 1.
    /// `None` for the zero polynomial.
    pub fn multiplicity_at_one(&self) -> Option<usize> {
        let deg = self.degree()?;
        let l = self.modulus as u64;
        (0..=deg).find(|&v| {
            self.coeffs
                .iter()
                .enumerate()
                .skip(v)
                .fold(0u64, |acc, (i, &a)| {
                    (acc + binomial_mod(i as u64, v as u64, self.modulus) as u64 * a as u64) % l
                })
                != 0
        })
    }

    pub fn to_gf2(&self) -> Gf2Poly {
        debug_assert_eq!(self.modulus, 2);
        Gf2Poly::from_coeffs(&self.coeffs)
    }

    pub fn from_gf2(p: &Gf2Poly) -> DensePoly {
        let n = p.degree().map_or(0, |d| d + 1);
        let coeffs = (0..n).map(|i| u32::from(p.coeff(i))).collect();
        DensePoly { modulus: 2, coeffs }
    }

    /// Exponents with nonzero coefficients, descending, paired with the coefficient.
    pub fn terms(&self) -> Vec<(usize, u32)> {
        if self.modulus == 2 {
            return self.to_gf2().support().into_iter().map(|e| (e, 1)).collect();
        }
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i, c))
            .collect()
    }

    /// Parse a sparse term list such as `x^5 + 2*x + 1`.
    pub fn parse_sparse(modulus: u32, s: &str) -> Result<DensePoly> {
        if !is_prime(modulus as u64) {
            return param_err(format!("coefficient field size {modulus} must be prime"));
        }
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero(modulus));
        }
        let bad = |t: &str| Error::Parse(format!("bad polynomial term `{t}`"));
        let mut coeffs: Vec<u32> = Vec::new();
        for term in s.split('+').map(str::trim) {
            let (c, mono) = match term.split_once('*') {
                Some((c, rest)) => (c.trim().parse::<u32>().map_err(|_| bad(term))?, rest.trim()),
                None if term.starts_with('x') => (1, term),
                None => (term.parse::<u32>().map_err(|_| bad(term))?, ""),
            };
            let e = match mono {
                "" => 0,
                "x" => 1,
                m => m
                    .strip_prefix("x^")
                    .and_then(|e| e.parse::<usize>().ok())
                    .ok_or_else(|| bad(term))?,
            };
            if coeffs.len() <= e {
                coeffs.resize(e + 1, 0);
            }
            coeffs[e] = ((coeffs[e] as u64 + c as u64) % modulus as u64) as u32;
        }
        Ok(Self::from_raw(modulus, coeffs))
    }

    /// Coefficient dump: `gf<ℓ>:<hex>`. For ℓ = 2 the hex is the packed
    /// little-endian bit image; otherwise each coefficient takes a fixed
    /// number of hex digits, ascending degree.
    pub fn to_hex(&self) -> String {
        let body = if self.modulus == 2 {
            let bits = crate::bits::BitVec::from_bits(self.coeffs.iter().map(|&c| c == 1));
            hex::encode(bits.to_bytes())
        } else {
            let w = hex_width(self.modulus);
            self.coeffs.iter().map(|c| format!("{c:0w$x}")).collect()
        };
        format!("gf{}:{}", self.modulus, body)
    }

    pub fn from_hex(s: &str) -> Result<DensePoly> {
        let bad = || Error::Parse(format!("bad coefficient dump `{s}`"));
        let (field, body) = s.trim().split_once(':').ok_or_else(bad)?;
        let modulus: u32 = field.strip_prefix("gf").and_then(|m| m.parse().ok()).ok_or_else(bad)?;
        if !is_prime(modulus as u64) {
            return Err(bad());
        }
        let coeffs = if modulus == 2 {
            let bytes = hex::decode(body).map_err(|_| bad())?;
            let bits = crate::bits::BitVec::from_bytes(&bytes, bytes.len() * 8);
            bits.iter().map(u32::from).collect()
        } else {
            let w = hex_width(modulus);
            if body.len() % w != 0 {
                return Err(bad());
            }
            (0..body.len() / w)
                .map(|i| u32::from_str_radix(&body[i * w..(i + 1) * w], 16).map_err(|_| bad()))
                .collect::<Result<Vec<u32>>>()?
        };
        if coeffs.iter().any(|&c| c >= modulus) {
            return Err(bad());
        }
        Ok(Self::from_raw(modulus, coeffs))
    }
}

fn hex_width(modulus: u32) -> usize {
    let mut w = 1;
    while (modulus - 1) >> (4 * w) != 0 {
        w += 1;
    }
    w
}

impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = terms
            .into_iter()
            .map(|(e, c)| match (e, c) {
                (0, c) => c.to_string(),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}*x"),
                (e, 1) => format!("x^{e}"),
                (e, c) => format!("{c}*x^{e}"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl FromStr for DensePoly {
    type Err = Error;
    /// Accepts the hex dump form only; sparse text needs the field size.
    fn from_str(s: &str) -> Result<Self> {
        Self::from_hex(s)
    }
}

/// `C(n, k) mod ℓ` by Lucas' theorem.
pub fn binomial_mod(mut n: u64, mut k: u64, l: u32) -> u32 {
    let l64 = l as u64;
    let mut acc = 1u64;
    while k > 0 {
        let (ni, ki) = (n % l64, k % l64);
        if ki > ni {
            return 0;
        }
        acc = acc * small_binomial(ni, ki, l) % l64;
        n /= l64;
        k /= l64;
    }
    acc as u32
}

fn small_binomial(n: u64, k: u64, l: u32) -> u64 {
    let l64 = l as u64;
    let k = k.min(n - k);
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..k {
        num = num * ((n - i) % l64) % l64;
        den = den * ((i + 1) % l64) % l64;
    }
    num * inv_mod(den as u32, l) as u64 % l64
}
