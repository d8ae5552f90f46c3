//! The extension field `F_{p^m}` in a polynomial basis.

use serde::{Deserialize, Serialize};

use super::prime::{check_odd_prime, is_primitive_root, prime_factors, PrimeFieldElement};
use crate::error::{param_err, Error, Result};

/// Default cap on `p^m`.
pub const DEFAULT_MAX_FIELD: u64 = 1 << 20;

/// An element of `F_{p^m}`: `m` coefficients over `F_p`, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExtFieldElement {
    coeffs: Vec<u32>,
}

impl ExtFieldElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// `Some(c)` when the element lies in the prime subfield.
    pub fn as_prime(&self) -> Option<u32> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }
}

fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let m = modulus.len() - 1;
    let p64 = p as u64;
    let mut prod = vec![0u64; 2 * m - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p64;
        }
    }
    // modulus is monic: x^m = -(c_0 + ... + c_{m-1} x^{m-1})
    for d in (m..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (i, &fi) in modulus[..m].iter().enumerate() {
            let sub = c * fi as u64 % p64;
            prod[d - m + i] = (prod[d - m + i] + p64 - sub) % p64;
        }
    }
    prod.truncate(m);
    prod.into_iter().map(|c| c as u32).collect()
}

fn poly_pow_mod(base: &[u32], mut exp: u64, modulus: &[u32], p: u32) -> Vec<u32> {
    let m = modulus.len() - 1;
    let mut acc = vec![0u32; m];
    acc[0] = 1;
    let mut b = base.to_vec();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = poly_mul_mod(&acc, &b, modulus, p);
        }
        exp >>= 1;
        if exp > 0 {
            b = poly_mul_mod(&b, &b, modulus, p);
        }
    }
    acc
}

fn checked_field_size(p: u64, m: usize, max_field: u64) -> Result<u64> {
    let mut q: u64 = 1;
    for _ in 0..m {
        q = q.checked_mul(p).filter(|&q| q <= max_field).ok_or(Error::Capacity {
            what: "p^m",
            requested: (p as f64).powi(m as i32).min(u64::MAX as f64) as u64,
            limit: max_field,
        })?;
    }
    Ok(q)
}

/// True when the monic polynomial `poly` (ascending, length `m + 1`) has a
/// root of multiplicative order `p^m - 1`, i.e. it is primitive over `F_p`.
pub fn is_primitive_polynomial(p: u32, poly: &[u32]) -> bool {
    let m = poly.len().saturating_sub(1);
    if m < 1 || poly[m] != 1 || poly[0] == 0 || poly.iter().any(|&c| c >= p) {
        return false;
    }
    if m == 1 {
        // root is -c_0
        let root = (p - poly[0]) % p;
        return is_primitive_root(root as u64, p as u64);
    }
    let group = (p as u64).pow(m as u32) - 1;
    let mut x = vec![0u32; m];
    x[1] = 1;
    let mut one = vec![0u32; m];
    one[0] = 1;
    // A reducible modulus has fewer than p^m - 1 units, so x cannot reach
    // this order; the test therefore also certifies irreducibility.
    if poly_pow_mod(&x, group, poly, p) != one {
        return false;
    }
    prime_factors(group)
        .into_iter()
        .all(|q| poly_pow_mod(&x, group / q, poly, p) != one)
}

/// The lexicographically smallest primitive polynomial of degree `m`,
/// comparing coefficient tuples `(c_0, c_1, ..., c_{m-1})` with `c_0` most
/// significant. Returned ascending and monic.
pub fn find_primitive_polynomial(p: u32, m: usize) -> Vec<u32> {
    let mut tail = vec![0u32; m];
    tail[0] = 1;
    loop {
        let mut poly = tail.clone();
        poly.push(1);
        if is_primitive_polynomial(p, &poly) {
            return poly;
        }
        // odometer with c_{m-1} as the fastest digit
        let mut i = m - 1;
        loop {
            tail[i] += 1;
            if tail[i] < p {
                break;
            }
            tail[i] = 0;
            assert!(i > 0, "no primitive polynomial of degree {m} over F_{p}");
            i -= 1;
        }
    }
}

/// `F_{p^m}` as `F_p[x]/(f)` with `f` primitive; `omega` is the class of `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtFieldContext {
    p: u32,
    m: usize,
    modulus: Vec<u32>,
    order: u64,
    nu: u64,
    g: u32,
    trace_basis: Vec<u32>,
}

impl ExtFieldContext {
    /// Context over the lexicographically smallest primitive polynomial.
    pub fn new(p: u64, m: usize) -> Result<Self> {
        Self::with_limit(p, m, None, DEFAULT_MAX_FIELD)
    }

    /// Context over an explicit primitive polynomial (ascending, monic).
    pub fn with_poly(p: u64, m: usize, poly: &[u32]) -> Result<Self> {
        Self::with_limit(p, m, Some(poly), DEFAULT_MAX_FIELD)
    }

    pub fn with_limit(p: u64, m: usize, poly: Option<&[u32]>, max_field: u64) -> Result<Self> {
        check_odd_prime(p)?;
        if m < 2 {
            return param_err(format!("extension degree m = {m} must be > 1"));
        }
        let order = checked_field_size(p, m, max_field)?;
        let p = p as u32;
        let modulus = match poly {
            Some(f) => {
                if f.len() != m + 1 {
                    return param_err(format!(
                        "polynomial has {} coefficients, expected m + 1 = {}",
                        f.len(),
                        m + 1
                    ));
                }
                if f[m] != 1 {
                    return param_err("polynomial must be monic (leading coefficient 1)");
                }
                if let Some(&c) = f.iter().find(|&&c| c >= p) {
                    return param_err(format!("coefficient {c} is not reduced mod {p}"));
                }
                if !is_primitive_polynomial(p, f) {
                    return param_err(format!(
                        "polynomial {} is not primitive over F_{p}",
                        format_poly(f)
                    ));
                }
                f.to_vec()
            }
            None => find_primitive_polynomial(p, m),
        };
        let nu = (order - 1) / (p as u64 - 1);
        let mut ctx = ExtFieldContext {
            p,
            m,
            modulus,
            order,
            nu,
            g: 0,
            trace_basis: Vec::new(),
        };
        let g = ctx
            .pow(&ctx.omega(), nu)
            .as_prime()
            .expect("omega^nu lies in the prime field");
        debug_assert!(is_primitive_root(g as u64, p as u64));
        ctx.g = g;
        ctx.trace_basis = (0..m)
            .map(|i| {
                let mut c = vec![0u32; m];
                c[i] = 1;
                ctx.trace(&ExtFieldElement { coeffs: c }).value()
            })
            .collect();
        Ok(ctx)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// The defining primitive polynomial, ascending and monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// `p^m`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// `(p^m - 1)/(p - 1)`.
    pub fn nu(&self) -> u64 {
        self.nu
    }

    /// `omega^nu`, a primitive element of `F_p`.
    pub fn g(&self) -> PrimeFieldElement {
        PrimeFieldElement::new(self.g as i64, self.p)
    }

    pub fn zero(&self) -> ExtFieldElement {
        ExtFieldElement {
            coeffs: vec![0; self.m],
        }
    }

    pub fn one(&self) -> ExtFieldElement {
        self.from_prime(PrimeFieldElement::new(1, self.p))
    }

    pub fn omega(&self) -> ExtFieldElement {
        let mut c = vec![0; self.m];
        c[1] = 1;
        ExtFieldElement { coeffs: c }
    }

    pub fn from_prime(&self, c: PrimeFieldElement) -> ExtFieldElement {
        let mut coeffs = vec![0; self.m];
        coeffs[0] = c.value();
        ExtFieldElement { coeffs }
    }

    pub fn element(&self, coeffs: &[i64]) -> Result<ExtFieldElement> {
        if coeffs.len() != self.m {
            return param_err(format!("expected {} coefficients", self.m));
        }
        Ok(ExtFieldElement {
            coeffs: coeffs
                .iter()
                .map(|&c| c.rem_euclid(self.p as i64) as u32)
                .collect(),
        })
    }

    pub fn add(&self, a: &ExtFieldElement, b: &ExtFieldElement) -> ExtFieldElement {
        ExtFieldElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| ((x as u64 + y as u64) % self.p as u64) as u32)
                .collect(),
        }
    }

    pub fn scale(&self, c: PrimeFieldElement, a: &ExtFieldElement) -> ExtFieldElement {
        ExtFieldElement {
            coeffs: a
                .coeffs
                .iter()
                .map(|&x| (x as u64 * c.value() as u64 % self.p as u64) as u32)
                .collect(),
        }
    }

    pub fn mul(&self, a: &ExtFieldElement, b: &ExtFieldElement) -> ExtFieldElement {
        ExtFieldElement {
            coeffs: poly_mul_mod(&a.coeffs, &b.coeffs, &self.modulus, self.p),
        }
    }

    pub fn pow(&self, a: &ExtFieldElement, exp: u64) -> ExtFieldElement {
        ExtFieldElement {
            coeffs: poly_pow_mod(&a.coeffs, exp, &self.modulus, self.p),
        }
    }

    /// Multiplication by `omega`: one shift and one reduction.
    pub fn mul_omega(&self, a: &ExtFieldElement) -> ExtFieldElement {
        let m = self.m;
        let p = self.p as u64;
        let top = a.coeffs[m - 1] as u64;
        let mut out = vec![0u32; m];
        for i in 0..m {
            let shifted = if i == 0 { 0 } else { a.coeffs[i - 1] as u64 };
            let sub = top * self.modulus[i] as u64 % p;
            out[i] = ((shifted + p - sub) % p) as u32;
        }
        ExtFieldElement { coeffs: out }
    }

    /// `alpha + alpha^p + ... + alpha^{p^{m-1}}`, evaluated by Frobenius powers.
    pub fn trace(&self, alpha: &ExtFieldElement) -> PrimeFieldElement {
        let mut acc = self.zero();
        let mut conj = alpha.clone();
        for _ in 0..self.m {
            acc = self.add(&acc, &conj);
            conj = self.pow(&conj, self.p as u64);
        }
        let value = acc
            .as_prime()
            .expect("trace lies in the prime field");
        PrimeFieldElement::new(value as i64, self.p)
    }

    /// The trace as a linear functional on coordinates; agrees with [`Self::trace`].
    pub fn trace_linear(&self, alpha: &ExtFieldElement) -> PrimeFieldElement {
        let p = self.p as u64;
        let s = alpha
            .coeffs
            .iter()
            .zip(&self.trace_basis)
            .fold(0u64, |acc, (&c, &t)| (acc + c as u64 * t as u64) % p);
        PrimeFieldElement::new(s as i64, self.p)
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: &ExtFieldElement) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::Domain("0 has no multiplicative order".into()));
        }
        let group = self.order - 1;
        let one = self.one();
        let mut order = group;
        for q in prime_factors(group) {
            while order.is_multiple_of(q) && self.pow(a, order / q) == one {
                order /= q;
            }
        }
        Ok(order)
    }
}

/// Sparse display of an ascending coefficient list, e.g. `x^2 + 2*x + 2`.
pub(crate) fn format_poly(coeffs: &[u32]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, c) => c.to_string(),
            (1, 1) => "x".into(),
            (1, c) => format!("{c}*x"),
            (i, 1) => format!("x^{i}"),
            (i, c) => format!("{c}*x^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
