//! Closed-form predictions. Each predictor checks its own hypotheses and
//! returns `None` when they do not hold.

use serde::Serialize;

use super::params::{g_param, h0, h1, n2, nu, odd_part};
use crate::error::{param_err, Result};
use crate::gf::{is_prime, multiplicative_order, PrimeFieldElement};
use crate::lincomp::DensePoly;
use crate::seqgen::NtuFamily;

/// The hypothesis set behind a prediction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    /// `ρ(0) = 0`: `L(T) = ν L(t)`.
    ChanGames,
    /// `A = 0`: `L(T_0) = 2ν`.
    NtuZero,
    /// Class-0 `A` gives a cyclic shift of `T_1`.
    ShiftEquivalence,
    /// `A ∉ D_0` with `ℓ = 2, p ≡ 1 (4)` or `ℓ ≥ 3`.
    NonresidueProposition,
    /// `ℓ = 2, (A/p) = -1, p ≡ 3 (8), m odd`.
    NonresidueTheorem3Mod8,
    /// `ℓ = 2, (A/p) = -1, p ≡ 7 (8), m odd`.
    NonresidueTheorem7Mod8,
    /// `ℓ = 2, (A/p) = -1, p ≡ 3 (4), m even`; conjectural.
    EvenDegreeConjecture,
    /// First Hasse derivative of `T(x)` at 1.
    HasseLemma,
    LargeLcCase1,
    LargeLcCase2,
    /// Autocorrelation distribution of `T_A`.
    NtuAutocorrelation,
    /// Autocorrelation of `S^e` by the three-case closed form.
    InterleavedAutocorrelation,
    /// Autocorrelation of `S^e` from `R_T` via the decomposition identity.
    InterleavedDecomposition,
    InterleavedLcCase1,
    InterleavedLcCase2,
    /// Case-1 formula under its operative premise `L(T) = N`, measured.
    InterleavedLcCase1Measured,
    /// Case-2 formula under its operative premise that `m_T` has the
    /// large-LC case-2 shape, measured.
    InterleavedLcCase2Measured,
    InterleavedLcBounds,
    Balance,
    /// Berlekamp–Massey and the gcd formula must agree.
    MethodAgreement,
    /// No hypothesis set applies.
    None,
}

impl Basis {
    pub fn is_conjecture(self) -> bool {
        matches!(self, Basis::EvenDegreeConjecture)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Basis::ChanGames => "chan_games",
            Basis::NtuZero => "ntu_zero",
            Basis::ShiftEquivalence => "shift_equivalence",
            Basis::NonresidueProposition => "nonresidue_proposition",
            Basis::NonresidueTheorem3Mod8 => "nonresidue_theorem_p3mod8",
            Basis::NonresidueTheorem7Mod8 => "nonresidue_theorem_p7mod8",
            Basis::EvenDegreeConjecture => "even_m_conjecture",
            Basis::HasseLemma => "hasse_lemma",
            Basis::LargeLcCase1 => "large_lc_case1",
            Basis::LargeLcCase2 => "large_lc_case2",
            Basis::NtuAutocorrelation => "ntu_autocorrelation",
            Basis::InterleavedAutocorrelation => "interleaved_autocorrelation",
            Basis::InterleavedDecomposition => "interleaved_decomposition",
            Basis::InterleavedLcCase1 => "interleaved_lc_case1",
            Basis::InterleavedLcCase2 => "interleaved_lc_case2",
            Basis::InterleavedLcCase1Measured => "interleaved_lc_case1_measured_premise",
            Basis::InterleavedLcCase2Measured => "interleaved_lc_case2_measured_premise",
            Basis::InterleavedLcBounds => "interleaved_lc_bounds",
            Basis::Balance => "balance",
            Basis::MethodAgreement => "method_agreement",
            Basis::None => "none",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LcPrediction {
    pub value: u64,
    pub basis: Basis,
}

/// `ν L(t)`.
pub fn chan_games_predict(nu: u64, lc_short: u64) -> u64 {
    nu * lc_short
}

/// Route for `L(T_A)` given `L(t_A)`; total over all inputs with `A ≠ 0`.
/// `k` is the class index of `A`.
pub fn lc_predict(p: u64, m: usize, ell: u32, k: u32, lc_short: u64) -> LcPrediction {
    let nu = nu(p, m);
    let (value, basis) = if k == 0 {
        (nu * lc_short, Basis::ChanGames)
    } else if ell >= 3 || p % 4 == 1 {
        (nu * lc_short, Basis::NonresidueProposition)
    } else {
        match (m % 2 == 1, p % 8 == 3) {
            (true, true) => (nu * (lc_short + 1) - 1, Basis::NonresidueTheorem3Mod8),
            (true, false) => (nu * (lc_short - 1) + 1, Basis::NonresidueTheorem7Mod8),
            (false, true) => (nu * (lc_short + 1), Basis::EvenDegreeConjecture),
            (false, false) => (nu * (lc_short - 1) + 1, Basis::EvenDegreeConjecture),
        }
    };
    LcPrediction { value, basis }
}

/// `L(T_A)` for `A ∉ D_0`; `None` when `A ∈ D_0`.
pub fn lc_predict_nonresidue(
    p: u64,
    m: usize,
    ell: u32,
    k: u32,
    lc_short: u64,
) -> Option<LcPrediction> {
    (k != 0).then(|| lc_predict(p, m, ell, k, lc_short))
}

/// `p = 2^s r + 1` with `r` an odd prime, 2 primitive mod `r`, `r ≥ √p + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LargeLcDecomposition {
    pub s: u32,
    pub r: u64,
}

pub fn large_lc_conditions(p: u64) -> Option<LargeLcDecomposition> {
    if p < 3 {
        return None;
    }
    let s = (p - 1).trailing_zeros();
    let r = odd_part(p - 1);
    let ok = r > 2
        && is_prime(r)
        && multiplicative_order(2, r) == r - 1
        // r ≥ √p + 1  ⇔  (r - 1)^2 ≥ p
        && (r - 1) * (r - 1) >= p;
    ok.then_some(LargeLcDecomposition { s, r })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryPrediction {
    pub case: u8,
    pub min_poly_short: DensePoly,
    pub min_poly_long: DensePoly,
    pub lc_short: u64,
    pub lc_long: u64,
}

/// Which large-LC case applies to `A` (binary sequences only).
pub fn large_lc_case(
    a: u32,
    legendre: i8,
    m: usize,
    p: u64,
    dec: &LargeLcDecomposition,
) -> Option<u8> {
    if (a == 1 && dec.s == 1) || (legendre == -1 && dec.s >= 2) {
        Some(1)
    } else if legendre == -1 && m % 2 == 1 && p % 8 == 7 {
        Some(2)
    } else {
        None
    }
}

fn x_plus_one_pow(n: usize) -> DensePoly {
    DensePoly::x_pow_plus_one(2, n)
}

/// `(x + 1)(x^N + 1)/(x^{2ν} + 1)`.
pub fn case2_long_min_poly(n: usize, nu: usize) -> DensePoly {
    x_plus_one_pow(1)
        .mul(&x_plus_one_pow(n))
        .exact_div(&x_plus_one_pow(2 * nu))
        .expect("x^{2ν} + 1 divides x^N + 1")
}

/// Explicit minimal polynomials of `t_A` and `T_A` under the large-LC
/// conditions; `None` when they do not hold.
pub fn min_poly_predict(p: u64, m: usize, a: u32, legendre: i8) -> Option<CorollaryPrediction> {
    let dec = large_lc_conditions(p)?;
    let case = large_lc_case(a, legendre, m, p, &dec)?;
    let n = (p.pow(m as u32) - 1) as usize;
    let short = (p - 1) as usize;
    Some(match case {
        1 => CorollaryPrediction {
            case,
            min_poly_short: x_plus_one_pow(short),
            min_poly_long: x_plus_one_pow(n),
            lc_short: p - 1,
            lc_long: n as u64,
        },
        _ => CorollaryPrediction {
            case,
            min_poly_short: x_plus_one_pow(short)
                .exact_div(&x_plus_one_pow(1))
                .expect("x + 1 divides x^{p-1} + 1"),
            min_poly_long: case2_long_min_poly(n, nu(p, m) as usize),
            lc_short: p - 2,
            lc_long: (p.pow(m as u32 + 1) - 3 * p.pow(m as u32) + 2) / (p - 1),
        },
    })
}

/// `T^{(1)}(1)` for `ℓ = 2, (A/p) = -1, p ≡ 3 (4), m odd`.
pub fn hasse_at_one_predict(p: u64, m: usize, ell: u32, legendre: i8) -> Option<u32> {
    (ell == 2 && legendre == -1 && p % 4 == 3 && m % 2 == 1).then_some(u32::from(p % 8 == 7))
}

fn require_binary_nonzero(fam: &NtuFamily) -> Result<()> {
    let params = fam.params();
    if params.ell != 2 || params.a == 0 {
        return param_err("autocorrelation closed forms need ℓ = 2 and A ≠ 0");
    }
    Ok(())
}

/// `N_1^{(j)} = p^{m-1}{(-1)^{ρ(-g^j A)} + (-1)^{ρ(-g^{-j} A)} + (-1)^{j+1}} - 1`.
pub fn n1(fam: &NtuFamily, j: u64) -> i64 {
    let params = fam.params();
    let p = params.p;
    let g = fam.field().g();
    let a = PrimeFieldElement::new(params.a as i64, p);
    let sign = |bit: u32| if bit.is_multiple_of(2) { 1i64 } else { -1 };
    let gj = g.pow(j);
    let g_inv_j = g.pow((p as u64 - 1) - j % (p as u64 - 1));
    let first = sign(fam.ntu_map(-(gj * a)));
    let second = sign(fam.ntu_map(-(g_inv_j * a)));
    let third = if (j + 1).is_multiple_of(2) { 1 } else { -1 };
    (p as i64).pow(params.m as u32 - 1) * (first + second + third) - 1
}

/// `N`, `ν`, `N_2` and the table of `N_1^{(j)}` for one family.
struct AcfConstants {
    n: i64,
    nu: i64,
    p: i64,
    n2: i64,
    /// `n1[j]` for `j = 1, ..., p - 2`; index 0 unused.
    n1: Vec<i64>,
}

impl AcfConstants {
    fn new(fam: &NtuFamily) -> Result<Self> {
        require_binary_nonzero(fam)?;
        let p = fam.params().p as i64;
        let mut table = vec![0; (p - 1) as usize];
        for (j, slot) in table.iter_mut().enumerate().skip(1) {
            *slot = n1(fam, j as u64);
        }
        Ok(AcfConstants {
            n: fam.n() as i64,
            nu: fam.nu() as i64,
            p,
            n2: n2(p as u64, fam.params().m),
            n1: table,
        })
    }

    /// `j ∈ [1, p-2]` with `x ≡ jν (mod N)`.
    fn index_of(&self, x: i64) -> Option<i64> {
        let x = x.rem_euclid(self.n);
        (x % self.nu == 0 && (1..=self.p - 2).contains(&(x / self.nu))).then(|| x / self.nu)
    }

    fn long(&self, tau: i64) -> i64 {
        let t = tau.rem_euclid(self.n);
        if t == 0 {
            self.n
        } else {
            self.index_of(t).map_or(self.n2, |j| self.n1[j as usize])
        }
    }

    fn interleaved(&self, e: i64, j0: Option<i64>, tau: i64) -> i64 {
        let (n, n2) = (self.n, self.n2);
        let tau = tau.rem_euclid(2 * n);
        let t0 = tau / 2;
        if tau % 2 == 0 {
            return 2 * self.long(t0);
        }
        let at_peak = (t0 + e).rem_euclid(n) == 0 || (t0 - e + 1).rem_euclid(n) == 0;
        // τ0 ≡ -e + jν  or  τ0 ≡ e - 1 - jν
        let hits = [self.index_of(t0 + e), self.index_of(e - 1 - t0)];
        match j0 {
            None => {
                if at_peak {
                    -n - n2
                } else if let Some(j) = hits.iter().flatten().min() {
                    -self.n1[*j as usize] - n2
                } else {
                    -2 * n2
                }
            }
            Some(j0) => {
                if at_peak {
                    -n - self.n1[j0 as usize]
                } else if let Some(j) = hits.iter().flatten().filter(|&&j| j != j0).min() {
                    let other = (j0 - j).rem_euclid(self.p - 1);
                    -self.n1[*j as usize] - self.n1[other as usize]
                } else {
                    -2 * n2
                }
            }
        }
    }
}

/// `R_{T_A}(τ)` from the three-case distribution.
pub fn ntu_acf_predict(fam: &NtuFamily, tau: i64) -> Result<i64> {
    Ok(AcfConstants::new(fam)?.long(tau))
}

pub fn ntu_acf_profile_predict(fam: &NtuFamily) -> Result<Vec<i64>> {
    let c = AcfConstants::new(fam)?;
    Ok((0..c.n).map(|t| c.long(t)).collect())
}

/// `j_0 ∈ [1, p-2]` with `2e ≡ 1 + j_0 ν (mod N)`, if any.
pub fn merged_case_index(fam: &NtuFamily, e: u64) -> Option<u64> {
    let n = fam.n() as u64;
    let nu = fam.nu();
    let p = fam.params().p as u64;
    (1..=p - 2).find(|&j| (2 * e) % n == (1 + j * nu) % n)
}

fn check_shift(fam: &NtuFamily, e: u64) -> Result<()> {
    if e as usize >= fam.n() {
        return param_err(format!("shift e = {e} must lie in [0, {})", fam.n()));
    }
    Ok(())
}

/// `R_{S^e}(τ)` by the even/odd closed forms.
pub fn acf_predict_interleaved(fam: &NtuFamily, e: u64, tau: i64) -> Result<i64> {
    let c = AcfConstants::new(fam)?;
    check_shift(fam, e)?;
    let j0 = merged_case_index(fam, e).map(|j| j as i64);
    Ok(c.interleaved(e as i64, j0, tau))
}

pub fn acf_profile_predict_interleaved(fam: &NtuFamily, e: u64) -> Result<Vec<i64>> {
    let c = AcfConstants::new(fam)?;
    check_shift(fam, e)?;
    let j0 = merged_case_index(fam, e).map(|j| j as i64);
    Ok((0..2 * c.n).map(|t| c.interleaved(e as i64, j0, t)).collect())
}

/// `R_{S^{e1}, S^{e2}}(τ)` from the autocorrelation of `T`:
/// even `τ = 2τ0`: `R_T(τ0) + R_T(e2 - e1 + τ0)`;
/// odd `τ = 2τ0 + 1`: `-R_T(e2 + τ0) - R_T(e1 - τ0 - 1)`.
pub fn acf_via_decomposition(r_t: &[i64], e1: i64, e2: i64, tau: i64) -> i64 {
    let n = r_t.len() as i64;
    let r = |x: i64| r_t[x.rem_euclid(n) as usize];
    let tau = tau.rem_euclid(2 * n);
    let t0 = tau / 2;
    if tau % 2 == 0 {
        r(t0) + r(e2 - e1 + t0)
    } else {
        -r(e2 + t0) - r(e1 - t0 - 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterleavedLcPrediction {
    pub case: u8,
    pub lc: u64,
    pub min_poly: DensePoly,
}

/// Case 1: `m = (x^{2N} + 1)/(x^G + 1)`, `L = 2N - G`.
pub fn interleaved_case1(n: u64, e: u64) -> InterleavedLcPrediction {
    let g = g_param(n, e);
    InterleavedLcPrediction {
        case: 1,
        lc: 2 * n - g,
        min_poly: x_plus_one_pow(2 * n as usize)
            .exact_div(&x_plus_one_pow(g as usize))
            .expect("G divides 2N"),
    }
}

/// Case 2: `m = (x^{2N}+1)(x^2+1)(x^{H0}+1)/((x^{4ν}+1)(x^{H1}+1))`,
/// `L = 2N + 2 - 4ν + H0 - H1`.
pub fn interleaved_case2(n: u64, nu: u64, e: u64) -> InterleavedLcPrediction {
    let (h0, h1) = (h0(nu, e), h1(n, e));
    let num = x_plus_one_pow(2 * n as usize)
        .mul(&x_plus_one_pow(2))
        .mul(&x_plus_one_pow(h0 as usize));
    let den = x_plus_one_pow(4 * nu as usize).mul(&x_plus_one_pow(h1 as usize));
    InterleavedLcPrediction {
        case: 2,
        lc: 2 * n + 2 + h0 - 4 * nu - h1,
        min_poly: num.exact_div(&den).expect("denominator divides numerator"),
    }
}

/// Theorem route for `L(S^e)`: `None` unless the large-LC conditions hold.
pub fn lc_predict_interleaved(
    p: u64,
    m: usize,
    a: u32,
    legendre: i8,
    e: u64,
) -> Option<InterleavedLcPrediction> {
    let dec = large_lc_conditions(p)?;
    let n = p.pow(m as u32) - 1;
    match large_lc_case(a, legendre, m, p, &dec)? {
        1 => Some(interleaved_case1(n, e)),
        _ => Some(interleaved_case2(n, nu(p, m), e)),
    }
}

/// `[2N - N/2^{v2(N)}, 2N - 1]` for case 1.
pub fn interleaved_lc_bounds(n: u64) -> (u64, u64) {
    (2 * n - odd_part(n), 2 * n - 1)
}
