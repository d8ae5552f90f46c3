//! Sequence constructions: the m-sequence, generalized NTU sequences and
//! their short companions, complements, cyclic shifts and interleavings.

mod serial;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{param_err, Error, Result};
use crate::gf::{is_prime, CyclotomicContext, ExtFieldContext, PrimeFieldElement};

pub use serial::{from_binary, from_text, to_binary, to_text};

/// Which construction produced a sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SeqKind {
    /// `T_A`: the NTU map applied to the m-sequence.
    #[serde(rename = "T")]
    Long,
    /// `t_A`: the NTU map applied to powers of `g`.
    #[serde(rename = "t")]
    Short,
    #[serde(rename = "Tbar")]
    LongComplement,
    #[serde(rename = "tbar")]
    ShortComplement,
    /// `S^e`: `T_A` interleaved with the `e`-shifted complement.
    #[serde(rename = "Se")]
    Interleaved,
    #[serde(rename = "custom")]
    Custom,
}

impl SeqKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SeqKind::Long => "T",
            SeqKind::Short => "t",
            SeqKind::LongComplement => "Tbar",
            SeqKind::ShortComplement => "tbar",
            SeqKind::Interleaved => "Se",
            SeqKind::Custom => "custom",
        }
    }
}

impl fmt::Display for SeqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SeqKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "T" => SeqKind::Long,
            "t" => SeqKind::Short,
            "Tbar" => SeqKind::LongComplement,
            "tbar" => SeqKind::ShortComplement,
            "Se" => SeqKind::Interleaved,
            "custom" => SeqKind::Custom,
            other => return Err(Error::Parse(format!("unknown sequence kind `{other}`"))),
        })
    }
}

/// Construction record carried by every generated sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqTag {
    pub p: u32,
    pub m: usize,
    pub ell: u32,
    #[serde(rename = "A")]
    pub a: u32,
    pub e: Option<usize>,
    pub poly: Vec<u32>,
    pub kind: SeqKind,
}

/// One full period of a sequence over `F_alphabet`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolSequence {
    symbols: Vec<u32>,
    alphabet: u32,
    tag: Option<SeqTag>,
}

impl SymbolSequence {
    /// An untagged sequence; `alphabet` must be prime.
    pub fn from_symbols(symbols: Vec<u32>, alphabet: u32) -> Result<Self> {
        if !is_prime(alphabet as u64) {
            return param_err(format!("alphabet size {alphabet} must be prime"));
        }
        if symbols.is_empty() {
            return param_err("a sequence needs at least one symbol per period");
        }
        if let Some(&s) = symbols.iter().find(|&&s| s >= alphabet) {
            return param_err(format!("symbol {s} is outside F_{alphabet}"));
        }
        Ok(SymbolSequence {
            symbols,
            alphabet,
            tag: None,
        })
    }

    pub(crate) fn tagged(symbols: Vec<u32>, alphabet: u32, tag: Option<SeqTag>) -> Self {
        debug_assert!(symbols.iter().all(|&s| s < alphabet));
        SymbolSequence {
            symbols,
            alphabet,
            tag,
        }
    }

    pub fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    pub fn period(&self) -> usize {
        self.symbols.len()
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn tag(&self) -> Option<&SeqTag> {
        self.tag.as_ref()
    }

    pub fn with_tag(mut self, tag: Option<SeqTag>) -> Self {
        self.tag = tag;
        self
    }

    /// Symbol at any index; indices wrap modulo the period.
    #[inline]
    pub fn at(&self, n: usize) -> u32 {
        self.symbols[n % self.symbols.len()]
    }

    pub fn is_binary(&self) -> bool {
        self.alphabet == 2
    }
}

/// `(p, m, ℓ, A)` together with `k`, the class index of `A` (0 when `A = 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NtuParams {
    pub p: u32,
    pub m: usize,
    pub ell: u32,
    #[serde(rename = "A")]
    pub a: u32,
    pub k: u32,
}

/// `R_n = Tr(omega^n)` for one period `n = 0, ..., p^m - 2`.
pub fn m_sequence(ctx: &ExtFieldContext) -> Vec<u32> {
    let n = (ctx.order() - 1) as usize;
    let mut out = Vec::with_capacity(n);
    let mut x = ctx.one();
    for _ in 0..n {
        out.push(ctx.trace_linear(&x).value());
        x = ctx.mul_omega(&x);
    }
    out
}

/// Everything needed to build the sequences for one `(p, m, ℓ, A)`.
#[derive(Clone, Debug)]
pub struct NtuFamily {
    ctx: ExtFieldContext,
    cyclo: CyclotomicContext,
    params: NtuParams,
    m_seq: Vec<u32>,
}

impl NtuFamily {
    pub fn new(ctx: ExtFieldContext, ell: u32, a: u32) -> Result<Self> {
        let p = ctx.p();
        if !is_prime(ell as u64) || !(p - 1).is_multiple_of(ell) {
            return param_err(format!("ℓ = {ell} must be a prime divisor of p - 1 = {}", p - 1));
        }
        if a >= p {
            return param_err(format!("A = {a} must be reduced mod p = {p}"));
        }
        let cyclo = CyclotomicContext::new(p as u64, ell, ctx.g())?;
        let k = if a == 0 {
            0
        } else {
            cyclo.class_index(PrimeFieldElement::new(a as i64, p))?
        };
        let params = NtuParams {
            p,
            m: ctx.m(),
            ell,
            a,
            k,
        };
        let m_seq = m_sequence(&ctx);
        Ok(NtuFamily {
            ctx,
            cyclo,
            params,
            m_seq,
        })
    }

    pub fn params(&self) -> NtuParams {
        self.params
    }

    pub fn field(&self) -> &ExtFieldContext {
        &self.ctx
    }

    pub fn cyclotomic(&self) -> &CyclotomicContext {
        &self.cyclo
    }

    pub fn m_sequence(&self) -> &[u32] {
        &self.m_seq
    }

    /// `p^m - 1`.
    pub fn n(&self) -> usize {
        self.m_seq.len()
    }

    pub fn nu(&self) -> u64 {
        self.ctx.nu()
    }

    /// Period of `T_A`: `p^m - 1`, or `ℓ(p^m - 1)/(p - 1)` when `A = 0`.
    pub fn long_period(&self) -> usize {
        if self.params.a == 0 {
            self.params.ell as usize * self.ctx.nu() as usize
        } else {
            self.n()
        }
    }

    /// Period of `t_A`: `p - 1`, or `ℓ` when `A = 0`.
    pub fn short_period(&self) -> usize {
        if self.params.a == 0 {
            self.params.ell as usize
        } else {
            self.params.p as usize - 1
        }
    }

    /// The NTU map: 0 if `x + A = 0`, otherwise the class index of `x + A`.
    pub fn ntu_map(&self, x: PrimeFieldElement) -> u32 {
        let y = x + PrimeFieldElement::new(self.params.a as i64, self.params.p);
        if y.is_zero() {
            0
        } else {
            self.cyclo.class_index(y).expect("nonzero")
        }
    }

    /// The constant subtracted to form complements. For binary sequences this
    /// is always 1 (bitwise complement); otherwise it is `k`.
    pub fn complement_offset(&self) -> Result<u32> {
        if self.params.ell == 2 {
            Ok(1)
        } else if self.params.a == 0 {
            param_err("the complement is undefined for A = 0 when ℓ > 2")
        } else {
            Ok(self.params.k)
        }
    }

    /// The complemented map `ρ_A(x) - offset`.
    pub fn complement_map(&self, x: PrimeFieldElement) -> Result<u32> {
        let ell = self.params.ell;
        Ok((self.ntu_map(x) + ell - self.complement_offset()?) % ell)
    }

    fn tag(&self, kind: SeqKind, e: Option<usize>) -> Option<SeqTag> {
        Some(SeqTag {
            p: self.params.p,
            m: self.params.m,
            ell: self.params.ell,
            a: self.params.a,
            e,
            poly: self.ctx.modulus().to_vec(),
            kind,
        })
    }

    /// `T_A`.
    pub fn generalized_ntu(&self) -> SymbolSequence {
        let p = self.params.p;
        let symbols = self.m_seq[..self.long_period()]
            .iter()
            .map(|&r| self.ntu_map(PrimeFieldElement::new(r as i64, p)))
            .collect();
        SymbolSequence::tagged(symbols, self.params.ell, self.tag(SeqKind::Long, None))
    }

    /// `t_A`.
    pub fn short_companion(&self) -> SymbolSequence {
        let g = self.ctx.g();
        let mut x = PrimeFieldElement::new(1, self.params.p);
        let mut symbols = Vec::with_capacity(self.short_period());
        for _ in 0..self.short_period() {
            symbols.push(self.ntu_map(x));
            x = x * g;
        }
        SymbolSequence::tagged(symbols, self.params.ell, self.tag(SeqKind::Short, None))
    }

    /// `T̄_A`.
    pub fn complement(&self) -> Result<SymbolSequence> {
        let t = complement_sequence(&self.generalized_ntu(), self.complement_offset()?);
        Ok(t.with_tag(self.tag(SeqKind::LongComplement, None)))
    }

    /// `t̄_A`.
    pub fn short_complement(&self) -> Result<SymbolSequence> {
        let t = complement_sequence(&self.short_companion(), self.complement_offset()?);
        Ok(t.with_tag(self.tag(SeqKind::ShortComplement, None)))
    }

    /// `S^e`: `T_A` interleaved with `L^e(T̄_A)`. Binary only.
    pub fn proposed_sequence(&self, e: usize) -> Result<SymbolSequence> {
        if self.params.ell != 2 {
            return param_err("the interleaved construction requires ℓ = 2");
        }
        let n = self.long_period();
        if e >= n {
            return param_err(format!("shift e = {e} must lie in [0, {n})"));
        }
        let t = self.generalized_ntu();
        let shifted = left_cyclic_shift(&self.complement()?, e);
        let s = interleave(&[t, shifted])?;
        Ok(s.with_tag(self.tag(SeqKind::Interleaved, Some(e))))
    }

    /// Sequence of the given kind; `e` is required for `Se`.
    pub fn build(&self, kind: SeqKind, e: Option<usize>) -> Result<SymbolSequence> {
        match kind {
            SeqKind::Long => Ok(self.generalized_ntu()),
            SeqKind::Short => Ok(self.short_companion()),
            SeqKind::LongComplement => self.complement(),
            SeqKind::ShortComplement => self.short_complement(),
            SeqKind::Interleaved => {
                let e = e.ok_or_else(|| Error::Parameter("S^e needs a shift e".into()))?;
                self.proposed_sequence(e)
            }
            SeqKind::Custom => param_err("`custom` is not a construction"),
        }
    }
}

/// Subtract `k` from every symbol (in `F_ℓ`).
pub fn complement_sequence(seq: &SymbolSequence, k: u32) -> SymbolSequence {
    let ell = seq.alphabet;
    let k = k % ell;
    let symbols = seq.symbols.iter().map(|&s| (s + ell - k) % ell).collect();
    SymbolSequence::tagged(symbols, ell, seq.tag.clone())
}

/// `L^e(S)_n = S_{n+e}`.
pub fn left_cyclic_shift(seq: &SymbolSequence, e: usize) -> SymbolSequence {
    let n = seq.period();
    let e = e % n;
    let mut symbols = Vec::with_capacity(n);
    symbols.extend_from_slice(&seq.symbols[e..]);
    symbols.extend_from_slice(&seq.symbols[..e]);
    SymbolSequence::tagged(symbols, seq.alphabet, seq.tag.clone())
}

/// `U_{jT + i} = S^{(i)}_j` for a family of `T` equal-period sequences.
pub fn interleave(family: &[SymbolSequence]) -> Result<SymbolSequence> {
    let first = family
        .first()
        .ok_or_else(|| Error::Parameter("cannot interleave an empty family".into()))?;
    let n = first.period();
    if family.iter().any(|s| s.period() != n || s.alphabet != first.alphabet) {
        return param_err("interleaved sequences must share period and alphabet");
    }
    let mut symbols = Vec::with_capacity(n * family.len());
    for j in 0..n {
        symbols.extend(family.iter().map(|s| s.symbols[j]));
    }
    let tag = first.tag.clone().map(|t| SeqTag {
        kind: SeqKind::Custom,
        ..t
    });
    Ok(SymbolSequence::tagged(symbols, first.alphabet, tag))
}

/// Inverse of [`interleave`] for a family of `count` sequences.
pub fn deinterleave(seq: &SymbolSequence, count: usize) -> Result<Vec<SymbolSequence>> {
    if count == 0 || !seq.period().is_multiple_of(count) {
        return param_err(format!(
            "period {} is not a multiple of the family size {count}",
            seq.period()
        ));
    }
    Ok((0..count)
        .map(|i| {
            let symbols = seq.symbols.iter().skip(i).step_by(count).copied().collect();
            SymbolSequence::tagged(symbols, seq.alphabet, None)
        })
        .collect())
}

/// Occurrences of each symbol in one period, indexed by symbol.
pub fn balance_count(seq: &SymbolSequence) -> Vec<usize> {
    let mut counts = vec![0usize; seq.alphabet as usize];
    for &s in &seq.symbols {
        counts[s as usize] += 1;
    }
    counts
}

/// Smallest `d` dividing the length such that the symbols repeat with period `d`.
pub fn minimal_period(symbols: &[u32]) -> usize {
    let n = symbols.len();
    (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .find(|&d| (d..n).all(|i| symbols[i] == symbols[i - d]))
        .unwrap_or(n)
}
