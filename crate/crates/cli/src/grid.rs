//! Parsing of list/range arguments and class selectors.

use anyhow::{bail, Context, Result};
use geomseq_core::gf::is_prime;
use geomseq_core::theorems::{AChoice, EChoice};

/// `"3,5,11-19"`: comma-separated values and inclusive `a-b` ranges.
/// Returns the values in ascending order, deduplicated, with a flag per
/// value recording whether it was listed explicitly.
pub fn parse_list(s: &str) -> Result<Vec<(u64, bool)>> {
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        match item.split_once('-') {
            Some((lo, hi)) => {
                let lo: u64 = lo.trim().parse().with_context(|| format!("bad range start in `{item}`"))?;
                let hi: u64 = hi.trim().parse().with_context(|| format!("bad range end in `{item}`"))?;
                if lo > hi {
                    bail!("empty range `{item}`");
                }
                out.extend((lo..=hi).map(|v| (v, false)));
            }
            None => {
                let v = item.parse().with_context(|| format!("`{item}` is not a non-negative integer"))?;
                out.push((v, true));
            }
        }
    }
    if out.is_empty() {
        bail!("empty list `{s}`");
    }
    out.sort_by_key(|&(v, explicit)| (v, !explicit));
    out.dedup_by_key(|&mut (v, _)| v);
    Ok(out)
}

/// Odd primes from a list; explicit non-primes are an error, range members are skipped.
pub fn parse_primes(s: &str) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for (v, explicit) in parse_list(s)? {
        if v > 2 && is_prime(v) {
            out.push(v);
        } else if explicit {
            bail!("p = {v} must be an odd prime");
        }
    }
    Ok(out)
}

pub fn parse_a(s: &str) -> Result<AChoice> {
    Ok(match s {
        "residue" => AChoice::Residue,
        "nonresidue" => AChoice::Nonresidue,
        "all" => AChoice::All,
        lit => AChoice::Literal(
            lit.parse()
                .with_context(|| format!("--A must be an integer, `residue`, `nonresidue` or `all` (got `{lit}`)"))?,
        ),
    })
}

pub fn parse_e(s: Option<&str>) -> Result<EChoice> {
    Ok(match s {
        None => EChoice::None,
        Some("all") => EChoice::All,
        Some(list) => EChoice::List(
            parse_list(list)?
                .into_iter()
                .map(|(v, _)| v as usize)
                .collect(),
        ),
    })
}

/// Ascending coefficients, constant first.
pub fn parse_poly(s: &str) -> Result<Vec<u32>> {
    s.split(',')
        .map(|c| {
            c.trim()
                .parse()
                .with_context(|| format!("--poly coefficient `{c}` is not a non-negative integer"))
        })
        .collect()
}
