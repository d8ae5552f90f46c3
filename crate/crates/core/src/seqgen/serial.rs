//! Text and packed-binary encodings of [`SymbolSequence`].
//!
//! Text:
//! ```text
//! header: p=3 m=2 ell=2 A=1 e=2 poly=2,2,1 kind=Se period=16
//! body: 0110001111010100
//! ```
//! Untagged sequences write `-` for the construction fields. Alphabets wider
//! than ten symbols use comma-separated decimals in the body.
//!
//! Binary (ℓ = 2 only): `GSB1`, u32 LE header length, the header line,
//! u64 LE period, then the symbols packed LSB-first.

use std::collections::HashMap;

use super::{SeqKind, SeqTag, SymbolSequence};
use crate::bits::BitVec;
use crate::error::{Error, Result};

const MAGIC: &[u8; 4] = b"GSB1";

fn header_line(seq: &SymbolSequence) -> String {
    match seq.tag() {
        Some(t) => format!(
            "header: p={} m={} ell={} A={} e={} poly={} kind={} period={}",
            t.p,
            t.m,
            t.ell,
            t.a,
            t.e.map_or_else(|| "-".to_string(), |e| e.to_string()),
            join(&t.poly),
            t.kind,
            seq.period()
        ),
        None => format!(
            "header: p=- m=- ell={} A=- e=- poly=- kind=custom period={}",
            seq.alphabet(),
            seq.period()
        ),
    }
}

fn join(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

pub fn to_text(seq: &SymbolSequence) -> String {
    let body: String = if seq.alphabet() <= 10 {
        seq.symbols()
            .iter()
            .map(|&s| char::from_digit(s, 10).expect("digit"))
            .collect()
    } else {
        join(seq.symbols())
    };
    format!("{}\nbody: {}\n", header_line(seq), body)
}

fn parse_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse(msg.into()))
}

struct Header {
    alphabet: u32,
    period: usize,
    tag: Option<SeqTag>,
}

fn parse_num<T: std::str::FromStr>(fields: &HashMap<&str, &str>, key: &str) -> Result<T> {
    let raw = fields
        .get(key)
        .ok_or_else(|| Error::Parse(format!("header is missing `{key}`")))?;
    raw.parse()
        .map_err(|_| Error::Parse(format!("bad value `{raw}` for `{key}`")))
}

fn parse_header(line: &str) -> Result<Header> {
    let rest = line
        .trim()
        .strip_prefix("header:")
        .ok_or_else(|| Error::Parse("expected a `header:` line".into()))?;
    let mut fields = HashMap::new();
    for item in rest.split_whitespace() {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("malformed header field `{item}`")))?;
        fields.insert(k, v);
    }
    let alphabet: u32 = parse_num(&fields, "ell")?;
    let period: usize = parse_num(&fields, "period")?;
    let kind: SeqKind = fields
        .get("kind")
        .ok_or_else(|| Error::Parse("header is missing `kind`".into()))?
        .parse()?;
    let tag = if fields.get("p") == Some(&"-") {
        None
    } else {
        let e = match fields.get("e") {
            Some(&"-") | None => None,
            Some(_) => Some(parse_num(&fields, "e")?),
        };
        let poly = fields
            .get("poly")
            .ok_or_else(|| Error::Parse("header is missing `poly`".into()))?
            .split(',')
            .map(|c| c.parse().map_err(|_| Error::Parse(format!("bad coefficient `{c}`"))))
            .collect::<Result<Vec<u32>>>()?;
        Some(SeqTag {
            p: parse_num(&fields, "p")?,
            m: parse_num(&fields, "m")?,
            ell: alphabet,
            a: parse_num(&fields, "A")?,
            e,
            poly,
            kind,
        })
    };
    Ok(Header {
        alphabet,
        period,
        tag,
    })
}

pub fn from_text(text: &str) -> Result<SymbolSequence> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = parse_header(lines.next().ok_or_else(|| Error::Parse("empty input".into()))?)?;
    let body = lines
        .next()
        .and_then(|l| l.trim().strip_prefix("body:"))
        .ok_or_else(|| Error::Parse("expected a `body:` line".into()))?
        .trim();
    let symbols: Vec<u32> = if body.contains(',') || header.alphabet > 10 {
        body.split(',')
            .map(|s| s.trim().parse().map_err(|_| Error::Parse(format!("bad symbol `{s}`"))))
            .collect::<Result<_>>()?
    } else {
        body.chars()
            .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad symbol `{c}`"))))
            .collect::<Result<_>>()?
    };
    if symbols.len() != header.period {
        return parse_err(format!(
            "body has {} symbols but the header says period {}",
            symbols.len(),
            header.period
        ));
    }
    Ok(SymbolSequence::from_symbols(symbols, header.alphabet)?.with_tag(header.tag))
}

pub fn to_binary(seq: &SymbolSequence) -> Result<Vec<u8>> {
    if !seq.is_binary() {
        return Err(Error::Parameter("the packed format holds binary sequences only".into()));
    }
    let header = header_line(seq);
    let bits = BitVec::from_bits(seq.symbols().iter().map(|&s| s == 1));
    let mut out = Vec::with_capacity(16 + header.len() + bits.len() / 8 + 1);
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&(header.len() as u32).to_le_bytes());
    out.extend_from_slice(header.as_bytes());
    out.extend_from_slice(&(seq.period() as u64).to_le_bytes());
    out.extend_from_slice(&bits.to_bytes());
    Ok(out)
}

pub fn from_binary(bytes: &[u8]) -> Result<SymbolSequence> {
    let take = |range: std::ops::Range<usize>| {
        bytes
            .get(range)
            .ok_or_else(|| Error::Parse("truncated binary sequence".into()))
    };
    if take(0..4)? != MAGIC {
        return parse_err("missing GSB1 magic");
    }
    let hlen = u32::from_le_bytes(take(4..8)?.try_into().expect("4 bytes")) as usize;
    let header = std::str::from_utf8(take(8..8 + hlen)?)
        .map_err(|_| Error::Parse("header is not UTF-8".into()))?;
    let header = parse_header(header)?;
    let off = 8 + hlen;
    let period = u64::from_le_bytes(take(off..off + 8)?.try_into().expect("8 bytes")) as usize;
    if period != header.period || header.alphabet != 2 {
        return parse_err("binary header is inconsistent");
    }
    let payload = take(off + 8..off + 8 + period.div_ceil(8))?;
    if bytes.len() != off + 8 + period.div_ceil(8) {
        return parse_err("trailing bytes after packed symbols");
    }
    let bits = BitVec::from_bytes(payload, period);
    let symbols = bits.iter().map(u32::from).collect();
    Ok(SymbolSequence::from_symbols(symbols, 2)?.with_tag(header.tag))
}
