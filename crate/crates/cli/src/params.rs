//! Parameter tuples and grid specifiers from the command line.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use powerlap::arith::is_prime;

/// Grids larger than this are rejected rather than swept.
pub const MAX_GRID_ROWS: usize = 100_000;

pub fn parse_pmn(text: &str) -> Result<(u64, u32, u32), String> {
    match numbers(text)?.as_slice() {
        &[p, m, n] => Ok((p, narrow(m)?, narrow(n)?)),
        _ => Err(format!("expected p,m,n, got {text:?}")),
    }
}

pub fn parse_rs(text: &str) -> Result<(u32, u32), String> {
    match numbers(text)?.as_slice() {
        &[r, s] => Ok((narrow(r)?, narrow(s)?)),
        _ => Err(format!("expected r,s, got {text:?}")),
    }
}

fn numbers(text: &str) -> Result<Vec<u64>, String> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("{:?} is not a non-negative integer", t.trim()))
        })
        .collect()
}

fn narrow(v: u64) -> Result<u32, String> {
    u32::try_from(v).map_err(|_| format!("{v} is too large"))
}

/// Parsed `key<=N`, `key=a..b`, `key=a` and `ordercap=N` items.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    ranges: BTreeMap<String, (u64, u64)>,
    pub ordercap: Option<BigUint>,
}

impl Grid {
    pub fn parse(text: &str, keys: &[&str]) -> Result<Grid, String> {
        let mut ranges = BTreeMap::new();
        let mut ordercap = None;
        for item in text.split(',').map(str::trim).filter(|i| !i.is_empty()) {
            let (key, lo, hi) = if let Some((k, v)) = item.split_once("<=") {
                (k.trim(), None, bound(v)?)
            } else if let Some((k, v)) = item.split_once('=') {
                match v.split_once("..") {
                    Some((a, b)) => (k.trim(), Some(bound(a)?), bound(b)?),
                    None => {
                        let v = bound(v)?;
                        (k.trim(), Some(v), v)
                    }
                }
            } else {
                return Err(format!("malformed grid item {item:?}"));
            };
            if key == "ordercap" {
                if lo.is_some_and(|lo| lo != hi) {
                    return Err("ordercap takes a single value".into());
                }
                ordercap = Some(BigUint::from(hi));
                continue;
            }
            if !keys.contains(&key) {
                return Err(format!("unknown grid key {key:?}, expected one of {}", keys.join(", ")));
            }
            if ranges.insert(key.to_string(), (lo.unwrap_or(0), hi)).is_some() {
                return Err(format!("grid key {key:?} given twice"));
            }
        }
        for key in keys {
            if !ranges.contains_key(*key) {
                return Err(format!("grid is missing a range for {key:?}"));
            }
        }
        Ok(Grid { ranges, ordercap })
    }

    /// Inclusive range for `key`, with the lower end raised to `floor`.
    pub fn range(&self, key: &str, floor: u64) -> std::ops::RangeInclusive<u64> {
        let (lo, hi) = self.ranges[key];
        lo.max(floor)..=hi
    }

    fn admits(&self, order: &BigUint) -> bool {
        self.ordercap.as_ref().is_none_or(|cap| order <= cap)
    }

    /// `(p, m, n)` triples with `p` prime, `m, n >= 1`, in lexicographic order.
    pub fn pmn(&self) -> Result<Vec<(u64, u32, u32)>, String> {
        let mut out = Vec::new();
        for p in self.range("p", 2).filter(|&p| is_prime(p)) {
            for m in self.range("m", 1) {
                for n in self.range("n", 1) {
                    let (m, n) = (narrow(m)?, narrow(n)?);
                    if self.admits(&powerlap::arith::big_pow(p, m as u64 * n as u64)) {
                        out.push((p, m, n));
                        check_size(out.len())?;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `(r, s)` pairs with `s >= 1`, in lexicographic order.
    pub fn rs(&self) -> Result<Vec<(u32, u32)>, String> {
        let mut out = Vec::new();
        for r in self.range("r", 0) {
            for s in self.range("s", 1) {
                let (r, s) = (narrow(r)?, narrow(s)?);
                if self.admits(&(BigUint::from(1u32) << (r as u64 + 2 * s as u64))) {
                    out.push((r, s));
                    check_size(out.len())?;
                }
            }
        }
        Ok(out)
    }
}

fn bound(v: &str) -> Result<u64, String> {
    v.trim()
        .parse()
        .map_err(|_| format!("{:?} is not a non-negative integer", v.trim()))
}

fn check_size(rows: usize) -> Result<(), String> {
    if rows > MAX_GRID_ROWS {
        return Err(format!("grid has more than {MAX_GRID_ROWS} rows"));
    }
    Ok(())
}
