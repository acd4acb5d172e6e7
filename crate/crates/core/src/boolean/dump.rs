//! Plain-text truth-table dumps: a `n=<n>` header followed by the `2^n` table bits
//! in assignment order, 64 characters per line.

use super::table::SwitchingFunction;
use crate::error::{Error, Result};

const LINE: usize = 64;

pub fn to_dump(f: &SwitchingFunction) -> String {
    let mut out = format!("n={}\n", f.n());
    let mut line = String::with_capacity(LINE);
    for i in 0..f.len() {
        line.push(if f.value(i) { '1' } else { '0' });
        if line.len() == LINE {
            out.push_str(&line);
            out.push('\n');
            line.clear();
        }
    }
    if !line.is_empty() {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

pub fn parse_dump(text: &str) -> Result<SwitchingFunction> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::MalformedDump("empty input".into()))?;
    let n: usize = header
        .trim()
        .strip_prefix("n=")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::MalformedDump(format!("bad header `{header}`")))?;
    let bits: Vec<bool> = lines
        .flat_map(|l| l.trim().chars())
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Error::MalformedDump(format!("unexpected character `{other}`"))),
        })
        .collect::<Result<_>>()?;
    if bits.len() as u64 != 1u64 << n {
        return Err(Error::MalformedDump(format!(
            "expected {} bits, found {}",
            1u64 << n,
            bits.len()
        )));
    }
    SwitchingFunction::from_fn(n, |i| bits[i as usize])
}
