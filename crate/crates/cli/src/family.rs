//! Parsing of the sequence specifiers accepted by `--seq` and `--input`.
//!
//! ```text
//! hom:alpha=1,0                 h_{n+1} h_n
//! hom3:alpha=1                  h_{n+1} h_n h_n   (alpha padded with zeros)
//! hook:alpha=1,0;lambdas=2,1|-  s_{(n+1,2,1)} s_{(n)}
//! border:alpha=1,0;beta=2,1     h_{n+1} h_n s_{(2,1)}
//! ```

use std::collections::BTreeMap;

use stabprod::{Partition, SequenceFamily};

use crate::UsageError;

/// Parses a comma-separated list of non-negative integers; `-` or the empty
/// string is the empty list.
pub fn parse_u32_list(s: &str) -> Result<Vec<u32>, UsageError> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| UsageError(format!("expected a non-negative integer, got {:?} in {s:?}", x.trim())))
        })
        .collect()
}

pub fn parse_partition(s: &str) -> Result<Partition, UsageError> {
    s.parse().map_err(|e: stabprod::Error| UsageError(e.to_string()))
}

pub fn parse_alpha(s: &str) -> Result<Vec<u32>, UsageError> {
    let alpha = parse_u32_list(s)?;
    if alpha.windows(2).any(|w| w[0] < w[1]) {
        return Err(UsageError(format!("alpha must be weakly decreasing, got {s:?}")));
    }
    Ok(alpha)
}

fn pad(mut alpha: Vec<u32>, k: usize, spec: &str) -> Result<Vec<u32>, UsageError> {
    if alpha.len() > k {
        return Err(UsageError(format!(
            "{spec:?}: alpha has {} entries but the family has {k} factors",
            alpha.len()
        )));
    }
    alpha.resize(k, 0);
    Ok(alpha)
}

/// Parses a sequence specifier into a family.
pub fn parse_family(spec: &str) -> Result<SequenceFamily, UsageError> {
    let (head, rest) = spec
        .split_once(':')
        .ok_or_else(|| UsageError(format!("{spec:?}: expected KIND:key=value;…, e.g. hom:alpha=1,0")))?;
    let mut params = BTreeMap::new();
    for item in rest.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| UsageError(format!("{spec:?}: expected key=value, got {item:?}")))?;
        if params.insert(key.trim(), value.trim()).is_some() {
            return Err(UsageError(format!("{spec:?}: key {:?} given twice", key.trim())));
        }
    }
    let head = head.trim();
    let kind = head.trim_end_matches(|c: char| c.is_ascii_digit());
    let factors = match &head[kind.len()..] {
        "" => None,
        digits => Some(
            digits
                .parse::<usize>()
                .ok()
                .filter(|&k| k > 0)
                .ok_or_else(|| UsageError(format!("{spec:?}: invalid factor count {digits:?}")))?,
        ),
    };
    let allowed: &[&str] = match kind {
        "hom" => &["alpha"],
        "hook" => &["alpha", "lambdas"],
        "border" => &["alpha", "beta"],
        other => {
            return Err(UsageError(format!(
                "{spec:?}: unknown family kind {other:?} (expected hom, hook or border)"
            )))
        }
    };
    if let Some(key) = params.keys().find(|k| !allowed.contains(k)) {
        return Err(UsageError(format!("{spec:?}: unknown key {key:?} for {kind}")));
    }
    let alpha = parse_alpha(params.get("alpha").copied().unwrap_or(""))?;

    match kind {
        "hom" => {
            let k = factors.unwrap_or(alpha.len());
            let alpha = pad(alpha, k, spec)?;
            if alpha.is_empty() {
                return Err(UsageError(format!("{spec:?}: the product needs at least one factor")));
            }
            Ok(SequenceFamily::homogeneous(alpha))
        }
        "hook" => {
            let lambdas = params
                .get("lambdas")
                .ok_or_else(|| UsageError(format!("{spec:?}: missing lambdas=λ1|λ2|…")))?
                .split('|')
                .map(parse_partition)
                .collect::<Result<Vec<_>, _>>()?;
            let k = factors.unwrap_or(lambdas.len());
            if k != lambdas.len() {
                return Err(UsageError(format!(
                    "{spec:?}: {k} factors declared but {} partitions given",
                    lambdas.len()
                )));
            }
            let alpha = pad(alpha, k, spec)?;
            SequenceFamily::hooks(alpha, lambdas).map_err(|e| UsageError(format!("{spec:?}: {e}")))
        }
        _ => {
            let k = factors.unwrap_or(alpha.len());
            let alpha = pad(alpha, k, spec)?;
            if alpha.is_empty() {
                return Err(UsageError(format!("{spec:?}: the product needs at least one factor")));
            }
            let beta = parse_partition(params.get("beta").copied().unwrap_or("-"))?;
            Ok(SequenceFamily::bordered(alpha, beta))
        }
    }
}
