//! Turning command-line strings into core values.

use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use serde_json::Value;
use tnnflag_core::rational::{parse_q, RationalMatrix};
use tnnflag_core::slgroup::SlModel;
use tnnflag_core::weyl::{self, WeylElement};
use tnnflag_core::{CartanData, NodeSet, WeylGroup};

/// A builtin name, or a JSON file holding either `{"nodes", "matrix"}` or
/// a bare matrix.
pub fn cartan(source: &str) -> Result<CartanData> {
    if let Some(c) = CartanData::builtin(source) {
        return Ok(c);
    }
    let path = Path::new(source);
    if !path.exists() {
        bail!("unknown Cartan matrix {source:?}: not a builtin name or a file");
    }
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {source}"))?;
    let value: Value = serde_json::from_str(&text).with_context(|| format!("parsing {source}"))?;
    let data = if value.is_array() {
        CartanData::from_matrix(serde_json::from_value(value)?)
    } else {
        serde_json::from_value(value).with_context(|| format!("{source}: expected nodes and matrix"))?
    };
    Ok(data)
}

pub fn group(c: &CartanData) -> Result<Arc<WeylGroup>> {
    Ok(WeylGroup::new(c.clone())?)
}

/// Comma- or space-separated node labels; empty means `∅`.
pub fn node_set(c: &CartanData, text: &str) -> Result<NodeSet> {
    let labels: Vec<&str> = text.split([',', ' ']).map(str::trim).filter(|s| !s.is_empty()).collect();
    Ok(c.node_set(&labels)?)
}

pub fn element(g: &Arc<WeylGroup>, text: &str) -> Result<WeylElement> {
    weyl::parse_element(g, text).with_context(|| format!("bad word {text:?}"))
}

/// `SL(n)` for `n ≥ 2`.
pub fn model(n: usize) -> Result<SlModel> {
    if n < 2 {
        bail!("--n must be at least 2");
    }
    Ok(SlModel::new(n - 1))
}

/// JSON rows of rationals (strings like `"-3/2"` or integers), inline or
/// from a file.
pub fn matrix(text: &str, size: usize) -> Result<RationalMatrix> {
    let text = if text.trim_start().starts_with('[') {
        text.to_string()
    } else {
        std::fs::read_to_string(text).with_context(|| format!("reading matrix file {text}"))?
    };
    let rows: Vec<Vec<Value>> = serde_json::from_str(&text).context("matrix must be a JSON array of rows")?;
    let rows = rows
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| match x {
                    Value::String(s) => Ok(parse_q(&s)?),
                    Value::Number(n) => Ok(parse_q(&n.to_string())?),
                    other => bail!("matrix entry {other} is not a rational"),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let m = RationalMatrix::from_rows(rows)?;
    if m.n() != size {
        bail!("matrix is {0}×{0}, expected {size}×{size}", m.n());
    }
    Ok(m)
}
