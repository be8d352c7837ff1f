//! wasm-bindgen entry points for `www/index.html`. Each returns a JSON
//! string; errors come back as a thrown string.

use serde_json::json;
use wasm_bindgen::prelude::*;

use lrw_core::classical::{w_decomp, Group};
use lrw_core::fermionic::{fermionic_decomp, parse_factors};
use lrw_core::lie::LieSpec;
use lrw_core::tableaux::{enumerate_lr_tableaux, SkewShape};
use lrw_core::Partition;

const MAX_BOXES: usize = 12;

fn partition(s: &str) -> Result<Partition, String> {
    let p: Partition = s.parse().map_err(|e: lrw_core::Error| e.to_string())?;
    if p.size() > MAX_BOXES {
        return Err(format!("{p} has more than {MAX_BOXES} boxes"));
    }
    Ok(p)
}

pub fn decompose(lambda: &str, family: &str) -> Result<String, String> {
    let lambda = partition(lambda)?;
    let family: Group = family.parse().map_err(|e: lrw_core::Error| e.to_string())?;
    let w = w_decomp(&lambda, family);
    let value = json!({"text": w.to_string(), "total": w.total(), "decomposition": w});
    Ok(value.to_string())
}

pub fn tableaux(outer: &str, inner: &str) -> Result<String, String> {
    let outer = partition(outer)?;
    let inner = partition(inner)?;
    let shape = SkewShape::new(outer.clone(), inner.clone()).ok_or_else(|| format!("{inner} is not inside {outer}"))?;
    let list: Vec<_> = enumerate_lr_tableaux(&shape)
        .into_iter()
        .map(|t| {
            let content = t.content().map(|c| c.to_string()).unwrap_or_default();
            json!({"rows": t.rows(), "content": content})
        })
        .collect();
    Ok(json!({"outer": outer, "inner": inner.parts(), "tableaux": list}).to_string())
}

pub fn fermionic(spec: &str, factors: &str) -> Result<String, String> {
    let spec: LieSpec = spec.parse().map_err(|e: lrw_core::Error| e.to_string())?;
    if spec.rank() > 6 {
        return Err("rank is limited to 6 here".into());
    }
    let f = parse_factors(&spec, factors).map_err(|e| e.to_string())?;
    if f.top_weight(spec.rank()).to_partition().size() > MAX_BOXES {
        return Err(format!("top weight has more than {MAX_BOXES} boxes"));
    }
    let terms: Vec<_> = fermionic_decomp(&spec, &f)
        .into_iter()
        .map(|(w, m)| json!({"weight": w.to_string(), "mult": m.to_string()}))
        .collect();
    Ok(json!({"spec": spec.to_string(), "terms": terms}).to_string())
}

#[wasm_bindgen]
pub fn w_decomposition(lambda: &str, family: &str) -> Result<String, JsValue> {
    decompose(lambda, family).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn lr_tableaux(outer: &str, inner: &str) -> Result<String, JsValue> {
    tableaux(outer, inner).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn fermionic_sum(spec: &str, factors: &str) -> Result<String, JsValue> {
    fermionic(spec, factors).map_err(|e| JsValue::from_str(&e))
}
