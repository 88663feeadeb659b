//! Browser bindings for the demo page in `www/`. Every export returns a JSON
//! string; failures are reported as `{"error": "..."}` so the page has a
//! single code path.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use spinterp::blackbox::{make_instance, InstanceConfig};
use spinterp::decode::decode_e;
use spinterp::fixtures::non_unique_example;
use spinterp::{Basis, PrimeField, SparsePoly};

fn terms_json(f: &SparsePoly) -> Value {
    f.terms().iter().map(|&(d, c)| json!([d, c.signed()])).collect()
}

fn parse_basis(name: &str) -> Result<Basis, String> {
    Basis::parse(name).ok_or_else(|| format!("unknown basis {name:?}"))
}

fn wrap(r: Result<Value, String>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

pub fn decode_random_json(p: u64, basis: &str, b: usize, d: u64, e: usize, seed: u64) -> Result<Value, String> {
    let basis = parse_basis(basis)?;
    let cfg = InstanceConfig { p, basis, b, d, e, t: None };
    let (inst, _) = make_instance(&cfg, seed).map_err(|e| e.to_string())?;
    let mut oracle = inst.oracle().map_err(|e| e.to_string())?;
    let res = decode_e(&mut oracle, basis, b, d, e, inst.field, seed).map_err(|e| e.to_string())?;
    let candidates: Vec<Value> = res
        .candidates
        .iter()
        .map(|c| {
            json!({
                "terms": terms_json(&c.poly),
                "hidden": c.poly == inst.hidden,
                "mismatches": c.mismatches.iter().map(|&(s, i)| format!("{s}:{i}")).collect::<Vec<_>>(),
            })
        })
        .collect();
    let blocks: Vec<Value> = res
        .blocks
        .iter()
        .map(|r| json!({ "kind": format!("{:?}", r.kind), "len": r.len, "list": r.list_size, "bound": r.bound }))
        .collect();
    Ok(json!({
        "hidden": terms_json(&inst.hidden),
        "errors": inst.errors.iter().map(|(x, v)| json!([x.residue(), v.residue()])).collect::<Vec<_>>(),
        "probes": res.probes_used,
        "list_bound": res.list_bound,
        "blocks": blocks,
        "candidates": candidates,
    }))
}

/// `terms` is a list like `"3 -2, 7 5"`: degree then coefficient.
pub fn evaluate_json(p: u64, basis: &str, terms: &str, x: i64) -> Result<Value, String> {
    let field = PrimeField::new(p).map_err(|e| e.to_string())?;
    let basis = parse_basis(basis)?;
    let pairs = terms
        .split([',', ';', '\n'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|t| {
            let nums: Vec<i64> = t
                .split_whitespace()
                .map(|n| n.parse().map_err(|_| format!("bad number in {t:?}")))
                .collect::<Result<_, _>>()?;
            match nums[..] {
                [d, c] => Ok((d, c)),
                _ => Err(format!("expected \"degree coefficient\", got {t:?}")),
            }
        })
        .collect::<Result<Vec<_>, String>>()?;
    let f = SparsePoly::from_ints(field, basis, &pairs).map_err(|e| e.to_string())?;
    let v = f.eval(field.int(x)).map_err(|e| e.to_string())?;
    Ok(json!({ "terms": terms_json(&f), "value": v.residue() }))
}

pub fn non_unique_json() -> Value {
    let ex = non_unique_example();
    let show = |f: &SparsePoly| json!({ "terms": terms_json(f), "mismatches": ex.mismatches(f) });
    json!({
        "p": ex.field.modulus(),
        "omega": ex.omega.residue(),
        "points": ex.points.iter().map(|x| x.residue()).collect::<Vec<_>>(),
        "values": ex.values.iter().map(|v| v.signed()).collect::<Vec<_>>(),
        "f1": show(&ex.f1),
        "f2": show(&ex.f2),
    })
}

/// Generate a random instance, decode it and describe the output list.
#[wasm_bindgen]
pub fn decode_random(p: u64, basis: &str, b: usize, d: u64, e: usize, seed: u64) -> String {
    wrap(decode_random_json(p, basis, b, d, e, seed))
}

#[wasm_bindgen]
pub fn evaluate(p: u64, basis: &str, terms: &str, x: i64) -> String {
    wrap(evaluate_json(p, basis, terms, x))
}

/// Eleven values over GF(13) explained by two different 2-sparse Chebyshev
/// polynomials, each with one error.
#[wasm_bindgen]
pub fn non_unique() -> String {
    non_unique_json().to_string()
}
