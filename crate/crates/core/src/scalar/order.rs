//! Multiplicative orders and base-point selection.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

use super::field::{prime_factors, Felt, PrimeField};
use crate::error::{Error, Result};

/// Exact multiplicative order of a nonzero element.
pub fn multiplicative_order(w: Felt) -> Result<u64> {
    if w.is_zero() {
        return Err(Error::InvalidBasePoint("zero has no multiplicative order".into()));
    }
    let p = w.field().modulus();
    let mut order = p - 1;
    for q in prime_factors(p - 1) {
        while order.is_multiple_of(q) && w.pow(order / q).is_one() {
            order /= q;
        }
    }
    Ok(order)
}

/// True iff `w^e != 1` for every `1 <= e < bound`.
pub fn order_at_least(w: Felt, bound: u64) -> Result<bool> {
    Ok(multiplicative_order(w)? >= bound)
}

/// How the probe points of a block are derived from its base point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointLayout {
    /// `w^i` for `i = 1..=range`.
    Powers,
    /// `(w^k + w^-k)/2` for the odd `k = 2i-1`, `i = 1..=range`.
    ChebyshevOdd,
}

impl PointLayout {
    /// The probe point with (1-based) index `i` in a block with base `w`.
    pub fn point(self, w: Felt, i: usize) -> Felt {
        match self {
            PointLayout::Powers => w.pow(i as u64),
            PointLayout::ChebyshevOdd => {
                let k = (2 * i - 1) as u64;
                let wk = w.pow(k);
                (wk + wk.inv().expect("base point is nonzero")) * w.field().half()
            }
        }
    }
}

/// Probe points `1..=range` of one block, or `None` if two of them coincide.
fn block_points(layout: PointLayout, w: Felt, range: usize) -> Option<Vec<Felt>> {
    let pts: Vec<Felt> = (1..=range).map(|i| layout.point(w, i)).collect();
    let mut seen = HashSet::with_capacity(range);
    pts.iter().all(|p| seen.insert(*p)).then_some(pts)
}

/// Picks `count` base points of order at least `order_bound` whose probe
/// points (indices `1..=probe_index_range`, mapped through `layout`) are
/// pairwise distinct across all blocks.
///
/// Candidates are drawn from a ChaCha stream seeded by `rng_seed`; when the
/// random phase is exhausted a deterministic scan over the field finishes
/// the selection.
pub fn select_base_points(
    field: PrimeField,
    count: usize,
    order_bound: u64,
    probe_index_range: usize,
    layout: PointLayout,
    rng_seed: u64,
) -> Result<Vec<Felt>> {
    if count == 0 {
        return Err(Error::InvalidArgument("at least one base point is required".into()));
    }
    let p = field.modulus();
    if order_bound > p - 1 {
        return Err(Error::SelectionExhausted(format!(
            "order >= {order_bound} is impossible in {field} (largest order is {})",
            p - 1
        )));
    }
    let mut chosen: Vec<Felt> = Vec::with_capacity(count);
    let mut used: HashSet<Felt> = HashSet::new();
    let mut try_accept = |w: Felt, chosen: &mut Vec<Felt>| -> bool {
        if w.is_zero() || chosen.contains(&w) || !order_at_least(w, order_bound).unwrap_or(false) {
            return false;
        }
        match block_points(layout, w, probe_index_range) {
            Some(pts) if pts.iter().all(|q| !used.contains(q)) => {
                used.extend(pts);
                chosen.push(w);
                true
            }
            _ => false,
        }
    };

    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let attempts = 200 + 50 * count;
    for _ in 0..attempts {
        if chosen.len() == count {
            break;
        }
        let w = field.elem(rng.gen_range(2..p));
        try_accept(w, &mut chosen);
    }
    if chosen.len() < count && p <= 1 << 20 {
        for w in field.elements().skip(2) {
            if chosen.len() == count {
                break;
            }
            try_accept(w, &mut chosen);
        }
    }
    if chosen.len() < count {
        return Err(Error::SelectionExhausted(format!(
            "found only {} of {count} base points with order >= {order_bound} and distinct probes in {field}",
            chosen.len()
        )));
    }
    Ok(chosen)
}
