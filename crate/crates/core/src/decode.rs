//! Error-correcting list interpolation.
//!
//! Single-block decoders handle one error in `3B` power-basis values, two
//! errors in `4B` power-basis values, and one error in `3B` Chebyshev
//! values. The blocked decoders split `N` probes into blocks so that some
//! block always has few enough errors, decode every block, and keep the
//! candidates that disagree with at most `E` probes overall.

use std::collections::BTreeSet;

use crate::blackbox::OracleBox;
use crate::error::{invalid, Error, Result};
use crate::generator::{berlekamp_massey, fold_det_sym, hankel_det_sym, pham_system_sym};
use crate::pham::solve_pham;
use crate::prony::{try_prony, try_prony_chebyshev};
use crate::scalar::{distinct_roots, select_base_points, Felt, PointLayout, PrimeField};
use crate::sparse::{Basis, SparsePoly};

/// `B^2 + B + 2`: list size of the one-error power decoder.
pub fn one_error_bound(b: usize) -> usize {
    b * b + b + 2
}

/// `B^4 + 2B^3 + 3B^2 + 2B + 6`: list size of the two-error power decoder.
pub fn two_error_bound(b: usize) -> usize {
    b.pow(4) + 2 * b.pow(3) + 3 * b * b + 2 * b + 6
}

/// `2B^2 + 2B + 1`: list size of the one-error Chebyshev decoder.
pub fn cheb_one_error_bound(b: usize) -> usize {
    2 * b * b + 2 * b + 1
}

/// List-size bound of the blocked power decoder.
pub fn power_list_bound(b: usize, e: usize) -> usize {
    let tau = e / 3;
    match e % 3 {
        0 => tau * two_error_bound(b) + 1,
        1 => tau * two_error_bound(b) + one_error_bound(b),
        _ => (tau + 1) * two_error_bound(b),
    }
}

/// List-size bound of the blocked Chebyshev decoder.
pub fn cheb_list_bound(b: usize, e: usize) -> usize {
    let tau = e / 2;
    if e.is_multiple_of(2) {
        tau * cheb_one_error_bound(b) + 1
    } else {
        (tau + 1) * cheb_one_error_bound(b)
    }
}

/// `floor(4E/3 + 2) * B`.
pub fn power_probe_count(b: usize, e: usize) -> usize {
    (4 * e + 6) / 3 * b
}

/// `floor(3E/2 + 2) * B`.
pub fn cheb_probe_count(b: usize, e: usize) -> usize {
    (3 * e + 4) / 2 * b
}

/// Base points and block lengths used by a blocked decoder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbePlan {
    pub layout: PointLayout,
    pub bases: Vec<Felt>,
    pub lengths: Vec<usize>,
}

impl ProbePlan {
    /// All probe points, block by block.
    pub fn points(&self) -> Vec<Felt> {
        self.bases
            .iter()
            .zip(&self.lengths)
            .flat_map(|(&w, &len)| (1..=len).map(move |i| self.layout.point(w, i)))
            .collect()
    }

    pub fn probe_count(&self) -> usize {
        self.lengths.iter().sum()
    }
}

/// Blocks of the power decoder: `τ = floor(E/3)` blocks of `4B`, then a tail
/// of `2B` (E = 0 mod 3), `3B` (E = 1 mod 3) or one more `4B` block.
pub fn power_probe_plan(field: PrimeField, b: usize, d: u64, e: usize, seed: u64) -> Result<ProbePlan> {
    if b == 0 {
        return Err(invalid("the sparsity bound must be positive"));
    }
    let tau = e / 3;
    let mut lengths = vec![4 * b; tau];
    lengths.push([2 * b, 3 * b, 4 * b][e % 3]);
    let order = 2 * d + 1;
    let range = *lengths.iter().max().unwrap();
    let bases = select_base_points(field, lengths.len(), order, range, PointLayout::Powers, seed)?;
    Ok(ProbePlan { layout: PointLayout::Powers, bases, lengths })
}

/// Blocks of the Chebyshev decoder: `τ = floor(E/2)` blocks of `3B`, then a
/// `2B` tail (E even) or one more `3B` block.
pub fn cheb_probe_plan(field: PrimeField, b: usize, d: u64, e: usize, seed: u64) -> Result<ProbePlan> {
    if b == 0 {
        return Err(invalid("the sparsity bound must be positive"));
    }
    let tau = e / 2;
    let mut lengths = vec![3 * b; tau];
    lengths.push(if e.is_multiple_of(2) { 2 * b } else { 3 * b });
    let order = 4 * d + 1;
    let range = *lengths.iter().max().unwrap();
    let bases = select_base_points(field, lengths.len(), order, range, PointLayout::ChebyshevOdd, seed)?;
    Ok(ProbePlan { layout: PointLayout::ChebyshevOdd, bases, lengths })
}

/// One block of probes. Entry `i` (1-based) is at `w^i` for the power
/// layout and at `γ_{2i-1} = (w^{2i-1} + w^{-(2i-1)})/2` for the Chebyshev layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalBlock {
    pub base: Felt,
    pub layout: PointLayout,
    pub entries: Vec<(usize, Felt, Felt)>,
}

impl EvalBlock {
    /// Builds a block from its values `a_1, a_2, ...`, computing the points.
    pub fn from_values(base: Felt, layout: PointLayout, values: &[Felt]) -> Self {
        let entries = values.iter().enumerate().map(|(k, &v)| (k + 1, layout.point(base, k + 1), v)).collect();
        EvalBlock { base, layout, entries }
    }

    pub fn values(&self) -> Vec<Felt> {
        self.entries.iter().map(|e| e.2).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A listed interpolant and the `(block, index)` positions it disagrees
/// with; blocks are numbered from 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub poly: SparsePoly,
    pub mismatches: Vec<(usize, usize)>,
}

/// Which single-block decoder ran on a block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    /// Clean `2B` window (power) or `2B` odd values (Chebyshev).
    Prony,
    PowerOneError,
    PowerTwoErrors,
    ChebOneError,
}

/// List size produced by one block, next to the bound it must respect.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockReport {
    pub kind: BlockKind,
    pub len: usize,
    pub list_size: usize,
    pub bound: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeResult {
    pub candidates: Vec<Candidate>,
    pub probes_used: usize,
    pub blocks: Vec<BlockReport>,
    /// Bound on `candidates.len()` for this configuration.
    pub list_bound: usize,
}

/// Positions `(σ, i)` where `f` disagrees with the recorded values.
pub fn verify_candidate(f: &SparsePoly, blocks: &[EvalBlock]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (s, blk) in blocks.iter().enumerate() {
        for &(i, x, v) in &blk.entries {
            if f.eval(x) != Ok(v) {
                out.push((s + 1, i));
            }
        }
    }
    out
}

fn canonical_key(f: &SparsePoly) -> Vec<(i64, u64)> {
    f.terms().iter().map(|&(d, c)| (d, c.residue())).collect()
}

/// Deduplicates and sorts by term list.
fn canonicalize(list: Vec<SparsePoly>) -> Vec<SparsePoly> {
    let mut keyed: Vec<(Vec<(i64, u64)>, SparsePoly)> = list.into_iter().map(|f| (canonical_key(&f), f)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, f)| f).collect()
}

/// Power-basis window `a_{off+1}, a_{off+2}, ...` at the points `w^{off+i}`.
struct PowerWindow<'a> {
    vals: &'a [Felt],
    off: i64,
    w: Felt,
}

impl PowerWindow<'_> {
    fn mismatches(&self, f: &SparsePoly) -> usize {
        let mut x = self.w.powi(self.off + 1).expect("base point is nonzero");
        let mut n = 0;
        for &a in self.vals {
            if f.eval_power(x) != Ok(a) {
                n += 1;
            }
            x *= self.w;
        }
        n
    }

    fn sub(&self, from: usize, to: usize) -> PowerWindow<'_> {
        PowerWindow { vals: &self.vals[from..to], off: self.off + from as i64, w: self.w }
    }

    /// Prony on local values `from..to`.
    fn prony(&self, from: usize, to: usize, b: usize, d: u64) -> Option<SparsePoly> {
        try_prony(self.off + from as i64 + 1, &self.vals[from..to], b, d, self.w)
    }
}

/// One patched hypothesis: BM on the whole patched window must have degree
/// at most `b`, then Prony on the first `2b` patched values; the result is
/// kept if it disagrees with the original window in at most `max_err` places.
fn patched_candidate(win: &PowerWindow, patched: &[Felt], b: usize, d: u64, max_err: usize) -> Option<SparsePoly> {
    if berlekamp_massey(patched).degree().unwrap_or(0) > b {
        return None;
    }
    let f = try_prony(win.off + 1, &patched[..2 * b], b, d, win.w)?;
    (win.mismatches(&f) <= max_err).then_some(f)
}

fn power_one_error(win: &PowerWindow, b: usize, d: u64) -> Result<Vec<SparsePoly>> {
    let mut list = Vec::new();
    for f in [win.prony(0, 2 * b, b, d), win.prony(b, 3 * b, b, d)].into_iter().flatten() {
        if win.mismatches(&f) <= 1 {
            list.push(f);
        }
    }
    for l in b + 1..=2 * b {
        let delta = hankel_det_sym(win.vals, (l - b) as i64, l as i64, b)?;
        for xi in distinct_roots(&delta)? {
            let mut patched = win.vals.to_vec();
            patched[l - 1] = xi;
            list.extend(patched_candidate(win, &patched, b, d, 1));
        }
    }
    Ok(canonicalize(list))
}

fn power_two_errors(win: &PowerWindow, b: usize, d: u64) -> Result<Vec<SparsePoly>> {
    let mut list = power_one_error(&win.sub(0, 3 * b), b, d)?;
    list.extend(power_one_error(&win.sub(b, 4 * b), b, d)?);
    list.extend(win.prony(0, 2 * b, b, d));
    list.extend(win.prony(2 * b, 4 * b, b, d));
    list.retain(|f| win.mismatches(f) <= 2);
    for l1 in b + 1..=2 * b {
        for l2 in 2 * b + 1..=3 * b {
            let (d1, d2) = pham_system_sym(win.vals, l1, l2, b)?;
            let sols = match solve_pham(&d1, &d2, b) {
                Ok(s) => s,
                Err(Error::DegenerateSystem) => continue,
                Err(e) => return Err(e),
            };
            for (x1, x2) in sols {
                let mut patched = win.vals.to_vec();
                patched[l1 - 1] = x1;
                patched[l2 - 1] = x2;
                list.extend(patched_candidate(win, &patched, b, d, 2));
            }
        }
    }
    Ok(canonicalize(list))
}

fn check_block(block: &EvalBlock, layout: PointLayout, len: usize) -> Result<()> {
    if block.layout != layout || block.len() != len {
        return Err(invalid(format!(
            "expected a {layout:?} block of {len} values, got {:?} with {}",
            block.layout,
            block.len()
        )));
    }
    Ok(())
}

fn single_block_result(
    list: Vec<SparsePoly>,
    block: &EvalBlock,
    kind: BlockKind,
    bound: usize,
) -> Result<DecodeResult> {
    if list.is_empty() {
        return Err(Error::DecodeFailed);
    }
    let blocks = std::slice::from_ref(block);
    let list_size = list.len();
    Ok(DecodeResult {
        candidates: list
            .into_iter()
            .map(|poly| Candidate { mismatches: verify_candidate(&poly, blocks), poly })
            .collect(),
        probes_used: block.len(),
        blocks: vec![BlockReport { kind, len: block.len(), list_size, bound }],
        list_bound: bound,
    })
}

/// Every polynomial with at most `b` terms and `|degree| <= d` that agrees
/// with all but at most one of the `3B` values at `w^1, ..., w^{3B}`.
pub fn decode_power_1err(block: &EvalBlock, b: usize, d: u64) -> Result<DecodeResult> {
    check_block(block, PointLayout::Powers, 3 * b)?;
    let vals = block.values();
    let win = PowerWindow { vals: &vals, off: 0, w: block.base };
    single_block_result(power_one_error(&win, b, d)?, block, BlockKind::PowerOneError, one_error_bound(b))
}

/// Same as [`decode_power_1err`] for at most two errors among `4B` values.
pub fn decode_power_2err(block: &EvalBlock, b: usize, d: u64) -> Result<DecodeResult> {
    check_block(block, PointLayout::Powers, 4 * b)?;
    let vals = block.values();
    let win = PowerWindow { vals: &vals, off: 0, w: block.base };
    single_block_result(power_two_errors(&win, b, d)?, block, BlockKind::PowerTwoErrors, two_error_bound(b))
}

/// Chebyshev window: `odd[k] = f(γ_{2k+1})`.
struct ChebWindow<'a> {
    odd: &'a [Felt],
    w: Felt,
}

impl ChebWindow<'_> {
    fn mismatches(&self, f: &SparsePoly) -> usize {
        self.odd
            .iter()
            .enumerate()
            .filter(|&(k, &a)| f.eval_chebyshev(PointLayout::ChebyshevOdd.point(self.w, k + 1)) != a)
            .count()
    }
}

/// `(a_{2i-1})` for `i = -(len/2 - 1) ..= len/2`, i.e. the odd values mirrored.
fn symmetrized(odd: &[Felt]) -> Vec<Felt> {
    let mut seq: Vec<Felt> = odd.iter().rev().copied().collect();
    seq.extend_from_slice(odd);
    seq
}

fn cheb_one_error(win: &ChebWindow, b: usize, d: u64) -> Result<Vec<SparsePoly>> {
    let mut list = Vec::new();
    if let Some(f) = try_prony_chebyshev(&win.odd[..2 * b], b, d, win.w) {
        if win.mismatches(&f) <= 1 {
            list.push(f);
        }
    }
    for l in 1..=2 * b {
        let r = if l <= b { 2 * l - 1 } else { 2 * (l - b) - 1 };
        let delta = fold_det_sym(win.odd, r as i64, (2 * l - 1) as i64, b)?;
        if delta.is_zero() {
            continue;
        }
        for xi in distinct_roots(&delta)? {
            let mut patched = win.odd.to_vec();
            patched[l - 1] = xi;
            if berlekamp_massey(&symmetrized(&patched)).degree().unwrap_or(0) > 2 * b {
                continue;
            }
            if let Some(f) = try_prony_chebyshev(&patched[..2 * b], b, d, win.w) {
                if win.mismatches(&f) <= 1 {
                    list.push(f);
                }
            }
        }
    }
    Ok(canonicalize(list))
}

/// Every Chebyshev-sparse polynomial with at most `b` terms and degrees up
/// to `d` that agrees with all but at most one of the `3B` values at
/// `γ_1, γ_3, ..., γ_{6B-1}`.
pub fn decode_cheb_1err(block: &EvalBlock, b: usize, d: u64) -> Result<DecodeResult> {
    check_block(block, PointLayout::ChebyshevOdd, 3 * b)?;
    let odd = block.values();
    let win = ChebWindow { odd: &odd, w: block.base };
    single_block_result(cheb_one_error(&win, b, d)?, block, BlockKind::ChebOneError, cheb_one_error_bound(b))
}

fn probe_blocks(oracle: &mut OracleBox, plan: &ProbePlan) -> Result<Vec<EvalBlock>> {
    plan.bases
        .iter()
        .zip(&plan.lengths)
        .map(|(&w, &len)| {
            let entries = (1..=len)
                .map(|i| {
                    let x = plan.layout.point(w, i);
                    Ok((i, x, oracle.probe(x)?))
                })
                .collect::<Result<_>>()?;
            Ok(EvalBlock { base: w, layout: plan.layout, entries })
        })
        .collect()
}

fn merge(
    lists: Vec<Vec<SparsePoly>>,
    blocks: &[EvalBlock],
    reports: Vec<BlockReport>,
    e: usize,
    list_bound: usize,
) -> Result<DecodeResult> {
    let candidates: Vec<Candidate> = canonicalize(lists.into_iter().flatten().collect())
        .into_iter()
        .map(|poly| Candidate { mismatches: verify_candidate(&poly, blocks), poly })
        .filter(|c| c.mismatches.len() <= e)
        .collect();
    if candidates.is_empty() {
        return Err(Error::DecodeFailed);
    }
    Ok(DecodeResult { candidates, probes_used: blocks.iter().map(EvalBlock::len).sum(), blocks: reports, list_bound })
}

/// Decodes already-probed power-basis blocks laid out as in [`power_probe_plan`].
pub fn decode_power_blocks(blocks: &[EvalBlock], b: usize, d: u64, e: usize) -> Result<DecodeResult> {
    let mut lists = Vec::with_capacity(blocks.len());
    let mut reports = Vec::with_capacity(blocks.len());
    for blk in blocks {
        if blk.layout != PointLayout::Powers {
            return Err(invalid("power decoding needs power-layout blocks"));
        }
        let vals = blk.values();
        let win = PowerWindow { vals: &vals, off: 0, w: blk.base };
        let (kind, list, bound) = match blk.len() {
            n if n == 2 * b => (BlockKind::Prony, win.prony(0, 2 * b, b, d).into_iter().collect(), 1),
            n if n == 3 * b => (BlockKind::PowerOneError, power_one_error(&win, b, d)?, one_error_bound(b)),
            n if n == 4 * b => (BlockKind::PowerTwoErrors, power_two_errors(&win, b, d)?, two_error_bound(b)),
            n => return Err(invalid(format!("block of {n} values does not match B = {b}"))),
        };
        reports.push(BlockReport { kind, len: blk.len(), list_size: list.len(), bound });
        lists.push(list);
    }
    merge(lists, blocks, reports, e, power_list_bound(b, e))
}

/// Decodes already-probed Chebyshev blocks laid out as in [`cheb_probe_plan`].
pub fn decode_cheb_blocks(blocks: &[EvalBlock], b: usize, d: u64, e: usize) -> Result<DecodeResult> {
    let mut lists = Vec::with_capacity(blocks.len());
    let mut reports = Vec::with_capacity(blocks.len());
    for blk in blocks {
        if blk.layout != PointLayout::ChebyshevOdd {
            return Err(invalid("Chebyshev decoding needs Chebyshev-layout blocks"));
        }
        let odd = blk.values();
        let win = ChebWindow { odd: &odd, w: blk.base };
        let (kind, list, bound) = match blk.len() {
            n if n == 2 * b => (BlockKind::Prony, try_prony_chebyshev(&odd, b, d, blk.base).into_iter().collect(), 1),
            n if n == 3 * b => (BlockKind::ChebOneError, cheb_one_error(&win, b, d)?, cheb_one_error_bound(b)),
            n => return Err(invalid(format!("block of {n} values does not match B = {b}"))),
        };
        reports.push(BlockReport { kind, len: blk.len(), list_size: list.len(), bound });
        lists.push(list);
    }
    merge(lists, blocks, reports, e, cheb_list_bound(b, e))
}

/// Probes `floor(4E/3 + 2) * B` points of the black box and returns every
/// polynomial with at most `b` terms and `|degree| <= d` that disagrees with
/// at most `e` of them.
pub fn decode_power_e(
    oracle: &mut OracleBox,
    b: usize,
    d: u64,
    e: usize,
    field: PrimeField,
    seed: u64,
) -> Result<DecodeResult> {
    let plan = power_probe_plan(field, b, d, e, seed)?;
    let blocks = probe_blocks(oracle, &plan)?;
    decode_power_blocks(&blocks, b, d, e)
}

/// Probes `floor(3E/2 + 2) * B` Chebyshev points of the black box and
/// returns every Chebyshev-sparse polynomial with at most `b` terms and
/// degrees up to `d` that disagrees with at most `e` of them.
pub fn decode_cheb_e(
    oracle: &mut OracleBox,
    b: usize,
    d: u64,
    e: usize,
    field: PrimeField,
    seed: u64,
) -> Result<DecodeResult> {
    let plan = cheb_probe_plan(field, b, d, e, seed)?;
    let blocks = probe_blocks(oracle, &plan)?;
    decode_cheb_blocks(&blocks, b, d, e)
}

/// Dispatches on the basis of the hidden polynomial's instance.
pub fn decode_e(
    oracle: &mut OracleBox,
    basis: Basis,
    b: usize,
    d: u64,
    e: usize,
    field: PrimeField,
    seed: u64,
) -> Result<DecodeResult> {
    match basis {
        Basis::Power => decode_power_e(oracle, b, d, e, field, seed),
        Basis::Chebyshev1 => decode_cheb_e(oracle, b, d, e, field, seed),
    }
}

/// Distinct mismatch positions, for callers that want set semantics.
pub fn mismatch_set(c: &Candidate) -> BTreeSet<(usize, usize)> {
    c.mismatches.iter().copied().collect()
}
