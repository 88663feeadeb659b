//! Prony-style recovery of a sparse polynomial from one clean window of
//! evaluations at consecutive powers of a base point.

use crate::generator::berlekamp_massey;
use crate::scalar::{distinct_roots, integer_log, Felt};
use crate::sparse::{Basis, SparsePoly};

/// Recovers a Laurent polynomial with at most `b` terms and `|degree| <= d`
/// from `seq[k] = f(w^{r+k})`.
///
/// Returns `None` when the generator has degree above `b`, vanishes at 0,
/// lacks distinct roots in the field, a root is not a power `w^δ` with
/// `|δ| <= d`, or the solved polynomial does not reproduce every value of
/// the window.
pub fn try_prony(r: i64, seq: &[Felt], b: usize, d: u64, w: Felt) -> Option<SparsePoly> {
    if seq.is_empty() || w.is_zero() {
        return None;
    }
    let field = w.field();
    let lambda = berlekamp_massey(seq);
    let l = lambda.degree().expect("generator is nonzero");
    if l > b {
        return None;
    }
    if l == 0 {
        return Some(SparsePoly::zero(field, Basis::Power));
    }
    if lambda.coeff(0).is_zero() {
        return None;
    }
    let roots = distinct_roots(&lambda).ok()?;
    if roots.len() < l {
        return None;
    }
    let mut degrees = Vec::with_capacity(l);
    for &rho in &roots {
        let delta = if d == 0 { rho.is_one().then_some(0) } else { integer_log(d, w, rho).ok()? }?;
        degrees.push(delta);
    }

    // sum_j c'_j rho_j^k = a_{r+k}, k < t, with c'_j = c_j rho_j^r
    let t = roots.len();
    let rows: Vec<Vec<Felt>> = (0..t)
        .map(|k| {
            let mut row: Vec<Felt> = roots.iter().map(|rho| rho.pow(k as u64)).collect();
            row.push(seq[k]);
            row
        })
        .collect();
    let scaled = solve_augmented(rows)?;
    let mut terms = Vec::with_capacity(t);
    for ((&rho, &delta), cs) in roots.iter().zip(&degrees).zip(scaled) {
        terms.push((delta, cs * rho.powi(-r).ok()?));
    }
    let f = SparsePoly::new(field, Basis::Power, terms).ok()?;
    if f.sparsity() != t {
        return None;
    }
    let mut x = w.powi(r).ok()?;
    for &a in seq {
        if f.eval_power(x).ok()? != a {
            return None;
        }
        x *= w;
    }
    Some(f)
}

/// Gaussian elimination on an `n x (n+1)` augmented system; `None` if singular.
fn solve_augmented(mut a: Vec<Vec<Felt>>) -> Option<Vec<Felt>> {
    let n = a.len();
    for k in 0..n {
        let piv = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(piv, k);
        let inv = a[k][k].inv().ok()?;
        for v in a[k].iter_mut() {
            *v *= inv;
        }
        for i in 0..n {
            if i != k && !a[i][k].is_zero() {
                let f = a[i][k];
                for j in k..=n {
                    let t = a[k][j];
                    a[i][j] -= f * t;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n]).collect())
}

/// Recovers `sum c_j T_{δ_j}` with at most `b` terms and `δ_j <= d` from the
/// odd-index values `odd[k] = f(γ_{2k+1})`, `γ_k = (w^k + w^-k)/2`.
///
/// Uses the first `2b` odd values. The symmetric sequence
/// `b_i = a_{|2i-1|}`, `i = -(2b-1)..=2b`, is the Laurent polynomial
/// `sum (c_j/2)(w^{-δ_j} x^{2δ_j} + w^{δ_j} x^{-2δ_j})` evaluated at `w^i`;
/// it is recovered with sparsity bound `2b` and degree bound `2d`, then
/// matched against that paired shape.
pub fn try_prony_chebyshev(odd: &[Felt], b: usize, d: u64, w: Felt) -> Option<SparsePoly> {
    if b == 0 || odd.len() < 2 * b || w.is_zero() {
        return None;
    }
    let field = w.field();
    let r = -(2 * b as i64 - 1);
    let seq: Vec<Felt> = (r..=2 * b as i64).map(|i| odd[((2 * i - 1).unsigned_abs() as usize - 1) / 2]).collect();
    let h = try_prony(r, &seq, 2 * b, 2 * d, w)?;

    let two = field.elem(2);
    let mut terms = Vec::new();
    for &(e, coef) in h.terms() {
        if e % 2 != 0 {
            return None;
        }
        let delta = e / 2;
        if delta == 0 {
            terms.push((0, coef));
        } else if delta > 0 {
            let w2d = w.pow(e as u64);
            if h.coeff(-e) != coef * w2d {
                return None;
            }
            terms.push((delta, two * coef * w.pow(delta as u64)));
        } else if h.coeff(-e).is_zero() {
            return None;
        }
    }
    let f = SparsePoly::new(field, Basis::Chebyshev1, terms).ok()?;
    (f.sparsity() <= b && f.max_abs_degree() <= d).then_some(f)
}
