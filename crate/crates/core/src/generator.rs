//! Minimal linear generators, the Hankel and fold matrices built from a
//! window of evaluations, and their determinants with one or two entries
//! replaced by unknowns.
//!
//! Evaluation windows are 1-based: `evals[0]` holds `a_1`. Fold matrices
//! only touch odd indices and take the odd values directly, `odd[k] = a_{2k+1}`.

use crate::error::{invalid, Result};
use crate::poly::{BiPoly, UniPoly};
use crate::scalar::{Felt, PrimeField};

/// Dense square matrix, row-major.
pub type Matrix = Vec<Vec<Felt>>;

/// Monic minimal linear generator `Λ(z)` of `seq`.
///
/// With `L` the linear complexity and `C(z) = 1 + c_1 z + ... + c_L z^L` the
/// connection polynomial, `Λ(z) = z^L C(1/z)`. `Λ(0)` is zero exactly when
/// `c_L = 0`, i.e. when the sequence is not purely periodic from its start.
///
/// # Panics
/// If `seq` is empty.
pub fn berlekamp_massey(seq: &[Felt]) -> UniPoly {
    assert!(!seq.is_empty(), "berlekamp_massey needs a nonempty sequence");
    let field = seq[0].field();
    let one = field.one();
    let mut c = vec![one];
    let mut b = vec![one];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut last = one;
    for n in 0..seq.len() {
        let mut disc = seq[n];
        for i in 1..=l.min(c.len() - 1) {
            disc += c[i] * seq[n - i];
        }
        if disc.is_zero() {
            m += 1;
            continue;
        }
        let coef = disc * last.inv().expect("previous discrepancy is nonzero");
        let prev = c.clone();
        if c.len() < b.len() + m {
            c.resize(b.len() + m, field.zero());
        }
        for (i, &bi) in b.iter().enumerate() {
            c[i + m] -= coef * bi;
        }
        if 2 * l <= n {
            l = n + 1 - l;
            b = prev;
            last = disc;
            m = 1;
        } else {
            m += 1;
        }
    }
    c.resize(l + 1, field.zero());
    c.reverse();
    UniPoly::from_coeffs(field, c)
}

/// Determinant by Gaussian elimination with row pivoting.
pub fn det(m: &Matrix) -> Felt {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|r| r.len() == n), "det needs a nonempty square matrix");
    let field = m[0][0].field();
    let mut a = m.clone();
    let mut acc = field.one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return field.zero();
        };
        if piv != k {
            a.swap(piv, k);
            acc = -acc;
        }
        let pk = a[k][k];
        acc *= pk;
        let inv = pk.inv().expect("pivot is nonzero");
        for i in k + 1..n {
            let f = a[i][k] * inv;
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let t = a[k][j];
                a[i][j] -= f * t;
            }
        }
    }
    acc
}

/// Interpolation nodes `0, 1, ..., count-1`.
fn nodes(field: PrimeField, count: usize) -> Result<Vec<Felt>> {
    if count as u64 > field.modulus() {
        return Err(invalid(format!("{count} interpolation nodes do not fit in {field}")));
    }
    Ok((0..count as u64).map(|v| field.elem(v)).collect())
}

/// `det(build(α))` as a polynomial in `α`, given that it has degree at most `deg`.
pub fn det_univariate(field: PrimeField, deg: usize, build: impl Fn(Felt) -> Matrix) -> Result<UniPoly> {
    let xs = nodes(field, deg + 1)?;
    let ys: Vec<Felt> = xs.iter().map(|&x| det(&build(x))).collect();
    UniPoly::interpolate(field, &xs, &ys)
}

/// `det(build(α₁, α₂))` as a bivariate polynomial with degree at most `deg` in each variable.
pub fn det_bivariate(field: PrimeField, deg: usize, build: impl Fn(Felt, Felt) -> Matrix) -> Result<BiPoly> {
    let xs = nodes(field, deg + 1)?;
    let values: Vec<Vec<Felt>> = xs.iter().map(|&x| xs.iter().map(|&y| det(&build(x, y))).collect()).collect();
    BiPoly::interpolate_grid(field, &xs, &xs, &values)
}

fn check_window(evals: &[Felt], r: i64, b: usize) -> Result<()> {
    if b == 0 {
        return Err(invalid("the sparsity bound must be positive"));
    }
    if r < 1 || (r as usize + 2 * b) > evals.len() {
        return Err(invalid(format!("Hankel window a_{r}..a_{} is outside a_1..a_{}", r + 2 * b as i64, evals.len())));
    }
    Ok(())
}

/// `(B+1)x(B+1)` Hankel matrix `H_r` with entry `(i, j) = a_{r+i+j}`.
pub fn hankel_matrix(evals: &[Felt], r: i64, b: usize) -> Result<Matrix> {
    check_window(evals, r, b)?;
    let r = r as usize;
    Ok((0..=b).map(|i| (0..=b).map(|j| evals[r + i + j - 1]).collect()).collect())
}

/// `det H_r` with `a_{sym_index}` replaced by `α`; the substituted value
/// lies on the middle anti-diagonal, so `sym_index = r + B`.
///
/// The result has degree exactly `B+1` with leading coefficient
/// `(-1)^{B(B+1)/2}`, the sign of the anti-diagonal permutation.
pub fn hankel_det_sym(evals: &[Felt], r: i64, sym_index: i64, b: usize) -> Result<UniPoly> {
    let base = hankel_matrix(evals, r, b)?;
    if sym_index != r + b as i64 {
        return Err(invalid(format!("substitution index {sym_index} is not r + B = {}", r + b as i64)));
    }
    let field = evals[0].field();
    det_univariate(field, b + 1, |alpha| {
        let mut m = base.clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i <= b {
                row[b - i] = alpha;
            }
        }
        m
    })
}

/// Sign of the leading coefficient of [`hankel_det_sym`].
pub fn hankel_leading_sign(b: usize, field: PrimeField) -> Felt {
    if (b * (b + 1) / 2).is_multiple_of(2) {
        field.one()
    } else {
        -field.one()
    }
}

/// `(Δ_{ℓ1}, Δ_{ℓ2}) = (det H_{ℓ1-B}, det H_{ℓ2-B})` with `a_{ℓ1} -> α₁` and
/// `a_{ℓ2} -> α₂` in both matrices.
pub fn pham_system_sym(evals: &[Felt], l1: usize, l2: usize, b: usize) -> Result<(BiPoly, BiPoly)> {
    if b == 0 || !(b < l1 && l1 <= 2 * b) || !(2 * b < l2 && l2 <= 3 * b) || evals.len() < 4 * b {
        return Err(invalid(format!(
            "Pham indices need B+1 <= l1 <= 2B < l2 <= 3B and 4B values (l1 = {l1}, l2 = {l2}, B = {b}, {} values)",
            evals.len()
        )));
    }
    let field = evals[0].field();
    let sym_det = |r: usize| {
        det_bivariate(field, b + 1, |x1, x2| {
            (0..=b)
                .map(|i| {
                    (0..=b)
                        .map(|j| match r + i + j {
                            k if k == l1 => x1,
                            k if k == l2 => x2,
                            k => evals[k - 1],
                        })
                        .collect()
                })
                .collect()
        })
    };
    Ok((sym_det(l1 - b)?, sym_det(l2 - b)?))
}

/// Value `a_{|n|}` from the odd-index slice, `n` odd.
fn odd_at(odd: &[Felt], n: i64) -> Felt {
    odd[(n.unsigned_abs() as usize - 1) / 2]
}

fn check_fold(odd: &[Felt], r: i64, b: usize) -> Result<()> {
    if b == 0 {
        return Err(invalid("the sparsity bound must be positive"));
    }
    if r < 1 || r % 2 == 0 || r > 2 * b as i64 - 1 {
        return Err(invalid(format!("fold offset r = {r} is not odd in 1..=2B-1")));
    }
    let top = r + 4 * b as i64;
    if (top as usize - 1) / 2 >= odd.len() {
        return Err(invalid(format!("fold matrix G_{r} needs a_{top} but only {} odd values are given", odd.len())));
    }
    Ok(())
}

/// The Hankel+Toeplitz matrix `G_r` with entry `a_{|r+2(i+j)|} + a_{|r+2(i-j)|}`.
pub fn fold_matrix(odd: &[Felt], r: i64, b: usize) -> Result<Matrix> {
    check_fold(odd, r, b)?;
    Ok(fold_entries(r, b, |n| odd_at(odd, n)))
}

fn fold_entries(r: i64, b: usize, a: impl Fn(i64) -> Felt) -> Matrix {
    (0..=b as i64).map(|i| (0..=b as i64).map(|j| a(r + 2 * (i + j)) + a(r + 2 * (i - j))).collect()).collect()
}

/// `det G_r` with every occurrence of `a_{sym_odd_index}` replaced by `α`;
/// the substituted index must be `r` or `r + 2B`. Degree exactly `B+1`.
pub fn fold_det_sym(odd: &[Felt], r: i64, sym_odd_index: i64, b: usize) -> Result<UniPoly> {
    check_fold(odd, r, b)?;
    if sym_odd_index != r && sym_odd_index != r + 2 * b as i64 {
        return Err(invalid(format!(
            "fold substitution index {sym_odd_index} is neither r = {r} nor r + 2B = {}",
            r + 2 * b as i64
        )));
    }
    let field = odd[0].field();
    det_univariate(field, b + 1, |alpha| {
        fold_entries(r, b, |n| if n.abs() == sym_odd_index { alpha } else { odd_at(odd, n) })
    })
}
