//! Solving the bivariate systems `Δ_{ℓ1}(α₁, α₂) = Δ_{ℓ2}(α₁, α₂) = 0` that
//! arise when two evaluations are unknown.

use crate::error::{Error, Result};
use crate::poly::{BiPoly, UniPoly, Var};
use crate::scalar::{distinct_roots, Felt};

/// Sylvester resultant of `f` and `g` with respect to `eliminate`, as a
/// polynomial in the other variable.
///
/// The Sylvester matrix has univariate polynomial entries; its determinant
/// is taken by fraction-free (Bareiss) elimination over `K[x]`, so no
/// interpolation nodes are needed and small fields work.
pub fn sylvester_resultant(f: &BiPoly, g: &BiPoly, eliminate: Var) -> Result<UniPoly> {
    let field = f.field();
    if f.is_zero() || g.is_zero() {
        return Err(Error::DegenerateSystem);
    }
    let fc = f.coefficients_in(eliminate);
    let gc = g.coefficients_in(eliminate);
    let (m, n) = (fc.len() - 1, gc.len() - 1);
    if m + n == 0 {
        return Err(Error::DegenerateSystem);
    }
    let size = m + n;
    let zero = UniPoly::zero(field);
    let mut rows: Vec<Vec<UniPoly>> = Vec::with_capacity(size);
    // n shifted copies of f, then m shifted copies of g, highest power first
    for (count, coeffs, deg) in [(n, &fc, m), (m, &gc, n)] {
        for shift in 0..count {
            let mut row = vec![zero.clone(); size];
            for k in 0..=deg {
                row[shift + k] = coeffs[deg - k].clone();
            }
            rows.push(row);
        }
    }
    let res = bareiss_det(rows)?;
    if res.is_zero() {
        return Err(Error::DegenerateSystem);
    }
    Ok(res)
}

/// Fraction-free determinant of a square matrix over `K[x]`.
fn bareiss_det(mut a: Vec<Vec<UniPoly>>) -> Result<UniPoly> {
    let n = a.len();
    let field = a[0][0].field();
    let mut prev = UniPoly::one(field);
    let mut negate = false;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(UniPoly::zero(field));
        };
        if piv != k {
            a.swap(piv, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
            a[i][k] = UniPoly::zero(field);
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if negate { -&d } else { d })
}

/// All solutions in `K²` of `d1 = d2 = 0`, sorted lexicographically by residues.
///
/// `α₂` is eliminated first; for every root `ξ₁` of the resultant the
/// candidate `ξ₂` are the common roots of `d1(ξ₁, ·)` and `d2(ξ₁, ·)`.
/// Every returned pair is checked by substitution.
pub fn solve_pham(d1: &BiPoly, d2: &BiPoly, b: usize) -> Result<Vec<(Felt, Felt)>> {
    let res = sylvester_resultant(d1, d2, Var::Second)?;
    let mut out = Vec::new();
    for xi1 in distinct_roots(&res)? {
        let u1 = d1.specialize(Var::First, xi1);
        let u2 = d2.specialize(Var::First, xi1);
        let common = match (u1.is_zero(), u2.is_zero()) {
            (true, true) => return Err(Error::DegenerateSystem),
            (true, false) => u2,
            (false, true) => u1,
            (false, false) => UniPoly::gcd(&u1, &u2),
        };
        if common.degree() == Some(0) {
            continue;
        }
        for xi2 in distinct_roots(&common)? {
            if d1.eval(xi1, xi2).is_zero() && d2.eval(xi1, xi2).is_zero() {
                out.push((xi1, xi2));
            }
        }
    }
    out.sort();
    debug_assert!(out.len() <= (b + 1) * (b + 1) || b == 0);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::PrimeField;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn bi(f: PrimeField, terms: &[((u32, u32), i64)]) -> BiPoly {
        BiPoly::from_terms(f, terms.iter().map(|&(k, c)| (k, f.int(c))))
    }

    fn brute(d1: &BiPoly, d2: &BiPoly) -> Vec<(Felt, Felt)> {
        let f = d1.field();
        let mut out = Vec::new();
        for x in f.elements() {
            for y in f.elements() {
                if d1.eval(x, y).is_zero() && d2.eval(x, y).is_zero() {
                    out.push((x, y));
                }
            }
        }
        out
    }

    #[test]
    fn small_examples() {
        let f = PrimeField::new(11).unwrap();
        let d1 = bi(f, &[((2, 0), 1), ((0, 0), -5)]);
        let d2 = bi(f, &[((0, 2), 1), ((1, 0), -1)]);
        let res = sylvester_resultant(&d1, &d2, Var::Second).unwrap();
        assert_eq!(distinct_roots(&res).unwrap(), vec![f.elem(4), f.elem(7)]);
        assert_eq!(solve_pham(&d1, &d2, 1).unwrap(), vec![(f.elem(4), f.elem(2)), (f.elem(4), f.elem(9))]);

        let d1 = bi(f, &[((1, 0), 1)]);
        let d2 = bi(f, &[((0, 1), 1)]);
        assert_eq!(solve_pham(&d1, &d2, 0).unwrap(), vec![(f.zero(), f.zero())]);

        let d1 = bi(f, &[((1, 0), 1), ((0, 0), -3)]);
        let d2 = bi(f, &[((0, 1), 1), ((0, 0), -6)]);
        let res = sylvester_resultant(&d1, &d2, Var::Second).unwrap();
        assert_eq!(res.monic(), UniPoly::from_ints(f, &[-3, 1]));
    }

    #[test]
    fn common_factor_is_degenerate() {
        let f = PrimeField::new(101).unwrap();
        let d1 = bi(f, &[((1, 0), 1), ((0, 1), 1)]);
        let d2 = &d1 * &bi(f, &[((0, 1), 1), ((0, 0), 2)]);
        assert_eq!(sylvester_resultant(&d1, &d2, Var::Second), Err(Error::DegenerateSystem));
    }

    fn random_pham(f: PrimeField, b: usize, rng: &mut ChaCha8Rng) -> (BiPoly, BiPoly) {
        let p = f.modulus();
        let mut make = |lead: (u32, u32)| {
            let mut d = BiPoly::zero(f);
            d.add_term(lead.0, lead.1, if rng.gen_bool(0.5) { f.one() } else { -f.one() });
            for i in 0..=b as u32 {
                for j in 0..=(b as u32 - i) {
                    d.add_term(i, j, f.elem(rng.gen_range(0..p)));
                }
            }
            d
        };
        let n = b as u32 + 1;
        (make((n, 0)), make((0, n)))
    }

    #[test]
    fn matches_exhaustive_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for p in [11u64, 101] {
            let f = PrimeField::new(p).unwrap();
            for trial in 0..40 {
                let b = 1 + trial % 3;
                let (d1, d2) = random_pham(f, b, &mut rng);
                let res = sylvester_resultant(&d1, &d2, Var::Second).unwrap();
                assert!(res.degree().unwrap() <= (b + 1) * (b + 1));
                let got = solve_pham(&d1, &d2, b).unwrap();
                assert!(got.len() <= (b + 1) * (b + 1));
                assert_eq!(got, brute(&d1, &d2));
            }
        }
    }
}
