//! Distinct roots in GF(p) of a univariate polynomial.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::Felt;
use crate::error::{invalid, Result};
use crate::poly::UniPoly;

/// Fields up to this size are searched exhaustively.
const EXHAUSTIVE_LIMIT: u64 = 4096;

/// All distinct roots of `f` in its field, ascending by residue.
pub fn distinct_roots(f: &UniPoly) -> Result<Vec<Felt>> {
    if f.is_zero() {
        return Err(invalid("the zero polynomial has every element as a root"));
    }
    let field = f.field();
    if f.degree() == Some(0) {
        return Ok(Vec::new());
    }
    if field.modulus() <= EXHAUSTIVE_LIMIT {
        return Ok(field.elements().filter(|&x| f.eval(x).is_zero()).collect());
    }

    let f = f.monic();
    let x = UniPoly::x(field);
    // product of the distinct linear factors: gcd(f, x^p - x)
    let xp = x.pow_mod(field.modulus(), &f)?;
    let mut g = UniPoly::gcd(&f, &(&xp - &x));
    let mut roots = Vec::new();
    if g.coeff(0).is_zero() && !g.is_zero() {
        roots.push(field.zero());
        g = g.div_exact(&x)?;
    }
    if g.degree().unwrap_or(0) > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed_for(&g));
        split_linear_factors(&g, &mut rng, &mut roots)?;
    }
    roots.sort();
    Ok(roots)
}

fn seed_for(g: &UniPoly) -> u64 {
    let mut h = DefaultHasher::new();
    g.hash(&mut h);
    h.finish()
}

/// Equal-degree splitting of a squarefree product of distinct linear
/// factors with nonzero roots.
fn split_linear_factors(g: &UniPoly, rng: &mut ChaCha8Rng, out: &mut Vec<Felt>) -> Result<()> {
    let field = g.field();
    match g.degree() {
        None | Some(0) => return Ok(()),
        Some(1) => {
            // x + c  ->  -c
            let g = g.monic();
            out.push(-g.coeff(0));
            return Ok(());
        }
        _ => {}
    }
    let half = (field.modulus() - 1) / 2;
    loop {
        let a = field.elem(rng.gen_range(0..field.modulus()));
        let shifted = UniPoly::from_coeffs(field, vec![a, field.one()]);
        let h = &shifted.pow_mod(half, g)? - &UniPoly::one(field);
        let d = UniPoly::gcd(g, &h);
        let dd = d.degree().unwrap_or(0);
        if dd > 0 && dd < g.degree().unwrap() {
            let rest = g.div_exact(&d)?;
            split_linear_factors(&d, rng, out)?;
            split_linear_factors(&rest, rng, out)?;
            return Ok(());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::PrimeField;
    use proptest::prelude::*;

    #[test]
    fn quadratic_examples_mod_101() {
        let f = PrimeField::new(101).unwrap();
        let roots = distinct_roots(&UniPoly::from_ints(f, &[-82, 0, 1])).unwrap();
        assert_eq!(roots, vec![f.elem(48), f.elem(53)]);
        let roots = distinct_roots(&UniPoly::from_ints(f, &[1, 0, 1])).unwrap();
        assert_eq!(roots, vec![f.elem(10), f.elem(91)]);
        assert_eq!(distinct_roots(&UniPoly::x(f)).unwrap(), vec![f.zero()]);
        assert!(distinct_roots(&UniPoly::zero(f)).is_err());
        assert!(distinct_roots(&UniPoly::one(f)).unwrap().is_empty());
    }

    #[test]
    fn large_field_uses_splitting() {
        let f = PrimeField::new(1_000_003).unwrap();
        let want: Vec<Felt> = [0u64, 7, 12345, 999_999].iter().map(|&v| f.elem(v)).collect();
        // a repeated root plus the quadratic factor x^2 + 1
        let mut p = UniPoly::from_roots(f, &want);
        p = &p * &UniPoly::from_roots(f, &[f.elem(7)]);
        let q = UniPoly::from_ints(f, &[1, 0, 1]);
        let q_has_roots = f.int(-1).pow((1_000_003 - 1) / 2).is_one();
        p = &p * &q;
        let got = distinct_roots(&p).unwrap();
        if q_has_roots {
            assert_eq!(got.len(), 6);
        } else {
            assert_eq!(got, want);
        }
    }

    proptest! {
        #[test]
        fn agrees_with_exhaustive_search(coeffs in proptest::collection::vec(0u64..257, 1..8)) {
            let f = PrimeField::new(257).unwrap();
            let poly = UniPoly::from_coeffs(f, coeffs.iter().map(|&c| f.elem(c)).collect());
            prop_assume!(!poly.is_zero());
            let brute: Vec<Felt> = f.elements().filter(|&x| poly.eval(x).is_zero()).collect();
            prop_assert_eq!(distinct_roots(&poly).unwrap(), brute);
        }

        #[test]
        fn split_path_agrees_with_evaluation(raw in proptest::collection::vec(0u64..10007, 1..10)) {
            let f = PrimeField::new(10007).unwrap();
            let pts: Vec<Felt> = raw.iter().map(|&v| f.elem(v)).collect();
            let poly = &UniPoly::from_roots(f, &pts) * &UniPoly::from_ints(f, &[5, 0, 1]);
            let mut want: Vec<Felt> = pts.clone();
            // -5 is a square mod 10007 iff (-5)^((p-1)/2) = 1
            if f.int(-5).pow(5003).is_one() {
                want.extend(f.elements().filter(|&x| (x * x + f.elem(5)).is_zero()));
            }
            want.sort();
            want.dedup();
            let got = distinct_roots(&poly).unwrap();
            for r in &got {
                prop_assert!(poly.eval(*r).is_zero());
            }
            prop_assert_eq!(got, want);
        }
    }
}
