//! Bounded discrete logarithm by baby-step giant-step.

use std::collections::HashMap;

use super::field::Felt;
use crate::error::{invalid, Result};

/// Finds `delta` with `|delta| <= bound` and `w^delta = rho`.
///
/// Returns `Ok(None)` when no exponent in the window works. When `w` has
/// order at least `2*bound + 1` the answer is unique. Every returned value
/// has been checked by re-exponentiation.
pub fn integer_log(bound: u64, w: Felt, rho: Felt) -> Result<Option<i64>> {
    if bound == 0 {
        return Err(invalid("the exponent bound must be positive"));
    }
    if w.is_zero() {
        return Err(invalid("logarithm base must be nonzero"));
    }
    if rho.is_zero() {
        return Err(invalid("logarithm of zero"));
    }
    // shift the window [-bound, bound] to [0, 2*bound]: w^e = rho * w^bound
    let width = 2 * bound + 1;
    let m = (width as f64).sqrt().ceil() as u64;
    let mut baby: HashMap<Felt, u64> = HashMap::with_capacity(m as usize);
    let mut cur = w.field().one();
    for j in 0..m {
        baby.entry(cur).or_insert(j);
        cur *= w;
    }
    let giant = w.pow(m).inv()?;
    let mut gamma = rho * w.pow(bound);
    for k in 0..=m {
        if let Some(&j) = baby.get(&gamma) {
            let e = k * m + j;
            if e < width {
                let delta = e as i64 - bound as i64;
                if w.powi(delta)? == rho {
                    return Ok(Some(delta));
                }
            }
        }
        gamma *= giant;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::PrimeField;
    use proptest::prelude::*;

    #[test]
    fn examples_mod_101() {
        let f = PrimeField::new(101).unwrap();
        let w = f.elem(2);
        assert_eq!(integer_log(10, w, f.elem(14)).unwrap(), Some(10));
        assert_eq!(integer_log(10, w, f.one()).unwrap(), Some(0));
        assert_eq!(integer_log(10, w, f.elem(38)).unwrap(), Some(-3));
        assert_eq!(integer_log(3, w, f.elem(14)).unwrap(), None);
        assert!(integer_log(10, w, f.zero()).is_err());
    }

    proptest! {
        #[test]
        fn recovers_every_exponent_in_window(delta in -2000i64..=2000) {
            let f = PrimeField::new(10007).unwrap();
            // 5 generates GF(10007)^*
            let w = f.elem(5);
            let rho = w.powi(delta).unwrap();
            prop_assert_eq!(integer_log(2000, w, rho).unwrap(), Some(delta));
        }
    }
}
