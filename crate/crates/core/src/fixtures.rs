//! A worked non-uniqueness example: a sequence of 11 Chebyshev-point values
//! over GF(13) that two different 2-sparse polynomials each match up to a
//! single error.
//!
//! With `t = B = 2`, `E = 1` and `m = 2t(2E+1) = 12`, take `ω` a primitive
//! 12th root of unity in GF(13) and `γ_i = (ω^i + ω^-i)/2`. Then
//! `f1 = (T_0 + T_6)/2` and `f2 = -(T_3 + T_9)/2` take the values
//! `(0,1,0,1,0,1,0,1,0,1,0)` and `(0,1,0,-1,0,1,0,-1,0,1,0)` at
//! `γ_1..γ_11`, and the recorded sequence `(0,1,0,1,0,1,0,-1,0,1,0)` is one
//! error away from both. The points repeat (`γ_i = γ_{12-i}`), so this lives
//! at the level of sequences rather than a black box.

use std::collections::BTreeMap;

use crate::blackbox::Instance;
use crate::scalar::{Felt, PrimeField};
use crate::sparse::{Basis, SparsePoly};

pub struct NonUniqueExample {
    pub field: PrimeField,
    pub omega: Felt,
    pub b: usize,
    pub e: usize,
    /// `γ_1, ..., γ_11`.
    pub points: Vec<Felt>,
    pub values: Vec<Felt>,
    pub f1: SparsePoly,
    pub f2: SparsePoly,
}

pub fn non_unique_example() -> NonUniqueExample {
    let field = PrimeField::new(13).expect("13 is prime");
    // 2 generates GF(13)^*, so it has order 12
    let omega = field.elem(2);
    let points: Vec<Felt> = (1..=11u64)
        .map(|i| {
            let wi = omega.pow(i);
            (wi + wi.inv().expect("nonzero")) * field.half()
        })
        .collect();
    let values = [0, 1, 0, 1, 0, 1, 0, -1, 0, 1, 0].iter().map(|&v| field.int(v)).collect();
    let h = field.half();
    let f1 = SparsePoly::new(field, Basis::Chebyshev1, [(0, h), (6, h)]).expect("valid terms");
    let f2 = SparsePoly::new(field, Basis::Chebyshev1, [(3, -h), (9, -h)]).expect("valid terms");
    NonUniqueExample { field, omega, b: 2, e: 1, points, values, f1, f2 }
}

impl NonUniqueExample {
    /// Positions (1-based) where `f` disagrees with the sequence.
    pub fn mismatches(&self, f: &SparsePoly) -> Vec<usize> {
        self.points
            .iter()
            .zip(&self.values)
            .enumerate()
            .filter(|(_, (&x, &v))| f.eval_chebyshev(x) != v)
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// The example as an instance whose transcript records the sequence.
    pub fn instance(&self) -> Instance {
        Instance {
            field: self.field,
            basis: Basis::Chebyshev1,
            b: self.b,
            d: 9,
            e: self.e,
            seed: 0,
            hidden: self.f1.clone(),
            errors: BTreeMap::new(),
            transcript: Some(self.points.iter().copied().zip(self.values.iter().copied()).collect()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::multiplicative_order;

    #[test]
    fn both_polynomials_are_one_error_away() {
        let ex = non_unique_example();
        assert_eq!(multiplicative_order(ex.omega).unwrap(), 12);
        assert_eq!(ex.mismatches(&ex.f1), vec![8]);
        assert_eq!(ex.mismatches(&ex.f2), vec![4]);
        assert_ne!(ex.f1, ex.f2);
    }
}
