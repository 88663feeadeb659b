//! Sparse polynomials in the power/Laurent basis and in the Chebyshev basis
//! of the first kind, with the transforms between them.

use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::scalar::{Felt, PrimeField};

/// Basis in which the terms of a [`SparsePoly`] are expressed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// `c * x^d`, `d` any integer.
    Power,
    /// `c * T_d(x)`, `d >= 0`.
    Chebyshev1,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Power => "power",
            Basis::Chebyshev1 => "cheb1",
        }
    }

    pub fn parse(s: &str) -> Option<Basis> {
        match s {
            "power" => Some(Basis::Power),
            "cheb1" => Some(Basis::Chebyshev1),
            _ => None,
        }
    }
}

/// A sparse polynomial: terms sorted by strictly increasing degree, all
/// coefficients nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    field: PrimeField,
    basis: Basis,
    terms: Vec<(i64, Felt)>,
}

impl SparsePoly {
    pub fn zero(field: PrimeField, basis: Basis) -> Self {
        SparsePoly { field, basis, terms: Vec::new() }
    }

    /// Builds a polynomial from arbitrary `(degree, coefficient)` pairs.
    /// Repeated degrees are summed and zero coefficients dropped.
    pub fn new(field: PrimeField, basis: Basis, terms: impl IntoIterator<Item = (i64, Felt)>) -> Result<Self> {
        let mut terms: Vec<(i64, Felt)> = terms.into_iter().collect();
        if let Some(&(_, c)) = terms.iter().find(|(_, c)| c.field() != field) {
            return Err(Error::FieldMismatch(field.modulus(), c.field().modulus()));
        }
        if basis == Basis::Chebyshev1 && terms.iter().any(|&(d, _)| d < 0) {
            return Err(invalid("Chebyshev terms must have non-negative degree"));
        }
        terms.sort_by_key(|&(d, _)| d);
        let mut merged: Vec<(i64, Felt)> = Vec::with_capacity(terms.len());
        for (d, c) in terms {
            match merged.last_mut() {
                Some((ld, lc)) if *ld == d => *lc += c,
                _ => merged.push((d, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        Ok(SparsePoly { field, basis, terms: merged })
    }

    /// Convenience constructor from signed integer coefficients.
    pub fn from_ints(field: PrimeField, basis: Basis, terms: &[(i64, i64)]) -> Result<Self> {
        Self::new(field, basis, terms.iter().map(|&(d, c)| (d, field.int(c))))
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn basis(&self) -> Basis {
        self.basis
    }

    #[inline]
    pub fn terms(&self) -> &[(i64, Felt)] {
        &self.terms
    }

    /// Number of nonzero terms.
    #[inline]
    pub fn sparsity(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `|degree|`, 0 for the zero polynomial.
    pub fn max_abs_degree(&self) -> u64 {
        self.terms.iter().map(|(d, _)| d.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn coeff(&self, degree: i64) -> Felt {
        self.terms
            .binary_search_by_key(&degree, |&(d, _)| d)
            .map(|k| self.terms[k].1)
            .unwrap_or_else(|_| self.field.zero())
    }

    /// Evaluates in whichever basis the polynomial is expressed.
    pub fn eval(&self, x: Felt) -> Result<Felt> {
        match self.basis {
            Basis::Power => self.eval_power(x),
            Basis::Chebyshev1 => Ok(self.eval_chebyshev(x)),
        }
    }

    /// `sum c_j x^{d_j}`; negative degrees at `x = 0` are a pole.
    pub fn eval_power(&self, x: Felt) -> Result<Felt> {
        debug_assert_eq!(self.basis, Basis::Power);
        let mut inv = None;
        let mut acc = self.field.zero();
        for &(d, c) in &self.terms {
            let xd = if d >= 0 {
                x.pow(d as u64)
            } else {
                if inv.is_none() {
                    inv = Some(x.inv().map_err(|_| Error::PoleAtZero)?);
                }
                inv.unwrap().pow(d.unsigned_abs())
            };
            acc += c * xd;
        }
        Ok(acc)
    }

    /// `sum c_j T_{d_j}(x)`, each `T_d` by binary powering of the 2x2
    /// three-term recurrence matrix.
    pub fn eval_chebyshev(&self, x: Felt) -> Felt {
        debug_assert_eq!(self.basis, Basis::Chebyshev1);
        self.terms.iter().fold(self.field.zero(), |acc, &(d, c)| acc + c * chebyshev_t(d.unsigned_abs(), x))
    }

    /// `g(y) = f((y + 1/y)/2) = sum (c_j/2)(y^{d_j} + y^{-d_j})`; a degree-0
    /// term stays the single constant `c_0`.
    pub fn cheb_to_laurent(&self) -> SparsePoly {
        debug_assert_eq!(self.basis, Basis::Chebyshev1);
        let half = self.field.half();
        let mut terms = Vec::with_capacity(2 * self.terms.len());
        for &(d, c) in &self.terms {
            if d == 0 {
                terms.push((0, c));
            } else {
                terms.push((d, c * half));
                terms.push((-d, c * half));
            }
        }
        SparsePoly::new(self.field, Basis::Power, terms).expect("valid Laurent terms")
    }

    /// Inverse of [`cheb_to_laurent`](Self::cheb_to_laurent); `None` if the
    /// Laurent polynomial is not symmetric under `y -> 1/y`.
    pub fn laurent_sym_to_cheb(&self) -> Option<SparsePoly> {
        debug_assert_eq!(self.basis, Basis::Power);
        let two = self.field.elem(2);
        let mut terms = Vec::new();
        for &(d, c) in &self.terms {
            if self.coeff(-d) != c {
                return None;
            }
            match d {
                0 => terms.push((0, c)),
                d if d > 0 => terms.push((d, two * c)),
                _ => {}
            }
        }
        Some(SparsePoly::new(self.field, Basis::Chebyshev1, terms).expect("valid Chebyshev terms"))
    }
}

/// `T_d(x)` via `[T_d, T_{d+1}]^T = [[0, 1], [-1, 2x]]^d [1, x]^T`.
pub fn chebyshev_t(d: u64, x: Felt) -> Felt {
    let f = x.field();
    let (zero, one) = (f.zero(), f.one());
    type M = [[Felt; 2]; 2];
    let mul = |a: &M, b: &M| -> M {
        [
            [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
        ]
    };
    let mut base: M = [[zero, one], [-one, f.elem(2) * x]];
    let mut acc: M = [[one, zero], [zero, one]];
    let mut e = d;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        base = mul(&base, &base);
        e >>= 1;
    }
    acc[0][0] + acc[0][1] * x
}

/// Chebyshev expansion of `x^d`:
/// `x^d = 2^{1-d} sum_{j = d mod 2} C(d, (d-j)/2) T_j`, with `T_0` weighted by 1/2.
pub fn power_to_cheb(d: u64, field: PrimeField) -> Result<SparsePoly> {
    if d >= field.modulus() {
        return Err(invalid("x^d expansion needs p > d"));
    }
    let binom = |n: u64, k: u64| -> Felt {
        (0..k).fold(field.one(), |acc, i| acc * field.elem(n - i) * field.elem(i + 1).inv().expect("i + 1 < p"))
    };
    let scale = field.half().pow(d).pow(1) * field.elem(2);
    let mut terms = Vec::new();
    let mut j = d % 2;
    while j <= d {
        let mut c = scale * binom(d, (d - j) / 2);
        if j == 0 {
            c *= field.half();
        }
        terms.push((j as i64, c));
        j += 2;
    }
    SparsePoly::new(field, Basis::Chebyshev1, terms)
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let var = match self.basis {
            Basis::Power => "x^",
            Basis::Chebyshev1 => "T",
        };
        let parts: Vec<String> = self.terms.iter().map(|(d, c)| format!("{c}*{var}{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn construction_canonicalizes() {
        let f = gf(101);
        let p = SparsePoly::from_ints(f, Basis::Power, &[(3, 1), (-2, 5), (3, 100), (1, 0)]).unwrap();
        assert_eq!(p.terms(), &[(-2, f.elem(5))]);
        assert!(SparsePoly::from_ints(f, Basis::Chebyshev1, &[(-1, 1)]).is_err());
    }

    #[test]
    fn power_evaluation_examples() {
        let f = gf(101);
        let p = SparsePoly::from_ints(f, Basis::Power, &[(2, 3)]).unwrap();
        assert_eq!(p.eval_power(f.elem(4)).unwrap().residue(), 48);
        assert_eq!(SparsePoly::zero(f, Basis::Power).eval_power(f.elem(9)).unwrap(), f.zero());
        let q = SparsePoly::from_ints(f, Basis::Power, &[(-1, 2), (1, 1)]).unwrap();
        assert_eq!(q.eval_power(f.elem(2)).unwrap().residue(), 3);
        assert_eq!(q.eval_power(f.zero()), Err(Error::PoleAtZero));
    }

    #[test]
    fn chebyshev_evaluation_examples() {
        let f = gf(101);
        let t2 = SparsePoly::from_ints(f, Basis::Chebyshev1, &[(2, 1)]).unwrap();
        assert_eq!(t2.eval_chebyshev(f.elem(3)).residue(), 17);
        let t0 = SparsePoly::from_ints(f, Basis::Chebyshev1, &[(0, 1)]).unwrap();
        assert_eq!(t0.eval_chebyshev(f.elem(77)), f.one());
    }

    #[test]
    fn chebyshev_matches_three_term_recurrence() {
        let f = gf(10007);
        let x = f.elem(1234);
        let (mut a, mut b) = (f.one(), x);
        for d in 0..60u64 {
            assert_eq!(chebyshev_t(d, x), a, "d = {d}");
            (a, b) = (b, f.elem(2) * x * b - a);
        }
    }

    #[test]
    fn sparse_model_through_laurent_image() {
        let f = gf(10007);
        let model = SparsePoly::from_ints(f, Basis::Chebyshev1, &[(15, 1), (11, -2), (2, 1)]).unwrap();
        let g = model.cheb_to_laurent();
        for w in (3..23).map(|v| f.elem(v * 37)) {
            let x = (w + w.inv().unwrap()) * f.half();
            assert_eq!(model.eval_chebyshev(x), g.eval_power(w).unwrap());
        }
    }

    #[test]
    fn laurent_transform_examples() {
        let f = gf(101);
        let p = SparsePoly::from_ints(f, Basis::Chebyshev1, &[(3, 4)]).unwrap();
        let g = p.cheb_to_laurent();
        assert_eq!(g, SparsePoly::from_ints(f, Basis::Power, &[(-3, 2), (3, 2)]).unwrap());
        assert_eq!(g.laurent_sym_to_cheb().unwrap(), p);

        let c = SparsePoly::from_ints(f, Basis::Chebyshev1, &[(0, 5)]).unwrap();
        assert_eq!(c.cheb_to_laurent(), SparsePoly::from_ints(f, Basis::Power, &[(0, 5)]).unwrap());

        let q = SparsePoly::from_ints(f, Basis::Chebyshev1, &[(2, 1), (0, 6)]).unwrap();
        assert_eq!(q.cheb_to_laurent(), SparsePoly::from_ints(f, Basis::Power, &[(-2, 51), (0, 6), (2, 51)]).unwrap());

        assert_eq!(
            SparsePoly::zero(f, Basis::Power).laurent_sym_to_cheb().unwrap(),
            SparsePoly::zero(f, Basis::Chebyshev1)
        );
        let asym = SparsePoly::from_ints(f, Basis::Power, &[(2, 1), (-2, 3)]).unwrap();
        assert!(asym.laurent_sym_to_cheb().is_none());
    }

    #[test]
    fn power_to_cheb_small_cases() {
        let f = gf(101);
        let h = f.half();
        assert_eq!(power_to_cheb(2, f).unwrap(), SparsePoly::new(f, Basis::Chebyshev1, [(0, h), (2, h)]).unwrap());
        assert_eq!(power_to_cheb(0, f).unwrap(), SparsePoly::from_ints(f, Basis::Chebyshev1, &[(0, 1)]).unwrap());
        let q = h * h;
        assert_eq!(
            power_to_cheb(3, f).unwrap(),
            SparsePoly::new(f, Basis::Chebyshev1, [(1, f.elem(3) * q), (3, q)]).unwrap()
        );
    }

    #[test]
    fn power_to_cheb_evaluates_to_monomial() {
        let f = gf(10007);
        for d in 0..=24u64 {
            let c = power_to_cheb(d, f).unwrap();
            for x in (1..=20).map(|v| f.elem(v * 491 + 3)) {
                assert_eq!(c.eval_chebyshev(x), x.pow(d), "d = {d}");
            }
        }
    }

    fn arb_cheb() -> impl Strategy<Value = SparsePoly> {
        proptest::collection::vec((0i64..200, 1u64..10007), 0..6).prop_map(|terms| {
            let f = PrimeField::new(10007).unwrap();
            SparsePoly::new(f, Basis::Chebyshev1, terms.into_iter().map(|(d, c)| (d, f.elem(c)))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn laurent_identity(p in arb_cheb(), w in 1u64..10007) {
            let f = p.field();
            let w = f.elem(w);
            let x = (w + w.inv().unwrap()) * f.half();
            prop_assert_eq!(p.eval_chebyshev(x), p.cheb_to_laurent().eval_power(w).unwrap());
        }

        #[test]
        fn laurent_round_trip(p in arb_cheb()) {
            prop_assert_eq!(p.cheb_to_laurent().laurent_sym_to_cheb().unwrap(), p);
        }

        #[test]
        fn t_d_of_folded_point(d in 0u64..=50, y in 1u64..10007) {
            let f = PrimeField::new(10007).unwrap();
            let y = f.elem(y);
            let yi = y.inv().unwrap();
            let x = (y + yi) * f.half();
            prop_assert_eq!(chebyshev_t(d, x), (y.pow(d) + yi.pow(d)) * f.half());
        }
    }
}
