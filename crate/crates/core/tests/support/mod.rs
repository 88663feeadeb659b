//! Reference implementations used to cross-check the library: symbolic
//! cofactor expansion, exhaustive system solving and naive evaluation.

#![allow(dead_code)]

use spinterp::{Basis, BiPoly, Felt, PrimeField, SparsePoly};

/// Matrix entries: constants, `α₁` or `α₂` as bivariate polynomials.
pub type SymMatrix = Vec<Vec<BiPoly>>;

pub fn constant(c: Felt) -> BiPoly {
    BiPoly::from_terms(c.field(), [((0, 0), c)])
}

pub fn alpha1(f: PrimeField) -> BiPoly {
    BiPoly::from_terms(f, [((1, 0), f.one())])
}

pub fn alpha2(f: PrimeField) -> BiPoly {
    BiPoly::from_terms(f, [((0, 1), f.one())])
}

/// Laplace expansion along the first row.
pub fn cofactor_det(m: &SymMatrix) -> BiPoly {
    let n = m.len();
    let field = m[0][0].field();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = BiPoly::zero(field);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: SymMatrix = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = &m[0][j] * &cofactor_det(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Coefficients of a bivariate polynomial that only involves `α₁`.
pub fn as_univariate(p: &BiPoly) -> Vec<Felt> {
    let field = p.field();
    let deg = p.degree_in(spinterp::Var::First).map_or(0, |d| d as usize + 1);
    let mut out = vec![field.zero(); deg];
    for ((i, j), c) in p.terms() {
        assert_eq!(j, 0, "unexpected α₂ term");
        out[i as usize] = c;
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

/// All common zeros by trying every point of the plane.
pub fn exhaustive_solutions(d1: &BiPoly, d2: &BiPoly) -> Vec<(Felt, Felt)> {
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

/// `x^d` by repeated multiplication, negative powers through the inverse.
fn naive_pow(x: Felt, d: i64) -> Option<Felt> {
    let base = if d < 0 { x.inv().ok()? } else { x };
    let mut acc = x.field().one();
    for _ in 0..d.unsigned_abs() {
        acc *= base;
    }
    Some(acc)
}

/// `T_d(x)` by the three-term recurrence.
fn naive_cheb(x: Felt, d: u64) -> Felt {
    let f = x.field();
    let (mut prev, mut cur) = (f.one(), x);
    if d == 0 {
        return prev;
    }
    for _ in 1..d {
        let next = f.elem(2) * x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Evaluation independent of the library's evaluator.
pub fn naive_eval(p: &SparsePoly, x: Felt) -> Option<Felt> {
    let mut acc = p.field().zero();
    for &(d, c) in p.terms() {
        let v = match p.basis() {
            Basis::Power => naive_pow(x, d)?,
            Basis::Chebyshev1 => naive_cheb(x, d as u64),
        };
        acc += c * v;
    }
    Some(acc)
}
