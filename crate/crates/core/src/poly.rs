//! Dense univariate and bivariate polynomials over a prime field.
//!
//! These carry the minimal generators, the symbolic determinants and the
//! resultants used by the decoders. Sparse interpolants live in
//! [`crate::sparse`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{invalid, Result};
use crate::scalar::{Felt, PrimeField};

/// Dense univariate polynomial, constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: PrimeField,
    coeffs: Vec<Felt>,
}

impl UniPoly {
    pub fn zero(field: PrimeField) -> Self {
        UniPoly { field, coeffs: Vec::new() }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: Felt) -> Self {
        Self::from_coeffs(c.field(), vec![c])
    }

    /// The polynomial `x`.
    pub fn x(field: PrimeField) -> Self {
        Self::from_coeffs(field, vec![field.zero(), field.one()])
    }

    /// `c * x^d`.
    pub fn monomial(c: Felt, d: usize) -> Self {
        let field = c.field();
        let mut coeffs = vec![field.zero(); d + 1];
        coeffs[d] = c;
        Self::from_coeffs(field, coeffs)
    }

    pub fn from_coeffs(field: PrimeField, mut coeffs: Vec<Felt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    /// Convenience constructor from signed integers, constant term first.
    pub fn from_ints(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::from_coeffs(field, coeffs.iter().map(|&c| field.int(c)).collect())
    }

    /// `(x - r_1)(x - r_2)...`
    pub fn from_roots(field: PrimeField, roots: &[Felt]) -> Self {
        roots.iter().fold(Self::one(field), |acc, &r| &acc * &Self::from_coeffs(field, vec![-r, field.one()]))
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn coeffs(&self) -> &[Felt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Felt {
        self.coeffs.get(i).copied().unwrap_or_else(|| self.field.zero())
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<Felt> {
        self.coeffs.last().copied()
    }

    pub fn eval(&self, x: Felt) -> Felt {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, &c| acc * x + c)
    }

    pub fn scale(&self, c: Felt) -> Self {
        Self::from_coeffs(self.field, self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(lc.inv().expect("leading coefficient is nonzero")),
            None => self.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| c * self.field.elem(i as u64)).collect();
        Self::from_coeffs(self.field, coeffs)
    }

    /// Euclidean division. Fails only for a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = divisor.degree().ok_or_else(|| invalid("division by the zero polynomial"))?;
        let lc_inv = divisor.leading().unwrap().inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(self.field), self.clone()));
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd] * lc_inv;
            quot[k] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= c * d;
            }
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(self.field, quot), Self::from_coeffs(self.field, rem)))
    }

    pub fn rem(&self, divisor: &UniPoly) -> Result<UniPoly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Exact division; fails when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(invalid("polynomial division is not exact"));
        }
        Ok(q)
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &UniPoly) -> Result<UniPoly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Self::one(self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus)?;
            }
            base = (&base * &base).rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Lagrange interpolation through `(xs[k], ys[k])`; the nodes must be distinct.
    pub fn interpolate(field: PrimeField, xs: &[Felt], ys: &[Felt]) -> Result<UniPoly> {
        if xs.len() != ys.len() {
            return Err(invalid("interpolation needs as many values as nodes"));
        }
        // Newton divided differences
        let n = xs.len();
        let mut dd: Vec<Felt> = ys.to_vec();
        for level in 1..n {
            for k in (level..n).rev() {
                let den = xs[k] - xs[k - level];
                if den.is_zero() {
                    return Err(invalid("interpolation nodes are not distinct"));
                }
                dd[k] = (dd[k] - dd[k - 1]) * den.inv()?;
            }
        }
        let mut acc = Self::zero(field);
        for k in (0..n).rev() {
            acc = &(&acc * &Self::from_coeffs(field, vec![-xs[k], field.one()])) + &Self::constant(dd[k]);
        }
        Ok(acc)
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        UniPoly::from_coeffs(self.field, coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        UniPoly::from_coeffs(self.field, coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(self.field, out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::from_coeffs(self.field, self.coeffs.iter().map(|&c| -c).collect())
    }
}

/// Which variable of a [`BiPoly`] an operation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    First,
    Second,
}

/// Sparse bivariate polynomial: `(i, j) -> c` stands for `c * a1^i * a2^j`.
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    field: PrimeField,
    terms: BTreeMap<(u32, u32), Felt>,
}

impl BiPoly {
    pub fn zero(field: PrimeField) -> Self {
        BiPoly { field, terms: BTreeMap::new() }
    }

    pub fn from_terms(field: PrimeField, terms: impl IntoIterator<Item = ((u32, u32), Felt)>) -> Self {
        let mut p = Self::zero(field);
        for (k, c) in terms {
            p.add_term(k.0, k.1, c);
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Felt) {
        let e = self.terms.entry((i, j)).or_insert_with(|| self.field.zero());
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Felt {
        self.terms.get(&(i, j)).copied().unwrap_or_else(|| self.field.zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), Felt)> + '_ {
        self.terms.iter().map(|(&k, &c)| (k, c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn degree_in(&self, var: Var) -> Option<u32> {
        self.terms
            .keys()
            .map(|&(i, j)| match var {
                Var::First => i,
                Var::Second => j,
            })
            .max()
    }

    pub fn eval(&self, a1: Felt, a2: Felt) -> Felt {
        self.terms.iter().fold(self.field.zero(), |acc, (&(i, j), &c)| acc + c * a1.pow(i as u64) * a2.pow(j as u64))
    }

    /// Swaps the roles of the two variables.
    pub fn swap_vars(&self) -> BiPoly {
        BiPoly::from_terms(self.field, self.terms().map(|((i, j), c)| ((j, i), c)))
    }

    /// Fixes one variable at `value`, leaving a univariate polynomial in the other.
    pub fn specialize(&self, var: Var, value: Felt) -> UniPoly {
        let mut coeffs: Vec<Felt> = Vec::new();
        for (&(i, j), &c) in &self.terms {
            let (fixed, free) = match var {
                Var::First => (i, j),
                Var::Second => (j, i),
            };
            let free = free as usize;
            if coeffs.len() <= free {
                coeffs.resize(free + 1, self.field.zero());
            }
            coeffs[free] += c * value.pow(fixed as u64);
        }
        UniPoly::from_coeffs(self.field, coeffs)
    }

    /// Views `self` as a polynomial in `var` whose coefficients are
    /// univariate polynomials in the other variable (index = power of `var`).
    pub fn coefficients_in(&self, var: Var) -> Vec<UniPoly> {
        let deg = match self.degree_in(var) {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut raw = vec![Vec::<Felt>::new(); deg + 1];
        for (&(i, j), &c) in &self.terms {
            let (outer, inner) = match var {
                Var::First => (i as usize, j as usize),
                Var::Second => (j as usize, i as usize),
            };
            let slot = &mut raw[outer];
            if slot.len() <= inner {
                slot.resize(inner + 1, self.field.zero());
            }
            slot[inner] += c;
        }
        raw.into_iter().map(|c| UniPoly::from_coeffs(self.field, c)).collect()
    }

    /// Interpolates on the tensor grid `xs x ys`, where `values[a][b]` is the
    /// value at `(xs[a], ys[b])`. Degrees are below the grid sizes.
    pub fn interpolate_grid(field: PrimeField, xs: &[Felt], ys: &[Felt], values: &[Vec<Felt>]) -> Result<BiPoly> {
        if values.len() != xs.len() || values.iter().any(|row| row.len() != ys.len()) {
            return Err(invalid("grid values do not match the node counts"));
        }
        // interpolate along the second variable for each fixed first node,
        // then along the first variable coefficient by coefficient
        let rows: Vec<UniPoly> =
            values.iter().map(|row| UniPoly::interpolate(field, ys, row)).collect::<Result<_>>()?;
        let mut out = BiPoly::zero(field);
        for j in 0..ys.len() {
            let column: Vec<Felt> = rows.iter().map(|r| r.coeff(j)).collect();
            let cj = UniPoly::interpolate(field, xs, &column)?;
            for (i, &c) in cj.coeffs().iter().enumerate() {
                out.add_term(i as u32, j as u32, c);
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().rev().map(|(&(i, j), c)| format!("{c}*a1^{i}*a2^{j}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k.0, k.1, c);
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (k, c) in rhs.terms() {
            out.add_term(k.0, k.1, -c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero(self.field);
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                out.add_term(a.0 + b.0, a.1 + b.1, ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn division_round_trip() {
        let f = gf(101);
        let a = UniPoly::from_ints(f, &[5, 0, 3, 7, 1]);
        let b = UniPoly::from_ints(f, &[2, 1, 9]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.degree().is_none_or(|d| d < 2));
        assert_eq!(&(&q * &b) + &r, a);
        assert!(a.div_rem(&UniPoly::zero(f)).is_err());
    }

    #[test]
    fn gcd_of_products() {
        let f = gf(101);
        let r = |v| f.elem(v);
        let a = UniPoly::from_roots(f, &[r(3), r(5), r(7)]);
        let b = UniPoly::from_roots(f, &[r(5), r(7), r(11)]);
        assert_eq!(UniPoly::gcd(&a, &b), UniPoly::from_roots(f, &[r(5), r(7)]));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = gf(10007);
        let p = UniPoly::from_ints(f, &[-4, 17, 0, 2, 9]);
        let xs: Vec<Felt> = (0..5).map(|i| f.elem(i)).collect();
        let ys: Vec<Felt> = xs.iter().map(|&x| p.eval(x)).collect();
        assert_eq!(UniPoly::interpolate(f, &xs, &ys).unwrap(), p);
        let dup = vec![f.one(), f.one()];
        assert!(UniPoly::interpolate(f, &dup, &dup).is_err());
    }

    #[test]
    fn pow_mod_matches_repeated_multiplication() {
        let f = gf(13);
        let m = UniPoly::from_ints(f, &[3, 1, 0, 1]);
        let base = UniPoly::from_ints(f, &[1, 2]);
        let mut naive = UniPoly::one(f);
        for _ in 0..20 {
            naive = (&naive * &base).rem(&m).unwrap();
        }
        assert_eq!(base.pow_mod(20, &m).unwrap(), naive);
    }

    #[test]
    fn bivariate_grid_interpolation() {
        let f = gf(101);
        let p =
            BiPoly::from_terms(f, [((2, 0), f.int(-1)), ((1, 1), f.int(4)), ((0, 2), f.int(7)), ((0, 0), f.int(3))]);
        let xs: Vec<Felt> = (0..3).map(|i| f.elem(i)).collect();
        let vals: Vec<Vec<Felt>> = xs.iter().map(|&a| xs.iter().map(|&b| p.eval(a, b)).collect()).collect();
        assert_eq!(BiPoly::interpolate_grid(f, &xs, &xs, &vals).unwrap(), p);
        assert_eq!(p.total_degree(), Some(2));
        assert_eq!(p.specialize(Var::First, f.elem(2)).eval(f.elem(5)), p.eval(f.elem(2), f.elem(5)));
        assert_eq!(p.specialize(Var::Second, f.elem(5)).eval(f.elem(2)), p.eval(f.elem(2), f.elem(5)));
    }

    #[test]
    fn coefficients_in_second_variable() {
        let f = gf(11);
        // a2^2 - a1
        let p = BiPoly::from_terms(f, [((0, 2), f.one()), ((1, 0), f.int(-1))]);
        let cs = p.coefficients_in(Var::Second);
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[0], UniPoly::from_ints(f, &[0, -1]));
        assert!(cs[1].is_zero());
        assert_eq!(cs[2], UniPoly::one(f));
    }
}
