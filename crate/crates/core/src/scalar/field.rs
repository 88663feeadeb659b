//! Arithmetic in GF(p) for an odd prime p < 2^62.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// The prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Largest supported modulus (exclusive). Keeps sums of two residues in a `u64`.
    pub const MAX_MODULUS: u64 = 1 << 62;

    pub fn new(p: u64) -> Result<Self> {
        if !(3..Self::MAX_MODULUS).contains(&p) || !is_prime(p) {
            return Err(Error::NotAnOddPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn zero(&self) -> Felt {
        Felt { v: 0, p: self.p }
    }

    #[inline]
    pub fn one(&self) -> Felt {
        Felt { v: 1, p: self.p }
    }

    /// Reduces an unsigned integer into the field.
    #[inline]
    pub fn elem(&self, v: u64) -> Felt {
        Felt { v: v % self.p, p: self.p }
    }

    /// Reduces a signed integer into the field, so `int(-1)` is `p - 1`.
    pub fn int(&self, v: i64) -> Felt {
        let r = v.rem_euclid(self.p as i64) as u64;
        Felt { v: r, p: self.p }
    }

    /// 1/2, which exists because p is odd.
    pub fn half(&self) -> Felt {
        Felt { v: self.p.div_ceil(2), p: self.p }
    }

    /// Every element of the field in ascending residue order.
    pub fn elements(&self) -> impl Iterator<Item = Felt> + '_ {
        (0..self.p).map(move |v| Felt { v, p: self.p })
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

/// An element of a [`PrimeField`], stored as its residue in `[0, p)`.
///
/// Arithmetic operators panic when the operands come from different fields;
/// use [`Felt::checked_add`] and friends for a fallible variant.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Felt {
    // field order first so `Ord` sorts by (p, residue)
    p: u64,
    v: u64,
}

impl Felt {
    #[inline]
    pub fn residue(&self) -> u64 {
        self.v
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.v == 0
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.v == 1
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn signed(&self) -> i64 {
        if self.v > self.p / 2 {
            self.v as i64 - self.p as i64
        } else {
            self.v as i64
        }
    }

    pub fn inv(&self) -> Result<Felt> {
        if self.v == 0 {
            return Err(Error::ZeroInverse);
        }
        // extended Euclid on (v, p)
        let (mut r0, mut r1) = (self.p as i128, self.v as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        let v = t0.rem_euclid(self.p as i128) as u64;
        Ok(Felt { v, p: self.p })
    }

    /// `self^e` for a non-negative exponent.
    pub fn pow(&self, mut e: u64) -> Felt {
        let mut base = *self;
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    /// `self^e` for any integer exponent; negative exponents go through the inverse.
    pub fn powi(&self, e: i64) -> Result<Felt> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    fn same_field(&self, rhs: &Felt) -> Result<()> {
        if self.p == rhs.p {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.p, rhs.p))
        }
    }

    pub fn checked_add(self, rhs: Felt) -> Result<Felt> {
        self.same_field(&rhs)?;
        Ok(self + rhs)
    }

    pub fn checked_sub(self, rhs: Felt) -> Result<Felt> {
        self.same_field(&rhs)?;
        Ok(self - rhs)
    }

    pub fn checked_mul(self, rhs: Felt) -> Result<Felt> {
        self.same_field(&rhs)?;
        Ok(self * rhs)
    }

    pub fn checked_div(self, rhs: Felt) -> Result<Felt> {
        self.same_field(&rhs)?;
        Ok(self * rhs.inv()?)
    }
}

impl fmt::Debug for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl fmt::Display for Felt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

#[inline]
fn assert_same(a: &Felt, b: &Felt) {
    assert!(a.p == b.p, "field mismatch: p = {} and p = {}", a.p, b.p);
}

impl Add for Felt {
    type Output = Felt;
    #[inline]
    fn add(self, rhs: Felt) -> Felt {
        assert_same(&self, &rhs);
        let s = self.v + rhs.v;
        Felt { v: if s >= self.p { s - self.p } else { s }, p: self.p }
    }
}

impl Sub for Felt {
    type Output = Felt;
    #[inline]
    fn sub(self, rhs: Felt) -> Felt {
        assert_same(&self, &rhs);
        let v = if self.v >= rhs.v { self.v - rhs.v } else { self.v + self.p - rhs.v };
        Felt { v, p: self.p }
    }
}

impl Mul for Felt {
    type Output = Felt;
    #[inline]
    fn mul(self, rhs: Felt) -> Felt {
        assert_same(&self, &rhs);
        let v = ((self.v as u128 * rhs.v as u128) % self.p as u128) as u64;
        Felt { v, p: self.p }
    }
}

impl Neg for Felt {
    type Output = Felt;
    #[inline]
    fn neg(self) -> Felt {
        Felt { v: if self.v == 0 { 0 } else { self.p - self.v }, p: self.p }
    }
}

impl AddAssign for Felt {
    fn add_assign(&mut self, rhs: Felt) {
        *self = *self + rhs;
    }
}

impl SubAssign for Felt {
    fn sub_assign(&mut self, rhs: Felt) {
        *self = *self - rhs;
    }
}

impl MulAssign for Felt {
    fn mul_assign(&mut self, rhs: Felt) {
        *self = *self * rhs;
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime factors of `n` by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2u64;
    while q.saturating_mul(q) <= n {
        if n.is_multiple_of(q) {
            out.push(q);
            while n.is_multiple_of(q) {
                n /= q;
            }
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}
