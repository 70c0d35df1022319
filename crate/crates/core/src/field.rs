//! Table-driven arithmetic in GF(2^m) for 2 <= m <= 20.
//!
//! Elements are packed polynomial-basis bit vectors (bit i is the coefficient
//! of X^i). The generator g is always the class of X, so the modulus must be
//! primitive; construction walks the powers of X once and fails if the walk
//! returns to 1 early.

use std::fmt;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_DEGREE: u32 = 20;

/// Lexicographically smallest primitive polynomial of each degree 2..=20,
/// leading coefficient included.
const DEFAULT_MODULI: [u32; 19] = [
    0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11d, 0x211, 0x409, 0x805, 0x1053, 0x201b, 0x402b, 0x8003,
    0x1002d, 0x20009, 0x40027, 0x80027, 0x100009,
];

/// Default modulus for degree `m`, if `m` is in the supported range.
pub fn default_modulus(m: u32) -> Option<u32> {
    if (2..=MAX_DEGREE).contains(&m) {
        Some(DEFAULT_MODULI[(m - 2) as usize])
    } else {
        None
    }
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl Add for FieldElement {
    type Output = FieldElement;

    #[inline]
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

impl AddAssign for FieldElement {
    #[inline]
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: FieldElement) {
        self.0 ^= rhs.0;
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#x}", self.0)
    }
}

/// Addition in characteristic 2.
#[inline]
pub fn add(x: FieldElement, y: FieldElement) -> FieldElement {
    x + y
}

/// Immutable GF(2^m) context holding the log/antilog tables.
#[derive(Clone)]
pub struct FieldCtx {
    m: u32,
    modulus: u32,
    /// q - 1
    order: u32,
    /// antilog, doubled so that `exp[i + j]` needs no reduction for i, j < q - 1
    exp: Vec<u32>,
    log: Vec<u32>,
    /// bit i set iff Tr_m(X^i) = 1
    trace_mask: u32,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("m", &self.m)
            .field("modulus", &format_args!("{:#x}", self.modulus))
            .finish()
    }
}

impl FieldCtx {
    /// Builds GF(2^m) over `modulus`, or over the default primitive
    /// polynomial when `modulus` is `None`.
    pub fn new(m: u32, modulus: Option<u32>) -> Result<Self> {
        if m > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(m));
        }
        if m < 2 {
            return Err(Error::BadParameters(format!("extension degree {m} is below 2")));
        }
        let modulus = modulus.unwrap_or_else(|| DEFAULT_MODULI[(m - 2) as usize]);
        let bad = Error::NonPrimitiveModulus { modulus, degree: m };
        if modulus >> m != 1 || modulus & 1 == 0 {
            return Err(bad);
        }

        let q = 1u32 << m;
        let order = q - 1;
        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![u32::MAX; q as usize];
        let mut x = 1u32;
        for t in 0..order {
            if t > 0 && x == 1 {
                return Err(bad);
            }
            exp[t as usize] = x;
            log[x as usize] = t;
            x <<= 1;
            if x & q != 0 {
                x ^= modulus;
            }
        }
        if x != 1 {
            return Err(bad);
        }
        let (lo, hi) = exp.split_at_mut(order as usize);
        hi.copy_from_slice(lo);

        let mut ctx = FieldCtx { m, modulus, order, exp, log, trace_mask: 0 };
        let mut mask = 0u32;
        for i in 0..m {
            if ctx.frobenius_sum(FieldElement(1 << i), 1, m).0 == 1 {
                mask |= 1 << i;
            }
        }
        ctx.trace_mask = mask;
        Ok(ctx)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn q(&self) -> u64 {
        1u64 << self.m
    }

    /// Size of the multiplicative group, q - 1.
    pub fn order(&self) -> u64 {
        u64::from(self.order)
    }

    pub fn generator(&self) -> FieldElement {
        FieldElement(2)
    }

    /// Multiplicative order of the generator, found by walking the tables.
    pub fn generator_order(&self) -> u64 {
        (1..=self.order).find(|&t| self.exp[t as usize] == 1).map_or(0, u64::from)
    }

    pub fn element(&self, bits: u32) -> Option<FieldElement> {
        (u64::from(bits) < self.q()).then_some(FieldElement(bits))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..(1u32 << self.m)).map(FieldElement)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (1..(1u32 << self.m)).map(FieldElement)
    }

    #[inline]
    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if x.0 == 0 || y.0 == 0 {
            return FieldElement::ZERO;
        }
        let i = self.log[x.0 as usize] + self.log[y.0 as usize];
        FieldElement(self.exp[i as usize])
    }

    #[inline]
    pub fn square(&self, x: FieldElement) -> FieldElement {
        self.mul(x, x)
    }

    /// x^n, with 0^0 = 1 and the exponent reduced mod q - 1 for nonzero x.
    pub fn pow(&self, x: FieldElement, n: u64) -> FieldElement {
        if x.0 == 0 {
            return if n == 0 { FieldElement::ONE } else { FieldElement::ZERO };
        }
        let e = (u64::from(self.log[x.0 as usize]) * (n % self.order()) % self.order()) as usize;
        FieldElement(self.exp[e])
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement> {
        if x.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let l = self.log[x.0 as usize];
        Ok(FieldElement(self.exp[((self.order - l) % self.order) as usize]))
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(x, self.inv(y)?))
    }

    /// g^t for any integer exponent t.
    #[inline]
    pub fn antilog(&self, t: u64) -> FieldElement {
        FieldElement(self.exp[(t % self.order()) as usize])
    }

    /// g^t for a possibly negative exponent.
    pub fn antilog_signed(&self, t: i64) -> FieldElement {
        self.antilog(t.rem_euclid(self.order() as i64) as u64)
    }

    pub fn dlog(&self, x: FieldElement) -> Result<u64> {
        if x.0 == 0 {
            return Err(Error::DlogOfZero);
        }
        Ok(u64::from(self.log[x.0 as usize]))
    }

    /// x^{2^s}
    #[inline]
    pub fn frobenius(&self, x: FieldElement, s: u32) -> FieldElement {
        if x.0 == 0 {
            return x;
        }
        let l = u64::from(self.log[x.0 as usize]);
        let e = (l << (s % self.m)) % self.order();
        FieldElement(self.exp[e as usize])
    }

    fn frobenius_sum(&self, x: FieldElement, j: u32, i: u32) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        let mut y = x;
        for _ in 0..i / j {
            acc += y;
            y = self.frobenius(y, j);
        }
        acc
    }

    /// Whether x lies in the subfield GF(2^i), i.e. x^{2^i} = x.
    pub fn in_subfield(&self, x: FieldElement, i: u32) -> bool {
        self.frobenius(x, i) == x
    }

    /// Relative trace Tr_{i/j}(x) = x + x^{2^j} + ... + x^{2^{i-j}}.
    pub fn trace(&self, i: u32, j: u32, x: FieldElement) -> Result<FieldElement> {
        if j == 0 || i == 0 || !i.is_multiple_of(j) || !self.m.is_multiple_of(i) {
            return Err(Error::BadTower { i, j, m: self.m });
        }
        if !self.in_subfield(x, i) {
            return Err(Error::NotInSubfield(i));
        }
        Ok(self.frobenius_sum(x, j, i))
    }

    /// Absolute trace Tr_m(x) as a bit.
    #[inline]
    pub fn abs_trace(&self, x: FieldElement) -> u8 {
        ((x.0 & self.trace_mask).count_ones() & 1) as u8
    }

    /// Mask w with Tr_m(a x) = parity(w & x) for every x.
    pub fn trace_functional(&self, a: FieldElement) -> u32 {
        (0..self.m)
            .filter(|&i| self.abs_trace(self.mul(a, FieldElement(1 << i))) == 1)
            .fold(0, |w, i| w | (1 << i))
    }

    pub fn is_cube(&self, a: FieldElement) -> Result<bool> {
        if a.0 == 0 {
            return Err(Error::ZeroInput);
        }
        if !self.order.is_multiple_of(3) {
            return Err(Error::FieldWithoutCubicStructure(self.order()));
        }
        Ok(self.log[a.0 as usize].is_multiple_of(3))
    }
}
