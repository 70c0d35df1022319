//! Binary exponential sums attached to the decimation d:
//!
//! * S(a)    = sum_x (-1)^{Tr_m(x^d + a x)}
//! * T(a, b) = sum_x (-1)^{Tr_m(a x^{2^l+1} + b x^{2^k+1})}
//!
//! T(a, b) is the character sum of the quadratic form
//! Q(x) = Tr_m(a x^{2^l+1} + b x^{2^k+1}); its value is pinned down by the
//! radical of the polarization B(x, y) = Q(x + y) + Q(x) + Q(y).

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::gf2::{span, BitMatrix};
use crate::seq::SeqParams;

#[inline]
fn sign(bit: u32) -> i64 {
    1 - 2 * i64::from(bit & 1)
}

#[inline]
fn parity(x: u32) -> u32 {
    x.count_ones() & 1
}

/// Which of the three standard binary quadratic forms Q is equivalent to.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FormType {
    I,
    II,
    III,
}

impl fmt::Display for FormType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormType::I => "I",
            FormType::II => "II",
            FormType::III => "III",
        })
    }
}

/// Radical of the polarized form, as a GF(2)-subspace of GF(q).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Radical {
    pub dim_gf2: u32,
    pub basis: Vec<FieldElement>,
}

impl Radical {
    pub fn elements(&self) -> Vec<FieldElement> {
        let raw: Vec<u32> = self.basis.iter().map(|b| b.bits()).collect();
        let mut all: Vec<FieldElement> = span(&raw).into_iter().map(FieldElement).collect();
        all.sort_unstable();
        all
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormReport {
    pub a: FieldElement,
    pub b: FieldElement,
    pub radical_dim_gf2: u32,
    pub radical_dim_gf4: u32,
    pub form_type: FormType,
    /// Half the codimension of the radical.
    pub v: u32,
    pub t_direct: i64,
    pub t_predicted: i64,
}

/// The three terms of 3 S(a) = T(a, 0) + T(ra, delta) + T(r^-1 a, delta^-1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreeCover {
    pub s: i64,
    pub t_a_0: i64,
    pub t_ra_delta: i64,
    pub t_rinv_a_delta_inv: i64,
    /// T(r^-1 a, delta), the variant printed with delta in place of delta^-1.
    pub t_rinv_a_delta: i64,
}

impl ThreeCover {
    pub fn holds(&self) -> bool {
        3 * self.s == self.t_a_0 + self.t_ra_delta + self.t_rinv_a_delta_inv
    }

    pub fn literal_variant_holds(&self) -> bool {
        3 * self.s == self.t_a_0 + self.t_ra_delta + self.t_rinv_a_delta
    }
}

/// Precomputed per-element tables for evaluating S and T over one field.
pub struct ExpSums<'a> {
    ctx: &'a FieldCtx,
    params: &'a SeqParams,
    /// Tr_m(x^d)
    trace_pow_d: Vec<u8>,
    /// x^{2^l + 1}
    quad_l: Vec<u32>,
    /// x^{2^k + 1}
    quad_k: Vec<u32>,
}

impl<'a> ExpSums<'a> {
    pub fn new(ctx: &'a FieldCtx, params: &'a SeqParams) -> Self {
        let el = (1u64 << params.l) + 1;
        let ek = (1u64 << params.k) + 1;
        let mut trace_pow_d = Vec::with_capacity(ctx.q() as usize);
        let mut quad_l = Vec::with_capacity(ctx.q() as usize);
        let mut quad_k = Vec::with_capacity(ctx.q() as usize);
        for x in ctx.elements() {
            trace_pow_d.push(ctx.abs_trace(ctx.pow(x, params.d)));
            quad_l.push(ctx.pow(x, el).bits());
            quad_k.push(ctx.pow(x, ek).bits());
        }
        ExpSums { ctx, params, trace_pow_d, quad_l, quad_k }
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.ctx
    }

    pub fn params(&self) -> &SeqParams {
        self.params
    }

    /// S(a) for a != 0.
    pub fn s(&self, a: FieldElement) -> Result<i64> {
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        let w = self.ctx.trace_functional(a);
        Ok(self
            .trace_pow_d
            .iter()
            .enumerate()
            .map(|(x, &t)| sign(u32::from(t) ^ parity(x as u32 & w)))
            .sum())
    }

    /// T(a, b) for a != 0 and any b.
    pub fn t(&self, a: FieldElement, b: FieldElement) -> Result<i64> {
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        let wa = self.ctx.trace_functional(a);
        let wb = self.ctx.trace_functional(b);
        Ok(self
            .quad_l
            .iter()
            .zip(&self.quad_k)
            .map(|(&xl, &xk)| sign(parity(xl & wa) ^ parity(xk & wb)))
            .sum())
    }

    /// Q_{a,b}(x) = Tr_m(a x^{2^l+1} + b x^{2^k+1}).
    pub fn quadratic_form(&self, a: FieldElement, b: FieldElement, x: FieldElement) -> u8 {
        let i = x.bits() as usize;
        let y = self.ctx.mul(a, FieldElement(self.quad_l[i])) + self.ctx.mul(b, FieldElement(self.quad_k[i]));
        self.ctx.abs_trace(y)
    }

    /// B(x, y) = Q(x + y) + Q(x) + Q(y).
    pub fn polarization(&self, a: FieldElement, b: FieldElement, x: FieldElement, y: FieldElement) -> u8 {
        self.quadratic_form(a, b, x + y) ^ self.quadratic_form(a, b, x) ^ self.quadratic_form(a, b, y)
    }

    /// Kernel of the Gram matrix of B on the polynomial basis.
    pub fn radical(&self, a: FieldElement, b: FieldElement) -> Result<Radical> {
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        let m = self.ctx.m();
        let e = |i: u32| FieldElement(1 << i);
        let diag: Vec<u8> = (0..m).map(|i| self.quadratic_form(a, b, e(i))).collect();
        let gram = BitMatrix::from_fn(m, m, |i, j| {
            i != j && self.quadratic_form(a, b, e(i) + e(j)) ^ diag[i as usize] ^ diag[j as usize] == 1
        });
        let basis: Vec<FieldElement> = gram.kernel().into_iter().map(FieldElement).collect();
        Ok(Radical { dim_gf2: basis.len() as u32, basis })
    }

    /// Kernel of x -> a x^{2^l} + a^{2^{2k-l}} x^{2^{2k-l}} + (b + b^{2^k}) x^{2^k},
    /// the linearized polynomial with B(x, y) = Tr_m(y L(x)).
    pub fn linearized_kernel(&self, a: FieldElement, b: FieldElement) -> Vec<FieldElement> {
        let ctx = self.ctx;
        let (k, l, m) = (self.params.k, self.params.l, self.ctx.m());
        let a_conj = ctx.frobenius(a, m - l);
        let b_sum = b + ctx.frobenius(b, k);
        let map = |x: FieldElement| {
            ctx.mul(a, ctx.frobenius(x, l)) + ctx.mul(a_conj, ctx.frobenius(x, m - l)) + ctx.mul(b_sum, ctx.frobenius(x, k))
        };
        let images: Vec<u32> = (0..m).map(|i| map(FieldElement(1 << i)).bits()).collect();
        let matrix = BitMatrix::from_fn(m, m, |row, col| images[col as usize] >> row & 1 == 1);
        let mut all: Vec<FieldElement> = span(&matrix.kernel()).into_iter().map(FieldElement).collect();
        all.sort_unstable();
        all
    }

    /// Standard form of Q_{a,b} from the direct sum and the radical
    /// dimension; works for any b.
    pub fn form_type(&self, t_direct: i64, dim_gf2: u32) -> Result<(FormType, u32)> {
        let m = self.ctx.m();
        if dim_gf2 > m || (m - dim_gf2) % 2 == 1 {
            return Err(Error::UnexpectedDimension(dim_gf2));
        }
        let v = (m - dim_gf2) / 2;
        let magnitude = 1i64 << (m - v);
        match t_direct {
            0 => Ok((FormType::II, v)),
            t if t == magnitude => Ok((FormType::I, v)),
            t if t == -magnitude => Ok((FormType::III, v)),
            t => Err(Error::PredictionMismatch { direct: t, predicted: magnitude }),
        }
    }

    /// Value of T(a, b) implied by the GF(4)-dimension of the radical.
    pub fn predicted_t(&self, dim_gf4: u32) -> Result<i64> {
        let k = self.params.k;
        match dim_gf4 {
            0 => Ok(-(1i64 << k)),
            1 => Ok(1i64 << (k + 1)),
            2 => Ok(-(1i64 << (k + 2))),
            d => Err(Error::UnexpectedDimension(2 * d)),
        }
    }

    fn in_delta_family(&self, b: FieldElement) -> bool {
        let delta = self.params.delta;
        b.is_zero() || b == delta || b == self.ctx.square(delta)
    }

    /// Full report for b in {0, delta, delta^2}.
    pub fn classify(&self, a: FieldElement, b: FieldElement) -> Result<FormReport> {
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        if !self.in_delta_family(b) {
            return Err(Error::BadParameters(format!("b = {b} is not one of 0, delta, delta^2")));
        }
        let t_direct = self.t(a, b)?;
        self.classify_with(a, b, t_direct)
    }

    /// As [`ExpSums::classify`], with T(a, b) already evaluated.
    pub fn classify_with(&self, a: FieldElement, b: FieldElement, t_direct: i64) -> Result<FormReport> {
        if !self.in_delta_family(b) {
            return Err(Error::BadParameters(format!("b = {b} is not one of 0, delta, delta^2")));
        }
        let radical = self.radical(a, b)?;
        if radical.dim_gf2 % 2 == 1 {
            return Err(Error::UnexpectedDimension(radical.dim_gf2));
        }
        let dim_gf4 = radical.dim_gf2 / 2;
        let t_predicted = self.predicted_t(dim_gf4)?;
        if t_direct != t_predicted {
            return Err(Error::PredictionMismatch { direct: t_direct, predicted: t_predicted });
        }
        let (form_type, v) = self.form_type(t_direct, radical.dim_gf2)?;
        Ok(FormReport {
            a,
            b,
            radical_dim_gf2: radical.dim_gf2,
            radical_dim_gf4: dim_gf4,
            form_type,
            v,
            t_direct,
            t_predicted,
        })
    }

    pub fn three_cover(&self, a: FieldElement) -> Result<ThreeCover> {
        let ctx = self.ctx;
        let (r, delta) = (self.params.r, self.params.delta);
        let r_inv = ctx.inv(r)?;
        let delta_inv = ctx.inv(delta)?;
        Ok(ThreeCover {
            s: self.s(a)?,
            t_a_0: self.t(a, FieldElement::ZERO)?,
            t_ra_delta: self.t(ctx.mul(r, a), delta)?,
            t_rinv_a_delta_inv: self.t(ctx.mul(r_inv, a), delta_inv)?,
            t_rinv_a_delta: self.t(ctx.mul(r_inv, a), delta)?,
        })
    }

    pub fn three_cover_check(&self, a: FieldElement) -> Result<bool> {
        Ok(self.three_cover(a)?.holds())
    }

    /// sum_x (-1)^{Tr_m(a x^h)} for h | 2^k + 1.
    pub fn gauss_sum(&self, h: u64, a: FieldElement) -> Result<i64> {
        self.check_h(h)?;
        if a.is_zero() {
            return Err(Error::ZeroInput);
        }
        let ctx = self.ctx;
        let w = ctx.trace_functional(a);
        Ok(ctx.elements().map(|x| sign(parity(ctx.pow(x, h).bits() & w))).sum())
    }

    /// Gauss sums for one h over many a, sharing the x^h table.
    pub fn gauss_sums(&self, h: u64, points: &[FieldElement]) -> Result<Vec<i64>> {
        self.check_h(h)?;
        let ctx = self.ctx;
        let powers: Vec<u32> = ctx.elements().map(|x| ctx.pow(x, h).bits()).collect();
        points
            .par_iter()
            .map(|&a| {
                if a.is_zero() {
                    return Err(Error::ZeroInput);
                }
                let w = ctx.trace_functional(a);
                Ok(powers.iter().map(|&y| sign(parity(y & w))).sum())
            })
            .collect()
    }

    /// (h - 1) 2^k if a is an h-th power of g, otherwise -2^k.
    pub fn gauss_sum_predicted(&self, h: u64, a: FieldElement) -> Result<i64> {
        self.check_h(h)?;
        let k = self.params.k;
        let step = crate::arith::gcd(h, self.ctx.order());
        if self.ctx.dlog(a)? % step == 0 {
            Ok((h as i64 - 1) << k)
        } else {
            Ok(-(1i64 << k))
        }
    }

    fn check_h(&self, h: u64) -> Result<()> {
        let bound = (1u64 << self.params.k) + 1;
        if h == 0 || !bound.is_multiple_of(h) {
            return Err(Error::BadH { h, bound });
        }
        Ok(())
    }

    /// For noncube a, returns (T(ra, delta), T(r^-1 a, delta), T(r^-1 a, delta^-1)).
    pub fn noncube_terms(&self, a: FieldElement) -> Result<(i64, i64, i64)> {
        if self.ctx.is_cube(a)? {
            return Err(Error::CubeInput);
        }
        let ctx = self.ctx;
        let (r, delta) = (self.params.r, self.params.delta);
        let r_inv = ctx.inv(r)?;
        Ok((
            self.t(ctx.mul(r, a), delta)?,
            self.t(ctx.mul(r_inv, a), delta)?,
            self.t(ctx.mul(r_inv, a), ctx.inv(delta)?)?,
        ))
    }

    /// At least one of T(ra, delta), T(r^-1 a, delta) equals -2^k.
    pub fn noncube_constraint_check(&self, a: FieldElement) -> Result<bool> {
        let (plus, minus, _) = self.noncube_terms(a)?;
        let target = -(1i64 << self.params.k);
        Ok(plus == target || minus == target)
    }
}

/// S(a); builds the tables for a single evaluation.
pub fn s_sum(ctx: &FieldCtx, params: &SeqParams, a: FieldElement) -> Result<i64> {
    ExpSums::new(ctx, params).s(a)
}

pub fn t_sum(ctx: &FieldCtx, params: &SeqParams, a: FieldElement, b: FieldElement) -> Result<i64> {
    ExpSums::new(ctx, params).t(a, b)
}

pub fn classify(ctx: &FieldCtx, params: &SeqParams, a: FieldElement, b: FieldElement) -> Result<FormReport> {
    ExpSums::new(ctx, params).classify(a, b)
}

pub fn radical(ctx: &FieldCtx, params: &SeqParams, a: FieldElement, b: FieldElement) -> Result<Radical> {
    ExpSums::new(ctx, params).radical(a, b)
}

pub fn gauss_sum(ctx: &FieldCtx, params: &SeqParams, h: u64, a: FieldElement) -> Result<i64> {
    ExpSums::new(ctx, params).gauss_sum(h, a)
}

pub fn three_cover_check(ctx: &FieldCtx, params: &SeqParams, a: FieldElement) -> Result<bool> {
    ExpSums::new(ctx, params).three_cover_check(a)
}

pub fn noncube_constraint_check(ctx: &FieldCtx, params: &SeqParams, a: FieldElement) -> Result<bool> {
    ExpSums::new(ctx, params).noncube_constraint_check(a)
}
