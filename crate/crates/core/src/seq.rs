//! The sequence pair u_t = Tr_m(g^t), v_t = Tr_m(g^{dt}) and their periodic
//! cross-correlation.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement, MAX_DEGREE};

/// Largest field for which a full O(q^2) sweep is attempted.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 14;

/// Parameter bundle (k, l) with everything derived from it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqParams {
    pub k: u32,
    pub l: u32,
    pub m: u32,
    pub q: u64,
    /// (2^{lk} + 1) / (2^l + 1)
    pub d: u64,
    /// g^{2^k - 1}
    pub r: FieldElement,
    /// r^d, a primitive cube root of unity
    pub delta: FieldElement,
    /// k - l
    pub e: u32,
}

/// Checks the integer constraints on (k, l) without touching a field.
pub fn check_kl(k: u32, l: u32) -> Result<()> {
    let bad = |why: String| Err(Error::BadParameters(why));
    if k < 3 || k.is_multiple_of(2) {
        return bad(format!("k = {k} must be odd and at least 3"));
    }
    if l == 0 || l >= k {
        return bad(format!("l = {l} must satisfy 0 < l < k = {k}"));
    }
    if l.is_multiple_of(2) {
        return bad(format!("l = {l} must be odd"));
    }
    if gcd(u64::from(k), u64::from(l)) != 1 {
        return bad(format!("gcd(k, l) = gcd({k}, {l}) must be 1"));
    }
    if 2 * k > MAX_DEGREE {
        return bad(format!("2k = {} exceeds the largest supported degree {MAX_DEGREE}", 2 * k));
    }
    Ok(())
}

impl SeqParams {
    /// Derives and validates the parameters over an existing GF(2^{2k}).
    pub fn new(ctx: &FieldCtx, k: u32, l: u32) -> Result<Self> {
        check_kl(k, l)?;
        let m = 2 * k;
        if ctx.m() != m {
            return Err(Error::BadParameters(format!(
                "field has degree {} but k = {k} needs degree {m}",
                ctx.m()
            )));
        }
        let fail = |why: String| Err(Error::InvariantFailure(why));

        let num = (1u128 << (l * k)) + 1;
        let den = (1u128 << l) + 1;
        if !num.is_multiple_of(den) {
            return fail(format!("2^l + 1 does not divide 2^(lk) + 1 for k = {k}, l = {l}"));
        }
        let d = (num / den) as u64;
        let e = k - l;
        if gcd(u64::from(e), u64::from(m)) != 2 {
            return fail(format!("gcd(k - l, m) = {} is not 2", gcd(u64::from(e), u64::from(m))));
        }

        let r = ctx.antilog((1u64 << k) - 1);
        let delta = ctx.pow(r, d);
        if ctx.square(delta) + delta + FieldElement::ONE != FieldElement::ZERO {
            return fail(format!("delta = {delta} is not a primitive cube root of unity"));
        }
        let q = ctx.q();
        let period = (q - 1) / gcd(q - 1, d);
        if period != 3 * ((1u64 << k) - 1) {
            return fail(format!("decimated period {period} is not 3(2^k - 1)"));
        }
        Ok(SeqParams { k, l, m, q, d, r, delta, e })
    }

    /// Validates (k, l), then builds GF(2^{2k}) over `modulus` (default if `None`).
    pub fn setup(k: u32, l: u32, modulus: Option<u32>) -> Result<(FieldCtx, SeqParams)> {
        check_kl(k, l)?;
        let ctx = FieldCtx::new(2 * k, modulus)?;
        let params = SeqParams::new(&ctx, k, l)?;
        Ok((ctx, params))
    }

    /// Number of shifts in a full sweep, q - 1.
    pub fn n(&self) -> u64 {
        self.q - 1
    }

    /// Minimal period of v, (q - 1) / gcd(q - 1, d).
    pub fn decimated_period(&self) -> u64 {
        self.n() / gcd(self.n(), self.d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinarySequence {
    bits: Vec<u8>,
}

impl BinarySequence {
    pub fn new(bits: Vec<u8>) -> Self {
        assert!(!bits.is_empty(), "a sequence needs at least one term");
        assert!(bits.iter().all(|&b| b <= 1));
        BinarySequence { bits }
    }

    pub fn period(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Term t, indexed modulo the period.
    #[inline]
    pub fn at(&self, t: u64) -> u8 {
        self.bits[(t % self.bits.len() as u64) as usize]
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }
}

/// u_t = Tr_m(g^t) for t = 0..q-2.
pub fn msequence(ctx: &FieldCtx) -> BinarySequence {
    BinarySequence::new((0..ctx.order()).map(|t| ctx.abs_trace(ctx.antilog(t))).collect())
}

/// v_t = Tr_m(g^{dt}), truncated to its minimal period.
pub fn decimated(ctx: &FieldCtx, params: &SeqParams) -> BinarySequence {
    let period = params.decimated_period();
    let d = params.d % ctx.order();
    BinarySequence::new(
        (0..period)
            .map(|t| ctx.abs_trace(ctx.antilog((u128::from(d) * u128::from(t) % u128::from(ctx.order())) as u64)))
            .collect(),
    )
}

/// C_tau(u, v) = sum_{t < n} (-1)^{u_{t+tau} + v_t}, indices taken modulo each period.
pub fn cross_correlation(u: &BinarySequence, v: &BinarySequence, tau: u64, n: u64) -> Result<i64> {
    if tau >= n {
        return Err(Error::ShiftOutOfRange { tau, n });
    }
    Ok((0..n).map(|t| if u.at(t + tau) ^ v.at(t) == 0 { 1 } else { -1 }).sum())
}

/// C_tau as the field sum over x != 0 of (-1)^{Tr_m(x^d + a x)}, a = g^tau.
pub fn cross_correlation_field(ctx: &FieldCtx, params: &SeqParams, tau: u64) -> Result<i64> {
    if tau >= ctx.order() {
        return Err(Error::ShiftOutOfRange { tau, n: ctx.order() });
    }
    let a = ctx.antilog(tau);
    Ok(ctx
        .nonzero_elements()
        .map(|x| {
            let y = ctx.pow(x, params.d) + ctx.mul(a, x);
            1 - 2 * i64::from(ctx.abs_trace(y))
        })
        .sum())
}

/// Exact multiset of correlation values, ascending by value.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CorrelationDistribution {
    counts: BTreeMap<i64, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributionEntry {
    pub value: i64,
    pub count: u64,
}

impl CorrelationDistribution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_counts(entries: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut dist = Self::new();
        for (value, count) in entries {
            dist.add_count(value, count);
        }
        dist
    }

    pub fn add(&mut self, value: i64) {
        self.add_count(value, 1);
    }

    fn add_count(&mut self, value: i64, count: u64) {
        if count > 0 {
            *self.counts.entry(value).or_insert(0) += count;
        }
    }

    /// Pointwise addition of counts.
    pub fn merge(mut self, other: CorrelationDistribution) -> Self {
        for (value, count) in other.counts {
            self.add_count(value, count);
        }
        self
    }

    pub fn count(&self, value: i64) -> u64 {
        self.counts.get(&value).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        self.counts.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.counts.iter().map(|(&v, &c)| (v, c))
    }

    pub fn entries(&self) -> Vec<DistributionEntry> {
        self.iter().map(|(value, count)| DistributionEntry { value, count }).collect()
    }

    /// The same multiset with every value shifted by `offset`.
    pub fn shifted(&self, offset: i64) -> Self {
        Self::from_counts(self.iter().map(|(v, c)| (v + offset, c)))
    }
}

impl FromIterator<i64> for CorrelationDistribution {
    fn from_iter<I: IntoIterator<Item = i64>>(iter: I) -> Self {
        let mut dist = Self::new();
        for v in iter {
            dist.add(v);
        }
        dist
    }
}

impl Serialize for CorrelationDistribution {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CorrelationDistribution {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<DistributionEntry>::deserialize(deserializer)?;
        Ok(Self::from_counts(entries.into_iter().map(|e| (e.value, e.count))))
    }
}

/// Bit-packed u (two periods) and v (stretched to q - 1 terms), so each
/// shift costs about n / 64 popcounts.
pub struct CorrelationSweep {
    n: u64,
    u_words: Vec<u64>,
    v_words: Vec<u64>,
}

fn pack(bits: impl Iterator<Item = u8>, len: u64) -> Vec<u64> {
    let mut words = vec![0u64; len.div_ceil(64) as usize + 1];
    for (i, b) in bits.enumerate() {
        words[i / 64] |= u64::from(b) << (i % 64);
    }
    words
}

impl CorrelationSweep {
    pub fn new(u: &BinarySequence, v: &BinarySequence, n: u64) -> Self {
        let u_words = pack((0..2 * n).map(|t| u.at(t)), 2 * n);
        let v_words = pack((0..n).map(|t| v.at(t)), n);
        CorrelationSweep { n, u_words, v_words }
    }

    pub fn for_params(ctx: &FieldCtx, params: &SeqParams) -> Self {
        Self::new(&msequence(ctx), &decimated(ctx, params), params.n())
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    #[inline]
    fn u_window(&self, offset: u64) -> u64 {
        let w = (offset / 64) as usize;
        let s = offset % 64;
        if s == 0 {
            self.u_words[w]
        } else {
            (self.u_words[w] >> s) | (self.u_words[w + 1] << (64 - s))
        }
    }

    pub fn correlation(&self, tau: u64) -> Result<i64> {
        if tau >= self.n {
            return Err(Error::ShiftOutOfRange { tau, n: self.n });
        }
        let full = (self.n / 64) as usize;
        let mut disagree = 0u64;
        for i in 0..full {
            disagree += u64::from((self.u_window(tau + 64 * i as u64) ^ self.v_words[i]).count_ones());
        }
        let rest = self.n % 64;
        if rest > 0 {
            let mask = (1u64 << rest) - 1;
            let x = (self.u_window(tau + 64 * full as u64) ^ self.v_words[full]) & mask;
            disagree += u64::from(x.count_ones());
        }
        Ok(self.n as i64 - 2 * disagree as i64)
    }

    /// Distribution over the given shifts. Runs on the current rayon pool;
    /// the result does not depend on how the shifts are partitioned.
    pub fn distribution_over(&self, shifts: &[u64]) -> Result<CorrelationDistribution> {
        shifts
            .par_iter()
            .try_fold(CorrelationDistribution::new, |mut acc, &tau| {
                acc.add(self.correlation(tau)?);
                Ok(acc)
            })
            .try_reduce(CorrelationDistribution::new, |a, b| Ok(a.merge(b)))
    }

    pub fn full_distribution(&self) -> CorrelationDistribution {
        (0..self.n)
            .into_par_iter()
            .fold(CorrelationDistribution::new, |mut acc, tau| {
                acc.add(self.correlation(tau).expect("tau < n"));
                acc
            })
            .reduce(CorrelationDistribution::new, CorrelationDistribution::merge)
    }

    /// All q - 1 correlation values, indexed by shift.
    pub fn all(&self) -> Vec<i64> {
        (0..self.n).into_par_iter().map(|tau| self.correlation(tau).expect("tau < n")).collect()
    }
}

/// Exact cross-correlation distribution over all q - 1 shifts.
pub fn distribution(ctx: &FieldCtx, params: &SeqParams) -> Result<CorrelationDistribution> {
    if params.q > EXHAUSTIVE_LIMIT {
        return Err(Error::TooLargeForExhaustive { q: params.q, limit: EXHAUSTIVE_LIMIT });
    }
    Ok(CorrelationSweep::for_params(ctx, params).full_distribution())
}
