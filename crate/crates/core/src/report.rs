//! JSON documents and fixed-width tables for everything the CLI prints.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::field::{FieldCtx, FieldElement};
use crate::seq::{decimated, msequence, CorrelationDistribution, DistributionEntry, SeqParams};
use crate::sums::{ExpSums, FormReport};
use crate::verify::{Status, TheoreticalDistribution, VerificationReport};
use crate::Result;

/// Serialized form of a correlation distribution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistributionDoc {
    pub k: u32,
    pub l: u32,
    pub d: u64,
    pub entries: Vec<DistributionEntry>,
}

impl DistributionDoc {
    pub fn new(params: &SeqParams, dist: &CorrelationDistribution) -> Self {
        DistributionDoc { k: params.k, l: params.l, d: params.d, entries: dist.entries() }
    }

    pub fn distribution(&self) -> CorrelationDistribution {
        CorrelationDistribution::from_counts(self.entries.iter().map(|e| (e.value, e.count)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceDoc {
    pub k: u32,
    pub l: u32,
    pub d: u64,
    pub period_u: usize,
    pub period_v: usize,
    /// One character per term, '0' or '1'.
    pub u: String,
    pub v: String,
}

fn bit_string(bits: &[u8]) -> String {
    bits.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect()
}

impl SequenceDoc {
    pub fn new(ctx: &FieldCtx, params: &SeqParams) -> Self {
        let u = msequence(ctx);
        let v = decimated(ctx, params);
        SequenceDoc {
            k: params.k,
            l: params.l,
            d: params.d,
            period_u: u.period(),
            period_v: v.period(),
            u: bit_string(u.bits()),
            v: bit_string(v.bits()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumRow {
    pub a: FieldElement,
    pub log_a: u64,
    pub cube: bool,
    pub s: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumsDoc {
    pub k: u32,
    pub l: u32,
    pub d: u64,
    pub delta: FieldElement,
    pub s_values: Vec<SumRow>,
    pub forms: Vec<FormReport>,
}

impl SumsDoc {
    /// S(a) for every a != 0 and the form report for every (a, b), b in {0, delta, delta^2}.
    pub fn new(ctx: &FieldCtx, params: &SeqParams) -> Result<Self> {
        let sums = ExpSums::new(ctx, params);
        let family = [FieldElement::ZERO, params.delta, ctx.square(params.delta)];
        let mut s_values = Vec::new();
        let mut forms = Vec::new();
        for log_a in 0..ctx.order() {
            let a = ctx.antilog(log_a);
            s_values.push(SumRow { a, log_a, cube: log_a % 3 == 0, s: sums.s(a)? });
            for &b in &family {
                forms.push(sums.classify(a, b)?);
            }
        }
        Ok(SumsDoc { k: params.k, l: params.l, d: params.d, delta: params.delta, s_values, forms })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldInfoDoc {
    pub m: u32,
    pub modulus: String,
    pub q: u64,
    pub generator: FieldElement,
    pub generator_order: u64,
    pub cubes: Option<u64>,
}

impl FieldInfoDoc {
    pub fn new(ctx: &FieldCtx) -> Self {
        let cubes = ctx.order().is_multiple_of(3).then(|| ctx.order() / 3);
        FieldInfoDoc {
            m: ctx.m(),
            modulus: format!("{:#x}", ctx.modulus()),
            q: ctx.q(),
            generator: ctx.generator(),
            generator_order: ctx.generator_order(),
            cubes,
        }
    }
}

/// Row order used by the closed-form table: -1, then -1 + 2^{k+1},
/// then -1 - 2^{k+1}; any other observed values follow in ascending order.
fn table_rows(k: u32, dist: &CorrelationDistribution) -> Vec<i64> {
    let theory = [-1, -1 + (1i64 << (k + 1)), -1 - (1i64 << (k + 1))];
    let mut rows: Vec<i64> = theory.into_iter().filter(|&v| dist.count(v) > 0).collect();
    rows.extend(dist.values().filter(|v| !theory.contains(v)));
    rows
}

pub fn distribution_table(k: u32, dist: &CorrelationDistribution) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{:>8}  {:>12}", "values", "frequencies");
    for v in table_rows(k, dist) {
        let _ = writeln!(out, "{:>8}  {:>12}", v, dist.count(v));
    }
    out
}

fn theory_count(theory: &TheoreticalDistribution, value: i64) -> u64 {
    theory.as_distribution().count(value)
}

pub fn report_table(report: &VerificationReport) -> String {
    let p = &report.params;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "k = {}, l = {}, d = {}, q = {}, modulus {:#x}, mode {}",
        p.k,
        p.l,
        p.d,
        p.q,
        report.modulus,
        serde_json::to_value(report.mode).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default()
    );
    let _ = writeln!(out, "shifts evaluated: {}", report.shifts_evaluated);
    if let Some(s) = &report.sample {
        let _ = writeln!(
            out,
            "sample: seed {}, {} cube shifts, {} noncube shifts, {} lemma points",
            s.seed, s.cube_shifts, s.noncube_shifts, s.lemma_points
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "{:>8}  {:>12}  {:>12}", "values", "frequencies", "closed form");
    let mut rows = table_rows(p.k, &report.empirical);
    for v in table_rows(p.k, &report.theoretical.as_distribution()) {
        if !rows.contains(&v) {
            rows.push(v);
        }
    }
    for v in rows {
        let _ = writeln!(out, "{:>8}  {:>12}  {:>12}", v, report.empirical.count(v), theory_count(&report.theoretical, v));
    }
    let _ = writeln!(out);
    let m1 = &report.moment1;
    let m2 = &report.moment2;
    let show = |c: Option<i64>| c.map_or_else(|| "-".to_owned(), |v| v.to_string());
    let _ = writeln!(out, "{:<14}  {:>14}  {:>14}", "moment", "computed", "closed form");
    let _ = writeln!(out, "{:<14}  {:>14}  {:>14}", "sum S(a)", show(m1.computed), m1.closed_form);
    let _ = writeln!(out, "{:<14}  {:>14}  {:>14}", "sum S(a)^2", show(m2.computed), m2.closed_form);
    let _ = writeln!(out);
    let _ = writeln!(out, "{:<26}  {:<10}  {}", "check", "kind", "status");
    for c in &report.lemma_checks {
        let kind = serde_json::to_value(c.kind).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default();
        let status = match c.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skipped",
        };
        let _ = writeln!(out, "{:<26}  {:<10}  {}", c.id, kind, status);
    }
    for a in &report.annotations {
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "note {}: printed {} = {}, corrected {} = {} ({}: {})",
            a.id, a.paper_value, a.printed_count, a.corrected_value, a.corrected_count, a.status, a.evidence
        );
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "verdict: {}", if report.matched { "match" } else { "MISMATCH" });
    out
}

pub fn sequence_table(doc: &SequenceDoc) -> String {
    format!(
        "k = {}, l = {}, d = {}\nu (period {}): {}\nv (period {}): {}\n",
        doc.k, doc.l, doc.d, doc.period_u, doc.u, doc.period_v, doc.v
    )
}

pub fn sums_table(doc: &SumsDoc) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "k = {}, l = {}, d = {}, delta = {}", doc.k, doc.l, doc.d, doc.delta);
    let _ = writeln!(out, "{:>8}  {:>6}  {:>5}  {:>6}", "a", "log a", "cube", "S(a)");
    for r in &doc.s_values {
        let _ = writeln!(out, "{:>8}  {:>6}  {:>5}  {:>6}", r.a.to_string(), r.log_a, r.cube, r.s);
    }
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "{:>8}  {:>8}  {:>4}  {:>4}  {:>4}  {:>3}  {:>6}  {:>6}",
        "a", "b", "dim2", "dim4", "type", "v", "T", "pred"
    );
    for f in &doc.forms {
        let _ = writeln!(
            out,
            "{:>8}  {:>8}  {:>4}  {:>4}  {:>4}  {:>3}  {:>6}  {:>6}",
            f.a.to_string(),
            f.b.to_string(),
            f.radical_dim_gf2,
            f.radical_dim_gf4,
            f.form_type.to_string(),
            f.v,
            f.t_direct,
            f.t_predicted
        );
    }
    out
}

pub fn field_info_table(doc: &FieldInfoDoc) -> String {
    let mut out = format!(
        "m = {}\nmodulus = {}\nq = {}\ngenerator = {}\ngenerator order = {}\n",
        doc.m, doc.modulus, doc.q, doc.generator, doc.generator_order
    );
    if let Some(c) = doc.cubes {
        let _ = writeln!(out, "nonzero cubes = {c}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distribution_table_layout() {
        let dist = CorrelationDistribution::from_counts([(-1, 48), (15, 9), (-17, 6)]);
        let table = distribution_table(3, &dist);
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[1], "      -1            48");
        assert_eq!(lines[2], "      15             9");
        assert_eq!(lines[3], "     -17             6");
    }

    #[test]
    fn distribution_doc_shape() {
        let (_, p) = SeqParams::setup(3, 1, None).unwrap();
        let dist = CorrelationDistribution::from_counts([(-1, 48), (15, 9), (-17, 6)]);
        let json = serde_json::to_string(&DistributionDoc::new(&p, &dist)).unwrap();
        assert_eq!(
            json,
            r#"{"k":3,"l":1,"d":3,"entries":[{"value":-17,"count":6},{"value":-1,"count":48},{"value":15,"count":9}]}"#
        );
    }

    #[test]
    fn sums_doc_k3() {
        let (ctx, p) = SeqParams::setup(3, 1, None).unwrap();
        let doc = SumsDoc::new(&ctx, &p).unwrap();
        assert_eq!(doc.s_values.len(), 63);
        assert_eq!(doc.forms.len(), 189);
        assert!(doc.forms.iter().all(|f| f.t_direct == f.t_predicted));
    }

    #[test]
    fn sequence_doc_k3() {
        let (ctx, p) = SeqParams::setup(3, 1, None).unwrap();
        let doc = SequenceDoc::new(&ctx, &p);
        assert_eq!((doc.period_u, doc.period_v), (63, 21));
        assert_eq!(doc.u.len(), 63);
        assert_eq!(doc.u.matches('1').count(), 32);
    }
}
