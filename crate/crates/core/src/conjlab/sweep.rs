//! Batch runs over `(family, k, l)`: every route to "does the trinomial
//! permute" side by side.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::equations::{count_all, SolutionCount};
use super::family::{
    denominator_roots, g_permutes, trinomial_criterion, trinomial_family, trinomial_permutes,
    Family,
};
use super::lemmas::{harvest_in, LemmaCase};
use super::uv::uv_in;
use crate::error::{Error, Result};
use crate::gf3m::FieldCtx;
use crate::permtest::{mu_q_plus_1, MapReport};

pub const CSV_COLUMNS: [&str; 14] = [
    "family",
    "k",
    "l",
    "modulus",
    "gcd_ok",
    "direct_bijection",
    "zieve_cond1",
    "zieve_cond2",
    "g_bijection",
    "max_fiber_size",
    "witness_count",
    "lemma_case_histogram",
    "routes_agree",
    "error",
];

/// One `(family, k, l)` row. Fields that could not be computed are `None`
/// and `error` says why.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub family: u8,
    pub k: u32,
    pub l: u64,
    pub modulus: String,
    pub gcd_ok: Option<bool>,
    pub direct_bijection: Option<bool>,
    pub zieve_cond1: Option<bool>,
    pub zieve_cond2: Option<bool>,
    pub g_bijection: Option<bool>,
    /// Largest fiber of `g` on `mu_(q+1)`.
    pub max_fiber_size: Option<usize>,
    /// Quadratic factors with `ab != 0` of the family's fiber equations
    /// (restricted to `a^q b = a` for the seventh-degree ones).
    pub witness_count: Option<usize>,
    /// Case classification of the witnesses; empty for family 1, which no
    /// lemma covers.
    pub lemma_case_histogram: BTreeMap<String, usize>,
    /// Direct check, criterion, `g` and the per-`t` root counts all agree.
    pub routes_agree: Option<bool>,
    pub error: Option<String>,
}

impl SweepRow {
    /// Whether the row's family and `k` fall under a proven claim: family 2
    /// for every `k`, family 3 for `k != 2 mod 4`.
    pub fn claim_applies(&self) -> bool {
        match self.family {
            2 => true,
            3 => self.k % 4 != 2,
            _ => false,
        }
    }

    /// Reasons this row contradicts a proven claim or the routes disagree.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.routes_agree == Some(false) {
            out.push("routes disagree".to_string());
        }
        if self.claim_applies() {
            if self.g_bijection == Some(false) {
                out.push("g does not permute mu_(q+1)".to_string());
            }
            if self.max_fiber_size.is_some_and(|m| m > 1) {
                out.push("fiber of size >= 2".to_string());
            }
            if self.gcd_ok == Some(true) && self.direct_bijection == Some(false) {
                out.push("trinomial does not permute the field".to_string());
            }
            if self
                .lemma_case_histogram
                .contains_key(LemmaCase::NoMatch.name())
            {
                out.push("witness outside the known cases".to_string());
            }
        }
        out
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
}

/// Per-`(family, k)` results shared by every `l`.
struct FamilyData {
    g: std::result::Result<MapReport, String>,
    max_count: usize,
    witness_count: usize,
    histogram: BTreeMap<String, usize>,
}

fn family_data(family: Family, ctx: &FieldCtx) -> Result<FamilyData> {
    let mu = mu_q_plus_1(ctx);
    let g = g_permutes(family, ctx, &mu).map_err(|e| e.to_string());
    let den = denominator_roots(family, ctx, &mu);
    let max_count = count_all(family, ctx, &mu)
        .iter()
        .map(|c: &SolutionCount| c.roots.iter().filter(|x| !den.contains(x)).count())
        .max()
        .unwrap_or(0);
    let (witness_count, histogram) = match family {
        Family::One => (uv_in(ctx, &mu)?.witnesses.len(), BTreeMap::new()),
        Family::Two | Family::Three => {
            let h = harvest_in(ctx, &mu, if family == Family::Two { 7 } else { 5 })?;
            (h.witnesses.len(), h.histogram())
        }
    };
    Ok(FamilyData {
        g,
        max_count,
        witness_count,
        histogram,
    })
}

fn fill_row(row: &mut SweepRow, family: Family, l: u64, ctx: &FieldCtx, data: &FamilyData) {
    match &data.g {
        Ok(report) => {
            row.g_bijection = Some(report.is_bijection);
            row.max_fiber_size = Some(report.max_fiber_size);
        }
        Err(e) => row.error = Some(e.clone()),
    }
    row.witness_count = Some(data.witness_count);
    row.lemma_case_histogram = data.histogram.clone();

    let spec = match trinomial_family(family, l, ctx) {
        Ok((spec, _)) => spec,
        Err(e) => {
            row.error = Some(e.to_string());
            return;
        }
    };
    row.gcd_ok = Some(spec.gcd_ok);
    row.direct_bijection = Some(trinomial_permutes(ctx, &spec).is_bijection);
    match trinomial_criterion(ctx, &spec) {
        Ok(c) => {
            row.zieve_cond1 = Some(c.cond1);
            row.zieve_cond2 = Some(c.cond2);
        }
        Err(e) => row.error = Some(e.to_string()),
    }
    let (Some(direct), Some(c1), Some(c2)) =
        (row.direct_bijection, row.zieve_cond1, row.zieve_cond2)
    else {
        return;
    };
    let mut agree = direct == (c1 && c2);
    match &data.g {
        Ok(report) => agree &= c2 == report.is_bijection && report.max_fiber_size == data.max_count,
        // A root of the denominator on mu_(q+1) is a zero of h there.
        Err(_) => agree &= !c2,
    }
    row.routes_agree = Some(agree);
}

/// Runs every `(family, k, l)` combination. Rows come back sorted by
/// `(family, k, l)` whatever order they finish in; a failing row records its
/// error and the sweep goes on.
pub fn sweep(families: &[Family], k_list: &[u32], l_list: &[u64], max_k: u32) -> SweepReport {
    let mut families = families.to_vec();
    families.sort();
    families.dedup();
    let mut ks = k_list.to_vec();
    ks.sort();
    ks.dedup();
    let mut ls = l_list.to_vec();
    ls.sort();
    ls.dedup();

    let groups: Vec<(Family, u32)> = families
        .iter()
        .flat_map(|&f| ks.iter().map(move |&k| (f, k)))
        .collect();
    let rows: Vec<Vec<SweepRow>> = groups
        .par_iter()
        .map(|&(family, k)| {
            let blank = |l| SweepRow {
                family: family.number(),
                k,
                l,
                ..SweepRow::default()
            };
            let ctx = match FieldCtx::create(k, None, max_k) {
                Ok(ctx) => ctx,
                Err(e) => {
                    return ls
                        .iter()
                        .map(|&l| SweepRow {
                            error: Some(e.to_string()),
                            ..blank(l)
                        })
                        .collect();
                }
            };
            let data = family_data(family, &ctx);
            ls.par_iter()
                .map(|&l| {
                    let mut row = SweepRow {
                        modulus: ctx.modulus_string(),
                        ..blank(l)
                    };
                    match &data {
                        Ok(data) => fill_row(&mut row, family, l, &ctx, data),
                        Err(e) => row.error = Some(e.to_string()),
                    }
                    row
                })
                .collect()
        })
        .collect();
    SweepReport {
        rows: rows.into_iter().flatten().collect(),
    }
}

impl SweepReport {
    pub fn violations(&self) -> Vec<(usize, String)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.violations().into_iter().map(move |v| (i, v)))
            .collect()
    }

    /// Pretty JSON array; object keys in sorted order.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("rows serialize");
        serde_json::to_string_pretty(&value).expect("value serializes") + "\n"
    }

    /// One record per row in [`CSV_COLUMNS`] order; `None` is empty.
    pub fn csv_rows(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(csv_record).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_COLUMNS).expect("in-memory write");
        for record in self.csv_rows() {
            w.write_record(record).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
    }

    pub fn from_csv(text: &str) -> Result<SweepReport> {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let header = r.headers().map_err(|e| Error::Parse(e.to_string()))?;
        if header.iter().ne(CSV_COLUMNS) {
            return Err(Error::Parse(format!("unexpected csv header: {header:?}")));
        }
        let mut rows = Vec::new();
        for rec in r.records() {
            let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
            rows.push(parse_record(&rec)?);
        }
        Ok(SweepReport { rows })
    }

    /// Fixed-width table for terminals.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:>3} {:>3} {:>4} {:>6} {:>6} {:>5} {:>5} {:>6} {:>5} {:>7} {:>6}  cases",
            "fam",
            "k",
            "l",
            "gcd_ok",
            "direct",
            "cond1",
            "cond2",
            "g_perm",
            "fiber",
            "witness",
            "agree"
        );
        for r in &self.rows {
            let _ = write!(
                out,
                "{:>3} {:>3} {:>4} {:>6} {:>6} {:>5} {:>5} {:>6} {:>5} {:>7} {:>6}  {}",
                r.family,
                r.k,
                r.l,
                opt(r.gcd_ok),
                opt(r.direct_bijection),
                opt(r.zieve_cond1),
                opt(r.zieve_cond2),
                opt(r.g_bijection),
                opt(r.max_fiber_size),
                opt(r.witness_count),
                opt(r.routes_agree),
                format_histogram(&r.lemma_case_histogram),
            );
            if let Some(e) = &r.error {
                let _ = write!(out, "  error: {e}");
            }
            out.push('\n');
        }
        out
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_else(|| "-".to_string())
}

fn csv_opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

/// `"EpsilonCase=2;ThetaCase=78"`.
pub fn format_histogram(h: &BTreeMap<String, usize>) -> String {
    h.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn parse_histogram(text: &str) -> Result<BTreeMap<String, usize>> {
    let mut h = BTreeMap::new();
    for part in text.split(';').filter(|p| !p.is_empty()) {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("bad histogram entry {part:?}")))?;
        let v = v
            .parse()
            .map_err(|_| Error::Parse(format!("bad histogram count {v:?}")))?;
        h.insert(k.to_string(), v);
    }
    Ok(h)
}

fn csv_record(r: &SweepRow) -> Vec<String> {
    vec![
        r.family.to_string(),
        r.k.to_string(),
        r.l.to_string(),
        r.modulus.clone(),
        csv_opt(r.gcd_ok),
        csv_opt(r.direct_bijection),
        csv_opt(r.zieve_cond1),
        csv_opt(r.zieve_cond2),
        csv_opt(r.g_bijection),
        csv_opt(r.max_fiber_size),
        csv_opt(r.witness_count),
        format_histogram(&r.lemma_case_histogram),
        csv_opt(r.routes_agree),
        r.error.clone().unwrap_or_default(),
    ]
}

fn parse_field<T: std::str::FromStr>(rec: &csv::StringRecord, i: usize) -> Result<Option<T>> {
    let s = rec.get(i).unwrap_or("");
    if s.is_empty() {
        return Ok(None);
    }
    s.parse()
        .map(Some)
        .map_err(|_| Error::Parse(format!("bad value {s:?} in column {}", CSV_COLUMNS[i])))
}

fn required<T: std::str::FromStr>(rec: &csv::StringRecord, i: usize) -> Result<T> {
    parse_field(rec, i)?.ok_or_else(|| Error::Parse(format!("missing {}", CSV_COLUMNS[i])))
}

fn parse_record(rec: &csv::StringRecord) -> Result<SweepRow> {
    let error = rec.get(13).unwrap_or("");
    Ok(SweepRow {
        family: required(rec, 0)?,
        k: required(rec, 1)?,
        l: required(rec, 2)?,
        modulus: rec.get(3).unwrap_or("").to_string(),
        gcd_ok: parse_field(rec, 4)?,
        direct_bijection: parse_field(rec, 5)?,
        zieve_cond1: parse_field(rec, 6)?,
        zieve_cond2: parse_field(rec, 7)?,
        g_bijection: parse_field(rec, 8)?,
        max_fiber_size: parse_field(rec, 9)?,
        witness_count: parse_field(rec, 10)?,
        lemma_case_histogram: parse_histogram(rec.get(11).unwrap_or(""))?,
        routes_agree: parse_field(rec, 12)?,
        error: (!error.is_empty()).then(|| error.to_string()),
    })
}
