use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::report::{Report, Table};
use super::{Command, RunConfig, TArg};
use crate::conjlab::{
    self, denominator_roots, distinct_root_exclusion, fiber_equation, fractional_map,
    harvest_witnesses, trinomial_criterion, trinomial_decompose, trinomial_family,
    trinomial_permutes, uv_identity_check, verify_lemma2_derivation, verify_lemma2_relation,
    verify_lemma4_derivation, verify_lemma4_relation, Family, LemmaCase, SolutionCount,
    CSV_COLUMNS,
};
use crate::error::{Error, Result};
use crate::gf3m::{format_trits, FieldCtx, FieldElement};
use crate::permtest::{self, mu_enumerate, mu_q_plus_1, MapReport, UnityGroup};
use crate::polyring::{quadratic_factors, roots_in_set, Poly};

/// A report and the assertions it failed (empty on success).
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: Report,
    pub failures: Vec<String>,
}

impl Outcome {
    fn ok(report: Report) -> Outcome {
        Outcome {
            report,
            failures: Vec::new(),
        }
    }
}

/// Executes the configured command. Errors are usage or input problems;
/// failed claims are reported in [`Outcome::failures`].
pub fn run(config: &RunConfig) -> Result<Outcome> {
    let field = |k: u32| FieldCtx::create(k, config.modulus.as_deref(), config.max_k);
    match &config.command {
        Command::FieldInfo { k } => Ok(Outcome::ok(field_info(&field(*k)?))),
        Command::Mu { k, d } => {
            let ctx = field(*k)?;
            Ok(Outcome::ok(mu(&ctx, d.unwrap_or(ctx.q() + 1))?))
        }
        Command::CheckTrinomial { family, k, l } => {
            check_trinomial(&field(*k)?, Family::try_from(*family)?, *l)
        }
        Command::CheckG { family, k } => Ok(check_g(&field(*k)?, Family::try_from(*family)?)),
        Command::CountRoots { family, k, t } => {
            count_roots(&field(*k)?, Family::try_from(*family)?, t)
        }
        Command::Factors { k, poly, family, t } => {
            let ctx = field(*k)?;
            let target = match (poly, family, t) {
                (Some(text), _, _) => Poly::parse(&ctx, text)?,
                (None, Some(f), Some(TArg::One(text))) => {
                    let t = parse_t_in_mu(&ctx, &mu_q_plus_1(&ctx), text)?;
                    fiber_equation(Family::try_from(*f)?, t)
                }
                (None, Some(_), Some(TArg::All)) => {
                    return Err(Error::Parse("factors needs a single --t, not `all`".into()))
                }
                _ => {
                    return Err(Error::Parse(
                        "factors needs --poly, or --family with --t".into(),
                    ))
                }
            };
            Ok(Outcome::ok(factors(&ctx, &target)?))
        }
        Command::LemmaVerify { family, k } => lemma_verify(&field(*k)?, Family::try_from(*family)?),
        Command::UvScan { k } => uv_scan(&field(*k)?),
        Command::Sweep { family, k, l } => {
            let families = family
                .iter()
                .map(|&f| Family::try_from(f))
                .collect::<Result<Vec<_>>>()?;
            Ok(sweep(&families, k, l, config.max_k))
        }
    }
}

fn enc(x: FieldElement) -> Value {
    json!(x.encode())
}

fn opt_enc(x: Option<FieldElement>) -> Value {
    x.map_or(Value::Null, enc)
}

fn opt_text(x: Option<FieldElement>) -> String {
    x.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn join(xs: &[FieldElement]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(";")
}

/// Claims proven for every `k` (family 2) or for `k != 2 mod 4` (family 3).
fn claim_applies(family: Family, k: u32) -> bool {
    match family {
        Family::One => false,
        Family::Two => true,
        Family::Three => k % 4 != 2,
    }
}

fn field_info(ctx: &FieldCtx) -> Report {
    let sc = ctx.special_constants();
    let alpha = ctx.primitive_element();
    let thetas = ctx.theta_roots();
    let json = json!({
        "k": ctx.k(),
        "degree": ctx.degree(),
        "q": ctx.q(),
        "order": ctx.order(),
        "modulus": ctx.modulus_string(),
        "group_order": ctx.group_order(),
        "group_primes": ctx.group_primes(),
        "primitive_element": enc(alpha),
        "epsilon": enc(sc.epsilon),
        "theta": opt_enc(sc.theta),
        "theta_roots": thetas.iter().map(|&t| enc(t)).collect::<Vec<_>>(),
        "sqrt_eps_minus_1": opt_enc(sc.sqrt_eps_minus_1),
        "sqrt_theta": opt_enc(sc.sqrt_theta),
    });
    let summary: Vec<(String, String)> = vec![
        ("k", ctx.k().to_string()),
        ("degree", ctx.degree().to_string()),
        ("q", ctx.q().to_string()),
        ("order", ctx.order().to_string()),
        ("modulus", ctx.modulus_string()),
        ("group_order", ctx.group_order().to_string()),
        (
            "group_primes",
            ctx.group_primes()
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(","),
        ),
        ("primitive_element", alpha.to_string()),
        ("epsilon", sc.epsilon.to_string()),
        ("theta", opt_text(sc.theta)),
        ("theta_roots", join(&thetas)),
        ("sqrt_eps_minus_1", opt_text(sc.sqrt_eps_minus_1)),
        ("sqrt_theta", opt_text(sc.sqrt_theta)),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v))
    .collect();
    let mut table = Table::new(["key", "value"]);
    for (k, v) in &summary {
        table.push(vec![k.clone(), v.clone()]);
    }
    Report {
        json,
        summary,
        table,
        text_table: false,
    }
}

fn mu(ctx: &FieldCtx, d: u64) -> Result<Report> {
    let group = mu_enumerate(ctx, d)?;
    let mut table = Table::new(["index", "element", "trits"]);
    for (i, x) in group.iter().enumerate() {
        table.push(vec![
            i.to_string(),
            x.to_string(),
            format_trits(&x.trits(ctx.degree())),
        ]);
    }
    Ok(Report {
        json: json!({
            "k": ctx.k(),
            "d": d,
            "size": group.len(),
            "elements": group.iter().map(enc).collect::<Vec<_>>(),
        }),
        summary: vec![
            ("k".into(), ctx.k().to_string()),
            ("d".into(), d.to_string()),
            ("size".into(), group.len().to_string()),
        ],
        table,
        text_table: true,
    })
}

fn map_json(r: &MapReport) -> Value {
    json!({
        "is_bijection": r.is_bijection,
        "collision": r.collision.map(|(a, b)| json!([a.encode(), b.encode()])),
        "missed": opt_enc(r.missed),
        "escaped": r.escaped.map(|(a, b)| json!([a.encode(), b.encode()])),
        "max_fiber_size": r.max_fiber_size,
    })
}

fn check_trinomial(ctx: &FieldCtx, family: Family, l: u64) -> Result<Outcome> {
    let (spec, poly) = trinomial_family(family, l, ctx)?;
    let (r, h) = trinomial_decompose(&spec)?;
    let direct = trinomial_permutes(ctx, &spec);
    let crit = trinomial_criterion(ctx, &spec)?;
    let agree = direct.is_bijection == crit.holds();

    let mut failures = Vec::new();
    if !agree {
        failures.push(format!(
            "direct check ({}) and criterion ({}) disagree",
            direct.is_bijection,
            crit.holds()
        ));
    }
    if claim_applies(family, ctx.k()) && spec.gcd_ok && !direct.is_bijection {
        failures.push(format!(
            "family {family} trinomial with l = {l} does not permute GF(3^{})",
            ctx.degree()
        ));
    }
    let terms: Vec<String> = poly
        .terms()
        .iter()
        .map(|(c, e)| format!("{}x^{e}", if *c == FieldElement::ONE { "+" } else { "-" }))
        .collect();
    let summary = vec![
        ("family", family.to_string()),
        ("k", ctx.k().to_string()),
        ("l", l.to_string()),
        (
            "exponents",
            spec.exponents
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(","),
        ),
        ("trinomial", terms.join(" ")),
        ("gcd_ok", spec.gcd_ok.to_string()),
        ("r", r.to_string()),
        ("h", h.to_string()),
        ("direct_bijection", direct.is_bijection.to_string()),
        ("zieve_cond1", crit.cond1.to_string()),
        ("zieve_cond2", crit.cond2.to_string()),
        ("routes_agree", agree.to_string()),
    ];
    let json = json!({
        "family": family.number(),
        "k": ctx.k(),
        "l": l,
        "exponents": spec.exponents,
        "signs": spec.signs,
        "gcd_ok": spec.gcd_ok,
        "r": r,
        "h": h.to_string(),
        "direct": map_json(&direct),
        "direct_bijection": direct.is_bijection,
        "zieve_cond1": crit.cond1,
        "zieve_cond2": crit.cond2,
        "routes_agree": agree,
    });
    Ok(Outcome {
        report: summary_report(json, summary),
        failures,
    })
}

/// A report whose CSV form is the summary as a single row.
fn summary_report(json: Value, summary: Vec<(&str, String)>) -> Report {
    let summary: Vec<(String, String)> = summary
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
    let mut table = Table::new(summary.iter().map(|(k, _)| k.clone()));
    table.push(summary.iter().map(|(_, v)| v.clone()).collect());
    Report {
        json,
        summary,
        table,
        text_table: false,
    }
}

fn check_g(ctx: &FieldCtx, family: Family) -> Outcome {
    let mu = mu_q_plus_1(ctx);
    let den_roots = denominator_roots(family, ctx, &mu);
    let g = fractional_map(family);
    let images: Vec<Option<FieldElement>> = mu.iter().map(|x| g.eval(ctx, x)).collect();
    let report = if den_roots.is_empty() {
        let images: Vec<FieldElement> = images
            .into_iter()
            .map(|y| y.expect("denominator nonzero"))
            .collect();
        Some(permtest::report_from_images(ctx, mu.elements(), &images))
    } else {
        None
    };
    let g_bijection = report.as_ref().is_some_and(|r| r.is_bijection);
    let mut failures = Vec::new();
    if claim_applies(family, ctx.k()) {
        if let Some(&x) = den_roots.first() {
            failures.push(format!(
                "denominator of g_{family} vanishes at {x} in mu_(q+1)"
            ));
        }
        if let Some(r) = &report {
            if let Some((x, y)) = r.escaped {
                failures.push(format!("g_{family}({x}) = {y} is not in mu_(q+1)"));
            }
            if !r.is_bijection {
                failures.push(format!(
                    "g_{family} does not permute mu_(q+1) (max fiber {})",
                    r.max_fiber_size
                ));
            }
        }
    }
    let max_fiber = report.as_ref().map(|r| r.max_fiber_size);
    let mut json = json!({
        "family": family.number(),
        "k": ctx.k(),
        "mu_size": mu.len(),
        "denominator_nonvanishing": den_roots.is_empty(),
        "denominator_roots": den_roots.iter().map(|&x| enc(x)).collect::<Vec<_>>(),
        "g_bijection": g_bijection,
        "max_fiber_size": max_fiber,
    });
    if let Some(r) = &report {
        let m = map_json(r);
        for key in ["collision", "missed", "escaped"] {
            json[key] = m[key].clone();
        }
    }
    let summary = vec![
        ("family", family.to_string()),
        ("k", ctx.k().to_string()),
        ("mu_size", mu.len().to_string()),
        ("denominator_nonvanishing", den_roots.is_empty().to_string()),
        ("g_bijection", g_bijection.to_string()),
        (
            "max_fiber_size",
            max_fiber.map_or("-".into(), |m| m.to_string()),
        ),
    ];
    Outcome {
        report: summary_report(json, summary),
        failures,
    }
}

fn parse_t_in_mu(ctx: &FieldCtx, mu: &UnityGroup, text: &str) -> Result<FieldElement> {
    let t = ctx.parse_element(text)?;
    if !mu.contains(t) {
        return Err(Error::NotInMu(t.encode()));
    }
    Ok(t)
}

fn equation_name(family: Family) -> &'static str {
    match family {
        Family::One => "x^7 + (t-1)x^6 + (t-1)x - t",
        Family::Two => "x^7 + t x^6 + t x^4 - x^3 - x - t",
        Family::Three => "x^5 + t x^4 - x^3 + t x^2 - x - t",
    }
}

fn count_roots(ctx: &FieldCtx, family: Family, t: &TArg) -> Result<Outcome> {
    let mu = mu_q_plus_1(ctx);
    let counts: Vec<SolutionCount> = match t {
        TArg::All => conjlab::count_all(family, ctx, &mu),
        TArg::One(text) => {
            let t = parse_t_in_mu(ctx, &mu, text)?;
            let roots = roots_in_set(ctx, &fiber_equation(family, t), mu.iter())?;
            vec![SolutionCount {
                t,
                count: roots.len(),
                roots,
            }]
        }
    };
    let max_count = counts.iter().map(|c| c.count).max().unwrap_or(0);
    let mut failures = Vec::new();
    if claim_applies(family, ctx.k()) {
        for c in counts.iter().filter(|c| c.count >= 2) {
            failures.push(format!("t = {}: {} roots in mu_(q+1)", c.t, c.count));
        }
    }
    let mut table = Table::new(["t", "count", "roots"]);
    for c in &counts {
        table.push(vec![c.t.to_string(), c.count.to_string(), join(&c.roots)]);
    }
    let mut histogram = BTreeMap::new();
    for c in &counts {
        *histogram.entry(c.count.to_string()).or_insert(0usize) += 1;
    }
    let json = json!({
        "family": family.number(),
        "k": ctx.k(),
        "equation": equation_name(family),
        "counts": counts,
        "max_count": max_count,
        "count_histogram": histogram,
    });
    Ok(Outcome {
        report: Report {
            json,
            summary: vec![
                ("family".into(), family.to_string()),
                ("k".into(), ctx.k().to_string()),
                ("equation".into(), equation_name(family).into()),
                ("max_count".into(), max_count.to_string()),
            ],
            table,
            text_table: true,
        },
        failures,
    })
}

fn factors(ctx: &FieldCtx, target: &Poly) -> Result<Report> {
    let found = quadratic_factors(ctx, target)?;
    let mut table = Table::new(["a", "b", "x1", "x2"]);
    let mut rows = Vec::new();
    for &(a, b) in &found {
        let roots = conjlab::factor_roots(ctx, a, b);
        let (x1, x2) = roots.unzip();
        table.push(vec![
            a.to_string(),
            b.to_string(),
            opt_text(x1),
            opt_text(x2),
        ]);
        rows.push(json!({"a": enc(a), "b": enc(b), "x1": opt_enc(x1), "x2": opt_enc(x2)}));
    }
    Ok(Report {
        json: json!({
            "k": ctx.k(),
            "poly": target.to_string(),
            "factors": rows,
        }),
        summary: vec![
            ("k".into(), ctx.k().to_string()),
            ("poly".into(), target.to_string()),
            ("factors".into(), found.len().to_string()),
        ],
        table,
        text_table: true,
    })
}

fn lemma_verify(ctx: &FieldCtx, family: Family) -> Result<Outcome> {
    let degree = if family == Family::Two { 7 } else { 5 };
    let harvest = harvest_witnesses(ctx, degree)?;
    let mut failures = Vec::new();
    let mut table = Table::new([
        "t",
        "a",
        "b",
        "case",
        "relation",
        "derivation",
        "excluded_case",
        "x1",
        "x2",
    ]);
    let mut rows = Vec::new();
    for w in &harvest.witnesses {
        let (relation, derivation, excluded) = if degree == 5 {
            let (c1, c2) = conjlab::fifth_degree_excluded_cases(ctx, w.a, w.b);
            (
                verify_lemma2_relation(ctx, w)?,
                verify_lemma2_derivation(ctx, w.a, w.b, w.t)?,
                c1 || c2,
            )
        } else {
            (
                verify_lemma4_relation(ctx, w)? != LemmaCase::NoMatch,
                verify_lemma4_derivation(ctx, w.a, w.b, w.t)?,
                conjlab::seventh_degree_excluded_case(ctx, w.a, w.b),
            )
        };
        if !relation || !derivation || excluded {
            failures.push(format!(
                "witness t = {}, a = {}, b = {}: relation {relation}, derivation {derivation}, excluded case {excluded}",
                w.t, w.a, w.b
            ));
        }
        table.push(vec![
            w.t.to_string(),
            w.a.to_string(),
            w.b.to_string(),
            w.lemma_case.to_string(),
            relation.to_string(),
            derivation.to_string(),
            excluded.to_string(),
            opt_text(w.x1),
            opt_text(w.x2),
        ]);
        rows.push(json!({
            "t": enc(w.t), "a": enc(w.a), "b": enc(w.b),
            "lemma_case": w.lemma_case.name(),
            "relation": relation, "derivation": derivation, "excluded_case": excluded,
            "x1": opt_enc(w.x1), "x2": opt_enc(w.x2),
        }));
    }
    let exclusion = if claim_applies(family, ctx.k()) {
        let ex = distinct_root_exclusion(family, ctx)?;
        if !ex.holds() {
            failures.push(format!("distinct-root exclusion fails at k = {}", ctx.k()));
        }
        json!({
            "holds": ex.holds(),
            "max_count": ex.max_count,
            "counterexamples": ex.counterexamples,
            "distinct_pairs": ex.distinct_pairs.len(),
            "ingredients": ex.ingredients,
        })
    } else {
        Value::Null
    };
    let histogram = harvest.histogram();
    let json = json!({
        "family": family.number(),
        "k": ctx.k(),
        "degree": degree,
        "witness_count": harvest.witnesses.len(),
        "off_hypothesis_count": harvest.off_hypothesis.len(),
        "lemma_case_histogram": histogram,
        "witnesses": rows,
        "exclusion": exclusion,
        "all_pass": failures.is_empty(),
    });
    Ok(Outcome {
        report: Report {
            json,
            summary: vec![
                ("family".into(), family.to_string()),
                ("k".into(), ctx.k().to_string()),
                ("witness_count".into(), harvest.witnesses.len().to_string()),
                (
                    "off_hypothesis_count".into(),
                    harvest.off_hypothesis.len().to_string(),
                ),
                (
                    "lemma_case_histogram".into(),
                    conjlab::format_histogram(&histogram),
                ),
                ("all_pass".into(), failures.is_empty().to_string()),
            ],
            table,
            text_table: true,
        },
        failures,
    })
}

fn uv_scan(ctx: &FieldCtx) -> Result<Outcome> {
    let report = uv_identity_check(ctx)?;
    let failures: Vec<String> = report
        .witnesses
        .iter()
        .filter(|w| !w.holds())
        .map(|w| format!("t = {}, a = {}, b = {}: identity fails", w.t, w.a, w.b))
        .collect();
    let mut table = Table::new(["t", "a", "b", "u", "v", "sextic", "cubic", "shifted"]);
    for w in &report.witnesses {
        table.push(vec![
            w.t.to_string(),
            w.a.to_string(),
            w.b.to_string(),
            w.u.to_string(),
            w.v.to_string(),
            w.sextic.to_string(),
            w.cubic.to_string(),
            w.shifted.to_string(),
        ]);
    }
    Ok(Outcome {
        report: Report {
            json: json!({
                "k": ctx.k(),
                "witness_count": report.witnesses.len(),
                "off_hypothesis_count": report.off_hypothesis,
                "failures": report.failures(),
                "witnesses": report.witnesses,
            }),
            summary: vec![
                ("k".into(), ctx.k().to_string()),
                ("witness_count".into(), report.witnesses.len().to_string()),
                (
                    "off_hypothesis_count".into(),
                    report.off_hypothesis.to_string(),
                ),
                ("failures".into(), report.failures().to_string()),
            ],
            table,
            text_table: true,
        },
        failures,
    })
}

fn sweep(families: &[Family], k: &[u32], l: &[u64], max_k: u32) -> Outcome {
    let report = conjlab::sweep(families, k, l, max_k);
    let failures = report
        .violations()
        .into_iter()
        .map(|(i, v)| {
            let r = &report.rows[i];
            format!("family {}, k = {}, l = {}: {v}", r.family, r.k, r.l)
        })
        .collect();
    let table = Table {
        header: CSV_COLUMNS.iter().map(|c| c.to_string()).collect(),
        rows: report.csv_rows(),
    };
    Outcome {
        report: Report {
            json: serde_json::to_value(&report).expect("rows serialize"),
            summary: Vec::new(),
            table,
            text_table: true,
        },
        failures,
    }
}
