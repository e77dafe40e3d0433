//! Executes validated jobs.

use rayon::prelude::*;
use serde_json::{json, Value};
use szeta_core::spectrum::level;
use szeta_core::zeta::{
    heat_coefficients, heat_trace_numeric, pole_catalog, residue_numeric, zeta_closed_form, PoleCatalog, ZetaEngine,
    ZetaRegion, ZetaValue, DEFAULT_MARGIN,
};
use szeta_core::{Regime, Result as CoreResult, SecularContext, Spectrum};

use crate::error::CliError;
use crate::job::{Command, Job};
use crate::output::{
    envelope, jnum, num, params_block, Document, HEAT_COLUMNS, POLES_COLUMNS, SPECTRUM_COLUMNS, ZETA_COLUMNS,
};
use crate::verify;

/// Catalog poles above this position get a numerical residue cross-check.
const CHECK_FLOOR: f64 = -1.9;

pub fn run(job: &Job) -> Result<Document, CliError> {
    match job.spec.command {
        Command::Verify => Ok(verify::document(job.spec.suite, &verify::run_suite(job.spec.suite))),
        _ => {
            let ctx = job.ctx.ok_or_else(|| CliError::Internal("missing coupling".into()))?;
            match job.spec.command {
                Command::Spectrum => spectrum(job, ctx),
                Command::Zeta => zeta(job, ctx),
                Command::Poles => poles(job, ctx),
                Command::Heat => heat(job, ctx),
                Command::Verify => unreachable!(),
            }
        }
    }
}

/// `λ_0 … λ_{n_max}`, computed in parallel and collected in index order.
pub fn compute_spectrum(ctx: SecularContext, n_max: usize) -> CoreResult<Spectrum> {
    let levels = (0..=n_max)
        .into_par_iter()
        .map(|n| level(n, &ctx))
        .collect::<CoreResult<Vec<_>>>()?;
    Ok(Spectrum::from_levels(ctx, levels))
}

pub fn engine(ctx: SecularContext, big_m: usize) -> CoreResult<ZetaEngine> {
    ZetaEngine::with_spectrum(compute_spectrum(ctx, big_m.max(1) - 1)?)
}

fn spectrum(job: &Job, ctx: SecularContext) -> Result<Document, CliError> {
    let sp = compute_spectrum(ctx, job.spec.n_max)?;
    let levels: Vec<Value> = sp
        .levels
        .iter()
        .map(|l| json!({"n": l.n, "lambda": l.lambda, "provenance": l.provenance.as_str()}))
        .collect();
    let rows = sp
        .levels
        .iter()
        .map(|l| vec![l.n.to_string(), num(l.lambda), l.provenance.as_str().to_string()])
        .collect();
    let mut doc = envelope("spectrum", params_block(&ctx, job.spec.gamma), json!({"n_max": job.spec.n_max}));
    doc.insert("levels".into(), Value::Array(levels));
    doc.insert(
        "nonpositive".into(),
        sp.nonpositive()
            .map_or(Value::Null, |l| json!({"n": l.n, "lambda": l.lambda})),
    );
    Ok(Document {
        json: Value::Object(doc),
        columns: SPECTRUM_COLUMNS,
        rows,
    })
}

struct ZetaRow {
    value: ZetaValue,
    method: &'static str,
}

fn zeta(job: &Job, ctx: SecularContext) -> Result<Document, CliError> {
    let closed = ctx.is_closed_form();
    let eng = if closed { None } else { Some(engine(ctx, job.spec.big_m)?) };
    let results: Vec<ZetaRow> = job
        .s_values
        .par_iter()
        .map(|&s| -> CoreResult<ZetaRow> {
            let region = if s.re > 1.0 { ZetaRegion::DirectSum } else { ZetaRegion::Continued };
            match &eng {
                None => {
                    let v = zeta_closed_form(s, &ctx.params, ctx.ext)?;
                    Ok(ZetaRow {
                        value: ZetaValue {
                            s,
                            value: v,
                            err_estimate: 64.0 * f64::EPSILON * v.norm().max(1.0),
                            region,
                            excluded: None,
                        },
                        method: "closed-form",
                    })
                }
                Some(e) => {
                    let value = if s.re > 1.0 {
                        e.direct(s)?
                    } else {
                        e.continued(s, job.spec.pole_guard, DEFAULT_MARGIN)?
                    };
                    Ok(ZetaRow {
                        value,
                        method: "spectral-sum",
                    })
                }
            }
        })
        .collect::<CoreResult<Vec<_>>>()?;

    let values: Vec<Value> = results
        .iter()
        .map(|r| {
            let v = &r.value;
            json!({
                "s": [v.s.re, v.s.im],
                "value": [jnum(v.value.re), jnum(v.value.im)],
                "err_estimate": jnum(v.err_estimate),
                "region": v.region.as_str(),
                "method": r.method,
                "excluded_level": v.excluded.map_or(Value::Null, |l| json!({
                    "lambda": l,
                    "magnitude": jnum(l.abs().powf(-v.s.re)),
                })),
            })
        })
        .collect();
    let rows = results
        .iter()
        .map(|r| {
            let v = &r.value;
            vec![
                num(v.s.re),
                num(v.s.im),
                num(v.value.re),
                num(v.value.im),
                num(v.err_estimate),
                v.region.as_str().to_string(),
            ]
        })
        .collect();
    let settings = json!({"M": job.spec.big_m, "pole_guard": job.spec.pole_guard, "margin": DEFAULT_MARGIN});
    let mut doc = envelope("zeta", params_block(&ctx, job.spec.gamma), settings);
    doc.insert("values".into(), Value::Array(values));
    Ok(Document {
        json: Value::Object(doc),
        columns: ZETA_COLUMNS,
        rows,
    })
}

fn contributors_text(e: &szeta_core::zeta::PoleEntry) -> String {
    if e.universal {
        return "log".into();
    }
    e.contributors
        .iter()
        .map(|(a, b)| format!("{a}:{b}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn catalog_json(cat: &PoleCatalog) -> Value {
    Value::Array(
        cat.entries
            .iter()
            .map(|e| {
                json!({
                    "position": e.position,
                    "residue": e.residue,
                    "vanishing": e.vanishing,
                    "universal": e.universal,
                    "contributors": e.contributors.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

/// Numerical residue at the leading β-dependent pole, when there is one.
fn residue_check(ctx: SecularContext, cat: &PoleCatalog, big_m: usize) -> Value {
    if ctx.regime() != Regime::NontrivialSAE || ctx.is_closed_form() {
        return Value::Null;
    }
    let Some(entry) = cat
        .entries
        .iter()
        .find(|e| !e.universal && e.position > CHECK_FLOOR && e.residue.abs() > 1e-6)
    else {
        return Value::Null;
    };
    let result = engine(ctx, big_m).and_then(|e| residue_numeric(entry.position, &e));
    match result {
        Ok(r) => json!({
            "position": entry.position,
            "catalog": entry.residue,
            "numeric": r.value,
            "uncertainty": r.uncertainty,
            "sign_agrees": (r.value * entry.residue) > 0.0,
        }),
        Err(e) => json!({"position": entry.position, "skipped": e.to_string()}),
    }
}

fn poles(job: &Job, ctx: SecularContext) -> Result<Document, CliError> {
    let s = &job.spec;
    let cat = pole_catalog(&ctx, s.big_n_max, s.n_pole_max, s.merge_tol);
    let rows = cat
        .entries
        .iter()
        .map(|e| vec![num(e.position), num(e.residue), e.vanishing.to_string(), contributors_text(e)])
        .collect();
    let settings = json!({"N_max": s.big_n_max, "n_pole_max": s.n_pole_max, "merge_tol": s.merge_tol, "M": s.big_m});
    let mut doc = envelope("poles", params_block(&ctx, s.gamma), settings);
    doc.insert("poles".into(), catalog_json(&cat));
    doc.insert("residue_check".into(), residue_check(ctx, &cat, s.big_m));
    Ok(Document {
        json: Value::Object(doc),
        columns: POLES_COLUMNS,
        rows,
    })
}

fn heat(job: &Job, ctx: SecularContext) -> Result<Document, CliError> {
    let s = &job.spec;
    let cat = pole_catalog(&ctx, s.big_n_max, s.n_pole_max, s.merge_tol);
    let coeffs = heat_coefficients(&cat);
    let traces = if s.t_values.is_empty() {
        Vec::new()
    } else {
        let e = engine(ctx, s.big_m)?;
        s.t_values
            .par_iter()
            .map(|&t| heat_trace_numeric(t, &e))
            .collect::<CoreResult<Vec<_>>>()?
    };
    let mut rows: Vec<Vec<String>> = coeffs
        .iter()
        .map(|c| {
            vec![
                "coefficient".into(),
                num(c.power),
                num(c.coefficient),
                c.defined.to_string(),
                String::new(),
                String::new(),
                String::new(),
            ]
        })
        .collect();
    rows.extend(traces.iter().map(|h| {
        vec![
            "trace".into(),
            String::new(),
            String::new(),
            String::new(),
            num(h.t),
            num(h.value),
            num(h.err_estimate),
        ]
    }));
    let settings = json!({"N_max": s.big_n_max, "n_pole_max": s.n_pole_max, "merge_tol": s.merge_tol, "M": s.big_m});
    let mut doc = envelope("heat", params_block(&ctx, s.gamma), settings);
    doc.insert(
        "coefficients".into(),
        Value::Array(
            coeffs
                .iter()
                .map(|c| {
                    json!({
                        "power": c.power,
                        "coefficient": c.coefficient,
                        "defined": c.defined,
                        "residue": c.residue,
                    })
                })
                .collect(),
        ),
    );
    doc.insert(
        "traces".into(),
        Value::Array(
            traces
                .iter()
                .map(|h| {
                    json!({
                        "t": h.t,
                        "trace": h.value,
                        "err_estimate": jnum(h.err_estimate),
                        "tail_levels": h.tail_levels,
                    })
                })
                .collect(),
        ),
    );
    Ok(Document {
        json: Value::Object(doc),
        columns: HEAT_COLUMNS,
        rows,
    })
}
