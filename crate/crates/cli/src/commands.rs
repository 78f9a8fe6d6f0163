use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use anyhow::Context;
use serde::Serialize;
use serde_json::{json, Value};

use superjordan::jordanian::{limit_rh, rh_property_report, verify_identities_rep, TwistPipelineResult};
use superjordan::numeric::{spot_check, NumericComparison};
use superjordan::rmatrix::{r_fund_arb, r_q, ybe_check};
use superjordan::uqsl21::{Identity, IdentityContext};
use superjordan::{Params, RepKind, Representation, Scalar};

use crate::{Format, RunConfig, UsageError, Which};

/// Relative tolerance of the floating-point spot check.
const NUMERIC_TOL: f64 = 1e-10;

pub struct Outcome {
    pub pass: bool,
    pub json: Value,
    pub text: String,
}

impl Outcome {
    fn new(command: &str, pass: bool, mut body: Value, text: String) -> Self {
        body["command"] = json!(command);
        body["pass"] = json!(pass);
        Outcome { pass, json: body, text }
    }

    pub fn print(&self, format: Format) {
        match format {
            Format::Json => println!("{}", serde_json::to_string_pretty(&self.json).expect("reports serialize")),
            Format::Text => print!("{}", self.text),
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn exact(kind: RepKind) -> anyhow::Result<Representation<Scalar>> {
    Ok(kind.build(&Params::exact())?)
}

/// Optional floating-point comparison; `None` when `--numeric` is off.
fn numeric(config: &RunConfig, kind: RepKind, text: &mut String) -> anyhow::Result<Option<Vec<NumericComparison>>> {
    if !config.numeric {
        return Ok(None);
    }
    let checks = spot_check(kind, config.q0, config.h0, NUMERIC_TOL)?;
    for c in &checks {
        writeln!(text, "numeric {:<20} max rel err {:.3e} (tol {:.0e})  {}", c.label, c.max_rel_err, c.tolerance, verdict(c.holds))?;
    }
    Ok(Some(checks))
}

fn numeric_ok(checks: &Option<Vec<NumericComparison>>) -> bool {
    checks.as_ref().map_or(true, |cs| cs.iter().all(|c| c.holds))
}

#[derive(Serialize)]
struct RelationRow {
    relation: String,
    holds: bool,
    residual_nnz: usize,
}

pub fn verify_relations(_config: &RunConfig, rep: Option<RepKind>) -> anyhow::Result<Outcome> {
    let kinds = rep.map_or_else(|| vec![RepKind::Fund, RepKind::Fund2], |k| vec![k]);
    let mut text = String::new();
    let mut reps = Vec::new();
    let mut pass = true;
    for kind in kinds {
        let report = exact(kind)?.validate()?;
        let ok = report.all_hold();
        pass &= ok;
        writeln!(text, "{kind}: {} relations  {}", report.checks.len(), verdict(ok))?;
        for c in report.failures() {
            writeln!(text, "  fails: {} (residual nnz {})", c.relation, c.residual_nnz)?;
        }
        let rows: Vec<_> = report
            .checks
            .iter()
            .map(|c| RelationRow { relation: c.relation.clone(), holds: c.holds, residual_nnz: c.residual_nnz })
            .collect();
        reps.push(json!({ "representation": kind.name(), "pass": ok, "checks": rows }));
    }
    Ok(Outcome::new("verify relations", pass, json!({ "representations": reps }), text))
}

#[derive(Serialize)]
struct IdentityRecord {
    channel: &'static str,
    identity: String,
    params: String,
    representation: Option<String>,
    order: Option<usize>,
    holds: bool,
    diagnostic: bool,
}

pub fn verify_identities(config: &RunConfig, rep: RepKind) -> anyhow::Result<Outcome> {
    let order = config.order as usize;
    let suite = Identity::standard_suite();
    let ctx = IdentityContext::new(order)?;
    let mut records = Vec::new();
    for id in &suite {
        let v = ctx.verify(*id)?;
        records.push(IdentityRecord {
            channel: "symbolic",
            identity: v.identity,
            params: v.params,
            representation: None,
            order: Some(v.order),
            holds: v.holds,
            diagnostic: v.diagnostic,
        });
    }
    for v in verify_identities_rep(&exact(rep)?, &suite)? {
        records.push(IdentityRecord {
            channel: "matrix",
            identity: v.identity,
            params: v.params,
            representation: Some(v.representation),
            order: None,
            holds: v.holds,
            diagnostic: v.diagnostic,
        });
    }
    let pass = records.iter().all(|r| r.diagnostic || r.holds);
    let mut text = String::new();
    writeln!(text, "{:<9} {:<36} {:<18} verdict", "channel", "identity", "params")?;
    for r in &records {
        let v = if r.diagnostic { if r.holds { "holds (diagnostic)" } else { "fails (diagnostic)" } } else { verdict(r.holds) };
        writeln!(text, "{:<9} {:<36} {:<18} {}", r.channel, r.identity, r.params, v)?;
    }
    writeln!(text, "order {order}, matrix channel on {rep}: {}", verdict(pass))?;
    let body = json!({ "order": order, "representation": rep.name(), "records": records });
    Ok(Outcome::new("verify identities", pass, body, text))
}

fn dump(dir: &Path, name: &str, value: &impl Serialize) -> anyhow::Result<()> {
    let path = dir.join(format!("{name}.json"));
    let body = serde_json::to_string_pretty(value)?;
    fs::write(&path, body + "\n").with_context(|| format!("writing {}", path.display()))
}

fn dump_stages(dir: &Path, r: &TwistPipelineResult) -> anyhow::Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    dump(dir, "conjugated", &r.conjugated)?;
    let valuations: Vec<_> = r.valuations.iter().map(|&(row, col, order)| json!({ "row": row, "col": col, "order": order })).collect();
    dump(dir, "valuations", &valuations)?;
    dump(dir, "limit", &r.limit)?;
    dump(dir, "assembled", &r.assembled)
}

pub fn jordanian_run(config: &RunConfig, kind: RepKind, dump_dir: Option<&Path>) -> anyhow::Result<Outcome> {
    let rep = exact(kind)?;
    let mut text = String::new();
    let pipeline = match limit_rh(&rep) {
        Ok(p) => p,
        Err(e) => {
            // a pole at q = 1 is a failed stage, not a usage error
            writeln!(text, "{kind}: contraction stage failed: {e}")?;
            let body = json!({ "representation": kind.name(), "failed_stage": "limit", "error": e.to_string() });
            return Ok(Outcome::new("jordanian run", false, body, text));
        }
    };
    if let Some(dir) = dump_dir {
        dump_stages(dir, &pipeline)?;
    }
    let mut histogram: BTreeMap<i64, usize> = BTreeMap::new();
    for &(_, _, v) in &pipeline.valuations {
        *histogram.entry(v).or_default() += 1;
    }
    writeln!(text, "representation fund x {kind}, {} nonzero entries", pipeline.valuations.len())?;
    writeln!(text, "valuation at q = 1   entries")?;
    for (v, n) in &histogram {
        writeln!(text, "{v:>19}   {n}")?;
    }
    let nonneg = pipeline.min_valuation.map_or(true, |v| v >= 0);
    writeln!(text, "all valuations nonnegative        {}", verdict(nonneg))?;
    writeln!(text, "closed-form blocks match          {}", verdict(pipeline.abc_match))?;
    writeln!(text, "beta -> 0, gamma -> 0             {}", verdict(pipeline.beta_limit_zero && pipeline.gamma_limit_zero))?;
    writeln!(text, "limit equals assembled R_h        {}", verdict(pipeline.limit_equals_assembled))?;

    let props = rh_property_report(&rep.limit_s1()?)?;
    let ybe_ok = props.ybe.as_ref().map_or(true, |y| y.holds);
    match &props.ybe {
        Some(y) => writeln!(text, "R_h graded YBE ({0}x{0})           {1}", y.dim, verdict(y.holds))?,
        None => writeln!(text, "R_h graded YBE                    skipped (needs rep = fund)")?,
    }
    writeln!(text, "R_h = 1 at h = 0                  {}", verdict(props.identity_at_hbar_zero))?;
    if let Some(t) = props.triangularity_is_identity {
        writeln!(text, "P R_h P R_h = 1 (reported)        {t}")?;
    }
    if let Some(k) = props.nilpotency_index {
        writeln!(text, "(R_h - 1) nilpotency index        {k}")?;
    }
    writeln!(text, "h-degree of R_h                   {}", props.hbar_degree)?;

    let checks = numeric(config, kind, &mut text)?;
    let pass = pipeline.holds() && nonneg && ybe_ok && props.identity_at_hbar_zero && numeric_ok(&checks);
    writeln!(text, "verdict: {}", verdict(pass))?;
    let body = json!({
        "representation": kind.name(),
        "valuation_histogram": histogram.iter().map(|(v, n)| json!({ "order": v, "entries": n })).collect::<Vec<_>>(),
        "min_valuation": pipeline.min_valuation,
        "abc_match": pipeline.abc_match,
        "beta_limit_zero": pipeline.beta_limit_zero,
        "gamma_limit_zero": pipeline.gamma_limit_zero,
        "limit_equals_assembled": pipeline.limit_equals_assembled,
        "rh_properties": {
            "ybe": props.ybe,
            "identity_at_hbar_zero": props.identity_at_hbar_zero,
            "triangularity_is_identity": props.triangularity_is_identity,
            "nilpotency_index": props.nilpotency_index,
            "hbar_degree": props.hbar_degree,
        },
        "numeric": checks,
        "stages_written": dump_dir.map(|d| d.display().to_string()),
    });
    Ok(Outcome::new("jordanian run", pass, body, text))
}

pub fn rmatrix_build(config: &RunConfig, kind: RepKind, out: Option<&Path>, check_block_form: bool) -> anyhow::Result<Outcome> {
    let fund = exact(RepKind::Fund)?;
    let rep = exact(kind)?;
    let bundle = r_q(&fund, &rep)?;
    let mut text = String::new();
    writeln!(text, "R_q on fund x {kind}: {0}x{0}, {1} nonzero entries", bundle.r.nrows(), bundle.r.nnz())?;
    if let Some(path) = out {
        let body = serde_json::to_string_pretty(&bundle)?;
        fs::write(path, body + "\n").with_context(|| format!("writing {}", path.display()))?;
        writeln!(text, "wrote {}", path.display())?;
    }
    let block_form = if check_block_form { Some(bundle.r == r_fund_arb(&fund, &rep)?) } else { None };
    if let Some(eq) = block_form {
        writeln!(text, "equals block construction          {}", verdict(eq))?;
    }
    let checks = numeric(config, kind, &mut text)?;
    let pass = block_form.unwrap_or(true) && numeric_ok(&checks);
    let body = json!({
        "representation": kind.name(),
        "dim": bundle.r.nrows(),
        "nnz": bundle.r.nnz(),
        "equals_block_form": block_form,
        "numeric": checks,
        "out": out.map(|p| p.display().to_string()),
    });
    Ok(Outcome::new("rmatrix build", pass, body, text))
}

pub fn ybe(config: &RunConfig, which: Which, kind: RepKind) -> anyhow::Result<Outcome> {
    let mut text = String::new();
    let (dim, residual_nnz, holds) = match which {
        Which::Q => {
            let rep = exact(kind)?;
            let y = ybe_check(&r_q(&rep, &rep)?.r, rep.space())?;
            (y.dim, y.residual_nnz, y.holds)
        }
        Which::H => {
            if kind != RepKind::Fund {
                return Err(UsageError("the R_h Yang-Baxter check acts on fund (x) fund; use --rep fund".into()).into());
            }
            let props = rh_property_report(&exact(kind)?.limit_s1()?)?;
            let y = props.ybe.context("R_h Yang-Baxter check unavailable")?;
            (y.dim, y.residual_nnz, y.holds)
        }
    };
    let name = match which {
        Which::Q => "R_q",
        Which::H => "R_h",
    };
    writeln!(text, "{name} on {kind}^3: {0}x{0}, residual nnz {1}  {2}", dim, residual_nnz, verdict(holds))?;
    let checks = numeric(config, kind, &mut text)?;
    let pass = holds && numeric_ok(&checks);
    let body = json!({
        "which": name,
        "representation": kind.name(),
        "dim": dim,
        "residual_nnz": residual_nnz,
        "holds": holds,
        "numeric": checks,
    });
    Ok(Outcome::new("ybe", pass, body, text))
}
