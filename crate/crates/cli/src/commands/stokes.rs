use blockgap::linalg::Tolerances;
use blockgap::stokes::{
    axel_intervals, minimal_intervals, new_gap_estimate, pencil_spectrum, perturbation_bounds, ruwa_intervals,
    IntervalPair, PerturbationSpec, StokesMatrix,
};
use serde_json::{json, Value};

use super::bounds::{certificate_json, verdict};
use super::read_saddle;
use crate::args::{Format, StokesArgs};
use crate::error::{CliResult, Context};
use crate::output::{number, Output, Table};

fn interval_json(p: &IntervalPair) -> Value {
    json!({
        "source": p.source.as_str(),
        "i_minus": [number(p.i_minus.0), number(p.i_minus.1)],
        "i_plus": [number(p.i_plus.0), number(p.i_plus.1)],
    })
}

pub fn run(args: &StokesArgs, tol: Tolerances, format: Option<Format>) -> CliResult<Output> {
    let h = read_saddle(&args.input, tol)?;
    let s = StokesMatrix::from_saddle(&h).context("stokes input")?;
    let minimal = minimal_intervals(&s).context("minimal intervals")?;
    let spectrum = pencil_spectrum(&s).context("pencil spectrum")?;
    let enclosures = args
        .eta
        .map(|eta| perturbation_bounds(&spectrum, PerturbationSpec { eta }))
        .transpose()
        .context("perturbation bounds")?;

    if format == Some(Format::Csv) {
        let header: &[&str] = if enclosures.is_some() {
            &["index", "branch", "value", "lo", "hi"]
        } else {
            &["index", "branch", "value"]
        };
        let mut t = Table::new(header);
        let branches = [("minus", &spectrum.lambda_minus), ("plus", &spectrum.lambda_plus)];
        let mut flat = 0;
        for (branch, values) in branches {
            for (i, &v) in values.iter().enumerate() {
                let mut row = vec![(i + 1).into(), branch.into(), v.into()];
                if let Some(e) = &enclosures {
                    row.extend([e[flat].lo.into(), e[flat].hi.into()]);
                }
                flat += 1;
                t.push(row);
            }
        }
        return Ok(Output::Table(t));
    }

    let mut intervals = vec![interval_json(&minimal)];
    let mut skipped = Vec::new();
    for (name, f) in [("ruwa", ruwa_intervals as fn(&StokesMatrix) -> _), ("axel", axel_intervals)] {
        match f(&s) {
            Ok(p) => intervals.push(interval_json(&p)),
            Err(e) => skipped.push(json!({ "source": name, "reason": e.to_string() })),
        }
    }
    let eigenvalues = h.eigenvalues().context("eigenvalue oracle")?;
    let new_estimate = match new_gap_estimate(&s) {
        Ok(cert) => {
            let mut v = certificate_json(&cert);
            v["verdict"] = json!(verdict(&cert, &eigenvalues));
            v
        }
        Err(e) => {
            skipped.push(json!({ "source": "new_estimate", "reason": e.to_string() }));
            Value::Null
        }
    };
    let mut report = json!({
        "intervals": intervals,
        "new_estimate": new_estimate,
        "skipped": skipped,
        "lambda_minus": spectrum.lambda_minus.iter().map(|&x| number(x)).collect::<Vec<_>>(),
        "lambda_plus": spectrum.lambda_plus.iter().map(|&x| number(x)).collect::<Vec<_>>(),
        "pencil_zeros": spectrum.pencil_zeros,
        "kernel_dim": spectrum.zero_multiplicity,
    });
    if let Some(e) = enclosures {
        report["enclosures"] = e
            .iter()
            .map(|x| json!({ "branch": x.branch.as_str(), "value": number(x.value), "lo": number(x.lo), "hi": number(x.hi) }))
            .collect();
    }
    Ok(Output::Json(report))
}
