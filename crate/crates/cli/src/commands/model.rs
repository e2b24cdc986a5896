use std::f64::consts::LN_10;

use blockgap::linalg::{bidiag_svd_hra, sym_eigvals};
use blockgap::model::{
    build_hc, build_kc, build_modified, build_tc, build_wc, disorder_experiment, gap_scan,
    modified_spectrum_closed_form, secular_solve, spurious_estimate, stable_gap, verify_stable_gap, ModelSpec,
};
use serde_json::json;

use crate::args::{MatrixArg, ModelCommand};
use crate::error::{CliResult, Context};
use crate::output::{number, numbers, Cell, Output, Table};

/// Eigenvalue magnitudes below this are reported through their logarithm.
const TINY: f64 = 1e-300;

fn spec(m: usize, c: f64) -> CliResult<ModelSpec> {
    ModelSpec::new(m, c).context("model parameters")
}

fn max_diff(x: &[f64], y: &[f64]) -> f64 {
    if x.len() != y.len() {
        return f64::INFINITY;
    }
    x.iter().zip(y).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
}

fn symmetry_error(ev: &[f64]) -> f64 {
    let n = ev.len();
    (0..n).map(|i| (ev[i] + ev[n - 1 - i]).abs()).fold(0.0, f64::max)
}

fn secular(m: usize, c: f64) -> CliResult<Output> {
    let roots = secular_solve(&spec(m, c)?).context("secular equation")?;
    let mut t = Table::new(&["k", "alpha", "lambda", "branch", "log10_value"]);
    let mut k = 0;
    if let Some(h) = roots.hyp_root {
        k += 1;
        let lambda = h.log_lambda1.exp();
        let shown = if lambda < TINY { Cell::Empty } else { lambda.into() };
        t.push(vec![k.into(), h.alpha1.into(), shown, "hyp".into(), (h.log_lambda1 / LN_10).into()]);
    }
    for &alpha in &roots.trig_roots {
        k += 1;
        let lambda = roots.trig_lambda(alpha);
        t.push(vec![k.into(), alpha.into(), lambda.into(), "trig".into(), lambda.log10().into()]);
    }
    Ok(Output::Table(t))
}

fn spurious(m: usize, c: f64) -> CliResult<Output> {
    let s = spec(m, c)?;
    let est = spurious_estimate(&s).context("spurious estimate")?;
    let roots = secular_solve(&s).context("secular equation")?;
    let hyp =
        roots.hyp_root.ok_or_else(|| crate::error::CliError::Argument("no root below the band for this m".into()))?;
    let sv = bidiag_svd_hra(&build_tc(&s).context("bidiagonal factor")?).context("bidiagonal SVD")?;
    let sigma = sv[sv.len() - 1];
    let log10 = |x: f64| x / LN_10;
    Ok(Output::Json(json!({
        "m": m,
        "c": number(c),
        "alpha0": number(est.alpha0),
        "alpha1": number(hyp.alpha1),
        "log10_lambda": {
            "secular": number(log10(hyp.log_lambda1)),
            "hra": number(2.0 * sigma.log10()),
            "estimate": number(log10(est.log_lambda_est)),
            "sharp": number(log10(est.log_lambda_sharp)),
        },
        "sigma_hra": number(sigma),
        "sigma_secular": number((0.5 * hyp.log_lambda1).exp()),
    })))
}

fn stable(ms: &[usize], c: f64) -> CliResult<Output> {
    let radius = stable_gap(c).context("stable gap")?.radius;
    let checks = verify_stable_gap(c, ms, 1e-12).context("stable gap")?;
    let mut t = Table::new(&[
        "m",
        "c",
        "radius",
        "inside",
        "expected_inside",
        "min_abs_outside",
        "inner_modulus",
        "inner_bound",
        "status",
    ]);
    for ch in checks {
        t.push(vec![
            ch.m.into(),
            c.into(),
            radius.into(),
            ch.inside.into(),
            ch.expected_inside.into(),
            ch.min_abs_outside.into(),
            ch.inner_modulus.into(),
            ch.inner_bound.into(),
            status(ch.holds()),
        ]);
    }
    Ok(Output::Table(t))
}

fn modified(m: usize, c: f64) -> CliResult<Output> {
    let s = spec(m, c)?;
    let (_, h) = build_modified(&s).context("modified matrix")?;
    let ev = sym_eigvals(&h).context("eigenvalues")?;
    let squares = sym_eigvals(&h.matmul(&h)).context("eigenvalues")?;
    let closed = modified_spectrum_closed_form(&s).context("closed form")?;
    let radius = stable_gap(c).context("stable gap")?.radius;
    Ok(Output::Json(json!({
        "m": m,
        "c": number(c),
        "eigenvalues": numbers(&ev),
        "closed_form_squares": numbers(&closed),
        "max_square_deviation": number(max_diff(&squares, &closed)),
        "symmetry_error": number(symmetry_error(&ev)),
        "min_abs": number(ev.iter().fold(f64::INFINITY, |a, x| a.min(x.abs()))),
        "gap_radius": number(radius),
    })))
}

fn spectrum(m: usize, c: f64, which: MatrixArg) -> CliResult<Output> {
    let s = spec(m, c)?;
    let matrix = match which {
        MatrixArg::H => build_hc(&s),
        MatrixArg::Htilde => build_modified(&s).map(|(_, h)| h),
        MatrixArg::K => build_kc(&s),
        MatrixArg::W => build_wc(&s),
    }
    .context("model matrix")?;
    let ev = sym_eigvals(&matrix).context("eigenvalues")?;
    let mut t = Table::new(&["index", "eigenvalue"]);
    for (i, v) in ev.into_iter().enumerate() {
        t.push(vec![(i + 1).into(), v.into()]);
    }
    Ok(Output::Table(t))
}

fn scan(means: &[f64], delta: f64, m: usize, seed: u64) -> CliResult<Output> {
    let rows = gap_scan(means, delta, m, seed).context("gap scan")?;
    let mut t = Table::new(&["M", "variant", "index", "eigenvalue"]);
    for r in rows {
        t.push(vec![r.mean.into(), r.variant.as_str().into(), (r.index + 1).into(), r.eigenvalue.into()]);
    }
    Ok(Output::Table(t))
}

fn disorder(m: usize, lo: f64, hi: f64, seed: u64, count: usize) -> CliResult<Output> {
    let s = ModelSpec::with_disorder(m, lo, hi, seed).context("disorder law")?;
    let r = disorder_experiment(&s, count).context("disorder experiment")?;
    Ok(Output::Json(json!({
        "m": m,
        "law": [number(lo), number(hi)],
        "seed": seed,
        "near_zero": numbers(&r.near_zero),
        "near_zero_modified": numbers(&r.near_zero_modified),
        "central_modulus": number(r.central_modulus),
        "edge": number(r.edge),
        "min_abs_modified": number(r.min_abs_modified),
        "symmetry_error": number(r.symmetry_error),
        "symmetry_error_modified": number(r.symmetry_error_modified),
        "omega": numbers(&r.omega),
        "eigenvalues": numbers(&r.eigenvalues),
        "eigenvalues_modified": numbers(&r.eigenvalues_modified),
    })))
}

fn status(ok: bool) -> Cell {
    if ok { "PASS" } else { "FAIL" }.into()
}

struct Checks {
    table: Table,
    failures: usize,
}

impl Checks {
    /// Records `value ≤ threshold`, failing on NaN.
    fn at_most(&mut self, name: &str, m: usize, c: f64, value: f64, threshold: f64) {
        self.record(name, m, c, value, threshold, value <= threshold);
    }

    fn record(&mut self, name: &str, m: usize, c: f64, value: f64, threshold: f64, ok: bool) {
        if !ok {
            self.failures += 1;
        }
        self.table.push(vec![name.into(), m.into(), c.into(), value.into(), threshold.into(), status(ok)]);
    }
}

fn verify_one(checks: &mut Checks, m: usize, c: f64) -> CliResult<()> {
    let s = spec(m, c)?;
    let h = sym_eigvals(&build_hc(&s).context("H")?).context("eigenvalues")?;
    let k = sym_eigvals(&build_kc(&s).context("K")?).context("eigenvalues")?;
    checks.at_most("k_h_spectrum", m, c, max_diff(&h, &k), 1e-10);

    let sv = bidiag_svd_hra(&build_tc(&s).context("T")?).context("bidiagonal SVD")?;
    let mut twice: Vec<f64> = sv.iter().flat_map(|x| [2.0 * x, -2.0 * x]).collect();
    twice.sort_by(f64::total_cmp);
    checks.at_most("k_twice_singular_values", m, c, max_diff(&k, &twice), 1e-10);

    if c > 0.0 {
        let w = sym_eigvals(&build_wc(&s).context("W")?).context("eigenvalues")?;
        let diff = secular_solve(&s).map_or(f64::NAN, |r| max_diff(&r.eigenvalues(), &w));
        checks.at_most("secular_completeness", m, c, diff, 1e-9);
    }

    let gap = verify_stable_gap(c, &[m], 1e-12).context("stable gap")?[0];
    checks.record("stable_gap_count", m, c, gap.inside as f64, gap.expected_inside as f64, gap.holds());

    let (kt, ht) = build_modified(&s).context("modified matrix")?;
    let ev = sym_eigvals(&ht).context("eigenvalues")?;
    checks.at_most("modified_pairs", m, c, symmetry_error(&ev), 1e-10);
    let radius = stable_gap(c).context("stable gap")?.radius;
    let min_abs = ev.iter().fold(f64::INFINITY, |a, x| a.min(x.abs()));
    checks.record("modified_gap", m, c, min_abs, radius, min_abs >= radius - 1e-10);
    let squares = sym_eigvals(&ht.matmul(&ht)).context("eigenvalues")?;
    let closed = modified_spectrum_closed_form(&s).context("closed form")?;
    checks.at_most("modified_closed_form", m, c, max_diff(&squares, &closed), 1e-9);
    if c == 0.0 {
        let sq = &kt.matmul(&kt) - &blockgap::DenseMatrix::identity(2 * m).scale(4.0);
        checks.at_most("modified_square_is_4i", m, c, blockgap::linalg::op_norm(&sq).context("norm")?, 1e-12);
    }
    Ok(())
}

fn verify(ms: &[usize], cs: &[f64]) -> CliResult<(Output, usize)> {
    let mut checks =
        Checks { table: Table::new(&["invariant", "m", "c", "value", "threshold", "status"]), failures: 0 };
    for &c in cs {
        for &m in ms {
            verify_one(&mut checks, m, c)?;
        }
    }
    Ok((Output::Table(checks.table), checks.failures))
}

/// Runs a model subcommand; the count is the number of failed checks.
pub fn run(cmd: &ModelCommand) -> CliResult<(Output, usize)> {
    let out = match cmd {
        ModelCommand::Secular(a) => secular(a.m, a.c)?,
        ModelCommand::Spurious(a) => spurious(a.m, a.c)?,
        ModelCommand::StableGap { m, c } => stable(m, *c)?,
        ModelCommand::Modified(a) => modified(a.m, a.c)?,
        ModelCommand::Spectrum { size, matrix } => spectrum(size.m, size.c, *matrix)?,
        ModelCommand::Scan { means, delta, m, seed } => scan(means, *delta, *m, *seed)?,
        ModelCommand::Disorder { m, lo, hi, seed, count } => disorder(*m, *lo, *hi, *seed, *count)?,
        ModelCommand::Verify { m, c } => return verify(m, c),
    };
    Ok((out, 0))
}
