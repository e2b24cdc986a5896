use blockgap::gap::{counterexample_suite, nonmono_curve, Family};

use crate::args::{CounterexampleArgs, FamilyArg};
use crate::error::{CliError, CliResult, Context};
use crate::output::{Output, Table};

/// Parses `lo:hi:steps` into `steps` points from `lo` to `hi` inclusive.
pub fn parse_t_range(s: &str) -> CliResult<Vec<f64>> {
    let bad = || CliError::Argument(format!("t-range must be lo:hi:steps with 0 < lo < hi and steps ≥ 2, got {s:?}"));
    let parts: Vec<&str> = s.split(':').collect();
    let [lo, hi, steps] = parts[..] else { return Err(bad()) };
    let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
    let steps: usize = steps.trim().parse().map_err(|_| bad())?;
    if !(lo > 0.0 && lo < hi && hi.is_finite()) || steps < 2 {
        return Err(bad());
    }
    Ok((0..steps).map(|i| lo + (hi - lo) * i as f64 / (steps - 1) as f64).collect())
}

pub fn run(args: &CounterexampleArgs) -> CliResult<Output> {
    let grid = parse_t_range(&args.t_range)?;
    let report = counterexample_suite().context("counterexample suite")?;

    let mut omladic = Table::new(&["t", "inv_norm", "closed_form"]);
    for r in &report.omladic {
        omladic.push(vec![r.t.into(), r.inv_norm.into(), r.closed_form.into()]);
    }
    let b = &report.bottcher;
    let mut bottcher = Table::new(&["norm_i_plus_m", "norm_inv", "split_residual", "conjecture_violated"]);
    bottcher.push(vec![
        b.norm_i_plus_m.into(),
        b.norm_inv.into(),
        b.split_residual.into(),
        b.conjecture_violated.into(),
    ]);
    let mut commuting = Table::new(&["case", "inv_norm"]);
    for (i, r) in report.commuting.iter().enumerate() {
        commuting.push(vec![(i + 1).into(), r.inv_norm.into()]);
    }

    let families = match args.family {
        Some(FamilyArg::KirschBt) => vec![Family::KirschBt],
        Some(FamilyArg::ScaledA) => vec![Family::ScaledA],
        Some(FamilyArg::Simple) => vec![Family::Simple],
        None => vec![Family::KirschBt, Family::ScaledA, Family::Simple],
    };
    let mut curves = Table::new(&["family", "t", "min_abs_eig", "min_pos_eig", "det"]);
    for f in families {
        for p in nonmono_curve(&grid, f).context("gap curve")? {
            curves.push(vec![f.as_str().into(), p.t.into(), p.min_abs_eig.into(), p.min_pos_eig.into(), p.det.into()]);
        }
    }
    Ok(Output::Sections(vec![
        ("omladic", omladic),
        ("bottcher", bottcher),
        ("commuting", commuting),
        ("curves", curves),
    ]))
}
