use blockgap::gap::{counterexample_suite, eig_4x4, inv_iplusac_bound, nonmono_curve, Family, Quartic4x4Params};
use blockgap::linalg::Tolerances;
use std::time::Instant;

fn grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    (0..steps).map(|i| lo + (hi - lo) * (i as f64 + 0.5) / steps as f64).collect()
}

#[test]
fn bottcher_norms() {
    let start = Instant::now();
    let r = counterexample_suite().unwrap();
    assert!(start.elapsed().as_secs_f64() < 1.0);
    let b = &r.bottcher;
    assert!((b.norm_i_plus_m - 21.177).abs() < 1e-3, "{}", b.norm_i_plus_m);
    assert!((b.norm_inv - 43.774).abs() < 1e-3, "{}", b.norm_inv);
    assert!(b.conjecture_violated && b.split_residual < 1e-13);
    let bound = inv_iplusac_bound(&b.a, &b.c, Tolerances::default()).unwrap();
    assert!(b.norm_inv <= bound);
}

#[test]
fn omladic_growth() {
    let r = counterexample_suite().unwrap();
    for row in &r.omladic {
        assert!((row.inv_norm - row.closed_form).abs() < 1e-10 * row.closed_form);
    }
    let last = r.omladic.last().unwrap();
    assert_eq!(last.t, 100.0);
    assert!(last.inv_norm >= 100.0 / 3.0);
    assert!(r.omladic.windows(2).all(|w| w[1].inv_norm > w[0].inv_norm));
    assert!(r.commuting.iter().all(|row| row.inv_norm <= 1.0 + 1e-14));
}

#[test]
fn kirsch_curve_rises_then_falls() {
    let pts = nonmono_curve(&grid(5.0, 20.0, 300), Family::KirschBt).unwrap();
    for p in &pts {
        let q = eig_4x4(&Quartic4x4Params::kirsch(p.t)).unwrap();
        assert!((p.min_abs_eig - q[2]).abs() < 1e-10, "t = {}", p.t);
    }
    let steps: Vec<f64> = pts.windows(2).map(|w| w[1].min_abs_eig - w[0].min_abs_eig).collect();
    let rise = steps.iter().copied().fold(0.0, f64::max);
    let fall = steps.iter().copied().fold(0.0, f64::min);
    assert!(rise >= 1e-6 && fall <= -1e-6, "{rise} {fall}");
}

#[test]
fn simple_family_keeps_determinant() {
    let pts = nonmono_curve(&grid(0.1, 20.0, 200), Family::Simple).unwrap();
    assert!(pts.iter().all(|p| (p.det - 1.0).abs() < 1e-10));
    assert!(pts.windows(2).all(|w| w[1].min_pos_eig < w[0].min_pos_eig));
}

#[test]
fn scaled_a_is_not_monotone() {
    let pts = nonmono_curve(&grid(5.0, 20.0, 300), Family::ScaledA).unwrap();
    let d: Vec<f64> = pts.windows(2).map(|w| w[1].min_abs_eig - w[0].min_abs_eig).collect();
    assert!(d.iter().any(|&x| x > 1e-8) && d.iter().any(|&x| x < -1e-8));
}
