use blockgap::gap::{
    diag_gap, hbinv_certificate, kirsch_certificate_for, stretch_certificate, winklmeier_certificate,
    zero_dichotomy_certificate, BlockSaddle, Claim, GapCertificate,
};
use serde_json::{json, Map, Value};

use super::read_saddle;
use crate::args::{BoundsArgs, MethodArg};
use crate::error::{CliResult, Context};
use crate::output::{number, numbers, Output};
use blockgap::linalg::Tolerances;

/// Absolute margin below which an eigenvalue on an interval edge does not
/// count against a certificate.
pub const MARGIN: f64 = 1e-10;

type Certifier = fn(&BlockSaddle) -> blockgap::Result<GapCertificate>;

const METHODS: [(MethodArg, &str, Certifier); 6] = [
    (MethodArg::Diag, "diag", diag_gap),
    (MethodArg::Stretch, "stretch", stretch_certificate),
    (MethodArg::Hbinv, "hbinv", hbinv_certificate),
    (MethodArg::ZeroDichotomy, "zero-dichotomy", zero_dichotomy_certificate),
    (MethodArg::Kirsch, "kirsch", kirsch_certificate_for),
    (MethodArg::Winklmeier, "winklmeier", winklmeier_certificate),
];

pub fn certificate_json(cert: &GapCertificate) -> Value {
    let quantities: Map<String, Value> = cert.quantities.iter().map(|(k, v)| ((*k).to_owned(), number(*v))).collect();
    json!({
        "method": cert.method.as_str(),
        "interval": [number(cert.lo), number(cert.hi)],
        "claim": cert.claim.as_str(),
        "inv_norm_bound": cert.inv_norm_bound.map_or(Value::Null, number),
        "quantities": quantities,
    })
}

/// Checks the interval and the inverse bound against the spectrum.
pub fn verdict(cert: &GapCertificate, eigenvalues: &[f64]) -> &'static str {
    let interval_ok = cert.is_sound(eigenvalues, MARGIN);
    let bound_ok = cert.inv_norm_bound.is_none_or(|bound| {
        let smallest = eigenvalues
            .iter()
            .map(|x| x.abs())
            .filter(|&x| cert.claim == Claim::Empty || x > MARGIN)
            .fold(f64::INFINITY, f64::min);
        smallest * bound * (1.0 + 1e-9) >= 1.0
    });
    if interval_ok && bound_ok {
        "SOUND"
    } else {
        "UNSOUND"
    }
}

pub fn run(args: &BoundsArgs, tol: Tolerances) -> CliResult<Output> {
    let h = read_saddle(&args.input, tol)?;
    let eigenvalues = h.eigenvalues().context("eigenvalue oracle")?;
    let with_verdict = |cert: &GapCertificate| {
        let mut v = certificate_json(cert);
        v["verdict"] = json!(verdict(cert, &eigenvalues));
        v
    };
    if args.method != MethodArg::All {
        let (_, name, certify) = METHODS.iter().find(|(m, _, _)| *m == args.method).expect("every method is listed");
        let cert = certify(&h).context(format!("{name} certificate"))?;
        return Ok(Output::Json(with_verdict(&cert)));
    }
    let mut certificates = Vec::new();
    let mut skipped = Vec::new();
    for (_, name, certify) in METHODS {
        match certify(&h) {
            Ok(cert) => certificates.push(with_verdict(&cert)),
            Err(e) => skipped.push(json!({ "method": name, "reason": e.to_string() })),
        }
    }
    Ok(Output::Json(json!({
        "eigenvalues": numbers(&eigenvalues),
        "certificates": certificates,
        "skipped": skipped,
    })))
}
