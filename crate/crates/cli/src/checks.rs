//! The numeric subcommands and the factorization check.

use archi_euler::{check_factorization, FactorizationCheck, Identity, SatakeMultiset};
use archi_gamma::{barnes_first, barnes_second, gamma_r, straight_contour, Complex64, GammaError, Scalar};
use archi_mellin::{cached_grid, contour_integral, ContourSpec, GridOptions, MellinError, WhittakerEvaluator, WhittakerSpec};
use archi_zeta::{
    adjoint_cohomology_pairing, adjoint_pairing, critical_set, rs_cohomology_pairing, rs_zeta, Cx, MembershipOptions,
    QuadDiagnostics, Report, RsParams, Verdict, ZetaError, REPORT_VERSION,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::rep_suite::CheckRecord;
use crate::Status;

pub const BARNES_TOL: f64 = 1e-8;
pub const RS_TOL: f64 = 1e-6;
pub const ADJOINT_TOL: f64 = 1e-4;
pub const WHITTAKER_TOL: f64 = 1e-8;

pub struct Outcome {
    pub status: Status,
    pub reports: Vec<Value>,
    pub cache_hits: usize,
}

impl Outcome {
    pub fn new(status: Status, reports: Vec<Value>) -> Self {
        Self { status, reports, cache_hits: 0 }
    }
}

pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { status: Status::UsageError, message: message.into() }
    }
}

fn mellin_status(e: &MellinError) -> Status {
    match e {
        MellinError::InvalidSpec(_) => Status::UsageError,
        MellinError::Io(_) | MellinError::CacheFormat(_) | MellinError::Gamma(_) => Status::Error,
        _ => Status::QuadratureFailure,
    }
}

impl From<ZetaError> for Failure {
    fn from(e: ZetaError) -> Self {
        let status = match &e {
            ZetaError::InvalidParams(_) | ZetaError::Divergent(_) | ZetaError::NonCritical(_) => Status::UsageError,
            ZetaError::Mellin(m) => mellin_status(m),
            ZetaError::Gamma(_) | ZetaError::Rep(_) => Status::Error,
        };
        Self { status, message: e.to_string() }
    }
}

impl From<MellinError> for Failure {
    fn from(e: MellinError) -> Self {
        Self { status: mellin_status(&e), message: e.to_string() }
    }
}

impl From<GammaError> for Failure {
    fn from(e: GammaError) -> Self {
        Self { status: Status::Error, message: e.to_string() }
    }
}

fn to_value(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

/// Quadrature failure first: a mismatch is only meaningful once the numbers are resolved.
fn judge(quadrature_ok: bool, ok: bool) -> Status {
    if !quadrature_ok {
        Status::QuadratureFailure
    } else if ok {
        Status::Ok
    } else {
        Status::Mismatch
    }
}

fn resolved(d: &QuadDiagnostics, tol: f64) -> bool {
    d.tail_bound <= tol && d.coarse_difference <= tol
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

pub fn barnes(run: &RunConfig, count: usize, seed: u64) -> Result<Outcome, Failure> {
    let tol = run.tolerance(BARNES_TOL);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = |n: usize| -> Vec<Complex64> {
        (0..n).map(|_| Complex64::new(rng.gen_range(0.5..3.0), rng.gen_range(-1.0..1.0))).collect()
    };
    let g = |z: Complex64| gamma_r(z).unwrap_or(Complex64::new(f64::NAN, f64::NAN));
    let (mut quad_ok, mut ok) = (true, true);
    let mut reports = Vec::new();
    for _ in 0..count {
        for lemma in ["barnes_first", "barnes_second"] {
            // left parameters first: two for the first lemma, three for the second
            let (n, split) = if lemma == "barnes_first" { (4, 2) } else { (5, 3) };
            let p = draw(n);
            let sigma = straight_contour(&p[..split], &p[split..]).ok_or_else(|| Failure::usage("no separating line"))?;
            let spec = ContourSpec { c: sigma, ..run.line(ContourSpec::default()) };
            let s: Vec<Scalar> = p.iter().map(|&z| Scalar::Numeric(z)).collect();
            let (numeric, closed) = if lemma == "barnes_first" {
                let v = contour_integral(|z| g(z + p[0]) * g(z + p[1]) * g(p[2] - z) * g(p[3] - z), &spec)?;
                (v, barnes_first(&s[0], &s[1], &s[2], &s[3])?)
            } else {
                let total: Complex64 = p.iter().sum();
                let v = contour_integral(
                    |z| g(z + p[0]) * g(z + p[1]) * g(z + p[2]) * g(p[3] - z) * g(p[4] - z) / g(z + total),
                    &spec,
                )?;
                (v, barnes_second(&s[0], &s[1], &s[2], &s[3], &s[4])?)
            };
            let rel = (numeric.value - closed).norm() / closed.norm();
            let this_quad = numeric.error <= tol * closed.norm();
            quad_ok &= this_quad;
            ok &= rel <= tol;
            let params: Vec<[f64; 2]> = p.iter().map(|&z| pair(z)).collect();
            let report = Report::new(
                lemma,
                json!({ "parameters": params, "tolerance": tol }),
                numeric.value,
                closed,
                Verdict::check(rel <= tol),
                json!({ "abscissa": sigma, "height": spec.t_max, "nodes": spec.nodes, "error_estimate": numeric.error,
                        "tail_bound": numeric.tail_bound, "richardson": numeric.richardson }),
            );
            reports.push(to_value(&report));
        }
    }
    Ok(Outcome::new(judge(quad_ok, ok), reports))
}

pub fn rs_params(ell: u32, kappa: u32, w_sigma: i64, w_pi: Option<i64>) -> Result<RsParams, Failure> {
    let p = RsParams { ell, kappa, w_sigma, w_pi: w_pi.unwrap_or((kappa % 2) as i64) };
    p.validate()?;
    Ok(p)
}

pub fn rs(run: &RunConfig, params: RsParams, eps: i8, s: f64) -> Result<Outcome, Failure> {
    let tol = run.tolerance(RS_TOL);
    let r = rs_zeta(params, eps, s, &run.quad())?;
    let status = judge(resolved(&r.diagnostics, tol), r.passes(tol));
    Ok(Outcome { status, reports: vec![to_value(&r.to_report(tol))], cache_hits: r.diagnostics.cache_hits })
}

pub fn adjoint(run: &RunConfig, ell: u32) -> Result<Outcome, Failure> {
    let tol = run.tolerance(ADJOINT_TOL);
    let r = adjoint_pairing(ell, &run.quad())?;
    let status = judge(resolved(&r.diagnostics, tol), r.passes(tol));
    Ok(Outcome { status, reports: vec![to_value(&r.to_report(tol))], cache_hits: r.diagnostics.cache_hits })
}

pub struct MembershipArgs {
    pub ell: u32,
    pub kappa: Option<u32>,
    pub w_sigma: i64,
    pub w_pi: Option<i64>,
    pub epsilon: Option<i8>,
    pub m: Option<i64>,
    pub numeric: bool,
}

pub fn membership(run: &RunConfig, a: &MembershipArgs) -> Result<Outcome, Failure> {
    let mut opts = MembershipOptions::default();
    if let Some(t) = run.tol {
        opts.tolerance = t;
    }
    let Some(kappa) = a.kappa else {
        let r = adjoint_cohomology_pairing(a.ell, a.w_sigma, &run.quad(), &opts)?;
        let nonzero = r.reconstruction.as_ref().is_some_and(|q| q.numerator != 0);
        let status = if r.verdict.ok() && nonzero { Status::Ok } else { Status::Mismatch };
        let mut report = to_value(&r.to_report());
        report["diagnostics"]["nonzero"] = json!(nonzero);
        return Ok(Outcome::new(status, vec![report]));
    };
    let params = rs_params(a.ell, kappa, a.w_sigma, a.w_pi)?;
    if a.numeric {
        opts.numeric_check = Some(run.quad());
    }
    let ms = match a.m {
        Some(m) => vec![m],
        None => critical_set(&params, -(a.ell as i64), a.ell as i64),
    };
    let signs = match a.epsilon {
        Some(e) => vec![e],
        None => vec![1, -1],
    };
    let mut ok = true;
    let mut reports = Vec::new();
    for &m in &ms {
        for &eps in &signs {
            for class_sign in [1i8, -1] {
                let r = rs_cohomology_pairing(params, eps, class_sign, m, &opts)?;
                let pattern = r.vanishes == r.expected_vanishing;
                ok &= pattern && r.verdict.ok();
                let mut report = to_value(&r.to_report());
                report["diagnostics"]["vanishing_pattern_ok"] = json!(pattern);
                reports.push(report);
            }
        }
    }
    Ok(Outcome::new(if ok { Status::Ok } else { Status::Mismatch }, reports))
}

#[derive(Serialize)]
struct NegativeControl {
    perturbation: &'static str,
    detected: bool,
    differing_elements: usize,
}

fn negative_controls(identity: Identity) -> Vec<NegativeControl> {
    let (left, factors) = identity.sides();
    let factors: Vec<SatakeMultiset> = factors.into_iter().map(|(_, f)| f).collect();
    let mut dropped = factors.clone();
    dropped[0] = SatakeMultiset::new(dropped[0].elements().into_iter().skip(1));
    let mut twisted = factors.clone();
    let last = twisted.len() - 1;
    twisted[last] = twisted[last].twist(1);
    let cases = [
        ("drop_one_right", left.clone(), dropped),
        ("extra_left", left.union(&SatakeMultiset::trivial()), factors.clone()),
        ("twist_last_factor", left, twisted),
    ];
    cases
        .into_iter()
        .map(|(perturbation, l, f)| {
            let c = FactorizationCheck::compare(identity, l, &f);
            NegativeControl { perturbation, detected: !c.equal, differing_elements: c.diff_size() }
        })
        .collect()
}

pub fn factorization(id: Option<&str>) -> Result<Outcome, Failure> {
    let names: Vec<&str> = match id {
        Some(n) => vec![n],
        None => vec![Identity::Sym2XSym2.name(), Identity::TripleProduct.name()],
    };
    let mut ok = true;
    let mut reports = Vec::new();
    for name in names {
        let check = check_factorization(name).map_err(|e| Failure::usage(e.to_string()))?;
        let controls = negative_controls(check.identity);
        let record = CheckRecord::run("factorization", json!({ "id": name }), || {
            let detail = json!({ "identity": check, "negative_controls": controls });
            if !check.equal || !check.euler_factors_agree {
                Err(format!("sides differ: {detail}"))
            } else if controls.iter().any(|c| !c.detected) {
                Err(format!("a perturbation went undetected: {detail}"))
            } else {
                Ok(detail)
            }
        });
        ok &= record.verdict.ok();
        reports.push(to_value(&record));
    }
    Ok(Outcome::new(if ok { Status::Ok } else { Status::Mismatch }, reports))
}

#[derive(Serialize)]
struct GridValue {
    value: Cx,
    relative_difference: f64,
    probe_error: f64,
    probes: usize,
}

#[derive(Serialize)]
struct WhittakerValue {
    version: u32,
    check: &'static str,
    params: Value,
    value: Cx,
    /// Relative change when every line is doubled in height and nodes.
    doubled_difference: f64,
    grid: Option<GridValue>,
    verdict: Verdict,
}

pub struct WhittakerArgs {
    pub ell: u32,
    pub j: [u32; 3],
    pub w_sigma: i64,
    pub epsilon: i8,
    pub a1: Vec<f64>,
    pub a2: Vec<f64>,
}

pub fn whittaker(run: &RunConfig, a: &WhittakerArgs) -> Result<Outcome, Failure> {
    if a.a1.len() != a.a2.len() {
        return Err(Failure::usage(format!("--a1 has {} points but --a2 has {}", a.a1.len(), a.a2.len())));
    }
    let tol = run.tolerance(WHITTAKER_TOL);
    let spec = WhittakerSpec::gl3_monomial(a.ell, a.w_sigma, a.epsilon, a.j)?;
    let contours = run.contours();
    let ev = WhittakerEvaluator::new(&spec, &contours)?;
    let fine = WhittakerEvaluator::new(&spec, &contours.doubled())?;
    let grid = match &run.cache_dir {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(MellinError::from)?;
            Some(cached_grid(dir, &spec, &run.geometry(), &contours, &GridOptions::default())?)
        }
        None => None,
    };
    let mut ok = true;
    let mut reports = Vec::new();
    for (&a1, &a2) in a.a1.iter().zip(&a.a2) {
        let v = ev.eval(a1, a2);
        let d = (v - fine.eval(a1, a2)).norm() / v.norm().max(f64::MIN_POSITIVE);
        let g = match &grid {
            Some((g, _)) => {
                let w = g.interpolate(a1, a2)?;
                Some(GridValue {
                    value: w.into(),
                    relative_difference: (w - v).norm() / v.norm().max(f64::MIN_POSITIVE),
                    probe_error: g.report.max_error,
                    probes: g.report.probes,
                })
            }
            None => None,
        };
        ok &= d <= tol;
        reports.push(to_value(&WhittakerValue {
            version: REPORT_VERSION,
            check: "whittaker_gl3",
            params: json!({ "ell": a.ell, "j": a.j, "w": a.w_sigma, "epsilon": a.epsilon, "a1": a1, "a2": a2, "tolerance": tol }),
            value: v.into(),
            doubled_difference: d,
            grid: g,
            verdict: Verdict::check(d <= tol),
        }));
    }
    let cache_hits = grid.map_or(0, |(_, hit)| hit as usize);
    Ok(Outcome { status: judge(ok, true), reports, cache_hits })
}
