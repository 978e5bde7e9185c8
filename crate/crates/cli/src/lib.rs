//! The `archi` command line: every verification as a subcommand, one
//! versioned JSON document per run.

pub mod checks;
pub mod config;
pub mod rep_suite;

use std::time::{Instant, SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::{json, Value};

use checks::{Failure, MembershipArgs, Outcome, WhittakerArgs};
use config::{Check, Cli, Command, EvalTarget, Format, RunConfig};

/// Version of the document layout; see docs/report-schema.json.
pub const SCHEMA_VERSION: u32 = 1;

/// Exit code for a malformed command line or unsupported parameters.
pub const EXIT_USAGE: i32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Mismatch,
    QuadratureFailure,
    UsageError,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch | Status::Error => 1,
            Status::QuadratureFailure => 2,
            Status::UsageError => EXIT_USAGE,
        }
    }
}

/// Everything that may differ between runs with identical configuration.
#[derive(Clone, Debug, Serialize)]
pub struct Envelope {
    pub timestamp_unix: u64,
    pub elapsed_seconds: f64,
    pub cache_hits: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Document {
    pub schema_version: u32,
    pub command: String,
    pub arguments: Value,
    pub config: RunConfig,
    pub status: Status,
    pub exit_code: i32,
    pub error: Option<String>,
    pub reports: Vec<Value>,
    pub envelope: Envelope,
}

impl Document {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize") + "\n"
    }

    /// Human output, derived from the JSON form.
    pub fn to_text(&self) -> String {
        let doc = serde_json::to_value(self).expect("documents serialize");
        render_text(&doc)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }
}

fn render_text(doc: &Value) -> String {
    let mut out = format!("archi {}: {} (exit {})\n", doc["command"].as_str().unwrap_or("?"), doc["status"].as_str().unwrap_or("?"), doc["exit_code"]);
    if let Some(e) = doc["error"].as_str() {
        out += &format!("  error: {e}\n");
    }
    for r in doc["reports"].as_array().into_iter().flatten() {
        let name = r.get("lemma").or_else(|| r.get("check")).and_then(Value::as_str).unwrap_or("?");
        let mut line = format!("  {:<5} {name} {}", r["verdict"].as_str().unwrap_or("?"), r["params"]);
        if let Some(d) = r["deviation"]["relative"].as_f64() {
            line += &format!(" rel_dev={d:.3e}");
        }
        if let (Some(re), Some(im)) = (r["value"]["re"].as_f64(), r["value"]["im"].as_f64()) {
            line += &format!(" value={re:.15e}{im:+.15e}i");
        }
        if let Some(f) = r["detail"]["failure"].as_str() {
            line += &format!(" failure: {f}");
        }
        out += &line;
        out.push('\n');
    }
    out
}

/// The document with its envelope removed: what determinism is judged on.
pub fn strip_envelope(json: &str) -> Result<Value, serde_json::Error> {
    let mut v: Value = serde_json::from_str(json)?;
    if let Some(o) = v.as_object_mut() {
        o.remove("envelope");
    }
    Ok(v)
}

fn describe(command: &Command) -> (String, Value) {
    match command {
        Command::Verify(c) => match c {
            Check::Rep { max_ell, corrupt_basis } => ("verify rep".into(), json!({ "max_ell": max_ell, "corrupt_basis": corrupt_basis })),
            Check::Barnes { count, seed } => ("verify barnes".into(), json!({ "count": count, "seed": seed })),
            Check::RsZeta { weights, epsilon, s } => (
                "verify rs-zeta".into(),
                json!({ "ell": weights.ell, "kappa": weights.kappa, "w_sigma": weights.w_sigma, "w_pi": weights.w_pi,
                        "epsilon": epsilon, "s": s }),
            ),
            Check::Adjoint { ell } => ("verify adjoint".into(), json!({ "ell": ell })),
            Check::Membership { ell, kappa, w_sigma, w_pi, epsilon, m, numeric } => (
                "verify membership".into(),
                json!({ "ell": ell, "kappa": kappa, "w_sigma": w_sigma, "w_pi": w_pi, "epsilon": epsilon, "m": m, "numeric": numeric }),
            ),
            Check::Factorization { id } => ("verify factorization".into(), json!({ "id": id })),
        },
        Command::Eval(EvalTarget::Whittaker { ell, j, w_sigma, epsilon, a1, a2 }) => (
            "eval whittaker".into(),
            json!({ "ell": ell, "j": j, "w_sigma": w_sigma, "epsilon": epsilon, "a1": a1.0, "a2": a2.0 }),
        ),
    }
}

fn dispatch(command: &Command, run: &RunConfig) -> Result<Outcome, Failure> {
    match command {
        Command::Verify(c) => match c {
            Check::Rep { max_ell, corrupt_basis } => {
                let records = rep_suite::rep_suite(*max_ell, *corrupt_basis);
                let ok = records.iter().all(|r| r.verdict.ok());
                let reports = records.iter().map(|r| serde_json::to_value(r).expect("records serialize")).collect();
                Ok(Outcome::new(if ok { Status::Ok } else { Status::Mismatch }, reports))
            }
            Check::Barnes { count, seed } => checks::barnes(run, *count, *seed),
            Check::RsZeta { weights, epsilon, s } => {
                let p = checks::rs_params(weights.ell, weights.kappa, weights.w_sigma, weights.w_pi)?;
                checks::rs(run, p, *epsilon, *s)
            }
            Check::Adjoint { ell } => checks::adjoint(run, *ell),
            Check::Membership { ell, kappa, w_sigma, w_pi, epsilon, m, numeric } => checks::membership(
                run,
                &MembershipArgs { ell: *ell, kappa: *kappa, w_sigma: *w_sigma, w_pi: *w_pi, epsilon: *epsilon, m: *m, numeric: *numeric },
            ),
            Check::Factorization { id } => checks::factorization(id.as_deref()),
        },
        Command::Eval(EvalTarget::Whittaker { ell, j, w_sigma, epsilon, a1, a2 }) => checks::whittaker(
            run,
            &WhittakerArgs { ell: *ell, j: *j, w_sigma: *w_sigma, epsilon: *epsilon, a1: a1.0.clone(), a2: a2.0.clone() },
        ),
    }
}

/// Runs a parsed command line. Output assembly is single-threaded, so equal
/// inputs give equal documents apart from the envelope.
pub fn run(cli: &Cli) -> Document {
    let start = Instant::now();
    let config = RunConfig::from(&cli.run);
    let (command, arguments) = describe(&cli.command);
    let (status, error, reports, cache_hits) = match dispatch(&cli.command, &config) {
        Ok(o) => (o.status, None, o.reports, o.cache_hits),
        Err(f) => (f.status, Some(f.message), Vec::new(), 0),
    };
    let timestamp_unix = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    Document {
        schema_version: SCHEMA_VERSION,
        command,
        arguments,
        config,
        status,
        exit_code: status.exit_code(),
        error,
        reports,
        envelope: Envelope { timestamp_unix, elapsed_seconds: start.elapsed().as_secs_f64(), cache_hits },
    }
}
