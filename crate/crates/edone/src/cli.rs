use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use edone_core::classify::atlas;
use edone_core::edone::{build_certificate, decide, verify_with_cap, Verdict, DEFAULT_VERIFY_CAP};
use edone_core::fields::{ConcreteField, FieldSpec};
use edone_core::mat2::pgl_order;
use edone_core::Error;
use serde::Serialize;
use serde_json::{json, Value};

use crate::formats::{
    atlas_json, certificate_from_json, certificate_json, to_pretty, CertificateJson, ReportJson,
};
use crate::{parse_field_spec, parse_group_spec, parse_matrix, InputError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "edone",
    version,
    about = "Decide and certify essential dimension one for finite groups"
)]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether ed_K(G) = 1.
    Decide {
        #[arg(long)]
        field: String,
        #[arg(long)]
        group: String,
    },
    /// Build and check a certificate for a positive verdict.
    Certify {
        #[arg(long)]
        field: String,
        #[arg(long)]
        group: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_VERIFY_CAP)]
        cap: usize,
    },
    /// Re-check a certificate file.
    Verify {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_VERIFY_CAP)]
        cap: usize,
    },
    /// Subgroups of SL2(F_q) up to conjugacy, with their types.
    Atlas {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1024)]
        cap: usize,
    },
    /// Order of a matrix in PGL2.
    Pglorder {
        #[arg(long)]
        field: String,
        #[arg(long)]
        matrix: String,
        #[arg(long, default_value_t = 1000)]
        cap: u64,
    },
    /// Root-of-unity and degree predicates of a field.
    Fieldinfo {
        #[arg(long)]
        field: String,
        #[arg(long)]
        n: u64,
    },
}

/// Output of one command: the payload plus its text projection.
struct Outcome {
    code: i32,
    payload: Value,
    text: String,
}

impl Outcome {
    fn new(code: i32, payload: impl Serialize, text: impl Into<String>) -> Self {
        Outcome {
            code,
            payload: serde_json::to_value(payload).expect("serializable"),
            text: text.into(),
        }
    }
}

#[derive(Serialize)]
struct DecideJson {
    spec: String,
    group: String,
    verdict: &'static str,
    summary: String,
    citation: Option<&'static str>,
    family: Option<String>,
    failed: Option<String>,
    axiom_backed: Option<bool>,
    note: Option<String>,
}

fn decide_json(
    spec: &FieldSpec,
    group: &edone_core::groups::GroupDescriptor,
    v: &Verdict,
) -> DecideJson {
    let mut j = DecideJson {
        spec: spec.to_string(),
        group: group.to_string(),
        verdict: v.name(),
        summary: v.to_string(),
        citation: None,
        family: None,
        failed: None,
        axiom_backed: None,
        note: None,
    };
    match v {
        Verdict::EdZero => {}
        Verdict::EdOne(pos) => {
            j.citation = Some(pos.citation.label());
            j.family = Some(pos.descriptor.to_string());
        }
        Verdict::EdAtLeastTwo(r) => {
            j.citation = Some(r.citation.label());
            j.failed = Some(r.failed.failure_text());
            j.axiom_backed = Some(r.axiom_backed);
            j.note = r.note.clone();
        }
    }
    j
}

fn decide_text(j: &DecideJson) -> String {
    let mut s = j.summary.clone();
    if j.axiom_backed == Some(true) {
        s.push_str("\nlower bound cited, not re-derived");
    }
    if let Some(note) = &j.note {
        s.push_str(&format!("\nnote: {note}"));
    }
    s
}

fn run_decide(field: &str, group: &str) -> Result<Outcome, InputError> {
    let spec = parse_field_spec(field)?;
    let d = parse_group_spec(group)?;
    let v = decide(&spec, &d)?;
    let code = if matches!(v, Verdict::EdAtLeastTwo(_)) {
        EXIT_NEGATIVE
    } else {
        EXIT_OK
    };
    let j = decide_json(&spec, &d, &v);
    let text = decide_text(&j);
    Ok(Outcome::new(code, j, text))
}

fn run_certify(
    field: &str,
    group: &str,
    out: Option<&PathBuf>,
    cap: usize,
) -> Result<Outcome, InputError> {
    let spec = parse_field_spec(field)?;
    let d = parse_group_spec(group)?;
    let v = decide(&spec, &d)?;
    let Verdict::EdOne(pos) = &v else {
        let j = decide_json(&spec, &d, &v);
        let text = decide_text(&j);
        return Ok(Outcome::new(EXIT_NEGATIVE, j, text));
    };
    let mut cert = build_certificate(pos)?;
    let report = verify_with_cap(&cert, cap)?;
    cert.verification = Some(report);
    let cj = certificate_json(&cert);
    let code = if report.all_ok() {
        EXIT_OK
    } else {
        EXIT_VERIFY
    };
    match out {
        Some(path) => {
            std::fs::write(path, to_pretty(&cj))?;
            let text = format!("{v}\nwrote {}", path.display());
            Ok(Outcome::new(
                code,
                json!({ "summary": v.to_string(), "path": path.display().to_string(), "verification": ReportJson::from(report) }),
                text,
            ))
        }
        None => {
            let text = to_pretty(&cj).trim_end().to_string();
            Ok(Outcome::new(code, cj, text))
        }
    }
}

fn report_text(r: &ReportJson) -> String {
    format!(
        "order_ok: {}\niso_ok: {}\nfaithful_ok: {}",
        r.order_ok, r.iso_ok, r.faithful_ok
    )
}

fn run_verify(path: &PathBuf, cap: usize) -> Result<Outcome, InputError> {
    let raw = std::fs::read_to_string(path)?;
    let cj: CertificateJson = serde_json::from_str(&raw)?;
    let cert = certificate_from_json(&cj)?;
    let report = match verify_with_cap(&cert, cap) {
        Ok(r) => r,
        // a closure past the cap means the generators do not match the claim
        Err(Error::CapExceeded { .. }) => Default::default(),
        Err(e) => return Err(e.into()),
    };
    let rj = ReportJson::from(report);
    let code = if report.all_ok() {
        EXIT_OK
    } else {
        EXIT_VERIFY
    };
    Ok(Outcome::new(code, rj, report_text(&rj)))
}

fn run_atlas(q: u64, out: Option<&PathBuf>, cap: usize) -> Result<Outcome, InputError> {
    let a = match atlas(q, cap) {
        Ok(a) => a,
        Err(Error::Unclassifiable { order }) => {
            let msg = format!("subgroup of order {order} matched no Dickson type");
            return Ok(Outcome::new(
                EXIT_VERIFY,
                json!({ "q": q, "error": msg }),
                msg,
            ));
        }
        Err(e) => return Err(e.into()),
    };
    let aj = atlas_json(&a);
    let summary = format!(
        "q={}: {} classes, {} subgroups",
        q,
        aj.classes.len(),
        aj.total_subgroups
    );
    match out {
        Some(path) => {
            std::fs::write(path, to_pretty(&aj))?;
            let text = format!("{summary}\nwrote {}", path.display());
            Ok(Outcome::new(
                EXIT_OK,
                json!({ "summary": summary, "path": path.display().to_string() }),
                text,
            ))
        }
        None => {
            let text = to_pretty(&aj).trim_end().to_string();
            Ok(Outcome::new(EXIT_OK, aj, text))
        }
    }
}

fn concrete_model(spec: &FieldSpec) -> Result<ConcreteField, InputError> {
    ConcreteField::model_of(spec)?.ok_or_else(|| {
        InputError::Format(format!(
            "{spec} has no concrete model; use a finite or number field"
        ))
    })
}

fn run_pglorder(field: &str, matrix: &str, cap: u64) -> Result<Outcome, InputError> {
    let spec = parse_field_spec(field)?;
    let f = concrete_model(&spec)?;
    let m = parse_matrix(&f, matrix)?;
    match pgl_order(&f, &m, cap) {
        Ok(n) => Ok(Outcome::new(
            EXIT_OK,
            json!({ "order": n, "overflow": false }),
            n.to_string(),
        )),
        Err(Error::OrderExceedsCap { .. }) => Ok(Outcome::new(
            EXIT_OK,
            json!({ "order": null, "overflow": true, "cap": cap }),
            "OVERFLOW",
        )),
        Err(e) => Err(e.into()),
    }
}

fn run_fieldinfo(field: &str, n: u64) -> Result<Outcome, InputError> {
    let spec = parse_field_spec(field)?;
    if n == 0 {
        return Err(InputError::Parse {
            pos: 0,
            msg: "n must be positive".into(),
        });
    }
    let zeta = spec.contains_zeta(n);
    let zeta_plus = spec.contains_zeta_plus(n).ok();
    let degree: Value = match spec {
        FieldSpec::FiniteField { k, .. } => json!(k),
        FieldSpec::RationalFunctionOverFinite { .. } | FieldSpec::AlgClosure(1..) => {
            json!("infinite")
        }
        _ => Value::Null,
    };
    let show = |v: Option<bool>| {
        v.map_or("n/a (characteristic divides n)".to_string(), |b| {
            b.to_string()
        })
    };
    let degree_text = match &degree {
        Value::Null => "n/a (characteristic 0)".to_string(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    };
    let text = format!(
        "field: {spec}\ncharacteristic: {}\ncontains_zeta({n}): {zeta}\ncontains_zeta_plus({n}): {}\nfp_degree: {degree_text}",
        spec.characteristic(),
        show(zeta_plus),
    );
    let payload = json!({
        "spec": spec.to_string(),
        "characteristic": spec.characteristic(),
        "n": n,
        "contains_zeta": zeta,
        "contains_zeta_plus": zeta_plus,
        "fp_degree": degree,
    });
    Ok(Outcome::new(EXIT_OK, payload, text))
}

/// Runs one command, writing to `out` and `err`; returns the exit code.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match &cli.command {
        Command::Decide { field, group } => run_decide(field, group),
        Command::Certify {
            field,
            group,
            out,
            cap,
        } => run_certify(field, group, out.as_ref(), *cap),
        Command::Verify { path, cap } => run_verify(path, *cap),
        Command::Atlas { q, out, cap } => run_atlas(*q, out.as_ref(), *cap),
        Command::Pglorder { field, matrix, cap } => run_pglorder(field, matrix, *cap),
        Command::Fieldinfo { field, n } => run_fieldinfo(field, *n),
    };
    match result {
        Ok(o) => {
            let body = if cli.json {
                to_pretty(&o.payload)
            } else {
                format!("{}\n", o.text)
            };
            let _ = out.write_all(body.as_bytes());
            o.code
        }
        Err(e) => {
            if cli.json {
                let _ = out.write_all(to_pretty(&json!({ "error": e.to_string() })).as_bytes());
            }
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

pub fn main() -> i32 {
    let cli = Cli::parse();
    execute(
        &cli,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    )
}
