//! Certificate and atlas JSON.

use edone_core::classify::Atlas;
use edone_core::edone::{Certificate, Citation, Report};
use edone_core::fields::{ConcreteField, FieldKind};
use edone_core::poly::IntPoly;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::parse::{parse_field_spec, parse_group_spec, parse_matrix};
use crate::InputError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationJson {
    /// `prime`, `extension`, `rationals` or `number`.
    pub kind: String,
    pub characteristic: u64,
    /// Defining polynomial, constant term first; empty for prime fields and ℚ.
    pub modulus: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub label: String,
    pub matrix: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub order_ok: bool,
    pub iso_ok: bool,
    pub faithful_ok: bool,
}

impl From<Report> for ReportJson {
    fn from(r: Report) -> Self {
        ReportJson {
            order_ok: r.order_ok,
            iso_ok: r.iso_ok,
            faithful_ok: r.faithful_ok,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub spec: String,
    pub descriptor: String,
    pub family: String,
    pub citation: String,
    pub realization: RealizationJson,
    pub generators: Vec<GeneratorJson>,
    pub action: String,
    pub verification: Option<ReportJson>,
}

pub fn realization_json(f: &ConcreteField) -> RealizationJson {
    let (kind, modulus) = match f.kind() {
        FieldKind::PrimeField(_) => ("prime", vec![]),
        FieldKind::ExtField { modulus, .. } => {
            ("extension", modulus.iter().map(|&c| c as i64).collect())
        }
        FieldKind::Rationals => ("rationals", vec![]),
        FieldKind::NumberField(poly) => ("number", poly.to_i64_vec()),
    };
    RealizationJson {
        kind: kind.into(),
        characteristic: f.characteristic(),
        modulus,
    }
}

pub fn realization_from_json(r: &RealizationJson) -> Result<ConcreteField, InputError> {
    let bad = |msg: &str| InputError::Format(msg.into());
    let field = match r.kind.as_str() {
        "prime" => ConcreteField::finite(r.characteristic, 1)?,
        "extension" => {
            let modulus = r
                .modulus
                .iter()
                .map(|&c| u64::try_from(c).ok().filter(|&c| c < r.characteristic))
                .collect::<Option<Vec<u64>>>()
                .ok_or_else(|| bad("modulus coefficients must lie in [0, p)"))?;
            ConcreteField::finite_with_modulus(r.characteristic, modulus)?
        }
        "rationals" => ConcreteField::Rationals,
        "number" => {
            if r.characteristic != 0 {
                return Err(bad("number fields have characteristic 0"));
            }
            ConcreteField::number_field(IntPoly::new(
                r.modulus.iter().map(|&c| BigInt::from(c)).collect(),
            ))?
        }
        other => return Err(bad(&format!("unknown realization kind {other:?}"))),
    };
    Ok(field)
}

pub fn certificate_json(c: &Certificate) -> CertificateJson {
    CertificateJson {
        spec: c.spec.to_string(),
        descriptor: c.claimed.to_string(),
        family: c.descriptor.to_string(),
        citation: c.citation.label().into(),
        realization: realization_json(&c.realization),
        generators: c
            .generators
            .iter()
            .map(|(label, m)| GeneratorJson {
                label: label.clone(),
                matrix: m.display(&c.realization).to_string(),
            })
            .collect(),
        action: c.action_note.clone(),
        verification: c.verification.map(Into::into),
    }
}

pub fn certificate_from_json(j: &CertificateJson) -> Result<Certificate, InputError> {
    let realization = realization_from_json(&j.realization)?;
    let generators = j
        .generators
        .iter()
        .map(|g| Ok((g.label.clone(), parse_matrix(&realization, &g.matrix)?)))
        .collect::<Result<Vec<_>, InputError>>()?;
    Ok(Certificate {
        spec: parse_field_spec(&j.spec)?,
        claimed: parse_group_spec(&j.descriptor)?,
        descriptor: parse_group_spec(&j.family)?,
        citation: Citation::from_label(&j.citation)
            .ok_or_else(|| InputError::Format(format!("unknown citation {:?}", j.citation)))?,
        realization,
        generators,
        action_note: j.action.clone(),
        verification: j.verification.map(|r| Report {
            order_ok: r.order_ok,
            iso_ok: r.iso_ok,
            faithful_ok: r.faithful_ok,
        }),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasClassJson {
    pub order: usize,
    #[serde(rename = "type")]
    pub dtype: String,
    pub case: String,
    pub generators: Vec<String>,
    pub conjugates: usize,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasJson {
    pub q: u64,
    pub realization: RealizationJson,
    pub total_subgroups: usize,
    pub classes: Vec<AtlasClassJson>,
}

pub fn atlas_json(a: &Atlas) -> AtlasJson {
    AtlasJson {
        q: a.q,
        realization: realization_json(&a.field),
        total_subgroups: a.total_subgroups(),
        classes: a
            .classes
            .iter()
            .map(|c| AtlasClassJson {
                order: c.order,
                dtype: c.dtype.label(),
                case: c.dtype.case().into(),
                generators: c
                    .generators
                    .iter()
                    .map(|m| m.display(&a.field).to_string())
                    .collect(),
                conjugates: c.conjugates,
                notes: c.notes.iter().map(|t| t.label()).collect(),
            })
            .collect(),
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}
