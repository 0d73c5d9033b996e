//! Decision procedure for `ed_K(G) = 1`, certificates built from explicit
//! Möbius actions, and an independent certificate checker.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::fields::{build_realization, ConcreteField, FieldElem, FieldSpec, Requirements};
use crate::groups::{
    action_is_faithful, are_isomorphic, close_generated, gnpr_generators, make_abstract, make_sl2,
    GroupDescriptor,
};
use crate::mat2::Mat2;

/// Largest closure `verify` builds by default.
pub const DEFAULT_VERIFY_CAP: usize = 4096;

/// The result a verdict rests on. `label()` gives its printed name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Citation {
    FamilyList,
    CyclicCriterion,
    DihedralCriterion,
    GnprCriterion,
    SL2Criterion,
    ElemAbelianCharP,
    ElemAbelianWithRoots,
    EvenGnprBound,
}

impl Citation {
    pub const ALL: [Citation; 8] = [
        Citation::FamilyList,
        Citation::CyclicCriterion,
        Citation::DihedralCriterion,
        Citation::GnprCriterion,
        Citation::SL2Criterion,
        Citation::ElemAbelianCharP,
        Citation::ElemAbelianWithRoots,
        Citation::EvenGnprBound,
    ];

    pub fn from_label(label: &str) -> Option<Citation> {
        Self::ALL.into_iter().find(|c| c.label() == label)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Citation::FamilyList => "Theorem 1.2",
            Citation::CyclicCriterion => "Theorem 1.3",
            Citation::DihedralCriterion => "Theorem 1.4",
            Citation::GnprCriterion => "Theorem 1.5",
            Citation::SL2Criterion => "Theorem 1.6",
            Citation::ElemAbelianCharP => "Lemma 2.7",
            Citation::ElemAbelianWithRoots => "Theorem 2.8",
            Citation::EvenGnprBound => "Lemma 7.3",
        }
    }

    /// Lower bounds taken as given rather than re-derived.
    pub fn is_axiom(&self) -> bool {
        matches!(self, Citation::FamilyList | Citation::ElemAbelianWithRoots)
    }
}

/// A predicate on the field or the group that a verdict needed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    ZetaPlus(u64),
    Zeta(u64),
    FpDegree(u32),
    ContainsFq(u64),
    Cardinality(u64),
    CharIs(u64),
    OddN(u64),
    /// `n` equals the characteristic.
    EqualsChar(u64),
    /// The group is one of the families allowed in the field's characteristic.
    ListedFamily(GroupDescriptor),
}

fn subscript(n: u64) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    format!("{n}")
        .bytes()
        .map(|b| DIGITS[(b - b'0') as usize])
        .collect()
}

/// Membership in the list of families with `ed = 1` possible in characteristic `c`.
pub fn is_listed_family(d: &GroupDescriptor, c: u64) -> bool {
    match *d {
        GroupDescriptor::Trivial | GroupDescriptor::Cyclic(_) | GroupDescriptor::Dihedral(_) => {
            true
        }
        GroupDescriptor::BinaryDihedral(n) => n == 1,
        GroupDescriptor::Gnpr { n, p, r } => p == c || (n <= 2 && r == 1),
        GroupDescriptor::ElemAbelian { p, r } => p == c || r == 1 || (p == 2 && r == 2),
        GroupDescriptor::SL2(q) => q == 2 || (c == 2 && q % 2 == 0),
        GroupDescriptor::Alt4 | GroupDescriptor::Alt5 => c == 2,
        GroupDescriptor::Sym4 => false,
    }
}

impl Condition {
    /// Re-evaluates the predicate over `spec`.
    pub fn holds(&self, spec: &FieldSpec) -> Result<bool> {
        let c = spec.characteristic();
        Ok(match *self {
            Condition::ZetaPlus(n) => spec.contains_zeta_plus(n)?,
            Condition::Zeta(n) => spec.contains_zeta(n),
            Condition::FpDegree(r) => spec.fp_degree_at_least(r)?,
            Condition::ContainsFq(q) => spec.contains_fq(q),
            Condition::Cardinality(k) => spec.cardinality_at_least(k),
            Condition::CharIs(p) => c == p,
            Condition::OddN(n) => n % 2 == 1,
            Condition::EqualsChar(n) => n == c,
            Condition::ListedFamily(d) => is_listed_family(&d, c),
        })
    }

    /// The negation, as printed in reasons.
    pub fn failure_text(&self) -> String {
        match *self {
            Condition::ZetaPlus(n) => {
                let s = subscript(n);
                format!("ζ{s}+ζ{s}⁻¹ ∉ K")
            }
            Condition::Zeta(n) => format!("ζ{} ∉ K", subscript(n)),
            Condition::FpDegree(r) => format!("[K:F_p] < {r}"),
            Condition::ContainsFq(q) => format!("F_{q} ⊄ K"),
            Condition::Cardinality(k) => format!("|K| < {k}"),
            Condition::CharIs(p) => format!("char K ≠ {p}"),
            Condition::OddN(n) => format!("n = {n} is even"),
            Condition::EqualsChar(n) => format!("char K divides {n} but n ≠ char K"),
            Condition::ListedFamily(d) => format!(
                "{} is not a listed family in this characteristic",
                pretty(&d)
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reason {
    pub citation: Citation,
    pub failed: Condition,
    pub axiom_backed: bool,
    pub note: Option<String>,
}

impl Reason {
    fn new(citation: Citation, failed: Condition) -> Self {
        Reason {
            citation,
            failed,
            axiom_backed: citation.is_axiom(),
            note: None,
        }
    }

    fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Re-evaluates the failed condition; `Ok(false)` confirms the reason.
    pub fn recheck(&self, spec: &FieldSpec) -> Result<bool> {
        self.failed.holds(spec)
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}",
            self.citation.label(),
            self.failed.failure_text()
        )
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub order_ok: bool,
    pub iso_ok: bool,
    pub faithful_ok: bool,
}

impl Report {
    pub fn all_ok(&self) -> bool {
        self.order_ok && self.iso_ok && self.faithful_ok
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub spec: FieldSpec,
    /// The group as requested.
    pub claimed: GroupDescriptor,
    /// The family the construction is for.
    pub descriptor: GroupDescriptor,
    pub citation: Citation,
    pub realization: ConcreteField,
    pub generators: Vec<(String, Mat2)>,
    pub action_note: String,
    pub verification: Option<Report>,
}

fn justify(citation: Citation, claimed: &GroupDescriptor, descriptor: &GroupDescriptor) -> String {
    if claimed == descriptor {
        citation.label().into()
    } else {
        format!(
            "{} via {} ≅ {}",
            citation.label(),
            pretty(claimed),
            pretty(descriptor)
        )
    }
}

impl Certificate {
    /// `"Theorem 1.5 via A4 ≅ G(3,2^2)"` style justification.
    pub fn justification(&self) -> String {
        justify(self.citation, &self.claimed, &self.descriptor)
    }
}

/// A positive verdict; `certify` turns it into a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Positive {
    pub spec: FieldSpec,
    pub claimed: GroupDescriptor,
    pub descriptor: GroupDescriptor,
    pub citation: Citation,
    plan: Plan,
}

impl Positive {
    pub fn justification(&self) -> String {
        justify(self.citation, &self.claimed, &self.descriptor)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    EdZero,
    EdOne(Positive),
    EdAtLeastTwo(Reason),
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::EdZero => "EdZero",
            Verdict::EdOne(_) => "EdOne",
            Verdict::EdAtLeastTwo(_) => "EdAtLeastTwo",
        }
    }

    pub fn is_ed_one(&self) -> bool {
        matches!(self, Verdict::EdOne(_))
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::EdZero => f.write_str("EdZero"),
            Verdict::EdOne(c) => write!(f, "EdOne ({})", c.justification()),
            Verdict::EdAtLeastTwo(r) => write!(f, "EdAtLeastTwo ({r})"),
        }
    }
}

/// Short mathematical name of a descriptor.
pub fn pretty(d: &GroupDescriptor) -> String {
    match *d {
        GroupDescriptor::Cyclic(n) => format!("C{n}"),
        GroupDescriptor::Dihedral(n) => format!("D{n}"),
        GroupDescriptor::BinaryDihedral(n) => format!("BD{n}"),
        GroupDescriptor::Gnpr { n, p, r } => format!("G({n},{p}^{r})"),
        GroupDescriptor::SL2(q) => format!("SL2({q})"),
        GroupDescriptor::ElemAbelian { p, r } => format!("(Z/{p})^{r}"),
        GroupDescriptor::Alt4 => "A4".into(),
        GroupDescriptor::Alt5 => "A5".into(),
        GroupDescriptor::Sym4 => "S4".into(),
        GroupDescriptor::Trivial => "1".into(),
    }
}

/// Rewrites `d` to the family the criteria are stated for.
pub fn canonicalize_descriptor(d: GroupDescriptor, characteristic: u64) -> GroupDescriptor {
    use GroupDescriptor::*;
    let next = match d {
        Alt4 if characteristic == 2 => Gnpr { n: 3, p: 2, r: 2 },
        Alt5 if characteristic == 2 => SL2(4),
        SL2(2) => Dihedral(3),
        ElemAbelian { p, r: 1 } => Cyclic(p),
        ElemAbelian { p: 2, r: 2 } => Dihedral(2),
        Dihedral(1) => Cyclic(2),
        BinaryDihedral(1) => Cyclic(4),
        Cyclic(1) => Trivial,
        Gnpr { n: 1, p, r: 1 } => Cyclic(p),
        Gnpr { n: 2, p, r: 1 } => Cyclic(2 * p),
        other => other,
    };
    if next == d {
        d
    } else {
        canonicalize_descriptor(next, characteristic)
    }
}

/// What a positive verdict needs from the realization field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Plan {
    CyclicOdd(u64),
    CyclicEven(u64),
    CyclicChar,
    DihedralOdd(u64),
    DihedralChar,
    KleinChar2,
    Gnpr { n: u64, p: u64, r: u32 },
    ElemAbelian(u32),
    SL2(u64),
}

fn plan(
    spec: &FieldSpec,
    d: &GroupDescriptor,
) -> Result<core::result::Result<(Plan, Citation), Reason>> {
    use Condition as C;
    let c = spec.characteristic();
    let neg = |cit, cond| Ok(Err(Reason::new(cit, cond)));
    match *d {
        GroupDescriptor::Cyclic(n) => {
            if c != 0 && n % c == 0 {
                if n == c {
                    return Ok(Ok((Plan::CyclicChar, Citation::CyclicCriterion)));
                }
                return neg(Citation::CyclicCriterion, C::EqualsChar(n));
            }
            if n % 2 == 1 {
                if spec.contains_zeta_plus(n)? {
                    return Ok(Ok((Plan::CyclicOdd(n), Citation::CyclicCriterion)));
                }
                return neg(Citation::CyclicCriterion, C::ZetaPlus(n));
            }
            if spec.contains_zeta(n) {
                return Ok(Ok((Plan::CyclicEven(n), Citation::CyclicCriterion)));
            }
            neg(Citation::CyclicCriterion, C::Zeta(n))
        }
        GroupDescriptor::Dihedral(n) => {
            let cit = Citation::DihedralCriterion;
            if c == 2 && n % 2 == 0 {
                if n != 2 {
                    return neg(cit, C::OddN(n));
                }
                if spec.cardinality_at_least(4) {
                    return Ok(Ok((Plan::KleinChar2, cit)));
                }
                return neg(cit, C::Cardinality(4));
            }
            if n % 2 == 0 {
                return neg(cit, C::OddN(n));
            }
            if c != 0 && n % c == 0 {
                if n == c {
                    return Ok(Ok((Plan::DihedralChar, cit)));
                }
                return Ok(Err(Reason::new(cit, C::EqualsChar(n))
                    .with_note("an element of order divisible by p has order p")));
            }
            if spec.contains_zeta_plus(n)? {
                return Ok(Ok((Plan::DihedralOdd(n), cit)));
            }
            neg(cit, C::ZetaPlus(n))
        }
        GroupDescriptor::Gnpr { n, p, r } => {
            if c != p {
                if n == 1 {
                    return plan(spec, &GroupDescriptor::ElemAbelian { p, r });
                }
                return neg(Citation::FamilyList, C::ListedFamily(*d));
            }
            let cit = Citation::GnprCriterion;
            if n % 2 == 0 {
                return neg(Citation::EvenGnprBound, C::OddN(n));
            }
            if !spec.contains_zeta(n) {
                return neg(cit, C::Zeta(n));
            }
            if !spec.fp_degree_at_least(r)? {
                return neg(cit, C::FpDegree(r));
            }
            Ok(Ok((Plan::Gnpr { n, p, r }, cit)))
        }
        GroupDescriptor::ElemAbelian { p, r } => {
            if c == p {
                if spec.fp_degree_at_least(r)? {
                    return Ok(Ok((Plan::ElemAbelian(r), Citation::ElemAbelianCharP)));
                }
                return neg(Citation::ElemAbelianCharP, C::FpDegree(r));
            }
            if spec.contains_zeta(p) {
                return Ok(Err(Reason::new(
                    Citation::ElemAbelianWithRoots,
                    C::CharIs(p),
                )
                .with_note("ζ_p ∈ K gives ed = r")));
            }
            neg(Citation::FamilyList, C::ListedFamily(*d))
        }
        GroupDescriptor::SL2(q) if q % 2 == 0 => {
            if c != 2 {
                return neg(Citation::FamilyList, C::ListedFamily(*d));
            }
            if spec.contains_fq(q) {
                return Ok(Ok((Plan::SL2(q), Citation::SL2Criterion)));
            }
            neg(Citation::SL2Criterion, C::ContainsFq(q))
        }
        GroupDescriptor::Sym4 if c != 2 => {
            Ok(Err(Reason::new(Citation::FamilyList, C::ListedFamily(*d))
                .with_note(
                    "contains (Z/2)^2 with ζ₂ ∈ K, so ed ≥ 2 also by Theorem 2.8",
                )))
        }
        GroupDescriptor::Sym4 => Ok(Err(Reason::new(Citation::FamilyList, C::ListedFamily(*d))
            .with_note("its 2-Sylow subgroup is not elementary abelian"))),
        _ => neg(Citation::FamilyList, C::ListedFamily(*d)),
    }
}

/// Decides `ed_K(G) = 1` for `K` described by `spec`.
pub fn decide(spec: &FieldSpec, d: &GroupDescriptor) -> Result<Verdict> {
    spec.validate()?;
    d.validate()?;
    let canon = canonicalize_descriptor(*d, spec.characteristic());
    if canon == GroupDescriptor::Trivial {
        return Ok(Verdict::EdZero);
    }
    match plan(spec, &canon)? {
        Err(reason) => Ok(Verdict::EdAtLeastTwo(reason)),
        Ok((plan, citation)) => Ok(Verdict::EdOne(Positive {
            spec: *spec,
            claimed: *d,
            descriptor: canon,
            citation,
            plan,
        })),
    }
}

fn unipotent(f: &ConcreteField, b: FieldElem) -> Mat2 {
    Mat2::new(f.one(), b, f.zero(), f.one())
}

/// Builds the generators of a positive verdict over a minimal field.
pub fn build_certificate(pos: &Positive) -> Result<Certificate> {
    let c = pos.spec.characteristic();
    let req = Requirements::new(c);
    let named = |pairs: Vec<(&str, Mat2)>| {
        pairs
            .into_iter()
            .map(|(l, m)| (String::from(l), m))
            .collect::<Vec<_>>()
    };
    let (realization, generators, action_note) = match pos.plan {
        Plan::CyclicOdd(n) => {
            let f = build_realization(&req.eta(n))?;
            let eta = f.eta(n).ok_or(Error::MissingRoots("eta_n"))?;
            let t = Mat2::new(f.zero(), f.from_int(-1), f.one(), eta);
            (
                f,
                named(vec![("sigma", t)]),
                String::from("sigma: t -> -1/(t + eta)"),
            )
        }
        Plan::CyclicEven(n) => {
            let f = build_realization(&req.zeta(n))?;
            let z = f
                .primitive_nth_root(n)
                .ok_or(Error::MissingRoots("zeta_n"))?;
            let m = Mat2::diag(&f, z, f.one());
            (
                f,
                named(vec![("sigma", m)]),
                String::from("sigma: t -> zeta*t"),
            )
        }
        Plan::CyclicChar => {
            let f = build_realization(&req)?;
            let m = Mat2::from_ints(&f, [1, -1, 0, 1]);
            (
                f,
                named(vec![("sigma", m)]),
                String::from("sigma: t -> t - 1"),
            )
        }
        Plan::DihedralOdd(n) => {
            let f = build_realization(&req.eta(n))?;
            let eta = f.eta(n).ok_or(Error::MissingRoots("eta_n"))?;
            let t = Mat2::new(f.zero(), f.from_int(-1), f.one(), eta);
            let s = Mat2::from_ints(&f, [0, 1, 1, 0]);
            (
                f,
                named(vec![("sigma", t), ("tau", s)]),
                String::from("sigma: t -> -1/(t + eta); tau: t -> 1/t"),
            )
        }
        Plan::DihedralChar => {
            let f = build_realization(&req)?;
            let s = Mat2::from_ints(&f, [1, 1, 0, 1]);
            let t = Mat2::from_ints(&f, [1, 0, 0, -1]);
            (
                f,
                named(vec![("sigma", s), ("tau", t)]),
                String::from("sigma: t -> t + 1; tau: t -> -t"),
            )
        }
        Plan::KleinChar2 => {
            let f = build_realization(&req.fp_degree(2))?;
            let alpha = f.generator();
            let s = Mat2::from_ints(&f, [1, 1, 0, 1]);
            let t = unipotent(&f, alpha);
            (
                f,
                named(vec![("sigma", s), ("tau", t)]),
                String::from("sigma: t -> t + 1; tau: t -> t + alpha"),
            )
        }
        Plan::Gnpr { n, p, r } => {
            let f = build_realization(&req.zeta(n).fp_degree(r))?;
            let (sigma, tau) = gnpr_generators(n, p, r, &f, &f.zero())?;
            let mut gens = Vec::new();
            for (i, row) in sigma.into_iter().enumerate() {
                for (j, m) in row.into_iter().enumerate() {
                    gens.push((format!("sigma_{}_{}", i + 1, j + 1), m));
                }
            }
            if let Some(t) = tau {
                gens.push((String::from("tau"), t));
            }
            (
                f,
                gens,
                String::from("sigma_ij: t -> t + zeta^(2(j-1))*beta_i; tau: t -> zeta^2*t"),
            )
        }
        Plan::ElemAbelian(r) => {
            let f = build_realization(&req.fp_degree(r))?;
            let fq = f.as_finite().ok_or(Error::NotFinite)?;
            let gens = (0..r)
                .map(|i| {
                    (
                        format!("sigma_{}", i + 1),
                        unipotent(&f, FieldElem::Fin(fq.basis(i))),
                    )
                })
                .collect();
            (f, gens, String::from("sigma_i: t -> t + x^(i-1)"))
        }
        Plan::SL2(q) => {
            let mg = make_sl2(q)?;
            let labels = ["U", "L", "D"];
            let gens = mg
                .generators()
                .iter()
                .zip(labels)
                .map(|(m, l)| (String::from(l), m.clone()))
                .collect();
            (
                mg.field().clone(),
                gens,
                String::from("M: t -> (a*t + b)/(c*t + d)"),
            )
        }
    };
    Ok(Certificate {
        spec: pos.spec,
        claimed: pos.claimed,
        descriptor: pos.descriptor,
        citation: pos.citation,
        realization,
        generators,
        action_note,
        verification: None,
    })
}

/// The certificate of a positive verdict.
pub fn certify(spec: &FieldSpec, d: &GroupDescriptor) -> Result<Certificate> {
    match decide(spec, d)? {
        Verdict::EdOne(pos) => build_certificate(&pos),
        _ => Err(Error::NotEdOne),
    }
}

/// Re-checks a certificate from its generators alone.
pub fn verify(cert: &Certificate) -> Result<Report> {
    verify_with_cap(cert, DEFAULT_VERIFY_CAP)
}

pub fn verify_with_cap(cert: &Certificate, cap: usize) -> Result<Report> {
    let field = &cert.realization;
    let gens: Vec<Mat2> = cert.generators.iter().map(|(_, m)| m.clone()).collect();
    let mg = close_generated(field, &gens, cap)?;
    let expected = cert.claimed.order().ok_or(Error::CapExceeded { cap })?;
    let order_ok = mg.order() as u64 == expected;
    let iso_ok =
        order_ok && are_isomorphic(&mg.abstract_group(), &make_abstract(&cert.claimed)?, cap)?;
    Ok(Report {
        order_ok,
        iso_ok,
        faithful_ok: action_is_faithful(&mg),
    })
}

/// `certify` followed by `verify`, with the report attached.
pub fn certify_verified(spec: &FieldSpec, d: &GroupDescriptor) -> Result<Certificate> {
    let mut cert = certify(spec, d)?;
    cert.verification = Some(verify(&cert)?);
    Ok(cert)
}

/// `q` as a prime power, for callers taking `F:q`.
pub fn finite_spec(q: u64) -> Result<FieldSpec> {
    let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    FieldSpec::finite(p, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use GroupDescriptor::*;

    fn fin(q: u64) -> FieldSpec {
        finite_spec(q).unwrap()
    }

    fn name(spec: &FieldSpec, d: GroupDescriptor) -> &'static str {
        decide(spec, &d).unwrap().name()
    }

    #[test]
    fn canonicalization_examples() {
        assert_eq!(canonicalize_descriptor(Alt4, 2), Gnpr { n: 3, p: 2, r: 2 });
        assert_eq!(canonicalize_descriptor(Alt4, 3), Alt4);
        assert_eq!(canonicalize_descriptor(SL2(2), 0), Dihedral(3));
        assert_eq!(canonicalize_descriptor(Cyclic(7), 0), Cyclic(7));
        assert_eq!(
            canonicalize_descriptor(ElemAbelian { p: 2, r: 1 }, 0),
            Cyclic(2)
        );
        assert_eq!(canonicalize_descriptor(Dihedral(1), 5), Cyclic(2));
        assert_eq!(
            canonicalize_descriptor(Gnpr { n: 2, p: 3, r: 1 }, 3),
            Cyclic(6)
        );
    }

    #[test]
    fn decision_examples() {
        let q = FieldSpec::Rational;
        assert_eq!(name(&fin(2), Alt4), "EdAtLeastTwo");
        assert_eq!(name(&fin(4), Alt4), "EdOne");
        assert_eq!(name(&q, Cyclic(4)), "EdAtLeastTwo");
        assert_eq!(name(&FieldSpec::Cyclotomic(4), Cyclic(4)), "EdOne");
        assert_eq!(name(&fin(2), Cyclic(4)), "EdAtLeastTwo");
        assert_eq!(name(&q, Cyclic(5)), "EdAtLeastTwo");
        assert_eq!(name(&FieldSpec::RealCyclotomic(5), Dihedral(5)), "EdOne");
        assert_eq!(name(&fin(2), Dihedral(2)), "EdAtLeastTwo");
        assert_eq!(name(&fin(4), Dihedral(2)), "EdOne");
        assert_eq!(name(&fin(4), SL2(4)), "EdOne");
        assert_eq!(name(&fin(2), SL2(4)), "EdAtLeastTwo");
        assert_eq!(name(&q, Trivial), "EdZero");
        assert_eq!(name(&fin(7), Gnpr { n: 2, p: 7, r: 2 }), "EdAtLeastTwo");
        assert_eq!(name(&fin(2), SL2(2)), "EdOne");
    }

    #[test]
    fn verdict_text() {
        let v = decide(&fin(4), &Alt4).unwrap();
        assert_eq!(format!("{v}"), "EdOne (Theorem 1.5 via A4 ≅ G(3,2^2))");
        let v = decide(&FieldSpec::Rational, &Cyclic(5)).unwrap();
        assert_eq!(format!("{v}"), "EdAtLeastTwo (Theorem 1.3: ζ₅+ζ₅⁻¹ ∉ K)");
    }

    #[test]
    fn reasons_recheck_false() {
        let specs = [
            FieldSpec::Rational,
            fin(2),
            fin(3),
            fin(9),
            FieldSpec::Cyclotomic(8),
        ];
        let groups = [
            Cyclic(4),
            Cyclic(9),
            Dihedral(6),
            Sym4,
            BinaryDihedral(3),
            Alt5,
            ElemAbelian { p: 3, r: 2 },
        ];
        for spec in &specs {
            for d in &groups {
                if let Verdict::EdAtLeastTwo(r) = decide(spec, d).unwrap() {
                    assert_eq!(r.recheck(spec), Ok(false), "{spec} {d}");
                    assert_eq!(r.axiom_backed, r.citation.is_axiom());
                }
            }
        }
    }

    #[test]
    fn certificate_examples() {
        let c = certify(&FieldSpec::Rational, &Cyclic(3)).unwrap();
        assert_eq!(c.realization, ConcreteField::Rationals);
        let f = &c.realization;
        assert_eq!(c.generators[0].1, Mat2::from_ints(f, [0, -1, 1, -1]));
        assert_eq!(crate::mat2::pgl_order(f, &c.generators[0].1, 10), Ok(3));
        assert!(verify(&c).unwrap().all_ok());

        let c = certify(&fin(4), &Gnpr { n: 3, p: 2, r: 2 }).unwrap();
        assert_eq!(c.realization.order(), Some(4));
        assert_eq!(c.generators.len(), 3);
        assert!(verify(&c).unwrap().all_ok());

        let c = certify(&fin(2), &SL2(2)).unwrap();
        assert_eq!(c.generators.len(), 2);
        assert!(verify(&c).unwrap().all_ok());
        assert_eq!(
            certify(&FieldSpec::Rational, &Cyclic(5)),
            Err(Error::NotEdOne)
        );
    }

    #[test]
    fn tampered_certificates() {
        let mut c = certify(&FieldSpec::Rational, &Cyclic(3)).unwrap();
        c.generators[0].1 = Mat2::identity(&c.realization);
        assert!(!verify(&c).unwrap().order_ok);

        let sl = make_sl2(3).unwrap();
        let forged = Certificate {
            spec: fin(3),
            claimed: SL2(3),
            descriptor: SL2(3),
            citation: Citation::SL2Criterion,
            realization: sl.field().clone(),
            generators: vec![
                ("U".into(), sl.generators()[0].clone()),
                ("L".into(), sl.generators()[1].clone()),
            ],
            action_note: String::new(),
            verification: None,
        };
        let r = verify(&forged).unwrap();
        assert!(r.order_ok && r.iso_ok && !r.faithful_ok);
    }
}
