//! Concrete realization fields with exact arithmetic, and the builder that
//! picks the smallest one meeting a list of requirements.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{is_prime, lcm, mult_order_mod, mult_order_mod_pm, prime_power, totient};
use crate::error::{Error, Result};
use crate::fields::finite::FqField;
use crate::fields::number::NumberField;
use crate::fields::spec::FieldSpec;
use crate::poly::{cyclotomic_poly, eta_min_poly, IntPoly};

/// A field element. Its meaning depends on the [`ConcreteField`] it came from.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FieldElem {
    /// Finite-field element, coefficient vector packed in base `p`.
    Fin(u32),
    Rat(BigRational),
    /// Number-field element: coefficients in the power basis of the generator.
    Alg(Vec<BigRational>),
}

/// Structural description of a concrete field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldKind {
    PrimeField(u64),
    ExtField { p: u64, k: u32, modulus: Vec<u64> },
    Rationals,
    NumberField(IntPoly),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConcreteField {
    Finite(Arc<FqField>),
    Rationals,
    Number(Arc<NumberField>),
}

/// Tags a number field as cyclotomic or real cyclotomic when its minimal
/// polynomial is recognised, so roots of unity can be located.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum NfShape {
    Cyclotomic(u64),
    RealCyclotomic(u64),
    Other,
}

fn nf_shape(nf: &NumberField) -> NfShape {
    let d = nf.degree() as u64;
    // φ(m) ≥ sqrt(m/2), so φ(m) = d forces m ≤ 2d²
    let bound = (2 * d * d).max(6);
    for m in 3..=bound {
        if totient(m) == d && cyclotomic_poly(m) == *nf.minpoly() {
            return NfShape::Cyclotomic(m);
        }
    }
    for m in 3..=(2 * bound) {
        if totient(m) == 2 * d && eta_min_poly(m) == *nf.minpoly() {
            return NfShape::RealCyclotomic(m);
        }
    }
    NfShape::Other
}

fn rat(i: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(i))
}

/// Conductor of `ℚ(ζ_n)`: `n/2` when `n ≡ 2 (mod 4)`.
fn zeta_conductor(n: u64) -> u64 {
    if n % 4 == 2 {
        n / 2
    } else {
        n
    }
}

impl ConcreteField {
    pub fn finite(p: u64, k: u32) -> Result<Self> {
        Ok(ConcreteField::Finite(Arc::new(FqField::new(p, k)?)))
    }

    pub fn finite_with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self> {
        Ok(ConcreteField::Finite(Arc::new(FqField::with_modulus(
            p, modulus,
        )?)))
    }

    /// `ℚ[x]/(f)`; degree-1 polynomials give ℚ itself.
    pub fn number_field(minpoly: IntPoly) -> Result<Self> {
        if !minpoly.is_monic() {
            return Err(Error::InvalidDescriptor("minimal polynomial must be monic"));
        }
        match minpoly.degree() {
            None | Some(0) => Err(Error::InvalidDescriptor(
                "minimal polynomial must have positive degree",
            )),
            Some(1) => Ok(ConcreteField::Rationals),
            Some(_) => Ok(ConcreteField::Number(Arc::new(NumberField::new(minpoly)))),
        }
    }

    /// `ℚ(ζ_m)`, using the smaller of `m` and `m/2` when `m ≡ 2 (mod 4)`.
    pub fn cyclotomic(m: u64) -> Self {
        Self::number_field(cyclotomic_poly(zeta_conductor(m)))
            .expect("cyclotomic polynomials are monic")
    }

    /// `ℚ(ζ_m + ζ_m⁻¹)`.
    pub fn real_cyclotomic(m: u64) -> Self {
        Self::number_field(eta_min_poly(m)).expect("eta polynomials are monic")
    }

    pub fn kind(&self) -> FieldKind {
        match self {
            ConcreteField::Finite(f) if f.degree() == 1 => {
                FieldKind::PrimeField(f.characteristic())
            }
            ConcreteField::Finite(f) => FieldKind::ExtField {
                p: f.characteristic(),
                k: f.degree(),
                modulus: f.modulus().to_vec(),
            },
            ConcreteField::Rationals => FieldKind::Rationals,
            ConcreteField::Number(nf) => FieldKind::NumberField(nf.minpoly().clone()),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            ConcreteField::Finite(f) => f.characteristic(),
            _ => 0,
        }
    }

    pub fn as_finite(&self) -> Option<&FqField> {
        match self {
            ConcreteField::Finite(f) => Some(f),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.as_finite().is_some()
    }

    /// Number of elements for finite fields.
    pub fn order(&self) -> Option<u64> {
        self.as_finite().map(FqField::order)
    }

    /// Degree over the prime field (`ℚ` or `F_p`).
    pub fn absolute_degree(&self) -> u32 {
        match self {
            ConcreteField::Finite(f) => f.degree(),
            ConcreteField::Rationals => 1,
            ConcreteField::Number(nf) => nf.degree() as u32,
        }
    }

    pub fn zero(&self) -> FieldElem {
        match self {
            ConcreteField::Finite(_) => FieldElem::Fin(0),
            ConcreteField::Rationals => FieldElem::Rat(BigRational::zero()),
            ConcreteField::Number(nf) => FieldElem::Alg(nf.zero()),
        }
    }

    pub fn one(&self) -> FieldElem {
        self.from_int(1)
    }

    pub fn from_int(&self, v: i64) -> FieldElem {
        match self {
            ConcreteField::Finite(f) => FieldElem::Fin(f.from_int(v)),
            ConcreteField::Rationals => FieldElem::Rat(rat(v)),
            ConcreteField::Number(nf) => FieldElem::Alg(nf.from_int(v)),
        }
    }

    pub fn from_rational(&self, r: BigRational) -> Result<FieldElem> {
        match self {
            ConcreteField::Finite(f) => {
                let p = BigInt::from(f.characteristic());
                let den = r.denom().clone() % &p;
                if den.is_zero() {
                    return Err(Error::InvalidDescriptor(
                        "denominator divisible by the characteristic",
                    ));
                }
                let reduce = |x: &BigInt| -> i64 {
                    use num_traits::ToPrimitive;
                    (((x % &p) + &p) % &p).to_i64().unwrap()
                };
                let num = f.from_int(reduce(r.numer()));
                let den = f.inv(f.from_int(reduce(&den))).unwrap();
                Ok(FieldElem::Fin(f.mul(num, den)))
            }
            ConcreteField::Rationals => Ok(FieldElem::Rat(r)),
            ConcreteField::Number(nf) => Ok(FieldElem::Alg(nf.from_rational(r))),
        }
    }

    /// Element with the given coefficients in the power basis of the
    /// generator (finite and number fields) or a single rational.
    pub fn from_coeffs(&self, coeffs: &[BigRational]) -> Result<FieldElem> {
        match self {
            ConcreteField::Finite(f) => {
                let mut acc = 0u32;
                let x = if f.degree() > 1 { f.basis(1) } else { 0 };
                for c in coeffs.iter().rev() {
                    let FieldElem::Fin(c) = self.from_rational(c.clone())? else {
                        unreachable!()
                    };
                    acc = f.add(f.mul(acc, x), c);
                }
                Ok(FieldElem::Fin(acc))
            }
            ConcreteField::Rationals => match coeffs {
                [] => Ok(self.zero()),
                [c] => Ok(FieldElem::Rat(c.clone())),
                _ => Err(Error::InvalidDescriptor(
                    "rational literal has too many coefficients",
                )),
            },
            ConcreteField::Number(nf) => Ok(FieldElem::Alg(nf.from_coeffs(coeffs.to_vec()))),
        }
    }

    /// Power-basis coefficients of an element (inverse of [`from_coeffs`](Self::from_coeffs)).
    pub fn coeffs(&self, e: &FieldElem) -> Vec<BigRational> {
        match (self, e) {
            (ConcreteField::Finite(f), FieldElem::Fin(a)) => {
                f.coeffs(*a).into_iter().map(|c| rat(c as i64)).collect()
            }
            (ConcreteField::Rationals, FieldElem::Rat(r)) => alloc::vec![r.clone()],
            (ConcreteField::Number(_), FieldElem::Alg(v)) => v.clone(),
            _ => panic!("element does not belong to this field"),
        }
    }

    /// The generator `x` of the power basis.
    pub fn generator(&self) -> FieldElem {
        match self {
            ConcreteField::Finite(f) if f.degree() > 1 => FieldElem::Fin(f.basis(1)),
            ConcreteField::Finite(f) => FieldElem::Fin(f.generator()),
            ConcreteField::Rationals => self.one(),
            ConcreteField::Number(nf) => FieldElem::Alg(nf.generator()),
        }
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (self, a, b) {
            (ConcreteField::Finite(f), FieldElem::Fin(x), FieldElem::Fin(y)) => {
                FieldElem::Fin(f.add(*x, *y))
            }
            (ConcreteField::Rationals, FieldElem::Rat(x), FieldElem::Rat(y)) => {
                FieldElem::Rat(x + y)
            }
            (ConcreteField::Number(nf), FieldElem::Alg(x), FieldElem::Alg(y)) => {
                FieldElem::Alg(nf.add(x, y))
            }
            _ => panic!("element does not belong to this field"),
        }
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        match (self, a) {
            (ConcreteField::Finite(f), FieldElem::Fin(x)) => FieldElem::Fin(f.neg(*x)),
            (ConcreteField::Rationals, FieldElem::Rat(x)) => FieldElem::Rat(-x),
            (ConcreteField::Number(nf), FieldElem::Alg(x)) => FieldElem::Alg(nf.neg(x)),
            _ => panic!("element does not belong to this field"),
        }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (self, a, b) {
            (ConcreteField::Finite(f), FieldElem::Fin(x), FieldElem::Fin(y)) => {
                FieldElem::Fin(f.sub(*x, *y))
            }
            (ConcreteField::Rationals, FieldElem::Rat(x), FieldElem::Rat(y)) => {
                FieldElem::Rat(x - y)
            }
            (ConcreteField::Number(nf), FieldElem::Alg(x), FieldElem::Alg(y)) => {
                FieldElem::Alg(nf.sub(x, y))
            }
            _ => panic!("element does not belong to this field"),
        }
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (self, a, b) {
            (ConcreteField::Finite(f), FieldElem::Fin(x), FieldElem::Fin(y)) => {
                FieldElem::Fin(f.mul(*x, *y))
            }
            (ConcreteField::Rationals, FieldElem::Rat(x), FieldElem::Rat(y)) => {
                FieldElem::Rat(x * y)
            }
            (ConcreteField::Number(nf), FieldElem::Alg(x), FieldElem::Alg(y)) => {
                FieldElem::Alg(nf.mul(x, y))
            }
            _ => panic!("element does not belong to this field"),
        }
    }

    pub fn inv(&self, a: &FieldElem) -> Option<FieldElem> {
        match (self, a) {
            (ConcreteField::Finite(f), FieldElem::Fin(x)) => f.inv(*x).map(FieldElem::Fin),
            (ConcreteField::Rationals, FieldElem::Rat(x)) => {
                (!x.is_zero()).then(|| FieldElem::Rat(x.recip()))
            }
            (ConcreteField::Number(nf), FieldElem::Alg(x)) => nf.inv(x).map(FieldElem::Alg),
            _ => panic!("element does not belong to this field"),
        }
    }

    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> Option<FieldElem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    pub fn pow(&self, a: &FieldElem, e: u64) -> FieldElem {
        match (self, a) {
            (ConcreteField::Finite(f), FieldElem::Fin(x)) => FieldElem::Fin(f.pow(*x, e)),
            (ConcreteField::Number(nf), FieldElem::Alg(x)) => FieldElem::Alg(nf.pow(x, e)),
            _ => {
                let mut acc = self.one();
                let mut base = a.clone();
                let mut e = e;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = self.mul(&acc, &base);
                    }
                    base = self.mul(&base, &base);
                    e >>= 1;
                }
                acc
            }
        }
    }

    pub fn is_zero(&self, a: &FieldElem) -> bool {
        *a == self.zero()
    }

    pub fn is_one(&self, a: &FieldElem) -> bool {
        *a == self.one()
    }

    /// Whether an element belongs to this field's representation.
    pub fn owns(&self, a: &FieldElem) -> bool {
        match (self, a) {
            (ConcreteField::Finite(f), FieldElem::Fin(x)) => (*x as u64) < f.order(),
            (ConcreteField::Rationals, FieldElem::Rat(_)) => true,
            (ConcreteField::Number(nf), FieldElem::Alg(v)) => v.len() == nf.degree(),
            _ => false,
        }
    }

    /// All elements of a finite field, in lexicographic coefficient order.
    pub fn elements(&self) -> Result<Vec<FieldElem>> {
        let f = self.as_finite().ok_or(Error::NotFinite)?;
        Ok(f.elements_lex().map(FieldElem::Fin).collect())
    }

    /// Smallest `k ≥ 1` with `e^k = 1`.
    pub fn mult_order(&self, e: &FieldElem) -> Result<u64> {
        match (self, e) {
            (ConcreteField::Finite(f), FieldElem::Fin(x)) => {
                f.mult_order(*x).ok_or(Error::NotAUnitOfFiniteOrder)
            }
            (ConcreteField::Rationals, FieldElem::Rat(x)) => {
                if x.is_one() {
                    Ok(1)
                } else if (-x).is_one() {
                    Ok(2)
                } else {
                    Err(Error::NotAUnitOfFiniteOrder)
                }
            }
            (ConcreteField::Number(nf), FieldElem::Alg(x)) => {
                nf.mult_order(x).ok_or(Error::NotAUnitOfFiniteOrder)
            }
            _ => Err(Error::FieldMismatch),
        }
    }

    /// Generator `w` and order `N` of the group of roots of unity (number fields).
    fn roots_of_unity(&self) -> (u64, FieldElem) {
        match self {
            ConcreteField::Number(nf) => match nf_shape(nf) {
                NfShape::Cyclotomic(m) if m % 2 == 0 => (m, self.generator()),
                NfShape::Cyclotomic(m) => (2 * m, self.neg(&self.generator())),
                _ => (2, self.from_int(-1)),
            },
            _ => (2, self.from_int(-1)),
        }
    }

    /// Canonical primitive `n`-th root of unity, if the field has one.
    pub fn primitive_nth_root(&self, n: u64) -> Option<FieldElem> {
        if n == 0 {
            return None;
        }
        match self {
            ConcreteField::Finite(f) => f.primitive_root_of_unity(n).map(FieldElem::Fin),
            _ => {
                let (order, w) = self.roots_of_unity();
                (order % n == 0).then(|| self.pow(&w, order / n))
            }
        }
    }

    /// Some `ζ_n^a + ζ_n^{-a}` with `gcd(a, n) = 1` lying in the field.
    ///
    /// Finite fields: smallest root of the reduced minimal polynomial of
    /// `2cos(2π/n)`. Number fields: `ζ_n + ζ_n⁻¹` when `ζ_n` is present,
    /// otherwise a Dickson-polynomial expression in the field generator.
    pub fn eta(&self, n: u64) -> Option<FieldElem> {
        if n == 0 {
            return None;
        }
        if let ConcreteField::Finite(f) = self {
            if n.is_multiple_of(f.characteristic()) {
                return None;
            }
            return f
                .smallest_root(&eta_min_poly(n).to_i64_vec())
                .map(FieldElem::Fin);
        }
        let psi = eta_min_poly(n);
        if psi.degree() == Some(1) {
            return Some(self.from_int(-psi.to_i64_vec()[0]));
        }
        if let Some(z) = self.primitive_nth_root(n) {
            let zi = self.inv(&z)?;
            return Some(self.add(&z, &zi));
        }
        let ConcreteField::Number(nf) = self else {
            return None;
        };
        let NfShape::RealCyclotomic(big) = nf_shape(nf) else {
            return None;
        };
        let eta_big = self.generator();
        if big % n == 0 {
            return Some(self.dickson(&eta_big, big / n));
        }
        // ζ_{2m} = -ζ_m^{(m+1)/2} for odd m
        if n % 4 == 2 && big % (n / 2) == 0 {
            let m = n / 2;
            let eta_m = self.dickson(&eta_big, big / m);
            return Some(self.neg(&self.dickson(&eta_m, m.div_ceil(2))));
        }
        if big % 4 == 2 && n.is_multiple_of(big / 2) {
            // ℚ(η_big) = ℚ(η_{big/2}); recover η_{big/2} first
            let m = big / 2;
            let eta_m = self.neg(&self.dickson(&eta_big, m.div_ceil(2)));
            if m % n == 0 {
                return Some(self.dickson(&eta_m, m / n));
            }
        }
        None
    }

    /// `D_j(y)` with `D_j(x + 1/x) = x^j + x^{-j}`.
    fn dickson(&self, y: &FieldElem, j: u64) -> FieldElem {
        let mut prev = self.from_int(2);
        let mut cur = y.clone();
        if j == 0 {
            return prev;
        }
        for _ in 1..j {
            let next = self.sub(&self.mul(y, &cur), &prev);
            prev = core::mem::replace(&mut cur, next);
        }
        cur
    }

    /// Canonical textual form: integers for prime fields, `a/b` for ℚ,
    /// coefficient lists `[c0,c1,…]` for extension and number fields.
    pub fn format_elem(&self, e: &FieldElem) -> String {
        fn fmt_rat(r: &BigRational) -> String {
            if r.is_integer() {
                format!("{}", r.numer())
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        match (self, e) {
            (ConcreteField::Finite(f), FieldElem::Fin(x)) if f.degree() == 1 => format!("{x}"),
            (ConcreteField::Finite(f), FieldElem::Fin(x)) => {
                let parts: Vec<String> = f.coeffs(*x).iter().map(|c| format!("{c}")).collect();
                format!("[{}]", parts.join(","))
            }
            (ConcreteField::Rationals, FieldElem::Rat(r)) => fmt_rat(r),
            (ConcreteField::Number(_), FieldElem::Alg(v)) => {
                let parts: Vec<String> = v.iter().map(fmt_rat).collect();
                format!("[{}]", parts.join(","))
            }
            _ => String::from("?"),
        }
    }

    /// Smallest field (up to isomorphism) realizing `spec`'s prime field and
    /// constants: `F_q` for finite and rational-function fields, the number
    /// field itself for ℚ, ℚ(ζ_m) and ℚ(η_m). `None` for algebraic closures.
    pub fn model_of(spec: &FieldSpec) -> Result<Option<Self>> {
        spec.validate()?;
        Ok(match *spec {
            FieldSpec::Rational => Some(ConcreteField::Rationals),
            FieldSpec::Cyclotomic(m) => Some(Self::cyclotomic(m)),
            FieldSpec::RealCyclotomic(m) => Some(Self::real_cyclotomic(m)),
            FieldSpec::FiniteField { p, k } | FieldSpec::RationalFunctionOverFinite { p, k } => {
                Some(Self::finite(p, k)?)
            }
            FieldSpec::AlgClosure(_) => None,
        })
    }
}

/// What a realization field must provide.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Requirements {
    pub characteristic: u64,
    /// `n` such that `ζ_n` must be present.
    pub zetas: Vec<u64>,
    /// `n` such that `ζ_n + ζ_n⁻¹` must be present.
    pub etas: Vec<u64>,
    /// Lower bound on `[F : F_p]` (positive characteristic only).
    pub fp_degree_min: u32,
    /// `q` such that `F_q ⊆ F`.
    pub contains_fq: Option<u64>,
}

impl Requirements {
    pub fn new(characteristic: u64) -> Self {
        Requirements {
            characteristic,
            ..Default::default()
        }
    }

    pub fn zeta(mut self, n: u64) -> Self {
        self.zetas.push(n);
        self
    }

    pub fn eta(mut self, n: u64) -> Self {
        self.etas.push(n);
        self
    }

    pub fn fp_degree(mut self, r: u32) -> Self {
        self.fp_degree_min = self.fp_degree_min.max(r);
        self
    }

    pub fn fq(mut self, q: u64) -> Self {
        self.contains_fq = Some(q);
        self
    }

    /// Extension degree over `F_p` of the smallest finite field meeting the
    /// requirements (positive characteristic only).
    pub fn minimal_finite_degree(&self) -> Result<u32> {
        let p = self.characteristic;
        if !is_prime(p) {
            return Err(Error::InconsistentRequirements(
                "characteristic must be 0 or prime",
            ));
        }
        let mut step = 1u64;
        for &n in &self.zetas {
            if n == 0 || n % p == 0 {
                return Err(Error::InconsistentRequirements(
                    "characteristic divides a root-of-unity order",
                ));
            }
            step = lcm(step, mult_order_mod(p, n).unwrap());
        }
        for &n in &self.etas {
            if n == 0 || n % p == 0 {
                return Err(Error::InconsistentRequirements(
                    "characteristic divides a root-of-unity order",
                ));
            }
            step = lcm(step, mult_order_mod_pm(p, n).unwrap());
        }
        if let Some(q) = self.contains_fq {
            match prime_power(q) {
                Some((pp, j)) if pp == p => step = lcm(step, j as u64),
                _ => {
                    return Err(Error::InconsistentRequirements(
                        "F_q has a different characteristic",
                    ))
                }
            }
        }
        let floor = (self.fp_degree_min as u64).max(1);
        let k = floor.div_ceil(step) * step;
        u32::try_from(k).map_err(|_| Error::FieldTooLarge { q: u64::MAX })
    }

    /// Whether a finite field `F_{p^k}` meets the requirements.
    pub fn satisfied_by_finite(&self, k: u32) -> bool {
        let p = self.characteristic;
        let Some(q) = p.checked_pow(k) else {
            return false;
        };
        self.zetas.iter().all(|&n| n % p != 0 && (q - 1) % n == 0)
            && self.etas.iter().all(|&n| {
                n % p != 0 && {
                    let r = q % n;
                    n <= 2 || r == 1 || r == n - 1
                }
            })
            && k >= self.fp_degree_min
            && self
                .contains_fq
                .is_none_or(|fq| prime_power(fq).is_some_and(|(pp, j)| pp == p && k.is_multiple_of(j)))
    }
}

/// The smallest field of the required characteristic meeting `req`.
pub fn build_realization(req: &Requirements) -> Result<ConcreteField> {
    if req.characteristic != 0 {
        let k = req.minimal_finite_degree()?;
        return ConcreteField::finite(req.characteristic, k);
    }
    if req.fp_degree_min > 0 || req.contains_fq.is_some() {
        return Err(Error::InconsistentRequirements(
            "finite-field requirement in characteristic 0",
        ));
    }
    if req.zetas.contains(&0) || req.etas.contains(&0) {
        return Err(Error::InconsistentRequirements(
            "root-of-unity order must be positive",
        ));
    }
    let zeta_cond = req
        .zetas
        .iter()
        .fold(1u64, |acc, &n| lcm(acc, zeta_conductor(n)));
    let nontrivial_etas: Vec<u64> = req
        .etas
        .iter()
        .copied()
        .filter(|&n| totient(n) > 2)
        .collect();
    if zeta_cond > 2 {
        let spec = FieldSpec::Cyclotomic(zeta_cond);
        if nontrivial_etas
            .iter()
            .all(|&n| spec.contains_zeta_plus(n) == Ok(true))
        {
            return Ok(ConcreteField::cyclotomic(zeta_cond));
        }
        return Err(Error::UnsupportedRequirements(
            "compositum of cyclotomic and real cyclotomic fields",
        ));
    }
    if nontrivial_etas.is_empty() {
        return Ok(ConcreteField::Rationals);
    }
    // a single real cyclotomic field containing all the others
    let host = nontrivial_etas.iter().copied().find(|&m| {
        let spec = FieldSpec::RealCyclotomic(m);
        nontrivial_etas
            .iter()
            .all(|&n| spec.contains_zeta_plus(n) == Ok(true))
    });
    match host {
        Some(m) => {
            // ℚ(η_m) = ℚ(η_{m/2}) for m ≡ 2 (mod 4)
            let m = zeta_conductor(m);
            Ok(ConcreteField::real_cyclotomic(m))
        }
        None => Err(Error::UnsupportedRequirements(
            "compositum of real cyclotomic fields",
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn realization_examples() {
        let f = build_realization(&Requirements::new(0).eta(5)).unwrap();
        assert_eq!(
            f.kind(),
            FieldKind::NumberField(IntPoly::from_i64(&[-1, 1, 1]))
        );
        let f = build_realization(&Requirements::new(2).zeta(3).fp_degree(2)).unwrap();
        assert_eq!(
            f.kind(),
            FieldKind::ExtField {
                p: 2,
                k: 2,
                modulus: vec![1, 1, 1]
            }
        );
        let f = build_realization(&Requirements::new(5)).unwrap();
        assert_eq!(f.kind(), FieldKind::PrimeField(5));
        assert_eq!(
            build_realization(&Requirements::new(0).eta(3)).unwrap(),
            ConcreteField::Rationals
        );
        assert_eq!(
            build_realization(&Requirements::new(0).zeta(4))
                .unwrap()
                .kind(),
            FieldKind::NumberField(IntPoly::from_i64(&[1, 0, 1]))
        );
        assert!(matches!(
            build_realization(&Requirements::new(3).zeta(6)),
            Err(Error::InconsistentRequirements(_))
        ));
        assert!(matches!(
            build_realization(&Requirements::new(0).fp_degree(2)),
            Err(Error::InconsistentRequirements(_))
        ));
        // η₅ needs q ≡ ±1 (mod 5): F_4 in characteristic 2
        let f = build_realization(&Requirements::new(2).eta(5)).unwrap();
        assert_eq!(f.order(), Some(4));
    }

    #[test]
    fn mult_order_examples() {
        let f4 = ConcreteField::finite(2, 2).unwrap();
        assert_eq!(f4.mult_order(&f4.one()), Ok(1));
        assert_eq!(f4.mult_order(&f4.generator()), Ok(3));
        let f5 = ConcreteField::finite(5, 1).unwrap();
        assert_eq!(f5.mult_order(&f5.from_int(-1)), Ok(2));
        let q = ConcreteField::Rationals;
        assert_eq!(
            q.mult_order(&q.from_int(2)),
            Err(Error::NotAUnitOfFiniteOrder)
        );
        let k = ConcreteField::cyclotomic(5);
        assert_eq!(k.mult_order(&k.primitive_nth_root(10).unwrap()), Ok(10));
        assert_eq!(
            k.mult_order(&k.add(&k.one(), &k.generator())),
            Err(Error::NotAUnitOfFiniteOrder)
        );
    }

    #[test]
    fn eta_lookup() {
        // η_n must satisfy the reduced eta polynomial
        let cases: [(ConcreteField, u64); 5] = [
            (ConcreteField::real_cyclotomic(5), 5),
            (ConcreteField::real_cyclotomic(5), 10),
            (ConcreteField::real_cyclotomic(10), 5),
            (ConcreteField::cyclotomic(12), 12),
            (ConcreteField::finite(3, 2).unwrap(), 5),
        ];
        for (f, n) in cases {
            let eta = f.eta(n).unwrap_or_else(|| panic!("η_{n} missing"));
            let psi = eta_min_poly(n).to_i64_vec();
            let val = psi.iter().rev().fold(f.zero(), |acc, &c| {
                f.add(&f.mul(&acc, &eta), &f.from_int(c))
            });
            assert!(f.is_zero(&val), "η_{n} is not a root");
        }
        assert!(ConcreteField::Rationals.eta(5).is_none());
        assert_eq!(
            ConcreteField::Rationals.eta(3),
            Some(ConcreteField::Rationals.from_int(-1))
        );
    }

    #[test]
    fn roots_of_unity_in_number_fields() {
        let k = ConcreteField::cyclotomic(7);
        let z14 = k.primitive_nth_root(14).unwrap();
        assert_eq!(k.mult_order(&z14), Ok(14));
        assert!(k.primitive_nth_root(4).is_none());
        let r = ConcreteField::real_cyclotomic(5);
        assert_eq!(r.primitive_nth_root(2), Some(r.from_int(-1)));
        assert!(r.primitive_nth_root(5).is_none());
    }
}
