//! 2×2 matrices over a [`ConcreteField`], their classes in PGL2 and the
//! Möbius action on the projective line.
//!
//! Convention: `t = x/y` and `M·(x:y) = (ax+by : cx+dy)`, so `M` acts on
//! `t` as `t ↦ (at+b)/(ct+d)`.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::fields::{ConcreteField, FieldElem};

/// Row-major `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mat2 {
    pub a: FieldElem,
    pub b: FieldElem,
    pub c: FieldElem,
    pub d: FieldElem,
}

impl Mat2 {
    pub fn new(a: FieldElem, b: FieldElem, c: FieldElem, d: FieldElem) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn from_ints(f: &ConcreteField, [a, b, c, d]: [i64; 4]) -> Self {
        Mat2::new(f.from_int(a), f.from_int(b), f.from_int(c), f.from_int(d))
    }

    pub fn identity(f: &ConcreteField) -> Self {
        Self::scalar(f, f.one())
    }

    pub fn scalar(f: &ConcreteField, s: FieldElem) -> Self {
        Mat2::new(s.clone(), f.zero(), f.zero(), s)
    }

    pub fn diag(f: &ConcreteField, x: FieldElem, y: FieldElem) -> Self {
        Mat2::new(x, f.zero(), f.zero(), y)
    }

    pub fn entries(&self) -> [&FieldElem; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn mul(&self, f: &ConcreteField, o: &Mat2) -> Mat2 {
        let dot = |x: &FieldElem, y: &FieldElem, z: &FieldElem, w: &FieldElem| {
            f.add(&f.mul(x, y), &f.mul(z, w))
        };
        Mat2::new(
            dot(&self.a, &o.a, &self.b, &o.c),
            dot(&self.a, &o.b, &self.b, &o.d),
            dot(&self.c, &o.a, &self.d, &o.c),
            dot(&self.c, &o.b, &self.d, &o.d),
        )
    }

    pub fn det(&self, f: &ConcreteField) -> FieldElem {
        f.sub(&f.mul(&self.a, &self.d), &f.mul(&self.b, &self.c))
    }

    pub fn trace(&self, f: &ConcreteField) -> FieldElem {
        f.add(&self.a, &self.d)
    }

    pub fn is_invertible(&self, f: &ConcreteField) -> bool {
        !f.is_zero(&self.det(f))
    }

    pub fn inv(&self, f: &ConcreteField) -> Result<Mat2> {
        let di = f.inv(&self.det(f)).ok_or(Error::SingularMatrix)?;
        Ok(Mat2::new(
            f.mul(&self.d, &di),
            f.neg(&f.mul(&self.b, &di)),
            f.neg(&f.mul(&self.c, &di)),
            f.mul(&self.a, &di),
        ))
    }

    pub fn pow(&self, f: &ConcreteField, mut e: u64) -> Mat2 {
        let mut acc = Mat2::identity(f);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base);
            }
            base = base.mul(f, &base);
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, f: &ConcreteField, s: &FieldElem) -> Mat2 {
        Mat2::new(
            f.mul(&self.a, s),
            f.mul(&self.b, s),
            f.mul(&self.c, s),
            f.mul(&self.d, s),
        )
    }

    /// `b = c = 0` and `a = d`.
    pub fn is_scalar(&self, f: &ConcreteField) -> bool {
        f.is_zero(&self.b) && f.is_zero(&self.c) && self.a == self.d
    }

    pub fn is_identity(&self, f: &ConcreteField) -> bool {
        self.is_scalar(f) && f.is_one(&self.a)
    }

    /// Representative of the scalar class whose first nonzero entry is 1.
    pub fn projective_normal_form(&self, f: &ConcreteField) -> Mat2 {
        let lead = self
            .entries()
            .into_iter()
            .find(|e| !f.is_zero(e))
            .expect("zero matrix has no projective class");
        let inv = f.inv(lead).unwrap();
        self.scale(f, &inv)
    }

    pub fn display<'a>(&'a self, f: &'a ConcreteField) -> impl fmt::Display + 'a {
        DisplayMat { m: self, f }
    }
}

struct DisplayMat<'a> {
    m: &'a Mat2,
    f: &'a ConcreteField,
}

impl fmt::Display for DisplayMat<'_> {
    /// The literal syntax `a,b,c,d` accepted by the command line.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.m.entries().map(|x| self.f.format_elem(x));
        write!(out, "{},{},{},{}", e[0], e[1], e[2], e[3])
    }
}

/// A Möbius transformation: an invertible matrix up to scalars.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PglElem {
    rep: Mat2,
}

impl PglElem {
    pub fn new(f: &ConcreteField, m: &Mat2) -> Result<Self> {
        if !m.is_invertible(f) {
            return Err(Error::SingularMatrix);
        }
        Ok(PglElem {
            rep: m.projective_normal_form(f),
        })
    }

    /// Normalized representative; equal classes have equal representatives.
    pub fn rep(&self) -> &Mat2 {
        &self.rep
    }

    pub fn mul(&self, f: &ConcreteField, o: &PglElem) -> PglElem {
        PglElem {
            rep: self.rep.mul(f, &o.rep).projective_normal_form(f),
        }
    }

    pub fn inv(&self, f: &ConcreteField) -> PglElem {
        PglElem {
            rep: self.rep.inv(f).unwrap().projective_normal_form(f),
        }
    }

    pub fn is_identity(&self, f: &ConcreteField) -> bool {
        self.rep.is_scalar(f)
    }
}

/// Smallest `k ≥ 1` with `m^k` scalar.
pub fn pgl_order(f: &ConcreteField, m: &Mat2, cap: u64) -> Result<u64> {
    if !m.is_invertible(f) {
        return Err(Error::SingularMatrix);
    }
    let mut cur = m.clone();
    for k in 1..=cap {
        if cur.is_scalar(f) {
            return Ok(k);
        }
        // keep entries small over ℚ and number fields
        cur = cur.mul(f, m).projective_normal_form(f);
    }
    Err(Error::OrderExceedsCap { cap })
}

/// `trace² / det`, constant on scalar classes.
pub fn projective_trace_invariant(f: &ConcreteField, m: &Mat2) -> Result<FieldElem> {
    let t = m.trace(f);
    f.div(&f.mul(&t, &t), &m.det(f))
        .ok_or(Error::SingularMatrix)
}

/// A point `(x : y)` of the projective line over a finite field, stored
/// as `(t : 1)` or `(1 : 0)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint {
    x: FieldElem,
    y: FieldElem,
}

impl ProjPoint {
    pub fn new(f: &ConcreteField, x: FieldElem, y: FieldElem) -> Result<Self> {
        if !f.is_finite() {
            return Err(Error::NotFinite);
        }
        if f.is_zero(&y) {
            if f.is_zero(&x) {
                return Err(Error::InvalidDescriptor("(0:0) is not a point"));
            }
            return Ok(ProjPoint {
                x: f.one(),
                y: f.zero(),
            });
        }
        let x = f.div(&x, &y).unwrap();
        Ok(ProjPoint { x, y: f.one() })
    }

    pub fn infinity(f: &ConcreteField) -> Self {
        ProjPoint {
            x: f.one(),
            y: f.zero(),
        }
    }

    /// The affine point `t = x/y`.
    pub fn affine(f: &ConcreteField, t: FieldElem) -> Self {
        ProjPoint { x: t, y: f.one() }
    }

    pub fn coords(&self) -> (&FieldElem, &FieldElem) {
        (&self.x, &self.y)
    }

    pub fn is_infinity(&self, f: &ConcreteField) -> bool {
        f.is_zero(&self.y)
    }
}

/// All `q + 1` points: the affine ones in lexicographic order, then ∞.
pub fn projective_line(f: &ConcreteField) -> Result<Vec<ProjPoint>> {
    let mut pts: Vec<ProjPoint> = f
        .elements()?
        .into_iter()
        .map(|t| ProjPoint::affine(f, t))
        .collect();
    pts.push(ProjPoint::infinity(f));
    Ok(pts)
}

pub fn moebius_apply(f: &ConcreteField, m: &Mat2, p: &ProjPoint) -> Result<ProjPoint> {
    if !m.is_invertible(f) {
        return Err(Error::SingularMatrix);
    }
    let x = f.add(&f.mul(&m.a, &p.x), &f.mul(&m.b, &p.y));
    let y = f.add(&f.mul(&m.c, &p.x), &f.mul(&m.d, &p.y));
    ProjPoint::new(f, x, y)
}
