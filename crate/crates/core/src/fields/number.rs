//! Number fields `ℚ[x]/(f)` with exact rational coefficients.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::IntPoly;

/// `ℚ[x]/(f)` for a monic irreducible integer polynomial `f` of degree ≥ 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    minpoly: IntPoly,
    degree: usize,
}

pub type NfElem = Vec<BigRational>;

type RatPoly = Vec<BigRational>;

fn rtrim(mut f: RatPoly) -> RatPoly {
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    f
}

fn rdeg(f: &RatPoly) -> Option<usize> {
    f.iter().rposition(|c| !c.is_zero())
}

fn rsub(f: &RatPoly, g: &RatPoly) -> RatPoly {
    let n = f.len().max(g.len());
    rtrim(
        (0..n)
            .map(|i| {
                f.get(i).cloned().unwrap_or_else(BigRational::zero)
                    - g.get(i).cloned().unwrap_or_else(BigRational::zero)
            })
            .collect(),
    )
}

fn rmul(f: &RatPoly, g: &RatPoly) -> RatPoly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    rtrim(out)
}

fn rdivrem(f: &RatPoly, g: &RatPoly) -> (RatPoly, RatPoly) {
    let dg = rdeg(g).expect("division by zero polynomial");
    let mut r = rtrim(f.clone());
    let mut q = vec![BigRational::zero(); r.len().saturating_sub(dg).max(1)];
    while let Some(dr) = rdeg(&r) {
        if dr < dg {
            break;
        }
        let c = &r[dr] / &g[dg];
        for (j, b) in g[..=dg].iter().enumerate() {
            let t = &c * b;
            r[dr - dg + j] -= t;
        }
        q[dr - dg] = c;
        r = rtrim(r);
    }
    (rtrim(q), r)
}

impl NumberField {
    /// Panics unless `minpoly` is monic of degree ≥ 1; irreducibility is the
    /// caller's responsibility (all constructors in this crate use cyclotomic
    /// or real-cyclotomic minimal polynomials).
    pub fn new(minpoly: IntPoly) -> Self {
        assert!(minpoly.is_monic(), "minimal polynomial must be monic");
        let degree = minpoly.degree().expect("nonzero minimal polynomial");
        assert!(degree >= 1);
        NumberField { minpoly, degree }
    }

    pub fn minpoly(&self) -> &IntPoly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn normalize(&self, mut v: RatPoly) -> NfElem {
        // reduce using x^d = -(m_0 + m_1 x + … + m_{d-1} x^{d-1})
        let d = self.degree;
        while v.len() > d {
            let top = v.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = v.len() - d;
            for j in 0..d {
                let m = BigRational::from_integer(self.minpoly.coeff(j));
                v[shift + j] -= &top * m;
            }
        }
        v.resize(d, BigRational::zero());
        v
    }

    pub fn zero(&self) -> NfElem {
        vec![BigRational::zero(); self.degree]
    }

    pub fn one(&self) -> NfElem {
        self.from_rational(BigRational::one())
    }

    pub fn from_rational(&self, r: BigRational) -> NfElem {
        let mut v = self.zero();
        v[0] = r;
        v
    }

    pub fn from_int(&self, i: i64) -> NfElem {
        self.from_rational(BigRational::from_integer(BigInt::from(i)))
    }

    /// The class of `x`, a root of the minimal polynomial.
    pub fn generator(&self) -> NfElem {
        self.normalize(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn from_coeffs(&self, coeffs: Vec<BigRational>) -> NfElem {
        self.normalize(coeffs)
    }

    pub fn add(&self, a: &NfElem, b: &NfElem) -> NfElem {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &NfElem, b: &NfElem) -> NfElem {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn neg(&self, a: &NfElem) -> NfElem {
        a.iter().map(|x| -x).collect()
    }

    pub fn mul(&self, a: &NfElem, b: &NfElem) -> NfElem {
        let prod = rmul(&rtrim(a.clone()), &rtrim(b.clone()));
        self.normalize(prod)
    }

    pub fn is_zero(&self, a: &NfElem) -> bool {
        a.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self, a: &NfElem) -> bool {
        a[0].is_one() && a[1..].iter().all(Zero::is_zero)
    }

    /// Inverse via the extended Euclidean algorithm in `ℚ[x]`.
    pub fn inv(&self, a: &NfElem) -> Option<NfElem> {
        if self.is_zero(a) {
            return None;
        }
        let m: RatPoly = self
            .minpoly
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        // invariant: s * a ≡ r (mod m)
        let (mut r0, mut r1) = (m, rtrim(a.clone()));
        let (mut s0, mut s1): (RatPoly, RatPoly) = (Vec::new(), vec![BigRational::one()]);
        while rdeg(&r1).is_some_and(|d| d > 0) {
            let (q, r) = rdivrem(&r0, &r1);
            let s = rsub(&s0, &rmul(&q, &s1));
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s);
        }
        // r1 is a nonzero constant since the minimal polynomial is irreducible
        let c = r1.first().cloned().filter(|c| !c.is_zero())?;
        let scaled = s1.iter().map(|x| x / &c).collect();
        Some(self.normalize(scaled))
    }

    pub fn pow(&self, a: &NfElem, mut e: u64) -> NfElem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Root-of-unity order, bounded by `2·deg²` (at least 2); `None` past the cap.
    pub fn mult_order(&self, a: &NfElem) -> Option<u64> {
        if self.is_zero(a) {
            return None;
        }
        let cap = (2 * self.degree * self.degree).max(2) as u64;
        let mut cur = a.clone();
        for k in 1..=cap {
            if self.is_one(&cur) {
                return Some(k);
            }
            cur = self.mul(&cur, a);
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{cyclotomic_poly, eta_min_poly};

    #[test]
    fn gaussian_integers() {
        let k = NumberField::new(cyclotomic_poly(4));
        let i = k.generator();
        assert_eq!(k.mul(&i, &i), k.from_int(-1));
        assert_eq!(k.mult_order(&i), Some(4));
        let one_plus_i = k.add(&k.one(), &i);
        let inv = k.inv(&one_plus_i).unwrap();
        assert!(k.is_one(&k.mul(&inv, &one_plus_i)));
        assert_eq!(k.mult_order(&one_plus_i), None);
    }

    #[test]
    fn golden_ratio_field() {
        let k = NumberField::new(eta_min_poly(5));
        let eta = k.generator();
        // η² = 1 − η
        assert_eq!(k.mul(&eta, &eta), k.sub(&k.one(), &eta));
        let inv = k.inv(&eta).unwrap();
        assert!(k.is_one(&k.mul(&inv, &eta)));
    }

    #[test]
    fn cyclotomic_orders() {
        let k = NumberField::new(cyclotomic_poly(7));
        let z = k.generator();
        assert_eq!(k.mult_order(&z), Some(7));
        assert_eq!(k.mult_order(&k.neg(&z)), Some(14));
        assert_eq!(k.pow(&z, 7), k.one());
    }
}
