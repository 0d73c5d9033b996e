//! Integer polynomials, cyclotomic polynomials and the minimal polynomials of
//! `2cos(2π/n)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{divisors, totient};

/// Dense integer polynomial, coefficients low-to-high, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = BigInt::from(-1);
        c[n] = BigInt::one();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Coefficients as `i64`, panicking on overflow.
    pub fn to_i64_vec(&self) -> Vec<i64> {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .map(|c| c.to_i64().expect("coefficient overflows i64"))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Division by a monic polynomial: returns `(quotient, remainder)`.
    pub fn div_rem_monic(&self, divisor: &Self) -> (Self, Self) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let d = divisor.degree().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let c = core::mem::take(&mut rem[i]);
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs[..d].iter().enumerate() {
                rem[i - d + j] -= &c * b;
            }
            quot[i - d] = c;
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// The `n`-th cyclotomic polynomial, by exact division of `x^n - 1` by the
/// cyclotomic polynomials of the proper divisors of `n`.
pub fn cyclotomic_poly(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut memo: Vec<(u64, IntPoly)> = Vec::new();
    for d in divisors(n) {
        let mut p = IntPoly::x_pow_minus_one(d as usize);
        for (e, phi) in &memo {
            if d % e == 0 {
                let (q, r) = p.div_rem_monic(phi);
                debug_assert!(r.is_zero());
                p = q;
            }
        }
        memo.push((d, p));
    }
    memo.pop().unwrap().1
}

/// Minimal polynomial over ℚ of `η_n = ζ_n + ζ_n⁻¹ = 2cos(2π/n)`.
///
/// For `n ≥ 3` the palindromic `Φ_n(x) = x^d ψ(x + 1/x)` with `d = φ(n)/2`;
/// `ψ` is read off by expanding `x^j + x^-j` as Dickson polynomials in `y`.
pub fn eta_min_poly(n: u64) -> IntPoly {
    assert!(n >= 1, "index must be positive");
    match n {
        1 => return IntPoly::from_i64(&[-2, 1]),
        2 => return IntPoly::from_i64(&[2, 1]),
        _ => {}
    }
    let phi = cyclotomic_poly(n);
    let d = (totient(n) / 2) as usize;
    // D_0 = 2, D_1 = y, D_j = y D_{j-1} - D_{j-2};  x^j + x^-j = D_j(x + 1/x)
    let y = IntPoly::from_i64(&[0, 1]);
    let mut dickson = vec![IntPoly::from_i64(&[2]), y.clone()];
    for j in 2..=d {
        let next = y.mul(&dickson[j - 1]).sub(&dickson[j - 2]);
        dickson.push(next);
    }
    let mut psi = IntPoly::new(vec![phi.coeff(d)]);
    for (j, dj) in dickson.iter().enumerate().skip(1) {
        psi = psi.add(&dj.scale(&phi.coeff(d + j)));
    }
    psi
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic_poly(1), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(
            cyclotomic_poly(7),
            IntPoly::from_i64(&[1, 1, 1, 1, 1, 1, 1])
        );
        assert_eq!(cyclotomic_poly(12), IntPoly::from_i64(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_poly(2), IntPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta_min_poly(1), IntPoly::from_i64(&[-2, 1]));
        assert_eq!(eta_min_poly(3), IntPoly::from_i64(&[1, 1]));
        assert_eq!(eta_min_poly(5), IntPoly::from_i64(&[-1, 1, 1]));
        assert_eq!(eta_min_poly(4), IntPoly::from_i64(&[0, 1]));
        assert_eq!(eta_min_poly(6), IntPoly::from_i64(&[-1, 1]));
        // 2cos(2π/7) satisfies y³ + y² − 2y − 1
        assert_eq!(eta_min_poly(7), IntPoly::from_i64(&[-1, -2, 1, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(
            alloc::format!("{}", IntPoly::from_i64(&[-1, 1, 1])),
            "x^2 + x - 1"
        );
        assert_eq!(
            alloc::format!("{}", IntPoly::from_i64(&[1, 0, -1, 0, 1])),
            "x^4 - x^2 + 1"
        );
    }
}
