//! Symbolic descriptions of base fields and their decidable predicates.

use core::fmt;

use crate::arith::{gcd, is_prime, lcm, prime_power, totient};
use crate::error::{Error, Result};

/// A described base field `K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rational,
    /// `ℚ(ζ_m)`
    Cyclotomic(u64),
    /// `ℚ(ζ_m + ζ_m⁻¹)`
    RealCyclotomic(u64),
    FiniteField {
        p: u64,
        k: u32,
    },
    /// `F_{p^k}(t)`
    RationalFunctionOverFinite {
        p: u64,
        k: u32,
    },
    /// Algebraic closure of the prime field of the given characteristic.
    AlgClosure(u64),
}

/// Smallest even multiple-closed index: `ℚ(ζ_m) = ℚ(ζ_{2m})` for odd `m`.
pub fn normalized_cyclotomic_index(m: u64) -> u64 {
    if m % 2 == 1 {
        2 * m
    } else {
        m
    }
}

/// Every `a ∈ (ℤ/Lℤ)^×` lying in the subgroup cut out by `fixes_base`
/// satisfies `a ≡ ±1 (mod n)`; `L = lcm(n, mt)`.
fn galois_orbit_check(n: u64, mt: u64, fixes_base: impl Fn(u64) -> bool) -> bool {
    let l = lcm(n, mt);
    (1..=l)
        .filter(|&a| gcd(a, l) == 1 && fixes_base(a % mt))
        .all(|a| {
            let r = a % n;
            n <= 2 || r == 1 || r == n - 1
        })
}

impl FieldSpec {
    pub fn finite(p: u64, k: u32) -> Result<Self> {
        Self::check_pk(p, k)?;
        Ok(FieldSpec::FiniteField { p, k })
    }

    /// `F_q` from a prime power `q`.
    pub fn finite_of_order(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Ok(FieldSpec::FiniteField { p, k })
    }

    pub fn rational_function(p: u64, k: u32) -> Result<Self> {
        Self::check_pk(p, k)?;
        Ok(FieldSpec::RationalFunctionOverFinite { p, k })
    }

    pub fn cyclotomic(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidDescriptor(
                "cyclotomic index must be positive",
            ));
        }
        Ok(FieldSpec::Cyclotomic(m))
    }

    pub fn real_cyclotomic(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidDescriptor(
                "cyclotomic index must be positive",
            ));
        }
        Ok(FieldSpec::RealCyclotomic(m))
    }

    pub fn alg_closure(c: u64) -> Result<Self> {
        if c != 0 && !is_prime(c) {
            return Err(Error::NotPrime(c));
        }
        Ok(FieldSpec::AlgClosure(c))
    }

    fn check_pk(p: u64, k: u32) -> Result<()> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::InvalidDescriptor(
                "extension degree must be positive",
            ));
        }
        Ok(())
    }

    /// Checks the kind's invariants (useful for values built by hand).
    pub fn validate(&self) -> Result<()> {
        match *self {
            FieldSpec::FiniteField { p, k } | FieldSpec::RationalFunctionOverFinite { p, k } => {
                Self::check_pk(p, k)
            }
            FieldSpec::Cyclotomic(0) | FieldSpec::RealCyclotomic(0) => Err(
                Error::InvalidDescriptor("cyclotomic index must be positive"),
            ),
            FieldSpec::AlgClosure(c) if c != 0 && !is_prime(c) => Err(Error::NotPrime(c)),
            _ => Ok(()),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldSpec::Rational | FieldSpec::Cyclotomic(_) | FieldSpec::RealCyclotomic(_) => 0,
            FieldSpec::FiniteField { p, .. } | FieldSpec::RationalFunctionOverFinite { p, .. } => p,
            FieldSpec::AlgClosure(c) => c,
        }
    }

    /// `(p, k)` of the field of constants when it is `F_{p^k}`.
    fn finite_constants(&self) -> Option<(u64, u32)> {
        match *self {
            FieldSpec::FiniteField { p, k } | FieldSpec::RationalFunctionOverFinite { p, k } => {
                Some((p, k))
            }
            _ => None,
        }
    }

    fn char_divides(&self, n: u64) -> bool {
        let c = self.characteristic();
        c != 0 && n.is_multiple_of(c)
    }

    /// Whether a primitive `n`-th root of unity lies in the field.
    pub fn contains_zeta(&self, n: u64) -> bool {
        if n <= 1 {
            return true;
        }
        if self.char_divides(n) {
            return false;
        }
        if let Some((p, k)) = self.finite_constants() {
            return match p.checked_pow(k) {
                Some(q) => (q - 1) % n == 0,
                None => crate::arith::pow_mod(p, k as u64, n) == 1,
            };
        }
        match *self {
            FieldSpec::Rational | FieldSpec::RealCyclotomic(_) => n <= 2,
            FieldSpec::Cyclotomic(m) => normalized_cyclotomic_index(m).is_multiple_of(n),
            FieldSpec::AlgClosure(_) => true,
            _ => unreachable!(),
        }
    }

    /// Whether `ζ_n + ζ_n⁻¹` lies in the field.
    pub fn contains_zeta_plus(&self, n: u64) -> Result<bool> {
        if n == 0 {
            return Err(Error::InvalidDescriptor("n must be positive"));
        }
        if self.char_divides(n) {
            return Err(Error::CharDividesN {
                characteristic: self.characteristic(),
                n,
            });
        }
        if let Some((p, k)) = self.finite_constants() {
            let r = crate::arith::pow_mod(p, k as u64, n);
            return Ok(n <= 2 || r == 1 || r == n - 1);
        }
        Ok(match *self {
            FieldSpec::Rational => totient(n) <= 2,
            FieldSpec::Cyclotomic(m) => {
                let mt = normalized_cyclotomic_index(m);
                galois_orbit_check(n, mt, |a| a == 1 % mt)
            }
            FieldSpec::RealCyclotomic(m) => {
                let mt = normalized_cyclotomic_index(m);
                galois_orbit_check(n, mt, |a| a == 1 % mt || a == mt - 1)
            }
            FieldSpec::AlgClosure(_) => true,
            _ => unreachable!(),
        })
    }

    /// `[K : F_p] ≥ r`, with infinite degree counting as large enough.
    pub fn fp_degree_at_least(&self, r: u32) -> Result<bool> {
        match *self {
            FieldSpec::FiniteField { k, .. } => Ok(k >= r),
            FieldSpec::RationalFunctionOverFinite { .. } => Ok(true),
            FieldSpec::AlgClosure(c) if c != 0 => Ok(true),
            _ => Err(Error::NotPositiveCharacteristic),
        }
    }

    /// Whether `F_q` embeds in the field.
    pub fn contains_fq(&self, q: u64) -> bool {
        let Some((p, j)) = prime_power(q) else {
            return false;
        };
        if self.characteristic() != p {
            return false;
        }
        match *self {
            FieldSpec::FiniteField { k, .. } | FieldSpec::RationalFunctionOverFinite { k, .. } => {
                k % j == 0
            }
            FieldSpec::AlgClosure(_) => true,
            _ => false,
        }
    }

    pub fn cardinality_at_least(&self, c: u64) -> bool {
        match *self {
            FieldSpec::FiniteField { p, k } => p.checked_pow(k).is_none_or(|q| q >= c),
            _ => true,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::FiniteField { .. })
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FieldSpec::Rational => f.write_str("Q"),
            FieldSpec::Cyclotomic(m) => write!(f, "Q(zeta:{m})"),
            FieldSpec::RealCyclotomic(m) => write!(f, "Q(eta:{m})"),
            FieldSpec::FiniteField { p, k } => write!(f, "F:{}", p.pow(k)),
            FieldSpec::RationalFunctionOverFinite { p, k } => write!(f, "F:{}(t)", p.pow(k)),
            FieldSpec::AlgClosure(c) => write!(f, "closure:{c}"),
        }
    }
}
