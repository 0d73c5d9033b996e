use core::fmt;

use crate::arith::{gcd, is_prime, mult_order_mod, prime_power};
use crate::error::{Error, Result};

/// Names of the finite groups handled by the decision engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupDescriptor {
    Cyclic(u64),
    /// Dihedral group of order `2n`.
    Dihedral(u64),
    /// Binary dihedral group of order `4n`.
    BinaryDihedral(u64),
    /// `G(n, p^r)` of order `n·p^r`.
    Gnpr {
        n: u64,
        p: u64,
        r: u32,
    },
    SL2(u64),
    ElemAbelian {
        p: u64,
        r: u32,
    },
    Alt4,
    Alt5,
    Sym4,
    Trivial,
}

/// `[F_p(ζ_n²) : F_p]`, the multiplicative order of `p` modulo `n / gcd(n, 2)`.
pub fn gnpr_degree_s(n: u64, p: u64) -> Result<u32> {
    if n == 0 || !is_prime(p) || n.is_multiple_of(p) {
        return Err(Error::InvalidGnprParams { n, p, r: 0 });
    }
    Ok(mult_order_mod(p, n / gcd(n, 2)).unwrap() as u32)
}

impl GroupDescriptor {
    pub fn validate(&self) -> Result<()> {
        match *self {
            GroupDescriptor::Cyclic(0)
            | GroupDescriptor::Dihedral(0)
            | GroupDescriptor::BinaryDihedral(0) => {
                Err(Error::InvalidDescriptor("index must be positive"))
            }
            GroupDescriptor::Gnpr { n, p, r } => {
                let s = gnpr_degree_s(n, p).map_err(|_| Error::InvalidGnprParams { n, p, r })?;
                if r == 0 || r % s != 0 {
                    return Err(Error::InvalidGnprParams { n, p, r });
                }
                Ok(())
            }
            GroupDescriptor::SL2(q) => prime_power(q).map(|_| ()).ok_or(Error::NotPrimePower(q)),
            GroupDescriptor::ElemAbelian { p, r } => {
                if !is_prime(p) {
                    Err(Error::NotPrime(p))
                } else if r == 0 {
                    Err(Error::InvalidDescriptor("rank must be positive"))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Group order, `None` on overflow.
    pub fn order(&self) -> Option<u64> {
        match *self {
            GroupDescriptor::Cyclic(n) => Some(n),
            GroupDescriptor::Dihedral(n) => n.checked_mul(2),
            GroupDescriptor::BinaryDihedral(n) => n.checked_mul(4),
            GroupDescriptor::Gnpr { n, p, r } => p.checked_pow(r)?.checked_mul(n),
            GroupDescriptor::SL2(q) => q.checked_mul(q)?.checked_sub(1)?.checked_mul(q),
            GroupDescriptor::ElemAbelian { p, r } => p.checked_pow(r),
            GroupDescriptor::Alt4 => Some(12),
            GroupDescriptor::Alt5 => Some(60),
            GroupDescriptor::Sym4 => Some(24),
            GroupDescriptor::Trivial => Some(1),
        }
    }
}

impl fmt::Display for GroupDescriptor {
    /// The command-line group grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupDescriptor::Cyclic(n) => write!(f, "C:{n}"),
            GroupDescriptor::Dihedral(n) => write!(f, "D:{n}"),
            GroupDescriptor::BinaryDihedral(n) => write!(f, "BD:{n}"),
            GroupDescriptor::Gnpr { n, p, r } => write!(f, "G:{n},{p},{r}"),
            GroupDescriptor::SL2(q) => write!(f, "SL2:{q}"),
            GroupDescriptor::ElemAbelian { p, r } => write!(f, "EA:{p},{r}"),
            GroupDescriptor::Alt4 => f.write_str("A:4"),
            GroupDescriptor::Alt5 => f.write_str("A:5"),
            GroupDescriptor::Sym4 => f.write_str("S:4"),
            GroupDescriptor::Trivial => f.write_str("1"),
        }
    }
}
