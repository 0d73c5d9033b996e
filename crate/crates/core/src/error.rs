use core::fmt;

/// Errors raised by the algebra, group and decision routines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The characteristic divides `n`, so `ζ_n + ζ_n⁻¹` is not defined.
    CharDividesN {
        characteristic: u64,
        n: u64,
    },
    /// A positive-characteristic predicate was asked of a characteristic-0 field.
    NotPositiveCharacteristic,
    /// Requirements handed to the realization builder contradict each other.
    InconsistentRequirements(&'static str),
    /// Requirements are consistent but need a compositum we do not build.
    UnsupportedRequirements(&'static str),
    NotAUnitOfFiniteOrder,
    SingularMatrix,
    OrderExceedsCap {
        cap: u64,
    },
    /// Operands live in different concrete fields.
    FieldMismatch,
    CapExceeded {
        cap: usize,
    },
    InvalidDescriptor(&'static str),
    MissingRoots(&'static str),
    InvalidGnprParams {
        n: u64,
        p: u64,
        r: u32,
    },
    FieldTooSmall,
    /// A finite field too large for the table-driven representation.
    FieldTooLarge {
        q: u64,
    },
    NotPrime(u64),
    NotPrimePower(u64),
    /// A subgroup of SL2 that matched no Dickson family.
    Unclassifiable {
        order: usize,
    },
    UnsupportedDescriptor(&'static str),
    NotEdOne,
    /// Operation needs a finite field.
    NotFinite,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::CharDividesN { characteristic, n } => {
                write!(f, "characteristic {characteristic} divides {n}")
            }
            Error::NotPositiveCharacteristic => f.write_str("field has characteristic 0"),
            Error::InconsistentRequirements(why) => write!(f, "inconsistent requirements: {why}"),
            Error::UnsupportedRequirements(why) => write!(f, "unsupported requirements: {why}"),
            Error::NotAUnitOfFiniteOrder => f.write_str("element is not a root of unity"),
            Error::SingularMatrix => f.write_str("matrix is singular"),
            Error::OrderExceedsCap { cap } => write!(f, "order exceeds cap {cap}"),
            Error::FieldMismatch => f.write_str("operands belong to different fields"),
            Error::CapExceeded { cap } => write!(f, "group closure exceeds cap {cap}"),
            Error::InvalidDescriptor(why) => write!(f, "invalid group descriptor: {why}"),
            Error::MissingRoots(why) => write!(f, "field lacks required roots of unity: {why}"),
            Error::InvalidGnprParams { n, p, r } => {
                write!(f, "invalid parameters for G({n},{p}^{r})")
            }
            Error::FieldTooSmall => f.write_str("field too small for the requested subspace"),
            Error::FieldTooLarge { q } => write!(f, "finite field of order {q} is too large"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::NotPrimePower(q) => write!(f, "{q} is not a prime power"),
            Error::Unclassifiable { order } => {
                write!(f, "subgroup of order {order} matches no Dickson type")
            }
            Error::UnsupportedDescriptor(why) => write!(f, "unsupported descriptor: {why}"),
            Error::NotEdOne => f.write_str("verdict is not essential dimension one"),
            Error::NotFinite => f.write_str("operation requires a finite field"),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
