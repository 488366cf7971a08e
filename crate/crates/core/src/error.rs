use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("extension degree must satisfy 1 <= m <= {max}, got {m}")]
    DegreeOutOfRange { m: u32, max: u32 },
    #[error("p^m overflows a 64-bit word (p = {p}, m = {m})")]
    FieldTooLarge { p: u64, m: u32 },
    #[error("no built-in modulus for p = {p}, m = {m}; pass one explicitly")]
    NoDefaultModulus { p: u64, m: u32 },
    #[error("modulus must have {expected} coefficients (degree m, constant term first, monic), got {got}")]
    BadModulusLength { expected: usize, got: usize },
    #[error("modulus must be monic with leading coefficient 1")]
    NonMonicModulus,
    #[error("modulus coefficient {c} is not reduced modulo p = {p}")]
    CoefficientOutOfRange { c: u64, p: u64 },
    #[error("modulus is reducible over F_{p}")]
    ReducibleModulus { p: u64 },
    #[error("encoding {enc} is out of range for a field of {q} elements")]
    EncodingOutOfRange { enc: u64, q: u64 },
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("sub-degree {sub} does not divide the extension degree {m}")]
    SubDegreeNotDivisor { sub: u32, m: u32 },
    #[error("operation rejects the zero polynomial")]
    ZeroPolynomial,
    #[error("resultant in y needs positive y-degree in at least one argument")]
    ConstantInY,
    #[error("field size {q} exceeds the cap {cap} for this operation")]
    FieldSizeCap { q: u64, cap: u64 },
    #[error("2-to-1 test requires an even domain size, got {size}")]
    OddDomainSize { size: usize },
    #[error("denominator vanishes on the domain at encoding {at}")]
    DenominatorVanishes { at: u64 },
    #[error("exponent {d} is out of range 1..={max}")]
    ExponentOutOfRange { d: u64, max: u64 },
    #[error("extension degree must be odd, got {m}")]
    EvenDegree { m: u32 },
    #[error("argument lies in the prime field; the reduction needs a outside F_p")]
    PrimeFieldElement,
    #[error("exact polynomial division left a remainder")]
    InexactDivision,
    #[error("context mismatch: expected p = {p}, m = {m}")]
    ContextMismatch { p: u64, m: u32 },
}
