use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a unit: zero has no square class")]
    NotAUnit,
    #[error("{0} is not an odd prime (characteristic 2 and composite moduli are unsupported)")]
    NotOddPrime(u64),
    #[error("alpha = {0} is a square in the base field; no quadratic extension")]
    SquareDiscriminant(String),
    #[error("square root of {0} is not rational, so it is not representable in the real model")]
    IrrationalRoot(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("not invertible")]
    Singular,
    #[error("no symplectic basis: {0}")]
    NoSymplecticBasis(&'static str),
    #[error("matrix is not symplectic: A^T J A != J")]
    NotSymplectic,
    #[error("identity automorphism, not an involution (A is scalar)")]
    ScalarAutomorphism,
    #[error("not an involution of the group: A^2 is neither I nor -I")]
    NotInvolution,
    #[error("does not preserve Sp(2n,k): entries are neither all in k nor all k-multiples of sqrt(alpha)")]
    DoesNotPreserve,
    #[error("Type 2 impossible for odd n (n = {0})")]
    Type2OddN(usize),
    #[error("wrong involution type: expected {expected}, found {found}")]
    WrongType { expected: String, found: String },
    #[error("unsatisfiable parameters: {0}")]
    Unsatisfiable(String),
    #[error("enumeration too large: group order {order} exceeds the limit of {limit} elements")]
    TooLarge { order: u128, limit: u128 },
    #[error("self-check failed: {0}")]
    SelfCheck(String),
}
