use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generating set")]
    EmptyInput,
    #[error("generators must be positive integers")]
    ZeroGenerator,
    #[error("gcd of the generators is {gcd}, not 1; the complement is infinite")]
    GcdNotOne { gcd: u64 },
    #[error("0 cannot be a gap")]
    ZeroGap,
    #[error("complement is not closed under addition: {x} + {y} = {} is a gap", x + y)]
    NotASemigroup { x: u64, y: u64 },
    #[error("membership table needs {required} entries, capacity is {capacity}")]
    CapacityExceeded { required: u128, capacity: usize },
    #[error("operation is undefined for the full semigroup N")]
    FullSemigroup,
    #[error("{0} is not a gap")]
    NotAGap(u64),
    #[error("{0} is not a special gap")]
    NotASpecialGap(u64),
    #[error("{0} is not in BPF(S)")]
    NotBpfElement(u64),
    #[error("enumeration stopped after {partial} members (cap {cap})")]
    CapExceeded { partial: usize, cap: usize },
    #[error("hypothesis violated: {hypothesis} (k = {k}, n = {n})")]
    HypothesisViolated {
        hypothesis: &'static str,
        k: u64,
        n: u64,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("witness for k = {k} needs the factorial of a {digits}-digit integer")]
    WitnessTooLarge { k: u32, digits: usize },
    #[error("internal verification failed: {0}")]
    InternalVerificationFailed(String),
}
