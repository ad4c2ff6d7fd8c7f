use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("division by the zero series")]
    DivisionByZero,

    #[error("divisor has valuation {divisor}, exceeding the dividend's valuation {dividend}")]
    ValuationTooHigh { dividend: usize, divisor: usize },

    #[error("divisor valuation {valuation} leaves no usable terms at order {order}")]
    OrderExhausted { valuation: usize, order: usize },

    #[error("coefficient index {index} exceeds truncation order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("degree must be positive")]
    ZeroDegree,

    #[error("unsupported degree {0}: only degrees 2 and 3 are available here")]
    UnsupportedDegree(u32),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid cycle type: {0}")]
    InvalidCycleType(String),

    #[error("enumeration would visit {required} tuples, above the bound of {bound}")]
    EnumerationBound { required: u128, bound: u128 },

    #[error("unknown locus family `{0}`")]
    UnknownFamily(String),

    #[error("locus family `{family}` is not defined in degree {degree}")]
    FamilyDegree { family: &'static str, degree: u32 },

    #[error("genus {genus} is beyond the prepared table (gmax = {gmax})")]
    GenusOutOfRange { genus: usize, gmax: usize },
}
