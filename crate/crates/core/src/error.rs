use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("preference {value} at car {car} is outside [1, {spots}]")]
    OutOfRange { car: usize, value: usize, spots: usize },

    #[error("{cars} cars do not fit on a lot of {spots} spots")]
    TooManyCars { cars: usize, spots: usize },

    #[error("lot must have at least one spot")]
    NoSpots,

    #[error("rule vector has length {rules} but there are {cars} cars")]
    LengthMismatch { cars: usize, rules: usize },

    #[error("operation needs as many cars as spots ({cars} cars, {spots} spots)")]
    NotFull { cars: usize, spots: usize },

    #[error("preference is not complete")]
    NotComplete,

    #[error("completeness is undefined for lots with fewer than 2 spots")]
    TooShort,

    #[error("circular parking needs fewer cars than spots")]
    CircularFull,

    #[error("translation by {shift} must be smaller than the least preference {least}")]
    BadTranslation { shift: usize, least: usize },

    #[error("position {position} is not a car index in [1, {cars}]")]
    BadPosition { position: usize, cars: usize },

    #[error("reflection needs no car preferring spot 1")]
    PrefersSpotOne,

    #[error("rule vector is not a parking strategy for this preference")]
    NotStrategy,

    #[error("rule {value} at car {car} is not 0 or 1")]
    RuleNotBinary { car: usize, value: usize },

    #[error("rule {value} at car {car} exceeds {max}, so the vector is not normalized")]
    NotNormalized { car: usize, value: usize, max: usize },

    #[error("preference is not a 1-Naples parking function")]
    NotOneNaples,

    #[error("invalid parameters: {0}")]
    Domain(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("inexact division {numerator} / {denominator} in {context}")]
    InexactDivision { numerator: u128, denominator: u128, context: &'static str },

    #[error("census over {points} preferences exceeds the budget of {budget}")]
    BudgetExceeded { points: u128, budget: u128 },

    #[error("refusing to list {count} plans (limit {limit})")]
    TooManyPlans { count: u128, limit: u128 },

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T> = std::result::Result<T, Error>;
