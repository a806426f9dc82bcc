//! Parking functions under per-car backward rules.
//!
//! Car `i` prefers spot `a_i` and may back up at most `r_i` spots before
//! driving forward. With `r_i = k` for every car this is k-Naples parking.
//! The crate simulates the rule, decides membership without simulating,
//! counts members through recursions, and builds optimal rule vectors.

pub mod census;
pub mod characterize;
pub mod deficiency;
pub mod enumerate;
pub mod error;
pub mod oracle;
pub mod preference;
pub mod simulate;
pub mod strategize;
pub mod transform;

pub use census::Census;
pub use deficiency::{deficiency_profile, DeficiencyProfile, Interval};
pub use enumerate::{CountTable, TableKind};
pub use error::{Error, Result};
pub use preference::{Outcome, Preference, RuleSpec, RuleVector};
pub use simulate::{is_k_naples, is_strategy, park};
