//! Preferences, rule vectors and parking outcomes.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A sequence of 1-based spot preferences on a lot of `spots` spots.
///
/// With as many cars as spots this is the classical problem. Fewer cars
/// than spots is allowed; more is rejected.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Preference {
    prefs: Vec<usize>,
    spots: usize,
}

impl Preference {
    pub fn new(prefs: Vec<usize>, spots: usize) -> Result<Self> {
        if spots == 0 && !prefs.is_empty() {
            return Err(Error::NoSpots);
        }
        if prefs.len() > spots {
            return Err(Error::TooManyCars { cars: prefs.len(), spots });
        }
        if let Some((i, &v)) = prefs.iter().enumerate().find(|(_, &v)| v == 0 || v > spots) {
            return Err(Error::OutOfRange { car: i + 1, value: v, spots });
        }
        Ok(Preference { prefs, spots })
    }

    /// One car per spot.
    pub fn full(prefs: Vec<usize>) -> Result<Self> {
        let s = prefs.len();
        Self::new(prefs, s)
    }

    /// Skips validation; callers guarantee the invariants.
    pub(crate) fn from_parts(prefs: Vec<usize>, spots: usize) -> Self {
        debug_assert!(prefs.len() <= spots && prefs.iter().all(|&a| a >= 1 && a <= spots));
        Preference { prefs, spots }
    }

    pub fn prefs(&self) -> &[usize] {
        &self.prefs
    }

    /// Number of cars.
    pub fn len(&self) -> usize {
        self.prefs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.prefs.is_empty()
    }

    pub fn spots(&self) -> usize {
        self.spots
    }

    /// Preference of car `i` (1-based).
    pub fn get(&self, i: usize) -> usize {
        self.prefs[i - 1]
    }

    pub fn is_full(&self) -> bool {
        self.prefs.len() == self.spots
    }

    pub(crate) fn require_full(&self) -> Result<()> {
        if self.is_full() {
            Ok(())
        } else {
            Err(Error::NotFull { cars: self.len(), spots: self.spots })
        }
    }

    /// `counts[i]` is the number of cars preferring spot `i`; index 0 is unused.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut counts = vec![0; self.spots + 1];
        for &a in &self.prefs {
            counts[a] += 1;
        }
        counts
    }

    pub fn multiplicity(&self, spot: usize) -> usize {
        self.prefs.iter().filter(|&&a| a == spot).count()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.prefs
    }
}

impl fmt::Display for Preference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.prefs.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", body.join(","))?;
        if !self.is_full() {
            write!(f, "@{}", self.spots)?;
        }
        Ok(())
    }
}

/// Parses `5,3,3,5,4` or `2,2@5`.
impl FromStr for Preference {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { what: "preference", input: s.to_string() };
        let s = s.trim();
        let (body, spots) = match s.split_once('@') {
            Some((b, sp)) => (b, Some(sp.trim().parse::<usize>().map_err(|_| bad())?)),
            None => (s, None),
        };
        let prefs = if body.trim().is_empty() {
            Vec::new()
        } else {
            body.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| bad())).collect::<Result<Vec<_>>>()?
        };
        let spots = spots.unwrap_or(prefs.len());
        Preference::new(prefs, spots)
    }
}

/// Per-car backward limits. `r_i = 0` is the standard rule.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RuleVector {
    limits: Vec<usize>,
}

impl RuleVector {
    pub fn new(limits: Vec<usize>) -> Self {
        RuleVector { limits }
    }

    pub fn constant(k: usize, cars: usize) -> Self {
        RuleVector { limits: vec![k; cars] }
    }

    pub fn zeros(cars: usize) -> Self {
        Self::constant(0, cars)
    }

    /// Unit vector `e_i` (1-based).
    pub fn unit(i: usize, cars: usize) -> Self {
        let mut limits = vec![0; cars];
        limits[i - 1] = 1;
        RuleVector { limits }
    }

    pub fn limits(&self) -> &[usize] {
        &self.limits
    }

    pub fn len(&self) -> usize {
        self.limits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.limits.is_empty()
    }

    pub fn get(&self, i: usize) -> usize {
        self.limits[i - 1]
    }

    /// `|ρ|`, the sum of all limits.
    pub fn rank(&self) -> usize {
        self.limits.iter().sum()
    }

    /// Pointwise `self ≤ other`.
    pub fn le(&self, other: &RuleVector) -> bool {
        self.limits.len() == other.limits.len() && self.limits.iter().zip(&other.limits).all(|(a, b)| a <= b)
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.limits
    }
}

impl fmt::Display for RuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.limits.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", body.join(","))
    }
}

/// Rule text before the number of cars is known: `0,1,2`, `k=3` or `inf`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleSpec {
    Explicit(Vec<usize>),
    Constant(usize),
    Unlimited,
}

impl RuleSpec {
    pub fn resolve(&self, alpha: &Preference) -> Result<RuleVector> {
        let m = alpha.len();
        match self {
            RuleSpec::Explicit(v) if v.len() != m => Err(Error::LengthMismatch { cars: m, rules: v.len() }),
            RuleSpec::Explicit(v) => Ok(RuleVector::new(v.clone())),
            RuleSpec::Constant(k) => Ok(RuleVector::constant(*k, m)),
            RuleSpec::Unlimited => Ok(RuleVector::constant(alpha.spots(), m)),
        }
    }
}

impl FromStr for RuleSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { what: "rule vector", input: s.to_string() };
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") {
            return Ok(RuleSpec::Unlimited);
        }
        if let Some(k) = s.strip_prefix("k=") {
            return k.trim().parse().map(RuleSpec::Constant).map_err(|_| bad());
        }
        if s.is_empty() {
            return Ok(RuleSpec::Explicit(Vec::new()));
        }
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()
            .map(RuleSpec::Explicit)
    }
}

/// Result of a parking run: where each car ended up and how far it drove.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    /// `Some(spot)` or `None` for a car that left without parking.
    pub assignment: Vec<Option<usize>>,
    pub backward_steps: Vec<usize>,
    pub forward_steps: Vec<usize>,
}

impl Outcome {
    pub fn all_parked(&self) -> bool {
        self.assignment.iter().all(Option::is_some)
    }

    pub fn unparked(&self) -> usize {
        self.assignment.iter().filter(|a| a.is_none()).count()
    }

    pub fn total_backward(&self) -> usize {
        self.backward_steps.iter().sum()
    }

    pub fn total_forward(&self) -> usize {
        self.forward_steps.iter().sum()
    }

    /// Spot of car `i` (1-based).
    pub fn spot(&self, i: usize) -> Option<usize> {
        self.assignment[i - 1]
    }

    /// `occupant[p]` is the 1-based car parked at spot `p`; index 0 unused.
    pub fn occupants(&self, spots: usize) -> Vec<Option<usize>> {
        let mut occ = vec![None; spots + 1];
        for (i, a) in self.assignment.iter().enumerate() {
            if let Some(p) = a {
                occ[*p] = Some(i + 1);
            }
        }
        occ
    }

    /// Spots as text, with `-` for unparked cars.
    pub fn render(&self) -> String {
        let cells: Vec<String> =
            self.assignment.iter().map(|a| a.map_or_else(|| "-".to_string(), |p| p.to_string())).collect();
        cells.join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_and_counts() {
        let a = Preference::new(vec![5, 3, 3, 5, 4], 5).unwrap();
        assert_eq!(a.multiplicity(3), 2);
        assert_eq!(a.multiplicities()[5], 2);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(Preference::new(vec![6, 1], 5), Err(Error::OutOfRange { car: 1, .. })));
        assert!(matches!(Preference::new(vec![1, 1, 1], 2), Err(Error::TooManyCars { .. })));
    }

    #[test]
    fn partial_is_allowed() {
        let a = Preference::new(vec![2, 2], 5).unwrap();
        assert!(!a.is_full());
        assert_eq!(a.to_string(), "2,2@5");
    }

    #[test]
    fn parse_round_trip() {
        let a: Preference = "5,3,3,5,4".parse().unwrap();
        assert_eq!(a.spots(), 5);
        let b: Preference = "2,2@5".parse().unwrap();
        assert_eq!(b.to_string().parse::<Preference>().unwrap(), b);
        assert!("1,x".parse::<Preference>().is_err());
        let empty: Preference = "@3".parse().unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn rule_specs() {
        let a: Preference = "4,3,3,4,1".parse().unwrap();
        assert_eq!("k=2".parse::<RuleSpec>().unwrap().resolve(&a).unwrap().limits(), &[2; 5]);
        assert_eq!("inf".parse::<RuleSpec>().unwrap().resolve(&a).unwrap().limits(), &[5; 5]);
        assert_eq!("1,1,0,1,1".parse::<RuleSpec>().unwrap().resolve(&a).unwrap().rank(), 4);
        assert!("1,1".parse::<RuleSpec>().unwrap().resolve(&a).is_err());
    }
}
