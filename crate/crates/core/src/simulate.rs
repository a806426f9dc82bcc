//! The parking process itself.

use crate::error::{Error, Result};
use crate::preference::{Outcome, Preference, RuleVector};

/// Park the cars in order. Car `i` tries `a_i`, then `a_i - 1` down to
/// `max(1, a_i - r_i)`, then `a_i + 1` up to `s`; otherwise it leaves.
pub fn park(alpha: &Preference, rho: &RuleVector) -> Result<Outcome> {
    if alpha.len() != rho.len() {
        return Err(Error::LengthMismatch { cars: alpha.len(), rules: rho.len() });
    }
    let s = alpha.spots();
    let m = alpha.len();
    let mut taken = vec![false; s + 1];
    let mut out = Outcome { assignment: vec![None; m], backward_steps: vec![0; m], forward_steps: vec![0; m] };
    for (i, (&a, &r)) in alpha.prefs().iter().zip(rho.limits()).enumerate() {
        if let Some(spot) = find_spot(&taken, a, r) {
            taken[spot] = true;
            out.assignment[i] = Some(spot);
            if spot < a {
                out.backward_steps[i] = a - spot;
            } else {
                out.forward_steps[i] = spot - a;
            }
        }
    }
    Ok(out)
}

#[inline]
pub(crate) fn find_spot(taken: &[bool], a: usize, r: usize) -> Option<usize> {
    if !taken[a] {
        return Some(a);
    }
    let lowest = a.saturating_sub(r).max(1);
    if let Some(p) = (lowest..a).rev().find(|&p| !taken[p]) {
        return Some(p);
    }
    (a + 1..taken.len()).find(|&p| !taken[p])
}

/// Allocation-light check that every car parks, for census loops.
/// `taken` must have length at least `s + 1`; it is overwritten.
pub fn parks_all_with(prefs: &[usize], spots: usize, rule: impl Fn(usize) -> usize, taken: &mut [bool]) -> bool {
    taken[..=spots].iter_mut().for_each(|t| *t = false);
    let taken = &mut taken[..=spots];
    for (i, &a) in prefs.iter().enumerate() {
        match find_spot(taken, a, rule(i)) {
            Some(p) => taken[p] = true,
            None => return false,
        }
    }
    true
}

/// Total steps driven when every car parks, `None` otherwise. Same buffer
/// contract as [`parks_all_with`].
pub fn parking_cost_with(
    prefs: &[usize],
    spots: usize,
    rule: impl Fn(usize) -> usize,
    taken: &mut [bool],
) -> Option<usize> {
    taken[..=spots].iter_mut().for_each(|t| *t = false);
    let taken = &mut taken[..=spots];
    let mut steps = 0;
    for (i, &a) in prefs.iter().enumerate() {
        let p = find_spot(taken, a, rule(i))?;
        taken[p] = true;
        steps += a.abs_diff(p);
    }
    Some(steps)
}

/// Every car parks under `ρ`.
pub fn is_strategy(alpha: &Preference, rho: &RuleVector) -> Result<bool> {
    if alpha.len() != rho.len() {
        return Err(Error::LengthMismatch { cars: alpha.len(), rules: rho.len() });
    }
    let mut taken = vec![false; alpha.spots() + 1];
    Ok(parks_all_with(alpha.prefs(), alpha.spots(), |i| rho.limits()[i], &mut taken))
}

/// Every car parks under the constant `k`-Naples rule.
pub fn is_k_naples(alpha: &Preference, k: usize) -> bool {
    let mut taken = vec![false; alpha.spots() + 1];
    parks_all_with(alpha.prefs(), alpha.spots(), |_| k, &mut taken)
}

/// `ψ_k(α)`.
pub fn park_k(alpha: &Preference, k: usize) -> Outcome {
    park(alpha, &RuleVector::constant(k, alpha.len())).expect("lengths agree")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularOutcome {
    /// Occupied spots in increasing order.
    pub occupied: Vec<usize>,
    pub assignment: Vec<usize>,
}

/// Forward-only parking on a circular lot; every car parks when `m < s`.
pub fn park_circular(alpha: &Preference) -> Result<CircularOutcome> {
    let s = alpha.spots();
    if alpha.len() >= s {
        return Err(Error::CircularFull);
    }
    let mut taken = vec![false; s + 1];
    let mut assignment = Vec::with_capacity(alpha.len());
    for &a in alpha.prefs() {
        let mut p = a;
        while taken[p] {
            p = if p == s { 1 } else { p + 1 };
        }
        taken[p] = true;
        assignment.push(p);
    }
    let occupied = (1..=s).filter(|&p| taken[p]).collect();
    Ok(CircularOutcome { occupied, assignment })
}
