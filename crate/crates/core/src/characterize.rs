//! Membership tests that avoid simulating the whole lot.

use crate::deficiency::{DeficiencyProfile, Interval};
use crate::error::{Error, Result};
use crate::preference::{Preference, RuleVector};
use crate::simulate::{find_spot, is_k_naples, park_k};
use crate::transform::restrict_translate;

/// Ascending rearrangement `b` satisfies `b_j ≤ j`.
pub fn is_parking_function_sorted(alpha: &Preference) -> Result<bool> {
    alpha.require_full()?;
    let mut b = alpha.prefs().to_vec();
    b.sort_unstable();
    Ok(b.iter().enumerate().all(|(j, &x)| x <= j + 1))
}

/// Smallest constant `k` for which some rearrangement parks: `max u(j)`.
/// The descending rearrangement always works with this `k`.
pub fn min_naples_k(alpha: &Preference) -> Result<usize> {
    alpha.require_full()?;
    Ok(DeficiencyProfile::of(alpha).max_u() as usize)
}

/// `U = [2, n]`.
pub fn is_complete(alpha: &Preference) -> Result<bool> {
    alpha.require_full()?;
    if alpha.spots() < 2 {
        return Err(Error::TooShort);
    }
    Ok(DeficiencyProfile::of(alpha).is_complete())
}

fn require_complete(alpha: &Preference) -> Result<DeficiencyProfile> {
    if !is_complete(alpha)? {
        return Err(Error::NotComplete);
    }
    Ok(DeficiencyProfile::of(alpha))
}

/// `#{i < before : lo ≤ a_i ≤ hi}` with 0-based `before`, `lo` clamped to 1.
fn count_before(a: &[usize], before: usize, lo: i64, hi: usize) -> usize {
    let lo = lo.max(1) as usize;
    a[..before].iter().filter(|&&x| lo <= x && x <= hi).count()
}

/// Smallest `λ ∈ [0, k - u(h)]` whose window `[h - u(h) - λ, h - 1]` holds
/// at most (or exactly) `λ` of the cars before `before`.
fn first_lambda(a: &[usize], before: usize, h: usize, u_h: i64, k: usize, exact: bool) -> Option<usize> {
    let top = k as i64 - u_h;
    if top < 0 {
        return None;
    }
    (0..=top as usize).find(|&lambda| {
        let c = count_before(a, before, h as i64 - u_h - lambda as i64, h - 1);
        if exact {
            c == lambda
        } else {
            c <= lambda
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RtlWitness {
    /// 1-based index of the right-to-left maximum.
    pub position: usize,
    pub value: usize,
    pub u: i64,
    pub lambda: Option<usize>,
    /// `λ + u(a_j)` when `λ` exists.
    pub eta: Option<usize>,
}

/// Strict right-to-left maxima as 1-based positions, rightmost first.
pub fn rtl_maxima(alpha: &Preference) -> Vec<usize> {
    let mut out = Vec::new();
    let mut best = 0;
    for (i, &x) in alpha.prefs().iter().enumerate().rev() {
        if x > best {
            best = x;
            out.push(i + 1);
        }
    }
    out
}

/// Membership of a complete preference from its right-to-left maxima alone.
/// Every `λ` in range is tried, smallest first.
pub fn complete_membership_rtl(alpha: &Preference, k: usize) -> Result<(bool, Vec<RtlWitness>)> {
    let d = require_complete(alpha)?;
    let a = alpha.prefs();
    let maxima = rtl_maxima(alpha);
    // necessary: gaps between consecutive maxima at most k, smallest at most k + 1
    let gaps_ok =
        maxima.windows(2).all(|w| a[w[1] - 1] - a[w[0] - 1] <= k) && maxima.first().is_some_and(|&j| a[j - 1] <= k + 1);
    let witnesses: Vec<RtlWitness> = maxima
        .iter()
        .map(|&j| {
            let h = a[j - 1];
            let u = d.u(h);
            let lambda = first_lambda(a, j - 1, h, u, k, false);
            RtlWitness { position: j, value: h, u, lambda, eta: lambda.map(|l| l + u as usize) }
        })
        .collect();
    let ok = gaps_ok && witnesses.iter().all(|w| w.lambda.is_some());
    Ok((ok, witnesses))
}

/// For every spot `h` someone prefers, the last car preferring exactly `h`
/// finds a window with at most `λ` earlier cars.
pub fn last_exact_condition(alpha: &Preference, k: usize) -> Result<bool> {
    let d = require_complete(alpha)?;
    let a = alpha.prefs();
    Ok((1..=alpha.spots()).all(|h| match a.iter().rposition(|&x| x == h) {
        None => true,
        Some(j) => first_lambda(a, j, h, d.u(h), k, false).is_some(),
    }))
}

/// Spots `h` where the last car preferring at least `h` has no window with
/// exactly `λ` earlier cars.
pub fn last_upper_failures(alpha: &Preference, k: usize) -> Result<Vec<usize>> {
    let d = require_complete(alpha)?;
    let a = alpha.prefs();
    Ok((1..=alpha.spots())
        .filter(|&h| match a.iter().rposition(|&x| x >= h) {
            None => true,
            Some(j) => first_lambda(a, j, h, d.u(h), k, true).is_none(),
        })
        .collect())
}

/// For every spot `h`, the last car preferring at least `h` finds a window
/// with exactly `λ` earlier cars.
pub fn last_upper_condition(alpha: &Preference, k: usize) -> Result<bool> {
    Ok(last_upper_failures(alpha, k)?.is_empty())
}

/// A subsequence that, shifted down by `p - 2`, is a complete `k`-Naples
/// parking function and so guarantees spot `p - 1` gets filled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteWitness {
    pub interval: Interval,
    /// 1-based, increasing.
    pub positions: Vec<usize>,
    pub translated: Preference,
}

/// With only the cars preferring at least `p` on the lot, somebody ends up
/// in spot `p - 1`.
pub fn reaches_critical_spot(alpha: &Preference, k: usize, iv: Interval) -> bool {
    let mut taken = vec![false; alpha.spots() + 1];
    for &a in alpha.prefs().iter().filter(|&&a| a >= iv.p) {
        if let Some(p) = find_spot(&taken, a, k) {
            taken[p] = true;
        }
    }
    taken[iv.p - 1]
}

fn interval_passes(alpha: &Preference, k: usize, iv: Interval) -> bool {
    iv.len() <= k || reaches_critical_spot(alpha, k, iv)
}

/// Cars preferring at least `p - 1`, shifted by `p - 2`, parked on their
/// own; the cars filling the shortest prefix `[1, M]` that only they
/// prefer.
pub fn extract_witness(alpha: &Preference, k: usize, iv: Interval) -> Option<CompleteWitness> {
    let shift = iv.p - 2;
    let hat: Vec<usize> = (1..=alpha.len()).filter(|&i| alpha.get(i) >= iv.p - 1).collect();
    let size = alpha.spots() - shift;
    if hat.len() > size {
        return None;
    }
    let sub = Preference::new(hat.iter().map(|&i| alpha.get(i) - shift).collect(), size).ok()?;
    let occupants = park_k(&sub, k).occupants(size);
    let mut worst = 0;
    let mut m = None;
    for spot in 1..=size {
        let car = occupants[spot]?;
        worst = worst.max(sub.get(car));
        if worst <= spot {
            m = Some(spot);
            break;
        }
    }
    let m = m?;
    let mut positions: Vec<usize> = (1..=m).map(|spot| hat[occupants[spot].unwrap() - 1]).collect();
    positions.sort_unstable();
    let translated = restrict_translate(alpha, &positions, shift).ok()?;
    Some(CompleteWitness { interval: iv, positions, translated })
}

/// Check a proposed witness: enough cars, preferences in
/// `[p - 1, p - 2 + |J|]`, and the shifted subsequence complete and
/// `k`-Naples.
pub fn verify_witness(alpha: &Preference, k: usize, iv: Interval, positions: &[usize]) -> bool {
    let mut j = positions.to_vec();
    j.sort_unstable();
    j.dedup();
    if j.len() != positions.len() || j.len() < iv.len() + 1 || j.iter().any(|&x| x == 0 || x > alpha.len()) {
        return false;
    }
    let hi = iv.p - 2 + j.len();
    if j.iter().any(|&x| !(iv.p - 1..=hi).contains(&alpha.get(x))) {
        return false;
    }
    match restrict_translate(alpha, &j, iv.p - 2) {
        Ok(t) => DeficiencyProfile::of(&t).is_complete() && is_k_naples(&t, k),
        Err(_) => false,
    }
}

/// Membership decided one maximal interval at a time. Intervals no longer
/// than `k` always pass; longer ones pass when the cars preferring at least
/// `p` reach spot `p - 1`. Witnesses are returned for accepted preferences.
pub fn decide_knaples_structural(alpha: &Preference, k: usize) -> Result<(bool, Vec<CompleteWitness>)> {
    alpha.require_full()?;
    let d = DeficiencyProfile::of(alpha);
    let ok = d.intervals().iter().all(|&iv| interval_passes(alpha, k, iv));
    if !ok {
        return Ok((false, Vec::new()));
    }
    let witnesses = d
        .intervals()
        .iter()
        .map(|&iv| extract_witness(alpha, k, iv).expect("accepted interval has a witness"))
        .collect();
    Ok((true, witnesses))
}

/// The same interval test for fewer cars than spots: all cars park.
pub fn naples_membership_partial(alpha: &Preference, k: usize) -> bool {
    DeficiencyProfile::of(alpha).intervals().iter().all(|&iv| interval_passes(alpha, k, iv))
}

/// Every rearrangement is `k`-Naples: no maximal interval longer than `k`.
pub fn is_permutation_invariant(alpha: &Preference, k: usize) -> Result<bool> {
    alpha.require_full()?;
    Ok(DeficiencyProfile::of(alpha).intervals().iter().all(|iv| iv.len() <= k))
}

/// Scan right to left for `v, v, v-1, …, p` with `v ≥ q`, taking the latest
/// usable car for each value. Body cars (all but the head) must pass
/// `body_ok`. Returns 1-based positions, head first.
fn chain_from_right(a: &[usize], iv: Interval, body_ok: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    let mut limit = a.len();
    let mut body = Vec::new();
    let mut c = iv.p;
    loop {
        let idx = (0..limit).rev().find(|&i| a[i] == c && body_ok(i))?;
        body.push(idx + 1);
        limit = idx;
        if c >= iv.q {
            if let Some(h) = (0..limit).rev().find(|&i| a[i] == c) {
                body.push(h + 1);
                body.reverse();
                return Some(body);
            }
        }
        c += 1;
    }
}

/// Chains certifying 1-Naples membership, one per maximal interval.
pub fn one_naples_chains(alpha: &Preference) -> Result<Option<Vec<Vec<usize>>>> {
    alpha.require_full()?;
    let d = DeficiencyProfile::of(alpha);
    if d.max_u() > 1 {
        return Ok(None);
    }
    Ok(d.intervals().iter().map(|&iv| chain_from_right(alpha.prefs(), iv, |_| true)).collect())
}

/// 1-Naples membership through the chain condition.
pub fn one_naples_membership(alpha: &Preference) -> Result<bool> {
    Ok(one_naples_chains(alpha)?.is_some())
}

/// Whether a rule vector with entries in {0, 1} is a strategy: each
/// interval needs a chain whose body cars all have `r = 1`.
pub fn one_naples_rule_check(alpha: &Preference, rho: &RuleVector) -> Result<bool> {
    alpha.require_full()?;
    if rho.len() != alpha.len() {
        return Err(Error::LengthMismatch { cars: alpha.len(), rules: rho.len() });
    }
    if let Some((i, &v)) = rho.limits().iter().enumerate().find(|(_, &v)| v > 1) {
        return Err(Error::RuleNotBinary { car: i + 1, value: v });
    }
    let d = DeficiencyProfile::of(alpha);
    if d.max_u() > 1 {
        return Ok(false);
    }
    let r = rho.limits();
    Ok(d.intervals().iter().all(|&iv| chain_from_right(alpha.prefs(), iv, |i| r[i] == 1).is_some()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Preference {
        Preference::full(v.to_vec()).unwrap()
    }

    #[test]
    fn sorted_test() {
        assert!(is_parking_function_sorted(&p(&[3, 1, 3, 4, 1])).unwrap());
        assert!(!is_parking_function_sorted(&p(&[2, 2, 2])).unwrap());
        assert!(is_parking_function_sorted(&p(&[1, 2, 3, 4])).unwrap());
    }

    #[test]
    fn min_k() {
        assert_eq!(min_naples_k(&p(&[5, 3, 3, 5, 4])).unwrap(), 2);
        assert_eq!(min_naples_k(&p(&[1, 1, 2])).unwrap(), 0);
        assert_eq!(min_naples_k(&p(&[4, 4, 4, 4])).unwrap(), 3);
    }

    #[test]
    fn completeness() {
        assert!(is_complete(&p(&[5, 3, 3, 5, 4])).unwrap());
        assert!(is_complete(&p(&[7, 8, 7, 5, 8, 4, 5, 2])).unwrap());
        assert!(!is_complete(&p(&[1, 2, 3])).unwrap());
        assert_eq!(is_complete(&p(&[1])), Err(Error::TooShort));
    }

    #[test]
    fn rtl_examples() {
        let a = p(&[7, 8, 7, 5, 8, 4, 5, 2]);
        let (ok, w) = complete_membership_rtl(&a, 3).unwrap();
        assert!(!ok);
        assert_eq!(w.iter().find(|w| w.position == 5).unwrap().lambda, None);
        let (ok, w) = complete_membership_rtl(&a, 4).unwrap();
        assert!(ok);
        assert_eq!(w.iter().find(|w| w.position == 5).unwrap().lambda, Some(3));

        let b = p(&[7, 8, 5, 5, 8, 7, 4, 2]);
        let (ok, w) = complete_membership_rtl(&b, 3).unwrap();
        // λ_5 = 1 works, but the maximum 7 at position 6 has no window
        assert!(!ok);
        assert!(!is_k_naples(&b, 3));
        assert_eq!(w.iter().find(|w| w.position == 5).unwrap().lambda, Some(1));
        assert_eq!(w.iter().find(|w| w.position == 6).unwrap().lambda, None);
        // λ = 2 fails for the same maximum: three earlier cars in [5, 7]
        assert_eq!(count_before(b.prefs(), 4, 8 - 1 - 2, 7), 3);
        assert!(complete_membership_rtl(&p(&[1, 2, 3]), 1).is_err());
    }

    #[test]
    fn structural_witness() {
        let a = p(&[8, 4, 7, 1, 6, 8, 7, 5, 10, 1]);
        let (ok, w) = decide_knaples_structural(&a, 2).unwrap();
        assert!(ok);
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].positions, vec![2, 3, 5, 7, 8]);
        assert_eq!(w[0].translated.prefs(), &[2, 5, 4, 5, 3]);
        let iv = Interval { p: 4, q: 7 };
        assert!(verify_witness(&a, 2, iv, &[1, 2, 3, 6, 7, 8]));
        assert!(verify_witness(&a, 2, iv, &[1, 2, 5, 6, 7, 8]));
        assert!(!verify_witness(&a, 2, iv, &[1, 2, 3]));
        assert_eq!(decide_knaples_structural(&p(&[1, 1, 2]), 0).unwrap(), (true, vec![]));
    }

    #[test]
    fn permutation_invariance() {
        assert!(!is_permutation_invariant(&p(&[3, 3, 2]), 1).unwrap());
        assert!(is_permutation_invariant(&p(&[1, 1, 3]), 0).unwrap());
    }

    #[test]
    fn one_naples() {
        assert!(one_naples_membership(&p(&[5, 5, 4, 3, 2])).unwrap());
        assert!(!one_naples_membership(&p(&[2, 3, 3])).unwrap());
        let a = p(&[5, 10, 11, 1, 5, 11, 10, 4, 3, 9, 10, 8, 3]);
        assert!(one_naples_membership(&a).unwrap());
        let rho = RuleVector::new(vec![0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1]);
        assert!(one_naples_rule_check(&a, &rho).unwrap());
        assert!(!one_naples_rule_check(&a, &RuleVector::zeros(13)).unwrap());
        assert!(one_naples_rule_check(&a, &RuleVector::constant(2, 13)).is_err());
    }
}
