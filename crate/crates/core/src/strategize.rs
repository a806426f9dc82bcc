//! Optimal rule vectors: fewest backward steps, fewest backing-up cars,
//! fewest ones, and the principal filters of the normalized rule poset.

use crate::characterize::one_naples_membership;
use crate::deficiency::{DeficiencyProfile, Interval};
use crate::error::{Error, Result};
use crate::preference::{Preference, RuleVector};
use crate::simulate::park;

/// Refuse to list more minimizers than this.
pub const PLAN_LIMIT: u128 = 1_000_000;

/// For each spot `j ∈ U`, the cars allowed to step from `j` to `j - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepPlan {
    /// `(j, T_j)` with 1-based car positions, `j` increasing.
    pub sets: Vec<(usize, Vec<usize>)>,
    pub rho: RuleVector,
    pub total: usize,
}

/// Cars allowed to back up without limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarPlan {
    /// 1-based, increasing.
    pub tilde_t: Vec<usize>,
    pub rho: RuleVector,
}

/// The last `count` entries of `pool` (which is increasing).
fn last(pool: &[usize], count: usize) -> Vec<usize> {
    pool[pool.len() - count..].to_vec()
}

/// Walk an interval down from `q`, each `T_j` being the last `u(j)` cars
/// among those preferring `j` and those in `T_{j+1}`.
fn propagate(alpha: &Preference, d: &DeficiencyProfile, iv: Interval, top: Vec<usize>) -> Vec<(usize, Vec<usize>)> {
    let mut sets = vec![(iv.q, top)];
    for j in (iv.p..iv.q).rev() {
        let mut pool: Vec<usize> = (1..=alpha.len()).filter(|&i| alpha.get(i) == j).collect();
        pool.extend_from_slice(&sets.last().unwrap().1);
        pool.sort_unstable();
        sets.push((j, last(&pool, d.u(j) as usize)));
    }
    sets.reverse();
    sets
}

fn plan_from_sets(n: usize, mut sets: Vec<(usize, Vec<usize>)>) -> StepPlan {
    sets.sort_by_key(|(j, _)| *j);
    let mut r = vec![0; n];
    for (_, t) in &sets {
        for &i in t {
            r[i - 1] += 1;
        }
    }
    let rho = RuleVector::new(r);
    let total = rho.rank();
    StepPlan { sets, rho, total }
}

/// Cars preferring exactly `q`, 1-based, increasing.
fn preferring(alpha: &Preference, q: usize) -> Vec<usize> {
    (1..=alpha.len()).filter(|&i| alpha.get(i) == q).collect()
}

/// The canonical plan: `T_q` is the last `u(q)` cars preferring `q`.
pub fn min_step_strategy(alpha: &Preference) -> Result<StepPlan> {
    alpha.require_full()?;
    let d = DeficiencyProfile::of(alpha);
    let mut sets = Vec::new();
    for &iv in d.intervals() {
        let top = last(&preferring(alpha, iv.q), d.u(iv.q) as usize);
        sets.extend(propagate(alpha, &d, iv, top));
    }
    Ok(plan_from_sets(alpha.len(), sets))
}

/// Number of step-minimal strategies: `∏ C(|α|_q - 1, u(q))` over the upper
/// ends `q` of the maximal intervals.
pub fn count_min_step_strategies(alpha: &Preference) -> Result<u128> {
    alpha.require_full()?;
    let d = DeficiencyProfile::of(alpha);
    let counts = alpha.multiplicities();
    let mut total = 1u128;
    for iv in d.intervals() {
        let c = crate::enumerate::binomial(counts[iv.q] - 1, d.u(iv.q) as usize)?;
        total = total.checked_mul(c).ok_or(Error::Overflow("minimizer count"))?;
    }
    Ok(total)
}

fn subsets(pool: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn go(pool: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < size - cur.len() {
                break;
            }
            cur.push(pool[i]);
            go(pool, size, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(pool, size, 0, &mut Vec::new(), &mut out);
    out
}

/// Every step-minimal plan: each `T_q` ranges over the `u(q)`-subsets of the
/// cars preferring `q` other than the first one.
pub fn enumerate_min_step_strategies(alpha: &Preference) -> Result<(Vec<StepPlan>, u128)> {
    let count = count_min_step_strategies(alpha)?;
    if count > PLAN_LIMIT {
        return Err(Error::TooManyPlans { count, limit: PLAN_LIMIT });
    }
    let d = DeficiencyProfile::of(alpha);
    let per_interval: Vec<Vec<Vec<(usize, Vec<usize>)>>> = d
        .intervals()
        .iter()
        .map(|&iv| {
            let cars = preferring(alpha, iv.q);
            subsets(&cars[1..], d.u(iv.q) as usize).into_iter().map(|top| propagate(alpha, &d, iv, top)).collect()
        })
        .collect();
    let mut combos: Vec<Vec<(usize, Vec<usize>)>> = vec![Vec::new()];
    for choices in &per_interval {
        let mut next = Vec::with_capacity(combos.len() * choices.len());
        for base in &combos {
            for c in choices {
                let mut v = base.clone();
                v.extend(c.iter().cloned());
                next.push(v);
            }
        }
        combos = next;
    }
    let plans: Vec<StepPlan> = combos.into_iter().map(|s| plan_from_sets(alpha.len(), s)).collect();
    debug_assert_eq!(plans.len() as u128, count);
    Ok((plans, count))
}

/// Fewest total steps over all strategies: `Σ_j |u(j)|`.
pub fn min_total_steps(alpha: &Preference) -> Result<usize> {
    alpha.require_full()?;
    Ok(DeficiencyProfile::of(alpha).absolute_sum() as usize)
}

/// `(backward, forward)` parts of the minimum: `Σ_{j∈U} u(j)` and
/// `-Σ_{j∉U} u(j)`.
pub fn min_step_split(alpha: &Preference) -> Result<(usize, usize)> {
    alpha.require_full()?;
    let d = DeficiencyProfile::of(alpha);
    let back = d.positive_sum() as usize;
    Ok((back, d.absolute_sum() as usize - back))
}

/// Union over `j ∈ U` of the last `u(j)` cars preferring at least `j`, each
/// allowed to back up as far as it likes.
pub fn min_cars_strategy(alpha: &Preference) -> Result<CarPlan> {
    alpha.require_full()?;
    let d = DeficiencyProfile::of(alpha);
    let mut chosen = vec![false; alpha.len() + 1];
    for j in d.u_set() {
        let pool: Vec<usize> = (1..=alpha.len()).filter(|&i| alpha.get(i) >= j).collect();
        for i in last(&pool, d.u(j) as usize) {
            chosen[i] = true;
        }
    }
    let tilde_t: Vec<usize> = (1..=alpha.len()).filter(|&i| chosen[i]).collect();
    let s = alpha.spots();
    let rho = RuleVector::new((1..=alpha.len()).map(|i| if chosen[i] { s } else { 0 }).collect());
    Ok(CarPlan { tilde_t, rho })
}

/// `0 ≤ r_i ≤ i - 1` for every car.
pub fn is_normalized(rho: &RuleVector) -> bool {
    rho.limits().iter().enumerate().all(|(i, &r)| r <= i)
}

/// `a_i = n + 1 - i + r_i`; its strategies are exactly the vectors above `ρ`.
pub fn principal_filter_preference(rho: &RuleVector) -> Result<Preference> {
    let n = rho.len();
    if let Some((i, &r)) = rho.limits().iter().enumerate().find(|(i, &r)| r > *i) {
        return Err(Error::NotNormalized { car: i + 1, value: r, max: i });
    }
    Preference::full((1..=n).map(|i| n + 1 - i + rho.get(i)).collect())
}

/// Shrink each limit to the distance the car actually backed up.
pub fn normalize_strategy(alpha: &Preference, rho: &RuleVector) -> Result<RuleVector> {
    let o = park(alpha, rho)?;
    if !o.all_parked() {
        return Err(Error::NotStrategy);
    }
    Ok(RuleVector::new(o.backward_steps))
}

/// Earliest-first match of `v, v, v-1, …, p` in `a`, 1-based.
fn chain_from_left(a: &[usize], p: usize, v: usize) -> Option<Vec<usize>> {
    let wanted = std::iter::once(v).chain((p..=v).rev());
    let mut out = Vec::with_capacity(v - p + 2);
    let mut from = 0;
    for c in wanted {
        let idx = (from..a.len()).find(|&i| a[i] == c)?;
        out.push(idx + 1);
        from = idx + 1;
    }
    Some(out)
}

/// A `{0, 1}` strategy with fewest ones: per maximal interval the shortest
/// chain `v, v, v-1, …, p`, earliest positions first, with `r = 1` on all
/// but its head.
pub fn min_ones_strategy(alpha: &Preference) -> Result<RuleVector> {
    if !one_naples_membership(alpha)? {
        return Err(Error::NotOneNaples);
    }
    let d = DeficiencyProfile::of(alpha);
    let mut r = vec![0; alpha.len()];
    for iv in d.intervals() {
        let chain =
            (iv.q..=alpha.spots()).find_map(|v| chain_from_left(alpha.prefs(), iv.p, v)).ok_or(Error::NotOneNaples)?;
        for &i in &chain[1..] {
            r[i - 1] = 1;
        }
    }
    Ok(RuleVector::new(r))
}
