//! Cross-validation suites: every formula and characterization against
//! brute force on small lots.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::census::Census;
use crate::characterize::{
    complete_membership_rtl, decide_knaples_structural, is_parking_function_sorted, is_permutation_invariant,
    last_exact_condition, last_upper_failures, one_naples_membership, one_naples_rule_check, verify_witness,
};
use crate::deficiency::DeficiencyProfile;
use crate::enumerate::{self, abel_sides, Counter};
use crate::error::{Error, Result};
use crate::preference::{Preference, RuleVector};
use crate::simulate::{is_k_naples, is_strategy, park_circular, parking_cost_with, parks_all_with};
use crate::strategize::{
    count_min_step_strategies, min_cars_strategy, min_ones_strategy, min_step_strategy, principal_filter_preference,
};

/// One pass/fail line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }

    fn equal<T: PartialEq + fmt::Display>(name: impl Into<String>, got: T, want: T) -> Self {
        let passed = got == want;
        Check::new(name, passed, format!("got {got}, expected {want}"))
    }

    fn mismatches(name: impl Into<String>, bad: u64, total: u64) -> Self {
        Check::new(name, bad == 0, format!("{bad} mismatches in {total} cases"))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Counts,
    Characterize,
    Strategies,
    Posets,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "counts" => Suite::Counts,
            "characterize" => Suite::Characterize,
            "strategies" => Suite::Strategies,
            "posets" => Suite::Posets,
            _ => return Err(Error::Parse { what: "oracle suite", input: s.to_string() }),
        })
    }
}

/// Census settings shared by every check in a suite.
#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    pub budget: u128,
    pub workers: Option<usize>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { budget: crate::census::budget_for_max_n(crate::census::DEFAULT_MAX_N), workers: None }
    }
}

impl OracleConfig {
    fn census(&self, n: usize) -> Census {
        Census::new(n).budget(self.budget).workers(self.workers)
    }
}

pub fn run_suite(suite: Suite, nmax: usize, cfg: &OracleConfig) -> Result<Vec<Check>> {
    match suite {
        Suite::Counts => counts_suite(nmax, cfg),
        Suite::Characterize => characterize_suite(nmax, cfg),
        Suite::Strategies => strategies_suite(nmax.min(5), cfg),
        Suite::Posets => posets_suite(nmax, cfg),
    }
}

/// Every `[1, n]^m` preference visited by a closure over raw slices, split
/// across rayon by the first entry. Used where building a `Preference` per
/// point would dominate.
fn sweep<T: Send>(
    n: usize,
    m: usize,
    cfg: &OracleConfig,
    identity: impl Fn() -> T + Sync + Send,
    fold: impl Fn(T, &[usize]) -> T + Sync + Send,
    reduce: impl Fn(T, T) -> T + Sync + Send,
) -> Result<T> {
    cfg.census(n).cars(m).fold(&identity, |acc, a| fold(acc, a.prefs()), &reduce)
}

/// Every rule vector in `[0, top]^n`, in lexicographic order.
pub fn for_each_rule(n: usize, top: usize, mut f: impl FnMut(&[usize])) {
    let mut r = vec![0usize; n];
    loop {
        f(&r);
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if r[i] < top {
                r[i] += 1;
                break;
            }
            r[i] = 0;
        }
    }
}

/// Rule vectors in `R_n`: `0 ≤ r_i ≤ i - 1`.
pub fn normalized_rules(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut r = vec![0usize; n];
    loop {
        out.push(r.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if r[i] < i {
                r[i] += 1;
                break;
            }
            r[i] = 0;
        }
    }
}

fn counts_suite(nmax: usize, cfg: &OracleConfig) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut counter = Counter::new();
    for n in 1..=nmax {
        let census = cfg.census(n).count(|a| is_k_naples(a, 0))?;
        out.push(Check::equal(format!("pf census n={n}"), census, enumerate::count_pf(n)?));
        out.push(Check::equal(format!("pf recursion n={n}"), counter.pf_recursive(n)?, enumerate::count_pf(n)?));
        for m in 1..n {
            let partial = cfg.census(n).cars(m).count(|a| is_k_naples(a, 0))?;
            out.push(Check::equal(format!("partial pf n={n} m={m}"), partial, enumerate::count_pf_closed(n, m)?));
            let circ = cfg.census(n).cars(m).count(|a| !park_circular(a).unwrap().occupied.contains(&n))?;
            out.push(Check::equal(format!("circular n={n} m={m}"), circ, enumerate::count_circular(n, m)?));
        }
        let ones = census_by_ones(n, cfg)?;
        let ones_ok =
            (1..=n).all(|m| ones.get(&m).copied().unwrap_or(0) == enumerate::count_pf_with_ones(n, m).unwrap());
        out.push(Check::new(format!("preference-1 split n={n}"), ones_ok, format!("{ones:?}")));
        for k in 1..=n {
            let c = knaples_census(n, k, cfg)?;
            out.push(Check::equal(format!("knap n={n} k={k}"), c, counter.knap(n, k)?));
        }
        if n >= 2 {
            let stats = theta_census(n, cfg)?;
            for k in 1..n {
                let want = counter.theta_eq(n, k)?;
                out.push(Check::equal(
                    format!("theta_eq n={n} k={k}"),
                    stats.theta.get(&k).copied().unwrap_or(0),
                    want,
                ));
                let sym = stats.theta.get(&(n - k)).copied().unwrap_or(0);
                out.push(Check::equal(format!("theta census symmetry n={n} k={k}"), sym, want));
                let inv = cfg.census(n).count(|a| is_permutation_invariant(a, k).unwrap())?;
                out.push(Check::equal(format!("T n={n} k={k}"), inv, counter.big_t(n, k)?));
                let complete = cfg.census(n).count(|a| DeficiencyProfile::of(a).is_complete() && is_k_naples(a, k))?;
                out.push(Check::equal(format!("upsilon0 n={n} k={k}"), complete, counter.upsilon0(n, k)?));
            }
            let mut bad = 0;
            for (&(k, m, h), &v) in &stats.vartheta {
                if counter.vartheta(n, k, m, h)? != v {
                    bad += 1;
                }
            }
            let mut missed = 0;
            for k in 0..n {
                for m in 1..=n {
                    for h in 1..=n {
                        let want = counter.vartheta(n, k, m, h)?;
                        if want != stats.vartheta.get(&(k, m, h)).copied().unwrap_or(0) {
                            missed += 1;
                        }
                    }
                }
            }
            out.push(Check::new(
                format!("vartheta n={n}"),
                bad == 0 && missed == 0,
                format!("{} nonzero cells, {bad} wrong, {missed} disagreeing", stats.vartheta.len()),
            ));
        }
    }
    for n in 2..=9 {
        let leq = counter.theta_leq(n, n - 1)?;
        let guess = ((n - 1) as u128) * ((n + 1) as u128).pow(n as u32 - 2);
        out.push(Check::equal(format!("conjecture theta_leq(n, n-1) = (n-1)(n+1)^(n-2), n={n}"), leq, guess));
    }
    let mut abel_bad = 0;
    for m in 0..=12u32 {
        for z in -3..=3 {
            for w in -3..=3 {
                let (l, r) = abel_sides(z, w, m);
                abel_bad += (l != r) as u64;
            }
        }
    }
    out.push(Check::mismatches("abel identity grid", abel_bad, 13 * 49));
    Ok(out)
}

fn knaples_census(n: usize, k: usize, cfg: &OracleConfig) -> Result<u128> {
    sweep(
        n,
        n,
        cfg,
        || (0u128, vec![false; n + 1]),
        |(c, mut buf), a| {
            let ok = parks_all_with(a, n, |_| k, &mut buf);
            (c + ok as u128, buf)
        },
        |x, y| (x.0 + y.0, x.1),
    )
    .map(|(c, _)| c)
}

fn census_by_ones(n: usize, cfg: &OracleConfig) -> Result<BTreeMap<usize, u128>> {
    sweep(
        n,
        n,
        cfg,
        BTreeMap::new,
        |mut acc, a| {
            let mut buf = vec![false; n + 1];
            if parks_all_with(a, n, |_| 0, &mut buf) {
                *acc.entry(a.iter().filter(|&&x| x == 1).count()).or_insert(0) += 1;
            }
            acc
        },
        merge_maps,
    )
}

fn merge_maps<K: Ord>(mut x: BTreeMap<K, u128>, y: BTreeMap<K, u128>) -> BTreeMap<K, u128> {
    for (k, v) in y {
        *x.entry(k).or_insert(0) += v;
    }
    x
}

#[derive(Default)]
struct ThetaStats {
    /// `k ↦ #{α : U = [2, k+1]}`
    theta: BTreeMap<usize, u128>,
    /// `(k, m, h) ↦` count, including `k = 0` for parking functions.
    vartheta: BTreeMap<(usize, usize, usize), u128>,
}

fn theta_census(n: usize, cfg: &OracleConfig) -> Result<ThetaStats> {
    let found = cfg.census(n).fold(
        BTreeMap::<(usize, usize, usize), u128>::new,
        |mut acc, a| {
            let d = DeficiencyProfile::of(a);
            let k = match d.intervals() {
                [] => Some(0),
                [iv] if iv.p == 2 => Some(iv.q - 1),
                _ => None,
            };
            if let Some(k) = k {
                let h = *a.prefs().iter().min().unwrap();
                *acc.entry((k, a.multiplicity(h), h)).or_insert(0) += 1;
            }
            acc
        },
        merge_maps,
    )?;
    let mut stats = ThetaStats::default();
    for (&(k, _, _), &v) in &found {
        if k >= 1 {
            *stats.theta.entry(k).or_insert(0) += v;
        }
    }
    stats.vartheta = found;
    Ok(stats)
}

/// Distinct rearrangements of `a`.
pub fn distinct_permutations(a: &[usize]) -> Vec<Vec<usize>> {
    let mut v = a.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    // next lexicographic permutation
    loop {
        let Some(i) = (0..v.len().saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
            return out;
        };
        let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
}

#[derive(Debug, Default, Clone, Copy)]
struct Tally {
    cases: u64,
    structural: u64,
    witness: u64,
    rtl: u64,
    rtl_equality: u64,
    exact_cond: u64,
    upper_cond: u64,
    upper_cond_unpreferred: u64,
    one_naples: u64,
    sorted: u64,
    perm: u64,
}

impl Tally {
    fn add(self, o: Tally) -> Tally {
        Tally {
            cases: self.cases + o.cases,
            structural: self.structural + o.structural,
            witness: self.witness + o.witness,
            rtl: self.rtl + o.rtl,
            rtl_equality: self.rtl_equality + o.rtl_equality,
            exact_cond: self.exact_cond + o.exact_cond,
            upper_cond: self.upper_cond + o.upper_cond,
            upper_cond_unpreferred: self.upper_cond_unpreferred + o.upper_cond_unpreferred,
            one_naples: self.one_naples + o.one_naples,
            sorted: self.sorted + o.sorted,
            perm: self.perm + o.perm,
        }
    }
}

/// All characterizations for one preference against simulation.
fn characterize_one(a: &Preference, with_perms: bool) -> Tally {
    let n = a.len();
    let mut t = Tally::default();
    let d = DeficiencyProfile::of(a);
    let complete = n >= 2 && d.is_complete();
    for k in 0..=n {
        t.cases += 1;
        let truth = is_k_naples(a, k);
        let (verdict, witnesses) = decide_knaples_structural(a, k).unwrap();
        t.structural += (verdict != truth) as u64;
        if verdict {
            let ok = witnesses.len() == d.intervals().len()
                && witnesses.iter().all(|w| verify_witness(a, k, w.interval, &w.positions));
            t.witness += (!ok) as u64;
        }
        if complete {
            let (rtl, _) = complete_membership_rtl(a, k).unwrap();
            t.rtl += (rtl != truth) as u64;
            if truth {
                t.rtl_equality += (!rtl_equalities_hold(a, k, &d)) as u64;
            }
            if k >= 1 {
                t.exact_cond += (last_exact_condition(a, k).unwrap() != truth) as u64;
                let fails = last_upper_failures(a, k).unwrap();
                t.upper_cond += (fails.is_empty() != truth) as u64;
                if last_exact_condition(a, k).unwrap() {
                    t.upper_cond_unpreferred += fails.iter().any(|&h| a.multiplicity(h) == 0) as u64;
                }
            }
        }
        if with_perms {
            let brute =
                distinct_permutations(a.prefs()).into_iter().all(|p| is_k_naples(&Preference::full(p).unwrap(), k));
            t.perm += (brute != is_permutation_invariant(a, k).unwrap()) as u64;
        }
    }
    t.one_naples += (one_naples_membership(a).unwrap() != is_k_naples(a, 1)) as u64;
    t.sorted += (is_parking_function_sorted(a).unwrap() != is_k_naples(a, 0)) as u64;
    t
}

/// On a member, `λ_j = a_j - ψ_k(c_j) - u(a_j)` turns the window count into
/// an equality at every right-to-left maximum.
pub fn rtl_equalities_hold(a: &Preference, k: usize, d: &DeficiencyProfile) -> bool {
    let o = crate::simulate::park_k(a, k);
    crate::characterize::rtl_maxima(a).into_iter().all(|j| {
        let h = a.get(j);
        let spot = o.spot(j).unwrap();
        let lambda = h as i64 - spot as i64 - d.u(h);
        if lambda < 0 || lambda > k as i64 - d.u(h) {
            return false;
        }
        let lo = (h as i64 - d.u(h) - lambda).max(1) as usize;
        let c = a.prefs()[..j - 1].iter().filter(|&&x| lo <= x && x < h).count();
        c as i64 == lambda
    })
}

fn characterize_suite(nmax: usize, cfg: &OracleConfig) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=nmax {
        let with_perms = n <= 5;
        let t = cfg.census(n).fold(Tally::default, |acc, a| acc.add(characterize_one(a, with_perms)), Tally::add)?;
        out.push(Check::mismatches(format!("structural = simulation n={n}"), t.structural, t.cases));
        out.push(Check::mismatches(format!("witnesses verify n={n}"), t.witness, t.cases));
        out.push(Check::mismatches(format!("rtl = simulation (complete) n={n}"), t.rtl, t.cases));
        out.push(Check::mismatches(format!("rtl equality on members n={n}"), t.rtl_equality, t.cases));
        out.push(Check::mismatches(format!("last-exact condition = membership n={n}"), t.exact_cond, t.cases));
        out.push(Check::mismatches(format!("last-upper condition = membership n={n}"), t.upper_cond, t.cases));
        out.push(Check::mismatches(
            format!("last-upper never fails at unpreferred spots n={n}"),
            t.upper_cond_unpreferred,
            t.cases,
        ));
        out.push(Check::mismatches(
            format!("1-Naples chains = simulation n={n}"),
            t.one_naples,
            n.pow(n as u32) as u64,
        ));
        out.push(Check::mismatches(format!("sorted test = standard rule n={n}"), t.sorted, n.pow(n as u32) as u64));
        if with_perms {
            out.push(Check::mismatches(format!("permutation invariance = brute force n={n}"), t.perm, t.cases));
        }
    }
    Ok(out)
}

/// Exhaustive optima over rule vectors for one preference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyStats {
    /// Least `|ρ|` over strategies in `[0, n]^n`.
    pub min_rank: usize,
    /// Strategies attaining it.
    pub minimizers: u128,
    /// Least total steps over strategies in `[0, n]^n`.
    pub min_steps: usize,
    /// Least number of `n` entries over strategies in `{0, n}^n`.
    pub min_cars: usize,
    /// Least `|ρ|` over strategies in `{0, 1}^n`, if any.
    pub min_ones: Option<usize>,
    /// `{0, 1}` vectors where the chain test disagrees with simulation.
    pub rule_check_mismatches: usize,
}

/// Brute force over `[0, n]^n`, `{0, n}^n` and `{0, 1}^n`.
pub fn exhaustive_strategy_stats(a: &Preference, with_full_grid: bool) -> StrategyStats {
    let n = a.len();
    let s = a.spots();
    let mut buf = vec![false; s + 1];
    let mut min_rank = usize::MAX;
    let mut minimizers = 0u128;
    let mut min_steps = usize::MAX;
    if with_full_grid {
        for_each_rule(n, n, |r| {
            if let Some(cost) = parking_cost_with(a.prefs(), s, |i| r[i], &mut buf) {
                let rank: usize = r.iter().sum();
                if rank < min_rank {
                    min_rank = rank;
                    minimizers = 0;
                }
                if rank == min_rank {
                    minimizers += 1;
                }
                min_steps = min_steps.min(cost);
            }
        });
    }
    let mut min_cars = usize::MAX;
    for_each_rule(n, 1, |bits| {
        if parks_all_with(a.prefs(), s, |i| bits[i] * n, &mut buf) {
            min_cars = min_cars.min(bits.iter().sum());
        }
    });
    let mut min_ones: Option<usize> = None;
    let mut rule_check_mismatches = 0;
    for_each_rule(n, 1, |bits| {
        let sim = parks_all_with(a.prefs(), s, |i| bits[i], &mut buf);
        if sim {
            let rank = bits.iter().sum();
            min_ones = Some(min_ones.map_or(rank, |m: usize| m.min(rank)));
        }
        let chain = one_naples_rule_check(a, &RuleVector::new(bits.to_vec())).unwrap();
        rule_check_mismatches += (chain != sim) as usize;
    });
    StrategyStats { min_rank, minimizers, min_steps, min_cars, min_ones, rule_check_mismatches }
}

#[derive(Debug, Default, Clone, Copy)]
struct StrategyTally {
    cases: u64,
    rank: u64,
    count: u64,
    steps: u64,
    cars: u64,
    ones: u64,
    rule_check: u64,
    constructed: u64,
    duality: u64,
}

impl StrategyTally {
    fn add(self, o: StrategyTally) -> StrategyTally {
        StrategyTally {
            cases: self.cases + o.cases,
            rank: self.rank + o.rank,
            count: self.count + o.count,
            steps: self.steps + o.steps,
            cars: self.cars + o.cars,
            ones: self.ones + o.ones,
            rule_check: self.rule_check + o.rule_check,
            constructed: self.constructed + o.constructed,
            duality: self.duality + o.duality,
        }
    }
}

/// Reflect `b_i = n + 1 - a_i` with `r'_i = 0` for cars that backed up and
/// `ψ(c_i) - a_i` for the rest; backward and forward totals swap.
pub fn reflection_swaps_steps(a: &Preference, rho: &RuleVector) -> bool {
    let n = a.spots();
    let o = crate::simulate::park(a, rho).unwrap();
    if !o.all_parked() {
        return false;
    }
    let b = Preference::full(a.prefs().iter().map(|x| n + 1 - x).collect()).unwrap();
    let r2: Vec<usize> =
        (0..a.len()).map(|i| if rho.limits()[i] != 0 { 0 } else { o.assignment[i].unwrap() - a.prefs()[i] }).collect();
    let o2 = crate::simulate::park(&b, &RuleVector::new(r2)).unwrap();
    o2.all_parked() && o2.total_backward() == o.total_forward() && o2.total_forward() == o.total_backward()
}

fn strategy_one(a: &Preference) -> StrategyTally {
    let n = a.len();
    let d = DeficiencyProfile::of(a);
    let stats = exhaustive_strategy_stats(a, true);
    let mut t = StrategyTally { cases: 1, ..Default::default() };
    let plan = min_step_strategy(a).unwrap();
    t.rank += (stats.min_rank as i64 != d.positive_sum()) as u64;
    t.count += (stats.minimizers != count_min_step_strategies(a).unwrap()) as u64;
    t.steps += (stats.min_steps as i64 != d.absolute_sum()) as u64;
    let cars = min_cars_strategy(a).unwrap();
    t.cars += (stats.min_cars != cars.tilde_t.len()) as u64;
    let ones_ok = match min_ones_strategy(a) {
        Ok(r) => stats.min_ones == Some(r.rank()) && is_strategy(a, &r).unwrap(),
        Err(_) => stats.min_ones.is_none(),
    };
    t.ones += (!ones_ok) as u64;
    t.rule_check += stats.rule_check_mismatches as u64;
    let o = crate::simulate::park(a, &plan.rho).unwrap();
    let built_ok = o.all_parked()
        && plan.total as i64 == d.positive_sum()
        && (o.total_backward() + o.total_forward()) as i64 == d.absolute_sum()
        && is_strategy(a, &cars.rho).unwrap();
    t.constructed += (!built_ok) as u64;
    t.duality += (!reflection_swaps_steps(a, &plan.rho)) as u64;
    let _ = n;
    t
}

fn strategies_suite(nmax: usize, cfg: &OracleConfig) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for n in 1..=nmax {
        let t = cfg.census(n).fold(StrategyTally::default, |acc, a| acc.add(strategy_one(a)), StrategyTally::add)?;
        out.push(Check::mismatches(format!("min rank = sum of positive u, n={n}"), t.rank, t.cases));
        out.push(Check::mismatches(format!("minimizer count = binomial product, n={n}"), t.count, t.cases));
        out.push(Check::mismatches(format!("min total steps = sum |u|, n={n}"), t.steps, t.cases));
        out.push(Check::mismatches(format!("min backing-up cars = |T~|, n={n}"), t.cars, t.cases));
        out.push(Check::mismatches(format!("min ones = exhaustive {{0,1}} minimum, n={n}"), t.ones, t.cases));
        out.push(Check::mismatches(format!("{{0,1}} chain test = simulation, n={n}"), t.rule_check, t.cases << n));
        out.push(Check::mismatches(format!("constructed plans park optimally, n={n}"), t.constructed, t.cases));
        out.push(Check::mismatches(format!("reflection swaps step totals, n={n}"), t.duality, t.cases));
    }
    Ok(out)
}

/// The set of rule vectors in `R_n` under which `a` parks.
pub fn induced_upset(a: &[usize], rules: &[Vec<usize>]) -> Vec<bool> {
    let n = a.len();
    let mut buf = vec![false; n + 1];
    rules.iter().map(|r| parks_all_with(a, n, |i| r[i], &mut buf)).collect()
}

/// Up-set of `R_n` generated by `gens`.
pub fn generated_upset(gens: &[Vec<usize>], rules: &[Vec<usize>]) -> Vec<bool> {
    rules.iter().map(|r| gens.iter().any(|g| g.iter().zip(r).all(|(x, y)| x <= y))).collect()
}

/// Number of preferences in `[1, n]^n` whose strategies in `R_n` are exactly
/// the up-set generated by `gens`.
pub fn preferences_inducing(n: usize, gens: &[Vec<usize>], cfg: &OracleConfig) -> Result<u128> {
    let rules = normalized_rules(n);
    let target = generated_upset(gens, &rules);
    cfg.census(n).count(|a| induced_upset(a.prefs(), &rules) == target)
}

/// All elements of `R_n` one below the top `(0, 1, …, n-1)`.
pub fn corank_one(n: usize) -> Vec<Vec<usize>> {
    (1..n)
        .map(|i| {
            let mut r: Vec<usize> = (0..n).collect();
            r[i] -= 1;
            r
        })
        .collect()
}

fn posets_suite(nmax: usize, cfg: &OracleConfig) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    if nmax >= 3 {
        let gens = vec![vec![0, 1, 1], vec![0, 0, 2]];
        let hits = preferences_inducing(3, &gens, cfg)?;
        out.push(Check::equal("no preference induces the up-set of 011, 002 (n=3)", hits, 0));
    }
    for n in 3..=nmax.min(5) {
        let hits = preferences_inducing(n, &corank_one(n), cfg)?;
        out.push(Check::equal(format!("no preference induces the corank-1 up-set, n={n}"), hits, 0));
    }
    for n in 1..=nmax.min(4) {
        let rules = normalized_rules(n);
        let bad: u64 = rules
            .par_iter()
            .map(|rho| {
                let a = principal_filter_preference(&RuleVector::new(rho.clone())).unwrap();
                let mut bad = 0;
                for_each_rule(n, n, |r| {
                    let above = rho.iter().zip(r).all(|(x, y)| x <= y);
                    let parks = is_strategy(&a, &RuleVector::new(r.to_vec())).unwrap();
                    bad += (above != parks) as u64;
                });
                bad
            })
            .sum();
        out.push(Check::mismatches(
            format!("principal filters exact, n={n}"),
            bad,
            (rules.len() * (n + 1).pow(n as u32)) as u64,
        ));
    }
    let mut mono_bad = 0u64;
    for n in 1..=nmax.min(4) {
        let rules = normalized_rules(n);
        mono_bad += cfg.census(n).fold(
            || 0u64,
            |acc, a| {
                let set = induced_upset(a.prefs(), &rules);
                let mut bad = 0;
                for (i, r) in rules.iter().enumerate() {
                    for (j, r2) in rules.iter().enumerate() {
                        if set[i] && !set[j] && r.iter().zip(r2).all(|(x, y)| x <= y) {
                            bad += 1;
                        }
                    }
                }
                acc + bad
            },
            |x, y| x + y,
        )?;
    }
    out.push(Check::new(
        "strategies form up-sets in R_n",
        mono_bad == 0,
        format!("{mono_bad} comparable pairs violate it"),
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_are_distinct() {
        assert_eq!(distinct_permutations(&[1, 1, 2]).len(), 3);
        assert_eq!(distinct_permutations(&[3, 2, 1]).len(), 6);
    }

    #[test]
    fn rule_grids() {
        let mut c = 0;
        for_each_rule(3, 2, |_| c += 1);
        assert_eq!(c, 27);
        assert_eq!(normalized_rules(4).len(), 24);
        assert_eq!(corank_one(3), vec![vec![0, 0, 2], vec![0, 1, 1]]);
    }

    #[test]
    fn small_suites_pass() {
        let cfg = OracleConfig::default();
        for suite in [Suite::Counts, Suite::Characterize, Suite::Strategies, Suite::Posets] {
            for c in run_suite(suite, 3, &cfg).unwrap() {
                assert!(c.passed, "{c}");
            }
        }
    }
}
