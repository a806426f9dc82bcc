//! Brute-force iteration over every preference in `[1, n]^m`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::preference::Preference;

/// Largest lot for which a full `n^n` census runs by default.
pub const DEFAULT_MAX_N: usize = 8;

/// `max_n^max_n`, the point budget matching a lot size limit.
pub fn budget_for_max_n(max_n: usize) -> u128 {
    (max_n as u128).checked_pow(max_n as u32).unwrap_or(u128::MAX)
}

/// Lexicographic sweep of `[1, n]^m`, split by the first car's preference
/// across rayon workers.
#[derive(Debug, Clone)]
pub struct Census {
    n: usize,
    m: usize,
    budget: u128,
    workers: Option<usize>,
}

impl Census {
    /// All of `[1, n]^n`.
    pub fn new(n: usize) -> Self {
        Census { n, m: n, budget: budget_for_max_n(DEFAULT_MAX_N), workers: None }
    }

    /// Sweep `m` cars instead of `n`.
    pub fn cars(mut self, m: usize) -> Self {
        self.m = m;
        self
    }

    pub fn budget(mut self, points: u128) -> Self {
        self.budget = points;
        self
    }

    pub fn workers(mut self, workers: Option<usize>) -> Self {
        self.workers = workers;
        self
    }

    /// Number of preferences visited.
    pub fn points(&self) -> u128 {
        (self.n as u128).checked_pow(self.m as u32).unwrap_or(u128::MAX)
    }

    fn check(&self) -> Result<()> {
        if self.m > self.n {
            return Err(Error::TooManyCars { cars: self.m, spots: self.n });
        }
        if self.points() > self.budget {
            return Err(Error::BudgetExceeded { points: self.points(), budget: self.budget });
        }
        Ok(())
    }

    fn run<T: Send>(&self, job: impl FnOnce() -> T + Send) -> T {
        match self.workers {
            Some(w) => rayon::ThreadPoolBuilder::new().num_threads(w.max(1)).build().expect("thread pool").install(job),
            None => job(),
        }
    }

    /// Visit every preference whose first entry is `first`, in order.
    fn sweep_from<T>(&self, first: usize, mut acc: T, f: &impl Fn(T, &Preference) -> T) -> T {
        let (n, m) = (self.n, self.m);
        let mut digits = vec![1usize; m];
        digits[0] = first;
        loop {
            acc = f(acc, &Preference::from_parts(digits.clone(), n));
            let mut i = m;
            loop {
                if i == 1 {
                    return acc;
                }
                i -= 1;
                if digits[i] < n {
                    digits[i] += 1;
                    break;
                }
                digits[i] = 1;
            }
        }
    }

    /// Fold every preference; `reduce` must be associative and commutative.
    pub fn fold<T, I, F, R>(&self, identity: I, fold: F, reduce: R) -> Result<T>
    where
        T: Send,
        I: Fn() -> T + Sync + Send,
        F: Fn(T, &Preference) -> T + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        self.check()?;
        if self.m == 0 {
            return Ok(fold(identity(), &Preference::from_parts(Vec::new(), self.n)));
        }
        Ok(self.run(|| {
            (1..=self.n)
                .into_par_iter()
                .map(|first| self.sweep_from(first, identity(), &fold))
                .reduce(&identity, &reduce)
        }))
    }

    pub fn count(&self, filter: impl Fn(&Preference) -> bool + Sync + Send) -> Result<u128> {
        self.fold(|| 0u128, |acc, a| acc + filter(a) as u128, |x, y| x + y)
    }

    /// Matching preferences in lexicographic order.
    pub fn collect(&self, filter: impl Fn(&Preference) -> bool + Sync + Send) -> Result<Vec<Preference>> {
        self.check()?;
        if self.m == 0 {
            let empty = Preference::from_parts(Vec::new(), self.n);
            return Ok(if filter(&empty) { vec![empty] } else { Vec::new() });
        }
        let parts: Vec<Vec<Preference>> = self.run(|| {
            (1..=self.n)
                .into_par_iter()
                .map(|first| {
                    self.sweep_from(first, Vec::new(), &|mut v: Vec<Preference>, a: &Preference| {
                        if filter(a) {
                            v.push(a.clone());
                        }
                        v
                    })
                })
                .collect()
        });
        Ok(parts.into_iter().flatten().collect())
    }
}
