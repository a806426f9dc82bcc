//! The deficiency statistic `u(j)` and its positive set.

use crate::preference::Preference;

/// A maximal run `[p, q]` of consecutive spots with `u ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub p: usize,
    pub q: usize,
}

impl Interval {
    pub fn len(&self) -> usize {
        self.q - self.p + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, j: usize) -> bool {
        self.p <= j && j <= self.q
    }
}

/// `u(j)` for `j ∈ [1, s]`: how many more cars prefer `[j, s]` than there are
/// spots there. With fewer cars than spots the missing cars count as
/// preferring spot 1, which only changes `u(1)`, pinned to 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeficiencyProfile {
    u: Vec<i64>,
    intervals: Vec<Interval>,
}

impl DeficiencyProfile {
    pub fn of(alpha: &Preference) -> Self {
        let s = alpha.spots();
        let counts = alpha.multiplicities();
        let mut u = vec![0i64; s];
        // suffix form: u(j) = #{a_i ≥ j} - (s - j + 1)
        let mut at_least = 0i64;
        for j in (2..=s).rev() {
            at_least += counts[j] as i64;
            u[j - 1] = at_least - (s - j + 1) as i64;
        }
        let mut intervals = Vec::new();
        let mut j = 2;
        while j <= s {
            if u[j - 1] >= 1 {
                let p = j;
                while j < s && u[j] >= 1 {
                    j += 1;
                }
                intervals.push(Interval { p, q: j });
            }
            j += 1;
        }
        DeficiencyProfile { u, intervals }
    }

    /// `u(j)` for `j ∈ [1, s]`.
    pub fn u(&self, j: usize) -> i64 {
        self.u[j - 1]
    }

    /// `u(1), …, u(s)`.
    pub fn values(&self) -> &[i64] {
        &self.u
    }

    pub fn spots(&self) -> usize {
        self.u.len()
    }

    pub fn in_u(&self, j: usize) -> bool {
        j >= 1 && j <= self.u.len() && self.u[j - 1] >= 1
    }

    /// The set `U` in increasing order.
    pub fn u_set(&self) -> Vec<usize> {
        self.intervals.iter().flat_map(|iv| iv.p..=iv.q).collect()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// `U` is empty exactly for parking functions.
    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// `U = [2, s]`.
    pub fn is_complete(&self) -> bool {
        let s = self.u.len();
        s >= 2 && self.intervals.len() == 1 && self.intervals[0] == Interval { p: 2, q: s }
    }

    pub fn max_u(&self) -> i64 {
        self.u.iter().copied().max().unwrap_or(0).max(0)
    }

    /// `Σ_{j ∈ U} u(j)`.
    pub fn positive_sum(&self) -> i64 {
        self.u.iter().filter(|&&v| v > 0).sum()
    }

    /// `Σ_j |u(j)|`.
    pub fn absolute_sum(&self) -> i64 {
        self.u.iter().map(|v| v.abs()).sum()
    }
}

pub fn deficiency_profile(alpha: &Preference) -> DeficiencyProfile {
    DeficiencyProfile::of(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prof(v: &[usize]) -> DeficiencyProfile {
        DeficiencyProfile::of(&Preference::full(v.to_vec()).unwrap())
    }

    #[test]
    fn small_example() {
        let d = prof(&[5, 3, 3, 5, 4]);
        assert_eq!(d.values(), &[0, 1, 2, 1, 1]);
        assert_eq!(d.intervals(), &[Interval { p: 2, q: 5 }]);
        assert!(d.is_complete());
    }

    #[test]
    fn ten_car_example() {
        let d = prof(&[8, 4, 7, 1, 6, 8, 7, 5, 10, 1]);
        assert_eq!(d.intervals(), &[Interval { p: 4, q: 7 }]);
    }

    #[test]
    fn identity_has_empty_set() {
        let d = prof(&[1, 2, 3, 4]);
        assert!(d.values().iter().all(|&v| v == 0));
        assert!(d.is_empty());
    }

    #[test]
    fn two_intervals() {
        // 13-car example: U = {3} ∪ [8, 10]
        let d = prof(&[5, 10, 11, 1, 5, 11, 10, 4, 3, 9, 10, 8, 3]);
        assert_eq!(d.intervals(), &[Interval { p: 3, q: 3 }, Interval { p: 8, q: 10 }]);
        assert_eq!(d.max_u(), 1);
    }

    #[test]
    fn partial_matches_padding() {
        let a = Preference::new(vec![3, 3], 4).unwrap();
        let padded = Preference::full(vec![3, 3, 1, 1]).unwrap();
        assert_eq!(DeficiencyProfile::of(&a), DeficiencyProfile::of(&padded));
    }
}
