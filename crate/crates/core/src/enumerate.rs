//! Exact counts: closed forms and the recursion families.
//!
//! All arithmetic is checked `u128`; overflow is an error rather than a
//! silent wrap.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

fn add(a: u128, b: u128, what: &'static str) -> Result<u128> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

fn mul(a: u128, b: u128, what: &'static str) -> Result<u128> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

/// `base^exp` with `0^0 = 1`.
pub fn pow(base: u128, exp: u32) -> Result<u128> {
    base.checked_pow(exp).ok_or(Error::Overflow("power"))
}

/// `base^exp` where the exponent may be `-1`, allowed only for base 1 (the
/// `(i+1)^{i-1}` family at `i = 0`).
fn pow_signed(base: u128, exp: i64) -> Result<u128> {
    if exp >= 0 {
        pow(base, exp as u32)
    } else if base == 1 {
        Ok(1)
    } else {
        Err(Error::Domain(format!("{base}^{exp} is not an integer")))
    }
}

pub fn binomial(n: usize, k: usize) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        c = mul(c, (n - i) as u128, "binomial")? / (i as u128 + 1);
    }
    Ok(c)
}

/// `(n+1)^{n-1}`.
pub fn count_pf(n: usize) -> Result<u128> {
    count_pf_closed(n, n)
}

/// Preferences of `m` cars on `n` spots where every car parks:
/// `(n - m + 1)(n + 1)^{m - 1}`.
pub fn count_pf_closed(n: usize, m: usize) -> Result<u128> {
    if m > n {
        return Err(Error::Domain(format!("{m} cars exceed {n} spots")));
    }
    if m == 0 {
        return Ok(1);
    }
    mul((n - m + 1) as u128, pow(n as u128 + 1, (m - 1) as u32)?, "partial parking count")
}

/// Preferences of `m < n` cars on a circular lot of `n` spots that leave a
/// given spot free: `(n - m) n^{m - 1}`.
pub fn count_circular(n: usize, m: usize) -> Result<u128> {
    if m >= n {
        return Err(Error::Domain(format!("circular count needs m < n, got m = {m}, n = {n}")));
    }
    if m == 0 {
        return Ok(1);
    }
    mul((n - m) as u128, pow(n as u128, (m - 1) as u32)?, "circular count")
}

/// Parking functions of length `n` with exactly `m` cars preferring spot 1:
/// `C(n-1, m-1) n^{n-m}`.
pub fn count_pf_with_ones(n: usize, m: usize) -> Result<u128> {
    if m == 0 || m > n {
        return Ok(0);
    }
    mul(binomial(n - 1, m - 1)?, pow(n as u128, (n - m) as u32)?, "preference-1 count")
}

/// Which recursion a table holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableKind {
    ThetaEq,
    ThetaLeq,
    SmallT,
    BigT,
    Upsilon0,
    Pf,
    PfPartial,
    Knap,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::ThetaEq => "theta_eq",
            TableKind::ThetaLeq => "theta_leq",
            TableKind::SmallT => "t",
            TableKind::BigT => "T",
            TableKind::Upsilon0 => "upsilon0",
            TableKind::Pf => "pf",
            TableKind::PfPartial => "pf_partial",
            TableKind::Knap => "knap",
        }
    }

    /// Names of the parameters in each entry key.
    pub fn params(self) -> &'static [&'static str] {
        match self {
            TableKind::Pf => &["n"],
            TableKind::PfPartial => &["n", "m"],
            _ => &["n", "k"],
        }
    }
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "theta_eq" => TableKind::ThetaEq,
            "theta_leq" => TableKind::ThetaLeq,
            "t" => TableKind::SmallT,
            "T" => TableKind::BigT,
            "upsilon0" => TableKind::Upsilon0,
            "pf" => TableKind::Pf,
            "pf_partial" => TableKind::PfPartial,
            "knap" => TableKind::Knap,
            _ => return Err(Error::Parse { what: "table kind", input: s.to_string() }),
        })
    }
}

/// Exact counts keyed by their parameters, in increasing key order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub kind: TableKind,
    pub entries: BTreeMap<Vec<usize>, u128>,
}

impl CountTable {
    pub fn get(&self, key: &[usize]) -> Option<u128> {
        self.entries.get(key).copied()
    }
}

/// Memoized recursions. One instance per thread backs the free functions.
#[derive(Debug, Default)]
pub struct Counter {
    vartheta: HashMap<(usize, usize, usize, usize), u128>,
    pf: Vec<u128>,
    knap: HashMap<usize, Vec<u128>>,
    small_t: HashMap<usize, Vec<u128>>,
    upsilon0: HashMap<(usize, usize), u128>,
}

impl Counter {
    pub fn new() -> Self {
        Self::default()
    }

    /// `|PF_n| = Σ_j C(n-1, j)(j+1)|PF_j||PF_{n-j-1}|`, `|PF_0| = 1`.
    pub fn pf_recursive(&mut self, n: usize) -> Result<u128> {
        if self.pf.is_empty() {
            self.pf.push(1);
        }
        while self.pf.len() <= n {
            let len = self.pf.len();
            let mut total = 0u128;
            for j in 0..len {
                let term = mul(binomial(len - 1, j)?, (j + 1) as u128, "recursive parking count")?;
                let term = mul(term, self.pf[j], "recursive parking count")?;
                let term = mul(term, self.pf[len - 1 - j], "recursive parking count")?;
                total = add(total, term, "recursive parking count")?;
            }
            self.pf.push(total);
        }
        Ok(self.pf[n])
    }

    /// `|PF_{n,k}|` from
    /// `|PF_{N+1,k}| = Σ_i C(N,i) min(i+1+k, N+1) |PF_{i,k}| (N-i+1)^{N-i-1}`.
    /// Valid for every `k ≥ 0`; `k = 0` is the classical recursion.
    pub fn knap(&mut self, n: usize, k: usize) -> Result<u128> {
        let row = self.knap.entry(k).or_insert_with(|| vec![1]);
        while row.len() <= n {
            let big_n = row.len() - 1;
            let mut total = 0u128;
            for i in 0..=big_n {
                let reach = (i + 1 + k).min(big_n + 1) as u128;
                let contained = pow_signed((big_n - i + 1) as u128, big_n as i64 - i as i64 - 1)?;
                let mut term = mul(binomial(big_n, i)?, reach, "k-Naples recursion")?;
                term = mul(term, row[i], "k-Naples recursion")?;
                term = mul(term, contained, "k-Naples recursion")?;
                total = add(total, term, "k-Naples recursion")?;
            }
            row.push(total);
        }
        Ok(row[n])
    }

    /// Preferences with `U = [2, k+1]`, no car preferring a spot below `h`,
    /// and exactly `m` cars preferring `h`.
    pub fn vartheta(&mut self, n: usize, k: usize, m: usize, h: usize) -> Result<u128> {
        if n == 0 || m == 0 || h == 0 || m > n || h > n || (k >= 1 && k >= n) {
            return Ok(0);
        }
        if k == 0 {
            return if h == 1 { count_pf_with_ones(n, m) } else { Ok(0) };
        }
        if h > k + 1 || h == 1 || (h == k + 1 && m < k + 1) || (h <= k && m >= h) {
            return Ok(0);
        }
        if let Some(&v) = self.vartheta.get(&(n, k, m, h)) {
            return Ok(v);
        }
        let v = if m == 1 {
            let mut inner = 0u128;
            for h2 in h..n {
                for m2 in 1..n {
                    inner = add(inner, self.vartheta(n - 1, k - 1, m2, h2)?, "vartheta")?;
                }
            }
            mul(n as u128, inner, "vartheta")?
        } else {
            let num = mul(n as u128, self.vartheta(n - 1, k - 1, m - 1, h - 1)?, "vartheta")?;
            if num % m as u128 != 0 {
                return Err(Error::InexactDivision { numerator: num, denominator: m as u128, context: "vartheta" });
            }
            num / m as u128
        };
        self.vartheta.insert((n, k, m, h), v);
        Ok(v)
    }

    /// Preferences with `U = [2, k+1]`, `k ≥ 1`.
    pub fn theta_eq(&mut self, n: usize, k: usize) -> Result<u128> {
        if k == 0 {
            return Err(Error::Domain("theta needs k ≥ 1".into()));
        }
        if n <= 1 || k >= n {
            return Ok(0);
        }
        let mut total = 0u128;
        for h in 2..=k {
            for m in 1..h {
                total = add(total, self.vartheta(n, k, m, h)?, "theta")?;
            }
        }
        for m in k + 1..=n {
            total = add(total, self.vartheta(n, k, m, k + 1)?, "theta")?;
        }
        Ok(total)
    }

    /// Preferences with `U = [2, j]` for some `j ∈ [2, k+1]`.
    pub fn theta_leq(&mut self, n: usize, k: usize) -> Result<u128> {
        let mut total = 0u128;
        for i in 1..=k {
            total = add(total, self.theta_eq(n, i)?, "theta")?;
        }
        Ok(total)
    }

    /// Permutation invariant `k`-Naples parking functions with `2 ∈ U`.
    pub fn small_t(&mut self, n: usize, k: usize) -> Result<u128> {
        if k == 0 {
            return Err(Error::Domain("t needs k ≥ 1".into()));
        }
        let mut row = self.small_t.remove(&k).unwrap_or_else(|| vec![1, 0]);
        let res = (|| {
            while row.len() <= n {
                let len = row.len();
                let mut total = 0u128;
                for i in 1..=len {
                    let term = mul(binomial(len, i)?, self.theta_leq(i, k)?, "t")?;
                    total = add(total, mul(term, row[len - i], "t")?, "t")?;
                }
                row.push(total);
            }
            Ok(row[n])
        })();
        self.small_t.insert(k, row);
        res
    }

    /// Permutation invariant `k`-Naples parking functions of length `n`.
    pub fn big_t(&mut self, n: usize, k: usize) -> Result<u128> {
        let mut total = 0u128;
        for i in 0..=n {
            let cayley = pow_signed(i as u128 + 1, i as i64 - 1)?;
            let term = mul(binomial(n, i)?, cayley, "T")?;
            total = add(total, mul(term, self.small_t(n - i, k)?, "T")?, "T")?;
        }
        Ok(total)
    }

    /// Complete `k`-Naples parking functions of length `n ≥ 2`.
    pub fn upsilon0(&mut self, n: usize, k: usize) -> Result<u128> {
        if n < 2 || k == 0 {
            return Err(Error::Domain(format!("upsilon0 needs n ≥ 2 and k ≥ 1, got n = {n}, k = {k}")));
        }
        if n <= k + 1 {
            return pow((n - 1) as u128, (n - 1) as u32);
        }
        if let Some(&v) = self.upsilon0.get(&(n, k)) {
            return Ok(v);
        }
        let mut total = 0u128;
        for i in 1..=k {
            let mut term = mul(binomial(n - 1, i - 1)?, pow_signed(i as u128, i as i64 - 2)?, "upsilon0")?;
            term = mul(term, (k - i + 1) as u128, "upsilon0")?;
            term = mul(term, self.upsilon0(n - i, k)?, "upsilon0")?;
            total = add(total, term, "upsilon0")?;
        }
        self.upsilon0.insert((n, k), total);
        Ok(total)
    }

    /// The triangle of `kind` for every `n ≤ nmax` and every valid second
    /// parameter.
    pub fn table(&mut self, kind: TableKind, nmax: usize) -> Result<CountTable> {
        let mut entries = BTreeMap::new();
        match kind {
            TableKind::Pf => {
                for n in 1..=nmax {
                    entries.insert(vec![n], self.pf_recursive(n)?);
                }
            }
            TableKind::PfPartial => {
                for n in 1..=nmax {
                    for m in 1..=n {
                        entries.insert(vec![n, m], count_pf_closed(n, m)?);
                    }
                }
            }
            TableKind::Knap => {
                for n in 1..=nmax {
                    for k in 1..=n {
                        entries.insert(vec![n, k], self.knap(n, k)?);
                    }
                }
            }
            _ => {
                for n in 2..=nmax {
                    for k in 1..n {
                        let v = match kind {
                            TableKind::ThetaEq => self.theta_eq(n, k)?,
                            TableKind::ThetaLeq => self.theta_leq(n, k)?,
                            TableKind::SmallT => self.small_t(n, k)?,
                            TableKind::BigT => self.big_t(n, k)?,
                            TableKind::Upsilon0 => self.upsilon0(n, k)?,
                            _ => unreachable!(),
                        };
                        entries.insert(vec![n, k], v);
                    }
                }
            }
        }
        Ok(CountTable { kind, entries })
    }
}

thread_local! {
    static COUNTER: RefCell<Counter> = RefCell::new(Counter::new());
}

fn with_counter<T>(f: impl FnOnce(&mut Counter) -> Result<T>) -> Result<T> {
    COUNTER.with(|c| f(&mut c.borrow_mut()))
}

pub fn count_pf_recursive(n: usize) -> Result<u128> {
    with_counter(|c| c.pf_recursive(n))
}

pub fn count_knap_recursive(n: usize, k: usize) -> Result<u128> {
    with_counter(|c| c.knap(n, k))
}

pub fn vartheta(n: usize, k: usize, m: usize, h: usize) -> Result<u128> {
    with_counter(|c| c.vartheta(n, k, m, h))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaKind {
    Eq,
    Leq,
}

pub fn theta(n: usize, k: usize, kind: ThetaKind) -> Result<u128> {
    with_counter(|c| match kind {
        ThetaKind::Eq => c.theta_eq(n, k),
        ThetaKind::Leq => c.theta_leq(n, k),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantKind {
    /// Permutation invariant with `2 ∈ U`.
    Small,
    /// All permutation invariant.
    Big,
}

pub fn invariant_counts(n: usize, k: usize, kind: InvariantKind) -> Result<u128> {
    with_counter(|c| match kind {
        InvariantKind::Small => c.small_t(n, k),
        InvariantKind::Big => c.big_t(n, k),
    })
}

pub fn upsilon0(n: usize, k: usize) -> Result<u128> {
    with_counter(|c| c.upsilon0(n, k))
}

pub fn count_table(kind: TableKind, nmax: usize) -> Result<CountTable> {
    with_counter(|c| c.table(kind, nmax))
}

/// Both sides of `(z+w+m)^m = Σ_j C(m,j) w (w+m-j)^{m-j-1} (z+j)^j`, with the
/// `j = m` term read as `(z+m)^m`.
pub fn abel_sides(z: i64, w: i64, m: u32) -> (i128, i128) {
    let lhs = ((z + w + m as i64) as i128).pow(m);
    let mut rhs = 0i128;
    for j in 0..=m {
        let c = binomial(m as usize, j as usize).expect("small binomial") as i128;
        let head = if j == m { 1 } else { w as i128 * ((w + (m - j) as i64) as i128).pow(m - j - 1) };
        rhs += c * head * ((z + j as i64) as i128).pow(j);
    }
    (lhs, rhs)
}
