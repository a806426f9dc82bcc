//! Command implementations behind the `naples` binary. Each returns the
//! full payload plus a status, so tests can drive them without a process.

use std::fmt::Write as _;

use serde::Serialize;

use naples_core::characterize::{
    complete_membership_rtl, decide_knaples_structural, is_complete, is_permutation_invariant, one_naples_chains,
};
use naples_core::enumerate::Counter;
use naples_core::oracle::{run_suite, OracleConfig, Suite};
use naples_core::strategize::{enumerate_min_step_strategies, min_cars_strategy, min_ones_strategy, min_step_strategy};
use naples_core::{park, DeficiencyProfile, Error, Outcome, Preference, RuleSpec, RuleVector, TableKind};

/// Largest `n` accepted by `table`; u128 runs out shortly after.
pub const TABLE_MAX_N: usize = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    MembershipFalse,
    InvalidInput,
    BudgetExceeded,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::MembershipFalse => 1,
            Status::InvalidInput => 2,
            Status::BudgetExceeded => 3,
        }
    }

    fn verdict(member: bool) -> Status {
        if member {
            Status::Ok
        } else {
            Status::MembershipFalse
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: String,
}

impl CommandResult {
    fn new(status: Status, payload: String) -> Self {
        CommandResult { status, payload }
    }
}

impl From<Error> for CommandResult {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::BudgetExceeded { .. } | Error::TooManyPlans { .. } | Error::Overflow(_) => Status::BudgetExceeded,
            _ => Status::InvalidInput,
        };
        CommandResult::new(status, format!("error: {e}\n"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CheckMode {
    Simulate,
    Structural,
    Rtl,
    Perminv,
    Ones,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Goal {
    Steps,
    Cars,
    Ones,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableChoice {
    #[value(name = "theta_eq")]
    ThetaEq,
    #[value(name = "theta_leq")]
    ThetaLeq,
    #[value(name = "T")]
    T,
    #[value(name = "upsilon0")]
    Upsilon0,
    #[value(name = "pf")]
    Pf,
    #[value(name = "knap")]
    Knap,
}

impl TableChoice {
    fn kind(self) -> TableKind {
        match self {
            TableChoice::ThetaEq => TableKind::ThetaEq,
            TableChoice::ThetaLeq => TableKind::ThetaLeq,
            TableChoice::T => TableKind::BigT,
            TableChoice::Upsilon0 => TableKind::Upsilon0,
            TableChoice::Pf => TableKind::Pf,
            TableChoice::Knap => TableKind::Knap,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SuiteChoice {
    Counts,
    Characterize,
    Strategies,
    Posets,
}

impl SuiteChoice {
    fn suite(self) -> Suite {
        match self {
            SuiteChoice::Counts => Suite::Counts,
            SuiteChoice::Characterize => Suite::Characterize,
            SuiteChoice::Strategies => Suite::Strategies,
            SuiteChoice::Posets => Suite::Posets,
        }
    }
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return CommandResult::from(e),
        }
    };
}

fn unsupported(format: Format, command: &str) -> CommandResult {
    CommandResult::new(Status::InvalidInput, format!("error: {command} has no {format:?} output\n").to_lowercase())
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

/// A spot in JSON output: a number, or "unparked".
#[derive(Serialize)]
#[serde(untagged)]
enum SpotJson {
    Parked(usize),
    Unparked(&'static str),
}

fn spots_json(o: &Outcome) -> Vec<SpotJson> {
    o.assignment.iter().map(|p| p.map_or(SpotJson::Unparked("unparked"), SpotJson::Parked)).collect()
}

fn join(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Serialize)]
struct ParkJson<'a> {
    prefs: &'a [usize],
    spots: usize,
    rules: &'a [usize],
    assignment: Vec<SpotJson>,
    backward_steps: usize,
    forward_steps: usize,
    all_parked: bool,
}

pub fn run_park(prefs: &str, rules: &str, format: Format) -> CommandResult {
    let alpha: Preference = tri!(prefs.parse());
    let spec: RuleSpec = tri!(rules.parse());
    let rho = tri!(spec.resolve(&alpha));
    let o = tri!(park(&alpha, &rho));
    let status = Status::verdict(o.all_parked());
    let payload = match format {
        Format::Text => format!(
            "{}\nbackward {} forward {}\n{}\n",
            o.render(),
            o.total_backward(),
            o.total_forward(),
            if o.all_parked() { "all cars park" } else { "some cars do not park" }
        ),
        Format::Json => json(&ParkJson {
            prefs: alpha.prefs(),
            spots: alpha.spots(),
            rules: rho.limits(),
            assignment: spots_json(&o),
            backward_steps: o.total_backward(),
            forward_steps: o.total_forward(),
            all_parked: o.all_parked(),
        }),
        Format::Csv => return unsupported(format, "park"),
    };
    CommandResult::new(status, payload)
}

#[derive(Serialize)]
struct IntervalWitnessJson {
    interval: [usize; 2],
    positions: Vec<usize>,
    translated: Vec<usize>,
}

#[derive(Serialize)]
struct RtlJson {
    position: usize,
    value: usize,
    u: i64,
    lambda: Option<usize>,
}

#[derive(Serialize)]
struct CheckJson<'a> {
    mode: &'static str,
    prefs: &'a [usize],
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    assignment: Option<Vec<SpotJson>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    intervals: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    witnesses: Vec<IntervalWitnessJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    rtl: Vec<RtlJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    chains: Vec<Vec<usize>>,
}

pub fn run_check(prefs: &str, k: Option<usize>, mode: CheckMode, format: Format) -> CommandResult {
    if format == Format::Csv {
        return unsupported(format, "check");
    }
    let alpha: Preference = tri!(prefs.parse());
    let k = match (mode, k) {
        (CheckMode::Ones, _) => None,
        (_, Some(k)) => Some(k),
        (_, None) => return CommandResult::new(Status::InvalidInput, "error: --k is required for this mode\n".into()),
    };
    let d = DeficiencyProfile::of(&alpha);
    let intervals: Vec<[usize; 2]> = d.intervals().iter().map(|iv| [iv.p, iv.q]).collect();
    let mut out = CheckJson {
        mode: "",
        prefs: alpha.prefs(),
        k,
        member: false,
        assignment: None,
        intervals: Vec::new(),
        witnesses: Vec::new(),
        rtl: Vec::new(),
        chains: Vec::new(),
    };
    let mut text = String::new();
    match mode {
        CheckMode::Simulate => {
            let k = k.unwrap();
            let o = tri!(park(&alpha, &RuleVector::constant(k, alpha.len())));
            out.mode = "simulate";
            out.member = o.all_parked();
            out.assignment = Some(spots_json(&o));
            writeln!(text, "assignment {}", o.render()).unwrap();
        }
        CheckMode::Structural => {
            let k = k.unwrap();
            let (member, ws) = tri!(decide_knaples_structural(&alpha, k));
            out.mode = "structural";
            out.member = member;
            out.intervals = intervals.clone();
            for w in ws {
                writeln!(
                    text,
                    "interval [{},{}]: J = {{{}}}, translated {}",
                    w.interval.p,
                    w.interval.q,
                    join(&w.positions),
                    join(w.translated.prefs())
                )
                .unwrap();
                out.witnesses.push(IntervalWitnessJson {
                    interval: [w.interval.p, w.interval.q],
                    positions: w.positions,
                    translated: w.translated.into_vec(),
                });
            }
        }
        CheckMode::Rtl => {
            let k = k.unwrap();
            if !tri!(is_complete(&alpha)) {
                return CommandResult::new(
                    Status::InvalidInput,
                    "error: precondition failed: rtl mode needs a complete preference (U = [2, n])\n".into(),
                );
            }
            let (member, ws) = tri!(complete_membership_rtl(&alpha, k));
            out.mode = "rtl";
            out.member = member;
            for w in ws {
                let lambda = w.lambda.map_or("none".to_string(), |l| l.to_string());
                writeln!(text, "maximum a_{} = {}: u = {}, lambda = {}", w.position, w.value, w.u, lambda).unwrap();
                out.rtl.push(RtlJson { position: w.position, value: w.value, u: w.u, lambda: w.lambda });
            }
        }
        CheckMode::Perminv => {
            let k = k.unwrap();
            out.mode = "perminv";
            out.member = tri!(is_permutation_invariant(&alpha, k));
            out.intervals = intervals.clone();
            for iv in &intervals {
                writeln!(text, "interval [{},{}] length {}", iv[0], iv[1], iv[1] - iv[0] + 1).unwrap();
            }
        }
        CheckMode::Ones => {
            let chains = tri!(one_naples_chains(&alpha));
            out.mode = "ones";
            out.member = chains.is_some();
            out.intervals = intervals.clone();
            if d.max_u() > 1 {
                writeln!(text, "max u = {} exceeds 1", d.max_u()).unwrap();
            }
            for (iv, c) in intervals.iter().zip(chains.iter().flatten()) {
                writeln!(text, "interval [{},{}]: chain at positions {{{}}}", iv[0], iv[1], join(c)).unwrap();
            }
            out.chains = chains.unwrap_or_default();
        }
    }
    let status = Status::verdict(out.member);
    let payload = match format {
        Format::Json => json(&out),
        _ => format!("{}\n{text}", if out.member { "member" } else { "not a member" }),
    };
    CommandResult::new(status, payload)
}

#[derive(Serialize)]
struct TableRow {
    kind: &'static str,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    value: String,
}

pub fn run_table(kind: TableChoice, nmax: usize, format: Format) -> CommandResult {
    if nmax > TABLE_MAX_N {
        return CommandResult::new(
            Status::BudgetExceeded,
            format!("error: tables stop at n = {TABLE_MAX_N}; asked for {nmax}\n"),
        );
    }
    let kind = kind.kind();
    let table = tri!(Counter::new().table(kind, nmax));
    let rows: Vec<TableRow> = table
        .entries
        .iter()
        .map(|(key, v)| TableRow { kind: kind.name(), n: key[0], k: key.get(1).copied(), value: v.to_string() })
        .collect();
    let payload = match format {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let two = kind.params().len() == 2;
            if two {
                w.write_record(["kind", "n", "k", "value"]).expect("in-memory csv");
            } else {
                w.write_record(["kind", "n", "value"]).expect("in-memory csv");
            }
            for r in &rows {
                let n = r.n.to_string();
                let written = match r.k {
                    Some(k) => w.write_record([r.kind, &n, &k.to_string(), &r.value]),
                    None => w.write_record([r.kind, &n, &r.value]),
                };
                written.expect("in-memory csv");
            }
            String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf8")
        }
        Format::Text => render_table(&rows),
    };
    CommandResult::new(Status::Ok, payload)
}

/// One line per `n`, columns by `k`, right-aligned.
fn render_table(rows: &[TableRow]) -> String {
    let width = rows.iter().map(|r| r.value.len()).max().unwrap_or(1);
    let two = rows.iter().any(|r| r.k.is_some());
    let mut out = String::new();
    let mut last_n = None;
    for r in rows {
        if last_n != Some(r.n) {
            if last_n.is_some() {
                out.push('\n');
            }
            write!(out, "n={:<3}", r.n).unwrap();
            last_n = Some(r.n);
        }
        write!(out, " {:>width$}", r.value).unwrap();
    }
    if !rows.is_empty() {
        out.push('\n');
    }
    if two {
        let kmax = rows.iter().filter_map(|r| r.k).max().unwrap_or(0);
        let mut head = format!("{:<5}", "k");
        for k in 1..=kmax {
            write!(head, " {k:>width$}").unwrap();
        }
        out = format!("{head}\n{out}");
    }
    out
}

#[derive(Serialize)]
struct PlanJson {
    rho: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sets: Option<Vec<(usize, Vec<usize>)>>,
    assignment: Vec<SpotJson>,
    backward_steps: usize,
    forward_steps: usize,
}

#[derive(Serialize)]
struct StrategyJson<'a> {
    prefs: &'a [usize],
    goal: &'static str,
    optimum: usize,
    count: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    tilde_t: Option<Vec<usize>>,
    plans: Vec<PlanJson>,
}

pub fn run_strategy(prefs: &str, goal: Goal, all: bool, format: Format) -> CommandResult {
    if format == Format::Csv {
        return unsupported(format, "strategy");
    }
    let alpha: Preference = tri!(prefs.parse());
    if !alpha.is_full() {
        return CommandResult::from(Error::NotFull { cars: alpha.len(), spots: alpha.spots() });
    }
    let plan_json = |rho: &RuleVector, sets: Option<Vec<(usize, Vec<usize>)>>| -> Result<PlanJson, Error> {
        let o = park(&alpha, rho)?;
        Ok(PlanJson {
            rho: rho.limits().to_vec(),
            sets,
            assignment: spots_json(&o),
            backward_steps: o.total_backward(),
            forward_steps: o.total_forward(),
        })
    };
    let mut text = String::new();
    let out = match goal {
        Goal::Steps => {
            let (plans, count) = if all {
                tri!(enumerate_min_step_strategies(&alpha))
            } else {
                let p = tri!(min_step_strategy(&alpha));
                let c = tri!(naples_core::strategize::count_min_step_strategies(&alpha));
                (vec![p], c)
            };
            let optimum = plans[0].total;
            writeln!(text, "minimum rank {optimum}, {count} minimizing vectors").unwrap();
            let mut js = Vec::new();
            for p in &plans {
                let j = tri!(plan_json(&p.rho, Some(p.sets.clone())));
                writeln!(
                    text,
                    "rho {}  trace {}  steps {} back {} forward",
                    join(p.rho.limits()),
                    render_spots(&j.assignment),
                    j.backward_steps,
                    j.forward_steps
                )
                .unwrap();
                js.push(j);
            }
            StrategyJson {
                prefs: alpha.prefs(),
                goal: "steps",
                optimum,
                count: count.to_string(),
                tilde_t: None,
                plans: js,
            }
        }
        Goal::Cars => {
            let plan = tri!(min_cars_strategy(&alpha));
            let j = tri!(plan_json(&plan.rho, None));
            writeln!(text, "minimum backing-up cars {}: {{{}}}", plan.tilde_t.len(), join(&plan.tilde_t)).unwrap();
            writeln!(text, "rho {}  trace {}", join(plan.rho.limits()), render_spots(&j.assignment)).unwrap();
            StrategyJson {
                prefs: alpha.prefs(),
                goal: "cars",
                optimum: plan.tilde_t.len(),
                count: "1".into(),
                tilde_t: Some(plan.tilde_t),
                plans: vec![j],
            }
        }
        Goal::Ones => {
            let rho = match min_ones_strategy(&alpha) {
                Ok(r) => r,
                Err(Error::NotOneNaples) => {
                    return CommandResult::new(
                        Status::InvalidInput,
                        "error: precondition failed: no {0,1} rule vector parks every car (not 1-Naples)\n".into(),
                    )
                }
                Err(e) => return e.into(),
            };
            let j = tri!(plan_json(&rho, None));
            writeln!(text, "minimum ones {}", rho.rank()).unwrap();
            writeln!(text, "rho {}  trace {}", join(rho.limits()), render_spots(&j.assignment)).unwrap();
            StrategyJson {
                prefs: alpha.prefs(),
                goal: "ones",
                optimum: rho.rank(),
                count: "1".into(),
                tilde_t: None,
                plans: vec![j],
            }
        }
    };
    let payload = match format {
        Format::Json => json(&out),
        _ => text,
    };
    CommandResult::new(Status::Ok, payload)
}

fn render_spots(v: &[SpotJson]) -> String {
    v.iter()
        .map(|s| match s {
            SpotJson::Parked(p) => p.to_string(),
            SpotJson::Unparked(_) => "-".to_string(),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Serialize)]
struct CheckLine {
    name: String,
    passed: bool,
    detail: String,
}

pub fn run_oracle(
    suite: SuiteChoice,
    nmax: usize,
    workers: Option<usize>,
    budget: u128,
    format: Format,
) -> CommandResult {
    if format == Format::Csv {
        return unsupported(format, "oracle");
    }
    let points = (nmax as u128).checked_pow(nmax as u32).unwrap_or(u128::MAX);
    if points > budget {
        return Error::BudgetExceeded { points, budget }.into();
    }
    let cfg = OracleConfig { budget, workers };
    let checks = tri!(run_suite(suite.suite(), nmax, &cfg));
    let failed = checks.iter().filter(|c| !c.passed).count();
    let status = Status::verdict(failed == 0);
    let payload = match format {
        Format::Json => json(
            &checks
                .iter()
                .map(|c| CheckLine { name: c.name.clone(), passed: c.passed, detail: c.detail.clone() })
                .collect::<Vec<_>>(),
        ),
        _ => {
            let mut s: String = checks.iter().map(|c| format!("{c}\n")).collect();
            writeln!(s, "{} checks, {} failed", checks.len(), failed).unwrap();
            s
        }
    };
    CommandResult::new(status, payload)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn errors_map_to_statuses() {
        assert_eq!(CommandResult::from(Error::BudgetExceeded { points: 9, budget: 1 }).status, Status::BudgetExceeded);
        assert_eq!(CommandResult::from(Error::NotComplete).status, Status::InvalidInput);
        assert_eq!(Status::MembershipFalse.exit_code(), 1);
    }

    #[test]
    fn text_table_is_aligned() {
        let r = run_table(TableChoice::ThetaEq, 4, Format::Text);
        assert_eq!(r.payload, "k      1  2  3\nn=2    1\nn=3    4  4\nn=4   27 21 27\n");
    }

    #[test]
    fn csv_rejected_where_meaningless() {
        assert_eq!(run_park("1,2", "k=0", Format::Csv).status, Status::InvalidInput);
    }

    #[test]
    fn strategy_needs_a_full_lot() {
        assert_eq!(run_strategy("2,2@5", Goal::Steps, false, Format::Text).status, Status::InvalidInput);
    }
}
