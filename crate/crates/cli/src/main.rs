use std::process::ExitCode;

use clap::{Parser, Subcommand};

use naples_cli::{
    run_check, run_oracle, run_park, run_strategy, run_table, CheckMode, Format, Goal, SuiteChoice, TableChoice,
};
use naples_core::census::{budget_for_max_n, DEFAULT_MAX_N};

/// Parking functions, k-Naples parking and parking strategies.
#[derive(Parser)]
#[command(name = "naples", version)]
struct Cli {
    /// Largest n for exhaustive n^n sweeps.
    #[arg(long, global = true, env = "NAPLES_MAX_N", default_value_t = DEFAULT_MAX_N)]
    max_n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Park every car and print where it ends up.
    Park {
        /// e.g. `5,3,3,5,4`, or `2,2@5` for 2 cars on 5 spots
        #[arg(long)]
        prefs: String,
        /// `k=K`, `inf`, or one limit per car such as `0,1,0`
        #[arg(long, default_value = "k=0")]
        rules: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide membership under a constant rule.
    Check {
        #[arg(long)]
        prefs: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = CheckMode::Simulate)]
        mode: CheckMode,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a table of exact counts.
    Table {
        #[arg(value_enum)]
        kind: TableChoice,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build an optimal rule vector.
    Strategy {
        #[arg(long)]
        prefs: String,
        #[arg(long, value_enum, default_value_t = Goal::Steps)]
        goal: Goal,
        /// List every minimizer (steps goal only).
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check formulas and characterizations against brute force.
    Oracle {
        #[arg(value_enum)]
        suite: SuiteChoice,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Park { prefs, rules, format } => run_park(&prefs, &rules, format),
        Command::Check { prefs, k, mode, format } => run_check(&prefs, k, mode, format),
        Command::Table { kind, nmax, format } => run_table(kind, nmax, format),
        Command::Strategy { prefs, goal, all, format } => run_strategy(&prefs, goal, all, format),
        Command::Oracle { suite, nmax, workers, format } => {
            run_oracle(suite, nmax, workers, budget_for_max_n(cli.max_n), format)
        }
    };
    if result.status.exit_code() >= 2 {
        eprint!("{}", result.payload);
    } else {
        print!("{}", result.payload);
    }
    ExitCode::from(result.status.exit_code())
}
