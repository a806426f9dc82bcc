use std::process::{Command, Output};

fn naples(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_naples")).args(args).env_remove("NAPLES_MAX_N").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn park_examples() {
    let o = naples(&["park", "--prefs", "5,3,3,5,4", "--rules", "k=3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("5 3 2 4 1"));

    let o = naples(&["park", "--prefs", "7,8,7,5,8,4,5,2", "--rules", "k=2"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o).lines().next(), Some("7 8 6 5 - 4 3 2"));

    let o = naples(&["park", "--prefs", "1,2", "--rules", "0,0"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("1 2"));

    let o = naples(&["park", "--prefs", "2,2@5", "--rules", "inf"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().next(), Some("2 1"));
}

#[test]
fn park_json_marks_unparked_cars() {
    let o = naples(&["park", "--prefs", "7,8,7,5,8,4,5,2", "--rules", "k=2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["assignment"][4], "unparked");
    assert_eq!(v["assignment"][0], 7);
    assert_eq!(v["all_parked"], false);
}

#[test]
fn check_examples() {
    let o =
        naples(&["check", "--prefs", "8,4,7,1,6,8,7,5,10,1", "--k", "2", "--mode", "structural", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["witnesses"][0]["positions"], serde_json::json!([2, 3, 5, 7, 8]));
    assert_eq!(v["witnesses"][0]["translated"], serde_json::json!([2, 5, 4, 5, 3]));

    assert_eq!(code(&naples(&["check", "--prefs", "3,3,2", "--k", "1", "--mode", "perminv"])), 1);
    assert_eq!(code(&naples(&["check", "--prefs", "1,2,3", "--k", "0", "--mode", "simulate"])), 0);

    let o = naples(&["check", "--prefs", "7,8,7,5,8,4,5,2", "--k", "4", "--mode", "rtl", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let at5 = v["rtl"].as_array().unwrap().iter().find(|w| w["position"] == 5).unwrap();
    assert_eq!(at5["lambda"], 3);

    let o = naples(&["check", "--prefs", "5,10,11,1,5,11,10,4,3,9,10,8,3", "--mode", "ones"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn preconditions_name_the_failure() {
    let o = naples(&["check", "--prefs", "1,2,3", "--k", "1", "--mode", "rtl"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("complete"));

    let o = naples(&["strategy", "--prefs", "5,3,3,5,4", "--goal", "ones"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("1-Naples"));
}

#[test]
fn invalid_input() {
    assert_eq!(code(&naples(&["park", "--prefs", "0,2"])), 2);
    assert_eq!(code(&naples(&["park", "--prefs", "1,x"])), 2);
    assert_eq!(code(&naples(&["park", "--prefs", "1,2", "--rules", "0"])), 2);
    assert_eq!(code(&naples(&["check", "--prefs", "1,2", "--mode", "simulate"])), 2);
    assert_eq!(code(&naples(&["table", "bogus"])), 2);
}

#[test]
fn tables() {
    let o = naples(&["table", "T", "--nmax", "8", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let mut rows = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(rows.headers().unwrap(), vec!["kind", "n", "k", "value"]);
    let rows: Vec<csv::StringRecord> = rows.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 28);
    assert_eq!(&rows[1][3], "23");
    assert_eq!(&rows[3][3], "192");
    assert_eq!(&rows[4][3], "229");
    assert_eq!(&rows.last().unwrap()[3], "16777216");

    let o = naples(&["table", "upsilon0", "--nmax", "9"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("1505148"));

    let o = naples(&["table", "pf", "--nmax", "1", "--format", "csv"]);
    assert_eq!(stdout(&o), "kind,n,value\npf,1,1\n");

    let o = naples(&["table", "theta_eq", "--nmax", "8", "--format", "json"]);
    assert!(stdout(&o).contains(r#"{"kind":"theta_eq","n":8,"k":4,"value":"351337"}"#));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 28);

    let o = naples(&["table", "knap", "--nmax", "4", "--format", "csv"]);
    assert!(stdout(&o).contains("knap,3,1,24\n"));
}

#[test]
fn tables_past_u128_report_budget() {
    assert_eq!(code(&naples(&["table", "knap", "--nmax", "40"])), 3);
}

#[test]
fn strategy_examples() {
    let o = naples(&["strategy", "--prefs", "4,9,5,9,5,8,7,9,4,6", "--goal", "steps", "--all", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["optimum"], 12);
    assert_eq!(v["count"], "2");
    let mut rhos: Vec<String> = v["plans"].as_array().unwrap().iter().map(|p| p["rho"].to_string()).collect();
    rhos.sort();
    assert_eq!(rhos, ["[0,0,0,0,2,0,0,3,2,5]", "[0,0,0,1,2,1,1,0,2,5]"]);

    let o = naples(&["strategy", "--prefs", "3,3,2,4", "--goal", "cars", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["tilde_t"], serde_json::json!([4]));
    assert_eq!(v["plans"][0]["rho"], serde_json::json!([0, 0, 0, 4]));

    let o = naples(&["strategy", "--prefs", "1,2,3", "--goal", "steps", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["optimum"], 0);
    assert_eq!(v["plans"][0]["rho"], serde_json::json!([0, 0, 0]));
}

#[test]
fn oracle_suites() {
    let o = naples(&["oracle", "posets", "--nmax", "3"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = naples(&["oracle", "counts", "--nmax", "6", "--workers", "2"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = naples(&["oracle", "characterize", "--nmax", "5"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS") || l.ends_with("0 failed")));
}

#[test]
fn census_budget_flag_and_env() {
    assert_eq!(code(&naples(&["oracle", "counts", "--nmax", "9"])), 3);
    assert_eq!(code(&naples(&["oracle", "counts", "--nmax", "4", "--max-n", "3"])), 3);
    let o = Command::new(env!("CARGO_BIN_EXE_naples"))
        .args(["oracle", "posets", "--nmax", "4"])
        .env("NAPLES_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("256"));
}

#[test]
fn json_is_deterministic() {
    let runs: [&[&str]; 4] = [
        &["park", "--prefs", "4,3,3,4,1", "--rules", "1,1,0,1,1", "--format", "json"],
        &["check", "--prefs", "8,4,7,1,6,8,7,5,10,1", "--k", "2", "--mode", "structural", "--format", "json"],
        &["strategy", "--prefs", "4,9,5,9,5,8,7,9,4,6", "--all", "--format", "json"],
        &["oracle", "strategies", "--nmax", "4", "--workers", "3", "--format", "json"],
    ];
    for args in runs {
        let (a, b) = (stdout(&naples(args)), stdout(&naples(args)));
        let parsed: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(a, b);
        assert_eq!(serde_json::from_str::<serde_json::Value>(&b).unwrap(), parsed);
    }
}
