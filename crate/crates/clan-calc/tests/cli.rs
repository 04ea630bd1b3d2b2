//! End-to-end checks of the binary: exit codes, JSON shapes, golden rows,
//! and byte-level determinism.

use std::process::{Command, Output};

use clan_calc::bpd::clan_polynomial;
use clan_calc::clan::Clan;
use clan_calc::poly::Polynomial;

const BIN: &str = env!("CARGO_BIN_EXE_clan-calc");

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .env_remove("CLAN_CALC_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn y_product(n: usize, pairs: &[(usize, usize)]) -> Polynomial {
    pairs
        .iter()
        .fold(Polynomial::one(n), |acc, &(s, t)| acc.mul(&Polynomial::y_minus_y(n, s, t)))
}

// ---------------------------------------------------------------------------
// Queries
// ---------------------------------------------------------------------------

#[test]
fn clan_info_emits_the_documented_json() {
    let doc: serde_json::Value = serde_json::from_str(&stdout(&["clan", "info", "22.."])).unwrap();
    assert_eq!(doc["clan"], "22..");
    assert_eq!(doc["p"], 2);
    assert_eq!(doc["q"], 2);
    assert_eq!(doc["n"], 4);
    assert_eq!(doc["length"], 3);
    assert_eq!(doc["u"], "1,2,3,4");
    assert_eq!(doc["v"], "1,2,3,4");
    assert_eq!(doc["lambda"], serde_json::json!([2, 2]));
    assert_eq!(doc["arcs"], serde_json::json!([[1, 3], [2, 4]]));
    assert_eq!(doc["matchless"], false);
    assert_eq!(doc["noncrossing"], false);
    assert_eq!(doc["rainbow"], false);
}

#[test]
fn clan_list_filters_and_counts() {
    let all = stdout(&["clan", "list", "--p", "2", "--q", "2"]);
    assert_eq!(all.lines().count(), 21);
    let matchless = stdout(&["clan", "list", "--p", "2", "--q", "2", "--matchless"]);
    assert_eq!(matchless.lines().count(), 6);
    let json = stdout(&["clan", "list", "--p", "1", "--q", "1", "--json"]);
    let texts: Vec<String> = serde_json::from_str(&json).unwrap();
    assert_eq!(texts, ["+-", "-+", "1."]);
}

#[test]
fn bpd_count_matches_the_running_example() {
    assert_eq!(stdout(&["bpd", "count", "6-84+-..-+."]).trim(), "11");
    assert_eq!(stdout(&["bpd", "count", "3+-.", "--oracle"]).trim(), "2");
}

#[test]
fn bpd_list_json_has_the_documented_shape() {
    let doc: serde_json::Value =
        serde_json::from_str(&stdout(&["bpd", "list", "1.1.", "--json"])).unwrap();
    assert_eq!(doc["clan"], "1.1.");
    let fragments = doc["fragments"].as_array().unwrap();
    assert_eq!(fragments.len(), 1);
    assert!(fragments[0]["tiles"].is_array());
    assert!(fragments[0]["weight"].is_string());
}

#[test]
fn poly_commands_match_the_library() {
    assert_eq!(stdout(&["poly", "schubert", "2,1"]).trim(), "x1 - y1");
    let clan = Clan::parse("22..").unwrap();
    assert_eq!(
        stdout(&["poly", "clanpoly", "22.."]).trim(),
        clan_polynomial(&clan).to_string()
    );
    // The dense orbit has the constant representative.
    assert_eq!(stdout(&["poly", "upsilon", "1."]).trim(), "1");
}

#[test]
fn localize_matches_the_golden_table_rows() {
    // ++-- sits at v = id; its localization is the four factor product.
    let top = stdout(&["localize", "++--", "1,2,3,4"]);
    assert_eq!(
        top.trim(),
        y_product(4, &[(1, 3), (2, 3), (2, 4), (1, 4)]).to_string()
    );
    // 1.1. sits at v = 1,3,2,4 with localization (y3 - y2)*(y1 - y4).
    let matched = stdout(&["localize", "1.1.", "1,3,2,4"]);
    assert_eq!(
        matched.trim(),
        y_product(4, &[(3, 2), (1, 4)]).to_string()
    );
}

#[test]
fn expand_emits_the_five_term_table() {
    let doc: serde_json::Value = serde_json::from_str(&stdout(&["expand", "1.+1."])).unwrap();
    let entries = doc.as_array().unwrap();
    assert_eq!(entries.len(), 5);
    let perms: Vec<&str> = entries.iter().map(|e| e["perm"].as_str().unwrap()).collect();
    assert!(perms.contains(&"2,4,3,1,5"));
    assert!(perms.contains(&"1,4,2,3,5"));
    for entry in entries {
        assert!(entry["coeff"].is_string());
        assert!(entry["length"].is_u64());
    }
}

#[test]
fn smooth_reports_both_verdicts() {
    let crossing: serde_json::Value = serde_json::from_str(&stdout(&["smooth", "22.."])).unwrap();
    assert_eq!(crossing["smooth"], true);
    assert_eq!(crossing["consistent"], true);
    let pattern: serde_json::Value = serde_json::from_str(&stdout(&["smooth", "3+-."])).unwrap();
    assert_eq!(pattern["smooth"], false);
    assert_eq!(pattern["consistent"], true);
}

// ---------------------------------------------------------------------------
// Poset export
// ---------------------------------------------------------------------------

#[test]
fn hasse_export_is_labeled_dot() {
    let dot = stdout(&["order", "hasse", "--p", "1", "--q", "1"]);
    assert!(dot.starts_with("digraph clans {"));
    assert!(dot.trim_end().ends_with('}'));
    for node in ["\"+-\";", "\"-+\";", "\"1.\";"] {
        assert!(dot.contains(node), "missing node {node}");
    }
    assert!(dot.contains("\"+-\" -> \"1.\" [label=\"1\"];"));
    assert!(dot.contains("\"-+\" -> \"1.\" [label=\"1\"];"));
    // Both covers are weak here, so nothing is dashed.
    assert!(!dot.contains("dashed"));
    // The restricted views stay well formed.
    let weak = stdout(&["order", "hasse", "--p", "1", "--q", "1", "--weak"]);
    assert!(weak.contains("label=\"1\""));
    let strong = stdout(&["order", "hasse", "--p", "1", "--q", "1", "--strong"]);
    assert!(strong.contains("\"+-\" -> \"1.\";"));
}

// ---------------------------------------------------------------------------
// Verification sweeps
// ---------------------------------------------------------------------------

#[test]
fn verify_emits_json_lines_and_a_summary() {
    let out = stdout(&["verify", "A", "--max-n", "3"]);
    let mut lines: Vec<&str> = out.lines().collect();
    let summary = lines.pop().unwrap();
    assert_eq!(summary, "localization closed form: 15/15 pass");
    assert_eq!(lines.len(), 15);
    for line in lines {
        let doc: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(doc["pass"], true);
        assert!(doc["subject"].is_string());
    }
}

#[test]
fn verify_rejects_unknown_statements() {
    let out = run(&["verify", "E"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("'E'"));
}

// ---------------------------------------------------------------------------
// Golden appendix table
// ---------------------------------------------------------------------------

#[test]
fn appendix_matches_the_golden_rows() {
    let table = stdout(&["appendix"]);
    let rows: Vec<&str> = table.lines().collect();
    assert_eq!(rows.len(), 21);
    // Canonical clan order, tab separated fields.
    let clans: Vec<&str> = rows.iter().map(|r| r.split('\t').next().unwrap()).collect();
    let expected: Vec<String> =
        Clan::enumerate(2, 2).iter().map(|c| c.to_string()).collect();
    assert_eq!(clans, expected);
    // Spot rows pinned to the published table.
    let row = |clan: &str| -> Vec<&str> {
        rows.iter()
            .find(|r| r.starts_with(&format!("{clan}\t")))
            .unwrap_or_else(|| panic!("row {clan} missing"))
            .split('\t')
            .collect()
    };
    let first = row("++--");
    assert_eq!(first[1], "1,2,3,4");
    assert_eq!(
        first[2],
        y_product(4, &[(1, 3), (2, 3), (2, 4), (1, 4)]).to_string()
    );
    assert_eq!(first[3], "1");
    let constant = row("31..");
    assert_eq!(constant[2], "1");
    assert_eq!(constant[3], "1");
    let last = row("--++");
    assert_eq!(
        last[2],
        y_product(4, &[(3, 1), (3, 2), (4, 1), (4, 2)]).to_string()
    );
    let doubled = row("3+-.");
    assert_eq!(doubled[3], "2");
}

// ---------------------------------------------------------------------------
// Exit codes and determinism
// ---------------------------------------------------------------------------

#[test]
fn usage_errors_name_the_offending_token() {
    let bad_clan = run(&["clan", "info", "2x.."]);
    assert_eq!(exit_code(&bad_clan), 2);
    assert!(String::from_utf8_lossy(&bad_clan.stderr).contains("2x.."));

    let bad_perm = run(&["poly", "schubert", "2,2"]);
    assert_eq!(exit_code(&bad_perm), 2);
    assert!(String::from_utf8_lossy(&bad_perm.stderr).contains("2,2"));

    let mismatched = run(&["localize", "1.1.", "2,1"]);
    assert_eq!(exit_code(&mismatched), 2);
    assert!(String::from_utf8_lossy(&mismatched.stderr).contains("2,1"));

    let oversized = run(&["bpd", "count", "6-84+-..-+.", "--oracle"]);
    assert_eq!(exit_code(&oversized), 2);
}

#[test]
fn jobs_settings_are_validated() {
    let zero_flag = run(&["--jobs", "0", "clan", "list", "--p", "1", "--q", "1"]);
    assert_eq!(exit_code(&zero_flag), 2);

    let bad_env = Command::new(BIN)
        .args(["clan", "list", "--p", "1", "--q", "1"])
        .env("CLAN_CALC_JOBS", "many")
        .output()
        .unwrap();
    assert_eq!(exit_code(&bad_env), 2);
    assert!(String::from_utf8_lossy(&bad_env.stderr).contains("many"));

    let good_env = Command::new(BIN)
        .args(["clan", "list", "--p", "1", "--q", "1"])
        .env("CLAN_CALC_JOBS", "1")
        .output()
        .unwrap();
    assert_eq!(exit_code(&good_env), 0);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["appendix"],
        vec!["order", "hasse", "--p", "1", "--q", "2"],
        vec!["poly", "upsilon", "1.1."],
        vec!["bpd", "list", "6-84+-..-+.", "--json"],
        vec!["verify", "B", "--max-n", "3"],
    ] {
        let first = stdout(&args);
        let second = stdout(&args);
        assert_eq!(first, second, "nondeterministic output for {args:?}");
    }
}
