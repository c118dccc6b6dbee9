use std::process::Command;

fn minfact(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_minfact"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

#[test]
fn h_emits_kind_alpha_value() {
    let (code, stdout, _) = minfact(&["h", "--alpha", "3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "{\"kind\":\"H\",\"alpha\":[3],\"value\":\"3\"}\n");
}

#[test]
fn g_emits_m_and_value() {
    let (code, stdout, _) = minfact(&["g", "--alpha", "3", "--m", "2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "{\"kind\":\"G\",\"alpha\":[3],\"m\":2,\"value\":\"5\"}\n");
}

#[test]
fn alpha_is_parsed_leniently_and_emitted_canonically() {
    let (code, stdout, _) = minfact(&["h", "--alpha", "1,3,1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"alpha\":[3,1,1]"));
    assert!(stdout.contains("\"value\":\"9720\""));
}

#[test]
fn oracle_reports_mode_count_and_timing() {
    let (code, stdout, _) = minfact(&["oracle", "--alpha", "2,2", "--transpositions"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"mode\":\"transpositions\""));
    assert!(stdout.contains("\"count\":\"96\""));
    assert!(stdout.contains("\"elapsed_ms\":"));

    let (code, stdout, _) = minfact(&["oracle", "--alpha", "3", "--m", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"mode\":\"arbitrary\""));
    assert!(stdout.contains("\"count\":\"5\""));
}

#[test]
fn verify_single_identity_passes() {
    let (code, stdout, _) = minfact(&["verify", "--id", "KDV2", "--order", "5"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "{\"identity\":\"KDV2\",\"order\":5,\"status\":\"pass\"}\n"
    );
}

#[test]
fn verify_all_runs_the_whole_catalog() {
    let (code, stdout, _) = minfact(&["verify", "--all", "--order", "3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.matches("\"status\":\"pass\"").count(), 16);
    let (code_id, stdout_id, _) = minfact(&["verify", "--id", "all", "--order", "3"]);
    assert_eq!(code_id, 0);
    assert_eq!(stdout_id, stdout);
}

#[test]
fn trees_reports_counts_and_match() {
    let (code, stdout, _) = minfact(&["trees", "--alpha", "2", "--m", "2"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "{\"alpha\":[2],\"m\":2,\"planted_count\":\"3\",\"balanced_count\":\"2\",\
         \"prediction\":\"2\",\"match\":true}\n"
    );
}

#[test]
fn trees_orientation_flag_accepts_both_directions() {
    for orientation in ["cw", "ccw"] {
        let (code, stdout, _) = minfact(&[
            "trees",
            "--alpha",
            "2,1",
            "--m",
            "2",
            "--orientation",
            orientation,
        ]);
        assert_eq!(code, 0);
        assert!(stdout.contains("\"balanced_count\":\"6\""), "{orientation}: {stdout}");
        assert!(stdout.contains("\"match\":true"));
    }
}

#[test]
fn series_emits_var_order_and_coefficient_table() {
    let (code, stdout, _) = minfact(&["series", "--id", "H", "--order", "1"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "{\"var\":\"z\",\"order\":1,\"coeffs\":[[],[{\"u\":0,\"x\":0,\"p\":{\"1\":1},\
         \"q\":\"1/1\"}]]}\n"
    );
}

#[test]
fn census_emits_one_row_per_partition() {
    let (code, stdout, _) = minfact(&["census", "--n", "3", "--transpositions"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "{\"n\":3,\"mode\":\"transpositions\",\"rows\":[{\"alpha\":[3],\"count\":\"3\"},\
         {\"alpha\":[2,1],\"count\":\"8\"},{\"alpha\":[1,1,1],\"count\":\"24\"}]}\n"
    );
}

#[test]
fn census_csv_quotes_the_partition_column() {
    let (code, stdout, _) = minfact(&["census", "--n", "3", "--transpositions", "--csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "alpha,count\n\"3\",3\n\"2,1\",8\n\"1,1,1\",24\n");
}

#[test]
fn census_output_is_deterministic() {
    let first = minfact(&["census", "--n", "4", "--m", "2"]);
    let second = minfact(&["census", "--n", "4", "--m", "2"]);
    assert_eq!(first, second);
}

#[test]
fn usage_errors_exit_2() {
    let (code, stdout, stderr) = minfact(&["g", "--alpha", "3", "--m", "1"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("m >= 2"));

    let (code, _, stderr) = minfact(&["h", "--alpha", "zebra"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("bad partition part"));

    let (code, _, _) = minfact(&["oracle", "--alpha", "3"]);
    assert_eq!(code, 2);

    let (code, _, stderr) = minfact(&["verify", "--id", "MAIN1", "--order", "3"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("needs --m"));

    let (code, _, _) = minfact(&["series", "--id", "G", "--order", "2"]);
    assert_eq!(code, 2);
}

#[test]
fn unknown_flags_exit_2_with_usage_on_stderr() {
    let (code, stdout, stderr) = minfact(&["h", "--alpha", "3", "--bogus"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(stderr.contains("Usage:"));
}

#[test]
fn budget_refusals_exit_3() {
    let (code, stdout, stderr) = minfact(&[
        "oracle",
        "--alpha",
        "1,1,1,1,1,1,1,1,1",
        "--transpositions",
    ]);
    assert_eq!(code, 3);
    assert!(stdout.is_empty());
    assert!(stderr.contains("budget exceeded"));

    let (code, _, stderr) = minfact(&["trees", "--alpha", "5", "--m", "2"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("budget exceeded"));
}

#[test]
fn raised_budgets_unlock_larger_inputs() {
    let (code, stdout, _) = minfact(&["trees", "--alpha", "5", "--m", "2", "--max-n", "5"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("\"planted_count\":\"126\""));
    assert!(stdout.contains("\"balanced_count\":\"42\""));
    assert!(stdout.contains("\"match\":true"));

    let (code, _, _) = minfact(&["oracle", "--alpha", "3", "--m", "2", "--budget", "5"]);
    assert_eq!(code, 3);
}

#[test]
fn selftest_reports_every_criterion_and_passes() {
    let (code, stdout, _) = minfact(&["selftest"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("{\"pass\":true,\"criteria\":["));
    assert_eq!(stdout.matches("\"number\":").count(), 9);
    assert_eq!(stdout.matches("\"pass\":true").count(), 10);
}
