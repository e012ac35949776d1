use std::io::Write;
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

/// Command hermetic against the developer's real config and cache.
fn eqq(dir: &TempDir, args: &[&str]) -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_eqq"));
    cmd.args(args)
        .env("EQQ_CONFIG", dir.path().join("no-such-config"))
        .env("EQQ_CACHE_DIR", dir.path().join("cache"));
    cmd
}

fn run(dir: &TempDir, args: &[&str]) -> Output {
    eqq(dir, args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn normalize_is_idempotent_on_its_own_output() {
    let dir = TempDir::new().unwrap();
    let out = run(
        &dir,
        &["normalize", "--space", "quadric:5", "(z1*m[2])^2"],
    );
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert_eq!(
        text,
        "(1-kappa) z0 cw^3 cxw m[2] + e^2 cw^2 cxw m[2]\n"
    );
    let again = run(&dir, &["normalize", "--space", "quadric:5", text.trim()]);
    assert!(again.status.success());
    assert_eq!(stdout_of(&again), text);
}

#[test]
fn mul_subcommand_multiplies() {
    let dir = TempDir::new().unwrap();
    let out = run(
        &dir,
        &["mul", "--space", "quadric:4", "z1 m[2]", "z1 m[2]"],
    );
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "0\n");

    let out = run(&dir, &["mul", "--space", "quadric:3", "z0", "z1"]);
    assert_eq!(stdout_of(&out), "xi\n");
}

#[test]
fn json_element_shape() {
    let dir = TempDir::new().unwrap();
    let out = run(
        &dir,
        &["normalize", "--space", "grass", "cxg", "--format", "json"],
    );
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["space"], "grass:2|3+1");
    assert_eq!(v["grading"]["u"], 0);
    assert_eq!(v["grading"]["s"], 4);
    assert_eq!(v["grading"]["w"], -1);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 3);
    for term in terms {
        assert!(term["monomial"].is_object());
        assert!(term["coeff"].is_object());
    }
}

#[test]
fn json_lines_report_shape() {
    let dir = TempDir::new().unwrap();
    let out = run(&dir, &["lines27", "--format", "json", "--trace"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["coefficient"]["a"], 3);
    assert_eq!(v["coefficient"]["b"], 12);
    assert_eq!(v["report"]["total"], 27);
    assert_eq!(v["report"]["type_ii"], 3);
    assert_eq!(v["report"]["type_iv"], 12);
    assert_eq!(v["report"]["c2_set"], "12[C2/e] + 3[C2/C2]");
    assert_eq!(v["trace"].as_array().unwrap().len(), 5);
}

#[test]
fn lines_text_report() {
    let dir = TempDir::new().unwrap();
    let out = run(&dir, &["lines27"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("(3 + 12g) z0^-1 cl cxl m[2]"));
    assert!(text.contains("underlying target: 27 c^2 m0"));
    assert!(text.contains("fixed target: (0 | 3 c^2)"));
    assert!(text.contains("type II: 3"));
    assert!(text.contains("type IV: 12"));
    assert!(text.contains("total: 27"));
    assert!(text.contains("C2-set: 12[C2/e] + 3[C2/C2]"));
}

#[test]
fn cache_cold_warm_and_disabled_agree() {
    let dir = TempDir::new().unwrap();
    let args = ["check-identities", "--space", "quadric:3"];
    let cold = run(&dir, &args);
    assert!(cold.status.success());
    assert!(
        dir.path().join("cache").join("tables.json").is_file(),
        "first run persists the product tables"
    );
    let warm = run(&dir, &args);
    assert!(warm.status.success());
    let nocache = run(
        &dir,
        &["check-identities", "--space", "quadric:3", "--no-cache"],
    );
    assert!(nocache.status.success());
    assert_eq!(stdout_of(&cold), stdout_of(&warm));
    assert_eq!(stdout_of(&cold), stdout_of(&nocache));
}

#[test]
fn check_identities_covers_every_space_kind() {
    let dir = TempDir::new().unwrap();
    for space in ["quadric:1", "quadric:4", "proj:3|2", "proj:1|0", "grass"] {
        let out = run(&dir, &["check-identities", "--space", space, "--trace"]);
        assert!(out.status.success(), "{space}");
        let text = stdout_of(&out);
        assert!(text.contains("all hold"), "{space}: {text}");
        assert!(text.lines().filter(|l| l.starts_with("ok ")).count() > 4);
    }
}

#[test]
fn exit_codes_by_failure_class() {
    let dir = TempDir::new().unwrap();

    let usage = run(&dir, &["normalize", "--bogus-flag", "x"]);
    assert_eq!(usage.status.code(), Some(1));

    let missing_coset = run(&dir, &["basis", "--space", "grass"]);
    assert_eq!(missing_coset.status.code(), Some(1));

    let parse = run(&dir, &["normalize", "--space", "quadric:3", "z0 +"]);
    assert_eq!(parse.status.code(), Some(2));

    let domain = run(&dir, &["restrict", "--space", "proj:2|2", "cw"]);
    assert_eq!(domain.status.code(), Some(3));

    let not_divisible = run(
        &dir,
        &[
            "divide", "--space", "grass", "--zeta", "z1", "--power", "2", "cxg",
        ],
    );
    assert_eq!(not_divisible.status.code(), Some(3));

    let help = run(&dir, &["--help"]);
    assert_eq!(help.status.code(), Some(0));
}

#[test]
fn stdin_dash_reads_one_expression() {
    let dir = TempDir::new().unwrap();
    let mut child = eqq(&dir, &["normalize", "--space", "quadric:2", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"z0 z1\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "xi\n");

    let both = eqq(&dir, &["mul", "--space", "quadric:2", "-", "-"])
        .stdin(Stdio::null())
        .output()
        .unwrap();
    assert_eq!(both.status.code(), Some(1));
}

#[test]
fn config_file_supplies_space_and_flag_overrides_it() {
    let dir = TempDir::new().unwrap();
    let cfg = dir.path().join("eqq.conf");
    std::fs::write(&cfg, "# local defaults\nspace = quadric:3\n").unwrap();

    let mut cmd = Command::new(env!("CARGO_BIN_EXE_eqq"));
    let out = cmd
        .args(["grading", "cw cxw"])
        .env("EQQ_CONFIG", &cfg)
        .env("EQQ_CACHE_DIR", dir.path().join("cache"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("(u=2, s=2, w=0)"));

    let mut cmd = Command::new(env!("CARGO_BIN_EXE_eqq"));
    let out = cmd
        .args(["grading", "--space", "quadric:5", "m[4]"])
        .env("EQQ_CONFIG", &cfg)
        .env("EQQ_CACHE_DIR", dir.path().join("cache"))
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("(u=8, s=0, w=3)"));
}

#[test]
fn basis_listing_matches_published_table() {
    let dir = TempDir::new().unwrap();
    let out = run(&dir, &["basis", "--space", "grass", "--coset", "2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let cells: Vec<&str> = text
        .lines()
        .map(|l| l.split("  @  ").next().unwrap())
        .collect();
    assert_eq!(
        cells,
        [
            "z1^2",
            "z1 cl",
            "cl^2",
            "z1 m[2]",
            "cl m[2]",
            "z0^-1 cl cxl m[2]"
        ]
    );
}

#[test]
fn diagram_formats() {
    let dir = TempDir::new().unwrap();
    let ascii = run(&dir, &["diagram", "--kind", "ro2-basis", "--space", "quadric:4"]);
    assert!(ascii.status.success());
    assert!(stdout_of(&ascii).contains("u across, s up"));

    let svg = run(
        &dir,
        &[
            "diagram", "--kind", "ro2-basis", "--space", "quadric:4", "--format", "svg",
        ],
    );
    assert!(svg.status.success());
    assert!(stdout_of(&svg).starts_with("<svg"));

    let chart = run(&dir, &["diagram", "--kind", "hpoint-chart"]);
    assert!(chart.status.success());
    assert!(stdout_of(&chart).contains("# Burnside ring"));

    let json = run(
        &dir,
        &["diagram", "--kind", "hpoint-chart", "--format", "json"],
    );
    assert_eq!(json.status.code(), Some(1));

    let svg_elsewhere = run(
        &dir,
        &["normalize", "--space", "grass", "cg", "--format", "svg"],
    );
    assert_eq!(svg_elsewhere.status.code(), Some(1));
}

#[test]
fn restrict_and_fixed_text() {
    let dir = TempDir::new().unwrap();
    let rho = run(&dir, &["restrict", "--space", "quadric:3", "m[1] m[2]"]);
    assert!(rho.status.success());
    assert_eq!(stdout_of(&rho), "0\n");

    let fixed = run(&dir, &["fixed", "--space", "quadric:3", "cw"]);
    assert!(fixed.status.success());
    assert_eq!(stdout_of(&fixed), "(c | 1)\n");
}
