//! End-to-end tests of the qgamma binary: formats, outputs, exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

use qgamma_cli::formats::{parse_gsem, parse_qfz};
use qgamma_core::fixtures;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_qgamma")
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn bundled_files_match_the_fixtures() {
    let pairs = [
        ("lz3.gsem", fixtures::lz3()),
        ("const2.gsem", fixtures::const2()),
        ("mod16.gsem", fixtures::mod16()),
        ("mod4mul.gsem", fixtures::mod4mul()),
    ];
    for (file, expect) in pairs {
        let text = std::fs::read_to_string(data(file)).unwrap();
        assert_eq!(parse_gsem(&text).unwrap(), expect, "{file}");
    }
    let g = fixtures::lz3();
    let text = std::fs::read_to_string(data("lz3_mu.qfz")).unwrap();
    assert_eq!(
        parse_qfz(&text, g.carrier()).unwrap(),
        fixtures::lz3_example_mu(&g)
    );
}

#[test]
fn validate_and_regular() {
    let out = run(&["validate", data("mod16.gsem").to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "ok: |S|=4 |G|=4 both-sided=true\n");

    let out = run(&["regular", data("const2.gsem").to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "regular: false\nfailing: b\n");
}

#[test]
fn ideal_sides() {
    let lz3 = data("lz3.gsem");
    let lz3 = lz3.to_str().unwrap();
    let out = run(&["ideal", lz3, "a", "--side", "right"]);
    assert_eq!(stdout(&out), "ideal(right): true\n");
    let out = run(&["ideal", lz3, "a", "--side", "left"]);
    assert_eq!(stdout(&out), "ideal(left): false\n");
    // empty subset is an input error
    let out = run(&["ideal", lz3]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn level_image_compose() {
    let lz3 = data("lz3.gsem");
    let mu = data("lz3_mu.qfz");
    let (lz3, mu) = (lz3.to_str().unwrap(), mu.to_str().unwrap());

    let out = run(&["level", lz3, mu, "--t", "7/10"]);
    assert_eq!(stdout(&out), "{a,b}\n");
    let out = run(&["level", lz3, mu, "--t", "0.7"]);
    assert_eq!(stdout(&out), "{a,b}\n");

    let out = run(&["image", lz3, mu]);
    assert_eq!(stdout(&out), "{3/5,7/10,4/5}\n");

    let out = run(&["compose", lz3, mu, mu]);
    assert_eq!(
        stdout(&out),
        "qfz v1\nQ: p\nmu a p 4/5\nmu b p 7/10\nmu c p 3/5\n"
    );
}

#[test]
fn qideal_reports_witnesses() {
    let lz3 = data("lz3.gsem");
    let mu = data("lz3_mu.qfz");
    let (lz3, mu) = (lz3.to_str().unwrap(), mu.to_str().unwrap());
    let out = run(&["qideal", lz3, mu, "--side", "right"]);
    assert_eq!(stdout(&out), "q-fuzzy-ideal(right): true\n");
    let out = run(&["qideal", lz3, mu, "--side", "left"]);
    let text = stdout(&out);
    assert!(text.starts_with("q-fuzzy-ideal(left): false\nwitness: "));
}

#[test]
fn operators_render_classes_and_unity() {
    let out = run(&["operators", data("mod16.gsem").to_str().unwrap(), "--kind", "right"]);
    let text = stdout(&out);
    assert!(text.contains("kind: right\nclasses: 4\n"));
    assert!(text.contains("unity: [3,13]\n"));
}

#[test]
fn map_star_prime_of_characteristic() {
    // sigma = chi of {0} over S maps to chi of the zero class of R
    let dir = tempfile::tempdir().unwrap();
    let sigma = dir.path().join("sigma.qfz");
    std::fs::write(&sigma, "qfz v1\nQ: p\nmu 0 p 1\n").unwrap();
    let out = run(&[
        "map",
        data("mod4mul.gsem").to_str().unwrap(),
        sigma.to_str().unwrap(),
        "--kind",
        "star-prime",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "qfz v1\nQ: p\nmu [0,0] p 1/1\n");
}

#[test]
fn verify_exit_codes() {
    // all checks agree
    let out = run(&["verify", "LZ3", "--theorem", "3.7"]);
    assert_eq!(out.status.code(), Some(0));
    // inapplicable theorem for a one-sided structure
    let out = run(&["verify", "LZ3", "--theorem", "5.13"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown theorem
    let out = run(&["verify", "LZ3", "--theorem", "9.9"]);
    assert_eq!(out.status.code(), Some(2));
    // missing file
    let out = run(&["validate", "no-such-file.gsem"]);
    assert_eq!(out.status.code(), Some(2));
    // 4.6 on a non-regular structure is a precondition error
    let out = run(&["verify", "CONST2", "--theorem", "4.6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_reports_findings_with_exit_one() {
    // |Q| = 2 exposes the level-criterion ambiguity
    let out = run(&[
        "search",
        "--property",
        "level-criterion",
        "--max-s",
        "1",
        "--max-g",
        "1",
        "--grid",
        "3",
        "--q-size",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("discrepancies: 6"));

    // |Q| = 1 is clean
    let out = run(&[
        "search",
        "--property",
        "level-criterion",
        "--max-s",
        "2",
        "--max-g",
        "1",
        "--grid",
        "3",
        "--q-size",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));

    // out of bounds
    let out = run(&["search", "--property", "level-criterion", "--max-s", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["verify", "MOD4MUL", "--theorem", "5.13"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn output_flag_duplicates_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let out = run(&[
        "verify",
        "LZ3",
        "--theorem",
        "3.5",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let file = std::fs::read_to_string(&path).unwrap();
    assert_eq!(file, stdout(&out));
}
