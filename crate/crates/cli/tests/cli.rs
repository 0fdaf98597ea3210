//! Golden-output tests for every subcommand of the `nlposets` binary.
//!
//! Each case runs the binary from the crate directory and compares exit
//! status, stdout and stderr with `tests/golden/<name>.out`. Set
//! `NLPOSETS_BLESS=1` to rewrite the golden files.

use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Outcome {
    fn render(&self) -> String {
        format!(
            "exit: {}\n--- stdout\n{}--- stderr\n{}",
            self.code, self.stdout, self.stderr
        )
    }
}

fn run(args: &[&str], stdin: Option<&str>) -> Outcome {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_nlposets"))
        .args(args)
        .current_dir(crate_dir())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    let out = child.wait_with_output().unwrap();
    Outcome {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn golden(name: &str, args: &[&str]) {
    golden_with_input(name, args, None)
}

fn golden_with_input(name: &str, args: &[&str], stdin: Option<&str>) {
    let actual = run(args, stdin).render();
    let again = run(args, stdin).render();
    assert_eq!(actual, again, "{name}: rerun differs");
    let path: PathBuf = crate_dir().join("tests/golden").join(format!("{name}.out"));
    if std::env::var_os("NLPOSETS_BLESS").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, &actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| {
        panic!(
            "{}: {e}; run with NLPOSETS_BLESS=1 to create it",
            path.display()
        )
    });
    assert_eq!(
        actual,
        expected,
        "{name}: output differs from {}",
        path.display()
    );
}

#[test]
fn count_paths() {
    golden(
        "count_nl_3_22free",
        &["count", "--family", "nl-3-22free", "--max-n", "5"],
    );
    golden(
        "count_av12_34_zero",
        &["count", "--family", "av12-34", "--max-n", "0"],
    );
    golden(
        "count_hierarchy_nl",
        &["count", "--family", "nl", "--max-n", "5"],
    );
    golden(
        "count_hierarchy_nl_22free",
        &["count", "--family", "nl-22free", "--max-n", "5"],
    );
    golden(
        "count_hierarchy_nl_3free",
        &[
            "count", "--family", "nl-3free", "--max-n", "5", "--method", "brute",
        ],
    );
    golden(
        "count_interval_orders",
        &[
            "count",
            "--family",
            "interval-orders",
            "--max-n",
            "8",
            "--format",
            "bfile",
        ],
    );
    golden(
        "count_stanley_formula",
        &[
            "count", "--family", "stanley", "--min-n", "0", "--max-n", "12",
        ],
    );
    golden(
        "count_noiso_formula",
        &[
            "count",
            "--family",
            "nl-3free-noiso",
            "--max-n",
            "12",
            "--method",
            "formula",
        ],
    );
    golden(
        "count_av_fishburn_brute",
        &["count", "--family", "avfishburn", "--max-n", "8"],
    );
    golden(
        "count_av12_34_dp",
        &[
            "count", "--family", "av12-34", "--min-n", "0", "--max-n", "30", "--format", "bfile",
        ],
    );
    golden(
        "count_by_minima_formula",
        &[
            "count",
            "--family",
            "nl-3free",
            "--max-n",
            "6",
            "--by-minima",
        ],
    );
    golden(
        "count_by_minima_brute",
        &[
            "count",
            "--family",
            "nl-3free-noiso",
            "--max-n",
            "6",
            "--by-minima",
            "--method",
            "brute",
        ],
    );
}

#[test]
fn count_errors() {
    golden(
        "count_unknown_family",
        &["count", "--family", "nl-4free", "--max-n", "3"],
    );
    golden(
        "count_no_formula",
        &[
            "count",
            "--family",
            "nl-22free",
            "--max-n",
            "3",
            "--method",
            "formula",
        ],
    );
    golden(
        "count_min_above_max",
        &["count", "--family", "nl", "--min-n", "4", "--max-n", "3"],
    );
    golden(
        "count_poset_guard",
        &["count", "--family", "nl", "--max-n", "12"],
    );
    golden(
        "count_permutation_guard",
        &["count", "--family", "av1-23", "--max-n", "13"],
    );
    golden(
        "count_config_guard",
        &[
            "--config",
            "fixtures/tight.conf",
            "count",
            "--family",
            "nl",
            "--max-n",
            "6",
        ],
    );
    golden(
        "count_memory_guard",
        &[
            "--config",
            "fixtures/tight.conf",
            "count",
            "--family",
            "av12-34",
            "--max-n",
            "100",
        ],
    );
}

#[test]
fn enumerate_paths() {
    golden(
        "enumerate_nl_3_22free",
        &["enumerate", "--family", "nl-3-22free", "--max-n", "3"],
    );
    golden(
        "enumerate_by_minima",
        &[
            "enumerate",
            "--family",
            "nl-3free",
            "--min-n",
            "3",
            "--max-n",
            "3",
            "--by-minima",
        ],
    );
    golden(
        "enumerate_avoiders",
        &[
            "enumerate",
            "--family",
            "av43-12",
            "--min-n",
            "4",
            "--max-n",
            "4",
        ],
    );
    golden(
        "enumerate_interval_orders",
        &["enumerate", "--family", "interval-orders", "--max-n", "3"],
    );
}

#[test]
fn biject_paths() {
    let cases = [
        ("word", "posets-3-22free"),
        ("bicoloured", "words"),
        ("lambda", "bicoloured"),
        ("psi", "perms-3-12"),
        ("stanley", "posets-3free"),
        ("decorated", "posets-3free"),
    ];
    for (map, input) in cases {
        let path = format!("fixtures/biject/{input}.txt");
        golden(
            &format!("biject_{map}"),
            &["biject", "--map", map, "--in", &path],
        );
    }
    let inverse = [
        ("word", "words"),
        ("bicoloured", "bicoloured"),
        ("lambda", "perms"),
        ("psi", "bicoloured"),
        ("stanley", "stanley"),
        ("decorated", "decorated"),
    ];
    for (map, input) in inverse {
        let path = format!("fixtures/biject/{input}.txt");
        golden(
            &format!("biject_{map}_inverse"),
            &["biject", "--map", map, "--inverse", "--in", &path],
        );
    }
    golden_with_input(
        "biject_stdin",
        &["biject", "--map", "bicoloured"],
        Some("# sample\n0:3 1:4 0:2 0:1\n"),
    );
    golden_with_input(
        "biject_bad_line",
        &["biject", "--map", "stanley"],
        Some("3; 1<2\n3; 1<2,2<3\n"),
    );
    golden(
        "biject_missing_file",
        &[
            "biject",
            "--map",
            "word",
            "--in",
            "fixtures/biject/absent.txt",
        ],
    );
}

#[test]
fn biject_round_trips_through_files() {
    let dir = std::env::temp_dir().join(format!("nlposets-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let chain = [
        ("word", "posets-3-22free"),
        ("bicoloured", "words"),
        ("lambda", "bicoloured"),
    ];
    for (map, input) in chain {
        let out = dir.join(format!("{map}.txt"));
        let src = format!("fixtures/biject/{input}.txt");
        let r = run(
            &[
                "biject",
                "--map",
                map,
                "--in",
                &src,
                "--out",
                out.to_str().unwrap(),
            ],
            None,
        );
        assert_eq!(r.code, 0, "{}", r.stderr);
        let back = dir.join(format!("{map}.back.txt"));
        let r = run(
            &[
                "biject",
                "--map",
                map,
                "--inverse",
                "--in",
                out.to_str().unwrap(),
                "--out",
                back.to_str().unwrap(),
            ],
            None,
        );
        assert_eq!(r.code, 0, "{}", r.stderr);
        let original = std::fs::read_to_string(crate_dir().join(&src)).unwrap();
        assert_eq!(std::fs::read_to_string(&back).unwrap(), original, "{map}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_dir_from_config() {
    let dir = std::env::temp_dir().join(format!("nlposets-outdir-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let conf = dir.join("out.conf");
    std::fs::write(
        &conf,
        format!("output_dir = {}\n", dir.join("results").display()),
    )
    .unwrap();
    let r = run(
        &[
            "--config",
            conf.to_str().unwrap(),
            "analyze",
            "ratios",
            "--terms",
            "fixtures/analysis/av12-34.txt",
            "--out",
            "r.csv",
        ],
        None,
    );
    assert_eq!(r.code, 0, "{}", r.stderr);
    let text = std::fs::read_to_string(dir.join("results/r.csv")).unwrap();
    assert!(text.starts_with("# ratios"), "{text}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_paths() {
    for (suite, n) in [("matrices", "4"), ("bijections", "5"), ("counting", "7")] {
        let r = run(&["verify", "--suite", suite, "--max-n", n], None);
        assert_eq!(r.code, 0, "{suite}: {}{}", r.stdout, r.stderr);
        assert!(
            r.stdout.lines().filter(|l| !l.starts_with("PASS")).count() == 1,
            "{}",
            r.stdout
        );
        assert!(r.stdout.trim_end().ends_with(", 0 failed"), "{}", r.stdout);
    }
    golden(
        "verify_matrix_guard",
        &["verify", "--suite", "matrices", "--max-n", "8"],
    );
    golden(
        "verify_counting_guard",
        &["verify", "--suite", "counting", "--max-n", "11"],
    );
    golden(
        "verify_config_guard",
        &[
            "--config",
            "fixtures/tight.conf",
            "verify",
            "--suite",
            "bijections",
            "--max-n",
            "6",
        ],
    );
    golden(
        "verify_series_guard",
        &[
            "--config",
            "fixtures/tight.conf",
            "verify",
            "--suite",
            "series",
            "--max-n",
            "557",
        ],
    );
    golden("verify_unknown_suite", &["verify", "--suite", "everything"]);
}

#[test]
fn analyze_paths() {
    let terms = "fixtures/analysis/av12-34.txt";
    golden(
        "analyze_ratios",
        &["analyze", "ratios", "--terms", terms, "--range", "0..10"],
    );
    golden(
        "analyze_transforms",
        &[
            "analyze",
            "transforms",
            "--terms",
            terms,
            "--gamma",
            "log4inv",
            "--alpha",
            "0.3333333333333333",
        ],
    );
    golden(
        "analyze_transforms_tab",
        &[
            "analyze",
            "transforms",
            "--terms",
            terms,
            "--gamma",
            "0.7",
            "--range",
            "30..40",
            "--sep",
            "\t",
        ],
    );
    golden(
        "analyze_directfit",
        &[
            "analyze",
            "directfit",
            "--terms",
            terms,
            "--range",
            "20..40",
        ],
    );
    golden(
        "analyze_olsfit_fixed",
        &["analyze", "olsfit", "--terms", terms, "--range", "10..40"],
    );
    golden(
        "analyze_olsfit_free",
        &[
            "analyze", "olsfit", "--terms", terms, "--range", "10..40", "--gamma", "free",
        ],
    );
    golden(
        "analyze_free_gamma_directfit",
        &["analyze", "directfit", "--terms", terms, "--gamma", "free"],
    );
    golden(
        "analyze_bad_range",
        &["analyze", "olsfit", "--terms", terms, "--range", "10..90"],
    );
    golden(
        "analyze_bad_gamma",
        &["analyze", "ratios", "--terms", terms, "--gamma", "-2"],
    );
    golden(
        "analyze_bad_terms",
        &["analyze", "ratios", "--terms", "fixtures/biject/words.txt"],
    );
}

#[test]
fn oeis_paths() {
    let cache = "fixtures/oeis";
    for id in [
        "A006455", "A135922", "A139382", "A323842", "A113226", "A022493",
    ] {
        golden(
            &format!("oeis_compare_{id}"),
            &["oeis", "compare", id, "--cache", cache, "--offline"],
        );
    }
    golden(
        "oeis_fetch_cached",
        &["oeis", "fetch", "A022493", "--cache", cache, "--offline"],
    );
    golden(
        "oeis_compare_shifted",
        &[
            "oeis",
            "compare",
            "A113226",
            "--cache",
            cache,
            "--offline",
            "--shift",
            "1",
        ],
    );
    golden(
        "oeis_compare_max_n",
        &[
            "oeis",
            "compare",
            "A135922",
            "--cache",
            cache,
            "--offline",
            "--max-n",
            "4",
        ],
    );
    golden(
        "oeis_compare_no_overlap",
        &[
            "oeis",
            "compare",
            "A135922",
            "--cache",
            cache,
            "--offline",
            "--shift",
            "50",
        ],
    );
    golden(
        "oeis_fetch_offline_cold",
        &[
            "oeis",
            "fetch",
            "A113226",
            "--cache",
            "fixtures/absent-cache",
            "--offline",
        ],
    );
    golden(
        "oeis_compare_unknown",
        &["oeis", "compare", "A000045", "--cache", cache, "--offline"],
    );
    golden("oeis_bad_id", &["oeis", "fetch", "A12", "--offline"]);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args, None).code;
    assert_eq!(
        code(&["count", "--family", "nl-3-22free", "--max-n", "5"]),
        0
    );
    assert_eq!(code(&["count", "--family", "nl", "--max-n", "x"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["count", "--family", "nl", "--max-n", "30"]), 3);
    assert_eq!(
        code(&[
            "oeis",
            "fetch",
            "A113226",
            "--cache",
            "fixtures/absent-cache",
            "--offline"
        ]),
        4
    );
    assert_eq!(
        code(&[
            "oeis",
            "compare",
            "A113226",
            "--cache",
            "fixtures/oeis",
            "--offline",
            "--shift",
            "1"
        ]),
        1
    );
    assert_eq!(code(&["--help"]), 0);
}
