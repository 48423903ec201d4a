use std::io::Write;
use std::process::{Command, Output};

fn sixpoint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sixpoint"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    text.lines()
        .find_map(|l| l.strip_prefix(key)?.strip_prefix(" = "))
}

#[test]
fn routh_landmark_through_the_binary() {
    let o = sixpoint(&[
        "area",
        "--ratios",
        "d=2,e=2,f=2",
        "--mode",
        "cevian",
        "--format",
        "structured",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(field(&out, "cevian.formula"), Some("1/7"));
    assert_eq!(field(&out, "cevian.numerator"), Some("49"));
}

#[test]
fn check_with_triangle_runs_the_oracle() {
    let o = sixpoint(&[
        "check",
        "--ratios",
        "d=1,e=1,f=1",
        "--triangle",
        "0,0; 1,0; 0,1",
        "--mode",
        "ceva",
        "--format",
        "structured",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(field(&out, "ceva.holds"), Some("true"));
    assert_eq!(field(&out, "ceva.oracle"), Some("true"));
    assert_eq!(field(&out, "agreement"), Some("true"));
}

#[test]
fn six_point_values_from_a_config_file() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(
        file,
        "# all ones\nmode = sixpoint-edges\na+ = 1\na- = 1\nb+ = 1"
    )
    .unwrap();
    writeln!(file, "b- = 1\nc+ = 1\nc- = 1").unwrap();
    let path = file.path().to_str().unwrap();
    let o = sixpoint(&["area", "--config", path, "--format", "structured"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert_eq!(field(&stdout(&o), "sixpoint-edges.formula"), Some("1/4"));

    // Flags override file fields.
    let o = sixpoint(&[
        "area",
        "--config",
        path,
        "--ratios",
        "a+=1/2",
        "--format",
        "structured",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&stdout(&o), "ratio.a+"), Some("1/2"));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["check", "--ratios", "d=0/0,e=1,f=1"][..],
        &["check", "--ratios", "d=1/0,e=1,f=1"],
        &["check", "--ratios", "d=1,e=1"],
        &["check", "--ratios", "d=1,e=1,f=1,a+=1"],
        &["area", "--ratios", "d=1,e=1,f=1", "--mode", "nonexistent"],
        &[
            "check",
            "--ratios",
            "d=1,e=1,f=1",
            "--triangle",
            "0,0; 1,1; 2,2",
        ],
        &["fuzz", "--trials", "0"],
        &["fuzz", "--max-magnitude", "0"],
        &["check", "--config", "/nonexistent/config"],
        &["frobnicate"],
    ] {
        let o = sixpoint(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_zero() {
    assert_eq!(sixpoint(&["--help"]).status.code(), Some(0));
}

#[test]
fn text_and_structured_carry_the_same_fields() {
    let args = ["embed", "--ratios", "d=2,e=3,f=1/6"];
    let text = stdout(&sixpoint(&args));
    let structured = stdout(&sixpoint(
        &[&args[..], &["--format", "structured"]].concat(),
    ));
    assert_eq!(text.lines().count(), structured.lines().count());
    for (t, s) in text.lines().zip(structured.lines()) {
        let (k, v) = s.split_once(" = ").unwrap();
        assert_eq!(t.split_whitespace().next(), Some(k));
        assert!(t.trim_end().ends_with(v.trim()));
    }
    assert_eq!(field(&structured, "agreement"), Some("true"));
}

#[test]
fn fuzz_seven_has_no_disagreements() {
    let o = sixpoint(&[
        "fuzz",
        "--trials",
        "1000",
        "--seed",
        "7",
        "--format",
        "structured",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(field(&stdout(&o), "disagreements"), Some("0"));
}

#[test]
fn doubly_infinite_draw_is_tallied_and_exits_zero() {
    // Trial 0 of seed 154 draws a+ = a- = inf.
    let o = sixpoint(&[
        "fuzz",
        "--trials",
        "1",
        "--seed",
        "154",
        "--format",
        "structured",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(field(&out, "multi_infinite_draws"), Some("1"));
    assert_eq!(field(&out, "disagreements"), Some("0"));

    let replay = stdout(&sixpoint(&[
        "fuzz",
        "--seed",
        "154",
        "--replay",
        "0",
        "--format",
        "structured",
    ]));
    assert_eq!(field(&replay, "six.ratio.a+"), Some("inf"));
    assert_eq!(field(&replay, "six.ratio.a-"), Some("inf"));
}

#[test]
fn fuzz_output_is_byte_identical_across_runs() {
    let args = [
        "fuzz",
        "--trials",
        "300",
        "--seed",
        "42",
        "--mode",
        "sixpoint-edges",
    ];
    let a = sixpoint(&args);
    let b = sixpoint(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
