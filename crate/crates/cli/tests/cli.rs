use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use unit_gompertz::UnitGompertz;

fn ugomp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ugomp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn eval(args: &[&str]) -> String {
    let mut all = vec!["eval"];
    all.extend_from_slice(args);
    let o = ugomp(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o).trim_end().to_string()
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli_tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn eval_examples() {
    assert_eq!(eval(&["--fn", "mode", "--alpha", "3", "--beta", "1"]), "1");
    assert_eq!(
        eval(&["--fn", "cdf", "--alpha", "1", "--beta", "1", "--x", "1"]),
        "1"
    );
    assert_eq!(
        eval(&["--fn", "ssr", "--alpha1", "1", "--beta1", "2", "--alpha2", "3", "--beta2", "2"]),
        "0.25"
    );
    let o = ugomp(&["eval", "--fn", "mean", "--alpha", "1", "--beta", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn eval_fifteen_significant_digits() {
    let out = eval(&["--fn", "moment", "--alpha", "1", "--beta", "1", "--n", "1"]);
    assert_eq!(out, "0.596347362323194");
    let lc = eval(&["--fn", "lcbound", "--alpha", "0.25", "--beta", "1"]);
    assert_eq!(lc, "0.25");
}

#[test]
fn every_eval_name_dispatches() {
    let p = ["--alpha", "1.5", "--beta", "2"];
    let cases: &[(&str, &[&str])] = &[
        ("pdf", &["--x", "0.5"]),
        ("logpdf", &["--x", "0.5"]),
        ("cdf", &["--x", "0.5"]),
        ("sf", &["--x", "0.5"]),
        ("quantile", &["--u", "0.5"]),
        ("hazard", &["--x", "0.5"]),
        ("rhr", &["--x", "0.5"]),
        ("mrl", &["--x", "0.5"]),
        ("eit", &["--x", "0.5"]),
        ("mode", &[]),
        ("lcbound", &[]),
        ("moment", &["--n", "2"]),
        ("condmoment", &["--n", "2", "--x", "0.5"]),
        ("meandev", &[]),
        ("lorenz", &["--p", "0.5"]),
        ("bonferroni", &["--p", "0.5"]),
        ("zenga", &["--x", "0.5"]),
        ("renyi", &["--gamma", "2"]),
        ("shannon", &[]),
        ("song", &[]),
        ("osmoment", &["--n", "4", "--j", "2", "--k", "1"]),
    ];
    let d = UnitGompertz::new(1.5, 2.0).unwrap();
    for (name, extra) in cases {
        let mut args = vec!["--fn", name];
        args.extend_from_slice(&p);
        args.extend_from_slice(extra);
        let v: f64 = eval(&args).parse().unwrap();
        assert!(v.is_finite(), "{name}");
    }
    let q: f64 = eval(&[
        "--fn", "quantile", "--alpha", "1.5", "--beta", "2", "--u", "0.5",
    ])
    .parse()
    .unwrap();
    assert!((q - d.median()).abs() < 1e-14);
}

#[test]
fn help_lists_every_name() {
    let help = stdout(&ugomp(&["eval", "--help"]));
    for name in [
        "pdf",
        "logpdf",
        "cdf",
        "sf",
        "quantile",
        "hazard",
        "rhr",
        "mrl",
        "eit",
        "mode",
        "lcbound",
        "moment",
        "condmoment",
        "meandev",
        "lorenz",
        "bonferroni",
        "zenga",
        "renyi",
        "shannon",
        "song",
        "osmoment",
        "ssr",
    ] {
        assert!(help.contains(name), "{name} missing from help");
    }
}

#[test]
fn domain_errors_exit_two() {
    for args in [
        &[
            "eval", "--fn", "pdf", "--alpha", "-1", "--beta", "1", "--x", "0.5",
        ][..],
        &[
            "eval", "--fn", "pdf", "--alpha", "1", "--beta", "1", "--x", "1.5",
        ],
        &["eval", "--fn", "pdf", "--alpha", "1", "--beta", "1"],
        &[
            "eval", "--fn", "renyi", "--alpha", "1", "--beta", "1", "--gamma", "1",
        ],
        &[
            "curve", "--fn", "pdf", "--alpha", "1", "--beta", "1", "--grid", "0:2:3",
        ],
        &["sample", "--alpha", "1", "--beta", "1", "--n", "0"],
    ] {
        let o = ugomp(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn curve_single_row_and_clamping() {
    let o = ugomp(&[
        "curve",
        "--fn",
        "cdf",
        "--alpha",
        "1",
        "--beta",
        "1",
        "--grid",
        "0.5:0.9:1",
    ]);
    assert_eq!(stdout(&o), format!("x,cdf\n0.5,{}\n", (-1.0f64).exp()));

    let o = ugomp(&[
        "curve", "--fn", "hazard", "--alpha", "2", "--beta", "2", "--grid", "0:1:3",
    ]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "x,hazard");
    assert_eq!(rows.len(), 4);
    assert!(rows[3].starts_with("0.999999999,"));
    assert!(!text.contains('\r'));
}

fn parse_csv(text: &str) -> (String, Vec<Vec<f64>>) {
    let mut lines = text.lines();
    let header = lines.next().unwrap().to_string();
    let rows = lines
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

#[test]
fn curves_match_golden_files() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let mut seen = 0;
    for entry in std::fs::read_dir(&golden).unwrap() {
        let path = entry.unwrap().path();
        let stem = path.file_stem().unwrap().to_str().unwrap().to_string();
        let parts: Vec<&str> = stem.split('_').collect();
        let out = tmp(&format!("{stem}.csv"));
        let o = ugomp(&[
            "curve",
            "--fn",
            parts[0],
            "--alpha",
            parts[1],
            "--beta",
            parts[2],
            "--grid",
            "0.001:0.999:999",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(o.status.success());
        let (h1, want) = parse_csv(&std::fs::read_to_string(&path).unwrap());
        let (h2, got) = parse_csv(&std::fs::read_to_string(&out).unwrap());
        assert_eq!(h1, h2);
        assert_eq!(want.len(), 999);
        assert_eq!(want.len(), got.len());
        for (w, g) in want.iter().zip(&got) {
            assert_eq!(w[0], g[0]);
            assert!(
                (w[1] - g[1]).abs() <= 1e-12 * w[1].abs(),
                "{stem}: {w:?} vs {g:?}"
            );
        }
        seen += 1;
    }
    assert_eq!(seen, 9);
}

#[test]
fn sample_is_deterministic_and_in_support() {
    let args = [
        "sample", "--alpha", "1", "--beta", "1", "--n", "5", "--seed", "42",
    ];
    let a = ugomp(&args);
    let b = ugomp(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let (header, rows) = parse_csv(&stdout(&a));
    assert_eq!(header, "x");
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r[0] > 0.0 && r[0] < 1.0));
}

#[test]
fn sample_passes_kolmogorov_smirnov() {
    let out = tmp("ks.csv");
    let o = ugomp(&[
        "sample",
        "--alpha",
        "0.8",
        "--beta",
        "1.7",
        "--n",
        "100000",
        "--seed",
        "5",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let (_, rows) = parse_csv(&std::fs::read_to_string(&out).unwrap());
    let mut xs: Vec<f64> = rows.into_iter().map(|r| r[0]).collect();
    xs.sort_by(f64::total_cmp);
    let d = UnitGompertz::new(0.8, 1.7).unwrap();
    let n = xs.len() as f64;
    let stat = xs
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = d.cdf(x).unwrap();
            (f - i as f64 / n).abs().max((f - (i + 1) as f64 / n).abs())
        })
        .fold(0.0, f64::max);
    // 1% critical value of the one-sample statistic
    assert!(stat < 1.628 / n.sqrt(), "D = {stat}");
}

#[test]
fn verify_paper_report() {
    let o = ugomp(&["verify-paper"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().filter(|l| l.starts_with("PASS [")).count() >= 9);
    assert!(!text.contains("FAIL"));

    let o = Command::new(env!("CARGO_BIN_EXE_ugomp"))
        .arg("verify-paper")
        .env("UG_TOL", "-1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("FAIL ["));
}
