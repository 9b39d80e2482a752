use std::path::PathBuf;
use std::process::{Command, Output};

use braided_orbits::hecke::{write_rmatrix_json, HeckeSymmetry};
use braided_orbits::scalar::Scalar;
use serde_json::Value;

fn braided(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braided"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn json_run(args: &[&str]) -> (i32, String) {
    let mut all = args.to_vec();
    all.extend(["--no-timing", "--format", "json"]);
    let out = braided(&all);
    (code(&out), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn golden_reports() {
    let cases: &[(&str, &[&str], i32)] = &[
        (
            "check_r_dj_gl2.json",
            &["check-r", "--builtin", "dj_gl", "--N", "2", "--q", "7/5"],
            0,
        ),
        (
            "birank_superflip11.json",
            &["birank", "--builtin", "superflip", "--m", "1", "--n", "1"],
            0,
        ),
        (
            "orbit_dj_gl2.json",
            &[
                "orbit",
                "--builtin",
                "dj_gl",
                "--N",
                "2",
                "--q",
                "7/5",
                "--mu",
                "1,2",
            ],
            0,
        ),
        (
            "cotangent_flip2.json",
            &["cotangent", "--builtin", "flip", "--N", "2", "--mu", "1,2"],
            0,
        ),
        (
            "param_q_super11.json",
            &["param", "--builtin", "q_super", "--m", "1", "--n", "1"],
            0,
        ),
        (
            "koszul_dj_gl2.json",
            &["koszul", "--builtin", "dj_gl", "--N", "2", "--q", "7/5"],
            1,
        ),
        (
            "mrea_flip2.json",
            &["mrea", "--builtin", "flip", "--N", "2", "--mu", "0,3*h"],
            0,
        ),
        (
            "ch_q_super11.json",
            &[
                "ch",
                "--builtin",
                "q_super",
                "--m",
                "1",
                "--n",
                "1",
                "--q",
                "9/7",
            ],
            0,
        ),
    ];
    for (file, args, want) in cases {
        let (c, stdout) = json_run(args);
        assert_eq!(c, *want, "{file}");
        assert_eq!(stdout, golden(file), "{file}");
    }
}

#[test]
fn smoke_matrix() {
    let cases: &[(&[&str], i32)] = &[
        (
            &["check-r", "--builtin", "superflip", "--m", "2", "--n", "1"],
            0,
        ),
        (
            &[
                "birank",
                "--builtin",
                "q_super",
                "--m",
                "2",
                "--n",
                "1",
                "--q",
                "9/7",
            ],
            0,
        ),
        (&["ch", "--builtin", "flip", "--N", "2"], 0),
        (
            &[
                "param",
                "--builtin",
                "dj_gl",
                "--N",
                "2",
                "--q",
                "7/5",
                "--mu",
                "1,2",
            ],
            0,
        ),
        (
            &["orbit", "--builtin", "flip", "--N", "2", "--mu", "1,1"],
            1,
        ),
        (
            &[
                "orbit",
                "--builtin",
                "q_super",
                "--m",
                "3",
                "--n",
                "2",
                "--q",
                "1",
                "--sampled",
            ],
            0,
        ),
        (
            &["cotangent", "--builtin", "dj_gl", "--N", "1", "--q", "q"],
            0,
        ),
        (
            &[
                "koszul",
                "--builtin",
                "flip",
                "--N",
                "2",
                "--check",
                "conjecture1",
            ],
            0,
        ),
        (
            &[
                "koszul",
                "--builtin",
                "superflip",
                "--m",
                "1",
                "--n",
                "1",
                "--check",
                "d2",
            ],
            0,
        ),
        (
            &[
                "mrea",
                "--builtin",
                "q_super",
                "--m",
                "1",
                "--n",
                "1",
                "--q",
                "9/7",
            ],
            0,
        ),
    ];
    for (args, want) in cases {
        let out = braided(args);
        assert_eq!(
            code(&out),
            *want,
            "{args:?}\n{}",
            String::from_utf8_lossy(&out.stdout)
        );
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.starts_with(args[0]), "{args:?}");
    }
}

#[test]
fn exit_codes_for_bad_input() {
    // missing required flag, unparsable scalar, too large a computation
    assert_eq!(code(&braided(&["check-r", "--builtin", "flip"])), 2);
    assert_eq!(
        code(&braided(&[
            "param",
            "--builtin",
            "flip",
            "--N",
            "2",
            "--mu",
            "1,("
        ])),
        2
    );
    assert_eq!(
        code(&braided(&[
            "birank",
            "--builtin",
            "flip",
            "--N",
            "4",
            "--depth",
            "30"
        ])),
        3
    );
    assert_eq!(code(&braided(&["no-such-command"])), 2);
}

#[test]
fn report_schema() {
    let (_, stdout) = json_run(&[
        "orbit",
        "--builtin",
        "dj_gl",
        "--N",
        "2",
        "--q",
        "7/5",
        "--mu",
        "1,2",
    ]);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["command"], "orbit");
    assert!(v["inputs"].is_object());
    assert!(v["elapsed_ms"].is_null());
    for c in v["checks"].as_array().unwrap() {
        assert!(c["name"].is_string());
        assert!(["pass", "fail", "info"].contains(&c["status"].as_str().unwrap()));
    }
    // timing is present unless switched off
    let out = braided(&[
        "check-r",
        "--builtin",
        "flip",
        "--N",
        "2",
        "--format",
        "json",
    ]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let p = path.to_str().unwrap();
    let args = [
        "birank",
        "--builtin",
        "superflip",
        "--m",
        "1",
        "--n",
        "1",
        "--out",
        p,
    ];
    let (c, stdout) = json_run(&args);
    assert_eq!(c, 0);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout);
}

#[test]
fn rmatrix_file_round_trip() {
    let q = Scalar::ratio(9, 7);
    let hs = HeckeSymmetry::q_super(1, 1, q.clone()).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    std::fs::write(&path, write_rmatrix_json(hs.dim(), &q, hs.r().matrix())).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(code(&braided(&["check-r", "--file", p])), 0);
    let (c, stdout) = json_run(&["birank", "--file", p]);
    assert_eq!(c, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    let bi = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "bi-rank")
        .unwrap();
    assert_eq!(bi["status"], "pass");
}
