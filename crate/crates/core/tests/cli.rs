use std::io::Write;
use std::process::{Command, Output, Stdio};

fn eus_lab(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_eus-lab"))
        .args(args)
        .env_remove("EUS_LAB_WORKERS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child
            .stdin
            .as_mut()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn construct_then_compute() {
    let built = eus_lab(
        &["construct", "--family", "tadpole", "--params", "n=7,g=4"],
        None,
    );
    assert!(built.status.success());
    let computed = eus_lab(
        &["compute", "--index", "eus", "--in", "-"],
        Some(&stdout(&built)),
    );
    assert!(computed.status.success());
    // 3*sqrt(19) + 6*sqrt(3) + sqrt(7), summed edge by edge.
    let expected = 3.0 * 19f64.sqrt() + 6.0 * 3f64.sqrt() + 7f64.sqrt();
    assert_eq!(stdout(&computed), format!("{expected:.9}\n"));
}

#[test]
fn edge_list_and_graph6_agree() {
    let dir = tempfile::tempdir().unwrap();
    let el = dir.path().join("g.txt");
    let g6 = dir.path().join("g.g6");
    std::fs::write(&el, "# pineapple(5,2)\nn=5\n0 1\n0 2\n1 2\n0 3\n0 4\n").unwrap();
    let built = eus_lab(
        &["construct", "--family", "pineapple", "--params", "n=5,p=2"],
        None,
    );
    std::fs::write(&g6, stdout(&built)).unwrap();
    for kind in ["eus", "so", "eso"] {
        let a = eus_lab(
            &["compute", "--index", kind, "--in", el.to_str().unwrap()],
            None,
        );
        let b = eus_lab(
            &["compute", "--index", kind, "--in", g6.to_str().unwrap()],
            None,
        );
        assert!(a.status.success() && b.status.success());
        assert_eq!(stdout(&a), stdout(&b), "{kind}");
    }
    let a = eus_lab(&["compute", "--in", el.to_str().unwrap()], None);
    let expected = 2.0 * 28f64.sqrt() + 2.0 * 3f64.sqrt() + 2.0 * 21f64.sqrt();
    assert_eq!(stdout(&a), format!("{expected:.9}\n"));
}

#[test]
fn reports_are_byte_stable_without_timings() {
    let args = [
        "verify",
        "--claim",
        "unicyclic-min",
        "--max-n",
        "6",
        "--no-timings",
        "--workers",
        "3",
    ];
    let a = eus_lab(&args, None);
    let b = eus_lab(&args, None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(doc.get("timings").is_none());
    assert_eq!(doc["summary"]["refuted"], 0);

    let scan = [
        "scan",
        "--n",
        "6",
        "--filter",
        "connected,pendants=1",
        "--direction",
        "max",
        "--no-timings",
    ];
    let one = eus_lab(&[&scan[..], &["--workers", "1"]].concat(), None);
    let many = eus_lab(&[&scan[..], &["--workers", "7"]].concat(), None);
    assert!(one.status.success());
    // Only the echoed command line differs.
    let scans = |o: &Output| {
        serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap()["scans"].clone()
    };
    assert_eq!(scans(&one), scans(&many));
}

#[test]
fn verify_unicyclic_to_eight() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = eus_lab(
        &[
            "verify",
            "--claim",
            "unicyclic-min",
            "--max-n",
            "8",
            "--out",
            out.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(o.status.code(), Some(0));
    let doc = eus_lab::ReportDocument::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc.verdicts.len(), (3..=8).map(|n| n - 2).sum::<usize>());
    assert!(doc.verdicts.iter().all(|v| v.is_confirmed()));
    assert!(doc.timings.is_some());
}

#[test]
fn scan_csv_output() {
    let o = eus_lab(
        &[
            "scan",
            "--n",
            "5",
            "--filter",
            "connected",
            "--direction",
            "min",
            "--format",
            "csv",
        ],
        None,
    );
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().contains("optimum"));
    assert!(lines.next().is_some());
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["--help"], 0),
        (&["--version"], 0),
        (
            &[
                "formulas",
                "--which",
                "unicyclic-bound",
                "--params",
                "n=6,g=6",
            ],
            0,
        ),
        (
            &[
                "formulas",
                "--which",
                "unicyclic-bound",
                "--params",
                "n=6,g=7",
            ],
            2,
        ),
        (
            &["formulas", "--which", "unicyclic-bound", "--params", "n=6"],
            2,
        ),
        (
            &["construct", "--family", "h1", "--params", "n=9,g=4,k=1,l=1"],
            0,
        ),
        (
            &[
                "construct",
                "--family",
                "clique-pendants",
                "--params",
                "a=2:1:0",
            ],
            0,
        ),
        (
            &[
                "construct",
                "--family",
                "clique-pendants",
                "--params",
                "a=2",
            ],
            2,
        ),
        (&["construct", "--family", "cycle", "--params", "n=2"], 2),
        (&["scan", "--n", "4"], 2),
        (&["scan", "--n", "4", "--direction", "sideways"], 2),
        (&["verify", "--claim", "lemmas", "--no-timings"], 0),
        (&["verify", "--max-n", "2"], 2),
    ];
    for (args, want) in cases {
        assert_eq!(eus_lab(args, None).status.code(), Some(*want), "{args:?}");
    }
}
