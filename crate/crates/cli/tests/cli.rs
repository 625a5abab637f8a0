use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join(name)
}

fn nsatz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsatz"))
        .args(args)
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn solve_to(system: &str, theorem: &str, cert: &Path, extra: &[&str]) -> Output {
    let sys = corpus(system);
    let mut args = vec![
        "solve",
        path(&sys),
        "--theorem",
        theorem,
        "--out",
        path(cert),
    ];
    args.extend_from_slice(extra);
    nsatz(&args)
}

#[test]
fn check_exit_codes() {
    assert_eq!(code(&nsatz(&["check", path(&corpus("macaulay.json"))])), 0);
    let out = nsatz(&["check", path(&corpus("coordinates.json"))]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).contains("witness face   dim 0 vertices (0,0)"));
    let out = nsatz(&["check", path(&corpus("noether.json")), "--mode", "infinity"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn malformed_inputs_exit_one() {
    let out = nsatz(&["check", path(&corpus("duplicate_variables.json"))]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("variables[1]"), "{}", stderr(&out));
    let out = nsatz(&["check", path(&corpus("malformed.json"))]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("line"), "{}", stderr(&out));
    let out = nsatz(&["check", "/nonexistent/system.json"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn solve_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (system, theorem, extra) in [
        ("macaulay.json", "macaulay", &[][..]),
        ("noether.json", "noether", &[][..]),
        (
            "briancon_skoda.json",
            "briancon-skoda",
            &["--assert-integral-closure"][..],
        ),
        ("tuitman.json", "tuitman", &[][..]),
    ] {
        let cert = dir.path().join(format!("{theorem}.json"));
        let out = solve_to(system, theorem, &cert, extra);
        assert_eq!(code(&out), 0, "{theorem}: {}", stdout(&out));
        let out = nsatz(&["verify", path(&corpus(system)), path(&cert)]);
        assert_eq!(code(&out), 0, "{theorem}: {}", stdout(&out));
    }
}

#[test]
fn noether_reports_c() {
    let dir = tempfile::tempdir().unwrap();
    let plan = dir.path().join("plan.json");
    let cert = dir.path().join("cert.json");
    let out = solve_to(
        "noether.json",
        "noether",
        &cert,
        &["--plan-out", path(&plan)],
    );
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).lines().any(|l| l == "c              2"));
    let plan: Value = serde_json::from_str(&std::fs::read_to_string(plan).unwrap()).unwrap();
    assert_eq!(plan["escalation"]["c"], 2);
    assert_eq!(plan["hypotheses"].as_array().unwrap().len(), 6);
    assert!(plan["hypotheses"]
        .as_array()
        .unwrap()
        .iter()
        .all(|h| h["pass"] == true));
}

#[test]
fn tampered_certificate_is_located() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    assert_eq!(code(&solve_to("macaulay.json", "macaulay", &cert, &[])), 0);
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    v["cofactors"][0]["terms"][0]["coeff"] = Value::from("2");
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    let out = nsatz(&["verify", path(&corpus("macaulay.json")), path(&bad)]);
    assert_eq!(code(&out), 3);
    assert!(
        stdout(&out).contains("identity mismatch at exponent ("),
        "{}",
        stdout(&out)
    );

    let out = nsatz(&["verify", path(&corpus("noether.json")), path(&cert)]);
    assert_ne!(code(&out), 0);
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    assert_eq!(code(&solve_to("noether.json", "noether", &a, &[])), 0);
    assert_eq!(
        code(&solve_to("noether.json", "noether", &b, &["--sequential"])),
        0
    );
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let va = dir.path().join("va.json");
    let vb = dir.path().join("vb.json");
    let sys = corpus("curve.json");
    nsatz(&["check", path(&sys), "--out", path(&va)]);
    nsatz(&["check", path(&sys), "--out", path(&vb), "--sequential"]);
    assert_eq!(std::fs::read(&va).unwrap(), std::fs::read(&vb).unwrap());
}

#[test]
fn hypothesis_gates_exit_two() {
    let out = nsatz(&[
        "solve",
        path(&corpus("briancon_skoda.json")),
        "--theorem",
        "briancon-skoda",
    ]);
    assert_eq!(code(&out), 2);
    assert!(
        stdout(&out).contains("integral_closure      unverifiable"),
        "{}",
        stdout(&out)
    );
    let out = nsatz(&[
        "solve",
        path(&corpus("non_smooth.json")),
        "--theorem",
        "noether",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("vertex (0,1)"));
    let out = nsatz(&[
        "solve",
        path(&corpus("missing_origin.json")),
        "--theorem",
        "briancon-skoda",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("contains_origin       fail          origin"));
    let out = nsatz(&[
        "solve",
        path(&corpus("curve.json")),
        "--theorem",
        "macaulay",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stdout(&out).contains("no_common_zeros  fail"));
}

#[test]
fn non_member_exits_three() {
    let out = nsatz(&[
        "solve",
        path(&corpus("non_member.json")),
        "--theorem",
        "custom",
        "--cmax",
        "6",
    ]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).contains("not found at any c up to 6"));
}

#[test]
fn compare_table() {
    let out = nsatz(&["compare", path(&corpus("noether.json"))]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("16 lattice points"), "{text}");
    assert!(text.contains("28 lattice points"), "{text}");
    let out = nsatz(&["compare", path(&corpus("non_member.json"))]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
}

#[test]
fn oracle_queries() {
    assert_eq!(
        code(&nsatz(&["oracle", path(&corpus("noether.json")), "member"])),
        0
    );
    assert_eq!(
        code(&nsatz(&[
            "oracle",
            path(&corpus("coordinates.json")),
            "torus"
        ])),
        3
    );
    assert_eq!(
        code(&nsatz(&[
            "oracle",
            path(&corpus("coordinates.json")),
            "affine"
        ])),
        0
    );
    assert_eq!(
        code(&nsatz(&[
            "oracle",
            path(&corpus("nullstellensatz.json")),
            "radical"
        ])),
        0
    );
    assert_eq!(
        code(&nsatz(&[
            "oracle",
            path(&corpus("non_member.json")),
            "member"
        ])),
        3
    );
}

#[test]
fn infix_requires_flag() {
    let sys = corpus("infix.json");
    assert_eq!(code(&nsatz(&["check", path(&sys)])), 1);
    assert_eq!(
        code(&nsatz(&[
            "solve",
            path(&sys),
            "--theorem",
            "noether",
            "--parse-infix"
        ])),
        0
    );
}

#[test]
fn polytope_utilities() {
    let dir = tempfile::tempdir().unwrap();
    let sq = dir.path().join("square.json");
    let tri = dir.path().join("simplex.json");
    std::fs::write(
        &sq,
        r#"{"dim":2,"vertices":[[0,0],[1,0],[0,1],[1,1],[1,0]]}"#,
    )
    .unwrap();
    std::fs::write(&tri, r#"{"dim":2,"vertices":[[0,0],[1,0],[0,1]]}"#).unwrap();
    let out = nsatz(&["polytope", "hull", path(&sq)]);
    assert!(stdout(&out).contains("vertices       (0,0) (0,1) (1,0) (1,1)"));
    let out = nsatz(&["polytope", "sum", path(&sq), path(&tri)]);
    assert!(stdout(&out).contains("(0,0) (0,2) (1,2) (2,0) (2,1)"));
    assert_eq!(
        code(&nsatz(&["polytope", "summand", path(&tri), path(&sq)])),
        3
    );
    assert_eq!(code(&nsatz(&["polytope", "smooth", path(&sq)])), 0);
    let out = nsatz(&["polytope", "points", path(&tri)]);
    assert!(stdout(&out).contains("count: 3"));
}

#[test]
fn probe_is_seeded() {
    let dir = tempfile::tempdir().unwrap();
    let tri = dir.path().join("simplex.json");
    std::fs::write(&tri, r#"{"dim":2,"vertices":[[0,0],[2,0],[0,2]]}"#).unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    nsatz(&["probe", path(&tri), "--seed", "5", "--out", path(&a)]);
    nsatz(&["probe", path(&tri), "--seed", "5", "--out", path(&b)]);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let out = nsatz(&["solve", path(&a), "--theorem", "macaulay"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}
