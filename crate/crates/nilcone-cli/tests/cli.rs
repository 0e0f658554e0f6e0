use std::io::Write;
use std::process::{Command, Output, Stdio};

use nilcone::orbit_maps::{enumerate_striped, label_of_diagrams, psi_ell, StripedBipartition};
use nilcone::part;
use nilcone::rep_builder::{build_ah, build_label, QuiverRep};
use nilcone::residues::{enumerate_q, DimensionVector};
use nilcone::Exec;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn nilcone(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_nilcone"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn nilcone");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str], stdin: Option<&str>) -> String {
    let out = nilcone(args, stdin);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn exit_code(args: &[&str], stdin: Option<&str>) -> Option<i32> {
    nilcone(args, stdin).status.code()
}

#[test]
fn enumerate_row_counts() {
    assert_eq!(
        ok(&["enumerate-orbits", "--n", "3", "--ell", "1"], None)
            .lines()
            .count(),
        10
    );
    assert_eq!(
        ok(&["enumerate-orbits", "--n", "0", "--ell", "2"], None)
            .lines()
            .count(),
        1
    );
    let striped = enumerate_striped(
        2,
        &DimensionVector::multiple_of_delta(1, 2, 0),
        Exec::Sequential,
    );
    assert_eq!(
        ok(&["enumerate-orbits", "--n", "1", "--ell", "2"], None)
            .lines()
            .count(),
        striped.len()
    );
}

#[test]
fn enumerate_weight_filter() {
    let all = enumerate_q(3, 2, Exec::Sequential);
    let light = all.iter().filter(|l| l.lambda.weight(2) <= 1).count();
    let out = ok(
        &["enumerate-orbits", "--n", "3", "--ell", "2", "--x", "1"],
        None,
    );
    assert_eq!(out.lines().count(), light);
    assert!(light < all.len());
}

#[test]
fn bad_flags_exit_two() {
    assert_eq!(
        exit_code(&["enumerate-orbits", "--n", "3", "--ell", "0"], None),
        Some(2)
    );
    assert_eq!(
        exit_code(&["enumerate-orbits", "--n", "x", "--ell", "1"], None),
        Some(2)
    );
    assert_eq!(exit_code(&["reptype", "0", "1"], None), Some(2));
    assert_eq!(exit_code(&["render", "--format", "ascii"], None), Some(2));
    assert_eq!(
        exit_code(&["selfcheck", "--n", "7", "--ell", "2"], None),
        Some(2)
    );
    assert_eq!(
        exit_code(
            &[
                "translate",
                "--from",
                "ah",
                "--to",
                "label",
                "--input",
                "/nonexistent"
            ],
            None
        ),
        Some(2)
    );
}

#[test]
fn translate_table_rows() {
    let args = ["translate", "--from", "ah", "--to", "label", "--input", "-"];
    assert_eq!(
        ok(&args, Some(r#"{"mu":[2,1],"nu":[]}"#)),
        "{\"lambda\":[1,1],\"nu\":[[1]]}\n"
    );
    let args = ["translate", "--from", "label", "--to", "ah", "--input", "-"];
    assert_eq!(
        ok(&args, Some(r#"{"lambda":[],"nu":[[3]]}"#)),
        "{\"mu\":[],\"nu\":[3]}\n"
    );
}

#[test]
fn translate_big_striped_example() {
    let json = r#"{"lambda":[16,14,13,11,9,6,5,5,2],"epsilon":[0,2,0,1,3,0,2,2,0],"nu":[8,4,5,4,0,2,3,3,-2]}"#;
    let out = ok(
        &[
            "translate",
            "--from",
            "johnson",
            "--to",
            "label",
            "--ell",
            "4",
            "--input",
            "-",
        ],
        Some(json),
    );
    let s = StripedBipartition::new(
        part![16, 14, 13, 11, 9, 6, 5, 5, 2],
        vec![0, 2, 0, 1, 3, 0, 2, 2, 0],
        vec![8, 4, 5, 4, 0, 2, 3, 3, -2],
        4,
    )
    .unwrap();
    let (cf, c) = psi_ell(&s, 4).unwrap();
    let expected = serde_json::to_string(&label_of_diagrams(&cf, &c)).unwrap();
    assert_eq!(out.trim_end(), expected);
}

#[test]
fn translate_rejects_unstriped_input() {
    let json = r#"{"lambda":[2,1],"epsilon":[0,0],"nu":[1,2]}"#;
    let args = [
        "translate",
        "--from",
        "johnson",
        "--to",
        "label",
        "--ell",
        "1",
        "--input",
        "-",
    ];
    assert_eq!(exit_code(&args, Some(json)), Some(2));
}

#[test]
fn translate_roundtrip_through_each_format() {
    for label in enumerate_q(2, 1, Exec::Sequential) {
        let src = serde_json::to_string(&label).unwrap();
        let ah = ok(
            &["translate", "--from", "label", "--to", "ah", "--input", "-"],
            Some(&src),
        );
        let back = ok(
            &["translate", "--from", "ah", "--to", "label", "--input", "-"],
            Some(&ah),
        );
        assert_eq!(back.trim_end(), src);
    }
    for label in enumerate_q(1, 3, Exec::Sequential) {
        let src = serde_json::to_string(&label).unwrap();
        let j = ok(
            &[
                "translate",
                "--from",
                "label",
                "--to",
                "johnson",
                "--input",
                "-",
            ],
            Some(&src),
        );
        let back = ok(
            &[
                "translate",
                "--from",
                "johnson",
                "--to",
                "label",
                "--input",
                "-",
            ],
            Some(&j),
        );
        assert_eq!(back.trim_end(), src);
    }
}

#[test]
fn decompose_examples() {
    let out = ok(
        &["decompose", "--input", "-"],
        Some(&build_ah(&part![2], &part![1]).to_json()),
    );
    assert!(out.starts_with(r#"{"lambda":[2,1],"nu":[[]]"#), "{out}");

    let j3 = r#"{"ell":1,"dims":{"framing":1,"main":[3]},"maps":[[["0","0","0"],["1","0","0"],["0","1","0"]]],"framing_vector":["0","0","0"]}"#;
    let out = ok(&["decompose", "--input", "-"], Some(j3));
    assert!(out.starts_with(r#"{"lambda":[],"nu":[[3]]"#), "{out}");

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for label in enumerate_q(1, 3, Exec::Sequential).into_iter().take(8) {
        let rep: QuiverRep = build_label(&label).random_base_change(&mut rng);
        let out = ok(&["decompose", "--input", "-"], Some(&rep.to_json()));
        let want = serde_json::to_string(&label).unwrap();
        assert!(out.starts_with(&want[..want.len() - 1]), "{out} vs {want}");
    }
}

#[test]
fn decompose_rejects_non_nilpotent() {
    let rep = r#"{"ell":1,"dims":{"framing":1,"main":[2]},"maps":[[["1","0"],["0","0"]]],"framing_vector":["1","0"]}"#;
    let out = nilcone(&["decompose", "--input", "-"], Some(rep));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("power 2"));
    assert_eq!(
        exit_code(&["decompose", "--input", "-"], Some("{}")),
        Some(2)
    );
}

#[test]
fn render_examples() {
    assert_eq!(
        ok(&["render", "--partition", "[1]", "--format", "ascii"], None),
        "[]\n"
    );
    let tex = ok(
        &[
            "render",
            "--partition",
            "[6,4,4,2]",
            "--ell",
            "4",
            "--format",
            "latex-ytableau",
        ],
        None,
    );
    assert!(tex.contains(r"\boxed{s_{1}}") && tex.contains(r"\boxed{s_{3}}"));
    assert_eq!(
        exit_code(
            &["render", "--partition", "[1,2]", "--format", "ascii"],
            None
        ),
        Some(2)
    );
}

#[test]
fn dot_roundtrips_through_json() {
    let json =
        r#"{"ell":4,"circles":[{"start":1,"len":9,"mark":3},{"start":0,"len":3,"mark":null}]}"#;
    let dot = ok(&["render", "--diagram", "-", "--format", "dot"], Some(json));
    let again = ok(&["render", "--diagram", "-", "--format", "dot"], Some(&dot));
    assert_eq!(dot, again);
    let parsed = nilcone::circle_diagrams::from_dot(&dot).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap(), json);
}

#[test]
fn selfcheck_passes() {
    for (n, ell) in [("5", "1"), ("2", "3"), ("0", "1")] {
        let out = ok(&["selfcheck", "--n", n, "--ell", ell], None);
        assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
    }
}

#[test]
fn reptype_output() {
    let out = ok(&["reptype", "3", "2"], None);
    assert!(
        out.starts_with("ell=3 x=2: wild\n") && out.ends_with("q = -1\n"),
        "{out}"
    );
    assert_eq!(ok(&["reptype", "1", "3"], None), "ell=1 x=3: finite\n");
    assert_eq!(ok(&["reptype", "4", "1"], None), "ell=4 x=1: tame\n");
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate-orbits", "--n", "2", "--ell", "3"];
    assert_eq!(ok(&args, None), ok(&args, None));
    let args = ["reptype", "6", "3"];
    assert_eq!(ok(&args, None), ok(&args, None));
}
