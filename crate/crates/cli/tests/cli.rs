use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use closedwalk::graph::{apply_permutation, parse_graph6, random_graph, write_graph6};
use closedwalk::isomatch::verify_isomorphism;
use closedwalk::Permutation;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_closedwalk"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn write_tmp(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn strings(v: &Value) -> Vec<Vec<String>> {
    serde_json::from_value(v.clone()).unwrap()
}

#[test]
fn triangle_invariants() {
    let out = run_stdin(&["invariants", "-", "--kmax", "3"], "Bw\n");
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let expect = vec![vec!["0", "2", "2"]; 3];
    assert_eq!(strings(&v["rows"]), expect);
    assert_eq!(v["modulus"], Value::Null);

    let out = run(&[
        "invariants",
        "--fixture",
        "k3",
        "--kmax",
        "3",
        "--mod",
        "97",
    ]);
    let v = json(&out);
    assert_eq!(strings(&v["rows"]), expect);
    assert_eq!(v["modulus"], "97");
    assert_eq!(v["table"]["header"]["modulus"], "97");
}

#[test]
fn bare_mod_flag_is_the_mersenne_prime() {
    let v = json(&run(&["invariants", "--fixture", "cycle5", "--mod"]));
    assert_eq!(v["modulus"], "2305843009213693951");
}

#[test]
fn path_center_sorts_last() {
    let v = json(&run(&["invariants", "--fixture", "path3"]));
    let order: Vec<usize> = serde_json::from_value(v["certificate"]["order"].clone()).unwrap();
    assert_eq!(order.last(), Some(&1));
}

#[test]
fn edge_list_input_is_detected() {
    let out = run_stdin(
        &["charpoly", "-", "--text"],
        "# triangle\n3 3\n0 1\n1 2\n2 0\n",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "x^3 - 3x - 2\n");
}

#[test]
fn charpoly_json() {
    let v = json(&run(&["charpoly", "--fixture", "k3"]));
    assert_eq!(v["display"], "x^3 - 3x - 2");
    let coeffs: Vec<String> = serde_json::from_value(v["coeffs"].clone()).unwrap();
    assert_eq!(coeffs, ["-2", "-3", "0", "1"]);
    assert_eq!(v["direct_agrees"], true);
}

#[test]
fn deleted_round_trip() {
    let v = json(&run(&["deleted", "--fixture", "petersen"]));
    assert_eq!(v["derivative_identity"], true);
    assert_eq!(v["recovered"]["round_trip"], true);
    assert_eq!(v["deleted"].as_array().unwrap().len(), 10);
}

#[test]
fn iso_relabeled_graph() {
    let g = random_graph(20, 0.3, 9).unwrap();
    let p = Permutation::new((0..20).map(|i| (i * 7 + 3) % 20).collect()).unwrap();
    let h = apply_permutation(&g, &p).unwrap();
    let a = write_tmp("iso_a.g6", &write_graph6(&g));
    let b = write_tmp("iso_b.g6", &write_graph6(&h));
    let out = run(&["iso", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "isomorphic");
    let found =
        Permutation::new(serde_json::from_value(v["permutation"].clone()).unwrap()).unwrap();
    assert!(verify_isomorphism(&g, &h, &found).unwrap());
}

#[test]
fn iso_triangle_vs_path() {
    let a = write_tmp("k3.g6", "Bw\n");
    let b = write_tmp("p3.g6", "Bg\n");
    let out = run(&["iso", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["witness"]["kind"], "certificate");
}

#[test]
fn iso_strongly_regular_pair() {
    let s = run(&["gen", "--fixture", "shrikhande"]);
    let r = run(&["gen", "--fixture", "rook44"]);
    let a = write_tmp("shrikhande.g6", std::str::from_utf8(&s.stdout).unwrap());
    let b = write_tmp("rook44.g6", std::str::from_utf8(&r.stdout).unwrap());
    let out = run(&["iso", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["witness"]["kind"], "exhausted_search");

    let out = run(&[
        "iso",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        "--budget",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["verdict"], "inconclusive");
}

#[test]
fn reconstruct_from_table_json() {
    let table = json(&run(&["invariants", "--fixture", "path3"]))["table"].to_string();
    let out = run_stdin(&["reconstruct", "-"], &table);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["status"], "success");
    assert_eq!(v["adj"], "Bg");

    let report = String::from_utf8(run(&["invariants", "--fixture", "path3"]).stdout).unwrap();
    assert_eq!(
        json(&run_stdin(&["reconstruct", "-"], &report))["adj"],
        "Bg"
    );
    let modular =
        String::from_utf8(run(&["invariants", "--fixture", "path3", "--mod", "97"]).stdout)
            .unwrap();
    assert_eq!(
        run_stdin(&["reconstruct", "-"], &modular).status.code(),
        Some(3)
    );

    let report = String::from_utf8(run(&["invariants", "--fixture", "path3"]).stdout).unwrap();
    assert_eq!(
        json(&run_stdin(&["reconstruct", "-"], &report))["adj"],
        "Bg"
    );
    let modular =
        String::from_utf8(run(&["invariants", "--fixture", "path3", "--mod", "97"]).stdout)
            .unwrap();
    assert_eq!(
        run_stdin(&["reconstruct", "-"], &modular).status.code(),
        Some(3)
    );

    let v = json(&run(&["reconstruct", "--fixture", "petersen"]));
    assert_eq!(v["status"], "non_generic_spectrum");
}

#[test]
fn gen_outputs() {
    let out = run(&["gen", "--fixture", "shrikhande"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.ends_with('\n') && text.lines().count() == 1);
    let g = parse_graph6(text.trim()).unwrap();
    assert_eq!(g.n(), 16);
    assert!(g.degrees().iter().all(|&d| d == 6));

    let v = json(&run(&[
        "gen", "--n", "12", "--p", "0.25", "--seed", "4", "--format", "json",
    ]));
    assert_eq!(
        v["graph6"],
        write_graph6(&random_graph(12, 0.25, 4).unwrap())
    );
}

#[test]
fn output_is_reproducible() {
    let args = ["gen", "--n", "30", "--seed", "123"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let g = String::from_utf8(run(&args).stdout).unwrap();
    let a = write_tmp("rep_a.g6", &g);
    let iso = ["iso", a.to_str().unwrap(), a.to_str().unwrap()];
    assert_eq!(run(&iso).stdout, run(&iso).stdout);
    let inv = ["invariants", a.to_str().unwrap(), "--format", "text"];
    assert_eq!(run(&inv).stdout, run(&inv).stdout);
}

#[test]
fn errors_exit_three() {
    assert_eq!(
        run_stdin(&["invariants", "-"], "Bw!\n").status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["invariants", "/definitely/missing.g6"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["gen", "--fixture", "dodecahedron"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["gen", "--n", "5", "--p", "1.5"]).status.code(),
        Some(3)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(run(&["iso", "only-one"]).status.code(), Some(3));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}
