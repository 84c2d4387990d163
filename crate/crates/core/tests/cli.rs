use std::path::{Path, PathBuf};

use secdom::cli::{self, CliOutput};
use serde_json::Value;

const FIXTURE: &str = "p digraph 7 11\na 4 1\na 4 2\na 4 5\na 4 6\na 4 7\na 5 3\na 5 6\na 5 7\na 1 5\na 2 5\na 3 4\n";

struct Files {
    dir: tempfile::TempDir,
}

impl Files {
    fn new() -> Self {
        Self {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn put(&self, name: &str, text: &str) -> String {
        let p: PathBuf = self.dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_owned()
    }

    fn path(&self) -> &Path {
        self.dir.path()
    }
}

fn run(args: &[&str]) -> CliOutput {
    cli::run(std::iter::once("secdom").chain(args.iter().copied()))
}

fn json(out: &CliOutput) -> Value {
    assert_eq!(out.stderr, "", "unexpected stderr");
    serde_json::from_str(&out.stdout).unwrap()
}

fn ints(v: &Value) -> Vec<u64> {
    v.as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect()
}

#[test]
fn compute_fixture() {
    let f = Files::new();
    let file = f.put("fixture.dg", FIXTURE);
    let out = run(&["compute", &file, "--param", "all"]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["command", "input_digest", "results", "version"]);
    let p = &v["results"]["parameters"];
    for (name, want) in [
        ("gamma_plus", 2),
        ("gamma_os", 2),
        ("gamma_so", 3),
        ("gamma_oso", 4),
        ("gamma_iso", 5),
    ] {
        assert_eq!(p[name]["value"], want, "{name}");
    }
    assert_eq!(ints(&p["gamma_oso"]["witness"]), [1, 3, 4, 5]);
    assert_eq!(ints(&p["gamma_iso"]["witness"]), [1, 2, 3, 6, 7]);
    assert!(p["gamma_os"]["defenders"].is_object());
    assert!(p["gamma_plus"].get("defenders").is_none());
    for (_, entry) in p.as_object().unwrap() {
        let w = ints(&entry["witness"]);
        assert!(w.windows(2).all(|x| x[0] < x[1]));
        assert!(w.iter().all(|&x| (1..=7).contains(&x)));
    }
}

#[test]
fn compute_examples() {
    let f = Files::new();
    let p6 = f.put("p6.dg", "p digraph 6 5\na 1 2\na 2 3\na 3 4\na 4 5\na 5 6\n");
    assert_eq!(
        json(&run(&["compute", &p6, "--param", "oso"]))["results"]["parameters"]["gamma_oso"]["value"],
        4
    );
    let e3 = f.put("e3.dg", "p digraph 3 0\n");
    let v = json(&run(&["compute", &e3, "--param", "gamma+"]));
    assert_eq!(v["results"]["parameters"]["gamma_plus"]["value"], 3);
    assert_eq!(ints(&v["results"]["parameters"]["gamma_plus"]["forced"]), [1, 2, 3]);
}

#[test]
fn compute_errors() {
    let f = Files::new();
    let bad = f.put("bad.dg", "p digraph 3 1\na 1 4\n");
    let out = run(&["compute", &bad]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);
    let p6 = f.put("p6.dg", "p digraph 6 0\n");
    assert_eq!(run(&["compute", &p6, "--cap", "5"]).code, 1);
    assert_eq!(run(&["compute", &p6, "--param", "gamma_q"]).code, 1);
    let missing = f.path().join("nope.dg");
    assert_eq!(run(&["compute", missing.to_str().unwrap()]).code, 1);
}

#[test]
fn verify_examples() {
    let f = Files::new();
    let file = f.put("fixture.dg", FIXTURE);
    let out = run(&["verify", &file, "--set", "4,5", "--kind", "osds"]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    assert_eq!(v["results"]["valid"], true);
    let defenders = v["results"]["defenders"].as_object().unwrap();
    assert_eq!(defenders.len(), 5);
    assert!(defenders.values().all(|d| d.is_u64()));

    let out = run(&["verify", &file, "--set", "1,2,4,5", "--kind", "osods"]);
    assert_eq!(out.code, 2);
    let v = json(&out);
    assert_eq!(v["results"]["valid"], false);
    assert_eq!(v["results"]["failure"]["vertex"], 6);
    assert_eq!(v["results"]["failure"]["reason"], "undefended");

    let p4 = f.put("p4.dg", "p digraph 4 3\na 1 2\na 2 3\na 3 4\n");
    assert_eq!(
        run(&["verify", &p4, "--set", "1,3", "--kind", "out-dominating"]).code,
        0
    );
    let out = run(&["verify", &p4, "--set", "1", "--kind", "out-dominating"]);
    assert_eq!(out.code, 2);
    assert_eq!(json(&out)["results"]["failure"]["reason"], "not_dominated");
    assert_eq!(run(&["verify", &p4, "--set", "1,9", "--kind", "osods"]).code, 1);
    assert_eq!(run(&["verify", &p4, "--set", "1,x", "--kind", "osods"]).code, 1);
}

#[test]
fn survey_examples() {
    let f = Files::new();
    let c6 = f.put("c6.dg", "p digraph 6 6\na 1 2\na 2 3\na 3 4\na 4 5\na 5 6\na 6 1\n");
    let out = run(&["survey", &c6]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    assert_eq!(v["results"]["violations"].as_array().unwrap().len(), 0);
    assert!(v["results"]["counterexample"].is_null());

    let spider = f.put("spider2.dg", "p digraph 5 4\na 2 4\na 3 5\na 4 1\na 5 1\n");
    let v = json(&run(&["survey", &spider]));
    let bounds = v["results"]["bounds"].as_array().unwrap();
    let entry = bounds.iter().find(|b| b["bound_id"] == "iso_lower_out_degree").unwrap();
    assert_eq!(entry["applicable"], true);
    assert_eq!(entry["slack"], 0);

    let k4 = f.put(
        "k4.dg",
        "p digraph 4 12\na 1 2\na 1 3\na 1 4\na 2 1\na 2 3\na 2 4\na 3 1\na 3 2\na 3 4\na 4 1\na 4 2\na 4 3\n",
    );
    let v = json(&run(&["survey", &k4]));
    let p = &v["results"]["parameters"];
    let secure: Vec<&Value> = ["gamma_s", "gamma_so", "gamma_os", "gamma_oso", "gamma_iso"]
        .iter()
        .map(|k| &p[*k]["value"])
        .collect();
    assert!(secure.iter().all(|x| *x == secure[0]), "{secure:?}");
}

#[test]
fn family_examples() {
    for (args, want) in [
        (["--family", "path", "--n", "10", "--param", "so"], 6),
        (["--family", "cycle", "--n", "9", "--param", "iso"], 6),
        (["--family", "transtour", "--n", "8", "--param", "os"], 1),
        (["--family", "spider", "--n", "4", "--param", "iso"], 5),
    ] {
        let mut full = vec!["family"];
        full.extend(args);
        let out = run(&full);
        assert_eq!(out.code, 0, "{args:?}");
        let v = json(&out);
        assert_eq!(v["results"]["value"], want, "{args:?}");
        assert_eq!(v["results"]["solver_value"], want, "{args:?}");
        assert_eq!(v["results"]["verified"], true);
        assert!(v["input_digest"].is_null());
    }
    let big = json(&run(&["family", "--family", "path", "--n", "40", "--param", "oso"]));
    assert_eq!(big["results"]["value"], 27);
    assert!(big["results"]["solver_value"].is_null());
    assert_eq!(
        run(&["family", "--family", "cycle", "--n", "2", "--param", "so"]).code,
        1
    );
    assert_eq!(
        run(&["family", "--family", "path", "--n", "0", "--param", "so"]).code,
        1
    );
}

#[test]
fn orient_examples() {
    let f = Files::new();
    let c4 = f.put("c4.g", "p graph 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    assert_eq!(
        json(&run(&["orient", &c4, "--param", "oso", "--mode", "max"]))["results"]["value"],
        4
    );
    let k3 = f.put("k3.g", "p graph 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    let max = json(&run(&["orient", &k3, "--param", "oso", "--mode", "max"]))["results"]["value"]
        .as_u64()
        .unwrap();
    assert!(max < 3);
    let p3 = f.put("p3.g", "p graph 3 2\ne 1 2\ne 2 3\n");
    let v = json(&run(&["orient", &p3, "--param", "os", "--mode", "spectrum"]));
    assert_eq!(v["results"]["orientations_evaluated"], 4);
    assert_eq!(ints(&v["results"]["achieved"]), [2]);
    assert_eq!(v["results"]["is_interval"], true);
    let bad = f.put("bad.g", "p graph 2 1\ne 1 1\n");
    assert_eq!(run(&["orient", &bad, "--param", "os"]).code, 1);
}

#[test]
fn hunt_examples() {
    let v = json(&run(&["hunt", "--conjecture", "oso", "--n", "4", "--exhaustive"]));
    assert_eq!(v["results"]["digraphs_checked"], 1699);
    assert_eq!(v["results"]["counterexamples"].as_array().unwrap().len(), 0);
    assert!(v.get("seed").is_none());

    let args = [
        "hunt",
        "--conjecture",
        "iso",
        "--n",
        "7",
        "--samples",
        "300",
        "--seed",
        "7",
    ];
    let a = run(&args);
    assert_eq!(a, run(&args));
    let v = json(&a);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["results"]["digraphs_checked"], 300);

    assert_eq!(
        run(&["hunt", "--conjecture", "oso", "--n", "9", "--exhaustive"]).code,
        1
    );
    assert_eq!(run(&["hunt", "--conjecture", "oso", "--n", "5"]).code, 1);
    assert_eq!(run(&["hunt", "--conjecture", "so", "--n", "4", "--exhaustive"]).code, 1);
}

#[test]
fn gen_examples() {
    let v = json(&run(&["gen", "--family", "tournament", "--n", "6", "--seed", "1"]));
    assert_eq!(v["results"]["arcs"], 15);
    assert_eq!(v["seed"], 1);
    let v = json(&run(&["gen", "--family", "spider", "--n-k", "3"]));
    assert_eq!(v["results"]["n"], 7);
    assert_eq!(v["results"]["arcs"], 6);
    assert!(v.get("seed").is_none());
    assert_eq!(run(&["gen", "--family", "dicycle", "--n", "2"]).code, 1);
    assert_eq!(run(&["gen", "--family", "random", "--n", "5"]).code, 1);

    let f = Files::new();
    let out = f.path().join("t.dg");
    let printed = run(&[
        "--format",
        "tsv",
        "gen",
        "--family",
        "random",
        "--n",
        "6",
        "--seed",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(printed.code, 0);
    assert_eq!(std::fs::read_to_string(&out).unwrap(), printed.stdout);
}

#[test]
fn digest_tracks_canonical_form() {
    let f = Files::new();
    let a = f.put("a.dg", "p digraph 3 2\na 2 3\na 1 2\n");
    let b = f.put("b.dg", "c comment\np digraph 3 2\na 1 2\na 2 3\n");
    let da = json(&run(&["compute", &a, "--param", "plus"]))["input_digest"].clone();
    let db = json(&run(&["compute", &b, "--param", "plus"]))["input_digest"].clone();
    assert_eq!(da, db);
    assert_eq!(da, cli::digest("p digraph 3 2\na 1 2\na 2 3\n"));
}

#[test]
fn tsv_output() {
    let f = Files::new();
    let file = f.put("fixture.dg", FIXTURE);
    let out = run(&["--format", "tsv", "compute", &file, "--param", "oso"]);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "param\tvalue\twitness\tnodes_explored");
    assert!(lines[1].starts_with("gamma_oso\t4\t1,3,4,5\t"));
}

#[test]
fn thread_hint_is_invisible() {
    let f = Files::new();
    let file = f.put("fixture.dg", FIXTURE);
    let base = run(&["compute", &file]);
    for t in ["1", "2", "8"] {
        assert_eq!(run(&["--threads", t, "compute", &file]), base);
        assert_eq!(run(&["compute", &file, "--threads", t]), base);
    }
}

#[test]
fn binary_exit_codes() {
    let f = Files::new();
    let file = f.put("fixture.dg", FIXTURE);
    let bin = env!("CARGO_BIN_EXE_secdom");
    let status = |args: &[&str]| std::process::Command::new(bin).args(args).output().unwrap();
    let ok = status(&["compute", &file, "--param", "os"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(ok.stdout).unwrap(),
        run(&["compute", &file, "--param", "os"]).stdout
    );
    assert_eq!(
        status(&["verify", &file, "--set", "1", "--kind", "osds"]).status.code(),
        Some(2)
    );
    assert_eq!(status(&["nonsense"]).status.code(), Some(1));
}
