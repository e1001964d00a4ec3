use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn rsets(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rsets"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

const C4_REFLEXIVE: &str = r#"{"r":2,"vertices":["a","b","c","d"],"relation":[
  ["a","a"],["b","b"],["c","c"],["d","d"],["a","b"],["b","a"],["b","c"],["c","b"],
  ["c","d"],["d","c"],["d","a"],["a","d"]]}"#;
const K2: &str = r#"{"r":2,"vertices":["0","1"],"relation":[["0","1"],["1","0"]]}"#;
const K3: &str = r#"{"r":2,"vertices":["0","1","2"],"relation":[["0","1"],["1","0"],["0","2"],["2","0"],["1","2"],["2","1"]]}"#;

fn interval(n: usize) -> String {
    let mut rel = Vec::new();
    for k in 1..=n {
        for a in [k - 1, k] {
            for b in [k - 1, k] {
                let t = format!(r#"["{a}","{b}"]"#);
                if !rel.contains(&t) {
                    rel.push(t);
                }
            }
        }
    }
    let vs: Vec<String> = (0..=n).map(|i| format!(r#""{i}""#)).collect();
    format!(r#"{{"r":2,"vertices":[{}],"relation":[{}]}}"#, vs.join(","), rel.join(","))
}

fn setup() -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    write(&dir, "c4_reflexive.json", C4_REFLEXIVE);
    write(&dir, "k2.json", K2);
    write(&dir, "k3.json", K3);
    write(&dir, "i5.json", &interval(5));
    dir
}

#[test]
fn clique_homology_of_reflexive_square_is_a_circle() {
    let dir = setup();
    let o = rsets(&["homology", "--clique", "c4_reflexive.json"], dir.path());
    assert!(o.status.success());
    assert_eq!(stdout(&o), "H_0 = Z\nH_1 = Z\n");
}

#[test]
fn core_of_interval_folds_five_times() {
    let dir = setup();
    let o = rsets(&["--format", "json", "core", "i5.json"], dir.path());
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["folds"].as_array().unwrap().len(), 5);
    assert_eq!(v["core"]["vertices"].as_array().unwrap().len(), 1);
    assert_eq!(v["core"]["relation"].as_array().unwrap().len(), 1);
    let seeded = rsets(&["--format", "json", "--seed", "9", "core", "i5.json"], dir.path());
    let w: Value = serde_json::from_str(&stdout(&seeded)).unwrap();
    assert_eq!(w["folds"].as_array().unwrap().len(), 5);
}

#[test]
fn exit_codes() {
    let dir = setup();
    assert_eq!(rsets(&["seq", "i5.json", "k2.json"], dir.path()).status.code(), Some(1));
    assert_eq!(rsets(&["seq", "k3.json", "k3.json"], dir.path()).status.code(), Some(0));
    assert_eq!(rsets(&["iso", "k2.json", "k3.json"], dir.path()).status.code(), Some(1));
    write(&dir, "bad.json", r#"{"r":2,"vertices":["a"],"relation":[["a"]],"extra":true}"#);
    let o = rsets(&["info", "bad.json"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("extra"));
    write(&dir, "short.json", r#"{"r":2,"vertices":["a"],"relation":[["a"]]}"#);
    let o = rsets(&["info", "short.json"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("[\"a\"]"));
    let o = rsets(&["--max-exp-vertices", "10", "exp", "k3.json", "c4_reflexive.json"], dir.path());
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("max_exp_vertices"));
    assert_eq!(rsets(&["maps", "k2.json", "i5.json", "--format", "yaml"], dir.path()).status.code(), Some(2));
}

#[test]
fn exported_rsets_reparse() {
    let dir = setup();
    for args in [&["product", "k2.json", "k3.json"][..], &["exp", "k3.json", "k2.json"][..]] {
        let o = rsets(args, dir.path());
        assert!(o.status.success());
        let p = write(&dir, "out.json", &stdout(&o));
        let info = rsets(&["info", p.to_str().unwrap()], dir.path());
        assert!(info.status.success(), "{}", String::from_utf8_lossy(&info.stderr));
        let again = rsets(&["iso", "out.json", "out.json"], dir.path());
        assert!(again.status.success());
    }
    let prod = rsets(&["--format", "json", "product", "k2.json", "k3.json"], dir.path());
    let v: Value = serde_json::from_str(&stdout(&prod)).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
    assert_eq!(v["relation"].as_array().unwrap().len(), 12);
}

#[test]
fn hom_and_sing_exports() {
    let dir = setup();
    let o = rsets(&["hom", "k2.json", "k3.json"], dir.path());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 12);
    assert_eq!(v["leq"].as_array().unwrap().len(), 12);
    let o = rsets(&["sing", "k2.json", "k3.json", "--dim", "1"], dir.path());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim_bound"], 1);
    assert_eq!(v["simplices"][0].as_array().unwrap().len(), 6);
    assert_eq!(v["simplices"][0][0][0], serde_json::json!({"0": "0", "1": "1"}));
}

#[test]
fn homology_pipelines_agree_on_k2_k3() {
    let dir = setup();
    let hom = rsets(&["homology", "--hom", "k2.json", "k3.json"], dir.path());
    assert_eq!(stdout(&hom), "H_0 = Z\nH_1 = Z\n");
    let sing = rsets(&["--format", "json", "homology", "--sing", "k2.json", "k3.json", "--dim", "2"], dir.path());
    let v: Value = serde_json::from_str(&stdout(&sing)).unwrap();
    let betti: Vec<u64> = v["groups"].as_array().unwrap().iter().map(|g| g["betti"].as_u64().unwrap()).collect();
    assert_eq!(&betti[..2], &[1, 1]);
    assert_eq!(v["groups"][2]["trusted"], false);
}

#[test]
fn homotopic_maps() {
    let dir = setup();
    write(&dir, "id.json", r#"{"0":"0","1":"1"}"#);
    write(&dir, "swap.json", r#"{"0":"1","1":"0"}"#);
    write(&dir, "to12.json", r#"{"0":"1","1":"2"}"#);
    let no = rsets(&["homotopic", "k2.json", "k2.json", "--f", "id.json", "--g", "swap.json"], dir.path());
    assert_eq!(no.status.code(), Some(1));
    let no = rsets(
        &["homotopic", "k2.json", "k2.json", "--f", "id.json", "--g", "swap.json", "--method", "hom-poset"],
        dir.path(),
    );
    assert_eq!(no.status.code(), Some(1));
    let yes = rsets(
        &["--format", "json", "homotopic", "k2.json", "k3.json", "--f", "id.json", "--g", "to12.json"],
        dir.path(),
    );
    assert!(yes.status.success());
    let v: Value = serde_json::from_str(&stdout(&yes)).unwrap();
    let path = v["path"].as_array().unwrap();
    assert_eq!(path.first().unwrap(), &serde_json::json!({"0": "0", "1": "1"}));
    assert_eq!(path.last().unwrap(), &serde_json::json!({"0": "1", "1": "2"}));
    write(&dir, "bad_map.json", r#"{"0":"0","1":"0"}"#);
    let bad = rsets(&["homotopic", "k2.json", "k2.json", "--f", "id.json", "--g", "bad_map.json"], dir.path());
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn beats_and_info() {
    let dir = setup();
    let o = rsets(&["beats", "i5.json"], dir.path());
    assert!(stdout(&o).starts_with("0 (witness 1)\n"));
    let o = rsets(&["beats", "k3.json"], dir.path());
    assert_eq!(stdout(&o), "minimal: no beat points\n");
    let o = rsets(&["--format", "json", "info", "c4_reflexive.json"], dir.path());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["tuples"], 12);
    assert_eq!(v["minimal"], true);
}

#[test]
fn verify_suites() {
    let dir = setup();
    let o = rsets(&["verify", "lemma27"], dir.path());
    assert!(o.status.success());
    assert!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count() == 6);
    let corpus = tempfile::tempdir().unwrap();
    std::fs::write(corpus.path().join("k2.json"), K2).unwrap();
    std::fs::write(corpus.path().join("k3.json"), K3).unwrap();
    let o = rsets(&["verify", "thm31", "--corpus", corpus.path().to_str().unwrap()], dir.path());
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("PASS k2 -> k3"));
    assert!(out.contains("SKIP k3 -> k2: no maps"));
    let o = rsets(&["verify", "example46"], dir.path());
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(rsets(&["verify", "nonsense"], dir.path()).status.code(), Some(2));
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let dir = setup();
    let args = ["--format", "json", "--seed", "4", "core", "c4_reflexive.json"];
    assert_eq!(stdout(&rsets(&args, dir.path())), stdout(&rsets(&args, dir.path())));
    let a = rsets(&["maps", "k2.json", "k3.json"], dir.path());
    let b = rsets(&["maps", "k2.json", "k3.json", "-o", "maps.txt"], dir.path());
    assert!(b.stdout.is_empty());
    assert_eq!(std::fs::read(dir.path().join("maps.txt")).unwrap(), a.stdout);
    assert!(stdout(&a).starts_with("6 maps\n"));
}
