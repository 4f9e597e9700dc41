use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(format!("{name}.curve"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scrollar-lab")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited")
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("scrollar-lab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn predict_dihedral_quartic() {
    let v = json(&run(&["predict", "--d", "4", "--subgroup", "D4"]));
    assert_eq!(v["schema"], "scrollar-lab/1");
    assert_eq!(v["genus"]["formula"], "g+1");
    let parts: Vec<&str> = v["constituents"].as_array().unwrap().iter().map(|c| c["partition"].as_str().unwrap()).collect();
    assert_eq!(parts, ["[4]", "[2,2]"]);
    assert_eq!(v["index"], 3);
}

#[test]
fn predict_partition_volume() {
    let v = json(&run(&["predict", "--d", "6", "--partition", "[2,2,2]"]));
    assert_eq!(v["volume"]["formula"], "3g+15");
    assert_eq!(v["dual"], "[3,3]");
    let v = json(&run(&["predict", "--d", "6", "--partition", "[2,2,2]", "--g", "5"]));
    assert_eq!(v["volume"]["value"], 30);
}

#[test]
fn predict_schreyer_interval() {
    let v = json(&run(&["predict", "--d", "5", "--schreyer-interval", "1", "--g", "10"]));
    assert_eq!(v["interval"], serde_json::json!(["14/5", "42/5"]));
    assert_eq!(v["sum"], 28);
    assert_eq!(v["betti"], 5);
}

#[test]
fn predict_overview_lists_betti_numbers() {
    let v = json(&run(&["predict", "--d", "6"]));
    assert_eq!(v["betti"], serde_json::json!([9, 16, 9]));
    assert_eq!(v["scrollar_sum"]["formula"], "g+5");
    assert_eq!(v["partitions"].as_array().unwrap().len(), 10);
}

#[test]
fn predict_usage_errors() {
    assert_eq!(code(&run(&["predict", "--d", "5", "--schreyer-interval", "1"])), 2);
    assert_eq!(code(&run(&["predict", "--d", "5", "--partition", "[2,2]"])), 2);
    assert_eq!(code(&run(&["predict", "--d", "4", "--subgroup", "nonsense"])), 2);
    assert_eq!(code(&run(&["predict"])), 2);
}

#[test]
fn analyze_plane_quintic() {
    let v = json(&run(&["analyze", corpus("plane-quintic").to_str().unwrap()]));
    assert_eq!(v["genus"], 6);
    assert_eq!(v["scrollar"], serde_json::json!([2, 3, 4]));
    assert_eq!(v["ramification"]["classification"], "simple");
    assert_eq!(v["sum_ok"], true);
}

#[test]
fn analyze_square_root() {
    let v = json(&run(&["analyze", corpus("square-root").to_str().unwrap()]));
    assert_eq!(v["genus"], 0);
    assert_eq!(v["scrollar"], serde_json::json!([1]));
}

#[test]
fn analyze_emits_profile_table() {
    let v = json(&run(&["analyze", corpus("plane-quintic").to_str().unwrap(), "--emit-profile-table"]));
    let rows = v["profile_table"]["entries"].as_array().unwrap();
    let two = rows.iter().find(|r| r["partition"] == "[2,2]").unwrap();
    assert_eq!(two["profile"], serde_json::json!([3, 6]));
}

#[test]
fn reducible_input_exits_4() {
    let f = scratch("reducible.curve", "p = 1009; f = x^4 - 2*t*x^2 - x^2 + t^2 + t\n");
    assert_eq!(code(&run(&["analyze", f.to_str().unwrap()])), 4);
}

#[test]
fn small_modulus_exits_3() {
    let f = scratch("wild.curve", "p = 3; f = x^3 - t\n");
    assert_eq!(code(&run(&["analyze", f.to_str().unwrap()])), 3);
    assert_eq!(code(&run(&["gen-curve", "--c", "1", "--d", "5", "--e", "0", "--p", "5"])), 3);
}

#[test]
fn malformed_curve_files_exit_2() {
    for (name, text) in [
        ("unknown.curve", "p = 1009; q = 2; f = x^2 - t\n"),
        ("twice.curve", "p = 1009; p = 1013; f = x^2 - t\n"),
        ("nop.curve", "f = x^2 - t\n"),
        ("composite.curve", "p = 1001; f = x^2 - t\n"),
        ("garbage.curve", "p = 1009; f = x^2 - ) t\n"),
    ] {
        let f = scratch(name, text);
        assert_eq!(code(&run(&["analyze", f.to_str().unwrap()])), 2, "{name}");
    }
}

#[test]
fn comments_and_newlines_are_accepted() {
    let f = scratch("comments.curve", "# a double cover\np = 1009\nf = x^2 - t  # branched at 0 and infinity\n");
    let v = json(&run(&["analyze", f.to_str().unwrap()]));
    assert_eq!(v["genus"], 0);
}

#[test]
fn gen_curve_is_deterministic() {
    let a = run(&["--seed", "4", "gen-curve", "--c", "1", "--d", "4", "--e", "1"]);
    let b = run(&["--seed", "4", "gen-curve", "--c", "1", "--d", "4", "--e", "1"]);
    let c = run(&["--seed", "5", "gen-curve", "--c", "1", "--d", "4", "--e", "1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
    assert!(String::from_utf8_lossy(&a.stdout).starts_with("p = 1009; f = x^4"));
}

#[test]
fn gen_curve_writes_file_with_expected_invariants() {
    let dir = std::env::temp_dir().join(format!("scrollar-lab-gen-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (c, d, e, genus, scrollar) in [("3", "3", "0", 4, vec![3, 3]), ("1", "4", "1", 6, vec![2, 3, 4])] {
        let path = dir.join(format!("{c}{d}{e}.curve"));
        let summary = json(&run(&["gen-curve", "--c", c, "--d", d, "--e", e, "--out", path.to_str().unwrap()]));
        assert_eq!(summary["genus"], genus);
        let v = json(&run(&["analyze", path.to_str().unwrap()]));
        assert_eq!(v["genus"], genus);
        assert_eq!(v["scrollar"], serde_json::json!(scrollar));
    }
}

#[test]
fn verify_records_are_byte_stable() {
    let f = corpus("plane-quintic");
    let a = run(&["verify", f.to_str().unwrap(), "--check", "quartic-dihedral"]);
    let b = run(&["verify", f.to_str().unwrap(), "--check", "quartic-dihedral"]);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["match"], true);
    assert_eq!(v["predicted"]["genus"], 7);
    assert_eq!(v["measured"]["profile"], serde_json::json!([3, 6]));
    assert!(v.get("runtime_ms").is_none());
    let t = json(&run(&["verify", f.to_str().unwrap(), "--check", "quartic-dihedral", "--timing"]));
    assert!(t["runtime_ms"].is_u64());
}

#[test]
fn verify_usage_errors() {
    let f = corpus("plane-quintic");
    let f = f.to_str().unwrap();
    assert_eq!(code(&run(&["verify", f, "--check", "no-such-check"])), 2);
    assert_eq!(code(&run(&["verify", f, "--check", "cayley-sextic"])), 2);
    assert_eq!(code(&run(&["verify", f, "--check", "hirzebruch-prediction"])), 2);
    assert_eq!(code(&run(&["verify", f, "--check", "hirzebruch-prediction", "--hirzebruch", "2,0"])), 2);
}

#[test]
fn good_branching_is_reported_not_fatal() {
    let f = corpus("quartic-good");
    let out = run(&["verify", f.to_str().unwrap(), "--check", "volume"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["hypotheses"]["branching"], "good");
    assert_eq!(v["match"], true);
    assert_eq!(v["details"]["outside_hypotheses"], serde_json::json!(["[2,1,1]", "[1,1,1,1]"]));
    let out = run(&["verify", f.to_str().unwrap(), "--check", "duality"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["conclusive"], false);
}

#[test]
fn verify_quartic_corpus() {
    let checks = [
        "quadric-shifts",
        "syzygy-shifts",
        "resolvent-profile",
        "resolvent-genus",
        "first-syzygy-union",
        "volume",
        "duality",
        "quartic-dihedral",
    ];
    for name in ["plane-quintic", "quartic-f0", "quartic-f1"] {
        for check in checks {
            let out = run(&["verify", corpus(name).to_str().unwrap(), "--check", check]);
            assert_eq!(code(&out), 0, "{name} {check}: {}", String::from_utf8_lossy(&out.stdout));
        }
    }
}

#[test]
fn verify_quintic_corpus() {
    let f = corpus("plane-sextic");
    for check in ["quadric-shifts", "syzygy-shifts", "first-syzygy-union", "cayley-sextic"] {
        let out = run(&["verify", f.to_str().unwrap(), "--check", check]);
        assert_eq!(code(&out), 0, "{check}: {}", String::from_utf8_lossy(&out.stdout));
    }
    let out = run(&["verify", f.to_str().unwrap(), "--check", "hirzebruch-prediction", "--hirzebruch", "1,1"]);
    let v = json(&out);
    assert_eq!(v["match"], true);
    assert_eq!(v["measured"]["[3,2]"], serde_json::json!([3, 4, 6, 7, 8]));
}

#[test]
fn verify_trigonal_uses_discriminant_resolvent() {
    let v = json(&run(&["verify", corpus("trigonal-f1").to_str().unwrap(), "--check", "resolvent-genus"]));
    assert_eq!(v["details"]["subgroup"], "alternating");
    assert_eq!(v["match"], true);
}
