use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hurewicz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = run(&all);
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn homology_golden() {
    let o = run(&["homology", "torus", "--degree", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "H_1(torus; Z) = Z^2\n");
    let o = run(&["homology", "klein", "--coeff", "Z/2", "--degree", "1", "--reduced"]);
    assert_eq!(stdout(&o), "H~_1(klein; Z/2) = Z/2 + Z/2\n");
    let o = run(&["homology", "S0", "--degree", "0"]);
    assert_eq!(stdout(&o), "H_0(S0; Z) = Z^2\n");
}

#[test]
fn algebra_golden() {
    assert_eq!(stdout(&run(&["tensor", "Z/4", "Z/6"])), "Z/2\n");
    assert_eq!(stdout(&run(&["tensor", "Z^2", "Z/3 + Z/5"])), "Z/15 + Z/15\n");
    let o = run(&["abelianize", "< x, y | x^2 y^-3 >"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("= Z"), "{}", stdout(&o));
}

#[test]
fn hurewicz_and_pi1() {
    let o = run(&["hurewicz", "klein", "--coeff", "Z/2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "pi1^ab = Z + Z/2"), "{text}");
    assert_eq!(text.lines().last(), Some("iso: Z/2 + Z/2"));
    let v = json(&["hurewicz", "torus"]);
    assert_eq!(v["iso"], true);
    assert_eq!(v["homology"], "Z^2");
    let v = json(&["pi1", "RP2"]);
    assert_eq!(v["abelianization_text"], "Z/2");
}

#[test]
fn smash_suspend_and_stable() {
    let o = run(&["smash", "S1", "S1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("H~_2(S1^S1; Z) = Z"), "{text}");
    let v = json(&["suspend", "M3"]);
    assert_eq!(v["homology"][2], "Z/3");
    let o = run(&["stable", "S1", "--coeff", "Z/2", "--degree", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("stable H~_1(S1; Z/2) = Z/2"), "{}", stdout(&o));
}

#[test]
fn emitted_complexes_read_back() {
    let o = run(&["-D", "3", "suspend", "S1", "--emit"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let start = text.find("truncation").unwrap();
    let dir = std::env::temp_dir().join(format!("hurewicz-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s2.sset");
    std::fs::write(&path, &text[start..]).unwrap();
    let arg = format!("@{}", path.display());
    let o = run(&["homology", &arg, "--degree", "2", "--reduced"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).ends_with("= Z\n"), "{}", stdout(&o));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["homology", "torus"]).status.code(), Some(2));
    let o = run(&["-D", "2", "homology", "S2", "--degree", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("truncation"));
    let o = run(&["tensor", "Z", "Z + Q"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("1:5"), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(run(&["homology", "nowhere", "--degree", "1"]).status.code(), Some(2));
    assert_eq!(run(&["verify-suite", "--filter", "no-such-criterion"]).status.code(), Some(2));
    let v = json(&["homology", "nowhere", "--degree", "1"]);
    assert!(v["error"].as_str().unwrap().contains("unknown space"));
}

#[test]
fn verify_suite_filter() {
    let o = run(&["verify-suite", "--filter", "smith"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("[PASS] 12 smith-certificates"), "{text}");
    assert!(text.trim_end().ends_with("1 passed, 0 failed"));
    let v = json(&["verify-suite", "--filter", "eckmann"]);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["results"][0]["passed"], true);
}
