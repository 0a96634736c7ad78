use std::process::{Command, Output};

use serde_json::Value;

fn spherical(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spherical"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = spherical(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn show_prints_generators() {
    let out = stdout(&["show", "C3", "X_2", "--variant", "O"]);
    assert!(out.lines().any(|l| l == "generators: 2w1, 2w2"), "{out}");
}

#[test]
fn member_examples() {
    assert_eq!(stdout(&["member", "E7", "4A1", "0,1,0,0,1,0,0"]), "true\n");
    assert_eq!(stdout(&["member", "E7", "4A1", "0,1,0,0,0,0,0"]), "false\n");
    assert_eq!(stdout(&["member", "G2", "A1tilde~closure", "1,0"]), "false\n");
    assert_eq!(stdout(&["member", "G2", "A1tilde", "1,0"]), "true\n");
    assert_eq!(stdout(&["member", "G2", "A1tilde", "1,0", "--variant", "closure"]), "false\n");
}

#[test]
fn show_then_member_round_trip() {
    for (group, label) in [("B3", "Z_2"), ("D6", "exp(pi i w3)"), ("E7", "exp(zeta w7)"), ("F4", "f_2 x_beta_1(1)")] {
        let list: Value = serde_json::from_str(&stdout(&["list", group, "--format", "json"])).unwrap();
        assert!(list.as_array().unwrap().iter().any(|c| c["label"] == label));
        let classes: Value = serde_json::from_str(&stdout(&["table", group, "--format", "json"])).unwrap();
        let class = classes.as_array().unwrap().iter().find(|c| c["label"] == label).unwrap();
        for m in class["monoids"].as_array().unwrap() {
            let variant = m["variant"].as_str().unwrap();
            for g in m["generators"].as_array().unwrap() {
                let coords: Vec<String> = g.as_array().unwrap().iter().map(|x| x.to_string()).collect();
                let got = stdout(&["member", group, label, &coords.join(","), "--variant", variant]);
                assert_eq!(got, "true\n", "{group} {label} {variant} {coords:?}");
            }
        }
    }
}

#[test]
fn json_generators_are_graded() {
    let v: Value = serde_json::from_str(&stdout(&["show", "D4", "Z_2", "--variant", "cover", "--format", "json"])).unwrap();
    let gens: Vec<Vec<i64>> = serde_json::from_value(v["monoid"]["generators"].clone()).unwrap();
    assert!(!gens.is_empty());
    for w in gens.windows(2) {
        let deg = |g: &[i64]| g.iter().sum::<i64>();
        assert!(deg(&w[0]) < deg(&w[1]) || (deg(&w[0]) == deg(&w[1]) && w[0] > w[1]), "{gens:?}");
    }
    assert_eq!(v["group"], "D4");
    assert_eq!(v["monoid"]["variant"], "cover");
}

#[test]
fn isogeny_variant() {
    let out = stdout(&["show", "E7", "exp(zeta w7)", "--variant", "isogeny:Z"]);
    assert!(out.contains("variant: isogeny:Z"), "{out}");
    let bad = spherical(&["show", "E7", "4A1", "--variant", "isogeny:Z"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn domain_errors_exit_one() {
    for args in [
        &["member", "A2", "nope", "1,0"][..],
        &["member", "C3", "X_2", "1,0"],
        &["member", "C3", "X_2", "1,x,0"],
        &["show", "Q3", "X_1"],
        &["show", "C3", "X_2", "--variant", "sideways"],
        &["show", "C3", "X_2~O", "--variant", "cover"],
        &["snf", "1,2;3"],
        &["frobnicate"],
    ] {
        let out = spherical(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn snf_output() {
    let out = stdout(&["snf", "2,4,4;-6,6,12;10,-4,-16"]);
    assert!(out.starts_with("diagonal: 2, 6, 12\n"), "{out}");
    let v: Value = serde_json::from_str(&stdout(&["snf", "0,3;-2,0", "--format", "json"])).unwrap();
    assert_eq!(v["diagonal"], serde_json::json!(["1", "6"]));
}

#[test]
fn latex_table_layout() {
    let out = stdout(&["table", "C3", "--format", "latex"]);
    assert!(out.starts_with("\\begin{tabular}"));
    assert!(out.contains("\\texttt{X\\_2} & $\\langle 2\\omega_{1}, 2\\omega_{2} \\rangle$"), "{out}");
    assert!(out.trim_end().ends_with("\\end{tabular}"));
}

#[test]
fn verify_small_sweep() {
    let out = spherical(&["verify", "--rank-max", "3", "--max-coeff", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["max_coeff"], 4);
    let classes: Vec<&str> = v["oracle"].as_array().unwrap().iter().map(|r| r["class"].as_str().unwrap()).collect();
    let mut sorted = classes.clone();
    sorted.sort();
    assert_eq!(classes, sorted);
}
