use std::process::{Command, Output};

use liebialg::exact_algebra::{Poly, Rational};
use liebialg::galilei_orbits::{act, classify, Automorphism, ClassId, OrbitClass, OrbitClassJson, SixTuple};
use liebialg::poisson_group::BracketTable;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liebialg"))
        .args(args)
        .env("LIEBIALG_SEED", "1995")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn table2_symbolic_matches_golden() {
    let out = run(&["table2", "--all", "--symbolic"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), include_str!("golden/table2_symbolic.md"));
}

#[test]
fn table1_matches_golden() {
    let out = run(&["table1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), include_str!("golden/table1.md"));
}

#[test]
fn golden_rows_match_hand_entered_brackets() {
    // {a,v}, {a,tau}, {v,tau} typed in by hand, independent of the golden file
    let expected = [
        ["-1/2*tau0*v^2", "tau0*a + eps*tau0^2*v", "tau0*v"],
        ["-v0^2*tau - eps*v0*tau0*v", "-eps*v0*tau0*tau + tau0^2*v", "0"],
        ["v0^2*tau - eps*v0*tau0*v", "-eps*v0*tau0*tau - tau0^2*v", "0"],
        ["v0^2*tau - eps*v0*tau0*v", "-eps*v0*tau0*tau + tau0^2*v", "0"],
        ["0", "tau0^2*v", "0"],
        ["-v0*tau0*v", "-v0*tau0*tau + tau0^2*v", "0"],
        ["0", "-tau0^2*v", "0"],
        ["-v0*tau0*v", "-v0*tau0*tau - tau0^2*v", "0"],
        ["-v0*tau0*v", "-tau0*v0*tau", "0"],
    ];
    let rows = json(&["table2", "--all", "--symbolic", "--format", "json"]);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 9);
    for (row, want) in rows.iter().zip(expected) {
        let got: BracketTable = serde_json::from_value(row.clone()).unwrap();
        let want = BracketTable::from_strs(want[0], want[1], want[2]).unwrap();
        assert_eq!(got, want, "class {}", row["class"]);
    }
}

#[test]
fn classify_examples() {
    let v = json(&["classify", "--params", "0,1,-1,0,0,0"]);
    assert_eq!(v["class"], 9);
    assert_eq!(v["coboundary"], true);

    let v = json(&["classify", "--params", "0,0,0,0,0,0"]);
    assert_eq!(v["class"], "trivial");

    // r = 2, s = 0, rho = 3: epsilon = rho / r^2
    let v = json(&["classify", "--params", "0,0,0,3,2,0"]);
    assert_eq!(v["class"], 1);
    assert_eq!(v["epsilon_exact"], "3/4");

    let v = json(&["classify", "--json", r#"{"alpha":"1","beta":"0","gamma":"0","rho":"1","r":"0","s":"0"}"#]);
    assert_eq!(v["class"], 2);
}

#[test]
fn classify_witness_maps_to_canonical() {
    let v = json(&["classify", "--params", "2,3,1,5,0,0", "--witness"]);
    assert_eq!(v["class"], 2);
    let w = &v["witness"];
    assert_eq!(w["kind"], "approximate");
    let phi: Automorphism<f64> = serde_json::from_value(w.clone()).unwrap();
    let p: SixTuple<Rational> = "2,3,1,5,0,0".parse().unwrap();
    let class = classify(&p).unwrap();
    let image = act(&p.to_f64(), &phi).unwrap().to_array();
    for (x, y) in image.iter().zip(class.canonical_f64().to_array()) {
        assert!((x - y).abs() < 1e-9, "{image:?}");
    }
}

#[test]
fn json_outputs_read_back() {
    for params in ["0,1,-1,0,0,0", "0,0,0,3,2,0", "1,0,0,1,0,0", "0,2,-2,1,0,0", "0,0,0,0,0,0"] {
        let v = json(&["classify", "--params", params]);
        let parsed: OrbitClassJson = serde_json::from_value(v.clone()).unwrap();
        let class = OrbitClass::try_from(&parsed).unwrap();
        let tuple: SixTuple<Rational> = params.parse().unwrap();
        assert_eq!(class, classify(&tuple).unwrap());

        // the canonical tuple goes back in through --json and lands in the same class
        if let Some(canon) = v.get("canonical") {
            let again = json(&["classify", "--json", &canon.to_string()]);
            assert_eq!(again["class"], v["class"]);
        }
    }

    let rows = json(&["table1", "--format", "json"]);
    for row in rows.as_array().unwrap() {
        let id: ClassId = serde_json::from_value(row["class"].clone()).unwrap();
        let canon: SixTuple<Poly> = serde_json::from_value(row["canonical"].clone()).unwrap();
        assert_eq!(serde_json::to_value(&canon).unwrap(), row["canonical"]);
        assert_eq!(row["coboundary"], id.is_coboundary());
    }

    let space = json(&["cocycle-space", "--format", "json"]);
    assert_eq!(space["dimension"], 6);
    for delta in space["basis"].as_array().unwrap() {
        let v = json(&["check-bialgebra", "--delta", &delta.to_string()]);
        assert_eq!(v["cocycle"], true);
    }
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["check-bialgebra", "--params", "0,1,-1,0,0,0"]), Some(0));
    assert_eq!(code(&["check-bialgebra", "--params", "1,0,0,0,1,0"]), Some(1));
    assert_eq!(code(&["classify", "--params", "1,0,0,0,1,0"]), Some(1));
    assert_eq!(code(&["classify", "--params", "1,2,3"]), Some(2));
    assert_eq!(code(&["classify", "--params", "1,x,0,0,0,0"]), Some(2));
    assert_eq!(code(&["classify", "--json", "{\"alpha\": 1}"]), Some(2));
    assert_eq!(code(&["table2", "--class", "12"]), Some(2));
    assert_eq!(code(&["table2", "--class", "3", "--epsilon", "-1"]), Some(2));
    assert_eq!(code(&["table2", "--class", "6", "--epsilon", "1"]), Some(2));
    assert_eq!(code(&["table2", "--class", "1", "--v0", "0"]), Some(2));
    assert_eq!(code(&["check-bialgebra", "--delta", "{\"Q\": []}"]), Some(2));
    assert_eq!(code(&["no-such-command"]), Some(2));
}

#[test]
fn violation_names_the_constraint() {
    let out = run(&["check-bialgebra", "--params", "1,0,0,0,1,0"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("2*r*alpha - s*(beta + gamma)"), "{err}");
}

#[test]
fn numeric_table2_substitutes_scales() {
    let rows = json(&["table2", "--class", "1", "--epsilon", "2", "--tau0", "3", "--v0", "1/2", "--format", "json"]);
    let got: BracketTable = serde_json::from_value(rows[0].clone()).unwrap();
    let want = BracketTable::from_strs("-3/2*v^2", "3*a + 18*v", "3*v").unwrap();
    assert_eq!(got, want);
}

#[test]
fn symbolic_delta_reports_constraints() {
    let delta = r#"{"P": [["s","K∧P"],["-r","H∧P"]],
                    "H": [["s","K∧H"],["alpha","K∧P"],["-beta","H∧P"]],
                    "K": [["r","K∧H"],["gamma","K∧P"],["-rho","H∧P"]]}"#;
    let out = run(&["check-bialgebra", "--delta", delta]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["cocycle"], true);
    assert_eq!(v["constraints"].as_array().unwrap().len(), 2);
}

#[test]
fn r_matrix_commands() {
    // P∧H sits in the abelian ideal, so [[r,r]] = 0
    let v = json(&["cybe", "--r", "1,0,0"]);
    assert_eq!(v["cybe"], true);

    let out = run(&["cybe", "--r", "0,0,1"]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["schouten", "--r", "K^H=1"]);
    assert!(out.status.success());
    assert_ne!(stdout(&out).trim(), "0");
}

#[test]
fn verify_all_passes() {
    let out = run(&["verify-all"]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 10);
}
