use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

use demazure::charpoly::freudenthal_oracle;
use demazure::{LieType, RootDatum, Weight};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_demazure"))
        .args(args)
        .env_remove("DEMAZURE_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], key: &str, val: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_demazure")).args(args).env(key, val).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.code().is_some(), "terminated by signal");
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stderr)))
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn g2_table_csv() {
    let out = run(&["table", "--type", "G", "--rank", "2"]);
    assert_eq!(code(&out), 0);
    let expected = "word,hilbert_basis,extremal_rays\n\
                    e,2,2\n1,3,3\n2,3,3\n\"1,2\",7,5\n\"2,1\",5,5\n\"1,2,1\",10,7\n\"2,1,2\",11,7\n\
                    \"1,2,1,2\",17,9\n\"2,1,2,1\",14,9\n\"1,2,1,2,1\",19,11\n\"2,1,2,1,2\",19,11\n\
                    \"1,2,1,2,1,2\",20,12\n";
    assert_eq!(String::from_utf8(out.stdout).unwrap(), expected);
    let via_hilbert = run(&["hilbert", "--type", "G", "--rank", "2", "--table", "--format", "csv"]);
    assert_eq!(String::from_utf8(via_hilbert.stdout).unwrap(), expected);
}

#[test]
fn table_json_with_property_p() {
    let out = run(&["table", "--type", "G", "--rank", "2", "--format", "json", "--property-p", "--jobs", "2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().all(|r| r["property_p"] == true && r["cone_equal"] == true));
}

#[test]
fn saturate_g2_longest() {
    let out = run(&["saturate", "--type", "G", "--rank", "2", "--lambda", "1,1", "--word", "1,2,1,2,1,2", "--property-p"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["saturated"], true);
    assert_eq!(v["missing_from_character"].as_array().unwrap().len(), 0);
    assert_eq!(v["missing_from_polytope"].as_array().unwrap().len(), 0);
    assert_eq!(v["property_p"]["holds"], true);
    assert_eq!(v["conjectural"], false);
}

#[test]
fn char_records_and_full_character() {
    // s_1 s_2 applied to omega_1 stays inside the two-weight module V^{s_1}
    let out = run(&["char", "--type", "A", "--rank", "2", "--lambda", "1,0", "--word", "1,2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["terms"].as_array().unwrap().len(), 2);
    let out = run(&["char", "--type", "A", "--rank", "2", "--lambda", "1,0", "--word", "2,1"]);
    assert_eq!(json(&out)["terms"].as_array().unwrap().len(), 3);

    let d = RootDatum::new(LieType::B, 2).unwrap();
    let oracle = freudenthal_oracle(&d, &Weight(vec![1, 2])).unwrap();
    let out = run(&["char", "--type", "B", "--rank", "2", "--lambda", "1,2", "--word", "1,2,1,2"]);
    let terms = json(&out)["terms"].as_array().unwrap().clone();
    assert_eq!(terms.len(), oracle.len());
    for (t, (mu, m)) in terms.iter().zip(oracle.iter()) {
        let w: Vec<i64> = t["weight"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
        assert_eq!(w, mu.0);
        assert_eq!(t["mult"].as_i64().unwrap(), m);
    }
}

#[test]
fn char_csv_and_normalize_word() {
    let out = run(&["char", "--type", "A", "--rank", "2", "--lambda", "1,0", "--word", "2,1", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "weight,mult\n\"-1,1\",1\n\"0,-1\",1\n\"1,0\",1\n");
    let rejected = run(&["char", "--type", "A", "--rank", "2", "--lambda", "1,0", "--word", "2,2,1"]);
    assert_eq!(code(&rejected), 2);
    let normalized = run(&["char", "--type", "A", "--rank", "2", "--lambda", "1,0", "--word", "2,2,1", "--normalize-word"]);
    assert_eq!(code(&normalized), 0);
    assert_eq!(json(&normalized)["word"], "2,1");
}

#[test]
fn figure_segment_values() {
    let out = run(&[
        "segment", "--type", "A", "--rank", "3", "--lambda", "5,4,6", "--word", "2,1", "--mu", "-6,5,9", "--index", "1",
    ]);
    assert_eq!(code(&out), 0);
    let s = &json(&out)["segment"];
    assert_eq!(s["lower"], serde_json::json!(["-2", "3", "9"]));
    assert_eq!(s["upper"], serde_json::json!(["8", "-2", "9"]));
    let out = run(&[
        "segment", "--type", "A", "--rank", "3", "--lambda", "5,4,6", "--word", "3,2,1", "--mu", "10,-2,-9", "--index", "2",
    ]);
    let s = &json(&out)["segment"];
    assert_eq!(s["degenerate"], true);
    assert_eq!(s["lower"], serde_json::json!(["6", "6", "-13"]));
}

#[test]
fn segment_with_rational_point_and_empty_line() {
    let out = run(&[
        "segment", "--type", "B", "--rank", "2", "--lambda", "1,1", "--word", "1,2,1,2", "--mu", "1/2,0", "--index", "2",
    ]);
    assert_eq!(code(&out), 0);
    assert!(json(&out)["segment"].is_object());
    let out = run(&["segment", "--type", "A", "--rank", "2", "--lambda", "1,0", "--word", "e", "--mu", "5,5", "--index", "1"]);
    assert_eq!(code(&out), 0);
    assert!(json(&out)["segment"].is_null());
}

#[test]
fn polytope_serializes_rationals_as_strings() {
    let out = run(&["polytope", "--type", "B", "--rank", "2", "--lambda", "0,1", "--word", "2,1"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let ineqs = v["inequalities"].as_array().unwrap();
    assert!(!ineqs.is_empty());
    assert!(ineqs.iter().all(|h| h["normal"].as_array().unwrap().iter().all(Value::is_string)));
    assert!(ineqs.iter().any(|h| h["normal"].as_array().unwrap().iter().any(|x| x.as_str().unwrap().contains('/'))));
    assert!(v["vertices"].as_array().unwrap().iter().all(|p| p.as_array().unwrap().iter().all(Value::is_string)));
}

#[test]
fn points_match_saturation_counts() {
    let out = run(&["points", "--type", "C", "--rank", "3", "--lambda", "1,0,1", "--word", "3,2,1,3"]);
    let pts = json(&out);
    let sat = json(&run(&["saturate", "--type", "C", "--rank", "3", "--lambda", "1,0,1", "--word", "3,2,1,3"]));
    assert_eq!(pts["count"], sat["lattice_points"]);
    assert_eq!(pts["points"].as_array().unwrap().len() as u64, pts["count"].as_u64().unwrap());
}

#[test]
fn faces_checks_pass() {
    let out = run(&["faces", "--type", "A", "--rank", "3", "--lambda", "1,0,2", "--word", "2,1,3,2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["failures"], 0);
    let faces = v["faces"].as_array().unwrap();
    // |W^{P_1}| + |W^{P_2}| + |W^{P_3}| = 4 + 6 + 4
    assert_eq!(faces.len(), 14);
    assert!(faces.iter().all(|f| f["levi"]["indices"].is_array()));
}

#[test]
fn cone_and_hilbert_f4_sample() {
    let out = run(&["cone", "--type", "F", "--rank", "4", "--word", "1,2,3,4"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["rays"].as_array().unwrap().len(), 14);
    assert_eq!(v["cone_equality"]["equal"], true);
    let out = run(&["hilbert", "--type", "F", "--rank", "4", "--word", "1,2,3,4", "--property-p"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["elements"].as_array().unwrap().len(), 14);
    assert_eq!(v["property_p"]["holds"], true);
}

#[test]
fn e6_output_is_flagged_conjectural() {
    let out = run(&["saturate", "--type", "E", "--rank", "6", "--lambda", "1,0,0,0,0,0", "--word", "1,3,4"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["conjectural"], true);
}

#[test]
fn usage_errors_exit_with_two() {
    let cases: [&[&str]; 9] = [
        &["char", "--type", "A", "--rank", "2", "--lambda", "-1,1", "--word", "1"],
        &["char", "--type", "A", "--rank", "2", "--lambda", "1,0,0", "--word", "1"],
        &["char", "--type", "A", "--rank", "2", "--lambda", "1,0", "--word", "3"],
        &["char", "--type", "G", "--rank", "3", "--lambda", "1,0,0"],
        &["char", "--type", "A", "--rank", "2"],
        &["segment", "--type", "A", "--rank", "2", "--lambda", "1,0", "--mu", "1,0", "--index", "3"],
        &["table", "--type", "F", "--rank", "4", "--cap-order", "100"],
        &["sweep", "--type", "A", "--rank", "2", "--sample", "7"],
        &["bogus"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(code(&out), 2, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(out.stdout.is_empty());
    }
    // errors name the offending instance
    let out = run(&["char", "--type", "A", "--rank", "2", "--lambda", "1,0", "--word", "1,1"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("word=[1,1]"));
}

#[test]
fn sweeps_report_no_failures() {
    let out = run(&["sweep", "--type", "A", "--rank", "2", "--max-coord", "4"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["summary"]["instances"], 150);
    assert_eq!(v["summary"]["failures"], 0);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    let out = run(&["sweep", "--type", "G", "--rank", "2", "--max-coord", "3", "--property-p"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["summary"]["instances"], 16 * 12);
    assert_eq!(v["summary"]["failures"], 0);
    assert!(v.get("wall_time").is_none());
}

#[test]
fn sweep_sampling_and_filters() {
    let out = run(&["sweep", "--type", "F", "--rank", "4", "--max-coord", "0", "--sample", "5", "--seed", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["summary"]["instances"], 5);
    let out = run(&["sweep", "--type", "B", "--rank", "3", "--max-coord", "1", "--max-length", "2"]);
    // identity, three simple reflections and the length-two elements
    let v = json(&out);
    assert_eq!(v["summary"]["instances"], 8 * (1 + 3 + 5));
    let out = run(&["sweep", "--type", "B", "--rank", "3", "--max-coord", "1", "--word", "3,2"]);
    assert_eq!(json(&out)["summary"]["instances"], 8);
}

#[test]
fn sweep_reports_are_byte_stable() {
    let a = run(&["sweep", "--type", "B", "--rank", "2", "--max-coord", "2", "--jobs", "1"]);
    let b = run(&["sweep", "--type", "B", "--rank", "2", "--max-coord", "2", "--jobs", "4"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["sweep", "--type", "B", "--rank", "2", "--max-coord", "2", "--format", "csv"]);
    let b = run(&["sweep", "--type", "B", "--rank", "2", "--max-coord", "2", "--format", "csv"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn output_file_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let args = ["sweep", "--type", "A", "--rank", "2", "--max-coord", "1"];
    let direct = run(&args);
    let mut with_out: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap();
    with_out.extend(["--output", p]);
    let out = run(&with_out);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    assert_eq!(fs::read(&path).unwrap(), direct.stdout);
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
}

fn cache_file(dir: &Path) -> std::path::PathBuf {
    let files: Vec<_> = fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(files.len(), 1);
    files[0].clone()
}

#[test]
fn cache_is_reused_and_rebuilt() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let args = ["sweep", "--type", "G", "--rank", "2", "--max-coord", "2", "--cache-dir", d];
    let fresh = run(&["sweep", "--type", "G", "--rank", "2", "--max-coord", "2"]);
    let first = run(&args);
    assert_eq!(first.stdout, fresh.stdout);
    let file = cache_file(dir.path());
    let text = fs::read_to_string(&file).unwrap();
    let header: Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(header["format"], "demazure-sweep-cache");
    assert_eq!(header["fingerprint"].as_str().unwrap().len(), 64);
    assert_eq!(text.lines().count(), 1 + 9 * 12);

    let second = run(&args);
    assert_eq!(second.stdout, fresh.stdout);

    // a tampered record picked by the spot check forces a rebuild
    let tampered: Vec<String> = text
        .lines()
        .map(|l| {
            let mut v: Value = serde_json::from_str(l).unwrap();
            if v["key"] == "0,0|e|-" {
                v["record"]["counts"]["weights"] = 99.into();
            }
            serde_json::to_string(&v).unwrap()
        })
        .collect();
    fs::write(&file, tampered.join("\n") + "\n").unwrap();
    let third = run(&args);
    assert_eq!(third.stdout, fresh.stdout);
    assert!(String::from_utf8_lossy(&third.stderr).contains("re-verification"));
    assert!(!fs::read_to_string(&file).unwrap().contains("99"));

    // garbage is discarded with a warning
    fs::write(&file, "not json\n").unwrap();
    let fourth = run_env(&["sweep", "--type", "G", "--rank", "2", "--max-coord", "2"], "DEMAZURE_CACHE_DIR", dir.path());
    assert_eq!(fourth.stdout, fresh.stdout);
    assert!(String::from_utf8_lossy(&fourth.stderr).contains("rebuilding"));
    assert_eq!(fs::read_to_string(&file).unwrap().lines().count(), 1 + 9 * 12);
}
