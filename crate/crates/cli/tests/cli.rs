use dp3::algebra::{FactoredDenom, PolyZ, RatFuncZ};
use dp3::coeffs::CoeffTable;
use dp3::numerics::{eval_ode, SolutionEvaluator};
use rug::Integer;
use std::process::{Command, Output};

fn dp3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dp3")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn coeffs_through_u10() {
    let o = dp3(&["coeffs", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("\n5 | 10800 12657 3345 273 | 1^3 2^2 3^1 4^1 5^1\n"), "{text}");
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 5);
}

#[test]
fn coeffs_single_entry() {
    let o = dp3(&["coeffs", "--n", "1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,m,denominator,numerator\n1,0,1^1,1\n");
}

#[test]
fn coeffs_json_round_trip() {
    let o = dp3(&["coeffs", "--n", "40", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let table = CoeffTable::build(40);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 40);
    for (e, want) in entries.iter().zip(table.entries()) {
        let num: Vec<Integer> =
            e["numerator"].as_array().unwrap().iter().map(|c| c.as_str().unwrap().parse().unwrap()).collect();
        let den = FactoredDenom::from_pairs(
            e["denominator"].as_array().unwrap().iter().map(|p| (p[0].as_u64().unwrap(), p[1].as_u64().unwrap() as u32)),
        );
        assert_eq!(&RatFuncZ::raw(PolyZ::new(num), den), want, "n = {}", e["n"]);
        assert_eq!(e["matches_prediction"], true);
    }
}

#[test]
fn zero_n_is_a_usage_error() {
    assert_eq!(dp3(&["coeffs", "--n", "0"]).status.code(), Some(2));
    assert_eq!(dp3(&["coeffs"]).status.code(), Some(2));
}

#[test]
fn divisibility_suite() {
    let o = dp3(&["verify", "--suite", "divisibility"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS strange divisibility, printed item")).count(), 8);
    assert!(!text.contains("FAIL"));
}

#[test]
fn all_suites_at_small_depth() {
    let start = std::time::Instant::now();
    let o = dp3(&["verify", "--suite", "all", "--n", "12"]);
    assert!(start.elapsed().as_secs() < 60);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    for s in ["structure", "divisibility", "genfun-a", "genfun-b", "residues", "fence"] {
        assert!(text.contains(&format!("# suite {s} (n = 12)")), "{s}");
    }
    assert!(text.lines().last().unwrap().ends_with("checks passed"));
}

#[test]
fn thread_count_does_not_change_output() {
    let run = |t: &str| {
        Command::new(env!("CARGO_BIN_EXE_dp3"))
            .args(["verify", "--suite", "all", "--n", "10"])
            .env("DP3_THREADS", t)
            .output()
            .unwrap()
    };
    let one = run("1");
    assert_eq!(one.stdout, run("4").stdout);
    assert_eq!(run("0").status.code(), Some(2));
}

#[test]
fn fence_suite() {
    let o = dp3(&["verify", "--suite", "fence", "--n", "60"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS fence zeros z_n equal the grammar prediction [n <= 60]"));
}

#[test]
fn eval_matches_library() {
    let o = dp3(&["eval", "--a", "i0.5", "--b", "1", "--tau", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    let ev = SolutionEvaluator::new("i0.5".parse().unwrap(), "1".parse().unwrap()).unwrap();
    let u = eval_ode::<f64>(&ev, 3.0, None).unwrap();
    assert_eq!(row[1].parse::<f64>().unwrap(), u.re);
    assert_eq!(row[2].parse::<f64>().unwrap(), u.im);
    assert_eq!(row[3], "ode");
}

#[test]
fn eval_is_odd_and_uses_the_series_near_zero() {
    let plus = stdout(&dp3(&["eval", "--a", "-2/3", "--b", "1/8", "--tau", "0.5"]));
    let minus = stdout(&dp3(&["eval", "--a", "-2/3", "--b", "1/8", "--tau", "-0.5"]));
    let p: Vec<&str> = plus.lines().nth(1).unwrap().split(',').collect();
    let m: Vec<&str> = minus.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(p[3], "series");
    assert_eq!(p[1].parse::<f64>().unwrap(), -m[1].parse::<f64>().unwrap());
}

#[test]
fn eval_errors() {
    let o = dp3(&["eval", "--a", "2i", "--b", "1", "--tau", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("iZ"));
    let o = dp3(&["eval", "--a", "1/2", "--b", "1", "--tau", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("pole"));
    assert_eq!(dp3(&["eval", "--a", "1", "--alpha", "1", "--b", "1", "--tau", "1"]).status.code(), Some(2));
    assert_eq!(dp3(&["eval", "--a", "x", "--b", "1", "--tau", "1"]).status.code(), Some(2));
}

#[test]
fn compare_gate_names_the_inequality() {
    let o = dp3(&["compare", "--a", "1/5", "--b", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("ln(1 - e^{2 pi a}))| < 1/2"), "{}", stderr(&o));
}

#[test]
fn compare_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("a.csv");
    let p2 = dir.path().join("b.csv");
    let cfg = dir.path().join("run.json");
    let args = |out: &str| {
        vec!["compare", "--a", "-0.6667", "--b", "0.125", "--t1", "5", "--t2", "40", "--samples", "50", "--out"]
            .into_iter()
            .map(String::from)
            .chain([out.to_string()])
            .collect::<Vec<_>>()
    };
    let mut first = args(p1.to_str().unwrap());
    first.extend(["--save-config".to_string(), cfg.to_str().unwrap().to_string()]);
    let o = Command::new(env!("CARGO_BIN_EXE_dp3")).args(&first).output().unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = Command::new(env!("CARGO_BIN_EXE_dp3")).args(args(p2.to_str().unwrap())).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let a = std::fs::read(&p1).unwrap();
    assert_eq!(a, std::fs::read(&p2).unwrap());
    let text = String::from_utf8(a.clone()).unwrap();
    assert!(text.starts_with("tau,re_u,im_u,re_u_as,im_u_as,abs_err\n"));
    assert_eq!(text.lines().count(), 51);
    std::fs::remove_file(&p1).unwrap();
    let o = dp3(&["replay", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(std::fs::read(&p1).unwrap(), a);
}

#[test]
fn compare_alpha_dataset_as_json() {
    let o = dp3(&["compare", "--alpha", "0.2857", "--b", "0.0125", "--samples", "20", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["form"], "ImaginaryA");
    assert_eq!(v["samples"].as_array().unwrap().len(), 20);
    assert!(v["sup_error"].as_f64().unwrap() < 0.1);
}
